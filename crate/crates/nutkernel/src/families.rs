//! Parameterised digraph families: the antiprism orientations `M_k(n)`,
//! the Rose-Window orientations `D_k(n)`, products of directed cycles and
//! undirected circulants.

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

/// Named family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    M(u8, usize),
    D(u8, usize),
    DicycleProduct(usize, usize),
    Circulant(usize, Vec<usize>),
}

fn check_kind(k: u8) -> Result<()> {
    if (1..=3).contains(&k) {
        Ok(())
    } else {
        Err(Error::BadConnectionSet(format!("family index {k} not in 1..=3")))
    }
}

/// `M_k(n)` for even `n >= 4`; the underlying graph is `Circ(n, {1, 2})`.
pub fn m_family(k: u8, n: usize) -> Result<Digraph> {
    check_kind(k)?;
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n < 4 {
        return Err(Error::TooSmall { value: n, min: 4 });
    }
    let mut arcs = Vec::with_capacity(2 * n);
    for i in 0..n {
        let (i1, i2) = ((i + 1) % n, (i + 2) % n);
        arcs.push((i, i1));
        match k {
            1 => arcs.push((i, i2)),
            2 if i % 2 == 0 => arcs.push((i, i2)),
            2 => arcs.push((i2, i)),
            _ => arcs.push((i2, i)),
        }
    }
    Digraph::from_arcs(n, &arcs)
}

/// `D_k(n)` for `n >= 5` on `2n` vertices: rim `v_i = i`, hub `u_i = n + i`.
pub fn d_family(k: u8, n: usize) -> Result<Digraph> {
    check_kind(k)?;
    if n < 5 {
        return Err(Error::TooSmall { value: n, min: 5 });
    }
    let v = |i: usize| i % n;
    let u = |i: usize| n + i % n;
    let mut arcs = Vec::with_capacity(4 * n);
    for i in 0..n {
        arcs.push((v(i), v(i + 1)));
        match k {
            1 => arcs.extend([(u(i), u(i + 2)), (v(i), u(i)), (u(i), v(i + 1))]),
            2 => arcs.extend([(u(i), u(i + 2)), (u(i), v(i)), (v(i + 1), u(i))]),
            _ => arcs.extend([(u(i + 2), u(i)), (v(i), u(i)), (u(i), v(i + 1))]),
        }
    }
    Digraph::from_arcs(2 * n, &arcs)
}

/// Cartesian product of directed cycles of lengths `n` and `m`.
pub fn dicycle_product(n: usize, m: usize) -> Result<Digraph> {
    for x in [n, m] {
        if x < 3 {
            return Err(Error::TooSmall { value: x, min: 3 });
        }
    }
    Ok(Digraph::cartesian_product(
        &Digraph::directed_cycle(n),
        &Digraph::directed_cycle(m),
    ))
}

/// Undirected circulant `Circ(n, S)` with `S ⊆ {1, ..., n/2}`.
pub fn circulant(n: usize, s: &[usize]) -> Result<UndirectedGraph> {
    let mut edges = Vec::new();
    let mut seen = Vec::new();
    for &d in s {
        if d == 0 || d > n / 2 {
            return Err(Error::BadConnectionSet(format!(
                "jump {d} outside 1..={}",
                n / 2
            )));
        }
        if seen.contains(&d) {
            return Err(Error::BadConnectionSet(format!("jump {d} repeated")));
        }
        seen.push(d);
        for i in 0..n {
            let j = (i + d) % n;
            // the jump n/2 produces each edge twice
            if 2 * d == n && i >= d {
                continue;
            }
            edges.push((i.min(j), i.max(j)));
        }
    }
    UndirectedGraph::from_edges(n, &edges)
}

/// Builds the digraph named by a [`FamilySpec`]. Circulants are returned as
/// symmetric digraphs.
pub fn build(spec: &FamilySpec) -> Result<Digraph> {
    match spec {
        FamilySpec::M(k, n) => m_family(*k, *n),
        FamilySpec::D(k, n) => d_family(*k, *n),
        FamilySpec::DicycleProduct(n, m) => dicycle_product(*n, *m),
        FamilySpec::Circulant(n, s) => Ok(Digraph::symmetric(&circulant(*n, s)?)),
    }
}

/// Predicted nullity of `M_k(n)` for even `n >= 6`.
pub fn m_family_nullity(k: u8, n: usize) -> usize {
    if k == 3 && n.is_multiple_of(6) {
        3
    } else {
        1
    }
}

/// Predicted nullity of `D_k(n)` for `n >= 5`.
pub fn d_family_nullity(k: u8, n: usize) -> usize {
    if n % 2 == 1 {
        1
    } else if k == 2 && n.is_multiple_of(4) {
        4
    } else {
        2
    }
}

/// Predicted ambi-nut status of the product of directed cycles.
pub fn dicycle_product_is_ambi(n: usize, m: usize) -> bool {
    (n * m).is_multiple_of(2) && num_integer::gcd(n, m) == 1
}
