//! Nut-class and core-vertex classification, vertex-deletion profiles, the
//! ±1 kernel solver for 2-out digraphs, and gadget recognition.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};
use crate::linalg::{
    full_vector_witness, integer_kernel, normalize_integer, BigRational, KernelBasis,
};

/// Classification record of one digraph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NutReport {
    pub order: usize,
    pub nullity: usize,
    /// Dimension of `Ker G ∩ CoKer G`.
    pub intersection_dim: usize,
    pub is_dextro_nut: bool,
    pub is_laevo_nut: bool,
    pub is_bi_nut: bool,
    pub is_ambi_nut: bool,
    pub is_inter_nut: bool,
    pub is_dextro_core: bool,
    pub is_laevo_core: bool,
    pub is_bi_core: bool,
    pub is_ambi_core: bool,
    pub is_inter_core: bool,
    /// Full kernel vector, when one exists (primitive, first entry positive).
    pub ker_witness: Option<Vec<BigInt>>,
    /// Full cokernel vector, when one exists.
    pub coker_witness: Option<Vec<BigInt>>,
    /// Full vector of `Ker G ∩ CoKer G`, when one exists.
    pub inter_witness: Option<Vec<BigInt>>,
}

/// Which of the four deletion cases a vertex falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    /// dextro-core and laevo-core.
    CoreCore,
    /// core on exactly one side.
    Mixed,
    /// both-forbidden, nullity rises on deletion.
    Upper,
    /// both-forbidden, nullity unchanged on deletion.
    Middle,
}

impl Stratum {
    pub fn label(self) -> &'static str {
        match self {
            Stratum::CoreCore => "core-core",
            Stratum::Mixed => "mixed",
            Stratum::Upper => "upper",
            Stratum::Middle => "middle",
        }
    }
}

/// Core status of a vertex, optionally with its deletion behaviour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexProfile {
    pub vertex: VertexId,
    pub dextro_core: bool,
    pub laevo_core: bool,
    pub deletion_nullity: Option<usize>,
    pub stratum: Option<Stratum>,
}

/// A rooted digraph whose root-row-deleted adjacency matrix and its
/// transpose share a one-dimensional kernel spanned by a full vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub digraph: Digraph,
    pub root: VertexId,
    /// Primitive integer vector, positive at the root.
    pub defining_vector: Vec<BigInt>,
    pub demand: BigRational,
}

pub(crate) fn adjacency_rows(g: &Digraph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut rows = vec![vec![0i64; n]; n];
    for (u, v) in g.arcs() {
        rows[u][v] = 1;
    }
    rows
}

fn transpose_rows(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect()
}

/// Canonical basis of `Ker A(G)`.
pub fn kernel(g: &Digraph) -> KernelBasis {
    let basis = kernel_int(&adjacency_rows(g), g.order());
    debug_assert!(basis
        .vectors()
        .iter()
        .all(|x| sums_vanish(g, x, Direction::Out)));
    basis
}

/// Canonical basis of `CoKer A(G) = Ker A(G)^T`.
pub fn cokernel(g: &Digraph) -> KernelBasis {
    let basis = kernel(&g.reverse());
    debug_assert!(basis
        .vectors()
        .iter()
        .all(|x| sums_vanish(g, x, Direction::In)));
    basis
}

fn kernel_int(rows: &[Vec<i64>], cols: usize) -> KernelBasis {
    crate::linalg::kernel_basis_int(rows, cols)
}

#[derive(Clone, Copy)]
enum Direction {
    Out,
    In,
}

fn sums_vanish(g: &Digraph, x: &[BigRational], dir: Direction) -> bool {
    (0..g.order()).all(|v| {
        let nb = match dir {
            Direction::Out => g.out_neighbours(v),
            Direction::In => g.in_neighbours(v),
        };
        nb.iter()
            .fold(BigRational::zero(), |acc, &u| acc + &x[u])
            .is_zero()
    })
}

fn witness(b: &KernelBasis) -> Option<Vec<BigInt>> {
    if b.is_empty() {
        None
    } else {
        full_vector_witness(b)
    }
}

/// Full classification of `g`.
pub fn classify(g: &Digraph) -> NutReport {
    classify_rows(g.order(), adjacency_rows(g))
}

/// Classification from the rows of a 0/1 adjacency matrix.
pub(crate) fn classify_rows(n: usize, a: Vec<Vec<i64>>) -> NutReport {
    let ker_raw = integer_kernel(&a, n);
    let mut report = NutReport {
        order: n,
        nullity: ker_raw.len(),
        ..NutReport::default()
    };
    if ker_raw.is_empty() {
        return report;
    }
    let at = transpose_rows(&a, n);
    let ker = KernelBasis::from_integer_rows(n, ker_raw);
    let coker = KernelBasis::from_integer_rows(n, integer_kernel(&at, n));
    debug_assert_eq!(ker.dim(), coker.dim(), "row rank equals column rank");
    let mut stacked = a;
    stacked.extend(at);
    let inter = KernelBasis::from_integer_rows(n, integer_kernel(&stacked, n));
    report.intersection_dim = inter.dim();

    report.ker_witness = witness(&ker);
    report.coker_witness = witness(&coker);
    report.inter_witness = witness(&inter);
    // the order-1 digraph is excluded from every class
    if n == 1 {
        return report;
    }
    let same = ker == coker;
    report.is_dextro_core = report.ker_witness.is_some();
    report.is_laevo_core = report.coker_witness.is_some();
    report.is_bi_core = report.is_dextro_core && report.is_laevo_core;
    report.is_ambi_core = same && report.is_dextro_core;
    report.is_inter_core = report.inter_witness.is_some();
    report.is_dextro_nut = ker.dim() == 1 && report.is_dextro_core;
    report.is_laevo_nut = coker.dim() == 1 && report.is_laevo_core;
    report.is_bi_nut = report.is_dextro_nut && report.is_laevo_nut;
    report.is_ambi_nut = report.is_bi_nut && same;
    report.is_inter_nut = inter.dim() == 1 && report.is_inter_core;
    report
}

/// Core status of every vertex of a singular digraph.
pub fn core_vertices(g: &Digraph) -> Result<Vec<VertexProfile>> {
    let ker = kernel(g);
    if ker.is_empty() {
        return Err(Error::NotSingular);
    }
    let ks = ker.support();
    let cs = cokernel(g).support();
    Ok((0..g.order())
        .map(|v| VertexProfile {
            vertex: v,
            dextro_core: ks[v],
            laevo_core: cs[v],
            deletion_nullity: None,
            stratum: None,
        })
        .collect())
}

/// Nullity of `g`.
pub fn nullity(g: &Digraph) -> usize {
    g.order() - crate::linalg::rank_int(&adjacency_rows(g), g.order())
}

/// Deletion profile of `v`, checking the four-case deletion theorem.
pub fn classify_deletion(g: &Digraph, v: VertexId) -> Result<VertexProfile> {
    g.degrees(v)?;
    let eta = nullity(g);
    if eta == 0 {
        return Err(Error::NotSingular);
    }
    let ks = kernel(g).support();
    let cs = cokernel(g).support();
    let after = nullity(&g.delete_vertex(v)?);
    deletion_profile(g, v, eta, ks[v], cs[v], after)
}

/// Deletion profiles of all vertices, sharing one kernel computation.
pub fn deletion_profiles(g: &Digraph) -> Result<Vec<VertexProfile>> {
    let eta = nullity(g);
    if eta == 0 {
        return Err(Error::NotSingular);
    }
    let ks = kernel(g).support();
    let cs = cokernel(g).support();
    (0..g.order())
        .map(|v| {
            let after = nullity(&g.delete_vertex(v)?);
            deletion_profile(g, v, eta, ks[v], cs[v], after)
        })
        .collect()
}

fn deletion_profile(
    g: &Digraph,
    v: VertexId,
    eta: usize,
    dextro_core: bool,
    laevo_core: bool,
    after: usize,
) -> Result<VertexProfile> {
    let violation = |msg: &str| {
        Err(Error::TheoremViolation(format!(
            "vertex {v}: {msg} (nullity {eta}, after deletion {after})"
        )))
    };
    let stratum = match (dextro_core, laevo_core) {
        (true, true) => {
            if after + 1 != eta {
                return violation("core on both sides but nullity did not drop by one");
            }
            Stratum::CoreCore
        }
        (true, false) | (false, true) => {
            if after != eta {
                return violation("core on one side but nullity changed");
            }
            Stratum::Mixed
        }
        (false, false) => {
            let s = if after == eta + 1 {
                Stratum::Upper
            } else if after == eta {
                Stratum::Middle
            } else {
                return violation("forbidden on both sides but nullity left {eta, eta+1}");
            };
            if s == Stratum::Middle && g.is_bipartite() {
                return violation("forbidden vertex of a bipartite digraph is not upper");
            }
            s
        }
    };
    Ok(VertexProfile {
        vertex: v,
        dextro_core,
        laevo_core,
        deletion_nullity: Some(after),
        stratum: Some(stratum),
    })
}

/// Sums of `x` over the out- and in-neighbourhood of `v`.
pub fn local_sums(g: &Digraph, x: &[BigRational], v: VertexId) -> Result<(BigRational, BigRational)> {
    if x.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: x.len(),
        });
    }
    g.degrees(v)?;
    let plus = g
        .out_neighbours(v)
        .iter()
        .fold(BigRational::zero(), |acc, &u| acc + &x[u]);
    let minus = g
        .in_neighbours(v)
        .iter()
        .fold(BigRational::zero(), |acc, &u| acc + &x[u]);
    Ok((plus, minus))
}

/// Integer version of [`local_sums`].
pub fn local_sums_int(g: &Digraph, x: &[BigInt], v: VertexId) -> (BigInt, BigInt) {
    let plus = g.out_neighbours(v).iter().map(|&u| &x[u]).sum();
    let minus = g.in_neighbours(v).iter().map(|&u| &x[u]).sum();
    (plus, minus)
}

/// Solves for a ±1 kernel vector of a digraph in which every vertex has
/// out-degree 2: the two out-neighbours of each vertex must carry opposite
/// signs. Vertex 0 is seeded with +1 and labels spread breadth-first.
/// Returns `None` on a contradiction or if some vertex stays unlabelled.
pub fn pm_one_kernel(g: &Digraph) -> Result<Option<Vec<i8>>> {
    let n = g.order();
    for v in 0..n {
        let d = g.out_neighbours(v).len();
        if d != 2 {
            return Err(Error::DegreeViolation { vertex: v, degree: d });
        }
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut sign = vec![0i8; n];
    sign[0] = 1;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &w in g.in_neighbours(u) {
            let nb = g.out_neighbours(w);
            let other = if nb[0] == u { nb[1] } else { nb[0] };
            let want = -sign[u];
            if sign[other] == 0 {
                sign[other] = want;
                queue.push_back(other);
            } else if sign[other] != want {
                return Ok(None);
            }
        }
    }
    if sign.contains(&0) {
        return Ok(None);
    }
    Ok(Some(sign))
}

/// Dual of [`pm_one_kernel`] for the cokernel; requires in-degree 2.
pub fn pm_one_cokernel(g: &Digraph) -> Result<Option<Vec<i8>>> {
    pm_one_kernel(&g.reverse())
}

/// Recognises `(g, r)` as a gadget and computes its demand.
pub fn as_gadget(g: &Digraph, r: VertexId) -> Option<Gadget> {
    let n = g.order();
    if r >= n {
        return None;
    }
    let a = adjacency_rows(g);
    let at = transpose_rows(&a, n);
    let drop_row = |m: &[Vec<i64>]| -> Vec<Vec<i64>> {
        m.iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, row)| row.clone())
            .collect()
    };
    let k1 = integer_kernel(&drop_row(&a), n);
    if k1.len() != 1 {
        return None;
    }
    let k2 = integer_kernel(&drop_row(&at), n);
    if k2.len() != 1 {
        return None;
    }
    let mut x = normalize_integer(k1.into_iter().next().unwrap());
    let y = normalize_integer(k2.into_iter().next().unwrap());
    if x != y || x.iter().any(Zero::is_zero) {
        return None;
    }
    if x[r].is_negative() {
        for e in &mut x {
            *e = -&*e;
        }
    }
    let (plus, minus) = local_sums_int(g, &x, r);
    assert_eq!(plus, minus, "out- and in-sums at a gadget root coincide");
    let demand = -BigRational::new(plus, x[r].clone());
    Some(Gadget {
        digraph: g.clone(),
        root: r,
        defining_vector: x,
        demand,
    })
}
