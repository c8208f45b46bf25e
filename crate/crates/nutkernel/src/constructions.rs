//! Nut-preserving constructions: arc subdivision, coalescence, crossover,
//! gadgets and the multiplier, with undirected counterparts.
//!
//! Each construction checks its proven outcome on the result and reports a
//! [`Error::TheoremViolation`] if the check fails.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::digraph::{Digraph, UndirectedGraph, VertexId};
use crate::error::{Error, Result};
use crate::linalg::{
    adjacency_matrix, eigenspace_basis, kernel_basis, normalize_integer, BigRational, RatMatrix,
};
use crate::spectral::{as_gadget, classify, local_sums_int, Gadget, NutReport};

fn check_vertex(g: &Digraph, v: VertexId) -> Result<()> {
    if v >= g.order() {
        Err(Error::IndexOutOfRange {
            index: v,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

fn require_arc(g: &Digraph, u: VertexId, v: VertexId) -> Result<()> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if g.has_arc(u, v) {
        Ok(())
    } else {
        Err(Error::NoSuchArc(u, v))
    }
}

fn violation(what: &str) -> Error {
    Error::TheoremViolation(what.to_string())
}

fn in_kernel(g: &Digraph, x: &[BigInt]) -> bool {
    (0..g.order()).all(|v| local_sums_int(g, x, v).0.is_zero())
}

fn in_cokernel(g: &Digraph, x: &[BigInt]) -> bool {
    (0..g.order()).all(|v| local_sums_int(g, x, v).1.is_zero())
}

/// Arc subdivision: the arc `u -> v` is replaced by the vertices
/// `u', u'', v', v''` (indices `n..n + 4` in that order) and the arcs
/// `u -> v''`, `u' -> v''`, `u' -> v'`, `u'' -> v'`, `u'' -> v`.
pub fn subdivide_arc_raw(g: &Digraph, u: VertexId, v: VertexId) -> Result<Digraph> {
    require_arc(g, u, v)?;
    let n = g.order();
    let (u1, u2, v1, v2) = (n, n + 1, n + 2, n + 3);
    let mut arcs: Vec<(VertexId, VertexId)> =
        g.arcs().into_iter().filter(|&a| a != (u, v)).collect();
    arcs.extend([(u, v2), (u1, v2), (u1, v1), (u2, v1), (u2, v)]);
    Digraph::from_arcs(n + 4, &arcs)
}

/// Arc subdivision of an inter-nut digraph. The result is an inter-nut
/// that is not an ambi-nut.
pub fn subdivide_arc(g: &Digraph, u: VertexId, v: VertexId) -> Result<Digraph> {
    let out = subdivide_arc_raw(g, u, v)?;
    let before = classify(g);
    if !before.is_inter_nut {
        return Ok(out);
    }
    let n = g.order();
    let x = before.inter_witness.expect("inter-nuts carry a witness");
    let mut ext = x.clone();
    ext.extend([-&x[u], x[u].clone(), -&x[v], x[v].clone()]);
    if !in_kernel(&out, &ext) || !in_cokernel(&out, &ext) {
        return Err(violation("extended vector leaves the intersection"));
    }
    let mut y = vec![BigInt::zero(); n + 4];
    y[n] = BigInt::one();
    y[n + 1] = BigInt::one();
    let mut z = vec![BigInt::zero(); n + 4];
    z[n + 2] = BigInt::one();
    z[n + 3] = BigInt::one();
    if !in_kernel(&out, &y) || in_cokernel(&out, &y) || !in_cokernel(&out, &z) || in_kernel(&out, &z)
    {
        return Err(violation("subdivision witnesses misplaced"));
    }
    let after = classify(&out);
    if !after.is_inter_nut || after.is_ambi_nut {
        return Err(violation("subdivision of an inter-nut is not a strict inter-nut"));
    }
    Ok(out)
}

/// Identifies vertex `v` of `g` with vertex `u` of `h`. The merged vertex
/// keeps index `v`; the other vertices of `h` follow those of `g` in order.
pub fn coalesce_raw(g: &Digraph, v: VertexId, h: &Digraph, u: VertexId) -> Result<Digraph> {
    check_vertex(g, v)?;
    check_vertex(h, u)?;
    let n = g.order();
    let map = |w: VertexId| -> VertexId {
        match w.cmp(&u) {
            std::cmp::Ordering::Equal => v,
            std::cmp::Ordering::Less => n + w,
            std::cmp::Ordering::Greater => n + w - 1,
        }
    };
    let mut arcs = g.arcs();
    arcs.extend(h.arcs().into_iter().map(|(a, b)| (map(a), map(b))));
    Digraph::from_arc_set(n + h.order() - 1, &arcs)
}

/// Coalescence. Two bi-nuts give a bi-nut and two ambi-nuts an ambi-nut.
pub fn coalesce(g: &Digraph, v: VertexId, h: &Digraph, u: VertexId) -> Result<Digraph> {
    let out = coalesce_raw(g, v, h, u)?;
    let (rg, rh) = (classify(g), classify(h));
    if rg.is_bi_nut && rh.is_bi_nut {
        let r = classify(&out);
        if !r.is_bi_nut {
            return Err(violation("coalescence of bi-nuts is not a bi-nut"));
        }
        if rg.is_ambi_nut && rh.is_ambi_nut && !r.is_ambi_nut {
            return Err(violation("coalescence of ambi-nuts is not an ambi-nut"));
        }
    }
    Ok(out)
}

/// Crossover: the disjoint union of `g` and `h` (offset by the order of
/// `g`) with `u -> v` and `s -> t` replaced by `u -> t` and `s -> v`.
pub fn crossover(
    g: &Digraph,
    (u, v): (VertexId, VertexId),
    h: &Digraph,
    (s, t): (VertexId, VertexId),
) -> Result<Digraph> {
    require_arc(g, u, v)?;
    require_arc(h, s, t)?;
    let n = g.order();
    let mut arcs: Vec<(VertexId, VertexId)> =
        g.arcs().into_iter().filter(|&a| a != (u, v)).collect();
    arcs.extend(
        h.arcs()
            .into_iter()
            .filter(|&a| a != (s, t))
            .map(|(a, b)| (a + n, b + n)),
    );
    arcs.extend([(u, t + n), (s + n, v)]);
    Digraph::from_arcs(n + h.order(), &arcs)
}

/// Kernel vector of the crossover: `x` on `g` followed by `mu * y` on `h`,
/// scaled to integers. `None` when `x(u) y(t) != x(v) y(s)`.
fn joined(
    x: &[BigInt],
    (u, v): (VertexId, VertexId),
    y: &[BigInt],
    (s, t): (VertexId, VertexId),
) -> Option<Vec<BigInt>> {
    if &x[u] * &y[t] != &x[v] * &y[s] {
        return None;
    }
    // mu = x(u) / y(s); scale everything by y(s) to stay integral.
    let mut out: Vec<BigInt> = x.iter().map(|a| a * &y[s]).collect();
    out.extend(y.iter().map(|b| b * &x[u]));
    Some(normalize_integer(out))
}

/// Crossover of two ambi-nuts whose kernel vectors can be rescaled to agree
/// on the exchanged arcs. The result is an ambi-nut.
pub fn ambi_crossover(
    g: &Digraph,
    e: (VertexId, VertexId),
    h: &Digraph,
    f: (VertexId, VertexId),
) -> Result<Digraph> {
    let out = crossover(g, e, h, f)?;
    let (rg, rh) = (classify(g), classify(h));
    if !rg.is_ambi_nut || !rh.is_ambi_nut {
        return Err(Error::NotAmbiNut);
    }
    let x = rg.ker_witness.expect("ambi-nuts carry a witness");
    let y = rh.ker_witness.expect("ambi-nuts carry a witness");
    let w = joined(&x, e, &y, f).ok_or(Error::CompatibilityError)?;
    if !in_kernel(&out, &w) || !in_cokernel(&out, &w) {
        return Err(violation("joined vector is not a kernel vector"));
    }
    let r = classify(&out);
    if !r.is_ambi_nut {
        return Err(violation("crossover of ambi-nuts is not an ambi-nut"));
    }
    Ok(out)
}

/// Crossover of two bi-nuts whose kernel vectors and cokernel vectors are
/// separately compatible. Experimental: the result is only checked, not
/// guaranteed, to be a bi-nut.
pub fn bi_crossover_experimental(
    g: &Digraph,
    e: (VertexId, VertexId),
    h: &Digraph,
    f: (VertexId, VertexId),
) -> Result<(Digraph, NutReport)> {
    let out = crossover(g, e, h, f)?;
    let (rg, rh) = (classify(g), classify(h));
    if !rg.is_bi_nut || !rh.is_bi_nut {
        return Err(Error::NotBiNut);
    }
    let kx = rg.ker_witness.expect("bi-nuts carry a kernel witness");
    let ky = rh.ker_witness.expect("bi-nuts carry a kernel witness");
    let cx = rg.coker_witness.expect("bi-nuts carry a cokernel witness");
    let cy = rh.coker_witness.expect("bi-nuts carry a cokernel witness");
    let ker = joined(&kx, e, &ky, f).ok_or(Error::CompatibilityError)?;
    let coker = joined(&cx, e, &cy, f).ok_or(Error::CompatibilityError)?;
    if !in_kernel(&out, &ker) || !in_cokernel(&out, &coker) {
        return Err(violation("joined vectors are not kernel vectors"));
    }
    let r = classify(&out);
    Ok((out, r))
}

/// The gadget obtained from an ambi-nut `h` by subdividing `u1 -> u2` with
/// a new root `u0` (index `|V(h)|`). Its demand is `-1`.
pub fn gadget_from_ambi(h: &Digraph, u1: VertexId, u2: VertexId) -> Result<Gadget> {
    require_arc(h, u1, u2)?;
    let r = classify(h);
    if !r.is_ambi_nut {
        return Err(Error::NotAmbiNut);
    }
    let x = r.ker_witness.expect("ambi-nuts carry a witness");
    if x[u1] != x[u2] {
        return Err(Error::UnequalKernelEntries(u1, u2));
    }
    let n = h.order();
    let mut arcs: Vec<(VertexId, VertexId)> =
        h.arcs().into_iter().filter(|&a| a != (u1, u2)).collect();
    arcs.extend([(u1, n), (n, u2)]);
    let g = Digraph::from_arcs(n + 1, &arcs)?;
    let gadget = as_gadget(&g, n).ok_or_else(|| violation("subdivided ambi-nut is not a gadget"))?;
    if gadget.demand != -BigRational::one() {
        return Err(violation("gadget from an ambi-nut has demand other than -1"));
    }
    Ok(gadget)
}

/// Scales `x` so that entry `at` becomes `target`, returning integers and
/// the common factor applied to the previously accumulated vector.
fn rescale_to(x: &[BigInt], at: usize, target: &BigInt) -> (Vec<BigInt>, BigInt) {
    // x * target / x[at]; multiply the other side by x[at] / g.
    let g = x[at].gcd(target);
    let num = target / &g;
    let den = &x[at] / &g;
    (x.iter().map(|a| a * &num).collect(), den)
}

/// Coalesces gadgets at their roots. The root keeps the index of the first
/// gadget's root and the demand is the sum of the demands.
pub fn coalesce_gadgets(gadgets: &[Gadget]) -> Result<Gadget> {
    let first = gadgets.first().ok_or(Error::ArityMismatch {
        expected: 1,
        found: 0,
    })?;
    let mut g = first.digraph.clone();
    let root = first.root;
    let mut x = first.defining_vector.clone();
    let mut demand = first.demand.clone();
    for next in &gadgets[1..] {
        g = coalesce_raw(&g, root, &next.digraph, next.root)?;
        let (y, den) = rescale_to(&next.defining_vector, next.root, &x[root]);
        for a in &mut x {
            *a *= &den;
        }
        x.extend(
            y.iter()
                .enumerate()
                .filter(|&(i, _)| i != next.root)
                .map(|(_, a)| a.clone()),
        );
        demand += &next.demand;
    }
    let out = as_gadget(&g, root).ok_or_else(|| violation("coalesced gadgets are not a gadget"))?;
    if out.demand != demand {
        return Err(violation("gadget demands are not additive"));
    }
    if normalize_integer(x) != normalize_integer(out.defining_vector.clone()) {
        return Err(violation("coalesced defining vector differs from the glued one"));
    }
    Ok(out)
}

/// A digraph with a simple integer eigenvalue whose left and right
/// eigenvectors coincide and are full.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseDigraph {
    pub digraph: Digraph,
    pub lambda: i64,
    /// Primitive integer eigenvector, first entry positive.
    pub eigenvector: Vec<BigInt>,
}

fn common_full_eigenvector(a: &RatMatrix, lambda: i64) -> Option<Vec<BigInt>> {
    let right = eigenspace_basis(a, lambda).ok()?;
    let left = eigenspace_basis(&a.transpose(), lambda).ok()?;
    if right.dim() != 1 || left.dim() != 1 {
        return None;
    }
    let x = right.integer_vectors().pop()?;
    let y = left.integer_vectors().pop()?;
    let (x, y) = (normalize_integer(x), normalize_integer(y));
    if x != y || x.iter().any(Zero::is_zero) {
        return None;
    }
    Some(x)
}

/// Checks that `lambda` is a simple eigenvalue of `g` with a common full
/// left and right eigenvector.
pub fn validate_base(g: &Digraph, lambda: i64) -> Option<BaseDigraph> {
    let x = common_full_eigenvector(&adjacency_matrix(g), lambda)?;
    Some(BaseDigraph {
        digraph: g.clone(),
        lambda,
        eigenvector: x,
    })
}

fn check_demands<'a>(
    n: usize,
    lambda: i64,
    demands: impl ExactSizeIterator<Item = &'a BigRational>,
) -> Result<()> {
    if demands.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: demands.len(),
        });
    }
    let l = BigRational::from_integer(lambda.into());
    for d in demands {
        if *d != l {
            return Err(Error::DemandMismatch {
                expected: l.to_string(),
                found: d.to_string(),
            });
        }
    }
    Ok(())
}

/// A rooted part: arcs, order, root and vector.
type Part<'a> = (Vec<(VertexId, VertexId)>, usize, VertexId, &'a [BigInt]);

/// Glues copies of rooted graphs onto the vertices of a base. Returns the
/// order, the arcs and the glued vector.
fn glue(
    base_order: usize,
    base_arcs: Vec<(VertexId, VertexId)>,
    eigenvector: &[BigInt],
    parts: &[Part<'_>],
) -> (usize, Vec<(VertexId, VertexId)>, Vec<BigInt>) {
    let mut arcs = base_arcs;
    let mut x: Vec<BigInt> = eigenvector.to_vec();
    let mut offset = base_order;
    for (i, (part_arcs, order, root, vector)) in parts.iter().enumerate() {
        let (root, order) = (*root, *order);
        let map = |w: VertexId| -> VertexId {
            match w.cmp(&root) {
                std::cmp::Ordering::Equal => i,
                std::cmp::Ordering::Less => offset + w,
                std::cmp::Ordering::Greater => offset + w - 1,
            }
        };
        arcs.extend(part_arcs.iter().map(|&(a, b)| (map(a), map(b))));
        let (y, den) = rescale_to(vector, root, &x[i]);
        for a in &mut x {
            *a *= &den;
        }
        x.extend(
            y.iter()
                .enumerate()
                .filter(|&(w, _)| w != root)
                .map(|(_, a)| a.clone()),
        );
        offset += order - 1;
    }
    (offset, arcs, normalize_integer(x))
}

/// The multiplier: gadget `i` is attached at base vertex `i` by its root.
/// Every demand must equal the base eigenvalue; the result is an ambi-nut
/// of order `|V(base)| + sum(|V(gadget)| - 1)`.
pub fn multiplier(base: &BaseDigraph, gadgets: &[Gadget]) -> Result<Digraph> {
    let n = base.digraph.order();
    check_demands(n, base.lambda, gadgets.iter().map(|g| &g.demand))?;
    let parts: Vec<_> = gadgets
        .iter()
        .map(|g| {
            (
                g.digraph.arcs(),
                g.digraph.order(),
                g.root,
                g.defining_vector.as_slice(),
            )
        })
        .collect();
    let (order, arcs, x) = glue(n, base.digraph.arcs(), &base.eigenvector, &parts);
    let out = Digraph::from_arcs(order, &arcs)?;
    if !in_kernel(&out, &x) || !in_cokernel(&out, &x) {
        return Err(violation("glued vector is not a kernel vector"));
    }
    let r = classify(&out);
    if !r.is_ambi_nut {
        return Err(violation("multiplier output is not an ambi-nut"));
    }
    Ok(out)
}

/// A rooted graph whose adjacency matrix with the root row deleted has a
/// one-dimensional kernel spanned by a full vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGadget {
    pub graph: UndirectedGraph,
    pub root: VertexId,
    /// Primitive integer vector, positive at the root.
    pub defining_vector: Vec<BigInt>,
    pub demand: BigRational,
}

/// Recognises `(g, r)` as an undirected gadget and computes its demand.
pub fn undirected_gadget(g: &UndirectedGraph, r: VertexId) -> Option<UndirectedGadget> {
    if r >= g.order() {
        return None;
    }
    let a = adjacency_matrix(&Digraph::symmetric(g)).without_row(r);
    let k = kernel_basis(&a);
    if k.dim() != 1 {
        return None;
    }
    let mut x = normalize_integer(k.integer_vectors().pop()?);
    if x.iter().any(Zero::is_zero) {
        return None;
    }
    if x[r].is_negative() {
        for e in &mut x {
            *e = -&*e;
        }
    }
    let s: BigInt = g.neighbours(r).iter().map(|&u| &x[u]).sum();
    let demand = -BigRational::new(s, x[r].clone());
    Some(UndirectedGadget {
        graph: g.clone(),
        root: r,
        defining_vector: x,
        demand,
    })
}

/// Undirected counterpart of [`BaseDigraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedBase {
    pub graph: UndirectedGraph,
    pub lambda: i64,
    pub eigenvector: Vec<BigInt>,
}

/// Checks that `lambda` is a simple eigenvalue of `g` with a full
/// eigenvector.
pub fn validate_undirected_base(g: &UndirectedGraph, lambda: i64) -> Option<UndirectedBase> {
    let x = common_full_eigenvector(&adjacency_matrix(&Digraph::symmetric(g)), lambda)?;
    Some(UndirectedBase {
        graph: g.clone(),
        lambda,
        eigenvector: x,
    })
}

/// Undirected multiplier; the result is a nut graph.
pub fn undirected_multiplier(
    base: &UndirectedBase,
    gadgets: &[UndirectedGadget],
) -> Result<UndirectedGraph> {
    let n = base.graph.order();
    check_demands(n, base.lambda, gadgets.iter().map(|g| &g.demand))?;
    let parts: Vec<_> = gadgets
        .iter()
        .map(|g| {
            (
                g.graph.edges(),
                g.graph.order(),
                g.root,
                g.defining_vector.as_slice(),
            )
        })
        .collect();
    let (order, edges, x) = glue(n, base.graph.edges(), &base.eigenvector, &parts);
    let out = UndirectedGraph::from_edges(order, &edges)?;
    let sym = Digraph::symmetric(&out);
    if !in_kernel(&sym, &x) {
        return Err(violation("glued vector is not a kernel vector"));
    }
    if !classify(&sym).is_dextro_nut {
        return Err(violation("undirected multiplier output is not a nut graph"));
    }
    Ok(out)
}
