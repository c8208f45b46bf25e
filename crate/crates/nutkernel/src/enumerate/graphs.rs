//! Isomorph-free generation of graphs by canonical vertex augmentation.
//!
//! A graph on `m + 1` vertices is accepted from its parent on `m` vertices
//! iff the added vertex lies in the automorphism orbit of the canonical
//! deletion vertex: among the vertices maximising (degree, sum of
//! neighbour degrees), the one with the largest canonical label. Children
//! of one parent that are isomorphic to each other are removed through
//! their canonical forms.

use std::collections::HashSet;

use super::canon::{bits, canonize, Masks};

/// Degree restrictions respected by the generator. All are hereditary
/// under vertex deletion once relaxed by the number of missing vertices.
#[derive(Clone, Copy, Debug, Default)]
pub struct GraphBounds {
    pub min_degree: usize,
    pub max_degree: Option<usize>,
}

fn degree(g: &Masks, v: usize) -> u32 {
    g.out[v].count_ones()
}

fn invariant(g: &Masks, v: usize) -> (u32, u32) {
    let d = degree(g, v);
    let s = bits(g.out[v]).map(|u| degree(g, u)).sum();
    (d, s)
}

/// Calls `emit` once per isomorphism class of graphs on `n` vertices that
/// satisfy `bounds`; connectivity is not required.
pub fn for_each_graph(n: usize, bounds: GraphBounds, emit: &mut dyn FnMut(&Masks)) {
    if n == 0 {
        emit(&Masks::empty(0));
        return;
    }
    extend(&Masks::empty(1), n, bounds, emit);
}

fn admissible(g: &Masks, target: usize, bounds: GraphBounds) -> bool {
    let missing = target - g.n;
    let low = bounds.min_degree.saturating_sub(missing) as u32;
    (0..g.n).all(|v| degree(g, v) >= low)
}

fn extend(g: &Masks, target: usize, bounds: GraphBounds, emit: &mut dyn FnMut(&Masks)) {
    if g.n == target {
        if admissible(g, target, bounds) {
            emit(g);
        }
        return;
    }
    if !admissible(g, target, bounds) {
        return;
    }
    let m = g.n;
    let maxd = bounds.max_degree.map(|d| d as u32).unwrap_or(u32::MAX);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for s in 0u32..(1u32 << m) {
        let new_deg = s.count_ones();
        if new_deg > maxd {
            continue;
        }
        if bits(s).any(|v| degree(g, v) + 1 > maxd) {
            continue;
        }
        let mut h = *g;
        h.n = m + 1;
        for v in bits(s) {
            h.add_edge(v, m);
        }
        if !admissible(&h, target, bounds) {
            continue;
        }
        let own = invariant(&h, m);
        if (0..m).any(|v| invariant(&h, v) > own) {
            continue;
        }
        let c = canonize(&h);
        let orb = c.orbits();
        let chosen = (0..=m)
            .filter(|&v| invariant(&h, v) == own)
            .max_by_key(|&v| c.labelling[v])
            .expect("the new vertex attains the maximum");
        if orb[chosen] != orb[m] {
            continue;
        }
        if !seen.insert(c.form.clone()) {
            continue;
        }
        extend(&h, target, bounds, emit);
    }
}
