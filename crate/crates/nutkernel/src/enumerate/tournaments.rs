//! Tournaments up to isomorphism by canonical vertex augmentation.
//!
//! The canonical deletion vertex maximises (out-degree, sum of the
//! out-degrees of its out-neighbours) and, among those, carries the largest
//! canonical label.

use std::collections::HashSet;

use super::canon::{bits, canonize, Masks};

fn invariant(t: &Masks, v: usize) -> (u32, u32) {
    let d = t.out[v].count_ones();
    let s = bits(t.out[v]).map(|u| t.out[u].count_ones()).sum();
    (d, s)
}

/// Calls `emit` once per isomorphism class of tournaments on `n` vertices.
pub fn for_each_tournament(n: usize, emit: &mut dyn FnMut(&Masks)) {
    if n == 0 {
        emit(&Masks::empty(0));
        return;
    }
    extend(&Masks::empty(1), n, emit);
}

fn extend(t: &Masks, target: usize, emit: &mut dyn FnMut(&Masks)) {
    if t.n == target {
        emit(t);
        return;
    }
    let m = t.n;
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for s in 0u32..(1u32 << m) {
        let mut h = *t;
        h.n = m + 1;
        for v in 0..m {
            if s >> v & 1 == 1 {
                h.add_arc(m, v);
            } else {
                h.add_arc(v, m);
            }
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
        if orb[chosen] != orb[m] || !seen.insert(c.form.clone()) {
            continue;
        }
        extend(&h, target, emit);
    }
}
