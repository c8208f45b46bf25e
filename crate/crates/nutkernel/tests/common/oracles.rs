//! Independent brute-force oracles: textbook Gauss-Jordan elimination and
//! isomorphism by trying every relabelling.

use std::collections::BTreeSet;

use nutkernel::enumerate::{gen_connected_graphs, orientations_with, GenConstraints, OrientOptions};
use nutkernel::linalg::{kernel_basis, rank, BigRational, RatMatrix};
use nutkernel::{Digraph, UndirectedGraph};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reduced row echelon form by textbook Gauss-Jordan over the rationals.
pub fn rref(mut m: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Null space from the free columns of the reduced form, itself reduced.
pub fn naive_kernel(m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let (red, pivots) = rref(m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<BigRational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    rref(basis, cols).0
}

pub fn to_rat_rows(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Compares `kernel_basis` with [`naive_kernel`] on `count` random 0/1
/// matrices of at most 12 rows and columns.
pub fn kernel_oracle_mismatches(count: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..count {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.9);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_bool(density) as i64).collect())
            .collect();
        let m = RatMatrix::from_int_rows(cols, &data);
        let ours = kernel_basis(&m);
        if ours.vectors() != &naive_kernel(to_rat_rows(&m), cols)[..]
            || rank(&m) + ours.dim() != cols
        {
            bad.push(format!("{data:?}"));
        }
    }
    bad
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    let mut out = Vec::new();
    go(0, &mut (0..n).collect(), &mut out);
    out
}

/// Adjacency matrix of `g` relabelled by `p`, packed row by row (n <= 8).
pub fn packed(arcs: &[(usize, usize)], n: usize, p: &[usize]) -> u64 {
    arcs.iter().fold(0u64, |m, &(u, v)| m | 1 << (p[u] * n + p[v]))
}

/// Lex-min packed adjacency over all relabellings: a complete invariant.
pub fn brute_canonical(g: &Digraph, perms: &[Vec<usize>]) -> u64 {
    let arcs = g.arcs();
    perms.iter().map(|p| packed(&arcs, g.order(), p)).min().unwrap()
}

pub fn brute_automorphisms(g: &Digraph, perms: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let arcs = g.arcs();
    let id: Vec<usize> = (0..g.order()).collect();
    let base = packed(&arcs, g.order(), &id);
    perms
        .iter()
        .filter(|p| packed(&arcs, g.order(), p) == base)
        .cloned()
        .collect()
}

/// Every assignment of a state to each edge: forward, backward and, if
/// `digons`, both.
pub fn all_assignments(g: &UndirectedGraph, digons: bool) -> Vec<Digraph> {
    let edges = g.edges();
    let states = if digons { 3usize } else { 2 };
    let total = states.pow(edges.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut arcs = Vec::new();
            for &(u, v) in &edges {
                match code % states {
                    0 => arcs.push((u, v)),
                    1 => arcs.push((v, u)),
                    _ => arcs.extend([(u, v), (v, u)]),
                }
                code /= states;
            }
            Digraph::from_arcs(g.order(), &arcs).unwrap()
        })
        .collect()
}

pub fn min_degrees_two(g: &Digraph) -> bool {
    (0..g.order()).all(|v| {
        let (i, o) = g.degrees(v).unwrap();
        i >= 2 && o >= 2
    })
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Connected graphs on `n` vertices up to isomorphism, by filtering every
/// labelled graph.
pub fn brute_connected_graphs(n: usize, perms: &[Vec<usize>]) -> Vec<UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for code in 0u64..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if !connected(n, &edges) {
            continue;
        }
        let g = UndirectedGraph::from_edges(n, &edges).unwrap();
        if seen.insert(brute_canonical(&Digraph::symmetric(&g), perms)) {
            out.push(g);
        }
    }
    out
}

/// Digraph totals on `n` vertices: (two-stage generation, brute force), for
/// oriented graphs and for all digraphs.
pub struct OracleTotals {
    pub n: usize,
    pub oriented: (usize, usize),
    pub all: (usize, usize),
}

/// Totals of connected digraphs on `n` vertices from the generators and
/// from brute-force deduplication that uses none of them.
pub fn orientation_oracle(n: usize) -> OracleTotals {
    let perms = permutations(n);
    let mut brute = [BTreeSet::new(), BTreeSet::new()];
    for g in brute_connected_graphs(n, &perms) {
        for (k, digons) in [false, true].into_iter().enumerate() {
            for d in all_assignments(&g, digons) {
                brute[k].insert(brute_canonical(&d, &perms));
            }
        }
    }
    let c = GenConstraints {
        oriented_only: false,
        ..GenConstraints::oriented(n)
    };
    let mut ours = [0, 0];
    for g in gen_connected_graphs(&c).unwrap() {
        for (k, digons) in [false, true].into_iter().enumerate() {
            let opts = OrientOptions {
                degree_bounds: false,
                allow_digons: digons,
            };
            ours[k] += orientations_with(&g, opts).unwrap().len();
        }
    }
    OracleTotals {
        n,
        oriented: (ours[0], brute[0].len()),
        all: (ours[1], brute[1].len()),
    }
}
