//! Canonical labelling and automorphism groups of small digraphs by
//! individualisation and equitable refinement.
//!
//! The search tree is the usual one: refine the partition to an equitable
//! one, individualise each vertex of the first non-singleton cell in turn,
//! recurse. Leaves are compared by the sequence of refinement traces on the
//! path and then by the relabelled adjacency; the smallest leaf defines the
//! canonical form. Automorphisms found by comparing leaves with the first
//! and the best leaf prune children in the same orbit of the stabiliser of
//! the current path, and since subtrees equivalent to the first leaf are
//! never pruned by trace, the automorphisms found generate the full group.

use std::collections::{HashSet, VecDeque};

use crate::digraph::{Digraph, UndirectedGraph};
use crate::fastpath::MAX_MASK_ORDER;

/// Adjacency of a digraph on at most 32 vertices as bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Masks {
    pub n: usize,
    pub out: [u32; MAX_MASK_ORDER],
    pub inn: [u32; MAX_MASK_ORDER],
}

impl Masks {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_MASK_ORDER);
        Masks {
            n,
            out: [0; MAX_MASK_ORDER],
            inn: [0; MAX_MASK_ORDER],
        }
    }

    /// From out-neighbourhood masks.
    pub fn from_out(out: &[u32]) -> Self {
        let mut m = Masks::empty(out.len());
        for (u, &row) in out.iter().enumerate() {
            m.out[u] = row;
            for v in bits(row) {
                m.inn[v] |= 1 << u;
            }
        }
        m
    }

    pub fn from_digraph(g: &Digraph) -> Self {
        let mut m = Masks::empty(g.order());
        for (u, v) in g.arcs() {
            m.add_arc(u, v);
        }
        m
    }

    pub fn from_graph(g: &UndirectedGraph) -> Self {
        let mut m = Masks::empty(g.order());
        for (u, v) in g.edges() {
            m.add_edge(u, v);
        }
        m
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
        self.inn[v] |= 1 << u;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.add_arc(u, v);
        self.add_arc(v, u);
    }

    pub fn out_rows(&self) -> &[u32] {
        &self.out[..self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        self.out[..self.n] == self.inn[..self.n]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn to_digraph(&self) -> Digraph {
        let arcs: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| bits(self.out[u]).map(move |v| (u, v)))
            .collect();
        Digraph::from_arcs(self.n, &arcs).expect("masks hold a loopless digraph")
    }

    pub fn to_graph(&self) -> UndirectedGraph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| bits(self.out[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        UndirectedGraph::from_edges(self.n, &edges).expect("masks hold a simple graph")
    }

    /// Image under `perm`, which sends vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[u8]) -> Masks {
        let mut m = Masks::empty(self.n);
        for u in 0..self.n {
            m.out[perm[u] as usize] = map_mask(self.out[u], perm);
            m.inn[perm[u] as usize] = map_mask(self.inn[u], perm);
        }
        m
    }

    /// Connectivity of the underlying graph.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = full_mask(self.n);
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.out[v] | self.inn[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }
}

/// Iterator over the set bits of a mask.
pub fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

pub fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn map_mask(m: u32, perm: &[u8]) -> u32 {
    bits(m).fold(0, |acc, v| acc | 1 << perm[v])
}

/// Result of a canonical labelling search.
#[derive(Clone, Debug)]
pub struct Canon {
    /// Canonical label of each vertex.
    pub labelling: Vec<u8>,
    /// Out-masks of the canonically relabelled digraph.
    pub form: Vec<u32>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<u8>>,
}

impl Canon {
    /// Orbit representative (least vertex) of every vertex.
    pub fn orbits(&self) -> Vec<u8> {
        orbits(&self.generators, self.labelling.len())
    }
}

struct Leaf {
    trace: Vec<u64>,
    form: Vec<u32>,
    perm: Vec<u8>,
}

struct Search<'a> {
    g: &'a Masks,
    directed: bool,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<u8>>,
}

fn mix(h: u64, v: u64) -> u64 {
    (h ^ v).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(29)
}

impl Search<'_> {
    fn key(&self, x: usize, w: u32) -> u32 {
        let o = (self.g.out[x] & w).count_ones();
        if self.directed {
            o << 6 | (self.g.inn[x] & w).count_ones()
        } else {
            o
        }
    }

    /// Refines `cells` to the coarsest equitable partition below it,
    /// starting from the splitters in `queue`, and returns a trace hash.
    fn refine(&self, cells: &mut Vec<u32>, mut queue: VecDeque<u32>) -> u64 {
        let n = self.g.n;
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        let mut scratch: Vec<(u32, u8)> = Vec::with_capacity(n);
        while let Some(w) = queue.pop_front() {
            if cells.len() == n {
                break;
            }
            let mut idx = 0;
            while idx < cells.len() {
                let x = cells[idx];
                if x & (x - 1) == 0 {
                    idx += 1;
                    continue;
                }
                scratch.clear();
                scratch.extend(bits(x).map(|v| (self.key(v, w), v as u8)));
                let k0 = scratch[0].0;
                if scratch.iter().all(|&(k, _)| k == k0) {
                    idx += 1;
                    continue;
                }
                scratch.sort_unstable();
                let mut parts: Vec<u32> = Vec::new();
                let mut prev = u32::MAX;
                for &(k, v) in &scratch {
                    if k != prev {
                        parts.push(0);
                        prev = k;
                        h = mix(h, (idx as u64) << 32 | k as u64);
                    }
                    *parts.last_mut().unwrap() |= 1 << v;
                }
                for &p in &parts {
                    h = mix(h, p.count_ones() as u64);
                    queue.push_back(p);
                }
                let added = parts.len();
                cells.splice(idx..=idx, parts);
                idx += added;
            }
            h = mix(h, cells.len() as u64);
        }
        h
    }

    fn stabiliser_orbits(&self, path: &[u8]) -> Vec<u8> {
        let fixing: Vec<Vec<u8>> = self
            .gens
            .iter()
            .filter(|g| path.iter().all(|&v| g[v as usize] == v))
            .cloned()
            .collect();
        orbits(&fixing, self.g.n)
    }

    fn pruned_by_trace(&self, trace: &[u64]) -> bool {
        let (Some(first), Some(best)) = (&self.first, &self.best) else {
            return false;
        };
        let l = trace.len();
        if first.trace.len() >= l && first.trace[..l] == *trace {
            return false;
        }
        best.trace.as_slice() < trace && !best.trace.starts_with(trace)
    }

    fn leaf(&mut self, cells: &[u32], trace: &[u64]) {
        let n = self.g.n;
        let mut perm = vec![0u8; n];
        for (label, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = label as u8;
        }
        let mut form = vec![0u32; n];
        for v in 0..n {
            form[perm[v] as usize] = map_mask(self.g.out[v], &perm);
        }
        let leaf = Leaf {
            trace: trace.to_vec(),
            form,
            perm,
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                trace: leaf.trace.clone(),
                form: leaf.form.clone(),
                perm: leaf.perm.clone(),
            });
            self.first = Some(leaf);
            return;
        };
        if leaf.form == first.form {
            let g = automorphism(&leaf.perm, &first.perm);
            self.push_generator(g);
            return;
        }
        let best = self.best.as_ref().unwrap();
        if leaf.form == best.form {
            let g = automorphism(&leaf.perm, &best.perm);
            self.push_generator(g);
        } else if (&leaf.trace, &leaf.form) < (&best.trace, &best.form) {
            self.best = Some(leaf);
        }
    }

    fn push_generator(&mut self, g: Vec<u8>) {
        if g.iter().enumerate().any(|(i, &v)| v as usize != i) && !self.gens.contains(&g) {
            self.gens.push(g);
        }
    }

    fn visit(&mut self, cells: Vec<u32>, path: &mut Vec<u8>, trace: &mut Vec<u64>) {
        if self.pruned_by_trace(trace) {
            return;
        }
        if cells.len() == self.g.n {
            self.leaf(&cells, trace);
            return;
        }
        let c = cells
            .iter()
            .position(|&x| x & (x - 1) != 0)
            .expect("a non-discrete partition has a non-singleton cell");
        let mut tried: Vec<u8> = Vec::new();
        for w in bits(cells[c]) {
            if !tried.is_empty() {
                let orb = self.stabiliser_orbits(path);
                if tried.iter().any(|&t| orb[t as usize] == orb[w]) {
                    continue;
                }
            }
            tried.push(w as u8);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..c]);
            child.push(1 << w);
            child.push(cells[c] & !(1 << w));
            child.extend_from_slice(&cells[c + 1..]);
            let h = self.refine(&mut child, VecDeque::from([1u32 << w]));
            trace.push(mix(c as u64, h));
            path.push(w as u8);
            self.visit(child, path, trace);
            path.pop();
            trace.pop();
        }
    }
}

/// Vertex map `v -> u` sending each vertex of leaf `a` to the vertex of
/// leaf `b` with the same label.
fn automorphism(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut inv_b = vec![0u8; b.len()];
    for (v, &l) in b.iter().enumerate() {
        inv_b[l as usize] = v as u8;
    }
    a.iter().map(|&l| inv_b[l as usize]).collect()
}

/// Canonical labelling of `g` together with automorphism-group generators.
pub fn canonize(g: &Masks) -> Canon {
    let n = g.n;
    if n == 0 {
        return Canon {
            labelling: Vec::new(),
            form: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut s = Search {
        g,
        directed: !g.is_symmetric(),
        first: None,
        best: None,
        gens: Vec::new(),
    };
    let mut cells = vec![full_mask(n)];
    let h = s.refine(&mut cells, VecDeque::from([full_mask(n)]));
    let mut trace = vec![h];
    s.visit(cells, &mut Vec::new(), &mut trace);
    let best = s.best.take().expect("the search reaches a leaf");
    Canon {
        labelling: best.perm,
        form: best.form,
        generators: s.gens,
    }
}

/// Orbit representative (least vertex) of every vertex under the group
/// generated by `gens`.
pub fn orbits(gens: &[Vec<u8>], n: usize) -> Vec<u8> {
    let mut parent: Vec<u8> = (0..n as u8).collect();
    fn find(p: &mut [u8], mut x: u8) -> u8 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for g in gens {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v as u8), find(&mut parent, g[v]));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi as usize] = lo;
            }
        }
    }
    (0..n as u8).map(|v| find(&mut parent, v)).collect()
}

/// All elements of the group generated by `gens`, identity first; `None`
/// when the group has more than `cap` elements.
pub fn group_elements(gens: &[Vec<u8>], n: usize, cap: usize) -> Option<Vec<Vec<u8>>> {
    let id: Vec<u8> = (0..n as u8).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let p: Vec<u8> = out[i].iter().map(|&v| g[v as usize]).collect();
            if seen.insert(p.clone()) {
                if out.len() == cap {
                    return None;
                }
                out.push(p);
            }
        }
        i += 1;
    }
    Some(out)
}
