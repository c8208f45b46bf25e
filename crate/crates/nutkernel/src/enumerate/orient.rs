//! Orientations of a graph up to its automorphisms.
//!
//! Edges are ordered by larger endpoint, then smaller endpoint, and an
//! assignment gives each edge a state: forward, backward or (optionally)
//! both arcs. An assignment is kept iff it is the lexicographic minimum of
//! its orbit under the automorphism group. The comparison with every group
//! element is advanced incrementally as edges are assigned, so a prefix
//! that is already beaten by some image is abandoned at once.

use super::canon::Masks;

/// Orientation search options.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrientOptions {
    /// Discard assignments with a vertex of in- or out-degree below 2.
    pub degree_bounds: bool,
    /// Allow an edge to carry both arcs.
    pub allow_digons: bool,
}

const FORWARD: u8 = 0;
const BACKWARD: u8 = 1;
const BOTH: u8 = 2;

struct Image {
    /// Position of the edge mapped onto each position.
    inv: Vec<u16>,
    /// Whether that mapping reverses the edge.
    flip: Vec<bool>,
}

struct Orienter<'a> {
    edges: Vec<(u8, u8)>,
    images: Vec<Image>,
    opts: OrientOptions,
    state: Vec<u8>,
    out: [u32; 32],
    indeg: [u8; 32],
    outdeg: [u8; 32],
    rem: [u8; 32],
    n: usize,
    levels: Vec<Vec<(u32, u16)>>,
    halted: bool,
    emit: &'a mut dyn FnMut(&[u32]) -> bool,
}

/// Edges of `g` in enumeration order.
pub fn edge_order(g: &Masks) -> Vec<(u8, u8)> {
    let mut edges: Vec<(u8, u8)> = (0..g.n)
        .flat_map(|v| {
            super::canon::bits(g.out[v] & ((1u32 << v) - 1)).map(move |u| (u as u8, v as u8))
        })
        .collect();
    edges.sort_by_key(|&(u, v)| (v, u));
    edges
}

/// Calls `emit` with the out-masks of one representative per orbit of
/// `group` on the assignments, until `emit` returns `false`. `group` must
/// be the full automorphism group of the symmetric `g`; the identity may be
/// included.
pub fn for_each_orientation(
    g: &Masks,
    group: &[Vec<u8>],
    opts: OrientOptions,
    emit: &mut dyn FnMut(&[u32]) -> bool,
) {
    let n = g.n;
    let edges = edge_order(g);
    let m = edges.len();
    let mut index = vec![[u16::MAX; 32]; 32];
    for (i, &(u, v)) in edges.iter().enumerate() {
        index[u as usize][v as usize] = i as u16;
        index[v as usize][u as usize] = i as u16;
    }
    let mut images = Vec::new();
    for sigma in group {
        if sigma.iter().enumerate().all(|(i, &v)| v as usize == i) {
            continue;
        }
        let mut inv_sigma = vec![0u8; n];
        for (v, &s) in sigma.iter().enumerate() {
            inv_sigma[s as usize] = v as u8;
        }
        let mut inv = Vec::with_capacity(m);
        let mut flip = Vec::with_capacity(m);
        for &(a, b) in &edges {
            let (x, y) = (inv_sigma[a as usize], inv_sigma[b as usize]);
            let (lo, hi) = (x.min(y), x.max(y));
            inv.push(index[lo as usize][hi as usize]);
            flip.push(sigma[lo as usize] != a);
        }
        images.push(Image { inv, flip });
    }
    let mut rem = [0u8; 32];
    for &(u, v) in &edges {
        rem[u as usize] += 1;
        rem[v as usize] += 1;
    }
    if opts.degree_bounds && (0..n).any(|v| (!opts.allow_digons && rem[v] < 4) || rem[v] < 2) {
        return;
    }
    let all: Vec<(u32, u16)> = (0..images.len() as u32).map(|s| (s, 0)).collect();
    let mut levels = vec![Vec::new(); m + 1];
    levels[0] = all;
    let mut o = Orienter {
        edges,
        images,
        opts,
        state: vec![0; m],
        out: [0; 32],
        indeg: [0; 32],
        outdeg: [0; 32],
        rem,
        n,
        levels,
        halted: false,
        emit,
    };
    o.assign(0);
}

fn image_state(s: u8, flip: bool) -> u8 {
    if flip && s != BOTH {
        1 - s
    } else {
        s
    }
}

impl Orienter<'_> {
    fn set(&mut self, d: usize, s: u8, on: bool) {
        let (u, v) = (self.edges[d].0 as usize, self.edges[d].1 as usize);
        let arcs: &[(usize, usize)] = match s {
            FORWARD => &[(u, v)][..],
            BACKWARD => &[(v, u)][..],
            _ => &[(u, v), (v, u)][..],
        };
        for &(a, b) in arcs {
            if on {
                self.out[a] |= 1 << b;
                self.outdeg[a] += 1;
                self.indeg[b] += 1;
            } else {
                self.out[a] &= !(1 << b);
                self.outdeg[a] -= 1;
                self.indeg[b] -= 1;
            }
        }
        if on {
            self.rem[u] -= 1;
            self.rem[v] -= 1;
        } else {
            self.rem[u] += 1;
            self.rem[v] += 1;
        }
    }

    fn degrees_ok(&self, d: usize) -> bool {
        let (u, v) = (self.edges[d].0 as usize, self.edges[d].1 as usize);
        [u, v].iter().all(|&x| {
            self.outdeg[x] + self.rem[x] >= 2 && self.indeg[x] + self.rem[x] >= 2
        })
    }

    /// Advances every pending comparison; `false` if some image of the
    /// current prefix is smaller.
    fn symmetry_ok(&mut self, d: usize) -> bool {
        let mut next = std::mem::take(&mut self.levels[d + 1]);
        next.clear();
        let mut ok = true;
        'outer: for &(s, p0) in &self.levels[d] {
            let img = &self.images[s as usize];
            let mut p = p0 as usize;
            while p <= d && (img.inv[p] as usize) <= d {
                let x = self.state[p];
                let y = image_state(self.state[img.inv[p] as usize], img.flip[p]);
                if x < y {
                    continue 'outer;
                }
                if x > y {
                    ok = false;
                    break 'outer;
                }
                p += 1;
            }
            next.push((s, p as u16));
        }
        self.levels[d + 1] = next;
        ok
    }

    fn assign(&mut self, d: usize) {
        if self.halted {
            return;
        }
        if d == self.edges.len() {
            self.halted = !(self.emit)(&self.out[..self.n]);
            return;
        }
        let states: &[u8] = if self.opts.allow_digons {
            &[FORWARD, BACKWARD, BOTH]
        } else {
            &[FORWARD, BACKWARD]
        };
        for &s in states {
            self.set(d, s, true);
            self.state[d] = s;
            if (!self.opts.degree_bounds || self.degrees_ok(d)) && self.symmetry_ok(d) {
                self.assign(d + 1);
            }
            self.set(d, s, false);
        }
    }
}
