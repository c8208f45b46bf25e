//! Orderly generation of connected k-regular graphs.
//!
//! Graphs are built row by row in the form whose upper-triangle adjacency
//! string, read row by row, is lexicographically largest over all
//! labellings. After each completed row `i` the rows `0..=i` are final, and
//! a relabelling whose first `i + 1` preimages lie in `{0, ..., i}` yields
//! fully known rows; if any such relabelling beats the current prefix the
//! branch is cut. The comparison is searched greedily: once the preimages
//! of the first `r` labels are fixed, the best remaining rows are obtained
//! by ordering each cell of unlabelled vertices neighbours first. The test
//! after the last row is the complete canonicity test.
//!
//! In the canonical form of a connected graph every vertex after the first
//! has an earlier neighbour, which prunes disconnected branches.

use super::canon::{bits, full_mask, Masks};

struct Orderly<'a> {
    n: usize,
    k: u32,
    adj: [u32; 32],
    emit: &'a mut dyn FnMut(&Masks),
}

/// Column mask of row `r` restricted to columns after `r`.
fn upper(row: u32, r: usize) -> u32 {
    row & !full_mask(r + 1)
}

/// Lexicographic comparison of two column masks: the one with a set bit at
/// the first differing column is larger.
fn cmp_rows(a: u32, b: u32) -> std::cmp::Ordering {
    let d = a ^ b;
    if d == 0 {
        std::cmp::Ordering::Equal
    } else if a & d & d.wrapping_neg() != 0 {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Less
    }
}

/// Calls `emit` once per isomorphism class of connected `k`-regular graphs
/// on `n` vertices.
pub fn for_each_regular(n: usize, k: usize, emit: &mut dyn FnMut(&Masks)) {
    assert!(n <= 32);
    if n == 0 || k >= n || (n * k) % 2 == 1 {
        return;
    }
    if n == 1 {
        emit(&Masks::empty(1));
        return;
    }
    if k == 0 {
        return;
    }
    let mut o = Orderly {
        n,
        k: k as u32,
        adj: [0; 32],
        emit,
    };
    o.row(0);
}

impl Orderly<'_> {
    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn row(&mut self, i: usize) {
        let n = self.n;
        let need = self.k - self.degree(i);
        let low = full_mask(i);
        let mut runs: Vec<(usize, usize)> = Vec::new();
        let mut j = i + 1;
        while j < n {
            let pattern = self.adj[j] & low;
            let start = j;
            while j < n && self.adj[j] & low == pattern {
                j += 1;
            }
            if self.degree(start) < self.k {
                runs.push((start, j - start));
            }
        }
        let capacity: usize = runs.iter().map(|r| r.1).sum();
        if (need as usize) > capacity {
            return;
        }
        self.choose(i, &runs, 0, need as usize);
    }

    fn choose(&mut self, i: usize, runs: &[(usize, usize)], idx: usize, left: usize) {
        if left == 0 {
            self.row_done(i);
            return;
        }
        if idx == runs.len() {
            return;
        }
        let rest: usize = runs[idx + 1..].iter().map(|r| r.1).sum();
        let (start, len) = runs[idx];
        let top = len.min(left);
        let bottom = left.saturating_sub(rest);
        for t in (bottom..=top).rev() {
            for v in start..start + t {
                self.adj[i] |= 1 << v;
                self.adj[v] |= 1 << i;
            }
            self.choose(i, runs, idx + 1, left - t);
            for v in start..start + t {
                self.adj[i] &= !(1 << v);
                self.adj[v] &= !(1 << i);
            }
        }
    }

    fn feasible(&self, i: usize) -> bool {
        let n = self.n;
        if i + 1 < n && self.adj[i + 1] & full_mask(i + 1) == 0 {
            return false;
        }
        let deficits: Vec<u32> = (i + 1..n).map(|v| self.k - self.degree(v)).collect();
        let open = deficits.iter().filter(|&&d| d > 0).count() as u32;
        let total: u32 = deficits.iter().sum();
        total.is_multiple_of(2) && deficits.iter().all(|&d| d == 0 || d < open)
    }

    fn row_done(&mut self, i: usize) {
        if !self.feasible(i) || !self.prefix_is_maximal(i) {
            return;
        }
        if i + 1 == self.n {
            let mut m = Masks::empty(self.n);
            for v in 0..self.n {
                m.out[v] = self.adj[v];
                m.inn[v] = self.adj[v];
            }
            (self.emit)(&m);
        } else {
            self.row(i + 1);
        }
    }

    /// No relabelling with preimages of labels `0..=i` in `{0, ..., i}`
    /// produces larger rows `0..=i`.
    fn prefix_is_maximal(&self, i: usize) -> bool {
        let inside = full_mask(i + 1);
        let outside = full_mask(self.n) & !inside;
        let ocells = if outside == 0 { vec![] } else { vec![outside] };
        self.test(0, i, vec![inside], ocells)
    }

    fn test(&self, r: usize, i: usize, rcells: Vec<u32>, ocells: Vec<u32>) -> bool {
        let target = upper(self.adj[r], r);
        let first = rcells[0];
        for p in bits(first) {
            let a = self.adj[p];
            let mut nr: Vec<u32> = Vec::with_capacity(rcells.len() + 1);
            let mut no: Vec<u32> = Vec::with_capacity(ocells.len() + 1);
            let mut row = 0u32;
            let mut pos = r + 1;
            let rest = first & !(1 << p);
            let cells = std::iter::once(rest)
                .chain(rcells[1..].iter().copied())
                .filter(|&c| c != 0)
                .map(|c| (c, true))
                .chain(ocells.iter().map(|&c| (c, false)));
            for (c, in_r) in cells {
                let hit = a & c;
                let cnt = hit.count_ones() as usize;
                let size = c.count_ones() as usize;
                row |= full_mask(pos + cnt) & !full_mask(pos);
                pos += size;
                let dest = if in_r { &mut nr } else { &mut no };
                if hit != 0 {
                    dest.push(hit);
                }
                if hit != c {
                    dest.push(c & !hit);
                }
            }
            match cmp_rows(row, target) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => {
                    if r < i && !self.test(r + 1, i, nr, no) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
