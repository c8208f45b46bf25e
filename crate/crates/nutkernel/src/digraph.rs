//! Directed and undirected graph models with the combinatorial queries used
//! throughout the crate.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Dense zero-based vertex index.
pub type VertexId = usize;

/// A finite loop-free digraph with sorted out- and in-adjacency lists.
///
/// Opposite arc pairs `u -> v`, `v -> u` are allowed; multi-arcs are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl Digraph {
    /// Digraph on `n` vertices without arcs.
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
        }
    }

    /// Builds a digraph from an arc list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_arcs(n: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, order: n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            out_adj[u].push(v);
        }
        for (u, list) in out_adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateArc(u, w[0]));
            }
        }
        Ok(Self::from_out_lists(out_adj))
    }

    /// Builds a digraph from an arc list, silently merging duplicates.
    /// Loops and out-of-range endpoints are still rejected.
    pub fn from_arc_set(n: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut list: Vec<_> = arcs.to_vec();
        list.sort_unstable();
        list.dedup();
        Self::from_arcs(n, &list)
    }

    fn from_out_lists(out_adj: Vec<Vec<VertexId>>) -> Self {
        let n = out_adj.len();
        let mut in_adj = vec![Vec::new(); n];
        for (u, list) in out_adj.iter().enumerate() {
            for &v in list {
                in_adj[v].push(u);
            }
        }
        // in-lists are filled in increasing `u`, hence already sorted
        Digraph { out_adj, in_adj }
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn directed_cycle(n: usize) -> Self {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_arc_set(n, &arcs).expect("cycle arcs are valid")
    }

    /// The symmetric digraph with both arcs for every edge of `g`.
    pub fn symmetric(g: &UndirectedGraph) -> Self {
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        for (u, v) in g.edges() {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Self::from_arcs(g.order(), &arcs).expect("edges of a simple graph")
    }

    pub fn order(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(VertexId, VertexId)> {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    pub fn in_neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v >= self.order() {
            Err(Error::IndexOutOfRange {
                index: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// `(in_degree, out_degree)` of `v`.
    pub fn degrees(&self, v: VertexId) -> Result<(usize, usize)> {
        self.check(v)?;
        Ok((self.in_adj[v].len(), self.out_adj[v].len()))
    }

    pub fn min_in_degree(&self) -> usize {
        self.in_adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn min_out_degree(&self) -> usize {
        self.out_adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The reverse digraph, whose adjacency matrix is the transpose.
    pub fn reverse(&self) -> Self {
        Digraph {
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    /// Underlying simple graph (symmetric closure of the arc relation).
    pub fn underlying(&self) -> UndirectedGraph {
        let mut adj = vec![Vec::new(); self.order()];
        for (u, v) in self.arcs() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        UndirectedGraph { adj }
    }

    /// True iff the underlying graph has exactly one component.
    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }

    /// True iff every vertex reaches every other vertex along arcs.
    pub fn is_strongly_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        reach_count(&self.out_adj, 0) == n && reach_count(&self.in_adj, 0) == n
    }

    /// Strongly connected components as sorted vertex lists, ordered by
    /// their smallest vertex.
    pub fn strong_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let fwd = reach_set(&self.out_adj, s);
            let bwd = reach_set(&self.in_adj, s);
            let members: Vec<_> = (0..n)
                .filter(|&v| fwd[v] && bwd[v] && comp[v] == usize::MAX)
                .collect();
            for &v in &members {
                comp[v] = out.len();
            }
            out.push(members);
        }
        out
    }

    /// A proper 2-colouring of the underlying graph, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        self.underlying().bipartition()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff there are no loops and no opposite arc pairs.
    pub fn is_oriented(&self) -> bool {
        self.arcs()
            .iter()
            .all(|&(u, v)| u != v && !self.has_arc(v, u))
    }

    /// True iff every vertex has in- and out-degree `k`.
    pub fn is_diregular(&self, k: usize) -> bool {
        (0..self.order()).all(|v| self.out_adj[v].len() == k && self.in_adj[v].len() == k)
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Self> {
        self.check(v)?;
        if self.order() < 2 {
            return Err(Error::LastVertex);
        }
        let shift = |w: VertexId| if w > v { w - 1 } else { w };
        let out_adj = self
            .out_adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, list)| list.iter().filter(|&&w| w != v).map(|&w| shift(w)).collect())
            .collect();
        Ok(Self::from_out_lists(out_adj))
    }

    /// Cartesian product: `(a,x) -> (b,y)` iff `a = b` and `x -> y` in `h`,
    /// or `x = y` and `a -> b` in `g`. Pair `(a,x)` has index `a * |h| + x`.
    pub fn cartesian_product(g: &Digraph, h: &Digraph) -> Digraph {
        let (n, m) = (g.order(), h.order());
        let idx = |a: usize, x: usize| a * m + x;
        let mut arcs = Vec::new();
        for a in 0..n {
            for x in 0..m {
                for &y in h.out_neighbours(x) {
                    arcs.push((idx(a, x), idx(a, y)));
                }
                for &b in g.out_neighbours(a) {
                    arcs.push((idx(a, x), idx(b, x)));
                }
            }
        }
        Digraph::from_arcs(n * m, &arcs).expect("product arcs are distinct")
    }

    /// Disjoint union; vertices of `h` are offset by `g.order()`.
    pub fn disjoint_union(g: &Digraph, h: &Digraph) -> Digraph {
        let off = g.order();
        let mut out_adj = g.out_adj.clone();
        out_adj.extend(
            h.out_adj
                .iter()
                .map(|list| list.iter().map(|&w| w + off).collect::<Vec<_>>()),
        );
        Self::from_out_lists(out_adj)
    }

    /// Relabels the vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Digraph {
        let arcs: Vec<_> = self.arcs().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Digraph::from_arcs(self.order(), &arcs).expect("relabelling is a bijection")
    }

    /// Arcs whose removal disconnects the underlying graph.
    pub fn cut_arcs(&self) -> Vec<(VertexId, VertexId)> {
        let und = self.underlying();
        let bridges = und.bridges();
        self.arcs()
            .into_iter()
            .filter(|&(u, v)| {
                !self.has_arc(v, u) && bridges.contains(&(u.min(v), u.max(v)))
            })
            .collect()
    }
}

fn reach_set(adj: &[Vec<VertexId>], s: VertexId) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn reach_count(adj: &[Vec<VertexId>], s: VertexId) -> usize {
    reach_set(adj, s).iter().filter(|&&b| b).count()
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UndirectedGraph {
    adj: Vec<Vec<VertexId>>,
}

impl UndirectedGraph {
    pub fn empty(n: usize) -> Self {
        UndirectedGraph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, order: n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(UndirectedGraph { adj })
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        UndirectedGraph { adj }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle of length at least 3")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || reach_count(&self.adj, 0) == self.order()
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        UndirectedGraph { adj }
    }

    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.order(), &edges).expect("relabelling is a bijection")
    }

    /// Bridges as `(u, v)` with `u < v`.
    pub fn bridges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[u].len() {
                    let w = self.adj[u][*pos];
                    *pos += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push((p.min(u), p.max(u)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}
