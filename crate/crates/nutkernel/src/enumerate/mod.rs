//! Isomorph-free generation of connected graphs, their orientations,
//! tournaments and regular graphs, and the nut-class census built on them.
//!
//! Census work runs in two stages: underlying graphs are generated up to
//! isomorphism, then each one is oriented up to its automorphism group.
//! Tournaments are generated directly by vertex augmentation since the
//! automorphism group of a complete graph is too large to filter by.

pub mod canon;
mod census;
mod graphs;
mod orient;
mod regular;
mod tournaments;

pub use canon::{canonize, group_elements, orbits, Canon, Masks};
pub use census::{census, Caps, Census, CensusOptions, CensusRow, NutClass};
pub use graphs::GraphBounds;
pub use orient::{edge_order, OrientOptions};

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::fastpath::MAX_MASK_ORDER;
use crate::io::{emit_digraph6, emit_graph6};

/// Largest order accepted by the general graph generator.
pub const MAX_GENERAL_ORDER: usize = 12;
/// Largest order accepted by the regular graph generator.
pub const MAX_REGULAR_ORDER: usize = 16;
/// Largest edge count accepted by the orientation search.
pub const MAX_ORIENT_EDGES: usize = 40;
/// Largest automorphism group expanded element by element.
pub const MAX_GROUP_ORDER: usize = 1_000_000;
/// Largest order accepted by the tournament generator.
pub const MAX_TOURNAMENT_ORDER: usize = 12;

/// Constraints on generated digraphs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenConstraints {
    pub order: usize,
    /// Underlying graph connected. Regular generation is always connected.
    pub connected: bool,
    /// Underlying graph `k`-regular.
    pub regularity: Option<usize>,
    /// Minimum degree of the underlying graph.
    pub min_degree: Option<usize>,
    /// Fixed underlying graph, e.g. `K_n` for tournaments.
    pub underlying: Option<UndirectedGraph>,
    /// Keep only core underlying graphs.
    pub core_only: bool,
    /// Require minimum in- and out-degree at least 2; underlying graphs of
    /// smaller minimum degree are skipped.
    pub orientation_degree_bounds: bool,
    /// Forbid pairs of opposite arcs.
    pub oriented_only: bool,
}

impl GenConstraints {
    /// Connected oriented graphs of the given order.
    pub fn oriented(order: usize) -> Self {
        GenConstraints {
            order,
            connected: true,
            oriented_only: true,
            ..GenConstraints::default()
        }
    }

    pub fn regular(mut self, k: usize) -> Self {
        self.regularity = Some(k);
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn cores(mut self) -> Self {
        self.core_only = true;
        self
    }

    pub fn degree_bounds(mut self) -> Self {
        self.orientation_degree_bounds = true;
        self
    }

    pub fn tournaments(order: usize) -> Self {
        GenConstraints {
            underlying: Some(UndirectedGraph::complete(order)),
            ..GenConstraints::oriented(order)
        }
    }

    pub fn allow_digons(mut self) -> Self {
        self.oriented_only = false;
        self
    }

    /// Minimum underlying degree, raised to what the orientation degree
    /// bounds force: 4 for oriented graphs, 2 when opposite arcs are allowed.
    pub fn effective_min_degree(&self) -> usize {
        let forced = match (self.orientation_degree_bounds, self.oriented_only) {
            (false, _) => 0,
            (true, true) => 4,
            (true, false) => 2,
        };
        self.min_degree.unwrap_or(0).max(forced)
    }

    fn is_tournament_space(&self) -> bool {
        self.oriented_only
            && self
                .underlying
                .as_ref()
                .is_some_and(|g| g.order() >= 2 && g.edge_count() == g.order() * (g.order() - 1) / 2)
    }
}

fn check_mask_order(n: usize) -> Result<()> {
    if n > MAX_MASK_ORDER {
        Err(Error::CapExceeded(format!(
            "order {n} exceeds the bitmask limit {MAX_MASK_ORDER}"
        )))
    } else {
        Ok(())
    }
}

/// Streams the underlying graphs described by `c` as bitmasks.
pub(crate) fn for_each_underlying(c: &GenConstraints, emit: &mut dyn FnMut(&Masks)) -> Result<()> {
    let n = c.order;
    let min_degree = c.effective_min_degree();
    let keep = |m: &Masks| -> bool {
        (!c.connected || m.is_connected())
            && (0..m.n).all(|v| m.out_degree(v) >= min_degree)
            && (!c.core_only || crate::fastpath::is_core_masks(m.out_rows()))
    };
    if let Some(g) = &c.underlying {
        check_mask_order(g.order())?;
        let m = Masks::from_graph(g);
        if keep(&m) && c.regularity.is_none_or(|k| g.is_regular(k)) {
            emit(&m);
        }
        return Ok(());
    }
    if let Some(k) = c.regularity {
        if n > MAX_REGULAR_ORDER {
            return Err(Error::CapExceeded(format!(
                "regular generation is limited to {MAX_REGULAR_ORDER} vertices"
            )));
        }
        regular::for_each_regular(n, k, &mut |m| {
            if keep(m) {
                emit(m)
            }
        });
        return Ok(());
    }
    if n > MAX_GENERAL_ORDER {
        return Err(Error::CapExceeded(format!(
            "graph generation is limited to {MAX_GENERAL_ORDER} vertices"
        )));
    }
    let bounds = GraphBounds {
        min_degree,
        max_degree: None,
    };
    graphs::for_each_graph(n, bounds, &mut |m| {
        if keep(m) {
            emit(m)
        }
    });
    Ok(())
}

/// Calls `emit` once per isomorphism class of graphs meeting `c`.
pub fn for_each_connected_graph(
    c: &GenConstraints,
    emit: &mut dyn FnMut(&UndirectedGraph),
) -> Result<()> {
    for_each_underlying(c, &mut |m| emit(&m.to_graph()))
}

/// One representative per isomorphism class of graphs meeting `c`.
pub fn gen_connected_graphs(c: &GenConstraints) -> Result<Vec<UndirectedGraph>> {
    let mut out = Vec::new();
    for_each_connected_graph(c, &mut |g| out.push(g.clone()))?;
    Ok(out)
}

/// All graphs on `n` vertices within the degree bounds, connected or not.
pub fn all_graphs(n: usize, bounds: GraphBounds) -> Result<Vec<UndirectedGraph>> {
    if n > MAX_GENERAL_ORDER {
        return Err(Error::CapExceeded(format!(
            "graph generation is limited to {MAX_GENERAL_ORDER} vertices"
        )));
    }
    let mut out = Vec::new();
    graphs::for_each_graph(n, bounds, &mut |m| out.push(m.to_graph()));
    Ok(out)
}

fn group_of(m: &Masks) -> Result<Vec<Vec<u8>>> {
    let c = canonize(m);
    group_elements(&c.generators, m.n, MAX_GROUP_ORDER).ok_or_else(|| {
        Error::CapExceeded(format!(
            "automorphism group larger than {MAX_GROUP_ORDER} elements"
        ))
    })
}

/// Every automorphism of `g` as a vertex map, identity first.
pub fn automorphism_group(g: &UndirectedGraph) -> Result<Vec<Vec<usize>>> {
    if g.order() > MAX_GENERAL_ORDER {
        return Err(Error::CapExceeded(format!(
            "automorphism groups are limited to {MAX_GENERAL_ORDER} vertices"
        )));
    }
    let group = group_of(&Masks::from_graph(g))?;
    Ok(group
        .into_iter()
        .map(|p| p.into_iter().map(usize::from).collect())
        .collect())
}

/// Every automorphism of the digraph `g`, identity first.
pub fn digraph_automorphisms(g: &Digraph) -> Result<Vec<Vec<usize>>> {
    check_mask_order(g.order())?;
    let group = group_of(&Masks::from_digraph(g))?;
    Ok(group
        .into_iter()
        .map(|p| p.into_iter().map(usize::from).collect())
        .collect())
}

/// Streams orientation representatives of `g` as out-masks.
pub(crate) fn for_each_orientation_masks(
    g: &Masks,
    opts: OrientOptions,
    emit: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<()> {
    let edges = (0..g.n).map(|v| g.out_degree(v)).sum::<usize>() / 2;
    if edges > MAX_ORIENT_EDGES {
        return Err(Error::CapExceeded(format!(
            "orientation search is limited to {MAX_ORIENT_EDGES} edges"
        )));
    }
    let group = group_of(g)?;
    orient::for_each_orientation(g, &group, opts, emit);
    Ok(())
}

/// One digraph per isomorphism class of orientations of `g`; with
/// `opts.allow_digons` an edge may also carry both arcs.
pub fn orientations_with(g: &UndirectedGraph, opts: OrientOptions) -> Result<Vec<Digraph>> {
    check_mask_order(g.order())?;
    let mut out = Vec::new();
    for_each_orientation_masks(&Masks::from_graph(g), opts, &mut |rows| {
        out.push(Masks::from_out(rows).to_digraph());
        true
    })?;
    Ok(out)
}

/// One oriented graph per isomorphism class with underlying graph `g`,
/// optionally restricted to minimum in- and out-degree at least 2.
pub fn orientations(g: &UndirectedGraph, prune: bool) -> Result<Vec<Digraph>> {
    orientations_with(
        g,
        OrientOptions {
            degree_bounds: prune,
            allow_digons: false,
        },
    )
}

/// One tournament per isomorphism class on `n` vertices.
pub fn tournaments(n: usize) -> Result<Vec<Digraph>> {
    if n > MAX_TOURNAMENT_ORDER {
        return Err(Error::CapExceeded(format!(
            "tournament generation is limited to {MAX_TOURNAMENT_ORDER} vertices"
        )));
    }
    let mut out = Vec::new();
    tournaments::for_each_tournament(n, &mut |t| out.push(t.to_digraph()));
    Ok(out)
}

pub(crate) fn for_each_tournament_masks(n: usize, emit: &mut dyn FnMut(&Masks)) {
    tournaments::for_each_tournament(n, emit);
}

/// Canonical relabelling of `g`: isomorphic digraphs, and only those, get
/// equal results.
pub fn canonical_form(g: &Digraph) -> Result<Digraph> {
    check_mask_order(g.order())?;
    let c = canonize(&Masks::from_digraph(g));
    Ok(Masks::from_out(&c.form).to_digraph())
}

/// digraph6 string of the canonical relabelling of `g`.
pub fn canonical_digraph(g: &Digraph) -> Result<String> {
    Ok(emit_digraph6(&canonical_form(g)?))
}

/// graph6 string of the canonical relabelling of `g`.
pub fn canonical_graph(g: &UndirectedGraph) -> Result<String> {
    check_mask_order(g.order())?;
    let c = canonize(&Masks::from_graph(g));
    Ok(emit_graph6(&Masks::from_out(&c.form).to_graph()))
}

/// Whether `g` and `h` are isomorphic.
pub fn isomorphic(g: &Digraph, h: &Digraph) -> Result<bool> {
    Ok(g.order() == h.order()
        && g.arc_count() == h.arc_count()
        && canonical_digraph(g)? == canonical_digraph(h)?)
}

/// Core graph: order at least 2, singular, and every vertex carries a
/// nonzero entry of some kernel vector.
pub fn is_core_graph(g: &UndirectedGraph) -> bool {
    if g.order() < 2 {
        return false;
    }
    if g.order() <= MAX_MASK_ORDER {
        return crate::fastpath::is_core_masks(Masks::from_graph(g).out_rows());
    }
    let ker = crate::spectral::kernel(&Digraph::symmetric(g));
    !ker.is_empty() && ker.support().iter().all(|&s| s)
}
