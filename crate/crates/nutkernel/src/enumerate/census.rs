//! Nut-class census over a generated digraph space.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::canon::Masks;
use super::orient::OrientOptions;
use super::{for_each_orientation_masks, for_each_tournament_masks, for_each_underlying};
use super::{GenConstraints, MAX_GENERAL_ORDER, MAX_REGULAR_ORDER, MAX_TOURNAMENT_ORDER};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::fastpath::{class_flags, ClassFlags};

/// Classes counted by the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NutClass {
    Dextro,
    Laevo,
    Bi,
    Ambi,
    Inter,
    InterNotAmbi,
}

impl NutClass {
    pub const ALL: [NutClass; 6] = [
        NutClass::Dextro,
        NutClass::Laevo,
        NutClass::Bi,
        NutClass::Ambi,
        NutClass::Inter,
        NutClass::InterNotAmbi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NutClass::Dextro => "dextro",
            NutClass::Laevo => "laevo",
            NutClass::Bi => "bi",
            NutClass::Ambi => "ambi",
            NutClass::Inter => "inter",
            NutClass::InterNotAmbi => "inter-not-ambi",
        }
    }

    pub fn parse(s: &str) -> Option<NutClass> {
        NutClass::ALL.into_iter().find(|c| c.name() == s)
    }

    pub fn holds(self, f: &ClassFlags) -> bool {
        match self {
            NutClass::Dextro => f.dextro,
            NutClass::Laevo => f.laevo,
            NutClass::Bi => f.bi,
            NutClass::Ambi => f.ambi,
            NutClass::Inter => f.inter,
            NutClass::InterNotAmbi => f.inter && !f.ambi,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl Serialize for NutClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Order limits of the census modes, and a limit on classified digraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub general: usize,
    pub regular: usize,
    pub tournament: usize,
    pub core: usize,
    pub regular_core: usize,
    pub digons: usize,
    pub max_oriented: Option<u64>,
}

impl Caps {
    /// Limits for runs of at most tens of minutes.
    pub fn desk() -> Self {
        Caps {
            general: 7,
            regular: 10,
            tournament: 9,
            core: 9,
            regular_core: 15,
            digons: 6,
            max_oriented: Some(200_000_000),
        }
    }

    /// The hard limits of the generators.
    pub fn stress() -> Self {
        Caps {
            general: MAX_GENERAL_ORDER,
            regular: MAX_REGULAR_ORDER,
            tournament: MAX_TOURNAMENT_ORDER,
            core: MAX_GENERAL_ORDER,
            regular_core: MAX_REGULAR_ORDER,
            digons: MAX_GENERAL_ORDER,
            max_oriented: None,
        }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::desk()
    }
}

/// Census options.
#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub caps: Caps,
    /// Worker threads; defaults to `NUTKERNEL_WORKERS`, then to rayon's
    /// default.
    pub workers: Option<usize>,
    /// Keep one representative of every digraph in this class.
    pub collect: Option<NutClass>,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Census totals for one order.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub n: usize,
    /// Digraphs per class, up to isomorphism.
    pub counts: BTreeMap<NutClass, u64>,
    /// Digraphs per class that contain a pair of opposite arcs.
    pub with_digons: BTreeMap<NutClass, u64>,
    /// Underlying graphs that yield at least one digraph of each class.
    pub good: BTreeMap<NutClass, u64>,
    pub generated_underlying: u64,
    pub generated_oriented: u64,
    /// Underlying graphs that yield at least one ambi-nut digraph.
    pub good_cores: u64,
    #[serde(rename = "elapsed_seconds", serialize_with = "seconds")]
    pub elapsed: Duration,
}

impl CensusRow {
    pub fn count(&self, c: NutClass) -> u64 {
        self.counts.get(&c).copied().unwrap_or(0)
    }

    /// Equality of everything but the elapsed time.
    pub fn same_totals(&self, other: &CensusRow) -> bool {
        self.n == other.n
            && self.counts == other.counts
            && self.with_digons == other.with_digons
            && self.good == other.good
            && self.generated_underlying == other.generated_underlying
            && self.generated_oriented == other.generated_oriented
            && self.good_cores == other.good_cores
    }
}

/// Census outcome: totals and the collected class members.
#[derive(Clone, Debug)]
pub struct Census {
    pub row: CensusRow,
    pub members: Vec<Digraph>,
}

#[derive(Clone, Default)]
struct Tally {
    counts: [u64; 6],
    digons: [u64; 6],
    good: [u64; 6],
    underlying: u64,
    oriented: u64,
    members: Vec<Vec<u32>>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..6 {
            self.counts[i] += other.counts[i];
            self.digons[i] += other.digons[i];
            self.good[i] += other.good[i];
        }
        self.underlying += other.underlying;
        self.oriented += other.oriented;
        self.members.extend(other.members);
        self
    }

    fn record(&mut self, rows: &[u32], collect: Option<NutClass>) -> [bool; 6] {
        self.oriented += 1;
        let f = class_flags(rows);
        let digon = rows
            .iter()
            .enumerate()
            .any(|(u, &r)| super::canon::bits(r).any(|v| rows[v] >> u & 1 == 1));
        let mut hit = [false; 6];
        for c in NutClass::ALL {
            if c.holds(&f) {
                hit[c.index()] = true;
                self.counts[c.index()] += 1;
                if digon {
                    self.digons[c.index()] += 1;
                }
            }
        }
        if collect.is_some_and(|c| hit[c.index()]) {
            self.members.push(rows.to_vec());
        }
        hit
    }
}

fn order_cap(c: &GenConstraints, caps: &Caps) -> (usize, &'static str) {
    if !c.oriented_only {
        (caps.digons, "digraphs with opposite arcs")
    } else if c.is_tournament_space() {
        (caps.tournament, "tournaments")
    } else if c.underlying.is_some() {
        (usize::MAX, "")
    } else if c.regularity.is_some() && c.core_only {
        (caps.regular_core, "regular cores")
    } else if c.regularity.is_some() {
        (caps.regular, "regular digraphs")
    } else if c.core_only {
        (caps.core, "core-based digraphs")
    } else {
        (caps.general, "oriented graphs")
    }
}

fn worker_count(opts: &CensusOptions) -> usize {
    opts.workers
        .or_else(|| {
            std::env::var("NUTKERNEL_WORKERS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .filter(|&w| w > 0)
        .unwrap_or_else(rayon::current_num_threads)
}

/// Counts nut classes over the digraphs described by `c`, one per
/// isomorphism class.
pub fn census(c: &GenConstraints, opts: &CensusOptions) -> Result<Census> {
    let start = Instant::now();
    let (cap, what) = order_cap(c, &opts.caps);
    if c.order > cap {
        return Err(Error::CapExceeded(format!(
            "census of {what} is limited to order {cap} without stress mode"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count(opts))
        .build()
        .map_err(|e| Error::CapExceeded(format!("worker pool: {e}")))?;
    let classified = AtomicU64::new(0);
    let over = AtomicBool::new(false);
    let budget = opts.caps.max_oriented;
    let within_budget = || {
        let done = classified.fetch_add(1, Ordering::Relaxed) + 1;
        if budget.is_some_and(|b| done > b) {
            over.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    };

    let tally = if c.is_tournament_space() {
        let mut t = Tally {
            underlying: 1,
            ..Tally::default()
        };
        let mut any = [false; 6];
        let mut halted = false;
        for_each_tournament_masks(c.order, &mut |m| {
            if halted || (c.orientation_degree_bounds && !min_degrees_ok(m)) {
                return;
            }
            if !within_budget() {
                halted = true;
                return;
            }
            let hit = t.record(m.out_rows(), opts.collect);
            for i in 0..6 {
                any[i] |= hit[i];
            }
        });
        for i in 0..6 {
            t.good[i] = any[i] as u64;
        }
        t
    } else {
        let mut graphs: Vec<Masks> = Vec::new();
        for_each_underlying(c, &mut |m| graphs.push(*m))?;
        let orient = OrientOptions {
            degree_bounds: c.orientation_degree_bounds,
            allow_digons: !c.oriented_only,
        };
        let parts: Vec<Result<Tally>> = pool.install(|| {
            graphs
                .par_iter()
                .map(|g| {
                    let mut t = Tally {
                        underlying: 1,
                        ..Tally::default()
                    };
                    let mut any = [false; 6];
                    for_each_orientation_masks(g, orient, &mut |rows| {
                        if !within_budget() {
                            return false;
                        }
                        let hit = t.record(rows, opts.collect);
                        for i in 0..6 {
                            any[i] |= hit[i];
                        }
                        true
                    })?;
                    for i in 0..6 {
                        t.good[i] = any[i] as u64;
                    }
                    Ok(t)
                })
                .collect()
        });
        let mut total = Tally::default();
        for p in parts {
            total = total.merge(p?);
        }
        total
    };
    if over.load(Ordering::Relaxed) {
        return Err(Error::CapExceeded(format!(
            "more than {} digraphs to classify without stress mode",
            budget.unwrap_or_default()
        )));
    }
    let map = |a: &[u64; 6]| -> BTreeMap<NutClass, u64> {
        NutClass::ALL.into_iter().map(|k| (k, a[k.index()])).collect()
    };
    let row = CensusRow {
        n: c.order,
        counts: map(&tally.counts),
        with_digons: map(&tally.digons),
        good: map(&tally.good),
        generated_underlying: tally.underlying,
        generated_oriented: tally.oriented,
        good_cores: tally.good[NutClass::Ambi.index()],
        elapsed: start.elapsed(),
    };
    let members = tally
        .members
        .iter()
        .map(|rows| Masks::from_out(rows).to_digraph())
        .collect();
    Ok(Census { row, members })
}

fn min_degrees_ok(m: &Masks) -> bool {
    (0..m.n).all(|v| m.out[v].count_ones() >= 2 && m.inn[v].count_ones() >= 2)
}
