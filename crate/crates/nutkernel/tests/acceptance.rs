//! Acceptance report: one PASS/FAIL line per criterion. Set
//! `NUTKERNEL_STRESS=1` to also run the rows that need lifted caps.

mod common;

use std::time::{Duration, Instant};

use common::oracles::{kernel_oracle_mismatches, orientation_oracle};
use common::sweeps::{d_family_sweep, dicycle_sweep, m_family_sweep};
use common::*;
use nutkernel::constructions::{
    ambi_crossover, coalesce, coalesce_gadgets, gadget_from_ambi, multiplier, subdivide_arc,
    undirected_gadget, validate_base, BaseDigraph,
};
use nutkernel::enumerate::{
    gen_connected_graphs, is_core_graph, isomorphic, orientations, Caps, CensusOptions,
    GenConstraints, NutClass,
};
use nutkernel::families::{circulant, d_family, dicycle_product, m_family};
use nutkernel::linalg::BigRational;
use nutkernel::spectral::{as_gadget, classify, classify_deletion, deletion_profiles, Gadget, NutReport, Stratum};
use nutkernel::tables::{check_row, is_stress_row, reference_rows, Table};
use nutkernel::{Digraph, Error, UndirectedGraph};
use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MINUTE: Duration = Duration::from_secs(60);

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&a| BigInt::from(a)).collect()
}

fn up_to_sign(a: &[BigInt], b: &[BigInt]) -> bool {
    a == b || a.iter().zip(b).all(|(x, y)| *x == -y)
}

/// Runs the census rows of `table` with `n` in `orders`, returning the
/// failures and the members of `collect`.
fn table_rows(
    table: Table,
    orders: &[usize],
    collect: Option<NutClass>,
    caps: Caps,
) -> (Vec<String>, Vec<Digraph>, Vec<(usize, Duration)>) {
    let mut bad = Vec::new();
    let mut members = Vec::new();
    let mut times = Vec::new();
    for &n in orders {
        let Some(r) = reference_rows().into_iter().find(|r| r.table == table && r.n == n) else {
            bad.push(format!("no reference row for n={n}"));
            continue;
        };
        let opts = CensusOptions {
            caps,
            workers: None,
            collect,
        };
        match check_row(&r, &opts) {
            Ok((check, got)) => {
                for c in check.cells.iter().filter(|c| !c.passed()) {
                    bad.push(format!(
                        "n={n} {}: expected {}, computed {}",
                        c.label, c.expected, c.computed
                    ));
                }
                times.push((n, check.elapsed()));
                members.extend(got);
            }
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    (bad, members, times)
}

fn within(bad: &mut Vec<String>, what: &str, took: Duration, limit: Duration) {
    if took > limit {
        bad.push(format!("{what} took {:.0} s, over {:.0} s", took.as_secs_f64(), limit.as_secs_f64()));
    }
}

fn time_of(times: &[(usize, Duration)], n: usize) -> Duration {
    times.iter().find(|t| t.0 == n).map_or(Duration::ZERO, |t| t.1)
}

fn report(id: usize, title: &str, started: Instant, bad: &[String]) -> bool {
    let secs = started.elapsed().as_secs_f64();
    if bad.is_empty() {
        println!("PASS {id:>2}  {title} ({secs:.1} s)");
    } else {
        let shown: Vec<&str> = bad.iter().take(5).map(String::as_str).collect();
        println!(
            "FAIL {id:>2}  {title} ({secs:.1} s): {} problem(s): {}",
            bad.len(),
            shown.join("; ")
        );
    }
    bad.is_empty()
}

fn lattice_violations(r: &NutReport) -> Option<&'static str> {
    if r.is_bi_nut != (r.is_dextro_nut && r.is_laevo_nut) {
        Some("bi differs from dextro and laevo")
    } else if r.is_ambi_nut && !(r.is_bi_nut && r.is_inter_nut) {
        Some("ambi but not bi and inter")
    } else if r.is_inter_nut && (r.is_dextro_nut || r.is_laevo_nut) && !r.is_ambi_nut {
        Some("inter and dextro or laevo but not ambi")
    } else {
        None
    }
}

fn degree_violation(g: &Digraph, r: &NutReport) -> Option<&'static str> {
    let (mut min_in, mut min_out, mut out_one, mut in_one) = (usize::MAX, usize::MAX, false, false);
    for v in 0..g.order() {
        let (i, o) = g.degrees(v).unwrap();
        min_in = min_in.min(i);
        min_out = min_out.min(o);
        in_one |= i == 1;
        out_one |= o == 1;
    }
    if r.is_dextro_nut && (min_in == 0 || out_one) {
        Some("dextro-nut with a source or a vertex of out-degree 1")
    } else if r.is_laevo_nut && (min_out == 0 || in_one) {
        Some("laevo-nut with a sink or a vertex of in-degree 1")
    } else {
        None
    }
}

fn invariant_violations(g: &Digraph) -> Vec<String> {
    let r = classify(g);
    let mut bad = Vec::new();
    let mut flag = |what: &str| bad.push(format!("{}: {what}", nutkernel::io::emit_digraph6(g)));
    if let Some(w) = lattice_violations(&r) {
        flag(w);
    }
    if let Some(w) = degree_violation(g, &r) {
        flag(w);
    }
    if r.is_bi_nut && !g.is_strongly_connected() {
        flag("bi-nut not strongly connected");
    }
    if r.is_inter_nut {
        if !g.is_connected() {
            flag("inter-nut not connected");
        }
        if g.is_bipartite() {
            flag("inter-nut bipartite");
        }
        if !is_core_graph(&g.underlying()) {
            flag("inter-nut underlying graph not a core graph");
        }
    }
    if r.nullity >= 1 && g.order() >= 2 {
        if let Err(e) = deletion_profiles(g) {
            flag(&format!("deletion cases: {e}"));
        }
    }
    bad
}

fn gadget(g: &Digraph, root: usize) -> Gadget {
    as_gadget(g, root).expect("fixture is a gadget")
}

/// Gadgets of demands 1, -1 and 2 built from the fixtures.
fn gadget_stock() -> Vec<Gadget> {
    let f: Vec<Gadget> = gadget_fixtures().iter().map(|(g, r, ..)| gadget(g, *r)).collect();
    let mut stock = f.clone();
    stock.push(gadget_from_ambi(&m_family(1, 6).unwrap(), 0, 2).unwrap());
    stock.push(gadget_from_ambi(&d_family(1, 5).unwrap(), 0, 1).unwrap());
    for parts in [
        vec![f[2].clone(), f[2].clone()],
        vec![f[3].clone(), f[3].clone(), f[3].clone()],
        vec![f[0].clone(), f[1].clone()],
        vec![f[5].clone(), f[5].clone(), f[5].clone()],
        vec![f[2].clone(), f[2].clone(), f[0].clone(), f[0].clone()],
    ] {
        stock.push(coalesce_gadgets(&parts).unwrap());
    }
    stock
}

fn bases() -> Vec<Result<BaseDigraph, String>> {
    let mut out: Vec<(Digraph, i64)> = base_fixtures();
    out.extend((3..=6).map(|n| (Digraph::directed_cycle(n), 1)));
    out.extend([
        (m_family(1, 6).unwrap(), 2),
        (m_family(2, 6).unwrap(), 2),
        (m_family(1, 8).unwrap(), 2),
        (dicycle_product(3, 4).unwrap(), 2),
    ]);
    out.into_iter()
        .map(|(g, l)| {
            validate_base(&g, l).ok_or_else(|| format!("{} is not a base for {l}", nutkernel::io::emit_digraph6(&g)))
        })
        .collect()
}

fn suitable_arcs(g: &Digraph) -> Vec<(usize, usize)> {
    let x = classify(g).ker_witness.expect("ambi-nuts carry a witness");
    g.arcs().into_iter().filter(|&(u, v)| x[u] == x[v]).collect()
}

struct Shared {
    inter_upto_seven: Vec<Digraph>,
    ambi_upto_nine: Vec<Digraph>,
    digon_ambi: Vec<Digraph>,
    digon_failures: Vec<String>,
}

fn main() {
    let stress = std::env::var("NUTKERNEL_STRESS").is_ok_and(|v| v != "0" && !v.is_empty());
    let desk = Caps::desk();
    let mut all_ok = true;

    let t = Instant::now();
    let (mut bad, inter, times) = table_rows(Table::General, &[3, 4, 5, 6, 7], Some(NutClass::Inter), desk);
    within(&mut bad, "n=7", time_of(&times, 7), 10 * MINUTE);
    all_ok &= report(1, "oriented graph census, n = 3..7", t, &bad);

    let t = Instant::now();
    let (mut bad, _, _) = table_rows(Table::Quartic, &[5, 6, 7, 8, 9, 10], None, desk);
    within(&mut bad, "all rows", t.elapsed(), 15 * MINUTE);
    all_ok &= report(2, "4-regular oriented graph census, n = 5..10", t, &bad);

    let t = Instant::now();
    let (mut bad, _, _) = table_rows(Table::Tournaments, &[4, 5, 6, 7, 8, 9], None, desk);
    within(&mut bad, "all rows", t.elapsed(), 10 * MINUTE);
    all_ok &= report(3, "tournament census, n = 4..9", t, &bad);

    let t = Instant::now();
    let (mut bad, ambi, times) = table_rows(Table::Cores, &[6, 7, 8, 9], Some(NutClass::Ambi), desk);
    within(&mut bad, "n=9", time_of(&times, 9), 30 * MINUTE);
    all_ok &= report(4, "core-based ambi-nut census, n = 6..9", t, &bad);

    let t = Instant::now();
    let (bad, _, _) = table_rows(Table::QuarticCores, &[5, 6, 7, 8, 9, 10, 15], None, desk);
    all_ok &= report(5, "4-regular core ambi-nut census, n = 5..10 and 15", t, &bad);

    let (digon_failures, digon_ambi, _) = table_rows(Table::Digons, &[4, 6], Some(NutClass::Ambi), desk);
    let shared = Shared {
        inter_upto_seven: inter,
        ambi_upto_nine: ambi,
        digon_ambi,
        digon_failures,
    };

    let t = Instant::now();
    let mut bad = m_family_sweep(6..=40);
    bad.extend(d_family_sweep(5..=29));
    bad.extend(dicycle_sweep(12));
    within(&mut bad, "sweeps", t.elapsed(), MINUTE);
    all_ok &= report(6, "family sweeps", t, &bad);

    let t = Instant::now();
    let mut bad = Vec::new();
    let mut seen = 0usize;
    for n in 1..=6 {
        for g in gen_connected_graphs(&GenConstraints::oriented(n)).unwrap() {
            for d in orientations(&g, false).unwrap() {
                seen += 1;
                bad.extend(invariant_violations(&d));
            }
        }
    }
    if seen != 1 + 1 + 5 + 34 + 535 + 20848 {
        bad.push(format!("{seen} digraphs visited"));
    }
    within(&mut bad, "suite", t.elapsed(), 10 * MINUTE);
    all_ok &= report(7, "theorem invariants over connected oriented graphs, n <= 6", t, &bad);

    let t = Instant::now();
    let bad = construction_postconditions(&shared);
    all_ok &= report(8, "construction postconditions", t, &bad);

    let t = Instant::now();
    let bad = gadget_checks(&shared);
    all_ok &= report(9, "gadget demands", t, &bad);

    let t = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=5 {
        let o = orientation_oracle(n);
        if o.oriented.0 != o.oriented.1 || o.all.0 != o.all.1 {
            bad.push(format!(
                "n={n}: oriented {:?}, all {:?} (generated, brute force)",
                o.oriented, o.all
            ));
        }
    }
    bad.extend(
        kernel_oracle_mismatches(1000, 0x6e75_7473)
            .into_iter()
            .map(|m| format!("kernel mismatch on {m}")),
    );
    all_ok &= report(10, "oracle equivalence", t, &bad);

    let t = Instant::now();
    let bad = figure_fixtures(&shared);
    all_ok &= report(11, "fixture regression", t, &bad);

    if stress {
        for r in reference_rows().into_iter().filter(is_stress_row) {
            let t = Instant::now();
            let (bad, _, _) = table_rows(r.table, &[r.n], None, Caps::stress());
            let title = format!("stress row {} n={}", r.table.name(), r.n);
            all_ok &= report(0, &title, t, &bad);
        }
    }

    if !all_ok {
        std::process::exit(1);
    }
}

fn construction_postconditions(s: &Shared) -> Vec<String> {
    let mut bad = Vec::new();
    let name = nutkernel::io::emit_digraph6;

    let small_ambi: Vec<Digraph> = s
        .ambi_upto_nine
        .iter()
        .filter(|g| g.order() <= 7)
        .chain(&s.digon_ambi)
        .cloned()
        .collect();
    if small_ambi.len() != 3 + 1 + 16 {
        bad.push(format!("{} ambi-nuts on at most 7 vertices", small_ambi.len()));
    }
    for (i, g) in small_ambi.iter().enumerate() {
        for h in &small_ambi[i..] {
            for v in 0..g.order() {
                for u in 0..h.order() {
                    let ok = coalesce(g, v, h, u).is_ok_and(|c| classify(&c).is_ambi_nut);
                    if !ok {
                        bad.push(format!("coalescence {}@{v} {}@{u}", name(g), name(h)));
                    }
                }
            }
        }
    }

    let six: Vec<(Digraph, Vec<BigInt>)> = small_ambi
        .iter()
        .filter(|g| g.order() == 6)
        .map(|g| (g.clone(), classify(g).ker_witness.unwrap()))
        .collect();
    let mut compatible = 0usize;
    for (g, x) in &six {
        for (h, y) in &six {
            for (u, v) in g.arcs() {
                for (p, q) in h.arcs() {
                    if &x[u] * &y[q] != &x[v] * &y[p] {
                        continue;
                    }
                    compatible += 1;
                    let ok = ambi_crossover(g, (u, v), h, (p, q)).is_ok_and(|c| classify(&c).is_ambi_nut);
                    if !ok {
                        bad.push(format!("crossover {} ({u},{v}) {} ({p},{q})", name(g), name(h)));
                    }
                }
            }
        }
    }
    if compatible == 0 {
        bad.push("no compatible crossovers".into());
    }

    let mut subdivided = 0usize;
    for g in &s.inter_upto_seven {
        for (u, v) in g.arcs() {
            subdivided += 1;
            let ok = subdivide_arc(g, u, v).is_ok_and(|d| {
                let r = classify(&d);
                r.is_inter_nut && !r.is_ambi_nut
            });
            if !ok {
                bad.push(format!("subdivision {} ({u},{v})", name(g)));
            }
        }
    }
    if subdivided == 0 {
        bad.push("no inter-nuts collected".into());
    }

    let stock = gadget_stock();
    let bases: Vec<BaseDigraph> = bases()
        .into_iter()
        .filter_map(|b| b.map_err(|e| bad.push(e)).ok())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d756c74);
    let mut built = 0;
    for _ in 0..120 {
        let base = bases.choose(&mut rng).unwrap();
        let lambda = BigRational::from_integer(base.lambda.into());
        let pool: Vec<&Gadget> = stock.iter().filter(|g| g.demand == lambda).collect();
        if pool.is_empty() {
            bad.push(format!("no gadget of demand {}", base.lambda));
            continue;
        }
        let picks: Vec<Gadget> = (0..base.digraph.order())
            .map(|_| (*pool.choose(&mut rng).unwrap()).clone())
            .collect();
        match multiplier(base, &picks) {
            Ok(g) if classify(&g).is_ambi_nut => built += 1,
            Ok(g) => bad.push(format!("multiplier on {} is not an ambi-nut", name(&g))),
            Err(e) => bad.push(format!("multiplier on {}: {e}", name(&base.digraph))),
        }
    }
    if built < 100 {
        bad.push(format!("only {built} multipliers built"));
    }
    bad
}

fn gadget_checks(s: &Shared) -> Vec<String> {
    let mut bad = Vec::new();
    for (g, root, vector, num, den) in gadget_fixtures() {
        match as_gadget(&g, root) {
            Some(x) => {
                if x.demand != BigRational::new(num.into(), den.into()) {
                    bad.push(format!("fixture demand {} instead of {num}/{den}", x.demand));
                }
                if !up_to_sign(&x.defining_vector, &ints(&vector)) {
                    bad.push("fixture defining vector differs".into());
                }
            }
            None => bad.push(format!("fixture with demand {num}/{den} is not a gadget")),
        }
    }
    let undirected = [(UndirectedGraph::complete(3), 2), (circulant(5, &[1]).unwrap(), -2)];
    for (g, want) in undirected {
        let d = undirected_gadget(&g, 0).map(|x| x.demand);
        if d != Some(BigRational::from_integer(want.into())) {
            bad.push(format!("undirected cycle of order {} has demand {d:?}", g.order()));
        }
    }

    let mut from_ambi = Vec::new();
    for g in s.ambi_upto_nine.iter().chain(&s.digon_ambi) {
        let arcs = suitable_arcs(g);
        if arcs.is_empty() && g.is_oriented() {
            bad.push(format!("{} has no suitable arc", nutkernel::io::emit_digraph6(g)));
        }
        for (u, v) in arcs {
            match gadget_from_ambi(g, u, v) {
                Ok(x) if x.demand == -BigRational::one() => {
                    if from_ambi.len() < 200 {
                        from_ambi.push(x);
                    }
                }
                Ok(x) => bad.push(format!("gadget from an ambi-nut has demand {}", x.demand)),
                Err(e) => bad.push(format!("gadget_from_ambi: {e}")),
            }
        }
    }

    let mut pool = gadget_stock();
    pool.extend(from_ambi);
    let mut rng = ChaCha8Rng::seed_from_u64(0x64656d);
    for _ in 0..1000 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let want = &a.demand + &b.demand;
        match coalesce_gadgets(&[a.clone(), b.clone()]) {
            Ok(g) if g.demand == want => {}
            Ok(g) => bad.push(format!("demand {} instead of {want}", g.demand)),
            Err(e) => bad.push(format!("coalesce_gadgets: {e}")),
        }
    }
    bad
}

fn figure_fixtures(s: &Shared) -> Vec<String> {
    let mut bad = s.digon_failures.clone();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            bad.push(what.to_string());
        }
    };

    let r = classify(&smallest_dextro());
    check(r.is_dextro_nut && !r.is_laevo_nut, "smallest dextro-nut");
    check(
        up_to_sign(r.ker_witness.as_deref().unwrap_or(&[]), &ints(&[1, 1, 1, -1])),
        "smallest dextro-nut kernel",
    );
    let g = dextro_with_leaf();
    let r = classify(&g);
    check(r.is_dextro_nut && !r.is_bi_nut, "dextro-nut with a leaf");
    check((0..7).any(|v| g.underlying().degree(v) == 1), "leaf of the dextro-nut");
    let r = classify(&bi_not_ambi_seven());
    check(r.is_bi_nut && !r.is_ambi_nut, "bi-nut that is not ambi");
    check(classify(&ambi_seven()).is_ambi_nut, "7-vertex ambi-nut");
    for (g, k) in [(m1_six_drawn(), 1), (m2_six_drawn(), 2)] {
        check(classify(&g).is_ambi_nut, "6-vertex ambi-nut");
        check(isomorphic(&g, &m_family(k, 6).unwrap()).unwrap(), "6-vertex ambi-nut family member");
    }
    for g in [quartic_dextro_a(), quartic_dextro_b()] {
        let r = classify(&g);
        check(r.is_dextro_nut && !r.is_bi_nut, "4-regular dextro-nut");
    }
    let eight = quartic_ambi_eight();
    check(eight.iter().all(|g| classify(g).is_ambi_nut), "4-regular 8-vertex ambi-nuts");
    for (k, g) in (1..=3).zip(&eight[2..]) {
        check(isomorphic(g, &m_family(k, 8).unwrap()).unwrap(), "8-vertex family member");
    }
    for (g, nullity) in [
        (ambi_core_m3_six(), 3),
        (ambi_core_nullity_four(), 4),
        (ambi_core_nullity_two(), 2),
    ] {
        let r = classify(&g);
        check(
            r.nullity == nullity && r.is_ambi_core && !r.is_ambi_nut,
            &format!("ambi-core of nullity {nullity}"),
        );
    }
    let bad_core = bad_core();
    let r = classify(&Digraph::symmetric(&bad_core));
    check(r.is_dextro_nut && r.nullity == 1, "bad core is a nut graph");
    check(
        up_to_sign(r.ker_witness.as_deref().unwrap_or(&[]), &ints(&BAD_CORE_KERNEL)),
        "bad core kernel",
    );
    let orients = orientations(&bad_core, false).unwrap();
    check(
        !orients.is_empty() && orients.iter().all(|d| !classify(d).is_ambi_nut),
        "bad core admits no ambi orientation",
    );
    check(classify(&sciriha_one_symmetric()).is_dextro_nut, "first Sciriha graph is a nut graph");
    for (g, x) in non_oriented_ambi() {
        let r = classify(&g);
        check(
            r.is_ambi_nut && !g.is_oriented() && up_to_sign(r.ker_witness.as_deref().unwrap_or(&[]), &ints(&x)),
            "ambi-nut with opposite arcs",
        );
    }
    for (g, nullity) in [(inter_not_ambi_six_dim3(), Some(3)), (inter_not_ambi_six_dim2(), Some(2))]
        .into_iter()
        .chain(
            [
                inter_not_ambi_sciriha_one(),
                inter_not_ambi_sciriha_two(),
                inter_not_ambi_sciriha_three(),
            ]
            .map(|g| (g, None)),
        )
    {
        let r = classify(&g);
        check(
            r.is_inter_nut && !r.is_ambi_nut && nullity.is_none_or(|k| r.nullity == k),
            "inter-nut that is not ambi",
        );
    }
    let g = deletion_cases();
    check(
        classify_deletion(&g, 4).is_ok_and(|p| p.stratum == Some(Stratum::Upper)),
        "upper deletion verdict",
    );
    check(
        classify_deletion(&g, 5).is_ok_and(|p| p.stratum == Some(Stratum::Middle)),
        "middle deletion verdict",
    );
    check(
        classify_deletion(&deletion_cases_bipartite(), 4).is_ok_and(|p| p.stratum == Some(Stratum::Upper)),
        "upper deletion verdict without the sixth vertex",
    );
    check(
        matches!(deletion_profiles(&Digraph::directed_cycle(3)), Err(Error::NotSingular)),
        "nonsingular digraph has no deletion cases",
    );
    bad
}
