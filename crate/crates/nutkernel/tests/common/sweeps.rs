//! Exhaustive property sweeps shared by the module tests and the acceptance
//! report. Each returns the list of counterexamples.

use nutkernel::enumerate::canonical_digraph;
use nutkernel::families::{circulant, d_family, dicycle_product, m_family};
use nutkernel::spectral::classify;
use nutkernel::Digraph;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Antiprism-based families on even orders in `orders`.
pub fn m_family_sweep(orders: impl Iterator<Item = usize>) -> Vec<String> {
    let mut bad = Vec::new();
    for n in orders.filter(|n| n % 2 == 0) {
        for k in 1..=3u8 {
            let g = m_family(k, n).expect("even order");
            let r = classify(&g);
            let want_ambi = k != 3 || n % 6 != 0;
            let want_nullity = if k == 3 && n % 6 == 0 { 3 } else { 1 };
            if r.is_ambi_nut != want_ambi || r.nullity != want_nullity {
                bad.push(format!("M{k}({n}): ambi {} nullity {}", r.is_ambi_nut, r.nullity));
            }
            if g.underlying() != circulant(n, &[1, 2]).expect("valid jumps") {
                bad.push(format!("M{k}({n}): underlying graph is not Circ(n, {{1, 2}})"));
            }
        }
    }
    bad
}

/// Rose-window-based families.
pub fn d_family_sweep(orders: impl Iterator<Item = usize>) -> Vec<String> {
    let mut bad = Vec::new();
    for n in orders {
        for k in 1..=3u8 {
            let r = classify(&d_family(k, n).expect("order at least 5"));
            let want_nullity = match (n % 2, k) {
                (1, _) => 1,
                (_, 2) if n % 4 == 0 => 4,
                _ => 2,
            };
            if r.is_ambi_nut != (n % 2 == 1) || r.nullity != want_nullity {
                bad.push(format!("D{k}({n}): ambi {} nullity {}", r.is_ambi_nut, r.nullity));
            }
        }
    }
    bad
}

/// Products of two directed cycles.
pub fn dicycle_sweep(max: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for n in 3..=max {
        for m in 3..=max {
            let r = classify(&dicycle_product(n, m).expect("cycles of length 3 or more"));
            let want = (n * m) % 2 == 0 && gcd(n, m) == 1;
            if r.is_ambi_nut != want || r.is_dextro_nut != want || r.is_laevo_nut != want {
                bad.push(format!(
                    "C{n} x C{m}: ambi {} dextro {} laevo {}",
                    r.is_ambi_nut, r.is_dextro_nut, r.is_laevo_nut
                ));
            }
        }
    }
    bad
}

/// Canonical strings of `gs`, sorted.
pub fn canonical_set(gs: &[Digraph]) -> Vec<String> {
    let mut v: Vec<String> = gs
        .iter()
        .map(|g| canonical_digraph(g).expect("small order"))
        .collect();
    v.sort();
    v
}
