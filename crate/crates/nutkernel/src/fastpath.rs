//! Bitmask classification for census work: singularity screens over GF(2)
//! and a 31-bit prime field, then exact machine-word kernels.
//!
//! Row `i` of a matrix is a mask whose bit `j` is the entry `(i, j)`.

use crate::linalg::small_kernel;
use crate::spectral::{classify_rows, NutReport};

/// Largest order handled by the bitmask routines.
pub(crate) const MAX_MASK_ORDER: usize = 32;

const PRIME: u64 = 2_147_483_647;

/// Nut-class flags without witnesses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassFlags {
    pub nullity: usize,
    pub intersection_dim: usize,
    pub dextro: bool,
    pub laevo: bool,
    pub bi: bool,
    pub ambi: bool,
    pub inter: bool,
    pub dextro_core: bool,
    pub laevo_core: bool,
    pub bi_core: bool,
    pub ambi_core: bool,
    pub inter_core: bool,
}

impl From<&NutReport> for ClassFlags {
    fn from(r: &NutReport) -> Self {
        ClassFlags {
            nullity: r.nullity,
            intersection_dim: r.intersection_dim,
            dextro: r.is_dextro_nut,
            laevo: r.is_laevo_nut,
            bi: r.is_bi_nut,
            ambi: r.is_ambi_nut,
            inter: r.is_inter_nut,
            dextro_core: r.is_dextro_core,
            laevo_core: r.is_laevo_core,
            bi_core: r.is_bi_core,
            ambi_core: r.is_ambi_core,
            inter_core: r.is_inter_core,
        }
    }
}

/// Nonsingular over GF(2), hence over the rationals.
pub(crate) fn gf2_nonsingular(rows: &[u32]) -> bool {
    let n = rows.len();
    let mut m = [0u32; MAX_MASK_ORDER];
    m[..n].copy_from_slice(rows);
    for c in 0..n {
        let bit = 1u32 << c;
        let Some(p) = (c..n).find(|&i| m[i] & bit != 0) else {
            return false;
        };
        m.swap(c, p);
        let pivot = m[c];
        for row in m[c + 1..n].iter_mut() {
            if *row & bit != 0 {
                *row ^= pivot;
            }
        }
    }
    true
}

fn inverse_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % PRIME, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % PRIME;
        }
        base = base * base % PRIME;
        exp >>= 1;
    }
    acc
}

/// Nonsingular modulo a 31-bit prime, hence over the rationals.
pub(crate) fn modp_nonsingular(rows: &[u32]) -> bool {
    let n = rows.len();
    let mut m = [[0u64; MAX_MASK_ORDER]; MAX_MASK_ORDER];
    for (i, &r) in rows.iter().enumerate() {
        for (j, e) in m[i][..n].iter_mut().enumerate() {
            *e = (r >> j & 1) as u64;
        }
    }
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
            return false;
        };
        m.swap(c, p);
        let inv = inverse_mod(m[c][c]);
        for i in c + 1..n {
            if m[i][c] == 0 {
                continue;
            }
            let f = m[i][c] * inv % PRIME;
            for j in c..n {
                m[i][j] = (m[i][j] + PRIME - f * m[c][j] % PRIME) % PRIME;
            }
        }
    }
    true
}

/// Quick test that a 0/1 matrix is nonsingular; `false` is inconclusive.
pub(crate) fn surely_nonsingular(rows: &[u32]) -> bool {
    gf2_nonsingular(rows) || modp_nonsingular(rows)
}

fn int_rows(rows: &[u32]) -> Vec<Vec<i64>> {
    let n = rows.len();
    rows.iter()
        .map(|&r| (0..n).map(|j| (r >> j & 1) as i64).collect())
        .collect()
}

fn transpose_masks(rows: &[u32]) -> Vec<u32> {
    let n = rows.len();
    (0..n)
        .map(|j| {
            rows.iter()
                .enumerate()
                .filter(|(_, &r)| r >> j & 1 == 1)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn covers(vectors: &[Vec<i64>], n: usize) -> bool {
    !vectors.is_empty() && (0..n).all(|j| vectors.iter().any(|v| v[j] != 0))
}

fn annihilated(rows: &[u32], x: &[i64]) -> bool {
    rows.iter().all(|&r| {
        (0..rows.len())
            .filter(|&j| r >> j & 1 == 1)
            .map(|j| x[j])
            .sum::<i64>()
            == 0
    })
}

/// Classification of the digraph whose out-neighbourhoods are `out`.
/// Agrees with [`crate::spectral::classify`] on every flag.
pub fn class_flags(out: &[u32]) -> ClassFlags {
    let n = out.len();
    debug_assert!(n <= MAX_MASK_ORDER);
    if n >= 2 && surely_nonsingular(out) {
        return ClassFlags::default();
    }
    exact_flags(out)
}

fn exact_flags(out: &[u32]) -> ClassFlags {
    let n = out.len();
    let inn = transpose_masks(out);
    let a = int_rows(out);
    let at = int_rows(&inn);
    let stacked: Vec<Vec<i64>> = a.iter().chain(&at).cloned().collect();
    let (Some(ker), Some(coker), Some(inter)) = (
        small_kernel(a.clone(), n),
        small_kernel(at, n),
        small_kernel(stacked, n),
    ) else {
        return ClassFlags::from(&classify_rows(n, a));
    };
    let mut f = ClassFlags {
        nullity: ker.len(),
        intersection_dim: if ker.is_empty() { 0 } else { inter.len() },
        ..ClassFlags::default()
    };
    if ker.is_empty() || n == 1 {
        return f;
    }
    let same = ker.iter().all(|x| annihilated(&inn, x));
    f.dextro_core = covers(&ker, n);
    f.laevo_core = covers(&coker, n);
    f.bi_core = f.dextro_core && f.laevo_core;
    f.ambi_core = same && f.dextro_core;
    f.inter_core = covers(&inter, n);
    f.dextro = ker.len() == 1 && f.dextro_core;
    f.laevo = coker.len() == 1 && f.laevo_core;
    f.bi = f.dextro && f.laevo;
    f.ambi = f.bi && same;
    f.inter = inter.len() == 1 && f.inter_core;
    f
}

/// Core-graph test for a symmetric 0/1 matrix: singular, order at least 2,
/// and every vertex supported by some kernel vector.
pub fn is_core_masks(adj: &[u32]) -> bool {
    let n = adj.len();
    if n < 2 || surely_nonsingular(adj) {
        return false;
    }
    let a = int_rows(adj);
    match small_kernel(a.clone(), n) {
        Some(ker) => covers(&ker, n),
        None => classify_rows(n, a).is_dextro_core,
    }
}
