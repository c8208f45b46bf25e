//! Exact rational linear algebra: fraction-free elimination, canonical
//! kernel bases, subspace intersection and full-vector witnesses.
//!
//! Elimination runs on integer matrices. A machine-word pass is tried first
//! and the computation is repeated on big integers if any product overflows,
//! so results never depend on word size.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    /// Matrix with the given integer rows; all rows must have length `cols`.
    pub fn from_int_rows(cols: usize, data: &[Vec<i64>]) -> Self {
        Self::from_fn(data.len(), cols, |i, j| BigRational::from_integer(data[i][j].into()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The matrix with row `r` removed.
    pub fn without_row(&self, r: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&i| i != r).collect();
        Self::from_fn(keep.len(), self.cols, |i, j| self.get(keep[i], j).clone())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Integer rows spanning the same row space (each row scaled by the lcm
    /// of its denominators).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect()
            })
            .collect()
    }
}

/// Adjacency matrix: entry `(i, j)` is 1 iff `i -> j`.
pub fn adjacency_matrix(g: &Digraph) -> RatMatrix {
    let n = g.order();
    let mut m = RatMatrix::zeros(n, n);
    for (u, v) in g.arcs() {
        m.set(u, v, BigRational::one());
    }
    m
}

/// Canonical basis of a rational subspace: rows in reduced row-echelon form
/// with leading entry 1 at strictly increasing pivot columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KernelBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl KernelBasis {
    /// Canonical basis of the span of arbitrary rational vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<BigRational>]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        let m = RatMatrix {
            rows: vectors.len(),
            cols: ambient_dim,
            entries: vectors.iter().flatten().cloned().collect(),
        };
        Ok(Self::from_integer_rows(ambient_dim, m.integer_rows()))
    }

    pub(crate) fn from_integer_rows(ambient_dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let ech = eliminate_big(rows, ambient_dim);
        let vectors = ech
            .rows
            .iter()
            .zip(&ech.pivots)
            .map(|(row, &p)| {
                row.iter()
                    .map(|a| BigRational::new(a.clone(), row[p].clone()))
                    .collect()
            })
            .collect();
        KernelBasis {
            ambient_dim,
            vectors,
            pivots: ech.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `support()[v]` is true iff some basis vector is nonzero at `v`.
    pub fn support(&self) -> Vec<bool> {
        (0..self.ambient_dim)
            .map(|j| self.vectors.iter().any(|v| !v[j].is_zero()))
            .collect()
    }

    /// True iff `x` lies in the subspace.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        if x.len() != self.ambient_dim {
            return false;
        }
        // reduce by the echelon rows; a member reduces to zero
        let mut r: Vec<BigRational> = x.to_vec();
        for (v, &p) in self.vectors.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (rj, vj) in r.iter_mut().zip(v) {
                    if !vj.is_zero() {
                        *rj -= &f * vj;
                    }
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    /// Each basis vector scaled to integers with content 1.
    pub fn integer_vectors(&self) -> Vec<Vec<BigInt>> {
        self.vectors.iter().map(|v| to_primitive_integer(v)).collect()
    }
}

/// Scales a rational vector to an integer vector with gcd 1 and first
/// nonzero entry positive. The zero vector maps to itself.
pub fn to_primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    normalize_integer(ints)
}

/// Divides by the content and fixes the sign so the first nonzero entry is
/// positive.
pub fn normalize_integer(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if g.is_zero() {
        return v;
    }
    let negate = v.iter().find(|a| !a.is_zero()).is_some_and(|a| a.is_negative());
    for a in &mut v {
        *a = &*a / &g;
        if negate {
            *a = -&*a;
        }
    }
    v
}

/// Canonical right-kernel basis of `m`.
pub fn kernel_basis(m: &RatMatrix) -> KernelBasis {
    let rows = m.integer_rows();
    let raw = integer_kernel_big(rows, m.cols);
    KernelBasis::from_integer_rows(m.cols, raw)
}

/// Canonical right-kernel basis of an integer matrix given by rows.
pub fn kernel_basis_int(rows: &[Vec<i64>], cols: usize) -> KernelBasis {
    KernelBasis::from_integer_rows(cols, integer_kernel(rows, cols))
}

/// Exact rank.
pub fn rank(m: &RatMatrix) -> usize {
    eliminate_big(m.integer_rows(), m.cols).pivots.len()
}

/// Exact rank of an integer matrix given by rows.
pub fn rank_int(rows: &[Vec<i64>], cols: usize) -> usize {
    match eliminate_small(rows.to_vec(), cols) {
        Some(e) => e.pivots.len(),
        None => eliminate_big(to_big_rows(rows), cols).pivots.len(),
    }
}

/// Intersection of two subspaces, computed as the kernel of the stacked
/// annihilator constraints.
pub fn intersect(b1: &KernelBasis, b2: &KernelBasis) -> Result<KernelBasis> {
    if b1.ambient_dim != b2.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: b1.ambient_dim,
            found: b2.ambient_dim,
        });
    }
    let n = b1.ambient_dim;
    let mut constraints = annihilator(b1);
    constraints.extend(annihilator(b2));
    let raw = integer_kernel_big(constraints, n);
    Ok(KernelBasis::from_integer_rows(n, raw))
}

/// Integer rows whose common kernel is exactly the span of `b`.
fn annihilator(b: &KernelBasis) -> Vec<Vec<BigInt>> {
    let rows = b.integer_vectors();
    integer_kernel_big(rows, b.ambient_dim)
}

/// A full vector in the span of `b`, if one exists.
///
/// One exists iff the support of the basis covers every coordinate. The
/// witness is `sum_i t^i b_i` over the integer-scaled basis vectors with
/// `t = 1 + max |entry|`: at each coordinate the term of the
/// highest-indexed contributing vector dominates the rest, so nothing
/// cancels. The result is made primitive with first nonzero entry positive.
pub fn full_vector_witness(b: &KernelBasis) -> Option<Vec<BigInt>> {
    if b.ambient_dim == 0 || b.support().iter().any(|&s| !s) {
        return None;
    }
    Some(full_combination(&b.integer_vectors(), b.ambient_dim))
}

/// The no-cancellation combination of integer vectors described at
/// [`full_vector_witness`]. Caller guarantees the supports cover all
/// coordinates.
pub fn full_combination(vectors: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    let max = vectors
        .iter()
        .flatten()
        .map(|a| a.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let t = max + 1;
    let mut w = vec![BigInt::zero(); dim];
    let mut mult = BigInt::one();
    for v in vectors {
        for (wj, vj) in w.iter_mut().zip(v) {
            if !vj.is_zero() {
                *wj += &mult * vj;
            }
        }
        mult *= &t;
    }
    debug_assert!(w.iter().all(|a| !a.is_zero()));
    normalize_integer(w)
}

/// Canonical basis of the `lambda`-eigenspace, i.e. `Ker(M - lambda I)`.
pub fn eigenspace_basis(m: &RatMatrix, lambda: i64) -> Result<KernelBasis> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let mut shifted = m.clone();
    let l = BigRational::from_integer(lambda.into());
    for i in 0..m.rows {
        let d = shifted.get(i, i) - &l;
        shifted.set(i, i, d);
    }
    Ok(kernel_basis(&shifted))
}

// ---------------------------------------------------------------------------
// fraction-free Gauss-Jordan elimination

/// Integer arithmetic used by the elimination; `None` signals overflow.
trait Exact: Clone + Sized {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// `(a*b - c*d) / e`, where the division is known to be exact.
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl Exact for i64 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    #[inline]
    fn cross(a: &i64, b: &i64, c: &i64, d: &i64, e: &i64) -> Option<i64> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert!(x % e == 0, "Bareiss quotient must be integral");
        Some(x / e)
    }
}

impl Exact for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn cross(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, e: &BigInt) -> Option<BigInt> {
        let mut x = a * b;
        if !Zero::is_zero(c) && !Zero::is_zero(d) {
            x -= c * d;
        }
        if e.is_one() {
            return Some(x);
        }
        let (q, r) = x.div_rem(e);
        debug_assert!(Zero::is_zero(&r), "Bareiss quotient must be integral");
        let _ = r;
        Some(q)
    }
}

/// Result of fraction-free Gauss-Jordan elimination: the nonzero rows of
/// the reduced form scaled so that every pivot entry equals `scale`.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    scale: T,
}

fn eliminate<T: Exact>(mut m: Vec<Vec<T>>, cols: usize) -> Option<Echelon<T>> {
    let nrows = m.len();
    let mut prev = T::unit();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_nil()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        let piv = pivot_row[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for j in 0..cols {
                row[j] = T::cross(&piv, &row[j], &f, &pivot_row[j], &prev)?;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Some(Echelon {
        rows: m,
        pivots,
        scale: prev,
    })
}

fn kernel_from_echelon<T: Exact>(e: &Echelon<T>, cols: usize) -> Option<Vec<Vec<T>>> {
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|&f| !is_pivot[f]) {
        let mut x = vec![T::nil(); cols];
        x[f] = e.scale.clone();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            x[p] = row[f].neg()?;
        }
        out.push(x);
    }
    Some(out)
}

fn eliminate_small(m: Vec<Vec<i64>>, cols: usize) -> Option<Echelon<i64>> {
    eliminate(m, cols)
}

fn eliminate_big(m: Vec<Vec<BigInt>>, cols: usize) -> Echelon<BigInt> {
    eliminate(m, cols).expect("big integers do not overflow")
}

fn to_big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
        .collect()
}

/// Kernel basis (not canonicalised) of an integer matrix.
pub(crate) fn integer_kernel(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<BigInt>> {
    if let Some(e) = eliminate_small(rows.to_vec(), cols) {
        if let Some(k) = kernel_from_echelon(&e, cols) {
            return k
                .into_iter()
                .map(|v| v.into_iter().map(BigInt::from).collect())
                .collect();
        }
    }
    integer_kernel_big(to_big_rows(rows), cols)
}

fn integer_kernel_big(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    if let Some(small) = try_small(&rows) {
        if let Some(e) = eliminate_small(small, cols) {
            if let Some(k) = kernel_from_echelon(&e, cols) {
                return k
                    .into_iter()
                    .map(|v| v.into_iter().map(BigInt::from).collect())
                    .collect();
            }
        }
    }
    let e = eliminate_big(rows, cols);
    kernel_from_echelon(&e, cols).expect("big integers do not overflow")
}

fn try_small(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i64>>> {
    rows.iter()
        .map(|r| r.iter().map(|a| a.to_i64()).collect::<Option<Vec<_>>>())
        .collect()
}

/// Kernel basis of a small integer matrix computed in machine words only;
/// `None` if any intermediate value overflows.
pub(crate) fn small_kernel(rows: Vec<Vec<i64>>, cols: usize) -> Option<Vec<Vec<i64>>> {
    let e = eliminate_small(rows, cols)?;
    kernel_from_echelon(&e, cols)
}
