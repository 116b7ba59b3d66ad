//! Canonical subspaces of F_q^n, subspace distance, duals, Gaussian binomials,
//! and exhaustive Grassmannian enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::{dot, Matrix};

/// Default cap on the size of any exhaustively enumerated Grassmannian.
pub const ENUMERATION_GUARD: u64 = 10_000_000;

/// A subspace of F_q^n stored by its RREF basis, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    n: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.data().cmp(other.basis.data()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, k={}, basis={:?})", self.n, self.dim(), self.basis.to_u32_rows())
    }
}

impl Subspace {
    /// The row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let r = m.rref();
        Subspace { n: m.cols(), basis: r.matrix.truncated(r.rank), pivots: r.pivots }
    }

    /// The span of the given vectors of length `n`.
    pub fn from_generators<V: AsRef<[FieldElement]>>(field: &FieldCtx, n: usize, gens: &[V]) -> Result<Subspace> {
        Ok(Self::from_matrix(&Matrix::from_rows(field, n, gens)?))
    }

    pub fn zero(field: &FieldCtx, n: usize) -> Subspace {
        Subspace { n, basis: Matrix::zeros(field, 0, n), pivots: Vec::new() }
    }

    pub fn full(field: &FieldCtx, n: usize) -> Subspace {
        Subspace { n, basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// Span of the first `k` unit vectors.
    pub fn coordinate(field: &FieldCtx, n: usize, k: usize) -> Subspace {
        assert!(k <= n);
        let mut m = Matrix::zeros(field, k, n);
        for i in 0..k {
            m.set(i, i, FieldElement::ONE);
        }
        Subspace { n, basis: m, pivots: (0..k).collect() }
    }

    #[inline]
    pub fn field(&self) -> &FieldCtx {
        self.basis.field()
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::ShapeMismatch(format!("ambient dimensions {} and {}", self.n, other.n)));
        }
        Ok(())
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = self.field();
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for (j, &b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    w[j] = f.sub(w[j], f.mul(c, b));
                }
            }
        }
        w.iter().all(|e| e.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.n == other.n && self.field() == other.field() && other.basis.row_vectors().all(|r| self.contains_vector(r))
    }

    /// `X + Y`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    fn sum_dim(&self, other: &Subspace) -> usize {
        self.basis.vstack(&other.basis).expect("compatible").rank()
    }

    /// `X ∩ Y` by the Zassenhaus construction.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.n;
        let f = self.field();
        let top = self.basis.hstack(&self.basis)?;
        let bottom = other.basis.hstack(&Matrix::zeros(f, other.dim(), n))?;
        let r = top.vstack(&bottom)?.rref();
        let sum_dim = r.pivots.iter().filter(|&&p| p < n).count();
        let rows: Vec<Vec<FieldElement>> =
            r.pivots.iter().enumerate().filter(|(_, &p)| p >= n).map(|(i, _)| r.matrix.row(i)[n..].to_vec()).collect();
        let meet = Self::from_generators(f, n, &rows)?;
        debug_assert_eq!(meet.dim() + sum_dim, self.dim() + other.dim());
        Ok(meet)
    }

    /// `dim X + dim Y - 2 dim(X ∩ Y)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(2 * self.sum_dim(other) - self.dim() - other.dim())
    }

    /// `dim(X ∩ Y)` without building the intersection.
    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(self.dim() + other.dim() - self.sum_dim(other))
    }

    /// Dual under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Self::full(self.field(), self.n);
        }
        let k = self.basis.kernel();
        let out = Self::from_matrix(&k);
        debug_assert!(out
            .basis
            .row_vectors()
            .all(|u| self.basis.row_vectors().all(|v| dot(self.field(), u, v).is_zero())));
        out
    }

    /// `(X, 0)` in ambient dimension `n + extra`.
    pub fn pad_zeros(&self, extra: usize) -> Subspace {
        let z = Matrix::zeros(self.field(), self.dim(), extra);
        let basis = self.basis.hstack(&z).expect("same row count");
        Subspace { n: self.n + extra, basis, pivots: self.pivots.clone() }
    }

    /// All q^k vectors of the subspace, coefficient vectors counted in order.
    pub fn vectors(&self) -> Vec<Vec<FieldElement>> {
        let f = self.field();
        let q = f.order() as u64;
        let k = self.dim();
        let total = q.pow(k as u32);
        let mut out = Vec::with_capacity(total as usize);
        for mut idx in 0..total {
            let mut v = vec![FieldElement::ZERO; self.n];
            for row in 0..k {
                let c = FieldElement((idx % q) as u32);
                idx /= q;
                if c.is_zero() {
                    continue;
                }
                for (j, &b) in self.basis.row(row).iter().enumerate() {
                    v[j] = f.add(v[j], f.mul(c, b));
                }
            }
            out.push(v);
        }
        out
    }

    /// Nonzero vectors normalized so the first nonzero coordinate is one.
    pub fn projective_points(&self) -> Vec<Vec<FieldElement>> {
        self.vectors().into_iter().filter(|v| v.iter().find(|e| !e.is_zero()) == Some(&FieldElement::ONE)).collect()
    }

    pub fn to_u32_rows(&self) -> Vec<Vec<u32>> {
        self.basis.to_u32_rows()
    }
}

/// Scales a nonzero vector so its first nonzero coordinate is one; zero stays zero.
pub fn normalize(field: &FieldCtx, v: &[FieldElement]) -> Vec<FieldElement> {
    match v.iter().find(|e| !e.is_zero()) {
        None => v.to_vec(),
        Some(&lead) => {
            let inv = field.inv(lead).expect("nonzero");
            v.iter().map(|&e| field.mul(inv, e)).collect()
        }
    }
}

/// The Gaussian binomial coefficient, the number of k-subspaces of F_q^n.
pub fn qbinom(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    let (quot, r) = (num.clone() / &den, num % &den);
    debug_assert!(r.is_zero());
    quot
}

/// Every subspace of `G_q(n, k)` exactly once, in ascending [`Subspace`] order.
pub fn enumerate_grassmannian(field: &FieldCtx, n: usize, k: usize) -> Result<GrassmannianIter> {
    enumerate_grassmannian_with_guard(field, n, k, ENUMERATION_GUARD)
}

pub fn enumerate_grassmannian_with_guard(field: &FieldCtx, n: usize, k: usize, guard: u64) -> Result<GrassmannianIter> {
    let count = qbinom(n as u64, k as u64, field.order() as u64);
    if count > BigUint::from(guard) {
        return Err(Error::GuardExceeded { count: count.to_string(), limit: guard });
    }
    let total = count.to_u64().expect("below guard");
    Ok(GrassmannianIter::new(field, n, k, total))
}

/// Iterator behind [`enumerate_grassmannian`].
pub struct GrassmannianIter {
    field: FieldCtx,
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    remaining: u64,
    done: bool,
}

impl GrassmannianIter {
    fn new(field: &FieldCtx, n: usize, k: usize, total: u64) -> Self {
        let pivots: Vec<usize> = (0..k).collect();
        let mut it = GrassmannianIter {
            field: field.clone(),
            n,
            k,
            pivots,
            free: Vec::new(),
            counter: Vec::new(),
            remaining: total,
            done: k > n,
        };
        if !it.done {
            it.reset_free();
        }
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        for (row, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !self.pivots.contains(&c) {
                    self.free.push((row, c));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let mut m = Matrix::zeros(&self.field, self.k, self.n);
        for (row, &p) in self.pivots.iter().enumerate() {
            m.set(row, p, FieldElement::ONE);
        }
        for (&(r, c), &v) in self.free.iter().zip(&self.counter) {
            m.set(r, c, FieldElement(v));
        }
        Subspace { n: self.n, basis: m, pivots: self.pivots.clone() }
    }

    fn advance(&mut self) {
        let q = self.field.order();
        for i in (0..self.counter.len()).rev() {
            self.counter[i] += 1;
            if self.counter[i] < q {
                return;
            }
            self.counter[i] = 0;
        }
        // next pivot combination in lexicographic order
        let (n, k) = (self.n, self.k);
        let Some(i) = (0..k).rev().find(|&i| self.pivots[i] < n - k + i) else {
            self.done = true;
            return;
        };
        self.pivots[i] += 1;
        for j in i + 1..k {
            self.pivots[j] = self.pivots[j - 1] + 1;
        }
        self.reset_free();
    }
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let s = self.current();
        self.remaining = self.remaining.saturating_sub(1);
        self.advance();
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = if self.done { 0 } else { self.remaining as usize };
        (r, Some(r))
    }
}
