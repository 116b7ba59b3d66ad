//! The equidistant constant-rank code `{M_v : v != 0}` of `n x C(n,2)`
//! matrices, where row j of `M_v` is the minor vector `X_{v,e_j}`.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::{rank_distance, Matrix};

/// Largest `q^n` accepted by [`rank_code`].
pub const RANK_CODE_GUARD: u64 = 1_000_000;

/// `X_{v,u}`: coordinate `{s,t}` (lexicographic) is `v_s u_t - v_t u_s`.
pub fn x_vector(field: &FieldCtx, v: &[FieldElement], u: &[FieldElement]) -> Result<Vec<FieldElement>> {
    if v.len() != u.len() {
        return Err(Error::ShapeMismatch(format!("vectors of length {} and {}", v.len(), u.len())));
    }
    let n = v.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for s in 0..n {
        for t in s + 1..n {
            out.push(field.sub(field.mul(v[s], u[t]), field.mul(v[t], u[s])));
        }
    }
    Ok(out)
}

/// The 2x2 minors of a two-row matrix.
pub fn phi(m: &Matrix) -> Result<Vec<FieldElement>> {
    if m.rows() != 2 {
        return Err(Error::ShapeMismatch(format!("phi needs 2 rows, got {}", m.rows())));
    }
    x_vector(m.field(), m.row(0), m.row(1))
}

/// `M_v`, the `n x C(n,2)` matrix with rows `X_{v,e_1}, ..., X_{v,e_n}`.
pub fn m_matrix(field: &FieldCtx, v: &[FieldElement]) -> Matrix {
    let n = v.len();
    let rows: Vec<Vec<FieldElement>> = (0..n)
        .map(|j| {
            let mut e = vec![FieldElement::ZERO; n];
            e[j] = FieldElement::ONE;
            x_vector(field, v, &e).expect("equal lengths")
        })
        .collect();
    Matrix::from_rows(field, n * n.saturating_sub(1) / 2, &rows).expect("rows have length C(n,2)")
}

/// A set of equal-shape matrices over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCode {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    words: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub size: usize,
    pub rank_set: BTreeSet<usize>,
    pub distance_set: BTreeSet<usize>,
}

impl RankProfile {
    pub fn is_constant_rank(&self) -> bool {
        self.rank_set.len() == 1
    }

    pub fn is_equidistant(&self) -> bool {
        self.distance_set.len() <= 1
    }
}

impl RankCode {
    pub fn new(field: &FieldCtx, rows: usize, cols: usize, words: Vec<Matrix>) -> Result<Self> {
        for w in &words {
            if w.field() != field {
                return Err(Error::FieldMismatch);
            }
            if (w.rows(), w.cols()) != (rows, cols) {
                return Err(Error::ShapeMismatch(format!("{}x{} word in a {rows}x{cols} code", w.rows(), w.cols())));
            }
        }
        Ok(RankCode { field: field.clone(), rows, cols, words })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn words(&self) -> &[Matrix] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Ranks of all words and rank distances of all pairs.
    pub fn profile(&self) -> RankProfile {
        let rank_set = self.words.iter().map(Matrix::rank).collect();
        let mut distance_set = BTreeSet::new();
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                distance_set.insert(rank_distance(a, b).expect("same shape"));
            }
        }
        RankProfile { size: self.words.len(), rank_set, distance_set }
    }
}

/// All vectors of F_q^n, counted with the first coordinate least significant.
pub fn all_vectors(field: &FieldCtx, n: usize) -> impl Iterator<Item = Vec<FieldElement>> {
    let q = field.order() as u64;
    (0..q.pow(n as u32)).map(move |mut idx| {
        (0..n)
            .map(|_| {
                let c = FieldElement((idx % q) as u32);
                idx /= q;
                c
            })
            .collect()
    })
}

/// `{M_v : v in F_q^n, v != 0}`.
pub fn rank_code(field: &FieldCtx, n: usize) -> Result<RankCode> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("rank code needs n >= 2, got {n}")));
    }
    let size = BigUint::from(field.order()).pow(n as u32);
    if size > BigUint::from(RANK_CODE_GUARD) {
        return Err(Error::GuardExceeded { count: size.to_string(), limit: RANK_CODE_GUARD });
    }
    let words = all_vectors(field, n).skip(1).map(|v| m_matrix(field, &v)).collect();
    RankCode::new(field, n, n * (n - 1) / 2, words)
}
