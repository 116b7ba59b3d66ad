//! Explicit equidistant codes: spreads and their extensions (sunflowers),
//! balls, duals, the Steiner design of lines, Plücker codes and their
//! recursive form, a fixed 16-word code in G_2(6,3), and a mixed-dimension
//! equidistant code.

mod example;
mod mixed;
mod plucker;
mod recursive;
mod steiner;

use num_bigint::BigUint;

pub use example::{example_code_g2_6_3, EXAMPLE_G2_6_3_EXPONENTS};
pub use mixed::{mixed_projective_code, MixedProjectiveCode};
pub use plucker::{lines_through, plucker_code, plucker_codeword, plucker_embed, PluckerIndex};
pub use recursive::{recursive_plucker_code, recursive_step};
pub use steiner::{steiner_from_grassmannian, IncidenceMatrix};

use crate::codes::{partial_spread_bounds, SubspaceCode};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::Matrix;
use crate::poly::first_irreducible;
use crate::search::{max_partial_spread, SearchBudget};
use crate::subspace::{enumerate_grassmannian, Subspace};

/// The k-spread of F_q^n obtained from the 1-subspaces of F_{q^k}^{n/k}.
///
/// F_{q^k} is realised as the matrix algebra F_q[C] of a companion matrix C,
/// and each projective point `(A_1, ..., A_s)` with leading block `I` gives the
/// word `rowspan [A_1 | ... | A_s]`.
pub fn spread(field: &FieldCtx, n: usize, k: usize) -> Result<SubspaceCode> {
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::InvalidParameters(format!("a k-spread needs k | n, got k = {k}, n = {n}")));
    }
    let s = n / k;
    let blocks = field_matrices(field, k);
    let q_k = blocks.len();
    let identity = Matrix::identity(field, k);
    let zero = Matrix::zeros(field, k, k);
    let mut code = SubspaceCode::empty(field, n);
    for lead in 0..s {
        let tail = s - 1 - lead;
        for mut idx in 0..(q_k as u64).pow(tail as u32) {
            let mut m = Matrix::zeros(field, k, 0);
            for _ in 0..lead {
                m = m.hstack(&zero)?;
            }
            m = m.hstack(&identity)?;
            for _ in 0..tail {
                m = m.hstack(&blocks[(idx % q_k as u64) as usize])?;
                idx /= q_k as u64;
            }
            code.insert(Subspace::from_matrix(&m))?;
        }
    }
    Ok(code)
}

/// All q^k matrices `sum c_i C^i` with C the companion matrix of the first
/// monic irreducible polynomial of degree k.
fn field_matrices(field: &FieldCtx, k: usize) -> Vec<Matrix> {
    let g = first_irreducible(field, k).expect("irreducible polynomials exist in every degree");
    let mut c = Matrix::zeros(field, k, k);
    for i in 1..k {
        c.set(i, i - 1, FieldElement::ONE);
    }
    for (i, &gi) in g[..k].iter().enumerate() {
        c.set(i, k - 1, field.neg(gi));
    }
    let mut powers = vec![Matrix::identity(field, k)];
    for i in 1..k {
        let next = powers[i - 1].mul(&c).expect("square");
        powers.push(next);
    }
    let q = field.order() as u64;
    (0..q.pow(k as u32))
        .map(|mut idx| {
            let mut acc = Matrix::zeros(field, k, k);
            for p in &powers {
                let coeff = FieldElement((idx % q) as u32);
                idx /= q;
                acc = acc.add(&p.scale(coeff)).expect("same shape");
            }
            acc
        })
        .collect()
}

/// Applies the extension `l` times: each word X becomes `span((X, 0), e_new)`.
pub fn extend_code(code: &SubspaceCode, l: usize) -> Result<SubspaceCode> {
    if l == 0 {
        return Err(Error::InvalidParameters("extension count must be at least 1".into()));
    }
    let field = code.field();
    let n = code.ambient();
    let mut tail = Matrix::zeros(field, l, n);
    tail = tail.hstack(&Matrix::identity(field, l))?;
    let words = code.words().map(|w| {
        let padded = w.pad_zeros(l);
        Subspace::from_matrix(&padded.basis().vstack(&tail).expect("same width"))
    });
    SubspaceCode::new(field, n + l, words.collect::<Vec<_>>())
}

/// A t-intersecting sunflower with the size it was meant to reach.
#[derive(Clone, Debug)]
pub struct SunflowerCode {
    pub code: SubspaceCode,
    /// Largest known size of a t-intersecting sunflower in G_q(n, k): the
    /// exact partial-spread value, or its constructive lower bound.
    pub target: BigUint,
    pub target_met: bool,
    /// Whether the underlying partial spread is known to be maximum.
    pub certified: bool,
}

/// `E^t` of a (k-t)-spread of F_q^(n-t), or of the best partial spread the
/// search finds within `budget` when `k - t` does not divide `n - t`.
pub fn sunflower(field: &FieldCtx, n: usize, k: usize, t: usize, budget: SearchBudget) -> Result<SunflowerCode> {
    if !(t < k && k <= n) {
        return Err(Error::InvalidParameters(format!("need t < k <= n, got t = {t}, k = {k}, n = {n}")));
    }
    let (m, j) = (n - t, k - t);
    let bounds = partial_spread_bounds(field.order() as u64, m as u64, j as u64)?;
    let target = bounds.exact.clone().unwrap_or(bounds.lower.clone());
    let (petals, certified) = if m % j == 0 {
        (spread(field, m, j)?, true)
    } else {
        let r = max_partial_spread(field, m, j, budget)?;
        (r.best_code, r.certified_optimal)
    };
    let code = if t == 0 { petals } else { extend_code(&petals, t)? };
    let target_met = BigUint::from(code.len()) >= target;
    Ok(SunflowerCode { code, target, target_met, certified: certified || bounds.exact.is_some() && target_met })
}

/// All k-subspaces of `span(e_1, ..., e_{k+1})` inside F_q^n.
pub fn ball(field: &FieldCtx, n: usize, k: usize) -> Result<SubspaceCode> {
    if k + 1 > n {
        return Err(Error::InvalidParameters(format!("a ball needs k + 1 <= n, got k = {k}, n = {n}")));
    }
    let words: Vec<Subspace> = enumerate_grassmannian(field, k + 1, k)?.map(|w| w.pad_zeros(n - k - 1)).collect();
    SubspaceCode::new(field, n, words)
}

/// The code of orthogonal complements of a constant-dimension code.
pub fn orthogonal_code(code: &SubspaceCode) -> Result<SubspaceCode> {
    if code.constant_dimension().is_none() && !code.is_empty() {
        return Err(Error::InvalidParameters("orthogonal code needs a constant-dimension code".into()));
    }
    let words: Vec<Subspace> = code.words().map(Subspace::orthogonal_complement).collect();
    SubspaceCode::new(code.field(), code.ambient(), words)
}
