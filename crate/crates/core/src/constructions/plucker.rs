use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::rankmetric::x_vector;
use crate::subspace::{enumerate_grassmannian, Subspace};

/// Coordinates of F_q^C(n,2) labelled by 2-subsets `{s, t}` of `0..n` in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerIndex {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PluckerIndex {
    pub fn new(n: usize) -> Self {
        let pairs = (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).collect();
        PluckerIndex { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `C(n, 2)`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, position: usize) -> (usize, usize) {
        self.pairs[position]
    }

    /// Position of `{s, t}`, `s < t < n`.
    pub fn position(&self, s: usize, t: usize) -> usize {
        assert!(s < t && t < self.n, "invalid pair ({s}, {t}) for n = {}", self.n);
        s * (2 * self.n - s - 1) / 2 + (t - s - 1)
    }
}

/// The point of F_q^C(n,2) given by the 2x2 minors of a basis of `u`.
pub fn plucker_embed(u: &Subspace) -> Result<Subspace> {
    if u.dim() != 2 {
        return Err(Error::InvalidParameters(format!(
            "Plücker embedding needs a 2-subspace, got dimension {}",
            u.dim()
        )));
    }
    let b = u.basis();
    let v = x_vector(u.field(), b.row(0), b.row(1))?;
    Subspace::from_generators(u.field(), v.len(), &[v])
}

/// `P_V = span{X_{v,e_j} : j != r}` with `r` the first nonzero coordinate of `v`.
pub fn plucker_codeword(v: &Subspace) -> Result<Subspace> {
    if v.dim() != 1 {
        return Err(Error::InvalidParameters(format!(
            "Plücker codeword needs a 1-subspace, got dimension {}",
            v.dim()
        )));
    }
    let f = v.field();
    let n = v.ambient();
    let vec = v.basis().row(0);
    let r = v.pivots()[0];
    let mut gens = Vec::with_capacity(n - 1);
    for j in (0..n).filter(|&j| j != r) {
        let mut e = vec![f.zero(); n];
        e[j] = f.one();
        gens.push(x_vector(f, vec, &e)?);
    }
    Subspace::from_generators(f, n * (n - 1) / 2, &gens)
}

/// The 2-subspaces of the ambient space containing the 1-subspace `v`.
pub fn lines_through(v: &Subspace) -> Result<Vec<Subspace>> {
    Ok(enumerate_grassmannian(v.field(), v.ambient(), 2)?.filter(|u| u.contains(v)).collect())
}

/// `{P_V : V in G_q(n, 1)}`, a 1-intersecting code in G_q(C(n,2), n-1).
pub fn plucker_code(field: &FieldCtx, n: usize) -> Result<SubspaceCode> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("Plücker code needs n >= 3, got {n}")));
    }
    let words = enumerate_grassmannian(field, n, 1)?.map(|v| plucker_codeword(&v)).collect::<Result<Vec<_>>>()?;
    SubspaceCode::new(field, n * (n - 1) / 2, words)
}
