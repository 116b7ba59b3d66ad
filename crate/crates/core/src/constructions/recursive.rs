use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::plucker::{plucker_code, plucker_codeword};
use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::Matrix;
use crate::rankmetric::x_vector;
use crate::subspace::{enumerate_grassmannian, qbinom, Subspace};

fn unit(field: &FieldCtx, n: usize, j: usize) -> Vec<FieldElement> {
    let mut e = vec![field.zero(); n];
    e[j] = field.one();
    e
}

/// Builds the Plücker code for `n` from the one for `n - 1`.
///
/// Coordinates of F_q^C(n,2) are in lexicographic pair order, which already
/// lists the `n - 1` pairs `{0, t}` first and then the pairs inside `1..n` in
/// lexicographic order, matching the block layout
/// `[F_q^(n-1) | F_q^C(n-1,2)]` used here.
pub fn recursive_step(prev: &SubspaceCode, field: &FieldCtx, n: usize) -> Result<SubspaceCode> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!("recursive step needs n >= 4, got {n}")));
    }
    let m = n - 1;
    let prev_cols = m * (m - 1) / 2;
    let want = qbinom(m as u64, 1, field.order() as u64).to_usize().unwrap_or(usize::MAX);
    if prev.field() != field || prev.ambient() != prev_cols || prev.len() != want {
        return Err(Error::Precondition(format!(
            "previous code must be the Plücker code for n = {m}: {want} words in ambient {prev_cols}"
        )));
    }
    let prof = prev.profile()?;
    if prof.dimension_set.iter().ne([m - 1].iter()) || (m > 2 && prof.t != Some(1)) {
        return Err(Error::Precondition(format!("previous code is not 1-intersecting in G_q({prev_cols}, {})", m - 1)));
    }
    let labels: HashMap<Subspace, Subspace> =
        enumerate_grassmannian(field, m, 1)?.map(|v| plucker_codeword(&v).map(|p| (p, v))).collect::<Result<_>>()?;

    let cols = n * (n - 1) / 2;
    let mut out = SubspaceCode::empty(field, cols);
    for word in prev.words() {
        let line = labels.get(word).ok_or_else(|| {
            Error::Precondition("previous code contains a word that is not a Plücker codeword".into())
        })?;
        let v = line.basis().row(0);
        let r = line.pivots()[0];

        let mut rows = vec![[v, &vec![field.zero(); prev_cols][..]].concat()];
        for j in (0..m).filter(|&j| j != r) {
            rows.push([vec![field.zero(); m], x_vector(field, v, &unit(field, m, j))?].concat());
        }
        out.insert(Subspace::from_matrix(&Matrix::from_rows(field, cols, &rows)?))?;

        let xs: Vec<Vec<FieldElement>> =
            (0..m).map(|j| x_vector(field, v, &unit(field, m, j))).collect::<Result<_>>()?;
        for a in field.elements().skip(1) {
            let rows: Vec<Vec<FieldElement>> = (0..m)
                .map(|i| {
                    let scaled = xs[i].iter().map(|&x| field.mul(a, x));
                    unit(field, m, i).into_iter().chain(scaled).collect()
                })
                .collect();
            out.insert(Subspace::from_matrix(&Matrix::from_rows(field, cols, &rows)?))?;
        }
    }
    let u0 = Matrix::identity(field, m).hstack(&Matrix::zeros(field, m, prev_cols))?;
    out.insert(Subspace::from_matrix(&u0))?;
    Ok(out)
}

/// The Plücker code for `n`, built from `n = 3` by repeated [`recursive_step`].
pub fn recursive_plucker_code(field: &FieldCtx, n: usize) -> Result<SubspaceCode> {
    let mut code = plucker_code(field, 3)?;
    for step in 4..=n {
        code = recursive_step(&code, field, step)?;
    }
    Ok(code)
}
