use super::extend_code;
use crate::codes::SubspaceCode;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::search::{max_partial_spread, SearchBudget};
use crate::subspace::{enumerate_grassmannian, Subspace};

/// An equidistant code in the projective space of F_2^n with words of
/// dimensions 2 and 4, and the sunflower it enlarges.
#[derive(Clone, Debug)]
pub struct MixedProjectiveCode {
    pub code: SubspaceCode,
    /// `E^2` of the maximum partial 2-spread of F_2^(n-2).
    pub sunflower: SubspaceCode,
    /// Nonzero vectors of F_2^(n-2) missed by the partial spread, in
    /// lexicographic order.
    pub uncovered: Vec<Vec<FieldElement>>,
}

/// For odd `n >= 5`: `E^2(C)` plus `<(0,01),(y,11)>`, `<(0,10),(z,11)>` and
/// `<(0,11),(x,11)>`, where C is a certified maximum partial 2-spread of
/// F_2^(n-2) and x, y, z are its first three uncovered vectors.
pub fn mixed_projective_code(n: usize, budget: SearchBudget) -> Result<MixedProjectiveCode> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("need odd n >= 5, got {n}")));
    }
    let f = FieldCtx::from_order(2)?;
    let m = n - 2;
    let result = max_partial_spread(&f, m, 2, budget)?;
    if !result.certified_optimal {
        return Err(Error::BudgetExhausted(format!(
            "no certified maximum partial 2-spread of F_2^{m} after {} nodes",
            result.nodes_explored
        )));
    }
    let spread = result.best_code;
    let mut uncovered: Vec<Vec<FieldElement>> = enumerate_grassmannian(&f, m, 1)?
        .map(|p| p.basis().row(0).to_vec())
        .filter(|v| !spread.words().any(|w| w.contains_vector(v)))
        .collect();
    uncovered.sort();
    if uncovered.len() < 3 {
        return Err(Error::Precondition(format!(
            "partial spread leaves {} uncovered vectors, need 3",
            uncovered.len()
        )));
    }
    let sunflower = extend_code(&spread, 2)?;
    let tail = |v: &[FieldElement], a: u32, b: u32| -> Vec<FieldElement> {
        v.iter().copied().chain([FieldElement(a), FieldElement(b)]).collect()
    };
    let zero = vec![FieldElement::ZERO; m];
    let (x, y, z) = (&uncovered[0], &uncovered[1], &uncovered[2]);
    let extra =
        [[tail(&zero, 0, 1), tail(y, 1, 1)], [tail(&zero, 1, 0), tail(z, 1, 1)], [tail(&zero, 1, 1), tail(x, 1, 1)]];
    let mut code = sunflower.clone();
    for gens in &extra {
        code.insert(Subspace::from_generators(&f, n, gens)?)?;
    }
    Ok(MixedProjectiveCode { code, sunflower, uncovered })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n5_from_the_spread_of_f2_3() {
        // the maximum partial 2-spread of F_2^3 is one plane, leaving 4 vectors
        let mp = mixed_projective_code(5, SearchBudget::default()).unwrap();
        assert_eq!(mp.uncovered.len(), 4);
        assert_eq!(mp.code.len(), 4);
        let p = mp.code.profile().unwrap();
        assert!(p.is_equidistant);
        assert_eq!(p.min_distance, Some(4));
        assert!(mixed_projective_code(6, SearchBudget::default()).is_err());
    }
}
