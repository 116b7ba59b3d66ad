use crate::codes::SubspaceCode;
use crate::gf::{FieldCtx, FieldElement};
use crate::subspace::Subspace;

/// Exponents i of α for the three generators `α^i` of each word, α a root of
/// `x^6 + x + 1` in GF(64).
pub const EXAMPLE_G2_6_3_EXPONENTS: [[u64; 3]; 16] = [
    [0, 1, 2],
    [0, 15, 10],
    [6, 52, 51],
    [12, 54, 15],
    [10, 26, 25],
    [18, 1, 59],
    [33, 20, 59],
    [49, 26, 46],
    [12, 9, 29],
    [25, 0, 58],
    [41, 2, 36],
    [36, 34, 30],
    [6, 5, 33],
    [19, 10, 6],
    [58, 6, 49],
    [36, 29, 26],
];

/// A non-sunflower 1-intersecting code of 16 words in G_2(6,3); GF(64) is
/// identified with F_2^6 through coordinates in the basis `1, α, ..., α^5`.
pub fn example_code_g2_6_3() -> SubspaceCode {
    let big = FieldCtx::new(2, 6, Some(&[1, 1, 0, 0, 0, 0, 1])).expect("x^6 + x + 1 is primitive");
    let f2 = FieldCtx::from_order(2).expect("GF(2)");
    let alpha = FieldElement(2);
    let words = EXAMPLE_G2_6_3_EXPONENTS.iter().map(|triple| {
        let gens: Vec<Vec<FieldElement>> = triple
            .iter()
            .map(|&e| big.element_to_vector(big.pow(alpha, e)).into_iter().map(FieldElement).collect())
            .collect();
        Subspace::from_generators(&f2, 6, &gens).expect("length-6 vectors")
    });
    SubspaceCode::new(&f2, 6, words.collect::<Vec<_>>()).expect("one field and ambient")
}
