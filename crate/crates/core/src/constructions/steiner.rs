use std::collections::BTreeSet;

use crate::error::Result;
use crate::gf::FieldCtx;
use crate::subspace::{enumerate_grassmannian, Subspace};

/// Point-block incidence: `bits[i][j]` iff point i lies in block j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub points: usize,
    pub blocks: usize,
    pub bits: Vec<Vec<bool>>,
}

impl IncidenceMatrix {
    pub fn column_weights(&self) -> BTreeSet<usize> {
        (0..self.blocks).map(|j| self.bits.iter().filter(|row| row[j]).count()).collect()
    }

    pub fn row_weights(&self) -> BTreeSet<usize> {
        self.bits.iter().map(|row| row.iter().filter(|&&b| b).count()).collect()
    }

    /// Sizes of `row_i ∩ row_j` over all pairs of distinct points; for a
    /// design with λ = 1 this is `{1}`.
    pub fn row_intersections(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for i in 0..self.points {
            for j in i + 1..self.points {
                out.insert((0..self.blocks).filter(|&b| self.bits[i][b] && self.bits[j][b]).count());
            }
        }
        out
    }

    /// Every pair of distinct points lies in exactly one common block.
    pub fn is_pairwise_balanced(&self) -> bool {
        self.row_intersections().iter().eq([1].iter())
    }
}

/// Incidence of the 1-subspaces (points) with the 2-subspaces (blocks) of
/// F_q^n, both in canonical order.
pub fn steiner_from_grassmannian(field: &FieldCtx, n: usize) -> Result<IncidenceMatrix> {
    let points: Vec<Subspace> = enumerate_grassmannian(field, n, 1)?.collect();
    let blocks: Vec<Subspace> = enumerate_grassmannian(field, n, 2)?.collect();
    let bits = points.iter().map(|p| blocks.iter().map(|b| b.contains(p)).collect()).collect();
    Ok(IncidenceMatrix { points: points.len(), blocks: blocks.len(), bits })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn designs_of_lines() {
        for (q, n) in [(2u32, 3usize), (2, 4), (3, 3), (3, 4)] {
            let f = FieldCtx::from_order(q).unwrap();
            let m = steiner_from_grassmannian(&f, n).unwrap();
            let pts = ((q as usize).pow(n as u32) - 1) / (q as usize - 1);
            assert_eq!(m.points, pts);
            assert_eq!(m.column_weights(), BTreeSet::from([q as usize + 1]));
            assert_eq!(m.row_weights(), BTreeSet::from([(pts - 1) / q as usize]));
            assert!(m.is_pairwise_balanced());
        }
        let fano = steiner_from_grassmannian(&FieldCtx::from_order(2).unwrap(), 3).unwrap();
        assert_eq!(fano.blocks, 7);
    }
}
