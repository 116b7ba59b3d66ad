//! JSON interchange for subspace codes and rank codes. Entries are integer
//! field-element encodings; parsing validates and canonicalizes every word.

use serde::{Deserialize, Serialize};

use crate::codes::{CodeProfile, SubspaceCode};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement, FieldSpec};
use crate::linalg::Matrix;
use crate::rankmetric::RankCode;
use crate::subspace::Subspace;

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordDocument {
    pub k: usize,
    pub basis: Vec<Vec<u32>>,
}

/// Serialized form of [`CodeProfile`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDocument {
    pub size: usize,
    pub dimension_set: Vec<usize>,
    pub pairwise_distance_set: Vec<usize>,
    pub pairwise_intersection_dim_set: Vec<usize>,
    pub is_constant_dimension: bool,
    pub is_equidistant: bool,
    pub t: Option<usize>,
    pub min_distance: Option<usize>,
    pub sunflower_center: Option<Vec<Vec<u32>>>,
    pub is_ball: bool,
}

impl From<&CodeProfile> for ProfileDocument {
    fn from(p: &CodeProfile) -> Self {
        ProfileDocument {
            size: p.size,
            dimension_set: p.dimension_set.iter().copied().collect(),
            pairwise_distance_set: p.pairwise_distance_set.iter().copied().collect(),
            pairwise_intersection_dim_set: p.pairwise_intersection_dim_set.iter().copied().collect(),
            is_constant_dimension: p.is_constant_dimension,
            is_equidistant: p.is_equidistant,
            t: p.t,
            min_distance: p.min_distance,
            sunflower_center: p.sunflower_center.as_ref().map(Subspace::to_u32_rows),
            is_ball: p.is_ball,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    pub format_version: String,
    pub field: FieldSpec,
    pub n: usize,
    pub words: Vec<WordDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn check_version(v: &str) -> Result<()> {
    if v != FORMAT_VERSION {
        return Err(doc_err(format!("unsupported format_version {v:?}, expected {FORMAT_VERSION:?}")));
    }
    Ok(())
}

fn parse_rows(field: &FieldCtx, cols: usize, rows: &[Vec<u32>], what: &str) -> Result<Matrix> {
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return Err(doc_err(format!("{what}: row {i} has length {}, expected {cols}", r.len())));
        }
        if let Some(&v) = r.iter().find(|&&v| v >= field.order()) {
            return Err(doc_err(format!("{what}: entry {v} is not an element of GF({})", field.order())));
        }
    }
    let rows: Vec<Vec<FieldElement>> = rows.iter().map(|r| r.iter().map(|&v| FieldElement(v)).collect()).collect();
    Matrix::from_rows(field, cols, &rows)
}

impl CodeDocument {
    /// Words in canonical order; the profile is computed when `with_profile`.
    pub fn from_code(code: &SubspaceCode, with_profile: bool, provenance: Option<String>) -> Result<Self> {
        let profile = if with_profile { Some(ProfileDocument::from(&code.profile()?)) } else { None };
        Ok(CodeDocument {
            format_version: FORMAT_VERSION.into(),
            field: code.field().spec(),
            n: code.ambient(),
            words: code.words().map(|w| WordDocument { k: w.dim(), basis: w.to_u32_rows() }).collect(),
            profile,
            provenance,
        })
    }

    /// Validates the document and rebuilds the code. Bases need not be in
    /// RREF, but each must have exactly `k` independent rows.
    pub fn to_code(&self) -> Result<SubspaceCode> {
        check_version(&self.format_version)?;
        let field = FieldCtx::from_spec(&self.field)?;
        let mut code = SubspaceCode::empty(&field, self.n);
        for (i, w) in self.words.iter().enumerate() {
            if w.basis.len() != w.k {
                return Err(doc_err(format!("word {i}: k = {} but {} basis rows", w.k, w.basis.len())));
            }
            let m = parse_rows(&field, self.n, &w.basis, &format!("word {i}"))?;
            let s = Subspace::from_matrix(&m);
            if s.dim() != w.k {
                return Err(doc_err(format!("word {i}: basis rows are dependent (rank {}, k = {})", s.dim(), w.k)));
            }
            if !code.insert(s)? {
                return Err(doc_err(format!("word {i} repeats an earlier word")));
            }
        }
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCodeDocument {
    pub format_version: String,
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub words: Vec<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl RankCodeDocument {
    pub fn from_code(code: &RankCode, provenance: Option<String>) -> Self {
        let (rows, cols) = code.shape();
        RankCodeDocument {
            format_version: FORMAT_VERSION.into(),
            field: code.field().spec(),
            rows,
            cols,
            words: code.words().iter().map(Matrix::to_u32_rows).collect(),
            provenance,
        }
    }

    pub fn to_code(&self) -> Result<RankCode> {
        check_version(&self.format_version)?;
        let field = FieldCtx::from_spec(&self.field)?;
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                if w.len() != self.rows {
                    return Err(doc_err(format!("matrix {i} has {} rows, expected {}", w.len(), self.rows)));
                }
                parse_rows(&field, self.cols, w, &format!("matrix {i}"))
            })
            .collect::<Result<Vec<_>>>()?;
        RankCode::new(&field, self.rows, self.cols, words)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))
    }
}
