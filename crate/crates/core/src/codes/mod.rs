//! Subspace codes and their exact metric profiles.

mod bounds;

use std::collections::BTreeSet;

pub use bounds::{fw_bound, largest_sunflower_size, partial_spread_bounds, sunflower_bound, SpreadBounds};

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::subspace::Subspace;

/// A set of subspaces of one ambient space F_q^n. Dimensions may differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceCode {
    field: FieldCtx,
    n: usize,
    words: BTreeSet<Subspace>,
}

impl SubspaceCode {
    pub fn empty(field: &FieldCtx, n: usize) -> Self {
        SubspaceCode { field: field.clone(), n, words: BTreeSet::new() }
    }

    /// Collects words into a code; duplicates collapse.
    pub fn new<I: IntoIterator<Item = Subspace>>(field: &FieldCtx, n: usize, words: I) -> Result<Self> {
        let mut code = Self::empty(field, n);
        for w in words {
            code.insert(w)?;
        }
        Ok(code)
    }

    /// Returns `false` when the word was already present.
    pub fn insert(&mut self, word: Subspace) -> Result<bool> {
        if word.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if word.ambient() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "word in ambient {} added to a code in ambient {}",
                word.ambient(),
                self.n
            )));
        }
        Ok(self.words.insert(word))
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &Subspace) -> bool {
        self.words.contains(word)
    }

    /// Words in canonical order.
    pub fn words(&self) -> impl Iterator<Item = &Subspace> {
        self.words.iter()
    }

    pub fn dimensions(&self) -> BTreeSet<usize> {
        self.words.iter().map(Subspace::dim).collect()
    }

    /// The common dimension, if every word has the same one.
    pub fn constant_dimension(&self) -> Option<usize> {
        let dims = self.dimensions();
        (dims.len() == 1).then(|| *dims.iter().next().unwrap())
    }

    pub fn profile(&self) -> Result<CodeProfile> {
        profile(self)
    }
}

/// Exact all-pairs metric summary of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeProfile {
    pub size: usize,
    pub dimension_set: BTreeSet<usize>,
    pub pairwise_distance_set: BTreeSet<usize>,
    pub pairwise_intersection_dim_set: BTreeSet<usize>,
    pub is_constant_dimension: bool,
    pub is_equidistant: bool,
    /// Common intersection dimension; absent for single-word codes.
    pub t: Option<usize>,
    /// Absent for single-word codes.
    pub min_distance: Option<usize>,
    /// The common pairwise intersection, when there is one.
    pub sunflower_center: Option<Subspace>,
    /// Constant dimension k and all words lie in one (k+1)-subspace.
    pub is_ball: bool,
}

impl CodeProfile {
    pub fn is_sunflower(&self) -> bool {
        self.sunflower_center.is_some()
    }
}

/// Computes the profile by intersecting every pair of words.
pub fn profile(code: &SubspaceCode) -> Result<CodeProfile> {
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    let words: Vec<&Subspace> = code.words().collect();
    let mut distances = BTreeSet::new();
    let mut meets = BTreeSet::new();
    let mut common: Option<Subspace> = None;
    let mut same_meet = true;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            let meet = x.intersect(y)?;
            distances.insert(x.dim() + y.dim() - 2 * meet.dim());
            meets.insert(meet.dim());
            if same_meet {
                match &common {
                    None => common = Some(meet),
                    Some(c) => same_meet = *c == meet,
                }
            }
        }
    }
    let dimension_set = code.dimensions();
    let is_constant_dimension = dimension_set.len() == 1;
    let pairs = words.len() > 1;
    let is_ball = is_constant_dimension && {
        let k = words[0].dim();
        let span = words.iter().skip(1).try_fold(words[0].clone(), |acc, w| acc.sum(w))?;
        span.dim() == k + 1
    };
    Ok(CodeProfile {
        size: words.len(),
        t: (pairs && meets.len() == 1).then(|| *meets.iter().next().unwrap()),
        min_distance: distances.iter().next().copied(),
        sunflower_center: if pairs && same_meet { common } else { None },
        is_equidistant: distances.len() <= 1,
        dimension_set,
        pairwise_distance_set: distances,
        pairwise_intersection_dim_set: meets,
        is_constant_dimension,
        is_ball,
    })
}
