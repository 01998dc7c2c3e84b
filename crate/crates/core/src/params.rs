//! Parameters of `G(k, n)` and the indexing conventions shared by every module.
//!
//! Colour classes and symbols are 1-based everywhere outside of the
//! arithmetic in [`crate::construct`]. Dense tables are row-major with the
//! last coordinate varying fastest.

use std::fmt;

use itertools::Itertools;

use crate::error::{DesignError, Result};

/// The triple `(k, n, l)`: colour classes, symbols per class, strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    k: usize,
    n: usize,
    ell: usize,
}

impl Params {
    pub fn new(k: usize, n: usize, ell: usize) -> Result<Self> {
        validate_params(k, n, ell)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `n^l`, the number of blocks in any decomposition.
    pub fn block_target(&self) -> usize {
        pow(self.n, self.ell)
    }

    pub fn index_sets(&self) -> Vec<IndexSet> {
        enumerate_index_sets(self)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={} l={}", self.k, self.n, self.ell)
    }
}

/// Checks `k >= l >= 1` and `n >= 1`.
pub fn validate_params(k: usize, n: usize, ell: usize) -> Result<Params> {
    if ell == 0 {
        return Err(DesignError::ZeroStrength);
    }
    if k < ell {
        return Err(DesignError::StrengthExceedsColours { k, ell });
    }
    if n == 0 {
        return Err(DesignError::ZeroOrder);
    }
    Ok(Params { k, n, ell })
}

/// A strictly increasing selection `s_1 < ... < s_l` of colour classes in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>, params: &Params) -> Result<Self> {
        let ok = indices.len() == params.ell
            && indices.iter().all(|&s| (1..=params.k).contains(&s))
            && indices.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(IndexSet(indices))
        } else {
            Err(DesignError::InvalidIndexSet {
                indices,
                k: params.k,
                ell: params.ell,
            })
        }
    }

    /// The last `ell` of `k` colour classes.
    pub fn trailing(k: usize, ell: usize) -> Self {
        IndexSet((k - ell + 1..=k).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, colour: usize) -> bool {
        self.0.binary_search(&colour).is_ok()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// All `C(k, l)` index sets in lexicographic order.
pub fn enumerate_index_sets(params: &Params) -> Vec<IndexSet> {
    (1..=params.k)
        .combinations(params.ell)
        .map(IndexSet)
        .collect()
}

pub(crate) fn pow(base: usize, exp: usize) -> usize {
    (0..exp).fold(1usize, |acc, _| acc * base)
}

/// Flat offset of 1-based coordinates in an order-`n` table, last axis fastest.
pub fn flatten(coords: &[usize], n: usize) -> usize {
    coords.iter().fold(0, |acc, &x| acc * n + (x - 1))
}

/// Inverse of [`flatten`] for a `d`-dimensional table.
pub fn unflatten(mut offset: usize, n: usize, d: usize) -> Vec<usize> {
    let mut coords = vec![0; d];
    for slot in coords.iter_mut().rev() {
        *slot = offset % n + 1;
        offset /= n;
    }
    coords
}
