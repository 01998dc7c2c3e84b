use std::fmt;

use itertools::Itertools;

use crate::error::{DesignError, Result};
use crate::params::{IndexSet, Params};

/// One transversal copy of `K_k` in `G(k, n)`: the symbol chosen in each
/// colour class, indexed by colour `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(Vec<usize>);

impl Block {
    pub fn new(values: Vec<usize>) -> Self {
        Block(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    /// Symbol at 1-based colour `colour`.
    pub fn at(&self, colour: usize) -> usize {
        self.0[colour - 1]
    }

    pub fn project(&self, set: &IndexSet) -> Vec<usize> {
        set.indices().iter().map(|&s| self.at(s)).collect()
    }

    fn check(&self, params: &Params) -> Result<()> {
        if self.0.len() != params.k() {
            return Err(DesignError::BlockLength {
                len: self.0.len(),
                k: params.k(),
            });
        }
        match self.0.iter().find(|&&v| v == 0 || v > params.n()) {
            Some(&symbol) => Err(DesignError::SymbolOutOfRange {
                symbol,
                n: params.n(),
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

/// A multiset of blocks over fixed parameters: a candidate decomposition or
/// covering.
///
/// [`BlockFamily::new`] keeps the caller's order and any duplicates;
/// [`BlockFamily::canonical`] sorts lexicographically and removes exact
/// duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFamily {
    params: Params,
    blocks: Vec<Block>,
}

impl BlockFamily {
    pub fn new(params: Params, blocks: Vec<Block>) -> Result<Self> {
        for block in &blocks {
            block.check(&params)?;
        }
        Ok(BlockFamily { params, blocks })
    }

    /// Caller guarantees every block already satisfies `params`.
    pub(crate) fn from_trusted(params: Params, blocks: Vec<Block>) -> Self {
        debug_assert!(blocks.iter().all(|b| b.check(&params).is_ok()));
        BlockFamily { params, blocks }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0] < w[1])
    }

    pub fn canonical(mut self) -> Self {
        self.blocks.sort_unstable();
        self.blocks.dedup();
        self
    }

    /// Every tuple of `{1..n}^k`; exact when `k = l`.
    pub fn full(params: Params) -> Self {
        let blocks = (0..params.k())
            .map(|_| 1..=params.n())
            .multi_cartesian_product()
            .map(Block)
            .collect();
        BlockFamily::from_trusted(params, blocks)
    }
}
