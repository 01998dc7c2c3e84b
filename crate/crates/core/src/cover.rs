//! Coverings for parameters without an exact decomposition.
//!
//! An exact family over the next admissible order `n' >= n` is folded onto
//! `{1..n}` and deduplicated, which keeps every `K_l` covered and yields at
//! most `n'^l` blocks. [`exact_cover_size`] computes the true minimum for
//! tiny instances.

use crate::construct::{blocking_prime, constant_blocks, construct};
use crate::error::{DesignError, Result};
use crate::family::{Block, BlockFamily};
use crate::params::{validate_params, Params};

/// Smallest `n' >= max(n, k)` with no prime factor below `k`.
pub fn next_admissible_order(n: usize, k: usize) -> usize {
    (n.max(k)..)
        .find(|&m| blocking_prime(m, k).is_none())
        .expect("m = 1 mod primorial(k) is admissible")
}

/// Maps every symbol `v` to `((v - 1) mod target) + 1` and dedups.
pub fn fuse(family: &BlockFamily, n_target: usize) -> Result<BlockFamily> {
    let p = family.params();
    if n_target > p.n() {
        return Err(DesignError::FusionTarget {
            target: n_target,
            n: p.n(),
        });
    }
    let params = validate_params(p.k(), n_target, p.ell())?;
    let blocks = family
        .blocks()
        .iter()
        .map(|b| Block::new(b.values().iter().map(|&v| (v - 1) % n_target + 1).collect()))
        .collect();
    Ok(BlockFamily::from_trusted(params, blocks).canonical())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pub family: BlockFamily,
    /// Order of the exact family that was fused; equals `n` when no fusion
    /// was needed.
    pub lifted_order: usize,
}

impl Covering {
    pub fn size(&self) -> usize {
        self.family.len()
    }
}

/// A covering of every `K_l` of `G(k, n)` with at most `n'^l` blocks, where
/// `n'` is [`next_admissible_order`]`(n, k)`. Exact when `n` is admissible.
pub fn build_covering(k: usize, n: usize, ell: usize) -> Result<Covering> {
    let params = validate_params(k, n, ell)?;
    if ell == 1 {
        return Ok(Covering {
            family: constant_blocks(params),
            lifted_order: n,
        });
    }
    if let Ok(family) = construct(k, n, ell) {
        return Ok(Covering {
            family,
            lifted_order: n,
        });
    }
    let lifted_order = next_admissible_order(n, k);
    let exact = construct(k, lifted_order, ell)?;
    Ok(Covering {
        family: fuse(&exact, n)?,
        lifted_order,
    })
}

/// Largest `n^k` [`exact_cover_size`] will search.
pub const SEARCH_VOLUME_LIMIT: u128 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    Minimum(usize),
    /// The node budget ran out before the minimum was settled.
    Unknown,
}

struct Search {
    per_set: usize,
    covers: Vec<Vec<usize>>,
    by_pair: Vec<Vec<usize>>,
    hits: Vec<u32>,
    open_in_set: Vec<usize>,
    open: usize,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(params: &Params, budget: u64) -> Self {
        let candidates = BlockFamily::full(*params);
        let sets = params.index_sets();
        let n = params.n();
        let per_set = params.block_target();
        let covers: Vec<Vec<usize>> = candidates
            .blocks()
            .iter()
            .map(|b| {
                sets.iter()
                    .enumerate()
                    .map(|(i, s)| {
                        let offset = s
                            .indices()
                            .iter()
                            .fold(0, |acc, &c| acc * n + (b.at(c) - 1));
                        i * per_set + offset
                    })
                    .collect()
            })
            .collect();
        let pairs = sets.len() * per_set;
        let mut by_pair = vec![Vec::new(); pairs];
        for (id, cover) in covers.iter().enumerate() {
            for &pair in cover {
                by_pair[pair].push(id);
            }
        }
        Search {
            per_set,
            covers,
            by_pair,
            hits: vec![0; pairs],
            open_in_set: vec![per_set; sets.len()],
            open: pairs,
            nodes: 0,
            budget,
        }
    }

    fn apply(&mut self, id: usize) {
        for &pair in &self.covers[id] {
            if self.hits[pair] == 0 {
                self.open -= 1;
                self.open_in_set[pair / self.per_set] -= 1;
            }
            self.hits[pair] += 1;
        }
    }

    fn undo(&mut self, id: usize) {
        for &pair in &self.covers[id] {
            self.hits[pair] -= 1;
            if self.hits[pair] == 0 {
                self.open += 1;
                self.open_in_set[pair / self.per_set] += 1;
            }
        }
    }

    fn gain(&self, id: usize) -> usize {
        self.covers[id]
            .iter()
            .filter(|&&p| self.hits[p] == 0)
            .count()
    }

    /// `Some(true)` if the open pairs can be covered by `remaining` more
    /// blocks, `None` when the budget is exhausted.
    fn feasible(&mut self, remaining: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.open == 0 {
            return Some(true);
        }
        // a block meets each index set in exactly one tuple
        let bound = self.open_in_set.iter().copied().max().unwrap_or(0);
        if bound > remaining {
            return Some(false);
        }
        let pair = self.hits.iter().position(|&h| h == 0).expect("open > 0");
        let mut options = self.by_pair[pair].clone();
        options.sort_by_key(|&id| (std::cmp::Reverse(self.gain(id)), id));
        for id in options {
            self.apply(id);
            let found = self.feasible(remaining - 1);
            self.undo(id);
            match found {
                Some(false) => continue,
                other => return other,
            }
        }
        Some(false)
    }
}

/// Minimum number of blocks covering every `K_l` of `G(k, n)`, by iterative
/// deepening from the `n^l` lower bound up to the size of
/// [`build_covering`]. `budget` caps the total number of search nodes.
pub fn exact_cover_size(k: usize, n: usize, ell: usize, budget: u64) -> Result<SearchOutcome> {
    let params = validate_params(k, n, ell)?;
    let volume = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if volume > SEARCH_VOLUME_LIMIT {
        return Err(DesignError::SearchTooLarge {
            volume,
            limit: SEARCH_VOLUME_LIMIT,
        });
    }
    let upper = build_covering(k, n, ell)?.size();
    let mut search = Search::new(&params, budget);
    for size in params.block_target()..upper {
        match search.feasible(size) {
            Some(true) => return Ok(SearchOutcome::Minimum(size)),
            Some(false) => {}
            None => return Ok(SearchOutcome::Unknown),
        }
    }
    Ok(SearchOutcome::Minimum(upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_covering, Verdict};

    #[test]
    fn admissible_examples() {
        assert_eq!(next_admissible_order(10, 6), 11);
        assert_eq!(next_admissible_order(7, 5), 7);
        assert_eq!(next_admissible_order(2, 3), 3);
        assert_eq!(next_admissible_order(2, 4), 5);
        assert_eq!(next_admissible_order(4, 6), 7);
    }

    #[test]
    fn admissible_is_minimal() {
        for k in 2..12 {
            for n in 1..80 {
                let m = next_admissible_order(n, k);
                assert!(m >= n.max(k));
                assert!((2..k).all(|p| !m.is_multiple_of(p) || !crate::construct::is_prime(p)));
                for smaller in n.max(k)..m {
                    assert!((2..k).any(|p| crate::construct::is_prime(p) && smaller % p == 0));
                }
            }
        }
    }

    #[test]
    fn fuse_identity_at_same_order() {
        let fam = construct(4, 5, 2).unwrap();
        assert_eq!(fuse(&fam, 5).unwrap(), fam);
        assert!(matches!(
            fuse(&fam, 6),
            Err(DesignError::FusionTarget { .. })
        ));
    }

    #[test]
    fn fuse_keeps_covering() {
        let fused = fuse(&construct(4, 5, 2).unwrap(), 2).unwrap();
        assert!(fused.len() <= 25);
        assert!(is_covering(&fused).is_covering());
        let fused = fuse(&construct(6, 7, 3).unwrap(), 4).unwrap();
        assert!(fused.len() <= 343);
        assert!(is_covering(&fused).is_covering());
    }

    #[test]
    fn build_covering_paths() {
        let c = build_covering(5, 7, 2).unwrap();
        assert_eq!((c.size(), c.lifted_order), (49, 7));
        assert_eq!(is_covering(&c.family).verdict, Verdict::Exact);

        let c = build_covering(4, 2, 2).unwrap();
        assert_eq!(c.lifted_order, 5);
        assert!(c.size() <= 25);
        assert!(is_covering(&c.family).is_covering());

        let c = build_covering(6, 4, 3).unwrap();
        assert_eq!(c.lifted_order, 7);
        assert!(c.size() <= 343);
        assert!(is_covering(&c.family).is_covering());

        let c = build_covering(3, 5, 1).unwrap();
        assert_eq!(c.size(), 5);
    }

    #[test]
    fn minimum_small() {
        assert_eq!(
            exact_cover_size(3, 2, 2, 1_000_000).unwrap(),
            SearchOutcome::Minimum(4)
        );
        assert_eq!(
            exact_cover_size(4, 2, 2, 1_000_000).unwrap(),
            SearchOutcome::Minimum(5)
        );
        assert_eq!(
            exact_cover_size(5, 1, 3, 10).unwrap(),
            SearchOutcome::Minimum(1)
        );
    }

    #[test]
    fn minimum_budget_and_guard() {
        assert_eq!(
            exact_cover_size(4, 2, 2, 3).unwrap(),
            SearchOutcome::Unknown
        );
        assert!(matches!(
            exact_cover_size(6, 5, 2, 10),
            Err(DesignError::SearchTooLarge { .. })
        ));
    }
}
