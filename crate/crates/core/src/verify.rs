//! Exhaustive projection counting.
//!
//! For every index set `S` (lexicographic) the blocks are bucketed by their
//! projection onto `S` into an `n^l` counter array. Counts saturate at 2. A
//! family is exact when every bucket holds exactly one block, a covering when
//! none is empty. Witnesses are always the lexicographically first offending
//! `(S, tuple)` pair, independent of how index sets are scheduled.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{DesignError, Result};
use crate::family::BlockFamily;
use crate::latin::{CubeSet, LatinCube};
use crate::params::{flatten, unflatten, IndexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Exact,
    CoverOnly,
    Fail,
}

/// An `(S, tuple)` pair whose multiplicity is not one. Multiplicity is capped
/// at 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub index_set: IndexSet,
    pub tuple: Vec<usize>,
    pub multiplicity: usize,
}

impl Witness {
    pub fn is_miss(&self) -> bool {
        self.multiplicity == 0
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.is_miss() { "MISS" } else { "DUP" };
        write!(
            f,
            "{} {} : {}",
            tag,
            self.index_set,
            self.tuple.iter().join(",")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl VerifyReport {
    pub fn is_exact(&self) -> bool {
        self.verdict == Verdict::Exact
    }

    pub fn is_covering(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    first_irregular: Option<(usize, u8)>,
    first_miss: Option<usize>,
}

fn tally(family: &BlockFamily, set: &IndexSet) -> Tally {
    let n = family.params().n();
    let cells = family.params().block_target();
    let mut counts = vec![0u8; cells];
    for block in family.blocks() {
        let offset = set
            .indices()
            .iter()
            .fold(0, |acc, &s| acc * n + (block.at(s) - 1));
        counts[offset] = counts[offset].saturating_add(1).min(2);
    }
    Tally {
        first_irregular: counts
            .iter()
            .enumerate()
            .find(|&(_, &c)| c != 1)
            .map(|(i, &c)| (i, c)),
        first_miss: counts.iter().position(|&c| c == 0),
    }
}

fn tallies(family: &BlockFamily) -> Vec<(IndexSet, Tally)> {
    family
        .params()
        .index_sets()
        .into_par_iter()
        .map(|set| {
            let t = tally(family, &set);
            (set, t)
        })
        .collect()
}

fn witness(family: &BlockFamily, set: &IndexSet, offset: usize, count: u8) -> Witness {
    let p = family.params();
    Witness {
        index_set: set.clone(),
        tuple: unflatten(offset, p.n(), p.ell()),
        multiplicity: count as usize,
    }
}

/// Exact iff every `(S, tuple)` is hit by exactly one block.
pub fn is_l_extendable(family: &BlockFamily) -> VerifyReport {
    let first = tallies(family)
        .into_iter()
        .find_map(|(set, t)| t.first_irregular.map(|(o, c)| (set, o, c)));
    match first {
        None => VerifyReport {
            verdict: Verdict::Exact,
            witness: None,
        },
        Some((set, offset, count)) => VerifyReport {
            verdict: Verdict::Fail,
            witness: Some(witness(family, &set, offset, count)),
        },
    }
}

/// Same test as [`is_l_extendable`]: a family is an `l`-decomposition exactly
/// when it is `l`-extendable.
pub fn is_decomposition(family: &BlockFamily) -> VerifyReport {
    is_l_extendable(family)
}

/// Fail with the first uncovered pair; otherwise Exact, or CoverOnly with the
/// first over-covered pair as witness.
pub fn is_covering(family: &BlockFamily) -> VerifyReport {
    let all = tallies(family);
    if let Some((set, offset)) = all
        .iter()
        .find_map(|(set, t)| t.first_miss.map(|o| (set, o)))
    {
        return VerifyReport {
            verdict: Verdict::Fail,
            witness: Some(witness(family, set, offset, 0)),
        };
    }
    match all
        .iter()
        .find_map(|(set, t)| t.first_irregular.map(|(o, c)| (set, o, c)))
    {
        None => VerifyReport {
            verdict: Verdict::Exact,
            witness: None,
        },
        Some((set, offset, count)) => VerifyReport {
            verdict: Verdict::CoverOnly,
            witness: Some(witness(family, set, offset, count)),
        },
    }
}

/// A line along `axis` (1-based) in which `repeated` occurs more than once.
/// `start` holds the line's coordinates with the axis coordinate set to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineViolation {
    pub axis: usize,
    pub start: Vec<usize>,
    pub repeated: usize,
}

impl fmt::Display for LineViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self
            .start
            .iter()
            .enumerate()
            .map(|(i, x)| {
                if i + 1 == self.axis {
                    "*".to_string()
                } else {
                    x.to_string()
                }
            })
            .join(",");
        write!(
            f,
            "axis {} line ({}) repeats symbol {}",
            self.axis, coords, self.repeated
        )
    }
}

/// First axis-parallel line that is not a permutation, scanning axes in
/// order and lines in lexicographic order of the remaining coordinates.
pub fn latin_violation(cube: &LatinCube) -> Option<LineViolation> {
    let (d, n) = (cube.dim(), cube.order());
    let mut seen = vec![false; n + 1];
    for axis in 1..=d {
        let stride = crate::params::pow(n, d - axis);
        for base in 0..cube.table().len() {
            // lines start where the axis coordinate is 1
            if !(base / stride).is_multiple_of(n) {
                continue;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = cube.at_offset(base + j * stride);
                if seen[v] {
                    return Some(LineViolation {
                        axis,
                        start: cube.coords(base),
                        repeated: v,
                    });
                }
                seen[v] = true;
            }
        }
    }
    None
}

pub fn is_latin(cube: &LatinCube) -> bool {
    latin_violation(cube).is_none()
}

/// A subset of cubes (1-based positions in the set) whose superposition
/// repeats `image`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityViolation {
    pub cubes: Vec<usize>,
    pub image: Vec<usize>,
    pub multiplicity: usize,
}

impl fmt::Display for OrthogonalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cubes {} : image {} appears {} times",
            self.cubes.iter().join(","),
            self.image.iter().join(","),
            self.multiplicity
        )
    }
}

fn superposition_violation(set: &CubeSet, members: &[usize]) -> Option<OrthogonalityViolation> {
    let n = set.order();
    let mut counts = vec![0usize; set.volume()];
    let mut image = vec![0; members.len()];
    for offset in 0..set.volume() {
        for (slot, &m) in image.iter_mut().zip(members) {
            *slot = set.cubes()[m - 1].at_offset(offset);
        }
        counts[flatten(&image, n)] += 1;
    }
    counts
        .iter()
        .position(|&c| c >= 2)
        .map(|i| OrthogonalityViolation {
            cubes: members.to_vec(),
            image: unflatten(i, n, members.len()),
            multiplicity: counts[i],
        })
}

/// Checks every `d`-subset of the set, lexicographically, for a bijective
/// superposition. Errors when the set has fewer than `d` cubes.
pub fn orthogonality_violation(set: &CubeSet) -> Result<Option<OrthogonalityViolation>> {
    let (m, d) = (set.len(), set.dim());
    if m < d {
        return Err(DesignError::TooFewCubes { m, d });
    }
    Ok((1..=m)
        .combinations(d)
        .find_map(|members| superposition_violation(set, &members)))
}

pub fn are_mutually_orthogonal(set: &CubeSet) -> Result<bool> {
    Ok(orthogonality_violation(set)?.is_none())
}

/// Lifts the set to `(L_1(x), ..., L_m(x), x)` and checks `d`-extendability.
pub fn is_mutually_invertible(set: &CubeSet) -> VerifyReport {
    is_l_extendable(&crate::cubes::lift_cubes(set))
}
