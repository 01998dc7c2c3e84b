use crate::error::{DesignError, Result};
use crate::params::{flatten, pow, unflatten};

/// A total function `{1..n}^d -> {1..n}` stored densely, last coordinate
/// fastest.
///
/// Construction checks shape and symbol range only. Whether the table is
/// actually Latin is decided by [`crate::verify::latin_violation`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatinCube {
    d: usize,
    n: usize,
    table: Vec<usize>,
}

impl LatinCube {
    pub fn new(d: usize, n: usize, table: Vec<usize>) -> Result<Self> {
        let expected = pow(n, d);
        if table.len() != expected {
            return Err(DesignError::CubeShape {
                len: table.len(),
                expected,
            });
        }
        if let Some(&symbol) = table.iter().find(|&&v| v == 0 || v > n) {
            return Err(DesignError::SymbolOutOfRange { symbol, n });
        }
        Ok(LatinCube { d, n, table })
    }

    pub(crate) fn from_trusted(d: usize, n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), pow(n, d));
        LatinCube { d, n, table }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Value at 1-based coordinates.
    pub fn get(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.d);
        self.table[flatten(coords, self.n)]
    }

    pub fn at_offset(&self, offset: usize) -> usize {
        self.table[offset]
    }

    pub fn coords(&self, offset: usize) -> Vec<usize> {
        unflatten(offset, self.n, self.d)
    }
}

/// An ordered system of cubes sharing dimension and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeSet {
    d: usize,
    n: usize,
    cubes: Vec<LatinCube>,
}

impl CubeSet {
    pub fn new(d: usize, n: usize, cubes: Vec<LatinCube>) -> Result<Self> {
        if let Some(bad) = cubes.iter().find(|c| c.d != d || c.n != n) {
            return Err(DesignError::CubeDimensionMismatch {
                d,
                n,
                found_d: bad.d,
                found_n: bad.n,
            });
        }
        Ok(CubeSet { d, n, cubes })
    }

    /// Takes `(d, n)` from the first cube.
    pub fn from_cubes(cubes: Vec<LatinCube>) -> Result<Self> {
        match cubes.first() {
            Some(first) => {
                let (d, n) = (first.d, first.n);
                CubeSet::new(d, n, cubes)
            }
            None => Err(DesignError::TooFewCubes { m: 0, d: 1 }),
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cubes(&self) -> &[LatinCube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// Number of cells in each member table, `n^d`.
    pub fn volume(&self) -> usize {
        pow(self.n, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_range_checked() {
        assert!(LatinCube::new(2, 2, vec![1, 2, 2, 1]).is_ok());
        assert_eq!(
            LatinCube::new(2, 2, vec![1, 2, 2]),
            Err(DesignError::CubeShape {
                len: 3,
                expected: 4
            })
        );
        assert_eq!(
            LatinCube::new(1, 2, vec![1, 3]),
            Err(DesignError::SymbolOutOfRange { symbol: 3, n: 2 })
        );
    }

    #[test]
    fn get_uses_last_axis_fastest() {
        let cube = LatinCube::new(2, 3, vec![1, 2, 3, 2, 3, 1, 3, 1, 2]).unwrap();
        assert_eq!(cube.get(&[1, 2]), 2);
        assert_eq!(cube.get(&[2, 1]), 2);
        assert_eq!(cube.get(&[2, 3]), 1);
        assert_eq!(cube.coords(5), vec![2, 3]);
    }

    #[test]
    fn mixed_sets_rejected() {
        let a = LatinCube::new(1, 2, vec![1, 2]).unwrap();
        let b = LatinCube::new(1, 3, vec![1, 2, 3]).unwrap();
        assert!(matches!(
            CubeSet::from_cubes(vec![a, b]),
            Err(DesignError::CubeDimensionMismatch { .. })
        ));
    }
}
