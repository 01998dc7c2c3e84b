//! Conversions between block families, Latin cube systems and MOLS.

use crate::error::{DesignError, Result};
use crate::family::{Block, BlockFamily};
use crate::latin::{CubeSet, LatinCube};
use crate::params::{pow, unflatten, IndexSet, Params};
use crate::verify::{self, is_l_extendable};

/// Reads one cube per colour outside `positions`, ascending: `L_j(x)` is the
/// `j`-th symbol of the unique block whose projection onto `positions` is `x`.
pub fn extract_cubes(family: &BlockFamily, positions: &IndexSet) -> Result<CubeSet> {
    let params = family.params();
    let (k, n, ell) = (params.k(), params.n(), params.ell());
    IndexSet::new(positions.indices().to_vec(), params)?;
    let report = is_l_extendable(family);
    if let Some(witness) = report.witness {
        return Err(DesignError::NotExtendable { ell, witness });
    }
    let free: Vec<usize> = (1..=k).filter(|&c| !positions.contains(c)).collect();
    let volume = pow(n, ell);
    let mut tables = vec![vec![0usize; volume]; free.len()];
    for block in family.blocks() {
        let offset = positions
            .indices()
            .iter()
            .fold(0, |acc, &s| acc * n + (block.at(s) - 1));
        for (table, &j) in tables.iter_mut().zip(&free) {
            table[offset] = block.at(j);
        }
    }
    let cubes = tables
        .into_iter()
        .map(|t| LatinCube::from_trusted(ell, n, t))
        .collect();
    CubeSet::new(ell, n, cubes)
}

/// The `n^d` tuples `(L_1(x), ..., L_m(x), x_1, ..., x_d)` with `k = m + d`,
/// in canonical order. No exactness is implied.
pub fn lift_cubes(set: &CubeSet) -> BlockFamily {
    let (d, n, m) = (set.dim(), set.order(), set.len());
    let params = Params::new(m + d, n, d).expect("cube sets have d >= 1 and n >= 1");
    let blocks = (0..set.volume())
        .map(|offset| {
            let mut values: Vec<usize> = set.cubes().iter().map(|c| c.at_offset(offset)).collect();
            values.extend(unflatten(offset, n, d));
            Block::new(values)
        })
        .collect();
    BlockFamily::from_trusted(params, blocks).canonical()
}

/// The family `(L_1(x, y), ..., L_m(x, y), x, y)` of a set of mutually
/// orthogonal Latin squares; checks its preconditions first.
pub fn mols_to_blocks(squares: &CubeSet) -> Result<BlockFamily> {
    if squares.dim() != 2 {
        return Err(DesignError::WrongDimension {
            expected: 2,
            found: squares.dim(),
        });
    }
    for (i, square) in squares.cubes().iter().enumerate() {
        if let Some(v) = verify::latin_violation(square) {
            return Err(DesignError::NotLatin {
                cube: i + 1,
                detail: v.to_string(),
            });
        }
    }
    if squares.len() >= 2 {
        if let Some(v) = verify::orthogonality_violation(squares)? {
            return Err(DesignError::NotOrthogonal {
                cubes: v.cubes,
                image: v.image,
                multiplicity: v.multiplicity,
            });
        }
    }
    Ok(lift_cubes(squares))
}

/// The `k - 2` squares of a 2-decomposition, read at the last two colours.
pub fn blocks_to_mols(family: &BlockFamily) -> Result<CubeSet> {
    let params = family.params();
    if params.ell() != 2 {
        return Err(DesignError::WrongDimension {
            expected: 2,
            found: params.ell(),
        });
    }
    extract_cubes(family, &IndexSet::trailing(params.k(), 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct;
    use crate::verify::{are_mutually_orthogonal, is_latin, is_mutually_invertible};

    #[test]
    fn extract_square_from_order_three() {
        let fam = construct(3, 3, 2).unwrap();
        let set = extract_cubes(&fam, &IndexSet::trailing(3, 2)).unwrap();
        assert_eq!(set.len(), 1);
        let sq = &set.cubes()[0];
        for b in fam.blocks() {
            assert_eq!(sq.get(&[b.at(2), b.at(3)]), b.at(1));
        }
        assert!(is_latin(sq));
    }

    #[test]
    fn extract_all_positions_is_empty() {
        let fam = BlockFamily::full(Params::new(3, 2, 3).unwrap());
        let set = extract_cubes(&fam, &IndexSet::trailing(3, 3)).unwrap();
        assert!(set.is_empty());
        assert_eq!(set.dim(), 3);
    }

    #[test]
    fn extract_rejects_non_extendable() {
        let p = Params::new(3, 2, 2).unwrap();
        let fam = BlockFamily::new(p, vec![Block::new(vec![1, 1, 1])]).unwrap();
        assert!(matches!(
            extract_cubes(&fam, &IndexSet::trailing(3, 2)),
            Err(DesignError::NotExtendable { .. })
        ));
    }

    #[test]
    fn lift_of_extract_round_trip() {
        let fam = construct(5, 5, 3).unwrap();
        let set = extract_cubes(&fam, &IndexSet::trailing(5, 3)).unwrap();
        assert_eq!(lift_cubes(&set), fam);
        assert!(is_mutually_invertible(&set).is_exact());
        let back = extract_cubes(&lift_cubes(&set), &IndexSet::trailing(5, 3)).unwrap();
        assert_eq!(back, set);
    }

    #[test]
    fn mols_of_single_square() {
        let sq = LatinCube::new(2, 2, vec![1, 2, 2, 1]).unwrap();
        let set = CubeSet::new(2, 2, vec![sq]).unwrap();
        let fam = mols_to_blocks(&set).unwrap();
        let mut got: Vec<Vec<usize>> = fam.blocks().iter().map(|b| b.values().to_vec()).collect();
        got.sort();
        assert_eq!(
            got,
            vec![vec![1, 1, 1], vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]]
        );
        assert!(verify::is_decomposition(&fam).is_exact());
    }

    #[test]
    fn mols_of_nothing() {
        let set = CubeSet::new(2, 3, vec![]).unwrap();
        let fam = mols_to_blocks(&set).unwrap();
        assert_eq!(fam.params().k(), 2);
        assert_eq!(fam.len(), 9);
        assert!(verify::is_decomposition(&fam).is_exact());
    }

    #[test]
    fn mols_rejects_equal_squares() {
        let sq = LatinCube::new(2, 3, vec![1, 2, 3, 2, 3, 1, 3, 1, 2]).unwrap();
        let set = CubeSet::new(2, 3, vec![sq.clone(), sq]).unwrap();
        let err = mols_to_blocks(&set).unwrap_err();
        assert_eq!(
            err,
            DesignError::NotOrthogonal {
                cubes: vec![1, 2],
                image: vec![1, 1],
                multiplicity: 3
            }
        );
    }

    #[test]
    fn mols_rejects_non_latin() {
        let sq = LatinCube::new(2, 2, vec![1, 1, 2, 2]).unwrap();
        let set = CubeSet::new(2, 2, vec![sq]).unwrap();
        assert!(matches!(
            mols_to_blocks(&set),
            Err(DesignError::NotLatin { cube: 1, .. })
        ));
    }

    #[test]
    fn blocks_to_mols_order_five() {
        let fam = construct(4, 5, 2).unwrap();
        let mols = blocks_to_mols(&fam).unwrap();
        assert_eq!(mols.len(), 2);
        assert!(are_mutually_orthogonal(&mols).unwrap());
        assert_eq!(mols_to_blocks(&mols).unwrap(), fam);
    }

    #[test]
    fn blocks_to_mols_k_two() {
        let fam = construct(2, 3, 2).unwrap();
        assert!(blocks_to_mols(&fam).unwrap().is_empty());
        let three = construct(3, 3, 2).unwrap();
        assert!(is_latin(&blocks_to_mols(&three).unwrap().cubes()[0]));
    }
}
