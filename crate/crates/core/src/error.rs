use thiserror::Error;

use crate::verify::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("k >= l violated: k = {k}, l = {ell}")]
    StrengthExceedsColours { k: usize, ell: usize },
    #[error("l >= 1 violated: l = 0")]
    ZeroStrength,
    #[error("n >= 1 violated: n = 0")]
    ZeroOrder,
    #[error("n >= k violated: n = {n}, k = {k}")]
    OrderBelowColours { n: usize, k: usize },
    #[error("l >= 2 required by the polynomial construction: l = {ell}")]
    StrengthBelowTwo { ell: usize },
    #[error("order {n} is not prime")]
    CompositeOrder { n: usize },
    #[error("prime {prime} < k = {k} divides n = {n}")]
    BlockingPrime { prime: usize, n: usize, k: usize },
    #[error("block has length {len}, expected k = {k}")]
    BlockLength { len: usize, k: usize },
    #[error("symbol {symbol} outside 1..={n}")]
    SymbolOutOfRange { symbol: usize, n: usize },
    #[error("invalid index set {indices:?} for k = {k}, l = {ell}")]
    InvalidIndexSet {
        indices: Vec<usize>,
        k: usize,
        ell: usize,
    },
    #[error("families disagree: left (k = {left_k}, l = {left_ell}), right (k = {right_k}, l = {right_ell})")]
    MismatchedFamilies {
        left_k: usize,
        left_ell: usize,
        right_k: usize,
        right_ell: usize,
    },
    #[error("family is not {ell}-extendable: {witness}")]
    NotExtendable { ell: usize, witness: Witness },
    #[error("cube table has {len} entries, expected {expected}")]
    CubeShape { len: usize, expected: usize },
    #[error("cube dimensions disagree: expected (d = {d}, n = {n}), found (d = {found_d}, n = {found_n})")]
    CubeDimensionMismatch {
        d: usize,
        n: usize,
        found_d: usize,
        found_n: usize,
    },
    #[error("expected {expected}-dimensional cubes, found dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("cube {cube} is not Latin: {detail}")]
    NotLatin { cube: usize, detail: String },
    #[error("cubes {cubes:?} are not orthogonal: image {image:?} appears {multiplicity} times")]
    NotOrthogonal {
        cubes: Vec<usize>,
        image: Vec<usize>,
        multiplicity: usize,
    },
    #[error("orthogonality needs at least d = {d} cubes, got {m}")]
    TooFewCubes { m: usize, d: usize },
    #[error("fusion target {target} exceeds family order {n}")]
    FusionTarget { target: usize, n: usize },
    #[error("search space n^k = {volume} exceeds the guard {limit}")]
    SearchTooLarge { volume: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, DesignError>;
