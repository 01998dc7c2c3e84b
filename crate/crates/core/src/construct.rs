//! Exact decompositions: polynomial evaluation for prime orders and the
//! product composition for admissible composite orders.

use itertools::Itertools;

use crate::error::{DesignError, Result};
use crate::family::{Block, BlockFamily};
use crate::params::{validate_params, Params};

/// Prime factorisation as `(prime, exponent)` pairs, primes increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeFactorization(Vec<(usize, u32)>);

impl PrimeFactorization {
    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn value(&self) -> usize {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn smallest_prime(&self) -> Option<usize> {
        self.0.first().map(|&(p, _)| p)
    }
}

/// Trial division. `factorize(1)` is empty.
pub fn factorize(mut n: usize) -> PrimeFactorization {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    PrimeFactorization(factors)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
}

/// The `n^l` blocks `K(a)` for `a` in `{0..n-1}^l`: colour `c` receives
/// `(a_1 + a_2 c + ... + a_l c^(l-1) mod n) + 1`.
///
/// Requires `n` prime and `n >= k >= l >= 2`; distinct colours then give a
/// Vandermonde system that is invertible mod `n`.
pub fn vandermonde_blocks(k: usize, n: usize, ell: usize) -> Result<BlockFamily> {
    let params = validate_params(k, n, ell)?;
    if ell < 2 {
        return Err(DesignError::StrengthBelowTwo { ell });
    }
    if n < k {
        return Err(DesignError::OrderBelowColours { n, k });
    }
    if !is_prime(n) {
        return Err(DesignError::CompositeOrder { n });
    }
    let blocks = (0..ell)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|coeffs| {
            let values = (1..=k)
                .map(|c| {
                    // Horner, highest coefficient first
                    let r = coeffs.iter().rev().fold(0, |acc, &a| (acc * c + a) % n);
                    r + 1
                })
                .collect();
            Block::new(values)
        })
        .collect();
    Ok(BlockFamily::from_trusted(params, blocks).canonical())
}

/// Composes decompositions of orders `p` and `q` into one of order `pq`:
/// colour `i` of the pair `(X, Y)` gets `(w_i - 1) p + v_i` where `v_i`, `w_i`
/// are the symbols of `X` and `Y`.
pub fn product_decomposition(left: &BlockFamily, right: &BlockFamily) -> Result<BlockFamily> {
    let (lp, rp) = (left.params(), right.params());
    if lp.k() != rp.k() || lp.ell() != rp.ell() {
        return Err(DesignError::MismatchedFamilies {
            left_k: lp.k(),
            left_ell: lp.ell(),
            right_k: rp.k(),
            right_ell: rp.ell(),
        });
    }
    let p = lp.n();
    let params = validate_params(lp.k(), p * rp.n(), lp.ell())?;
    let mut blocks = Vec::with_capacity(left.len() * right.len());
    for x in left.blocks() {
        for y in right.blocks() {
            let values = x
                .values()
                .iter()
                .zip(y.values())
                .map(|(&v, &w)| (w - 1) * p + v)
                .collect();
            blocks.push(Block::new(values));
        }
    }
    Ok(BlockFamily::from_trusted(params, blocks).canonical())
}

/// Smallest prime below `k` dividing `n`, if any.
pub fn blocking_prime(n: usize, k: usize) -> Option<usize> {
    (2..k)
        .filter(|&p| is_prime(p))
        .find(|p| n.is_multiple_of(*p))
}

/// An exact `l`-decomposition of `G(k, n)` whenever `n >= k` and no prime
/// below `k` divides `n`.
///
/// Prime factors are processed in increasing order and each prime power is
/// folded in one prime at a time. `l = 1` is handled directly: the `n`
/// constant blocks decompose `G(k, n)` for every `n`.
pub fn construct(k: usize, n: usize, ell: usize) -> Result<BlockFamily> {
    let params = validate_params(k, n, ell)?;
    if ell == 1 {
        return Ok(constant_blocks(params));
    }
    if n < k {
        return Err(DesignError::OrderBelowColours { n, k });
    }
    if let Some(prime) = blocking_prime(n, k) {
        return Err(DesignError::BlockingPrime { prime, n, k });
    }
    let mut running: Option<BlockFamily> = None;
    for &(p, e) in factorize(n).factors() {
        let base = vandermonde_blocks(k, p, ell)?;
        for _ in 0..e {
            running = Some(match running {
                None => base.clone(),
                Some(acc) => product_decomposition(&acc, &base)?,
            });
        }
    }
    // n >= k >= 2 so there is at least one factor
    Ok(running.expect("n > 1 has a prime factor"))
}

pub(crate) fn constant_blocks(params: Params) -> BlockFamily {
    let blocks = (1..=params.n())
        .map(|v| Block::new(vec![v; params.k()]))
        .collect();
    BlockFamily::from_trusted(params, blocks)
}
