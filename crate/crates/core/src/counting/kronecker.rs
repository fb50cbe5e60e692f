use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{leading_dimension, zerodim::count_ideal_points};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, radical_member, GroebnerBasis};
use crate::symbolics::{Polynomial, Rational};

/// Draws before giving up.
pub const KRONECKER_RETRY_CAP: usize = 8;

const INITIAL_HEIGHT: i64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerReport {
    /// `d + 1` integer combinations of the input.
    pub combinations: Vec<Polynomial>,
    /// `coefficients[k][i]` multiplies input `i` in combination `k`.
    pub coefficients: Vec<Vec<i64>>,
    pub verified: bool,
    /// Failed draws before the returned one.
    pub retries: usize,
}

/// Replaces `gens` (in `d` variables) by `d + 1` random integer combinations
/// with the same zero set. Each input is checked to lie in the radical of
/// the combinations; coefficient height doubles after each failed draw.
pub fn kronecker_reduce(gens: &[Polynomial], seed: u64) -> Result<KroneckerReport> {
    let Some(first) = gens.first() else {
        return Err(Error::Declaration("kronecker reduction needs at least one generator".into()));
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| g.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    let k = ring.nvars() + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut height = INITIAL_HEIGHT;
    let mut witness = String::new();
    for attempt in 0..KRONECKER_RETRY_CAP {
        let coefficients: Vec<Vec<i64>> =
            (0..k).map(|_| (0..gens.len()).map(|_| rng.gen_range(-height..=height)).collect()).collect();
        let combinations: Vec<Polynomial> = coefficients
            .iter()
            .map(|row| {
                row.iter().zip(gens).fold(Polynomial::zero(&ring), |acc, (&c, g)| {
                    &acc + &g.scale(&Rational::from_integer(BigInt::from(c)))
                })
            })
            .collect();
        let g = buchberger(&ring, &combinations)?;
        let mut missing = None;
        for f in gens {
            if !radical_member(f, &g)? {
                missing = Some(f);
                break;
            }
        }
        match missing {
            None => return Ok(KroneckerReport { combinations, coefficients, verified: true, retries: attempt }),
            Some(f) => witness = f.to_string(),
        }
        height = height.saturating_mul(2);
    }
    Err(Error::KroneckerFailed { retries: KRONECKER_RETRY_CAP, witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutReport {
    pub distinct: usize,
    pub bound: BigUint,
    pub ok: bool,
}

/// Distinct points of a zero-dimensional ideal against `N^(d+1)`, where
/// every basis generator has degree at most `N`.
pub fn bezout_check(i: &GroebnerBasis, n: u32) -> Result<BezoutReport> {
    for g in i.generators() {
        if g.total_degree() > n {
            return Err(Error::DegreeHypothesis { generator: g.to_string(), degree: g.total_degree(), bound: n });
        }
    }
    let d = i.ring().nvars() as u32;
    let bound = BigUint::from(n).pow(d + 1);
    if i.is_unit() {
        return Ok(BezoutReport { distinct: 0, bound, ok: true });
    }
    let dim = leading_dimension(i);
    if dim > 0 {
        return Err(Error::NotApplicable(format!("ideal has dimension {dim}")));
    }
    let distinct = count_ideal_points(i)?.distinct;
    let ok = BigUint::from(distinct) <= bound;
    Ok(BezoutReport { distinct, bound, ok })
}
