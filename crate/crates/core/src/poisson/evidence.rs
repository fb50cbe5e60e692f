use super::PoissonStructure;
use crate::algebra::linalg::{combine, nullspace, Matrix};
use crate::algebra::{is_standard, krull_dim};
use crate::differential::{is_constant_fraction, is_nonrational_fraction};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::symbolics::{Monomial, Polynomial, Rational};

/// Result of a bounded search for Poisson-central fractions. Never a proof
/// of rationality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalityEvidence {
    NoConstantUpTo(u32),
    Constant { numerator: Polynomial, denominator: Polynomial },
}

/// All monomials of degree at most `d` in `n` variables, by degree and then
/// lexicographically with `x_0` largest first.
pub(crate) fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut level = Vec::new();
        fill(n, deg, &mut Vec::with_capacity(n), &mut level);
        out.extend(level);
    }
    out
}

fn fill(n: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if prefix.len() + 1 == n {
        prefix.push(remaining);
        out.push(Monomial::from_exponents(prefix.clone()));
        prefix.pop();
        return;
    }
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        prefix.push(e);
        fill(n, remaining - e, prefix, out);
        prefix.pop();
    }
}

/// For each monomial denominator `b` of degree at most `deg_bound`, solves
/// `δ_i(a)·b − a·δ_i(b) = 0` for `a` of degree at most `deg_bound` and
/// returns the first solution not proportional to `b`.
pub fn rationality_evidence(b: &PoissonStructure, deg_bound: u32) -> Result<RationalityEvidence> {
    let alg = b.algebra();
    if !alg.domain_claim() {
        return Err(Error::DomainClaimAbsent);
    }
    let deltas = b.induced_derivations()?;
    let ring = alg.ring();
    let monos: Vec<Monomial> =
        monomials_up_to(ring.nvars(), deg_bound).into_iter().filter(|m| is_standard(alg.presentation(), m)).collect();
    let basis: Vec<Polynomial> =
        monos.iter().map(|m| Polynomial::monomial(ring, m.clone(), Rational::from_integer(1.into()))).collect();
    let images: Vec<Vec<Polynomial>> = deltas.iter().map(|d| basis.iter().map(|m| d.apply(m).unwrap()).collect()).collect();
    for den in &basis {
        // one block of rows per derivation
        let mut rows: Matrix = Vec::new();
        for (k, d) in deltas.iter().enumerate() {
            let db = d.apply(den)?;
            let cols: Vec<Polynomial> =
                basis.iter().enumerate().map(|(mi, m)| alg.reduce(&(&(&images[k][mi] * den) - &(m * &db)))).collect();
            rows.extend(crate::algebra::linalg::coefficient_matrix(&cols));
        }
        let kernel = if rows.is_empty() {
            (0..basis.len())
                .map(|i| (0..basis.len()).map(|k| Rational::from_integer(((i == k) as i64).into())).collect())
                .collect()
        } else {
            nullspace(&rows, basis.len())
        };
        for c in kernel {
            let num = combine(&c, &basis);
            if is_nonrational_fraction(alg, &num, den) && is_constant_fraction(alg, &num, den, &deltas)? {
                return Ok(RationalityEvidence::Constant { numerator: num.monic(), denominator: den.clone() });
            }
        }
    }
    Ok(RationalityEvidence::NoConstantUpTo(deg_bound))
}

/// For a claimed prime `Q` with `dim A/Q ≤ 1`: whether every structure
/// entry lies in `Q`, equivalently `{a, b} ∈ Q` for all `a, b`.
pub fn tall_prime_bracket_check(b: &PoissonStructure, q: &GroebnerBasis) -> Result<bool> {
    let alg = b.algebra();
    let lifted = alg.lift(q)?;
    if lifted.is_unit() {
        return Err(Error::DimensionPrecondition("Q is the unit ideal".into()));
    }
    let quotient = alg.quotient(&lifted, true)?;
    let dim = krull_dim(&quotient)?;
    if dim > 1 {
        return Err(Error::DimensionPrecondition(format!("dim A/Q = {dim} > 1")));
    }
    Ok(b.entries().iter().all(|(_, _, p)| lifted.reduce(p).is_zero()))
}
