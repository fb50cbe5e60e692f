use super::{is_differential_ideal, Derivation};
use crate::algebra::linalg::{coefficient_matrix, combine, nullspace};
use crate::algebra::{ideal_cap_subspace, PresentedAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::groebner::{intersect_all, GroebnerBasis};
use crate::symbolics::Polynomial;

/// Outcome of the search for a nonconstant element of `Frac(A)` killed by
/// every derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstantSearch {
    Constant { numerator: Polynomial, denominator: Polynomial },
    NotFound(String),
}

/// Whether `a/b` is annihilated by every derivation, i.e. each
/// `δ(a)·b − a·δ(b)` reduces to zero.
pub fn is_constant_fraction(
    algebra: &PresentedAlgebra,
    a: &Polynomial,
    b: &Polynomial,
    deltas: &[Derivation],
) -> Result<bool> {
    if !algebra.domain_claim() {
        return Err(Error::DomainClaimAbsent);
    }
    algebra.check_ring(a)?;
    algebra.check_ring(b)?;
    let (a, b) = (algebra.reduce(a), algebra.reduce(b));
    if b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    for d in deltas {
        algebra.check_same(d.algebra())?;
        if !quotient_numerator(d, &a, &b).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn quotient_numerator(d: &Derivation, a: &Polynomial, b: &Polynomial) -> Polynomial {
    let alg = d.algebra();
    alg.reduce(&(&(&d.eval(a) * b) - &(a * &d.eval(b))))
}

/// `a/b ∉ Q`: `a − c·b` is nonzero for `c` the ratio of leading
/// coefficients (the only candidate constant).
pub fn is_nonrational_fraction(algebra: &PresentedAlgebra, a: &Polynomial, b: &Polynomial) -> bool {
    let (a, b) = (algebra.reduce(a), algebra.reduce(b));
    match (a.leading_coefficient(), b.leading_coefficient()) {
        (Some(ca), Some(cb)) => !(&a - &b.scale(&(ca / cb))).is_zero(),
        _ => false,
    }
}

/// Recursive search following the proof that a finite-dimensional `V`
/// meeting every ideal of a family `S` of differential ideals yields a
/// nonconstant differential constant in `Frac(A)`.
pub fn constants_search(v: &Subspace, s: &[GroebnerBasis], deltas: &[Derivation]) -> Result<ConstantSearch> {
    let algebra = v.algebra();
    if !algebra.domain_claim() {
        return Err(Error::DomainClaimAbsent);
    }
    for d in deltas {
        algebra.check_same(d.algebra())?;
    }
    if v.dim() < 2 {
        return Ok(ConstantSearch::NotFound("base dimension".into()));
    }
    for i in s {
        if !is_differential_ideal(i, deltas)? {
            return Err(Error::ConstantsPrecondition { condition: "differential ideal".into(), ideal: i.to_string() });
        }
        if ideal_cap_subspace(i, v)?.is_zero() {
            return Err(Error::ConstantsPrecondition { condition: "V meets the ideal".into(), ideal: i.to_string() });
        }
    }
    let found = search(v, s.to_vec(), deltas)?;
    if let ConstantSearch::Constant { numerator, denominator } = &found {
        if !is_constant_fraction(algebra, numerator, denominator, deltas)?
            || !is_nonrational_fraction(algebra, numerator, denominator)
        {
            return Ok(ConstantSearch::NotFound("candidate failed verification".into()));
        }
    }
    Ok(found)
}

fn search(v: &Subspace, s: Vec<GroebnerBasis>, deltas: &[Derivation]) -> Result<ConstantSearch> {
    let algebra = v.algebra();
    let d = v.dim();
    if d < 2 {
        return Ok(ConstantSearch::NotFound("base dimension".into()));
    }
    let basis = v.basis();
    let last = &basis[d - 1];
    let offending = deltas
        .iter()
        .find(|delta| basis[..d - 1].iter().any(|vj| !quotient_numerator(delta, vj, last).is_zero()));
    let Some(delta) = offending else {
        return Ok(ConstantSearch::Constant { numerator: basis[0].clone(), denominator: last.clone() });
    };
    let u: Vec<Polynomial> = basis[..d - 1].iter().map(|vj| quotient_numerator(delta, vj, last)).collect();
    let kernel = nullspace(&coefficient_matrix(&u), d - 1);
    let mut w_elems = vec![last.clone()];
    w_elems.extend(kernel.iter().map(|c| combine(c, &basis[..d - 1])));
    let w = Subspace::span(algebra, &w_elems)?;
    let u_span = Subspace::span(algebra, &u)?;

    let mut t = Vec::new();
    let mut rest = Vec::new();
    for i in s {
        if ideal_cap_subspace(&i, &u_span)?.is_zero() {
            t.push(i);
        } else {
            rest.push(i);
        }
    }
    if !rest.is_empty() && intersect_all(algebra.ring(), &rest)?.is_zero_ideal() {
        search(&u_span, rest, deltas)
    } else {
        search(&w, t, deltas)
    }
}
