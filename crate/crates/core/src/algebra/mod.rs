//! Finitely presented algebras `Q[x_1..x_n]/I`.

pub mod linalg;
mod subspace;
pub mod univariate;
pub(crate) mod zerodim;

use std::fmt;
use std::sync::Arc;

pub use subspace::{ideal_cap_subspace, span_power, span_powers, span_product, Subspace};
pub use zerodim::{count_points, rational_points, standard_monomials, zero_dim_data, PointCount, ZeroDimData};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::symbolics::{Monomial, Polynomial, VariableRing};

#[derive(PartialEq, Eq, Hash)]
struct AlgebraInner {
    presentation: GroebnerBasis,
    domain_claim: bool,
}

/// `Q[vars]/I` with its reduced Gröbner basis. `domain_claim` is the
/// caller's assertion that `I` is prime; it is never checked.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PresentedAlgebra(Arc<AlgebraInner>);

impl PresentedAlgebra {
    pub fn new(ring: &VariableRing, relations: &[Polynomial], domain_claim: bool) -> Result<Self> {
        Ok(Self::from_basis(buchberger(ring, relations)?, domain_claim))
    }

    pub fn from_basis(presentation: GroebnerBasis, domain_claim: bool) -> Self {
        PresentedAlgebra(Arc::new(AlgebraInner { presentation, domain_claim }))
    }

    /// The polynomial ring itself. It is a domain, so the claim is set.
    pub fn free(ring: &VariableRing) -> Self {
        Self::from_basis(GroebnerBasis::zero(ring), true)
    }

    pub fn ring(&self) -> &VariableRing {
        self.0.presentation.ring()
    }

    pub fn presentation(&self) -> &GroebnerBasis {
        &self.0.presentation
    }

    pub fn domain_claim(&self) -> bool {
        self.0.domain_claim
    }

    pub fn with_domain_claim(&self, claim: bool) -> Self {
        Self::from_basis(self.0.presentation.clone(), claim)
    }

    pub fn is_unit_algebra(&self) -> bool {
        self.0.presentation.is_unit()
    }

    pub fn is_free(&self) -> bool {
        self.0.presentation.is_zero_ideal()
    }

    pub fn check_same(&self, other: &PresentedAlgebra) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn check_ring(&self, p: &Polynomial) -> Result<()> {
        if p.ring() == self.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Canonical representative modulo the presentation.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.0.presentation.normal_form(p)
    }

    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        if self.is_free() {
            p.clone()
        } else {
            self.0.presentation.reduce(p)
        }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Ok(self.reduce(&crate::symbolics::parse_polynomial(text, self.ring())?))
    }

    /// Preimage in the polynomial ring of the ideal of `A` generated by
    /// `gens`, i.e. the basis of `I + <gens>`.
    pub fn ideal(&self, gens: &[Polynomial]) -> Result<GroebnerBasis> {
        if self.is_free() {
            buchberger(self.ring(), gens)
        } else {
            self.0.presentation.extend(gens)
        }
    }

    /// `J + I`, the preimage of the image of `J` in `A`.
    pub fn lift(&self, j: &GroebnerBasis) -> Result<GroebnerBasis> {
        if j.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        if self.is_free() || j.contains_ideal(&self.0.presentation)? {
            Ok(j.clone())
        } else {
            self.ideal(j.generators())
        }
    }

    /// The algebra `A/J`.
    pub fn quotient(&self, j: &GroebnerBasis, domain_claim: bool) -> Result<PresentedAlgebra> {
        Ok(Self::from_basis(self.lift(j)?, domain_claim))
    }
}

impl fmt::Debug for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ring(), self.presentation())
    }
}

/// Largest set of variables independent modulo the leading-term ideal.
pub fn krull_dim(a: &PresentedAlgebra) -> Result<usize> {
    if a.is_unit_algebra() {
        return Err(Error::UnitAlgebra);
    }
    Ok(leading_dimension(a.presentation()))
}

pub(crate) fn leading_dimension(gb: &GroebnerBasis) -> usize {
    let n = gb.ring().nvars();
    let supports: Vec<Vec<usize>> =
        gb.generators().iter().map(|g| g.leading_monomial().unwrap().support().collect()).collect();
    let mut best = 0;
    let mut chosen = vec![false; n];
    search(0, 0, n, &supports, &mut chosen, &mut best);
    best
}

// Branch on including variable `i`; a set is admissible when it contains the
// support of no leading monomial.
fn search(i: usize, size: usize, n: usize, supports: &[Vec<usize>], chosen: &mut [bool], best: &mut usize) {
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    chosen[i] = true;
    let ok = supports.iter().all(|s| !s.contains(&i) || !s.iter().all(|&v| chosen[v]));
    if ok {
        search(i + 1, size + 1, n, supports, chosen, best);
    }
    chosen[i] = false;
    search(i + 1, size, n, supports, chosen, best);
}

/// True when no leading monomial of `gb` divides `m`.
pub(crate) fn is_standard(gb: &GroebnerBasis, m: &Monomial) -> bool {
    gb.generators().iter().all(|g| !g.leading_monomial().unwrap().divides(m))
}
