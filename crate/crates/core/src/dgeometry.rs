//! Prolongations, D-varieties given by sections, D-subvarieties and sharp
//! points at constant coordinates.

use crate::algebra::{rational_points, PresentedAlgebra};
use crate::differential::{is_differential_ideal, Derivation};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::symbolics::{Polynomial, Rational};

/// `τV`: the ideal of `{P, Σ ∂P/∂X_i · Y_i}` over Gröbner generators `P`,
/// in the ring with tangent coordinates `Y1..Yn` appended.
pub fn prolongation_ideal(i: &GroebnerBasis) -> Result<GroebnerBasis> {
    let ring = i.ring();
    let n = ring.nvars();
    let mut names = Vec::with_capacity(n);
    for k in 1..=n {
        let stem = format!("Y{k}");
        names.push(if ring.index_of(&stem).is_none() { stem } else { ring.fresh_name(&stem) });
    }
    let ext = ring.extend(&names)?;
    let mut gens = Vec::with_capacity(2 * i.len());
    for p in i.generators() {
        let lifted = p.embed_by_name(&ext)?;
        let mut tangent = Polynomial::zero(&ext);
        for k in 0..n {
            let d = p.partial(k);
            if !d.is_zero() {
                tangent = &tangent + &(&d.embed_by_name(&ext)? * &Polynomial::var(&ext, n + k));
            }
        }
        gens.push(lifted);
        gens.push(tangent);
    }
    buchberger(&ext, &gens)
}

/// An affine variety with a section of its prolongation, stored as the
/// derivation it induces on the coordinate ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DVariety {
    induced: Derivation,
}

impl DVariety {
    pub fn base(&self) -> &PresentedAlgebra {
        self.induced.algebra()
    }

    pub fn section(&self) -> &[Polynomial] {
        self.induced.images()
    }

    pub fn induced(&self) -> &Derivation {
        &self.induced
    }

    /// Every derivation of the coordinate ring is a section.
    pub fn from_derivation(d: &Derivation) -> Self {
        DVariety { induced: d.clone() }
    }
}

/// Checks `Σ ∂P/∂X_i · s_i ∈ I(V)` for every generator `P`.
pub fn make_dvariety(base: &PresentedAlgebra, section: &[Polynomial]) -> Result<DVariety> {
    let ring = base.ring();
    if section.len() != ring.nvars() {
        return Err(Error::Declaration(format!("section needs {} entries, got {}", ring.nvars(), section.len())));
    }
    for s in section {
        base.check_ring(s)?;
    }
    // graph condition: the prolongation equations vanish at (X, s(X))
    let mut point: Vec<Polynomial> = (0..ring.nvars()).map(|k| Polynomial::var(ring, k)).collect();
    point.extend(section.iter().cloned());
    let tau = prolongation_ideal(base.presentation())?;
    for g in base.presentation().generators() {
        let mut residue = Polynomial::zero(ring);
        for (k, s) in section.iter().enumerate() {
            residue = &residue + &(&g.partial(k) * s);
        }
        let residue = base.reduce(&residue);
        if !residue.is_zero() {
            return Err(Error::InvalidSection { generator: g.to_string(), residue: residue.to_string() });
        }
    }
    for t in tau.generators() {
        let residue = base.reduce(&t.substitute(&point));
        if !residue.is_zero() {
            return Err(Error::InvalidSection { generator: t.to_string(), residue: residue.to_string() });
        }
    }
    Ok(DVariety { induced: Derivation::new(base, section)? })
}

/// Whether `W ⊇ I(V)` is preserved by the induced derivation.
pub fn is_d_subvariety(d: &DVariety, w: &GroebnerBasis) -> Result<bool> {
    for g in d.base().presentation().generators() {
        if !w.contains(g)? {
            return Err(Error::NotContained(g.to_string()));
        }
    }
    is_differential_ideal(w, std::slice::from_ref(&d.induced))
}

/// Locus `I(V) + <s_1..s_n>` of points with constant coordinates where the
/// section vanishes, and its rational points when it is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpPoints {
    pub locus: GroebnerBasis,
    pub points: Option<Vec<Vec<Rational>>>,
}

pub fn constant_sharp_points(d: &DVariety) -> Result<SharpPoints> {
    let locus = d.base().ideal(d.section())?;
    let points = if locus.is_unit() {
        Some(Vec::new())
    } else if crate::algebra::leading_dimension(&locus) == 0 {
        Some(rational_points(&locus)?)
    } else {
        None
    };
    Ok(SharpPoints { locus, points })
}
