//! Derivations on presented algebras, differential ideals, closures and
//! core descent.

mod constants;

use std::fmt;

pub use constants::{constants_search, is_constant_fraction, is_nonrational_fraction, ConstantSearch};

use crate::algebra::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_equal, module_solve_vec, GroebnerBasis};
use crate::symbolics::{Polynomial, VariableRing};

/// A Q-linear derivation of `A`, fixed by the images of the variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    algebra: PresentedAlgebra,
    images: Vec<Polynomial>,
}

impl Derivation {
    /// Checks that every presentation generator maps into the presentation.
    pub fn new(algebra: &PresentedAlgebra, images: &[Polynomial]) -> Result<Self> {
        let n = algebra.ring().nvars();
        if images.len() != n {
            return Err(Error::Declaration(format!("derivation needs {n} images, got {}", images.len())));
        }
        for p in images {
            algebra.check_ring(p)?;
        }
        let d = Derivation { algebra: algebra.clone(), images: images.iter().map(|p| algebra.reduce(p)).collect() };
        for g in algebra.presentation().generators() {
            let image = d.eval(g);
            if !image.is_zero() {
                return Err(Error::NotWellDefined { generator: g.to_string(), image: image.to_string() });
            }
        }
        Ok(d)
    }

    pub fn zero(algebra: &PresentedAlgebra) -> Self {
        let z = Polynomial::zero(algebra.ring());
        Derivation { algebra: algebra.clone(), images: vec![z; algebra.ring().nvars()] }
    }

    /// `d/d(var)` on a polynomial ring.
    pub fn partial(algebra: &PresentedAlgebra, var: &str) -> Result<Self> {
        let ring = algebra.ring();
        let i = ring.var_index(var)?;
        let images: Vec<Polynomial> =
            (0..ring.nvars()).map(|k| if k == i { Polynomial::one(ring) } else { Polynomial::zero(ring) }).collect();
        Self::new(algebra, &images)
    }

    /// Reads images given as `(variable, polynomial text)` pairs; every
    /// variable must appear exactly once.
    pub fn from_text(algebra: &PresentedAlgebra, pairs: &[(&str, &str)]) -> Result<Self> {
        let ring = algebra.ring();
        let mut images: Vec<Option<Polynomial>> = vec![None; ring.nvars()];
        for (v, text) in pairs {
            let i = ring.var_index(v)?;
            if images[i].is_some() {
                return Err(Error::Declaration(format!("variable {v} has two images")));
            }
            images[i] = Some(crate::symbolics::parse_polynomial(text, ring)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, p)| p.ok_or_else(|| Error::Declaration(format!("variable {} has no image", ring.name(i)))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, &images)
    }

    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &VariableRing {
        self.algebra.ring()
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|p| p.is_zero())
    }

    /// `Σ ∂p/∂x_i · image_i`, reduced.
    pub(crate) fn eval(&self, p: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.ring());
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() {
                continue;
            }
            let d = p.partial(i);
            if !d.is_zero() {
                acc = &acc + &(&d * img);
            }
        }
        self.algebra.reduce(&acc)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.algebra.check_ring(p)?;
        Ok(self.eval(p))
    }

    /// `[self, other]` evaluated on the variables.
    pub fn commutator(&self, other: &Derivation) -> Result<Derivation> {
        self.algebra.check_same(&other.algebra)?;
        let images: Vec<Polynomial> = (0..self.ring().nvars())
            .map(|i| {
                let x = Polynomial::var(self.ring(), i);
                &self.eval(&other.eval(&x)) - &other.eval(&self.eval(&x))
            })
            .collect();
        Derivation::new(&self.algebra, &images)
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.images.iter().enumerate().map(|(i, p)| format!("{} -> {}", self.ring().name(i), p)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn apply(d: &Derivation, p: &Polynomial) -> Result<Polynomial> {
    d.apply(p)
}

fn common_algebra(deltas: &[Derivation]) -> Result<Option<&PresentedAlgebra>> {
    let Some(first) = deltas.first() else { return Ok(None) };
    for d in &deltas[1..] {
        first.algebra.check_same(&d.algebra)?;
    }
    Ok(Some(&first.algebra))
}

/// First `(derivation index, generator, image)` with the image outside `J`.
pub fn differential_witness(j: &GroebnerBasis, deltas: &[Derivation]) -> Result<Option<(usize, Polynomial, Polynomial)>> {
    let Some(alg) = common_algebra(deltas)? else { return Ok(None) };
    let lifted = alg.lift(j)?;
    for g in lifted.generators() {
        for (k, d) in deltas.iter().enumerate() {
            let image = d.eval(g);
            if !lifted.reduce(&image).is_zero() {
                return Ok(Some((k, g.clone(), image)));
            }
        }
    }
    Ok(None)
}

/// `δ(g) ∈ J` for every generator `g` and every `δ`; generators suffice by
/// the Leibniz rule.
pub fn is_differential_ideal(j: &GroebnerBasis, deltas: &[Derivation]) -> Result<bool> {
    Ok(differential_witness(j, deltas)?.is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainDirection {
    Ascending,
    Descending,
}

/// A monotone chain of ideals. `iterations` counts the rounds computed, so
/// `chain.len() == iterations + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub direction: ChainDirection,
    pub chain: Vec<GroebnerBasis>,
    pub stabilized: bool,
    pub iterations: usize,
}

impl ChainReport {
    pub fn last(&self) -> &GroebnerBasis {
        self.chain.last().unwrap()
    }

    /// Index of the first entry equal to its successor.
    pub fn stable_index(&self) -> Option<usize> {
        self.chain.windows(2).position(|w| w[0] == w[1])
    }

    /// For each consecutive pair, a generator of the larger ideal missing
    /// from the smaller one, if any.
    pub fn strictness_witnesses(&self) -> Vec<Option<Polynomial>> {
        self.chain
            .windows(2)
            .map(|w| {
                let (big, small) = match self.direction {
                    ChainDirection::Ascending => (&w[1], &w[0]),
                    ChainDirection::Descending => (&w[0], &w[1]),
                };
                big.generators().iter().find(|g| !small.reduce(g).is_zero()).cloned()
            })
            .collect()
    }
}

/// Smallest differential ideal of `A` containing `gens`.
pub fn differential_closure(algebra: &PresentedAlgebra, gens: &[Polynomial], deltas: &[Derivation]) -> Result<ChainReport> {
    for d in deltas {
        algebra.check_same(&d.algebra)?;
    }
    let mut current = algebra.ideal(gens)?;
    let mut chain = vec![current.clone()];
    loop {
        let mut extra = Vec::new();
        for g in current.generators() {
            for d in deltas {
                let image = d.eval(g);
                if !current.reduce(&image).is_zero() {
                    extra.push(image);
                }
            }
        }
        let next = if extra.is_empty() { current.clone() } else { current.extend(&extra)? };
        let done = ideal_equal(&next, &current)?;
        chain.push(next.clone());
        if done {
            let iterations = chain.len() - 1;
            return Ok(ChainReport { direction: ChainDirection::Ascending, chain, stabilized: true, iterations });
        }
        current = next;
    }
}

/// One descent step: `{a ∈ J : δ(a) ∈ J for all δ}`.
fn core_step(algebra: &PresentedAlgebra, j: &GroebnerBasis, deltas: &[Derivation]) -> Result<GroebnerBasis> {
    if j.is_zero_ideal() || deltas.is_empty() {
        return Ok(j.clone());
    }
    let gens = j.generators();
    // For a = Σ h_i g_i, δ(a) ≡ Σ h_i δ(g_i) modulo J.
    let columns: Vec<Vec<Polynomial>> = gens.iter().map(|g| deltas.iter().map(|d| d.eval(g)).collect()).collect();
    let sols = module_solve_vec(&columns, j)?;
    let ring = algebra.ring();
    let mut elems: Vec<Polynomial> = sols
        .iter()
        .map(|h| h.iter().zip(gens).fold(Polynomial::zero(ring), |acc, (hi, gi)| &acc + &(hi * gi)))
        .collect();
    elems.extend(algebra.presentation().generators().iter().cloned());
    buchberger(ring, &elems)
}

/// Descending chain `J_0 = J ⊇ J_1 ⊇ ...` towards the largest differential
/// ideal inside `J`. Without stabilization the entries are upper bounds for
/// that ideal, not the ideal itself.
pub fn differential_core_descent(j: &GroebnerBasis, deltas: &[Derivation], max_iter: usize) -> Result<ChainReport> {
    let max_iter = max_iter.max(1);
    let algebra = match common_algebra(deltas)? {
        Some(a) => a.clone(),
        None => PresentedAlgebra::free(j.ring()),
    };
    let mut current = algebra.lift(j)?;
    let mut chain = vec![current.clone()];
    for _ in 0..max_iter {
        let next = core_step(&algebra, &current, deltas)?;
        let done = ideal_equal(&next, &current)?;
        chain.push(next.clone());
        if done {
            let iterations = chain.len() - 1;
            return Ok(ChainReport { direction: ChainDirection::Descending, chain, stabilized: true, iterations });
        }
        current = next;
    }
    Ok(ChainReport { direction: ChainDirection::Descending, chain, stabilized: false, iterations: max_iter })
}
