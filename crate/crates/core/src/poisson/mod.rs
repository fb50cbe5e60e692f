//! Poisson brackets on presented algebras.

mod evidence;

use std::fmt;
use std::sync::Arc;

pub use evidence::{rationality_evidence, tall_prime_bracket_check, RationalityEvidence};

use crate::algebra::PresentedAlgebra;
use crate::differential::{is_differential_ideal, Derivation};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::symbolics::{BracketEntry, Polynomial};

struct Inner {
    algebra: PresentedAlgebra,
    // full antisymmetric matrix, matrix[i][j] = {x_i, x_j}
    matrix: Vec<Vec<Polynomial>>,
    validated: bool,
}

/// Structure matrix `p_ij = {x_i, x_j}` of a bracket on `A`.
#[derive(Clone)]
pub struct PoissonStructure(Arc<Inner>);

fn build_matrix(algebra: &PresentedAlgebra, entries: &[BracketEntry]) -> Result<Vec<Vec<Polynomial>>> {
    let ring = algebra.ring();
    let n = ring.nvars();
    let mut matrix = vec![vec![Polynomial::zero(ring); n]; n];
    let mut seen = vec![vec![false; n]; n];
    for (i, j, p) in entries {
        let (i, j) = (*i, *j);
        if i >= n || j >= n {
            return Err(Error::Declaration(format!("bracket index ({i}, {j}) out of range")));
        }
        algebra.check_ring(p)?;
        if i == j {
            if p.is_zero() {
                continue;
            }
            return Err(Error::Declaration(format!("[{0}, {0}] must be 0", ring.name(i))));
        }
        if seen[i][j] {
            return Err(Error::Declaration(format!("pair [{}, {}] given twice", ring.name(i), ring.name(j))));
        }
        seen[i][j] = true;
        seen[j][i] = true;
        let r = algebra.reduce(p);
        matrix[j][i] = -&r;
        matrix[i][j] = r;
    }
    Ok(matrix)
}

impl PoissonStructure {
    /// Builds and validates: Jacobi on every generator triple, then the
    /// presentation must be a Poisson ideal. Entries may list a pair in
    /// either order.
    pub fn new(algebra: &PresentedAlgebra, entries: &[BracketEntry]) -> Result<Self> {
        let matrix = build_matrix(algebra, entries)?;
        let s = PoissonStructure(Arc::new(Inner { algebra: algebra.clone(), matrix, validated: false }));
        if let Some((triple, jac)) = s.jacobi_witness() {
            let ring = algebra.ring();
            return Err(Error::JacobiViolation {
                triple: (ring.name(triple.0).into(), ring.name(triple.1).into(), ring.name(triple.2).into()),
                jacobiator: jac.to_string(),
            });
        }
        for g in algebra.presentation().generators() {
            for i in 0..algebra.ring().nvars() {
                let r = s.bracket_unchecked(g, &Polynomial::var(algebra.ring(), i));
                if !r.is_zero() {
                    return Err(Error::PresentationNotPoisson {
                        generator: g.to_string(),
                        variable: algebra.ring().name(i).into(),
                        residue: r.to_string(),
                    });
                }
            }
        }
        let inner = Arc::try_unwrap(s.0).ok().unwrap();
        Ok(PoissonStructure(Arc::new(Inner { validated: true, ..inner })))
    }

    /// Builds without any validation; `is_validated` reports false.
    pub fn new_unchecked(algebra: &PresentedAlgebra, entries: &[BracketEntry]) -> Result<Self> {
        let matrix = build_matrix(algebra, entries)?;
        Ok(PoissonStructure(Arc::new(Inner { algebra: algebra.clone(), matrix, validated: false })))
    }

    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.0.algebra
    }

    pub fn is_validated(&self) -> bool {
        self.0.validated
    }

    /// `{x_i, x_j}`.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.0.matrix[i][j]
    }

    /// Nonzero entries with `i < j`.
    pub fn entries(&self) -> Vec<BracketEntry> {
        let n = self.0.matrix.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.0.matrix[i][j].is_zero() {
                    out.push((i, j, self.0.matrix[i][j].clone()));
                }
            }
        }
        out
    }

    fn bracket_unchecked(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let n = self.0.matrix.len();
        let da: Vec<Polynomial> = (0..n).map(|i| a.partial(i)).collect();
        let db: Vec<Polynomial> = (0..n).map(|i| b.partial(i)).collect();
        let ring = self.0.algebra.ring();
        let mut acc = Polynomial::zero(ring);
        for i in 0..n {
            for j in i + 1..n {
                let p = &self.0.matrix[i][j];
                if p.is_zero() {
                    continue;
                }
                let cross = &(&da[i] * &db[j]) - &(&da[j] * &db[i]);
                if !cross.is_zero() {
                    acc = &acc + &(p * &cross);
                }
            }
        }
        self.0.algebra.reduce(&acc)
    }

    /// `{a, b}` extended from the generators by the Leibniz rule.
    pub fn bracket(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.0.algebra.check_ring(a)?;
        self.0.algebra.check_ring(b)?;
        Ok(self.bracket_unchecked(a, b))
    }

    /// `{a,{b,c}} + {c,{a,b}} + {b,{c,a}}`.
    pub fn jacobiator(&self, a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<Polynomial> {
        let t1 = self.bracket(a, &self.bracket(b, c)?)?;
        let t2 = self.bracket(c, &self.bracket(a, b)?)?;
        let t3 = self.bracket(b, &self.bracket(c, a)?)?;
        Ok(self.0.algebra.reduce(&(&(&t1 + &t2) + &t3)))
    }

    /// First generator triple `i < j < k` with a nonzero Jacobiator.
    pub fn jacobi_witness(&self) -> Option<((usize, usize, usize), Polynomial)> {
        let ring = self.0.algebra.ring();
        let n = ring.nvars();
        let x = |i| Polynomial::var(ring, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = self.jacobiator(&x(i), &x(j), &x(k)).unwrap();
                    if !jac.is_zero() {
                        return Some(((i, j, k), jac));
                    }
                }
            }
        }
        None
    }

    /// `δ_i = {−, x_i}`, so `δ_i(x_j) = {x_j, x_i}`.
    pub fn induced_derivations(&self) -> Result<Vec<Derivation>> {
        let n = self.0.matrix.len();
        (0..n)
            .map(|i| {
                let images: Vec<Polynomial> = (0..n).map(|j| self.0.matrix[j][i].clone()).collect();
                Derivation::new(&self.0.algebra, &images)
            })
            .collect()
    }
}

impl fmt::Debug for PoissonStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PoissonStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.0.algebra.ring();
        let parts: Vec<String> =
            self.entries().iter().map(|(i, j, p)| format!("[{}, {}] = {}", ring.name(*i), ring.name(*j), p)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl PartialEq for PoissonStructure {
    fn eq(&self, other: &Self) -> bool {
        self.0.algebra == other.0.algebra && self.0.matrix == other.0.matrix
    }
}

impl Eq for PoissonStructure {}

/// Validating constructor.
pub fn new_structure(algebra: &PresentedAlgebra, entries: &[BracketEntry]) -> Result<PoissonStructure> {
    PoissonStructure::new(algebra, entries)
}

pub fn bracket(b: &PoissonStructure, x: &Polynomial, y: &Polynomial) -> Result<Polynomial> {
    b.bracket(x, y)
}

pub fn induced_derivations(b: &PoissonStructure) -> Result<Vec<Derivation>> {
    b.induced_derivations()
}

/// The two verdicts behind [`is_poisson_ideal`]: `{g, x_i} ∈ J` for the
/// generators, and differential-ideal membership under the induced
/// derivations.
pub fn poisson_ideal_paths(b: &PoissonStructure, j: &GroebnerBasis) -> Result<(bool, bool)> {
    let alg = b.algebra();
    let lifted = alg.lift(j)?;
    let ring = alg.ring();
    let direct = lifted.generators().iter().all(|g| {
        (0..ring.nvars()).all(|i| lifted.reduce(&b.bracket_unchecked(g, &Polynomial::var(ring, i))).is_zero())
    });
    let differential = is_differential_ideal(&lifted, &b.induced_derivations()?)?;
    Ok((direct, differential))
}

/// Whether `{J, A} ⊆ J`; both characterizations are computed and must agree.
pub fn is_poisson_ideal(b: &PoissonStructure, j: &GroebnerBasis) -> Result<bool> {
    let (direct, differential) = poisson_ideal_paths(b, j)?;
    if direct != differential {
        return Err(Error::InconsistentPaths { direct, differential });
    }
    Ok(direct)
}

/// A failure of `[δ_i, δ_j] = Σ_k ∂p_{i,j}/∂x_k · δ_k` at the generator
/// `x_l`, with `p_{i,j} = {x_j, x_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub residue: Polynomial,
}

/// Checks the commutator identity for every pair of induced derivations on
/// every generator. Returns the first failure.
pub fn commutator_identity_check(b: &PoissonStructure) -> Result<Option<CommutatorWitness>> {
    let alg = b.algebra();
    let ring = alg.ring();
    let n = ring.nvars();
    // δ_i(a) = {a, x_i}, evaluated through the bracket so that unvalidated
    // structures can be examined too
    let delta = |i: usize, a: &Polynomial| b.bracket_unchecked(a, &Polynomial::var(ring, i));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let p = b.entry(j, i);
            for l in 0..n {
                let x = Polynomial::var(ring, l);
                let lhs = &delta(i, &delta(j, &x)) - &delta(j, &delta(i, &x));
                let mut rhs = Polynomial::zero(ring);
                for k in 0..n {
                    let d = p.partial(k);
                    if !d.is_zero() {
                        rhs = &rhs + &(&d * &delta(k, &x));
                    }
                }
                let residue = alg.reduce(&(&lhs - &rhs));
                if !residue.is_zero() {
                    return Ok(Some(CommutatorWitness { i, j, l, residue }));
                }
            }
        }
    }
    Ok(None)
}

/// `{r, s} = δ1(r)δ2(s) − δ2(r)δ1(s)` for commuting derivations.
pub fn from_commuting_derivations(d1: &Derivation, d2: &Derivation) -> Result<PoissonStructure> {
    let alg = d1.algebra();
    alg.check_same(d2.algebra())?;
    let ring = alg.ring();
    let n = ring.nvars();
    for i in 0..n {
        let x = Polynomial::var(ring, i);
        let c = alg.reduce(&(&d1.apply(&d2.apply(&x)?)? - &d2.apply(&d1.apply(&x)?)?));
        if !c.is_zero() {
            return Err(Error::NonCommuting { generator: ring.name(i).into(), residue: c.to_string() });
        }
    }
    let (a, b) = (d1.images(), d2.images());
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = &(&a[i] * &b[j]) - &(&b[i] * &a[j]);
            entries.push((i, j, p));
        }
    }
    PoissonStructure::new(alg, &entries)
}

/// The structure on `R[t]` from a derivation of `R`: `δ` on coefficients
/// against `d/dt`. The new variable is `t` unless that name is taken.
pub fn rt_extension(delta: &Derivation) -> Result<PoissonStructure> {
    if delta.is_zero() {
        return Err(Error::TrivialDerivation);
    }
    let base = delta.algebra();
    let ring = base.ring();
    let t = if ring.index_of("t").is_none() { "t".to_string() } else { ring.fresh_name("t") };
    let ext = ring.extend(&[t.as_str()])?;
    let rels = base.presentation().generators().iter().map(|g| g.embed_by_name(&ext)).collect::<Result<Vec<_>>>()?;
    let alg = PresentedAlgebra::new(&ext, &rels, base.domain_claim())?;
    let mut d1 = delta.images().iter().map(|p| p.embed_by_name(&ext)).collect::<Result<Vec<_>>>()?;
    d1.push(Polynomial::zero(&ext));
    let d1 = Derivation::new(&alg, &d1)?;
    let d2 = Derivation::partial(&alg, &t)?;
    from_commuting_derivations(&d1, &d2)
}

/// `P·R[t]` for an ideal `P` of the base ring.
pub fn extend_ideal(b: &PoissonStructure, p: &GroebnerBasis) -> Result<GroebnerBasis> {
    let alg = b.algebra();
    let gens = p.generators().iter().map(|g| g.embed_by_name(alg.ring())).collect::<Result<Vec<_>>>()?;
    alg.ideal(&gens)
}
