//! Skew polynomial rings `R[x; δ]` in left form `Σ r_i x^i`.

use std::fmt;

use crate::algebra::linalg::EchelonBasis;
use crate::algebra::{PresentedAlgebra, Subspace};
use crate::differential::{differential_witness, Derivation};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::par;
use crate::symbolics::{parse_polynomial, Monomial, Polynomial, VariableRing};

#[derive(Clone, PartialEq, Eq)]
pub struct OrePolynomial {
    coeffs: Vec<Polynomial>,
    twist: Derivation,
}

impl OrePolynomial {
    /// `Σ coeffs[i] x^i`, coefficients reduced in the base algebra.
    pub fn new(twist: &Derivation, coeffs: &[Polynomial]) -> Result<Self> {
        let alg = twist.algebra();
        for c in coeffs {
            alg.check_ring(c)?;
        }
        Ok(Self::from_reduced(twist, coeffs.iter().map(|c| alg.reduce(c)).collect()))
    }

    fn from_reduced(twist: &Derivation, mut coeffs: Vec<Polynomial>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OrePolynomial { coeffs, twist: twist.clone() }
    }

    pub fn zero(twist: &Derivation) -> Self {
        OrePolynomial { coeffs: Vec::new(), twist: twist.clone() }
    }

    pub fn constant(twist: &Derivation, r: &Polynomial) -> Result<Self> {
        Self::new(twist, std::slice::from_ref(r))
    }

    pub fn one(twist: &Derivation) -> Self {
        Self::from_reduced(twist, vec![Polynomial::one(twist.ring())])
    }

    /// The skew variable `x`.
    pub fn x(twist: &Derivation) -> Self {
        let ring = twist.ring();
        Self::from_reduced(twist, vec![Polynomial::zero(ring), Polynomial::one(ring)])
    }

    /// Reads a left-form expression in which `var` names the skew variable,
    /// e.g. `a*x^2 + 2*x` with `var = "x"`. Each monomial is read with its
    /// `var` power moved to the right.
    pub fn parse(text: &str, twist: &Derivation, var: &str) -> Result<Self> {
        let base = twist.ring();
        if base.index_of(var).is_some() {
            return Err(Error::Declaration(format!("skew variable {var} clashes with a ring variable")));
        }
        let ext = base.extend(&[var])?;
        let p = parse_polynomial(text, &ext)?;
        let n = base.nvars();
        let deg = p.degree_in(n) as usize;
        let mut parts: Vec<Vec<(Monomial, crate::symbolics::Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in p.terms() {
            let e = m.exponents();
            parts[e[n] as usize].push((Monomial::from_exponents(e[..n].to_vec()), c.clone()));
        }
        let coeffs: Vec<Polynomial> = parts.into_iter().map(|t| Polynomial::from_terms(base, t)).collect();
        Self::new(twist, &coeffs)
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn twist(&self) -> &Derivation {
        &self.twist
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `x`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn check(&self, other: &OrePolynomial) -> Result<()> {
        if self.twist == other.twist {
            Ok(())
        } else {
            Err(Error::TwistMismatch)
        }
    }

    pub fn add(&self, other: &OrePolynomial) -> Result<OrePolynomial> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Polynomial::zero(self.twist.ring());
        let coeffs = (0..n)
            .map(|i| &*self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Ok(Self::from_reduced(&self.twist, coeffs))
    }

    pub fn sub(&self, other: &OrePolynomial) -> Result<OrePolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> OrePolynomial {
        OrePolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect(), twist: self.twist.clone() }
    }

    pub fn scale(&self, c: &crate::symbolics::Rational) -> OrePolynomial {
        Self::from_reduced(&self.twist, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// `x · self`, rewriting each `x·r` as `r·x + δ(r)`.
    fn left_x(&self) -> OrePolynomial {
        let ring = self.twist.ring();
        let mut out = vec![Polynomial::zero(ring); self.coeffs.len() + 1];
        for (j, s) in self.coeffs.iter().enumerate() {
            out[j + 1] = &out[j + 1] + s;
            out[j] = &out[j] + &self.twist.eval(s);
        }
        Self::from_reduced(&self.twist, out)
    }

    /// `r · self` for a base element `r`.
    fn left_base(&self, r: &Polynomial) -> OrePolynomial {
        let alg = self.twist.algebra();
        Self::from_reduced(&self.twist, self.coeffs.iter().map(|s| alg.reduce(&(r * s))).collect())
    }

    /// Coefficients reduced modulo an ideal of the base.
    pub fn reduce_mod(&self, i: &GroebnerBasis) -> OrePolynomial {
        Self::from_reduced(&self.twist, self.coeffs.iter().map(|c| i.reduce(c)).collect())
    }

    /// Encodes `Σ r_i x^i` as a commutative polynomial in `ext`, whose last
    /// variable stands for `x`. Only used for linear algebra.
    fn encode(&self, ext: &VariableRing) -> Polynomial {
        let n = ext.nvars() - 1;
        let terms = self.coeffs.iter().enumerate().flat_map(|(i, c)| {
            c.terms().iter().map(move |(m, q)| {
                let mut e = m.exponents().to_vec();
                e.push(i as u32);
                debug_assert_eq!(e.len(), n + 1);
                (Monomial::from_exponents(e), q.clone())
            })
        });
        Polynomial::from_terms(ext, terms)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpow = match i {
                0 => String::new(),
                1 => var.to_string(),
                k => format!("{var}^{k}"),
            };
            parts.push(match (i, c.is_one(), c.len()) {
                (0, _, _) => c.to_string(),
                (_, true, _) => xpow,
                (_, _, 1) if c.is_constant() || !c.to_string().starts_with('-') => format!("{c}*{xpow}"),
                _ => format!("({c})*{xpow}"),
            });
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Debug for OrePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Display for OrePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// Product in `R[x; δ]`.
pub fn ore_mul(f: &OrePolynomial, g: &OrePolynomial) -> Result<OrePolynomial> {
    f.check(g)?;
    let mut acc = OrePolynomial::zero(&f.twist);
    let mut xg = g.clone();
    for (i, r) in f.coeffs.iter().enumerate() {
        if i > 0 {
            xg = xg.left_x();
        }
        if !r.is_zero() {
            acc = acc.add(&xg.left_base(r))?;
        }
    }
    Ok(acc)
}

/// Certificate that `I·R[x; δ]` is two-sided for a differential ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedCertificate {
    /// Number of products `f·g` and `g·f` examined.
    pub products_checked: usize,
    pub two_sided: bool,
    /// Reducing coefficients before or after multiplying agrees on all
    /// sampled pairs.
    pub quotient_compatible: bool,
    pub witness: Option<String>,
}

fn default_samples(twist: &Derivation) -> Vec<OrePolynomial> {
    let ring = twist.ring();
    let x = OrePolynomial::x(twist);
    let mut out = vec![OrePolynomial::one(twist), x.clone(), ore_mul(&x, &x).unwrap()];
    for i in 0..ring.nvars() {
        let v = OrePolynomial::from_reduced(twist, vec![twist.algebra().reduce(&Polynomial::var(ring, i))]);
        out.push(ore_mul(&v, &x).unwrap());
        out.push(v);
    }
    out
}

/// Checks, for generators `g` of `I` and samples `f`, that `f·g` and `g·f`
/// have every coefficient in `I`, and that multiplication commutes with
/// reduction modulo `I`. Empty `samples` selects a default family.
pub fn induced_two_sided(i: &GroebnerBasis, twist: &Derivation, samples: &[OrePolynomial]) -> Result<TwoSidedCertificate> {
    if let Some((_, g, image)) = differential_witness(i, std::slice::from_ref(twist))? {
        return Err(Error::NotDifferential(format!("{g} maps to {image}")));
    }
    let lifted = twist.algebra().lift(i)?;
    let owned;
    let samples = if samples.is_empty() {
        owned = default_samples(twist);
        &owned[..]
    } else {
        samples
    };
    let mut checked = 0;
    let mut witness = None;
    for g in lifted.generators() {
        let go = OrePolynomial::constant(twist, g)?;
        for f in samples {
            for prod in [ore_mul(f, &go)?, ore_mul(&go, f)?] {
                checked += 1;
                if witness.is_none() && prod.coeffs.iter().any(|c| !lifted.reduce(c).is_zero()) {
                    witness = Some(format!("{} * {} = {}", f, g, prod));
                }
            }
        }
    }
    let mut compatible = true;
    for f in samples {
        for h in samples {
            let direct = ore_mul(f, h)?.reduce_mod(&lifted);
            let via = ore_mul(&f.reduce_mod(&lifted), &h.reduce_mod(&lifted))?.reduce_mod(&lifted);
            if direct != via {
                compatible = false;
            }
        }
    }
    Ok(TwoSidedCertificate { products_checked: checked, two_sided: witness.is_none(), quotient_compatible: compatible, witness })
}

/// Grows `V^n = V^(n-1) + N_(n-1)·V`, where `N_(n-1)` holds the basis
/// vectors added at the previous step; valid because `1 ∈ V`.
fn grow<T, M>(gens: &[T], n_max: usize, mul: M, encode: impl Fn(&T) -> Polynomial) -> Result<Vec<usize>>
where
    T: Clone + Send + Sync,
    M: Fn(&T, &T) -> Result<T> + Sync + Send,
{
    let mut ech = EchelonBasis::new();
    let mut fresh: Vec<T> = Vec::new();
    for g in gens {
        if ech.insert(&encode(g)) {
            fresh.push(g.clone());
        }
    }
    let mut dims = vec![ech.len()];
    while dims.len() < n_max {
        let pairs: Vec<(usize, usize)> = (0..fresh.len()).flat_map(|i| (0..gens.len()).map(move |j| (i, j))).collect();
        let prods = par::try_map(&pairs, |&(i, j)| mul(&fresh[i], &gens[j]))?;
        let mut next = Vec::new();
        for p in prods {
            if ech.insert(&encode(&p)) {
                next.push(p);
            }
        }
        fresh = next;
        dims.push(ech.len());
    }
    Ok(dims)
}

/// `dim V^1, ..., dim V^n_max` in `R[x; δ]`; `1` must lie in the span of
/// `gens`.
pub fn growth_sequence(gens: &[OrePolynomial], n_max: usize) -> Result<Vec<usize>> {
    let Some(first) = gens.first() else {
        return Err(Error::NotApplicable("empty generating set".into()));
    };
    let twist = first.twist.clone();
    for g in gens {
        first.check(g)?;
    }
    let ext = twist.ring().extend(&[twist.ring().fresh_name("_x").as_str()])?;
    let mut span = EchelonBasis::new();
    for g in gens {
        span.insert(&g.encode(&ext));
    }
    if !span.contains(&Polynomial::one(&ext)) {
        return Err(Error::NotApplicable("1 must lie in the generating subspace".into()));
    }
    grow(gens, n_max, ore_mul, |p| p.encode(&ext))
}

/// `dim V^1, ..., dim V^n_max` for a subspace of a commutative algebra.
pub fn commutative_growth(v: &Subspace, n_max: usize) -> Result<Vec<usize>> {
    let alg: PresentedAlgebra = v.algebra().clone();
    if !v.contains_one() {
        return Err(Error::NotApplicable("1 must lie in the generating subspace".into()));
    }
    grow(v.basis(), n_max, |a, b| Ok(alg.reduce(&(a * b))), |p| p.clone())
}

/// Least-squares fit of `log dim` against `log n` over the tail window.
#[derive(Clone, Debug, PartialEq)]
pub struct GkEstimate {
    pub slope: f64,
    pub intercept: f64,
    /// Root mean square of the fit residuals.
    pub residual: f64,
    pub points: usize,
}

/// `dims[k]` is `dim V^(k+1)`; `fit_window` is the fraction of the tail
/// used (`0.5` for the last half).
pub fn gk_estimate(dims: &[usize], fit_window: f64) -> Result<GkEstimate> {
    let take = ((dims.len() as f64) * fit_window.clamp(0.0, 1.0)).ceil() as usize;
    let start = dims.len() - take.min(dims.len());
    let pts: Vec<(f64, f64)> =
        (start..dims.len()).filter(|&k| dims[k] > 0).map(|k| (((k + 1) as f64).ln(), (dims[k] as f64).ln())).collect();
    if pts.len() < 3 {
        return Err(Error::WindowTooSmall(pts.len()));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let intercept = my - slope * mx;
    let residual = (pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum::<f64>() / n).sqrt();
    Ok(GkEstimate { slope, intercept, residual, points: pts.len() })
}
