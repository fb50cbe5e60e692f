//! Dense univariate polynomials over Q, for minimal polynomials and
//! squarefree parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::symbolics::{Monomial, Polynomial, Rational, VariableRing};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        UniPoly(self.0.iter().map(|c| c * &inv).collect())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect())
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.lead();
        if r.len() <= dd {
            return (UniPoly(vec![]), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[k - dd + j] -= &c * dc;
            }
            q[k - dd] = c;
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `Σ c_k var^k` as a polynomial of `ring`.
    pub fn to_polynomial(&self, ring: &VariableRing, var: usize) -> Polynomial {
        let n = ring.nvars();
        Polynomial::from_terms(ring, self.0.iter().enumerate().map(|(k, c)| (Monomial::var(n, var, k as u32), c.clone())))
    }

    /// Reads a polynomial that involves only `var`.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            if m.support().any(|v| v != var) {
                return None;
            }
            coeffs[m.exponents()[var] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// Distinct rational roots in increasing order, by the rational root
    /// theorem on the primitive integer form.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::NotApplicable("roots of the zero polynomial".into()));
        }
        let sq = self.squarefree_part();
        let mut l = BigInt::one();
        for c in &sq.0 {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = sq.0.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut roots = Vec::new();
        // strip the root at zero so the constant term is nonzero
        let shift = ints.iter().position(|c| !c.is_zero()).unwrap();
        if shift > 0 {
            roots.push(Rational::zero());
        }
        let ints = &ints[shift..];
        if ints.len() > 1 {
            let ps = divisors(&ints[0].abs())?;
            let qs = divisors(&ints[ints.len() - 1].abs())?;
            for p in &ps {
                for q in &qs {
                    for sign in [1, -1] {
                        let cand = Rational::new(p * sign, q.clone());
                        if !roots.contains(&cand) && sq.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}

const DIVISOR_SEARCH_LIMIT: u64 = 10_000_000;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let mut steps = 0u64;
    while &d * &d <= *n {
        steps += 1;
        if steps > DIVISOR_SEARCH_LIMIT {
            return Err(Error::NotApplicable(format!("coefficient {n} too large for rational root search")));
        }
        if (n % &d).is_zero() {
            let q = n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}
