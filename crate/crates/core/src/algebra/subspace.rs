use num_traits::Zero;

use super::linalg::{coefficient_matrix, combine, nullspace, solve, EchelonBasis, Matrix};
use super::PresentedAlgebra;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::par;
use crate::symbolics::{Polynomial, Rational};

/// Finite-dimensional subspace of an algebra, held as a linearly independent
/// list of normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    algebra: PresentedAlgebra,
    basis: Vec<Polynomial>,
}

impl Subspace {
    /// Uses `elems` (reduced) as the basis; fails on the first element that
    /// depends on the earlier ones.
    pub fn new(algebra: &PresentedAlgebra, elems: &[Polynomial]) -> Result<Self> {
        let mut ech = EchelonBasis::new();
        let mut basis = Vec::with_capacity(elems.len());
        for (i, e) in elems.iter().enumerate() {
            algebra.check_ring(e)?;
            let r = algebra.reduce(e);
            if !ech.insert(&r) {
                return Err(Error::DependentBasis(i));
            }
            basis.push(r);
        }
        Ok(Subspace { algebra: algebra.clone(), basis })
    }

    /// Span of `elems`, keeping the first maximal independent subfamily.
    pub fn span(algebra: &PresentedAlgebra, elems: &[Polynomial]) -> Result<Self> {
        let mut ech = EchelonBasis::new();
        let mut basis = Vec::new();
        for e in elems {
            algebra.check_ring(e)?;
            let r = algebra.reduce(e);
            if ech.insert(&r) {
                basis.push(r);
            }
        }
        Ok(Subspace { algebra: algebra.clone(), basis })
    }

    pub fn zero(algebra: &PresentedAlgebra) -> Self {
        Subspace { algebra: algebra.clone(), basis: Vec::new() }
    }

    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `p` in the basis, or `None` when `p` is outside.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Option<Vec<Rational>>> {
        self.algebra.check_ring(p)?;
        let p = self.algebra.reduce(p);
        if self.basis.is_empty() {
            return Ok(if p.is_zero() { Some(Vec::new()) } else { None });
        }
        let mut all = self.basis.clone();
        all.push(p);
        let (lhs, rhs): (Matrix, Vec<Rational>) = coefficient_matrix(&all)
            .into_iter()
            .map(|mut row| {
                let b = row.pop().unwrap();
                (row, b)
            })
            .unzip();
        Ok(solve(&lhs, &rhs, self.basis.len()))
    }

    pub fn member(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.coordinates(p)?.is_some())
    }
}

/// Basis of `{v ∈ V : v ∈ I}` (with `I` read in the algebra).
pub fn ideal_cap_subspace(i: &GroebnerBasis, v: &Subspace) -> Result<Subspace> {
    let lifted = v.algebra.lift(i)?;
    if v.is_zero() {
        return Ok(v.clone());
    }
    let images: Vec<Polynomial> = v.basis.iter().map(|b| lifted.reduce(b)).collect();
    if images.iter().all(|p| p.is_zero()) {
        return Ok(v.clone());
    }
    let kernel = nullspace(&coefficient_matrix(&images), v.dim());
    let elems: Vec<Polynomial> = kernel.iter().map(|c| combine(c, &v.basis)).collect();
    Subspace::span(&v.algebra, &elems)
}

/// Span of all products `v*w`.
pub fn span_product(v: &Subspace, w: &Subspace) -> Result<Subspace> {
    v.algebra.check_same(&w.algebra)?;
    let pairs: Vec<(usize, usize)> = (0..v.dim()).flat_map(|i| (0..w.dim()).map(move |j| (i, j))).collect();
    let prods = par::map(&pairs, |&(i, j)| v.algebra.reduce(&(&v.basis[i] * &w.basis[j])));
    Subspace::span(&v.algebra, &prods)
}

/// `V^n` for `n >= 1`; `V^0` is `span{1}`.
pub fn span_power(v: &Subspace, n: usize) -> Result<Subspace> {
    if n == 0 {
        return Subspace::span(&v.algebra, &[Polynomial::one(v.algebra.ring())]);
    }
    Ok(span_powers(v, n)?.pop().unwrap())
}

/// `[V^1, ..., V^n]`, each computed from the previous one.
pub fn span_powers(v: &Subspace, n: usize) -> Result<Vec<Subspace>> {
    let mut out = vec![v.clone()];
    while out.len() < n {
        let next = span_product(out.last().unwrap(), v)?;
        out.push(next);
    }
    Ok(out)
}

impl Subspace {
    /// True if `1` lies in the subspace.
    pub fn contains_one(&self) -> bool {
        let one = Polynomial::one(self.algebra.ring());
        self.member(&one).unwrap_or(false) && !self.algebra.reduce(&one).is_zero()
    }

    /// Linear combination of the basis with coefficients `c`.
    pub fn combination(&self, c: &[Rational]) -> Polynomial {
        if self.basis.is_empty() || c.iter().all(|x| x.is_zero()) {
            return Polynomial::zero(self.algebra.ring());
        }
        combine(c, &self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolics::{parse_polynomial, VariableRing};

    fn setup(vars: &[&str], rels: &[&str]) -> (PresentedAlgebra, impl Fn(&str) -> Polynomial) {
        let r = VariableRing::new(vars).unwrap();
        let rr = r.clone();
        let rels: Vec<Polynomial> = rels.iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
        (PresentedAlgebra::new(&r, &rels, false).unwrap(), move |s: &str| parse_polynomial(s, &rr).unwrap())
    }

    #[test]
    fn cap_with_diagonal() {
        let (a, p) = setup(&["x", "y"], &[]);
        let v = Subspace::new(&a, &[p("x"), p("y")]).unwrap();
        let i = a.ideal(&[p("x - y")]).unwrap();
        let cap = ideal_cap_subspace(&i, &v).unwrap();
        assert_eq!(cap.dim(), 1);
        assert!(cap.member(&p("x - y")).unwrap());
        assert!(v.member(&p("0")).unwrap());
        let one = Subspace::new(&a, &[p("1")]).unwrap();
        assert!(ideal_cap_subspace(&i, &one).unwrap().is_zero());
    }

    #[test]
    fn dependent_basis_rejected() {
        let (a, p) = setup(&["x", "y"], &[]);
        assert_eq!(Subspace::new(&a, &[p("x"), p("2*x")]), Err(Error::DependentBasis(1)));
    }

    #[test]
    fn products_and_powers() {
        let (a, p) = setup(&["x", "y"], &[]);
        let v = Subspace::new(&a, &[p("1"), p("x")]).unwrap();
        let sq = span_product(&v, &v).unwrap();
        assert_eq!(sq.dim(), 3);
        assert!(sq.member(&p("x^2")).unwrap());
        let xy = span_product(&Subspace::new(&a, &[p("x")]).unwrap(), &Subspace::new(&a, &[p("y")]).unwrap()).unwrap();
        assert_eq!(xy.basis(), &[p("x*y")]);

        let (b, q) = setup(&["x"], &["x^2"]);
        let w = Subspace::new(&b, &[q("1"), q("x")]).unwrap();
        assert_eq!(span_product(&w, &w).unwrap().dim(), 2);
        assert_eq!(span_power(&w, 5).unwrap().dim(), 2);
    }
}
