use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};

use super::linalg::{coefficient_matrix, solve, Matrix};
use super::univariate::UniPoly;
use super::{is_standard, leading_dimension, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::symbolics::{Monomial, Polynomial, Rational};

/// Quotient basis, multiplication matrices and minimal polynomials of a
/// zero-dimensional algebra.
#[derive(Clone, Debug)]
pub struct ZeroDimData {
    /// Standard monomials, ascending in the ring order.
    pub basis: Vec<Monomial>,
    /// `matrices[i][r][c]`: coefficient of `basis[r]` in `x_i * basis[c]`.
    pub matrices: Vec<Matrix>,
    /// Monic minimal polynomial of each multiplication map.
    pub min_polys: Vec<UniPoly>,
}

/// Points counted over the algebraic closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointCount {
    pub with_multiplicity: usize,
    pub distinct: usize,
}

/// Monomials outside the leading-term ideal; fails unless zero-dimensional.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let dim = leading_dimension(gb);
    if dim > 0 {
        return Err(Error::PositiveDimension(dim));
    }
    let n = gb.ring().nvars();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = vec![Monomial::one(n)];
    seen.insert(Monomial::one(n));
    while let Some(m) = queue.pop() {
        for i in 0..n {
            let next = m.mul(&Monomial::var(n, i, 1));
            if !seen.contains(&next) && is_standard(gb, &next) {
                seen.insert(next.clone());
                queue.push(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| gb.ring().cmp_monomials(a, b));
    Ok(out)
}

fn min_poly(gb: &GroebnerBasis, var: usize) -> UniPoly {
    let ring = gb.ring();
    let x = Polynomial::var(ring, var);
    let mut powers = vec![gb.reduce(&Polynomial::one(ring))];
    loop {
        let next = gb.reduce(&(&x * powers.last().unwrap()));
        let k = powers.len();
        let mut all = powers.clone();
        all.push(next.clone());
        let m = coefficient_matrix(&all);
        let (lhs, rhs): (Matrix, Vec<Rational>) = m.into_iter().map(|mut row| {
            let b = row.pop().unwrap();
            (row, b)
        }).unzip();
        if let Some(c) = solve(&lhs, &rhs, k) {
            // x^k = Σ c_j x^j
            let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            coeffs.push(Rational::one());
            return UniPoly::new(coeffs);
        }
        powers.push(next);
    }
}

pub(crate) fn zero_dim_of(gb: &GroebnerBasis) -> Result<ZeroDimData> {
    if gb.is_unit() {
        return Err(Error::UnitAlgebra);
    }
    let basis = standard_monomials(gb)?;
    let ring = gb.ring();
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = basis.len();
    let mut matrices = Vec::with_capacity(ring.nvars());
    for i in 0..ring.nvars() {
        let mut mat = vec![vec![Rational::zero(); d]; d];
        for (c, b) in basis.iter().enumerate() {
            let prod = Polynomial::monomial(ring, b.mul(&Monomial::var(ring.nvars(), i, 1)), Rational::one());
            for (m, coef) in gb.reduce(&prod).terms() {
                mat[index[m]][c] = coef.clone();
            }
        }
        matrices.push(mat);
    }
    let min_polys = (0..ring.nvars()).map(|i| min_poly(gb, i)).collect();
    Ok(ZeroDimData { basis, matrices, min_polys })
}

pub fn zero_dim_data(a: &PresentedAlgebra) -> Result<ZeroDimData> {
    zero_dim_of(a.presentation())
}

/// Radical of a zero-dimensional ideal: adjoin the squarefree part of each
/// variable's minimal polynomial.
pub(crate) fn zero_dim_radical(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    if gb.is_unit() {
        return Ok(gb.clone());
    }
    let ring = gb.ring();
    let dim = leading_dimension(gb);
    if dim > 0 {
        return Err(Error::PositiveDimension(dim));
    }
    let mut extra = Vec::new();
    for i in 0..ring.nvars() {
        let m = min_poly(gb, i);
        let s = m.squarefree_part();
        if s.degree() < m.degree() {
            extra.push(s.to_polynomial(ring, i));
        }
    }
    if extra.is_empty() {
        Ok(gb.clone())
    } else {
        gb.extend(&extra)
    }
}

pub(crate) fn count_ideal_points(gb: &GroebnerBasis) -> Result<PointCount> {
    let with_multiplicity = standard_monomials(gb)?.len();
    let distinct = standard_monomials(&zero_dim_radical(gb)?)?.len();
    Ok(PointCount { with_multiplicity, distinct })
}

pub fn count_points(a: &PresentedAlgebra) -> Result<PointCount> {
    count_ideal_points(a.presentation())
}

/// Rational points of a zero-dimensional ideal, sorted.
pub fn rational_points(gb: &GroebnerBasis) -> Result<Vec<Vec<Rational>>> {
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    let rad = zero_dim_radical(gb)?;
    let ring = gb.ring();
    let mut candidates: Vec<Vec<Rational>> = vec![Vec::new()];
    for i in 0..ring.nvars() {
        let roots = min_poly(&rad, i).rational_roots()?;
        candidates = candidates
            .into_iter()
            .flat_map(|prefix| {
                roots.iter().map(move |r| {
                    let mut p = prefix.clone();
                    p.push(r.clone());
                    p
                })
            })
            .collect();
    }
    let mut pts: Vec<Vec<Rational>> =
        candidates.into_iter().filter(|pt| rad.generators().iter().all(|g| g.evaluate(pt).is_zero())).collect();
    pts.sort();
    Ok(pts)
}
