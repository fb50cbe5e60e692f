//! Exact linear algebra over Q: dense reduced row echelon form, kernels,
//! and a sparse echelon basis for spans of polynomials.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::symbolics::{Monomial, Polynomial, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of `{c : m·c = 0}`, one vector per free column, in column order.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -w[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// Some solution of `m·c = rhs`, if one exists.
pub fn solve(m: &Matrix, rhs: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let mut aug: Matrix = m.iter().zip(rhs).map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[row][cols].clone();
    }
    Some(x)
}

/// Coefficient matrix of `polys`: one row per monomial occurring anywhere,
/// one column per polynomial.
pub fn coefficient_matrix(polys: &[Polynomial]) -> Matrix {
    let monos: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.terms().iter().map(|(m, _)| m)).collect();
    monos.into_iter().map(|m| polys.iter().map(|p| p.coefficient(m)).collect()).collect()
}

/// Linear combination `Σ c_i p_i`; `polys` must be nonempty.
pub fn combine(coeffs: &[Rational], polys: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(polys[0].ring());
    for (c, p) in coeffs.iter().zip(polys) {
        if !c.is_zero() {
            acc = &acc + &p.scale(c);
        }
    }
    acc
}

/// Incrementally built basis of a span of polynomials, each row monic with a
/// distinct leading monomial.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<Polynomial>,
    pivots: HashMap<Monomial, usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Polynomial> {
        self.rows
    }

    /// Remainder after eliminating every pivot monomial.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut work = p.clone();
        loop {
            let hit = work.terms().iter().rev().find_map(|(m, c)| self.pivots.get(m).map(|&i| (i, c.clone())));
            match hit {
                None => return work,
                Some((i, c)) => work = &work - &self.rows[i].scale(&c),
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p` to the span; returns false if it was already there.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        self.pivots.insert(r.leading_monomial().unwrap().clone(), self.rows.len());
        self.rows.push(r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolics::{parse_polynomial, rat, VariableRing};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let k = nullspace(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let s: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[rat(3), rat(1)], 2), Some(vec![rat(2), rat(1)]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&b, &[rat(1), rat(3)], 2), None);
    }

    #[test]
    fn echelon_detects_dependence() {
        let r = VariableRing::new(&["x", "y"]).unwrap();
        let p = |s| parse_polynomial(s, &r).unwrap();
        let mut e = EchelonBasis::new();
        assert!(e.insert(&p("x + y")));
        assert!(e.insert(&p("x - y")));
        assert!(!e.insert(&p("3*x")));
        assert!(e.contains(&p("y")));
        assert!(!e.contains(&p("x*y")));
        assert_eq!(e.len(), 2);
    }
}
