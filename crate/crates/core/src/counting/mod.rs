//! Point-counting instruments: affine-bilinear systems, their minors,
//! Kronecker reduction, Bézout checks and the log-derivative count.

mod kronecker;
mod logdiv;

use num_bigint::BigUint;

pub use kronecker::{bezout_check, kronecker_reduce, BezoutReport, KroneckerReport, KRONECKER_RETRY_CAP};
pub use logdiv::{logdiv_count, ChartCount, LogdivReport};

use crate::algebra::{leading_dimension, zerodim::count_ideal_points};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::symbolics::{Monomial, Polynomial, VariableRing};

/// Rows `Σ P_i(y)·x_i + Q(y)`, affine-linear in the chosen x-variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearParamSystem {
    ring: VariableRing,
    x_vars: Vec<usize>,
    rows: Vec<Polynomial>,
    // entries[r] = [P_1, .., P_n, Q]
    entries: Vec<Vec<Polynomial>>,
    degree: u32,
}

impl LinearParamSystem {
    /// `x_names` picks the linear variables; every other ring variable is a
    /// parameter.
    pub fn new(ring: &VariableRing, x_names: &[&str], rows: &[Polynomial]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Declaration("system needs at least one row".into()));
        }
        let mut x_vars = Vec::with_capacity(x_names.len());
        for name in x_names {
            let i = ring.var_index(name)?;
            if x_vars.contains(&i) {
                return Err(Error::Declaration(format!("x-variable {name} listed twice")));
            }
            x_vars.push(i);
        }
        let n = x_vars.len();
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            if row.ring() != ring {
                return Err(Error::RingMismatch);
            }
            let mut parts: Vec<Vec<(Monomial, crate::symbolics::Rational)>> = vec![Vec::new(); n + 1];
            for (m, c) in row.terms() {
                let hits: Vec<usize> = (0..n).filter(|&k| m.exponents()[x_vars[k]] > 0).collect();
                match hits.as_slice() {
                    [] => parts[n].push((m.clone(), c.clone())),
                    [k] if m.exponents()[x_vars[*k]] == 1 => {
                        let mut e = m.exponents().to_vec();
                        e[x_vars[*k]] = 0;
                        parts[*k].push((Monomial::from_exponents(e), c.clone()));
                    }
                    _ => return Err(Error::NotLinearSystem(row.to_string())),
                }
            }
            entries.push(parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect::<Vec<_>>());
        }
        let degree = entries.iter().flatten().map(|p| p.total_degree()).max().unwrap_or(0);
        Ok(LinearParamSystem { ring: ring.clone(), x_vars, rows: rows.to_vec(), entries, degree })
    }

    pub fn ring(&self) -> &VariableRing {
        &self.ring
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    /// Number of x-variables.
    pub fn n(&self) -> usize {
        self.x_vars.len()
    }

    /// Number of parameters.
    pub fn d(&self) -> usize {
        self.ring.nvars() - self.x_vars.len()
    }

    /// Degree bound `N`: the largest entry degree, but at least 1.
    pub fn degree_bound(&self) -> u32 {
        self.degree.max(1)
    }

    /// `((n+1)N)^(d+1)`.
    pub fn bound(&self) -> BigUint {
        BigUint::from((self.n() as u64 + 1) * self.degree_bound() as u64).pow(self.d() as u32 + 1)
    }

    /// `[P_1, .., P_n, Q]` for each row.
    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    fn y_ring(&self) -> Result<VariableRing> {
        let names: Vec<String> = (0..self.ring.nvars())
            .filter(|i| !self.x_vars.contains(i))
            .map(|i| self.ring.name(i).to_string())
            .collect();
        VariableRing::build(names, crate::symbolics::MonomialOrder::Grevlex)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountVerdict {
    Finite { count: usize, with_multiplicity: usize, bound: BigUint, ok: bool },
    Infinite,
}

/// Counts the common zeros over the algebraic closure, with the bound
/// `((n+1)N)^(d+1)` for the finite case.
pub fn count_or_infinite(sys: &LinearParamSystem) -> Result<CountVerdict> {
    let gb = buchberger(&sys.ring, &sys.rows)?;
    count_basis(&gb, sys.bound())
}

fn count_basis(gb: &GroebnerBasis, bound: BigUint) -> Result<CountVerdict> {
    if gb.is_unit() {
        return Ok(CountVerdict::Finite { count: 0, with_multiplicity: 0, ok: true, bound });
    }
    if leading_dimension(gb) > 0 {
        return Ok(CountVerdict::Infinite);
    }
    let c = count_ideal_points(gb)?;
    let ok = BigUint::from(c.distinct) <= bound;
    Ok(CountVerdict::Finite { count: c.distinct, with_multiplicity: c.with_multiplicity, bound, ok })
}

/// The minors of `A = [P | −Q]` and `B = [P]`, as ideals in the parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorsReport {
    /// Ideal of the `(n+1)`-minors of `A`.
    pub y: GroebnerBasis,
    /// Ideal of the `n`-minors of `B`.
    pub z: GroebnerBasis,
    /// `distinct(Y) − distinct(Y + Z)` when `Y` is zero-dimensional.
    pub y_minus_z: Option<usize>,
    /// Distinct parameter values over which the system is solvable, when
    /// that set is finite.
    pub projection: Option<usize>,
}

pub fn minors_decomposition(sys: &LinearParamSystem) -> Result<MinorsReport> {
    let (m, n) = (sys.rows.len(), sys.n());
    if m <= n {
        return Err(Error::NotApplicable(format!("{m} rows for {n} unknowns: the case m <= n reduces to fewer rows")));
    }
    let yr = sys.y_ring()?;
    let a: Vec<Vec<Polynomial>> = sys
        .entries
        .iter()
        .map(|row| {
            let mut r: Vec<Polynomial> = row[..n].to_vec();
            r.push(-&row[n]);
            r
        })
        .collect();
    let restrict = |p: Polynomial| p.restrict_by_name(&yr);
    let mut y_gens = Vec::new();
    for rows in combinations(m, n + 1) {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&r| a[r].clone()).collect();
        y_gens.push(restrict(determinant(&sub))?);
    }
    let mut z_gens = Vec::new();
    for rows in combinations(m, n) {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&r| a[r][..n].to_vec()).collect();
        z_gens.push(if n == 0 { Polynomial::one(&yr) } else { restrict(determinant(&sub))? });
    }
    let y = buchberger(&yr, &y_gens)?;
    let z = buchberger(&yr, &z_gens)?;
    let y_minus_z = if !y.is_unit() && leading_dimension(&y) > 0 {
        None
    } else {
        let dy = if y.is_unit() { 0 } else { count_ideal_points(&y)?.distinct };
        let yz = y.extend(z.generators())?;
        let dyz = if yz.is_unit() { 0 } else { count_ideal_points(&yz)?.distinct };
        Some(dy - dyz)
    };
    let elim = crate::groebner::ops::eliminate_into(&sys.ring, &sys.rows, &sys.x_vars, &yr)?;
    let projection = if elim.is_unit() {
        Some(0)
    } else if leading_dimension(&elim) > 0 {
        None
    } else {
        Some(count_ideal_points(&elim)?.distinct)
    };
    Ok(MinorsReport { y, z, y_minus_z, projection })
}

pub(crate) fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion along the first row; square, nonempty input.
pub(crate) fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let k = m.len();
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(m[0][0].ring());
    for c in 0..k {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect()).collect();
        let term = &m[0][c] * &determinant(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
