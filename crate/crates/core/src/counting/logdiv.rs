use num_bigint::BigUint;

use crate::algebra::{leading_dimension, rational_points, zerodim::count_ideal_points, Subspace};
use crate::differential::Derivation;
use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::par;
use crate::symbolics::{MonomialOrder, Polynomial, Rational, VariableRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartCount {
    /// Index `q` of the chart `x_q = 1` (earlier coordinates zero).
    pub chart: usize,
    /// `None` when the chart's solution set is positive-dimensional.
    pub distinct: Option<usize>,
    pub with_multiplicity: Option<usize>,
    /// Rational solutions, x-coordinates only.
    pub points: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogdivReport {
    pub charts: Vec<ChartCount>,
    /// Sum over charts; `None` if some chart is positive-dimensional.
    pub total: Option<usize>,
    /// `(dim V)^(2 + m·dim W)`.
    pub bound: BigUint,
    pub ok: bool,
    pub uncountable_suspect: bool,
}

/// Counts projective classes `[f]`, `f ∈ V` nonzero, with `L_j(f)/f ∈ W`
/// for every derivation `L_j`. Writing `f = Σ x_i r_i` and
/// `L_j(f) = f·Σ_k y_{k,j} s_k`, the resulting bilinear system is solved
/// chart by chart; a point belongs to the chart of its first nonzero
/// coordinate.
pub fn logdiv_count(v: &Subspace, w: &Subspace, deltas: &[Derivation]) -> Result<LogdivReport> {
    let alg = v.algebra();
    alg.check_same(w.algebra())?;
    for d in deltas {
        alg.check_same(d.algebra())?;
    }
    let (n, dw, m) = (v.dim(), w.dim(), deltas.len());
    let bound = BigUint::from(n).pow(2 + (m * dw) as u32);
    if n == 0 {
        return Ok(LogdivReport { charts: Vec::new(), total: Some(0), bound, ok: true, uncountable_suspect: false });
    }
    let r = v.basis();
    let s = w.basis();
    let products: Vec<Vec<Polynomial>> = r.iter().map(|ri| s.iter().map(|sk| alg.reduce(&(ri * sk))).collect()).collect();
    let derived: Vec<Vec<Polynomial>> = r.iter().map(|ri| deltas.iter().map(|d| d.apply(ri)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let mut all: Vec<Polynomial> = products.iter().flatten().cloned().collect();
    all.extend(derived.iter().flatten().cloned());
    let span = Subspace::span(alg, &all)?;
    let ell = span.dim();
    let coords = |p: &Polynomial| -> Result<Vec<Rational>> {
        span.coordinates(p)?.ok_or_else(|| Error::NotApplicable("element outside its own span".into()))
    };
    // alpha[i][j][p], beta[i][k][p]
    let alpha: Vec<Vec<Vec<Rational>>> =
        derived.iter().map(|row| row.iter().map(coords).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let beta: Vec<Vec<Vec<Rational>>> =
        products.iter().map(|row| row.iter().map(coords).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;

    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    for j in 1..=m {
        for k in 1..=dw {
            names.push(format!("y{k}_{j}"));
        }
    }
    let ring = VariableRing::build(names, MonomialOrder::Grevlex)?;
    let x = |i: usize| Polynomial::var(&ring, i);
    let y = |k: usize, j: usize| Polynomial::var(&ring, n + j * dw + k);
    let mut equations = Vec::new();
    for j in 0..m {
        for p in 0..ell {
            let mut e = Polynomial::zero(&ring);
            for i in 0..n {
                e = &e + &x(i).scale(&alpha[i][j][p]);
                for k in 0..dw {
                    e = &e - &(&x(i) * &y(k, j)).scale(&beta[i][k][p]);
                }
            }
            if !e.is_zero() {
                equations.push(e);
            }
        }
    }

    let charts: Vec<usize> = (0..n).collect();
    let charts = par::try_map(&charts, |&q| -> Result<ChartCount> {
        let mut eqs = equations.clone();
        eqs.push(&x(q) - &Polynomial::one(&ring));
        eqs.extend((0..q).map(x));
        let gb = buchberger(&ring, &eqs)?;
        if gb.is_unit() {
            return Ok(ChartCount { chart: q, distinct: Some(0), with_multiplicity: Some(0), points: Vec::new() });
        }
        if leading_dimension(&gb) > 0 {
            return Ok(ChartCount { chart: q, distinct: None, with_multiplicity: None, points: Vec::new() });
        }
        let c = count_ideal_points(&gb)?;
        let points = rational_points(&gb)?.into_iter().map(|pt| pt[..n].to_vec()).collect();
        Ok(ChartCount { chart: q, distinct: Some(c.distinct), with_multiplicity: Some(c.with_multiplicity), points })
    })?;
    let total: Option<usize> = charts.iter().map(|c| c.distinct).sum();
    let uncountable_suspect = total.is_none();
    let ok = total.is_some_and(|t| BigUint::from(t) <= bound);
    Ok(LogdivReport { charts, total, bound, ok, uncountable_suspect })
}
