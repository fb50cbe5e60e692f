#![allow(dead_code)]

use poisson_dga::algebra::PresentedAlgebra;
use poisson_dga::poisson::PoissonStructure;
use poisson_dga::symbolics::{parse_polynomial, ratio, Monomial, Polynomial, VariableRing};
use proptest::prelude::*;
use rand::Rng;

pub fn ring(vars: &[&str]) -> VariableRing {
    VariableRing::new(vars).unwrap()
}

pub fn p(r: &VariableRing, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

/// Random polynomial: up to `terms` terms, each exponent at most `deg`
/// (total degree capped at `deg` as well), small rational coefficients.
pub fn poly(vars: &'static [&'static str], deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    let term = (prop::collection::vec(0..=deg, n), -9i64..=9, 1i64..=3);
    prop::collection::vec(term, 0..=terms).prop_map(move |ts| {
        let r = ring(vars);
        let ts = ts.into_iter().filter(|(e, _, _)| e.iter().sum::<u32>() <= deg);
        Polynomial::from_terms(&r, ts.map(|(e, a, b)| (Monomial::from_exponents(e), ratio(a, b))))
    })
}

/// Same shape as [`poly`], drawn from a seeded rng for explicit loops.
pub fn random_poly(rng: &mut impl Rng, r: &VariableRing, deg: u32, terms: usize) -> Polynomial {
    let n = r.nvars();
    let ts: Vec<(Monomial, _)> = (0..rng.gen_range(1..=terms))
        .map(|_| {
            let mut e = vec![0u32; n];
            let mut left = rng.gen_range(0..=deg);
            for slot in e.iter_mut() {
                let k = rng.gen_range(0..=left);
                *slot = k;
                left -= k;
            }
            (Monomial::from_exponents(e), ratio(rng.gen_range(-5..=5), 1))
        })
        .collect();
    Polynomial::from_terms(r, ts)
}

pub fn structure(vars: &[&str], entries: &[(&str, &str, &str)]) -> PoissonStructure {
    let r = ring(vars);
    let a = PresentedAlgebra::free(&r);
    let e: Vec<_> = entries
        .iter()
        .map(|(x, y, q)| (r.var_index(x).unwrap(), r.var_index(y).unwrap(), p(&r, q)))
        .collect();
    PoissonStructure::new(&a, &e).unwrap()
}

pub fn weyl() -> PoissonStructure {
    structure(&["x", "y"], &[("x", "y", "1")])
}

pub fn so3() -> PoissonStructure {
    structure(&["x", "y", "z"], &[("x", "y", "z"), ("y", "z", "x"), ("z", "x", "y")])
}

pub fn solvable() -> PoissonStructure {
    structure(&["x", "y"], &[("x", "y", "y")])
}

pub fn sum(polys: impl IntoIterator<Item = Polynomial>, r: &VariableRing) -> Polynomial {
    polys.into_iter().fold(Polynomial::zero(r), |acc, q| &acc + &q)
}
