mod common;

use common::{p, random_poly, ring};
use num_bigint::BigUint;
use poisson_dga::algebra::{span_power, PresentedAlgebra, Subspace};
use poisson_dga::counting::{count_or_infinite, kronecker_reduce, logdiv_count, CountVerdict, LinearParamSystem};
use poisson_dga::differential::Derivation;
use poisson_dga::ore::{commutative_growth, gk_estimate, growth_sequence, ore_mul, OrePolynomial};
use poisson_dga::symbolics::{rat, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ore(rng: &mut ChaCha8Rng, t: &Derivation) -> OrePolynomial {
    let r = t.ring().clone();
    let coeffs: Vec<Polynomial> = (0..rng.gen_range(1..=4)).map(|_| random_poly(rng, &r, 2, 2)).collect();
    OrePolynomial::new(t, &coeffs).unwrap()
}

fn binom(n: u64, k: u64) -> i64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
}

#[test]
fn ore_associativity_and_closed_form() {
    let r = ring(&["a", "b"]);
    let alg = PresentedAlgebra::free(&r);
    let twists = [
        Derivation::partial(&alg, "a").unwrap(),
        Derivation::from_text(&alg, &[("a", "b"), ("b", "a")]).unwrap(),
        Derivation::from_text(&alg, &[("a", "a^2"), ("b", "a*b")]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for t in &twists {
        for _ in 0..70 {
            let (f, g, h) = (random_ore(&mut rng, t), random_ore(&mut rng, t), random_ore(&mut rng, t));
            let left = ore_mul(&ore_mul(&f, &g).unwrap(), &h).unwrap();
            let right = ore_mul(&f, &ore_mul(&g, &h).unwrap()).unwrap();
            assert_eq!(left, right, "{f} | {g} | {h}");
            let sum = f.add(&g).unwrap();
            assert_eq!(ore_mul(&sum, &h).unwrap(), ore_mul(&f, &h).unwrap().add(&ore_mul(&g, &h).unwrap()).unwrap());
        }
        // x^k r = Σ_i C(k,i) δ^i(r) x^(k-i)
        let x = OrePolynomial::x(t);
        for k in 0..5u64 {
            let rbase = random_poly(&mut rng, &r, 2, 3);
            let mut xk = OrePolynomial::one(t);
            for _ in 0..k {
                xk = ore_mul(&x, &xk).unwrap();
            }
            let mut coeffs = vec![Polynomial::zero(&r); k as usize + 1];
            let mut d = rbase.clone();
            for i in 0..=k {
                coeffs[(k - i) as usize] = d.scale(&rat(binom(k, i)));
                d = t.apply(&d).unwrap();
            }
            let expect = OrePolynomial::new(t, &coeffs).unwrap();
            assert_eq!(ore_mul(&xk, &OrePolynomial::constant(t, &rbase).unwrap()).unwrap(), expect);
        }
    }
}

#[test]
fn degrees_add_over_a_domain() {
    let r = ring(&["a", "b"]);
    let alg = PresentedAlgebra::free(&r);
    let t = Derivation::from_text(&alg, &[("a", "b"), ("b", "a^2")]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let (f, g) = (random_ore(&mut rng, &t), random_ore(&mut rng, &t));
        let fg = ore_mul(&f, &g).unwrap();
        match (f.degree(), g.degree()) {
            (Some(m), Some(n)) => assert_eq!(fg.degree(), Some(m + n), "{f} * {g}"),
            _ => assert!(fg.is_zero()),
        }
    }
}

#[test]
fn gk_tracks_krull_and_adds_one() {
    let r = ring(&["a"]);
    let alg = PresentedAlgebra::free(&r);
    let base = gk_estimate(&commutative_growth(&Subspace::new(&alg, &[p(&r, "1"), p(&r, "a")]).unwrap(), 30).unwrap(), 0.5)
        .unwrap()
        .slope;
    let t = Derivation::partial(&alg, "a").unwrap();
    let gens = [OrePolynomial::one(&t), OrePolynomial::constant(&t, &p(&r, "a")).unwrap(), OrePolynomial::x(&t)];
    let skew = gk_estimate(&growth_sequence(&gens, 30).unwrap(), 0.5).unwrap().slope;
    assert!((base - 1.0).abs() < 0.4, "{base}");
    assert!((skew - (base + 1.0)).abs() < 0.4, "{skew} vs {base}");

    let r2 = ring(&["a", "b", "c"]);
    let alg2 = PresentedAlgebra::free(&r2);
    let v = Subspace::new(&alg2, &[p(&r2, "1"), p(&r2, "a"), p(&r2, "b"), p(&r2, "c")]).unwrap();
    let three = gk_estimate(&commutative_growth(&v, 30).unwrap(), 0.5).unwrap().slope;
    assert!((three - 3.0).abs() < 0.4, "{three}");
}

#[test]
fn growth_is_monotone() {
    let r = ring(&["a", "b"]);
    let alg = PresentedAlgebra::free(&r);
    let v = Subspace::new(&alg, &[p(&r, "1"), p(&r, "a"), p(&r, "b - a^2")]).unwrap();
    let dims = commutative_growth(&v, 6).unwrap();
    assert!(dims.windows(2).all(|w| w[0] <= w[1]));
    for (k, d) in dims.iter().enumerate().take(4) {
        assert_eq!(span_power(&v, k + 1).unwrap().dim(), *d);
    }
    let t = Derivation::from_text(&alg, &[("a", "b"), ("b", "a")]).unwrap();
    let gens = [OrePolynomial::one(&t), OrePolynomial::x(&t), OrePolynomial::constant(&t, &p(&r, "a")).unwrap()];
    let dims = growth_sequence(&gens, 5).unwrap();
    assert!(dims.windows(2).all(|w| w[0] < w[1]));
}

/// Seeded linear-in-x systems: unknowns x1..xn, parameters y1..yd, with
/// n + d rows so that the variety is generically finite.
pub fn random_system(seed: u64) -> Option<LinearParamSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3usize);
    let d = rng.gen_range(1..=(4 - n).min(3));
    let cap = rng.gen_range(1..=2u32);
    let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (1..=d).map(|i| format!("y{i}")).collect();
    let mut names = xs.clone();
    names.extend(ys.iter().cloned());
    let r = poisson_dga::symbolics::VariableRing::new(&names).unwrap();
    let yring = poisson_dga::symbolics::VariableRing::new(&ys).unwrap();
    let entry = |rng: &mut ChaCha8Rng| random_poly(rng, &yring, cap, 2).embed_by_name(&r).unwrap();
    let rows: Vec<Polynomial> = (0..n + d)
        .map(|_| {
            let mut row = -&entry(&mut rng);
            for x in &xs {
                if rng.gen_bool(0.7) {
                    row = &row + &(&entry(&mut rng) * &p(&r, x));
                }
            }
            row
        })
        .collect();
    let xr: Vec<&str> = xs.iter().map(|s| s.as_str()).collect();
    LinearParamSystem::new(&r, &xr, &rows).ok()
}

#[test]
fn counting_bound_on_seeded_systems() {
    let mut finite = 0;
    for seed in 0..40 {
        let Some(sys) = random_system(seed) else { continue };
        match count_or_infinite(&sys).unwrap() {
            CountVerdict::Finite { count, bound, ok, .. } => {
                assert!(ok && BigUint::from(count) <= bound, "seed {seed}");
                finite += 1;
            }
            CountVerdict::Infinite => {}
        }
    }
    assert!(finite >= 20, "only {finite} finite systems");
}

#[test]
fn kronecker_is_deterministic_and_verified() {
    let r = ring(&["x", "y"]);
    let gens = [p(&r, "x^2 - y"), p(&r, "y^2 - x"), p(&r, "x^3 - y*x")];
    for seed in 0..6 {
        let a = kronecker_reduce(&gens, seed).unwrap();
        assert!(a.verified);
        assert_eq!(a, kronecker_reduce(&gens, seed).unwrap());
    }
}

#[test]
fn logdiv_total_ignores_basis_scaling() {
    let r = ring(&["a"]);
    let alg = PresentedAlgebra::free(&r);
    let d = [Derivation::partial(&alg, "a").unwrap()];
    let w = Subspace::new(&alg, &[p(&r, "1")]).unwrap();
    let plain = Subspace::new(&alg, &[p(&r, "1"), p(&r, "a"), p(&r, "a^2")]).unwrap();
    let scaled = Subspace::new(&alg, &[p(&r, "3"), p(&r, "-1/2*a"), p(&r, "7*a^2")]).unwrap();
    let a = logdiv_count(&plain, &w, &d).unwrap();
    let b = logdiv_count(&scaled, &w, &d).unwrap();
    assert_eq!(a.total, b.total);
    assert_eq!(a.bound, b.bound);
}
