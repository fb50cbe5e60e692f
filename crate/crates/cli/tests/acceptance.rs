//! End-to-end acceptance run. Each criterion is checked through the library
//! and, where a subcommand exists, through the `pdga` binary, and prints a
//! single PASS/FAIL line with its runtime.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use poisson_dga::algebra::{krull_dim, PresentedAlgebra, Subspace};
use poisson_dga::counting::{
    bezout_check, count_or_infinite, kronecker_reduce, logdiv_count, minors_decomposition, CountVerdict,
    LinearParamSystem,
};
use poisson_dga::dgeometry::{constant_sharp_points, is_d_subvariety, make_dvariety, prolongation_ideal};
use poisson_dga::differential::{
    constants_search, differential_closure, differential_core_descent, is_constant_fraction, is_differential_ideal,
    ConstantSearch, Derivation,
};
use poisson_dga::groebner::{buchberger, ideal_equal};
use poisson_dga::ore::{commutative_growth, gk_estimate, growth_sequence, induced_two_sided, ore_mul, OrePolynomial};
use poisson_dga::poisson::{
    commutator_identity_check, extend_ideal, is_poisson_ideal, poisson_ideal_paths, rt_extension,
    tall_prime_bracket_check, PoissonStructure,
};
use poisson_dga::symbolics::{parse_polynomial, rat, ratio, BracketEntry, Monomial, Polynomial, VariableRing};
use poisson_dga::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

enum Outcome {
    Pass(String),
    Fail(String),
    /// The criterion cannot hold as worded; the attainable part passed and
    /// the detail names the counterexample.
    Unattainable(String),
}

type Check = Result<Outcome, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("pdga-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

/// Runs the binary with `--json`; returns exit code and parsed report.
fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_pdga")).arg("--json").args(args).output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), v)
}

fn cli_verdict(args: &[&str]) -> (i32, String) {
    let (code, v) = cli(args);
    (code, v["verdict"].as_str().unwrap_or("").to_string())
}

fn ring(vars: &[&str]) -> VariableRing {
    VariableRing::new(vars).unwrap()
}

fn p(r: &VariableRing, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn structure(vars: &[&str], entries: &[(&str, &str, &str)]) -> PoissonStructure {
    let r = ring(vars);
    PoissonStructure::new(&PresentedAlgebra::free(&r), &entries_of(&r, entries)).unwrap()
}

fn entries_of(r: &VariableRing, entries: &[(&str, &str, &str)]) -> Vec<BracketEntry> {
    entries.iter().map(|(a, b, q)| (r.var_index(a).unwrap(), r.var_index(b).unwrap(), p(r, q))).collect()
}

fn weyl() -> PoissonStructure {
    structure(&["x", "y"], &[("x", "y", "1")])
}

fn so3() -> PoissonStructure {
    structure(&["x", "y", "z"], &[("x", "y", "z"), ("y", "z", "x"), ("z", "x", "y")])
}

fn solvable() -> PoissonStructure {
    structure(&["x", "y"], &[("x", "y", "y")])
}

fn rt_line() -> PoissonStructure {
    let r = ring(&["a"]);
    rt_extension(&Derivation::partial(&PresentedAlgebra::free(&r), "a").unwrap()).unwrap()
}

fn rt_swap() -> PoissonStructure {
    let r = ring(&["a", "b"]);
    rt_extension(&Derivation::from_text(&PresentedAlgebra::free(&r), &[("a", "b"), ("b", "a")]).unwrap()).unwrap()
}

fn fixtures() -> Vec<(&'static str, PoissonStructure)> {
    vec![("weyl", weyl()), ("so3", so3()), ("solvable", solvable()), ("rt-line", rt_line()), ("rt-swap", rt_swap())]
}

/// Declaration file holding a structure named `B` and the given ideals.
fn structure_doc(b: &PoissonStructure, ideals: &[(String, Vec<Polynomial>)]) -> String {
    let r = b.algebra().ring();
    let mut s = format!("ring Q[{}]\n", r.names().join(", "));
    let entries: Vec<String> =
        b.entries().iter().map(|(i, j, q)| format!("[{}, {}] = {q}", r.name(*i), r.name(*j))).collect();
    writeln!(s, "poisson B = {{ {} }}", entries.join(", ")).unwrap();
    for (name, gens) in ideals {
        let g: Vec<String> = gens.iter().map(|q| q.to_string()).collect();
        writeln!(s, "ideal {name} = {{ {} }}", g.join(", ")).unwrap();
    }
    s
}

fn random_poly(rng: &mut ChaCha8Rng, r: &VariableRing, deg: u32, terms: usize) -> Polynomial {
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
            (Monomial::from_exponents(e), ratio(rng.gen_range(-7..=7), rng.gen_range(1..=3)))
        })
        .collect();
    Polynomial::from_terms(r, ts)
}

// ---------------------------------------------------------------------------

fn c01() -> Check {
    let s = so3();
    ensure(s.is_validated(), || "so(3) structure not validated".into())?;
    let r = s.algebra().ring().clone();
    let bad = PoissonStructure::new(
        &PresentedAlgebra::free(&r),
        &entries_of(&r, &[("x", "y", "z"), ("y", "z", "x"), ("z", "x", "x")]),
    );
    let want = Error::JacobiViolation { triple: ("x".into(), "y".into(), "z".into()), jacobiator: "-z".into() };
    ensure(bad.as_ref().err() == Some(&want), || format!("perturbed structure gave {bad:?}"))?;
    let (code, _) = cli_verdict(&["check-poisson", &fixture("so3.pdga"), "--structure", "B"]);
    ensure(code == 0, || "cli: so(3) not validated".into())?;
    let (code, v) = cli(&["check-poisson", &fixture("so3.pdga"), "--structure", "Bad"]);
    ensure(code == 1 && v["witnesses"]["jacobiator"] == "-z", || format!("cli: {v}"))?;
    Ok(Outcome::Pass("validated; perturbation rejected with Jacobiator -z on (x, y, z)".into()))
}

fn c02() -> Check {
    for (name, b) in fixtures() {
        let w = commutator_identity_check(&b).map_err(|e| e.to_string())?;
        ensure(w.is_none(), || format!("identity fails on {name}: {w:?}"))?;
        let path = scratch(&format!("comm-{name}.pdga"), &structure_doc(&b, &[]));
        let (code, _) = cli_verdict(&["commutator-check", &path, "--structure", "B"]);
        ensure(code == 0, || format!("cli: identity fails on {name}"))?;
    }
    // Every single-entry perturbation by ±1 or ±(a variable). The identity
    // must flag exactly those that break Jacobi.
    let (mut breaking, mut caught, mut silent_jacobi) = (0, 0, 0);
    let mut counterexample = None;
    for (name, b) in fixtures() {
        let r = b.algebra().ring().clone();
        let n = r.nvars();
        let mut deltas = vec![Polynomial::one(&r), -&Polynomial::one(&r)];
        for k in 0..n {
            deltas.push(Polynomial::var(&r, k));
            deltas.push(-&Polynomial::var(&r, k));
        }
        for i in 0..n {
            for j in i + 1..n {
                for d in &deltas {
                    let mut entries: Vec<BracketEntry> = (0..n)
                        .flat_map(|a| (a + 1..n).map(move |c| (a, c)))
                        .map(|(a, c)| (a, c, b.entry(a, c).clone()))
                        .collect();
                    let slot = entries.iter_mut().find(|e| e.0 == i && e.1 == j).unwrap();
                    slot.2 = &slot.2 + d;
                    let pert = PoissonStructure::new_unchecked(b.algebra(), &entries).map_err(|e| e.to_string())?;
                    let jacobi_breaks = pert.jacobi_witness().is_some();
                    let flagged = commutator_identity_check(&pert).map_err(|e| e.to_string())?.is_some();
                    ensure(flagged == jacobi_breaks, || format!("{name}: identity and Jacobi disagree on a perturbation"))?;
                    if jacobi_breaks {
                        breaking += 1;
                        caught += flagged as usize;
                    } else {
                        silent_jacobi += 1;
                        if counterexample.is_none() {
                            counterexample = Some(format!("{name} with {{{}, {}}} += {d}", r.name(i), r.name(j)));
                        }
                    }
                }
            }
        }
    }
    // one Jacobi-breaking perturbation through the binary
    let path = scratch("comm-bad.pdga", "ring Q[x, y, z]\npoisson B = { [x, y] = z + x, [y, z] = x, [z, x] = y }\n");
    let (code, v) = cli(&["commutator-check", &path, "--structure", "B"]);
    ensure(code == 1 && v["witnesses"]["residue"].is_string(), || format!("cli: {v}"))?;
    let detail = format!(
        "identity holds on all 5 fixtures; {caught}/{breaking} Jacobi-breaking perturbations caught with a witness; \
         {silent_jacobi} perturbations keep Jacobi and cannot break the identity, e.g. {}",
        counterexample.clone().unwrap_or_default()
    );
    Ok(if counterexample.is_some() { Outcome::Unattainable(detail) } else { Outcome::Pass(detail) })
}

fn c03() -> Check {
    let line = rt_line();
    let r = line.algebra().ring().clone();
    ensure(line.is_validated() && line.entry(0, 1) == &Polynomial::one(&r), || format!("got {line}"))?;
    let swap = rt_swap();
    let rr = swap.algebra().ring().clone();
    let base = ring(&["a", "b"]);
    let alg = PresentedAlgebra::free(&base);
    let d = Derivation::from_text(&alg, &[("a", "b"), ("b", "a")]).unwrap();
    let prime = alg.ideal(&[p(&base, "a^2 - b^2")]).unwrap();
    ensure(is_differential_ideal(&prime, std::slice::from_ref(&d)).unwrap(), || "a^2 - b^2 not differential".into())?;
    let ext = extend_ideal(&swap, &prime).map_err(|e| e.to_string())?;
    ensure(ext.contains(&p(&rr, "a^2 - b^2")).unwrap(), || format!("extension {ext}"))?;
    ensure(is_poisson_ideal(&swap, &ext).unwrap(), || "extended ideal is not Poisson".into())?;
    let (code, v) = cli(&["rt-extend", &fixture("line_a.pdga"), "--derivation", "d"]);
    ensure(code == 0 && v["witnesses"]["entries"][0] == "{a, t} = 1", || format!("cli: {v}"))?;
    let (code, _) = cli_verdict(&["rt-extend", &fixture("ore.pdga"), "--derivation", "swap", "--prime", "P"]);
    ensure(code == 0, || "cli: extended ideal rejected".into())?;
    Ok(Outcome::Pass("{a, t} = 1 validated; <a^2 - b^2> extends to a Poisson ideal".into()))
}

fn poisson_seeds(name: &str, r: &VariableRing) -> Vec<Polynomial> {
    let list: &[&str] = match name {
        "so3" => &["x^2 + y^2 + z^2", "x^2 + y^2 + z^2 - 4"],
        "solvable" => &["y", "y^2", "x*y"],
        "rt-swap" => &["a^2 - b^2", "a - b", "a + b"],
        _ => &["1"],
    };
    list.iter().map(|s| p(r, s)).collect()
}

fn c04() -> Check {
    let mut totals = Vec::new();
    for (name, b) in fixtures() {
        let r = b.algebra().ring().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ r.nvars() as u64);
        let seeds = poisson_seeds(name, &r);
        let mut ideals = Vec::new();
        for k in 0..60 {
            let gens: Vec<Polynomial> = if k % 2 == 0 {
                (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, &r, 2, 3)).collect()
            } else {
                let s = &seeds[rng.gen_range(0..seeds.len())];
                vec![s.clone(), s * &random_poly(&mut rng, &r, 1, 2)]
            };
            ideals.push((format!("I{k}"), gens));
        }
        let path = scratch(&format!("dual-{name}.pdga"), &structure_doc(&b, &ideals));
        let (mut agree, mut yes) = (0, 0);
        for (iname, gens) in &ideals {
            let j = b.algebra().ideal(gens).unwrap();
            let (direct, differential) = poisson_ideal_paths(&b, &j).map_err(|e| e.to_string())?;
            ensure(direct == differential, || format!("{name}: paths disagree on {j}"))?;
            let (code, verdict) = cli_verdict(&["poisson-ideal", &path, "--structure", "B", "--ideal", iname]);
            ensure(verdict == direct.to_string() && code == if direct { 0 } else { 1 }, || format!("{name}: cli disagrees on {j}"))?;
            agree += 1;
            yes += direct as usize;
        }
        totals.push(format!("{name} {agree} ({yes} Poisson)"));
    }
    Ok(Outcome::Pass(format!("0 disagreements: {}", totals.join(", "))))
}

fn c05() -> Check {
    let r = ring(&["x", "y"]);
    let alg = PresentedAlgebra::free(&r);
    let swap = [Derivation::from_text(&alg, &[("x", "y"), ("y", "x")]).unwrap()];
    let a = differential_closure(&alg, &[p(&r, "x")], &swap).map_err(|e| e.to_string())?;
    let b = differential_closure(&alg, &[p(&r, "x^2 - y^2")], &swap).map_err(|e| e.to_string())?;
    let xy = alg.ideal(&[p(&r, "x"), p(&r, "y")]).unwrap();
    let diag = alg.ideal(&[p(&r, "x^2 - y^2")]).unwrap();
    ensure(a.last() == &xy && a.stabilized && a.iterations <= 2, || format!("closure(<x>) = {} after {}", a.last(), a.iterations))?;
    ensure(b.last() == &diag && b.stabilized && b.iterations <= 2, || format!("closure(<x^2 - y^2>) = {}", b.last()))?;
    let (_, v) = cli(&["closure", &fixture("swap.pdga"), "--derivation", "swap", "--ideal", "X"]);
    ensure(v["witnesses"]["closure"] == xy.to_string(), || format!("cli: {v}"))?;
    let (_, v) = cli(&["closure", &fixture("swap.pdga"), "--derivation", "swap", "--ideal", "Diag"]);
    ensure(v["witnesses"]["closure"] == diag.to_string(), || format!("cli: {v}"))?;
    Ok(Outcome::Pass(format!("<x> -> {} in {} rounds; <x^2 - y^2> fixed in {}", a.last(), a.iterations, b.iterations)))
}

fn c06() -> Check {
    let b = solvable();
    let alg = b.algebra().clone();
    let r = alg.ring().clone();
    let ds = b.induced_derivations().unwrap();
    let n = alg.ideal(&[p(&r, "x"), p(&r, "y")]).unwrap();
    let rep = differential_core_descent(&n, &ds, 5).map_err(|e| e.to_string())?;
    ensure(rep.stabilized && rep.stable_index() == Some(0) && rep.last() == &n, || format!("core(<x, y>): {:?}", rep.chain))?;
    let m = alg.ideal(&[p(&r, "x"), p(&r, "y - 1")]).unwrap();
    let rep = differential_core_descent(&m, &ds, 5).map_err(|e| e.to_string())?;
    ensure(!rep.stabilized && rep.chain.len() >= 2, || "descent from <x, y - 1> stabilized".into())?;
    for (k, w) in rep.strictness_witnesses().iter().enumerate() {
        let g = w.as_ref().ok_or_else(|| format!("no strictness witness at step {k}"))?;
        ensure(rep.chain[k].generators().contains(g), || format!("witness {g} is not a generator"))?;
        ensure(!rep.chain[k + 1].contains(g).unwrap(), || format!("witness {g} lies in the next ideal"))?;
    }
    // independent check: J_n = <x, y - 1>^(n+1)
    let mut power = vec![Polynomial::one(&r)];
    for (k, jk) in rep.chain.iter().enumerate() {
        power = power.iter().flat_map(|q| [q * &p(&r, "x"), q * &p(&r, "y - 1")]).collect();
        let want = buchberger(&r, &power).unwrap();
        ensure(ideal_equal(jk, &want).unwrap(), || format!("J_{k} = {jk}, expected the {}-th power", k + 1))?;
    }
    let (code, v) = cli(&["core", &fixture("solvable.pdga"), "--structure", "B", "--ideal", "M", "--max-iter", "5"]);
    ensure(code == 0 && v["witnesses"]["summary"] == "not stabilized", || format!("cli: {v}"))?;
    let (code, v) = cli(&["core", &fixture("solvable.pdga"), "--structure", "B", "--ideal", "N"]);
    ensure(code == 0 && v["witnesses"]["summary"] == "stabilized at iteration 0", || format!("cli: {v}"))?;
    Ok(Outcome::Pass(format!("<x, y> stable at 0; <x, y - 1> strictly decreasing over {} steps, J_n = m^(n+1)", rep.iterations)))
}

fn c07() -> Check {
    let r = ring(&["x", "y"]);
    let alg = PresentedAlgebra::free(&r);
    let v = Subspace::new(&alg, &[p(&r, "x"), p(&r, "y")]).unwrap();
    let scale = [Derivation::from_text(&alg, &[("x", "x"), ("y", "y")]).unwrap()];
    let found = constants_search(&v, &[], &scale).map_err(|e| e.to_string())?;
    let want = ConstantSearch::Constant { numerator: p(&r, "x"), denominator: p(&r, "y") };
    ensure(found == want, || format!("got {found:?}"))?;
    let skew = [Derivation::from_text(&alg, &[("x", "x"), ("y", "2*y")]).unwrap()];
    let s = [alg.ideal(&[p(&r, "x")]).unwrap()];
    let nf = constants_search(&v, &s, &skew).map_err(|e| e.to_string())?;
    ensure(matches!(nf, ConstantSearch::NotFound(_)), || format!("got {nf:?}"))?;
    ensure(!is_constant_fraction(&alg, &p(&r, "x"), &p(&r, "y"), &skew).unwrap(), || "x/y reported constant".into())?;
    let (code, v1) = cli(&["constants", &fixture("swap.pdga"), "--derivation", "scale", "--span", "x,y"]);
    ensure(code == 0 && v1["witnesses"]["numerator"] == "x" && v1["witnesses"]["denominator"] == "y", || format!("cli: {v1}"))?;
    let (code, _) = cli_verdict(&["constants", &fixture("swap.pdga"), "--derivation", "skew", "--span", "x,y", "--family", "X"]);
    ensure(code == 1, || "cli: constant found for the skew derivation".into())?;
    let (code, _) = cli_verdict(&["const-frac", &fixture("swap.pdga"), "--derivation", "skew", "x", "y"]);
    ensure(code == 1, || "cli: x/y constant".into())?;
    Ok(Outcome::Pass("Constant(x, y) at the base case; NotFound with x/y certified nonconstant".into()))
}

/// Seeded systems linear in x1..xn with parameters y1..yd (n, d <= 3,
/// entry degree <= 2) and n + d rows.
fn random_system(seed: u64) -> (String, Vec<String>, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3usize);
    let d = rng.gen_range(1..=(4 - n).min(3));
    let cap = rng.gen_range(1..=2u32);
    let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (1..=d).map(|i| format!("y{i}")).collect();
    let yring = VariableRing::new(&ys).unwrap();
    let rows: Vec<String> = (0..n + d)
        .map(|_| {
            let mut parts = vec![format!("-({})", random_poly(&mut rng, &yring, cap, 2))];
            for x in &xs {
                if rng.gen_bool(0.7) {
                    parts.push(format!("({})*{x}", random_poly(&mut rng, &yring, cap, 2)));
                }
            }
            parts.join(" + ")
        })
        .collect();
    let mut names = xs.clone();
    names.extend(ys);
    (format!("ring Q[{}]\n", names.join(", ")), xs, rows)
}

fn c08() -> Check {
    let r = ring(&["x", "y"]);
    let sys = LinearParamSystem::new(&r, &["x"], &[p(&r, "y*x - 1"), p(&r, "x - y")]).unwrap();
    let got = count_or_infinite(&sys).map_err(|e| e.to_string())?;
    ensure(matches!(&got, CountVerdict::Finite { count: 2, bound, ok: true, .. } if *bound == BigUint::from(4u32)), || format!("got {got:?}"))?;
    let (_, v) = cli(&["count", &fixture("counting.pdga"), "--system", "S", "--unknowns", "x"]);
    ensure(v["witnesses"]["count"] == 2 && v["witnesses"]["bound"] == "4", || format!("cli: {v}"))?;
    let (mut finite, mut tried) = (0, 0);
    let mut seed = 0;
    while finite < 24 && seed < 200 {
        let (head, xs, rows) = random_system(seed);
        seed += 1;
        let text = format!("{head}ideal S = {{ {} }}\n", rows.join(", "));
        let doc = poisson_dga::symbolics::Document::parse(&text).map_err(|e| e.to_string())?;
        let xr: Vec<&str> = xs.iter().map(|s| s.as_str()).collect();
        let sys = LinearParamSystem::new(&doc.ring, &xr, doc.ideal("S").unwrap()).map_err(|e| e.to_string())?;
        tried += 1;
        let verdict = match count_or_infinite(&sys) {
            Ok(v) => v,
            Err(e) if e.is_resource_abort() => continue,
            Err(e) => return Err(e.to_string()),
        };
        if let CountVerdict::Finite { count, bound, ok, .. } = &verdict {
            ensure(*ok && BigUint::from(*count) <= *bound, || format!("seed {}: {count} > {bound}", seed - 1))?;
            let path = scratch(&format!("count-{seed}.pdga"), &text);
            let (_, v) = cli(&["count", &path, "--system", "S", "--unknowns", &xs.join(",")]);
            ensure(v["witnesses"]["count"] == *count, || format!("cli disagrees on seed {}", seed - 1))?;
            finite += 1;
        }
    }
    ensure(finite >= 20, || format!("only {finite} finite systems among {tried}"))?;
    Ok(Outcome::Pass(format!("Finite(2, 4); bound held on {finite} seeded finite systems ({tried} drawn)")))
}

fn c09() -> Check {
    let r = ring(&["x", "y"]);
    let sys = LinearParamSystem::new(&r, &["x"], &[p(&r, "y*x - 1"), p(&r, "x - y")]).unwrap();
    let m = minors_decomposition(&sys).map_err(|e| e.to_string())?;
    ensure(m.y_minus_z == Some(2) && m.projection == Some(2), || format!("got {m:?}"))?;
    let (code, v) = cli(&["minors", &fixture("counting.pdga"), "--system", "S", "--unknowns", "x"]);
    ensure(code == 0 && v["witnesses"]["y_minus_z"] == 2 && v["witnesses"]["projection"] == 2, || format!("cli: {v}"))?;
    Ok(Outcome::Pass(format!("Y = {}, Z = {}: 2 = 2", m.y, m.z)))
}

fn c10() -> Check {
    let r = ring(&["x", "y"]);
    let gens = [p(&r, "x^2 - y"), p(&r, "y^2 - x"), p(&r, "x^3 - y*x")];
    let mut worst = 0;
    for seed in 0..20u64 {
        let rep = kronecker_reduce(&gens, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(rep.verified && rep.combinations.len() == 3 && rep.retries <= 5, || format!("seed {seed}: {rep:?}"))?;
        worst = worst.max(rep.retries);
        let (code, v) = cli(&["kronecker", &fixture("counting.pdga"), "--ideal", "K", "--seed", &seed.to_string()]);
        let shown: Vec<String> = rep.combinations.iter().map(|c| c.to_string()).collect();
        ensure(code == 0 && v["witnesses"]["combinations"] == serde_json::json!(shown), || format!("cli seed {seed}: {v}"))?;
    }
    Ok(Outcome::Pass(format!("20 seeds verified with 3 combinations, at most {worst} retries")))
}

fn c11() -> Check {
    let r = ring(&["x", "y"]);
    let i = buchberger(&r, &[p(&r, "x^2 - 1"), p(&r, "y^2 - 1")]).unwrap();
    let rep = bezout_check(&i, 2).map_err(|e| e.to_string())?;
    ensure(rep.distinct == 4 && rep.bound == BigUint::from(8u32) && rep.ok, || format!("got {rep:?}"))?;
    let (code, v) = cli(&["bezout", &fixture("counting.pdga"), "--ideal", "B"]);
    ensure(code == 0 && v["witnesses"]["distinct"] == 4 && v["witnesses"]["bound"] == "8", || format!("cli: {v}"))?;
    Ok(Outcome::Pass("4 <= 8".into()))
}

fn c12() -> Check {
    let r = ring(&["a"]);
    let alg = PresentedAlgebra::free(&r);
    let v = Subspace::new(&alg, &[p(&r, "1"), p(&r, "a"), p(&r, "a^2")]).unwrap();
    let w = Subspace::new(&alg, &[p(&r, "1")]).unwrap();
    let d = [Derivation::partial(&alg, "a").unwrap()];
    let rep = logdiv_count(&v, &w, &d).map_err(|e| e.to_string())?;
    ensure(rep.total == Some(1) && rep.bound == BigUint::from(27u32) && rep.ok, || format!("got {rep:?}"))?;
    let points: Vec<(usize, Vec<_>)> =
        rep.charts.iter().flat_map(|c| c.points.iter().map(move |pt| (c.chart, pt.clone()))).collect();
    ensure(points == vec![(0, vec![rat(1), rat(0), rat(0)])], || format!("chart points {points:?}"))?;
    let (code, v) = cli(&["logdiv", &fixture("line_a.pdga"), "--derivation", "d", "--v", "1,a,a^2", "--w", "1"]);
    ensure(code == 0 && v["witnesses"]["total"] == 1 && v["witnesses"]["bound"] == "27", || format!("cli: {v}"))?;
    Ok(Outcome::Pass("total 1 <= 27; the one point is [1 : 0 : 0], the constants".into()))
}

fn c13() -> Check {
    let r = ring(&["a", "b"]);
    let alg = PresentedAlgebra::free(&r);
    let d = Derivation::from_text(&alg, &[("a", "1"), ("b", "0")]).unwrap();
    let o = |s: &str, t: &Derivation| OrePolynomial::parse(s, t, "x").unwrap();
    ensure(ore_mul(&o("x", &d), &o("a", &d)).unwrap() == o("a*x + 1", &d), || "x*a".into())?;
    ensure(ore_mul(&o("x^2", &d), &o("a", &d)).unwrap() == o("a*x^2 + 2*x", &d), || "x^2*a".into())?;
    let swap = Derivation::from_text(&alg, &[("a", "b"), ("b", "a")]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let random = |t: &Derivation, rng: &mut ChaCha8Rng| {
        let cs: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_poly(rng, &r, 2, 2)).collect();
        OrePolynomial::new(t, &cs).unwrap()
    };
    let mut failures = 0;
    for k in 0..200 {
        let t = if k % 2 == 0 { &d } else { &swap };
        let (f, g, h) = (random(t, &mut rng), random(t, &mut rng), random(t, &mut rng));
        let l = ore_mul(&ore_mul(&f, &g).unwrap(), &h).unwrap();
        let rr = ore_mul(&f, &ore_mul(&g, &h).unwrap()).unwrap();
        failures += (l != rr) as usize;
    }
    ensure(failures == 0, || format!("{failures} associativity failures"))?;
    let cert = induced_two_sided(&alg.ideal(&[p(&r, "a^2 - b^2")]).unwrap(), &swap, &[]).map_err(|e| e.to_string())?;
    ensure(cert.two_sided && cert.quotient_compatible, || format!("{cert:?}"))?;
    let (_, v) = cli(&["ore-mul", &fixture("ore.pdga"), "--twist", "d", "x^2", "a"]);
    ensure(v["witnesses"]["product"] == "a*x^2 + 2*x", || format!("cli: {v}"))?;
    let (code, _) = cli_verdict(&["ore-ideal", &fixture("ore.pdga"), "--twist", "swap", "--ideal", "P"]);
    ensure(code == 0, || "cli: induced ideal certificate failed".into())?;
    Ok(Outcome::Pass(format!("rewriting exact; 200 triples associative; certificate checked {} products", cert.products_checked)))
}

fn c14() -> Check {
    let r2 = ring(&["a", "b"]);
    let a2 = PresentedAlgebra::free(&r2);
    let v = Subspace::new(&a2, &[p(&r2, "1"), p(&r2, "a"), p(&r2, "b")]).unwrap();
    let commutative = gk_estimate(&commutative_growth(&v, 30).map_err(|e| e.to_string())?, 0.5).unwrap();
    let krull = krull_dim(&a2).unwrap();
    let r1 = ring(&["a"]);
    let a1 = PresentedAlgebra::free(&r1);
    let base = gk_estimate(&commutative_growth(&Subspace::new(&a1, &[p(&r1, "1"), p(&r1, "a")]).unwrap(), 30).unwrap(), 0.5).unwrap();
    let t = Derivation::partial(&a1, "a").unwrap();
    let gens = [OrePolynomial::one(&t), OrePolynomial::constant(&t, &p(&r1, "a")).unwrap(), OrePolynomial::x(&t)];
    let skew = gk_estimate(&growth_sequence(&gens, 30).map_err(|e| e.to_string())?, 0.5).unwrap();
    let close = |v: &Value, s: f64| v["witnesses"]["slope"].as_f64().is_some_and(|c| (c - s).abs() < 1e-9);
    let range = 1.7..=2.3;
    ensure(range.contains(&commutative.slope) && krull == 2, || format!("Q[a,b]: {:.3}", commutative.slope))?;
    ensure(range.contains(&skew.slope), || format!("Q[a][x;d]: {:.3}", skew.slope))?;
    let (_, v) = cli(&["gk", &fixture("ore.pdga"), "--span", "1,a,b", "--n-max", "30"]);
    ensure(close(&v, commutative.slope), || format!("cli: {v}"))?;
    let (_, v) = cli(&["gk", &fixture("line_a.pdga"), "--span", "1,a", "--twist", "d", "--n-max", "30"]);
    ensure(close(&v, skew.slope), || format!("cli: {v}"))?;
    Ok(Outcome::Pass(format!(
        "Q[a,b] {:.3} (Krull 2); Q[a] {:.3}; Q[a][x;d] {:.3}",
        commutative.slope, base.slope, skew.slope
    )))
}

fn c15() -> Check {
    let r = ring(&["x", "y"]);
    let v = buchberger(&r, &[p(&r, "x^2 - y")]).unwrap();
    let tau = prolongation_ideal(&v).map_err(|e| e.to_string())?;
    let tr = tau.ring().clone();
    let want = buchberger(&tr, &[p(&tr, "x^2 - y"), p(&tr, "2*x*Y1 - Y2")]).unwrap();
    ensure(ideal_equal(&tau, &want).unwrap(), || format!("prolongation {tau}"))?;
    let parabola = PresentedAlgebra::new(&r, &[p(&r, "x^2 - y")], true).unwrap();
    ensure(make_dvariety(&parabola, &[p(&r, "1"), p(&r, "2*x")]).is_ok(), || "valid parabola section rejected".into())?;
    let bad = make_dvariety(&parabola, &[p(&r, "1"), p(&r, "1")]);
    ensure(matches!(&bad, Err(Error::InvalidSection { residue, .. }) if residue == "2*x - 1"), || format!("got {bad:?}"))?;
    let l = ring(&["x"]);
    let line = PresentedAlgebra::free(&l);
    let dv = make_dvariety(&line, &[p(&l, "x")]).map_err(|e| e.to_string())?;
    let sub = |s: &str| is_d_subvariety(&dv, &buchberger(&l, &[p(&l, s)]).unwrap()).unwrap();
    ensure(sub("x") && !sub("x - 1"), || "D-subvariety verdicts".into())?;
    let sharp = constant_sharp_points(&dv).map_err(|e| e.to_string())?;
    ensure(sharp.locus == buchberger(&l, &[p(&l, "x")]).unwrap() && sharp.points == Some(vec![vec![rat(0)]]), || format!("{sharp:?}"))?;
    let f = fixture("parabola.pdga");
    ensure(cli_verdict(&["dvariety", &f, "--presentation", "V", "--section", "s"]).0 == 0, || "cli: valid section".into())?;
    ensure(cli_verdict(&["dvariety", &f, "--presentation", "V", "--section", "bad"]).0 == 1, || "cli: invalid section".into())?;
    let g = fixture("line.pdga");
    ensure(cli_verdict(&["dsub", &g, "--section", "s", "--ideal", "X"]).0 == 0, || "cli: <x>".into())?;
    ensure(cli_verdict(&["dsub", &g, "--section", "s", "--ideal", "X1"]).0 == 1, || "cli: <x - 1>".into())?;
    let (_, v) = cli(&["sharp", &g, "--section", "s"]);
    ensure(v["witnesses"]["locus"] == "<x>", || format!("cli: {v}"))?;
    Ok(Outcome::Pass("prolongation, section, D-subvariety and sharp locus verdicts as expected".into()))
}

fn c16() -> Check {
    let b = weyl();
    let r = b.algebra().ring().clone();
    let mut ideals = Vec::new();
    for lam in 0..3 {
        for mu in 0..3 {
            let gens = vec![p(&r, &format!("x - {lam}")), p(&r, &format!("y - {mu}"))];
            let q = b.algebra().ideal(&gens).unwrap();
            ensure(!tall_prime_bracket_check(&b, &q).unwrap(), || format!("bracket check passed on {q}"))?;
            ensure(!is_poisson_ideal(&b, &q).unwrap(), || format!("{q} is Poisson"))?;
            ideals.push((format!("M{lam}{mu}"), gens));
        }
    }
    let path = scratch("tall.pdga", &structure_doc(&b, &ideals));
    for (name, _) in &ideals {
        let (code, v) = cli(&["tallcheck", &path, "--structure", "B", "--ideal", name]);
        ensure(code == 1 && v["witnesses"]["poisson_ideal"] == false, || format!("cli {name}: {v}"))?;
    }
    Ok(Outcome::Pass("all nine maximal ideals fail the bracket check and are not Poisson".into()))
}

fn c17() -> Check {
    let r = ring(&["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut failures = 0;
    let mut sample = Vec::new();
    for k in 0..1000 {
        let f = random_poly(&mut rng, &r, 6, 8);
        let shown = f.to_string();
        let back = parse_polynomial(&shown, &r).map_err(|e| format!("{shown}: {e}"))?;
        failures += (back != f || back.to_string() != shown) as usize;
        if k % 20 == 0 {
            sample.push(shown);
        }
    }
    ensure(failures == 0, || format!("{failures} round-trip failures"))?;
    let path = scratch("roundtrip.pdga", "ring Q[x, y, z]\nderivation zero = { x -> 0, y -> 0, z -> 0 }\n");
    for s in &sample {
        let (_, v) = cli(&["ore-mul", &path, "--twist", "zero", "--ore-var", "w", "--", s, "1"]);
        ensure(v["witnesses"]["product"] == s.as_str(), || format!("cli printed {} for {s}", v["witnesses"]["product"]))?;
    }
    Ok(Outcome::Pass(format!("1000 polynomials, 0 failures; {} also through the binary", sample.len())))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, u64, fn() -> Check)> = vec![
        ("Poisson validation", 1, c01),
        ("commutator identity", 1, c02),
        ("R[t] extension", 1, c03),
        ("dual-path agreement", 60, c04),
        ("differential closure", 1, c05),
        ("core descent", 10, c06),
        ("constant search", 1, c07),
        ("counting bound", 60, c08),
        ("minors consistency", 5, c09),
        ("Kronecker reduction", 60, c10),
        ("Bezout bound", 1, c11),
        ("log-derivative bound", 5, c12),
        ("Ore ring", 10, c13),
        ("GK growth", 60, c14),
        ("D-geometry", 1, c15),
        ("maximal ideals of the Weyl bracket", 5, c16),
        ("print/parse round trip", 5, c17),
    ];
    let (mut passed, mut unattainable, mut failed) = (0, 0, 0);
    for (k, (title, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let mut outcome = result.unwrap_or_else(Outcome::Fail);
        if took > Duration::from_secs(limit) {
            outcome = Outcome::Fail(format!("took {took:.2?}, limit {limit} s"));
        }
        let (tag, detail) = match &outcome {
            Outcome::Pass(d) => {
                passed += 1;
                ("PASS", d.clone())
            }
            Outcome::Unattainable(d) => {
                unattainable += 1;
                ("FAIL", format!("not attainable as worded: {d}"))
            }
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d.clone())
            }
        };
        println!("{tag} {:02} {title} [{} ms, limit {limit} s]: {detail}", k + 1, took.as_millis());
    }
    println!("acceptance: {passed} passed, {unattainable} not attainable as worded, {failed} failed");
    let _ = std::fs::remove_dir_all(std::env::temp_dir().join(format!("pdga-acceptance-{}", std::process::id())));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
