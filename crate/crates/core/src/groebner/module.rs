//! Gröbner bases for submodules of free modules `R^k` under the
//! position-over-term order (lower component index is larger), used to
//! extract syzygy-type kernels.

use std::collections::HashSet;

use super::{degree_cap, GroebnerBasis};
use crate::error::{Error, Result};
use crate::symbolics::{Monomial, Polynomial, Rational, VariableRing};

#[derive(Clone, Debug)]
struct ModVec(Vec<Polynomial>);

impl ModVec {
    fn lead(&self) -> Option<(usize, &Monomial, &Rational)> {
        self.0.iter().enumerate().find(|(_, p)| !p.is_zero()).map(|(i, p)| {
            let (m, c) = p.leading_term().unwrap();
            (i, m, c)
        })
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_zero())
    }

    fn sub_multiple(&self, other: &ModVec, m: &Monomial, c: &Rational) -> ModVec {
        ModVec(self.0.iter().zip(&other.0).map(|(a, b)| if b.is_zero() { a.clone() } else { a.sub_multiple(b, m, c) }).collect())
    }

    fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.total_degree()).max().unwrap_or(0)
    }
}

/// Reduces the leading term until it is not divisible by any basis lead in
/// the same position.
fn top_reduce(v: &ModVec, basis: &[ModVec]) -> ModVec {
    let mut w = v.clone();
    loop {
        let (pos, m, c) = match w.lead() {
            None => return w,
            Some((pos, m, c)) => (pos, m.clone(), c.clone()),
        };
        let divisor = basis.iter().find(|b| matches!(b.lead(), Some((bp, bm, _)) if bp == pos && bm.divides(&m)));
        match divisor {
            None => return w,
            Some(b) => {
                let (_, bm, bc) = b.lead().unwrap();
                let q = bm.quotient_of(&m);
                let coef = &c / bc;
                w = w.sub_multiple(b, &q, &coef);
            }
        }
    }
}

fn module_gb(input: Vec<ModVec>, cap: u32) -> Result<Vec<ModVec>> {
    let mut basis: Vec<ModVec> = Vec::new();
    let check = |v: &ModVec| -> Result<()> {
        let d = v.degree();
        if d > cap {
            Err(Error::DegreeGuard { degree: d, cap })
        } else {
            Ok(())
        }
    };
    for v in input {
        check(&v)?;
        let r = top_reduce(&v, &basis);
        if !r.is_zero() {
            basis.push(r);
        }
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |basis: &[ModVec], new: usize, pending: &mut Vec<(usize, usize)>, set: &mut HashSet<(usize, usize)>| {
        let pos = basis[new].lead().unwrap().0;
        for k in 0..new {
            if basis[k].lead().unwrap().0 == pos {
                pending.push((k, new));
                set.insert((k, new));
            }
        }
    };
    for j in 0..basis.len() {
        push_pairs(&basis, j, &mut pending, &mut pending_set);
    }
    while let Some((i, j)) = pending.pop() {
        pending_set.remove(&(i, j));
        let (pos, mi, ci) = basis[i].lead().unwrap();
        let (_, mj, cj) = basis[j].lead().unwrap();
        let l = mi.lcm(mj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && matches!(basis[k].lead(), Some((kp, km, _)) if kp == pos && km.divides(&l))
                && !pending_set.contains(&key(i, k))
                && !pending_set.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let si = ModVec(basis[i].0.iter().map(|p| p.mul_term(&mi.quotient_of(&l), &ci.recip())).collect());
        let s = si.sub_multiple(&basis[j], &mj.quotient_of(&l), &cj.recip());
        check(&s)?;
        let r = top_reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        check(&r)?;
        basis.push(r);
        let n = basis.len() - 1;
        push_pairs(&basis, n, &mut pending, &mut pending_set);
    }
    Ok(basis)
}

/// Generators of `{ (h_1..h_r) : Σ h_i f_i ∈ J }`.
///
/// Computed from a position-over-term basis of the module generated by
/// `(f_i, e_i)` and `(g, 0)` for generators `g` of `J`; elements whose first
/// component vanishes project onto a generating set.
pub fn module_solve(f: &[Polynomial], j: &GroebnerBasis) -> Result<Vec<Vec<Polynomial>>> {
    let cols: Vec<Vec<Polynomial>> = f.iter().map(|p| vec![p.clone()]).collect();
    module_solve_vec(&cols, j)
}

/// Vector version: each `f_i` is a column in `R^m`, and the condition is
/// `Σ h_i f_i ∈ J^m` componentwise.
pub fn module_solve_vec(f: &[Vec<Polynomial>], j: &GroebnerBasis) -> Result<Vec<Vec<Polynomial>>> {
    let ring: &VariableRing = j.ring();
    let r = f.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let m = f[0].len();
    if f.iter().any(|col| col.len() != m || col.iter().any(|p| p.ring() != ring)) {
        return Err(Error::RingMismatch);
    }
    let zero = Polynomial::zero(ring);
    let width = m + r;
    let mut input = Vec::new();
    for (i, col) in f.iter().enumerate() {
        let mut v = vec![zero.clone(); width];
        v[..m].clone_from_slice(col);
        v[m + i] = Polynomial::one(ring);
        input.push(ModVec(v));
    }
    for g in j.generators() {
        for c in 0..m {
            let mut v = vec![zero.clone(); width];
            v[c] = g.clone();
            input.push(ModVec(v));
        }
    }
    let basis = module_gb(input, degree_cap())?;
    let mut out: Vec<Vec<Polynomial>> = Vec::new();
    for v in basis {
        if v.0[..m].iter().all(|p| p.is_zero()) {
            let h: Vec<Polynomial> = v.0[m..].iter().map(|p| p.clone()).collect();
            let h = normalize(h);
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

/// Scales so the leading coefficient of the first nonzero entry is one.
fn normalize(h: Vec<Polynomial>) -> Vec<Polynomial> {
    match h.iter().find(|p| !p.is_zero()).and_then(|p| p.leading_coefficient().cloned()) {
        Some(c) => {
            let inv = c.recip();
            h.into_iter().map(|p| p.scale(&inv)).collect()
        }
        None => h,
    }
}
