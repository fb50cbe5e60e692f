use std::collections::HashSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::symbolics::{Monomial, Polynomial, Rational, VariableRing};

/// Fully reduces `p` by `basis` (every term, not just the leading one).
/// Divisors are tried in slice order, so the result is deterministic.
pub(crate) fn reduce_full(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let mut work = p.clone();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = work.leading_term().cloned() {
        match basis.iter().find(|g| g.leading_monomial().map_or(false, |l| l.divides(&m))) {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                work = work.sub_multiple(g, &lm.quotient_of(&m), &(&c / lc));
            }
            None => {
                work.pop_leading();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    Polynomial::from_sorted_terms(&ring, rem)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &cf.recip());
    let b = g.mul_term(&mg.quotient_of(&l), &cg.recip());
    &a - &b
}

fn guard(p: &Polynomial, cap: u32) -> Result<()> {
    let d = p.total_degree();
    if d > cap {
        Err(Error::DegreeGuard { degree: d, cap })
    } else {
        Ok(())
    }
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion, the
/// chain criterion and normal pair selection (smallest lcm first, ties by
/// pair index). Returns the reduced, monic basis sorted ascending by leading
/// monomial.
pub(crate) fn buchberger_core(ring: &VariableRing, input: &[Polynomial], cap: u32) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for p in input {
        guard(p, cap)?;
        let r = reduce_full(p, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        basis.push(r.monic());
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
            pending_set.insert((i, j));
        }
    }

    while !pending.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize)| -> Monomial {
            basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap())
        };
        let pick = (0..pending.len())
            .min_by(|&a, &b| {
                ring.cmp_monomials(&lcm_of(&pending[a]), &lcm_of(&pending[b]))
                    .then_with(|| (pending[a].1, pending[a].0).cmp(&(pending[b].1, pending[b].0)))
            })
            .unwrap();
        let (i, j) = pending.swap_remove(pick);
        pending_set.remove(&(i, j));

        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending_set.contains(&key(i, k))
                && !pending_set.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j]);
        guard(&s, cap)?;
        let r = reduce_full(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        guard(&r, cap)?;
        let n = basis.len();
        basis.push(r.monic());
        for k in 0..n {
            pending.push((k, n));
            pending_set.insert((k, n));
        }
    }

    Ok(interreduce(basis))
}

/// Minimalizes and fully inter-reduces a Gröbner basis.
pub(crate) fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lh = h.leading_monomial().unwrap();
            k != idx && lh.divides(lm) && (lh != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
            reduce_full(&minimal[i], &others).monic()
        })
        .collect();
    if let Some(ring) = reduced.first().map(|g| g.ring().clone()) {
        reduced.sort_by(|a, b| ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    }
    debug_assert!(reduced.iter().all(|g| !g.is_zero() && g.leading_coefficient().map_or(false, |c| !c.is_zero())));
    reduced
}
