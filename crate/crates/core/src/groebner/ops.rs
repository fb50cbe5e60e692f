use super::{buchberger, GroebnerBasis};
use crate::error::{Error, Result};
use crate::symbolics::{MonomialOrder, Polynomial, VariableRing};

/// Ideal generated by `I` and `extra`.
pub fn ideal_sum(ideal: &GroebnerBasis, extra: &[Polynomial]) -> Result<GroebnerBasis> {
    ideal.extend(extra)
}

/// `I ∩ Q[remaining variables]`, computed with a block order that puts the
/// dropped variables first. The result lives in a ring of the remaining
/// variables (grevlex, or lex if the input ring was lex).
pub fn eliminate(ideal: &GroebnerBasis, drop: &[&str]) -> Result<GroebnerBasis> {
    let ring = ideal.ring();
    let mut front = Vec::with_capacity(drop.len());
    for name in drop {
        front.push(ring.var_index(name)?);
    }
    let keep_names: Vec<String> =
        ring.names().iter().enumerate().filter(|(i, _)| !front.contains(i)).map(|(_, n)| n.clone()).collect();
    let small_order = match ring.order() {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::Grevlex,
    };
    let small = VariableRing::build(keep_names, small_order)?;
    eliminate_into(ideal.ring(), ideal.generators(), &front, &small)
}

/// Eliminates the variables at `front` and expresses the result in
/// `target`, which must contain every remaining variable by name.
pub(crate) fn eliminate_into(
    ring: &VariableRing,
    gens: &[Polynomial],
    front: &[usize],
    target: &VariableRing,
) -> Result<GroebnerBasis> {
    if front.is_empty() {
        let moved = gens.iter().map(|g| g.restrict_by_name(target)).collect::<Result<Vec<_>>>()?;
        return buchberger(target, &moved);
    }
    let block = super::buchberger_with_order(ring, gens, MonomialOrder::block(front.iter().copied()))?;
    let kept = block
        .generators()
        .iter()
        .filter(|g| g.variables().iter().all(|v| !front.contains(v)))
        .map(|g| g.restrict_by_name(target))
        .collect::<Result<Vec<_>>>()?;
    buchberger(target, &kept)
}

/// `I ∩ J` via elimination of `t` from `t*I + (1 - t)*J`.
pub fn intersect(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<GroebnerBasis> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_unit() {
        return Ok(a.clone());
    }
    if b.is_zero_ideal() || a.is_unit() {
        return Ok(b.clone());
    }
    let t_name = ring.fresh_name("_t");
    let ext = ring.extend(&[t_name.as_str()])?;
    let t_idx = ext.nvars() - 1;
    let t = Polynomial::var(&ext, t_idx);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a.generators() {
        gens.push(&t * &g.embed_by_name(&ext)?);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.embed_by_name(&ext)?);
    }
    eliminate_into(&ext, &gens, &[t_idx], ring)
}

/// Intersection of a finite family; the empty family gives the unit ideal.
pub fn intersect_all(ring: &VariableRing, ideals: &[GroebnerBasis]) -> Result<GroebnerBasis> {
    let mut acc = GroebnerBasis::unit(ring);
    for i in ideals {
        acc = intersect(&acc, i)?;
        if acc.is_zero_ideal() {
            break;
        }
    }
    Ok(acc)
}

/// Rabinowitsch test: `p ∈ rad(I)` iff `I + <1 - z*p>` is the unit ideal
/// in `Q[vars, z]`.
pub fn radical_member(p: &Polynomial, ideal: &GroebnerBasis) -> Result<bool> {
    if p.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if ideal.reduce(p).is_zero() {
        return Ok(true);
    }
    let ring = ideal.ring();
    let z_name = ring.fresh_name("_z");
    let mut names: Vec<String> = ring.names().to_vec();
    names.push(z_name);
    let ext = VariableRing::build(names, MonomialOrder::Grevlex)?;
    let z = Polynomial::var(&ext, ext.nvars() - 1);
    let mut gens = ideal.generators().iter().map(|g| g.embed_by_name(&ext)).collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(&ext) - &(&z * &p.embed_by_name(&ext)?));
    Ok(buchberger(&ext, &gens)?.is_unit())
}
