//! Gröbner bases over Q: Buchberger, normal forms, ideal comparison,
//! elimination, intersection, radical membership and syzygy solving.

mod buchberger;
mod module;
pub(crate) mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Mutex, OnceLock};

pub(crate) use buchberger::reduce_full;
pub use module::{module_solve, module_solve_vec};
pub use ops::{eliminate, ideal_sum, intersect, intersect_all, radical_member};

use crate::error::{Error, Result};
use crate::symbolics::{MonomialOrder, Polynomial, VariableRing};

/// Default cap on the total degree of any intermediate polynomial.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

static DEGREE_CAP: AtomicU32 = AtomicU32::new(DEFAULT_DEGREE_CAP);

pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Sets the process-wide degree guard used by every basis computation.
pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

type CacheKey = (VariableRing, Vec<Polynomial>);

const CACHE_LIMIT: usize = 4096;

fn cache() -> &'static Mutex<HashMap<CacheKey, GroebnerBasis>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, GroebnerBasis>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Reduced, monic Gröbner basis of an ideal of `ring`, generators sorted
/// ascending by leading monomial. The zero ideal has no generators and the
/// unit ideal is `{1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    ring: VariableRing,
    gens: Vec<Polynomial>,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`, using
/// the ring's monomial order.
pub fn buchberger(ring: &VariableRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.dedup();
    let key = (ring.clone(), input.clone());
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let basis = GroebnerBasis { ring: ring.clone(), gens: buchberger::buchberger_core(ring, &input, degree_cap())? };
    let mut guard = cache().lock().unwrap();
    if guard.len() >= CACHE_LIMIT {
        guard.clear();
    }
    guard.insert(key, basis.clone());
    Ok(basis)
}

/// Same as [`buchberger`] after moving the generators into a copy of their
/// ring carrying `order`.
pub fn buchberger_with_order(ring: &VariableRing, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let target = ring.with_monomial_order(order)?;
    let moved = gens
        .iter()
        .map(|g| if g.ring() == ring { Ok(g.reorder(&target)) } else { Err(Error::RingMismatch) })
        .collect::<Result<Vec<_>>>()?;
    buchberger(&target, &moved)
}

impl GroebnerBasis {
    pub fn zero(ring: &VariableRing) -> Self {
        GroebnerBasis { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &VariableRing) -> Self {
        GroebnerBasis { ring: ring.clone(), gens: vec![Polynomial::one(ring)] }
    }

    pub fn ring(&self) -> &VariableRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Remainder of `p` modulo the ideal; zero exactly for members.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduce(p))
    }

    /// Normal form without the ring check, for callers that already know.
    pub(crate) fn reduce(&self, p: &Polynomial) -> Polynomial {
        if self.is_unit() {
            return Polynomial::zero(&self.ring);
        }
        reduce_full(p, &self.gens)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &GroebnerBasis) -> Result<bool> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(other.gens.iter().all(|g| self.reduce(g).is_zero()))
    }

    /// Extends by more generators and recomputes.
    pub fn extend(&self, extra: &[Polynomial]) -> Result<GroebnerBasis> {
        let mut all = self.gens.clone();
        all.extend(extra.iter().cloned());
        buchberger(&self.ring, &all)
    }
}

/// Reduced bases are unique, so equality of ideals is equality of bases.
pub fn ideal_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    Ok(a.gens == b.gens)
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroebnerBasis({self})")
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("<0>");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}
