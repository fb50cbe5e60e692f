use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// `Q[x1, ..., xn]` with a fixed monomial order. Cheap to clone.
#[derive(Clone)]
pub struct VariableRing(Arc<RingInner>);

#[derive(PartialEq, Eq, Hash)]
struct RingInner {
    names: Vec<String>,
    order: MonomialOrder,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableRing {
    /// Ring over the given variable names with the default grevlex order.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::with_order(names, MonomialOrder::Grevlex)
    }

    pub fn with_order<S: AsRef<str>>(names: &[S], order: MonomialOrder) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        Self::build(names.iter().map(|s| s.as_ref().to_string()).collect(), order)
    }

    /// Like `with_order` but allows the zero-variable ring `Q`, which arises
    /// when eliminating every variable.
    pub(crate) fn build(names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let MonomialOrder::Block(front) = &order {
            if front.iter().any(|&i| i >= names.len()) {
                return Err(Error::InvalidRing("block order names a missing variable".into()));
            }
        }
        Ok(VariableRing(Arc::new(RingInner { names, order })))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Same variables, different order.
    pub fn with_monomial_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::build(self.0.names.clone(), order)
    }

    /// Appends variables at the end. Block orders keep their front set; the
    /// new variables join the tail block.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Self> {
        let mut names = self.0.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::build(names, self.0.order.clone())
    }

    /// A name based on `stem` not used by this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (1..)
            .map(|k| format!("{stem}{k}"))
            .find(|n| self.index_of(n).is_none())
            .expect("unbounded search")
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.0.order.cmp(a, b)
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl PartialEq for VariableRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for VariableRing {}

impl std::hash::Hash for VariableRing {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for VariableRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.names.join(","))?;
        if self.0.order != MonomialOrder::Grevlex {
            write!(f, " {:?}", self.0.order)?;
        }
        Ok(())
    }
}

impl fmt::Display for VariableRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.names.join(", "))
    }
}
