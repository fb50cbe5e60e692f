use std::cmp::Ordering;

/// Exponent vector `[e0, e1, ...]` standing for `x0^e0 * x1^e1 * ...`.
/// The derived `Ord` is plain vector comparison, not a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Term order on monomials of a fixed ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Elimination order: the listed variables (sorted indices) are compared
    /// first by grevlex, ties broken by grevlex on the remaining variables.
    Block(Vec<usize>),
}

impl MonomialOrder {
    pub fn block<I: IntoIterator<Item = usize>>(front: I) -> Self {
        let mut v: Vec<usize> = front.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        MonomialOrder::Block(v)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents(), 0..a.nvars()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Block(front) => {
                let n = a.nvars();
                let first = grevlex(a.exponents(), b.exponents(), front.iter().copied());
                if first != Ordering::Equal {
                    return first;
                }
                let rest = (0..n).filter(|i| front.binary_search(i).is_err());
                grevlex(a.exponents(), b.exponents(), rest)
            }
        }
    }
}

fn grevlex<I>(a: &[u32], b: &[u32], idx: I) -> Ordering
where
    I: Iterator<Item = usize> + Clone,
{
    let da: u32 = idx.clone().map(|i| a[i]).sum();
    let db: u32 = idx.clone().map(|i| b[i]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    let positions: Vec<usize> = idx.collect();
    for &i in positions.iter().rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
