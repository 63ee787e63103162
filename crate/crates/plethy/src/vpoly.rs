//! Polynomials in the formal vertex variables `v_{g,n}`.
//!
//! A monomial is a multiset of vertex types `(g, n)`; these are the
//! symbolic weights appearing in graph sums, with one variable per stable
//! vertex type. Used both by the graph oracle and as a coefficient ring
//! for the symbolic scalar pipeline.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::coeff::Rat;
use crate::series::Scalar;

/// Vertex type: genus and valence, subject to stability `2(g-1) + n > 0`.
pub type VertexType = (u8, u32);

/// Sorted multiset of vertex types.
pub type VMonomial = Vec<VertexType>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VPoly {
    terms: BTreeMap<VMonomial, Rat>,
}

impl VPoly {
    pub fn zero() -> Self {
        VPoly::default()
    }

    pub fn one() -> Self {
        VPoly::constant(Rat::one())
    }

    pub fn constant(q: Rat) -> Self {
        let mut p = VPoly::default();
        if !q.is_zero() {
            p.terms.insert(Vec::new(), q);
        }
        p
    }

    /// The variable `v_{g,n}`.
    pub fn var(g: u8, n: u32) -> Self {
        assert!(2 * (g as i64 - 1) + n as i64 > 0, "unstable vertex type ({g},{n})");
        let mut p = VPoly::default();
        p.terms.insert(vec![(g, n)], Rat::one());
        p
    }

    /// A single scaled monomial.
    pub fn monomial(types: &[VertexType], q: Rat) -> Self {
        let mut key: VMonomial = types.to_vec();
        key.sort_unstable();
        let mut p = VPoly::default();
        if !q.is_zero() {
            p.terms.insert(key, q);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &[VertexType]) -> Rat {
        let mut key = mono.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, key: VMonomial, q: Rat) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + q;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &VPoly) {
        for (k, q) in &other.terms {
            self.insert(k.clone(), q.clone());
        }
    }

    /// Evaluate with every variable set to 1: the total graph weight.
    pub fn eval_all_ones(&self) -> Rat {
        let mut acc = Rat::zero();
        for q in self.terms.values() {
            acc += q;
        }
        acc
    }

    /// Difference as a list of (monomial, self-coefficient, other-coefficient).
    pub fn diff_terms(&self, other: &VPoly) -> Vec<(VMonomial, Rat, Rat)> {
        let mut keys: Vec<VMonomial> = self.terms.keys().cloned().collect();
        for k in other.terms.keys() {
            if !self.terms.contains_key(k) {
                keys.push(k.clone());
            }
        }
        keys.sort();
        keys.into_iter()
            .filter_map(|k| {
                let a = self.terms.get(&k).cloned().unwrap_or_else(Rat::zero);
                let b = other.terms.get(&k).cloned().unwrap_or_else(Rat::zero);
                if a == b {
                    None
                } else {
                    Some((k, a, b))
                }
            })
            .collect()
    }
}

impl Scalar for VPoly {
    fn ring_zero() -> Self {
        VPoly::zero()
    }
    fn ring_one() -> Self {
        VPoly::one()
    }
    fn ring_is_zero(&self) -> bool {
        VPoly::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn ring_sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, q) in &other.terms {
            out.insert(k.clone(), -q.clone());
        }
        out
    }
    fn ring_mul(&self, other: &Self) -> Self {
        let mut out = VPoly::default();
        for (ka, qa) in &self.terms {
            for (kb, qb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                k.sort_unstable();
                out.insert(k, qa * qb);
            }
        }
        out
    }
    fn ring_neg(&self) -> Self {
        let mut out = VPoly::default();
        for (k, q) in &self.terms {
            out.terms.insert(k.clone(), -q.clone());
        }
        out
    }
    fn from_rat(q: &Rat) -> Self {
        VPoly::constant(q.clone())
    }
    fn scale_rat(&self, q: &Rat) -> Self {
        if q.is_zero() {
            return VPoly::zero();
        }
        let mut out = VPoly::default();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * q);
        }
        out
    }
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, q) = self.terms.iter().next().unwrap();
        if !k.is_empty() {
            return None;
        }
        Some(VPoly::constant(q.recip()))
    }
}


impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Sort by total degree then key for readable output.
        let mut items: Vec<(&VMonomial, &Rat)> = self.terms.iter().collect();
        items.sort_by_key(|(k, _)| (k.len(), (*k).clone()));
        let mut first = true;
        for (k, q) in items {
            let neg = q.is_negative();
            let aq = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !aq.is_one() || k.is_empty() {
                factors.push(if aq.is_integer() {
                    format!("{}", aq.numer())
                } else {
                    format!("{}", aq)
                });
            }
            let mut i = 0;
            while i < k.len() {
                let mut j = i;
                while j < k.len() && k[j] == k[i] {
                    j += 1;
                }
                let (g, n) = k[i];
                if j - i == 1 {
                    factors.push(format!("v{},{}", g, n));
                } else {
                    factors.push(format!("v{},{}^{}", g, n, j - i));
                }
                i = j;
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn arithmetic() {
        let a = VPoly::var(0, 3);
        let b = VPoly::var(1, 1);
        let p = a.ring_mul(&b).ring_add(&a.ring_mul(&a).scale_rat(&rat(3, 1)));
        assert_eq!(p.coefficient(&[(0, 3), (1, 1)]), rat(1, 1));
        assert_eq!(p.coefficient(&[(0, 3), (0, 3)]), rat(3, 1));
        assert_eq!(p.eval_all_ones(), rat(4, 1));
        assert!(p.ring_sub(&p).is_zero());
    }

    #[test]
    fn display() {
        let sq = VPoly::var(0, 3).ring_mul(&VPoly::var(0, 3));
        let p = VPoly::var(0, 4).ring_add(&sq.scale_rat(&rat(3, 1)));
        assert_eq!(format!("{}", p), "v0,4 + 3*v0,3^2");
    }
}
