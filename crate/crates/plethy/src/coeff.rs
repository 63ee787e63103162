//! The coefficient ring `K = Q[L, L^-1][S_12, S_16, S_18, ...]`.
//!
//! `L` is the Lefschetz class (weight-two Tate structure) and may carry
//! negative exponents, since intermediate expressions divide by powers of
//! `L`. The symbols `S_w` (even weight `w >= 12`) stand for the Hodge
//! structures attached to cusp forms of weight `w`; they are opaque
//! polynomial generators here. Every published quantity is asserted to be
//! polynomial in `L` at extraction time.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar: arbitrary precision, always reduced, denominator
/// positive. `num_rational` maintains that canonical form.
pub type Rat = BigRational;

/// Build a rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Monomial key of [`Coeff`]: an `L`-exponent (possibly negative) and a
/// sorted multiset of cusp-symbol weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffKey {
    pub l_exp: i64,
    pub cusp: Vec<u32>,
}

impl CoeffKey {
    fn unit() -> Self {
        CoeffKey { l_exp: 0, cusp: Vec::new() }
    }

    fn mul(&self, other: &CoeffKey) -> CoeffKey {
        let mut cusp = Vec::with_capacity(self.cusp.len() + other.cusp.len());
        cusp.extend_from_slice(&self.cusp);
        cusp.extend_from_slice(&other.cusp);
        cusp.sort_unstable();
        CoeffKey { l_exp: self.l_exp + other.l_exp, cusp }
    }
}

/// Element of the coefficient ring, stored as a sparse map from monomial
/// keys to nonzero rationals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Coeff {
    terms: BTreeMap<CoeffKey, Rat>,
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::default()
    }

    pub fn one() -> Self {
        Coeff::from_rat(Rat::one())
    }

    pub fn from_rat(q: Rat) -> Self {
        let mut c = Coeff::default();
        if !q.is_zero() {
            c.terms.insert(CoeffKey::unit(), q);
        }
        c
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_rat(Rat::from(BigInt::from(n)))
    }

    /// `q * L^e`.
    pub fn l_monomial(q: Rat, e: i64) -> Self {
        let mut c = Coeff::default();
        if !q.is_zero() {
            c.terms.insert(CoeffKey { l_exp: e, cusp: Vec::new() }, q);
        }
        c
    }

    /// The Lefschetz class `L^e`.
    pub fn lefschetz(e: i64) -> Self {
        Coeff::l_monomial(Rat::one(), e)
    }

    /// The cusp symbol `S_w`; `w` must be even and at least 12.
    pub fn cusp_symbol(w: u32) -> Self {
        assert!(w >= 12 && w % 2 == 0, "cusp symbols have even weight >= 12");
        let mut c = Coeff::default();
        c.terms.insert(CoeffKey { l_exp: 0, cusp: vec![w] }, Rat::one());
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&CoeffKey::unit())
                .map(|q| q.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoeffKey, &Rat)> {
        self.terms.iter()
    }

    /// The rational part (coefficient of `L^0` with no cusp symbols).
    pub fn constant_part(&self) -> Rat {
        self.terms.get(&CoeffKey::unit()).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_cusp_free(&self) -> bool {
        self.terms.keys().all(|k| k.cusp.is_empty())
    }

    /// True when no monomial carries a negative power of `L`.
    pub fn is_polynomial_in_l(&self) -> bool {
        self.terms.keys().all(|k| k.l_exp >= 0)
    }

    /// True when every monomial has at most `d` cusp factors.
    pub fn cusp_degree_at_most(&self, d: usize) -> bool {
        self.terms.keys().all(|k| k.cusp.len() <= d)
    }

    pub fn max_l_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.l_exp).max()
    }

    pub fn min_l_exp(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.l_exp).min()
    }

    fn insert_term(&mut self, key: CoeffKey, q: Rat) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(q);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + q;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (k, q) in &other.terms {
            out.insert_term(k.clone(), q.clone());
        }
        out
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (k, q) in &other.terms {
            out.insert_term(k.clone(), -q.clone());
        }
        out
    }

    pub fn neg(&self) -> Coeff {
        let mut out = Coeff::default();
        for (k, q) in &self.terms {
            out.terms.insert(k.clone(), -q.clone());
        }
        out
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        let mut out = Coeff::default();
        for (ka, qa) in &self.terms {
            for (kb, qb) in &other.terms {
                out.insert_term(ka.mul(kb), qa * qb);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rat) -> Coeff {
        if q.is_zero() {
            return Coeff::zero();
        }
        let mut out = Coeff::default();
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * q);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Coeff {
        let mut base = self.clone();
        let mut acc = Coeff::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse, defined only for units `q * L^e`.
    pub fn try_inverse(&self) -> Option<Coeff> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, q) = self.terms.iter().next().unwrap();
        if !k.cusp.is_empty() {
            return None;
        }
        Some(Coeff::l_monomial(q.recip(), -k.l_exp))
    }

    /// Exact division: returns `self / divisor` when the remainder is
    /// identically zero, and [`Error::NonExactDivision`] otherwise. A
    /// nonzero remainder in the moduli builders signals a transcription
    /// error in a closed formula, so this is a checked operation.
    pub fn div_exact(&self, divisor: &Coeff) -> Result<Coeff> {
        assert!(!divisor.is_zero(), "division of Coeff by zero");
        if self.is_zero() {
            return Ok(Coeff::zero());
        }
        if let Some(inv) = divisor.try_inverse() {
            return Ok(self.mul(&inv));
        }

        // Shift both operands so all L-exponents are nonnegative, then run
        // multivariate long division under graded lex order. Exactness of
        // the Laurent division is equivalent to exactness of the shifted
        // polynomial division.
        let la = self.min_l_exp().unwrap();
        let lb = divisor.min_l_exp().unwrap();

        let mut weights: Vec<u32> = Vec::new();
        for k in self.terms.keys().chain(divisor.terms.keys()) {
            for &w in &k.cusp {
                if !weights.contains(&w) {
                    weights.push(w);
                }
            }
        }
        weights.sort_unstable();

        // Monomial -> exponent vector [l, c_{w1}, c_{w2}, ...], ordered by
        // (total degree, vector) which is a genuine monomial order.
        let encode = |k: &CoeffKey, shift: i64| -> (u64, Vec<u64>) {
            let mut v = Vec::with_capacity(weights.len() + 1);
            v.push((k.l_exp - shift) as u64);
            for w in &weights {
                v.push(k.cusp.iter().filter(|&&x| x == *w).count() as u64);
            }
            (v.iter().sum(), v)
        };
        let decode = |v: &[u64], shift: i64| -> CoeffKey {
            let mut cusp = Vec::new();
            for (i, w) in weights.iter().enumerate() {
                for _ in 0..v[i + 1] {
                    cusp.push(*w);
                }
            }
            CoeffKey { l_exp: v[0] as i64 + shift, cusp }
        };

        let mut rem: BTreeMap<(u64, Vec<u64>), Rat> = BTreeMap::new();
        for (k, q) in &self.terms {
            rem.insert(encode(k, la), q.clone());
        }
        let div: BTreeMap<(u64, Vec<u64>), Rat> = divisor
            .terms
            .iter()
            .map(|(k, q)| (encode(k, lb), q.clone()))
            .collect();
        let (lead_key, lead_coef) = div.iter().next_back().map(|(k, q)| (k.clone(), q.clone())).unwrap();

        // Greedy reduction by the leading term. If the divisor divides
        // exactly, every intermediate remainder is still a multiple of the
        // divisor, so its leading monomial stays divisible by the leading
        // monomial of the divisor; a failed step proves non-exactness.
        let mut quot: BTreeMap<(u64, Vec<u64>), Rat> = BTreeMap::new();
        while let Some((rk, rq)) = rem.iter().next_back().map(|(k, q)| (k.clone(), q.clone())) {
            if rk.1.iter().zip(&lead_key.1).any(|(a, b)| a < b) {
                return Err(Error::NonExactDivision);
            }
            let tk: Vec<u64> = rk.1.iter().zip(&lead_key.1).map(|(a, b)| a - b).collect();
            let tq = &rq / &lead_coef;
            use std::collections::btree_map::Entry;
            for (dk, dq) in &div {
                let pk: Vec<u64> = tk.iter().zip(&dk.1).map(|(a, b)| a + b).collect();
                let key = (pk.iter().sum::<u64>(), pk);
                let val = &tq * dq;
                match rem.entry(key) {
                    Entry::Vacant(e) => {
                        e.insert(-val);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() -= val;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.insert((tk.iter().sum::<u64>(), tk), tq);
        }

        let mut out = Coeff::default();
        for ((_, v), q) in quot {
            out.insert_term(decode(&v, la - lb), q);
        }
        Ok(out)
    }

    /// The Adams operation `psi_m`: ring endomorphism sending `L^a` to
    /// `L^{m a}` and fixing rationals. Undefined on cusp symbols for
    /// `m > 1` (there is no sensible convention), hence the error.
    pub fn adams(&self, m: u32) -> Result<Coeff> {
        assert!(m >= 1, "Adams index must be positive");
        if m == 1 {
            return Ok(self.clone());
        }
        let mut out = Coeff::default();
        for (k, q) in &self.terms {
            if !k.cusp.is_empty() {
                return Err(Error::AdamsOnCuspSymbol);
            }
            out.terms
                .insert(CoeffKey { l_exp: k.l_exp * m as i64, cusp: Vec::new() }, q.clone());
        }
        Ok(out)
    }

    /// Specialize `L -> v` and `S_w -> cusp_values(w)` (missing weights
    /// default to zero). Fails with [`Error::DivideByZero`] when `v = 0`
    /// meets a negative `L`-exponent.
    pub fn eval_l(&self, v: &Rat, cusp_values: &BTreeMap<u32, Rat>) -> Result<Rat> {
        let mut total = Rat::zero();
        for (k, q) in &self.terms {
            let lv = if k.l_exp >= 0 {
                pow_rat(v, k.l_exp as u32)
            } else {
                if v.is_zero() {
                    return Err(Error::DivideByZero);
                }
                pow_rat(&v.recip(), (-k.l_exp) as u32)
            };
            let mut term = q * lv;
            for w in &k.cusp {
                let s = cusp_values.get(w).cloned().unwrap_or_else(Rat::zero);
                term *= s;
            }
            total += term;
        }
        Ok(total)
    }

    /// JSON encoding: an array of `{"L": int, "S": [weights], "q": "num/den"}`
    /// terms, sorted with `L`-powers ascending.
    pub fn to_json(&self) -> serde_json::Value {
        let mut terms: Vec<(&CoeffKey, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(k, _)| (k.l_exp, k.cusp.clone()));
        serde_json::Value::Array(
            terms
                .into_iter()
                .map(|(k, q)| {
                    serde_json::json!({
                        "L": k.l_exp,
                        "S": k.cusp,
                        "q": format!("{}/{}", q.numer(), q.denom()),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Coeff> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("Coeff: expected array".into()))?;
        let mut c = Coeff::default();
        for t in arr {
            let l = t["L"].as_i64().ok_or_else(|| Error::Parse("Coeff: bad L".into()))?;
            let cusp: Vec<u32> = t["S"]
                .as_array()
                .ok_or_else(|| Error::Parse("Coeff: bad S".into()))?
                .iter()
                .map(|x| x.as_u64().map(|u| u as u32).ok_or_else(|| Error::Parse("Coeff: bad weight".into())))
                .collect::<Result<_>>()?;
            let qs = t["q"].as_str().ok_or_else(|| Error::Parse("Coeff: bad q".into()))?;
            let (num, den) = qs
                .split_once('/')
                .ok_or_else(|| Error::Parse("Coeff: q must be num/den".into()))?;
            let num: BigInt = num.parse().map_err(|_| Error::Parse("Coeff: bad numerator".into()))?;
            let den: BigInt = den.parse().map_err(|_| Error::Parse("Coeff: bad denominator".into()))?;
            if den.is_zero() {
                return Err(Error::Parse("Coeff: zero denominator".into()));
            }
            let mut key_cusp = cusp;
            key_cusp.sort_unstable();
            c.insert_term(CoeffKey { l_exp: l, cusp: key_cusp }, Rat::new(num, den));
        }
        Ok(c)
    }
}

fn pow_rat(v: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= v;
    }
    acc
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Display with L-powers descending, cusp-free part first.
        let mut terms: Vec<(&CoeffKey, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(k, _)| (k.cusp.clone(), -k.l_exp));
        let mut first = true;
        for (k, q) in terms {
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
            if !aq.is_one() || (k.l_exp == 0 && k.cusp.is_empty()) {
                factors.push(if aq.is_integer() {
                    format!("{}", aq.numer())
                } else {
                    format!("{}", aq)
                });
            }
            match k.l_exp {
                0 => {}
                1 => factors.push("L".into()),
                e => factors.push(format!("L^{}", e)),
            }
            for w in &k.cusp {
                factors.push(format!("S{}", w));
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> Coeff {
        Coeff::lefschetz(1)
    }

    #[test]
    fn ring_identities() {
        // (L+1)(L-1) = L^2 - 1
        let a = l().add(&Coeff::one());
        let b = l().sub(&Coeff::one());
        let p = a.mul(&b);
        let expect = Coeff::lefschetz(2).sub(&Coeff::one());
        assert_eq!(p, expect);
    }

    #[test]
    fn exact_division() {
        let a = Coeff::lefschetz(3).sub(&l());
        assert!(a.div_exact(&a).unwrap().is_one());

        // (L^2 + 2L + 1) / (L + 1) = L + 1
        let num = Coeff::lefschetz(2)
            .add(&l().scale(&rat(2, 1)))
            .add(&Coeff::one());
        let den = l().add(&Coeff::one());
        assert_eq!(num.div_exact(&den).unwrap(), den);

        // non-exact: (L^2 + 1) / (L + 1)
        let bad = Coeff::lefschetz(2).add(&Coeff::one());
        assert_eq!(bad.div_exact(&den), Err(Error::NonExactDivision));
    }

    #[test]
    fn division_with_laurent_and_cusp_parts() {
        // (L^-1 * S12 * (L^3 - L)) / (L^3 - L) = L^-1 * S12
        let d = Coeff::lefschetz(3).sub(&l());
        let q = Coeff::cusp_symbol(12).mul(&Coeff::lefschetz(-1));
        let n = q.mul(&d);
        assert_eq!(n.div_exact(&d).unwrap(), q);
    }

    #[test]
    fn adams_action() {
        let a = l().add(&Coeff::one());
        let expect = Coeff::lefschetz(2).add(&Coeff::one());
        assert_eq!(a.adams(2).unwrap(), expect);

        let half = Coeff::from_rat(rat(5, 2));
        assert_eq!(half.adams(3).unwrap(), half);

        assert_eq!(Coeff::cusp_symbol(12).adams(2), Err(Error::AdamsOnCuspSymbol));
        // psi_1 leaves cusp symbols alone
        assert_eq!(Coeff::cusp_symbol(12).adams(1).unwrap(), Coeff::cusp_symbol(12));
    }

    #[test]
    fn adams_composition() {
        let c = l().add(&Coeff::from_rat(rat(1, 3))).add(&Coeff::lefschetz(-2));
        let ab = c.adams(2).unwrap().adams(3).unwrap();
        assert_eq!(ab, c.adams(6).unwrap());
        assert_eq!(c.adams(1).unwrap(), c);
    }

    #[test]
    fn eval_specialization() {
        let none = BTreeMap::new();
        // L^2 + 2L + 1 at L = 1 is 4
        let p = Coeff::lefschetz(2).add(&l().scale(&rat(2, 1))).add(&Coeff::one());
        assert_eq!(p.eval_l(&rat(1, 1), &none).unwrap(), rat(4, 1));
        assert_eq!(l().add(&Coeff::one()).eval_l(&rat(1, 1), &none).unwrap(), rat(2, 1));
        assert_eq!(Coeff::from_int(7).eval_l(&rat(1, 1), &none).unwrap(), rat(7, 1));

        // negative exponent at zero
        assert_eq!(
            Coeff::lefschetz(-1).eval_l(&rat(0, 1), &none),
            Err(Error::DivideByZero)
        );

        // eval is multiplicative
        let a = l().add(&Coeff::from_int(2));
        let b = Coeff::lefschetz(-1).add(&Coeff::from_int(3));
        let v = rat(5, 7);
        assert_eq!(
            a.mul(&b).eval_l(&v, &none).unwrap(),
            a.eval_l(&v, &none).unwrap() * b.eval_l(&v, &none).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let c = Coeff::lefschetz(-2)
            .mul(&Coeff::cusp_symbol(12))
            .add(&Coeff::from_rat(rat(-3, 2)))
            .add(&l());
        let j = c.to_json();
        assert_eq!(Coeff::from_json(&j).unwrap(), c);
    }
}
