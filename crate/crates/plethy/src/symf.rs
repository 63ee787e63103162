//! Degree-truncated symmetric functions over the motivic coefficient ring.
//!
//! Storage is the power-sum basis: a sparse map from partitions `mu` to
//! coefficients, the key `mu` standing for `p_mu = p_{mu_1} p_{mu_2} ...`.
//! Every value carries an explicit truncation degree; binary operations
//! land in the smaller truncation, so precision is tracked in the types.
//! The classical bases (`h`, `e`, Schur) are views computed into power
//! sums; plethysm acts by Adams operations on both the inner argument's
//! power sums and its coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{Coeff, Rat};
use crate::partition::{character, Partition};
use crate::series::{ExpSeries, Series};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc {
    trunc: usize,
    terms: BTreeMap<Partition, Coeff>,
}

impl SymFunc {
    pub fn zero(trunc: usize) -> Self {
        SymFunc { trunc, terms: BTreeMap::new() }
    }

    pub fn constant(c: Coeff, trunc: usize) -> Self {
        let mut f = SymFunc::zero(trunc);
        f.insert(Partition::empty(), c);
        f
    }

    pub fn one(trunc: usize) -> Self {
        SymFunc::constant(Coeff::one(), trunc)
    }

    /// The monomial `c * p_mu`.
    pub fn monomial(mu: Partition, c: Coeff, trunc: usize) -> Self {
        let mut f = SymFunc::zero(trunc);
        if mu.weight() as usize <= trunc {
            f.insert(mu, c);
        }
        f
    }

    /// The power sum `p_k`.
    pub fn p(k: u32, trunc: usize) -> Self {
        SymFunc::monomial(Partition::row(k), Coeff::one(), trunc)
    }

    /// `p_mu` for a partition.
    pub fn p_mu(mu: &Partition, trunc: usize) -> Self {
        SymFunc::monomial(mu.clone(), Coeff::one(), trunc)
    }

    /// Complete homogeneous `h_n`, via Newton's recurrence
    /// `n h_n = sum_{i=1}^{n} p_i h_{n-i}`.
    pub fn h(n: u32, trunc: usize) -> Self {
        let mut hs: Vec<SymFunc> = vec![SymFunc::one(trunc)];
        for m in 1..=n {
            let mut acc = SymFunc::zero(trunc);
            for i in 1..=m {
                acc = acc.add(&SymFunc::p(i, trunc).mul(&hs[(m - i) as usize]));
            }
            hs.push(acc.scale_rat(&Rat::new(1.into(), m.into())));
        }
        hs.pop().unwrap()
    }

    /// Elementary `e_n`, via `n e_n = sum_{i=1}^{n} (-1)^{i-1} p_i e_{n-i}`.
    pub fn e(n: u32, trunc: usize) -> Self {
        let mut es: Vec<SymFunc> = vec![SymFunc::one(trunc)];
        for m in 1..=n {
            let mut acc = SymFunc::zero(trunc);
            for i in 1..=m {
                let t = SymFunc::p(i, trunc).mul(&es[(m - i) as usize]);
                acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
            }
            es.push(acc.scale_rat(&Rat::new(1.into(), m.into())));
        }
        es.pop().unwrap()
    }

    /// Product `h_lambda = h_{lambda_1} h_{lambda_2} ...`.
    pub fn h_prod(lambda: &Partition, trunc: usize) -> Self {
        lambda
            .parts()
            .iter()
            .fold(SymFunc::one(trunc), |acc, &p| acc.mul(&SymFunc::h(p, trunc)))
    }

    /// Product `e_lambda`.
    pub fn e_prod(lambda: &Partition, trunc: usize) -> Self {
        lambda
            .parts()
            .iter()
            .fold(SymFunc::one(trunc), |acc, &p| acc.mul(&SymFunc::e(p, trunc)))
    }

    /// Schur function `s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu`.
    pub fn schur(lambda: &Partition, trunc: usize) -> Self {
        let mut f = SymFunc::zero(trunc);
        if lambda.weight() as usize > trunc {
            return f;
        }
        for mu in Partition::all(lambda.weight()) {
            let chi = character(lambda, &mu);
            if num_traits::Zero::is_zero(&chi) {
                continue;
            }
            f.insert(mu.clone(), Coeff::from_rat(Rat::new(chi, mu.z())));
        }
        f
    }

    /// Sum `h_from + ... + h_to`.
    pub fn h_sum(from: u32, to: u32, trunc: usize) -> Self {
        let mut acc = SymFunc::zero(trunc);
        for n in from..=to {
            acc = acc.add(&SymFunc::h(n, trunc));
        }
        acc
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mu: &Partition) -> Coeff {
        self.terms.get(mu).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Partition::empty())
    }

    pub fn is_cusp_free(&self) -> bool {
        self.terms.values().all(|c| c.is_cusp_free())
    }

    /// Smallest weight of a stored term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight()).max()
    }

    fn insert(&mut self, mu: Partition, c: Coeff) {
        if c.is_zero() || mu.weight() as usize > self.trunc {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Re-truncate; `n` below the current truncation drops terms.
    pub fn truncate_to(&self, n: usize) -> SymFunc {
        let mut f = SymFunc::zero(n);
        for (mu, c) in &self.terms {
            if mu.weight() as usize <= n {
                f.terms.insert(mu.clone(), c.clone());
            }
        }
        f
    }

    /// The degree-`d` homogeneous component (same truncation).
    pub fn degree_part(&self, d: u32) -> SymFunc {
        let mut f = SymFunc::zero(self.trunc);
        for (mu, c) in &self.terms {
            if mu.weight() == d {
                f.terms.insert(mu.clone(), c.clone());
            }
        }
        f
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let n = self.trunc.min(other.trunc);
        let mut f = self.truncate_to(n);
        for (mu, c) in &other.terms {
            f.insert(mu.clone(), c.clone());
        }
        f
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        let n = self.trunc.min(other.trunc);
        let mut f = self.truncate_to(n);
        for (mu, c) in &other.terms {
            f.insert(mu.clone(), c.neg());
        }
        f
    }

    pub fn neg(&self) -> SymFunc {
        let mut f = SymFunc::zero(self.trunc);
        for (mu, c) in &self.terms {
            f.terms.insert(mu.clone(), c.neg());
        }
        f
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let n = self.trunc.min(other.trunc);
        let mut f = SymFunc::zero(n);
        for (mua, ca) in &self.terms {
            let wa = mua.weight() as usize;
            if wa > n {
                continue;
            }
            for (mub, cb) in &other.terms {
                if wa + mub.weight() as usize > n {
                    continue;
                }
                f.insert(mua.union(mub), ca.mul(cb));
            }
        }
        f
    }

    pub fn scale(&self, c: &Coeff) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.trunc);
        }
        let mut f = SymFunc::zero(self.trunc);
        for (mu, v) in &self.terms {
            f.insert(mu.clone(), v.mul(c));
        }
        f
    }

    pub fn scale_rat(&self, q: &Rat) -> SymFunc {
        self.scale(&Coeff::from_rat(q.clone()))
    }

    /// Multiply by the power sum `p_k`. Degrees rise by `k` uniformly, so
    /// the result stays valid `k` beyond the current truncation.
    pub fn mul_p(&self, k: u32) -> SymFunc {
        let mut f = SymFunc::zero(self.trunc + k as usize);
        for (mu, c) in &self.terms {
            f.terms.insert(mu.with_part(k), c.clone());
        }
        f
    }

    /// Divide every coefficient by `d`, requiring exactness.
    pub fn div_coeff_exact(&self, d: &Coeff) -> Result<SymFunc> {
        let mut f = SymFunc::zero(self.trunc);
        for (mu, c) in &self.terms {
            f.terms.insert(mu.clone(), c.div_exact(d)?);
        }
        Ok(f)
    }

    /// The Adams operation `psi_m`: `p_k -> p_{mk}` on indices and
    /// `L -> L^m` on coefficients. Degrees multiply by `m`, so the result
    /// is valid to truncation `m * trunc`.
    pub fn adams(&self, m: u32) -> Result<SymFunc> {
        assert!(m >= 1, "Adams index must be positive");
        if m == 1 {
            return Ok(self.clone());
        }
        let mut f = SymFunc::zero(self.trunc * m as usize);
        for (mu, c) in &self.terms {
            f.terms.insert(mu.scaled(m), c.adams(m)?);
        }
        Ok(f)
    }

    /// Formal partial derivative in `p_k`.
    pub fn d_p(&self, k: u32) -> SymFunc {
        let mut f = SymFunc::zero(self.trunc.saturating_sub(k as usize));
        for (mu, c) in &self.terms {
            let m = mu.parts().iter().filter(|&&p| p == k).count();
            if m == 0 {
                continue;
            }
            let reduced = mu.without_part(k).unwrap();
            f.insert(reduced, c.scale(&Rat::from_integer(m.into())));
        }
        f
    }

    /// `f' = df/dp_1`.
    pub fn d_p1(&self) -> SymFunc {
        self.d_p(1)
    }

    /// `df/dp_2`.
    pub fn d_p2(&self) -> SymFunc {
        self.d_p(2)
    }

    /// Plethysm `self o g`: on a monomial `c * p_mu` this is
    /// `c * prod_i psi_{mu_i}(g)`, extended linearly; outer coefficients
    /// are untouched while the inner argument picks up Adams operations.
    ///
    /// Requires `g` with zero constant term. `g` must be cusp-free unless
    /// `self` is a polynomial in `p_1` alone (Adams operations of index
    /// one are harmless).
    ///
    /// Truncation: the degree-`N` part of `f o g` involves `g`'s degree-`N`
    /// component only through a linear `p_1` term of `f`, so in its absence
    /// the result is valid one degree beyond `g`'s truncation.
    pub fn plethysm(&self, g: &SymFunc) -> Result<SymFunc> {
        if !g.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if !g.is_cusp_free() {
            let pure_p1 = self.terms.keys().all(|mu| mu.parts().iter().all(|&p| p == 1));
            if !pure_p1 {
                return Err(Error::AdamsOnCuspSymbol);
            }
        }
        let has_linear_p1 = self.terms.contains_key(&Partition::row(1));
        let n_out = if has_linear_p1 {
            self.trunc.min(g.trunc)
        } else {
            self.trunc.min(g.trunc + 1)
        };

        let mut adams_cache: BTreeMap<u32, SymFunc> = BTreeMap::new();
        for mu in self.terms.keys() {
            for &p in mu.parts() {
                if !adams_cache.contains_key(&p) {
                    adams_cache.insert(p, g.adams(p)?.truncate_to(n_out));
                }
            }
        }

        // Products of Adams images, shared across monomials by stripping
        // the largest part.
        fn product(
            mu: &Partition,
            adams_cache: &BTreeMap<u32, SymFunc>,
            prod_cache: &mut BTreeMap<Partition, SymFunc>,
        ) -> SymFunc {
            if let Some(f) = prod_cache.get(mu) {
                return f.clone();
            }
            let largest = mu.parts()[0];
            let tail = Partition::new(mu.parts()[1..].to_vec());
            let tail_prod = product(&tail, adams_cache, prod_cache);
            let f = tail_prod.mul(&adams_cache[&largest]);
            prod_cache.insert(mu.clone(), f.clone());
            f
        }
        let mut prod_cache: BTreeMap<Partition, SymFunc> = BTreeMap::new();
        prod_cache.insert(Partition::empty(), SymFunc::one(n_out));

        let mut out = SymFunc::zero(n_out);
        for (mu, c) in &self.terms {
            if mu.weight() as usize > n_out {
                continue;
            }
            let prod = product(mu, &adams_cache, &mut prod_cache);
            out = out.add(&prod.scale(c));
        }
        Ok(out)
    }

    /// `log(1 + u)` for `u` with zero constant term.
    pub fn log1p(&self) -> Result<SymFunc> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.trunc;
        let mut acc = SymFunc::zero(n);
        let mut power = SymFunc::one(n);
        let min_deg = match self.min_degree() {
            Some(d) => d.max(1) as usize,
            None => return Ok(acc),
        };
        let kmax = (n / min_deg).max(1);
        for k in 1..=kmax {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale_rat(&Rat::new(sign.into(), k.into())));
        }
        Ok(acc)
    }

    /// Plain exponential sum `sum_k u^k / k!` for `u` with zero constant
    /// term.
    pub fn exp(&self) -> Result<SymFunc> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.trunc;
        let mut acc = SymFunc::one(n);
        let mut power = SymFunc::one(n);
        let mut factorial = Rat::from_integer(1.into());
        let min_deg = match self.min_degree() {
            Some(d) => d.max(1) as usize,
            None => return Ok(acc),
        };
        let kmax = (n / min_deg).max(1);
        for k in 1..=kmax {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            factorial *= Rat::from_integer(k.into());
            acc = acc.add(&power.scale_rat(&factorial.recip()));
        }
        Ok(acc)
    }

    /// The rank homomorphism: `p_1 -> x`, `p_k -> 0` for `k > 1`; sends
    /// `h_n` to `x^n / n!`.
    pub fn rk(&self) -> ExpSeries {
        let mut s = Series::zero(self.trunc);
        for (mu, c) in &self.terms {
            if mu.parts().iter().all(|&p| p == 1) {
                s.set(mu.len(), c.clone());
            }
        }
        s
    }

    /// Expand into the Schur basis: the coefficient of `s_lambda` is
    /// `sum_mu c_mu chi^lambda(mu)` over partitions `mu` of `|lambda|`.
    pub fn to_schur(&self) -> BTreeMap<Partition, Coeff> {
        let mut by_degree: BTreeMap<u32, Vec<(&Partition, &Coeff)>> = BTreeMap::new();
        for (mu, c) in &self.terms {
            by_degree.entry(mu.weight()).or_default().push((mu, c));
        }
        let mut out = BTreeMap::new();
        for (d, terms) in by_degree {
            for lambda in Partition::all(d) {
                let mut acc = Coeff::zero();
                for (mu, c) in &terms {
                    let chi = character(&lambda, mu);
                    if !num_traits::Zero::is_zero(&chi) {
                        acc = acc.add(&c.scale(&Rat::from(chi)));
                    }
                }
                if !acc.is_zero() {
                    out.insert(lambda, acc);
                }
            }
        }
        out
    }

    /// Reassemble from a Schur expansion.
    pub fn from_schur(map: &BTreeMap<Partition, Coeff>, trunc: usize) -> SymFunc {
        let mut acc = SymFunc::zero(trunc);
        for (lambda, c) in map {
            acc = acc.add(&SymFunc::schur(lambda, trunc).scale(c));
        }
        acc
    }

    /// JSON encoding `{"N": trunc, "terms": [{"mu": [...], "c": ...}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.trunc,
            "terms": self
                .terms
                .iter()
                .map(|(mu, c)| serde_json::json!({"mu": mu.parts(), "c": c.to_json()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SymFunc> {
        let n = v["N"].as_u64().ok_or_else(|| Error::Parse("SymFunc: bad N".into()))? as usize;
        let mut f = SymFunc::zero(n);
        let terms = v["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("SymFunc: bad terms".into()))?;
        for t in terms {
            let mu: Vec<u32> = t["mu"]
                .as_array()
                .ok_or_else(|| Error::Parse("SymFunc: bad mu".into()))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as u32)
                        .ok_or_else(|| Error::Parse("SymFunc: bad part".into()))
                })
                .collect::<Result<_>>()?;
            f.insert(Partition::new(mu), Coeff::from_json(&t["c"])?);
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut items: Vec<(&Partition, &Coeff)> = self.terms.iter().collect();
        items.sort_by_key(|(mu, _)| (mu.weight(), (*mu).clone()));
        let mut first = true;
        for (mu, c) in items {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = format!("{}", c);
            let needs_parens = cs.contains('+') || cs.contains(" - ") || cs.starts_with('-');
            if mu.is_empty() {
                write!(f, "{}", cs)?;
                continue;
            }
            let mono: Vec<String> = mu
                .multiplicities()
                .iter()
                .rev()
                .map(|(&p, &m)| if m == 1 { format!("p{}", p) } else { format!("p{}^{}", p, m) })
                .collect();
            if cs == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else if needs_parens {
                write!(f, "({})*{}", cs, mono.join("*"))?;
            } else {
                write!(f, "{}*{}", cs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn classical_bases() {
        // h2 = (p1^2 + p2)/2, e2 = (p1^2 - p2)/2
        let h2 = SymFunc::h(2, 4);
        assert_eq!(h2.coefficient(&pt(&[1, 1])), Coeff::from_rat(rat(1, 2)));
        assert_eq!(h2.coefficient(&pt(&[2])), Coeff::from_rat(rat(1, 2)));
        let e2 = SymFunc::e(2, 4);
        assert_eq!(e2.coefficient(&pt(&[2])), Coeff::from_rat(rat(-1, 2)));
        // s21 = (p1^3 - p3)/3
        let s21 = SymFunc::schur(&pt(&[2, 1]), 4);
        assert_eq!(s21.coefficient(&pt(&[1, 1, 1])), Coeff::from_rat(rat(1, 3)));
        assert_eq!(s21.coefficient(&pt(&[2, 1])), Coeff::zero());
        assert_eq!(s21.coefficient(&pt(&[3])), Coeff::from_rat(rat(-1, 3)));
        // h2 = s2
        assert_eq!(h2, SymFunc::schur(&pt(&[2]), 4));
    }

    #[test]
    fn product_and_truncation() {
        let p1 = SymFunc::p(1, 4);
        assert_eq!(p1.mul(&p1).coefficient(&pt(&[1, 1])), Coeff::one());
        // truncation kills overflowing degrees
        let p2 = SymFunc::p(2, 2);
        assert!(p2.mul(&SymFunc::p(1, 2)).is_zero());
        // p2 + 0 = p2
        assert_eq!(p2.add(&SymFunc::zero(2)), p2);
    }

    #[test]
    fn adams_on_power_sums() {
        let p1 = SymFunc::p(1, 4);
        assert_eq!(p1.adams(2).unwrap().truncate_to(4), SymFunc::p(2, 4));
        // adams(2, L p1) = L^2 p2
        let lp1 = p1.scale(&Coeff::lefschetz(1));
        let expect = SymFunc::p(2, 8).scale(&Coeff::lefschetz(2));
        assert_eq!(lp1.adams(2).unwrap(), expect);
        // adams(3, p1 + p2) = p3 + p6
        let f = SymFunc::p(1, 2).add(&SymFunc::p(2, 2));
        let a = f.adams(3).unwrap();
        assert_eq!(a.coefficient(&pt(&[3])), Coeff::one());
        assert_eq!(a.coefficient(&pt(&[6])), Coeff::one());
    }

    #[test]
    fn derivatives() {
        let e2 = SymFunc::e(2, 4);
        assert_eq!(e2.d_p1(), SymFunc::p(1, 3));
        assert_eq!(e2.d_p2(), SymFunc::constant(Coeff::from_rat(rat(-1, 2)), 2));
        // d_p1 h_n = h_{n-1}
        for n in 1..=8u32 {
            assert_eq!(SymFunc::h(n, 9).d_p1(), SymFunc::h(n - 1, 8));
        }
    }

    #[test]
    fn plethysm_basics() {
        // p2 o (L p1) = L^2 p2
        let g = SymFunc::p(1, 4).scale(&Coeff::lefschetz(1));
        let f = SymFunc::p(2, 4);
        let expect = SymFunc::p(2, 4).scale(&Coeff::lefschetz(2));
        assert_eq!(f.plethysm(&g).unwrap(), expect);

        // f o p1 = f
        let any = SymFunc::h(3, 6).add(&SymFunc::e(2, 6).scale(&Coeff::lefschetz(-1)));
        assert_eq!(any.plethysm(&SymFunc::p(1, 6)).unwrap().truncate_to(6), any);

        // h2 o (p1 + p2) at trunc 4 = (p1^2 + 2 p1 p2 + p2^2 + p2 + p4)/2
        let h2 = SymFunc::h(2, 4);
        let inner = SymFunc::p(1, 4).add(&SymFunc::p(2, 4));
        let out = h2.plethysm(&inner).unwrap().truncate_to(4);
        let half = Coeff::from_rat(rat(1, 2));
        assert_eq!(out.coefficient(&pt(&[1, 1])), half);
        assert_eq!(out.coefficient(&pt(&[2, 1])), Coeff::one());
        assert_eq!(out.coefficient(&pt(&[2, 2])), half);
        assert_eq!(out.coefficient(&pt(&[2])), half);
        assert_eq!(out.coefficient(&pt(&[4])), half);
    }

    #[test]
    fn plethysm_guards() {
        let f = SymFunc::p(2, 4);
        let bad = SymFunc::one(4);
        assert_eq!(f.plethysm(&bad), Err(Error::NonzeroConstantTerm));

        let cuspy = SymFunc::p(1, 4).scale(&Coeff::cusp_symbol(12));
        assert_eq!(f.plethysm(&cuspy), Err(Error::AdamsOnCuspSymbol));
        // but a pure p1 outer function composes with cusp-bearing g
        let lin = SymFunc::p(1, 4).mul(&SymFunc::p(1, 4));
        assert!(lin.plethysm(&cuspy).is_ok());
    }

    #[test]
    fn plethysm_is_ring_homomorphism_in_f() {
        let g = SymFunc::p(1, 6)
            .scale(&Coeff::lefschetz(1))
            .add(&SymFunc::p(2, 6).scale_rat(&rat(1, 2)));
        let f1 = SymFunc::h(2, 6);
        let f2 = SymFunc::p(3, 6).add(&SymFunc::p(1, 6));
        let lhs = f1.mul(&f2).plethysm(&g).unwrap();
        let rhs = f1.plethysm(&g).unwrap().mul(&f2.plethysm(&g).unwrap());
        assert_eq!(lhs, rhs);
        // p_m o g = psi_m(g)
        assert_eq!(
            SymFunc::p(3, 6).plethysm(&g).unwrap(),
            g.adams(3).unwrap().truncate_to(6)
        );
    }

    #[test]
    fn log_exp_round_trip() {
        let u = SymFunc::p(1, 4).add(&SymFunc::p(2, 4));
        let back = u.exp().unwrap().sub(&SymFunc::one(4)).log1p().unwrap();
        assert_eq!(back, u);
        assert!(SymFunc::zero(4).log1p().unwrap().is_zero());
        // log1p(p1) = p1 - p1^2/2 + p1^3/3 at trunc 3
        let l = SymFunc::p(1, 3).log1p().unwrap();
        assert_eq!(l.coefficient(&pt(&[1])), Coeff::one());
        assert_eq!(l.coefficient(&pt(&[1, 1])), Coeff::from_rat(rat(-1, 2)));
        assert_eq!(l.coefficient(&pt(&[1, 1, 1])), Coeff::from_rat(rat(1, 3)));
    }

    #[test]
    fn rank_homomorphism() {
        // rk(h3) = x^3/6
        let r = SymFunc::h(3, 5).rk();
        assert_eq!(r.coeff(3), Coeff::from_rat(rat(1, 6)));
        assert_eq!(r.coeff(2), Coeff::zero());
        assert!(SymFunc::p(2, 4).rk().is_zero());
        // rk(e2) = x^2/2
        assert_eq!(SymFunc::e(2, 4).rk().coeff(2), Coeff::from_rat(rat(1, 2)));
    }

    #[test]
    fn rk_intertwines_plethysm_and_composition() {
        let f = SymFunc::h(3, 6).add(&SymFunc::h(2, 6).scale(&Coeff::lefschetz(1)));
        let g = SymFunc::h(2, 6).add(&SymFunc::p(2, 6).scale_rat(&rat(1, 3)));
        let lhs = f.plethysm(&g).unwrap().rk().truncated(6);
        let rhs = f.rk().compose(&g.rk()).unwrap().truncated(6);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_round_trips() {
        // to_schur(h2) = {(2): 1}
        let m = SymFunc::h(2, 4).to_schur();
        assert_eq!(m.len(), 1);
        assert_eq!(m[&pt(&[2])], Coeff::one());
        // to_schur(p1^2) = {(2): 1, (1,1): 1}
        let m = SymFunc::p(1, 4).mul(&SymFunc::p(1, 4)).to_schur();
        assert_eq!(m[&pt(&[2])], Coeff::one());
        assert_eq!(m[&pt(&[1, 1])], Coeff::one());

        // to_schur(schur(lambda)) = {lambda: 1} for all |lambda| <= 8
        for d in 1..=8u32 {
            for lambda in Partition::all(d) {
                let m = SymFunc::schur(&lambda, 8).to_schur();
                assert_eq!(m.len(), 1, "{}", lambda);
                assert_eq!(m[&lambda], Coeff::one());
            }
        }
    }

    #[test]
    fn schur_reassembly() {
        let f = SymFunc::h(3, 6)
            .mul(&SymFunc::p(2, 6))
            .add(&SymFunc::e(4, 6).scale(&Coeff::lefschetz(2)))
            .add(&SymFunc::p(1, 6).scale_rat(&rat(-7, 3)));
        let back = SymFunc::from_schur(&f.to_schur(), 6);
        assert_eq!(back, f);
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::h(3, 5)
            .scale(&Coeff::lefschetz(-1))
            .add(&SymFunc::p(2, 5).scale(&Coeff::cusp_symbol(12)));
        let j = f.to_json();
        assert_eq!(SymFunc::from_json(&j).unwrap(), f);
    }
}
