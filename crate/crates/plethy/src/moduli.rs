//! Generating functions for the moduli of smooth genus-zero and genus-one
//! curves with marked points, and the pipeline extracting equivariant
//! Serre polynomials of their stable-curve compactifications.
//!
//! The genus-zero characteristic is assembled from the closed product
//! formula over configurations of points on the projective line divided
//! by `L^3 - L` (the class of PGL_2); every division is checked exact.
//! The genus-one characteristic is the residue at the origin of a
//! one-form in an auxiliary variable `omega`; the two geometric factors
//! `1/(1-omega)` and `1/(1-L/omega)` are expanded with both `omega` and
//! `L/omega` small, and their tails are summed in closed form as
//! `L^j/(1-L)` so that no truncation in the `L`-direction is ever needed.
//! The residue telescopes because every exponent in the product vanishes
//! at `omega = L`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::coeff::{Coeff, Rat};
use crate::genus1::{b1, GenusData};
use crate::partition::Partition;
use crate::symf::SymFunc;
use crate::{arith, Error, Result};

/// Dimension of the space of cusp forms of even weight `w >= 12` for the
/// full modular group (external data; only used when specializing cusp
/// symbols in Euler characteristics, and to decide which weights carry a
/// nonzero symbol at all).
pub fn cusp_form_dimension(w: u32) -> u32 {
    assert!(w % 2 == 0 && w >= 4);
    match w {
        4 | 6 | 8 | 10 | 14 => 0,
        12 | 16 | 18 | 20 | 22 => 1,
        24 => 2,
        26 => 1,
        _ => panic!("cusp form dimension table exhausted at weight {}", w),
    }
}

/// The cusp-form Hodge structure of weight `w` as a coefficient: the
/// formal symbol `S_w`, or zero when there are no cusp forms.
fn cusp_structure(w: u32) -> Coeff {
    if cusp_form_dimension(w) == 0 {
        Coeff::zero()
    } else {
        Coeff::cusp_symbol(w)
    }
}

/// Exponent `(1/m) sum_{d|m} mu(m/d) (1 + L^d)` of the genus-zero
/// configuration product.
fn config_exponent(m: u32) -> Coeff {
    let mut acc = Coeff::zero();
    for d in arith::divisors(m) {
        let mu = arith::mobius(m / d);
        if mu == 0 {
            continue;
        }
        let term = Coeff::one().add(&Coeff::lefschetz(d as i64));
        let signed = term.scale(&Rat::new(mu.into(), m.into()));
        acc = acc.add(&signed);
    }
    acc
}

/// Generating characteristic of the moduli of smooth genus-zero curves:
/// the degree-`d` component is the `S_d`-equivariant Serre polynomial of
/// the moduli of `d` marked points, for `3 <= d <= n`.
///
/// Computed as `(prod_m (1+p_m)^{e_m(L)} - 1) / (L^3 - L)` degreewise;
/// degrees one and two of the product are cancelled in closed form by
/// correction terms and are simply discarded, while every division in
/// degrees three and up must be exact.
pub fn build_a0(n: usize) -> Result<SymFunc> {
    assert!(n >= 3, "the genus-zero characteristic starts in degree 3");
    let mut product = SymFunc::one(n);
    for m in 1..=(n as u32) {
        let u = SymFunc::p(m, n).log1p()?;
        let factor = u.scale(&config_exponent(m)).exp()?;
        product = product.mul(&factor);
    }
    let x = product.sub(&SymFunc::one(n));
    let pgl2 = Coeff::lefschetz(3).sub(&Coeff::lefschetz(1));
    let mut a0 = SymFunc::zero(n);
    for d in 3..=(n as u32) {
        a0 = a0.add(&x.degree_part(d).div_coeff_exact(&pgl2)?);
    }
    Ok(a0)
}

/// A Laurent object in the auxiliary residue variable: a finite window of
/// `omega`-exponents with symmetric-function coefficients. Every stored
/// term satisfies `|omega-exponent| <= symmetric degree`, which keeps the
/// window finite under multiplication.
pub struct OmegaSeries {
    trunc: usize,
    coeffs: BTreeMap<i64, SymFunc>,
}

impl OmegaSeries {
    pub fn one(trunc: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(0, SymFunc::one(trunc));
        OmegaSeries { trunc, coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        OmegaSeries { trunc, coeffs: BTreeMap::new() }
    }

    pub fn window(&self) -> (i64, i64) {
        let lo = self.coeffs.keys().next().copied().unwrap_or(0);
        let hi = self.coeffs.keys().next_back().copied().unwrap_or(0);
        (lo, hi)
    }

    pub fn coeff(&self, e: i64) -> SymFunc {
        self.coeffs.get(&e).cloned().unwrap_or_else(|| SymFunc::zero(self.trunc))
    }

    fn insert(&mut self, e: i64, f: SymFunc) -> Result<()> {
        if f.is_zero() {
            return Ok(());
        }
        if e.unsigned_abs() as usize > self.trunc {
            return Err(Error::WindowOverflow);
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(f);
            }
            Entry::Occupied(mut slot) => {
                let s = slot.get().add(&f);
                if s.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &OmegaSeries) -> Result<OmegaSeries> {
        let mut out = OmegaSeries::zero(self.trunc.min(other.trunc));
        for (&e, f) in self.coeffs.iter().chain(other.coeffs.iter()) {
            out.insert(e, f.truncate_to(out.trunc))?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &OmegaSeries) -> Result<OmegaSeries> {
        let mut out = OmegaSeries::zero(self.trunc.min(other.trunc));
        for (&e1, f1) in &self.coeffs {
            for (&e2, f2) in &other.coeffs {
                let prod = f1.mul(f2);
                out.insert(e1 + e2, prod)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for OmegaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OmegaSeries(window {:?}, {} slots)", self.window(), self.coeffs.len())
    }
}

/// The factor `(1 + p_m)^{a_m}` of the genus-one configuration product,
/// where `a_m(omega, L) = (1/m) sum_{d|m} mu(m/d)(1 - omega^d)(1 - (L/omega)^d)`.
fn omega_exp_factor(m: u32, trunc: usize) -> Result<OmegaSeries> {
    // a_m as a sparse omega-polynomial with Coeff coefficients
    let mut a: BTreeMap<i64, Coeff> = BTreeMap::new();
    let mut add_term = |e: i64, c: Coeff| {
        let entry = a.entry(e).or_insert_with(Coeff::zero);
        *entry = entry.add(&c);
    };
    for d in arith::divisors(m) {
        let mu = arith::mobius(m / d);
        if mu == 0 {
            continue;
        }
        let q = Rat::new(mu.into(), m.into());
        // (1 - omega^d)(1 - L^d omega^{-d}) = 1 + L^d - omega^d - L^d omega^{-d}
        add_term(0, Coeff::from_rat(q.clone()));
        add_term(0, Coeff::lefschetz(d as i64).scale(&q));
        add_term(d as i64, Coeff::from_rat(-q.clone()));
        add_term(-(d as i64), Coeff::lefschetz(d as i64).scale(&-q));
    }
    a.retain(|_, c| !c.is_zero());

    let u = SymFunc::p(m, trunc).log1p()?;
    let jmax = trunc / m as usize;
    let mut acc = OmegaSeries::one(trunc);
    let mut a_pow: BTreeMap<i64, Coeff> = BTreeMap::new();
    a_pow.insert(0, Coeff::one());
    let mut u_pow = SymFunc::one(trunc);
    let mut factorial = Rat::from_integer(1.into());
    for j in 1..=jmax {
        let mut next: BTreeMap<i64, Coeff> = BTreeMap::new();
        for (&e1, c1) in &a_pow {
            for (&e2, c2) in &a {
                let entry = next.entry(e1 + e2).or_insert_with(Coeff::zero);
                *entry = entry.add(&c1.mul(c2));
            }
        }
        next.retain(|_, c| !c.is_zero());
        a_pow = next;
        u_pow = u_pow.mul(&u);
        factorial *= Rat::from_integer((j as i64).into());
        // each summand a_m^j u^j / j! has |omega| <= jm <= degree
        let scaled = u_pow.scale_rat(&factorial.recip());
        let mut term = OmegaSeries::zero(trunc);
        for (&e, c) in &a_pow {
            term.insert(e, scaled.scale(c))?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// Generating characteristic of the moduli of smooth genus-one curves:
/// the degree-`d` component is the `S_d`-equivariant Serre polynomial of
/// the moduli of genus-one curves with `d` marked points, `1 <= d <= n`.
/// Coefficients are polynomial in `L` with at most one cusp symbol per
/// term; both facts are asserted after assembly.
pub fn build_a1(n: usize) -> Result<SymFunc> {
    assert!(n >= 1);
    let mut p = OmegaSeries::one(n);
    for m in 1..=(n as u32) {
        p = p.mul(&omega_exp_factor(m, n)?)?;
    }
    // P - 1
    let mut p_minus_1 = p;
    let one = p_minus_1.coeff(0).sub(&SymFunc::one(n));
    p_minus_1.coeffs.remove(&0);
    p_minus_1.insert(0, one)?;

    // [omega^m] of (P-1)/((1-omega)(1-L/omega)): the double geometric sum
    // collapses to sum_a (P-1)_a L^{max(0, a-m)} / (1-L).
    let one_minus_l = Coeff::one().sub(&Coeff::lefschetz(1));
    let q_at = |m: i64| -> Result<SymFunc> {
        let mut t = SymFunc::zero(n);
        for (&a, f) in &p_minus_1.coeffs {
            let e = (a - m).max(0);
            t = t.add(&f.scale(&Coeff::lefschetz(e)));
        }
        t.div_coeff_exact(&one_minus_l)
    };

    // residue against (sum_k ((S_{2k+2}+1)/L^{2k+1}) omega^{2k} - 1)(omega - L/omega)
    let mut a1 = q_at(0)?.scale(&Coeff::lefschetz(1)).sub(&q_at(-2)?);
    let mut k = 1u32;
    loop {
        let lo = -2 * (k as i64) - 2;
        if lo < p_minus_1.window().0 - 2 {
            // beyond the window both Q-terms cancel identically
            break;
        }
        let weight = 2 * k + 2;
        let coeff = Coeff::one().add(&cusp_structure(weight));
        let contribution = q_at(lo)?
            .scale(&Coeff::lefschetz(-2 * (k as i64) - 1))
            .sub(&q_at(-2 * (k as i64))?.scale(&Coeff::lefschetz(-2 * (k as i64))));
        a1 = a1.add(&contribution.scale(&coeff));
        k += 1;
    }

    for (mu, c) in a1.terms() {
        assert!(c.is_polynomial_in_l(), "negative L-power survived in degree {}", mu.weight());
        assert!(
            c.max_l_exp().unwrap_or(0) <= mu.weight() as i64,
            "L-degree exceeds moduli dimension in degree {}",
            mu.weight()
        );
        assert!(c.cusp_degree_at_most(1), "nonlinear cusp term in degree {}", mu.weight());
    }
    assert!(a1.min_degree().map_or(true, |d| d >= 1));
    Ok(a1)
}

/// An `S_n`-equivariant Serre polynomial, grouped by `L`-power with a
/// separate ledger of cusp-symbol terms `S_w * L^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerrePolynomial {
    n: u32,
    by_l: BTreeMap<i64, BTreeMap<Partition, BigInt>>,
    cusp: BTreeMap<u32, BTreeMap<i64, BTreeMap<Partition, BigInt>>>,
}

impl SerrePolynomial {
    fn from_schur_map(n: u32, map: &BTreeMap<Partition, Coeff>) -> Result<SerrePolynomial> {
        let mut by_l: BTreeMap<i64, BTreeMap<Partition, BigInt>> = BTreeMap::new();
        let mut cusp: BTreeMap<u32, BTreeMap<i64, BTreeMap<Partition, BigInt>>> = BTreeMap::new();
        for (lambda, c) in map {
            for (key, q) in c.terms() {
                if !q.is_integer() {
                    return Err(Error::Parse(format!(
                        "non-integral Schur coefficient {} at {}",
                        q, lambda
                    )));
                }
                let int = q.numer().clone();
                match key.cusp.as_slice() {
                    [] => {
                        by_l.entry(key.l_exp)
                            .or_default()
                            .insert(lambda.clone(), int);
                    }
                    [w] => {
                        cusp.entry(*w)
                            .or_default()
                            .entry(key.l_exp)
                            .or_default()
                            .insert(lambda.clone(), int);
                    }
                    _ => {
                        return Err(Error::Parse("cusp term of degree above one".into()));
                    }
                }
            }
        }
        Ok(SerrePolynomial { n, by_l, cusp })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Schur coefficients of `L^l` in the cusp-free part.
    pub fn at_l(&self, l: i64) -> BTreeMap<Partition, BigInt> {
        self.by_l.get(&l).cloned().unwrap_or_default()
    }

    pub fn l_exponents(&self) -> Vec<i64> {
        self.by_l.keys().copied().collect()
    }

    pub fn cusp_weights(&self) -> Vec<u32> {
        self.cusp.keys().copied().collect()
    }

    pub fn cusp_at(&self, w: u32, l: i64) -> BTreeMap<Partition, BigInt> {
        self.cusp
            .get(&w)
            .and_then(|m| m.get(&l))
            .cloned()
            .unwrap_or_default()
    }

    /// Non-equivariant shadow: total dimension coefficients as an element
    /// of the coefficient ring.
    pub fn nonequivariant(&self) -> Coeff {
        let mut acc = Coeff::zero();
        for (&l, schur) in &self.by_l {
            let mut dim = BigInt::zero();
            for (lambda, c) in schur {
                dim += c * lambda.dimension();
            }
            acc = acc.add(&Coeff::l_monomial(Rat::from(dim), l));
        }
        for (&w, by_l) in &self.cusp {
            for (&l, schur) in by_l {
                let mut dim = BigInt::zero();
                for (lambda, c) in schur {
                    dim += c * lambda.dimension();
                }
                acc = acc.add(
                    &Coeff::cusp_symbol(w)
                        .mul(&Coeff::l_monomial(Rat::from(dim), l)),
                );
            }
        }
        acc
    }

    /// Poincare duality check: the cusp-free part must pair `L^k` with
    /// `L^{n-k}` as equal Schur maps, and a cusp term `S_w L^l` pairs with
    /// `S_w L^{n-w+1-l}` (the structure `S_w` is self-dual up to a twist
    /// by `w - 1`).
    pub fn poincare_check(&self) -> bool {
        let n = self.n as i64;
        for (&l, schur) in &self.by_l {
            if self.at_l(n - l) != *schur {
                return false;
            }
        }
        for (&w, by_l) in &self.cusp {
            for (&l, schur) in by_l {
                if self.cusp_at(w, n - w as i64 + 1 - l) != *schur {
                    return false;
                }
            }
        }
        true
    }

    /// JSON: `{"n": .., "by_L": [{"Lexp": .., "schur": [..], "cusp": [..]}]}`
    /// with partitions lexicographic and `L`-powers ascending.
    pub fn to_json(&self) -> serde_json::Value {
        let mut exps: Vec<i64> = self.by_l.keys().copied().collect();
        for by_l in self.cusp.values() {
            for &l in by_l.keys() {
                if !exps.contains(&l) {
                    exps.push(l);
                }
            }
        }
        exps.sort_unstable();
        let rows: Vec<serde_json::Value> = exps
            .into_iter()
            .map(|l| {
                let schur = schur_map_json(&self.at_l(l));
                let cusp: Vec<serde_json::Value> = self
                    .cusp
                    .iter()
                    .filter_map(|(&w, by_l)| {
                        by_l.get(&l).map(|m| {
                            serde_json::json!({"weight": w, "schur": schur_map_json(m)})
                        })
                    })
                    .collect();
                serde_json::json!({"Lexp": l, "schur": schur, "cusp": cusp})
            })
            .collect();
        serde_json::json!({"n": self.n, "by_L": rows})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SerrePolynomial> {
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("Serre: bad n".into()))? as u32;
        let mut by_l = BTreeMap::new();
        let mut cusp: BTreeMap<u32, BTreeMap<i64, BTreeMap<Partition, BigInt>>> = BTreeMap::new();
        for row in v["by_L"].as_array().ok_or_else(|| Error::Parse("Serre: bad by_L".into()))? {
            let l = row["Lexp"].as_i64().ok_or_else(|| Error::Parse("Serre: bad Lexp".into()))?;
            let schur = schur_map_from_json(&row["schur"])?;
            if !schur.is_empty() {
                by_l.insert(l, schur);
            }
            for c in row["cusp"].as_array().unwrap_or(&Vec::new()) {
                let w = c["weight"].as_u64().ok_or_else(|| Error::Parse("Serre: bad weight".into()))? as u32;
                let m = schur_map_from_json(&c["schur"])?;
                if !m.is_empty() {
                    cusp.entry(w).or_default().insert(l, m);
                }
            }
        }
        Ok(SerrePolynomial { n, by_l, cusp })
    }
}

fn schur_map_json(m: &BTreeMap<Partition, BigInt>) -> serde_json::Value {
    serde_json::Value::Array(
        m.iter()
            .map(|(lambda, c)| {
                serde_json::json!({"lambda": lambda.parts(), "c": c.to_string()})
            })
            .collect(),
    )
}

fn schur_map_from_json(v: &serde_json::Value) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for t in v.as_array().ok_or_else(|| Error::Parse("schur: expected array".into()))? {
        let parts: Vec<u32> = t["lambda"]
            .as_array()
            .ok_or_else(|| Error::Parse("schur: bad lambda".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as u32)
                    .ok_or_else(|| Error::Parse("schur: bad part".into()))
            })
            .collect::<Result<_>>()?;
        let c: BigInt = t["c"]
            .as_str()
            .ok_or_else(|| Error::Parse("schur: bad coefficient".into()))?
            .parse()
            .map_err(|_| Error::Parse("schur: unparsable coefficient".into()))?;
        out.insert(Partition::new(parts), c);
    }
    Ok(out)
}

/// The assembled genus-one pipeline: builds the open-moduli
/// characteristics once and serves Serre polynomials of the
/// compactifications for every `n` up to the configured bound.
pub struct SerrePipeline {
    max_n: usize,
    b1: SymFunc,
}

impl SerrePipeline {
    /// Builds the generating function of equivariant Serre polynomials of
    /// compact genus-one moduli, exact in degrees `1..=max_n`. The
    /// genus-zero input is built two degrees higher because the
    /// semi-classical formula differentiates it twice.
    pub fn new(max_n: usize) -> Result<SerrePipeline> {
        assert!(max_n >= 1);
        let a0 = build_a0(max_n + 2)?;
        let a1 = build_a1(max_n)?;
        let data = GenusData::new(a0, a1)?;
        let b = b1(&data)?;
        assert!(b.trunc() >= max_n);
        Ok(SerrePipeline { max_n, b1: b })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// The full generating symmetric function (degrees `1..=max_n`).
    pub fn generating_function(&self) -> &SymFunc {
        &self.b1
    }

    /// The `S_n`-equivariant Serre polynomial of the compact moduli of
    /// genus-one curves with `n` marked points.
    pub fn equivariant(&self, n: u32) -> Result<SerrePolynomial> {
        assert!(n >= 1 && n as usize <= self.max_n);
        let schur = self.b1.degree_part(n).to_schur();
        let sp = SerrePolynomial::from_schur_map(n, &schur)?;
        for &l in sp.by_l.keys() {
            assert!(
                (0..=n as i64).contains(&l),
                "L-exponent {} outside [0, {}]",
                l,
                n
            );
        }
        Ok(sp)
    }

    /// Non-equivariant Serre polynomial: `n!` times the `x^n`-coefficient
    /// of the rank, i.e. the character value at the identity.
    pub fn nonequivariant(&self, n: u32) -> Result<Coeff> {
        assert!(n >= 1 && n as usize <= self.max_n);
        let coeff = self.b1.rk().coeff(n as usize);
        let mut factorial = Rat::from_integer(1.into());
        for k in 2..=n as i64 {
            factorial *= Rat::from_integer(k.into());
        }
        Ok(coeff.scale(&factorial))
    }

    /// Euler characteristic: specialize `L -> 1` and each cusp symbol to
    /// twice the cusp-form dimension (the structures split into a
    /// holomorphic and an antiholomorphic half); the sign is carried by
    /// the polynomial itself.
    pub fn euler_characteristic(&self, n: u32) -> Result<Rat> {
        let ne = self.nonequivariant(n)?;
        let mut cusp_values = BTreeMap::new();
        for (key, _) in ne.terms() {
            for &w in &key.cusp {
                cusp_values
                    .entry(w)
                    .or_insert_with(|| Rat::from_integer((2 * cusp_form_dimension(w) as i64).into()));
            }
        }
        ne.eval_l(&Rat::from_integer(1.into()), &cusp_values)
    }
}

/// One-shot equivariant Serre polynomial (builds a pipeline of exactly
/// the needed size).
pub fn serre_equivariant(n: u32) -> Result<SerrePolynomial> {
    SerrePipeline::new(n as usize)?.equivariant(n)
}

/// One-shot non-equivariant Serre polynomial.
pub fn serre_nonequivariant(n: u32) -> Result<Coeff> {
    SerrePipeline::new(n as usize)?.nonequivariant(n)
}

/// The Schur expansion of the middle cohomology of the compact moduli of
/// genus-one curves with four points: the `L^2`-coefficient of the
/// equivariant Serre polynomial at `n = 4`.
pub fn h4_m14() -> Result<BTreeMap<Partition, BigInt>> {
    Ok(serre_equivariant(4)?.at_l(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn genus_zero_characteristic_low_degrees() {
        let a0 = build_a0(5).unwrap();
        // degree 3 is the class of a point with trivial S_3-action
        assert_eq!(
            a0.degree_part(3).truncate_to(3),
            SymFunc::schur(&pt(&[3]), 3)
        );
        assert!(a0.degree_part(1).is_zero());
        assert!(a0.degree_part(2).is_zero());
        assert!(a0.is_cusp_free());
        // rank of degree 4 at L = 1: the moduli of 4 points on a line is
        // the cross-ratio line P^1 minus {0, 1, oo}, chi = -1
        let r4 = a0.degree_part(4).rk().coeff(4);
        let chi = r4
            .eval_l(&rat(1, 1), &BTreeMap::new())
            .unwrap()
            * rat(24, 1);
        assert_eq!(chi, rat(-1, 1));
    }

    #[test]
    fn genus_one_characteristic_low_degrees() {
        let a1 = build_a1(4).unwrap();
        // degree 1: the coarse moduli of elliptic curves is the affine
        // j-line, Serre polynomial L
        assert_eq!(
            a1.degree_part(1).truncate_to(1),
            SymFunc::p(1, 1).scale(&Coeff::lefschetz(1))
        );
        assert!(a1.is_cusp_free(), "no cusp forms below weight 12");
    }

    #[test]
    fn equivariant_table_small() {
        let pipe = SerrePipeline::new(3).unwrap();
        // n = 1: (L + 1) s_1
        let s1 = pipe.equivariant(1).unwrap();
        assert_eq!(s1.at_l(0)[&pt(&[1])], BigInt::from(1));
        assert_eq!(s1.at_l(1)[&pt(&[1])], BigInt::from(1));
        assert!(s1.poincare_check());

        // n = 2: (L^2 + 2L + 1) s_2
        let s2 = pipe.equivariant(2).unwrap();
        assert_eq!(s2.at_l(1)[&pt(&[2])], BigInt::from(2));
        assert_eq!(s2.at_l(2)[&pt(&[2])], BigInt::from(1));
        assert_eq!(s2.at_l(1).len(), 1);

        // n = 3: (L^3+3L^2+3L+1) s_3 + (L^2+L) s_21
        let s3 = pipe.equivariant(3).unwrap();
        assert_eq!(s3.at_l(1)[&pt(&[3])], BigInt::from(3));
        assert_eq!(s3.at_l(1)[&pt(&[2, 1])], BigInt::from(1));
        assert_eq!(s3.at_l(0).get(&pt(&[2, 1])), None);
        assert!(s3.poincare_check());

        // chi column: 2, 4, 12
        assert_eq!(pipe.euler_characteristic(1).unwrap(), rat(2, 1));
        assert_eq!(pipe.euler_characteristic(2).unwrap(), rat(4, 1));
        assert_eq!(pipe.euler_characteristic(3).unwrap(), rat(12, 1));
    }

    #[test]
    fn nonequivariant_row_four() {
        let pipe = SerrePipeline::new(4).unwrap();
        let ne = pipe.nonequivariant(4).unwrap();
        // L^4 + 12 L^3 + 23 L^2 + 12 L + 1
        let expect = Coeff::lefschetz(4)
            .add(&Coeff::lefschetz(3).scale(&rat(12, 1)))
            .add(&Coeff::lefschetz(2).scale(&rat(23, 1)))
            .add(&Coeff::lefschetz(1).scale(&rat(12, 1)))
            .add(&Coeff::one());
        assert_eq!(ne, expect);
    }

    #[test]
    fn serre_json_round_trip() {
        let sp = serre_equivariant(3).unwrap();
        let j = sp.to_json();
        assert_eq!(SerrePolynomial::from_json(&j).unwrap(), sp);
    }
}
