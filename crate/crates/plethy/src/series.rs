//! Truncated power series over an exact coefficient ring.
//!
//! A `Series<T>` stores coefficients of `x^0 .. x^N` where `N` is the
//! truncation order. Binary operations truncate to the smaller order, so
//! precision loss is always explicit in the type's `order()`.

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::{Coeff, Rat};
use crate::{Error, Result};

/// Coefficient rings usable in series: commutative Q-algebras with an
/// explicit embedding of the rationals. Method names carry a `ring_`
/// prefix to stay clear of `num_traits` and the std operator traits.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn from_rat(q: &Rat) -> Self;
    fn scale_rat(&self, q: &Rat) -> Self;
    /// Multiplicative inverse when the element is a unit.
    fn try_inv(&self) -> Option<Self>;
}

impl Scalar for Rat {
    fn ring_zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn ring_one() -> Self {
        <Rat as One>::one()
    }
    fn ring_is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
    fn scale_rat(&self, q: &Rat) -> Self {
        self * q
    }
    fn try_inv(&self) -> Option<Self> {
        if <Rat as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for Coeff {
    fn ring_zero() -> Self {
        Coeff::zero()
    }
    fn ring_one() -> Self {
        Coeff::one()
    }
    fn ring_is_zero(&self) -> bool {
        Coeff::is_zero(self)
    }
    fn ring_add(&self, other: &Self) -> Self {
        Coeff::add(self, other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        Coeff::sub(self, other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        Coeff::mul(self, other)
    }
    fn ring_neg(&self) -> Self {
        Coeff::neg(self)
    }
    fn from_rat(q: &Rat) -> Self {
        Coeff::from_rat(q.clone())
    }
    fn scale_rat(&self, q: &Rat) -> Self {
        Coeff::scale(self, q)
    }
    fn try_inv(&self) -> Option<Self> {
        Coeff::try_inverse(self)
    }
}

/// Exponential generating series with coefficients in the motivic ring;
/// the image of the rank homomorphism on symmetric functions.
pub type ExpSeries = Series<Coeff>;

/// Series with plain rational coefficients.
pub type RationalSeries = Series<Rat>;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<T: Scalar> {
    c: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// The zero series truncated at order `n` (coefficients of x^0..x^n).
    pub fn zero(n: usize) -> Self {
        Series { c: vec![T::ring_zero(); n + 1] }
    }

    /// The identity series `x`.
    pub fn x(n: usize) -> Self {
        let mut s = Series::zero(n);
        if n >= 1 {
            s.c[1] = T::ring_one();
        }
        s
    }

    pub fn constant(t: T, n: usize) -> Self {
        let mut s = Series::zero(n);
        s.c[0] = t;
        s
    }

    pub fn from_coeffs(c: Vec<T>) -> Self {
        assert!(!c.is_empty());
        Series { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, k: usize) -> T {
        self.c.get(k).cloned().unwrap_or_else(T::ring_zero)
    }

    pub fn set(&mut self, k: usize, t: T) {
        assert!(k <= self.order());
        self.c[k] = t;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|t| t.ring_is_zero())
    }

    pub fn truncated(&self, n: usize) -> Self {
        let mut c = self.c.clone();
        c.truncate(n + 1);
        c.resize(n + 1, T::ring_zero());
        Series { c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series {
            c: (0..=n).map(|k| self.c[k].ring_add(&other.c[k])).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series {
            c: (0..=n).map(|k| self.c[k].ring_sub(&other.c[k])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series { c: self.c.iter().map(|t| t.ring_neg()).collect() }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        Series { c: self.c.iter().map(|t| t.scale_rat(q)).collect() }
    }

    pub fn scale_by(&self, t: &T) -> Self {
        Series { c: self.c.iter().map(|x| x.ring_mul(t)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut c = vec![T::ring_zero(); n + 1];
        for (i, a) in self.c.iter().enumerate().take(n + 1) {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate().take(n + 1 - i) {
                if b.ring_is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].ring_add(&a.ring_mul(b));
            }
        }
        Series { c }
    }

    /// Multiply by `x`, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut c = Vec::with_capacity(self.c.len() + 1);
        c.push(T::ring_zero());
        c.extend_from_slice(&self.c);
        Series { c }
    }

    /// Termwise antiderivative with zero constant term; raises the order.
    pub fn integral(&self) -> Self {
        let mut c = Vec::with_capacity(self.c.len() + 1);
        c.push(T::ring_zero());
        for (k, t) in self.c.iter().enumerate() {
            c.push(t.scale_rat(&Rat::new(1.into(), (k as i64 + 1).into())));
        }
        Series { c }
    }

    /// Formal derivative; the result is only known to order `n - 1`.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series {
            c: (1..=self.order())
                .map(|k| self.c[k].scale_rat(&Rat::from_integer(k.into())))
                .collect(),
        }
    }

    /// Reciprocal `1/self`; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.c[0].try_inv().ok_or(Error::NonUnitLinearTerm)?;
        let n = self.order();
        let mut g = vec![T::ring_zero(); n + 1];
        g[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = T::ring_zero();
            for j in 1..=k {
                if !self.c[j].ring_is_zero() {
                    acc = acc.ring_add(&self.c[j].ring_mul(&g[k - j]));
                }
            }
            g[k] = acc.ring_mul(&inv0).ring_neg();
        }
        Ok(Series { c: g })
    }

    /// `log(1 + u)` for `u` with zero constant term, via the recurrence
    /// from `(1+u) d(log(1+u)) = du`.
    pub fn log1p(&self) -> Result<Self> {
        if !self.c[0].ring_is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut l = vec![T::ring_zero(); n + 1];
        for k in 1..=n {
            // l_k = u_k - (1/k) * sum_{j=1}^{k-1} j * l_j * u_{k-j}
            let mut acc = T::ring_zero();
            for j in 1..k {
                if !l[j].ring_is_zero() && !self.c[k - j].ring_is_zero() {
                    acc = acc
                        .ring_add(&l[j].scale_rat(&Rat::from_integer(j.into())).ring_mul(&self.c[k - j]));
                }
            }
            l[k] = self.c[k].ring_sub(&acc.scale_rat(&Rat::new(1.into(), k.into())));
        }
        Ok(Series { c: l })
    }

    /// `exp(u)` for `u` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.c[0].ring_is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut e = vec![T::ring_zero(); n + 1];
        e[0] = T::ring_one();
        for k in 1..=n {
            // e_k = (1/k) * sum_{j=1}^{k} j * u_j * e_{k-j}
            let mut acc = T::ring_zero();
            for j in 1..=k {
                if !self.c[j].ring_is_zero() && !e[k - j].ring_is_zero() {
                    acc = acc
                        .ring_add(&self.c[j].scale_rat(&Rat::from_integer(j.into())).ring_mul(&e[k - j]));
                }
            }
            e[k] = acc.scale_rat(&Rat::new(1.into(), k.into()));
        }
        Ok(Series { c: e })
    }

    /// Composition `self(g)` for `g` with zero constant term, truncated to
    /// the smaller of the two orders.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let n = self.order().min(g.order());
        self.compose_to(g, n)
    }

    /// Composition evaluated to an explicit order. Coefficients of `g`
    /// beyond `g.order()` are treated as zero, so requesting more than
    /// `g.order()` is only sound when `self` has no terms of low enough
    /// degree to see them (e.g. a zero linear coefficient).
    pub(crate) fn compose_to(&self, g: &Self, n: usize) -> Result<Self> {
        if !g.c[0].ring_is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let g = g.truncated(n);
        let mut acc = Series::zero(n);
        for k in (0..=self.order()).rev() {
            acc = acc.mul(&g);
            let ck = self.coeff(k);
            if !ck.ring_is_zero() {
                acc.c[0] = acc.c[0].ring_add(&ck);
            }
        }
        Ok(acc)
    }

    /// Compositional inverse of `f = x + O(x^2)` with unit linear
    /// coefficient: returns `g` with `f(g(x)) = x` up to the truncation
    /// order. Newton iteration with doubling precision.
    pub fn invert(&self) -> Result<Self> {
        if !self.c[0].ring_is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let lin_inv = self.coeff(1).try_inv().ok_or(Error::NonUnitLinearTerm)?;
        let n = self.order();
        let fp = self.derivative();
        let mut g = Series::x(1).scale_by(&lin_inv);
        let mut m = 1usize;
        while m < n {
            m = (2 * m).min(n);
            // g <- g - (f(g) - x) / f'(g), all mod x^{m+1}
            let gm = g.truncated(m);
            let err = self.compose_to(&gm, m)?.sub(&Series::x(m));
            let denom = fp.compose_to(&gm, m)?;
            g = gm.sub(&err.mul(&denom.recip()?));
        }
        Ok(g.truncated(n))
    }

    /// Evaluate a polynomial with rational coefficients at this series:
    /// `sum_k poly[k] * self^k`.
    pub fn eval_poly(&self, poly: &[Rat]) -> Self {
        let n = self.order();
        let mut acc = Series::zero(n);
        for q in poly.iter().rev() {
            acc = acc.mul(self);
            acc.c[0] = acc.c[0].ring_add(&T::from_rat(q));
        }
        acc
    }
}

impl RationalSeries {
    /// Coefficient times `k!`, the convention for exponential generating
    /// functions.
    pub fn egf_count(&self, k: usize) -> Rat {
        let mut f = Rat::one();
        for j in 2..=k {
            f *= Rat::from_integer(j.into());
        }
        self.coeff(k) * f
    }

    /// The series of `e^x - 1` to order `n`.
    pub fn exp_x_minus_1(n: usize) -> Self {
        let mut c = vec![<Rat as Zero>::zero(); n + 1];
        let mut inv_fact = <Rat as One>::one();
        for (k, ck) in c.iter_mut().enumerate().skip(1) {
            inv_fact /= Rat::from_integer(k.into());
            *ck = inv_fact.clone();
        }
        Series { c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn xs(n: usize) -> RationalSeries {
        Series::x(n)
    }

    fn one_series(n: usize) -> RationalSeries {
        Series::constant(<Rat as One>::one(), n)
    }

    #[test]
    fn mul_and_log_exp_round_trip() {
        let u = xs(8).add(&xs(8).mul(&xs(8)).scale(&rat(3, 1)));
        let round = u.exp().unwrap().sub(&one_series(8)).log1p().unwrap();
        assert_eq!(round, u);
    }

    #[test]
    fn recip_is_inverse() {
        let f = one_series(10).add(&xs(10).scale(&rat(-1, 2)));
        let g = f.recip().unwrap();
        let mut one = Series::zero(10);
        one.set(0, <Rat as One>::one());
        assert_eq!(f.mul(&g), one);
    }

    #[test]
    fn invert_identity_and_catalan() {
        assert_eq!(xs(5).invert().unwrap(), xs(5));

        // invert(x - x^2) = sum of Catalan numbers: x + x^2 + 2x^3 + 5x^4 + 14x^5
        let f = xs(5).sub(&xs(5).mul(&xs(5)));
        let g = f.invert().unwrap();
        let expect = [0i64, 1, 1, 2, 5, 14];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(g.coeff(k), rat(e, 1), "x^{}", k);
        }
        // round trip both ways
        assert_eq!(f.compose(&g).unwrap(), xs(5));
        assert_eq!(g.compose(&f).unwrap(), xs(5));
    }

    #[test]
    fn invert_needs_unit_linear_term() {
        let f = xs(4).scale(&rat(0, 1));
        assert_eq!(f.invert(), Err(Error::NonUnitLinearTerm));
    }

    #[test]
    fn inversion_of_exponential_style_series() {
        // 1 + 2x - e^x expands to x - x^2/2 - x^3/6 - ...; composing with
        // its inverse gives back x.
        let n = 12;
        let f = xs(n).scale(&rat(2, 1)).sub(&RationalSeries::exp_x_minus_1(n));
        let g = f.invert().unwrap();
        assert_eq!(f.compose(&g).unwrap(), xs(n));
    }
}
