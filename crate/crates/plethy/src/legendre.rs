//! Legendre transforms.
//!
//! The scalar transform is the involution of `x^2/2 + x^3 R[[x]]`
//! characterized by `(Lf) o f' + f = x f'`; it is computed through the
//! compositional inverse of `f'`. The symmetric-function transform is the
//! involution of the class `Lambda_*` (everything with rank `x^2/2 +
//! O(x^3)`) characterized by `(Lf) o f' + f = p_1 f'`, computed by a
//! degree-by-degree solution of `f' o (Lf)' = h_1` followed by
//! `Lf = p_1 g' - f o g'`. The rank homomorphism intertwines the two.

use crate::coeff::Rat;
use crate::series::{Scalar, Series};
use crate::symf::SymFunc;
use crate::{Error, Result};

/// Compositional inverse of `f = x + O(x^2)` (unit linear coefficient):
/// the series `g` with `f(g(x)) = x` modulo `x^{N+1}`.
pub fn invert_series<T: Scalar>(f: &Series<T>) -> Result<Series<T>> {
    f.invert()
}

/// Legendre transform of a series `f = x^2/2 + O(x^3)`.
///
/// With `u` the compositional inverse of `f'`, the transform is
/// `g(x) = x u(x) - f(u(x))`; it satisfies `g' o f' = x` and the defining
/// identity `g o f' + f = x f'`.
pub fn legendre_scalar<T: Scalar>(f: &Series<T>) -> Result<Series<T>> {
    let n = f.order();
    if n < 2
        || !f.coeff(0).ring_is_zero()
        || !f.coeff(1).ring_is_zero()
        || f.coeff(2) != T::from_rat(&Rat::new(1.into(), 2.into()))
    {
        return Err(Error::WrongLeadingTerm);
    }
    let u = f.derivative().invert()?;
    // f has no linear term, so composing to order n only needs u to n-1.
    let fu = f.compose_to(&u, n)?;
    Ok(u.shift_up().sub(&fu))
}

/// Membership test for the domain `Lambda_*`: zero constant and degree-one
/// parts, and `p_1^2`-coefficient exactly 1/2 (the `p_2`-coefficient in
/// degree two is unconstrained).
pub fn in_lambda_star(f: &SymFunc) -> bool {
    use crate::partition::Partition;
    let half = crate::coeff::Coeff::from_rat(Rat::new(1.into(), 2.into()));
    f.trunc() >= 2
        && f.constant_term().is_zero()
        && f.degree_part(1).is_zero()
        && f.coefficient(&Partition::new(vec![1, 1])) == half
}

/// Legendre transform of `f` in `Lambda_*`.
///
/// Step one solves `f' o g' = h_1` for `g'` degree by degree: writing
/// `f' = p_1 + t` with `t` supported in degrees two and up, the degree-`d`
/// component of `g'` is minus the degree-`d` component of `t o g'`, which
/// only involves lower-degree components of `g'`. Step two recovers
/// `g = p_1 g' - f o g'`; no integration step is needed.
pub fn legendre_sym(f: &SymFunc) -> Result<SymFunc> {
    if !in_lambda_star(f) {
        return Err(Error::NotInLambdaStar);
    }
    let n = f.trunc();
    let tail = {
        let fp = f.d_p1();
        fp.sub(&SymFunc::p(1, n - 1))
    };
    debug_assert!(tail.min_degree().map_or(true, |d| d >= 2));

    let mut gp = SymFunc::p(1, n.saturating_sub(1).max(1));
    for d in 2..n as u32 {
        let comp = tail
            .truncate_to(d as usize)
            .plethysm(&gp.truncate_to(d as usize - 1))?;
        gp = gp.sub(&comp.degree_part(d).truncate_to(n - 1));
    }

    let fg = f.plethysm(&gp)?; // no linear p_1 term in f, valid to degree n
    Ok(gp.mul_p(1).truncate_to(n).sub(&fg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Coeff};
    use crate::partition::Partition;
    use crate::series::RationalSeries;
    use crate::vpoly::VPoly;

    fn half_x2(n: usize) -> RationalSeries {
        let x = RationalSeries::x(n);
        x.mul(&x).scale(&rat(1, 2))
    }

    #[test]
    fn scalar_fixed_point() {
        let f = half_x2(6);
        assert_eq!(legendre_scalar(&f).unwrap(), f);
    }

    #[test]
    fn scalar_rejects_wrong_leading_term() {
        let x = RationalSeries::x(5);
        assert_eq!(legendre_scalar(&x), Err(Error::WrongLeadingTerm));
        let f = half_x2(5).add(&RationalSeries::x(5));
        assert_eq!(legendre_scalar(&f), Err(Error::WrongLeadingTerm));
    }

    #[test]
    fn scalar_symbolic_tree_counts() {
        // f = x^2/2 - sum v_{0,n} x^n/n!; the transform is x^2/2 plus the
        // generating function of trees weighted by 1/|Aut|.
        let n = 6;
        let mut a0 = Series::<VPoly>::zero(n);
        let mut fact = Rat::from_integer(2.into());
        for k in 3..=n {
            fact *= Rat::from_integer((k as i64).into());
            a0 = a0.add(&monomial_series(k, n, &fact.recip()));
        }
        let x2 = Series::<VPoly>::x(n).mul(&Series::x(n)).scale(&rat(1, 2));
        let f = x2.sub(&a0);
        let g = legendre_scalar(&f).unwrap();

        // coefficient of x^4 times 4! is v_{0,4} + 3 v_{0,3}^2
        let c4 = g.coeff(4).scale_rat(&Rat::from_integer(24.into()));
        assert_eq!(c4.coefficient(&[(0, 4)]), rat(1, 1));
        assert_eq!(c4.coefficient(&[(0, 3), (0, 3)]), rat(3, 1));

        // involution
        let back = legendre_scalar(&g).unwrap();
        assert_eq!(back, f);
    }

    fn monomial_series(k: usize, n: usize, q: &Rat) -> Series<VPoly> {
        let mut s = Series::<VPoly>::zero(n);
        s.set(k, VPoly::var(0, k as u32).scale_rat(q));
        s
    }

    #[test]
    fn sym_base_cases() {
        // L(e2) = h2 and back
        let e2 = SymFunc::e(2, 6);
        let h2 = SymFunc::h(2, 6);
        assert_eq!(legendre_sym(&e2).unwrap(), h2);
        assert_eq!(legendre_sym(&h2).unwrap(), e2);
    }

    #[test]
    fn sym_rejects_non_lambda_star() {
        assert_eq!(legendre_sym(&SymFunc::p(2, 4)), Err(Error::NotInLambdaStar));
        let f = SymFunc::e(2, 4).add(&SymFunc::p(1, 4));
        assert_eq!(legendre_sym(&f), Err(Error::NotInLambdaStar));
    }

    #[test]
    fn sym_defining_identity_and_rank_shadow() {
        // f = e2 - h3 - h4: a small cusp-free element of Lambda_*
        let n = 6;
        let f = SymFunc::e(2, n)
            .sub(&SymFunc::h(3, n))
            .sub(&SymFunc::h(4, n))
            .sub(&SymFunc::p(3, n).scale(&Coeff::lefschetz(1)).scale_rat(&rat(1, 3)));
        let g = legendre_sym(&f).unwrap();

        // involution
        assert_eq!(legendre_sym(&g).unwrap(), f);

        // (Lf)' o f' = h1 and f' o (Lf)' = h1
        let gp_fp = g.d_p1().plethysm(&f.d_p1()).unwrap();
        assert_eq!(gp_fp, SymFunc::p(1, n - 1));
        let fp_gp = f.d_p1().plethysm(&g.d_p1()).unwrap();
        assert_eq!(fp_gp, SymFunc::p(1, n - 1));

        // residual of the defining identity: g o f' + f - p_1 f' = 0
        let residual = g
            .plethysm(&f.d_p1())
            .unwrap()
            .add(&f)
            .sub(&f.d_p1().mul_p(1).truncate_to(n));
        assert!(residual.is_zero(), "residual {}", residual);

        // rank shadow: rk(L f) = legendre_scalar(rk f)
        let scalar = legendre_scalar(&f.rk()).unwrap();
        assert_eq!(g.rk(), scalar);
    }

    #[test]
    fn sym_trivial_module_degree_four() {
        // L(e2 - h3 - h4 - h5) has rank 4!/4! + ... : its degree-4 part
        // evaluated under rk times 4! counts the four stable trees with
        // four legs.
        let n = 5;
        let f = SymFunc::e(2, n).sub(&SymFunc::h_sum(3, 5, n));
        let g = legendre_sym(&f).unwrap();
        let r = g.rk();
        let mut fact = Rat::from_integer(24.into());
        let c = r.coeff(4).constant_part() * fact.clone();
        assert_eq!(c, rat(4, 1));
        // degree-3 part of L(f) - h2 is s3
        let b0_3 = g.sub(&SymFunc::h(2, n)).degree_part(3);
        assert_eq!(b0_3, SymFunc::schur(&Partition::new(vec![3]), n));
        fact *= Rat::from_integer(5.into());
        let c5 = r.coeff(5).constant_part() * fact;
        assert_eq!(c5, rat(26, 1));
    }
}
