//! The semi-classical engine: genus-one stable-graph sums from genus-zero
//! and genus-one vertex data.
//!
//! Writing `A_g` for the generating symmetric function of genus-`g` vertex
//! characteristics, the genus-zero sum is `h_2 + b_0 = L(e_2 - A_0)` and
//! the genus-one sum is
//!
//! ```text
//! b_1 = ( A_1  -  1/2 sum_m phi(m)/m log(1 - psi_m(A_0''))
//!              +  A_0. (A_0. + 1) / (1 - psi_2(A_0'')) ) o (h_1 + b_0')
//! ```
//!
//! where `A_0'' = d^2 A_0/dp_1^2` and `A_0. = dA_0/dp_2`. The totient sum
//! counts necklaces (one-circuit graphs of genus-zero vertices); the last
//! term corrects for the extra involutions of necklaces with one or two
//! vertices. Both sums are finite under truncation.

use crate::arith::euler_phi;
use crate::coeff::Rat;
use crate::legendre::{legendre_scalar, legendre_sym};
use crate::series::{Scalar, Series};
use crate::symf::SymFunc;
use crate::{Error, Result};

/// Vertex data for the pipeline: `a0` is the genus-zero characteristic
/// (cusp-free, degrees three and up), `a1` the genus-one characteristic
/// (degrees one and up, cusp symbols allowed).
#[derive(Clone, Debug)]
pub struct GenusData {
    a0: SymFunc,
    a1: SymFunc,
}

impl GenusData {
    pub fn new(a0: SymFunc, a1: SymFunc) -> Result<Self> {
        if !a0.is_cusp_free() {
            return Err(Error::AdamsOnCuspSymbol);
        }
        if a0.min_degree().map_or(false, |d| d < 3) || a1.min_degree().map_or(false, |d| d < 1) {
            return Err(Error::WrongLeadingTerm);
        }
        Ok(GenusData { a0, a1 })
    }

    pub fn a0(&self) -> &SymFunc {
        &self.a0
    }

    pub fn a1(&self) -> &SymFunc {
        &self.a1
    }
}

/// Genus-zero graph sum: `b_0 = L(e_2 - A_0) - h_2`, degrees three and up.
pub fn b0(data: &GenusData) -> Result<SymFunc> {
    let n = data.a0.trunc();
    let f = SymFunc::e(2, n).sub(&data.a0);
    let g = legendre_sym(&f)?;
    Ok(g.sub(&SymFunc::h(2, n)))
}

/// The necklace contribution
///
/// ```text
/// -1/2 sum_m phi(m)/m log(1 - psi_m(A_0''))
///     + (A_0.(A_0.+1) + psi_2(A_0'')/4) / (1 - psi_2(A_0''))
/// ```
///
/// The correction term comes from the Gaussian integral over the
/// even-index variables: completing the square in
/// `a q^2/2n + 2b q/n - (q-1)^2/2n` leaves the constant
/// `[(2b+1)^2 - (1-a)]/(2n(1-a)) = (2/n)(b(b+1) + a/4)/(1-a)` with
/// `a = psi_n(A_0'')`, `b = psi_{n/2}(A_0.)`. The `a/4` summand is
/// invisible to the rank homomorphism (psi_2 kills every power sum under
/// rk) but is forced equivariantly: without it the degree-two necklace
/// character for a trivial vertex module would have the non-integral
/// transposition trace 5/2 instead of counting the loop and the
/// double edge, both fixed by the swap.
///
/// `psi_m(A_0'')` starts in degree `m` and `psi_2(A_0'')^k` in degree
/// `2k`, so under truncation both the totient sum and the geometric
/// expansion of the denominator are finite.
pub fn necklace_term(a0: &SymFunc) -> Result<SymFunc> {
    let app = a0.d_p1().d_p1();
    let adot = a0.d_p2();
    let nt = app.trunc();
    let mut acc = SymFunc::zero(nt);

    for m in 1..=(nt as u32) {
        let psi = app.adams(m)?.truncate_to(nt);
        if psi.is_zero() {
            continue;
        }
        let log_term = psi.neg().log1p()?;
        acc = acc.sub(&log_term.scale_rat(&Rat::new(euler_phi(m).into(), (2 * m).into())));
    }

    let psi2 = app.adams(2)?.truncate_to(nt);
    let mut geom = SymFunc::one(nt);
    let mut power = SymFunc::one(nt);
    loop {
        power = power.mul(&psi2);
        if power.is_zero() {
            break;
        }
        geom = geom.add(&power);
    }
    let numerator = adot
        .mul(&adot)
        .add(&adot)
        .add(&psi2.scale_rat(&Rat::new(1.into(), 4.into())));
    Ok(acc.add(&numerator.mul(&geom)))
}

/// Genus-one graph sum `b_1 = (A_1 + necklace_term(A_0)) o (h_1 + b_0')`.
///
/// The result is valid two degrees below the truncation of `A_0`, since
/// the necklace term differentiates twice.
pub fn b1(data: &GenusData) -> Result<SymFunc> {
    let neck = necklace_term(&data.a0)?;
    let core = data.a1.add(&neck);
    let b0v = b0(data)?;
    let inner = b0v.d_p1().add(&SymFunc::p(1, b0v.trunc() - 1));
    core.plethysm(&inner)
}

/// Checks the equivalent form `b_1 o (h_1 - A_0') = A_1 + necklace_term(A_0)`
/// to the common truncation; uses `(h_1 + b_0') o (h_1 - A_0') = h_1`.
pub fn b1_alt_check(data: &GenusData) -> Result<bool> {
    let b1v = b1(data)?;
    let inner = data.a0.d_p1().neg().add(&SymFunc::p(1, data.a0.trunc() - 1));
    let lhs = b1v.plethysm(&inner)?;
    let rhs = data.a1.add(&necklace_term(&data.a0)?);
    let n = lhs.trunc().min(rhs.trunc());
    Ok(lhs.truncate_to(n) == rhs.truncate_to(n))
}

/// The characteristic of the sum over all necklaces of a trivial vertex:
/// `-sum_m phi(m)/m log(1 - p_m)`, the generating characteristic of the
/// cyclic-group inductions, evaluated to degree `n`.
pub fn necklace_characteristic(n: usize) -> SymFunc {
    let mut acc = SymFunc::zero(n);
    for m in 1..=(n as u32) {
        let u = SymFunc::p(m, n).neg();
        let log_term = u.log1p().expect("p_m has no constant term");
        acc = acc.sub(&log_term.scale_rat(&Rat::new(euler_phi(m).into(), m.into())));
    }
    acc
}

/// Cycle index of the cyclic group `Z_n` inside `S_n`:
/// `(1/n) sum_{d|n} phi(d) p_d^{n/d}`.
pub fn cycle_index_cyclic(n: u32, trunc: usize) -> SymFunc {
    let mut acc = SymFunc::zero(trunc);
    for d in crate::arith::divisors(n) {
        let mut mono = SymFunc::one(trunc);
        for _ in 0..(n / d) {
            mono = mono.mul(&SymFunc::p(d, trunc));
        }
        acc = acc.add(&mono.scale_rat(&Rat::new(euler_phi(d).into(), n.into())));
    }
    acc
}

/// Scalar shadow of the genus-one formula:
///
/// ```text
/// b_1 = ( a_1 - 1/2 log(1 - a_0'') + a_0.(a_0. + 1) ) o (x + b_0')
/// ```
///
/// The rank homomorphism kills every Adams term of index two and up, which
/// is why the totient sum collapses to its first term and the correction
/// loses its denominator. `a0_dot` cannot be recovered from `a0` (rank
/// destroys the `p_2`-derivative) and is supplied separately:
///
/// - with `a0_dot = rk(dA_0/dp_2)` this is the rank of [`b1`], counting
///   isomorphism classes (coinvariant dimensions);
/// - with `a0_dot = 0` it is the generating function of orbifold graph
///   sums weighted by `1/|Aut|`, whose coefficients are the classical
///   `M`-polynomials.
pub fn b_scalar<T: Scalar>(
    a0: &Series<T>,
    a1: &Series<T>,
    a0_dot: &Series<T>,
) -> Result<(Series<T>, Series<T>)> {
    for k in 0..=2.min(a0.order()) {
        if !a0.coeff(k).ring_is_zero() {
            return Err(Error::WrongLeadingTerm);
        }
    }
    let n0 = a0.order();
    let x = Series::<T>::x(n0);
    let x2 = x.mul(&x).scale(&Rat::new(1.into(), 2.into()));
    let b0s = legendre_scalar(&x2.sub(a0))?.sub(&x2);

    let napp = a0.derivative().derivative();
    let n1 = a1.order().min(n0 - 2).min(a0_dot.order());
    let log_term = napp.neg().log1p()?.truncated(n1);
    let adot = a0_dot.truncated(n1);
    let corr = adot.mul(&adot).add(&adot);
    let core = a1
        .truncated(n1)
        .sub(&log_term.scale(&Rat::new(1.into(), 2.into())))
        .add(&corr);

    let inner = b0s.derivative().add(&Series::x(n0 - 1)).truncated(n1);
    let b1s = core.compose(&inner)?;
    Ok((b0s, b1s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Coeff};
    use crate::partition::Partition;
    use crate::vpoly::VPoly;

    fn trivial_data(trunc: usize) -> GenusData {
        GenusData::new(SymFunc::h_sum(3, trunc as u32, trunc), SymFunc::zero(trunc)).unwrap()
    }

    #[test]
    fn b0_vanishes_without_genus_zero_data() {
        let data = GenusData::new(SymFunc::zero(6), SymFunc::zero(6)).unwrap();
        assert!(b0(&data).unwrap().is_zero());
        assert!(necklace_term(&SymFunc::zero(6)).unwrap().is_zero());
    }

    #[test]
    fn b1_reduces_to_a1_without_genus_zero_data() {
        let a1 = SymFunc::p(1, 6)
            .scale(&Coeff::lefschetz(1))
            .add(&SymFunc::h(2, 6).scale(&Coeff::cusp_symbol(12)));
        let data = GenusData::new(SymFunc::zero(6), a1.clone()).unwrap();
        assert_eq!(b1(&data).unwrap(), a1.truncate_to(4));
    }

    #[test]
    fn trivial_module_low_degrees() {
        // A0 = h3 + h4 + ...: the necklace term's degree-one part is
        // (1/2) p1 from the log plus (1/2) p1 from the correction.
        let neck = necklace_term(&SymFunc::h_sum(3, 7, 7)).unwrap();
        assert_eq!(neck.degree_part(1), SymFunc::p(1, 5));
        // two 2-leg necklaces (loop vertex, double edge), both swap-fixed
        let two_h2 = SymFunc::h(2, 5).scale_rat(&rat(2, 1));
        assert_eq!(neck.degree_part(2), two_h2);

        let data = trivial_data(7);
        let b = b1(&data).unwrap();
        // degree 1 is s1; degree 2 is 3 s2
        assert_eq!(b.degree_part(1), SymFunc::p(1, 5));
        let s2 = SymFunc::schur(&Partition::new(vec![2]), 5);
        assert_eq!(b.degree_part(2), s2.scale_rat(&rat(3, 1)));

        // dimensions 1, 3, 15 via rank
        let r = b.rk();
        assert_eq!(r.coeff(1).constant_part(), rat(1, 1));
        assert_eq!(r.coeff(2).constant_part() * rat(2, 1), rat(3, 1));
        assert_eq!(r.coeff(3).constant_part() * rat(6, 1), rat(15, 1));
    }

    #[test]
    fn trivial_module_schur_tables() {
        // Schur expansions of the genus-one sum for the trivial vertex
        // module in degrees three and four.
        let b = b1(&trivial_data(7)).unwrap();
        let pt = |parts: &[u32]| Partition::new(parts.to_vec());

        let d3 = b.degree_part(3).to_schur();
        assert_eq!(d3[&pt(&[3])], Coeff::from_int(7));
        assert_eq!(d3[&pt(&[2, 1])], Coeff::from_int(4));
        assert_eq!(d3.len(), 2);

        let d4 = b.degree_part(4).to_schur();
        assert_eq!(d4[&pt(&[4])], Coeff::from_int(20));
        assert_eq!(d4[&pt(&[3, 1])], Coeff::from_int(17));
        assert_eq!(d4[&pt(&[2, 2])], Coeff::from_int(14));
        assert_eq!(d4[&pt(&[2, 1, 1])], Coeff::from_int(4));
        assert_eq!(d4.len(), 4);
    }

    #[test]
    fn alternate_formulation_agrees() {
        assert!(b1_alt_check(&trivial_data(7)).unwrap());
        let empty = GenusData::new(SymFunc::zero(5), SymFunc::zero(5)).unwrap();
        assert!(b1_alt_check(&empty).unwrap());
    }

    #[test]
    fn necklace_characteristic_is_cyclic_cycle_index() {
        let nc = necklace_characteristic(8);
        for n in 1..=8u32 {
            assert_eq!(
                nc.degree_part(n).truncate_to(n as usize),
                cycle_index_cyclic(n, 8).truncate_to(n as usize),
                "degree {}",
                n
            );
        }
        // degree 1: p1 = s1; degree 2: h2 = s2; degree 3 matches the
        // 3-cycle index (p1^3 + 2 p3)/3
        assert_eq!(nc.degree_part(1).truncate_to(1), SymFunc::p(1, 1));
        assert_eq!(nc.degree_part(2).truncate_to(2), SymFunc::h(2, 2));
        let z3 = SymFunc::p(1, 3)
            .mul(&SymFunc::p(1, 3))
            .mul(&SymFunc::p(1, 3))
            .add(&SymFunc::p(3, 3).scale_rat(&rat(2, 1)))
            .scale_rat(&rat(1, 3));
        assert_eq!(nc.degree_part(3).truncate_to(3), z3);
    }

    #[test]
    fn scalar_pipeline_zero_data() {
        let z = Series::<Rat>::zero(6);
        let (b0s, b1s) = b_scalar(&z, &z, &z).unwrap();
        assert!(b0s.is_zero());
        assert!(b1s.is_zero());
    }

    #[test]
    fn scalar_symbolic_m_polynomials() {
        // a0 = sum v_{0,k} x^k/k!, a1 = sum v_{1,k} x^k/k!, a0_dot = 0.
        let n = 6usize;
        let mut a0 = Series::<VPoly>::zero(n);
        let mut a1 = Series::<VPoly>::zero(n);
        let mut fact = Rat::from_integer(1.into());
        for k in 1..=n {
            fact *= Rat::from_integer((k as i64).into());
            if k >= 3 {
                let mut s = Series::<VPoly>::zero(n);
                s.set(k, VPoly::var(0, k as u32).scale_rat(&fact.recip()));
                a0 = a0.add(&s);
            }
            let mut s = Series::<VPoly>::zero(n);
            s.set(k, VPoly::var(1, k as u32).scale_rat(&fact.recip()));
            a1 = a1.add(&s);
        }
        let (b0s, b1s) = b_scalar(&a0, &a1, &Series::<VPoly>::zero(n)).unwrap();

        // M-polynomial of (0,5): v05 + 10 v04 v03 + 15 v03^3
        let m05 = b0s.coeff(5).scale_rat(&Rat::from_integer(120.into()));
        assert_eq!(m05.coefficient(&[(0, 5)]), rat(1, 1));
        assert_eq!(m05.coefficient(&[(0, 4), (0, 3)]), rat(10, 1));
        assert_eq!(m05.coefficient(&[(0, 3), (0, 3), (0, 3)]), rat(15, 1));

        // M-polynomial of (1,1): v11 + (1/2) v03
        let m11 = b1s.coeff(1);
        assert_eq!(m11.coefficient(&[(1, 1)]), rat(1, 1));
        assert_eq!(m11.coefficient(&[(0, 3)]), rat(1, 2));

        // (1,2): the v03^2 weight is 1, from the two-vertex circuit and
        // the loop-plus-pendant graph at 1/2 each
        let m12 = b1s.coeff(2).scale_rat(&rat(2, 1));
        assert_eq!(m12.coefficient(&[(1, 2)]), rat(1, 1));
        assert_eq!(m12.coefficient(&[(1, 1), (0, 3)]), rat(1, 1));
        assert_eq!(m12.coefficient(&[(0, 4)]), rat(1, 2));
        assert_eq!(m12.coefficient(&[(0, 3), (0, 3)]), rat(1, 1));
    }

    #[test]
    fn rank_consistency_of_the_two_routes() {
        // rk(b1(data)) must equal the scalar formula fed with rk(A0),
        // rk(A1) and rk(dA0/dp2).
        let n = 7usize;
        let a0 = SymFunc::h_sum(3, n as u32, n).add(&SymFunc::h(3, n).mul(&SymFunc::p(2, n)));
        let a1 = SymFunc::h(1, n).scale(&Coeff::lefschetz(1)).add(&SymFunc::h(2, n));
        let data = GenusData::new(a0.clone(), a1.clone()).unwrap();
        let lhs = b1(&data).unwrap().rk();
        let (_, rhs) = b_scalar(&a0.rk(), &a1.rk(), &a0.d_p2().rk()).unwrap();
        let m = lhs.order().min(rhs.order());
        assert_eq!(lhs.truncated(m), rhs.truncated(m));
    }

    use crate::coeff::Rat;
}
