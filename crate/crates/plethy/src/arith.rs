//! Elementary number theory for the totient sums and Möbius exponents,
//! plus float conversion for asymptotics.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::coeff::Rat;

pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler's totient, by trial factorization.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut m = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// Möbius function: 0 on non-squarefree n, else (-1)^(number of primes).
pub fn mobius(n: u32) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Convert an exact rational to f64, tolerating numerators and
/// denominators far outside the f64 exponent range.
pub fn rat_to_f64(q: &Rat) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let num: BigInt = q.numer().abs();
    let den: BigInt = q.denom().abs();
    // Normalize so the integer quotient carries ~80 significant bits.
    let shift = num.bits() as i64 - den.bits() as i64 - 80;
    let quot = if shift > 0 {
        (&num / (&den << shift as u64)).to_f64().unwrap_or(f64::INFINITY)
    } else {
        ((&num << (-shift) as u64) / &den).to_f64().unwrap_or(f64::INFINITY)
    };
    let val = quot * (shift as f64).exp2();
    if q.is_negative() {
        -val
    } else {
        val
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use num_bigint::BigInt;

    #[test]
    fn phi_and_mobius() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn big_rational_to_float() {
        assert_eq!(rat_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rat_to_f64(&rat(-7, 4)), -1.75);
        // a ratio of ~500-digit numbers close to 3
        let big = BigInt::from(10u32).pow(500u32);
        let q = Rat::new(3 * &big + 1, big);
        assert!((rat_to_f64(&q) - 3.0).abs() < 1e-12);
    }
}
