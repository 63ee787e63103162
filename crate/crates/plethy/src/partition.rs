//! Integer partitions and symmetric-group character values.
//!
//! Characters are computed by the Murnaghan-Nakayama rule over beta
//! numbers, memoized per `(lambda, mu)` pair; only degrees up to ~15 are
//! ever needed here.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::Rat;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Normalizes: sorts descending and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or empty for n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// The centralizer order `z_mu = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            for _ in 0..m {
                z *= BigInt::from(i);
            }
            for k in 1..=m {
                z *= BigInt::from(k);
            }
        }
        z
    }

    pub fn z_rat(&self) -> Rat {
        Rat::from(self.z())
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Every part multiplied by `m`.
    pub fn scaled(&self, m: u32) -> Partition {
        Partition(self.0.iter().map(|p| p * m).collect())
    }

    /// Append one part.
    pub fn with_part(&self, p: u32) -> Partition {
        let mut parts = self.0.clone();
        parts.push(p);
        Partition::new(parts)
    }

    /// Remove one occurrence of `p`; None if absent.
    pub fn without_part(&self, p: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&q| q == p)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// All partitions of `n`, in lexicographically decreasing order of the
    /// part vectors.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            let top = max.min(rest);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux of shape `self`, i.e. the dimension of
    /// the corresponding irreducible representation.
    pub fn dimension(&self) -> BigInt {
        character(self, &Partition::new(vec![1; self.weight() as usize]))
    }

    /// Compact name like "s311" used in table output; parts of two or more
    /// digits are comma-separated.
    pub fn schur_label(&self) -> String {
        if self.0.is_empty() {
            return "s0".to_string();
        }
        if self.0.iter().all(|&p| p < 10) {
            let digits: String = self.0.iter().map(|p| p.to_string()).collect();
            format!("s{}", digits)
        } else {
            let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
            format!("s({})", parts.join(","))
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

thread_local! {
    static CHAR_MEMO: RefCell<HashMap<(Partition, Partition), BigInt>> =
        RefCell::new(HashMap::new());
}

/// Irreducible character value `chi^lambda(mu)` for `|lambda| = |mu|`.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    assert_eq!(lambda.weight(), mu.weight(), "character needs |lambda| = |mu|");
    if lambda.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = CHAR_MEMO.with(|m| m.borrow().get(&(lambda.clone(), mu.clone())).cloned()) {
        return v;
    }
    // Strip a border strip of length mu[0] from lambda in all possible
    // ways. In beta-number form, removing a strip of length r replaces
    // some beta by beta - r (if absent from the set); the height of the
    // strip is the number of betas jumped over.
    let r = mu.parts()[0];
    let mu_rest = Partition(mu.parts()[1..].to_vec());
    let k = lambda.len();
    let betas: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let mut total = BigInt::from(0);
    for j in 0..k {
        let nb = betas[j] - r as i64;
        if nb < 0 || betas.contains(&nb) {
            continue;
        }
        let crossings = betas.iter().filter(|&&b| nb < b && b < betas[j]).count();
        let mut new_betas: Vec<i64> = betas
            .iter()
            .enumerate()
            .map(|(i, &b)| if i == j { nb } else { b })
            .collect();
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let new_parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (k - 1 - i) as i64) as u32)
            .collect();
        let sub = character(&Partition::new(new_parts), &mu_rest);
        if crossings % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    CHAR_MEMO.with(|m| {
        m.borrow_mut().insert((lambda.clone(), mu.clone()), total.clone());
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn basics() {
        let p = pt(&[1, 3, 1]);
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.weight(), 5);
        // z_{(2,1,1)} = 2 * 1^2 * 2! = 4
        assert_eq!(pt(&[2, 1, 1]).z(), BigInt::from(4));
        assert_eq!(pt(&[3]).z(), BigInt::from(3));
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(11).len(), 56);
    }

    #[test]
    fn characters_of_s3() {
        // chi^{(2,1)} on classes (1,1,1), (2,1), (3) is (2, 0, -1)
        let lam = pt(&[2, 1]);
        assert_eq!(character(&lam, &pt(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(character(&lam, &pt(&[2, 1])), BigInt::from(0));
        assert_eq!(character(&lam, &pt(&[3])), BigInt::from(-1));
        // trivial and sign
        assert_eq!(character(&pt(&[3]), &pt(&[3])), BigInt::from(1));
        assert_eq!(character(&pt(&[1, 1, 1]), &pt(&[2, 1])), BigInt::from(-1));
    }

    #[test]
    fn character_orthogonality_degree_5() {
        // sum_mu chi^a(mu) chi^b(mu) / z_mu = delta_{ab}
        let parts = Partition::all(5);
        for a in &parts {
            for b in &parts {
                let mut acc = Rat::from(BigInt::from(0));
                for mu in &parts {
                    let prod = character(a, mu) * character(b, mu);
                    acc += Rat::new(prod, mu.z());
                }
                let expect = if a == b { 1 } else { 0 };
                assert_eq!(acc, Rat::from(BigInt::from(expect)), "{} {}", a, b);
            }
        }
    }

    #[test]
    fn dimensions_degree_4() {
        let dims: Vec<(Partition, i64)> = vec![
            (pt(&[4]), 1),
            (pt(&[3, 1]), 3),
            (pt(&[2, 2]), 2),
            (pt(&[2, 1, 1]), 3),
            (pt(&[1, 1, 1, 1]), 1),
        ];
        for (lam, d) in dims {
            assert_eq!(lam.dimension(), BigInt::from(d));
        }
    }
}
