//! Monomials as exponent vectors over a fixed variable count.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::ground::GroundSubset;

/// A monomial in `n` variables, stored as its exponent vector.
///
/// The canonical order is graded lexicographic with variable 0 heaviest:
/// lower total degree sorts first, and within a degree the monomial with the
/// larger exponent at the first differing variable sorts first. This makes
/// generator lists read "alphabetically" (`acdf` before `bcde`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        debug_assert!(i < n);
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The squarefree monomial `x_A`.
    pub fn from_support(support: GroundSubset) -> Self {
        let mut exps = vec![0; support.n()];
        for i in support.iter() {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn support(&self) -> GroundSubset {
        GroundSubset::from_mask(self.ambient(), self.support_mask())
    }

    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "lcm of monomials in different rings");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "product of monomials in different rings");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e * k).collect() }
    }

    /// Exact division, `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect(),
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::monomial_string(self))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.exps.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_monomial;

    fn m(s: &str, n: usize) -> Monomial {
        parse_monomial(s, n).unwrap()
    }

    #[test]
    fn lcm_divides_support() {
        let ab = m("ab", 3);
        let bc = m("bc", 3);
        assert_eq!(ab.lcm(&bc), m("abc", 3));
        assert!(ab.divides(&m("a2b", 3)));
        assert!(!m("a2b", 3).divides(&ab));
        assert_eq!(m("a2c", 3).support().indices(), vec![0, 2]);
        assert_eq!(m("a2c", 3).degree(), 3);
        assert!(m("abc", 3).is_squarefree());
        assert!(!m("a2", 3).is_squarefree());
    }

    #[test]
    fn canonical_order_is_alphabetical_within_degree() {
        let n = 6;
        let acdf = m("acdf", n);
        let bcde = m("bcde", n);
        let abcef = m("abcef", n);
        let abdef = m("abdef", n);
        let mut v = vec![abdef.clone(), bcde.clone(), acdf.clone(), abcef.clone()];
        v.sort();
        assert_eq!(v, vec![acdf, bcde, abcef, abdef]);
    }

    #[test]
    fn division() {
        let n = 6;
        let big = m("ab3c6d6e3f", n);
        let sq = m("abcdef", n);
        assert_eq!(big.checked_div(&sq).unwrap(), m("b2c5d5e2", n));
        assert!(m("ab", 3).checked_div(&m("c", 3)).is_none());
    }
}
