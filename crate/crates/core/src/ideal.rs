//! Monomial ideals held by their canonical minimal generating set.

use std::fmt;

use crate::error::{Error, Result};
use crate::ground::{k_subset_masks, GroundSubset, SubsetFamily};
use crate::monomial::Monomial;

/// A monomial ideal over a fixed variable count, stored as its unique minimal
/// monomial generating set in canonical (graded lexicographic) order.
///
/// The zero ideal has no generators; the unit ideal is generated by 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// Minimalizes an arbitrary generating set: drops strict multiples and
    /// duplicates, sorts canonically.
    pub fn from_generators(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ambient() != n {
                return Err(Error::MixedAmbient(n, g.ambient()));
            }
        }
        Ok(Self::from_generators_unchecked(n, gens))
    }

    pub(crate) fn from_generators_unchecked(n: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    /// The squarefree ideal whose generators are the indicator monomials of a
    /// subset family (callers pass an antichain; minimalization runs anyway).
    pub fn from_supports(family: &SubsetFamily) -> Self {
        let gens = family.iter().map(Monomial::from_support).collect();
        Self::from_generators_unchecked(family.n(), gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Ideal membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        debug_assert_eq!(m.ambient(), self.n);
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_min_gen(&self, m: &Monomial) -> bool {
        self.gens.binary_search(m).is_ok()
    }

    /// Smallest degree of an element (= of a minimal generator).
    pub fn alpha(&self) -> Result<u64> {
        self.gens.iter().map(Monomial::degree).min().ok_or(Error::ZeroIdeal)
    }

    /// Supports of the minimal generators.
    pub fn supports(&self) -> SubsetFamily {
        SubsetFamily::from_masks(self.n, self.gens.iter().map(Monomial::support_mask).collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::MixedAmbient(self.n, other.n));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.n));
        }
        let mut cand = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cand.push(a.lcm(b));
            }
        }
        Ok(Self::from_generators_unchecked(self.n, cand))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::MixedAmbient(self.n, other.n));
        }
        let mut cand = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cand.push(a.mul(b));
            }
        }
        Ok(Self::from_generators_unchecked(self.n, cand))
    }

    /// Ideal sum: union of the generating sets, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::MixedAmbient(self.n, other.n));
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(Self::from_generators_unchecked(self.n, gens))
    }

    /// `I^k` by repeated products; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient");
        }
        acc
    }

    /// The bracket power `I^[k]`: each minimal generator raised to the k-th power.
    pub fn bracket_power(&self, k: u32) -> MonomialIdeal {
        if k == 0 {
            return MonomialIdeal::unit(self.n);
        }
        Self::from_generators_unchecked(self.n, self.gens.iter().map(|g| g.pow(k)).collect())
    }

    /// The ideal of all squarefree monomials in `self`.
    ///
    /// A squarefree monomial is divisible by a generator only if that
    /// generator is itself squarefree, so SF(I) is generated by the squarefree
    /// members of G(I).
    pub fn squarefree_part(&self) -> MonomialIdeal {
        let gens: Vec<Monomial> =
            self.gens.iter().filter(|g| g.is_squarefree()).cloned().collect();
        debug_assert!(
            self.n > 20 || {
                let brute = minimal_squarefree_members(self);
                brute == gens
            },
            "squarefree part disagrees with brute-force enumeration"
        );
        MonomialIdeal { n: self.n, gens }
    }
}

/// All monomials of total degree `l` in the variables of `support`: the
/// minimal generators of `p_F^l`.
pub fn prime_power_generators(support: GroundSubset, l: u32) -> Result<MonomialIdeal> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    if l == 0 {
        return Ok(MonomialIdeal::unit(support.n()));
    }
    let n = support.n();
    let vars = support.indices();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(vars: &[usize], idx: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx + 1 == vars.len() {
            exps[vars[idx]] = left;
            out.push(Monomial::from_exponents(exps.clone()));
            exps[vars[idx]] = 0;
            return;
        }
        for e in 0..=left {
            exps[vars[idx]] = e;
            rec(vars, idx + 1, left - e, exps, out);
        }
        exps[vars[idx]] = 0;
    }
    rec(&vars, 0, l, &mut exps, &mut gens);
    Ok(MonomialIdeal::from_generators_unchecked(n, gens))
}

/// Removes duplicates and strict multiples, returning the canonical minimal
/// generating set. Candidates are scanned in increasing degree, so a survivor
/// can only be killed by an earlier (smaller) survivor.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    let mut kept_masks: Vec<u64> = Vec::with_capacity(gens.len());
    'outer: for g in gens {
        let mask = g.support_mask();
        for (k, &km) in kept.iter().zip(&kept_masks) {
            if km & !mask == 0 && k.divides(&g) {
                continue 'outer;
            }
        }
        kept.push(g);
        kept_masks.push(mask);
    }
    kept
}

/// Debug-mode oracle for `squarefree_part`: enumerate every squarefree
/// monomial on the ambient variables and keep the minimal members.
fn minimal_squarefree_members(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let n = ideal.n;
    let mut members = Vec::new();
    for k in 0..=n {
        for mask in k_subset_masks(n, k) {
            let m = Monomial::from_support(GroundSubset::from_mask(n, mask));
            if ideal.contains(&m) {
                members.push(m);
            }
        }
    }
    minimalize(members)
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::text::ideal_string(self))
    }
}
