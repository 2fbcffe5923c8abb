//! Independent brute-force reference implementations.
//!
//! Everything here computes symbolic powers straight from the definition
//! (intersect powers of the associated primes) and invariants straight from
//! their definitions, so the fast paths can be checked against them
//! generator for generator.

use crate::error::{Error, Result};
use crate::ground::{binomial, full_mask, GroundSubset};
use crate::ideal::{prime_power_generators, MonomialIdeal};
use crate::matroid::Matroid;
use crate::matroid_ideals::{minimal_primes, side_height};
use crate::sympow::{self, Side};

/// Default cap on the estimated number of pairwise LCM operations.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// The l-th symbolic power of the side ideal of a matroid, by folding
/// intersections of prime powers over the bases (cover side) or basis
/// complements (Stanley-Reisner side).
pub fn symbolic_power_bruteforce(m: &Matroid, l: usize, side: Side) -> Result<MonomialIdeal> {
    symbolic_power_bruteforce_with_budget(m, l, side, DEFAULT_BUDGET)
}

pub fn symbolic_power_bruteforce_with_budget(
    m: &Matroid,
    l: usize,
    side: Side,
    budget: u64,
) -> Result<MonomialIdeal> {
    let full = full_mask(m.n());
    let primes: Vec<u64> = match side {
        Side::Cover => m.basis_masks().to_vec(),
        Side::StanleyReisner => m.basis_masks().iter().map(|&f| full & !f).collect(),
    };
    intersect_prime_powers(m.n(), &primes, l, budget)
}

/// The l-th symbolic power of an arbitrary squarefree monomial ideal, with
/// the associated primes recovered as minimal transversals of the support
/// hypergraph.
pub fn symbolic_power_raw(ideal: &MonomialIdeal, l: usize) -> Result<MonomialIdeal> {
    symbolic_power_raw_with_budget(ideal, l, DEFAULT_BUDGET)
}

pub fn symbolic_power_raw_with_budget(
    ideal: &MonomialIdeal,
    l: usize,
    budget: u64,
) -> Result<MonomialIdeal> {
    let primes = minimal_primes(ideal)?;
    intersect_prime_powers(ideal.n(), primes.masks(), l, budget)
}

fn intersect_prime_powers(
    n: usize,
    primes: &[u64],
    l: usize,
    budget: u64,
) -> Result<MonomialIdeal> {
    if l == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    if primes.is_empty() {
        return Ok(MonomialIdeal::unit(n));
    }
    if primes.contains(&0) {
        // p_∅ is the zero ideal
        return Ok(MonomialIdeal::zero(n));
    }
    let max_size = primes.iter().map(|p| p.count_ones() as usize).max().unwrap_or(0);
    let per_prime = binomial(l + max_size - 1, max_size - 1);
    let estimated = per_prime.saturating_mul(primes.len() as u128);
    if estimated > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "{} primes x {} generators each exceeds the budget of {}",
            primes.len(),
            per_prime,
            budget
        )));
    }
    // ascending fold with minimalization at every step keeps intermediates small
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    let mut acc = MonomialIdeal::unit(n);
    for &p in &sorted {
        let factor = prime_power_generators(GroundSubset::from_mask(n, p), l as u32)?;
        acc = acc.intersect(&factor)?;
    }
    Ok(acc)
}

/// Symbolic defect from the definition: the number of minimal generators of
/// the symbolic power that do not already lie in the ordinary power.
///
/// `symb` must be the l-th symbolic power of `ideal` (engine or oracle
/// output).
pub fn sdefect_direct(ideal: &MonomialIdeal, l: usize, symb: &MonomialIdeal) -> u64 {
    let ordinary = ideal.power(l as u32);
    let covered = symb.gens().iter().filter(|g| ordinary.contains(g)).count();
    (symb.mu() - covered) as u64
}

/// Largest t-degree of a minimal algebra generator of the symbolic Rees
/// algebra, from the definition: the largest `k <= height` such that some
/// squarefree generator of `SF_k` is not a product of lower symbolic powers.
pub fn noether_number_bruteforce(m: &Matroid, side: Side) -> usize {
    let height = side_height(m, side);
    if height == 0 {
        return 0;
    }
    let engine = sympow::SymbolicEngine::new();
    let sf = engine.squarefree_parts(m, side);
    for k in (2..=height).rev() {
        let mut decomposable = MonomialIdeal::zero(m.n());
        for i in 1..k {
            let piece = engine
                .symbolic_power(m, i, side)
                .product(&engine.symbolic_power(m, k - i, side))
                .expect("same ambient");
            decomposable = decomposable.sum(&piece).expect("same ambient");
        }
        if sf[k - 1].gens().iter().any(|g| !decomposable.contains(g)) {
            return k;
        }
    }
    1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::SubsetFamily;
    use crate::matroid_ideals::{cover_ideal, stanley_reisner};
    use crate::text::parse_ideal;

    fn running_example() -> Matroid {
        let fam = SubsetFamily::from_index_lists(
            6,
            &[vec![0, 5], vec![2, 3], vec![1, 3, 4], vec![1, 2, 4]],
        )
        .unwrap();
        Matroid::from_circuits(6, &fam).unwrap()
    }

    #[test]
    fn level_one_reproduces_the_ideals() {
        let m = running_example();
        assert_eq!(
            symbolic_power_bruteforce(&m, 1, Side::Cover).unwrap(),
            cover_ideal(&m).ideal
        );
        assert_eq!(
            symbolic_power_bruteforce(&m, 1, Side::StanleyReisner).unwrap(),
            stanley_reisner(&m).ideal
        );
    }

    #[test]
    fn matches_engine_on_running_example() {
        let m = running_example();
        for side in [Side::Cover, Side::StanleyReisner] {
            for l in 1..=4 {
                assert_eq!(
                    symbolic_power_bruteforce(&m, l, side).unwrap(),
                    sympow::symbolic_power(&m, l, side),
                    "side {side}, l {l}"
                );
            }
        }
    }

    #[test]
    fn thirteen_generators_example() {
        let i = parse_ideal("ab, acd, ace, ade, bcd, bce, bde, cde", None).unwrap();
        let i2 = symbolic_power_raw(&i, 2).unwrap();
        let expected = parse_ideal(
            "a2b2, a2c2d2, a2c2e2, a2d2e2, b2c2d2, b2c2e2, b2d2e2, c2d2e2, \
             abcd, abce, abde, acde, bcde",
            None,
        )
        .unwrap();
        assert_eq!(i2, expected);
        assert_eq!(i2.mu(), 13);
    }

    #[test]
    fn principal_and_raw() {
        let p = parse_ideal("abc", Some(3)).unwrap();
        assert_eq!(symbolic_power_raw(&p, 3).unwrap(), p.power(3));
        assert!(symbolic_power_raw(&parse_ideal("a2b", Some(2)).unwrap(), 2).is_err());
    }

    #[test]
    fn sdefect_examples() {
        // complete intersection: ordinary and symbolic powers agree
        let ci = parse_ideal("ab, cd", Some(4)).unwrap();
        for l in 1..=3 {
            let symb = symbolic_power_raw(&ci, l).unwrap();
            assert_eq!(symb, ci.power(l as u32));
            assert_eq!(sdefect_direct(&ci, l, &symb), 0);
        }
        // the non-matroidal control: sdefect(I, 2) = 1
        let i = parse_ideal("ab, ac, bcd", Some(4)).unwrap();
        let symb = symbolic_power_raw(&i, 2).unwrap();
        assert_eq!(sdefect_direct(&i, 2, &symb), 1);
    }

    #[test]
    fn noether_examples() {
        let u = Matroid::uniform(3, 2).unwrap();
        assert_eq!(noether_number_bruteforce(&u, Side::Cover), 2);
        let u12 = Matroid::uniform(2, 1).unwrap();
        let sum = u12.direct_sum(&u12).unwrap();
        assert_eq!(noether_number_bruteforce(&sum, Side::Cover), 1);
    }

    #[test]
    fn budget_guard() {
        let m = Matroid::uniform(7, 3).unwrap();
        assert!(matches!(
            symbolic_power_bruteforce_with_budget(&m, 4, Side::Cover, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
