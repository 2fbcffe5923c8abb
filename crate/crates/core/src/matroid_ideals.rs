//! Cover and Stanley-Reisner ideals of matroids, squarefree parts of symbolic
//! powers by two independent routes, the flats correspondence, and the
//! matroid-detection test on second symbolic powers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::{GroundSubset, SubsetFamily};
use crate::ideal::MonomialIdeal;
use crate::matroid::Matroid;
use crate::monomial::Monomial;
use crate::oracle;
use crate::sympow::Side;

/// Provenance tag for an ideal: which construction produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    CoverIdeal(Matroid),
    StanleyReisner(Matroid),
    Raw,
}

/// A monomial ideal together with the matroid it came from, when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealWithOrigin {
    pub ideal: MonomialIdeal,
    pub origin: Origin,
}

/// The cover ideal `J(Δ) = ∩_F p_F` over the bases of `Δ`. Its minimal
/// generators are the indicator monomials of the cocircuits.
pub fn cover_ideal(m: &Matroid) -> IdealWithOrigin {
    IdealWithOrigin {
        ideal: MonomialIdeal::from_supports(&m.cocircuits()),
        origin: Origin::CoverIdeal(m.clone()),
    }
}

/// The Stanley-Reisner ideal `I_Δ`, whose minimal generators are the
/// indicator monomials of the circuits. Equals the cover ideal of the dual.
pub fn stanley_reisner(m: &Matroid) -> IdealWithOrigin {
    IdealWithOrigin {
        ideal: MonomialIdeal::from_supports(&m.circuits()),
        origin: Origin::StanleyReisner(m.clone()),
    }
}

pub fn side_ideal(m: &Matroid, side: Side) -> MonomialIdeal {
    match side {
        Side::Cover => cover_ideal(m).ideal,
        Side::StanleyReisner => stanley_reisner(m).ideal,
    }
}

/// Height of the side ideal: rank for the cover ideal, corank for the
/// Stanley-Reisner ideal.
pub fn side_height(m: &Matroid, side: Side) -> usize {
    match side {
        Side::Cover => m.rank(),
        Side::StanleyReisner => m.corank(),
    }
}

/// Squarefree part of the l-th symbolic power by the skeleton route:
/// the cover ideal of the (l-1)-truncation, or the Stanley-Reisner ideal of
/// the (l-1)-elongation.
pub fn sf_symbolic_skeleton(m: &Matroid, l: usize, side: Side) -> Result<MonomialIdeal> {
    let height = side_height(m, side);
    if l == 0 || l > height {
        return Err(Error::LevelOutOfRange { level: l, max: height });
    }
    match side {
        Side::Cover => Ok(cover_ideal(&m.truncation(l - 1)?).ideal),
        Side::StanleyReisner => Ok(stanley_reisner(&m.elongation(l - 1)?).ideal),
    }
}

/// Squarefree part of the l-th symbolic power by the LCM route: LCMs of
/// l-tuples of minimal generators where each entry contributes content the
/// previous LCM did not already have.
///
/// Exact for C-matroidal ideals; the caller is responsible for matroidality
/// (see [`detect_matroid`]). Enumeration runs level by level over distinct
/// LCM values, so identical partial LCMs are explored once.
pub fn sf_symbolic_lcm(ideal: &MonomialIdeal, l: usize) -> Result<MonomialIdeal> {
    if l == 0 {
        return Err(Error::LevelOutOfRange { level: 0, max: usize::MAX });
    }
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(ideal.n()));
    }
    let mut level: Vec<Monomial> = ideal.gens().to_vec();
    for _ in 1..l {
        let mut next: Vec<Monomial> = Vec::new();
        for m in &level {
            for g in ideal.gens() {
                if !g.divides(m) {
                    next.push(m.lcm(g));
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        level = next;
        if level.is_empty() {
            break;
        }
    }
    MonomialIdeal::from_generators(ideal.n(), level)
}

/// A chain witness for membership of `target` in `SF_l`: generators
/// `m_1, .., m_l` whose LCM divides `target`, each contributing content the
/// previous LCM did not have. Every minimal generator of `SF_l` admits one
/// (with the LCM equal to the generator itself for C-matroidal input).
pub fn lcm_witness(ideal: &MonomialIdeal, target: &Monomial, l: usize) -> Option<Vec<Monomial>> {
    fn rec(
        divisors: &[&Monomial],
        l: usize,
        acc: &mut Vec<Monomial>,
        lcm: Option<Monomial>,
    ) -> bool {
        if acc.len() == l {
            return true;
        }
        for g in divisors {
            let extends = match &lcm {
                None => true,
                Some(m) => !g.divides(m),
            };
            if extends {
                let next = match &lcm {
                    None => (*g).clone(),
                    Some(m) => m.lcm(g),
                };
                acc.push((*g).clone());
                if rec(divisors, l, acc, Some(next)) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let divisors: Vec<&Monomial> = ideal.gens().iter().filter(|g| g.divides(target)).collect();
    let mut acc = Vec::with_capacity(l);
    rec(&divisors, l, &mut acc, None).then_some(acc)
}

/// Squarefree part of the l-th symbolic power of an arbitrary squarefree
/// ideal, via `SF(p^l) = ∩_{A ⊆ F, |A| = l-1} p_{F-A}` over the minimal
/// primes p_F.
pub fn sf_symbolic_raw(ideal: &MonomialIdeal, l: usize) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !ideal.is_proper() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let primes = minimal_primes(ideal)?;
    let height = primes.iter().map(|f| f.len()).min().unwrap_or(0);
    if l == 0 || l > height {
        return Err(Error::LevelOutOfRange { level: l, max: height });
    }
    let n = ideal.n();
    let mut acc = MonomialIdeal::unit(n);
    for f in primes.iter() {
        for a in crate::ground::submasks_of_size(f.mask(), l - 1) {
            let reduced = GroundSubset::from_mask(n, f.mask() & !a);
            let prime = MonomialIdeal::from_supports(&SubsetFamily::from_masks(
                n,
                reduced.iter().map(|i| 1u64 << i).collect(),
            ));
            acc = acc.intersect(&prime)?;
        }
    }
    Ok(acc)
}

/// Minimal primes of a squarefree monomial ideal: the minimal transversals of
/// the hypergraph of generator supports, found by branching on an uncovered
/// edge. Desk-scale: intended for n <= 24.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<SubsetFamily> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !ideal.is_proper() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let edges: Vec<u64> = ideal.gens().iter().map(Monomial::support_mask).collect();
    let mut covers: Vec<u64> = Vec::new();
    branch_transversals(&edges, 0, &mut covers);
    // trim to the minimal ones
    let mut minimal: Vec<u64> = Vec::new();
    covers.sort_by_key(|c| c.count_ones());
    for c in covers {
        if !minimal.iter().any(|&m| m & !c == 0) {
            minimal.push(c);
        }
    }
    Ok(SubsetFamily::from_masks(ideal.n(), minimal))
}

fn branch_transversals(edges: &[u64], chosen: u64, out: &mut Vec<u64>) {
    match edges.iter().find(|&&e| e & chosen == 0) {
        None => out.push(chosen),
        Some(&uncovered) => {
            let mut e = uncovered;
            while e != 0 {
                let v = e & e.wrapping_neg();
                e &= e - 1;
                branch_transversals(edges, chosen | v, out);
            }
        }
    }
}

/// The bijection of flats of rank `rank - l` with minimal generators of
/// `SF_l(J(Δ))`: a flat `H` corresponds to the indicator monomial of its
/// complement.
pub fn flats_correspondence(
    m: &Matroid,
    l: usize,
) -> Result<Vec<(GroundSubset, Monomial)>> {
    if l == 0 || l > m.rank() {
        return Err(Error::LevelOutOfRange { level: l, max: m.rank() });
    }
    let flats = m.flats_of_rank(m.rank() - l)?;
    let pairs: Vec<(GroundSubset, Monomial)> = flats
        .iter()
        .map(|h| (h, Monomial::from_support(h.complement())))
        .collect();
    let sf = sf_symbolic_skeleton(m, l, Side::Cover)?;
    let mut gens: Vec<Monomial> = pairs.iter().map(|(_, g)| g.clone()).collect();
    gens.sort_unstable();
    if gens != sf.gens() {
        return Err(Error::InternalInconsistency(format!(
            "flat complements disagree with SF_{l} generators for {m:?}"
        )));
    }
    Ok(pairs)
}

/// Outcome of the matroid-detection test on a squarefree ideal.
#[derive(Clone, Debug, Serialize)]
pub struct DetectionReport {
    pub is_matroidal: bool,
    /// Supports of the minimal generators, which form the circuit family of a
    /// matroid exactly when `is_matroidal` holds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circuits: Option<Vec<Vec<usize>>>,
    /// A generator of `I^(2)` outside `G(I^[2]) ∪ G(SF_2)`, or a member of
    /// that union that is not a minimal generator of `I^(2)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
}

/// Decides whether a squarefree ideal is C-matroidal by the shape of its
/// second symbolic power: `G(I^(2)) = G(I^[2]) ∪ G(SF_2(I))`.
pub fn detect_matroid(ideal: &MonomialIdeal) -> Result<DetectionReport> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !ideal.is_proper() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let symb2 = oracle::symbolic_power_raw(ideal, 2)?;
    let expected = ideal.bracket_power(2).sum(&symb2.squarefree_part())?;
    // both sides are canonical minimal generating sets; compare directly
    if symb2 == expected {
        let circuits = ideal.supports();
        debug_assert!(Matroid::from_circuits(ideal.n(), &circuits).is_ok());
        Ok(DetectionReport {
            is_matroidal: true,
            circuits: Some(circuits.to_index_lists()),
            witness: None,
        })
    } else {
        let witness = symb2
            .gens()
            .iter()
            .find(|g| !expected.is_min_gen(g))
            .or_else(|| expected.gens().iter().find(|g| !symb2.is_min_gen(g)))
            .expect("unequal canonical generator lists differ somewhere");
        Ok(DetectionReport {
            is_matroidal: false,
            circuits: None,
            witness: Some(witness.exponents().to_vec()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn ideal(s: &str) -> MonomialIdeal {
        parse_ideal(s, None).unwrap()
    }

    fn running_example() -> Matroid {
        let fam = SubsetFamily::from_index_lists(
            6,
            &[vec![0, 5], vec![2, 3], vec![1, 3, 4], vec![1, 2, 4]],
        )
        .unwrap();
        Matroid::from_circuits(6, &fam).unwrap()
    }

    #[test]
    fn stanley_reisner_round_trips_circuits() {
        let m = running_example();
        assert_eq!(stanley_reisner(&m).ideal, ideal("af, cd, bde, bce"));
        assert_eq!(stanley_reisner(&m).ideal, cover_ideal(&m.dual()).ideal);
        assert!(stanley_reisner(&Matroid::free(3).unwrap()).ideal.is_zero());
    }

    #[test]
    fn cover_ideal_examples() {
        // U(1, n): bases are singletons, so J = (x_1 ⋯ x_n)
        let u1 = Matroid::uniform(4, 1).unwrap();
        assert_eq!(cover_ideal(&u1).ideal, parse_ideal("abcd", Some(4)).unwrap());
    }

    #[test]
    fn skeleton_route_on_the_running_example() {
        let m = running_example();
        let sf2 = sf_symbolic_skeleton(&m, 2, Side::StanleyReisner).unwrap();
        assert_eq!(sf2, ideal("acdf, bcde, abcef, abdef"));
        let sf3 = sf_symbolic_skeleton(&m, 3, Side::StanleyReisner).unwrap();
        assert_eq!(sf3, ideal("abcdef"));
        // SF_1 is the ideal itself
        assert_eq!(
            sf_symbolic_skeleton(&m, 1, Side::StanleyReisner).unwrap(),
            stanley_reisner(&m).ideal
        );
        assert!(sf_symbolic_skeleton(&m, 4, Side::StanleyReisner).is_err());
    }

    #[test]
    fn lcm_route_matches_skeleton() {
        let m = running_example();
        let sr = stanley_reisner(&m).ideal;
        for l in 1..=3 {
            assert_eq!(
                sf_symbolic_lcm(&sr, l).unwrap(),
                sf_symbolic_skeleton(&m, l, Side::StanleyReisner).unwrap()
            );
        }
        assert_eq!(sf_symbolic_lcm(&sr, 1).unwrap(), sr);
        // second worked example
        let i = ideal("abe, ace, ad, bc, bde, cde");
        assert_eq!(sf_symbolic_lcm(&i, 2).unwrap(), ideal("abcd, abce, abde, acde, bcde"));
    }

    #[test]
    fn lcm_witnesses_exist_and_recover_generators() {
        let m = running_example();
        let sr = stanley_reisner(&m).ideal;
        for l in 1..=3usize {
            let sf = sf_symbolic_skeleton(&m, l, Side::StanleyReisner).unwrap();
            for g in sf.gens() {
                let chain = lcm_witness(&sr, g, l).expect("witness exists");
                assert_eq!(chain.len(), l);
                let lcm = chain.iter().skip(1).fold(chain[0].clone(), |acc, m| acc.lcm(m));
                assert_eq!(&lcm, g, "chain LCM recovers the minimal generator");
                for (i, mi) in chain.iter().enumerate().skip(1) {
                    let prefix =
                        chain[..i].iter().skip(1).fold(chain[0].clone(), |acc, m| acc.lcm(m));
                    assert!(!mi.divides(&prefix));
                }
            }
        }
        // no chain of length 4 divides a generator of SF_3 = (abcdef)
        let g = sf_symbolic_skeleton(&m, 3, Side::StanleyReisner).unwrap();
        assert!(lcm_witness(&sr, &g.gens()[0], 4).is_none());
    }

    #[test]
    fn raw_route_handles_mixed_heights() {
        let i = ideal("ae, af, bdf, be, cdf, ce");
        assert_eq!(sf_symbolic_raw(&i, 2).unwrap(), ideal("abef, acef, bcdef"));
        let primes = minimal_primes(&i).unwrap();
        assert_eq!(
            primes.to_index_lists(),
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![4, 5]]
        );
    }

    #[test]
    fn flats_match_generators() {
        let m = running_example().dual();
        for l in 1..=m.rank() {
            let pairs = flats_correspondence(&m, l).unwrap();
            assert_eq!(
                pairs.len(),
                sf_symbolic_skeleton(&m, l, Side::Cover).unwrap().mu()
            );
        }
    }

    #[test]
    fn detection() {
        let yes = ideal("ab, acd, ace, ade, bcd, bce, bde, cde");
        let report = detect_matroid(&yes).unwrap();
        assert!(report.is_matroidal);
        assert_eq!(report.circuits.unwrap().len(), 8);

        let no = ideal("abc, abd, acd, bcde");
        let report = detect_matroid(&no).unwrap();
        assert!(!report.is_matroidal);
        assert!(report.witness.is_some());

        // complete intersections are trivially matroidal
        let ci = ideal("ab, cd");
        assert!(detect_matroid(&ci).unwrap().is_matroidal);

        assert!(detect_matroid(&ideal("a2b")).is_err());
        assert!(detect_matroid(&MonomialIdeal::unit(2)).is_err());
    }
}
