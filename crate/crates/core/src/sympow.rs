//! Fast symbolic powers of matroid ideals.
//!
//! Every minimal generator of the l-th symbolic power is a product of
//! squarefree minimal generators of lower symbolic powers with nested
//! supports, one tower per partition of l into parts bounded by the height.
//! The engine enumerates those towers directly; no minimalization pass is
//! needed afterwards.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::matroid::Matroid;
use crate::matroid_ideals::{self, side_height};
use crate::monomial::Monomial;

/// Which ideal of the matroid to work with.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Side {
    #[serde(rename = "cover")]
    Cover,
    #[serde(rename = "sr")]
    StanleyReisner,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover" => Ok(Side::Cover),
            "sr" | "stanley-reisner" => Ok(Side::StanleyReisner),
            other => Err(Error::Parse(format!("unknown side {other:?}, expected cover or sr"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Cover => write!(f, "cover"),
            Side::StanleyReisner => write!(f, "sr"),
        }
    }
}

/// One layer of a tower decomposition: a squarefree generator of `SF_level`,
/// repeated `count` times.
#[derive(Clone, Debug, Serialize)]
pub struct TowerLayer {
    pub generator: Monomial,
    pub level: usize,
    pub count: u32,
}

/// The unique factorization of a minimal generator of a symbolic power into
/// nested-support squarefree layers.
#[derive(Clone, Debug)]
pub struct TowerDecomposition {
    pub layers: Vec<TowerLayer>,
    pub product: Monomial,
}

impl TowerDecomposition {
    /// The symbolic type: the layer levels with multiplicity, non-increasing.
    pub fn symbolic_type(&self) -> Vec<usize> {
        let mut parts = Vec::new();
        for layer in &self.layers {
            for _ in 0..layer.count {
                parts.push(layer.level);
            }
        }
        parts
    }
}

/// Computes symbolic powers, memoizing the squarefree parts per matroid and
/// side. Safe to share across threads; reuse one engine for sweeps over l.
pub struct SymbolicEngine {
    cache: Mutex<SfCache>,
}

type SfCache = HashMap<(Matroid, Side), Arc<Vec<MonomialIdeal>>>;

impl Default for SymbolicEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl SymbolicEngine {
    pub fn new() -> Self {
        SymbolicEngine { cache: Mutex::new(SfCache::new()) }
    }

    /// The squarefree parts `SF_1, .., SF_height` of the side ideal.
    pub fn squarefree_parts(&self, m: &Matroid, side: Side) -> Arc<Vec<MonomialIdeal>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(parts) = cache.get(&(m.clone(), side)) {
                return Arc::clone(parts);
            }
        }
        let height = side_height(m, side);
        let parts: Vec<MonomialIdeal> = (1..=height)
            .map(|h| {
                matroid_ideals::sf_symbolic_skeleton(m, h, side)
                    .expect("levels 1..=height are valid")
            })
            .collect();
        let parts = Arc::new(parts);
        let mut cache = self.cache.lock().unwrap();
        cache.insert((m.clone(), side), Arc::clone(&parts));
        parts
    }

    /// The l-th symbolic power of the side ideal of `m`.
    pub fn symbolic_power(&self, m: &Matroid, l: usize, side: Side) -> MonomialIdeal {
        let n = m.n();
        if l == 0 {
            return MonomialIdeal::unit(n);
        }
        let height = side_height(m, side);
        if height == 0 {
            // rank-0 cover ideal or free-matroid Stanley-Reisner ideal
            return MonomialIdeal::zero(n);
        }
        let c = height.min(l);
        let sf = self.squarefree_parts(m, side);
        let mut gens: Vec<Monomial> = Vec::new();
        for_each_partition(l, c, &mut |parts| {
            emit_towers(&sf, parts, n, &mut gens);
        });
        #[cfg(debug_assertions)]
        self.check_structure(m, l, side, &gens);
        gens.sort_unstable();
        MonomialIdeal::from_generators_unchecked(n, gens)
    }

    #[cfg(debug_assertions)]
    fn check_structure(&self, m: &Matroid, l: usize, side: Side, gens: &[Monomial]) {
        // towers are pairwise distinct, every product is a member, and
        // dropping any variable power breaks membership
        let mut seen = std::collections::HashSet::new();
        for g in gens {
            assert!(seen.insert(g.clone()), "duplicate tower product {g:?}");
            assert!(symbolic_membership(g, m, l, side));
            for i in g.support().iter() {
                let reduced = g.checked_div(&Monomial::var(g.ambient(), i)).unwrap();
                assert!(
                    !symbolic_membership(&reduced, m, l, side),
                    "tower product {g:?} is not minimal at variable {i}"
                );
            }
        }
        // pairwise minimality is quadratic; skip it for very large outputs
        if gens.len() <= 512 {
            for (i, a) in gens.iter().enumerate() {
                for b in &gens[i + 1..] {
                    assert!(
                        !a.divides(b) && !b.divides(a),
                        "tower products are not an antichain: {a:?} vs {b:?}"
                    );
                }
            }
        }
    }
}

/// One-shot convenience wrapper around [`SymbolicEngine`].
pub fn symbolic_power(m: &Matroid, l: usize, side: Side) -> MonomialIdeal {
    SymbolicEngine::new().symbolic_power(m, l, side)
}

/// Partitions of `l` into parts `<= c`, in multiplicity form
/// `[(part, count)]` with parts strictly decreasing. Visited in decreasing
/// lexicographic order of the underlying partitions.
fn for_each_partition(l: usize, c: usize, visit: &mut impl FnMut(&[(usize, u32)])) {
    fn rec(
        remaining: usize,
        max_part: usize,
        stack: &mut Vec<(usize, u32)>,
        visit: &mut impl FnMut(&[(usize, u32)]),
    ) {
        if remaining == 0 {
            visit(stack);
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            let max_count = remaining / part;
            for count in (1..=max_count).rev() {
                stack.push((part, count as u32));
                rec(remaining - part * count, part - 1, stack, visit);
                stack.pop();
            }
        }
    }
    rec(l, c, &mut Vec::new(), visit);
}

/// Emits the product of every support-nested tuple of generators for one
/// partition. Layers with the same part value must reuse one generator, since
/// distinct minimal generators of the same squarefree part are never nested;
/// that is exactly the multiplicity form.
fn emit_towers(
    sf: &[MonomialIdeal],
    parts: &[(usize, u32)],
    n: usize,
    out: &mut Vec<Monomial>,
) {
    fn rec(
        sf: &[MonomialIdeal],
        parts: &[(usize, u32)],
        depth: usize,
        support_bound: u64,
        acc: &Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if depth == parts.len() {
            out.push(acc.clone());
            return;
        }
        let (part, count) = parts[depth];
        for g in sf[part - 1].gens() {
            let mask = g.support_mask();
            if mask & !support_bound != 0 {
                continue;
            }
            let next = acc.mul(&g.pow(count));
            rec(sf, parts, depth + 1, mask, &next, out);
        }
    }
    rec(sf, parts, 0, u64::MAX, &Monomial::one(n), out);
}

/// Membership of a monomial in the l-th symbolic power, by the cover
/// criterion: the exponents must sum to at least `l` on every basis (cover
/// side) or every basis of the dual (Stanley-Reisner side).
pub fn symbolic_membership(mon: &Monomial, m: &Matroid, l: usize, side: Side) -> bool {
    debug_assert_eq!(mon.ambient(), m.n());
    let l = l as u64;
    let degree_on = |mask: u64| -> u64 {
        mon.exponents()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e as u64)
            .sum()
    };
    let full = crate::ground::full_mask(m.n());
    match side {
        Side::Cover => m.basis_masks().iter().all(|&f| degree_on(f) >= l),
        Side::StanleyReisner => m.basis_masks().iter().all(|&f| degree_on(full & !f) >= l),
    }
}

/// The largest `t` with `mon` in the t-th symbolic power: the minimum of the
/// basis criterion sums. Zero when the support misses some basis entirely.
pub fn max_symbolic_degree(mon: &Monomial, m: &Matroid, side: Side) -> usize {
    let degree_on = |mask: u64| -> u64 {
        mon.exponents()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e as u64)
            .sum()
    };
    let full = crate::ground::full_mask(m.n());
    let min = match side {
        Side::Cover => m.basis_masks().iter().map(|&f| degree_on(f)).min(),
        Side::StanleyReisner => m.basis_masks().iter().map(|&f| degree_on(full & !f)).min(),
    };
    min.unwrap_or(0) as usize
}

/// Decomposes a minimal generator of the l-th symbolic power into its tower:
/// repeatedly peel the squarefree part of what remains.
pub fn symbolic_type_of(
    mon: &Monomial,
    m: &Matroid,
    l: usize,
    side: Side,
) -> Result<TowerDecomposition> {
    if mon.ambient() != m.n() {
        return Err(Error::MixedAmbient(m.n(), mon.ambient()));
    }
    let engine = SymbolicEngine::new();
    let sf = engine.squarefree_parts(m, side);
    let mut layers: Vec<TowerLayer> = Vec::new();
    let mut rest = mon.clone();
    let mut total = 0usize;
    while !rest.is_one() {
        let layer_gen = Monomial::from_support(rest.support());
        let level = max_symbolic_degree(&layer_gen, m, side);
        if level == 0 || level > sf.len() {
            return Err(Error::NotAMinimalGenerator(format!(
                "layer {layer_gen:?} has symbolic degree {level}"
            )));
        }
        if !sf[level - 1].is_min_gen(&layer_gen) {
            return Err(Error::NotAMinimalGenerator(format!(
                "layer {layer_gen:?} is not a minimal generator of SF_{level}"
            )));
        }
        total += level;
        match layers.last_mut() {
            Some(last) if last.generator == layer_gen => last.count += 1,
            _ => layers.push(TowerLayer { generator: layer_gen.clone(), level, count: 1 }),
        }
        rest = rest.checked_div(&layer_gen).expect("support divides");
    }
    if total != l {
        return Err(Error::NotAMinimalGenerator(format!(
            "tower levels sum to {total}, expected {l}"
        )));
    }
    debug_assert!(layers.windows(2).all(|w| {
        w[1].generator.support().is_subset_of(&w[0].generator.support())
            && w[1].level <= w[0].level
    }));
    Ok(TowerDecomposition { layers, product: mon.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::SubsetFamily;
    use crate::text::{parse_ideal, parse_monomial};

    fn running_example() -> Matroid {
        let fam = SubsetFamily::from_index_lists(
            6,
            &[vec![0, 5], vec![2, 3], vec![1, 3, 4], vec![1, 2, 4]],
        )
        .unwrap();
        Matroid::from_circuits(6, &fam).unwrap()
    }

    #[test]
    fn partitions_multiplicity_form() {
        let mut seen = Vec::new();
        for_each_partition(5, 3, &mut |p| seen.push(p.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![(3, 1), (2, 1)],
                vec![(3, 1), (1, 2)],
                vec![(2, 2), (1, 1)],
                vec![(2, 1), (1, 3)],
                vec![(1, 5)],
            ]
        );
        let mut count = 0;
        for_each_partition(20, 3, &mut |_| count += 1);
        assert_eq!(count, 44); // partitions of 20 into parts <= 3
    }

    #[test]
    fn small_powers() {
        let m = running_example();
        let i = crate::matroid_ideals::stanley_reisner(&m).ideal;
        assert_eq!(symbolic_power(&m, 0, Side::StanleyReisner), MonomialIdeal::unit(6));
        assert_eq!(symbolic_power(&m, 1, Side::StanleyReisner), i);
        let i2 = symbolic_power(&m, 2, Side::StanleyReisner);
        // bracket squares plus the squarefree part
        assert_eq!(i2.mu(), 8);
        assert!(i2.is_min_gen(&parse_monomial("a2f2", 6).unwrap()));
        assert!(i2.is_min_gen(&parse_monomial("acdf", 6).unwrap()));
    }

    #[test]
    fn named_generators_at_large_l() {
        let m = running_example();
        let g15 = parse_monomial("a7b2c6d6e2f7", 6).unwrap();
        assert!(symbolic_power(&m, 15, Side::StanleyReisner).is_min_gen(&g15));
        let g10 = parse_monomial("ab3c6d6e3f", 6).unwrap();
        assert!(symbolic_power(&m, 10, Side::StanleyReisner).is_min_gen(&g10));
    }

    #[test]
    fn membership_criterion() {
        let m = running_example();
        let full = parse_monomial("abcdef", 6).unwrap();
        assert!(symbolic_membership(&full, &m, 3, Side::StanleyReisner));
        assert!(!symbolic_membership(&full, &m, 4, Side::StanleyReisner));
        assert_eq!(max_symbolic_degree(&full, &m, Side::StanleyReisner), 3);
        let one = Monomial::one(6);
        assert!(!symbolic_membership(&one, &m, 1, Side::StanleyReisner));
        assert_eq!(max_symbolic_degree(&parse_monomial("acdf", 6).unwrap(), &m, Side::StanleyReisner), 2);
        // a variable outside the radical has symbolic degree 0
        assert_eq!(max_symbolic_degree(&parse_monomial("a", 6).unwrap(), &m, Side::StanleyReisner), 0);
        let g15 = parse_monomial("a7b2c6d6e2f7", 6).unwrap();
        assert!(symbolic_membership(&g15, &m, 15, Side::StanleyReisner));
        assert!(!symbolic_membership(&g15, &m, 16, Side::StanleyReisner));
    }

    #[test]
    fn tower_decomposition() {
        let m = running_example();
        let g10 = parse_monomial("ab3c6d6e3f", 6).unwrap();
        let tower = symbolic_type_of(&g10, &m, 10, Side::StanleyReisner).unwrap();
        assert_eq!(tower.symbolic_type(), vec![3, 2, 2, 1, 1, 1]);
        let layers: Vec<(String, usize, u32)> = tower
            .layers
            .iter()
            .map(|l| (crate::text::monomial_string(&l.generator), l.level, l.count))
            .collect();
        assert_eq!(
            layers,
            vec![
                ("abcdef".to_string(), 3, 1),
                ("bcde".to_string(), 2, 2),
                ("cd".to_string(), 1, 3),
            ]
        );
        // a generator of I itself has type (1)
        let sr = crate::matroid_ideals::stanley_reisner(&m).ideal;
        for g in sr.gens() {
            let t = symbolic_type_of(g, &m, 1, Side::StanleyReisner).unwrap();
            assert_eq!(t.symbolic_type(), vec![1]);
        }
        // (abcdef)(bcde)^2(cd) lands in the 8th symbolic power
        let g8 = parse_ideal("abcdef", Some(6))
            .unwrap()
            .gens()[0]
            .mul(&parse_monomial("bcde", 6).unwrap().pow(2))
            .mul(&parse_monomial("cd", 6).unwrap());
        let t = symbolic_type_of(&g8, &m, 8, Side::StanleyReisner).unwrap();
        assert_eq!(t.symbolic_type(), vec![3, 2, 2, 1]);
        // wrong level errors
        assert!(symbolic_type_of(&g10, &m, 9, Side::StanleyReisner).is_err());
    }

    #[test]
    fn complete_intersection_powers_coincide() {
        // disjoint circuits: ordinary and symbolic powers agree
        let ci = Matroid::from_circuits(
            4,
            &SubsetFamily::from_index_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
        )
        .unwrap();
        let i = crate::matroid_ideals::stanley_reisner(&ci).ideal;
        for l in 0..=4usize {
            assert_eq!(symbolic_power(&ci, l, Side::StanleyReisner), i.power(l as u32));
        }
    }

    #[test]
    fn degenerate_matroids() {
        let free = Matroid::free(3).unwrap();
        assert!(symbolic_power(&free, 2, Side::StanleyReisner).is_zero());
        assert_eq!(symbolic_power(&free, 0, Side::StanleyReisner), MonomialIdeal::unit(3));
        // cover side of the free matroid is the maximal ideal
        let j2 = symbolic_power(&free, 2, Side::Cover);
        assert_eq!(j2.mu(), 6);
    }
}
