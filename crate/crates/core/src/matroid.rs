//! Matroids on `{0,..,n-1}`, stored by their bases and validated eagerly.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ground::{full_mask, k_subset_masks, submasks_of_size, GroundSubset, SubsetFamily};

/// A matroid given by its family of bases, identified with its independence
/// complex. Construction always runs the full basis-exchange check, so every
/// value of this type is a genuine matroid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    /// sorted ascending as integers under the bitmask encoding
    bases: Vec<u64>,
}

impl Matroid {
    /// Validates equicardinality and the basis-exchange axiom.
    pub fn from_bases(n: usize, bases: &SubsetFamily) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        if n == 0 {
            return Err(Error::ParameterOutOfRange("ground set must be nonempty".into()));
        }
        if bases.n() != n {
            return Err(Error::MixedAmbient(n, bases.n()));
        }
        if bases.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let masks = bases.masks().to_vec();
        let rank = masks[0].count_ones() as usize;
        for &b in &masks {
            if b.count_ones() as usize != rank {
                return Err(Error::NotAMatroid(format!(
                    "bases {} and {} have different sizes",
                    GroundSubset::from_mask(n, masks[0]),
                    GroundSubset::from_mask(n, b),
                )));
            }
        }
        let m = Matroid { n, rank, bases: masks };
        m.validate_exchange()?;
        Ok(m)
    }

    /// Builds the matroid defined by a circuit family, checking the circuit
    /// axioms (nonempty members, antichain, elimination).
    pub fn from_circuits(n: usize, circuits: &SubsetFamily) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        if n == 0 {
            return Err(Error::ParameterOutOfRange("ground set must be nonempty".into()));
        }
        if circuits.n() != n {
            return Err(Error::MixedAmbient(n, circuits.n()));
        }
        if n > 24 {
            return Err(Error::ParameterOutOfRange(
                "circuit-based construction enumerates subsets; n <= 24 required".into(),
            ));
        }
        let masks = circuits.masks();
        for &c in masks {
            if c == 0 {
                return Err(Error::NotAMatroid("the empty set cannot be a circuit".into()));
            }
        }
        if !circuits.is_antichain() {
            return Err(Error::NotAMatroid("circuit family is not an antichain".into()));
        }
        // elimination axiom
        for (i, &c1) in masks.iter().enumerate() {
            for &c2 in &masks[i + 1..] {
                let common = c1 & c2;
                if common == 0 {
                    continue;
                }
                let union = c1 | c2;
                let mut x = common;
                while x != 0 {
                    let elem = x & x.wrapping_neg();
                    x &= x - 1;
                    let target = union & !elem;
                    if !masks.iter().any(|&c3| c3 & !target == 0) {
                        return Err(Error::NotAMatroid(format!(
                            "circuit elimination fails for {} and {} at element {}",
                            GroundSubset::from_mask(n, c1),
                            GroundSubset::from_mask(n, c2),
                            elem.trailing_zeros(),
                        )));
                    }
                }
            }
        }
        // independent = contains no circuit; bases = maximal independents
        let is_independent =
            |s: u64| -> bool { !masks.iter().any(|&c| c & !s == 0) };
        for r in (0..=n).rev() {
            let bases: Vec<u64> =
                k_subset_masks(n, r).into_iter().filter(|&s| is_independent(s)).collect();
            if !bases.is_empty() {
                let m = Matroid { n, rank: r, bases };
                m.validate_exchange().map_err(|e| {
                    Error::NotAMatroid(format!("maximal independent sets fail exchange: {e}"))
                })?;
                if m.circuits().masks() != masks {
                    return Err(Error::NotAMatroid(
                        "derived circuit family disagrees with the input".into(),
                    ));
                }
                return Ok(m);
            }
        }
        unreachable!("the empty set is independent");
    }

    /// The uniform matroid U(c, n): every c-subset is a basis.
    pub fn uniform(n: usize, c: usize) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::GroundSetTooLarge(n.max(1)));
        }
        if c > n {
            return Err(Error::ParameterOutOfRange(format!("rank {c} exceeds ground size {n}")));
        }
        Ok(Matroid { n, rank: c, bases: k_subset_masks(n, c) })
    }

    pub fn free(n: usize) -> Result<Self> {
        Matroid::uniform(n, n)
    }

    /// The sparse paving matroid of a Steiner system S(n, d, t): bases are the
    /// t-subsets that are not blocks.
    pub fn steiner(n: usize, d: usize, t: usize, blocks: &SubsetFamily) -> Result<Self> {
        if blocks.n() != n {
            return Err(Error::MixedAmbient(n, blocks.n()));
        }
        if !(d < t && t < n) {
            return Err(Error::InvalidSteinerSystem(format!(
                "parameters must satisfy d < t < n, got ({n}, {d}, {t})"
            )));
        }
        for b in blocks.iter() {
            if b.len() != t {
                return Err(Error::InvalidSteinerSystem(format!(
                    "block {b} does not have {t} elements"
                )));
            }
        }
        for dmask in k_subset_masks(n, d) {
            let cover = blocks.masks().iter().filter(|&&b| dmask & !b == 0).count();
            if cover != 1 {
                return Err(Error::InvalidSteinerSystem(format!(
                    "{}-subset {} lies in {} blocks, expected exactly one",
                    d,
                    GroundSubset::from_mask(n, dmask),
                    cover,
                )));
            }
        }
        let bases: Vec<u64> = k_subset_masks(n, t)
            .into_iter()
            .filter(|m| !blocks.contains_mask(*m))
            .collect();
        if bases.is_empty() {
            return Err(Error::InvalidSteinerSystem("every t-subset is a block".into()));
        }
        let m = Matroid { n, rank: t, bases };
        m.validate_exchange()
            .map_err(|e| Error::InvalidSteinerSystem(format!("non-block t-subsets: {e}")))?;
        Ok(m)
    }

    fn validate_exchange(&self) -> Result<()> {
        let lookup: HashSet<u64> = self.bases.iter().copied().collect();
        for &f in &self.bases {
            for &g in &self.bases {
                if f == g {
                    continue;
                }
                let mut fg = f & !g;
                while fg != 0 {
                    let v = fg & fg.wrapping_neg();
                    fg &= fg - 1;
                    let stripped = f & !v;
                    let mut gf = g & !f;
                    let mut found = false;
                    while gf != 0 {
                        let w = gf & gf.wrapping_neg();
                        gf &= gf - 1;
                        if lookup.contains(&(stripped | w)) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Err(Error::NotAMatroid(format!(
                            "exchange fails for bases {}, {} at element {}",
                            GroundSubset::from_mask(self.n, f),
                            GroundSubset::from_mask(self.n, g),
                            v.trailing_zeros(),
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> SubsetFamily {
        SubsetFamily::from_masks(self.n, self.bases.clone())
    }

    pub(crate) fn basis_masks(&self) -> &[u64] {
        &self.bases
    }

    pub fn is_basis(&self, set: GroundSubset) -> bool {
        self.bases.binary_search(&set.mask()).is_ok()
    }

    /// Rank of a subset: the maximum over bases of `|F ∩ A|` (valid by the
    /// exchange property, and bases are the stored representation).
    pub fn rank_of(&self, set: GroundSubset) -> usize {
        debug_assert_eq!(set.n(), self.n);
        self.rank_of_mask(set.mask())
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        self.bases.iter().map(|&f| (f & mask).count_ones()).max().unwrap_or(0) as usize
    }

    pub fn is_independent(&self, set: GroundSubset) -> bool {
        self.rank_of(set) == set.len()
    }

    /// Closure: elements whose addition does not raise the rank.
    pub fn closure(&self, set: GroundSubset) -> GroundSubset {
        let r = self.rank_of(set);
        let mut mask = set.mask();
        for i in 0..self.n {
            if mask >> i & 1 == 0 && self.rank_of_mask(mask | 1 << i) == r {
                mask |= 1 << i;
            }
        }
        // closure is computed in one sweep: adding a non-raising element never
        // makes another element rank-raising
        GroundSubset::from_mask(self.n, mask)
    }

    /// All flats of the given rank, as closures of independent sets of that size.
    pub fn flats_of_rank(&self, r: usize) -> Result<SubsetFamily> {
        if r > self.rank {
            return Err(Error::RankOutOfRange { rank: r, max: self.rank });
        }
        let mut flats = HashSet::new();
        for mask in k_subset_masks(self.n, r) {
            if self.rank_of_mask(mask) == r {
                flats.insert(self.closure(GroundSubset::from_mask(self.n, mask)).mask());
            }
        }
        Ok(SubsetFamily::from_masks(self.n, flats.into_iter().collect()))
    }

    /// Flats of rank `rank - 1`.
    pub fn hyperplanes(&self) -> Result<SubsetFamily> {
        if self.rank == 0 {
            return Err(Error::RankOutOfRange { rank: 0, max: 0 });
        }
        self.flats_of_rank(self.rank - 1)
    }

    /// Minimal dependent sets, by increasing-cardinality enumeration.
    pub fn circuits(&self) -> SubsetFamily {
        let mut circuits: Vec<u64> = Vec::new();
        for k in 1..=(self.rank + 1).min(self.n) {
            for mask in k_subset_masks(self.n, k) {
                if self.rank_of_mask(mask) < k && !circuits.iter().any(|&c| c & !mask == 0) {
                    circuits.push(mask);
                }
            }
        }
        SubsetFamily::from_masks(self.n, circuits)
    }

    pub fn cocircuits(&self) -> SubsetFamily {
        self.dual().circuits()
    }

    /// Minimal circuit size; `None` for a free matroid (no dependent sets).
    pub fn girth(&self) -> Option<usize> {
        (1..=(self.rank + 1).min(self.n))
            .find(|&k| k_subset_masks(self.n, k).into_iter().any(|m| self.rank_of_mask(m) < k))
    }

    pub fn loops(&self) -> GroundSubset {
        let union = self.bases.iter().fold(0u64, |acc, &b| acc | b);
        GroundSubset::from_mask(self.n, !union & full_mask(self.n))
    }

    pub fn coloops(&self) -> GroundSubset {
        let inter = self.bases.iter().fold(full_mask(self.n), |acc, &b| acc & b);
        GroundSubset::from_mask(self.n, inter)
    }

    pub fn has_loops(&self) -> bool {
        !self.loops().is_empty()
    }

    pub fn has_coloops(&self) -> bool {
        !self.coloops().is_empty()
    }

    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u128 == crate::ground::binomial(self.n, self.rank)
    }

    pub fn is_free(&self) -> bool {
        self.rank == self.n
    }

    /// All circuits have size at least the rank.
    pub fn is_paving(&self) -> bool {
        self.girth().is_none_or(|g| g >= self.rank)
    }

    pub fn is_sparse_paving(&self) -> bool {
        self.is_paving() && self.dual().is_paving()
    }

    pub fn dual(&self) -> Matroid {
        let full = full_mask(self.n);
        let mut bases: Vec<u64> = self.bases.iter().map(|&b| !b & full).collect();
        bases.sort_unstable();
        Matroid { n: self.n, rank: self.n - self.rank, bases }
    }

    /// The h-th truncation: bases are the independent sets of size `rank - h`.
    pub fn truncation(&self, h: usize) -> Result<Matroid> {
        if h > self.rank {
            return Err(Error::ParameterOutOfRange(format!(
                "truncation by {h} of a rank-{} matroid",
                self.rank
            )));
        }
        if h == 0 {
            return Ok(self.clone());
        }
        let k = self.rank - h;
        let mut bases = HashSet::new();
        for &b in &self.bases {
            for sub in submasks_of_size(b, k) {
                bases.insert(sub);
            }
        }
        let mut bases: Vec<u64> = bases.into_iter().collect();
        bases.sort_unstable();
        let m = Matroid { n: self.n, rank: k, bases };
        debug_assert!(m.validate_exchange().is_ok());
        Ok(m)
    }

    /// The h-th elongation: independent sets are the subsets `H` with
    /// `|H| - rank(H) <= h`, so bases are the `(rank + h)`-subsets of full rank.
    pub fn elongation(&self, h: usize) -> Result<Matroid> {
        if h > self.corank() {
            return Err(Error::ParameterOutOfRange(format!(
                "elongation by {h} of a corank-{} matroid",
                self.corank()
            )));
        }
        if h == 0 {
            return Ok(self.clone());
        }
        let k = self.rank + h;
        let bases: Vec<u64> = k_subset_masks(self.n, k)
            .into_iter()
            .filter(|&s| self.rank_of_mask(s) == self.rank)
            .collect();
        let m = Matroid { n: self.n, rank: k, bases };
        debug_assert!(m.validate_exchange().is_ok());
        Ok(m)
    }

    /// Restriction to `set`, relabeled onto `{0,..,|set|-1}` preserving order.
    pub fn restriction(&self, set: GroundSubset) -> Result<Matroid> {
        if set.n() != self.n {
            return Err(Error::MixedAmbient(self.n, set.n()));
        }
        if set.is_empty() {
            return Err(Error::ParameterOutOfRange("restriction to the empty set".into()));
        }
        let elements = set.indices();
        let r = self.rank_of(set);
        let mut bases = HashSet::new();
        for &b in &self.bases {
            let hit = b & set.mask();
            if (hit.count_ones() as usize) == r {
                // compress onto the restricted ground set
                let mut compact = 0u64;
                for (new_i, &old_i) in elements.iter().enumerate() {
                    if hit >> old_i & 1 == 1 {
                        compact |= 1 << new_i;
                    }
                }
                bases.insert(compact);
            }
        }
        let mut bases: Vec<u64> = bases.into_iter().collect();
        bases.sort_unstable();
        let m = Matroid { n: elements.len(), rank: r, bases };
        debug_assert!(m.validate_exchange().is_ok());
        Ok(m)
    }

    /// Direct sum on the disjoint union, `other` relabeled after `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &f in &self.bases {
            for &g in &other.bases {
                bases.push(f | g << self.n);
            }
        }
        bases.sort_unstable();
        let m = Matroid { n, rank: self.rank + other.rank, bases };
        debug_assert!(m.validate_exchange().is_ok());
        Ok(m)
    }

    /// Connected components: two elements are equivalent when some circuit
    /// contains both; loops and coloops are singleton components.
    pub fn connected_components(&self) -> Vec<(GroundSubset, Matroid)> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let root = find(parent, parent[i]);
                parent[i] = root;
            }
            parent[i]
        }
        for c in self.circuits().iter() {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for other in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<(usize, u64)> = Vec::new();
        for i in 0..self.n {
            let root = find(&mut parent, i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, mask)) => *mask |= 1 << i,
                None => groups.push((root, 1 << i)),
            }
        }
        groups.sort_by_key(|&(_, mask)| mask.trailing_zeros());
        groups
            .into_iter()
            .map(|(_, mask)| {
                let set = GroundSubset::from_mask(self.n, mask);
                let restricted = self.restriction(set).expect("component is nonempty");
                (set, restricted)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }
}

/// Property (*) of a facet family: for every `A ⊆ [n]` and facet `F` there is
/// a facet `G` with `|A - G|` minimal and `A - G ⊆ A - F`. Holds exactly for
/// matroids; the input family need not be validated.
pub fn check_star_property(family: &SubsetFamily) -> bool {
    let n = family.n();
    let facets = family.masks();
    if facets.is_empty() {
        return false;
    }
    for a in 0..=full_mask(n) {
        let h_a = facets.iter().map(|&h| (a & !h).count_ones()).min().unwrap();
        for &f in facets {
            let a_minus_f = a & !f;
            let ok = facets
                .iter()
                .any(|&g| (a & !g).count_ones() == h_a && (a & !g) & !a_minus_f == 0);
            if !ok {
                return false;
            }
        }
        if a == full_mask(n) {
            break;
        }
    }
    true
}

/// Property (*^*): the intersection-side dual of property (*).
pub fn check_star_star_property(family: &SubsetFamily) -> bool {
    let n = family.n();
    let facets = family.masks();
    if facets.is_empty() {
        return false;
    }
    for a in 0..=full_mask(n) {
        let c_a = facets.iter().map(|&h| (a & h).count_ones()).min().unwrap();
        for &f in facets {
            let a_cap_f = a & f;
            let ok = facets
                .iter()
                .any(|&g| (a & g).count_ones() == c_a && (a & g) & !a_cap_f == 0);
            if !ok {
                return false;
            }
        }
        if a == full_mask(n) {
            break;
        }
    }
    true
}
