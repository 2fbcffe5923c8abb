//! Shared corpus builders for the integration suites.
//!
//! The small corpus is exhaustive: every basis family on up to 5 elements
//! that passes matroid validation, deduplicated up to relabeling. The large
//! corpus adds 200 seeded pseudo-random matroids on 6 and 7 elements built
//! from uniform matroids, random sparse paving matroids, duals, truncations,
//! elongations, direct sums, and the Fano Steiner matroid.

use matroidal_core::ground::{GroundSubset, SubsetFamily};
use matroidal_core::Matroid;

/// Deterministic xorshift generator so corpus runs are reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let shorter = permutations(n - 1);
    let mut out = Vec::new();
    for p in shorter {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn relabel_mask(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << perm[i];
    }
    out
}

/// Canonical form of a basis family under relabeling: the lexicographically
/// least sorted mask list over all permutations of the ground set.
fn canonical_form(bases: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for p in perms {
        let mut relabeled: Vec<u64> = bases.iter().map(|&b| relabel_mask(b, p)).collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    }
    best.unwrap()
}

/// Every matroid of positive rank on at most `max_n` elements, one
/// representative per relabeling class.
pub fn exhaustive_small_matroids(max_n: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let perms = permutations(n);
        let mut seen = std::collections::HashSet::new();
        for r in 1..=n {
            let r_subsets = k_subsets(n, r);
            let families = 1u64 << r_subsets.len();
            for pick in 1..families {
                let bases: Vec<u64> = r_subsets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| pick >> i & 1 == 1)
                    .map(|(_, &m)| m)
                    .collect();
                let family = SubsetFamily::from_masks(n, bases.clone());
                let Ok(m) = Matroid::from_bases(n, &family) else { continue };
                if seen.insert(canonical_form(family.masks(), &perms)) {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<u64>) {
        if current.len() == k {
            out.push(current.iter().fold(0u64, |acc, &i| acc | 1 << i));
            return;
        }
        for i in start..n {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 0, &mut current, &mut out);
    out
}

fn random_subset_of_size(rng: &mut Rng, n: usize, k: usize) -> u64 {
    let mut mask = 0u64;
    while (mask.count_ones() as usize) < k {
        mask |= 1 << rng.below(n);
    }
    mask
}

/// A random sparse paving matroid: remove a random family of pairwise
/// far-apart rank-size subsets (circuit-hyperplanes) from the uniform matroid.
fn random_sparse_paving(rng: &mut Rng, n: usize, r: usize) -> Option<Matroid> {
    let all = k_subsets(n, r);
    let mut removed: Vec<u64> = Vec::new();
    let attempts = rng.below(6) + 1;
    for _ in 0..attempts {
        let cand = random_subset_of_size(rng, n, r);
        if removed.iter().all(|&b| ((b & cand).count_ones() as usize) < r - 1) {
            removed.push(cand);
        }
    }
    let bases: Vec<u64> = all.into_iter().filter(|m| !removed.contains(m)).collect();
    if bases.is_empty() {
        return None;
    }
    Matroid::from_bases(n, &SubsetFamily::from_masks(n, bases)).ok()
}

pub fn fano_matroid() -> Matroid {
    let blocks: Vec<Vec<usize>> = [
        [0, 1, 2], [0, 3, 6], [0, 4, 5], [1, 3, 5], [1, 4, 6], [2, 3, 4], [2, 5, 6],
    ]
    .iter()
    .map(|b| b.to_vec())
    .collect();
    Matroid::steiner(7, 2, 3, &SubsetFamily::from_index_lists(7, &blocks).unwrap()).unwrap()
}

/// `count` distinct pseudo-random matroids on 6 or 7 elements.
pub fn random_matroids(seed: u64, count: usize, small_pool: &[Matroid]) -> Vec<Matroid> {
    let mut rng = Rng::new(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out: Vec<Matroid> = Vec::new();
    let sum_pool: Vec<&Matroid> =
        small_pool.iter().filter(|m| m.n() >= 2 && m.n() <= 5).collect();
    while out.len() < count {
        let n = 6 + rng.below(2);
        let candidate: Option<Matroid> = match rng.below(6) {
            0 => Matroid::uniform(n, 1 + rng.below(n)).ok(),
            1 => {
                let r = 2 + rng.below(n - 2);
                random_sparse_paving(&mut rng, n, r)
            }
            2 => {
                // direct sum reaching n elements
                let a = sum_pool[rng.below(sum_pool.len())];
                if a.n() + 1 > n {
                    None
                } else {
                    let rest = n - a.n();
                    let pick: Vec<&&Matroid> =
                        sum_pool.iter().filter(|m| m.n() == rest).collect();
                    if pick.is_empty() {
                        None
                    } else {
                        a.direct_sum(pick[rng.below(pick.len())]).ok()
                    }
                }
            }
            3 => out.last().map(|m| m.dual()),
            4 => out.last().and_then(|m| {
                if m.n() != n {
                    return None;
                }
                if rng.below(2) == 0 {
                    let h = rng.below(m.rank() + 1);
                    m.truncation(h).ok().filter(|t| t.rank() > 0)
                } else {
                    let h = rng.below(m.corank() + 1);
                    m.elongation(h).ok()
                }
            }),
            _ => {
                if n == 7 {
                    Some(fano_matroid())
                } else {
                    random_sparse_paving(&mut rng, 6, 3)
                }
            }
        };
        let Some(m) = candidate else { continue };
        if m.n() < 6 || m.rank() == 0 {
            continue;
        }
        // random relabeling for variety
        let perm = {
            let mut p: Vec<usize> = (0..m.n()).collect();
            for i in (1..p.len()).rev() {
                p.swap(i, rng.below(i + 1));
            }
            p
        };
        let masks: Vec<u64> =
            m.bases().masks().iter().map(|&b| relabel_mask(b, &perm)).collect();
        let relabeled =
            Matroid::from_bases(m.n(), &SubsetFamily::from_masks(m.n(), masks)).unwrap();
        if seen.insert((relabeled.n(), relabeled.bases().masks().to_vec())) {
            out.push(relabeled);
        }
    }
    out
}

#[allow(dead_code)]
pub fn ground(n: usize, members: &[usize]) -> GroundSubset {
    GroundSubset::new(n, members).unwrap()
}
