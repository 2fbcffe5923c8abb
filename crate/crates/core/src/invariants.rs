//! Closed-form invariants of matroid ideals: symbolic defects, the circuit
//! graph, Noether numbers, initial degrees, Waldschmidt constants, the
//! uniformity threshold, paving characterizations, and resurgence bounds.
//!
//! Operations that evaluate several proved-equivalent conditions check that
//! the routes agree and fail loudly when they do not.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::ground::binomial;
use crate::ideal::MonomialIdeal;
use crate::matroid::Matroid;
use crate::matroid_ideals::{cover_ideal, side_height, side_ideal};
use crate::oracle;
use crate::sympow::{Side, SymbolicEngine};

/// Intersection graph of a family of supports: one vertex per circuit
/// (= generator support), edges between intersecting pairs.
#[derive(Clone, Debug)]
pub struct CircuitGraph {
    supports: Vec<u64>,
}

impl CircuitGraph {
    pub fn from_supports(supports: Vec<u64>) -> Self {
        CircuitGraph { supports }
    }

    /// Circuit graph of a matroid: vertices labeled by circuits.
    pub fn of_matroid(m: &Matroid) -> Self {
        CircuitGraph { supports: m.circuits().masks().to_vec() }
    }

    /// Intersection graph of the generator supports of an ideal, vertex i
    /// labeling the i-th canonical generator. For the Stanley-Reisner ideal
    /// of a matroid this is exactly the circuit graph.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Self {
        CircuitGraph {
            supports: ideal.gens().iter().map(crate::monomial::Monomial::support_mask).collect(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.supports.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.supports[i] & self.supports[j] != 0
    }

    /// Every pair of disjoint circuits admits a third circuit inside their
    /// union meeting both.
    pub fn is_2_locally_connected(&self) -> bool {
        let s = &self.supports;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] & s[j] != 0 {
                    continue;
                }
                let union = s[i] | s[j];
                let ok = (0..s.len()).any(|k| {
                    k != i && k != j && s[k] & !union == 0 && s[k] & s[i] != 0 && s[k] & s[j] != 0
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Every q pairwise-disjoint circuits admit a common neighbor.
    pub fn is_q_locally_star_connected(&self, q: usize) -> bool {
        self.star_centers(q, false)
    }

    /// Stronger variant: the common neighbor must lie inside the union of
    /// the chosen circuits. At q = 2 this is exactly the locally connected
    /// 2-path condition, and it forces `a_r = 0` for all `r >= q`.
    pub fn has_local_star_centers(&self, q: usize) -> bool {
        self.star_centers(q, true)
    }

    fn star_centers(&self, q: usize, within_union: bool) -> bool {
        assert!(q >= 2, "q-local star connectivity needs q >= 2");
        let s = &self.supports;
        let mut chosen: Vec<usize> = Vec::with_capacity(q);
        fn rec(
            s: &[u64],
            q: usize,
            within_union: bool,
            start: usize,
            union: u64,
            chosen: &mut Vec<usize>,
        ) -> bool {
            if chosen.len() == q {
                return (0..s.len()).any(|k| {
                    !chosen.contains(&k)
                        && (!within_union || s[k] & !union == 0)
                        && chosen.iter().all(|&i| s[k] & s[i] != 0)
                });
            }
            for v in start..s.len() {
                if chosen.iter().all(|&i| s[i] & s[v] == 0) {
                    chosen.push(v);
                    if !rec(s, q, within_union, v + 1, union | s[v], chosen) {
                        return false;
                    }
                    chosen.pop();
                }
            }
            true
        }
        rec(s, q, within_union, 0, 0, &mut chosen)
    }

    /// Maximum number of pairwise disjoint circuits (branch and bound).
    pub fn max_independent_set(&self) -> usize {
        let s = &self.supports;
        fn rec(s: &[u64], start: usize, used: u64, size: usize, best: &mut usize) {
            *best = (*best).max(size);
            if size + (s.len() - start) <= *best {
                return;
            }
            for v in start..s.len() {
                if s[v] & used == 0 {
                    rec(s, v + 1, used | s[v], size + 1, best);
                }
            }
        }
        let mut best = 0;
        rec(s, 0, 0, 0, &mut best);
        best
    }

    /// Visits every set of exactly `r` pairwise disjoint circuits.
    fn for_each_independent_set(&self, r: usize, visit: &mut impl FnMut(&[usize])) {
        let s = &self.supports;
        fn rec(
            s: &[u64],
            r: usize,
            start: usize,
            used: u64,
            chosen: &mut Vec<usize>,
            visit: &mut impl FnMut(&[usize]),
        ) {
            if chosen.len() == r {
                visit(chosen);
                return;
            }
            if s.len() - start < r - chosen.len() {
                return;
            }
            for v in start..s.len() {
                if s[v] & used == 0 {
                    chosen.push(v);
                    rec(s, r, v + 1, used | s[v], chosen, visit);
                    chosen.pop();
                }
            }
        }
        rec(s, r, 0, 0, &mut Vec::new(), visit);
    }
}

pub fn circuit_graph(m: &Matroid) -> CircuitGraph {
    CircuitGraph::of_matroid(m)
}

/// Monomial grade: the maximal length of a pairwise support-disjoint sequence
/// of minimal generators, i.e. an independent set of the circuit graph.
pub fn mgrade(ideal: &MonomialIdeal) -> usize {
    CircuitGraph::of_ideal(ideal).max_independent_set()
}

/// `a_r = |SF(I^r) ∩ G(I^(r))|`: products of r pairwise-disjoint minimal
/// generators that stay minimal in the r-th symbolic power.
pub fn a_r(ideal: &MonomialIdeal, r: usize, symb_r: &MonomialIdeal) -> u64 {
    let graph = CircuitGraph::of_ideal(ideal);
    let gens = ideal.gens();
    let mut count = 0u64;
    graph.for_each_independent_set(r, &mut |chosen| {
        let mut product = gens[chosen[0]].clone();
        for &i in &chosen[1..] {
            product = product.mul(&gens[i]);
        }
        if symb_r.is_min_gen(&product) {
            count += 1;
        }
    });
    count
}

/// The table `r -> a_r` for `r = 1..=mgrade`, computing the needed symbolic
/// powers with the engine (for C-matroidal input) or the raw oracle.
pub fn a_table(ideal: &MonomialIdeal, symb: impl Fn(usize) -> MonomialIdeal) -> BTreeMap<usize, u64> {
    let mg = mgrade(ideal);
    (1..=mg).map(|r| (r, a_r(ideal, r, &symb(r)))).collect()
}

/// The symbolic-defect formula
/// `sdefect(I, l) = mu(I^(l)) - sum_r a_r * C(l-1, l-r)`.
///
/// Exact for C-matroidal ideals; for general squarefree ideals it can
/// diverge from the true defect (that divergence is itself a documented test
/// case).
pub fn sdefect_formula(
    l: usize,
    symb_l: &MonomialIdeal,
    a_table: &BTreeMap<usize, u64>,
) -> i64 {
    let mut sum = 0i64;
    for (&r, &a) in a_table {
        if r <= l {
            sum += a as i64 * binomial(l - 1, l - r) as i64;
        }
    }
    symb_l.mu() as i64 - sum
}

/// Report for the maximal-symbolic-defect characterization.
#[derive(Clone, Debug, Serialize)]
pub struct MaxSdefectReport {
    pub is_maximal: bool,
    /// The five equivalent conditions, evaluated independently: 2-local
    /// connectivity of the circuit graph, maximal defect for all levels
    /// (sampled at l = 2, 3), maximal defect for some level in {2, 3}, the
    /// l = 2 defect equality, and the divisor condition on disjoint pairs.
    pub conditions: [bool; 5],
    /// Upper bound `mu(I^(l)) - mu(I)` on the l-th symbolic defect, per level.
    pub bounds: BTreeMap<usize, u64>,
}

/// Evaluates the five equivalent characterizations of maximal symbolic
/// defects for the side ideal of a matroid and checks that they agree.
pub fn max_sdefect_report(m: &Matroid, side: Side) -> Result<MaxSdefectReport> {
    let ideal = side_ideal(m, side);
    if !ideal.is_proper() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let engine = SymbolicEngine::new();
    let graph = CircuitGraph::of_ideal(&ideal);
    let two_local = graph.is_2_locally_connected();

    let mut bounds = BTreeMap::new();
    let mut maximal_at = BTreeMap::new();
    for l in 2..=3usize {
        let symb = engine.symbolic_power(m, l, side);
        let bound = (symb.mu() - ideal.mu()) as u64;
        maximal_at.insert(l, oracle::sdefect_direct(&ideal, l, &symb) == bound);
        bounds.insert(l, bound);
    }

    let gens = ideal.gens();
    let mut divisor_condition = true;
    'pairs: for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if gens[i].support_mask() & gens[j].support_mask() != 0 {
                continue;
            }
            let product = gens[i].mul(&gens[j]);
            let witness = gens
                .iter()
                .enumerate()
                .any(|(k, g)| k != i && k != j && g.divides(&product));
            if !witness {
                divisor_condition = false;
                break 'pairs;
            }
        }
    }

    let conditions = [
        two_local,
        maximal_at.values().all(|&b| b),
        maximal_at.values().any(|&b| b),
        maximal_at[&2],
        divisor_condition,
    ];
    if conditions.iter().any(|&c| c != two_local) {
        return Err(Error::InternalInconsistency(format!(
            "maximal-defect routes disagree: {conditions:?}"
        )));
    }
    Ok(MaxSdefectReport { is_maximal: two_local, conditions, bounds })
}

/// Symbolic Noether number of the cover ideal: the maximum rank of a
/// connected component.
pub fn noether_number(m: &Matroid) -> usize {
    m.connected_components().iter().map(|(_, c)| c.rank()).max().unwrap_or(0)
}

/// Noether number of the side ideal; the Stanley-Reisner side is the cover
/// side of the dual.
pub fn noether_number_side(m: &Matroid, side: Side) -> usize {
    match side {
        Side::Cover => noether_number(m),
        Side::StanleyReisner => noether_number(&m.dual()),
    }
}

/// Initial degree `alpha(I^(l))` via the unbounded-knapsack recurrence over
/// the squarefree-part degrees: minimize `sum a_h * alpha(SF_h)` subject to
/// `sum h * a_h = l`.
pub fn alpha_symbolic(m: &Matroid, l: usize, side: Side) -> Result<u64> {
    if l == 0 {
        return Ok(0);
    }
    let alphas = sf_alphas(m, side)?;
    Ok(alpha_knapsack(&alphas, l))
}

/// `alpha(SF_h)` for `h = 1..=height`, cross-checked against the
/// circuit-girth description on small ground sets.
fn sf_alphas(m: &Matroid, side: Side) -> Result<Vec<u64>> {
    let height = side_height(m, side);
    if height == 0 {
        return Err(Error::ZeroIdeal);
    }
    let engine = SymbolicEngine::new();
    let sf = engine.squarefree_parts(m, side);
    let alphas: Vec<u64> =
        sf.iter().map(|i| i.alpha().expect("squarefree parts are nonzero")).collect();
    // c_h is also the smallest circuit of the elongation of the
    // Stanley-Reisner matroid to rank n - c + h - 1
    if m.n() <= 12 {
        let sr_matroid = match side {
            Side::StanleyReisner => m.clone(),
            Side::Cover => m.dual(),
        };
        for (idx, &alpha) in alphas.iter().enumerate() {
            let elongated = sr_matroid.elongation(idx)?;
            let girth = elongated.girth().map(|g| g as u64);
            if girth != Some(alpha) {
                return Err(Error::InternalInconsistency(format!(
                    "alpha(SF_{}) = {} but the elongation girth is {:?}",
                    idx + 1,
                    alpha,
                    girth
                )));
            }
        }
    }
    Ok(alphas)
}

fn alpha_knapsack(alphas: &[u64], l: usize) -> u64 {
    let c = alphas.len();
    let mut dp = vec![u64::MAX; l + 1];
    dp[0] = 0;
    for x in 1..=l {
        for h in 1..=c.min(x) {
            if dp[x - h] != u64::MAX {
                dp[x] = dp[x].min(dp[x - h] + alphas[h - 1]);
            }
        }
    }
    debug_assert_ne!(dp[l], u64::MAX, "h = 1 always provides a solution");
    dp[l]
}

/// The Waldschmidt constant as an exact fraction:
/// `min over 1 <= h <= height of alpha(SF_h) / h`.
///
/// The uniformity-threshold refinement and the paving and sparse-paving
/// shortcuts are evaluated alongside and must agree.
pub fn waldschmidt(m: &Matroid, side: Side) -> Result<Fraction> {
    let alphas = sf_alphas(m, side)?;
    let result = alphas
        .iter()
        .enumerate()
        .map(|(idx, &a)| Fraction::ratio(a, idx as u64 + 1))
        .min()
        .expect("height >= 1");

    // the matroid whose cover ideal this is
    let cover_side = match side {
        Side::Cover => m.clone(),
        Side::StanleyReisner => m.dual(),
    };
    let n = cover_side.n() as u64;
    let c = cover_side.rank() as u64;
    if !cover_side.has_loops() && !cover_side.is_uniform() {
        if let Some(ut) = uniformity_threshold(&cover_side) {
            let mut candidates: Vec<Fraction> = (1..ut)
                .map(|h| Fraction::ratio(alphas[h - 1], h as u64))
                .collect();
            candidates.push(Fraction::ratio(n, c));
            let refined = candidates.into_iter().min().expect("nonempty");
            if refined != result {
                return Err(Error::InternalInconsistency(format!(
                    "uniformity-threshold refinement gives {refined}, full minimum {result}"
                )));
            }
        }
        if cover_side.is_paving() {
            let shortcut = Fraction::ratio(alphas[0], 1).min(Fraction::ratio(n, c));
            if shortcut != result {
                return Err(Error::InternalInconsistency(format!(
                    "paving shortcut gives {shortcut}, full minimum {result}"
                )));
            }
        }
        if cover_side.is_sparse_paving() {
            let shortcut = if cover_side.has_coloops() {
                Fraction::from_integer(1)
            } else {
                Fraction::ratio(n, c)
            };
            if shortcut != result {
                return Err(Error::InternalInconsistency(format!(
                    "sparse-paving shortcut gives {shortcut}, full minimum {result}"
                )));
            }
        }
    }
    if cover_side.is_uniform() && result != Fraction::ratio(n, c) {
        return Err(Error::InternalInconsistency(format!(
            "uniform matroid should have Waldschmidt constant {n}/{c}, got {result}"
        )));
    }
    Ok(result)
}

/// The least `u` for which the (u-1)-truncation is uniform; `None` (infinity)
/// exactly when the matroid has loops.
pub fn uniformity_threshold(m: &Matroid) -> Option<usize> {
    if m.rank() == 0 {
        // every element is a loop; no skeleton of positive rank exists
        return None;
    }
    for u in 1..=m.rank() {
        if m.truncation(u - 1).map(|t| t.is_uniform()).unwrap_or(false) {
            debug_assert!(!m.has_loops());
            return Some(u);
        }
    }
    debug_assert!(m.has_loops());
    None
}

/// The five equivalent paving characterizations of the cover ideal
/// (paving matroid; all SF_l star configurations; all alpha(SF_l) = n-c+l;
/// the l = 2 instances of both). Returns the five booleans, which must agree.
pub fn paving_equivalences(m: &Matroid) -> Result<[bool; 5]> {
    let c = m.rank();
    let n = m.n();
    if c <= 1 {
        return Err(Error::ParameterOutOfRange(
            "paving characterization needs rank > 1".into(),
        ));
    }
    let engine = SymbolicEngine::new();
    let sf = engine.squarefree_parts(m, Side::Cover);
    let is_star = |l: usize| -> bool {
        // SF_l is a star configuration of height c - l + 1 iff the
        // (l-1)-truncation is uniform
        let uniform = Matroid::uniform(n, c - l + 1).expect("valid rank");
        sf[l - 1] == cover_ideal(&uniform).ideal
    };
    let alpha_is = |l: usize| -> bool {
        sf[l - 1].alpha().expect("nonzero") == (n - c + l) as u64
    };
    let conds = [
        m.is_paving(),
        (2..=c).all(is_star),
        (2..=c).all(alpha_is),
        is_star(2),
        alpha_is(2),
    ];
    if conds.iter().any(|&b| b != conds[0]) {
        return Err(Error::InternalInconsistency(format!(
            "paving characterizations disagree: {conds:?}"
        )));
    }
    Ok(conds)
}

/// Lower and upper bounds on the resurgence of (specializations of) the side
/// ideal: `max h*c_1/c_h` from below and the point-configuration bound
/// `max h*(n-c+1)/c_h` from above, with `c_h = alpha(SF_h)`.
#[derive(Clone, Debug, Serialize)]
pub struct ResurgenceBounds {
    pub lower: Fraction,
    pub upper: Fraction,
}

pub fn resurgence_bounds(m: &Matroid, side: Side) -> Result<ResurgenceBounds> {
    let alphas = sf_alphas(m, side)?;
    let c = alphas.len() as u64;
    let n = m.n() as u64;
    let c1 = alphas[0];
    let lower = (1..=alphas.len())
        .map(|h| Fraction::ratio(h as u64 * c1, alphas[h - 1]))
        .max()
        .expect("height >= 1");
    let upper = (1..=alphas.len())
        .map(|h| Fraction::ratio(h as u64 * (n - c + 1), alphas[h - 1]))
        .max()
        .expect("height >= 1");
    // the general height bound never undercuts the lower bound
    if lower > Fraction::from_integer(c as i64) {
        return Err(Error::InternalInconsistency(format!(
            "lower resurgence bound {lower} exceeds the height {c}"
        )));
    }
    // sparse-paving specialization
    let cover_side = match side {
        Side::Cover => m.clone(),
        Side::StanleyReisner => m.dual(),
    };
    if cover_side.is_sparse_paving()
        && !cover_side.is_uniform()
        && !cover_side.has_loops()
        && !cover_side.has_coloops()
    {
        let expected_lower = Fraction::ratio(c * (n - c), n);
        let expected_upper = Fraction::ratio(c * (n - c + 1), n);
        if lower != expected_lower || upper != expected_upper {
            return Err(Error::InternalInconsistency(format!(
                "sparse-paving resurgence bounds ({expected_lower}, {expected_upper}) \
                 disagree with the general formulas ({lower}, {upper})"
            )));
        }
    }
    Ok(ResurgenceBounds { lower, upper })
}

/// The batched invariant report for one side ideal. Matroid-level fields
/// (rank, girth, paving flags, uniformity threshold, components) describe the
/// matroid whose *cover* ideal equals the chosen side ideal, so the report is
/// internally consistent: `uniformity_threshold = height + 2 - girth` for
/// loopless inputs.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub side: Side,
    pub height: usize,
    pub rank: usize,
    pub girth: Option<usize>,
    pub components: Vec<Vec<usize>>,
    pub noether_number: usize,
    pub uniformity_threshold: Option<usize>,
    pub waldschmidt: Fraction,
    pub is_paving: bool,
    pub is_sparse_paving: bool,
    pub is_2_locally_connected: bool,
    pub mgrade: usize,
    pub resurgence: ResurgenceBounds,
    pub alpha_table: BTreeMap<usize, u64>,
}

pub fn analyze(m: &Matroid, side: Side) -> Result<InvariantReport> {
    let ideal = side_ideal(m, side);
    if !ideal.is_proper() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let cover_side = match side {
        Side::Cover => m.clone(),
        Side::StanleyReisner => m.dual(),
    };
    let height = side_height(m, side);
    let girth = cover_side.girth();
    let ut = uniformity_threshold(&cover_side);
    if let (Some(g), Some(u)) = (girth, ut) {
        if !cover_side.is_free() && u != height + 2 - g {
            return Err(Error::InternalInconsistency(format!(
                "uniformity threshold {u} differs from height + 2 - girth = {}",
                height + 2 - g
            )));
        }
    }
    let l_max = (2 * height).max(6);
    let alphas = sf_alphas(m, side)?;
    let alpha_table: BTreeMap<usize, u64> =
        (1..=l_max).map(|l| (l, alpha_knapsack(&alphas, l))).collect();
    Ok(InvariantReport {
        n: m.n(),
        side,
        height,
        rank: cover_side.rank(),
        girth,
        components: cover_side
            .connected_components()
            .iter()
            .map(|(set, _)| set.indices())
            .collect(),
        noether_number: noether_number(&cover_side),
        uniformity_threshold: ut,
        waldschmidt: waldschmidt(m, side)?,
        is_paving: cover_side.is_paving(),
        is_sparse_paving: cover_side.is_sparse_paving(),
        is_2_locally_connected: CircuitGraph::of_ideal(&ideal).is_2_locally_connected(),
        mgrade: mgrade(&ideal),
        resurgence: resurgence_bounds(m, side)?,
        alpha_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::SubsetFamily;
    use crate::text::parse_ideal;

    fn fano() -> Matroid {
        let blocks: Vec<Vec<usize>> = [
            [0, 1, 2], [0, 3, 6], [0, 4, 5], [1, 3, 5], [1, 4, 6], [2, 3, 4], [2, 5, 6],
        ]
        .iter()
        .map(|b| b.to_vec())
        .collect();
        Matroid::steiner(7, 2, 3, &SubsetFamily::from_index_lists(7, &blocks).unwrap()).unwrap()
    }

    fn section7() -> Matroid {
        let bases: Vec<Vec<usize>> = [
            [0, 1, 4], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5], [0, 4, 5],
            [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5], [2, 4, 5],
            [3, 4, 5],
        ]
        .iter()
        .map(|b| b.to_vec())
        .collect();
        Matroid::from_bases(6, &SubsetFamily::from_index_lists(6, &bases).unwrap()).unwrap()
    }

    fn sdefect_example_ideal() -> MonomialIdeal {
        parse_ideal("ab, ace, ade, aef, bce, cd, cf, bde, bef, df", Some(6)).unwrap()
    }

    #[test]
    fn mgrade_and_a_values() {
        let i = sdefect_example_ideal();
        assert_eq!(mgrade(&i), 2);
        let symb = |r: usize| oracle::symbolic_power_raw(&i, r).unwrap();
        let table = a_table(&i, symb);
        assert_eq!(table.get(&1), Some(&10));
        assert_eq!(table.get(&2), Some(&3));
        let symb2 = oracle::symbolic_power_raw(&i, 2).unwrap();
        assert_eq!(symb2.mu(), 23);
        assert_eq!(sdefect_formula(2, &symb2, &table), 10);
        assert_eq!(oracle::sdefect_direct(&i, 2, &symb2), 10);
    }

    #[test]
    fn sdefect_formula_negative_control() {
        let i = parse_ideal("ab, ac, bcd", Some(4)).unwrap();
        let symb = |r: usize| oracle::symbolic_power_raw(&i, r).unwrap();
        let table = a_table(&i, symb);
        let symb2 = oracle::symbolic_power_raw(&i, 2).unwrap();
        assert_eq!(sdefect_formula(2, &symb2, &table), 2);
        assert_eq!(oracle::sdefect_direct(&i, 2, &symb2), 1);
    }

    #[test]
    fn a_r_vanishes_past_mgrade() {
        let i = sdefect_example_ideal();
        let symb3 = oracle::symbolic_power_raw(&i, 3).unwrap();
        assert_eq!(a_r(&i, 3, &symb3), 0);
    }

    #[test]
    fn noether() {
        assert_eq!(noether_number(&fano()), 3);
        let u12 = Matroid::uniform(2, 1).unwrap();
        let u23 = Matroid::uniform(3, 2).unwrap();
        assert_eq!(noether_number(&u12.direct_sum(&u23).unwrap()), 2);
        assert_eq!(noether_number(&Matroid::uniform(4, 3).unwrap()), 3);
    }

    #[test]
    fn alpha_and_waldschmidt_fano() {
        let m = fano();
        assert_eq!(alpha_symbolic(&m, 1, Side::Cover).unwrap(), 4);
        assert_eq!(alpha_symbolic(&m, 3, Side::Cover).unwrap(), 7);
        assert_eq!(alpha_symbolic(&m, 4, Side::Cover).unwrap(), 11);
        assert_eq!(waldschmidt(&m, Side::Cover).unwrap(), Fraction::ratio(7, 3));
    }

    #[test]
    fn waldschmidt_section7_and_coloops() {
        assert_eq!(waldschmidt(&section7(), Side::Cover).unwrap(), Fraction::from_integer(2));
        // sparse paving with a coloop: constant 1
        let with_coloop = Matroid::from_bases(
            3,
            &SubsetFamily::from_index_lists(3, &[vec![0, 2], vec![1, 2]]).unwrap(),
        )
        .unwrap();
        assert!(with_coloop.is_sparse_paving());
        assert!(with_coloop.has_coloops());
        assert_eq!(waldschmidt(&with_coloop, Side::Cover).unwrap(), Fraction::from_integer(1));
    }

    #[test]
    fn uniformity_thresholds() {
        assert_eq!(uniformity_threshold(&Matroid::uniform(5, 3).unwrap()), Some(1));
        assert_eq!(uniformity_threshold(&section7()), Some(2));
        let with_loop = Matroid::from_circuits(
            3,
            &SubsetFamily::from_index_lists(3, &[vec![0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(uniformity_threshold(&with_loop), None);
    }

    #[test]
    fn paving_routes_agree() {
        assert_eq!(paving_equivalences(&section7()).unwrap(), [true; 5]);
        assert_eq!(paving_equivalences(&Matroid::uniform(6, 3).unwrap()).unwrap(), [true; 5]);
        // rank-3 matroid with a 2-circuit: all false
        let m = Matroid::from_circuits(
            6,
            &SubsetFamily::from_index_lists(6, &[vec![0, 1]]).unwrap(),
        )
        .unwrap();
        let truncated = m.truncation(m.rank() - 3).unwrap();
        assert_eq!(truncated.rank(), 3);
        assert_eq!(paving_equivalences(&truncated).unwrap(), [false; 5]);
    }

    #[test]
    fn resurgence_fano() {
        let b = resurgence_bounds(&fano(), Side::Cover).unwrap();
        assert_eq!(b.lower, Fraction::ratio(12, 7));
        assert_eq!(b.upper, Fraction::ratio(15, 7));
    }

    #[test]
    fn max_sdefect_routes() {
        // paving example of rank > 2: its circuit graph is 2-locally
        // connected, so the Stanley-Reisner ideal has maximal defects
        let r = max_sdefect_report(&section7(), Side::StanleyReisner).unwrap();
        assert!(r.is_maximal);
        assert_eq!(r.conditions, [true; 5]);
        // uniform matroids attain the bound
        let r = max_sdefect_report(&Matroid::uniform(5, 2).unwrap(), Side::Cover).unwrap();
        assert!(r.is_maximal);
        // two disjoint circuits, no third circuit in their union
        let ci = Matroid::from_circuits(
            4,
            &SubsetFamily::from_index_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
        )
        .unwrap();
        let r = max_sdefect_report(&ci, Side::StanleyReisner).unwrap();
        assert!(!r.is_maximal);
        assert_eq!(r.conditions, [false; 5]);
    }

    #[test]
    fn analyze_report() {
        let report = analyze(&fano(), Side::Cover).unwrap();
        assert_eq!(report.height, 3);
        assert_eq!(report.girth, Some(3));
        assert_eq!(report.uniformity_threshold, Some(2));
        assert_eq!(report.waldschmidt, Fraction::ratio(7, 3));
        assert!(report.is_sparse_paving);
        assert_eq!(report.noether_number, 3);
        assert_eq!(report.components.len(), 1);
        // subadditivity across the alpha table
        for (&a, &va) in &report.alpha_table {
            for (&b, &vb) in &report.alpha_table {
                if let Some(&vab) = report.alpha_table.get(&(a + b)) {
                    assert!(vab <= va + vb);
                }
            }
        }
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["waldschmidt"]["num"], 7);
        assert_eq!(json["side"], "cover");
    }
}
