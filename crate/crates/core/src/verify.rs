//! Change verification, introductions, coverage accounting and classification.

use itertools::Itertools;

use crate::bounds::{binomial, change_bound, BoundQuery, ChangeBound};
use crate::design::{difference, intersection, intersection_len, Block, Design, Point};
use crate::error::{Error, Result};

/// Largest number of `t`-sets a ledger will track.
const MAX_LEDGER_SIZE: u128 = 50_000_000;

/// A consecutive pair of blocks whose intersection has the wrong size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapFailure {
    /// 1-based gap index: gap `i` sits between blocks `i` and `i + 1`, and
    /// gap `b` is the seam between the last and first blocks of a circular design.
    pub gap: usize,
    pub intersection: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeCheck {
    pub m: usize,
    pub first_failure: Option<GapFailure>,
}

impl ChangeCheck {
    pub fn is_ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks that every pair of consecutive blocks (including the seam of a
/// circular design) shares exactly `k - m` points.
pub fn verify_m_change(d: &Design, m: usize) -> Result<ChangeCheck> {
    if m == 0 || m > d.k() {
        return Err(Error::parameter(format!("change size m={m} must lie in 1..={}", d.k())));
    }
    let expected = d.k() - m;
    let first_failure = d.gaps().find_map(|(i, j)| {
        let n = intersection_len(d.block(i), d.block(j));
        (n != expected).then(|| GapFailure { gap: i + 1, intersection: n, expected })
    });
    Ok(ChangeCheck { m, first_failure })
}

/// Points introduced by each block: present in the block, absent from its
/// predecessor. A block without predecessor introduces all of its points.
pub fn introductions(d: &Design) -> Vec<Block> {
    (0..d.b())
        .map(|i| match d.predecessor(i) {
            Some(p) => difference(d.block(i), d.block(p)),
            None => d.block(i).to_vec(),
        })
        .collect()
}

/// How often every `t`-set of points is covered.
///
/// A covering event for a `t`-set happens in a block containing the whole
/// set with at least one of its members introduced there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageLedger {
    v: usize,
    t: usize,
    counts: Vec<u32>,
}

impl CoverageLedger {
    fn new(v: usize, t: usize) -> Result<Self> {
        let size = binomial(v as u64, t as u64);
        if size > MAX_LEDGER_SIZE {
            return Err(Error::parameter(format!(
                "C({v}, {t}) = {size} t-sets is too many to track"
            )));
        }
        Ok(CoverageLedger { v, t, counts: vec![0; size as usize] })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn strength(&self) -> usize {
        self.t
    }

    /// Colex rank of a sorted `t`-set.
    fn rank(tset: &[Point]) -> usize {
        tset.iter()
            .enumerate()
            .map(|(i, &x)| binomial(x as u64, i as u64 + 1) as usize)
            .sum()
    }

    /// Number of covering events for `tset` (in any order).
    pub fn multiplicity(&self, tset: &[Point]) -> u32 {
        assert_eq!(tset.len(), self.t, "t-set has the wrong size");
        let mut s = tset.to_vec();
        s.sort_unstable();
        assert!(s.iter().all(|&x| x < self.v), "point outside the design");
        self.counts[Self::rank(&s)]
    }

    /// Every `t`-set with its multiplicity, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<Point>, u32)> + '_ {
        (0..self.v).combinations(self.t).map(move |s| {
            let c = self.counts[Self::rank(&s)];
            (s, c)
        })
    }

    /// The `t`-sets that are never covered, in lexicographic order.
    pub fn uncovered(&self) -> Vec<Vec<Point>> {
        self.iter().filter(|(_, c)| *c == 0).map(|(s, _)| s).collect()
    }

    pub fn uncovered_count(&self) -> usize {
        self.counts.iter().filter(|&&c| c == 0).count()
    }

    /// Sum of all multiplicities.
    pub fn total_events(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }

    /// Number of distinct `t`-sets, `C(v, t)`.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn covers_all(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }

    pub fn exactly_once(&self) -> bool {
        self.counts.iter().all(|&c| c == 1)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicities sorted descending; equal for ledgers of isomorphic designs.
    pub fn multiplicity_profile(&self) -> Vec<u32> {
        let mut p = self.counts.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

/// Tallies covering events for every `t`-set of the design.
pub fn coverage(d: &Design, t: usize) -> Result<CoverageLedger> {
    if t == 0 || t > d.k() {
        return Err(Error::parameter(format!("strength t={t} must lie in 1..={}", d.k())));
    }
    let mut ledger = CoverageLedger::new(d.v(), t)?;
    for (block, intro) in d.blocks().iter().zip(introductions(d)) {
        if intro.is_empty() {
            continue;
        }
        for s in block.iter().copied().combinations(t) {
            if s.iter().any(|x| intro.binary_search(x).is_ok()) {
                ledger.counts[CoverageLedger::rank(&s)] += 1;
            }
        }
    }
    Ok(ledger)
}

/// Pair-coverage classification of a design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Entry `m - 1` holds whether the design is `m`-change, for `m` in `1..=k`.
    pub is_m_change: Vec<bool>,
    /// Change size the bound is evaluated for: 2 for double change designs,
    /// otherwise the unique `m` the design satisfies, if any.
    pub change: Option<usize>,
    pub covers_all: bool,
    pub exactly_once: bool,
    pub bound: Option<ChangeBound>,
    pub economical: bool,
    pub tight: bool,
}

impl Classification {
    pub fn is_double_change(&self) -> bool {
        self.is_m_change.get(1).copied().unwrap_or(false)
    }
}

/// Classifies a design for pair coverage (`t = 2`).
///
/// The design is economical when it covers every pair and its block count
/// equals the ceiled counting bound for its change size and circularity; it
/// is tight when additionally the bound's division is exact and every pair is
/// covered exactly once. Single-block designs are measured against the linear
/// bound whatever their flag, since they have no seam.
pub fn classify(d: &Design) -> Classification {
    let is_m_change: Vec<bool> = (1..=d.k())
        .map(|m| verify_m_change(d, m).map(|c| c.is_ok()).unwrap_or(false))
        .collect();
    let change = if d.b() == 1 || is_m_change.get(1) == Some(&true) {
        Some(2).filter(|&m| m <= d.k())
    } else {
        is_m_change.iter().position(|&ok| ok).map(|i| i + 1)
    };
    let ledger = if d.k() >= 2 { coverage(d, 2).ok() } else { None };
    let covers_all = ledger.as_ref().is_some_and(CoverageLedger::covers_all);
    let exactly_once = ledger.as_ref().is_some_and(CoverageLedger::exactly_once);
    let circular = d.is_circular() && d.b() > 1;
    let bound = change.and_then(|m| {
        let q = BoundQuery::new(d.v() as u64, d.k() as u64, 2).ok()?;
        change_bound(q, m as u64, circular).ok()
    });
    let economical = covers_all && bound.is_some_and(|g| g.value == d.b() as u64);
    let tight = economical && exactly_once && bound.is_some_and(|g| g.exact);
    Classification { is_m_change, change, covers_all, exactly_once, bound, economical, tight }
}

/// Where unchanged subsets may sit at the two ends of the block list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndSubsets {
    /// Circular designs: `U_0 = U_b = B_1 ∩ B_b`.
    Seam(Block),
    /// Linear designs: any `(k-2)`-subset of `B_1` may play `U_0`, and any of
    /// `B_b` may play `U_b`.
    Free { first: Vec<Block>, last: Vec<Block> },
}

/// The unchanged subsets `U_i = B_i ∩ B_{i+1}` of a double change design.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnchangedSubsets {
    b: usize,
    /// `U_1 ..= U_{b-1}`.
    pub interior: Vec<Block>,
    pub ends: EndSubsets,
}

impl UnchangedSubsets {
    /// Gap locations that carry an unchanged subset: `0..=b` for linear
    /// designs, `1..=b` for circular ones (the seam is location `b`).
    pub fn locations(&self) -> std::ops::RangeInclusive<usize> {
        match self.ends {
            EndSubsets::Seam(_) => 1..=self.b,
            EndSubsets::Free { .. } => 0..=self.b,
        }
    }

    /// The subsets that may stand at `location`; several only at the free
    /// ends of a linear design, none for an invalid location.
    pub fn candidates(&self, location: usize) -> Vec<Block> {
        match (&self.ends, location) {
            (EndSubsets::Free { first, .. }, 0) => first.clone(),
            (EndSubsets::Free { last, .. }, l) if l == self.b => last.clone(),
            (EndSubsets::Seam(s), l) if l == self.b => vec![s.clone()],
            (_, l) if (1..self.b).contains(&l) => vec![self.interior[l - 1].clone()],
            _ => Vec::new(),
        }
    }
}

/// Unchanged subsets of a double change design, with the end-gap choice
/// domains of linear designs.
pub fn unchanged_subsets(d: &Design) -> Result<UnchangedSubsets> {
    if d.k() < 2 {
        return Err(Error::structural("block size below 2 cannot double change"));
    }
    let check = verify_m_change(d, 2)?;
    if let Some(f) = check.first_failure {
        return Err(Error::structural(format!(
            "not double change at gap {}: consecutive blocks share {} points, expected {}",
            f.gap, f.intersection, f.expected
        )));
    }
    let b = d.b();
    if d.is_circular() && b == 1 {
        return Err(Error::structural("a single-block circular design has no seam"));
    }
    let interior = (0..b - 1)
        .map(|i| intersection(d.block(i), d.block(i + 1)))
        .collect();
    let ends = if d.is_circular() {
        EndSubsets::Seam(intersection(d.block(b - 1), d.block(0)))
    } else {
        let domain = |blk: &[Point]| blk.iter().copied().combinations(d.k() - 2).collect();
        EndSubsets::Free { first: domain(d.block(0)), last: domain(d.block(b - 1)) }
    };
    Ok(UnchangedSubsets { b, interior, ends })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table1(circular: bool) -> Design {
        let blocks = vec![
            vec![0, 1, 2],
            vec![0, 4, 5],
            vec![2, 4, 3],
            vec![0, 6, 3],
            vec![1, 6, 4],
            vec![5, 6, 2],
            vec![5, 3, 1],
        ];
        Design::new(7, 3, circular, blocks).unwrap()
    }

    #[test]
    fn table1_is_double_change_both_ways() {
        assert!(verify_m_change(&table1(true), 2).unwrap().is_ok());
        assert!(verify_m_change(&table1(false), 2).unwrap().is_ok());
        assert!(!verify_m_change(&table1(true), 1).unwrap().is_ok());
    }

    #[test]
    fn single_block_passes_any_m() {
        let d = Design::new(5, 3, true, vec![vec![0, 1, 2]]).unwrap();
        for m in 1..=3 {
            assert!(verify_m_change(&d, m).unwrap().is_ok());
        }
        assert!(verify_m_change(&d, 0).is_err());
        assert!(verify_m_change(&d, 4).is_err());
    }

    #[test]
    fn duplicated_block_fails_at_its_gap() {
        let mut blocks = table1(true).into_blocks();
        blocks[2] = blocks[1].clone();
        let d = Design::new(7, 3, true, blocks).unwrap();
        let f = verify_m_change(&d, 2).unwrap().first_failure.unwrap();
        assert_eq!(f, GapFailure { gap: 2, intersection: 3, expected: 1 });
    }

    #[test]
    fn replacing_block_three_by_block_one_keeps_double_change() {
        // B2 ∩ B1 = {0} and B1 ∩ B4 = {0}, so this mutation is still valid.
        let mut blocks = table1(true).into_blocks();
        blocks[2] = blocks[0].clone();
        let d = Design::new(7, 3, true, blocks).unwrap();
        assert!(verify_m_change(&d, 2).unwrap().is_ok());
        assert!(!classify(&d).covers_all);
    }

    #[test]
    fn seam_failure_reports_gap_b() {
        let d = Design::new(7, 3, true, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 1, 5]]).unwrap();
        let f = verify_m_change(&d, 2).unwrap().first_failure.unwrap();
        assert_eq!(f.gap, 3);
        assert_eq!(f.intersection, 2);
    }

    #[test]
    fn table1_introductions() {
        let c = introductions(&table1(true));
        assert_eq!(c[0], vec![0, 2]);
        assert!(c.iter().all(|i| i.len() == 2));
        let l = introductions(&table1(false));
        assert_eq!(l[0], vec![0, 1, 2]);
        assert_eq!(l.iter().map(Vec::len).sum::<usize>(), 3 + 2 * 6);
    }

    #[test]
    fn single_block_introduces_everything() {
        let d = Design::new(6, 4, true, vec![vec![0, 2, 3, 5]]).unwrap();
        assert_eq!(introductions(&d), vec![vec![0, 2, 3, 5]]);
    }

    #[test]
    fn table1_covers_every_pair_once() {
        for circular in [true, false] {
            let ledger = coverage(&table1(circular), 2).unwrap();
            assert_eq!(ledger.len(), 21);
            assert!(ledger.exactly_once());
            assert_eq!(ledger.total_events(), 21);
            assert!(ledger.uncovered().is_empty());
        }
    }

    #[test]
    fn single_block_coverage() {
        let d = Design::new(6, 4, false, vec![vec![0, 1, 2, 3]]).unwrap();
        let ledger = coverage(&d, 2).unwrap();
        assert_eq!(ledger.multiplicity(&[3, 1]), 1);
        assert_eq!(ledger.multiplicity(&[0, 4]), 0);
        assert_eq!(ledger.uncovered_count(), 15 - 6);
        assert_eq!(ledger.uncovered()[0], vec![0, 4]);
    }

    #[test]
    fn coverage_at_strength_three() {
        let d = Design::new(5, 3, false, vec![vec![0, 1, 2]]).unwrap();
        let ledger = coverage(&d, 3).unwrap();
        assert_eq!(ledger.len(), 10);
        assert_eq!(ledger.multiplicity(&[0, 1, 2]), 1);
        assert_eq!(ledger.uncovered_count(), 9);
        assert!(coverage(&d, 4).is_err());
    }

    #[test]
    fn table1_classifies_tight() {
        for circular in [true, false] {
            let c = classify(&table1(circular));
            assert!(c.is_double_change());
            assert!(c.covers_all && c.economical && c.tight, "{c:?}");
        }
    }

    #[test]
    fn extra_block_is_not_economical() {
        let mut blocks = table1(false).into_blocks();
        blocks.push(blocks[6].clone());
        let c = classify(&Design::new(7, 3, false, blocks).unwrap());
        assert!(c.covers_all);
        assert!(!c.economical && !c.tight);
    }

    #[test]
    fn degenerate_single_block_is_tight() {
        let c = classify(&Design::new(3, 3, true, vec![vec![0, 1, 2]]).unwrap());
        assert!(c.tight);
        let c = classify(&Design::new(5, 3, false, vec![vec![0, 1, 2]]).unwrap());
        assert!(!c.covers_all && !c.economical);
    }

    #[test]
    fn table1_unchanged_subsets() {
        let u = unchanged_subsets(&table1(false)).unwrap();
        assert_eq!(u.interior, vec![vec![0], vec![4], vec![3], vec![6], vec![6], vec![5]]);
        assert_eq!(
            u.ends,
            EndSubsets::Free {
                first: vec![vec![0], vec![1], vec![2]],
                last: vec![vec![1], vec![3], vec![5]],
            }
        );
        assert_eq!(u.locations(), 0..=7);
        let c = unchanged_subsets(&table1(true)).unwrap();
        assert_eq!(c.interior, u.interior);
        assert_eq!(c.ends, EndSubsets::Seam(vec![1]));
        assert_eq!(c.candidates(7), vec![vec![1]]);
        assert!(c.candidates(0).is_empty());
    }

    #[test]
    fn identical_ends_are_a_structural_error() {
        let d = Design::new(7, 3, true, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 1, 2]]).unwrap();
        assert!(matches!(unchanged_subsets(&d), Err(Error::Structural(_))));
    }
}
