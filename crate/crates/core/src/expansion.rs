//! Expansion sets and the 1-factorization recursion.
//!
//! An expansion set picks unchanged subsets at distinct gap locations so that
//! they partition the point set. Given one with an odd number `l` of parts,
//! [`expand`] adds `l + 1` new points and, at the `j`-th location, inserts one
//! block `U ∪ e` for every edge `e` of the `j`-th factor of a 1-factorization
//! of `K_{l+1}` on the new points. Each inserted block only covers pairs that
//! involve a new point, so coverage, tightness and circularity carry over.

use crate::bounds::binomial;
use crate::construct::{base_family, develop};
use crate::design::{Block, Design, Point};
use crate::error::{Error, Result};
use crate::factorization::{circle_method, verify_factorization, Edge, OneFactorization};
use crate::verify::{classify, unchanged_subsets, UnchangedSubsets};

/// A partition of the point set into unchanged subsets.
///
/// Locations follow the gap numbering of [`UnchangedSubsets::locations`]:
/// location `i` sits after block `i` (1-based), location 0 before the first
/// block of a linear design, and location `b` after the last block (the seam
/// of a circular design).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSet {
    b: usize,
    circular: bool,
    parts: Vec<(usize, Block)>,
}

impl ExpansionSet {
    /// Builds an expansion set from `(location, part)` pairs; it is checked
    /// against a design only when used.
    pub fn new(d: &Design, mut parts: Vec<(usize, Vec<Point>)>) -> Self {
        for (_, p) in &mut parts {
            p.sort_unstable();
        }
        parts.sort();
        ExpansionSet { b: d.b(), circular: d.is_circular(), parts }
    }

    pub fn locations(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().map(|(l, _)| *l)
    }

    pub fn parts(&self) -> &[(usize, Block)] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The concrete `U_0` and `U_b` picked from the free end domains of a
    /// linear design.
    pub fn end_choices(&self) -> (Option<&[Point]>, Option<&[Point]>) {
        if self.circular {
            return (None, None);
        }
        let at = |loc: usize| {
            self.parts.iter().find(|(l, _)| *l == loc).map(|(_, p)| p.as_slice())
        };
        (at(0), at(self.b))
    }
}

/// Checks that `e` partitions the points of `d` into unchanged subsets at
/// distinct locations.
pub fn validate_expansion_set(d: &Design, e: &ExpansionSet) -> Result<()> {
    if e.b != d.b() || e.circular != d.is_circular() {
        return Err(Error::structural("expansion set belongs to a different design"));
    }
    let subsets = unchanged_subsets(d)?;
    let mut seen = vec![false; d.v()];
    for (i, (loc, part)) in e.parts.iter().enumerate() {
        if i > 0 && e.parts[i - 1].0 == *loc {
            return Err(Error::structural(format!("location {loc} used twice")));
        }
        if !subsets.candidates(*loc).contains(part) {
            return Err(Error::structural(format!(
                "{part:?} is not an unchanged subset at location {loc}"
            )));
        }
        for &p in part {
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::structural(format!("point {p} lies in two parts")));
            }
        }
    }
    if let Some(p) = seen.iter().position(|s| !s) {
        return Err(Error::structural(format!("point {p} is in no part")));
    }
    Ok(())
}

/// Candidate parts for the exact cover, in location order.
fn candidate_rows(subsets: &UnchangedSubsets) -> Vec<(usize, Block)> {
    subsets
        .locations()
        .flat_map(|loc| subsets.candidates(loc).into_iter().map(move |p| (loc, p)))
        .collect()
}

struct ExactCover<'a> {
    rows: &'a [(usize, Block)],
    point_rows: Vec<Vec<usize>>,
    covered: Vec<bool>,
    used_location: Vec<bool>,
    chosen: Vec<usize>,
}

impl ExactCover<'_> {
    fn available(&self, r: usize) -> bool {
        let (loc, part) = &self.rows[r];
        !self.used_location[*loc] && part.iter().all(|&p| !self.covered[p])
    }

    /// Branches on the uncovered point with the fewest available rows (lowest
    /// point on ties), trying its rows in location order.
    fn solve(&mut self) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for p in (0..self.covered.len()).filter(|&p| !self.covered[p]) {
            let n = self.point_rows[p].iter().filter(|&&r| self.available(r)).count();
            if best.is_none_or(|(_, m)| n < m) {
                best = Some((p, n));
                if n == 0 {
                    return false;
                }
            }
        }
        let Some((p, _)) = best else {
            return true;
        };
        let options: Vec<usize> =
            self.point_rows[p].iter().copied().filter(|&r| self.available(r)).collect();
        for r in options {
            self.set(r, true);
            self.chosen.push(r);
            if self.solve() {
                return true;
            }
            self.chosen.pop();
            self.set(r, false);
        }
        false
    }

    fn set(&mut self, r: usize, on: bool) {
        let (loc, part) = &self.rows[r];
        self.used_location[*loc] = on;
        for &q in part {
            self.covered[q] = on;
        }
    }
}

/// Searches for an expansion set by exact-cover backtracking.
///
/// Returns `Ok(None)` when no partition exists, including the structurally
/// impossible cases `k < 3` and `(k - 2) ∤ v`. The result is deterministic.
pub fn find_expansion_set(d: &Design) -> Result<Option<ExpansionSet>> {
    let subsets = unchanged_subsets(d)?;
    if d.k() < 3 || !d.v().is_multiple_of(d.k() - 2) {
        return Ok(None);
    }
    let rows = candidate_rows(&subsets);
    let mut point_rows = vec![Vec::new(); d.v()];
    for (r, (_, part)) in rows.iter().enumerate() {
        for &p in part {
            point_rows[p].push(r);
        }
    }
    let mut search = ExactCover {
        rows: &rows,
        point_rows,
        covered: vec![false; d.v()],
        used_location: vec![false; d.b() + 1],
        chosen: Vec::new(),
    };
    if !search.solve() {
        return Ok(None);
    }
    let parts = search.chosen.iter().map(|&r| rows[r].clone()).collect();
    Ok(Some(ExpansionSet::new(d, parts)))
}

/// Applies the recursion: new points `v ..= v + l` and, at the `j`-th
/// location in ascending order, one block `U ∪ e` per edge `e` of factor `j`,
/// edges in the factor's order.
///
/// The result has `v + l + 1` points and `b + l(l+1)/2` blocks.
pub fn expand(d: &Design, e: &ExpansionSet, f: &OneFactorization) -> Result<Design> {
    validate_expansion_set(d, e)?;
    let l = e.len();
    if l.is_multiple_of(2) {
        return Err(Error::structural(format!(
            "expansion set has even size {l}; the recursion needs an odd number of parts"
        )));
    }
    if f.n() != l + 1 {
        return Err(Error::structural(format!(
            "factorization has {} vertices, expected {}",
            f.n(),
            l + 1
        )));
    }
    if let Err(v) = verify_factorization(f) {
        return Err(Error::structural(format!("invalid 1-factorization: {v}")));
    }
    let v = d.v();
    let mut inserts: Vec<Option<(&Block, &[Edge])>> = vec![None; d.b() + 1];
    for ((loc, part), factor) in e.parts.iter().zip(f.factors()) {
        inserts[*loc] = Some((part, factor));
    }
    let inserted = |loc: usize| {
        inserts[loc].into_iter().flat_map(move |(part, factor)| {
            factor.iter().map(move |&(a, b)| {
                part.iter().copied().chain([v + a, v + b]).collect::<Block>()
            })
        })
    };
    let mut blocks: Vec<Block> = inserted(0).collect();
    for (i, blk) in d.blocks().iter().enumerate() {
        blocks.push(blk.clone());
        blocks.extend(inserted(i + 1));
    }
    Design::new(v + l + 1, d.k(), d.is_circular(), blocks)
}

/// Finds an expansion set, builds the circle-method factorization of the
/// right order and expands.
pub fn expand_with_circle_method(d: &Design) -> Result<Design> {
    let e = find_expansion_set(d)?.ok_or_else(|| Error::structural("design has no expansion set"))?;
    let f = circle_method(e.len() + 1).map_err(|_| {
        Error::structural(format!(
            "expansion set has even size {}; the recursion needs an odd number of parts",
            e.len()
        ))
    })?;
    expand(d, &e, &f)
}

/// Parameters of the expanded difference-family designs as printed in the
/// literature, in `(c, k)` order.
pub const PRINTED_CHAIN_PARAMETERS: [(usize, usize, usize); 11] = [
    (15, 3, 35),
    (21, 5, 30),
    (27, 3, 117),
    (55, 7, 135),
    (39, 3, 247),
    (105, 9, 364),
    (67, 3, 489),
    (77, 5, 418),
    (161, 11, 640),
    (63, 3, 651),
    (253, 13, 1386),
];

/// One tight design obtained by expanding a developed base block family.
#[derive(Debug, Clone)]
pub struct ChainEntry {
    pub c: usize,
    pub k: usize,
    /// Point count of the developed family, `c(4k-6)+1`.
    pub base_v: usize,
    /// Size of the expansion set, `4c + (2c+1)/(k-2)`.
    pub expansion_size: usize,
    pub design: Design,
    /// The printed parameters this entry is listed against.
    pub printed: (usize, usize, usize),
}

impl ChainEntry {
    pub fn parameters(&self) -> (usize, usize, usize) {
        (self.design.v(), self.design.k(), self.design.b())
    }

    pub fn matches_printed(&self) -> bool {
        self.parameters() == self.printed
    }
}

/// `(c, k)` pairs with `c <= 5` for which `(k-2) | 2c+1` with odd quotient.
pub fn chain_pairs() -> Vec<(usize, usize)> {
    (1..=5usize)
        .flat_map(|c| {
            let n = 2 * c + 1;
            (1..=n).filter(move |d| n % d == 0 && (n / d) % 2 == 1).map(move |d| (c, d + 2))
        })
        .collect()
}

/// Develops the `(c, k)` family, expands it and checks the result is tight.
pub fn chain_entry(c: usize, k: usize) -> Result<ChainEntry> {
    let pos = chain_pairs()
        .iter()
        .position(|&p| p == (c, k))
        .ok_or_else(|| Error::parameter(format!("(c={c}, k={k}) does not admit the recursion")))?;
    let base = develop(&base_family(k, c)?)?;
    let e = find_expansion_set(&base)?.ok_or_else(|| {
        Error::structural(format!("developed family (c={c}, k={k}) has no expansion set"))
    })?;
    let f = circle_method(e.len() + 1)?;
    let design = expand(&base, &e, &f)?;
    if !classify(&design).tight {
        return Err(Error::structural(format!(
            "expansion of (c={c}, k={k}) is not tight"
        )));
    }
    Ok(ChainEntry {
        c,
        k,
        base_v: base.v(),
        expansion_size: e.len(),
        design,
        printed: PRINTED_CHAIN_PARAMETERS[pos],
    })
}

/// Every expanded difference-family design, in `(c, k)` order.
///
/// Entries whose parameters disagree with [`PRINTED_CHAIN_PARAMETERS`] are
/// kept and flagged by [`ChainEntry::matches_printed`].
pub fn corollary_chain() -> Result<Vec<ChainEntry>> {
    chain_pairs().into_iter().map(|(c, k)| chain_entry(c, k)).collect()
}

/// Expected `(v*, b*)` of an expansion with `l` parts.
pub fn expanded_parameters(v: usize, b: usize, l: usize) -> (usize, usize) {
    (v + l + 1, b + binomial(l as u64 + 1, 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{csccd_consecutive, double_points};

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
    fn table1_linear_partition() {
        let e = find_expansion_set(&table1(false)).unwrap().unwrap();
        let expected: Vec<(usize, Block)> = vec![
            (0, vec![2]),
            (1, vec![0]),
            (2, vec![4]),
            (3, vec![3]),
            (4, vec![6]),
            (6, vec![5]),
            (7, vec![1]),
        ];
        assert_eq!(e.parts(), expected.as_slice());
        assert_eq!(e.end_choices(), (Some(&[2][..]), Some(&[1][..])));
    }

    #[test]
    fn table1_circular_has_none() {
        assert_eq!(find_expansion_set(&table1(true)).unwrap(), None);
    }

    #[test]
    fn indivisible_point_count_has_none() {
        let d = develop(&base_family(4, 1).unwrap()).unwrap();
        assert_eq!(find_expansion_set(&d).unwrap(), None);
    }

    #[test]
    fn non_double_change_is_an_error() {
        let d = csccd_consecutive(3).unwrap();
        assert!(matches!(find_expansion_set(&d), Err(Error::Structural(_))));
    }

    #[test]
    fn developed_k3_family_has_singleton_partition() {
        let d = develop(&base_family(3, 1).unwrap()).unwrap();
        let e = find_expansion_set(&d).unwrap().unwrap();
        assert_eq!(e.len(), 7);
        assert!(e.parts().iter().all(|(_, p)| p.len() == 1));
    }

    #[test]
    fn expand_table1_linear() {
        let d = table1(false);
        let e = find_expansion_set(&d).unwrap().unwrap();
        let x = expand(&d, &e, &circle_method(8).unwrap()).unwrap();
        assert_eq!((x.v(), x.k(), x.b(), x.is_circular()), (15, 3, 35, false));
        assert!(classify(&x).tight);
        // location 0 inserts ahead of the original first block
        assert_eq!(x.block(0), &[2, 7, 14]);
    }

    #[test]
    fn expand_cdccd_6_4_3_with_k4() {
        let d = double_points(&csccd_consecutive(2).unwrap()).unwrap();
        let e = find_expansion_set(&d).unwrap().unwrap();
        assert_eq!(e.locations().collect::<Vec<_>>(), vec![1, 2, 3]);
        let x = expand(&d, &e, &circle_method(4).unwrap()).unwrap();
        assert_eq!((x.v(), x.b()), (10, 9));
        assert!(classify(&x).tight && x.is_circular());
    }

    #[test]
    fn expand_rejects_bad_inputs() {
        let d = table1(false);
        let e = find_expansion_set(&d).unwrap().unwrap();
        assert!(matches!(expand(&d, &e, &circle_method(6).unwrap()), Err(Error::Structural(_))));
        let broken = OneFactorization::from_factors(8, vec![]);
        assert!(matches!(expand(&d, &e, &broken), Err(Error::Structural(_))));
        let overlapping = ExpansionSet::new(&d, vec![(1, vec![0]), (0, vec![0])]);
        assert!(matches!(expand(&d, &overlapping, &circle_method(2).unwrap()), Err(Error::Structural(_))));
    }

    #[test]
    fn even_expansion_set_rejected() {
        // a lone block of a linear design offers both ends as free locations
        let d = Design::new(4, 4, false, vec![vec![0, 1, 2, 3]]).unwrap();
        let e = find_expansion_set(&d).unwrap().unwrap();
        assert_eq!(e.parts(), &[(0, vec![0, 1]), (1, vec![2, 3])]);
        let err = expand(&d, &e, &circle_method(4).unwrap()).unwrap_err();
        assert!(err.to_string().contains("even size 2"));
    }

    #[test]
    fn incomplete_partition_rejected() {
        let d = Design::new(4, 3, false, vec![vec![0, 1, 2]]).unwrap();
        let e = ExpansionSet::new(&d, vec![(0, vec![0]), (1, vec![1])]);
        assert!(matches!(validate_expansion_set(&d, &e), Err(Error::Structural(_))));
    }

    #[test]
    fn chain_pairs_are_the_eleven() {
        assert_eq!(
            chain_pairs(),
            vec![
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 7),
                (3, 3),
                (3, 9),
                (4, 3),
                (4, 5),
                (4, 11),
                (5, 3),
                (5, 13)
            ]
        );
    }

    #[test]
    fn chain_entry_sizes() {
        let e = chain_entry(1, 3).unwrap();
        assert_eq!(e.expansion_size, 7);
        assert_eq!(e.parameters(), (15, 3, 35));
        let e = chain_entry(1, 5).unwrap();
        assert_eq!(e.parameters(), (21, 5, 30));
        let e = chain_entry(2, 3).unwrap();
        assert_eq!(e.parameters(), (27, 3, 117));
        assert!(chain_entry(1, 4).is_err());
    }

    #[test]
    fn expanded_parameter_identity() {
        assert_eq!(expanded_parameters(7, 7, 7), (15, 35));
        assert_eq!(expanded_parameters(6, 3, 3), (10, 9));
    }
}
