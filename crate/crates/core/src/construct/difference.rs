//! Base block families over `Z_v` and their development.
//!
//! Every family here shares the block `A = {0, .., k-3}`: each base block is
//! `A` plus two further residues, and the last base block contains `A ∪ {k-2}`
//! so that it meets the first block shifted by one in `A + 1`. Developing the
//! blocks round by round therefore changes exactly two points per step, and
//! the two introduced points of each base block cover a prescribed set of
//! differences.

use std::fmt;

use crate::design::{difference, intersection_len, Block, Design};
use crate::error::{Error, Result};

/// Ordered base blocks over `Z_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseBlockFamily {
    v: usize,
    k: usize,
    base_blocks: Vec<Block>,
}

impl BaseBlockFamily {
    /// Wraps raw base blocks, reducing residues mod `v`. Shape is checked here;
    /// covering properties are checked by [`verify_base_family`].
    pub fn new(v: usize, k: usize, base_blocks: Vec<Vec<usize>>) -> Result<Self> {
        if v == 0 || k == 0 || k > v {
            return Err(Error::parameter(format!("no {k}-subsets of Z_{v}")));
        }
        if base_blocks.is_empty() {
            return Err(Error::parameter("a family needs at least one base block"));
        }
        let mut blocks = Vec::with_capacity(base_blocks.len());
        for (j, blk) in base_blocks.into_iter().enumerate() {
            let mut blk: Block = blk.into_iter().map(|x| x % v).collect();
            blk.sort_unstable();
            blk.dedup();
            if blk.len() != k {
                return Err(Error::structural(format!(
                    "base block {} does not have {k} distinct residues",
                    j + 1
                )));
            }
            blocks.push(blk);
        }
        Ok(BaseBlockFamily { v, k, base_blocks: blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of base blocks.
    pub fn c(&self) -> usize {
        self.base_blocks.len()
    }

    pub fn base_blocks(&self) -> &[Block] {
        &self.base_blocks
    }

    fn shifted(&self, j: usize, by: usize) -> Block {
        let mut b: Block = self.base_blocks[j].iter().map(|&x| (x + by) % self.v).collect();
        b.sort_unstable();
        b
    }

    /// Block preceding base block `j` in the developed order.
    fn predecessor(&self, j: usize) -> Block {
        if j == 0 {
            self.shifted(self.c() - 1, self.v - 1)
        } else {
            self.base_blocks[j - 1].clone()
        }
    }
}

/// The extra pair `{x, y}` of every base block, written as multiples of
/// `k - 2` plus offsets: `(a, b)` stands for `a (k-2) + b`.
const FAMILY_TERMS: [&[[(usize, usize); 2]]; 5] = [
    &[[(1, 0), (2, 1)]],
    &[[(2, 0), (5, 2)], [(1, 0), (3, 1)]],
    &[[(2, 0), (7, 3)], [(3, 1), (5, 2)], [(1, 0), (4, 2)]],
    &[[(2, 0), (8, 4)], [(3, 1), (5, 2)], [(4, 2), (7, 4)], [(1, 0), (6, 3)]],
    &[
        [(2, 0), (6, 3)],
        [(3, 0), (9, 4)],
        [(4, 2), (7, 4)],
        [(5, 3), (8, 4)],
        [(1, 0), (10, 5)],
    ],
];

/// The `c`-block family over `Z_{c(4k-6)+1}` for block size `k >= 3` and
/// `1 <= c <= 5`, in its listed order.
pub fn base_family(k: usize, c: usize) -> Result<BaseBlockFamily> {
    if k < 3 {
        return Err(Error::parameter(format!("base block families need k >= 3, got {k}")));
    }
    if !(1..=5).contains(&c) {
        return Err(Error::parameter(format!(
            "base block families exist for c in 1..=5, got {c}; use base_family_61 for c = 6"
        )));
    }
    let m = k - 2;
    let v = c * (4 * k - 6) + 1;
    let blocks = FAMILY_TERMS[c - 1]
        .iter()
        .map(|pair| {
            (0..m)
                .chain(pair.iter().map(|&(mult, off)| mult * m + off))
                .collect()
        })
        .collect();
    BaseBlockFamily::new(v, k, blocks)
}

/// Six base blocks over `Z_61` with `k = 4`.
pub fn base_family_61() -> BaseBlockFamily {
    BaseBlockFamily::new(
        61,
        4,
        vec![
            vec![0, 1, 4, 19],
            vec![0, 1, 6, 22],
            vec![0, 1, 8, 25],
            vec![0, 1, 10, 48],
            vec![0, 1, 12, 32],
            vec![0, 1, 2, 28],
        ],
    )
    .expect("fixed family is well formed")
}

/// Outcome of [`verify_base_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    /// First consecutive pair of blocks in development order that does not
    /// share exactly `k - 2` residues, as `(j, intersection)`: base block `j`
    /// against its successor (base block `j + 1`, or base block 1 shifted by
    /// one when `j` is the last).
    pub seam_failure: Option<(usize, usize)>,
    /// Nonzero residues never produced as a covered difference.
    pub missing: Vec<usize>,
    /// Nonzero residues produced more than once.
    pub repeated: Vec<usize>,
}

impl FamilyCheck {
    pub fn is_ok(&self) -> bool {
        self.seam_failure.is_none() && self.missing.is_empty() && self.repeated.is_empty()
    }
}

impl fmt::Display for FamilyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        if let Some((j, n)) = self.seam_failure {
            write!(f, "base block {} meets its successor in {n} residues; ", j + 1)?;
        }
        write!(f, "missing differences {:?}, repeated differences {:?}", self.missing, self.repeated)
    }
}

/// Checks the double change seams and that the differences covered by the
/// introduced residues of the base blocks hit every nonzero residue once.
pub fn verify_base_family(f: &BaseBlockFamily) -> FamilyCheck {
    let (v, k, c) = (f.v, f.k, f.c());
    let seam_failure = (0..c).find_map(|j| {
        let next = if j + 1 < c { f.base_blocks[j + 1].clone() } else { f.shifted(0, 1) };
        let n = intersection_len(&f.base_blocks[j], &next);
        (n + 2 != k).then_some((j, n))
    });
    let mut hits = vec![0u32; v];
    for j in 0..c {
        let blk = &f.base_blocks[j];
        let intro = difference(blk, &f.predecessor(j));
        for (a, &x) in blk.iter().enumerate() {
            for &y in &blk[a + 1..] {
                if intro.contains(&x) || intro.contains(&y) {
                    hits[(x + v - y) % v] += 1;
                    hits[(y + v - x) % v] += 1;
                }
            }
        }
    }
    let missing = (1..v).filter(|&d| hits[d] == 0).collect();
    let repeated = (1..v).filter(|&d| hits[d] > 1).collect();
    FamilyCheck { seam_failure, missing, repeated }
}

/// Develops the family: rounds `i = 0..v`, and within each round the base
/// blocks in order, each shifted by `i`. The result is circular with `c v`
/// blocks.
pub fn develop(f: &BaseBlockFamily) -> Result<Design> {
    let check = verify_base_family(f);
    if !check.is_ok() {
        return Err(Error::structural(format!("base family over Z_{}: {check}", f.v)));
    }
    let blocks = (0..f.v)
        .flat_map(|i| (0..f.c()).map(move |j| (i, j)))
        .map(|(i, j)| f.shifted(j, i))
        .collect();
    Design::new(f.v, f.k, true, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::classify;

    #[test]
    fn c1_k4_is_the_eleven_point_block() {
        let f = base_family(4, 1).unwrap();
        assert_eq!(f.v(), 11);
        assert_eq!(f.base_blocks(), &[vec![0, 1, 2, 5]]);
    }

    #[test]
    fn c2_rows_keep_listed_order() {
        let f = base_family(3, 2).unwrap();
        assert_eq!(f.v(), 13);
        assert_eq!(f.base_blocks(), &[vec![0, 2, 7], vec![0, 1, 4]]);
        let f = base_family(4, 2).unwrap();
        assert_eq!(f.v(), 21);
        assert_eq!(f.base_blocks(), &[vec![0, 1, 4, 12], vec![0, 1, 2, 7]]);
    }

    #[test]
    fn c_out_of_range() {
        assert!(matches!(base_family(4, 0), Err(Error::Parameter(_))));
        assert!(matches!(base_family(4, 6), Err(Error::Parameter(_))));
        assert!(matches!(base_family(2, 1), Err(Error::Parameter(_))));
    }

    #[test]
    fn all_families_verify() {
        for k in 3..=12 {
            for c in 1..=5 {
                let f = base_family(k, c).unwrap();
                assert!(verify_base_family(&f).is_ok(), "k={k} c={c}");
            }
        }
        assert!(verify_base_family(&base_family_61()).is_ok());
    }

    #[test]
    fn family_61_seam_block() {
        let f = base_family_61();
        assert_eq!(f.c(), 6);
        assert!(f.base_blocks()[5].starts_with(&[0, 1, 2]));
    }

    #[test]
    fn perturbed_family_misses_a_difference() {
        // {0,1,2,5} -> {0,1,2,6}: covered differences ±{1,2,4,5,6} hit 5 and 6 twice
        let f = BaseBlockFamily::new(11, 4, vec![vec![0, 1, 2, 6]]).unwrap();
        let check = verify_base_family(&f);
        assert!(check.seam_failure.is_none());
        assert_eq!(check.missing, vec![3, 8]);
        assert_eq!(check.repeated, vec![5, 6]);
        assert!(matches!(develop(&f), Err(Error::Structural(_))));
    }

    #[test]
    fn broken_seam_is_reported() {
        // k = 4, c = 2 rows swapped: {0,1,4,12} meets {1,2,3,8} in one residue
        let f = BaseBlockFamily::new(21, 4, vec![vec![0, 1, 2, 7], vec![0, 1, 4, 12]]).unwrap();
        let check = verify_base_family(&f);
        assert_eq!(check.seam_failure, Some((1, 1)));
        // for k = 3 the swapped order still works
        let f = BaseBlockFamily::new(13, 3, vec![vec![0, 1, 4], vec![0, 2, 7]]).unwrap();
        assert!(verify_base_family(&f).is_ok());
    }

    #[test]
    fn develop_eleven_points() {
        let d = develop(&base_family(4, 1).unwrap()).unwrap();
        assert_eq!(d.b(), 11);
        assert_eq!(d.block(0), &[0, 1, 2, 5]);
        assert_eq!(d.block(1), &[1, 2, 3, 6]);
        assert!(classify(&d).tight);
    }

    #[test]
    fn develop_thirteen_points() {
        let d = develop(&base_family(3, 2).unwrap()).unwrap();
        assert_eq!((d.v(), d.b()), (13, 26));
        assert_eq!(d.block(2), &[1, 3, 8]);
        assert!(classify(&d).tight);
    }
}
