//! The ordered block list at the centre of every construction.

use std::fmt;

use crate::error::{Error, Result};

/// A point of the design. Points of a design on `v` points are `0..v`.
pub type Point = usize;

/// A block, kept sorted ascending.
pub type Block = Vec<Point>;

/// An ordered list of `k`-subsets of `{0, .., v-1}`, optionally circular.
///
/// Only block shape is checked on construction. Whether consecutive blocks
/// differ by the right number of elements is a property checked by
/// [`verify_m_change`](crate::verify::verify_m_change), never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    k: usize,
    circular: bool,
    blocks: Vec<Block>,
}

impl Design {
    pub fn new(v: usize, k: usize, circular: bool, blocks: Vec<Vec<Point>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::parameter("block size must be positive"));
        }
        if k > v {
            return Err(Error::parameter(format!("block size {k} exceeds point count {v}")));
        }
        if blocks.is_empty() {
            return Err(Error::parameter("a design needs at least one block"));
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut block) in blocks.into_iter().enumerate() {
            block.sort_unstable();
            if block.len() != k {
                return Err(Error::structural(format!(
                    "block {} has {} points, expected {k}",
                    i + 1,
                    block.len()
                )));
            }
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::structural(format!("block {} repeats a point", i + 1)));
            }
            if let Some(&p) = block.last().filter(|&&p| p >= v) {
                return Err(Error::structural(format!(
                    "block {} contains point {p} outside 0..{v}",
                    i + 1
                )));
            }
            sorted.push(block);
        }
        Ok(Design { v, k, circular, blocks: sorted })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of blocks.
    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_circular(&self) -> bool {
        self.circular
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[Point] {
        &self.blocks[i]
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    /// Same blocks, with the circular flag replaced.
    pub fn with_circular(&self, circular: bool) -> Design {
        Design { circular, ..self.clone() }
    }

    /// Index pairs `(i, j)` of consecutive blocks, including the wrap-around
    /// pair `(b-1, 0)` for circular designs with more than one block.
    pub fn gaps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let b = self.b();
        let wrap = self.circular && b > 1;
        (0..b.saturating_sub(1))
            .map(|i| (i, i + 1))
            .chain(wrap.then_some((b - 1, 0)))
    }

    /// Index of the block preceding block `i`, if any.
    pub fn predecessor(&self, i: usize) -> Option<usize> {
        match i {
            0 if self.circular && self.b() > 1 => Some(self.b() - 1),
            0 => None,
            _ => Some(i - 1),
        }
    }

    /// Relabels every point through `perm`, which must be a permutation of `0..v`.
    pub fn relabel(&self, perm: &[Point]) -> Result<Design> {
        if perm.len() != self.v {
            return Err(Error::parameter("relabeling must cover every point"));
        }
        let mut seen = vec![false; self.v];
        for &p in perm {
            if p >= self.v || std::mem::replace(&mut seen[p], true) {
                return Err(Error::parameter("relabeling is not a permutation"));
            }
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| perm[x]).collect())
            .collect();
        Design::new(self.v, self.k, self.circular, blocks)
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.circular { "circular" } else { "linear" };
        write!(f, "{kind} design (v={}, k={}, b={})", self.v, self.k, self.b())
    }
}

/// Sorted intersection size of two sorted blocks.
pub(crate) fn intersection_len(a: &[Point], b: &[Point]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

pub(crate) fn intersection(a: &[Point], b: &[Point]) -> Vec<Point> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

pub(crate) fn difference(a: &[Point], b: &[Point]) -> Vec<Point> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}
