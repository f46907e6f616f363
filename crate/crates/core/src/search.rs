//! Bounded exhaustive search for double change covering designs with the
//! fewest blocks.
//!
//! Depth-first over block sequences with two symmetry reductions: the first
//! block is `{0, .., k-1}` and points never seen before enter in ascending
//! order. Successor blocks are tried in lexicographic order, so the first
//! witness found is the canonical one. A partial sequence is abandoned when
//! the pairs still uncovered exceed what the remaining blocks can cover
//! (`2k - 3` each).

use crate::bounds::binomial;
use crate::design::Design;
use crate::error::{Error, Result};

/// `C(v, k)` above which a search must be explicitly allowed.
pub const DEFAULT_MAX_BLOCK_SUBSETS: u128 = 10_000;
/// `b_max` above which a search must be explicitly allowed.
pub const DEFAULT_MAX_BLOCKS: usize = 12;
/// Environment variable overriding the node budget in the command line tool.
pub const BUDGET_ENV: &str = "DCCD_SEARCH_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Maximum number of search nodes visited across all block counts.
    pub node_budget: u64,
    /// Lift the default refusal of large instances.
    pub allow_large: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { node_budget: 200_000_000, allow_large: false }
    }
}

/// Smallest `b <= b_max` for which a double change design covering every
/// pair exists, with the canonical witness; `Ok(None)` when there is none.
///
/// Running out of budget is an error, distinct from proving that no design
/// exists.
pub fn exhaustive_min_blocks(
    v: usize,
    k: usize,
    circular: bool,
    b_max: usize,
    limits: SearchLimits,
) -> Result<Option<Design>> {
    if k < 2 || k > v {
        return Err(Error::parameter(format!("search needs v >= k >= 2, got v={v}, k={k}")));
    }
    if b_max == 0 {
        return Err(Error::parameter("b_max must be positive"));
    }
    if v > 64 {
        return Err(Error::parameter("search supports at most 64 points"));
    }
    let subsets = binomial(v as u64, k as u64);
    if !limits.allow_large && (subsets > DEFAULT_MAX_BLOCK_SUBSETS || b_max > DEFAULT_MAX_BLOCKS) {
        return Err(Error::SearchRefused(format!(
            "C({v},{k}) = {subsets} and b_max = {b_max} exceed the default limits \
             (C(v,k) <= {DEFAULT_MAX_BLOCK_SUBSETS}, b_max <= {DEFAULT_MAX_BLOCKS})"
        )));
    }
    let mut nodes = 0u64;
    for b in 1..=b_max {
        if b == 1 {
            if v == k {
                return Ok(Some(Design::new(v, k, circular, vec![(0..k).collect()])?));
            }
            continue;
        }
        if v < k + 2 {
            continue;
        }
        let mut s = Search::new(v, k, circular, b, limits.node_budget, nodes);
        let found = s.run()?;
        nodes = s.nodes;
        if let Some(masks) = found {
            let blocks = masks.iter().map(|&m| points(m)).collect();
            return Ok(Some(Design::new(v, k, circular, blocks)?));
        }
    }
    Ok(None)
}

fn points(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

struct Search {
    v: usize,
    k: usize,
    circular: bool,
    b: usize,
    capacity: usize,
    counts: Vec<u16>,
    uncovered: usize,
    blocks: Vec<u64>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn new(v: usize, k: usize, circular: bool, b: usize, budget: u64, nodes: u64) -> Self {
        Search {
            v,
            k,
            circular,
            b,
            capacity: 2 * k - 3,
            counts: vec![0; v * v],
            uncovered: v * (v - 1) / 2,
            blocks: Vec::with_capacity(b),
            nodes,
            budget,
        }
    }

    fn bump(&mut self, x: usize, y: usize, up: bool) {
        let i = x.min(y) * self.v + x.max(y);
        if up {
            if self.counts[i] == 0 {
                self.uncovered -= 1;
            }
            self.counts[i] += 1;
        } else {
            self.counts[i] -= 1;
            if self.counts[i] == 0 {
                self.uncovered += 1;
            }
        }
    }

    /// Pairs of `block` with at least one member in `intro`.
    fn cover(&mut self, block: u64, intro: u64, up: bool) {
        let pts = points(block);
        for (a, &x) in pts.iter().enumerate() {
            for &y in &pts[a + 1..] {
                if intro >> x & 1 == 1 || intro >> y & 1 == 1 {
                    self.bump(x, y, up);
                }
            }
        }
    }

    fn run(&mut self) -> Result<Option<Vec<u64>>> {
        let first = (1u64 << self.k) - 1;
        self.blocks.push(first);
        if !self.circular {
            self.cover(first, first, true);
        }
        Ok(self.dfs(self.k)?.then(|| self.blocks.clone()))
    }

    fn dfs(&mut self, next_new: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        let first = self.blocks[0];
        let cur = *self.blocks.last().expect("first block placed");
        let remaining = self.b - self.blocks.len();
        if remaining == 0 {
            return Ok(self.close(first, cur));
        }
        let deferred = usize::from(self.circular);
        if self.uncovered > (remaining + deferred) * self.capacity
            || self.v - next_new > 2 * remaining
        {
            return Ok(false);
        }
        if self.circular && (cur & !first).count_ones() as usize > 2 * remaining + 2 {
            return Ok(false);
        }
        for (next, added, fresh) in self.successors(cur, next_new) {
            self.cover(next, added, true);
            self.blocks.push(next);
            if self.dfs(next_new + fresh)? {
                return Ok(true);
            }
            self.blocks.pop();
            self.cover(next, added, false);
        }
        Ok(false)
    }

    fn close(&mut self, first: u64, last: u64) -> bool {
        if !self.circular {
            return self.uncovered == 0;
        }
        if (first & last).count_ones() as usize + 2 != self.k {
            return false;
        }
        let intro = first & !last;
        self.cover(first, intro, true);
        let ok = self.uncovered == 0;
        self.cover(first, intro, false);
        ok
    }

    /// Blocks reachable from `cur` by a double change, in lexicographic
    /// order, with the introduced points and the number of unseen points used.
    fn successors(&self, cur: u64, next_new: usize) -> Vec<(u64, u64, usize)> {
        let inside = points(cur);
        let mut outside: Vec<usize> = (0..next_new).filter(|&p| cur >> p & 1 == 0).collect();
        outside.extend((next_new..self.v).take(2));
        let mut out = Vec::new();
        for (i, &x) in inside.iter().enumerate() {
            for &y in &inside[i + 1..] {
                let kept = cur & !(1 << x) & !(1 << y);
                for (j, &a) in outside.iter().enumerate() {
                    for &c in &outside[j + 1..] {
                        let fresh = usize::from(a >= next_new) + usize::from(c >= next_new);
                        // unseen points enter in order
                        if (fresh == 1 && c != next_new) || (fresh == 2 && a != next_new) {
                            continue;
                        }
                        let added = (1 << a) | (1 << c);
                        out.push((kept | added, added, fresh));
                    }
                }
            }
        }
        out.sort_by_key(|&(m, _, _)| points(m));
        out
    }
}
