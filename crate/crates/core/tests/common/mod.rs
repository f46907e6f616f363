#![allow(dead_code)]

use std::collections::BTreeSet;

use dccd::construct::{catalog, catalog_names, csccd_consecutive, double_points};
use dccd::{
    exhaustive_min_blocks, unchanged_subsets, Block, Design, Error, SearchLimits,
};
use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;

pub type Partition = Vec<(usize, Block)>;

/// Every partition of the point set into unchanged subsets at distinct
/// locations, by plain include/exclude enumeration over the locations.
pub fn all_expansion_sets(d: &Design) -> Vec<Partition> {
    let u = match unchanged_subsets(d) {
        Ok(u) => u,
        Err(_) => return Vec::new(),
    };
    let locs: Vec<(usize, Vec<Block>)> =
        u.locations().map(|l| (l, u.candidates(l))).collect();
    let mut out = Vec::new();
    let mut used = vec![false; d.v()];
    let mut chosen = Vec::new();
    enumerate(&locs, 0, &mut used, &mut chosen, &mut out);
    out
}

fn enumerate(
    locs: &[(usize, Vec<Block>)],
    i: usize,
    used: &mut Vec<bool>,
    chosen: &mut Partition,
    out: &mut Vec<Partition>,
) {
    if i == locs.len() {
        if used.iter().all(|&u| u) {
            out.push(chosen.clone());
        }
        return;
    }
    enumerate(locs, i + 1, used, chosen, out);
    let (loc, cands) = &locs[i];
    for c in cands {
        if c.is_empty() || c.iter().any(|&p| used[p]) {
            continue;
        }
        for &p in c {
            used[p] = true;
        }
        chosen.push((*loc, c.clone()));
        enumerate(locs, i + 1, used, chosen, out);
        chosen.pop();
        for &p in c {
            used[p] = false;
        }
    }
}

/// A linear double change walk of `b` blocks from a random first block.
pub fn random_walk(rng: &mut StdRng, v: usize, k: usize, b: usize) -> Vec<Block> {
    let mut pts: Vec<usize> = (0..v).collect();
    pts.shuffle(rng);
    let mut cur: Block = pts[..k].to_vec();
    let mut blocks = vec![cur.clone()];
    for _ in 1..b {
        let out: Vec<usize> = cur.sample(rng, 2).copied().collect();
        let outside: Vec<usize> = (0..v).filter(|p| !cur.contains(p)).collect();
        let add: Vec<usize> = outside.sample(rng, 2).copied().collect();
        cur.retain(|p| !out.contains(p));
        cur.extend(add);
        cur.sort_unstable();
        blocks.push(cur.clone());
    }
    blocks
}

/// A walk followed by its reverse, which closes into a circular double
/// change design.
pub fn random_round_trip(rng: &mut StdRng, v: usize, k: usize, half: usize) -> Vec<Block> {
    let walk = random_walk(rng, v, k, half);
    let back = walk[1..half - 1].iter().rev().cloned();
    walk.iter().cloned().chain(back).collect()
}

/// Deterministic random double change designs, linear and circular.
pub fn random_designs(seed: u64, count: usize) -> Vec<Design> {
    let mut rng = StdRng::seed_from_u64(seed);
    let shapes = [(6, 3), (6, 4), (8, 4), (9, 3), (9, 5), (10, 4), (12, 5), (12, 6)];
    (0..count)
        .map(|i| {
            let (v, k) = *shapes.choose(&mut rng).unwrap();
            let b = 2 + i % 9;
            if i % 2 == 0 {
                Design::new(v, k, false, random_walk(&mut rng, v, k, b)).unwrap()
            } else {
                let blocks = random_round_trip(&mut rng, v, k, b + 1);
                Design::new(v, k, true, blocks).unwrap()
            }
        })
        .collect()
}

/// Double change designs on at most 16 points: catalog entries, their linear
/// orders, search witnesses and seeded random walks.
pub fn small_corpus() -> Vec<(String, Design)> {
    let mut out = Vec::new();
    for name in catalog_names() {
        let d = catalog(name).unwrap().design;
        if d.v() <= 16 && unchanged_subsets(&d).is_ok() {
            if d.is_circular() {
                out.push((format!("{name} as linear"), d.with_circular(false)));
            }
            out.push((name.to_string(), d));
        }
    }
    for (v, k, circular, b_max) in [(7, 3, false, 7), (6, 4, true, 3), (8, 4, false, 8)] {
        let limits = SearchLimits::default();
        if let Some(d) = exhaustive_min_blocks(v, k, circular, b_max, limits).unwrap() {
            out.push((format!("search-min v={v} k={k} circular={circular}"), d));
        }
    }
    for (i, d) in random_designs(7, 40).into_iter().enumerate() {
        out.push((format!("random walk {i}"), d));
    }
    out
}

/// The literal ten-point design: the six-point doubled design with the four
/// new points `a, b, c, d` relabelled `6, 7, 8, 9`.
pub fn ten_point_fixture() -> Design {
    let blocks = vec![
        vec![0, 1, 2, 3],
        vec![2, 3, 6, 7],
        vec![2, 3, 8, 9],
        vec![2, 3, 4, 5],
        vec![4, 5, 6, 8],
        vec![4, 5, 7, 9],
        vec![0, 1, 4, 5],
        vec![0, 1, 6, 9],
        vec![0, 1, 7, 8],
    ];
    Design::new(10, 4, true, blocks).unwrap()
}

pub fn sorted(parts: &[(usize, Block)]) -> BTreeSet<(usize, Block)> {
    parts.iter().cloned().collect()
}

pub fn six_point() -> Design {
    double_points(&csccd_consecutive(2).unwrap()).unwrap()
}

pub fn is_refusal(e: &Error) -> bool {
    matches!(e, Error::SearchRefused(_))
}
