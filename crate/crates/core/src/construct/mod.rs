//! Direct constructions of single and double change designs.
//!
//! * [`csccd_consecutive`]: the consecutive-block circular single change
//!   design on `Z_{2k-1}`.
//! * [`double_points`]: splits every point of such a design in two, turning
//!   single change into double change.
//! * [`adjoin_point`]: adds one fixed point to every block of a doubled design.
//! * [`difference`]: base block families developed over `Z_v`.
//! * [`catalog`]: every named design, rebuilt on demand and re-verified.

pub mod catalog;
pub mod difference;

pub use catalog::{catalog, catalog_names, CatalogEntry, Promise};
pub use difference::{base_family, base_family_61, develop, verify_base_family, BaseBlockFamily, FamilyCheck};

use crate::design::Design;
use crate::error::{Error, Result};
use crate::verify::{classify, verify_m_change};

/// Circular single change design on `Z_{2k-1}` whose blocks are the
/// `2k - 1` translates of `{0, 1, .., k-1}`, in order.
pub fn csccd_consecutive(k: usize) -> Result<Design> {
    if k < 2 {
        return Err(Error::parameter(format!("consecutive CSCCD needs k >= 2, got {k}")));
    }
    let v = 2 * k - 1;
    let blocks = (0..v).map(|i| (i..i + k).map(|x| x % v).collect()).collect();
    Design::new(v, k, true, blocks)
}

/// Replaces every point `x` by the two points `2x` and `2x + 1`.
///
/// The input must be a circular single change design on `2k - 1` points
/// covering every pair exactly once, as built by [`csccd_consecutive`]. The
/// result is a tight circular double change design with parameters
/// `(2v, 2k, b)`.
pub fn double_points(s: &Design) -> Result<Design> {
    if !s.is_circular() {
        return Err(Error::structural("point doubling needs a circular design"));
    }
    if let Some(f) = verify_m_change(s, 1)?.first_failure {
        return Err(Error::structural(format!("input is not single change at gap {}", f.gap)));
    }
    if s.v() + 1 != 2 * s.k() {
        return Err(Error::structural(format!(
            "input has v={} points, expected 2k-1 = {}",
            s.v(),
            2 * s.k() - 1
        )));
    }
    if !classify(s).tight {
        return Err(Error::structural("input does not cover every pair exactly once"));
    }
    let blocks = s
        .blocks()
        .iter()
        .map(|blk| blk.iter().flat_map(|&x| [2 * x, 2 * x + 1]).collect())
        .collect();
    Design::new(2 * s.v(), 2 * s.k(), true, blocks)
}

/// Adds a new point, labeled `v`, to every block.
///
/// The input must be a tight circular double change design with parameters
/// `(2k-2, k, k-1)` for even `k`; the result is a tight circular design with
/// parameters `(2k-1, k+1, k-1)`.
pub fn adjoin_point(d: &Design) -> Result<Design> {
    let (v, k, b) = (d.v(), d.k(), d.b());
    if !d.is_circular() || k % 2 != 0 || v + 2 != 2 * k || b + 1 != k {
        return Err(Error::structural(format!(
            "point adjunction needs a circular design with parameters (2k-2, k, k-1) for even k, \
             got ({v}, {k}, {b})"
        )));
    }
    let c = classify(d);
    if !(c.is_double_change() && c.tight) {
        return Err(Error::structural("point adjunction needs a tight double change design"));
    }
    let blocks = d
        .blocks()
        .iter()
        .map(|blk| blk.iter().copied().chain(std::iter::once(v)).collect())
        .collect();
    Design::new(v + 1, k + 1, true, blocks)
}
