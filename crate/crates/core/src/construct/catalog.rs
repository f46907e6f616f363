//! Named designs, rebuilt from their constructions on every lookup.
//!
//! Names follow `cdccd-v-k-b` (circular double change), `dccd-v-k-b` (linear
//! double change) and `csccd-v-k-b` (circular single change). Only the
//! seven-point design is stored literally; everything else is reconstructed
//! and checked against the flags its entry promises before it is returned.

use super::{adjoin_point, base_family, base_family_61, csccd_consecutive, develop, double_points};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::expansion::{chain_entry, expand_with_circle_method};
use crate::verify::classify;

/// What a catalog entry guarantees about its design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Promise {
    pub circular: bool,
    /// Number of points changed between consecutive blocks.
    pub change: usize,
    pub tight: bool,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub design: Design,
    /// Construction and parameters the design came from.
    pub provenance: String,
    pub promise: Promise,
}

const TIGHT_CIRCULAR: Promise = Promise { circular: true, change: 2, tight: true };
const TIGHT_LINEAR: Promise = Promise { circular: false, change: 2, tight: true };
const TIGHT_SINGLE: Promise = Promise { circular: true, change: 1, tight: true };

type Builder = fn() -> Result<(Design, String)>;

/// The seven-point design whose blocks are the lines of the Fano plane.
pub fn seven_point_design(circular: bool) -> Design {
    let blocks = vec![
        vec![0, 1, 2],
        vec![0, 4, 5],
        vec![2, 4, 3],
        vec![0, 6, 3],
        vec![1, 6, 4],
        vec![5, 6, 2],
        vec![5, 3, 1],
    ];
    Design::new(7, 3, circular, blocks).expect("stored design is well formed")
}

fn chain(c: usize, k: usize) -> Result<(Design, String)> {
    let e = chain_entry(c, k)?;
    Ok((
        e.design,
        format!("expand(develop(base_family(k={k}, c={c})), circle_method({}))", e.expansion_size + 1),
    ))
}

const ENTRIES: &[(&str, Promise, Builder)] = &[
    ("cdccd-7-3-7", TIGHT_CIRCULAR, || Ok((seven_point_design(true), "stored".into()))),
    ("dccd-7-3-7", TIGHT_LINEAR, || Ok((seven_point_design(false), "stored, linear order".into()))),
    ("csccd-3-2-3", TIGHT_SINGLE, || Ok((csccd_consecutive(2)?, "csccd_consecutive(2)".into()))),
    ("csccd-5-3-5", TIGHT_SINGLE, || Ok((csccd_consecutive(3)?, "csccd_consecutive(3)".into()))),
    ("cdccd-6-4-3", TIGHT_CIRCULAR, || {
        Ok((double_points(&csccd_consecutive(2)?)?, "double_points(csccd_consecutive(2))".into()))
    }),
    ("cdccd-7-5-3", TIGHT_CIRCULAR, || {
        let d = adjoin_point(&double_points(&csccd_consecutive(2)?)?)?;
        Ok((d, "adjoin_point(double_points(csccd_consecutive(2)))".into()))
    }),
    ("cdccd-3-3-1", TIGHT_CIRCULAR, || {
        let seed = Design::new(2, 2, true, vec![vec![0, 1]])?;
        Ok((adjoin_point(&seed)?, "adjoin_point(single block {0,1}), degenerate".into()))
    }),
    ("cdccd-10-4-9", TIGHT_CIRCULAR, || {
        let d = expand_with_circle_method(&double_points(&csccd_consecutive(2)?)?)?;
        Ok((d, "expand(double_points(csccd_consecutive(2)), circle_method(4))".into()))
    }),
    ("cdccd-11-4-11", TIGHT_CIRCULAR, || {
        Ok((develop(&base_family(4, 1)?)?, "develop(base_family(k=4, c=1))".into()))
    }),
    ("cdccd-13-3-26", TIGHT_CIRCULAR, || {
        Ok((develop(&base_family(3, 2)?)?, "develop(base_family(k=3, c=2))".into()))
    }),
    ("cdccd-21-4-42", TIGHT_CIRCULAR, || {
        Ok((develop(&base_family(4, 2)?)?, "develop(base_family(k=4, c=2))".into()))
    }),
    ("cdccd-61-4-366", TIGHT_CIRCULAR, || {
        Ok((develop(&base_family_61())?, "develop(base_family_61())".into()))
    }),
    ("cdccd-15-3-35", TIGHT_CIRCULAR, || chain(1, 3)),
    ("cdccd-21-5-30", TIGHT_CIRCULAR, || chain(1, 5)),
    ("cdccd-27-3-117", TIGHT_CIRCULAR, || chain(2, 3)),
    ("cdccd-55-7-135", TIGHT_CIRCULAR, || chain(2, 7)),
    ("cdccd-39-3-247", TIGHT_CIRCULAR, || chain(3, 3)),
    ("cdccd-105-9-364", TIGHT_CIRCULAR, || chain(3, 9)),
    ("cdccd-51-3-425", TIGHT_CIRCULAR, || chain(4, 3)),
    ("cdccd-77-5-418", TIGHT_CIRCULAR, || chain(4, 5)),
    ("cdccd-171-11-765", TIGHT_CIRCULAR, || chain(4, 11)),
    ("cdccd-63-3-651", TIGHT_CIRCULAR, || chain(5, 3)),
    ("cdccd-253-13-1386", TIGHT_CIRCULAR, || chain(5, 13)),
];

/// Alternative spellings accepted by [`catalog`].
const ALIASES: &[(&str, &str)] = &[("cdccd-7-3-7-linear", "dccd-7-3-7")];

pub fn catalog_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _, _)| *n).collect()
}

/// Builds the named design and re-verifies it against its promise.
pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let canonical = ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, target)| target);
    let Some((name, promise, build)) = ENTRIES.iter().find(|(n, _, _)| *n == canonical) else {
        return Err(Error::UnknownCatalogName {
            name: name.to_string(),
            available: catalog_names().iter().map(|s| s.to_string()).collect(),
        });
    };
    let (design, provenance) = build()?;
    let c = classify(&design);
    let holds = design.is_circular() == promise.circular
        && c.is_m_change.get(promise.change - 1) == Some(&true)
        && c.tight == promise.tight;
    if !holds {
        return Err(Error::structural(format!("catalog entry {name} fails its promised classification")));
    }
    Ok(CatalogEntry { name: name.to_string(), design, provenance, promise: *promise })
}
