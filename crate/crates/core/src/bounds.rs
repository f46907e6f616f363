//! Counting lower bounds on the number of blocks.
//!
//! After the first block of a linear design, every block of an `m`-change
//! design introduces exactly `m` points, so it covers at most
//! `sum_{i=1..t} C(m, i) C(k-m, t-i)` new `t`-sets. The first block of a
//! linear design covers `C(k, t)`. Dividing the `t`-sets left to cover by the
//! per-block capacity gives the bounds below. All arithmetic is exact.

use crate::error::{Error, Result};

/// Parameters of a bound evaluation, with `1 <= t <= k <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundQuery {
    v: u64,
    k: u64,
    t: u64,
}

impl BoundQuery {
    pub fn new(v: u64, k: u64, t: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::parameter("strength t must be at least 1"));
        }
        if t > k {
            return Err(Error::parameter(format!("strength t={t} exceeds block size k={k}")));
        }
        if k > v {
            return Err(Error::parameter(format!("block size k={k} exceeds point count v={v}")));
        }
        let q = BoundQuery { v, k, t };
        if q.capacity(2)? == 0 {
            return Err(Error::parameter(format!(
                "no t-sets can be introduced by a double change with k={k}, t={t}"
            )));
        }
        Ok(q)
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Largest number of `t`-sets a block that introduces `m` points can cover.
    pub fn capacity(&self, m: u64) -> Result<u128> {
        if m > self.k {
            return Err(Error::parameter(format!("change size m={m} exceeds block size")));
        }
        Ok((1..=self.t)
            .map(|i| binomial(m, i) * binomial(self.k - m, self.t - i))
            .sum())
    }
}

/// A bound value together with whether the underlying division was exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChangeBound {
    pub value: u64,
    /// True when the counting argument leaves no slack, which is a
    /// prerequisite for a design meeting the bound to cover every `t`-set
    /// exactly once.
    pub exact: bool,
}

/// Lower bound on the block count of an `m`-change covering design.
pub fn change_bound(q: BoundQuery, m: u64, circular: bool) -> Result<ChangeBound> {
    let den = q.capacity(m)?;
    if den == 0 {
        return Err(Error::parameter(format!(
            "a {m}-change block introduces no {}-sets at k={}",
            q.t, q.k
        )));
    }
    let all = binomial(q.v, q.t);
    let (num, extra) = if circular {
        (all, 0)
    } else {
        (all.saturating_sub(binomial(q.k, q.t)), 1)
    };
    let value = div_ceil(num, den) + extra;
    let value = u64::try_from(value)
        .map_err(|_| Error::parameter("bound does not fit in 64 bits"))?;
    Ok(ChangeBound { value, exact: num % den == 0 })
}

/// Minimum number of blocks of a linear double change covering design.
pub fn lower_bound_linear(q: BoundQuery) -> u64 {
    change_bound(q, 2, false)
        .expect("validated query has positive double change capacity")
        .value
}

/// Minimum number of blocks of a circular double change covering design.
pub fn lower_bound_circular(q: BoundQuery) -> u64 {
    change_bound(q, 2, true)
        .expect("validated query has positive double change capacity")
        .value
}

pub(crate) fn div_ceil(a: u128, d: u128) -> u128 {
    a.div_ceil(d)
}

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}
