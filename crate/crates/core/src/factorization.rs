//! 1-factorizations of complete graphs on an even number of vertices.

use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge, smaller endpoint first.
pub type Edge = (usize, usize);

/// A partition of the edges of `K_n` into `n - 1` perfect matchings.
///
/// Values built by [`circle_method`] are valid by construction; values built
/// with [`OneFactorization::from_factors`] are taken as given and should be
/// checked with [`verify_factorization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    n: usize,
    factors: Vec<Vec<Edge>>,
}

impl OneFactorization {
    /// Wraps raw factors, normalizing each edge and sorting each factor.
    pub fn from_factors(n: usize, factors: Vec<Vec<Edge>>) -> Self {
        let factors = factors
            .into_iter()
            .map(|f| {
                let mut f: Vec<Edge> = f.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
                f.sort_unstable();
                f
            })
            .collect();
        OneFactorization { n, factors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Vec<Edge>] {
        &self.factors
    }
}

/// Circle-method factorization: vertex `n-1` sits at the centre and factor
/// `j` pairs it with `j`, then pairs `j - i` with `j + i` modulo `n - 1`.
pub fn circle_method(n: usize) -> Result<OneFactorization> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::parameter(format!("1-factorizations need an even n >= 2, got {n}")));
    }
    let r = n - 1;
    let factors = (0..r)
        .map(|j| {
            std::iter::once((j, r))
                .chain((1..n / 2).map(|i| ((j + r - i) % r, (j + i) % r)))
                .collect()
        })
        .collect();
    Ok(OneFactorization::from_factors(n, factors))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationViolation {
    /// `n` must be even and at least 2.
    BadOrder { n: usize },
    FactorCount { expected: usize, found: usize },
    /// An edge is a loop or leaves the vertex set.
    InvalidEdge { factor: usize, edge: Edge },
    /// A vertex is covered zero or several times by one factor.
    NotPerfectMatching { factor: usize, vertex: usize },
    /// An edge appears in more than one factor.
    DuplicateEdge { factor: usize, edge: Edge },
    /// An edge of `K_n` appears in no factor.
    MissingEdge { edge: Edge },
}

impl fmt::Display for FactorizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FactorizationViolation::*;
        match self {
            BadOrder { n } => write!(f, "vertex count {n} is not a positive even number"),
            FactorCount { expected, found } => write!(f, "expected {expected} factors, found {found}"),
            InvalidEdge { factor, edge } => write!(f, "factor {factor} has invalid edge {edge:?}"),
            NotPerfectMatching { factor, vertex } => {
                write!(f, "factor {factor} does not cover vertex {vertex} exactly once")
            }
            DuplicateEdge { factor, edge } => write!(f, "edge {edge:?} repeated in factor {factor}"),
            MissingEdge { edge } => write!(f, "edge {edge:?} belongs to no factor"),
        }
    }
}

/// Checks that every factor is a perfect matching and that the factors
/// partition the edges of `K_n`. Reports the first violation found.
pub fn verify_factorization(f: &OneFactorization) -> std::result::Result<(), FactorizationViolation> {
    let n = f.n;
    if n < 2 || !n.is_multiple_of(2) {
        return Err(FactorizationViolation::BadOrder { n });
    }
    let mut owner = vec![None; n * n];
    for (fi, factor) in f.factors.iter().enumerate() {
        let mut hit = vec![0u8; n];
        for &(a, b) in factor {
            if a == b || b >= n {
                return Err(FactorizationViolation::InvalidEdge { factor: fi, edge: (a, b) });
            }
            if owner[a * n + b].replace(fi).is_some() {
                return Err(FactorizationViolation::DuplicateEdge { factor: fi, edge: (a, b) });
            }
            hit[a] += 1;
            hit[b] += 1;
        }
        if let Some(vertex) = hit.iter().position(|&h| h != 1) {
            return Err(FactorizationViolation::NotPerfectMatching { factor: fi, vertex });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if owner[a * n + b].is_none() {
                return Err(FactorizationViolation::MissingEdge { edge: (a, b) });
            }
        }
    }
    if f.factors.len() != n - 1 {
        return Err(FactorizationViolation::FactorCount { expected: n - 1, found: f.factors.len() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_has_one_factor() {
        let f = circle_method(2).unwrap();
        assert_eq!(f.factors(), &[vec![(0, 1)]]);
    }

    #[test]
    fn k4_factors() {
        let f = circle_method(4).unwrap();
        assert_eq!(
            f.factors(),
            &[vec![(0, 3), (1, 2)], vec![(0, 2), (1, 3)], vec![(0, 1), (2, 3)]]
        );
    }

    #[test]
    fn circle_method_verifies_for_small_even_n() {
        for n in (2..=16).step_by(2) {
            let f = circle_method(n).unwrap();
            assert_eq!(verify_factorization(&f), Ok(()));
            assert_eq!(f.factors().len(), n - 1);
            assert!(f.factors().iter().all(|x| x.len() == n / 2));
        }
    }

    #[test]
    fn odd_or_zero_order_rejected() {
        for n in [0, 1, 3, 7] {
            assert!(matches!(circle_method(n), Err(Error::Parameter(_))));
        }
    }

    #[test]
    fn moved_edge_breaks_matching() {
        let mut factors = circle_method(4).unwrap().factors().to_vec();
        let e = factors[0].pop().unwrap();
        factors[1].push(e);
        let f = OneFactorization::from_factors(4, factors);
        assert_eq!(
            verify_factorization(&f),
            Err(FactorizationViolation::NotPerfectMatching { factor: 0, vertex: 1 })
        );
    }

    #[test]
    fn empty_factor_list_misses_the_edge() {
        let f = OneFactorization::from_factors(2, vec![]);
        assert_eq!(
            verify_factorization(&f),
            Err(FactorizationViolation::MissingEdge { edge: (0, 1) })
        );
    }

    #[test]
    fn duplicate_edge_reported() {
        let f = OneFactorization::from_factors(2, vec![vec![(0, 1)], vec![(1, 0)]]);
        assert_eq!(
            verify_factorization(&f),
            Err(FactorizationViolation::DuplicateEdge { factor: 1, edge: (0, 1) })
        );
    }
}
