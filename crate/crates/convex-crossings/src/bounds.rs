//! The lower-bound pipeline: crossing decomposition into the induced
//! balanced part, the induced bipartite part, and mixed crossings, with the
//! mixed term bounded per chord via balanced multipartite edge maxima.
//!
//! The pipeline is kept as an executable transcript of the argument — the
//! per-chord maxima come from [`BalancedSplit`] plus the two-block edge
//! count, not from a pre-simplified closed form — so its agreement with the
//! closed forms in [`crate::formulas`] is a real check, not a tautology.

use thiserror::Error;

use crate::formulas::{nu1_balanced, nu1_bipartite, FormulaError, FormulaInput, Theorem};
use crate::multipartite::{edge_count_two_block, total_edges_balanced, ExactInt};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("chord index k={k} outside 1..={mn}")]
    KOutOfRange { k: u64, mn: u64 },
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// `v` vertices spread over `n` partite sets as evenly as possible:
/// `remainder` sets of size `quotient + 1` and the rest of size `quotient`.
/// This shape maximizes the edge count among all n-part multipartite graphs
/// on `v` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedSplit {
    pub vertices: u64,
    pub parts: u64,
    pub quotient: u64,
    pub remainder: u64,
}

impl BalancedSplit {
    /// Panics if `parts` is zero.
    pub fn new(vertices: u64, parts: u64) -> Self {
        assert!(parts >= 1, "need at least one part");
        Self {
            vertices,
            parts,
            quotient: vertices / parts,
            remainder: vertices % parts,
        }
    }

    /// Edge count of `K((q+1)^(r), q^(n-r))`.
    pub fn max_edges(&self) -> ExactInt {
        edge_count_two_block(
            (self.quotient + 1) as u128,
            self.remainder as u128,
            self.quotient as u128,
            (self.parts - self.remainder) as u128,
        )
    }
}

/// Maximum edge count of a complete multipartite graph on `v` vertices with
/// at most `n` partite sets.
pub fn max_edges_balanced(v: u64, n: u64) -> ExactInt {
    BalancedSplit::new(v, n).max_edges()
}

/// Lower bound on the number of balanced-part edges forced to cross the
/// chord from a special vertex to the k-th balanced vertex around the
/// circle: total edges minus those incident to the endpoint and minus the
/// maximal counts fitting entirely on either side.
pub fn per_edge_bound(k: u64, m: u64, n: u64) -> Result<ExactInt, BoundError> {
    let mn = m * n;
    if k < 1 || k > mn {
        return Err(BoundError::KOutOfRange { k, mn });
    }
    let total = total_edges_balanced(m as u128, n as u128) as i128;
    let incident = (m * (n - 1)) as i128;
    let left = max_edges_balanced(k - 1, n) as i128;
    let right = max_edges_balanced(mn - k, n) as i128;
    let bound = total - incident - left - right;
    assert!(bound >= 0, "per-edge bound must be nonnegative (k={k}, m={m}, n={n})");
    Ok(bound as u128)
}

/// Lower bound on crossings inside the induced `K_{p,mn}`:
/// `1/12 mn(p-1)(2pmn-3p-mn)` when `p | mn`, `1/12 p(mn-1)(2pmn-3mn-p)` when
/// `mn | p`. The two agree at `p = mn`.
pub fn c2_lower_bound(m: u64, n: u64, p: u64) -> Result<ExactInt, FormulaError> {
    let input = FormulaInput::new(m, n, p)?;
    match input.applicable_theorem() {
        Some(Theorem::T1) => nu1_bipartite(p, m * n),
        Some(Theorem::T2) => nu1_bipartite(m * n, p),
        None => Err(FormulaError::DivisibilityViolation {
            condition: "p | mn or mn | p",
        }),
    }
}

/// The assembled lower bound on `nu1(K(p^(1), m^(n)))` with all named
/// components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundBreakdown {
    /// Crossing number of the induced balanced part `K_{m^(n)}`.
    pub fulek_term: ExactInt,
    /// Lower bound on crossings inside the induced `K_{p,mn}`.
    pub c2_term: ExactInt,
    /// Per-chord mixed-crossing bounds, indexed by k = 1..=mn.
    pub per_edge_bounds: Vec<ExactInt>,
    /// `p * sum(per_edge_bounds)` — the ell-summation over the p special
    /// vertices collapses to multiplication by p.
    pub c3_term: ExactInt,
    pub total: ExactInt,
}

/// Run the full pipeline. The total equals the applicable closed form; the
/// acceptance suite checks this across the desk-scale domain.
pub fn total_lower_bound(m: u64, n: u64, p: u64) -> Result<BoundBreakdown, BoundError> {
    let input = FormulaInput::new(m, n, p)?;
    if input.applicable_theorem().is_none() {
        return Err(FormulaError::DivisibilityViolation {
            condition: "p | mn or mn | p",
        }
        .into());
    }
    let fulek_term = nu1_balanced(m, n)?;
    let c2_term = c2_lower_bound(m, n, p)?;
    let per_edge_bounds: Vec<ExactInt> = (1..=m * n)
        .map(|k| per_edge_bound(k, m, n))
        .collect::<Result<_, _>>()?;
    let c3_term = p as u128 * per_edge_bounds.iter().sum::<u128>();
    let total = fulek_term + c2_term + c3_term;
    Ok(BoundBreakdown {
        fulek_term,
        c2_term,
        per_edge_bounds,
        c3_term,
        total,
    })
}
