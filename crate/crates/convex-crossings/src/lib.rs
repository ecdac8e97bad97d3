//! Convex (outerplanar) crossing numbers of complete multipartite graphs.
//!
//! A convex drawing places all vertices on a circle and draws edges as
//! straight chords through the interior; the convex crossing number is the
//! minimum number of chord crossings over all such drawings. This crate
//! covers the family `K(p^(1), m^(n))` — `n` partite sets of size `m` plus
//! one of size `p` — for the divisible cases `p | mn` or `mn | p`:
//!
//! * [`formulas`] — exact closed-form values,
//! * [`bounds`] — the lower-bound pipeline that re-derives those values
//!   from balanced edge-count maxima,
//! * [`layout`] — the evenly-distributed circular drawing that attains them,
//! * [`search`] — brute-force minimization over circular orderings (the
//!   independent oracle) and a hill-climbing heuristic,
//! * [`multipartite`] / [`drawing`] — the underlying graph and drawing
//!   representations.
//!
//! The `parallel` feature (on by default) parallelizes crossing counting,
//! enumeration, and heuristic restarts with rayon; with
//! `--no-default-features` everything runs sequentially with identical
//! results.

pub mod bounds;
pub mod drawing;
pub mod formulas;
pub mod layout;
pub mod multipartite;
pub mod search;

pub use drawing::ConvexDrawing;
pub use multipartite::{ExactInt, PartitionSpec};
