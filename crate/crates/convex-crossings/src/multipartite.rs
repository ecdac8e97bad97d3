//! Complete multipartite graphs: partite-set layout, vertex/edge
//! enumeration, and exact edge counts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact nonnegative integer for crossing counts and formula values.
///
/// Wide enough for every instance the formula evaluators accept; inputs are
/// range-guarded so intermediate `i128` arithmetic cannot overflow.
pub type ExactInt = u128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("partition must contain at least one partite set")]
    Empty,
    #[error("partite set {index} has size 0; every set needs at least one vertex")]
    ZeroSize { index: usize },
}

/// A complete multipartite graph given by its ordered partite-set sizes.
///
/// Vertices are numbered `0..N` in block order: class 0 first, then class 1,
/// and so on. Edges join exactly the pairs of vertices in different classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartitionSpec {
    sizes: Vec<usize>,
    // prefix[i] = id of the first vertex of class i; prefix[len] = N
    prefix: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self, SpecError> {
        if sizes.is_empty() {
            return Err(SpecError::Empty);
        }
        if let Some(index) = sizes.iter().position(|&s| s == 0) {
            return Err(SpecError::ZeroSize { index });
        }
        let mut prefix = Vec::with_capacity(sizes.len() + 1);
        let mut acc = 0usize;
        prefix.push(0);
        for &s in &sizes {
            acc += s;
            prefix.push(acc);
        }
        Ok(Self { sizes, prefix })
    }

    /// `K(p^(1), m^(n))`: one set of size `p` (class 0) followed by `n` sets
    /// of size `m`.
    pub fn special_balanced(m: usize, n: usize, p: usize) -> Result<Self, SpecError> {
        let mut sizes = Vec::with_capacity(n + 1);
        sizes.push(p);
        sizes.extend(std::iter::repeat_n(m, n));
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn total_vertices(&self) -> usize {
        *self.prefix.last().expect("prefix is never empty")
    }

    /// First vertex id of the given class.
    pub fn class_start(&self, class: usize) -> usize {
        self.prefix[class]
    }

    /// Class of a vertex id. Panics if `v` is out of range.
    pub fn class_of(&self, v: usize) -> usize {
        assert!(v < self.total_vertices(), "vertex {v} out of range");
        // prefix is strictly increasing past index 0
        self.prefix.partition_point(|&start| start <= v) - 1
    }

    /// Class id of every vertex, in vertex-id order.
    pub fn class_ids(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.total_vertices());
        for (class, &s) in self.sizes.iter().enumerate() {
            out.extend(std::iter::repeat_n(class, s));
        }
        out
    }

    /// All edges as vertex-id pairs `(u, v)` with `u < v`: exactly the pairs
    /// whose endpoints lie in different partite sets.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let classes = self.class_ids();
        let n = self.total_vertices();
        let mut out = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if classes[u] != classes[v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Exact edge count: `C(N,2) - sum_i C(sizes[i],2)`.
    pub fn edge_count(&self) -> ExactInt {
        let n = self.total_vertices() as u128;
        let same: u128 = self.sizes.iter().map(|&s| binom2(s as u128)).sum();
        binom2(n) - same
    }
}

impl TryFrom<Vec<usize>> for PartitionSpec {
    type Error = SpecError;

    fn try_from(sizes: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(sizes)
    }
}

impl From<PartitionSpec> for Vec<usize> {
    fn from(spec: PartitionSpec) -> Self {
        spec.sizes
    }
}

fn binom2(n: u128) -> u128 {
    n * n.saturating_sub(1) / 2
}

/// Edge count of `K(a^(m_count), b^(n_count))`:
/// `1/2·m·a·((m-1)a + n·b) + 1/2·n·b·((n-1)b + m·a)`.
///
/// Pure arithmetic; tolerates zero sizes and zero counts (the empty blocks
/// simply contribute nothing).
pub fn edge_count_two_block(a: u128, m_count: u128, b: u128, n_count: u128) -> ExactInt {
    let first = m_count * a * ((m_count - u128::from(m_count > 0)) * a + n_count * b);
    let second = n_count * b * ((n_count - u128::from(n_count > 0)) * b + m_count * a);
    debug_assert_eq!((first + second) % 2, 0);
    (first + second) / 2
}

/// Total edge count of the balanced graph `K_{m^(n)}`: `1/2·m²·n·(n-1)`.
pub fn total_edges_balanced(m: u128, n: u128) -> ExactInt {
    m * m * n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(PartitionSpec::new(vec![]), Err(SpecError::Empty));
        assert_eq!(
            PartitionSpec::new(vec![2, 0, 1]),
            Err(SpecError::ZeroSize { index: 1 })
        );
    }

    #[test]
    fn block_layout_and_classes() {
        let spec = PartitionSpec::new(vec![2, 3, 1]).unwrap();
        assert_eq!(spec.total_vertices(), 6);
        assert_eq!(spec.class_ids(), vec![0, 0, 1, 1, 1, 2]);
        assert_eq!(spec.class_of(0), 0);
        assert_eq!(spec.class_of(4), 1);
        assert_eq!(spec.class_of(5), 2);
    }

    #[test]
    fn special_balanced_shape() {
        let spec = PartitionSpec::special_balanced(2, 3, 5).unwrap();
        assert_eq!(spec.sizes(), &[5, 2, 2, 2]);
        assert!(PartitionSpec::special_balanced(2, 3, 0).is_err());
    }

    #[test]
    fn edges_examples() {
        let k2 = PartitionSpec::new(vec![1, 1]).unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);

        let single = PartitionSpec::new(vec![2]).unwrap();
        assert!(single.edges().is_empty());

        let k21 = PartitionSpec::new(vec![2, 1]).unwrap();
        assert_eq!(k21.edges().len(), 2);
    }

    #[test]
    fn edge_count_two_block_examples() {
        // K_4
        assert_eq!(edge_count_two_block(1, 4, 0, 0), 6);
        // K_{2,4}
        assert_eq!(edge_count_two_block(2, 1, 4, 1), 8);
        // K_{2,2,2}
        assert_eq!(edge_count_two_block(2, 3, 0, 0), 12);
        // empty blocks
        assert_eq!(edge_count_two_block(0, 5, 3, 0), 0);
        assert_eq!(edge_count_two_block(1, 0, 0, 4), 0);
    }

    #[test]
    fn total_edges_balanced_examples() {
        assert_eq!(total_edges_balanced(1, 4), 6);
        assert_eq!(total_edges_balanced(2, 3), 12);
        for m in 1..=8u128 {
            assert_eq!(total_edges_balanced(m, 1), 0);
        }
    }

    // |edges(spec)| = C(N,2) - sum C(size,2) on every composition with N <= 12.
    #[test]
    fn edge_identity_all_small_specs() {
        fn compositions(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in 1..=12 {
            for sizes in compositions(n) {
                let spec = PartitionSpec::new(sizes).unwrap();
                assert_eq!(spec.edges().len() as u128, spec.edge_count());
            }
        }
    }

    // edge_count_two_block agrees with direct enumeration over the
    // corresponding spec for all a, b <= 4 and block counts <= 4.
    #[test]
    fn two_block_matches_enumeration() {
        for a in 0..=4usize {
            for m_count in 0..=4usize {
                for b in 0..=4usize {
                    for n_count in 0..=4usize {
                        let mut sizes = vec![a; m_count];
                        sizes.extend(vec![b; n_count]);
                        sizes.retain(|&s| s > 0);
                        let expected = if sizes.is_empty() {
                            0
                        } else {
                            PartitionSpec::new(sizes).unwrap().edges().len() as u128
                        };
                        // zero-size blocks contribute no vertices, so dropping
                        // them must not change the formula value either
                        let via_formula = edge_count_two_block(
                            a as u128,
                            m_count as u128,
                            b as u128,
                            n_count as u128,
                        );
                        assert_eq!(via_formula, expected, "a={a} m={m_count} b={b} n={n_count}");
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let spec = PartitionSpec::new(vec![4, 2, 2, 2]).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, "[4,2,2,2]");
        let back: PartitionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        assert!(serde_json::from_str::<PartitionSpec>("[1,0]").is_err());
    }
}
