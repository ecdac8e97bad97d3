//! Circular vertex placements and crossing counts for the induced
//! straight-chord drawing.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::multipartite::{ExactInt, PartitionSpec, SpecError};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error("order has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("order is not a permutation of 0..{n}")]
    NotPermutation { n: usize },
    #[error("class sequence does not match the partition sizes")]
    ClassMismatch,
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// A chord between two circle positions, normalized so `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    first: usize,
    second: usize,
}

impl Chord {
    /// Panics if the positions coincide.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "chord endpoints must be distinct positions");
        Self {
            first: a.min(b),
            second: a.max(b),
        }
    }

    pub fn first(&self) -> usize {
        self.first
    }

    pub fn second(&self) -> usize {
        self.second
    }
}

/// Standard interleaving test: two chords cross iff they share no endpoint
/// and exactly one endpoint of `c2` lies strictly between the endpoints of
/// `c1` along the circle.
pub fn chords_cross(c1: Chord, c2: Chord) -> bool {
    if c1.first == c2.first || c1.first == c2.second || c1.second == c2.first || c1.second == c2.second
    {
        return false;
    }
    let inside_a = c1.first < c2.first && c2.first < c1.second;
    let inside_b = c1.first < c2.second && c2.second < c1.second;
    inside_a != inside_b
}

/// A clockwise circular ordering of all vertices of a multipartite spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DrawingRepr", into = "DrawingRepr")]
pub struct ConvexDrawing {
    spec: PartitionSpec,
    order: Vec<usize>,
    // inverse permutation: position[v] = circle position of vertex v
    position: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct DrawingRepr {
    sizes: Vec<usize>,
    order: Vec<usize>,
}

impl ConvexDrawing {
    pub fn new(spec: PartitionSpec, order: Vec<usize>) -> Result<Self, DrawingError> {
        let n = spec.total_vertices();
        if order.len() != n {
            return Err(DrawingError::WrongLength {
                got: order.len(),
                expected: n,
            });
        }
        let mut position = vec![usize::MAX; n];
        for (pos, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(DrawingError::NotPermutation { n });
            }
            position[v] = pos;
        }
        Ok(Self {
            spec,
            order,
            position,
        })
    }

    /// Vertices placed in id order around the circle.
    pub fn identity(spec: PartitionSpec) -> Self {
        let n = spec.total_vertices();
        Self::new(spec, (0..n).collect()).expect("identity order is a permutation")
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position_of(&self, vertex: usize) -> usize {
        self.position[vertex]
    }

    /// Class id of the vertex at each circle position.
    pub fn class_sequence(&self) -> Vec<usize> {
        self.order.iter().map(|&v| self.spec.class_of(v)).collect()
    }

    /// Chords of all graph edges, as circle positions.
    pub fn chords(&self) -> Vec<Chord> {
        chords_of_class_sequence(&self.class_sequence())
    }

    /// Number of unordered edge pairs whose chords cross.
    pub fn count_crossings(&self) -> ExactInt {
        crossings_of_class_sequence(&self.class_sequence())
    }

    /// Sequential counting path, always available (used as the baseline in
    /// the par-vs-seq benches).
    pub fn count_crossings_seq(&self) -> ExactInt {
        crossings_of_class_sequence_seq(&self.class_sequence())
    }

    /// Lexicographically minimal class-id sequence over all rotations and
    /// the reflection. Drawings with equal canonical form have equal
    /// crossing counts.
    pub fn canonical_form(&self) -> Vec<usize> {
        canonical_class_sequence(&self.class_sequence())
    }
}

impl TryFrom<DrawingRepr> for ConvexDrawing {
    type Error = DrawingError;

    fn try_from(repr: DrawingRepr) -> Result<Self, Self::Error> {
        let spec = PartitionSpec::new(repr.sizes)?;
        ConvexDrawing::new(spec, repr.order)
    }
}

impl From<ConvexDrawing> for DrawingRepr {
    fn from(d: ConvexDrawing) -> Self {
        DrawingRepr {
            sizes: d.spec.sizes().to_vec(),
            order: d.order,
        }
    }
}

/// Chords of the complete multipartite graph whose circle positions carry
/// these class ids: one chord per position pair in different classes.
pub fn chords_of_class_sequence(classes: &[usize]) -> Vec<Chord> {
    let n = classes.len();
    let mut chords = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if classes[i] != classes[j] {
                chords.push(Chord { first: i, second: j });
            }
        }
    }
    chords
}

/// Crossing count of the drawing encoded by a class-id sequence.
/// The count depends only on this sequence, not on which same-class vertex
/// sits where.
#[cfg(feature = "parallel")]
pub fn crossings_of_class_sequence(classes: &[usize]) -> ExactInt {
    let chords = chords_of_class_sequence(classes);
    chords
        .par_iter()
        .enumerate()
        .map(|(i, &a)| {
            chords[i + 1..]
                .iter()
                .filter(|&&b| chords_cross(a, b))
                .count() as u128
        })
        .sum()
}

#[cfg(not(feature = "parallel"))]
pub fn crossings_of_class_sequence(classes: &[usize]) -> ExactInt {
    crossings_of_class_sequence_seq(classes)
}

/// Sequential pairwise count over all chord pairs.
pub fn crossings_of_class_sequence_seq(classes: &[usize]) -> ExactInt {
    let chords = chords_of_class_sequence(classes);
    let mut total: u128 = 0;
    for i in 0..chords.len() {
        for j in (i + 1)..chords.len() {
            if chords_cross(chords[i], chords[j]) {
                total += 1;
            }
        }
    }
    total
}

/// Lexicographically minimal sequence over all rotations of `classes` and
/// of its reversal.
pub fn canonical_class_sequence(classes: &[usize]) -> Vec<usize> {
    let n = classes.len();
    if n == 0 {
        return Vec::new();
    }
    let reversed: Vec<usize> = classes.iter().rev().copied().collect();
    let mut best: Option<Vec<usize>> = None;
    for seq in [classes, reversed.as_slice()] {
        for r in 0..n {
            let mut cand = Vec::with_capacity(n);
            cand.extend_from_slice(&seq[r..]);
            cand.extend_from_slice(&seq[..r]);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("nonempty sequence has a canonical form")
}

/// Build a drawing whose circle positions carry the given class ids,
/// assigning each class's vertex ids in order of appearance.
pub fn drawing_from_class_sequence(
    spec: &PartitionSpec,
    classes: &[usize],
) -> Result<ConvexDrawing, DrawingError> {
    if classes.len() != spec.total_vertices() {
        return Err(DrawingError::ClassMismatch);
    }
    let mut used = vec![0usize; spec.num_classes()];
    let mut order = Vec::with_capacity(classes.len());
    for &c in classes {
        if c >= spec.num_classes() || used[c] >= spec.sizes()[c] {
            return Err(DrawingError::ClassMismatch);
        }
        order.push(spec.class_start(c) + used[c]);
        used[c] += 1;
    }
    ConvexDrawing::new(spec.clone(), order)
}
