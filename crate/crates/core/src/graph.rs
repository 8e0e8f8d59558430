//! Search instances on the complete bipartite graph and the arc index space.
//!
//! Vertex ids are fixed: set X occupies `0..n1`, set Y occupies
//! `n1..n1 + n2`. Marked vertices are always the first `k1` ids of X and
//! the first `k2` ids of Y; within-set symmetry of the walk makes the
//! choice immaterial, and pinning it keeps CSV output reproducible.
//!
//! Every vertex carries a self-loop arc even at weight zero, so the
//! Hilbert-space dimension never depends on `l1`, `l2`; the weights enter
//! only through amplitudes. Arcs out of a vertex are stored contiguously,
//! cross arcs first (in head order), loop last:
//!
//! ```text
//! index(x -> y)  = x * (n2 + 1) + (y - n1)         x in X, y in Y
//! index(x -> x)  = x * (n2 + 1) + n2
//! index(y -> x)  = n1 * (n2 + 1) + (y - n1) * (n1 + 1) + x
//! index(y -> y)  = n1 * (n2 + 1) + (y - n1) * (n1 + 1) + n1
//! ```

use core::fmt;

/// Problem definition: set sizes, per-set loop weights, marked counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipartiteInstance {
    n1: usize,
    n2: usize,
    l1: f64,
    l2: f64,
    k1: usize,
    k2: usize,
}

/// A directed arc `tail -> head`; loops have `tail == head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcIndex {
    pub tail: usize,
    pub head: usize,
}

impl ArcIndex {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// Rejected instance parameters or out-of-range queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceError {
    /// A partite set would be empty.
    EmptySet,
    /// A loop weight is negative, NaN or infinite.
    InvalidWeight,
    /// More marked vertices than the set holds.
    TooManyMarked,
    /// A vertex or arc query referenced an id outside the instance.
    OutOfRange,
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::EmptySet => write!(f, "partite sets must be non-empty"),
            InstanceError::InvalidWeight => {
                write!(f, "self-loop weights must be finite and non-negative")
            }
            InstanceError::TooManyMarked => {
                write!(f, "marked count exceeds partite set size")
            }
            InstanceError::OutOfRange => write!(f, "vertex or arc id out of range"),
        }
    }
}

impl core::error::Error for InstanceError {}

impl BipartiteInstance {
    /// Builds a validated instance. Marked vertices are the first `k1` ids
    /// of X and the first `k2` ids of Y by convention.
    pub fn new(
        n1: usize,
        n2: usize,
        l1: f64,
        l2: f64,
        k1: usize,
        k2: usize,
    ) -> Result<Self, InstanceError> {
        if n1 == 0 || n2 == 0 {
            return Err(InstanceError::EmptySet);
        }
        if !(l1.is_finite() && l2.is_finite()) || l1 < 0.0 || l2 < 0.0 {
            return Err(InstanceError::InvalidWeight);
        }
        if k1 > n1 || k2 > n2 {
            return Err(InstanceError::TooManyMarked);
        }
        Ok(Self { n1, n2, l1, l2, k1, k2 })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }
    pub fn n2(&self) -> usize {
        self.n2
    }
    pub fn l1(&self) -> f64 {
        self.l1
    }
    pub fn l2(&self) -> f64 {
        self.l2
    }
    pub fn k1(&self) -> usize {
        self.k1
    }
    pub fn k2(&self) -> usize {
        self.k2
    }

    pub fn vertex_count(&self) -> usize {
        self.n1 + self.n2
    }

    /// Number of directed arcs: `2*n1*n2` cross arcs plus one loop per vertex.
    pub fn arc_count(&self) -> usize {
        2 * self.n1 * self.n2 + self.n1 + self.n2
    }

    /// True for ids `0..n1`.
    pub fn is_x(&self, vertex: usize) -> bool {
        vertex < self.n1
    }

    /// Weighted degree: `n2 + l1` for X-vertices, `n1 + l2` for Y-vertices.
    pub fn degree(&self, vertex: usize) -> f64 {
        if self.is_x(vertex) {
            self.n2 as f64 + self.l1
        } else {
            self.n1 as f64 + self.l2
        }
    }

    /// Whether the oracle flips arcs leaving this vertex.
    pub fn is_marked(&self, vertex: usize) -> Result<bool, InstanceError> {
        if vertex >= self.vertex_count() {
            return Err(InstanceError::OutOfRange);
        }
        Ok(if self.is_x(vertex) {
            vertex < self.k1
        } else {
            vertex - self.n1 < self.k2
        })
    }

    /// The same graph with the roles of X and Y exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            n1: self.n2,
            n2: self.n1,
            l1: self.l2,
            l2: self.l1,
            k1: self.k2,
            k2: self.k1,
        }
    }

    /// A copy with different loop weights (used by sweeps and heatmaps).
    pub fn with_weights(&self, l1: f64, l2: f64) -> Result<Self, InstanceError> {
        Self::new(self.n1, self.n2, l1, l2, self.k1, self.k2)
    }

    /// Start of the Y-vertex blocks in the arc layout.
    pub(crate) fn y_block_base(&self) -> usize {
        self.n1 * (self.n2 + 1)
    }

    /// (first arc index, cross-arc count) of the block of arcs leaving `vertex`.
    pub(crate) fn block(&self, vertex: usize) -> (usize, usize) {
        if self.is_x(vertex) {
            (vertex * (self.n2 + 1), self.n2)
        } else {
            (self.y_block_base() + (vertex - self.n1) * (self.n1 + 1), self.n1)
        }
    }

    /// Dense index of an arc, rejecting pairs that are not arcs of the graph.
    pub fn arc_to_index(&self, arc: ArcIndex) -> Result<usize, InstanceError> {
        let n = self.vertex_count();
        if arc.tail >= n || arc.head >= n {
            return Err(InstanceError::OutOfRange);
        }
        let (start, cross) = self.block(arc.tail);
        if arc.is_loop() {
            return Ok(start + cross);
        }
        // Cross arcs must change sides.
        if self.is_x(arc.tail) == self.is_x(arc.head) {
            return Err(InstanceError::OutOfRange);
        }
        let offset = if self.is_x(arc.head) { arc.head } else { arc.head - self.n1 };
        Ok(start + offset)
    }

    /// Inverse of [`arc_to_index`](Self::arc_to_index).
    pub fn index_to_arc(&self, index: usize) -> Result<ArcIndex, InstanceError> {
        if index >= self.arc_count() {
            return Err(InstanceError::OutOfRange);
        }
        let base = self.y_block_base();
        if index < base {
            let tail = index / (self.n2 + 1);
            let j = index % (self.n2 + 1);
            let head = if j == self.n2 { tail } else { self.n1 + j };
            Ok(ArcIndex { tail, head })
        } else {
            let rel = index - base;
            let tail = self.n1 + rel / (self.n1 + 1);
            let j = rel % (self.n1 + 1);
            let head = if j == self.n1 { tail } else { j };
            Ok(ArcIndex { tail, head })
        }
    }

    /// Iterates all arcs in index order.
    pub fn arcs(&self) -> impl Iterator<Item = ArcIndex> + '_ {
        (0..self.arc_count()).map(move |i| self.index_to_arc(i).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_counts() {
        let inst = BipartiteInstance::new(2, 3, 0.0, 0.0, 0, 0).unwrap();
        assert_eq!(inst.arc_count(), 17);
        let inst = BipartiteInstance::new(1, 1, 0.0, 0.0, 0, 0).unwrap();
        assert_eq!(inst.arc_count(), 4);
        let inst = BipartiteInstance::new(1000, 800, 1.2, 0.0, 3, 0).unwrap();
        assert_eq!(inst.arc_count(), 1_601_800);
    }

    #[test]
    fn rejects_invalid_instances() {
        assert_eq!(
            BipartiteInstance::new(0, 3, 0.0, 0.0, 0, 0),
            Err(InstanceError::EmptySet)
        );
        assert_eq!(
            BipartiteInstance::new(3, 3, -1.0, 0.0, 0, 0),
            Err(InstanceError::InvalidWeight)
        );
        assert_eq!(
            BipartiteInstance::new(3, 3, f64::NAN, 0.0, 0, 0),
            Err(InstanceError::InvalidWeight)
        );
        assert_eq!(
            BipartiteInstance::new(3, 3, 0.0, 0.0, 4, 0),
            Err(InstanceError::TooManyMarked)
        );
        assert_eq!(
            BipartiteInstance::new(3, 3, 0.0, 0.0, 0, 4),
            Err(InstanceError::TooManyMarked)
        );
    }

    #[test]
    fn paper_instances_are_valid() {
        assert!(BipartiteInstance::new(1000, 800, 1.2, 0.0, 3, 0).is_ok());
        assert!(BipartiteInstance::new(1000, 1000, 5.0, 5.0, 5, 5).is_ok());
        assert!(BipartiteInstance::new(10, 10, 0.0, 0.0, 0, 0).is_ok());
    }

    #[test]
    fn marking_is_prefix_of_each_set() {
        let inst = BipartiteInstance::new(10, 6, 0.0, 0.0, 3, 0).unwrap();
        assert!(inst.is_marked(0).unwrap());
        assert!(inst.is_marked(2).unwrap());
        assert!(!inst.is_marked(5).unwrap());
        for y in 10..16 {
            assert!(!inst.is_marked(y).unwrap());
        }
        assert_eq!(inst.is_marked(16), Err(InstanceError::OutOfRange));
    }

    #[test]
    fn index_round_trips_all_arcs() {
        let inst = BipartiteInstance::new(5, 3, 0.7, 0.0, 2, 1).unwrap();
        for (i, arc) in inst.arcs().enumerate() {
            assert_eq!(inst.arc_to_index(arc).unwrap(), i);
        }
        // within-set pairs are not arcs
        assert!(inst.arc_to_index(ArcIndex { tail: 0, head: 1 }).is_err());
        assert!(inst.arc_to_index(ArcIndex { tail: 5, head: 6 }).is_err());
    }

    #[test]
    fn degree_matches_coin_normalization() {
        let inst = BipartiteInstance::new(7, 4, 1.5, 0.25, 1, 0).unwrap();
        for v in 0..inst.vertex_count() {
            let (_, cross) = inst.block(v);
            let l = if inst.is_x(v) { inst.l1() } else { inst.l2() };
            assert_eq!(inst.degree(v), cross as f64 + l);
        }
    }
}
