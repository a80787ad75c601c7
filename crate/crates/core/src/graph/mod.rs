// SPDX-License-Identifier: Apache-2.0

//! Labeled simple graphs with optional rational edge weights.
//!
//! Vertices are numbered from 1. A graph is unweighted when every weight is
//! 0 or 1; only unweighted graphs take part in local complementation,
//! isomorphism and enumeration. Weighted graphs appear as recovery output.

mod iso;
mod spec_text;

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};

pub use iso::{
    are_isomorphic, canonical_form, connected_labeled, enumerate_connected, shape_name,
    CanonicalKey, Census, IsoClass,
};

/// A 1-based vertex (equivalently mode) index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    /// Panics if `index == 0`.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "vertex ids are 1-based");
        VertexId(index)
    }

    pub fn from_index(zero_based: usize) -> Self {
        VertexId(zero_based + 1)
    }

    /// The 1-based number.
    pub fn get(self) -> usize {
        self.0
    }

    /// The 0-based position.
    pub fn index(self) -> usize {
        self.0 - 1
    }

    pub fn check(self, n: usize) -> Result<Self> {
        if self.0 == 0 || self.0 > n {
            Err(Error::VertexOutOfRange { vertex: self.0, n })
        } else {
            Ok(self)
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Shorthand for [`VertexId::new`].
pub fn v(index: usize) -> VertexId {
    VertexId::new(index)
}

/// An edge with its weight, endpoints ordered `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
    pub weight: Rational,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    weights: Vec<Rational>,
}

impl Graph {
    /// The edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graphs have at least one vertex");
        Graph {
            n,
            weights: vec![Rational::zero(); n * n],
        }
    }

    /// Unweighted graph from 1-based edge pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b), Rational::one())?;
        }
        Ok(g)
    }

    /// Graph from a symmetric weight matrix with zero diagonal.
    pub fn from_weights(weights: &RatMatrix) -> Result<Self> {
        let n = weights.rows();
        if n == 0 || !weights.is_square() {
            return Err(Error::InvalidGraph(
                "weight matrix must be square and nonempty".into(),
            ));
        }
        let mut g = Self::empty(n);
        for i in 0..n {
            if !weights[(i, i)].is_zero() {
                return Err(Error::InvalidGraph(format!(
                    "nonzero diagonal at vertex {}",
                    i + 1
                )));
            }
            for j in 0..n {
                if weights[(i, j)] != weights[(j, i)] {
                    return Err(Error::InvalidGraph("weight matrix is not symmetric".into()));
                }
                g.weights[i * n + j] = weights[(i, j)].clone();
            }
        }
        Ok(g)
    }

    /// Sets the weight of a new edge `{a, b}`; a repeated edge or a self-loop is an error.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId, weight: Rational) -> Result<()> {
        a.check(self.n)?;
        b.check(self.n)?;
        if a == b {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
        }
        if !self.weight(a, b).is_zero() {
            return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
        }
        if weight.is_zero() {
            return Err(Error::InvalidGraph(format!("zero weight on edge {a}-{b}")));
        }
        self.set_weight(a, b, weight);
        Ok(())
    }

    fn set_weight(&mut self, a: VertexId, b: VertexId, w: Rational) {
        let (i, j) = (a.index(), b.index());
        self.weights[i * self.n + j] = w.clone();
        self.weights[j * self.n + i] = w;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId)
    }

    pub fn weight(&self, a: VertexId, b: VertexId) -> &Rational {
        &self.weights[a.index() * self.n + b.index()]
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        !self.weight(a, b).is_zero()
    }

    pub fn weight_matrix(&self) -> RatMatrix {
        RatMatrix::from_vec(self.n, self.n, self.weights.clone()).expect("n*n weights")
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero() || w.is_one())
    }

    pub(crate) fn require_unweighted(&self) -> Result<()> {
        if self.is_unweighted() {
            Ok(())
        } else {
            Err(Error::WeightedInput)
        }
    }

    /// Edges in lexicographic order of endpoints.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let w = &self.weights[i * self.n + j];
                if !w.is_zero() {
                    out.push(Edge {
                        a: VertexId::from_index(i),
                        b: VertexId::from_index(j),
                        weight: w.clone(),
                    });
                }
            }
        }
        out
    }

    /// Endpoint pairs, 1-based, in lexicographic order.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges()
            .iter()
            .map(|e| (e.a.get(), e.b.get()))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn degree(&self, a: VertexId) -> usize {
        self.support_neighbors(a).len()
    }

    /// The neighborhood `N_a` of an unweighted graph, ascending.
    pub fn neighbors(&self, a: VertexId) -> Result<Vec<VertexId>> {
        a.check(self.n)?;
        self.require_unweighted()?;
        Ok(self.support_neighbors(a))
    }

    /// Vertices joined to `a` by a nonzero weight, ascending. Panics if `a` is out of range.
    pub fn support_neighbors(&self, a: VertexId) -> Vec<VertexId> {
        let i = a.index();
        (0..self.n)
            .filter(|&j| !self.weights[i * self.n + j].is_zero())
            .map(VertexId::from_index)
            .collect()
    }

    /// Local complementation at `a`: every pair inside `N_a` is toggled.
    pub fn local_complement(&self, a: VertexId) -> Result<Graph> {
        let nbrs = self.neighbors(a)?;
        let mut out = self.clone();
        for (k, &b) in nbrs.iter().enumerate() {
            for &c in &nbrs[k + 1..] {
                let w = if self.has_edge(b, c) {
                    Rational::zero()
                } else {
                    Rational::one()
                };
                out.set_weight(b, c, w);
            }
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([VertexId(1)]);
        seen[0] = true;
        while let Some(a) = queue.pop_front() {
            for b in self.support_neighbors(a) {
                if !seen[b.index()] {
                    seen[b.index()] = true;
                    queue.push_back(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Relabels vertex `i` as `perm[i-1]`. `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for p in perm {
            p.check(self.n)?;
            if std::mem::replace(&mut seen[p.index()], true) {
                return Err(Error::InvalidGraph(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        let mut out = Graph::empty(self.n);
        for e in self.edges() {
            out.set_weight(perm[e.a.index()], perm[e.b.index()], e.weight);
        }
        Ok(out)
    }

    /// Bit mask of the upper-triangle adjacency; bit `k` is the `k`-th pair in
    /// lexicographic order. Requires an unweighted graph with `n ≤ 11`.
    pub fn edge_mask(&self) -> u64 {
        debug_assert!(self.n <= 11);
        let mut mask = 0u64;
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.weights[i * self.n + j].is_zero() {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        mask
    }

    pub fn from_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> k & 1 == 1 {
                    g.set_weight(
                        VertexId::from_index(i),
                        VertexId::from_index(j),
                        Rational::one(),
                    );
                }
                k += 1;
            }
        }
        g
    }

    // Total order used for deterministic listings: vertex count, then edge list.
    fn sort_key(&self) -> (usize, Vec<(usize, usize, Rational)>) {
        (
            self.n,
            self.edges()
                .into_iter()
                .map(|e| (e.a.get(), e.b.get(), e.weight))
                .collect(),
        )
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

/// JSON shape of a graph: `{"n": 4, "edges": [{"a":1,"b":2,"weight":"1"}, ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        if raw.n == 0 {
            return Err(serde::de::Error::custom("graph needs at least one vertex"));
        }
        let mut g = Graph::empty(raw.n);
        for e in raw.edges {
            if e.a >= e.b {
                return Err(serde::de::Error::custom(
                    "edge endpoints must satisfy a < b",
                ));
            }
            g.add_edge(e.a, e.b, e.weight)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

/// Common small graphs used throughout tests and fixtures.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    pub fn star(n: usize, center: usize) -> Graph {
        let edges: Vec<_> = (1..=n)
            .filter(|&i| i != center)
            .map(|i| (center.min(i), center.max(i)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid star")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }
}
