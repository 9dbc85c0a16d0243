//! Simple undirected graphs with optional vertex weights and bipartition labels.
//!
//! Vertices are dense integers `0..n`. All derived graphs produced elsewhere in
//! this crate document their vertex-numbering convention so that solution maps
//! stay reproducible.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extint::ExtInt;

/// Side of a bipartition.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    X,
    Y,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("weight vector must cover all {expected} vertices, got {got}")]
    WeightLen { expected: usize, got: usize },
    #[error("vertex {0} has weight 0; weights must be positive")]
    ZeroWeight(usize),
    #[error("part vector must cover all {expected} vertices, got {got}")]
    PartLen { expected: usize, got: usize },
    #[error("edge {0}-{1} joins two vertices on the same side of the bipartition")]
    MonochromaticEdge(usize, usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// No self-loops, no duplicate edges. Values are immutable once built (apart
/// from the `add_edge` builder) and safe to share read-only across threads;
/// every operation here is a pure function of its inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    weights: Option<Vec<u64>>,
    parts: Option<Vec<Part>>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            weights: None,
            parts: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds the edge `u-v`. Panics on self-loops or out-of-range endpoints;
    /// adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(
            u < self.n() && v < self.n(),
            "edge {u}-{v} out of range for {} vertices",
            self.n()
        );
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    /// Weight of `v`, defaulting to 1 when the graph is unweighted.
    pub fn weight_of(&self, v: usize) -> u64 {
        self.weights.as_ref().map_or(1, |w| w[v])
    }

    pub fn set_weights(&mut self, weights: Vec<u64>) -> Result<(), GraphError> {
        if weights.len() != self.n() {
            return Err(GraphError::WeightLen {
                expected: self.n(),
                got: weights.len(),
            });
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(GraphError::ZeroWeight(v));
        }
        self.weights = Some(weights);
        Ok(())
    }

    pub fn clear_weights(&mut self) {
        self.weights = None;
    }

    pub fn parts(&self) -> Option<&[Part]> {
        self.parts.as_deref()
    }

    pub fn set_parts(&mut self, parts: Vec<Part>) -> Result<(), GraphError> {
        if parts.len() != self.n() {
            return Err(GraphError::PartLen {
                expected: self.n(),
                got: parts.len(),
            });
        }
        for (u, v) in self.edges() {
            if parts[u] == parts[v] {
                return Err(GraphError::MonochromaticEdge(u, v));
            }
        }
        self.parts = Some(parts);
        Ok(())
    }

    // ------------------------------------------------------------------
    // Named constructions
    // ------------------------------------------------------------------

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star with the centre at vertex 0 and `leaves` leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Grid graph on `rows * cols` vertices, row-major numbering.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut g = Graph::new(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1);
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols);
                }
            }
        }
        g
    }

    // ------------------------------------------------------------------
    // Operations
    // ------------------------------------------------------------------

    /// Complement on the same vertex set: `u-v` is an edge of the result iff
    /// `u != v` and `u-v` is not an edge here. Weights are preserved, the
    /// bipartition labelling is dropped.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for u in 0..n {
            let mut row = Vec::with_capacity(n - 1 - self.degree(u));
            let mut it = self.adj[u].iter().copied().peekable();
            for v in 0..n {
                if it.peek() == Some(&v) {
                    it.next();
                    continue;
                }
                if v != u {
                    row.push(v);
                }
            }
            adj.push(row);
        }
        Graph {
            adj,
            weights: self.weights.clone(),
            parts: None,
        }
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`, the edge
    /// sets are concatenated, no cross edges. Weights are preserved when both
    /// operands carry them; bipartition labels are dropped.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|row| row.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        let weights = match (&self.weights, &other.weights) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        Graph {
            adj,
            weights,
            parts: None,
        }
    }

    /// Join: disjoint union plus every cross pair as an edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = self.disjoint_union(other);
        for u in 0..shift {
            g.adj[u].extend(shift..shift + other.n());
        }
        for v in 0..other.n() {
            let mut row: Vec<usize> = (0..shift).collect();
            row.extend_from_slice(&g.adj[shift + v]);
            g.adj[shift + v] = row;
        }
        g
    }

    /// Induced subgraph on `verts`; vertex `verts[i]` becomes vertex `i`.
    /// Weights of the selected vertices are preserved; parts are dropped.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX && index[w] > i {
                    g.add_edge(i, index[w]);
                }
            }
        }
        if let Some(w) = &self.weights {
            g.weights = Some(verts.iter().map(|&v| w[v]).collect());
        }
        g
    }

    /// Connected components as sorted vertex sets, ordered by their smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * (n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.m() == 0
    }

    /// Whether every connected component is a clique (direct per-component
    /// test, independent of the induced-P3 search).
    pub fn is_cluster(&self) -> bool {
        self.components().iter().all(|comp| {
            comp.iter()
                .all(|&u| comp.iter().all(|&v| v == u || self.has_edge(u, v)))
        })
    }

    /// Length of a shortest cycle, or infinity if the graph is a forest.
    pub fn girth(&self) -> ExtInt {
        match self.shortest_cycle() {
            Some(c) => ExtInt::Fin(c.len() as u64),
            None => ExtInt::Inf,
        }
    }

    /// Some shortest cycle, listed in traversal order, if one exists.
    ///
    /// One BFS per root: for every non-tree edge `u-v` with both endpoints
    /// reached, `dist(u) + dist(v) + 1` upper-bounds a cycle through the root,
    /// and the global minimum over all roots is exact.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        struct Best {
            len: usize,
            u: usize,
            v: usize,
            dist: Vec<usize>,
            parent: Vec<usize>,
        }
        let n = self.n();
        let mut best: Option<Best> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            dist[root] = 0;
            let mut queue = vec![root];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    }
                }
            }
            for (u, v) in self.edges() {
                if dist[u] == usize::MAX || dist[v] == usize::MAX {
                    continue;
                }
                if parent[u] == v || parent[v] == u {
                    continue;
                }
                let len = dist[u] + dist[v] + 1;
                if best.as_ref().is_none_or(|b| len < b.len) {
                    best = Some(Best {
                        len,
                        u,
                        v,
                        dist: dist.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }
        let Best {
            u, v, dist, parent, ..
        } = best?;
        // Strip the common prefix of the two tree paths; what is left closes
        // into a simple cycle of exactly the girth.
        let path_to = |mut x: usize| {
            let mut p = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                p.push(x);
            }
            p.reverse();
            p
        };
        let pu = path_to(u);
        let pv = path_to(v);
        let mut k = 0;
        while k < pu.len() && k < pv.len() && pu[k] == pv[k] {
            k += 1;
        }
        let mut cycle = pu[k - 1..].to_vec();
        cycle.extend(pv[k..].iter().rev());
        debug_assert_eq!(cycle.len(), dist[u] + dist[v] + 1 - 2 * (k - 1));
        Some(cycle)
    }

    /// A deterministic 2-colouring if the graph is bipartite: in every
    /// component the smallest vertex goes to the X side. Returns the sorted
    /// X and Y vertex sets, or `None` on an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let xs = (0..n).filter(|&v| color[v] == 0).collect();
        let ys = (0..n).filter(|&v| color[v] == 1).collect();
        Some((xs, ys))
    }

    /// The stored bipartition labelling if present, otherwise a computed one.
    pub fn bipartition_or_parts(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if let Some(parts) = &self.parts {
            let xs = (0..self.n()).filter(|&v| parts[v] == Part::X).collect();
            let ys = (0..self.n()).filter(|&v| parts[v] == Part::Y).collect();
            return Some((xs, ys));
        }
        self.bipartition()
    }

    pub fn total_weight(&self) -> u64 {
        match &self.weights {
            Some(w) => w.iter().sum(),
            None => self.n() as u64,
        }
    }
}
