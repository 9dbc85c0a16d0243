//! Exhaustive induced-pattern searches with certificates.
//!
//! Searches scan vertex tuples in ascending order, so the first witness is
//! deterministic. Worst case O(n^4) for the 4-vertex patterns; fine at desk
//! scale, and the cotree recognizer avoids these scans on large cographs.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternKind {
    P3,
    P4,
    Triangle,
    ThreeP1,
    TwoP2,
    Cycle,
    OddHole,
}

/// An ordered vertex list realizing a named induced pattern in a host graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
}

impl PatternWitness {
    /// Checks that the listed vertices really induce the named pattern in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return false;
        }
        let adj = |a: usize, b: usize| g.has_edge(vs[a], vs[b]);
        let path_shaped = |k: usize| (0..k).all(|i| (i + 1..k).all(|j| adj(i, j) == (j == i + 1)));
        match self.kind {
            PatternKind::P3 => vs.len() == 3 && path_shaped(3),
            PatternKind::P4 => vs.len() == 4 && path_shaped(4),
            PatternKind::Triangle => vs.len() == 3 && adj(0, 1) && adj(1, 2) && adj(0, 2),
            PatternKind::ThreeP1 => vs.len() == 3 && !adj(0, 1) && !adj(1, 2) && !adj(0, 2),
            PatternKind::TwoP2 => {
                vs.len() == 4
                    && adj(0, 1)
                    && adj(2, 3)
                    && !adj(0, 2)
                    && !adj(0, 3)
                    && !adj(1, 2)
                    && !adj(1, 3)
            }
            PatternKind::Cycle | PatternKind::OddHole => {
                let k = vs.len();
                if k < 3 || (self.kind == PatternKind::OddHole && (k < 5 || k.is_multiple_of(2))) {
                    return false;
                }
                (0..k).all(|i| {
                    (i + 1..k).all(|j| {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        adj(i, j) == consecutive
                    })
                })
            }
        }
    }
}

impl Graph {
    /// First induced occurrence of `kind`, if any.
    ///
    /// `Cycle` returns a shortest cycle; `OddHole` returns a shortest induced
    /// odd cycle of length at least 5 (a sufficient certificate of
    /// non-perfectness, not a full perfect-graph test).
    pub fn find_induced(&self, kind: PatternKind) -> Option<PatternWitness> {
        let vertices = match kind {
            PatternKind::P3 => self.find_p3()?.to_vec(),
            PatternKind::P4 => self.find_p4()?.to_vec(),
            PatternKind::Triangle => self.find_triangle()?.to_vec(),
            PatternKind::ThreeP1 => self.find_3p1()?.to_vec(),
            PatternKind::TwoP2 => self.find_2p2()?.to_vec(),
            PatternKind::Cycle => self.shortest_cycle()?,
            PatternKind::OddHole => self.find_odd_hole()?,
        };
        Some(PatternWitness { kind, vertices })
    }

    /// First induced P3 as `(a, b, c)` with `b` the centre, scanning centres
    /// and neighbour pairs in ascending order.
    pub(crate) fn find_p3(&self) -> Option<[usize; 3]> {
        for b in 0..self.n() {
            let nb = self.neighbors(b);
            for (i, &a) in nb.iter().enumerate() {
                for &c in &nb[i + 1..] {
                    if !self.has_edge(a, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub(crate) fn find_p4(&self) -> Option<[usize; 4]> {
        self.find_p4_within(&(0..self.n()).collect::<Vec<_>>())
    }

    /// Exhaustive induced-P4 search restricted to `verts`, path-ordered with
    /// the smaller endpoint first.
    pub(crate) fn find_p4_within(&self, verts: &[usize]) -> Option<[usize; 4]> {
        let k = verts.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for d in c + 1..k {
                        let quad = [verts[a], verts[b], verts[c], verts[d]];
                        if let Some(path) = induced_path4(self, quad) {
                            return Some(path);
                        }
                    }
                }
            }
        }
        None
    }

    fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in 0..self.n() {
            for (i, &v) in self.neighbors(u).iter().enumerate() {
                if v < u {
                    continue;
                }
                for &w in &self.neighbors(u)[i + 1..] {
                    if self.has_edge(v, w) {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }

    fn find_3p1(&self) -> Option<[usize; 3]> {
        let n = self.n();
        for a in 0..n {
            for b in a + 1..n {
                if self.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if !self.has_edge(a, c) && !self.has_edge(b, c) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    /// Two independent edges `(a, b)` and `(c, d)`, returned as `[a, b, c, d]`
    /// with `a < b`, `c < d`, `a < c`.
    fn find_2p2(&self) -> Option<[usize; 4]> {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if !self.has_edge(a, c)
                    && !self.has_edge(a, d)
                    && !self.has_edge(b, c)
                    && !self.has_edge(b, d)
                {
                    return Some([a, b, c, d]);
                }
            }
        }
        None
    }

    /// Shortest induced odd cycle of length >= 5, by DFS over induced paths
    /// anchored at their smallest vertex, per ascending odd length.
    fn find_odd_hole(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut len = 5;
        while len <= n {
            for start in 0..n {
                let mut path = vec![start];
                let mut used = vec![false; n];
                used[start] = true;
                if self.grow_hole(len, start, &mut path, &mut used) {
                    return Some(path);
                }
            }
            len += 2;
        }
        None
    }

    fn grow_hole(
        &self,
        target: usize,
        start: usize,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let pos = path.len();
        let last = *path.last().unwrap();
        for &w in self.neighbors(last) {
            if w <= start || used[w] {
                continue;
            }
            // Interior vertices must avoid everything but their predecessor;
            // the closing vertex must additionally see the start.
            let closes = pos == target - 1;
            let start_ok = if pos == 1 {
                true
            } else if closes {
                self.has_edge(w, start)
            } else {
                !self.has_edge(w, start)
            };
            if !start_ok {
                continue;
            }
            if pos > 1 && path[1..pos - 1].iter().any(|&p| self.has_edge(w, p)) {
                continue;
            }
            path.push(w);
            if closes {
                return true;
            }
            used[w] = true;
            if self.grow_hole(target, start, path, used) {
                return true;
            }
            used[w] = false;
            path.pop();
        }
        false
    }
}

/// Orders four vertices into an induced P4 if they induce one.
fn induced_path4(g: &Graph, quad: [usize; 4]) -> Option<[usize; 4]> {
    let mut deg = [0usize; 4];
    let mut m = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(quad[i], quad[j]) {
                deg[i] += 1;
                deg[j] += 1;
                m += 1;
            }
        }
    }
    // 3 edges with degree sequence (1,1,2,2) is exactly a 4-vertex path.
    if m != 3 || deg.iter().any(|&d| d != 1 && d != 2) {
        return None;
    }
    let ends: Vec<usize> = (0..4).filter(|&i| deg[i] == 1).collect();
    let first = ends.iter().copied().min_by_key(|&i| quad[i]).unwrap();
    let mut order = [quad[first]; 4];
    let mut used = [false; 4];
    used[first] = true;
    for slot in 1..4 {
        let cur = order[slot - 1];
        let next = (0..4).find(|&i| !used[i] && g.has_edge(cur, quad[i]))?;
        order[slot] = quad[next];
        used[next] = true;
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_has_no_induced_p3() {
        assert!(Graph::complete(3).find_induced(PatternKind::P3).is_none());
        assert!(Graph::complete(5).find_induced(PatternKind::P3).is_none());
    }

    #[test]
    fn p3_witness_is_path_ordered() {
        let w = Graph::path(3).find_induced(PatternKind::P3).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(w.is_valid_in(&Graph::path(3)));
    }

    #[test]
    fn two_p2_absent_in_p4_present_in_p5() {
        assert!(Graph::path(4).find_induced(PatternKind::TwoP2).is_none());
        let w = Graph::path(5).find_induced(PatternKind::TwoP2).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 3, 4]);
        assert!(w.is_valid_in(&Graph::path(5)));
    }

    #[test]
    fn odd_hole_in_c5() {
        let w = Graph::cycle(5).find_induced(PatternKind::OddHole).unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.is_valid_in(&Graph::cycle(5)));
    }

    #[test]
    fn no_odd_hole_in_bipartite_or_small() {
        assert!(Graph::cycle(4).find_induced(PatternKind::OddHole).is_none());
        assert!(Graph::cycle(6).find_induced(PatternKind::OddHole).is_none());
        assert!(Graph::complete(5)
            .find_induced(PatternKind::OddHole)
            .is_none());
    }

    #[test]
    fn odd_hole_skips_triangles_finds_c5() {
        // Triangle glued to a C5: the only odd hole is the C5.
        let mut g = Graph::cycle(5);
        let base = g.n();
        let mut h = Graph::new(base + 2);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        h.add_edge(0, base);
        h.add_edge(0, base + 1);
        h.add_edge(base, base + 1);
        g = h;
        let w = g.find_induced(PatternKind::OddHole).unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.is_valid_in(&g));
    }

    #[test]
    fn p4_found_and_ordered() {
        let w = Graph::path(4).find_induced(PatternKind::P4).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        let w = Graph::cycle(5).find_induced(PatternKind::P4).unwrap();
        assert!(w.is_valid_in(&Graph::cycle(5)));
    }

    #[test]
    fn triangle_and_3p1() {
        let w = Graph::complete(3)
            .find_induced(PatternKind::Triangle)
            .unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(Graph::cycle(4)
            .find_induced(PatternKind::Triangle)
            .is_none());

        let w = Graph::new(3).find_induced(PatternKind::ThreeP1).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(Graph::complete(3)
            .find_induced(PatternKind::ThreeP1)
            .is_none());
        // 2P2 has no independent triple.
        let two_p2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(two_p2.find_induced(PatternKind::ThreeP1).is_none());
    }

    #[test]
    fn cluster_iff_no_induced_p3() {
        // Direct per-component clique test versus the pattern search,
        // exhaustively for n <= 4 and on random samples for n <= 8.
        for n in 0..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0..(1u32 << pairs.len()) {
                let mut g = Graph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                assert_eq!(g.is_cluster(), g.find_induced(PatternKind::P3).is_none());
            }
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let n = rng.gen_range(5..=8usize);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(g.is_cluster(), g.find_induced(PatternKind::P3).is_none());
        }
    }
}
