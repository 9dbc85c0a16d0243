//! Ground-truth exact solvers for arbitrary graphs and solution verification.
//!
//! `brute_min` enumerates vertex subsets in a fixed order (by cardinality or
//! by total weight, ties broken lexicographically) and returns the first
//! feasible one, so its output is reproducible byte for byte. `branch_cvd`
//! answers the budgeted decision problem by branching on induced P3s. Both
//! carry size guards with `_forced` escape hatches.

use thiserror::Error;

use crate::dp::{Method, Solution, Variant};
use crate::extint::ExtInt;
use crate::graph::Graph;

/// Vertex-count guard for subset enumeration.
pub const BRUTE_VERTEX_LIMIT: usize = 22;
/// Budget guard for the P3-branching search.
pub const BRANCH_BUDGET_LIMIT: u64 = 30;
/// Hard cap: subsets are enumerated as machine words.
const MASK_LIMIT: usize = 63;

/// What the remainder must look like, and whether the deleted set must induce
/// a connected subgraph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TargetPredicate {
    pub kind: TargetKind,
    pub connected_deleter: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TargetKind {
    /// Remainder has no induced P3 (every component a clique).
    Cluster,
    /// Remainder is a single clique (possibly empty).
    Clique,
    /// Remainder has no edges.
    Edgeless,
}

impl TargetPredicate {
    pub fn for_variant(variant: Variant) -> TargetPredicate {
        let (kind, connected) = match variant {
            Variant::Cvd => (TargetKind::Cluster, false),
            Variant::ConnectedCvd => (TargetKind::Cluster, true),
            Variant::CliqueDeletion | Variant::ComplementVc => (TargetKind::Clique, false),
            Variant::ConnectedCliqueDeletion => (TargetKind::Clique, true),
            Variant::VertexCover => (TargetKind::Edgeless, false),
        };
        TargetPredicate {
            kind,
            connected_deleter: connected,
        }
    }

    fn variant(&self) -> Variant {
        match (self.kind, self.connected_deleter) {
            (TargetKind::Cluster, false) => Variant::Cvd,
            (TargetKind::Cluster, true) => Variant::ConnectedCvd,
            (TargetKind::Clique, false) => Variant::CliqueDeletion,
            (TargetKind::Clique, true) => Variant::ConnectedCliqueDeletion,
            (TargetKind::Edgeless, false) => Variant::VertexCover,
            (TargetKind::Edgeless, true) => Variant::VertexCover,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the subset-enumeration limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("budget {k} is above the branching limit of {limit}")]
    BudgetTooLarge { k: u64, limit: u64 },
    #[error("vertex {v} out of range for {n} vertices")]
    BadVertex { v: usize, n: usize },
    #[error("connected vertex cover is not a supported target")]
    UnsupportedTarget,
}

// ----------------------------------------------------------------------
// Subset enumeration
// ----------------------------------------------------------------------

/// Minimum-size (or minimum-weight) deletion set for `target`, by exhaustive
/// enumeration. Guarded to `n <= 22`; see [`brute_min_forced`].
pub fn brute_min(
    g: &Graph,
    target: TargetPredicate,
    weights: Option<&[u64]>,
) -> Result<Solution, OracleError> {
    if g.n() > BRUTE_VERTEX_LIMIT {
        return Err(OracleError::TooLarge {
            n: g.n(),
            limit: BRUTE_VERTEX_LIMIT,
        });
    }
    brute_min_forced(g, target, weights)
}

/// As [`brute_min`] without the vertex guard (still capped at 63 vertices by
/// the machine-word subset representation).
pub fn brute_min_forced(
    g: &Graph,
    target: TargetPredicate,
    weights: Option<&[u64]>,
) -> Result<Solution, OracleError> {
    if g.n() > MASK_LIMIT {
        return Err(OracleError::TooLarge {
            n: g.n(),
            limit: MASK_LIMIT,
        });
    }
    if target.kind == TargetKind::Edgeless && target.connected_deleter {
        return Err(OracleError::UnsupportedTarget);
    }
    let masks = Masks::new(g);
    let found = match weights {
        None => first_by_cardinality(g, &masks, target),
        Some(w) => first_by_weight(g, &masks, target, w),
    };
    let (value, set) = match found {
        Some(mask) => {
            let set = mask_to_set(mask);
            let v = match weights {
                None => set.len() as u64,
                Some(w) => set.iter().map(|&v| w[v]).sum(),
            };
            (ExtInt::Fin(v), Some(set))
        }
        None => (ExtInt::Inf, None),
    };
    Ok(Solution {
        variant: target.variant(),
        value,
        set,
        weighted: weights.is_some(),
        method: Method::Brute,
    })
}

struct Masks {
    adj: Vec<u64>,
    closed: Vec<u64>,
    all: u64,
}

impl Masks {
    fn new(g: &Graph) -> Masks {
        let n = g.n();
        let adj: Vec<u64> = (0..n)
            .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let closed = adj.iter().enumerate().map(|(u, &m)| m | 1 << u).collect();
        let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
        Masks { adj, closed, all }
    }

    fn remainder_ok(&self, kind: TargetKind, deleted: u64) -> bool {
        let rem = self.all & !deleted;
        match kind {
            TargetKind::Edgeless => {
                let mut r = rem;
                while r != 0 {
                    let u = r.trailing_zeros() as usize;
                    r &= r - 1;
                    if self.adj[u] & rem != 0 {
                        return false;
                    }
                }
                true
            }
            TargetKind::Clique => {
                let mut r = rem;
                while r != 0 {
                    let u = r.trailing_zeros() as usize;
                    r &= r - 1;
                    if self.closed[u] & rem != rem {
                        return false;
                    }
                }
                true
            }
            TargetKind::Cluster => {
                // Cluster iff every remaining edge joins vertices with equal
                // closed neighbourhoods inside the remainder.
                let mut r = rem;
                while r != 0 {
                    let u = r.trailing_zeros() as usize;
                    r &= r - 1;
                    let mut nb = self.adj[u] & rem;
                    while nb != 0 {
                        let v = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        if self.closed[u] & rem != self.closed[v] & rem {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn connected_subset(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let start = set.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u] & set & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    fn feasible(&self, target: TargetPredicate, mask: u64) -> bool {
        self.remainder_ok(target.kind, mask)
            && (!target.connected_deleter || self.connected_subset(mask))
    }
}

fn mask_to_set(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Subsets of each cardinality in lexicographic order of their sorted vertex
/// lists; first feasible wins.
fn first_by_cardinality(g: &Graph, masks: &Masks, target: TargetPredicate) -> Option<u64> {
    let n = g.n();
    for k in 0..=n {
        let mut found = None;
        for_each_combination(n, k, &mut |mask| {
            if masks.feasible(target, mask) {
                found = Some(mask);
                true
            } else {
                false
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order of the sorted
/// vertex lists; stops when `f` returns true.
fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if f(mask) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn first_by_weight(
    g: &Graph,
    masks: &Masks,
    target: TargetPredicate,
    weights: &[u64],
) -> Option<u64> {
    let n = g.n();
    let weight_of = |mask: u64| -> u64 { mask_to_set(mask).iter().map(|&v| weights[v]).sum() };
    let mut all: Vec<(u64, u64)> = (0..(1u64 << n)).map(|m| (weight_of(m), m)).collect();
    all.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| subset_lex_cmp(a.1, b.1)));
    all.into_iter()
        .map(|(_, m)| m)
        .find(|&m| masks.feasible(target, m))
}

/// Lexicographic order on subsets viewed as ascending vertex lists.
fn subset_lex_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return std::cmp::Ordering::Equal,
            (true, false) => return std::cmp::Ordering::Less,
            (false, true) => return std::cmp::Ordering::Greater,
            (false, false) => {
                let x = a.trailing_zeros();
                let y = b.trailing_zeros();
                if x != y {
                    return x.cmp(&y);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

// ----------------------------------------------------------------------
// P3 branching
// ----------------------------------------------------------------------

/// Decides whether `g` has a cluster vertex deletion set of size at most `k`
/// by branching on the three vertices of an induced P3. Sound and complete;
/// worst case 3^k nodes. Returns a witness set on yes.
pub fn branch_cvd(g: &Graph, k: u64) -> Result<Option<Vec<usize>>, OracleError> {
    if k > BRANCH_BUDGET_LIMIT {
        return Err(OracleError::BudgetTooLarge {
            k,
            limit: BRANCH_BUDGET_LIMIT,
        });
    }
    Ok(branch_cvd_forced(g, k))
}

/// As [`branch_cvd`] without the budget guard.
pub fn branch_cvd_forced(g: &Graph, k: u64) -> Option<Vec<usize>> {
    let mut alive = vec![true; g.n()];
    let mut chosen = Vec::new();
    if branch_rec(g, &mut alive, k, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn branch_rec(g: &Graph, alive: &mut Vec<bool>, budget: u64, chosen: &mut Vec<usize>) -> bool {
    let p3 = match find_p3_alive(g, alive) {
        Some(p3) => p3,
        None => return true,
    };
    if budget == 0 {
        return false;
    }
    for &v in &p3 {
        alive[v] = false;
        chosen.push(v);
        if branch_rec(g, alive, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
        alive[v] = true;
    }
    false
}

fn find_p3_alive(g: &Graph, alive: &[bool]) -> Option<[usize; 3]> {
    for b in 0..g.n() {
        if !alive[b] {
            continue;
        }
        let nb: Vec<usize> = g
            .neighbors(b)
            .iter()
            .copied()
            .filter(|&v| alive[v])
            .collect();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !g.has_edge(a, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

// ----------------------------------------------------------------------
// Verification
// ----------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum VerifyOutcome {
    Accept,
    Reject(RejectReason),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RejectReason {
    /// The remainder contains this induced P3.
    RemainderP3([usize; 3]),
    /// The remainder misses this edge, so it is not a clique.
    RemainderMissingEdge(usize, usize),
    /// The remainder keeps this edge, so it is not edgeless.
    RemainderEdge(usize, usize),
    /// The deleted set splits into parts containing these two vertices.
    DeleterDisconnected(usize, usize),
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RejectReason::RemainderP3([a, b, c]) => {
                write!(f, "remainder contains induced P3 {a} {b} {c}")
            }
            RejectReason::RemainderMissingEdge(u, v) => {
                write!(f, "remainder is not a clique: {u} and {v} are non-adjacent")
            }
            RejectReason::RemainderEdge(u, v) => {
                write!(f, "remainder is not edgeless: edge {u}-{v} remains")
            }
            RejectReason::DeleterDisconnected(u, v) => {
                write!(
                    f,
                    "deleted set is disconnected: {u} and {v} lie in different parts"
                )
            }
        }
    }
}

/// Checks a deletion set against the variant's remainder predicate and, for
/// connected variants, the connectivity of the deleted set.
pub fn verify(g: &Graph, set: &[usize], variant: Variant) -> Result<VerifyOutcome, OracleError> {
    let n = g.n();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(OracleError::BadVertex { v, n });
    }
    let mut deleted = vec![false; n];
    for &v in set {
        deleted[v] = true;
    }
    let alive: Vec<bool> = deleted.iter().map(|&d| !d).collect();
    let target = TargetPredicate::for_variant(variant);

    if target.connected_deleter {
        if let Some((a, b)) = disconnected_pair(g, &deleted) {
            return Ok(VerifyOutcome::Reject(RejectReason::DeleterDisconnected(
                a, b,
            )));
        }
    }
    let reject = match target.kind {
        TargetKind::Cluster => find_p3_alive(g, &alive).map(RejectReason::RemainderP3),
        TargetKind::Clique => {
            let rem: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
            let mut missing = None;
            'outer: for (i, &u) in rem.iter().enumerate() {
                for &v in &rem[i + 1..] {
                    if !g.has_edge(u, v) {
                        missing = Some(RejectReason::RemainderMissingEdge(u, v));
                        break 'outer;
                    }
                }
            }
            missing
        }
        TargetKind::Edgeless => g
            .edges()
            .find(|&(u, v)| alive[u] && alive[v])
            .map(|(u, v)| RejectReason::RemainderEdge(u, v)),
    };
    Ok(match reject {
        Some(r) => VerifyOutcome::Reject(r),
        None => VerifyOutcome::Accept,
    })
}

/// Representatives of two different components of `g[deleted]`, if any.
fn disconnected_pair(g: &Graph, deleted: &[bool]) -> Option<(usize, usize)> {
    let n = g.n();
    let first = (0..n).find(|&v| deleted[v])?;
    let mut seen = vec![false; n];
    seen[first] = true;
    let mut queue = vec![first];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in g.neighbors(u) {
            if deleted[v] && !seen[v] {
                seen[v] = true;
                queue.push(v);
            }
        }
    }
    (0..n).find(|&v| deleted[v] && !seen[v]).map(|v| (first, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_p3() -> Graph {
        Graph::path(3).disjoint_union(&Graph::path(3))
    }

    #[test]
    fn connected_cvd_of_two_p3_is_infinite() {
        let t = TargetPredicate::for_variant(Variant::ConnectedCvd);
        let sol = brute_min(&two_p3(), t, None).unwrap();
        assert_eq!(sol.value, ExtInt::Inf);
        assert!(sol.set.is_none());
    }

    #[test]
    fn cvd_of_p9_is_3() {
        let p9 = Graph::path(9);
        // Lower bound certificate: three vertex-disjoint induced P3s.
        for tri in [[0, 1, 2], [3, 4, 5], [6, 7, 8]] {
            assert!(p9.has_edge(tri[0], tri[1]) && p9.has_edge(tri[1], tri[2]));
            assert!(!p9.has_edge(tri[0], tri[2]));
        }
        let sol = brute_min(&p9, TargetPredicate::for_variant(Variant::Cvd), None).unwrap();
        assert_eq!(sol.value, ExtInt::Fin(3));
        let set = sol.set.unwrap();
        assert_eq!(
            verify(&p9, &set, Variant::Cvd).unwrap(),
            VerifyOutcome::Accept
        );
    }

    #[test]
    fn clique_deletion_of_3k1_is_2() {
        let g = Graph::new(3);
        let sol = brute_min(
            &g,
            TargetPredicate::for_variant(Variant::CliqueDeletion),
            None,
        )
        .unwrap();
        assert_eq!(sol.value, ExtInt::Fin(2));
        assert_eq!(sol.set.unwrap(), vec![0, 1]);
    }

    #[test]
    fn size_guard_refuses_large_graphs() {
        let g = Graph::new(23);
        let err = brute_min(&g, TargetPredicate::for_variant(Variant::Cvd), None).unwrap_err();
        assert_eq!(err, OracleError::TooLarge { n: 23, limit: 22 });
        assert!(brute_min_forced(&g, TargetPredicate::for_variant(Variant::Cvd), None).is_ok());
    }

    #[test]
    fn branch_examples() {
        assert_eq!(branch_cvd(&Graph::complete(5), 0).unwrap(), Some(vec![]));
        assert_eq!(branch_cvd(&Graph::path(3), 0).unwrap(), None);
        let yes = branch_cvd(&Graph::path(3), 1).unwrap().unwrap();
        assert_eq!(yes.len(), 1);
        assert!(branch_cvd(&Graph::path(3), 31).is_err());
    }

    #[test]
    fn verify_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            verify(&c4, &[0, 1], Variant::Cvd).unwrap(),
            VerifyOutcome::Accept
        );
        match verify(&c4, &[0], Variant::Cvd).unwrap() {
            VerifyOutcome::Reject(RejectReason::RemainderP3(w)) => {
                assert_eq!(w, [1, 2, 3]);
            }
            other => panic!("expected P3 rejection, got {other:?}"),
        }
        // Middles of the two P3 components do not induce a connected set.
        match verify(&two_p3(), &[1, 4], Variant::ConnectedCvd).unwrap() {
            VerifyOutcome::Reject(RejectReason::DeleterDisconnected(1, 4)) => {}
            other => panic!("expected disconnection, got {other:?}"),
        }
        assert!(matches!(
            verify(&c4, &[9], Variant::Cvd),
            Err(OracleError::BadVertex { v: 9, n: 4 })
        ));
    }

    #[test]
    fn verify_clique_and_vc_witnesses() {
        let p4 = Graph::path(4);
        match verify(&p4, &[0], Variant::CliqueDeletion).unwrap() {
            VerifyOutcome::Reject(RejectReason::RemainderMissingEdge(1, 3)) => {}
            other => panic!("unexpected {other:?}"),
        }
        match verify(&p4, &[0], Variant::VertexCover).unwrap() {
            VerifyOutcome::Reject(RejectReason::RemainderEdge(1, 2)) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            verify(&p4, &[1, 2], Variant::VertexCover).unwrap(),
            VerifyOutcome::Accept
        );
    }

    #[test]
    fn branch_agrees_with_brute_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10usize);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        g.add_edge(u, v);
                    }
                }
            }
            let opt = brute_min(&g, TargetPredicate::for_variant(Variant::Cvd), None)
                .unwrap()
                .value
                .expect_finite();
            for k in 0..=(n as u64) {
                match branch_cvd(&g, k).unwrap() {
                    Some(set) => {
                        assert!(opt <= k, "branch said yes below the optimum");
                        assert!(set.len() as u64 <= k);
                        assert_eq!(
                            verify(&g, &set, Variant::Cvd).unwrap(),
                            VerifyOutcome::Accept
                        );
                    }
                    None => assert!(opt > k, "branch said no at or above the optimum"),
                }
            }
        }
    }

    #[test]
    fn brute_monotone_spot_checks() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(131);
        for _ in 0..60 {
            let n = rng.gen_range(2..=8usize);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        g.add_edge(u, v);
                    }
                }
            }
            // Adding an edge never decreases the vertex cover value.
            let before = brute_min(&g, TargetPredicate::for_variant(Variant::VertexCover), None)
                .unwrap()
                .value;
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && !g.has_edge(u, v) {
                let mut g2 = g.clone();
                g2.add_edge(u, v);
                let after = brute_min(
                    &g2,
                    TargetPredicate::for_variant(Variant::VertexCover),
                    None,
                )
                .unwrap()
                .value;
                assert!(after >= before);
            }
            // Removing a vertex never increases the non-connected values.
            let keep: Vec<usize> = (0..n).filter(|&x| x != 0).collect();
            let sub = g.induced(&keep);
            for variant in [Variant::Cvd, Variant::CliqueDeletion, Variant::VertexCover] {
                let t = TargetPredicate::for_variant(variant);
                let big = brute_min(&g, t, None).unwrap().value;
                let small = brute_min(&sub, t, None).unwrap().value;
                assert!(small <= big, "variant {variant:?}");
            }
        }
    }

    #[test]
    fn weighted_brute_prefers_light_vertices() {
        let mut c4 = Graph::cycle(4);
        c4.set_weights(vec![5, 1, 5, 1]).unwrap();
        let sol = brute_min(
            &c4,
            TargetPredicate::for_variant(Variant::Cvd),
            c4.weights(),
        )
        .unwrap();
        assert_eq!(sol.value, ExtInt::Fin(2));
        assert_eq!(sol.set.unwrap(), vec![1, 3]);
    }
}
