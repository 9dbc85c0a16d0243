//! Bottom-up dynamic programming on binary cotrees for cluster vertex
//! deletion and its clique / connected variants, with optimal-set extraction.
//!
//! Per node the pass keeps: the subgraph's vertex count and total weight; the
//! cluster vertex deletion number and the clique deletion number (the latter
//! equals the vertex cover number of the complement) together with their
//! weighted analogues; the connected clique deletion and connected cluster
//! vertex deletion numbers as extended integers; and three structural flags
//! (complete, connected, number of non-clique components saturated at 2).
//! Every recurrence is a two-argument union/join rule valid for arbitrary
//! graphs, so applying it at binarized nodes with repeated labels is sound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cotree::{binarize, build_cotree, BinaryCotree, BinaryNode, Cotree, Label};
use crate::extint::ExtInt;
use crate::graph::Graph;
use crate::patterns::PatternWitness;

/// Deletion-problem flavours this crate can answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Variant {
    /// Delete vertices so every remaining component is a clique.
    #[serde(rename = "cvd")]
    Cvd,
    /// As `Cvd`, with the deleted set inducing a connected subgraph.
    #[serde(rename = "ccvd")]
    ConnectedCvd,
    /// Delete vertices so the remainder is a single clique.
    #[serde(rename = "clique")]
    CliqueDeletion,
    /// As `CliqueDeletion`, with a connected deleted set.
    #[serde(rename = "cclique")]
    ConnectedCliqueDeletion,
    /// Vertex cover of the complement; same sets as `CliqueDeletion`.
    #[serde(rename = "covc")]
    ComplementVc,
    /// Vertex cover of the graph itself (oracle-side only).
    #[serde(rename = "vc")]
    VertexCover,
}

impl Variant {
    pub fn is_connected(self) -> bool {
        matches!(
            self,
            Variant::ConnectedCvd | Variant::ConnectedCliqueDeletion
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "cotree-dp")]
    CotreeDp,
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "branch")]
    Branch,
}

/// A solved instance: the optimal value and, when finite, an optimal set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Solution {
    pub variant: Variant,
    pub value: ExtInt,
    pub set: Option<Vec<usize>>,
    pub weighted: bool,
    pub method: Method,
}

/// Per-node record of the bottom-up pass.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NodeStats {
    /// Vertex count of the node's subgraph.
    pub size: u64,
    /// Total weight of the node's subgraph (equals `size` when unweighted).
    pub weight: u64,
    /// Minimum deletions leaving a cluster graph.
    pub cvd: u64,
    /// Minimum deletions leaving a clique (= vertex cover of the complement).
    pub clique_del: u64,
    pub w_cvd: u64,
    pub w_clique_del: u64,
    /// Connected clique deletion number.
    pub con_clique_del: ExtInt,
    /// Connected cluster vertex deletion number.
    pub con_cvd: ExtInt,
    pub complete: bool,
    pub connected: bool,
    /// Number of connected components containing an induced P3, saturated at 2.
    pub non_clique_comps: u8,
}

impl NodeStats {
    fn leaf(weight: u64) -> NodeStats {
        NodeStats {
            size: 1,
            weight,
            cvd: 0,
            clique_del: 0,
            w_cvd: 0,
            w_clique_del: 0,
            con_clique_del: ExtInt::Fin(0),
            con_cvd: ExtInt::Fin(0),
            complete: true,
            connected: true,
            non_clique_comps: 0,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("input is not a cograph; induced P4: {}", format_vertices(&.0.vertices))]
    NotACograph(PatternWitness),
    #[error("weighted solving is only supported for the cvd and covc variants")]
    WeightedUnsupported(Variant),
    #[error("weighted solving requested but the input carries no weights")]
    MissingWeights,
    #[error("variant {0:?} is not computed by the cotree DP")]
    UnsupportedVariant(Variant),
    #[error("the empty graph has no cotree")]
    EmptyGraph,
}

fn format_vertices(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExtractError {
    #[error("no set exists: the requested value is infinite")]
    InfiniteValue,
}

/// Post-order pass over the binary cotree; `stats[id]` describes the subgraph
/// under node `id`. `weights`, if given, must cover every leaf vertex with a
/// positive weight. Runs in time linear in the number of nodes.
///
/// The arena is a post-order traversal, so pending child records live on a
/// small stack; the pass streams through the tree and the output without
/// random access.
pub fn dp_stats(t: &BinaryCotree, weights: Option<&[u64]>) -> Vec<NodeStats> {
    let mut stats: Vec<NodeStats> = Vec::with_capacity(t.node_count());
    let mut pending: Vec<(usize, NodeStats)> = Vec::new();
    for id in 0..t.node_count() {
        let s = match t.node(id) {
            BinaryNode::Leaf(v) => {
                let w = match weights {
                    Some(ws) => {
                        let w = *ws
                            .get(*v)
                            .unwrap_or_else(|| panic!("weights must cover leaf vertex {v}"));
                        assert!(w > 0, "leaf vertex {v} has weight 0");
                        w
                    }
                    None => 1,
                };
                NodeStats::leaf(w)
            }
            BinaryNode::Internal { label, left, right } => {
                let (rid, r) = pending.pop().expect("post-order arena");
                let (lid, l) = pending.pop().expect("post-order arena");
                debug_assert_eq!((lid, rid), (*left, *right));
                let _ = (left, right);
                match label {
                    Label::Union => union_stats(&l, &r),
                    Label::Join => join_stats(&l, &r),
                }
            }
        };
        pending.push((id, s));
        stats.push(s);
    }
    stats
}

fn union_stats(l: &NodeStats, r: &NodeStats) -> NodeStats {
    let ncq = (l.non_clique_comps + r.non_clique_comps).min(2);
    // Deleting a whole side plus the other side's cover makes the union's
    // complement edgeless; both sides non-complete (or either disconnected)
    // kills the connected clique variant outright.
    let con_clique_del = if !l.connected || !r.connected || (!l.complete && !r.complete) {
        ExtInt::Inf
    } else {
        let mut best = ExtInt::Inf;
        if r.complete && l.connected {
            best = best.min(ExtInt::Fin(l.size));
        }
        if l.complete && r.connected {
            best = best.min(ExtInt::Fin(r.size));
        }
        best
    };
    let con_cvd = match ncq {
        0 => ExtInt::Fin(0),
        1 => {
            if l.non_clique_comps == 1 {
                l.con_cvd
            } else {
                r.con_cvd
            }
        }
        _ => ExtInt::Inf,
    };
    NodeStats {
        size: l.size + r.size,
        weight: l.weight + r.weight,
        cvd: l.cvd + r.cvd,
        clique_del: (l.clique_del + r.size).min(r.clique_del + l.size),
        w_cvd: l.w_cvd + r.w_cvd,
        w_clique_del: (l.w_clique_del + r.weight).min(r.w_clique_del + l.weight),
        con_clique_del,
        con_cvd,
        complete: false,
        connected: false,
        non_clique_comps: ncq,
    }
}

fn join_stats(l: &NodeStats, r: &NodeStats) -> NodeStats {
    let complete = l.complete && r.complete;
    let clique_del = l.clique_del + r.clique_del;
    let w_clique_del = l.w_clique_del + r.w_clique_del;
    let cvd = (l.cvd + r.size).min(r.cvd + l.size).min(clique_del);
    let w_cvd = (l.w_cvd + r.weight)
        .min(r.w_cvd + l.weight)
        .min(w_clique_del);

    let mut con_clique_del = ExtInt::Inf;
    if l.complete {
        con_clique_del = con_clique_del
            .min(r.con_clique_del)
            .min(ExtInt::Fin(1 + r.clique_del));
    }
    if r.complete {
        con_clique_del = con_clique_del
            .min(l.con_clique_del)
            .min(ExtInt::Fin(1 + l.clique_del));
    }
    if !l.complete && !r.complete {
        con_clique_del = ExtInt::Fin(clique_del);
    }

    let con_cvd = if complete {
        ExtInt::Fin(0)
    } else if l.complete {
        ExtInt::Fin(l.size + r.cvd)
            .min(r.con_clique_del)
            .min(ExtInt::Fin(1 + r.clique_del))
    } else if r.complete {
        ExtInt::Fin(r.size + l.cvd)
            .min(l.con_clique_del)
            .min(ExtInt::Fin(1 + l.clique_del))
    } else if l.connected || r.connected {
        ExtInt::Fin(l.size + r.cvd)
            .min(ExtInt::Fin(r.size + l.cvd))
            .min(ExtInt::Fin(clique_del))
    } else {
        ExtInt::Fin(l.size + r.cvd.max(1))
            .min(ExtInt::Fin(r.size + l.cvd.max(1)))
            .min(ExtInt::Fin(clique_del))
    };

    NodeStats {
        size: l.size + r.size,
        weight: l.weight + r.weight,
        cvd,
        clique_del,
        w_cvd,
        w_clique_del,
        con_clique_del,
        con_cvd,
        complete,
        connected: true,
        non_clique_comps: u8::from(!complete),
    }
}

/// Root value for the requested variant.
pub fn root_value(stats: &[NodeStats], root: usize, variant: Variant, weighted: bool) -> ExtInt {
    let s = &stats[root];
    match (variant, weighted) {
        (Variant::Cvd, false) => ExtInt::Fin(s.cvd),
        (Variant::Cvd, true) => ExtInt::Fin(s.w_cvd),
        (Variant::CliqueDeletion | Variant::ComplementVc, false) => ExtInt::Fin(s.clique_del),
        (Variant::CliqueDeletion | Variant::ComplementVc, true) => ExtInt::Fin(s.w_clique_del),
        (Variant::ConnectedCvd, _) => s.con_cvd,
        (Variant::ConnectedCliqueDeletion, _) => s.con_clique_del,
        (Variant::VertexCover, _) => unreachable!("vertex cover is not a DP variant"),
    }
}

// ----------------------------------------------------------------------
// Solving
// ----------------------------------------------------------------------

/// Solves `variant` on a cograph, recognizing it first. Graph weights feed
/// the weighted variants.
pub fn solve_graph(g: &Graph, variant: Variant, weighted: bool) -> Result<Solution, SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    check_variant(variant, weighted)?;
    if weighted && g.weights().is_none() {
        return Err(SolveError::MissingWeights);
    }
    let t = build_cotree(g).map_err(SolveError::NotACograph)?;
    let b = binarize(&t);
    let weights = if weighted { g.weights() } else { None };
    solve_prepared(&b, weights, variant)
}

/// Solves `variant` on an already-built cotree.
pub fn solve_cotree(
    t: &Cotree,
    weights: Option<&[u64]>,
    variant: Variant,
) -> Result<Solution, SolveError> {
    check_variant(variant, weights.is_some())?;
    solve_prepared(&binarize(t), weights, variant)
}

/// Solves `variant` on a binary cotree. `weights.is_some()` selects the
/// weighted problem.
pub fn solve_binary(
    t: &BinaryCotree,
    weights: Option<&[u64]>,
    variant: Variant,
) -> Result<Solution, SolveError> {
    check_variant(variant, weights.is_some())?;
    solve_prepared(t, weights, variant)
}

fn check_variant(variant: Variant, weighted: bool) -> Result<(), SolveError> {
    if variant == Variant::VertexCover {
        return Err(SolveError::UnsupportedVariant(variant));
    }
    // Only the union/join rules for plain cluster deletion and the complement
    // vertex cover carry over to weights; the connected rules have "+1" and
    // "max(.,1)" terms with no canonical weighted meaning, and the clique
    // variant is not exposed weighted either.
    if weighted && !matches!(variant, Variant::Cvd | Variant::ComplementVc) {
        return Err(SolveError::WeightedUnsupported(variant));
    }
    Ok(())
}

fn solve_prepared(
    t: &BinaryCotree,
    weights: Option<&[u64]>,
    variant: Variant,
) -> Result<Solution, SolveError> {
    let weighted = weights.is_some();
    let stats = dp_stats(t, weights);
    let value = root_value(&stats, t.root(), variant, weighted);
    let set = if value.is_finite() {
        Some(extract_set(t, &stats, variant, weighted).expect("finite value has a set"))
    } else {
        None
    };
    Ok(Solution {
        variant,
        value,
        set,
        weighted,
        method: Method::CotreeDp,
    })
}

// ----------------------------------------------------------------------
// Set extraction
// ----------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
enum Req {
    Cvd,
    CliqueDel,
    ConCliqueDel,
    ConCvd,
    AllLeaves,
    OneLeaf,
}

/// Replays the argmin choices of `dp_stats` top-down and collects an optimal
/// set for the requested variant. Ties resolve to the first candidate in the
/// order the recurrences list them; "one arbitrary vertex" terms resolve to
/// the smallest-numbered leaf of the relevant side.
pub fn extract_set(
    t: &BinaryCotree,
    stats: &[NodeStats],
    variant: Variant,
    weighted: bool,
) -> Result<Vec<usize>, ExtractError> {
    let root_req = match variant {
        Variant::Cvd => Req::Cvd,
        Variant::CliqueDeletion | Variant::ComplementVc => Req::CliqueDel,
        Variant::ConnectedCliqueDeletion => Req::ConCliqueDel,
        Variant::ConnectedCvd => Req::ConCvd,
        Variant::VertexCover => unreachable!("vertex cover is not a DP variant"),
    };
    if !root_value(stats, t.root(), variant, weighted).is_finite() {
        return Err(ExtractError::InfiniteValue);
    }

    // Smallest leaf under every node, for the "one arbitrary vertex" terms.
    let mut min_leaf = vec![usize::MAX; t.node_count()];
    for id in 0..t.node_count() {
        min_leaf[id] = match t.node(id) {
            BinaryNode::Leaf(v) => *v,
            BinaryNode::Internal { left, right, .. } => min_leaf[*left].min(min_leaf[*right]),
        };
    }

    let mut out = Vec::new();
    let mut work = vec![(t.root(), root_req)];
    while let Some((id, req)) = work.pop() {
        match req {
            Req::AllLeaves => match t.node(id) {
                BinaryNode::Leaf(v) => out.push(*v),
                BinaryNode::Internal { left, right, .. } => {
                    work.push((*left, Req::AllLeaves));
                    work.push((*right, Req::AllLeaves));
                }
            },
            Req::OneLeaf => out.push(min_leaf[id]),
            Req::Cvd => extract_cvd(t, stats, id, weighted, &mut work),
            Req::CliqueDel => extract_clique_del(t, stats, id, weighted, &mut work),
            Req::ConCliqueDel => extract_con_clique_del(t, stats, id, &mut work),
            Req::ConCvd => extract_con_cvd(t, stats, id, &mut work),
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn cvd_of(s: &NodeStats, weighted: bool) -> u64 {
    if weighted {
        s.w_cvd
    } else {
        s.cvd
    }
}

fn clique_del_of(s: &NodeStats, weighted: bool) -> u64 {
    if weighted {
        s.w_clique_del
    } else {
        s.clique_del
    }
}

fn size_of(s: &NodeStats, weighted: bool) -> u64 {
    if weighted {
        s.weight
    } else {
        s.size
    }
}

fn extract_cvd(
    t: &BinaryCotree,
    stats: &[NodeStats],
    id: usize,
    weighted: bool,
    work: &mut Vec<(usize, Req)>,
) {
    if cvd_of(&stats[id], weighted) == 0 {
        return;
    }
    let (label, left, right) = expect_internal(t, id);
    let (l, r) = (&stats[left], &stats[right]);
    match label {
        Label::Union => {
            work.push((left, Req::Cvd));
            work.push((right, Req::Cvd));
        }
        Label::Join => {
            let target = cvd_of(&stats[id], weighted);
            if cvd_of(l, weighted) + size_of(r, weighted) == target {
                work.push((left, Req::Cvd));
                work.push((right, Req::AllLeaves));
            } else if cvd_of(r, weighted) + size_of(l, weighted) == target {
                work.push((right, Req::Cvd));
                work.push((left, Req::AllLeaves));
            } else {
                work.push((left, Req::CliqueDel));
                work.push((right, Req::CliqueDel));
            }
        }
    }
}

fn extract_clique_del(
    t: &BinaryCotree,
    stats: &[NodeStats],
    id: usize,
    weighted: bool,
    work: &mut Vec<(usize, Req)>,
) {
    if clique_del_of(&stats[id], weighted) == 0 {
        return;
    }
    let (label, left, right) = expect_internal(t, id);
    let (l, r) = (&stats[left], &stats[right]);
    match label {
        Label::Union => {
            let target = clique_del_of(&stats[id], weighted);
            if clique_del_of(l, weighted) + size_of(r, weighted) == target {
                work.push((left, Req::CliqueDel));
                work.push((right, Req::AllLeaves));
            } else {
                work.push((right, Req::CliqueDel));
                work.push((left, Req::AllLeaves));
            }
        }
        Label::Join => {
            work.push((left, Req::CliqueDel));
            work.push((right, Req::CliqueDel));
        }
    }
}

fn extract_con_clique_del(
    t: &BinaryCotree,
    stats: &[NodeStats],
    id: usize,
    work: &mut Vec<(usize, Req)>,
) {
    let target = stats[id].con_clique_del;
    if target == ExtInt::Fin(0) {
        return;
    }
    let (label, left, right) = expect_internal(t, id);
    let (l, r) = (&stats[left], &stats[right]);
    match label {
        Label::Union => {
            if r.complete && l.connected && ExtInt::Fin(l.size) == target {
                work.push((left, Req::AllLeaves));
            } else {
                debug_assert!(l.complete && r.connected && ExtInt::Fin(r.size) == target);
                work.push((right, Req::AllLeaves));
            }
        }
        Label::Join => {
            if l.complete && r.con_clique_del == target {
                work.push((right, Req::ConCliqueDel));
            } else if l.complete && ExtInt::Fin(1 + r.clique_del) == target {
                work.push((left, Req::OneLeaf));
                work.push((right, Req::CliqueDel));
            } else if r.complete && l.con_clique_del == target {
                work.push((left, Req::ConCliqueDel));
            } else if r.complete && ExtInt::Fin(1 + l.clique_del) == target {
                work.push((right, Req::OneLeaf));
                work.push((left, Req::CliqueDel));
            } else {
                debug_assert!(!l.complete && !r.complete);
                work.push((left, Req::CliqueDel));
                work.push((right, Req::CliqueDel));
            }
        }
    }
}

fn extract_con_cvd(t: &BinaryCotree, stats: &[NodeStats], id: usize, work: &mut Vec<(usize, Req)>) {
    let target = stats[id].con_cvd;
    if target == ExtInt::Fin(0) {
        return;
    }
    let (label, left, right) = expect_internal(t, id);
    let (l, r) = (&stats[left], &stats[right]);
    match label {
        Label::Union => {
            debug_assert_eq!(stats[id].non_clique_comps, 1);
            if l.non_clique_comps == 1 {
                work.push((left, Req::ConCvd));
            } else {
                work.push((right, Req::ConCvd));
            }
        }
        Label::Join => {
            if l.complete {
                if ExtInt::Fin(l.size + r.cvd) == target {
                    work.push((left, Req::AllLeaves));
                    work.push((right, Req::Cvd));
                } else if r.con_clique_del == target {
                    work.push((right, Req::ConCliqueDel));
                } else {
                    debug_assert_eq!(ExtInt::Fin(1 + r.clique_del), target);
                    work.push((left, Req::OneLeaf));
                    work.push((right, Req::CliqueDel));
                }
            } else if r.complete {
                if ExtInt::Fin(r.size + l.cvd) == target {
                    work.push((right, Req::AllLeaves));
                    work.push((left, Req::Cvd));
                } else if l.con_clique_del == target {
                    work.push((left, Req::ConCliqueDel));
                } else {
                    debug_assert_eq!(ExtInt::Fin(1 + l.clique_del), target);
                    work.push((right, Req::OneLeaf));
                    work.push((left, Req::CliqueDel));
                }
            } else if l.connected || r.connected {
                if ExtInt::Fin(l.size + r.cvd) == target {
                    work.push((left, Req::AllLeaves));
                    work.push((right, Req::Cvd));
                } else if ExtInt::Fin(r.size + l.cvd) == target {
                    work.push((right, Req::AllLeaves));
                    work.push((left, Req::Cvd));
                } else {
                    work.push((left, Req::CliqueDel));
                    work.push((right, Req::CliqueDel));
                }
            } else {
                if ExtInt::Fin(l.size + r.cvd.max(1)) == target {
                    work.push((left, Req::AllLeaves));
                    if r.cvd == 0 {
                        work.push((right, Req::OneLeaf));
                    } else {
                        work.push((right, Req::Cvd));
                    }
                } else if ExtInt::Fin(r.size + l.cvd.max(1)) == target {
                    work.push((right, Req::AllLeaves));
                    if l.cvd == 0 {
                        work.push((left, Req::OneLeaf));
                    } else {
                        work.push((left, Req::Cvd));
                    }
                } else {
                    work.push((left, Req::CliqueDel));
                    work.push((right, Req::CliqueDel));
                }
            }
        }
    }
}

fn expect_internal(t: &BinaryCotree, id: usize) -> (Label, usize, usize) {
    match t.node(id) {
        BinaryNode::Internal { label, left, right } => (*label, *left, *right),
        BinaryNode::Leaf(_) => unreachable!("leaf reached with a positive target"),
    }
}
