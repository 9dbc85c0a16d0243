//! Hardness-reduction instance generators with bidirectional solution maps,
//! plus the H-free complexity classifier.
//!
//! Every generator records a `vertex_origin` tag for each produced vertex so
//! downstream tooling can audit any instance, and each reduction ships a lift
//! (source solution to produced solution) and a restrict (produced solution
//! back to the source) that verify their inputs before mapping them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dp::Variant;
use crate::graph::{Graph, Part};
use crate::oracle::{verify, OracleError, RejectReason, VerifyOutcome};
use crate::patterns::{PatternKind, PatternWitness};

/// Guard against materializing astronomically subdivided graphs.
const MAX_PRODUCED_EDGES: usize = 1 << 26;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    /// Two joined complement copies of the (padded) source; budget doubles.
    DenseVcToCvd,
    /// Each edge subdivided with three new vertices; budget grows by m.
    Subdivide3,
    /// `rounds`-fold composition of the 3-subdivision.
    Amplify { rounds: u32 },
    /// Source plus an attached pendant-tree gadget forcing connectivity.
    CcvdGadget { gadget_girth: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubdivRole {
    /// Subdivision vertex adjacent to the smaller endpoint.
    NearU,
    /// Middle subdivision vertex.
    Mid,
    /// Subdivision vertex adjacent to the larger endpoint.
    NearV,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetBase {
    Path { level: u64 },
    Junction,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetRole {
    /// Hanging-path vertex at the given level; level 0 is the spine anchor.
    Path { level: u64 },
    /// Spine vertex between consecutive anchors (the bridge ends here).
    Junction,
    /// Middle vertex of the pendant 2-path attached to `base`.
    PendantInner { base: GadgetBase },
    /// Tip of the pendant 2-path attached to `base`.
    PendantOuter { base: GadgetBase },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GadgetTag {
    pub side: Part,
    pub index: usize,
    pub role: GadgetRole,
}

/// Where a produced vertex comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexOrigin {
    /// First complement copy of this source vertex.
    Copy1(usize),
    /// Second complement copy of this source vertex.
    Copy2(usize),
    /// Padding vertex (given its padded-source id) in the first copy.
    PadCopy1(usize),
    /// Padding vertex in the second copy.
    PadCopy2(usize),
    /// Source vertex kept under the same id.
    Original(usize),
    /// Subdivision vertex created in the given round for the edge `u-v` of
    /// the previous round's graph.
    Subdiv {
        round: u32,
        u: usize,
        v: usize,
        role: SubdivRole,
    },
    /// Source vertex of the gadget reduction, kept under the same id.
    Source(usize),
    /// Gadget-tree vertex.
    Gadget(GadgetTag),
}

/// A generated instance with budgets and the origin map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedInstance {
    pub kind: ReductionKind,
    pub source: Graph,
    pub source_budget: u64,
    pub produced: Graph,
    pub produced_budget: u64,
    pub vertex_origin: Vec<VertexOrigin>,
    /// Gadget reductions only: the forced connected deletion core, in
    /// produced-graph coordinates.
    pub black_set: Option<Vec<usize>>,
}

impl ReducedInstance {
    /// Maps a verified source-side solution to a produced-side solution.
    pub fn lift(&self, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
        match self.kind {
            ReductionKind::DenseVcToCvd => lift_dense(self, set),
            ReductionKind::Subdivide3 => lift_subdiv(self, set),
            ReductionKind::Amplify { .. } => lift_amplify(self, set),
            ReductionKind::CcvdGadget { .. } => lift_gadget(self, set),
        }
    }

    /// Maps a verified produced-side solution back to the source.
    pub fn restrict(&self, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
        match self.kind {
            ReductionKind::DenseVcToCvd => restrict_dense(self, set),
            ReductionKind::Subdivide3 => restrict_subdiv(self, set),
            ReductionKind::Amplify { .. } => restrict_amplify(self, set),
            ReductionKind::CcvdGadget { .. } => restrict_gadget(self, set),
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("source graph contains a triangle: {0:?}")]
    TriangleFound(PatternWitness),
    #[error("source graph is not bipartite")]
    NotBipartite,
    #[error("gadget girth parameter must be an odd integer >= 3, got {0}")]
    BadGadgetGirth(u64),
    #[error("gadget needs at least one column per side, got r={r}, s={s}")]
    BadGadgetSides { r: usize, s: usize },
    #[error("amplification needs at least one round")]
    BadRounds,
    #[error("amplified instance would exceed {MAX_PRODUCED_EDGES} edges")]
    TooLarge,
    #[error("source-side set rejected: {0}")]
    SourceSetRejected(RejectReason),
    #[error("produced-side set rejected: {0}")]
    ProducedSetRejected(RejectReason),
    #[error("produced-side set exceeds the budget: {size} > {budget}")]
    BudgetExceeded { size: usize, budget: u64 },
    #[error("NOT_NORMALIZED: produced-side set does not contain the whole black set")]
    NotNormalized,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn expect_source_accept(
    ri: &ReducedInstance,
    set: &[usize],
    variant: Variant,
) -> Result<(), ReductionError> {
    match verify(&ri.source, set, variant)? {
        VerifyOutcome::Accept => Ok(()),
        VerifyOutcome::Reject(r) => Err(ReductionError::SourceSetRejected(r)),
    }
}

fn expect_produced_accept(
    ri: &ReducedInstance,
    set: &[usize],
    variant: Variant,
) -> Result<(), ReductionError> {
    match verify(&ri.produced, set, variant)? {
        VerifyOutcome::Accept => Ok(()),
        VerifyOutcome::Reject(r) => Err(ReductionError::ProducedSetRejected(r)),
    }
}

// ----------------------------------------------------------------------
// Dense reduction: vertex cover -> cluster vertex deletion
// ----------------------------------------------------------------------

/// Pads the source with `max(0, 2k - n)` isolated vertices, then produces two
/// disjoint copies of the padded graph's complement with every cross pair
/// added as an edge. Budget doubles.
///
/// Vertex numbering: copy 1 keeps source ids `0..n` then padding up to `np`;
/// copy 2 repeats the layout shifted by `np`.
pub fn vc_to_cvd_dense(g: &Graph, k: u64) -> ReducedInstance {
    let n = g.n();
    let pad = (2 * k).saturating_sub(n as u64) as usize;
    let np = n + pad;
    let mut padded = Graph::new(np);
    for (u, v) in g.edges() {
        padded.add_edge(u, v);
    }
    let comp = padded.complement();
    let produced = comp.join(&comp);

    let mut origin = Vec::with_capacity(2 * np);
    for v in 0..np {
        origin.push(if v < n {
            VertexOrigin::Copy1(v)
        } else {
            VertexOrigin::PadCopy1(v)
        });
    }
    for v in 0..np {
        origin.push(if v < n {
            VertexOrigin::Copy2(v)
        } else {
            VertexOrigin::PadCopy2(v)
        });
    }
    ReducedInstance {
        kind: ReductionKind::DenseVcToCvd,
        source: g.clone(),
        source_budget: k,
        produced,
        produced_budget: 2 * k,
        vertex_origin: origin,
        black_set: None,
    }
}

/// Both copies of a verified vertex cover, size `2|set|`.
pub fn lift_dense(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    expect_source_accept(ri, set, Variant::VertexCover)?;
    let np = ri.produced.n() / 2;
    let mut out: Vec<usize> = set.to_vec();
    out.extend(set.iter().map(|&v| v + np));
    out.sort_unstable();
    Ok(out)
}

/// Source vertices of the copy with the smaller intersection (ties choose
/// copy 1), padding dropped.
pub fn restrict_dense(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    expect_produced_accept(ri, set, Variant::Cvd)?;
    let n = ri.source.n();
    let np = ri.produced.n() / 2;
    let c1 = set.iter().filter(|&&v| v < np).count();
    let c2 = set.len() - c1;
    let mut out: Vec<usize> = if c1 <= c2 {
        set.iter().copied().filter(|&v| v < n).collect()
    } else {
        set.iter()
            .copied()
            .filter(|&v| (np..np + n).contains(&v))
            .map(|v| v - np)
            .collect()
    };
    out.sort_unstable();
    Ok(out)
}

// ----------------------------------------------------------------------
// 3-subdivision
// ----------------------------------------------------------------------

/// Replaces every edge `u-v` (u < v) by the 5-vertex path
/// `u, e_u, e_uv, e_v, v`. Requires a triangle-free source. Budget grows by
/// the source edge count; girth quadruples.
///
/// Vertex numbering: source ids survive unchanged; the j-th source edge (in
/// lexicographic order) gets the ids `n+3j` (near u), `n+3j+1` (middle) and
/// `n+3j+2` (near v).
pub fn subdivide3(g: &Graph, k: u64) -> Result<ReducedInstance, ReductionError> {
    if let Some(w) = g.find_induced(PatternKind::Triangle) {
        return Err(ReductionError::TriangleFound(w));
    }
    let produced = subdivide_once(g);
    let mut origin: Vec<VertexOrigin> = (0..g.n()).map(VertexOrigin::Original).collect();
    push_subdiv_origins(&mut origin, g, 1);
    Ok(ReducedInstance {
        kind: ReductionKind::Subdivide3,
        source: g.clone(),
        source_budget: k,
        produced,
        produced_budget: k + g.m() as u64,
        vertex_origin: origin,
        black_set: None,
    })
}

fn subdivide_once(g: &Graph) -> Graph {
    let n = g.n();
    let m = g.m();
    let mut out = Graph::new(n + 3 * m);
    for (j, (u, v)) in g.edges().enumerate() {
        let near_u = n + 3 * j;
        let mid = near_u + 1;
        let near_v = near_u + 2;
        out.add_edge(u, near_u);
        out.add_edge(near_u, mid);
        out.add_edge(mid, near_v);
        out.add_edge(near_v, v);
    }
    out
}

fn push_subdiv_origins(origin: &mut Vec<VertexOrigin>, g: &Graph, round: u32) {
    for (u, v) in g.edges() {
        for role in [SubdivRole::NearU, SubdivRole::Mid, SubdivRole::NearV] {
            origin.push(VertexOrigin::Subdiv { round, u, v, role });
        }
    }
}

/// Ids of the three subdivision vertices of the j-th edge.
fn subdiv_ids(n: usize, j: usize) -> (usize, usize, usize) {
    (n + 3 * j, n + 3 * j + 1, n + 3 * j + 2)
}

/// Extends a verified deletion set by exactly one subdivision vertex per
/// edge: the middle one when the endpoints agree, otherwise the one next to
/// the endpoint outside the set. Size grows by exactly m.
pub fn lift_subdiv(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    expect_source_accept(ri, set, Variant::Cvd)?;
    let g = &ri.source;
    let mut in_set = vec![false; g.n()];
    for &v in set {
        in_set[v] = true;
    }
    let mut out = set.to_vec();
    for (j, (u, v)) in g.edges().enumerate() {
        let (near_u, mid, near_v) = subdiv_ids(g.n(), j);
        out.push(match (in_set[u], in_set[v]) {
            (true, false) => near_v,
            (false, true) => near_u,
            _ => mid,
        });
    }
    out.sort_unstable();
    Ok(out)
}

/// Normalizes a verified produced-side deletion set so every edge contributes
/// exactly one subdivision vertex (the exchange moves never grow the set and
/// keep it feasible), then restricts to the original vertices.
pub fn restrict_subdiv(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    expect_produced_accept(ri, set, Variant::Cvd)?;
    if set.len() as u64 > ri.produced_budget {
        return Err(ReductionError::BudgetExceeded {
            size: set.len(),
            budget: ri.produced_budget,
        });
    }
    let g = &ri.source;
    let n = g.n();
    let mut chosen = vec![false; ri.produced.n()];
    for &v in set {
        chosen[v] = true;
    }
    for (j, (u, v)) in g.edges().enumerate() {
        let (near_u, mid, near_v) = subdiv_ids(n, j);
        loop {
            match (chosen[near_u], chosen[mid], chosen[near_v]) {
                (true, true, true) => chosen[mid] = false,
                (true, true, false) => {
                    chosen[mid] = false;
                    chosen[v] = true;
                }
                (false, true, true) => {
                    chosen[mid] = false;
                    chosen[u] = true;
                }
                (true, false, true) => {
                    if chosen[u] {
                        chosen[near_u] = false;
                    } else if chosen[v] {
                        chosen[near_v] = false;
                    } else {
                        chosen[near_u] = false;
                        chosen[u] = true;
                    }
                }
                _ => break,
            }
        }
    }
    let out: Vec<usize> = (0..n).filter(|&v| chosen[v]).collect();
    debug_assert!(out.len() + g.m() <= set.len());
    debug_assert_eq!(
        verify(g, &out, Variant::Cvd).unwrap(),
        VerifyOutcome::Accept
    );
    Ok(out)
}

// ----------------------------------------------------------------------
// Girth amplification
// ----------------------------------------------------------------------

/// `rounds`-fold composition of the 3-subdivision. The produced graph has
/// `n + (4^t - 1) m` vertices, budget `k + m (4^t - 1) / 3`, and girth
/// `4^t` times the source girth.
pub fn amplify(g: &Graph, k: u64, rounds: u32) -> Result<ReducedInstance, ReductionError> {
    if rounds == 0 {
        return Err(ReductionError::BadRounds);
    }
    if let Some(w) = g.find_induced(PatternKind::Triangle) {
        return Err(ReductionError::TriangleFound(w));
    }
    let mut current = g.clone();
    let mut budget = k;
    let mut origin: Vec<VertexOrigin> = (0..g.n()).map(VertexOrigin::Original).collect();
    for round in 1..=rounds {
        if current
            .m()
            .checked_mul(4)
            .is_none_or(|m| m > MAX_PRODUCED_EDGES)
        {
            return Err(ReductionError::TooLarge);
        }
        budget += current.m() as u64;
        push_subdiv_origins(&mut origin, &current, round);
        current = subdivide_once(&current);
    }
    Ok(ReducedInstance {
        kind: ReductionKind::Amplify { rounds },
        source: g.clone(),
        source_budget: k,
        produced: current,
        produced_budget: budget,
        vertex_origin: origin,
        black_set: None,
    })
}

fn amplify_rounds(ri: &ReducedInstance) -> u32 {
    match ri.kind {
        ReductionKind::Amplify { rounds } => rounds,
        _ => unreachable!("not an amplified instance"),
    }
}

/// Per-round chain of single-subdivision instances, rebuilt deterministically
/// from the source.
fn amplify_chain(ri: &ReducedInstance) -> Result<Vec<ReducedInstance>, ReductionError> {
    let rounds = amplify_rounds(ri);
    let mut chain = Vec::with_capacity(rounds as usize);
    let mut g = ri.source.clone();
    let mut k = ri.source_budget;
    for _ in 0..rounds {
        let step = subdivide3(&g, k)?;
        g = step.produced.clone();
        k = step.produced_budget;
        chain.push(step);
    }
    Ok(chain)
}

pub fn lift_amplify(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    let chain = amplify_chain(ri)?;
    let mut cur = set.to_vec();
    for step in &chain {
        cur = lift_subdiv(step, &cur)?;
    }
    Ok(cur)
}

pub fn restrict_amplify(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    if set.len() as u64 > ri.produced_budget {
        return Err(ReductionError::BudgetExceeded {
            size: set.len(),
            budget: ri.produced_budget,
        });
    }
    let chain = amplify_chain(ri)?;
    let mut cur = set.to_vec();
    for step in chain.iter().rev() {
        cur = restrict_subdiv(step, &cur)?;
    }
    Ok(cur)
}

/// Rounds needed so the amplified girth exceeds `girth_bound` while spreading
/// degree-3 vertices further apart than `tree_size`:
/// `max(ceil(log4(girth_bound)), tree_size)`.
pub fn choose_t(girth_bound: u64, tree_size: u64) -> u32 {
    assert!(girth_bound >= 3, "girth bound must be at least 3");
    assert!(tree_size >= 1, "tree size must be at least 1");
    let mut t = 0u32;
    let mut pow = 1u64;
    while pow < girth_bound {
        pow *= 4;
        t += 1;
    }
    t.max(tree_size.try_into().unwrap_or(u32::MAX))
}

// ----------------------------------------------------------------------
// Connected-CVD gadget
// ----------------------------------------------------------------------

struct GadgetLayout {
    g: u64,
    r: usize,
    s: usize,
}

impl GadgetLayout {
    fn block(&self) -> usize {
        3 * self.g as usize + 6
    }

    fn columns(&self) -> usize {
        self.r + self.s
    }

    fn vertex_count(&self) -> usize {
        self.block() * self.columns()
    }

    fn column_base(&self, side: Part, index: usize) -> usize {
        let col = match side {
            Part::X => index,
            Part::Y => self.r + index,
        };
        col * self.block()
    }

    /// Hanging-path vertex at `level` (level 0 anchors the spine).
    fn path_vertex(&self, side: Part, index: usize, level: u64) -> usize {
        self.column_base(side, index) + level as usize
    }

    fn junction(&self, side: Part, index: usize) -> usize {
        self.column_base(side, index) + self.g as usize + 1
    }

    /// Pendant pair (inner, outer) for the b-th black base of a column;
    /// bases are ordered path levels 0..=g, then the junction.
    fn pendant(&self, side: Part, index: usize, b: usize) -> (usize, usize) {
        let base = self.column_base(side, index) + self.g as usize + 2 + 2 * b;
        (base, base + 1)
    }

    fn build(&self) -> (Graph, Vec<usize>, Vec<VertexOrigin>) {
        let g = self.g;
        let mut graph = Graph::new(self.vertex_count());
        let mut origin = vec![VertexOrigin::Original(0); self.vertex_count()];
        let mut black = Vec::with_capacity((g as usize + 2) * self.columns());
        let sides = [(Part::X, self.r), (Part::Y, self.s)];
        for (side, count) in sides {
            for i in 0..count {
                for level in 0..=g {
                    let v = self.path_vertex(side, i, level);
                    origin[v] = VertexOrigin::Gadget(GadgetTag {
                        side,
                        index: i,
                        role: GadgetRole::Path { level },
                    });
                    black.push(v);
                    if level > 0 {
                        graph.add_edge(self.path_vertex(side, i, level - 1), v);
                    }
                }
                let junction = self.junction(side, i);
                origin[junction] = VertexOrigin::Gadget(GadgetTag {
                    side,
                    index: i,
                    role: GadgetRole::Junction,
                });
                black.push(junction);
                graph.add_edge(self.path_vertex(side, i, 0), junction);
                if i > 0 {
                    graph.add_edge(self.junction(side, i - 1), self.path_vertex(side, i, 0));
                }
                for b in 0..=(g as usize + 1) {
                    let base_role = if b <= g as usize {
                        GadgetBase::Path { level: b as u64 }
                    } else {
                        GadgetBase::Junction
                    };
                    let base_vertex = if b <= g as usize {
                        self.path_vertex(side, i, b as u64)
                    } else {
                        junction
                    };
                    let (inner, outer) = self.pendant(side, i, b);
                    origin[inner] = VertexOrigin::Gadget(GadgetTag {
                        side,
                        index: i,
                        role: GadgetRole::PendantInner { base: base_role },
                    });
                    origin[outer] = VertexOrigin::Gadget(GadgetTag {
                        side,
                        index: i,
                        role: GadgetRole::PendantOuter { base: base_role },
                    });
                    graph.add_edge(base_vertex, inner);
                    graph.add_edge(inner, outer);
                }
            }
        }
        if self.r > 0 && self.s > 0 {
            graph.add_edge(
                self.junction(Part::X, self.r - 1),
                self.junction(Part::Y, self.s - 1),
            );
        }
        black.sort_unstable();
        (graph, black, origin)
    }
}

/// The pendant tree with `r + s` columns of hanging paths of length `g`
/// bridged between the two sides. Every spine and hanging-path vertex (the
/// black set, `(g+2)(r+s)` vertices) carries a pendant 2-path, giving
/// `(6+3g)(r+s)` vertices total. The black set induces a connected subtree
/// and deleting it leaves a disjoint union of pendant edges.
///
/// Requires `g` odd and at least 3, and both sides non-empty.
pub fn build_gadget_tree(
    g: u64,
    r: usize,
    s: usize,
) -> Result<(Graph, Vec<usize>), ReductionError> {
    if g < 3 || g.is_multiple_of(2) {
        return Err(ReductionError::BadGadgetGirth(g));
    }
    if r == 0 || s == 0 {
        return Err(ReductionError::BadGadgetSides { r, s });
    }
    let (graph, black, _) = GadgetLayout { g, r, s }.build();
    Ok((graph, black))
}

/// Attaches the gadget tree to a bipartite source: each X vertex `x_i` (the
/// i-th smallest on the X side) gains the edge to its column's level-g path
/// vertex, and likewise for Y. Budget grows by `(g+2)n`. The produced graph
/// is bipartite with `(7+3g)n` vertices.
///
/// Vertex numbering: source ids survive unchanged, the gadget occupies
/// `n..(7+3g)n` column by column (X columns first), each column laid out as
/// path levels `0..=g`, junction, then pendant pairs.
///
/// `girth_param` is rounded up to the next odd number.
pub fn cvd_to_ccvd(g: &Graph, k: u64, girth_param: u64) -> Result<ReducedInstance, ReductionError> {
    let (xs, ys) = g
        .bipartition_or_parts()
        .ok_or(ReductionError::NotBipartite)?;
    let g_odd = if girth_param % 2 == 1 {
        girth_param
    } else {
        girth_param + 1
    };
    if g_odd < 3 {
        return Err(ReductionError::BadGadgetGirth(g_odd));
    }
    let n = g.n();
    let layout = GadgetLayout {
        g: g_odd,
        r: xs.len(),
        s: ys.len(),
    };
    let (gadget, black, gadget_origin) = layout.build();

    let mut produced = Graph::new(n + gadget.n());
    for (u, v) in g.edges() {
        produced.add_edge(u, v);
    }
    for (u, v) in gadget.edges() {
        produced.add_edge(u + n, v + n);
    }
    for (i, &x) in xs.iter().enumerate() {
        produced.add_edge(x, n + layout.path_vertex(Part::X, i, g_odd));
    }
    for (j, &y) in ys.iter().enumerate() {
        produced.add_edge(y, n + layout.path_vertex(Part::Y, j, g_odd));
    }

    let mut origin: Vec<VertexOrigin> = (0..n).map(VertexOrigin::Source).collect();
    origin.extend(gadget_origin);
    let black_set: Vec<usize> = black.into_iter().map(|v| v + n).collect();

    Ok(ReducedInstance {
        kind: ReductionKind::CcvdGadget {
            gadget_girth: g_odd,
        },
        source: g.clone(),
        source_budget: k,
        produced,
        produced_budget: k + (g_odd + 2) * n as u64,
        vertex_origin: origin,
        black_set: Some(black_set),
    })
}

/// A verified deletion set plus the whole black set; connected because every
/// source vertex is adjacent to its column's level-g vertex.
pub fn lift_gadget(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    expect_source_accept(ri, set, Variant::Cvd)?;
    let mut out = set.to_vec();
    out.extend_from_slice(
        ri.black_set
            .as_ref()
            .expect("gadget instances carry a black set"),
    );
    out.sort_unstable();
    Ok(out)
}

/// Restriction to the source vertices, after asserting the set contains the
/// whole black set.
pub fn restrict_gadget(ri: &ReducedInstance, set: &[usize]) -> Result<Vec<usize>, ReductionError> {
    expect_produced_accept(ri, set, Variant::Cvd)?;
    let black = ri
        .black_set
        .as_ref()
        .expect("gadget instances carry a black set");
    let in_set: std::collections::HashSet<usize> = set.iter().copied().collect();
    if !black.iter().all(|b| in_set.contains(b)) {
        return Err(ReductionError::NotNormalized);
    }
    let n = ri.source.n();
    let mut out: Vec<usize> = set.iter().copied().filter(|&v| v < n).collect();
    out.sort_unstable();
    Ok(out)
}

// ----------------------------------------------------------------------
// Dichotomy classifier
// ----------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexitySide {
    Polynomial,
    NpComplete,
}

/// Classification of an excluded induced subgraph `H`: deletion problems stay
/// polynomial on H-free graphs exactly when H is an induced subgraph of the
/// 4-vertex path, i.e. a forest with no independent triple and no pair of
/// independent edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassifyVerdict {
    pub side: ComplexitySide,
    pub witness: Option<PatternWitness>,
}

/// Witness priority: a shortest cycle, then an independent triple, then two
/// independent edges.
pub fn dichotomy_classify(h: &Graph) -> ClassifyVerdict {
    for kind in [PatternKind::Cycle, PatternKind::ThreeP1, PatternKind::TwoP2] {
        if let Some(witness) = h.find_induced(kind) {
            return ClassifyVerdict {
                side: ComplexitySide::NpComplete,
                witness: Some(witness),
            };
        }
    }
    ClassifyVerdict {
        side: ComplexitySide::Polynomial,
        witness: None,
    }
}
