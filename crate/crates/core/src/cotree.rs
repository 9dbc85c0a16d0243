//! Cotrees of P4-free graphs: recognition, binarization, expansion, and a
//! textual s-expression format.
//!
//! A cotree's leaves are exactly the vertices of the represented graph; every
//! internal node is labelled union (written `0`) or join (written `1`), has at
//! least two children, and never shares its label with an internal child. The
//! recognizer decomposes by connectivity: a graph on more than one vertex is a
//! union of its components, or a join of its complement's components, or it
//! contains an induced P4 and is not a cograph.
//!
//! Node arenas hold an exact post-order traversal (a node's subtree occupies
//! the positions right before it), so bottom-up passes are plain forward
//! scans with a stack of pending child results.

use thiserror::Error;

use crate::graph::Graph;
use crate::patterns::{PatternKind, PatternWitness};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Label {
    Union,
    Join,
}

impl Label {
    pub fn flipped(self) -> Label {
        match self {
            Label::Union => Label::Join,
            Label::Join => Label::Union,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CotreeNode {
    Leaf(usize),
    Internal { label: Label, children: Vec<usize> },
}

/// Decomposition tree of a cograph, arbitrary arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    root: usize,
}

/// Cotree with every internal node binary; adjacent equal labels permitted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryCotree {
    nodes: Vec<BinaryNode>,
    root: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BinaryNode {
    Leaf(usize),
    Internal {
        label: Label,
        left: usize,
        right: usize,
    },
}

impl Cotree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: usize) -> &CotreeNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, CotreeNode::Leaf(_)))
            .count()
    }

    /// Cotree of the complement graph: flip every internal label.
    pub fn complemented(&self) -> Cotree {
        let nodes = self
            .nodes
            .iter()
            .map(|n| match n {
                CotreeNode::Leaf(v) => CotreeNode::Leaf(*v),
                CotreeNode::Internal { label, children } => CotreeNode::Internal {
                    label: label.flipped(),
                    children: children.clone(),
                },
            })
            .collect();
        Cotree {
            nodes,
            root: self.root,
        }
    }

    /// The represented graph; leaf vertex ids fix the numbering.
    pub fn expand(&self) -> Graph {
        expand_nodes(self.nodes.len(), self.root, |id| match &self.nodes[id] {
            CotreeNode::Leaf(v) => NodeView::Leaf(*v),
            CotreeNode::Internal { label, children } => {
                NodeView::Internal(*label, children.clone())
            }
        })
    }
}

impl BinaryCotree {
    /// Single-leaf tree for vertex `v`.
    pub fn leaf(v: usize) -> BinaryCotree {
        BinaryCotree {
            nodes: vec![BinaryNode::Leaf(v)],
            root: 0,
        }
    }

    /// Joins two trees under a new root. Callers keep leaf ids unique; the
    /// expansion expects them to cover `0..n` overall.
    pub fn combine(label: Label, left: &BinaryCotree, right: &BinaryCotree) -> BinaryCotree {
        let shift = left.nodes.len();
        let mut nodes = left.nodes.clone();
        nodes.extend(right.nodes.iter().map(|n| match n {
            BinaryNode::Leaf(v) => BinaryNode::Leaf(*v),
            BinaryNode::Internal { label, left, right } => BinaryNode::Internal {
                label: *label,
                left: left + shift,
                right: right + shift,
            },
        }));
        let root = nodes.len();
        nodes.push(BinaryNode::Internal {
            label,
            left: left.root,
            right: right.root + shift,
        });
        BinaryCotree { nodes, root }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: usize) -> &BinaryNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[BinaryNode] {
        &self.nodes
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, BinaryNode::Leaf(_)))
            .count()
    }

    pub fn expand(&self) -> Graph {
        expand_nodes(self.nodes.len(), self.root, |id| match &self.nodes[id] {
            BinaryNode::Leaf(v) => NodeView::Leaf(*v),
            BinaryNode::Internal { label, left, right } => {
                NodeView::Internal(*label, vec![*left, *right])
            }
        })
    }
}

enum NodeView {
    Leaf(usize),
    Internal(Label, Vec<usize>),
}

fn expand_nodes(count: usize, root: usize, view: impl Fn(usize) -> NodeView) -> Graph {
    // Forward scan works because children precede parents in the arena.
    let mut leaf_sets: Vec<Vec<usize>> = vec![Vec::new(); count];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0usize;
    for id in 0..count {
        match view(id) {
            NodeView::Leaf(v) => {
                leaf_sets[id] = vec![v];
                n = n.max(v + 1);
            }
            NodeView::Internal(label, children) => {
                let mut acc: Vec<usize> = Vec::new();
                for &c in &children {
                    let part = std::mem::take(&mut leaf_sets[c]);
                    if label == Label::Join {
                        for &u in &acc {
                            for &v in &part {
                                edges.push((u, v));
                            }
                        }
                    }
                    acc.extend(part);
                }
                leaf_sets[id] = acc;
            }
        }
    }
    debug_assert_eq!(leaf_sets[root].len(), n);
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

// ----------------------------------------------------------------------
// Recognition
// ----------------------------------------------------------------------

/// Builds the cotree of `g`, or certifies failure with an induced P4.
///
/// Children are ordered by their smallest contained vertex, so the produced
/// tree is deterministic. Panics on the empty graph, which has no cotree.
pub fn build_cotree(g: &Graph) -> Result<Cotree, PatternWitness> {
    assert!(g.n() > 0, "the empty graph has no cotree");
    let mut nodes = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    let root = decompose(g, &all, &mut nodes)?;
    Ok(Cotree { nodes, root })
}

fn decompose(
    g: &Graph,
    verts: &[usize],
    nodes: &mut Vec<CotreeNode>,
) -> Result<usize, PatternWitness> {
    if verts.len() == 1 {
        nodes.push(CotreeNode::Leaf(verts[0]));
        return Ok(nodes.len() - 1);
    }
    let comps = components_within(g, verts, false);
    if comps.len() > 1 {
        return internal(g, Label::Union, comps, nodes);
    }
    let cocomps = components_within(g, verts, true);
    if cocomps.len() > 1 {
        return internal(g, Label::Join, cocomps, nodes);
    }
    let p4 = g
        .find_p4_within(verts)
        .expect("a connected and co-connected graph on >= 2 vertices contains an induced P4");
    Err(PatternWitness {
        kind: PatternKind::P4,
        vertices: p4.to_vec(),
    })
}

fn internal(
    g: &Graph,
    label: Label,
    parts: Vec<Vec<usize>>,
    nodes: &mut Vec<CotreeNode>,
) -> Result<usize, PatternWitness> {
    let mut children = Vec::with_capacity(parts.len());
    for part in &parts {
        children.push(decompose(g, part, nodes)?);
    }
    nodes.push(CotreeNode::Internal { label, children });
    Ok(nodes.len() - 1)
}

/// Crate-internal arena constructor; callers guarantee the cotree invariants
/// and that children precede parents.
pub(crate) fn from_arena(nodes: Vec<CotreeNode>, root: usize) -> Cotree {
    #[cfg(debug_assertions)]
    for (id, node) in nodes.iter().enumerate() {
        if let CotreeNode::Internal { children, .. } = node {
            debug_assert!(children.len() >= 2);
            debug_assert!(children.iter().all(|&c| c < id));
        }
    }
    Cotree { nodes, root }
}

/// Connected components of `g[verts]` (or of its complement), each sorted,
/// ordered by smallest contained vertex.
fn components_within(g: &Graph, verts: &[usize], of_complement: bool) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = verts.to_vec(); // sorted by construction
    let mut comps = Vec::new();
    while let Some(&start) = remaining.first() {
        let mut comp = vec![start];
        remaining.remove(0);
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            // Partition `remaining` into this component's new members and the rest.
            let mut rest = Vec::with_capacity(remaining.len());
            for &v in &remaining {
                let adjacent = g.has_edge(u, v);
                if adjacent != of_complement {
                    comp.push(v);
                } else {
                    rest.push(v);
                }
            }
            remaining = rest;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

// ----------------------------------------------------------------------
// Binarization
// ----------------------------------------------------------------------

/// Right-associated binary form: children `c1..ck` become
/// `c1 ∘ (c2 ∘ (... ∘ ck))` under the node's label. The expansion is
/// unchanged.
pub fn binarize(t: &Cotree) -> BinaryCotree {
    let mut nodes: Vec<BinaryNode> = Vec::with_capacity(2 * t.leaf_count());
    let mut map = vec![usize::MAX; t.node_count()];
    for id in 0..t.node_count() {
        let bin_id = match t.node(id) {
            CotreeNode::Leaf(v) => {
                nodes.push(BinaryNode::Leaf(*v));
                nodes.len() - 1
            }
            CotreeNode::Internal { label, children } => {
                let mut acc = map[*children.last().unwrap()];
                for &c in children[..children.len() - 1].iter().rev() {
                    nodes.push(BinaryNode::Internal {
                        label: *label,
                        left: map[c],
                        right: acc,
                    });
                    acc = nodes.len() - 1;
                }
                acc
            }
        };
        map[id] = bin_id;
    }
    BinaryCotree {
        nodes,
        root: map[t.root],
    }
}

// ----------------------------------------------------------------------
// Text format
// ----------------------------------------------------------------------

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CotreeTextError {
    #[error("position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{msg}")]
    Structure { msg: String },
}

fn parse_err<T>(pos: usize, msg: impl Into<String>) -> Result<T, CotreeTextError> {
    Err(CotreeTextError::Parse {
        pos,
        msg: msg.into(),
    })
}

fn structure_err<T>(msg: impl Into<String>) -> Result<T, CotreeTextError> {
    Err(CotreeTextError::Structure { msg: msg.into() })
}

#[derive(Debug)]
enum Token {
    Open(usize),
    Close(usize),
    Number(usize, usize), // byte position, value
}

fn tokenize(text: &str) -> Result<Vec<Token>, CotreeTextError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => {
                toks.push(Token::Open(i));
                i += 1;
            }
            b')' => {
                toks.push(Token::Close(i));
                i += 1;
            }
            c if c.is_ascii_whitespace() => i += 1,
            c if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: usize = text[start..i].parse().map_err(|_| CotreeTextError::Parse {
                    pos: start,
                    msg: "number too large".into(),
                })?;
                toks.push(Token::Number(start, v));
            }
            c => return parse_err(i, format!("unexpected character {:?}", c as char)),
        }
    }
    Ok(toks)
}

/// Nesting bound for the cotree parser. Legitimate trees stay far below it
/// (generated trees have logarithmic depth); a crafted file must not crash
/// the recursive descent.
const MAX_PARSE_DEPTH: usize = 10_000;

/// Parses the s-expression cotree format: a leaf is a decimal vertex id, an
/// internal node is `(0 c1 c2 ...)` (union) or `(1 c1 c2 ...)` (join).
///
/// Enforces the cotree invariants: arity at least 2, no adjacent internal
/// nodes with equal labels, and leaf ids covering `0..n` exactly once.
pub fn parse_cotree(text: &str) -> Result<Cotree, CotreeTextError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return parse_err(0, "empty input");
    }
    let mut nodes = Vec::new();
    let mut pos = 0usize;
    let root = parse_node(&toks, &mut pos, &mut nodes, 0)?;
    if pos != toks.len() {
        let p = match toks[pos] {
            Token::Open(p) | Token::Close(p) | Token::Number(p, _) => p,
        };
        return parse_err(p, "trailing input after cotree");
    }
    let t = Cotree { nodes, root };
    validate_leaves(&t)?;
    Ok(t)
}

fn parse_node(
    toks: &[Token],
    pos: &mut usize,
    nodes: &mut Vec<CotreeNode>,
    depth: usize,
) -> Result<usize, CotreeTextError> {
    match toks.get(*pos) {
        Some(Token::Number(_, v)) => {
            *pos += 1;
            nodes.push(CotreeNode::Leaf(*v));
            Ok(nodes.len() - 1)
        }
        Some(Token::Open(open_at)) => {
            if depth >= MAX_PARSE_DEPTH {
                return parse_err(*open_at, format!("nesting deeper than {MAX_PARSE_DEPTH}"));
            }
            *pos += 1;
            let label = match toks.get(*pos) {
                Some(Token::Number(_, 0)) => Label::Union,
                Some(Token::Number(_, 1)) => Label::Join,
                Some(Token::Number(p, v)) => {
                    return parse_err(*p, format!("node label must be 0 or 1, got {v}"))
                }
                _ => return parse_err(*open_at, "expected node label after '('"),
            };
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match toks.get(*pos) {
                    Some(Token::Close(_)) => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => children.push(parse_node(toks, pos, nodes, depth + 1)?),
                    None => return parse_err(*open_at, "unclosed '('"),
                }
            }
            if children.len() < 2 {
                return structure_err(format!(
                    "internal node at position {open_at} has arity {} (need >= 2)",
                    children.len()
                ));
            }
            for &c in &children {
                if let CotreeNode::Internal { label: cl, .. } = &nodes[c] {
                    if *cl == label {
                        return structure_err(format!(
                            "internal node at position {open_at} has a child with the same label"
                        ));
                    }
                }
            }
            nodes.push(CotreeNode::Internal { label, children });
            Ok(nodes.len() - 1)
        }
        Some(Token::Close(p)) => parse_err(*p, "unexpected ')'"),
        None => parse_err(0, "unexpected end of input"),
    }
}

fn validate_leaves(t: &Cotree) -> Result<(), CotreeTextError> {
    let mut leaves: Vec<usize> = t
        .nodes
        .iter()
        .filter_map(|n| match n {
            CotreeNode::Leaf(v) => Some(*v),
            _ => None,
        })
        .collect();
    leaves.sort_unstable();
    for (i, &v) in leaves.iter().enumerate() {
        if v != i {
            if i > 0 && leaves[i - 1] == v {
                return structure_err(format!("duplicate leaf id {v}"));
            }
            return structure_err(format!(
                "leaf ids must cover 0..{} exactly once (missing {})",
                leaves.len(),
                i
            ));
        }
    }
    Ok(())
}

/// Serializes a cotree; children appear in stored order. Inverse of
/// `parse_cotree` on valid trees.
pub fn serialize_cotree(t: &Cotree) -> String {
    let mut out = String::new();
    write_node(t, t.root, &mut out);
    out
}

fn write_node(t: &Cotree, id: usize, out: &mut String) {
    match t.node(id) {
        CotreeNode::Leaf(v) => out.push_str(&v.to_string()),
        CotreeNode::Internal { label, children } => {
            out.push('(');
            out.push(match label {
                Label::Union => '0',
                Label::Join => '1',
            });
            for &c in children {
                out.push(' ');
                write_node(t, c, out);
            }
            out.push(')');
        }
    }
}
