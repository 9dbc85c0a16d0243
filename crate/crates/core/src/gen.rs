//! Seeded instance generators. Fixed seed means byte-identical output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cotree::{binarize, parse_cotree, BinaryCotree, Cotree};
use crate::graph::Graph;

/// Erdos-Renyi G(n, p): scans pairs `(u, v)` with `u < v` in ascending `u`
/// then `v` order, keeping each with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random cotree on `n` leaves: a uniform recursive split into a binary
/// shape, labels alternating by level with a random root label, leaves
/// numbered in order. Valid both as a cotree and as a binary cotree shape.
pub fn random_cograph_cotree(n: usize, seed: u64) -> Cotree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_cotree_with(&mut rng, n)
}

/// Random cotree and its expansion.
pub fn random_cograph(n: usize, seed: u64) -> (Cotree, Graph) {
    let t = random_cograph_cotree(n, seed);
    let g = t.expand();
    (t, g)
}

/// Random binary cotree on `n` leaves.
pub fn random_binary_cotree(n: usize, seed: u64) -> BinaryCotree {
    binarize(&random_cograph_cotree(n, seed))
}

/// Random binary cotree with a size drawn from `1..=max_leaves`.
pub fn random_binary_cotree_with<R: Rng>(rng: &mut R, max_leaves: usize) -> BinaryCotree {
    let n = rng.gen_range(1..=max_leaves);
    binarize(&random_cotree_with(rng, n))
}

/// Random cotree with a size drawn from `1..=max_leaves`.
pub fn random_cotree_sized<R: Rng>(rng: &mut R, max_leaves: usize) -> Cotree {
    let n = rng.gen_range(1..=max_leaves);
    random_cotree_with(rng, n)
}

fn random_cotree_with<R: Rng>(rng: &mut R, n: usize) -> Cotree {
    assert!(n >= 1, "a cotree needs at least one leaf");
    let root_label = rng.gen_bool(0.5);
    // Iterative two-phase build so million-leaf trees cannot overflow the
    // stack; children are allocated before parents.
    enum Task {
        Range(usize, usize, u32),
        Combine(u32),
    }
    let mut nodes: Vec<crate::cotree::CotreeNode> = Vec::with_capacity(2 * n);
    let mut out: Vec<usize> = Vec::new();
    let mut tasks = vec![Task::Range(0, n, 0)];
    while let Some(task) = tasks.pop() {
        match task {
            Task::Range(lo, hi, depth) => {
                if hi - lo == 1 {
                    nodes.push(crate::cotree::CotreeNode::Leaf(lo));
                    out.push(nodes.len() - 1);
                } else {
                    let split = rng.gen_range(lo + 1..hi);
                    tasks.push(Task::Combine(depth));
                    tasks.push(Task::Range(split, hi, depth + 1));
                    tasks.push(Task::Range(lo, split, depth + 1));
                }
            }
            Task::Combine(depth) => {
                let right = out.pop().unwrap();
                let left = out.pop().unwrap();
                let even = depth % 2 == 0;
                let label = if even == root_label {
                    crate::cotree::Label::Join
                } else {
                    crate::cotree::Label::Union
                };
                nodes.push(crate::cotree::CotreeNode::Internal {
                    label,
                    children: vec![left, right],
                });
                out.push(nodes.len() - 1);
            }
        }
    }
    debug_assert_eq!(out.len(), 1);
    let root = out[0];
    crate::cotree::from_arena(nodes, root)
}

/// Single-leaf cotree.
pub fn leaf_cotree() -> Cotree {
    parse_cotree("0").unwrap()
}
