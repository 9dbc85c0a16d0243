//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test -p clustervd --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clustervd::cotree::{BinaryCotree, Label};
use clustervd::dp::{dp_stats, extract_set, root_value, Variant};
use clustervd::extint::ExtInt;
use clustervd::gen;
use clustervd::graph::{Graph, Part};
use clustervd::oracle::{branch_cvd, brute_min, verify, TargetPredicate, VerifyOutcome};
use clustervd::patterns::PatternKind;
use clustervd::reduction::{
    amplify, build_gadget_tree, cvd_to_ccvd, dichotomy_classify, lift_gadget, subdivide3,
    vc_to_cvd_dense, ComplexitySide,
};

/// C6 with a chord between antipodal vertices; 6 vertices, 7 edges,
/// cluster vertex deletion number 2.
fn chorded_c6() -> Graph {
    let mut g = Graph::cycle(6);
    g.add_edge(1, 4);
    g
}

fn oracle_value(g: &Graph, variant: Variant, weights: Option<&[u64]>) -> ExtInt {
    brute_min(g, TargetPredicate::for_variant(variant), weights)
        .unwrap()
        .value
}

/// Checks all five DP root values of a binary cotree against the subset
/// oracle, plus set extraction for every finite value. Returns whether any
/// connected value was infinite.
fn check_tree_against_oracle(tree: &BinaryCotree, weights: &[u64]) -> bool {
    let g = tree.expand();
    let stats = dp_stats(tree, None);
    let w_stats = dp_stats(tree, Some(weights));
    let mut saw_infinity = false;

    let cases = [
        (Variant::Cvd, false),
        (Variant::CliqueDeletion, false),
        (Variant::ConnectedCvd, false),
        (Variant::ConnectedCliqueDeletion, false),
        (Variant::Cvd, true),
    ];
    for (variant, weighted) in cases {
        let (stats, w) = if weighted {
            (&w_stats, Some(weights))
        } else {
            (&stats, None)
        };
        let dp = root_value(stats, tree.root(), variant, weighted);
        let oracle = oracle_value(&g, variant, w);
        assert_eq!(
            dp,
            oracle,
            "variant {variant:?} weighted={weighted} on {:?}",
            g.edges().collect::<Vec<_>>()
        );
        saw_infinity |= !dp.is_finite();
        if dp.is_finite() {
            let set = extract_set(tree, stats, variant, weighted).unwrap();
            assert_eq!(
                verify(&g, &set, variant).unwrap(),
                VerifyOutcome::Accept,
                "extracted set invalid for {variant:?} weighted={weighted}"
            );
            let size = if weighted {
                set.iter().map(|&v| weights[v]).sum::<u64>()
            } else {
                set.len() as u64
            };
            assert_eq!(ExtInt::Fin(size), dp, "extracted set has wrong size");
        }
    }
    saw_infinity
}

fn all_labeled_shapes(lo: usize, hi: usize) -> Vec<BinaryCotree> {
    if hi - lo == 1 {
        return vec![BinaryCotree::leaf(lo)];
    }
    let mut out = Vec::new();
    for split in lo + 1..hi {
        for left in all_labeled_shapes(lo, split) {
            for right in all_labeled_shapes(split, hi) {
                for label in [Label::Union, Label::Join] {
                    out.push(BinaryCotree::combine(label, &left, &right));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_1_cotree_dp_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let mut infinities = 0usize;
    for _ in 0..500 {
        let tree = gen::random_binary_cotree_with(&mut rng, 10);
        let n = tree.leaf_count();
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
        if check_tree_against_oracle(&tree, &weights) {
            infinities += 1;
        }
    }
    assert!(infinities > 0, "no infinite connected values sampled");

    let mut exhaustive = 0usize;
    for n in 1..=5usize {
        for tree in all_labeled_shapes(0, n) {
            let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
            check_tree_against_oracle(&tree, &weights);
            exhaustive += 1;
        }
    }
    println!(
        "ACCEPTANCE 1 PASS: 500 random cographs (n <= 10, {infinities} with infinite \
         connected values) and {exhaustive} exhaustive labeled shapes (n <= 5) match the \
         subset oracle on all five values"
    );
}

#[test]
fn criterion_2_chorded_c6_subdivision() {
    let g = chorded_c6();
    assert_eq!(g.n(), 6);
    assert_eq!(g.m(), 7);
    assert_eq!(oracle_value(&g, Variant::Cvd, None), ExtInt::Fin(2));

    let ri = subdivide3(&g, 2).unwrap();
    assert_eq!(ri.produced.n(), 27);
    assert_eq!(ri.produced_budget, 9);

    assert!(branch_cvd(&ri.produced, 8).unwrap().is_none());
    let set = branch_cvd(&ri.produced, 9)
        .unwrap()
        .expect("yes at budget 9");
    assert_eq!(set.len(), 9);
    assert_eq!(
        verify(&ri.produced, &set, Variant::Cvd).unwrap(),
        VerifyOutcome::Accept
    );
    println!(
        "ACCEPTANCE 2 PASS: chorded C6 subdivides to 27 vertices; branching answers \
         NO at budget 8 and YES at budget 9"
    );
}

/// Seeded triangle-free sampler; rejects triangles and edge budgets.
fn triangle_free_instances(
    rng: &mut ChaCha8Rng,
    count: usize,
    max_n: usize,
    max_m: usize,
) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.m() <= max_m && g.find_induced(PatternKind::Triangle).is_none() {
            out.push(g);
        }
    }
    out
}

#[test]
fn criterion_3_subdivision_equivalence_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(3003);
    let instances = triangle_free_instances(&mut rng, 200, 6, 7);
    let mut decisions = 0usize;
    let mut round_trips = 0usize;
    for g in &instances {
        for k in 0..=3u64 {
            let ri = subdivide3(g, k).unwrap();
            let source_yes = branch_cvd(g, k).unwrap();
            let produced_yes = branch_cvd(&ri.produced, ri.produced_budget).unwrap();
            assert_eq!(
                source_yes.is_some(),
                produced_yes.is_some(),
                "decision mismatch at k={k} on {:?}",
                g.edges().collect::<Vec<_>>()
            );
            decisions += 1;
            if let Some(s) = source_yes {
                let lifted = ri.lift(&s).unwrap();
                assert_eq!(lifted.len(), s.len() + g.m());
                assert_eq!(
                    verify(&ri.produced, &lifted, Variant::Cvd).unwrap(),
                    VerifyOutcome::Accept
                );
                assert_eq!(ri.restrict(&lifted).unwrap(), s);
                round_trips += 1;
            }
            if let Some(s2) = produced_yes {
                let back = ri.restrict(&s2).unwrap();
                assert!(back.len() as u64 <= k);
                assert_eq!(
                    verify(g, &back, Variant::Cvd).unwrap(),
                    VerifyOutcome::Accept
                );
            }
        }
    }
    println!(
        "ACCEPTANCE 3 PASS: 200 triangle-free instances, {decisions} budgeted decisions \
         agree across the 3-subdivision, {round_trips} lift/restrict round trips verified"
    );
}

/// Subcubic triangle-free graph containing the induced C5 on vertices 0..5.
fn subcubic_c5_instance(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(5..=9usize);
    let mut g = Graph::new(n);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
    }
    for _ in 0..3 * n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.has_edge(u, v) || g.degree(u) >= 3 || g.degree(v) >= 3 {
            continue;
        }
        // Keeping the graph triangle-free also keeps the C5 chordless.
        if g.neighbors(u).iter().any(|&w| g.has_edge(w, v)) {
            continue;
        }
        g.add_edge(u, v);
    }
    g
}

#[test]
fn criterion_4_dense_equivalence_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(4004);
    let mut decisions = 0usize;
    for _ in 0..200 {
        let g = subcubic_c5_instance(&mut rng);
        let n = g.n();
        assert!(g.max_degree() <= 3);
        let hole = g
            .find_induced(PatternKind::OddHole)
            .expect("induced C5 present");
        assert!(hole.is_valid_in(&g));

        let vc_opt = oracle_value(&g, Variant::VertexCover, None);
        for k in 0..=(n as u64).div_ceil(2) {
            let ri = vc_to_cvd_dense(&g, k);
            let n2 = ri.produced.n();
            let min_deg = (0..n2).map(|v| ri.produced.degree(v)).min().unwrap();
            assert!(
                min_deg + 4 >= n2,
                "produced min degree {min_deg} below n'-4 = {}",
                n2 - 4
            );
            let vc_yes = vc_opt <= ExtInt::Fin(k);
            let cvd_yes = branch_cvd(&ri.produced, 2 * k).unwrap().is_some();
            assert_eq!(
                vc_yes,
                cvd_yes,
                "k={k} on {:?}",
                g.edges().collect::<Vec<_>>()
            );
            decisions += 1;
        }
    }
    println!(
        "ACCEPTANCE 4 PASS: 200 subcubic triangle-free sources with induced C5, \
         {decisions} budgeted decisions agree across the dense reduction, min degree \
         >= n'-4 throughout"
    );
}

/// Bipartite source with exactly `r` X-vertices and `s` Y-vertices.
fn bipartite_source(rng: &mut ChaCha8Rng, r: usize, s: usize) -> Graph {
    let mut g = Graph::new(r + s);
    for x in 0..r {
        for y in 0..s {
            if rng.gen_bool(0.4) {
                g.add_edge(x, r + y);
            }
        }
    }
    let parts: Vec<Part> = (0..r + s)
        .map(|v| if v < r { Part::X } else { Part::Y })
        .collect();
    g.set_parts(parts).unwrap();
    g
}

/// A random cluster vertex deletion set: an optimal one plus random extras.
fn random_cvd_set(rng: &mut ChaCha8Rng, g: &Graph) -> Vec<usize> {
    let base = brute_min(g, TargetPredicate::for_variant(Variant::Cvd), None)
        .unwrap()
        .set
        .unwrap();
    let mut set: Vec<usize> = (0..g.n())
        .filter(|&v| base.contains(&v) || rng.gen_bool(0.25))
        .collect();
    set.sort_unstable();
    set.dedup();
    set
}

#[test]
fn criterion_5_gadget_counts_and_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5005);
    let combos: Vec<(u64, usize, usize)> = [3u64, 5]
        .iter()
        .flat_map(|&g| [(g, 1, 1), (g, 4, 3), (g, 2, 5)])
        .collect();

    for &(gg, r, s) in &combos {
        let (h, black) = build_gadget_tree(gg, r, s).unwrap();
        assert_eq!(h.n() as u64, (6 + 3 * gg) * (r + s) as u64);
        assert_eq!(black.len() as u64, (gg + 2) * (r + s) as u64);
        assert_eq!(h.m(), h.n() - 1, "gadget is not a tree");
        assert!(h.is_connected(), "gadget is not a tree");
        assert_eq!(
            verify(&h, &black, Variant::ConnectedCvd).unwrap(),
            VerifyOutcome::Accept
        );

        let source = bipartite_source(&mut rng, r, s);
        let ri = cvd_to_ccvd(&source, 1, gg).unwrap();
        assert_eq!(ri.produced.n() as u64, (7 + 3 * gg) * (r + s) as u64);
        assert!(
            ri.produced.bipartition().is_some(),
            "produced not bipartite"
        );
        assert_eq!(ri.produced_budget, 1 + (gg + 2) * (r + s) as u64);

        // Local minimality probe on an optimal source set.
        let opt = brute_min(&source, TargetPredicate::for_variant(Variant::Cvd), None)
            .unwrap()
            .set
            .unwrap();
        let lifted = lift_gadget(&ri, &opt).unwrap();
        for drop in &lifted {
            let smaller: Vec<usize> = lifted.iter().copied().filter(|v| v != drop).collect();
            assert!(
                verify(&ri.produced, &smaller, Variant::ConnectedCvd).unwrap()
                    != VerifyOutcome::Accept,
                "lift minus vertex {drop} still accepted"
            );
        }
    }

    // Fig-4-shaped configuration: 7-vertex bipartite source, g = 3.
    let mut fig4 = Graph::new(7);
    for (u, v) in [
        (0, 4),
        (1, 4),
        (1, 5),
        (2, 5),
        (2, 6),
        (3, 6),
        (3, 4),
        (0, 5),
        (1, 6),
    ] {
        fig4.add_edge(u, v);
    }
    let ri = cvd_to_ccvd(&fig4, 2, 3).unwrap();
    assert_eq!(ri.produced.n(), 112);
    assert_eq!(ri.produced_budget, 2 + 35);

    let mut lifts = 0usize;
    while lifts < 50 {
        let (gg, r, s) = combos[lifts % combos.len()];
        let source = bipartite_source(&mut rng, r, s);
        let ri = cvd_to_ccvd(&source, source.n() as u64, gg).unwrap();
        let set = random_cvd_set(&mut rng, &source);
        let lifted = lift_gadget(&ri, &set).unwrap();
        assert_eq!(
            lifted.len() as u64,
            set.len() as u64 + (gg + 2) * source.n() as u64
        );
        assert_eq!(
            verify(&ri.produced, &lifted, Variant::ConnectedCvd).unwrap(),
            VerifyOutcome::Accept
        );
        assert_eq!(ri.restrict(&lifted).unwrap(), set);
        lifts += 1;
    }
    println!(
        "ACCEPTANCE 5 PASS: gadget counts exact for g in {{3,5}} x (r,s) in \
         {{(1,1),(4,3),(2,5)}}, trees verified, Fig-4 configuration has 112 vertices and \
         budget shift 35, {lifts} random lifts verified connected, local minimality holds"
    );
}

#[test]
fn criterion_6_girth_amplification() {
    let mut rng = ChaCha8Rng::seed_from_u64(6006);
    let mut count = 0usize;
    while count < 50 {
        let n = rng.gen_range(4..=8usize);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.3) {
                    g.add_edge(u, v);
                }
            }
        }
        if g.find_induced(PatternKind::Triangle).is_some() || !g.girth().is_finite() {
            continue;
        }
        let girth = g.girth().expect_finite();
        for t in 1..=2u32 {
            let ri = amplify(&g, 1, t).unwrap();
            let factor = 4u64.pow(t);
            assert_eq!(
                ri.produced.n() as u64,
                g.n() as u64 + (factor - 1) * g.m() as u64
            );
            assert_eq!(ri.produced.girth(), ExtInt::Fin(factor * girth));
        }
        count += 1;
    }
    println!(
        "ACCEPTANCE 6 PASS: 50 non-forest triangle-free inputs amplified with t in {{1,2}}; \
         girth multiplies by 4^t and vertex counts match n+(4^t-1)m exactly"
    );
}

/// Canonical form of a graph on at most 8 vertices: the minimum adjacency
/// bitmask over all vertex permutations.
fn canonical_form(g: &Graph) -> (usize, u64) {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in permutations(n - 1) {
            for pos in 0..=rest.len() {
                let mut p = rest.clone();
                p.insert(pos, n - 1);
                out.push(p);
            }
        }
        out
    }
    let n = g.n();
    let mut best = u64::MAX;
    for p in permutations(n) {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
    }
    (n, best)
}

#[test]
fn criterion_7_dichotomy_classifier() {
    // The six polynomial-side patterns.
    let two_p1 = Graph::new(2);
    let p2_plus_p1 = Graph::from_edges(3, &[(0, 1)]);
    let polynomial_patterns = [
        Graph::new(1),
        two_p1,
        Graph::path(2),
        p2_plus_p1,
        Graph::path(3),
        Graph::path(4),
    ];
    let expected: std::collections::HashSet<(usize, u64)> =
        polynomial_patterns.iter().map(canonical_form).collect();
    assert_eq!(expected.len(), 6);

    let mut seen = std::collections::HashSet::new();
    let mut polynomial = std::collections::HashSet::new();
    let mut classes = 0usize;
    for n in 1..=4usize {
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
            let canon = canonical_form(&g);
            if !seen.insert(canon) {
                continue;
            }
            classes += 1;
            let verdict = dichotomy_classify(&g);
            match verdict.side {
                ComplexitySide::Polynomial => {
                    assert!(verdict.witness.is_none());
                    polynomial.insert(canon);
                }
                ComplexitySide::NpComplete => {
                    let w = verdict.witness.expect("hard side carries a witness");
                    assert!(w.is_valid_in(&g));
                }
            }
        }
    }
    assert_eq!(classes, 18, "graphs on <= 4 vertices up to isomorphism");
    assert_eq!(
        polynomial, expected,
        "polynomial side must be the six patterns"
    );

    // Named hard cases with their witness kinds.
    let two_p2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
    let hard: [(&Graph, PatternKind); 5] = [
        (&Graph::complete(3), PatternKind::Cycle),
        (&Graph::new(3), PatternKind::ThreeP1),
        (&two_p2, PatternKind::TwoP2),
        (&Graph::path(5), PatternKind::ThreeP1),
        (&Graph::star(3), PatternKind::ThreeP1),
    ];
    for (g, kind) in hard {
        let verdict = dichotomy_classify(g);
        assert_eq!(verdict.side, ComplexitySide::NpComplete);
        let w = verdict.witness.unwrap();
        assert_eq!(w.kind, kind);
        assert!(w.is_valid_in(g));
    }
    println!(
        "ACCEPTANCE 7 PASS: of the 18 graphs on <= 4 vertices exactly the six path \
         subgraphs classify polynomial; named hard cases carry valid witnesses"
    );
}

#[test]
fn criterion_8_linear_time_behavior() {
    // One cold call per size: repeated calls at the small sizes get warm
    // allocator pages while the large one never does, which would skew the
    // per-decade comparison. Cold-for-cold the pass is fault- plus
    // bandwidth-bound, both linear in the node count. Sibling tests in this
    // binary contend for memory bandwidth, so a failed attempt retries after
    // they drain.
    let sizes = [10_000usize, 100_000, 1_000_000];
    let attempts = 4;
    let mut last_times = Vec::new();
    for attempt in 0..attempts {
        let mut times = Vec::new();
        for (i, &n) in sizes.iter().enumerate() {
            let tree = gen::random_binary_cotree(n, 8008 + (attempt * 3 + i) as u64);
            let start = Instant::now();
            let stats = dp_stats(&tree, None);
            let elapsed = start.elapsed();
            assert_eq!(stats[tree.root()].size, n as u64);
            times.push(elapsed);
        }
        let linear = times[2] < Duration::from_secs(10)
            && times.windows(2).all(|w| {
                let prev = w[0].max(Duration::from_millis(2));
                w[1] <= prev * 15
            });
        if linear {
            println!(
                "ACCEPTANCE 8 PASS (soft): dp over 10^4/10^5/10^6-leaf cotrees in \
                 {:?}/{:?}/{:?}, within 1.5x-linear growth per decade",
                times[0], times[1], times[2]
            );
            return;
        }
        last_times = times;
        std::thread::sleep(Duration::from_millis(750));
    }
    panic!("superlinear growth across {attempts} attempts: {last_times:?}");
}
