mod common;

use std::collections::HashMap;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{oracle_jones, terms_of, Oracle};
use solidtorus::crossing::{classify_crossings, CrossingStatus};
use solidtorus::diagram::{
    canonical_key, cut_path, cut_path_from_walk, faces, mirror, orient, AnnularDiagram, Corner, Crossing, Marker,
};
use solidtorus::generate::{generate_random, GeneratorConfig, PuncturePolicy};
use solidtorus::moves::{r1_insert, remove_dotted_reducible, KinkSide};
use solidtorus::skein::{bracket, bracket_with, evaluate_recursive, jones, BracketOptions, StateCounter};
use solidtorus::SkeinPolynomial;

fn policy() -> impl Strategy<Value = PuncturePolicy> {
    prop_oneof![
        Just(PuncturePolicy::Outer),
        Just(PuncturePolicy::UniformRandomFace),
        Just(PuncturePolicy::AdversarialInner),
    ]
}

fn diagram(max_n: usize) -> impl Strategy<Value = AnnularDiagram> {
    (any::<u64>(), any::<bool>(), policy(), 1..=max_n).prop_map(|(seed, alternating, policy, n)| {
        let cfg = GeneratorConfig { min_crossings: n, max_crossings: n, alternating, policy, seed };
        generate_random(cfg).next().unwrap()
    })
}

/// Shuffles crossings, renames edges and rotates each crossing by 0 or 2 slots.
fn relabel(d: &AnnularDiagram, seed: u64) -> (AnnularDiagram, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = d.crossing_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut labels = d.edge_labels();
    let old = labels.clone();
    labels.iter_mut().for_each(|l| *l = *l * 7 + 100);
    labels.shuffle(&mut rng);
    let rename: HashMap<u32, u32> = old.into_iter().zip(labels).collect();
    let rot: Vec<u8> = (0..n).map(|_| if rng.gen() { 2 } else { 0 }).collect();
    let mut crossings = vec![Crossing::new([0; 4]); n];
    for (c, x) in d.crossings().iter().enumerate() {
        let mut edges = [0; 4];
        for s in 0..4 {
            edges[(s + rot[c] as usize) % 4] = rename[&x.edges[s]];
        }
        crossings[perm[c]] = Crossing::new(edges);
    }
    let map = |m: Marker| match m {
        Marker::Corner(k) => Marker::Corner(Corner::new(perm[k.crossing], (k.slot + rot[k.crossing]) % 4)),
        Marker::Unbounded => Marker::Unbounded,
    };
    let out = AnnularDiagram::new(crossings, d.loops().to_vec(), map(d.puncture()), map(d.outer())).unwrap();
    (out, perm)
}

/// A random dual walk from the puncture face to the outer face.
fn random_walk(d: &AnnularDiagram, seed: u64) -> Vec<u32> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fm = faces(d);
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); fm.len()];
    for (c, x) in d.crossings().iter().enumerate() {
        for s in 0..4u8 {
            let here = fm.face_of(Corner::new(c, s));
            let there = fm.face_of(Corner::new(c, (s + 3) % 4));
            adj[here].push((there, x.edges[s as usize]));
        }
    }
    let goal = fm.outer_face().unwrap();
    let mut cur = fm.puncture_face().unwrap();
    let mut walk = Vec::new();
    let min_steps = rng.gen_range(0..12);
    while walk.len() < min_steps || cur != goal {
        let &(next, e) = adj[cur].choose(&mut rng).unwrap();
        walk.push(e);
        cur = next;
    }
    walk
}

fn components(d: &AnnularDiagram) -> usize {
    orient(d).components.len() + d.loops().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_text_round_trip(terms in prop::collection::vec((-30i32..30, 0u32..4, -50i64..50), 0..12)) {
        let p = SkeinPolynomial::from_terms(terms).unwrap();
        let back: SkeinPolynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn diagram_text_round_trip(d in diagram(9)) {
        let back = solidtorus::parse_diagram(&d.to_string()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn state_sum_matches_oracle(d in diagram(8)) {
        prop_assert_eq!(terms_of(&bracket(&d).unwrap()), Oracle::new(&d).bracket());
        prop_assert_eq!(terms_of(&jones(&d).unwrap()), oracle_jones(&d));
    }

    #[test]
    fn state_sum_matches_recursion(d in diagram(9)) {
        prop_assert_eq!(bracket(&d).unwrap(), evaluate_recursive(&d).unwrap());
    }

    #[test]
    fn mirror_inverts_a(d in diagram(9)) {
        prop_assert_eq!(bracket(&mirror(&d)).unwrap(), bracket(&d).unwrap().invert_a());
        prop_assert_eq!(jones(&mirror(&d)).unwrap(), jones(&d).unwrap().invert_a());
    }

    #[test]
    fn cut_path_choice_is_irrelevant(d in diagram(8), seed in any::<u64>()) {
        let walk = random_walk(&d, seed);
        let a = StateCounter::new(&d, &cut_path(&d).unwrap());
        let b = StateCounter::new(&d, &cut_path_from_walk(&d, &walk).unwrap());
        for mask in 0..1u64 << d.crossing_count() {
            prop_assert_eq!(a.counts(mask), b.counts(mask));
        }
    }

    #[test]
    fn jones_exponent_residue(d in diagram(9)) {
        let residue = 2 * (components(&d) as i32 - 1);
        for (a, _, _) in jones(&d).unwrap().terms() {
            prop_assert_eq!((a - residue).rem_euclid(4), 0);
        }
    }

    #[test]
    fn thread_count_does_not_matter(d in diagram(12), threads in 2usize..6) {
        let one = BracketOptions { threads: Some(1), ..Default::default() };
        let many = BracketOptions { threads: Some(threads), ..Default::default() };
        prop_assert_eq!(bracket_with::<i64>(&d, &one).unwrap(), bracket_with::<i64>(&d, &many).unwrap());
    }

    #[test]
    fn relabeling_keeps_invariants(d in diagram(9), seed in any::<u64>()) {
        let (e, perm) = relabel(&d, seed);
        prop_assert_eq!(canonical_key(&e), canonical_key(&d));
        prop_assert_eq!(bracket(&e).unwrap(), bracket(&d).unwrap());
        let before = classify_crossings(&d);
        let after = classify_crossings(&e);
        for (c, r) in before.iter().enumerate() {
            prop_assert_eq!(r.status, after[perm[c]].status);
        }
    }

    #[test]
    fn mirror_keeps_classification(d in diagram(9)) {
        let status = |x: &AnnularDiagram| classify_crossings(x).iter().map(|r| r.status).collect::<Vec<_>>();
        prop_assert_eq!(status(&mirror(&d)), status(&d));
    }

    #[test]
    fn kink_round_trip(d in diagram(7), pick in any::<prop::sample::Index>(), left in any::<bool>(), positive in any::<bool>()) {
        let labels = d.edge_labels();
        let edge = labels[pick.index(labels.len())];
        let side = if left { KinkSide::Left } else { KinkSide::Right };
        let r = r1_insert(&d, edge, side, if positive { 1 } else { -1 }).unwrap();
        prop_assert_eq!(r.diagram.crossing_count(), d.crossing_count() + 1);
        prop_assert_eq!(jones(&r.diagram).unwrap(), jones(&d).unwrap());
        let kink = d.crossing_count();
        let status = classify_crossings(&r.diagram)[kink].status;
        prop_assert_eq!(status, CrossingStatus::DottedReducible);
        let back = remove_dotted_reducible(&r.diagram, kink).unwrap();
        prop_assert_eq!(canonical_key(&back.diagram), canonical_key(&d));
        prop_assert_eq!(bracket(&back.diagram).unwrap(), bracket(&d).unwrap());
    }
}
