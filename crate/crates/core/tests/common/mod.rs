#![allow(dead_code)]

use std::sync::OnceLock;

use flagpos::bundles::{rank, BundleExpr};
use flagpos::flag::{GkmGraph, Parabolic};
use flagpos::rootsys::{RootSystem, Weight};
use proptest::prelude::*;

/// Flag varieties of rank ≤ 4 used by the randomized suites:
/// (Cartan type, omitted nodes in Bourbaki numbering; empty = Borel).
pub const CONTEXTS: &[(&str, &[usize])] = &[
    ("A1", &[1]),
    ("A2", &[]),
    ("A2", &[1]),
    ("A2", &[2]),
    ("A3", &[]),
    ("A3", &[2]),
    ("A3", &[1, 3]),
    ("A3", &[3]),
    ("A4", &[2]),
    ("A4", &[3]),
    ("A4", &[1, 4]),
    ("A4", &[]),
    ("B2", &[]),
    ("B2", &[1]),
    ("C2", &[2]),
    ("B3", &[1]),
    ("B3", &[]),
    ("C3", &[1, 3]),
    ("B4", &[4]),
    ("C4", &[2]),
    ("D4", &[2]),
    ("D4", &[1, 3, 4]),
    ("D4", &[]),
    ("G2", &[]),
    ("G2", &[2]),
    ("F4", &[1]),
    ("F4", &[4]),
];

pub fn build(ty: &str, omitted: &[usize]) -> GkmGraph {
    let rs = RootSystem::new(ty.parse().unwrap());
    let p = if omitted.is_empty() {
        Parabolic::borel(rs.rank())
    } else {
        Parabolic::omitting(rs.rank(), omitted).unwrap()
    };
    GkmGraph::new(&rs, &p).unwrap()
}

pub fn graphs() -> &'static [GkmGraph] {
    static GRAPHS: OnceLock<Vec<GkmGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| CONTEXTS.iter().map(|(t, o)| build(t, o)).collect())
}

pub fn grassmannians() -> Vec<usize> {
    graphs()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.grassmannian_data().is_some())
        .map(|(i, _)| i)
        .collect()
}

/// A weight that is a character of the graph's parabolic.
pub fn character(g: &GkmGraph) -> impl Strategy<Value = Weight> {
    let p = g.parabolic().clone();
    proptest::collection::vec(-3i64..=4, g.root_system().rank()).prop_map(move |mut v| {
        for (i, c) in v.iter_mut().enumerate() {
            if p.in_levi(i) {
                *c = 0;
            }
        }
        Weight::new(v)
    })
}

pub fn dominant_character(g: &GkmGraph) -> impl Strategy<Value = Weight> {
    character(g).prop_map(|w| Weight::new(w.coeffs().iter().map(|c| c.abs()).collect()))
}

const MAX_TEST_RANK: usize = 40;

/// Clamps wedge powers and drops nodes whose rank gets too large, so the
/// result is a valid bundle on `g`.
pub fn sanitize(e: BundleExpr, g: &GkmGraph) -> BundleExpr {
    use BundleExpr::*;
    let fixed = match e {
        Dual(a) => Dual(Box::new(sanitize(*a, g))),
        Det(a) => Det(Box::new(sanitize(*a, g))),
        Sym(k, a) => Sym(k, Box::new(sanitize(*a, g))),
        Wedge(k, a) => {
            let a = sanitize(*a, g);
            let r = rank(&a, g).unwrap();
            Wedge(k.min(r), Box::new(a))
        }
        Sum(a, b) => Sum(Box::new(sanitize(*a, g)), Box::new(sanitize(*b, g))),
        Tensor(a, b) => Tensor(Box::new(sanitize(*a, g)), Box::new(sanitize(*b, g))),
        leaf => leaf,
    };
    match rank(&fixed, g) {
        Ok(r) if r <= MAX_TEST_RANK => fixed,
        _ => match fixed {
            Dual(a) | Det(a) | Sym(_, a) | Wedge(_, a) | Sum(a, _) | Tensor(a, _) => *a,
            leaf => leaf,
        },
    }
}

pub fn bundle(g: &GkmGraph) -> BoxedStrategy<BundleExpr> {
    let mut leaves: Vec<BoxedStrategy<BundleExpr>> = vec![
        character(g).prop_map(BundleExpr::Line).boxed(),
        (1usize..=3).prop_map(BundleExpr::Trivial).boxed(),
    ];
    if g.grassmannian_data().is_some() {
        leaves.push(
            prop_oneof![
                Just(BundleExpr::TautSub),
                Just(BundleExpr::TautQuot),
                Just(BundleExpr::Tangent)
            ]
            .boxed(),
        );
    }
    let leaf = proptest::strategy::Union::new(leaves);
    let g2 = g.clone();
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(BundleExpr::dual),
            inner.clone().prop_map(BundleExpr::det),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.sum(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.tensor(b)),
            (0usize..=2, inner.clone()).prop_map(|(k, a)| a.sym(k)),
            (0usize..=3, inner).prop_map(|(k, a)| a.wedge(k)),
        ]
    })
    .prop_map(move |e| sanitize(e, &g2))
    .boxed()
}

/// (graph index, bundle) pairs over the whole context list.
pub fn graph_and_bundle() -> impl Strategy<Value = (usize, BundleExpr)> {
    (0..graphs().len()).prop_flat_map(|i| (Just(i), bundle(&graphs()[i])))
}

pub fn grassmannian_and_bundle() -> impl Strategy<Value = (usize, BundleExpr)> {
    proptest::sample::select(grassmannians()).prop_flat_map(|i| (Just(i), bundle(&graphs()[i])))
}

/// Nef bundles: built from nef pieces with operations preserving nefness.
pub fn nef_bundle(g: &GkmGraph) -> BoxedStrategy<BundleExpr> {
    let mut leaves: Vec<BoxedStrategy<BundleExpr>> = vec![
        dominant_character(g).prop_map(BundleExpr::Line).boxed(),
        (1usize..=3).prop_map(BundleExpr::Trivial).boxed(),
    ];
    if g.grassmannian_data().is_some() {
        leaves.push(
            prop_oneof![
                Just(BundleExpr::TautSub.dual()),
                Just(BundleExpr::TautQuot),
                Just(BundleExpr::Tangent)
            ]
            .boxed(),
        );
    }
    let g2 = g.clone();
    proptest::strategy::Union::new(leaves)
        .prop_recursive(2, 8, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(BundleExpr::det),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.sum(b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.tensor(b)),
                (0usize..=2, inner.clone()).prop_map(|(k, a)| a.sym(k)),
                (0usize..=2, inner).prop_map(|(k, a)| a.wedge(k)),
            ]
        })
        .prop_map(move |e| sanitize(e, &g2))
        .boxed()
}

pub fn graph_and_nef_bundle() -> impl Strategy<Value = (usize, BundleExpr)> {
    (0..graphs().len()).prop_flat_map(|i| (Just(i), nef_bundle(&graphs()[i])))
}
