mod common;

use std::collections::BTreeSet;

use common::{graph_and_bundle, graphs, grassmannian_and_bundle};
use flagpos::bundles::{
    endpoint_pairing, line_degree, rank, restrict, restriction_table, restriction_table_par,
    BundleExpr,
};
use flagpos::flag::GkmGraph;
use flagpos::rootsys::Weight;
use itertools::Itertools;
use proptest::prelude::*;

fn graph_weight_pair_curve() -> impl Strategy<Value = (usize, Weight, Weight, usize)> {
    (0..graphs().len()).prop_flat_map(|i| {
        let g = &graphs()[i];
        (
            Just(i),
            common::character(g),
            common::character(g),
            0..g.num_curves(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn splitting_rank_matches_bundle_rank((i, e) in graph_and_bundle()) {
        let g = &graphs()[i];
        let r = rank(&e, g).unwrap();
        for st in restriction_table(&e, g).unwrap().entries() {
            prop_assert_eq!(st.rank(), r);
            prop_assert!(st.entries().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn functorial_identities((i, e) in graph_and_bundle()) {
        let g = &graphs()[i];
        let base = restriction_table(&e, g).unwrap();
        let dd = restriction_table(&e.clone().dual().dual(), g).unwrap();
        let det = restriction_table(&e.clone().det(), g).unwrap();
        let twist = restriction_table(&e.clone().tensor(BundleExpr::trivial(1)), g).unwrap();
        let sym1 = restriction_table(&e.clone().sym(1), g).unwrap();
        let wedge1 = restriction_table(&e.clone().wedge(1), g).unwrap();
        prop_assert_eq!(&dd, &base);
        prop_assert_eq!(&twist, &base);
        prop_assert_eq!(&sym1, &base);
        prop_assert_eq!(&wedge1, &base);
        for (a, d) in base.entries().iter().zip(det.entries()) {
            prop_assert_eq!(d.entries(), &[a.degree()]);
        }
    }

    #[test]
    fn dual_negates((i, e) in graph_and_bundle()) {
        let g = &graphs()[i];
        let base = restriction_table(&e, g).unwrap();
        let dual = restriction_table(&e.dual(), g).unwrap();
        for (a, b) in base.entries().iter().zip(dual.entries()) {
            let mut neg: Vec<i64> = a.entries().iter().map(|x| -x).collect();
            neg.reverse();
            prop_assert_eq!(b.entries(), &neg[..]);
        }
    }

    #[test]
    fn endpoint_swap_and_additivity((i, lambda, mu, c) in graph_weight_pair_curve()) {
        let g = &graphs()[i];
        let curve = &g.curves()[c];
        let lo = endpoint_pairing(g, &lambda, curve, 0).unwrap();
        let hi = endpoint_pairing(g, &lambda, curve, 1).unwrap();
        prop_assert_eq!(lo, -hi);
        prop_assert_eq!(lo.abs(), hi.abs());
        let sum = &lambda + &mu;
        let d_sum = line_degree(g, &sum, curve).unwrap();
        let (dl, dm) = (line_degree(g, &lambda, curve).unwrap(), line_degree(g, &mu, curve).unwrap());
        prop_assert_eq!(d_sum, dl + dm);
        prop_assert!(d_sum.abs() <= dl.abs() + dm.abs());
    }

    #[test]
    fn dominant_characters_have_nonnegative_degrees((i, lambda, _, c) in graph_weight_pair_curve()) {
        let g = &graphs()[i];
        let dom = Weight::new(lambda.coeffs().iter().map(|x| x.abs()).collect());
        prop_assert!(line_degree(g, &dom, &g.curves()[c]).unwrap() >= 0);
    }

    #[test]
    fn tautological_degrees_cancel((i, e) in grassmannian_and_bundle()) {
        let g = &graphs()[i];
        let with_s = restriction_table(&e.clone().tensor(BundleExpr::TautSub).det(), g).unwrap();
        let with_q = restriction_table(&e.clone().tensor(BundleExpr::TautQuot).det(), g).unwrap();
        let with_triv = restriction_table(&e.tensor(BundleExpr::trivial(1)).det(), g).unwrap();
        let (d, n) = g.grassmannian_data().unwrap();
        // det(E ⊗ S) + det(E ⊗ Q) = n · det(E) since S ⊕ Q has the degrees of O^n
        for ((s, q), t) in with_s.entries().iter().zip(with_q.entries()).zip(with_triv.entries()) {
            prop_assert_eq!(s.degree() + q.degree(), n as i64 * t.degree());
        }
        prop_assert!(d < n);
    }

    #[test]
    fn parallel_table_is_identical((i, e) in graph_and_bundle()) {
        let g = &graphs()[i];
        prop_assert_eq!(restriction_table(&e, g).unwrap(), restriction_table_par(&e, g).unwrap());
    }

    #[test]
    fn dsl_display_round_trips((_, e) in graph_and_bundle()) {
        let text = e.to_string();
        prop_assert_eq!(text.parse::<BundleExpr>().unwrap(), e);
    }
}

#[test]
fn exact_sequence_degree_identity_on_grassmannians() {
    for n in 2..=7 {
        for d in 1..n {
            let g = GkmGraph::grassmannian(d, n).unwrap();
            let omega = Weight::fundamental(n - 1, d - 1);
            for c in g.curves() {
                let s = restrict(&BundleExpr::TautSub, &g, c).unwrap();
                let q = restrict(&BundleExpr::TautQuot, &g, c).unwrap();
                assert_eq!(s.degree() + q.degree(), 0);
                // det Q = L(ω_d)
                assert_eq!(q.degree(), line_degree(&g, &omega, c).unwrap());
                assert!(s.entries().iter().all(|&a| a <= 0));
            }
        }
    }
}

/// Integer polynomial product.
fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(acc: &mut Vec<i64>, p: &[i64]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn degree(p: &[i64]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

fn low_order(p: &[i64]) -> Option<usize> {
    p.iter().position(|&c| c != 0)
}

/// Number of intersections, with multiplicity, of the invariant curve of
/// Gr(2,4) joining `span(e_c, e_a)` and `span(e_c, e_b)` with a generic
/// hypersurface of degree `k` in Plücker space.
fn plucker_intersections(c: usize, a: usize, b: usize, k: usize, seed: u64) -> usize {
    // span(e_c, s·e_a + t·e_b). Each Plücker coordinate p_ij = u_i v_j − u_j v_i
    // is a binary form in (s, t); store it in both affine charts.
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .collect();
    let coords: Vec<[i64; 2]> = pairs
        .iter()
        .map(|&(i, j)| {
            let u = |m: usize| i64::from(m == c);
            let v = |m: usize| [i64::from(m == a), i64::from(m == b)];
            let (vi, vj) = (v(i), v(j));
            [u(i) * vj[0] - u(j) * vi[0], u(i) * vj[1] - u(j) * vi[1]]
        })
        .collect();
    // chart t = 1: polynomial in s; chart s = 1: polynomial in t
    let chart_s: Vec<Vec<i64>> = coords.iter().map(|p| vec![p[1], p[0]]).collect();
    let chart_t: Vec<Vec<i64>> = coords.iter().map(|p| vec![p[0], p[1]]).collect();
    let mut state = seed;
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % 19) as i64 - 9
    };
    let mut fs = vec![0i64];
    let mut ft = vec![0i64];
    for mono in (0..6).combinations_with_replacement(k) {
        let coeff = next();
        let mut ps = vec![coeff];
        let mut pt = vec![coeff];
        for &m in &mono {
            ps = mul(&ps, &chart_s[m]);
            pt = mul(&pt, &chart_t[m]);
        }
        add_into(&mut fs, &ps);
        add_into(&mut ft, &pt);
    }
    let finite = degree(&fs).expect("generic hypersurface contains the curve");
    let at_infinity = low_order(&ft).expect("nonzero");
    finite + at_infinity
}

#[test]
fn gr24_line_degrees_match_plucker_veronese_oracle() {
    let g = GkmGraph::grassmannian(2, 4).unwrap();
    let labels: Vec<BTreeSet<usize>> = g
        .fixed_points()
        .iter()
        .map(|x| {
            let cf = x.orbit_weight().coeffs();
            let mut v = [0i64; 4];
            for i in (0..3).rev() {
                v[i] = cf[i] + v[i + 1];
            }
            let top = *v.iter().max().unwrap();
            (0..4).filter(|&i| v[i] == top).collect()
        })
        .collect();
    for k in 1..=3usize {
        let lambda = Weight::new(vec![0, k as i64, 0]);
        for (idx, curve) in g.curves().iter().enumerate() {
            let [x, y] = curve.endpoints();
            let common: Vec<usize> = labels[x].intersection(&labels[y]).copied().collect();
            let a = *labels[x].difference(&labels[y]).next().unwrap();
            let b = *labels[y].difference(&labels[x]).next().unwrap();
            let oracle = plucker_intersections(common[0], a, b, k, 7 + idx as u64);
            assert_eq!(line_degree(&g, &lambda, curve).unwrap(), oracle as i64);
        }
    }
}

#[test]
fn tangent_splitting_cross_check_on_projective_spaces() {
    for n in 2..=7 {
        let g = GkmGraph::grassmannian(1, n).unwrap();
        let mut expect = vec![1i64; n - 1];
        expect[0] = 2;
        for c in g.curves() {
            assert_eq!(
                restrict(&BundleExpr::Tangent, &g, c).unwrap().entries(),
                &expect[..]
            );
            let manual = BundleExpr::TautSub.dual().tensor(BundleExpr::TautQuot);
            assert_eq!(restrict(&manual, &g, c).unwrap().entries(), &expect[..]);
        }
    }
}
