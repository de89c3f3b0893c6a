//! Seshadri constants at torus-fixed points.

use flagpos::bundles::BundleExpr;
use flagpos::flag::{GkmGraph, Parabolic};
use flagpos::positivity::{seshadri, seshadri_all};
use flagpos::rootsys::{RootSystem, Weight};
use flagpos::Error;

fn main() {
    for n in 2..=5 {
        let g = GkmGraph::grassmannian(n - 1, n).unwrap();
        let eps: Vec<String> = seshadri_all(&BundleExpr::TautQuot, &g)
            .unwrap()
            .iter()
            .map(|r| r.value.to_string())
            .collect();
        println!("Q on Gr({},{n}): {}", n - 1, eps.join(" "));
    }

    let p1 = GkmGraph::grassmannian(1, 2).unwrap();
    for k in [0, 1, 5] {
        let r = seshadri(&BundleExpr::line(Weight::new(vec![k])), &p1, 0).unwrap();
        println!("O({k}) on P1 at point 0: {}", r.value);
    }
    match seshadri(&BundleExpr::line(Weight::new(vec![-1])), &p1, 0) {
        Err(Error::NotNef { curve, entry }) => {
            println!("O(-1) on P1: not nef (curve {curve}, degree {entry})")
        }
        other => println!("O(-1) on P1: {other:?}"),
    }

    // rho on the full flag of B2: every curve through a point has degree >= 1
    let rs = RootSystem::new("B2".parse().unwrap());
    let g = GkmGraph::new(&rs, &Parabolic::borel(2)).unwrap();
    for r in seshadri_all(&BundleExpr::line(Weight::rho(2)), &g).unwrap() {
        let curves: Vec<usize> = r.attaining.iter().map(|w| w.curve).collect();
        println!(
            "L(rho) on B2/B at {}: {} on curves {curves:?}",
            r.point, r.value
        );
    }
}
