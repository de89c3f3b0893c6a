//! Nef/ample verdicts for the standard bundles on Gr(d,n).

use flagpos::bundles::BundleExpr;
use flagpos::flag::GkmGraph;
use flagpos::positivity::positivity;
use flagpos::rootsys::Weight;

fn main() {
    let bundles = [
        ("Q", BundleExpr::TautQuot),
        ("dual(S)", BundleExpr::TautSub.dual()),
        ("T", BundleExpr::Tangent),
        (
            "Q*det(Q)",
            BundleExpr::TautQuot.tensor(BundleExpr::TautQuot.det()),
        ),
        ("S", BundleExpr::TautSub),
    ];
    print!("{:<8}", "Gr(d,n)");
    for (name, _) in &bundles {
        print!("{name:>15}");
    }
    println!();
    for n in 2..=6 {
        for d in 1..n {
            let g = GkmGraph::grassmannian(d, n).unwrap();
            print!("{:<8}", format!("({d},{n})"));
            for (_, e) in &bundles {
                print!("{:>15}", positivity(e, &g).unwrap().status.as_str());
            }
            println!();
        }
    }

    // line bundles: O(k) on Gr(2,5) is ample iff k > 0
    let g = GkmGraph::grassmannian(2, 5).unwrap();
    for k in -1..=2 {
        let v = positivity(&BundleExpr::line(Weight::new(vec![0, k, 0, 0])), &g).unwrap();
        println!(
            "O({k}) on Gr(2,5): {} (min degree {})",
            v.status.as_str(),
            v.global_min
        );
    }
}
