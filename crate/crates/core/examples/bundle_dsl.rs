//! Parses bundle expressions and prints their splitting on each curve.
//!
//! cargo run --example bundle_dsl -- 2 4 "sym(2,Q)+dual(S)"

use flagpos::bundles::{rank, restriction_table, BundleExpr};
use flagpos::flag::GkmGraph;

fn main() {
    let mut args = std::env::args().skip(1);
    let d: usize = args.next().map_or(2, |s| s.parse().expect("d"));
    let n: usize = args.next().map_or(4, |s| s.parse().expect("n"));
    let text = args
        .next()
        .unwrap_or_else(|| "wedge(2,Q)*det(S) + T".into());

    let e: BundleExpr = match text.parse() {
        Ok(e) => e,
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(2);
        }
    };
    let g = GkmGraph::grassmannian(d, n).expect("0 < d < n");
    println!("{text}  parsed as  {e}");
    println!(
        "rank {} on Gr({d},{n})",
        rank(&e, &g).expect("valid bundle")
    );
    let table = restriction_table(&e, &g).expect("valid bundle");
    for (c, st) in g.curves().iter().zip(table.entries()) {
        let [a, b] = c.endpoints();
        println!("  curve {:>3} ({a} -- {b}): {:?}", c.id(), st.entries());
    }
    println!("digest {}", table.digest());
}
