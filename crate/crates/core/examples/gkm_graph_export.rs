//! Builds the moment graph of G/P and prints it as JSON or DOT.
//!
//! cargo run --example gkm_graph_export -- A3 2 dot

use flagpos::flag::{GkmGraph, Parabolic};
use flagpos::rootsys::RootSystem;

fn main() {
    let mut args = std::env::args().skip(1);
    let ty = args.next().unwrap_or_else(|| "A2".into());
    let omit: Vec<usize> = args
        .next()
        .filter(|s| s != "-")
        .map(|s| {
            s.split(',')
                .map(|n| n.parse().expect("node number"))
                .collect()
        })
        .unwrap_or_default();
    let dot = args.next().as_deref() == Some("dot");

    let rs = RootSystem::new(ty.parse().expect("cartan type"));
    let p = if omit.is_empty() {
        Parabolic::borel(rs.rank())
    } else {
        Parabolic::omitting(rs.rank(), &omit).expect("valid omitted nodes")
    };
    let g = GkmGraph::new(&rs, &p).expect("enumeration");
    eprintln!(
        "{ty} omit {omit:?}: {} fixed points, {} curves, dimension {}, connected: {}",
        g.num_fixed_points(),
        g.num_curves(),
        g.dimension(),
        g.is_connected()
    );
    if dot {
        print!("{}", g.to_dot());
    } else {
        println!("{}", g.to_json());
    }
}
