//! Enumerates full flag varieties and minuscule quotients, with timings.

use std::time::Instant;

use flagpos::flag::{coset_count, invariant_curves, Parabolic, DEFAULT_MAX_COSETS};
use flagpos::rootsys::RootSystem;

fn main() {
    let cases: &[(&str, &[usize])] = &[
        ("A3", &[]),
        ("A4", &[]),
        ("A5", &[]),
        ("B3", &[]),
        ("D4", &[]),
        ("G2", &[]),
        ("E6", &[1]),
        ("E7", &[7]),
        ("F4", &[1]),
    ];
    for (ty, omit) in cases {
        let rs = RootSystem::new(ty.parse().unwrap());
        let p = if omit.is_empty() {
            Parabolic::borel(rs.rank())
        } else {
            Parabolic::omitting(rs.rank(), omit).unwrap()
        };
        let start = Instant::now();
        let g = invariant_curves(&rs, &p, DEFAULT_MAX_COSETS).unwrap();
        let elapsed = start.elapsed();
        assert_eq!(g.num_fixed_points() as u128, coset_count(&rs, &p));
        println!(
            "{ty:>3} omit {:<6} {:>6} points {:>7} curves  dim {:>2}  {:.1} ms",
            format!("{omit:?}"),
            g.num_fixed_points(),
            g.num_curves(),
            g.dimension(),
            elapsed.as_secs_f64() * 1e3
        );
    }
}
