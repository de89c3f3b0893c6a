//! Cartan data, positive roots and Weyl group sizes for a few types.
//!
//! cargo run --example root_systems [TYPE...]

use flagpos::rootsys::{CartanType, RootSystem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let types = if args.is_empty() {
        ["A3", "B3", "C3", "D4", "G2", "F4", "E6", "E8"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for name in types {
        let ct: CartanType = match name.parse() {
            Ok(ct) => ct,
            Err(e) => {
                eprintln!("{name}: {e}");
                std::process::exit(2);
            }
        };
        let rs = RootSystem::new(ct);
        println!(
            "{ct}: |Phi+| = {}, |W| = {}, highest root {:?}",
            rs.num_positive_roots(),
            rs.weyl_order(),
            rs.highest_root().coeffs()
        );
        if rs.rank() <= 4 {
            for row in rs.cartan_matrix() {
                println!("    {row:?}");
            }
        }
        let w0 = rs.longest_element();
        println!("    w0 has length {} and word {:?}", w0.length(), w0.word());
    }
}
