//! The Ehrhart polynomial of the Birkhoff polytope `B_n`.
//!
//! cargo run --release --example ehrhart_birkhoff -- 5

use tablecount::ehrhart::{degree, direct_values, ehrhart_polynomial};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(4);
    assert!(n >= 2, "n must be at least 2");

    let (poly, nodes) = ehrhart_polynomial(n);
    println!(
        "H_{n}: degree {}, fitted from H_{n}(0..={}) plus {} zeros and reciprocity",
        degree(n),
        direct_values(n),
        n - 1
    );
    for (x, v) in nodes.nodes().zip(nodes.values()) {
        println!("  H_{n}({x:>3}) = {v}");
    }
    println!("\nH_{n}(r) = {poly}");

    let k = direct_values(n) as i64;
    println!("\npredicted beyond the fitted range:");
    for r in k + 1..=k + 3 {
        println!("  H_{n}({r}) = {}", poly.evaluate(r));
    }
}
