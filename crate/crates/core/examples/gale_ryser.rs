//! Feasibility tests, conjugates and the composition generators that label
//! the children of a recursion state.
//!
//! cargo run --example gale_ryser

use tablecount::enumerate::{bounded_compositions, shifted_compositions};
use tablecount::{conjugate, count, gale_ryser_feasible, CountsVector, MarginSpec, Mode};

fn main() {
    for (rows, cols) in [
        (vec![2, 2, 1, 1], vec![3, 2, 1]),
        (vec![3, 3], vec![2, 2, 2]),
        (vec![3, 1], vec![2, 2]),
        (vec![4], vec![1, 1, 1]),
    ] {
        let spec = MarginSpec::new(rows, cols);
        let q = spec.counts_vector();
        let feasible = spec.is_balanced() && gale_ryser_feasible(spec.row_sums(), &q);
        println!(
            "p = {:?}, q = {:?}: conjugate of q {:?}, feasible {feasible}, N = {}",
            spec.row_sums(),
            spec.col_sums(),
            conjugate(spec.col_sums()),
            count(&spec, Mode::Binary).0,
        );
    }

    // three columns at value 1, one at value 2, one at value 3; place a row of sum 2
    let r = CountsVector::from_counts(vec![3, 1, 1]);
    println!("\nstate r = {:?} (weight {}), row sum 2", r.as_slice(), r.weight());
    println!("binary children:");
    for s in bounded_compositions(&r, 2) {
        println!("  s = {:?} -> {:?}", s.parts(), r.reduce(&s).unwrap().as_slice());
    }
    println!("natural children:");
    for s in shifted_compositions(&r, 2) {
        println!("  s = {:?} -> {:?}", s.parts(), r.reduce(&s).unwrap().as_slice());
    }
}
