//! Exact counts of the binary occurrence matrices of three ecology datasets.
//!
//! cargo run --release --example count_margins

use std::time::Instant;

use tablecount::{count, MarginSpec, Mode};

fn main() {
    let datasets: [(&str, Vec<u32>, Vec<u32>); 3] = [
        (
            "finches",
            vec![14, 13, 14, 10, 12, 2, 10, 1, 10, 11, 6, 2, 17],
            vec![4, 4, 11, 10, 10, 8, 9, 10, 8, 9, 3, 10, 4, 7, 9, 3, 3],
        ),
        (
            "gulf birds",
            vec![14, 14, 14, 12, 5, 13, 9, 11, 11, 11, 11, 11, 7, 8, 8, 7, 2, 4, 2, 3, 2, 2, 2],
            vec![21, 19, 18, 19, 14, 15, 12, 15, 12, 12, 12, 5, 4, 4, 1],
        ),
        (
            "california birds",
            vec![1, 4, 3, 2, 1, 1, 1, 5, 1, 3, 1, 4, 4, 5, 1, 2, 1, 5, 4, 5, 3, 7, 1, 3, 2, 4, 1, 3, 2, 4, 6],
            vec![2, 14, 24, 8, 2, 5, 20, 15],
        ),
    ];
    for (name, rows, cols) in datasets {
        let spec = MarginSpec::new(rows, cols);
        let start = Instant::now();
        let (total, table) = count(&spec, Mode::Binary);
        let stats = table.stats();
        println!(
            "{name:>16} {}x{}: {total} ({} states, {} terms, {} pruned, {:.1} ms)",
            spec.rows(),
            spec.cols(),
            stats.nodes,
            stats.terms,
            stats.pruned,
            start.elapsed().as_secs_f64() * 1e3,
        );
    }
}
