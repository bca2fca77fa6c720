//! Cross-checks the recursion against brute-force enumeration on random
//! small margins.
//!
//! cargo run --release --example oracle_check

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tablecount::oracle::{brute_count, brute_enumerate};
use tablecount::{count, MarginSpec, Mode};

fn main() {
    let spec = MarginSpec::new(vec![2, 2, 1, 1], vec![3, 2, 1]);
    let list = brute_enumerate(&spec, Mode::Binary).unwrap();
    println!("the {} binary matrices with p = (2,2,1,1), q = (3,2,1):", list.len());
    for m in list.matrices() {
        println!("  {m:?}");
    }

    let mut rng = StdRng::seed_from_u64(1);
    let mut checked = 0;
    for _ in 0..500 {
        let m = rng.random_range(1..=4);
        let n = rng.random_range(1..=4);
        let rows = (0..m).map(|_| rng.random_range(0..=3)).collect();
        let cols = (0..n).map(|_| rng.random_range(0..=3)).collect();
        let spec = MarginSpec::new(rows, cols);
        for mode in [Mode::Binary, Mode::Natural] {
            let dp = count(&spec, mode).0;
            let brute = brute_count(&spec, mode).unwrap();
            assert_eq!(dp, brute, "{spec:?} {mode:?}");
            checked += 1;
        }
    }
    println!("\n{checked} random cases agree");
}
