//! Walks the memo table: states per row, and the child decomposition of
//! the root.
//!
//! cargo run --example memo_table

use tablecount::enumerate::coefficient;
use tablecount::{count, MarginSpec, Mode};

fn main() {
    let spec = MarginSpec::new(vec![2, 2, 1, 1], vec![3, 2, 1]);
    for mode in [Mode::Binary, Mode::Natural] {
        let (total, table) = count(&spec, mode);
        println!("{mode:?}: {total} matrices, rows consumed in order {:?}", table.sorted_rows());
        let mut entries: Vec<_> = table.entries().collect();
        entries.sort();
        for (j, r, v) in entries {
            println!("  j = {j}, r = {:?}, remaining mass {}: {v}", r.as_slice(), table.remaining_mass(j));
        }
        let root = table.root();
        println!("  root {:?} splits as", root.as_slice());
        for s in table.compositions(0, root) {
            let child = root.reduce(&s).unwrap();
            let c = coefficient(root, &s, mode, table.binomials()).unwrap();
            let sub = table.get(1, &child).unwrap();
            println!("    s = {:?}: {c} x {sub}", s.parts());
        }
        println!();
    }
}
