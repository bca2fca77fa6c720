//! Reading run-length margin files, and the 100 x 100 instance.
//!
//! cargo run --release --example margin_file            # parse and summarize
//! cargo run --release --example margin_file -- count   # also count (about a minute)

use tablecount::cli::{parse_margin_file, RunLength};
use tablecount::{count, Mode};

const BIG: &str = "\
# 100 x 100, small margins
rows: 70 30 20 10 5^6 4^10 3^20 2^60
cols: 4^80 3^20
";

fn main() {
    let spec = parse_margin_file(BIG).expect("valid margin file");
    println!("{} rows: {}", spec.rows(), RunLength(spec.row_sums()));
    println!("{} cols: {}", spec.cols(), RunLength(spec.col_sums()));
    println!("totals {} / {}", spec.row_total(), spec.col_total());

    if std::env::args().nth(1).as_deref() == Some("count") {
        for mode in [Mode::Binary, Mode::Natural] {
            let (total, table) = count(&spec, mode);
            let digits = total.to_string();
            println!(
                "{mode:?}: {} digits, {}... ({} ms)",
                digits.len(),
                &digits[..30],
                table.stats().elapsed.as_millis()
            );
        }
    }

    match parse_margin_file("rows: 1 2^x\ncols: 3") {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nbad file: {e}"),
    }
}
