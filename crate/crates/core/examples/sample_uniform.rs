//! Uniform draws from the small example family, with a frequency table.
//!
//! cargo run --release --example sample_uniform

use std::collections::BTreeMap;

use tablecount::{MarginSpec, Mode, RandomSource, SamplerContext};

fn main() -> tablecount::Result<()> {
    let spec = MarginSpec::new(vec![2, 2, 1, 1], vec![3, 2, 1]);
    let ctx = SamplerContext::prepare(&spec, Mode::Binary)?;
    let mut rng = RandomSource::seed_from_u64(2024);

    println!("one draw out of {}:", ctx.total());
    for row in ctx.draw(&mut rng) {
        println!("  {row:?}");
    }

    let draws = 40_000;
    let mut freq: BTreeMap<Vec<Vec<u32>>, u32> = BTreeMap::new();
    for m in ctx.draw_many(&mut rng, draws) {
        assert!(spec.is_satisfied_by(&m));
        *freq.entry(m).or_default() += 1;
    }
    println!("\nfrequencies over {draws} draws (expect {}):", draws / freq.len());
    for (m, n) in &freq {
        println!("  {n:>6}  {m:?}");
    }
    println!("\n{} random bits used", rng.bits_read());

    // natural mode on a larger instance
    let spec = MarginSpec::new(vec![5, 4, 3, 3, 2, 1], vec![6, 6, 4, 2]);
    let ctx = SamplerContext::prepare(&spec, Mode::Natural)?;
    println!("\nnatural draw out of {}:", ctx.total());
    for row in ctx.draw(&mut rng) {
        println!("  {row:?}");
    }
    Ok(())
}
