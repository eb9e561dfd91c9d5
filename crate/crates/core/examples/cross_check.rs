// Usage: cargo run --release --example cross_check [COUNT] [SEED]
//
// Runs every method on seeded random fillings and reports agreement.

use tableau_reg::cli::{cmd_random_check, RandomBounds, RunConfig};

fn main() -> tableau_reg::Result<()> {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let bounds = RandomBounds {
        count,
        max_rows: 3,
        max_cols: 3,
        max_weight: 3,
    };
    let config = RunConfig { seed, ..RunConfig::default() };
    println!("{}", cmd_random_check(&bounds, &config)?.message());
    Ok(())
}
