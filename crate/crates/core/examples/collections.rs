// Usage: cargo run --example collections
//
// Lists every admissible collection of a small filling with its two
// statistics, then the extremes.

use tableau_reg::tableau::enumerate_admissible_collections;
use tableau_reg::{extremes_via_collections, Tableau};

fn main() -> tableau_reg::Result<()> {
    let t: Tableau = "2 2 5 4\n3 2 4\n4 6\n3\n".parse()?;
    let all = enumerate_admissible_collections(&t, 1_000_000)?;
    println!("{} admissible collections", all.len());
    for c in all.iter().filter(|c| c.depth_statistic() == 3 && c.regularity_statistic() == 18) {
        println!("  {c}  d = 3, r = 18");
    }

    let e = extremes_via_collections(&t, 1_000_000)?;
    println!("min d = {}  max r = {}", e.depth, e.regularity);
    Ok(())
}
