// Usage: cargo run --example recursion [FILE]
//
// Depth and regularity by the minimal-box recursion, with the admissible
// collections that realize them.

use tableau_reg::{recursive_invariants, Tableau};

const DEFAULT: &str = "3 1 5 6\n2 3 4 6\n2 3 5\n2 4\n3\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let t = Tableau::parse(&text)?;
    print!("{t}");
    println!("minimal boxes: {:?}", t.minimal_boxes()?.iter().map(ToString::to_string).collect::<Vec<_>>());

    let r = recursive_invariants(&t);
    println!("depth {} reg {}", r.depth, r.regularity);
    if let (Some(d), Some(g)) = (r.depth_witness, r.reg_witness) {
        println!("depth witness {d}  d = {}", d.depth_statistic());
        println!("reg witness   {g}  r = {}", g.regularity_statistic());
    }
    Ok(())
}
