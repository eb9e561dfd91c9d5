// Usage: cargo run --example ferrers [PARTITION]

use tableau_reg::formulas::{alpha, classify_add_row_variable};
use tableau_reg::{ferrers_invariants, Partition};

fn main() -> tableau_reg::Result<()> {
    let p: Partition = std::env::args().nth(1).unwrap_or("7,7,6,6,5,3".into()).parse()?;
    let f = ferrers_invariants(&p)?;
    println!("{p}  conjugate {}", p.conjugate());
    println!("height {}  dim {}  pd {}  depth {}  reg {}", f.height, f.dimension, f.projective_dimension, f.depth, f.regularity);
    println!("Cohen-Macaulay: {}", f.is_cohen_macaulay);
    println!("alpha = {}", alpha(&p)?);
    for a in 1..=p.len() {
        println!("  adding x{a}: {:?}", classify_add_row_variable(&p, a)?);
    }
    Ok(())
}
