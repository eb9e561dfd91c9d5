// Usage: cargo run --example betti_table
//
// Graded Betti tables from both oracle routes, for a tableau ideal and for a
// power of a Ferrers ideal.

use tableau_reg::oracle::{lcm_betti, polarized_hochster_betti};
use tableau_reg::{oracle_invariants, FieldChoice, Guards, MonomialIdeal, Partition, Tableau};

fn main() -> tableau_reg::Result<()> {
    let guards = Guards::default();
    let field = FieldChoice::default();

    let i = MonomialIdeal::tableau_ideal(&"2 1\n1\n".parse::<Tableau>()?);
    println!("I = {i}");
    print!("{}", lcm_betti(&i, field, &guards)?.to_text());
    assert_eq!(lcm_betti(&i, field, &guards)?, polarized_hochster_betti(&i, field, &guards)?);

    let cube = MonomialIdeal::ferrers_ideal(&Partition::new(vec![2, 1])?).power(3)?;
    let o = oracle_invariants(&cube, field, &guards)?;
    println!("\ncube of the (2,1) Ferrers ideal: depth {} reg {} via {:?}", o.depth, o.regularity, o.route);
    print!("{}", o.table.to_text());
    Ok(())
}
