// Usage: cargo run --example degree_complexes
//
// Regularity as the largest |a| + i over critical pairs of degree complexes.

use tableau_reg::oracle::search::critical_pairs;
use tableau_reg::oracle::{degree_complex, reg_via_degree_complexes};
use tableau_reg::{FieldChoice, Guards, Monomial, MonomialIdeal, Tableau};

fn main() -> tableau_reg::Result<()> {
    let t: Tableau = "2 3\n1\n".parse()?;
    let i = MonomialIdeal::tableau_ideal(&t);
    let vars = i.vars().clone();
    let guards = Guards::default();

    let y1 = Monomial::variable(i.n_vars(), 2);
    let d = degree_complex(&i, &y1, &guards)?;
    println!("facets of the degree complex at y1: {:?}", d.facets());

    let pairs = critical_pairs(&i, FieldChoice::default(), &guards)?;
    println!("{} critical pairs", pairs.len());
    let s = reg_via_degree_complexes(&i, FieldChoice::default(), &guards)?;
    println!(
        "reg = {} attained at a = {}, i = {}",
        s.regularity,
        s.extremal.exponent.display(&vars),
        s.extremal.index
    );
    println!("strict grid suffices: {}", s.strict_grid_suffices());
    Ok(())
}
