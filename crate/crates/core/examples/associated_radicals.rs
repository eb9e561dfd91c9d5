// Usage: cargo run --example associated_radicals
//
// Closed-form associated radicals of a Ferrers ideal and the depth search
// built on them.

use tableau_reg::oracle::depth_via_associated_radicals;
use tableau_reg::{EdgeWeightedGraph, Guards, Monomial, Partition, Tableau};

fn main() -> tableau_reg::Result<()> {
    let shape = Partition::new(vec![7, 7, 6, 6, 5, 3])?;
    let t = Tableau::constant(&shape, 1)?;
    let g = EdgeWeightedGraph::from_tableau(&t);

    // x5 * y7
    let mut a = vec![0; 13];
    a[4] = 1;
    a[12] = 1;
    let j = g.associated_radical(&Monomial::new(a))?;
    println!("sqrt(I : x5 y7) = {j}");
    println!("free variables: {:?}", j.free_variable_names());

    let filling: Tableau = "2 1\n1\n".parse()?;
    let s = depth_via_associated_radicals(&filling, &Guards::default())?;
    println!("depth of [[2,1],[1]] = {} (radical {} over {} grid cells)", s.depth, s.radical, s.grid_cells);
    Ok(())
}
