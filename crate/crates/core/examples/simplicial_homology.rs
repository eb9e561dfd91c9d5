// Usage: cargo run --example simplicial_homology
//
// Reduced homology over different fields: the six-vertex projective plane has
// torsion that only characteristic 2 sees.

use tableau_reg::oracle::SimplicialComplex;
use tableau_reg::FieldChoice;

const RP2: [[usize; 3]; 10] = [
    [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
    [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
];

fn main() {
    let facets = RP2.iter().map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v));
    let rp2 = SimplicialComplex::from_facets(6, facets);
    println!("f-vector {:?}", rp2.f_vector());
    for field in [FieldChoice::Prime(2), FieldChoice::Prime(3), FieldChoice::Rational] {
        println!("field {field}: reduced homology (from degree -1) {:?}", rp2.reduced_homology(field));
    }

    let circle = SimplicialComplex::from_facets(3, [0b011, 0b110, 0b101]);
    println!("hollow triangle {:?}", circle.reduced_homology(FieldChoice::default()));
    println!("link of vertex 0 in RP2: {:?}", rp2.link(1).facets());
}
