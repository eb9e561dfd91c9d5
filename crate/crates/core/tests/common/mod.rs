#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tableau_reg::cli::random_tableau;
use tableau_reg::oracle::{oracle_invariants, OracleInvariants};
use tableau_reg::{FieldChoice, Guards, MonomialIdeal, Partition, Tableau};

pub fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Every filling of every shape with at most `max_boxes` boxes, weights in
/// `1..=max_weight`.
pub fn all_fillings(max_boxes: usize, max_weight: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    for p in Partition::all_up_to(max_boxes) {
        if p.is_empty() {
            continue;
        }
        out.extend(fillings_of(&p, max_weight));
    }
    out
}

pub fn fillings_of(p: &Partition, max_weight: u32) -> Vec<Tableau> {
    let k = p.size();
    let total = (max_weight as usize).pow(k as u32);
    (0..total)
        .map(|mut code| {
            let rows = p
                .parts()
                .iter()
                .map(|&l| {
                    (0..l)
                        .map(|_| {
                            let w = (code % max_weight as usize) as u32 + 1;
                            code /= max_weight as usize;
                            w
                        })
                        .collect()
                })
                .collect();
            Tableau::from_rows(rows).unwrap()
        })
        .collect()
}

pub fn random_fillings(seed: u64, count: usize, rows: usize, cols: usize, weight: u32) -> Vec<Tableau> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_tableau(&mut rng, rows, cols, weight)).collect()
}

pub fn oracle(i: &MonomialIdeal) -> OracleInvariants {
    oracle_invariants(i, FieldChoice::default(), &Guards::default()).unwrap()
}

pub fn oracle_of(t: &Tableau) -> OracleInvariants {
    oracle(&MonomialIdeal::tableau_ideal(t))
}
