mod common;

use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use common::{all_fillings, oracle, oracle_of};
use tableau_reg::formulas::{
    classify_add_row_variable, is_cohen_macaulay, reg_single_row, Recursion, RowVariableEffect,
};
use tableau_reg::ideal::EdgeWeightedGraph;
use tableau_reg::oracle::{
    depth_via_associated_radicals, hochster_betti, lcm_betti, reg_via_degree_complexes,
};
use tableau_reg::tableau::visit_admissible_collections;
use tableau_reg::{
    depth, extremes_via_collections, ferrers_invariants, regularity, FieldChoice, Guards, Monomial,
    MonomialIdeal, Partition, Tableau, VariableSet,
};

fn filling(max_rows: usize, max_cols: usize, max_weight: u32) -> impl Strategy<Value = Tableau> {
    prop::collection::vec(1..=max_cols, 1..=max_rows).prop_flat_map(move |mut lens| {
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens.into_iter()
            .map(|l| prop::collection::vec(1..=max_weight, l))
            .collect::<Vec<_>>()
            .prop_map(|rows| Tableau::from_rows(rows).unwrap())
    })
}

fn squarefree_ideal(max_vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    (2..=max_vars).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..6).prop_map(move |masks| {
            let names: Vec<String> = (0..n).map(|k| format!("z{k}")).collect();
            let vars = Arc::new(VariableSet::new(names).unwrap());
            let gens = masks
                .into_iter()
                .filter(|m| m.count_ones() >= 2)
                .map(|m| Monomial::from_mask(n, m))
                .collect();
            MonomialIdeal::new(vars, gens).unwrap()
        })
    })
}

fn grid(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimal_boxes_form_an_antichain_of_omega_boxes(t in filling(4, 4, 4)) {
        let omega = t.omega().unwrap();
        let boxes = t.minimal_boxes().unwrap();
        prop_assert!(!boxes.is_empty());
        for (k, a) in boxes.iter().enumerate() {
            prop_assert_eq!(t.weight(a.row, a.col), Some(omega));
            for b in &boxes[k + 1..] {
                let (dr, dc) = (a.row as isize - b.row as isize, a.col as isize - b.col as isize);
                prop_assert!(dr * dc < 0);
            }
        }
    }

    #[test]
    fn deletions_remove_exactly_one_line(t in filling(4, 4, 3)) {
        for i in 1..=t.n_rows() {
            let (r, freed) = t.delete_row(i).unwrap();
            prop_assert_eq!(r.box_count(), t.box_count() - t.rows()[i - 1].len());
            prop_assert!(Partition::new(r.shape().parts().to_vec()).is_ok());
            let expected = if i == 1 { t.n_cols() - t.rows().get(1).map_or(0, Vec::len) } else { 0 };
            prop_assert_eq!(freed, expected);
        }
        for j in 1..=t.n_cols() {
            let (r, freed) = t.delete_column(j).unwrap();
            let len = t.shape().conjugate().part(j);
            prop_assert_eq!(r.box_count(), t.box_count() - len);
            let mu = t.shape().conjugate();
            let expected = if j == 1 { mu.part(1) - if mu.len() > 1 { mu.part(2) } else { 0 } } else { 0 };
            prop_assert_eq!(freed, expected);
        }
    }

    #[test]
    fn collections_are_admissible_and_extremes_match_recursion(t in filling(3, 3, 3)) {
        let first = t.minimal_boxes().unwrap();
        let mut min_d = u64::MAX;
        let mut max_r = 0;
        visit_admissible_collections(&t, 1_000_000, |c| {
            assert!(c.is_admissible_for(&t));
            let s = c.steps()[0].marked;
            assert!(first.iter().any(|b| b.row == s.row && b.col == s.col));
            min_d = min_d.min(c.depth_statistic());
            max_r = max_r.max(c.regularity_statistic());
        }).unwrap();
        prop_assert_eq!(min_d, depth(&t));
        prop_assert_eq!(max_r, regularity(&t));
    }

    #[test]
    fn enumeration_is_deterministic(t in filling(3, 3, 2)) {
        let a = tableau_reg::tableau::enumerate_admissible_collections(&t, 1_000_000).unwrap();
        let b = tableau_reg::tableau::enumerate_admissible_collections(&t, 1_000_000).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn depth_and_regularity_bounds(t in filling(4, 4, 5)) {
        let f = ferrers_invariants(&t.shape()).unwrap();
        let d = depth(&t);
        prop_assert!(d >= 1 && d as usize <= f.dimension);
        prop_assert!(regularity(&t) >= 2 * u64::from(t.omega().unwrap()) - 1);
    }

    #[test]
    fn witnesses_attain_recursion_values(t in filling(4, 4, 4)) {
        let r = tableau_reg::recursive_invariants(&t);
        let dw = r.depth_witness.unwrap();
        let rw = r.reg_witness.unwrap();
        prop_assert!(dw.is_admissible_for(&t) && rw.is_admissible_for(&t));
        prop_assert_eq!(dw.depth_statistic(), r.depth);
        prop_assert_eq!(rw.regularity_statistic(), r.regularity);
    }

    #[test]
    fn search_procedures_match_recursion(t in filling(3, 3, 2)) {
        let g = Guards::default();
        let i = MonomialIdeal::tableau_ideal(&t);
        let s = reg_via_degree_complexes(&i, FieldChoice::default(), &g).unwrap();
        prop_assert_eq!(s.regularity, regularity(&t));
        prop_assert_eq!(oracle(&i).regularity, s.regularity);
        let a = depth_via_associated_radicals(&t, &g).unwrap();
        prop_assert_eq!(a.depth as u64, depth(&t));
    }

    #[test]
    fn strict_grid_attains_regularity(t in filling(3, 3, 3)) {
        let i = MonomialIdeal::tableau_ideal(&t);
        let s = reg_via_degree_complexes(&i, FieldChoice::default(), &Guards::default()).unwrap();
        prop_assert!(s.strict_grid_suffices());
    }

    #[test]
    fn adding_a_variable(t in filling(3, 3, 2), z in 0usize..6) {
        let i = MonomialIdeal::tableau_ideal(&t);
        let z = z % i.n_vars();
        let base = oracle(&i);
        let plus = oracle(&i.add_variable_indices(&[z]));
        prop_assert!(plus.depth + 1 >= base.depth);
        prop_assert!(base.regularity >= plus.regularity);
    }

    #[test]
    fn polarization_round_trip(t in filling(3, 3, 3)) {
        let i = MonomialIdeal::tableau_ideal(&t);
        let p = i.polarize();
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(p.depolarize(i.vars()), i.clone());
        let rho = i.max_exponents();
        prop_assert_eq!(p.added as u64, rho.iter().map(|&r| u64::from(r.max(1)) - 1).sum::<u64>());
    }

    #[test]
    fn colon_radical_power_axioms(t in filling(2, 3, 3), s in 1u32..3, u in 1u32..3) {
        let i = MonomialIdeal::tableau_ideal(&t);
        let f = i.generators()[0].clone();
        let c = i.colon(&f).unwrap();
        prop_assert!(i.generators().iter().all(|g| c.contains(g)));
        prop_assert_eq!(c.radical().radical(), c.radical());
        let lhs = i.power(s).unwrap().product(&i.power(u).unwrap()).unwrap();
        prop_assert_eq!(lhs, i.power(s + u).unwrap());
    }

    #[test]
    fn colon_only_sees_exponents_up_to_rho(t in filling(2, 2, 3), extra in prop::collection::vec(0u32..4, 4)) {
        let i = MonomialIdeal::tableau_ideal(&t);
        let rho = i.max_exponents();
        let a: Vec<u32> = rho.iter().zip(extra.iter().cycle()).map(|(&r, &e)| r + e).collect();
        let clipped: Vec<u32> = a.iter().zip(&rho).map(|(&x, &r)| x.min(r)).collect();
        prop_assert_eq!(i.colon(&Monomial::new(a)).unwrap(), i.colon(&Monomial::new(clipped)).unwrap());
    }

    #[test]
    fn hochster_agrees_with_lcm_on_squarefree_ideals(i in squarefree_ideal(8)) {
        prop_assume!(!i.is_zero());
        let g = Guards::default();
        let h = hochster_betti(&i, FieldChoice::default(), &g).unwrap();
        let l = lcm_betti(&i, FieldChoice::default(), &g).unwrap();
        prop_assert_eq!(h, l);
    }

    #[test]
    fn single_row_formula_matches_oracle(row in prop::collection::vec(1u32..=3, 1..=3)) {
        let t = Tableau::from_rows(vec![row.clone()]).unwrap();
        let r = reg_single_row(&row).unwrap();
        prop_assert_eq!(r, regularity(&t));
        prop_assert_eq!(r, oracle_of(&t).regularity);
    }
}

#[test]
fn weakly_increasing_fillings_have_ferrers_depth() {
    let mut checked = 0;
    for t in all_fillings(6, 3).into_iter().filter(Tableau::is_weakly_increasing) {
        assert_eq!(depth(&t) as usize, ferrers_invariants(&t.shape()).unwrap().depth, "on\n{t}");
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn cohen_macaulay_consistency() {
    for t in all_fillings(5, 2) {
        let f = ferrers_invariants(&t.shape()).unwrap();
        let cm = depth(&t) as usize == t.n_rows() + t.n_cols() - f.height;
        assert_eq!(is_cohen_macaulay(&t), cm, "on\n{t}");
    }
}

#[test]
fn collections_agree_with_recursion_exhaustively() {
    for t in all_fillings(5, 2) {
        let c = extremes_via_collections(&t, 1_000_000).unwrap();
        let mut rec = Recursion::new();
        assert_eq!((c.depth, c.regularity), (rec.depth(&t), rec.regularity(&t)), "on\n{t}");
    }
}

#[test]
fn row_variable_trichotomy_against_oracle() {
    for p in Partition::all_up_to(6) {
        if p.is_empty() {
            continue;
        }
        let i = MonomialIdeal::ferrers_ideal(&p);
        let base = oracle(&i).depth;
        for a in 1..=p.len() {
            let plus = oracle(&i.add_variable_indices(&[a - 1])).depth;
            match classify_add_row_variable(&p, a).unwrap() {
                RowVariableEffect::DropsByOne => assert_eq!(plus + 1, base, "{p}, a = {a}"),
                RowVariableEffect::Unchanged => assert_eq!(plus, base, "{p}, a = {a}"),
                RowVariableEffect::UnchangedOrHigher => assert!(plus >= base, "{p}, a = {a}"),
            }
        }
    }
}

/// Colons of an associated radical by squarefree monomials are again
/// associated radicals of the same ideal.
#[test]
fn associated_radicals_are_closed_under_colon() {
    let mut cases = 0;
    for t in all_fillings(4, 2) {
        let g = EdgeWeightedGraph::from_tableau(&t);
        let i = g.ideal();
        let n = i.n_vars();
        let radicals: Vec<MonomialIdeal> = grid(&i.max_exponents())
            .into_iter()
            .filter(|a| !i.contains(a))
            .map(|a| g.associated_radical(&a).unwrap())
            .collect();
        let known: HashSet<Vec<Monomial>> = radicals.iter().map(|r| r.generators().to_vec()).collect();
        for j in &radicals {
            for mask in 0u64..(1 << n) {
                let b = Monomial::from_mask(n, mask);
                if j.contains(&b) {
                    continue;
                }
                let k = j.colon(&b).unwrap().radical();
                assert!(known.contains(k.generators()), "{k} from {j} on\n{t}");
                cases += 1;
            }
        }
    }
    assert!(cases >= 50);
}

#[test]
fn depth_of_ideal_and_radical_bound() {
    // depth S/I ≤ depth S/√(I : x^a) for every a, with equality somewhere
    for t in all_fillings(4, 2) {
        let g = EdgeWeightedGraph::from_tableau(&t);
        let i = g.ideal();
        let d = oracle(&i).depth;
        let mut best = usize::MAX;
        for a in grid(&i.max_exponents()) {
            if i.contains(&a) {
                continue;
            }
            let r = oracle(&g.associated_radical(&a).unwrap()).depth;
            assert!(d <= r, "on\n{t}");
            best = best.min(r);
        }
        assert_eq!(best, d, "on\n{t}");
    }
}
