//! Exponent-grid searches: regularity from degree complexes and critical pairs,
//! and depth from the closed-form associated radicals of tableau ideals.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formulas::ferrers_invariants;
use crate::ideal::{EdgeWeightedGraph, Monomial, MonomialIdeal};
use crate::oracle::complex::SimplicialComplex;
use crate::oracle::field::FieldChoice;
use crate::oracle::Guards;
use crate::tableau::{Partition, Tableau};

/// `(a, i)` together with a face `F` of `Δ_a(I)`, `F ∩ supp a = ∅`, such that
/// `h̃_{i−1}(lk F) ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub exponent: Monomial,
    pub index: usize,
    pub face: u64,
}

impl CriticalPair {
    /// `|a| + i`.
    pub fn value(&self) -> u64 {
        self.exponent.degree() + self.index as u64
    }
}

/// The degree complex `Δ_a(I) = Δ(√(I : x^a))`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &Monomial, guards: &Guards) -> Result<SimplicialComplex> {
    if ideal.contains(a) {
        return Err(Error::ExponentInIdeal);
    }
    SimplicialComplex::stanley_reisner(&ideal.colon(a)?.radical(), guards.max_ground)
}

/// Every exponent `a` with `0 ≤ a_v ≤ bound_v`, in lexicographic order.
pub(crate) fn exponent_grid(bound: &[u32], max_cells: usize) -> Result<Vec<Monomial>> {
    let cells = bound
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))
        .unwrap_or(usize::MAX);
    if cells > max_cells {
        return Err(Error::guard("max-grid", max_cells, cells));
    }
    let mut out = Vec::with_capacity(cells);
    let mut current = vec![0u32; bound.len()];
    loop {
        out.push(Monomial::new(current.clone()));
        let mut k = bound.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if current[k] < bound[k] {
                current[k] += 1;
                break;
            }
            current[k] = 0;
        }
    }
}

/// Faces of `Δ` with the reduced-homology degrees `q + 1` where their link is
/// nonzero.
type LinkProfile = Vec<(u64, Vec<usize>)>;

fn link_profile(delta: &SimplicialComplex, field: FieldChoice) -> LinkProfile {
    delta
        .faces()
        .into_iter()
        .filter_map(|f| {
            let h = delta.link(f).reduced_homology(field);
            let nonzero: Vec<usize> = h
                .iter()
                .enumerate()
                .filter(|(_, &r)| r > 0)
                .map(|(k, _)| k)
                .collect();
            (!nonzero.is_empty()).then_some((f, nonzero))
        })
        .collect()
}

/// Calls `visit` on every critical pair with exponent in the widened grid
/// `a_v ∈ [0, ρ_v]`. Returns the number of grid cells examined.
pub fn visit_critical_pairs<F>(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    guards: &Guards,
    mut visit: F,
) -> Result<usize>
where
    F: FnMut(&CriticalPair),
{
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("S/I is zero for the unit ideal".into()));
    }
    let rho = ideal.max_exponents();
    let grid = exponent_grid(&rho, guards.max_grid)?;
    let mut cache: HashMap<Vec<Monomial>, Arc<LinkProfile>> = HashMap::new();
    for a in &grid {
        if ideal.contains(a) {
            continue;
        }
        let radical = ideal.colon(a)?.radical();
        let profile = match cache.get(radical.generators()) {
            Some(p) => p.clone(),
            None => {
                let delta = SimplicialComplex::stanley_reisner(&radical, guards.max_ground)?;
                let p = Arc::new(link_profile(&delta, field));
                cache.insert(radical.generators().to_vec(), p.clone());
                p
            }
        };
        let support = a.support_mask();
        for (face, degrees) in profile.iter() {
            if face & support != 0 {
                continue;
            }
            for &k in degrees {
                // k = (i − 1) + 1
                visit(&CriticalPair {
                    exponent: a.clone(),
                    index: k,
                    face: *face,
                });
            }
        }
    }
    Ok(grid.len())
}

pub fn critical_pairs(ideal: &MonomialIdeal, field: FieldChoice, guards: &Guards) -> Result<Vec<CriticalPair>> {
    let mut out = Vec::new();
    visit_critical_pairs(ideal, field, guards, |p| out.push(p.clone()))?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComplexSearch {
    pub regularity: u64,
    /// First critical pair (grid order) attaining the maximum.
    pub extremal: CriticalPair,
    pub grid_cells: usize,
    /// Largest `|a| + i` among critical pairs with some `a_v = ρ_v > 0`, i.e.
    /// those only visible on the widened grid.
    pub max_on_widened_boundary: Option<u64>,
    /// The maximum is also attained with every `a_v < ρ_v`.
    pub extremal_in_strict_grid: bool,
}

impl DegreeComplexSearch {
    /// Whether the strict grid `a_v < ρ_v` already attains the regularity.
    pub fn strict_grid_suffices(&self) -> bool {
        self.max_on_widened_boundary
            .is_none_or(|m| m < self.regularity)
            || self.extremal_in_strict_grid
    }
}

/// `reg S/I = max{|a| + i}` over critical pairs.
pub fn reg_via_degree_complexes(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    guards: &Guards,
) -> Result<DegreeComplexSearch> {
    let rho = ideal.max_exponents();
    let mut best: Option<CriticalPair> = None;
    let mut best_strict: Option<u64> = None;
    let mut boundary: Option<u64> = None;
    let cells = visit_critical_pairs(ideal, field, guards, |p| {
        let v = p.value();
        if best.as_ref().is_none_or(|b| v > b.value()) {
            best = Some(p.clone());
        }
        let on_boundary = p
            .exponent
            .exponents()
            .iter()
            .zip(&rho)
            .any(|(&a, &r)| r > 0 && a == r);
        if on_boundary {
            boundary = boundary.max(Some(v));
        } else {
            best_strict = best_strict.max(Some(v));
        }
    })?;
    let extremal = best.expect("the zero exponent always yields a critical pair");
    Ok(DegreeComplexSearch {
        regularity: extremal.value(),
        extremal_in_strict_grid: best_strict == Some(extremal.value()),
        extremal,
        grid_cells: cells,
        max_on_widened_boundary: boundary,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalSearch {
    pub depth: usize,
    /// First exponent (grid order) whose associated radical attains the depth.
    pub exponent: Monomial,
    pub radical: MonomialIdeal,
    pub grid_cells: usize,
}

/// Depth of `S/J` for `J = I(G_λ \ U) + (U)` without homology: the induced
/// graph is again a Ferrers graph, isolated vertices are free.
fn closed_form_radical_depth(shape: &Partition, n: usize, u_mask: u64) -> usize {
    let m = shape.first();
    let live_cols: Vec<usize> = (1..=m).filter(|&j| u_mask & (1 << (n + j - 1)) == 0).collect();
    let mut degrees = Vec::new();
    let mut free = 0;
    let mut widest = 0;
    for i in 1..=n {
        if u_mask & (1 << (i - 1)) != 0 {
            continue;
        }
        let d = live_cols.iter().take_while(|&&j| j <= shape.part(i)).count();
        if d == 0 {
            free += 1;
        } else {
            degrees.push(d);
            widest = widest.max(d);
        }
    }
    free += live_cols.len() - widest;
    if degrees.is_empty() {
        return free;
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let residual = Partition::new(degrees).expect("sorted positive degrees");
    ferrers_invariants(&residual).expect("nonempty").depth + free
}

/// `depth S/I(Y) = min depth S/√(I(Y) : x^a)` over the widened exponent grid,
/// each radical evaluated in closed form.
pub fn depth_via_associated_radicals(t: &Tableau, guards: &Guards) -> Result<RadicalSearch> {
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    let graph = EdgeWeightedGraph::from_tableau(t);
    let ideal = graph.ideal();
    let shape = t.shape();
    let n = t.n_rows();
    let grid = exponent_grid(&ideal.max_exponents(), guards.max_grid)?;
    let mut best: Option<(usize, &Monomial)> = None;
    for a in &grid {
        if ideal.contains(a) {
            continue;
        }
        let u_mask = graph.colon_variables(a);
        let d = closed_form_radical_depth(&shape, n, u_mask);
        if best.is_none_or(|(b, _)| d < b) {
            best = Some((d, a));
        }
    }
    let (depth, a) = best.expect("the zero exponent lies outside the ideal");
    Ok(RadicalSearch {
        depth,
        exponent: a.clone(),
        radical: graph.associated_radical(a)?,
        grid_cells: grid.len(),
    })
}
