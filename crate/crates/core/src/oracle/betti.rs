//! Graded Betti tables of `S/I` by two independent routes:
//!
//! * Hochster's formula on a squarefree ideal: `β_{i,W}(S/I) = h̃_{|W|−i−1}(Δ|_W)`.
//! * The lcm lattice: only lattice elements carry Betti numbers, and at each
//!   element `b` the multigraded number is read off from a simplicial complex
//!   attached to `b` (the upper Koszul complex by default, or the order complex
//!   of the open interval below `b`).

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::oracle::complex::{reduced_homology_of_faces, SimplicialComplex, MAX_VERTICES};
use crate::oracle::field::FieldChoice;
use crate::oracle::Guards;

/// Nonzero graded Betti numbers `β_{i,j}(S/I)` in a ring with `n_vars`
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    n_vars: usize,
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn new(n_vars: usize) -> Self {
        BettiTable {
            n_vars,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: usize, j: u64, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn merge(mut self, other: &BettiTable) -> Self {
        for (&(i, j), &b) in &other.entries {
            self.add(i, j, b);
        }
        self
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max (j − i)` over nonzero entries.
    pub fn regularity(&self) -> u64 {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as u64)
            .max()
            .unwrap_or(0)
    }

    /// Auslander–Buchsbaum: `depth = N − pd`.
    pub fn depth(&self) -> usize {
        self.n_vars - self.projective_dimension()
    }

    /// Total rank in each homological degree.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    /// Macaulay-style grid: columns are homological degrees `i`, rows are
    /// `j − i`, zeros printed as `.`.
    pub fn to_text(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let mut cells = vec![vec![String::from("."); pd + 1]; reg as usize + 1];
        for (&(i, j), &b) in &self.entries {
            cells[(j - i as u64) as usize][i] = b.to_string();
        }
        let totals: Vec<String> = self.totals().iter().map(u64::to_string).collect();
        let widths: Vec<usize> = (0..=pd)
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([totals[i].len(), i.to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let label_width = "total:".len().max(format!("{reg}:").len());
        let mut out = String::new();
        let row = |label: &str, values: &[String], out: &mut String| {
            let _ = write!(out, "{label:>label_width$}");
            for (v, w) in values.iter().zip(&widths) {
                let _ = write!(out, " {v:>w$}");
            }
            out.push('\n');
        };
        let header: Vec<String> = (0..=pd).map(|i| i.to_string()).collect();
        row("", &header, &mut out);
        row("total:", &totals, &mut out);
        for (k, r) in cells.iter().enumerate() {
            row(&format!("{k}:"), r, &mut out);
        }
        out
    }
}

/// Betti table of `S/I` for squarefree `I` via Hochster's formula.
pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldChoice, guards: &Guards) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.n_vars();
    if n > guards.max_hochster_vars {
        return Err(Error::guard("max-hochster-vars", guards.max_hochster_vars, n));
    }
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("S/I is zero for the unit ideal".into()));
    }
    let delta = SimplicialComplex::stanley_reisner(ideal, guards.max_ground)?;
    let nonfaces: Vec<u64> = ideal.generators().iter().map(Monomial::support_mask).collect();
    let table = (0u64..1 << n)
        .into_par_iter()
        .filter(|&w| {
            // Δ|_W is a cone over any vertex of W lying in no minimal nonface
            // inside W; such W contribute nothing.
            let covered = nonfaces
                .iter()
                .filter(|&&g| g & !w == 0)
                .fold(0u64, |a, &g| a | g);
            covered == w
        })
        .map(|w| {
            let size = w.count_ones() as usize;
            let h = delta.induced(w).reduced_homology(field);
            let mut t = BettiTable::new(n);
            for (k, &rank) in h.iter().enumerate() {
                // k = q + 1 with q = |W| − i − 1
                if k <= size {
                    t.add(size - k, size as u64, rank as u64);
                }
            }
            t
        })
        .reduce(|| BettiTable::new(n), |a, b| a.merge(&b));
    Ok(table)
}

/// How the lcm route turns a lattice element into homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LatticeComplex {
    /// `K^b = {F ⊆ supp b squarefree | x^{b−F} ∈ I}`, `β_{i,b} = h̃_{i−2}(K^b)`.
    #[default]
    UpperKoszul,
    /// Order complex of the open interval `(1, b)` of the lcm lattice,
    /// `β_{i,b} = h̃_{i−2}(Δ(1, b))`.
    OrderComplex,
}

/// The lcm lattice of an ideal: all lcms of nonempty sets of generators.
#[derive(Debug, Clone)]
pub struct LcmLattice {
    elements: Vec<Monomial>,
}

impl LcmLattice {
    /// Closure of the generators under lcm, grown one join at a time.
    pub fn build(ideal: &MonomialIdeal, max_size: usize) -> Result<Self> {
        let gens = ideal.generators();
        let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
        if seen.len() > max_size {
            return Err(Error::guard("max-lattice", max_size, seen.len()));
        }
        let mut frontier: Vec<Monomial> = gens.to_vec();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for g in gens {
                    let j = a.lcm(g);
                    if !seen.contains(&j) {
                        seen.insert(j.clone());
                        next.push(j);
                        if seen.len() > max_size {
                            return Err(Error::guard("max-lattice", max_size, seen.len()));
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Monomial> = seen.into_iter().collect();
        elements.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        Ok(LcmLattice { elements })
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Multigraded Betti numbers `β_{i,b}(S/I)` for `i ≥ 1` via the lcm lattice.
pub fn lcm_multigraded_betti(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    guards: &Guards,
    complex: LatticeComplex,
) -> Result<BTreeMap<(usize, Monomial), u64>> {
    let n = ideal.n_vars();
    if n > MAX_VERTICES {
        return Err(Error::guard("max-ground", MAX_VERTICES, n));
    }
    if ideal.generators().len() > guards.max_generators {
        return Err(Error::guard(
            "max-generators",
            guards.max_generators,
            ideal.generators().len(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("S/I is zero for the unit ideal".into()));
    }
    let lattice = LcmLattice::build(ideal, guards.max_lattice)?;
    let per_element: Vec<Vec<((usize, Monomial), u64)>> = lattice
        .elements()
        .par_iter()
        .map(|b| {
            let h = match complex {
                LatticeComplex::UpperKoszul => upper_koszul_homology(ideal, b, field),
                LatticeComplex::OrderComplex => {
                    order_complex_homology(&lattice, b, field, guards.max_chains)?
                }
            };
            // h[k] = h̃_{k−1}, and β_{i,b}(S/I) = h̃_{i−2}
            Ok(h.iter()
                .enumerate()
                .filter(|(_, &r)| r > 0)
                .map(|(k, &r)| ((k + 1, b.clone()), r as u64))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_element.into_iter().flatten().collect())
}

fn upper_koszul_homology(ideal: &MonomialIdeal, b: &Monomial, field: FieldChoice) -> Vec<usize> {
    let support = b.support_mask();
    let exps = b.exponents();
    let mut faces = Vec::new();
    let mut f = support;
    loop {
        let shifted = Monomial::new(
            exps.iter()
                .enumerate()
                .map(|(v, &e)| e - ((f >> v) & 1) as u32)
                .collect(),
        );
        if ideal.contains(&shifted) {
            faces.push(f);
        }
        if f == 0 {
            break;
        }
        f = (f - 1) & support;
    }
    reduced_homology_of_faces(&faces, field)
}

fn order_complex_homology(
    lattice: &LcmLattice,
    b: &Monomial,
    field: FieldChoice,
    max_chains: usize,
) -> Result<Vec<usize>> {
    let below: Vec<&Monomial> = lattice
        .elements()
        .iter()
        .filter(|x| *x != b && x.divides(b))
        .collect();
    if below.len() > MAX_VERTICES {
        return Err(Error::guard("max-ground", MAX_VERTICES, below.len()));
    }
    // Chains of the open interval, vertices indexed into `below`.
    let mut up: Vec<u64> = vec![0; below.len()];
    for (i, x) in below.iter().enumerate() {
        for (j, y) in below.iter().enumerate() {
            if i != j && x.divides(y) {
                up[i] |= 1 << j;
            }
        }
    }
    let mut chains: Vec<u64> = vec![0];
    let mut stack: Vec<(u64, u64)> = (0..below.len()).map(|i| (1u64 << i, up[i])).collect();
    while let Some((chain, candidates)) = stack.pop() {
        chains.push(chain);
        if chains.len() > max_chains {
            return Err(Error::guard("max-chains", max_chains, chains.len()));
        }
        let mut bits = candidates;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            stack.push((chain | 1 << j, candidates & up[j]));
        }
    }
    Ok(reduced_homology_of_faces(&chains, field))
}

/// Betti table of `S/I` via the lcm lattice.
pub fn lcm_betti(ideal: &MonomialIdeal, field: FieldChoice, guards: &Guards) -> Result<BettiTable> {
    lcm_betti_with(ideal, field, guards, LatticeComplex::UpperKoszul)
}

pub fn lcm_betti_with(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    guards: &Guards,
    complex: LatticeComplex,
) -> Result<BettiTable> {
    let multi = lcm_multigraded_betti(ideal, field, guards, complex)?;
    let mut table = BettiTable::new(ideal.n_vars());
    table.add(0, 0, 1);
    for ((i, b), r) in multi {
        table.add(i, b.degree(), r);
    }
    Ok(table)
}
