//! Depth and regularity of tableau ideals from the combinatorics of the
//! filling: the minimal-box recursions, extremes over admissible collections,
//! and the closed formulas for Ferrers ideals and single rows.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::{
    visit_admissible_collections, AdmissibleCollection, Cell, CollectionStep, Mark, MarkedBox,
    Partition, Tableau,
};

/// How an [`InvariantReport`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Recursion,
    Collections,
    Oracle,
    DegreeComplexSearch,
    AssociatedRadicalSearch,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recursion => "recursion",
            Method::Collections => "collections",
            Method::Oracle => "oracle",
            Method::DegreeComplexSearch => "degree-complex",
            Method::AssociatedRadicalSearch => "associated-radical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub depth: u64,
    pub regularity: u64,
    /// An admissible collection with `d(M,Y) = depth`.
    pub depth_witness: Option<AdmissibleCollection>,
    /// An admissible collection with `r(M,Y) = regularity`.
    pub reg_witness: Option<AdmissibleCollection>,
    pub omega: Option<u32>,
    pub method: Method,
}

/// Memo tables for the two recursions, keyed by the weight matrix of the
/// residual filling (labels play no role in the values).
#[derive(Debug, Default)]
pub struct Recursion {
    depth: HashMap<Vec<Vec<u32>>, u64>,
    reg: HashMap<Vec<Vec<u32>>, u64>,
}

fn first_minimal(t: &Tableau) -> Cell {
    t.minimal_boxes().expect("nonempty")[0]
}

impl Recursion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `depth S/I(Y)` in the ring with one variable per row and column.
    pub fn depth(&mut self, t: &Tableau) -> u64 {
        if t.is_empty() {
            return 0;
        }
        if let Some(&d) = self.depth.get(t.rows()) {
            return d;
        }
        let d = self.depth_at(t, first_minimal(t));
        self.depth.insert(t.rows().to_vec(), d);
        d
    }

    /// The depth recursion expanded at a chosen minimal box.
    pub fn depth_at(&mut self, t: &Tableau, cell: Cell) -> u64 {
        [Mark::Row, Mark::Column]
            .into_iter()
            .map(|mark| {
                let (next, freed) = t.delete_line(cell, mark).expect("cell inside t");
                self.depth(&next) + freed as u64
            })
            .min()
            .expect("two branches")
    }

    pub fn regularity(&mut self, t: &Tableau) -> u64 {
        if t.is_empty() {
            return 0;
        }
        if let Some(&r) = self.reg.get(t.rows()) {
            return r;
        }
        let r = self.regularity_at(t, first_minimal(t));
        self.reg.insert(t.rows().to_vec(), r);
        r
    }

    /// The regularity recursion expanded at a chosen minimal box.
    pub fn regularity_at(&mut self, t: &Tableau, cell: Cell) -> u64 {
        let omega = u64::from(t.weight(cell.row, cell.col).expect("cell inside t"));
        if t.box_count() == 1 {
            return 2 * omega - 1;
        }
        let best = [Mark::Row, Mark::Column]
            .into_iter()
            .map(|mark| {
                let (next, _) = t.delete_line(cell, mark).expect("cell inside t");
                self.regularity(&next)
            })
            .max()
            .expect("two branches");
        omega - 1 + best
    }

    /// Replays the depth recursion from the top, taking a branch that attains
    /// the minimum at every step.
    pub fn depth_witness(&mut self, t: &Tableau) -> AdmissibleCollection {
        self.replay(t, |rec, t, cell, mark| {
            let (next, freed) = t.delete_line(cell, mark).expect("cell inside t");
            (rec.depth(&next) + freed as u64 == rec.depth(t), next, freed)
        })
    }

    pub fn reg_witness(&mut self, t: &Tableau) -> AdmissibleCollection {
        self.replay(t, |rec, t, cell, mark| {
            let omega = u64::from(t.weight(cell.row, cell.col).expect("cell inside t"));
            let (next, freed) = t.delete_line(cell, mark).expect("cell inside t");
            let value = if next.is_empty() {
                2 * omega - 1
            } else {
                omega - 1 + rec.regularity(&next)
            };
            (value == rec.regularity(t), next, freed)
        })
    }

    fn replay<F>(&mut self, t: &Tableau, mut attains: F) -> AdmissibleCollection
    where
        F: FnMut(&mut Self, &Tableau, Cell, Mark) -> (bool, Tableau, usize),
    {
        let mut steps = Vec::new();
        let mut current = t.clone();
        while !current.is_empty() {
            let cell = first_minimal(&current);
            let weight = current.weight(cell.row, cell.col).expect("minimal box");
            let orig = current.original(cell);
            let (mark, next, freed) = [Mark::Row, Mark::Column]
                .into_iter()
                .find_map(|mark| {
                    let (ok, next, freed) = attains(self, &current, cell, mark);
                    ok.then_some((mark, next, freed))
                })
                .expect("one branch attains the extremum");
            steps.push(CollectionStep {
                marked: MarkedBox::new(orig.row, orig.col, mark),
                weight,
                freed,
            });
            current = next;
        }
        AdmissibleCollection::from_steps(steps)
    }
}

pub fn depth(t: &Tableau) -> u64 {
    Recursion::new().depth(t)
}

pub fn regularity(t: &Tableau) -> u64 {
    Recursion::new().regularity(t)
}

/// Both recursions with witnesses rebuilt from the memo tables.
pub fn recursive_invariants(t: &Tableau) -> InvariantReport {
    let mut rec = Recursion::new();
    let depth = rec.depth(t);
    let regularity = rec.regularity(t);
    let nonempty = !t.is_empty();
    InvariantReport {
        depth,
        regularity,
        depth_witness: nonempty.then(|| rec.depth_witness(t)),
        reg_witness: nonempty.then(|| rec.reg_witness(t)),
        omega: t.omega(),
        method: Method::Recursion,
    }
}

/// Minimum of `d(M,Y)` and maximum of `r(M,Y)` over every admissible
/// collection, with the first collection (enumeration order) attaining each.
pub fn extremes_via_collections(t: &Tableau, max_collections: usize) -> Result<InvariantReport> {
    let mut best_d: Option<AdmissibleCollection> = None;
    let mut best_r: Option<AdmissibleCollection> = None;
    visit_admissible_collections(t, max_collections, |c| {
        if best_d
            .as_ref()
            .is_none_or(|b| c.depth_statistic() < b.depth_statistic())
        {
            best_d = Some(c.clone());
        }
        if best_r
            .as_ref()
            .is_none_or(|b| c.regularity_statistic() > b.regularity_statistic())
        {
            best_r = Some(c.clone());
        }
    })?;
    let (d, r) = (best_d.expect("nonempty"), best_r.expect("nonempty"));
    Ok(InvariantReport {
        depth: d.depth_statistic(),
        regularity: r.regularity_statistic(),
        depth_witness: Some(d),
        reg_witness: Some(r),
        omega: t.omega(),
        method: Method::Collections,
    })
}

/// Closed-form invariants of `S/I_λ` in `n + m` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FerrersInvariants {
    pub height: usize,
    pub projective_dimension: usize,
    pub depth: usize,
    pub regularity: u64,
    pub dimension: usize,
    pub is_cohen_macaulay: bool,
}

pub fn ferrers_invariants(p: &Partition) -> Result<FerrersInvariants> {
    if p.is_empty() {
        return Err(Error::InvalidArgument("the empty partition has no Ferrers ideal".into()));
    }
    let n = p.len();
    let m = p.first();
    let hooks = p.parts().iter().enumerate().map(|(j, &l)| l + j);
    let height = hooks.clone().min().expect("nonempty").min(n);
    let pd = hooks.max().expect("nonempty");
    Ok(FerrersInvariants {
        height,
        projective_dimension: pd,
        depth: n + m - pd,
        regularity: 1,
        dimension: n + m - height,
        is_cohen_macaulay: p.is_staircase(),
    })
}

/// Smallest `i` attaining `max(λᵢ + i)`.
pub fn alpha(p: &Partition) -> Result<usize> {
    let best = (1..=p.len())
        .map(|i| p.part(i) + i)
        .max()
        .ok_or_else(|| Error::InvalidArgument("empty partition".into()))?;
    Ok((1..=p.len()).find(|&i| p.part(i) + i == best).expect("max attained"))
}

pub fn is_cohen_macaulay(t: &Tableau) -> bool {
    t.shape().is_staircase() && t.is_weakly_increasing()
}

/// `Σ (wⱼ − 1) + max wⱼ` for a one-row filling.
pub fn reg_single_row(weights: &[u32]) -> Result<u64> {
    let max = weights
        .iter()
        .copied()
        .max()
        .ok_or_else(|| Error::InvalidArgument("a row needs at least one box".into()))?;
    Ok(weights.iter().map(|&w| u64::from(w) - 1).sum::<u64>() + u64::from(max))
}

/// Effect on `depth S/I_λ` of adding the row variable `x_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowVariableEffect {
    DropsByOne,
    Unchanged,
    /// `depth S/I_λ + ε` for some `ε ≥ 0` left undetermined.
    UnchangedOrHigher,
}

pub fn classify_add_row_variable(p: &Partition, a: usize) -> Result<RowVariableEffect> {
    if a == 0 || a > p.len() {
        return Err(Error::IndexOutOfRange {
            what: "row",
            index: a,
            max: p.len(),
        });
    }
    let alpha = alpha(p)?;
    Ok(match a.cmp(&alpha) {
        std::cmp::Ordering::Greater => RowVariableEffect::DropsByOne,
        std::cmp::Ordering::Less => RowVariableEffect::Unchanged,
        std::cmp::Ordering::Equal => RowVariableEffect::UnchangedOrHigher,
    })
}
