//! Ground-truth invariants of arbitrary monomial ideals: Stanley–Reisner
//! complexes, reduced homology, graded Betti tables, and exponent-grid searches
//! over degree complexes and associated radicals.

pub mod betti;
pub mod complex;
pub mod field;
pub mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

pub use betti::{hochster_betti, lcm_betti, BettiTable, LatticeComplex, LcmLattice};
pub use complex::SimplicialComplex;
pub use field::FieldChoice;
pub use search::{
    degree_complex, depth_via_associated_radicals, reg_via_degree_complexes, CriticalPair,
    DegreeComplexSearch, RadicalSearch,
};

/// Size limits for every exponential step. Exceeding one is an error, never a
/// silent truncation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Ground set of a Stanley–Reisner complex.
    pub max_ground: usize,
    /// Variables for the `2^N` restriction loop of Hochster's formula.
    pub max_hochster_vars: usize,
    /// Generators accepted by the lcm route.
    pub max_generators: usize,
    /// Elements of an lcm lattice.
    pub max_lattice: usize,
    /// Chains of an order complex.
    pub max_chains: usize,
    /// Cells of an exponent grid.
    pub max_grid: usize,
    /// Admissible collections enumerated.
    pub max_collections: usize,
    /// Boxes of a tableau.
    pub max_boxes: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_ground: 24,
            max_hochster_vars: 20,
            max_generators: 40,
            max_lattice: 200_000,
            max_chains: 200_000,
            max_grid: 2_000_000,
            max_collections: 1_000_000,
            max_boxes: 64,
        }
    }
}

impl Guards {
    pub fn validate(&self) -> Result<()> {
        let all = [
            ("max-ground", self.max_ground),
            ("max-hochster-vars", self.max_hochster_vars),
            ("max-generators", self.max_generators),
            ("max-lattice", self.max_lattice),
            ("max-chains", self.max_chains),
            ("max-grid", self.max_grid),
            ("max-collections", self.max_collections),
            ("max-boxes", self.max_boxes),
        ];
        match all.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidArgument(format!("guard `{name}` must be positive"))),
            None => Ok(()),
        }
    }
}

/// Which Betti route produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BettiRoute {
    LcmLattice,
    PolarizedHochster,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleInvariants {
    pub depth: usize,
    pub regularity: u64,
    pub projective_dimension: usize,
    pub route: BettiRoute,
    pub table: BettiTable,
}

/// Betti table of `S/I` via polarization and Hochster's formula, reported in
/// the original ring (the table is unchanged; only the variable count
/// shrinks back).
pub fn polarized_hochster_betti(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    guards: &Guards,
) -> Result<BettiTable> {
    let p = ideal.polarize();
    let t = hochster_betti(&p.ideal, field, guards)?;
    let mut out = BettiTable::new(ideal.n_vars());
    for ((i, j), b) in t.entries() {
        out.add(i, j, b);
    }
    Ok(out)
}

/// Depth, regularity and projective dimension of `S/I` from a graded Betti
/// table. The lcm route is tried first; on a guard failure the polarized
/// Hochster route is used instead.
pub fn oracle_invariants(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    guards: &Guards,
) -> Result<OracleInvariants> {
    let (table, route) = match lcm_betti(ideal, field, guards) {
        Ok(t) => (t, BettiRoute::LcmLattice),
        Err(e) if e.is_guard() => match polarized_hochster_betti(ideal, field, guards) {
            Ok(t) => (t, BettiRoute::PolarizedHochster),
            Err(e2) if e2.is_guard() => return Err(Error::DeskScale(format!("{e}; {e2}"))),
            Err(e2) => return Err(e2),
        },
        Err(e) => return Err(e),
    };
    Ok(OracleInvariants {
        depth: table.depth(),
        regularity: table.regularity(),
        projective_dimension: table.projective_dimension(),
        route,
        table,
    })
}

/// Krull dimension of `S/I`: the largest face size of `Δ(√I)`.
pub fn krull_dimension(ideal: &MonomialIdeal, guards: &Guards) -> Result<usize> {
    let delta = SimplicialComplex::stanley_reisner(&ideal.radical(), guards.max_ground)?;
    if delta.is_void() {
        return Err(Error::InvalidArgument("S/I is zero for the unit ideal".into()));
    }
    Ok(delta.max_face_size())
}

/// `height I = N − dim S/I`.
pub fn height(ideal: &MonomialIdeal, guards: &Guards) -> Result<usize> {
    Ok(ideal.n_vars() - krull_dimension(ideal, guards)?)
}
