//! Simplicial complexes on at most 64 vertices, stored by their facets as bit
//! masks, and their reduced homology.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::oracle::field::{FieldChoice, SparseColumns};

/// Hard ceiling imposed by the bit-mask face representation.
pub const MAX_VERTICES: usize = 64;

/// A simplicial complex on vertices `0..ground`.
///
/// The void complex has no faces at all; the empty complex `{∅}` has the
/// single facet `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u64>,
}

fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

fn maximalize(mut faces: Vec<u64>) -> Vec<u64> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
    faces.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|&k| is_subset(f, k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    pub fn from_facets(ground: usize, facets: impl IntoIterator<Item = u64>) -> Self {
        SimplicialComplex {
            ground,
            facets: maximalize(facets.into_iter().collect()),
        }
    }

    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// `{∅}`.
    pub fn empty(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![0],
        }
    }

    pub fn simplex(ground: usize, vertices: u64) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![vertices],
        }
    }

    /// The Stanley–Reisner complex `{F | x_F ∉ I}` of a squarefree ideal.
    pub fn stanley_reisner(ideal: &MonomialIdeal, max_ground: usize) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.n_vars();
        let limit = max_ground.min(MAX_VERTICES);
        if n > limit {
            return Err(Error::guard("max-ground", limit, n));
        }
        if ideal.is_unit() {
            return Ok(SimplicialComplex::void(n));
        }
        let nonfaces: Vec<u64> = ideal.generators().iter().map(|g| g.support_mask()).collect();
        // Facets are the complements of minimal vertex covers of the nonfaces.
        let mut covers = Vec::new();
        minimal_transversals(&nonfaces, 0, 0, &mut covers);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(SimplicialComplex::from_facets(
            n,
            covers.into_iter().map(|c| full & !c),
        ))
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| is_subset(face, f))
    }

    /// Largest face cardinality (`dim + 1`); 0 for `{∅}` and for the void
    /// complex.
    pub fn max_face_size(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// True when some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(u64::MAX, |a, &f| a & f) != 0
    }

    /// `lk F = {G | G ∩ F = ∅, G ∪ F ∈ Δ}`; void when `F ∉ Δ`.
    pub fn link(&self, face: u64) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.ground,
            self.facets
                .iter()
                .filter(|&&f| is_subset(face, f))
                .map(|&f| f & !face),
        )
    }

    /// Restriction `Δ|_W`.
    pub fn induced(&self, w: u64) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        SimplicialComplex::from_facets(self.ground, self.facets.iter().map(|&f| f & w))
    }

    /// All faces, including `∅` for a nonvoid complex, sorted by size then
    /// value.
    pub fn faces(&self) -> Vec<u64> {
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut faces: Vec<u64> = seen.into_iter().collect();
        faces.sort_by_key(|&f| (f.count_ones(), f));
        faces
    }

    /// `f_{-1}, f_0, f_1, …`.
    pub fn f_vector(&self) -> Vec<usize> {
        let faces = self.faces();
        let mut f = vec![0; self.max_face_size() + 1];
        if self.is_void() {
            return Vec::new();
        }
        for face in faces {
            f[face.count_ones() as usize] += 1;
        }
        f
    }

    /// Reduced homology ranks `h̃_{-1}, h̃_0, h̃_1, …` (index `q + 1`). The
    /// void complex yields an empty vector.
    pub fn reduced_homology(&self, field: FieldChoice) -> Vec<usize> {
        reduced_homology_of_faces(&self.faces(), field)
    }

    /// `h̃_q` for `q ≥ -1`.
    pub fn reduced_homology_at(&self, q: isize, field: FieldChoice) -> usize {
        let h = self.reduced_homology(field);
        usize::try_from(q + 1)
            .ok()
            .and_then(|k| h.get(k).copied())
            .unwrap_or(0)
    }
}

fn minimal_transversals(sets: &[u64], chosen: u64, start: usize, out: &mut Vec<u64>) {
    // First unhit set drives the branching; candidate covers are later
    // filtered for minimality by `from_facets` (maximal complements).
    let Some(idx) = (start..sets.len()).find(|&i| sets[i] & chosen == 0) else {
        out.push(chosen);
        return;
    };
    let s = sets[idx];
    let mut bits = s;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        bits &= bits - 1;
        minimal_transversals(sets, chosen | v, idx + 1, out);
    }
}

/// Reduced homology of the complex whose faces (downward closed, including
/// `∅` if nonempty) are given.
pub fn reduced_homology_of_faces(faces: &[u64], field: FieldChoice) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[k] = faces with k vertices (dimension k - 1)
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let mut m = SparseColumns::new(by_size[k - 1].len());
        for &f in &by_size[k] {
            let mut column = Vec::with_capacity(k);
            let mut bits = f;
            let mut position = 0;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                bits &= bits - 1;
                let sign = if position % 2 == 0 { 1 } else { -1 };
                if let Some(&row) = index[k - 1].get(&(f & !v)) {
                    column.push((row, sign));
                }
                position += 1;
            }
            m.push(column);
        }
        ranks[k] = m.rank(field);
    }
    (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}
