//! Monomial ideals over named variables, and edge ideals of edge-weighted
//! graphs with their closed-form associated radicals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tableau::{Partition, Tableau};

/// An ordered roster of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(VariableSet { names, index })
    }

    /// `x1..xn, y1..ym`: one variable per row, then one per column.
    pub fn rows_and_columns(n: usize, m: usize) -> Self {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=m).map(|j| format!("y{j}")));
        VariableSet::new(names).expect("generated names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// An exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The single variable `x_i` in a ring with `n` variables.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    /// Squarefree monomial on the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Monomial((0..n).map(|i| ((mask >> i) & 1) as u32).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self / gcd(self, f)`.
    pub fn quotient_by(&self, f: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&f.0)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// Bit mask of the support (variables with nonzero exponent).
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, vars }
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}^{}", self.vars.name(i), e)?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Keeps only generators not divisible by another, in canonical order.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// A monomial ideal, always stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Arc<VariableSet>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: Arc<VariableSet>, gens: Vec<Monomial>) -> Result<Self> {
        if gens.iter().any(|g| g.len() != vars.len()) {
            return Err(Error::VariableMismatch);
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            vars,
        })
    }

    fn from_parts(vars: Arc<VariableSet>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            gens: minimalize(gens),
            vars,
        }
    }

    pub fn zero(vars: Arc<VariableSet>) -> Self {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    /// `((x_i y_j)^{w(i,j)})` over `x1..xn, y1..ym`.
    pub fn tableau_ideal(t: &Tableau) -> Self {
        EdgeWeightedGraph::from_tableau(t).ideal()
    }

    /// The weight-one tableau ideal of a shape.
    pub fn ferrers_ideal(p: &Partition) -> Self {
        MonomialIdeal::tableau_ideal(&Tableau::constant(p, 1).expect("weight 1 is valid"))
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True for the unit ideal `(1)`.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(f))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `ρᵥ(I)`: largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut rho = vec![0; self.n_vars()];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(g.exponents()) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    /// `I : f`.
    pub fn colon(&self, f: &Monomial) -> Result<Self> {
        if f.len() != self.n_vars() {
            return Err(Error::VariableMismatch);
        }
        Ok(MonomialIdeal::from_parts(
            self.vars.clone(),
            self.gens.iter().map(|g| g.quotient_by(f)).collect(),
        ))
    }

    pub fn radical(&self) -> Self {
        MonomialIdeal::from_parts(
            self.vars.clone(),
            self.gens.iter().map(Monomial::radical).collect(),
        )
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(MonomialIdeal::from_parts(
            self.vars.clone(),
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(MonomialIdeal::from_parts(self.vars.clone(), gens))
    }

    /// `I^t` for `t ≥ 1`.
    pub fn power(&self, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I + (v | v ∈ names)`.
    pub fn add_variables<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let indices = names
            .iter()
            .map(|n| self.vars.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.add_variable_indices(&indices))
    }

    pub fn add_variable_indices(&self, indices: &[usize]) -> Self {
        let n = self.n_vars();
        let extra = indices.iter().map(|&i| Monomial::variable(n, i));
        MonomialIdeal::from_parts(self.vars.clone(), self.gens.iter().cloned().chain(extra).collect())
    }

    /// Variables dividing no minimal generator.
    pub fn free_variables(&self) -> Vec<usize> {
        let used = self.gens.iter().fold(0u64, |m, g| m | g.support_mask());
        (0..self.n_vars()).filter(|&i| used & (1 << i) == 0).collect()
    }

    pub fn free_variable_names(&self) -> Vec<String> {
        self.free_variables()
            .into_iter()
            .map(|i| self.vars.name(i).to_string())
            .collect()
    }

    /// Standard polarization: a variable of largest exponent `ρ ≥ 2` splits into
    /// `ρ` copies `v_1..v_ρ`, and `v^e` becomes `v_1 ⋯ v_e`.
    pub fn polarize(&self) -> Polarization {
        let rho = self.max_exponents();
        let mut names = Vec::new();
        let mut parents = Vec::new();
        let mut offset = Vec::with_capacity(rho.len());
        for (v, &r) in rho.iter().enumerate() {
            offset.push(names.len());
            let copies = r.max(1) as usize;
            if copies == 1 {
                names.push(self.vars.name(v).to_string());
            } else {
                names.extend((1..=copies).map(|k| format!("{}_{k}", self.vars.name(v))));
            }
            parents.extend(std::iter::repeat_n(v, copies));
        }
        let vars = Arc::new(VariableSet::new(names).expect("polarized names are distinct"));
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; vars.len()];
                for (v, &exp) in g.exponents().iter().enumerate() {
                    for k in 0..exp as usize {
                        e[offset[v] + k] = 1;
                    }
                }
                Monomial(e)
            })
            .collect();
        let added = parents.len() - rho.len();
        Polarization {
            ideal: MonomialIdeal::from_parts(vars, gens),
            added,
            parents,
        }
    }

    /// One generator per line as `var^e*var^e`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            out.push_str(&g.display(&self.vars).to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display(&self.vars).to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A squarefree ideal produced by [`MonomialIdeal::polarize`].
#[derive(Debug, Clone)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// Number of variables added, `Σ (ρᵥ − 1)`.
    pub added: usize,
    /// Original variable of each polarized variable.
    pub parents: Vec<usize>,
}

impl Polarization {
    /// Substitutes every copy back to its parent variable.
    pub fn depolarize(&self, original: &Arc<VariableSet>) -> MonomialIdeal {
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| {
                let mut e = vec![0; original.len()];
                for (k, &x) in g.exponents().iter().enumerate() {
                    e[self.parents[k]] += x;
                }
                Monomial(e)
            })
            .collect();
        MonomialIdeal::from_parts(original.clone(), gens)
    }
}

/// A simple graph with positive integer edge weights; vertices are the
/// variables of its edge ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeightedGraph {
    vars: Arc<VariableSet>,
    edges: BTreeMap<(usize, usize), u32>,
}

impl EdgeWeightedGraph {
    pub fn new(vars: Arc<VariableSet>, edges: impl IntoIterator<Item = ((usize, usize), u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((u, v), w) in edges {
            if u == v || u >= vars.len() || v >= vars.len() {
                return Err(Error::InvalidArgument(format!("bad edge ({u},{v})")));
            }
            if w == 0 {
                return Err(Error::InvalidArgument("edge weights must be positive".into()));
            }
            map.insert((u.min(v), u.max(v)), w);
        }
        Ok(EdgeWeightedGraph { vars, edges: map })
    }

    /// The bipartite graph of a filling: an edge `x_i y_j` with weight `w(i,j)`.
    pub fn from_tableau(t: &Tableau) -> Self {
        let n = t.n_rows();
        let vars = Arc::new(VariableSet::rows_and_columns(n, t.n_cols()));
        let edges = t
            .boxes()
            .map(|(c, w)| ((c.row - 1, n + c.col - 1), w))
            .collect();
        EdgeWeightedGraph { vars, edges }
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.edges.iter().map(|(&e, &w)| (e, w))
    }

    /// `I(G_w) = ((x_u x_v)^{w(u,v)})`.
    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.vars.len();
        let gens = self
            .edges
            .iter()
            .map(|(&(u, v), &w)| {
                let mut e = vec![0; n];
                e[u] = w;
                e[v] = w;
                Monomial(e)
            })
            .collect();
        MonomialIdeal::from_parts(self.vars.clone(), gens)
    }

    /// Edge ideal of the underlying unweighted graph.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        self.ideal().radical()
    }

    /// The set `U = {u | some edge {u,v} has a_u < w(u,v) ≤ a_v}`, as a mask.
    pub fn colon_variables(&self, a: &Monomial) -> u64 {
        let e = a.exponents();
        let mut u_mask = 0u64;
        for (&(u, v), &w) in &self.edges {
            if e[u] < w && w <= e[v] {
                u_mask |= 1 << u;
            }
            if e[v] < w && w <= e[u] {
                u_mask |= 1 << v;
            }
        }
        u_mask
    }

    /// `√(I(G_w) : x^a) = I(G \ U) + (x_u | u ∈ U)` in closed form.
    pub fn associated_radical(&self, a: &Monomial) -> Result<MonomialIdeal> {
        let n = self.vars.len();
        if a.len() != n {
            return Err(Error::VariableMismatch);
        }
        if self.ideal().contains(a) {
            return Err(Error::ExponentInIdeal);
        }
        let u_mask = self.colon_variables(a);
        let mut gens: Vec<Monomial> = (0..n)
            .filter(|&i| u_mask & (1 << i) != 0)
            .map(|i| Monomial::variable(n, i))
            .collect();
        for &(u, v) in self.edges.keys() {
            if u_mask & (1 << u) == 0 && u_mask & (1 << v) == 0 {
                gens.push(Monomial::from_mask(n, (1 << u) | (1 << v)));
            }
        }
        Ok(MonomialIdeal::from_parts(self.vars.clone(), gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<VariableSet> {
        Arc::new(VariableSet::new(names.iter().copied()).unwrap())
    }

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn tableau_ideal_construction() {
        let i = MonomialIdeal::tableau_ideal(&tab(&[&[1]]));
        assert_eq!(i.to_text(), "x1^1*y1^1\n");
        let i = MonomialIdeal::tableau_ideal(&tab(&[&[2, 1], &[1]]));
        assert_eq!(i.generators().len(), 3);
        assert_eq!(i.to_string(), "(x2^1*y1^1, x1^1*y2^1, x1^2*y1^2)");
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(
            MonomialIdeal::ferrers_ideal(&p),
            MonomialIdeal::tableau_ideal(&Tableau::constant(&p, 1).unwrap())
        );
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let i = MonomialIdeal::new(r.clone(), vec![mono(&[2, 2])]).unwrap();
        assert_eq!(i.colon(&mono(&[1, 0])).unwrap().generators(), &[mono(&[1, 2])]);
        assert_eq!(i.colon(&mono(&[0, 0])).unwrap(), i);

        let i = MonomialIdeal::tableau_ideal(&tab(&[&[2, 1], &[1]]));
        // ring order x1 x2 y1 y2
        let c = i.colon(&mono(&[0, 0, 1, 0])).unwrap();
        let want = MonomialIdeal::new(
            i.vars().clone(),
            vec![mono(&[2, 0, 1, 0]), mono(&[1, 0, 0, 1]), mono(&[0, 1, 0, 0])],
        )
        .unwrap();
        assert_eq!(c, want);
    }

    /// Brute-force membership oracle for `I : f` on all monomials of bounded
    /// degree.
    #[test]
    fn colon_matches_membership() {
        let i = MonomialIdeal::tableau_ideal(&tab(&[&[2, 1], &[1]]));
        let f = mono(&[0, 0, 1, 0]);
        let c = i.colon(&f).unwrap();
        let bound = 3;
        for a in 0..=bound {
            for b in 0..=bound {
                for cc in 0..=bound {
                    for d in 0..=bound {
                        let g = mono(&[a, b, cc, d]);
                        assert_eq!(c.contains(&g), i.contains(&g.mul(&f)), "{g:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn radical_and_power_examples() {
        let r = ring(&["x", "y"]);
        let i = MonomialIdeal::new(r.clone(), vec![mono(&[3, 3])]).unwrap();
        assert_eq!(i.radical().generators(), &[mono(&[1, 1])]);
        let i = MonomialIdeal::new(r.clone(), vec![mono(&[2, 0]), mono(&[0, 2])]).unwrap();
        assert_eq!(i.radical().generators(), &[mono(&[0, 1]), mono(&[1, 0])]);

        let xy = MonomialIdeal::new(r.clone(), vec![mono(&[1, 1])]).unwrap();
        assert_eq!(xy.power(2).unwrap().generators(), &[mono(&[2, 2])]);
        let m = MonomialIdeal::new(r.clone(), vec![mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        assert_eq!(m.power(2).unwrap().generators().len(), 3);
        assert!(m.power(0).is_err());

        let f = MonomialIdeal::ferrers_ideal(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(f.power(2).unwrap().generators().len(), 6);
    }

    #[test]
    fn add_variables_examples() {
        let i = MonomialIdeal::tableau_ideal(&tab(&[&[2, 1]]));
        let j = i.add_variables(&["x1"]).unwrap();
        assert_eq!(j.to_text(), "x1^1\n");
        assert_eq!(i.add_variables::<&str>(&[]).unwrap(), i);
        assert_eq!(
            i.add_variables(&["z"]),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn polarize_examples() {
        let r = ring(&["x"]);
        let p = MonomialIdeal::new(r.clone(), vec![mono(&[2])]).unwrap().polarize();
        assert_eq!(p.added, 1);
        assert_eq!(p.ideal.to_text(), "x_1^1*x_2^1\n");

        let r = ring(&["x", "y"]);
        let sq = MonomialIdeal::new(r.clone(), vec![mono(&[1, 1])]).unwrap();
        let p = sq.polarize();
        assert_eq!(p.added, 0);
        assert_eq!(p.ideal.generators(), sq.generators());

        let i = MonomialIdeal::new(r.clone(), vec![mono(&[2, 2])]).unwrap();
        let p = i.polarize();
        assert_eq!(p.ideal.n_vars(), 4);
        assert!(p.ideal.is_squarefree());
        assert_eq!(p.depolarize(&r), i);
    }

    #[test]
    fn free_variables_examples() {
        let f = MonomialIdeal::ferrers_ideal(&Partition::new(vec![7, 7, 6, 6, 5, 3]).unwrap());
        let j = MonomialIdeal::new(f.vars().clone(), Vec::new()).unwrap();
        assert_eq!(j.free_variables().len(), 13);
        let xs: Vec<String> = (1..=6).map(|i| format!("x{i}")).collect();
        let k = j.add_variables(&xs).unwrap();
        assert_eq!(
            k.free_variable_names(),
            (1..=7).map(|j| format!("y{j}")).collect::<Vec<_>>()
        );
    }

    #[test]
    fn associated_radical_of_large_ferrers_shape() {
        let t = Tableau::constant(&Partition::new(vec![7, 7, 6, 6, 5, 3]).unwrap(), 1).unwrap();
        let g = EdgeWeightedGraph::from_tableau(&t);
        let vars = g.vars().clone();
        let mut a = vec![0; vars.len()];
        a[vars.index_of("x5").unwrap()] = 1;
        a[vars.index_of("y7").unwrap()] = 1;
        let j = g.associated_radical(&Monomial::new(a)).unwrap();

        let mut want = MonomialIdeal::zero(vars.clone())
            .add_variables(&["x1", "x2", "y1", "y2", "y3", "y4", "y5"])
            .unwrap();
        let x3y6 = Monomial::from_mask(
            vars.len(),
            (1 << vars.index_of("x3").unwrap()) | (1 << vars.index_of("y6").unwrap()),
        );
        let x4y6 = Monomial::from_mask(
            vars.len(),
            (1 << vars.index_of("x4").unwrap()) | (1 << vars.index_of("y6").unwrap()),
        );
        want = want
            .sum(&MonomialIdeal::new(vars.clone(), vec![x3y6, x4y6]).unwrap())
            .unwrap();
        assert_eq!(j, want);
        assert_eq!(j.free_variable_names(), vec!["x5", "x6", "y7"]);
    }

    #[test]
    fn associated_radical_small_cases() {
        let t = tab(&[&[2, 1], &[1]]);
        let g = EdgeWeightedGraph::from_tableau(&t);
        let i = g.ideal();
        let y1 = mono(&[0, 0, 1, 0]);
        let closed = g.associated_radical(&y1).unwrap();
        assert_eq!(closed, i.colon(&y1).unwrap().radical());
        assert_eq!(closed.to_text(), "x2^1\nx1^1*y2^1\nx1^1*y1^1\n");

        let one = mono(&[0, 0, 0, 0]);
        assert_eq!(g.associated_radical(&one).unwrap(), g.edge_ideal());
        assert_eq!(
            g.associated_radical(&mono(&[2, 0, 2, 0])),
            Err(Error::ExponentInIdeal)
        );
    }

    #[test]
    fn non_bipartite_graph() {
        let r = ring(&["a", "b", "c"]);
        let g = EdgeWeightedGraph::new(r.clone(), [((0, 1), 2), ((1, 2), 1), ((0, 2), 3)]).unwrap();
        let i = g.ideal();
        for a0 in 0..=3 {
            for a1 in 0..=2 {
                for a2 in 0..=3 {
                    let a = mono(&[a0, a1, a2]);
                    if i.contains(&a) {
                        continue;
                    }
                    assert_eq!(
                        g.associated_radical(&a).unwrap(),
                        i.colon(&a).unwrap().radical()
                    );
                }
            }
        }
    }
}
