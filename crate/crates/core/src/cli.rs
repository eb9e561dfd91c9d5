//! Library side of the command-line front end: run configurations, the four
//! commands, and their JSON/text reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::formulas::{extremes_via_collections, ferrers_invariants, recursive_invariants, FerrersInvariants};
use crate::ideal::{Monomial, MonomialIdeal, VariableSet};
use crate::oracle::{
    depth_via_associated_radicals, oracle_invariants, reg_via_degree_complexes, BettiRoute,
    FieldChoice, Guards,
};
use crate::tableau::{AdmissibleCollection, Partition, Tableau};

/// Which computation paths to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodSelector {
    Recursion,
    Collections,
    Oracle,
    DegreeComplex,
    AssociatedRadical,
    All,
}

impl MethodSelector {
    pub const SINGLE: [MethodSelector; 5] = [
        MethodSelector::Recursion,
        MethodSelector::Collections,
        MethodSelector::Oracle,
        MethodSelector::DegreeComplex,
        MethodSelector::AssociatedRadical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodSelector::Recursion => "recursion",
            MethodSelector::Collections => "collections",
            MethodSelector::Oracle => "oracle",
            MethodSelector::DegreeComplex => "degree-complex",
            MethodSelector::AssociatedRadical => "associated-radical",
            MethodSelector::All => "all",
        }
    }

    fn expand(self) -> Vec<MethodSelector> {
        match self {
            MethodSelector::All => Self::SINGLE.to_vec(),
            m => vec![m],
        }
    }
}

impl std::str::FromStr for MethodSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::SINGLE
            .into_iter()
            .chain([MethodSelector::All])
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub method: MethodSelector,
    pub field: FieldChoice,
    pub guards: Guards,
    pub output: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            method: MethodSelector::Recursion,
            field: FieldChoice::default(),
            guards: Guards::default(),
            output: OutputFormat::Text,
            seed: 1,
        }
    }
}

/// One method's outcome. A method skipped under `all` carries the reason.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub depth: Option<u64>,
    pub reg: Option<u64>,
    pub witness: Option<Value>,
    pub micros: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Agree,
    Disagree,
    Single,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxRef {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub shape: Vec<usize>,
    pub weights: Vec<Vec<u32>>,
    pub omega: Option<u32>,
    pub minimal_boxes: Vec<BoxRef>,
    pub methods: BTreeMap<String, MethodResult>,
    pub verdict: Verdict,
}

impl Report {
    pub fn depth(&self) -> Option<u64> {
        self.methods.values().find_map(|m| m.depth)
    }

    pub fn regularity(&self) -> Option<u64> {
        self.methods.values().find_map(|m| m.reg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with timings removed, for byte-level determinism checks.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.methods.values_mut().for_each(|m| m.micros = 0);
        copy.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "shape: {}", display_list(&self.shape));
        if let Some(w) = self.omega {
            let _ = writeln!(out, "omega: {w}");
        }
        let boxes: Vec<String> = self
            .minimal_boxes
            .iter()
            .map(|b| format!("({},{})", b.row, b.col))
            .collect();
        let _ = writeln!(out, "minimal boxes: {}", boxes.join(" "));
        for (name, m) in &self.methods {
            if let Some(reason) = &m.skipped {
                let _ = writeln!(out, "{name}: skipped ({reason})");
                continue;
            }
            let show = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "{name}: depth {} reg {} ({} us)",
                show(m.depth),
                show(m.reg),
                m.micros
            );
            if let Some(w) = &m.witness {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
        let _ = writeln!(out, "verdict: {}", serde_json::to_value(self.verdict).expect("enum").as_str().unwrap_or(""));
        out
    }
}

fn display_list(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", s.join(","))
}

fn collection_json(c: &Option<AdmissibleCollection>) -> Value {
    c.as_ref()
        .map_or(Value::Null, |c| serde_json::to_value(c.marked_boxes()).expect("boxes serialize"))
}

fn mask_names(mask: u64, vars: &VariableSet) -> Vec<String> {
    (0..vars.len())
        .filter(|&v| mask & (1 << v) != 0)
        .map(|v| vars.name(v).to_string())
        .collect()
}

fn monomial_text(a: &Monomial, vars: &VariableSet) -> String {
    a.display(vars).to_string()
}

fn run_method(t: &Tableau, method: MethodSelector, config: &RunConfig) -> Result<MethodResult> {
    let start = Instant::now();
    let g = &config.guards;
    let (depth, reg, witness) = match method {
        MethodSelector::Recursion => {
            let r = recursive_invariants(t);
            let w = json!({"depth": collection_json(&r.depth_witness), "reg": collection_json(&r.reg_witness)});
            (Some(r.depth), Some(r.regularity), Some(w))
        }
        MethodSelector::Collections => {
            if t.is_empty() {
                (Some(0), Some(0), None)
            } else {
                let r = extremes_via_collections(t, g.max_collections)?;
                let w = json!({"depth": collection_json(&r.depth_witness), "reg": collection_json(&r.reg_witness)});
                (Some(r.depth), Some(r.regularity), Some(w))
            }
        }
        MethodSelector::Oracle => {
            if t.is_empty() {
                (Some(0), Some(0), None)
            } else {
                let o = oracle_invariants(&MonomialIdeal::tableau_ideal(t), config.field, g)?;
                let route = match o.route {
                    BettiRoute::LcmLattice => "lcm-lattice",
                    BettiRoute::PolarizedHochster => "polarized-hochster",
                };
                let w = json!({"route": route, "pd": o.projective_dimension});
                (Some(o.depth as u64), Some(o.regularity), Some(w))
            }
        }
        MethodSelector::DegreeComplex => {
            if t.is_empty() {
                (None, Some(0), None)
            } else {
                let i = MonomialIdeal::tableau_ideal(t);
                let s = reg_via_degree_complexes(&i, config.field, g)?;
                let vars = i.vars();
                let w = json!({
                    "exponent": monomial_text(&s.extremal.exponent, vars),
                    "index": s.extremal.index,
                    "face": mask_names(s.extremal.face, vars),
                });
                (None, Some(s.regularity), Some(w))
            }
        }
        MethodSelector::AssociatedRadical => {
            if t.is_empty() {
                (Some(0), None, None)
            } else {
                let s = depth_via_associated_radicals(t, g)?;
                let vars = s.radical.vars().clone();
                let w = json!({
                    "exponent": monomial_text(&s.exponent, &vars),
                    "radical": s.radical.to_string(),
                });
                (Some(s.depth as u64), None, Some(w))
            }
        }
        MethodSelector::All => unreachable!("expanded by the caller"),
    };
    Ok(MethodResult {
        depth,
        reg,
        witness,
        micros: start.elapsed().as_micros() as u64,
        skipped: None,
    })
}

fn verdict(methods: &BTreeMap<String, MethodResult>) -> Verdict {
    let ran: Vec<&MethodResult> = methods.values().filter(|m| m.skipped.is_none()).collect();
    if ran.len() < 2 {
        return Verdict::Single;
    }
    let same = |f: fn(&MethodResult) -> Option<u64>| {
        let mut vals = ran.iter().filter_map(|m| f(m));
        let first = vals.next();
        vals.all(|v| Some(v) == first)
    };
    if same(|m| m.depth) && same(|m| m.reg) {
        Verdict::Agree
    } else {
        Verdict::Disagree
    }
}

/// Runs the configured methods on an in-memory filling. Under `all`, methods
/// that hit a guard are recorded as skipped; a single selected method that
/// hits a guard is an error.
pub fn compute_report(t: &Tableau, config: &RunConfig) -> Result<Report> {
    config.guards.validate()?;
    if t.box_count() > config.guards.max_boxes {
        return Err(Error::guard("max-boxes", config.guards.max_boxes, t.box_count()));
    }
    let mut methods = BTreeMap::new();
    for m in config.method.expand() {
        let result = match run_method(t, m, config) {
            Ok(r) => r,
            Err(e) if e.is_guard() && config.method == MethodSelector::All => MethodResult {
                depth: None,
                reg: None,
                witness: None,
                micros: 0,
                skipped: Some(e.to_string()),
            },
            Err(e) => return Err(e),
        };
        methods.insert(m.name().to_string(), result);
    }
    let minimal_boxes = if t.is_empty() {
        Vec::new()
    } else {
        t.minimal_boxes()?
            .into_iter()
            .map(|c| BoxRef { row: c.row, col: c.col })
            .collect()
    };
    Ok(Report {
        shape: t.shape().parts().to_vec(),
        weights: t.rows().to_vec(),
        omega: t.omega(),
        minimal_boxes,
        verdict: verdict(&methods),
        methods,
    })
}

pub fn read_tableau(path: &Path) -> Result<Tableau> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    Tableau::parse(&text)
}

pub fn cmd_compute(path: &Path, config: &RunConfig) -> Result<Report> {
    compute_report(&read_tableau(path)?, config)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FerrersReport {
    pub partition: Vec<usize>,
    pub conjugate: Vec<usize>,
    pub alpha: usize,
    #[serde(flatten)]
    pub invariants: FerrersInvariants,
}

impl FerrersReport {
    pub fn to_text(&self) -> String {
        let f = &self.invariants;
        format!(
            "partition: {}\nconjugate: {}\nheight: {}\ndimension: {}\nprojective dimension: {}\ndepth: {}\nregularity: {}\ncohen-macaulay: {}\n",
            display_list(&self.partition),
            display_list(&self.conjugate),
            f.height,
            f.dimension,
            f.projective_dimension,
            f.depth,
            f.regularity,
            f.is_cohen_macaulay
        )
    }
}

pub fn cmd_ferrers(partition: &str) -> Result<FerrersReport> {
    let p: Partition = partition.parse()?;
    Ok(FerrersReport {
        invariants: ferrers_invariants(&p)?,
        alpha: crate::formulas::alpha(&p)?,
        conjugate: p.conjugate().parts().to_vec(),
        partition: p.parts().to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u64,
    pub rank: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub n_vars: usize,
    pub route: BettiRoute,
    pub depth: usize,
    pub reg: u64,
    pub pd: usize,
    pub entries: Vec<BettiEntry>,
    pub table: String,
}

pub fn betti_report(t: &Tableau, config: &RunConfig) -> Result<BettiReport> {
    config.guards.validate()?;
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    let o = oracle_invariants(&MonomialIdeal::tableau_ideal(t), config.field, &config.guards)?;
    Ok(BettiReport {
        n_vars: o.table.n_vars(),
        route: o.route,
        depth: o.depth,
        reg: o.regularity,
        pd: o.projective_dimension,
        entries: o
            .table
            .entries()
            .map(|((i, j), rank)| BettiEntry { i, j, rank })
            .collect(),
        table: o.table.to_text(),
    })
}

pub fn cmd_betti(path: &Path, config: &RunConfig) -> Result<BettiReport> {
    betti_report(&read_tableau(path)?, config)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomBounds {
    pub count: usize,
    pub max_rows: usize,
    pub max_cols: usize,
    pub max_weight: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub original: Vec<Vec<u32>>,
    pub shrunk: Vec<Vec<u32>>,
    pub report: Report,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomCheckSummary {
    pub checked: usize,
    pub disagreement: Option<Counterexample>,
}

impl RandomCheckSummary {
    pub fn message(&self) -> String {
        match &self.disagreement {
            None => format!("{} instances agree", self.checked),
            Some(c) => format!(
                "disagreement after {} instances; shrunk to:\n{}",
                self.checked,
                Tableau::from_rows(c.shrunk.clone()).map_or(String::new(), |t| t.to_string())
            ),
        }
    }
}

/// A random filling with at most `max_rows` rows, first row at most
/// `max_cols`, weights in `1..=max_weight`.
pub fn random_tableau<R: Rng>(rng: &mut R, max_rows: usize, max_cols: usize, max_weight: u32) -> Tableau {
    let n = rng.gen_range(1..=max_rows);
    let mut prev = max_cols;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let len = rng.gen_range(1..=prev);
        rows.push((0..len).map(|_| rng.gen_range(1..=max_weight)).collect());
        prev = len;
    }
    Tableau::from_rows(rows).expect("valid by construction")
}

/// Greedy shrinking while `fails` stays true: lower weights toward 1 one box
/// at a time, then drop the last row or the last column.
pub fn shrink<F: FnMut(&Tableau) -> bool>(t: &Tableau, mut fails: F) -> Tableau {
    let mut current = t.relabeled();
    loop {
        let mut progressed = false;
        for i in 0..current.n_rows() {
            for j in 0..current.rows()[i].len() {
                while current.rows()[i][j] > 1 {
                    let mut rows = current.rows().to_vec();
                    rows[i][j] -= 1;
                    let cand = Tableau::from_rows(rows).expect("same shape");
                    if !fails(&cand) {
                        break;
                    }
                    current = cand;
                    progressed = true;
                }
            }
        }
        if progressed {
            continue;
        }
        let candidates = [
            current.delete_row(current.n_rows()).ok(),
            current.delete_column(current.n_cols()).ok(),
        ];
        match candidates
            .into_iter()
            .flatten()
            .map(|(c, _)| c.relabeled())
            .find(|c| !c.is_empty() && fails(c))
        {
            Some(c) => current = c,
            None => return current,
        }
    }
}

pub fn cmd_random_check(bounds: &RandomBounds, config: &RunConfig) -> Result<RandomCheckSummary> {
    let g = &config.guards;
    g.validate()?;
    if bounds.max_rows == 0 || bounds.max_cols == 0 || bounds.max_weight == 0 {
        return Err(Error::InvalidArgument("shape and weight bounds must be positive".into()));
    }
    let boxes = bounds.max_rows * bounds.max_cols;
    if boxes > g.max_boxes {
        return Err(Error::guard("max-boxes", g.max_boxes, boxes));
    }
    let vars = bounds.max_rows + bounds.max_cols;
    if vars > g.max_ground {
        return Err(Error::guard("max-ground", g.max_ground, vars));
    }
    let run = RunConfig {
        method: MethodSelector::All,
        ..config.clone()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for k in 0..bounds.count {
        let t = random_tableau(&mut rng, bounds.max_rows, bounds.max_cols, bounds.max_weight);
        let report = compute_report(&t, &run)?;
        if report.verdict == Verdict::Disagree {
            let shrunk = shrink(&t, |c| {
                compute_report(c, &run).is_ok_and(|r| r.verdict == Verdict::Disagree)
            });
            let report = compute_report(&shrunk, &run)?;
            return Ok(RandomCheckSummary {
                checked: k + 1,
                disagreement: Some(Counterexample {
                    original: t.rows().to_vec(),
                    shrunk: shrunk.rows().to_vec(),
                    report,
                }),
            });
        }
    }
    Ok(RandomCheckSummary {
        checked: bounds.count,
        disagreement: None,
    })
}
