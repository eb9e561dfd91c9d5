//! Partitions, weighted fillings of Young diagrams and admissible collections
//! of marked boxes.
//!
//! Rows and columns are 1-based throughout, matching the usual `(i, j)` box
//! convention. A [`Tableau`] remembers the labels its rows and columns had in
//! the filling it was cut out of, so that witnesses produced on residual
//! tableaux can be reported in the coordinates of the original input.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest weight accepted by the parser and the constructors.
pub const MAX_WEIGHT: u32 = 1_000_000;

/// A weakly decreasing sequence of positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..=n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of rows `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of the first row, `m = λ₁` (0 for the empty partition).
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λᵢ` with the convention `λᵢ = 0` past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `μⱼ = #{i : λᵢ ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let m = self.first();
        let parts = (1..=m)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_staircase(&self) -> bool {
        let n = self.parts.len();
        self.parts.iter().enumerate().all(|(i, &p)| p == n - i)
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn all_of_size(k: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition with at most `k` boxes (including the empty one).
    pub fn all_up_to(k: usize) -> Vec<Partition> {
        (0..=k).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses literals such as `4,4,3,2,1` (parentheses and spaces allowed).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(Partition::default());
        }
        let mut parts = Vec::new();
        let mut column = 1;
        for token in trimmed.split(',') {
            let value = token.trim();
            let p: usize = value.parse().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("expected a positive integer, found `{value}`"),
            })?;
            if p == 0 {
                return Err(Error::Parse {
                    line: 1,
                    column,
                    message: "partition parts must be positive".into(),
                });
            }
            parts.push(p);
            column += token.len() + 1;
        }
        Partition::new(parts).map_err(|e| Error::Parse {
            line: 1,
            column: 1,
            message: match e {
                Error::InvalidArgument(m) => m,
                other => other.to_string(),
            },
        })
    }
}

/// A box position `(row, col)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A positive-integer filling of a Young diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
}

impl Tableau {
    /// Builds a filling from its rows, top to bottom.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidArgument("rows must be nonempty".into()));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidArgument(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        if rows.iter().flatten().any(|&w| w == 0 || w > MAX_WEIGHT) {
            return Err(Error::InvalidArgument(format!(
                "weights must be integers in 1..={MAX_WEIGHT}"
            )));
        }
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        Ok(Tableau {
            rows,
            row_labels: (1..=n).collect(),
            col_labels: (1..=m).collect(),
        })
    }

    /// The filling of `shape` with every weight equal to `w`.
    pub fn constant(shape: &Partition, w: u32) -> Result<Self> {
        Tableau::from_rows(shape.parts().iter().map(|&l| vec![w; l]).collect())
    }

    pub fn empty() -> Self {
        Tableau {
            rows: Vec::new(),
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn box_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Weight of box `(i, j)` in local coordinates, if the box exists.
    pub fn weight(&self, i: usize, j: usize) -> Option<u32> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1)?.get(j - 1).copied()
    }

    /// All boxes with their weights, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &w)| (Cell::new(i + 1, j + 1), w))
        })
    }

    /// The minimum weight `ω`, or `None` for the empty tableau.
    pub fn omega(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().min()
    }

    pub fn row_label(&self, i: usize) -> usize {
        self.row_labels[i - 1]
    }

    pub fn col_label(&self, j: usize) -> usize {
        self.col_labels[j - 1]
    }

    /// Translates a local cell into the coordinates of the original filling.
    pub fn original(&self, cell: Cell) -> Cell {
        Cell::new(self.row_label(cell.row), self.col_label(cell.col))
    }

    /// The minimal boxes: boxes of weight `ω` with no other box of weight `ω`
    /// weakly north-west of them. Sorted by `(row, col)`.
    pub fn minimal_boxes(&self) -> Result<Vec<Cell>> {
        let omega = self.omega().ok_or(Error::EmptyTableau)?;
        let mut found: Vec<Cell> = Vec::new();
        // Scanning row by row, a box of weight ω is minimal exactly when no
        // earlier-found minimal box sits weakly north-west of it, since any
        // ω-box north-west of it is dominated by some minimal box.
        for (cell, w) in self.boxes() {
            if w != omega {
                continue;
            }
            let dominated = found
                .iter()
                .any(|c| c.row <= cell.row && c.col <= cell.col);
            if !dominated {
                found.push(cell);
            }
        }
        Ok(found)
    }

    /// Deletes row `gamma`; returns the residual filling and the number of
    /// columns that became empty.
    pub fn delete_row(&self, gamma: usize) -> Result<(Tableau, usize)> {
        let n = self.n_rows();
        if gamma == 0 || gamma > n {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index: gamma,
                max: n,
            });
        }
        let mut rows = self.rows.clone();
        rows.remove(gamma - 1);
        let mut row_labels = self.row_labels.clone();
        row_labels.remove(gamma - 1);
        let new_m = rows.first().map_or(0, Vec::len);
        let freed = self.n_cols() - new_m;
        let col_labels = self.col_labels[..new_m].to_vec();
        Ok((
            Tableau {
                rows,
                row_labels,
                col_labels,
            },
            freed,
        ))
    }

    /// Deletes column `delta`; returns the residual filling and the number of
    /// rows that became empty.
    pub fn delete_column(&self, delta: usize) -> Result<(Tableau, usize)> {
        let m = self.n_cols();
        if delta == 0 || delta > m {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: delta,
                max: m,
            });
        }
        let mut rows = Vec::with_capacity(self.n_rows());
        let mut row_labels = Vec::with_capacity(self.n_rows());
        let mut freed = 0;
        for (row, &label) in self.rows.iter().zip(&self.row_labels) {
            let mut row = row.clone();
            if row.len() >= delta {
                row.remove(delta - 1);
            }
            if row.is_empty() {
                freed += 1;
            } else {
                rows.push(row);
                row_labels.push(label);
            }
        }
        let mut col_labels = self.col_labels.clone();
        col_labels.remove(delta - 1);
        Ok((
            Tableau {
                rows,
                row_labels,
                col_labels,
            },
            freed,
        ))
    }

    /// Deletes the line selected by a mark through `cell`.
    pub fn delete_line(&self, cell: Cell, mark: Mark) -> Result<(Tableau, usize)> {
        match mark {
            Mark::Row => self.delete_row(cell.row),
            Mark::Column => self.delete_column(cell.col),
        }
    }

    /// Weakly increasing along every row and down every column.
    pub fn is_weakly_increasing(&self) -> bool {
        self.boxes().all(|(c, w)| {
            self.weight(c.row, c.col + 1).is_none_or(|r| w <= r)
                && self.weight(c.row + 1, c.col).is_none_or(|d| w <= d)
        })
    }

    /// Same filling with fresh labels `1..n`, `1..m`.
    pub fn relabeled(&self) -> Tableau {
        Tableau {
            rows: self.rows.clone(),
            row_labels: (1..=self.n_rows()).collect(),
            col_labels: (1..=self.n_cols()).collect(),
        }
    }

    /// Parses the text format: one row per line, whitespace-separated positive
    /// integers, `#` starting a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let content = raw.split('#').next().unwrap_or("");
            let mut row = Vec::new();
            let mut first_column = None;
            for (column, token) in tokens_with_columns(content) {
                first_column.get_or_insert(column);
                let weight: u64 = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    column,
                    message: format!("expected a positive integer, found `{token}`"),
                })?;
                if weight == 0 || weight > MAX_WEIGHT as u64 {
                    return Err(Error::Parse {
                        line: line_no,
                        column,
                        message: format!("weights must be integers in 1..={MAX_WEIGHT}"),
                    });
                }
                row.push(weight as u32);
            }
            let Some(column) = first_column else { continue };
            if let Some(prev) = rows.last() {
                if prev.len() < row.len() {
                    return Err(Error::Parse {
                        line: line_no,
                        column,
                        message: "row lengths must be weakly decreasing".into(),
                    });
                }
            }
            rows.push(row);
        }
        Tableau::from_rows(rows)
    }
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut col = 0;
    let mut start_col = 0;
    for (idx, ch) in line.char_indices() {
        col += 1;
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((start_col, &line[s..idx]));
            }
        } else if start.is_none() {
            start = Some(idx);
            start_col = col;
        }
    }
    if let Some(s) = start {
        out.push((start_col, &line[s..]));
    }
    out.into_iter()
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tableau::parse(s)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let s: Vec<String> = row.iter().map(|w| w.to_string()).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// Which line a marked box selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mark {
    #[serde(rename = "r")]
    Row,
    #[serde(rename = "c")]
    Column,
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mark::Row => "r",
            Mark::Column => "c",
        })
    }
}

/// A box in original coordinates together with its mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedBox {
    pub row: usize,
    pub col: usize,
    pub mark: Mark,
}

impl MarkedBox {
    pub fn new(row: usize, col: usize, mark: Mark) -> Self {
        MarkedBox { row, col, mark }
    }
}

impl fmt::Display for MarkedBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.mark)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CollectionStep {
    pub marked: MarkedBox,
    pub weight: u32,
    /// Lines of the residual tableau emptied by this step (`dₜ`).
    pub freed: usize,
}

/// An ordered sequence of marked boxes whose lines cover the filling, each box
/// minimal in the residual left by its predecessors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AdmissibleCollection {
    steps: Vec<CollectionStep>,
}

impl AdmissibleCollection {
    pub fn from_steps(steps: Vec<CollectionStep>) -> Self {
        AdmissibleCollection { steps }
    }

    pub fn steps(&self) -> &[CollectionStep] {
        &self.steps
    }

    pub fn marked_boxes(&self) -> Vec<MarkedBox> {
        self.steps.iter().map(|s| s.marked).collect()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `d(M,Y)`: total number of freed variables.
    pub fn depth_statistic(&self) -> u64 {
        self.steps.iter().map(|s| s.freed as u64).sum()
    }

    /// `r(M,Y) = Σₜ (wₜ − 1) + w_s`.
    pub fn regularity_statistic(&self) -> u64 {
        let Some(last) = self.steps.last() else {
            return 0;
        };
        self.steps
            .iter()
            .map(|s| u64::from(s.weight) - 1)
            .sum::<u64>()
            + u64::from(last.weight)
    }

    /// Replays the collection on `t` (given in the same original coordinates)
    /// and checks admissibility and the recorded per-step statistics.
    pub fn is_admissible_for(&self, t: &Tableau) -> bool {
        let mut current = t.clone();
        for step in &self.steps {
            if current.is_empty() {
                return false;
            }
            let Ok(minimal) = current.minimal_boxes() else {
                return false;
            };
            let Some(&cell) = minimal
                .iter()
                .find(|c| current.original(**c) == Cell::new(step.marked.row, step.marked.col))
            else {
                return false;
            };
            if current.weight(cell.row, cell.col) != Some(step.weight) {
                return false;
            }
            let Ok((next, freed)) = current.delete_line(cell, step.marked.mark) else {
                return false;
            };
            if freed != step.freed {
                return false;
            }
            current = next;
        }
        current.is_empty()
    }
}

impl fmt::Display for AdmissibleCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.marked.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Depth-first walk over all admissible collections of `t`. Branching order:
/// minimal boxes by `(row, col)`, mark `r` before `c`. Stops with a guard
/// error once more than `max_count` collections have been produced.
pub fn visit_admissible_collections<F>(t: &Tableau, max_count: usize, mut visit: F) -> Result<usize>
where
    F: FnMut(&AdmissibleCollection),
{
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    fn walk<F: FnMut(&AdmissibleCollection)>(
        t: &Tableau,
        path: &mut Vec<CollectionStep>,
        count: &mut usize,
        max_count: usize,
        visit: &mut F,
    ) -> Result<()> {
        if t.is_empty() {
            *count += 1;
            if *count > max_count {
                return Err(Error::guard("max-collections", max_count, *count));
            }
            visit(&AdmissibleCollection {
                steps: path.clone(),
            });
            return Ok(());
        }
        for cell in t.minimal_boxes()? {
            let weight = t.weight(cell.row, cell.col).expect("minimal box exists");
            let orig = t.original(cell);
            for mark in [Mark::Row, Mark::Column] {
                let (next, freed) = t.delete_line(cell, mark)?;
                path.push(CollectionStep {
                    marked: MarkedBox::new(orig.row, orig.col, mark),
                    weight,
                    freed,
                });
                walk(&next, path, count, max_count, visit)?;
                path.pop();
            }
        }
        Ok(())
    }
    let mut count = 0;
    walk(t, &mut Vec::new(), &mut count, max_count, &mut visit)?;
    Ok(count)
}

/// Collects every admissible collection of `t` (see
/// [`visit_admissible_collections`]).
pub fn enumerate_admissible_collections(
    t: &Tableau,
    max_count: usize,
) -> Result<Vec<AdmissibleCollection>> {
    let mut out = Vec::new();
    visit_admissible_collections(t, max_count, |c| out.push(c.clone()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![4, 4, 3, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[5, 4, 3, 2]);
        assert!(Partition::default().conjugate().is_empty());
        assert_eq!(Partition::staircase(4).conjugate(), Partition::staircase(4));
    }

    #[test]
    fn conjugate_is_an_involution_up_to_twelve_boxes() {
        for p in Partition::all_up_to(12) {
            assert_eq!(p.conjugate().conjugate(), p, "{p}");
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|k| Partition::all_of_size(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn staircase_detection() {
        assert!(Partition::new(vec![3, 2, 1]).unwrap().is_staircase());
        assert!(!Partition::new(vec![2, 2]).unwrap().is_staircase());
        assert!(Partition::default().is_staircase());
    }

    #[test]
    fn partition_literal() {
        let p: Partition = "4,4,3,2,1".parse().unwrap();
        assert_eq!(p.parts(), &[4, 4, 3, 2, 1]);
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn minimal_boxes_examples() {
        let t = tab(&[&[3, 4, 2, 6, 7], &[4, 2, 4, 6], &[2, 3], &[2, 4], &[5]]);
        assert_eq!(
            t.minimal_boxes().unwrap(),
            vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]
        );
        let t = tab(&[&[3, 1, 5, 6], &[2, 3, 4, 6], &[2, 3, 5], &[2, 4], &[3]]);
        assert_eq!(t.minimal_boxes().unwrap(), vec![Cell::new(1, 2)]);
        let t = Tableau::constant(&Partition::new(vec![3, 2, 2]).unwrap(), 5).unwrap();
        assert_eq!(t.minimal_boxes().unwrap(), vec![Cell::new(1, 1)]);
        assert_eq!(Tableau::empty().minimal_boxes(), Err(Error::EmptyTableau));
    }

    #[test]
    fn delete_row_examples() {
        let t = tab(&[&[3, 1, 5, 6], &[2, 3, 4, 6], &[2, 3, 5], &[2, 4], &[3]]);
        let (r, freed) = t.delete_row(1).unwrap();
        assert_eq!(r.shape().parts(), &[4, 3, 2, 1]);
        assert_eq!(freed, 0);

        let (r, freed) = tab(&[&[2, 3]]).delete_row(1).unwrap();
        assert!(r.is_empty());
        assert_eq!(freed, 2);

        let (r, freed) = tab(&[&[2, 1], &[1]]).delete_row(2).unwrap();
        assert_eq!(r.rows(), &[vec![2, 1]]);
        assert_eq!(freed, 0);

        assert!(matches!(
            t.delete_row(6),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn delete_column_examples() {
        let (r, freed) = tab(&[&[2], &[1]]).delete_column(1).unwrap();
        assert!(r.is_empty());
        assert_eq!(freed, 2);

        let (r, freed) = tab(&[&[2, 1], &[1]]).delete_column(1).unwrap();
        assert_eq!(r.rows(), &[vec![1]]);
        assert_eq!(r.original(Cell::new(1, 1)), Cell::new(1, 2));
        assert_eq!(freed, 1);

        let t = tab(&[&[2, 2, 5, 4], &[3, 2, 4], &[4, 6], &[3]]);
        let (r, freed) = t.delete_column(2).unwrap();
        assert_eq!(r.shape().parts(), &[3, 2, 1, 1]);
        assert_eq!(freed, 0);
        assert!(t.delete_column(0).is_err());
    }

    #[test]
    fn labels_follow_deletions() {
        let t = tab(&[&[2, 2, 5, 4], &[3, 2, 4], &[4, 6], &[3]]);
        let (r, _) = t.delete_row(1).unwrap();
        let (r, _) = r.delete_column(2).unwrap();
        assert_eq!(r.original(Cell::new(1, 1)), Cell::new(2, 1));
        assert_eq!(r.original(Cell::new(1, 2)), Cell::new(2, 3));
        assert_eq!(r.original(Cell::new(2, 1)), Cell::new(3, 1));
    }

    #[test]
    fn weakly_increasing_examples() {
        assert!(tab(&[&[1, 2], &[2]]).is_weakly_increasing());
        assert!(!tab(&[&[3, 1]]).is_weakly_increasing());
        assert!(Tableau::empty().is_weakly_increasing());
        assert!(!tab(&[&[2], &[1]]).is_weakly_increasing());
    }

    #[test]
    fn parse_and_print() {
        let t = Tableau::parse("# comment\n3 1 5 6\n 2 3 4 6  # trailing\n\n2 3 5\n2 4\n3\n").unwrap();
        assert_eq!(t.shape().parts(), &[4, 4, 3, 2, 1]);
        assert_eq!(t.to_string(), "3 1 5 6\n2 3 4 6\n2 3 5\n2 4\n3\n");
        assert_eq!(Tableau::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = Tableau::parse("1 2\n1 2 3\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 1,
                message: "row lengths must be weakly decreasing".into()
            }
        );
        let err = Tableau::parse("1 2\n  1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 5, .. }), "{err}");
        let err = Tableau::parse("0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }));
        assert!(Tableau::parse("").unwrap().is_empty());
    }

    #[test]
    fn single_box_has_two_collections() {
        let all = enumerate_admissible_collections(&tab(&[&[4]]), usize::MAX).unwrap();
        assert_eq!(all.len(), 2);
        for c in &all {
            assert_eq!(c.regularity_statistic(), 7);
            assert_eq!(c.depth_statistic(), 1);
        }
    }

    #[test]
    fn single_row_collections() {
        let all = enumerate_admissible_collections(&tab(&[&[2, 3]]), usize::MAX).unwrap();
        let got: Vec<Vec<MarkedBox>> = all.iter().map(|c| c.marked_boxes()).collect();
        use Mark::*;
        assert_eq!(
            got,
            vec![
                vec![MarkedBox::new(1, 1, Row)],
                vec![MarkedBox::new(1, 1, Column), MarkedBox::new(1, 2, Row)],
                vec![MarkedBox::new(1, 1, Column), MarkedBox::new(1, 2, Column)],
            ]
        );
    }

    #[test]
    fn collection_guard() {
        let t = tab(&[&[2, 3]]);
        let err = enumerate_admissible_collections(&t, 2).unwrap_err();
        assert_eq!(
            err,
            Error::Guard {
                guard: "max-collections",
                limit: 2,
                reached: 3
            }
        );
        assert_eq!(
            enumerate_admissible_collections(&Tableau::empty(), 10),
            Err(Error::EmptyTableau)
        );
    }

    #[test]
    fn worked_collection_statistics() {
        use Mark::*;
        let t = tab(&[&[2, 2, 5, 4], &[3, 2, 4], &[4, 6], &[3]]);
        let wanted = vec![
            MarkedBox::new(1, 1, Row),
            MarkedBox::new(2, 2, Row),
            MarkedBox::new(4, 1, Row),
            MarkedBox::new(3, 1, Column),
            MarkedBox::new(3, 2, Column),
        ];
        let all = enumerate_admissible_collections(&t, usize::MAX).unwrap();
        let m = all
            .iter()
            .find(|c| c.marked_boxes() == wanted)
            .expect("collection enumerated");
        assert_eq!(m.depth_statistic(), 3);
        assert_eq!(m.regularity_statistic(), 18);
        assert!(all.iter().all(|c| c.is_admissible_for(&t)));
    }
}
