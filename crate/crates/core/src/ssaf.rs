//! Semi-skyline augmented fillings.
//!
//! A filling of a composition shape sits on a basement row (row 0). Column
//! `j` holds `shape_j` cells in rows `1..=shape_j`. A filling is
//! semi-skyline when every column weakly decreases going up (the basement
//! included) and every type A and type B triple is an inversion triple.
//!
//! The functions in this module that take a `basement` slice work for any
//! basement; [`Ssaf`] fixes it to `1..=n` and [`crate::PermutedSsaf`] to a
//! permutation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{check_index, WeakComposition, Word};
use crate::polynomial::Polynomial;
use crate::tableaux::{rightmost_unmatched_masked, Ssyt};
use crate::{Error, Result};

/// A cell of an augmented diagram; `row == 0` is the basement and `col` is
/// 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

/// Whether two distinct cells attack: same row, or adjacent rows with the
/// upper cell strictly to the right of the lower one.
pub fn is_attacking(a: Cell, b: Cell) -> bool {
    if a == b {
        return false;
    }
    let (upper, lower) = if a.row >= b.row { (a, b) } else { (b, a) };
    upper.row == lower.row || (upper.row == lower.row + 1 && lower.col < upper.col)
}

/// `I(x, y) = 1` if `x > y`, else `0`.
pub fn inversion_indicator(x: u32, y: u32) -> i32 {
    i32::from(x > y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TripleKind {
    /// `a1` above `a3` in a column at least as tall as the column of `a2`,
    /// with `a2` to the right in the row of `a1`.
    A,
    /// `a1` and `a2` in one row, `a3` above `a2`, the column of `a2`
    /// strictly taller than that of `a1`.
    B,
}

/// A triple `(a1, a2, a3)` with its entries and verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub kind: TripleKind,
    pub cells: [Cell; 3],
    pub entries: [u32; 3],
    pub inversion: bool,
}

fn is_inversion(kind: TripleKind, [x1, x2, x3]: [u32; 3]) -> bool {
    let i = inversion_indicator;
    match kind {
        TripleKind::A => i(x1, x2) + i(x2, x3) - i(x1, x3) == 1,
        TripleKind::B => i(x3, x1) + i(x1, x2) - i(x3, x2) == 1,
    }
}

/// Result of validating a filling.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub triples: Vec<Triple>,
    /// Cells whose entry exceeds the entry directly below.
    pub column_violations: Vec<Cell>,
}

impl TripleReport {
    pub fn is_valid(&self) -> bool {
        self.column_violations.is_empty() && self.triples.iter().all(|t| t.inversion)
    }

    pub fn failed_triples(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter().filter(|t| !t.inversion)
    }

    fn describe(&self) -> String {
        if let Some(c) = self.column_violations.first() {
            return format!("column {} increases upward at row {}", c.col, c.row);
        }
        match self.failed_triples().next() {
            Some(t) => format!("type {:?} triple {:?} with entries {:?} is not an inversion triple", t.kind, t.cells, t.entries),
            None => "valid".into(),
        }
    }
}

pub(crate) fn entry_at(basement: &[u32], columns: &[Vec<u32>], cell: Cell) -> Option<u32> {
    let j = cell.col.checked_sub(1)?;
    match cell.row {
        0 => basement.get(j).copied(),
        r => columns.get(j)?.get(r - 1).copied(),
    }
}

/// Cells in reading order: highest row first, left to right within a row.
pub(crate) fn reading_cells(columns: &[Vec<u32>], include_basement: bool) -> Vec<Cell> {
    let top = columns.iter().map(Vec::len).max().unwrap_or(0);
    let bottom = usize::from(!include_basement);
    let mut cells = Vec::new();
    for row in (bottom..=top).rev() {
        for (j, col) in columns.iter().enumerate() {
            if row <= col.len() {
                cells.push(Cell::new(row, j + 1));
            }
        }
    }
    cells
}

/// All type A and type B triples of the augmented diagram with their
/// verdicts, plus any column that increases going up.
pub fn validate_filling(basement: &[u32], columns: &[Vec<u32>]) -> TripleReport {
    let mut report = TripleReport::default();
    let at = |r: usize, c: usize| entry_at(basement, columns, Cell::new(r, c)).unwrap();
    for (j, col) in columns.iter().enumerate() {
        for r in 1..=col.len() {
            if at(r, j + 1) > at(r - 1, j + 1) {
                report.column_violations.push(Cell::new(r, j + 1));
            }
        }
    }
    let n = columns.len();
    for j1 in 1..=n {
        for j2 in j1 + 1..=n {
            let (h1, h2) = (columns[j1 - 1].len(), columns[j2 - 1].len());
            if h1 >= h2 {
                for r in 1..=h2 {
                    let cells = [Cell::new(r, j1), Cell::new(r, j2), Cell::new(r - 1, j1)];
                    report.triples.push(make_triple(TripleKind::A, cells, &at));
                }
            } else {
                for r in 0..=h1 {
                    let cells = [Cell::new(r, j1), Cell::new(r, j2), Cell::new(r + 1, j2)];
                    report.triples.push(make_triple(TripleKind::B, cells, &at));
                }
            }
        }
    }
    report
}

fn make_triple(kind: TripleKind, cells: [Cell; 3], at: &impl Fn(usize, usize) -> u32) -> Triple {
    let entries = cells.map(|c| at(c.row, c.col));
    Triple { kind, cells, entries, inversion: is_inversion(kind, entries) }
}

/// Every semi-skyline filling of `shape` over `basement`.
///
/// Cells are filled bottom row first, left to right. Each triple is tested
/// as soon as its last cell is placed, and the column condition bounds every
/// entry by the one below it.
pub fn enumerate_fillings(basement: &[u32], shape: &[u32]) -> Vec<Vec<Vec<u32>>> {
    assert_eq!(basement.len(), shape.len(), "basement and shape lengths differ");
    let heights: Vec<usize> = shape.iter().map(|&h| h as usize).collect();
    let top = heights.iter().copied().max().unwrap_or(0);
    let order: Vec<Cell> = (1..=top)
        .flat_map(|r| {
            let heights = &heights;
            (1..=heights.len()).filter(move |&j| heights[j - 1] >= r).map(move |j| Cell::new(r, j))
        })
        .collect();
    let mut columns: Vec<Vec<u32>> = heights.iter().map(|&h| Vec::with_capacity(h)).collect();
    let mut out = Vec::new();
    fill(basement, &heights, &order, 0, &mut columns, &mut out);
    out
}

fn fill(
    basement: &[u32],
    heights: &[usize],
    order: &[Cell],
    k: usize,
    columns: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    let Some(&cell) = order.get(k) else {
        debug_assert!(validate_filling(basement, columns).is_valid());
        out.push(columns.clone());
        return;
    };
    let (r, j) = (cell.row, cell.col);
    let below = entry_at(basement, columns, Cell::new(r - 1, j)).unwrap();
    for v in 1..=below {
        columns[j - 1].push(v);
        if placement_ok(basement, heights, columns, r, j) {
            fill(basement, heights, order, k + 1, columns, out);
        }
        columns[j - 1].pop();
    }
}

// Triples completed by the cell just placed at (r, j).
fn placement_ok(basement: &[u32], heights: &[usize], columns: &[Vec<u32>], r: usize, j: usize) -> bool {
    let at = |r: usize, c: usize| entry_at(basement, columns, Cell::new(r, c)).unwrap();
    let v = at(r, j);
    for j1 in 1..j {
        let h1 = heights[j1 - 1];
        if h1 >= heights[j - 1] {
            // (r, j) is a2 of a type A triple
            if !is_inversion(TripleKind::A, [at(r, j1), v, at(r - 1, j1)]) {
                return false;
            }
        } else if r - 1 <= h1 {
            // (r, j) is a3 of a type B triple
            if !is_inversion(TripleKind::B, [at(r - 1, j1), at(r - 1, j), v]) {
                return false;
            }
        }
    }
    true
}

/// Greedy row placement: rows bottom-up, entries of each row largest first,
/// each on the leftmost column whose top cell lies in the previous row and
/// is at least the entry.
pub fn place_rows(basement: &[u32], rows: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let mut columns: Vec<Vec<u32>> = vec![Vec::new(); basement.len()];
    for (k, row) in rows.iter().enumerate() {
        let r = k + 1;
        let mut entries = row.clone();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        for alpha in entries {
            let target = (0..columns.len()).find(|&j| {
                columns[j].len() == r - 1
                    && entry_at(basement, &columns, Cell::new(r - 1, j + 1)).unwrap() >= alpha
            });
            match target {
                Some(j) => columns[j].push(alpha),
                None => return Err(Error::PlacementFailed { row: r, entry: alpha }),
            }
        }
    }
    Ok(columns)
}

/// Row contents bottom-up, each sorted increasingly.
pub(crate) fn rows_of_columns(columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let top = columns.iter().map(Vec::len).max().unwrap_or(0);
    (1..=top)
        .map(|r| {
            let mut row: Vec<u32> = columns.iter().filter_map(|c| c.get(r - 1).copied()).collect();
            row.sort_unstable();
            row
        })
        .collect()
}

pub(crate) fn content_of_columns(columns: &[Vec<u32>], n: usize) -> WeakComposition {
    let mut parts = vec![0; n];
    for &x in columns.iter().flatten() {
        parts[x as usize - 1] += 1;
    }
    WeakComposition::new(parts)
}

/// A semi-skyline augmented filling over the basement `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSsaf", into = "RawSsaf")]
pub struct Ssaf {
    columns: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawSsaf {
    shape: Vec<u32>,
    columns: Vec<Vec<u32>>,
}

impl TryFrom<RawSsaf> for Ssaf {
    type Error = Error;
    fn try_from(raw: RawSsaf) -> Result<Self> {
        check_shape(&raw.shape, &raw.columns)?;
        Ssaf::new(raw.columns)
    }
}

impl From<Ssaf> for RawSsaf {
    fn from(f: Ssaf) -> Self {
        RawSsaf { shape: f.shape().parts().to_vec(), columns: f.columns }
    }
}

pub(crate) fn check_shape(shape: &[u32], columns: &[Vec<u32>]) -> Result<()> {
    let actual: Vec<u32> = columns.iter().map(|c| c.len() as u32).collect();
    if actual != shape {
        return Err(Error::InvalidFilling(format!(
            "shape {shape:?} does not match column heights {actual:?}"
        )));
    }
    Ok(())
}

fn identity_basement(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

impl Ssaf {
    /// Validates columns (left to right, each bottom-up) as an SSAF.
    pub fn new(columns: Vec<Vec<u32>>) -> Result<Self> {
        let report = validate(&columns);
        if !report.is_valid() {
            return Err(Error::InvalidFilling(report.describe()));
        }
        Ok(Self { columns })
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.columns.iter().map(|c| c.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn content(&self) -> WeakComposition {
        content_of_columns(&self.columns, self.n())
    }

    /// `x^F`.
    pub fn weight(&self) -> Polynomial {
        Polynomial::monomial(&self.content())
    }

    /// The entry at `cell`, basement included.
    pub fn entry(&self, cell: Cell) -> Option<u32> {
        entry_at(&identity_basement(self.n()), &self.columns, cell)
    }

    /// Entries in reading order: top row first, left to right; the basement
    /// comes last when included.
    pub fn reading_word(&self, include_basement: bool) -> Word {
        let basement = identity_basement(self.n());
        reading_cells(&self.columns, include_basement)
            .into_iter()
            .map(|c| entry_at(&basement, &self.columns, c).unwrap())
            .collect()
    }

    /// Row multisets bottom-up, each sorted increasingly.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        rows_of_columns(&self.columns)
    }

    pub fn report(&self) -> TripleReport {
        validate(&self.columns)
    }

    /// The crystal operator on fillings. Entries `i` and `i + 1` sharing a
    /// row cancel; the remaining ones are bracket-matched along the reading
    /// word (`i + 1` opens, `i` closes) and the rightmost unmatched `i`
    /// becomes `i + 1`. The rows are then placed again with [`rho`].
    pub fn theta(&self, i: usize) -> Result<Ssaf> {
        check_index(i, self.n())?;
        let i = i as u32;
        let cells = reading_cells(&self.columns, false);
        let basement = identity_basement(self.n());
        let word: Vec<u32> =
            cells.iter().map(|&c| entry_at(&basement, &self.columns, c).unwrap()).collect();
        let rows = self.rows();
        let paired = |pos: usize| {
            let row = &rows[cells[pos].row - 1];
            row.contains(&i) && row.contains(&(i + 1))
        };
        let Some(pos) = rightmost_unmatched_masked(&word, i, |p| !paired(p)) else {
            return Ok(self.clone());
        };
        let mut rows = rows.clone();
        let row = &mut rows[cells[pos].row - 1];
        let k = row.iter().position(|&x| x == i).unwrap();
        row[k] = i + 1;
        Ok(rho(&rows, self.n()).expect("a crystal move keeps the rows placeable"))
    }
}

/// Validity report for columns over the basement `1..=n`.
pub fn validate(columns: &[Vec<u32>]) -> TripleReport {
    validate_filling(&identity_basement(columns.len()), columns)
}

/// The filling whose column `j` holds only the entry `j`.
pub fn super_filling(shape: &WeakComposition) -> Ssaf {
    let columns = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &h)| vec![j as u32 + 1; h as usize])
        .collect();
    Ssaf { columns }
}

/// All SSAFs of the given shape, in the deterministic enumeration order.
pub fn enumerate_ssaf(shape: &WeakComposition) -> Vec<Ssaf> {
    enumerate_fillings(&identity_basement(shape.len()), shape.parts())
        .into_iter()
        .map(|columns| Ssaf { columns })
        .collect()
}

/// `E_γ(x; 0, 0)`: the sum of the weights of all SSAFs of shape `γ`.
pub fn e_poly(shape: &WeakComposition) -> Polynomial {
    enumerate_ssaf(shape)
        .iter()
        .map(Ssaf::weight)
        .fold(Polynomial::zero(shape.len()), |acc, w| &acc + &w)
}

/// Rebuilds the unique SSAF with the given row multisets (bottom-up).
pub fn rho(rows: &[Vec<u32>], n: usize) -> Result<Ssaf> {
    let columns = place_rows(&identity_basement(n), rows)?;
    Ssaf::new(columns)
}

/// Skyline insertion of a tableau. Columns of `t` are inserted from right
/// to left, each from its smallest entry to its largest.
///
/// Inserting `a`: scan the reading order (basement last) for an entry
/// `b >= a`. If the cell above `b` is empty, `a` goes there. If it holds
/// something smaller than `a`, the two are exchanged and the scan continues
/// with the bumped entry; otherwise the scan just continues.
pub fn psi(t: &Ssyt, n: usize) -> Result<Ssaf> {
    if t.max_entry() as usize > n {
        return Err(Error::VariableCount { expected: n, found: t.max_entry() as usize });
    }
    let basement = identity_basement(n);
    let mut columns = vec![Vec::new(); n];
    for col in t.columns().iter().rev() {
        for &x in col {
            skyline_insert(&basement, &mut columns, x);
        }
    }
    Ok(Ssaf { columns })
}

fn skyline_insert(basement: &[u32], columns: &mut [Vec<u32>], mut alpha: u32) {
    let order = reading_cells(columns, true);
    for cell in order {
        let beta = entry_at(basement, columns, cell).unwrap();
        if beta < alpha {
            continue;
        }
        let col = &mut columns[cell.col - 1];
        if col.len() == cell.row {
            col.push(alpha);
            return;
        }
        let above = col[cell.row];
        if above < alpha {
            col[cell.row] = alpha;
            alpha = above;
        }
    }
    unreachable!("skyline insertion always terminates on the basement");
}

impl fmt::Display for Ssaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(f, &identity_basement(self.n()), &self.columns)
    }
}

/// Augmented diagram, top row first; empty cells as `.` and the basement
/// row in brackets.
pub(crate) fn render(f: &mut fmt::Formatter<'_>, basement: &[u32], columns: &[Vec<u32>]) -> fmt::Result {
    let width = basement.iter().chain(columns.iter().flatten()).max().map_or(1, |m| m.to_string().len());
    let top = columns.iter().map(Vec::len).max().unwrap_or(0);
    for r in (1..=top).rev() {
        let cells: Vec<String> = columns
            .iter()
            .map(|c| match c.get(r - 1) {
                Some(x) => format!(" {x:>width$} "),
                None => format!(" {:>width$} ", "."),
            })
            .collect();
        writeln!(f, "{}", cells.concat().trim_end())?;
    }
    let base: Vec<String> = basement.iter().map(|x| format!("[{x:>width$}]")).collect();
    f.write_str(&base.concat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;
    use crate::tableaux::enumerate_ssyt;
    use std::collections::{BTreeMap, BTreeSet};

    fn comp(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    fn fig5_filling() -> Ssaf {
        Ssaf::new(vec![vec![], vec![2, 2], vec![3, 3, 3, 2], vec![], vec![], vec![6, 5, 4, 1]]).unwrap()
    }

    fn fig5_tableau() -> Ssyt {
        Ssyt::new(vec![vec![1, 2, 2, 3], vec![2, 3, 3, 6], vec![4, 5]]).unwrap()
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(super_filling(&comp(&[1, 0, 2])).reading_word(false), vec![3, 1, 3]);
        assert_eq!(super_filling(&comp(&[1, 0, 2])).reading_word(true), vec![3, 1, 3, 1, 2, 3]);
        assert!(super_filling(&comp(&[0, 0])).reading_word(false).is_empty());
        assert_eq!(fig5_filling().reading_word(false), vec![2, 1, 3, 4, 2, 3, 5, 2, 3, 6]);
    }

    #[test]
    fn attacking_examples() {
        assert!(is_attacking(Cell::new(1, 2), Cell::new(1, 5)));
        assert!(is_attacking(Cell::new(2, 3), Cell::new(1, 1)));
        assert!(!is_attacking(Cell::new(2, 1), Cell::new(1, 1)));
        assert!(!is_attacking(Cell::new(2, 1), Cell::new(1, 3)));
        assert!(!is_attacking(Cell::new(3, 3), Cell::new(1, 1)));
    }

    #[test]
    fn inversion_indicator_examples() {
        assert_eq!(inversion_indicator(3, 2), 1);
        assert_eq!(inversion_indicator(2, 2), 0);
        assert_eq!(inversion_indicator(1, 2), 0);
    }

    #[test]
    fn validate_examples() {
        for n in 1..=4 {
            for size in 0..=6 {
                for gamma in WeakComposition::all(n, size) {
                    assert!(super_filling(&gamma).report().is_valid(), "{gamma}");
                }
            }
        }
        assert!(fig5_filling().report().is_valid());
        let bad = validate(&[vec![1], vec![], vec![1, 2]]);
        assert!(!bad.is_valid());
        assert_eq!(bad.column_violations, vec![Cell::new(2, 3)]);
        // column condition holds but the row-1 entry of column 2 must be 2
        let bad = validate(&[vec![], vec![1]]);
        assert!(bad.column_violations.is_empty());
        assert_eq!(bad.failed_triples().count(), 1);
        assert!(Ssaf::new(vec![vec![], vec![1]]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        for lam in [[2u32, 1, 0], [3, 3, 1], [1, 1, 1]] {
            let all = enumerate_ssaf(&comp(&lam));
            assert_eq!(all, vec![super_filling(&comp(&lam))]);
        }
        let all = enumerate_ssaf(&comp(&[1, 0, 2]));
        assert_eq!(all.len(), 2);
        let weights: BTreeSet<_> = all.iter().map(|f| f.content()).collect();
        assert_eq!(weights, BTreeSet::from([comp(&[1, 1, 1]), comp(&[1, 0, 2])]));
        let all = enumerate_ssaf(&comp(&[0, 1]));
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].columns(), &[vec![], vec![2]]);
    }

    // brute force over every filling whose entries are bounded by the column
    // index, checked with the full validator
    fn brute_force(shape: &WeakComposition) -> Vec<Ssaf> {
        let cells: Vec<(usize, u32)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(j, &h)| (0..h).map(move |_| (j, j as u32 + 1)))
            .collect();
        let mut out = Vec::new();
        let mut digits = vec![1u32; cells.len()];
        loop {
            let mut columns = vec![Vec::new(); shape.len()];
            for (k, &(j, _)) in cells.iter().enumerate() {
                columns[j].push(digits[k]);
            }
            if validate(&columns).is_valid() {
                out.push(Ssaf::new(columns).unwrap());
            }
            let mut k = 0;
            loop {
                if k == cells.len() {
                    out.sort();
                    return out;
                }
                if digits[k] < cells[k].1 {
                    digits[k] += 1;
                    break;
                }
                digits[k] = 1;
                k += 1;
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=4 {
            for size in 0..=5 {
                for gamma in WeakComposition::all(n, size) {
                    let mut fast = enumerate_ssaf(&gamma);
                    fast.sort();
                    assert_eq!(fast, brute_force(&gamma), "{gamma}");
                }
            }
        }
    }

    #[test]
    fn e_poly_examples() {
        assert_eq!(e_poly(&comp(&[2, 1, 0])).to_string(), "x1^2*x2");
        assert_eq!(e_poly(&comp(&[1, 0, 2])).to_string(), "x1*x2*x3 + x1*x3^2");
        assert_eq!(e_poly(&comp(&[1, 2, 0])).to_string(), "x1*x2^2");
    }

    #[test]
    fn valid_fillings_are_non_attacking_and_obey_first_row_lemma() {
        for n in 1..=5 {
            for size in 0..=7 {
                if n == 5 && size > 6 {
                    continue;
                }
                for gamma in WeakComposition::all(n, size) {
                    for f in enumerate_ssaf(&gamma) {
                        let cells = reading_cells(f.columns(), true);
                        for (k, &a) in cells.iter().enumerate() {
                            for &b in &cells[k + 1..] {
                                if is_attacking(a, b) {
                                    assert_ne!(f.entry(a), f.entry(b), "{gamma}: {a:?} {b:?}");
                                }
                            }
                        }
                        for (j, col) in f.columns().iter().enumerate() {
                            if let Some(&x) = col.first() {
                                assert_eq!(x as usize, j + 1);
                            }
                            assert!(col.iter().all(|&x| x as usize <= j + 1));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rho_examples() {
        let f = rho(&[vec![1, 2, 3]], 3).unwrap();
        assert_eq!(f.columns(), &[vec![1], vec![2], vec![3]]);
        let f = rho(&[vec![2, 3], vec![2]], 3).unwrap();
        assert_eq!(f.shape(), comp(&[0, 2, 1]));
        assert_eq!(f.columns(), &[vec![], vec![2, 2], vec![3]]);
        assert_eq!(
            rho(&[vec![2], vec![3]], 3),
            Err(Error::PlacementFailed { row: 2, entry: 3 })
        );
        for n in 1..=4 {
            for size in 0..=6 {
                for gamma in WeakComposition::all(n, size) {
                    let s = super_filling(&gamma);
                    assert_eq!(rho(&s.rows(), n).unwrap(), s);
                }
            }
        }
    }

    #[test]
    fn rows_examples() {
        assert_eq!(super_filling(&comp(&[1, 0, 2])).rows(), vec![vec![1, 3], vec![3]]);
        assert_eq!(super_filling(&comp(&[1, 0, 0])).rows(), vec![vec![1]]);
        assert_eq!(
            fig5_filling().rows(),
            vec![vec![2, 3, 6], vec![2, 3, 5], vec![3, 4], vec![1, 2]]
        );
    }

    #[test]
    fn rho_inverts_rows() {
        for n in 1..=4 {
            for size in 0..=7 {
                for gamma in WeakComposition::all(n, size) {
                    for f in enumerate_ssaf(&gamma) {
                        assert_eq!(rho(&f.rows(), n).unwrap(), f);
                    }
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        let f = psi(&fig5_tableau(), 6).unwrap();
        assert_eq!(f, fig5_filling());
        assert_eq!(f.shape(), comp(&[0, 2, 4, 0, 0, 4]));
        for size in 0..=6 {
            for lam in Partition::all(4, size) {
                let t = Ssyt::yamanouchi(&lam);
                assert_eq!(psi(&t, 4).unwrap(), super_filling(&lam.as_composition()));
            }
        }
        assert!(psi(&fig5_tableau(), 5).is_err());
    }

    #[test]
    fn psi_sends_keys_to_super_fillings() {
        for n in 1..=4 {
            for size in 0..=6 {
                for gamma in WeakComposition::all(n, size) {
                    let k = crate::tableaux::key_of_composition(&gamma);
                    assert_eq!(psi(k.tableau(), n).unwrap(), super_filling(&gamma), "{gamma}");
                }
            }
        }
    }

    #[test]
    fn psi_is_a_weight_preserving_bijection() {
        for n in 1..=5 {
            for size in 0..=7 {
                if n == 5 && size > 6 {
                    continue;
                }
                for lam in Partition::all(n, size) {
                    let mut image = BTreeSet::new();
                    let mut buckets: BTreeMap<WeakComposition, usize> = BTreeMap::new();
                    for t in enumerate_ssyt(&lam, n as u32) {
                        let f = psi(&t, n).unwrap();
                        assert!(f.report().is_valid());
                        assert_eq!(f.content(), t.content(n));
                        assert_eq!(f.shape().sort_desc(), lam);
                        *buckets.entry(f.shape()).or_default() += 1;
                        assert!(image.insert(f), "psi not injective on {lam}");
                    }
                    for gamma in lam.as_composition().rearrangements() {
                        let expected = enumerate_ssaf(&gamma).len();
                        assert_eq!(buckets.get(&gamma).copied().unwrap_or(0), expected, "{gamma}");
                    }
                }
            }
        }
    }

    #[test]
    fn super_examples() {
        assert_eq!(super_filling(&comp(&[2, 1, 0])).columns(), &[vec![1, 1], vec![2], vec![]]);
        assert_eq!(super_filling(&comp(&[0, 2, 4, 0, 0, 4])).weight().to_string(), "x2^2*x3^4*x6^4");
        assert_eq!(super_filling(&comp(&[0, 0, 0])).size(), 0);
    }

    #[test]
    fn theta_examples() {
        let s = super_filling(&comp(&[2, 1, 0]));
        let f = s.theta(2).unwrap();
        assert_eq!(f.shape(), comp(&[2, 0, 1]));
        assert_eq!(f.columns(), &[vec![1, 1], vec![], vec![3]]);
        let f = s.theta(1).unwrap();
        assert_eq!(f.shape(), comp(&[1, 2, 0]));
        assert_eq!(f.columns(), &[vec![1], vec![2, 2], vec![]]);
        // the only row is {2, 3}, so the pair cancels
        let fixed = super_filling(&comp(&[0, 1, 1]));
        assert_eq!(fixed.theta(2).unwrap(), fixed);
        assert!(s.theta(3).is_err());
    }

    #[test]
    fn theta_commutes_with_psi() {
        for n in 2..=4 {
            for size in 0..=5 {
                for lam in Partition::all(n, size) {
                    for t in enumerate_ssyt(&lam, n as u32) {
                        let f = psi(&t, n).unwrap();
                        for i in 1..n {
                            let lhs = psi(&t.crystal_f(i as u32), n).unwrap();
                            assert_eq!(lhs, f.theta(i).unwrap(), "{t:?} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn theta_moves_shape_by_at_most_one_swap() {
        for n in 2..=4 {
            for size in 0..=6 {
                for gamma in WeakComposition::all(n, size) {
                    for f in enumerate_ssaf(&gamma) {
                        for i in 1..n {
                            let g = f.theta(i).unwrap().shape();
                            assert!(g == gamma || g == gamma.swapped(i).unwrap(), "{gamma} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn shape_and_weight() {
        let f = fig5_filling();
        assert_eq!(f.shape(), comp(&[0, 2, 4, 0, 0, 4]));
        assert_eq!(f.shape().size() as usize, f.size());
        let g = comp(&[3, 0, 1]);
        assert_eq!(super_filling(&g).shape(), g);
        assert_eq!(super_filling(&g).weight(), Polynomial::monomial(&g));
    }

    // Orientation characterisation of inversion triples: order the cells by
    // entry, ties broken by reading order, and read off the turning direction
    // of the path through their positions.
    fn by_orientation(kind: TripleKind, cells: [Cell; 3], entries: [u32; 3]) -> bool {
        let reading_rank = |c: Cell| (std::cmp::Reverse(c.row), c.col);
        let mut idx = [0usize, 1, 2];
        idx.sort_by_key(|&k| (entries[k], reading_rank(cells[k])));
        let p = idx.map(|k| (cells[k].col as i64, cells[k].row as i64));
        let cross = (p[1].0 - p[0].0) * (p[2].1 - p[1].1) - (p[1].1 - p[0].1) * (p[2].0 - p[1].0);
        match kind {
            TripleKind::A => cross > 0,
            TripleKind::B => cross < 0,
        }
    }

    #[test]
    fn triple_definitions_agree() {
        let shapes = [
            (TripleKind::A, [Cell::new(2, 1), Cell::new(2, 3), Cell::new(1, 1)]),
            (TripleKind::A, [Cell::new(1, 2), Cell::new(1, 5), Cell::new(0, 2)]),
            (TripleKind::B, [Cell::new(1, 1), Cell::new(1, 4), Cell::new(2, 4)]),
            (TripleKind::B, [Cell::new(0, 2), Cell::new(0, 3), Cell::new(1, 3)]),
        ];
        for (kind, cells) in shapes {
            for a in 1..=4 {
                for b in 1..=4 {
                    for c in 1..=4 {
                        let e = [a, b, c];
                        assert_eq!(is_inversion(kind, e), by_orientation(kind, cells, e), "{kind:?} {e:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        let f = super_filling(&comp(&[1, 0, 2]));
        assert_eq!(f.to_string(), " .  .  3\n 1  .  3\n[1][2][3]");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"shape":[1,0,2],"columns":[[1],[],[3,3]]}"#);
        let back: Ssaf = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Ssaf>(r#"{"shape":[1,0,1],"columns":[[1],[],[3,3]]}"#).is_err());
        assert!(serde_json::from_str::<Ssaf>(r#"{"shape":[0,1],"columns":[[],[1]]}"#).is_err());
    }
}
