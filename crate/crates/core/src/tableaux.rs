//! Semi-standard Young tableaux in French notation, keys, Knuth classes and
//! crystal lowering operators.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{Partition, WeakComposition, Word};
use crate::polynomial::Polynomial;
use crate::{Error, Result};

/// Checks the tableau axioms on raw rows (bottom row first): positive
/// entries, no empty rows, row lengths weakly decreasing upward, rows weakly
/// increasing, columns strictly increasing upward.
pub fn is_valid(rows: &[Vec<u32>]) -> bool {
    validate_rows(rows).is_ok()
}

fn validate_rows(rows: &[Vec<u32>]) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidTableau(msg));
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return bad(format!("row {} is empty", r + 1));
        }
        if row.contains(&0) {
            return bad(format!("row {} has a zero entry", r + 1));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return bad(format!("row {} is not weakly increasing", r + 1));
        }
        if r > 0 {
            let below = &rows[r - 1];
            if row.len() > below.len() {
                return bad(format!("row {} is longer than the row below it", r + 1));
            }
            if let Some(c) = (0..row.len()).find(|&c| row[c] <= below[c]) {
                return bad(format!("column {} is not strictly increasing at row {}", c + 1, r + 1));
            }
        }
    }
    Ok(())
}

/// A semi-standard Young tableau, rows stored bottom row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawTableau> for Ssyt {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        Ssyt::new(raw.rows)
    }
}

impl From<Ssyt> for RawTableau {
    fn from(t: Ssyt) -> Self {
        RawTableau { rows: t.rows }
    }
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        validate_rows(&rows)?;
        Ok(Self { rows })
    }

    /// Builds a tableau from columns listed left to right, each bottom-up.
    pub fn from_columns(columns: &[Vec<u32>]) -> Result<Self> {
        let height = columns.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for col in columns {
            if col.len() > height {
                return Err(Error::InvalidTableau("column heights increase".into()));
            }
            for (r, &x) in col.iter().enumerate() {
                rows[r].push(x);
            }
        }
        Self::new(rows)
    }

    /// The Yamanouchi tableau: row `i` filled with `i`.
    pub fn yamanouchi(shape: &Partition) -> Self {
        let rows = shape
            .nonzero_parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| vec![r as u32 + 1; len as usize])
            .collect();
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row lengths, bottom row first.
    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    /// Row shape padded to `n` parts.
    pub fn shape_partition(&self, n: usize) -> Result<Partition> {
        Partition::new(self.shape(), n)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Columns left to right, each listed bottom-up.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    /// Column word: columns left to right, each read top to bottom.
    pub fn col_word(&self) -> Word {
        self.col_cells().into_iter().map(|(r, c)| self.rows[r][c]).collect()
    }

    // (row, column) of each letter of the column word
    fn col_cells(&self) -> Vec<(usize, usize)> {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut cells = Vec::with_capacity(self.size());
        for c in 0..width {
            let height = self.rows.iter().take_while(|r| r.len() > c).count();
            cells.extend((0..height).rev().map(|r| (r, c)));
        }
        cells
    }

    /// Multiplicities of the letters `1..=n`.
    pub fn content(&self, n: usize) -> WeakComposition {
        let mut parts = vec![0; n.max(self.max_entry() as usize)];
        for &x in self.rows.iter().flatten() {
            parts[x as usize - 1] += 1;
        }
        WeakComposition::new(parts)
    }

    /// `x^content` in `n` variables.
    pub fn weight(&self, n: usize) -> Polynomial {
        Polynomial::monomial(&self.content(n))
    }

    /// The crystal lowering operator `f_i` on the column word: letters `i + 1`
    /// open and letters `i` close brackets; the rightmost unmatched `i` turns
    /// into `i + 1`. Without an unmatched `i` the tableau is returned as is.
    pub fn crystal_f(&self, i: u32) -> Ssyt {
        assert!(i >= 1, "crystal operators are indexed from 1");
        let cells = self.col_cells();
        let word: Vec<u32> = cells.iter().map(|&(r, c)| self.rows[r][c]).collect();
        match rightmost_unmatched(&word, i) {
            None => self.clone(),
            Some(pos) => {
                let (r, c) = cells[pos];
                let mut rows = self.rows.clone();
                rows[r][c] = i + 1;
                Ssyt { rows }
            }
        }
    }
}

/// Bracket matching of `i + 1` (open) against `i` (close) read left to
/// right; position of the rightmost unmatched `i`.
pub(crate) fn rightmost_unmatched(word: &[u32], i: u32) -> Option<usize> {
    rightmost_unmatched_masked(word, i, |_| true)
}

/// As [`rightmost_unmatched`], skipping positions where `active` is false.
pub(crate) fn rightmost_unmatched_masked(
    word: &[u32],
    i: u32,
    active: impl Fn(usize) -> bool,
) -> Option<usize> {
    let mut open = 0usize;
    let mut last = None;
    for (pos, &x) in word.iter().enumerate() {
        if !active(pos) {
            continue;
        }
        if x == i + 1 {
            open += 1;
        } else if x == i {
            if open > 0 {
                open -= 1;
            } else {
                last = Some(pos);
            }
        }
    }
    last
}

impl fmt::Display for Ssyt {
    /// One row per line, top row first, so the picture reads in French
    /// orientation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_entry().to_string().len();
        for (k, row) in self.rows.iter().rev().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Ssyt {
    type Err = Error;

    /// Parses either the JSON form `{"rows": [...]}` or the text form (one
    /// row per line, bottom row last).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed)
                .map_err(|e| Error::InvalidTableau(format!("JSON: {e}")));
        }
        let mut rows = Vec::new();
        for line in trimmed.lines().filter(|l| !l.trim().is_empty()) {
            let row = line
                .split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidTableau(format!("bad entry: {e}")))?;
            rows.push(row);
        }
        rows.reverse();
        Ssyt::new(rows)
    }
}

/// Every semi-standard tableau of the given row shape with entries at most
/// `max_entry`, in lexicographic order of the bottom-up row reading.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Ssyt> {
    let shape = shape.nonzero_parts();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    fill_ssyt(&cells, 0, &mut rows, max_entry, &mut out);
    out
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<u32>>,
    max_entry: u32,
    out: &mut Vec<Ssyt>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(Ssyt { rows: rows.clone() });
        return;
    };
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let below = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    for x in left.max(below)..=max_entry {
        rows[r][c] = x;
        fill_ssyt(cells, k + 1, rows, max_entry, out);
    }
}

/// Lengths of the maximal strictly decreasing runs of `w`.
pub fn colform(w: &[u32]) -> Vec<u32> {
    runs(w).into_iter().map(|r| r.len() as u32).collect()
}

fn runs(w: &[u32]) -> Vec<&[u32]> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=w.len() {
        if k == w.len() || w[k] >= w[k - 1] {
            if k > start {
                out.push(&w[start..k]);
            }
            start = k;
        }
    }
    out
}

/// Whether the runs of `w` have lengths rearranging the nonzero parts of the
/// conjugate of `shape`.
pub fn is_column_frank(w: &[u32], shape: &Partition) -> bool {
    let mut form = colform(w);
    form.sort_unstable_by(|a, b| b.cmp(a));
    form == shape.conjugate().nonzero_parts()
}

/// The elementary Knuth moves applicable to `w`, in both directions:
/// `xzy ~ zxy` for `x <= y < z` and `yxz ~ yzx` for `x < y <= z`.
fn knuth_neighbours(w: &[u32]) -> Vec<Word> {
    let mut out = Vec::new();
    for k in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[k], w[k + 1], w[k + 2]);
        // xzy -> zxy and back: the last letter y is fixed, swap the first two
        if (a <= c && c < b) || (b <= c && c < a) {
            let mut v = w.to_vec();
            v.swap(k, k + 1);
            out.push(v);
        }
        // yxz -> yzx and back: the first letter y is fixed, swap the last two
        if (b < a && a <= c) || (c < a && a <= b) {
            let mut v = w.to_vec();
            v.swap(k + 1, k + 2);
            out.push(v);
        }
    }
    out
}

/// The Knuth equivalence class of `w`, by breadth-first closure.
pub fn knuth_class(w: &[u32], cap: usize) -> Result<BTreeSet<Word>> {
    let mut seen = BTreeSet::new();
    seen.insert(w.to_vec());
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for u in knuth_neighbours(&v) {
            if seen.insert(u.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                queue.push_back(u);
            }
        }
    }
    Ok(seen)
}

/// A key: a tableau whose column entry sets are nested, together with its
/// content.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Key {
    tableau: Ssyt,
    content: WeakComposition,
}

impl Key {
    /// Checks that each column's entries contain those of the next column.
    pub fn from_tableau(tableau: Ssyt, n: usize) -> Result<Self> {
        let cols = tableau.columns();
        for (j, pair) in cols.windows(2).enumerate() {
            if !pair[1].iter().all(|x| pair[0].contains(x)) {
                return Err(Error::InvalidTableau(format!(
                    "column {} is not contained in column {}",
                    j + 2,
                    j + 1
                )));
            }
        }
        let content = tableau.content(n);
        Ok(Self { tableau, content })
    }

    pub fn tableau(&self) -> &Ssyt {
        &self.tableau
    }

    pub fn content(&self) -> &WeakComposition {
        &self.content
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tableau.fmt(f)
    }
}

/// `key(γ)`: column `i` holds `{ j : γ_j >= i }`, so letter `j` fills
/// exactly the first `γ_j` columns.
pub fn key_of_composition(gamma: &WeakComposition) -> Key {
    let width = gamma.parts().iter().copied().max().unwrap_or(0);
    let columns: Vec<Vec<u32>> = (1..=width)
        .map(|i| {
            gamma
                .parts()
                .iter()
                .enumerate()
                .filter(|(_, &g)| g >= i)
                .map(|(j, _)| j as u32 + 1)
                .collect()
        })
        .collect();
    let tableau = Ssyt::from_columns(&columns).expect("nested increasing columns form a tableau");
    Key { tableau, content: gamma.clone() }
}

/// Right key by brute force over the Knuth class of the column word: column
/// `j` is the final run of a column-frank word whose final run has length
/// `λ'_j`. The content is padded to the largest entry of `t`.
pub fn right_key_oracle(t: &Ssyt, cap: usize) -> Result<Key> {
    let n = t.max_entry() as usize;
    let shape = t.shape_partition(t.rows().len())?;
    let heights = shape.conjugate();
    let class = knuth_class(&t.col_word(), cap)?;
    let frank: Vec<&Word> = class.iter().filter(|v| is_column_frank(v, &shape)).collect();
    let mut columns = Vec::new();
    for &h in heights.nonzero_parts() {
        let last = frank
            .iter()
            .filter_map(|v| runs(v).last().copied())
            .find(|run| run.len() == h as usize)
            .ok_or(Error::NoColumnFrankWord { height: h })?;
        let mut col = last.to_vec();
        col.reverse();
        columns.push(col);
    }
    let tableau = Ssyt::from_columns(&columns)?;
    Key::from_tableau(tableau, n)
}

/// Vertices are the tableaux of the shape with entries at most `n`; an edge
/// `(from, to, i)` records `f_i(from) = to` whenever `f_i` acts nontrivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub vertices: Vec<Ssyt>,
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn crystal_graph(shape: &Partition, n: u32) -> CrystalGraph {
    let vertices = enumerate_ssyt(shape, n);
    let index: HashMap<&Ssyt, usize> = vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (k, t) in vertices.iter().enumerate() {
        for i in 1..n {
            let s = t.crystal_f(i);
            if &s != t {
                edges.push((k, index[&s], i));
            }
        }
    }
    CrystalGraph { vertices, edges }
}

/// `s_λ(x_1, ..., x_n)` as the sum of tableau weights.
pub fn schur(shape: &Partition, n: usize) -> Polynomial {
    enumerate_ssyt(shape, n as u32)
        .iter()
        .map(|t| t.weight(n))
        .fold(Polynomial::zero(n), |acc, w| &acc + &w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ssyt(rows: &[&[u32]]) -> Ssyt {
        Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec(), v.len()).unwrap()
    }

    fn fig1() -> Ssyt {
        ssyt(&[&[1, 1, 4, 4], &[2, 4, 6], &[3, 6], &[4], &[6]])
    }

    #[test]
    fn validate_examples() {
        assert!(is_valid(fig1().rows()));
        assert!(!is_valid(&[vec![1, 1], vec![1]]));
        assert!(is_valid(&[]));
        assert!(!is_valid(&[vec![1], vec![2, 3]]));
        assert!(!is_valid(&[vec![2, 1]]));
        assert!(!is_valid(&[vec![1], vec![]]));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_ssyt(&part(&[2, 1, 0]), 3).len(), 8);
        assert_eq!(enumerate_ssyt(&part(&[1, 0, 0, 0]), 4).len(), 4);
        assert_eq!(enumerate_ssyt(&part(&[2, 2, 0]), 3).len(), 6);
        for t in enumerate_ssyt(&part(&[3, 2, 1]), 4) {
            assert!(is_valid(t.rows()));
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // every filling of shape (2,2,1) with entries <= 3, filtered by the axioms
        let shape = [2usize, 2, 1];
        let cells: usize = shape.iter().sum();
        let mut count = 0;
        for code in 0..3usize.pow(cells as u32) {
            let mut digits = (0..cells).map(|k| (code / 3usize.pow(k as u32) % 3) as u32 + 1);
            let rows: Vec<Vec<u32>> =
                shape.iter().map(|&l| (0..l).map(|_| digits.next().unwrap()).collect()).collect();
            if is_valid(&rows) {
                count += 1;
            }
        }
        assert_eq!(enumerate_ssyt(&part(&[2, 2, 1]), 3).len(), count);
    }

    #[test]
    fn col_word_examples() {
        let s = ssyt(&[&[1, 2], &[2, 4], &[3], &[5]]);
        assert_eq!(s.col_word(), vec![5, 3, 2, 1, 4, 2]);
        assert_eq!(ssyt(&[&[3]]).col_word(), vec![3]);
        assert_eq!(fig1().col_word(), vec![6, 4, 3, 2, 1, 6, 4, 1, 6, 4, 4]);
    }

    #[test]
    fn colform_examples() {
        assert_eq!(colform(&[3, 5, 4, 2, 2, 1]), vec![1, 3, 2]);
        assert_eq!(colform(&[4, 2, 5, 3, 2, 1]), vec![2, 4]);
        assert_eq!(colform(&[1]), vec![1]);
        assert!(colform(&[]).is_empty());
    }

    #[test]
    fn column_frank_examples() {
        let shape = part(&[2, 2, 1, 1]);
        assert!(is_column_frank(&[4, 2, 5, 3, 2, 1], &shape));
        assert!(!is_column_frank(&[3, 5, 4, 2, 2, 1], &shape));
        for t in enumerate_ssyt(&part(&[3, 2, 2, 0]), 4) {
            let shape = t.shape_partition(4).unwrap();
            assert!(is_column_frank(&t.col_word(), &shape));
            assert_eq!(colform(&t.col_word()), shape.conjugate().nonzero_parts());
        }
    }

    #[test]
    fn knuth_class_examples() {
        let class = knuth_class(&[5, 3, 2, 1, 4, 2], 1000).unwrap();
        assert!(class.contains(&vec![3, 5, 4, 2, 2, 1]));
        assert_eq!(knuth_class(&[1], 10).unwrap(), BTreeSet::from([vec![1]]));
        let class = knuth_class(&[4, 3, 2, 1, 5, 2], 1000).unwrap();
        assert!(class.contains(&vec![4, 2, 5, 3, 2, 1]));
        assert_eq!(
            knuth_class(&[5, 3, 2, 1, 4, 2], 2),
            Err(Error::ClosureTooLarge { cap: 2 })
        );
    }

    #[test]
    fn knuth_class_is_symmetric() {
        let w = [3, 1, 4, 1, 5, 2];
        let class = knuth_class(&w, 10_000).unwrap();
        for v in class.iter().step_by(3) {
            assert!(knuth_class(v, 10_000).unwrap().contains(&w.to_vec()));
        }
    }

    #[test]
    fn knuth_class_of_standard_word_has_syt_count_elements() {
        // the class of a standard word has one element per standard tableau
        // of its insertion shape; shape (3,2,1) has 16
        let t = ssyt(&[&[1, 3, 6], &[2, 5], &[4]]);
        assert_eq!(knuth_class(&t.col_word(), 1000).unwrap().len(), 16);
    }

    #[test]
    fn key_of_composition_examples() {
        let k = key_of_composition(&WeakComposition::new(vec![2, 1, 1, 4, 0, 3]));
        assert_eq!(k.tableau(), &fig1());
        let k = key_of_composition(&WeakComposition::new(vec![3, 2, 0]));
        assert_eq!(k.tableau(), &Ssyt::yamanouchi(&part(&[3, 2, 0])));
        let k = key_of_composition(&WeakComposition::new(vec![0, 2, 4, 0, 0, 4]));
        assert_eq!(k.tableau(), &ssyt(&[&[2, 2, 3, 3], &[3, 3, 6, 6], &[6, 6]]));
    }

    #[test]
    fn content_examples() {
        assert_eq!(fig1().content(6).parts(), &[2, 1, 1, 4, 0, 3]);
        let lam = part(&[3, 1, 1]);
        assert_eq!(Ssyt::yamanouchi(&lam).content(3).parts(), lam.parts());
        let t = ssyt(&[&[1, 2, 2, 3], &[2, 3, 3, 6], &[4, 5]]);
        assert_eq!(t.content(6).parts(), &[1, 3, 3, 1, 1, 1]);
    }

    #[test]
    fn right_key_oracle_examples() {
        let s = ssyt(&[&[1, 2], &[2, 4], &[3], &[5]]);
        let k = right_key_oracle(&s, 100_000).unwrap();
        assert_eq!(k.tableau().col_word(), vec![5, 4, 2, 1, 4, 2]);
        assert_eq!(k.content().parts(), &[1, 2, 0, 2, 1]);
    }

    #[test]
    fn keys_are_their_own_right_keys() {
        for n in 1..=4 {
            for size in 0..=6 {
                for gamma in WeakComposition::all(n, size) {
                    let k = key_of_composition(&gamma);
                    let n_eff = k.tableau().max_entry() as usize;
                    let oracle = right_key_oracle(k.tableau(), 100_000).unwrap();
                    assert_eq!(oracle.tableau(), k.tableau(), "{gamma}");
                    assert_eq!(oracle.content().parts(), &gamma.parts()[..n_eff]);
                }
            }
        }
    }

    #[test]
    fn yamanouchi_right_key_is_key_of_shape() {
        for size in 1..=6 {
            for lam in Partition::all(size as usize, size) {
                let t = Ssyt::yamanouchi(&lam);
                let k = right_key_oracle(&t, 100_000).unwrap();
                assert_eq!(k.tableau(), &t);
            }
        }
    }

    #[test]
    fn right_key_oracle_output_is_a_key_of_the_same_shape() {
        for t in enumerate_ssyt(&part(&[3, 2, 1]), 4) {
            let k = right_key_oracle(&t, 100_000).unwrap();
            assert_eq!(k.tableau().shape(), t.shape());
            assert!(Key::from_tableau(k.tableau().clone(), 4).is_ok());
        }
    }

    #[test]
    fn crystal_f_examples() {
        let t = ssyt(&[&[1, 1], &[2]]);
        assert_eq!(t.crystal_f(1), ssyt(&[&[1, 2], &[2]]));
        assert_eq!(t.crystal_f(2), ssyt(&[&[1, 1], &[3]]));
        let sink = ssyt(&[&[2, 3], &[3]]);
        assert_eq!(sink.crystal_f(1), sink);
        assert_eq!(sink.crystal_f(2), sink);
    }

    #[test]
    fn crystal_f_preserves_validity_and_moves_one_letter() {
        for t in enumerate_ssyt(&part(&[3, 2, 1, 0]), 4) {
            for i in 1..4 {
                let s = t.crystal_f(i);
                assert!(is_valid(s.rows()));
                let (a, b) = (t.content(4), s.content(4));
                if s != t {
                    let mut expected = a.parts().to_vec();
                    expected[i as usize - 1] -= 1;
                    expected[i as usize] += 1;
                    assert_eq!(b.parts(), &expected[..]);
                }
            }
        }
    }

    #[test]
    fn crystal_graph_of_figure() {
        let g = crystal_graph(&part(&[2, 1, 0]), 3);
        assert_eq!(g.vertices.len(), 8);
        assert_eq!(g.edges.len(), 8);
        let edge = |a: &[&[u32]], b: &[&[u32]], i: u32| {
            let ia = g.vertices.iter().position(|t| t == &ssyt(a)).unwrap();
            let ib = g.vertices.iter().position(|t| t == &ssyt(b)).unwrap();
            assert!(g.edges.contains(&(ia, ib, i)), "{a:?} -f{i}-> {b:?}");
        };
        edge(&[&[1, 1], &[2]], &[&[1, 2], &[2]], 1);
        edge(&[&[1, 1], &[2]], &[&[1, 1], &[3]], 2);
        edge(&[&[1, 2], &[2]], &[&[1, 3], &[2]], 2);
        edge(&[&[1, 1], &[3]], &[&[1, 2], &[3]], 1);
        edge(&[&[1, 2], &[3]], &[&[2, 2], &[3]], 1);
        edge(&[&[1, 3], &[2]], &[&[1, 3], &[3]], 2);
        edge(&[&[2, 2], &[3]], &[&[2, 3], &[3]], 2);
        edge(&[&[1, 3], &[3]], &[&[2, 3], &[3]], 1);

        let g = crystal_graph(&part(&[1, 0]), 2);
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
        assert_eq!(crystal_graph(&part(&[2, 2, 0]), 3).vertices.len(), 6);
    }

    #[test]
    fn schur_examples() {
        let s = schur(&part(&[2, 1, 0]), 3);
        assert_eq!(
            s.to_string(),
            "x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2"
        );
        assert_eq!(schur(&part(&[1, 0]), 2).to_string(), "x1 + x2");
        assert_eq!(schur(&Partition::new(vec![4], 1).unwrap(), 1).to_string(), "x1^4");
    }

    #[test]
    fn schur_is_symmetric() {
        for lam in Partition::all(4, 5) {
            let s = schur(&lam, 4);
            for i in 1..4 {
                assert_eq!(s.swap_vars(i).unwrap(), s);
            }
        }
    }

    #[test]
    fn text_and_json_parse() {
        let t = fig1();
        assert_eq!(t.to_string().parse::<Ssyt>().unwrap(), t);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"rows":[[1,1,4,4],[2,4,6],[3,6],[4],[6]]}"#);
        assert_eq!(json.parse::<Ssyt>().unwrap(), t);
        assert!(r#"{"rows":[[1,1],[1]]}"#.parse::<Ssyt>().is_err());
    }
}
