//! Monotone and geometric grid classes.
//!
//! Cells are indexed Cartesian-style: column `k` counts from the left and
//! row `l` from the bottom, both 0-based here. Spec files list rows top
//! first, as matrices are usually written, and are flipped on load.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default word-length bound for the exhaustive geometric oracle.
pub const DEFAULT_GEOM_BOUND: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
    pub sign: i8,
    pub letter: char,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    /// `cells[k][l]`
    cells: Vec<Vec<i8>>,
    col_signs: Vec<i8>,
    row_signs: Vec<i8>,
    letters: Vec<Cell>,
}

/// Division points, 1-based: column `k` holds indices `cols[k] .. cols[k+1]`
/// and row `l` holds values `rows[l] .. rows[l+1]` (half-open).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gridding {
    pub cols: Vec<usize>,
    pub rows: Vec<usize>,
}

impl GridSpec {
    /// `cells[k][l]` in Cartesian order; `row_signs[l]` bottom-up.
    pub fn new(cells: Vec<Vec<i8>>, col_signs: Vec<i8>, row_signs: Vec<i8>) -> Result<Self> {
        let t = cells.len();
        let u = cells.first().map_or(0, |c| c.len());
        if t == 0 || u == 0 || cells.iter().any(|c| c.len() != u) {
            return Err(Error::GridSpec("matrix must be a nonempty rectangle".into()));
        }
        if col_signs.len() != t || row_signs.len() != u {
            return Err(Error::GridSpec(format!(
                "need {t} column signs and {u} row signs, got {} and {}",
                col_signs.len(),
                row_signs.len()
            )));
        }
        if col_signs.iter().chain(&row_signs).any(|s| s.abs() != 1) {
            return Err(Error::GridSpec("signs must be + or -".into()));
        }
        let mut letters = Vec::new();
        for (k, column) in cells.iter().enumerate() {
            for (l, &m) in column.iter().enumerate() {
                match m {
                    0 => {}
                    1 | -1 => {
                        if m != col_signs[k] * row_signs[l] {
                            return Err(Error::GridSpec(format!(
                                "cell (column {}, row {}) is {m} but its signs multiply to {}",
                                k + 1,
                                l + 1,
                                col_signs[k] * row_signs[l]
                            )));
                        }
                        if letters.len() >= 26 {
                            return Err(Error::GridSpec("more than 26 nonzero cells".into()));
                        }
                        let letter = (b'a' + letters.len() as u8) as char;
                        letters.push(Cell { col: k, row: l, sign: m, letter });
                    }
                    _ => return Err(Error::GridSpec(format!("entry {m} is not 0, 1 or -1"))),
                }
            }
        }
        Ok(GridSpec { cells, col_signs, row_signs, letters })
    }

    /// Matrix rows written top row first; row signs likewise top first.
    pub fn from_rows_top_first(
        rows: &[Vec<i8>],
        col_signs: Vec<i8>,
        row_signs_top_first: Vec<i8>,
    ) -> Result<Self> {
        let u = rows.len();
        let t = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != t) {
            return Err(Error::GridSpec("ragged matrix".into()));
        }
        let cells = (0..t)
            .map(|k| (0..u).map(|l| rows[u - 1 - l][k]).collect())
            .collect();
        let mut row_signs = row_signs_top_first;
        row_signs.reverse();
        Self::new(cells, col_signs, row_signs)
    }

    /// Parse the text format: `cols:` and `rows:` sign lines, then the
    /// matrix with its top row first. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut col_signs = None;
        let mut row_signs = None;
        let mut rows: Vec<Vec<i8>> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("cols:") {
                col_signs = Some(parse_signs(rest)?);
            } else if let Some(rest) = line.strip_prefix("rows:") {
                row_signs = Some(parse_signs(rest)?);
            } else {
                let row = line
                    .split_whitespace()
                    .map(|tok| match normalize_minus(tok).as_str() {
                        "0" => Ok(0),
                        "1" | "+1" | "+" => Ok(1),
                        "-1" | "-" => Ok(-1),
                        other => Err(Error::GridSpec(format!("bad matrix entry {other:?}"))),
                    })
                    .collect::<Result<Vec<i8>>>()?;
                rows.push(row);
            }
        }
        let cols = col_signs.ok_or_else(|| Error::GridSpec("missing cols: line".into()))?;
        let rws = row_signs.ok_or_else(|| Error::GridSpec("missing rows: line".into()))?;
        if rows.is_empty() {
            return Err(Error::GridSpec("missing matrix".into()));
        }
        Self::from_rows_top_first(&rows, cols, rws)
    }

    /// The text format accepted by [`GridSpec::parse`].
    pub fn to_text(&self) -> String {
        let sign = |s: &i8| if *s > 0 { "+" } else { "-" };
        let mut out = String::new();
        let cols: Vec<&str> = self.col_signs.iter().map(sign).collect();
        let rows: Vec<&str> = self.row_signs.iter().rev().map(sign).collect();
        out.push_str(&format!("cols: {}\nrows: {}\n", cols.join(" "), rows.join(" ")));
        for l in (0..self.height()).rev() {
            let line: Vec<String> = (0..self.width()).map(|k| self.cells[k][l].to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn height(&self) -> usize {
        self.cells[0].len()
    }

    /// Entry at 0-based column `k`, row `l` (counted from the bottom).
    pub fn entry(&self, k: usize, l: usize) -> i8 {
        self.cells[k][l]
    }

    pub fn col_signs(&self) -> &[i8] {
        &self.col_signs
    }

    /// Bottom-up.
    pub fn row_signs(&self) -> &[i8] {
        &self.row_signs
    }

    pub fn letters(&self) -> &[Cell] {
        &self.letters
    }

    pub fn alphabet(&self) -> Vec<char> {
        self.letters.iter().map(|c| c.letter).collect()
    }

    pub fn letter_index(&self, ch: char) -> Result<usize> {
        self.letters
            .iter()
            .position(|c| c.letter == ch)
            .ok_or(Error::UnknownLetter(ch))
    }

    pub fn parse_word(&self, w: &str) -> Result<Vec<usize>> {
        w.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| self.letter_index(c))
            .collect()
    }

    pub fn word_to_string(&self, w: &[usize]) -> String {
        w.iter().map(|&i| self.letters[i].letter).collect()
    }

    /// True iff the bipartite column/row graph of the nonzero cells has
    /// no cycle.
    pub fn row_column_graph_is_forest(&self) -> bool {
        let t = self.width();
        let mut parent: Vec<usize> = (0..t + self.height()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for cell in &self.letters {
            let a = find(&mut parent, cell.col);
            let b = find(&mut parent, t + cell.row);
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// `φ(w)` with the evenly spaced parameters `d_i = i/(n+1)`.
    pub fn decode(&self, w: &[usize]) -> Result<Permutation> {
        Ok(self.decode_with_positions(w)?.0)
    }

    pub fn decode_str(&self, w: &str) -> Result<Permutation> {
        self.decode(&self.parse_word(w)?)
    }

    /// `φ(w)` together with, for each letter of `w`, the 0-based index of
    /// the entry it produced.
    pub fn decode_with_positions(&self, w: &[usize]) -> Result<(Permutation, Vec<usize>)> {
        let n = w.len() as u64;
        let params: Vec<u64> = (1..=n).collect();
        self.decode_with_params(w, &params, n + 1)
    }

    /// `φ(w)` placing letter `i` at distance `params[i] / scale` from its
    /// cell's base point. `params` must be strictly increasing in
    /// `(0, scale)`.
    pub fn decode_with_params(
        &self,
        w: &[usize],
        params: &[u64],
        scale: u64,
    ) -> Result<(Permutation, Vec<usize>)> {
        assert_eq!(w.len(), params.len(), "one parameter per letter");
        let mut points: Vec<(u64, u64, usize)> = Vec::with_capacity(w.len());
        for (i, (&letter, &d)) in w.iter().zip(params).enumerate() {
            let cell = self
                .letters
                .get(letter)
                .ok_or_else(|| Error::GridSpec(format!("letter index {letter} out of range")))?;
            debug_assert!(d > 0 && d < scale);
            let along = |sign: i8| if sign > 0 { d } else { scale - d };
            let x = cell.col as u64 * scale + along(self.col_signs[cell.col]);
            let y = cell.row as u64 * scale + along(self.row_signs[cell.row]);
            points.push((x, y, i));
        }
        points.sort_unstable();
        let ys: Vec<u64> = points.iter().map(|p| p.1).collect();
        let mut positions = vec![0; w.len()];
        for (idx, p) in points.iter().enumerate() {
            positions[p.2] = idx;
        }
        Ok((Permutation::flatten(&ys), positions))
    }

    /// The gridding `φ(w)` inherits from the letter counts of `w`.
    pub fn induced_gridding(&self, w: &[usize]) -> Gridding {
        let mut col_counts = vec![0; self.width()];
        let mut row_counts = vec![0; self.height()];
        for &letter in w {
            col_counts[self.letters[letter].col] += 1;
            row_counts[self.letters[letter].row] += 1;
        }
        Gridding { cols: prefix_divs(&col_counts), rows: prefix_divs(&row_counts) }
    }

    pub fn is_gridding(&self, p: &Permutation, g: &Gridding) -> bool {
        let n = p.len();
        let well_formed = |d: &[usize], parts: usize| {
            d.len() == parts + 1
                && d[0] == 1
                && d[parts] == n + 1
                && d.windows(2).all(|w| w[0] <= w[1])
        };
        if !well_formed(&g.cols, self.width()) || !well_formed(&g.rows, self.height()) {
            return false;
        }
        let row_of = |v: usize| g.rows.windows(2).position(|w| w[0] <= v && v < w[1]).unwrap();
        for k in 0..self.width() {
            // last value seen in each row of this column
            let mut last: Vec<Option<usize>> = vec![None; self.height()];
            for i in g.cols[k]..g.cols[k + 1] {
                let v = p.value_at(i);
                let l = row_of(v);
                match self.cells[k][l] {
                    0 => return false,
                    1 if last[l].is_some_and(|prev| prev > v) => return false,
                    -1 if last[l].is_some_and(|prev| prev < v) => return false,
                    _ => {}
                }
                last[l] = Some(v);
            }
        }
        true
    }

    /// Every compatible gridding of `p`.
    pub fn griddings(&self, p: &Permutation) -> Vec<Gridding> {
        let n = p.len();
        let col_choices = divisions(self.width(), n);
        let row_choices = divisions(self.height(), n);
        let mut out = Vec::new();
        for cols in &col_choices {
            if !self.columns_feasible(cols) {
                continue;
            }
            for rows in &row_choices {
                let g = Gridding { cols: cols.clone(), rows: rows.clone() };
                if self.is_gridding(p, &g) {
                    out.push(g);
                }
            }
        }
        out
    }

    /// Cheap necessary condition: each column slice must be coverable by
    /// the column's cells, so an all-zero column must be empty.
    fn columns_feasible(&self, cols: &[usize]) -> bool {
        (0..self.width()).all(|k| cols[k] == cols[k + 1] || self.cells[k].iter().any(|&m| m != 0))
    }

    pub fn grid_member(&self, p: &Permutation) -> bool {
        let n = p.len();
        divisions(self.width(), n).iter().any(|cols| {
            self.columns_feasible(cols)
                && divisions(self.height(), n)
                    .into_iter()
                    .any(|rows| self.is_gridding(p, &Gridding { cols: cols.clone(), rows }))
        })
    }

    /// The gridding maximizing `(c_2, …, c_t, r_2, …, r_u)`.
    pub fn canonical_gridding(&self, p: &Permutation) -> Result<Gridding> {
        self.griddings(p)
            .into_iter()
            .max_by(|a, b| (&a.cols[1..], &a.rows[1..]).cmp(&(&b.cols[1..], &b.rows[1..])))
            .ok_or_else(|| Error::NotGridMember(p.to_string()))
    }

    /// All words of length `n` over the cell alphabet, lexicographic.
    pub fn all_words(&self, n: usize) -> Vec<Vec<usize>> {
        let k = self.letters.len();
        let total = k.checked_pow(n as u32).unwrap_or(usize::MAX);
        let mut out = Vec::with_capacity(total.min(1 << 24));
        let mut w = vec![0; n];
        loop {
            out.push(w.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                w[i] += 1;
                if w[i] < k {
                    break;
                }
                w[i] = 0;
            }
        }
    }

    fn check_bound(&self, n: usize, bound: usize) -> Result<()> {
        if n > bound {
            return Err(Error::BoundExceeded { what: "geometric oracle length", got: n as u128, bound: bound as u128 });
        }
        Ok(())
    }

    /// `{φ(w) : |w| = n}`, by decoding every word.
    pub fn geom_members(&self, n: usize, bound: usize) -> Result<BTreeSet<Permutation>> {
        self.check_bound(n, bound)?;
        let words = self.all_words(n);
        let set: HashSet<Permutation> = words
            .par_iter()
            .map(|w| self.decode(w).expect("alphabet letters decode"))
            .collect();
        Ok(set.into_iter().collect())
    }

    /// Exhaustive over all words of length `|p|`.
    pub fn geom_member(&self, p: &Permutation, bound: usize) -> Result<bool> {
        self.check_bound(p.len(), bound)?;
        Ok(self
            .all_words(p.len())
            .par_iter()
            .any(|w| self.decode(w).is_ok_and(|q| &q == p)))
    }

    /// Brute-force `Grid(M) ∩ S_n`.
    pub fn grid_members(&self, n: usize) -> BTreeSet<Permutation> {
        Permutation::all(n)
            .into_par_iter()
            .filter(|p| self.grid_member(p))
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    }
}

fn normalize_minus(tok: &str) -> String {
    tok.replace(['\u{2212}', '\u{2013}'], "-")
}

fn parse_signs(s: &str) -> Result<Vec<i8>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match normalize_minus(t).as_str() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(Error::GridSpec(format!("bad sign {other:?}"))),
        })
        .collect()
}

fn prefix_divs(counts: &[usize]) -> Vec<usize> {
    let mut d = vec![1];
    for c in counts {
        d.push(d.last().unwrap() + c);
    }
    d
}

/// All `1 = d_0 ≤ d_1 ≤ … ≤ d_parts = n + 1`.
fn divisions(parts: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![1];
    fn rec(parts: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            cur.push(n + 1);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        let from = *cur.last().unwrap();
        for d in from..=n + 1 {
            cur.push(d);
            rec(parts, n, cur, out);
            cur.pop();
        }
    }
    rec(parts, n, &mut cur, &mut out);
    out
}

impl fmt::Display for Gridding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "cols=({}) rows=({})", j(&self.cols), j(&self.rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn shipped_specs_load() {
        let g4 = data::grid_spec("grid_4312_3142").unwrap();
        assert_eq!(g4.alphabet(), vec!['a', 'b', 'c', 'd']);
        assert_eq!(g4.entry(0, 0), 1);
        assert_eq!(g4.entry(2, 0), -1);
        assert_eq!(g4.col_signs(), &[-1, 1, 1]);
        assert_eq!(g4.row_signs(), &[-1, 1]);
        assert_eq!(GridSpec::parse(&g4.to_text()).unwrap(), g4);
    }

    #[test]
    fn decode_examples() {
        let g4 = data::grid_spec("grid_4312_3142").unwrap();
        assert_eq!(g4.decode_str("acadcdb").unwrap(), p("2473516"));
        assert_eq!(g4.decode_str("").unwrap(), Permutation::empty());
        let g5 = data::grid_spec("grid_4231_3124").unwrap();
        assert_eq!(g5.decode_str("dcb").unwrap(), p("312"));
        assert_eq!(g5.decode_str("x"), Err(Error::UnknownLetter('x')));
    }

    #[test]
    fn forests() {
        assert!(data::grid_spec("grid_4312_3142").unwrap().row_column_graph_is_forest());
        assert!(data::grid_spec("grid_4231_3124").unwrap().row_column_graph_is_forest());
        assert!(!data::grid_spec("grid_fig3").unwrap().row_column_graph_is_forest());
        let empty = GridSpec::new(vec![vec![0, 0], vec![0, 0]], vec![1, 1], vec![1, -1]).unwrap();
        assert!(empty.row_column_graph_is_forest());
    }

    #[test]
    fn fig3_memberships() {
        let g = data::grid_spec("grid_fig3").unwrap();
        let host = p("286435179");
        assert!(g.is_gridding(&host, &Gridding { cols: vec![1, 4, 10], rows: vec![1, 5, 10] }));
        assert!(g.grid_member(&host));
        assert!(g.grid_member(&p("2413")));
        assert!(!g.geom_member(&p("2413"), DEFAULT_GEOM_BOUND).unwrap());
        assert!(g.geom_member(&p("17645328"), DEFAULT_GEOM_BOUND).unwrap());
        assert!(g.is_gridding(&Permutation::empty(), &Gridding { cols: vec![1, 1, 1], rows: vec![1, 1, 1] }));
        assert!(g.geom_member(&Permutation::identity(9), 8).is_err());
    }

    #[test]
    fn partial_multiplication_is_checked() {
        let bad = GridSpec::from_rows_top_first(&[vec![1, 1], vec![1, -1]], vec![1, 1], vec![1, 1]);
        assert!(matches!(bad, Err(Error::GridSpec(_))));
    }

    #[test]
    fn single_point_and_canonical() {
        let g4 = data::grid_spec("grid_4312_3142").unwrap();
        assert!(g4.grid_member(&p("1")));
        // all of it goes as far left as possible: column 1, row 1
        let c = g4.canonical_gridding(&p("1")).unwrap();
        assert_eq!(c, Gridding { cols: vec![1, 2, 2, 2], rows: vec![1, 2, 2] });
        assert!(g4.canonical_gridding(&p("4312")).is_err());
    }

    #[test]
    fn division_enumeration() {
        assert_eq!(divisions(2, 2).len(), 3);
        assert_eq!(divisions(3, 9).len(), 55);
        assert_eq!(divisions(1, 4), vec![vec![1, 5]]);
    }
}
