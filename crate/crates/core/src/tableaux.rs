//! Semistandard skew tableaux and the insertion algorithms on them.
//!
//! Three bumping procedures act on a skew tableau of shape `λ/μ`:
//!
//! * [`insert`] row-inserts an integer and grows `λ` by one cell;
//! * [`insert_from_row`] removes the first cell of a row (growing `μ`) and
//!   row-inserts its entry into the rows below;
//! * [`reverse_insert_from_row`] undoes either of them, leaving through the
//!   top (returning the exiting integer) or settling into a cell of `μ`.
//!
//! On top of these sit the two sign-reversing involutions [`phi`] (for
//! horizontal-strip / vertical-strip pairs) and [`psi`] (vertical /
//! horizontal), together with the decompositions of their fixed points.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{ParseError, ShapeError};
use crate::shapes::{enumerate_inner_contractions, enumerate_outer_extensions, Cell, Partition, SkewShape, StripKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("rows are not weakly increasing or columns not strictly increasing")]
    NotSemistandard,
    #[error("entries do not match the shape {0}")]
    ShapeMismatch(String),
    #[error("cannot insert from row {0}: no removable inner corner with a cell")]
    InvalidStartRow(usize),
    #[error("cannot reverse insert from row {0}: no outer corner with a cell")]
    NoOuterCorner(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a fixed point: {0}")]
    NotFixedPoint(String),
    #[error("internal invariant broken: {0}")]
    Invariant(String),
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A semistandard filling of a skew shape.
///
/// Row `i` stores `inner[i]` (the number of cells of `μ` in that row) and
/// the entries of the row from column `inner[i] + 1` on. Trailing rows
/// without any cell of `λ` are never stored, so equal tableaux have equal
/// representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    inner: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

/// One step of a bumping path: at `(row, col)` the value `out` left and `inn`
/// arrived. `None` marks a cell that was created or erased.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bump {
    pub row: usize,
    pub col: usize,
    pub out: Option<u32>,
    pub inn: Option<u32>,
}

impl fmt::Display for Bump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        write!(
            f,
            "row={} col={} out={} in={}",
            self.row,
            self.col,
            show(self.out),
            show(self.inn)
        )
    }
}

/// Result of an insertion or reverse insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionOutcome {
    pub tableau: SkewTableau,
    /// Row where the procedure stopped; `0` means a reverse insertion left
    /// through the top.
    pub exit_row: usize,
    /// The exiting integer, present exactly when `exit_row == 0`.
    pub exit_value: Option<u32>,
    pub bumps: Vec<Bump>,
}

impl SkewTableau {
    /// The empty tableau of shape `∅/∅`.
    pub fn empty() -> Self {
        SkewTableau::default()
    }

    /// Builds a tableau from the entries of each row of `shape` (cells of the
    /// inner shape omitted).
    pub fn new(shape: &SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let outer = shape.outer();
        let inner = shape.inner();
        let nrows = outer.len();
        let mut rows = rows;
        while rows.len() > nrows && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() < nrows {
            rows.resize(nrows, Vec::new());
        }
        if rows.len() != nrows {
            return Err(TableauError::ShapeMismatch(shape.to_string()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != outer.part(i + 1) - inner.part(i + 1) || row.contains(&0) {
                return Err(TableauError::ShapeMismatch(shape.to_string()));
            }
        }
        let t = SkewTableau {
            inner: (1..=nrows).map(|i| inner.part(i)).collect(),
            rows,
        };
        if !t.is_semistandard() {
            return Err(TableauError::NotSemistandard);
        }
        Ok(t)
    }

    /// Fills `shape` cell by cell.
    pub fn from_fn(shape: &SkewShape, mut f: impl FnMut(Cell) -> u32) -> Result<Self, TableauError> {
        let rows = (1..=shape.outer().len())
            .map(|i| {
                ((shape.inner().part(i) + 1)..=shape.outer().part(i))
                    .map(|j| f((i, j)))
                    .collect()
            })
            .collect();
        SkewTableau::new(shape, rows)
    }

    pub fn outer(&self) -> Partition {
        Partition::new(
            self.inner
                .iter()
                .zip(&self.rows)
                .map(|(m, r)| m + r.len())
                .collect(),
        )
    }

    pub fn inner(&self) -> Partition {
        Partition::new(self.inner.clone())
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer(), self.inner()).expect("tableau shape is a skew shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entries of row `i` (1-based), cells of the inner shape excluded.
    pub fn row(&self, i: usize) -> &[u32] {
        i.checked_sub(1)
            .and_then(|k| self.rows.get(k))
            .map_or(&[], Vec::as_slice)
    }

    fn inner_at(&self, i: usize) -> usize {
        self.inner.get(i - 1).copied().unwrap_or(0)
    }

    fn outer_at(&self, i: usize) -> usize {
        self.inner_at(i) + self.row(i).len()
    }

    pub fn get(&self, (i, j): Cell) -> Option<u32> {
        let m = self.inner_at(i.max(1));
        if i == 0 || j <= m {
            return None;
        }
        self.row(i).get(j - m - 1).copied()
    }

    /// `(cell, entry)` pairs, row by row.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(k, row)| {
            let m = self.inner[k];
            row.iter().enumerate().map(move |(c, &v)| ((k + 1, m + c + 1), v))
        })
    }

    /// Number of occurrences of `1..=max` (index `v - 1` counts `v`).
    pub fn content(&self, max: u32) -> Vec<usize> {
        let mut c = vec![0; max as usize];
        for (_, v) in self.entries() {
            if v as usize > c.len() {
                c.resize(v as usize, 0);
            }
            c[v as usize - 1] += 1;
        }
        c
    }

    pub fn max_entry(&self) -> u32 {
        self.entries().map(|(_, v)| v).max().unwrap_or(0)
    }

    pub fn is_semistandard(&self) -> bool {
        if self.inner.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        for i in 1..=self.rows.len() {
            if i >= 2 && self.outer_at(i) > self.outer_at(i - 1) {
                return false;
            }
            if self.row(i).windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        self.entries().all(|((i, j), v)| match self.get((i - 1, j)) {
            Some(above) => above < v,
            None => true,
        })
    }

    fn ensure_row(&mut self, i: usize) {
        while self.rows.len() < i {
            self.rows.push(Vec::new());
            self.inner.push(0);
        }
    }

    fn normalize(&mut self) {
        while self.rows.last().is_some_and(|r| r.is_empty())
            && self.inner.last() == Some(&0)
        {
            self.rows.pop();
            self.inner.pop();
        }
    }

    /// Multi-line rendering, `.` for cells of the inner shape.
    pub fn render(&self) -> String {
        self.render_with(|_, v| v.to_string())
    }

    pub(crate) fn render_with(&self, mut cell: impl FnMut(Cell, u32) -> String) -> String {
        let mut lines = Vec::new();
        for (k, row) in self.rows.iter().enumerate() {
            let mut toks: Vec<String> = vec![".".to_string(); self.inner[k]];
            for (c, &v) in row.iter().enumerate() {
                toks.push(cell((k + 1, self.inner[k] + c + 1), v));
            }
            lines.push(toks.join(" "));
        }
        lines.join("\n")
    }

    /// Single-line rendering with ` / ` between rows; `-` for no rows.
    pub fn to_line(&self) -> String {
        if self.rows.is_empty() {
            return "-".to_string();
        }
        self.render().replace('\n', " / ")
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Splits tableau text into rows of tokens: rows are separated by newlines
/// or `/`, tokens by whitespace.
pub(crate) fn tokenize_rows(s: &str) -> Vec<Vec<String>> {
    let t = s.trim();
    if t.is_empty() || t == "-" {
        return Vec::new();
    }
    t.split(['\n', '/'])
        .map(|line| line.split_whitespace().map(str::to_string).collect::<Vec<_>>())
        .filter(|toks| !toks.is_empty())
        .collect()
}

/// Parses rows of tokens where a leading run of `.` marks inner cells.
pub(crate) fn parse_rows<T>(
    s: &str,
    mut entry: impl FnMut(&str) -> Option<T>,
) -> Result<(Vec<usize>, Vec<Vec<T>>), ParseError> {
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for toks in tokenize_rows(s) {
        let dots = toks.iter().take_while(|t| *t == ".").count();
        let vals = toks[dots..]
            .iter()
            .map(|t| entry(t).ok_or_else(|| ParseError::new("tableau", s, &format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        inner.push(dots);
        rows.push(vals);
    }
    Ok((inner, rows))
}

impl FromStr for SkewTableau {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (inner, rows) = parse_rows(s, |t| t.parse::<u32>().ok().filter(|&v| v > 0))?;
        let outer: Vec<usize> = inner.iter().zip(&rows).map(|(m, r)| m + r.len()).collect();
        let outer = Partition::try_from(outer)?;
        let inner = Partition::try_from(inner)?;
        let shape = SkewShape::new(outer, inner).map_err(|e| ParseError::new("tableau", s, &e.to_string()))?;
        SkewTableau::new(&shape, rows).map_err(|e| ParseError::new("tableau", s, &e.to_string()))
    }
}

/// Bumps `k` down starting at `row` until it settles at the end of some row.
fn bump_down(t: &mut SkewTableau, mut k: u32, mut row: usize, bumps: &mut Vec<Bump>) -> usize {
    loop {
        t.ensure_row(row);
        let m = t.inner[row - 1];
        let r = &mut t.rows[row - 1];
        match r.iter().position(|&x| x > k) {
            Some(pos) => {
                let out = std::mem::replace(&mut r[pos], k);
                bumps.push(Bump {
                    row,
                    col: m + pos + 1,
                    out: Some(out),
                    inn: Some(k),
                });
                k = out;
                row += 1;
            }
            None => {
                r.push(k);
                bumps.push(Bump {
                    row,
                    col: m + r.len(),
                    out: None,
                    inn: Some(k),
                });
                return row;
            }
        }
    }
}

/// Row insertion of `k`.
pub fn insert(t: &SkewTableau, k: u32) -> InsertionOutcome {
    assert!(k > 0, "entries are positive");
    let mut out = t.clone();
    let mut bumps = Vec::new();
    let exit_row = bump_down(&mut out, k, 1, &mut bumps);
    InsertionOutcome {
        tableau: out,
        exit_row,
        exit_value: None,
        bumps,
    }
}

/// Whether insertion from row `i0` is allowed: the first cell of the row
/// exists and can join the inner shape.
pub fn can_insert_from_row(t: &SkewTableau, i0: usize) -> bool {
    i0 >= 1
        && !t.row(i0).is_empty()
        && (i0 == 1 || t.inner_at(i0 - 1) > t.inner_at(i0))
}

/// Erases the first cell of row `i0` and inserts its entry into the rows below.
pub fn insert_from_row(t: &SkewTableau, i0: usize) -> Result<InsertionOutcome, TableauError> {
    if !can_insert_from_row(t, i0) {
        return Err(TableauError::InvalidStartRow(i0));
    }
    let mut out = t.clone();
    let k = out.rows[i0 - 1].remove(0);
    out.inner[i0 - 1] += 1;
    let mut bumps = vec![Bump {
        row: i0,
        col: out.inner[i0 - 1],
        out: Some(k),
        inn: None,
    }];
    let exit_row = bump_down(&mut out, k, i0 + 1, &mut bumps);
    Ok(InsertionOutcome {
        tableau: out,
        exit_row,
        exit_value: None,
        bumps,
    })
}

/// Whether reverse insertion from row `i1` is allowed: the row ends in an
/// outer corner that is a cell of the tableau.
pub fn can_reverse_insert_from_row(t: &SkewTableau, i1: usize) -> bool {
    i1 >= 1 && !t.row(i1).is_empty() && t.outer_at(i1 + 1) < t.outer_at(i1)
}

/// Erases the last cell of row `i1` and reverse-bumps its entry upwards.
pub fn reverse_insert_from_row(t: &SkewTableau, i1: usize) -> Result<InsertionOutcome, TableauError> {
    if !can_reverse_insert_from_row(t, i1) {
        return Err(TableauError::NoOuterCorner(i1));
    }
    let mut out = t.clone();
    let mut k = out.rows[i1 - 1].pop().expect("row is nonempty");
    let mut bumps = vec![Bump {
        row: i1,
        col: out.outer_at(i1) + 1,
        out: Some(k),
        inn: None,
    }];
    let mut row = i1 - 1;
    while row >= 1 {
        let m = out.inner[row - 1];
        let r = &mut out.rows[row - 1];
        match r.iter().rposition(|&x| x < k) {
            Some(pos) => {
                let prev = std::mem::replace(&mut r[pos], k);
                bumps.push(Bump {
                    row,
                    col: m + pos + 1,
                    out: Some(prev),
                    inn: Some(k),
                });
                k = prev;
                row -= 1;
            }
            None => {
                if m == 0 {
                    return Err(TableauError::Invariant(format!(
                        "reverse insertion settled in row {row} which has no inner cell"
                    )));
                }
                r.insert(0, k);
                out.inner[row - 1] -= 1;
                bumps.push(Bump {
                    row,
                    col: m,
                    out: None,
                    inn: Some(k),
                });
                out.normalize();
                return Ok(InsertionOutcome {
                    tableau: out,
                    exit_row: row,
                    exit_value: None,
                    bumps,
                });
            }
        }
    }
    out.normalize();
    Ok(InsertionOutcome {
        tableau: out,
        exit_row: 0,
        exit_value: Some(k),
        bumps,
    })
}

/// Inserts a word left to right.
pub fn insert_word(t: &SkewTableau, word: &[u32]) -> SkewTableau {
    word.iter().fold(t.clone(), |acc, &k| insert(&acc, k).tableau)
}

/// A row index that may be unbounded (below every row).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RowBound {
    Row(usize),
    Unbounded,
}

fn check_strips(
    t: &SkewTableau,
    lam: &Partition,
    mu: &Partition,
    outer_is: fn(&SkewShape) -> bool,
    inner_is: fn(&SkewShape) -> bool,
    what: &str,
) -> Result<(SkewShape, SkewShape), TableauError> {
    let outer_strip = SkewShape::new(t.outer(), lam.clone())
        .map_err(|_| TableauError::Precondition(format!("{lam} is not inside the outer shape")))?;
    let inner_strip = SkewShape::new(mu.clone(), t.inner())
        .map_err(|_| TableauError::Precondition(format!("inner shape is not inside {mu}")))?;
    if !lam.contains(mu) {
        return Err(TableauError::Precondition(format!("{mu} is not inside {lam}")));
    }
    if !outer_is(&outer_strip) || !inner_is(&inner_strip) {
        return Err(TableauError::Precondition(format!(
            "{outer_strip} and {inner_strip} must be {what}"
        )));
    }
    Ok((outer_strip, inner_strip))
}

/// State after the reverse-insertion loop of the Pieri involution.
struct PhiLoop {
    tableau: SkewTableau,
    word: VecDeque<u32>,
    /// Set when the loop stopped on a reverse insertion that did not leave
    /// through the top.
    stopped: Option<InsertionOutcome>,
}

fn phi_loop(
    t: &SkewTableau,
    lam: &Partition,
    log: &mut Option<&mut Vec<String>>,
) -> Result<PhiLoop, TableauError> {
    let mut cur = t.clone();
    let mut word = VecDeque::new();
    loop {
        let strip = SkewShape::new(cur.outer(), lam.clone())?;
        let Some(top) = strip.top_row() else {
            return Ok(PhiLoop {
                tableau: cur,
                word,
                stopped: None,
            });
        };
        let out = reverse_insert_from_row(&cur, top)?;
        if out.exit_row == 0 {
            let k = out.exit_value.expect("exit through the top carries a value");
            if let Some(l) = log.as_deref_mut() {
                l.push(format!("reverse row={top} exit=0 k={k}"));
            }
            word.push_front(k);
            cur = out.tableau;
        } else {
            if let Some(l) = log.as_deref_mut() {
                l.push(format!("reverse row={top} exit={} (stop)", out.exit_row));
            }
            return Ok(PhiLoop {
                tableau: cur,
                word,
                stopped: Some(out),
            });
        }
    }
}

fn word_string(w: &[u32]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The Pieri involution `Φ_{λ,μ,λ⁺,μ⁻}` on a tableau of shape `λ⁺/μ⁻` with
/// `λ⁺/λ` a horizontal strip and `μ/μ⁻` a vertical strip.
///
/// Fixed points are returned unchanged; every other tableau is sent to one
/// whose inner shape differs by exactly one cell.
pub fn phi(t: &SkewTableau, lam: &Partition, mu: &Partition) -> Result<SkewTableau, TableauError> {
    phi_traced(t, lam, mu, None)
}

/// [`phi`], optionally recording a line per step.
pub fn phi_traced(
    t: &SkewTableau,
    lam: &Partition,
    mu: &Partition,
    mut log: Option<&mut Vec<String>>,
) -> Result<SkewTableau, TableauError> {
    let (_, inner_strip) = check_strips(
        t,
        lam,
        mu,
        SkewShape::is_horizontal_strip,
        SkewShape::is_vertical_strip,
        "a horizontal and a vertical strip",
    )?;
    let bound = inner_strip.top_row().map_or(RowBound::Unbounded, RowBound::Row);
    let run = phi_loop(t, lam, &mut log)?;
    let word: Vec<u32> = run.word.into_iter().collect();
    let middle = match (run.stopped, bound) {
        (Some(out), RowBound::Row(i)) if out.exit_row >= i => {
            let ins = insert_from_row(&run.tableau, i)?;
            if let Some(l) = log.as_deref_mut() {
                l.push(format!("insert from row={i} exit={}", ins.exit_row));
            }
            ins.tableau
        }
        (Some(out), _) => {
            if let Some(l) = log.as_deref_mut() {
                l.push(format!("keep reverse insertion exit={}", out.exit_row));
            }
            out.tableau
        }
        (None, RowBound::Row(i)) => {
            let ins = insert_from_row(&run.tableau, i)?;
            if let Some(l) = log.as_deref_mut() {
                l.push(format!("insert from row={i} exit={}", ins.exit_row));
            }
            ins.tableau
        }
        (None, RowBound::Unbounded) => {
            if let Some(l) = log.as_deref_mut() {
                l.push(format!("FIXED v={}", word_string(&word)));
            }
            return Ok(t.clone());
        }
    };
    let result = insert_word(&middle, &word);
    if let Some(l) = log {
        l.push(format!("reinsert v={}", word_string(&word)));
        l.push(format!("PAIRED inner={}", result.inner()));
    }
    Ok(result)
}

/// Splits a fixed point of [`phi`] into a tableau of shape `λ/μ` and the
/// weakly increasing word removed from it.
pub fn phi_fixed_decompose(
    t: &SkewTableau,
    lam: &Partition,
    mu: &Partition,
) -> Result<(SkewTableau, Vec<u32>), TableauError> {
    check_strips(
        t,
        lam,
        mu,
        SkewShape::is_horizontal_strip,
        SkewShape::is_vertical_strip,
        "a horizontal and a vertical strip",
    )?;
    if &t.inner() != mu {
        return Err(TableauError::NotFixedPoint(format!(
            "inner shape {} differs from {mu}",
            t.inner()
        )));
    }
    let run = phi_loop(t, lam, &mut None)?;
    if run.stopped.is_some() {
        return Err(TableauError::NotFixedPoint(
            "a reverse insertion did not leave through the top".into(),
        ));
    }
    Ok((run.tableau, run.word.into_iter().collect()))
}

/// The conjugate Pieri involution `Ψ_{λ,μ,λ⁺,μ⁻}` on a tableau of shape
/// `λ⁺/μ⁻` with `λ⁺/λ` a vertical strip and `μ/μ⁻` a horizontal strip.
pub fn psi(t: &SkewTableau, lam: &Partition, mu: &Partition) -> Result<SkewTableau, TableauError> {
    psi_traced(t, lam, mu, None)
}

/// [`psi`], optionally recording a line per step.
pub fn psi_traced(
    t: &SkewTableau,
    lam: &Partition,
    mu: &Partition,
    mut log: Option<&mut Vec<String>>,
) -> Result<SkewTableau, TableauError> {
    let (outer_strip, inner_strip) = check_strips(
        t,
        lam,
        mu,
        SkewShape::is_vertical_strip,
        SkewShape::is_horizontal_strip,
        "a vertical and a horizontal strip",
    )?;
    let bottom = inner_strip.bottom_row().unwrap_or(0);
    let mut note = |s: String| {
        if let Some(l) = log.as_deref_mut() {
            l.push(s);
        }
    };
    if let Some(ip) = outer_strip.bottom_row() {
        let out = reverse_insert_from_row(t, ip)?;
        if bottom == 0 && out.exit_row == 0 {
            note(format!(
                "reverse row={ip} exit=0 k={}",
                out.exit_value.expect("exit value")
            ));
            note("FIXED".into());
            return Ok(t.clone());
        }
        if out.exit_row >= bottom {
            note(format!("reverse row={ip} exit={}", out.exit_row));
            return Ok(out.tableau);
        }
        note(format!("reverse row={ip} exit={} (above row {bottom})", out.exit_row));
    } else if bottom == 0 {
        note("FIXED (empty strips)".into());
        return Ok(t.clone());
    }
    let ins = insert_from_row(t, bottom)?;
    note(format!("insert from row={bottom} exit={}", ins.exit_row));
    Ok(ins.tableau)
}

/// Splits a fixed point of [`psi`] into a tableau of shape `λ/μ` and the
/// strictly decreasing word of exiting integers.
pub fn psi_fixed_decompose(
    t: &SkewTableau,
    lam: &Partition,
    mu: &Partition,
) -> Result<(SkewTableau, Vec<u32>), TableauError> {
    check_strips(
        t,
        lam,
        mu,
        SkewShape::is_vertical_strip,
        SkewShape::is_horizontal_strip,
        "a vertical and a horizontal strip",
    )?;
    if &t.inner() != mu {
        return Err(TableauError::NotFixedPoint(format!(
            "inner shape {} differs from {mu}",
            t.inner()
        )));
    }
    let mut cur = t.clone();
    let mut exits = Vec::new();
    while let Some(ip) = SkewShape::new(cur.outer(), lam.clone())?.bottom_row() {
        let out = reverse_insert_from_row(&cur, ip)?;
        let Some(k) = out.exit_value else {
            return Err(if exits.is_empty() {
                TableauError::NotFixedPoint(format!("reverse insertion exits in row {}", out.exit_row))
            } else {
                TableauError::Invariant("later reverse insertion did not leave through the top".into())
            });
        };
        if exits.last().is_some_and(|&prev| prev >= k) {
            return Err(TableauError::Invariant("exiting integers must increase".into()));
        }
        exits.push(k);
        cur = out.tableau;
    }
    exits.reverse();
    Ok((cur, exits))
}

/// Visits every semistandard tableau of `shape` with entries in `1..=max`.
///
/// Cells are filled column by column, top to bottom.
pub fn for_each_ssyt(shape: &SkewShape, max: u32, mut visit: impl FnMut(&SkewTableau)) {
    let outer = shape.outer();
    let inner = shape.inner();
    let mut cells: Vec<Cell> = shape.cells();
    cells.sort_by_key(|&(i, j)| (j, i));
    let nrows = outer.len();
    let width = outer.part(1);
    let mut grid = vec![vec![0u32; width + 2]; nrows + 2];

    fn go(
        idx: usize,
        cells: &[Cell],
        grid: &mut Vec<Vec<u32>>,
        max: u32,
        shape: &SkewShape,
        visit: &mut dyn FnMut(&SkewTableau),
    ) {
        if idx == cells.len() {
            let t = SkewTableau::from_fn(shape, |(i, j)| grid[i][j]).expect("semistandard by construction");
            visit(&t);
            return;
        }
        let (i, j) = cells[idx];
        let left = if shape.contains_cell((i, j - 1)) { grid[i][j - 1] } else { 1 };
        let above = if i > 1 && shape.contains_cell((i - 1, j)) { grid[i - 1][j] + 1 } else { 1 };
        let lo = left.max(above).max(1);
        for v in lo..=max {
            grid[i][j] = v;
            go(idx + 1, cells, grid, max, shape, visit);
        }
        grid[i][j] = 0;
    }
    let _ = inner;
    go(0, &cells, &mut grid, max, shape, &mut visit);
}

/// All semistandard tableaux of `shape` with entries in `1..=max`.
pub fn ssyt(shape: &SkewShape, max: u32) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, max, |t| out.push(t.clone()));
    out
}

/// Checks that insertion and reverse insertion undo each other on `t` for
/// every `k` in `1..=max_k` and every allowed starting row.
pub fn check_inverse_pairing(t: &SkewTableau, max_k: u32) -> Result<(), String> {
    for k in 1..=max_k {
        let ins = insert(t, k);
        if !ins.tableau.is_semistandard() {
            return Err(format!("inserting {k} broke semistandardness"));
        }
        let back = reverse_insert_from_row(&ins.tableau, ins.exit_row).map_err(|e| e.to_string())?;
        if back.exit_row != 0 || back.exit_value != Some(k) || back.tableau != *t {
            return Err(format!("insert {k} then reverse from row {} did not round trip", ins.exit_row));
        }
    }
    for i0 in 1..=t.rows.len() {
        if !can_insert_from_row(t, i0) {
            continue;
        }
        let ins = insert_from_row(t, i0).map_err(|e| e.to_string())?;
        if !ins.tableau.is_semistandard() {
            return Err(format!("insertion from row {i0} broke semistandardness"));
        }
        let back = reverse_insert_from_row(&ins.tableau, ins.exit_row).map_err(|e| e.to_string())?;
        if back.exit_row != i0 || back.tableau != *t {
            return Err(format!("insert from row {i0} then reverse did not round trip"));
        }
    }
    for i1 in 1..=t.rows.len() {
        if !can_reverse_insert_from_row(t, i1) {
            continue;
        }
        let rev = reverse_insert_from_row(t, i1).map_err(|e| e.to_string())?;
        if !rev.tableau.is_semistandard() {
            return Err(format!("reverse insertion from row {i1} broke semistandardness"));
        }
        let again = match rev.exit_value {
            Some(k) => insert(&rev.tableau, k),
            None => insert_from_row(&rev.tableau, rev.exit_row).map_err(|e| e.to_string())?,
        };
        if again.exit_row != i1 || again.tableau != *t {
            return Err(format!("reverse from row {i1} then forward did not round trip"));
        }
    }
    Ok(())
}

/// Checks the three non-crossing properties of successive insertions on `t`:
///
/// * (a) after a reverse insertion exiting in row `i0 > 0`, a reverse
///   insertion from a higher row exits strictly above `i0`;
/// * (b) after one leaving through the top with `k'`, a reverse insertion from
///   a higher row also leaves through the top, with a larger integer;
/// * (c) if a reverse insertion exits in `i0`, an insertion from a row below
///   `i0` exits strictly below the starting row of the reverse insertion.
pub fn check_noncrossing(t: &SkewTableau) -> Result<(), String> {
    let nrows = t.rows.len();
    for i1 in 1..=nrows {
        if !can_reverse_insert_from_row(t, i1) {
            continue;
        }
        let first = reverse_insert_from_row(t, i1).map_err(|e| e.to_string())?;
        let s = &first.tableau;
        for i2 in 1..i1 {
            if !can_reverse_insert_from_row(s, i2) {
                continue;
            }
            let second = reverse_insert_from_row(s, i2).map_err(|e| e.to_string())?;
            match first.exit_value {
                None => {
                    if second.exit_row >= first.exit_row {
                        return Err(format!(
                            "(a) reverse from {i1} exits {}, then from {i2} exits {}",
                            first.exit_row, second.exit_row
                        ));
                    }
                }
                Some(k1) => match second.exit_value {
                    Some(k2) if k2 > k1 => {}
                    _ => {
                        return Err(format!(
                            "(b) reverse from {i1} exits with {k1}, then from {i2}: row {} value {:?}",
                            second.exit_row, second.exit_value
                        ))
                    }
                },
            }
        }
        for i0 in (first.exit_row + 1)..=nrows {
            if !can_insert_from_row(t, i0) {
                continue;
            }
            let ins = insert_from_row(t, i0).map_err(|e| e.to_string())?;
            if ins.exit_row <= i1 {
                return Err(format!(
                    "(c) reverse from {i1} exits {}, insertion from {i0} exits {}",
                    first.exit_row, ins.exit_row
                ));
            }
        }
    }
    Ok(())
}

/// All semistandard tableaux of shape `λ⁺/μ⁻` with entries at most
/// `max_entry`, over `λ⁺/λ` of kind `outer_kind` and `μ/μ⁻` of kind
/// `inner_kind` with sizes adding to `r`.
pub fn strip_tableaux(
    lam: &Partition,
    mu: &Partition,
    r: usize,
    outer_kind: StripKind,
    inner_kind: StripKind,
    max_entry: u32,
) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    for j in 0..=r {
        for lp in enumerate_outer_extensions(lam, r - j, outer_kind) {
            for mm in enumerate_inner_contractions(mu, j, inner_kind) {
                out.extend(ssyt(&SkewShape::new(lp.clone(), mm).expect("μ⁻ ⊆ λ⁺"), max_entry));
            }
        }
    }
    out
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_involution(
    t: &SkewTableau,
    lam: &Partition,
    mu: &Partition,
    map: fn(&SkewTableau, &Partition, &Partition) -> Result<SkewTableau, TableauError>,
    outer_ok: fn(&SkewShape) -> bool,
    inner_ok: fn(&SkewShape) -> bool,
) -> Result<SkewTableau, String> {
    let image = map(t, lam, mu).map_err(|e| e.to_string())?;
    ensure(image.is_semistandard(), || format!("image {} is not semistandard", image.to_line()))?;
    let back = map(&image, lam, mu).map_err(|e| e.to_string())?;
    ensure(back == *t, || format!("applying twice gives {}", back.to_line()))?;
    if image != *t {
        let (a, b) = (t.inner().size() as i64, image.inner().size() as i64);
        ensure((a - b).abs() == 1, || format!("inner sizes {a} and {b} do not differ by one"))?;
        let outer = SkewShape::new(image.outer(), lam.clone()).map_err(|e| e.to_string())?;
        let inner = SkewShape::new(mu.clone(), image.inner()).map_err(|e| e.to_string())?;
        ensure(outer_ok(&outer) && inner_ok(&inner), || format!("image {} leaves the strip family", image.to_line()))?;
    } else {
        ensure(t.inner() == *mu, || "fixed point with inner shape other than μ".into())?;
    }
    Ok(image)
}

/// Checks on `t` that Φ is a sign-reversing involution within the
/// horizontal/vertical strip family and, at a fixed point, that the
/// decomposition into a tableau of shape `λ/μ` and a weakly increasing word
/// rebuilds `t`.
pub fn check_phi_involution(t: &SkewTableau, lam: &Partition, mu: &Partition) -> Result<(), String> {
    let image = check_involution(t, lam, mu, phi, SkewShape::is_horizontal_strip, SkewShape::is_vertical_strip)?;
    if image == *t {
        let (s, v) = phi_fixed_decompose(t, lam, mu).map_err(|e| e.to_string())?;
        ensure(s.outer() == *lam, || "decomposed tableau is not of outer shape λ".into())?;
        ensure(v.windows(2).all(|w| w[0] <= w[1]), || format!("word {v:?} is not weakly increasing"))?;
        ensure(insert_word(&s, &v) == *t, || "inserting the word does not rebuild the tableau".into())?;
    } else {
        ensure(phi_fixed_decompose(t, lam, mu).is_err(), || "non-fixed point decomposed".into())?;
    }
    Ok(())
}

/// The Ψ analogue of [`check_phi_involution`], with vertical/horizontal
/// strips and a strictly decreasing word.
pub fn check_psi_involution(t: &SkewTableau, lam: &Partition, mu: &Partition) -> Result<(), String> {
    let image = check_involution(t, lam, mu, psi, SkewShape::is_vertical_strip, SkewShape::is_horizontal_strip)?;
    if image == *t {
        let (s, w) = psi_fixed_decompose(t, lam, mu).map_err(|e| e.to_string())?;
        ensure(s.outer() == *lam, || "decomposed tableau is not of outer shape λ".into())?;
        ensure(w.windows(2).all(|x| x[0] > x[1]), || format!("word {w:?} is not strictly decreasing"))?;
        ensure(insert_word(&s, &w) == *t, || "inserting the word does not rebuild the tableau".into())?;
    } else if t.outer() == *lam {
        ensure(image.inner().size() == t.inner().size() + 1, || "image of a tableau of outer shape λ must shrink μ".into())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::contained_pairs;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn tab(s: &str) -> SkewTableau {
        s.parse().unwrap()
    }

    #[test]
    fn insert_examples() {
        let out = insert(&tab("1 2 / 3"), 1);
        assert_eq!(out.tableau, tab("1 1 / 2 / 3"));
        assert_eq!(out.exit_row, 3);
        assert_eq!(out.exit_value, None);
        assert_eq!(out.bumps.len(), 3);
        assert_eq!(out.bumps[0].to_string(), "row=1 col=2 out=2 in=1");
        assert_eq!(out.bumps[2].to_string(), "row=3 col=1 out=- in=3");

        let out = insert(&SkewTableau::empty(), 5);
        assert_eq!(out.tableau, tab("5"));
        assert_eq!(out.exit_row, 1);

        let out = insert(&tab("1"), 2);
        assert_eq!(out.tableau, tab("1 2"));
        assert_eq!(out.exit_row, 1);
    }

    #[test]
    fn insert_from_row_examples() {
        let t = tab(". 2 / 1 3");
        let out = insert_from_row(&t, 1).unwrap();
        assert_eq!(out.tableau, tab(". . / 1 2 / 3"));
        assert_eq!(out.exit_row, 3);

        // A lone cell moves down into a new row below the inner shape.
        let out = insert_from_row(&tab("4"), 1).unwrap();
        assert_eq!(out.tableau, tab(". / 4"));
        assert_eq!(out.exit_row, 2);

        // μ_1 = μ_2 = 1: row 2 has no inner corner.
        assert_eq!(
            insert_from_row(&tab(". 1 / . 2"), 2),
            Err(TableauError::InvalidStartRow(2))
        );
    }

    #[test]
    fn reverse_insert_examples() {
        let out = reverse_insert_from_row(&tab("1 1 / 2 / 3"), 3).unwrap();
        assert_eq!(out.tableau, tab("1 2 / 3"));
        assert_eq!((out.exit_row, out.exit_value), (0, Some(1)));

        let out = reverse_insert_from_row(&tab(". . / 1 2 / 3"), 3).unwrap();
        assert_eq!(out.tableau, tab(". 2 / 1 3"));
        assert_eq!((out.exit_row, out.exit_value), (1, None));

        let out = reverse_insert_from_row(&tab("7"), 1).unwrap();
        assert_eq!(out.tableau, SkewTableau::empty());
        assert_eq!((out.exit_row, out.exit_value), (0, Some(7)));

        assert_eq!(
            reverse_insert_from_row(&tab("1 2 / 3 4"), 1),
            Err(TableauError::NoOuterCorner(1))
        );
    }

    #[test]
    fn parse_rejects_bad_tableaux() {
        assert!("2 1".parse::<SkewTableau>().is_err());
        assert!("1 / 1".parse::<SkewTableau>().is_err());
        assert!("1 / 2 3".parse::<SkewTableau>().is_err());
        assert!("1 x".parse::<SkewTableau>().is_err());
        assert!(". 1 / . . 2".parse::<SkewTableau>().is_err());
    }

    #[test]
    fn render_round_trip() {
        let t = tab(". . 2 / 1 3");
        assert_eq!(t.to_line(), ". . 2 / 1 3");
        assert_eq!(t.render().parse::<SkewTableau>().unwrap(), t);
        let t = tab(". 1 / .");
        assert_eq!(t.shape().to_string(), "2,1/1,1");
        assert_eq!(t.to_line().parse::<SkewTableau>().unwrap(), t);
    }

    #[test]
    fn ssyt_counts() {
        // s_{21}(x1,x2,x3) has 8 tableaux; the domino (2,1)/(1) has n^2 fillings.
        assert_eq!(ssyt(&"2,1".parse().unwrap(), 3).len(), 8);
        assert_eq!(ssyt(&"2,1/1".parse().unwrap(), 3).len(), 9);
        assert_eq!(ssyt(&"2/2".parse().unwrap(), 3).len(), 1);
    }

    fn all_tableaux(max_outer: usize, max_entry: u32) -> Vec<SkewTableau> {
        let mut out = Vec::new();
        for (lam, mu) in contained_pairs(max_outer) {
            out.extend(ssyt(&SkewShape::new(lam, mu).unwrap(), max_entry));
        }
        out
    }

    #[test]
    fn insertion_and_reverse_are_inverse() {
        for t in all_tableaux(6, 4) {
            if let Err(e) = check_inverse_pairing(&t, 4) {
                panic!("{}: {e}", t.to_line());
            }
        }
    }

    #[test]
    fn insertions_never_cross() {
        for t in all_tableaux(5, 3) {
            if let Err(e) = check_noncrossing(&t) {
                panic!("{}: {e}", t.to_line());
            }
        }
    }

    #[test]
    fn phi_is_a_sign_reversing_involution() {
        for (lam, mu) in contained_pairs(4) {
            for r in 1..=3 {
                for t in strip_tableaux(&lam, &mu, r, StripKind::Horizontal, StripKind::Vertical, 3) {
                    if let Err(e) = check_phi_involution(&t, &lam, &mu) {
                        panic!("{}: {e}", t.to_line());
                    }
                }
            }
        }
    }

    #[test]
    fn psi_is_a_sign_reversing_involution() {
        for (lam, mu) in contained_pairs(4) {
            for r in 1..=3 {
                for t in strip_tableaux(&lam, &mu, r, StripKind::Vertical, StripKind::Horizontal, 3) {
                    if let Err(e) = check_psi_involution(&t, &lam, &mu) {
                        panic!("{}: {e}", t.to_line());
                    }
                }
            }
        }
    }

    #[test]
    fn phi_long_loop_examples() {
        let lam = p(&[8, 5, 5, 5, 3, 3]);
        let mu = p(&[4, 3, 2, 2, 2]);
        let word = "reinsert v=2,4,4,5".to_string();

        // the fifth reverse insertion leaves above the vertical strip and is kept
        let t = tab(". . . . 2 4 4 5 / . . 1 1 3 6 6 6 / . 1 2 2 4 / . 2 3 5 5 / . 4 5 6 / 3 5 6 / 5 6");
        let mut log = Vec::new();
        let image = phi_traced(&t, &lam, &mu, Some(&mut log)).unwrap();
        assert_eq!((image.outer(), image.inner()), (p(&[8, 8, 5, 5, 4, 3, 1]), p(&[3, 2, 1, 1, 1])));
        assert!(log.contains(&"reverse row=7 exit=1 (stop)".to_string()) && log.contains(&word));
        assert_eq!(phi(&image, &lam, &mu).unwrap(), t);

        // the fifth reverse insertion leaves too low; insert from the strip's top row instead
        let t = tab(". . . . 2 4 4 5 / . . 1 1 3 6 6 6 / . 1 3 4 5 / . 3 4 5 6 / . 5 5 6 / 3 6 6 / 5");
        let mut log = Vec::new();
        let image = phi_traced(&t, &lam, &mu, Some(&mut log)).unwrap();
        assert_eq!((image.outer(), image.inner()), (p(&[8, 8, 5, 5, 4, 3, 2]), p(&[4, 3, 1, 1, 1])));
        assert!(log.contains(&"insert from row=2 exit=7".to_string()) && log.contains(&word));
        assert_eq!(phi(&image, &lam, &mu).unwrap(), t);

        // five reverse insertions all leave through the top
        let t = tab(". . . . 1 1 2 4 5 / . . . 2 3 4 4 5 / . . 2 3 5 / . . 4 6 6 / . . 5 / 3 4 6 / 7");
        let mut log = Vec::new();
        assert_eq!(phi_traced(&t, &lam, &mu, Some(&mut log)).unwrap(), t);
        assert_eq!(log.last().unwrap(), "FIXED v=1,1,2,4,5");
        let (s, v) = phi_fixed_decompose(&t, &lam, &mu).unwrap();
        assert_eq!((s.outer(), s.inner(), v.clone()), (lam.clone(), mu.clone(), vec![1, 1, 2, 4, 5]));
        assert_eq!(insert_word(&s, &v), t);
    }

    #[test]
    fn psi_fixed_examples() {
        let lam = Partition::empty();
        let t = tab("1 / 2");
        assert_eq!(psi(&t, &lam, &lam).unwrap(), t);
        let (s, w) = psi_fixed_decompose(&t, &lam, &lam).unwrap();
        assert_eq!(s, SkewTableau::empty());
        assert_eq!(w, vec![2, 1]);

        let t = tab("1 2");
        let (s, w) = psi_fixed_decompose(&t, &p(&[2]), &Partition::empty()).unwrap();
        assert_eq!((s, w), (t, vec![]));

        // a single gray cell whose reverse insertion leaves through the top
        let t = tab("1 1 / 2");
        assert_eq!(psi(&t, &p(&[2]), &Partition::empty()).unwrap(), t);
    }

    #[test]
    fn phi_rejects_bad_strips() {
        let t = tab("1 / 2");
        assert!(matches!(
            phi(&t, &Partition::empty(), &Partition::empty()),
            Err(TableauError::Precondition(_))
        ));
        let (s, v) = phi_fixed_decompose(&tab(". 1"), &p(&[1]), &p(&[1])).unwrap();
        assert_eq!((s, v), (tab("."), vec![1]));
        assert!(matches!(
            phi_fixed_decompose(&tab("1"), &p(&[1]), &p(&[1])),
            Err(TableauError::NotFixedPoint(_))
        ));
    }
}
