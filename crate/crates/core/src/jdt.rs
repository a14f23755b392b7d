//! Jeu de taquin on standard skew tableaux.
//!
//! Also here: the k-NE property, counting the fillings of a skew shape that
//! rectify to a hook, and recomputing the skew quantum Murnaghan-Nakayama
//! coefficients from that count.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::ParseError;
use crate::qpoly::QPoly;
use crate::shapes::{Cell, Partition, SkewShape};
use crate::tableaux::parse_rows;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum JdtError {
    #[error("cell ({0}, {1}) is not a slide start for this shape")]
    InvalidSlide(usize, usize),
    #[error("not a standard filling: {0}")]
    NotStandard(String),
    #[error("hook (k, 1^(r-k)) needs 1 <= k <= r, got r = {r}, k = {k}")]
    HookRange { r: usize, k: usize },
}

/// A filling of a skew shape by `1..=n`, strictly increasing along rows and
/// down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: SkewShape,
    entries: BTreeMap<Cell, u32>,
}

/// Cells visited by the empty square during one slide; the first lies
/// outside the tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidePath {
    pub cells: Vec<Cell>,
}

impl fmt::Display for SlidePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|(i, j)| format!("({i},{j})")).collect();
        f.write_str(&parts.join(" -> "))
    }
}

impl StandardTableau {
    pub fn new(shape: SkewShape, entries: BTreeMap<Cell, u32>) -> Result<Self, JdtError> {
        let cells = shape.cells();
        if cells.len() != entries.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(JdtError::NotStandard("entries do not match the shape".into()));
        }
        let mut values: Vec<u32> = entries.values().copied().collect();
        values.sort_unstable();
        if values.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
            return Err(JdtError::NotStandard("entries are not 1..n".into()));
        }
        let t = StandardTableau { shape, entries };
        for (&(i, j), &v) in &t.entries {
            let right = t.entries.get(&(i, j + 1));
            let below = t.entries.get(&(i + 1, j));
            if right.is_some_and(|&r| r <= v) || below.is_some_and(|&b| b <= v) {
                return Err(JdtError::NotStandard(format!("order fails at ({i}, {j})")));
            }
        }
        Ok(t)
    }

    pub fn from_rows(shape: SkewShape, rows: &[Vec<u32>]) -> Result<Self, JdtError> {
        let mut entries = BTreeMap::new();
        for (k, row) in rows.iter().enumerate() {
            let m = shape.inner().part(k + 1);
            for (c, &v) in row.iter().enumerate() {
                entries.insert((k + 1, m + c + 1), v);
            }
        }
        StandardTableau::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.entries.get(&c).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.entries.iter().map(|(&c, &v)| (c, v))
    }

    /// Entries of row `i`, left to right.
    pub fn row(&self, i: usize) -> Vec<u32> {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(_, &v)| v).collect()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.inner().is_empty()
    }

    pub fn render(&self) -> String {
        let lines: Vec<String> = (1..=self.shape.outer().len())
            .map(|i| {
                let mut toks: Vec<String> = vec![".".into(); self.shape.inner().part(i)];
                toks.extend(self.row(i).iter().map(u32::to_string));
                toks.join(" ")
            })
            .collect();
        lines.join("\n")
    }

    pub fn to_line(&self) -> String {
        if self.shape.outer().is_empty() {
            return "-".into();
        }
        self.render().replace('\n', " / ")
    }

    /// Inner corners of the shape, top to bottom.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let inner = self.shape.inner();
        (1..=inner.len())
            .filter(|&i| inner.part(i + 1) < inner.part(i))
            .map(|i| (i, inner.part(i)))
            .collect()
    }

    /// Cells that can be added to the outer shape, top to bottom.
    pub fn outer_addable(&self) -> Vec<Cell> {
        let outer = self.shape.outer();
        (1..=outer.len() + 1)
            .filter(|&i| i == 1 || outer.part(i - 1) > outer.part(i))
            .map(|i| (i, outer.part(i) + 1))
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for StandardTableau {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (inner, rows) = parse_rows(s, |t| t.parse::<u32>().ok())?;
        let outer: Vec<usize> = inner.iter().zip(&rows).map(|(m, r)| m + r.len()).collect();
        let shape = SkewShape::new(Partition::try_from(outer)?, Partition::try_from(inner)?)
            .map_err(|e| ParseError::new("standard tableau", s, &e.to_string()))?;
        StandardTableau::from_rows(shape, &rows).map_err(|e| ParseError::new("standard tableau", s, &e.to_string()))
    }
}

fn shrink(p: &Partition, row: usize) -> Partition {
    p.with_part(row, p.part(row) - 1)
}

fn grow(p: &Partition, row: usize) -> Partition {
    p.with_part(row, p.part(row) + 1)
}

/// Backward slide into the inner corner `c`, also allowed when `c` touches
/// no cell of the tableau (the corner then just leaves both shapes).
fn backward_slide_raw(t: &StandardTableau, c: Cell) -> (StandardTableau, SlidePath) {
    let mut entries = t.entries.clone();
    let mut hole = c;
    let mut path = vec![c];
    loop {
        let (i, j) = hole;
        let right = entries.get(&(i, j + 1)).map(|&v| (v, (i, j + 1)));
        let below = entries.get(&(i + 1, j)).map(|&v| (v, (i + 1, j)));
        let next = match (right, below) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let Some((v, cell)) = next else { break };
        entries.remove(&cell);
        entries.insert(hole, v);
        hole = cell;
        path.push(cell);
    }
    let outer = shrink(t.shape.outer(), hole.0);
    let inner = shrink(t.shape.inner(), c.0);
    let shape = SkewShape::new(outer, inner).expect("slides keep a skew shape");
    (StandardTableau { shape, entries }, SlidePath { cells: path })
}

/// Jeu de taquin slide into `c`, an inner corner adjacent to the tableau:
/// the smaller of the right and lower neighbours moves in, repeatedly.
pub fn backward_slide(t: &StandardTableau, c: Cell) -> Result<(StandardTableau, SlidePath), JdtError> {
    let (i, j) = c;
    let corner = t.inner_corners().contains(&c);
    let touches = t.entries.contains_key(&(i, j + 1)) || t.entries.contains_key(&(i + 1, j));
    if !corner || !touches {
        return Err(JdtError::InvalidSlide(i, j));
    }
    Ok(backward_slide_raw(t, c))
}

/// Reverse slide from `c`, a cell addable to the outer shape and adjacent
/// to the tableau: the larger of the left and upper neighbours moves in.
pub fn forward_slide(t: &StandardTableau, c: Cell) -> Result<(StandardTableau, SlidePath), JdtError> {
    let (i, j) = c;
    let addable = t.outer_addable().contains(&c);
    let touches = (j > 1 && t.entries.contains_key(&(i, j - 1))) || (i > 1 && t.entries.contains_key(&(i - 1, j)));
    if !addable || !touches {
        return Err(JdtError::InvalidSlide(i, j));
    }
    let mut entries = t.entries.clone();
    let mut hole = c;
    let mut path = vec![c];
    loop {
        let (a, b) = hole;
        let left = (b > 1).then(|| entries.get(&(a, b - 1)).map(|&v| (v, (a, b - 1)))).flatten();
        let above = (a > 1).then(|| entries.get(&(a - 1, b)).map(|&v| (v, (a - 1, b)))).flatten();
        let next = match (left, above) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, y) => x.or(y),
        };
        let Some((v, cell)) = next else { break };
        entries.remove(&cell);
        entries.insert(hole, v);
        hole = cell;
        path.push(cell);
    }
    let outer = grow(t.shape.outer(), c.0);
    let inner = grow(t.shape.inner(), hole.0);
    let shape = SkewShape::new(outer, inner).expect("slides keep a skew shape");
    Ok((StandardTableau { shape, entries }, SlidePath { cells: path }))
}

/// Rectification, always sliding into the lowest inner corner.
pub fn rectify(t: &StandardTableau) -> StandardTableau {
    rectify_traced(t).0
}

/// [`rectify`] with the slides it performed.
pub fn rectify_traced(t: &StandardTableau) -> (StandardTableau, Vec<SlidePath>) {
    let mut cur = t.clone();
    let mut paths = Vec::new();
    while let Some(&c) = cur.inner_corners().last() {
        let (next, path) = backward_slide_raw(&cur, c);
        cur = next;
        paths.push(path);
    }
    (normalize_straight(cur), paths)
}

/// Drops the empty trailing rows a straight result may carry.
fn normalize_straight(t: StandardTableau) -> StandardTableau {
    let outer = Partition::new(t.shape.outer().parts().to_vec());
    StandardTableau {
        shape: SkewShape::straight(outer),
        entries: t.entries,
    }
}

/// Whether every sequence of inner-corner choices rectifies `t` to the same
/// tableau.
pub fn rectification_is_order_independent(t: &StandardTableau) -> bool {
    fn go(t: &StandardTableau, memo: &mut HashMap<StandardTableau, Option<StandardTableau>>) -> Option<StandardTableau> {
        if let Some(v) = memo.get(t) {
            return v.clone();
        }
        let corners = t.inner_corners();
        let result = if corners.is_empty() {
            Some(normalize_straight(t.clone()))
        } else {
            let mut results = corners.iter().map(|&c| go(&backward_slide_raw(t, c).0, memo));
            let first = results.next().flatten();
            if first.is_some() && results.all(|r| r == first) {
                first
            } else {
                None
            }
        };
        memo.insert(t.clone(), result.clone());
        result
    }
    go(t, &mut HashMap::new()).is_some()
}

/// The hook tableau of shape `(k, 1^{r-k})`: `1..k` across the first row,
/// `k+1..r` down the first column.
pub fn hook_tableau(r: usize, k: usize) -> Result<StandardTableau, JdtError> {
    if k < 1 || k > r {
        return Err(JdtError::HookRange { r, k });
    }
    let mut entries = BTreeMap::new();
    for j in 1..=k {
        entries.insert((1, j), j as u32);
    }
    for i in 2..=(r - k + 1) {
        entries.insert((i, 1), (k + i - 1) as u32);
    }
    StandardTableau::new(SkewShape::straight(Partition::hook(r, k)), entries)
}

/// The k-NE property: `k` sits in the last cell of the first nonempty row,
/// entries below `k` go strictly left to right in increasing order, and
/// entries above `k` go strictly top to bottom.
pub fn has_kne(t: &StandardTableau, k: u32) -> bool {
    let Some(top) = (1..=t.shape.outer().len()).find(|&i| !t.row(i).is_empty()) else {
        return false;
    };
    if t.row(top).last() != Some(&k) {
        return false;
    }
    let mut by_value: Vec<(u32, Cell)> = t.entries().map(|(c, v)| (v, c)).collect();
    by_value.sort_unstable();
    let small: Vec<Cell> = by_value.iter().filter(|(v, _)| *v < k).map(|&(_, c)| c).collect();
    let large: Vec<Cell> = by_value.iter().filter(|(v, _)| *v > k).map(|&(_, c)| c).collect();
    small.windows(2).all(|w| w[0].1 < w[1].1) && large.windows(2).all(|w| w[0].0 < w[1].0)
}

/// Checks on `t`: rectification is order independent, every backward and
/// forward slide is undone by the opposite slide from the end of its path,
/// and for each `k` with the k-NE property the shape is a broken ribbon and
/// every slide keeps the property.
pub fn check_slides(t: &StandardTableau) -> Result<(), String> {
    if !rectification_is_order_independent(t) {
        return Err("rectification depends on the corner order".into());
    }
    let kne: Vec<u32> = (1..=t.size() as u32).filter(|&k| has_kne(t, k)).collect();
    if !kne.is_empty() && !t.shape.is_broken_ribbon() {
        return Err(format!("k-NE for k = {} on a shape that is not a broken ribbon", kne[0]));
    }
    let check = |s: &StandardTableau, undo: Result<(StandardTableau, SlidePath), JdtError>, c: Cell| {
        let back = undo.map_err(|e| format!("slide at ({}, {}): reverse slide failed: {e}", c.0, c.1))?;
        if back.0 != *t {
            return Err(format!("slide at ({}, {}) is not undone", c.0, c.1));
        }
        if let Some(k) = kne.iter().find(|&&k| !has_kne(s, k)) {
            return Err(format!("slide at ({}, {}) loses the {k}-NE property", c.0, c.1));
        }
        Ok(())
    };
    for c in t.inner_corners() {
        if let Ok((s, path)) = backward_slide(t, c) {
            check(&s, forward_slide(&s, *path.cells.last().expect("nonempty path")), c)?;
        }
    }
    for c in t.outer_addable() {
        if let Ok((s, path)) = forward_slide(t, c) {
            check(&s, backward_slide(&s, *path.cells.last().expect("nonempty path")), c)?;
        }
    }
    Ok(())
}

/// Every standard filling of `shape`, placing `1, 2, …` in turn into cells
/// whose upper and left neighbours are already filled.
pub fn standard_tableaux(shape: &SkewShape) -> Vec<StandardTableau> {
    fn go(
        shape: &SkewShape,
        cells: &[Cell],
        next: u32,
        entries: &mut BTreeMap<Cell, u32>,
        out: &mut Vec<StandardTableau>,
    ) {
        if entries.len() == cells.len() {
            out.push(StandardTableau {
                shape: shape.clone(),
                entries: entries.clone(),
            });
            return;
        }
        for &(i, j) in cells {
            if entries.contains_key(&(i, j)) {
                continue;
            }
            let up_ok = !shape.contains_cell((i - 1, j)) || entries.contains_key(&(i - 1, j));
            let left_ok = !shape.contains_cell((i, j - 1)) || entries.contains_key(&(i, j - 1));
            if up_ok && left_ok {
                entries.insert((i, j), next);
                go(shape, cells, next + 1, entries, out);
                entries.remove(&(i, j));
            }
        }
    }
    let cells = shape.cells();
    let mut out = Vec::new();
    go(shape, &cells, 1, &mut BTreeMap::new(), &mut out);
    out
}

/// Number of standard fillings of `shape` that rectify to the hook tableau
/// of shape `(k, 1^{r-k})`, `r = |shape|`.
pub fn count_rectify_to_hook(shape: &SkewShape, k: usize) -> u64 {
    let Ok(hook) = hook_tableau(shape.size(), k) else {
        return 0;
    };
    standard_tableaux(shape)
        .iter()
        .filter(|t| rectify(t) == hook)
        .count() as u64
}

fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `binom(rib - 1, k - 1 - wt)` for a nonempty broken ribbon, `0` otherwise
/// and for out-of-range arguments.
pub fn lemma2_formula(shape: &SkewShape, k: usize) -> u64 {
    if shape.is_empty() {
        return 0;
    }
    match shape.ribbon_stats() {
        Ok(st) => binomial(st.rib as i64 - 1, k as i64 - 1 - st.wt as i64),
        Err(_) => 0,
    }
}

/// The skew shape obtained by placing `(μ/μ⁻)^c` below and to the left of
/// `λ⁺/λ`.
pub fn combined_shape(lam: &Partition, mu: &Partition, lam_plus: &Partition, mu_minus: &Partition) -> SkewShape {
    let lower_outer = mu.conjugate();
    let lower_inner = mu_minus.conjugate();
    let shift = lower_outer.part(1);
    let rows = lam_plus.len();
    let mut outer: Vec<usize> = (1..=rows).map(|i| lam_plus.part(i) + shift).collect();
    let mut inner: Vec<usize> = (1..=rows).map(|i| lam.part(i) + shift).collect();
    outer.extend(lower_outer.parts());
    inner.extend((1..=lower_outer.len()).map(|i| lower_inner.part(i)));
    SkewShape::new(Partition::new(outer), Partition::new(inner)).expect("placement keeps a skew shape")
}

/// `(-1)^{|μ/μ⁻|}` times the number of standard fillings of the combined
/// shape of `(μ/μ⁻)^c` and `λ⁺/λ` that rectify to the hook tableau
/// `(k, 1^{r-k})`.
pub fn slrr_coefficient_check(
    lam: &Partition,
    mu: &Partition,
    lam_plus: &Partition,
    mu_minus: &Partition,
    r: usize,
    k: usize,
) -> i64 {
    let shape = combined_shape(lam, mu, lam_plus, mu_minus);
    if shape.size() != r {
        return 0;
    }
    let count = count_rectify_to_hook(&shape, k) as i64;
    if (mu.size() - mu_minus.size()).is_multiple_of(2) {
        count
    } else {
        -count
    }
}

/// `Σ_k (-q)^{r-k}` [`slrr_coefficient_check`]: the coefficient of
/// `s_{λ⁺/μ⁻}` in `s_{λ/μ} ℘_r` computed through hook rectification.
pub fn slrr_coefficient(lam: &Partition, mu: &Partition, lam_plus: &Partition, mu_minus: &Partition, r: usize) -> QPoly {
    (1..=r).fold(QPoly::zero(), |acc, k| {
        let c = slrr_coefficient_check(lam, mu, lam_plus, mu_minus, r, k);
        acc + QPoly::neg_q().pow((r - k) as u32).scale(c)
    })
}
