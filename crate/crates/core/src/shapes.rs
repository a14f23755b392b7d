//! Partitions, skew shapes, and the strip / ribbon predicates on them.
//!
//! Rows and columns are numbered from 1, as in the usual English drawing of
//! a Young diagram: row 1 is the top row and cell `(i, j)` sits in row `i`,
//! column `j`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, ShapeError};

/// A cell `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts, which puts `1,1,1 < 2,1 < 3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing; use `try_from` for
    /// untrusted input.
    pub fn new(parts: Vec<usize>) -> Self {
        Partition::try_from(parts).expect("parts must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` for 1-based `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Length of column `j` (1-based), i.e. the `j`-th part of the conjugate.
    pub fn column(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width).map(|j| self.column(j)).collect(),
        }
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `self ⊇ other`, componentwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Returns a copy with row `i` (1-based) set to `value`.
    ///
    /// Panics if the result is not a partition.
    pub fn with_part(&self, i: usize, value: usize) -> Partition {
        let mut parts = self.parts.clone();
        if parts.len() < i {
            parts.resize(i, 0);
        }
        parts[i - 1] = value;
        Partition::new(parts)
    }

    /// The cells of the Young diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// `(k, 1^(r-k))`.
    pub fn hook(r: usize, k: usize) -> Partition {
        assert!(1 <= k && k <= r, "hook arm out of range");
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, r - k));
        Partition::new(parts)
    }

    /// `(1^r)`.
    pub fn column_shape(r: usize) -> Partition {
        Partition::new(vec![1; r])
    }

    /// `(r)`, or the empty partition for `r = 0`.
    pub fn row_shape(r: usize) -> Partition {
        Partition::new(vec![r])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ParseError;

    fn try_from(mut parts: Vec<usize>) -> Result<Self, Self::Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ParseError::new(
                "partition",
                &format!("{parts:?}"),
                "parts must be positive and weakly decreasing",
            ));
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// `"3,2,2"`; `"-"` (or nothing) is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "-" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ParseError::new("partition", s, "expected comma-separated integers"))?;
        if parts.contains(&0) {
            return Err(ParseError::new("partition", s, "parts must be positive"));
        }
        Partition::try_from(parts).map_err(|e| ParseError::new("partition", s, &e.reason))
    }
}

/// All partitions of `n`, in lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in 1..=max.min(remaining) {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions `μ ⊆ λ`, in lexicographic order.
pub fn subpartitions(lam: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = (0..=lam.size())
        .flat_map(|k| enumerate_inner_contractions(lam, k, StripKind::Any))
        .collect();
    out.sort();
    out
}

/// All pairs `(λ, μ)` with `μ ⊆ λ` and `|λ| <= max_size`.
pub fn contained_pairs(max_size: usize) -> Vec<(Partition, Partition)> {
    (0..=max_size)
        .flat_map(partitions_of)
        .flat_map(|lam| {
            subpartitions(&lam)
                .into_iter()
                .map(move |mu| (lam.clone(), mu))
        })
        .collect()
}

/// `λ/μ` for `μ ⊆ λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Height, width and number of components of a broken ribbon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RibbonStats {
    pub hgt: usize,
    pub wt: usize,
    pub rib: usize,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && j > self.inner.part(i) && j <= self.outer.part(i)
    }

    /// Cells row by row, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.outer.len())
            .flat_map(|i| ((self.inner.part(i) + 1)..=self.outer.part(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// No two cells in the same column.
    pub fn is_horizontal_strip(&self) -> bool {
        let oc = self.outer.conjugate();
        let ic = self.inner.conjugate();
        (1..=oc.len()).all(|i| oc.part(i) <= ic.part(i) + 1)
    }

    /// No two cells in the same row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i) + 1)
    }

    /// No 2x2 block of cells.
    pub fn is_broken_ribbon(&self) -> bool {
        (2..=self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1) + 1)
    }

    /// A nonempty, edge-connected broken ribbon.
    pub fn is_ribbon(&self) -> bool {
        self.is_broken_ribbon() && !self.is_empty() && self.components().len() == 1
    }

    /// Edge-connected components of the cell set.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let cells = self.cells();
        let mut seen = std::collections::HashSet::new();
        let mut comps = Vec::new();
        for &start in &cells {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some((i, j)) = queue.pop_front() {
                let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
                for n in nbrs {
                    if self.contains_cell(n) && seen.insert(n) {
                        comp.push(n);
                        queue.push_back(n);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }

    /// `(hgt, wt, rib)`; only defined on broken ribbons.
    pub fn ribbon_stats(&self) -> Result<RibbonStats, ShapeError> {
        if !self.is_broken_ribbon() {
            return Err(self.wrong_kind("broken ribbon"));
        }
        let comps = self.components();
        let mut stats = RibbonStats {
            hgt: 0,
            wt: 0,
            rib: comps.len(),
        };
        for comp in &comps {
            let rows: std::collections::BTreeSet<_> = comp.iter().map(|c| c.0).collect();
            let cols: std::collections::BTreeSet<_> = comp.iter().map(|c| c.1).collect();
            stats.hgt += rows.len() - 1;
            stats.wt += cols.len() - 1;
        }
        Ok(stats)
    }

    /// Topmost row holding a cell.
    pub fn top_row(&self) -> Option<usize> {
        (1..=self.outer.len()).find(|&i| self.outer.part(i) > self.inner.part(i))
    }

    /// Bottom row holding a cell.
    pub fn bottom_row(&self) -> Option<usize> {
        (1..=self.outer.len())
            .rev()
            .find(|&i| self.outer.part(i) > self.inner.part(i))
    }

    pub(crate) fn wrong_kind(&self, expected: &'static str) -> ShapeError {
        ShapeError::WrongKind {
            shape: self.to_string(),
            expected,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = ParseError;

    /// `"outer/inner"`, or a bare partition for a straight shape.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (o, i) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, "-"),
        };
        let outer: Partition = o.parse()?;
        let inner: Partition = i.parse()?;
        SkewShape::new(outer, inner)
            .map_err(|e| ParseError::new("skew shape", s, &e.to_string()))
    }
}

/// Which family of skew shapes an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    Horizontal,
    Vertical,
    Ribbon,
    BrokenRibbon,
    Any,
}

impl StripKind {
    pub fn admits(self, shape: &SkewShape) -> bool {
        match self {
            StripKind::Horizontal => shape.is_horizontal_strip(),
            StripKind::Vertical => shape.is_vertical_strip(),
            StripKind::Ribbon => shape.is_ribbon(),
            StripKind::BrokenRibbon => shape.is_broken_ribbon(),
            StripKind::Any => true,
        }
    }
}

/// Every `λ⁺ ⊇ base` with `|λ⁺/base| = size` and `λ⁺/base` of the given kind,
/// in lexicographic order.
pub fn enumerate_outer_extensions(base: &Partition, size: usize, kind: StripKind) -> Vec<Partition> {
    fn go(
        base: &Partition,
        row: usize,
        prev: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let lo = base.part(row);
        if remaining == 0 {
            let mut parts = cur.clone();
            parts.extend((row..=base.len()).map(|i| base.part(i)));
            out.push(Partition::new(parts));
            return;
        }
        let hi = prev.min(lo + remaining);
        for v in lo..=hi {
            if v == 0 {
                continue;
            }
            cur.push(v);
            go(base, row + 1, v, remaining - (v - lo), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(base, 1, usize::MAX, size, &mut Vec::new(), &mut out);
    out.retain(|p| kind.admits(&SkewShape::new(p.clone(), base.clone()).unwrap()));
    out.sort();
    out
}

/// Every `μ⁻ ⊆ base` with `|base/μ⁻| = size` and `base/μ⁻` of the given kind,
/// in lexicographic order.
pub fn enumerate_inner_contractions(base: &Partition, size: usize, kind: StripKind) -> Vec<Partition> {
    fn go(
        base: &Partition,
        row: usize,
        prev: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > base.len() {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        let b = base.part(row);
        let lo = b.saturating_sub(remaining);
        let hi = b.min(prev);
        for v in lo..=hi {
            cur.push(v);
            go(base, row + 1, v, remaining - (b - v), cur, out);
            cur.pop();
        }
    }
    if size > base.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(base, 1, usize::MAX, size, &mut Vec::new(), &mut out);
    out.retain(|p| kind.admits(&SkewShape::new(base.clone(), p.clone()).unwrap()));
    out.sort();
    out
}

/// All partitions `ν` with `lo ⊆ ν ⊆ hi`.
pub fn partitions_between(lo: &Partition, hi: &Partition) -> Vec<Partition> {
    if !hi.contains(lo) {
        return Vec::new();
    }
    (0..=(hi.size() - lo.size()))
        .flat_map(|k| enumerate_outer_extensions(lo, k, StripKind::Any))
        .filter(|p| hi.contains(p))
        .collect()
}

/// Skew shapes with exactly `cells` cells and no empty rows or columns.
///
/// Every skew diagram with that many cells appears here up to translation.
pub fn basic_skew_shapes(cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in cells..=(cells * cells) {
        for outer in partitions_of(n) {
            if outer.len() > cells || outer.part(1) > cells {
                continue;
            }
            for inner in enumerate_inner_contractions(&outer, cells, StripKind::Any) {
                let shape = SkewShape::new(outer.clone(), inner).unwrap();
                let rows_ok = (1..=outer.len()).all(|i| outer.part(i) > shape.inner.part(i));
                let oc = outer.conjugate();
                let ic = shape.inner.conjugate();
                let cols_ok = (1..=oc.len()).all(|j| oc.part(j) > ic.part(j));
                if rows_ok && cols_ok {
                    out.push(shape);
                }
            }
        }
    }
    out.sort();
    out
}
