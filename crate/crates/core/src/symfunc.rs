//! Symmetric polynomials in finitely many variables, stored in the monomial
//! basis, and formal sums of skew Schur functions.
//!
//! The coefficient of `m_ν` equals the coefficient of the dominant monomial
//! `x^ν`, so every operation here only ever computes dominant coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{ParseError, SymError};
use crate::qpoly::{NotDivisible, QPoly};
use crate::shapes::{partitions_of, Partition, SkewShape};

/// A symmetric polynomial `Σ c_λ m_λ(x_1, …, x_n)` with `c_λ ∈ Z[q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    nvars: usize,
    terms: BTreeMap<Partition, QPoly>,
}

impl SymFunc {
    pub fn zero(nvars: usize) -> Self {
        SymFunc {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        SymFunc::monomial(&Partition::empty(), nvars)
    }

    /// Builds from `(λ, c)` pairs, summing repeats and dropping monomials
    /// that vanish in `nvars` variables.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Partition, QPoly)>) -> Self {
        let mut out = SymFunc::zero(nvars);
        for (lam, c) in terms {
            out.add_term(lam, &c);
        }
        out
    }

    fn add_term(&mut self, lam: Partition, c: &QPoly) {
        if lam.len() > self.nvars || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lam).or_insert_with(QPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn monomial(lam: &Partition, nvars: usize) -> Self {
        SymFunc::from_terms(nvars, [(lam.clone(), QPoly::one())])
    }

    pub fn power_sum(r: usize, nvars: usize) -> Self {
        assert!(r >= 1, "power sums start at r = 1");
        SymFunc::monomial(&Partition::new(vec![r]), nvars)
    }

    pub fn elementary(r: usize, nvars: usize) -> Self {
        SymFunc::monomial(&Partition::column_shape(r), nvars)
    }

    /// The skew Schur polynomial in `nvars` variables.
    ///
    /// The coefficient of `m_ν` is the number of tableaux of content `ν`,
    /// counted as chains of horizontal strips of sizes `ν_1, ν_2, …`.
    pub fn skew_schur(shape: &SkewShape, nvars: usize) -> Self {
        let terms = partitions_of(shape.size())
            .into_iter()
            .filter(|nu| nu.len() <= nvars)
            .filter_map(|nu| {
                let count = kostka_count(shape, nu.parts());
                (count > 0).then(|| (nu, QPoly::constant(count)))
            });
        SymFunc::from_terms(nvars, terms)
    }

    /// `Σ_{τ ⊢ r} (1 - q)^{ℓ(τ) - 1} m_τ`, with the `r = 0` value `1`.
    pub fn qpower(r: usize, nvars: usize) -> Self {
        if r == 0 {
            return SymFunc::one(nvars);
        }
        let terms = partitions_of(r).into_iter().map(|tau| {
            let c = QPoly::one_minus_q().pow(tau.len() as u32 - 1);
            (tau, c)
        });
        SymFunc::from_terms(nvars, terms)
    }

    /// Product of [`SymFunc::qpower`] over the parts of `tau`.
    pub fn qpower_prod(tau: &Partition, nvars: usize) -> Self {
        tau.parts()
            .iter()
            .fold(SymFunc::one(nvars), |acc, &r| &acc * &SymFunc::qpower(r, nvars))
    }

    /// `Σ_{τ ⊢ r} q^{r - ℓ(τ)} (q - 1)^{ℓ(τ) - 1} m_τ`.
    pub fn barp(r: usize, nvars: usize) -> Self {
        assert!(r >= 1, "bar-p starts at r = 1");
        let terms = partitions_of(r).into_iter().map(|tau| {
            let l = tau.len();
            let c = QPoly::monomial(1, r - l) * QPoly::q_minus_one().pow(l as u32 - 1);
            (tau, c)
        });
        SymFunc::from_terms(nvars, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lam: &Partition) -> QPoly {
        self.terms.get(lam).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree of a term; `0` for constants and for zero.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &QPoly) -> SymFunc {
        SymFunc::from_terms(self.nvars, self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Divides every coefficient exactly by `d`.
    pub fn div_exact(&self, d: &QPoly) -> Result<SymFunc, NotDivisible> {
        let mut out = SymFunc::zero(self.nvars);
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v.div_exact(d)?);
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `q = v`.
    pub fn specialize(&self, v: i64) -> SymFunc {
        SymFunc::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(k, c)| (k.clone(), QPoly::constant(c.eval_int(v)))),
        )
    }

    /// Product in monomial coordinates.
    ///
    /// For each dominant exponent `ν` of the right degree, the coefficient is
    /// `Σ_a self[sort a] · other[sort(ν - a)]` over `0 ≤ a ≤ ν` componentwise.
    pub fn try_mul(&self, other: &SymFunc) -> Result<SymFunc, SymError> {
        if self.nvars != other.nvars {
            return Err(SymError::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        let n = self.nvars;
        let mut left_by_degree: BTreeMap<usize, HashMap<&[usize], &QPoly>> = BTreeMap::new();
        for (k, v) in &self.terms {
            left_by_degree.entry(k.size()).or_default().insert(k.parts(), v);
        }
        let mut right_by_degree: BTreeMap<usize, HashMap<&[usize], &QPoly>> = BTreeMap::new();
        for (k, v) in &other.terms {
            right_by_degree.entry(k.size()).or_default().insert(k.parts(), v);
        }
        let mut out = SymFunc::zero(n);
        let mut totals: Vec<usize> = left_by_degree
            .keys()
            .flat_map(|a| right_by_degree.keys().map(move |b| a + b))
            .collect();
        totals.sort();
        totals.dedup();
        for total in totals {
            for nu in partitions_of(total) {
                if nu.len() > n {
                    continue;
                }
                let mut acc = QPoly::zero();
                for (&da, left) in &left_by_degree {
                    let Some(right) = total.checked_sub(da).and_then(|db| right_by_degree.get(&db)) else {
                        continue;
                    };
                    for_each_subvector(nu.parts(), da, &mut |a, rest| {
                        let ka = sorted_key(a);
                        let Some(ca) = left.get(ka.as_slice()) else { return };
                        let kb = sorted_key(rest);
                        if let Some(cb) = right.get(kb.as_slice()) {
                            acc += &(*ca * *cb);
                        }
                    });
                }
                if !acc.is_zero() {
                    out.terms.insert(nu, acc);
                }
            }
        }
        Ok(out)
    }

    /// Multi-line rendering, one `(<coeff>) * m[<λ>]` per term; `0` if empty.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(k, v)| (k.to_string(), v)), 'm', "\n")
    }

    /// Parses the output of [`SymFunc::render`] (or the ` + ` joined form).
    pub fn parse(s: &str, nvars: usize) -> Result<SymFunc, ParseError> {
        let terms = parse_terms(s, 'm')?
            .into_iter()
            .map(|(c, body)| Ok((body.parse::<Partition>()?, c)))
            .collect::<Result<Vec<_>, ParseError>>()?;
        Ok(SymFunc::from_terms(nvars, terms))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v);
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    /// Panics on an nvars mismatch; see [`SymFunc::try_mul`].
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.try_mul(rhs).expect("nvars mismatch")
    }
}

fn sorted_key(v: &[usize]) -> Vec<usize> {
    let mut k: Vec<usize> = v.iter().copied().filter(|&x| x > 0).collect();
    k.sort_unstable_by(|a, b| b.cmp(a));
    k
}

/// Calls `f(a, ν - a)` for every `0 ≤ a ≤ ν` with `|a| = sum`.
fn for_each_subvector(nu: &[usize], sum: usize, f: &mut dyn FnMut(&[usize], &[usize])) {
    fn go(
        nu: &[usize],
        idx: usize,
        remaining: usize,
        tail_cap: &[usize],
        a: &mut Vec<usize>,
        b: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize], &[usize]),
    ) {
        if idx == nu.len() {
            if remaining == 0 {
                f(a, b);
            }
            return;
        }
        if tail_cap[idx] < remaining {
            return;
        }
        for x in 0..=nu[idx].min(remaining) {
            a.push(x);
            b.push(nu[idx] - x);
            go(nu, idx + 1, remaining - x, tail_cap, a, b, f);
            a.pop();
            b.pop();
        }
    }
    let mut tail_cap = vec![0; nu.len() + 1];
    for i in (0..nu.len()).rev() {
        tail_cap[i] = tail_cap[i + 1] + nu[i];
    }
    go(nu, 0, sum, &tail_cap, &mut Vec::new(), &mut Vec::new(), f);
}

/// Number of semistandard tableaux of `shape` with content `content`.
fn kostka_count(shape: &SkewShape, content: &[usize]) -> i64 {
    fn go(
        outer: &[usize],
        content: &[usize],
        step: usize,
        kappa: Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), i64>,
    ) -> i64 {
        if step == content.len() {
            return i64::from(kappa.as_slice() == outer);
        }
        if let Some(&v) = memo.get(&(step, kappa.clone())) {
            return v;
        }
        let mut total = 0;
        let mut next = Vec::new();
        horizontal_steps(&kappa, outer, content[step], &mut next);
        for k in next {
            total += go(outer, content, step + 1, k, memo);
        }
        memo.insert((step, kappa), total);
        total
    }
    let outer = shape.outer().parts().to_vec();
    let mut kappa = shape.inner().parts().to_vec();
    kappa.resize(outer.len(), 0);
    go(&outer, content, 0, kappa, &mut HashMap::new())
}

/// Every `κ'` with `κ ⊆ κ' ⊆ outer`, `κ'/κ` a horizontal strip of size `k`.
/// Both vectors are padded to `outer.len()`.
pub(crate) fn horizontal_steps(kappa: &[usize], outer: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn go(
        kappa: &[usize],
        outer: &[usize],
        row: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == kappa.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = kappa[row];
        let cap = if row == 0 { outer[0] } else { outer[row].min(kappa[row - 1]) };
        let hi = cap.min(lo + remaining);
        for v in lo..=hi {
            cur.push(v);
            go(kappa, outer, row + 1, remaining - (v - lo), cur, out);
            cur.pop();
        }
    }
    go(kappa, outer, 0, k, &mut Vec::new(), out);
}

/// Desk-scale guardrail: a variable count plus a degree limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymRing {
    pub nvars: usize,
    pub max_degree: usize,
}

impl SymRing {
    pub const DEFAULT_MAX_DEGREE: usize = 14;

    pub fn new(nvars: usize) -> Self {
        SymRing {
            nvars,
            max_degree: SymRing::DEFAULT_MAX_DEGREE,
        }
    }

    pub fn with_max_degree(self, max_degree: usize) -> Self {
        SymRing { max_degree, ..self }
    }

    pub fn check(&self, degree: usize) -> Result<(), SymError> {
        if degree > self.max_degree {
            Err(SymError::DegreeTooLarge {
                degree,
                max: self.max_degree,
            })
        } else {
            Ok(())
        }
    }

    pub fn skew_schur(&self, shape: &SkewShape) -> Result<SymFunc, SymError> {
        self.check(shape.size())?;
        Ok(SymFunc::skew_schur(shape, self.nvars))
    }

    pub fn qpower(&self, r: usize) -> Result<SymFunc, SymError> {
        self.check(r)?;
        Ok(SymFunc::qpower(r, self.nvars))
    }

    pub fn qpower_prod(&self, tau: &Partition) -> Result<SymFunc, SymError> {
        self.check(tau.size())?;
        Ok(SymFunc::qpower_prod(tau, self.nvars))
    }

    pub fn barp(&self, r: usize) -> Result<SymFunc, SymError> {
        self.check(r)?;
        Ok(SymFunc::barp(r, self.nvars))
    }

    pub fn elementary(&self, r: usize) -> Result<SymFunc, SymError> {
        self.check(r)?;
        Ok(SymFunc::elementary(r, self.nvars))
    }

    pub fn power_sum(&self, r: usize) -> Result<SymFunc, SymError> {
        self.check(r)?;
        Ok(SymFunc::power_sum(r, self.nvars))
    }

    pub fn mul(&self, a: &SymFunc, b: &SymFunc) -> Result<SymFunc, SymError> {
        self.check(a.degree() + b.degree())?;
        a.try_mul(b)
    }

    pub fn expand(&self, sum: &SkewSchurSum) -> Result<SymFunc, SymError> {
        self.check(sum.degree())?;
        Ok(sum.expand(self.nvars))
    }
}

/// A formal `Z[q]`-combination of skew Schur functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkewSchurSum {
    terms: BTreeMap<SkewShape, QPoly>,
}

impl SkewSchurSum {
    pub fn new() -> Self {
        SkewSchurSum::default()
    }

    pub fn single(shape: SkewShape) -> Self {
        let mut s = SkewSchurSum::new();
        s.add(shape, &QPoly::one());
        s
    }

    pub fn add(&mut self, shape: SkewShape, c: &QPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(shape.clone()).or_insert_with(QPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&shape);
        }
    }

    pub fn coeff(&self, shape: &SkewShape) -> QPoly {
        self.terms.get(shape).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SkewShape, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(SkewShape::size).max().unwrap_or(0)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&QPoly) -> QPoly) -> SkewSchurSum {
        let mut out = SkewSchurSum::new();
        for (k, v) in &self.terms {
            out.add(k.clone(), &f(v));
        }
        out
    }

    /// `Σ c_s · s_s(x_1, …, x_n)` in monomial coordinates.
    pub fn expand(&self, nvars: usize) -> SymFunc {
        let mut out = SymFunc::zero(nvars);
        for (shape, c) in &self.terms {
            out = &out + &SymFunc::skew_schur(shape, nvars).scale(c);
        }
        out
    }

    /// Terms in ascending order, one per line.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(k, v)| (k.to_string(), v)), 's', "\n")
    }

    /// Terms in descending order joined by ` + `.
    pub fn render_inline(&self) -> String {
        render_terms(self.terms.iter().rev().map(|(k, v)| (k.to_string(), v)), 's', " + ")
    }
}

impl fmt::Display for SkewSchurSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for SkewSchurSum {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = SkewSchurSum::new();
        for (c, body) in parse_terms(s, 's')? {
            out.add(body.parse()?, &c);
        }
        Ok(out)
    }
}

fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a QPoly)>, basis: char, sep: &str) -> String {
    let lines: Vec<String> = terms.map(|(k, v)| format!("({v}) * {basis}[{k}]")).collect();
    if lines.is_empty() {
        "0".to_string()
    } else {
        lines.join(sep)
    }
}

/// Splits `(<qpoly>) * <basis>[<body>]` terms separated by newlines or `+`.
fn parse_terms(s: &str, basis: char) -> Result<Vec<(QPoly, String)>, ParseError> {
    let what = if basis == 's' { "skew Schur sum" } else { "symmetric function" };
    let err = |reason: &str| ParseError::new(what, s, reason);
    let mut rest = s.trim();
    if rest == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let prefix = format!("* {basis}[");
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| err("unclosed '('"))?;
        let coeff: QPoly = rest[..close].parse()?;
        rest = rest[close + 1..].trim_start();
        rest = rest
            .strip_prefix(prefix.as_str())
            .ok_or_else(|| err(&format!("expected '{prefix}'")))?;
        let end = rest.find(']').ok_or_else(|| err("unclosed '['"))?;
        out.push((coeff, rest[..end].trim().to_string()));
        rest = rest[end + 1..].trim_start();
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{contained_pairs, enumerate_outer_extensions, StripKind};
    use crate::tableaux::for_each_ssyt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn qp(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn sf(n: usize, terms: &[(&str, &str)]) -> SymFunc {
        SymFunc::from_terms(n, terms.iter().map(|(k, v)| (p(k), qp(v))))
    }

    /// Skew Schur polynomial by direct tableau enumeration.
    fn skew_schur_brute(shape: &SkewShape, n: usize) -> SymFunc {
        let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
        for_each_ssyt(shape, n as u32, |t| {
            let c = t.content(n as u32);
            if c.windows(2).all(|w| w[0] >= w[1]) {
                *counts.entry(Partition::new(c)).or_default() += 1;
            }
        });
        SymFunc::from_terms(n, counts.into_iter().map(|(k, v)| (k, QPoly::constant(v))))
    }

    #[test]
    fn basis_examples() {
        assert_eq!(SymFunc::monomial(&p("1"), 2), sf(2, &[("1", "1")]));
        assert!(SymFunc::monomial(&p("2,1"), 1).is_zero());
        assert_eq!(SymFunc::monomial(&p("-"), 3), SymFunc::one(3));
        assert_eq!(SymFunc::power_sum(2, 2), sf(2, &[("2", "1")]));
        assert_eq!(SymFunc::elementary(2, 3), sf(3, &[("1,1", "1")]));
        assert_eq!(SymFunc::elementary(0, 3), SymFunc::one(3));
        assert!(SymFunc::elementary(4, 3).is_zero());
    }

    #[test]
    fn skew_schur_examples() {
        assert_eq!(
            SymFunc::skew_schur(&sh("2,1"), 3),
            sf(3, &[("2,1", "1"), ("1,1,1", "2")])
        );
        assert_eq!(SymFunc::skew_schur(&sh("1"), 4), sf(4, &[("1", "1")]));
        assert_eq!(SymFunc::skew_schur(&sh("3,1/3,1"), 2), SymFunc::one(2));
    }

    #[test]
    fn skew_schur_matches_tableau_enumeration() {
        for (lam, mu) in contained_pairs(6) {
            let shape = SkewShape::new(lam, mu).unwrap();
            for n in [1, 2, 3, shape.size().max(1)] {
                assert_eq!(
                    SymFunc::skew_schur(&shape, n),
                    skew_schur_brute(&shape, n),
                    "{shape} in {n} variables"
                );
            }
        }
    }

    #[test]
    fn qpower_examples() {
        let expected = sf(
            4,
            &[
                ("4", "1"),
                ("3,1", "1 - q"),
                ("2,2", "1 - q"),
                ("2,1,1", "1 - 2*q + q^2"),
                ("1,1,1,1", "1 - 3*q + 3*q^2 - q^3"),
            ],
        );
        assert_eq!(SymFunc::qpower(4, 4), expected);
        assert_eq!(SymFunc::qpower(1, 3), sf(3, &[("1", "1")]));
        assert_eq!(SymFunc::qpower(2, 2), sf(2, &[("2", "1"), ("1,1", "1 - q")]));
        assert_eq!(SymFunc::qpower(0, 2), SymFunc::one(2));
    }

    #[test]
    fn qpower_prod_examples() {
        // m_4 − 2(q−1)m_31 + (q²−2q+3)m_22 + 2(q−1)(q−2)m_211 + 6(q−1)²m_1111
        let expected = sf(
            4,
            &[
                ("4", "1"),
                ("3,1", "2 - 2*q"),
                ("2,2", "3 - 2*q + q^2"),
                ("2,1,1", "4 - 6*q + 2*q^2"),
                ("1,1,1,1", "6 - 12*q + 6*q^2"),
            ],
        );
        assert_eq!(SymFunc::qpower_prod(&p("2,2"), 4), expected);
        assert_eq!(SymFunc::qpower_prod(&p("-"), 3), SymFunc::one(3));
        assert_eq!(
            SymFunc::qpower_prod(&p("1,1"), 2),
            sf(2, &[("2", "1"), ("1,1", "2")])
        );
    }

    #[test]
    fn barp_examples() {
        // q³m_4 + q²(q−1)m_31 + q²(q−1)m_22 + q(q−1)²m_211 + (q−1)³m_1111
        let expected = sf(
            4,
            &[
                ("4", "q^3"),
                ("3,1", "-q^2 + q^3"),
                ("2,2", "-q^2 + q^3"),
                ("2,1,1", "q - 2*q^2 + q^3"),
                ("1,1,1,1", "-1 + 3*q - 3*q^2 + q^3"),
            ],
        );
        assert_eq!(SymFunc::barp(4, 4), expected);
        assert_eq!(SymFunc::barp(1, 2), sf(2, &[("1", "1")]));
        assert_eq!(SymFunc::barp(2, 2), sf(2, &[("2", "q"), ("1,1", "-1 + q")]));
    }

    #[test]
    fn mul_examples() {
        let m1 = SymFunc::monomial(&p("1"), 2);
        assert_eq!(&m1 * &m1, sf(2, &[("2", "1"), ("1,1", "2")]));
        let a = sf(3, &[("2,1", "1 - q"), ("3", "q")]);
        assert_eq!(&a * &SymFunc::one(3), a);
        let m1 = SymFunc::monomial(&p("1"), 1);
        assert_eq!(&m1 * &m1, sf(1, &[("2", "1")]));
        assert_eq!(
            SymFunc::one(2).try_mul(&SymFunc::one(3)),
            Err(SymError::NvarsMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn mul_matches_schur_products() {
        // s_1^3 = s_3 + 2 s_21 + s_111 in three variables
        let s1 = SymFunc::skew_schur(&sh("1"), 3);
        let cube = &(&s1 * &s1) * &s1;
        let mut rhs = SkewSchurSum::new();
        rhs.add(sh("3"), &QPoly::one());
        rhs.add(sh("2,1"), &QPoly::constant(2));
        rhs.add(sh("1,1,1"), &QPoly::one());
        assert_eq!(cube, rhs.expand(3));
    }

    #[test]
    fn expand_sum_examples() {
        assert_eq!(SkewSchurSum::single(sh("1")).expand(2), sf(2, &[("1", "1")]));
        assert!(SkewSchurSum::new().expand(2).is_zero());
        let mut s = SkewSchurSum::new();
        s.add(sh("2"), &QPoly::one());
        s.add(sh("1,1"), &QPoly::neg_q());
        assert_eq!(s.expand(2), sf(2, &[("2", "1"), ("1,1", "1 - q")]));
    }

    #[test]
    fn specialize_examples() {
        assert_eq!(SymFunc::qpower(4, 4).specialize(0), SymFunc::skew_schur(&sh("4"), 4));
        assert_eq!(SymFunc::qpower(3, 3).specialize(1), SymFunc::power_sum(3, 3));
        assert_eq!(SymFunc::one(2).specialize(7), SymFunc::one(2));
    }

    fn strip_sum(lam: &Partition, r: usize, kind: StripKind, signed_by_height: bool) -> SkewSchurSum {
        let mut out = SkewSchurSum::new();
        for lp in enumerate_outer_extensions(lam, r, kind) {
            let shape = SkewShape::straight(lp.clone());
            let c = if signed_by_height {
                let h = SkewShape::new(lp, lam.clone()).unwrap().ribbon_stats().unwrap().hgt;
                QPoly::constant(if h.is_multiple_of(2) { 1 } else { -1 })
            } else {
                QPoly::one()
            };
            out.add(shape, &c);
        }
        out
    }

    #[test]
    fn classical_pieri_and_murnaghan_nakayama() {
        for size in 0..=5 {
            for lam in partitions_of(size) {
                for r in 1..=3 {
                    let n = size + r;
                    let s_lam = SymFunc::skew_schur(&SkewShape::straight(lam.clone()), n);
                    let h = SymFunc::skew_schur(&sh(&r.to_string()), n);
                    assert_eq!(
                        &s_lam * &h,
                        strip_sum(&lam, r, StripKind::Horizontal, false).expand(n)
                    );
                    let e = SymFunc::elementary(r, n);
                    assert_eq!(
                        &s_lam * &e,
                        strip_sum(&lam, r, StripKind::Vertical, false).expand(n)
                    );
                    let pr = SymFunc::power_sum(r, n);
                    assert_eq!(
                        &s_lam * &pr,
                        strip_sum(&lam, r, StripKind::Ribbon, true).expand(n)
                    );
                }
            }
        }
    }

    #[test]
    fn qpower_is_a_signed_hook_sum() {
        for r in 1..=6 {
            let mut hooks = SkewSchurSum::new();
            for k in 1..=r {
                hooks.add(
                    SkewShape::straight(Partition::hook(r, k)),
                    &QPoly::neg_q().pow((r - k) as u32),
                );
            }
            assert_eq!(SymFunc::qpower(r, r), hooks.expand(r), "r = {r}");
        }
    }

    #[test]
    fn specializations() {
        for r in 1..=6 {
            let n = r;
            assert_eq!(SymFunc::qpower(r, n).specialize(0), SymFunc::skew_schur(&SkewShape::straight(Partition::row_shape(r)), n));
            assert_eq!(SymFunc::qpower(r, n).specialize(1), SymFunc::power_sum(r, n));
            let bp = SymFunc::barp(r, n);
            assert_eq!(bp.specialize(1), SymFunc::power_sum(r, n));
            let low = SymFunc::from_terms(n, bp.terms().map(|(k, v)| (k.clone(), QPoly::constant(v.coeff(0)))));
            let sign = if r % 2 == 1 { 1 } else { -1 };
            assert_eq!(low, SymFunc::elementary(r, n).scale(&QPoly::constant(sign)));
            let top = SymFunc::from_terms(n, bp.terms().map(|(k, v)| (k.clone(), QPoly::constant(v.coeff(r - 1)))));
            assert_eq!(top, SymFunc::skew_schur(&SkewShape::straight(Partition::row_shape(r)), n));
        }
    }

    #[test]
    fn standard_filling_count_is_conjugation_invariant() {
        for (lam, mu) in contained_pairs(6) {
            let s = SkewShape::new(lam, mu).unwrap();
            let n = s.size();
            let ones = Partition::column_shape(n);
            assert_eq!(
                SymFunc::skew_schur(&s, n).coeff(&ones),
                SymFunc::skew_schur(&s.conjugate(), n).coeff(&ones)
            );
        }
    }

    #[test]
    fn degree_guard() {
        let ring = SymRing::new(3).with_max_degree(4);
        assert!(ring.qpower(4).is_ok());
        assert_eq!(
            ring.skew_schur(&sh("3,2")),
            Err(SymError::DegreeTooLarge { degree: 5, max: 4 })
        );
        let a = ring.qpower(3).unwrap();
        assert!(ring.mul(&a, &a).is_err());
    }

    #[test]
    fn render_and_parse() {
        let f = SymFunc::qpower(3, 3);
        assert_eq!(f.render(), "(1 - 2*q + q^2) * m[1,1,1]\n(1 - q) * m[2,1]\n(1) * m[3]");
        assert_eq!(SymFunc::parse(&f.render(), 3).unwrap(), f);
        assert_eq!(SymFunc::zero(2).render(), "0");
        assert_eq!(SymFunc::parse("0", 2).unwrap(), SymFunc::zero(2));

        let mut s = SkewSchurSum::new();
        s.add(sh("3"), &QPoly::one());
        s.add(sh("2,1"), &QPoly::neg_q());
        s.add(sh("1,1,1"), &qp("q^2"));
        s.add(sh("3,2/1"), &qp("1 - q"));
        assert_eq!(
            s.render(),
            "(q^2) * s[1,1,1]\n(-q) * s[2,1]\n(1) * s[3]\n(1 - q) * s[3,2/1]"
        );
        assert_eq!(s.render().parse::<SkewSchurSum>().unwrap(), s);
        assert_eq!(s.render_inline().parse::<SkewSchurSum>().unwrap(), s);
        assert!("(1) * m[3]".parse::<SkewSchurSum>().is_err());
        assert!("(1 * s[3]".parse::<SkewSchurSum>().is_err());
    }
}
