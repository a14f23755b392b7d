//! Colored tableaux, their two-stage cancellation, and the formal right-hand
//! sides of the skew Pieri and skew Murnaghan-Nakayama type rules.
//!
//! A colored tableau is a semistandard tableau `T` of shape `λ⁺/μ⁻` together
//! with intermediate shapes `λ ⊆ λ' ⊆ λ⁺` and `μ⁻ ⊆ μ' ⊆ μ`. The cells of
//! `λ⁺/λ'` and `μ'/μ⁻` are gray; everything else is white.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{ParseError, ShapeError};
use crate::qpoly::QPoly;
use crate::shapes::{
    enumerate_inner_contractions, enumerate_outer_extensions, partitions_between, partitions_of, Cell,
    Partition, RibbonStats, SkewShape, StripKind,
};
use crate::symfunc::{SkewSchurSum, SymFunc};
use crate::tableaux::{
    for_each_ssyt, insert_word, parse_rows, phi, phi_fixed_decompose, psi, psi_fixed_decompose, SkewTableau,
    TableauError,
};

/// A semistandard tableau with a gray/white coloring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredTableau {
    tableau: SkewTableau,
    base_outer: Partition,
    base_inner: Partition,
    split_outer: Partition,
    split_inner: Partition,
}

/// What one cancellation step does with a colored tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CancelOutcome {
    PairedWith(ColoredTableau),
    Survivor {
        tableau: SkewTableau,
        v: Vec<u32>,
        w: Vec<u32>,
    },
}

fn strip(outer: &Partition, inner: &Partition) -> Option<SkewShape> {
    SkewShape::new(outer.clone(), inner.clone()).ok()
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ColoredTableau {
    /// Checks every shape condition of a colored tableau.
    pub fn new(
        tableau: SkewTableau,
        lam: Partition,
        mu: Partition,
        split_outer: Partition,
        split_inner: Partition,
    ) -> Result<Self, TableauError> {
        let lp = tableau.outer();
        let mm = tableau.inner();
        let bad = |what: &str| Err(TableauError::Precondition(what.to_string()));
        if !mu.contains(&split_inner) || !split_inner.contains(&mm) || !lp.contains(&split_outer) || !split_outer.contains(&lam) || !lam.contains(&mu) {
            return bad("shapes must nest as μ⁻ ⊆ μ' ⊆ μ ⊆ λ ⊆ λ' ⊆ λ⁺");
        }
        let ok = strip(&lp, &lam).is_some_and(|s| s.is_broken_ribbon())
            && strip(&mu, &mm).is_some_and(|s| s.is_broken_ribbon())
            && strip(&split_outer, &lam).is_some_and(|s| s.is_horizontal_strip())
            && strip(&split_inner, &mm).is_some_and(|s| s.is_horizontal_strip())
            && strip(&lp, &split_outer).is_some_and(|s| s.is_vertical_strip())
            && strip(&mu, &split_inner).is_some_and(|s| s.is_vertical_strip());
        if !ok {
            return bad("the strips of a colored tableau have the wrong kinds");
        }
        Ok(ColoredTableau {
            tableau,
            base_outer: lam,
            base_inner: mu,
            split_outer,
            split_inner,
        })
    }

    pub fn tableau(&self) -> &SkewTableau {
        &self.tableau
    }

    pub fn base_outer(&self) -> &Partition {
        &self.base_outer
    }

    pub fn base_inner(&self) -> &Partition {
        &self.base_inner
    }

    pub fn split_outer(&self) -> &Partition {
        &self.split_outer
    }

    pub fn split_inner(&self) -> &Partition {
        &self.split_inner
    }

    pub fn is_gray(&self, (i, j): Cell) -> bool {
        (j > self.split_outer.part(i) && j <= self.tableau.outer().part(i))
            || (j > self.tableau.inner().part(i) && j <= self.split_inner.part(i))
    }

    pub fn gray_count(&self) -> usize {
        (self.tableau.outer().size() - self.split_outer.size()) + (self.split_inner.size() - self.tableau.inner().size())
    }

    /// `(-1)^{|μ/μ⁻|} (-q)^{#gray}`.
    pub fn weight(&self) -> QPoly {
        let removed = self.base_inner.size() - self.tableau.inner().size();
        QPoly::constant(sign(removed)) * QPoly::neg_q().pow(self.gray_count() as u32)
    }

    /// Rendering in the tableau text format with a `g` after gray entries.
    pub fn render(&self) -> String {
        self.tableau.render_with(|c, v| {
            if self.is_gray(c) {
                format!("{v}g")
            } else {
                v.to_string()
            }
        })
    }

    /// Parses the `g`-marked text format; `λ` and `μ` are not recoverable
    /// from the text and are passed in.
    pub fn parse(s: &str, lam: &Partition, mu: &Partition) -> Result<Self, ParseError> {
        let err = |reason: &str| ParseError::new("colored tableau", s, reason);
        let (inner, rows) = parse_rows(s, |t| {
            let (num, gray) = match t.strip_suffix('g') {
                Some(n) => (n, true),
                None => (t, false),
            };
            num.parse::<u32>().ok().filter(|&v| v > 0).map(|v| (v, gray))
        })?;
        let plain: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&(v, _)| v).collect()).collect();
        let outer: Vec<usize> = inner.iter().zip(&rows).map(|(m, r)| m + r.len()).collect();
        let shape = SkewShape::new(Partition::try_from(outer)?, Partition::try_from(inner.clone())?)
            .map_err(|e| err(&e.to_string()))?;
        let tableau = SkewTableau::new(&shape, plain).map_err(|e| err(&e.to_string()))?;
        let mut so = Vec::new();
        let mut si = Vec::new();
        for (k, row) in rows.iter().enumerate() {
            let i = k + 1;
            let mut outer_gray = 0;
            let mut inner_gray = 0;
            for (c, &(_, gray)) in row.iter().enumerate() {
                let j = inner[k] + c + 1;
                if !gray {
                    continue;
                }
                if j > lam.part(i) {
                    outer_gray += 1;
                } else if j <= mu.part(i) {
                    inner_gray += 1;
                } else {
                    return Err(err("gray cell outside both strips"));
                }
            }
            so.push(shape.outer().part(i) - outer_gray);
            si.push(inner[k] + inner_gray);
        }
        let so = Partition::try_from(so).map_err(|_| err("white cells do not form a skew shape"))?;
        let si = Partition::try_from(si).map_err(|_| err("white cells do not form a skew shape"))?;
        let ct = ColoredTableau::new(tableau, lam.clone(), mu.clone(), so, si).map_err(|e| err(&e.to_string()))?;
        let matches = rows.iter().enumerate().all(|(k, row)| {
            row.iter()
                .enumerate()
                .all(|(c, &(_, gray))| ct.is_gray((k + 1, inner[k] + c + 1)) == gray)
        });
        if !matches {
            return Err(err("gray cells do not match a split"));
        }
        Ok(ct)
    }
}

impl fmt::Display for ColoredTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn require_broken_ribbon(outer: &Partition, inner: &Partition) -> Result<(SkewShape, RibbonStats), ShapeError> {
    let s = SkewShape::new(outer.clone(), inner.clone())?;
    let stats = s.ribbon_stats()?;
    Ok((s, stats))
}

/// All `(λ', μ')` splitting `λ⁺/λ` and `μ/μ⁻` into a horizontal and a
/// vertical strip each.
pub fn enumerate_splits(
    lam: &Partition,
    lam_plus: &Partition,
    mu_minus: &Partition,
    mu: &Partition,
) -> Result<Vec<(Partition, Partition)>, ShapeError> {
    require_broken_ribbon(lam_plus, lam)?;
    require_broken_ribbon(mu, mu_minus)?;
    let outers: Vec<Partition> = partitions_between(lam, lam_plus)
        .into_iter()
        .filter(|p| {
            strip(p, lam).is_some_and(|s| s.is_horizontal_strip())
                && strip(lam_plus, p).is_some_and(|s| s.is_vertical_strip())
        })
        .collect();
    let inners: Vec<Partition> = partitions_between(mu_minus, mu)
        .into_iter()
        .filter(|p| {
            strip(p, mu_minus).is_some_and(|s| s.is_horizontal_strip())
                && strip(mu, p).is_some_and(|s| s.is_vertical_strip())
        })
        .collect();
    let mut out: Vec<(Partition, Partition)> = outers
        .iter()
        .flat_map(|o| inners.iter().map(move |i| (o.clone(), i.clone())))
        .collect();
    out.sort();
    Ok(out)
}

/// `Σ (-1)^{|μ/μ⁻|} (-q)^{#gray}` over all splits.
pub fn split_weight_sum(
    lam: &Partition,
    lam_plus: &Partition,
    mu_minus: &Partition,
    mu: &Partition,
) -> Result<QPoly, ShapeError> {
    let removed = mu.size() - mu_minus.size();
    let mut total = QPoly::zero();
    for (o, i) in enumerate_splits(lam, lam_plus, mu_minus, mu)? {
        let gray = lam_plus.size() - o.size() + i.size() - mu_minus.size();
        total += &(QPoly::constant(sign(removed)) * QPoly::neg_q().pow(gray as u32));
    }
    Ok(total)
}

/// Closed form of [`split_weight_sum`].
pub fn split_weight_closed_form(
    lam: &Partition,
    lam_plus: &Partition,
    mu_minus: &Partition,
    mu: &Partition,
) -> Result<QPoly, ShapeError> {
    let (_, a) = require_broken_ribbon(lam_plus, lam)?;
    let (outer_inner, b) = require_broken_ribbon(mu, mu_minus)?;
    Ok(QPoly::constant(sign(outer_inner.size()))
        * QPoly::neg_q().pow((a.hgt + b.wt) as u32)
        * QPoly::one_minus_q().pow((a.rib + b.rib) as u32))
}

/// Sums `coeff(λ⁺/λ, μ/μ⁻) s_{λ⁺/μ⁻}` over `λ⁺/λ` of kind `outer_kind`
/// and `μ/μ⁻` of kind `inner_kind` with total size `r`. Returns `s_{λ/μ}`
/// when `r = 0`.
fn strip_pair_sum(
    lam: &Partition,
    mu: &Partition,
    r: usize,
    outer_kind: StripKind,
    inner_kind: StripKind,
    mut coeff: impl FnMut(&SkewShape, &SkewShape) -> QPoly,
) -> SkewSchurSum {
    let base = SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ");
    if r == 0 {
        return SkewSchurSum::single(base);
    }
    let mut out = SkewSchurSum::new();
    for j in 0..=r {
        let inners = enumerate_inner_contractions(mu, j, inner_kind);
        if inners.is_empty() {
            continue;
        }
        for lp in enumerate_outer_extensions(lam, r - j, outer_kind) {
            let a = SkewShape::new(lp.clone(), lam.clone()).expect("extension");
            for mm in &inners {
                let b = SkewShape::new(mu.clone(), mm.clone()).expect("contraction");
                let c = coeff(&a, &b);
                out.add(SkewShape::new(lp.clone(), mm.clone()).expect("μ⁻ ⊆ λ⁺"), &c);
            }
        }
    }
    out
}

fn stats(s: &SkewShape) -> RibbonStats {
    s.ribbon_stats().expect("enumerated as a broken ribbon")
}

/// The skew Pieri rule: `s_{λ/μ} h_r`.
pub fn rhs_spr(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    strip_pair_sum(lam, mu, r, StripKind::Horizontal, StripKind::Vertical, |_, b| {
        QPoly::constant(sign(b.size()))
    })
}

/// The conjugate skew Pieri rule: `s_{λ/μ} e_r`.
pub fn rhs_cspr(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    strip_pair_sum(lam, mu, r, StripKind::Vertical, StripKind::Horizontal, |_, b| {
        QPoly::constant(sign(b.size()))
    })
}

/// The skew Murnaghan-Nakayama rule: `s_{λ/μ} p_r`.
pub fn rhs_smnr(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    if r == 0 {
        return SkewSchurSum::single(SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ"));
    }
    let mut out = SkewSchurSum::new();
    for lp in enumerate_outer_extensions(lam, r, StripKind::Ribbon) {
        let h = stats(&SkewShape::new(lp.clone(), lam.clone()).unwrap()).hgt;
        out.add(SkewShape::new(lp, mu.clone()).unwrap(), &QPoly::constant(sign(h)));
    }
    for mm in enumerate_inner_contractions(mu, r, StripKind::Ribbon) {
        let h = stats(&SkewShape::new(mu.clone(), mm.clone()).unwrap()).hgt;
        out.add(SkewShape::new(lam.clone(), mm).unwrap(), &QPoly::constant(-sign(h)));
    }
    out
}

/// The quantum Murnaghan-Nakayama rule for a straight shape: `s_λ ℘_r`.
pub fn rhs_qmnr(lam: &Partition, r: usize) -> SkewSchurSum {
    let empty = Partition::empty();
    strip_pair_sum(lam, &empty, r, StripKind::BrokenRibbon, StripKind::BrokenRibbon, |a, _| {
        let st = stats(a);
        QPoly::constant(sign(r + 1 + st.wt))
            * QPoly::monomial(1, st.hgt)
            * QPoly::q_minus_one().pow(st.rib as u32 - 1)
    })
}

/// The skew quantum Murnaghan-Nakayama rule, sign-split form.
pub fn rhs_sqmnr(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    strip_pair_sum(lam, mu, r, StripKind::BrokenRibbon, StripKind::BrokenRibbon, |a, b| {
        let (sa, sb) = (stats(a), stats(b));
        let j = b.size();
        QPoly::constant(sign(r + 1 - j + sa.wt + sb.hgt))
            * QPoly::monomial(1, sa.hgt + sb.wt)
            * QPoly::q_minus_one().pow((sa.rib + sb.rib) as u32 - 1)
    })
}

/// The skew quantum Murnaghan-Nakayama rule in `(-q)`, `(1 - q)` form.
pub fn rhs_sqmnr_prime(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    strip_pair_sum(lam, mu, r, StripKind::BrokenRibbon, StripKind::BrokenRibbon, |a, b| {
        let (sa, sb) = (stats(a), stats(b));
        QPoly::constant(sign(b.size()))
            * QPoly::neg_q().pow((sa.hgt + sb.wt) as u32)
            * QPoly::one_minus_q().pow((sa.rib + sb.rib) as u32 - 1)
    })
}

/// The bar-p analogue: `s_{λ/μ} p̄_r`.
pub fn rhs_sqmnr3(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    strip_pair_sum(lam, mu, r, StripKind::BrokenRibbon, StripKind::BrokenRibbon, |a, b| {
        let (sa, sb) = (stats(a), stats(b));
        QPoly::constant(sign(r - 1 + b.size()))
            * QPoly::neg_q().pow((sa.wt + sb.hgt) as u32)
            * QPoly::one_minus_q().pow((sa.rib + sb.rib) as u32 - 1)
    })
}

/// Coefficient of `(-1)^{|μ/μ⁻|} s_{λ⁺/μ⁻}` in `s_{λ/μ} ℘_τ`: a sum over
/// pairs of an increasing chain `λ ⊆ … ⊆ λ⁺` and a decreasing chain
/// `μ ⊇ … ⊇ μ⁻` whose `i`-th steps are broken ribbons of total size `τ_i`.
///
/// Every step contributes `(-q)^{hgt + wt} (1 - q)^{rib + rib - 1}`, so
/// the exponent of `1 - q` over the whole pair is `rib + rib - ℓ(τ)`.
pub fn chi_coefficient(
    lam_plus: &Partition,
    lam: &Partition,
    mu: &Partition,
    mu_minus: &Partition,
    tau: &Partition,
) -> QPoly {
    fn go(
        step: usize,
        tau: &[usize],
        outer: &Partition,
        inner: &Partition,
        lam_plus: &Partition,
        mu_minus: &Partition,
        memo: &mut HashMap<(usize, Partition, Partition), QPoly>,
    ) -> QPoly {
        if step == tau.len() {
            return if outer == lam_plus && inner == mu_minus {
                QPoly::one()
            } else {
                QPoly::zero()
            };
        }
        let key = (step, outer.clone(), inner.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = QPoly::zero();
        let r = tau[step];
        let room_out = lam_plus.size() - outer.size();
        let room_in = inner.size() - mu_minus.size();
        for j in 0..=r.min(room_in) {
            if r - j > room_out {
                continue;
            }
            for o in enumerate_outer_extensions(outer, r - j, StripKind::BrokenRibbon) {
                if !lam_plus.contains(&o) {
                    continue;
                }
                let sa = stats(&SkewShape::new(o.clone(), outer.clone()).unwrap());
                for i in enumerate_inner_contractions(inner, j, StripKind::BrokenRibbon) {
                    if !i.contains(mu_minus) {
                        continue;
                    }
                    let sb = stats(&SkewShape::new(inner.clone(), i.clone()).unwrap());
                    let w = QPoly::neg_q().pow((sa.hgt + sb.wt) as u32)
                        * QPoly::one_minus_q().pow((sa.rib + sb.rib) as u32 - 1);
                    let rest = go(step + 1, tau, &o, &i, lam_plus, mu_minus, memo);
                    total += &(w * rest);
                }
            }
        }
        memo.insert(key, total.clone());
        total
    }
    if !lam_plus.contains(lam) || !mu.contains(mu_minus) || lam_plus.size() + mu.size() != lam.size() + mu_minus.size() + tau.size() {
        return QPoly::zero();
    }
    go(0, tau.parts(), lam, mu, lam_plus, mu_minus, &mut HashMap::new())
}

/// `Σ (-1)^{|μ/μ⁻|} χ(λ⁺, λ, μ, μ⁻; τ) s_{λ⁺/μ⁻}`.
pub fn rhs_chi(lam: &Partition, mu: &Partition, tau: &Partition) -> SkewSchurSum {
    let r = tau.size();
    let mut out = SkewSchurSum::new();
    for j in 0..=r.min(mu.size()) {
        for lp in enumerate_outer_extensions(lam, r - j, StripKind::Any) {
            for mm in enumerate_inner_contractions(mu, j, StripKind::Any) {
                let c = chi_coefficient(&lp, lam, mu, &mm, tau);
                out.add(SkewShape::new(lp.clone(), mm).unwrap(), &(QPoly::constant(sign(j)) * c));
            }
        }
    }
    out
}

/// One step of the cancellation: Ψ on the gray cells, then Φ on the white
/// tableau that remains.
pub fn cancel_step(ct: &ColoredTableau) -> Result<CancelOutcome, TableauError> {
    let lam = &ct.base_outer;
    let mu = &ct.base_inner;
    let image = psi(&ct.tableau, &ct.split_outer, &ct.split_inner)?;
    if image != ct.tableau {
        let partner = ColoredTableau::new(image, lam.clone(), mu.clone(), ct.split_outer.clone(), ct.split_inner.clone())
            .map_err(|e| TableauError::Invariant(format!("Ψ partner is not colored: {e}")))?;
        return Ok(CancelOutcome::PairedWith(partner));
    }
    let (s, w) = psi_fixed_decompose(&ct.tableau, &ct.split_outer, &ct.split_inner)?;
    let s2 = phi(&s, lam, mu)?;
    if s2 != s {
        let rebuilt = insert_word(&s2, &w);
        let partner = ColoredTableau::new(rebuilt, lam.clone(), mu.clone(), s2.outer(), s2.inner())
            .map_err(|e| TableauError::Invariant(format!("Φ partner is not colored: {e}")))?;
        return Ok(CancelOutcome::PairedWith(partner));
    }
    let (tableau, v) = phi_fixed_decompose(&s, lam, mu)?;
    Ok(CancelOutcome::Survivor { tableau, v, w })
}

/// Builds the colored tableau that a survivor triple `(R, v, w)` comes from.
pub fn survivor_tableau(
    r: &SkewTableau,
    v: &[u32],
    w: &[u32],
    lam: &Partition,
    mu: &Partition,
) -> Result<ColoredTableau, TableauError> {
    let s = insert_word(r, v);
    let t = insert_word(&s, w);
    ColoredTableau::new(t, lam.clone(), mu.clone(), s.outer(), mu.clone())
}

/// Visits every colored tableau of `(λ, μ, r)` with entries in `1..=n`.
pub fn for_each_colored(lam: &Partition, mu: &Partition, r: usize, n: u32, mut visit: impl FnMut(&ColoredTableau)) {
    for j in 0..=r {
        let inners = enumerate_inner_contractions(mu, j, StripKind::BrokenRibbon);
        for lp in enumerate_outer_extensions(lam, r - j, StripKind::BrokenRibbon) {
            for mm in &inners {
                let splits = enumerate_splits(lam, &lp, mm, mu).expect("broken ribbons");
                let shape = SkewShape::new(lp.clone(), mm.clone()).unwrap();
                for_each_ssyt(&shape, n, |t| {
                    for (so, si) in &splits {
                        let ct = ColoredTableau {
                            tableau: t.clone(),
                            base_outer: lam.clone(),
                            base_inner: mu.clone(),
                            split_outer: so.clone(),
                            split_inner: si.clone(),
                        };
                        visit(&ct);
                    }
                });
            }
        }
    }
}

/// Outcome of the bijective check of one `(λ, μ, r, n)` case.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BijectiveReport {
    pub colored: usize,
    pub paired: usize,
    pub survivors: usize,
    pub failure: Option<String>,
}

impl BijectiveReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn content_vec(t: &SkewTableau, extra: &[u32], n: u32) -> Vec<usize> {
    let mut c = t.content(n);
    for &k in extra {
        c[k as usize - 1] += 1;
    }
    c
}

/// Distinct permutations of `v`.
fn orbit(v: &[usize]) -> Vec<Vec<usize>> {
    fn go(counts: &mut BTreeMap<usize, usize>, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            cur.push(k);
            go(counts, len, cur, out);
            cur.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    let mut counts = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    go(&mut counts, v.len(), &mut Vec::new(), &mut out);
    out
}

/// Runs [`cancel_step`] on every colored tableau of `(λ, μ, r)` with
/// entries at most `n`, checks that non-survivors pair off with opposite
/// weights and equal contents, and that the survivors' generating function
/// is `s_{λ/μ} · Σ_{τ ⊢ r} (1 - q)^{ℓ(τ)} m_τ` in `n` variables.
pub fn verify_sqmnr_bijective(lam: &Partition, mu: &Partition, r: usize, n: u32) -> BijectiveReport {
    let mut report = BijectiveReport::default();
    let mut survivors: BTreeMap<Vec<usize>, QPoly> = BTreeMap::new();
    for_each_colored(lam, mu, r, n, |ct| {
        if report.failure.is_some() {
            return;
        }
        report.colored += 1;
        let fail = |msg: String| Some(format!("{msg} on\n{}", ct.render()));
        match cancel_step(ct) {
            Err(e) => report.failure = fail(e.to_string()),
            Ok(CancelOutcome::PairedWith(partner)) => {
                if partner == *ct {
                    report.failure = fail("paired with itself".into());
                } else if partner.weight() != -ct.weight() {
                    report.failure = fail("partner weight is not negated".into());
                } else if partner.tableau.content(n) != ct.tableau.content(n) {
                    report.failure = fail("partner content differs".into());
                } else if cancel_step(&partner) != Ok(CancelOutcome::PairedWith(ct.clone())) {
                    report.failure = fail("pairing is not an involution".into());
                } else {
                    report.paired += 1;
                }
            }
            Ok(CancelOutcome::Survivor { tableau, v, w }) => {
                if ct.weight() != QPoly::neg_q().pow(w.len() as u32) {
                    report.failure = fail("survivor weight is not (-q)^|w|".into());
                    return;
                }
                let extra: Vec<u32> = v.iter().chain(&w).copied().collect();
                let c = content_vec(&tableau, &extra, n);
                *survivors.entry(c).or_insert_with(QPoly::zero) += &ct.weight();
                report.survivors += 1;
            }
        }
    });
    if report.failure.is_some() {
        return report;
    }
    let nv = n as usize;
    let factor = SymFunc::from_terms(
        nv,
        partitions_of(r)
            .into_iter()
            .map(|tau| {
                let l = tau.len() as u32;
                (tau, QPoly::one_minus_q().pow(l))
            }),
    );
    let base = SymFunc::skew_schur(&SkewShape::new(lam.clone(), mu.clone()).unwrap(), nv);
    let expected = &base * &factor;
    survivors.retain(|_, v| !v.is_zero());
    let mut expected_full: BTreeMap<Vec<usize>, QPoly> = BTreeMap::new();
    for (nu, c) in expected.terms() {
        let mut padded = nu.parts().to_vec();
        padded.resize(nv, 0);
        for perm in orbit(&padded) {
            expected_full.insert(perm, c.clone());
        }
    }
    if survivors != expected_full {
        let diff = expected_full
            .iter()
            .find(|(k, v)| survivors.get(*k) != Some(*v))
            .map(|(k, v)| format!("content {k:?}: expected {v}, survivors give {}", survivors.get(k).cloned().unwrap_or_default()))
            .or_else(|| {
                survivors
                    .iter()
                    .find(|(k, _)| !expected_full.contains_key(*k))
                    .map(|(k, v)| format!("content {k:?}: expected 0, survivors give {v}"))
            })
            .unwrap_or_default();
        report.failure = Some(format!("survivor generating function differs: {diff}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::contained_pairs;
    use crate::tableaux::ssyt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn sum(terms: &[(&str, &str)]) -> SkewSchurSum {
        let mut out = SkewSchurSum::new();
        for (shape, c) in terms {
            out.add(sh(shape), &c.parse().unwrap());
        }
        out
    }

    #[test]
    fn split_examples() {
        let e = Partition::empty();
        assert_eq!(enumerate_splits(&e, &p("1"), &e, &e).unwrap().len(), 2);
        assert_eq!(enumerate_splits(&p("2,1"), &p("3,3,2"), &e, &e).unwrap().len(), 2);
        assert_eq!(enumerate_splits(&p("2,1"), &p("2,1"), &p("1"), &p("1")).unwrap().len(), 1);
        assert!(enumerate_splits(&e, &p("2,2"), &e, &e).is_err());

        assert_eq!(split_weight_sum(&e, &p("1"), &e, &e).unwrap(), "1 - q".parse().unwrap());
        assert_eq!(split_weight_sum(&p("1"), &p("1"), &e, &p("1")).unwrap(), "-1 + q".parse().unwrap());
        assert_eq!(split_weight_sum(&p("1"), &p("1"), &p("1"), &p("1")).unwrap(), QPoly::one());
    }

    #[test]
    fn split_weight_sum_has_closed_form() {
        for (lam, mu) in contained_pairs(4) {
            for r in 0..=4 {
                for j in 0..=r {
                    for lp in enumerate_outer_extensions(&lam, r - j, StripKind::BrokenRibbon) {
                        for mm in enumerate_inner_contractions(&mu, j, StripKind::BrokenRibbon) {
                            let splits = enumerate_splits(&lam, &lp, &mm, &mu).unwrap();
                            let a = stats(&SkewShape::new(lp.clone(), lam.clone()).unwrap());
                            let b = stats(&SkewShape::new(mu.clone(), mm.clone()).unwrap());
                            assert_eq!(splits.len(), 1 << (a.rib + b.rib));
                            assert_eq!(
                                split_weight_sum(&lam, &lp, &mm, &mu).unwrap(),
                                split_weight_closed_form(&lam, &lp, &mm, &mu).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn skew_pieri_examples() {
        let lam = p("3,2,2");
        let mu = p("1,1");
        assert_eq!(
            rhs_spr(&lam, &mu, 2),
            sum(&[
                ("5,2,2/1,1", "1"),
                ("4,3,2/1,1", "1"),
                ("4,2,2,1/1,1", "1"),
                ("3,3,2,1/1,1", "1"),
                ("3,2,2,2/1,1", "1"),
                ("4,2,2/1", "-1"),
                ("3,3,2/1", "-1"),
                ("3,2,2,1/1", "-1"),
                ("3,2,2", "1"),
            ])
        );
        assert_eq!(
            rhs_cspr(&lam, &mu, 2),
            sum(&[
                ("4,3,2/1,1", "1"),
                ("4,2,2,1/1,1", "1"),
                ("3,3,3/1,1", "1"),
                ("3,3,2,1/1,1", "1"),
                ("3,2,2,1,1/1,1", "1"),
                ("4,2,2/1", "-1"),
                ("3,3,2/1", "-1"),
                ("3,2,2,1/1", "-1"),
            ])
        );
    }

    #[test]
    fn skew_murnaghan_nakayama_example() {
        assert_eq!(
            rhs_smnr(&p("4,3,3"), &p("2,2"), 3),
            sum(&[
                ("7,3,3/2,2", "1"),
                ("5,5,3/2,2", "-1"),
                ("4,3,3,3/2,2", "1"),
                ("4,3,3,2,1/2,2", "-1"),
                ("4,3,3,1,1,1/2,2", "1"),
                ("4,3,3/1", "1"),
            ])
        );
    }

    #[test]
    fn sqmnr_prime_examples() {
        let e = Partition::empty();
        assert_eq!(
            rhs_sqmnr_prime(&p("1"), &e, 2),
            sum(&[("3", "1"), ("2,1", "1 - q"), ("1,1,1", "-q")])
        );
        assert_eq!(
            rhs_sqmnr_prime(&e, &e, 3),
            sum(&[("3", "1"), ("2,1", "-q"), ("1,1,1", "q^2")])
        );
        assert_eq!(
            rhs_sqmnr_prime(&p("2,1"), &p("1"), 1),
            sum(&[("3,1/1", "1"), ("2,2/1", "1"), ("2,1,1/1", "1"), ("2,1", "-1")])
        );
        assert_eq!(rhs_sqmnr_prime(&p("2"), &p("1"), 0), sum(&[("2/1", "1")]));
        assert_eq!(rhs_sqmnr(&e, &e, 1), sum(&[("1", "1")]));
    }

    #[test]
    fn master_identity_and_equivalent_forms() {
        for (lam, mu) in contained_pairs(4) {
            for r in 1..=3 {
                let n = lam.size() - mu.size() + r;
                let base = SymFunc::skew_schur(&SkewShape::new(lam.clone(), mu.clone()).unwrap(), n);
                let rhs = rhs_sqmnr_prime(&lam, &mu, r);
                assert_eq!(rhs.expand(n), &base * &SymFunc::qpower(r, n), "{lam}/{mu} r={r}");
                assert_eq!(rhs_sqmnr(&lam, &mu, r), rhs);
                assert_eq!(rhs.map_coeffs(|c| QPoly::constant(c.eval_int(0))), rhs_spr(&lam, &mu, r));
                assert_eq!(rhs.map_coeffs(|c| QPoly::constant(c.eval_int(1))), rhs_smnr(&lam, &mu, r));
                assert_eq!(rhs_sqmnr3(&lam, &mu, r).expand(n), &base * &SymFunc::barp(r, n));
                assert_eq!(rhs_spr(&lam, &mu, r).expand(n), &base * &SymFunc::skew_schur(&SkewShape::straight(Partition::row_shape(r)), n));
                assert_eq!(rhs_cspr(&lam, &mu, r).expand(n), &base * &SymFunc::elementary(r, n));
                assert_eq!(rhs_smnr(&lam, &mu, r).expand(n), &base * &SymFunc::power_sum(r, n));
                if mu.is_empty() {
                    assert_eq!(rhs_qmnr(&lam, r), rhs);
                }
            }
        }
    }

    #[test]
    fn chi_corollary() {
        let e = Partition::empty();
        assert_eq!(chi_coefficient(&p("2"), &p("2"), &p("1"), &p("1"), &e), QPoly::one());
        for (lam, mu) in contained_pairs(3) {
            for r in 1..=3 {
                let single = chi_single(&lam, &mu, r);
                assert_eq!(single, rhs_sqmnr_prime(&lam, &mu, r), "single part τ = ({r})");
            }
        }
        for (lam, mu) in contained_pairs(4) {
            for t in 0..=(4 - lam.size()).min(3) {
                for tau in partitions_of(t) {
                    let n = lam.size() - mu.size() + t;
                    let base = SymFunc::skew_schur(&SkewShape::new(lam.clone(), mu.clone()).unwrap(), n);
                    assert_eq!(
                        rhs_chi(&lam, &mu, &tau).expand(n),
                        &base * &SymFunc::qpower_prod(&tau, n),
                        "{lam}/{mu} τ={tau}"
                    );
                }
            }
        }
    }

    fn chi_single(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
        rhs_chi(lam, mu, &Partition::new(vec![r]))
    }

    #[test]
    fn bijective_examples() {
        let e = Partition::empty();
        let rep = verify_sqmnr_bijective(&p("2,1"), &p("1"), 2, 5);
        assert!(rep.passed(), "{:?}", rep.failure);
        assert!(rep.paired > 0 && rep.survivors > 0);

        let rep = verify_sqmnr_bijective(&e, &e, 1, 2);
        assert!(rep.passed(), "{:?}", rep.failure);
        // a single white or gray cell, filled with 1 or 2
        assert_eq!((rep.colored, rep.paired, rep.survivors), (4, 0, 4));

        let rep = verify_sqmnr_bijective(&p("2"), &p("2"), 2, 3);
        assert!(rep.passed(), "{:?}", rep.failure);
    }

    #[test]
    fn bijective_small_sweep() {
        for (lam, mu) in contained_pairs(3) {
            for r in 1..=2 {
                let rep = verify_sqmnr_bijective(&lam, &mu, r, 3);
                assert!(rep.passed(), "{lam}/{mu} r={r}: {:?}", rep.failure);
            }
        }
    }

    #[test]
    fn survivors_round_trip() {
        for (lam, mu) in contained_pairs(3) {
            let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
            for r_t in ssyt(&shape, 3) {
                for v in words(3, 2, true) {
                    for w in words(3, 2, false) {
                        if v.len() + w.len() == 0 {
                            continue;
                        }
                        let Ok(ct) = survivor_tableau(&r_t, &v, &w, &lam, &mu) else {
                            continue;
                        };
                        assert_eq!(
                            cancel_step(&ct).unwrap(),
                            CancelOutcome::Survivor {
                                tableau: r_t.clone(),
                                v: v.clone(),
                                w: w.clone()
                            }
                        );
                    }
                }
            }
        }
    }

    /// Weakly increasing (`weak`) or strictly decreasing words over `1..=max`
    /// of length at most `len`.
    fn words(max: u32, len: usize, weak: bool) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &frontier {
                for k in 1..=max {
                    let ok = match w.last() {
                        None => true,
                        Some(&l) if weak => k >= l,
                        Some(&l) => k < l,
                    };
                    if ok {
                        let mut x: Vec<u32> = w.clone();
                        x.push(k);
                        next.push(x);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn colored_text_round_trip() {
        let lam = p("1");
        let mu = Partition::empty();
        let ct = ColoredTableau::new("1 2 / 3".parse().unwrap(), lam.clone(), mu.clone(), p("2"), mu.clone()).unwrap();
        assert_eq!(ct.render(), "1 2\n3g");
        assert_eq!(ct.weight(), QPoly::neg_q());
        assert_eq!(ColoredTableau::parse(&ct.render(), &lam, &mu).unwrap(), ct);
        assert!(ColoredTableau::parse("1g 2", &lam, &mu).is_err());
    }
}
