//! Hall-Littlewood side: the strip coefficients `hs`, `vs`, `br`, `sk`,
//! skew Hall-Littlewood `P` polynomials (parameter `q`) as branching chain
//! sums, and exact testers for the conjectured skew rules.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::ShapeError;
use crate::qpoly::{q_binomial, QPoly};
use crate::shapes::{enumerate_inner_contractions, enumerate_outer_extensions, partitions_of, Partition, SkewShape, StripKind};
use crate::symfunc::{horizontal_steps, SkewSchurSum, SymFunc};

fn one_minus_q_pow(m: usize) -> QPoly {
    QPoly::one() - QPoly::monomial(1, m)
}

fn require(s: &SkewShape, ok: bool, expected: &'static str) -> Result<(), ShapeError> {
    if ok {
        Ok(())
    } else {
        Err(s.wrong_kind(expected))
    }
}

/// Columns `i` where a horizontal strip `outer/inner` has a cell and column
/// `i + 1` has none.
fn strip_end_columns(outer: &Partition, inner: &Partition) -> Vec<usize> {
    let (oc, ic) = (outer.conjugate(), inner.conjugate());
    (1..=outer.part(1))
        .filter(|&i| oc.part(i) == ic.part(i) + 1 && oc.part(i + 1) == ic.part(i + 1))
        .collect()
}

/// `Π (1 - q^{m_i(λ)})` over columns `i` where the strip `λ/μ` ends.
pub fn hs_coeff(s: &SkewShape) -> Result<QPoly, ShapeError> {
    require(s, s.is_horizontal_strip(), "horizontal strip")?;
    Ok(strip_end_columns(s.outer(), s.inner())
        .into_iter()
        .fold(QPoly::one(), |acc, i| acc * one_minus_q_pow(s.outer().multiplicity(i))))
}

/// `Π_i [λ^c_i - λ^c_{i+1} choose λ^c_i - μ^c_i]_q` for a vertical strip `λ/μ`.
pub fn vs_coeff(s: &SkewShape) -> Result<QPoly, ShapeError> {
    require(s, s.is_vertical_strip(), "vertical strip")?;
    let (oc, ic) = (s.outer().conjugate(), s.inner().conjugate());
    Ok((1..=oc.len()).fold(QPoly::one(), |acc, i| {
        acc * q_binomial(oc.part(i) - oc.part(i + 1), (oc.part(i) - ic.part(i)) as i64)
    }))
}

/// `(-q)^{hgt} (1 - q)^{rib}` for a broken ribbon.
pub fn br_coeff(s: &SkewShape) -> Result<QPoly, ShapeError> {
    let st = s.ribbon_stats()?;
    Ok(QPoly::neg_q().pow(st.hgt as u32) * QPoly::one_minus_q().pow(st.rib as u32))
}

/// `q^{Σ binom(λ⁺^c_i - λ^c_i, 2)} Π_i [λ⁺^c_i - λ^c_{i+1} choose m_i(λ)]_q`
/// for `s = λ⁺/λ`.
pub fn sk_coeff(s: &SkewShape) -> QPoly {
    let (oc, ic) = (s.outer().conjugate(), s.inner().conjugate());
    let exp: usize = (1..=oc.len())
        .map(|i| {
            let d = oc.part(i) - ic.part(i);
            d * d.saturating_sub(1) / 2
        })
        .sum();
    (1..=oc.len()).fold(QPoly::monomial(1, exp), |acc, i| {
        acc * q_binomial(oc.part(i) - ic.part(i + 1), s.inner().multiplicity(i) as i64)
    })
}

/// Branching weight of a horizontal strip `λ/μ` in `P_{λ/μ}`:
/// `Π (1 - q^{m_j(μ)})` over `j` with `m_j(μ) = m_j(λ) + 1`.
pub fn psi_branch(s: &SkewShape) -> Result<QPoly, ShapeError> {
    require(s, s.is_horizontal_strip(), "horizontal strip")?;
    Ok(psi_unchecked(s.outer(), s.inner()))
}

fn psi_unchecked(outer: &Partition, inner: &Partition) -> QPoly {
    (1..=inner.part(1))
        .filter(|&j| inner.multiplicity(j) == outer.multiplicity(j) + 1)
        .fold(QPoly::one(), |acc, j| acc * one_minus_q_pow(inner.multiplicity(j)))
}

/// Dual branching weight: `Π (1 - q^{m_j(λ)})` over `j` with
/// `m_j(λ) = m_j(μ) + 1`.
pub fn phi_branch(s: &SkewShape) -> Result<QPoly, ShapeError> {
    require(s, s.is_horizontal_strip(), "horizontal strip")?;
    Ok((1..=s.outer().part(1))
        .filter(|&j| s.outer().multiplicity(j) == s.inner().multiplicity(j) + 1)
        .fold(QPoly::one(), |acc, j| acc * one_minus_q_pow(s.outer().multiplicity(j))))
}

/// Skew Hall-Littlewood `P_{λ/μ}` in `nvars` variables: the sum over chains
/// of horizontal strips from `μ` to `λ` weighted by [`psi_branch`].
pub fn hl_p_skew(s: &SkewShape, nvars: usize) -> SymFunc {
    let outer = s.outer().parts().to_vec();
    let mut start = s.inner().parts().to_vec();
    start.resize(outer.len(), 0);
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), QPoly> = HashMap::new();
    let terms = partitions_of(s.size())
        .into_iter()
        .filter(|nu| nu.len() <= nvars)
        .map(|nu| {
            let c = chains(&outer, start.clone(), nu.parts(), &mut memo);
            (nu, c)
        });
    SymFunc::from_terms(nvars, terms.collect::<Vec<_>>())
}

/// Weighted number of chains from `kappa` to `outer` with strip sizes `steps`.
fn chains(
    outer: &[usize],
    kappa: Vec<usize>,
    steps: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), QPoly>,
) -> QPoly {
    let Some((&k, rest)) = steps.split_first() else {
        return if kappa.as_slice() == outer { QPoly::one() } else { QPoly::zero() };
    };
    let key = (kappa.clone(), steps.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut nexts = Vec::new();
    horizontal_steps(&kappa, outer, k, &mut nexts);
    let from = Partition::new(kappa.clone());
    let mut total = QPoly::zero();
    for next in nexts {
        let w = psi_unchecked(&Partition::new(next.clone()), &from);
        let c = chains(outer, next, rest, memo);
        if !c.is_zero() {
            total += &(w * c);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Which conjectured rule a verdict refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// `P_{λ/μ} s_r` with `sk` coefficients.
    Schur,
    /// `P_{λ/μ} e_r` with `vs` coefficients.
    Elementary,
    /// `P_{λ/μ} P_r` with `hs` and `br` coefficients.
    HallLittlewood,
    /// `s_{λ/μ} P_r` with two `br` coefficients.
    SchurTimesHl,
}

impl Conjecture {
    pub const ALL: [Conjecture; 4] = [
        Conjecture::Schur,
        Conjecture::Elementary,
        Conjecture::HallLittlewood,
        Conjecture::SchurTimesHl,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Conjecture::Schur => "conj1",
            Conjecture::Elementary => "conj2",
            Conjecture::HallLittlewood => "conj3",
            Conjecture::SchurTimesHl => "conjhl",
        }
    }

    /// Whether the right side carries the global `1/(1 - q)`.
    pub fn divides(self) -> bool {
        matches!(self, Conjecture::HallLittlewood | Conjecture::SchurTimesHl)
    }
}

/// One evaluated case. `diffs` lists `(ν, left, right)` at every dominant
/// monomial where the sides differ; when the division by `1 - q` fails the
/// comparison is made before dividing, against `(1 - q)` times the left side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseVerdict {
    pub conjecture: Conjecture,
    pub lam: Partition,
    pub mu: Partition,
    pub r: usize,
    pub n: usize,
    pub divisible: Option<bool>,
    pub diffs: Vec<(Partition, QPoly, QPoly)>,
}

impl CaseVerdict {
    pub fn passed(&self) -> bool {
        self.divisible != Some(false) && self.diffs.is_empty()
    }

    fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    /// Tab-separated verdict line followed, on failure, by indented diffs.
    pub fn to_tsv(&self) -> String {
        let mut cols = vec![
            self.conjecture.id().to_string(),
            self.lam.to_string(),
            self.mu.to_string(),
            self.r.to_string(),
            self.n.to_string(),
        ];
        if let Some(d) = self.divisible {
            cols.push(if d { "divisible" } else { "not-divisible" }.into());
        }
        cols.push(self.verdict().into());
        let mut out = cols.join("\t");
        for (nu, l, r) in &self.diffs {
            out.push_str(&format!("\n    m[{nu}]\tlhs={l}\trhs={r}"));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let div = match self.divisible {
            Some(true) => " divisible",
            Some(false) => " not-divisible",
            None => "",
        };
        let mut out = format!(
            "{} lambda={} mu={} r={} n={}{} {}",
            self.conjecture.id(),
            self.lam,
            self.mu,
            self.r,
            self.n,
            div,
            self.verdict()
        );
        for (nu, l, r) in &self.diffs {
            out.push_str(&format!("\n    m[{nu}]: lhs = {l}, rhs = {r}"));
        }
        out
    }
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv())
    }
}

/// All verdicts of one sweep, in case order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub cases: Vec<CaseVerdict>,
}

impl ConjectureReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }
}

fn diff(lhs: &SymFunc, rhs: &SymFunc) -> Vec<(Partition, QPoly, QPoly)> {
    let keys: BTreeSet<&Partition> = lhs.terms().map(|(k, _)| k).chain(rhs.terms().map(|(k, _)| k)).collect();
    keys.into_iter()
        .filter_map(|k| {
            let (l, r) = (lhs.coeff(k), rhs.coeff(k));
            (l != r).then(|| (k.clone(), l, r))
        })
        .collect()
}

fn sign(j: usize) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Σ coeff(λ⁺/λ, μ/μ⁻) · term(λ⁺/μ⁻)` over `λ⁺ ⊇ λ` of kind `outer_kind`
/// and `μ⁻ ⊆ μ` of kind `inner_kind`, sizes adding to `r`.
#[allow(clippy::too_many_arguments)]
fn pair_sum(
    lam: &Partition,
    mu: &Partition,
    r: usize,
    outer_kind: StripKind,
    inner_kind: StripKind,
    nvars: usize,
    mut coeff: impl FnMut(&SkewShape, &SkewShape) -> QPoly,
    mut term: impl FnMut(&SkewShape) -> SymFunc,
) -> SymFunc {
    let mut out = SymFunc::zero(nvars);
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
                if c.is_zero() {
                    continue;
                }
                let t = term(&SkewShape::new(lp.clone(), mm.clone()).expect("μ⁻ ⊆ λ⁺"));
                out = &out + &t.scale(&c);
            }
        }
    }
    out
}

/// The signed `br · br` sum whose quotient by `1 - q` is `s_{λ/μ} P_r`.
pub fn sqmnr_hl_sum(lam: &Partition, mu: &Partition, r: usize) -> SkewSchurSum {
    let mut out = SkewSchurSum::new();
    for j in 0..=r {
        let inners = enumerate_inner_contractions(mu, j, StripKind::BrokenRibbon);
        for lp in enumerate_outer_extensions(lam, r - j, StripKind::BrokenRibbon) {
            let a = SkewShape::new(lp.clone(), lam.clone()).expect("extension");
            for mm in &inners {
                let b = SkewShape::new(mu.clone(), mm.clone()).expect("contraction");
                let c = br_coeff(&a).expect("broken ribbon") * br_coeff(&b.conjugate()).expect("broken ribbon");
                out.add(SkewShape::new(lp.clone(), mm.clone()).expect("μ⁻ ⊆ λ⁺"), &c.scale(sign(j)));
            }
        }
    }
    out
}

/// Evaluates one conjectured identity exactly in `n` variables.
pub fn evaluate(conj: Conjecture, lam: &Partition, mu: &Partition, r: usize, n: usize) -> CaseVerdict {
    let shape = SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ");
    let hl = |s: &SkewShape| hl_p_skew(s, n);
    let (lhs, pre) = match conj {
        Conjecture::Schur => {
            let lhs = hl(&shape).try_mul(&SymFunc::skew_schur(&SkewShape::straight(Partition::row_shape(r)), n));
            let rhs = pair_sum(lam, mu, r, StripKind::Any, StripKind::Vertical, n, |a, b| sk_coeff(a).scale(sign(b.size())), hl);
            (lhs, rhs)
        }
        Conjecture::Elementary => {
            let lhs = hl(&shape).try_mul(&SymFunc::elementary(r, n));
            let rhs = pair_sum(lam, mu, r, StripKind::Vertical, StripKind::Horizontal, n, |a, b| {
                vs_coeff(a).expect("vertical strip").scale(sign(b.size()))
            }, hl);
            (lhs, rhs)
        }
        Conjecture::HallLittlewood => {
            let lhs = hl(&shape).try_mul(&SymFunc::qpower(r, n));
            let rhs = pair_sum(lam, mu, r, StripKind::Horizontal, StripKind::BrokenRibbon, n, |a, b| {
                hs_coeff(a).expect("horizontal strip") * br_coeff(&b.conjugate()).expect("broken ribbon").scale(sign(b.size()))
            }, hl);
            (lhs, rhs)
        }
        Conjecture::SchurTimesHl => {
            let lhs = SymFunc::skew_schur(&shape, n).try_mul(&SymFunc::qpower(r, n));
            (lhs, sqmnr_hl_sum(lam, mu, r).expand(n))
        }
    };
    let lhs = lhs.expect("same variable count");
    let (divisible, diffs) = if conj.divides() {
        match pre.div_exact(&QPoly::one_minus_q()) {
            Ok(rhs) => (Some(true), diff(&lhs, &rhs)),
            Err(_) => (Some(false), diff(&lhs.scale(&QPoly::one_minus_q()), &pre)),
        }
    } else {
        (None, diff(&lhs, &pre))
    };
    CaseVerdict {
        conjecture: conj,
        lam: lam.clone(),
        mu: mu.clone(),
        r,
        n,
        divisible,
        diffs,
    }
}

pub fn conjecture1(lam: &Partition, mu: &Partition, r: usize, n: usize) -> CaseVerdict {
    evaluate(Conjecture::Schur, lam, mu, r, n)
}

pub fn conjecture2(lam: &Partition, mu: &Partition, r: usize, n: usize) -> CaseVerdict {
    evaluate(Conjecture::Elementary, lam, mu, r, n)
}

pub fn conjecture3(lam: &Partition, mu: &Partition, r: usize, n: usize) -> CaseVerdict {
    evaluate(Conjecture::HallLittlewood, lam, mu, r, n)
}

pub fn verify_sqmnr_hl_form(lam: &Partition, mu: &Partition, r: usize, n: usize) -> CaseVerdict {
    evaluate(Conjecture::SchurTimesHl, lam, mu, r, n)
}

/// First horizontal strip (by outer size, then shape order) where
/// [`hs_coeff`] and [`phi_branch`] disagree, or `None`.
pub fn hs_phi_divergence(max_size: usize) -> Option<SkewShape> {
    (0..=max_size).flat_map(partitions_of).find_map(|lam| {
        (0..=lam.size())
            .flat_map(|k| enumerate_inner_contractions(&lam, k, StripKind::Horizontal))
            .map(|mu| SkewShape::new(lam.clone(), mu).unwrap())
            .find(|s| hs_coeff(s).unwrap() != phi_branch(s).unwrap())
    })
}
