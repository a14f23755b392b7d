//! Exhaustive verification sweeps, run case-parallel with results emitted in
//! case order.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::colored::{
    rhs_cspr, rhs_qmnr, rhs_smnr, rhs_spr, rhs_sqmnr, rhs_sqmnr3, rhs_sqmnr_prime, verify_sqmnr_bijective,
};
use crate::hallittlewood::{evaluate, CaseVerdict, Conjecture};
use crate::jdt::{check_slides, count_rectify_to_hook, lemma2_formula, slrr_coefficient, standard_tableaux};
use crate::qpoly::QPoly;
use crate::shapes::{
    basic_skew_shapes, contained_pairs, enumerate_inner_contractions, enumerate_outer_extensions, Partition,
    SkewShape, StripKind,
};
use crate::symfunc::{SkewSchurSum, SymFunc};
use crate::tableaux::{check_inverse_pairing, check_noncrossing, check_phi_involution, check_psi_involution, ssyt, strip_tableaux};

/// A family of cases checked by [`run_rule`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Spr,
    Cspr,
    Smnr,
    Qmnr,
    Sqmnr,
    Sqmnr3,
    SqmnrBijective,
    Lemma1,
    Lemma2,
    Noncrossing,
    Involutions,
    Slides,
    Slrr,
}

impl Rule {
    pub const ALL: [Rule; 13] = [
        Rule::Spr,
        Rule::Cspr,
        Rule::Smnr,
        Rule::Qmnr,
        Rule::Sqmnr,
        Rule::Sqmnr3,
        Rule::SqmnrBijective,
        Rule::Lemma1,
        Rule::Lemma2,
        Rule::Noncrossing,
        Rule::Involutions,
        Rule::Slides,
        Rule::Slrr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Spr => "spr",
            Rule::Cspr => "cspr",
            Rule::Smnr => "smnr",
            Rule::Qmnr => "qmnr",
            Rule::Sqmnr => "sqmnr",
            Rule::Sqmnr3 => "sqmnr3",
            Rule::SqmnrBijective => "sqmnr-bijective",
            Rule::Lemma1 => "lemma1",
            Rule::Lemma2 => "lemma2",
            Rule::Noncrossing => "noncrossing",
            Rule::Involutions => "involutions",
            Rule::Slides => "slides",
            Rule::Slrr => "slrr",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown rule '{s}'"))
    }
}

/// Sweep limits. Which fields a rule reads is listed on [`run_rule`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_lambda: usize,
    pub max_r: usize,
    pub max_entry: u32,
    pub max_cells: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_lambda: 4,
            max_r: 3,
            max_entry: 3,
            max_cells: 5,
        }
    }
}

/// Result of one case: a report line starting with `PASS` or `FAIL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub line: String,
}

impl Outcome {
    fn new(passed: bool, case: String, detail: String) -> Self {
        let tag = if passed { "PASS" } else { "FAIL" };
        let line = if detail.is_empty() {
            format!("{tag} case={case}")
        } else {
            format!("{tag} case={case} {detail}")
        };
        Outcome { passed, line }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `check` on every case in parallel and hands the results to `emit`
/// in case order, one chunk at a time.
pub fn run_ordered<C, R>(cases: &[C], check: impl Fn(&C) -> R + Sync, mut emit: impl FnMut(&R)) -> Vec<R>
where
    C: Sync,
    R: Send,
{
    let chunk = (rayon::current_num_threads() * 4).max(16);
    let mut out = Vec::with_capacity(cases.len());
    for part in cases.chunks(chunk) {
        let results: Vec<R> = part.par_iter().map(&check).collect();
        for r in &results {
            emit(r);
        }
        out.extend(results);
    }
    out
}

/// Every `(λ, μ, r)` with `μ ⊆ λ`, `|λ| ≤ max_lambda` and `1 ≤ r ≤ max_r`.
pub fn identity_cases(max_lambda: usize, max_r: usize) -> Vec<(Partition, Partition, usize)> {
    contained_pairs(max_lambda)
        .into_iter()
        .flat_map(|(lam, mu)| (1..=max_r).map(move |r| (lam.clone(), mu.clone(), r)))
        .collect()
}

fn case_id(lam: &Partition, mu: &Partition, r: usize) -> String {
    format!("{lam}|{mu}|r={r}")
}

fn skew(lam: &Partition, mu: &Partition) -> SkewShape {
    SkewShape::new(lam.clone(), mu.clone()).expect("μ ⊆ λ")
}

fn compare_expansion(rhs: &SkewSchurSum, lhs: &SymFunc, n: usize) -> Result<(), String> {
    let expanded = rhs.expand(n);
    if &expanded == lhs {
        Ok(())
    } else {
        let first = lhs
            .terms()
            .map(|(k, _)| k)
            .chain(expanded.terms().map(|(k, _)| k))
            .find(|k| lhs.coeff(k) != expanded.coeff(k))
            .expect("some coefficient differs");
        Err(format!(
            "differs at m[{first}]: product {} vs expansion {}",
            lhs.coeff(first),
            expanded.coeff(first)
        ))
    }
}

fn at(rhs: &SkewSchurSum, v: i64) -> SkewSchurSum {
    rhs.map_coeffs(|c| QPoly::constant(c.eval_int(v)))
}

fn identity_case(rule: Rule, lam: &Partition, mu: &Partition, r: usize) -> Outcome {
    let n = lam.size() - mu.size() + r;
    let base = SymFunc::skew_schur(&skew(lam, mu), n);
    let result = match rule {
        Rule::Spr => compare_expansion(&rhs_spr(lam, mu, r), &(&base * &SymFunc::skew_schur(&SkewShape::straight(Partition::row_shape(r)), n)), n),
        Rule::Cspr => compare_expansion(&rhs_cspr(lam, mu, r), &(&base * &SymFunc::elementary(r, n)), n),
        Rule::Smnr => compare_expansion(&rhs_smnr(lam, mu, r), &(&base * &SymFunc::power_sum(r, n)), n),
        Rule::Qmnr => compare_expansion(&rhs_qmnr(lam, r), &(&base * &SymFunc::qpower(r, n)), n),
        Rule::Sqmnr3 => compare_expansion(&rhs_sqmnr3(lam, mu, r), &(&base * &SymFunc::barp(r, n)), n),
        Rule::Sqmnr => {
            let prime = rhs_sqmnr_prime(lam, mu, r);
            compare_expansion(&prime, &(&base * &SymFunc::qpower(r, n)), n).and_then(|()| {
                if rhs_sqmnr(lam, mu, r) != prime {
                    Err("sign-split form differs termwise".into())
                } else if at(&prime, 0) != rhs_spr(lam, mu, r) {
                    Err("q = 0 does not give the skew Pieri rule".into())
                } else if at(&prime, 1) != rhs_smnr(lam, mu, r) {
                    Err("q = 1 does not give the skew Murnaghan-Nakayama rule".into())
                } else {
                    Ok(())
                }
            })
        }
        _ => unreachable!("not an identity rule"),
    };
    let detail = match &result {
        Ok(()) => format!("n={n}"),
        Err(e) => format!("n={n} {e}"),
    };
    Outcome::new(result.is_ok(), case_id(lam, mu, r), detail)
}

fn strip_pair_shapes(lam: &Partition, mu: &Partition, r: usize) -> Vec<(Partition, Partition)> {
    (0..=r)
        .flat_map(|j| {
            let inners = enumerate_inner_contractions(mu, j, StripKind::Any);
            enumerate_outer_extensions(lam, r - j, StripKind::Any)
                .into_iter()
                .flat_map(move |lp| inners.clone().into_iter().map(move |mm| (lp.clone(), mm)))
        })
        .collect()
}

fn slrr_case(lam: &Partition, mu: &Partition, r: usize) -> Outcome {
    let rhs = rhs_sqmnr_prime(lam, mu, r);
    let pairs = strip_pair_shapes(lam, mu, r);
    let bad = pairs.iter().find_map(|(lp, mm)| {
        let got = slrr_coefficient(lam, mu, lp, mm, r);
        let want = rhs.coeff(&skew(lp, mm));
        (got != want).then(|| format!("at {lp}/{mm}: hook count gives {got}, rule gives {want}"))
    });
    let detail = bad.clone().unwrap_or_else(|| format!("shapes={}", pairs.len()));
    Outcome::new(bad.is_none(), case_id(lam, mu, r), detail)
}

type InvolutionCheck = fn(&crate::tableaux::SkewTableau, &Partition, &Partition) -> Result<(), String>;

fn tableau_family_case(lam: &Partition, mu: &Partition, r: usize, max_entry: u32) -> Outcome {
    let mut count = 0;
    let mut failure = None;
    let families: [(StripKind, StripKind, InvolutionCheck, &str); 2] = [
        (StripKind::Horizontal, StripKind::Vertical, check_phi_involution, "phi"),
        (StripKind::Vertical, StripKind::Horizontal, check_psi_involution, "psi"),
    ];
    'outer: for (ok, ik, check, name) in families {
        for t in strip_tableaux(lam, mu, r, ok, ik, max_entry) {
            count += 1;
            if let Err(e) = check(&t, lam, mu) {
                failure = Some(format!("{name} on {}: {e}", t.to_line()));
                break 'outer;
            }
        }
    }
    let detail = failure.clone().unwrap_or_else(|| format!("tableaux={count}"));
    Outcome::new(failure.is_none(), case_id(lam, mu, r), detail)
}

/// Runs a verification rule, streaming one line per case to `emit`.
///
/// Identity rules, `sqmnr-bijective`, `involutions` and `slrr` sweep
/// `μ ⊆ λ`, `|λ| ≤ max_lambda`, `1 ≤ r ≤ max_r` (`qmnr` only `μ = ∅`);
/// `sqmnr-bijective` and `involutions` fill with entries `≤ max_entry`.
/// `lemma1` runs `1 ≤ r ≤ max_r`. `lemma2` and `slides` cover skew shapes
/// with at most `max_cells` cells; `noncrossing` covers every skew shape
/// with `|outer| ≤ max_cells` and entries `≤ max_entry`.
pub fn run_rule(rule: Rule, bounds: &Bounds, mut emit: impl FnMut(&Outcome)) -> Summary {
    let outcomes = match rule {
        Rule::Spr | Rule::Cspr | Rule::Smnr | Rule::Qmnr | Rule::Sqmnr | Rule::Sqmnr3 => {
            let mut cases = identity_cases(bounds.max_lambda, bounds.max_r);
            if rule == Rule::Qmnr {
                cases.retain(|(_, mu, _)| mu.is_empty());
            }
            run_ordered(&cases, |(lam, mu, r)| identity_case(rule, lam, mu, *r), &mut emit)
        }
        Rule::SqmnrBijective => {
            let cases = identity_cases(bounds.max_lambda, bounds.max_r);
            run_ordered(
                &cases,
                |(lam, mu, r)| {
                    let rep = verify_sqmnr_bijective(lam, mu, *r, bounds.max_entry);
                    let mut detail = format!(
                        "n={} colored={} paired={} survivors={}",
                        bounds.max_entry, rep.colored, rep.paired, rep.survivors
                    );
                    if let Some(f) = &rep.failure {
                        detail.push(' ');
                        detail.push_str(f);
                    }
                    Outcome::new(rep.passed(), case_id(lam, mu, *r), detail)
                },
                &mut emit,
            )
        }
        Rule::Involutions => {
            let cases = identity_cases(bounds.max_lambda, bounds.max_r);
            run_ordered(&cases, |(lam, mu, r)| tableau_family_case(lam, mu, *r, bounds.max_entry), &mut emit)
        }
        Rule::Slrr => {
            let cases = identity_cases(bounds.max_lambda, bounds.max_r);
            run_ordered(&cases, |(lam, mu, r)| slrr_case(lam, mu, *r), &mut emit)
        }
        Rule::Lemma1 => {
            let cases: Vec<usize> = (1..=bounds.max_r).collect();
            run_ordered(
                &cases,
                |&r| {
                    let hooks = (1..=r).fold(SymFunc::zero(r), |acc, k| {
                        let s = SymFunc::skew_schur(&SkewShape::straight(Partition::hook(r, k)), r);
                        &acc + &s.scale(&QPoly::neg_q().pow((r - k) as u32))
                    });
                    let ok = hooks == SymFunc::qpower(r, r);
                    Outcome::new(ok, format!("r={r}"), format!("n={r}"))
                },
                &mut emit,
            )
        }
        Rule::Lemma2 => {
            let cases: Vec<(SkewShape, usize)> = (1..=bounds.max_cells)
                .flat_map(basic_skew_shapes)
                .flat_map(|s| (1..=s.size()).map(move |k| (s.clone(), k)))
                .collect();
            run_ordered(
                &cases,
                |(s, k)| {
                    let (count, formula) = (count_rectify_to_hook(s, *k), lemma2_formula(s, *k));
                    Outcome::new(count == formula, format!("{s}|k={k}"), format!("count={count} formula={formula}"))
                },
                &mut emit,
            )
        }
        Rule::Slides => {
            let cases: Vec<SkewShape> = (1..=bounds.max_cells).flat_map(basic_skew_shapes).collect();
            run_ordered(
                &cases,
                |s| {
                    let all = standard_tableaux(s);
                    let bad = all.iter().find_map(|t| check_slides(t).err().map(|e| format!("{}: {e}", t.to_line())));
                    let detail = bad.clone().unwrap_or_else(|| format!("tableaux={}", all.len()));
                    Outcome::new(bad.is_none(), s.to_string(), detail)
                },
                &mut emit,
            )
        }
        Rule::Noncrossing => {
            let cases: Vec<SkewShape> = contained_pairs(bounds.max_cells)
                .into_iter()
                .map(|(lam, mu)| skew(&lam, &mu))
                .collect();
            run_ordered(
                &cases,
                |s| {
                    let all = ssyt(s, bounds.max_entry);
                    let bad = all.iter().find_map(|t| {
                        check_inverse_pairing(t, bounds.max_entry)
                            .and_then(|()| check_noncrossing(t))
                            .err()
                            .map(|e| format!("{}: {e}", t.to_line()))
                    });
                    let detail = bad.clone().unwrap_or_else(|| format!("tableaux={}", all.len()));
                    Outcome::new(bad.is_none(), s.to_string(), detail)
                },
                &mut emit,
            )
        }
    };
    Summary {
        total: outcomes.len(),
        failed: outcomes.iter().filter(|o| !o.passed).count(),
    }
}

/// Evaluates a conjecture on every `(λ, μ, r)` with `|λ| ≤ max_lambda`,
/// `1 ≤ r ≤ max_r`, in `|λ/μ| + r` variables.
pub fn run_conjecture(
    conj: Conjecture,
    max_lambda: usize,
    max_r: usize,
    emit: impl FnMut(&CaseVerdict),
) -> Vec<CaseVerdict> {
    let cases = identity_cases(max_lambda, max_r);
    run_ordered(
        &cases,
        |(lam, mu, r)| evaluate(conj, lam, mu, *r, lam.size() - mu.size() + r),
        emit,
    )
}
