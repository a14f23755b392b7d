use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use skewsym::colored::{rhs_chi, rhs_cspr, rhs_smnr, rhs_spr, rhs_sqmnr3, rhs_sqmnr_prime};
use skewsym::jdt::rectify_traced;
use skewsym::sweep::{run_conjecture, run_rule};
use skewsym::tableaux::{insert, insert_from_row, phi_traced, psi_traced, reverse_insert_from_row, InsertionOutcome};
use skewsym::{Bounds, Conjecture, Partition, Rule, SkewSchurSum, SkewShape, SkewTableau, StandardTableau, SymFunc, SymRing};

/// Exact skew Schur function identities: expansions, verification sweeps,
/// conjecture tables and algorithm traces.
#[derive(Parser)]
#[command(name = "skewsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply a skew Schur function by a factor.
    Expand {
        /// Skew shape `outer/inner`, e.g. 3,2,2/1,1; `-` is the empty partition.
        #[arg(long)]
        shape: String,
        /// s:<r>, e:<r>, p:<r>, qp:<r>, barp:<r> or qp:<partition>.
        #[arg(long = "with")]
        factor: String,
        #[arg(long, value_enum, default_value_t = Mode::Formal)]
        mode: Mode,
        /// Variables for monomial mode; defaults to the total degree.
        #[arg(long)]
        nvars: Option<usize>,
        /// Formal mode: one line, largest shape first.
        #[arg(long)]
        inline: bool,
    },
    /// Run an exhaustive verification sweep.
    Verify {
        #[arg(value_parser = parse_rule)]
        rule: Rule,
        #[arg(long, default_value_t = Bounds::default().max_lambda)]
        max_lambda: usize,
        #[arg(long, default_value_t = Bounds::default().max_r)]
        max_r: usize,
        #[arg(long, default_value_t = Bounds::default().max_entry)]
        max_entry: u32,
        #[arg(long, default_value_t = Bounds::default().max_cells)]
        max_cells: usize,
    },
    /// Evaluate a conjectured Hall-Littlewood rule and print a verdict table.
    Conjecture {
        #[arg(value_enum)]
        id: ConjectureId,
        #[arg(long, default_value_t = 4)]
        max_lambda: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Print the steps of one algorithm on a tableau.
    Trace {
        #[arg(value_enum)]
        algorithm: Algorithm,
        /// File holding the tableau, `-` for stdin.
        #[arg(long, conflicts_with = "tableau")]
        input: Option<String>,
        /// The tableau itself, rows separated by `/`.
        #[arg(long)]
        tableau: Option<String>,
        /// Value to insert.
        #[arg(long)]
        k: Option<u32>,
        /// Starting row for insertion or reverse insertion.
        #[arg(long)]
        row: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Formal,
    Monomial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureId {
    Hl1,
    Hl2,
    Hl3,
    HlSqmnr,
}

impl ConjectureId {
    fn conjecture(self) -> Conjecture {
        match self {
            ConjectureId::Hl1 => Conjecture::Schur,
            ConjectureId::Hl2 => Conjecture::Elementary,
            ConjectureId::Hl3 => Conjecture::HallLittlewood,
            ConjectureId::HlSqmnr => Conjecture::SchurTimesHl,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Insert,
    Reverse,
    Phi,
    Psi,
    Rectify,
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.parse()
}

/// Failures that should exit with 2 rather than 1.
#[derive(Debug)]
struct Usage(anyhow::Error);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(r: Result<T>) -> Result<T> {
    r.map_err(|e| anyhow!(Usage(e)))
}

enum Factor {
    Schur(usize),
    Elementary(usize),
    Power(usize),
    QPower(usize),
    BarP(usize),
    QPowerProduct(Partition),
}

impl Factor {
    fn parse(s: &str) -> Result<Factor> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("factor '{s}' must look like s:<r>, e:<r>, p:<r>, qp:<r>, barp:<r> or qp:<partition>"))?;
        if kind == "qp" && arg.contains(',') {
            return Ok(Factor::QPowerProduct(arg.parse()?));
        }
        let r: usize = arg.parse().with_context(|| format!("bad degree in factor '{s}'"))?;
        Ok(match kind {
            "s" => Factor::Schur(r),
            "e" => Factor::Elementary(r),
            "p" => Factor::Power(r),
            "qp" => Factor::QPower(r),
            "barp" => Factor::BarP(r),
            _ => bail!("unknown factor kind '{kind}'"),
        })
    }

    fn degree(&self) -> usize {
        match self {
            Factor::Schur(r) | Factor::Elementary(r) | Factor::Power(r) | Factor::QPower(r) | Factor::BarP(r) => *r,
            Factor::QPowerProduct(tau) => tau.size(),
        }
    }

    fn formal(&self, shape: &SkewShape) -> SkewSchurSum {
        let (lam, mu) = (shape.outer(), shape.inner());
        match self {
            Factor::Schur(r) => rhs_spr(lam, mu, *r),
            Factor::Elementary(r) => rhs_cspr(lam, mu, *r),
            Factor::Power(r) => rhs_smnr(lam, mu, *r),
            Factor::QPower(r) => rhs_sqmnr_prime(lam, mu, *r),
            Factor::BarP(r) => rhs_sqmnr3(lam, mu, *r),
            Factor::QPowerProduct(tau) => rhs_chi(lam, mu, tau),
        }
    }

    fn monomial(&self, ring: &SymRing) -> Result<SymFunc> {
        Ok(match self {
            Factor::Schur(r) => ring.skew_schur(&SkewShape::straight(Partition::row_shape(*r)))?,
            Factor::Elementary(r) => ring.elementary(*r)?,
            Factor::Power(r) => ring.power_sum(*r)?,
            Factor::QPower(r) => ring.qpower(*r)?,
            Factor::BarP(r) => ring.barp(*r)?,
            Factor::QPowerProduct(tau) => ring.qpower_prod(tau)?,
        })
    }
}

fn max_degree() -> Result<usize> {
    match std::env::var("SKEWSYM_MAX_DEGREE") {
        Ok(v) => v.trim().parse().with_context(|| format!("SKEWSYM_MAX_DEGREE must be a number, got '{v}'")),
        Err(_) => Ok(SymRing::DEFAULT_MAX_DEGREE),
    }
}

fn expand(out: &mut impl Write, shape: &str, factor: &str, mode: Mode, nvars: Option<usize>, inline: bool) -> Result<bool> {
    let (shape, factor, max) = usage((|| Ok((shape.parse::<SkewShape>()?, Factor::parse(factor)?, max_degree()?)))())?;
    match mode {
        Mode::Formal => {
            let sum = factor.formal(&shape);
            if inline {
                writeln!(out, "{}", sum.render_inline())?;
            } else {
                writeln!(out, "{}", sum.render())?;
            }
        }
        Mode::Monomial => {
            let n = nvars.unwrap_or(shape.size() + factor.degree());
            let ring = SymRing::new(n).with_max_degree(max);
            let product = usage((|| {
                let base = ring.skew_schur(&shape)?;
                Ok(ring.mul(&base, &factor.monomial(&ring)?)?)
            })())?;
            writeln!(out, "{}", product.render())?;
        }
    }
    Ok(true)
}

fn verify(out: &mut impl Write, rule: Rule, bounds: Bounds) -> Result<bool> {
    let mut io_err = None;
    let summary = run_rule(rule, &bounds, |o| {
        if io_err.is_none() {
            if let Err(e) = writeln!(out, "{}", o.line) {
                io_err = Some(e);
            }
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    writeln!(out, "SUMMARY rule={rule} cases={} failed={}", summary.total, summary.failed)?;
    Ok(summary.all_passed())
}

fn conjecture(out: &mut impl Write, id: ConjectureId, max_lambda: usize, max_r: usize, format: Format) -> Result<bool> {
    let conj = id.conjecture();
    let mut io_err = None;
    let verdicts = run_conjecture(conj, max_lambda, max_r, |v| {
        let text = match format {
            Format::Tsv => v.to_tsv(),
            Format::Text => v.to_text(),
        };
        if io_err.is_none() {
            if let Err(e) = writeln!(out, "{text}") {
                io_err = Some(e);
            }
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    let failed = verdicts.iter().filter(|v| !v.passed()).count();
    writeln!(out, "# {} cases={} pass={} fail={}", conj.id(), verdicts.len(), verdicts.len() - failed, failed)?;
    Ok(failed == 0)
}

fn read_input(input: Option<&str>, inline: Option<&str>) -> Result<String> {
    match (input, inline) {
        (_, Some(t)) => Ok(t.to_string()),
        (Some("-"), None) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        (Some(path), None) => std::fs::read_to_string(path).with_context(|| format!("cannot read {path}")),
        (None, None) => bail!("trace needs --input <file> or --tableau <rows>"),
    }
}

fn write_insertion(out: &mut impl Write, o: &InsertionOutcome) -> Result<()> {
    for b in &o.bumps {
        writeln!(out, "bump {b}")?;
    }
    match o.exit_value {
        Some(v) => writeln!(out, "exit row={} value={v}", o.exit_row)?,
        None => writeln!(out, "exit row={}", o.exit_row)?,
    }
    writeln!(out, "result {}", o.tableau.to_line())?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn trace(
    out: &mut impl Write,
    algorithm: Algorithm,
    input: Option<&str>,
    inline: Option<&str>,
    k: Option<u32>,
    row: Option<usize>,
    lambda: Option<&str>,
    mu: Option<&str>,
) -> Result<bool> {
    let text = usage(read_input(input, inline))?;
    let strips = || -> Result<(Partition, Partition)> {
        let lam = lambda.ok_or_else(|| anyhow!("--lambda is required"))?.parse()?;
        let mu = mu.ok_or_else(|| anyhow!("--mu is required"))?.parse()?;
        Ok((lam, mu))
    };
    match algorithm {
        Algorithm::Rectify => {
            let t: StandardTableau = usage(text.parse().map_err(Into::into))?;
            let (result, paths) = rectify_traced(&t);
            for p in &paths {
                writeln!(out, "slide {p}")?;
            }
            writeln!(out, "result {}", result.to_line())?;
        }
        Algorithm::Insert | Algorithm::Reverse => {
            let t: SkewTableau = usage(text.parse().map_err(Into::into))?;
            let outcome = match (algorithm, k, row) {
                (Algorithm::Insert, Some(k), None) if k > 0 => insert(&t, k),
                (Algorithm::Insert, None, Some(i)) => usage(insert_from_row(&t, i).map_err(Into::into))?,
                (Algorithm::Reverse, None, Some(i)) => usage(reverse_insert_from_row(&t, i).map_err(Into::into))?,
                (Algorithm::Insert, _, _) => return usage(Err(anyhow!("insert needs exactly one of --k <positive value> or --row"))),
                _ => return usage(Err(anyhow!("reverse needs --row and no --k"))),
            };
            write_insertion(out, &outcome)?;
        }
        Algorithm::Phi | Algorithm::Psi => {
            let t: SkewTableau = usage(text.parse().map_err(Into::into))?;
            let (lam, mu) = usage(strips())?;
            let mut log = Vec::new();
            let image = if matches!(algorithm, Algorithm::Phi) {
                phi_traced(&t, &lam, &mu, Some(&mut log))
            } else {
                psi_traced(&t, &lam, &mu, Some(&mut log))
            };
            let image = usage(image.map_err(Into::into))?;
            for l in &log {
                writeln!(out, "{l}")?;
            }
            writeln!(out, "result {}", image.to_line())?;
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::Expand {
            shape,
            factor,
            mode,
            nvars,
            inline,
        } => expand(&mut out, &shape, &factor, mode, nvars, inline)?,
        Command::Verify {
            rule,
            max_lambda,
            max_r,
            max_entry,
            max_cells,
        } => verify(
            &mut out,
            rule,
            Bounds {
                max_lambda,
                max_r,
                max_entry,
                max_cells,
            },
        )?,
        Command::Conjecture {
            id,
            max_lambda,
            max_r,
            format,
        } => conjecture(&mut out, id, max_lambda, max_r, format)?,
        Command::Trace {
            algorithm,
            input,
            tableau,
            k,
            row,
            lambda,
            mu,
        } => trace(
            &mut out,
            algorithm,
            input.as_deref(),
            tableau.as_deref(),
            k,
            row,
            lambda.as_deref(),
            mu.as_deref(),
        )?,
    };
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
