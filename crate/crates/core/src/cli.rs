//! The `copol` command line, kept in the library so it can be driven from
//! tests with explicit arguments and environment.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::axioms::axiom_ledger;
use crate::cases::{
    solve_cases, theorem_main, CaseId, CaseReport, ScanConfig, Status, DEFAULT_DIOPHANTINE_BOUND,
    DEFAULT_SCAN_BOUND,
};
use crate::error::{Error, Result};
use crate::fixed_space::{
    annihilator_fixed_dim, element_fixed_dim, involution_fixed_dim, max_circle_fixed_dim,
    FixedSpaceResult, Involution, InvolutionKind, Mode, Sign, TorusElement,
};
use crate::irrep::{freudenthal_diagram, su3_shells, IrrepDescriptor, Reality, WeightDiagram};
use crate::report::{
    axioms_json, axioms_markdown, canonical, case_json, case_markdown, theorem_json,
    theorem_markdown, Baseline,
};
use crate::weight::{GroupType, RationalDirection, SimpleFactor, Weight};

pub const SCAN_BOUND_ENV: &str = "COPOL_SCAN_BOUND";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "copol", about = "Weight diagrams, fixed spaces and case verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the case analysis and compare survivors with the baseline.
    Verify(VerifyArgs),
    /// Print the weight diagram of an irreducible representation.
    Mult(MultArgs),
    /// Fixed-space dimension queries.
    Fixdim {
        #[command(subcommand)]
        query: FixdimQuery,
    },
    /// Print the ledger of cited results.
    Axioms {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliMode {
    Paper,
    Exact,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Self {
        match m {
            CliMode::Paper => Mode::PaperBound,
            CliMode::Exact => Mode::Exact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Case id such as C7-DISC-CONJ (case-insensitive); all cases by default.
    #[arg(long = "case")]
    case: Option<String>,
    #[arg(long, value_enum, default_value_t = CliMode::Paper)]
    mode: CliMode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Survivor baseline JSON; the committed baseline by default.
    #[arg(long)]
    baseline: Option<String>,
    /// Largest scanned parameter (overrides COPOL_SCAN_BOUND).
    #[arg(long)]
    scan_bound: Option<i64>,
    #[arg(long)]
    diophantine_bound: Option<i64>,
    /// Exit 0 even when EXACT mode flags discrepancies.
    #[arg(long)]
    allow_discrepancies: bool,
}

#[derive(Debug, Args)]
struct RepArgs {
    /// A1, A2, U3, A1xA1 or T1xA1xA1.
    group: String,
    /// Highest weight in the fundamental-weight basis.
    #[arg(allow_negative_numbers = true)]
    weight: Vec<i64>,
}

#[derive(Debug, Args)]
struct MultArgs {
    #[command(flatten)]
    rep: RepArgs,
    /// Also print the hexagon/triangle shell structure (A2 only).
    #[arg(long)]
    shells: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum FixdimQuery {
    /// Largest fixed space of a circle in the maximal torus.
    MaxCircle {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value_t = CliMode::Exact)]
        mode: CliMode,
    },
    /// Fixed space of a finite-order torus element.
    Element {
        #[command(flatten)]
        rep: RepArgs,
        /// Exponents, comma separated (coroot basis, or diagonal with --diagonal).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        dir: Vec<i64>,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        diagonal: bool,
    },
    /// Fixed space of the circle with the given Lie algebra direction.
    Annihilator {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        dir: Vec<i64>,
    },
    /// Fixed space of an involution of C^m (x) C^n.
    Involution {
        m: i64,
        n: i64,
        #[arg(long, value_enum)]
        kind: CliInvolution,
        #[arg(long, value_enum, default_value_t = CliSign::Plus)]
        sign: CliSign,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliInvolution {
    Swap,
    SwapConj,
    Conj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliSign {
    Plus,
    Minus,
}

fn parse_group(name: &str) -> Result<GroupType> {
    match name.to_ascii_uppercase().as_str() {
        "A1" | "SU2" => Ok(GroupType::su2()),
        "A2" | "SU3" => Ok(GroupType::su3()),
        "U3" | "T1XA2" => Ok(GroupType::u3()),
        "A1XA1" => Ok(GroupType::su2_su2(false)),
        "T1XA1XA1" | "U1XA1XA1" => Ok(GroupType::su2_su2(true)),
        _ => Err(Error::InvalidArgument(format!("unknown group `{name}`"))),
    }
}

/// Reality type of a self-conjugate representation: real when the diagram's
/// Frobenius–Schur sign is `+`. Charged representations are of complex type.
fn reality_for(group: &GroupType, coords: &[i64]) -> Reality {
    if group.has_central_circle {
        return Reality::ComplexType;
    }
    let real = match (group.simple_factors.as_slice(), coords) {
        ([SimpleFactor::A1], [p]) => p % 2 == 0,
        ([SimpleFactor::A2], [a, b]) => a == b,
        ([SimpleFactor::A1, SimpleFactor::A1], [p, q]) => (p + q) % 2 == 0,
        _ => false,
    };
    if real {
        Reality::RealForm
    } else {
        Reality::ComplexType
    }
}

fn descriptor(rep: &RepArgs) -> Result<IrrepDescriptor> {
    let group = parse_group(&rep.group)?;
    if rep.weight.len() != group.semisimple_rank() {
        return Err(Error::DimensionMismatch {
            expected: group.semisimple_rank(),
            actual: rep.weight.len(),
        });
    }
    let reality = reality_for(&group, &rep.weight);
    let charge = i64::from(group.has_central_circle);
    IrrepDescriptor::new(group, Weight::new(rep.weight.clone(), charge), reality)
}

fn diagram(rep: &RepArgs) -> Result<WeightDiagram> {
    freudenthal_diagram(&descriptor(rep)?)
}

fn render_mult(args: &MultArgs) -> Result<String> {
    let d = diagram(&args.rep)?;
    let shells = if args.shells {
        if d.group() != &GroupType::su3() {
            return Err(Error::InvalidArgument("--shells needs group A2".into()));
        }
        let c = &d.rep.highest_weight.coords;
        Some(su3_shells(c[0], c[1])?)
    } else {
        None
    };
    if args.json {
        let weights: Vec<_> = d
            .entries
            .iter()
            .map(|(w, m)| json!({"weight": w, "multiplicity": m}))
            .collect();
        let mut v = json!({
            "representation": d.rep.to_string(),
            "complex_dim": d.complex_dim,
            "real_dim": d.real_dim,
            "weights": weights,
        });
        if let Some(s) = shells {
            v["shells"] = serde_json::to_value(s).expect("shells serialize");
        }
        return Ok(canonical(&v));
    }
    let mut out = format!(
        "{}: complex dim {}, real dim {}, {} weights\n",
        d.rep,
        d.complex_dim,
        d.real_dim,
        d.entries.len()
    );
    for (w, m) in d.entries.iter().rev() {
        let _ = writeln!(out, "{w} {m}");
    }
    if let Some(s) = shells {
        out.push_str("shells:\n");
        for shell in &s.shells {
            let _ = writeln!(
                out,
                "{:?} {} multiplicity {} weights {}",
                shell.kind, shell.index, shell.multiplicity, shell.weight_count
            );
        }
    }
    Ok(out)
}

fn render_fixed(r: &FixedSpaceResult) -> String {
    let mut out = format!(
        "real_dim {} complex_dim {} mode {}",
        r.real_dim, r.complex_dim, r.mode
    );
    if let Some(w) = &r.witness {
        let _ = write!(out, " witness {w}");
    }
    out.push('\n');
    out
}

fn run_fixdim(q: &FixdimQuery) -> Result<String> {
    match q {
        FixdimQuery::MaxCircle { rep, mode } => {
            Ok(render_fixed(&max_circle_fixed_dim(&diagram(rep)?, (*mode).into())?))
        }
        FixdimQuery::Element {
            rep,
            dir,
            order,
            diagonal,
        } => {
            let h = if *diagonal {
                let e: [i64; 3] = dir.as_slice().try_into().map_err(|_| {
                    Error::DimensionMismatch {
                        expected: 3,
                        actual: dir.len(),
                    }
                })?;
                TorusElement::diagonal(e, *order)?
            } else {
                TorusElement::coroot(dir.clone(), *order)?
            };
            Ok(render_fixed(&element_fixed_dim(&diagram(rep)?, &h)?))
        }
        FixdimQuery::Annihilator { rep, dir } => {
            let dir = RationalDirection::new(dir.clone())?;
            Ok(render_fixed(&annihilator_fixed_dim(&diagram(rep)?, &dir)?))
        }
        FixdimQuery::Involution { m, n, kind, sign } => {
            let kind = match kind {
                CliInvolution::Swap => Involution::Swap,
                CliInvolution::SwapConj => Involution::SwapConj,
                CliInvolution::Conj => Involution::Conj,
            };
            let sign = match sign {
                CliSign::Plus => Sign::Plus,
                CliSign::Minus => Sign::Minus,
            };
            let d = involution_fixed_dim(*m, *n, InvolutionKind::new(kind, sign))?;
            Ok(format!("real_dim {d}\n"))
        }
    }
}

fn scan_config(args: &VerifyArgs, env: &BTreeMap<String, String>) -> Result<ScanConfig> {
    let from_env = env
        .get(SCAN_BOUND_ENV)
        .map(|v| {
            v.trim().parse::<i64>().map_err(|_| {
                Error::InvalidArgument(format!("{SCAN_BOUND_ENV} is not an integer: `{v}`"))
            })
        })
        .transpose()?;
    Ok(ScanConfig {
        scan_bound: args.scan_bound.or(from_env).unwrap_or(DEFAULT_SCAN_BOUND),
        diophantine_bound: args.diophantine_bound.unwrap_or(DEFAULT_DIOPHANTINE_BOUND),
    })
}

fn run_verify(args: &VerifyArgs, env: &BTreeMap<String, String>) -> Result<(i32, String)> {
    let cfg = scan_config(args, env)?;
    let mode: Mode = args.mode.into();
    let baseline = match &args.baseline {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Baseline(format!("{path}: {e}")))?;
            Baseline::from_json(&text)?
        }
        None => Baseline::builtin(),
    };
    let (reports, output, theorem_ok): (Vec<CaseReport>, String, bool) = match &args.case {
        Some(id) => {
            let id: CaseId = id.parse()?;
            let mut reports = solve_cases(&[id], mode, cfg)?;
            baseline.apply(&mut reports);
            let out = match args.format {
                Format::Json => canonical(&case_json(&reports[0])),
                Format::Md => case_markdown(&reports[0]),
            };
            (reports, out, true)
        }
        None => {
            let mut t = theorem_main(mode, cfg)?;
            baseline.apply(&mut t.reports);
            let out = match args.format {
                Format::Json => canonical(&theorem_json(&t)),
                Format::Md => theorem_markdown(&t),
            };
            let ok = t.status() == Status::Pass;
            (t.reports, out, ok)
        }
    };
    let mismatch =
        !theorem_ok || reports.iter().any(|r| !baseline.diff(r).is_empty());
    let flagged = reports.iter().any(|r| !r.discrepancies.is_empty());
    let code = match mode {
        Mode::PaperBound if mismatch => EXIT_MISMATCH,
        Mode::Exact if (mismatch || flagged) && !args.allow_discrepancies => EXIT_DISCREPANCY,
        _ => EXIT_OK,
    };
    Ok((code, output))
}

fn dispatch(cli: &Cli, env: &BTreeMap<String, String>) -> Result<(i32, String)> {
    match &cli.command {
        Command::Verify(args) => run_verify(args, env),
        Command::Mult(args) => Ok((EXIT_OK, render_mult(args)?)),
        Command::Fixdim { query } => Ok((EXIT_OK, run_fixdim(query)?)),
        Command::Axioms { format } => {
            let ledger = axiom_ledger();
            Ok((
                EXIT_OK,
                match format {
                    Format::Json => canonical(&axioms_json(&ledger)),
                    Format::Md => axioms_markdown(&ledger),
                },
            ))
        }
    }
}

/// Runs the CLI on `args` (without the program name) and returns the exit
/// code and everything that should be printed.
pub fn run_cli<S: AsRef<str>>(args: &[S], env: &BTreeMap<String, String>) -> (i32, String) {
    let argv = std::iter::once("copol").chain(args.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli, env) {
        Ok(r) => r,
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        run_cli(args, &BTreeMap::new())
    }

    #[test]
    fn trivial_diagram() {
        let (code, out) = run(&["mult", "A2", "0", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("complex dim 1"));
        assert!(out.lines().any(|l| l == "(0,0) 1"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["verify", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run(&["mult", "B7", "1"]).0, EXIT_USAGE);
        assert_eq!(run(&["verify", "--case", "C99"]).0, EXIT_USAGE);
    }

    #[test]
    fn flag_overrides_environment() {
        let env = BTreeMap::from([(SCAN_BOUND_ENV.to_string(), "7".to_string())]);
        let args = VerifyArgs {
            case: None,
            mode: CliMode::Paper,
            format: Format::Json,
            baseline: None,
            scan_bound: Some(9),
            diophantine_bound: None,
            allow_discrepancies: false,
        };
        assert_eq!(scan_config(&args, &env).unwrap().scan_bound, 9);
        let args = VerifyArgs { scan_bound: None, ..args };
        assert_eq!(scan_config(&args, &env).unwrap().scan_bound, 7);
        assert_eq!(scan_config(&args, &BTreeMap::new()).unwrap().scan_bound, DEFAULT_SCAN_BOUND);
    }

    #[test]
    fn involution_query() {
        let (code, out) = run(&["fixdim", "involution", "3", "3", "--kind", "swap", "--sign", "minus"]);
        assert_eq!((code, out.as_str()), (0, "real_dim 6\n"));
    }
}
