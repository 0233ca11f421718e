//! The `seifert` command line.
//!
//! Exit codes: 0 for success and true verdicts, 1 for false verdicts and
//! failed validations (explained on stderr), 2 for usage, parse, and file
//! errors. `--porcelain` switches every command to `key=value` lines.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::action::{
    beta_orbit_numbers, check_obstruction_condition, check_tau_commuting, gluing_matrix,
    induced_solid_torus_action, lift_action, project_action, validate_action_spec, ActionError,
    ExtendedProductActionSpec,
};
use crate::format::{
    action_spec_to_json, descriptor_to_json, load_action_spec, load_descriptor, FormatError,
};
use crate::group::analyze_structure;
use crate::presentation::{
    orbifold_pi1, pi1, smith_normal_form, AbelianGroupStructure, IntegerMatrix, Presentation,
};
use crate::symbol::{
    base_quotient, equivalent, normalize, orientable_double_cover, total_sum, SeifertSymbol,
};

#[derive(Debug, Parser)]
#[command(name = "seifert", version, about = "Seifert fibered space invariants")]
struct Cli {
    /// Machine-readable key=value output.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Print the gluing matrices used.
    #[arg(long, global = true)]
    det: bool,
    /// Extra orbit numbers appended to obstruction checks.
    #[arg(long = "orbits-extra", value_name = "N", global = true)]
    orbits_extra: Vec<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form with trailing obstruction pair (1,b).
    Normalize { symbol: String },
    /// Exact sum of p/q over all pairs.
    Sum { symbol: String },
    /// Exit 0 if the two symbols name the same fibration.
    Equiv { a: String, b: String },
    /// Orientable base space double cover of an n2 symbol.
    Cover { symbol: String },
    /// n2 symbol double covered by an o1 symbol, if any.
    Quotient { symbol: String },
    /// Fundamental group presentation.
    Pi1 { symbol: String },
    /// Orbifold fundamental group of the base.
    #[command(name = "orbifold-pi1")]
    OrbifoldPi1 { symbol: String },
    /// First homology.
    H1 { symbol: String },
    /// Smith invariants of an integer matrix file (one row per line).
    Snf { file: PathBuf },
    /// Check the action laws of an action spec file.
    #[command(name = "validate-action")]
    ValidateAction { file: PathBuf },
    /// Solid-torus map induced on filling I (1-based) by element G.
    #[command(name = "induced-torus")]
    InducedTorus {
        file: PathBuf,
        boundary: usize,
        element: usize,
    },
    /// Check that an action commutes with the covering translation.
    #[command(name = "check-tau")]
    CheckTau { file: PathBuf },
    /// Fold a tau-commuting spec to a descriptor on the base.
    Project { file: PathBuf },
    /// Lift a descriptor to a tau-commuting spec on the double cover.
    Lift { file: PathBuf },
    /// Solve b = sum b_i * orbit_i.
    Obstruction {
        #[arg(allow_hyphen_values = true)]
        b: i64,
        orbits: Vec<u64>,
    },
    /// Orbit sizes of the boundary circles under beta.
    Orbits { file: PathBuf },
    /// Structure of the acting group.
    #[command(name = "analyze-group")]
    AnalyzeGroup { file: PathBuf },
}

/// The result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(ok: bool, stdout: String, stderr: String) -> Self {
        Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr,
        }
    }

    fn usage(stderr: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Errors that end a command with exit code 2.
#[derive(Debug, thiserror::Error)]
enum UsageError {
    #[error("{0}")]
    Symbol(#[from] crate::symbol::SymbolError),
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Other(String),
}

fn line(out: &mut String, text: impl std::fmt::Display) {
    writeln!(out, "{text}").expect("write to string");
}

fn parse(text: &str) -> Result<SeifertSymbol, UsageError> {
    Ok(text.parse()?)
}

/// Runs the CLI on `args` (without the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once("seifert".into()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn presentation_text(p: &Presentation, porcelain: bool) -> String {
    if !porcelain {
        return p.to_string();
    }
    let mut out = String::new();
    line(&mut out, format_args!("generators={}", p.generators().join(",")));
    for r in p.relators() {
        line(&mut out, format_args!("relator={}", p.format_word(r)));
    }
    out
}

/// Action errors that are verdicts (exit 1) rather than bad input (exit 2).
fn action_verdict(e: ActionError, porcelain: bool) -> Result<Outcome, UsageError> {
    match e {
        ActionError::Law(v) => {
            let stdout = if porcelain {
                let mut out = format!("valid=false\nlaw={}\ng={}\n", v.law.tag(), v.g);
                if let Some(h) = v.h {
                    line(&mut out, format_args!("h={h}"));
                }
                if let Some(i) = v.boundary {
                    line(&mut out, format_args!("i={}", i + 1));
                }
                out
            } else {
                "fail\n".to_string()
            };
            Ok(Outcome::verdict(false, stdout, format!("action laws fail: {v}\n")))
        }
        ActionError::Descriptor(v) => Ok(Outcome::verdict(
            false,
            if porcelain { "valid=false\n".into() } else { "fail\n".into() },
            format!("descriptor laws fail: {v}\n"),
        )),
        ActionError::NotTauCommuting(f) => Ok(Outcome::verdict(
            false,
            if porcelain {
                format!("commutes=false\ncondition={}\ng={}\n", f.condition.tag(), f.g)
            } else {
                "fail\n".into()
            },
            format!("not tau-commuting: {f}\n"),
        )),
        other => Err(UsageError::Other(other.to_string())),
    }
}

fn load_valid(file: &PathBuf) -> Result<Result<ExtendedProductActionSpec, ActionError>, UsageError> {
    let spec = load_action_spec(file)?;
    Ok(validate_action_spec(&spec).map(|()| spec))
}

fn dispatch(cli: &Cli) -> Result<Outcome, UsageError> {
    let porcelain = cli.porcelain;
    let mut out = String::new();
    match &cli.command {
        Command::Normalize { symbol } => {
            let normal = normalize(&parse(symbol)?);
            if porcelain {
                line(&mut out, format_args!("normal={normal}"));
                line(&mut out, format_args!("b={}", normal.obstruction_class()));
            } else {
                line(&mut out, normal);
            }
        }
        Command::Sum { symbol } => {
            let sum = total_sum(&parse(symbol)?);
            if porcelain {
                line(&mut out, format_args!("sum={sum}"));
            } else {
                line(&mut out, sum);
            }
        }
        Command::Equiv { a, b } => {
            let (a, b) = (parse(a)?, parse(b)?);
            let same = equivalent(&a, &b);
            if porcelain {
                line(&mut out, format_args!("equivalent={same}"));
            } else {
                line(&mut out, if same { "equivalent" } else { "not equivalent" });
            }
            let stderr = if same {
                String::new()
            } else {
                format!("normal forms differ: {} vs {}\n", normalize(&a), normalize(&b))
            };
            return Ok(Outcome::verdict(same, out, stderr));
        }
        Command::Cover { symbol } => {
            let cover = orientable_double_cover(&parse(symbol)?)?;
            if porcelain {
                line(&mut out, format_args!("cover={cover}"));
            } else {
                line(&mut out, cover);
            }
        }
        Command::Quotient { symbol } => match base_quotient(&parse(symbol)?)? {
            Some(base) => {
                if porcelain {
                    line(&mut out, format_args!("quotient={base}"));
                } else {
                    line(&mut out, base);
                }
            }
            None => {
                let stdout = if porcelain { "quotient=none\n" } else { "none\n" };
                return Ok(Outcome::verdict(
                    false,
                    stdout.into(),
                    "not a double cover: exceptional pairs must pair up and b must be even\n"
                        .into(),
                ));
            }
        },
        Command::Pi1 { symbol } => out = presentation_text(&pi1(&parse(symbol)?), porcelain),
        Command::OrbifoldPi1 { symbol } => {
            out = presentation_text(&orbifold_pi1(&parse(symbol)?), porcelain)
        }
        Command::H1 { symbol } => {
            let h = crate::presentation::h1(&parse(symbol)?);
            if porcelain {
                line(&mut out, format_args!("h1={h}"));
                line(&mut out, format_args!("free_rank={}", h.free_rank));
                line(&mut out, format_args!("torsion={}", join(&h.torsion, ",")));
            } else {
                line(&mut out, h);
            }
        }
        Command::Snf { file } => {
            let matrix = read_matrix(file)?;
            let invariants = smith_normal_form(&matrix);
            let cokernel = AbelianGroupStructure::from_invariants(matrix.cols(), &invariants);
            if porcelain {
                line(&mut out, format_args!("invariants={}", join(&invariants, ",")));
                line(&mut out, format_args!("cokernel={cokernel}"));
            } else {
                line(&mut out, join(&invariants, " "));
                line(&mut out, format_args!("cokernel {cokernel}"));
            }
        }
        Command::ValidateAction { file } => match load_valid(file)? {
            Ok(_) => line(&mut out, if porcelain { "valid=true" } else { "pass" }),
            Err(e) => return action_verdict(e, porcelain),
        },
        Command::InducedTorus {
            file,
            boundary,
            element,
        } => {
            let spec = match load_valid(file)? {
                Ok(spec) => spec,
                Err(e) => return action_verdict(e, porcelain),
            };
            if *boundary == 0 {
                return Err(UsageError::Other("boundary index is 1-based".into()));
            }
            let i = boundary - 1;
            let data = induced_solid_torus_action(&spec, i, *element)
                .map_err(|e| UsageError::Other(e.to_string()))?;
            let (u, v) = data.rotation;
            if porcelain {
                line(&mut out, format_args!("longitude={u}"));
                line(&mut out, format_args!("meridian={v}"));
                line(&mut out, format_args!("sign={}", data.sign));
            } else {
                line(&mut out, format_args!("rotation {u} {v}"));
                line(&mut out, format_args!("sign {}", data.sign));
            }
            if cli.det {
                let j = spec.beta[*element].apply(i);
                let m = gluing_matrix(spec.symbol.pairs()[j]);
                let sep = if porcelain { "=" } else { " " };
                line(&mut out, format_args!("gluing{sep}{m}"));
            }
        }
        Command::CheckTau { file } => {
            let spec = load_action_spec(file)?;
            let report = match check_tau_commuting(&spec) {
                Ok(report) => report,
                Err(e) => return action_verdict(e, porcelain),
            };
            return match report.failure {
                None => Ok(Outcome::ok(
                    if porcelain { "commutes=true\n" } else { "commutes\n" }.into(),
                )),
                Some(f) => action_verdict(ActionError::NotTauCommuting(f), porcelain),
            };
        }
        Command::Project { file } => {
            let spec = load_action_spec(file)?;
            match project_action(&spec) {
                Ok(d) => line(&mut out, descriptor_to_json(&d)),
                Err(e) => return action_verdict(e, porcelain),
            }
        }
        Command::Lift { file } => {
            let d = load_descriptor(file)?;
            match lift_action(&d) {
                Ok(spec) => line(&mut out, action_spec_to_json(&spec)),
                Err(e) => return action_verdict(e, porcelain),
            }
        }
        Command::Obstruction { b, orbits } => {
            let mut orbits = orbits.clone();
            orbits.extend(&cli.orbits_extra);
            let witness = check_obstruction_condition(*b, &orbits)
                .map_err(|e| UsageError::Other(e.to_string()))?;
            match witness {
                Some(w) => {
                    if porcelain {
                        line(&mut out, format_args!("orbits={}", join(&orbits, ",")));
                        line(&mut out, format_args!("witness={}", join(&w, ",")));
                    } else {
                        line(&mut out, join(&w, " "));
                    }
                }
                None => {
                    let stdout = if porcelain { "witness=none\n" } else { "none\n" };
                    return Ok(Outcome::verdict(
                        false,
                        stdout.into(),
                        format!("gcd of orbit numbers {} does not divide {b}\n", join(&orbits, ",")),
                    ));
                }
            }
        }
        Command::Orbits { file } => {
            let spec = load_action_spec(file)?;
            match beta_orbit_numbers(&spec) {
                Ok(sizes) => {
                    if porcelain {
                        line(&mut out, format_args!("orbits={}", join(&sizes, ",")));
                    } else {
                        line(&mut out, join(&sizes, " "));
                    }
                }
                Err(e) => return action_verdict(e, porcelain),
            }
        }
        Command::AnalyzeGroup { file } => {
            let spec = load_action_spec(file)?;
            let report = match analyze_structure(&spec) {
                Ok(report) => report,
                Err(e) => return action_verdict(e, porcelain),
            };
            let sep = if porcelain { "=" } else { ": " };
            line(&mut out, format_args!("n{sep}{}", report.n));
            line(&mut out, format_args!("alpha_image_order{sep}{}", report.alpha_image_order));
            line(&mut out, format_args!("target{sep}{}", report.shape));
            line(&mut out, format_args!("embedding_ok{sep}{}", report.embedding_ok));
            if let Some(tau) = &report.tau {
                line(&mut out, format_args!("tau_target{sep}Z_2 x H, |H| = {}", tau.h_order));
                line(&mut out, format_args!("tau_embedding_ok{sep}{}", tau.embedding_ok));
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn read_matrix(path: &PathBuf) -> Result<IntegerMatrix, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError::Other(format!("cannot read {}: {e}", path.display())))?;
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| UsageError::Other(format!("bad matrix entry '{tok}'")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cols = rows
        .first()
        .map(Vec::len)
        .ok_or_else(|| UsageError::Other("empty matrix".into()))?;
    IntegerMatrix::from_rows(cols, &rows)
        .ok_or_else(|| UsageError::Other("matrix rows have different lengths".into()))
}
