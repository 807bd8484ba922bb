//! Command implementations behind the `precy` binary.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 bad input
//! (parse/schema/consistency errors), 3 internal-consistency violation
//! (the two sides of the bracket correspondence disagree, which would
//! falsify the implementation, not the input).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use precy_core::ainfinity::terms::{all_rows, enumerate_mc4_terms, enumerate_mc5_terms};
use precy_core::ainfinity::{check_cyclic_invariance, check_maurer_cartan, McSuite};
use precy_core::bracket::{
    bracket_from_m3, m3_from_bracket, verify_correspondence, CorrespondenceReport,
};
use precy_core::io;
use precy_core::rep::{
    check_coordinate_antisymmetry, check_gl_equivariance, check_jacobi_at_points,
    sample_rep_points, validate_rep_point,
};
use precy_core::report::{CheckReport, MCReport};
use precy_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "precy",
    about = "Exact checks and conversions for cyclic A-infinity structures on A + A* \
             and double Poisson brackets",
    version
)]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    /// Worker threads for the exhaustive sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Seed for all randomized behavior; fixed seed means byte-identical
    /// reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify associativity, the unit law and cyclicity of the extension
    /// product for an algebra file.
    CheckAlgebra { algebra: PathBuf },

    /// Run the double-bracket axiom suite: antisymmetry, both Leibniz
    /// forms, the double Jacobi identity and the polyderivation check.
    CheckBracket { algebra: PathBuf, bracket: PathBuf },

    /// Convert a double bracket to its type-B ternary operation.
    ToPrecy {
        algebra: PathBuf,
        bracket: PathBuf,
        out: PathBuf,
    },

    /// Convert a type-B ternary operation back to a double bracket.
    FromPrecy {
        algebra: PathBuf,
        m3: PathBuf,
        out: PathBuf,
    },

    /// Check cyclic invariance and the Maurer-Cartan identities in
    /// arities 3-5 for a ternary operation.
    CheckPrecy { algebra: PathBuf, m3: PathBuf },

    /// Run both sides of the bracket correspondence and assert they agree.
    Correspondence { algebra: PathBuf, bracket: PathBuf },

    /// Sample representation points and verify the induced Poisson bracket
    /// at them: symbolic antisymmetry, exact Jacobi, GL-equivariance.
    Rep {
        algebra: PathBuf,
        bracket: PathBuf,
        seeds: PathBuf,
        /// Matrix size of the sampled representation points.
        #[arg(long)]
        n: usize,
        /// Number of points to sample.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Conjugators per point in the equivariance check.
        #[arg(long, default_value_t = 3)]
        conjugators: usize,
    },

    /// Print the symbolic term taxonomy of the Maurer-Cartan equations for
    /// every input row of the given arity.
    McTerms {
        #[arg(long, default_value_t = 5)]
        arity: usize,
    },
}

#[derive(Debug, Serialize)]
struct CheckSetReport<'a> {
    command: &'a str,
    pass: bool,
    checks: Vec<CheckReport>,
}

#[derive(Debug, Serialize)]
struct PrecyReport<'a> {
    command: &'a str,
    pass: bool,
    cyclicity: CheckReport,
    maurer_cartan: McSuite,
}

#[derive(Debug, Serialize)]
struct CorrespondenceOut<'a> {
    command: &'a str,
    verdict: &'a str,
    report: CorrespondenceReport,
}

fn print_check_line(report: &CheckReport) {
    if report.pass {
        println!("  {:<28} PASS   ({} cases)", report.name, report.checked);
    } else {
        println!(
            "  {:<28} FAIL   at {:?} residual {:?}",
            report.name,
            report.witness.as_deref().unwrap_or(&[]),
            report.residual.as_ref().cloned().unwrap_or_default()
        );
    }
}

fn print_mc_line(report: &MCReport) {
    if report.pass {
        println!(
            "  maurer-cartan arity {}        PASS   ({} tuples)",
            report.arity, report.tuples
        );
    } else {
        let first = report.first_witness().expect("failing report has witness");
        println!(
            "  maurer-cartan arity {}        FAIL   {} of {} tuples, first at {:?}",
            report.arity,
            report.failures.len(),
            report.tuples,
            first.inputs
        );
    }
}

fn emit_checks(format: Format, command: &str, checks: Vec<CheckReport>) -> i32 {
    let pass = checks.iter().all(|c| c.pass);
    match format {
        Format::Json => {
            let report = CheckSetReport {
                command,
                pass,
                checks,
            };
            print!("{}", io::to_canonical_json(&report));
        }
        Format::Text => {
            println!("{command}");
            for c in &checks {
                print_check_line(c);
            }
            println!("result: {}", if pass { "PASS" } else { "FAIL" });
        }
    }
    if pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn input_error(err: &Error) -> i32 {
    eprintln!("error: {err}");
    EXIT_INPUT_ERROR
}

fn load_algebra_checked(path: &Path) -> Result<precy_core::AssocAlgebra, i32> {
    io::load_algebra(path).map_err(|e| input_error(&e))
}

/// Load a bracket file and require its embedded algebra to match the one
/// given explicitly on the command line.
fn load_bracket_checked(
    alg: &Arc<precy_core::AssocAlgebra>,
    path: &Path,
) -> Result<precy_core::DoubleBracket, i32> {
    let d = io::load_bracket(path).map_err(|e| input_error(&e))?;
    if d.algebra().as_ref() != alg.as_ref() {
        let err = Error::Schema {
            context: path.display().to_string(),
            reason: "embedded algebra differs from the algebra argument".to_string(),
        };
        return Err(input_error(&err));
    }
    // rebuild over the shared algebra handle
    precy_core::DoubleBracket::new(Arc::clone(alg), d.entries().clone())
        .map_err(|e| input_error(&e))
}

pub fn run(cli: Cli) -> i32 {
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(jobs) = cli.jobs {
            builder = builder.num_threads(jobs.max(1));
        }
        match builder.build() {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: cannot build thread pool: {e}");
                return EXIT_INPUT_ERROR;
            }
        }
    };
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: Cli) -> i32 {
    match cli.command {
        Command::CheckAlgebra { algebra } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => a,
                Err(code) => return code,
            };
            let checks = vec![
                alg.check_associativity(),
                alg.check_unit(),
                precy_core::extended::check_m2_cyclicity(&alg),
                precy_core::extended::check_extended_associativity(&alg),
            ];
            emit_checks(cli.format, "check-algebra", checks)
        }

        Command::CheckBracket { algebra, bracket } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => Arc::new(a),
                Err(code) => return code,
            };
            let d = match load_bracket_checked(&alg, &bracket) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let mut checks = d.axiom_suite();
            checks.push(d.check_polyderivation());
            emit_checks(cli.format, "check-bracket", checks)
        }

        Command::ToPrecy {
            algebra,
            bracket,
            out,
        } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => Arc::new(a),
                Err(code) => return code,
            };
            let d = match load_bracket_checked(&alg, &bracket) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let m3 = m3_from_bracket(&d);
            if let Err(e) = io::save_m3(&out, &m3) {
                return input_error(&e);
            }
            println!("wrote {}", out.display());
            EXIT_OK
        }

        Command::FromPrecy { algebra, m3, out } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => Arc::new(a),
                Err(code) => return code,
            };
            let op = match io::load_m3(&m3) {
                Ok(op) => op,
                Err(e) => return input_error(&e),
            };
            if op.dim() != alg.dim() {
                let err = Error::DimensionMismatch {
                    expected: alg.dim(),
                    got: op.dim(),
                };
                return input_error(&err);
            }
            match bracket_from_m3(&alg, &op) {
                Ok(d) => {
                    if let Err(e) = io::save_bracket(&out, &d) {
                        return input_error(&e);
                    }
                    println!("wrote {}", out.display());
                    EXIT_OK
                }
                Err(e @ (Error::NonTypeB { .. } | Error::InconsistentDualTable)) => {
                    eprintln!("error: {e}");
                    EXIT_CHECK_FAILED
                }
                Err(e) => input_error(&e),
            }
        }

        Command::CheckPrecy { algebra, m3 } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => a,
                Err(code) => return code,
            };
            let op = match io::load_m3(&m3) {
                Ok(op) => op,
                Err(e) => return input_error(&e),
            };
            if op.dim() != alg.dim() {
                let err = Error::DimensionMismatch {
                    expected: alg.dim(),
                    got: op.dim(),
                };
                return input_error(&err);
            }
            let cyclicity = check_cyclic_invariance(&alg, &op);
            let mc = check_maurer_cartan(&alg, &op);
            let pass = cyclicity.pass && mc.pass();
            match cli.format {
                Format::Json => {
                    let report = PrecyReport {
                        command: "check-precy",
                        pass,
                        cyclicity,
                        maurer_cartan: mc,
                    };
                    print!("{}", io::to_canonical_json(&report));
                }
                Format::Text => {
                    println!("check-precy");
                    print_check_line(&cyclicity);
                    for r in [&mc.arity3, &mc.arity4, &mc.arity5] {
                        print_mc_line(r);
                    }
                    println!("result: {}", if pass { "PASS" } else { "FAIL" });
                }
            }
            if pass {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }

        Command::Correspondence { algebra, bracket } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => Arc::new(a),
                Err(code) => return code,
            };
            let d = match load_bracket_checked(&alg, &bracket) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let report = verify_correspondence(&alg, &d);
            let (verdict, code) = if !report.consistent {
                ("INCONSISTENT: the two sides disagree", EXIT_INCONSISTENT)
            } else if report.both_pass() {
                ("both sides pass", EXIT_OK)
            } else {
                ("both sides fail consistently", EXIT_OK)
            };
            match cli.format {
                Format::Json => {
                    let out = CorrespondenceOut {
                        command: "correspondence",
                        verdict,
                        report,
                    };
                    print!("{}", io::to_canonical_json(&out));
                }
                Format::Text => {
                    println!("correspondence");
                    for c in &report.axiom_reports {
                        print_check_line(c);
                    }
                    print_check_line(&report.cyclicity);
                    for r in [&report.mc.arity3, &report.mc.arity4, &report.mc.arity5] {
                        print_mc_line(r);
                    }
                    println!("verdict: {verdict}");
                }
            }
            code
        }

        Command::Rep {
            algebra,
            bracket,
            seeds,
            n,
            samples,
            conjugators,
        } => {
            let alg = match load_algebra_checked(&algebra) {
                Ok(a) => Arc::new(a),
                Err(code) => return code,
            };
            let d = match load_bracket_checked(&alg, &bracket) {
                Ok(d) => d,
                Err(code) => return code,
            };
            let seed_points = match io::load_seeds(&seeds, &alg) {
                Ok(s) => s,
                Err(e) => return input_error(&e),
            };
            for (i, p) in seed_points.iter().enumerate() {
                let report = validate_rep_point(&alg, p);
                if !report.pass {
                    let err = Error::InvalidSeed {
                        reason: format!("seeds[{i}] fails the homomorphism check"),
                    };
                    return input_error(&err);
                }
            }
            let points = match sample_rep_points(&alg, n, &seed_points, samples, cli.seed) {
                Ok(p) => p,
                Err(e) => return input_error(&e),
            };
            let mut checks = d.axiom_suite();
            checks.push(check_coordinate_antisymmetry(&d, n));
            checks.push(check_jacobi_at_points(&d, n, &points));
            checks.push(check_gl_equivariance(&d, n, &points, conjugators, cli.seed));
            emit_checks(cli.format, "rep", checks)
        }

        Command::McTerms { arity } => {
            if arity != 4 && arity != 5 {
                let err = Error::Schema {
                    context: "--arity".to_string(),
                    reason: "supported arities are 4 and 5".to_string(),
                };
                return input_error(&err);
            }
            let equations: Vec<_> = all_rows(arity)
                .iter()
                .map(|row| {
                    if arity == 5 {
                        enumerate_mc5_terms(row)
                    } else {
                        enumerate_mc4_terms(row)
                    }
                })
                .collect();
            match cli.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct TermsOut<'a> {
                        command: &'a str,
                        arity: usize,
                        equations: &'a [precy_core::ainfinity::SymbolicEquation],
                    }
                    let out = TermsOut {
                        command: "mc-terms",
                        arity,
                        equations: &equations,
                    };
                    print!("{}", io::to_canonical_json(&out));
                }
                Format::Text => {
                    println!("mc-terms arity {arity}");
                    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
                    for eq in &equations {
                        *counts.entry(eq.class.label()).or_default() += 1;
                        let terms: Vec<String> = eq
                            .terms
                            .iter()
                            .map(|t| {
                                t.classes()
                                    .iter()
                                    .map(|c| c.label())
                                    .collect::<Vec<_>>()
                                    .join("∘")
                            })
                            .collect();
                        println!(
                            "  ({})  {:<14} {}",
                            eq.row.join(", "),
                            eq.class.label(),
                            if terms.is_empty() {
                                "-".to_string()
                            } else {
                                terms.join(", ")
                            }
                        );
                    }
                    let summary: Vec<String> =
                        counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
                    println!("summary: {}", summary.join(", "));
                }
            }
            EXIT_OK
        }
    }
}
