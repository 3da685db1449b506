mod report;

// a closed pipe (e.g. `| head`) is not an error worth a panic
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arrgm::acceptance::{self, Scale};
use arrgm::arrangement::{dense_edges, dep_difference, dep_star_of, is_nonresonant, principal_dependence, sample_weights};
use arrgm::io::{parse_arrangement, parse_type_source, parse_weights, TypeSource};
use arrgm::os::OsAlgebra;
use arrgm::ring::format_rational;
use arrgm::spectral::gm_spectrum;
use arrgm::{CombType, Error, ErrorClass, Realization, Weights};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::*;

#[derive(Parser)]
#[command(name = "arrgm", version, about = "Exact Gauss-Manin spectra of hyperplane arrangement degenerations")]
struct Cli {
    /// Emit a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dependent sets, dense edges and Orlik-Solomon dimensions of an arrangement
    Analyze {
        file: PathBuf,
        /// Weight file to test for nonresonance
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Sample nonresonant weights with this seed and report them
        #[arg(long, conflicts_with = "weights")]
        seed: Option<u64>,
    },
    /// Principal dependence of a degeneration
    Principal {
        /// Realization of the generic type
        t: PathBuf,
        /// Realization or dependent-set list of the degeneration
        t_prime: PathBuf,
    },
    /// Spectrum of the Gauss-Manin endomorphism of a degeneration
    Spectrum {
        t: PathBuf,
        t_prime: PathBuf,
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Seed for sampled weights (used when no weight file is given)
        #[arg(long, default_value_t = 0, conflicts_with = "weights")]
        seed: u64,
        /// Include the endomorphism matrix and both eigenbases
        #[arg(long)]
        bases: bool,
    },
    /// Run the built-in regression suite
    Selftest {
        #[arg(long, value_enum, default_value_t = ScaleArg::Small)]
        scale: ScaleArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Small,
    Full,
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Core(Error),
    /// The report was printed but signals a failure.
    Reported(ExitCode),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Analyze { file, weights, seed } => analyze(&file, weights.as_deref(), seed, json),
        Command::Principal { t, t_prime } => principal(&t, &t_prime, json),
        Command::Spectrum {
            t,
            t_prime,
            weights,
            seed,
            bases,
        } => spectrum(&t, &t_prime, weights.as_deref(), seed, bases, json),
        Command::Selftest { scale } => selftest(scale, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported(code)) => code,
        Err(Failure::Io(path, e)) => {
            let report = ErrorReport {
                code: "io_error",
                class: "parse",
                message: format!("{}: {e}", path.display()),
            };
            emit_error(report, json);
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            let code = match e.class() {
                ErrorClass::Parse => 2,
                ErrorClass::Contract => 3,
                ErrorClass::Spectral => 4,
            };
            emit_error(ErrorReport::from_error(&e), json);
            ExitCode::from(code)
        }
    }
}

fn emit_error(report: ErrorReport, json: bool) {
    if json {
        print_json("error", ErrorBody { error: report });
    } else {
        eprintln!("error[{}]: {}", report.code, report.message);
    }
}

fn print_json<T: Serialize>(command: &'static str, body: T) {
    let envelope = Envelope {
        schema: SCHEMA,
        command,
        body,
    };
    say!("{}", serde_json::to_string_pretty(&envelope).expect("reports serialize"));
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_arrangement(path: &Path) -> Result<Realization, Failure> {
    Ok(parse_arrangement(&read(path)?)?)
}

fn load_type(path: &Path) -> Result<CombType, Failure> {
    Ok(match parse_type_source(&read(path)?)? {
        TypeSource::Realized(b) => dep_star_of(&b),
        TypeSource::Listed(t) => t,
    })
}

fn analyze(path: &Path, weights: Option<&Path>, seed: Option<u64>, json: bool) -> Outcome {
    let b = load_arrangement(path)?;
    let t = dep_star_of(&b);
    let os = OsAlgebra::new(&b)?;
    let frames = os.bnbc_frames();
    let lambda: Option<Weights> = match (weights, seed) {
        (Some(p), _) => Some(parse_weights(&read(p)?, b.n())?),
        (None, Some(s)) => Some(sample_weights(&b, &[], s)?),
        (None, None) => None,
    };
    let nonresonance = lambda.map(|w| {
        let check = is_nonresonant(&b, &w);
        Nonresonance {
            weights: rationals(w.values()),
            nonresonant: check.nonresonant,
            witnesses: check.witnesses.iter().map(EdgeEntry::from).collect(),
        }
    });
    let report = Analysis {
        n: b.n(),
        ell: b.ell(),
        dep_star: dep_entries(&t),
        dense_edges: dense_edges(&b).iter().map(EdgeEntry::from).collect(),
        os_dimensions: (0..=b.ell()).map(|q| os.dim(q)).collect(),
        bnbc_count: frames.len(),
        bnbc_frames: labels(&frames),
        nonresonance,
    };
    if json {
        print_json("analyze", report);
        return Ok(());
    }
    say!("n = {}, ell = {}", report.n, report.ell);
    say!("Dep*: {}", set_list(&report.dep_star));
    let edges: Vec<String> = report.dense_edges.iter().map(|e| format!("{}(rank {})", e.hyperplanes, e.rank)).collect();
    say!("dense edges: {}", edges.join(" "));
    let dims: Vec<String> = report.os_dimensions.iter().map(|d| d.to_string()).collect();
    say!("dim A^q: {}", dims.join(" "));
    say!("βnbc frames ({}): {}", report.bnbc_count, report.bnbc_frames.join(" "));
    if let Some(nr) = &report.nonresonance {
        say!("weights: {}", nr.weights.join(" "));
        if nr.nonresonant {
            say!("nonresonant: yes");
        } else {
            let w: Vec<&str> = nr.witnesses.iter().map(|e| e.hyperplanes.as_str()).collect();
            say!("nonresonant: no (witnesses {})", w.join(" "));
        }
    }
    Ok(())
}

fn set_list(entries: &[SetEntry]) -> String {
    if entries.is_empty() {
        return "(none)".into();
    }
    entries.iter().map(|e| format!("{}:{}", e.set, e.multiplicity)).collect::<Vec<_>>().join(" ")
}

fn principal(t_path: &Path, tp_path: &Path, json: bool) -> Outcome {
    let t = dep_star_of(&load_arrangement(t_path)?);
    let tp = load_type(tp_path)?;
    let p = principal_dependence(&t, &tp)?;
    let report = PrincipalAnalysis {
        difference: dep_difference(&t, &tp)?
            .into_iter()
            .map(|(s, m)| SetEntry {
                set: s.label(),
                multiplicity: m,
            })
            .collect(),
        candidates: candidates(&p),
        principal: PrincipalReport::from(&p),
    };
    if json {
        print_json("principal", report);
        return Ok(());
    }
    say!("Dep(T', T)*: {}", set_list(&report.difference));
    let cands: Vec<String> = report.candidates.iter().map(|c| format!("({},{})", c.set, c.r)).collect();
    say!("candidates: {}", cands.join(" "));
    say!("principal: ({}, {})", report.principal.set, report.principal.r);
    Ok(())
}

fn spectrum(t_path: &Path, tp_path: &Path, weights: Option<&Path>, seed: u64, bases: bool, json: bool) -> Outcome {
    let b = load_arrangement(t_path)?;
    let tp = load_type(tp_path)?;
    let p = principal_dependence(&dep_star_of(&b), &tp)?;
    let lambda = match weights {
        Some(path) => parse_weights(&read(path)?, b.n())?,
        None => sample_weights(&b, &[p.s], seed)?,
    };
    let rep = gm_spectrum(&b, &tp, &lambda)?;
    let lambda_s = format_rational(&rep.lambda_s);
    let report = SpectrumAnalysis {
        weights: rationals(lambda.values()),
        principal: PrincipalReport::from(&rep.principal),
        lambda_s: lambda_s.clone(),
        dimension: rep.dim,
        frames: labels(&rep.frames),
        multiplicity_zero: rep.mult_zero,
        multiplicity_lambda_s: rep.mult_lambda,
        diagonalizable: rep.diagonalizable,
        monodromy: vec![
            Monodromy {
                eigenvalue: "1".into(),
                multiplicity: rep.mult_zero,
            },
            Monodromy {
                eigenvalue: format!("exp(-2*pi*i*({lambda_s}))"),
                multiplicity: rep.mult_lambda,
            },
        ],
        bases: bases.then(|| Bases {
            omega: matrix_rows(&rep.omega),
            zero: rep.basis_zero.iter().map(|v| rationals(v)).collect(),
            lambda_s: rep.basis_lambda.iter().map(|v| rationals(v)).collect(),
        }),
    };
    if json {
        print_json("spectrum", &report);
    } else {
        print_spectrum(&report);
    }
    if report.diagonalizable {
        Ok(())
    } else {
        if !json {
            eprintln!("error[not_diagonalizable]: eigenspaces span {} of {} dimensions", rep.mult_zero + rep.mult_lambda, rep.dim);
        }
        Err(Failure::Reported(ExitCode::from(4)))
    }
}

fn print_spectrum(r: &SpectrumAnalysis) {
    say!("weights: {}", r.weights.join(" "));
    say!("principal: ({}, {})", r.principal.set, r.principal.r);
    say!("λ_S = {}", r.lambda_s);
    say!("dim H^ell = {} (frames {})", r.dimension, r.frames.join(" "));
    say!("mult(0) = {}, mult(λ_S) = {}", r.multiplicity_zero, r.multiplicity_lambda_s);
    say!("diagonalizable: {}", if r.diagonalizable { "yes" } else { "no" });
    let mono: Vec<String> = r.monodromy.iter().map(|m| format!("{} x{}", m.eigenvalue, m.multiplicity)).collect();
    say!("monodromy: {}", mono.join(", "));
    if let Some(b) = &r.bases {
        say!("Ω:");
        for row in &b.omega {
            say!("  [{}]", row.join(" "));
        }
        for (name, vs) in [("0", &b.zero), ("λ_S", &b.lambda_s)] {
            say!("{name}-eigenvectors:");
            for v in vs {
                say!("  [{}]", v.join(" "));
            }
        }
    }
}

fn selftest(scale: ScaleArg, json: bool) -> Outcome {
    let (scale, name) = match scale {
        ScaleArg::Small => (Scale::Small, "small"),
        ScaleArg::Full => (Scale::Full, "full"),
    };
    let outcomes = acceptance::run_all(scale);
    let passed = outcomes.iter().all(|o| o.passed);
    if json {
        print_json(
            "selftest",
            Selftest {
                scale: name,
                passed,
                criteria: outcomes
                    .iter()
                    .map(|o| CriterionEntry {
                        id: o.id,
                        name: o.name,
                        passed: o.passed,
                        detail: o.detail.clone(),
                        seconds: o.elapsed.as_secs_f64(),
                    })
                    .collect(),
            },
        );
    } else {
        for o in &outcomes {
            say!(
                "{} {} {:<40} {:>7.2} s  {}",
                if o.passed { "PASS" } else { "FAIL" },
                o.id,
                o.name,
                o.elapsed.as_secs_f64(),
                o.detail
            );
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Reported(ExitCode::FAILURE))
    }
}
