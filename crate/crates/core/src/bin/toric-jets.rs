use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use toric_jets::harness::{self, SuiteReport, DEFAULT_SEED, SUITE_NAMES};
use toric_jets::invariants::scan::default_mode;
use toric_jets::invariants::{
    contact_codim, default_box_bound, md_lct_toric, mld_toric_with_box, s_m, scan_md_bound, z_m, InvariantResult,
    JetOrderVector, MdOutcome,
};
use toric_jets::jets::{export_cas, jet_system, reduce_jet_system_mod_p};
use toric_jets::lifting::lift_ideal_valuation_preserving;
use toric_jets::poly::Ring;
use toric_jets::polyhedra::{lct_computing_facets, lct_from_facets, lct_via_lp, NewtonPolyhedron, WeightVector};
use toric_jets::problem::ProblemFile;
use toric_jets::Error;

const EXIT_INPUT: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_SUITE_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "toric-jets", version, about = "Exact lct, mld and jet computations for monomial multiideals")]
struct Cli {
    /// Search bound: mld box side, or the jet-order bound for `zm`-style sweeps.
    #[arg(long, global = true)]
    bound: Option<u64>,
    /// Discrepancy cap for `md`.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Seed for randomized suites and sampled scans.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Log canonical threshold of the first factor (Newton facets, checked by LP).
    Lct { file: PathBuf },
    /// Minimal log discrepancy at the origin over toric divisors.
    Mld { file: PathBuf },
    /// s_m for a jet order vector such as `2` or `1,3`.
    Sm { file: PathBuf, m: String },
    /// z_m of the first factor.
    Zm { file: PathBuf, m: u64 },
    /// Minimal discrepancy among toric divisors computing the lct of the first factor.
    Md { file: PathBuf },
    /// Jet-scheme equations in text form; optionally reduced mod p.
    Jets {
        file: PathBuf,
        m: String,
        /// Reduce the equations modulo this prime.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Valuation-preserving lifts of the generators from GF(p) to ZZ.
    Lift {
        file: PathBuf,
        /// Weight vector, comma separated.
        #[arg(long)]
        w: String,
        /// Prime; required unless the file has a `char p` line.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Runs a cross-check suite: appendix, mld, lct, lifting, jets or all.
    Suite { name: String },
    /// Scans md(lct) over monomial ideals between m^mu and m.
    Scan {
        n: usize,
        mu: u32,
        cap: u64,
        /// Sample count when the exhaustive mode does not apply.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

enum Failure {
    Input(String),
    Inconclusive(String),
    Suite(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn load(path: &Path) -> std::result::Result<ProblemFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_list(s: &str, what: &str) -> std::result::Result<Vec<u64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Failure::Input(format!("bad {what} `{s}`"))))
        .collect()
}

fn line(format: Format, fields: &[String]) -> String {
    match format {
        Format::Text => fields.iter().filter(|f| !f.is_empty()).cloned().collect::<Vec<_>>().join(", "),
        Format::Tsv => fields.join("\t"),
    }
}

fn result_line(format: Format, r: &InvariantResult) -> String {
    line(format, &[r.value.to_string(), format!("witness {}", r.witness), r.certificate.to_string()])
}

fn cmd_lct(cli: &Cli, file: &Path) -> Outcome {
    let pair = load(file)?.multi_ideal()?;
    let a = &pair.factors()[0].0;
    let p = NewtonPolyhedron::new(a.clone());
    let lct = lct_from_facets(&p);
    let facet = lct_computing_facets(&p).into_iter().next().expect("some facet computes the lct");
    let certified = lct == lct_via_lp(a);
    let status = if certified { "certified" } else { "routes-disagree" };
    let out = line(cli.format, &[lct.to_string(), format!("witness w={}", facet.normal), status.into()]);
    if certified {
        Ok(out)
    } else {
        Err(Failure::Inconclusive(out))
    }
}

fn cmd_mld(cli: &Cli, file: &Path) -> Outcome {
    let pair = load(file)?.multi_ideal()?;
    let r = mld_toric_with_box(&pair, cli.bound.unwrap_or_else(|| default_box_bound(&pair)));
    let out = result_line(cli.format, &r);
    if r.is_certified() {
        Ok(out)
    } else {
        Err(Failure::Inconclusive(out))
    }
}

fn cmd_sm(cli: &Cli, file: &Path, m: &str) -> Outcome {
    let pair = load(file)?.multi_ideal()?;
    let m = JetOrderVector::for_pair(&pair, parse_list(m, "jet order")?)?;
    let value = s_m(&pair, &m)?;
    let witness = contact_codim(&pair, &m, true)?.witness.expect("fiber condition always applies");
    Ok(match cli.format {
        Format::Text => value.to_string(),
        Format::Tsv => line(cli.format, &[value.to_string(), format!("w={witness}")]),
    })
}

fn cmd_zm(cli: &Cli, file: &Path, m: u64) -> Outcome {
    let pair = load(file)?.multi_ideal()?;
    let value = z_m(&pair.factors()[0].0, m);
    Ok(line(cli.format, &[value.to_string()]))
}

fn cmd_md(cli: &Cli, file: &Path) -> Outcome {
    let pair = load(file)?.multi_ideal()?;
    let cap = cli.cap.unwrap_or(20);
    match md_lct_toric(&pair.factors()[0].0, cap)? {
        MdOutcome::Found { k_min, witnesses } => {
            let ws: Vec<String> = witnesses.iter().map(|w| format!("w={w}")).collect();
            Ok(line(cli.format, &[k_min.to_string(), format!("witnesses {}", ws.join(" "))]))
        }
        MdOutcome::NotFound { cap } => Err(Failure::Inconclusive(line(
            cli.format,
            &["not-found".into(), format!("cap {cap}")],
        ))),
    }
}

fn cmd_jets(file: &Path, m: &str, p: Option<u64>) -> Outcome {
    let problem = load(file)?;
    let polys = problem.polynomials()?;
    let m = parse_list(m, "jet order")?;
    let system = jet_system(&polys, &m)?;
    let system = match p {
        Some(p) => reduce_jet_system_mod_p(&system, p)?,
        None => system,
    };
    let mut out = export_cas(&system);
    if system.only_fiber {
        eprintln!("warning: all jet orders are zero; only the fiber equations are present");
    }
    out.pop();
    Ok(out)
}

fn cmd_lift(cli: &Cli, file: &Path, w: &str, p: Option<u64>) -> Outcome {
    let problem = load(file)?;
    let ring = match (problem.characteristic, p) {
        (Some(c), Some(p)) if c != p => {
            return Err(Failure::Input(format!("file has char {c} but --p {p} was given")));
        }
        (Some(c), _) | (None, Some(c)) => Ring::prime_field(c)?,
        (None, None) => return Err(Failure::Input("lift needs `char p` in the file or --p".into())),
    };
    let w = WeightVector::new(parse_list(w, "weight")?)?;
    let gens: Vec<_> = ProblemFile {
        characteristic: Some(ring.characteristic()),
        ..problem
    }
    .polynomials()?
    .into_iter()
    .flatten()
    .collect();
    let records = lift_ideal_valuation_preserving(&gens, &w)?;
    let lines: Vec<String> = records
        .iter()
        .map(|r| {
            line(
                cli.format,
                &[
                    r.original.to_string(),
                    format!("lift {}", r.lifted),
                    format!("val {}", r.truncation_degree.expect("weighted lift")),
                ],
            )
        })
        .collect();
    Ok(lines.join("\n"))
}

fn render_suite(format: Format, r: &SuiteReport) -> String {
    match format {
        Format::Text => r.summary(),
        Format::Tsv => r.to_tsv(),
    }
}

fn cmd_suite(cli: &Cli, name: &str) -> Outcome {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let names: Vec<&str> = if name == "all" { SUITE_NAMES.to_vec() } else { vec![name] };
    let mut out = String::new();
    let mut passed = true;
    for n in names {
        let report = harness::run_suite(n, seed)?;
        passed &= report.passed();
        out.push_str(&render_suite(cli.format, &report));
    }
    out.pop();
    if passed {
        Ok(out)
    } else {
        Err(Failure::Suite(out))
    }
}

fn cmd_scan(cli: &Cli, n: usize, mu: u32, cap: u64, samples: usize) -> Outcome {
    let mode = default_mode(n, mu, samples, cli.seed.unwrap_or(DEFAULT_SEED));
    let report = scan_md_bound(n, mu, cap, mode)?;
    let out = match cli.format {
        Format::Text => {
            let mut s = report.render();
            s.pop();
            s
        }
        Format::Tsv => line(
            cli.format,
            &[
                n.to_string(),
                mu.to_string(),
                cap.to_string(),
                report.ideals_examined.to_string(),
                report.max_md.map_or("none".into(), |m| m.to_string()),
                report.unresolved.len().to_string(),
            ],
        ),
    };
    if report.unresolved.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Inconclusive(out))
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Lct { file } => cmd_lct(cli, file),
        Command::Mld { file } => cmd_mld(cli, file),
        Command::Sm { file, m } => cmd_sm(cli, file, m),
        Command::Zm { file, m } => cmd_zm(cli, file, *m),
        Command::Md { file } => cmd_md(cli, file),
        Command::Jets { file, m, p } => cmd_jets(file, m, *p),
        Command::Lift { file, w, p } => cmd_lift(cli, file, w, *p),
        Command::Suite { name } => cmd_suite(cli, name),
        Command::Scan { n, mu, cap, samples } => cmd_scan(cli, *n, *mu, *cap, *samples),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Inconclusive(out)) => {
            println!("{out}");
            eprintln!("inconclusive");
            ExitCode::from(EXIT_INCONCLUSIVE)
        }
        Err(Failure::Suite(out)) => {
            println!("{out}");
            eprintln!("suite failed");
            ExitCode::from(EXIT_SUITE_FAILED)
        }
    }
}
