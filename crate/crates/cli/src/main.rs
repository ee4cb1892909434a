//! Command-line front-end for the tropindex library.
//!
//! Subcommands decide tropical/central index membership, certify indices
//! with verified witnesses, classify multiplier sequences, apply diagonal
//! operators, construct preservation counterexamples, and replay the
//! preservation claims on seeded random instances.
//!
//! Exit codes: 0 success; 1 negative verdict (logconcave on a sequence
//! that is not log-concave, verify with failures) or domain error; 2
//! unparseable input; 3 zero polynomial; 4 zero coefficient where all
//! coefficients must be nonzero; 5 oracle disagreement.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropindex::{
    central_witness, counterexample_central, counterexample_tropical, index_report,
    is_central_index, is_sign_independently_real_rooted, is_tropical_index, run_all,
    sirr_bruteforce_capped, tropical_witness, verify_central_witness, verify_tropical_witness,
    Claim, Error, IndexReport, Multipliers, Polynomial, Rational, RunConfig, VerifyReport,
    Witness,
};

#[derive(Parser)]
#[command(
    name = "tropindex",
    version,
    about = "Tropical and central indices of univariate polynomials, and the diagonal operators that preserve them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide tropical and central membership for every index of f
    Indices {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Decide whether every sign flip of f is real-rooted
    Sirr {
        #[command(flatten)]
        poly: PolyArgs,
        /// Cross-check the verdict against the brute-force sign sweep
        #[arg(long)]
        oracle: bool,
        /// Cap on the degree the brute-force sweep will accept
        #[arg(long, value_name = "N", default_value_t = 12)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Classify a positive sequence as log-concave or not
    Logconcave {
        #[command(flatten)]
        gamma: GammaArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Apply the diagonal operator T_gamma (z^n -> gamma_n z^n) to f
    Apply {
        #[command(flatten)]
        gamma: GammaArgs,
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Produce and verify a witness certifying index m of f
    Witness {
        /// The index to certify
        m: usize,
        #[command(flatten)]
        poly: PolyArgs,
        /// Which kind of index to certify
        #[arg(long, value_enum)]
        mode: Mode,
        /// Refuse z = 0 and search for a strictly positive witness instead
        #[arg(long)]
        require_positive_witness: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Construct a polynomial with an index the sequence fails to preserve
    Counterexample {
        #[command(flatten)]
        gamma: GammaArgs,
        /// Which kind of index the construction should break
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Replay the preservation claims on seeded random instances
    Verify {
        /// Seed for the trial RNG streams
        #[arg(long, env = "TROPINDEX_SEED", default_value_t = 42)]
        seed: u64,
        /// Baseline trial budget; per-claim counts scale with it
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Cap on generated polynomial degrees and sequence lengths
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Tropical,
    Central,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Tropical => "tropical",
            Mode::Central => "central",
        }
    }
}

/// Polynomial input: a JSON file or inline coefficients, constant term first.
#[derive(Args)]
struct PolyArgs {
    /// JSON file containing {"coeffs": ["1", "2/3", ...]}
    #[arg(long, value_name = "FILE", conflicts_with = "coeffs")]
    input: Option<PathBuf>,
    /// Comma-separated coefficients, e.g. 1,3,1 or 1,1/2,-2
    #[arg(long, value_name = "CSV")]
    coeffs: Option<String>,
}

impl PolyArgs {
    fn read(&self) -> Result<Polynomial, CliError> {
        match (&self.input, &self.coeffs) {
            (Some(path), None) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    CliError::parse(format!("cannot read {}: {e}", path.display()))
                })?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::parse(format!("invalid polynomial JSON: {e}")))
            }
            (None, Some(csv)) => {
                let parts: Vec<&str> = csv.split(',').map(str::trim).collect();
                Polynomial::from_strs(&parts).map_err(CliError::from)
            }
            _ => Err(CliError::parse("provide exactly one of --input or --coeffs")),
        }
    }
}

/// Sequence input: inline comma-separated positive entries.
#[derive(Args)]
struct GammaArgs {
    /// Comma-separated positive entries, e.g. 1,2,4 or 1,1/2,1/4
    #[arg(long, value_name = "CSV")]
    gamma: String,
}

impl GammaArgs {
    fn read(&self) -> Result<Multipliers, CliError> {
        let parts: Vec<&str> = self.gamma.split(',').map(str::trim).collect();
        // entry validation failures are input errors, not domain errors
        Multipliers::from_strs(&parts).map_err(|e| CliError::parse(e.to_string()))
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    fn parse(message: impl Into<String>) -> Self {
        CliError::new(2, message)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::InvalidNumber(_) | Error::InvalidSignPattern => 2,
            Error::ZeroPolynomial => 3,
            Error::ZeroCoefficient { .. } => 4,
            _ => 1,
        };
        CliError { code, message: err.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Indices { poly, format } => cmd_indices(&poly.read()?, format),
        Command::Sirr { poly, oracle, max_degree, format } => {
            cmd_sirr(&poly.read()?, oracle, max_degree, format)
        }
        Command::Logconcave { gamma, format } => cmd_logconcave(&gamma.read()?, format),
        Command::Apply { gamma, poly, format } => {
            cmd_apply(&gamma.read()?, &poly.read()?, format)
        }
        Command::Witness { m, poly, mode, require_positive_witness, format } => {
            cmd_witness(&poly.read()?, m, mode, require_positive_witness, format)
        }
        Command::Counterexample { gamma, mode, format } => {
            cmd_counterexample(&gamma.read()?, mode, format)
        }
        Command::Verify { seed, trials, max_degree, format } => {
            cmd_verify(RunConfig { seed, trials, max_degree }, format)
        }
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "\u{2713}"
    } else {
        "\u{2717}"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join_rationals(values: &[Rational]) -> String {
    values.iter().map(Rational::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_indices(f: &Polynomial, format: Format) -> Result<u8, CliError> {
    let report = index_report(f)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("report serializes")),
        Format::Csv => print!("{}", indices_csv(&report)),
        Format::Human => print_indices_table(&report),
    }
    Ok(0)
}

fn indices_csv(report: &IndexReport) -> String {
    let mut out = String::from("m,tropical,central,tropical_witness,central_witness\n");
    for entry in &report.indices {
        let wit = |w: &Option<Witness>| {
            w.as_ref().map(|w| format!("\"{w}\"")).unwrap_or_default()
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            entry.m,
            entry.tropical,
            entry.central,
            wit(&entry.tropical_witness),
            wit(&entry.central_witness),
        ));
    }
    out
}

fn print_indices_table(report: &IndexReport) {
    println!("degree: {}", report.degree);
    let rows: Vec<(String, &'static str, &'static str, String, String)> = report
        .indices
        .iter()
        .map(|e| {
            let wit =
                |w: &Option<Witness>| w.as_ref().map(|w| w.to_string()).unwrap_or_else(|| "-".into());
            (e.m.to_string(), mark(e.tropical), mark(e.central), wit(&e.tropical_witness), wit(&e.central_witness))
        })
        .collect();
    let w4 = rows
        .iter()
        .map(|r| r.3.chars().count())
        .chain(["tropical witness".len()])
        .max()
        .unwrap();
    println!("index  tropical  central  {:<w4$}  central witness", "tropical witness");
    for (m, t, c, tw, cw) in &rows {
        println!("{m:>5}  {t:<8}  {c:<7}  {tw:<w4$}  {cw}");
    }
    if report.zero_coefficient_warning {
        println!();
        println!(
            "warning: zero coefficients present; an index m with a_m = 0 qualifies \
             only when all lower coefficients vanish (witness z = 0)"
        );
    }
}

fn cmd_sirr(f: &Polynomial, oracle: bool, max_degree: usize, format: Format) -> Result<u8, CliError> {
    let sirr = is_sign_independently_real_rooted(f)?;
    let oracle_agrees = if oracle {
        let brute = sirr_bruteforce_capped(f, max_degree)?;
        if brute != sirr {
            return Err(CliError::new(
                5,
                format!("oracle disagreement: index decider says {sirr}, brute-force sweep says {brute}"),
            ));
        }
        Some(true)
    } else {
        None
    };
    match format {
        Format::Json => {
            println!("{}", serde_json::json!({ "sirr": sirr, "oracle_agrees": oracle_agrees }))
        }
        Format::Csv => {
            let cell = oracle_agrees.map(|b| b.to_string()).unwrap_or_default();
            print!("sirr,oracle_agrees\n{sirr},{cell}\n");
        }
        Format::Human => {
            println!("sign-independently real-rooted: {}", yes_no(sirr));
            if oracle_agrees.is_some() {
                println!("brute-force sweep over all sign flips agrees");
            }
        }
    }
    Ok(0)
}

fn cmd_logconcave(gamma: &Multipliers, format: Format) -> Result<u8, CliError> {
    let violating_index = gamma.first_violation();
    let log_concave = violating_index.is_none();
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({ "log_concave": log_concave, "violating_index": violating_index })
        ),
        Format::Csv => {
            let cell = violating_index.map(|m| m.to_string()).unwrap_or_default();
            print!("log_concave,violating_index\n{log_concave},{cell}\n");
        }
        Format::Human => println!("{}", gamma.classify()),
    }
    Ok(if log_concave { 0 } else { 1 })
}

fn cmd_apply(gamma: &Multipliers, f: &Polynomial, format: Format) -> Result<u8, CliError> {
    let image = gamma.apply(f)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&image).expect("polynomial serializes")),
        Format::Csv => {
            let mut out = String::from("n,coeff\n");
            for (n, c) in image.coeffs().iter().enumerate() {
                out.push_str(&format!("{n},{c}\n"));
            }
            print!("{out}");
        }
        Format::Human => {
            println!("f         = {f}");
            println!("T_gamma f = {image}");
        }
    }
    Ok(0)
}

fn cmd_witness(
    f: &Polynomial,
    m: usize,
    mode: Mode,
    require_positive: bool,
    format: Format,
) -> Result<u8, CliError> {
    let witness = match mode {
        Mode::Tropical => tropical_witness(f, m)?,
        Mode::Central => central_witness(f, m)?,
    };
    let witness = if require_positive && witness == Witness::PointAtZero {
        positive_witness(f, m, mode)?
    } else {
        witness
    };
    let verified = match mode {
        Mode::Tropical => verify_tropical_witness(f, m, &witness)?,
        Mode::Central => verify_central_witness(f, m, &witness)?,
    };
    if !verified {
        return Err(CliError::new(1, "internal error: witness failed verification"));
    }
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({ "m": m, "mode": mode.name(), "witness": witness, "verified": true })
        ),
        Format::Csv => {
            let (kind, z, lo, hi) = match &witness {
                Witness::PointAtZero => ("point", "0".to_string(), String::new(), String::new()),
                Witness::Point(z) => ("point", z.to_string(), String::new(), String::new()),
                Witness::Interval(iv) => {
                    ("interval", String::new(), iv.lo().to_string(), iv.hi().to_string())
                }
            };
            print!("m,mode,kind,z,lo,hi\n{m},{},{kind},{z},{lo},{hi}\n", mode.name());
        }
        Format::Human => {
            println!("index {m} is a {} index; witness {witness} (verified)", mode.name());
        }
    }
    Ok(0)
}

/// A strictly positive witness for an index whose canonical witness is
/// z = 0. Possible only at m = 0 with a nonzero constant term, where every
/// small enough z > 0 works; halving from 1 terminates there.
fn positive_witness(f: &Polynomial, m: usize, mode: Mode) -> Result<Witness, CliError> {
    if f.coeff(m).is_zero() {
        return Err(Error::PositiveWitnessUnavailable { index: m }.into());
    }
    let mut z = Rational::one();
    loop {
        let candidate = Witness::Point(z.clone());
        let ok = match mode {
            Mode::Tropical => verify_tropical_witness(f, m, &candidate)?,
            Mode::Central => verify_central_witness(f, m, &candidate)?,
        };
        if ok {
            return Ok(candidate);
        }
        z = z * Rational::new(1, 2);
    }
}

fn cmd_counterexample(gamma: &Multipliers, mode: Mode, format: Format) -> Result<u8, CliError> {
    let (f, m) = match mode {
        Mode::Tropical => counterexample_tropical(gamma)?,
        Mode::Central => counterexample_central(gamma)?,
    };
    let image = gamma.apply(&f)?;
    let (before, after) = match mode {
        Mode::Tropical => (is_tropical_index(&f, m)?, is_tropical_index(&image, m)?),
        Mode::Central => (is_central_index(&f, m)?, is_central_index(&image, m)?),
    };
    let separated = before && !after;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "mode": mode.name(),
                "gamma": gamma.entries(),
                "f": f,
                "image": image,
                "m": m,
                "index_in_source": before,
                "index_in_image": after,
                "separated": separated,
            })
        ),
        Format::Csv => print!(
            "mode,m,f,image,index_in_source,index_in_image\n{},{m},\"{}\",\"{}\",{before},{after}\n",
            mode.name(),
            join_rationals(f.coeffs()),
            join_rationals(image.coeffs()),
        ),
        Format::Human => {
            println!("gamma = {}: {}", join_rationals(gamma.entries()), gamma.classify());
            println!("candidate polynomial f = {f} with index m = {m}");
            println!("m is a {} index of f: {}", mode.name(), yes_no(before));
            println!("image T_gamma f = {image}");
            println!("m is a {} index of the image: {}", mode.name(), yes_no(after));
            if separated {
                println!("counterexample verified: the sequence does not preserve {} indices", mode.name());
            }
        }
    }
    if separated {
        Ok(0)
    } else {
        Err(CliError::new(1, "internal error: constructed counterexample does not separate"))
    }
}

fn cmd_verify(config: RunConfig, format: Format) -> Result<u8, CliError> {
    let report = run_all(&config);
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => print!("{}", report.to_csv()),
        Format::Human => print_verify_table(&report),
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}

fn print_verify_table(report: &VerifyReport) {
    println!(
        "seed {}, trials {}, max degree {}",
        report.seed, report.trials, report.max_degree
    );
    println!();
    println!("{:<24} ok  {:>6}  {:>8}  {:>10}  checks", "claim", "trials", "failures", "time");
    for (claim, outcome) in Claim::ALL.iter().zip(&report.claims) {
        println!(
            "{:<24} {}   {:>6}  {:>8}  {:>10}  {}",
            outcome.claim,
            mark(outcome.passed()),
            outcome.trials,
            outcome.failures,
            format!("{:.1?}", outcome.elapsed),
            claim.description(),
        );
    }
    println!();
    if report.all_pass() {
        println!("all claims passed");
    } else {
        println!("{} failure(s)", report.total_failures());
        if let Some(ce) = report.claims.iter().find_map(|c| c.counterexample.as_ref()) {
            println!(
                "first counterexample: {}",
                serde_json::to_string(ce).expect("counterexample serializes")
            );
        }
    }
}
