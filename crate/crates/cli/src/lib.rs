//! Command-line front end for `parkseq`.
//!
//! Exit codes: 0 success or true, 1 predicate false (including a car that
//! fails to park), 2 usage error, 3 verification mismatch, 4 budget exceeded.

pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parkseq::classify::{
    is_increasing_ps, is_k_strong, is_parking_sequence, is_permutation_invariant, is_strong_ps,
    is_u_parking_function, perm_invariant_characterized, BoundaryVector,
};
use parkseq::count::*;
use parkseq::{
    simulate, Enumerator, FailureReason, FamilyListing, ParkOutcome, ParkingError, ParkingInstance,
    DEFAULT_BUDGET,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "parkseq",
    version,
    about = "Parking sequences with car lengths and a trailer"
)]
pub struct Cli {
    /// Print a JSON document on stdout (and JSON errors on stderr).
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of candidate sequences an enumeration may examine.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct Params {
    /// Car lengths, comma separated.
    #[arg(long, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<u32>>,
    /// Trailer parameter z; spots 1..z-1 are taken.
    #[arg(long, visible_alias = "z", default_value_t = 1)]
    pub trailer: u32,
    /// Preference sequence, comma separated.
    #[arg(long, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefs: Option<Vec<u32>>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    /// Number of short cars in a two-block length vector.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    /// Boundary vector u for vector parking functions, comma separated.
    #[arg(long, value_delimiter = ',')]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Ps,
    Ips,
    Inv,
    Strong,
    Kstrong,
    Upf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formula {
    Ps,
    IpsDet,
    IpsConst,
    Fuss,
    Catalan,
    InvInc,
    InvConst,
    InvTwoBlock,
    Sps,
    SpsK,
    Upf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the parking process once.
    Simulate {
        #[command(flatten)]
        params: Params,
        /// Also draw the street.
        #[arg(long)]
        render: bool,
    },
    /// Test membership of a preference sequence in a family.
    Check {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
    },
    /// List a family exhaustively in lexicographic order.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        params: Params,
        /// Print only the cardinality.
        #[arg(long)]
        count_only: bool,
        /// Also write the listing to FILE (JSON if it ends in .json, CSV otherwise).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Evaluate a closed-form count.
    Count {
        #[arg(long, value_enum)]
        formula: Formula,
        #[command(flatten)]
        params: Params,
    },
    /// Compare closed forms and characterizations against brute force.
    Verify {
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
        /// Largest number of cars in the exhaustive grids (suite-specific default).
        #[arg(long)]
        max_n: Option<usize>,
        /// Seed for the sampled determinant checks.
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Draw the street after running the parking process.
    Render {
        #[command(flatten)]
        params: Params,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Simulate { .. } => "simulate",
            Command::Check { .. } => "check",
            Command::Enumerate { .. } => "enumerate",
            Command::Count { .. } => "count",
            Command::Verify { .. } => "verify",
            Command::Render { .. } => "render",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parking(ParkingError),
    Io(std::io::Error),
}

impl From<ParkingError> for CliError {
    fn from(e: ParkingError) -> Self {
        CliError::Parking(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parking(ParkingError::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parking(ParkingError::BudgetExceeded { .. }) => "budget",
            CliError::Parking(_) => "invalid-input",
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Parking(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
        }
    }
}

/// The JSON document printed with `--json`.
#[derive(Debug, Serialize)]
pub struct Response {
    pub command: String,
    pub params: Value,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<verify::ReportRecord>>,
}

struct Output {
    response: Response,
    text: String,
    code: i32,
}

fn missing(flag: &str, what: &str) -> CliError {
    CliError::Usage(format!("{what} requires --{flag}"))
}

impl Params {
    fn instance(&self, what: &str) -> Result<ParkingInstance, CliError> {
        let y = self
            .lengths
            .clone()
            .ok_or_else(|| missing("lengths", what))?;
        Ok(ParkingInstance::new(y, self.trailer)?)
    }

    fn prefs(&self, what: &str) -> Result<&[u32], CliError> {
        self.prefs.as_deref().ok_or_else(|| missing("prefs", what))
    }

    fn n(&self, what: &str) -> Result<u32, CliError> {
        self.n.ok_or_else(|| missing("n", what))
    }

    fn k(&self, what: &str) -> Result<u32, CliError> {
        self.k.ok_or_else(|| missing("k", what))
    }

    fn r(&self, what: &str) -> Result<u32, CliError> {
        self.r.ok_or_else(|| missing("r", what))
    }

    fn boundary(&self, what: &str) -> Result<BoundaryVector, CliError> {
        let u = self
            .boundary
            .clone()
            .ok_or_else(|| missing("boundary", what))?;
        Ok(BoundaryVector::new(u)?)
    }

    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("params serialize")
    }
}

fn configuration_line(instance: &ParkingInstance, configuration: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if instance.trailer() > 1 {
        parts.push("T".into());
    }
    parts.extend(configuration.iter().map(|c| format!("C{c}")));
    parts.join(" ")
}

fn describe(instance: &ParkingInstance, outcome: &ParkOutcome) -> String {
    let mut text = String::new();
    match outcome {
        ParkOutcome::Success {
            placements,
            configuration,
        } => {
            for (i, p) in placements.iter().enumerate() {
                let _ = writeln!(text, "C{} [{},{}]", i + 1, p.start, p.end);
            }
            let _ = writeln!(
                text,
                "configuration: {}",
                configuration_line(instance, configuration)
            );
        }
        ParkOutcome::Failure {
            failed_car,
            reason,
            parked,
        } => {
            for (i, p) in parked.iter().enumerate() {
                let _ = writeln!(text, "C{} [{},{}]", i + 1, p.start, p.end);
            }
            let why = match reason {
                FailureReason::OffStreet { preference } => {
                    format!("no empty spot at or after {preference}")
                }
                FailureReason::Collision { start, blocked_at } => {
                    format!("collision at spot {blocked_at} (started at {start})")
                }
            };
            let _ = writeln!(text, "C{failed_car} fails: {why}");
        }
    }
    text
}

fn simulate_cmd(params: &Params, draw: bool) -> Result<Output, CliError> {
    let instance = params.instance("simulate")?;
    let outcome = simulate(&instance, params.prefs("simulate")?)?;
    let mut text = String::new();
    if draw {
        text.push_str(&render::render(&instance, &outcome));
    }
    text.push_str(&describe(&instance, &outcome));
    let mut result = serde_json::to_value(&outcome).expect("outcome serializes");
    if draw {
        result["diagram"] = json!(render::render(&instance, &outcome));
    }
    let code = if outcome.is_success() {
        EXIT_OK
    } else {
        EXIT_FALSE
    };
    Ok(Output {
        response: Response {
            command: "simulate".into(),
            params: params.to_json(),
            result,
            records: None,
        },
        text,
        code,
    })
}

fn render_cmd(params: &Params) -> Result<Output, CliError> {
    let instance = params.instance("render")?;
    let outcome = simulate(&instance, params.prefs("render")?)?;
    let diagram = render::render(&instance, &outcome);
    Ok(Output {
        response: Response {
            command: "render".into(),
            params: params.to_json(),
            result: json!({ "diagram": diagram, "success": outcome.is_success() }),
            records: None,
        },
        text: diagram,
        code: EXIT_OK,
    })
}

fn check_cmd(family: Family, params: &Params) -> Result<Output, CliError> {
    let what = "check";
    let c = params.prefs(what)?;
    let mut result = json!({});
    let verdict = match family {
        Family::Ps => is_parking_sequence(&params.instance(what)?, c)?,
        Family::Ips => is_increasing_ps(&params.instance(what)?, c)?,
        Family::Inv => {
            let instance = params.instance(what)?;
            result["characterized"] = json!(perm_invariant_characterized(&instance, c)?);
            is_permutation_invariant(&instance, c)?
        }
        Family::Strong => is_strong_ps(&params.instance(what)?, c)?,
        Family::Kstrong => {
            is_k_strong(params.n(what)?, params.k(what)? as usize, params.trailer, c)?
        }
        Family::Upf => is_u_parking_function(&params.boundary(what)?, c)?,
    };
    result["member"] = json!(verdict);
    let mut p = params.to_json();
    p["family"] = json!(family);
    Ok(Output {
        response: Response {
            command: "check".into(),
            params: p,
            result,
            records: None,
        },
        text: format!("{verdict}\n"),
        code: if verdict { EXIT_OK } else { EXIT_FALSE },
    })
}

fn listing(e: &Enumerator, family: Family, params: &Params) -> Result<FamilyListing, CliError> {
    let what = "enumerate";
    Ok(match family {
        Family::Ps => e.ps(&params.instance(what)?)?,
        Family::Ips => e.ips(&params.instance(what)?)?,
        Family::Inv => e.ps_inv(&params.instance(what)?)?,
        Family::Strong => e.sps(&params.instance(what)?)?,
        Family::Kstrong => e.sps_k(params.n(what)?, params.k(what)? as usize, params.trailer)?,
        Family::Upf => e.u_pf(&params.boundary(what)?)?,
    })
}

fn join(c: &[u32]) -> String {
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn write_listing(path: &PathBuf, list: &FamilyListing) -> Result<(), CliError> {
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let body = if is_json {
        let mut s = serde_json::to_string_pretty(list).expect("listing serializes");
        s.push('\n');
        s
    } else {
        let width = list.members.first().map_or(0, Vec::len);
        let header: Vec<String> = (1..=width).map(|i| format!("c{i}")).collect();
        let mut s = header.join(",");
        s.push('\n');
        for m in &list.members {
            s.push_str(&join(m));
            s.push('\n');
        }
        s
    };
    std::fs::write(path, body)?;
    Ok(())
}

fn enumerate_cmd(
    e: &Enumerator,
    family: Family,
    params: &Params,
    count_only: bool,
    out: Option<&PathBuf>,
) -> Result<Output, CliError> {
    let list = listing(e, family, params)?;
    if let Some(path) = out {
        write_listing(path, &list)?;
    }
    let mut text = String::new();
    if count_only {
        let _ = writeln!(text, "{}", list.cardinality);
    } else {
        for m in &list.members {
            let _ = writeln!(text, "{}", join(m));
        }
        let _ = writeln!(text, "count: {}", list.cardinality);
    }
    let mut result = json!({ "cardinality": list.cardinality.to_string() });
    if !count_only {
        result["members"] = json!(list.members);
    }
    let mut p = params.to_json();
    p["family"] = json!(family);
    p["count_only"] = json!(count_only);
    Ok(Output {
        response: Response {
            command: "enumerate".into(),
            params: p,
            result,
            records: None,
        },
        text,
        code: EXIT_OK,
    })
}

fn count_cmd(formula: Formula, params: &Params) -> Result<Output, CliError> {
    let what = "count";
    let z = params.trailer as u64;
    let value: BigCount = match formula {
        Formula::Ps => count_ps_product(&params.instance(what)?),
        Formula::IpsDet => count_ips_determinant(&params.instance(what)?),
        Formula::IpsConst => count_ips_constant(params.k(what)? as u64, params.n(what)? as u64, z)?,
        Formula::Fuss => fuss_catalan(params.k(what)? as u64, params.n(what)? as u64)?,
        Formula::Catalan => catalan(params.n(what)? as u64),
        Formula::InvInc => count_inv_strictly_increasing(params.n(what)? as u64, z),
        Formula::InvConst => count_inv_constant(params.n(what)? as u64, z),
        Formula::InvTwoBlock => {
            count_inv_two_block(params.n(what)? as u64, params.r(what)? as u64, z)?
        }
        Formula::Sps => count_sps(&params.instance(what)?),
        Formula::SpsK => count_sps_k(params.n(what)? as u64, params.k(what)? as u64, z)?,
        Formula::Upf => count_u_pf_arithmetic(z, params.n(what)? as u64),
    };
    let mut p = params.to_json();
    p["formula"] = json!(formula);
    Ok(Output {
        response: Response {
            command: "count".into(),
            params: p,
            result: json!({ "value": value.to_string() }),
            records: None,
        },
        text: format!("{value}\n"),
        code: EXIT_OK,
    })
}

fn verify_cmd(
    e: Enumerator,
    suite: &str,
    max_n: Option<usize>,
    seed: u64,
) -> Result<Output, CliError> {
    let opts = verify::Options {
        max_n,
        seed,
        enumerator: e,
    };
    let records = verify::run_suite(suite, &opts)?;
    let failed = records.iter().filter(|r| !r.pass).count();
    let mut text = String::new();
    for r in &records {
        let _ = writeln!(
            text,
            "{} {:<22} {:<26} {} expected={} ({}) computed={}",
            if r.pass { "PASS" } else { "FAIL" },
            r.suite,
            r.name,
            r.params,
            r.expected,
            r.provenance,
            r.computed
        );
    }
    let _ = writeln!(text, "{} records, {} failed", records.len(), failed);
    Ok(Output {
        response: Response {
            command: "verify".into(),
            params: json!({ "suite": suite, "max_n": max_n, "seed": seed }),
            result: json!({ "records": records.len(), "failed": failed, "pass": failed == 0 }),
            records: Some(records),
        },
        text,
        code: if failed == 0 { EXIT_OK } else { EXIT_MISMATCH },
    })
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let e = Enumerator::with_budget(cli.budget.unwrap_or(DEFAULT_BUDGET));
    match &cli.command {
        Command::Simulate { params, render } => simulate_cmd(params, *render),
        Command::Check { family, params } => check_cmd(*family, params),
        Command::Enumerate {
            family,
            params,
            count_only,
            out,
        } => enumerate_cmd(&e, *family, params, *count_only, out.as_ref()),
        Command::Count { formula, params } => count_cmd(*formula, params),
        Command::Verify { suite, max_n, seed } => verify_cmd(e, suite, *max_n, *seed),
        Command::Render { params } => render_cmd(params),
    }
}

fn report_error(command: Option<&str>, err: &CliError, json: bool) {
    if json {
        let doc = json!({
            "command": command,
            "error": { "kind": err.kind(), "message": err.message() },
            "exit_code": err.exit_code(),
        });
        eprintln!("{doc}");
    } else {
        eprintln!("error: {}", err.message());
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let json = args.iter().any(|a| a == "--json");
            if json {
                let message = e.render().to_string();
                report_error(None, &CliError::Usage(message.trim_end().to_string()), true);
            } else {
                eprint!("{}", e.render());
            }
            return EXIT_USAGE;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.response).expect("response serializes")
                );
            } else {
                print!("{}", out.text);
            }
            out.code
        }
        Err(err) => {
            report_error(Some(cli.command.name()), &err, cli.json);
            err.exit_code()
        }
    }
}
