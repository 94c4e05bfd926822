//! Command-line front-end: graph I/O, transforms, domination numbers,
//! family generation, theorem certification, and complement-pair analysis.
//!
//! Exit codes: 0 success, 1 theorem violation, 2 usage or parse error,
//! 3 search budget exceeded, 4 hypothesis violation. All output is
//! deterministic; identical invocations produce byte-identical output.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use middledom::families::{generate, FamilySpec};
use middledom::graph::Graph;
use middledom::io;
use middledom::solvers::{
    gamma_middle_fast, gamma_middle_oracle, gamma_oracle, GammaResult, SolverError,
    DEFAULT_ORACLE_BUDGET,
};
use middledom::theorems::{certify, CertifyOptions, TheoremError};
use middledom::transforms::{corona_k1, corona_p2, join_empty, line_graph, middle_graph};

const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_HYPOTHESIS: u8 = 4;

const BUDGET_ENV: &str = "MIDDLEDOM_BUDGET";

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::new(EXIT_USAGE, message)
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        let code = match &e {
            SolverError::BudgetExceeded { .. } | SolverError::TooLarge { .. } => EXIT_BUDGET,
            SolverError::Hypothesis(_) => EXIT_HYPOTHESIS,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        let code = match &e {
            TheoremError::Solver {
                source: SolverError::BudgetExceeded { .. } | SolverError::TooLarge { .. },
                ..
            } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "middledom", version, about = "Domination numbers of middle graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GammaMethod {
    Auto,
    Oracle,
    Matching,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the domination number of M(G) (default) or of G itself.
    Gamma {
        /// Edge-list file, or a family descriptor such as `cycle:4` or
        /// `kbip:2,3`.
        input: String,
        /// Solver: `matching` and `auto` use the polynomial edge-cover
        /// route, `oracle` the exhaustive search.
        #[arg(long, value_enum, default_value = "auto")]
        method: GammaMethod,
        /// Compute gamma of the input graph itself instead of its middle
        /// graph.
        #[arg(long)]
        no_middle: bool,
        /// Oracle budget in candidate evaluations (overrides MIDDLEDOM_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Apply a graph transform and print the result.
    Transform {
        input: String,
        /// One of: middle, line, complement, corona, corona2, join-empty:<p>.
        #[arg(long)]
        op: String,
        #[arg(long, default_value = "edges")]
        format: TransformFormat,
    },
    /// Exhaustively certify every theorem predicate over all labeled graphs
    /// up to --nmax vertices. Exits 1 if any check is violated.
    Certify {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long)]
        connected_only: bool,
        /// Comma-separated predicate ids; default is all of them.
        #[arg(long, value_delimiter = ',')]
        predicates: Option<Vec<String>>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Test hook: inject an always-failing check.
        #[arg(long, hide = true)]
        inject_violation: bool,
    },
    /// Domination numbers of M(G) and M(complement(G)) with the sum and
    /// product bound analysis.
    Nordhaus {
        input: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransformFormat {
    Edges,
    Dot,
}

fn load_graph(input: &str) -> Result<Graph, Failure> {
    if input.contains(':') {
        let spec = FamilySpec::parse(input).map_err(|e| Failure::usage(e.to_string()))?;
        generate(&spec).map_err(|e| Failure::usage(e.to_string()))
    } else {
        let text = fs::read_to_string(input)
            .map_err(|e| Failure::usage(format!("cannot read {input}: {e}")))?;
        io::parse_edge_list(&text).map_err(|e| Failure::usage(format!("{input}: {e}")))
    }
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(value) => value
            .parse()
            .map_err(|_| Failure::usage(format!("{BUDGET_ENV} must be an integer, got {value:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_BUDGET),
    }
}

fn print_gamma(result: &GammaResult, label: impl Fn(usize) -> String, json: bool) {
    if json {
        println!("{}", result.to_json(label));
    } else {
        let witness: Vec<String> = result.witness.iter().map(|&v| label(v)).collect();
        println!("gamma={}", result.value);
        println!("method={}", result.method.as_str());
        println!("witness={}", witness.join(","));
    }
}

fn cmd_gamma(
    input: &str,
    method: GammaMethod,
    no_middle: bool,
    budget: Option<u64>,
    json: bool,
) -> Result<u8, Failure> {
    let g = load_graph(input)?;
    let budget = resolve_budget(budget)?;
    if no_middle {
        if method == GammaMethod::Matching {
            return Err(Failure::usage(
                "--method matching computes middle-graph domination; drop --no-middle",
            ));
        }
        let result = gamma_oracle(&g, budget)?;
        print_gamma(&result, |v| format!("v{v}"), json);
    } else {
        let mg = middle_graph(&g);
        let result = match method {
            GammaMethod::Auto | GammaMethod::Matching => gamma_middle_fast(&g),
            GammaMethod::Oracle => gamma_middle_oracle(&mg, budget)?,
        };
        print_gamma(&result, |v| mg.label(v), json);
    }
    Ok(0)
}

fn cmd_transform(input: &str, op: &str, format: TransformFormat) -> Result<u8, Failure> {
    let g = load_graph(input)?;
    let rendered = match op {
        "middle" => {
            let mg = middle_graph(&g);
            match format {
                TransformFormat::Edges => io::middle_to_edge_list(&mg),
                TransformFormat::Dot => io::middle_to_dot(&mg),
            }
        }
        _ => {
            let out = match op {
                "line" => line_graph(&g).0,
                "complement" => g.complement(),
                "corona" => corona_k1(&g),
                "corona2" => corona_p2(&g),
                _ => match op.strip_prefix("join-empty:") {
                    Some(p) => {
                        let p: usize = p.parse().map_err(|_| {
                            Failure::usage(format!("join-empty needs an integer, got {op:?}"))
                        })?;
                        join_empty(&g, p)
                    }
                    None => return Err(Failure::usage(format!("unknown transform op {op:?}"))),
                },
            };
            match format {
                TransformFormat::Edges => io::to_edge_list(&out),
                TransformFormat::Dot => io::to_dot(&out),
            }
        }
    };
    print!("{rendered}");
    Ok(0)
}

fn cmd_certify(
    nmax: usize,
    connected_only: bool,
    predicates: Option<Vec<String>>,
    workers: Option<usize>,
    json: bool,
    inject_violation: bool,
) -> Result<u8, Failure> {
    let opts = CertifyOptions {
        n_max: nmax,
        connected_only,
        predicates,
        workers,
        inject_failure: inject_violation,
        ..CertifyOptions::default()
    };
    let report = certify(&opts)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_table());
    }
    Ok(report.exit_code() as u8)
}

fn cmd_nordhaus(input: &str, json: bool) -> Result<u8, Failure> {
    let g = load_graph(input)?;
    let n = g.order();
    let complement = g.complement();
    let gamma = gamma_middle_fast(&g).value;
    let gamma_comp = gamma_middle_fast(&complement).value;
    let (sum, product) = (gamma + gamma_comp, gamma * gamma_comp);

    let mut hypothesis_failures = Vec::new();
    if !g.isolated_vertices().is_empty() {
        hypothesis_failures.push(format!(
            "G has isolated vertices {}",
            join_vertices(&g.isolated_vertices())
        ));
    }
    if !complement.isolated_vertices().is_empty() {
        hypothesis_failures.push(format!(
            "complement of G has isolated vertices {}",
            join_vertices(&complement.isolated_vertices())
        ));
    }
    let hypothesis_ok = hypothesis_failures.is_empty();

    let half = n.div_ceil(2);
    let bounds = if hypothesis_ok {
        Some((2 * half, 2 * (n - 2), half * half, (n - 2) * (n - 2)))
    } else {
        None
    };

    if json {
        let bounds_json = bounds.map(|(sl, su, pl, pu)| {
            serde_json::json!({
                "sum_lower": sl, "sum_upper": su,
                "product_lower": pl, "product_upper": pu,
                "tight": {
                    "sum_lower": sum == sl, "sum_upper": sum == su,
                    "product_lower": product == pl, "product_upper": product == pu,
                },
            })
        });
        println!(
            "{}",
            serde_json::json!({
                "schema_version": "1",
                "n": n,
                "gamma_middle": gamma,
                "gamma_middle_complement": gamma_comp,
                "sum": sum,
                "product": product,
                "hypothesis_ok": hypothesis_ok,
                "hypothesis_failures": hypothesis_failures,
                "bounds": bounds_json,
            })
        );
    } else {
        let mut out = String::new();
        writeln!(out, "n={n}").unwrap();
        writeln!(out, "gamma(M(G))={gamma}").unwrap();
        writeln!(out, "gamma(M(~G))={gamma_comp}").unwrap();
        match bounds {
            Some((sl, su, pl, pu)) => {
                writeln!(
                    out,
                    "sum={sum} bounds [{sl}, {su}] lower={} upper={}",
                    tightness(sum, sl),
                    tightness(sum, su)
                )
                .unwrap();
                writeln!(
                    out,
                    "product={product} bounds [{pl}, {pu}] lower={} upper={}",
                    tightness(product, pl),
                    tightness(product, pu)
                )
                .unwrap();
            }
            None => {
                writeln!(out, "sum={sum}").unwrap();
                writeln!(out, "product={product}").unwrap();
                for failure in &hypothesis_failures {
                    writeln!(out, "hypothesis violated: {failure}").unwrap();
                }
            }
        }
        print!("{out}");
    }
    Ok(if hypothesis_ok { 0 } else { EXIT_HYPOTHESIS })
}

fn tightness(value: usize, bound: usize) -> &'static str {
    if value == bound {
        "tight"
    } else {
        "slack"
    }
}

fn join_vertices(vs: &[usize]) -> String {
    let labels: Vec<String> = vs.iter().map(|v| format!("v{v}")).collect();
    labels.join(",")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gamma { input, method, no_middle, budget, json } => {
            cmd_gamma(&input, method, no_middle, budget, json)
        }
        Command::Transform { input, op, format } => cmd_transform(&input, &op, format),
        Command::Certify {
            nmax,
            connected_only,
            predicates,
            workers,
            json,
            inject_violation,
        } => cmd_certify(nmax, connected_only, predicates, workers, json, inject_violation),
        Command::Nordhaus { input, json } => cmd_nordhaus(&input, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
