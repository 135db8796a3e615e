//! Command-line front end.
//!
//! Standard output carries data only (JSON or CSV); diagnostics go to the
//! error stream. Exit codes: 0 success, 1 verification mismatch, 2 usage or
//! parameter error, 3 domain error (disconnected graph, overflow).

use std::fs;
use std::hint::black_box;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::distance;
use crate::error::Error;
use crate::graph::{self, FamilyKind, Graph};
use crate::hosoya::DistancePolynomial;
use crate::indices::{self, IndexReport};
use crate::oracle;
use crate::relations::{Relation, RelationInputs, RelationReport};
use crate::sun_forms;

pub const DEFAULT_MAX_VERTICES: usize = 100_000;
pub const DEFAULT_ORACLE_CAP: usize = 200;

#[derive(Debug, Parser)]
#[command(
    name = "topoindex",
    version,
    about = "Wiener, polarity, Zagreb and Hosoya indices of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph as an edge list
    Gen(GenArgs),
    /// Compute every index of an edge-list graph
    Compute(ComputeArgs),
    /// Check sun-graph closed forms against the traversal engine and the oracle
    Verify(VerifyArgs),
    /// Evaluate the index relations on an edge-list graph
    Relations(InputArgs),
    /// Time the traversal engine against the closed form
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Sun,
    Path,
    Cycle,
    Complete,
    /// Random connected graph (requires --n, honours --seed and --density)
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Sun parameter
    #[arg(long)]
    pub k: Option<usize>,
    /// Vertex count for path, cycle, complete and random graphs
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Extra-edge probability for random graphs
    #[arg(long, default_value_t = 0.1)]
    pub density: f64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output file; standard output when absent
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file, or `-` for standard input
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub k_min: usize,
    #[arg(long)]
    pub k_max: usize,
    /// Largest vertex count checked with Floyd–Warshall
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 3)]
    pub repeat: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// A failed command: exit code plus a message for the error stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub const MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const DOMAIN: u8 = 3;

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: Self::USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError {
            code: if e.is_domain() {
                Self::DOMAIN
            } else {
                Self::USAGE
            },
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::usage(format!("i/o error: {e}"))
    }
}

type CliResult<T = ()> = Result<T, CliError>;

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Compute(args) => cmd_compute(&args, out),
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Relations(args) => cmd_relations(&args, out),
        Command::Bench(args) => cmd_bench(&args, out, err),
    }
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let value: Value = serde_json::to_value(value).expect("serializable document");
    let mut s = serde_json::to_string(&value).expect("serializable value");
    s.push('\n');
    s
}

/// The requested graph, with its family kind unless it is random.
fn family_graph(args: &FamilyArgs) -> CliResult<(Option<FamilyKind>, Graph)> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| {
            CliError::usage(format!("--family {:?} requires --{flag}", args.family).to_lowercase())
        })
    };
    let kind = match args.family {
        Family::Sun => FamilyKind::Sun(need(args.k, "k")?),
        Family::Path => FamilyKind::Path(need(args.n, "n")?),
        Family::Cycle => FamilyKind::Cycle(need(args.n, "n")?),
        Family::Complete => FamilyKind::Complete(need(args.n, "n")?),
        Family::Random => {
            let n = need(args.n, "n")?;
            if n < 1 {
                return Err(CliError::usage("n must be >= 1"));
            }
            if !(0.0..=1.0).contains(&args.density) {
                return Err(CliError::usage("density must lie in [0, 1]"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            return Ok((None, graph::random_connected(n, args.density, &mut rng)));
        }
    };
    Ok((Some(kind), graph::generate(kind)?))
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CliResult {
    let (_, g) = family_graph(&args.family)?;
    let text = graph::to_edge_list(&g);
    match &args.output {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_input(path: &Path) -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf)?;
    } else {
        buf = fs::read(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(buf)
}

fn load_graph(args: &InputArgs) -> CliResult<(Graph, Vec<u8>)> {
    let bytes = read_input(&args.input)?;
    let g = graph::parse_edge_list(bytes.as_slice(), Some(args.max_vertices))?;
    Ok((g, bytes))
}

/// Everything `compute` reports about one graph.
#[derive(Debug, Clone, Serialize)]
pub struct OutputDocument {
    #[serde(flatten)]
    pub indices: IndexReport,
    pub hosoya: DistancePolynomial,
    pub relations: Vec<RelationReport>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_sha256: String,
}

impl OutputDocument {
    pub fn build(g: &Graph, input: &[u8]) -> Result<Self, Error> {
        let report = indices::full_report(g)?;
        let inputs = RelationInputs {
            n: report.n,
            m: report.m,
            diameter: report.diameter,
            wiener: indices::wiener_pairwise(g)?,
            w_d: report.w_d.clone(),
            m1: report.m1,
        };
        let relations = Relation::ALL
            .iter()
            .map(|&r| inputs.evaluate(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OutputDocument {
            hosoya: DistancePolynomial::from_coeffs(report.w_d.clone()),
            indices: report,
            relations,
            provenance: Provenance {
                tool: env!("CARGO_PKG_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                input_sha256: hex::encode(Sha256::digest(input)),
            },
        })
    }

    pub fn to_csv(&self) -> String {
        let join = |xs: &[u64]| xs.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
        let r = &self.indices;
        format!(
            "n,m,diameter,wiener,wiener_polarity,m1,m2,w_d,hosoya\n{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.m,
            r.diameter,
            r.wiener,
            r.wiener_polarity,
            r.m1,
            r.m2,
            join(&r.w_d),
            join(self.hosoya.coeffs()),
        )
    }
}

pub fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> CliResult {
    let (g, bytes) = load_graph(&args.input)?;
    let doc = OutputDocument::build(&g, &bytes)?;
    let text = match args.format {
        Format::Json => to_json_line(&doc),
        Format::Csv => doc.to_csv(),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

pub fn cmd_relations(args: &InputArgs, out: &mut dyn Write) -> CliResult {
    let (g, _) = load_graph(args)?;
    let reports = crate::relations::check_all(&g)?;
    out.write_all(to_json_line(&reports).as_bytes())?;
    Ok(())
}

/// Engine, closed-form and (when small enough) oracle values for one sun.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub k: usize,
    pub wiener: u64,
    pub wiener_polarity: u64,
    pub hosoya: DistancePolynomial,
    pub oracle_checked: bool,
    pub mismatches: Vec<String>,
}

pub fn verify_sun(k: usize, oracle_cap: usize) -> Result<VerifyRow, Error> {
    let spec = graph::SunSpec::new(k)?;
    let g = graph::sun(spec);
    let mut mismatches = Vec::new();
    let mut expect = |what: &str, got: u64, want: u64| {
        if got != want {
            mismatches.push(format!("{what}: got {got}, expected {want}"));
        }
    };

    let kk = k as u64;
    let w_closed = sun_forms::wiener_sun(kk)?;
    let wp_closed = sun_forms::wiener_polarity_sun(kk)?;
    let h_closed = sun_forms::hosoya_sun(kk)?;
    let split = sun_forms::transmission_split_sun(kk)?;

    let w_pair = indices::wiener_pairwise(&g)?;
    let w_trans = indices::wiener_transmission(&g)?;
    let h_engine: DistancePolynomial = distance::distance_distribution(&g)?.into();
    let trans = distance::transmissions(&g)?;
    expect("wiener_pairwise", w_pair, w_closed);
    expect("wiener_transmission", w_trans, w_closed);
    expect(
        "wiener_polarity",
        h_engine.coeffs().get(2).copied().unwrap_or(0),
        wp_closed,
    );
    expect("hosoya_derivative", h_engine.derivative_at_one()?, w_closed);
    expect(
        "clique_transmission",
        trans[..k].iter().sum(),
        split.c_total,
    );
    expect(
        "independent_transmission",
        trans[k..].iter().sum(),
        split.u_total,
    );
    let hosoya_mismatch =
        (h_engine != h_closed).then(|| format!("hosoya: got [{h_engine}], expected [{h_closed}]"));

    let oracle_checked = g.vertex_count() <= oracle_cap;
    if oracle_checked {
        let dm = oracle::floyd_warshall(&g);
        expect("oracle_wiener", oracle::wiener_naive(&dm)?, w_closed);
        expect("oracle_polarity", oracle::polarity_naive(&dm)?, wp_closed);
        for (d, &c) in (1u32..).zip(h_closed.coeffs()) {
            expect("oracle_w_d", oracle::wd_naive(&dm, d)?, c);
        }
    }

    mismatches.extend(hosoya_mismatch);
    Ok(VerifyRow {
        k,
        wiener: w_pair,
        wiener_polarity: h_engine.coeffs().get(2).copied().unwrap_or(0),
        hosoya: h_engine,
        oracle_checked,
        mismatches,
    })
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    if args.k_min < 3 {
        return Err(CliError::usage("k must be >= 3"));
    }
    if args.k_min > args.k_max {
        return Err(CliError::usage(format!(
            "empty range: --k-min {} exceeds --k-max {}",
            args.k_min, args.k_max
        )));
    }
    let rows = (args.k_min..=args.k_max)
        .map(|k| verify_sun(k, args.oracle_cap))
        .collect::<Result<Vec<_>, _>>()?;
    let bad = rows.iter().filter(|r| !r.mismatches.is_empty()).count();
    let summary = format!("{} sizes, {} mismatches", rows.len(), bad);

    let text = match args.format {
        Format::Json => to_json_line(&json!({
            "k_min": args.k_min,
            "k_max": args.k_max,
            "sizes": rows.len(),
            "mismatches": bad,
            "summary": summary,
            "rows": rows,
        })),
        Format::Csv => {
            let mut s = String::from("k,W,W_p,d1,d2,d3\n");
            for r in &rows {
                let d = |l: usize| r.hosoya.coeffs().get(l).copied().unwrap_or(0);
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.k,
                    r.wiener,
                    r.wiener_polarity,
                    d(0),
                    d(1),
                    d(2)
                ));
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    for r in rows.iter().filter(|r| !r.mismatches.is_empty()) {
        writeln!(err, "k={}: {}", r.k, r.mismatches.join("; "))?;
    }
    writeln!(err, "{summary}")?;
    if bad > 0 {
        return Err(CliError {
            code: CliError::MISMATCH,
            message: summary,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchResult {
    pub method: &'static str,
    pub wiener: u64,
    pub best_ns: u128,
    pub mean_ns: u128,
}

fn time_method<F: FnMut() -> Result<u64, Error>>(
    method: &'static str,
    repeat: usize,
    mut f: F,
) -> Result<BenchResult, Error> {
    let mut best = Duration::MAX;
    let mut total = Duration::ZERO;
    let mut value = 0;
    for _ in 0..repeat {
        let start = Instant::now();
        value = black_box(f()?);
        let elapsed = start.elapsed();
        best = best.min(elapsed);
        total += elapsed;
    }
    Ok(BenchResult {
        method,
        wiener: value,
        best_ns: best.as_nanos(),
        mean_ns: total.as_nanos() / repeat as u128,
    })
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    if args.repeat == 0 {
        return Err(CliError::usage("repeat must be >= 1"));
    }
    let (kind, g) = family_graph(&args.family)?;
    let mut results = vec![time_method("engine", args.repeat, || {
        indices::wiener_pairwise(black_box(&g))
    })?];
    if let Some(FamilyKind::Sun(k)) = kind {
        results.push(time_method("closed_form", args.repeat, || {
            sun_forms::wiener_sun(black_box(k as u64))
        })?);
    } else {
        let name = kind.map_or_else(|| "random graphs".to_string(), |k| k.to_string());
        writeln!(err, "no closed form registered for {name}; engine only")?;
    }
    let agree = results.iter().all(|r| r.wiener == results[0].wiener);

    let text = match args.format {
        Format::Json => to_json_line(&json!({
            "family": format!("{:?}", args.family.family).to_lowercase(),
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "repeat": args.repeat,
            "agree": agree,
            "results": results,
        })),
        Format::Csv => {
            let mut s = String::from("method,wiener,best_ns,mean_ns\n");
            for r in &results {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    r.method, r.wiener, r.best_ns, r.mean_ns
                ));
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    if !agree {
        return Err(CliError {
            code: CliError::MISMATCH,
            message: "engine and closed form disagree".into(),
        });
    }
    Ok(())
}
