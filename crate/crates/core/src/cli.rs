//! Command-line front end. Standard output carries data, standard error
//! carries diagnostics; exit codes are 0 success, 1 usage error, 2
//! input/parse error, 3 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchConfig, BenchError, ReportFormat};
use crate::graph::{
    self, io::GraphFormat, memory_model, transpose, weakly_connected_components, NodeId,
};
use crate::solver::{self, SolverError, Variant};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "spe",
    about = "Shortest-paths engine for unweighted graphs",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Bovm,
    Sovm,
    Auto,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Bovm => Variant::Bovm,
            VariantArg::Sovm => Variant::Sovm,
            VariantArg::Auto => Variant::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Mtx,
    Edgelist,
    Cache,
}

impl From<GraphFormatArg> for GraphFormat {
    fn from(v: GraphFormatArg) -> Self {
        match v {
            GraphFormatArg::Mtx => GraphFormat::MatrixMarket,
            GraphFormatArg::Edgelist => GraphFormat::EdgeListText,
            GraphFormatArg::Cache => GraphFormat::CsrCache,
        }
    }
}

/// How unreached nodes appear in distance CSV output.
#[derive(Clone, Copy, ValueEnum)]
enum UnreachableArg {
    /// Skip unreached nodes (and the source row).
    Omit,
    /// List every node; unreached distances print as `inf`.
    Inf,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a graph to the binary CSR cache and print size figures.
    Convert {
        input: PathBuf,
        output: PathBuf,
        /// Input format; sniffed from banner/extension when absent.
        #[arg(long)]
        format: Option<GraphFormatArg>,
    },
    /// Single-source shortest paths; distances as CSV on stdout or --output.
    Sssp {
        graph: PathBuf,
        #[arg(long)]
        source: NodeId,
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = UnreachableArg::Omit)]
        unreachable: UnreachableArg,
        #[arg(long)]
        format: Option<GraphFormatArg>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// All-pairs shortest paths, streamed as source,node,distance rows.
    Apsp {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = UnreachableArg::Omit)]
        unreachable: UnreachableArg,
        #[arg(long)]
        format: Option<GraphFormatArg>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Structural statistics: sizes, components, degrees, eccentricity.
    Stats {
        graph: PathBuf,
        /// Print the eccentricity of this node.
        #[arg(long)]
        eccentricity: Option<NodeId>,
        /// Estimate the maximal eccentricity from this many random sources
        /// (reported as a lower bound).
        #[arg(long)]
        diameter_sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        format: Option<GraphFormatArg>,
    },
    /// Timed solver runs with outlier trimming and efficiency reporting.
    Bench {
        graph: PathBuf,
        #[arg(long, default_value_t = 500)]
        sources: usize,
        #[arg(long, default_value_t = 64)]
        runs: usize,
        /// Thread counts to sweep, ascending (e.g. 1,2,4,8).
        #[arg(long, value_delimiter = ',', default_value = "1")]
        threads: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
        #[arg(long, default_value_t = 0.95)]
        confidence: f64,
        #[arg(long = "format", value_enum, default_value_t = FormatArg::Json)]
        report_format: FormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long = "graph-format")]
        format: Option<GraphFormatArg>,
    },
    /// Cross-check solvers against the oracles on sampled sources.
    Verify {
        graph: PathBuf,
        /// Number of sources to sample; all nodes when omitted or >= n.
        #[arg(long)]
        sources: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        format: Option<GraphFormatArg>,
    },
}

enum CliError {
    Usage(String),
    Input(String),
    Verify(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Input(_) => EXIT_INPUT,
            Self::Verify(_) => EXIT_VERIFY,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Input(m) | Self::Verify(m) => m,
        }
    }
}

impl From<graph::GraphError> for CliError {
    fn from(e: graph::GraphError) -> Self {
        Self::Input(e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<BenchError> for CliError {
    fn from(e: BenchError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Input(e.to_string())
    }
}

/// Parses and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Convert {
            input,
            output,
            format,
        } => cmd_convert(&input, &output, format.map(Into::into)),
        Command::Sssp {
            graph,
            source,
            variant,
            unreachable,
            format,
            output,
        } => cmd_sssp(
            &graph,
            source,
            variant.into(),
            unreachable,
            format.map(Into::into),
            output.as_deref(),
        ),
        Command::Apsp {
            graph,
            threads,
            unreachable,
            format,
            output,
        } => cmd_apsp(
            &graph,
            threads,
            unreachable,
            format.map(Into::into),
            output.as_deref(),
        ),
        Command::Stats {
            graph,
            eccentricity,
            diameter_sample,
            seed,
            format,
        } => cmd_stats(
            &graph,
            eccentricity,
            diameter_sample,
            seed,
            format.map(Into::into),
        ),
        Command::Bench {
            graph,
            sources,
            runs,
            threads,
            seed,
            variant,
            confidence,
            report_format,
            output,
            format,
        } => {
            let cfg = BenchConfig {
                source_count: sources,
                runs_per_source: runs,
                seed,
                thread_counts: threads,
                variant: variant.into(),
                trim_confidence: confidence,
            };
            cmd_bench(&graph, &cfg, report_format, format.map(Into::into), output.as_deref())
        }
        Command::Verify {
            graph,
            sources,
            seed,
            format,
        } => cmd_verify(&graph, sources, seed, format.map(Into::into)),
    }
}

fn cmd_convert(
    input: &Path,
    output: &Path,
    format: Option<GraphFormat>,
) -> Result<(), CliError> {
    let csr = graph::io::load_graph(input, format)?;
    graph::io::save_cache(&csr, output)?;
    let n = csr.node_count();
    let model = memory_model(n.max(1) as u64, csr.edge_count() as u64);
    println!("nodes={n}");
    println!("edges={}", csr.edge_count());
    println!("engine_bytes={}", model.engine_bytes);
    println!("bfs_bytes={}", model.bfs_bytes);
    println!("eta={:.6}", model.eta);
    Ok(())
}

fn write_distance_rows(
    out: &mut dyn Write,
    result: &crate::solver::SsspResult,
    unreachable: UnreachableArg,
) -> std::io::Result<()> {
    for (node, &d) in result.distance.iter().enumerate() {
        let node = node as NodeId;
        match unreachable {
            UnreachableArg::Omit => {
                if d > 0 {
                    writeln!(out, "{node},{d}")?;
                }
            }
            UnreachableArg::Inf => {
                if result.is_reached(node) {
                    writeln!(out, "{node},{d}")?;
                } else {
                    writeln!(out, "{node},inf")?;
                }
            }
        }
    }
    Ok(())
}

fn open_sink(output: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match output {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    })
}

fn cmd_sssp(
    path: &Path,
    source: NodeId,
    variant: Variant,
    unreachable: UnreachableArg,
    format: Option<GraphFormat>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let csr = graph::io::load_graph(path, format)?;
    let csc = match variant {
        Variant::Bovm => Some(transpose(&csr)),
        _ => None,
    };
    let result = solver::sssp(&csr, csc.as_ref(), source, variant)?;
    eprintln!(
        "source={} reached={} iterations={} edge_inspections={} node_inspections={}",
        result.source,
        result.reached,
        result.iterations,
        result.edge_inspections,
        result.node_inspections
    );
    let mut sink = open_sink(output)?;
    writeln!(sink, "node,distance")?;
    write_distance_rows(&mut sink, &result, unreachable)?;
    sink.flush()?;
    Ok(())
}

fn cmd_apsp(
    path: &Path,
    threads: usize,
    unreachable: UnreachableArg,
    format: Option<GraphFormat>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let csr = graph::io::load_graph(path, format)?;
    let mut sink = open_sink(output)?;
    writeln!(sink, "source,node,distance").map_err(CliError::from)?;
    let mut io_error = None;
    solver::apsp_stream(&csr, threads, |result| {
        if io_error.is_some() {
            return;
        }
        for (node, &d) in result.distance.iter().enumerate() {
            let node = node as NodeId;
            let row = match unreachable {
                UnreachableArg::Omit => {
                    if d == 0 {
                        continue;
                    }
                    writeln!(sink, "{},{node},{d}", result.source)
                }
                UnreachableArg::Inf => {
                    if result.is_reached(node) {
                        writeln!(sink, "{},{node},{d}", result.source)
                    } else {
                        writeln!(sink, "{},{node},inf", result.source)
                    }
                }
            };
            if let Err(e) = row {
                io_error = Some(e);
                return;
            }
        }
    })?;
    if let Some(e) = io_error {
        return Err(e.into());
    }
    sink.flush()?;
    Ok(())
}

fn cmd_stats(
    path: &Path,
    eccentricity: Option<NodeId>,
    diameter_sample: Option<usize>,
    seed: u64,
    format: Option<GraphFormat>,
) -> Result<(), CliError> {
    let csr = graph::io::load_graph(path, format)?;
    let n = csr.node_count();
    let m = csr.edge_count();
    let wcc = weakly_connected_components(&csr);
    let max_deg = (0..n as NodeId).map(|u| csr.out_degree(u)).max().unwrap_or(0);
    println!("nodes={n}");
    println!("edges={m}");
    println!("components={}", wcc.component_count());
    println!("s_wcc={}", wcc.s_wcc());
    println!("e_wcc={}", wcc.e_wcc());
    println!("max_out_degree={max_deg}");
    println!(
        "avg_out_degree={:.6}",
        if n == 0 { 0.0 } else { m as f64 / n as f64 }
    );
    if n >= 1 {
        let model = memory_model(n as u64, m as u64);
        println!("eta={:.6}", model.eta);
    }
    if let Some(node) = eccentricity {
        let ecc = csr.eccentricity(node)?;
        println!("eccentricity[{node}]={ecc}");
    }
    if let Some(k) = diameter_sample {
        let sources = bench::sample_sources(n, k.min(n), seed, Some(&wcc))?;
        let mut best = 0u32;
        for s in sources {
            best = best.max(csr.eccentricity(s)?);
        }
        // A sampled sweep can only prove a lower bound on the true maximum.
        println!("eccentricity_max_lower_bound={best}");
    }
    Ok(())
}

fn cmd_bench(
    path: &Path,
    cfg: &BenchConfig,
    report_format: FormatArg,
    graph_format: Option<GraphFormat>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let csr = graph::io::load_graph(path, graph_format)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".to_string());
    let report = bench::run_bench(&csr, cfg, &name)?;
    let bytes = bench::emit_report(
        &report,
        match report_format {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        },
    )?;
    let mut sink = open_sink(output)?;
    sink.write_all(&bytes)?;
    sink.flush()?;
    Ok(())
}

fn cmd_verify(
    path: &Path,
    sources: Option<usize>,
    seed: u64,
    format: Option<GraphFormat>,
) -> Result<(), CliError> {
    let csr = graph::io::load_graph(path, format)?;
    let n = csr.node_count();
    let source_set: Vec<NodeId> = match sources {
        Some(k) if k < n => bench::sample_sources(n, k, seed, None)?,
        _ => (0..n as NodeId).collect(),
    };
    match verify::verify_sources(&csr, &source_set) {
        Ok(summary) => {
            println!("sources_checked={}", summary.sources_checked);
            println!("distance_comparisons={}", summary.distance_comparisons);
            println!("layer_checks={}", summary.layer_checks);
            println!("predecessor_checks={}", summary.predecessor_checks);
            println!("accounting_checks={}", summary.accounting_checks);
            println!("iteration_checks={}", summary.iteration_checks);
            println!("result=pass");
            Ok(())
        }
        Err(failure) => Err(CliError::Verify(failure.to_string())),
    }
}
