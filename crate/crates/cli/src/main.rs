use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chainsearch::chain::{
    verify_first_arrivals, verify_first_sweep_chain_sums, verify_walk_decompositions,
    MAX_ENUMERATION_VERTICES,
};
use chainsearch::io::{
    generate_random_graph, parse_graph, write_edge_list, write_permutation, GraphFormat,
    TraceDocument,
};
use chainsearch::{
    bfs_order_renumbering, find_all_components, find_connected_component, numbering_quality,
    ArithmeticMode, Graph, SeedRule, TraversalConfig, TraversalError, Variant, VertexId,
    DEFAULT_SATURATION_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "chainsearch", version, about = "Graph traversal by Jacobi and Gauss-Seidel sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of connected components and their vertices.
    Components {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_enum, default_value_t = VariantArg::UnsignedCcs)]
        variant: VariantArg,
    },
    /// Emit the per-iteration trace of one traversal as JSON lines.
    Trace {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, value_enum, default_value_t = VariantArg::GaussSeidel)]
        variant: VariantArg,
        #[arg(long, default_value_t = 1)]
        start: u32,
        /// Include the state vector of every iteration.
        #[arg(long)]
        snapshot: bool,
    },
    /// Count BFS and CCS iterations from one start vertex.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Sweep used for the CCS count.
        #[arg(long, value_enum, default_value_t = VariantArg::GaussSeidel)]
        variant: VariantArg,
        #[arg(long, default_value_t = 1)]
        start: u32,
    },
    /// Relabel vertices in order of distance from a root.
    Renumber {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, alias = "root", default_value_t = 1)]
        start: u32,
    },
    /// Check sweep values against chain enumeration.
    Verify {
        /// Graph for the first-arrival and chain-sum checks; the walk
        /// fixtures are always checked.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        #[arg(long, default_value_t = 1)]
        start: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a seeded random graph as an edge list.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.1)]
        density: f64,
        /// Exact number of connected components.
        #[arg(long)]
        components: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or '-' for standard input.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value_t = ArithArg::Exact)]
    arith: ArithArg,
    /// Freeze vertices that can no longer reach unvisited ones.
    #[arg(long)]
    mask: bool,
    /// Rescale floating-point state every M iterations.
    #[arg(long, value_name = "M", value_parser = clap::value_parser!(u32).range(1..))]
    regularize_every: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Mm,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Jacobi,
    GaussSeidel,
    UnsignedCcs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ArithArg {
    Exact,
    Saturate,
    Float,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Mm => GraphFormat::MatrixMarket,
        }
    }
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Jacobi => Variant::Jacobi,
            VariantArg::GaussSeidel => Variant::GaussSeidel,
            VariantArg::UnsignedCcs => Variant::UnsignedCcs,
        }
    }
}

impl SweepArgs {
    fn config(&self, variant: VariantArg, d: u64) -> TraversalConfig {
        let mode = match self.arith {
            ArithArg::Exact => ArithmeticMode::Exact,
            ArithArg::Saturate => ArithmeticMode::Saturate {
                cap: DEFAULT_SATURATION_CAP,
            },
            ArithArg::Float => ArithmeticMode::Float,
        };
        let mut cfg = TraversalConfig::new(variant.into(), mode)
            .with_masking(self.mask)
            .with_d(d)
            .with_cross_check(false);
        if self.regularize_every.is_some() {
            cfg = cfg.with_regularization(self.regularize_every);
        }
        cfg
    }
}

enum CliError {
    Usage(String),
    Parse(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Verification(_) => EXIT_VERIFY,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Verification(m) => m,
        }
    }
}

impl From<TraversalError> for CliError {
    fn from(e: TraversalError) -> Self {
        match e {
            TraversalError::ReferenceMismatch { .. } | TraversalError::NonFinite { .. } => {
                CliError::Verification(e.to_string())
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &PathBuf, format: FormatArg, d: u64) -> Result<Graph, CliError> {
    let text = read_input(path)?;
    parse_graph(&text, format.into(), d)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn start_vertex(g: &Graph, label: u32) -> Result<VertexId, CliError> {
    if label == 0 || label as usize > g.vertex_count() {
        return Err(CliError::Usage(format!(
            "start vertex {label} out of range 1..={}",
            g.vertex_count()
        )));
    }
    Ok(VertexId::new(label))
}

fn join(vs: &[VertexId]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Components {
            input,
            sweep,
            variant,
        } => {
            let g = load(&input.input, input.format, input.d)?;
            let signed = Variant::from(variant).is_signed();
            // signed sweeps can cancel to a false zero
            let cfg = sweep.config(variant, input.d).with_cross_check(signed);
            let partition = find_all_components(&g, &cfg, SeedRule::LowestLabel)?;
            let mut line = format!("K={}", partition.count());
            for (i, members) in partition.members().iter().enumerate() {
                let _ = write!(line, "; component {}: {{{}}}", i + 1, join(members));
            }
            line.push('\n');
            emit(input.output.as_ref(), &line)
        }
        Command::Trace {
            input,
            sweep,
            variant,
            start,
            snapshot,
        } => {
            let g = load(&input.input, input.format, input.d)?;
            let s = start_vertex(&g, start)?;
            let cfg = sweep.config(variant, input.d).with_snapshots(snapshot);
            let (_, trace) = find_connected_component(&g, s, &cfg)?;
            let doc = TraceDocument::from_trace(&g, &cfg, &trace);
            emit(input.output.as_ref(), &doc.to_json_lines())
        }
        Command::Compare {
            input,
            sweep,
            variant,
            start,
        } => {
            let g = load(&input.input, input.format, input.d)?;
            let s = start_vertex(&g, start)?;
            let ccs_cfg = sweep.config(variant, input.d);
            let bfs_arith = match sweep.arith {
                ArithArg::Saturate => ArithArg::Exact,
                other => other,
            };
            let bfs_cfg = SweepArgs {
                arith: bfs_arith,
                ..sweep
            }
            .config(VariantArg::Jacobi, input.d);
            let (_, bfs) = find_connected_component(&g, s, &bfs_cfg)?;
            let (_, ccs) = find_connected_component(&g, s, &ccs_cfg)?;
            let (n_bfs, n_ccs) = (bfs.iteration_count(), ccs.iteration_count());
            emit(input.output.as_ref(), &format!("N_BFS={n_bfs} N_CCS={n_ccs}\n"))?;
            if n_ccs > n_bfs {
                return Err(CliError::Verification(format!(
                    "CCS took more iterations than BFS ({n_ccs} > {n_bfs})"
                )));
            }
            Ok(())
        }
        Command::Renumber { input, start } => {
            let g = load(&input.input, input.format, input.d)?;
            let root = start_vertex(&g, start)?;
            let p = bfs_order_renumbering(&g, root);
            let report = numbering_quality(&g, root);
            let mut text = write_permutation(&p);
            let _ = writeln!(text, "# root={}", report.root);
            let _ = writeln!(
                text,
                "# N_CCS before={} after={}",
                report.ccs_iterations_before, report.ccs_iterations_after
            );
            let _ = writeln!(
                text,
                "# correct edge fraction before={:.4} after={:.4}",
                report.correct_edge_fraction_before, report.correct_edge_fraction_after
            );
            emit(input.output.as_ref(), &text)
        }
        Command::Verify {
            input,
            format,
            d,
            start,
            output,
        } => {
            let mut reports = vec![verify_walk_decompositions(d)];
            if let Some(path) = &input {
                let g = load(path, format, d)?;
                let s = start_vertex(&g, start)?;
                reports.push(verify_first_arrivals(&g, s, d));
                if g.vertex_count() <= MAX_ENUMERATION_VERTICES && g.neighbors(s).all(|w| w > s) {
                    let r = verify_first_sweep_chain_sums(&g, s, d)
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    reports.push(r);
                }
            }
            let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
            emit(output.as_ref(), &text)?;
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            if failed > 0 {
                return Err(CliError::Verification(format!("{failed} checks failed")));
            }
            Ok(())
        }
        Command::Generate {
            n,
            density,
            components,
            seed,
            output,
        } => {
            let edges = generate_random_graph(n, density, components, seed)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let g = Graph::from_edges(n, &edges, 2).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(output.as_ref(), &write_edge_list(&g))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
