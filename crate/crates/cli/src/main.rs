use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quadmap::enumeration::{enumerate, Kind};
use quadmap::harness::{
    exhaustive_checks, replica_rng, run_experiment, sample_labeled_uniform, sample_pd_encoding, sample_pointed_ps,
    sample_rooted_pd, uniform_walk, ExperimentConfig,
};
use quadmap::planar_map::MarkedMap;
use quadmap::snake::{sample_snake, SnakeLaw};

#[derive(Parser)]
#[command(name = "quadmap", version, about = "Random quadrangulations, their tree encodings and scaling experiments")]
struct Cli {
    /// Master seed; 0 when neither this flag nor the variable is set.
    #[arg(long, global = true, env = "QUADMAP_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    /// Uniform plane tree, as its clockwise walk.
    Tree,
    /// Uniform labeled tree, as its `(R, V)` encoding.
    Labeled,
    /// Well-labeled tree rerooted at a uniform minimum, as its encoding.
    WellLabeled,
    /// Rooted quadrangulation under the degree-biased law.
    Rooted,
    /// Pointed quadrangulation of the positive representative of a uniform
    /// labeled tree.
    Pointed,
}

#[derive(Subcommand)]
enum Command {
    /// Draw random objects; records are separated by blank lines.
    Sample {
        #[arg(value_enum)]
        kind: SampleKind,
        /// Edge count of the tree (face count of the quadrangulation).
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exact counts as CSV `n,kind,count`.
    Enumerate {
        n: usize,
        /// plane_trees, labeled_trees, well_labeled or rooted_quads; all if omitted.
        #[arg(long)]
        kind: Option<Kind>,
    },
    /// Run the exhaustive suite; exits with 1 if any check fails.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Run a scaling experiment and write its CSV.
    Experiment {
        /// TOML configuration; the flags below override its fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// radius, profile, hp_gap, class_diameter or edge_gap.
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        replicas: Option<usize>,
        #[arg(long)]
        grid: Option<usize>,
        /// e.g. `uniform:0.5:1.5`, `exponential`, `pareto:3`.
        #[arg(long)]
        edge_length: Option<String>,
        #[arg(long)]
        label_variance: Option<f64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Sample discretized snakes as CSV `replica,s,f,zeta`.
    Snake {
        /// Edge count of the driving tree; the grid has `2m` intervals.
        m: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Variance of the head increments per unit lifetime.
        #[arg(long)]
        label_variance: Option<f64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn sample(kind: SampleKind, n: usize, count: usize, seed: u64) -> Result<String, String> {
    if n == 0 {
        return Err(quadmap::Error::EmptyTree.to_string());
    }
    let mut out = String::new();
    for replica in 0..count {
        let mut rng = replica_rng(seed, 0, replica as u64);
        let record = match kind {
            SampleKind::Tree => format!("{}\n", uniform_walk(n, &mut rng)),
            SampleKind::Labeled => format!("{}\n", sample_labeled_uniform(n, &mut rng)),
            SampleKind::WellLabeled => format!("{}\n", sample_pd_encoding(n, &mut rng)),
            SampleKind::Rooted => MarkedMap::from(&sample_rooted_pd(n, &mut rng).1).to_string(),
            SampleKind::Pointed => MarkedMap::from(&sample_pointed_ps(n, &mut rng)).to_string(),
        };
        if replica > 0 {
            out.push('\n');
        }
        out.push_str(record.trim_end());
        out.push('\n');
    }
    Ok(out)
}

fn counts(n: usize, kind: Option<Kind>) -> Result<String, String> {
    let kinds = kind.map_or(Kind::ALL.to_vec(), |k| vec![k]);
    let mut out = String::from("n,kind,count\n");
    for k in kinds {
        let all = enumerate(n, k).map_err(|e| e.to_string())?;
        let _ = writeln!(out, "{n},{k},{}", all.len());
    }
    Ok(out)
}

fn snakes(m: usize, count: usize, seed: u64, variance: Option<f64>) -> Result<String, String> {
    if m == 0 {
        return Err(quadmap::Error::EmptyTree.to_string());
    }
    let law = match variance {
        Some(v) if v > 0.0 && v.is_finite() => SnakeLaw { label_variance: v },
        Some(v) => return Err(format!("label variance must be positive, got {v}")),
        None => SnakeLaw::stated(),
    };
    let mut out = format!("# label_variance={}\nreplica,s,f,zeta\n", law.label_variance);
    for replica in 0..count {
        let x = sample_snake(m, law, &mut replica_rng(seed, 1, replica as u64));
        let grid = x.grid() as f64;
        for (k, (f, z)) in x.f().iter().zip(x.zeta()).enumerate() {
            let _ = writeln!(out, "{replica},{},{f},{z}", k as f64 / grid);
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn experiment_config(
    config: Option<PathBuf>,
    name: Option<String>,
    sizes: Option<Vec<usize>>,
    replicas: Option<usize>,
    grid: Option<usize>,
    edge_length: Option<String>,
    label_variance: Option<f64>,
    output: Option<PathBuf>,
    seed: Option<u64>,
) -> Result<ExperimentConfig, String> {
    let mut cfg = match &config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            text.parse::<ExperimentConfig>().map_err(|e| e.to_string())?
        }
        None => {
            let name = name.clone().ok_or("either --config or --name is required")?;
            ExperimentConfig::new(&name, Vec::new(), 100, seed.unwrap_or(0))
        }
    };
    if let Some(name) = name {
        cfg.name = name;
    }
    if let Some(sizes) = sizes {
        cfg.sizes = sizes;
    }
    if let Some(replicas) = replicas {
        cfg.replicas = replicas;
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    cfg.grid = grid.or(cfg.grid);
    cfg.edge_length = edge_length.or(cfg.edge_length);
    cfg.label_variance = label_variance.or(cfg.label_variance);
    cfg.output = output.or(cfg.output);
    Ok(cfg)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let seed = cli.seed;
    match cli.command {
        Command::Sample { kind, n, count, output } => emit(&sample(kind, n, count, seed.unwrap_or(0))?, output.as_deref())?,
        Command::Enumerate { n, kind } => emit(&counts(n, kind)?, None)?,
        Command::Verify { max_n } => {
            let checks = exhaustive_checks(max_n);
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{} passed, {failed} failed", checks.len() - failed);
            if failed > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Experiment { config, name, sizes, replicas, grid, edge_length, label_variance, output } => {
            let cfg =
                experiment_config(config, name, sizes, replicas, grid, edge_length, label_variance, output, seed)?;
            let csv = run_experiment(&cfg).map_err(|e| e.to_string())?;
            emit(&csv, cfg.output.as_deref())?;
        }
        Command::Snake { m, count, label_variance, output } => {
            emit(&snakes(m, count, seed.unwrap_or(0), label_variance)?, output.as_deref())?
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
