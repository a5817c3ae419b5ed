use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vpatch::batch::run_batch;
use vpatch::config::{Method, RunConfig};
use vpatch::error::{PipelineError, Result};
use vpatch::io::load_unit;
use vpatch::preview::preview_montage;
use vpatch::stats::stats_command;
use vpatch::svg::diagram_svg;
use vpatch_core::metrics::{entropy, mean_entropy, ssim, ProbDist, SsimParams};

#[derive(Parser)]
#[command(name = "vpatch", version, about = "VoronoiPatches image augmentation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Augment every image of a directory and write a run report.
    Augment(AugmentArgs),
    /// Write a montage of one image and several augmentations.
    Preview(PreviewArgs),
    /// Monte Carlo patch-size and pixels-moved tables.
    Stats(StatsArgs),
    /// SSIM between two images of equal size.
    Ssim {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Shannon entropy (bits) of each CSV row of class probabilities.
    Entropy {
        #[arg(long)]
        probs: PathBuf,
    },
}

/// Options shared by `augment` and `preview`; flags override `--config`.
#[derive(Args)]
struct MethodArgs {
    /// JSON run config; unknown keys are rejected.
    #[arg(long)]
    config: Option<PathBuf>,
    /// vp, vp-random, re or none.
    #[arg(long)]
    method: Option<String>,
    #[arg(long)]
    generators: Option<usize>,
    #[arg(long)]
    patches: Option<usize>,
    /// Blur the patch borders.
    #[arg(long)]
    smooth: bool,
    #[arg(long)]
    border_width: Option<usize>,
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Chance of applying the augmentation (VP or RE) to an image.
    #[arg(long)]
    probability: Option<f64>,
    /// Resize target as WIDTHxHEIGHT.
    #[arg(long, value_parser = parse_size)]
    size: Option<(usize, usize)>,
}

#[derive(Args)]
struct AugmentArgs {
    #[command(flatten)]
    method: MethodArgs,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report path; a CSV mirror is written next to it.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    overwrite: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct PreviewArgs {
    #[command(flatten)]
    method: MethodArgs,
    #[arg(long = "image", visible_alias = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Montage grid as ROWSxCOLS.
    #[arg(long, value_parser = parse_size, default_value = "2x4")]
    grid: (usize, usize),
    /// Also write the diagram of augmentation 0 as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long, value_delimiter = ',', default_value = "50,60,70")]
    generators: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "5,10,15")]
    patches: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = parse_size, default_value = "224x224")]
    size: (usize, usize),
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_size(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once('x')
        .ok_or_else(|| format!("expected AxB, got {s:?}"))?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

impl MethodArgs {
    fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::from_json_file(p)?,
            None => RunConfig::default(),
        };
        if let Some(m) = &self.method {
            cfg.method = Method::parse(m)?;
        }
        if let Some(v) = self.generators {
            cfg.vp.generators = v;
        }
        if let Some(v) = self.patches {
            cfg.vp.patches = v;
        }
        if self.smooth {
            cfg.vp.smooth = true;
        }
        if let Some(v) = self.border_width {
            cfg.vp.border_width = v;
        }
        if let Some(v) = self.sigma {
            cfg.vp.blur_sigma = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(p) = self.probability {
            match cfg.method {
                Method::Re => cfg.re.probability = p,
                _ => cfg.vp_probability = p,
            }
        }
        if let Some(s) = self.size {
            cfg.resize_to = s;
        }
        Ok(cfg)
    }
}

fn augment(args: AugmentArgs) -> Result<ExitCode> {
    let mut cfg = args.method.resolve()?;
    if let Some(p) = args.input {
        cfg.input = p;
    }
    if let Some(p) = args.out {
        cfg.output = p;
    }
    if let Some(p) = args.report {
        cfg.report = p;
    }
    cfg.overwrite |= args.overwrite;
    if args.threads.is_some() {
        cfg.threads = args.threads;
    }
    for (name, p) in [
        ("--in", &cfg.input),
        ("--out", &cfg.output),
        ("--report", &cfg.report),
    ] {
        if p.as_os_str().is_empty() {
            return Err(PipelineError::Config(format!("{name} is required")));
        }
    }
    let report = run_batch(&cfg)?;
    let a = &report.aggregates;
    eprintln!(
        "processed {} image(s), {} failed, {} augmented",
        a.processed, a.failed, a.applied
    );
    if a.degenerate > 0 {
        return Err(PipelineError::DegenerateExhausted(a.degenerate));
    }
    Ok(ExitCode::SUCCESS)
}

fn preview(args: PreviewArgs) -> Result<ExitCode> {
    let cfg = args.method.resolve()?;
    cfg.validate()?;
    let m = preview_montage(&cfg, &args.input, args.grid, &args.out)?;
    if let Some(path) = args.svg {
        let vp = m.first.vp.as_ref().ok_or_else(|| {
            PipelineError::Config("--svg needs a VoronoiPatches method that was applied".into())
        })?;
        let sources: Vec<usize> = vp.moves.iter().map(|mv| mv.source_region).collect();
        std::fs::write(&path, diagram_svg(&vp.diagram, &sources))
            .map_err(|e| PipelineError::io(&path, e))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn stats(args: StatsArgs) -> Result<ExitCode> {
    let report = stats_command(
        &args.generators,
        &args.patches,
        args.trials,
        args.seed,
        args.size,
    )?;
    match args.out {
        Some(p) => std::fs::write(&p, report.to_json()).map_err(|e| PipelineError::io(&p, e))?,
        None => print!("{}", report.to_json()),
    }
    Ok(ExitCode::SUCCESS)
}

fn ssim_cmd(a: PathBuf, b: PathBuf) -> Result<ExitCode> {
    let (x, y) = (load_unit(&a)?, load_unit(&b)?);
    println!("{:.6}", ssim(&x, &y, &SsimParams::default())?);
    Ok(ExitCode::SUCCESS)
}

fn entropy_cmd(path: PathBuf) -> Result<ExitCode> {
    let format_err = |message: String| PipelineError::Format {
        path: path.clone(),
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(&path)
        .map_err(|e| format_err(e.to_string()))?;
    let mut dists = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| format_err(e.to_string()))?;
        let probs = row
            .iter()
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|e| format_err(format!("{v:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        dists.push(ProbDist::new(probs)?);
    }
    if dists.is_empty() {
        return Err(PipelineError::EmptyInput(path));
    }
    for d in &dists {
        println!("{:.6}", entropy(d));
    }
    eprintln!("mean {:.6}", mean_entropy(&dists)?);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Augment(a) => augment(a),
        Command::Preview(a) => preview(a),
        Command::Stats(a) => stats(a),
        Command::Ssim { a, b } => ssim_cmd(a, b),
        Command::Entropy { probs } => entropy_cmd(probs),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(e.exit_code() as u8)
    })
}
