//! Directory-scale augmentation with per-image seeding and run reports.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use vpatch_core::augment::{
    augment_patches_retrying, min_max_normalize, random_erasing, EraseRect, VpOutput,
};
use vpatch_core::metrics::{ssim, SsimParams};
use vpatch_core::rng::{bernoulli, derive_image_seed, seeded};
use vpatch_core::{Error as CoreError, ImageTensor};

use crate::config::{Method, RunConfig};
use crate::error::{PipelineError, Result};
use crate::io::{encode_png, load_rgb};
use crate::resize::resize_bilinear;

/// Result of augmenting one tensor.
#[derive(Debug, Clone)]
pub struct Augmented {
    pub image: ImageTensor,
    pub applied: bool,
    pub vp: Option<VpOutput>,
    pub erased: Option<EraseRect>,
}

impl Augmented {
    pub fn pixels_moved(&self) -> Option<usize> {
        self.vp
            .as_ref()
            .map(|o| o.moves.iter().map(|m| m.pixels_moved).sum())
    }
}

/// Augments a normalized tensor with the stream `seeded(seed)`.
pub fn augment_tensor(cfg: &RunConfig, sample: &ImageTensor, seed: u64) -> Result<Augmented> {
    let mut rng = seeded(seed);
    let unchanged = |applied| Augmented {
        image: sample.clone(),
        applied,
        vp: None,
        erased: None,
    };
    match cfg.method {
        Method::None => Ok(unchanged(false)),
        Method::Vp | Method::VpRandom => {
            if !bernoulli(&mut rng, cfg.vp_probability) {
                return Ok(unchanged(false));
            }
            let out = augment_patches_retrying(sample, &cfg.vp_config(), &mut rng)?;
            Ok(Augmented {
                image: out.image.clone(),
                applied: true,
                vp: Some(out),
                erased: None,
            })
        }
        Method::Re => {
            let out = random_erasing(sample, &cfg.re, &mut rng)?;
            Ok(Augmented {
                image: out.image,
                applied: out.applied,
                vp: None,
                erased: out.rect,
            })
        }
    }
}

/// Loads, resizes to `size` and min-max normalizes one file.
pub fn prepare_image(path: &Path, size: (usize, usize)) -> Result<ImageTensor> {
    let raw = load_rgb(path)?;
    Ok(min_max_normalize(&resize_bilinear(&raw, size.0, size.1)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageRecord {
    pub index: usize,
    pub filename: String,
    pub method: Method,
    pub seed: u64,
    pub applied: bool,
    pub pixels_moved: Option<usize>,
    pub erased_area: Option<usize>,
    /// SSIM between the normalized input and its augmentation.
    pub ssim: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregates {
    pub processed: usize,
    pub failed: usize,
    /// Failures caused by diagrams without bounded regions.
    pub degenerate: usize,
    pub applied: usize,
    pub mean_ssim: Option<f64>,
    pub mean_pixels_moved: Option<f64>,
    pub mean_erased_area: Option<f64>,
}

impl Aggregates {
    pub fn from_records(records: &[ImageRecord]) -> Self {
        fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
            let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
            (n > 0).then(|| sum / n as f64)
        }
        let failed = records.iter().filter(|r| r.error.is_some()).count();
        Self {
            processed: records.len() - failed,
            failed,
            degenerate: records
                .iter()
                .filter(|r| r.error.as_deref() == Some(DEGENERATE_MESSAGE))
                .count(),
            applied: records.iter().filter(|r| r.applied).count(),
            mean_ssim: mean(records.iter().filter_map(|r| r.ssim)),
            mean_pixels_moved: mean(
                records
                    .iter()
                    .filter_map(|r| r.pixels_moved.map(|v| v as f64)),
            ),
            mean_erased_area: mean(
                records
                    .iter()
                    .filter_map(|r| r.erased_area.map(|v| v as f64)),
            ),
        }
    }
}

const DEGENERATE_MESSAGE: &str = "degenerate geometry: no bounded Voronoi region after retries";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub config: RunConfig,
    pub records: Vec<ImageRecord>,
    pub aggregates: Aggregates,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            w.serialize(r).map_err(|e| PipelineError::Format {
                path: "<csv>".into(),
                message: e.to_string(),
            })?;
        }
        let bytes = w.into_inner().map_err(|e| PipelineError::Format {
            path: "<csv>".into(),
            message: e.to_string(),
        })?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

/// Sorted regular files of `dir`.
pub fn list_inputs(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| PipelineError::io(dir, e))? {
        let entry = entry.map_err(|e| PipelineError::io(dir, e))?;
        let path = entry.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    if files.is_empty() {
        return Err(PipelineError::EmptyInput(dir.to_path_buf()));
    }
    Ok(files)
}

fn output_name(input: &Path) -> String {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy())
        .unwrap_or_default();
    format!("{stem}.png")
}

/// CSV mirror of the report, next to it.
pub fn csv_path(report: &Path) -> PathBuf {
    report.with_extension("csv")
}

/// Augments every file of `cfg.input` into `cfg.output` and writes the
/// JSON report (plus its CSV mirror).
///
/// Image `i` in sorted filename order uses `derive_image_seed(cfg.seed, i)`,
/// so results do not depend on the thread count. Undecodable files are
/// recorded as failures and skipped.
pub fn run_batch(cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    let inputs = list_inputs(&cfg.input)?;
    let mut seen = HashSet::new();
    for p in &inputs {
        if !seen.insert(output_name(p)) {
            return Err(PipelineError::Config(format!(
                "two inputs map to output {}",
                output_name(p)
            )));
        }
    }
    fs::create_dir_all(&cfg.output).map_err(|e| PipelineError::io(&cfg.output, e))?;
    if !cfg.overwrite {
        let targets = inputs.iter().map(|p| cfg.output.join(output_name(p)));
        let reports = [cfg.report.clone(), csv_path(&cfg.report)];
        if let Some(existing) = targets.chain(reports).find(|p| p.exists()) {
            return Err(PipelineError::OutputExists(existing));
        }
    }

    let work = || -> Vec<ImageRecord> {
        inputs
            .par_iter()
            .enumerate()
            .map(|(i, path)| process_one(cfg, i, path))
            .collect()
    };
    let records = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| PipelineError::Config(e.to_string()))?
            .install(work),
        None => work(),
    };

    let report = RunReport {
        version: vpatch_core::VERSION.to_string(),
        config: cfg.clone(),
        aggregates: Aggregates::from_records(&records),
        records,
    };
    if let Some(parent) = cfg.report.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|e| PipelineError::io(parent, e))?;
    }
    fs::write(&cfg.report, report.to_json()).map_err(|e| PipelineError::io(&cfg.report, e))?;
    let csv = csv_path(&cfg.report);
    fs::write(&csv, report.to_csv()?).map_err(|e| PipelineError::io(&csv, e))?;
    Ok(report)
}

fn process_one(cfg: &RunConfig, index: usize, path: &Path) -> ImageRecord {
    let seed = derive_image_seed(cfg.seed, index as u64);
    let mut record = ImageRecord {
        index,
        filename: path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        method: cfg.method,
        seed,
        applied: false,
        pixels_moved: None,
        erased_area: None,
        ssim: None,
        error: None,
    };
    let result = (|| -> Result<()> {
        let sample = prepare_image(path, cfg.resize_to)?;
        let aug = augment_tensor(cfg, &sample, seed)?;
        record.applied = aug.applied;
        record.pixels_moved = aug.pixels_moved();
        record.erased_area = aug.erased.map(|r| r.area());
        record.ssim = Some(ssim(&sample, &aug.image, &SsimParams::default())?);
        let out = cfg.output.join(output_name(path));
        fs::write(&out, encode_png(&aug.image)?).map_err(|e| PipelineError::io(&out, e))
    })();
    if let Err(e) = result {
        record.error = Some(match e {
            PipelineError::Core(CoreError::DegenerateGeometry) => DEGENERATE_MESSAGE.to_string(),
            other => other.to_string(),
        });
        record.applied = false;
        record.pixels_moved = None;
        record.erased_area = None;
        record.ssim = None;
    }
    record
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(ssim: Option<f64>, moved: Option<usize>, error: Option<&str>) -> ImageRecord {
        ImageRecord {
            index: 0,
            filename: "a.png".into(),
            method: Method::Vp,
            seed: 1,
            applied: moved.is_some(),
            pixels_moved: moved,
            erased_area: None,
            ssim,
            error: error.map(str::to_string),
        }
    }

    #[test]
    fn aggregates_recompute() {
        let records = vec![
            rec(Some(0.9), Some(100), None),
            rec(Some(0.7), Some(300), None),
            rec(None, None, Some("broken")),
            rec(None, None, Some(DEGENERATE_MESSAGE)),
        ];
        let a = Aggregates::from_records(&records);
        assert_eq!(
            (a.processed, a.failed, a.degenerate, a.applied),
            (2, 2, 1, 2)
        );
        assert!((a.mean_ssim.unwrap() - 0.8).abs() < 1e-12);
        assert_eq!(a.mean_pixels_moved, Some(200.0));
        assert_eq!(a.mean_erased_area, None);
    }

    #[test]
    fn none_method_is_identity() {
        let cfg = RunConfig {
            method: Method::None,
            ..RunConfig::default()
        };
        let t = ImageTensor::from_fn(16, 16, 3, |x, y, c| ((x + y + c) % 5) as f32 / 4.0);
        let a = augment_tensor(&cfg, &t, 3).unwrap();
        assert_eq!(a.image, t);
        assert!(!a.applied && a.pixels_moved().is_none());
    }

    #[test]
    fn zero_probability_skips_vp() {
        let cfg = RunConfig {
            vp_probability: 0.0,
            ..RunConfig::default()
        };
        let t = ImageTensor::from_fn(64, 64, 3, |x, y, c| ((x + y + c) % 5) as f32 / 4.0);
        let a = augment_tensor(&cfg, &t, 3).unwrap();
        assert_eq!(a.image, t);
        assert!(!a.applied);
    }

    #[test]
    fn output_names() {
        assert_eq!(output_name(Path::new("/x/cat.jpg")), "cat.png");
        assert_eq!(
            csv_path(Path::new("out/report.json")),
            Path::new("out/report.csv")
        );
    }
}
