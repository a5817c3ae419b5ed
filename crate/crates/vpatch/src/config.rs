use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use vpatch_core::augment::{FillMode, ReConfig, VpConfig};

use crate::error::{PipelineError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// VoronoiPatches with transported content.
    #[default]
    Vp,
    /// VoronoiPatches with uniform-noise patches.
    #[serde(alias = "vp-random")]
    VpRandom,
    /// Random Erasing.
    Re,
    /// Resize and normalize only.
    None,
}

impl Method {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "vp" => Ok(Method::Vp),
            "vp-random" | "vp_random" => Ok(Method::VpRandom),
            "re" => Ok(Method::Re),
            "none" => Ok(Method::None),
            other => Err(PipelineError::Config(format!("unknown method {other:?}"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Vp => "vp",
            Method::VpRandom => "vp-random",
            Method::Re => "re",
            Method::None => "none",
        }
    }
}

/// Everything a batch run depends on. Serialized as the `config` echo of the
/// report and accepted as a JSON config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub method: Method,
    pub vp: VpConfig,
    pub re: ReConfig,
    /// Chance of applying VoronoiPatches to an image. 1.0 applies it to
    /// every image without consuming randomness.
    pub vp_probability: f64,
    pub seed: u64,
    pub input: PathBuf,
    pub output: PathBuf,
    pub report: PathBuf,
    pub resize_to: (usize, usize),
    pub overwrite: bool,
    /// Worker threads; `None` uses the global rayon pool. Never affects output.
    #[serde(skip_serializing)]
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            method: Method::Vp,
            vp: VpConfig::default(),
            re: ReConfig::default(),
            vp_probability: 1.0,
            seed: 0,
            input: PathBuf::new(),
            output: PathBuf::new(),
            report: PathBuf::new(),
            resize_to: (224, 224),
            overwrite: false,
            threads: None,
        }
    }
}

impl RunConfig {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
        serde_json::from_str(&text)
            .map_err(|e| PipelineError::Config(format!("{}: {e}", path.display())))
    }

    /// The VoronoiPatches config with the fill mode implied by `method`.
    pub fn vp_config(&self) -> VpConfig {
        let fill_mode = if self.method == Method::VpRandom {
            FillMode::RandomFill
        } else {
            FillMode::Transport
        };
        VpConfig {
            fill_mode,
            ..self.vp
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (w, h) = self.resize_to;
        if w < 8 || h < 8 {
            return Err(PipelineError::Config(
                "resize target must be at least 8x8".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.vp_probability) {
            return Err(PipelineError::Config(
                "vp_probability must lie in [0, 1]".into(),
            ));
        }
        if self.threads == Some(0) {
            return Err(PipelineError::Config("threads must be at least 1".into()));
        }
        match self.method {
            Method::Vp | Method::VpRandom => self.vp_config().validate()?,
            Method::Re => self.re.validate()?,
            Method::None => {}
        }
        Ok(())
    }
}
