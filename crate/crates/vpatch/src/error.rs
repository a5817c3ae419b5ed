use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = PipelineError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("refusing to overwrite {0} (pass --overwrite)")]
    OutputExists(PathBuf),
    #[error("no input images in {0}")]
    EmptyInput(PathBuf),
    #[error("{0} image(s) had no usable Voronoi diagram after all retries")]
    DegenerateExhausted(usize),
    #[error(transparent)]
    Core(#[from] vpatch_core::Error),
}

impl PipelineError {
    /// Process exit code: 1 configuration, 2 I/O, 3 degenerate geometry.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Config(_) => 1,
            PipelineError::Core(vpatch_core::Error::DegenerateGeometry) => 3,
            PipelineError::Core(_) => 1,
            PipelineError::DegenerateExhausted(_) => 3,
            PipelineError::Io { .. }
            | PipelineError::Image { .. }
            | PipelineError::Format { .. }
            | PipelineError::OutputExists(_)
            | PipelineError::EmptyInput(_) => 2,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        PipelineError::Io {
            path: path.into(),
            source,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(PipelineError::Config("x".into()).exit_code(), 1);
        assert_eq!(PipelineError::EmptyInput("d".into()).exit_code(), 2);
        assert_eq!(PipelineError::OutputExists("o".into()).exit_code(), 2);
        assert_eq!(PipelineError::DegenerateExhausted(1).exit_code(), 3);
        assert_eq!(
            PipelineError::from(vpatch_core::Error::DegenerateGeometry).exit_code(),
            3
        );
        assert_eq!(
            PipelineError::from(vpatch_core::Error::InvalidArgument("x".into())).exit_code(),
            1
        );
    }
}
