use std::fs;
use std::path::{Path, PathBuf};

use glareview_core::{read_ppm, write_ppm, Frame, PpmError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Decode { path: PathBuf, source: PpmError },
    #[error("output directory {0} does not exist")]
    MissingOutputDir(PathBuf),
}

pub fn read_frame(path: &Path) -> Result<Frame, IoError> {
    let bytes = fs::read(path).map_err(|source| IoError::Read {
        path: path.to_owned(),
        source,
    })?;
    read_ppm(&bytes).map_err(|source| IoError::Decode {
        path: path.to_owned(),
        source,
    })
}

/// Fails early if `path` could not be created because its directory is missing.
pub fn check_output_path(path: &Path) -> Result<(), IoError> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => {
            Err(IoError::MissingOutputDir(dir.to_owned()))
        }
        _ => Ok(()),
    }
}

pub fn write_frame(path: &Path, frame: &Frame) -> Result<(), IoError> {
    fs::write(path, write_ppm(frame)).map_err(|source| IoError::Write {
        path: path.to_owned(),
        source,
    })
}
