use crate::error::{Error, Result};
use crate::spectral::{max_dense_n, EigenOptions, DEFAULT_TOL};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub cap: usize,
    pub tol: f64,
    pub out_dir: PathBuf,
    pub workers: usize,
    /// Forces a single worker so logs and outputs are reproducible byte for byte.
    pub deterministic: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cap: max_dense_n(),
            tol: DEFAULT_TOL,
            out_dir: PathBuf::from("."),
            workers: std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
            deterministic: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cap < 1 {
            return Err(Error::InvalidParameter("cap must be at least 1".into()));
        }
        if !(self.tol > 0.0 && self.tol <= 1e-2) {
            return Err(Error::InvalidParameter(format!(
                "tolerance {} outside (0, 1e-2]",
                self.tol
            )));
        }
        if self.workers < 1 {
            return Err(Error::InvalidParameter(
                "worker count must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn effective_workers(&self) -> usize {
        if self.deterministic {
            1
        } else {
            self.workers
        }
    }

    pub fn eigen_options(&self) -> EigenOptions {
        EigenOptions {
            cap: self.cap,
            tol: self.tol,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        for bad in [
            RunConfig {
                cap: 0,
                ..Default::default()
            },
            RunConfig {
                tol: 0.0,
                ..Default::default()
            },
            RunConfig {
                tol: 0.1,
                ..Default::default()
            },
            RunConfig {
                workers: 0,
                ..Default::default()
            },
        ] {
            assert!(bad.validate().unwrap_err().is_usage());
        }
        let det = RunConfig {
            deterministic: true,
            workers: 8,
            ..Default::default()
        };
        assert_eq!(det.effective_workers(), 1);
    }

    #[test]
    fn load_partial_json() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.json");
        std::fs::write(&p, r#"{"tol": 1e-8, "workers": 2}"#).unwrap();
        let c = RunConfig::load(&p).unwrap();
        assert_eq!((c.tol, c.workers), (1e-8, 2));
        std::fs::write(&p, r#"{"tolerance": 1e-8}"#).unwrap();
        assert!(RunConfig::load(&p).unwrap_err().is_usage());
    }
}
