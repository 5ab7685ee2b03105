//! Matrix files: `{"n": 2, "entries": [["0", "1"], ["-1", "0"]]}` with every
//! entry an exact rational written as a string.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use workbench_core::{RatMatrix, Rational, Transposition};

use crate::error::RunError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn parse_matrix(text: &str, origin: &Path) -> Result<RatMatrix, RunError> {
    let fail = |message: String| RunError::Parse { path: origin.to_path_buf(), message };
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| fail(e.to_string()))?;
    if file.entries.len() != file.n || file.entries.iter().any(|r| r.len() != file.n) {
        return Err(fail(format!("expected a square {0}x{0} matrix", file.n)));
    }
    let mut rows = Vec::with_capacity(file.n);
    for (i, row) in file.entries.iter().enumerate() {
        let mut out = Vec::with_capacity(file.n);
        for (j, s) in row.iter().enumerate() {
            let r: Rational =
                s.parse().map_err(|_| fail(format!("entry ({}, {}): `{s}` is not a rational", i + 1, j + 1)))?;
            out.push(r);
        }
        rows.push(out);
    }
    RatMatrix::from_rows(rows).map_err(|e| fail(e.to_string()))
}

pub fn load_matrix(path: &Path) -> Result<RatMatrix, RunError> {
    let text = std::fs::read_to_string(path).map_err(|source| RunError::Read { path: path.to_path_buf(), source })?;
    parse_matrix(&text, path)
}

pub fn matrix_json(m: &RatMatrix) -> MatrixFile {
    let n = m.n();
    MatrixFile { n, entries: (0..n).map(|i| (0..n).map(|j| m.get(i, j).to_string()).collect()).collect() }
}

/// A matrix given by name or by file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixSource {
    Identity,
    Symplectic,
    File(PathBuf),
}

impl MatrixSource {
    /// `identity` and `symplectic` are built in; anything else is a path,
    /// resolved against `base` when relative.
    pub fn parse(s: &str, base: Option<&Path>) -> Self {
        match s {
            "identity" | "id" => MatrixSource::Identity,
            "symplectic" | "J" => MatrixSource::Symplectic,
            _ => {
                let p = PathBuf::from(s);
                match base {
                    Some(b) if p.is_relative() => MatrixSource::File(b.join(p)),
                    _ => MatrixSource::File(p),
                }
            }
        }
    }

    pub fn matrix(&self, n: usize, check: &str) -> Result<RatMatrix, RunError> {
        let m = match self {
            MatrixSource::Identity => RatMatrix::identity(n),
            MatrixSource::Symplectic => {
                RatMatrix::symplectic(n).map_err(|source| RunError::Core { check: check.into(), source })?
            }
            MatrixSource::File(p) => load_matrix(p)?,
        };
        if m.n() != n {
            return Err(RunError::param(check, format!("matrix has size {} but n = {n}", m.n())));
        }
        Ok(m)
    }

    pub fn transposition(&self, n: usize, check: &str) -> Result<Transposition, RunError> {
        match self {
            MatrixSource::Identity => Ok(Transposition::identity(n)),
            _ => Transposition::new(self.matrix(n, check)?)
                .map_err(|source| RunError::Core { check: check.into(), source }),
        }
    }
}
