//! Bundled fixture files, compiled into the binary.

use std::path::Path;
use std::sync::Arc;

use crate::algebra::FinDimAlgebra;
use crate::bimod::CcxData;
use crate::error::{Error, Result};

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name)))),*]
    };
}

pub const FILES: &[(&str, &str)] = bundle![
    "b2.ms",
    "s3.ms",
    "s4.ms",
    "s3-corrupt.ms",
    "empty-table.ms",
    "skewed-m.ms",
    "rational.alg",
    "dualnumbers.alg",
    "x3local.alg",
    "x4local.alg",
    "exterior2.alg",
    "zigzagA2.alg",
    "nonws.alg",
    "qxq.alg",
    "rational.ccx",
    "dualnumbers.ccx",
    "dualnumbers-graded.ccx",
    "dualnumbers-shift0.ccx",
    "x3local.ccx",
    "x3local-small-x.ccx",
    "x3local-bad-x.ccx",
    "x4local.ccx",
    "exterior2.ccx",
    "zigzagA2.ccx",
    "zigzagA2-graded.ccx",
    "qxq.ccx",
    "sl2-weights.ccx",
];

/// Contents of a bundled file.
pub fn text(file: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == file)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Io {
            path: file.to_string(),
            message: "no such bundled fixture".into(),
        })
}

/// Names accepted by `--fixture`, with extension.
pub fn resolve_name(name: &str) -> Result<&'static str> {
    if let Some((n, _)) = FILES.iter().find(|(n, _)| *n == name) {
        return Ok(n);
    }
    for ext in ["ccx", "ms", "alg"] {
        let want = format!("{name}.{ext}");
        if let Some((n, _)) = FILES.iter().find(|(n, _)| *n == want) {
            return Ok(n);
        }
    }
    Err(Error::Argument(format!("unknown fixture `{name}`")))
}

pub fn algebra(file: &str) -> Result<Arc<FinDimAlgebra>> {
    Ok(Arc::new(FinDimAlgebra::parse(text(file)?)?))
}

/// A bundled `.ccx` file, its algebras resolved among the bundled files.
pub fn ccx_data(name: &str) -> Result<CcxData> {
    let file = resolve_name(name)?;
    CcxData::parse_with(text(file)?, &|p| text(p).map(str::to_string))
}

/// Reads a file from disk.
pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// A `.ccx` file on disk; algebra paths are relative to its directory, with
/// bundled files as a fallback.
pub fn ccx_from_path(path: &Path) -> Result<CcxData> {
    let input = read(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    CcxData::parse_with(&input, &|p| {
        let local = dir.join(p);
        if local.exists() {
            read(&local)
        } else {
            text(p).map(str::to_string).map_err(|_| Error::Io {
                path: local.display().to_string(),
                message: "no such file".into(),
            })
        }
    })
}
