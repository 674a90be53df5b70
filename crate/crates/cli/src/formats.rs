//! Polytope and spectrum JSON files.

use std::fmt;
use std::path::{Path, PathBuf};

use ehrhart_core::series::rat;
use ehrhart_core::{FractionalSpectrum, LatticePolytope};
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// `{"dim": n, "vertices": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

/// `{"dim": n, "atoms": [[num, den, multiplicity], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub dim: usize,
    pub atoms: Vec<(i64, i64, u64)>,
}

impl From<&LatticePolytope> for PolytopeFile {
    fn from(p: &LatticePolytope) -> Self {
        Self {
            dim: p.dim(),
            vertices: p.vertices().to_vec(),
        }
    }
}

impl From<&FractionalSpectrum> for SpectrumFile {
    fn from(s: &FractionalSpectrum) -> Self {
        let atoms = s
            .atoms()
            .iter()
            .map(|(b, &m)| {
                let num = i64::try_from(b.numer()).expect("exponent numerator fits in i64");
                let den = i64::try_from(b.denom()).expect("exponent denominator fits in i64");
                (num, den, m)
            })
            .collect();
        Self {
            dim: s.dim(),
            atoms,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum InputKind {
    #[default]
    Auto,
    Polytope,
    Spectrum,
}

#[derive(Clone, Debug)]
pub enum Input {
    Polytope(LatticePolytope),
    Spectrum(FractionalSpectrum),
}

impl Input {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Input::Polytope(_) => "polytope",
            Input::Spectrum(_) => "spectrum",
        }
    }
}

/// Where in a file a problem was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Location {
    pub path: PathBuf,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.display())?;
        if let Some(l) = self.line {
            write!(f, ":{l}")?;
            if let Some(c) = self.column {
                write!(f, ":{c}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{at}: {message}")]
    Parse { at: Location, message: String },
    #[error("{at}: cannot tell a polytope from a spectrum (expected a \"vertices\" or an \"atoms\" key); pass --kind")]
    UnknownShape { at: Location },
    #[error("{at}: {source}")]
    Invalid {
        at: Location,
        #[source]
        source: ehrhart_core::Error,
    },
}

fn at(path: &Path) -> Location {
    Location {
        path: path.to_path_buf(),
        line: None,
        column: None,
    }
}

fn parse_error(path: &Path, e: serde_json::Error) -> InputError {
    InputError::Parse {
        at: Location {
            path: path.to_path_buf(),
            line: Some(e.line()),
            column: Some(e.column()),
        },
        message: e.to_string(),
    }
}

/// Parses file contents; `path` is only used in diagnostics.
pub fn parse_input(text: &str, path: &Path, kind: InputKind) -> Result<Input, InputError> {
    let kind = match kind {
        InputKind::Auto => {
            let value: Value = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
            match (value.get("vertices"), value.get("atoms")) {
                (Some(_), None) => InputKind::Polytope,
                (None, Some(_)) => InputKind::Spectrum,
                _ => return Err(InputError::UnknownShape { at: at(path) }),
            }
        }
        k => k,
    };
    match kind {
        InputKind::Polytope => {
            let file: PolytopeFile =
                serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
            LatticePolytope::new(file.dim, file.vertices)
                .map(Input::Polytope)
                .map_err(|source| InputError::Invalid {
                    at: at(path),
                    source,
                })
        }
        _ => {
            let file: SpectrumFile =
                serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
            spectrum_from_file(&file)
                .map(Input::Spectrum)
                .map_err(|source| InputError::Invalid {
                    at: at(path),
                    source,
                })
        }
    }
}

pub fn spectrum_from_file(file: &SpectrumFile) -> ehrhart_core::Result<FractionalSpectrum> {
    let mut pairs = Vec::with_capacity(file.atoms.len());
    for (i, &(num, den, mult)) in file.atoms.iter().enumerate() {
        if den == 0 {
            return Err(ehrhart_core::Error::InvalidSpectrum(format!(
                "atom {i} has denominator 0"
            )));
        }
        let beta = rat(num, den);
        if beta.is_negative() {
            return Err(ehrhart_core::Error::ExponentOutOfRange {
                exponent: beta.to_string(),
                dim: file.dim,
            });
        }
        pairs.push((beta, mult));
    }
    FractionalSpectrum::from_pairs(file.dim, pairs)
}

pub fn load(path: &Path, kind: InputKind) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_input(&text, path, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehrhart_core::series::int;

    fn p() -> &'static Path {
        Path::new("mem.json")
    }

    #[test]
    fn detects_polytopes_and_spectra() {
        let poly = parse_input(
            r#"{"dim": 1, "vertices": [[-1], [2]]}"#,
            p(),
            InputKind::Auto,
        )
        .unwrap();
        assert!(matches!(poly, Input::Polytope(_)));
        let spec = parse_input(
            r#"{"dim": 2, "atoms": [[1, 2, 1], [1, 1, 3], [3, 2, 1]]}"#,
            p(),
            InputKind::Auto,
        )
        .unwrap();
        let Input::Spectrum(s) = spec else { panic!() };
        assert_eq!(s.multiplicity(&int(1)), 3);
        assert_eq!(s.mu(), 5);
    }

    #[test]
    fn diagnostics_carry_positions() {
        let err = parse_input(
            "{\"dim\": 2,\n \"vertices\": [[1, 0], [0, x]]}",
            p(),
            InputKind::Auto,
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("mem.json:2:"), "{msg}");
        let err = parse_input(r#"{"dim": 1}"#, p(), InputKind::Auto).unwrap_err();
        assert!(matches!(err, InputError::UnknownShape { .. }));
        let err = parse_input(
            r#"{"dim": 1, "vertices": [[1], [2]]}"#,
            p(),
            InputKind::Auto,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            InputError::Invalid {
                source: ehrhart_core::Error::OriginNotInterior,
                ..
            }
        ));
        let err = parse_input(
            r#"{"dim": 1, "atoms": [[1, 0, 1]]}"#,
            p(),
            InputKind::Spectrum,
        )
        .unwrap_err();
        assert!(matches!(err, InputError::Invalid { .. }));
    }

    #[test]
    fn files_round_trip() {
        let s = FractionalSpectrum::from_pairs(1, [(rat(1, 3), 1), (rat(2, 3), 2)]).unwrap();
        assert_eq!(spectrum_from_file(&SpectrumFile::from(&s)).unwrap(), s);
    }
}
