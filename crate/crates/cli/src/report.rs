//! Machine-readable reports.
//!
//! Exact rationals are written as `{"num": "...", "den": "..."}` with decimal
//! strings; floating point values only appear for numeric roots and timing.

use std::str::FromStr;

use ehrhart_core::{QPolynomial, Rational, Verdict};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

/// Digits after the decimal point for numeric roots.
pub const ROOT_PRECISION: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exact {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for Exact {
    fn from(r: &Rational) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl Exact {
    pub fn to_rational(&self) -> Option<Rational> {
        let num = BigInt::from_str(&self.num).ok()?;
        let den = BigInt::from_str(&self.den).ok()?;
        (den != BigInt::from(0)).then(|| Rational::new(num, den))
    }
}

pub fn exact_coeffs(p: &QPolynomial) -> Vec<Exact> {
    p.coeffs().iter().map(Exact::from).collect()
}

/// A numeric root as fixed-precision decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub re: String,
    pub im: String,
}

impl Root {
    pub fn new(re: f64, im: f64) -> Self {
        // avoid printing "-0.000..." for values that round to zero
        let fmt = |v: f64| {
            let s = format!("{v:.ROOT_PRECISION$}");
            if s.trim_start_matches('-')
                .trim_matches(|c| c == '0' || c == '.')
                .is_empty()
            {
                format!("{:.ROOT_PRECISION$}", 0.0)
            } else {
                s
            }
        };
        Self {
            re: fmt(re),
            im: fmt(im),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub reasons: Vec<String>,
}

impl Check {
    pub fn new(name: &str, verdict: Verdict) -> Self {
        let (status, reasons) = match verdict {
            Verdict::Pass => (Status::Pass, Vec::new()),
            Verdict::Fail(r) => (Status::Fail, r),
            Verdict::NotApplicable(r) => (Status::NotApplicable, vec![r]),
        };
        Self {
            name: name.to_string(),
            status,
            reasons,
        }
    }

    pub fn from_bool(name: &str, ok: bool, reason: impl FnOnce() -> String) -> Self {
        Self::new(
            name,
            if ok {
                Verdict::Pass
            } else {
                Verdict::Fail(vec![reason()])
            },
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub path: Option<String>,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetReport {
    pub normal: Vec<i64>,
    pub rhs: i64,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeReport {
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<FacetReport>,
    pub simplicial: bool,
    pub reflexive: bool,
    pub normalized_volume: u64,
    pub delta: Vec<u64>,
    pub ehrhart_polynomial: Vec<Exact>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumAtom {
    pub exponent: Exact,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaClass {
    pub alpha: Exact,
    pub theta: Vec<u64>,
    /// Coefficients of `L^α_ψ`, constant term first.
    pub polynomial: Vec<Exact>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub kind: String,
    pub root_line: String,
    pub trivial_roots: Vec<i64>,
    pub mu: u64,
    pub dim_h0: u64,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootFactorizationReport {
    pub applicable: bool,
    pub reason: Option<String>,
    pub circle_deviation: Option<String>,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub linear_roots: Vec<i64>,
    pub quotient: Vec<Exact>,
    pub predicted_line: Option<Exact>,
    pub quotient_on_line: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: InputDescriptor,
    pub dim: usize,
    pub polytope: Option<PolytopeReport>,
    pub mu: u64,
    pub spectrum: Vec<SpectrumAtom>,
    pub theta: Vec<u64>,
    pub theta_classes: Vec<ThetaClass>,
    /// Coefficients of `L_ψ`, constant term first.
    pub hodge_ehrhart: Vec<Exact>,
    pub classification: ClassificationReport,
    pub root_precision: usize,
    pub roots: Vec<Root>,
    pub root_factorization: RootFactorizationReport,
    pub warnings: Vec<String>,
    pub checks: Vec<Check>,
    pub timing: Timing,
}

impl AnalysisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorReport {
    pub schema: u32,
    pub inputs: Vec<InputDescriptor>,
    pub forced: bool,
    pub spectrum: Vec<SpectrumAtom>,
    pub theta: Vec<u64>,
    /// Full analysis of the product; absent when the reflexivity guard was bypassed.
    pub analysis: Option<AnalysisReport>,
    pub checks: Vec<Check>,
    pub timing: Timing,
}

impl TensorReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
            && self.analysis.as_ref().is_none_or(AnalysisReport::passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzFailure {
    pub index: usize,
    pub vertices: Vec<Vec<i64>>,
    pub failed_checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub schema: u32,
    pub seed: u64,
    pub count: usize,
    pub dim_max: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<FuzzFailure>,
    pub timing: Timing,
}
