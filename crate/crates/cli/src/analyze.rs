//! The analysis pipeline behind `analyze` and `tensor`.

use std::time::Instant;

use ehrhart_core::ehrhart::{
    betke_mcmullen_split, degree_and_leading_check, delta_vector, ehrhart_polynomial,
    ehrhart_reciprocity_check, hibi_palindromic_check, lower_bound_check, polynomial_agreement,
    special_values_check, weighted_l0_consistency_check,
};
use ehrhart_core::geometry::normalized_volume;
use ehrhart_core::hodge::{
    classify_with_tolerance, coefficient_identities, hodge_ehrhart_polynomials,
    line_necessity_check, reciprocity_check, reflexivity_equivalence_check, root_sum_product_check,
    rv_analysis_with_tolerance, theta_symmetry_check, vanishing_order_check, LINE_TOLERANCE,
};
use ehrhart_core::series::int;
use ehrhart_core::spectrum::{
    oracle_equivalence_check, spectrum_from_polytope, theta_delta_bridge_check,
};
use ehrhart_core::thom_sebastiani::{
    ehr_product_check, free_sum_coherence_check, free_sum_ehrhart_check, spectrum_product,
    theta_product,
};
use ehrhart_core::{
    spectrum_to_theta, Error, FractionalSpectrum, LatticePolytope, RvOutcome, Verdict,
};

use num_complex::Complex64;

use crate::formats::Input;
use crate::report::{
    exact_coeffs, AnalysisReport, Check, ClassificationReport, Exact, FacetReport, InputDescriptor,
    PolytopeReport, Root, RootFactorizationReport, SpectrumAtom, TensorReport, ThetaClass, Timing,
    ROOT_PRECISION, SCHEMA,
};

/// Order up to which Ehrhart series of Thom-Sebastiani sums are compared.
pub const DEFAULT_SERIES_ORDER: u64 = 8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Options {
    /// Oracle truncation; `n + 3` when unset.
    pub trunc: Option<u64>,
    /// Reciprocity range `m = 1..=mmax`.
    pub mmax: u64,
    pub tol: f64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            trunc: None,
            mmax: 10,
            tol: LINE_TOLERANCE,
        }
    }
}

fn elapsed(start: Instant) -> Timing {
    Timing {
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

pub fn spectrum_atoms(s: &FractionalSpectrum) -> Vec<SpectrumAtom> {
    s.atoms()
        .iter()
        .map(|(b, &m)| SpectrumAtom {
            exponent: Exact::from(b),
            multiplicity: m,
        })
        .collect()
}

fn root_factorization_report(
    outcome: ehrhart_core::Result<RvOutcome>,
    checks: &mut Vec<Check>,
) -> RootFactorizationReport {
    let empty = |reason: String, deviation: Option<f64>| RootFactorizationReport {
        applicable: false,
        reason: Some(reason),
        circle_deviation: deviation.map(|d| format!("{d:.3e}")),
        k: None,
        r: None,
        linear_roots: Vec::new(),
        quotient: Vec::new(),
        predicted_line: None,
        quotient_on_line: None,
    };
    match outcome {
        Ok(RvOutcome::Applicable(f)) => {
            let mut failures = Vec::new();
            if !f.exact {
                failures.push(String::from("linear factors do not divide L_psi exactly"));
            }
            if !f.quotient_on_line {
                failures.push(format!(
                    "quotient roots are off the line Re z = {}",
                    f.predicted_line
                ));
            }
            checks.push(Check::new(
                "root_factorization",
                Verdict::from_failures(failures).and(f.dichotomy.clone()),
            ));
            RootFactorizationReport {
                applicable: true,
                reason: None,
                circle_deviation: None,
                k: Some(f.k),
                r: Some(f.r),
                linear_roots: f.linear_roots.clone(),
                quotient: exact_coeffs(&f.quotient),
                predicted_line: Some(Exact::from(&f.predicted_line)),
                quotient_on_line: Some(f.quotient_on_line),
            }
        }
        Ok(RvOutcome::NotApplicable {
            reason,
            circle_deviation,
        }) => {
            checks.push(Check::new(
                "root_factorization",
                Verdict::NotApplicable(reason.clone()),
            ));
            empty(reason, circle_deviation)
        }
        Err(e) => {
            let reason = format!("root finding failed: {e}");
            checks.push(Check::new(
                "root_factorization",
                Verdict::NotApplicable(reason.clone()),
            ));
            empty(reason, None)
        }
    }
}

/// Roots ordered by their printed values, so conjugate pairs sit together
/// whatever the last-bit noise of the eigenvalue solver.
fn sorted_roots(roots: &[Complex64]) -> Vec<Root> {
    let mut out: Vec<Root> = roots.iter().map(|z| Root::new(z.re, z.im)).collect();
    let key = |r: &Root| {
        (
            r.re.parse::<f64>().unwrap_or(0.0),
            r.im.parse::<f64>().unwrap_or(0.0),
        )
    };
    out.sort_by(|a, b| {
        key(a)
            .partial_cmp(&key(b))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Everything that only depends on the spectrum.
fn spectrum_part(
    spec: &FractionalSpectrum,
    input: InputDescriptor,
    opts: &Options,
    mut checks: Vec<Check>,
    mut warnings: Vec<String>,
    start: Instant,
) -> ehrhart_core::Result<AnalysisReport> {
    let tf = spectrum_to_theta(spec)?;
    let he = hodge_ehrhart_polynomials(&tf);

    checks.push(Check::from_bool(
        "spectrum_symmetry",
        spec.is_symmetric(),
        || format!("spectrum {spec} is not symmetric about {}/2", spec.dim()),
    ));
    checks.push(Check::new("theta_symmetry", theta_symmetry_check(&tf)));
    checks.push(Check::new(
        "hodge_ehrhart_reciprocity",
        reciprocity_check(&tf, opts.mmax),
    ));
    checks.push(Check::new("vanishing_order", vanishing_order_check(&tf)));
    checks.push(Check::new(
        "coefficient_identities",
        coefficient_identities(&tf),
    ));
    checks.push(Check::new(
        "root_sum_product",
        match root_sum_product_check(&tf) {
            Ok(v) => v,
            Err(e) => Verdict::NotApplicable(e.to_string()),
        },
    ));
    checks.push(Check::new(
        "betke_mcmullen_split",
        match betke_mcmullen_split(&tf) {
            Ok(_) => Verdict::Pass,
            Err(e) => Verdict::Fail(vec![e.to_string()]),
        },
    ));
    checks.push(Check::new(
        "reflexivity_equivalence",
        reflexivity_equivalence_check(&tf, opts.mmax),
    ));
    checks.push(Check::new(
        "line_necessity",
        match line_necessity_check(&tf, opts.tol) {
            Ok(v) => v,
            Err(e) => Verdict::NotApplicable(e.to_string()),
        },
    ));

    let class = classify_with_tolerance(&tf, opts.tol);
    checks.push(Check::new(
        "classification_consistency",
        class.consistency.clone(),
    ));
    let root_factorization =
        root_factorization_report(rv_analysis_with_tolerance(&tf, opts.tol), &mut checks);
    warnings.extend(class.warnings.iter().cloned());

    let theta_classes = tf
        .classes()
        .iter()
        .map(|(a, v)| ThetaClass {
            alpha: Exact::from(a),
            theta: v.0.clone(),
            polynomial: exact_coeffs(&he.class(a)),
        })
        .collect();

    Ok(AnalysisReport {
        schema: SCHEMA,
        input,
        dim: spec.dim(),
        polytope: None,
        mu: spec.mu(),
        spectrum: spectrum_atoms(spec),
        theta: tf.theta_total().0,
        theta_classes,
        hodge_ehrhart: exact_coeffs(&he.total),
        classification: ClassificationReport {
            kind: class.kind.as_str().to_string(),
            root_line: class.root_line.as_str().to_string(),
            trivial_roots: class.trivial_roots.clone(),
            mu: class.mu,
            dim_h0: class.dim_h0,
            warnings: class.warnings.clone(),
        },
        root_precision: ROOT_PRECISION,
        roots: sorted_roots(&class.roots),
        root_factorization,
        warnings,
        checks,
        timing: elapsed(start),
    })
}

pub fn analyze_spectrum(
    spec: &FractionalSpectrum,
    input: InputDescriptor,
    opts: &Options,
) -> ehrhart_core::Result<AnalysisReport> {
    spectrum_part(spec, input, opts, Vec::new(), Vec::new(), Instant::now())
}

pub fn analyze_polytope(
    p: &LatticePolytope,
    input: InputDescriptor,
    opts: &Options,
) -> ehrhart_core::Result<AnalysisReport> {
    let start = Instant::now();
    let n = p.dim();
    let spec = spectrum_from_polytope(p)?;
    let tf = spectrum_to_theta(&spec)?;
    let volume = normalized_volume(p);
    let delta = delta_vector(p)?;
    let lp = ehrhart_polynomial(p);
    let trunc = opts.trunc.unwrap_or(n as u64 + 3);

    let mut warnings = Vec::new();
    if !p.is_simplicial() {
        warnings.push(String::from(
            "non-simplicial facets were triangulated with their own vertices",
        ));
    }
    let checks = vec![
        Check::new(
            "oracle_equivalence",
            oracle_equivalence_check(p, &spec, trunc, &int(trunc as i64)),
        ),
        Check::new("theta_equals_delta", theta_delta_bridge_check(p, &spec)?),
        Check::from_bool("mu_equals_volume", spec.mu() == volume, || {
            format!("mu = {} but normalized volume = {volume}", spec.mu())
        }),
        Check::new(
            "ehrhart_reciprocity",
            ehrhart_reciprocity_check(p, opts.mmax),
        ),
        Check::from_bool(
            "palindromic_delta_matches_reflexive",
            hibi_palindromic_check(&delta) == p.is_reflexive(),
            || format!("delta {delta} palindromic disagrees with facet distances"),
        ),
        Check::from_bool(
            "integer_spectrum_matches_reflexive",
            spec.has_only_integer_exponents() == p.is_reflexive(),
            || String::from("integer spectrum disagrees with facet distances"),
        ),
        Check::new(
            "delta_special_values",
            special_values_check(p, &delta, volume),
        ),
        Check::new(
            "ehrhart_degree_and_leading",
            degree_and_leading_check(p, &lp, volume),
        ),
        Check::new("lower_bound", lower_bound_check(&delta)),
        Check::new(
            "weighted_l0_consistency",
            weighted_l0_consistency_check(p, &tf.theta0()),
        ),
        Check::new(
            "ehrhart_equals_hodge_ehrhart",
            polynomial_agreement(&lp, &hodge_ehrhart_polynomials(&tf).total),
        ),
    ];

    let polytope = PolytopeReport {
        vertices: p.vertices().to_vec(),
        facets: p
            .facets()
            .iter()
            .map(|f| FacetReport {
                normal: f.normal().to_vec(),
                rhs: f.rhs(),
                vertices: f.vertex_indices().to_vec(),
            })
            .collect(),
        simplicial: p.is_simplicial(),
        reflexive: p.is_reflexive(),
        normalized_volume: volume,
        delta: delta.0.clone(),
        ehrhart_polynomial: exact_coeffs(&lp),
    };
    let mut report = spectrum_part(&spec, input, opts, checks, warnings, start)?;
    report.polytope = Some(polytope);
    report.timing = elapsed(start);
    Ok(report)
}

pub fn analyze_input(
    input: &Input,
    desc: InputDescriptor,
    opts: &Options,
) -> ehrhart_core::Result<AnalysisReport> {
    match input {
        Input::Polytope(p) => analyze_polytope(p, desc, opts),
        Input::Spectrum(s) => analyze_spectrum(s, desc, opts),
    }
}

fn input_spectrum(input: &Input) -> ehrhart_core::Result<FractionalSpectrum> {
    match input {
        Input::Polytope(p) => spectrum_from_polytope(p),
        Input::Spectrum(s) => Ok(s.clone()),
    }
}

/// Thom-Sebastiani sum of two inputs. Without `force`, refuses unless one
/// factor is reflexive; with `force`, a non-reflexive pair yields only the
/// spectrum convolution.
pub fn tensor(
    a: (&Input, InputDescriptor),
    b: (&Input, InputDescriptor),
    force: bool,
    opts: &Options,
) -> ehrhart_core::Result<TensorReport> {
    let start = Instant::now();
    let s1 = input_spectrum(a.0)?;
    let s2 = input_spectrum(b.0)?;
    let tf1 = spectrum_to_theta(&s1)?;
    let tf2 = spectrum_to_theta(&s2)?;
    let product = spectrum_product(&s1, &s2);
    let inputs = vec![a.1, b.1];
    let mut checks = vec![Check::from_bool(
        "mu_multiplicative",
        product.mu() == s1.mu() * s2.mu(),
        || format!("mu {} != {} * {}", product.mu(), s1.mu(), s2.mu()),
    )];

    let family = match theta_product(&tf1, &tf2) {
        Ok(f) => f,
        Err(Error::ReflexivityRequired) if force => {
            return Ok(TensorReport {
                schema: SCHEMA,
                inputs,
                forced: true,
                theta: spectrum_to_theta(&product)?.theta_total().0,
                spectrum: spectrum_atoms(&product),
                analysis: None,
                checks,
                timing: elapsed(start),
            });
        }
        Err(e) => return Err(e),
    };

    checks.push(Check::from_bool(
        "theta_multiplicative",
        Some(family.theta_total())
            == tf1
                .theta_total()
                .convolve(&tf2.theta_total())
                .resized(family.dim() + 1),
        || String::from("theta of the sum is not the product of the thetas"),
    ));
    if tf1.is_reflexive() && tf2.is_reflexive() {
        let order = opts.trunc.unwrap_or(DEFAULT_SERIES_ORDER);
        checks.push(Check::new(
            "ehrhart_series_product",
            ehr_product_check(&tf1, &tf2, order as usize)?,
        ));
        checks.push(Check::from_bool(
            "sum_is_reflexive",
            family.is_reflexive(),
            || String::from("sum of reflexive factors is not reflexive"),
        ));
        if let (Input::Polytope(p), Input::Polytope(q)) = (a.0, b.0) {
            checks.push(Check::new(
                "free_sum_ehrhart",
                free_sum_ehrhart_check(p, q, order)?,
            ));
            checks.push(Check::new(
                "free_sum_coherence",
                free_sum_coherence_check(p, q)?,
            ));
        }
    }
    let desc = InputDescriptor {
        path: None,
        kind: String::from("thom_sebastiani_sum"),
    };
    let analysis = analyze_spectrum(&family.to_spectrum()?, desc, opts)?;
    Ok(TensorReport {
        schema: SCHEMA,
        inputs,
        forced: false,
        spectrum: spectrum_atoms(&product),
        theta: family.theta_total().0,
        analysis: Some(analysis),
        checks,
        timing: elapsed(start),
    })
}
