//! Newton-graded spectrum of a polytope at infinity.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;

use num_bigint::BigInt;

use crate::ehrhart::delta_vector;
use crate::error::Result;
use crate::geometry::{half_open_decomposition, LatticePolytope};
use crate::series::{int, one_minus_z_pow, FractionalSeries, FractionalSpectrum, Rational};
use crate::theta::spectrum_to_theta;
use crate::verdict::Verdict;

/// Sum of `z^{ν(x)}` over the box points of the half-open cone decomposition.
pub fn spectrum_from_polytope(p: &LatticePolytope) -> Result<FractionalSpectrum> {
    let mut atoms: BTreeMap<Rational, u64> = BTreeMap::new();
    for cone in half_open_decomposition(p)? {
        for (_, e) in cone.box_points() {
            *atoms.entry(e).or_insert(0) += 1;
        }
    }
    FractionalSpectrum::new(p.dim(), atoms)
}

/// `Σ_{x ∈ Z^n, ν(x) <= order} z^{ν(x)}`, by direct enumeration of `order·P`.
pub fn weighted_sum_oracle(p: &LatticePolytope, order: u64) -> FractionalSeries {
    let mut by_degree: BTreeMap<i64, u64> = BTreeMap::new();
    p.for_each_point(order, |_, k| *by_degree.entry(k).or_insert(0) += 1);
    let scale = BigInt::from(p.newton_scale());
    let terms = by_degree
        .into_iter()
        .map(|(k, c)| (Rational::new(BigInt::from(k), scale.clone()), int(c as i64)))
        .collect();
    FractionalSeries::new(int(order as i64), terms)
}

/// `β` occurs as often as `n - β`.
pub fn spectrum_symmetry_check(spec: &FractionalSpectrum) -> bool {
    spec.is_symmetric()
}

/// Compares `spec` with `(1 - z)^n` times the enumerated weighted sum, on all
/// exponents `<= max_exponent`. Exponents up to `order` are exact.
pub fn oracle_equivalence_check(
    p: &LatticePolytope,
    spec: &FractionalSpectrum,
    order: u64,
    max_exponent: &Rational,
) -> Verdict {
    let product = weighted_sum_oracle(p, order)
        .mul_polynomial(&one_minus_z_pow(p.dim()))
        .truncated(max_exponent);
    let exponents: BTreeSet<&Rational> = product
        .terms()
        .keys()
        .chain(spec.atoms().keys().filter(|e| *e <= product.order()))
        .collect();
    let failures = exponents
        .into_iter()
        .filter_map(|e| {
            let expect = product.coeff(e);
            let got = int(spec.multiplicity(e) as i64);
            (expect != got).then(|| format!("exponent {e}: oracle {expect}, spectrum {got}"))
        })
        .collect();
    Verdict::from_failures(failures)
}

/// `θ = δ`: the class-collapsed theta-vector of the spectrum equals the
/// delta-vector computed from lattice point counts.
pub fn theta_delta_bridge_check(p: &LatticePolytope, spec: &FractionalSpectrum) -> Result<Verdict> {
    let theta = spectrum_to_theta(spec)?.theta_total();
    let delta = delta_vector(p)?;
    Ok(if theta == delta {
        Verdict::Pass
    } else {
        Verdict::Fail(alloc::vec![format!("theta = {theta}, delta = {delta}")])
    })
}

/// Number of box points of each cone, summed: equals the normalized volume.
pub fn box_point_total(p: &LatticePolytope) -> Result<u64> {
    Ok(half_open_decomposition(p)?.iter().map(|c| c.det()).sum())
}
