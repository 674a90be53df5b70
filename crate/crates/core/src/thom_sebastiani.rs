//! Thom-Sebastiani sums: spectra convolve, theta-vectors multiply when a
//! factor is reflexive, and Ehrhart series of free sums multiply.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::ehrhart::{delta_vector, ehrhart_series};
use crate::error::{Error, Result};
use crate::geometry::{free_sum, LatticePolytope};
use crate::series::{
    one_minus_z_pow, series_from_numerator, FractionalSpectrum, Rational, TruncatedSeries,
};
use crate::theta::{spectrum_to_theta, ThetaFamily};
use crate::verdict::Verdict;

/// `{β₁ + β₂}` with multiplicity `m₁ · m₂`, in dimension `n₁ + n₂`.
pub fn spectrum_product(s1: &FractionalSpectrum, s2: &FractionalSpectrum) -> FractionalSpectrum {
    let mut atoms: BTreeMap<Rational, u64> = BTreeMap::new();
    for (b1, m1) in s1.atoms() {
        for (b2, m2) in s2.atoms() {
            *atoms.entry(b1 + b2).or_insert(0) += m1 * m2;
        }
    }
    FractionalSpectrum::new(s1.dim() + s2.dim(), atoms)
        .expect("sums of exponents in [0,n1] and [0,n2] lie in [0,n1+n2]")
}

/// Theta-family of the sum; refuses unless one factor is reflexive.
pub fn theta_product(tf1: &ThetaFamily, tf2: &ThetaFamily) -> Result<ThetaFamily> {
    if !tf1.is_reflexive() && !tf2.is_reflexive() {
        return Err(Error::ReflexivityRequired);
    }
    spectrum_to_theta(&spectrum_product(&tf1.to_spectrum()?, &tf2.to_spectrum()?))
}

fn compare_series(label: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Verdict {
    let failures: Vec<_> = (0..=lhs.order())
        .filter(|&m| lhs.coeff(m) != rhs.coeff(m))
        .map(|m| format!("{label} z^{m}: {} != {}", lhs.coeff(m), rhs.coeff(m)))
        .collect();
    Verdict::from_failures(failures)
}

/// `Ehr_ψ = (1 - z) Ehr_ψ' Ehr_ψ''` up to `z^order`, with `ψ` from [`theta_product`].
pub fn ehr_product_check(tf1: &ThetaFamily, tf2: &ThetaFamily, order: usize) -> Result<Verdict> {
    if !tf1.is_reflexive() || !tf2.is_reflexive() {
        return Err(Error::ReflexivityRequired);
    }
    let prod = theta_product(tf1, tf2)?;
    let lhs = series_from_numerator(&prod.theta_total(), prod.dim(), order);
    let rhs = series_from_numerator(&tf1.theta_total(), tf1.dim(), order)
        .mul(&series_from_numerator(&tf2.theta_total(), tf2.dim(), order))
        .mul_polynomial(&one_minus_z_pow(1));
    Ok(compare_series("Ehr", &lhs, &rhs))
}

/// `Ehr_{P⊕Q} = (1 - z) Ehr_P Ehr_Q` up to `z^order`, every series from
/// lattice point counts.
pub fn free_sum_ehrhart_check(
    p: &LatticePolytope,
    q: &LatticePolytope,
    order: u64,
) -> Result<Verdict> {
    if !p.is_reflexive() || !q.is_reflexive() {
        return Err(Error::ReflexivityRequired);
    }
    let lhs = ehrhart_series(&free_sum(p, q), order);
    let rhs = ehrhart_series(p, order)
        .mul(&ehrhart_series(q, order))
        .mul_polynomial(&one_minus_z_pow(1));
    Ok(compare_series("Ehr", &lhs, &rhs))
}

/// `δ_{P⊕Q}` against the product of the spectrum-derived theta-families.
pub fn free_sum_coherence_check(p: &LatticePolytope, q: &LatticePolytope) -> Result<Verdict> {
    let tp = spectrum_to_theta(&crate::spectrum::spectrum_from_polytope(p)?)?;
    let tq = spectrum_to_theta(&crate::spectrum::spectrum_from_polytope(q)?)?;
    let theta = theta_product(&tp, &tq)?.theta_total();
    let delta = delta_vector(&free_sum(p, q))?;
    Ok(if theta == delta {
        Verdict::Pass
    } else {
        Verdict::Fail(alloc::vec![format!(
            "delta of free sum {delta} != theta product {theta}"
        )])
    })
}
