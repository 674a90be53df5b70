//! Hodge-Ehrhart polynomials of a theta-family: reciprocity, coefficient
//! identities, reflexivity and the location of roots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::roots::find_roots;
use crate::series::{
    binomial, factorial, int, polynomial_from_theta, IntVector, QPolynomial, Rational,
};
use crate::theta::ThetaFamily;
use crate::verdict::Verdict;

/// Default tolerance for line and unit-circle membership of numeric roots.
pub const LINE_TOLERANCE: f64 = 1e-8;

fn sign_pow(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Per-class polynomials `L^α_ψ` and their sum `L_ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeEhrhart {
    pub per_class: BTreeMap<Rational, QPolynomial>,
    pub total: QPolynomial,
}

impl HodgeEhrhart {
    pub fn class(&self, alpha: &Rational) -> QPolynomial {
        self.per_class
            .get(alpha)
            .cloned()
            .unwrap_or_else(QPolynomial::zero)
    }
}

pub fn hodge_ehrhart_polynomials(tf: &ThetaFamily) -> HodgeEhrhart {
    let n = tf.dim();
    let per_class: BTreeMap<_, _> = tf
        .classes()
        .iter()
        .map(|(a, v)| (a.clone(), polynomial_from_theta(v, n)))
        .collect();
    let total = per_class
        .values()
        .fold(QPolynomial::zero(), |acc, p| &acc + p);
    HodgeEhrhart { per_class, total }
}

/// `α` paired with `1 - α`, and `0` with itself.
fn partner(alpha: &Rational) -> Rational {
    if alpha.is_zero() {
        Rational::zero()
    } else {
        int(1) - alpha
    }
}

/// `θ^0(z) = z^n θ^0(1/z)`, `θ^α(z) = z^{n+1} θ^{1-α}(1/z)` and `θ^α_0 = 0`
/// for `α ≠ 0`.
pub fn theta_symmetry_check(tf: &ThetaFamily) -> Verdict {
    let n = tf.dim();
    let mut failures = Vec::new();
    let t0 = tf.theta0();
    if !t0.is_palindromic(n) {
        failures.push(format!("theta^0 = {t0} is not palindromic of degree {n}"));
    }
    for (alpha, v) in tf.classes().iter().filter(|(a, _)| !a.is_zero()) {
        if v.get(0) != 0 {
            failures.push(format!("theta^{alpha}_0 = {} is not zero", v.get(0)));
        }
        let other = tf.class(&partner(alpha));
        for p in 1..=n {
            if v.get(p) != other.get(n + 1 - p) {
                failures.push(format!(
                    "theta^{alpha}_{p} = {} but theta^{}_{} = {}",
                    v.get(p),
                    partner(alpha),
                    n + 1 - p,
                    other.get(n + 1 - p)
                ));
            }
        }
    }
    Verdict::from_failures(failures)
}

/// Per-class and total reciprocity, evaluated exactly for `m = 1..=m_max`.
pub fn reciprocity_check(tf: &ThetaFamily, m_max: u64) -> Verdict {
    let n = tf.dim();
    let he = hodge_ehrhart_polynomials(tf);
    let sign = sign_pow(n);
    let l0 = he.class(&Rational::zero());
    let mut failures = Vec::new();
    for m in 1..=m_max as i64 {
        for alpha in tf.classes().keys() {
            let la = he.class(alpha);
            let lhs = la.evaluate_int(-m);
            let rhs = if alpha.is_zero() {
                &sign * l0.evaluate_int(m - 1)
            } else {
                &sign * he.class(&partner(alpha)).evaluate_int(m)
            };
            if lhs != rhs {
                failures.push(format!("class {alpha}, m={m}: {lhs} != {rhs}"));
            }
        }
        let lhs = he.total.evaluate_int(-m);
        let rhs = &sign * (he.total.evaluate_int(m) + l0.evaluate_int(m - 1) - l0.evaluate_int(m));
        if lhs != rhs {
            failures.push(format!("total, m={m}: L(-m) = {lhs}, expected {rhs}"));
        }
    }
    Verdict::from_failures(failures)
}

/// Leading zeros of `θ^α` match the initial run of zeros of `L^α_ψ(0), L^α_ψ(1), ...`.
pub fn vanishing_order_check(tf: &ThetaFamily) -> Verdict {
    let n = tf.dim();
    let he = hodge_ehrhart_polynomials(tf);
    let mut items: Vec<(String, IntVector, QPolynomial)> = tf
        .classes()
        .iter()
        .map(|(a, v)| (format!("class {a}"), v.clone(), he.class(a)))
        .collect();
    items.push((String::from("total"), tf.theta_total(), he.total.clone()));
    let failures = items
        .into_iter()
        .filter_map(|(label, theta, poly)| {
            let zeros = theta.lowest_nonzero()?;
            let run = (0..=n as i64)
                .take_while(|&m| poly.evaluate_int(m).is_zero())
                .count();
            (run != zeros).then(|| {
                format!("{label}: theta has {zeros} leading zeros, L vanishes on 0..{run}")
            })
        })
        .collect();
    Verdict::from_failures(failures)
}

/// The five coefficient identities relating `L_ψ` to `L^0_ψ`, `μ` and `dim H_0`.
pub fn coefficient_identities(tf: &ThetaFamily) -> Verdict {
    let n = tf.dim();
    let he = hodge_ehrhart_polynomials(tf);
    let c = |i: usize| he.total.coeff(i);
    let c0 = |i: usize| he.class(&Rational::zero()).coeff(i);
    let nfact = Rational::from_integer(factorial(n));
    let mu = int(tf.mu() as i64);
    let h0 = int(tf.dim_h0() as i64);
    let mut failures = Vec::new();

    if &nfact * c(n) != mu {
        failures.push(format!("n! c_n = {} != mu = {mu}", &nfact * c(n)));
    }
    for j in (1..=n).step_by(2) {
        if c(n - j) != c0(n - j) {
            failures.push(format!(
                "j={j}: c_{} = {} != c^0 = {}",
                n - j,
                c(n - j),
                c0(n - j)
            ));
        }
    }
    for j in 1..=n {
        let lhs = (int(1) - sign_pow(j)) * c(n - j);
        let rhs: Rational = (0..j)
            .map(|l| {
                sign_pow(j + 1 - l)
                    * Rational::from_integer(binomial((n - l) as i64, (n - j) as i64))
                    * c0(n - l)
            })
            .sum();
        if lhs != rhs {
            failures.push(format!(
                "j={j}: (1-(-1)^j) c_{} = {lhs}, sum = {rhs}",
                n - j
            ));
        }
    }
    let t00 = int(tf.theta0().get(0) as i64);
    if c(0) != c0(0) || c0(0) != t00 {
        failures.push(format!(
            "c_0 = {}, c^0_0 = {}, theta^0_0 = {t00}",
            c(0),
            c0(0)
        ));
    }
    if n >= 1 {
        let lhs = &nfact * c(n - 1);
        let rhs = int(n as i64) * h0 / int(2);
        if lhs != rhs {
            failures.push(format!("n! c_(n-1) = {lhs} != (n/2) dim H_0 = {rhs}"));
        }
    }
    Verdict::from_failures(failures)
}

/// Vieta's sum and product of the roots of `L_ψ` against `μ`, `dim H_0`, `θ_0`.
pub fn root_sum_product_check(tf: &ThetaFamily) -> Result<Verdict> {
    let n = tf.dim();
    let he = hodge_ehrhart_polynomials(tf);
    let cn = he.total.coeff(n);
    if cn.is_zero() || n == 0 {
        return Err(Error::DegenerateDegree);
    }
    let mu = int(tf.mu() as i64);
    let sum = -he.total.coeff(n - 1) / &cn;
    let prod = sign_pow(n) * he.total.coeff(0) / &cn;
    let expect_sum = -(int(n as i64) / int(2)) * int(tf.dim_h0() as i64) / &mu;
    let expect_prod =
        sign_pow(n) * Rational::from_integer(factorial(n)) * int(tf.theta_total().get(0) as i64)
            / &mu;
    let mut failures = Vec::new();
    if sum != expect_sum {
        failures.push(format!("sum of roots {sum} != {expect_sum}"));
    }
    if prod != expect_prod {
        failures.push(format!("product of roots {prod} != {expect_prod}"));
    }
    Ok(Verdict::from_failures(failures))
}

/// Distinct integer roots, ascending (rational root theorem, exact).
pub fn integer_roots(p: &QPolynomial) -> Vec<i64> {
    if p.is_zero() {
        return Vec::new();
    }
    let coeffs = p.primitive_integer_coeffs();
    let shift = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut out = Vec::new();
    if shift > 0 {
        out.push(0);
    }
    let a0 = coeffs[shift].abs();
    let lead = coeffs.last().cloned().unwrap_or_else(BigInt::one).abs();
    // Cauchy bound on |root|
    let cauchy = coeffs[shift..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .map(|m| m / &lead + 1)
        .unwrap_or_else(BigInt::one);
    let bound = cauchy.min(a0.clone()).to_u64().unwrap_or(u64::MAX);
    for d in 1..=bound {
        if !(&a0 % BigInt::from(d)).is_zero() {
            continue;
        }
        for r in [-(d as i64), d as i64] {
            if p.evaluate_int(r).is_zero() {
                out.push(r);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Divides out every integer root with its multiplicity.
fn strip_integer_roots(p: &QPolynomial) -> QPolynomial {
    let mut q = p.clone();
    for r in integer_roots(p) {
        let lin = QPolynomial::linear(int(-r));
        loop {
            let (quot, rem) = q.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            q = quot;
        }
    }
    q
}

pub fn line_test(p: &QPolynomial, line_re: &Rational, exclude_integers: bool) -> Result<bool> {
    line_test_with_tolerance(p, line_re, exclude_integers, LINE_TOLERANCE)
}

/// Every (non-integer, if `exclude_integers`) root `r` has
/// `|Re r - line_re| < tol · max(1, |r|)`.
pub fn line_test_with_tolerance(
    p: &QPolynomial,
    line_re: &Rational,
    exclude_integers: bool,
    tol: f64,
) -> Result<bool> {
    let q = if exclude_integers {
        strip_integer_roots(p)
    } else {
        p.clone()
    };
    if q.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    let line = line_re.to_f64().unwrap_or(f64::NAN);
    Ok(find_roots(&q)?
        .iter()
        .all(|r| (r.re - line).abs() < tol * r.norm().max(1.0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Reflexive,
    AntiReflexive,
    Mixed,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Reflexive => "reflexive",
            Kind::AntiReflexive => "anti_reflexive",
            Kind::Mixed => "mixed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootLine {
    /// All roots on `Re z = -1/2`.
    Cl,
    /// Non-integer roots on `Re z = -1/2`.
    ClStar,
    /// All roots on `Re z = 0`.
    Acl,
    /// Non-integer roots on `Re z = 0`.
    AclStar,
    None,
}

impl RootLine {
    pub fn as_str(self) -> &'static str {
        match self {
            RootLine::Cl => "CL",
            RootLine::ClStar => "CL*",
            RootLine::Acl => "ACL",
            RootLine::AclStar => "ACL*",
            RootLine::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub kind: Kind,
    pub root_line: RootLine,
    pub trivial_roots: Vec<i64>,
    pub roots: Vec<Complex64>,
    pub mu: u64,
    pub dim_h0: u64,
    pub warnings: Vec<String>,
    /// `reflexive ⟺ θ palindromic of degree n` and
    /// `anti-reflexive ⟺ z^{n+1} θ(1/z) = θ(z)`.
    pub consistency: Verdict,
}

pub fn classify(tf: &ThetaFamily) -> Classification {
    classify_with_tolerance(tf, LINE_TOLERANCE)
}

pub fn classify_with_tolerance(tf: &ThetaFamily, tol: f64) -> Classification {
    let n = tf.dim();
    let mut warnings = Vec::new();
    let theta = tf.theta_total();
    let kind = if theta.is_zero() {
        warnings.push(String::from(
            "all theta classes vanish; classified as mixed",
        ));
        Kind::Mixed
    } else if tf.theta_ne0().is_zero() {
        Kind::Reflexive
    } else if tf.theta0().is_zero() {
        Kind::AntiReflexive
    } else {
        Kind::Mixed
    };

    let mut failures = Vec::new();
    if !theta.is_zero() {
        let palin = theta.is_palindromic(n);
        let anti = theta
            .resized(n + 2)
            .is_some_and(|t| t.is_palindromic(n + 1));
        if palin != (kind == Kind::Reflexive) {
            failures.push(format!(
                "reflexive = {}, theta palindromic = {palin}",
                kind == Kind::Reflexive
            ));
        }
        if anti != (kind == Kind::AntiReflexive) {
            failures.push(format!(
                "anti-reflexive = {}, theta anti-palindromic = {anti}",
                kind == Kind::AntiReflexive
            ));
        }
    }

    let poly = hodge_ehrhart_polynomials(tf).total;
    let trivial_roots = integer_roots(&poly);
    let mut found_roots = Vec::new();
    let mut root_line = RootLine::None;
    if poly.degree().unwrap_or(0) > 0 {
        match find_roots(&poly) {
            Ok(r) => found_roots = r,
            Err(e) => warnings.push(format!("root finding failed: {e}")),
        }
        let half = -Rational::new(BigInt::one(), BigInt::from(2));
        let zero = Rational::zero();
        let candidates = [
            (RootLine::Cl, &half, false),
            (RootLine::Acl, &zero, false),
            (RootLine::ClStar, &half, true),
            (RootLine::AclStar, &zero, true),
        ];
        for (label, line, exclude) in candidates {
            match line_test_with_tolerance(&poly, line, exclude, tol) {
                Ok(true) => {
                    root_line = label;
                    break;
                }
                Ok(false) => {}
                Err(e) => {
                    warnings.push(format!("line test {} failed: {e}", label.as_str()));
                    break;
                }
            }
        }
    }

    Classification {
        kind,
        root_line,
        trivial_roots,
        roots: found_roots,
        mu: tf.mu(),
        dim_h0: tf.dim_h0(),
        warnings,
        consistency: Verdict::from_failures(failures),
    }
}

/// Reflexive kind, palindromic `θ`, and `L_ψ(-m) = (-1)^n L_ψ(m-1)` for
/// `m = 1..=m_max`, each computed separately, must all agree.
pub fn reflexivity_equivalence_check(tf: &ThetaFamily, m_max: u64) -> Verdict {
    let n = tf.dim();
    let by_classes = tf.theta_ne0().is_zero();
    let by_palindromy = tf.theta_total().is_palindromic(n);
    let poly = hodge_ehrhart_polynomials(tf).total;
    let by_reciprocity =
        (1..=m_max as i64).all(|m| poly.evaluate_int(-m) == sign_pow(n) * poly.evaluate_int(m - 1));
    if by_classes == by_palindromy && by_palindromy == by_reciprocity {
        Verdict::Pass
    } else {
        Verdict::Fail(alloc::vec![format!(
            "unipotent = {by_classes}, palindromic = {by_palindromy}, reciprocity = {by_reciprocity}"
        )])
    }
}

/// Roots exactly on the reflexive (or anti-reflexive) line force that kind.
pub fn line_necessity_check(tf: &ThetaFamily, tol: f64) -> Result<Verdict> {
    let kind = classify_with_tolerance(tf, tol).kind;
    let poly = hodge_ehrhart_polynomials(tf).total;
    if poly.degree().unwrap_or(0) == 0 {
        return Ok(Verdict::NotApplicable(String::from(
            "constant Hodge-Ehrhart polynomial",
        )));
    }
    let half = -Rational::new(BigInt::one(), BigInt::from(2));
    let mut failures = Vec::new();
    if kind != Kind::Reflexive && line_test_with_tolerance(&poly, &half, false, tol)? {
        failures.push(format!(
            "roots on Re z = -1/2 but kind is {}",
            kind.as_str()
        ));
    }
    if kind != Kind::AntiReflexive
        && line_test_with_tolerance(&poly, &Rational::zero(), false, tol)?
    {
        failures.push(format!("roots on Re z = 0 but kind is {}", kind.as_str()));
    }
    Ok(Verdict::from_failures(failures))
}

/// Outcome of the factorization `L_ψ = Π (X + t - k) · v(X)` for `θ = z^k U`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootFactorization {
    pub k: usize,
    pub r: usize,
    /// Roots `k - t` of the predicted linear factors, `t = 1..=n-r`.
    pub linear_roots: Vec<i64>,
    pub linear_part: QPolynomial,
    pub quotient: QPolynomial,
    /// `linear_part · quotient = L_ψ` exactly.
    pub exact: bool,
    pub predicted_line: Rational,
    pub quotient_on_line: bool,
    pub reflexive_by_degree: bool,
    pub anti_reflexive_by_degree: bool,
    /// Degree criteria agree with the classification.
    pub dichotomy: Verdict,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RvOutcome {
    Applicable(RootFactorization),
    NotApplicable {
        reason: String,
        /// Largest `||root| - 1|` over the roots of `U`, when computed.
        circle_deviation: Option<f64>,
    },
}

pub fn rv_analysis(tf: &ThetaFamily) -> Result<RvOutcome> {
    rv_analysis_with_tolerance(tf, LINE_TOLERANCE)
}

pub fn rv_analysis_with_tolerance(tf: &ThetaFamily, tol: f64) -> Result<RvOutcome> {
    let n = tf.dim();
    let theta = tf.theta_total();
    let Some(k) = theta.lowest_nonzero() else {
        return Ok(RvOutcome::NotApplicable {
            reason: String::from("theta is zero"),
            circle_deviation: None,
        });
    };
    let u = IntVector(theta.0[k..].to_vec()).to_polynomial();
    let r = u.degree().unwrap_or(0);
    if r == 0 {
        return Ok(RvOutcome::NotApplicable {
            reason: String::from("theta is a monomial"),
            circle_deviation: None,
        });
    }
    let deviation = find_roots(&u)?
        .iter()
        .map(|z| (z.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    if deviation >= tol {
        return Ok(RvOutcome::NotApplicable {
            reason: format!("a root of U lies off the unit circle (| |z| - 1 | = {deviation:.3e})"),
            circle_deviation: Some(deviation),
        });
    }

    let poly = hodge_ehrhart_polynomials(tf).total;
    let linear_roots: Vec<i64> = (1..=(n - r) as i64).map(|t| k as i64 - t).collect();
    let linear_part = linear_roots.iter().fold(QPolynomial::one(), |acc, &root| {
        &acc * &QPolynomial::linear(int(-root))
    });
    let (quotient, rem) = poly.div_rem(&linear_part);
    let exact = rem.is_zero() && &linear_part * &quotient == poly;
    let predicted_line = int(k as i64) - int((n + 1 - r) as i64) / int(2);
    let quotient_on_line = quotient.degree().unwrap_or(0) == 0
        || line_test_with_tolerance(&quotient, &predicted_line, false, tol)?;

    let reflexive_by_degree = r + 2 * k == n;
    let anti_reflexive_by_degree = r + 2 * k == n + 1;
    let kind = classify_with_tolerance(tf, tol).kind;
    let mut failures = Vec::new();
    if reflexive_by_degree != (kind == Kind::Reflexive) {
        failures.push(format!(
            "r = n - 2k is {reflexive_by_degree}, kind is {}",
            kind.as_str()
        ));
    }
    if anti_reflexive_by_degree != (kind == Kind::AntiReflexive) {
        failures.push(format!(
            "r = n - 2k + 1 is {anti_reflexive_by_degree}, kind is {}",
            kind.as_str()
        ));
    }
    Ok(RvOutcome::Applicable(RootFactorization {
        k,
        r,
        linear_roots,
        linear_part,
        quotient,
        exact,
        predicted_line,
        quotient_on_line,
        reflexive_by_degree,
        anti_reflexive_by_degree,
        dichotomy: Verdict::from_failures(failures),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rat, FractionalSpectrum};
    use crate::theta::spectrum_to_theta;
    use alloc::vec;

    fn mixed() -> ThetaFamily {
        let s = FractionalSpectrum::from_pairs(2, [(rat(1, 2), 1), (int(1), 3), (rat(3, 2), 1)])
            .unwrap();
        spectrum_to_theta(&s).unwrap()
    }

    fn unipotent(v: &[u64]) -> ThetaFamily {
        ThetaFamily::unipotent(v.len() - 1, IntVector(v.to_vec())).unwrap()
    }

    /// `z + ... + z^{n-1}`.
    fn inner_ones(n: usize) -> ThetaFamily {
        let mut v = vec![1; n + 1];
        v[0] = 0;
        v[n] = 0;
        unipotent(&v)
    }

    #[test]
    fn mixed_example_polynomials() {
        let he = hodge_ehrhart_polynomials(&mixed());
        assert_eq!(
            he.class(&int(0)),
            QPolynomial::new(vec![int(0), rat(3, 2), rat(3, 2)])
        );
        assert_eq!(he.class(&rat(1, 2)), QPolynomial::from_ints(&[0, 0, 1]));
        assert_eq!(
            he.total,
            QPolynomial::new(vec![int(0), rat(3, 2), rat(5, 2)])
        );
        assert!(
            hodge_ehrhart_polynomials(&ThetaFamily::new(2, BTreeMap::new()).unwrap())
                .total
                .is_zero()
        );
    }

    #[test]
    fn symmetry() {
        assert!(theta_symmetry_check(&mixed()).is_pass());
        assert!(theta_symmetry_check(&unipotent(&[1, 2, 1])).is_pass());
        assert!(theta_symmetry_check(&unipotent(&[0, 3, 1])).is_fail());
        let mut c = BTreeMap::new();
        c.insert(rat(1, 3), IntVector(vec![0, 1, 0]));
        assert!(theta_symmetry_check(&ThetaFamily::new(2, c).unwrap()).is_fail());
    }

    #[test]
    fn reciprocity() {
        assert!(reciprocity_check(&mixed(), 10).is_pass());
        assert!(reciprocity_check(&unipotent(&[1, 2, 1]), 1).is_pass());
        let mut c = BTreeMap::new();
        c.insert(int(0), IntVector(vec![1, 1]));
        c.insert(rat(1, 2), IntVector(vec![0, 1]));
        assert!(reciprocity_check(&ThetaFamily::new(1, c).unwrap(), 5).is_pass());
        assert!(reciprocity_check(&unipotent(&[0, 3, 1]), 3).is_fail());
    }

    #[test]
    fn vanishing_orders() {
        let mut c = BTreeMap::new();
        c.insert(rat(1, 2), IntVector(vec![0, 0, 1, 1]));
        let tf = ThetaFamily::new(3, c).unwrap();
        let l = hodge_ehrhart_polynomials(&tf).class(&rat(1, 2));
        assert!(l.evaluate_int(0).is_zero() && l.evaluate_int(1).is_zero());
        assert!(!l.evaluate_int(2).is_zero());
        assert!(vanishing_order_check(&tf).is_pass());
        assert!(vanishing_order_check(&unipotent(&[1, 2, 1])).is_pass());
        let tf = inner_ones(4);
        let l = hodge_ehrhart_polynomials(&tf).total;
        assert!(l.evaluate_int(0).is_zero() && !l.evaluate_int(1).is_zero());
        assert!(vanishing_order_check(&tf).is_pass());
    }

    #[test]
    fn coefficient_identities_hold() {
        assert!(coefficient_identities(&mixed()).is_pass());
        assert!(coefficient_identities(&unipotent(&[1, 2, 1])).is_pass());
        assert!(coefficient_identities(&inner_ones(5)).is_pass());
        // a family violating symmetry breaks the identities
        assert!(coefficient_identities(&unipotent(&[1, 3, 0])).is_fail());
    }

    #[test]
    fn vieta() {
        assert!(root_sum_product_check(&mixed()).unwrap().is_pass());
        assert!(root_sum_product_check(&unipotent(&[1, 2, 1]))
            .unwrap()
            .is_pass());
        assert!(root_sum_product_check(&unipotent(&[1, 4, 1]))
            .unwrap()
            .is_pass());
        let poly = hodge_ehrhart_polynomials(&unipotent(&[1, 4, 1])).total;
        assert_eq!(-poly.coeff(1) / poly.coeff(2), int(-1));
        assert_eq!(
            root_sum_product_check(&ThetaFamily::new(2, BTreeMap::new()).unwrap()),
            Err(Error::DegenerateDegree)
        );
    }

    #[test]
    fn integer_root_search() {
        assert_eq!(
            integer_roots(&QPolynomial::from_ints(&[0, 1, 1])),
            vec![-1, 0]
        );
        assert!(integer_roots(&QPolynomial::from_ints(&[1, 2, 2])).is_empty());
        let l = hodge_ehrhart_polynomials(&inner_ones(4)).total;
        let r = integer_roots(&l);
        assert!(r.contains(&0) && r.contains(&-1));
        // (X - 6)(2X + 3)
        assert_eq!(
            integer_roots(&QPolynomial::from_ints(&[-18, -9, 2])),
            vec![6]
        );
    }

    #[test]
    fn lines() {
        let half = rat(-1, 2);
        assert!(line_test(&QPolynomial::from_ints(&[1, 2, 2]), &half, false).unwrap());
        let l = hodge_ehrhart_polynomials(&inner_ones(4)).total;
        assert!(!line_test(&l, &half, false).unwrap());
        assert!(line_test(&l, &half, true).unwrap());
        assert!(!line_test(
            &QPolynomial::from_ints(&[1, 3, 2]).scale(&rat(1, 2)),
            &half,
            false
        )
        .unwrap());
        let seg = spectrum_to_theta(
            &FractionalSpectrum::from_pairs(1, [(int(0), 1), (rat(1, 2), 1), (int(1), 1)]).unwrap(),
        )
        .unwrap();
        assert!(!line_test(&hodge_ehrhart_polynomials(&seg).total, &half, false).unwrap());
    }

    #[test]
    fn classification() {
        let c = classify(&unipotent(&[1, 2, 1]));
        assert_eq!((c.kind, c.root_line), (Kind::Reflexive, RootLine::Cl));
        assert!(c.consistency.is_pass());
        let c = classify(&mixed());
        assert_eq!(c.kind, Kind::Mixed);
        assert_eq!(c.root_line, RootLine::None);
        assert!(c.consistency.is_pass());
        let s = FractionalSpectrum::from_pairs(2, [(rat(1, 2), 1), (rat(3, 2), 1)]).unwrap();
        let c = classify(&spectrum_to_theta(&s).unwrap());
        assert_eq!(c.kind, Kind::AntiReflexive);
        assert!(c.consistency.is_pass());
        let c = classify(&inner_ones(4));
        assert_eq!((c.kind, c.root_line), (Kind::Reflexive, RootLine::ClStar));
        let c = classify(&ThetaFamily::new(2, BTreeMap::new()).unwrap());
        assert_eq!(c.kind, Kind::Mixed);
        assert_eq!(c.warnings.len(), 1);
    }

    #[test]
    fn equivalence_chain_and_necessity() {
        for tf in [
            mixed(),
            unipotent(&[1, 2, 1]),
            unipotent(&[1, 4, 1]),
            inner_ones(5),
        ] {
            assert!(reflexivity_equivalence_check(&tf, 10).is_pass());
            assert!(line_necessity_check(&tf, LINE_TOLERANCE).unwrap().is_pass());
        }
    }

    #[test]
    fn kronecker_factorization() {
        let RvOutcome::Applicable(f) = rv_analysis(&unipotent(&[1, 3, 3, 1])).unwrap() else {
            panic!("expected applicable");
        };
        assert_eq!((f.k, f.r), (0, 3));
        assert!(f.linear_roots.is_empty() && f.exact && f.quotient_on_line);
        assert!(f.reflexive_by_degree && f.dichotomy.is_pass());

        for n in 3..=5 {
            let RvOutcome::Applicable(f) = rv_analysis(&inner_ones(n)).unwrap() else {
                panic!("expected applicable");
            };
            assert_eq!((f.k, f.r), (1, n - 2));
            assert_eq!(f.linear_roots, vec![0, -1]);
            assert_eq!(f.predicted_line, rat(-1, 2));
            assert!(f.exact && f.quotient_on_line && f.dichotomy.is_pass());
            assert_eq!(f.quotient.degree(), Some(n - 2));
        }

        match rv_analysis(&unipotent(&[1, 4, 1])).unwrap() {
            RvOutcome::NotApplicable {
                circle_deviation, ..
            } => {
                assert!(circle_deviation.unwrap() > 0.1)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn anti_reflexive_factorization() {
        // spectrum {1/2, 3/2}: θ = z + z^2 = z (1 + z), k = 1, r = 1 = n - 2k + 1
        let s = FractionalSpectrum::from_pairs(2, [(rat(1, 2), 1), (rat(3, 2), 1)]).unwrap();
        let RvOutcome::Applicable(f) = rv_analysis(&spectrum_to_theta(&s).unwrap()).unwrap() else {
            panic!("expected applicable");
        };
        assert!(f.anti_reflexive_by_degree && !f.reflexive_by_degree);
        assert_eq!(f.predicted_line, int(0));
        assert!(f.exact && f.quotient_on_line && f.dichotomy.is_pass());
    }
}
