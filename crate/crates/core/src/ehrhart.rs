//! Classical Ehrhart theory computed from lattice point counts.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::LatticePolytope;
use crate::series::{
    binomial, factorial, int, lagrange_interpolate, IntVector, QPolynomial, Rational,
    TruncatedSeries,
};
use crate::theta::ThetaFamily;
use crate::verdict::Verdict;

/// `L_P(0), ..., L_P(upto)` by enumeration.
pub fn ehrhart_counts(p: &LatticePolytope, upto: u64) -> Vec<u64> {
    (0..=upto).map(|m| p.count_points(m)).collect()
}

/// Interpolates the counts at `m = 0..=n`.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> QPolynomial {
    let pts: Vec<_> = ehrhart_counts(p, p.dim() as u64)
        .into_iter()
        .enumerate()
        .map(|(m, c)| (int(m as i64), int(c as i64)))
        .collect();
    lagrange_interpolate(&pts)
}

/// `Ehr_P(z) = Σ L_P(m) z^m` up to `z^order`.
pub fn ehrhart_series(p: &LatticePolytope, order: u64) -> TruncatedSeries {
    TruncatedSeries::new(
        order as usize,
        ehrhart_counts(p, order)
            .into_iter()
            .map(|c| int(c as i64))
            .collect(),
    )
}

/// Coefficients of `(1 - z)^{n+1} Ehr_P(z)` from the counts at `m = 0..=n`.
pub fn delta_vector(p: &LatticePolytope) -> Result<IntVector> {
    let n = p.dim();
    let counts = ehrhart_counts(p, n as u64);
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let v: BigInt = (0..=k)
            .map(|j| {
                let b = binomial(n as i64 + 1, j as i64) * BigInt::from(counts[k - j]);
                if j % 2 == 1 {
                    -b
                } else {
                    b
                }
            })
            .sum();
        if v.is_negative() {
            return Err(Error::NegativeDelta {
                index: k,
                value: format!("{v}"),
            });
        }
        out.push(v.to_u64().ok_or(Error::Overflow)?);
    }
    Ok(IntVector(out))
}

/// `1 + Σ_{j=1..m} |∂(jP) ∩ Z^n|`.
pub fn weighted_l0(p: &LatticePolytope, m: u64) -> u64 {
    1 + (1..=m).map(|j| p.count_boundary_points(j)).sum::<u64>()
}

/// Compares `L_P(-m)` with `(-1)^n |int(mP) ∩ Z^n|` for `m = 1..=m_max`.
pub fn ehrhart_reciprocity_check(p: &LatticePolytope, m_max: u64) -> Verdict {
    let lp = ehrhart_polynomial(p);
    let sign = if p.dim().is_multiple_of(2) { 1 } else { -1 };
    let failures = (1..=m_max)
        .filter_map(|m| {
            let lhs = lp.evaluate_int(-(m as i64));
            let rhs = int(sign * p.count_interior_points(m) as i64);
            (lhs != rhs).then(|| format!("m={m}: L(-m)={lhs}, (-1)^n interior={rhs}"))
        })
        .collect();
    Verdict::from_failures(failures)
}

/// `δ_p = δ_{n-p}` for all `p`, with `n = len - 1`.
pub fn hibi_palindromic_check(delta: &IntVector) -> bool {
    match delta.len() {
        0 => true,
        len => delta.is_palindromic(len - 1),
    }
}

pub fn reflexive_check(p: &LatticePolytope) -> bool {
    p.is_reflexive()
}

/// `1 <= δ_1 <= δ_i` for `1 <= i <= n-1`, and `δ_n >= 1`.
pub fn lower_bound_check(delta: &IntVector) -> Verdict {
    let n = delta.len().saturating_sub(1);
    let mut failures = Vec::new();
    if n == 0 {
        return Verdict::NotApplicable(String::from("dimension zero"));
    }
    let d1 = delta.get(1);
    if d1 < 1 {
        failures.push(format!("delta_1 = {d1} < 1"));
    }
    for i in 1..n {
        if delta.get(i) < d1 {
            failures.push(format!("delta_{i} = {} < delta_1 = {d1}", delta.get(i)));
        }
    }
    if delta.get(n) < 1 {
        failures.push(format!("delta_n = {} < 1", delta.get(n)));
    }
    Verdict::from_failures(failures)
}

/// Special values of the delta-vector read off the polytope directly.
pub fn special_values_check(p: &LatticePolytope, delta: &IntVector, volume: u64) -> Verdict {
    let n = p.dim();
    let mut failures = Vec::new();
    if delta.get(0) != 1 {
        failures.push(format!("delta_0 = {} != 1", delta.get(0)));
    }
    let points = p.count_points(1);
    if delta.get(1) as i64 != points as i64 - n as i64 - 1 {
        failures.push(format!(
            "delta_1 = {} != |P ∩ Z^n| - n - 1 = {}",
            delta.get(1),
            points as i64 - n as i64 - 1
        ));
    }
    let interior = p.count_interior_points(1);
    if delta.get(n) != interior {
        failures.push(format!(
            "delta_n = {} != interior count {interior}",
            delta.get(n)
        ));
    }
    if delta.sum() != volume {
        failures.push(format!(
            "sum delta = {} != normalized volume {volume}",
            delta.sum()
        ));
    }
    Verdict::from_failures(failures)
}

/// `θ^0(z) = (1 - z)^{n+1} Σ L^0_P(m) z^m` truncated to degree `n`.
pub fn weighted_l0_consistency_check(p: &LatticePolytope, theta0: &IntVector) -> Verdict {
    let n = p.dim();
    let l0: Vec<u64> = (0..=n as u64).map(|m| weighted_l0(p, m)).collect();
    let failures = (0..=n)
        .filter_map(|k| {
            let v: BigInt = (0..=k)
                .map(|j| {
                    let b = binomial(n as i64 + 1, j as i64) * BigInt::from(l0[k - j]);
                    if j % 2 == 1 {
                        -b
                    } else {
                        b
                    }
                })
                .sum();
            (v != BigInt::from(theta0.get(k)))
                .then(|| format!("coefficient {k}: from L^0 {v}, theta^0 {}", theta0.get(k)))
        })
        .collect();
    Verdict::from_failures(failures)
}

/// `δ = A + zB` with `A = θ^0` palindromic of center `n/2` and
/// `zB = θ^{≠0}`, `B` palindromic of center `(n-1)/2`.
pub fn betke_mcmullen_split(tf: &ThetaFamily) -> Result<(QPolynomial, QPolynomial)> {
    let n = tf.dim();
    let a = tf.theta0().to_polynomial();
    let ne0 = tf.theta_ne0();
    if ne0.get(0) != 0 {
        return Err(Error::PalindromyViolation(String::from(
            "theta^{!=0} has a nonzero constant term",
        )));
    }
    let b = IntVector(ne0.0.iter().skip(1).copied().collect()).to_polynomial();
    if a.reverse(n)? != a {
        return Err(Error::PalindromyViolation(format!(
            "A(z) = {a} is not z^n A(1/z)"
        )));
    }
    if !b.is_zero() && (n == 0 || b.reverse(n - 1)? != b) {
        return Err(Error::PalindromyViolation(format!(
            "B(z) = {b} is not z^(n-1) B(1/z)"
        )));
    }
    Ok((a, b))
}

/// Count-based `L_P` against a theta-derived polynomial.
pub fn polynomial_agreement(lp: &QPolynomial, lpsi: &QPolynomial) -> Verdict {
    if lp == lpsi {
        Verdict::Pass
    } else {
        Verdict::Fail(alloc::vec![format!("L_P = {lp} but L_psi = {lpsi}")])
    }
}

/// `deg L_P = n`, leading coefficient `vol / n!` and `L_P(0) = 1`.
pub fn degree_and_leading_check(p: &LatticePolytope, lp: &QPolynomial, volume: u64) -> Verdict {
    let n = p.dim();
    let mut failures = Vec::new();
    if lp.degree() != Some(n) {
        failures.push(format!("deg L_P = {:?}, expected {n}", lp.degree()));
    }
    let expect = int(volume as i64) / Rational::from_integer(factorial(n));
    if lp.leading() != expect {
        failures.push(format!(
            "leading coefficient {} != vol/n! = {expect}",
            lp.leading()
        ));
    }
    if lp.coeff(0) != int(1) {
        failures.push(format!("constant term {} != 1", lp.coeff(0)));
    }
    Verdict::from_failures(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LatticePolytope;
    use crate::series::rat;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn simplex123() -> LatticePolytope {
        LatticePolytope::new(2, vec![vec![1, 0], vec![0, 1], vec![-2, -3]]).unwrap()
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            ehrhart_polynomial(&LatticePolytope::cross_polytope(2)),
            QPolynomial::from_ints(&[1, 2, 2])
        );
        assert_eq!(
            ehrhart_polynomial(&simplex123()),
            QPolynomial::from_ints(&[1, 3, 3])
        );
        assert_eq!(
            ehrhart_polynomial(&LatticePolytope::segment(-1, 1).unwrap()),
            QPolynomial::from_ints(&[1, 2])
        );
        assert_eq!(ehrhart_counts(&simplex123(), 2), vec![1, 7, 19]);
    }

    #[test]
    fn delta_vectors() {
        assert_eq!(
            delta_vector(&LatticePolytope::cross_polytope(2)).unwrap(),
            IntVector(vec![1, 2, 1])
        );
        assert_eq!(
            delta_vector(&simplex123()).unwrap(),
            IntVector(vec![1, 4, 1])
        );
        assert_eq!(
            delta_vector(&LatticePolytope::segment(-1, 2).unwrap()).unwrap(),
            IntVector(vec![1, 2])
        );
        assert_eq!(
            ehrhart_counts(&LatticePolytope::cross_polytope(3), 3),
            vec![1, 7, 25, 63]
        );
        assert_eq!(
            delta_vector(&LatticePolytope::cross_polytope(3)).unwrap(),
            IntVector(vec![1, 3, 3, 1])
        );
    }

    #[test]
    fn weighted_l0_values() {
        let cross = LatticePolytope::cross_polytope(2);
        assert_eq!(weighted_l0(&cross, 2), 13);
        assert_eq!(weighted_l0(&cross, 0), 1);
        assert_eq!(weighted_l0(&simplex123(), 1), 7);
    }

    #[test]
    fn reciprocity() {
        let cross = LatticePolytope::cross_polytope(2);
        assert!(ehrhart_reciprocity_check(&cross, 1).is_pass());
        assert_eq!(ehrhart_polynomial(&simplex123()).evaluate_int(-2), int(7));
        assert_eq!(simplex123().count_interior_points(2), 7);
        assert!(ehrhart_reciprocity_check(&simplex123(), 5).is_pass());
        let seg = LatticePolytope::segment(-1, 2).unwrap();
        assert_eq!(ehrhart_polynomial(&seg).evaluate_int(-1), int(-2));
        assert!(ehrhart_reciprocity_check(&seg, 10).is_pass());
    }

    #[test]
    fn hibi_and_reflexive() {
        assert!(hibi_palindromic_check(&IntVector(vec![1, 2, 1])));
        assert!(!hibi_palindromic_check(&IntVector(vec![1, 2])));
        assert!(hibi_palindromic_check(&IntVector(vec![1, 4, 1])));
        assert!(reflexive_check(&LatticePolytope::cross_polytope(2)));
        assert!(!reflexive_check(&LatticePolytope::segment(-1, 2).unwrap()));
        assert!(reflexive_check(&simplex123()));
    }

    #[test]
    fn lower_bound() {
        assert!(lower_bound_check(&IntVector(vec![1, 2, 1])).is_pass());
        assert!(lower_bound_check(&IntVector(vec![1, 4, 1])).is_pass());
        assert!(lower_bound_check(&IntVector(vec![1, 3, 3, 1])).is_pass());
        assert!(lower_bound_check(&IntVector(vec![1, 3, 2, 1])).is_fail());
        assert!(lower_bound_check(&IntVector(vec![1, 0, 1])).is_fail());
    }

    #[test]
    fn betke_mcmullen() {
        let mut c = BTreeMap::new();
        c.insert(int(0), IntVector(vec![0, 3, 0]));
        c.insert(rat(1, 2), IntVector(vec![0, 1, 1]));
        let tf = ThetaFamily::new(2, c).unwrap();
        let (a, b) = betke_mcmullen_split(&tf).unwrap();
        assert_eq!(a, QPolynomial::from_ints(&[0, 3]));
        assert_eq!(b, QPolynomial::from_ints(&[1, 1]));

        let tf = ThetaFamily::unipotent(2, IntVector(vec![1, 2, 1])).unwrap();
        let (a, b) = betke_mcmullen_split(&tf).unwrap();
        assert_eq!(a, QPolynomial::from_ints(&[1, 2, 1]));
        assert!(b.is_zero());

        let mut c = BTreeMap::new();
        c.insert(int(0), IntVector(vec![1, 1]));
        c.insert(rat(1, 2), IntVector(vec![0, 1]));
        let (a, b) = betke_mcmullen_split(&ThetaFamily::new(1, c).unwrap()).unwrap();
        assert_eq!(a, QPolynomial::from_ints(&[1, 1]));
        assert_eq!(b, QPolynomial::from_ints(&[1]));

        let bad = ThetaFamily::unipotent(2, IntVector(vec![0, 3, 1])).unwrap();
        assert!(matches!(
            betke_mcmullen_split(&bad),
            Err(Error::PalindromyViolation(_))
        ));
    }

    #[test]
    fn special_values_and_l0() {
        let p = simplex123();
        let d = delta_vector(&p).unwrap();
        assert!(special_values_check(&p, &d, 6).is_pass());
        assert!(special_values_check(&p, &d, 7).is_fail());
        let seg = LatticePolytope::segment(-1, 2).unwrap();
        assert!(weighted_l0_consistency_check(&seg, &IntVector(vec![1, 1])).is_pass());
        assert!(weighted_l0_consistency_check(&seg, &IntVector(vec![1, 2])).is_fail());
    }
}
