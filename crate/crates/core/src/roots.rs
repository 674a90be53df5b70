//! Numeric roots of rational polynomials.
//!
//! Repeated roots are split off exactly first (square-free decomposition over
//! Q), so the eigenvalue solver only ever sees simple roots.

#![allow(clippy::needless_range_loop)]

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::QPolynomial;

const MAX_SWEEPS: usize = 60;

/// Square-free factors `(g_i, i)` with `p = c · Π g_i^i` (Yun's algorithm).
pub fn squarefree_decomposition(p: &QPolynomial) -> Vec<(QPolynomial, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let a = p.monic();
    let b = a.derivative();
    let c = a.gcd(&b);
    let mut w = a.div_rem(&c).0;
    let mut y = b.div_rem(&c).0;
    let mut z = &y - &w.derivative();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let g = w.gcd(&z);
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        z = &y - &w.derivative();
        if g.degree().unwrap_or(0) > 0 {
            out.push((g, i));
        }
        i += 1;
    }
    out
}

fn horner(coeffs: &[f64], x: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * x + c)
}

/// `Σ |c_i| |x|^i`, the scale against which residuals are judged.
fn magnitude_bound(coeffs: &[f64], x: Complex64) -> f64 {
    let r = x.norm();
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c.abs())
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m1 = (a + d) * 0.5 + disc;
    let m2 = (a + d) * 0.5 - disc;
    if (m1 - d).norm() < (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Eigenvalues of an upper Hessenberg matrix by shifted QR with deflation.
fn hessenberg_eigenvalues(mut h: Vec<Vec<Complex64>>) -> Option<Vec<Complex64>> {
    let eps = f64::EPSILON;
    let mut hi = h.len();
    let mut eig = Vec::with_capacity(hi);
    let mut sweeps = 0;
    while hi > 0 {
        if hi == 1 {
            eig.push(h[0][0]);
            break;
        }
        let mut lo = hi - 1;
        while lo > 0 {
            let scale = h[lo][lo].norm() + h[lo - 1][lo - 1].norm();
            if h[lo][lo - 1].norm() <= eps * scale.max(f64::MIN_POSITIVE) {
                h[lo][lo - 1] = Complex64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi - 1 {
            eig.push(h[hi - 1][hi - 1]);
            hi -= 1;
            sweeps = 0;
            continue;
        }
        sweeps += 1;
        if sweeps > MAX_SWEEPS {
            return None;
        }
        let mu = if sweeps % 11 == 0 {
            // exceptional shift to break cycles
            h[hi - 1][hi - 1]
                + Complex64::new(h[hi - 1][hi - 2].norm(), 0.75 * h[hi - 1][hi - 2].norm())
        } else {
            wilkinson_shift(
                h[hi - 2][hi - 2],
                h[hi - 2][hi - 1],
                h[hi - 1][hi - 2],
                h[hi - 1][hi - 1],
            )
        };
        for i in lo..hi {
            h[i][i] -= mu;
        }
        let mut rotations = Vec::with_capacity(hi - lo);
        for k in lo..hi - 1 {
            let a = h[k][k];
            let b = h[k + 1][k];
            let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let (c, s) = if r == 0.0 {
                (Complex64::new(1.0, 0.0), Complex64::zero())
            } else {
                (a / r, b / r)
            };
            for j in k..hi {
                let x = h[k][j];
                let y = h[k + 1][j];
                h[k][j] = c.conj() * x + s.conj() * y;
                h[k + 1][j] = -s * x + c * y;
            }
            rotations.push((k, c, s));
        }
        for (k, c, s) in rotations {
            for i in lo..(k + 2).min(hi) {
                let x = h[i][k];
                let y = h[i][k + 1];
                h[i][k] = x * c + y * s;
                h[i][k + 1] = -x * s.conj() + y * c.conj();
            }
        }
        for i in lo..hi {
            h[i][i] += mu;
        }
    }
    Some(eig)
}

/// Roots of a square-free polynomial, polished by Newton steps.
fn simple_roots(p: &QPolynomial) -> Result<Vec<Complex64>> {
    let monic = p.monic();
    let coeffs = monic.to_f64_coeffs();
    let d = coeffs.len() - 1;
    if d == 1 {
        let root = -monic.coeff(0);
        return Ok(vec![Complex64::new(
            root.to_f64().ok_or(Error::ConvergenceFailure)?,
            0.0,
        )]);
    }
    let mut h = vec![vec![Complex64::zero(); d]; d];
    for j in 0..d {
        h[0][j] = Complex64::new(-coeffs[d - 1 - j], 0.0);
    }
    for i in 1..d {
        h[i][i - 1] = Complex64::new(1.0, 0.0);
    }
    let eig = hessenberg_eigenvalues(h).ok_or(Error::ConvergenceFailure)?;
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect();
    Ok(eig
        .into_iter()
        .map(|mut r| {
            for _ in 0..4 {
                let f = horner(&coeffs, r);
                let df = horner(&deriv, r);
                if df.norm() == 0.0 {
                    break;
                }
                let next = r - f / df;
                if horner(&coeffs, next).norm() < f.norm() {
                    r = next;
                } else {
                    break;
                }
            }
            r
        })
        .collect())
}

/// All complex roots with multiplicity, sorted by real then imaginary part.
///
/// Each root satisfies `|p(r)| <= 1e-10 · Σ |c_i| |r|^i`.
pub fn find_roots(p: &QPolynomial) -> Result<Vec<Complex64>> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::ConstantPolynomial(deg));
    }
    let mut out = Vec::with_capacity(deg);
    for (factor, mult) in squarefree_decomposition(p) {
        for r in simple_roots(&factor)? {
            out.extend(core::iter::repeat_n(r, mult));
        }
    }
    let coeffs = p.monic().to_f64_coeffs();
    for r in &out {
        if horner(&coeffs, *r).norm() > 1e-10 * magnitude_bound(&coeffs, *r) {
            return Err(Error::ConvergenceFailure);
        }
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn close(a: Complex64, re: f64, im: f64) -> bool {
        (a.re - re).abs() < 1e-9 && (a.im - im).abs() < 1e-9
    }

    #[test]
    fn linear_and_quadratic() {
        let r = find_roots(&QPolynomial::from_ints(&[-3, 2])).unwrap();
        assert!(close(r[0], 1.5, 0.0));
        let r = find_roots(&QPolynomial::from_ints(&[1, 0, 1])).unwrap();
        assert!(close(r[0], 0.0, -1.0) && close(r[1], 0.0, 1.0));
        // 3X^2 + 3X + 1 = 0: roots -1/2 ± i/(2√3)
        let r = find_roots(&QPolynomial::from_ints(&[1, 3, 3])).unwrap();
        let im = 0.5 / 3f64.sqrt();
        assert!(close(r[0], -0.5, -im) && close(r[1], -0.5, im));
    }

    #[test]
    fn repeated_roots_are_exact() {
        // (X + 1)^3 (X - 2)^2
        let p = &(&QPolynomial::linear(int(1)) * &QPolynomial::linear(int(1)))
            * &QPolynomial::linear(int(1));
        let q = &QPolynomial::linear(int(-2)) * &QPolynomial::linear(int(-2));
        let p = &p * &q;
        let dec = squarefree_decomposition(&p);
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (QPolynomial::linear(int(-2)), 2));
        assert_eq!(dec[1], (QPolynomial::linear(int(1)), 3));
        let r = find_roots(&p).unwrap();
        assert_eq!(r.len(), 5);
        for z in &r[..3] {
            assert!(close(*z, -1.0, 0.0));
        }
        assert!(close(r[3], 2.0, 0.0) && close(r[4], 2.0, 0.0));
    }

    #[test]
    fn wilkinson_like_polynomial() {
        let mut p = QPolynomial::one();
        for k in 1..=10 {
            p = &p * &QPolynomial::linear(int(-k));
        }
        let r = find_roots(&p).unwrap();
        for (k, z) in r.iter().enumerate() {
            assert!((z.re - (k + 1) as f64).abs() < 1e-6 && z.im.abs() < 1e-6);
        }
    }

    #[test]
    fn roots_of_unity() {
        // X^6 - 1
        let r = find_roots(&QPolynomial::from_ints(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(r.len(), 6);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
        let half = find_roots(&QPolynomial::new(vec![rat(1, 4), int(0), int(1)])).unwrap();
        assert!(close(half[0], 0.0, -0.5));
    }

    #[test]
    fn constant_is_rejected() {
        assert_eq!(
            find_roots(&QPolynomial::from_ints(&[4])),
            Err(Error::ConstantPolynomial(0))
        );
        assert_eq!(
            find_roots(&QPolynomial::zero()),
            Err(Error::ConstantPolynomial(0))
        );
    }
}
