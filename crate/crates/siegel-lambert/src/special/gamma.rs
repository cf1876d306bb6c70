//! Complex log-gamma on the principal branch, the gamma function, and the
//! real digamma function.
//!
//! `log_gamma` is the workhorse of every vertical-line quadrature in the
//! crate, so it is implemented by a shifted Stirling series (machine-accurate
//! for |z| >= 10) plus the reflection formula on the left half-plane, rather
//! than a fixed-range Lanczos fit.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LOG_2PI_HALF: f64 = 0.918_938_533_204_672_74; // ln(2*pi)/2

// B_{2j} / (2j (2j-1)) for the Stirling series.
const STIRLING: [f64; 12] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1_260.0,
    -1.0 / 1_680.0,
    1.0 / 1_188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3_617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
    77_683.0 / 5_796.0,
    -236_364_091.0 / 1_506_960.0,
];

const SHIFT_RADIUS: f64 = 10.0;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal-branch log-gamma: analytic on C minus the real ray (-inf, 0],
/// real on (0, inf), with exp(log_gamma(z)) == gamma(z).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFinite("log_gamma"));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole(format!("{z}")));
    }
    if z.im < 0.0 {
        return Ok(log_gamma(z.conj())?.conj());
    }
    if z.re < 0.5 {
        // log gamma(z) = ln pi - log sin(pi z) - log gamma(1 - z)
        let lg = log_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - log_sin_pi(z) - lg);
    }
    // shift until the Stirling series is machine accurate; one combined
    // product keeps the shift to a single ln
    let mut w = z;
    let mut prod = Complex64::new(1.0, 0.0);
    while w.norm_sqr() < SHIFT_RADIUS * SHIFT_RADIUS {
        prod *= w;
        w += 1.0;
    }
    let shift = if prod.re == 1.0 && prod.im == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        prod.ln()
    };
    Ok(stirling_log_gamma(w) - shift)
}

fn stirling_log_gamma(w: Complex64) -> Complex64 {
    let mut acc = (w - 0.5) * w.ln() - w + LOG_2PI_HALF;
    let w2 = w * w;
    let mut p = w;
    for c in STIRLING {
        acc += c / p;
        p *= w2;
    }
    acc
}

/// log sin(pi z) for Im z >= 0, safe against overflow for large Im z,
/// with exp(log_sin_pi(z)) == sin(pi z) exactly.
fn log_sin_pi(z: Complex64) -> Complex64 {
    debug_assert!(z.im >= 0.0);
    if z.im < 20.0 {
        (Complex64::new(PI, 0.0) * z).sin().ln()
    } else {
        // sin(pi z) = e^{-i pi z} * (i/2) * (1 - e^{2 pi i z})
        let i = Complex64::new(0.0, 1.0);
        let log_i_half = Complex64::new(-(2.0f64.ln()), PI / 2.0);
        -i * PI * z + log_i_half + (Complex64::new(1.0, 0.0) - (2.0 * PI * i * z).exp()).ln()
    }
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Real digamma, used for saddle placement of Mellin-Barnes contours.
pub fn digamma_real(x: f64) -> f64 {
    assert!(x > 0.0, "digamma_real needs x > 0");
    // psi coefficients B_{2j}/(2j)
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32_760.0,
        1.0 / 12.0,
    ];
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let mut s = y.ln() - 0.5 / y;
    let y2 = 1.0 / (y * y);
    let mut p = y2;
    for c in C {
        s -= c * p;
        p *= y2;
    }
    acc + s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn half_integer_and_factorial_values() {
        let g_half = gamma(c(0.5, 0.0)).unwrap();
        assert!((g_half.re - PI.sqrt()).abs() < 1e-14);
        let lg5 = log_gamma(c(5.0, 0.0)).unwrap();
        assert!((lg5.re - 24.0f64.ln()).abs() < 1e-14);
        assert!(lg5.im == 0.0);
    }

    #[test]
    fn poles_rejected() {
        for re in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(c(re, 0.0)), Err(Error::GammaPole(_))));
        }
        assert!(log_gamma(c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn matches_stirling_modulus_at_quarter_plus_20i() {
        // |Gamma(sigma + iT)| ~ sqrt(2 pi) |T|^{sigma - 1/2} e^{-pi |T| / 2}
        let z = c(0.25, 20.0);
        let modulus = gamma(z).unwrap().norm();
        let stirling = (2.0 * PI).sqrt() * 20.0f64.powf(0.25 - 0.5) * (-PI * 20.0 / 2.0).exp();
        let ratio = modulus / stirling;
        assert!(
            (ratio - 1.0).abs() < 5e-3,
            "ratio {ratio} deviates from asymptotic by more than 0.5%"
        );
    }

    #[test]
    fn reflection_identity_over_the_strip() {
        // gamma(z) gamma(1-z) sin(pi z) / pi == 1
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..1000 {
            let z = c(rng.gen_range(1e-3..1.0 - 1e-3), rng.gen_range(-40.0..40.0));
            let lhs = gamma(z).unwrap() * gamma(c(1.0, 0.0) - z).unwrap() * (z * PI).sin() / PI;
            assert!(
                (lhs - 1.0).norm() < 1e-12,
                "reflection residual {} at z = {z}",
                (lhs - 1.0).norm()
            );
        }
    }

    #[test]
    fn duplication_identity() {
        // gamma(2z) = 2^{2z-1}/sqrt(pi) gamma(z) gamma(z + 1/2)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0002);
        for _ in 0..200 {
            let z = c(rng.gen_range(0.3..30.0), rng.gen_range(-30.0..30.0));
            let lhs = log_gamma(2.0 * z).unwrap();
            let rhs = (2.0 * z - 1.0) * 2.0f64.ln() - 0.5 * PI.ln()
                + log_gamma(z).unwrap()
                + log_gamma(z + 0.5).unwrap();
            // compare as gamma values: branches may differ by 2 pi i k
            let diff = (lhs - rhs).exp();
            assert!((diff - 1.0).norm() < 1e-12, "duplication residual at z = {z}");
        }
    }

    #[test]
    fn recurrence_accuracy_up_to_1e6() {
        // |log gamma| absolute error tracks gamma relative error
        for x in [10.0, 1e3, 1e5, 1e6] {
            let lhs = log_gamma(c(x + 1.0, 3.0)).unwrap();
            let rhs = log_gamma(c(x, 3.0)).unwrap() + c(x, 3.0).ln();
            assert!((lhs - rhs).norm() < 1e-13 * lhs.norm().max(1.0));
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let z = c(2.3, 7.7);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z.conj()).unwrap();
        assert_eq!(a.re, b.re);
        assert_eq!(a.im, -b.im);
    }

    #[test]
    fn digamma_matches_harmonic_relation() {
        // psi(n) = H_{n-1} - gamma_E
        let euler = 0.577_215_664_901_532_9;
        let h9: f64 = (1..=9).map(|j| 1.0 / j as f64).sum();
        assert!((digamma_real(10.0) - (h9 - euler)).abs() < 1e-13);
    }
}
