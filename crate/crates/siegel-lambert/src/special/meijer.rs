//! The G^{2,0}_{1,2} Meijer function by vertical-line Mellin-Barnes
//! quadrature:
//!
//!   G(a1; b1, b2 | z) = (1/2 pi i) int_L Gamma(b1+w) Gamma(b2+w) / Gamma(a1+w) z^{-w} dw
//!
//! with L a vertical line right of every pole of the numerator gammas. The
//! abscissa is placed near the minimum of the integrand modulus on the real
//! axis (kept right of the poles), the trapezoid step starts at h = 0.25 and
//! is halved until two refinements agree, and the truncation height comes
//! from the Stirling e^{-pi|t|/2} decay. The reported bound is the analytic
//! tail bound plus the last refinement delta.

use super::gamma::{digamma_real, log_gamma};
use crate::error::{Error, Result};
use crate::summation::ComplexNeumaier;
use num_complex::Complex64;
use std::f64::consts::PI;

/// A computed value together with its reported error bound.
#[derive(Clone, Copy, Debug)]
pub struct QuadValue {
    pub value: Complex64,
    pub bound: f64,
}

pub(crate) struct MbIntegrand {
    pub a1: Complex64,
    pub b1: Complex64,
    pub b2: Complex64,
    pub log_z: f64,
    /// added to the exponent of every node: lets callers fold prefactors
    /// like z^{mu+1/2} e^{z/2} in to avoid under/overflow
    pub log_offset: f64,
}

impl MbIntegrand {
    fn log_eval(&self, w: Complex64) -> Option<Complex64> {
        let lg1 = log_gamma(self.b1 + w).ok()?;
        let lg2 = log_gamma(self.b2 + w).ok()?;
        let lg3 = log_gamma(self.a1 + w).ok()?;
        Some(lg1 + lg2 - lg3 - w * self.log_z + self.log_offset)
    }

    fn eval(&self, w: Complex64) -> Complex64 {
        match self.log_eval(w) {
            Some(le) if le.re < 700.0 => le.exp(),
            Some(_) => Complex64::new(f64::INFINITY, 0.0),
            // a pole of the denominator gamma annihilates the integrand
            None => Complex64::new(0.0, 0.0),
        }
    }
}

/// Smallest real part allowed for the contour relative to the rightmost pole.
const MIN_MARGIN: f64 = 0.6;

pub(crate) struct MbSettings {
    pub target_rel: f64,
    pub initial_h: f64,
    pub min_h: f64,
}

impl Default for MbSettings {
    fn default() -> Self {
        Self {
            target_rel: 1e-13,
            initial_h: 0.25,
            min_h: 1.0 / 64.0,
        }
    }
}

/// Core quadrature. Returns the integral (1/2 pi) int f(d + it) dt with the
/// caller's log offset folded in, and a reported bound.
pub(crate) fn mb_quadrature(f: &MbIntegrand, settings: &MbSettings) -> Result<QuadValue> {
    let pole_edge = effective_pole_edge(f.a1, f.b1, f.b2);
    let d = contour_abscissa(f, pole_edge);

    // polynomial growth exponent of |integrand| along the line (Stirling)
    let q_exp = (f.b1.re + f.b2.re - f.a1.re) + d - 0.5;

    // Truncation height: find H with |f(d+iH)| small against |f(d)| and the
    // analytic tail factor valid (pi H / 2 > q_exp).
    let scale0 = f.eval(Complex64::new(d, 0.0)).norm().max(f64::MIN_POSITIVE);
    let mut height = (20.0f64).max(0.75 * q_exp);
    let mut tail;
    loop {
        let edge = f.eval(Complex64::new(d, height)).norm();
        tail = tail_bound(edge, q_exp, height);
        if tail <= settings.target_rel * scale0 * 1e-2 || height > 400.0 {
            break;
        }
        height += 10.0;
    }

    let mut h = settings.initial_h;
    let mut prev = trapezoid(f, d, height, h);
    let mut delta;
    loop {
        h *= 0.5;
        let cur = trapezoid(f, d, height, h);
        delta = (cur - prev).norm();
        prev = cur;
        if delta <= settings.target_rel * cur.norm().max(scale0 * 1e-3) || h < settings.min_h {
            break;
        }
    }
    let value = prev / (2.0 * PI);
    let bound = (tail / (2.0 * PI)) + delta;
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::NonConvergence {
            what: "Mellin-Barnes quadrature",
            budget: 0,
        });
    }
    Ok(QuadValue { value, bound })
}

/// Analytic tail: int_H^inf C t^q e^{-pi t/2} dt <= |f(H)| * (2/pi) / (1 - 2q/(pi H)),
/// doubled for both ends of the line.
fn tail_bound(edge_modulus: f64, q_exp: f64, height: f64) -> f64 {
    let denom = 1.0 - (2.0 * q_exp.max(0.0)) / (PI * height);
    if denom <= 0.1 {
        return f64::INFINITY;
    }
    2.0 * edge_modulus * (2.0 / PI) / denom
}

fn trapezoid(f: &MbIntegrand, d: f64, height: f64, h: f64) -> Complex64 {
    let n = (height / h).ceil() as i64;
    let mut acc = ComplexNeumaier::new();
    acc.add(f.eval(Complex64::new(d, 0.0)));
    for j in 1..=n {
        let t = j as f64 * h;
        acc.add(f.eval(Complex64::new(d, t)));
        acc.add(f.eval(Complex64::new(d, -t)));
    }
    acc.value() * h
}

/// Place the line near the minimum of |integrand| on the real axis, solving
/// psi(b1+d) + psi(b2+d) - psi(a1+d) = ln z by bisection; clamp right of the
/// poles.
fn contour_abscissa(f: &MbIntegrand, pole_edge: f64) -> f64 {
    let lo0 = pole_edge + MIN_MARGIN;
    // the denominator digamma is clamped below argument 1: this keeps the
    // saddle equation monotone and free of the reflection poles of psi,
    // at a small cost in optimality when a1 + d < 1
    let slope = |d: f64| -> f64 {
        psi_clamped(f.b1.re + d) + psi_clamped(f.b2.re + d)
            - digamma_real((f.a1.re + d).max(1.0))
            - f.log_z
    };
    let mut lo = lo0;
    let mut hi = lo0 + 4.0;
    if slope(lo) >= 0.0 {
        return lo0;
    }
    let mut grow = 0;
    while slope(hi) < 0.0 {
        hi = lo0 + (hi - lo0) * 2.0;
        grow += 1;
        if grow > 40 {
            return hi.min(lo0 + 2000.0);
        }
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if slope(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Rightmost pole of the integrand that actually survives. Poles of
/// Gamma(b_i + w) at integer-aligned points can be annihilated (or reduced
/// in order) by zeros of 1/Gamma(a1 + w); the contour only needs to stay
/// right of the surviving ones, which matters for conditioning at small z.
fn effective_pole_edge(a1: Complex64, b1: Complex64, b2: Complex64) -> f64 {
    let naive = (-b1.re).max(-b2.re);
    if a1.im.abs() > 1e-12 || b1.im.abs() > 1e-12 || b2.im.abs() > 1e-12 {
        return naive;
    }
    let is_int = |x: f64| (x - x.round()).abs() < 1e-9;
    let aligned1 = is_int(a1.re - b1.re);
    let aligned2 = is_int(a1.re - b2.re);
    if !aligned1 && !aligned2 {
        return naive;
    }
    // walk the union pole lattice downward looking for a surviving pole
    let mut candidates: Vec<f64> = Vec::new();
    for j in 0..240 {
        candidates.push(-b1.re - j as f64);
        candidates.push(-b2.re - j as f64);
    }
    candidates.sort_by(|x, y| y.partial_cmp(x).unwrap());
    candidates.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
    for w in candidates {
        let mut order: i32 = 0;
        if b1.re + w < 0.5 && is_int(b1.re + w) {
            order += 1;
        }
        if b2.re + w < 0.5 && is_int(b2.re + w) {
            order += 1;
        }
        let aw = a1.re + w;
        if aw < 0.5 && is_int(aw) {
            order -= 1;
        }
        if order >= 1 {
            return w;
        }
    }
    naive - 240.0
}

/// digamma clamped away from the origin; arguments can dip below zero when
/// the contour legitimately sits left of annihilated poles.
fn psi_clamped(x: f64) -> f64 {
    digamma_real(x.max(0.5))
}

fn natural_number_distance(v: Complex64) -> Option<f64> {
    if v.im.abs() > 1e-9 {
        return None;
    }
    if v.re < -1e-9 {
        return None;
    }
    let nearest = v.re.round().max(0.0);
    Some((v.re - nearest).abs())
}

/// G^{2,0}_{1,2}(a1; b1, b2 | z) for z > 0.
pub fn meijer_g_120(a1: Complex64, b1: Complex64, b2: Complex64, z: f64) -> Result<QuadValue> {
    for v in [a1, b1, b2] {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite("meijer_g_120"));
        }
    }
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "meijer_g_120 needs z > 0, got {z}"
        )));
    }
    for (which, b) in [(1u8, b1), (2u8, b2)] {
        if let Some(dist) = natural_number_distance(a1 - b) {
            if dist < 1e-9 {
                return Err(Error::ContourChoice {
                    which,
                    value: (a1 - b).re,
                });
            }
        }
    }
    let f = MbIntegrand {
        a1,
        b1,
        b2,
        log_z: z.ln(),
        log_offset: 0.0,
    };
    mb_quadrature(&f, &MbSettings::default())
}

/// Same integral with an explicit truncation height and step; used by the
/// self-convergence tests.
pub fn meijer_g_120_with_height(
    a1: Complex64,
    b1: Complex64,
    b2: Complex64,
    z: f64,
    height: f64,
    h: f64,
) -> Result<QuadValue> {
    let f = MbIntegrand {
        a1,
        b1,
        b2,
        log_z: z.ln(),
        log_offset: 0.0,
    };
    let pole_edge = effective_pole_edge(a1, b1, b2);
    let d = contour_abscissa(&f, pole_edge);
    let q_exp = (b1.re + b2.re - a1.re) + d - 0.5;
    let edge = f.eval(Complex64::new(d, height)).norm();
    let tail = tail_bound(edge, q_exp, height);
    let value = trapezoid(&f, d, height, h) / (2.0 * PI);
    Ok(QuadValue {
        value,
        bound: tail / (2.0 * PI),
    })
}
