//! The classical forced oscillator `q' = p/m`, `p' = -w^2 m q + z(t)`: closed
//! flow, an RK4 twin, and the resonance envelope analysis.

use num_complex::Complex64 as C64;

use crate::symbols::{ForceProfile, OscillatorParams, PhasePoint, Pulse};

/// `(1 - cos(d t)) / d`, written without cancellation; `0` at `d = 0`.
fn one_minus_cos_over(d: f64, t: f64) -> f64 {
    if d == 0.0 {
        0.0
    } else {
        2.0 * (0.5 * d * t).sin().powi(2) / d
    }
}

/// `sin(d t) / d`; `t` at `d = 0`.
fn sin_over(d: f64, t: f64) -> f64 {
    if d == 0.0 { t } else { (d * t).sin() / d }
}

/// `(int_0^t cos(W s) cos(w s) ds, int_0^t cos(W s) sin(w s) ds)`.
fn cosine_moments(big_omega: f64, omega: f64, t: f64) -> (f64, f64) {
    let (sum, diff) = (omega + big_omega, omega - big_omega);
    let c = 0.5 * (sin_over(sum, t) + sin_over(diff, t));
    let s = 0.5 * (one_minus_cos_over(sum, t) + one_minus_cos_over(diff, t));
    (c, s)
}

/// `int_0^d u^k e^{i w u} du` for `k = 0, 1`.
fn segment_moments(omega: f64, d: f64) -> (C64, C64) {
    let x = omega * d;
    if x.abs() < 0.25 {
        // Taylor series in (i w)^k; 20 terms leave < 1e-17 relative error.
        let iw = C64::new(0.0, omega);
        let (mut e0, mut e1) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        let mut pow = C64::new(1.0, 0.0);
        let mut fact = 1.0;
        for k in 0..20 {
            let term = pow / fact;
            e0 += term * d.powi(k + 1) / (k + 1) as f64;
            e1 += term * d.powi(k + 2) / (k + 2) as f64;
            pow *= iw;
            fact *= (k + 1) as f64;
        }
        (e0, e1)
    } else {
        let iw = C64::new(0.0, omega);
        let e = C64::from_polar(1.0, x);
        let e0 = (e - 1.0) / iw;
        let e1 = d * e / iw - e0 / iw;
        (e0, e1)
    }
}

/// `int_a^b z(t) e^{i w t} dt` for the linear interpolant, segment by segment.
fn pulse_fourier(p: &Pulse, omega: f64, a: f64, b: f64) -> C64 {
    let (lo, hi, sign) = if a <= b { (a, b, 1.0) } else { (b, a, -1.0) };
    let lo = lo.max(p.t0());
    let hi = hi.min(p.t1());
    if lo >= hi {
        return C64::new(0.0, 0.0);
    }
    let knots = p.breakpoints();
    let mut acc = C64::new(0.0, 0.0);
    for w in knots.windows(2) {
        let (ta, tb) = (w[0].max(lo), w[1].min(hi));
        if ta >= tb {
            continue;
        }
        let za = p.value(ta);
        let zb = p.value(tb);
        let d = tb - ta;
        let slope = (zb - za) / d;
        let (e0, e1) = segment_moments(omega, d);
        acc += C64::from_polar(1.0, omega * ta) * (za * e0 + slope * e1);
    }
    sign * acc
}

/// `int_a^b z(t) e^{i w t} dt`, exact for every force variant.
pub fn force_fourier(force: &ForceProfile, omega: f64, a: f64, b: f64) -> C64 {
    match force {
        ForceProfile::Zero => C64::new(0.0, 0.0),
        ForceProfile::Cosine { z0, omega: big } => {
            let (cb, sb) = cosine_moments(*big, omega, b);
            let (ca, sa) = cosine_moments(*big, omega, a);
            *z0 * C64::new(cb - ca, sb - sa)
        }
        ForceProfile::Pulse(p) => pulse_fourier(p, omega, a, b),
    }
}

/// `(int_0^t z sin(w s) ds, int_0^t z cos(w s) ds)`.
pub fn force_integrals(force: &ForceProfile, omega: f64, t: f64) -> (f64, f64) {
    let f = force_fourier(force, omega, 0.0, t);
    (f.im, f.re)
}

/// Exact solution of Hamilton's equations started at `pt0` at time 0.
pub fn classical_flow_closed(params: &OscillatorParams, force: &ForceProfile, t: f64, pt0: PhasePoint) -> PhasePoint {
    let (w, mw) = (params.omega, params.omega_m());
    let (i_s, i_c) = force_integrals(force, w, t);
    let (sn, cs) = (w * t).sin_cos();
    let u = pt0.q - i_s / mw;
    let v = pt0.p + i_c;
    PhasePoint { q: u * cs + v / mw * sn, p: -mw * u * sn + v * cs }
}

fn rhs(params: &OscillatorParams, force: &ForceProfile, t: f64, q: f64, p: f64) -> (f64, f64) {
    (p / params.mass, -params.omega * params.omega_m() * q + force.value(t))
}

/// Advances `(q, p)` from `t_from` to `t_to` with fixed RK4 steps no longer than `dt`.
pub fn rk4_advance(
    params: &OscillatorParams,
    force: &ForceProfile,
    t_from: f64,
    t_to: f64,
    pt: PhasePoint,
    dt: f64,
) -> PhasePoint {
    let span = t_to - t_from;
    if span == 0.0 {
        return pt;
    }
    let n = (span.abs() / dt).ceil().max(1.0) as usize;
    let h = span / n as f64;
    let (mut q, mut p) = (pt.q, pt.p);
    for k in 0..n {
        let t = t_from + k as f64 * h;
        let (k1q, k1p) = rhs(params, force, t, q, p);
        let (k2q, k2p) = rhs(params, force, t + 0.5 * h, q + 0.5 * h * k1q, p + 0.5 * h * k1p);
        let (k3q, k3p) = rhs(params, force, t + 0.5 * h, q + 0.5 * h * k2q, p + 0.5 * h * k2p);
        let (k4q, k4p) = rhs(params, force, t + h, q + h * k3q, p + h * k3p);
        q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
        p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
    PhasePoint { q, p }
}

/// Fixed-step RK4 solution from time 0; the brute-force twin of
/// [`classical_flow_closed`].
pub fn classical_flow_rk4(
    params: &OscillatorParams,
    force: &ForceProfile,
    t: f64,
    pt0: PhasePoint,
    dt: f64,
) -> PhasePoint {
    assert!(dt > 0.0, "RK4 step must be positive");
    rk4_advance(params, force, 0.0, t, pt0, dt)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthClass {
    Bounded,
    LinearGrowth,
}

impl GrowthClass {
    pub fn label(self) -> &'static str {
        match self {
            Self::Bounded => "bounded",
            Self::LinearGrowth => "linear growth",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceRow {
    pub t: f64,
    pub q_abs: f64,
    pub p_abs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceReport {
    pub rows: Vec<ResonanceRow>,
    /// `(t, |q|)` at the largest sample of each free period.
    pub peaks: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    /// Largest deviation of a peak from the fitted line.
    pub max_residual: f64,
    pub r_squared: f64,
    pub max_amplitude: f64,
    pub final_amplitude: f64,
    pub class: GrowthClass,
}

/// Least squares line through `points`: `(slope, intercept, max |residual|, R^2)`.
pub fn linear_fit(points: &[(f64, f64)]) -> (f64, f64, f64, f64) {
    let n = points.len() as f64;
    if points.len() < 2 {
        let y = points.first().map_or(0.0, |p| p.1);
        return (0.0, y, 0.0, 0.0);
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let max_res = points.iter().map(|p| (p.1 - slope * p.0 - intercept).abs()).fold(0.0, f64::max);
    let r2 = if syy > 0.0 && sxx > 0.0 { sxy * sxy / (sxx * syy) } else { 0.0 };
    (slope, intercept, max_res, r2)
}

/// Builds the envelope table from sampled `(t, q, p)`; `period` is the free period.
pub fn analyze_envelope(samples: &[(f64, PhasePoint)], period: f64) -> ResonanceReport {
    let rows: Vec<ResonanceRow> = samples
        .iter()
        .map(|(t, pt)| ResonanceRow { t: *t, q_abs: pt.q.abs(), p_abs: pt.p.abs() })
        .collect();
    let mut peaks: Vec<(f64, f64)> = Vec::new();
    let mut window = 0usize;
    let mut best: Option<(f64, f64)> = None;
    for r in &rows {
        let k = (r.t / period).floor() as usize;
        if k != window {
            peaks.extend(best.take());
            window = k;
        }
        if best.is_none_or(|b| r.q_abs > b.1) {
            best = Some((r.t, r.q_abs));
        }
    }
    // A trailing partial period would bias the fit low.
    if let (Some(b), Some(last)) = (best, rows.last()) {
        if last.t >= (window as f64 + 1.0) * period * (1.0 - 1e-12) {
            peaks.push(b);
        }
    }
    let (slope, intercept, max_residual, r_squared) = linear_fit(&peaks);
    let max_amplitude = rows.iter().map(|r| r.q_abs).fold(0.0, f64::max);
    let final_amplitude = peaks.last().map_or(0.0, |p| p.1);
    let class = if slope > 0.0 && r_squared > 0.9 && max_amplitude > 0.0 {
        GrowthClass::LinearGrowth
    } else {
        GrowthClass::Bounded
    };
    ResonanceReport { rows, peaks, slope, intercept, max_residual, r_squared, max_amplitude, final_amplitude, class }
}

fn sample_times(t_max: f64, n_samples: usize) -> impl Iterator<Item = f64> {
    let n = n_samples.max(2);
    (0..n).map(move |k| t_max * k as f64 / (n - 1) as f64)
}

/// Response to `Z0 cos(W t)` from rest, sampled on `n_samples` points of `[0, t_max]`.
pub fn resonance_report(params: &OscillatorParams, z0: f64, big_omega: f64, t_max: f64, n_samples: usize) -> ResonanceReport {
    let force = ForceProfile::Cosine { z0, omega: big_omega };
    let origin = PhasePoint::new(0.0, 0.0);
    let samples: Vec<_> = sample_times(t_max, n_samples)
        .map(|t| (t, classical_flow_closed(params, &force, t, origin)))
        .collect();
    analyze_envelope(&samples, 2.0 * std::f64::consts::PI / params.omega)
}

/// Same table as [`resonance_report`] with the trajectory from RK4.
pub fn resonance_report_rk4(
    params: &OscillatorParams,
    z0: f64,
    big_omega: f64,
    t_max: f64,
    n_samples: usize,
    dt: f64,
) -> ResonanceReport {
    let force = ForceProfile::Cosine { z0, omega: big_omega };
    let mut pt = PhasePoint::new(0.0, 0.0);
    let mut prev = 0.0;
    let samples: Vec<_> = sample_times(t_max, n_samples)
        .map(|t| {
            pt = rk4_advance(params, &force, prev, t, pt, dt);
            prev = t;
            (t, pt)
        })
        .collect();
    analyze_envelope(&samples, 2.0 * std::f64::consts::PI / params.omega)
}
