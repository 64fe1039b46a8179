//! The p-mechanical forced oscillator: the force functionals `eta`, `xi`, the
//! closed-form evolved observable, coherent-state label drift, and the kernel
//! evolution identity for quadratic Hamiltonians.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use crate::classical::{force_fourier, force_integrals};
use crate::coherent::{gaussian_expectation, CoherentLabel};
use crate::error::{PmechError, Result};
use crate::fock::{expm, FockVector, Propagator};
use crate::gaussian::quadrature;
use crate::gaussian::GaussFun;
use crate::symbols::{evaluate, poisson_bracket, ForceProfile, OscillatorParams, PhasePoint, SymbolPoly};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EtaXi {
    /// `int z(t) e^{i w t} dt`.
    pub eta: C64,
    /// `w m int int z(t) z(t') cos(w (t - t')) dt dt'`.
    pub xi: f64,
}

fn check_interval(t1: f64, t2: f64) -> Result<()> {
    if !(t1.is_finite() && t2.is_finite()) {
        return Err(PmechError::NotIntegrable(format!("interval [{t1}, {t2}] is not finite")));
    }
    Ok(())
}

/// `eta` in closed form over `[t1, t2]`; `xi` from `w m |eta|^2`.
pub fn eta_xi(force: &ForceProfile, params: &OscillatorParams, t1: f64, t2: f64) -> Result<EtaXi> {
    check_interval(t1, t2)?;
    let eta = force_fourier(force, params.omega, t1, t2);
    Ok(EtaXi { eta, xi: params.omega_m() * eta.norm_sqr() })
}

/// `eta` and `xi` over the support of a compactly supported force.
pub fn eta_xi_full_line(force: &ForceProfile, params: &OscillatorParams) -> Result<EtaXi> {
    let (t1, t2) = force
        .support()
        .ok_or_else(|| PmechError::NotIntegrable("a cosine force has no full-line transform".into()))?;
    eta_xi(force, params, t1, t2)
}

fn quadrature_knots(force: &ForceProfile, t1: f64, t2: f64) -> Vec<f64> {
    let mut knots = vec![t1];
    if let ForceProfile::Pulse(p) = force {
        knots.extend(p.breakpoints().into_iter().filter(|t| *t > t1 && *t < t2));
    }
    knots.push(t2);
    knots
}

/// Adaptive-quadrature `eta`, independent of the closed form.
pub fn eta_quadrature(force: &ForceProfile, params: &OscillatorParams, t1: f64, t2: f64, tol: f64) -> C64 {
    let knots = quadrature_knots(force, t1, t2);
    quadrature::integrate_pieces(|t| force.value(t) * C64::from_polar(1.0, params.omega * t), &knots, tol)
}

/// `xi` by nested adaptive quadrature of the double integral.
pub fn xi_double_quadrature(force: &ForceProfile, params: &OscillatorParams, t1: f64, t2: f64, tol: f64) -> f64 {
    let knots = quadrature_knots(force, t1, t2);
    let w = params.omega;
    let span = (t2 - t1).abs().max(1.0);
    let outer = |t: f64| {
        let inner = quadrature::integrate_pieces(
            |s| C64::new(force.value(s) * (w * (t - s)).cos(), 0.0),
            &knots,
            tol / span,
        );
        inner * force.value(t)
    };
    params.omega_m() * quadrature::integrate_pieces(outer, &knots, tol).re
}

/// `(I_s / m w, I_c)`: the coefficients of `X(t)` and `-Y(t)` in the
/// exponential prefactor of the evolved observable (times `2 pi i`).
pub fn p_solution_prefactor(force: &ForceProfile, params: &OscillatorParams, t: f64) -> (f64, f64) {
    let (i_s, i_c) = force_integrals(force, params.omega, t);
    (i_s / params.omega_m(), i_c)
}

/// `exp(2 pi i ((I_s / m w) X(t) - I_c Y(t))) B0(s, X(t), Y(t))` with
/// `X = x cos(w t) - m w y sin(w t)`, `Y = (x / m w) sin(w t) + y cos(w t)`.
pub fn p_solution_observable(b0: &GaussFun, force: &ForceProfile, params: &OscillatorParams, t: f64) -> GaussFun {
    let mw = params.omega_m();
    let (sn, cs) = (params.omega * t).sin_cos();
    let rows = [[cs, -mw * sn], [sn / mw, cs]];
    let (kx, ky) = p_solution_prefactor(force, params, t);
    let lin = [
        C64::new(0.0, 2.0 * PI * (kx * rows[0][0] - ky * rows[1][0])),
        C64::new(0.0, 2.0 * PI * (kx * rows[0][1] - ky * rows[1][1])),
    ];
    b0.linear_change(rows, [0.0, 0.0]).mul_exp_linear(lin, C64::new(0.0, 0.0))
}

/// Unforced evolution `B0(e^{tK}(x, y))` with the transport matrix
/// `K = [[0, -w^2 m], [1/m, 0]]` exponentiated numerically.
pub fn free_observable_conjugation(b0: &GaussFun, params: &OscillatorParams, t: f64) -> GaussFun {
    let k = DMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(0.0, 0.0),
            C64::new(-params.omega * params.omega_m() * t, 0.0),
            C64::new(t / params.mass, 0.0),
            C64::new(0.0, 0.0),
        ],
    );
    let e = expm(&k);
    b0.linear_change([[e[(0, 0)].re, e[(0, 1)].re], [e[(1, 0)].re, e[(1, 1)].re]], [0.0, 0.0])
}

/// Residual of `dB/dt = (x/m) dB/dy - w^2 m y dB/dx - 2 pi i z(t) y B` at
/// `(s, x, y)`, with a central difference of step `dt`.
pub fn pde_residual(
    b0: &GaussFun,
    force: &ForceProfile,
    params: &OscillatorParams,
    t: f64,
    point: (f64, f64, f64),
    dt: f64,
) -> f64 {
    let (s, x, y) = point;
    let at = |tt: f64| p_solution_observable(b0, force, params, tt);
    let lhs = (at(t + dt).eval(s, x, y) - at(t - dt).eval(s, x, y)) / (2.0 * dt);
    let b = at(t);
    let rhs = b.differentiate_y().eval(s, x, y) * (x / params.mass)
        - b.differentiate_x().eval(s, x, y) * (params.omega * params.omega_m() * y)
        - b.eval(s, x, y) * C64::new(0.0, 2.0 * PI * force.value(t) * y);
    (lhs - rhs).norm()
}

/// The evolved classical observable
/// `F(q cos - (p / m w) sin + I_s / m w, q m w sin + p cos - I_c)`.
pub fn classical_flow_from_p(
    f: &SymbolPoly,
    force: &ForceProfile,
    params: &OscillatorParams,
    t: f64,
    pt: PhasePoint,
) -> C64 {
    let mw = params.omega_m();
    let (sn, cs) = (params.omega * t).sin_cos();
    let (i_s, i_c) = force_integrals(force, params.omega, t);
    let arg = PhasePoint::new(pt.q * cs - pt.p / mw * sn + i_s / mw, pt.q * mw * sn + pt.p * cs - i_c);
    evaluate(f, arg)
}

/// Interaction-picture coherent label after `[t1, t2]`: `(a + w m Re eta,
/// b - Im eta)` and the phase `e^{2 pi xi / (i h)}`.
pub fn coherent_trajectory(label: &CoherentLabel, force: &ForceProfile, t1: f64, t2: f64) -> Result<(CoherentLabel, C64)> {
    if label.h == 0.0 {
        return Err(PmechError::ClassicalBranch);
    }
    let ex = eta_xi(force, &label.params, t1, t2)?;
    let moved = CoherentLabel {
        a: label.a + label.params.omega_m() * ex.eta.re,
        b: label.b - ex.eta.im,
        ..*label
    };
    Ok((moved, C64::from_polar(1.0, -2.0 * PI * ex.xi / label.h)))
}

/// Label read off the Fock side: propagate the coherent state of `label`
/// over `[t1, t2]` and invert `alpha = (m w a + i b) / sqrt(2 hbar m w)`.
pub fn coherent_trajectory_fock(
    label: &CoherentLabel,
    force: &ForceProfile,
    t1: f64,
    t2: f64,
    n: usize,
) -> Result<CoherentLabel> {
    let prop = Propagator::new(force, &label.params, label.h, t1, t2)?;
    let state = FockVector::coherent(n, label.fock_alpha());
    let out = prop.matrix(n)?.apply(&state);
    // <a> from the first n - 1 levels.
    let alpha: C64 = (1..n).map(|k| out.amplitude(k) * out.amplitude(k - 1).conj() * (k as f64).sqrt()).sum();
    let hbar = label.h / (2.0 * PI);
    let mw = label.params.omega_m();
    let scale = (2.0 * hbar * mw).sqrt();
    Ok(CoherentLabel { a: alpha.re * scale / mw, b: alpha.im * scale, ..*label })
}

/// Classical interaction-frame drift `(-I_s / m w, I_c)` over `[t1, t2]`:
/// the forced point pulled back through the free flow.
pub fn classical_interaction_drift(force: &ForceProfile, params: &OscillatorParams, t1: f64, t2: f64) -> (f64, f64) {
    let eta = force_fourier(force, params.omega, t1, t2);
    (-eta.im / params.omega_m(), eta.re)
}

/// Affine flow `(q, p) -> Phi (q, p) + c` of a real quadratic Hamiltonian.
pub fn quadratic_flow(h: &SymbolPoly, t: f64) -> Result<([[f64; 2]; 2], [f64; 2])> {
    if h.degree() > 2 || h.terms().any(|(_, c)| c.im != 0.0) {
        return Err(PmechError::InvalidParameter("expected a real Hamiltonian of degree <= 2".into()));
    }
    let c = |i, j| h.coeff(i, j).re;
    // q' = dH/dp, p' = -dH/dq
    let gen = [
        [c(1, 1), 2.0 * c(0, 2), c(0, 1)],
        [-2.0 * c(2, 0), -c(1, 1), -c(1, 0)],
        [0.0, 0.0, 0.0],
    ];
    let m = DMatrix::from_fn(3, 3, |i, j| C64::new(gen[i][j] * t, 0.0));
    let e = expm(&m);
    Ok(([[e[(0, 0)].re, e[(0, 1)].re], [e[(1, 0)].re, e[(1, 1)].re]], [e[(0, 2)].re, e[(1, 2)].re]))
}

/// Mean and covariance of the coherent weight transported by the flow.
fn evolved_weight(label: &CoherentLabel, h: &SymbolPoly, t: f64) -> Result<(PhasePoint, [[f64; 2]; 2])> {
    let (phi, c) = quadratic_flow(h, t)?;
    let mean = PhasePoint::new(
        phi[0][0] * label.a + phi[0][1] * label.b + c[0],
        phi[1][0] * label.a + phi[1][1] * label.b + c[1],
    );
    let (vq, vp) = label.variances();
    let mut cov = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            cov[i][j] = phi[i][0] * vq * phi[j][0] + phi[i][1] * vp * phi[j][1];
        }
    }
    Ok((mean, cov))
}

/// `max_B |d/dt int B l_t - int [[B, H]] l_t|` over `observables`, with the
/// kernel transported by the quadratic Hamiltonian and a central difference
/// of step `dt`.
pub fn kernel_evolution_check(
    label: &CoherentLabel,
    h: &SymbolPoly,
    observables: &[SymbolPoly],
    t: f64,
    dt: f64,
) -> Result<f64> {
    let (m_plus, c_plus) = evolved_weight(label, h, t + dt)?;
    let (m_minus, c_minus) = evolved_weight(label, h, t - dt)?;
    let (m0, c0) = evolved_weight(label, h, t)?;
    let mut worst = 0.0f64;
    for b in observables {
        let lhs = (gaussian_expectation(m_plus, &c_plus, b) - gaussian_expectation(m_minus, &c_minus, b)) / (2.0 * dt);
        let rhs = gaussian_expectation(m0, &c0, &poisson_bracket(b, h)?);
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}
