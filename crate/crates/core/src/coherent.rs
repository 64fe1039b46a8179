//! Vacuum and coherent states, their kernels and expectation values, and the
//! classical limit `h -> 0`.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{PmechError, Result};
use crate::gaussian::GaussFun;
use crate::heisenberg::{rho_h_action, s_map, GroupElement, HVector, StateKernel};
use crate::symbols::{evaluate, OscillatorParams, PhasePoint, SymbolPoly};

/// `(h/2) e^{2 pi i h s} exp(-(pi h / 2)(x^2 / w m + w m y^2))`.
pub fn vacuum_vector(h: f64, params: &OscillatorParams) -> Result<HVector> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(PmechError::InvalidParameter(format!("the vacuum needs h > 0, got {h}")));
    }
    let wm = params.omega_m();
    let g = GaussFun::diagonal(0.5 * PI * h / wm, 0.5 * PI * h * wm).scale(C64::new(0.5 * h, 0.0));
    HVector::new(g.with_s_freq(h))
}

/// A coherent state `k_(h,a,b)`; `h = 0` is the classical pure state at `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentLabel {
    pub h: f64,
    pub a: f64,
    pub b: f64,
    pub params: OscillatorParams,
}

impl CoherentLabel {
    pub fn new(h: f64, a: f64, b: f64, params: OscillatorParams) -> Result<Self> {
        if !(h >= 0.0 && h.is_finite()) {
            return Err(PmechError::InvalidParameter(format!("h must be >= 0, got {h}")));
        }
        if !(a.is_finite() && b.is_finite()) {
            return Err(PmechError::InvalidParameter("label coordinates must be finite".into()));
        }
        Ok(Self { h, a, b, params })
    }

    pub fn point(&self) -> PhasePoint {
        PhasePoint::new(self.a, self.b)
    }

    fn require_quantum(&self) -> Result<()> {
        if self.h > 0.0 { Ok(()) } else { Err(PmechError::ClassicalBranch) }
    }

    /// Variances of the smoothing Gaussian in `q` and `p`: `hbar/(2 w m)`, `hbar w m / 2`.
    pub fn variances(&self) -> (f64, f64) {
        let hbar = self.h / (2.0 * PI);
        let wm = self.params.omega_m();
        (0.5 * hbar / wm, 0.5 * hbar * wm)
    }
}

/// Phase-space vacuum `exp(-(2 pi / h)(w m q^2 + p^2 / w m))`, unit norm in `F^2`.
pub fn vacuum_f2(h: f64, params: &OscillatorParams) -> Result<GaussFun> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(PmechError::InvalidParameter(format!("the vacuum needs h > 0, got {h}")));
    }
    let wm = params.omega_m();
    Ok(GaussFun::diagonal(2.0 * PI * wm / h, 2.0 * PI / (h * wm)))
}

/// `rho_h(0, -b/h, a/h) f_0`: the phase-space coherent state with
/// `<Q> = a`, `<P> = b`.
pub fn coherent_f2(label: &CoherentLabel) -> Result<GaussFun> {
    label.require_quantum()?;
    let f0 = vacuum_f2(label.h, &label.params)?;
    let g = GroupElement::new(0.0, -label.b / label.h, label.a / label.h);
    rho_h_action(g, &f0, label.h)
}

/// The `H_h` vector whose kernel is [`coherent_kernel`].
///
/// Under the `e^{-2 pi i}` transform the kernel of `S_h f` is the parity image
/// of the kernel read from `f`'s moments, so the vector is the reflected
/// `S_h` image of [`coherent_f2`]: a translated, phase-modulated vacuum.
pub fn coherent_vector(label: &CoherentLabel) -> Result<HVector> {
    HVector::new(s_map(&coherent_f2(label)?, label.h)?.fun().parity())
}

/// `exp(-2 pi i (a x + b y) - 2 pi i h s - (pi h / 2)(x^2 / w m + w m y^2))`.
pub fn coherent_kernel(label: &CoherentLabel) -> Result<StateKernel> {
    label.require_quantum()?;
    let wm = label.params.omega_m();
    let h = label.h;
    let g = GaussFun::diagonal(0.5 * PI * h / wm, 0.5 * PI * h * wm).mul_exp_linear(
        [C64::new(0.0, -2.0 * PI * label.a), C64::new(0.0, -2.0 * PI * label.b)],
        C64::new(0.0, 0.0),
    );
    Ok(StateKernel::new(g.with_s_freq(-h)))
}

/// `E[u^k v^l]` for a centred Gaussian with covariance `[[suu, suv], [suv, svv]]`.
fn bivariate_moment(k: u32, l: u32, cov: &[[f64; 2]; 2], memo: &mut HashMap<(u32, u32), f64>) -> f64 {
    if (k + l) % 2 == 1 {
        return 0.0;
    }
    if k == 0 && l == 0 {
        return 1.0;
    }
    if let Some(v) = memo.get(&(k, l)) {
        return *v;
    }
    // Peel one factor off (Stein's identity).
    let v = if k > 0 {
        let mut acc = 0.0;
        if k >= 2 {
            acc += (k - 1) as f64 * cov[0][0] * bivariate_moment(k - 2, l, cov, memo);
        }
        if l >= 1 {
            acc += l as f64 * cov[0][1] * bivariate_moment(k - 1, l - 1, cov, memo);
        }
        acc
    } else {
        (l - 1) as f64 * cov[1][1] * bivariate_moment(0, l - 2, cov, memo)
    };
    memo.insert((k, l), v);
    v
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `E[F(a + u, b + v)]` for `(u, v)` centred Gaussian with covariance `cov`
/// (which may be singular).
pub fn gaussian_expectation(mean: PhasePoint, cov: &[[f64; 2]; 2], f: &SymbolPoly) -> C64 {
    let mut memo = HashMap::new();
    let mut acc = C64::new(0.0, 0.0);
    for ((i, j), c) in f.terms() {
        let mut s = 0.0;
        for k in 0..=i {
            for l in 0..=j {
                let m = bivariate_moment(k, l, cov, &mut memo);
                if m != 0.0 {
                    s += binomial(i, k) * binomial(j, l) * mean.q.powi((i - k) as i32) * mean.p.powi((j - l) as i32) * m;
                }
            }
        }
        acc += c * s;
    }
    acc
}

/// `k_(h,a,b)(F)`: the symbol averaged against the normalized Gaussian centred
/// at `(a, b)` with the widths of [`CoherentLabel::variances`]. At `h = 0` this
/// is the pure-state value `F(a, b)`.
pub fn expectation(label: &CoherentLabel, f: &SymbolPoly) -> C64 {
    let (vq, vp) = label.variances();
    gaussian_expectation(label.point(), &[[vq, 0.0], [0.0, vp]], f)
}

/// `int B l` for the p-mechanisation `B` of `F`, read off the kernel's
/// derivatives at the origin: `q^i p^j -> (i / 2 pi)^(i+j) d_x^i d_y^j l (0)`.
pub fn expectation_from_kernel(kernel: &StateKernel, f: &SymbolPoly) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    let factor = C64::new(0.0, 1.0 / (2.0 * PI));
    for ((i, j), c) in f.terms() {
        let mut d = kernel.fun().clone();
        for _ in 0..i {
            d = d.differentiate_x();
        }
        for _ in 0..j {
            d = d.differentiate_y();
        }
        acc += c * factor.powu(i + j) * d.eval_xy(0.0, 0.0);
    }
    acc
}

/// The classical pure state: `F(a, b)`.
pub fn pure_state_eval(a: f64, b: f64, f: &SymbolPoly) -> C64 {
    evaluate(f, PhasePoint::new(a, b))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitRow {
    pub h: f64,
    pub value: C64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitSweep {
    pub rows: Vec<LimitRow>,
    /// Exponent of `error ~ h^k` fitted on log-log scale; `None` when fewer
    /// than two errors are nonzero.
    pub slope: Option<f64>,
}

/// `|k_(h,a,b)(F) - F(a, b)|` along a descending list of `h`.
pub fn classical_limit_sweep(
    a: f64,
    b: f64,
    f: &SymbolPoly,
    h_list: &[f64],
    params: &OscillatorParams,
) -> Result<LimitSweep> {
    if h_list.is_empty() {
        return Err(PmechError::InvalidParameter("empty h grid".into()));
    }
    if h_list.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
        return Err(PmechError::InvalidParameter("h grid must be positive".into()));
    }
    if h_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(PmechError::InvalidParameter("h grid must be strictly descending".into()));
    }
    let exact = pure_state_eval(a, b, f);
    let rows: Vec<LimitRow> = h_list
        .iter()
        .map(|&h| {
            let label = CoherentLabel { h, a, b, params: *params };
            let value = expectation(&label, f);
            LimitRow { h, value, abs_error: (value - exact).norm() }
        })
        .collect();
    let logs: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.abs_error > 0.0)
        .map(|r| (r.h.ln(), r.abs_error.ln()))
        .collect();
    let slope = (logs.len() >= 2).then(|| crate::classical::linear_fit(&logs).0);
    Ok(LimitSweep { rows, slope })
}
