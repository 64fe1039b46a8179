//! Truncated number-basis realization of `rho_h`: ladder operators,
//! represented symbols, displacements, the S-matrix and picture checks.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::classical::force_fourier;
use crate::coherent::CoherentLabel;
use crate::error::{PmechError, Result};
use crate::symbols::{ForceProfile, OscillatorParams, SymbolPoly};

pub const DEFAULT_DIM: usize = 64;
pub const MAX_SYMBOL_DEGREE: u32 = 4;

const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// Dense operator on `span{|0>, ..., |N-1>}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrix {
    m: DMatrix<C64>,
}

/// State in the truncated number basis.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    v: DVector<C64>,
}

impl FockMatrix {
    pub fn from_matrix(m: DMatrix<C64>) -> Self {
        assert!(m.is_square(), "Fock operators are square");
        Self { m }
    }

    pub fn identity(n: usize) -> Self {
        Self { m: DMatrix::identity(n, n) }
    }

    pub fn zeros(n: usize) -> Self {
        Self { m: DMatrix::zeros(n, n) }
    }

    pub fn diagonal(d: impl IntoIterator<Item = C64>) -> Self {
        Self { m: DMatrix::from_diagonal(&DVector::from_vec(d.into_iter().collect())) }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn adjoint(&self) -> Self {
        Self { m: self.m.adjoint() }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { m: &self.m * s }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { m: &self.m + &other.m }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { m: &self.m - &other.m }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { m: &self.m * &other.m }
    }

    pub fn apply(&self, v: &FockVector) -> FockVector {
        FockVector { v: &self.m * &v.v }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        Self { m: &self.m * &other.m - &other.m * &self.m }
    }

    /// Top-left `k x k` block.
    pub fn crop(&self, k: usize) -> Self {
        Self { m: self.m.view((0, 0), (k, k)).into_owned() }
    }

    /// Largest entry modulus in the top-left `k x k` block.
    pub fn block_max_abs(&self, k: usize) -> f64 {
        let k = k.min(self.dim());
        self.m.view((0, 0), (k, k)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.block_max_abs(self.dim())
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.sub(&self.adjoint()).max_abs() <= tol
    }
}

impl FockVector {
    pub fn from_vec(v: Vec<C64>) -> Self {
        Self { v: DVector::from_vec(v) }
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = DVector::zeros(n);
        v[k] = ONE;
        Self { v }
    }

    /// Closed-form coherent amplitudes `e^{-|a|^2/2} a^n / sqrt(n!)`.
    pub fn coherent(n: usize, alpha: C64) -> Self {
        let mut v = DVector::zeros(n);
        let mut amp = C64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
        for k in 0..n {
            v[k] = amp;
            amp = amp * alpha / ((k + 1) as f64).sqrt();
        }
        Self { v }
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn as_vector(&self) -> &DVector<C64> {
        &self.v
    }

    pub fn amplitude(&self, k: usize) -> C64 {
        self.v[k]
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { v: &self.v * s }
    }

    /// `<u, v> = sum u_k conj(v_k)`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.v.iter().zip(other.v.iter()).map(|(a, b)| a * b.conj()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.v.norm()
    }

    /// `<B f, f>`.
    pub fn expect(&self, b: &FockMatrix) -> C64 {
        b.apply(self).inner(self)
    }

    /// `min_phase |u - e^{i phase} v|`.
    pub fn distance_up_to_phase(&self, other: &Self) -> f64 {
        let ov = self.inner(other);
        let phase = if ov.norm() > 0.0 { ov / ov.norm() } else { ONE };
        (&self.v - &other.v * phase).norm()
    }
}

impl CoherentLabel {
    /// `alpha = (m w a + i b) / sqrt(2 hbar m w)`.
    pub fn fock_alpha(&self) -> C64 {
        let hbar = self.h / (2.0 * PI);
        C64::new(self.params.omega_m() * self.a, self.b) / (2.0 * hbar * self.params.omega_m()).sqrt()
    }
}

// Pade [13/13] coefficients (Higham 2005).
const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371_920_351_148_152;

fn one_norm(a: &DMatrix<C64>) -> f64 {
    a.column_iter().map(|c| c.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Matrix exponential by scaling and squaring with a [13/13] Pade approximant.
pub fn expm(a: &DMatrix<C64>) -> DMatrix<C64> {
    let n = a.nrows();
    let norm = one_norm(a);
    let s = if norm > THETA13 { (norm / THETA13).log2().ceil() as i32 } else { 0 };
    let a = a * C64::new(0.5f64.powi(s), 0.0);
    let b = |k: usize| C64::new(PADE13[k], 0.0);
    let id = DMatrix::<C64>::identity(n, n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_inner = &a6 * (&a6 * b(13) + &a4 * b(11) + &a2 * b(9)) + &a6 * b(7) + &a4 * b(5) + &a2 * b(3) + &id * b(1);
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b(12) + &a4 * b(10) + &a2 * b(8)) + &a6 * b(6) + &a4 * b(4) + &a2 * b(2) + &id * b(0);
    let mut r = (&v - &u).lu().solve(&(&v + &u)).expect("Pade denominator is invertible after scaling");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

/// Unit ladder `a` with `a|n> = sqrt(n)|n-1>`.
pub fn annihilation(n: usize) -> FockMatrix {
    let mut m = DMatrix::zeros(n, n);
    for k in 1..n {
        m[(k - 1, k)] = C64::new((k as f64).sqrt(), 0.0);
    }
    FockMatrix { m }
}

pub fn creation(n: usize) -> FockMatrix {
    annihilation(n).adjoint()
}

fn hbar(h: f64) -> f64 {
    h / (2.0 * PI)
}

fn require_h(h: f64) -> Result<()> {
    if h == 0.0 {
        return Err(PmechError::ClassicalBranch);
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(PmechError::InvalidParameter(format!("h must be positive, got {h}")));
    }
    Ok(())
}

/// `(Aplus, Aminus)` with `[Aminus, Aplus] = hbar w m` away from the cut.
pub fn ladder_matrices(n: usize, h: f64, params: &OscillatorParams) -> Result<(FockMatrix, FockMatrix)> {
    if n < 2 {
        return Err(PmechError::InvalidParameter(format!("truncation must be >= 2, got {n}")));
    }
    require_h(h)?;
    let s = C64::new((hbar(h) * params.omega_m()).sqrt(), 0.0);
    let minus = annihilation(n).scale(s);
    Ok((minus.adjoint(), minus))
}

/// `(Q, P)` on `n` levels.
pub fn position_momentum(n: usize, h: f64, params: &OscillatorParams) -> Result<(FockMatrix, FockMatrix)> {
    require_h(h)?;
    let a = annihilation(n);
    let ad = a.adjoint();
    let hb = hbar(h);
    let wm = params.omega_m();
    let q = a.add(&ad).scale(C64::new((0.5 * hb / wm).sqrt(), 0.0));
    let p = ad.sub(&a).scale(C64::new(0.0, (0.5 * hb * wm).sqrt()));
    Ok((q, p))
}

/// `rho_h(F)` in the Weyl ordering, exact on the first `n` levels.
pub fn represent_symbol(f: &SymbolPoly, n: usize, h: f64, params: &OscillatorParams) -> Result<FockMatrix> {
    let deg = f.degree();
    if deg > MAX_SYMBOL_DEGREE {
        return Err(PmechError::DegreeLimit { degree: deg, max: MAX_SYMBOL_DEGREE });
    }
    // Work with headroom so products are exact on the retained block.
    let big = n + deg as usize + 1;
    let (q, p) = position_momentum(big, h, params)?;
    let mut acc = FockMatrix::zeros(big);
    for ((i, j), coeff) in f.terms() {
        let len = (i + j) as usize;
        let mut words = 0u32;
        let mut sum = FockMatrix::zeros(big);
        for mask in 0u32..(1u32 << len) {
            if mask.count_ones() != j {
                continue;
            }
            words += 1;
            let mut w = FockMatrix::identity(big);
            for bit in 0..len {
                w = w.mul(if mask >> bit & 1 == 1 { &p } else { &q });
            }
            sum = sum.add(&w);
        }
        acc = acc.add(&sum.scale(coeff / words as f64));
    }
    Ok(acc.crop(n))
}

/// `(1/i hbar)[B1, B2]`.
pub fn universal_bracket_fock(b1: &FockMatrix, b2: &FockMatrix, h: f64) -> Result<FockMatrix> {
    if b1.dim() != b2.dim() {
        return Err(PmechError::DimensionMismatch { left: b1.dim(), right: b2.dim() });
    }
    require_h(h)?;
    Ok(b1.commutator(b2).scale(ONE / C64::new(0.0, hbar(h))))
}

fn displacement_guard(n: usize, alpha: C64) -> Result<()> {
    let a2 = alpha.norm_sqr();
    if !a2.is_finite() || a2 > n as f64 / 4.0 {
        return Err(PmechError::Truncation { alpha_sq: a2, needed: (4.0 * a2).ceil() as usize, dim: n });
    }
    Ok(())
}

/// `D(alpha) = exp(alpha a^+ - conj(alpha) a)` for unit ladders.
pub fn displacement(n: usize, alpha: C64) -> Result<FockMatrix> {
    displacement_guard(n, alpha)?;
    let gen = creation(n).scale(alpha).sub(&annihilation(n).scale(alpha.conj()));
    Ok(FockMatrix { m: expm(&gen.m) })
}

/// Deviation of `e^{A1} e^{A2} e^{-[A1,A2]/2}` from `e^{A1+A2}` on the first
/// `k` levels, with `A1 = alpha a^+`, `A2 = -conj(alpha) a`. Both sides are
/// built on `big` levels.
pub fn cbh_residual(k: usize, big: usize, alpha: C64) -> f64 {
    let a1 = creation(big).scale(alpha);
    let a2 = annihilation(big).scale(-alpha.conj());
    let comm = a1.commutator(&a2);
    let lhs = expm(&a1.m) * expm(&a2.m) * expm(&(&comm.m * C64::new(-0.5, 0.0)));
    let rhs = expm(&(&a1.m + &a2.m));
    FockMatrix { m: lhs - rhs }.block_max_abs(k)
}

/// Phase and displacement of the interaction-picture propagator over `[t1, t2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Propagator {
    /// `int z(t) e^{i w t} dt` over the interval.
    pub eta: C64,
    /// `w m |eta|^2`.
    pub xi: f64,
    /// Unit-ladder displacement amplitude `i (w m / hbar)^{1/2} conj(eta)`.
    pub alpha: C64,
    /// `e^{2 pi xi / (i h)}`.
    pub phase: C64,
}

impl Propagator {
    pub fn new(force: &ForceProfile, params: &OscillatorParams, h: f64, t1: f64, t2: f64) -> Result<Self> {
        require_h(h)?;
        let eta = force_fourier(force, params.omega, t1, t2);
        let xi = params.omega_m() * eta.norm_sqr();
        let alpha = C64::new(0.0, (params.omega_m() / hbar(h)).sqrt()) * eta.conj();
        let phase = C64::from_polar(1.0, -2.0 * PI * xi / h);
        Ok(Self { eta, xi, alpha, phase })
    }

    /// Poisson mean `|alpha|^2 = 2 pi w m |eta|^2 / h`.
    pub fn lambda(&self) -> f64 {
        self.alpha.norm_sqr()
    }

    pub fn matrix(&self, n: usize) -> Result<FockMatrix> {
        Ok(displacement(n, self.alpha)?.scale(self.phase))
    }
}

/// Closed-form interaction-picture evolution of `f0` from `t1` to `t2`.
pub fn propagate_interaction(
    n: usize,
    force: &ForceProfile,
    params: &OscillatorParams,
    h: f64,
    t1: f64,
    t2: f64,
    f0: &FockVector,
) -> Result<FockVector> {
    if f0.dim() != n {
        return Err(PmechError::DimensionMismatch { left: n, right: f0.dim() });
    }
    let prop = Propagator::new(force, params, h, t1, t2)?;
    Ok(prop.matrix(n)?.apply(f0))
}

/// Generator `i (w m / hbar)^{1/2} (f a + conj(f) a^+)` with `f = z e^{i w t}`.
fn interaction_generator(
    a: &FockMatrix,
    ad: &FockMatrix,
    force: &ForceProfile,
    params: &OscillatorParams,
    h: f64,
    t: f64,
) -> FockMatrix {
    let f = force.value(t) * C64::from_polar(1.0, params.omega * t);
    let k = C64::new(0.0, (params.omega_m() / hbar(h)).sqrt());
    a.scale(f * k).add(&ad.scale(f.conj() * k))
}

/// Time-ordered RK4 integration of the reduced interaction-picture equation;
/// the brute-force twin of [`propagate_interaction`].
#[allow(clippy::too_many_arguments)]
pub fn propagate_interaction_ode(
    n: usize,
    force: &ForceProfile,
    params: &OscillatorParams,
    h: f64,
    t1: f64,
    t2: f64,
    f0: &FockVector,
    dt: f64,
) -> Result<FockVector> {
    require_h(h)?;
    let a = annihilation(n);
    let ad = a.adjoint();
    let span = t2 - t1;
    let steps = (span.abs() / dt).ceil().max(1.0) as usize;
    let step = span / steps as f64;
    let mut v = f0.v.clone();
    for k in 0..steps {
        let t = t1 + k as f64 * step;
        let g0 = interaction_generator(&a, &ad, force, params, h, t).m;
        let gm = interaction_generator(&a, &ad, force, params, h, t + 0.5 * step).m;
        let g1 = interaction_generator(&a, &ad, force, params, h, t + step).m;
        let k1 = &g0 * &v;
        let k2 = &gm * (&v + &k1 * C64::new(0.5 * step, 0.0));
        let k3 = &gm * (&v + &k2 * C64::new(0.5 * step, 0.0));
        let k4 = &g1 * (&v + &k3 * C64::new(step, 0.0));
        v += (k1 + k2 * C64::new(2.0, 0.0) + k3 * C64::new(2.0, 0.0) + k4) * C64::new(step / 6.0, 0.0);
    }
    Ok(FockVector { v })
}

/// Full-line support of a force, for the S-matrix.
fn scattering_window(force: &ForceProfile) -> Result<(f64, f64)> {
    force.support().ok_or_else(|| {
        PmechError::InvalidParameter("the S-matrix needs a compactly supported force; window the cosine first".into())
    })
}

/// `S = e^{2 pi xi_s / i h} D(alpha_s)` over the support of `force`.
pub fn s_matrix(n: usize, force: &ForceProfile, params: &OscillatorParams, h: f64) -> Result<(FockMatrix, Propagator)> {
    let (t1, t2) = scattering_window(force)?;
    s_matrix_window(n, force, params, h, t1, t2)
}

/// S-matrix of `force` restricted to `[t1, t2]` (a windowed force).
pub fn s_matrix_window(
    n: usize,
    force: &ForceProfile,
    params: &OscillatorParams,
    h: f64,
    t1: f64,
    t2: f64,
) -> Result<(FockMatrix, Propagator)> {
    let prop = Propagator::new(force, params, h, t1, t2)?;
    Ok((prop.matrix(n)?, prop))
}

/// `P_n = |<n|S|0>|^2` for `n <= n_max`.
pub fn transition_probabilities(
    n: usize,
    force: &ForceProfile,
    params: &OscillatorParams,
    h: f64,
    n_max: usize,
) -> Result<(Vec<f64>, Propagator)> {
    if 2 * n_max >= n {
        return Err(PmechError::InvalidParameter(format!("n_max = {n_max} needs N > {}, got N = {n}", 2 * n_max)));
    }
    let (s, prop) = s_matrix(n, force, params, h)?;
    Ok(((0..=n_max).map(|k| s.entry(k, 0).norm_sqr()).collect(), prop))
}

/// `e^{-l} l^n / n!` for `n = 0..=n_max`.
pub fn poisson_pmf(lambda: f64, n_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut p = (-lambda).exp();
    for k in 0..=n_max {
        out.push(p);
        p *= lambda / (k + 1) as f64;
    }
    out
}

/// `exp(t H / i hbar)`.
pub fn schrodinger_propagator(hmat: &FockMatrix, t: f64, h: f64) -> FockMatrix {
    FockMatrix { m: expm(&(&hmat.m * C64::new(0.0, -t / hbar(h)))) }
}

/// `U^* B U` with `U` the Schrodinger propagator.
pub fn heisenberg_evolve(b: &FockMatrix, hmat: &FockMatrix, t: f64, h: f64) -> FockMatrix {
    let u = schrodinger_propagator(hmat, t, h);
    u.adjoint().mul(b).mul(&u)
}

/// `|d/dt <B f(t), f(t)> - <(1/i hbar)[B, H] f(t), f(t)>|` with a central
/// difference of step `dt` and `f` evolved by the Schrodinger equation.
pub fn picture_equivalence_check(
    b: &FockMatrix,
    hmat: &FockMatrix,
    f0: &FockVector,
    t: f64,
    dt: f64,
    h: f64,
) -> Result<f64> {
    let state = |s: f64| schrodinger_propagator(hmat, s, h).apply(f0);
    let lhs = (state(t + dt).expect(b) - state(t - dt).expect(b)) / (2.0 * dt);
    let rhs = state(t).expect(&universal_bracket_fock(b, hmat, h)?);
    Ok((lhs - rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

    #[test]
    fn expm_matches_reference_on_rotation() {
        let m = DMatrix::from_row_slice(2, 2, &[ZERO, C64::new(-3.0, 0.0), C64::new(3.0, 0.0), ZERO]);
        let e = expm(&m);
        assert!((e[(0, 0)].re - 3f64.cos()).abs() < 1e-14);
        assert!((e[(1, 0)].re - 3f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn vacuum_is_annihilated() {
        let (_, minus) = ladder_matrices(8, 1.0, &OscillatorParams::unit()).unwrap();
        assert!(minus.apply(&FockVector::basis(8, 0)).norm() == 0.0);
    }

    #[test]
    fn first_commutator_entry() {
        let params = OscillatorParams::new(1.3, 0.4).unwrap();
        let h = 0.7;
        let (plus, minus) = ladder_matrices(10, h, &params).unwrap();
        let c = minus.commutator(&plus);
        assert!((c.entry(0, 0).re - h / (2.0 * PI) * params.omega_m()).abs() < 1e-12);
    }

    #[test]
    fn degree_cap_for_matrices() {
        let f: SymbolPoly = "q^5".parse().unwrap();
        assert!(matches!(
            represent_symbol(&f, 8, 1.0, &OscillatorParams::unit()),
            Err(PmechError::DegreeLimit { degree: 5, max: 4 })
        ));
    }

    #[test]
    fn displacement_guard_and_identity() {
        assert!(displacement(16, C64::new(2.1, 0.0)).is_err());
        let d = displacement(16, ZERO).unwrap();
        assert!(d.sub(&FockMatrix::identity(16)).max_abs() < 1e-15);
    }

    #[test]
    fn poisson_pmf_sums() {
        let p = poisson_pmf(1.0, 40);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!((p[3] - (-1.0f64).exp() / 6.0).abs() < 1e-16);
    }
}
