//! The Heisenberg group, its representations on phase-space functions, the
//! state space `H_h`, kernels built from vectors, and oscillator eigenfunctions.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::coherent::vacuum_vector;
use crate::error::{PmechError, Result};
use crate::gaussian::{zero_mat, Field, GaussFun, GaussPoly, Side};
use crate::poly::Poly;
use crate::symbols::{OscillatorParams, SymbolPoly};

pub const DEFAULT_MAX_LEVEL: usize = 12;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub s: f64,
    pub x: f64,
    pub y: f64,
}

impl GroupElement {
    pub fn new(s: f64, x: f64, y: f64) -> Self {
        Self { s, x, y }
    }

    pub fn identity() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }
}

/// `(s, x, y)(s', x', y') = (s + s' + (x y' - x' y)/2, x + x', y + y')`.
pub fn group_mul(g1: GroupElement, g2: GroupElement) -> GroupElement {
    GroupElement {
        s: g1.s + g2.s + 0.5 * (g1.x * g2.y - g2.x * g1.y),
        x: g1.x + g2.x,
        y: g1.y + g2.y,
    }
}

pub fn group_inv(g: GroupElement) -> GroupElement {
    GroupElement::new(-g.s, -g.x, -g.y)
}

/// Coadjoint action on `(h, q, p)`.
pub fn ad_star(g: GroupElement, h: f64, q: f64, p: f64) -> (f64, f64, f64) {
    (h, q + h * g.y, p - h * g.x)
}

/// The one-dimensional representation `e^{-2 pi i (q x + p y)}`.
pub fn rho_qp(g: GroupElement, q: f64, p: f64) -> C64 {
    C64::from_polar(1.0, -2.0 * PI * (q * g.x + p * g.y))
}

fn require_positive_h(h: f64) -> Result<()> {
    if h == 0.0 {
        Err(PmechError::ClassicalBranch)
    } else if !(h > 0.0 && h.is_finite()) {
        Err(PmechError::InvalidParameter(format!("h must be positive, got {h}")))
    } else {
        Ok(())
    }
}

/// `[rho_h(g) f](q, p) = e^{-2 pi i (h s + q x + p y)} f(q - h y/2, p + h x/2)`.
pub fn rho_h_action(g: GroupElement, f: &GaussFun, h: f64) -> Result<GaussFun> {
    if h == 0.0 {
        return Err(PmechError::ClassicalBranch);
    }
    let shifted = f.translate(0.5 * h * g.y, -0.5 * h * g.x);
    let lin = [C64::new(0.0, -2.0 * PI * g.x), C64::new(0.0, -2.0 * PI * g.y)];
    Ok(shifted.mul_exp_linear(lin, C64::new(0.0, -2.0 * PI * h * g.s)))
}

/// `(4/h) int f1 conj(f2) dq dp`.
pub fn f2_inner(f1: &GaussFun, f2: &GaussFun, h: f64) -> Result<C64> {
    require_positive_h(h)?;
    Ok(f1.multiply(&f2.conj()).integrate_2d()? * (4.0 / h))
}

/// A vector `e^{2 pi i h s} f(x, y)` of `H_h`.
#[derive(Debug, Clone, PartialEq)]
pub struct HVector {
    fun: GaussFun,
}

impl HVector {
    pub fn new(fun: GaussFun) -> Result<Self> {
        require_positive_h(fun.s_freq)?;
        Ok(Self { fun })
    }

    pub fn h(&self) -> f64 {
        self.fun.s_freq
    }

    pub fn fun(&self) -> &GaussFun {
        &self.fun
    }

    pub fn into_fun(self) -> GaussFun {
        self.fun
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { fun: self.fun.scale(s) }
    }
}

/// A state kernel `e^{-2 pi i h s} l(x, y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateKernel {
    fun: GaussFun,
}

impl StateKernel {
    pub fn new(fun: GaussFun) -> Self {
        Self { fun }
    }

    pub fn h(&self) -> f64 {
        -self.fun.s_freq
    }

    pub fn fun(&self) -> &GaussFun {
        &self.fun
    }

    pub fn eval(&self, g: GroupElement) -> C64 {
        self.fun.eval(g.s, g.x, g.y)
    }
}

/// `(4/h) int v1 conj(v2) dx dy`; the s-factors cancel.
pub fn hh_inner(v1: &HVector, v2: &HVector) -> Result<C64> {
    if v1.h() != v2.h() {
        return Err(PmechError::InvalidParameter(format!("vectors live in H_{} and H_{}", v1.h(), v2.h())));
    }
    Ok(v1.fun.g.mul(&v2.fun.g.conj()).integrate()? * (4.0 / v1.h()))
}

/// `f -> e^{2 pi i h s} f^(x, y)`.
pub fn s_map(f: &GaussFun, h: f64) -> Result<HVector> {
    require_positive_h(h)?;
    HVector::new(f.fourier_2d()?.with_s_freq(h))
}

/// The `h = 0` map: Fourier transform only.
pub fn s0_map(f: &GaussFun) -> Result<GaussFun> {
    Ok(f.fourier_2d()?.with_s_freq(0.0))
}

/// `l(g) = (4/h) int v(g^-1 g') conj(v(g')) dx' dy'`.
pub fn kernel_from_vector(v: &HVector) -> Result<StateKernel> {
    let h = v.h();
    let phi = &v.fun.g;
    // Variables (x, y, x', y'); phi(x' - x, y' - y) conj(phi(x', y')).
    let m1 = C64::new(-1.0, 0.0);
    let shifted: GaussPoly<4> = phi.pullback(&[[m1, ZERO, ONE, ZERO], [ZERO, m1, ZERO, ONE]], &[ZERO; 2]);
    let fixed: GaussPoly<4> = phi.conj().pullback(&[[ZERO, ZERO, ONE, ZERO], [ZERO, ZERO, ZERO, ONE]], &[ZERO; 2]);
    // Group-law phase e^{pi i h (x' y - x y')}.
    let mut dq = zero_mat::<4>();
    let a = C64::new(0.0, 0.5 * PI * h);
    dq[2][1] = -a;
    dq[1][2] = -a;
    dq[0][3] = a;
    dq[3][0] = a;
    let integrand = shifted.mul(&fixed).mul_exp(&dq, &[ZERO; 4], ZERO);
    let l = integrand.integrate_tail::<2>()?.scale(C64::new(4.0 / h, 0.0));
    Ok(StateKernel::new(GaussFun::new(l, -h)))
}

/// `E_h v` with `E_h = 2 pi^2 h (y + i c x) + 2 pi (c d_y + i d_x)`, `c = 1/(w m)`.
pub fn membership_operator(v: &HVector, params: &OscillatorParams) -> GaussFun {
    let h = v.h();
    let c = 1.0 / params.omega_m();
    let f = &v.fun;
    let k = 2.0 * PI * PI * h;
    let mult = f.mul_poly(&Poly::linear(ZERO, [C64::new(0.0, k * c), C64::new(k, 0.0)]));
    let dy = f.differentiate_y().scale(C64::new(2.0 * PI * c, 0.0));
    let dx = f.differentiate_x().scale(C64::new(0.0, 2.0 * PI));
    let poly = &(&mult.g.poly + &dy.g.poly) + &dx.g.poly;
    GaussFun::new(GaussPoly { poly, ..f.g.clone() }, f.s_freq)
}

/// `H_h` norm of `E_h v`; zero exactly for members of `H_h`.
pub fn membership_check(v: &HVector, params: &OscillatorParams) -> Result<f64> {
    let e = HVector { fun: membership_operator(v, params) };
    Ok(hh_inner(&e, &e)?.re.max(0.0).sqrt())
}

/// `A e^{2 pi i h s} = (2 pi / i h) e^{2 pi i h s}`.
pub fn antiderivative_scalar(h: f64) -> Result<C64> {
    if h == 0.0 {
        return Err(PmechError::ClassicalBranch);
    }
    Ok(C64::new(2.0 * PI, 0.0) / C64::new(0.0, h))
}

/// `A (m w (B * X) - i (B * Y))`: the creation field acting from the right.
pub fn ladder_raise(v: &HVector, params: &OscillatorParams) -> Result<HVector> {
    let f = &v.fun;
    let bx = f.invariant_field_apply(Side::Right, Field::X).scale(C64::new(params.omega_m(), 0.0));
    let by = f.invariant_field_apply(Side::Right, Field::Y).scale(C64::new(0.0, -1.0));
    let sum = bx.add(&by)?;
    HVector::new(sum.scale(antiderivative_scalar(v.h())?))
}

fn check_level(n: usize) -> Result<()> {
    if n > DEFAULT_MAX_LEVEL {
        return Err(PmechError::LevelTooLarge { n, max: DEFAULT_MAX_LEVEL });
    }
    Ok(())
}

/// Normalized `v_n = ((pi h / w m)^n / n!)^{1/2} (x - i w m y)^n v_0`.
pub fn eigenfunction(n: usize, h: f64, params: &OscillatorParams) -> Result<HVector> {
    check_level(n)?;
    let v0 = vacuum_vector(h, params)?;
    let z = Poly::linear(ZERO, [ONE, C64::new(0.0, -params.omega_m())]);
    let mut norm = 1.0;
    for k in 1..=n {
        norm *= PI * h / params.omega_m() / k as f64;
    }
    let fun = v0.fun.mul_poly(&z.pow(n as u32)).scale(C64::new(norm.sqrt(), 0.0));
    HVector::new(fun)
}

/// `v_n` built by `n` applications of [`ladder_raise`] to the vacuum.
pub fn eigenfunction_by_ladder(n: usize, h: f64, params: &OscillatorParams) -> Result<HVector> {
    check_level(n)?;
    let kappa = (4.0 * PI * params.omega_m() / h).sqrt();
    let mut v = vacuum_vector(h, params)?;
    for k in 0..n {
        let raised = ladder_raise(&v, params)?;
        v = raised.scale(C64::new(1.0 / (kappa * ((k + 1) as f64).sqrt()), 0.0));
    }
    Ok(v)
}

/// A real symbol gives a Hermitian observable: `B(g) = conj(B(g^-1))`.
pub fn is_hermitian(b: &SymbolPoly) -> bool {
    b.terms().all(|(_, c)| c.im == 0.0)
}

/// `Q f = q f + (i hbar / 2) df/dp`.
pub fn position_op(f: &GaussFun, h: f64) -> GaussFun {
    let hbar = h / (2.0 * PI);
    let a = f.mul_poly(&Poly::var(0));
    let b = f.differentiate_y().scale(C64::new(0.0, 0.5 * hbar));
    GaussFun::new(GaussPoly { poly: &a.g.poly + &b.g.poly, ..f.g.clone() }, f.s_freq)
}

/// `P f = p f - (i hbar / 2) df/dq`.
pub fn momentum_op(f: &GaussFun, h: f64) -> GaussFun {
    let hbar = h / (2.0 * PI);
    let a = f.mul_poly(&Poly::var(1));
    let b = f.differentiate_x().scale(C64::new(0.0, -0.5 * hbar));
    GaussFun::new(GaussPoly { poly: &a.g.poly + &b.g.poly, ..f.g.clone() }, f.s_freq)
}

/// `rho_h(F) f` for the Weyl (fully symmetrized) ordering of `F(Q, P)`.
pub fn rho_h_symbol(b: &SymbolPoly, h: f64, f: &GaussFun) -> Result<GaussFun> {
    require_positive_h(h)?;
    let mut poly = Poly::zero();
    for ((i, j), coeff) in b.terms() {
        let n = (i + j) as usize;
        let mut words = 0u64;
        let mut acc = Poly::zero();
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() != j {
                continue;
            }
            words += 1;
            let mut g = f.clone();
            for bit in 0..n {
                g = if mask >> bit & 1 == 1 { momentum_op(&g, h) } else { position_op(&g, h) };
            }
            acc = &acc + &g.g.poly;
        }
        poly = &poly + &acc.scale(coeff / words as f64);
    }
    Ok(GaussFun::new(GaussPoly { poly, ..f.g.clone() }, f.s_freq))
}
