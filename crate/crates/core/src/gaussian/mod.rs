//! Exact calculus on Gaussian-polynomial functions
//! `P(v) exp(-v^T Q v + L^T v + c0)` with complex data.
//!
//! The class is closed under products, derivatives, affine changes of
//! variables, partial integration and Fourier transform, so every state,
//! kernel and evolved observable in the crate stays symbolic.

#![allow(clippy::needless_range_loop)]

pub mod quadrature;

use std::collections::HashMap;
use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use crate::error::{PmechError, Result};
use crate::poly::Poly;

pub type Mat<const N: usize> = [[C64; N]; N];

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const ONE: C64 = C64 { re: 1.0, im: 0.0 };

pub fn zero_mat<const N: usize>() -> Mat<N> {
    [[ZERO; N]; N]
}

/// `int exp(-a x^2 + b x + c) dx = sqrt(pi / a) exp(b^2 / 4a + c)`.
pub fn gauss_integral_1d(a: C64, b: C64, c: C64) -> Result<C64> {
    if a.re.is_nan() || a.re <= 0.0 {
        return Err(PmechError::NotIntegrable(format!("Re(a) must be > 0, got a = {a}")));
    }
    Ok((PI / a).sqrt() * (b * b / (4.0 * a) + c).exp())
}

/// `P(v) exp(-v^T Q v + L^T v + c0)` in `N` variables. `Q` is kept symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussPoly<const N: usize> {
    pub poly: Poly<N>,
    pub quad: Mat<N>,
    pub lin: [C64; N],
    pub c0: C64,
}

fn symmetrized<const N: usize>(q: Mat<N>) -> Mat<N> {
    let mut s = q;
    for i in 0..N {
        for j in 0..i {
            let m = 0.5 * (q[i][j] + q[j][i]);
            s[i][j] = m;
            s[j][i] = m;
        }
    }
    s
}

fn real_part_is_pd(m: &DMatrix<C64>) -> bool {
    m.nrows() == 0 || m.map(|z| z.re).cholesky().is_some()
}

/// Pivots of Gaussian elimination without row exchanges.
fn elimination_pivots(m: &DMatrix<C64>) -> Vec<C64> {
    let mut a = m.clone();
    let n = a.nrows();
    let mut piv = Vec::with_capacity(n);
    for k in 0..n {
        let d = a[(k, k)];
        piv.push(d);
        for i in k + 1..n {
            let f = a[(i, k)] / d;
            for j in k..n {
                let t = a[(k, j)];
                a[(i, j)] -= f * t;
            }
        }
    }
    piv
}

/// `E[u^beta]` for a centred complex Gaussian with covariance `sigma`.
struct Moments<'a> {
    sigma: &'a DMatrix<C64>,
    memo: HashMap<Vec<u32>, C64>,
}

impl Moments<'_> {
    fn get(&mut self, beta: &[u32]) -> C64 {
        if let Some(v) = self.memo.get(beta) {
            return *v;
        }
        let total: u32 = beta.iter().sum();
        let value = if total == 0 {
            ONE
        } else if total % 2 == 1 {
            ZERO
        } else {
            // E[u_i u^g] = sum_j sigma_ij g_j E[u^(g - e_j)], with g = beta - e_i.
            let i = beta.iter().position(|&b| b > 0).expect("nonzero total");
            let mut g = beta.to_vec();
            g[i] -= 1;
            let mut acc = ZERO;
            for j in 0..g.len() {
                if g[j] > 0 {
                    let mut h = g.clone();
                    h[j] -= 1;
                    acc += self.sigma[(i, j)] * g[j] as f64 * self.get(&h);
                }
            }
            acc
        };
        self.memo.insert(beta.to_vec(), value);
        value
    }
}

impl<const N: usize> GaussPoly<N> {
    pub fn new(poly: Poly<N>, quad: Mat<N>, lin: [C64; N], c0: C64) -> Self {
        Self { poly, quad: symmetrized(quad), lin, c0 }
    }

    pub fn gaussian(quad: Mat<N>, lin: [C64; N], c0: C64) -> Self {
        Self::new(Poly::one(), quad, lin, c0)
    }

    pub fn exponent_at(&self, v: &[C64; N]) -> C64 {
        let mut e = self.c0;
        for i in 0..N {
            e += self.lin[i] * v[i];
            for j in 0..N {
                e -= v[i] * self.quad[i][j] * v[j];
            }
        }
        e
    }

    pub fn eval(&self, v: &[C64; N]) -> C64 {
        if self.poly.is_zero() {
            return ZERO;
        }
        self.poly.eval(v) * self.exponent_at(v).exp()
    }

    pub fn quad_matrix(&self) -> DMatrix<C64> {
        DMatrix::from_fn(N, N, |i, j| self.quad[i][j])
    }

    /// Integrable over all variables iff `Re Q` is positive definite.
    pub fn is_integrable(&self) -> bool {
        real_part_is_pd(&self.quad_matrix())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut quad = self.quad;
        let mut lin = self.lin;
        for i in 0..N {
            lin[i] += other.lin[i];
            for j in 0..N {
                quad[i][j] += other.quad[i][j];
            }
        }
        Self { poly: &self.poly * &other.poly, quad, lin, c0: self.c0 + other.c0 }
    }

    pub fn mul_poly(&self, p: &Poly<N>) -> Self {
        Self { poly: &self.poly * p, ..self.clone() }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { poly: self.poly.scale(s), ..self.clone() }
    }

    /// Multiplies by `exp(-v^T dq v + dl^T v + dc)`.
    pub fn mul_exp(&self, dq: &Mat<N>, dl: &[C64; N], dc: C64) -> Self {
        self.mul(&Self { poly: Poly::one(), quad: symmetrized(*dq), lin: *dl, c0: dc })
    }

    /// `d/dv_i`.
    pub fn derivative(&self, i: usize) -> Self {
        // d(exponent)/dv_i = L_i - 2 (Q v)_i
        let mut grad = [ZERO; N];
        for (j, g) in grad.iter_mut().enumerate() {
            *g = -2.0 * self.quad[i][j];
        }
        let dexp = Poly::linear(self.lin[i], grad);
        let poly = &self.poly.derivative(i) + &(&self.poly * &dexp);
        Self { poly, ..self.clone() }
    }

    /// The function `w -> f(A w + d)`; row `i` of `a` expresses `v_i` in `w`.
    pub fn pullback<const M: usize>(&self, a: &[[C64; M]; N], d: &[C64; N]) -> GaussPoly<M> {
        let subs: [Poly<M>; N] = std::array::from_fn(|i| Poly::linear(d[i], a[i]));
        let poly = self.poly.compose(&subs);
        let mut qd = [ZERO; N];
        for i in 0..N {
            for l in 0..N {
                qd[i] += self.quad[i][l] * d[l];
            }
        }
        let mut quad = [[ZERO; M]; M];
        let mut lin = [ZERO; M];
        for j in 0..M {
            for i in 0..N {
                lin[j] += a[i][j] * (self.lin[i] - 2.0 * qd[i]);
            }
            for k in 0..M {
                let mut acc = ZERO;
                for i in 0..N {
                    for l in 0..N {
                        acc += a[i][j] * self.quad[i][l] * a[l][k];
                    }
                }
                quad[j][k] = acc;
            }
        }
        let mut c0 = self.c0;
        for i in 0..N {
            c0 += self.lin[i] * d[i] - d[i] * qd[i];
        }
        GaussPoly::new(poly, quad, lin, c0)
    }

    /// Integrates out the last `N - M` variables, keeping the first `M`.
    pub fn integrate_tail<const M: usize>(&self) -> Result<GaussPoly<M>> {
        assert!(M <= N, "cannot keep more variables than exist");
        let k = N - M;
        let q = self.quad_matrix();
        let c = q.view((M, M), (k, k)).into_owned();
        if !real_part_is_pd(&c) {
            return Err(PmechError::NotIntegrable("real part of the integrated block is not positive definite".into()));
        }
        let b = q.view((0, M), (M, k)).into_owned();
        let cinv = c
            .clone()
            .try_inverse()
            .ok_or_else(|| PmechError::NotIntegrable("singular quadratic form".into()))?;
        let prefactor: C64 = elimination_pivots(&c).into_iter().map(|d| (PI / d).sqrt()).product();
        let lv = DVector::from_fn(k, |i, _| self.lin[M + i]);
        let m0 = &cinv * &lv * C64::new(0.5, 0.0);
        let shift = -(&cinv * b.transpose());

        let subs: [Poly<N>; N] = std::array::from_fn(|i| {
            if i < M {
                Poly::var(i)
            } else {
                let r = i - M;
                let coeffs: [C64; N] = std::array::from_fn(|j| {
                    if j < M {
                        shift[(r, j)]
                    } else if j == i {
                        ONE
                    } else {
                        ZERO
                    }
                });
                Poly::linear(m0[r], coeffs)
            }
        });
        let shifted = self.poly.compose(&subs);
        let sigma = &cinv * C64::new(0.5, 0.0);
        let mut moments = Moments { sigma: &sigma, memo: HashMap::new() };
        let mut poly = Poly::<M>::zero();
        for (e, coef) in shifted.terms() {
            let m = moments.get(&e[M..]);
            if m != ZERO {
                let mut w = [0u32; M];
                w.copy_from_slice(&e[..M]);
                poly.add_term(w, coef * m);
            }
        }

        let bc = &b * &cinv;
        let a_out = q.view((0, 0), (M, M)) - &bc * b.transpose();
        let l_out = DVector::from_fn(M, |i, _| self.lin[i]) - &bc * &lv;
        let c_out = self.c0 + (lv.transpose() * &cinv * &lv)[(0, 0)] * 0.25;
        let quad = std::array::from_fn(|i| std::array::from_fn(|j| a_out[(i, j)]));
        let lin = std::array::from_fn(|i| l_out[i]);
        Ok(GaussPoly::new(poly.scale(prefactor), quad, lin, c_out))
    }

    /// Integral over all of `R^N`.
    pub fn integrate(&self) -> Result<C64> {
        let g = self.integrate_tail::<0>()?;
        Ok(g.poly.coeff([]) * g.c0.exp())
    }

    /// Same function with `c0` folded into the polynomial.
    pub fn normalized(&self) -> Self {
        Self { poly: self.poly.scale(self.c0.exp()), c0: ZERO, ..self.clone() }
    }

    /// Largest coefficient-level difference after normalization.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let a = self.normalized();
        let b = other.normalized();
        let mut d = a.poly.max_coeff_diff(&b.poly);
        for i in 0..N {
            d = d.max((a.lin[i] - b.lin[i]).norm());
            for j in 0..N {
                d = d.max((a.quad[i][j] - b.quad[i][j]).norm());
            }
        }
        d
    }

    pub fn conj(&self) -> Self {
        Self {
            poly: self.poly.conj(),
            quad: self.quad.map(|r| r.map(|z| z.conj())),
            lin: self.lin.map(|z| z.conj()),
            c0: self.c0.conj(),
        }
    }
}

/// A Gaussian-polynomial function of `(x, y)` times `e^{2 pi i h s}`, where `h`
/// is the s-frequency tag. Functions on phase space use `(q, p)` in the same
/// slots and tag `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussFun {
    pub g: GaussPoly<2>,
    pub s_freq: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    X,
    Y,
}

fn two_pi_i() -> C64 {
    C64::new(0.0, 2.0 * PI)
}

impl GaussFun {
    pub fn new(g: GaussPoly<2>, s_freq: f64) -> Self {
        Self { g, s_freq }
    }

    /// `poly * exp(-[x y] Q [x y]^T + L.(x, y) + c0)` with no s-dependence.
    pub fn from_parts(poly: Poly<2>, quad: Mat<2>, lin: [C64; 2], c0: C64) -> Self {
        Self::new(GaussPoly::new(poly, quad, lin, c0), 0.0)
    }

    /// `exp(-(a x^2 + b y^2))`.
    pub fn diagonal(a: f64, b: f64) -> Self {
        let quad = [[C64::new(a, 0.0), ZERO], [ZERO, C64::new(b, 0.0)]];
        Self::from_parts(Poly::one(), quad, [ZERO; 2], ZERO)
    }

    pub fn with_s_freq(mut self, h: f64) -> Self {
        self.s_freq = h;
        self
    }

    pub fn poly(&self) -> &Poly<2> {
        &self.g.poly
    }

    pub fn is_integrable(&self) -> bool {
        self.g.is_integrable()
    }

    /// Value at `(s, x, y)`.
    pub fn eval(&self, s: f64, x: f64, y: f64) -> C64 {
        C64::from_polar(1.0, 2.0 * PI * self.s_freq * s) * self.eval_xy(x, y)
    }

    /// Value with the s-factor dropped.
    pub fn eval_xy(&self, x: f64, y: f64) -> C64 {
        self.g.eval(&[C64::new(x, 0.0), C64::new(y, 0.0)])
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::new(self.g.scale(s), self.s_freq)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self::new(self.g.mul(&other.g), self.s_freq + other.s_freq)
    }

    pub fn mul_poly(&self, p: &Poly<2>) -> Self {
        Self::new(self.g.mul_poly(p), self.s_freq)
    }

    /// Sum of two functions sharing the same Gaussian factor and s-tag.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = (self.g.normalized(), other.g.normalized());
        let same_exp = (0..2).all(|i| {
            (a.lin[i] - b.lin[i]).norm() <= 1e-13 * (1.0 + a.lin[i].norm())
                && (0..2).all(|j| (a.quad[i][j] - b.quad[i][j]).norm() <= 1e-13 * (1.0 + a.quad[i][j].norm()))
        });
        if !same_exp || self.s_freq != other.s_freq {
            return Err(PmechError::IncompatibleGaussians);
        }
        Ok(Self::new(GaussPoly { poly: &a.poly + &b.poly, ..a }, self.s_freq))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.g.conj(), -self.s_freq)
    }

    pub fn differentiate_x(&self) -> Self {
        Self::new(self.g.derivative(0), self.s_freq)
    }

    pub fn differentiate_y(&self) -> Self {
        Self::new(self.g.derivative(1), self.s_freq)
    }

    /// `(x, y) -> f(x - dx, y - dy)`.
    pub fn translate(&self, dx: f64, dy: f64) -> Self {
        let id = [[ONE, ZERO], [ZERO, ONE]];
        Self::new(self.g.pullback(&id, &[C64::new(-dx, 0.0), C64::new(-dy, 0.0)]), self.s_freq)
    }

    /// `(x, y) -> f(A (x, y) + d)` with real data.
    pub fn linear_change(&self, a: [[f64; 2]; 2], d: [f64; 2]) -> Self {
        let ac = a.map(|r| r.map(|v| C64::new(v, 0.0)));
        Self::new(self.g.pullback(&ac, &d.map(|v| C64::new(v, 0.0))), self.s_freq)
    }

    /// Multiplies by `exp(l.(x, y) + c)`.
    pub fn mul_exp_linear(&self, l: [C64; 2], c: C64) -> Self {
        Self::new(self.g.mul_exp(&zero_mat(), &l, c), self.s_freq)
    }

    /// `(x, y) -> f(-x, -y)`.
    pub fn parity(&self) -> Self {
        self.linear_change([[-1.0, 0.0], [0.0, -1.0]], [0.0, 0.0])
    }

    /// `int f dx dy` (the s-factor is not integrated).
    pub fn integrate_2d(&self) -> Result<C64> {
        self.g.integrate()
    }

    /// `int f(x, y) e^{-2 pi i (q x + p y)} dx dy` as a function of `(q, p)`.
    pub fn fourier_2d(&self) -> Result<Self> {
        // Variables ordered (q, p, x, y): keep the first two.
        let sel = [[ZERO, ZERO, ONE, ZERO], [ZERO, ZERO, ZERO, ONE]];
        let lifted: GaussPoly<4> = self.g.pullback(&sel, &[ZERO; 2]);
        let mut dq = zero_mat::<4>();
        let pi_i = C64::new(0.0, PI);
        dq[0][2] = pi_i;
        dq[2][0] = pi_i;
        dq[1][3] = pi_i;
        dq[3][1] = pi_i;
        let g = lifted.mul_exp(&dq, &[ZERO; 4], ZERO).integrate_tail::<2>()?;
        Ok(Self::new(g, self.s_freq))
    }

    /// Left (`X * B`) or right (`B * X`) invariant field applied to `B`:
    /// `(1/2 pi i)(d_x -+ (y/2) d_s)`, `(1/2 pi i)(d_y +- (x/2) d_s)`,
    /// with `d_s` acting as `2 pi i h`.
    pub fn invariant_field_apply(&self, side: Side, which: Field) -> Self {
        let ds = two_pi_i() * self.s_freq;
        let (deriv, var, sign) = match (side, which) {
            (Side::Left, Field::X) => (self.differentiate_x(), 1, -1.0),
            (Side::Right, Field::X) => (self.differentiate_x(), 1, 1.0),
            (Side::Left, Field::Y) => (self.differentiate_y(), 0, 1.0),
            (Side::Right, Field::Y) => (self.differentiate_y(), 0, -1.0),
        };
        let mut coeffs = [ZERO; 2];
        coeffs[var] = ds * (0.5 * sign);
        let central = self.mul_poly(&Poly::linear(ZERO, coeffs));
        let sum = Self::new(GaussPoly { poly: &deriv.g.poly + &central.g.poly, ..self.g.clone() }, self.s_freq);
        sum.scale(ONE / two_pi_i())
    }

    /// Half-width of a box centred at the origin outside which `|f|` is
    /// negligible (tail below ~1e-16 of the peak).
    pub fn quadrature_radius(&self) -> f64 {
        let re = self.g.quad_matrix().map(|z| z.re);
        let eig = re.clone().symmetric_eigen();
        let lam = eig.eigenvalues.min().max(1e-300);
        let centre = re
            .try_inverse()
            .map(|inv| inv * DVector::from_fn(2, |i, _| self.g.lin[i].re) * 0.5)
            .map_or(0.0, |c| c.amax());
        let deg = self.g.poly.degree() as f64;
        centre + ((38.0 + 2.0 * deg * (1.0 + deg).ln()) / lam).sqrt() + 0.5
    }

    /// Brute-force `int f dx dy` by nested adaptive quadrature.
    pub fn integrate_quadrature(&self, tol: f64) -> C64 {
        let r = self.quadrature_radius();
        quadrature::integrate_rect(|x, y| self.eval_xy(x, y), (-r, r), (-r, r), tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    #[test]
    fn one_dimensional_formula() {
        assert!((gauss_integral_1d(c(PI), ZERO, ZERO).unwrap() - 1.0).norm() < 1e-15);
        let v = gauss_integral_1d(c(1.0), c(2.0), ZERO).unwrap();
        let q = quadrature::integrate(|x| C64::new((-x * x + 2.0 * x).exp(), 0.0), -20.0, 20.0, 1e-14);
        assert!((v - q).norm() < 1e-12);
        assert!(gauss_integral_1d(c(-1.0), ZERO, ZERO).is_err());
        assert!(gauss_integral_1d(C64::new(0.0, 1.0), ZERO, ZERO).is_err());
    }

    #[test]
    fn standard_gaussian_and_second_moment() {
        let g = GaussFun::diagonal(PI, PI);
        assert!((g.integrate_2d().unwrap() - 1.0).norm() < 1e-15);
        let x2 = g.mul_poly(&Poly::monomial([2, 0], ONE));
        assert!((x2.integrate_2d().unwrap() - 1.0 / (2.0 * PI)).norm() < 1e-15);
        let odd = g.mul_poly(&Poly::monomial([1, 2], ONE));
        assert_eq!(odd.integrate_2d().unwrap(), ZERO);
    }

    #[test]
    fn self_dual_gaussian() {
        let g = GaussFun::diagonal(PI, PI);
        assert!(g.fourier_2d().unwrap().g.max_diff(&g.g) < 1e-14);
    }

    #[test]
    fn derivative_of_gaussian() {
        let g = GaussFun::diagonal(1.0, 0.0);
        let d = g.differentiate_x();
        let expected = g.mul_poly(&Poly::monomial([1, 0], c(-2.0)));
        assert_eq!(d.g.max_diff(&expected.g), 0.0);
    }

    #[test]
    fn translate_round_trip() {
        let g = GaussFun::diagonal(1.3, 0.7).mul_poly(&Poly::linear(ONE, [c(2.0), C64::new(0.0, 1.0)]));
        let back = g.translate(0.4, -1.1).translate(-0.4, 1.1);
        assert!(back.g.max_diff(&g.g) < 1e-14);
    }

    #[test]
    fn non_integrable_is_rejected() {
        let g = GaussFun::diagonal(1.0, -0.5);
        assert!(g.integrate_2d().is_err());
        assert!(g.fourier_2d().is_err());
    }

    #[test]
    fn left_minus_right_x_is_central() {
        let h = 0.8;
        let f = GaussFun::diagonal(0.9, 1.4).with_s_freq(h).mul_poly(&Poly::linear(ONE, [c(0.3), c(-0.2)]));
        let diff = &f.invariant_field_apply(Side::Left, Field::X).g.poly
            - &f.invariant_field_apply(Side::Right, Field::X).g.poly;
        // (1/2 pi i)(-y)(2 pi i h) f = -h y f
        let expected = &f.g.poly * &Poly::monomial([0, 1], c(-h));
        assert!(diff.max_coeff_diff(&expected) < 1e-14);
    }
}
