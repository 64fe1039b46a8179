//! Brute-force integration used to check the closed forms.
//!
//! Adaptive Gauss-Kronrod 7/15 on intervals (nested for rectangles), plus a
//! composite Simpson rule. Everything works on complex-valued integrands.

use num_complex::Complex64 as C64;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: u32 = 40;

/// One 15-point Kronrod panel: `(estimate, |kronrod - gauss|)`.
pub fn gk15(f: &impl Fn(f64) -> C64, a: f64, b: f64) -> (C64, f64) {
    let c = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let dx = r * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        k += pair * WGK[i];
        if i % 2 == 1 {
            g += pair * WG[i / 2];
        }
    }
    (k * r, ((k - g) * r).norm())
}

fn adapt(f: &impl Fn(f64) -> C64, a: f64, b: f64, tol: f64, whole: (C64, f64), depth: u32) -> C64 {
    let (est, err) = whole;
    if err <= tol || depth >= MAX_DEPTH {
        return est;
    }
    let m = 0.5 * (a + b);
    let left = gk15(f, a, m);
    let right = gk15(f, m, b);
    adapt(f, a, m, 0.5 * tol, left, depth + 1) + adapt(f, m, b, 0.5 * tol, right, depth + 1)
}

/// Adaptive integral of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> C64, a: f64, b: f64, tol: f64) -> C64 {
    if a == b {
        return C64::new(0.0, 0.0);
    }
    let first = gk15(&f, a, b);
    adapt(&f, a, b, tol, first, 0)
}

/// Adaptive integral split at `points` (sorted, first and last are the ends).
pub fn integrate_pieces(f: impl Fn(f64) -> C64, points: &[f64], tol: f64) -> C64 {
    let n = points.len().saturating_sub(1).max(1) as f64;
    points.windows(2).map(|w| integrate(&f, w[0], w[1], tol / n)).sum()
}

/// Nested adaptive integral over the rectangle `[x0, x1] x [y0, y1]`.
pub fn integrate_rect(f: impl Fn(f64, f64) -> C64, x: (f64, f64), y: (f64, f64), tol: f64) -> C64 {
    let inner_tol = tol / (x.1 - x.0).abs().max(1.0);
    integrate(|xv| integrate(|yv| f(xv, yv), y.0, y.1, inner_tol), x.0, x.1, tol)
}

/// Composite Simpson rule with `n` panels (rounded up to even).
pub fn simpson(f: impl Fn(f64) -> C64, a: f64, b: f64, n: usize) -> C64 {
    let n = (n.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        acc += f(a + k as f64 * h) * w;
    }
    acc * (h / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> C64 {
        move |x| C64::new(f(x), 0.0)
    }

    #[test]
    fn polynomials_are_exact_on_one_panel() {
        let (v, _) = gk15(&re(|x| x.powi(20)), -1.0, 1.0);
        assert!((v.re - 2.0 / 21.0).abs() < 1e-15);
    }

    #[test]
    fn gaussian_and_oscillatory_integrands() {
        let v = integrate(re(|x| (-x * x).exp()), -10.0, 10.0, 1e-14);
        assert!((v.re - std::f64::consts::PI.sqrt()).abs() < 1e-13);
        let w = integrate(|x| C64::new(0.0, 7.0 * x).exp(), 0.0, 3.0, 1e-13);
        let exact = (C64::new(0.0, 21.0).exp() - 1.0) / C64::new(0.0, 7.0);
        assert!((w - exact).norm() < 1e-12);
    }

    #[test]
    fn kinked_integrand_with_breakpoint() {
        let v = integrate_pieces(re(|x: f64| x.abs()), &[-1.0, 0.0, 2.0], 1e-14);
        assert!((v.re - 2.5).abs() < 1e-14);
    }

    #[test]
    fn rectangle_product() {
        let v = integrate_rect(|x, y| C64::new(x * x * y.exp(), 0.0), (0.0, 1.0), (0.0, 1.0), 1e-13);
        assert!((v.re - (std::f64::consts::E - 1.0) / 3.0).abs() < 1e-12);
    }

    #[test]
    fn simpson_is_exact_for_cubics() {
        let v = simpson(re(|x| x.powi(3) - x), 0.0, 2.0, 4);
        assert!((v.re - 2.0).abs() < 1e-14);
    }
}
