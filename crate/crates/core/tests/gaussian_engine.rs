use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use pmech::gaussian::{quadrature, GaussFun, GaussPoly};
use pmech::Poly;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Integrable instance: Re Q = R^T diag(l1, l2) R, arbitrary symmetric Im Q.
fn arb_gauss(max_deg: u32) -> impl Strategy<Value = GaussFun> {
    let quad = (0.6f64..2.0, 0.6f64..2.0, 0.0f64..PI, -0.8f64..0.8, -0.8f64..0.8, -0.8f64..0.8);
    let lin = prop::array::uniform4(-0.8f64..0.8);
    let terms = prop::collection::vec(((0..=max_deg, 0..=max_deg), -1.0f64..1.0, -1.0f64..1.0), 1..5);
    (quad, lin, terms).prop_map(move |((l1, l2, th, i11, i12, i22), l, terms)| {
        let (s, co) = th.sin_cos();
        let re11 = l1 * co * co + l2 * s * s;
        let re22 = l1 * s * s + l2 * co * co;
        let re12 = (l1 - l2) * s * co;
        let q = [[c(re11, i11), c(re12, i12)], [c(re12, i12), c(re22, i22)]];
        let poly = Poly::from_terms(
            terms
                .into_iter()
                .filter(|((i, j), _, _)| i + j <= max_deg)
                .map(|((i, j), a, b)| ([i, j], c(a, b))),
        );
        let poly = if poly.is_zero() { Poly::one() } else { poly };
        GaussFun::from_parts(poly, q, [c(l[0], l[1]), c(l[2], l[3])], c(0.1, -0.3))
    })
}

fn pairing(f: &GaussFun, g: &GaussFun) -> C64 {
    f.multiply(&g.conj()).integrate_2d().unwrap()
}

#[test]
fn x_squared_second_moment_matches_one_dimensional_formula() {
    // int x^2 e^{-pi x^2} dx = 1/(2 pi) and the y-factor integrates to 1.
    let oracle = quadrature::integrate(|x| c(x * x * (-PI * x * x).exp(), 0.0), -12.0, 12.0, 1e-15);
    let f = GaussFun::diagonal(PI, PI).mul_poly(&Poly::monomial([2, 0], c(1.0, 0.0)));
    assert!((f.integrate_2d().unwrap() - oracle).norm() < 1e-14);
}

#[test]
fn product_of_gaussians_sums_quadratic_forms() {
    let f = GaussFun::from_parts(Poly::one(), [[c(1.0, 0.2), c(0.1, 0.0)], [c(0.1, 0.0), c(2.0, -0.5)]], [c(0.3, 0.0); 2], c(0.0, 0.0));
    let g = GaussFun::from_parts(Poly::one(), [[c(0.5, 0.0), c(-0.3, 0.1)], [c(-0.3, 0.1), c(0.7, 0.0)]], [c(0.0, 1.0); 2], c(1.0, 0.0));
    let fg = f.multiply(&g);
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(fg.g.quad[i][j], f.g.quad[i][j] + g.g.quad[i][j]);
        }
        assert_eq!(fg.g.lin[i], f.g.lin[i] + g.g.lin[i]);
    }
}

#[test]
fn vacuum_gaussian_transform_scale() {
    // The (q, p) vacuum exp(-2 pi (q^2 + p^2)) transforms to (1/2) exp(-(pi/2)(x^2 + y^2)).
    let f0 = GaussFun::diagonal(2.0 * PI, 2.0 * PI);
    let expected = GaussFun::diagonal(PI / 2.0, PI / 2.0).scale(c(0.5, 0.0));
    assert!(f0.fourier_2d().unwrap().g.max_diff(&expected.g) < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn closed_integral_matches_quadrature(f in arb_gauss(4)) {
        let exact = f.integrate_2d().unwrap();
        let brute = f.integrate_quadrature(1e-12);
        prop_assert!((exact - brute).norm() < 1e-9, "exact {exact} vs quadrature {brute}");
    }

    #[test]
    fn fourier_transform_preserves_pairings(f in arb_gauss(3), g in arb_gauss(3)) {
        let lhs = pairing(&f, &g);
        let rhs = pairing(&f.fourier_2d().unwrap(), &g.fourier_2d().unwrap());
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + lhs.norm()), "{lhs} vs {rhs}");
    }

    #[test]
    fn double_fourier_is_parity(f in arb_gauss(4)) {
        let twice = f.fourier_2d().unwrap().fourier_2d().unwrap();
        prop_assert!(twice.g.max_diff(&f.parity().g) < 1e-10);
    }

    #[test]
    fn derivative_integrates_to_zero(f in arb_gauss(4)) {
        prop_assert!(f.differentiate_x().integrate_2d().unwrap().norm() < 1e-12);
        prop_assert!(f.differentiate_y().integrate_2d().unwrap().norm() < 1e-12);
    }

    #[test]
    fn partial_integration_matches_pointwise_quadrature(f in arb_gauss(3), x in -1.0f64..1.0) {
        // Integrating out y symbolically, then evaluating at x.
        let partial: GaussPoly<1> = f.g.integrate_tail::<1>().unwrap();
        let exact = partial.eval(&[c(x, 0.0)]);
        let r = f.quadrature_radius();
        let brute = quadrature::integrate(|y| f.eval_xy(x, y), -r, r, 1e-13);
        prop_assert!((exact - brute).norm() < 1e-10);
    }
}
