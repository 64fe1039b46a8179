use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use pmech::coherent::*;
use pmech::fock::{represent_symbol, FockVector};
use pmech::heisenberg::{kernel_from_vector, GroupElement};
use pmech::{OscillatorParams, PhasePoint, SymbolPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID: [f64; 4] = [1.0, 0.1, 0.01, 0.001];

fn sym(s: &str) -> SymbolPoly {
    s.parse().unwrap()
}

#[test]
fn classical_limit_rates() {
    let unit = OscillatorParams::unit();
    for f in ["q^2", "p^2", "q^2 + p^2"] {
        let sweep = classical_limit_sweep(0.7, -0.3, &sym(f), &GRID, &unit).unwrap();
        assert!(sweep.rows.windows(2).all(|w| w[1].abs_error < w[0].abs_error), "{f}");
        let slope = sweep.slope.unwrap();
        assert!((slope - 1.0).abs() <= 0.05, "{f}: slope {slope}");
    }
    for f in ["q", "p", "q*p", "1"] {
        let sweep = classical_limit_sweep(0.7, -0.3, &sym(f), &GRID, &unit).unwrap();
        assert!(sweep.rows.iter().all(|r| r.abs_error <= 1e-12), "{f}");
    }
}

#[test]
fn quadratic_correction_is_the_coherent_variance() {
    // k(q^2) - a^2 = hbar / (2 w m); fixed once, frozen as a regression bound.
    let params = OscillatorParams::new(1.4, 0.6).unwrap();
    for h in GRID {
        let label = CoherentLabel::new(h, 0.7, -0.3, params).unwrap();
        let err = (expectation(&label, &sym("q^2")) - 0.49).re;
        let expected = h / (2.0 * PI) / (2.0 * params.omega_m());
        assert!((err - expected).abs() < 1e-13);
    }
}

#[test]
fn pure_state_limit_and_mixture() {
    let unit = OscillatorParams::unit();
    let f = sym("q^2 + p^2 - 0.5*q*p");
    assert_eq!(pure_state_eval(3.0, 4.0, &sym("q^2 + p^2")), C64::new(25.0, 0.0));
    let label = CoherentLabel::new(1e-9, 0.4, 1.1, unit).unwrap();
    assert!((expectation(&label, &f) - pure_state_eval(0.4, 1.1, &f)).norm() < 1e-6);
    // a two-point mixture is evaluated term by term
    let mix = pure_state_eval(0.4, 1.1, &f) * 0.3 + pure_state_eval(-1.0, 0.2, &f) * 0.7;
    let g = f.scale(C64::new(0.3, 0.0));
    let h = f.scale(C64::new(0.7, 0.0));
    assert!((mix - pure_state_eval(0.4, 1.1, &g) - pure_state_eval(-1.0, 0.2, &h)).norm() < 1e-14);
}

#[test]
fn real_observables_have_real_expectations() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let params = OscillatorParams::new(0.8, 1.7).unwrap();
    let f = sym("q^3 - 2*q*p^2 + p + 0.3*q^2*p^2");
    for _ in 0..20 {
        let label = CoherentLabel::new(rng.gen_range(0.05..2.0), rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), params)
            .unwrap();
        assert!(expectation(&label, &f).im.abs() < 1e-12);
        assert!((expectation(&label, &SymbolPoly::constant(1.0)) - 1.0).norm() < 1e-15);
        assert!((coherent_kernel(&label).unwrap().eval(GroupElement::identity()) - 1.0).norm() < 1e-14);
    }
}

#[test]
fn kernel_route_matches_fock_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let params = OscillatorParams::new(1.2, 0.9).unwrap();
    for _ in 0..6 {
        let label =
            CoherentLabel::new(rng.gen_range(0.5..1.5), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), params).unwrap();
        let kernel = coherent_kernel(&label).unwrap();
        let state = FockVector::coherent(64, label.fock_alpha());
        for f in ["q", "p", "q^2", "p^2", "q*p"] {
            let f = sym(f);
            let fock = state.expect(&represent_symbol(&f, 64, label.h, &params).unwrap());
            let kern = expectation_from_kernel(&kernel, &f);
            assert!((fock - kern).norm() < 1e-7, "{f}: {fock} vs {kern}");
        }
    }
}

#[test]
fn coherent_vector_reproduces_displayed_kernel() {
    let params = OscillatorParams::new(0.9, 1.3).unwrap();
    let label = CoherentLabel::new(0.6, -0.8, 0.5, params).unwrap();
    let built = kernel_from_vector(&coherent_vector(&label).unwrap()).unwrap();
    let shown = coherent_kernel(&label).unwrap();
    assert!(built.fun().g.max_diff(&shown.fun().g) < 1e-9);
    let vac = coherent_kernel(&CoherentLabel::new(0.6, 0.0, 0.0, params).unwrap()).unwrap();
    let from_vac = kernel_from_vector(&vacuum_vector(0.6, &params).unwrap()).unwrap();
    assert!(vac.fun().g.max_diff(&from_vac.fun().g) < 1e-12);
}

#[test]
fn gaussian_expectation_matches_moments() {
    let cov = [[0.3, 0.1], [0.1, 0.5]];
    let mean = PhasePoint::new(0.2, -0.4);
    let e = |s: &str| gaussian_expectation(mean, &cov, &sym(s)).re;
    assert!((e("q*p") - (0.1 + 0.2 * -0.4)).abs() < 1e-15);
    // E[q^2 p^2] for a correlated pair, by Isserlis on centred parts
    let (mq, mp) = (0.2, -0.4);
    let centred = 0.3 * 0.5 + 2.0 * 0.1 * 0.1;
    let expected = centred + mq * mq * 0.5 + mp * mp * 0.3 + 4.0 * mq * mp * 0.1 + mq * mq * mp * mp;
    assert!((e("q^2*p^2") - expected).abs() < 1e-14);
}
