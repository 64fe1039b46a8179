use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use pmech::classical::*;
use pmech::gaussian::quadrature;
use pmech::symbols::{evaluate, poisson_bracket};
use pmech::{ForceProfile, OscillatorParams, PhasePoint, Pulse, SymbolPoly};
use proptest::prelude::*;

fn forces() -> Vec<ForceProfile> {
    vec![
        ForceProfile::Zero,
        ForceProfile::cosine(1.0, 2.0).unwrap(),
        ForceProfile::cosine(0.5, 1.3).unwrap(),
        ForceProfile::Pulse(Pulse::bump(1.0, 6.0, 0.8, 61).unwrap()),
        ForceProfile::Pulse(Pulse::new(0.5, 3.0, vec![0.0, 1.0, -0.5, 0.7, 0.0]).unwrap()),
    ]
}

fn params() -> OscillatorParams {
    OscillatorParams::new(1.3, 0.7).unwrap()
}

#[test]
fn bracket_with_oscillator_energy() {
    let p = params();
    let h = SymbolPoly::oscillator_hamiltonian(&p);
    let got = poisson_bracket(&SymbolPoly::q(), &h).unwrap();
    assert_eq!(got, SymbolPoly::p().scale(C64::new(1.0 / p.mass, 0.0)));
    assert!(poisson_bracket(&h, &h).unwrap().is_zero());
}

#[test]
fn evaluate_mixed_polynomial() {
    let f: SymbolPoly = "q*p - p".parse().unwrap();
    assert_eq!(evaluate(&f, PhasePoint::new(2.0, 0.5)), C64::new(0.5, 0.0));
}

#[test]
fn unforced_flow_and_rk4_rotate() {
    let unit = OscillatorParams::unit();
    let pt = classical_flow_closed(&unit, &ForceProfile::Zero, PI / 2.0, PhasePoint::new(1.0, 0.0));
    assert!(pt.dist(&PhasePoint::new(0.0, -1.0)) < 1e-15);
    let rk = classical_flow_rk4(&unit, &ForceProfile::Zero, PI / 2.0, PhasePoint::new(1.0, 0.0), 1e-4);
    assert!(rk.dist(&PhasePoint::new(0.0, -1.0)) < 1e-8);
    let pt0 = PhasePoint::new(0.3, -0.4);
    assert_eq!(classical_flow_closed(&params(), &forces()[1], 0.0, pt0), pt0);
}

#[test]
fn closed_flow_matches_rk4_on_zero_to_ten() {
    let p = params();
    let pt0 = PhasePoint::new(0.4, -0.7);
    let resonant = ForceProfile::cosine(0.9, p.omega).unwrap();
    for force in forces().iter().chain([&resonant]) {
        let mut worst = 0.0f64;
        let mut pt = pt0;
        let mut prev = 0.0;
        for k in 1..=100 {
            let t = 0.1 * k as f64;
            pt = rk4_advance(&p, force, prev, t, pt, 1e-3);
            prev = t;
            worst = worst.max(pt.dist(&classical_flow_closed(&p, force, t, pt0)));
        }
        assert!(worst < 1e-6, "{force:?}: {worst}");
    }
}

#[test]
fn closed_flow_satisfies_hamilton_equations() {
    let p = params();
    let pt0 = PhasePoint::new(-0.2, 0.9);
    let dt = 1e-5;
    for force in forces() {
        for t in [0.7, 2.2, 4.1, 8.3] {
            let fwd = classical_flow_closed(&p, &force, t + dt, pt0);
            let bwd = classical_flow_closed(&p, &force, t - dt, pt0);
            let now = classical_flow_closed(&p, &force, t, pt0);
            let dq = (fwd.q - bwd.q) / (2.0 * dt);
            let dp = (fwd.p - bwd.p) / (2.0 * dt);
            assert!((dq - now.p / p.mass).abs() < 1e-6);
            assert!((dp + p.mass * p.omega * p.omega * now.q - force.value(t)).abs() < 1e-6);
        }
    }
}

#[test]
fn unforced_energy_is_conserved() {
    let p = params();
    let h = SymbolPoly::oscillator_hamiltonian(&p);
    let pt0 = PhasePoint::new(1.1, -0.3);
    let e0 = evaluate(&h, pt0).re;
    for k in 0..50 {
        let pt = classical_flow_closed(&p, &ForceProfile::Zero, 0.37 * k as f64, pt0);
        assert!((evaluate(&h, pt).re - e0).abs() < 1e-8);
    }
}

#[test]
fn position_and_momentum_pullbacks() {
    let p = params();
    let pt0 = PhasePoint::new(0.6, 0.2);
    let force = ForceProfile::cosine(0.7, 0.4).unwrap();
    for t in [0.5, 3.0, 9.0] {
        let pt = classical_flow_closed(&p, &force, t, pt0);
        let (i_s, i_c) = force_integrals(&force, p.omega, t);
        let (sn, cs) = (p.omega * t).sin_cos();
        let mw = p.omega_m();
        let q_expr = (pt0.q - i_s / mw) * cs + (pt0.p + i_c) / mw * sn;
        let p_expr = -mw * (pt0.q - i_s / mw) * sn + (pt0.p + i_c) * cs;
        assert!((evaluate(&SymbolPoly::q(), pt).re - q_expr).abs() < 1e-8);
        assert!((evaluate(&SymbolPoly::p(), pt).re - p_expr).abs() < 1e-8);
    }
}

#[test]
fn force_integrals_match_quadrature() {
    let w = 1.3;
    for force in forces() {
        for t in [1.0, 2.7, 7.5] {
            let (i_s, i_c) = force_integrals(&force, w, t);
            let s = quadrature::integrate(|u| C64::new(force.value(u) * (w * u).sin(), 0.0), 0.0, t, 1e-13);
            let c = quadrature::integrate(|u| C64::new(force.value(u) * (w * u).cos(), 0.0), 0.0, t, 1e-13);
            // kinks of a pulse only slow convergence; 1e-10 is still reached
            assert!((i_s - s.re).abs() < 1e-10 && (i_c - c.re).abs() < 1e-10, "{force:?} t={t}");
        }
    }
    let (_, i_c) = force_integrals(&ForceProfile::cosine(1.0, 1.0).unwrap(), 1.0, 4.0 * PI);
    assert!((i_c - 2.0 * PI).abs() < 1e-12);
    assert_eq!(force_integrals(&ForceProfile::Zero, 1.0, 3.0), (0.0, 0.0));
}

#[test]
fn resonance_dichotomy() {
    let unit = OscillatorParams::unit();
    let off = resonance_report(&unit, 1.0, 1.5, 200.0, 20001);
    assert_eq!(off.class, GrowthClass::Bounded);
    // |q| <= 2 Z0 / (m |w^2 - W^2|) from rest
    assert!(off.max_amplitude <= 2.0 / 1.25 + 1e-12);
    let on = resonance_report(&unit, 1.0, 1.0, 200.0, 20001);
    assert_eq!(on.class, GrowthClass::LinearGrowth);
    assert!(on.slope > 0.0);
    assert!(on.max_residual < 0.01 * on.final_amplitude);
    // q(t) = t sin(t) / 2 from rest: envelope slope 1/2
    assert!((on.slope - 0.5).abs() < 0.01);
    let rk = resonance_report_rk4(&unit, 1.0, 1.0, 200.0, 20001, 1e-2);
    assert!(((rk.slope - on.slope) / on.slope).abs() < 0.01);
}

#[test]
fn zero_drive_gives_flat_envelope() {
    let r = resonance_report(&params(), 0.0, 1.0, 50.0, 501);
    assert_eq!(r.max_amplitude, 0.0);
    assert_eq!(r.class, GrowthClass::Bounded);
}

fn arb_symbol() -> impl Strategy<Value = SymbolPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -2.0f64..2.0), 0..6).prop_map(|terms| {
        let terms: Vec<_> = terms.into_iter().map(|(e, c)| (e, C64::new(c, 0.0))).collect();
        SymbolPoly::from_terms(terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn jacobi_identity(f in arb_symbol(), g in arb_symbol(), h in arb_symbol()) {
        let pb = |a: &SymbolPoly, b: &SymbolPoly| poisson_bracket(a, b).unwrap();
        let sum = pb(&f, &pb(&g, &h)).add(&pb(&g, &pb(&h, &f))).add(&pb(&h, &pb(&f, &g)));
        prop_assert!(sum.poly().max_abs_coeff() < 1e-10);
    }

    #[test]
    fn energy_is_conserved_from_any_start(q in -3.0f64..3.0, p in -3.0f64..3.0, t in 0.0f64..50.0) {
        let params = params();
        let h = SymbolPoly::oscillator_hamiltonian(&params);
        let pt0 = PhasePoint::new(q, p);
        let pt = classical_flow_closed(&params, &ForceProfile::Zero, t, pt0);
        prop_assert!((evaluate(&h, pt) - evaluate(&h, pt0)).norm() < 1e-8 * (1.0 + evaluate(&h, pt0).norm()));
    }
}
