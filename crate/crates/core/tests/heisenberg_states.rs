use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use pmech::coherent::{coherent_f2, coherent_kernel, coherent_vector, expectation, vacuum_f2, vacuum_vector, CoherentLabel};
use pmech::gaussian::GaussFun;
use pmech::heisenberg::*;
use pmech::{OscillatorParams, Poly, SymbolPoly};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn arb_group() -> impl Strategy<Value = GroupElement> {
    (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0).prop_map(|(s, x, y)| GroupElement::new(s, x, y))
}

fn arb_phase_fun() -> impl Strategy<Value = GaussFun> {
    (0.5f64..2.0, 0.5f64..2.0, -0.5f64..0.5, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
        .prop_map(|(a, b, cross, l1, l2, p1)| {
            let q = [[c(a, 0.0), c(cross, 0.0)], [c(cross, 0.0), c(b, 0.0)]];
            GaussFun::from_parts(Poly::linear(c(1.0, 0.0), [c(p1, 0.3), c(0.0, -0.2)]), q, [c(l1, 0.1), c(l2, -0.4)], c(0.0, 0.0))
        })
}

fn close(g1: GroupElement, g2: GroupElement) -> bool {
    (g1.s - g2.s).abs() < 1e-12 && (g1.x - g2.x).abs() < 1e-12 && (g1.y - g2.y).abs() < 1e-12
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn group_axioms(a in arb_group(), b in arb_group(), d in arb_group()) {
        prop_assert!(close(group_mul(group_mul(a, b), d), group_mul(a, group_mul(b, d))));
        prop_assert!(close(group_mul(a, group_inv(a)), GroupElement::identity()));
        prop_assert!(close(group_mul(GroupElement::identity(), a), a));
    }

    #[test]
    fn coadjoint_action_composes(a in arb_group(), b in arb_group(), h in -2.0f64..2.0, q in -2.0f64..2.0, p in -2.0f64..2.0) {
        let (h1, q1, p1) = ad_star(b, h, q, p);
        let lhs = ad_star(a, h1, q1, p1);
        let rhs = ad_star(group_mul(a, b), h, q, p);
        prop_assert!((lhs.1 - rhs.1).abs() < 1e-12 && (lhs.2 - rhs.2).abs() < 1e-12);
    }

    #[test]
    fn scalar_representation_is_multiplicative(a in arb_group(), b in arb_group(), q in -2.0f64..2.0, p in -2.0f64..2.0) {
        let lhs = rho_qp(a, q, p) * rho_qp(b, q, p);
        prop_assert!((lhs - rho_qp(group_mul(a, b), q, p)).norm() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn rho_h_is_a_unitary_homomorphism(a in arb_group(), b in arb_group(), f in arb_phase_fun(), h in 0.2f64..2.0) {
        let two_step = rho_h_action(a, &rho_h_action(b, &f, h).unwrap(), h).unwrap();
        let direct = rho_h_action(group_mul(a, b), &f, h).unwrap();
        prop_assert!(two_step.g.max_diff(&direct.g) < 1e-10);
        let n0 = f2_inner(&f, &f, h).unwrap();
        let n1 = f2_inner(&direct, &direct, h).unwrap();
        prop_assert!((n0 - n1).norm() < 1e-10 * n0.norm());
    }

    #[test]
    fn s_map_is_an_isometry(f in arb_phase_fun(), g in arb_phase_fun(), h in 0.2f64..2.0) {
        let lhs = hh_inner(&s_map(&f, h).unwrap(), &s_map(&g, h).unwrap()).unwrap();
        let rhs = f2_inner(&f, &g, h).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
    }

    #[test]
    fn s_map_is_linear(f in arb_phase_fun(), h in 0.2f64..2.0, k in -3.0f64..3.0) {
        let a = s_map(&f.scale(c(k, 1.0)), h).unwrap();
        let b = s_map(&f, h).unwrap().scale(c(k, 1.0));
        prop_assert!(a.fun().g.max_diff(&b.fun().g) < 1e-12);
    }

    #[test]
    fn coherent_kernel_two_routes(a in -2.0f64..2.0, b in -2.0f64..2.0, h in 0.1f64..2.0, w in 0.5f64..2.0, m in 0.5f64..2.0) {
        let label = CoherentLabel::new(h, a, b, OscillatorParams::new(w, m).unwrap()).unwrap();
        let from_vector = kernel_from_vector(&coherent_vector(&label).unwrap()).unwrap();
        let displayed = coherent_kernel(&label).unwrap();
        prop_assert!(from_vector.fun().g.max_diff(&displayed.fun().g) < 1e-9);
        prop_assert_eq!(from_vector.fun().s_freq, -h);
    }

    #[test]
    fn expectation_theorem_on_coherent_states(a in -1.5f64..1.5, b in -1.5f64..1.5, h in 0.1f64..2.0) {
        // <rho_h(F) f, f> in F^2 against the kernel-side value.
        let params = OscillatorParams::new(1.3, 0.8).unwrap();
        let label = CoherentLabel::new(h, a, b, params).unwrap();
        let f = coherent_f2(&label).unwrap();
        for s in ["1", "q", "p", "q^2", "p^2", "q*p"] {
            let sym: SymbolPoly = s.parse().unwrap();
            let lhs = f2_inner(&rho_h_symbol(&sym, h, &f).unwrap(), &f, h).unwrap();
            let rhs = expectation(&label, &sym);
            prop_assert!((lhs - rhs).norm() < 1e-8, "{}: {} vs {}", s, lhs, rhs);
        }
    }

    #[test]
    fn antiderivative_is_skew(f in arb_phase_fun(), g in arb_phase_fun(), h in 0.2f64..2.0) {
        let v = s_map(&f, h).unwrap();
        let w = s_map(&g, h).unwrap();
        let a = antiderivative_scalar(h).unwrap();
        let lhs = hh_inner(&v.scale(a), &w).unwrap();
        let rhs = -hh_inner(&v, &w.scale(a)).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-10 * (1.0 + lhs.norm()));
    }
}

#[test]
fn s_map_of_ground_state_matches_display() {
    for (h, w, m) in [(1.0, 1.0, 1.0), (0.5, 2.0, 0.7)] {
        let params = OscillatorParams::new(w, m).unwrap();
        let v = s_map(&vacuum_f2(h, &params).unwrap(), h).unwrap();
        let expected = vacuum_vector(h, &params).unwrap();
        assert!(v.fun().g.max_diff(&expected.fun().g) < 1e-14);
        assert_eq!(v.h(), h);
    }
}

#[test]
fn vacuum_norm_closed_form_vs_quadrature() {
    let v = vacuum_vector(1.0, &OscillatorParams::unit()).unwrap();
    let closed = hh_inner(&v, &v).unwrap();
    let prod = v.fun().multiply(&v.fun().conj());
    let brute = prod.integrate_quadrature(1e-13) * 4.0;
    assert!((closed - brute).norm() < 1e-10);
}

#[test]
fn hh_inner_ignores_s_dependence() {
    let v = vacuum_vector(0.7, &OscillatorParams::unit()).unwrap();
    let shifted = HVector::new(v.fun().scale(C64::from_polar(1.0, 2.0 * PI * 0.7 * 0.31))).unwrap();
    assert!((hh_inner(&v, &v).unwrap() - hh_inner(&shifted, &shifted).unwrap()).norm() < 1e-15);
}

#[test]
fn h_zero_routes_are_rejected() {
    let f = GaussFun::diagonal(1.0, 1.0);
    assert_eq!(rho_h_action(GroupElement::identity(), &f, 0.0), Err(pmech::PmechError::ClassicalBranch));
    assert_eq!(s_map(&f, 0.0).map(|_| ()), Err(pmech::PmechError::ClassicalBranch));
    assert!(s0_map(&f).is_ok());
}

#[test]
fn rho_h_examples() {
    let f = GaussFun::diagonal(1.0, 2.0);
    assert_eq!(rho_h_action(GroupElement::identity(), &f, 0.5).unwrap().g.max_diff(&f.g), 0.0);
    let s = 0.3;
    let g = rho_h_action(GroupElement::new(s, 0.0, 0.0), &f, 0.5).unwrap();
    let expected = f.scale(C64::from_polar(1.0, -2.0 * PI * 0.5 * s));
    assert!(g.g.max_diff(&expected.g) < 1e-15);
}

#[test]
fn membership_accepts_eigenfunctions_and_rejects_wrong_width() {
    let params = OscillatorParams::new(1.4, 0.9).unwrap();
    let h = 0.8;
    for n in 0..=4 {
        let v = eigenfunction(n, h, &params).unwrap();
        assert!(membership_check(&v, &params).unwrap() < 1e-8, "level {n}");
    }
    let wrong = HVector::new(GaussFun::diagonal(PI * h, PI * h).with_s_freq(h)).unwrap();
    assert!(membership_check(&wrong, &params).unwrap() > 0.1);
}

#[test]
fn eigenfunctions_are_orthonormal() {
    let params = OscillatorParams::new(1.2, 0.6).unwrap();
    let h = 0.9;
    let vs: Vec<_> = (0..=5).map(|n| eigenfunction(n, h, &params).unwrap()).collect();
    for (m, vm) in vs.iter().enumerate() {
        for (n, vn) in vs.iter().enumerate() {
            let g = hh_inner(vm, vn).unwrap();
            let expected = if m == n { 1.0 } else { 0.0 };
            assert!((g - expected).norm() < 1e-8, "<v{m}, v{n}> = {g}");
        }
    }
}

#[test]
fn ladder_route_matches_closed_form() {
    let params = OscillatorParams::new(0.9, 1.7).unwrap();
    for n in 0..=6 {
        let a = eigenfunction(n, 0.6, &params).unwrap();
        let b = eigenfunction_by_ladder(n, 0.6, &params).unwrap();
        assert!(a.fun().g.max_diff(&b.fun().g) < 1e-10, "level {n}");
    }
    assert!(eigenfunction(13, 1.0, &params).is_err());
}

#[test]
fn eigenvalue_relation_through_the_symbol_route() {
    // S_h^-1 v_n are number states; H acts by (n + 1/2) hbar w.
    let params = OscillatorParams::new(1.1, 0.8).unwrap();
    let h = 0.7;
    let hbar = h / (2.0 * PI);
    let ham = SymbolPoly::oscillator_hamiltonian(&params);
    let f0 = vacuum_f2(h, &params).unwrap();
    let a_dag = |f: &GaussFun| {
        let q = position_op(f, h).scale(c(params.omega_m(), 0.0));
        let p = momentum_op(f, h).scale(c(0.0, -1.0));
        q.add(&p).unwrap().scale(c(1.0 / (2.0 * hbar * params.omega_m()).sqrt(), 0.0))
    };
    let mut fs = vec![f0];
    for n in 1..=4 {
        let next = a_dag(&fs[n - 1]).scale(c(1.0 / (n as f64).sqrt(), 0.0));
        fs.push(next);
    }
    for (n, fnn) in fs.iter().enumerate() {
        let hf = rho_h_symbol(&ham, h, fnn).unwrap();
        let lambda = (n as f64 + 0.5) * hbar * params.omega;
        for (m, fm) in fs.iter().enumerate() {
            let lhs = f2_inner(&hf, fm, h).unwrap();
            let rhs = f2_inner(fnn, fm, h).unwrap() * lambda;
            assert!((lhs - rhs).norm() < 1e-8, "n={n} m={m}");
        }
    }
}

#[test]
fn invariant_field_commutator_is_central() {
    let h = 0.55;
    let f = GaussFun::diagonal(0.7, 1.2).with_s_freq(h).mul_poly(&Poly::linear(c(1.0, 0.0), [c(0.4, 0.0), c(0.0, 0.9)]));
    use pmech::gaussian::{Field, Side};
    let xy = f.invariant_field_apply(Side::Left, Field::Y).invariant_field_apply(Side::Left, Field::X);
    let yx = f.invariant_field_apply(Side::Left, Field::X).invariant_field_apply(Side::Left, Field::Y);
    let comm = &xy.g.poly - &yx.g.poly;
    let expected = f.g.poly.scale(c(0.0, -h / (2.0 * PI)));
    assert!(comm.max_coeff_diff(&expected) < 1e-13);
    let z = f.with_s_freq(0.0);
    let lx = z.invariant_field_apply(Side::Left, Field::X);
    let dx = z.differentiate_x().scale(c(0.0, -1.0 / (2.0 * PI)));
    assert!(lx.g.max_diff(&dx.g) < 1e-15);
}
