use pmech::classical::{classical_flow_closed, resonance_report, resonance_report_rk4, rk4_advance};
use pmech::coherent::{classical_limit_sweep, coherent_kernel, coherent_vector, pure_state_eval, CoherentLabel};
use pmech::fock::{poisson_pmf, s_matrix_window, Propagator};
use pmech::heisenberg::{kernel_from_vector, GroupElement};
use pmech::symbols::evaluate;
use pmech::verify::{run_suite, SUITES};
use pmech::{PhasePoint, PmechError, SymbolPoly};

use crate::config::{ForceKind, RunConfig};
use crate::output::{fmt_float, Cell, Table};
use crate::CliError;

/// What a command produced: the table plus lines meant for the terminal.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: Table,
    pub messages: Vec<String>,
    pub success: bool,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome { table, messages: Vec::new(), success: true }
    }
}

fn numerical(e: PmechError) -> CliError {
    CliError::Numerical(e.to_string())
}

pub fn dispatch(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        "limit-sweep" => limit_sweep(cfg).map(Outcome::from),
        "transitions" => transitions(cfg).map(Outcome::from),
        "resonance" => resonance(cfg).map(Outcome::from),
        "flow" => flow(cfg).map(Outcome::from),
        "kernel" => kernel(cfg).map(Outcome::from),
        "verify" => verify(cfg),
        other => Err(CliError::Validation(format!("unknown command {other}"))),
    }
}

pub fn limit_sweep(cfg: &RunConfig) -> Result<Table, CliError> {
    let f = cfg.symbol()?;
    let sweep = classical_limit_sweep(cfg.a, cfg.b, &f, &cfg.h_grid, &cfg.params()).map_err(numerical)?;
    let mut t = Table::new(&["h", "k_value_re", "k_value_im", "abs_error"]);
    for r in &sweep.rows {
        t.push(vec![r.h.into(), r.value.re.into(), r.value.im.into(), r.abs_error.into()]);
    }
    let exact = pure_state_eval(cfg.a, cfg.b, &f);
    t.foot("classical_value_re", exact.re);
    t.foot("classical_value_im", exact.im);
    t.foot("slope", sweep.slope);
    Ok(t)
}

/// Truncation check done before any matrix is built.
pub fn transition_propagator(cfg: &RunConfig) -> Result<Option<Propagator>, CliError> {
    if cfg.force == ForceKind::Zero {
        return Ok(None);
    }
    let force = cfg.force_profile()?;
    let prop = Propagator::new(&force, &cfg.params(), cfg.h, cfg.t0, cfg.t1).map_err(numerical)?;
    let alpha_sq = prop.alpha.norm_sqr();
    let needed = (4.0 * alpha_sq).ceil() as usize;
    if needed > cfg.n {
        return Err(CliError::Validation(format!(
            "truncation too small: lambda = {alpha_sq:.3} needs --N {needed} or larger, got --N {}",
            cfg.n
        )));
    }
    Ok(Some(prop))
}

pub fn transitions(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(&["n", "P_n", "poisson_P_n", "abs_diff"]);
    let Some(prop) = transition_propagator(cfg)? else {
        t.push(vec![0usize.into(), 1.0.into(), 1.0.into(), 0.0.into()]);
        t.foot("lambda", 0.0);
        t.foot("sum_P", 1.0);
        t.foot("max_abs_diff", 0.0);
        return Ok(t);
    };
    let force = cfg.force_profile()?;
    let (s, _) = s_matrix_window(cfg.n, &force, &cfg.params(), cfg.h, cfg.t0, cfg.t1).map_err(numerical)?;
    let law = poisson_pmf(prop.lambda(), cfg.n_max);
    let mut sum = 0.0;
    let mut worst = 0.0f64;
    for (k, poisson) in law.iter().enumerate() {
        let p = s.entry(k, 0).norm_sqr();
        sum += p;
        worst = worst.max((p - poisson).abs());
        t.push(vec![k.into(), p.into(), (*poisson).into(), (p - poisson).abs().into()]);
    }
    t.foot("lambda", prop.lambda());
    t.foot("sum_P", sum);
    t.foot("max_abs_diff", worst);
    Ok(t)
}

pub fn resonance(cfg: &RunConfig) -> Result<Table, CliError> {
    let params = cfg.params();
    let rep = resonance_report(&params, cfg.z0, cfg.big_omega, cfg.t_max, cfg.steps);
    let rk = resonance_report_rk4(&params, cfg.z0, cfg.big_omega, cfg.t_max, cfg.steps, cfg.dt);
    let mut t = Table::new(&["t", "q_abs", "p_abs"]);
    for r in &rep.rows {
        t.push(vec![r.t.into(), r.q_abs.into(), r.p_abs.into()]);
    }
    t.foot("class", rep.class.label());
    t.foot("slope", rep.slope);
    t.foot("intercept", rep.intercept);
    t.foot("max_residual", rep.max_residual);
    t.foot("r_squared", rep.r_squared);
    t.foot("max_amplitude", rep.max_amplitude);
    t.foot("final_amplitude", rep.final_amplitude);
    t.foot("rk4_slope", rk.slope);
    Ok(t)
}

pub fn flow(cfg: &RunConfig) -> Result<Table, CliError> {
    let params = cfg.params();
    let force = cfg.force_profile()?;
    let energy = SymbolPoly::oscillator_hamiltonian(&params);
    let pt0 = PhasePoint::new(cfg.a, cfg.b);
    let e0 = evaluate(&energy, pt0).re;
    let mut t = Table::new(&["t", "q", "p", "q_rk4", "p_rk4", "energy"]);
    let mut rk = pt0;
    let mut prev = 0.0;
    let (mut dist, mut drift) = (0.0f64, 0.0f64);
    for k in 0..cfg.steps {
        let time = cfg.t_max * k as f64 / (cfg.steps - 1) as f64;
        let pt = classical_flow_closed(&params, &force, time, pt0);
        rk = rk4_advance(&params, &force, prev, time, rk, cfg.dt);
        prev = time;
        let e = evaluate(&energy, pt).re;
        dist = dist.max(pt.dist(&rk));
        drift = drift.max((e - e0).abs());
        t.push(vec![time.into(), pt.q.into(), pt.p.into(), rk.q.into(), rk.p.into(), e.into()]);
    }
    t.foot("max_rk4_distance", dist);
    t.foot("max_energy_change", drift);
    Ok(t)
}

pub fn kernel(cfg: &RunConfig) -> Result<Table, CliError> {
    let label = CoherentLabel::new(cfg.h, cfg.a, cfg.b, cfg.params()).map_err(numerical)?;
    let built = kernel_from_vector(&coherent_vector(&label).map_err(numerical)?).map_err(numerical)?;
    let closed = coherent_kernel(&label).map_err(numerical)?;
    let n = (2.0 * cfg.extent / cfg.step).round() as usize + 1;
    let mut t = Table::new(&["x", "y", "built_re", "built_im", "closed_re", "closed_im", "abs_diff"]);
    let mut worst = 0.0f64;
    for i in 0..n {
        let x = -cfg.extent + i as f64 * cfg.step;
        for j in 0..n {
            let y = -cfg.extent + j as f64 * cfg.step;
            let g = GroupElement::new(0.0, x, y);
            let (u, v) = (built.eval(g), closed.eval(g));
            let d = (u - v).norm();
            worst = worst.max(d);
            t.push(vec![x.into(), y.into(), u.re.into(), u.im.into(), v.re.into(), v.im.into(), d.into()]);
        }
    }
    t.foot("max_deviation", worst);
    Ok(t)
}

pub fn verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let names: Vec<&str> =
        if cfg.suites.is_empty() { SUITES.to_vec() } else { cfg.suites.iter().map(String::as_str).collect() };
    let mut t = Table::new(&["suite", "check", "value", "tol", "status"]);
    let mut messages = Vec::new();
    let mut failed = 0usize;
    for name in names {
        let report = match run_suite(name) {
            Some(Ok(r)) => r,
            Some(Err(e)) => {
                failed += 1;
                messages.push(format!("FAIL {name}: {e}"));
                continue;
            }
            None => return Err(CliError::Validation(format!("unknown suite '{name}'"))),
        };
        for c in &report.checks {
            let status = if c.passed() { "pass" } else { "fail" };
            t.push(vec![report.name.into(), c.name.into(), c.value.into(), c.tol.into(), status.into()]);
        }
        if report.passed() {
            messages.push(format!("PASS {} ({} checks)", report.name, report.checks.len()));
        } else {
            failed += 1;
            let detail: Vec<String> = report
                .failures()
                .map(|c| format!("{} = {} > {}", c.name, fmt_float(c.value), fmt_float(c.tol)))
                .collect();
            messages.push(format!("FAIL {}: {}", report.name, detail.join("; ")));
        }
    }
    t.foot("failed_suites", Cell::Int(failed as i64));
    Ok(Outcome { table: t, messages, success: failed == 0 })
}
