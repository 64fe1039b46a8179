use pmech::verify::{run_all, run_suite, SUITES};

#[test]
fn every_suite_runs_and_reports() {
    let reports: Vec<_> = run_all().into_iter().map(|r| r.unwrap()).collect();
    assert_eq!(reports.iter().map(|r| r.name).collect::<Vec<_>>(), SUITES);
    let failing: Vec<(&str, &str)> =
        reports.iter().flat_map(|r| r.failures().map(move |c| (r.name, c.name))).collect();
    // The displayed label shift of a forced coherent state is not the
    // classical interaction-frame drift; this check stays red.
    assert_eq!(failing, [("forced-dynamics", "coherent label drift vs classical trajectory")]);
}

#[test]
fn suites_are_deterministic() {
    let a = run_suite("forced-dynamics").unwrap().unwrap();
    let b = run_suite("forced-dynamics").unwrap().unwrap();
    assert_eq!(a, b);
}
