use gammakit::gamma::Representation;
use gammakit::report::{emit, run_suite, Format, Status, Suite, SuiteReport};

#[test]
fn same_seed_same_bytes() {
    let a = emit(
        &run_suite(Suite::Solutions, 9, Representation::Dirac),
        Format::Json,
    );
    let b = emit(
        &run_suite(Suite::Solutions, 9, Representation::Dirac),
        Format::Json,
    );
    assert_eq!(a, b);
}

#[test]
fn json_round_trips() {
    let r = run_suite(Suite::Lorentz, 1, Representation::Weyl);
    assert_eq!(SuiteReport::from_json(&emit(&r, Format::Json)).unwrap(), r);
}

#[test]
fn clifford_suite_passes_for_any_seed() {
    for seed in [0, 1, 99] {
        assert!(run_suite(Suite::Clifford, seed, Representation::Dirac).all_passed());
    }
}

#[test]
fn symmetry_report_lists_every_mapping() {
    let r = run_suite(Suite::Symmetries, 42, Representation::Dirac);
    assert!(r.all_passed(), "{}", emit(&r, Format::Markdown));
    let md = emit(&r, Format::Markdown);
    let rows = md.lines().filter(|l| l.contains("-mapping |")).count();
    assert_eq!(rows, 8);
    let phase_of = |id: &str| r.checks.iter().find(|c| c.id == id).unwrap().detail.clone();
    assert!(phase_of("symmetries.charge-conjugation.psi2").contains("phase -1"));
    assert!(phase_of("symmetries.antiunitary-pt.psi1").contains("phase -i"));
}

#[test]
fn every_check_has_an_anchor() {
    let r = run_suite(Suite::All, 7, Representation::Majorana);
    assert!(r.all_passed(), "{}", emit(&r, Format::Markdown));
    assert!(r
        .checks
        .iter()
        .all(|c| !c.anchor.is_empty() && c.status == Status::Pass));
    assert_eq!(r.summary.total, r.checks.len());
    assert_eq!(r.version, env!("CARGO_PKG_VERSION"));
}
