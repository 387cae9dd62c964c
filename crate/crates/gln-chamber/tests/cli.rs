use gln_chamber::cli::{
    homology_report, lattice_report, order_report, run, spectrum_report, verify_report,
    AdditionOrder, ComponentKind, HomologyArgs, LatticeReport, OrderReport, Pattern,
    SpectrumReport, VerifyReport,
};
use gln_chamber::gl3::LittleComplexReport;
use std::process::Command;

fn run_ok(args: &[&str]) -> String {
    let mut full = vec!["gln-chamber"];
    full.extend_from_slice(args);
    let (code, out, err) = run(full);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn spectrum_text_lists_five_rows() {
    let out = run_ok(&["spectrum", "--n", "3"]);
    assert!(out.starts_with("Bernstein component shapes of GL(3): 5"));
    let ranks: Vec<&str> = out.lines().skip(2).map(|l| l.split_whitespace().last().unwrap()).collect();
    assert_eq!(ranks, vec!["1", "2", "4", "4", "4"]);
}

#[test]
fn spectrum_json_round_trips() {
    let out = run_ok(&["spectrum", "--n", "4", "--format", "json"]);
    let parsed: SpectrumReport = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed, spectrum_report(4).unwrap());
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out);
}

#[test]
fn homology_partial_pattern() {
    let out = run_ok(&["homology", "--component", "principal", "--pattern", "12vs3", "--conductor", "4"]);
    assert!(out.contains("H_ev             Z^4"));
    assert!(out.contains("H_odd            Z^4"));
    assert!(out.contains("L_1    1, s0s2s0"));
    assert!(out.contains("J_1    1, s1"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn homology_reports_round_trip() {
    for args in [
        vec!["homology", "--component", "supercuspidal"],
        vec!["homology", "--component", "maximal-levi"],
        vec!["homology", "--component", "principal", "--pattern", "equal"],
        vec!["homology", "--component", "principal", "--conductors", "3,3,2"],
        vec!["homology", "--component", "principal", "--conductors", "1,3,3"],
    ] {
        let mut full = args.clone();
        full.extend(["--format", "json"]);
        let out = run_ok(&full);
        let parsed: LittleComplexReport = serde_json::from_str(&out).unwrap();
        assert!(parsed.all_passed());
        assert_eq!(serde_json::from_str::<LittleComplexReport>(&serde_json::to_string(&parsed).unwrap()).unwrap(), parsed);
    }
}

#[test]
fn conductors_determine_the_pattern() {
    let args = |conductors: Vec<u32>, pattern| HomologyArgs {
        component: ComponentKind::Principal,
        pattern,
        conductor: None,
        conductors: Some(conductors),
    };
    let r = homology_report(&args(vec![1, 1, 1], None)).unwrap();
    assert_eq!(r.homology.betti(), vec![3, 1, 0]);
    let r = homology_report(&args(vec![4, 4, 1], None)).unwrap();
    assert_eq!(r.homology.betti(), vec![2, 2, 0]);
    let r = homology_report(&args(vec![2, 2, 2], Some(Pattern::Generic))).unwrap();
    assert_eq!(r.homology.betti(), vec![1, 2, 1]);
    assert!(homology_report(&args(vec![1, 1, 1], Some(Pattern::Generic))).is_err());
    assert!(homology_report(&args(vec![1, 2], None)).is_err());
    assert!(homology_report(&args(vec![2, 3, 2], None)).is_err());
}

#[test]
fn lattice_and_order_commands() {
    let r = lattice_report(&[2, 1], 1, AdditionOrder::Second).unwrap();
    assert_eq!(r.results.len(), 1);
    assert_eq!(r.results[0].profile, vec![2, 1]);
    assert_eq!(r.results[0].order, "A(2,1)");
    let out = run_ok(&["lattice", "add", "--dims", "2,1", "--format", "json"]);
    let parsed: LatticeReport = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed, lattice_report(&[2, 1], 1, AdditionOrder::Both).unwrap());

    let o = order_report("A:1,1,1").unwrap();
    assert_eq!(o.parahoric, "A(1,1,1)");
    assert!(o.inclusion);
    let out = run_ok(&["order", "parahoric", "--endo-groups", "A:2|B:1", "--format", "json"]);
    let parsed: OrderReport = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.parahoric, "A(3)");
    assert_eq!(parsed, order_report("A:2|B:1").unwrap());
}

#[test]
fn failed_check_gives_exit_one() {
    let (code, out, _) = run(["gln-chamber", "order", "parahoric", "--endo-groups", "A:1,1|B@2:2"]);
    assert_eq!(code, 1);
    assert!(out.contains("false"));
}

#[test]
fn verify_command() {
    let r = verify_report(3, 40);
    assert_eq!(r.snf_passed, 40);
    assert!(r.gl3_error.is_none());
    let out = run_ok(&["verify", "--seed", "3", "--samples", "40", "--format", "json"]);
    let parsed: VerifyReport = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed, r);
}

#[test]
fn invalid_input_gives_exit_two() {
    for args in [
        vec!["gln-chamber", "spectrum", "--n", "13"],
        vec!["gln-chamber", "spectrum"],
        vec!["gln-chamber", "homology", "--component", "principal"],
        vec!["gln-chamber", "lattice", "add", "--dims", "3", "--ramification", "2"],
        vec!["gln-chamber", "order", "parahoric", "--endo-groups", "A"],
        vec!["gln-chamber", "frobnicate"],
    ] {
        let (code, out, err) = run(args.clone());
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gln-chamber");
    let ok = Command::new(bin).args(["spectrum", "--n", "2"]).output().unwrap();
    assert!(ok.status.success());
    assert!(String::from_utf8(ok.stdout).unwrap().contains("GL(2): 3"));
    let bad = Command::new(bin).args(["spectrum", "--n", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().starts_with("error:"));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert!(help.status.success());
}
