use std::process::Command;

use selberg_algebra::rat;
use selberg_report::*;

fn dyson_small() -> SuiteConfig {
    SuiteConfig::from_toml("suites = [\"dyson\"]\n[grid.dyson]\nmax_n = 3\nmax_sum = 4\n").unwrap()
}

fn record(lhs: Value, rhs: Value) -> ReportRecord {
    ReportRecord {
        suite: "s".into(),
        case: "c".into(),
        lhs,
        rhs,
        residual: None,
        pass: true,
        method: "exact".into(),
        evals: None,
        seed: 3,
        ms: None,
    }
}

#[test]
fn empty_suite_list_is_an_empty_success() {
    let records = run_suite(&SuiteConfig::default()).unwrap();
    assert!(records.is_empty());
}

#[test]
fn unknown_suite_is_rejected_up_front() {
    let err = run_suite(&SuiteConfig::new(&["dyson", "foo"])).unwrap_err();
    assert!(matches!(err, ReportError::UnknownSuite(ref s) if s == "foo"), "{err}");
    let mut grid_only = SuiteConfig::new(&["dyson"]);
    grid_only.grid.entry("bar".into()).or_default().insert("max_n".into(), 1.0);
    assert!(matches!(run_suite(&grid_only), Err(ReportError::UnknownSuite(_))));
}

#[test]
fn small_dyson_grid_passes_with_exact_values() {
    let records = run_suite(&dyson_small()).unwrap();
    assert!(!records.is_empty());
    for r in &records {
        assert!(r.pass, "{r:?}");
        assert_eq!(r.method, "exact");
        assert!(matches!(r.lhs, Value::Exact(_)), "{r:?}");
    }
    let cases: Vec<&str> = records.iter().map(|r| r.case.as_str()).collect();
    let mut sorted = cases.clone();
    sorted.sort();
    assert_eq!(cases, sorted);
    let ninety = records.iter().find(|r| r.case == "value n=3 k=2").unwrap();
    assert_eq!(ninety.lhs, Value::Exact(rat(90, 1)));
}

#[test]
fn csv_with_no_records_is_the_header() {
    let out = emit_report(&[], Format::Csv);
    assert_eq!(String::from_utf8(out).unwrap(), "suite,case,lhs,rhs,residual,pass,method,evals,seed,ms\n");
}

#[test]
fn exact_values_render_as_reduced_fractions() {
    let r = record(Value::Exact(rat(2, 12)), Value::Exact(rat(-90, 1)));
    let json = String::from_utf8(emit_report(std::slice::from_ref(&r), Format::JsonLines)).unwrap();
    assert!(json.contains("\"lhs\":\"1/6\""), "{json}");
    assert!(json.contains("\"rhs\":\"-90\""), "{json}");
    let csv = String::from_utf8(emit_report(&[r], Format::Csv)).unwrap();
    assert_eq!(csv.lines().nth(1).unwrap(), "s,c,1/6,-90,,true,exact,,3,");
}

#[test]
fn json_lines_have_the_fixed_field_order() {
    let r = record(Value::Float(0.1), Value::None);
    let line = String::from_utf8(emit_report(&[r], Format::JsonLines)).unwrap();
    assert_eq!(
        line,
        "{\"suite\":\"s\",\"case\":\"c\",\"lhs\":0.1,\"rhs\":null,\"residual\":null,\"pass\":true,\
         \"method\":\"exact\",\"evals\":null,\"seed\":3,\"ms\":null}\n"
    );
    let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), FIELDS.len());
}

#[test]
fn floats_round_trip_through_the_shortest_decimal() {
    for x in [0.1, 1.0 / 3.0, 4.49915415901814e-10, 1e300, -2.5e-320, 12.000000000000037] {
        let s = format_float(x);
        assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        let r = record(Value::Float(x), Value::Exact(rat(1, 3)));
        let line = String::from_utf8(emit_report(&[r], Format::JsonLines)).unwrap();
        let v: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
        assert_eq!(v["lhs"].as_f64().unwrap(), x);
        assert_eq!(v["rhs"], "1/3");
    }
    assert_eq!(format_float(0.1), "0.1");
}

#[test]
fn summary_counts_per_suite() {
    let mut a = record(Value::None, Value::None);
    let mut b = a.clone();
    b.pass = false;
    b.case = "bad".into();
    let mut c = a.clone();
    c.suite = "t".into();
    a.case = "good".into();
    let text = String::from_utf8(emit_report(&[a, b, c], Format::SummaryText)).unwrap();
    assert!(text.contains("s: 1/2 passed"), "{text}");
    assert!(text.contains("t: 1/1 passed"), "{text}");
    assert!(text.contains("FAIL s bad"), "{text}");
    assert!(text.contains("total: 2/3 passed"), "{text}");
}

#[test]
fn config_parses_and_validates() {
    let c = SuiteConfig::from_toml(
        "suites = [\"jack\"]\nseed = \"18446744073709551615\"\njobs = 2\nsample_ceiling = 1000\n\
         [tolerances]\n\"closed_numeric.quad\" = 1e-7\n[grid.jack]\nmax_weight = 3\n",
    )
    .unwrap();
    assert_eq!(c.seed, u64::MAX);
    assert_eq!(c.jobs, Some(2));
    assert_eq!(c.tolerances["closed_numeric.quad"], 1e-7);
    assert!(SuiteConfig::from_toml("suites = [\"jack\"]\nunknown = 1\n").is_err());
    assert!(SuiteConfig::from_toml("seed = -1\n").is_err());
    assert!(SuiteConfig::from_toml("seed = \"x\"\n").is_err());
    assert_eq!(SuiteConfig::from_toml("seed = 42\n").unwrap().seed, 42);
    let mut bad = SuiteConfig::new(&["dyson"]);
    bad.jobs = Some(0);
    assert!(matches!(run_suite(&bad), Err(ReportError::Config(_))));
    let mut t = SuiteConfig::default();
    t.set_tolerance("kadell=1e-5").unwrap();
    assert_eq!(t.tolerances["kadell"], 1e-5);
    assert!(t.set_tolerance("kadell").is_err());
    assert!(t.set_tolerance("kadell=x").is_err());
}

#[test]
fn formats_parse() {
    assert_eq!("json_lines".parse::<Format>().unwrap(), Format::JsonLines);
    assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
    assert_eq!("summary_text".parse::<Format>().unwrap(), Format::SummaryText);
    assert!("xml".parse::<Format>().is_err());
}

#[test]
fn tolerance_override_can_fail_a_case() {
    let mut c = SuiteConfig::new(&["q_selberg"]);
    c.set_tolerance("q_selberg.classical=1e-9").unwrap();
    let records = run_suite(&c).unwrap();
    let limit = records.iter().find(|r| r.case.starts_with("classical limit")).unwrap();
    assert!(!limit.pass, "{limit:?}");
    assert!(records.iter().filter(|r| r.case.starts_with("jackson")).all(|r| r.pass));
}

#[test]
fn listing_is_sorted_and_complete() {
    let names: Vec<&str> = list_suites().into_iter().map(|(n, _)| n).collect();
    assert_eq!(names.len(), 14);
    assert!(names.windows(2).all(|w| w[0] < w[1]));
    let mut c = SuiteConfig::new(&names);
    c.suites.push("nope".into());
    assert!(matches!(run_suite(&c), Err(ReportError::UnknownSuite(ref s)) if s == "nope"));
}

fn cli() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_selberg"));
    c.env_remove("SELBERG_CONFIG");
    c
}

#[test]
fn cli_exit_status_tracks_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let ok = cli().args(["verify", "discrete", "--format", "json_lines", "--out"]).arg(&out).status().unwrap();
    assert!(ok.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().all(|l| l.contains("\"pass\":true")));
    assert!(text.contains("\"lhs\":\"1/12\""));

    let fail = cli().args(["verify", "q_selberg", "--tolerance", "q_selberg.classical=1e-9"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fail.stdout).contains("FAIL q_selberg classical limit"));

    let unknown = cli().args(["verify", "foo"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    assert!(unknown.stdout.is_empty());
}

#[test]
fn cli_flags_override_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("c.toml");
    std::fs::write(&config, "suites = [\"gelfond\"]\nseed = 1\n").unwrap();
    let run = |extra: &[&str], env: bool| {
        let mut c = cli();
        c.args(["verify", "--format", "csv"]).args(extra);
        if env {
            c.env("SELBERG_CONFIG", &config);
        } else {
            c.arg("--config").arg(&config);
        }
        let o = c.output().unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        String::from_utf8(o.stdout).unwrap()
    };
    let from_flag = run(&[], false);
    let from_env = run(&[], true);
    assert_eq!(from_flag, from_env);
    let reseeded = run(&["--seed", "2"], true);
    assert_ne!(from_env, reseeded);
    assert_eq!(reseeded, run(&["--seed", "2"], false));
}
