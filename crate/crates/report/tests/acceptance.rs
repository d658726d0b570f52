//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use selberg_report::{emit_report, run_suite, Format, ReportRecord, SuiteConfig, Value};

const SEED: u64 = 20_240_601;

struct Run {
    records: Vec<ReportRecord>,
    elapsed: Duration,
}

impl Run {
    fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    fn all_pass(&self) -> bool {
        !self.records.is_empty() && self.passed() == self.records.len()
    }

    fn find(&self, suite: &str, case: &str) -> Option<&ReportRecord> {
        self.records.iter().find(|r| r.suite == suite && r.case == case)
    }

    fn count(&self, suite: &str, prefix: &str) -> usize {
        self.records.iter().filter(|r| r.suite == suite && r.case.starts_with(prefix)).count()
    }

    fn failures(&self) -> String {
        let bad: Vec<String> =
            self.records.iter().filter(|r| !r.pass).take(3).map(|r| format!("{} {}", r.suite, r.case)).collect();
        if bad.is_empty() {
            String::new()
        } else {
            format!("; failing: {}", bad.join(", "))
        }
    }

    fn summary(&self) -> String {
        format!("{}/{} cases in {:.1}s{}", self.passed(), self.records.len(), self.elapsed.as_secs_f64(), self.failures())
    }
}

fn run(suites: &[&str]) -> Run {
    let mut config = SuiteConfig::new(suites);
    config.seed = SEED;
    let start = Instant::now();
    let records = run_suite(&config).unwrap_or_else(|e| panic!("config for {suites:?} rejected: {e}"));
    Run { records, elapsed: start.elapsed() }
}

fn within(r: &Run, minutes: u64) -> bool {
    r.elapsed < Duration::from_secs(60 * minutes)
}

fn exact(r: Option<&ReportRecord>, num: i64, den: i64) -> bool {
    r.is_some_and(|r| r.pass && r.lhs == Value::Exact(selberg_algebra::rat(num, den)))
}

/// Number of length-`n` nonnegative vectors with sum at most `s`: `C(n + s, n)`.
fn compositions(n: u64, s: u64) -> usize {
    (1..=n).fold(1u64, |acc, i| acc * (s + i) / i) as usize
}

fn criterion(index: usize, ok: bool, what: &str, detail: String) -> bool {
    println!("criterion {index:2}: {} {what}: {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn main() -> ExitCode {
    let mut results = Vec::new();

    let r = run(&["dyson"]);
    let grid: usize = (1..=4).map(|n| compositions(n, 5)).sum();
    let ok = r.all_pass()
        && within(&r, 1)
        && r.count("dyson", "a=") == grid
        && r.count("dyson", "equal ") == 6
        && exact(r.find("dyson", "value n=3 k=2"), 90, 1);
    results.push(criterion(1, ok, "Dyson constant terms, n <= 4, sum <= 5", r.summary()));

    let r = run(&["macdonald"]);
    let ok = r.all_pass()
        && within(&r, 5)
        && r.count("macdonald", "") == 14
        && r.find("macdonald", "degrees G2").is_some_and(|c| c.lhs == Value::Text("[2, 6]".into()));
    results.push(criterion(2, ok, "Macdonald constant terms A1-A3, B2, C2, G2, k <= 2", r.summary()));

    let r = run(&["morris", "q_dyson", "q_morris"]);
    let polynomial = r
        .records
        .iter()
        .filter(|c| c.suite != "morris")
        .all(|c| matches!(&c.lhs, Value::Text(t) if !t.contains('/')));
    let ok = r.all_pass() && polynomial && r.count("morris", "") == 81 && r.count("q_morris", "") == 81;
    results.push(criterion(3, ok, "Morris, q-Morris and q-Dyson with q = 1 values", r.summary()));

    let r = run(&["jack"]);
    let ok = r.all_pass()
        && ["triangular", "evaluation", "binomial", "cauchy"].iter().all(|p| r.count("jack", p) == 9)
        && r.count("jack", "orthogonality") == 6
        && r.count("jack", "norm") == 6;
    results.push(criterion(4, ok, "Jack structure, orthogonality, norms, evaluation, Cauchy, binomial", r.summary()));

    let r = run(&["closed_numeric"]);
    let mc = r.find("closed_numeric", "selberg mc n=4 alpha=2 beta=2 gamma=1");
    let ok = r.all_pass()
        && within(&r, 15)
        && mc.is_some_and(|m| m.evals.unwrap_or(0) >= 1_000_000 && m.residual.unwrap_or(f64::INFINITY) < 4.0)
        && ["selberg quad", "morris torus n=1", "mehta", "laguerre", "askey_richards", "cauchy", "dixon_anderson"]
            .iter()
            .all(|p| r.count("closed_numeric", p) > 0);
    results.push(criterion(5, ok, "closed forms against quadrature, torus rules and Monte Carlo", r.summary()));

    let r = run(&["identities"]);
    let ok = r.all_pass() && r.records.len() == 5 && r.records.iter().all(|c| c.evals == Some(50));
    results.push(criterion(6, ok, "identity web at 50 random parameter sets each", r.summary()));

    let r = run(&["kadell"]);
    let ok = r.all_pass()
        && ["kadell", "aomoto", "hua_kadell", "euler", "gauss", "okounkov_olshanski"]
            .iter()
            .all(|p| r.count("kadell", p) > 0);
    results.push(criterion(7, ok, "Kadell, Aomoto, Hua-Kadell, Euler, Gauss and Okounkov-Olshanski", r.summary()));

    let r = run(&["q_selberg"]);
    let ok = r.all_pass() && r.count("q_selberg", "jackson n=2") == 8 && r.count("q_selberg", "classical limit") == 1;
    results.push(criterion(8, ok, "Jackson sums, q in {1/2, 9/10}, and the q = 0.99 limit", r.summary()));

    let r = run(&["elliptic"]);
    let ok = r.all_pass()
        && r.count("elliptic", "gamma recurrence") == 3
        && r.count("elliptic", "gamma reflection") == 3
        && r.find("elliptic", "beta integral p=q=0.1 t_r=(pq)^(1/6)").is_some()
        && r.find("elliptic", "rank one reduction p=q=0.1 t_r=(pq)^(1/6)").is_some_and(|c| c.method == "exact");
    results.push(criterion(9, ok, "elliptic gamma identities and the elliptic beta integral", r.summary()));

    let r = run(&["ensembles"]);
    let ok = r.all_pass() && within(&r, 10) && r.records.iter().all(|c| c.evals.unwrap_or(0) >= 10_000);
    results.push(criterion(10, ok, "sampler KS tests and moments", r.summary()));

    let r = run(&["discrete"]);
    let ok = r.all_pass()
        && exact(r.find("discrete", "hyperdet n=2 k=1 alpha=1 beta=1 value"), 1, 12)
        && exact(r.find("discrete", "stanley n=2 alpha=1 beta=1 2gamma=2 value"), 1, 6);
    results.push(criterion(11, ok, "hyperdeterminant and Stanley probability, exact", r.summary()));

    let r = run(&["gelfond"]);
    let ok = r.all_pass() && r.records.len() == 3;
    let values: Vec<String> = r.records.iter().map(|c| format!("{} = {:?}", c.case, c.lhs)).collect();
    results.push(criterion(12, ok, "Gelfond minima", format!("{} ({})", r.summary(), values.join(", "))));

    let suites = ["closed_numeric", "discrete", "ensembles", "gelfond", "identities", "q_selberg"];
    let report = |jobs: usize| {
        let mut c = SuiteConfig::new(&suites);
        c.seed = SEED;
        c.jobs = Some(jobs);
        emit_report(&run_suite(&c).expect("valid config"), Format::JsonLines)
    };
    let (a, b, c) = (report(1), report(1), report(4));
    let ok = !a.is_empty() && a == b && a == c;
    let detail = format!("{} bytes, rerun identical: {}, 4 workers identical: {}", a.len(), a == b, a == c);
    results.push(criterion(13, ok, "identical config and seed give identical json_lines", detail));

    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
