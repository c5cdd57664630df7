//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the report stays readable under `cargo test`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tansec::analytic::clt_report;
use tansec::identities::tan_sec_series;
use tansec::oracle::{
    alternating_count, matching_odd_smaller_distribution, perm_statistic_distribution,
    set_partition_counts, signed_perm_desb_distribution, PermStatistic,
};
use tansec::triangle::{family_poly, named_spec, Family, PolyFamily};
use tansec::verify::{exit_code, run_verify, CheckResult, Status, Suite, TriangleStore};
use tansec::yz::{shape_row, ExtractionShape};
use tansec::BigInt;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            passed: true,
            detail: summary,
        }
    } else {
        Outcome {
            passed: false,
            detail: failures.join("; "),
        }
    }
}

const GOLDEN: &[(&str, usize, &str)] = &[
    ("P", 1, "1+u^2"),
    ("P", 2, "2u+2u^3"),
    ("P", 3, "2+8u^2+6u^4"),
    ("A", 0, "1"),
    ("A", 1, "x"),
    ("A", 2, "x+x^2"),
    ("A", 3, "x+4x^2+x^3"),
    ("B", 0, "1"),
    ("B", 1, "1+x"),
    ("B", 2, "1+6x+x^2"),
    ("B", 3, "1+23x+23x^2+x^3"),
    ("a", 1, "x+x^2"),
    ("a", 2, "x+3x^2+2x^3"),
    ("a", 3, "x+7x^2+12x^3+6x^4"),
    ("a", 4, "x+15x^2+50x^3+60x^4+24x^5"),
    ("f", 1, "1+2y^2"),
    ("f", 2, "1+8y^2+8y^4"),
    ("f", 3, "1+26y^2+72y^4+48y^6"),
    ("f", 4, "1+80y^2+464y^4+768y^6+384y^8"),
    ("R", 1, "y+y^3"),
    ("R", 2, "y+4y^3+3y^5"),
    ("R", 3, "y+13y^3+27y^5+15y^7"),
    ("R", 4, "y+40y^3+174y^5+240y^7+105y^9"),
    ("R", 5, "y+121y^3+990y^5+2550y^7+2625y^9+945y^{11}"),
    ("T", 1, "y^2"),
    ("T", 2, "2y^2+3y^4"),
    ("T", 3, "4y^2+18y^4+15y^6"),
    ("T", 4, "8y^2+84y^4+180y^6+105y^8"),
    ("T", 5, "16y^2+360y^4+1500y^6+2100y^8+945y^{10}"),
    ("N", 1, "x"),
    ("N", 2, "2x+x^2"),
    ("N", 3, "4x+10x^2+x^3"),
    ("N", 4, "8x+60x^2+36x^3+x^4"),
    ("N", 5, "16x+296x^2+516x^3+116x^4+x^5"),
];

fn golden_tables() -> Outcome {
    let mut failures = Vec::new();
    for &(name, n, printed) in GOLDEN {
        let var = name
            .parse::<PolyFamily>()
            .map(PolyFamily::var)
            .unwrap_or("x");
        match family_poly(name, n) {
            Ok(p) if p.to_compact(var) == printed => {}
            Ok(p) => failures.push(format!("{name}_{n}: {} vs {printed}", p.to_compact(var))),
            Err(e) => failures.push(format!("{name}_{n}: {e}")),
        }
    }
    outcome(
        failures,
        format!("{} printed polynomials match", GOLDEN.len()),
    )
}

fn oracle_equivalence() -> tansec::Result<Outcome> {
    let mut failures = Vec::new();
    let row = |f: Family, n: usize| named_spec(f).row(n).expect("row is defined");
    for n in 1..=8 {
        let d = perm_statistic_distribution(n, PermStatistic::DescentPlusOne)?;
        if !d.matches_row(&row(Family::A, n)) {
            failures.push(format!("A row {n} vs descents"));
        }
        let d = perm_statistic_distribution(n, PermStatistic::InteriorPeak)?;
        if d.dense() != shape_row(ExtractionShape::W, n)?.dense() {
            failures.push(format!("D^{n}(y) vs interior peaks"));
        }
        let d = perm_statistic_distribution(n, PermStatistic::LeftPeak)?;
        if d.dense() != shape_row(ExtractionShape::WLeft, n)?.dense() {
            failures.push(format!("D^{n}(z) vs left peaks"));
        }
        if !matching_odd_smaller_distribution(n)?.matches_row(&row(Family::N, n)) {
            failures.push(format!("N row {n} vs matchings"));
        }
    }
    for n in 1..=7 {
        if !signed_perm_desb_distribution(n)?.matches_row(&row(Family::B, n)) {
            failures.push(format!("B row {n} vs signed permutations"));
        }
    }
    let pair = tan_sec_series(10);
    for n in 0..=10 {
        let (count, series) = (alternating_count(n)?, pair.euler_number(n));
        if count != series {
            failures.push(format!(
                "E_{n}: {count} alternating vs {series} from tan+sec"
            ));
        }
    }
    for n in 1..=10 {
        if !set_partition_counts(n)?.matches_row(&row(Family::S, n)) {
            failures.push(format!("S row {n} vs set partitions"));
        }
    }
    Ok(outcome(
        failures,
        "all enumerations agree with the rows".into(),
    ))
}

/// Every `n` in `lo..=hi` must have a passing record for `check`/`family`.
fn require(
    records: &[CheckResult],
    check: &str,
    family: &str,
    lo: usize,
    hi: usize,
    failures: &mut Vec<String>,
) {
    let passed: BTreeSet<usize> = records
        .iter()
        .filter(|r| r.check == check && r.family == family && r.status == Status::Pass)
        .map(|r| r.n)
        .collect();
    let missing: Vec<usize> = (lo..=hi).filter(|n| !passed.contains(n)).collect();
    if !missing.is_empty() {
        failures.push(format!("{check} [{family}] not passing at n = {missing:?}"));
    }
}

fn failing(records: &[CheckResult]) -> Vec<String> {
    records
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| format!("{} [{}] n={}: {}", r.check, r.family, r.n, r.detail))
        .collect()
}

fn identity_suite() -> Outcome {
    let max_n = 30;
    let store = TriangleStore::new(max_n);
    let mut records = run_verify(Suite::Algebra, max_n, &store);
    records.extend(run_verify(Suite::Triangles, max_n, &store));
    records.extend(run_verify(Suite::Operator, max_n, &store));
    let mut failures = failing(&records);
    let required: &[(&str, &str, usize, usize)] = &[
        ("tri.E_2nA", "E=2^n·A", 1, 20),
        ("tri.H_B", "H=B", 0, 20),
        ("yz.extract", "E", 1, 20),
        ("yz.extract", "H", 0, 20),
        ("yz.extract", "J", 1, 20),
        ("yz.extract", "M", 1, 20),
        ("yz.extract", "N", 1, 20),
        ("tri.xJ", "J", 1, 20),
        ("yz.prop2", "A", 0, 15),
        ("tri.theorem2", "F", 0, 15),
        ("tri.worpitzky", "a", 0, 20),
        ("yz.PQ", "P,Q", 0, 15),
        ("tri.G_kS", "G=k!·S", 1, 20),
        ("op.G_triangle", "G", 1, 15),
        ("op.recurrences", "G", 1, 12),
        ("op.ladder", "G", 1, 15),
        ("op.direct", "(x+x^2)D", 1, 12),
        ("tri.M_reversal", "M,N", 1, 20),
        ("tri.theorem5", "R,T", 0, 15),
        ("tri.RT_at_1", "R,T", 0, 20),
        ("tri.N_closed", "N", 1, 20),
        ("tri.N_sums", "N", 1, 30),
        ("tri.RT_top", "R,T", 0, 20),
    ];
    for &(check, family, lo, hi) in required {
        require(&records, check, family, lo, hi, &mut failures);
    }
    outcome(failures, format!("{} records, no failures", records.len()))
}

fn series_suite() -> Outcome {
    let max_n = 20;
    let store = TriangleStore::new(max_n);
    let records = run_verify(Suite::Series, max_n, &store);
    let mut failures = failing(&records);
    require(&records, "series.prop1", "tan+sec", 0, 12, &mut failures);
    require(&records, "series.egf_A", "A", 0, 15, &mut failures);
    require(&records, "series.thm6", "N,A", 0, 20, &mut failures);
    require(&records, "series.N_squared", "N", 0, 20, &mut failures);
    require(&records, "series.tan_sec", "tan,sec", 16, 16, &mut failures);
    outcome(failures, format!("{} records, no failures", records.len()))
}

fn analytic_suite() -> Outcome {
    let max_n = 50;
    let store = TriangleStore::new(max_n);
    let records = run_verify(Suite::Analytic, max_n, &store);
    let mut failures = failing(&records);
    require(&records, "analytic.interlacing", "N", 2, 25, &mut failures);
    require(&records, "analytic.first_moment", "N", 1, 50, &mut failures);
    require(&records, "analytic.mean_gap", "N", 2, 50, &mut failures);
    require(&records, "analytic.mode", "N", 2, 50, &mut failures);
    require(&records, "analytic.variance_gap", "N", 3, 50, &mut failures);
    require(
        &records,
        "analytic.printed_mean_erratum",
        "N",
        2,
        4,
        &mut failures,
    );
    let erratum: Vec<&str> = records
        .iter()
        .filter(|r| r.check == "analytic.printed_mean_erratum" && r.status == Status::Pass)
        .map(|r| r.detail.as_str())
        .collect();
    for (value, detail) in ["= 4,", "= 27,", "= 240,"].iter().zip(&erratum) {
        if !detail.contains(value) {
            failures.push(format!(
                "erratum record lacks exact value {value}: {detail}"
            ));
        }
    }
    outcome(
        failures,
        "real-rooted and interlaced to n = 25; moments, gaps and modes to n = 50; printed (2n+1)!!/4 differs from exact 4, 27, 240"
            .into(),
    )
}

fn clt_diagnostic() -> tansec::Result<Outcome> {
    let r = clt_report(&[10, 40])?;
    let mut failures = Vec::new();
    if !r.distances.iter().all(|d| (0.0..=1.0).contains(d)) {
        failures.push(format!("distance outside [0,1]: {:?}", r.distances));
    }
    if r.distances[1] >= r.distances[0] {
        failures.push(format!(
            "n=40 distance {} not below n=10 distance {}",
            r.distances[1], r.distances[0]
        ));
    }
    Ok(outcome(
        failures,
        format!(
            "sup distance {:.4} at n=10, {:.4} at n=40",
            r.distances[0], r.distances[1]
        ),
    ))
}

fn fault_injection() -> Outcome {
    let max_n = 6;
    let base = TriangleStore::new(max_n);
    let mut targets = Vec::new();
    for family in Family::ALL {
        for row in base.rows(family).iter().filter(|r| r.n() <= max_n) {
            for (k, _) in row.iter() {
                targets.push((family, row.n(), k));
            }
        }
    }
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = targets.len().div_ceil(workers);
    let missed: Vec<String> = std::thread::scope(|scope| {
        let handles: Vec<_> = targets
            .chunks(chunk)
            .map(|part| {
                let base = &base;
                scope.spawn(move || {
                    let mut missed = Vec::new();
                    for &(family, n, k) in part {
                        let mut store = base.clone();
                        store
                            .perturb(family, n, k, &BigInt::from(1))
                            .expect("entry is in the support");
                        if exit_code(&run_verify(Suite::All, max_n, &store)) == 0 {
                            missed.push(format!("{family}({n},{k})"));
                        }
                    }
                    missed
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker"))
            .collect()
    });
    outcome(
        missed
            .iter()
            .map(|m| format!("undetected perturbation of {m}"))
            .collect(),
        format!(
            "all {} single-entry perturbations in rows n <= {max_n} detected",
            targets.len()
        ),
    )
}

fn cli_fault_injection() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_tansec");
    let run = |extra: &[&str]| {
        std::process::Command::new(exe)
            .args(["verify", "--suite", "all", "--max-n", "6"])
            .args(extra)
            .output()
            .map(|o| o.status.code())
    };
    let mut failures = Vec::new();
    match run(&[]) {
        Ok(Some(0)) => {}
        other => failures.push(format!("clean run exit {other:?}")),
    }
    for fault in ["N:4:2", "A:3:1", "S:5:3", "T:2:1"] {
        match run(&["--inject-fault", fault]) {
            Ok(Some(1)) => {}
            other => failures.push(format!("fault {fault}: exit {other:?}")),
        }
    }
    outcome(failures, "binary exits 1 under injected faults".into())
}

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "1 golden tables",
            Duration::from_secs(5),
            Box::new(golden_tables),
        ),
        (
            "2 oracle equivalence",
            Duration::from_secs(60),
            Box::new(|| {
                oracle_equivalence().unwrap_or_else(|e| outcome(vec![e.to_string()], String::new()))
            }),
        ),
        (
            "3 identity suite",
            Duration::from_secs(30),
            Box::new(identity_suite),
        ),
        (
            "4 series suite",
            Duration::from_secs(10),
            Box::new(series_suite),
        ),
        (
            "5 analytic suite",
            Duration::from_secs(60),
            Box::new(analytic_suite),
        ),
        (
            "6 CLT diagnostic",
            Duration::from_secs(10),
            Box::new(|| {
                clt_diagnostic().unwrap_or_else(|e| outcome(vec![e.to_string()], String::new()))
            }),
        ),
        (
            "7 fault injection",
            Duration::MAX,
            Box::new(|| {
                let inproc = fault_injection();
                let cli = cli_fault_injection();
                Outcome {
                    passed: inproc.passed && cli.passed,
                    detail: format!("{}; {}", inproc.detail, cli.detail),
                }
            }),
        ),
    ];
    let mut all = true;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let passed = result.passed && in_time;
        all &= passed;
        let timing = if limit == Duration::MAX {
            format!("{:.2}s", elapsed.as_secs_f64())
        } else {
            format!("{:.2}s of {}s", elapsed.as_secs_f64(), limit.as_secs())
        };
        let late = if in_time { "" } else { "; over the time limit" };
        println!(
            "criterion {name}: {} ({timing}) {}{late}",
            if passed { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
