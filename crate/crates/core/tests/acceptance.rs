//! Acceptance gates: exhaustive identity checks at desk scale plus the worked
//! examples. Each criterion prints one PASS/FAIL line; the test fails if any
//! criterion does. Runs without the libtest harness so the lines are never
//! captured.

use std::time::Instant;

use beck_core::bijections::*;
use beck_core::families::Member;
use beck_core::stats::stat_report;
use beck_core::verify::{run, Grid, Identity};
use beck_core::{xi, DecoratedPartition, Partition, RectanglePair, Strategy};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn pair(flat: &str, s: u32, i: usize) -> RectanglePair {
    RectanglePair::new(p(flat), s, i).unwrap()
}

/// Runs one identity over every grid and reports the first few failures.
fn exhaustive(identity: Identity, grid: &Grid) -> (bool, String) {
    let report = run(identity, grid, Strategy::default()).expect("valid grid");
    let mut detail = format!(
        "{} points, {} failed, {:.1}s",
        report.summary.points,
        report.summary.failed,
        report.elapsed_ms / 1e3
    );
    for f in report.failures().take(5) {
        detail.push_str(&format!(
            "\n    n={} r={} t={:?} {}: {} vs {}",
            f.n, f.r, f.t, f.relation, f.lhs, f.rhs
        ));
    }
    (report.all_passed() && report.summary.points > 0, detail)
}

fn fixtures() -> (bool, String) {
    let mut missed = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            missed.push(name.to_string());
        }
    };
    check(
        "xi",
        xi(&p("22,19,15,15,13,10,6,5,2"), 5).ok() == Some(p("32,24,23,16,12")),
    );
    check(
        "phi",
        phi_forward(&p("27,24,20,15,13,10,6,5,2"), 5).ok() == Some(p("32,24,23,16,12,5,5,5")),
    );
    let overlined = Member::Decorated(DecoratedPartition::overlined(p("4,3,1"), 2).unwrap());
    check(
        "psi1 overlined",
        psi1_forward(&overlined, 3, 2).ok() == Some(pair("2,1,1", 2, 2)),
    );
    check(
        "psi1 plain",
        psi1_forward(&Member::Plain(p("5,2,1")), 3, 2).ok() == Some(pair("3,2,1", 2, 1)),
    );
    let marked = DecoratedPartition::marked(p("32,24,23,16,12,7,7"), 7).unwrap();
    check(
        "psi2",
        psi2_forward(&marked, 5, 2).ok() == Some(pair("22,19,15,15,13,10,6,5,2", 7, 2)),
    );
    let o = DecoratedPartition::overlined(p("32,24,23,16,16,12"), 5).unwrap();
    check(
        "psi_o",
        psi_o(&o, 5).ok() == Some(pair("22,19,15,15,13,10,6,5,2", 1, 16)),
    );
    let d = DecoratedPartition::overlined(p("20,20,20,17,13,10,10,10,3"), 3).unwrap();
    check(
        "psi_d",
        psi_d(&d, 5).ok() == Some(pair("8^3,7^7,4^3,3^4,2^3", 1, 20)),
    );
    check(
        "psi_t",
        psi_t(&p("20,17,13,10^7,3"), 5).ok() == Some(pair("6^3,5^7,3^3,2^4,1^3", 1, 50)),
    );
    let sizes = [
        o.base().size(),
        d.base().size(),
        p("20,17,13,10^7,3").size(),
    ];
    check("sizes 123", sizes == [123; 3]);
    let s = stat_report(&p("10,7,7,5,4,3"), 4, 2).unwrap();
    check("stats", (s.residue_parts, s.large_gaps) == (1, 3));
    let detail = if missed.is_empty() {
        "10 fixtures".to_string()
    } else {
        format!("mismatched: {}", missed.join(", "))
    };
    (missed.is_empty(), detail)
}

fn main() {
    let start = Instant::now();
    let desk = Grid::new((2..=6).collect(), None, 0, 50).unwrap();
    let small = |n_max| Grid::new((2..=5).collect(), None, 0, n_max).unwrap();

    type Check = Box<dyn Fn() -> (bool, String)>;
    let criteria: Vec<(&str, Check)> = vec![
        (
            "third identity E = |O1r| = |D1r|, r<=6, n<=50",
            Box::new({
                let g = desk.clone();
                move || exhaustive(Identity::Beck3, &g)
            }),
        ),
        (
            "Glaisher |Or| = |Dr| = |Fr|, r<=6, n<=50",
            Box::new({
                let g = desk.clone();
                move || exhaustive(Identity::Glaisher, &g)
            }),
        ),
        (
            "first identity b = (r-1)|O1r| = sum E, r<=6, n<=50",
            Box::new({
                let g = desk.clone();
                move || exhaustive(Identity::Beck1, &g)
            }),
        ),
        (
            "second identity b' = |Tr|, r<=6, n<=50",
            Box::new({
                let g = desk.clone();
                move || exhaustive(Identity::Beck2, &g)
            }),
        ),
        (
            "xi suite, r<=5, n<=30",
            Box::new(move || exhaustive(Identity::Xi, &small(30))),
        ),
        (
            "round trips, r<=5, n<=22",
            Box::new(move || exhaustive(Identity::Roundtrip, &small(22))),
        ),
        (
            "series cross-check, r<=5, N=50",
            Box::new(move || exhaustive(Identity::Series, &small(50))),
        ),
        ("worked examples", Box::new(fixtures)),
    ];

    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = check();
        println!(
            "{} criterion {}: {name} ({detail})",
            if ok { "PASS" } else { "FAIL" },
            k + 1
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
