// The two open conjectures as experiments: signatures against their
// complements, and the two alternating signatures of each length.
//
//     cargo run --example conjectures -- 5 9

use std::fmt::Write;

use gridcycles::equivalence::{conjecture_alternating, conjecture_complement, ConjectureReport};
use gridcycles::oracle::Oracle;

pub fn run_example(k_max: usize, n_max: usize) -> gridcycles::Result<String> {
    let mut out = String::new();
    let oracle = Oracle::default();
    let reports = [
        conjecture_complement(k_max.min(4), n_max, &oracle)?,
        conjecture_alternating(k_max, n_max, &oracle)?,
    ];
    for report in &reports {
        summarise(&mut out, report);
    }
    Ok(out)
}

fn summarise(out: &mut String, report: &ConjectureReport) {
    let counterexamples: Vec<_> = report.counterexamples().collect();
    writeln!(
        out,
        "{}: k <= {}, n in {}..={}, {} comparisons, {} counterexamples{}",
        report.conjecture,
        report.k_max,
        report.n_min,
        report.n_max,
        report.records.len(),
        counterexamples.len(),
        if report.complete { "" } else { " (incomplete)" }
    )
    .unwrap();
    for r in counterexamples {
        let sigma = r
            .params
            .sigma
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_default();
        let other = r
            .params
            .other_sigma
            .as_ref()
            .map(|s| s.to_string())
            .unwrap_or_default();
        writeln!(
            out,
            "  n = {}: {sigma} has {}, {other} has {}",
            r.params.n, r.left, r.right
        )
        .unwrap();
    }
}

fn main() -> gridcycles::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse().ok());
    let k_max = args.next().flatten().unwrap_or(5);
    let n_max = args.next().flatten().unwrap_or(9);
    print!("{}", run_example(k_max, n_max)?);
    Ok(())
}
