// Brute-force checks: every formula against exhaustive enumeration of
// cycles, split across shards.
//
//     cargo run --example oracle_verification -- 8

use std::fmt::Write;

use gridcycles::oracle::{Oracle, OracleBudget};
use gridcycles::verify::{self, Target};
use gridcycles::Signature;

pub fn run_example(n_max: usize) -> gridcycles::Result<String> {
    let mut out = String::new();
    let oracle = Oracle::new(OracleBudget::default().with_shards(4));

    let s3: Signature = "s3".parse()?;
    writeln!(out, "|C_n^{s3}| by enumeration:").unwrap();
    for n in 3..=n_max {
        writeln!(out, "  n = {n}: {}", oracle.count_cyclic_in_class(&s3, n)?).unwrap();
    }

    for target in [
        Target::Bijection,
        Target::Refined,
        Target::Lemmas,
        Target::Theorems,
    ] {
        let report = verify::run(target, n_max, &oracle)?;
        let documented = report
            .records
            .iter()
            .filter(|r| r.known_discrepancy && !r.is_match())
            .count();
        writeln!(
            out,
            "{}: {} records, {} failures, {} documented discrepancies",
            target.as_str(),
            report.records.len(),
            report.failures().count(),
            documented
        )
        .unwrap();
        for r in report.records.iter().filter(|r| !r.is_match()) {
            writeln!(
                out,
                "  {} n = {}: {} vs {} ({})",
                r.claim,
                r.params.n,
                r.left,
                r.right,
                r.note.as_deref().unwrap_or("undocumented")
            )
            .unwrap();
        }
    }

    match oracle.count_cyclic_in_class(&s3, oracle.budget.max_n + 1) {
        Err(e) => writeln!(out, "over budget: {e}").unwrap(),
        Ok(_) => unreachable!("the budget refuses this"),
    }
    Ok(out)
}

fn main() -> gridcycles::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    print!("{}", run_example(n_max)?);
    Ok(())
}
