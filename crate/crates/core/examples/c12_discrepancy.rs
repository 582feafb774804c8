// The c_1 / c_2 expressions next to what they actually count: the whole
// class, and the cycles with exactly two descents (c_1) or ascents (c_2).
//
//     cargo run --example c12_discrepancy -- 8

use std::fmt::Write;

use gridcycles::closedforms::{c, FormulaVariant};
use gridcycles::oracle::Oracle;
use gridcycles::Signature;

pub fn run_example(n_max: usize) -> gridcycles::Result<String> {
    let mut out = String::new();
    let oracle = Oracle::default();
    writeln!(out, "n\ti\tprinted\tclass\texactly two").unwrap();
    for n in 3..=n_max {
        let descents = oracle.descent_histogram(n)?;
        let ascents = oracle.ascent_histogram(n)?;
        for i in [1, 2] {
            let class = oracle.count_cyclic_in_class(&Signature::table(i)?, n)?;
            let two = if i == 1 { &descents[2] } else { &ascents[2] };
            let printed = c(i, n, FormulaVariant::AsPrinted)?;
            writeln!(out, "{n}\t{i}\t{printed}\t{class}\t{two}").unwrap();
        }
    }
    let records = oracle.c12_report(n_max)?;
    let failures = records.iter().filter(|r| r.is_failure()).count();
    writeln!(
        out,
        "{} records, {failures} undocumented mismatches",
        records.len()
    )
    .unwrap();
    Ok(out)
}

fn main() -> gridcycles::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    print!("{}", run_example(n_max)?);
    Ok(())
}
