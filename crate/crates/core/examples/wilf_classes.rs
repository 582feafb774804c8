// Groups the eight length-3 signatures by their cycle counts, fully and
// ignoring n ≡ 2 (mod 4).
//
//     cargo run --example wilf_classes -- 9

use std::fmt::Write;

use gridcycles::equivalence::{classify, Counter, EquivalenceReport};
use gridcycles::oracle::Oracle;
use gridcycles::Signature;

pub fn run_example(n_max: usize) -> gridcycles::Result<String> {
    let mut out = String::new();
    let oracle = Oracle::default();
    let report = classify(&Signature::table_all(), n_max, Counter::Oracle, &oracle)?;

    writeln!(out, "counts for n = {}..={}:", report.n_min, report.n_max).unwrap();
    for seq in &report.sequences {
        let values: Vec<String> = seq.terms.iter().map(|t| t.value.to_string()).collect();
        writeln!(
            out,
            "  {} {}: {}",
            seq.label,
            seq.signature,
            values.join(" ")
        )
        .unwrap();
    }
    let show = |classes: &[Vec<Signature>]| {
        EquivalenceReport::labelled(classes)
            .iter()
            .map(|c| format!("{{{}}}", c.join(",")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "full classes: {}", show(&report.full_classes)).unwrap();
    writeln!(out, "weak classes: {}", show(&report.weak_classes)).unwrap();
    for pair in report
        .pairs
        .iter()
        .filter(|p| p.first_weak_disagreement.is_none() && p.first_disagreement.is_some())
    {
        writeln!(
            out,
            "  {} and {} agree off n ≡ 2 (mod 4), first differ at n = {}",
            pair.first.label(),
            pair.second.label(),
            pair.first_disagreement.unwrap()
        )
        .unwrap();
    }

    let formula = classify(
        &Signature::table_all()[2..],
        n_max,
        Counter::Formula,
        &oracle,
    )?;
    let oracle_only = classify(
        &Signature::table_all()[2..],
        n_max,
        Counter::Oracle,
        &oracle,
    )?;
    writeln!(
        out,
        "formula and oracle partitions of s3..s8 agree: {}",
        formula.full_classes == oracle_only.full_classes
            && formula.weak_classes == oracle_only.weak_classes
    )
    .unwrap();
    Ok(out)
}

fn main() -> gridcycles::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    print!("{}", run_example(n_max)?);
    Ok(())
}
