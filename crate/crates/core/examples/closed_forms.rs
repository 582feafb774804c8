// The closed forms c_1..c_8 for the eight length-3 classes, and the
// unimodal counts Λ(n, i) they are built from.
//
//     cargo run --example closed_forms

use std::fmt::Write;

use gridcycles::closedforms::{c, lambda_peak, lambda_total, FormulaVariant};
use gridcycles::Signature;

pub fn run_example() -> gridcycles::Result<String> {
    let mut out = String::new();
    let header: Vec<String> = Signature::table_all()
        .iter()
        .map(|s| format!("{}={s}", s.label()))
        .collect();
    writeln!(out, "n\t{}", header.join("\t")).unwrap();
    for n in 3..=14 {
        let row: Vec<String> = (1..=8)
            .map(|i| c(i, n, FormulaVariant::AsPrinted).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        writeln!(out, "{n}\t{}", row.join("\t")).unwrap();
    }

    for n in [4, 7, 8] {
        let row: Vec<String> = (1..=n)
            .map(|i| lambda_peak(n, i).map(|v| v.to_string()))
            .collect::<Result<_, _>>()?;
        writeln!(
            out,
            "Λ({n}) = {}, Λ({n}, i) = {}",
            lambda_total(n)?,
            row.join(" ")
        )
        .unwrap();
    }

    // c_3 at n = 60 is far beyond enumeration and beyond u64
    writeln!(out, "c_3(60) = {}", c(3, 60, FormulaVariant::AsPrinted)?).unwrap();

    match c(5, 2, FormulaVariant::AsPrinted) {
        Err(e) => writeln!(out, "c_5(2): {e}").unwrap(),
        Ok(v) => writeln!(out, "c_5(2) = {v}").unwrap(),
    }
    Ok(out)
}

fn main() -> gridcycles::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
