// Commands as library calls: one document rendered as JSON, CSV and plain
// text, served a second time from the on-disk cache.
//
//     cargo run --example documents

use std::fmt::Write;

use gridcycles::cli::{cmd_count, cmd_oeis, cmd_sequence, Cache, Context, CountMethod, Format};
use gridcycles::Signature;

pub fn run_example(cache_dir: &std::path::Path) -> gridcycles::Result<String> {
    let mut out = String::new();
    let ctx = Context {
        cache: Some(Cache::new(cache_dir)?),
        ..Context::default()
    };
    let s5: Signature = "s5".parse()?;

    let first = cmd_sequence(&ctx, &s5, 7, CountMethod::Both)?;
    for format in [Format::Csv, Format::Plain] {
        out.push_str(&first.document.render(format));
    }
    let again = cmd_sequence(&ctx, &s5, 7, CountMethod::Both)?;
    writeln!(
        out,
        "cached JSON identical: {}",
        first.document.to_json() == again.document.to_json()
    )
    .unwrap();

    let s1: Signature = "s1".parse()?;
    let count = cmd_count(&ctx, &s1, 5, CountMethod::Both)?;
    out.push_str(&count.document.to_json());

    let terms: Vec<String> = first
        .document
        .payload
        .rows
        .iter()
        .filter(|r| r["method"] == "formula")
        .map(|r| r["value"].to_string())
        .collect();
    let lookup = cmd_oeis(&ctx, &terms)?;
    out.push_str(&lookup.document.to_json());
    Ok(out)
}

fn main() -> gridcycles::Result<()> {
    let dir = std::env::temp_dir().join("gridcycles-example-cache");
    print!("{}", run_example(&dir)?);
    Ok(())
}
