// Necklaces and the counts built from them: L_k(n), L_2(n, i), L_k(n; σ)
// and the size of N_k(n; σ).
//
//     cargo run --example necklaces

use std::fmt::Write;

use gridcycles::words::{
    canonicalize, count_l, count_l2_density, count_l_sigma, count_l_star, generate_necklaces,
    o_sigma, NecklaceFilter,
};
use gridcycles::{Signature, Word};

pub fn run_example() -> gridcycles::Result<String> {
    let mut out = String::new();
    let s3: Signature = "s3".parse()?;

    writeln!(out, "binary necklaces of length 4:").unwrap();
    for neck in generate_necklaces(2, 4, NecklaceFilter::All)? {
        let tag = if neck.is_primitive() {
            "primitive"
        } else {
            "periodic"
        };
        writeln!(
            out,
            "  {} ({tag}, root length {})",
            neck.canonical(),
            neck.period_root_length()
        )
        .unwrap();
    }

    let w = Word::parse("0020112", 3)?;
    writeln!(
        out,
        "canonical rotation of {w}: {}",
        canonicalize(&w).canonical()
    )
    .unwrap();
    writeln!(out, "o_σ({w}) for σ = {s3}: {}", o_sigma(&s3, &w)?).unwrap();

    writeln!(out, "n\tL_2(n)\tL_3(n)\tL_3(n;{s3})\tL*_3(n;{s3})").unwrap();
    for n in 1..=10 {
        writeln!(
            out,
            "{n}\t{}\t{}\t{}\t{}",
            count_l(2, n),
            count_l(3, n),
            count_l_sigma(3, n, &s3)?,
            count_l_star(3, n, &s3)?
        )
        .unwrap();
    }

    let row: Vec<String> = (0..=8)
        .map(|i| count_l2_density(8, i).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    writeln!(out, "L_2(8, i) for i = 0..8: {}", row.join(" ")).unwrap();

    // exact integers do not overflow
    writeln!(out, "L_3(200) = {}", count_l(3, 200)).unwrap();
    Ok(out)
}

fn main() -> gridcycles::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
