// Permutations, the θ map to cycles, and σ-segmentations.
//
//     cargo run --example segmentations

use std::fmt::Write;

use gridcycles::perms::{in_class, is_cyclic, peaks, segmentations, theta, valleys};
use gridcycles::{Permutation, Signature};

pub fn run_example() -> gridcycles::Result<String> {
    let mut out = String::new();

    let seq: Permutation = "1342".parse()?;
    let cycle = theta(&seq);
    writeln!(out, "θ({seq}) = {cycle}, cyclic: {}", is_cyclic(&cycle)).unwrap();

    let pi: Permutation = "356894127".parse()?;
    writeln!(
        out,
        "π = {pi}: peaks {:?}, valleys {:?}",
        peaks(&pi),
        valleys(&pi)
    )
    .unwrap();
    for text in ["+-+", "-+-", "+-", "++-"] {
        let sigma: Signature = text.parse()?;
        let segs = segmentations(&pi, &sigma);
        writeln!(
            out,
            "  {sigma}: in class {}, {} segmentations",
            in_class(&pi, &sigma),
            segs.len()
        )
        .unwrap();
        for s in segs {
            writeln!(out, "    {s}").unwrap();
        }
    }

    let n = 4;
    let unimodal: Signature = "+-".parse()?;
    let cyclic_unimodal: Vec<String> = permutations(n)
        .into_iter()
        .filter(|p| is_cyclic(p) && in_class(p, &unimodal))
        .map(|p| p.to_string())
        .collect();
    writeln!(
        out,
        "cyclic unimodal permutations of length {n}: {}",
        cyclic_unimodal.join(" ")
    )
    .unwrap();
    Ok(out)
}

/// All permutations of `1..=n` in lexicographic order.
fn permutations(n: usize) -> Vec<Permutation> {
    let mut entries: Vec<usize> = (1..=n).collect();
    let mut all = vec![Permutation::new(entries.clone()).unwrap()];
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| entries[i] < entries[i + 1])
        else {
            return all;
        };
        let j = (i + 1..n).rev().find(|&j| entries[j] > entries[i]).unwrap();
        entries.swap(i, j);
        entries[i + 1..].reverse();
        all.push(Permutation::new(entries.clone()).unwrap());
    }
}

fn main() -> gridcycles::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
