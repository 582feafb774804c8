//! Verification suites: every identity the crate relies on, instantiated
//! over a range of parameters and reported as [`VerificationRecord`]s.
//!
//! Suites that enumerate cycles use `3..=n_max` (capped by the oracle
//! budget; a capped run is flagged incomplete). Suites over words and
//! closed forms alone run over their own fixed ranges.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::ExactInt;
use crate::closedforms::{c, lambda_peak, lambda_total, FormulaVariant};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::perms::{
    in_class, peaks, segmentation_count, segmentations, valleys, Permutation, Signature,
};
use crate::record::{Method, RecordParams, VerificationRecord};
use crate::words::grouping::Grouped;
use crate::words::{count_l, count_l2_density, count_l_sigma, count_l_star};

/// Fixed ranges for the word-layer and closed-form identities.
pub const DENSITY_SYMMETRY_MAX_N: usize = 14;
pub const ADJACENT_PEAKS_MAX_N: usize = 12;
pub const PEAK_SYMMETRY_MAX_N: usize = 13;
pub const PEAK_ROW_SUM_MAX_N: usize = 12;
pub const HALF_COUNT_MAX_M: usize = 13;
pub const REVERSAL_MAX_N: usize = 14;
pub const WORD_GROUPING_MAX_N: usize = 12;
/// Largest `n` at which `Λ(n, i)` is compared with enumeration.
pub const PEAK_ORACLE_MAX_N: usize = 10;
/// Largest signature length for the class-reversal check.
pub const CLASS_REVERSAL_MAX_K: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Bijection,
    Refined,
    Lemmas,
    Theorems,
    C12Report,
    All,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Bijection => "bijection",
            Target::Refined => "refined",
            Target::Lemmas => "lemmas",
            Target::Theorems => "c3..c8",
            Target::C12Report => "c12_report",
            Target::All => "all",
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bijection" => Target::Bijection,
            "refined" => Target::Refined,
            "lemmas" => Target::Lemmas,
            "c3..c8" | "theorems" => Target::Theorems,
            "c12_report" | "c12-report" => Target::C12Report,
            "all" => Target::All,
            other => {
                return Err(Error::Parse(format!(
                    "unknown verification target {other:?}; expected bijection, refined, \
                     lemmas, c3..c8, c12_report or all"
                )))
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub target: Target,
    pub n_max: usize,
    /// Largest `n` actually enumerated.
    pub n_max_run: usize,
    pub complete: bool,
    pub records: Vec<VerificationRecord>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| r.is_failure())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

pub fn run(target: Target, n_max: usize, oracle: &Oracle) -> Result<VerifyReport> {
    let n_run = n_max.min(oracle.budget.max_n);
    let mut records = Vec::new();
    let wants = |t: Target| target == t || target == Target::All;
    if wants(Target::Bijection) {
        records.extend(bijection(n_run, oracle)?);
    }
    if wants(Target::Refined) {
        records.extend(refined(n_run, oracle)?);
    }
    if wants(Target::Lemmas) {
        records.extend(word_layer()?);
        records.extend(lemmas(n_run, oracle)?);
    }
    if wants(Target::Theorems) {
        records.extend(theorems(n_run, oracle)?);
        records.extend(segmentation_structure(n_run, oracle)?);
    }
    if wants(Target::C12Report) {
        records.extend(oracle.c12_report(n_run)?);
    }
    Ok(VerifyReport {
        target,
        n_max,
        n_max_run: n_run,
        complete: n_run == n_max,
        records,
    })
}

/// Signatures the aggregate bijection is checked on: the length-3 table and
/// all four of length 2.
pub fn bijection_signatures() -> Vec<Signature> {
    let mut sigs = Signature::table_all();
    sigs.extend(Signature::all_of_length(2));
    sigs
}

/// `Σ_{π ∈ C_n^σ} #segmentations(π) = L*_k(n; σ)` for `n` in `3..=n_max`.
pub fn bijection(n_max: usize, oracle: &Oracle) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for sigma in bijection_signatures() {
        for n in 3..=n_max {
            out.push(VerificationRecord::new(
                "bijection-aggregate",
                RecordParams::sigma(&sigma, n),
                (count_l_star(sigma.len(), n, &sigma)?, Method::Formula),
                (oracle.segmentation_sum(&sigma, n)?, Method::Oracle),
            ));
        }
    }
    Ok(out)
}

/// Evaluation-level bijection for every evaluation, `n` in `1..=n_max`.
pub fn refined(n_max: usize, oracle: &Oracle) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for sigma in Signature::table_all() {
        for n in 1..=n_max {
            out.extend(oracle.refined_bijection_sweep(&sigma, n)?);
        }
    }
    Ok(out)
}

/// Formula and generation counts against grouping of all words,
/// `k ∈ {2, 3}`, `n <= 12`.
pub fn word_layer() -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for k in 2..=3 {
        let sigmas = Signature::all_of_length(k);
        for n in 1..=WORD_GROUPING_MAX_N {
            let grouped = Grouped::new(k, n);
            let params = RecordParams::n(n).with_k(k);
            out.push(VerificationRecord::new(
                "word-count-L",
                params.clone(),
                (count_l(k, n), Method::Formula),
                (grouped.primitive(), Method::Oracle),
            ));
            if k == 2 {
                for i in 0..=n {
                    out.push(VerificationRecord::new(
                        "word-count-L2-density",
                        params.clone().with_i(i),
                        (count_l2_density(n, i)?, Method::Formula),
                        (grouped.density(i), Method::Oracle),
                    ));
                }
            }
            for sigma in &sigmas {
                out.push(VerificationRecord::new(
                    "word-count-L-sigma",
                    RecordParams::sigma(sigma, n).with_k(k),
                    (count_l_sigma(k, n, sigma)?, Method::Formula),
                    (grouped.sigma(sigma), Method::Oracle),
                ));
                out.push(VerificationRecord::new(
                    "word-count-L-star",
                    RecordParams::sigma(sigma, n).with_k(k),
                    (count_l_star(k, n, sigma)?, Method::Formula),
                    (grouped.star(sigma), Method::Oracle),
                ));
            }
        }
    }
    Ok(out)
}

/// The density, peak and half-count lemmas, plus the class-level reversal
/// symmetry and the `Λ(n, i)` closed form against enumeration.
pub fn lemmas(n_max: usize, oracle: &Oracle) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    let f = |v: ExactInt| (v, Method::Formula);

    for n in 1..=DENSITY_SYMMETRY_MAX_N {
        for i in 0..=n {
            out.push(VerificationRecord::new(
                "lemma-density-symmetry",
                RecordParams::n(n).with_i(i),
                f(count_l2_density(n, i)?),
                f(count_l2_density(n, n - i)?),
            ));
        }
    }

    for n in 1..=ADJACENT_PEAKS_MAX_N {
        for i in 1..n {
            let mut rhs = count_l2_density(n, i)?;
            if n % 2 == 0 && (n + i) % 4 == 2 {
                rhs += count_l2_density(n / 2, i / 2)?;
            }
            out.push(VerificationRecord::new(
                "lemma-adjacent-peaks",
                RecordParams::n(n).with_i(i),
                f(lambda_peak(n, i)? + lambda_peak(n, i + 1)?),
                f(rhs),
            ));
        }
    }

    for n in (1..=PEAK_SYMMETRY_MAX_N).filter(|n| n % 4 != 2) {
        for i in 1..=n {
            out.push(VerificationRecord::new(
                "lemma-peak-symmetry",
                RecordParams::n(n).with_i(i),
                f(lambda_peak(n, i)?),
                f(lambda_peak(n, n - i + 1)?),
            ));
        }
    }

    for n in 3..=n_max.min(PEAK_ORACLE_MAX_N) {
        for i in 1..=n {
            out.push(VerificationRecord::new(
                "lemma-peak-closed-form",
                RecordParams::n(n).with_i(i),
                f(lambda_peak(n, i)?),
                (oracle.count_unimodal_peak(n, i)?, Method::Oracle),
            ));
        }
    }

    for n in 3..=PEAK_ROW_SUM_MAX_N {
        let row = (1..=n).try_fold(ExactInt::from(0), |acc, i| {
            lambda_peak(n, i).map(|v| acc + v)
        })?;
        out.push(VerificationRecord::new(
            "peak-row-sum",
            RecordParams::n(n),
            f(row),
            f(lambda_total(n)?),
        ));
    }

    let unimodal: Signature = "+-".parse().unwrap();
    for n in 1..=PEAK_ROW_SUM_MAX_N {
        out.push(VerificationRecord::new(
            "lambda-half-l2-star",
            RecordParams::sigma(&unimodal, n),
            f(lambda_total(n)? * 2),
            f(count_l_star(2, n, &unimodal)?),
        ));
    }
    for n in 3..=n_max {
        out.push(VerificationRecord::new(
            "lambda-total-vs-class",
            RecordParams::sigma(&unimodal, n),
            f(lambda_total(n)?),
            (oracle.count_cyclic_in_class(&unimodal, n)?, Method::Oracle),
        ));
    }

    out.extend(half_count()?);

    for sigma in Signature::table_all() {
        for n in 1..=REVERSAL_MAX_N {
            out.push(VerificationRecord::new(
                "l-star-reversal",
                RecordParams::sigma(&sigma, n).with_other(&sigma.reverse()),
                f(count_l_star(3, n, &sigma)?),
                f(count_l_star(3, n, &sigma.reverse())?),
            ));
        }
    }

    for k in 2..=CLASS_REVERSAL_MAX_K {
        let sigmas = Signature::all_of_length(k);
        for n in 3..=n_max.min(8) {
            let counts = oracle.count_cyclic_in_classes(&sigmas, n)?;
            for (j, sigma) in sigmas.iter().enumerate() {
                let rev = sigma.reverse();
                if rev <= *sigma {
                    continue;
                }
                let r = sigmas.iter().position(|s| *s == rev).unwrap();
                out.push(VerificationRecord::new(
                    "class-reversal",
                    RecordParams::sigma(sigma, n).with_other(&rev).with_k(k),
                    (counts[j].clone(), Method::Oracle),
                    (counts[r].clone(), Method::Oracle),
                ));
            }
        }
    }
    Ok(out)
}

/// `2 · L_3(m; s3) = L_3(m)` for odd `m <= 13`.
///
/// The identity fails at `m = 1`; that record is marked as a known
/// discrepancy. The generation count is used on the left so that the fast
/// path in [`count_l_sigma`] is not checking itself.
pub fn half_count() -> Result<Vec<VerificationRecord>> {
    let s3 = Signature::table(3)?;
    let mut out = Vec::new();
    for m in (1..=HALF_COUNT_MAX_M).step_by(2) {
        let mut rec = VerificationRecord::new(
            "half-count",
            RecordParams::sigma(&s3, m),
            (
                crate::words::count_l_sigma_enumerated(3, m, &s3)? * 2,
                Method::Formula,
            ),
            (count_l(3, m), Method::Formula),
        );
        if m == 1 && !rec.is_match() {
            rec = rec.known_discrepancy(
                "holds for odd m >= 3 only: at m = 1 one of the three letters has odd o",
            );
        }
        out.push(rec);
    }
    Ok(out)
}

/// Closed forms `c_3..c_8` against enumeration, plus the corollary pairs.
pub fn theorems(n_max: usize, oracle: &Oracle) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    let table = Signature::table_all();
    for n in 3..=n_max {
        let counts = oracle.count_cyclic_in_classes(&table[2..], n)?;
        for (offset, count) in counts.into_iter().enumerate() {
            let index = offset + 3;
            out.push(VerificationRecord::new(
                format!("theorem-c{index}"),
                RecordParams::sigma(&table[index - 1], n).with_i(index),
                (c(index, n, FormulaVariant::AsPrinted)?, Method::Formula),
                (count, Method::Oracle),
            ));
        }
        for (a, b) in [(5, 7), (6, 8), (3, 4)] {
            out.push(VerificationRecord::new(
                format!("corollary-c{a}-c{b}"),
                RecordParams::sigma(&table[a - 1], n).with_other(&table[b - 1]),
                (c(a, n, FormulaVariant::AsPrinted)?, Method::Formula),
                (c(b, n, FormulaVariant::AsPrinted)?, Method::Formula),
            ));
        }
    }
    Ok(out)
}

/// Structural claims behind the closed forms, checked member by member:
/// the unique peak-before-valley pair in `s3`, the four `s3`
/// segmentations it determines, and the segmentation counts of `s5` / `s6`
/// members inside and outside the unimodal class.
pub fn segmentation_structure(n_max: usize, oracle: &Oracle) -> Result<Vec<VerificationRecord>> {
    let s3 = Signature::table(3)?;
    let s5 = Signature::table(5)?;
    let s6 = Signature::table(6)?;
    let unimodal: Signature = "+-".parse().unwrap();
    let mut out = Vec::new();
    let o = |v: usize| (ExactInt::from(v), Method::Oracle);

    for n in 3..=n_max.min(9) {
        let cycles: Vec<Permutation> = oracle.enumerate_cycles(n)?.collect();

        let members3: Vec<&Permutation> = cycles.iter().filter(|p| in_class(p, &s3)).collect();
        let unique_pair = members3
            .iter()
            .filter(|p| peak_valley_pairs(p).len() == 1)
            .count();
        out.push(VerificationRecord::new(
            "s3-unique-peak-valley-pair",
            RecordParams::sigma(&s3, n),
            o(unique_pair),
            o(members3.len()),
        ));
        let listed = members3
            .iter()
            .filter(|p| {
                let pairs = peak_valley_pairs(p);
                let Some(&(i, j)) = pairs.first() else {
                    return false;
                };
                let want: BTreeSet<Vec<usize>> = [(i - 1, j - 1), (i - 1, j), (i, j - 1), (i, j)]
                    .iter()
                    .map(|&(a, b)| vec![0, a, b, n])
                    .collect();
                let got: BTreeSet<Vec<usize>> = segmentations(p, &s3)
                    .iter()
                    .map(|s| s.boundaries().to_vec())
                    .collect();
                got == want
            })
            .count();
        out.push(VerificationRecord::new(
            "s3-four-segmentations",
            RecordParams::sigma(&s3, n),
            o(listed),
            o(members3.len()),
        ));

        let unimodal_members: Vec<(&Permutation, usize)> = cycles
            .iter()
            .filter(|p| in_class(p, &unimodal))
            .map(|p| (p, p.entries().iter().position(|&v| v == n).unwrap() + 1))
            .collect();

        let outside5: Vec<&Permutation> = cycles
            .iter()
            .filter(|p| in_class(p, &s5) && !in_class(p, &unimodal))
            .collect();
        out.push(VerificationRecord::new(
            "s5-two-segmentations-outside-unimodal",
            RecordParams::sigma(&s5, n),
            o(outside5
                .iter()
                .filter(|p| segmentation_count(p, &s5) == 2)
                .count()),
            o(outside5.len()),
        ));
        let outside6: Vec<&Permutation> = cycles
            .iter()
            .filter(|p| in_class(p, &s6) && !in_class(p, &unimodal))
            .collect();
        out.push(VerificationRecord::new(
            "s6-two-segmentations-outside-unimodal",
            RecordParams::sigma(&s6, n),
            o(outside6
                .iter()
                .filter(|p| segmentation_count(p, &s6) == 2)
                .count()),
            o(outside6.len()),
        ));

        let matching = |sigma: &Signature, expected: &dyn Fn(usize) -> usize| {
            unimodal_members
                .iter()
                .filter(|(p, i)| segmentation_count(p, sigma) as usize == expected(*i))
                .count()
        };
        out.push(VerificationRecord::new(
            "s5-unimodal-segmentations-2(i+1)",
            RecordParams::sigma(&s5, n),
            o(matching(&s5, &|i| 2 * (i + 1))),
            o(unimodal_members.len()),
        ));
        out.push(VerificationRecord::new(
            "s6-unimodal-segmentations-2(n-i+2)",
            RecordParams::sigma(&s6, n),
            o(matching(&s6, &|i| 2 * (n - i + 2))),
            o(unimodal_members.len()),
        ));
        let mut printed = VerificationRecord::new(
            "s6-unimodal-segmentations-2(n+i+2)",
            RecordParams::sigma(&s6, n),
            o(matching(&s6, &|i| 2 * (n + i + 2))),
            o(unimodal_members.len()),
        );
        if !printed.is_match() {
            printed = printed.known_discrepancy(
                "the listed s6 segmentations of a unimodal cycle number 2(n-i+2), not 2(n+i+2)",
            );
        }
        out.push(printed);
    }
    Ok(out)
}

/// Pairs `i < j` with `i` a peak and `j` a valley.
fn peak_valley_pairs(p: &Permutation) -> Vec<(usize, usize)> {
    let vs = valleys(p);
    peaks(p)
        .into_iter()
        .flat_map(|i| vs.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_is_clean() {
        let oracle = Oracle::default();
        let report = run(Target::All, 6, &oracle).unwrap();
        assert!(report.complete);
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        // documented mismatches are present and annotated
        assert!(report
            .records
            .iter()
            .any(|r| r.known_discrepancy && r.claim == "c1-as-printed-vs-class"));
        assert!(report
            .records
            .iter()
            .any(|r| r.known_discrepancy && r.claim == "s6-unimodal-segmentations-2(n+i+2)"));
    }

    #[test]
    fn budget_caps_the_run() {
        let oracle = Oracle::new(crate::oracle::OracleBudget::default().with_max_n(5));
        let report = run(Target::Bijection, 7, &oracle).unwrap();
        assert!(!report.complete);
        assert_eq!(report.n_max_run, 5);
        assert!(report.records.iter().all(|r| r.params.n <= 5));
    }

    #[test]
    fn target_names() {
        for t in [
            Target::Bijection,
            Target::Refined,
            Target::Lemmas,
            Target::Theorems,
            Target::C12Report,
            Target::All,
        ] {
            assert_eq!(t.as_str().parse::<Target>().unwrap(), t);
        }
        assert_eq!("theorems".parse::<Target>().unwrap(), Target::Theorems);
        assert_eq!("c12-report".parse::<Target>().unwrap(), Target::C12Report);
        assert!("c9".parse::<Target>().is_err());
    }

    #[test]
    fn peak_valley_pair_example() {
        let p: Permutation = "356894127".parse().unwrap();
        assert_eq!(peak_valley_pairs(&p), vec![(5, 7)]);
    }
}
