//! c-Wilf and weak c-Wilf equivalence of signatures, plus the experiments
//! on complementary and alternating signatures.
//!
//! Two signatures are c-Wilf-equivalent when their classes hold equally many
//! `n`-cycles for every `n`, and weakly so when this holds for every
//! `n ≢ 2 (mod 4)`. Everything here is checked over an explicit finite range
//! starting at `n = 3`, which every report states.

use serde::Serialize;

use crate::arith::ExactInt;
use crate::closedforms::{c, FormulaVariant};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::perms::Signature;
use crate::record::{serialize_exact, Method, RecordParams, VerificationRecord};

pub const N_MIN: usize = 3;

/// Source of the cycle counts being compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Counter {
    /// Closed forms for `s3..s8`; `s1` and `s2` always fall back to the oracle.
    Formula,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub n: usize,
    #[serde(serialize_with = "serialize_exact")]
    pub value: ExactInt,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountSequence {
    pub signature: Signature,
    pub label: String,
    pub terms: Vec<Term>,
}

impl CountSequence {
    fn values(&self, keep: impl Fn(usize) -> bool) -> Vec<&ExactInt> {
        self.terms
            .iter()
            .filter(|t| keep(t.n))
            .map(|t| &t.value)
            .collect()
    }
}

/// First `n` at which two count sequences differ, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairComparison {
    pub first: Signature,
    pub second: Signature,
    pub first_disagreement: Option<usize>,
    /// Same, ignoring `n ≡ 2 (mod 4)`.
    pub first_weak_disagreement: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n_min: usize,
    pub n_max: usize,
    pub counter: Counter,
    pub sequences: Vec<CountSequence>,
    pub full_classes: Vec<Vec<Signature>>,
    pub weak_classes: Vec<Vec<Signature>>,
    pub pairs: Vec<PairComparison>,
}

impl EquivalenceReport {
    /// Classes as table labels (`s3`) where possible, for display.
    pub fn labelled(classes: &[Vec<Signature>]) -> Vec<Vec<String>> {
        classes
            .iter()
            .map(|class| class.iter().map(Signature::label).collect())
            .collect()
    }
}

fn is_weak_n(n: usize) -> bool {
    n % 4 != 2
}

/// Groups indices by equal keys, classes in order of first appearance.
fn partition<K: PartialEq>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, key) in keys.iter().enumerate() {
        match classes.iter_mut().find(|c| keys[c[0]] == *key) {
            Some(class) => class.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

fn count_sequences(
    signatures: &[Signature],
    n_max: usize,
    counter: Counter,
    oracle: &Oracle,
) -> Result<Vec<CountSequence>> {
    let mut seqs: Vec<CountSequence> = signatures
        .iter()
        .map(|s| CountSequence {
            signature: s.clone(),
            label: s.label(),
            terms: Vec::new(),
        })
        .collect();
    if counter == Counter::Formula {
        if let Some(bad) = signatures.iter().find(|s| s.table_index().is_none()) {
            return Err(Error::Domain(format!(
                "the formula counter covers the eight length-3 signatures only, not {bad}"
            )));
        }
    }
    for n in N_MIN..=n_max {
        // closed forms where they exist and are trusted, oracle otherwise
        let by_oracle: Vec<usize> = (0..signatures.len())
            .filter(|&j| {
                counter == Counter::Oracle
                    || matches!(signatures[j].table_index(), Some(1) | Some(2))
            })
            .collect();
        let wanted: Vec<Signature> = by_oracle.iter().map(|&j| signatures[j].clone()).collect();
        let mut oracle_counts = if wanted.is_empty() {
            Vec::new()
        } else {
            oracle.count_cyclic_in_classes(&wanted, n)?
        }
        .into_iter();
        for (j, seq) in seqs.iter_mut().enumerate() {
            let term = if by_oracle.contains(&j) {
                Term {
                    n,
                    value: oracle_counts.next().unwrap(),
                    method: Method::Oracle,
                }
            } else {
                let index = seq.signature.table_index().unwrap();
                Term {
                    n,
                    value: c(index, n, FormulaVariant::AsPrinted)?,
                    method: Method::Formula,
                }
            };
            seq.terms.push(term);
        }
    }
    Ok(seqs)
}

/// Partitions `signatures` by equality of their cycle counts over `3..=n_max`.
pub fn classify(
    signatures: &[Signature],
    n_max: usize,
    counter: Counter,
    oracle: &Oracle,
) -> Result<EquivalenceReport> {
    if n_max < N_MIN {
        return Err(Error::Domain(format!(
            "classification starts at n = {N_MIN}; n_max = {n_max} leaves nothing to compare"
        )));
    }
    let sequences = count_sequences(signatures, n_max, counter, oracle)?;
    let full_keys: Vec<Vec<&ExactInt>> = sequences.iter().map(|s| s.values(|_| true)).collect();
    let weak_keys: Vec<Vec<&ExactInt>> = sequences.iter().map(|s| s.values(is_weak_n)).collect();
    let to_sigs = |classes: Vec<Vec<usize>>| -> Vec<Vec<Signature>> {
        classes
            .into_iter()
            .map(|c| c.into_iter().map(|j| signatures[j].clone()).collect())
            .collect()
    };
    let mut pairs = Vec::new();
    for a in 0..sequences.len() {
        for b in a + 1..sequences.len() {
            let differs = |keep: fn(usize) -> bool| {
                sequences[a]
                    .terms
                    .iter()
                    .zip(&sequences[b].terms)
                    .find(|(x, y)| keep(x.n) && x.value != y.value)
                    .map(|(x, _)| x.n)
            };
            pairs.push(PairComparison {
                first: signatures[a].clone(),
                second: signatures[b].clone(),
                first_disagreement: differs(|_| true),
                first_weak_disagreement: differs(is_weak_n),
            });
        }
    }
    Ok(EquivalenceReport {
        n_min: N_MIN,
        n_max,
        counter,
        full_classes: to_sigs(partition(&full_keys)),
        weak_classes: to_sigs(partition(&weak_keys)),
        sequences,
        pairs,
    })
}

/// Outcome of one conjecture experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture: String,
    pub k_max: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// False when some `n` exceeded the oracle budget and was skipped.
    pub complete: bool,
    pub skipped_n: Vec<usize>,
    pub records: Vec<VerificationRecord>,
}

impl ConjectureReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.records.iter().filter(|r| !r.is_match())
    }
}

fn within_budget(oracle: &Oracle, ns: impl Iterator<Item = usize>) -> (Vec<usize>, Vec<usize>) {
    ns.partition(|&n| n <= oracle.budget.max_n)
}

/// Compares every signature of length `2..=k_max` with its complement at
/// each `n` in `3..=n_max` with `n ≢ 2 (mod 4)`.
pub fn conjecture_complement(
    k_max: usize,
    n_max: usize,
    oracle: &Oracle,
) -> Result<ConjectureReport> {
    let (ns, skipped_n) = within_budget(oracle, (N_MIN..=n_max).filter(|&n| is_weak_n(n)));
    let mut records = Vec::new();
    for k in 2..=k_max {
        let sigmas = Signature::all_of_length(k);
        for &n in &ns {
            let counts = oracle.count_cyclic_in_classes(&sigmas, n)?;
            let count_of =
                |s: &Signature| counts[sigmas.iter().position(|t| t == s).unwrap()].clone();
            for sigma in sigmas.iter().filter(|s| **s < s.complement()) {
                let comp = sigma.complement();
                records.push(VerificationRecord::new(
                    "complement-weak-equivalence",
                    RecordParams::sigma(sigma, n).with_other(&comp).with_k(k),
                    (count_of(sigma), Method::Oracle),
                    (count_of(&comp), Method::Oracle),
                ));
            }
        }
    }
    Ok(ConjectureReport {
        conjecture: "complement".into(),
        k_max,
        n_min: N_MIN,
        n_max,
        complete: skipped_n.is_empty(),
        skipped_n,
        records,
    })
}

/// Compares the two alternating signatures of each length `2..=k_max` at
/// every `n` in `3..=n_max`. Even lengths are reverses of each other and act
/// as a sanity check.
pub fn conjecture_alternating(
    k_max: usize,
    n_max: usize,
    oracle: &Oracle,
) -> Result<ConjectureReport> {
    let (ns, skipped_n) = within_budget(oracle, N_MIN..=n_max);
    let mut records = Vec::new();
    for k in 2..=k_max {
        let [up, down] = Signature::alternating(k)?;
        let pair = [up.clone(), down.clone()];
        for &n in &ns {
            let counts = oracle.count_cyclic_in_classes(&pair, n)?;
            let mut rec = VerificationRecord::new(
                "alternating-equivalence",
                RecordParams::sigma(&up, n).with_other(&down).with_k(k),
                (counts[0].clone(), Method::Oracle),
                (counts[1].clone(), Method::Oracle),
            );
            if k % 2 == 0 {
                rec = rec.with_note("even length: the two signatures are reverses");
            }
            records.push(rec);
        }
    }
    Ok(ConjectureReport {
        conjecture: "alternating".into(),
        k_max,
        n_min: N_MIN,
        n_max,
        complete: skipped_n.is_empty(),
        skipped_n,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::OracleBudget;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn labels(classes: &[Vec<Signature>]) -> Vec<Vec<String>> {
        EquivalenceReport::labelled(classes)
    }

    fn strs(v: &[&[&str]]) -> Vec<Vec<String>> {
        v.iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn partition_groups_in_order() {
        assert_eq!(
            partition(&[1, 2, 1, 3, 2]),
            vec![vec![0, 2], vec![1, 4], vec![3]]
        );
    }

    #[test]
    fn classify_table_signatures() {
        let oracle = Oracle::default();
        let report = classify(&Signature::table_all(), 8, Counter::Oracle, &oracle).unwrap();
        assert_eq!(
            labels(&report.full_classes),
            strs(&[
                &["s1"],
                &["s2"],
                &["s3", "s4"],
                &["s5", "s7"],
                &["s6", "s8"]
            ])
        );
        assert_eq!(
            labels(&report.weak_classes),
            strs(&[&["s1", "s2"], &["s3", "s4"], &["s5", "s6", "s7", "s8"]])
        );
        let formula = classify(&Signature::table_all(), 8, Counter::Formula, &oracle).unwrap();
        assert_eq!(formula.full_classes, report.full_classes);
        assert_eq!(formula.weak_classes, report.weak_classes);
        // s1 and s2 come from the oracle even under the formula counter
        assert!(formula.sequences[0]
            .terms
            .iter()
            .all(|t| t.method == Method::Oracle));
        assert!(formula.sequences[2]
            .terms
            .iter()
            .all(|t| t.method == Method::Formula));
        for (a, b) in formula.sequences.iter().zip(&report.sequences) {
            let va: Vec<_> = a.terms.iter().map(|t| &t.value).collect();
            let vb: Vec<_> = b.terms.iter().map(|t| &t.value).collect();
            assert_eq!(va, vb);
        }
    }

    #[test]
    fn five_and_six_differ_only_at_two_mod_four() {
        let oracle = Oracle::default();
        let report = classify(&[sig("s5"), sig("s6")], 9, Counter::Oracle, &oracle).unwrap();
        assert_eq!(report.weak_classes.len(), 1);
        let pair = &report.pairs[0];
        assert_eq!(pair.first_weak_disagreement, None);
        if let Some(n) = pair.first_disagreement {
            assert_eq!(n % 4, 2);
        }
    }

    #[test]
    fn three_and_four_always_agree() {
        let oracle = Oracle::default();
        let report = classify(&[sig("s3"), sig("s4")], 9, Counter::Oracle, &oracle).unwrap();
        assert_eq!(report.full_classes.len(), 1);
        assert_eq!(report.pairs[0].first_disagreement, None);
    }

    #[test]
    fn classify_errors() {
        let oracle = Oracle::new(OracleBudget::default().with_max_n(6));
        assert!(classify(&[sig("+-")], 5, Counter::Formula, &oracle).is_err());
        assert!(classify(&[sig("s3")], 2, Counter::Oracle, &oracle).is_err());
        assert!(matches!(
            classify(&[sig("s3")], 7, Counter::Oracle, &oracle),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn weak_partition_coarsens_full() {
        let oracle = Oracle::default();
        let sigs: Vec<Signature> = Signature::all_of_length(4);
        let report = classify(&sigs, 7, Counter::Oracle, &oracle).unwrap();
        for class in &report.full_classes {
            assert!(report
                .weak_classes
                .iter()
                .any(|w| class.iter().all(|s| w.contains(s))));
        }
        let covered: usize = report.weak_classes.iter().map(Vec::len).sum();
        assert_eq!(covered, sigs.len());
    }

    #[test]
    fn complement_experiment_small() {
        let oracle = Oracle::default();
        let report = conjecture_complement(3, 8, &oracle).unwrap();
        assert!(report.complete);
        assert_eq!(report.counterexamples().count(), 0);
        assert!(report.records.iter().all(|r| r.params.n % 4 != 2));
        let report = conjecture_complement(2, 8, &oracle).unwrap();
        assert_eq!(report.counterexamples().count(), 0);
    }

    #[test]
    fn complement_experiment_flags_budget() {
        let oracle = Oracle::new(OracleBudget::default().with_max_n(7));
        let report = conjecture_complement(2, 9, &oracle).unwrap();
        assert!(!report.complete);
        assert_eq!(report.skipped_n, vec![8, 9]);
    }

    #[test]
    fn alternating_small_lengths() {
        let oracle = Oracle::default();
        let report = conjecture_alternating(3, 8, &oracle).unwrap();
        assert_eq!(report.counterexamples().count(), 0);
        assert_eq!(report.records.len(), 2 * 6);
    }
}
