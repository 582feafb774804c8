//! Brute-force ground truth over all `n`-cycles.
//!
//! Cycles are produced as the image under [`theta`](crate::perms::theta) of
//! every sequence starting with `1`, with the tail in lexicographic order.
//! Sharding splits the work by the second entry of that sequence, so shards
//! never overlap and the merged result does not depend on the shard count.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::ExactInt;
use crate::closedforms::{c, FormulaVariant};
use crate::error::{Error, Result};
use crate::perms::{
    in_class_entries, segmentation_count_entries, segmentations, segments_match, theta_into,
    Permutation, Signature,
};
use crate::record::{Method, RecordParams, VerificationRecord};
use crate::words::{evaluation, generate_necklaces, NecklaceFilter};

pub use crate::perms::{ascent_count, descent_count};

/// Limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `n` whose `(n-1)!` cycles may be enumerated.
    pub max_n: usize,
    /// Number of disjoint partitions of the search space.
    pub parallel_shards: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 11,
            parallel_shards: std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1),
        }
    }
}

impl OracleBudget {
    pub fn with_shards(mut self, shards: usize) -> Self {
        self.parallel_shards = shards.max(1);
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("cycles need n >= 1".into()));
        }
        if n > self.max_n {
            return Err(Error::Budget {
                n,
                max_n: self.max_n,
                cycles: (1..n as u128).product(),
            });
        }
        Ok(())
    }
}

/// Steps `seq[fixed..]` through all its arrangements in lexicographic order,
/// starting from the arrangement it holds.
fn next_tail(seq: &mut [usize], fixed: usize) -> bool {
    let tail = &mut seq[fixed..];
    let len = tail.len();
    if len < 2 {
        return false;
    }
    let mut i = len - 1;
    while i > 0 && tail[i - 1] >= tail[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = len - 1;
    while tail[j] <= tail[i - 1] {
        j -= 1;
    }
    tail.swap(i - 1, j);
    tail[i..].reverse();
    true
}

/// Every `n`-cycle, once each, in a fixed order.
pub struct Cycles {
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for Cycles {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut out = vec![0; self.seq.len()];
        theta_into(&self.seq, &mut out);
        self.done = !next_tail(&mut self.seq, 1);
        Some(Permutation::from_entries_unchecked(out))
    }
}

/// Exhaustive enumeration under a budget.
#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub budget: OracleBudget,
}

impl Oracle {
    pub fn new(budget: OracleBudget) -> Self {
        Oracle { budget }
    }

    pub fn enumerate_cycles(&self, n: usize) -> Result<Cycles> {
        self.budget.check(n)?;
        Ok(Cycles {
            seq: (1..=n).collect(),
            done: false,
        })
    }

    /// Folds `visit` over every `n`-cycle (one-line entries) across shards.
    ///
    /// Shard `s` owns the sequences whose second entry `v` has
    /// `(v - 2) % shards == s`. Shard results are merged in shard order.
    pub fn fold_cycles<A, I, V, M>(&self, n: usize, init: I, visit: V, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync,
        V: Fn(&mut A, &[usize]) + Sync,
        M: Fn(A, A) -> A,
    {
        self.budget.check(n)?;
        if n == 1 {
            let mut acc = init();
            visit(&mut acc, &[1]);
            return Ok(acc);
        }
        let shards = self.budget.parallel_shards.max(1);
        let run_shard = |shard: usize| {
            let mut acc = init();
            let mut out = vec![0; n];
            for second in (2..=n).filter(|v| (v - 2) % shards == shard) {
                let mut seq = Vec::with_capacity(n);
                seq.push(1);
                seq.push(second);
                seq.extend((2..=n).filter(|&v| v != second));
                loop {
                    theta_into(&seq, &mut out);
                    visit(&mut acc, &out);
                    if !next_tail(&mut seq, 2) {
                        break;
                    }
                }
            }
            acc
        };
        let parts: Vec<A> = if shards == 1 {
            vec![run_shard(0)]
        } else {
            (0..shards).into_par_iter().map(run_shard).collect()
        };
        let mut parts = parts.into_iter();
        let first = parts.next().unwrap_or_else(&init);
        Ok(parts.fold(first, merge))
    }

    fn sum_over_cycles(
        &self,
        n: usize,
        score: impl Fn(&[usize]) -> u64 + Sync,
    ) -> Result<ExactInt> {
        let total = self.fold_cycles(n, || 0u64, |acc, e| *acc += score(e), |a, b| a + b)?;
        Ok(total.into())
    }

    /// `|C_n^σ|`, for a signature of any length.
    pub fn count_cyclic_in_class(&self, sigma: &Signature, n: usize) -> Result<ExactInt> {
        self.sum_over_cycles(n, |e| u64::from(in_class_entries(e, sigma)))
    }

    /// `|C_n^σ|` for several signatures in a single pass.
    pub fn count_cyclic_in_classes(&self, sigmas: &[Signature], n: usize) -> Result<Vec<ExactInt>> {
        let m = sigmas.len();
        let counts = self.fold_cycles(
            n,
            || vec![0u64; m],
            |acc, e| {
                for (slot, sigma) in acc.iter_mut().zip(sigmas) {
                    *slot += u64::from(in_class_entries(e, sigma));
                }
            },
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        Ok(counts.into_iter().map(ExactInt::from).collect())
    }

    /// Total number of `(cycle, σ-segmentation)` pairs.
    pub fn segmentation_sum(&self, sigma: &Signature, n: usize) -> Result<ExactInt> {
        self.sum_over_cycles(n, |e| segmentation_count_entries(e, sigma))
    }

    /// Compares, for one evaluation `(a_0, ..., a_{k-1})`, the necklaces of
    /// `N_k(n; σ)` with that evaluation against the cycles admitting the
    /// segmentation with boundaries at the partial sums.
    pub fn refined_bijection_check(
        &self,
        sigma: &Signature,
        n: usize,
        eval: &[usize],
    ) -> Result<VerificationRecord> {
        let k = sigma.len();
        if eval.len() != k || eval.iter().sum::<usize>() != n {
            return Err(Error::Domain(format!(
                "evaluation {eval:?} must have {k} parts summing to {n}"
            )));
        }
        self.budget.check(n)?;
        let left = generate_necklaces(k, n, NecklaceFilter::InNSigma(sigma.clone()))?
            .filter(|neck| evaluation(neck.canonical()) == eval)
            .count();
        let mut bounds = vec![0];
        for &a in eval {
            bounds.push(bounds.last().unwrap() + a);
        }
        let right = self.sum_over_cycles(n, |e| u64::from(segments_match(e, &bounds, sigma)))?;
        Ok(VerificationRecord::new(
            "refined-bijection",
            RecordParams::sigma(sigma, n).with_evaluation(eval.to_vec()),
            (left.into(), Method::Formula),
            (right, Method::Oracle),
        ))
    }

    /// [`refined_bijection_check`](Self::refined_bijection_check) for every
    /// evaluation at once, in lexicographic order of the evaluation.
    pub fn refined_bijection_sweep(
        &self,
        sigma: &Signature,
        n: usize,
    ) -> Result<Vec<VerificationRecord>> {
        let k = sigma.len();
        self.budget.check(n)?;
        let mut left: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for neck in generate_necklaces(k, n, NecklaceFilter::InNSigma(sigma.clone()))? {
            *left.entry(evaluation(neck.canonical())).or_default() += 1;
        }
        let right = self.fold_cycles(
            n,
            BTreeMap::<Vec<usize>, u64>::new,
            |acc, e| {
                let pi = Permutation::from_entries_unchecked(e.to_vec());
                for seg in segmentations(&pi, sigma) {
                    *acc.entry(seg.lengths()).or_default() += 1;
                }
            },
            |mut a, b| {
                for (key, v) in b {
                    *a.entry(key).or_default() += v;
                }
                a
            },
        )?;
        Ok(compositions(n, k)
            .into_iter()
            .map(|eval| {
                let l = left.get(&eval).copied().unwrap_or(0);
                let r = right.get(&eval).copied().unwrap_or(0);
                VerificationRecord::new(
                    "refined-bijection",
                    RecordParams::sigma(sigma, n).with_evaluation(eval),
                    (l.into(), Method::Formula),
                    (r.into(), Method::Oracle),
                )
            })
            .collect())
    }

    /// `Λ(n, i)` by enumeration: cyclic unimodal permutations with `π_i = n`.
    pub fn count_unimodal_peak(&self, n: usize, i: usize) -> Result<ExactInt> {
        if i == 0 || i > n {
            return Err(Error::Domain(format!("peak position {i} outside 1..={n}")));
        }
        let unimodal: Signature = "+-".parse().unwrap();
        self.sum_over_cycles(n, |e| {
            u64::from(e[i - 1] == n && in_class_entries(e, &unimodal))
        })
    }

    /// Number of `n`-cycles by descent count, indexed `0..n`.
    pub fn descent_histogram(&self, n: usize) -> Result<Vec<ExactInt>> {
        self.statistic_histogram(n, |e| e.windows(2).filter(|w| w[0] > w[1]).count())
    }

    /// Number of `n`-cycles by ascent count, indexed `0..n`.
    pub fn ascent_histogram(&self, n: usize) -> Result<Vec<ExactInt>> {
        self.statistic_histogram(n, |e| e.windows(2).filter(|w| w[0] < w[1]).count())
    }

    fn statistic_histogram(
        &self,
        n: usize,
        stat: impl Fn(&[usize]) -> usize + Sync,
    ) -> Result<Vec<ExactInt>> {
        let hist = self.fold_cycles(
            n,
            || vec![0u64; n],
            |acc, e| acc[stat(e)] += 1,
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        )?;
        Ok(hist.into_iter().map(ExactInt::from).collect())
    }

    /// The `c_1` / `c_2` comparison for each `n` in `3..=n_max`.
    ///
    /// Four records per `n`: the printed expression against the class count
    /// (a documented discrepancy when it mismatches), and the same expression
    /// against cycles with exactly two descents (`c_1`) or ascents (`c_2`).
    pub fn c12_report(&self, n_max: usize) -> Result<Vec<VerificationRecord>> {
        let mut out = Vec::new();
        for n in 3..=n_max {
            let descents = self.descent_histogram(n)?;
            let ascents = self.ascent_histogram(n)?;
            for index in [1, 2] {
                let sigma = Signature::table(index)?;
                let printed = c(index, n, FormulaVariant::AsPrinted)?;
                let class = self.count_cyclic_in_class(&sigma, n)?;
                let mut rec = VerificationRecord::new(
                    format!("c{index}-as-printed-vs-class"),
                    RecordParams::sigma(&sigma, n).with_i(index),
                    (printed.clone(), Method::Formula),
                    (class, Method::Oracle),
                );
                if !rec.is_match() {
                    rec = rec.known_discrepancy(
                        "the printed expression does not count the whole class; \
                         compare the exactly-two record",
                    );
                }
                out.push(rec);

                let reading = c(index, n, FormulaVariant::ExactDescentsInterpretation)?;
                let (stat, hist) = if index == 1 {
                    ("descents", &descents)
                } else {
                    ("ascents", &ascents)
                };
                let two = hist.get(2).cloned().unwrap_or_default();
                out.push(
                    VerificationRecord::new(
                        format!("c{index}-printed-vs-exactly-two-{stat}"),
                        RecordParams::sigma(&sigma, n).with_i(index),
                        (reading, Method::Formula),
                        (two, Method::Oracle),
                    )
                    .with_note(format!("cycles with exactly two {stat}")),
                );
            }
        }
        Ok(out)
    }
}

/// Weak compositions of `n` into `k` parts, lexicographically.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=n {
            prefix.push(a);
            go(n - a, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{in_class, in_class_exhaustive, is_cyclic};
    use std::collections::BTreeSet;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn oracle() -> Oracle {
        Oracle::new(OracleBudget::default().with_shards(3))
    }

    fn strings(n: usize) -> Vec<String> {
        oracle()
            .enumerate_cycles(n)
            .unwrap()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(strings(3), ["231", "312"]);
        let four: BTreeSet<String> = strings(4).into_iter().collect();
        let want: BTreeSet<String> = ["2341", "2413", "3421", "3142", "4312", "4123"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(four, want);
        assert_eq!(strings(1), ["1"]);
        assert_eq!(strings(2), ["21"]);
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        for n in 1..=7 {
            let all: Vec<Permutation> = oracle().enumerate_cycles(n).unwrap().collect();
            let distinct: BTreeSet<&Permutation> = all.iter().collect();
            let fact: usize = (1..n).product();
            assert_eq!(all.len(), fact);
            assert_eq!(distinct.len(), fact);
            assert!(all.iter().all(is_cyclic));
        }
    }

    #[test]
    fn budget_refusal() {
        let o = Oracle::new(OracleBudget::default().with_max_n(6));
        match o.enumerate_cycles(7) {
            Err(Error::Budget { n, max_n, cycles }) => {
                assert_eq!((n, max_n, cycles), (7, 6, 720));
            }
            _ => panic!("expected a budget refusal"),
        }
        assert!(o.count_cyclic_in_class(&sig("+-+"), 7).is_err());
        assert!(o.enumerate_cycles(0).is_err());
    }

    #[test]
    fn class_count_examples() {
        let o = oracle();
        assert_eq!(o.count_cyclic_in_class(&sig("+++"), 4).unwrap(), 6.into());
        assert_eq!(o.count_cyclic_in_class(&sig("+-+"), 4).unwrap(), 5.into());
        assert_eq!(o.count_cyclic_in_class(&sig("---"), 3).unwrap(), 2.into());
        assert_eq!(o.count_cyclic_in_class(&sig("+-"), 4).unwrap(), 2.into());
    }

    #[test]
    fn batched_counts_match_single() {
        let o = oracle();
        let sigmas = Signature::table_all();
        let batched = o.count_cyclic_in_classes(&sigmas, 6).unwrap();
        for (sigma, b) in sigmas.iter().zip(batched) {
            assert_eq!(o.count_cyclic_in_class(sigma, 6).unwrap(), b);
        }
    }

    #[test]
    fn fast_membership_agrees_with_exhaustive_on_cycles() {
        let o = oracle();
        for n in 1..=7 {
            for pi in o.enumerate_cycles(n).unwrap() {
                for k in 2..=4 {
                    for sigma in Signature::all_of_length(k) {
                        assert_eq!(in_class(&pi, &sigma), in_class_exhaustive(&pi, &sigma));
                    }
                }
            }
        }
    }

    #[test]
    fn segmentation_sum_examples() {
        let o = oracle();
        assert_eq!(o.segmentation_sum(&sig("+-+"), 3).unwrap(), 8.into());
        assert_eq!(o.segmentation_sum(&sig("+-+"), 4).unwrap(), 20.into());
        assert_eq!(o.segmentation_sum(&sig("+-"), 4).unwrap(), 4.into());
    }

    #[test]
    fn refined_examples() {
        let o = oracle();
        let r = o.refined_bijection_check(&sig("+-"), 4, &[2, 2]).unwrap();
        assert_eq!((r.left.clone(), r.right.clone()), (2.into(), 2.into()));
        assert!(r.is_match());
        let r = o.refined_bijection_check(&sig("+-"), 3, &[3, 0]).unwrap();
        assert_eq!((r.left.clone(), r.right.clone()), (0.into(), 0.into()));
        let r = o
            .refined_bijection_check(&sig("+-+"), 3, &[1, 1, 1])
            .unwrap();
        assert!(r.is_match());
        assert!(o.refined_bijection_check(&sig("+-+"), 3, &[1, 1]).is_err());
        assert!(o
            .refined_bijection_check(&sig("+-+"), 3, &[1, 1, 2])
            .is_err());
    }

    #[test]
    fn sweep_agrees_with_single_checks() {
        let o = oracle();
        for sigma in ["+-+", "++-", "--"] {
            let sigma = sig(sigma);
            for n in 3..=6 {
                for rec in o.refined_bijection_sweep(&sigma, n).unwrap() {
                    let eval = rec.params.evaluation.clone().unwrap();
                    let single = o.refined_bijection_check(&sigma, n, &eval).unwrap();
                    assert_eq!(rec, single);
                }
            }
        }
    }

    #[test]
    fn peak_oracle_examples() {
        let o = oracle();
        assert_eq!(o.count_unimodal_peak(4, 2).unwrap(), 1.into());
        assert_eq!(o.count_unimodal_peak(4, 3).unwrap(), 1.into());
        for n in 3..=8 {
            assert_eq!(o.count_unimodal_peak(n, 1).unwrap(), 0.into());
        }
        // the π_i = n reading at n = 2: 21 is cyclic and unimodal
        assert_eq!(o.count_unimodal_peak(2, 1).unwrap(), 1.into());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(descent_count(&"2341".parse().unwrap()), 1);
        assert_eq!(descent_count(&"4312".parse().unwrap()), 2);
        assert_eq!(descent_count(&Permutation::identity(6)), 0);
        assert_eq!(ascent_count(&Permutation::identity(6)), 5);
        let hist = oracle().descent_histogram(4).unwrap();
        assert_eq!(hist, vec![0.into(), 3.into(), 3.into(), 0.into()]);
    }

    #[test]
    fn c12_report_anchors() {
        let recs = oracle().c12_report(4).unwrap();
        let find = |claim: &str, n: usize| {
            recs.iter()
                .find(|r| r.claim == claim && r.params.n == n)
                .unwrap()
                .clone()
        };
        let printed = find("c1-as-printed-vs-class", 4);
        assert_eq!(
            (printed.left.clone(), printed.right.clone()),
            (3.into(), 6.into())
        );
        assert!(printed.known_discrepancy && !printed.is_failure());
        let two = find("c1-printed-vs-exactly-two-descents", 4);
        assert_eq!(two.right, 3.into());
        assert!(two.is_match());
        let c2 = find("c2-as-printed-vs-class", 3);
        assert_eq!((c2.left.clone(), c2.right.clone()), (0.into(), 2.into()));
        assert!(recs.iter().all(|r| !r.is_failure()));
    }

    #[test]
    fn shard_count_does_not_change_results() {
        for shards in [1, 2, 4, 7, 13] {
            let o = Oracle::new(OracleBudget::default().with_shards(shards));
            // (3^7 - 3) / 7 / 4 = 78
            assert_eq!(o.count_cyclic_in_class(&sig("+-+"), 7).unwrap(), 78.into());
            assert_eq!(
                o.segmentation_sum(&sig("++-"), 7).unwrap(),
                crate::words::count_l_star(3, 7, &sig("++-")).unwrap()
            );
        }
    }

    #[test]
    fn composition_listing() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(8, 3).len(), 45);
    }
}
