//! Permutations in one-line notation, the cycle map, peaks and valleys, and
//! grid-class membership through segmentations.
//!
//! Positions are 1-based throughout. A segmentation of a length-`n`
//! permutation for a length-`k` signature is stored as the full boundary
//! sequence `e_0 = 0 <= e_1 <= ... <= e_k = n`; segment `i` covers positions
//! `e_i + 1 ..= e_{i+1}`. Segments of length 0 or 1 are both increasing and
//! decreasing.

mod signature;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use signature::{Sign, Signature, TABLE};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Domain("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Domain(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { entries })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        Permutation { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `π_i` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits for `n <= 9` (`268147953`), comma-separated otherwise.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let entries = if text.contains(',') {
            text.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {p:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The cyclic permutation whose cycle form is `(π_1, π_2, ..., π_n)`,
/// returned in one-line notation.
pub fn theta(pi: &Permutation) -> Permutation {
    Permutation {
        entries: theta_entries(&pi.entries),
    }
}

pub(crate) fn theta_entries(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let mut out = vec![0; n];
    theta_into(seq, &mut out);
    out
}

pub(crate) fn theta_into(seq: &[usize], out: &mut [usize]) {
    let n = seq.len();
    for i in 0..n {
        out[seq[i] - 1] = seq[(i + 1) % n];
    }
}

/// True iff `π` is a single `n`-cycle.
pub fn is_cyclic(pi: &Permutation) -> bool {
    is_cyclic_entries(&pi.entries)
}

pub(crate) fn is_cyclic_entries(entries: &[usize]) -> bool {
    let n = entries.len();
    let mut x = 1;
    for step in 1..=n {
        x = entries[x - 1];
        if x == 1 {
            return step == n;
        }
    }
    false
}

/// Positions `i` with `π_{i-1} < π_i > π_{i+1}`, padding `π_0 = π_{n+1} = 0`.
pub fn peaks(pi: &Permutation) -> BTreeSet<usize> {
    let e = &pi.entries;
    let n = e.len();
    let get = |i: usize| if i == 0 || i > n { 0 } else { e[i - 1] };
    (1..=n)
        .filter(|&i| get(i - 1) < get(i) && get(i) > get(i + 1))
        .collect()
}

/// Positions `i` with `π_{i-1} > π_i < π_{i+1}`, padding `π_0 = π_{n+1} = n + 1`.
pub fn valleys(pi: &Permutation) -> BTreeSet<usize> {
    let e = &pi.entries;
    let n = e.len();
    let get = |i: usize| if i == 0 || i > n { n + 1 } else { e[i - 1] };
    (1..=n)
        .filter(|&i| get(i - 1) > get(i) && get(i) < get(i + 1))
        .collect()
}

pub fn descent_count(pi: &Permutation) -> usize {
    pi.entries.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn ascent_count(pi: &Permutation) -> usize {
    pi.entries.windows(2).filter(|w| w[0] < w[1]).count()
}

/// Boundary sequence `0 = e_0 <= e_1 <= ... <= e_k = n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Segmentation {
    boundaries: Vec<usize>,
}

impl Segmentation {
    pub fn new(boundaries: Vec<usize>, n: usize) -> Result<Self> {
        let ok = boundaries.len() >= 2
            && boundaries[0] == 0
            && *boundaries.last().unwrap() == n
            && boundaries.windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            return Err(Error::Domain(format!(
                "{boundaries:?} is not a weakly increasing boundary sequence from 0 to {n}"
            )));
        }
        Ok(Segmentation { boundaries })
    }

    /// The segmentation whose segment lengths are `lengths`.
    pub fn from_lengths(lengths: &[usize]) -> Self {
        let mut boundaries = Vec::with_capacity(lengths.len() + 1);
        let mut acc = 0;
        boundaries.push(0);
        for &l in lengths {
            acc += l;
            boundaries.push(acc);
        }
        Segmentation { boundaries }
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    /// Segment lengths `e_{i+1} - e_i`.
    pub fn lengths(&self) -> Vec<usize> {
        self.boundaries.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

impl fmt::Display for Segmentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.boundaries.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join(" <= "))
    }
}

/// Maximal monotone runs starting at each offset.
///
/// `inc[a]` is the largest `b` such that `entries[a..b]` is increasing, and
/// likewise `dec[a]` for decreasing. Both are `n` at `a = n`.
struct Runs {
    inc: Vec<usize>,
    dec: Vec<usize>,
}

impl Runs {
    fn of(entries: &[usize]) -> Self {
        let n = entries.len();
        let mut inc = vec![n; n + 1];
        let mut dec = vec![n; n + 1];
        for a in (0..n.saturating_sub(1)).rev() {
            inc[a] = if entries[a] < entries[a + 1] {
                inc[a + 1]
            } else {
                a + 1
            };
            dec[a] = if entries[a] > entries[a + 1] {
                dec[a + 1]
            } else {
                a + 1
            };
        }
        Runs { inc, dec }
    }

    /// Furthest end of a segment of the given direction starting at offset `a`.
    fn reach(&self, sign: Sign, a: usize) -> usize {
        match sign {
            Sign::Plus => self.inc[a],
            Sign::Minus => self.dec[a],
        }
    }
}

/// Every segmentation of `π` compatible with `σ`, in lexicographic order.
pub fn segmentations(pi: &Permutation, sigma: &Signature) -> Vec<Segmentation> {
    let entries = &pi.entries;
    let n = entries.len();
    let runs = Runs::of(entries);
    let mut out = Vec::new();
    let mut current = vec![0usize];
    collect_segmentations(&runs, sigma.signs(), n, &mut current, &mut out);
    out
}

fn collect_segmentations(
    runs: &Runs,
    signs: &[Sign],
    n: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Segmentation>,
) {
    let start = *current.last().unwrap();
    let reach = runs.reach(signs[0], start);
    if signs.len() == 1 {
        if reach >= n {
            current.push(n);
            out.push(Segmentation {
                boundaries: current.clone(),
            });
            current.pop();
        }
        return;
    }
    for end in start..=reach {
        current.push(end);
        collect_segmentations(runs, &signs[1..], n, current, out);
        current.pop();
    }
}

/// Number of segmentations of a one-line sequence, without materialising them.
pub(crate) fn segmentation_count_entries(entries: &[usize], sigma: &Signature) -> u64 {
    let runs = Runs::of(entries);
    count_from(&runs, sigma.signs(), entries.len(), 0)
}

fn count_from(runs: &Runs, signs: &[Sign], n: usize, start: usize) -> u64 {
    let reach = runs.reach(signs[0], start);
    if signs.len() == 1 {
        return u64::from(reach >= n);
    }
    (start..=reach)
        .map(|end| count_from(runs, &signs[1..], n, end))
        .sum()
}

pub fn segmentation_count(pi: &Permutation, sigma: &Signature) -> u64 {
    segmentation_count_entries(&pi.entries, sigma)
}

/// Membership in the `σ`-class.
///
/// Sweeps left to right giving each segment the longest monotone stretch it
/// can take. Being coverable from offset `a` is monotone in `a`, so the
/// greedy choice never loses a segmentation that exists.
pub fn in_class(pi: &Permutation, sigma: &Signature) -> bool {
    in_class_entries(&pi.entries, sigma)
}

pub(crate) fn in_class_entries(entries: &[usize], sigma: &Signature) -> bool {
    let n = entries.len();
    let mut pos = 0;
    for &sign in sigma.signs() {
        if pos >= n {
            return true;
        }
        pos += 1;
        while pos < n
            && match sign {
                Sign::Plus => entries[pos - 1] < entries[pos],
                Sign::Minus => entries[pos - 1] > entries[pos],
            }
        {
            pos += 1;
        }
    }
    pos >= n
}

/// Membership by trying every weakly increasing boundary tuple.
///
/// Shares no code with [`in_class`] or [`segmentations`]; kept as the
/// reference path those are tested against.
pub fn in_class_exhaustive(pi: &Permutation, sigma: &Signature) -> bool {
    let n = pi.len();
    let k = sigma.len();
    let mut inner = vec![0usize; k - 1];
    loop {
        let mut bounds = Vec::with_capacity(k + 1);
        bounds.push(0);
        bounds.extend_from_slice(&inner);
        bounds.push(n);
        if segments_match(&pi.entries, &bounds, sigma) {
            return true;
        }
        // next weakly increasing tuple over 0..=n
        let mut j = k - 1;
        loop {
            if j == 0 {
                return false;
            }
            j -= 1;
            if inner[j] < n {
                inner[j] += 1;
                let v = inner[j];
                for x in inner.iter_mut().skip(j + 1) {
                    *x = v;
                }
                break;
            }
        }
    }
}

/// Whether the segments cut by `bounds` follow `σ`.
pub fn segments_match(entries: &[usize], bounds: &[usize], sigma: &Signature) -> bool {
    sigma.signs().iter().enumerate().all(|(i, &sign)| {
        let seg = &entries[bounds[i]..bounds[i + 1]];
        seg.windows(2).all(|w| match sign {
            Sign::Plus => w[0] < w[1],
            Sign::Minus => w[0] > w[1],
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn bounds(segs: &[Segmentation]) -> Vec<Vec<usize>> {
        segs.iter().map(|s| s.boundaries().to_vec()).collect()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("268147953").to_string(), "268147953");
        let long = p("10,2,7,1,3,4,5,6,8,9");
        assert_eq!(long.len(), 10);
        assert_eq!(long.to_string(), "10,2,7,1,3,4,5,6,8,9");
        assert!("1223".parse::<Permutation>().is_err());
        assert!("0123".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&p("165892437")), p("647385192"));
        assert_eq!(theta(&Permutation::identity(5)), p("23451"));
        assert_eq!(theta(&p("21")), p("21"));
    }

    #[test]
    fn cyclicity() {
        assert!(is_cyclic(&p("231")));
        assert!(!is_cyclic(&p("132")));
        assert!(is_cyclic(&p("647385192")));
        assert!(is_cyclic(&p("1")));
        assert!(!is_cyclic(&p("12")));
    }

    #[test]
    fn peaks_and_valleys() {
        let pi = p("356894127");
        assert_eq!(peaks(&pi), [5, 9].into());
        assert_eq!(valleys(&pi), [1, 7].into());
        let id = Permutation::identity(6);
        assert_eq!(peaks(&id), [6].into());
        assert_eq!(valleys(&id), [1].into());
    }

    #[test]
    fn segmentation_examples() {
        assert_eq!(
            bounds(&segmentations(&p("268147953"), &sig("++-"))),
            vec![vec![0, 3, 6, 9], vec![0, 3, 7, 9]]
        );
        let got = bounds(&segmentations(&p("862347951"), &sig("-+-")));
        let mut want = Vec::new();
        for i in [2, 3] {
            for j in [6, 7] {
                want.push(vec![0, i, j, 9]);
            }
        }
        assert_eq!(got, want);
        assert_eq!(
            bounds(&segmentations(&p("231"), &sig("+-+"))),
            vec![
                vec![0, 1, 2, 3],
                vec![0, 1, 3, 3],
                vec![0, 2, 2, 3],
                vec![0, 2, 3, 3]
            ]
        );
        for n in 1..8 {
            let c = segmentations(&Permutation::identity(n), &sig("+++")).len();
            assert_eq!(c, (n + 2) * (n + 1) / 2);
        }
    }

    #[test]
    fn membership_examples() {
        assert!(!in_class(&p("3142"), &sig("+-+")));
        assert!(!in_class_exhaustive(&p("3142"), &sig("+-+")));
        assert!(in_class(&p("3142"), &sig("++-")));
        assert!(segments_match(
            p("3142").entries(),
            &[0, 1, 3, 4],
            &sig("++-")
        ));
        assert!(in_class(&Permutation::identity(7), &sig("++++")));
    }

    #[test]
    fn segmentation_validation() {
        assert!(Segmentation::new(vec![0, 2, 1, 4], 4).is_err());
        assert!(Segmentation::new(vec![0, 2, 4], 5).is_err());
        let s = Segmentation::new(vec![0, 2, 2, 4], 4).unwrap();
        assert_eq!(s.lengths(), vec![2, 0, 2]);
        assert_eq!(Segmentation::from_lengths(&[2, 0, 2]), s);
    }

    fn perm_strategy() -> impl Strategy<Value = Permutation> {
        (1usize..9).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(Permutation::from_entries_unchecked)
        })
    }

    fn sig_strategy() -> impl Strategy<Value = Signature> {
        proptest::collection::vec(any::<bool>(), 2..5).prop_map(|b| {
            Signature::new(
                b.into_iter()
                    .map(|m| if m { Sign::Minus } else { Sign::Plus })
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn membership_paths_agree(pi in perm_strategy(), sigma in sig_strategy()) {
            let segs = segmentations(&pi, &sigma);
            prop_assert_eq!(in_class(&pi, &sigma), !segs.is_empty());
            prop_assert_eq!(in_class_exhaustive(&pi, &sigma), !segs.is_empty());
            prop_assert_eq!(segmentation_count(&pi, &sigma), segs.len() as u64);
            for s in &segs {
                prop_assert!(segments_match(pi.entries(), s.boundaries(), &sigma));
            }
            prop_assert!(segs.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn theta_is_cyclic(pi in perm_strategy()) {
            prop_assert!(is_cyclic(&theta(&pi)));
        }
    }
}
