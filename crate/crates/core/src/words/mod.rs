//! Words over `{0, ..., k-1}`, necklaces, and the necklace counts that the
//! cyclic-permutation formulas are written in.
//!
//! Every count has two routes: a closed form or successor-based generation
//! here, and a filter-all-words route in [`grouping`] that shares none of
//! that code.

pub mod grouping;
mod lyndon;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{binomial, divisors, exact_div, moebius, pow, ExactInt};
use crate::error::{Error, Result};
use crate::perms::{Sign, Signature};

pub use lyndon::Prenecklaces;

/// A word of length `n >= 1` over the alphabet `{0, ..., k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u8>,
    alphabet: usize,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet: usize) -> Result<Self> {
        if alphabet < 2 {
            return Err(Error::Domain(format!(
                "alphabet size must be at least 2, got {alphabet}"
            )));
        }
        if letters.is_empty() {
            return Err(Error::Domain("words have length at least 1".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&l| l as usize >= alphabet) {
            return Err(Error::Domain(format!(
                "letter {bad} outside alphabet of size {alphabet}"
            )));
        }
        Ok(Word { letters, alphabet })
    }

    /// Parses contiguous digits such as `0020112`. The alphabet size is
    /// always given, never inferred from the largest digit.
    pub fn parse(text: &str, alphabet: usize) -> Result<Self> {
        let letters = text
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in word {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, alphabet).map_err(|e| Error::Parse(e.to_string()))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>, alphabet: usize) -> Self {
        Word { letters, alphabet }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word obtained by `s_i -> k - 1 - s_i`.
    pub fn complement_letters(&self) -> Word {
        let top = (self.alphabet - 1) as u8;
        Word {
            letters: self.letters.iter().map(|&l| top - l).collect(),
            alphabet: self.alphabet,
        }
    }

    /// `q` concatenated with itself `times` times.
    pub fn power(&self, times: usize) -> Word {
        Word {
            letters: self.letters.repeat(times),
            alphabet: self.alphabet,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            if l < 10 {
                write!(f, "{l}")?;
            } else {
                write!(f, "[{l}]")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A rotation class of words, held by its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Necklace {
    canonical: Word,
    period_root_length: usize,
}

impl Necklace {
    pub(crate) fn from_parts(canonical: Word, period_root_length: usize) -> Self {
        Necklace {
            canonical,
            period_root_length,
        }
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    /// Length of the shortest `q` with `canonical = q^r`.
    pub fn period_root_length(&self) -> usize {
        self.period_root_length
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canonical.is_empty()
    }

    pub fn is_primitive(&self) -> bool {
        self.period_root_length == self.len()
    }
}

/// The sets `T^-` and `T^+` of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureParity {
    pub t_minus: BTreeSet<usize>,
    pub t_plus: BTreeSet<usize>,
}

impl SignatureParity {
    pub fn of(sigma: &Signature) -> Self {
        let (mut t_minus, mut t_plus) = (BTreeSet::new(), BTreeSet::new());
        for (i, &s) in sigma.signs().iter().enumerate() {
            match s {
                Sign::Minus => t_minus.insert(i),
                Sign::Plus => t_plus.insert(i),
            };
        }
        SignatureParity { t_minus, t_plus }
    }
}

/// Smallest `d | n` such that the word is invariant under rotation by `d`.
fn period_root_length(letters: &[u8]) -> usize {
    let n = letters.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (0..n).all(|i| letters[i] == letters[(i + d) % n]))
        .unwrap_or(n)
}

pub fn is_primitive(s: &Word) -> bool {
    period_root_length(&s.letters) == s.len()
}

/// Letter multiplicities `(a_0, ..., a_{k-1})`.
pub fn evaluation(s: &Word) -> Vec<usize> {
    let mut counts = vec![0; s.alphabet];
    for &l in &s.letters {
        counts[l as usize] += 1;
    }
    counts
}

/// Number of letters of `s` that index a `-` position of `σ`.
pub fn o_sigma(sigma: &Signature, s: &Word) -> Result<usize> {
    if sigma.len() != s.alphabet {
        return Err(Error::Domain(format!(
            "signature {sigma} has length {}, word is over {} letters",
            sigma.len(),
            s.alphabet
        )));
    }
    Ok(odd_letter_count(&minus_mask(sigma), &s.letters))
}

pub(crate) fn minus_mask(sigma: &Signature) -> Vec<bool> {
    sigma.signs().iter().map(|&s| s == Sign::Minus).collect()
}

pub(crate) fn odd_letter_count(mask: &[bool], letters: &[u8]) -> usize {
    letters.iter().filter(|&&l| mask[l as usize]).count()
}

/// Least rotation of `s` by comparing every rotation against the best so far.
pub fn canonicalize(s: &Word) -> Necklace {
    let n = s.len();
    let doubled: Vec<u8> = s.letters.iter().chain(s.letters.iter()).copied().collect();
    let best = (1..n).fold(0, |best, r| {
        if doubled[r..r + n] < doubled[best..best + n] {
            r
        } else {
            best
        }
    });
    let canonical = doubled[best..best + n].to_vec();
    let root = period_root_length(&canonical);
    Necklace {
        canonical: Word::from_letters_unchecked(canonical, s.alphabet),
        period_root_length: root,
    }
}

/// Which necklaces [`generate_necklaces`] yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NecklaceFilter {
    All,
    Primitive,
    /// Primitive necklaces of length `n` together with `[q q]` for every
    /// primitive `q` of length `n / 2` with `o_σ(q)` odd.
    InNSigma(Signature),
}

/// Necklaces of length `n` over `k` letters, each exactly once.
///
/// `All` and `Primitive` come out in lexicographic order of their canonical
/// words. `InNSigma` yields the primitive ones first, then the squared ones.
pub fn generate_necklaces(
    k: usize,
    n: usize,
    filter: NecklaceFilter,
) -> Result<Box<dyn Iterator<Item = Necklace> + Send>> {
    if k < 2 || n == 0 {
        return Err(Error::Domain(format!(
            "necklaces need k >= 2 and n >= 1, got k = {k}, n = {n}"
        )));
    }
    Ok(match filter {
        NecklaceFilter::All => Box::new(
            Prenecklaces::new(k, n)
                .filter(move |(_, p)| n % p == 0)
                .map(move |(w, p)| Necklace::from_parts(Word::from_letters_unchecked(w, k), p)),
        ),
        NecklaceFilter::Primitive => Box::new(lyndon_words(k, n)),
        NecklaceFilter::InNSigma(sigma) => {
            check_sigma(k, &sigma)?;
            let primitive = lyndon_words(k, n);
            if n % 2 == 1 {
                return Ok(Box::new(primitive));
            }
            let mask = minus_mask(&sigma);
            let squared = lyndon_words(k, n / 2)
                .filter(move |q| odd_letter_count(&mask, q.canonical.letters()) % 2 == 1)
                .map(|q| Necklace::from_parts(q.canonical.power(2), q.period_root_length));
            Box::new(primitive.chain(squared))
        }
    })
}

fn lyndon_words(k: usize, n: usize) -> impl Iterator<Item = Necklace> + Send {
    Prenecklaces::new(k, n)
        .filter(move |(_, p)| *p == n)
        .map(move |(w, _)| Necklace::from_parts(Word::from_letters_unchecked(w, k), n))
}

fn check_sigma(k: usize, sigma: &Signature) -> Result<()> {
    if sigma.len() != k {
        return Err(Error::Domain(format!(
            "signature {sigma} has length {}, expected {k}",
            sigma.len()
        )));
    }
    Ok(())
}

/// `L_k(n)`: number of primitive necklaces of length `n` on `k` letters,
/// `(1/n) Σ_{d|n} μ(d) k^{n/d}`.
pub fn count_l(k: usize, n: usize) -> ExactInt {
    assert!(n >= 1, "count_l needs n >= 1");
    let n64 = n as u64;
    let sum = divisors(n64)
        .unwrap()
        .into_iter()
        .fold(ExactInt::zero(), |acc, d| {
            acc + moebius(d).unwrap() * pow(k as u64, n64 / d)
        });
    exact_div(sum, n64, "L_k(n)")
}

/// `L_2(n, i)`: binary primitive necklaces of length `n` with exactly `i`
/// ones, `(1/n) Σ_{d | gcd(n, i)} μ(d) C(n/d, i/d)`, taking `gcd(n, 0) = n`.
pub fn count_l2_density(n: usize, i: usize) -> Result<ExactInt> {
    if n == 0 || i > n {
        return Err(Error::Domain(format!(
            "L_2(n, i) needs n >= 1 and 0 <= i <= n, got n = {n}, i = {i}"
        )));
    }
    let g = num_integer::gcd(n, i) as u64;
    let sum = divisors(g)
        .unwrap()
        .into_iter()
        .fold(ExactInt::zero(), |acc, d| {
            acc + moebius(d).unwrap() * binomial(n as u64 / d, (i as u64 / d) as i64)
        });
    Ok(exact_div(sum, n as u64, "L_2(n, i)"))
}

/// `L_k(n; σ)`: primitive necklaces of length `n` with `o_σ` odd.
///
/// With `t` letters marked `-`, the words of length `d` with an odd number
/// of them number `W(d) = (k^d - (k - 2t)^d) / 2`. A word of length `n` with
/// primitive root of length `d` has odd `o_σ` iff its root does and `n / d`
/// is odd, so inverting over odd cofactors gives
/// `L_k(n; σ) = (1/n) Σ_{d|n, n/d odd} μ(n/d) W(d)`.
pub fn count_l_sigma(k: usize, n: usize, sigma: &Signature) -> Result<ExactInt> {
    check_sigma(k, sigma)?;
    if n == 0 {
        return Err(Error::Domain("L_k(n; σ) needs n >= 1".into()));
    }
    let t = SignatureParity::of(sigma).t_minus.len() as i64;
    let odd_words = |d: u64| {
        let all = pow(k as u64, d);
        let signed: ExactInt = num_traits::pow(ExactInt::from(k as i64 - 2 * t), d as usize);
        exact_div(all - signed, 2, "odd-weight words")
    };
    let n64 = n as u64;
    let sum = divisors(n64)
        .unwrap()
        .into_iter()
        .filter(|d| (n64 / d) % 2 == 1)
        .fold(ExactInt::zero(), |acc, d| {
            acc + moebius(n64 / d).unwrap() * odd_words(d)
        });
    Ok(exact_div(sum, n64, "L_k(n; σ)"))
}

/// `L_k(n; σ)` by generating every primitive necklace.
pub fn count_l_sigma_enumerated(k: usize, n: usize, sigma: &Signature) -> Result<ExactInt> {
    check_sigma(k, sigma)?;
    if n == 0 {
        return Err(Error::Domain("L_k(n; σ) needs n >= 1".into()));
    }
    let mask = minus_mask(sigma);
    let count = Prenecklaces::new(k, n)
        .filter(|(w, p)| *p == n && odd_letter_count(&mask, w) % 2 == 1)
        .count();
    Ok(ExactInt::from(count))
}

/// `L*_k(n; σ) = L_k(n) + L_k(n/2; σ)`, the second term only for even `n`.
pub fn count_l_star(k: usize, n: usize, sigma: &Signature) -> Result<ExactInt> {
    check_sigma(k, sigma)?;
    if n == 0 {
        return Err(Error::Domain("L*_k(n; σ) needs n >= 1".into()));
    }
    let mut total = count_l(k, n);
    if n % 2 == 0 {
        total += count_l_sigma(k, n / 2, sigma)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str, k: usize) -> Word {
        Word::parse(s, k).unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn canon_strings(it: impl Iterator<Item = Necklace>) -> Vec<String> {
        it.map(|n| n.canonical().to_string()).collect()
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&w("0020112", 3)));
        assert!(!is_primitive(&w("00120012", 3)));
        assert!(!is_primitive(&w("000", 2)));
        assert!(is_primitive(&w("0", 2)));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(evaluation(&w("0012001022", 3)), vec![5, 2, 3]);
        assert_eq!(evaluation(&w("0", 2)), vec![1, 0]);
        assert_eq!(evaluation(&w("012", 3)), vec![1, 1, 1]);
    }

    #[test]
    fn o_sigma_examples() {
        assert_eq!(o_sigma(&sig("+-"), &w("01001", 2)).unwrap(), 2);
        assert_eq!(o_sigma(&sig("+-"), &w("01111", 2)).unwrap(), 4);
        assert_eq!(o_sigma(&sig("+---"), &w("1203123", 4)).unwrap(), 6);
        assert_eq!(o_sigma(&sig("+---"), &w("0000103", 4)).unwrap(), 2);
        assert!(o_sigma(&sig("+-+"), &w("0101", 2)).is_err());
    }

    #[test]
    fn word_validation() {
        assert!(Word::parse("0130", 3).is_err());
        assert!(Word::parse("", 3).is_err());
        assert!(Word::parse("01", 1).is_err());
        assert_eq!(w("012", 9).alphabet(), 9);
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canonicalize(&w("10", 2)).canonical(), &w("01", 2));
        assert_eq!(canonicalize(&w("201", 3)).canonical(), &w("012", 3));
        let n = canonicalize(&w("0101", 2));
        assert_eq!(n.canonical(), &w("0101", 2));
        assert_eq!(n.period_root_length(), 2);
        assert!(!n.is_primitive());
    }

    #[test]
    fn generation_examples() {
        let got = canon_strings(generate_necklaces(2, 3, NecklaceFilter::Primitive).unwrap());
        assert_eq!(got, ["001", "011"]);
        let got =
            canon_strings(generate_necklaces(2, 4, NecklaceFilter::InNSigma(sig("+-"))).unwrap());
        assert_eq!(got, ["0001", "0011", "0111", "0101"]);
        let got = canon_strings(generate_necklaces(3, 1, NecklaceFilter::Primitive).unwrap());
        assert_eq!(got, ["0", "1", "2"]);
        let all = canon_strings(generate_necklaces(2, 4, NecklaceFilter::All).unwrap());
        assert_eq!(all, ["0000", "0001", "0011", "0101", "0111", "1111"]);
        assert!(generate_necklaces(1, 3, NecklaceFilter::All).is_err());
        assert!(generate_necklaces(3, 4, NecklaceFilter::InNSigma(sig("+-"))).is_err());
    }

    #[test]
    fn count_l_examples() {
        assert_eq!(count_l(2, 1), 2.into());
        assert_eq!(count_l(3, 3), 8.into());
        assert_eq!(count_l(2, 4), 3.into());
        assert_eq!(count_l(3, 4), 18.into());
        // 3^40 overflows u64; the Möbius sum must stay exact.
        assert_eq!(count_l(3, 41), (pow(3, 41) - 3) / 41);
    }

    #[test]
    fn density_examples() {
        assert_eq!(count_l2_density(4, 2).unwrap(), 1.into());
        assert_eq!(count_l2_density(5, 2).unwrap(), 2.into());
        assert_eq!(count_l2_density(4, 1).unwrap(), 1.into());
        assert_eq!(count_l2_density(1, 0).unwrap(), 1.into());
        for n in 2..15 {
            assert_eq!(count_l2_density(n, 0).unwrap(), 0.into());
        }
        assert!(count_l2_density(4, 5).is_err());
        assert!(count_l2_density(0, 0).is_err());
    }

    #[test]
    fn l_sigma_examples() {
        assert_eq!(count_l_sigma(3, 2, &sig("+-+")).unwrap(), 2.into());
        assert_eq!(count_l_sigma(3, 3, &sig("+-+")).unwrap(), 4.into());
        assert_eq!(
            count_l_sigma_enumerated(3, 3, &sig("+-+")).unwrap(),
            4.into()
        );
        assert_eq!(count_l_sigma(2, 2, &sig("--")).unwrap(), 0.into());
        assert_eq!(count_l_sigma(3, 2, &sig("++-")).unwrap(), 2.into());
        assert!(count_l_sigma(2, 2, &sig("+-+")).is_err());
    }

    #[test]
    fn l_star_examples() {
        assert_eq!(count_l_star(3, 3, &sig("+-+")).unwrap(), 8.into());
        assert_eq!(count_l_star(3, 4, &sig("+-+")).unwrap(), 20.into());
        assert_eq!(count_l_star(3, 4, &sig("++-")).unwrap(), 20.into());
        assert_eq!(count_l_star(2, 4, &sig("+-")).unwrap(), 4.into());
    }

    #[test]
    fn formula_matches_generation() {
        for k in 2..=4 {
            for sigma in Signature::all_of_length(k) {
                for n in 1..=if k == 4 { 7 } else { 10 } {
                    assert_eq!(
                        count_l_sigma(k, n, &sigma).unwrap(),
                        count_l_sigma_enumerated(k, n, &sigma).unwrap(),
                        "k={k} n={n} σ={sigma}"
                    );
                }
            }
        }
    }

    #[test]
    fn half_count_for_odd_lengths() {
        for sigma in ["+-+", "-++", "++-"] {
            let sigma = sig(sigma);
            for m in (3..=13).step_by(2) {
                assert_eq!(count_l_sigma(3, m, &sigma).unwrap() * 2, count_l(3, m));
            }
        }
    }

    #[test]
    fn half_count_fails_at_length_one() {
        let s3 = sig("+-+");
        assert_eq!(count_l_sigma(3, 1, &s3).unwrap(), 1.into());
        assert_eq!(count_l(3, 1), 3.into());
    }

    #[test]
    fn reversal_invariance_of_l_star() {
        for sigma in Signature::all_of_length(3) {
            for n in 1..=14 {
                assert_eq!(
                    count_l_star(3, n, &sigma).unwrap(),
                    count_l_star(3, n, &sigma.reverse()).unwrap(),
                    "{sigma} n={n}"
                );
            }
        }
    }

    #[test]
    fn in_n_sigma_size_is_l_star() {
        for k in 2..=3 {
            for sigma in Signature::all_of_length(k) {
                for n in 1..=12 {
                    let got = generate_necklaces(k, n, NecklaceFilter::InNSigma(sigma.clone()))
                        .unwrap()
                        .count();
                    assert_eq!(ExactInt::from(got), count_l_star(k, n, &sigma).unwrap());
                }
            }
        }
    }

    #[test]
    fn density_symmetry_and_row_sums() {
        for n in 1..=14 {
            let mut row = ExactInt::zero();
            for i in 0..=n {
                let v = count_l2_density(n, i).unwrap();
                assert_eq!(v, count_l2_density(n, n - i).unwrap());
                row += v;
            }
            assert_eq!(row, count_l(2, n));
        }
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        (2usize..5).prop_flat_map(|k| {
            proptest::collection::vec(0..k as u8, 1..12)
                .prop_map(move |l| Word::from_letters_unchecked(l, k))
        })
    }

    proptest! {
        #[test]
        fn canonical_is_least_rotation(s in word_strategy()) {
            let neck = canonicalize(&s);
            let n = s.len();
            for r in 0..n {
                let rot: Vec<u8> = (0..n).map(|i| s.letters()[(i + r) % n]).collect();
                prop_assert!(neck.canonical().letters() <= &rot[..]);
                let rotated = canonicalize(&Word::from_letters_unchecked(rot, s.alphabet()));
                prop_assert_eq!(rotated.canonical(), neck.canonical());
            }
            prop_assert_eq!(canonicalize(neck.canonical()), neck.clone());
            prop_assert_eq!(n % neck.period_root_length(), 0);
            prop_assert_eq!(neck.is_primitive(), is_primitive(&s));
        }

        #[test]
        fn complement_preserves_parity_under_reversal(s in word_strategy(), bits in proptest::collection::vec(any::<bool>(), 4)) {
            let k = s.alphabet();
            let sigma = Signature::new(bits[..k.min(4)].iter().cycle().take(k)
                .map(|&m| if m { Sign::Minus } else { Sign::Plus }).collect()).unwrap();
            prop_assert_eq!(
                o_sigma(&sigma.reverse(), &s.complement_letters()).unwrap(),
                o_sigma(&sigma, &s).unwrap()
            );
        }

        #[test]
        fn evaluation_sums_to_length(s in word_strategy()) {
            prop_assert_eq!(evaluation(&s).iter().sum::<usize>(), s.len());
        }
    }
}
