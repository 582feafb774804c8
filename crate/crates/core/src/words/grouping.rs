//! Necklace counts by visiting all `k^n` words and grouping them by rotation.
//!
//! This is the cross-check route for the formulas and the successor-based
//! generator. Cost is `k^n * n^2`, so keep `n` around 12 or below.

use std::collections::BTreeMap;

use crate::arith::ExactInt;
use crate::perms::Signature;

use super::{canonicalize, minus_mask, odd_letter_count, Necklace, Word};

/// Visits every word of length `n` over `k` letters in lexicographic order.
pub fn for_each_word(k: usize, n: usize, mut f: impl FnMut(&[u8])) {
    let mut letters = vec![0u8; n];
    loop {
        f(&letters);
        let mut j = n;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if (letters[j] as usize) < k - 1 {
                letters[j] += 1;
                for x in letters.iter_mut().skip(j + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Every necklace of length `n`, found by canonicalising all words.
pub fn necklaces_by_grouping(k: usize, n: usize) -> Vec<Necklace> {
    let mut classes = BTreeMap::new();
    for_each_word(k, n, |letters| {
        let neck = canonicalize(&Word::from_letters_unchecked(letters.to_vec(), k));
        classes
            .entry(neck.canonical().letters().to_vec())
            .or_insert(neck);
    });
    classes.into_values().collect()
}

/// The necklaces of one length, grouped once and queried for several counts.
pub struct Grouped {
    k: usize,
    n: usize,
    necklaces: Vec<Necklace>,
}

impl Grouped {
    pub fn new(k: usize, n: usize) -> Self {
        Grouped {
            k,
            n,
            necklaces: necklaces_by_grouping(k, n),
        }
    }

    pub fn necklaces(&self) -> &[Necklace] {
        &self.necklaces
    }

    /// `L_k(n)`.
    pub fn primitive(&self) -> ExactInt {
        self.necklaces
            .iter()
            .filter(|c| c.is_primitive())
            .count()
            .into()
    }

    /// `L_2(n, i)`: primitive classes with exactly `ones` letters equal to 1.
    pub fn density(&self, ones: usize) -> ExactInt {
        assert_eq!(self.k, 2, "densities are binary");
        self.necklaces
            .iter()
            .filter(|c| {
                c.is_primitive()
                    && c.canonical().letters().iter().filter(|&&l| l == 1).count() == ones
            })
            .count()
            .into()
    }

    /// `L_k(n; σ)`.
    pub fn sigma(&self, sigma: &Signature) -> ExactInt {
        let mask = minus_mask(sigma);
        self.necklaces
            .iter()
            .filter(|c| {
                c.is_primitive() && odd_letter_count(&mask, c.canonical().letters()) % 2 == 1
            })
            .count()
            .into()
    }

    /// Size of `N_k(n; σ)`: primitive classes plus classes of period `n/2`
    /// whose root has odd `o_σ`.
    pub fn star(&self, sigma: &Signature) -> ExactInt {
        let mask = minus_mask(sigma);
        let n = self.n;
        self.necklaces
            .iter()
            .filter(|c| {
                if c.is_primitive() {
                    return true;
                }
                let root = c.period_root_length();
                2 * root == n && odd_letter_count(&mask, &c.canonical().letters()[..root]) % 2 == 1
            })
            .count()
            .into()
    }
}

/// `L_k(n)` by grouping.
pub fn count_primitive(k: usize, n: usize) -> ExactInt {
    Grouped::new(k, n).primitive()
}

/// `L_2(n, i)` by grouping.
pub fn count_density(n: usize, ones: usize) -> ExactInt {
    Grouped::new(2, n).density(ones)
}

/// `L_k(n; σ)` by grouping.
pub fn count_sigma(k: usize, n: usize, sigma: &Signature) -> ExactInt {
    Grouped::new(k, n).sigma(sigma)
}

/// Size of `N_k(n; σ)` by grouping.
pub fn count_star(k: usize, n: usize, sigma: &Signature) -> ExactInt {
    Grouped::new(k, n).star(sigma)
}
