//! Closed forms for cyclic permutations in the length-3 grid classes.
//!
//! `c_i(n)` counts the `n`-cycles in the class of table signature `s_i`.
//! The formulas are written in necklace counts from [`crate::words`] and the
//! peak-position counts `Λ(n, i)` of cyclic unimodal permutations.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{exact_div, ExactInt};
use crate::error::{Error, Result};
use crate::perms::Signature;
use crate::words::{count_l, count_l2_density, count_l_sigma, count_l_star};

/// How the `c_1` / `c_2` expression is read.
///
/// Both readings evaluate the same expression. `AsPrinted` claims it counts
/// the whole class; `ExactDescentsInterpretation` claims it counts cycles
/// with exactly two descents (`c_1`) or exactly two ascents (`c_2`). The
/// oracle decides which claim holds; see [`crate::oracle::Oracle::c12_report`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaVariant {
    #[default]
    AsPrinted,
    ExactDescentsInterpretation,
}

fn unimodal() -> Signature {
    "+-".parse().unwrap()
}

/// `Λ(n)`, the number of cyclic unimodal permutations of length `n`.
pub fn lambda_total(n: usize) -> Result<ExactInt> {
    if n == 0 {
        return Err(Error::Domain("Λ(n) needs n >= 1".into()));
    }
    count_l_sigma(2, n, &unimodal())
}

/// `Λ(n, i)`: cyclic unimodal permutations of length `n` with `π_i = n`,
/// by the alternating sum over `L_2(n, j)`.
///
/// For even `n` a correction `± Σ L_2(n/2, k/2)` runs over `1 <= k < i` with
/// `n + k + 2 ≡ 0 (mod 4)`; such `k` are always even.
pub fn lambda_peak(n: usize, i: usize) -> Result<ExactInt> {
    if i == 0 || i > n {
        return Err(Error::Domain(format!(
            "Λ(n, i) needs 1 <= i <= n, got n = {n}, i = {i}"
        )));
    }
    let mut total = ExactInt::zero();
    for j in 1..i {
        let term = count_l2_density(n, j)?;
        if (i + j + 1) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if n % 2 == 0 {
        let mut correction = ExactInt::zero();
        for k in (1..i).filter(|k| (n + k + 2) % 4 == 0) {
            debug_assert!(k % 2 == 0);
            correction += count_l2_density(n / 2, k / 2)?;
        }
        if (i + 1) % 2 == 0 {
            total += correction;
        } else {
            total -= correction;
        }
    }
    Ok(total)
}

/// `Σ_{i=2}^{n-1} weight(i) · Λ(n, i)`.
fn weighted_peak_sum(n: usize, weight: impl Fn(usize) -> usize) -> Result<ExactInt> {
    let mut sum = ExactInt::zero();
    for i in 2..n {
        sum += lambda_peak(n, i)? * weight(i);
    }
    Ok(sum)
}

/// Closed-form `c_index(n)` for table signature `s_index`.
///
/// `variant` only matters for indices 1 and 2; any other variant is rejected
/// for indices 3 through 8.
pub fn c(index: usize, n: usize, variant: FormulaVariant) -> Result<ExactInt> {
    if !(1..=8).contains(&index) {
        return Err(Error::Domain(format!(
            "no closed form c_{index}; expected 1..=8"
        )));
    }
    if index >= 3 && variant != FormulaVariant::AsPrinted {
        return Err(Error::Domain(format!(
            "c_{index} has a single reading; {variant:?} applies to c_1 and c_2 only"
        )));
    }
    // c_5..c_8 are stated from n = 2, but L*_3(2; s6) = 5 is odd and the
    // underlying segmentation count needs n >= 3.
    let min_n = if index <= 2 { 2 } else { 3 };
    if n < min_n {
        return Err(Error::Domain(format!(
            "the closed form for c_{index}(n) holds for n >= {min_n}, got n = {n}"
        )));
    }
    let sigma = Signature::table(index)?;
    let l3_star = || count_l_star(3, n, &sigma);
    Ok(match index {
        1 => count_l(3, n) - count_l(2, n) * (n + 1),
        2 => {
            let minus_minus: Signature = "--".parse().unwrap();
            l3_star()? - count_l_star(2, n, &minus_minus)? * (n + 1)
        }
        3 | 4 => exact_div(l3_star()?, 4, "L*_3(n; σ) / 4"),
        5 | 7 => exact_div(l3_star()?, 2, "L*_3(n; σ) / 2") - weighted_peak_sum(n, |i| i)?,
        6 | 8 => exact_div(l3_star()?, 2, "L*_3(n; σ) / 2") - weighted_peak_sum(n, |i| n - i + 1)?,
        _ => unreachable!(),
    })
}
