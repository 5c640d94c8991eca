//! The three families of reduced Kronecker coefficients indexed by
//! rectangles and near-rectangles, with the checks on stretching and growth.
//!
//! On their distinguished diagonals the values come from generating
//! functions; everywhere else they go through [`reduced_kron`].

use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::character::CharacterOracle;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::reduced::reduced_kron;
use crate::series::{coeff_u64, f_series, g_series, PowerSeries};

fn rect(part: usize, count: usize) -> Partition {
    Partition::rectangle(part, count)
}

fn one_row(k: usize) -> Partition {
    rect(k, 1)
}

/// `[x^k] F_a`.
pub fn f_coeff(a: usize, k: usize) -> Result<u64> {
    let s: PowerSeries<BigInt> = f_series(a, k);
    coeff_u64(&s.coeff(k))
}

/// `ḡ^{(k)}_{(k^a),(k^b)}`.
pub fn family1(oracle: &CharacterOracle, a: usize, b: usize, k: usize) -> Result<u64> {
    if a == b {
        return f_coeff(a, k);
    }
    family1_via_kron(oracle, a, b, k)
}

/// [`family1`] without the generating-function shortcut.
pub fn family1_via_kron(oracle: &CharacterOracle, a: usize, b: usize, k: usize) -> Result<u64> {
    reduced_kron(oracle, &rect(k, a), &rect(k, b), &one_row(k))
}

/// `ḡ^{(k)}_{((k+i)^a),(k^b)}`.
pub fn family2(oracle: &CharacterOracle, a: usize, b: usize, k: usize, i: usize) -> Result<u64> {
    if a == b {
        let shift = a * (a + 1) / 2 * i;
        return match k.checked_sub(shift) {
            Some(rest) => f_coeff(a, rest),
            None => Ok(0),
        };
    }
    family2_via_kron(oracle, a, b, k, i)
}

/// [`family2`] without the generating-function shortcut.
pub fn family2_via_kron(oracle: &CharacterOracle, a: usize, b: usize, k: usize, i: usize) -> Result<u64> {
    reduced_kron(oracle, &rect(k + i, a), &rect(k, b), &one_row(k))
}

fn family3_args(a: usize, b: usize, k: usize, i: usize) -> Result<(Partition, Partition)> {
    if a == 0 || b == 0 {
        return Err(Error::Unsupported(format!("the third family needs a, b >= 1, got a = {a}, b = {b}")));
    }
    let mut second = vec![k + i];
    second.extend(std::iter::repeat_n(k, a - 1));
    Ok((rect(k, b - 1), Partition::new(second)?))
}

/// `ḡ^{(k)}_{(k^{b−1}),(k+i,k^{a−1})}`.
///
/// With `b = a + 1` this is the table whose diagonals `i = k − j` settle
/// at [`diag_stable`] once `k ≥ 2j`.
pub fn family3(oracle: &CharacterOracle, a: usize, b: usize, k: usize, i: usize) -> Result<u64> {
    if a >= 1 && b == a + 1 && i <= k && k >= 2 * (k - i) {
        return diag_stable(a, k - i);
    }
    family3_via_kron(oracle, a, b, k, i)
}

/// [`family3`] without the stable-diagonal shortcut.
pub fn family3_via_kron(oracle: &CharacterOracle, a: usize, b: usize, k: usize, i: usize) -> Result<u64> {
    let (first, second) = family3_args(a, b, k, i)?;
    reduced_kron(oracle, &first, &second, &one_row(k))
}

/// `[x^j] G_a`, the stable value of the `j`-th diagonal of the third family.
pub fn diag_stable(a: usize, j: usize) -> Result<u64> {
    let s: PowerSeries<BigInt> = g_series(a, j)?;
    coeff_u64(&s.coeff(j))
}

/// Which sequence a saturation or growth check looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyId {
    /// First family on its diagonal `b = a`.
    First,
    /// Second family on `b = a` with the given `i`.
    Second { i: usize },
    /// Stable diagonal values of the third family.
    ThirdDiagonal,
}

/// `value(a, k)` for the chosen family; `k` plays the role of `j` for the
/// third family.
pub fn family_value(oracle: &CharacterOracle, family: FamilyId, a: usize, k: usize) -> Result<u64> {
    match family {
        FamilyId::First => family1(oracle, a, a, k),
        FamilyId::Second { i } => family2(oracle, a, a, k, i),
        FamilyId::ThirdDiagonal => diag_stable(a, k),
    }
}

/// True iff the coefficient stays positive when every index partition is
/// stretched by `s = 1..=s_max`.
pub fn saturation_check(
    oracle: &CharacterOracle,
    family: FamilyId,
    a: usize,
    k: usize,
    s_max: usize,
) -> Result<bool> {
    if s_max == 0 {
        return Err(Error::Unsupported("s_max must be positive".into()));
    }
    for s in 1..=s_max {
        let value = match family {
            FamilyId::Second { i } => family2(oracle, a, a, s * k, s * i)?,
            other => family_value(oracle, other, a, s * k)?,
        };
        if value == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The parameter that moves in a growth check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sweep {
    /// Fix `a`, let `k` run over the range.
    OverK { a: usize },
    /// Fix `k`, let `a` run over the range.
    OverA { k: usize },
}

/// Family values along a sweep.
pub fn family_sequence(
    oracle: &CharacterOracle,
    family: FamilyId,
    sweep: Sweep,
    range: RangeInclusive<usize>,
) -> Result<Vec<u64>> {
    range
        .map(|t| match sweep {
            Sweep::OverK { a } => family_value(oracle, family, a, t),
            Sweep::OverA { k } => family_value(oracle, family, t, k),
        })
        .collect()
}

/// True iff the sequence along `sweep` is weakly increasing.
pub fn monotonicity_check(
    oracle: &CharacterOracle,
    family: FamilyId,
    sweep: Sweep,
    range: RangeInclusive<usize>,
) -> Result<bool> {
    let values = family_sequence(oracle, family, sweep, range)?;
    Ok(values.windows(2).all(|w| w[0] <= w[1]))
}
