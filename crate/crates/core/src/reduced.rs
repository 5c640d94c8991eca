//! Reduced Kronecker coefficients, evaluated at a point past stabilization.

use std::fmt;

use crate::character::CharacterOracle;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableaux::two_row_multiplicity;

/// Point from which `s_{α[n]} ∗ s_{β[n]}` no longer changes.
pub fn stab(alpha: &Partition, beta: &Partition) -> usize {
    alpha.size() + beta.size() + alpha.first() + beta.first()
}

/// Minimum of the three pairwise [`stab`] values; the padded coefficients
/// are constant from here on.
pub fn stability_threshold(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    stab(alpha, beta).min(stab(alpha, gamma)).min(stab(beta, gamma))
}

/// The `n` at which [`reduced_kron`] evaluates: past the threshold and large
/// enough that all three paddings are partitions.
pub fn evaluation_point(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    [
        stability_threshold(alpha, beta, gamma),
        alpha.padding_threshold(),
        beta.padding_threshold(),
        gamma.padding_threshold(),
    ]
    .into_iter()
    .max()
    .unwrap_or(0)
}

/// Which engine produced a padded coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pathway {
    Characters,
    TwoRowRule,
    /// One padded argument is `(n)`, so the value is `[other two equal]`.
    TrivialFactor,
}

impl fmt::Display for Pathway {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pathway::Characters => "characters",
            Pathway::TwoRowRule => "two-row rule",
            Pathway::TrivialFactor => "trivial factor",
        })
    }
}

/// `g_{α[n] β[n] γ[n]}` together with the pathway used.
///
/// Uses the character oracle when `n` is within its cap, otherwise looks for
/// an argument whose padding has at most two rows and applies the two-row
/// rule to it.
pub fn padded_kron_with_pathway(
    oracle: &CharacterOracle,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
) -> Result<(u64, Pathway)> {
    let padded = [alpha.pad(n)?, beta.pad(n)?, gamma.pad(n)?];
    if n <= oracle.cap() {
        return oracle
            .kronecker(&padded[0], &padded[1], &padded[2])
            .map(|g| (g, Pathway::Characters));
    }
    let tails = [alpha, beta, gamma];
    let mut last_reason = None;
    for pick in 0..3 {
        if tails[pick].len() > 1 {
            continue;
        }
        let others: Vec<&Partition> = (0..3).filter(|&i| i != pick).map(|i| &padded[i]).collect();
        let p = tails[pick].size();
        if p == 0 {
            return Ok((u64::from(others[0] == others[1]), Pathway::TrivialFactor));
        }
        match two_row_multiplicity(n, p, others[0], others[1]) {
            Ok(g) => return Ok((g, Pathway::TwoRowRule)),
            Err(Error::RuleNotApplicable(why)) => last_reason = Some(why),
            Err(e) => return Err(e),
        }
    }
    Err(Error::ScaleExceeded(match last_reason {
        Some(why) => format!("n = {n} is above the oracle cap {} and {why}", oracle.cap()),
        None => format!(
            "n = {n} is above the oracle cap {} and no argument pads to a two-row shape",
            oracle.cap()
        ),
    }))
}

/// `g_{α[n] β[n] γ[n]}`.
pub fn padded_kron(
    oracle: &CharacterOracle,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
) -> Result<u64> {
    padded_kron_with_pathway(oracle, alpha, beta, gamma, n).map(|(g, _)| g)
}

/// The reduced Kronecker coefficient `ḡ^γ_{αβ}`.
pub fn reduced_kron(
    oracle: &CharacterOracle,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<u64> {
    let n = evaluation_point(alpha, beta, gamma);
    padded_kron(oracle, alpha, beta, gamma, n)
}

/// `g_{α[n] β[n] γ[n]}` for every `n` in `lo..=hi`.
pub fn stabilization_sequence(
    oracle: &CharacterOracle,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    lo: usize,
    hi: usize,
) -> Result<Vec<u64>> {
    (lo..=hi)
        .map(|n| padded_kron(oracle, alpha, beta, gamma, n))
        .collect()
}
