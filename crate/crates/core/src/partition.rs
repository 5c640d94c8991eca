//! Integer partitions, skew shapes and lattice-word predicates.
//!
//! Partitions are stored without trailing zeros; every componentwise
//! comparison pads the shorter one with zeros. The textual form is the
//! comma-separated list of parts (`"5,3,2,1"`), the empty partition is `""`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails when the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(part^count)`, the rectangle with `count` rows of length `part`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition(vec![part; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-indexed part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// `α[n] = (n - |α|, α₁, α₂, …)`; defined when `n ≥ |α| + α₁`.
    pub fn pad(&self, n: usize) -> Result<Partition> {
        let needed = self.padding_threshold();
        if n < needed {
            return Err(Error::PaddingBelowThreshold {
                partition: self.to_string(),
                n,
                needed,
            });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n - self.size());
        parts.extend_from_slice(&self.0);
        Partition::new(parts)
    }

    /// Smallest `n` for which [`Partition::pad`] succeeds.
    pub fn padding_threshold(&self) -> usize {
        self.size() + self.first()
    }

    /// Removes the first part (inverse of padding).
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// `s·λ`, every part multiplied by `s`.
    pub fn stretch(&self, s: usize) -> Partition {
        if s == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * s).collect())
    }

    /// Componentwise `self ⊆ outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        contains(self, outer)
    }

    /// Componentwise minimum `λ ∩ μ`.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let parts = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        Partition(parts)
    }

    /// Multiplicity of each part size, indexed by size (`m[0]` unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Centralizer order `∏ i^{m_i} m_i!` of the conjugacy class of cycle type `self`.
    pub fn z_weight(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for j in 1..=m {
                z *= BigUint::from(i) * BigUint::from(j);
            }
        }
        z
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn dimension(&self) -> BigUint {
        let conj = self.conjugate();
        let mut num = BigUint::one();
        for k in 2..=self.size() {
            num *= BigUint::from(k);
        }
        let mut hooks = BigUint::one();
        for (r, &row) in self.0.iter().enumerate() {
            for c in 0..row {
                let hook = (row - c) + (conj.part(c) - r) - 1;
                hooks *= BigUint::from(hook);
            }
        }
        num / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand used heavily in tests: panics on an invalid sequence.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// `inner[i] ≤ outer[i]` for all `i`, missing parts read as zero.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::ShapeMismatch(format!(
                "inner {inner} is not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of row `r` lie in columns `inner[r]..outer[r]`.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// True iff every prefix of `word` satisfies
/// `#i + α_i ≥ #(i+1) + α_{i+1}` for all `i ≥ 1`.
///
/// Letters are positive integers. With `α = ()` this is the classical
/// lattice (Yamanouchi) condition.
pub fn is_alpha_lattice(word: &[usize], alpha: &Partition) -> bool {
    let top = word.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0usize; top + 2];
    for &w in word {
        if w == 0 {
            return false;
        }
        counts[w] += 1;
        // Only the pair (w-1, w) can break when a `w` is appended.
        if w >= 2 && counts[w - 1] + alpha.part(w - 2) < counts[w] + alpha.part(w - 1) {
            return false;
        }
    }
    true
}

/// Iterator over the partitions of `n` in reverse lexicographic order,
/// optionally restricted to at most `max_length` parts.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    max_length: usize,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        self.current = successor(&current, self.max_length);
        Some(Partition(current))
    }
}

fn successor(parts: &[usize], max_length: usize) -> Option<Vec<usize>> {
    let mut tail_sum = 0;
    for i in (0..parts.len()).rev() {
        let v = parts[i];
        if v > 1 {
            let smaller = v - 1;
            let remainder = tail_sum + 1;
            let slots = max_length - i - 1;
            if remainder <= smaller * slots {
                let mut next = parts[..i].to_vec();
                next.push(smaller);
                let mut left = remainder;
                while left > 0 {
                    let p = left.min(smaller);
                    next.push(p);
                    left -= p;
                }
                return Some(next);
            }
        }
        tail_sum += v;
    }
    None
}

/// All partitions of `n`, largest first part first (reverse lexicographic).
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Partitions {
    let max_length = max_length.unwrap_or(n);
    let current = if n == 0 {
        Some(Vec::new())
    } else if max_length == 0 {
        None
    } else {
        Some(vec![n])
    };
    Partitions {
        current,
        max_length,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part![5, 3, 2, 1].conjugate(), part![4, 3, 2, 1, 1]);
    }

    #[test]
    fn conjugate_is_involution_up_to_20() {
        for n in 0..=20 {
            for p in partitions_of(n, None) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn pad_examples() {
        assert_eq!(part![2, 2].pad(12).unwrap(), part![8, 2, 2]);
        assert_eq!(Partition::empty().pad(5).unwrap(), part![5]);
        assert!(matches!(
            part![3, 1].pad(6),
            Err(Error::PaddingBelowThreshold { needed: 7, .. })
        ));
        assert_eq!(Partition::empty().pad(0).unwrap(), Partition::empty());
    }

    #[test]
    fn pad_yields_partition_of_n() {
        for m in 0..=8 {
            for alpha in partitions_of(m, None) {
                for n in alpha.padding_threshold()..alpha.padding_threshold() + 5 {
                    let p = alpha.pad(n).unwrap();
                    assert_eq!(p.size(), n);
                    assert_eq!(p.tail(), alpha);
                }
            }
        }
    }

    #[test]
    fn contains_examples() {
        assert!(contains(&part![3, 1], &part![5, 3, 2, 1]));
        assert!(contains(&Partition::empty(), &part![2]));
        assert!(contains(&Partition::empty(), &Partition::empty()));
        assert!(!contains(&part![2, 2], &part![3, 1]));
        assert!(!contains(&part![1, 1, 1], &part![3, 1]));
    }

    #[test]
    fn lattice_examples() {
        // Reverse reading word of the (3,1) Kronecker tableau of shape
        // (5,3,2,1)/(3,1): rows [2,2], [1,3], [1,2], [3].
        let word = [2, 2, 3, 1, 2, 1, 3];
        assert!(is_alpha_lattice(&word, &part![3, 1]));
        assert!(!is_alpha_lattice(&word, &Partition::empty()));
        assert!(is_alpha_lattice(&[], &part![4, 2]));
        assert!(!is_alpha_lattice(&[2], &Partition::empty()));
        assert!(is_alpha_lattice(&[2], &part![1]));
    }

    #[test]
    fn z_weight_examples() {
        assert_eq!(part![1, 1, 1].z_weight(), BigUint::from(6u32));
        assert_eq!(part![3].z_weight(), BigUint::from(3u32));
        assert_eq!(part![2, 1].z_weight(), BigUint::from(2u32));
        assert_eq!(part![2, 2, 1].z_weight(), BigUint::from(8u32));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=10usize {
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            let total: BigUint = partitions_of(n, None)
                .map(|rho| &fact / rho.z_weight())
                .sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0, None).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(partitions_of(4, None).count(), 5);
        assert_eq!(partitions_of(12, Some(6)).count(), 58);
        assert_eq!(partitions_of(3, Some(0)).count(), 0);
        let p4: Vec<String> = partitions_of(4, None).map(|p| p.to_string()).collect();
        assert_eq!(p4, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    /// Independent count of partitions of `n` into at most `k` parts.
    fn brute_count(n: usize, k: usize, max_part: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        (1..=max_part.min(n)).map(|p| brute_count(n - p, k - 1, p)).sum()
    }

    #[test]
    fn bounded_counts_match_brute_force() {
        for n in 0..=16 {
            for k in 0..=n + 1 {
                let got: Vec<_> = partitions_of(n, Some(k)).collect();
                assert_eq!(got.len(), brute_count(n, k, n), "n={n} k={k}");
                assert!(got.windows(2).all(|w| w[0] > w[1]));
                assert!(got.iter().all(|p| p.len() <= k && p.size() == n));
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let p: Partition = "5,3,2,1".parse().unwrap();
        assert_eq!(p, part![5, 3, 2, 1]);
        assert_eq!(p.to_string(), "5,3,2,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn dimension_by_hooks() {
        assert_eq!(part![2, 1].dimension(), BigUint::from(2u32));
        assert_eq!(part![3, 2].dimension(), BigUint::from(5u32));
        assert_eq!(Partition::empty().dimension(), BigUint::from(1u32));
    }

    /// Classical lattice condition, written directly: in every prefix the
    /// number of `i`s is at least the number of `i+1`s.
    fn classical_lattice(word: &[usize]) -> bool {
        let mut counts = [0usize; 8];
        for &w in word {
            counts[w] += 1;
            for i in 1..7 {
                if counts[i] < counts[i + 1] {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn empty_alpha_is_classical_lattice(word in prop::collection::vec(1usize..=5, 0..=12)) {
            prop_assert_eq!(is_alpha_lattice(&word, &Partition::empty()), classical_lattice(&word));
        }
    }
}
