//! Kronecker tableaux and the two-row Kronecker product rule.
//!
//! The reverse reading word reads each row right to left, rows top to
//! bottom. Fillings are built row by row; within a row the largest values
//! are placed first, which is exactly reading order, so the lattice
//! condition prunes every partial row.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{contains, is_alpha_lattice, partitions_of, Partition};

/// A filling of the skew shape `outer / inner`. `rows[r]` lists the entries
/// of the skew cells of row `r`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KroneckerTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

impl KroneckerTableau {
    /// Checks only that the rows fit the skew shape and hold positive entries.
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::ShapeMismatch(format!(
                "inner {inner} is not contained in outer {outer}"
            )));
        }
        if rows.len() != outer.len() {
            return Err(Error::MalformedTableau(format!(
                "{} rows given for an outer shape with {} rows",
                rows.len(),
                outer.len()
            )));
        }
        for (r, row) in rows.iter().enumerate() {
            let want = outer.part(r) - inner.part(r);
            if row.len() != want {
                return Err(Error::MalformedTableau(format!(
                    "row {} has {} entries, the shape needs {want}",
                    r + 1,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::MalformedTableau("entries must be positive".into()));
            }
        }
        Ok(KroneckerTableau { outer, inner, rows })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry in row `r`, column `c` (both zero-based), if that cell is skew.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        let lo = self.inner.part(r);
        if c < lo {
            return None;
        }
        self.rows.get(r)?.get(c - lo).copied()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// `content[v - 1]` is the number of entries equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let top = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0; top];
        for &v in self.rows.iter().flatten() {
            counts[v - 1] += 1;
        }
        counts
    }

    /// The type `ν` with `ν / inner` equal to the content.
    pub fn type_shape(&self) -> Result<Partition> {
        let content = self.content();
        let len = content.len().max(self.inner.len());
        Partition::new(
            (0..len)
                .map(|i| self.inner.part(i) + content.get(i).copied().unwrap_or(0))
                .collect(),
        )
    }

    fn is_semistandard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r == 0 {
                continue;
            }
            let lo = self.inner.part(r);
            for (offset, &v) in row.iter().enumerate() {
                if let Some(above) = self.entry(r - 1, lo + offset) {
                    if above >= v {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn count_in_row(&self, r: usize, v: usize) -> usize {
        self.rows.get(r).map_or(0, |row| row.iter().filter(|&&x| x == v).count())
    }
}

impl fmt::Display for KroneckerTableau {
    /// One line per row; `*` marks cells of the inner shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = std::iter::repeat_n("*".to_string(), self.inner.part(r))
                .chain(row.iter().map(|v| v.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn alpha_gap(alpha: &Partition) -> Option<usize> {
    let gap = alpha.part(0) - alpha.part(1);
    (gap > 0).then_some(gap)
}

fn alpha_condition(gap: Option<usize>, rows: &[Vec<usize>]) -> bool {
    let Some(gap) = gap else { return true };
    let count = |r: usize, v: usize| rows.get(r).map_or(0, |row| row.iter().filter(|&&x| x == v).count());
    count(1, 1) == gap || count(0, 2) == gap
}

/// True iff `t` is a Kronecker tableau of shape `λ/α` and type `ν/α`.
pub fn is_kronecker_tableau(
    t: &KroneckerTableau,
    lambda: &Partition,
    nu: &Partition,
    alpha: &Partition,
) -> Result<bool> {
    if t.outer() != lambda || t.inner() != alpha {
        return Err(Error::ShapeMismatch(format!(
            "tableau has shape {}/{}, expected {lambda}/{alpha}",
            t.outer(),
            t.inner()
        )));
    }
    if !contains(alpha, nu) {
        return Err(Error::ShapeMismatch(format!("{alpha} is not contained in the type {nu}")));
    }
    if !t.is_semistandard() {
        return Ok(false);
    }
    let content = t.content();
    let len = content.len().max(nu.len());
    let content_ok = (0..len).all(|i| content.get(i).copied().unwrap_or(0) + alpha.part(i) == nu.part(i));
    if !content_ok || !is_alpha_lattice(&t.reading_word(), alpha) {
        return Ok(false);
    }
    Ok(alpha_gap(alpha).is_none_or(|gap| {
        t.count_in_row(1, 1) == gap || t.count_in_row(0, 2) == gap
    }))
}

/// Backtracking over semistandard fillings of a skew shape with fixed
/// content whose reverse reading word is a `shift`-lattice word.
struct FillingSearch<F> {
    outer: Vec<usize>,
    inner: Vec<usize>,
    /// Indexed by value, `content[0]` unused.
    content: Vec<usize>,
    shift: Vec<usize>,
    gap: Option<usize>,
    used: Vec<usize>,
    rows: Vec<Vec<usize>>,
    visit: F,
}

impl<F: FnMut(&[Vec<usize>])> FillingSearch<F> {
    fn new(
        outer: &Partition,
        inner: &Partition,
        content: &[usize],
        shift: &Partition,
        gap: Option<usize>,
        visit: F,
    ) -> Self {
        let nrows = outer.len();
        let top = content.len();
        let mut padded = vec![0; top + 1];
        padded[1..].copy_from_slice(content);
        FillingSearch {
            outer: outer.parts().to_vec(),
            inner: (0..nrows).map(|r| inner.part(r)).collect(),
            content: padded,
            shift: (0..=top).map(|v| if v == 0 { 0 } else { shift.part(v - 1) }).collect(),
            gap,
            used: vec![0; top + 1],
            rows: (0..nrows).map(|r| vec![0; outer.part(r) - inner.part(r)]).collect(),
            visit,
        }
    }

    fn run(&mut self) {
        self.fill_row(0);
    }

    fn above(&self, r: usize, c: usize) -> Option<usize> {
        if r == 0 || c < self.inner[r - 1] {
            return None;
        }
        Some(self.rows[r - 1][c - self.inner[r - 1]])
    }

    fn fill_row(&mut self, r: usize) {
        let nrows = self.outer.len();
        if r == nrows.min(2) && !alpha_condition(self.gap, &self.rows) {
            return;
        }
        if r == nrows {
            if self.used == self.content {
                (self.visit)(&self.rows);
            }
            return;
        }
        let top = self.content.len() - 1;
        self.place(r, top, 0);
    }

    /// Chooses how many cells of row `r` hold `v`, given that `filled` cells
    /// at the right end already hold larger values.
    fn place(&mut self, r: usize, v: usize, filled: usize) {
        let lo = self.inner[r];
        let hi = self.outer[r];
        let remaining = hi - lo - filled;
        if v == 0 {
            if remaining == 0 {
                self.fill_row(r + 1);
            }
            return;
        }
        let right = hi - filled;
        let block_ok = remaining == 0 || self.above(r, right - 1).is_none_or(|u| u < v);
        let max_x = remaining.min(self.content[v] - self.used[v]);
        for x in 0..=max_x {
            if x > 0 && !block_ok {
                break;
            }
            if v >= 2 && self.used[v] + x + self.shift[v] > self.used[v - 1] + self.shift[v - 1] {
                break;
            }
            let rest = remaining - x;
            if rest > 0 {
                if v == 1 {
                    continue;
                }
                if self.above(r, right - x - 1).is_some_and(|u| u + 1 >= v) {
                    continue;
                }
            }
            for cell in &mut self.rows[r][right - x - lo..right - lo] {
                *cell = v;
            }
            self.used[v] += x;
            self.place(r, v - 1, filled + x);
            self.used[v] -= x;
        }
    }
}

/// `ν_i − α_i` for every row of `ν`, or `None` when `α ⊄ ν`.
fn skew_content(nu: &Partition, alpha: &Partition) -> Option<Vec<usize>> {
    if !contains(alpha, nu) {
        return None;
    }
    Some((0..nu.len()).map(|i| nu.part(i) - alpha.part(i)).collect())
}

/// Calls `visit` on every Kronecker tableau of shape `λ/α` and type `ν/α`.
pub fn for_each_kron_tableau(
    lambda: &Partition,
    nu: &Partition,
    alpha: &Partition,
    mut visit: impl FnMut(&KroneckerTableau),
) {
    if lambda.size() != nu.size() || !contains(alpha, lambda) {
        return;
    }
    let Some(content) = skew_content(nu, alpha) else { return };
    let mut search = FillingSearch::new(lambda, alpha, &content, alpha, alpha_gap(alpha), |rows: &[Vec<usize>]| {
        let t = KroneckerTableau {
            outer: lambda.clone(),
            inner: alpha.clone(),
            rows: rows.to_vec(),
        };
        visit(&t);
    });
    search.run();
}

/// Every Kronecker tableau of shape `λ/α` and type `ν/α`, each exactly once.
pub fn enumerate_kron_tableaux(
    lambda: &Partition,
    nu: &Partition,
    alpha: &Partition,
) -> std::vec::IntoIter<KroneckerTableau> {
    let mut out = Vec::new();
    for_each_kron_tableau(lambda, nu, alpha, |t| out.push(t.clone()));
    out.into_iter()
}

/// Number of Kronecker tableaux of shape `λ/α` and type `ν/α`.
pub fn count_kron_tableaux(lambda: &Partition, nu: &Partition, alpha: &Partition) -> u64 {
    if lambda.size() != nu.size() || !contains(alpha, lambda) {
        return 0;
    }
    let Some(content) = skew_content(nu, alpha) else { return 0 };
    let mut count = 0u64;
    FillingSearch::new(lambda, alpha, &content, alpha, alpha_gap(alpha), |_: &[Vec<usize>]| count += 1).run();
    count
}

/// Number of Littlewood–Richardson fillings of `γ/α` with content `β`.
pub(crate) fn count_lr_fillings(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if !contains(alpha, gamma) || alpha.size() + beta.size() != gamma.size() {
        return 0;
    }
    let mut count = 0u64;
    let empty = Partition::empty();
    FillingSearch::new(gamma, alpha, beta.parts(), &empty, None, |_: &[Vec<usize>]| count += 1).run();
    count
}

/// Multiplicity of `s_ν` in `s_{(n−p,p)} ∗ s_λ`, as a sum of Kronecker
/// tableau counts over `α ⊢ p`.
///
/// Applies when `λ₁ ≥ 2p − 1`, or, through conjugation, when
/// `ℓ(λ) ≥ 2p − 1`; the same conditions on `ν` work by symmetry.
pub fn two_row_multiplicity(n: usize, p: usize, lambda: &Partition, nu: &Partition) -> Result<u64> {
    if p == 0 || n < 2 * p {
        return Err(Error::RuleNotApplicable(format!("need 1 <= p and 2p <= n, got n = {n}, p = {p}")));
    }
    if lambda.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda} and {nu} must both have size {n}")));
    }
    // The multiplicity is symmetric in λ and ν, so either may carry the condition.
    let (lambda, nu) = if lambda.first() + 1 >= 2 * p {
        (lambda.clone(), nu.clone())
    } else if lambda.len() + 1 >= 2 * p {
        (lambda.conjugate(), nu.conjugate())
    } else if nu.first() + 1 >= 2 * p {
        (nu.clone(), lambda.clone())
    } else if nu.len() + 1 >= 2 * p {
        (nu.conjugate(), lambda.conjugate())
    } else {
        return Err(Error::RuleNotApplicable(format!(
            "{lambda} and {nu} both have first part and length below {}",
            2 * p - 1
        )));
    };
    let common = lambda.intersection(&nu);
    let alphas: Vec<Partition> = partitions_of(p, None).filter(|a| contains(a, &common)).collect();
    Ok(alphas.par_iter().map(|a| count_kron_tableaux(&lambda, &nu, a)).sum())
}
