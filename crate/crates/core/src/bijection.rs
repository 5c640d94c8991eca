//! Column constructions sending coloured partitions to Kronecker tableaux.
//!
//! Each coloured part becomes a column of height `a + 1` whose top `s` cells
//! are shaded (they belong to `α`) and whose other cells hold their row
//! index unless the part says otherwise. Columns are laid side by side,
//! rows `2..=a+1` are padded out with their row index, and the first row
//! takes whatever content of `ν/α` is left, in increasing order.

use crate::coloured::{alphabet_b, alphabet_c, ColouredPart, ColouredPartition, Decoration};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableaux::{is_kronecker_tableau, KroneckerTableau};

/// `below[t]` is the entry in row `shaded + 1 + t` (1-based rows).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Column {
    shaded: usize,
    below: Vec<usize>,
}

impl Column {
    /// Unshaded cells hold their row index except for the listed overrides.
    fn new(height: usize, shaded: usize, overrides: &[(usize, usize)]) -> Self {
        let mut below: Vec<usize> = (shaded + 1..=height).collect();
        for &(row, value) in overrides {
            below[row - shaded - 1] = value;
        }
        Column { shaded, below }
    }
}

/// `(3k, k^a)`, or the empty partition when `k = 0`.
fn hook_rectangle(a: usize, k: usize, first: usize) -> Result<Partition> {
    let mut parts = vec![first];
    parts.extend(std::iter::repeat_n(k, a));
    Partition::new(parts)
}

/// Lays out `columns` and fills the rest of `λ/α` with content `ν/α`.
fn assemble(
    height: usize,
    mut columns: Vec<Column>,
    lambda: &Partition,
    nu: &Partition,
) -> Result<KroneckerTableau> {
    let width = lambda.part(1);
    if columns.len() > width {
        return Err(Error::Inconsistent(format!(
            "{} columns do not fit in width {width}",
            columns.len()
        )));
    }
    columns.sort_by(|x, y| y.shaded.cmp(&x.shaded).then_with(|| x.below.cmp(&y.below)));
    let alpha_parts: Vec<usize> = (1..=height)
        .map(|r| columns.iter().filter(|c| c.shaded >= r).count())
        .collect();
    let alpha = Partition::new(alpha_parts)?;

    let mut left: Vec<isize> = (0..nu.len())
        .map(|v| nu.part(v) as isize - alpha.part(v) as isize)
        .collect();
    let mut rows = vec![Vec::new(); lambda.len()];
    for r in 2..=lambda.len() {
        for c in alpha.part(r - 1)..lambda.part(r - 1) {
            let value = match columns.get(c) {
                Some(col) => col.below[r - col.shaded - 1],
                None => r,
            };
            rows[r - 1].push(value);
        }
    }
    for &v in rows.iter().skip(1).flatten() {
        match left.get_mut(v - 1) {
            Some(slot) => *slot -= 1,
            None => return Err(Error::Inconsistent(format!("entry {v} exceeds the type length"))),
        }
    }
    if let Some(first) = rows.first_mut() {
        for (v, &count) in left.iter().enumerate() {
            if count < 0 {
                return Err(Error::Inconsistent(format!("value {} used too often", v + 1)));
            }
            first.extend(std::iter::repeat_n(v + 1, count as usize));
        }
    } else if left.iter().any(|&c| c != 0) {
        return Err(Error::Inconsistent("content left over for an empty shape".into()));
    }
    KroneckerTableau::new(lambda.clone(), alpha, rows)
}

fn check_valid(t: KroneckerTableau, lambda: &Partition, nu: &Partition) -> Result<KroneckerTableau> {
    let alpha = t.inner().clone();
    if is_kronecker_tableau(&t, lambda, nu, &alpha)? {
        Ok(t)
    } else {
        Err(Error::Inconsistent(format!("construction produced an invalid tableau\n{t}")))
    }
}

fn family1_column(part: ColouredPart, height: usize) -> Column {
    let a = height - 1;
    match (part.level, part.decoration) {
        (1, _) => Column::new(height, 1, &[(2, 1)]),
        (l, Decoration::Bar) if l <= a => Column::new(height, l, &[(l + 1, 1)]),
        (l, _) => Column::new(height, l, &[]),
    }
}

/// Tableau for the first family: `λ = ν = (3k, k^a)` with `k = |β|`.
pub fn bij_family1(beta: &ColouredPartition, a: usize) -> Result<KroneckerTableau> {
    bij_family2(beta, a, 0)
}

/// Tableau for the second family: `β` plus `i` extra columns with `s`
/// shaded cells for each `s ≤ a`, in the shapes of weight `k + d·i`.
pub fn bij_family2(beta: &ColouredPartition, a: usize, i: usize) -> Result<KroneckerTableau> {
    beta.check_alphabet(&alphabet_b(a)?)?;
    let height = a + 1;
    let k = beta.weight();
    let shifted = k + a * (a + 1) / 2 * i;
    let mut columns: Vec<Column> = beta.parts().iter().map(|&p| family1_column(p, height)).collect();
    for s in 1..=a {
        columns.extend(std::iter::repeat_n(Column::new(height, s, &[]), i));
    }
    let lambda = hook_rectangle(a, shifted, 3 * shifted)?;
    let nu = hook_rectangle(a, shifted + i, 3 * shifted - a * i)?;
    let t = assemble(height, columns, &lambda, &nu)?;
    check_valid(t, &lambda, &nu)
}

fn family3_column(part: ColouredPart, height: usize) -> Column {
    match (part.level, part.decoration) {
        (1, Decoration::Plain) => Column::new(height, 1, &[(2, 1)]),
        (1, _) => Column::new(height, 2, &[(3, 2)]),
        (l, Decoration::Plain) if l < height => Column::new(height, l, &[(l + 1, 1)]),
        (l, Decoration::Bar) => Column::new(height, l, &[]),
        (l, Decoration::DoubleBar) => Column::new(height, l + 1, &[(l + 2, 2)]),
        (l, Decoration::Plain) => Column::new(height, l, &[]),
    }
}

fn family3_shapes(a: usize, k: usize, j: usize) -> Result<(Partition, Partition)> {
    let lambda = hook_rectangle(a, k, 3 * k)?;
    let mut nu = vec![2 * k + j, 2 * k - j];
    nu.extend(std::iter::repeat_n(k, a - 1));
    Ok((lambda, Partition::new(nu)?))
}

/// Tableau for the stable diagonal of the third family: shape `(3k, k^a)/α`
/// and type `(2k+j, 2k−j, k^{a−1})/α` with `j = |β|` and `α ⊢ k`.
pub fn bij_family3(beta: &ColouredPartition, a: usize, k: usize) -> Result<KroneckerTableau> {
    beta.check_alphabet(&alphabet_c(a)?)?;
    let j = beta.weight();
    if k < 2 * j {
        return Err(Error::Unsupported(format!("need k >= 2j, got k = {k}, j = {j}")));
    }
    let height = a + 1;
    let mut columns: Vec<Column> = beta.parts().iter().map(|&p| family3_column(p, height)).collect();
    let taller = beta
        .parts()
        .iter()
        .filter(|p| (p.level == 1 && p.decoration == Decoration::Bar) || p.decoration == Decoration::DoubleBar)
        .count();
    // taller ≤ j ≤ k − j, so this cannot underflow.
    let fillers = k - j - taller;
    columns.extend(std::iter::repeat_n(Column::new(height, 1, &[]), fillers));
    let (lambda, nu) = family3_shapes(a, k, j)?;
    let t = assemble(height, columns, &lambda, &nu)?;
    check_valid(t, &lambda, &nu)
}

/// Reads `β` back from a tableau produced by [`bij_family3`].
pub fn inv_bij_family3(t: &KroneckerTableau, a: usize, k: usize) -> Result<ColouredPartition> {
    if a < 2 {
        return Err(Error::Unsupported("the third family needs a >= 2".into()));
    }
    let height = a + 1;
    let lambda = hook_rectangle(a, k, 3 * k)?;
    if t.outer() != &lambda {
        return Err(Error::ShapeMismatch(format!("outer shape {} is not {lambda}", t.outer())));
    }
    let malformed = |c: usize, why: &str| Error::MalformedTableau(format!("column {}: {why}", c + 1));
    let alpha = t.inner();
    let mut parts = Vec::new();
    for c in 0..k {
        let shaded = (0..height).filter(|&r| alpha.part(r) > c).count();
        let entries: Vec<usize> = (shaded + 1..=height)
            .map(|r| t.rows()[r - 1][c - alpha.part(r - 1)])
            .collect();
        let default_rest = |from: usize| {
            entries[from..]
                .iter()
                .zip(shaded + 1 + from..)
                .all(|(&v, r)| v == r)
        };
        if shaded == 0 {
            if !default_rest(0) {
                return Err(malformed(c, "unshaded column away from the catalogue"));
            }
            continue;
        }
        if shaded == height {
            parts.push(ColouredPart::plain(height));
            continue;
        }
        if !default_rest(1) {
            return Err(malformed(c, "unexpected entries below the first free cell"));
        }
        let part = match (shaded, entries[0]) {
            (1, 2) => None,
            (1, 1) => Some(ColouredPart::plain(1)),
            (2, 2) => Some(ColouredPart::bar(1)),
            (s, 2) => Some(ColouredPart::double_bar(s - 1)),
            (s, 1) => Some(ColouredPart::plain(s)),
            (s, v) if v == s + 1 => Some(ColouredPart::bar(s)),
            _ => return Err(malformed(c, "first free cell holds an unexpected value")),
        };
        parts.extend(part);
    }
    let beta = ColouredPartition::new(parts);
    beta.check_alphabet(&alphabet_c(a)?)
        .map_err(|e| Error::MalformedTableau(e.to_string()))?;
    let (_, nu) = family3_shapes(a, k, beta.weight())?;
    let ty = t.type_shape()?;
    if ty != nu {
        return Err(Error::MalformedTableau(format!("type {ty} does not match β of weight {}", beta.weight())));
    }
    Ok(beta)
}
