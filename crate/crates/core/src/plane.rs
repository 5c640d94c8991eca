//! Plane partitions in boxes, their generating functions, and the
//! convolution identities tying them to the coefficient families.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{box_exponents, inv_product_series, PowerSeries};

/// An `r × s` matrix of non-negative integers, weakly decreasing along rows
/// and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    entries: Vec<Vec<usize>>,
}

impl PlanePartition {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let width = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|row| row.len() != width) {
            return Err(Error::Unsupported("plane partition rows must have equal length".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let left_ok = j == 0 || row[j - 1] >= v;
                let up_ok = i == 0 || entries[i - 1][j] >= v;
                if !left_ok || !up_ok {
                    return Err(Error::Unsupported(format!(
                        "entry ({i},{j}) = {v} breaks the weakly decreasing order"
                    )));
                }
            }
        }
        Ok(PlanePartition { entries })
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn max_entry(&self) -> usize {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Fits in `r` rows, `s` columns and height `t`; trailing zero rows and
    /// columns are ignored.
    pub fn fits(&self, r: usize, s: usize, t: usize) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| v == 0 || (i < r && j < s && v <= t))
        })
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Calls `visit` on every plane partition with `r` rows, `s` columns and
/// entries at most `t`.
pub fn for_each_pp(r: usize, s: usize, t: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    let mut grid = vec![vec![0usize; s]; r];
    fn go(grid: &mut Vec<Vec<usize>>, cell: usize, t: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        let s = grid.first().map_or(0, Vec::len);
        if s == 0 || cell == grid.len() * s {
            visit(grid);
            return;
        }
        let (i, j) = (cell / s, cell % s);
        let mut bound = t;
        if i > 0 {
            bound = bound.min(grid[i - 1][j]);
        }
        if j > 0 {
            bound = bound.min(grid[i][j - 1]);
        }
        for v in 0..=bound {
            grid[i][j] = v;
            go(grid, cell + 1, t, visit);
        }
        grid[i][j] = 0;
    }
    go(&mut grid, 0, t, &mut visit);
}

/// All plane partitions fitting in the box `𝓑(r, s, t)`.
pub fn enumerate_pp(r: usize, s: usize, t: usize) -> std::vec::IntoIter<PlanePartition> {
    let mut out = Vec::new();
    for_each_pp(r, s, t, |g| {
        out.push(PlanePartition {
            entries: g.to_vec(),
        })
    });
    out.into_iter()
}

/// Number of box plane partitions by weight.
pub fn pp_weight_histogram(r: usize, s: usize, t: usize) -> Vec<u64> {
    let mut hist = vec![0u64; r * s * t + 1];
    for_each_pp(r, s, t, |g| hist[g.iter().flatten().sum::<usize>()] += 1);
    hist
}

/// Plane partitions of weight exactly `k` in an `r × s` rectangle, any height.
pub fn count_pp(k: usize, r: usize, s: usize) -> u64 {
    fn go(grid: &mut [Vec<usize>], s: usize, cell: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        if cell == grid.len() * s {
            return 0;
        }
        let (i, j) = (cell / s, cell % s);
        let mut bound = left;
        if i > 0 {
            bound = bound.min(grid[i - 1][j]);
        }
        if j > 0 {
            bound = bound.min(grid[i][j - 1]);
        }
        let mut total = 0;
        for v in (1..=bound).rev() {
            grid[i][j] = v;
            total += go(grid, s, cell + 1, left - v);
        }
        grid[i][j] = 0;
        // A zero here forces zeros in the rest of this row, and a zero in the
        // first column empties every row below.
        if j > 0 {
            total += go(grid, s, (i + 1) * s, left);
        }
        total
    }
    if k == 0 {
        return 1;
    }
    if r == 0 || s == 0 {
        return 0;
    }
    let mut grid = vec![vec![0usize; s]; r];
    go(&mut grid, s, 0, k)
}

/// `∏_{i≤r, j≤s} (1 − x^{i+j+t−1}) / (1 − x^{i+j−1})` up to `x^order`.
pub fn macmahon_series(r: usize, s: usize, t: usize, order: usize) -> PowerSeries<BigInt> {
    let mut series = PowerSeries::one(order);
    for i in 1..=r {
        for j in 1..=s {
            series.div_one_minus_x_pow(i + j - 1);
            series.mul_one_minus_x_pow(i + j + t - 1);
        }
    }
    series
}

/// Generating function of plane partitions in an `r × s` rectangle with no
/// height bound.
pub fn box_series(r: usize, s: usize, order: usize) -> PowerSeries<BigInt> {
    inv_product_series(&box_exponents(r, s), order)
}

/// `Σ_{l=0}^{j} pp(l; 3, a−1) · pp(j−l; 2, 1)`.
pub fn family3_convolution(a: usize, j: usize) -> Result<u64> {
    if a < 2 {
        return Err(Error::Unsupported(format!("convolution needs a >= 2, got {a}")));
    }
    Ok((0..=j).map(|l| count_pp(l, 3, a - 1) * count_pp(j - l, 2, 1)).sum())
}

/// `q_n = Σ_{m≤n} (⌊(n−m)/2⌋ + 1) · r_m`.
pub fn lemma2_transform(r: &[BigInt]) -> Vec<BigInt> {
    (0..r.len())
        .map(|n| {
            (0..=n)
                .map(|m| BigInt::from((n - m) / 2 + 1) * &r[m])
                .sum()
        })
        .collect()
}

/// Inverse of [`lemma2_transform`]: `r_n = q_n − q_{n−1} − q_{n−2} + q_{n−3}`.
pub fn lemma2_inverse(q: &[BigInt]) -> Vec<BigInt> {
    let at = |i: isize| -> BigInt {
        if i < 0 {
            BigInt::from(0)
        } else {
            q[i as usize].clone()
        }
    };
    (0..q.len() as isize)
        .map(|n| at(n) - at(n - 1) - at(n - 2) + at(n - 3))
        .collect()
}
