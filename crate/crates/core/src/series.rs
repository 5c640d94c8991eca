//! Truncated power series and the product expansions behind the family
//! generating functions.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{Num, ToPrimitive};

use crate::error::{Error, Result};

/// Coefficients of `x^0 ..= x^order`; everything above is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> PowerSeries<T> {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Pads with zeros or truncates to the requested order.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    /// Multiplies in place by `1 − x^i`.
    pub fn mul_one_minus_x_pow(&mut self, i: usize) {
        assert!(i > 0);
        for d in (i..self.coeffs.len()).rev() {
            let lower = self.coeffs[d - i].clone();
            self.coeffs[d] = self.coeffs[d].clone() - lower;
        }
    }

    /// Divides in place by `1 − x^i`, i.e. multiplies by `Σ x^{ik}`.
    pub fn div_one_minus_x_pow(&mut self, i: usize) {
        assert!(i > 0);
        for d in i..self.coeffs.len() {
            let lower = self.coeffs[d - i].clone();
            self.coeffs[d] = self.coeffs[d].clone() + lower;
        }
    }

    /// Multiplicative inverse. The constant term must divide every
    /// coefficient produced along the way, which for integers means `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::Unsupported("series with zero constant term is not invertible".into()));
        }
        let mut out = Self::zero(self.order());
        for n in 0..=self.order() {
            let mut acc = if n == 0 { T::one() } else { T::zero() };
            for k in 1..=n {
                acc = acc - self.coeffs[k].clone() * out.coeffs[n - k].clone();
            }
            if !(acc.clone() % c0.clone()).is_zero() {
                return Err(Error::Unsupported("constant term is not a unit".into()));
            }
            out.coeffs[n] = acc / c0.clone();
        }
        Ok(out)
    }

    /// Truncated product, kept at the smaller of the two orders.
    pub fn truncated_mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }
}

impl<T: Clone + Num> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn mul(self, rhs: Self) -> PowerSeries<T> {
        self.truncated_mul(rhs)
    }
}

impl<T: Clone + Num> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;

    fn add(self, rhs: Self) -> PowerSeries<T> {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        }
    }
}

/// Map `i ↦ e_i` describing `∏ (1 − x^i)^{−e_i}`.
pub type ExponentMap = BTreeMap<usize, usize>;

/// Expands `∏_i (1 − x^i)^{−e_i}` up to `x^order`.
pub fn inv_product_series<T: Clone + Num>(exponents: &ExponentMap, order: usize) -> PowerSeries<T> {
    let mut s = PowerSeries::one(order);
    for (&i, &e) in exponents {
        for _ in 0..e {
            s.div_one_minus_x_pow(i);
        }
    }
    s
}

fn bump(map: &mut ExponentMap, i: usize, e: usize) {
    if e > 0 {
        *map.entry(i).or_insert(0) += e;
    }
}

/// Exponents of `1 / ((1−x)(1−x²)²⋯(1−x^a)²(1−x^{a+1}))`; empty for `a = 0`.
pub fn family1_exponents(a: usize) -> ExponentMap {
    let mut map = ExponentMap::new();
    if a == 0 {
        return map;
    }
    bump(&mut map, 1, 1);
    for i in 2..=a {
        bump(&mut map, i, 2);
    }
    bump(&mut map, a + 1, 1);
    map
}

/// Exponents of `1 / ((1−x)²(1−x²)³⋯(1−x^{a−1})³(1−x^a)²(1−x^{a+1}))`.
/// For `a = 1` the box factor is trivial and only `1 / ((1−x)(1−x²))` is left.
pub fn family3_exponents(a: usize) -> Result<ExponentMap> {
    if a == 0 {
        return Err(Error::Unsupported("diagonal series needs a >= 1".into()));
    }
    let mut map = ExponentMap::new();
    if a == 1 {
        bump(&mut map, 1, 1);
        bump(&mut map, 2, 1);
        return Ok(map);
    }
    bump(&mut map, 1, 2);
    for i in 2..a {
        bump(&mut map, i, 3);
    }
    bump(&mut map, a, 2);
    bump(&mut map, a + 1, 1);
    Ok(map)
}

/// Exponents of the generating function of plane partitions fitting in an
/// `r × s` rectangle, grouped by `l = min(r,s)` and `m = max(r,s)`:
/// `∏_{j=l}^{m} (1−x^j)^{−l} ∏_{i=1}^{l−1} (1−x^i)^{−i} (1−x^{m+i})^{−(l−i)}`.
pub fn box_exponents(r: usize, s: usize) -> ExponentMap {
    let (l, m) = (r.min(s), r.max(s));
    let mut map = ExponentMap::new();
    if l == 0 {
        return map;
    }
    for j in l..=m {
        bump(&mut map, j, l);
    }
    for i in 1..l {
        bump(&mut map, i, i);
        bump(&mut map, m + i, l - i);
    }
    map
}

/// Generating function of the first family on the diagonal `b = a`.
pub fn f_series<T: Clone + Num>(a: usize, order: usize) -> PowerSeries<T> {
    inv_product_series(&family1_exponents(a), order)
}

/// Generating function of the stable diagonal values of the third family.
pub fn g_series<T: Clone + Num>(a: usize, order: usize) -> Result<PowerSeries<T>> {
    Ok(inv_product_series(&family3_exponents(a)?, order))
}

/// Plane partitions in a `3 × (a−1)` rectangle; equals `(1−x)(1−x²)` times
/// [`g_series`].
pub fn h_series<T: Clone + Num>(a: usize, order: usize) -> Result<PowerSeries<T>> {
    if a == 0 {
        return Err(Error::Unsupported("H series needs a >= 1".into()));
    }
    Ok(inv_product_series(&box_exponents(3, a - 1), order))
}

/// Converts a coefficient to `u64`, reporting overflow as a scale error.
pub fn coeff_u64<T: ToPrimitive + std::fmt::Display>(c: &T) -> Result<u64> {
    c.to_u64()
        .ok_or_else(|| Error::ScaleExceeded(format!("coefficient {c} does not fit in 64 bits")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ints(s: &PowerSeries<BigInt>) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn expansion_examples() {
        let ones: PowerSeries<BigInt> = inv_product_series(&[(1, 1)].into_iter().collect(), 6);
        assert_eq!(ints(&ones), vec![1; 7]);
        let f1: PowerSeries<BigInt> = inv_product_series(&[(1, 1), (2, 1)].into_iter().collect(), 7);
        assert_eq!(ints(&f1), vec![1, 1, 2, 2, 3, 3, 4, 4]);
        let g2: PowerSeries<BigInt> = inv_product_series(&[(1, 2), (2, 2), (3, 1)].into_iter().collect(), 5);
        assert_eq!(ints(&g2), vec![1, 2, 5, 9, 16, 25]);
        assert_eq!(family1_exponents(1), [(1, 1), (2, 1)].into_iter().collect());
        assert_eq!(family3_exponents(2).unwrap(), [(1, 2), (2, 2), (3, 1)].into_iter().collect());
        assert_eq!(family3_exponents(1).unwrap(), [(1, 1), (2, 1)].into_iter().collect());
        assert!(family3_exponents(0).is_err());
    }

    #[test]
    fn family_series_values() {
        let f2: PowerSeries<BigInt> = f_series(2, 12);
        assert_eq!(f2.coeff(8), BigInt::from(24));
        assert_eq!(ints(&f_series(0, 3)), vec![1, 0, 0, 0]);
        for a in 2..=5 {
            let g: PowerSeries<BigInt> = g_series(a, 3).unwrap();
            assert_eq!(g.coeff(0), BigInt::from(1));
        }
    }

    #[test]
    fn h_is_g_times_two_factors() {
        for a in 1..=5 {
            let mut g: PowerSeries<BigInt> = g_series(a, 60).unwrap();
            g.mul_one_minus_x_pow(1);
            g.mul_one_minus_x_pow(2);
            assert_eq!(g, h_series(a, 60).unwrap(), "a = {a}");
        }
    }

    #[test]
    fn box_exponents_count_cells_by_hook() {
        // ∏_{i≤r, j≤s} 1/(1 − x^{i+j−1}) directly.
        for r in 0..=5 {
            for s in 0..=5 {
                let mut direct = ExponentMap::new();
                for i in 1..=r {
                    for j in 1..=s {
                        bump(&mut direct, i + j - 1, 1);
                    }
                }
                assert_eq!(box_exponents(r, s), direct, "{r}x{s}");
            }
        }
    }

    #[test]
    fn division_undoes_multiplication() {
        let s: PowerSeries<BigInt> = f_series(3, 30);
        let mut t = s.clone();
        t.mul_one_minus_x_pow(4);
        t.div_one_minus_x_pow(4);
        assert_eq!(s, t);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, PowerSeries::one(30));
        let two = PowerSeries::from_coeffs(vec![BigInt::from(2), BigInt::from(1)], 3);
        assert!(two.inverse().is_err());
    }

    #[test]
    fn generic_over_rationals() {
        let q: PowerSeries<BigRational> = f_series(2, 12);
        let z: PowerSeries<BigInt> = f_series(2, 12);
        for n in 0..=12 {
            assert_eq!(q.coeff(n), BigRational::from_integer(z.coeff(n)));
        }
        let sum = &q + &q;
        assert_eq!(sum.coeff(8), BigRational::from_integer(BigInt::from(48)));
    }
}
