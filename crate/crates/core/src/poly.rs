//! Dense univariate polynomials, cyclotomic polynomials and the numerators
//! obtained by clearing `(1 − x^ℓ)^m` from a product series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed};

use crate::error::{Error, Result};
use crate::series::ExponentMap;

/// Coefficients constant-first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// `x − root`
    pub fn linear(root: T) -> Self {
        Polynomial::new(vec![T::zero() - root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every intermediate leading term (always true for monic divisors).
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Unsupported("division by the zero polynomial".into()));
        };
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        for k in (dd..rem.len()).rev() {
            let top = rem[k].clone();
            if top.is_zero() {
                continue;
            }
            if !(top.clone() % lead.clone()).is_zero() {
                return Err(Error::Unsupported("inexact polynomial division".into()));
            }
            let q = top / lead.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = rem[k - dd + i].clone() - q.clone() * d.clone();
            }
            quot[k - dd] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Exact quotient; fails when the remainder is non-zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("polynomial division left a remainder".into()));
        }
        Ok(q)
    }
}

impl<T: Clone + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Clone + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Clone + Num + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    /// Highest power first, e.g. `x^2 - x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str(if show_coeff { "*x" } else { "x" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial, from `x^n − 1` divided by `Φ_d` for
/// every proper divisor `d` of `n`.
pub fn cyclotomic(n: usize) -> Polynomial<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: usize, memo: &mut BTreeMap<usize, Polynomial<BigInt>>) -> Polynomial<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = &Polynomial::monomial(BigInt::one(), n) - &Polynomial::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi = cyclotomic_memo(d, memo);
        p = p.div_exact(&phi).expect("Φ_d divides x^n - 1");
    }
    memo.insert(n, p.clone());
    p
}

/// `sign · ∏_d Φ_d^{e_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicProduct {
    pub sign: i8,
    pub exponents: BTreeMap<usize, usize>,
}

impl CyclotomicProduct {
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|(&d, &e)| totient(d) * e).sum()
    }

    pub fn expand(&self) -> Polynomial<BigInt> {
        let mut memo = BTreeMap::new();
        let mut p = Polynomial::constant(BigInt::from(self.sign));
        for (&d, &e) in &self.exponents {
            p = &p * &cyclotomic_memo(d, &mut memo).pow(e);
        }
        p
    }
}

impl fmt::Display for CyclotomicProduct {
    /// e.g. `Phi2^2 Phi3^3 Phi6^4`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .filter(|(_, &e)| e > 0)
            .map(|(d, e)| if *e == 1 { format!("Phi{d}") } else { format!("Phi{d}^{e}") })
            .collect();
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join(" "))
        }
    }
}

/// Euler's totient, the degree of `Φ_n`.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// `lcm(1, 2, …, n)`
pub fn lcm_up_to(n: usize) -> usize {
    (1..=n).fold(1, |acc, k| acc.lcm(&k))
}

/// The polynomial `(1 − x^ℓ)^m · ∏ (1 − x^i)^{−e_i}` and its cyclotomic
/// factorization.
///
/// Since `1 − x^i = −∏_{d|i} Φ_d`, the exponent of `Φ_d` is
/// `m·[d | ℓ] − Σ_i e_i·[d | i]`; a negative value means the product is not
/// a polynomial and is reported as an inconsistency.
pub fn numerator_polynomial(
    exponents: &ExponentMap,
    ell: usize,
    m: usize,
) -> Result<(Polynomial<BigInt>, CyclotomicProduct)> {
    let top = exponents.keys().copied().max().unwrap_or(0).max(ell);
    let mut out = BTreeMap::new();
    for d in 1..=top {
        let plus = if ell.is_multiple_of(d) { m as i64 } else { 0 };
        let minus: i64 = exponents
            .iter()
            .filter(|(&i, _)| i % d == 0)
            .map(|(_, &e)| e as i64)
            .sum();
        let e = plus - minus;
        if e < 0 {
            return Err(Error::Inconsistent(format!(
                "cyclotomic factor Phi{d} has exponent {e}; (1 - x^{ell})^{m} does not clear the denominator"
            )));
        }
        if e > 0 {
            out.insert(d, e as usize);
        }
    }
    let total: usize = exponents.values().sum();
    let sign = if (m + total).is_multiple_of(2) { 1 } else { -1 };
    let product = CyclotomicProduct { sign, exponents: out };
    Ok((product.expand(), product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{family1_exponents, family3_exponents, inv_product_series, PowerSeries};
    use num_rational::BigRational;

    fn int_poly(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), int_poly(&[1, 0, -1, 0, 1]));
        let prod = (1..=12)
            .filter(|d| 12 % d == 0)
            .fold(Polynomial::one(), |acc, d| &acc * &cyclotomic(d));
        assert_eq!(prod, &Polynomial::monomial(BigInt::one(), 12) - &Polynomial::one());
        for n in 1..=30 {
            assert_eq!(cyclotomic(n).degree(), Some(totient(n)));
        }
    }

    #[test]
    fn arithmetic() {
        let p = int_poly(&[1, 2, 1]);
        let q = int_poly(&[1, 1]);
        assert_eq!(p.div_exact(&q).unwrap(), q);
        assert_eq!(&q * &q, p);
        assert_eq!(&(&p - &p), &Polynomial::zero());
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(16));
        assert!(p.div_exact(&int_poly(&[2, 1])).is_err());
        assert_eq!(format!("{}", cyclotomic(6)), "x^2 - x + 1");
        let r: Polynomial<BigRational> = Polynomial::linear(BigRational::new(1.into(), 2.into()));
        assert_eq!(r.eval(&BigRational::from_integer(1.into())), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn p2_factorization() {
        let (p, f) = numerator_polynomial(&family1_exponents(2), 6, 4).unwrap();
        let expected: BTreeMap<usize, usize> = [(2, 2), (3, 3), (6, 4)].into_iter().collect();
        assert_eq!(f.exponents, expected);
        assert_eq!(f.sign, 1);
        assert_eq!(f.to_string(), "Phi2^2 Phi3^3 Phi6^4");
        assert_eq!(p.degree(), Some(16));
    }

    #[test]
    fn p1_is_one_plus_x() {
        let (p, _) = numerator_polynomial(&family1_exponents(1), 2, 2).unwrap();
        assert_eq!(p, int_poly(&[1, 1]));
    }

    #[test]
    fn numerator_matches_series_product() {
        let mut cases = Vec::new();
        for a in 1..=4 {
            cases.push((family1_exponents(a), lcm_up_to(a + 1), 2 * a));
        }
        for a in 1..=4 {
            cases.push((family3_exponents(a).unwrap(), lcm_up_to(a + 1), 3 * a - 1));
        }
        for (exps, ell, m) in cases {
            let (p, f) = numerator_polynomial(&exps, ell, m).unwrap();
            let mut s: PowerSeries<BigInt> = inv_product_series(&exps, ell * m + 5);
            for _ in 0..m {
                s.mul_one_minus_x_pow(ell);
            }
            assert_eq!(Polynomial::new(s.into_coeffs()), p);
            assert_eq!(f.degree(), p.degree().unwrap());
        }
    }

    #[test]
    fn too_small_power_is_inconsistent() {
        assert!(matches!(
            numerator_polynomial(&family1_exponents(2), 6, 1),
            Err(Error::Inconsistent(_))
        ));
    }
}
