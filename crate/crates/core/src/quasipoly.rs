//! Quasipolynomials: one polynomial per residue class modulo a period.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};
use crate::poly::{lcm_up_to, numerator_polynomial, CyclotomicProduct, Polynomial};
use crate::series::{family1_exponents, family3_exponents};

/// `f(n) = residues[n mod period](n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial<T> {
    period: usize,
    residues: Vec<Polynomial<T>>,
}

impl<T: Clone + Num> Quasipolynomial<T> {
    pub fn new(residues: Vec<Polynomial<T>>) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::Unsupported("a quasipolynomial needs at least one residue".into()));
        }
        Ok(Quasipolynomial {
            period: residues.len(),
            residues,
        })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn residues(&self) -> &[Polynomial<T>] {
        &self.residues
    }

    pub fn residue(&self, r: usize) -> &Polynomial<T> {
        &self.residues[r % self.period]
    }

    /// Largest residue degree; `None` when every residue is zero.
    pub fn degree(&self) -> Option<usize> {
        self.residues.iter().filter_map(Polynomial::degree).max()
    }

    /// Smallest divisor `p` of the period with `residues[r] = residues[r mod p]`.
    pub fn minimal_period(&self) -> usize {
        (1..=self.period)
            .filter(|p| self.period.is_multiple_of(*p))
            .find(|&p| (0..self.period).all(|r| self.residues[r] == self.residues[r % p]))
            .unwrap_or(self.period)
    }
}

impl<T: Clone + Num + FromPrimitive> Quasipolynomial<T> {
    pub fn eval(&self, n: usize) -> T {
        let x = T::from_usize(n).expect("index representable in the scalar type");
        self.residue(n).eval(&x)
    }
}

impl fmt::Display for Quasipolynomial<BigRational> {
    /// One line per residue class.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, p) in self.residues.iter().enumerate() {
            writeln!(f, "n = {r} mod {}: {}", self.period, render_rational_poly(p))?;
        }
        Ok(())
    }
}

/// Highest power first with rational coefficients, e.g. `1/72 n^3 + 1/6 n^2 + 2/3 n + 1`.
pub fn render_rational_poly(p: &Polynomial<BigRational>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigRational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show = k == 0 || !mag.is_one();
        if show {
            out.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => out.push_str(if show { " n" } else { "n" }),
            _ => out.push_str(&format!("{}n^{k}", if show { " " } else { "" })),
        }
    }
    out
}

/// Quasipolynomial giving the coefficient of `x^n` in
/// `numerator / (1 − x^ℓ)^m`.
///
/// Expanding `(1 − x^ℓ)^{−m} = Σ_t C(m−1+t, m−1) x^{ℓt}`, the coefficient is
/// `Σ_{s ≡ n} p_s · C(m−1+(n−s)/ℓ, m−1)`; each binomial is a polynomial in
/// `n` of degree `m − 1`, valid for every `n ≥ 0` once `deg p < ℓm`.
pub fn extract(numerator: &Polynomial<BigInt>, ell: usize, m: usize) -> Result<Quasipolynomial<BigRational>> {
    if ell == 0 || m == 0 {
        return Err(Error::Unsupported("period and power must be positive".into()));
    }
    if let Some(d) = numerator.degree() {
        if d >= ell * m {
            return Err(Error::Unsupported(format!(
                "numerator degree {d} is not below {ell}*{m}"
            )));
        }
    }
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut residues = vec![Polynomial::<BigRational>::zero(); ell];
    for (s, coeff) in numerator.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        // ∏_{u=1}^{m-1} (n − s + uℓ) / (uℓ)
        let mut binom = Polynomial::constant(BigRational::from_integer(coeff.clone()));
        for u in 1..m {
            let ul = (u * ell) as i64;
            let factor = Polynomial::new(vec![q(ul - s as i64) / q(ul), q(1) / q(ul)]);
            binom = &binom * &factor;
        }
        let r = s % ell;
        residues[r] = &residues[r] + &binom;
    }
    Quasipolynomial::new(residues)
}

/// Quasipolynomial for the first family on the diagonal `b = a`, with the
/// cyclotomic factorization of its numerator.
pub fn family1_quasipolynomial(a: usize) -> Result<(Quasipolynomial<BigRational>, CyclotomicProduct)> {
    if a == 0 {
        return Err(Error::Unsupported("the a = 0 series is a polynomial".into()));
    }
    let ell = lcm_up_to(a + 1);
    let (num, factors) = numerator_polynomial(&family1_exponents(a), ell, 2 * a)?;
    Ok((extract(&num, ell, 2 * a)?, factors))
}

/// Quasipolynomial for the stable diagonal values of the third family.
pub fn family3_quasipolynomial(a: usize) -> Result<(Quasipolynomial<BigRational>, CyclotomicProduct)> {
    let exps = family3_exponents(a)?;
    let ell = lcm_up_to(a + 1);
    let (num, factors) = numerator_polynomial(&exps, ell, 3 * a - 1)?;
    Ok((extract(&num, ell, 3 * a - 1)?, factors))
}
