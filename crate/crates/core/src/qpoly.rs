//! Integer polynomials in `q` and the q-analogs built from them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intpart::IntegerPartition;

/// Coefficients indexed by the power of `q`, with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// The constant term if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(q^d)`.
    pub fn substitute_power(&self, d: usize) -> QPoly {
        if d == 0 {
            return QPoly::constant(self.at_one());
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        QPoly::new(coeffs)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Quotient and remainder by a divisor whose leading coefficient is `+-1`.
    pub fn div_rem_monic(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.coeffs[dd];
        assert!(lead.abs().is_one(), "divisor must have unit leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = &rem[i] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * dc;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Exact division by any nonzero divisor; fails unless the remainder vanishes.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let dd = divisor.degree().ok_or(Error::InexactDivision)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(QPoly::zero())
            } else {
                Err(Error::InexactDivision)
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (c, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &c * dc;
            }
            quot[i - dd] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(QPoly::new(quot))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers, e.g. `1 + q + 2q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `[r]_q = 1 + q + .. + q^(r-1)`.
pub fn q_int(r: usize) -> QPoly {
    QPoly::new(vec![BigInt::one(); r])
}

/// `[m]!_q`.
pub fn q_factorial(m: usize) -> QPoly {
    (1..=m).fold(QPoly::one(), |acc, r| &acc * &q_int(r))
}

/// The Gaussian binomial `[n choose k]_q`.
pub fn q_binomial(n: usize, k: usize) -> Result<QPoly> {
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    let denom = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n).div_exact(&denom)
}

/// The Gaussian binomial, taken to be zero when `k > n`.
pub fn q_binomial_or_zero(n: usize, k: usize) -> QPoly {
    q_binomial(n, k).unwrap_or_default()
}

/// `Cat_q(n) = [2n choose n]_q / [n+1]_q`.
pub fn q_catalan(n: usize) -> Result<QPoly> {
    q_binomial(2 * n, n)?.div_exact(&q_int(n + 1))
}

/// `Nar_q(n, k) = [n choose k]_q [n choose k-1]_q / [n]_q`, with `Nar_q(0, 0) = 1`.
pub fn q_narayana(n: usize, k: usize) -> Result<QPoly> {
    if n == 0 {
        return Ok(if k == 0 { QPoly::one() } else { QPoly::zero() });
    }
    if k == 0 || k > n {
        return Ok(QPoly::zero());
    }
    let num = &q_binomial(n, k)? * &q_binomial(n, k - 1)?;
    num.div_exact(&q_int(n))
}

/// `q^(k(k-1)) Nar_q(n, k)`.
pub fn q_narayana_shifted(n: usize, k: usize) -> Result<QPoly> {
    Ok(q_narayana(n, k)?.shift(k * k.saturating_sub(1)))
}

/// The polynomial `[k] / ([n-k][n-k+1]) * [n]! / ([k]!^2 [n-2k]!)` attached to
/// noncrossing partitions of `[n]` with `k` blocks and no singletons.
/// It is `1` for `n = k = 0` and zero when no such partition exists.
pub fn flag_poly(n: usize, k: usize) -> Result<QPoly> {
    if n == 0 && k == 0 {
        return Ok(QPoly::one());
    }
    if k == 0 || 2 * k > n {
        return Ok(QPoly::zero());
    }
    let num = &q_int(k) * &q_factorial(n);
    let kf = q_factorial(k);
    let den = &(&(&q_int(n - k) * &q_int(n - k + 1)) * &kf) * &(&kf * &q_factorial(n - 2 * k));
    num.div_exact(&den)
}

/// The q-hook-length polynomial `[n]!_q / prod_h [h]_q`.
pub fn q_hook_length(lambda: &IntegerPartition) -> Result<QPoly> {
    let den = lambda.hooks().iter().fold(QPoly::one(), |acc, &h| &acc * &q_int(h));
    q_factorial(lambda.size()).div_exact(&den)
}

/// The fake degree `f^lambda(q) = q^b(lambda) [n]!_q / prod_h [h]_q`.
pub fn fake_degree(lambda: &IntegerPartition) -> Result<QPoly> {
    Ok(q_hook_length(lambda)?.shift(lambda.b_statistic()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(2, 1).unwrap(), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(4, 2).unwrap(), &p(&[1, 0, 1]) * &p(&[1, 1, 1]));
        assert_eq!(q_binomial(7, 0).unwrap(), QPoly::one());
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn binomial_shape() {
        for n in 0..=10usize {
            for k in 0..=n {
                let b = q_binomial(n, k).unwrap();
                assert_eq!(b.degree(), Some(k * (n - k)));
                assert!(b.is_palindromic());
                let ordinary: u64 = (0..k as u64).fold(1, |a, i| a * (n as u64 - i) / (i + 1));
                assert_eq!(b.at_one(), BigInt::from(ordinary));
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        // [n k] = [n-1 k-1] + q^k [n-1 k]
        for n in 1..=9 {
            for k in 1..n {
                let lhs = q_binomial(n, k).unwrap();
                let rhs = &q_binomial(n - 1, k - 1).unwrap() + &q_binomial(n - 1, k).unwrap().shift(k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn catalan_and_narayana_values() {
        assert_eq!(q_catalan(2).unwrap(), p(&[1, 0, 1]));
        assert_eq!(q_catalan(3).unwrap().at_one(), BigInt::from(5));
        assert_eq!(q_narayana(4, 2).unwrap().at_one(), BigInt::from(6));
        assert_eq!(flag_poly(6, 2).unwrap().at_one(), BigInt::from(9));
        assert_eq!(flag_poly(0, 0).unwrap(), QPoly::one());
        assert!(flag_poly(5, 3).unwrap().is_zero());
    }

    #[test]
    fn flag_poly_is_hook_polynomial() {
        for n in 2..=12 {
            for k in 1..=n / 2 {
                let lambda = IntegerPartition::flag(n, k).unwrap();
                assert_eq!(flag_poly(n, k).unwrap(), q_hook_length(&lambda).unwrap(), "n={n} k={k}");
                assert_eq!(
                    fake_degree(&lambda).unwrap(),
                    flag_poly(n, k).unwrap().shift(lambda.b_statistic())
                );
            }
        }
    }

    #[test]
    fn division() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(p(&[1, 0, 1]).div_exact(&b), Err(Error::InexactDivision));
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])).unwrap(), p(&[1, 2]));
        let (quot, rem) = p(&[5, 0, 0, 1]).div_rem_monic(&p(&[-1, 1]));
        assert_eq!(quot, p(&[1, 1, 1]));
        assert_eq!(rem, p(&[6]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 1, 2, 0, -1]).to_string(), "1 + q + 2q^2 - q^4");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -3]).to_string(), "-3q");
    }

    #[test]
    fn substitution() {
        assert_eq!(p(&[1, 2, 3]).substitute_power(2), p(&[1, 0, 2, 0, 3]));
        assert_eq!(p(&[1, 2, 3]).substitute_power(0), p(&[6]));
        assert_eq!(p(&[1, 2, 3]).eval(&BigInt::from(2)), BigInt::from(17));
    }
}
