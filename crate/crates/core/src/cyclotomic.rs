//! Exact arithmetic in `Z[q] / Phi_m(q)`, used to evaluate polynomials at roots of unity.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// The `m`-th cyclotomic polynomial, `(q^m - 1) / prod_{d | m, d < m} Phi_d(q)`.
pub fn cyclotomic_poly(m: usize) -> QPoly {
    assert!(m >= 1, "cyclotomic polynomials start at m = 1");
    static CACHE: OnceLock<Mutex<HashMap<usize, QPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache poisoned").get(&m) {
        return p.clone();
    }
    let mut num = QPoly::monomial(m);
    num = &num - &QPoly::one();
    for d in (1..m).filter(|d| m % d == 0) {
        num = num
            .div_exact(&cyclotomic_poly(d))
            .expect("q^m - 1 is divisible by Phi_d for d | m");
    }
    cache.lock().expect("cache poisoned").insert(m, num.clone());
    num
}

/// Euler's totient, the degree of `Phi_m`.
pub fn totient(m: usize) -> usize {
    (1..=m).filter(|&k| k.gcd(&m) == 1).count()
}

/// A value of `Z[zeta_m]` stored as a residue of degree below `phi(m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicInteger {
    m: usize,
    residue: QPoly,
}

impl CyclotomicInteger {
    /// The image of `p(q)` under `q -> zeta_m`.
    pub fn from_poly(m: usize, p: &QPoly) -> Self {
        let (_, residue) = p.div_rem_monic(&cyclotomic_poly(m));
        CyclotomicInteger { m, residue }
    }

    /// `zeta_m^d`.
    pub fn root_power(m: usize, d: usize) -> Self {
        CyclotomicInteger::from_poly(m, &QPoly::monomial(d % m))
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn residue(&self) -> &QPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.residue.as_constant()
    }

    pub fn mul(&self, other: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.m, other.m);
        CyclotomicInteger::from_poly(self.m, &(&self.residue * &other.residue))
    }

    pub fn add(&self, other: &CyclotomicInteger) -> CyclotomicInteger {
        assert_eq!(self.m, other.m);
        CyclotomicInteger::from_poly(self.m, &(&self.residue + &other.residue))
    }
}

/// `p(zeta_m^d)` for a primitive `m`-th root of unity `zeta_m`.
///
/// `zeta_m^d` is a primitive `e`-th root with `e = m / gcd(m, d)`, so the value is the
/// residue of `p` modulo `Phi_e`. A non-constant residue is an irrational value.
pub fn eval_at_root(p: &QPoly, m: usize, d: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidParameters("root order must be positive".into()));
    }
    let e = m / m.gcd(&d);
    CyclotomicInteger::from_poly(e, p)
        .as_integer()
        .ok_or(Error::NonIntegerValue { order: e })
}

/// The same value computed through `p(q^d)` reduced modulo `Phi_m`.
pub fn eval_at_root_by_substitution(p: &QPoly, m: usize, d: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidParameters("root order must be positive".into()));
    }
    CyclotomicInteger::from_poly(m, &p.substitute_power(d))
        .as_integer()
        .ok_or(Error::NonIntegerValue { order: m / m.gcd(&d) })
}

/// Whether `p` vanishes at `zeta_m^d`.
pub fn vanishes_at_root(p: &QPoly, m: usize, d: usize) -> bool {
    let e = m / m.gcd(&d);
    CyclotomicInteger::from_poly(e, p).is_zero()
}
