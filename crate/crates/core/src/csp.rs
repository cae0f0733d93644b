//! Cyclic sieving: rotation fixed points against root-of-unity evaluations,
//! together with the polynomial identities behind them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cyclotomic::eval_at_root;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::intpart::IntegerPartition;
use crate::qpoly::{
    fake_degree, flag_poly, q_binomial, q_binomial_or_zero, q_catalan, q_narayana, q_narayana_shifted, QPoly,
};
use crate::report::RunReport;
use crate::repr::{mn_character, CycleType};

/// A rotation-stable family of objects on `[n]` with its sieving polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// All noncrossing partitions of `[n]`.
    Catalan { n: usize },
    /// Noncrossing partitions with `k` blocks.
    Narayana { n: usize, k: usize },
    /// The same family against `q^(k(k-1)) Nar_q(n, k)`.
    NarayanaShifted { n: usize, k: usize },
    /// Noncrossing partitions with `k` blocks and no singletons.
    Flag { n: usize, k: usize },
    /// `k`-element subsets of `[n]`.
    Subsets { n: usize, k: usize },
}

impl Family {
    /// Builds a family from its name and parameters, checking their ranges.
    pub fn from_name(name: &str, n: usize, k: Option<usize>) -> Result<Family> {
        let need_k = || k.ok_or_else(|| Error::InvalidParameters(format!("family {name} needs k")));
        let family = match name {
            "catalan" => Family::Catalan { n },
            "narayana" => Family::Narayana { n, k: need_k()? },
            "narayana-shifted" => Family::NarayanaShifted { n, k: need_k()? },
            "flag" => Family::Flag { n, k: need_k()? },
            "subsets" => Family::Subsets { n, k: need_k()? },
            other => return Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
        };
        family.validate()?;
        Ok(family)
    }

    pub fn n(&self) -> usize {
        match *self {
            Family::Catalan { n }
            | Family::Narayana { n, .. }
            | Family::NarayanaShifted { n, .. }
            | Family::Flag { n, .. }
            | Family::Subsets { n, .. } => n,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(Error::InvalidParameters("n must be positive".into()));
        }
        match *self {
            Family::Narayana { k, .. } | Family::NarayanaShifted { k, .. } | Family::Subsets { k, .. } if k > n => {
                Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")))
            }
            Family::Flag { k, .. } if 2 * k > n => Err(Error::InvalidParameters(format!("2k = {} exceeds n = {n}", 2 * k))),
            _ => Ok(()),
        }
    }

    pub fn polynomial(&self) -> Result<QPoly> {
        match *self {
            Family::Catalan { n } => q_catalan(n),
            Family::Narayana { n, k } => q_narayana(n, k),
            Family::NarayanaShifted { n, k } => q_narayana_shifted(n, k),
            Family::Flag { n, k } => flag_poly(n, k),
            Family::Subsets { n, k } => q_binomial(n, k),
        }
    }

    /// Every valid family with `1 <= n <= max_n`.
    pub fn all_up_to(max_n: usize) -> Vec<Family> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            out.push(Family::Catalan { n });
            for k in 0..=n {
                out.push(Family::Narayana { n, k });
                out.push(Family::NarayanaShifted { n, k });
                out.push(Family::Subsets { n, k });
            }
            for k in 0..=n / 2 {
                out.push(Family::Flag { n, k });
            }
        }
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Catalan { n } => write!(f, "catalan({n})"),
            Family::Narayana { n, k } => write!(f, "narayana({n},{k})"),
            Family::NarayanaShifted { n, k } => write!(f, "narayana-shifted({n},{k})"),
            Family::Flag { n, k } => write!(f, "flag({n},{k})"),
            Family::Subsets { n, k } => write!(f, "subsets({n},{k})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the display form, e.g. `flag(6,2)`.
    fn from_str(s: &str) -> Result<Family> {
        let bad = || Error::Parse {
            position: 0,
            message: format!("expected name(n[,k]), found {s:?}"),
        };
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args: Vec<usize> = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match args.as_slice() {
            [n] => Family::from_name(name, *n, None),
            [n, k] => Family::from_name(name, *n, Some(*k)),
            _ => Err(bad()),
        }
    }
}

fn rotate_mask(mask: u64, n: usize, d: usize) -> u64 {
    let d = d % n;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if d == 0 {
        return mask;
    }
    ((mask << d) | (mask >> (n - d))) & full
}

/// Elements of the family fixed by the `d`-th power of rotation.
pub fn count_fixed(family: Family, d: usize) -> Result<usize> {
    family.validate()?;
    let n = family.n();
    let nc_fixed = |k: Option<usize>, s: Option<usize>| {
        enumerate::nc(n, k, s)
            .iter()
            .filter(|p| p.rotate_by(d % n) == **p)
            .count()
    };
    Ok(match family {
        Family::Catalan { .. } => nc_fixed(None, None),
        Family::Narayana { k, .. } | Family::NarayanaShifted { k, .. } => nc_fixed(Some(k), None),
        Family::Flag { k, .. } => nc_fixed(Some(k), Some(0)),
        Family::Subsets { k, .. } => {
            if n > 63 {
                return Err(Error::InvalidParameters("subsets need n <= 63".into()));
            }
            (0u64..1 << n)
                .filter(|m| m.count_ones() as usize == k && rotate_mask(*m, n, d) == *m)
                .count()
        }
    })
}

/// One row per `d = 0..n-1`: fixed points against `X(zeta_n^d)`.
pub fn verify_csp(family: Family) -> Result<RunReport> {
    let poly = family.polynomial()?;
    let n = family.n();
    let rows: Vec<(usize, usize, Result<BigInt>)> = (0..n)
        .into_par_iter()
        .map(|d| Ok((d, count_fixed(family, d)?, eval_at_root(&poly, n, d))))
        .collect::<Result<_>>()?;
    let mut report = RunReport::new("verify-csp", &["d", "fixed", "X(zeta^d)"])
        .param("family", family)
        .param("X(q)", &poly);
    for (d, fixed, value) in rows {
        match value {
            Ok(v) => {
                let pass = v == BigInt::from(fixed);
                report.push(vec![d.to_string(), fixed.to_string(), v.to_string()], pass);
            }
            Err(e) => report.push(vec![d.to_string(), fixed.to_string(), e.to_string()], false),
        }
    }
    Ok(report)
}

/// `chi^lambda(g^d)` against `f^lambda(zeta^d)` for `g` the long cycle (all `d | n`) and
/// for the `(n-1)`-cycle fixing `n` (all `d | n - 1`).
pub fn springer_check(lambda: &IntegerPartition) -> Result<RunReport> {
    let n = lambda.size();
    let f = fake_degree(lambda)?;
    let mut report = RunReport::new("springer-check", &["element", "d", "class", "chi", "f(zeta^d)"])
        .param("lambda", lambda)
        .param("f(q)", &f);
    let mut check = |label: &str, order: usize, fixed: usize| -> Result<()> {
        for d in (1..=order).filter(|d| order % d == 0) {
            let mut parts = vec![order / d; d];
            parts.extend(std::iter::repeat(1).take(fixed));
            let class = CycleType(IntegerPartition::from_unsorted(parts));
            let chi = mn_character(lambda, &class)?;
            let row = |v: String| vec![label.to_string(), d.to_string(), class.to_string(), chi.to_string(), v];
            match eval_at_root(&f, order, d) {
                Ok(v) => {
                    let pass = v == chi;
                    report.push(row(v.to_string()), pass);
                }
                Err(e) => report.push(row(e.to_string()), false),
            }
        }
        Ok(())
    };
    if n >= 1 {
        check("n-cycle", n, 0)?;
    }
    if n >= 2 {
        check("(n-1)-cycle", n - 1, 1)?;
    }
    Ok(report)
}

/// `[m+n, k] = sum_j q^(j(m-k+j)) [m, k-j] [n, j]`, checked as polynomials.
pub fn chu_vandermonde_check(m: usize, n: usize, k: usize) -> bool {
    let lhs = q_binomial_or_zero(m + n, k);
    let mut rhs = QPoly::zero();
    for j in 0..=k.min(n) {
        if k - j > m {
            continue;
        }
        let shift = j * (m + j - k);
        let term = &q_binomial_or_zero(m, k - j) * &q_binomial_or_zero(n, j);
        rhs = &rhs + &term.shift(shift);
    }
    lhs == rhs
}

/// `sum_k q^(k(k-1)) Nar_q(n, k) = Cat_q(n)`.
pub fn catalan_summation_identity(n: usize) -> Result<bool> {
    let mut sum = QPoly::zero();
    for k in 0..=n {
        sum = &sum + &q_narayana_shifted(n, k)?;
    }
    Ok(sum == q_catalan(n)?)
}

/// `sum_s q^((k-s-1)(k-s)) [n, s] flag(n-s, k-s) = Nar_q(n, k)`, stratifying by singletons.
pub fn narayana_summation_identity(n: usize, k: usize) -> Result<bool> {
    let mut sum = QPoly::zero();
    for s in 0..=k.min(n) {
        let j = k - s;
        let shift = j * j.saturating_sub(1);
        let term = &q_binomial(n, s)? * &flag_poly(n - s, j)?;
        sum = &sum + &term.shift(shift);
    }
    Ok(sum == q_narayana(n, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_examples() {
        assert_eq!(count_fixed(Family::Catalan { n: 4 }, 1).unwrap(), 2);
        assert_eq!(count_fixed(Family::Catalan { n: 4 }, 4).unwrap(), 14);
        assert_eq!(count_fixed(Family::Subsets { n: 4, k: 2 }, 2).unwrap(), 2);
        assert_eq!(count_fixed(Family::Subsets { n: 4, k: 2 }, 0).unwrap(), 6);
    }

    #[test]
    fn subset_fixed_points_by_brute_force() {
        for n in 1..=8usize {
            for k in 0..=n {
                for d in 0..n {
                    let subsets: Vec<Vec<usize>> = (0u32..1 << n)
                        .filter(|m| m.count_ones() as usize == k)
                        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                        .collect();
                    let fixed = subsets
                        .iter()
                        .filter(|s| {
                            let mut r: Vec<usize> = s.iter().map(|x| (x + d) % n).collect();
                            r.sort();
                            &r == *s
                        })
                        .count();
                    assert_eq!(count_fixed(Family::Subsets { n, k }, d).unwrap(), fixed);
                }
            }
        }
    }

    #[test]
    fn csp_examples() {
        for family in [
            Family::Catalan { n: 4 },
            Family::Narayana { n: 6, k: 3 },
            Family::Flag { n: 6, k: 2 },
            Family::Flag { n: 8, k: 3 },
        ] {
            let r = verify_csp(family).unwrap();
            assert!(r.passed(), "{}", r.render());
            assert_eq!(r.rows.len(), family.n());
        }
    }

    #[test]
    fn large_shift_is_not_integral() {
        let p = q_narayana(3, 1).unwrap().shift(2);
        assert_eq!(eval_at_root(&p, 3, 1).unwrap_err(), Error::NonIntegerValue { order: 3 });
    }

    #[test]
    fn family_parsing() {
        assert_eq!("flag(6,2)".parse::<Family>().unwrap(), Family::Flag { n: 6, k: 2 });
        assert_eq!("catalan(5)".parse::<Family>().unwrap(), Family::Catalan { n: 5 });
        assert!("flag(4,3)".parse::<Family>().is_err());
        assert!("narayana(4)".parse::<Family>().is_err());
        assert!(Family::from_name("bogus", 3, None).is_err());
    }

    #[test]
    fn springer_examples() {
        let trivial = IntegerPartition::new(vec![5]).unwrap();
        let r = springer_check(&trivial).unwrap();
        assert!(r.passed());
        assert!(r.rows.iter().all(|row| row.cells[3] == "1" && row.cells[4] == "1"));
        let sign = IntegerPartition::new(vec![1; 6]).unwrap();
        assert!(springer_check(&sign).unwrap().passed());
        let flag = IntegerPartition::flag(6, 2).unwrap();
        assert!(springer_check(&flag).unwrap().passed());
    }

    #[test]
    fn chu_small() {
        assert!(chu_vandermonde_check(1, 1, 1));
        assert!(chu_vandermonde_check(3, 4, 0));
        assert!(chu_vandermonde_check(2, 3, 4));
        assert!(chu_vandermonde_check(0, 0, 0));
    }

    #[test]
    fn summation_identities_small() {
        for n in 1..=6 {
            assert!(catalan_summation_identity(n).unwrap());
            for k in 0..=n {
                assert!(narayana_summation_identity(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }
}
