//! Sparse integer combinations of noncrossing partitions: elements of `V(n)`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::SetPartition;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCVector {
    n: usize,
    terms: BTreeMap<SetPartition, BigInt>,
}

impl NCVector {
    pub fn zero(n: usize) -> Self {
        NCVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of a noncrossing partition.
    pub fn basis(pi: &SetPartition) -> Result<Self> {
        NCVector::term(pi, BigInt::one())
    }

    pub fn term(pi: &SetPartition, coef: impl Into<BigInt>) -> Result<Self> {
        if !pi.is_noncrossing() {
            return Err(Error::NotNoncrossing(pi.to_string()));
        }
        let mut v = NCVector::zero(pi.n());
        v.add_unchecked(pi.clone(), coef.into());
        Ok(v)
    }

    /// Builds a vector from `(coefficient, partition)` pairs, summing repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, SetPartition)>,
    {
        let mut v = NCVector::zero(n);
        for (c, pi) in terms {
            v.add_term(pi, c)?;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, pi: &SetPartition) -> BigInt {
        self.terms.get(pi).cloned().unwrap_or_default()
    }

    /// Terms in canonical partition order.
    pub fn iter(&self) -> btree_map::Iter<'_, SetPartition, BigInt> {
        self.terms.iter()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &SetPartition> {
        self.terms.keys()
    }

    /// Adds `coef * pi`, checking that `pi` is a noncrossing partition of `[n]`.
    pub fn add_term(&mut self, pi: SetPartition, coef: BigInt) -> Result<()> {
        if pi.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: pi.n(),
            });
        }
        if !pi.is_noncrossing() {
            return Err(Error::NotNoncrossing(pi.to_string()));
        }
        self.add_unchecked(pi, coef);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, pi: SetPartition, coef: BigInt) {
        debug_assert_eq!(pi.n(), self.n);
        debug_assert!(pi.is_noncrossing(), "{pi} is crossing");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(pi) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `scale * other`.
    pub fn add_scaled(&mut self, other: &NCVector, scale: &BigInt) {
        assert_eq!(self.n, other.n, "vectors over different ground sets");
        if scale.is_zero() {
            return;
        }
        for (pi, c) in &other.terms {
            self.add_unchecked(pi.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &BigInt) -> NCVector {
        let mut out = NCVector::zero(self.n);
        out.add_scaled(self, scale);
        out
    }

    /// If the vector is `c * pi` for a single partition, returns `(c, pi)`.
    pub fn as_single_term(&self) -> Option<(&BigInt, &SetPartition)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(p, c)| (c, p))
        } else {
            None
        }
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<F>(&self, mut f: F) -> Result<NCVector>
    where
        F: FnMut(&SetPartition) -> Result<NCVector>,
    {
        let mut out = NCVector::zero(self.n);
        for (pi, c) in &self.terms {
            out.add_scaled(&f(pi)?, c);
        }
        Ok(out)
    }

    /// JSON form: a list of `{"coef": .., "blocks": [[..], ..]}` objects.
    /// Coefficients that fit in an `i64` are numbers, larger ones are decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(pi, c)| {
                    let coef = match c.to_i64() {
                        Some(x) => json!(x),
                        None => json!(c.to_string()),
                    };
                    json!({ "coef": coef, "blocks": pi.blocks() })
                })
                .collect(),
        )
    }

    /// Inverse of [`NCVector::to_json`]; `n` is needed for the empty vector.
    pub fn from_json(n: usize, value: &Value) -> Result<NCVector> {
        let bad = |m: &str| Error::Parse {
            position: 0,
            message: m.to_string(),
        };
        let items = value.as_array().ok_or_else(|| bad("expected a JSON array"))?;
        let mut v = NCVector::zero(n);
        for item in items {
            let coef = match item.get("coef") {
                Some(Value::Number(x)) => x
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("coefficient is not an integer"))?,
                Some(Value::String(s)) => s
                    .parse::<BigInt>()
                    .map_err(|_| bad("coefficient is not an integer"))?,
                _ => return Err(bad("missing coef")),
            };
            let blocks: Vec<Vec<usize>> = item
                .get("blocks")
                .cloned()
                .ok_or_else(|| bad("missing blocks"))
                .and_then(|b| serde_json::from_value(b).map_err(|e| bad(&e.to_string())))?;
            v.add_term(SetPartition::new(n, &blocks)?, coef)?;
        }
        Ok(v)
    }

    /// Parses the text format, one `"<signed integer> * <partition>"` per line.
    /// A lone `0` or empty input is the zero vector, which needs `n` supplied.
    pub fn parse(s: &str, n: Option<usize>) -> Result<NCVector> {
        let mut terms = Vec::new();
        let mut offset = 0;
        for line in s.split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let body = line.trim();
            if body.is_empty() || body == "0" {
                continue;
            }
            let star = body.find('*').ok_or(Error::Parse {
                position: start,
                message: "expected \"<coefficient> * <partition>\"".into(),
            })?;
            let lead = line.len() - line.trim_start().len();
            let coef_text = body[..star].trim();
            let coef = coef_text
                .strip_prefix('+')
                .unwrap_or(coef_text)
                .parse::<BigInt>()
                .map_err(|_| Error::Parse {
                    position: start + lead,
                    message: format!("bad coefficient {coef_text:?}"),
                })?;
            let pi = SetPartition::parse(&body[star + 1..]).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: start + lead + star + 1 + position,
                    message,
                },
                other => other,
            })?;
            terms.push((coef, pi));
        }
        let n = match (n, terms.first()) {
            (Some(n), _) => n,
            (None, Some((_, pi))) => pi.n(),
            (None, None) => {
                return Err(Error::Parse {
                    position: 0,
                    message: "cannot infer n for an empty vector".into(),
                })
            }
        };
        NCVector::from_terms(n, terms)
    }
}

impl fmt::Display for NCVector {
    /// One term per line in canonical order; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pi, c) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            if c.sign() == num_bigint::Sign::Minus {
                write!(f, "{c} * {pi}")?;
            } else {
                write!(f, "+{c} * {pi}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for NCVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NCVector::parse(s, None)
    }
}

impl Neg for NCVector {
    type Output = NCVector;

    fn neg(mut self) -> NCVector {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&NCVector> for NCVector {
    fn add_assign(&mut self, rhs: &NCVector) {
        self.add_scaled(rhs, &BigInt::one());
    }
}

impl SubAssign<&NCVector> for NCVector {
    fn sub_assign(&mut self, rhs: &NCVector) {
        self.add_scaled(rhs, &-BigInt::one());
    }
}

impl Add for NCVector {
    type Output = NCVector;

    fn add(mut self, rhs: NCVector) -> NCVector {
        self += &rhs;
        self
    }
}

impl Sub for NCVector {
    type Output = NCVector;

    fn sub(mut self, rhs: NCVector) -> NCVector {
        self -= &rhs;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn sample() -> NCVector {
        let mut v = NCVector::zero(6);
        v.add_term(sp("1,2,6/3/4,5"), 1.into()).unwrap();
        v.add_term(sp("1,2,4/3/5,6"), 1.into()).unwrap();
        v.add_term(sp("1,2/3/4,5,6"), (-1).into()).unwrap();
        v
    }

    #[test]
    fn rejects_crossing_terms() {
        let mut v = NCVector::zero(4);
        assert!(v.add_term(sp("1,3/2,4"), 1.into()).is_err());
        assert!(v.add_term(sp("1,2/3"), 1.into()).is_err());
    }

    #[test]
    fn cancellation_drops_zero() {
        let v = sample();
        let w = v.clone() - v;
        assert!(w.is_zero());
        assert_eq!(w.to_string(), "0");
    }

    #[test]
    fn text_round_trip() {
        let v = sample();
        let text = v.to_string();
        assert_eq!(
            text,
            "+1 * 1,2,4/3/5,6\n+1 * 1,2,6/3/4,5\n-1 * 1,2/3/4,5,6"
        );
        assert_eq!(text.parse::<NCVector>().unwrap(), v);
        assert_eq!(NCVector::parse("0", Some(6)).unwrap(), NCVector::zero(6));
    }

    #[test]
    fn parse_error_positions() {
        match NCVector::parse("+1 * 1,2\n-x * 1/2", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 9),
            other => panic!("{other:?}"),
        }
        match NCVector::parse("+1 * 1,q", None) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_round_trip_with_big_coefficients() {
        let mut v = sample();
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        v.add_term(sp("1/2/3/4/5/6"), big.clone()).unwrap();
        let json = v.to_json();
        assert_eq!(json[2]["coef"], json!(-1));
        assert!(json.as_array().unwrap().iter().any(|t| t["coef"] == json!(big.to_string())));
        assert_eq!(NCVector::from_json(6, &json).unwrap(), v);
    }
}
