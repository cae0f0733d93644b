//! Representation theory of the skein modules: integer matrices, characters,
//! Young symmetrizers and the Pieri rule.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::intpart::IntegerPartition;
use crate::module::{add_scaled_coords, BasisAction, Coords, Space};
use crate::perm::Permutation;
use crate::report::RunReport;
use crate::skein::act_perm;
use crate::vector::NCVector;

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let x = self.get(i, j);
                        match i64::try_from(x) {
                            Ok(v) => json!(v),
                            Err(_) => json!(x.to_string()),
                        }
                    })
                    .collect()
            })
            .collect();
        json!(rows)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    /// Right-aligned columns, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|x| x.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", self.get(i, j).to_string()))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A conjugacy class of `S_n`, named by its cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType(pub IntegerPartition);

impl CycleType {
    pub fn of(w: &Permutation) -> Self {
        CycleType(w.cycle_type())
    }

    /// Classes of `S_n` in the order of [`IntegerPartition::all`].
    pub fn all(n: usize) -> Vec<CycleType> {
        IntegerPartition::all(n).into_iter().map(CycleType).collect()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// The representative built from consecutive cycles `(1..mu_1)(mu_1 + 1..)...`.
    pub fn representative(&self) -> Permutation {
        let n = self.size();
        let mut images = vec![0; n];
        let mut start = 1;
        for &len in self.0.parts() {
            for x in start..start + len {
                images[x - 1] = if x + 1 < start + len { x + 1 } else { start };
            }
            start += len;
        }
        Permutation::from_one_line(images).expect("cycles cover 1..n")
    }

    /// Number of permutations in the class: `n! / prod_i (i^(m_i) m_i!)`.
    pub fn class_size(&self) -> BigInt {
        let mut denom = BigInt::one();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in self.0.parts() {
            *counts.entry(p).or_default() += 1;
        }
        for (&len, &m) in &counts {
            for j in 1..=m {
                denom *= len * j;
            }
        }
        factorial(self.size()) / denom
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, x| acc * x)
}

/// The irreducible character `chi^lambda` on the class `mu`, by border-strip removal.
pub fn mn_character(lambda: &IntegerPartition, mu: &CycleType) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    Ok(BigInt::from(mn_rec(beta, mu.0.parts())))
}

/// Removing a border strip of length `r` moves one bead of the beta-set down by `r`;
/// the sign counts the beads jumped over.
fn mn_rec(beta: Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        let value = mn_rec(next, rest);
        total += if jumped % 2 == 0 { value } else { -value };
    }
    total
}

/// Shapes `lambda` containing `mu` with `lambda / mu` a horizontal strip of `s` boxes.
pub fn pieri_induce(mu: &IntegerPartition, s: usize) -> Vec<IntegerPartition> {
    fn rec(
        mu: &IntegerPartition,
        i: usize,
        left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<IntegerPartition>,
    ) {
        if i > mu.len() {
            if left == 0 {
                out.push(IntegerPartition::from_unsorted(current.clone()));
            }
            return;
        }
        let low = mu.part(i);
        let high = if i == 0 { low + left } else { mu.part(i - 1).min(low + left) };
        for part in (low..=high).rev() {
            current.push(part);
            rec(mu, i + 1, left - (part - low), current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, 0, s, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// The irreducible shapes of `V(n, k, s)`: Pieri induction from the flag shape of `n - s`.
pub fn skein_decomposition(n: usize, k: usize, s: usize) -> Option<Vec<IntegerPartition>> {
    if s > k || s > n {
        return None;
    }
    IntegerPartition::flag(n - s, k - s).map(|mu| pieri_induce(&mu, s))
}

/// Sign of a Young symmetrizer: `+` sums group elements, `-` weights them by sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymSign {
    Plus,
    Minus,
}

impl SymSign {
    fn weight(self, length: usize) -> i64 {
        match self {
            SymSign::Minus if length % 2 == 1 => -1,
            _ => 1,
        }
    }
}

/// The intervals `[1, l_1], [l_1 + 1, l_1 + l_2], ..` of a Young subgroup.
pub fn young_intervals(lambda: &IntegerPartition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 1;
    for &p in lambda.parts() {
        out.push((start, start + p - 1));
        start += p;
    }
    out
}

/// Applies the symmetrizer of `S_[a, b]` through the coset factorization
/// `[S_[a,m]] = (sum_j s_j s_(j+1) .. s_(m-1)) [S_[a,m-1]]`.
fn symmetrize_interval<V, F, G>(a: usize, b: usize, sign: SymSign, v: V, apply: &F, add: &G) -> Result<V>
where
    V: Clone,
    F: Fn(usize, &V) -> Result<V>,
    G: Fn(&mut V, &V, i64),
{
    let mut current = v;
    for m in a + 1..=b {
        let mut acc = current.clone();
        let mut t = current;
        for j in (a..m).rev() {
            t = apply(j, &t)?;
            add(&mut acc, &t, sign.weight(m - j));
        }
        current = acc;
    }
    Ok(current)
}

/// Applies `[S_lambda]_+-` with `S_lambda` on the intervals of `lambda`, placed at the
/// start of `[n]`; `lambda` may have size below `n`.
pub fn symmetrize_with<V, F, G>(lambda: &IntegerPartition, sign: SymSign, v: V, apply: F, add: G) -> Result<V>
where
    V: Clone,
    F: Fn(usize, &V) -> Result<V>,
    G: Fn(&mut V, &V, i64),
{
    let mut out = v;
    for (a, b) in young_intervals(lambda) {
        out = symmetrize_interval(a, b, sign, out, &apply, &add)?;
    }
    Ok(out)
}

/// `[S_lambda]_+- . v` in `V(n)` with `|lambda| = n`.
pub fn apply_symmetrizer(lambda: &IntegerPartition, sign: SymSign, v: &NCVector) -> Result<NCVector> {
    if lambda.size() != v.n() {
        return Err(Error::SizeMismatch {
            expected: v.n(),
            found: lambda.size(),
        });
    }
    apply_symmetrizer_embedded(lambda, sign, v)
}

/// Like [`apply_symmetrizer`] for `lambda` of size at most `n`, acting on its first `|lambda|` points.
pub fn apply_symmetrizer_embedded(lambda: &IntegerPartition, sign: SymSign, v: &NCVector) -> Result<NCVector> {
    if lambda.size() > v.n() {
        return Err(Error::SizeMismatch {
            expected: v.n(),
            found: lambda.size(),
        });
    }
    symmetrize_with(
        lambda,
        sign,
        v.clone(),
        |i, x: &NCVector| x.map_linear(|p| crate::skein::tau(i, p)),
        |acc: &mut NCVector, t: &NCVector, c| acc.add_scaled(t, &BigInt::from(c)),
    )
}

/// The symmetrizer in coordinates of a basis action.
pub fn apply_symmetrizer_coords(
    action: &BasisAction,
    lambda: &IntegerPartition,
    sign: SymSign,
    v: &Coords,
) -> Result<Coords> {
    if lambda.size() > action.n() {
        return Err(Error::SizeMismatch {
            expected: action.n(),
            found: lambda.size(),
        });
    }
    symmetrize_with(
        lambda,
        sign,
        v.clone(),
        |i, x: &Coords| Ok(action.generator(i).apply(x)),
        |acc: &mut Coords, t: &Coords, c| add_scaled_coords(acc, t, c),
    )
}

/// A sparse element of the group algebra `Z[S_n]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, w: Permutation, c: BigInt) {
        assert_eq!(w.n(), self.n, "permutation size");
        let entry = self.terms.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigInt)> {
        self.terms.iter()
    }

    /// `[S_lambda]_+-` in `Z[S_n]`, listing every element of the Young subgroup.
    pub fn young_symmetrizer(n: usize, lambda: &IntegerPartition, sign: SymSign) -> Result<Self> {
        if lambda.size() > n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: lambda.size(),
            });
        }
        let mut elems = vec![Permutation::identity(n)];
        for (a, b) in young_intervals(lambda) {
            let local = Permutation::all(b - a + 1);
            let mut next = Vec::with_capacity(elems.len() * local.len());
            for u in &elems {
                for l in &local {
                    let mut images = u.one_line().to_vec();
                    for x in a..=b {
                        images[x - 1] = u.apply(l.apply(x - a + 1) + a - 1);
                    }
                    next.push(Permutation::from_one_line(images)?);
                }
            }
            elems = next;
        }
        let mut out = GroupAlgebraElement::zero(n);
        for w in elems {
            let c = match sign {
                SymSign::Plus => 1,
                SymSign::Minus => w.sign() as i64,
            };
            out.add_term(w, BigInt::from(c));
        }
        Ok(out)
    }

    /// The action on `V(n)`.
    pub fn act(&self, v: &NCVector) -> Result<NCVector> {
        let mut out = NCVector::zero(v.n());
        for (w, c) in &self.terms {
            out.add_scaled(&act_perm(w, v)?, c);
        }
        Ok(out)
    }
}

/// The representing matrix of `w` on `V(n, k, s)`.
pub fn representing_matrix(w: &Permutation, space: Space) -> Result<IntMatrix> {
    BasisAction::skein(space)?.matrix(w)
}

/// `(class, trace)` for every conjugacy class of `S_n`.
pub fn character_table(action: &BasisAction) -> Result<Vec<(CycleType, BigInt)>> {
    CycleType::all(action.n())
        .into_iter()
        .map(|mu| {
            let t = action.trace(&mu.representative())?;
            Ok((mu, t))
        })
        .collect()
}

/// `sum_mu |class mu| chi(mu) psi(mu) / n!`, the multiplicity pairing.
pub fn inner_product(n: usize, chi: &[(CycleType, BigInt)], psi: &dyn Fn(&CycleType) -> Result<BigInt>) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (mu, x) in chi {
        total += mu.class_size() * x * psi(mu)?;
    }
    let order = factorial(n);
    if !(&total % &order).is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(total / order)
}

/// Compares the character of `V(n, k, s)` with the Pieri prediction class by class.
pub fn verify_isotype(n: usize, k: usize, s: usize) -> Result<RunReport> {
    let space = Space::new(n, Some(k), Some(s));
    let shapes = skein_decomposition(n, k, s).ok_or_else(|| Error::EmptySpace(space.describe()))?;
    let action = BasisAction::skein(space)?;
    let names: Vec<String> = shapes.iter().map(|l| l.to_string()).collect();
    let mut report = RunReport::new("verify-isotype", &["class", "trace", "predicted"])
        .param("n", n)
        .param("k", k)
        .param("s", s)
        .param("dim", action.dim())
        .param("shapes", names.join("+"));
    for (mu, trace) in character_table(&action)? {
        let mut predicted = BigInt::zero();
        for lambda in &shapes {
            predicted += mn_character(lambda, &mu)?;
        }
        let pass = predicted == trace;
        report.push(vec![mu.to_string(), trace.to_string(), predicted.to_string()], pass);
    }
    Ok(report)
}

/// Multiplicities of the irreducibles in a class function, omitting zeros.
pub fn decompose(n: usize, chi: &[(CycleType, BigInt)]) -> Result<Vec<(IntegerPartition, BigInt)>> {
    let mut out = Vec::new();
    for lambda in IntegerPartition::all(n) {
        let m = inner_product(n, chi, &|mu| mn_character(&lambda, mu))?;
        if !m.is_zero() {
            out.push((lambda, m));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use crate::partition::SetPartition;

    fn ip(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[usize]) -> CycleType {
        CycleType(ip(parts))
    }

    #[test]
    fn mn_trivial_and_sign() {
        for n in 1..=7 {
            for mu in CycleType::all(n) {
                assert_eq!(mn_character(&ip(&[n]), &mu).unwrap(), BigInt::one());
                let sign = if (n - mu.0.len()) % 2 == 0 { 1 } else { -1 };
                let column = IntegerPartition::new(vec![1; n]).unwrap();
                assert_eq!(mn_character(&column, &mu).unwrap(), BigInt::from(sign));
            }
        }
        assert_eq!(mn_character(&ip(&[2, 2]), &ct(&[1, 1, 1, 1])).unwrap(), BigInt::from(2));
        assert!(mn_character(&ip(&[2, 2]), &ct(&[3])).is_err());
    }

    #[test]
    fn mn_small_table() {
        // Character table of S_4 on shape (3,1): classes 4, 31, 22, 211, 1111.
        let expected = [-1, 0, -1, 1, 3];
        for (mu, e) in CycleType::all(4).iter().zip(expected) {
            assert_eq!(mn_character(&ip(&[3, 1]), mu).unwrap(), BigInt::from(e), "{mu}");
        }
    }

    #[test]
    fn mn_orthogonality() {
        for n in 1..=7 {
            let classes = CycleType::all(n);
            for mu in &classes {
                let mut sum = BigInt::zero();
                for lambda in IntegerPartition::all(n) {
                    let x = mn_character(&lambda, mu).unwrap();
                    sum += &x * &x;
                }
                assert_eq!(sum * mu.class_size(), factorial(n), "n={n} mu={mu}");
            }
        }
    }

    #[test]
    fn mn_identity_class_is_hook_dim() {
        for n in 1..=9 {
            for lambda in IntegerPartition::all(n) {
                let id = CycleType(IntegerPartition::new(vec![1; n]).unwrap());
                assert_eq!(mn_character(&lambda, &id).unwrap(), lambda.hook_dim());
            }
        }
    }

    #[test]
    fn class_representatives() {
        for n in 1..=7 {
            let mut total = BigInt::zero();
            for mu in CycleType::all(n) {
                assert_eq!(CycleType::of(&mu.representative()), mu);
                total += mu.class_size();
            }
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_induce(&ip(&[2, 2, 1]), 1), vec![ip(&[2, 2, 1, 1]), ip(&[2, 2, 2]), ip(&[3, 2, 1])]);
        assert_eq!(pieri_induce(&ip(&[1, 1, 1, 1]), 2), vec![ip(&[2, 1, 1, 1, 1]), ip(&[3, 1, 1, 1])]);
        assert_eq!(pieri_induce(&ip(&[3, 1]), 0), vec![ip(&[3, 1])]);
        assert_eq!(pieri_induce(&IntegerPartition::default(), 3), vec![ip(&[3])]);
    }

    #[test]
    fn pieri_dimension_count() {
        // dim Ind(S^mu x triv_s) = C(|mu|+s, s) * dim S^mu.
        for m in 1..=6usize {
            for mu in IntegerPartition::all(m) {
                for s in 0..=3usize {
                    let total: BigInt = pieri_induce(&mu, s).iter().map(|l| l.hook_dim()).sum();
                    let binom = factorial(m + s) / (factorial(m) * factorial(s));
                    assert_eq!(total, binom * mu.hook_dim());
                }
            }
        }
    }

    #[test]
    fn matrix_product_and_identity() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(&a * &b, IntMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert!(IntMatrix::identity(3).is_identity());
        assert_eq!(a.trace(), BigInt::from(5));
        assert_eq!(a.to_string(), "1 2\n3 4\n");
    }

    #[test]
    fn factored_symmetrizer_matches_brute_force() {
        let n = 5;
        for lambda in [ip(&[2, 2, 1]), ip(&[3, 2]), ip(&[5]), ip(&[1, 1, 1, 1, 1]), ip(&[3, 1, 1])] {
            for sign in [SymSign::Plus, SymSign::Minus] {
                let brute = GroupAlgebraElement::young_symmetrizer(n, &lambda, sign).unwrap();
                for pi in enumerate::noncrossing(n).into_iter().step_by(3) {
                    let v = NCVector::basis(&pi).unwrap();
                    assert_eq!(
                        apply_symmetrizer(&lambda, sign, &v).unwrap(),
                        brute.act(&v).unwrap(),
                        "{lambda} {sign:?} {pi}"
                    );
                }
            }
        }
    }

    #[test]
    fn symmetrizer_of_trivial_subgroup() {
        let v = NCVector::basis(&"1,2/3,4/5".parse::<SetPartition>().unwrap()).unwrap();
        let ones = IntegerPartition::new(vec![1; 5]).unwrap();
        assert_eq!(apply_symmetrizer(&ones, SymSign::Plus, &v).unwrap(), v);
        assert_eq!(apply_symmetrizer(&ones, SymSign::Minus, &v).unwrap(), v);
        assert!(apply_symmetrizer(&ip(&[2, 2]), SymSign::Plus, &v).is_err());
    }

    #[test]
    fn isotype_small_cases() {
        let r = verify_isotype(6, 2, 0).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert!(r.render().contains("dim=9"));
        assert!(matches!(verify_isotype(4, 3, 0), Err(Error::EmptySpace(_))));
    }
}
