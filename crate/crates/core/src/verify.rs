//! Exhaustive and randomized checks of the structural facts about the skein
//! modules. Every check returns a [`RunReport`] with one row per case.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::csp::{
    catalan_summation_identity, chu_vandermonde_check, count_fixed, narayana_summation_identity, springer_check,
    verify_csp, Family,
};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::intpart::IntegerPartition;
use crate::module::{add_coord, BasisAction, Coords, Space};
use crate::partition::{CrossingClass, SetPartition};
use crate::perm::Permutation;
use crate::projection::{project, stabilizer_generators};
use crate::report::RunReport;
use crate::repr::{apply_symmetrizer_coords, factorial, verify_isotype, SymSign};
use crate::skein::{act_perm, affine_transposition, rho, sigma, sigma_at, tau, tau_tilde, SignedPartition};
use crate::vector::NCVector;

fn sign_power(base: i64, e: usize) -> i64 {
    if base < 0 && e % 2 == 1 {
        -1
    } else {
        1
    }
}

fn single(j: usize, c: i64) -> Coords {
    let mut out = Coords::new();
    add_coord(&mut out, j, BigInt::from(c));
    out
}

fn scaled(v: &Coords, c: i64) -> Coords {
    v.iter().map(|(j, x)| (*j, x * c)).collect()
}

/// `pi_0 = {1, 2k, 2k+1, .., n}, {2, 2k-1}, .., {k, k+1}`.
pub fn pi_zero(n: usize, k: usize) -> Result<SetPartition> {
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidParameters(format!("pi_0 needs 1 <= k and 2k <= n, got n = {n}, k = {k}")));
    }
    let mut blocks = vec![std::iter::once(1).chain(2 * k..=n).collect::<Vec<_>>()];
    for j in 2..=k {
        blocks.push(vec![j, 2 * k + 1 - j]);
    }
    SetPartition::new(n, &blocks)
}

/// `pi_1 = {1, .., n-2k+2}, {n-2k+3, n-2k+4}, .., {n-1, n}`.
pub fn pi_one(n: usize, k: usize) -> Result<SetPartition> {
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidParameters(format!("pi_1 needs 1 <= k and 2k <= n, got n = {n}, k = {k}")));
    }
    let head = n + 2 - 2 * k;
    let mut blocks = vec![(1..=head).collect::<Vec<_>>()];
    let mut x = head + 1;
    while x < n {
        blocks.push(vec![x, x + 1]);
        x += 2;
    }
    SetPartition::new(n, &blocks)
}

/// Coxeter relations for the skein action on all of `V(n)`, plus the grading by
/// block and singleton counts.
pub fn verify_coxeter(n: usize) -> Result<RunReport> {
    let v = BasisAction::skein(Space::new(n, None, None))?;
    let dim = v.dim().to_string();
    let mut report = RunReport::new("verify-coxeter", &["relation", "checked"])
        .param("n", n)
        .param("dim", v.dim());
    for (name, ok) in v.coxeter_relations() {
        report.push(vec![name, dim.clone()], ok);
    }
    let graded = (1..n).all(|i| {
        v.generator(i).cols.iter().enumerate().all(|(j, col)| {
            let pi = &v.basis()[j];
            col.iter().all(|(r, _)| {
                let p = &v.basis()[*r];
                p.block_count() == pi.block_count() && p.singleton_count() == pi.singleton_count()
            })
        })
    });
    report.push(vec!["blocks and singletons preserved".into(), dim], graded);
    Ok(report)
}

fn rho_word(word: &[usize], p: &SignedPartition) -> Result<SignedPartition> {
    let mut out = p.clone();
    for &i in word.iter().rev() {
        let step = rho(i, &out.partition)?;
        out = SignedPartition {
            sign: out.sign * step.sign,
            partition: step.partition,
        };
    }
    Ok(out)
}

/// Coxeter relations for the star action on every set partition of `[n]`.
pub fn verify_rho_coxeter(n: usize) -> Result<RunReport> {
    let all = enumerate::all(n);
    let count = all.len().to_string();
    let mut report = RunReport::new("verify-rho-coxeter", &["relation", "checked"])
        .param("n", n)
        .param("partitions", all.len());
    let holds = |lhs: &[usize], rhs: &[usize]| -> Result<bool> {
        let results: Vec<bool> = all
            .par_iter()
            .map(|pi| {
                let p = SignedPartition::positive(pi.clone());
                Ok(rho_word(lhs, &p)? == rho_word(rhs, &p)?)
            })
            .collect::<Result<_>>()?;
        Ok(results.into_iter().all(|b| b))
    };
    for i in 1..n {
        report.push(vec![format!("s{i}^2 = e"), count.clone()], holds(&[i, i], &[])?);
        if i + 1 < n {
            let name = format!("s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1);
            report.push(vec![name, count.clone()], holds(&[i, i + 1, i], &[i + 1, i, i + 1])?);
        }
        for j in i + 2..n {
            report.push(vec![format!("s{i} s{j} = s{j} s{i}"), count.clone()], holds(&[i, j], &[j, i])?);
        }
    }
    Ok(report)
}

/// For every almost noncrossing partition of `[n]`, the skein expansion does not
/// depend on the crossing index used. Rows group partitions by their number of
/// crossing indices.
pub fn verify_sigma_independence(n: usize) -> Result<RunReport> {
    let outcomes: Vec<Option<(usize, bool)>> = enumerate::all(n)
        .par_iter()
        .map(|pi| match pi.classify() {
            CrossingClass::AlmostNoncrossing(idx) => {
                let first = sigma_at(pi, idx[0])?;
                let mut same = true;
                for &i in &idx[1..] {
                    same &= sigma_at(pi, i)? == first;
                }
                Ok(Some((idx.len(), same)))
            }
            _ => Ok(None),
        })
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (count, same) in outcomes.into_iter().flatten() {
        let entry = groups.entry(count).or_default();
        entry.0 += 1;
        if !same {
            entry.1 += 1;
        }
    }
    let mut report = RunReport::new("verify-sigma", &["crossing indices", "partitions", "disagreements"]).param("n", n);
    for (count, (total, bad)) in groups {
        report.push(vec![count.to_string(), total.to_string(), bad.to_string()], bad == 0);
    }
    Ok(report)
}

/// Whether `w` acts on the basis as `sign` times the permutation `f` of basis elements.
fn acts_as_signed_permutation<F>(action: &BasisAction, w: &Permutation, sign: i64, f: F) -> Result<bool>
where
    F: Fn(&SetPartition) -> SetPartition + Sync,
{
    let results: Vec<bool> = (0..action.dim())
        .into_par_iter()
        .map(|j| {
            let image = action.apply_perm(w, &action.unit(j))?;
            let target = f(&action.basis()[j]);
            Ok(match action.index_of(&target) {
                Some(r) => image == single(r, sign),
                None => false,
            })
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().all(|b| b))
}

/// The long cycle acts on `V(n, k, 0)` as `(-1)^(n+1)` times rotation, for every `k`,
/// together with the special elements `pi_0, pi_1` and the trace of every power of the
/// long cycle against rotation fixed points.
pub fn verify_rotation(n: usize) -> Result<RunReport> {
    let sign = sign_power(-1, n + 1);
    let c = Permutation::long_cycle(n);
    let mut report = RunReport::new("verify-rotation", &["case", "dim", "holds"])
        .param("n", n)
        .param("sign", sign);
    for k in 1..=n / 2 {
        let action = BasisAction::skein(Space::new(n, Some(k), Some(0)))?;
        let dim = action.dim().to_string();
        let ok = acts_as_signed_permutation(&action, &c, sign, SetPartition::rotate)?;
        report.push(vec![format!("c on V({n},{k},0)"), dim.clone(), ok.to_string()], ok);
        for (name, pi) in [("pi_0", pi_zero(n, k)?), ("pi_1", pi_one(n, k)?)] {
            let got = act_perm(&c, &NCVector::basis(&pi)?)?;
            let want = NCVector::term(&pi.rotate(), sign)?;
            let ok = got == want;
            report.push(vec![format!("c.{name} = {sign} r({pi})"), dim.clone(), ok.to_string()], ok);
        }
        let mut traces = true;
        for d in 0..n {
            let trace = action.trace(&c.pow(d))?;
            let fixed = count_fixed(Family::Flag { n, k }, d)? as i64;
            traces &= trace == BigInt::from(sign_power(sign, d) * fixed);
        }
        report.push(vec![format!("trace c^d = ({sign})^d fixed(r^d), k={k}"), dim, traces.to_string()], traces);
    }
    if n == 6 {
        let pi: SetPartition = "1,2,3/4,5,6".parse()?;
        let got = act_perm(&c, &NCVector::basis(&pi)?)?;
        let want = NCVector::term(&"2,3,4/1,5,6".parse::<SetPartition>()?, -1)?;
        let ok = got == want;
        report.push(vec!["c.{1,2,3}{4,5,6} = -{2,3,4}{5,6,1}".into(), "1".into(), ok.to_string()], ok);
    }
    Ok(report)
}

/// The long element acts on `V(n, k, 0)` as `(-1)^floor(n/2)` times reflection, and the
/// transposition `(1, n)` follows the three-case formula.
pub fn verify_reflection(n: usize) -> Result<RunReport> {
    let sign = sign_power(-1, n / 2);
    let w0 = Permutation::long_element(n);
    let mut report = RunReport::new("verify-reflection", &["case", "dim", "holds"])
        .param("n", n)
        .param("sign", sign);
    for k in 1..=n / 2 {
        let action = BasisAction::skein(Space::new(n, Some(k), Some(0)))?;
        let dim = action.dim().to_string();
        let ok = acts_as_signed_permutation(&action, &w0, sign, SetPartition::reflect)?;
        report.push(vec![format!("w0 on V({n},{k},0)"), dim.clone(), ok.to_string()], ok);
        if n >= 2 {
            let t = Permutation::transposition(n, 1, n)?;
            let results: Vec<bool> = (0..action.dim())
                .into_par_iter()
                .map(|j| {
                    let direct = action.apply_perm(&t, &action.unit(j))?;
                    let formula = action.coords(&affine_transposition(&action.basis()[j])?)?;
                    Ok(direct == formula)
                })
                .collect::<Result<_>>()?;
            let ok = results.into_iter().all(|b| b);
            report.push(vec![format!("(1,{n}) on V({n},{k},0)"), dim, ok.to_string()], ok);
        }
    }
    Ok(report)
}

/// All pairs `(u, u.e_sigma, u * sigma)` for `u` in `S_n`, found breadth first from the
/// identity through `u -> s_i u`.
fn orbit_paths(v: &BasisAction, j: usize) -> Result<Vec<(SignedPartition, Coords)>> {
    let n = v.n();
    let start: Vec<usize> = (1..=n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, SignedPartition::positive(v.basis()[j].clone()), v.unit(j))]);
    let mut out = Vec::new();
    while let Some((u, star, coords)) = queue.pop_front() {
        for i in 1..n {
            let next: Vec<usize> = u
                .iter()
                .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
                .collect();
            if seen.insert(next.clone()) {
                let step = rho(i, &star.partition)?;
                let next_star = SignedPartition {
                    sign: star.sign * step.sign,
                    partition: step.partition,
                };
                queue.push_back((next, next_star, v.generator(i).apply(&coords)));
            }
        }
        out.push((star, coords));
    }
    Ok(out)
}

/// For every noncrossing `pi` and every `w` in `S_n` with `w(pi)` noncrossing, the
/// skein action of `w` on `pi` is the single signed term `w * pi`.
pub fn verify_local_symmetry(n: usize) -> Result<RunReport> {
    let v = BasisAction::skein(Space::new(n, None, None))?;
    let per_sigma: Vec<(usize, usize)> = (0..v.dim())
        .into_par_iter()
        .map(|j| {
            let mut cases = 0;
            let mut bad = 0;
            for (star, coords) in orbit_paths(&v, j)? {
                if let Some(r) = v.index_of(&star.partition) {
                    cases += 1;
                    if coords != single(r, star.sign as i64) {
                        bad += 1;
                    }
                }
            }
            Ok((cases, bad))
        })
        .collect::<Result<_>>()?;
    let cases: usize = per_sigma.iter().map(|x| x.0).sum();
    let bad: usize = per_sigma.iter().map(|x| x.1).sum();
    let mut report = RunReport::new("verify-local-symmetry", &["check", "cases", "failures"])
        .param("n", n)
        .param("dim", v.dim());
    report.push(vec!["w.pi = w * pi when w(pi) is noncrossing".into(), cases.to_string(), bad.to_string()], bad == 0);
    Ok(report)
}

/// The projection onto `V(n)` over every set partition of `[n]`: identity on
/// noncrossing inputs, `-sigma` on almost noncrossing inputs, equivariance under every
/// generator, agreement across all admissible conjugators, and the stabilizer signs.
pub fn verify_projection(n: usize) -> Result<RunReport> {
    let v = BasisAction::skein(Space::new(n, None, None))?;
    let all = enumerate::all(n);
    let canonical: HashMap<SetPartition, Coords> = all
        .par_iter()
        .map(|pi| Ok((pi.clone(), v.coords(&project(pi)?)?)))
        .collect::<Result<_>>()?;
    let mut report = RunReport::new("verify-projection", &["check", "cases", "failures"])
        .param("n", n)
        .param("partitions", all.len());
    let mut push = |name: &str, cases: usize, bad: usize| {
        report.push(vec![name.to_string(), cases.to_string(), bad.to_string()], bad == 0);
    };

    let nc: Vec<&SetPartition> = all.iter().filter(|p| p.is_noncrossing()).collect();
    let bad = nc
        .iter()
        .filter(|p| canonical[**p] != v.unit(v.index_of(p).expect("noncrossing basis element")))
        .count();
    push("p(pi) = pi on NC(n)", nc.len(), bad);

    let anc: Vec<&SetPartition> = all
        .iter()
        .filter(|p| matches!(p.classify(), CrossingClass::AlmostNoncrossing(_)))
        .collect();
    let mut bad = 0;
    for pi in &anc {
        if canonical[*pi] != scaled(&v.coords(&sigma(pi)?)?, -1) {
            bad += 1;
        }
    }
    push("p(pi) = -sigma(pi) on ANC(n)", anc.len(), bad);

    let mut bad = 0;
    for pi in &all {
        for i in 1..n {
            let star = rho(i, pi)?;
            let lhs = scaled(&canonical[&star.partition], star.sign as i64);
            if lhs != v.generator(i).apply(&canonical[pi]) {
                bad += 1;
            }
        }
    }
    push("p(s_i * pi) = s_i.p(pi)", all.len() * n.saturating_sub(1), bad);

    let paths: Vec<(usize, usize)> = (0..v.dim())
        .into_par_iter()
        .map(|j| {
            let mut cases = 0;
            let mut bad = 0;
            for (star, coords) in orbit_paths(&v, j)? {
                cases += 1;
                if scaled(&coords, star.sign as i64) != canonical[&star.partition] {
                    bad += 1;
                }
            }
            Ok((cases, bad))
        })
        .collect::<Result<_>>()?;
    push(
        "every admissible w gives p(pi)",
        paths.iter().map(|x| x.0).sum(),
        paths.iter().map(|x| x.1).sum(),
    );

    let mut cases = 0;
    let mut bad = 0;
    for lambda in IntegerPartition::all(n) {
        let base = SetPartition::pi_lambda(&lambda);
        let j = v.index_of(&base).expect("pi_lambda is noncrossing");
        for g in stabilizer_generators(&lambda) {
            cases += 1;
            let star = crate::skein::star_act(&g, &base)?;
            if star.partition != base || v.apply_perm(&g, &v.unit(j))? != single(j, star.sign as i64) {
                bad += 1;
            }
        }
    }
    push("stabilizer of pi_lambda acts by its star sign", cases, bad);
    Ok(report)
}

/// Intervals `[a, b]` with at least two points that are unions of blocks of `pi`.
fn block_closed_intervals(pi: &SetPartition) -> Vec<(usize, usize)> {
    let n = pi.n();
    let blocks = pi.blocks();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let closed = blocks.iter().all(|blk| {
                let inside = blk.iter().filter(|&&x| a <= x && x <= b).count();
                inside == 0 || inside == blk.len()
            });
            if closed {
                out.push((a, b));
            }
        }
    }
    out
}

/// Randomized check that the action of a permutation supported on a block-closed interval
/// only sees the restriction of the partition to that interval.
pub fn verify_local_property(n: usize, trials: usize, seed: u64) -> Result<RunReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let basis = enumerate::noncrossing(n);
    let mut report = RunReport::new("verify-local-property", &["pi", "interval", "w", "holds"])
        .param("n", n)
        .param("seed", seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < trials && attempts < 100 * trials.max(1) {
        attempts += 1;
        let pi = &basis[rng.gen_range(0..basis.len())];
        let intervals = block_closed_intervals(pi);
        if intervals.is_empty() {
            continue;
        }
        let (a, b) = intervals[rng.gen_range(0..intervals.len())];
        let m = b - a + 1;
        let small_w = Permutation::random(m, &mut rng);
        let mut images: Vec<usize> = (1..=n).collect();
        for x in a..=b {
            images[x - 1] = small_w.apply(x - a + 1) + a - 1;
        }
        let w = Permutation::from_one_line(images)?;
        let big = act_perm(&w, &NCVector::basis(pi)?)?;

        let inner: Vec<usize> = (a..=b).map(|x| pi.label(x) as usize).collect();
        let small_pi = SetPartition::from_labels(&inner);
        let small = act_perm(&small_w, &NCVector::basis(&small_pi)?)?;
        let mut lifted = NCVector::zero(n);
        for (rho_part, c) in small.iter() {
            let labels: Vec<usize> = (1..=n)
                .map(|x| {
                    if (a..=b).contains(&x) {
                        rho_part.label(x - a + 1) as usize
                    } else {
                        n + pi.label(x) as usize
                    }
                })
                .collect();
            lifted.add_term(SetPartition::from_labels(&labels), c.clone())?;
        }
        let ok = lifted == big;
        report.push(vec![pi.to_string(), format!("[{a},{b}]"), w.to_string(), ok.to_string()], ok);
        done += 1;
    }
    Ok(report)
}

/// The symmetrizer facts behind the isomorphism type of `V(n, k, 0)` for every `k`:
/// the coefficient `(k!)^2` of `pi_0`, the eigenvalue `2^(k-2) (n-2k+2)!` of `pi_1` under
/// `[S_mu']_-`, and both directions of the dominance pincer.
pub fn verify_symmetrizers(n: usize) -> Result<RunReport> {
    let mut report = RunReport::new("verify-symmetrizers", &["case", "expected", "found"]).param("n", n);
    for k in 1..=n / 2 {
        let lambda = IntegerPartition::flag(n, k).expect("2k <= n");
        let action = BasisAction::skein(Space::new(n, Some(k), Some(0)))?;
        let j0 = action.index_of(&pi_zero(n, k)?).expect("pi_0 lies in NC(n, k, 0)");
        let image = apply_symmetrizer_coords(&action, &lambda, SymSign::Plus, &action.unit(j0))?;
        let coef = image.get(&j0).cloned().unwrap_or_default();
        let want = factorial(k) * factorial(k);
        report.push(
            vec![format!("[S_{lambda}]_+ pi_0, coefficient of pi_0"), want.to_string(), coef.to_string()],
            coef == want,
        );

        if k >= 2 && n > 2 * k {
            let mut mu_parts = vec![k, k - 1];
            mu_parts.extend(std::iter::repeat(1).take(n - 2 * k));
            let mu_conj = IntegerPartition::new(mu_parts)?.conjugate();
            let j1 = action.index_of(&pi_one(n, k)?).expect("pi_1 lies in NC(n, k, 0)");
            let image = apply_symmetrizer_coords(&action, &mu_conj, SymSign::Minus, &action.unit(j1))?;
            let scalar = BigInt::from(1u64 << (k - 2)) * factorial(n - 2 * k + 2);
            let mut want = Coords::new();
            add_coord(&mut want, j1, scalar.clone());
            let found = if image.len() == 1 && image.contains_key(&j1) {
                format!("{} pi_1", image[&j1])
            } else {
                format!("{} terms", image.len())
            };
            report.push(
                vec![format!("[S_{mu_conj}]_- pi_1"), format!("{scalar} pi_1"), found],
                image == want,
            );
        }

        let units: Vec<Coords> = (0..action.dim()).map(|j| action.unit(j)).collect();
        let kills = |mu: &IntegerPartition, sign: SymSign| -> Result<bool> {
            for e in &units {
                if !apply_symmetrizer_coords(&action, mu, sign, e)?.is_empty() {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let mut plus_bad = Vec::new();
        let mut minus_bad = Vec::new();
        for mu in IntegerPartition::all(n) {
            if kills(&mu, SymSign::Plus)? == mu.dominance_leq(&lambda)? {
                plus_bad.push(mu.to_string());
            }
            if kills(&mu.conjugate(), SymSign::Minus)? == lambda.dominance_leq(&mu)? {
                minus_bad.push(mu.to_string());
            }
        }
        report.push(
            vec![format!("[S_mu]_+ kills V({n},{k},0) iff not mu <= {lambda}"), "none".into(), plus_bad.join(" ")],
            plus_bad.is_empty(),
        );
        report.push(
            vec![format!("[S_mu']_- kills V({n},{k},0) iff not {lambda} <= mu"), "none".into(), minus_bad.join(" ")],
            minus_bad.is_empty(),
        );
    }
    Ok(report)
}

/// The four-term operators never lower the singleton count or change the block count,
/// and modulo partitions with more singletons they agree with the skein action.
pub fn verify_tau_tilde_quotient(n: usize) -> Result<RunReport> {
    let mut report = RunReport::new("verify-tau-tilde", &["space", "dim", "holds"]).param("n", n);
    for k in 1..=n {
        for s in 0..=k {
            let basis = enumerate::nc(n, Some(k), Some(s));
            if basis.is_empty() {
                continue;
            }
            let results: Vec<bool> = basis
                .par_iter()
                .map(|pi| {
                    for i in 1..n {
                        let full = tau_tilde(i, pi)?;
                        let mut same_level = NCVector::zero(n);
                        for (p, c) in full.iter() {
                            if p.block_count() != k || p.singleton_count() < s {
                                return Ok(false);
                            }
                            if p.singleton_count() == s {
                                same_level.add_term(p.clone(), c.clone())?;
                            }
                        }
                        if same_level != tau(i, pi)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })
                .collect::<Result<_>>()?;
            let ok = results.into_iter().all(|b| b);
            report.push(vec![format!("V({n},{k},{s})"), basis.len().to_string(), ok.to_string()], ok);
        }
    }
    Ok(report)
}

/// `verify_isotype` for every nonempty `V(n, k, s)` with `n <= max_n`.
pub fn isotype_sweep(max_n: usize) -> Result<RunReport> {
    let mut report = RunReport::new("isotype-sweep", &["space", "classes", "holds"]).param("max_n", max_n);
    for n in 1..=max_n {
        for k in 1..=n {
            for s in 0..=k {
                if 2 * (k - s) + s > n || enumerate::nc(n, Some(k), Some(s)).is_empty() {
                    continue;
                }
                let r = verify_isotype(n, k, s)?;
                report.push(
                    vec![format!("V({n},{k},{s})"), r.rows.len().to_string(), r.passed().to_string()],
                    r.passed(),
                );
            }
        }
    }
    Ok(report)
}

/// Every sieving family with `n <= max_n`.
pub fn csp_sweep(max_n: usize) -> Result<RunReport> {
    let families = Family::all_up_to(max_n);
    let reports: Vec<RunReport> = families.par_iter().map(|f| verify_csp(*f)).collect::<Result<_>>()?;
    let mut report = RunReport::new("csp-sweep", &["family", "powers", "holds"]).param("max_n", max_n);
    for (f, r) in families.iter().zip(reports) {
        report.push(vec![f.to_string(), r.rows.len().to_string(), r.passed().to_string()], r.passed());
    }
    Ok(report)
}

/// Springer's regular-element evaluation for every flag shape of size at most `max_n`.
pub fn springer_sweep(max_n: usize) -> Result<RunReport> {
    let mut report = RunReport::new("springer-sweep", &["lambda", "cases", "holds"]).param("max_n", max_n);
    for n in 1..=max_n {
        for k in 1..=n / 2 {
            let lambda = IntegerPartition::flag(n, k).expect("2k <= n");
            let r = springer_check(&lambda)?;
            report.push(vec![lambda.to_string(), r.rows.len().to_string(), r.passed().to_string()], r.passed());
        }
    }
    Ok(report)
}

/// The q-Chu-Vandermonde identity for all `m, n <= max` and `k <= m + n`.
pub fn chu_sweep(max: usize) -> Result<RunReport> {
    let mut report = RunReport::new("chu-sweep", &["m", "n", "k range", "failures"]).param("max", max);
    for m in 0..=max {
        for n in 0..=max {
            let bad: Vec<String> = (0..=m + n)
                .filter(|&k| !chu_vandermonde_check(m, n, k))
                .map(|k| k.to_string())
                .collect();
            let cells = vec![m.to_string(), n.to_string(), format!("0..={}", m + n), bad.join(" ")];
            report.push(cells, bad.is_empty());
        }
    }
    Ok(report)
}

/// The two stratification identities for all `n <= max_n`.
pub fn summation_sweep(max_n: usize) -> Result<RunReport> {
    let mut report = RunReport::new("summation-sweep", &["identity", "n", "k", "holds"]).param("max_n", max_n);
    for n in 0..=max_n {
        let ok = catalan_summation_identity(n)?;
        report.push(vec!["catalan".into(), n.to_string(), "-".into(), ok.to_string()], ok);
        for k in 0..=n {
            let ok = narayana_summation_identity(n, k)?;
            report.push(vec!["narayana".into(), n.to_string(), k.to_string(), ok.to_string()], ok);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: RunReport) {
        assert!(r.passed(), "{}", r.render());
        assert!(!r.rows.is_empty());
    }

    #[test]
    fn special_elements() {
        assert_eq!(pi_zero(7, 2).unwrap().to_string(), "1,4,5,6,7/2,3");
        assert_eq!(pi_one(7, 2).unwrap().to_string(), "1,2,3,4,5/6,7");
        assert_eq!(pi_zero(6, 3).unwrap().to_string(), "1,6/2,5/3,4");
        assert_eq!(pi_one(6, 3).unwrap().to_string(), "1,2/3,4/5,6");
        assert!(pi_zero(3, 2).is_err());
    }

    #[test]
    fn small_suites_pass() {
        assert_pass(verify_coxeter(5).unwrap());
        assert_pass(verify_rho_coxeter(5).unwrap());
        assert_pass(verify_sigma_independence(6).unwrap());
        assert_pass(verify_rotation(6).unwrap());
        assert_pass(verify_reflection(6).unwrap());
        assert_pass(verify_local_symmetry(5).unwrap());
        assert_pass(verify_projection(5).unwrap());
        assert_pass(verify_symmetrizers(6).unwrap());
        assert_pass(verify_tau_tilde_quotient(5).unwrap());
        assert_pass(verify_local_property(7, 20, 7).unwrap());
    }

    #[test]
    fn sweeps_pass() {
        assert_pass(isotype_sweep(5).unwrap());
        assert_pass(csp_sweep(6).unwrap());
        assert_pass(springer_sweep(6).unwrap());
        assert_pass(chu_sweep(3).unwrap());
        assert_pass(summation_sweep(6).unwrap());
    }

    #[test]
    fn block_closed_intervals_of_example() {
        let pi: SetPartition = "1,4/2,3/5,6".parse().unwrap();
        assert_eq!(block_closed_intervals(&pi), vec![(1, 4), (1, 6), (2, 3), (5, 6)]);
    }
}
