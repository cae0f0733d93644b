//! `ncskein`: resolve partitions, act on vectors, and run the verification suites.
//!
//! Exit status: 0 on success or PASS, 1 when a verification fails, 2 on a usage
//! or input error.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ncskein::csp::{chu_vandermonde_check, verify_csp, Family};
use ncskein::projection::{admissible_conjugators, check_all_paths, project, project_via};
use ncskein::qpoly::{
    fake_degree, flag_poly, q_binomial, q_catalan, q_factorial, q_hook_length, q_int, q_narayana, q_narayana_shifted,
};
use ncskein::repr::{character_table, decompose, representing_matrix, verify_isotype};
use ncskein::skein::{act_perm, act_word};
use ncskein::tl::{compare_modules, doubleton_filtration_check, verify_alternating_kernel, verify_tl_relations, TlRule};
use ncskein::verify::{
    chu_sweep, csp_sweep, isotype_sweep, springer_sweep, summation_sweep, verify_coxeter, verify_local_property,
    verify_local_symmetry, verify_projection, verify_reflection, verify_rho_coxeter, verify_rotation,
    verify_sigma_independence, verify_symmetrizers, verify_tau_tilde_quotient,
};
use ncskein::{
    enumerate, BasisAction, CrossingClass, Error, Filter, IntegerPartition, NCVector, Permutation, QPoly, RunReport,
    SetPartition, Space, Word,
};

#[derive(Parser)]
#[command(name = "ncskein", version, about = "Exact skein action of the symmetric group on noncrossing partitions")]
struct Cli {
    /// Print structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Upper bound on n for exhaustive sweeps.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Record wall-clock time in reports (`elapsed_ms`).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SweepArgs {
    /// Check this n only; otherwise every n up to --max-n.
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a set partition in the noncrossing basis.
    Resolve {
        partition: String,
        /// Conjugating permutation to project through.
        #[arg(long, value_name = "PERM")]
        via: Option<String>,
        /// Project through every admissible conjugator and compare.
        #[arg(long)]
        check_all_paths: bool,
    },
    /// Apply a permutation (or a word with --word) to a vector of noncrossing partitions.
    Act {
        perm: String,
        vector: String,
        /// Read PERM as a word of adjacent transpositions, e.g. "1 2 1".
        #[arg(long)]
        word: bool,
    },
    /// Noncrossing, almost noncrossing (with crossing indices), or crossing.
    Classify { partition: String },
    /// List set partitions of [n] in canonical order.
    Enumerate {
        n: usize,
        /// Number of blocks.
        #[arg(short, long)]
        k: Option<usize>,
        /// Number of singletons.
        #[arg(short, long)]
        s: Option<usize>,
        /// Include crossing partitions.
        #[arg(long)]
        all: bool,
    },
    /// Coxeter relations of the skein action on V(n) and of the star action.
    VerifyCoxeter(SweepArgs),
    /// Independence of the skein map from the chosen crossing index.
    VerifySigma(SweepArgs),
    /// The long cycle acts as signed rotation.
    VerifyRotation(SweepArgs),
    /// The long element acts as signed reflection; the affine transposition formula.
    VerifyReflection(SweepArgs),
    /// Local symmetry and the randomized local property.
    VerifyLocalSymmetry {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Random trials for the local property.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Projection identities, equivariance and conjugator independence.
    VerifyProjection(SweepArgs),
    /// Symmetrizer coefficients, eigenvalue and dominance pincer.
    VerifySymmetrizers(SweepArgs),
    /// The modified skein action and its quotient.
    VerifyTauTilde(SweepArgs),
    /// Character of V(n, k, s) against its predicted decomposition; all spaces without arguments.
    VerifyIsotype { n: Option<usize>, k: Option<usize>, s: Option<usize> },
    /// Traces of every conjugacy class on V(n, k, s).
    CharacterTable { n: usize, k: Option<usize>, s: Option<usize> },
    /// The matrix of a permutation on V(n, k, s).
    Matrix { perm: String, n: usize, k: Option<usize>, s: Option<usize> },
    /// Cyclic sieving for a family (catalan, narayana, narayana-shifted, flag, subsets, or all).
    VerifyCsp { family: String, n: Option<usize>, k: Option<usize> },
    /// Regular-element character evaluations for a shape; all flag shapes without an argument.
    SpringerCheck { lambda: Option<String> },
    /// q-Chu-Vandermonde for given m n k, or the full sweep with the summation identities.
    ChuCheck { m: Option<usize>, n: Option<usize>, k: Option<usize> },
    /// V(n, k, 0) against the Temperley-Lieb module W(n, k, 0).
    TlCompare { n: usize, k: usize },
    /// Temperley-Lieb relations, alternating kernel and doubleton filtration of W(n, k, 0).
    TlFiltration {
        n: usize,
        k: usize,
        /// Blockmate rule for the relation check.
        #[arg(long, value_enum, default_value_t = Rule::Loop)]
        rule: Rule,
    },
    /// Coefficients of a q-polynomial: int, factorial, binomial, catalan, narayana,
    /// narayana-shifted, flag, hook, fake-degree.
    Qpoly { name: String, params: Vec<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    /// Closed loop only for a block {i, i+1}.
    Loop,
    /// Loop value for any block containing i and i+1.
    Literal,
}

impl From<Rule> for TlRule {
    fn from(r: Rule) -> TlRule {
        match r {
            Rule::Loop => TlRule::Loop,
            Rule::Literal => TlRule::Literal,
        }
    }
}

enum Output {
    Reports(Vec<RunReport>),
    Data { text: String, json: Value },
}

struct Ctx {
    max_n: Option<usize>,
    seed: u64,
}

impl Ctx {
    /// The values of n to check: `n` alone, or `1..=max` with `max` from --max-n.
    fn range(&self, n: Option<usize>, default_max: usize) -> Result<Vec<usize>, String> {
        match (n, self.max_n) {
            (Some(n), Some(max)) if n > max => Err(format!("n = {n} exceeds --max-n {max}")),
            (Some(n), _) => Ok(vec![n]),
            (None, max) => Ok((1..=max.unwrap_or(default_max)).collect()),
        }
    }

    fn bound(&self, default_max: usize) -> usize {
        self.max_n.unwrap_or(default_max)
    }
}

/// Formats an input error, pointing at the offending character for parse errors.
fn input_error(input: &str, e: Error) -> String {
    match &e {
        Error::Parse { position, .. } => {
            let pos = (*position).min(input.len());
            let start = input[..pos].rfind('\n').map_or(0, |i| i + 1);
            let line = input[start..].lines().next().unwrap_or("");
            format!("{e}\n  {line}\n  {}^", " ".repeat(pos - start))
        }
        _ => e.to_string(),
    }
}

fn parse_partition(s: &str) -> Result<SetPartition, String> {
    SetPartition::parse(s).map_err(|e| input_error(s, e))
}

fn parse_perm(s: &str, n: Option<usize>) -> Result<Permutation, String> {
    Permutation::parse(s, n).map_err(|e| input_error(s, e))
}

fn parse_lambda(s: &str) -> Result<IntegerPartition, String> {
    IntegerPartition::parse(s).map_err(|e| input_error(s, e))
}

fn err(e: Error) -> String {
    e.to_string()
}

fn table(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(columns.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Integers that fit in an `i64` become JSON numbers, larger ones decimal strings.
fn big_json(x: &impl std::fmt::Display) -> Value {
    let text = x.to_string();
    match text.parse::<i64>() {
        Ok(v) => json!(v),
        Err(_) => json!(text),
    }
}

fn qpoly_output(name: &str, params: &[String], p: &QPoly) -> Output {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    Output::Data {
        text: format!("{name}({}) = [{}]\n", params.join(","), coeffs.join(", ")),
        json: json!({
            "name": name,
            "params": params,
            "coefficients": coeffs.iter().map(big_json).collect::<Vec<_>>(),
        }),
    }
}

fn qpoly(name: &str, params: &[String]) -> Result<Output, String> {
    let ints = || -> Result<Vec<usize>, String> {
        params
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| format!("expected a nonnegative integer, found {p:?}")))
            .collect()
    };
    let arity = |k: usize| -> Result<Vec<usize>, String> {
        let v = ints()?;
        if v.len() == k {
            Ok(v)
        } else {
            Err(format!("qpoly {name} takes {k} integer parameter(s), got {}", v.len()))
        }
    };
    let shape = || -> Result<IntegerPartition, String> {
        match params {
            [one] => parse_lambda(one),
            _ => Err(format!("qpoly {name} takes one integer partition, e.g. \"3,2,1\"")),
        }
    };
    let p = match name {
        "int" => q_int(arity(1)?[0]),
        "factorial" => q_factorial(arity(1)?[0]),
        "binomial" => {
            let v = arity(2)?;
            q_binomial(v[0], v[1]).map_err(err)?
        }
        "catalan" => q_catalan(arity(1)?[0]).map_err(err)?,
        "narayana" => {
            let v = arity(2)?;
            q_narayana(v[0], v[1]).map_err(err)?
        }
        "narayana-shifted" => {
            let v = arity(2)?;
            q_narayana_shifted(v[0], v[1]).map_err(err)?
        }
        "flag" => {
            let v = arity(2)?;
            flag_poly(v[0], v[1]).map_err(err)?
        }
        "hook" => q_hook_length(&shape()?).map_err(err)?,
        "fake-degree" => fake_degree(&shape()?).map_err(err)?,
        other => return Err(format!("unknown q-polynomial {other:?}")),
    };
    Ok(qpoly_output(name, params, &p))
}

fn resolve(ctx: &Ctx, partition: &str, via: Option<&str>, all_paths: bool) -> Result<Output, String> {
    let pi = parse_partition(partition)?;
    if all_paths {
        let max = ctx.bound(8);
        if pi.n() > max {
            return Err(format!("--check-all-paths is exhaustive over S_n; n = {} exceeds --max-n {max}", pi.n()));
        }
        let (canonical, bad) = check_all_paths(&pi).map_err(err)?;
        let total = admissible_conjugators(&pi).len();
        let mut report = RunReport::new("resolve", &["conjugator", "agrees"])
            .param("partition", &pi)
            .param("admissible", total)
            .param("terms", canonical.len());
        report.push(vec![format!("all {total} admissible"), (bad.is_empty()).to_string()], bad.is_empty());
        for w in bad {
            report.push(vec![w.to_string(), "false".into()], false);
        }
        return Ok(Output::Reports(vec![report]));
    }
    let v = match via {
        Some(w) => project_via(&pi, &parse_perm(w, Some(pi.n()))?).map_err(err)?,
        None => project(&pi).map_err(err)?,
    };
    Ok(vector_output(&pi.to_string(), v))
}

fn vector_output(input: &str, v: NCVector) -> Output {
    Output::Data {
        text: format!("{v}\n"),
        json: json!({ "input": input, "n": v.n(), "terms": v.to_json() }),
    }
}

fn act(perm: &str, vector: &str, word: bool) -> Result<Output, String> {
    let v = match SetPartition::parse(vector) {
        Ok(pi) if !vector.contains('*') => NCVector::basis(&pi).map_err(err)?,
        _ => NCVector::parse(vector, None).map_err(|e| input_error(vector, e))?,
    };
    let image = if word {
        let mut letters = Vec::new();
        for t in perm.split([' ', ',']).filter(|t| !t.is_empty()) {
            letters.push(t.parse::<usize>().map_err(|_| format!("expected a generator index, found {t:?}"))?);
        }
        act_word(&Word::new(letters), &v).map_err(err)?
    } else {
        act_perm(&parse_perm(perm, Some(v.n()))?, &v).map_err(err)?
    };
    Ok(vector_output(vector, image))
}

fn classify(partition: &str) -> Result<Output, String> {
    let pi = parse_partition(partition)?;
    let (class, indices) = match pi.classify() {
        CrossingClass::Noncrossing => ("noncrossing", Vec::new()),
        CrossingClass::AlmostNoncrossing(idx) => ("almost-noncrossing", idx),
        CrossingClass::Crossing => ("crossing", Vec::new()),
    };
    let shown: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    let text = if indices.is_empty() {
        format!("{pi}: {class}\n")
    } else {
        format!("{pi}: {class} (crossing indices {})\n", shown.join(" "))
    };
    Ok(Output::Data {
        text,
        json: json!({ "partition": pi.to_string(), "class": class, "crossing_indices": indices }),
    })
}

fn enumerate_cmd(n: usize, k: Option<usize>, s: Option<usize>, all: bool) -> Output {
    let list = enumerate(
        n,
        Filter {
            blocks: k,
            singletons: s,
            noncrossing_only: !all,
        },
    );
    let names: Vec<String> = list.iter().map(|p| p.to_string()).collect();
    let mut text = String::new();
    for name in &names {
        text.push_str(name);
        text.push('\n');
    }
    Output::Data {
        text,
        json: json!({ "n": n, "k": k, "s": s, "noncrossing_only": !all, "count": names.len(), "partitions": names }),
    }
}

fn character_table_cmd(n: usize, k: Option<usize>, s: Option<usize>) -> Result<Output, String> {
    let space = Space::new(n, k, s);
    let action = BasisAction::skein(space).map_err(err)?;
    let chi = character_table(&action).map_err(err)?;
    let shapes = decompose(n, &chi).map_err(err)?;
    let rows: Vec<Vec<String>> = chi
        .iter()
        .map(|(mu, t)| vec![mu.to_string(), mu.class_size().to_string(), t.to_string()])
        .collect();
    let names: Vec<String> = shapes.iter().map(|(l, m)| format!("{m}x{l}")).collect();
    let text = format!(
        "{} dim={}\n{}decomposition: {}\n",
        space.describe(),
        action.dim(),
        table(&["class", "size", "trace"], &rows),
        names.join(" + ")
    );
    let json = json!({
        "space": space.describe(),
        "dim": action.dim(),
        "classes": chi.iter().map(|(mu, t)| json!({
            "class": mu.to_string(),
            "size": big_json(&mu.class_size()),
            "trace": big_json(t),
        })).collect::<Vec<_>>(),
        "decomposition": shapes.iter().map(|(l, m)| json!({
            "shape": l.to_string(),
            "multiplicity": big_json(m),
        })).collect::<Vec<_>>(),
    });
    Ok(Output::Data { text, json })
}

fn matrix_cmd(perm: &str, n: usize, k: Option<usize>, s: Option<usize>) -> Result<Output, String> {
    let w = parse_perm(perm, Some(n))?;
    let space = Space::new(n, k, s);
    let m = representing_matrix(&w, space).map_err(err)?;
    let basis: Vec<String> = space.basis().iter().map(|p| p.to_string()).collect();
    let mut text = format!("{} w={w}\nbasis:\n", space.describe());
    for (j, b) in basis.iter().enumerate() {
        text.push_str(&format!("  {}: {b}\n", j + 1));
    }
    text.push_str(&m.to_string());
    Ok(Output::Data {
        text,
        json: json!({ "space": space.describe(), "perm": w.to_string(), "basis": basis, "matrix": m.to_json() }),
    })
}

fn reports(list: impl IntoIterator<Item = ncskein::Result<RunReport>>) -> Result<Output, String> {
    Ok(Output::Reports(list.into_iter().collect::<ncskein::Result<_>>().map_err(err)?))
}

fn run(cli: &Cli) -> Result<Output, String> {
    let ctx = Ctx {
        max_n: cli.max_n,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Resolve {
            partition,
            via,
            check_all_paths,
        } => resolve(&ctx, partition, via.as_deref(), *check_all_paths),
        Command::Act { perm, vector, word } => act(perm, vector, *word),
        Command::Classify { partition } => classify(partition),
        Command::Enumerate { n, k, s, all } => Ok(enumerate_cmd(*n, *k, *s, *all)),
        Command::VerifyCoxeter(a) => {
            let ns = ctx.range(a.n, 8)?;
            reports(ns.iter().flat_map(|&n| [verify_coxeter(n), verify_rho_coxeter(n)]))
        }
        Command::VerifySigma(a) => reports(ctx.range(a.n, 7)?.into_iter().map(verify_sigma_independence)),
        Command::VerifyRotation(a) => reports(ctx.range(a.n, 8)?.into_iter().map(verify_rotation)),
        Command::VerifyReflection(a) => reports(ctx.range(a.n, 8)?.into_iter().map(verify_reflection)),
        Command::VerifyLocalSymmetry { sweep, trials } => {
            let ns = ctx.range(sweep.n, 6)?;
            reports(
                ns.iter()
                    .flat_map(|&n| [verify_local_symmetry(n), verify_local_property(n, *trials, ctx.seed)]),
            )
        }
        Command::VerifyProjection(a) => reports(ctx.range(a.n, 6)?.into_iter().map(verify_projection)),
        Command::VerifySymmetrizers(a) => reports(ctx.range(a.n, 8)?.into_iter().map(verify_symmetrizers)),
        Command::VerifyTauTilde(a) => reports(ctx.range(a.n, 7)?.into_iter().map(verify_tau_tilde_quotient)),
        Command::VerifyIsotype { n, k, s } => match (n, k, s) {
            (Some(n), Some(k), Some(s)) => {
                ctx.range(Some(*n), 8)?;
                reports([verify_isotype(*n, *k, *s)])
            }
            (None, None, None) => reports([isotype_sweep(ctx.bound(8))]),
            _ => Err("verify-isotype takes n k s, or no arguments for the sweep".into()),
        },
        Command::CharacterTable { n, k, s } => character_table_cmd(*n, *k, *s),
        Command::Matrix { perm, n, k, s } => matrix_cmd(perm, *n, *k, *s),
        Command::VerifyCsp { family, n, k } => {
            if family == "all" {
                return reports([csp_sweep(n.unwrap_or(ctx.bound(10)))]);
            }
            let n = n.ok_or("verify-csp needs n")?;
            ctx.range(Some(n), n)?;
            let f = Family::from_name(family, n, *k).map_err(err)?;
            reports([verify_csp(f)])
        }
        Command::SpringerCheck { lambda } => match lambda {
            Some(l) => reports([ncskein::csp::springer_check(&parse_lambda(l)?)]),
            None => reports([springer_sweep(ctx.bound(8))]),
        },
        Command::ChuCheck { m, n, k } => match (m, n, k) {
            (Some(m), Some(n), Some(k)) => {
                let ok = chu_vandermonde_check(*m, *n, *k);
                let mut r = RunReport::new("chu-check", &["m", "n", "k", "holds"]);
                r.push(vec![m.to_string(), n.to_string(), k.to_string(), ok.to_string()], ok);
                Ok(Output::Reports(vec![r]))
            }
            (None, None, None) => {
                let max = ctx.bound(8);
                reports([chu_sweep(max), summation_sweep(max.max(10))])
            }
            _ => Err("chu-check takes m n k, or no arguments for the sweep".into()),
        },
        Command::TlCompare { n, k } => reports([compare_modules(*n, *k)]),
        Command::TlFiltration { n, k, rule } => reports([
            verify_tl_relations((*rule).into(), *n, *k),
            verify_alternating_kernel(*n, *k),
            doubleton_filtration_check(*n, *k),
        ]),
        Command::Qpoly { name, params } => qpoly(name, params),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    let elapsed = cli.timing.then(|| start.elapsed().as_millis() as u64);
    let mut stdout = std::io::stdout().lock();
    let (text, pass) = match output {
        Output::Data { text, json } => {
            if cli.json {
                (format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable")), true)
            } else {
                (text, true)
            }
        }
        Output::Reports(mut list) => {
            let pass = list.iter().all(RunReport::passed);
            for r in &mut list {
                r.elapsed_ms = elapsed;
            }
            let text = if cli.json {
                let body = json!({
                    "verdict": if pass { "PASS" } else { "FAIL" },
                    "reports": list,
                });
                format!("{}\n", serde_json::to_string_pretty(&body).expect("serializable"))
            } else {
                let mut text: Vec<String> = list.iter().map(RunReport::render).collect();
                if let Some(ms) = elapsed {
                    text.push(format!("elapsed: {ms} ms\n"));
                }
                text.join("\n")
            };
            (text, pass)
        }
    };
    if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
