//! Command-line surface. Each command builds a serialisable report; the
//! binary prints it as JSON or text and exits with the report's code.
//!
//! Exit codes: 0 pass, 1 invalid solution, 2 failed verdict, 3 precondition
//! or parse failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::VerifyConfig;
use crate::error::{Error, Result};
use crate::family::{construct, FamilySpec};
use crate::gbrace::verify::{
    square_free_primes, verify_lemma_key, verify_main, verify_multi2, verify_squarefree, verify_theorem_multi,
};
use crate::brace::LeftBrace;
use crate::gbrace::{squarefree_chain, GBrace, IdealChain};
use crate::perm::factorize;
use crate::report::{Check, TheoremReport};
use crate::solution::enumerate::{enumerate, MAX_ENUMERATION_SIZE};
use crate::solution::{io, validate_table, Solution, Violation, MAX_CONGRUENCE_SIZE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERDICT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Enumeration sizes above this need `--allow-size-5`.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "ybe", version, about = "Involutive solutions of the Yang–Baxter equation and their braces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[arg(long, default_value_t = crate::config::DEFAULT_SEED, global = true)]
    pub seed: u64,
    #[arg(long = "cap-group", default_value_t = crate::config::DEFAULT_GROUP_CAP, global = true)]
    pub cap_group: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the solution axioms
    Validate { path: PathBuf },
    /// Solution, group and chain statistics
    Analyze { path: PathBuf },
    /// Write the solution built from a list of distinct primes
    Construct {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Sizes and tables of the iterated retracts
    RetractTower { path: PathBuf },
    /// Run every structural verifier on an indecomposable square-free solution
    VerifyTheorems { path: PathBuf },
    /// All solutions of a size up to isomorphism
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        indecomposable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "allow-size-5")]
        allow_size_5: bool,
    },
    /// Decide simplicity, with a proper congruence as witness
    SimpleCheck { path: PathBuf },
}

/// What a command produced: the exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A report that renders both ways.
pub trait Render: Serialize {
    fn text(&self) -> String;
    fn code(&self) -> i32;
}

fn render<R: Render>(r: &R, format: Format) -> Output {
    let stdout = match format {
        Format::Json => serde_json::to_string_pretty(r).expect("reports serialise") + "\n",
        Format::Text => r.text(),
    };
    Output { code: r.code(), stdout, stderr: String::new() }
}

fn error_output(e: &Error) -> Output {
    let code = match e {
        Error::Io(_) | Error::Parse { .. } | Error::Precondition(_) | Error::TooLarge { .. } => EXIT_PRECONDITION,
        Error::InvalidSolution(_) => EXIT_INVALID,
        _ => EXIT_PRECONDITION,
    };
    Output { code, stdout: String::new(), stderr: format!("error: {e}\n") }
}

pub fn run(cli: &Cli) -> Output {
    let cfg = VerifyConfig { seed: cli.seed, group_cap: cli.cap_group, ..Default::default() };
    let f = cli.format;
    let result = match &cli.command {
        Command::Validate { path } => cmd_validate(path).map(|r| render(&r, f)),
        Command::Analyze { path } => read(path).and_then(|s| cmd_analyze(&s, &cfg)).map(|r| render(&r, f)),
        Command::Construct { primes, output } => cmd_construct(primes, output.as_deref(), f),
        Command::RetractTower { path } => read(path).map(|s| render(&cmd_retract_tower(&s), f)),
        Command::VerifyTheorems { path } => read(path).map(|s| render(&cmd_verify_theorems(&s, &cfg), f)),
        Command::Enumerate { size, indecomposable, out, allow_size_5 } => {
            cmd_enumerate(*size, *indecomposable, out.as_deref(), *allow_size_5, &cfg).map(|r| render(&r, f))
        }
        Command::SimpleCheck { path } => read(path).and_then(|s| cmd_simple_check(&s)).map(|r| render(&r, f)),
    };
    result.unwrap_or_else(|e| error_output(&e))
}

fn read(path: &Path) -> Result<Solution> {
    io::parse(&std::fs::read_to_string(path)?)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

// validate

#[derive(Serialize, Debug)]
pub struct ValidateReport {
    pub n: usize,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Render for ValidateReport {
    fn text(&self) -> String {
        let mut s = format!("n\t{}\nvalid\t{}\n", self.n, self.valid);
        for v in &self.violations {
            let _ = writeln!(s, "violation\t{v:?}");
        }
        s
    }

    fn code(&self) -> i32 {
        if self.valid {
            EXIT_OK
        } else {
            EXIT_INVALID
        }
    }
}

pub fn cmd_validate(path: &Path) -> Result<ValidateReport> {
    let table = io::parse_table(&std::fs::read_to_string(path)?)?;
    let report = validate_table(&table);
    Ok(ValidateReport { n: table.len(), valid: report.is_valid(), violations: report.violations })
}

// analyze

#[derive(Serialize, Debug)]
pub struct SolutionStats {
    pub n: usize,
    pub valid: bool,
    pub indecomposable: bool,
    pub mp_level: Option<usize>,
    /// `None` when no retract witness exists and the size is beyond the
    /// congruence search
    pub simple: Option<bool>,
    pub retract_sizes: Vec<usize>,
}

#[derive(Serialize, Debug)]
pub struct GroupStats {
    pub order: usize,
    pub sylow_orders: BTreeMap<u64, usize>,
    pub socle_order: usize,
    pub pi: Vec<u64>,
}

/// Orders and block counts of the chain; the subgroups themselves are
/// omitted.
#[derive(Serialize, Debug)]
pub struct ChainSummary {
    pub primes: Vec<u64>,
    pub k_orders: Vec<usize>,
    pub t_orders: Vec<usize>,
    pub block_counts: Vec<usize>,
}

impl From<&IdealChain> for ChainSummary {
    fn from(c: &IdealChain) -> Self {
        ChainSummary {
            primes: c.primes.clone(),
            k_orders: c.k.iter().map(|k| k.len()).collect(),
            t_orders: c.t.iter().map(|t| t.len()).collect(),
            block_counts: c.blocks.iter().map(|b| b.len()).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct AnalyzeReport {
    pub solution: SolutionStats,
    pub group: Option<GroupStats>,
    pub chain: Option<ChainSummary>,
    pub notes: Vec<String>,
}

impl Render for AnalyzeReport {
    fn text(&self) -> String {
        let s = &self.solution;
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        let mut out = String::new();
        let _ = writeln!(out, "n\t{}", s.n);
        let _ = writeln!(out, "valid\t{}", s.valid);
        let _ = writeln!(out, "indecomposable\t{}", s.indecomposable);
        let _ = writeln!(out, "mp_level\t{}", opt(s.mp_level.map(|l| l.to_string())));
        let _ = writeln!(out, "simple\t{}", opt(s.simple.map(|b| b.to_string())));
        let _ = writeln!(out, "retract_sizes\t{}", join(&s.retract_sizes));
        if let Some(g) = &self.group {
            let _ = writeln!(out, "group_order\t{}", g.order);
            for (p, o) in &g.sylow_orders {
                let _ = writeln!(out, "sylow_{p}\t{o}");
            }
            let _ = writeln!(out, "socle_order\t{}", g.socle_order);
            let _ = writeln!(out, "pi\t{}", join(&g.pi));
        }
        if let Some(c) = &self.chain {
            let _ = writeln!(out, "chain_primes\t{}", join(&c.primes));
            let _ = writeln!(out, "chain_k_orders\t{}", join(&c.k_orders));
            let _ = writeln!(out, "chain_t_orders\t{}", join(&c.t_orders));
            let _ = writeln!(out, "chain_blocks\t{}", join(&c.block_counts));
        }
        for n in &self.notes {
            let _ = writeln!(out, "note\t{n}");
        }
        out
    }

    fn code(&self) -> i32 {
        EXIT_OK
    }
}

pub fn cmd_analyze(s: &Solution, cfg: &VerifyConfig) -> Result<AnalyzeReport> {
    let mut notes = Vec::new();
    let simple = match s.is_simple() {
        Ok(b) => Some(b),
        Err(e) => {
            notes.push(format!("simplicity undecided: {e}"));
            None
        }
    };
    let solution = SolutionStats {
        n: s.size(),
        valid: s.validate().is_valid(),
        indecomposable: s.is_indecomposable(),
        mp_level: s.mp_level(),
        simple,
        retract_sizes: s.retract_tower().iter().map(Solution::size).collect(),
    };
    let group = match GBrace::build(s, cfg) {
        Ok(gb) => {
            let primes: Vec<u64> = factorize(gb.order() as u64).into_iter().map(|(p, _)| p).collect();
            let socle = gb.socle_g();
            Some(GroupStats {
                order: gb.order(),
                sylow_orders: primes.iter().map(|&p| (p, gb.sylow_additive_g(p).len())).collect(),
                socle_order: socle.len(),
                pi: factorize(socle.len() as u64).into_iter().map(|(p, _)| p).collect(),
            })
        }
        Err(e @ Error::GroupCapExceeded { .. }) => {
            notes.push(format!("group statistics skipped: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let chain = if square_free_primes(s.size()).is_ok() && s.is_indecomposable() && group.is_some() {
        match squarefree_chain(&s.perm_group(cfg.group_cap)?) {
            Ok(c) => Some(ChainSummary::from(&c)),
            Err(e) => {
                notes.push(format!("chain not built: {e}"));
                None
            }
        }
    } else {
        None
    };
    Ok(AnalyzeReport { solution, group, chain, notes })
}

// construct

pub fn cmd_construct(primes: &[u64], output: Option<&Path>, format: Format) -> Result<Output> {
    let s = construct(&FamilySpec::new(primes.to_vec())?)?;
    let text = io::write(&s);
    match output {
        Some(path) => {
            std::fs::write(path, &text)?;
            let stdout = match format {
                Format::Json => format!("{{\n  \"n\": {},\n  \"path\": {}\n}}\n", s.size(), serde_json::to_string(&path.display().to_string()).expect("string serialises")),
                Format::Text => format!("wrote {} points to {}\n", s.size(), path.display()),
            };
            Ok(Output { code: EXIT_OK, stdout, stderr: String::new() })
        }
        None => Ok(Output { code: EXIT_OK, stdout: text, stderr: String::new() }),
    }
}

// retract-tower

#[derive(Serialize, Debug)]
pub struct TowerLevel {
    pub size: usize,
    /// rows `σ_x(1), …, σ_x(n)` in 1-based points
    pub table: Vec<Vec<usize>>,
}

#[derive(Serialize, Debug)]
pub struct TowerReport {
    pub sizes: Vec<usize>,
    pub mp_level: Option<usize>,
    pub levels: Vec<TowerLevel>,
}

impl Render for TowerReport {
    fn text(&self) -> String {
        let mut out = format!("sizes\t{}\n", join(&self.sizes));
        let _ = writeln!(out, "mp_level\t{}", self.mp_level.map_or("-".into(), |l| l.to_string()));
        out
    }

    fn code(&self) -> i32 {
        EXIT_OK
    }
}

pub fn cmd_retract_tower(s: &Solution) -> TowerReport {
    let tower = s.retract_tower();
    TowerReport {
        sizes: tower.iter().map(Solution::size).collect(),
        mp_level: s.mp_level(),
        levels: tower
            .iter()
            .map(|t| TowerLevel { size: t.size(), table: t.sigmas().iter().map(|p| one_based(&p.to_vec())).collect() })
            .collect(),
    }
}

// verify-theorems

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub n: usize,
    pub passed: bool,
    /// set when the input does not meet the verifiers' hypotheses
    pub precondition: Option<String>,
    pub theorems: Vec<TheoremReport>,
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = &self.precondition {
            let _ = writeln!(out, "precondition failed\t{p}");
        }
        for t in &self.theorems {
            let _ = writeln!(out, "{}\t{}", if t.passed { "PASS" } else { "FAIL" }, t.theorem);
            for (k, v) in &t.facts {
                let _ = writeln!(out, "  fact\t{k}\t{v}");
            }
            for c in &t.checks {
                let _ = write!(out, "  {}\t{}\t{}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
                if let Some(w) = c.witness.as_ref().filter(|_| !c.passed) {
                    let _ = write!(out, "\twitness {w:?}");
                }
                out.push('\n');
            }
        }
        out
    }

    fn code(&self) -> i32 {
        match (&self.precondition, self.passed) {
            (Some(_), _) => EXIT_PRECONDITION,
            (None, true) => EXIT_OK,
            (None, false) => EXIT_VERDICT,
        }
    }
}

pub fn cmd_verify_theorems(s: &Solution, cfg: &VerifyConfig) -> VerifyReport {
    let mut theorems = Vec::new();
    let outcome = (|| -> Result<()> {
        square_free_primes(s.size())?;
        if !s.is_indecomposable() {
            return Err(Error::Precondition("solution is decomposable".into()));
        }
        let gb = GBrace::build(s, cfg)?;
        let mut inv = TheoremReport::new("brace invariants");
        inv.fact("group_order", gb.order());
        for c in gb.check_invariants(cfg) {
            inv.push(c);
        }
        theorems.push(inv);
        let mut chain = squarefree_chain(gb.group())?;
        gb.attach_sylows(&mut chain);
        theorems.push(verify_squarefree(&gb, &chain)?);
        theorems.push(verify_main(s, cfg)?);
        theorems.push(verify_lemma_key(s, cfg)?);
        if s.mp_level().is_some() {
            theorems.push(verify_theorem_multi(&gb, cfg)?);
            theorems.push(verify_multi2(&gb, &chain, cfg)?);
        }
        Ok(())
    })();
    let precondition = outcome.err().map(|e| e.to_string());
    let passed = precondition.is_none() && theorems.iter().all(|t| t.passed);
    VerifyReport { n: s.size(), passed, precondition, theorems }
}

// enumerate

#[derive(Serialize, Debug)]
pub struct ClassStats {
    pub index: usize,
    pub indecomposable: bool,
    pub mp_level: Option<usize>,
    pub group_order: usize,
    pub simple: bool,
    pub retract_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct Census {
    pub size: usize,
    pub indecomposable_only: bool,
    pub count: usize,
    pub classes: Vec<ClassStats>,
    /// for square-free sizes: every indecomposable class has level at most
    /// the number of prime factors
    pub level_bound: Option<Check>,
}

impl Render for Census {
    fn text(&self) -> String {
        let mut out = format!("size\t{}\ncount\t{}\n", self.size, self.count);
        out.push_str("index\tindecomposable\tmp_level\tgroup_order\tsimple\tretract_size\n");
        for c in &self.classes {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                c.index,
                c.indecomposable,
                c.mp_level.map_or("-".into(), |l| l.to_string()),
                c.group_order,
                c.simple,
                c.retract_size
            );
        }
        if let Some(b) = &self.level_bound {
            let _ = writeln!(out, "{}\t{}\t{}", if b.passed { "ok" } else { "FAIL" }, b.name, b.detail);
        }
        out
    }

    fn code(&self) -> i32 {
        if self.level_bound.as_ref().is_none_or(|c| c.passed) {
            EXIT_OK
        } else {
            EXIT_VERDICT
        }
    }
}

pub fn cmd_enumerate(
    n: usize,
    indecomposable_only: bool,
    out: Option<&Path>,
    allow_size_5: bool,
    cfg: &VerifyConfig,
) -> Result<Census> {
    let limit = if allow_size_5 { MAX_ENUMERATION_SIZE } else { DEFAULT_ENUMERATION_LIMIT };
    if n > limit {
        return Err(Error::TooLarge { what: "enumeration size (see --allow-size-5)", size: n, limit });
    }
    let sols = enumerate(n, indecomposable_only)?;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
    }
    let mut classes = Vec::with_capacity(sols.len());
    for (i, s) in sols.iter().enumerate() {
        let file = match out {
            Some(dir) => {
                let name = format!("size{n}_{i:03}.txt");
                std::fs::write(dir.join(&name), io::write(s))?;
                Some(name)
            }
            None => None,
        };
        classes.push(ClassStats {
            index: i,
            indecomposable: s.is_indecomposable(),
            mp_level: s.mp_level(),
            group_order: s.perm_group(cfg.group_cap)?.order(),
            simple: s.is_simple()?,
            retract_size: s.retract().0.size(),
            file,
        });
    }
    let level_bound = square_free_primes(n).ok().map(|primes| {
        let bad = classes
            .iter()
            .find(|c| c.indecomposable && c.mp_level.is_none_or(|l| l > primes.len()));
        Check::expect(
            "indecomposable classes are multipermutation of level at most the number of primes",
            bad.is_none(),
            format!("{} indecomposable classes, {} primes", classes.iter().filter(|c| c.indecomposable).count(), primes.len()),
            bad.map(|c| vec![c.index]).unwrap_or_default(),
        )
    });
    Ok(Census { size: n, indecomposable_only, count: sols.len(), classes, level_bound })
}

// simple-check

#[derive(Serialize, Debug)]
pub struct SimpleReport {
    pub n: usize,
    pub simple: bool,
    /// a proper non-trivial congruence, 1-based
    pub witness: Option<Vec<Vec<usize>>>,
}

impl Render for SimpleReport {
    fn text(&self) -> String {
        let mut out = format!("n\t{}\nsimple\t{}\n", self.n, self.simple);
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "congruence\t{w:?}");
        }
        out
    }

    fn code(&self) -> i32 {
        EXIT_OK
    }
}

pub fn cmd_simple_check(s: &Solution) -> Result<SimpleReport> {
    let simple = s.is_simple()?;
    let witness = if simple || s.size() <= 1 {
        None
    } else {
        let (ret, proj) = s.retract();
        let blocks = if ret.size() > 1 && ret.size() < s.size() {
            proj.kernel().blocks().to_vec()
        } else if s.size() <= MAX_CONGRUENCE_SIZE {
            s.congruences(usize::MAX)?
                .into_iter()
                .find(|c| !c.is_discrete() && !c.is_total())
                .map(|c| c.blocks().blocks().to_vec())
                .ok_or_else(|| Error::Internal("non-simple solution without a proper congruence".into()))?
        } else {
            unreachable!("is_simple decides large sizes only through the retract")
        };
        Some(blocks.iter().map(|b| one_based(b)).collect())
    };
    Ok(SimpleReport { n: s.size(), simple, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["ybe", "--format", "json", "construct", "--primes", "2,3"]).unwrap();
        assert_eq!(cli.format, Format::Json);
        match cli.command {
            Command::Construct { primes, output } => {
                assert_eq!(primes, vec![2, 3]);
                assert!(output.is_none());
            }
            other => panic!("{other:?}"),
        }
        assert!(Cli::try_parse_from(["ybe", "enumerate"]).is_err());
    }

    #[test]
    fn enumerate_census() {
        let cfg = VerifyConfig::default();
        let c = cmd_enumerate(3, true, None, false, &cfg).unwrap();
        assert!(c.level_bound.as_ref().unwrap().passed);
        assert!(c.classes.iter().all(|k| k.mp_level == Some(1)));
        assert!(cmd_enumerate(5, false, None, false, &cfg).is_err());
    }

    #[test]
    fn analyze_family() {
        let cfg = VerifyConfig::default();
        let s = construct(&FamilySpec::new(vec![2, 3]).unwrap()).unwrap();
        let r = cmd_analyze(&s, &cfg).unwrap();
        assert_eq!(r.solution.mp_level, Some(2));
        assert_eq!(r.solution.simple, Some(false));
        assert_eq!(r.group.as_ref().unwrap().order, 18);
        assert_eq!(r.chain.as_ref().unwrap().k_orders.last(), Some(&18));
    }

    #[test]
    fn verify_decomposable_is_a_precondition() {
        let r = cmd_verify_theorems(&Solution::trivial(6), &VerifyConfig::default());
        assert_eq!(r.code(), EXIT_PRECONDITION);
        assert!(r.precondition.is_some());
    }
}
