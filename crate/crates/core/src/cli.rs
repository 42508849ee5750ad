//! Batch command-line access to the library.
//!
//! [`run`] never touches the process: it returns the exit code and both
//! output streams, so transcripts can be compared byte for byte.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage or input error,
//! 3 budget exceeded. Diagnostics go to standard error only.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::{self, Display, Write as _};

use clap::{Parser, Subcommand, ValueEnum};

use crate::budget::{Budget, BudgetExceeded};
use crate::corpus::{random, Quantifiers};
use crate::formula::{parse, render, Formula, RelBound, Term};
use crate::hf::{
    check_critical_point, check_elementary, check_regular, compile_bounded, def_stage, eval_opterm, hereditary_add,
    l_stage, lfp_inductive, lfp_stages, satisfies, EmbeddingError, EmbeddingMap, Env, HfSet, InductiveDef, OpSymbol,
    OpTerm, RegularError, RegularityLevel,
};
use crate::hierarchy::{classify_with, in_level_with, Side, Symbols};
use crate::names::{
    check_name, interpret, name_universe, powerset_name, relation_formula, strong_collection_witness, Environment,
    NameError, NameUniverse,
};
use crate::prover::{eliminate_classes, prove, Logic, Outcome, Sequent};
use crate::topology::{from_poset, omega, parse_topology, FormalTopology, FrameElement, TopologyError};
use crate::translation::{goedel_gentzen, semantic, semantic_coincidence_check};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "cstw", version, about = "Constructive set theory workbench")]
struct Cli {
    /// Step or node budget for searches and enumerations.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Formula depth or name depth, depending on the command.
    #[arg(long, global = true)]
    depth: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// `omega`, `point`, `chain`, `antichain`, or a topology file.
    #[arg(long, global = true, default_value = "omega")]
    topology: String,
    #[arg(long, global = true, default_value = "int")]
    logic: LogicArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LogicArg {
    Int,
    Cl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Sigma,
    Pi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Regular,
    Bcst,
    Inaccessible,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FrameOp {
    Nucleus,
    Meet,
    Join,
    Implies,
    Negate,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical text, syntax tree, free variables and boundedness of a formula.
    Parse {
        formula: String,
        /// `v=t`: substitute the term `t` for `v` first.
        #[arg(long)]
        subst: Option<String>,
        /// Bound the unbounded quantifiers by a term or guard them by a class.
        #[arg(long)]
        relativize: Option<String>,
    },
    /// Minimal Sigma and Pi levels.
    Classify {
        formula: String,
        /// Class symbols whose atoms count as bounded.
        #[arg(long, value_delimiter = ',')]
        classes: Vec<String>,
    },
    /// Whether a formula lies in a given level.
    Hierarchy {
        formula: String,
        side: SideArg,
        level: usize,
        #[arg(long, value_delimiter = ',')]
        classes: Vec<String>,
    },
    /// Compile a bounded formula in x1..xn to an operation term, or evaluate it on the given sets.
    Compile {
        formula: String,
        args: Vec<String>,
        #[arg(long)]
        arity: Option<usize>,
    },
    /// Evaluate an operation term (or a bare operation symbol) on sets.
    HfEval { term: String, args: Vec<String> },
    /// Satisfaction in a transitive set; the universe may be written `V<n>`.
    HfSat { universe: String, formula: String, bindings: Vec<String> },
    /// Least fixed point of a set of rules `<premises, conclusion>`.
    Lfp {
        rules: String,
        #[arg(long)]
        stages: bool,
    },
    /// Truncated constructible stage; with `--base`, the definable-closure stage of a set.
    LStage {
        alpha: usize,
        k: usize,
        #[arg(long)]
        base: Option<String>,
    },
    /// Hereditary addition of naturals.
    Hadd { alpha: u64, gamma: u64 },
    /// Regularity-style checks on a transitive set.
    CheckRegular {
        set: String,
        #[arg(long, default_value = "regular")]
        level: LevelArg,
    },
    /// Elementarity of a map between transitive sets on the bounded corpus.
    CheckElementary {
        source: String,
        target: String,
        /// `x->y`; the identity when no pair is given.
        #[arg(long = "map")]
        maps: Vec<String>,
        /// Also report whether this set is a critical point.
        #[arg(long)]
        critical: Option<String>,
    },
    /// Validate a topology; print its frame size and minimal presentation.
    TopologyValidate { source: String },
    /// List frame elements, or apply a frame operation to subsets such as `{a,b}`.
    Frame { op: Option<FrameOp>, args: Vec<String> },
    /// Heyting value of a formula; bindings `x=SET` are read as check names.
    Interpret { formula: String, bindings: Vec<String> },
    /// Strong collection witness for check names of `a` and `R` at value `p`.
    WitnessCollection {
        a: String,
        relation: String,
        #[arg(default_value = "top")]
        p: String,
    },
    /// The power set name of the check name of a set.
    PowersetName { a: String },
    /// Double-negation translation.
    Translate {
        formula: String,
        bindings: Vec<String>,
        /// Evaluate the semantic translation and compare with the direct value.
        #[arg(long)]
        semantic: bool,
        /// Check coincidence on this many seeded random formulas instead.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Search for a derivation of `A, B => C`.
    Prove {
        sequent: String,
        /// Print only the verdict.
        #[arg(long)]
        quiet: bool,
    },
    /// Remove class variables using the given comprehension axioms.
    EliminateClasses {
        goal: String,
        #[arg(long = "axiom")]
        axioms: Vec<String>,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<BudgetExceeded> for Failure {
    fn from(b: BudgetExceeded) -> Self {
        Failure::Budget(b.to_string())
    }
}

impl From<NameError> for Failure {
    fn from(e: NameError) -> Self {
        match e {
            NameError::Budget(b) => b.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<TopologyError> for Failure {
    fn from(e: TopologyError) -> Self {
        match e {
            TopologyError::Budget(b) => b.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<RegularError> for Failure {
    fn from(e: RegularError) -> Self {
        match e {
            RegularError::Budget(b) => b.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<EmbeddingError> for Failure {
    fn from(e: EmbeddingError) -> Self {
        match e {
            EmbeddingError::Budget(b) => b.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Exit code and standard output.
type Reply = Result<(i32, String), Failure>;

fn answer(ok: bool, text: String) -> Reply {
    Ok((if ok { 0 } else { 1 }, text))
}

/// Runs one command; `args` excludes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("cstw")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { code: 2, stdout: String::new(), stderr: text }
            } else {
                CommandResult { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => CommandResult { code, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => CommandResult { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Budget(msg)) => CommandResult { code: 3, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

impl Cli {
    fn budget(&self) -> Budget {
        match self.budget {
            Some(n) => Budget::default().with_steps(n),
            None => Budget::default(),
        }
    }

    fn topology(&self) -> Result<FormalTopology, Failure> {
        load_topology(&self.topology, &self.budget())?
            .map_err(|vs| usage(format!("{}: {} axiom violation(s); first: {}", self.topology, vs.len(), vs[0])))
    }

    fn universe(&self, t: &FormalTopology) -> Result<NameUniverse, Failure> {
        Ok(name_universe(t, self.depth.unwrap_or(2), &self.budget())?)
    }
}

/// A built-in topology or a topology file; axiom violations are a separate outcome.
fn load_topology(source: &str, budget: &Budget) -> Result<Result<FormalTopology, Vec<String>>, Failure> {
    Ok(Ok(match source {
        "omega" => omega(),
        "point" => from_poset(&["a"], &[])?,
        "chain" => from_poset(&["a", "b"], &[("a", "b")])?,
        "antichain" => from_poset(&["a", "b"], &[])?,
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
            match parse_topology(&text, budget) {
                Err(TopologyError::Invalid(vs)) => return Ok(Err(vs)),
                t => t?,
            }
        }
    }))
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(usage)
}

/// HF literal with two conveniences: a natural `n` is the von Neumann
/// numeral and `<x,y>` is the Kuratowski pair.
pub fn parse_hf(text: &str) -> Result<HfSet, String> {
    let b = text.as_bytes();
    let mut pos = 0;
    let set = hf_item(b, &mut pos)?;
    skip(b, &mut pos);
    if pos != b.len() {
        return Err(format!("unexpected input at byte {pos} of {text:?}"));
    }
    Ok(set)
}

fn skip(b: &[u8], pos: &mut usize) {
    while b.get(*pos).is_some_and(u8::is_ascii_whitespace) {
        *pos += 1;
    }
}

fn expect(b: &[u8], pos: &mut usize, c: u8) -> Result<(), String> {
    skip(b, pos);
    if b.get(*pos) == Some(&c) {
        *pos += 1;
        Ok(())
    } else {
        Err(format!("expected '{}' at byte {pos}", c as char))
    }
}

fn hf_item(b: &[u8], pos: &mut usize) -> Result<HfSet, String> {
    skip(b, pos);
    match b.get(*pos) {
        Some(b'{') => {
            *pos += 1;
            let mut elems = Vec::new();
            skip(b, pos);
            if b.get(*pos) == Some(&b'}') {
                *pos += 1;
                return Ok(HfSet::empty());
            }
            loop {
                elems.push(hf_item(b, pos)?);
                skip(b, pos);
                match b.get(*pos) {
                    Some(b',') => *pos += 1,
                    Some(b'}') => {
                        *pos += 1;
                        return Ok(HfSet::from_elements(elems));
                    }
                    _ => return Err(format!("expected ',' or '}}' at byte {pos}")),
                }
            }
        }
        Some(b'<') => {
            *pos += 1;
            let x = hf_item(b, pos)?;
            expect(b, pos, b',')?;
            let y = hf_item(b, pos)?;
            expect(b, pos, b'>')?;
            Ok(HfSet::ordered_pair(&x, &y))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while b.get(*pos).is_some_and(u8::is_ascii_digit) {
                *pos += 1;
            }
            let n: usize = std::str::from_utf8(&b[start..*pos]).unwrap().parse().map_err(|e| format!("{e}"))?;
            if n > 16 {
                return Err(format!("numeral {n} is too large"));
            }
            Ok(HfSet::von_neumann(n))
        }
        _ => Err(format!("expected a set at byte {pos}")),
    }
}

fn hf(text: &str) -> Result<HfSet, Failure> {
    parse_hf(text).map_err(usage)
}

/// `x=SET` pairs.
fn bindings(items: &[String]) -> Result<Vec<(String, HfSet)>, Failure> {
    items
        .iter()
        .map(|item| {
            let (x, s) = item.split_once('=').ok_or_else(|| usage(format!("expected x=SET, found {item:?}")))?;
            Ok((x.trim().to_string(), hf(s)?))
        })
        .collect()
}

fn term(text: &str) -> Result<Term, Failure> {
    let text = text.trim();
    if text.starts_with(['{', '<']) || text.starts_with(|c: char| c.is_ascii_digit()) {
        Ok(Term::Lit(hf(text)?))
    } else if !text.is_empty() && text.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'') {
        Ok(Term::var(text))
    } else {
        Err(usage(format!("not a term: {text:?}")))
    }
}

/// Constructor-style syntax tree, e.g. `BoundedAll(x, y, Eq(x, x))`.
pub fn syntax_tree(f: &Formula) -> String {
    let list = |xs: &[Formula]| xs.iter().map(syntax_tree).collect::<Vec<_>>().join(", ");
    match f {
        Formula::Falsum => "Falsum".into(),
        Formula::Prop(p) => format!("Prop({p})"),
        Formula::Eq(a, b) => format!("Eq({a}, {b})"),
        Formula::Mem(a, b) => format!("Mem({a}, {b})"),
        Formula::ClassMem(a, c) => format!("ClassMem({a}, {c})"),
        Formula::ClassEq(a, b) => format!("ClassEq({a}, {b})"),
        Formula::And(a, b) => format!("And({}, {})", syntax_tree(a), syntax_tree(b)),
        Formula::Or(a, b) => format!("Or({}, {})", syntax_tree(a), syntax_tree(b)),
        Formula::Imp(a, b) => format!("Imp({}, {})", syntax_tree(a), syntax_tree(b)),
        Formula::BigAnd(xs) => format!("BigAnd[{}]", list(xs)),
        Formula::BigOr(xs) => format!("BigOr[{}]", list(xs)),
        Formula::BoundedAll(x, t, b) => format!("BoundedAll({x}, {t}, {})", syntax_tree(b)),
        Formula::BoundedEx(x, t, b) => format!("BoundedEx({x}, {t}, {})", syntax_tree(b)),
        Formula::All(x, b) => format!("All({x}, {})", syntax_tree(b)),
        Formula::Ex(x, b) => format!("Ex({x}, {})", syntax_tree(b)),
        Formula::ClassAll(x, b) => format!("ClassAll({x}, {})", syntax_tree(b)),
        Formula::ClassEx(x, b) => format!("ClassEx({x}, {})", syntax_tree(b)),
    }
}

/// `#i`, a bare symbol such as `F_p`, or `F_p(t, t)`.
fn op_term(text: &str, arity: usize) -> Result<OpTerm, Failure> {
    let text = text.trim();
    if let Ok(op) = text.parse::<OpSymbol>() {
        let args = (1..=op.arity()).map(OpTerm::arg).collect();
        return OpTerm::app(op, args).map_err(usage);
    }
    let b = text.as_bytes();
    let mut pos = 0;
    let t = op_item(text, b, &mut pos)?;
    skip(b, &mut pos);
    if pos != b.len() {
        return Err(usage(format!("unexpected input at byte {pos} of {text:?}")));
    }
    if t.max_arg() > arity {
        return Err(usage(format!("term uses #{} but only {arity} argument(s) are given", t.max_arg())));
    }
    Ok(t)
}

fn op_item(text: &str, b: &[u8], pos: &mut usize) -> Result<OpTerm, Failure> {
    skip(b, pos);
    let start = *pos;
    if b.get(*pos) == Some(&b'#') {
        *pos += 1;
        let digits = *pos;
        while b.get(*pos).is_some_and(u8::is_ascii_digit) {
            *pos += 1;
        }
        let i: usize = text[digits..*pos].parse().map_err(|_| usage(format!("bad placeholder at byte {start}")))?;
        if i == 0 {
            return Err(usage("placeholders start at #1"));
        }
        return Ok(OpTerm::arg(i));
    }
    while b.get(*pos).is_some_and(|c| !matches!(c, b'(' | b')' | b',') && !c.is_ascii_whitespace()) {
        *pos += 1;
    }
    let op: OpSymbol = text[start..*pos].parse().map_err(usage)?;
    expect(b, pos, b'(').map_err(usage)?;
    let mut args = vec![op_item(text, b, pos)?];
    loop {
        skip(b, pos);
        match b.get(*pos) {
            Some(b',') => {
                *pos += 1;
                args.push(op_item(text, b, pos)?);
            }
            Some(b')') => {
                *pos += 1;
                break;
            }
            _ => return Err(usage(format!("expected ',' or ')' at byte {pos}"))),
        }
    }
    OpTerm::app(op, args).map_err(usage)
}

fn subset(t: &FormalTopology, text: &str) -> Result<u64, Failure> {
    match text.trim() {
        "top" => return Ok(t.top().0),
        "bottom" => return Ok(t.bottom().0),
        _ => {}
    }
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| usage(format!("expected a subset like {{a,b}}, found {text:?}")))?;
    let names: Vec<&str> = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(t.subset(&names)?)
}

fn element(t: &FormalTopology, text: &str) -> Result<FrameElement, Failure> {
    let p = subset(t, text)?;
    t.element(p).ok_or_else(|| usage(format!("{} is not a frame element; its nucleus is {}", t.show(p), t.show(t.nucleus(p).0))))
}

fn environment(t: &FormalTopology, items: &[String]) -> Result<Environment, Failure> {
    Ok(bindings(items)?.into_iter().fold(Environment::new(), |env, (x, s)| env.with(&x, check_name(&s, t))))
}

fn dispatch(cli: &Cli) -> Reply {
    let mut out = String::new();
    match &cli.command {
        Command::Parse { formula: text, subst, relativize } => {
            let mut f = formula(text)?;
            if let Some(s) = subst {
                let (v, t) = s.split_once('=').ok_or_else(|| usage("expected --subst v=t"))?;
                f = f.substitute(v.trim(), &term(t)?);
            }
            if let Some(r) = relativize {
                let r = r.trim();
                let bound = if r.starts_with(|c: char| c.is_ascii_uppercase()) {
                    RelBound::Class(r.to_string())
                } else {
                    RelBound::Term(term(r)?)
                };
                f = f.relativize(&bound);
            }
            let free: Vec<String> = f.free_vars().into_iter().collect();
            writeln!(out, "{}", render(&f)).unwrap();
            writeln!(out, "ast: {}", syntax_tree(&f)).unwrap();
            writeln!(out, "free: {{{}}}", free.join(",")).unwrap();
            writeln!(out, "bounded: {}", f.is_bounded()).unwrap();
            Ok((0, out))
        }
        Command::Classify { formula: text, classes } => {
            let symbols: Symbols = classes.iter().cloned().collect();
            let (s, p) = classify_with(&formula(text)?, &symbols).map_err(usage)?;
            Ok((0, format!("{s} / {p}\n")))
        }
        Command::Hierarchy { formula: text, side, level, classes } => {
            let symbols: Symbols = classes.iter().cloned().collect();
            let side = match side {
                SideArg::Sigma => Side::Sigma,
                SideArg::Pi => Side::Pi,
            };
            let inside = in_level_with(&formula(text)?, side, *level, &symbols).map_err(usage)?;
            answer(inside, format!("{inside}\n"))
        }
        Command::Compile { formula: text, args, arity } => {
            let f = formula(text)?;
            let sets: Vec<HfSet> = args.iter().map(|a| hf(a)).collect::<Result<_, _>>()?;
            let used = f.free_vars().iter().filter_map(|v| v.strip_prefix('x')?.parse::<usize>().ok()).max().unwrap_or(1);
            let n = arity.unwrap_or(if sets.is_empty() { used } else { sets.len() });
            let t = compile_bounded(&f, n).map_err(usage)?;
            // With arguments only the value is printed; terms grow quickly.
            if sets.is_empty() {
                Ok((0, format!("{t}\n")))
            } else {
                Ok((0, format!("{}\n", eval_opterm(&t, &sets).map_err(usage)?)))
            }
        }
        Command::HfEval { term: text, args } => {
            let sets: Vec<HfSet> = args.iter().map(|a| hf(a)).collect::<Result<_, _>>()?;
            let t = op_term(text, sets.len())?;
            Ok((0, format!("{}\n", eval_opterm(&t, &sets).map_err(usage)?)))
        }
        Command::HfSat { universe, formula: text, bindings: items } => {
            let u = match universe.strip_prefix('V').map(str::parse::<usize>) {
                Some(Ok(n)) if n <= 5 => HfSet::cumulative(n),
                Some(_) => return Err(usage(format!("universe {universe} is not available; use V0..V5 or a literal"))),
                None => hf(universe)?,
            };
            if !u.is_transitive() {
                return Err(usage(format!("universe {u} is not transitive")));
            }
            let env: Env = bindings(items)?.into_iter().collect();
            for (x, s) in &env {
                if !u.contains(s) {
                    return Err(usage(format!("{x} = {s} is not in the universe")));
                }
            }
            let holds = satisfies(&u, &formula(text)?, &env).map_err(usage)?;
            answer(holds, format!("{holds}\n"))
        }
        Command::Lfp { rules, stages } => {
            let phi = InductiveDef::from_hf(&hf(rules)?).map_err(|e| usage(format!("{} is not a pair", e.0)))?;
            if *stages {
                for (i, s) in lfp_stages(&phi).iter().enumerate() {
                    writeln!(out, "stage {i}: {s}").unwrap();
                }
            }
            writeln!(out, "{}", lfp_inductive(&phi)).unwrap();
            Ok((0, out))
        }
        Command::LStage { alpha, k, base } => {
            let budget = cli.budget();
            let s = match base {
                Some(a) => def_stage(&hf(a)?, *k, &budget)?,
                None => l_stage(*alpha, *k, &budget)?,
            };
            Ok((0, format!("{s}\n")))
        }
        Command::Hadd { alpha, gamma } => {
            if *alpha > 64 || *gamma > 64 {
                return Err(usage("arguments above 64 are not supported"));
            }
            Ok((0, format!("{}\n", hereditary_add(*alpha, *gamma))))
        }
        Command::CheckRegular { set, level } => {
            let level = match level {
                LevelArg::Regular => RegularityLevel::Regular,
                LevelArg::Bcst => RegularityLevel::Bcst,
                LevelArg::Inaccessible => RegularityLevel::InaccessibleConditions,
            };
            let report = check_regular(&hf(set)?, level, &cli.budget())?;
            answer(report.holds, report.to_string())
        }
        Command::CheckElementary { source, target, maps, critical } => {
            let (u, w) = (hf(source)?, hf(target)?);
            let graph: BTreeMap<HfSet, HfSet> = if maps.is_empty() {
                u.iter().map(|x| (x.clone(), x.clone())).collect()
            } else {
                maps.iter()
                    .map(|m| {
                        let (x, y) = m.split_once("->").ok_or_else(|| usage(format!("expected x->y, found {m:?}")))?;
                        Ok((hf(x)?, hf(y)?))
                    })
                    .collect::<Result<_, Failure>>()?
            };
            let j = EmbeddingMap::new(u, w, graph)?;
            let depth = cli.depth.unwrap_or(2);
            let mut ok = match check_elementary(&j, depth, &cli.budget())? {
                None => {
                    writeln!(out, "elementary on bounded formulas of depth <= {depth}").unwrap();
                    true
                }
                Some(fail) => {
                    let params: Vec<String> = fail.params.iter().map(HfSet::to_string).collect();
                    writeln!(out, "not elementary: {} at ({})", render(&fail.formula), params.join(", ")).unwrap();
                    false
                }
            };
            if let Some(k) = critical {
                let k = hf(k)?;
                let is = check_critical_point(&j, &k)?;
                writeln!(out, "critical point {k}: {is}").unwrap();
                ok &= is;
            }
            answer(ok, out)
        }
        Command::TopologyValidate { source } => match load_topology(source, &cli.budget())? {
            Ok(t) => {
                let frame = t.frame_elements(&cli.budget())?;
                Ok((0, format!("ok: {} tokens, {} frame elements\n{}", t.len(), frame.len(), t.to_text())))
            }
            Err(violations) => Ok((1, violations.iter().map(|v| format!("{v}\n")).collect())),
        },
        Command::Frame { op, args } => {
            let t = cli.topology()?;
            let Some(op) = op else {
                for e in t.frame_elements(&cli.budget())? {
                    writeln!(out, "{}", t.show(e.0)).unwrap();
                }
                return Ok((0, out));
            };
            let need = match op {
                FrameOp::Nucleus | FrameOp::Negate => 1,
                _ => 2,
            };
            if args.len() != need {
                return Err(usage(format!("{op:?} takes {need} argument(s)")));
            }
            let r = match op {
                FrameOp::Nucleus => t.nucleus(subset(&t, &args[0])?),
                FrameOp::Negate => t.negate(element(&t, &args[0])?),
                FrameOp::Meet => t.meet(element(&t, &args[0])?, element(&t, &args[1])?),
                FrameOp::Join => t.join(element(&t, &args[0])?, element(&t, &args[1])?),
                FrameOp::Implies => t.implies(element(&t, &args[0])?, element(&t, &args[1])?),
            };
            Ok((0, format!("{}\n", t.show(r.0))))
        }
        Command::Interpret { formula: text, bindings: items } => {
            let t = cli.topology()?;
            let u = cli.universe(&t)?;
            let v = interpret(&formula(text)?, &environment(&t, items)?, &u)?;
            Ok((0, format!("{}\n", t.show(v.0))))
        }
        Command::WitnessCollection { a, relation, p } => {
            let t = cli.topology()?;
            let u = cli.universe(&t)?;
            let (a, r, p) = (check_name(&hf(a)?, &t), check_name(&hf(relation)?, &t), element(&t, p)?);
            let b = match strong_collection_witness(&a, &r, p, &u) {
                Ok(b) => b,
                Err(NameError::Precondition { x }) => {
                    return Ok((1, format!("precondition fails at {}\n", x.render(&t))));
                }
                Err(e) => return Err(e.into()),
            };
            let env = Environment::new().with("a", a).with("b", b.clone()).with("R", r);
            let onto = formula("(all x in a. ex y in b. rxy) & (all y in b. ex x in a. rxy)")?
                .map_atoms(&mut |g| (*g == Formula::prop("rxy")).then(|| relation_formula("R", "x", "y")));
            let value = interpret(&onto, &env, &u)?;
            writeln!(out, "b = {}", b.render(&t)).unwrap();
            writeln!(out, "value = {}", t.show(value.0)).unwrap();
            writeln!(out, "p <= value: {}", p.leq(value)).unwrap();
            answer(p.leq(value), out)
        }
        Command::PowersetName { a } => {
            let t = cli.topology()?;
            let u = cli.universe(&t)?;
            let b = powerset_name(&check_name(&hf(a)?, &t), &u, &cli.budget())?;
            writeln!(out, "domain size: {}", b.entries().len()).unwrap();
            for (d, _) in b.entries() {
                writeln!(out, "{}", d.render(&t)).unwrap();
            }
            Ok((0, out))
        }
        Command::Translate { formula: text, bindings: items, semantic: sem, sample } => {
            if let Some(n) = sample {
                let t = cli.topology()?;
                let u = cli.universe(&t)?;
                let corpus = random(cli.seed, *n, &["x1"], cli.depth.unwrap_or(2).min(3), Quantifiers::FirstOrder);
                let mut agree = 0;
                for f in &corpus {
                    let mut all = true;
                    for y in u.names() {
                        all &= semantic_coincidence_check(f, &Environment::new().with("x1", y.clone()), &u)?;
                    }
                    agree += all as usize;
                }
                writeln!(out, "{agree}/{n} coincide").unwrap();
                return answer(agree == *n, out);
            }
            let f = formula(text)?;
            if !*sem {
                return Ok((0, format!("{}\n", render(&goedel_gentzen(&f)))));
            }
            let t = cli.topology()?;
            let u = cli.universe(&t)?;
            let env = environment(&t, items)?;
            let translated = semantic(&f, &env, &u)?;
            let coincide = semantic_coincidence_check(&f, &env, &u)?;
            writeln!(out, "translation holds: {translated}").unwrap();
            writeln!(out, "coincides with value = top: {coincide}").unwrap();
            answer(coincide, out)
        }
        Command::Prove { sequent, quiet } => {
            let s: Sequent = sequent.parse().map_err(usage)?;
            let logic = match cli.logic {
                LogicArg::Int => Logic::Intuitionistic,
                LogicArg::Cl => Logic::Classical,
            };
            match prove(&s, logic, cli.budget.unwrap_or(1_000_000)) {
                Outcome::Proved(d) => {
                    out.push_str("provable\n");
                    if !quiet {
                        out.push_str(&d.render());
                    }
                    Ok((0, out))
                }
                Outcome::NotProvable => Ok((1, "not provable\n".into())),
                Outcome::Incomplete => Ok((1, "no proof found; term instantiation was restricted\n".into())),
                Outcome::BudgetExceeded => Err(Failure::Budget("budget exceeded: proof search node limit".into())),
            }
        }
        Command::EliminateClasses { goal, axioms } => {
            let axioms: Vec<Formula> = axioms.iter().map(|a| formula(a)).collect::<Result<_, _>>()?;
            let (axs, g) = eliminate_classes(&axioms, &formula(goal)?).map_err(usage)?;
            for a in &axs {
                writeln!(out, "axiom: {}", render(a)).unwrap();
            }
            writeln!(out, "goal: {}", render(&g)).unwrap();
            Ok((0, out))
        }
    }
}

impl fmt::Display for CommandResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.stdout)?;
        f.write_str(&self.stderr)
    }
}
