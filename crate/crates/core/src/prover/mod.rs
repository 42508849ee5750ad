//! Backward proof search in a contraction-free multi-succedent calculus.
//!
//! Sequents are pairs of finite sets, so contraction is built in. The
//! intuitionistic calculus drops the side succedent `Δ` in the premises of
//! `R→`, `R∀`, `R∀∈` and `R⋀`; the classical calculus keeps it. `L→` keeps
//! its principal formula in the left premise, which the restricted right
//! rules need for completeness.

mod check;
mod classes;
mod search;

pub use check::{check_derivation, CheckReport, InvalidNode};
pub use classes::{eliminate_classes, EliminationError};
pub use search::{prove, prove_with_cuts, Outcome};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{parse, render, Formula, ParseError, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Logic {
    Intuitionistic,
    Classical,
}

impl FromStr for Logic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "int" | "intuitionistic" => Ok(Logic::Intuitionistic),
            "cl" | "classical" => Ok(Logic::Classical),
            _ => Err(format!("unknown logic {s:?}; expected int or cl")),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub ante: BTreeSet<Formula>,
    pub succ: BTreeSet<Formula>,
}

impl Sequent {
    pub fn new(ante: impl IntoIterator<Item = Formula>, succ: impl IntoIterator<Item = Formula>) -> Sequent {
        Sequent { ante: ante.into_iter().collect(), succ: succ.into_iter().collect() }
    }

    /// `⟹ f`.
    pub fn goal(f: Formula) -> Sequent {
        Sequent::new([], [f])
    }

    /// Componentwise inclusion.
    pub fn subsumed_by(&self, other: &Sequent) -> bool {
        self.ante.is_subset(&other.ante) && self.succ.is_subset(&other.succ)
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.ante.iter().chain(&self.succ)
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        self.formulas().flat_map(Formula::free_vars).collect()
    }

    pub fn terms(&self) -> BTreeSet<Term> {
        self.formulas().flat_map(Formula::free_terms).collect()
    }

    fn edit(&self, left: bool, remove: Option<&Formula>, add: &[Formula]) -> Sequent {
        let mut s = self.clone();
        let side = if left { &mut s.ante } else { &mut s.succ };
        if let Some(f) = remove {
            side.remove(f);
        }
        side.extend(add.iter().cloned());
        s
    }

    fn left(&self, remove: Option<&Formula>, add: &[Formula]) -> Sequent {
        self.edit(true, remove, add)
    }

    fn right(&self, remove: Option<&Formula>, add: &[Formula]) -> Sequent {
        self.edit(false, remove, add)
    }

    /// `Γ, extra ⟹ f`: the single-succedent premise shape.
    fn only(&self, extra: &[Formula], f: Formula) -> Sequent {
        let mut ante = self.ante.clone();
        ante.extend(extra.iter().cloned());
        Sequent { ante, succ: [f].into() }
    }
}

fn join(side: &BTreeSet<Formula>) -> String {
    side.iter().map(render).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, s) = (join(&self.ante), join(&self.succ));
        match (a.is_empty(), s.is_empty()) {
            (true, true) => f.write_str("=>"),
            (true, false) => write!(f, "=> {s}"),
            (false, true) => write!(f, "{a} =>"),
            (false, false) => write!(f, "{a} => {s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequentParseError {
    #[error("formula {index} of the sequent: {source}")]
    Formula { index: usize, source: ParseError },
    #[error("unbalanced brackets in sequent")]
    Unbalanced,
    #[error("a sequent has at most one =>")]
    SeveralArrows,
}

/// Splits at `sep` outside `()`, `[]` and `{}`.
fn split_top<'a>(text: &'a str, sep: &str) -> Result<Vec<&'a str>, SequentParseError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' | b'[' | b'{' => depth += 1,
            b')' | b']' | b'}' => depth -= 1,
            _ if depth == 0 && text[i..].starts_with(sep) => {
                parts.push(&text[start..i]);
                i += sep.len();
                start = i;
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(SequentParseError::Unbalanced);
        }
        i += 1;
    }
    if depth != 0 {
        return Err(SequentParseError::Unbalanced);
    }
    parts.push(&text[start..]);
    Ok(parts)
}

impl FromStr for Sequent {
    type Err = SequentParseError;

    /// `A, B => C, D`; text without `=>` is a lone succedent formula.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let halves = split_top(text, "=>")?;
        let (ante, succ) = match halves.as_slice() {
            [s] => ("", *s),
            [a, s] => (*a, *s),
            _ => return Err(SequentParseError::SeveralArrows),
        };
        let mut index = 0;
        let mut side = |text: &str| -> Result<BTreeSet<Formula>, SequentParseError> {
            let mut out = BTreeSet::new();
            if text.trim().is_empty() {
                return Ok(out);
            }
            for part in split_top(text, ",")? {
                index += 1;
                out.insert(parse(part).map_err(|source| SequentParseError::Formula { index, source })?);
            }
            Ok(out)
        };
        let ante = side(ante)?;
        let succ = side(succ)?;
        Ok(Sequent { ante, succ })
    }
}

/// A rule instance: the rule name with its principal formula and, for the
/// quantifier rules, the instance term or eigenvariable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Axiom(Formula),
    LBot,
    LAnd(Formula),
    RAnd(Formula),
    LOr(Formula),
    ROr(Formula),
    LImp(Formula),
    RImp(Formula),
    LBigAnd(Formula, usize),
    RBigAnd(Formula),
    LBigOr(Formula),
    RBigOr(Formula, usize),
    LAll(Formula, Term),
    RAll(Formula, String),
    LEx(Formula, String),
    REx(Formula, Term),
    LAllIn(Formula, Term),
    RAllIn(Formula, String),
    LExIn(Formula, String),
    RExIn(Formula, Term),
    Cut(Formula),
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Axiom(_) => "Ax",
            Rule::LBot => "Lfalse",
            Rule::LAnd(_) => "L&",
            Rule::RAnd(_) => "R&",
            Rule::LOr(_) => "L|",
            Rule::ROr(_) => "R|",
            Rule::LImp(_) => "L->",
            Rule::RImp(_) => "R->",
            Rule::LBigAnd(..) => "Lbigand",
            Rule::RBigAnd(_) => "Rbigand",
            Rule::LBigOr(_) => "Lbigor",
            Rule::RBigOr(..) => "Rbigor",
            Rule::LAll(..) => "Lall",
            Rule::RAll(..) => "Rall",
            Rule::LEx(..) => "Lex",
            Rule::REx(..) => "Rex",
            Rule::LAllIn(..) => "Lall-in",
            Rule::RAllIn(..) => "Rall-in",
            Rule::LExIn(..) => "Lex-in",
            Rule::RExIn(..) => "Rex-in",
            Rule::Cut(_) => "Cut",
        }
    }

    pub fn principal(&self) -> Option<&Formula> {
        match self {
            Rule::LBot => None,
            Rule::Axiom(f)
            | Rule::LAnd(f)
            | Rule::RAnd(f)
            | Rule::LOr(f)
            | Rule::ROr(f)
            | Rule::LImp(f)
            | Rule::RImp(f)
            | Rule::LBigAnd(f, _)
            | Rule::RBigAnd(f)
            | Rule::LBigOr(f)
            | Rule::RBigOr(f, _)
            | Rule::LAll(f, _)
            | Rule::RAll(f, _)
            | Rule::LEx(f, _)
            | Rule::REx(f, _)
            | Rule::LAllIn(f, _)
            | Rule::RAllIn(f, _)
            | Rule::LExIn(f, _)
            | Rule::RExIn(f, _)
            | Rule::Cut(f) => Some(f),
        }
    }

    /// Name plus instance data, as printed in derivation trees.
    pub fn label(&self) -> String {
        match self {
            Rule::LBigAnd(_, k) | Rule::RBigOr(_, k) => format!("{}[{k}]", self.name()),
            Rule::LAll(_, t) | Rule::REx(_, t) | Rule::LAllIn(_, t) | Rule::RExIn(_, t) => format!("{}[{t}]", self.name()),
            Rule::RAll(_, y) | Rule::LEx(_, y) | Rule::RAllIn(_, y) | Rule::LExIn(_, y) => format!("{}[{y}]", self.name()),
            Rule::Cut(f) => format!("Cut[{}]", render(f)),
            _ => self.name().to_string(),
        }
    }
}

/// Formulas without a rule of their own; they close branches like atoms.
fn is_opaque(f: &Formula) -> bool {
    (f.is_atomic() && *f != Formula::Falsum) || matches!(f, Formula::ClassAll(..) | Formula::ClassEx(..))
}

fn member(side: &BTreeSet<Formula>, f: &Formula, where_: &str) -> Result<(), String> {
    if side.contains(f) {
        Ok(())
    } else {
        Err(format!("principal formula {} is not in the {where_}", render(f)))
    }
}

fn fresh_for(s: &Sequent, y: &str) -> Result<(), String> {
    if s.free_vars().contains(y) {
        Err(format!("eigenvariable {y} occurs free in the conclusion"))
    } else {
        Ok(())
    }
}

fn shape_error(rule: &Rule) -> String {
    let f = rule.principal().map(render).unwrap_or_default();
    format!("{} does not apply to {f}", rule.name())
}

/// The premises of `rule` applied backwards to `s`, or why it does not apply.
pub fn premises(rule: &Rule, s: &Sequent, logic: Logic) -> Result<Vec<Sequent>, String> {
    use Formula as F;
    let int = logic == Logic::Intuitionistic;
    let bad = || shape_error(rule);
    match rule {
        Rule::Axiom(p) => {
            if !is_opaque(p) {
                return Err(format!("axiom on non-atomic formula {}", render(p)));
            }
            member(&s.ante, p, "antecedent")?;
            member(&s.succ, p, "succedent")?;
            Ok(vec![])
        }
        Rule::LBot => {
            member(&s.ante, &F::Falsum, "antecedent")?;
            Ok(vec![])
        }
        Rule::LAnd(f) => {
            member(&s.ante, f, "antecedent")?;
            let F::And(a, b) = f else { return Err(bad()) };
            Ok(vec![s.left(Some(f), &[(**a).clone(), (**b).clone()])])
        }
        Rule::RAnd(f) => {
            member(&s.succ, f, "succedent")?;
            let F::And(a, b) = f else { return Err(bad()) };
            Ok(vec![s.right(Some(f), &[(**a).clone()]), s.right(Some(f), &[(**b).clone()])])
        }
        Rule::LOr(f) => {
            member(&s.ante, f, "antecedent")?;
            let F::Or(a, b) = f else { return Err(bad()) };
            Ok(vec![s.left(Some(f), &[(**a).clone()]), s.left(Some(f), &[(**b).clone()])])
        }
        Rule::ROr(f) => {
            member(&s.succ, f, "succedent")?;
            let F::Or(a, b) = f else { return Err(bad()) };
            Ok(vec![s.right(Some(f), &[(**a).clone(), (**b).clone()])])
        }
        Rule::LImp(f) => {
            member(&s.ante, f, "antecedent")?;
            let F::Imp(a, b) = f else { return Err(bad()) };
            Ok(vec![s.right(None, &[(**a).clone()]), s.left(Some(f), &[(**b).clone()])])
        }
        Rule::RImp(f) => {
            member(&s.succ, f, "succedent")?;
            let F::Imp(a, b) = f else { return Err(bad()) };
            Ok(vec![if int {
                s.only(&[(**a).clone()], (**b).clone())
            } else {
                s.left(None, &[(**a).clone()]).right(Some(f), &[(**b).clone()])
            }])
        }
        Rule::LBigAnd(f, k) => {
            member(&s.ante, f, "antecedent")?;
            let F::BigAnd(v) = f else { return Err(bad()) };
            let c = v.get(*k).ok_or_else(|| format!("conjunct index {k} out of range"))?;
            Ok(vec![s.left(None, std::slice::from_ref(c))])
        }
        Rule::RBigAnd(f) => {
            member(&s.succ, f, "succedent")?;
            let F::BigAnd(v) = f else { return Err(bad()) };
            Ok(v.iter()
                .map(|c| if int { s.only(&[], c.clone()) } else { s.right(Some(f), std::slice::from_ref(c)) })
                .collect())
        }
        Rule::LBigOr(f) => {
            member(&s.ante, f, "antecedent")?;
            let F::BigOr(v) = f else { return Err(bad()) };
            Ok(v.iter().map(|c| s.left(Some(f), std::slice::from_ref(c))).collect())
        }
        Rule::RBigOr(f, k) => {
            member(&s.succ, f, "succedent")?;
            let F::BigOr(v) = f else { return Err(bad()) };
            let c = v.get(*k).ok_or_else(|| format!("disjunct index {k} out of range"))?;
            Ok(vec![s.right(None, std::slice::from_ref(c))])
        }
        Rule::LAll(f, t) => {
            member(&s.ante, f, "antecedent")?;
            let F::All(x, a) = f else { return Err(bad()) };
            Ok(vec![s.left(None, &[a.substitute(x, t)])])
        }
        Rule::RAll(f, y) => {
            member(&s.succ, f, "succedent")?;
            let F::All(x, a) = f else { return Err(bad()) };
            fresh_for(s, y)?;
            let inst = a.substitute(x, &Term::var(y));
            Ok(vec![if int { s.only(&[], inst) } else { s.right(Some(f), &[inst]) }])
        }
        Rule::LEx(f, y) => {
            member(&s.ante, f, "antecedent")?;
            let F::Ex(x, a) = f else { return Err(bad()) };
            fresh_for(s, y)?;
            Ok(vec![s.left(Some(f), &[a.substitute(x, &Term::var(y))])])
        }
        Rule::REx(f, t) => {
            member(&s.succ, f, "succedent")?;
            let F::Ex(x, a) = f else { return Err(bad()) };
            Ok(vec![s.right(None, &[a.substitute(x, t)])])
        }
        Rule::LAllIn(f, t) => {
            member(&s.ante, f, "antecedent")?;
            let F::BoundedAll(x, b, a) = f else { return Err(bad()) };
            Ok(vec![s.right(None, &[F::mem(t.clone(), b.clone())]), s.left(None, &[a.substitute(x, t)])])
        }
        Rule::RAllIn(f, y) => {
            member(&s.succ, f, "succedent")?;
            let F::BoundedAll(x, b, a) = f else { return Err(bad()) };
            fresh_for(s, y)?;
            let guard = F::mem(Term::var(y), b.clone());
            let inst = a.substitute(x, &Term::var(y));
            Ok(vec![if int { s.only(&[guard], inst) } else { s.left(None, &[guard]).right(Some(f), &[inst]) }])
        }
        Rule::LExIn(f, y) => {
            member(&s.ante, f, "antecedent")?;
            let F::BoundedEx(x, b, a) = f else { return Err(bad()) };
            fresh_for(s, y)?;
            let guard = F::mem(Term::var(y), b.clone());
            Ok(vec![s.left(Some(f), &[guard, a.substitute(x, &Term::var(y))])])
        }
        Rule::RExIn(f, t) => {
            member(&s.succ, f, "succedent")?;
            let F::BoundedEx(x, b, a) = f else { return Err(bad()) };
            Ok(vec![s.right(None, &[F::mem(t.clone(), b.clone())]), s.right(None, &[a.substitute(x, t)])])
        }
        Rule::Cut(c) => Ok(vec![s.right(None, std::slice::from_ref(c)), s.left(None, std::slice::from_ref(c))]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub rule: Rule,
    pub conclusion: Sequent,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Derivation::height).max().unwrap_or(0)
    }

    pub fn uses_cut(&self) -> bool {
        matches!(self.rule, Rule::Cut(_)) || self.premises.iter().any(Derivation::uses_cut)
    }

    /// One `RULE: Γ => Δ` line per node, premises indented by two spaces.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(0, &mut out);
        out
    }

    fn write(&self, indent: usize, out: &mut String) {
        out.push_str(&" ".repeat(indent));
        out.push_str(&format!("{}: {}\n", self.rule.label(), self.conclusion));
        for p in &self.premises {
            p.write(indent + 2, out);
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
