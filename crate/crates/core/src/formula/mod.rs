//! Two-sorted formulas: set variables in lowercase, class identifiers in uppercase.
//!
//! Negation is not a node. `~A` is `A -> false`, and `A <-> B` is the
//! conjunction of the two implications.

mod parse;
mod render;

pub use parse::{parse, parse_closed, ParseError};
pub use render::render;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::hf::HfSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Lit(HfSet),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            Term::Lit(_) => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Lit(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Falsum,
    /// Nullary propositional atom; used by the propositional prover corpus.
    Prop(String),
    Eq(Term, Term),
    Mem(Term, Term),
    ClassMem(Term, String),
    ClassEq(String, String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    /// Nonempty.
    BigAnd(Vec<Formula>),
    /// Nonempty.
    BigOr(Vec<Formula>),
    BoundedAll(String, Term, Box<Formula>),
    BoundedEx(String, Term, Box<Formula>),
    All(String, Box<Formula>),
    Ex(String, Box<Formula>),
    ClassAll(String, Box<Formula>),
    ClassEx(String, Box<Formula>),
}

/// What [`Formula::relativize`] bounds unbounded quantifiers by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelBound {
    Term(Term),
    Class(String),
}

impl Formula {
    pub fn prop(p: &str) -> Formula {
        Formula::Prop(p.to_string())
    }

    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn mem(a: Term, b: Term) -> Formula {
        Formula::Mem(a, b)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// `a → ⊥`; a constructor, not negation on `self`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Falsum)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    pub fn all(x: &str, body: Formula) -> Formula {
        Formula::All(x.to_string(), Box::new(body))
    }

    pub fn ex(x: &str, body: Formula) -> Formula {
        Formula::Ex(x.to_string(), Box::new(body))
    }

    pub fn all_in(x: &str, bound: Term, body: Formula) -> Formula {
        Formula::BoundedAll(x.to_string(), bound, Box::new(body))
    }

    pub fn ex_in(x: &str, bound: Term, body: Formula) -> Formula {
        Formula::BoundedEx(x.to_string(), bound, Box::new(body))
    }

    /// The operand of a negation `A -> false`.
    pub fn negated(&self) -> Option<&Formula> {
        match self {
            Formula::Imp(a, b) if **b == Formula::Falsum => Some(a),
            _ => None,
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            Formula::Falsum | Formula::Prop(_) | Formula::Eq(..) | Formula::Mem(..) | Formula::ClassMem(..) | Formula::ClassEq(..)
        )
    }

    /// Immediate subformulas, in order.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => vec![a, b],
            Formula::BigAnd(v) | Formula::BigOr(v) => v.iter().collect(),
            Formula::BoundedAll(_, _, b)
            | Formula::BoundedEx(_, _, b)
            | Formula::All(_, b)
            | Formula::Ex(_, b)
            | Formula::ClassAll(_, b)
            | Formula::ClassEx(_, b) => vec![b],
            _ => vec![],
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    /// Nesting depth of connectives and quantifiers; atoms have depth 0.
    pub fn depth(&self) -> usize {
        self.children().into_iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    pub fn quantifier_depth(&self) -> usize {
        let inner = self.children().into_iter().map(Formula::quantifier_depth).max().unwrap_or(0);
        match self {
            Formula::BoundedAll(..)
            | Formula::BoundedEx(..)
            | Formula::All(..)
            | Formula::Ex(..)
            | Formula::ClassAll(..)
            | Formula::ClassEx(..) => inner + 1,
            _ => inner,
        }
    }

    /// True iff no unbounded set quantifier occurs.
    pub fn is_bounded(&self) -> bool {
        match self {
            Formula::All(..) | Formula::Ex(..) => false,
            _ => self.children().into_iter().all(Formula::is_bounded),
        }
    }

    pub fn has_class_symbols(&self) -> bool {
        match self {
            Formula::ClassMem(..) | Formula::ClassEq(..) | Formula::ClassAll(..) | Formula::ClassEx(..) => true,
            _ => self.children().into_iter().any(Formula::has_class_symbols),
        }
    }

    pub fn has_class_quantifiers(&self) -> bool {
        match self {
            Formula::ClassAll(..) | Formula::ClassEx(..) => true,
            _ => self.children().into_iter().any(Formula::has_class_quantifiers),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut term = |t: &Term, bound: &Vec<String>| {
            if let Term::Var(v) = t {
                if !bound.contains(v) {
                    out.insert(v.clone());
                }
            }
        };
        match self {
            Formula::Eq(a, b) | Formula::Mem(a, b) => {
                term(a, bound);
                term(b, bound);
            }
            Formula::ClassMem(a, _) => term(a, bound),
            Formula::BoundedAll(x, t, body) | Formula::BoundedEx(x, t, body) => {
                term(t, bound);
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            Formula::All(x, body) | Formula::Ex(x, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            _ => {
                for c in self.children() {
                    c.collect_free(bound, out);
                }
            }
        }
    }

    /// Class identifiers occurring free (not bound by a class quantifier).
    pub fn free_classes(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_classes(&mut Vec::new(), &mut out);
        out
    }

    fn collect_classes(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut add = |c: &String, bound: &Vec<String>| {
            if !bound.contains(c) {
                out.insert(c.clone());
            }
        };
        match self {
            Formula::ClassMem(_, c) => add(c, bound),
            Formula::ClassEq(a, b) => {
                add(a, bound);
                add(b, bound);
            }
            Formula::ClassAll(c, body) | Formula::ClassEx(c, body) => {
                bound.push(c.clone());
                body.collect_classes(bound, out);
                bound.pop();
            }
            _ => {
                for ch in self.children() {
                    ch.collect_classes(bound, out);
                }
            }
        }
    }

    /// Every variable name occurring anywhere, free or bound.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            let mut term = |t: &Term| {
                if let Term::Var(v) = t {
                    out.insert(v.clone());
                }
            };
            match f {
                Formula::Eq(a, b) | Formula::Mem(a, b) => {
                    term(a);
                    term(b);
                }
                Formula::ClassMem(a, _) => term(a),
                Formula::BoundedAll(x, t, _) | Formula::BoundedEx(x, t, _) => {
                    term(t);
                    out.insert(x.clone());
                }
                Formula::All(x, _) | Formula::Ex(x, _) => {
                    out.insert(x.clone());
                }
                _ => {}
            }
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    /// Terms occurring free in atoms or quantifier bounds.
    pub fn free_terms(&self) -> BTreeSet<Term> {
        let mut out: BTreeSet<Term> = self.free_vars().into_iter().map(Term::Var).collect();
        self.visit(&mut |f| match f {
            Formula::Eq(a, b) | Formula::Mem(a, b) => {
                for t in [a, b] {
                    if let Term::Lit(_) = t {
                        out.insert(t.clone());
                    }
                }
            }
            Formula::ClassMem(Term::Lit(s), _) | Formula::BoundedAll(_, Term::Lit(s), _) | Formula::BoundedEx(_, Term::Lit(s), _) => {
                out.insert(Term::Lit(s.clone()));
            }
            _ => {}
        });
        out
    }

    /// Capture-avoiding substitution of `t` for the free occurrences of `v`.
    ///
    /// A binder that would capture a variable of `t` is renamed by appending
    /// primes until the name is fresh.
    pub fn substitute(&self, v: &str, t: &Term) -> Formula {
        let sub_term = |s: &Term| match s {
            Term::Var(x) if x == v => t.clone(),
            _ => s.clone(),
        };
        let t_var = t.as_var();
        let binder = |x: &String, body: &Formula| -> (String, Formula) {
            if x == v {
                return (x.clone(), body.clone());
            }
            if t_var == Some(x.as_str()) && body.free_vars().contains(v) {
                let mut avoid = body.all_vars();
                avoid.insert(v.to_string());
                avoid.insert(x.clone());
                let fresh = fresh_prime(x, &avoid);
                let renamed = body.substitute(x, &Term::Var(fresh.clone()));
                return (fresh, renamed.substitute(v, t));
            }
            (x.clone(), body.substitute(v, t))
        };
        match self {
            Formula::Falsum | Formula::Prop(_) | Formula::ClassEq(..) => self.clone(),
            Formula::Eq(a, b) => Formula::Eq(sub_term(a), sub_term(b)),
            Formula::Mem(a, b) => Formula::Mem(sub_term(a), sub_term(b)),
            Formula::ClassMem(a, c) => Formula::ClassMem(sub_term(a), c.clone()),
            Formula::And(a, b) => Formula::and(a.substitute(v, t), b.substitute(v, t)),
            Formula::Or(a, b) => Formula::or(a.substitute(v, t), b.substitute(v, t)),
            Formula::Imp(a, b) => Formula::imp(a.substitute(v, t), b.substitute(v, t)),
            Formula::BigAnd(xs) => Formula::BigAnd(xs.iter().map(|x| x.substitute(v, t)).collect()),
            Formula::BigOr(xs) => Formula::BigOr(xs.iter().map(|x| x.substitute(v, t)).collect()),
            Formula::BoundedAll(x, b, body) => {
                let (x, body) = binder(x, body);
                Formula::BoundedAll(x, sub_term(b), Box::new(body))
            }
            Formula::BoundedEx(x, b, body) => {
                let (x, body) = binder(x, body);
                Formula::BoundedEx(x, sub_term(b), Box::new(body))
            }
            Formula::All(x, body) => {
                let (x, body) = binder(x, body);
                Formula::All(x, Box::new(body))
            }
            Formula::Ex(x, body) => {
                let (x, body) = binder(x, body);
                Formula::Ex(x, Box::new(body))
            }
            Formula::ClassAll(c, body) => Formula::ClassAll(c.clone(), Box::new(body.substitute(v, t))),
            Formula::ClassEx(c, body) => Formula::ClassEx(c.clone(), Box::new(body.substitute(v, t))),
        }
    }

    /// Replaces every atom `t in X` for the given class by `f(t)`.
    ///
    /// `f` must return a formula whose free variables do not clash with
    /// binders above the atom; callers substitute into closed-up bodies.
    pub fn map_class_atoms(&self, class: &str, f: &mut impl FnMut(&Term) -> Formula) -> Formula {
        self.map_atoms(&mut |atom| match atom {
            Formula::ClassMem(t, c) if c == class => Some(f(t)),
            _ => None,
        })
    }

    /// Bottom-up atom rewrite; `None` keeps the atom.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Formula) -> Option<Formula>) -> Formula {
        let mut rec = |x: &Formula| Box::new(x.map_atoms(f));
        match self {
            a if a.is_atomic() => f(a).unwrap_or_else(|| a.clone()),
            Formula::And(a, b) => {
                let a = rec(a);
                Formula::And(a, rec(b))
            }
            Formula::Or(a, b) => {
                let a = rec(a);
                Formula::Or(a, rec(b))
            }
            Formula::Imp(a, b) => {
                let a = rec(a);
                Formula::Imp(a, rec(b))
            }
            Formula::BigAnd(xs) => Formula::BigAnd(xs.iter().map(|x| x.map_atoms(f)).collect()),
            Formula::BigOr(xs) => Formula::BigOr(xs.iter().map(|x| x.map_atoms(f)).collect()),
            Formula::BoundedAll(x, t, b) => Formula::BoundedAll(x.clone(), t.clone(), rec(b)),
            Formula::BoundedEx(x, t, b) => Formula::BoundedEx(x.clone(), t.clone(), rec(b)),
            Formula::All(x, b) => Formula::All(x.clone(), rec(b)),
            Formula::Ex(x, b) => Formula::Ex(x.clone(), rec(b)),
            Formula::ClassAll(c, b) => Formula::ClassAll(c.clone(), rec(b)),
            Formula::ClassEx(c, b) => Formula::ClassEx(c.clone(), rec(b)),
            _ => unreachable!(),
        }
    }

    /// Bounds every unbounded set quantifier by a term or guards it by a class.
    pub fn relativize(&self, bound: &RelBound) -> Formula {
        let rec = |b: &Formula| Box::new(b.relativize(bound));
        match self {
            Formula::All(x, body) | Formula::Ex(x, body) => {
                let universal = matches!(self, Formula::All(..));
                let (x, body) = match bound {
                    RelBound::Term(Term::Var(w)) if w == x => {
                        let mut avoid = body.all_vars();
                        avoid.insert(w.clone());
                        let fresh = fresh_prime(x, &avoid);
                        (fresh.clone(), body.substitute(x, &Term::Var(fresh)))
                    }
                    _ => (x.clone(), (**body).clone()),
                };
                let body = rec(&body);
                match (bound, universal) {
                    (RelBound::Term(t), true) => Formula::BoundedAll(x, t.clone(), body),
                    (RelBound::Term(t), false) => Formula::BoundedEx(x, t.clone(), body),
                    (RelBound::Class(c), true) => {
                        Formula::All(x.clone(), Box::new(Formula::Imp(Box::new(Formula::ClassMem(Term::Var(x), c.clone())), body)))
                    }
                    (RelBound::Class(c), false) => {
                        Formula::Ex(x.clone(), Box::new(Formula::And(Box::new(Formula::ClassMem(Term::Var(x), c.clone())), body)))
                    }
                }
            }
            Formula::And(a, b) => Formula::And(rec(a), rec(b)),
            Formula::Or(a, b) => Formula::Or(rec(a), rec(b)),
            Formula::Imp(a, b) => Formula::Imp(rec(a), rec(b)),
            Formula::BigAnd(xs) => Formula::BigAnd(xs.iter().map(|x| x.relativize(bound)).collect()),
            Formula::BigOr(xs) => Formula::BigOr(xs.iter().map(|x| x.relativize(bound)).collect()),
            Formula::BoundedAll(x, t, b) => Formula::BoundedAll(x.clone(), t.clone(), rec(b)),
            Formula::BoundedEx(x, t, b) => Formula::BoundedEx(x.clone(), t.clone(), rec(b)),
            Formula::ClassAll(c, b) => Formula::ClassAll(c.clone(), rec(b)),
            Formula::ClassEx(c, b) => Formula::ClassEx(c.clone(), rec(b)),
            atom => atom.clone(),
        }
    }

    /// Equality up to renaming of bound set and class variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        alpha_eq(self, other, &mut Vec::new(), &mut Vec::new())
    }

    /// Renames bound variables to `v0, v1, ...` by binder depth, so that
    /// alpha-equivalent formulas become structurally equal.
    ///
    /// The prefix is chosen to avoid every free variable of the formula.
    pub fn canonical(&self) -> Formula {
        let free = self.free_vars();
        let classes = self.free_classes();
        let prefix = ["v", "w", "u", "k"]
            .into_iter()
            .find(|p| !free.iter().any(|x| is_indexed(x, p)))
            .unwrap_or("zz");
        let cprefix = ["V", "W", "U", "K"]
            .into_iter()
            .find(|p| !classes.iter().any(|x| is_indexed(x, p)))
            .unwrap_or("ZZ");
        canon(self, prefix, cprefix, &mut BTreeMap::new(), &mut BTreeMap::new(), 0)
    }
}

fn is_indexed(name: &str, prefix: &str) -> bool {
    name.strip_prefix(prefix).is_some_and(|rest| !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()))
}

pub(crate) fn fresh_prime(x: &str, avoid: &BTreeSet<String>) -> String {
    let mut cand = format!("{x}'");
    while avoid.contains(&cand) {
        cand.push('\'');
    }
    cand
}

fn canon(
    f: &Formula,
    p: &str,
    cp: &str,
    env: &mut BTreeMap<String, Vec<String>>,
    cenv: &mut BTreeMap<String, Vec<String>>,
    depth: usize,
) -> Formula {
    let term = |t: &Term, env: &BTreeMap<String, Vec<String>>| match t {
        Term::Var(v) => Term::Var(env.get(v).and_then(|s| s.last()).cloned().unwrap_or_else(|| v.clone())),
        lit => lit.clone(),
    };
    let class = |c: &String, cenv: &BTreeMap<String, Vec<String>>| cenv.get(c).and_then(|s| s.last()).cloned().unwrap_or_else(|| c.clone());
    macro_rules! bind {
        ($map:expr, $x:expr, $name:expr, $body:expr) => {{
            $map.entry($x.clone()).or_default().push($name.clone());
            let b = canon($body, p, cp, env, cenv, depth + 1);
            $map.get_mut($x).unwrap().pop();
            Box::new(b)
        }};
    }
    match f {
        Formula::Falsum | Formula::Prop(_) => f.clone(),
        Formula::Eq(a, b) => Formula::Eq(term(a, env), term(b, env)),
        Formula::Mem(a, b) => Formula::Mem(term(a, env), term(b, env)),
        Formula::ClassMem(a, c) => Formula::ClassMem(term(a, env), class(c, cenv)),
        Formula::ClassEq(a, b) => Formula::ClassEq(class(a, cenv), class(b, cenv)),
        Formula::And(a, b) => Formula::and(canon(a, p, cp, env, cenv, depth), canon(b, p, cp, env, cenv, depth)),
        Formula::Or(a, b) => Formula::or(canon(a, p, cp, env, cenv, depth), canon(b, p, cp, env, cenv, depth)),
        Formula::Imp(a, b) => Formula::imp(canon(a, p, cp, env, cenv, depth), canon(b, p, cp, env, cenv, depth)),
        Formula::BigAnd(xs) => Formula::BigAnd(xs.iter().map(|x| canon(x, p, cp, env, cenv, depth)).collect()),
        Formula::BigOr(xs) => Formula::BigOr(xs.iter().map(|x| canon(x, p, cp, env, cenv, depth)).collect()),
        Formula::BoundedAll(x, t, body) | Formula::BoundedEx(x, t, body) => {
            let t = term(t, env);
            let name = format!("{p}{depth}");
            let b = bind!(env, x, name, body);
            if matches!(f, Formula::BoundedAll(..)) {
                Formula::BoundedAll(name, t, b)
            } else {
                Formula::BoundedEx(name, t, b)
            }
        }
        Formula::All(x, body) | Formula::Ex(x, body) => {
            let name = format!("{p}{depth}");
            let b = bind!(env, x, name, body);
            if matches!(f, Formula::All(..)) {
                Formula::All(name, b)
            } else {
                Formula::Ex(name, b)
            }
        }
        Formula::ClassAll(c, body) | Formula::ClassEx(c, body) => {
            let name = format!("{cp}{depth}");
            let b = bind!(cenv, c, name, body);
            if matches!(f, Formula::ClassAll(..)) {
                Formula::ClassAll(name, b)
            } else {
                Formula::ClassEx(name, b)
            }
        }
    }
}

fn alpha_eq(a: &Formula, b: &Formula, env: &mut Vec<(String, String)>, cenv: &mut Vec<(String, String)>) -> bool {
    fn lookup(env: &[(String, String)], x: &str, left: bool) -> Option<usize> {
        env.iter().rposition(|(l, r)| if left { l == x } else { r == x })
    }
    let term_eq = |s: &Term, t: &Term, env: &Vec<(String, String)>| match (s, t) {
        (Term::Var(x), Term::Var(y)) => match (lookup(env, x, true), lookup(env, y, false)) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        },
        (Term::Lit(x), Term::Lit(y)) => x == y,
        _ => false,
    };
    let class_eq = |x: &String, y: &String, cenv: &Vec<(String, String)>| match (lookup(cenv, x, true), lookup(cenv, y, false)) {
        (Some(i), Some(j)) => i == j,
        (None, None) => x == y,
        _ => false,
    };
    use Formula::*;
    match (a, b) {
        (Falsum, Falsum) => true,
        (Prop(p), Prop(q)) => p == q,
        (Eq(s1, t1), Eq(s2, t2)) | (Mem(s1, t1), Mem(s2, t2)) => term_eq(s1, s2, env) && term_eq(t1, t2, env),
        (ClassMem(s, c), ClassMem(t, d)) => term_eq(s, t, env) && class_eq(c, d, cenv),
        (ClassEq(a1, b1), ClassEq(a2, b2)) => class_eq(a1, a2, cenv) && class_eq(b1, b2, cenv),
        (And(a1, b1), And(a2, b2)) | (Or(a1, b1), Or(a2, b2)) | (Imp(a1, b1), Imp(a2, b2)) => {
            alpha_eq(a1, a2, env, cenv) && alpha_eq(b1, b2, env, cenv)
        }
        (BigAnd(xs), BigAnd(ys)) | (BigOr(xs), BigOr(ys)) => {
            xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| alpha_eq(x, y, env, cenv))
        }
        (BoundedAll(x, s, b1), BoundedAll(y, t, b2)) | (BoundedEx(x, s, b1), BoundedEx(y, t, b2)) => {
            if !term_eq(s, t, env) {
                return false;
            }
            env.push((x.clone(), y.clone()));
            let r = alpha_eq(b1, b2, env, cenv);
            env.pop();
            r
        }
        (All(x, b1), All(y, b2)) | (Ex(x, b1), Ex(y, b2)) => {
            env.push((x.clone(), y.clone()));
            let r = alpha_eq(b1, b2, env, cenv);
            env.pop();
            r
        }
        (ClassAll(x, b1), ClassAll(y, b2)) | (ClassEx(x, b1), ClassEx(y, b2)) => {
            cenv.push((x.clone(), y.clone()));
            let r = alpha_eq(b1, b2, env, cenv);
            cenv.pop();
            r
        }
        _ => false,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: &str) -> Term {
        Term::var(x)
    }

    #[test]
    fn free_vars_examples() {
        let f = Formula::eq(v("x"), v("y"));
        assert_eq!(f.free_vars(), ["x", "y"].iter().map(|s| s.to_string()).collect());
        let f = Formula::all("x", Formula::mem(v("x"), v("y")));
        assert_eq!(f.free_vars(), ["y".to_string()].into());
        let f = Formula::all_in("x", v("y"), Formula::mem(v("x"), v("x")));
        assert_eq!(f.free_vars(), ["y".to_string()].into());
    }

    #[test]
    fn substitute_examples() {
        let e = Term::Lit(HfSet::empty());
        assert_eq!(Formula::mem(v("x"), v("y")).substitute("x", &e), Formula::mem(e.clone(), v("y")));
        let f = Formula::all("x", Formula::mem(v("x"), v("y")));
        assert_eq!(f.substitute("x", &v("z")), f);
        let f = Formula::all("y", Formula::eq(v("x"), v("y")));
        assert_eq!(f.substitute("x", &v("y")), Formula::all("y'", Formula::eq(v("y"), v("y'"))));
    }

    #[test]
    fn substitute_into_bound_term() {
        let f = Formula::all_in("y", v("x"), Formula::mem(v("y"), v("x")));
        let g = f.substitute("x", &v("y"));
        assert_eq!(g, Formula::all_in("y'", v("y"), Formula::mem(v("y'"), v("y"))));
    }

    #[test]
    fn relativize_examples() {
        let f = Formula::all("x", Formula::eq(v("x"), v("x")));
        assert_eq!(f.relativize(&RelBound::Term(v("a"))), Formula::all_in("x", v("a"), Formula::eq(v("x"), v("x"))));
        let f = Formula::ex("x", Formula::mem(v("x"), v("y")));
        let want = Formula::ex("x", Formula::and(Formula::ClassMem(v("x"), "M".into()), Formula::mem(v("x"), v("y"))));
        assert_eq!(f.relativize(&RelBound::Class("M".into())), want);
        let d0 = Formula::all_in("x", v("y"), Formula::mem(v("x"), v("y")));
        assert_eq!(d0.relativize(&RelBound::Term(v("a"))), d0);
    }

    #[test]
    fn relativize_to_own_binder_renames() {
        let f = Formula::ex("x", Formula::mem(v("x"), v("y")));
        let g = f.relativize(&RelBound::Term(v("x")));
        assert_eq!(g, Formula::ex_in("x'", v("x"), Formula::mem(v("x'"), v("y"))));
    }

    #[test]
    fn canonical_identifies_alpha_variants() {
        let a = Formula::all("x", Formula::ex_in("y", v("x"), Formula::mem(v("y"), v("z"))));
        let b = Formula::all("u", Formula::ex_in("w", v("u"), Formula::mem(v("w"), v("z"))));
        assert!(a.alpha_eq(&b));
        assert_eq!(a.canonical(), b.canonical());
        let c = Formula::all("u", Formula::ex_in("w", v("u"), Formula::mem(v("u"), v("z"))));
        assert!(!a.alpha_eq(&c));
    }

    #[test]
    fn canonical_avoids_free_names() {
        let f = Formula::all("x", Formula::eq(v("x"), v("v0")));
        let c = f.canonical();
        assert_eq!(c, Formula::all("w0", Formula::eq(v("w0"), v("v0"))));
    }

    /// Generator for formulas over variables x, y, z and class M.
    pub(crate) fn arb_formula() -> impl Strategy<Value = Formula> {
        let var = prop_oneof![Just("x"), Just("y"), Just("z")];
        let term = prop_oneof![
            4 => var.clone().prop_map(Term::var),
            1 => Just(Term::Lit(HfSet::empty())),
            1 => Just(Term::Lit(HfSet::von_neumann(2))),
        ];
        let leaf = prop_oneof![
            Just(Formula::Falsum),
            prop_oneof![Just("p"), Just("q")].prop_map(Formula::prop),
            (term.clone(), term.clone()).prop_map(|(a, b)| Formula::eq(a, b)),
            (term.clone(), term.clone()).prop_map(|(a, b)| Formula::mem(a, b)),
            term.clone().prop_map(|a| Formula::ClassMem(a, "M".into())),
        ];
        leaf.prop_recursive(4, 32, 3, move |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
                inner.clone().prop_map(Formula::not),
                prop::collection::vec(inner.clone(), 1..4).prop_map(Formula::BigAnd),
                prop::collection::vec(inner.clone(), 1..4).prop_map(Formula::BigOr),
                (var.clone(), term.clone(), inner.clone()).prop_map(|(x, t, b)| Formula::all_in(x, t, b)),
                (var.clone(), term.clone(), inner.clone()).prop_map(|(x, t, b)| Formula::ex_in(x, t, b)),
                (var.clone(), inner.clone()).prop_map(|(x, b)| Formula::all(x, b)),
                (var.clone(), inner.clone()).prop_map(|(x, b)| Formula::ex(x, b)),
                inner.clone().prop_map(|b| Formula::ClassAll("N".into(), Box::new(b))),
            ]
        })
    }

    fn kinds(f: &Formula) -> Vec<&'static str> {
        let mut out = Vec::new();
        f.visit(&mut |g| {
            out.push(match g {
                Formula::Falsum => "F",
                Formula::Prop(_) => "P",
                Formula::Eq(..) => "=",
                Formula::Mem(..) => "in",
                Formula::ClassMem(..) => "In",
                Formula::ClassEq(..) => "==",
                Formula::And(..) => "&",
                Formula::Or(..) => "|",
                Formula::Imp(..) => "->",
                Formula::BigAnd(_) => "bigand",
                Formula::BigOr(_) => "bigor",
                Formula::BoundedAll(..) => "ball",
                Formula::BoundedEx(..) => "bex",
                Formula::All(..) => "all",
                Formula::Ex(..) => "ex",
                Formula::ClassAll(..) => "All",
                Formula::ClassEx(..) => "Ex",
            })
        });
        out
    }

    proptest! {
        #[test]
        fn substitution_free_vars(f in arb_formula(), t in prop_oneof![Just("x"), Just("y"), Just("w")]) {
            prop_assume!(f.free_vars().contains("x"));
            let g = f.substitute("x", &Term::var(t));
            let mut want = f.free_vars();
            want.remove("x");
            want.insert(t.to_string());
            prop_assert_eq!(g.free_vars(), want);
        }

        #[test]
        fn substitution_preserves_shape(f in arb_formula(), t in prop_oneof![Just("x"), Just("y"), Just("w")]) {
            let g = f.substitute("z", &Term::var(t));
            prop_assert_eq!(kinds(&f), kinds(&g));
        }

        #[test]
        fn relativized_is_bounded(f in arb_formula()) {
            prop_assume!(!f.has_class_symbols());
            prop_assert!(f.relativize(&RelBound::Term(Term::var("a"))).is_bounded());
            prop_assert!(f.relativize(&RelBound::Term(Term::var("x"))).is_bounded());
        }

        #[test]
        fn canonical_is_alpha_equivalent(f in arb_formula()) {
            let c = f.canonical();
            prop_assert!(f.alpha_eq(&c));
            prop_assert_eq!(c.canonical(), c.clone());
            prop_assert_eq!(c.free_vars(), f.free_vars());
        }
    }
}
