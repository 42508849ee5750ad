//! Compilation of bounded formulas into fundamental-operation terms.
//!
//! A context of variables `x1..xm` with bounding terms `B1..Bm` denotes the
//! product `P_m = B_m × P_{m-1}` of tuples `<x_m, ..., x_1>`. A formula in
//! context compiles to the subset of `P_m` where it holds. Quantifiers push a
//! new outermost variable and project it away with `F_r`.

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use super::ops::{OpSymbol as O, OpTerm};
use super::HfSet;
use crate::formula::{Formula, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("unbounded quantifier over {0}")]
    UnboundedQuantifier(String),
    #[error("free variables {found:?} are not among x1..x{arity}")]
    FreeVariableMismatch { found: Vec<String>, arity: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("{0} cannot be compiled")]
    Unsupported(&'static str),
}

/// The argument names used by [`compile_bounded`]: `x1, ..., xn`.
pub fn arg_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Compiles a bounded formula with free variables among `x1..xn`.
///
/// The result evaluates on `a1..an` to `{<xn,...,x1> ∈ an×...×a1 | φ}`.
pub fn compile_bounded(f: &Formula, arity: usize) -> Result<OpTerm, CompileError> {
    if arity == 0 {
        return Err(CompileError::ZeroArity);
    }
    let names = arg_names(arity);
    let extra: Vec<String> = f.free_vars().into_iter().filter(|v| !names.contains(v)).collect();
    if !extra.is_empty() {
        return Err(CompileError::FreeVariableMismatch { found: extra, arity });
    }
    let mut ctx = Ctx::root();
    for (i, name) in names.iter().enumerate() {
        ctx = ctx.push(name, OpTerm::arg(i + 1));
    }
    ctx.formula(f)
}

#[derive(Clone)]
enum Val {
    Slot(usize),
    Lit(HfSet),
}

struct Ctx {
    names: Vec<String>,
    bounds: Vec<OpTerm>,
    /// `prods[k]` is `P_{k+1}`.
    prods: Vec<OpTerm>,
    proj: RefCell<HashMap<usize, OpTerm>>,
}

fn empty_of(t: &OpTerm) -> OpTerm {
    OpTerm::bin(O::Diff, t, t)
}

fn diag(d: &OpTerm) -> OpTerm {
    OpTerm::bin(O::EqRel, d, d)
}

fn ran(t: &OpTerm) -> OpTerm {
    OpTerm::bin(O::Ran, t, t)
}

fn dom(t: &OpTerm) -> OpTerm {
    OpTerm::bin(O::Dom, t, t)
}

/// `x ∩ y` via `x ∩ ⋂{y}`.
fn meet(x: &OpTerm, y: &OpTerm) -> OpTerm {
    OpTerm::bin(O::Inter, x, &OpTerm::bin(O::Pair, y, y))
}

fn join(x: &OpTerm, y: &OpTerm) -> OpTerm {
    OpTerm::un(O::Union, &OpTerm::bin(O::Pair, x, y))
}

fn kpair(a: &OpTerm, b: &OpTerm) -> OpTerm {
    OpTerm::bin(O::Pair, &OpTerm::bin(O::Pair, a, a), &OpTerm::bin(O::Pair, a, b))
}

/// `{<u, s> | ∃v. <v,u> ∈ x ∧ <v,s> ∈ y}`.
fn join_first(x: &OpTerm, y: &OpTerm) -> OpTerm {
    let left = OpTerm::bin(O::Rot123, x, &ran(y));
    let right = OpTerm::bin(O::Rot132, y, &ran(x));
    ran(&meet(&left, &right))
}

/// A literal set built from `∅ = a \ a` with pairing and union.
fn literal(s: &HfSet, anchor: &OpTerm) -> OpTerm {
    let elems: Vec<OpTerm> = s.iter().map(|e| literal(e, anchor)).collect();
    fn build(xs: &[OpTerm], anchor: &OpTerm) -> OpTerm {
        match xs {
            [] => empty_of(anchor),
            [a] => OpTerm::bin(O::Pair, a, a),
            [a, b] => OpTerm::bin(O::Pair, a, b),
            [a, b, rest @ ..] => join(&OpTerm::bin(O::Pair, a, b), &build(rest, anchor)),
        }
    }
    build(&elems, anchor)
}

impl Ctx {
    fn root() -> Ctx {
        Ctx { names: vec![], bounds: vec![], prods: vec![], proj: RefCell::default() }
    }

    fn push(&self, name: &str, bound: OpTerm) -> Ctx {
        let prod = match self.prods.last() {
            None => bound.clone(),
            Some(p) => OpTerm::bin(O::Prod, &bound, p),
        };
        let mut c = Ctx {
            names: self.names.clone(),
            bounds: self.bounds.clone(),
            prods: self.prods.clone(),
            proj: RefCell::default(),
        };
        c.names.push(name.to_string());
        c.bounds.push(bound);
        c.prods.push(prod);
        c
    }

    fn product(&self) -> &OpTerm {
        self.prods.last().expect("nonempty context")
    }

    fn anchor(&self) -> &OpTerm {
        &self.bounds[0]
    }

    fn resolve(&self, t: &Term) -> Val {
        match t {
            Term::Lit(s) => Val::Lit(s.clone()),
            Term::Var(v) => Val::Slot(self.names.iter().rposition(|n| n == v).expect("free variables checked")),
        }
    }

    /// `{<t_k, t> | t ∈ P_m}`.
    fn projection(&self, k: usize) -> OpTerm {
        if let Some(t) = self.proj.borrow().get(&k) {
            return t.clone();
        }
        let t = projection_in(&self.bounds, &self.prods, k);
        self.proj.borrow_mut().insert(k, t.clone());
        t
    }

    /// `{<value of t at tuple, tuple>}`.
    fn value(&self, v: &Val) -> OpTerm {
        match v {
            Val::Slot(k) => self.projection(*k),
            Val::Lit(s) => {
                let c = literal(s, self.anchor());
                OpTerm::bin(O::Prod, &OpTerm::bin(O::Pair, &c, &c), self.product())
            }
        }
    }

    fn eq_atom(&self, a: &Val, b: &Val) -> OpTerm {
        ran(&meet(&self.value(a), &self.value(b)))
    }

    fn mem_atom(&self, a: &Val, b: &Val) -> OpTerm {
        let va = self.value(a);
        let vb = self.value(b);
        let rel = OpTerm::bin(O::MemRel, &dom(&va), &dom(&vb));
        ran(&meet(&va, &join_first(&rel, &vb)))
    }

    fn formula(&self, f: &Formula) -> Result<OpTerm, CompileError> {
        let p = self.product();
        Ok(match f {
            Formula::Falsum => empty_of(p),
            Formula::Eq(a, b) => self.eq_atom(&self.resolve(a), &self.resolve(b)),
            Formula::Mem(a, b) => self.mem_atom(&self.resolve(a), &self.resolve(b)),
            Formula::And(a, b) => meet(&self.formula(a)?, &self.formula(b)?),
            Formula::Or(a, b) => join(&self.formula(a)?, &self.formula(b)?),
            Formula::Imp(a, b) => OpTerm::bin(O::Imp, p, &kpair(&self.formula(a)?, &self.formula(b)?)),
            Formula::BigAnd(xs) => {
                let mut acc = self.formula(&xs[0])?;
                for x in &xs[1..] {
                    acc = meet(&acc, &self.formula(x)?);
                }
                acc
            }
            Formula::BigOr(xs) => {
                let mut acc = self.formula(&xs[0])?;
                for x in &xs[1..] {
                    acc = join(&acc, &self.formula(x)?);
                }
                acc
            }
            Formula::BoundedEx(y, t, body) => ran(&self.bounded(y, t, body, false)?),
            Formula::BoundedAll(y, t, body) => OpTerm::bin(O::Diff, p, &ran(&self.bounded(y, t, body, true)?)),
            Formula::All(x, _) | Formula::Ex(x, _) => return Err(CompileError::UnboundedQuantifier(x.clone())),
            Formula::Prop(_) => return Err(CompileError::Unsupported("a propositional atom")),
            Formula::ClassMem(..) | Formula::ClassEq(..) => return Err(CompileError::Unsupported("a class symbol")),
            Formula::ClassAll(..) | Formula::ClassEx(..) => return Err(CompileError::Unsupported("a class quantifier")),
        })
    }

    /// Tuples `<y, t>` with `y ∈ bound` and the body (negated when `negate`).
    fn bounded(&self, y: &str, t: &Term, body: &Formula, negate: bool) -> Result<OpTerm, CompileError> {
        let outer = self.resolve(t);
        let bound = match &outer {
            Val::Slot(k) => OpTerm::un(O::Union, &self.bounds[*k]),
            Val::Lit(s) => literal(s, self.anchor()),
        };
        let inner = self.push(y, bound);
        let me = Val::Slot(inner.names.len() - 1);
        let guard = inner.mem_atom(&me, &outer);
        let mut b = inner.formula(body)?;
        if negate {
            b = OpTerm::bin(O::Diff, inner.product(), &b);
        }
        Ok(meet(&guard, &b))
    }
}

fn projection_in(bounds: &[OpTerm], prods: &[OpTerm], k: usize) -> OpTerm {
    let m = bounds.len();
    if m == 1 {
        return diag(&bounds[0]);
    }
    if k == m - 1 {
        return OpTerm::bin(O::Rot123, &diag(&bounds[m - 1]), &prods[m - 2]);
    }
    OpTerm::bin(O::Rot132, &projection_in(&bounds[..m - 1], &prods[..m - 1], k), &bounds[m - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use crate::hf::{eval_opterm, satisfies, Env};

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    /// Independent comprehension through the satisfaction oracle.
    fn oracle(f: &Formula, args: &[HfSet]) -> HfSet {
        let names = arg_names(args.len());
        let mut tuples: Vec<Vec<HfSet>> = vec![vec![]];
        for a in args.iter().rev() {
            tuples = tuples.into_iter().flat_map(|t| a.iter().map(move |x| [t.clone(), vec![x.clone()]].concat())).collect();
        }
        HfSet::from_elements(tuples.into_iter().filter_map(|t| {
            // t = [x_n, ..., x_1]
            let env: Env = names.iter().rev().cloned().zip(t.iter().cloned()).collect();
            satisfies(&HfSet::empty(), f, &env).unwrap().then(|| HfSet::tuple(&t))
        }))
    }

    fn check(src: &str, args: &[&str]) -> HfSet {
        let f = parse(src).unwrap();
        let args: Vec<HfSet> = args.iter().map(|a| hf(a)).collect();
        let got = eval_opterm(&compile_bounded(&f, args.len()).unwrap(), &args).unwrap();
        assert_eq!(got, oracle(&f, &args), "{src} on {args:?}");
        got
    }

    #[test]
    fn spec_examples() {
        assert_eq!(check("x1 in x1", &["{{},{{}}}"]), HfSet::empty());
        let z = HfSet::empty();
        let want = HfSet::singleton(HfSet::ordered_pair(&z, &HfSet::singleton(z.clone())));
        assert_eq!(check("x2 in x1", &["{{{}}}", "{{}}"]), want);
        assert_eq!(check("x1 = x1", &["{{}}"]), hf("{{}}"));
    }

    #[test]
    fn quantifiers_and_literals() {
        let v3 = HfSet::cumulative(3).to_string();
        let v4 = HfSet::cumulative(4).to_string();
        check("ex y in x1. y = {}", &[&v4]);
        check("all y in x1. ex z in x1. y in z", &[&v4]);
        check("ex y in x2. x1 in y & ~(y = x1)", &[&v3, &v4]);
        check("all y in {{},{{}}}. y in x1 | x1 in y", &[&v4]);
        check("ex y in x1. all z in y. z in x2 -> false", &[&v4, &v3]);
        check("x1 in {{{}},{}} -> x2 = {}", &[&v3, &v3]);
        check("ex y in x1. ex y in y. y = x2", &[&v4, &v3]);
        check("bigor [x1 = x2, x1 in x2, false]", &[&v3, &v3]);
        check("{} in {{}}", &[&v3]);
    }

    #[test]
    fn errors() {
        let f = parse("ex y. y in x1").unwrap();
        assert_eq!(compile_bounded(&f, 1).unwrap_err(), CompileError::UnboundedQuantifier("y".into()));
        let f = parse("x1 in x3").unwrap();
        assert!(matches!(compile_bounded(&f, 2), Err(CompileError::FreeVariableMismatch { .. })));
        assert_eq!(compile_bounded(&parse("false").unwrap(), 0).unwrap_err(), CompileError::ZeroArity);
    }
}
