//! Class-variable elimination: class atoms are replaced by the bodies of
//! their comprehension axioms, and classes without one by `x = x`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::formula::{fresh_prime, Formula, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("the comprehension body for {0} contains a class quantifier")]
    NestedClassQuantifier(String),
    #[error("class quantifier over {0}; only free class variables are eliminated")]
    ClassQuantifier(String),
    #[error("comprehension definitions are cyclic through {0}")]
    Cyclic(String),
}

/// `(X, x, φ)` for `∀x (x ∈ X ↔ φ)` or `∀x (φ ↔ x ∈ X)`.
fn comprehension(f: &Formula) -> Option<(String, String, Formula)> {
    let Formula::All(x, body) = f else { return None };
    let Formula::And(l, r) = &**body else { return None };
    let (Formula::Imp(a, b), Formula::Imp(c, d)) = (&**l, &**r) else { return None };
    if a != d || b != c {
        return None;
    }
    let is_atom = |g: &Formula| match g {
        Formula::ClassMem(Term::Var(v), class) if v == x => Some(class.clone()),
        _ => None,
    };
    match (is_atom(a), is_atom(b)) {
        (Some(class), _) => Some((class, x.clone(), (**b).clone())),
        (None, Some(class)) => Some((class, x.clone(), (**a).clone())),
        _ => None,
    }
}

fn first_class_quantifier(f: &Formula) -> Option<String> {
    let mut found = None;
    f.visit(&mut |g| {
        if let Formula::ClassAll(c, _) | Formula::ClassEx(c, _) = g {
            found.get_or_insert_with(|| c.clone());
        }
    });
    found
}

type Defs = BTreeMap<String, (String, Formula)>;

/// Expands class atoms inside every definition body, depth first.
fn resolve(defs: &Defs) -> Result<Defs, EliminationError> {
    fn visit(c: &str, defs: &Defs, done: &mut Defs, active: &mut Vec<String>) -> Result<(), EliminationError> {
        if done.contains_key(c) {
            return Ok(());
        }
        if active.iter().any(|a| a == c) {
            return Err(EliminationError::Cyclic(c.to_string()));
        }
        active.push(c.to_string());
        let (x, body) = &defs[c];
        for d in body.free_classes() {
            if defs.contains_key(&d) {
                visit(&d, defs, done, active)?;
            }
        }
        active.pop();
        let body = replace(body, done);
        done.insert(c.to_string(), (x.clone(), body));
        Ok(())
    }
    let mut done = Defs::new();
    for c in defs.keys() {
        visit(c, defs, &mut done, &mut Vec::new())?;
    }
    Ok(done)
}

/// Renames binders of `f` that would capture a parameter of a definition.
fn rename_away(f: &Formula, danger: &BTreeSet<String>) -> Formula {
    let mut avoid = f.all_vars();
    avoid.extend(danger.iter().cloned());
    let mut rec = |x: &String, body: &Formula| -> (String, Formula) {
        if !danger.contains(x) {
            return (x.clone(), rename_away(body, danger));
        }
        let y = fresh_prime(x, &avoid);
        avoid.insert(y.clone());
        (y.clone(), rename_away(&body.substitute(x, &Term::Var(y)), danger))
    };
    match f {
        Formula::All(x, b) => {
            let (x, b) = rec(x, b);
            Formula::all(&x, b)
        }
        Formula::Ex(x, b) => {
            let (x, b) = rec(x, b);
            Formula::ex(&x, b)
        }
        Formula::BoundedAll(x, t, b) => {
            let (x, b) = rec(x, b);
            Formula::all_in(&x, t.clone(), b)
        }
        Formula::BoundedEx(x, t, b) => {
            let (x, b) = rec(x, b);
            Formula::ex_in(&x, t.clone(), b)
        }
        Formula::And(a, b) => Formula::and(rename_away(a, danger), rename_away(b, danger)),
        Formula::Or(a, b) => Formula::or(rename_away(a, danger), rename_away(b, danger)),
        Formula::Imp(a, b) => Formula::imp(rename_away(a, danger), rename_away(b, danger)),
        Formula::BigAnd(v) => Formula::BigAnd(v.iter().map(|g| rename_away(g, danger)).collect()),
        Formula::BigOr(v) => Formula::BigOr(v.iter().map(|g| rename_away(g, danger)).collect()),
        _ => f.clone(),
    }
}

/// Replaces `X = Y` by `∀z (z ∈ X ↔ z ∈ Y)` and then `t ∈ X` by `φ_X(t)`
/// for every class with a definition.
fn replace(f: &Formula, defs: &Defs) -> Formula {
    let mut danger = BTreeSet::new();
    for (x, body) in defs.values() {
        danger.extend(body.free_vars().into_iter().filter(|v| v != x));
    }
    let f = rename_away(f, &danger);
    let mut avoid = f.all_vars();
    avoid.extend(danger);
    let z = if avoid.contains("z") { fresh_prime("z", &avoid) } else { "z".to_string() };
    let f = f.map_atoms(&mut |a| match a {
        Formula::ClassEq(p, q) => {
            let zt = || Term::var(&z);
            Some(Formula::all(&z, Formula::iff(Formula::ClassMem(zt(), p.clone()), Formula::ClassMem(zt(), q.clone()))))
        }
        _ => None,
    });
    f.map_atoms(&mut |a| match a {
        Formula::ClassMem(t, c) => defs.get(c).map(|(x, body)| body.substitute(x, t)),
        _ => None,
    })
}

/// Removes every class variable from `axioms` and `goal`.
pub fn eliminate_classes(axioms: &[Formula], goal: &Formula) -> Result<(Vec<Formula>, Formula), EliminationError> {
    let mut defs = Defs::new();
    for a in axioms {
        if let Some((class, x, body)) = comprehension(a) {
            if body.has_class_quantifiers() {
                return Err(EliminationError::NestedClassQuantifier(class));
            }
            defs.entry(class).or_insert((x, body));
        }
    }
    for f in axioms.iter().chain([goal]) {
        if let Some(c) = first_class_quantifier(f) {
            return Err(EliminationError::ClassQuantifier(c));
        }
        for c in f.free_classes() {
            defs.entry(c).or_insert_with(|| ("x".to_string(), Formula::eq(Term::var("x"), Term::var("x"))));
        }
    }
    let defs = resolve(&defs)?;
    Ok((axioms.iter().map(|a| replace(a, &defs)).collect(), replace(goal, &defs)))
}
