//! The double-negation translation `φ⁻`.
//!
//! `∧`, `→` and `∀` are translated homomorphically; `∨` and `∃` are wrapped
//! in `¬¬`. The atomic clause is pluggable: [`goedel_gentzen`] sends an atom
//! to its double negation and stays syntactic, while [`semantic`] reads an
//! atom as the assertion `⟦φ⟧ = ⊤` and evaluates the result at the
//! (classical) meta-level.

use thiserror::Error;

use crate::formula::{Formula, Term};
use crate::names::{interpret, Environment, Interpreter, NameError, NameUniverse};

fn nn(f: Formula) -> Formula {
    Formula::not(Formula::not(f))
}

/// Atomic clause for [`dn_translate`].
#[derive(Clone, Copy, Debug)]
pub enum AtomicMode<'a> {
    /// Atom `↦ ¬¬atom`, `⊥ ↦ ⊥`.
    GoedelGentzen,
    /// Atom `↦ (⟦atom⟧ = ⊤)` over the given universe.
    Semantic { universe: &'a NameUniverse, env: &'a Environment },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translated {
    Formula(Formula),
    Truth(bool),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslationError {
    #[error(transparent)]
    Names(#[from] NameError),
}

pub fn dn_translate(f: &Formula, mode: AtomicMode<'_>) -> Result<Translated, TranslationError> {
    Ok(match mode {
        AtomicMode::GoedelGentzen => Translated::Formula(goedel_gentzen(f)),
        AtomicMode::Semantic { universe, env } => Translated::Truth(semantic(f, env, universe)?),
    })
}

/// Class quantifiers are translated like set quantifiers; no class-name guard is emitted.
pub fn goedel_gentzen(f: &Formula) -> Formula {
    use Formula as F;
    match f {
        F::Falsum => F::Falsum,
        F::Prop(_) | F::Eq(..) | F::Mem(..) | F::ClassMem(..) | F::ClassEq(..) => nn(f.clone()),
        F::And(a, b) => F::and(goedel_gentzen(a), goedel_gentzen(b)),
        F::Or(a, b) => nn(F::or(goedel_gentzen(a), goedel_gentzen(b))),
        F::Imp(a, b) => F::imp(goedel_gentzen(a), goedel_gentzen(b)),
        F::BigAnd(v) => F::BigAnd(v.iter().map(goedel_gentzen).collect()),
        F::BigOr(v) => nn(F::BigOr(v.iter().map(goedel_gentzen).collect())),
        F::BoundedAll(x, t, b) => F::BoundedAll(x.clone(), t.clone(), Box::new(goedel_gentzen(b))),
        F::BoundedEx(x, t, b) => nn(F::BoundedEx(x.clone(), t.clone(), Box::new(goedel_gentzen(b)))),
        F::All(x, b) => F::All(x.clone(), Box::new(goedel_gentzen(b))),
        F::Ex(x, b) => nn(F::Ex(x.clone(), Box::new(goedel_gentzen(b)))),
        F::ClassAll(x, b) => F::ClassAll(x.clone(), Box::new(goedel_gentzen(b))),
        F::ClassEx(x, b) => nn(F::ClassEx(x.clone(), Box::new(goedel_gentzen(b)))),
    }
}

/// The truth of `f⁻` with atoms read as `⟦atom⟧ = ⊤` and set quantifiers over `u`.
///
/// Bounded quantifiers are unfolded: `∀x ∈ a φ` is `∀x (x ∈ a → φ)`, so they
/// too range over all of `u` rather than over `dom a`.
pub fn semantic(f: &Formula, env: &Environment, u: &NameUniverse) -> Result<bool, NameError> {
    let mut it = Interpreter::new(u);
    let mut env = env.clone();
    sem(f, &mut env, u, &mut it)
}

fn sem(f: &Formula, env: &mut Environment, u: &NameUniverse, it: &mut Interpreter<'_>) -> Result<bool, NameError> {
    use Formula as F;
    let top = u.topology().top();
    let over = |x: &str, env: &mut Environment, it: &mut Interpreter<'_>, guard: Option<&Term>, want_all: bool, body: &Formula| {
        let saved = env.sets.get(x).cloned();
        let mut result = want_all;
        for y in u.names() {
            env.sets.insert(x.to_string(), y.clone());
            let inside = match guard {
                Some(t) => it.eval(&F::mem(Term::var(x), t.clone()), env)? == top,
                None => true,
            };
            let v = if want_all { !inside || sem(body, env, u, it)? } else { inside && sem(body, env, u, it)? };
            if v != want_all {
                result = v;
                break;
            }
        }
        match saved {
            Some(n) => env.sets.insert(x.to_string(), n),
            None => env.sets.remove(x),
        };
        Ok::<bool, NameError>(result)
    };
    Ok(match f {
        F::Falsum => false,
        F::Prop(_) | F::Eq(..) | F::Mem(..) | F::ClassMem(..) | F::ClassEq(..) => it.eval(f, env)? == top,
        F::And(a, b) => sem(a, env, u, it)? && sem(b, env, u, it)?,
        // ¬¬(A ∨ B) at a classical meta-level.
        F::Or(a, b) => sem(a, env, u, it)? || sem(b, env, u, it)?,
        F::Imp(a, b) => !sem(a, env, u, it)? || sem(b, env, u, it)?,
        F::BigAnd(v) => {
            for g in v {
                if !sem(g, env, u, it)? {
                    return Ok(false);
                }
            }
            true
        }
        F::BigOr(v) => {
            for g in v {
                if sem(g, env, u, it)? {
                    return Ok(true);
                }
            }
            false
        }
        F::BoundedAll(x, t, b) => over(x, env, it, Some(t), true, b)?,
        F::BoundedEx(x, t, b) => over(x, env, it, Some(t), false, b)?,
        F::All(x, b) => over(x, env, it, None, true, b)?,
        F::Ex(x, b) => over(x, env, it, None, false, b)?,
        F::ClassAll(..) | F::ClassEx(..) => return Err(NameError::Unsupported("a class quantifier")),
    })
}

/// `f⁻` holds iff `⟦f⟧ = ⊤`, both computed independently over `u`.
pub fn semantic_coincidence_check(f: &Formula, env: &Environment, u: &NameUniverse) -> Result<bool, NameError> {
    if f.has_class_quantifiers() {
        return Err(NameError::Unsupported("a class quantifier"));
    }
    let translated = semantic(f, env, u)?;
    let direct = interpret(f, env, u)? == u.topology().top();
    Ok(translated == direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::corpus::{exhaustive, Quantifiers};
    use crate::formula::{parse, render};
    use crate::names::{check_name, name_universe};
    use crate::topology::omega;

    /// Node count with `¬A` as one node over `A`.
    fn neg_size(f: &Formula) -> usize {
        match f.negated() {
            Some(a) => 1 + neg_size(a),
            None => 1 + f.children().into_iter().map(neg_size).sum::<usize>(),
        }
    }

    #[test]
    fn gg_examples() {
        let gg = |s: &str| render(&goedel_gentzen(&parse(s).unwrap()));
        assert_eq!(gg("p | q"), "~~(~~p | ~~q)");
        assert_eq!(gg("false"), "false");
        assert_eq!(gg("ex x. x = x"), "~~(ex x. ~~(x = x))");
        assert_eq!(gg("all x. p -> q & r"), "all x. ~~p -> ~~q & ~~r");
    }

    #[test]
    fn gg_shape() {
        for f in exhaustive(&["x1"], 2, Quantifiers::FirstOrder) {
            let g = goedel_gentzen(&f);
            assert!(neg_size(&g) <= 3 * neg_size(&f));
        }
    }

    #[test]
    fn semantic_examples() {
        let o = omega();
        let u = name_universe(&o, 1, &Budget::default()).unwrap();
        let e = Environment::new();
        for src in ["{} = {}", "{} in {{}} | {} = {{}}", "ex x. all y in x. false", "all x. ex y. x in y"] {
            assert!(semantic_coincidence_check(&parse(src).unwrap(), &e, &u).unwrap(), "{src}");
        }
        let env = Environment::new().with("a", check_name(&"{{}}".parse().unwrap(), &o));
        let t = dn_translate(&parse("ex x in a. x = x").unwrap(), AtomicMode::Semantic { universe: &u, env: &env });
        assert_eq!(t.unwrap(), Translated::Truth(true));
        assert!(semantic_coincidence_check(&parse("all X. ex x. x in X").unwrap(), &e, &u).is_err());
    }

    #[test]
    fn coincidence_on_depth_one_corpus() {
        let o = omega();
        let u = name_universe(&o, 1, &Budget::default()).unwrap();
        for f in exhaustive(&["x1"], 1, Quantifiers::FirstOrder) {
            for n in u.names() {
                let env = Environment::new().with("x1", n.clone());
                assert!(semantic_coincidence_check(&f, &env, &u).unwrap());
            }
        }
    }
}
