use std::collections::BTreeMap;

use thiserror::Error;

use super::HfSet;
use crate::formula::{Formula, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("unassigned free variable {0}")]
    Unassigned(String),
    #[error("formula uses {0}, which has no meaning over a bare set universe")]
    Unsupported(&'static str),
}

pub type Env = BTreeMap<String, HfSet>;

/// Tarskian truth over `universe`; unbounded quantifiers range over its elements.
pub fn satisfies(universe: &HfSet, f: &Formula, env: &Env) -> Result<bool, SatError> {
    let mut stack: Vec<(&str, HfSet)> = env.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    eval(universe, f, &mut stack)
}

fn lookup(stack: &[(&str, HfSet)], t: &Term) -> Result<HfSet, SatError> {
    match t {
        Term::Lit(s) => Ok(s.clone()),
        Term::Var(v) => stack
            .iter()
            .rev()
            .find(|(k, _)| k == v)
            .map(|(_, s)| s.clone())
            .ok_or_else(|| SatError::Unassigned(v.clone())),
    }
}

fn eval<'f>(u: &HfSet, f: &'f Formula, stack: &mut Vec<(&'f str, HfSet)>) -> Result<bool, SatError> {
    Ok(match f {
        Formula::Falsum => false,
        Formula::Eq(a, b) => lookup(stack, a)? == lookup(stack, b)?,
        Formula::Mem(a, b) => lookup(stack, b)?.contains(&lookup(stack, a)?),
        Formula::Prop(_) => return Err(SatError::Unsupported("a propositional atom")),
        Formula::ClassMem(..) | Formula::ClassEq(..) => return Err(SatError::Unsupported("a class symbol")),
        Formula::ClassAll(..) | Formula::ClassEx(..) => return Err(SatError::Unsupported("a class quantifier")),
        Formula::And(a, b) => eval(u, a, stack)? && eval(u, b, stack)?,
        Formula::Or(a, b) => eval(u, a, stack)? || eval(u, b, stack)?,
        Formula::Imp(a, b) => !eval(u, a, stack)? || eval(u, b, stack)?,
        Formula::BigAnd(xs) => {
            for x in xs {
                if !eval(u, x, stack)? {
                    return Ok(false);
                }
            }
            true
        }
        Formula::BigOr(xs) => {
            for x in xs {
                if eval(u, x, stack)? {
                    return Ok(true);
                }
            }
            false
        }
        Formula::BoundedAll(x, t, body) => quantify(u, &lookup(stack, t)?, x, body, stack, true)?,
        Formula::BoundedEx(x, t, body) => quantify(u, &lookup(stack, t)?, x, body, stack, false)?,
        Formula::All(x, body) => quantify(u, u, x, body, stack, true)?,
        Formula::Ex(x, body) => quantify(u, u, x, body, stack, false)?,
    })
}

fn quantify<'f>(
    u: &HfSet,
    range: &HfSet,
    x: &'f str,
    body: &'f Formula,
    stack: &mut Vec<(&'f str, HfSet)>,
    universal: bool,
) -> Result<bool, SatError> {
    for e in range.iter() {
        stack.push((x, e.clone()));
        let r = eval(u, body, stack);
        stack.pop();
        if r? != universal {
            return Ok(!universal);
        }
    }
    Ok(universal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn env(pairs: &[(&str, &str)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), v.parse().unwrap())).collect()
    }

    #[test]
    fn spec_examples() {
        let v2 = HfSet::cumulative(2);
        let v3 = HfSet::cumulative(3);
        let f = parse("ex y in x. y = {}").unwrap();
        assert!(satisfies(&v2, &f, &env(&[("x", "{{}}")])).unwrap());
        assert!(!satisfies(&v2, &parse("x in x").unwrap(), &env(&[("x", "{}")])).unwrap());
        let f = parse("all y in x. ex z in x. y in z").unwrap();
        // y = {∅} lies in no element of x.
        assert!(!satisfies(&v3, &f, &env(&[("x", "{{},{{}}}")])).unwrap());
        let g = parse("all y in x. ex z. y in z").unwrap();
        assert!(satisfies(&v3, &g, &env(&[("x", "{{},{{}}}")])).unwrap());
    }

    #[test]
    fn unbounded_quantifiers_range_over_universe() {
        let f = parse("ex y. x in y").unwrap();
        assert!(satisfies(&HfSet::cumulative(2), &f, &env(&[("x", "{}")])).unwrap());
        assert!(!satisfies(&HfSet::cumulative(1), &f, &env(&[("x", "{}")])).unwrap());
    }

    #[test]
    fn errors() {
        let u = HfSet::empty();
        assert_eq!(satisfies(&u, &parse("x = x").unwrap(), &Env::new()), Err(SatError::Unassigned("x".into())));
        assert!(satisfies(&u, &parse("{} in X").unwrap(), &Env::new()).is_err());
    }
}
