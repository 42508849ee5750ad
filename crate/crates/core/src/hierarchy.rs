//! The Fleischmann–Lévy hierarchy of intuitionistic formulas.
//!
//! `Σ0 = Π0` are the bounded formulas. `Σ(n+1)` is the least class containing
//! `Πn` closed under `∧ ∨`, bounded quantifiers and unbounded `∃`; `Π(n+1)`
//! is the least class containing `Σn` closed under `∧ ∨`, bounded
//! quantifiers, unbounded `∀`, and `φ → ψ` with `φ ∈ Σn`, `ψ ∈ Π(n+1)`.
//!
//! Formulas are freely generated, so membership unfolds to a recursion on
//! the top constructor, and minimal levels are computed bottom-up.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::Formula;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Sigma,
    Pi,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Sigma => "Sigma",
            Side::Pi => "Pi",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelResult {
    pub side: Side,
    pub level: usize,
}

impl fmt::Display for LevelResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.side, self.level)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HierarchyError {
    #[error("the hierarchy is defined for finitary formulas; found a big connective")]
    BigConnective,
    #[error("class symbol {0} is not among the declared extra symbols")]
    UndeclaredClass(String),
    #[error("class quantifiers have no place in the hierarchy")]
    ClassQuantifier,
}

/// Extra class symbols whose atoms count as bounded.
pub type Symbols = BTreeSet<String>;

/// Minimal `(Σ, Π)` levels of a subformula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Levels {
    sigma: usize,
    pi: usize,
}

const INF: usize = usize::MAX;

fn succ(n: usize) -> usize {
    n.saturating_add(1)
}

fn bounded_with(f: &Formula, symbols: &Symbols) -> Result<bool, HierarchyError> {
    let mut err = None;
    f.visit(&mut |g| match g {
        Formula::BigAnd(_) | Formula::BigOr(_) => err = err.clone().or(Some(HierarchyError::BigConnective)),
        Formula::ClassAll(..) | Formula::ClassEx(..) => err = err.clone().or(Some(HierarchyError::ClassQuantifier)),
        Formula::ClassMem(_, c) if !symbols.contains(c) => {
            err = err.clone().or(Some(HierarchyError::UndeclaredClass(c.clone())))
        }
        Formula::ClassEq(a, b) => {
            for c in [a, b] {
                if !symbols.contains(c) {
                    err = err.clone().or(Some(HierarchyError::UndeclaredClass(c.clone())));
                }
            }
        }
        _ => {}
    });
    match err {
        Some(e) => Err(e),
        None => Ok(f.is_bounded()),
    }
}

fn levels(f: &Formula) -> Levels {
    if f.is_bounded() {
        return Levels { sigma: 0, pi: 0 };
    }
    // Levels reachable by the closure clauses alone; they apply from level 1 up.
    let (s, p) = match f {
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (la, lb) = (levels(a), levels(b));
            (la.sigma.max(lb.sigma).max(1), la.pi.max(lb.pi).max(1))
        }
        Formula::Imp(a, b) => {
            let (la, lb) = (levels(a), levels(b));
            (INF, succ(la.sigma).max(lb.pi).max(1))
        }
        Formula::BoundedAll(_, _, b) | Formula::BoundedEx(_, _, b) => {
            let l = levels(b);
            (l.sigma.max(1), l.pi.max(1))
        }
        Formula::Ex(_, b) => (levels(b).sigma.max(1), INF),
        Formula::All(_, b) => (INF, levels(b).pi.max(1)),
        _ => unreachable!("atoms are bounded"),
    };
    Levels { sigma: s.min(succ(p)), pi: p.min(succ(s)) }
}

/// Minimal Σ and Π levels, treating atoms over `symbols` as bounded.
pub fn classify_with(f: &Formula, symbols: &Symbols) -> Result<(LevelResult, LevelResult), HierarchyError> {
    bounded_with(f, symbols)?;
    let l = levels(f);
    debug_assert!(l.sigma != INF && l.pi != INF);
    Ok((LevelResult { side: Side::Sigma, level: l.sigma }, LevelResult { side: Side::Pi, level: l.pi }))
}

pub fn classify(f: &Formula) -> Result<(LevelResult, LevelResult), HierarchyError> {
    classify_with(f, &Symbols::new())
}

pub fn in_level_with(f: &Formula, side: Side, n: usize, symbols: &Symbols) -> Result<bool, HierarchyError> {
    let (s, p) = classify_with(f, symbols)?;
    Ok(match side {
        Side::Sigma => s.level <= n,
        Side::Pi => p.level <= n,
    })
}

pub fn in_level(f: &Formula, side: Side, n: usize) -> Result<bool, HierarchyError> {
    in_level_with(f, side, n, &Symbols::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{exhaustive, Quantifiers};
    use crate::formula::parse;
    use proptest::prelude::*;

    /// The closure definition unfolded literally, with no level arithmetic.
    fn member(f: &Formula, side: Side, n: usize) -> bool {
        if f.is_bounded() {
            return true;
        }
        if n == 0 {
            return false;
        }
        let m = n - 1;
        let base = match side {
            Side::Sigma => member(f, Side::Pi, m),
            Side::Pi => member(f, Side::Sigma, m),
        };
        base || match (side, f) {
            (_, Formula::And(a, b) | Formula::Or(a, b)) => member(a, side, n) && member(b, side, n),
            (_, Formula::BoundedAll(_, _, b) | Formula::BoundedEx(_, _, b)) => member(b, side, n),
            (Side::Sigma, Formula::Ex(_, b)) => member(b, side, n),
            (Side::Pi, Formula::All(_, b)) => member(b, side, n),
            (Side::Pi, Formula::Imp(a, b)) => member(a, Side::Sigma, m) && member(b, Side::Pi, n),
            _ => false,
        }
    }

    fn lv(src: &str) -> (usize, usize) {
        let (s, p) = classify(&parse(src).unwrap()).unwrap();
        (s.level, p.level)
    }

    #[test]
    fn examples() {
        assert!(in_level(&parse("x in y").unwrap(), Side::Sigma, 0).unwrap());
        let ex = parse("ex x. x in y").unwrap();
        assert!(in_level(&ex, Side::Sigma, 1).unwrap());
        assert!(!in_level(&ex, Side::Pi, 1).unwrap());
        assert_eq!(lv("x in y"), (0, 0));
        assert_eq!(lv("all x. ex y. x in y").1, 2);
        assert_eq!(lv("ex x. all y. y in x -> y = y").0, 2);
    }

    #[test]
    fn negation_climbs_without_quantifiers() {
        assert_eq!(lv("ex x. x = x"), (1, 2));
        assert_eq!(lv("~(ex x. x = x)"), (3, 2));
        assert_eq!(lv("~~(ex x. x = x)"), (5, 4));
    }

    #[test]
    fn rejects_big_connectives_and_undeclared_classes() {
        let big = Formula::BigAnd(vec![parse("x = x").unwrap()]);
        assert_eq!(classify(&big), Err(HierarchyError::BigConnective));
        let f = parse("ex x. x in X").unwrap();
        assert_eq!(classify(&f), Err(HierarchyError::UndeclaredClass("X".into())));
        let s: Symbols = ["X".to_string()].into();
        assert_eq!(classify_with(&f, &s).unwrap().0.level, 1);
    }

    #[test]
    fn agrees_with_literal_recursion_on_corpus() {
        for f in exhaustive(&["x1"], 2, Quantifiers::FirstOrder) {
            let (s, p) = classify(&f).unwrap();
            for n in 0..6 {
                assert_eq!(member(&f, Side::Sigma, n), s.level <= n, "{f:?}");
                assert_eq!(member(&f, Side::Pi, n), p.level <= n, "{f:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn minimal_levels_are_tight(f in crate::formula::tests::arb_formula()) {
            prop_assume!(!f.has_class_symbols());
            let Ok((s, p)) = classify(&f) else {
                return Ok(());
            };
            prop_assert!(member(&f, Side::Sigma, s.level));
            prop_assert!(member(&f, Side::Pi, p.level));
            if s.level > 0 {
                prop_assert!(!member(&f, Side::Sigma, s.level - 1));
            }
            if p.level > 0 {
                prop_assert!(!member(&f, Side::Pi, p.level - 1));
            }
            prop_assert_eq!(s.level == 0, f.is_bounded());
            prop_assert!(member(&f, Side::Sigma, s.level + 1) && member(&f, Side::Pi, p.level + 1));
        }
    }
}
