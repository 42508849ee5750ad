//! Finite checkers for regular, BCST-regular and inaccessible sets.
//!
//! A relation `R: a ⇉ A` has a collecting `b ∈ A` iff each choice function
//! inside it does, and a function `f` is collected exactly by `ran f`. So a
//! transitive `A` is regular iff for every inhabited `a ∈ A` every inhabited
//! `s ⊆ A` with `|s| ≤ |a|` belongs to `A`.

use std::fmt;

use thiserror::Error;

use super::mv::is_full;
use super::{satisfies, Env, HfSet};
use crate::budget::{Budget, BudgetExceeded};
use crate::formula::{parse, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegularityLevel {
    Regular,
    Bcst,
    InaccessibleConditions,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularError {
    #[error("{0} is not transitive")]
    NotTransitive(HfSet),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// `a ∈ A` and a relation `R: a ⇉ A` with no `b ∈ A` such that `R: a ⇔ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityWitness {
    pub a: HfSet,
    pub relation: HfSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub level: RegularityLevel,
    pub holds: bool,
    pub clauses: Vec<Clause>,
    pub counterexample: Option<RegularityWitness>,
}

impl fmt::Display for RegularityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.holds { "holds" } else { "fails" })?;
        for c in &self.clauses {
            write!(f, "  {}: {}", c.name, if c.holds { "yes" } else { "no" })?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        if let Some(w) = &self.counterexample {
            writeln!(f, "  witness a = {}, R = {}", w.a, w.relation)?;
        }
        Ok(())
    }
}

/// A function from `a` onto `s`, assuming `1 ≤ |s| ≤ |a|`.
fn onto(a: &HfSet, s: &HfSet) -> HfSet {
    let ys = s.elems();
    HfSet::from_elements(a.iter().enumerate().map(|(i, x)| HfSet::ordered_pair(x, &ys[i.min(ys.len() - 1)])))
}

/// The first failure of second-order Strong Collection, if any.
pub fn regular_counterexample(big_a: &HfSet, budget: &Budget) -> Result<Option<RegularityWitness>, RegularError> {
    if !big_a.is_transitive() {
        return Err(RegularError::NotTransitive(big_a.clone()));
    }
    budget.check_steps("subsets of the candidate regular set", 1u64 << big_a.len().min(63))?;
    let subsets = big_a.subsets();
    for a in big_a.iter().filter(|a| !a.is_empty()) {
        for s in subsets.iter().filter(|s| !s.is_empty() && s.len() <= a.len()) {
            if !big_a.contains(s) {
                return Ok(Some(RegularityWitness { a: a.clone(), relation: onto(a, s) }));
            }
        }
    }
    Ok(None)
}

fn axiom(src: &str) -> Formula {
    parse(src).expect("axiom source parses")
}

/// Union, Pairing, Empty set, and Binary Intersection, as sentences.
pub fn bcst_axioms() -> Vec<(&'static str, Formula)> {
    vec![
        ("union", axiom("all a. ex b. all y in a. all x in y. x in b")),
        ("pairing", axiom("all x. all y. ex z. x in z & y in z")),
        ("empty set", axiom("ex e. all y in e. false")),
        ("binary intersection", axiom("all a. all b. ex c. all x. (x in c -> x in a & x in b) & (x in a & x in b -> x in c)")),
    ]
}

pub fn check_regular(big_a: &HfSet, level: RegularityLevel, budget: &Budget) -> Result<RegularityReport, RegularError> {
    let counterexample = regular_counterexample(big_a, budget)?;
    let mut clauses = vec![Clause {
        name: "strong collection",
        holds: counterexample.is_none(),
        detail: String::new(),
    }];
    match level {
        RegularityLevel::Regular => {}
        RegularityLevel::Bcst => {
            for (name, ax) in bcst_axioms() {
                let holds = satisfies(big_a, &ax, &Env::new()).expect("closed first-order sentence");
                clauses.push(Clause { name, holds, detail: String::new() });
            }
        }
        RegularityLevel::InaccessibleConditions => {
            clauses.push(Clause {
                name: "omega",
                holds: false,
                detail: "unsatisfiable by a hereditarily finite set".into(),
            });
            let bad_union = big_a.iter().find(|a| !big_a.contains(&a.big_union()));
            clauses.push(Clause {
                name: "union",
                holds: bad_union.is_none(),
                detail: bad_union.map(|a| format!("a = {a}")).unwrap_or_default(),
            });
            let bad_inter = big_a.iter().filter(|a| !a.is_empty()).find(|a| {
                let meet = a.iter().skip(1).fold(a.elems()[0].clone(), |acc, x| acc.intersection(x));
                !big_a.contains(&meet)
            });
            clauses.push(Clause {
                name: "intersection",
                holds: bad_inter.is_none(),
                detail: bad_inter.map(|a| format!("a = {a}")).unwrap_or_default(),
            });
            let mut bad_full = None;
            'outer: for a in big_a.iter() {
                for b in big_a.iter() {
                    let mut found = false;
                    for c in big_a.iter() {
                        if is_full(c, a, b, budget)? {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        bad_full = Some((a.clone(), b.clone()));
                        break 'outer;
                    }
                }
            }
            clauses.push(Clause {
                name: "full sets",
                holds: bad_full.is_none(),
                detail: bad_full.map(|(a, b)| format!("no full set for mv({a}, {b})")).unwrap_or_default(),
            });
        }
    }
    let holds = clauses.iter().all(|c| c.holds);
    Ok(RegularityReport { level, holds, clauses, counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hf::mv::{covers, maps_into};
    use std::collections::BTreeSet;

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    /// Brute force over every relation `R ⊆ a × A` with `R: a ⇉ A`.
    fn regular_brute(big_a: &HfSet) -> bool {
        big_a.iter().all(|a| {
            let cells: Vec<(HfSet, HfSet)> =
                a.iter().flat_map(|x| big_a.iter().map(move |y| (x.clone(), y.clone()))).collect();
            (0u64..1 << cells.len()).all(|mask| {
                let r: BTreeSet<_> = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c.clone()).collect();
                !maps_into(&r, a, big_a) || big_a.iter().any(|b| maps_into(&r, a, b) && covers(&r, a, b))
            })
        })
    }

    #[test]
    fn spec_examples() {
        let b = Budget::default();
        assert!(check_regular(&HfSet::empty(), RegularityLevel::Regular, &b).unwrap().holds);
        assert!(check_regular(&hf("{{}}"), RegularityLevel::Regular, &b).unwrap().holds);
        let r = check_regular(&hf("{{},{{}}}"), RegularityLevel::Regular, &b).unwrap();
        assert!(!r.holds);
        let z = HfSet::empty();
        let one = HfSet::von_neumann(1);
        assert_eq!(
            r.counterexample,
            Some(RegularityWitness { a: one.clone(), relation: HfSet::singleton(HfSet::ordered_pair(&z, &one)) })
        );
    }

    #[test]
    fn reduction_agrees_with_brute_force() {
        let b = Budget::default();
        let v3 = HfSet::cumulative(3);
        for a in v3.subsets().into_iter().chain(HfSet::cumulative(4).subsets().into_iter().filter(|s| s.len() <= 3)) {
            if !a.is_transitive() {
                continue;
            }
            let fast = regular_counterexample(&a, &b).unwrap().is_none();
            assert_eq!(fast, regular_brute(&a), "{a}");
        }
    }

    #[test]
    fn not_transitive() {
        assert!(matches!(
            check_regular(&hf("{{{}}}"), RegularityLevel::Regular, &Budget::default()),
            Err(RegularError::NotTransitive(_))
        ));
    }

    #[test]
    fn bcst_clauses() {
        let b = Budget::default();
        let r = check_regular(&hf("{{}}"), RegularityLevel::Bcst, &b).unwrap();
        let names: Vec<_> = r.clauses.iter().map(|c| (c.name, c.holds)).collect();
        assert_eq!(
            names,
            vec![("strong collection", true), ("union", true), ("pairing", false), ("empty set", true), ("binary intersection", true)]
        );
        assert!(!r.holds);
        let v3 = HfSet::cumulative(3);
        let r = check_regular(&v3, RegularityLevel::Bcst, &b).unwrap();
        assert!(r.clauses[3].holds && !r.clauses[2].holds);
    }

    #[test]
    fn inaccessible_clauses_report_omega() {
        let r = check_regular(&hf("{{}}"), RegularityLevel::InaccessibleConditions, &Budget::default()).unwrap();
        assert!(!r.holds);
        let names: Vec<_> = r.clauses.iter().map(|c| (c.name, c.holds)).collect();
        // mv(∅,∅) = {∅}, and no member of {∅} is full in it.
        assert_eq!(
            names,
            vec![("strong collection", true), ("omega", false), ("union", true), ("intersection", true), ("full sets", false)]
        );
    }
}
