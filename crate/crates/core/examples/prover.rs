//! Backward proof search in a G3i-style calculus, derivation checking, cut
//! and the elimination of comprehension-defined classes.

use std::error::Error;

use cst_workbench::formula::parse;
use cst_workbench::prover::{
    check_derivation, eliminate_classes, premises, prove, Derivation, Logic, Outcome, Rule, Sequent,
};

pub fn main() -> Result<(), Box<dyn Error>> {
    let s: Sequent = "p -> q, q -> r => p -> r".parse()?;
    let Outcome::Proved(d) = prove(&s, Logic::Intuitionistic, 10_000) else {
        return Err("transitivity of implication should be provable".into());
    };
    print!("{d}");
    let report = check_derivation(&d, Logic::Intuitionistic, false);
    assert!(report.is_ok() && report.subformula_property);
    println!("{} nodes, height {}\n", d.size(), d.height());

    for (src, logic) in [("=> p | ~p", Logic::Intuitionistic), ("=> p | ~p", Logic::Classical), ("=> ex x. x in a", Logic::Classical)] {
        let outcome = prove(&src.parse()?, logic, 10_000);
        let verdict = match outcome {
            Outcome::Proved(_) => "proved",
            Outcome::NotProvable => "not provable",
            Outcome::Incomplete => "no proof found with the available terms",
            Outcome::BudgetExceeded => "budget exceeded",
        };
        println!("{logic:?} {src}: {verdict}");
    }

    // A hand-assembled cut on q: both premises are found by search, and the
    // result checks only when cuts are allowed.
    let goal: Sequent = "p, p -> q, q -> r => r".parse()?;
    let rule = Rule::Cut(parse("q")?);
    let mut subproofs = Vec::new();
    for premise in premises(&rule, &goal, Logic::Intuitionistic)? {
        match prove(&premise, Logic::Intuitionistic, 10_000) {
            Outcome::Proved(d) => subproofs.push(d),
            other => return Err(format!("premise {premise}: {other:?}").into()),
        }
    }
    let with_cut = Derivation { rule, conclusion: goal, premises: subproofs };
    print!("\n{with_cut}");
    let strict = check_derivation(&with_cut, Logic::Intuitionistic, false);
    let lax = check_derivation(&with_cut, Logic::Intuitionistic, true);
    println!("valid without cuts: {}, with cuts: {}", strict.valid.is_ok(), lax.valid.is_ok());

    // Classes defined by comprehension reduce to first-order formulas.
    let axioms = [parse("all x. x in V <-> x = x")?, parse("all x. x in E <-> x in x & ~(x in x)")?];
    let (_, goal) = eliminate_classes(&axioms, &parse("all y. y in E -> y in V")?)?;
    println!("\neliminated goal: {goal}");
    assert!(prove(&Sequent::goal(goal), Logic::Intuitionistic, 10_000).is_proved());
    Ok(())
}
