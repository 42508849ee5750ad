use std::collections::HashSet;

use super::{premises, Derivation, Logic, Rule, Sequent};
use crate::formula::{Formula, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvalidNode {
    /// Premise indices from the root.
    pub path: Vec<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub valid: Result<(), InvalidNode>,
    /// Every formula in the tree has the shape of a subformula of the root.
    pub subformula_property: bool,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.valid.is_ok()
    }
}

pub fn check_derivation(d: &Derivation, logic: Logic, allow_cut: bool) -> CheckReport {
    let mut path = Vec::new();
    let valid = check_node(d, logic, allow_cut, &mut path);
    let shapes = root_shapes(&d.conclusion);
    CheckReport { valid, subformula_property: all_shaped(d, &shapes) }
}

fn check_node(d: &Derivation, logic: Logic, allow_cut: bool, path: &mut Vec<usize>) -> Result<(), InvalidNode> {
    let fail = |reason: String, path: &Vec<usize>| Err(InvalidNode { path: path.clone(), reason });
    if matches!(d.rule, Rule::Cut(_)) && !allow_cut {
        return fail("cut is not admitted".into(), path);
    }
    let expected = match premises(&d.rule, &d.conclusion, logic) {
        Ok(ps) => ps,
        Err(reason) => return fail(reason, path),
    };
    if expected.len() != d.premises.len() {
        return fail(format!("{} needs {} premises, found {}", d.rule.name(), expected.len(), d.premises.len()), path);
    }
    for (i, (want, got)) in expected.iter().zip(&d.premises).enumerate() {
        if *want != got.conclusion {
            return fail(format!("premise {i} should be {want}, found {}", got.conclusion), path);
        }
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        check_node(p, logic, allow_cut, path)?;
        path.pop();
    }
    Ok(())
}

/// A formula with every term and bound name erased; quantifier instances
/// share the skeleton of the quantified body.
fn skeleton(f: &Formula) -> Formula {
    let t = || Term::var("_");
    let b = |g: &Formula| Box::new(skeleton(g));
    match f {
        Formula::Eq(..) => Formula::Eq(t(), t()),
        Formula::Mem(..) => Formula::Mem(t(), t()),
        Formula::ClassMem(_, c) => Formula::ClassMem(t(), c.clone()),
        Formula::And(x, y) => Formula::And(b(x), b(y)),
        Formula::Or(x, y) => Formula::Or(b(x), b(y)),
        Formula::Imp(x, y) => Formula::Imp(b(x), b(y)),
        Formula::BigAnd(v) => Formula::BigAnd(v.iter().map(skeleton).collect()),
        Formula::BigOr(v) => Formula::BigOr(v.iter().map(skeleton).collect()),
        Formula::BoundedAll(_, _, g) => Formula::BoundedAll("_".into(), t(), b(g)),
        Formula::BoundedEx(_, _, g) => Formula::BoundedEx("_".into(), t(), b(g)),
        Formula::All(_, g) => Formula::All("_".into(), b(g)),
        Formula::Ex(_, g) => Formula::Ex("_".into(), b(g)),
        Formula::ClassAll(_, g) => Formula::ClassAll("_".into(), b(g)),
        Formula::ClassEx(_, g) => Formula::ClassEx("_".into(), b(g)),
        Formula::Falsum | Formula::Prop(_) | Formula::ClassEq(..) => f.clone(),
    }
}

/// Subformula skeletons of the root; a bounded quantifier also contributes
/// the membership guard its rules introduce.
fn root_shapes(root: &Sequent) -> HashSet<Formula> {
    let mut out = HashSet::new();
    for f in root.formulas() {
        f.visit(&mut |g| {
            out.insert(skeleton(g));
            if matches!(g, Formula::BoundedAll(..) | Formula::BoundedEx(..)) {
                out.insert(Formula::Mem(Term::var("_"), Term::var("_")));
            }
        });
    }
    out
}

fn all_shaped(d: &Derivation, shapes: &HashSet<Formula>) -> bool {
    d.conclusion.formulas().all(|f| shapes.contains(&skeleton(f))) && d.premises.iter().all(|p| all_shaped(p, shapes))
}
