use std::collections::{HashMap, HashSet};

use super::{is_opaque, premises, Derivation, Logic, Rule, Sequent};
use crate::formula::{Formula, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Proved(Derivation),
    /// The search space was exhausted.
    NotProvable,
    /// No proof was found, but term instantiation was restricted, so the
    /// failure is not a proof of unprovability.
    Incomplete,
    BudgetExceeded,
}

impl Outcome {
    pub fn is_proved(&self) -> bool {
        matches!(self, Outcome::Proved(_))
    }
}

pub fn prove(s: &Sequent, logic: Logic, max_nodes: u64) -> Outcome {
    prove_with_cuts(s, logic, max_nodes, &[])
}

/// Search that may also cut on any of `cuts`.
pub fn prove_with_cuts(s: &Sequent, logic: Logic, max_nodes: u64, cuts: &[Formula]) -> Outcome {
    let mut search = Search {
        logic,
        max_nodes,
        cuts,
        nodes: 0,
        lowest_prune: usize::MAX,
        restricted: false,
        proved: HashMap::new(),
        failed: HashSet::new(),
        ancestors: Vec::new(),
    };
    match search.search(s) {
        Ok(Some(d)) => Outcome::Proved(d),
        Ok(None) if search.restricted => Outcome::Incomplete,
        Ok(None) => Outcome::NotProvable,
        Err(OutOfBudget) => Outcome::BudgetExceeded,
    }
}

struct OutOfBudget;

struct Search<'a> {
    logic: Logic,
    max_nodes: u64,
    cuts: &'a [Formula],
    nodes: u64,
    /// Smallest ancestor index a loop check in the current subtree matched.
    /// A failure is cached only if no loop check reached above the failing node.
    lowest_prune: usize,
    restricted: bool,
    proved: HashMap<Sequent, Derivation>,
    failed: HashSet<Sequent>,
    ancestors: Vec<Sequent>,
}

fn closing(s: &Sequent) -> Option<Rule> {
    if s.ante.contains(&Formula::Falsum) {
        return Some(Rule::LBot);
    }
    s.ante.iter().find(|f| is_opaque(f) && s.succ.contains(f)).map(|f| Rule::Axiom(f.clone()))
}

fn fresh_var(s: &Sequent, base: &str) -> String {
    let used: std::collections::BTreeSet<String> = s.formulas().flat_map(Formula::all_vars).collect();
    if !used.contains(base) {
        return base.to_string();
    }
    crate::formula::fresh_prime(base, &used)
}

impl Search<'_> {
    fn search(&mut self, s: &Sequent) -> Result<Option<Derivation>, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(OutOfBudget);
        }
        if let Some(d) = self.proved.get(s) {
            return Ok(Some(d.clone()));
        }
        if self.failed.contains(s) {
            return Ok(None);
        }
        if let Some(rule) = closing(s) {
            return Ok(Some(Derivation { rule, conclusion: s.clone(), premises: vec![] }));
        }
        // The deepest matching ancestor keeps the dependency as local as possible.
        if let Some(k) = self.ancestors.iter().rposition(|a| s.subsumed_by(a)) {
            self.lowest_prune = self.lowest_prune.min(k);
            return Ok(None);
        }
        if s.formulas().any(|f| matches!(f, Formula::ClassAll(..) | Formula::ClassEx(..))) {
            self.restricted = true;
        }
        let depth = self.ancestors.len();
        let outer = std::mem::replace(&mut self.lowest_prune, usize::MAX);
        self.ancestors.push(s.clone());
        let result = self.expand(s);
        self.ancestors.pop();
        let inner = std::mem::replace(&mut self.lowest_prune, outer);
        let result = result?;
        match &result {
            Some(d) => {
                self.proved.insert(s.clone(), d.clone());
            }
            // Every loop check below matched `s` or a descendant, so the
            // failure does not depend on how `s` was reached.
            None if inner >= depth => {
                self.failed.insert(s.clone());
            }
            None => self.lowest_prune = self.lowest_prune.min(inner),
        }
        Ok(result)
    }

    fn apply(&mut self, rule: Rule, s: &Sequent) -> Result<Option<Derivation>, OutOfBudget> {
        let prems = premises(&rule, s, self.logic).expect("search only generates applicable rules");
        let mut done = Vec::with_capacity(prems.len());
        for p in &prems {
            match self.search(p)? {
                Some(d) => done.push(d),
                None => return Ok(None),
            }
        }
        Ok(Some(Derivation { rule, conclusion: s.clone(), premises: done }))
    }

    fn expand(&mut self, s: &Sequent) -> Result<Option<Derivation>, OutOfBudget> {
        // Invertible rules commit: if one premise fails, so does `s`.
        if let Some(rule) = self.invertible(s) {
            return self.apply(rule, s);
        }
        // Cuts precede the other choices so that a cut-augmented search uses them.
        for c in self.cuts {
            if !s.ante.contains(c) && !s.succ.contains(c) {
                if let Some(d) = self.apply(Rule::Cut(c.clone()), s)? {
                    return Ok(Some(d));
                }
            }
        }
        for rule in self.alternatives(s) {
            if let Some(d) = self.apply(rule, s)? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// The first invertible rule every premise of which adds something to `s`.
    ///
    /// A premise included in its conclusion is never used by a proof of
    /// minimal height, so skipping such instances loses nothing.
    fn invertible(&self, s: &Sequent) -> Option<Rule> {
        let progress = |rule: &Rule| match premises(rule, s, self.logic) {
            Ok(ps) => ps.iter().all(|p| !p.subsumed_by(s)),
            Err(_) => false,
        };
        let cl = self.logic == Logic::Classical;
        let mut branching = None;
        let mut consider = |rule: Rule, splits: bool| {
            if !progress(&rule) {
                return None;
            }
            if !splits {
                return Some(rule);
            }
            branching.get_or_insert(rule);
            None
        };
        for f in &s.ante {
            let r = match f {
                Formula::And(..) => consider(Rule::LAnd(f.clone()), false),
                Formula::Or(..) => consider(Rule::LOr(f.clone()), true),
                Formula::Imp(..) => consider(Rule::LImp(f.clone()), true),
                Formula::BigAnd(v) => (0..v.len()).find_map(|k| consider(Rule::LBigAnd(f.clone(), k), false)),
                Formula::BigOr(v) => consider(Rule::LBigOr(f.clone()), v.len() > 1),
                Formula::Ex(x, _) => consider(Rule::LEx(f.clone(), fresh_var(s, x)), false),
                Formula::BoundedEx(x, _, _) => consider(Rule::LExIn(f.clone(), fresh_var(s, x)), false),
                _ => None,
            };
            if r.is_some() {
                return r;
            }
        }
        for f in &s.succ {
            let r = match f {
                Formula::Or(..) => consider(Rule::ROr(f.clone()), false),
                Formula::BigOr(v) => (0..v.len()).find_map(|k| consider(Rule::RBigOr(f.clone(), k), false)),
                Formula::And(..) => consider(Rule::RAnd(f.clone()), true),
                Formula::Imp(..) if cl => consider(Rule::RImp(f.clone()), false),
                Formula::All(x, _) if cl => consider(Rule::RAll(f.clone(), fresh_var(s, x)), false),
                Formula::BoundedAll(x, _, _) if cl => consider(Rule::RAllIn(f.clone(), fresh_var(s, x)), false),
                Formula::BigAnd(v) if cl => consider(Rule::RBigAnd(f.clone()), v.len() > 1),
                _ => None,
            };
            if r.is_some() {
                return r;
            }
        }
        branching
    }

    /// Rules whose failure says nothing about `s`, tried in order.
    fn alternatives(&mut self, s: &Sequent) -> Vec<Rule> {
        let mut out = Vec::new();
        if self.logic == Logic::Intuitionistic {
            for f in &s.succ {
                match f {
                    Formula::Imp(..) => out.push(Rule::RImp(f.clone())),
                    Formula::All(x, _) => out.push(Rule::RAll(f.clone(), fresh_var(s, x))),
                    Formula::BoundedAll(x, _, _) => out.push(Rule::RAllIn(f.clone(), fresh_var(s, x))),
                    Formula::BigAnd(_) => out.push(Rule::RBigAnd(f.clone())),
                    _ => {}
                }
            }
        }
        let mut terms = s.terms();
        let mut instances = Vec::new();
        for f in &s.ante {
            match f {
                Formula::All(..) => instances.push((f, true)),
                Formula::BoundedAll(..) => instances.push((f, true)),
                _ => {}
            }
        }
        for f in &s.succ {
            if matches!(f, Formula::Ex(..) | Formula::BoundedEx(..)) {
                instances.push((f, false));
            }
        }
        if !instances.is_empty() {
            // Only the sequent's own terms, plus one fresh variable for a
            // sequent that has none.
            self.restricted = true;
            if terms.is_empty() {
                terms.insert(Term::Var(fresh_var(s, "c")));
            }
        }
        for (f, left) in instances {
            for t in &terms {
                let rule = match (f, left) {
                    (Formula::All(..), true) => Rule::LAll(f.clone(), t.clone()),
                    (Formula::BoundedAll(..), true) => Rule::LAllIn(f.clone(), t.clone()),
                    (Formula::Ex(..), false) => Rule::REx(f.clone(), t.clone()),
                    _ => Rule::RExIn(f.clone(), t.clone()),
                };
                if premises(&rule, s, self.logic).is_ok_and(|ps| ps.iter().all(|p| !p.subsumed_by(s))) {
                    out.push(rule);
                }
            }
        }
        out
    }
}
