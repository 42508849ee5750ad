//! Formula corpora: exhaustive enumerations for small depths and seeded
//! random samples for larger ones.
//!
//! Exhaustive enumeration names bound variables `y1, y2, ...` by nesting
//! level, so no two members are alpha-variants of each other.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::{Formula, Term};

/// Which quantifiers a generated formula may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifiers {
    Bounded,
    /// Bounded and unbounded.
    FirstOrder,
}

fn atoms(scope: &[String]) -> Vec<Formula> {
    let mut out = vec![Formula::Falsum];
    for a in scope.iter().rev() {
        for b in scope.iter().rev() {
            out.push(Formula::eq(Term::Var(a.clone()), Term::Var(b.clone())));
            out.push(Formula::mem(Term::Var(a.clone()), Term::Var(b.clone())));
        }
    }
    out
}

fn binder_name(scope: &[String], params: usize) -> String {
    format!("y{}", scope.len() - params + 1)
}

/// Number of formulas [`exhaustive`] would produce, saturating.
pub fn exhaustive_count(params: usize, depth: usize, q: Quantifiers) -> u128 {
    fn go(scope: usize, depth: usize, q: Quantifiers) -> u128 {
        let atoms = 1 + 2 * (scope * scope) as u128;
        if depth == 0 {
            return atoms;
        }
        let sub = go(scope, depth - 1, q);
        let body = go(scope + 1, depth - 1, q);
        let bounded = 2 * scope as u128 * body;
        let unbounded = if q == Quantifiers::FirstOrder { 2 * body } else { 0 };
        atoms.saturating_add(sub.saturating_mul(sub).saturating_mul(3)).saturating_add(bounded).saturating_add(unbounded)
    }
    go(params, depth, q)
}

/// Every formula of depth ≤ `depth` over the given parameters.
///
/// Order: atoms (most recent variable first, `=` before `∈`), then `∧ ∨ →`,
/// then quantifiers (bounded before unbounded, bounds in scope order, `∃`
/// before `∀`).
pub fn exhaustive(params: &[&str], depth: usize, q: Quantifiers) -> Vec<Formula> {
    let scope: Vec<String> = params.iter().map(|s| s.to_string()).collect();
    gen(&scope, params.len(), depth, q)
}

fn gen(scope: &[String], params: usize, depth: usize, q: Quantifiers) -> Vec<Formula> {
    let mut out = atoms(scope);
    if depth == 0 {
        return out;
    }
    let sub = gen(scope, params, depth - 1, q);
    for a in &sub {
        for b in &sub {
            out.push(Formula::and(a.clone(), b.clone()));
        }
    }
    for a in &sub {
        for b in &sub {
            out.push(Formula::or(a.clone(), b.clone()));
        }
    }
    for a in &sub {
        for b in &sub {
            out.push(Formula::imp(a.clone(), b.clone()));
        }
    }
    let y = binder_name(scope, params);
    let mut inner = scope.to_vec();
    inner.push(y.clone());
    let bodies = gen(&inner, params, depth - 1, q);
    for v in scope {
        for b in &bodies {
            out.push(Formula::ex_in(&y, Term::Var(v.clone()), b.clone()));
        }
        for b in &bodies {
            out.push(Formula::all_in(&y, Term::Var(v.clone()), b.clone()));
        }
    }
    if q == Quantifiers::FirstOrder {
        for b in &bodies {
            out.push(Formula::ex(&y, b.clone()));
        }
        for b in &bodies {
            out.push(Formula::all(&y, b.clone()));
        }
    }
    out
}

/// A seeded sample of `n` formulas of depth exactly `depth` (when the scope allows it).
pub fn random(seed: u64, n: usize, params: &[&str], depth: usize, q: Quantifiers) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scope: Vec<String> = params.iter().map(|s| s.to_string()).collect();
    (0..n).map(|_| random_one(&mut rng, &scope, params.len(), depth, q)).collect()
}

fn random_one(rng: &mut ChaCha8Rng, scope: &[String], params: usize, depth: usize, q: Quantifiers) -> Formula {
    if depth == 0 {
        return atoms(scope).choose(rng).expect("nonempty").clone();
    }
    let exact = depth - 1;
    let other = |rng: &mut ChaCha8Rng| rng.gen_range(0..depth);
    let mut kinds = vec![0u8, 1, 2];
    if !scope.is_empty() {
        kinds.extend([3, 4]);
    }
    if q == Quantifiers::FirstOrder {
        kinds.extend([5, 6]);
    }
    let kind = *kinds.choose(rng).expect("nonempty");
    let y = binder_name(scope, params);
    let mut inner = scope.to_vec();
    inner.push(y.clone());
    match kind {
        0..=2 => {
            let (da, db) = if rng.gen_bool(0.5) { (exact, other(rng)) } else { (other(rng), exact) };
            let a = random_one(rng, scope, params, da, q);
            let b = random_one(rng, scope, params, db, q);
            match kind {
                0 => Formula::and(a, b),
                1 => Formula::or(a, b),
                _ => Formula::imp(a, b),
            }
        }
        3 | 4 => {
            let v = scope.choose(rng).expect("nonempty scope").clone();
            let body = random_one(rng, &inner, params, exact, q);
            if kind == 3 {
                Formula::ex_in(&y, Term::Var(v), body)
            } else {
                Formula::all_in(&y, Term::Var(v), body)
            }
        }
        5 => Formula::ex(&y, random_one(rng, &inner, params, exact, q)),
        _ => Formula::all(&y, random_one(rng, &inner, params, exact, q)),
    }
}

/// Propositional formulas over `atoms` and `⊥` with at most `max_binary`
/// binary connectives, all of them.
pub fn propositional_exhaustive(atoms: &[&str], max_binary: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![atoms.iter().map(|p| Formula::prop(p)).chain([Formula::Falsum]).collect()];
    for n in 1..=max_binary {
        let mut level = Vec::new();
        for k in 0..n {
            for a in &by_size[k] {
                for b in &by_size[n - 1 - k] {
                    level.push(Formula::and(a.clone(), b.clone()));
                    level.push(Formula::or(a.clone(), b.clone()));
                    level.push(Formula::imp(a.clone(), b.clone()));
                }
            }
        }
        by_size.push(level);
    }
    by_size.concat()
}

/// A seeded sample of propositional formulas of connective depth ≤ `depth`.
pub fn propositional_random(seed: u64, n: usize, atoms: &[&str], depth: usize) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| prop_one(&mut rng, atoms, depth)).collect()
}

fn prop_one(rng: &mut ChaCha8Rng, atoms: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.2) {
        let k = rng.gen_range(0..=atoms.len());
        return atoms.get(k).map(|p| Formula::prop(p)).unwrap_or(Formula::Falsum);
    }
    let a = prop_one(rng, atoms, depth - 1);
    let b = prop_one(rng, atoms, depth - 1);
    match rng.gen_range(0..3) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        _ => Formula::imp(a, b),
    }
}
