use std::collections::BTreeMap;

use thiserror::Error;

use super::{satisfies, Env, HfSet};
use crate::budget::{Budget, BudgetExceeded};
use crate::corpus::{exhaustive, exhaustive_count, Quantifiers};
use crate::formula::Formula;

/// A total map `j: U → W` between transitive sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    source: HfSet,
    target: HfSet,
    graph: BTreeMap<HfSet, HfSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("{0} is not transitive")]
    NotTransitive(HfSet),
    #[error("no image given for {0}")]
    NotTotal(HfSet),
    #[error("{0} is not in the source")]
    OutsideSource(HfSet),
    #[error("image {0} is not in the target")]
    OutsideTarget(HfSet),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

impl EmbeddingMap {
    pub fn new(source: HfSet, target: HfSet, graph: BTreeMap<HfSet, HfSet>) -> Result<Self, EmbeddingError> {
        for s in [&source, &target] {
            if !s.is_transitive() {
                return Err(EmbeddingError::NotTransitive(s.clone()));
            }
        }
        if let Some(x) = source.iter().find(|x| !graph.contains_key(x)) {
            return Err(EmbeddingError::NotTotal(x.clone()));
        }
        for (x, y) in &graph {
            if !source.contains(x) {
                return Err(EmbeddingError::OutsideSource(x.clone()));
            }
            if !target.contains(y) {
                return Err(EmbeddingError::OutsideTarget(y.clone()));
            }
        }
        Ok(EmbeddingMap { source, target, graph })
    }

    pub fn identity(u: HfSet) -> Result<Self, EmbeddingError> {
        let graph = u.iter().map(|x| (x.clone(), x.clone())).collect();
        Self::new(u.clone(), u, graph)
    }

    pub fn source(&self) -> &HfSet {
        &self.source
    }

    pub fn target(&self) -> &HfSet {
        &self.target
    }

    pub fn apply(&self, x: &HfSet) -> Option<&HfSet> {
        self.graph.get(x)
    }
}

/// A formula and source parameters on which `j` fails to be elementary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementarityFailure {
    pub formula: Formula,
    pub params: Vec<HfSet>,
}

/// Number of parameters used by [`check_elementary`].
pub const ELEMENTARITY_PARAMS: usize = 2;

/// Checks `U ⊨ φ(x⃗) ⟺ W ⊨ φ(j x⃗)` for every bounded `φ` of depth ≤ `depth`
/// in `x1, x2` and every parameter pair from `U`.
pub fn check_elementary(j: &EmbeddingMap, depth: usize, budget: &Budget) -> Result<Option<ElementarityFailure>, EmbeddingError> {
    check_elementary_with(j, depth, ELEMENTARITY_PARAMS, budget)
}

pub fn check_elementary_with(
    j: &EmbeddingMap,
    depth: usize,
    params: usize,
    budget: &Budget,
) -> Result<Option<ElementarityFailure>, EmbeddingError> {
    let names: Vec<String> = (1..=params).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let count = exhaustive_count(params, depth, Quantifiers::Bounded);
    let tuples = (j.source.len() as u128).pow(params as u32);
    budget.check_steps("the elementarity corpus", u64::try_from(count.saturating_mul(tuples)).unwrap_or(u64::MAX))?;
    let mut corpus = exhaustive(&refs, depth, Quantifiers::Bounded);
    // Smallest failures first.
    corpus.sort_by_key(Formula::size);
    let mut assignments: Vec<Vec<HfSet>> = vec![vec![]];
    for _ in 0..params {
        assignments = assignments.into_iter().flat_map(|t| j.source.iter().map(move |x| [t.clone(), vec![x.clone()]].concat())).collect();
    }
    for f in &corpus {
        for xs in &assignments {
            let src: Env = names.iter().cloned().zip(xs.iter().cloned()).collect();
            let tgt: Env = names.iter().cloned().zip(xs.iter().map(|x| j.graph[x].clone())).collect();
            let lhs = satisfies(&j.source, f, &src).expect("corpus formulas are first-order");
            let rhs = satisfies(&j.target, f, &tgt).expect("corpus formulas are first-order");
            if lhs != rhs {
                let used = f.free_vars();
                let params = names.iter().zip(xs).filter(|(n, _)| used.contains(*n)).map(|(_, x)| x.clone()).collect();
                return Ok(Some(ElementarityFailure { formula: f.clone(), params }));
            }
        }
    }
    Ok(None)
}

/// `K` transitive, `K ∈ j(K)`, and `j` fixes every element of `K`.
pub fn check_critical_point(j: &EmbeddingMap, k: &HfSet) -> Result<bool, EmbeddingError> {
    let jk = j.apply(k).ok_or_else(|| EmbeddingError::OutsideSource(k.clone()))?;
    Ok(k.is_transitive() && jk.contains(k) && k.iter().all(|x| j.apply(x) == Some(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn map(pairs: &[(HfSet, HfSet)], source: HfSet, target: HfSet) -> EmbeddingMap {
        EmbeddingMap::new(source, target, pairs.iter().cloned().collect()).unwrap()
    }

    #[test]
    fn elementarity_examples() {
        let b = Budget::default();
        for n in 0..4 {
            let id = EmbeddingMap::identity(HfSet::von_neumann(n)).unwrap();
            assert_eq!(check_elementary(&id, 2, &b).unwrap(), None);
        }
        let z = HfSet::empty();
        let one = HfSet::von_neumann(1);
        let two = HfSet::von_neumann(2);
        let j = map(&[(z.clone(), z.clone())], one.clone(), two.clone());
        assert_eq!(check_elementary(&j, 2, &b).unwrap(), None);
        let j = map(&[(z.clone(), one.clone())], one.clone(), two);
        let fail = check_elementary(&j, 2, &b).unwrap().unwrap();
        assert!(fail.formula.alpha_eq(&parse("ex y in x1. y = y").unwrap()));
        assert_eq!(fail.params, vec![z]);
    }

    #[test]
    fn critical_point_examples() {
        let z = HfSet::empty();
        let one = HfSet::von_neumann(1);
        let two = HfSet::von_neumann(2);
        let v3 = HfSet::cumulative(3);
        let id = EmbeddingMap::identity(v3.clone()).unwrap();
        for k in v3.iter() {
            assert!(!check_critical_point(&id, k).unwrap());
        }
        let j = map(&[(z.clone(), z.clone()), (one.clone(), two.clone())], two.clone(), HfSet::von_neumann(3));
        assert!(check_critical_point(&j, &one).unwrap());
        let j = map(&[(z.clone(), one.clone()), (one.clone(), two.clone())], two.clone(), HfSet::von_neumann(3));
        assert!(!check_critical_point(&j, &one).unwrap());
        assert!(check_critical_point(&j, &two).is_err());
    }

    #[test]
    fn construction_errors() {
        let z = HfSet::empty();
        let one = HfSet::von_neumann(1);
        let bad = HfSet::singleton(one.clone());
        assert!(matches!(EmbeddingMap::new(bad.clone(), one.clone(), BTreeMap::new()), Err(EmbeddingError::NotTransitive(_))));
        assert!(matches!(EmbeddingMap::new(one.clone(), one.clone(), BTreeMap::new()), Err(EmbeddingError::NotTotal(_))));
        let g = [(z.clone(), one.clone())].into_iter().collect();
        assert!(matches!(EmbeddingMap::new(one.clone(), one, g), Err(EmbeddingError::OutsideTarget(_))));
    }
}
