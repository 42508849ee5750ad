use std::collections::BTreeSet;

use thiserror::Error;

use super::HfSet;
use crate::budget::{Budget, BudgetExceeded};

/// A relation `R ⊆ A × B` together with its declared domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvRelation {
    pairs: BTreeSet<(HfSet, HfSet)>,
    domain: HfSet,
    codomain: HfSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    #[error("pair <{0}, {1}> has first component outside the domain")]
    OutsideDomain(HfSet, HfSet),
    #[error("{0} is not an ordered pair")]
    NotAPair(HfSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `R: A ⇉ B`
    Forward,
    /// `R: A ⇔ B`
    Both,
}

impl MvRelation {
    pub fn new(
        pairs: impl IntoIterator<Item = (HfSet, HfSet)>,
        domain: HfSet,
        codomain: HfSet,
    ) -> Result<Self, MvError> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some((a, b)) = pairs.iter().find(|(a, _)| !domain.contains(a)) {
            return Err(MvError::OutsideDomain(a.clone(), b.clone()));
        }
        Ok(MvRelation { pairs, domain, codomain })
    }

    /// Reads a set of Kuratowski pairs.
    pub fn from_hf(r: &HfSet, domain: HfSet, codomain: HfSet) -> Result<Self, MvError> {
        let pairs = r.iter().map(|p| p.as_pair().ok_or_else(|| MvError::NotAPair(p.clone()))).collect::<Result<Vec<_>, _>>()?;
        Self::new(pairs, domain, codomain)
    }

    pub fn pairs(&self) -> &BTreeSet<(HfSet, HfSet)> {
        &self.pairs
    }

    pub fn domain(&self) -> &HfSet {
        &self.domain
    }

    pub fn codomain(&self) -> &HfSet {
        &self.codomain
    }

    pub fn to_hf(&self) -> HfSet {
        HfSet::from_elements(self.pairs.iter().map(|(a, b)| HfSet::ordered_pair(a, b)))
    }

    pub fn holds(&self, a: &HfSet, b: &HfSet) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    /// `∩` with another relation, keeping this one's domain and codomain.
    pub fn restrict_to(&self, s: &BTreeSet<(HfSet, HfSet)>) -> MvRelation {
        MvRelation {
            pairs: self.pairs.intersection(s).cloned().collect(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
        }
    }
}

/// `∀x ∈ a ∃y ∈ b. <x,y> ∈ r`.
pub fn maps_into(r: &BTreeSet<(HfSet, HfSet)>, a: &HfSet, b: &HfSet) -> bool {
    a.iter().all(|x| b.iter().any(|y| r.contains(&(x.clone(), y.clone()))))
}

/// `∀y ∈ b ∃x ∈ a. <x,y> ∈ r`.
pub fn covers(r: &BTreeSet<(HfSet, HfSet)>, a: &HfSet, b: &HfSet) -> bool {
    b.iter().all(|y| a.iter().any(|x| r.contains(&(x.clone(), y.clone()))))
}

/// `𝒜(R) = {<a, <a,b>> | <a,b> ∈ R}` with domain `A` and codomain `A × B`.
pub fn adjust_mv(r: &MvRelation) -> MvRelation {
    let codomain = HfSet::from_elements(
        r.domain.iter().flat_map(|a| r.codomain.iter().map(move |b| HfSet::ordered_pair(a, b))),
    );
    MvRelation {
        pairs: r.pairs.iter().map(|(a, b)| (a.clone(), HfSet::ordered_pair(a, b))).collect(),
        domain: r.domain.clone(),
        codomain,
    }
}

pub fn is_mv(r: &MvRelation, direction: Direction) -> bool {
    let dom_ok = r.domain.iter().all(|a| r.pairs.iter().any(|(x, _)| x == a));
    let ran_ok = r.pairs.iter().all(|(_, b)| r.codomain.contains(b));
    let forward = dom_ok && ran_ok;
    match direction {
        Direction::Forward => forward,
        Direction::Both => forward && covers(&r.pairs, &r.domain, &r.codomain),
    }
}

/// Every `R ⊆ a × b` with `dom R = a`, as sets of pairs.
pub fn mv_space(a: &HfSet, b: &HfSet, budget: &Budget) -> Result<Vec<HfSet>, BudgetExceeded> {
    let per = (1u64 << b.len().min(63)) - 1;
    let total = (0..a.len()).try_fold(1u64, |acc, _| acc.checked_mul(per)).unwrap_or(u64::MAX);
    budget.check_steps("the space of multi-valued functions", total)?;
    let choices: Vec<Vec<HfSet>> = a
        .iter()
        .map(|x| {
            b.subsets()
                .into_iter()
                .filter(|s| !s.is_empty())
                .map(|s| HfSet::from_elements(s.iter().map(|y| HfSet::ordered_pair(x, y))))
                .collect()
        })
        .collect();
    let mut out = vec![HfSet::empty()];
    for opts in &choices {
        out = out.iter().flat_map(|r| opts.iter().map(move |o| r.union(o))).collect();
    }
    Ok(out)
}

fn is_mv_set(s: &HfSet, a: &HfSet, b: &HfSet) -> bool {
    let mut dom = BTreeSet::new();
    for p in s.iter() {
        match p.as_pair() {
            Some((x, y)) if a.contains(&x) && b.contains(&y) => {
                dom.insert(x);
            }
            _ => return false,
        }
    }
    dom.len() == a.len()
}

/// `c ⊆ mv(a,b)` and every member of `mv(a,b)` contains a member of `c`.
pub fn is_full(c: &HfSet, a: &HfSet, b: &HfSet, budget: &Budget) -> Result<bool, BudgetExceeded> {
    if !c.iter().all(|s| is_mv_set(s, a, b)) {
        return Ok(false);
    }
    let space = mv_space(a, b, budget)?;
    Ok(space.iter().all(|r| c.iter().any(|s| s.is_subset(r))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    #[test]
    fn adjust_example() {
        let z = HfSet::empty();
        let one = HfSet::von_neumann(1);
        let r = MvRelation::new([(z.clone(), z.clone())], one.clone(), one.clone()).unwrap();
        let adj = adjust_mv(&r);
        let want: BTreeSet<_> = [(z.clone(), HfSet::ordered_pair(&z, &z))].into();
        assert_eq!(adj.pairs(), &want);
        assert!(adjust_mv(&MvRelation::new([], one.clone(), one).unwrap()).pairs().is_empty());
    }

    #[test]
    fn is_mv_examples() {
        let z = HfSet::empty();
        let one = HfSet::von_neumann(1);
        let r = MvRelation::new([(z.clone(), z.clone())], one.clone(), one.clone()).unwrap();
        assert!(is_mv(&r, Direction::Forward));
        assert!(!is_mv(&MvRelation::new([], one.clone(), one.clone()).unwrap(), Direction::Forward));
        let r = MvRelation::new([(z.clone(), z.clone())], one, HfSet::von_neumann(2)).unwrap();
        assert!(!is_mv(&r, Direction::Both));
        assert!(is_mv(&r, Direction::Forward));
        assert!(MvRelation::new([(HfSet::von_neumann(1), z.clone())], HfSet::von_neumann(1), z).is_err());
    }

    #[test]
    fn mv_space_counts() {
        let b = Budget::default();
        // (2^|b| - 1)^|a|
        assert_eq!(mv_space(&HfSet::von_neumann(2), &HfSet::von_neumann(2), &b).unwrap().len(), 9);
        assert_eq!(mv_space(&HfSet::empty(), &HfSet::von_neumann(2), &b).unwrap(), vec![HfSet::empty()]);
        assert!(mv_space(&HfSet::von_neumann(3), &HfSet::von_neumann(3), &b.with_steps(100)).is_err());
    }

    #[test]
    fn is_full_examples() {
        let b = Budget::default();
        let one = HfSet::von_neumann(1);
        let z = HfSet::empty();
        let c = HfSet::singleton(HfSet::singleton(HfSet::ordered_pair(&z, &z)));
        assert!(is_full(&c, &one, &one, &b).unwrap());
        let two = HfSet::von_neumann(2);
        assert!(!is_full(&HfSet::empty(), &one, &two, &b).unwrap());
        let all = HfSet::from_elements(mv_space(&two, &two, &b).unwrap());
        assert!(is_full(&all, &two, &two, &b).unwrap());
        // The functions 2 → 2 form a full set.
        let funcs = HfSet::from_elements(mv_space(&two, &two, &b).unwrap().into_iter().filter(|r| r.len() == 2));
        assert!(is_full(&funcs, &two, &two, &b).unwrap());
        assert!(!is_full(&hf("{{}}"), &one, &one, &b).unwrap());
    }
}
