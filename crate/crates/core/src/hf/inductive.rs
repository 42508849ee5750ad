use thiserror::Error;

use super::HfSet;

/// A finite set of rules `<X, a>`: from all of `X`, infer `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InductiveDef {
    rules: Vec<(HfSet, HfSet)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("rule {0} is not an ordered pair")]
pub struct NotARule(pub HfSet);

impl InductiveDef {
    pub fn new(rules: impl IntoIterator<Item = (HfSet, HfSet)>) -> Self {
        let mut rules: Vec<_> = rules.into_iter().collect();
        rules.sort();
        rules.dedup();
        InductiveDef { rules }
    }

    /// Reads a set of Kuratowski pairs `<X, a>`.
    pub fn from_hf(phi: &HfSet) -> Result<Self, NotARule> {
        let rules = phi.iter().map(|r| r.as_pair().ok_or_else(|| NotARule(r.clone()))).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(rules))
    }

    pub fn rules(&self) -> &[(HfSet, HfSet)] {
        &self.rules
    }

    pub fn conclusions(&self) -> HfSet {
        HfSet::from_elements(self.rules.iter().map(|(_, a)| a.clone()))
    }

    /// `Γ(C) = {a | ∃X ⊆ C. <X, a> ∈ Φ}`.
    pub fn gamma(&self, c: &HfSet) -> HfSet {
        HfSet::from_elements(self.rules.iter().filter(|(x, _)| x.is_subset(c)).map(|(_, a)| a.clone()))
    }

    pub fn is_closed(&self, c: &HfSet) -> bool {
        self.gamma(c).is_subset(c)
    }
}

/// The stages `∅, Γ(∅), Γ²(∅), ...` up to and including the first repeat.
pub fn lfp_stages(phi: &InductiveDef) -> Vec<HfSet> {
    let mut stages = vec![HfSet::empty()];
    loop {
        let next = phi.gamma(stages.last().expect("nonempty"));
        if &next == stages.last().expect("nonempty") {
            return stages;
        }
        stages.push(next);
    }
}

/// The least `Φ`-closed set.
pub fn lfp_inductive(phi: &InductiveDef) -> HfSet {
    lfp_stages(phi).pop().expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(lfp_inductive(&InductiveDef::default()), HfSet::empty());
        let phi = InductiveDef::new([(hf("{}"), hf("{}")), (hf("{{}}"), hf("{{}}"))]);
        assert_eq!(lfp_inductive(&phi), hf("{{},{{}}}"));
        assert_eq!(lfp_stages(&phi).len(), 3);
        let phi = InductiveDef::new([(hf("{{}}"), hf("{{}}"))]);
        assert_eq!(lfp_inductive(&phi), HfSet::empty());
    }

    #[test]
    fn reads_pairs() {
        let z = HfSet::empty();
        let set = HfSet::singleton(HfSet::ordered_pair(&z, &z));
        assert_eq!(InductiveDef::from_hf(&set).unwrap().rules(), &[(z.clone(), z)]);
        assert!(InductiveDef::from_hf(&hf("{{}}")).is_err());
    }

    fn arb_rules() -> impl Strategy<Value = InductiveDef> {
        let small = (0usize..4).prop_map(HfSet::von_neumann);
        let premise = prop::collection::vec(small.clone(), 0..3).prop_map(HfSet::from_elements);
        prop::collection::vec((premise, small), 0..6).prop_map(InductiveDef::new)
    }

    proptest! {
        #[test]
        fn least_closed_among_subsets(phi in arb_rules()) {
            let fix = lfp_inductive(&phi);
            prop_assert!(phi.is_closed(&fix));
            prop_assert!(fix.is_subset(&phi.conclusions()));
            for c in phi.conclusions().subsets() {
                if phi.is_closed(&c) {
                    prop_assert!(fix.is_subset(&c));
                }
            }
        }

        #[test]
        fn stages_increase(phi in arb_rules()) {
            let s = lfp_stages(&phi);
            for w in s.windows(2) {
                prop_assert!(w[0].is_subset(&w[1]) && w[0] != w[1]);
            }
            prop_assert!(s.len() <= phi.conclusions().len() + 1);
        }
    }
}
