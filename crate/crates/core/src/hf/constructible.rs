use std::collections::BTreeSet;

use super::ops::{fundamental_op, ALL_OPS};
use super::HfSet;
use crate::budget::{Budget, BudgetExceeded};

/// `𝓔(a) = a ∪ {F_i(x⃗) | x⃗ from a}`.
pub fn closure_step(a: &HfSet, budget: &Budget) -> Result<HfSet, BudgetExceeded> {
    let mut out: BTreeSet<HfSet> = a.iter().cloned().collect();
    for op in ALL_OPS {
        if op.arity() == 1 {
            for x in a.iter() {
                out.insert(fundamental_op(op, std::slice::from_ref(x)).expect("arity"));
            }
        } else {
            for x in a.iter() {
                for y in a.iter() {
                    out.insert(fundamental_op(op, &[x.clone(), y.clone()]).expect("arity"));
                }
            }
        }
        budget.check_elements("a definable-closure stage", out.len())?;
    }
    Ok(HfSet::from_elements(out))
}

/// `𝒟(a) = 𝓔(a ∪ {a})`.
pub fn def_step(a: &HfSet, budget: &Budget) -> Result<HfSet, BudgetExceeded> {
    let mut with_a = a.elems().to_vec();
    with_a.push(a.clone());
    closure_step(&HfSet::from_elements(with_a), budget)
}

/// `⋃_{n≤k} 𝒟ⁿ(a)`.
pub fn def_stage(a: &HfSet, k: usize, budget: &Budget) -> Result<HfSet, BudgetExceeded> {
    let mut acc = a.clone();
    let mut cur = a.clone();
    for _ in 0..k {
        cur = def_step(&cur, budget)?;
        acc = acc.union(&cur);
        budget.check_elements("a truncated Def stage", acc.len())?;
    }
    Ok(acc)
}

/// The truncated stages `L_{0,k}, ..., L_{alpha,k}`.
pub fn l_stages(alpha: usize, k: usize, budget: &Budget) -> Result<Vec<HfSet>, BudgetExceeded> {
    let mut stages = vec![HfSet::empty()];
    let mut defs: Vec<HfSet> = Vec::new();
    for beta in 0..alpha {
        defs.push(def_stage(&stages[beta], k, budget)?);
        let next = defs.iter().fold(HfSet::empty(), |acc, d| acc.union(d));
        budget.check_elements("a truncated L stage", next.len())?;
        stages.push(next);
    }
    Ok(stages)
}

/// `L_{alpha,k} = ⋃_{β<α} def_stage(L_{β,k}, k)`.
pub fn l_stage(alpha: usize, k: usize, budget: &Budget) -> Result<HfSet, BudgetExceeded> {
    Ok(l_stages(alpha, k, budget)?.pop().expect("nonempty"))
}

/// `α +_H γ = (⋃{β +_H γ | β ∈ α} ∪ {α}) + γ` on finite ordinals.
pub fn hereditary_add(alpha: u64, gamma: u64) -> u64 {
    let mut table: Vec<u64> = Vec::with_capacity(alpha as usize + 1);
    for a in 0..=alpha {
        // Von Neumann values as sets of naturals.
        let mut s: BTreeSet<u64> = table.iter().flat_map(|&v| 0..v).collect();
        s.insert(a);
        let n = s.len() as u64;
        assert!(s.iter().copied().eq(0..n), "union of ordinals is an ordinal");
        table.push(n + gamma);
    }
    table[alpha as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(s: &str) -> HfSet {
        s.parse().unwrap()
    }

    #[test]
    fn def_stage_examples() {
        let b = Budget::default();
        assert_eq!(def_stage(&HfSet::empty(), 1, &b).unwrap(), hf("{{},{{}}}"));
        let a = hf("{{{}}}");
        assert_eq!(def_stage(&a, 0, &b).unwrap(), a);
        for k in 1..3 {
            let d = def_stage(&a, k, &b).unwrap();
            assert!(a.is_subset(&d) && d.contains(&a));
        }
    }

    #[test]
    fn def_stage_monotone_in_k() {
        let b = Budget::default();
        let a = hf("{{}}");
        let d1 = def_stage(&a, 1, &b).unwrap();
        let d2 = def_stage(&a, 2, &b).unwrap();
        assert!(d1.is_subset(&d2));
    }

    #[test]
    fn l_stage_examples() {
        let b = Budget::default();
        assert_eq!(l_stage(0, 3, &b).unwrap(), HfSet::empty());
        assert_eq!(l_stage(1, 1, &b).unwrap(), hf("{{},{{}}}"));
        let s = l_stages(3, 1, &b).unwrap();
        for w in s.windows(2) {
            assert!(w[0].is_subset(&w[1]));
        }
        for alpha in 0..3 {
            assert!(l_stage(alpha, 0, &b).unwrap().is_subset(&l_stage(alpha, 1, &b).unwrap()));
        }
    }

    #[test]
    fn budgets_are_hard_errors() {
        let b = Budget::default().with_elements(3);
        assert!(def_stage(&hf("{{},{{}}}"), 1, &b).is_err());
    }

    /// Ordinal arithmetic on actual von Neumann sets.
    fn hadd_sets(alpha: usize, gamma: usize) -> HfSet {
        let prev: Vec<HfSet> = (0..alpha).map(|b| hadd_sets(b, gamma)).collect();
        let mut s = prev.iter().fold(HfSet::empty(), |acc, x| acc.union(x));
        s = s.union(&HfSet::singleton(HfSet::von_neumann(alpha)));
        for _ in 0..gamma {
            s = s.successor();
        }
        s
    }

    #[test]
    fn hereditary_add_examples() {
        assert_eq!(hereditary_add(0, 0), 1);
        assert_eq!(hereditary_add(0, 2), 3);
        assert_eq!(hereditary_add(1, 1), 3);
        for a in 0..5 {
            for g in 0..4 {
                assert_eq!(hadd_sets(a, g).as_natural(), Some(hereditary_add(a as u64, g as u64) as usize));
            }
        }
    }

    #[test]
    fn hereditary_add_bounds_and_monotonicity() {
        for a in 0..=6 {
            for g in 0..=6 {
                let h = hereditary_add(a, g);
                assert!(h >= a + g);
                if a < 6 {
                    assert!(hereditary_add(a + 1, g) >= h);
                }
                if g < 6 {
                    assert!(hereditary_add(a, g + 1) >= h);
                }
            }
        }
    }
}
