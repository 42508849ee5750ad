//! Truncated definable-power-set stages, hereditary addition and least
//! fixed points of finite inductive definitions.

use std::error::Error;

use cst_workbench::hf::{def_stage, hereditary_add, l_stages, lfp_inductive, lfp_stages, HfSet, InductiveDef};
use cst_workbench::Budget;

pub fn main() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    for (alpha, stage) in l_stages(3, 1, &budget)?.iter().enumerate() {
        println!("L_{alpha} (one closure step per level) has {} elements", stage.len());
    }
    let one = HfSet::von_neumann(1);
    println!("def_stage(1, 1) = {}", def_stage(&one, 1, &budget)?);

    println!();
    for (a, g) in [(0, 0), (0, 2), (1, 1), (2, 3)] {
        println!("{a} +H {g} = {}", hereditary_add(a, g));
    }

    // Rules <premises, conclusion>: 0 outright, and k+1 from k for k < 3.
    let n = HfSet::von_neumann;
    let phi = InductiveDef::new([(HfSet::empty(), n(0))].into_iter().chain((0..3).map(|k| (HfSet::singleton(n(k)), n(k + 1)))));
    let stages = lfp_stages(&phi);
    for (i, s) in stages.iter().enumerate() {
        println!("stage {i}: {s}");
    }
    let fix = lfp_inductive(&phi);
    assert!(phi.is_closed(&fix));
    assert_eq!(fix, n(4));
    println!("least fixed point = 4");
    Ok(())
}
