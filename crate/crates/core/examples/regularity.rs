//! Regular sets, multi-valued functions and elementary embeddings at
//! hereditarily finite scale.

use std::collections::BTreeMap;
use std::error::Error;

use cst_workbench::hf::mv::{covers, maps_into};
use cst_workbench::hf::{
    adjust_mv, check_critical_point, check_elementary, check_regular, is_full, mv_space, EmbeddingMap, HfSet,
    MvRelation, RegularityLevel,
};
use cst_workbench::Budget;

pub fn main() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let n = HfSet::von_neumann;

    // Only 0 and 1 are regular: 2 already misses the subset {1}.
    for k in 0..4 {
        let report = check_regular(&n(k), RegularityLevel::Regular, &budget)?;
        print!("{k}: {report}");
    }
    print!("1 as inaccessible: {}", check_regular(&n(1), RegularityLevel::InaccessibleConditions, &budget)?);

    // The adjusted relation A(R) pairs a with <a, b>.
    let (a, b) = (n(2), n(2));
    let r = MvRelation::new([(n(0), n(1)), (n(1), n(0)), (n(1), n(1))], a.clone(), b.clone())?;
    let adj = adjust_mv(&r);
    let s: std::collections::BTreeSet<_> = [(n(0), n(1)), (n(1), n(1))].into();
    let s_set = HfSet::from_elements(s.iter().map(|(x, y)| HfSet::ordered_pair(x, y)));
    println!("\nA(R) maps into S: {}", maps_into(adj.pairs(), &a, &s_set));
    println!("R n S maps into B: {}", maps_into(r.restrict_to(&s).pairs(), &a, &b));
    println!("A(R) covers S: {}, S within R: {}", covers(adj.pairs(), &a, &s_set), s.is_subset(r.pairs()));

    let all = mv_space(&a, &b, &budget)?;
    println!("{} multi-valued functions 2 => 2; all of them form a full set: {}", all.len(), is_full(&HfSet::from_elements(all), &a, &b, &budget)?);

    // j: 2 -> 3 fixing 0 and sending 1 to 2 has critical point 1.
    let j = EmbeddingMap::new(n(2), n(3), BTreeMap::from([(n(0), n(0)), (n(1), n(2))]))?;
    println!("\ncritical point 1: {}", check_critical_point(&j, &n(1))?);
    match check_elementary(&j, 2, &budget)? {
        None => println!("elementary on depth-2 bounded formulas"),
        Some(fail) => println!("not elementary: {} at {:?}", fail.formula, fail.params.iter().map(ToString::to_string).collect::<Vec<_>>()),
    }
    let id = EmbeddingMap::identity(n(3))?;
    assert!(check_elementary(&id, 2, &budget)?.is_none());
    Ok(())
}
