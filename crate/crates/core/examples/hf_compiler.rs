//! Hereditarily finite sets, the fundamental operations, and the compiler
//! from bounded formulas to operation terms, checked against satisfaction.

use std::error::Error;

use cst_workbench::formula::parse;
use cst_workbench::hf::{compile_bounded, eval_opterm, fundamental_op, satisfies, Env, HfSet, OpSymbol};

pub fn main() -> Result<(), Box<dyn Error>> {
    let v3 = HfSet::cumulative(3);
    println!("V3 = {v3} ({} sets)", v3.len());
    let two = HfSet::von_neumann(2);
    println!("2 = {two}, <0,1> = {}", HfSet::ordered_pair(&HfSet::empty(), &HfSet::von_neumann(1)));

    let p: OpSymbol = "F_p".parse()?;
    println!("F_p(2, 0) = {}", fundamental_op(p, &[two.clone(), HfSet::empty()])?);

    // { <x2, x1> in a2 x a1 | x2 is a member of some member of x1 }
    let f = parse("ex y in x1. x2 in y")?;
    let term = compile_bounded(&f, 2)?;
    println!("\n{f}\n  compiles to a term with {} distinct nodes", term.dag_size());

    let v4 = HfSet::cumulative(4);
    let got = eval_opterm(&term, &[v4.clone(), v3.clone()])?;
    let want = HfSet::from_elements(v3.iter().flat_map(|x2| {
        let f = &f;
        v4.iter().filter_map(move |x1| {
            let env: Env = [("x1".into(), x1.clone()), ("x2".into(), x2.clone())].into();
            satisfies(&HfSet::empty(), f, &env).unwrap().then(|| HfSet::ordered_pair(x2, x1))
        })
    }));
    assert_eq!(got, want);
    println!("  on (V4, V3): {} tuples, equal to the comprehension by satisfaction", got.len());
    Ok(())
}
