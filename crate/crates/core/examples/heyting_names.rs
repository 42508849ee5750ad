//! Heyting-valued names: check names, the interpretation, excluded middle
//! over the double-negation topology, and the Strong Collection witness.

use std::error::Error;

use cst_workbench::formula::{parse, Formula};
use cst_workbench::hf::HfSet;
use cst_workbench::names::{
    check_name, interpret, name_universe, powerset_name, relation_formula, strong_collection_witness, Environment,
    Name,
};
use cst_workbench::topology::{from_poset, omega, FrameElement};
use cst_workbench::Budget;

pub fn main() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let o = omega();
    let u = name_universe(&o, 2, &budget)?;
    println!("{} names of depth <= 2 over the double-negation topology", u.names().len());

    let one = check_name(&HfSet::von_neumann(1), &o);
    let two = check_name(&HfSet::von_neumann(2), &o);
    let env = Environment::new().with("a", one.clone()).with("b", two);
    for src in ["a in b", "b in a", "all x in a. x in b", "ex x. x in a & ~(x in x)"] {
        println!("[[{src}]] = {}", o.show(interpret(&parse(src)?, &env, &u)?.0));
    }

    // Excluded middle holds for every bounded formula over this topology...
    let lem = parse("(ex y in x. y in z) | ~(ex y in x. y in z)")?;
    for x in u.names() {
        for z in u.names() {
            let env = Environment::new().with("x", x.clone()).with("z", z.clone());
            assert_eq!(interpret(&lem, &env, &u)?, o.top());
        }
    }
    println!("excluded middle forced on all {} parameter pairs", u.names().len().pow(2));

    // ...but not on the two-point chain.
    let chain = from_poset(&["a", "b"], &[("a", "b")])?;
    let uc = name_universe(&chain, 1, &budget)?;
    let half = Name::new([(Name::empty(), FrameElement(1))].into());
    let v = interpret(&parse("{} in x | ~({} in x)")?, &Environment::new().with("x", half), &uc)?;
    println!("on the chain: [[0 in x | ~(0 in x)]] = {}", chain.show(v.0));

    // R relates the element of 1 to everything; the witness collects the range.
    let r = Name::new(
        u.names()
            .iter()
            .take(3)
            .map(|y| (cst_workbench::names::op(&Name::empty(), y, &o), o.top()))
            .collect(),
    );
    let b = strong_collection_witness(&one, &r, o.top(), &u)?;
    let onto = Formula::and(
        parse("all x in a. ex y in b. placeholder")?.map_atoms(&mut |g| (*g == Formula::prop("placeholder")).then(|| relation_formula("R", "x", "y"))),
        parse("all y in b. ex x in a. placeholder")?.map_atoms(&mut |g| (*g == Formula::prop("placeholder")).then(|| relation_formula("R", "x", "y"))),
    );
    let env = Environment::new().with("a", one.clone()).with("b", b.clone()).with("R", r);
    println!("\nwitness has {} entries; [[R: a <=> b]] = {}", b.entries().len(), o.show(interpret(&onto, &env, &u)?.0));

    let p = powerset_name(&one, &u, &budget)?;
    println!("power set name of 1 has {} entries", p.entries().len());
    Ok(())
}
