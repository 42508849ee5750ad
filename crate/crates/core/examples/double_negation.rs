//! The double-negation translation, syntactically and semantically, and
//! Glivenko's theorem as seen by the prover.

use std::error::Error;

use cst_workbench::formula::{parse, Formula};
use cst_workbench::names::{name_universe, Environment};
use cst_workbench::prover::{prove, Logic, Sequent};
use cst_workbench::topology::omega;
use cst_workbench::translation::{goedel_gentzen, semantic, semantic_coincidence_check};
use cst_workbench::Budget;

pub fn main() -> Result<(), Box<dyn Error>> {
    for src in ["p | q", "ex x. x in y", "all x. x = x -> ex z. z in x"] {
        println!("{src:<30} ~> {}", goedel_gentzen(&parse(src)?));
    }

    // Semantically the translation holds exactly when the value is top.
    let o = omega();
    let u = name_universe(&o, 1, &Budget::default())?;
    println!();
    for src in ["ex x. all y in x. false", "all x. ex y. x in y", "ex x. x in x"] {
        let f = parse(src)?;
        let e = Environment::new();
        println!("{src:<30} translation {}, coincides {}", semantic(&f, &e, &u)?, semantic_coincidence_check(&f, &e, &u)?);
    }

    println!();
    for src in ["p | ~p", "~~p -> p", "((p -> q) -> p) -> p", "(p -> q) | (q -> p)"] {
        let f = parse(src)?;
        let cl = prove(&Sequent::goal(f.clone()), Logic::Classical, 100_000).is_proved();
        let int = prove(&Sequent::goal(f.clone()), Logic::Intuitionistic, 100_000).is_proved();
        let nn = prove(&Sequent::goal(Formula::not(Formula::not(f.clone()))), Logic::Intuitionistic, 100_000).is_proved();
        let gg = prove(&Sequent::goal(goedel_gentzen(&f)), Logic::Intuitionistic, 100_000).is_proved();
        println!("{src:<22} classical {cl:<5} intuitionistic {int:<5} ~~ {nn:<5} translated {gg}");
        assert!(cl == nn && nn == gg);
    }
    Ok(())
}
