//! Parsing, capture-avoiding substitution, relativization and the
//! Fleischmann–Lévy classification of a few formulas.

use std::error::Error;

use cst_workbench::formula::{parse, render, RelBound, Term};
use cst_workbench::hierarchy::{classify, in_level, Side};

pub fn main() -> Result<(), Box<dyn Error>> {
    let f = parse("all y. x = y -> ex z in y. z in x")?;
    println!("formula:      {f}");
    println!("free:         {:?}", f.free_vars());
    println!("bounded:      {}", f.is_bounded());

    // `y` is bound, so substituting `y` for `x` renames the binder.
    let g = f.substitute("x", &Term::var("y"));
    println!("x := y:       {g}");
    assert!(g.free_vars().contains("y"));

    let set = f.relativize(&RelBound::Term(Term::var("a")));
    let class = f.relativize(&RelBound::Class("M".into()));
    println!("over a:       {set}");
    println!("over M:       {class}");
    assert!(set.is_bounded());

    println!();
    for src in ["x in y", "ex x. x in y", "all x. ex y. x in y", "~(ex x. x in y)", "(ex x. x = x) -> all y. y = y"] {
        let h = parse(src)?;
        let (sigma, pi) = classify(&h)?;
        assert!(in_level(&h, Side::Sigma, sigma.level)?);
        assert!(sigma.level == 0 || !in_level(&h, Side::Sigma, sigma.level - 1)?);
        println!("{:<32} {sigma} / {pi}", render(&h));
    }
    Ok(())
}
