//! Finite formal topologies, their nuclei and Heyting frames.

use std::error::Error;

use cst_workbench::topology::{all_posets, from_poset, omega, parse_topology, FrameElement};
use cst_workbench::Budget;

pub fn main() -> Result<(), Box<dyn Error>> {
    let budget = Budget::default();
    let o = omega();
    println!("double-negation topology:\n{o}frame: {:?}\n", o.frame_elements(&budget)?.iter().map(|p| o.show(p.0)).collect::<Vec<_>>());

    let chain = from_poset(&["a", "b"], &[("a", "b")])?;
    let a = chain.element(chain.subset(&["a"])?).expect("{a} is stable");
    let not_a = chain.negate(a);
    // In a chain a | ~a is not top: the frame is not Boolean.
    println!("chain: ~{{a}} = {}, {{a}} | ~{{a}} = {}", chain.show(not_a.0), chain.show(chain.join(a, not_a).0));

    // z below a and b, both below t. The text form lists the order and a
    // minimal cover presentation, and parses back to the same topology.
    let diamond = from_poset(&["z", "a", "b", "t"], &[("z", "a"), ("z", "b"), ("a", "t"), ("b", "t"), ("z", "t")])?;
    let text = diamond.to_text();
    print!("\n{text}");
    assert_eq!(parse_topology(&text, &budget)?.to_text(), text);
    let frame = diamond.frame_elements(&budget)?;
    println!("diamond: {} frame elements", frame.len());
    for p in &frame {
        print!("{} ", diamond.show(p.0));
    }
    println!();
    let j_b = diamond.nucleus(diamond.subset(&["b"])?);
    println!("j{{b}} = {}", diamond.show(j_b.0));

    // Heyting adjunction on every frame from posets of at most three points.
    let mut checked = 0;
    for t in (0..=3).flat_map(all_posets) {
        let fr: Vec<FrameElement> = t.frame_elements(&budget)?;
        for &p in &fr {
            for &q in &fr {
                for &r in &fr {
                    assert_eq!(r.leq(t.implies(p, q)), t.meet(r, p).leq(q));
                    checked += 1;
                }
            }
        }
    }
    println!("adjunction checked on {checked} triples");
    Ok(())
}
