//! Walk the subgroup lattice of a small group: generation, meets and
//! joins, normality, commutators and centralizers.
//!
//! ```bash
//! cargo run -p selab --example subgroup_lattice
//! ```

use selab::group::FiniteGroup;
use selab::subgroup::{enumerate_subgroups, Subgroup};

fn main() -> selab::Result<()> {
    let d4 = FiniteGroup::dihedral(4)?.into_arc();

    let subs = enumerate_subgroups(&d4, false)?;
    println!("{} has {} subgroups:", d4.label(), subs.len());
    for s in &subs {
        let mark = if s.is_normal() { "normal" } else { "      " };
        println!("  {:>2}  {}  {}", s.order(), mark, s.notation());
    }

    let normals = enumerate_subgroups(&d4, true)?;
    println!("... of which {} are normal", normals.len());

    // generate from a reflection and see the closure iterations
    let (reflection, iterations) = Subgroup::generate(&d4, &[4])?;
    println!(
        "\n<element 4> = {} after {} closure iterations",
        reflection.notation(),
        iterations
    );

    let (rotations, _) = Subgroup::generate(&d4, &[1])?;
    println!("<element 1> = {} (the rotation subgroup)", rotations.notation());

    let joined = reflection.join(&rotations)?;
    println!("their join is {} (the whole group)", joined.notation());
    let met = reflection.meet(&rotations)?;
    println!("their meet is {}", met.notation());

    let full = Subgroup::full(d4.clone());
    let derived = full.higgins_commutator(&full)?;
    println!("\n[D4, D4] = {} (the center here)", derived.notation());
    println!("Z(D4)    = {}", full.centralizer().notation());
    println!(
        "normal closure of {} is {}",
        reflection.notation(),
        reflection.normal_closure().notation()
    );
    Ok(())
}
