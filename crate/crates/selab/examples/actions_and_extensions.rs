//! Internal actions, semidirect products, and the equivalence between
//! actions and split extensions.
//!
//! ```bash
//! cargo run -p selab --example actions_and_extensions
//! ```

use selab::action::{enumerate_actions, BAction};
use selab::extension::{action_of_split_extension, semidirect_comparison, semidirect_product};
use selab::group::FiniteGroup;
use selab::hom::are_isomorphic;

fn main() -> selab::Result<()> {
    let c2 = FiniteGroup::cyclic(2)?.into_arc();
    let c3 = FiniteGroup::cyclic(3)?.into_arc();

    let actions = enumerate_actions(&c2, &c3)?;
    println!("C2 acts on C3 in {} ways (homs into Aut(C3))", actions.len());

    for (k, act) in actions.iter().enumerate() {
        let ext = semidirect_product(act);
        println!(
            "  action {k}: middle group {} of order {}, abelian: {}",
            ext.middle().label(),
            ext.middle().order(),
            ext.middle().is_abelian()
        );
    }

    // the nontrivial action inverts, and the semidirect product is S3
    let s3 = FiniteGroup::symmetric(3)?.into_arc();
    let inversion = semidirect_product(&actions[1]);
    assert!(are_isomorphic(inversion.middle(), &s3));
    println!("the twisted product is isomorphic to S3");

    // recover the action from the extension and rebuild the point
    let recovered = action_of_split_extension(&inversion)?;
    assert_eq!(recovered, actions[1]);
    let (rebuilt, iso) = semidirect_comparison(&inversion)?;
    println!(
        "round trip: {} ~ {} via a point isomorphism on {} elements",
        rebuilt.middle().label(),
        inversion.middle().label(),
        iso.hom().map().len()
    );

    // conjugation as an action of a group on itself
    let q8 = FiniteGroup::quaternion8().into_arc();
    let conj = BAction::conjugation(&q8);
    println!(
        "\nconjugation in Q8 fixes -1: a(g, -1) = -1 for all g: {}",
        q8.elements().all(|g| conj.apply(g, 1) == 1)
    );
    Ok(())
}
