//! Run the property checkers on a few small groups and print their
//! reports.
//!
//! ```bash
//! cargo run -p selab --example theorem_checks
//! ```

use selab::checks::{
    check_core_adjunction, check_higgins_normality, check_intersections_binary,
    check_join_normals_normal, check_three_subobjects, intersection_decompositions, FamilyPolicy,
};
use selab::extension::conjugation_extension;
use selab::group::FiniteGroup;

fn main() -> selab::Result<()> {
    let policy = FamilyPolicy::default();
    for group in [
        FiniteGroup::symmetric(3)?.into_arc(),
        FiniteGroup::dihedral(4)?.into_arc(),
        FiniteGroup::quaternion8().into_arc(),
        FiniteGroup::alternating(4)?.into_arc(),
    ] {
        println!("== {} ==", group.label());
        println!("{}", check_higgins_normality(&group)?.line());
        println!("{}", check_join_normals_normal(&group, &policy)?.line());
        println!("{}", check_three_subobjects(&group)?.line());

        for (k, b) in intersection_decompositions(&group)? {
            println!("{}", check_intersections_binary(&group, &k, &b)?.line());
        }

        // the conjugation extension lives on X x X, so this scan hits the
        // capacity bound once the group passes order 6
        match check_core_adjunction(&conjugation_extension(&group)) {
            Ok(report) => println!("{}", report.line()),
            Err(e) => println!("skipped core_adjunction: {e}"),
        }
        println!();
    }
    Ok(())
}
