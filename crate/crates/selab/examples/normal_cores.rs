//! Normal cores two ways: as the join of the contained normal subgroups
//! and as the intersection of all conjugates. The library computes both
//! on every call and insists they agree.
//!
//! ```bash
//! cargo run -p selab --example normal_cores
//! ```

use selab::checks::check_normal_core_pullback;
use selab::group::FiniteGroup;
use selab::subgroup::enumerate_subgroups;

fn main() -> selab::Result<()> {
    for group in [
        FiniteGroup::symmetric(3)?.into_arc(),
        FiniteGroup::symmetric(4)?.into_arc(),
        FiniteGroup::dihedral(6)?.into_arc(),
    ] {
        println!("normal cores in {}:", group.label());
        for s in enumerate_subgroups(&group, false)? {
            let core = s.normal_core();
            let tag = if core == s { " (already normal)" } else { "" };
            println!("  core of {:<22} = {}{}", s.notation(), core.notation(), tag);
        }
        println!();
    }

    // the quotient by the core embeds the subgroup with trivial core
    let s4 = FiniteGroup::symmetric(4)?.into_arc();
    for s in enumerate_subgroups(&s4, false)? {
        let report = check_normal_core_pullback(&s)?;
        assert_eq!(report.verdict, selab::Verdict::Holds);
    }
    println!("pullback squares verified for every subgroup of S4");
    Ok(())
}
