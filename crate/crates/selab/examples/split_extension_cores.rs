//! Action cores and split extension cores: the largest sub-action inside
//! a subgroup, and its terminal lifting to a sub-split-extension.
//!
//! ```bash
//! cargo run -p selab --example split_extension_cores
//! ```

use selab::action::BAction;
use selab::extension::{
    conjugation_extension, enumerate_subpoints, split_extension_core, terminality_witness,
};
use selab::group::FiniteGroup;
use selab::subgroup::enumerate_subgroups;

fn main() -> selab::Result<()> {
    let s3 = FiniteGroup::symmetric(3)?.into_arc();

    // under conjugation, the action core recovers the normal core
    let conj = BAction::conjugation(&s3);
    for s in enumerate_subgroups(&s3, false)? {
        let core = conj.action_core(&s)?;
        assert!(core == s.normal_core());
    }
    println!("action cores under conjugation match normal cores in S3");

    // the conjugation split extension of S3 lives on S3 x S3
    let ext = conjugation_extension(&s3);
    println!("\nconjugation extension: {}", ext.describe());
    let subpoints = enumerate_subpoints(&ext)?;
    println!("it has {} subpoints (subgroups above the diagonal)", subpoints.len());

    for s in enumerate_subgroups(&s3, false)? {
        let core = split_extension_core(&s, &ext)?;
        println!(
            "  core of {:<12} kernel {:<12} middle order {}",
            s.notation(),
            core.kernel_sub.notation(),
            core.middle_sub.order()
        );
        assert!(core.kernel_embedding.is_injective());
        assert!(core.middle_embedding.is_injective());
        // terminality: nothing with kernel part inside kappa(s) escapes it
        assert_eq!(terminality_witness(&s, &ext, &subpoints)?, None);
    }
    println!("all cores verified terminal among subpoints");
    Ok(())
}
