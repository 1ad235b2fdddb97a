//! The infinitary counterexample: each bounded-support subgroup N_i of
//! Z2^N x Z is normal for the infinitary operation omega, but their
//! union is not — joins of normal subobjects can fail to be normal once
//! operations of infinite arity are allowed.
//!
//! ```bash
//! cargo run -p selab --example omega_counterexample
//! ```

use selab::omega::{
    parse_descriptor, sample_invariance_inputs, verify_ni_invariance, verify_witness,
    OmegaElement, SeqDescriptor,
};

fn main() -> selab::Result<()> {
    // alpha is constantly (0,1); beta walks a delta along the support
    let alpha = SeqDescriptor::constant(OmegaElement::new([], 1));
    let beta = SeqDescriptor::shifted_delta(OmegaElement::zero());
    println!("alpha = {alpha}");
    println!("beta  = {beta}");

    let sum = alpha.add(&beta);
    println!("alpha + beta = {sum}");
    println!("omega(alpha)        = {}", alpha.omega_eval());
    println!("omega(alpha + beta) = {}", sum.omega_eval());

    let difference = sum.omega_eval().sub(&alpha.omega_eval());
    println!("difference          = {difference}");
    println!(
        "difference in N_i for i <= 64: {}",
        (0..=64).any(|i| difference.member_ni(i))
    );

    println!("\n{}", verify_witness(64).line());

    // every N_i individually is invariant on sampled fragment inputs
    for i in [1, 2, 4, 8] {
        let samples = sample_invariance_inputs(i, 1000, 0xC0FFEE);
        println!("{}", verify_ni_invariance(i, &samples)?.line());
    }

    // descriptors also parse from their one-line syntax
    let d = parse_descriptor("prefix[{0;2}]+sdelta{1;0}")?;
    println!("\nparsed {d}; omega = {}", d.omega_eval());
    Ok(())
}
