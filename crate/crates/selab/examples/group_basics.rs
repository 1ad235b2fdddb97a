//! Construct catalog groups, inspect their elements, and enumerate
//! homomorphisms and automorphisms.
//!
//! ```bash
//! cargo run -p selab --example group_basics
//! ```

use selab::aut::automorphism_group;
use selab::group::{format_cayley_table, FiniteGroup};
use selab::hom::{direct_product, hom_enumerate};

fn main() -> selab::Result<()> {
    let s3 = FiniteGroup::symmetric(3)?.into_arc();
    let c2 = FiniteGroup::cyclic(2)?.into_arc();
    let q8 = FiniteGroup::quaternion8().into_arc();

    println!("{s3} is abelian: {}", s3.is_abelian());
    println!("{q8} element orders: {:?}", q8.element_orders());

    println!("\nCayley table of {}:", c2.label());
    print!("{}", format_cayley_table(&c2));

    let homs = hom_enumerate(&s3, &c2)?;
    println!("\nHom({}, {}) has {} elements:", s3.label(), c2.label(), homs.len());
    for h in &homs {
        println!("  {:?}", h.map());
    }

    let aut = automorphism_group(&s3)?;
    println!("\nAut({}) has order {} (all inner for S3)", s3.label(), aut.order());

    let v4 = direct_product(&c2, &c2).group;
    let aut_v4 = automorphism_group(&v4)?;
    println!("Aut({}) has order {} (the invertible 2x2 matrices over F2)", v4.label(), aut_v4.order());

    let p = direct_product(&s3, &c2);
    println!("\n{} has order {}", p.group.label(), p.group.order());
    Ok(())
}
