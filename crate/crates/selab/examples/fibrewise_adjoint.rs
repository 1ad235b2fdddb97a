//! The right adjoint to pulling back points along a split epimorphism,
//! checked through its hom-set bijection.
//!
//! ```bash
//! cargo run -p selab --example fibrewise_adjoint
//! ```

use selab::catalog::points_over;
use selab::extension::{fibrewise_right_adjoint, point_morphisms, pullback_point};
use selab::group::FiniteGroup;
use selab::hom::hom_enumerate;

fn main() -> selab::Result<()> {
    // the split epimorphism C6 -> C2 with its section
    let e = FiniteGroup::cyclic(6)?.into_arc();
    let b = FiniteGroup::cyclic(2)?.into_arc();
    let p = hom_enumerate(&e, &b)?.into_iter().find(|h| h.is_surjective()).unwrap();
    let sec = hom_enumerate(&b, &e)?
        .into_iter()
        .find(|s| p.compose(s).map(|r| r.map() == [0, 1]).unwrap_or(false))
        .unwrap();
    println!("p: {} -> {} with section {:?}", e.label(), b.label(), sec.map());

    let kernels = vec![
        FiniteGroup::cyclic(1)?.into_arc(),
        FiniteGroup::cyclic(2)?.into_arc(),
        FiniteGroup::cyclic(3)?.into_arc(),
    ];
    let points_e = points_over(&e, &kernels, 18)?;
    let points_b = points_over(&b, &kernels, 6)?;
    println!("{} points over C6, {} points over C2", points_e.len(), points_b.len());

    for d in &points_e {
        let adjoint = fibrewise_right_adjoint(&p, &sec, d)?;
        println!(
            "\nright adjoint of {} has kernel order {}",
            d.describe(),
            adjoint.kernel().order()
        );
        for a_prime in &points_b {
            let lhs = point_morphisms(&pullback_point(a_prime, &p)?, d)?.len();
            let rhs = point_morphisms(a_prime, &adjoint)?.len();
            assert_eq!(lhs, rhs);
            println!("  |Hom(p*({}), D)| = {lhs} = |Hom(-, adjoint)|", a_prime.describe());
        }
    }
    println!("\nhom-count bijection verified on every pair");
    Ok(())
}
