//! Automorphism groups.
//!
//! The search backtracks over images of a greedily chosen generating
//! sequence with homomorphism-extension pruning; for small groups the
//! tests cross-check against a full bijection scan.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{ArcGroup, FiniteGroup};
use crate::hom::{GroupHom, GroupIso, MapSearch};

/// Default bound on the group order for [`automorphism_group`].
pub const DEFAULT_AUT_BOUND: usize = 24;

/// The automorphism group of a finite group, with its elements listed in
/// lexicographic order of their maps (so the identity is element 0) and a
/// multiplication table matching composition.
pub struct AutomorphismGroup {
    group: ArcGroup,
    elements: Vec<GroupIso>,
}

impl AutomorphismGroup {
    /// The abstract group whose element `i` is `self.elements()[i]`,
    /// multiplied by composition (`i * j` applies `j` first).
    pub fn group(&self) -> &ArcGroup {
        &self.group
    }

    pub fn elements(&self) -> &[GroupIso] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Evaluate automorphism `a` on the element `x` of the base group.
    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.elements[a].apply(x)
    }
}

pub fn automorphism_group(x: &ArcGroup) -> Result<AutomorphismGroup> {
    automorphism_group_bounded(x, DEFAULT_AUT_BOUND)
}

pub fn automorphism_group_bounded(x: &ArcGroup, max_order: usize) -> Result<AutomorphismGroup> {
    if x.order() > max_order {
        return Err(Error::capacity("automorphism search order", x.order(), max_order));
    }
    let maps = MapSearch {
        dom: x,
        cod: x,
        bijective: true,
        seed: Vec::new(),
        restrict: None,
        stop_after: None,
    }
    .run();
    let index: HashMap<&[usize], usize> =
        maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let n = maps.len();
    let mut mul = vec![0usize; n * n];
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            let comp: Vec<usize> = (0..x.order()).map(|e| f[g[e]]).collect();
            mul[i * n + j] = *index
                .get(comp.as_slice())
                .expect("automorphisms are closed under composition");
        }
    }
    let group = FiniteGroup::from_table(format!("Aut({})", x.label()), n, mul)?.into_arc();
    let elements = maps
        .into_iter()
        .map(|m| GroupIso::new(GroupHom::new_unchecked(x.clone(), x.clone(), m)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AutomorphismGroup { group, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::is_homomorphism;

    fn arc(g: FiniteGroup) -> ArcGroup {
        g.into_arc()
    }

    /// Oracle: filter all bijections of the carrier.
    fn autos_brute(g: &ArcGroup) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for p in crate::group::permutations_lex(g.order()) {
            if p[0] == 0 && is_homomorphism(&p, g, g).unwrap() {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn aut_of_c2_is_trivial() {
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        assert_eq!(automorphism_group(&c2).unwrap().order(), 1);
    }

    #[test]
    fn aut_of_s3_has_order_six() {
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        let aut = automorphism_group(&s3).unwrap();
        assert_eq!(aut.order(), 6);
        assert_eq!(aut.group().order(), 6);
    }

    #[test]
    fn aut_of_klein_four_is_gl2_f2() {
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let v4 = crate::hom::direct_product(&c2, &c2).group;
        assert_eq!(automorphism_group(&v4).unwrap().order(), 6);
    }

    #[test]
    fn backtracking_matches_bijection_scan_up_to_order_eight() {
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let c4 = arc(FiniteGroup::cyclic(4).unwrap());
        let mut groups: Vec<FiniteGroup> =
            (1..=8).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
        groups.extend([
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::dihedral(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::quaternion8(),
            (*crate::hom::direct_product(&c2, &c2).group).clone(),
            (*crate::hom::direct_product(&c2, &c4).group).clone(),
            (*crate::hom::direct_product(&c2, &crate::hom::direct_product(&c2, &c2).group).group)
                .clone(),
        ]);
        for g in groups {
            let g = arc(g);
            let aut = automorphism_group(&g).unwrap();
            let fast: Vec<Vec<usize>> =
                aut.elements().iter().map(|a| a.hom().map().to_vec()).collect();
            assert_eq!(fast, autos_brute(&g), "Aut({})", g.label());
        }
    }

    #[test]
    fn identity_automorphism_is_element_zero() {
        let d4 = arc(FiniteGroup::dihedral(4).unwrap());
        let aut = automorphism_group(&d4).unwrap();
        let id: Vec<usize> = d4.elements().collect();
        assert_eq!(aut.elements()[0].hom().map(), id.as_slice());
    }

    #[test]
    fn table_matches_composition() {
        let d4 = arc(FiniteGroup::dihedral(4).unwrap());
        let aut = automorphism_group(&d4).unwrap();
        let g = aut.group();
        for i in 0..aut.order() {
            for j in 0..aut.order() {
                let k = g.mul(i, j);
                for x in d4.elements() {
                    assert_eq!(aut.apply(k, x), aut.apply(i, aut.apply(j, x)));
                }
            }
        }
    }

    #[test]
    fn capacity_bound_is_enforced_and_overridable() {
        let big = arc(FiniteGroup::dihedral(13).unwrap());
        assert!(matches!(automorphism_group(&big), Err(Error::Capacity { .. })));
        assert!(automorphism_group_bounded(&big, 26).is_ok());
    }
}
