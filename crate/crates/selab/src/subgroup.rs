//! Subgroups of a finite group and their lattice: generation, meets and
//! joins, normality, Higgins commutators, centralizers and normal cores.
//!
//! A subgroup is canonically a sorted set of element indices of its
//! parent, so equality of subgroups is equality of values.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group::{same_group, ArcGroup, FiniteGroup};
use crate::hom::GroupHom;

/// Default bound on the parent order for [`enumerate_subgroups`].
pub const DEFAULT_SUBGROUP_ENUM_BOUND: usize = 48;

#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: ArcGroup,
    elems: Vec<usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup({} in {})", self.notation(), self.parent.label())
    }
}

impl Subgroup {
    /// Wrap a set of indices as a subgroup, checking closure.
    pub fn new(parent: ArcGroup, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&e| e >= parent.order()) {
            return Err(Error::input(format!(
                "element {bad} out of range for {}",
                parent.label()
            )));
        }
        if elems.binary_search(&0).is_err() {
            return Err(Error::input("subgroup must contain the identity"));
        }
        for &a in &elems {
            if elems.binary_search(&parent.inv(a)).is_err() {
                return Err(Error::input(format!("subgroup not closed under inverse of {a}")));
            }
            for &b in &elems {
                if elems.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(Error::input(format!(
                        "subgroup not closed under product of {a} and {b}"
                    )));
                }
            }
        }
        Ok(Subgroup { parent, elems })
    }

    pub fn trivial(parent: ArcGroup) -> Self {
        Subgroup { parent, elems: vec![0] }
    }

    pub fn full(parent: ArcGroup) -> Self {
        let elems = parent.elements().collect();
        Subgroup { parent, elems }
    }

    /// Closure of `seed ∪ {0}` by the batched iteration
    /// `J_{n+1} = J_n ∪ m(J_n × J_n) ∪ i(J_n)`, stopping at the first
    /// fixpoint. Returns the subgroup and the number of iterations taken.
    pub fn generate(parent: &ArcGroup, seed: &[usize]) -> Result<(Self, usize)> {
        if let Some(&bad) = seed.iter().find(|&&e| e >= parent.order()) {
            return Err(Error::input(format!(
                "seed element {bad} out of range for {}",
                parent.label()
            )));
        }
        let mut current = vec![false; parent.order()];
        current[0] = true;
        for &s in seed {
            current[s] = true;
        }
        let mut members: Vec<usize> = (0..parent.order()).filter(|&e| current[e]).collect();
        let mut iterations = 0;
        loop {
            iterations += 1;
            let mut next = current.clone();
            let mut grew = false;
            for &a in &members {
                let p = parent.inv(a);
                if !next[p] {
                    next[p] = true;
                    grew = true;
                }
                for &b in &members {
                    let p = parent.mul(a, b);
                    if !next[p] {
                        next[p] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            current = next;
            members = (0..parent.order()).filter(|&e| current[e]).collect();
        }
        Ok((Subgroup { parent: parent.clone(), elems: members }, iterations))
    }

    pub fn parent(&self) -> &ArcGroup {
        &self.parent
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.elems.len() == self.parent.order()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&e).is_ok()
    }

    pub fn contains_all(&self, other: &Subgroup) -> bool {
        other.elems.iter().all(|&e| self.contains(e))
    }

    /// Canonical report form: the sorted index list.
    pub fn notation(&self) -> String {
        let inner: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    fn check_same_parent(&self, other: &Subgroup) -> Result<()> {
        if same_group(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch {
                left: self.parent.label().to_string(),
                right: other.parent.label().to_string(),
            })
        }
    }

    /// Set intersection; a subgroup again.
    pub fn meet(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        let elems: Vec<usize> =
            self.elems.iter().copied().filter(|&e| other.contains(e)).collect();
        Ok(Subgroup { parent: self.parent.clone(), elems })
    }

    /// Least upper bound: the closure of the union.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        let mut seed = self.elems.clone();
        seed.extend_from_slice(&other.elems);
        Ok(Subgroup::generate(&self.parent, &seed)?.0)
    }

    /// Join of an arbitrary family; the empty family joins to the
    /// trivial subgroup, the bottom of the lattice.
    pub fn join_family(parent: &ArcGroup, subs: &[Subgroup]) -> Result<Subgroup> {
        let mut seed = Vec::new();
        for s in subs {
            if !same_group(parent, &s.parent) {
                return Err(Error::ParentMismatch {
                    left: parent.label().to_string(),
                    right: s.parent.label().to_string(),
                });
            }
            seed.extend_from_slice(&s.elems);
        }
        Ok(Subgroup::generate(parent, &seed)?.0)
    }

    /// The conjugate subgroup `g H g⁻¹`.
    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let mut elems: Vec<usize> =
            self.elems.iter().map(|&h| self.parent.conjugate(g, h)).collect();
        elems.sort_unstable();
        Subgroup { parent: self.parent.clone(), elems }
    }

    /// Closure under the conjugation action of the parent on itself.
    pub fn is_normal(&self) -> bool {
        let g = &*self.parent;
        g.elements().all(|x| self.elems.iter().all(|&h| self.contains(g.conjugate(x, h))))
    }

    /// Least normal subgroup of the parent containing this one.
    pub fn normal_closure(&self) -> Subgroup {
        let g = &self.parent;
        let mut seed = Vec::new();
        for x in g.elements() {
            for &s in &self.elems {
                seed.push(g.conjugate(x, s));
            }
        }
        Subgroup::generate(g, &seed).expect("conjugates are in range").0
    }

    /// Subgroup generated by all commutators `[h, k]` with `h` here and
    /// `k` in `other`.
    pub fn higgins_commutator(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_same_parent(other)?;
        let g = &self.parent;
        let mut seed = Vec::new();
        for &h in &self.elems {
            for &k in &other.elems {
                seed.push(g.commutator(h, k));
            }
        }
        Ok(Subgroup::generate(g, &seed)?.0)
    }

    /// Elements of the parent commuting with everything here.
    pub fn centralizer(&self) -> Subgroup {
        let g = &*self.parent;
        let elems: Vec<usize> = g
            .elements()
            .filter(|&x| self.elems.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
            .collect();
        Subgroup { parent: self.parent.clone(), elems }
    }

    /// Largest normal subgroup of the parent contained in this subgroup.
    ///
    /// Computed as the join of all subgroups of `self` that are normal in
    /// the parent, then checked against the independent oracle
    /// `⋂_{x} x S x⁻¹`. A mismatch would be an internal bug and panics.
    pub fn normal_core(&self) -> Subgroup {
        match self.normal_core_verified() {
            Ok(core) => core,
            Err(witness) => panic!("internal consistency failure: {witness}"),
        }
    }

    /// Both normal-core routes, with a mismatch reported as an error
    /// instead of a panic.
    pub fn normal_core_verified(&self) -> std::result::Result<Subgroup, String> {
        let (sub_group, embed) = self.as_group();
        let inner = enumerate_subgroups_bounded(&sub_group, usize::MAX, false)
            .expect("no capacity bound applies");
        let mut normals = Vec::new();
        for h in inner {
            let lifted: Vec<usize> = h.elems.iter().map(|&e| embed.apply(e)).collect();
            let candidate = Subgroup { parent: self.parent.clone(), elems: sorted(lifted) };
            if candidate.is_normal() {
                normals.push(candidate);
            }
        }
        let joined = Subgroup::join_family(&self.parent, &normals)
            .expect("normal subgroups share the parent");

        // Independent route: intersect all conjugates of S.
        let mut oracle = self.elems.clone();
        for x in self.parent.elements() {
            let conj = self.conjugate_by(x);
            oracle.retain(|&e| conj.contains(e));
        }
        if joined.elems == oracle {
            Ok(joined)
        } else {
            Err(format!(
                "join-of-normals {:?} disagrees with conjugate-intersection {:?} for S = {} in {}",
                joined.elems,
                oracle,
                self.notation(),
                self.parent.label()
            ))
        }
    }

    /// View this subgroup as a group in its own right, together with the
    /// embedding homomorphism into the parent.
    pub fn as_group(&self) -> (ArcGroup, GroupHom) {
        let n = self.elems.len();
        let pos = |e: usize| self.elems.binary_search(&e).expect("closed subgroup");
        let mut mul = vec![0usize; n * n];
        for (i, &a) in self.elems.iter().enumerate() {
            for (j, &b) in self.elems.iter().enumerate() {
                mul[i * n + j] = pos(self.parent.mul(a, b));
            }
        }
        let label = format!("{}{}", self.parent.label(), self.notation());
        let group = FiniteGroup::from_table(label, n, mul)
            .expect("closed subset of a group is a group")
            .into_arc();
        let embed = GroupHom::new(group.clone(), self.parent.clone(), self.elems.clone())
            .expect("inclusion is a homomorphism");
        (group, embed)
    }

    /// Position of a parent element inside this subgroup's carrier.
    pub fn index_of(&self, parent_elem: usize) -> Option<usize> {
        self.elems.binary_search(&parent_elem).ok()
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

/// Naive one-element-at-a-time closure; the test oracle for `generate`.
pub fn naive_closure(parent: &ArcGroup, seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let members: Vec<usize> = set.iter().copied().collect();
        let mut added = None;
        'scan: for &a in &members {
            if !set.contains(&parent.inv(a)) {
                added = Some(parent.inv(a));
                break 'scan;
            }
            for &b in &members {
                let p = parent.mul(a, b);
                if !set.contains(&p) {
                    added = Some(p);
                    break 'scan;
                }
            }
        }
        match added {
            Some(e) => {
                set.insert(e);
            }
            None => break,
        }
    }
    set.into_iter().collect()
}

/// All subgroups of `parent` in canonical order (by size, then
/// lexicographically on the element lists).
///
/// Starts from the cyclic subgroups and saturates under pairwise joins;
/// every subgroup is a join of cyclic ones, so the sweep is exhaustive.
pub fn enumerate_subgroups(parent: &ArcGroup, normal_only: bool) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_bounded(parent, DEFAULT_SUBGROUP_ENUM_BOUND, normal_only)
}

pub fn enumerate_subgroups_bounded(
    parent: &ArcGroup,
    max_order: usize,
    normal_only: bool,
) -> Result<Vec<Subgroup>> {
    if parent.order() > max_order {
        return Err(Error::capacity("subgroup enumeration order", parent.order(), max_order));
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for g in parent.elements() {
        let (sub, _) = Subgroup::generate(parent, &[g])?;
        seen.insert(sub.elems);
    }
    let mut processed: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for new in &frontier {
            for old in processed.iter().chain(frontier.iter()) {
                if is_subset(old, new) || is_subset(new, old) {
                    continue;
                }
                let mut seed = new.clone();
                seed.extend_from_slice(old);
                let (joined, _) = Subgroup::generate(parent, &seed)?;
                if seen.insert(joined.elems.clone()) {
                    fresh.push(joined.elems);
                }
            }
        }
        processed.append(&mut frontier);
        frontier = fresh;
    }
    let mut subs: Vec<Subgroup> = seen
        .into_iter()
        .map(|elems| Subgroup { parent: parent.clone(), elems })
        .collect();
    if normal_only {
        subs.retain(|s| s.is_normal());
    }
    subs.sort_by(|a, b| (a.order(), &a.elems).cmp(&(b.order(), &b.elems)));
    Ok(subs)
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.len() <= big.len() && small.iter().all(|e| big.binary_search(e).is_ok())
}

/// Quotient of the parent by a normal subgroup, with the projection
/// homomorphism. Cosets are indexed by their minimal representative, so
/// the identity coset is index 0.
pub fn quotient(parent: &ArcGroup, normal: &Subgroup) -> Result<(ArcGroup, GroupHom)> {
    if !same_group(parent, normal.parent()) {
        return Err(Error::ParentMismatch {
            left: parent.label().to_string(),
            right: normal.parent().label().to_string(),
        });
    }
    if !normal.is_normal() {
        return Err(Error::input(format!(
            "{} is not normal in {}",
            normal.notation(),
            parent.label()
        )));
    }
    let n = parent.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        for &h in normal.elems() {
            coset_of[parent.mul(x, h)] = idx;
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut mul = vec![0usize; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * k + j] = coset_of[parent.mul(a, b)];
        }
    }
    let label = format!("{}/{}", parent.label(), normal.notation());
    let group = FiniteGroup::from_table(label, k, mul)?.into_arc();
    let proj = GroupHom::new(parent.clone(), group.clone(), coset_of)?;
    Ok((group, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn s3() -> ArcGroup {
        FiniteGroup::symmetric(3).unwrap().into_arc()
    }

    // In the lex ordering of S3: 0 = id, 1 = (1 2), 2 = (0 1),
    // 3 = (0 1 2), 4 = (0 2 1), 5 = (0 2).
    const TRANSPOSITION: usize = 2;
    const THREE_CYCLE: usize = 3;

    #[test]
    fn empty_seed_generates_the_trivial_subgroup() {
        let g = s3();
        let (sub, iters) = Subgroup::generate(&g, &[]).unwrap();
        assert_eq!(sub.elems(), &[0]);
        assert!(iters <= g.order());
    }

    #[test]
    fn generate_matches_naive_closure() {
        let g = s3();
        let (sub, _) = Subgroup::generate(&g, &[TRANSPOSITION]).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(sub.elems(), naive_closure(&g, &[TRANSPOSITION]).as_slice());
        let (whole, _) = Subgroup::generate(&g, &[TRANSPOSITION, THREE_CYCLE]).unwrap();
        assert_eq!(whole.order(), 6);
    }

    #[test]
    fn iteration_count_is_bounded_by_group_order() {
        for g in [
            FiniteGroup::cyclic(16).unwrap().into_arc(),
            FiniteGroup::dihedral(8).unwrap().into_arc(),
            s3(),
        ] {
            for seed_elem in g.elements() {
                let (_, iters) = Subgroup::generate(&g, &[seed_elem]).unwrap();
                assert!(iters <= g.order());
            }
        }
    }

    #[test]
    fn s3_has_six_subgroups_three_normal() {
        let g = s3();
        let subs = enumerate_subgroups(&g, false).unwrap();
        assert_eq!(subs.len(), 6);
        let normals = enumerate_subgroups(&g, true).unwrap();
        assert_eq!(normals.len(), 3);
        let sizes: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }

    #[test]
    fn trivial_group_has_one_subgroup() {
        let c1 = FiniteGroup::cyclic(1).unwrap().into_arc();
        assert_eq!(enumerate_subgroups(&c1, false).unwrap().len(), 1);
    }

    #[test]
    fn meets_and_joins_in_s3() {
        let g = s3();
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        let t = Subgroup::generate(&g, &[TRANSPOSITION]).unwrap().0;
        assert_eq!(a3.meet(&t).unwrap().elems(), &[0]);
        assert!(a3.join(&a3).unwrap() == a3);
        // two distinct transpositions generate all of S3
        let t2 = Subgroup::generate(&g, &[1]).unwrap().0;
        assert_eq!(t.join(&t2).unwrap().order(), 6);
    }

    #[test]
    fn normality_by_conjugation_scan() {
        let g = s3();
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        assert!(a3.is_normal());
        let t = Subgroup::generate(&g, &[TRANSPOSITION]).unwrap().0;
        assert!(!t.is_normal());
        assert!(Subgroup::trivial(g).is_normal());
    }

    #[test]
    fn normal_closure_of_a_transposition_is_everything() {
        let g = s3();
        let t = Subgroup::generate(&g, &[TRANSPOSITION]).unwrap().0;
        assert_eq!(t.normal_closure().order(), 6);
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        assert!(a3.normal_closure() == a3);
        assert!(Subgroup::trivial(g.clone()).normal_closure() == Subgroup::trivial(g));
    }

    #[test]
    fn higgins_commutators_in_s3() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        let triv = Subgroup::trivial(g.clone());
        assert!(triv.higgins_commutator(&full).unwrap() == triv);
        assert!(full.higgins_commutator(&full).unwrap() == a3);
        assert!(a3.higgins_commutator(&full).unwrap() == a3);
    }

    #[test]
    fn centralizers() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        assert!(full.centralizer().is_trivial());
        assert!(Subgroup::trivial(g.clone()).centralizer().is_full());
        let c6 = FiniteGroup::cyclic(6).unwrap().into_arc();
        assert!(Subgroup::full(c6.clone()).centralizer().is_full());
    }

    #[test]
    fn normal_cores_in_s3() {
        let g = s3();
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        assert!(a3.normal_core() == a3);
        let t = Subgroup::generate(&g, &[TRANSPOSITION]).unwrap().0;
        assert!(t.normal_core().is_trivial());
        assert!(Subgroup::full(g.clone()).normal_core().is_full());
    }

    #[test]
    fn join_family_is_order_insensitive() {
        let g = s3();
        let subs = enumerate_subgroups(&g, false).unwrap();
        let fwd = Subgroup::join_family(&g, &subs).unwrap();
        let rev: Vec<Subgroup> = subs.iter().rev().cloned().collect();
        assert!(fwd == Subgroup::join_family(&g, &rev).unwrap());
        assert!(Subgroup::join_family(&g, &[]).unwrap().is_trivial());
    }

    #[test]
    fn quotient_of_s3_by_a3() {
        let g = s3();
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        let (q, proj) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_surjective());
        assert!(proj.kernel_subgroup() == a3);
    }

    #[test]
    fn quotient_rejects_non_normal_subgroups() {
        let g = s3();
        let t = Subgroup::generate(&g, &[TRANSPOSITION]).unwrap().0;
        assert!(quotient(&g, &t).is_err());
    }

    #[test]
    fn as_group_reindexes_faithfully() {
        let g = s3();
        let a3 = Subgroup::generate(&g, &[THREE_CYCLE]).unwrap().0;
        let (h, embed) = a3.as_group();
        assert_eq!(h.order(), 3);
        for a in h.elements() {
            for b in h.elements() {
                assert_eq!(embed.apply(h.mul(a, b)), g.mul(embed.apply(a), embed.apply(b)));
            }
        }
    }

    #[test]
    fn parent_mismatch_is_rejected() {
        let g = s3();
        let other = FiniteGroup::cyclic(6).unwrap().into_arc();
        let a = Subgroup::full(g);
        let b = Subgroup::full(other);
        assert!(matches!(a.meet(&b), Err(Error::ParentMismatch { .. })));
    }

    #[test]
    fn join_is_the_least_upper_bound() {
        for g in [s3(), FiniteGroup::dihedral(4).unwrap().into_arc()] {
            let subs = enumerate_subgroups(&g, false).unwrap();
            for a in &subs {
                for b in &subs {
                    let j = a.join(b).unwrap();
                    assert!(j.contains_all(a) && j.contains_all(b));
                    for u in &subs {
                        if u.contains_all(a) && u.contains_all(b) {
                            assert!(u.contains_all(&j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn binary_joins_agree_with_family_joins() {
        let g = s3();
        let subs = enumerate_subgroups(&g, false).unwrap();
        for a in &subs {
            for b in &subs {
                for c in &subs {
                    let left = a.join(b).unwrap().join(c).unwrap();
                    let right = a.join(&b.join(c).unwrap()).unwrap();
                    assert!(left == right);
                    let family =
                        Subgroup::join_family(&g, &[a.clone(), b.clone(), c.clone()]).unwrap();
                    assert!(left == family);
                }
            }
        }
    }

    #[test]
    fn normal_core_equals_filtered_maximum() {
        // the unique maximum of {N normal in X : N ⊆ S}, via the lattice
        for g in [s3(), FiniteGroup::dihedral(4).unwrap().into_arc()] {
            let all = enumerate_subgroups(&g, false).unwrap();
            let normals = enumerate_subgroups(&g, true).unwrap();
            for s in &all {
                let best = normals
                    .iter()
                    .filter(|n| s.contains_all(n))
                    .max_by_key(|n| n.order())
                    .unwrap();
                assert!(s.normal_core() == *best);
            }
        }
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::group::FiniteGroup;
    use proptest::prelude::*;

    fn groups() -> Vec<ArcGroup> {
        vec![
            FiniteGroup::symmetric(3).unwrap().into_arc(),
            FiniteGroup::dihedral(4).unwrap().into_arc(),
            FiniteGroup::cyclic(12).unwrap().into_arc(),
            FiniteGroup::quaternion8().into_arc(),
        ]
    }

    proptest! {
        #[test]
        fn generate_agrees_with_the_naive_oracle(
            pick in 0usize..4,
            seed in proptest::collection::vec(0usize..12, 0..4),
        ) {
            let g = &groups()[pick];
            let seed: Vec<usize> = seed.into_iter().filter(|&e| e < g.order()).collect();
            let (sub, iterations) = Subgroup::generate(g, &seed).unwrap();
            let oracle = naive_closure(g, &seed);
            prop_assert_eq!(sub.elems(), oracle.as_slice());
            prop_assert!(iterations <= g.order());
        }

        #[test]
        fn join_is_commutative_and_bounded(
            pick in 0usize..4,
            a in proptest::collection::vec(0usize..12, 0..3),
            b in proptest::collection::vec(0usize..12, 0..3),
        ) {
            let g = &groups()[pick];
            let a: Vec<usize> = a.into_iter().filter(|&e| e < g.order()).collect();
            let b: Vec<usize> = b.into_iter().filter(|&e| e < g.order()).collect();
            let ha = Subgroup::generate(g, &a).unwrap().0;
            let hb = Subgroup::generate(g, &b).unwrap().0;
            let ab = ha.join(&hb).unwrap();
            prop_assert!(ab == hb.join(&ha).unwrap());
            prop_assert!(ab.contains_all(&ha) && ab.contains_all(&hb));
            prop_assert!(ha.meet(&hb).unwrap().order() <= ha.order().min(hb.order()));
        }
    }
}
