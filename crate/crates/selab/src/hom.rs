//! Group homomorphisms, their enumeration, and direct products.
//!
//! Enumeration works by backtracking over images of a greedily chosen
//! generating sequence. Partial assignments are closed under
//! multiplication as they grow, so inconsistent branches die early and
//! every map that survives to a leaf is a verified homomorphism.


use crate::error::{Error, Result};
use crate::group::{same_group, ArcGroup, FiniteGroup};
use crate::subgroup::Subgroup;

/// Default bound on the domain order for [`hom_enumerate`].
pub const DEFAULT_HOM_DOMAIN_BOUND: usize = 12;

#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    dom: ArcGroup,
    cod: ArcGroup,
    map: Vec<usize>,
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupHom({} -> {}, {:?})", self.dom.label(), self.cod.label(), self.map)
    }
}

impl GroupHom {
    /// Build a homomorphism, validating unit preservation and
    /// multiplicativity over the whole table.
    pub fn new(dom: ArcGroup, cod: ArcGroup, map: Vec<usize>) -> Result<Self> {
        match is_homomorphism(&map, &dom, &cod)? {
            true => Ok(GroupHom { dom, cod, map }),
            false => Err(Error::InvalidHom(format!(
                "map {:?} from {} to {} is not multiplicative",
                map,
                dom.label(),
                cod.label()
            ))),
        }
    }

    pub fn identity(g: &ArcGroup) -> Self {
        GroupHom { dom: g.clone(), cod: g.clone(), map: g.elements().collect() }
    }

    /// The zero morphism sending everything to the identity.
    pub fn trivial(dom: &ArcGroup, cod: &ArcGroup) -> Self {
        GroupHom { dom: dom.clone(), cod: cod.clone(), map: vec![0; dom.order()] }
    }

    pub(crate) fn new_unchecked(dom: ArcGroup, cod: ArcGroup, map: Vec<usize>) -> Self {
        debug_assert!(matches!(is_homomorphism(&map, &dom, &cod), Ok(true)));
        GroupHom { dom, cod, map }
    }

    pub fn dom(&self) -> &ArcGroup {
        &self.dom
    }

    pub fn cod(&self) -> &ArcGroup {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self ∘ inner`, applying `inner` first.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if !same_group(&inner.cod, &self.dom) {
            return Err(Error::ParentMismatch {
                left: inner.cod.label().to_string(),
                right: self.dom.label().to_string(),
            });
        }
        let map = inner.map.iter().map(|&a| self.map[a]).collect();
        Ok(GroupHom { dom: inner.dom.clone(), cod: self.cod.clone(), map })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.order() == self.cod.order() && self.is_injective()
    }

    pub fn image_subgroup(&self) -> Subgroup {
        let mut elems: Vec<usize> = self.map.clone();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::new(self.cod.clone(), elems).expect("image of a homomorphism is a subgroup")
    }

    pub fn kernel_subgroup(&self) -> Subgroup {
        let elems: Vec<usize> = self.dom.elements().filter(|&a| self.map[a] == 0).collect();
        Subgroup::new(self.dom.clone(), elems).expect("kernel of a homomorphism is a subgroup")
    }
}

/// Decide whether `map` is a homomorphism from `dom` to `cod`.
pub fn is_homomorphism(map: &[usize], dom: &ArcGroup, cod: &ArcGroup) -> Result<bool> {
    if map.len() != dom.order() {
        return Err(Error::input(format!(
            "map has length {}, domain has order {}",
            map.len(),
            dom.order()
        )));
    }
    if let Some(&v) = map.iter().find(|&&v| v >= cod.order()) {
        return Err(Error::input(format!("map value {v} out of range for codomain")));
    }
    if map[0] != 0 {
        return Ok(false);
    }
    for a in dom.elements() {
        for b in dom.elements() {
            if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A bijective homomorphism with its inverse cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupIso {
    hom: GroupHom,
    inverse: Vec<usize>,
}

impl GroupIso {
    pub fn new(hom: GroupHom) -> Result<Self> {
        if !hom.is_bijective() {
            return Err(Error::InvalidHom("not a bijection".into()));
        }
        let mut inverse = vec![0usize; hom.cod.order()];
        for a in hom.dom.elements() {
            inverse[hom.map[a]] = a;
        }
        Ok(GroupIso { hom, inverse })
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.hom.map[a]
    }

    #[inline]
    pub fn apply_inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn inverse_hom(&self) -> GroupHom {
        GroupHom::new_unchecked(self.hom.cod.clone(), self.hom.dom.clone(), self.inverse.clone())
    }
}

// ----- direct products -----

pub struct DirectProduct {
    pub group: ArcGroup,
    pub inj_left: GroupHom,
    pub inj_right: GroupHom,
    pub proj_left: GroupHom,
    pub proj_right: GroupHom,
}

/// Componentwise product with carrier index `x * |Y| + y`.
pub fn direct_product(x: &ArcGroup, y: &ArcGroup) -> DirectProduct {
    let (n, m) = (x.order(), y.order());
    let order = n * m;
    let idx = |a: usize, b: usize| a * m + b;
    let mut mul = vec![0usize; order * order];
    for a in 0..n {
        for b in 0..m {
            for c in 0..n {
                for d in 0..m {
                    mul[idx(a, b) * order + idx(c, d)] = idx(x.mul(a, c), y.mul(b, d));
                }
            }
        }
    }
    let label = format!("{}x{}", x.label(), y.label());
    let group = FiniteGroup::from_table(label, order, mul)
        .expect("direct product of groups is a group")
        .into_arc();
    let inj_left =
        GroupHom::new_unchecked(x.clone(), group.clone(), (0..n).map(|a| idx(a, 0)).collect());
    let inj_right =
        GroupHom::new_unchecked(y.clone(), group.clone(), (0..m).map(|b| idx(0, b)).collect());
    let proj_left =
        GroupHom::new_unchecked(group.clone(), x.clone(), (0..order).map(|p| p / m).collect());
    let proj_right =
        GroupHom::new_unchecked(group.clone(), y.clone(), (0..order).map(|p| p % m).collect());
    DirectProduct { group, inj_left, inj_right, proj_left, proj_right }
}

// ----- backtracking search over generator images -----

/// Pick a generating sequence greedily: repeatedly adjoin the smallest
/// element outside the closure of what was picked so far.
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closed = vec![false; g.order()];
    closed[0] = true;
    let mut members = vec![0usize];
    while let Some(next) = (0..g.order()).find(|&a| !closed[a]) {
        gens.push(next);
        // close members ∪ {next} under multiplication
        let mut queue = vec![next];
        closed[next] = true;
        members.push(next);
        while let Some(w) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let e = members[i];
                for p in [g.mul(w, e), g.mul(e, w)] {
                    if !closed[p] {
                        closed[p] = true;
                        members.push(p);
                        queue.push(p);
                    }
                }
                i += 1;
            }
        }
    }
    gens
}

pub(crate) struct MapSearch<'a> {
    pub dom: &'a ArcGroup,
    pub cod: &'a ArcGroup,
    pub bijective: bool,
    /// Pre-assigned images, e.g. a section that must be respected.
    pub seed: Vec<(usize, usize)>,
    /// Extra per-element restriction on candidate images.
    pub restrict: Option<Box<dyn Fn(usize, usize) -> bool + 'a>>,
    /// Stop once this many maps have been found.
    pub stop_after: Option<usize>,
}

struct SearchState<'a> {
    dom: &'a FiniteGroup,
    cod: &'a FiniteGroup,
    bijective: bool,
    map: Vec<usize>,
    assigned: Vec<bool>,
    members: Vec<usize>,
    used: Vec<bool>,
    dom_orders: Vec<usize>,
    cod_orders: Vec<usize>,
    found: Vec<Vec<usize>>,
    stop_after: Option<usize>,
}

impl SearchState<'_> {
    /// Close the partial map over products with `queue` as the frontier.
    /// Leaves any partial additions on `members` for the caller to roll
    /// back; returns false on conflict.
    fn extend_closure(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(w) = queue.pop() {
            let mut i = 0;
            while i < self.members.len() {
                let e = self.members[i];
                for (p, q) in [
                    (self.dom.mul(w, e), self.cod.mul(self.map[w], self.map[e])),
                    (self.dom.mul(e, w), self.cod.mul(self.map[e], self.map[w])),
                ] {
                    if self.assigned[p] {
                        if self.map[p] != q {
                            return false;
                        }
                    } else {
                        if self.bijective {
                            if self.used[q] {
                                return false;
                            }
                            self.used[q] = true;
                        }
                        self.assigned[p] = true;
                        self.map[p] = q;
                        self.members.push(p);
                        queue.push(p);
                    }
                }
                i += 1;
            }
        }
        true
    }

    fn rollback(&mut self, keep: usize) {
        while self.members.len() > keep {
            let e = self.members.pop().unwrap();
            self.assigned[e] = false;
            if self.bijective {
                self.used[self.map[e]] = false;
            }
        }
    }

    fn recurse(&mut self, restrict: Option<&(dyn Fn(usize, usize) -> bool + '_)>) {
        if let Some(limit) = self.stop_after {
            if self.found.len() >= limit {
                return;
            }
        }
        let Some(gen) = (0..self.dom.order()).find(|&a| !self.assigned[a]) else {
            self.found.push(self.map.clone());
            return;
        };
        let keep = self.members.len();
        for img in 0..self.cod.order() {
            let div_ok = if self.bijective {
                self.cod_orders[img] == self.dom_orders[gen]
            } else {
                self.dom_orders[gen].is_multiple_of(self.cod_orders[img])
            };
            if !div_ok || (self.bijective && self.used[img]) {
                continue;
            }
            if let Some(r) = restrict {
                if !r(gen, img) {
                    continue;
                }
            }
            self.assigned[gen] = true;
            self.map[gen] = img;
            self.members.push(gen);
            if self.bijective {
                self.used[img] = true;
            }
            if self.extend_closure(vec![gen]) {
                self.recurse(restrict);
            }
            self.rollback(keep);
        }
    }
}

impl MapSearch<'_> {
    /// All complete multiplicative maps consistent with the constraints,
    /// sorted lexicographically.
    pub fn run(self) -> Vec<Vec<usize>> {
        let dom = &**self.dom;
        let cod = &**self.cod;
        if self.bijective && dom.order() != cod.order() {
            return Vec::new();
        }
        let mut st = SearchState {
            dom,
            cod,
            bijective: self.bijective,
            map: vec![0; dom.order()],
            assigned: vec![false; dom.order()],
            members: Vec::new(),
            used: vec![false; cod.order()],
            dom_orders: dom.element_orders(),
            cod_orders: cod.element_orders(),
            found: Vec::new(),
            stop_after: self.stop_after,
        };
        st.assigned[0] = true;
        st.members.push(0);
        st.used[0] = true;
        let mut frontier = Vec::new();
        for &(a, v) in &self.seed {
            if st.assigned[a] {
                if st.map[a] != v {
                    return Vec::new();
                }
                continue;
            }
            if st.bijective && st.used[v] {
                return Vec::new();
            }
            st.assigned[a] = true;
            st.map[a] = v;
            st.members.push(a);
            if st.bijective {
                st.used[v] = true;
            }
            frontier.push(a);
        }
        if !st.extend_closure(frontier) {
            return Vec::new();
        }
        st.recurse(self.restrict.as_deref());
        let mut found = st.found;
        found.sort_unstable();
        found
    }
}

/// Enumerate every homomorphism from `dom` to `cod`, in lexicographic
/// order of the underlying maps.
pub fn hom_enumerate(dom: &ArcGroup, cod: &ArcGroup) -> Result<Vec<GroupHom>> {
    hom_enumerate_bounded(dom, cod, DEFAULT_HOM_DOMAIN_BOUND)
}

pub fn hom_enumerate_bounded(
    dom: &ArcGroup,
    cod: &ArcGroup,
    max_domain: usize,
) -> Result<Vec<GroupHom>> {
    if dom.order() > max_domain {
        return Err(Error::capacity("hom_enumerate domain order", dom.order(), max_domain));
    }
    let maps = MapSearch {
        dom,
        cod,
        bijective: false,
        seed: Vec::new(),
        restrict: None,
        stop_after: None,
    }
    .run();
    Ok(maps
        .into_iter()
        .map(|map| GroupHom::new_unchecked(dom.clone(), cod.clone(), map))
        .collect())
}

/// Brute-force isomorphism test (stops at the first hit).
pub fn are_isomorphic(a: &ArcGroup, b: &ArcGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let found = MapSearch {
        dom: a,
        cod: b,
        bijective: true,
        seed: Vec::new(),
        restrict: None,
        stop_after: Some(1),
    }
    .run();
    !found.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> ArcGroup {
        g.into_arc()
    }

    #[test]
    fn identity_and_zero_maps_are_homs() {
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        assert!(is_homomorphism(GroupHom::identity(&s3).map(), &s3, &s3).unwrap());
        let c4 = arc(FiniteGroup::cyclic(4).unwrap());
        assert!(is_homomorphism(&[0, 0, 0, 0], &c4, &c4).unwrap());
    }

    #[test]
    fn inconsistent_map_is_not_a_hom() {
        // send the generator of C4 to the order-2 element: 1*1 = 2 must map to 2*2 = 0, not 2
        let c4 = arc(FiniteGroup::cyclic(4).unwrap());
        assert!(!is_homomorphism(&[0, 2, 2, 2], &c4, &c4).unwrap());
    }

    #[test]
    fn hom_counts_match_order_arithmetic() {
        let c1 = arc(FiniteGroup::cyclic(1).unwrap());
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let c3 = arc(FiniteGroup::cyclic(3).unwrap());
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        assert_eq!(hom_enumerate(&c2, &c3).unwrap().len(), 1);
        assert_eq!(hom_enumerate(&c2, &c2).unwrap().len(), 2);
        assert_eq!(hom_enumerate(&s3, &c1).unwrap().len(), 1);
        // Hom(S3, C2): trivial and the sign map
        assert_eq!(hom_enumerate(&s3, &c2).unwrap().len(), 2);
    }

    #[test]
    fn hom_enumerate_respects_capacity() {
        let d8 = arc(FiniteGroup::dihedral(8).unwrap());
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        assert!(matches!(hom_enumerate(&d8, &c2), Err(Error::Capacity { .. })));
        assert!(hom_enumerate_bounded(&d8, &c2, 16).is_ok());
    }

    /// Oracle: enumerate homs by checking all |cod|^|dom| maps.
    fn homs_brute(dom: &ArcGroup, cod: &ArcGroup) -> Vec<Vec<usize>> {
        let n = dom.order();
        let m = cod.order();
        let total = (m as u64).pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut map = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                map.push((c % m as u64) as usize);
                c /= m as u64;
            }
            if is_homomorphism(&map, dom, cod).unwrap() {
                out.push(map);
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn backtracking_agrees_with_exhaustive_scan() {
        let pairs = [
            (FiniteGroup::cyclic(6).unwrap(), FiniteGroup::symmetric(3).unwrap()),
            (FiniteGroup::symmetric(3).unwrap(), FiniteGroup::symmetric(3).unwrap()),
            (FiniteGroup::cyclic(4).unwrap(), FiniteGroup::cyclic(8).unwrap()),
            (FiniteGroup::quaternion8(), FiniteGroup::cyclic(2).unwrap()),
        ];
        for (d, c) in pairs {
            let d = arc(d);
            let c = arc(c);
            let fast: Vec<Vec<usize>> =
                hom_enumerate(&d, &c).unwrap().into_iter().map(|h| h.map().to_vec()).collect();
            assert_eq!(fast, homs_brute(&d, &c), "{} -> {}", d.label(), c.label());
        }
    }

    #[test]
    fn direct_product_acts_componentwise() {
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let p = direct_product(&s3, &c2);
        assert_eq!(p.group.order(), 12);
        // projection after injection is the identity component-wise
        let back = p.proj_left.compose(&p.inj_left).unwrap();
        assert_eq!(back.map(), GroupHom::identity(&s3).map());
    }

    #[test]
    fn product_with_trivial_group_is_the_same_table() {
        let c1 = arc(FiniteGroup::cyclic(1).unwrap());
        let d4 = arc(FiniteGroup::dihedral(4).unwrap());
        let p = direct_product(&d4, &c1);
        assert_eq!(*p.group, *d4);
    }

    #[test]
    fn hom_count_is_invariant_under_relabeling() {
        // any identity-fixing relabeling of the domain gives an
        // isomorphic group with the same homomorphism count
        let d4 = arc(FiniteGroup::dihedral(4).unwrap());
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let base_count = hom_enumerate(&d4, &c2).unwrap().len();
        let n = d4.order();
        let relabelings: Vec<Vec<usize>> = vec![
            vec![0, 7, 6, 5, 4, 3, 2, 1],
            vec![0, 3, 1, 2, 6, 7, 5, 4],
            vec![0, 2, 4, 6, 1, 3, 5, 7],
        ];
        for sigma in relabelings {
            let mut mul = vec![0usize; n * n];
            for a in 0..n {
                for b in 0..n {
                    mul[sigma[a] * n + sigma[b]] = sigma[d4.mul(a, b)];
                }
            }
            let relabeled = FiniteGroup::from_table("D4'", n, mul).unwrap().into_arc();
            assert_eq!(hom_enumerate(&relabeled, &c2).unwrap().len(), base_count);
            assert!(are_isomorphic(&relabeled, &d4));
        }
    }

    #[test]
    fn kernel_and_image_of_sign_map() {
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let sign = hom_enumerate(&s3, &c2)
            .unwrap()
            .into_iter()
            .find(|h| h.is_surjective())
            .unwrap();
        assert_eq!(sign.kernel_subgroup().order(), 3);
        assert_eq!(sign.image_subgroup().order(), 2);
    }
}
