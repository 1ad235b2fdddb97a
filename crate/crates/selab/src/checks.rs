//! Executable property checkers, one per theorem in scope. Each checker
//! is a pure function of its instance and returns a [`CheckReport`]
//! whose failing form carries a replayable witness.
//!
//! In the category of finite groups every one of these properties holds,
//! so a `fails` verdict from any checker is evidence of a bug, and the
//! suite treats it as such.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extension::{
    conjugation_extension, core_point, enumerate_subpoints, split_extension_core, PointSubobject,
    SplitExtension,
};
use crate::group::{same_group, ArcGroup};
use crate::report::{timed, CheckReport};
use crate::subgroup::{enumerate_subgroups_bounded, quotient, Subgroup};

/// Default seed for the sampled side of family checks.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Mixing rule for checks quantified over families: exhaustive when the
/// power set is small, seeded random sampling otherwise.
#[derive(Clone, Copy, Debug)]
pub struct FamilyPolicy {
    /// Enumerate all subsets when the family base has at most this many
    /// members (2^n subsets).
    pub max_exhaustive: usize,
    /// Number of sampled subsets beyond that.
    pub samples: usize,
    pub seed: u64,
}

impl Default for FamilyPolicy {
    fn default() -> Self {
        FamilyPolicy { max_exhaustive: 12, samples: 1000, seed: DEFAULT_SEED }
    }
}

impl FamilyPolicy {
    /// Subsets of `0..n` under this policy, as index vectors.
    pub fn subsets(&self, n: usize) -> Vec<Vec<usize>> {
        if n <= self.max_exhaustive {
            (0u64..(1 << n))
                .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            (0..self.samples)
                .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
                .collect()
        }
    }
}

fn subgroups_of(x: &ArcGroup) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_bounded(x, x.order(), false)
}

fn normal_subgroups_of(x: &ArcGroup) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_bounded(x, x.order(), true)
}

/// Greedily shrink a failing family: drop one member at a time as long
/// as the failure persists.
fn minimize_family<F>(mut family: Vec<Subgroup>, still_fails: F) -> Vec<Subgroup>
where
    F: Fn(&[Subgroup]) -> bool,
{
    loop {
        let mut shrunk = false;
        for i in 0..family.len() {
            let mut candidate = family.clone();
            candidate.remove(i);
            if still_fails(&candidate) {
                family = candidate;
                shrunk = true;
                break;
            }
        }
        if !shrunk {
            return family;
        }
    }
}

fn family_notation(family: &[Subgroup]) -> String {
    let parts: Vec<String> = family.iter().map(|s| s.notation()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn decomposition_preconditions(x: &ArcGroup, k: &Subgroup, b: &Subgroup) -> Result<()> {
    if !same_group(k.parent(), x) || !same_group(b.parent(), x) {
        return Err(Error::input("K and B must be subgroups of X"));
    }
    if !k.is_normal() {
        return Err(Error::input(format!("K = {} is not normal in {}", k.notation(), x.label())));
    }
    if !k.meet(b)?.is_trivial() {
        return Err(Error::input("K ∧ B must be trivial"));
    }
    if !k.join(b)?.is_full() {
        return Err(Error::input("K ∨ B must be all of X"));
    }
    Ok(())
}

/// Binary meet-join distributivity over the filter above `B`:
/// `K ∧ (U ∨ V) = (K ∧ U) ∨ (K ∧ V)` for all `U, V ⊇ B`.
pub fn check_intersections_binary(
    x: &ArcGroup,
    k: &Subgroup,
    b: &Subgroup,
) -> Result<CheckReport> {
    decomposition_preconditions(x, k, b)?;
    let above: Vec<Subgroup> =
        subgroups_of(x)?.into_iter().filter(|u| u.contains_all(b)).collect();
    let instance = format!("{} | K={} B={}", x.label(), k.notation(), b.notation());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for u in &above {
            for v in &above {
                let lhs = k.meet(&u.join(v)?)?;
                let rhs = k.meet(u)?.join(&k.meet(v)?)?;
                if lhs != rhs {
                    return Ok(Some(format!(
                        "U = {}, V = {}: K∧(U∨V) = {} but (K∧U)∨(K∧V) = {}",
                        u.notation(),
                        v.notation(),
                        lhs.notation(),
                        rhs.notation()
                    )));
                }
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("intersections_binary", instance, millis),
        Some(w) => CheckReport::fails("intersections_binary", instance, w, millis),
    })
}

/// Family distributivity `K ∧ ⋁ U_i = ⋁ (K ∧ U_i)` for the given
/// families of subgroups above `B`.
pub fn check_intersections_family(
    x: &ArcGroup,
    k: &Subgroup,
    b: &Subgroup,
    families: &[Vec<Subgroup>],
) -> Result<CheckReport> {
    decomposition_preconditions(x, k, b)?;
    for family in families {
        if let Some(u) = family.iter().find(|u| !u.contains_all(b)) {
            return Err(Error::input(format!("family member {} does not contain B", u.notation())));
        }
    }
    let instance =
        format!("{} | K={} B={} ({} families)", x.label(), k.notation(), b.notation(), families.len());
    let fails_on = |family: &[Subgroup]| -> Result<bool> {
        let lhs = k.meet(&Subgroup::join_family(x, family)?)?;
        let meets: Vec<Subgroup> =
            family.iter().map(|u| k.meet(u)).collect::<Result<_>>()?;
        Ok(lhs != Subgroup::join_family(x, &meets)?)
    };
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for family in families {
            if fails_on(family)? {
                let minimal = minimize_family(family.clone(), |f| fails_on(f).unwrap_or(false));
                return Ok(Some(format!("family {}", family_notation(&minimal))));
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("intersections_family", instance, millis),
        Some(w) => CheckReport::fails("intersections_family", instance, w, millis),
    })
}

/// Geometricity of the kernel functor on one family: if the subpoints
/// join to the whole middle group, their kernel parts join to the whole
/// kernel image.
pub fn check_kernel_geometric(
    ext: &SplitExtension,
    family: &[PointSubobject],
) -> Result<CheckReport> {
    let instance = format!("{} ({} subpoints)", ext.describe(), family.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        let carriers: Vec<Subgroup> = family.iter().map(|p| p.carrier.clone()).collect();
        let joined = Subgroup::join_family(ext.middle(), &carriers)?;
        if !joined.is_full() {
            return Ok(None); // premise is false; vacuously holds
        }
        let kernel_parts: Vec<Subgroup> = family.iter().map(|p| p.kernel_part.clone()).collect();
        let joined_kernels = Subgroup::join_family(ext.middle(), &kernel_parts)?;
        if joined_kernels == ext.kernel_image() {
            Ok(None)
        } else {
            Ok(Some(format!(
                "carriers join to the whole point but kernel parts join to {}",
                joined_kernels.notation()
            )))
        }
    });
    Ok(match outcome? {
        None => CheckReport::holds("kernel_geometric", instance, millis),
        Some(w) => CheckReport::fails("kernel_geometric", instance, w, millis),
    })
}

/// Joins of arbitrary families of normal subgroups are normal.
pub fn check_join_normals_normal(x: &ArcGroup, policy: &FamilyPolicy) -> Result<CheckReport> {
    let normals = normal_subgroups_of(x)?;
    let subsets = policy.subsets(normals.len());
    let instance = format!("{} ({} normals, {} families)", x.label(), normals.len(), subsets.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for subset in &subsets {
            let family: Vec<Subgroup> = subset.iter().map(|&i| normals[i].clone()).collect();
            let joined = Subgroup::join_family(x, &family)?;
            if !joined.is_normal() {
                let minimal = minimize_family(family, |f| {
                    Subgroup::join_family(x, f).map(|j| !j.is_normal()).unwrap_or(false)
                });
                return Ok(Some(format!("family {}", family_notation(&minimal))));
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("join_normals_normal", instance, millis),
        Some(w) => CheckReport::fails("join_normals_normal", instance, w, millis),
    })
}

/// Higgins normality criterion: `N` is normal iff `[N, X] ≤ N`, for
/// every subgroup of `x`.
pub fn check_higgins_normality(x: &ArcGroup) -> Result<CheckReport> {
    let subs = subgroups_of(x)?;
    let full = Subgroup::full(x.clone());
    let instance = format!("{} ({} subgroups)", x.label(), subs.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for n in &subs {
            let commutator = n.higgins_commutator(&full)?;
            let criterion = n.contains_all(&commutator);
            if criterion != n.is_normal() {
                return Ok(Some(format!(
                    "N = {}: [N,X] = {} gives criterion {} but normality scan says {}",
                    n.notation(),
                    commutator.notation(),
                    criterion,
                    n.is_normal()
                )));
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("higgins_normality", instance, millis),
        Some(w) => CheckReport::fails("higgins_normality", instance, w, millis),
    })
}

/// The Higgins commutator `[-, X]` preserves the join of an ascending
/// chain of normal subgroups.
pub fn check_commutator_join(x: &ArcGroup, chain: &[Subgroup]) -> Result<CheckReport> {
    for pair in chain.windows(2) {
        if !pair[1].contains_all(&pair[0]) {
            return Err(Error::input("chain must be ascending"));
        }
    }
    for n in chain {
        if !n.is_normal() {
            return Err(Error::input(format!("chain member {} is not normal", n.notation())));
        }
    }
    let instance = format!("{} (chain of {})", x.label(), chain.len());
    let full = Subgroup::full(x.clone());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        let joined = Subgroup::join_family(x, chain)?;
        let lhs = joined.higgins_commutator(&full)?;
        let commutators: Vec<Subgroup> =
            chain.iter().map(|n| n.higgins_commutator(&full)).collect::<Result<_>>()?;
        let rhs = Subgroup::join_family(x, &commutators)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(format!(
                "chain {}: [⋁N_i, X] = {} but ⋁[N_i, X] = {}",
                family_notation(chain),
                lhs.notation(),
                rhs.notation()
            )))
        }
    });
    Ok(match outcome? {
        None => CheckReport::holds("commutator_join", instance, millis),
        Some(w) => CheckReport::fails("commutator_join", instance, w, millis),
    })
}

/// Three subobjects lemma for ordered triples of normal subgroups:
/// `[K, [L, M]] ≤ [M, [K, L]] ∨ [L, [M, K]]`.
pub fn check_three_subobjects(x: &ArcGroup) -> Result<CheckReport> {
    let normals = normal_subgroups_of(x)?;
    let instance = format!("{} ({} normals)", x.label(), normals.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for k in &normals {
            for l in &normals {
                for m in &normals {
                    let lhs = k.higgins_commutator(&l.higgins_commutator(m)?)?;
                    let rhs = m
                        .higgins_commutator(&k.higgins_commutator(l)?)?
                        .join(&l.higgins_commutator(&m.higgins_commutator(k)?)?)?;
                    if !rhs.contains_all(&lhs) {
                        return Ok(Some(format!(
                            "K = {}, L = {}, M = {}: [K,[L,M]] = {} escapes {}",
                            k.notation(),
                            l.notation(),
                            m.notation(),
                            lhs.notation(),
                            rhs.notation()
                        )));
                    }
                }
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("three_subobjects", instance, millis),
        Some(w) => CheckReport::fails("three_subobjects", instance, w, millis),
    })
}

/// The Galois adjunction of the core: for every subpoint `U` and every
/// subgroup `S` of the kernel group,
/// `U ∧ κ(X) ≤ κ(S)  ⟺  U ≤ core-point(S)`.
pub fn check_core_adjunction(ext: &SplitExtension) -> Result<CheckReport> {
    let subpoints = enumerate_subpoints(ext)?;
    let subgroups = subgroups_of(ext.kernel())?;
    let instance = format!(
        "{} ({} subpoints x {} subgroups)",
        ext.describe(),
        subpoints.len(),
        subgroups.len()
    );
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for s in &subgroups {
            let kappa_s = ext.push_kernel_subgroup(s)?;
            let core = core_point(s, ext)?;
            for sp in &subpoints {
                let left = kappa_s.contains_all(&sp.kernel_part);
                let right = core.contains_all(&sp.carrier);
                if left != right {
                    return Ok(Some(format!(
                        "S = {}, U = {}: kernel-part inclusion is {} but core-point inclusion is {}",
                        s.notation(),
                        sp.carrier.notation(),
                        left,
                        right
                    )));
                }
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("core_adjunction", instance, millis),
        Some(w) => CheckReport::fails("core_adjunction", instance, w, millis),
    })
}

/// With `N` the normal core of `S ≤ X`: the quotient square of
/// `S → X` by `N` is a pullback, the induced map `S/N → X/N` is
/// injective, and its image has trivial normal core.
pub fn check_normal_core_pullback(s: &Subgroup) -> Result<CheckReport> {
    let x = s.parent().clone();
    let instance = format!("{} | S={}", x.label(), s.notation());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        let n = s.normal_core();
        let (x_mod_n, r) = quotient(&x, &n)?;
        let (s_group, s_embed) = s.as_group();
        let n_in_s = Subgroup::new(
            s_group.clone(),
            n.elems().iter().map(|&e| s.index_of(e).expect("N ≤ S")).collect(),
        )?;
        let (s_mod_n, q) = quotient(&s_group, &n_in_s)?;
        // induced monomorphism s̄ : S/N → X/N on coset representatives
        let mut s_bar_map = vec![usize::MAX; s_mod_n.order()];
        for i in s_group.elements() {
            s_bar_map[q.apply(i)] = r.apply(s_embed.apply(i));
        }
        let s_bar = crate::hom::GroupHom::new(s_mod_n.clone(), x_mod_n.clone(), s_bar_map)?;
        if !s_bar.is_injective() {
            return Ok(Some("induced map S/N → X/N is not injective".to_string()));
        }
        // pullback comparison: S → S/N ×_{X/N} X must be a bijection
        let mut fibre_size = 0usize;
        for c in s_mod_n.elements() {
            for e in x.elements() {
                if s_bar.apply(c) == r.apply(e) {
                    fibre_size += 1;
                }
            }
        }
        if fibre_size != s.order() {
            return Ok(Some(format!(
                "pullback of S/N → X/N ← X has {} elements, S has {}",
                fibre_size,
                s.order()
            )));
        }
        let image = s_bar.image_subgroup();
        let image_core = image.normal_core();
        if !image_core.is_trivial() {
            return Ok(Some(format!(
                "image of S/N in X/N has nontrivial normal core {}",
                image_core.notation()
            )));
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("normal_core_pullback", instance, millis),
        Some(w) => CheckReport::fails("normal_core_pullback", instance, w, millis),
    })
}

/// Clot criterion: the conjugation split extension of `X` restricts to a
/// split extension with kernel `N` exactly when `N` is normal.
pub fn check_clots(n: &Subgroup) -> Result<CheckReport> {
    let ext = conjugation_extension(n.parent());
    check_clots_against(&ext, n)
}

/// Same as [`check_clots`] with the conjugation extension built once by
/// the caller.
pub fn check_clots_against(ext: &SplitExtension, n: &Subgroup) -> Result<CheckReport> {
    let x = n.parent().clone();
    if !same_group(&x, ext.kernel()) {
        return Err(Error::input("extension must be the conjugation extension of N's parent"));
    }
    let instance = format!("{} | N={}", x.label(), n.notation());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        let mut seed: Vec<usize> = n.elems().iter().map(|&e| ext.kappa().apply(e)).collect();
        seed.extend(x.elements().map(|e| ext.beta().apply(e)));
        let restricted = Subgroup::generate(ext.middle(), &seed)?.0;
        let kernel_part = restricted.meet(&ext.kernel_image())?;
        let kappa_n = ext.push_kernel_subgroup(n)?;
        let restricts = kernel_part == kappa_n;
        if restricts == n.is_normal() {
            Ok(None)
        } else {
            Ok(Some(format!(
                "restriction meets the kernel in {} while normality is {}",
                kernel_part.notation(),
                n.is_normal()
            )))
        }
    });
    Ok(match outcome? {
        None => CheckReport::holds("clots", instance, millis),
        Some(w) => CheckReport::fails("clots", instance, w, millis),
    })
}

/// Terminality of split extension cores over one extension: every
/// subpoint whose kernel part lands in `κ(s)` factors through the core,
/// and the core embeddings are injective.
pub fn check_core_terminality(ext: &SplitExtension) -> Result<CheckReport> {
    let subpoints = enumerate_subpoints(ext)?;
    let subgroups = subgroups_of(ext.kernel())?;
    let act = crate::extension::action_of_split_extension(ext)?;
    let instance = format!("{} ({} kernel subgroups)", ext.describe(), subgroups.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for s in &subgroups {
            let core = split_extension_core(s, ext)?;
            if !core.kernel_embedding.is_injective() || !core.middle_embedding.is_injective() {
                return Ok(Some(format!("core embeddings of s = {} not injective", s.notation())));
            }
            if !s.contains_all(&core.kernel_sub) {
                return Ok(Some(format!("core kernel escapes s = {}", s.notation())));
            }
            if !act.leaves_invariant(&core.kernel_sub) {
                return Ok(Some(format!("core kernel of s = {} is not invariant", s.notation())));
            }
            if let Some(w) = crate::extension::terminality_witness(s, ext, &subpoints)? {
                return Ok(Some(format!("s = {}: {}", s.notation(), w)));
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("core_terminality", instance, millis),
        Some(w) => CheckReport::fails("core_terminality", instance, w, millis),
    })
}

/// Kernel geometricity over every subpoint family under the policy,
/// aggregated into one report.
pub fn check_kernel_geometric_all(
    ext: &SplitExtension,
    policy: &FamilyPolicy,
) -> Result<CheckReport> {
    let families = subpoint_families(ext, policy)?;
    let instance = format!("{} ({} families)", ext.describe(), families.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for family in &families {
            let report = check_kernel_geometric(ext, family)?;
            if let Some(w) = report.witness {
                return Ok(Some(w));
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("kernel_geometric", instance, millis),
        Some(w) => CheckReport::fails("kernel_geometric", instance, w, millis),
    })
}

/// Commutator-join preservation over every ascending chain of normal
/// subgroups, aggregated into one report.
pub fn check_commutator_join_all(x: &ArcGroup) -> Result<CheckReport> {
    let chains = normal_chains(x)?;
    let instance = format!("{} ({} chains)", x.label(), chains.len());
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for chain in &chains {
            let report = check_commutator_join(x, chain)?;
            if let Some(w) = report.witness {
                return Ok(Some(w));
            }
        }
        Ok(None)
    });
    Ok(match outcome? {
        None => CheckReport::holds("commutator_join", instance, millis),
        Some(w) => CheckReport::fails("commutator_join", instance, w, millis),
    })
}

// ----- instance drivers shared by the suite and the script surface -----

/// All decompositions `(K, B)` of `x` with `K` normal, `K ∧ B = 0` and
/// `K ∨ B = X`.
pub fn intersection_decompositions(x: &ArcGroup) -> Result<Vec<(Subgroup, Subgroup)>> {
    let subs = subgroups_of(x)?;
    let normals: Vec<Subgroup> = subs.iter().filter(|s| s.is_normal()).cloned().collect();
    let mut out = Vec::new();
    for k in &normals {
        for b in &subs {
            if k.meet(b)?.is_trivial() && k.join(b)?.is_full() {
                out.push((k.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// All ascending chains (of length ≥ 1) in the normal subgroup lattice.
pub fn normal_chains(x: &ArcGroup) -> Result<Vec<Vec<Subgroup>>> {
    let normals = normal_subgroups_of(x)?;
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..normals.len()).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("chains are nonempty");
        for (j, candidate) in normals.iter().enumerate() {
            if j != last
                && candidate.order() > normals[last].order()
                && candidate.contains_all(&normals[last])
            {
                let mut extended = chain.clone();
                extended.push(j);
                stack.push(extended);
            }
        }
        chains.push(chain);
    }
    Ok(chains
        .into_iter()
        .map(|chain| chain.into_iter().map(|i| normals[i].clone()).collect())
        .collect())
}

/// Families of subgroups above `b` for the family-distributivity check,
/// under the given policy.
pub fn families_above(
    x: &ArcGroup,
    b: &Subgroup,
    policy: &FamilyPolicy,
) -> Result<Vec<Vec<Subgroup>>> {
    let above: Vec<Subgroup> =
        subgroups_of(x)?.into_iter().filter(|u| u.contains_all(b)).collect();
    Ok(policy
        .subsets(above.len())
        .into_iter()
        .map(|subset| subset.into_iter().map(|i| above[i].clone()).collect())
        .collect())
}

/// Subpoint families for the kernel-geometricity check; exhaustive only
/// when the subpoint count keeps the power set at or below `2^max`.
pub fn subpoint_families(
    ext: &SplitExtension,
    policy: &FamilyPolicy,
) -> Result<Vec<Vec<PointSubobject>>> {
    let subpoints = enumerate_subpoints(ext)?;
    Ok(policy
        .subsets(subpoints.len())
        .into_iter()
        .map(|subset| subset.into_iter().map(|i| subpoints[i].clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::enumerate_actions;
    use crate::extension::semidirect_product;
    use crate::group::FiniteGroup;
    use crate::report::Verdict;

    fn arc(g: FiniteGroup) -> ArcGroup {
        g.into_arc()
    }

    fn s3() -> ArcGroup {
        arc(FiniteGroup::symmetric(3).unwrap())
    }

    fn holds(report: CheckReport) {
        assert_eq!(report.verdict, Verdict::Holds, "{:?}", report.witness);
    }

    #[test]
    fn intersections_binary_on_s3_decomposition() {
        let x = s3();
        for (k, b) in intersection_decompositions(&x).unwrap() {
            holds(check_intersections_binary(&x, &k, &b).unwrap());
        }
    }

    #[test]
    fn intersections_binary_rejects_bad_preconditions() {
        let x = s3();
        let subs = subgroups_of(&x).unwrap();
        let t = subs.iter().find(|s| s.order() == 2).unwrap();
        assert!(check_intersections_binary(&x, t, t).is_err());
    }

    #[test]
    fn intersections_family_exhaustive_on_s3() {
        let x = s3();
        let policy = FamilyPolicy::default();
        for (k, b) in intersection_decompositions(&x).unwrap() {
            let families = families_above(&x, &b, &policy).unwrap();
            holds(check_intersections_family(&x, &k, &b, &families).unwrap());
        }
    }

    #[test]
    fn empty_and_singleton_families_hold_trivially() {
        let x = s3();
        let (k, b) = intersection_decompositions(&x)
            .unwrap()
            .into_iter()
            .find(|(k, _)| k.order() == 3)
            .unwrap();
        let families = vec![vec![], vec![Subgroup::full(x.clone())]];
        holds(check_intersections_family(&x, &k, &b, &families).unwrap());
    }

    #[test]
    fn kernel_geometricity_families() {
        let acts = enumerate_actions(&arc(FiniteGroup::cyclic(2).unwrap()), &arc(FiniteGroup::cyclic(3).unwrap())).unwrap();
        let ext = semidirect_product(&acts[1]);
        for family in subpoint_families(&ext, &FamilyPolicy::default()).unwrap() {
            holds(check_kernel_geometric(&ext, &family).unwrap());
        }
    }

    #[test]
    fn geometricity_is_vacuous_when_the_premise_fails() {
        let acts = enumerate_actions(&arc(FiniteGroup::cyclic(2).unwrap()), &arc(FiniteGroup::cyclic(3).unwrap())).unwrap();
        let ext = semidirect_product(&acts[1]);
        let subpoints = enumerate_subpoints(&ext).unwrap();
        let bottom_only =
            vec![subpoints.iter().find(|p| p.kernel_part.is_trivial()).unwrap().clone()];
        holds(check_kernel_geometric(&ext, &bottom_only).unwrap());
    }

    #[test]
    fn join_normals_and_higgins_on_small_groups() {
        for g in [
            s3(),
            arc(FiniteGroup::quaternion8()),
            arc(FiniteGroup::dihedral(4).unwrap()),
            arc(FiniteGroup::cyclic(1).unwrap()),
            arc(FiniteGroup::cyclic(12).unwrap()),
        ] {
            holds(check_join_normals_normal(&g, &FamilyPolicy::default()).unwrap());
            holds(check_higgins_normality(&g).unwrap());
        }
    }

    #[test]
    fn commutator_join_on_chains() {
        for g in [s3(), arc(FiniteGroup::dihedral(4).unwrap())] {
            for chain in normal_chains(&g).unwrap() {
                holds(check_commutator_join(&g, &chain).unwrap());
            }
        }
    }

    #[test]
    fn commutator_join_rejects_non_chains() {
        let g = s3();
        let subs = subgroups_of(&g).unwrap();
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap().clone();
        let t = subs.iter().find(|s| s.order() == 2).unwrap().clone();
        assert!(check_commutator_join(&g, &[a3, t]).is_err());
    }

    #[test]
    fn three_subobjects_on_s3_and_s4() {
        holds(check_three_subobjects(&s3()).unwrap());
        holds(check_three_subobjects(&arc(FiniteGroup::symmetric(4).unwrap())).unwrap());
        // abelian: all commutators are trivial
        holds(check_three_subobjects(&arc(FiniteGroup::cyclic(8).unwrap())).unwrap());
    }

    #[test]
    fn core_adjunction_on_small_extensions() {
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let c3 = arc(FiniteGroup::cyclic(3).unwrap());
        for act in enumerate_actions(&c2, &c3).unwrap() {
            holds(check_core_adjunction(&semidirect_product(&act)).unwrap());
        }
        holds(check_core_adjunction(&conjugation_extension(&s3())).unwrap());
    }

    #[test]
    fn normal_core_pullback_cases() {
        let x = s3();
        for s in subgroups_of(&x).unwrap() {
            holds(check_normal_core_pullback(&s).unwrap());
        }
    }

    #[test]
    fn clot_restriction_matches_normality() {
        let x = s3();
        let ext = conjugation_extension(&x);
        for n in subgroups_of(&x).unwrap() {
            holds(check_clots_against(&ext, &n).unwrap());
        }
    }

    #[test]
    fn core_terminality_on_the_inversion_extension() {
        let c2 = arc(FiniteGroup::cyclic(2).unwrap());
        let c3 = arc(FiniteGroup::cyclic(3).unwrap());
        for act in enumerate_actions(&c2, &c3).unwrap() {
            holds(check_core_terminality(&semidirect_product(&act)).unwrap());
        }
    }

    #[test]
    fn family_policy_switches_to_sampling() {
        let policy = FamilyPolicy { max_exhaustive: 3, samples: 17, seed: 1 };
        assert_eq!(policy.subsets(3).len(), 8);
        assert_eq!(policy.subsets(5).len(), 17);
    }
}
