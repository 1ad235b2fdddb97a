//! Split extensions (points over a base) and their cores.
//!
//! A split extension is a triple of homomorphisms `κ: X → A`,
//! `α: A → B`, `β: B → A` with `α∘β = id`, `κ` the kernel embedding of
//! `α`. Constructing one validates all of that, plus the lattice facts
//! `κ(X) ∧ β(B) = 0` and `κ(X) ∨ β(B) = A`.

use crate::action::BAction;
use crate::error::{Error, Result};
use crate::group::{same_group, ArcGroup, FiniteGroup};
use crate::hom::{GroupHom, GroupIso, MapSearch};
use crate::subgroup::{enumerate_subgroups_bounded, Subgroup, DEFAULT_SUBGROUP_ENUM_BOUND};

#[derive(Clone, PartialEq, Eq)]
pub struct SplitExtension {
    kernel: ArcGroup,
    middle: ArcGroup,
    base: ArcGroup,
    kappa: GroupHom,
    alpha: GroupHom,
    beta: GroupHom,
}

impl std::fmt::Debug for SplitExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SplitExtension({} -> {} <=> {})",
            self.kernel.label(),
            self.middle.label(),
            self.base.label()
        )
    }
}

impl SplitExtension {
    pub fn new(
        kernel: ArcGroup,
        middle: ArcGroup,
        base: ArcGroup,
        kappa: GroupHom,
        alpha: GroupHom,
        beta: GroupHom,
    ) -> Result<Self> {
        let check = |ok: bool, msg: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::input(format!("split extension invariant: {msg}")))
            }
        };
        check(same_group(kappa.dom(), &kernel), "kappa must start at the kernel group")?;
        check(same_group(kappa.cod(), &middle), "kappa must land in the middle group")?;
        check(same_group(alpha.dom(), &middle), "alpha must start at the middle group")?;
        check(same_group(alpha.cod(), &base), "alpha must land in the base group")?;
        check(same_group(beta.dom(), &base), "beta must start at the base group")?;
        check(same_group(beta.cod(), &middle), "beta must land in the middle group")?;
        for b in base.elements() {
            check(alpha.apply(beta.apply(b)) == b, "alpha ∘ beta must be the identity")?;
        }
        check(kappa.is_injective(), "kappa must be injective")?;
        let kernel_image = kappa.image_subgroup();
        let alpha_kernel = alpha.kernel_subgroup();
        check(kernel_image == alpha_kernel, "image of kappa must equal the kernel of alpha")?;
        let base_image = beta.image_subgroup();
        check(
            kernel_image.meet(&base_image)?.is_trivial(),
            "kappa and beta images must meet trivially",
        )?;
        check(kernel_image.join(&base_image)?.is_full(), "kappa and beta images must join to A")?;
        Ok(SplitExtension { kernel, middle, base, kappa, alpha, beta })
    }

    pub fn kernel(&self) -> &ArcGroup {
        &self.kernel
    }

    pub fn middle(&self) -> &ArcGroup {
        &self.middle
    }

    pub fn base(&self) -> &ArcGroup {
        &self.base
    }

    pub fn kappa(&self) -> &GroupHom {
        &self.kappa
    }

    pub fn alpha(&self) -> &GroupHom {
        &self.alpha
    }

    pub fn beta(&self) -> &GroupHom {
        &self.beta
    }

    /// `κ(X)` as a subgroup of the middle group.
    pub fn kernel_image(&self) -> Subgroup {
        self.kappa.image_subgroup()
    }

    /// `β(B)` as a subgroup of the middle group.
    pub fn base_image(&self) -> Subgroup {
        self.beta.image_subgroup()
    }

    /// Image of a subgroup of the kernel group under `κ`.
    pub fn push_kernel_subgroup(&self, s: &Subgroup) -> Result<Subgroup> {
        if !same_group(s.parent(), &self.kernel) {
            return Err(Error::ParentMismatch {
                left: s.parent().label().to_string(),
                right: self.kernel.label().to_string(),
            });
        }
        let elems: Vec<usize> = s.elems().iter().map(|&x| self.kappa.apply(x)).collect();
        Subgroup::new(self.middle.clone(), elems)
    }

    pub fn describe(&self) -> String {
        format!(
            "{} >-> {} <=> {}",
            self.kernel.label(),
            self.middle.label(),
            self.base.label()
        )
    }

    /// Serialize as the three homomorphism maps plus the group labels.
    pub fn to_block(&self) -> String {
        let maps = |m: &[usize]| {
            m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
        };
        format!(
            "ext X={} A={} B={}\nkappa {}\nalpha {}\nbeta {}\n",
            self.kernel.label(),
            self.middle.label(),
            self.base.label(),
            maps(self.kappa.map()),
            maps(self.alpha.map()),
            maps(self.beta.map())
        )
    }

    /// Parse an extension block against the three groups it names.
    pub fn from_block(
        text: &str,
        kernel: &ArcGroup,
        middle: &ArcGroup,
        base: &ArcGroup,
    ) -> Result<Self> {
        let mut kappa = None;
        let mut alpha = None;
        let mut beta = None;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut parts = line.split_whitespace();
            let head = parts.next().unwrap_or("");
            let nums = || -> Result<Vec<usize>> {
                line.split_whitespace()
                    .skip(1)
                    .map(|tok| {
                        tok.parse()
                            .map_err(|_| Error::input(format!("bad map entry `{tok}`")))
                    })
                    .collect()
            };
            match head {
                "ext" => {}
                "kappa" => kappa = Some(nums()?),
                "alpha" => alpha = Some(nums()?),
                "beta" => beta = Some(nums()?),
                other => {
                    return Err(Error::input(format!("unexpected extension block line `{other}`")))
                }
            }
        }
        let missing = |what: &str| Error::input(format!("extension block is missing `{what}`"));
        let kappa = GroupHom::new(kernel.clone(), middle.clone(), kappa.ok_or_else(|| missing("kappa"))?)?;
        let alpha = GroupHom::new(middle.clone(), base.clone(), alpha.ok_or_else(|| missing("alpha"))?)?;
        let beta = GroupHom::new(base.clone(), middle.clone(), beta.ok_or_else(|| missing("beta"))?)?;
        SplitExtension::new(kernel.clone(), middle.clone(), base.clone(), kappa, alpha, beta)
    }
}

/// Build the semidirect product of an action: carrier `(x, b)` flattened
/// row-major as `x * |B| + b`, with `(x, b)(x', b') = (x·a(b, x'), bb')`.
pub fn semidirect_product(act: &BAction) -> SplitExtension {
    let x = act.target();
    let b = act.actor();
    let (nx, nb) = (x.order(), b.order());
    let order = nx * nb;
    let idx = |xe: usize, be: usize| xe * nb + be;
    let mut mul = vec![0usize; order * order];
    for xe in 0..nx {
        for be in 0..nb {
            for xf in 0..nx {
                for bf in 0..nb {
                    mul[idx(xe, be) * order + idx(xf, bf)] =
                        idx(x.mul(xe, act.apply(be, xf)), b.mul(be, bf));
                }
            }
        }
    }
    let label = format!("{}:{}", x.label(), b.label());
    let middle = FiniteGroup::from_table(label, order, mul)
        .expect("semidirect product of a valid action is a group")
        .into_arc();
    let kappa =
        GroupHom::new_unchecked(x.clone(), middle.clone(), (0..nx).map(|e| idx(e, 0)).collect());
    let alpha =
        GroupHom::new_unchecked(middle.clone(), b.clone(), (0..order).map(|p| p % nb).collect());
    let beta = GroupHom::new_unchecked(b.clone(), middle.clone(), (0..nb).collect());
    SplitExtension::new(x.clone(), middle, b.clone(), kappa, alpha, beta)
        .expect("semidirect product data forms a split extension")
}

/// The conjugation split extension of a group: kernel embedding
/// `x ↦ (x, 0)` into `X × X`, projection to the second factor, and the
/// diagonal as section.
pub fn conjugation_extension(x: &ArcGroup) -> SplitExtension {
    let prod = crate::hom::direct_product(x, x);
    let n = x.order();
    let diag = GroupHom::new_unchecked(
        x.clone(),
        prod.group.clone(),
        (0..n).map(|e| e * n + e).collect(),
    );
    SplitExtension::new(x.clone(), prod.group, x.clone(), prod.inj_left, prod.proj_right, diag)
        .expect("conjugation data forms a split extension")
}

/// Recover the action `a(b, x) = κ⁻¹(β(b) κ(x) β(b)⁻¹)` of a split
/// extension.
pub fn action_of_split_extension(ext: &SplitExtension) -> Result<BAction> {
    let a = &ext.middle;
    let mut kappa_inverse = vec![usize::MAX; a.order()];
    for xe in ext.kernel.elements() {
        kappa_inverse[ext.kappa.apply(xe)] = xe;
    }
    let (nb, nx) = (ext.base.order(), ext.kernel.order());
    let mut table = vec![0usize; nb * nx];
    for be in 0..nb {
        let bm = ext.beta.apply(be);
        for xe in 0..nx {
            let conj = a.mul(a.mul(bm, ext.kappa.apply(xe)), a.inv(bm));
            let pre = kappa_inverse[conj];
            if pre == usize::MAX {
                return Err(Error::input(
                    "conjugate of a kernel element left the kernel".to_string(),
                ));
            }
            table[be * nx + xe] = pre;
        }
    }
    BAction::new(ext.base.clone(), ext.kernel.clone(), table)
}

/// Rebuild the semidirect product of the recovered action, together with
/// the canonical isomorphism of points `(x, b) ↦ κ(x)·β(b)` onto the
/// original middle group.
pub fn semidirect_comparison(ext: &SplitExtension) -> Result<(SplitExtension, GroupIso)> {
    let act = action_of_split_extension(ext)?;
    let sd = semidirect_product(&act);
    let nb = ext.base.order();
    let map: Vec<usize> = (0..sd.middle.order())
        .map(|p| {
            let (xe, be) = (p / nb, p % nb);
            ext.middle.mul(ext.kappa.apply(xe), ext.beta.apply(be))
        })
        .collect();
    let iso = GroupIso::new(GroupHom::new(sd.middle.clone(), ext.middle.clone(), map)?)?;
    Ok((sd, iso))
}

/// A subobject of a point: a subgroup of the middle group that contains
/// the image of the section, paired with its kernel part `U ∧ κ(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSubobject {
    pub carrier: Subgroup,
    pub kernel_part: Subgroup,
}

/// All subgroups of the middle group containing `β(B)`, in canonical
/// order, paired with their kernel parts.
pub fn enumerate_subpoints(ext: &SplitExtension) -> Result<Vec<PointSubobject>> {
    enumerate_subpoints_bounded(ext, DEFAULT_SUBGROUP_ENUM_BOUND)
}

pub fn enumerate_subpoints_bounded(
    ext: &SplitExtension,
    max_order: usize,
) -> Result<Vec<PointSubobject>> {
    let beta_image = ext.base_image();
    let kernel_image = ext.kernel_image();
    let subs = enumerate_subgroups_bounded(&ext.middle, max_order, false)?;
    let mut out = Vec::new();
    for u in subs {
        if u.contains_all(&beta_image) {
            let kernel_part = u.meet(&kernel_image)?;
            out.push(PointSubobject { carrier: u, kernel_part });
        }
    }
    Ok(out)
}

/// The split extension core of `s` (a subgroup of the kernel group)
/// relative to `ext`, with the two comparison embeddings.
pub struct ExtensionCore {
    /// The core split extension over the same base.
    pub core: SplitExtension,
    /// `u`: core kernel group into `s` viewed as a group.
    pub kernel_embedding: GroupHom,
    /// `v`: core middle group into the ambient middle group.
    pub middle_embedding: GroupHom,
    /// The core kernel as a subgroup of the kernel group `X`.
    pub kernel_sub: Subgroup,
    /// The core middle as a subgroup of the ambient middle group `A`.
    pub middle_sub: Subgroup,
}

/// The middle subgroup `Ā = ⟨κ(core kernel) ∪ β(B)⟩` of the core, as a
/// subgroup of `A`; the cheap form used by lattice scans.
pub fn core_point(s: &Subgroup, ext: &SplitExtension) -> Result<Subgroup> {
    let act = action_of_split_extension(ext)?;
    let xbar = act.action_core(s)?;
    let mut seed: Vec<usize> = xbar.elems().iter().map(|&e| ext.kappa.apply(e)).collect();
    seed.extend(ext.base.elements().map(|b| ext.beta.apply(b)));
    Ok(Subgroup::generate(&ext.middle, &seed)?.0)
}

pub fn split_extension_core(s: &Subgroup, ext: &SplitExtension) -> Result<ExtensionCore> {
    if !same_group(s.parent(), &ext.kernel) {
        return Err(Error::ParentMismatch {
            left: s.parent().label().to_string(),
            right: ext.kernel.label().to_string(),
        });
    }
    let act = action_of_split_extension(ext)?;
    let xbar = act.action_core(s)?;
    let mut seed: Vec<usize> = xbar.elems().iter().map(|&e| ext.kappa.apply(e)).collect();
    seed.extend(ext.base.elements().map(|b| ext.beta.apply(b)));
    let abar = Subgroup::generate(&ext.middle, &seed)?.0;

    let (xbar_group, xbar_embed) = xbar.as_group();
    let (abar_group, v) = abar.as_group();
    let kappa_bar = GroupHom::new(
        xbar_group.clone(),
        abar_group.clone(),
        xbar_group
            .elements()
            .map(|i| {
                abar.index_of(ext.kappa.apply(xbar_embed.apply(i)))
                    .expect("kappa of a core element lies in the core middle")
            })
            .collect(),
    )?;
    let alpha_bar = ext.alpha.compose(&v)?;
    let beta_bar = GroupHom::new(
        ext.base.clone(),
        abar_group.clone(),
        ext.base
            .elements()
            .map(|b| abar.index_of(ext.beta.apply(b)).expect("beta lands in the core middle"))
            .collect(),
    )?;
    let core =
        SplitExtension::new(xbar_group.clone(), abar_group, ext.base.clone(), kappa_bar, alpha_bar, beta_bar)?;
    let u = GroupHom::new(
        xbar_group,
        s.as_group().0,
        xbar
            .elems()
            .iter()
            .map(|&e| s.index_of(e).expect("core kernel is contained in s"))
            .collect(),
    )?;
    Ok(ExtensionCore {
        core,
        kernel_embedding: u,
        middle_embedding: v,
        kernel_sub: xbar,
        middle_sub: abar,
    })
}

/// Check terminality of the core of `s`: every subpoint whose kernel part
/// lies inside `κ(s)` must have its carrier inside the core middle.
/// Returns a witness description on failure.
pub fn terminality_witness(
    s: &Subgroup,
    ext: &SplitExtension,
    subpoints: &[PointSubobject],
) -> Result<Option<String>> {
    let kappa_s = ext.push_kernel_subgroup(s)?;
    let abar = core_point(s, ext)?;
    for sp in subpoints {
        if kappa_s.contains_all(&sp.kernel_part) && !abar.contains_all(&sp.carrier) {
            return Ok(Some(format!(
                "subpoint {} has kernel part {} inside kappa(s) = {} but escapes the core middle {}",
                sp.carrier.notation(),
                sp.kernel_part.notation(),
                kappa_s.notation(),
                abar.notation()
            )));
        }
    }
    Ok(None)
}

/// Present an object `X` with a normal subgroup `K` and a subgroup `B`
/// satisfying `K ∧ B = 0`, `K ∨ B = X` as a split extension of `B` by
/// `K` with middle `X`.
pub fn extension_from_decomposition(
    x: &ArcGroup,
    k: &Subgroup,
    b: &Subgroup,
) -> Result<SplitExtension> {
    if !same_group(k.parent(), x) || !same_group(b.parent(), x) {
        return Err(Error::input("decomposition subgroups must live in the ambient group"));
    }
    if !k.is_normal() {
        return Err(Error::input(format!("{} is not normal in {}", k.notation(), x.label())));
    }
    if !k.meet(b)?.is_trivial() {
        return Err(Error::input("K and B must intersect trivially"));
    }
    if !k.join(b)?.is_full() {
        return Err(Error::input("K and B must generate the whole group"));
    }
    let (k_group, kappa) = k.as_group();
    let (b_group, beta) = b.as_group();
    let mut alpha_map = Vec::with_capacity(x.order());
    for e in x.elements() {
        let j = b_group
            .elements()
            .find(|&j| k.contains(x.mul(e, x.inv(beta.apply(j)))))
            .expect("K ∨ B = X gives every element a K·B decomposition");
        alpha_map.push(j);
    }
    let alpha = GroupHom::new(x.clone(), b_group.clone(), alpha_map)?;
    SplitExtension::new(k_group, x.clone(), b_group, kappa, alpha, beta)
}

/// Change of base of a point along `f: W → Z`: the pullback middle
/// `{(a, w) : α(a) = f(w)}`, indexed in lexicographic `(a, w)` order.
pub fn pullback_point(ext: &SplitExtension, f: &GroupHom) -> Result<SplitExtension> {
    if !same_group(f.cod(), &ext.base) {
        return Err(Error::ParentMismatch {
            left: f.cod().label().to_string(),
            right: ext.base.label().to_string(),
        });
    }
    let w_group = f.dom().clone();
    let a = &ext.middle;
    let mut pairs = Vec::new();
    for ae in a.elements() {
        for we in w_group.elements() {
            if ext.alpha.apply(ae) == f.apply(we) {
                pairs.push((ae, we));
            }
        }
    }
    let order = pairs.len();
    let index_of = |pair: (usize, usize)| -> usize {
        pairs.binary_search(&pair).expect("pullback carrier is closed under multiplication")
    };
    let mut mul = vec![0usize; order * order];
    for (i, &(a1, w1)) in pairs.iter().enumerate() {
        for (j, &(a2, w2)) in pairs.iter().enumerate() {
            mul[i * order + j] = index_of((a.mul(a1, a2), w_group.mul(w1, w2)));
        }
    }
    let label = format!("pb({})", a.label());
    let middle = FiniteGroup::from_table(label, order, mul)?.into_arc();
    let kappa = GroupHom::new(
        ext.kernel.clone(),
        middle.clone(),
        ext.kernel.elements().map(|xe| index_of((ext.kappa.apply(xe), 0))).collect(),
    )?;
    let alpha =
        GroupHom::new(middle.clone(), w_group.clone(), pairs.iter().map(|&(_, we)| we).collect())?;
    let beta = GroupHom::new(
        w_group.clone(),
        middle.clone(),
        w_group.elements().map(|we| index_of((ext.beta.apply(f.apply(we)), we))).collect(),
    )?;
    SplitExtension::new(ext.kernel.clone(), middle, w_group, kappa, alpha, beta)
}

/// Binary product of two points over the same base: middle
/// `{(a1, a2) : α1(a1) = α2(a2)}` with kernel `X1 × X2`.
pub fn fibre_product(e1: &SplitExtension, e2: &SplitExtension) -> Result<SplitExtension> {
    if !same_group(&e1.base, &e2.base) {
        return Err(Error::ParentMismatch {
            left: e1.base.label().to_string(),
            right: e2.base.label().to_string(),
        });
    }
    let (a1, a2) = (&e1.middle, &e2.middle);
    let mut pairs = Vec::new();
    for x in a1.elements() {
        for y in a2.elements() {
            if e1.alpha.apply(x) == e2.alpha.apply(y) {
                pairs.push((x, y));
            }
        }
    }
    let order = pairs.len();
    let index_of = |pair: (usize, usize)| -> usize {
        pairs.binary_search(&pair).expect("fibre product carrier is closed under multiplication")
    };
    let mut mul = vec![0usize; order * order];
    for (i, &(x1, y1)) in pairs.iter().enumerate() {
        for (j, &(x2, y2)) in pairs.iter().enumerate() {
            mul[i * order + j] = index_of((a1.mul(x1, x2), a2.mul(y1, y2)));
        }
    }
    let label = format!("fp({},{})", a1.label(), a2.label());
    let middle = FiniteGroup::from_table(label, order, mul)?.into_arc();
    let kernel_prod = crate::hom::direct_product(&e1.kernel, &e2.kernel);
    let n2 = e2.kernel.order();
    let kappa = GroupHom::new(
        kernel_prod.group.clone(),
        middle.clone(),
        kernel_prod
            .group
            .elements()
            .map(|p| index_of((e1.kappa.apply(p / n2), e2.kappa.apply(p % n2))))
            .collect(),
    )?;
    let alpha = GroupHom::new(
        middle.clone(),
        e1.base.clone(),
        pairs.iter().map(|&(x, _)| e1.alpha.apply(x)).collect(),
    )?;
    let beta = GroupHom::new(
        e1.base.clone(),
        middle.clone(),
        e1.base.elements().map(|b| index_of((e1.beta.apply(b), e2.beta.apply(b)))).collect(),
    )?;
    SplitExtension::new(kernel_prod.group, middle, e1.base.clone(), kappa, alpha, beta)
}

/// The right adjoint to change of base along a split epimorphism
/// `p: E → B` with section `sec`, applied to a point over `E`.
///
/// Constructed as the split extension core of the diagonal kernel inside
/// the product of the point with its `(sec∘p)`-pullback, transported to
/// the base along `sec`.
pub fn fibrewise_right_adjoint(
    p: &GroupHom,
    sec: &GroupHom,
    ext: &SplitExtension,
) -> Result<SplitExtension> {
    if !same_group(p.dom(), &ext.base) {
        return Err(Error::input("p must start at the base of the extension"));
    }
    if !p.is_surjective() {
        return Err(Error::input("p must be a split epimorphism"));
    }
    let round = p.compose(sec)?;
    if round.map().iter().enumerate().any(|(b, &v)| b != v) {
        return Err(Error::input("sec must be a section of p"));
    }
    let f = sec.compose(p)?;
    let pulled = pullback_point(ext, &f)?;
    let prod = fibre_product(ext, &pulled)?;
    let n = ext.kernel.order();
    let diag = Subgroup::new(prod.kernel.clone(), (0..n).map(|y| y * n + y).collect())?;
    let core = split_extension_core(&diag, &prod)?;
    pullback_point(&core.core, sec)
}

/// Default bound on the source middle order for [`point_morphisms`].
pub const DEFAULT_POINT_HOM_BOUND: usize = 96;

/// Morphisms of points over a common base: homomorphisms of the middle
/// groups commuting with both split epimorphisms and sections.
pub fn point_morphisms(src: &SplitExtension, dst: &SplitExtension) -> Result<Vec<GroupHom>> {
    point_morphisms_bounded(src, dst, DEFAULT_POINT_HOM_BOUND)
}

pub fn point_morphisms_bounded(
    src: &SplitExtension,
    dst: &SplitExtension,
    max_middle: usize,
) -> Result<Vec<GroupHom>> {
    if src.middle.order() > max_middle {
        return Err(Error::capacity("point morphism domain order", src.middle.order(), max_middle));
    }
    if !same_group(&src.base, &dst.base) {
        return Err(Error::ParentMismatch {
            left: src.base.label().to_string(),
            right: dst.base.label().to_string(),
        });
    }
    let seed: Vec<(usize, usize)> =
        src.base.elements().map(|b| (src.beta.apply(b), dst.beta.apply(b))).collect();
    let src_alpha = &src.alpha;
    let dst_alpha = &dst.alpha;
    let maps = MapSearch {
        dom: &src.middle,
        cod: &dst.middle,
        bijective: false,
        seed,
        restrict: Some(Box::new(|d, c| dst_alpha.apply(c) == src_alpha.apply(d))),
        stop_after: None,
    }
    .run();
    let homs: Vec<GroupHom> = maps
        .into_iter()
        .map(|m| GroupHom::new_unchecked(src.middle.clone(), dst.middle.clone(), m))
        .collect();
    debug_assert!(homs.iter().all(|h| {
        src.base.elements().all(|b| h.apply(src.beta.apply(b)) == dst.beta.apply(b))
            && src.middle.elements().all(|a| dst.alpha.apply(h.apply(a)) == src.alpha.apply(a))
    }));
    Ok(homs)
}
