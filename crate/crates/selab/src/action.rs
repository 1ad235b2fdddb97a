//! Internal actions of one finite group on another.
//!
//! An action is stored as a full `|B| x |X|` evaluation table, validated
//! eagerly against the three action axioms. The homomorphism-to-Aut form
//! is derived on demand rather than stored.

use crate::aut::{automorphism_group_bounded, AutomorphismGroup};
use crate::error::{Error, Result};
use crate::group::{same_group, ArcGroup};
use crate::hom::{greedy_generators, hom_enumerate_bounded, GroupHom};
use crate::subgroup::Subgroup;

#[derive(Clone, PartialEq, Eq)]
pub struct BAction {
    actor: ArcGroup,
    target: ArcGroup,
    /// `table[b * |X| + x] = a(b, x)`.
    table: Vec<usize>,
}

impl std::fmt::Debug for BAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BAction({} on {})", self.actor.label(), self.target.label())
    }
}

impl BAction {
    /// Validate and wrap an action table. The three axioms:
    /// `a(b, a(b', x)) = a(bb', x)`, `a(b, xy) = a(b,x)a(b,y)`, and
    /// `a(e, x) = x`.
    pub fn new(actor: ArcGroup, target: ArcGroup, table: Vec<usize>) -> Result<Self> {
        let (nb, nx) = (actor.order(), target.order());
        if table.len() != nb * nx {
            return Err(Error::input(format!(
                "action table has {} entries, expected {}",
                table.len(),
                nb * nx
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= nx) {
            return Err(Error::input(format!("action value {v} out of range")));
        }
        let at = |b: usize, x: usize| table[b * nx + x];
        for x in 0..nx {
            if at(0, x) != x {
                return Err(Error::input(format!(
                    "action unit axiom fails: a(e, {x}) = {}",
                    at(0, x)
                )));
            }
        }
        for b in 0..nb {
            for x in 0..nx {
                for y in 0..nx {
                    if at(b, target.mul(x, y)) != target.mul(at(b, x), at(b, y)) {
                        return Err(Error::input(format!(
                            "action multiplicativity fails at (b,x,y) = ({b},{x},{y})"
                        )));
                    }
                }
            }
            for b2 in 0..nb {
                for x in 0..nx {
                    if at(b, at(b2, x)) != at(actor.mul(b, b2), x) {
                        return Err(Error::input(format!(
                            "action composition fails at (b,b',x) = ({b},{b2},{x})"
                        )));
                    }
                }
            }
        }
        Ok(BAction { actor, target, table })
    }

    /// The trivial action `a(b, x) = x`.
    pub fn trivial(actor: &ArcGroup, target: &ArcGroup) -> Self {
        let table = (0..actor.order()).flat_map(|_| target.elements()).collect();
        BAction { actor: actor.clone(), target: target.clone(), table }
    }

    /// The conjugation action of a group on itself: `a(g, x) = g x g⁻¹`.
    pub fn conjugation(x: &ArcGroup) -> Self {
        let n = x.order();
        let mut table = vec![0usize; n * n];
        for g in 0..n {
            for e in 0..n {
                table[g * n + e] = x.conjugate(g, e);
            }
        }
        let act = BAction { actor: x.clone(), target: x.clone(), table };
        debug_assert!(BAction::new(x.clone(), x.clone(), act.table.clone()).is_ok());
        act
    }

    /// Decode a homomorphism into an automorphism group as an action
    /// table. `hom` must land in `aut.group()`.
    pub fn from_hom(hom: &GroupHom, aut: &AutomorphismGroup) -> Result<Self> {
        if !same_group(hom.cod(), aut.group()) {
            return Err(Error::input(
                "homomorphism does not land in the given automorphism group".to_string(),
            ));
        }
        let actor = hom.dom().clone();
        let target = aut.elements()[0].hom().dom().clone();
        let nx = target.order();
        let mut table = vec![0usize; actor.order() * nx];
        for b in actor.elements() {
            for x in 0..nx {
                table[b * nx + x] = aut.apply(hom.apply(b), x);
            }
        }
        BAction::new(actor, target, table)
    }

    /// Re-encode as a homomorphism into the automorphism group.
    pub fn to_hom(&self, aut: &AutomorphismGroup) -> Result<GroupHom> {
        let nx = self.target.order();
        let mut map = Vec::with_capacity(self.actor.order());
        for b in self.actor.elements() {
            let m: Vec<usize> = (0..nx).map(|x| self.apply(b, x)).collect();
            let idx = aut
                .elements()
                .iter()
                .position(|a| a.hom().map() == m.as_slice())
                .ok_or_else(|| Error::input("action map is not in the automorphism list"))?;
            map.push(idx);
        }
        GroupHom::new(self.actor.clone(), aut.group().clone(), map)
    }

    pub fn actor(&self) -> &ArcGroup {
        &self.actor
    }

    pub fn target(&self) -> &ArcGroup {
        &self.target
    }

    #[inline]
    pub fn apply(&self, b: usize, x: usize) -> usize {
        self.table[b * self.target.order() + x]
    }

    /// Is `s` carried into itself by every actor element?
    pub fn leaves_invariant(&self, s: &Subgroup) -> bool {
        self.actor
            .elements()
            .all(|b| s.elems().iter().all(|&x| s.contains(self.apply(b, x))))
    }

    /// Largest sub-action contained in `s`: the largest subgroup of `s`
    /// invariant under every actor element.
    ///
    /// Iterates `Y ← Y ∩ ⋂_g a(g, Y)` over a generating set of the actor
    /// until the fixpoint, which equals the full intersection
    /// `⋂_b a(b, S)`.
    pub fn action_core(&self, s: &Subgroup) -> Result<Subgroup> {
        if !same_group(s.parent(), &self.target) {
            return Err(Error::ParentMismatch {
                left: s.parent().label().to_string(),
                right: self.target.label().to_string(),
            });
        }
        let gens = greedy_generators(&self.actor);
        let mut members: Vec<usize> = s.elems().to_vec();
        loop {
            let next: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&x| gens.iter().all(|&g| members.binary_search(&self.apply(g, x)).is_ok()))
                .collect();
            if next.len() == members.len() {
                break;
            }
            members = next;
        }
        Subgroup::new(self.target.clone(), members)
    }

    /// The full intersection `⋂_{b ∈ B} a(b, S)`; cross-check oracle for
    /// [`BAction::action_core`].
    pub fn action_core_full_intersection(&self, s: &Subgroup) -> Result<Subgroup> {
        if !same_group(s.parent(), &self.target) {
            return Err(Error::ParentMismatch {
                left: s.parent().label().to_string(),
                right: self.target.label().to_string(),
            });
        }
        let mut members: Vec<usize> = s.elems().to_vec();
        for b in self.actor.elements() {
            let image: Vec<usize> = {
                let mut v: Vec<usize> = s.elems().iter().map(|&x| self.apply(b, x)).collect();
                v.sort_unstable();
                v
            };
            members.retain(|e| image.binary_search(e).is_ok());
        }
        Subgroup::new(self.target.clone(), members)
    }
}

impl BAction {
    /// Serialize as an `action B X` block with one row per actor
    /// element.
    pub fn to_block(&self) -> String {
        let nx = self.target.order();
        let mut out = format!("action {} {}\n", self.actor.label(), self.target.label());
        for b in self.actor.elements() {
            let row: Vec<String> = (0..nx).map(|x| self.apply(b, x).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse an `action B X` block against the given actor and target.
    pub fn from_block(text: &str, actor: &ArcGroup, target: &ArcGroup) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::input("empty action block"))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("action") {
            return Err(Error::input(format!("expected `action B X` header, found `{header}`")));
        }
        let (b_label, x_label) = (parts.next().unwrap_or(""), parts.next().unwrap_or(""));
        if b_label != actor.label() || x_label != target.label() {
            return Err(Error::input(format!(
                "action block is for `{b_label}` on `{x_label}`, not `{}` on `{}`",
                actor.label(),
                target.label()
            )));
        }
        let mut table = Vec::with_capacity(actor.order() * target.order());
        for line in lines {
            for tok in line.split_whitespace() {
                table.push(
                    tok.parse()
                        .map_err(|_| Error::input(format!("bad action entry `{tok}`")))?,
                );
            }
        }
        BAction::new(actor.clone(), target.clone(), table)
    }
}

/// All actions of `b` on `x`, one per homomorphism `b -> Aut(x)`, in the
/// deterministic order of the homomorphism enumeration. Entry 0 is the
/// trivial action.
pub fn enumerate_actions(b: &ArcGroup, x: &ArcGroup) -> Result<Vec<BAction>> {
    let aut = automorphism_group_bounded(x, x.order().max(crate::aut::DEFAULT_AUT_BOUND))?;
    let homs = hom_enumerate_bounded(b, aut.group(), b.order())?;
    homs.iter().map(|h| BAction::from_hom(h, &aut)).collect()
}
