//! A decidable fragment of the group `X = Z₂^ℕ × Z` and of its sequence
//! space, on which the infinitary operation
//!
//! ```text
//! ω(α) = (0,0)  if α takes finitely many values,
//!        (0,0)  if every Z-coordinate of α is zero,
//!        (0,1)  otherwise
//! ```
//!
//! is computable. Sequences are finite prefixes followed by a `Constant`
//! or `ShiftedDelta` tail; that class is closed under pointwise sums and
//! large enough to express the witness showing that the union of the
//! bounded-support subgroups `N_i` is not normal for ω, while each `N_i`
//! is.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::report::{timed, CheckReport};

/// An element `(x, z)` with `x` a finitely supported 0/1 sequence and `z`
/// an arbitrary-precision integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OmegaElement {
    pub support: BTreeSet<u64>,
    pub z: BigInt,
}

impl OmegaElement {
    pub fn new(support: impl IntoIterator<Item = u64>, z: impl Into<BigInt>) -> Self {
        OmegaElement { support: support.into_iter().collect(), z: z.into() }
    }

    pub fn zero() -> Self {
        OmegaElement { support: BTreeSet::new(), z: BigInt::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty() && self.z == BigInt::ZERO
    }

    /// Addition: symmetric difference of supports, integer sum of `z`.
    pub fn add(&self, other: &OmegaElement) -> OmegaElement {
        let support = self.support.symmetric_difference(&other.support).copied().collect();
        OmegaElement { support, z: &self.z + &other.z }
    }

    /// Negation flips `z` only; the Z₂ coordinates are 2-torsion.
    pub fn neg(&self) -> OmegaElement {
        OmegaElement { support: self.support.clone(), z: -&self.z }
    }

    pub fn sub(&self, other: &OmegaElement) -> OmegaElement {
        self.add(&other.neg())
    }

    /// Toggle one support position.
    fn toggle(&self, n: u64) -> OmegaElement {
        let mut support = self.support.clone();
        if !support.remove(&n) {
            support.insert(n);
        }
        OmegaElement { support, z: self.z.clone() }
    }

    /// Membership in `N_i = {(x, 0) : x_m = 0 for all m ≥ i}`.
    pub fn member_ni(&self, i: u64) -> bool {
        self.z == BigInt::ZERO && self.support.iter().next_back().is_none_or(|&m| m < i)
    }
}

impl fmt::Display for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support: Vec<String> = self.support.iter().map(|n| n.to_string()).collect();
        write!(f, "{{{};{}}}", support.join(","), self.z)
    }
}

/// Tail of a sequence descriptor: the value at index `n ≥ |prefix|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    /// Constant value `e` at every tail index.
    Constant(OmegaElement),
    /// Value `(e.support xor {n}, e.z)` at tail index `n`.
    ShiftedDelta(OmegaElement),
}

/// A finitely described element of `X^ℕ`: an explicit prefix and a tail
/// law. Kept in normal form: the prefix never ends with a term the tail
/// law would reproduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqDescriptor {
    prefix: Vec<OmegaElement>,
    tail: Tail,
}

impl SeqDescriptor {
    pub fn new(prefix: Vec<OmegaElement>, tail: Tail) -> Self {
        let mut d = SeqDescriptor { prefix, tail };
        d.normalize();
        d
    }

    pub fn constant(e: OmegaElement) -> Self {
        SeqDescriptor { prefix: Vec::new(), tail: Tail::Constant(e) }
    }

    pub fn shifted_delta(e: OmegaElement) -> Self {
        SeqDescriptor { prefix: Vec::new(), tail: Tail::ShiftedDelta(e) }
    }

    pub fn zero() -> Self {
        SeqDescriptor::constant(OmegaElement::zero())
    }

    pub fn prefix(&self) -> &[OmegaElement] {
        &self.prefix
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Value of the described sequence at index `n`.
    pub fn term(&self, n: u64) -> OmegaElement {
        if let Some(e) = self.prefix.get(n as usize) {
            return e.clone();
        }
        match &self.tail {
            Tail::Constant(e) => e.clone(),
            Tail::ShiftedDelta(e) => e.toggle(n),
        }
    }

    fn tail_term(&self, n: u64) -> OmegaElement {
        match &self.tail {
            Tail::Constant(e) => e.clone(),
            Tail::ShiftedDelta(e) => e.toggle(n),
        }
    }

    /// Drop trailing prefix entries that the tail law already produces.
    fn normalize(&mut self) {
        while let Some(last) = self.prefix.last() {
            let n = (self.prefix.len() - 1) as u64;
            if *last == self.tail_term(n) {
                self.prefix.pop();
            } else {
                break;
            }
        }
    }

    /// Unfold one tail term into the prefix; the described sequence is
    /// unchanged. Exposed for representation-independence tests.
    pub fn unfold(&self) -> SeqDescriptor {
        let n = self.prefix.len() as u64;
        let mut prefix = self.prefix.clone();
        prefix.push(self.tail_term(n));
        SeqDescriptor { prefix, tail: self.tail.clone() }
    }

    /// Pointwise sum, renormalized. Tails combine by case:
    /// two shifted deltas cancel their moving coordinate and become a
    /// constant; a constant shifts a delta; constants add.
    pub fn add(&self, other: &SeqDescriptor) -> SeqDescriptor {
        let cut = self.prefix.len().max(other.prefix.len()) as u64;
        let prefix: Vec<OmegaElement> =
            (0..cut).map(|n| self.term(n).add(&other.term(n))).collect();
        let tail = match (&self.tail, &other.tail) {
            (Tail::Constant(a), Tail::Constant(b)) => Tail::Constant(a.add(b)),
            (Tail::Constant(a), Tail::ShiftedDelta(b)) | (Tail::ShiftedDelta(b), Tail::Constant(a)) => {
                Tail::ShiftedDelta(a.add(b))
            }
            (Tail::ShiftedDelta(a), Tail::ShiftedDelta(b)) => Tail::Constant(a.add(b)),
        };
        SeqDescriptor::new(prefix, tail)
    }

    pub fn neg(&self) -> SeqDescriptor {
        let prefix = self.prefix.iter().map(OmegaElement::neg).collect();
        let tail = match &self.tail {
            Tail::Constant(e) => Tail::Constant(e.neg()),
            Tail::ShiftedDelta(e) => Tail::ShiftedDelta(e.neg()),
        };
        SeqDescriptor::new(prefix, tail)
    }

    /// Does the sequence take only finitely many values? Decidable from
    /// the tail law: a constant tail gives a finite value set, a shifted
    /// delta gives pairwise distinct values at all tail indices.
    pub fn has_finite_value_set(&self) -> bool {
        matches!(self.tail, Tail::Constant(_))
    }

    /// Is every Z-coordinate zero?
    pub fn all_z_zero(&self) -> bool {
        let tail_z = match &self.tail {
            Tail::Constant(e) | Tail::ShiftedDelta(e) => &e.z,
        };
        *tail_z == BigInt::ZERO && self.prefix.iter().all(|e| e.z == BigInt::ZERO)
    }

    /// The piecewise infinitary operation.
    pub fn omega_eval(&self) -> OmegaElement {
        if self.has_finite_value_set() || self.all_z_zero() {
            OmegaElement::zero()
        } else {
            OmegaElement::new([], 1)
        }
    }

    /// Do all terms of the sequence lie in `N_i`? Decidable: a shifted
    /// delta tail always leaves `N_i` at indices `≥ max(i, |prefix|)`.
    pub fn all_terms_in_ni(&self, i: u64) -> bool {
        if !self.prefix.iter().all(|e| e.member_ni(i)) {
            return false;
        }
        match &self.tail {
            Tail::Constant(e) => e.member_ni(i),
            Tail::ShiftedDelta(_) => false,
        }
    }
}

impl fmt::Display for SeqDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            let terms: Vec<String> = self.prefix.iter().map(|e| e.to_string()).collect();
            write!(f, "prefix[{}]+", terms.join(","))?;
        }
        match &self.tail {
            Tail::Constant(e) => write!(f, "const{e}"),
            Tail::ShiftedDelta(e) => write!(f, "sdelta{e}"),
        }
    }
}

// ----- the one-line text syntax -----

/// Parse the descriptor syntax used on the command line:
/// `const{support;z}`, `sdelta{support;z}`, optionally preceded by
/// `prefix[{..;..},..]+`. Supports are comma-separated naturals.
pub fn parse_descriptor(text: &str) -> Result<SeqDescriptor> {
    let text = text.trim();
    let (prefix, rest) = match text.strip_prefix("prefix[") {
        Some(rest) => {
            let close = rest
                .find(']')
                .ok_or_else(|| Error::input("descriptor: missing `]` after prefix"))?;
            let inner = &rest[..close];
            let after = rest[close + 1..]
                .strip_prefix('+')
                .ok_or_else(|| Error::input("descriptor: expected `+` after prefix"))?;
            (parse_element_list(inner)?, after)
        }
        None => (Vec::new(), text),
    };
    let tail = if let Some(body) = rest.strip_prefix("const") {
        Tail::Constant(parse_element(body)?)
    } else if let Some(body) = rest.strip_prefix("sdelta") {
        Tail::ShiftedDelta(parse_element(body)?)
    } else {
        return Err(Error::input(format!("descriptor: expected `const` or `sdelta`, found `{rest}`")));
    };
    Ok(SeqDescriptor::new(prefix, tail))
}

fn parse_element_list(text: &str) -> Result<Vec<OmegaElement>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let close =
            rest.find('}').ok_or_else(|| Error::input("descriptor: missing `}` in element"))?;
        out.push(parse_element(&rest[..=close])?);
        rest = rest[close + 1..].trim_start_matches(',').trim();
    }
    Ok(out)
}

/// `{n1,n2,..;z}` with an optionally empty support list.
pub fn parse_element(text: &str) -> Result<OmegaElement> {
    let text = text.trim();
    let body = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::input(format!("element: expected `{{support;z}}`, found `{text}`")))?;
    let (support_text, z_text) = body
        .split_once(';')
        .ok_or_else(|| Error::input("element: missing `;` between support and z"))?;
    let mut support = BTreeSet::new();
    for tok in support_text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let n: u64 =
            tok.parse().map_err(|_| Error::input(format!("element: bad support entry `{tok}`")))?;
        support.insert(n);
    }
    let z: BigInt = z_text
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("element: bad integer `{}`", z_text.trim())))?;
    Ok(OmegaElement { support, z })
}

// ----- the counterexample checks -----

/// Reproduce the witness: with `α` the constant sequence at `(∅, 1)` and
/// `β` the delta sequence, `ω(α+β) − ω(α) = (∅, 1)`, which lies in no
/// `N_i` (sampled for `i ≤ max_i`).
pub fn verify_witness(max_i: u64) -> CheckReport {
    let (outcome, millis) = timed(|| {
        let alpha = SeqDescriptor::constant(OmegaElement::new([], 1));
        let beta = SeqDescriptor::shifted_delta(OmegaElement::zero());
        let difference = alpha.add(&beta).omega_eval().sub(&alpha.omega_eval());
        let expected = OmegaElement::new([], 1);
        if difference != expected {
            return Some(format!("difference evaluated to {difference}, expected {expected}"));
        }
        if let Some(i) = (0..=max_i).find(|&i| difference.member_ni(i)) {
            return Some(format!("difference {difference} unexpectedly lies in N_{i}"));
        }
        None
    });
    match outcome {
        None => CheckReport::holds("omega_witness", format!("i<={max_i}"), millis),
        Some(w) => CheckReport::fails("omega_witness", format!("i<={max_i}"), w, millis),
    }
}

/// For sampled `(α, β)` with every term of `β` in `N_i`, check that
/// `ω(α+β) = ω(α)`. Samples with β outside the fragment's reach of `N_i`
/// are rejected as input errors.
pub fn verify_ni_invariance(
    i: u64,
    samples: &[(SeqDescriptor, SeqDescriptor)],
) -> Result<CheckReport> {
    for (_, beta) in samples {
        if !beta.all_terms_in_ni(i) {
            return Err(Error::input(format!("sample β = {beta} has a term outside N_{i}")));
        }
    }
    let (outcome, millis) = timed(|| {
        for (alpha, beta) in samples {
            let lhs = alpha.add(beta).omega_eval();
            let rhs = alpha.omega_eval();
            if lhs != rhs {
                return Some(format!("α = {alpha}, β = {beta}: ω(α+β) = {lhs} but ω(α) = {rhs}"));
            }
        }
        None
    });
    let instance = format!("N_{i} ({} samples)", samples.len());
    Ok(match outcome {
        None => CheckReport::holds("omega_ni_invariance", instance, millis),
        Some(w) => CheckReport::fails("omega_ni_invariance", instance, w, millis),
    })
}

/// Seeded sample generator for [`verify_ni_invariance`]: arbitrary
/// fragment sequences `α` and sequences `β` valued in `N_i`.
pub fn sample_invariance_inputs(
    i: u64,
    count: usize,
    seed: u64,
) -> Vec<(SeqDescriptor, SeqDescriptor)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ i);
    let mut out = Vec::with_capacity(count);
    let random_element = |rng: &mut rand_chacha::ChaCha8Rng, max_pos: u64, max_z: i64| {
        let support_size = rng.gen_range(0..=3usize);
        let support: BTreeSet<u64> =
            (0..support_size).map(|_| rng.gen_range(0..max_pos.max(1))).collect();
        OmegaElement { support, z: BigInt::from(rng.gen_range(-max_z..=max_z)) }
    };
    for _ in 0..count {
        let alpha = {
            let prefix_len = rng.gen_range(0..3usize);
            let prefix: Vec<OmegaElement> =
                (0..prefix_len).map(|_| random_element(&mut rng, 2 * i + 4, 3)).collect();
            let e = random_element(&mut rng, 2 * i + 4, 3);
            let tail = if rng.gen_bool(0.5) { Tail::Constant(e) } else { Tail::ShiftedDelta(e) };
            SeqDescriptor::new(prefix, tail)
        };
        let beta = {
            let prefix_len = rng.gen_range(0..3usize);
            let prefix: Vec<OmegaElement> =
                (0..prefix_len).map(|_| random_element(&mut rng, i, 0)).collect();
            SeqDescriptor::new(prefix, Tail::Constant(random_element(&mut rng, i, 0)))
        };
        debug_assert!(beta.all_terms_in_ni(i));
        out.push((alpha, beta));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(support: &[u64], z: i64) -> OmegaElement {
        OmegaElement::new(support.iter().copied(), z)
    }

    #[test]
    fn addition_is_symmetric_difference_plus_integer_sum() {
        let a = elem(&[0, 2], 1);
        let b = elem(&[2, 5], -3);
        assert_eq!(a.add(&b), elem(&[0, 5], -2));
        assert_eq!(a.add(&a), elem(&[], 2));
    }

    #[test]
    fn membership_in_ni() {
        assert!(elem(&[], 0).member_ni(0));
        assert!(!elem(&[3], 0).member_ni(3));
        assert!(elem(&[3], 0).member_ni(4));
        for i in 0..70 {
            assert!(!elem(&[], 1).member_ni(i));
        }
    }

    #[test]
    fn tail_sums_normalize_as_stated() {
        // constant + shifted delta: the delta survives
        let c = SeqDescriptor::constant(elem(&[], 1));
        let d = SeqDescriptor::shifted_delta(elem(&[], 0));
        assert_eq!(c.add(&d), SeqDescriptor::shifted_delta(elem(&[], 1)));
        // shifted delta + shifted delta: deltas cancel
        assert_eq!(d.add(&d), SeqDescriptor::constant(elem(&[], 0)));
        // adding the zero descriptor changes nothing
        let any = SeqDescriptor::new(vec![elem(&[1], 2)], Tail::ShiftedDelta(elem(&[0], 5)));
        assert_eq!(any.add(&SeqDescriptor::zero()), any);
    }

    #[test]
    fn omega_eval_clauses() {
        // finite value set
        assert_eq!(SeqDescriptor::constant(elem(&[4], 7)).omega_eval(), OmegaElement::zero());
        // infinite value set but all z zero
        assert_eq!(SeqDescriptor::shifted_delta(elem(&[], 0)).omega_eval(), OmegaElement::zero());
        // otherwise
        assert_eq!(SeqDescriptor::shifted_delta(elem(&[], 1)).omega_eval(), elem(&[], 1));
    }

    #[test]
    fn eval_is_invariant_under_unfolding() {
        let descriptors = [
            SeqDescriptor::constant(elem(&[1], 3)),
            SeqDescriptor::shifted_delta(elem(&[2], 0)),
            SeqDescriptor::new(vec![elem(&[], 9)], Tail::ShiftedDelta(elem(&[0, 1], -2))),
        ];
        for d in descriptors {
            let mut u = d.clone();
            for _ in 0..5 {
                u = u.unfold();
                assert_eq!(u.term(3), d.term(3));
                assert_eq!(u.omega_eval(), d.omega_eval());
                // unfold keeps the described sequence, so renormalizing
                // recovers the original descriptor
                assert_eq!(SeqDescriptor::new(u.prefix().to_vec(), u.tail().clone()), d);
            }
        }
    }

    #[test]
    fn witness_check_holds() {
        let report = verify_witness(64);
        assert_eq!(report.verdict, crate::report::Verdict::Holds);
    }

    #[test]
    fn perturbed_witnesses_fall_back_into_n() {
        // α with z = 0 makes the difference (∅, 0)
        let alpha = SeqDescriptor::constant(elem(&[], 0));
        let beta = SeqDescriptor::shifted_delta(elem(&[], 0));
        let diff = alpha.add(&beta).omega_eval().sub(&alpha.omega_eval());
        assert!(diff.is_zero());
        // β replaced by a constant keeps the value set finite
        let alpha = SeqDescriptor::constant(elem(&[], 1));
        let beta = SeqDescriptor::constant(elem(&[0], 0));
        let diff = alpha.add(&beta).omega_eval().sub(&alpha.omega_eval());
        assert!(diff.is_zero());
    }

    #[test]
    fn ni_invariance_on_handpicked_samples() {
        let samples = vec![
            (SeqDescriptor::shifted_delta(elem(&[], 1)), SeqDescriptor::constant(elem(&[0], 0))),
            (SeqDescriptor::constant(elem(&[3], 2)), SeqDescriptor::constant(elem(&[], 0))),
            (SeqDescriptor::zero(), SeqDescriptor::zero()),
        ];
        let report = verify_ni_invariance(1, &samples).unwrap();
        assert_eq!(report.verdict, crate::report::Verdict::Holds);
    }

    #[test]
    fn ni_invariance_rejects_out_of_fragment_betas() {
        let samples =
            vec![(SeqDescriptor::zero(), SeqDescriptor::shifted_delta(elem(&[], 0)))];
        assert!(verify_ni_invariance(1, &samples).is_err());
    }

    #[test]
    fn seeded_samples_pass_for_standard_sizes() {
        for i in [1, 2, 4, 8] {
            let samples = sample_invariance_inputs(i, 250, 0xC0FFEE);
            let report = verify_ni_invariance(i, &samples).unwrap();
            assert_eq!(report.verdict, crate::report::Verdict::Holds, "i = {i}");
        }
    }

    #[test]
    fn descriptor_syntax_round_trips() {
        let cases = [
            "const{;0}",
            "sdelta{;1}",
            "const{0,3;5}",
            "prefix[{;9}]+sdelta{0,1;-2}",
            "prefix[{1;2},{0,2;-1}]+const{7;0}",
        ];
        for text in cases {
            let d = parse_descriptor(text).unwrap();
            assert_eq!(parse_descriptor(&d.to_string()).unwrap(), d, "{text}");
        }
    }

    #[test]
    fn descriptor_syntax_rejects_garbage() {
        assert!(parse_descriptor("konst{;0}").is_err());
        assert!(parse_descriptor("const{0}").is_err());
        assert!(parse_descriptor("prefix[{;1}sdelta{;0}").is_err());
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_element() -> impl Strategy<Value = OmegaElement> {
        (proptest::collection::btree_set(0u64..12, 0..4), -5i64..=5)
            .prop_map(|(support, z)| OmegaElement { support, z: BigInt::from(z) })
    }

    fn arb_descriptor() -> impl Strategy<Value = SeqDescriptor> {
        (
            proptest::collection::vec(arb_element(), 0..4),
            arb_element(),
            proptest::bool::ANY,
        )
            .prop_map(|(prefix, e, constant)| {
                let tail = if constant { Tail::Constant(e) } else { Tail::ShiftedDelta(e) };
                SeqDescriptor::new(prefix, tail)
            })
    }

    proptest! {
        #[test]
        fn addition_is_commutative(a in arb_descriptor(), b in arb_descriptor()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
        }

        #[test]
        fn addition_is_associative(
            a in arb_descriptor(),
            b in arb_descriptor(),
            c in arb_descriptor(),
        ) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }

        #[test]
        fn zero_is_neutral_and_neg_inverts(a in arb_descriptor()) {
            prop_assert_eq!(a.add(&SeqDescriptor::zero()), a.clone());
            let sum = a.add(&a.neg());
            prop_assert!(sum.prefix().iter().all(|e| e.is_zero()));
        }

        #[test]
        fn terms_agree_with_tail_laws(a in arb_descriptor(), n in 0u64..20) {
            let unfolded = a.unfold();
            prop_assert_eq!(a.term(n), unfolded.term(n));
            prop_assert_eq!(a.omega_eval(), unfolded.omega_eval());
        }

        #[test]
        fn display_round_trips(a in arb_descriptor()) {
            prop_assert_eq!(parse_descriptor(&a.to_string()).unwrap(), a);
        }
    }
}
