//! Exact finite groups as full multiplication tables.
//!
//! Element `0` is always the identity. Every constructor runs the three
//! axiom scans (identity, associativity, inverses), so a [`FiniteGroup`]
//! value in hand is always a genuine group.

use std::fmt;
use std::sync::Arc;

use crate::error::{AxiomFailure, Error, Result};

/// Shared handle to an immutable group; cheap to clone, safe to share
/// across worker threads.
pub type ArcGroup = Arc<FiniteGroup>;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order x order` table; `mul[a * order + b] = a * b`.
    mul: Vec<usize>,
    inv: Vec<usize>,
    label: String,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

/// True when two handles denote the same group, by pointer or by table.
pub fn same_group(a: &ArcGroup, b: &ArcGroup) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FiniteGroup {
    /// Build a group from a raw multiplication table, validating all axioms.
    pub fn from_table(label: impl Into<String>, order: usize, mul: Vec<usize>) -> Result<Self> {
        let label = label.into();
        let inv = validate_table(&label, order, &mul)?;
        Ok(FiniteGroup { order, mul, inv, label })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        for a in self.elements() {
            for b in 0..a {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn into_arc(self) -> ArcGroup {
        Arc::new(self)
    }

    /// Re-run the three axiom scans on the stored table.
    pub fn verify_axioms(&self) -> Result<()> {
        validate_table(&self.label, self.order, &self.mul).map(|_| ())
    }

    // ----- catalog constructors -----

    /// Cyclic group of order `n >= 1`; element `i` is the `i`-th power of
    /// the generator.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::input("cyclic(n) requires n >= 1"));
        }
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = (a + b) % n;
            }
        }
        FiniteGroup::from_table(format!("C{n}"), n, mul)
    }

    /// Dihedral group of order `2n`, `n >= 3`. Element `i + n*j` is
    /// `r^i s^j` with `r` the rotation and `s` a reflection.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::input("dihedral(n) requires n >= 3"));
        }
        let order = 2 * n;
        let idx = |i: usize, j: usize| i + n * j;
        let mut mul = vec![0usize; order * order];
        for i in 0..n {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..2 {
                        // (r^i s^j)(r^k s^l) = r^(i ± k) s^(j+l), sign by j
                        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                        mul[idx(i, j) * order + idx(k, l)] = idx(rot, (j + l) % 2);
                    }
                }
            }
        }
        FiniteGroup::from_table(format!("D{n}"), order, mul)
    }

    /// Symmetric group on `n <= 5` letters; elements are the permutations
    /// of `{0, .., n-1}` in lexicographic order of one-line notation.
    pub fn symmetric(n: usize) -> Result<Self> {
        if !(1..=5).contains(&n) {
            return Err(Error::input("symmetric(n) requires 1 <= n <= 5"));
        }
        let perms = permutations_lex(n);
        FiniteGroup::from_perms(format!("S{n}"), &perms)
    }

    /// Alternating group on `n <= 5` letters (even permutations, lex order).
    pub fn alternating(n: usize) -> Result<Self> {
        if !(1..=5).contains(&n) {
            return Err(Error::input("alternating(n) requires 1 <= n <= 5"));
        }
        let perms: Vec<Vec<usize>> = permutations_lex(n)
            .into_iter()
            .filter(|p| permutation_parity(p) == 0)
            .collect();
        FiniteGroup::from_perms(format!("A{n}"), &perms)
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`; index `2*axis + sign`.
    pub fn quaternion8() -> Self {
        // axis: 0 = 1, 1 = i, 2 = j, 3 = k; sign: 0 = +, 1 = -
        let unit_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) => (x, 0),
                (x, 0) => (x, 0),
                (1, 1) | (2, 2) | (3, 3) => (0, 1),
                (1, 2) => (3, 0),
                (2, 1) => (3, 1),
                (2, 3) => (1, 0),
                (3, 2) => (1, 1),
                (3, 1) => (2, 0),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            }
        };
        let mut mul = vec![0usize; 64];
        for a in 0..8 {
            for b in 0..8 {
                let (axis, extra) = unit_mul(a / 2, b / 2);
                let sign = (a % 2 + b % 2 + extra) % 2;
                mul[a * 8 + b] = 2 * axis + sign;
            }
        }
        FiniteGroup::from_table("Q8", 8, mul).expect("quaternion table is a group")
    }

    fn from_perms(label: String, perms: &[Vec<usize>]) -> Result<Self> {
        let order = perms.len();
        let mut mul = vec![0usize; order * order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let comp: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
                let k = perms
                    .binary_search(&comp)
                    .map_err(|_| Error::input("permutation set is not closed"))?;
                mul[i * order + j] = k;
            }
        }
        FiniteGroup::from_table(label, order, mul)
    }
}

fn validate_table(label: &str, order: usize, mul: &[usize]) -> Result<Vec<usize>> {
    let fail = |f: AxiomFailure| Error::Axiom { label: label.to_string(), failure: f };
    if order == 0 || mul.len() != order * order {
        return Err(fail(AxiomFailure::NotSquare { entries: mul.len(), order }));
    }
    for (i, &v) in mul.iter().enumerate() {
        if v >= order {
            return Err(fail(AxiomFailure::EntryOutOfRange { row: i / order, col: i % order, value: v }));
        }
    }
    for a in 0..order {
        if mul[a] != a || mul[a * order] != a {
            return Err(fail(AxiomFailure::Identity { witness: a }));
        }
    }
    for a in 0..order {
        for b in 0..order {
            let ab = mul[a * order + b];
            for c in 0..order {
                if mul[ab * order + c] != mul[a * order + mul[b * order + c]] {
                    return Err(fail(AxiomFailure::Associativity { witness: (a, b, c) }));
                }
            }
        }
    }
    let mut inv = vec![usize::MAX; order];
    for a in 0..order {
        match (0..order).find(|&b| mul[a * order + b] == 0 && mul[b * order + a] == 0) {
            Some(b) => inv[a] = b,
            None => return Err(fail(AxiomFailure::Inverse { witness: a })),
        }
    }
    Ok(inv)
}

// ----- permutation helpers (used by constructors and the script surface) -----

/// All permutations of `{0, .., n-1}` in lexicographic order. The identity
/// comes first.
pub fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Parity of a permutation: 0 even, 1 odd.
pub fn permutation_parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut parity = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        parity ^= (len + 1) % 2;
    }
    parity
}

/// Turn a list of cycles over `{0, .., n-1}` into one-line notation.
pub fn permutation_from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    for cycle in cycles {
        let mut moved = vec![false; n];
        for &v in cycle {
            if v >= n {
                return Err(Error::input(format!("cycle entry {v} out of range for degree {n}")));
            }
            if moved[v] {
                return Err(Error::input(format!("cycle repeats entry {v}")));
            }
            moved[v] = true;
        }
        let mut q: Vec<usize> = (0..n).collect();
        for w in cycle.windows(2) {
            q[w[0]] = w[1];
        }
        if cycle.len() > 1 {
            q[cycle[cycle.len() - 1]] = cycle[0];
        }
        // apply q after p
        p = (0..n).map(|x| q[p[x]]).collect();
    }
    Ok(p)
}

// ----- Cayley-table text format -----

/// Parse the plain-text Cayley table format: a first line `order n`
/// followed by `n` rows of `n` space-separated element indices.
pub fn parse_cayley_table(text: &str, label: &str) -> Result<FiniteGroup> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::input("empty table file"))?;
    let order: usize = match header.trim().strip_prefix("order") {
        Some(rest) => rest
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad order line: `{header}`")))?,
        None => return Err(Error::input(format!("expected `order n` header, found `{header}`"))),
    };
    let mut mul = Vec::with_capacity(order * order);
    for line in lines {
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::input(format!("bad table entry `{tok}`")))?;
            mul.push(v);
        }
    }
    FiniteGroup::from_table(label, order, mul)
}

/// Render a group in the Cayley-table text format.
pub fn format_cayley_table(g: &FiniteGroup) -> String {
    let mut out = format!("order {}\n", g.order());
    for a in g.elements() {
        let row: Vec<String> = g.elements().map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: close a set of permutations under composition.
    fn perm_closure(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let id: Vec<usize> = (0..n).collect();
        let mut set = vec![id];
        loop {
            let mut grew = false;
            for i in 0..set.len() {
                for g in gens {
                    let comp: Vec<usize> = (0..n).map(|x| set[i][g[x]]).collect();
                    if !set.contains(&comp) {
                        set.push(comp);
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    #[test]
    fn cyclic_one_is_trivial() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn symmetric_three_matches_permutation_enumeration() {
        // oracle: 3! distinct permutations
        assert_eq!(permutations_lex(3).len(), 6);
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn dihedral_four_matches_presentation_closure() {
        // oracle: close <r, s> inside S4, r the 4-cycle, s a reflection of the square
        let r = vec![1, 2, 3, 0];
        let s = vec![0, 3, 2, 1];
        let closure = perm_closure(4, &[r, s]);
        assert_eq!(closure.len(), 8);
        let g = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(g.order(), closure.len());
    }

    #[test]
    fn quaternion_group_is_nonabelian_of_order_eight() {
        let g = FiniteGroup::quaternion8();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // exactly one element of order 2: -1
        let invol: Vec<usize> = g.elements().filter(|&a| g.element_order(a) == 2).collect();
        assert_eq!(invol, vec![1]);
    }

    #[test]
    fn alternating_four_has_order_twelve() {
        let g = FiniteGroup::alternating(4).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn degree_five_is_the_constructor_cap() {
        assert_eq!(FiniteGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert!(FiniteGroup::symmetric(6).is_err());
        assert!(FiniteGroup::alternating(6).is_err());
        assert!(FiniteGroup::dihedral(2).is_err());
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn bad_tables_are_rejected_with_witnesses() {
        // a 2x2 table where 1 has no inverse
        let err = FiniteGroup::from_table("bad", 2, vec![0, 1, 1, 1]).unwrap_err();
        match err {
            Error::Axiom { failure: AxiomFailure::Inverse { witness }, .. } => assert_eq!(witness, 1),
            other => panic!("expected inverse failure, got {other}"),
        }
        // non-associative: rows permute but composition breaks
        let err = FiniteGroup::from_table("bad", 3, vec![0, 1, 2, 1, 0, 2, 2, 1, 0]).unwrap_err();
        assert!(matches!(err, Error::Axiom { failure: AxiomFailure::Associativity { .. }, .. }));
    }

    #[test]
    fn element_orders_in_s3() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let mut orders: Vec<usize> = g.element_orders();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn cayley_text_round_trip() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let text = format_cayley_table(&g);
        let h = parse_cayley_table(&text, g.label()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn cayley_text_rejects_bad_header() {
        assert!(parse_cayley_table("6\n0 1\n", "x").is_err());
    }

    #[test]
    fn cycles_compose_left_to_right() {
        // (0 1)(1 2) applied as: first (0 1), then (1 2)
        let p = permutation_from_cycles(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(p, vec![2, 0, 1]);
    }
}
