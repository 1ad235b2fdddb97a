//! Suite runner: the named acceptance criteria, selector buckets, and
//! batch execution over the catalog.

use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{acceptance_extensions, dedupe_by_isomorphism, points_over, Catalog};
use crate::checks::{self, FamilyPolicy};
use crate::error::{Error, Result};
use crate::extension::{extension_from_decomposition, fibrewise_right_adjoint, point_morphisms, pullback_point};
use crate::group::ArcGroup;
use crate::hom::hom_enumerate_bounded;
use crate::omega::{sample_invariance_inputs, verify_ni_invariance, verify_witness};
use crate::report::{sort_reports, timed, CheckReport, Verdict};
use crate::subgroup::{enumerate_subgroups_bounded, naive_closure, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    All,
    Cores,
    Theorems,
    Omega,
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Selector::All),
            "cores" => Ok(Selector::Cores),
            "theorems" => Ok(Selector::Theorems),
            "omega" => Ok(Selector::Omega),
            other => Err(Error::input(format!(
                "unknown suite `{other}` (expected all, cores, theorems or omega)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub selector: Selector,
    /// Overrides the per-criterion order caps when set.
    pub max_order: Option<usize>,
    pub seed: u64,
    /// Enables the expensive terminality and adjunction scans.
    pub verify: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            selector: Selector::All,
            max_order: None,
            seed: checks::DEFAULT_SEED,
            verify: false,
        }
    }
}

pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub skipped: bool,
    pub detail: String,
    pub reports: Vec<CheckReport>,
}

impl CriterionResult {
    fn from_reports(name: &'static str, reports: Vec<CheckReport>) -> Self {
        let fails = reports.iter().filter(|r| r.verdict == Verdict::Fails).count();
        let skips = reports.iter().filter(|r| r.verdict == Verdict::SkippedCapacity).count();
        let detail = format!("{} instances, {} fails, {} capacity skips", reports.len(), fails, skips);
        CriterionResult { name, passed: fails == 0, skipped: false, detail, reports }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        CriterionResult {
            name,
            passed: true,
            skipped: true,
            detail: why.to_string(),
            reports: vec![CheckReport::skipped(name, "suite", why.to_string())],
        }
    }
}

fn groups_up_to(catalog: &Catalog, cap: usize) -> Vec<ArcGroup> {
    catalog.groups().filter(|g| g.order() <= cap).cloned().collect()
}

/// Criterion: every catalog group passes the identity, associativity and
/// inverse scans.
pub fn criterion_group_axioms(catalog: &Catalog) -> Result<CriterionResult> {
    let mut reports = Vec::new();
    for group in catalog.groups() {
        let (outcome, millis) = timed(|| group.verify_axioms());
        reports.push(match outcome {
            Ok(()) => CheckReport::holds("group_axioms", group.label(), millis),
            Err(e) => CheckReport::fails("group_axioms", group.label(), e.to_string(), millis),
        });
    }
    Ok(CriterionResult::from_reports("group-axioms", reports))
}

/// Criterion: on every subgroup of every catalog group up to the cap,
/// the join-of-contained-normals and conjugate-intersection routes to
/// the normal core agree exactly, and the result is the maximum of the
/// normal subgroups below `S`.
pub fn criterion_normal_core_oracle(catalog: &Catalog, cap: usize) -> Result<CriterionResult> {
    let mut reports = Vec::new();
    for group in groups_up_to(catalog, cap) {
        let (outcome, millis) = timed(|| -> Result<Option<String>> {
            let subs = enumerate_subgroups_bounded(&group, group.order(), false)?;
            let normals: Vec<Subgroup> = subs.iter().filter(|s| s.is_normal()).cloned().collect();
            for s in &subs {
                let core = match s.normal_core_verified() {
                    Ok(core) => core,
                    Err(witness) => return Ok(Some(witness)),
                };
                let best = normals
                    .iter()
                    .filter(|n| s.contains_all(n))
                    .max_by_key(|n| n.order())
                    .expect("the trivial subgroup is always normal");
                if core != *best {
                    return Ok(Some(format!(
                        "normal core of {} is {} but the lattice maximum is {}",
                        s.notation(),
                        core.notation(),
                        best.notation()
                    )));
                }
            }
            Ok(None)
        });
        reports.push(match outcome? {
            None => CheckReport::holds("normal_core_oracle", group.label(), millis),
            Some(w) => CheckReport::fails("normal_core_oracle", group.label(), w, millis),
        });
    }
    Ok(CriterionResult::from_reports("normal-core-oracle", reports))
}

/// Criterion: core terminality across every split extension built from
/// base-member actions with middle order up to `max_middle`.
pub fn criterion_core_terminality(max_middle: usize) -> Result<CriterionResult> {
    let mut reports = Vec::new();
    for ext in acceptance_extensions(max_middle)? {
        reports.push(checks::check_core_terminality(&ext)?);
    }
    Ok(CriterionResult::from_reports("core-terminality", reports))
}

/// Criterion: binary and family meet-join distributivity over every
/// decomposition of catalog groups up to the cap.
pub fn criterion_intersections(
    catalog: &Catalog,
    cap: usize,
    policy: &FamilyPolicy,
) -> Result<CriterionResult> {
    let mut reports = Vec::new();
    for group in groups_up_to(catalog, cap) {
        for (k, b) in checks::intersection_decompositions(&group)? {
            reports.push(checks::check_intersections_binary(&group, &k, &b)?);
            let families = checks::families_above(&group, &b, policy)?;
            reports.push(checks::check_intersections_family(&group, &k, &b, &families)?);
        }
    }
    Ok(CriterionResult::from_reports("intersections", reports))
}

/// Criterion: kernel-functor geometricity over the same decompositions,
/// with subpoint families enumerated exhaustively up to `2^10` and
/// sampled beyond.
pub fn criterion_kernel_geometric(catalog: &Catalog, cap: usize, seed: u64) -> Result<CriterionResult> {
    let policy = FamilyPolicy { max_exhaustive: 10, samples: 1000, seed };
    let mut reports = Vec::new();
    for group in groups_up_to(catalog, cap) {
        for (k, b) in checks::intersection_decompositions(&group)? {
            let ext = extension_from_decomposition(&group, &k, &b)?;
            reports.push(checks::check_kernel_geometric_all(&ext, &policy)?);
        }
    }
    Ok(CriterionResult::from_reports("kernel-geometric", reports))
}

/// Criterion: Higgins normality, clot restriction, three subobjects,
/// join-of-normals, and commutator-directed-join, exhaustively up to the
/// cap (three subobjects additionally on S4 and A4).
pub fn criterion_lattice_theorems(
    catalog: &Catalog,
    cap: usize,
    policy: &FamilyPolicy,
) -> Result<CriterionResult> {
    let mut reports = Vec::new();
    for group in groups_up_to(catalog, cap) {
        reports.push(checks::check_higgins_normality(&group)?);
        reports.push(checks::check_join_normals_normal(&group, policy)?);
        reports.push(checks::check_commutator_join_all(&group)?);
        reports.push(checks::check_three_subobjects(&group)?);
        let ext = crate::extension::conjugation_extension(&group);
        for n in enumerate_subgroups_bounded(&group, group.order(), false)? {
            reports.push(checks::check_clots_against(&ext, &n)?);
        }
        for s in enumerate_subgroups_bounded(&group, group.order(), false)? {
            reports.push(checks::check_normal_core_pullback(&s)?);
        }
    }
    for label in ["S4", "A4"] {
        if let Some(group) = catalog.find(label) {
            reports.push(checks::check_three_subobjects(group)?);
        }
    }
    Ok(CriterionResult::from_reports("lattice-theorems", reports))
}

/// Criterion: the core Galois adjunction on every extension with middle
/// order up to `max_middle`.
pub fn criterion_core_adjunction(max_middle: usize) -> Result<CriterionResult> {
    let mut reports = Vec::new();
    for ext in acceptance_extensions(max_middle)? {
        reports.push(checks::check_core_adjunction(&ext)?);
    }
    Ok(CriterionResult::from_reports("core-adjunction", reports))
}

/// Criterion: the hom-count bijection of the fibrewise right adjoint for
/// split epimorphisms `p: E → B` with `|E| ≤ max_e`, `|B| ≤ max_b`, and
/// points on either side with middle order ≤ `max_middle`.
pub fn criterion_fibrewise_adjoint(
    max_e: usize,
    max_b: usize,
    max_middle: usize,
) -> Result<CriterionResult> {
    let pool = dedupe_by_isomorphism(
        &Catalog::built_in(max_e.max(max_middle))?
            .groups()
            .filter(|g| g.order() <= max_e.max(max_middle))
            .cloned()
            .collect::<Vec<_>>(),
    );
    let kernel_pool: Vec<ArcGroup> =
        pool.iter().filter(|g| g.order() <= max_middle).cloned().collect();
    let mut reports = Vec::new();
    for e in pool.iter().filter(|g| g.order() <= max_e) {
        for b in pool.iter().filter(|g| g.order() <= max_b) {
            let epis: Vec<_> = hom_enumerate_bounded(e, b, e.order())?
                .into_iter()
                .filter(|p| p.is_surjective())
                .collect();
            for p in &epis {
                let sections: Vec<_> = hom_enumerate_bounded(b, e, b.order())?
                    .into_iter()
                    .filter(|sec| {
                        p.compose(sec)
                            .map(|r| r.map().iter().enumerate().all(|(i, &v)| i == v))
                            .unwrap_or(false)
                    })
                    .collect();
                for sec in &sections {
                    let points_e = points_over(e, &kernel_pool, max_middle)?;
                    let points_b = points_over(b, &kernel_pool, max_middle)?;
                    let instance =
                        format!("p: {} -> {} ({} points over E)", e.label(), b.label(), points_e.len());
                    let (outcome, millis) = timed(|| -> Result<Option<String>> {
                        for d in &points_e {
                            let adjoint = fibrewise_right_adjoint(p, sec, d)?;
                            for a_prime in &points_b {
                                let pulled = pullback_point(a_prime, p)?;
                                let lhs = point_morphisms(&pulled, d)?.len();
                                let rhs = point_morphisms(a_prime, &adjoint)?.len();
                                if lhs != rhs {
                                    return Ok(Some(format!(
                                        "D = {}, A' = {}: |Hom(p*A', D)| = {lhs} but |Hom(A', s*C(D))| = {rhs}",
                                        d.describe(),
                                        a_prime.describe()
                                    )));
                                }
                            }
                        }
                        Ok(None)
                    });
                    reports.push(match outcome? {
                        None => CheckReport::holds("fibrewise_adjoint", instance, millis),
                        Some(w) => CheckReport::fails("fibrewise_adjoint", instance, w, millis),
                    });
                }
            }
        }
    }
    Ok(CriterionResult::from_reports("fibrewise-adjoint", reports))
}

/// Criterion: the ω witness and the `N_i` invariance samples.
pub fn criterion_omega(seed: u64) -> Result<CriterionResult> {
    let mut reports = vec![verify_witness(64)];
    for i in [1, 2, 4, 8] {
        let samples = sample_invariance_inputs(i, 1000, seed);
        reports.push(verify_ni_invariance(i, &samples)?);
    }
    Ok(CriterionResult::from_reports("omega-counterexample", reports))
}

/// Criterion: `generate` agrees with the one-element-at-a-time closure
/// oracle on seeded random seed sets across the catalog, and its
/// iteration count never exceeds the group order.
pub fn criterion_generate_oracle(
    catalog: &Catalog,
    samples: usize,
    seed: u64,
) -> Result<CriterionResult> {
    let groups: Vec<ArcGroup> = catalog.groups().cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (outcome, millis) = timed(|| -> Result<Option<String>> {
        for _ in 0..samples {
            let group = &groups[rng.gen_range(0..groups.len())];
            let size = rng.gen_range(0..=3usize);
            let seed_set: Vec<usize> =
                (0..size).map(|_| rng.gen_range(0..group.order())).collect();
            let (sub, iterations) = Subgroup::generate(group, &seed_set)?;
            let oracle = naive_closure(group, &seed_set);
            if sub.elems() != oracle.as_slice() {
                return Ok(Some(format!(
                    "{} with seed {:?}: generate gives {} but the oracle gives {:?}",
                    group.label(),
                    seed_set,
                    sub.notation(),
                    oracle
                )));
            }
            if iterations > group.order() {
                return Ok(Some(format!(
                    "{} with seed {:?}: {} iterations exceeds the order",
                    group.label(),
                    seed_set,
                    iterations
                )));
            }
        }
        Ok(None)
    });
    let instance = format!("{samples} seeded samples");
    let report = match outcome? {
        None => CheckReport::holds("generate_oracle", instance, millis),
        Some(w) => CheckReport::fails("generate_oracle", instance, w, millis),
    };
    Ok(CriterionResult::from_reports("generate-oracle", vec![report]))
}

pub struct SuiteOutcome {
    pub criteria: Vec<CriterionResult>,
    pub reports: Vec<CheckReport>,
    pub exit_code: i32,
}

/// Run the selected criteria over the catalog, writing one line per
/// report and a PASS/FAIL line per criterion. Exit code 0 on success, 1
/// if any check fails, 3 if capacity skips occurred and `strict` was
/// requested (decided by the caller from the outcome).
pub fn run_suite(
    catalog: &Catalog,
    config: &SuiteConfig,
    out: &mut dyn Write,
) -> Result<SuiteOutcome> {
    let policy = FamilyPolicy { seed: config.seed, ..FamilyPolicy::default() };
    let cap16 = config.max_order.unwrap_or(16);
    let cap24 = config.max_order.unwrap_or(24);
    let wants = |bucket: Selector| {
        config.selector == Selector::All || config.selector == bucket
    };
    let mut criteria = Vec::new();

    if wants(Selector::Theorems) {
        criteria.push(criterion_group_axioms(catalog)?);
    }
    if wants(Selector::Cores) {
        criteria.push(criterion_normal_core_oracle(catalog, cap16)?);
        if config.verify {
            criteria.push(criterion_core_terminality(cap24)?);
        } else {
            criteria.push(CriterionResult::skipped(
                "core-terminality",
                "terminality scans are enabled by --verify",
            ));
        }
    }
    if wants(Selector::Theorems) {
        criteria.push(criterion_intersections(catalog, cap16, &policy)?);
        criteria.push(criterion_kernel_geometric(catalog, cap16, config.seed)?);
        criteria.push(criterion_lattice_theorems(catalog, cap16, &policy)?);
    }
    if wants(Selector::Cores) {
        if config.verify {
            criteria.push(criterion_core_adjunction(cap16)?);
            criteria.push(criterion_fibrewise_adjoint(8, 4, 12)?);
        } else {
            criteria.push(CriterionResult::skipped(
                "core-adjunction",
                "adjunction scans are enabled by --verify",
            ));
            criteria.push(CriterionResult::skipped(
                "fibrewise-adjoint",
                "adjunction scans are enabled by --verify",
            ));
        }
    }
    if wants(Selector::Omega) {
        criteria.push(criterion_omega(config.seed)?);
    }
    if wants(Selector::Theorems) {
        criteria.push(criterion_generate_oracle(catalog, 1000, config.seed)?);
    }

    let mut reports = Vec::new();
    for criterion in &criteria {
        reports.extend(criterion.reports.iter().cloned());
    }
    sort_reports(&mut reports);
    for report in &reports {
        writeln!(out, "{}", report.line())?;
    }
    let mut any_fail = false;
    for criterion in &criteria {
        let status = if criterion.skipped {
            "SKIP"
        } else if criterion.passed {
            "PASS"
        } else {
            any_fail = true;
            "FAIL"
        };
        writeln!(out, "{status} {}: {}", criterion.name, criterion.detail)?;
    }
    let exit_code = if any_fail { 1 } else { 0 };
    Ok(SuiteOutcome { criteria, reports, exit_code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;

    #[test]
    fn selector_parsing() {
        assert_eq!("all".parse::<Selector>().unwrap(), Selector::All);
        assert_eq!("omega".parse::<Selector>().unwrap(), Selector::Omega);
        assert!("wat".parse::<Selector>().is_err());
    }

    #[test]
    fn omega_suite_runs_clean() {
        let catalog = Catalog::built_in(4).unwrap();
        let config = SuiteConfig { selector: Selector::Omega, ..Default::default() };
        let mut out = Vec::new();
        let outcome = run_suite(&catalog, &config, &mut out).unwrap();
        assert_eq!(outcome.exit_code, 0);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("PASS omega-counterexample"));
        assert!(text.contains("omega_witness"));
    }

    #[test]
    fn small_cores_suite_with_verify() {
        let catalog = Catalog::built_in(6).unwrap();
        let config = SuiteConfig {
            selector: Selector::Cores,
            max_order: Some(6),
            verify: true,
            ..Default::default()
        };
        let mut out = Vec::new();
        let outcome = run_suite(&catalog, &config, &mut out).unwrap();
        assert_eq!(outcome.exit_code, 0, "{}", String::from_utf8_lossy(&out));
    }

    #[test]
    fn cores_suite_without_verify_skips_the_scans() {
        let catalog = Catalog::built_in(4).unwrap();
        let config =
            SuiteConfig { selector: Selector::Cores, max_order: Some(4), ..Default::default() };
        let mut out = Vec::new();
        let outcome = run_suite(&catalog, &config, &mut out).unwrap();
        assert_eq!(outcome.exit_code, 0);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("SKIP core-terminality"));
        assert!(text.contains("SKIP fibrewise-adjoint"));
    }
}
