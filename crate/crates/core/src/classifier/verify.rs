//! Verification suites: recomputation of the bundled table rows, completeness
//! of the almost-cyclic search against them, corollary and bound consistency,
//! the deleted-module classifier equivalence sweep, oracle agreement, and the
//! two-adic spin-degree inequality.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::characters::{
    matrix_oracle_wn, sn_irrep_spectrum, specht_spectrum_with, GroupKind, SpechtModule,
};
use crate::cyclotomic::RootIndex;
use crate::error::Result;
use crate::partition::Partition;
use crate::perm::{enumerate_p_classes, verify_generation_lemma, CycleType};
use crate::spectra::{analyze, classify_wn, spectrum_on_wn, wn_degree_is_minimal, Verdict};

use super::dataset::{EValue, RowScope, TableRow};
use super::search::{search_almost_cyclic, ClassificationHit, SEARCH_DEGREE_CAP};

/// One record of a verification run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// "ok", "violation", "dataset-only", or "note".
    pub status: String,
    pub details: String,
    /// Which route produced the numbers: formula, character, matrix-oracle,
    /// or dataset.
    pub provenance: String,
}

/// Machine-readable outcome of a verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub violations: Vec<String>,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            schema: 1,
            suite: suite.to_string(),
            passed: true,
            violations: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn ok(&mut self, name: impl Into<String>, details: impl Into<String>, provenance: &str) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: "ok".into(),
            details: details.into(),
            provenance: provenance.into(),
        });
    }

    fn note(&mut self, name: impl Into<String>, details: impl Into<String>, provenance: &str) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: "note".into(),
            details: details.into(),
            provenance: provenance.into(),
        });
    }

    fn echo(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.checks.push(CheckRecord {
            name: name.into(),
            status: "dataset-only".into(),
            details: details.into(),
            provenance: "dataset".into(),
        });
    }

    fn violation(&mut self, name: impl Into<String>, details: impl Into<String>) {
        let name = name.into();
        let details = details.into();
        self.violations.push(format!("{name}: {details}"));
        self.checks.push(CheckRecord {
            name,
            status: "violation".into(),
            details,
            provenance: "formula".into(),
        });
        self.passed = false;
    }
}

fn primes_up_to(n: u32) -> Vec<u32> {
    (2..=n).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}

/// Cache of search results keyed by (n, group, p).
pub struct HitCache {
    map: BTreeMap<(u32, bool, u32), Vec<ClassificationHit>>,
}

impl HitCache {
    pub fn new() -> Self {
        HitCache {
            map: BTreeMap::new(),
        }
    }

    pub fn hits(&mut self, n: u32, group: GroupKind, p: u32) -> Result<&[ClassificationHit]> {
        let key = (n, group == GroupKind::Alternating, p);
        if !self.map.contains_key(&key) {
            let hits = search_almost_cyclic(n, group, p)?;
            self.map.insert(key, hits);
        }
        Ok(self.map.get(&key).unwrap())
    }
}

impl Default for HitCache {
    fn default() -> Self {
        Self::new()
    }
}

fn exceptional_matches(e: &EValue, report_e: Option<RootIndex>) -> bool {
    match report_e {
        None => *e == EValue::Absent,
        Some(r) => {
            let n = r.normalized();
            e.matches_root(n.m, n.j)
        }
    }
}

fn hit_matches_row(hit: &ClassificationHit, row: &TableRow) -> bool {
    hit.dim() == row.dim
        && hit.class.order() == row.o_g
        && hit.report.deg == row.corrected_deg()
        && hit.report.max_mult == row.max_mult
        && exceptional_matches(&row.e, hit.report.exceptional)
}

/// Recomputes every row flagged recomputable and reports matches; rows
/// flagged dataset-only are echoed. Degree errata recorded in annotations are
/// honored (the match runs against the corrected degree) and surfaced as
/// notes.
pub fn verify_table_rows(dataset: &[TableRow], cache: &mut HitCache) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("tables");
    for row in dataset {
        let name = format!(
            "table {} line {}: {} dim {} o(g) {}{}",
            row.source_table,
            row.csv_line,
            row.display_label(),
            row.dim,
            row.o_g,
            row.class_tag.as_deref().unwrap_or("")
        );
        if row.scope == RowScope::DatasetOnly {
            report.echo(name, format!("ell {} deg {} e {} m {}", row.ell, row.deg, row.e, row.max_mult));
            continue;
        }
        let n = row.degree_n()?;
        let group = if row.is_plain_alternating() {
            GroupKind::Alternating
        } else {
            GroupKind::Symmetric
        };
        let p = row.class_prime() as u32;
        let hits = cache.hits(n, group, p)?;
        let matching: Vec<&ClassificationHit> =
            hits.iter().filter(|h| hit_matches_row(h, row)).collect();
        if matching.is_empty() {
            report.violation(
                name,
                format!(
                    "no computed (character, class) pair realizes dim {} o {} deg {} e {} m {}",
                    row.dim,
                    row.o_g,
                    row.corrected_deg(),
                    row.e,
                    row.max_mult
                ),
            );
            continue;
        }
        if row.e.is_paired() {
            let has_plus = matching
                .iter()
                .any(|h| h.report.exceptional.map(|r| r.order()) == Some(1));
            let has_minus = matching
                .iter()
                .any(|h| h.report.exceptional.map(|r| r.order()) == Some(2));
            let has_i = matching
                .iter()
                .any(|h| h.report.exceptional.map(|r| r.order()) == Some(4));
            let pair_ok = match row.e {
                EValue::PlusMinusOne | EValue::MinusPlusOne => has_plus && has_minus,
                EValue::PlusMinusI => has_i,
                _ => true,
            };
            if !pair_ok {
                report.violation(
                    name,
                    "paired eigenvalue descriptor not realized by both signs".to_string(),
                );
                continue;
            }
        }
        let realized: Vec<String> = matching
            .iter()
            .map(|h| format!("{} @ {}", h.character, h.class))
            .collect();
        if row.has_deg_erratum() {
            report.note(
                format!("{name} (degree erratum)"),
                format!(
                    "transcribed deg {} corrected to {}; realized by {}",
                    row.deg,
                    row.corrected_deg(),
                    realized.join(", ")
                ),
                "character",
            );
        }
        report.ok(name, format!("realized by {}", realized.join(", ")), "character");
    }
    Ok(report)
}

/// Completeness of the almost-cyclic catalogue for alternating groups in
/// characteristic 0: every non-subnatural hit at degrees 5..=10 matches a
/// recomputable row, and degrees 11 and 12 admit no non-subnatural hit at
/// all. Also checks the deleted-module shape constraint on subnatural hits.
pub fn verify_completeness(
    dataset: &[TableRow],
    cache: &mut HitCache,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("completeness");
    let in_scope: Vec<&TableRow> = dataset
        .iter()
        .filter(|r| r.scope == RowScope::Recomputable && r.is_plain_alternating())
        .collect();
    for n in 5..=SEARCH_DEGREE_CAP {
        for p in primes_up_to(n) {
            let hits = cache.hits(n, GroupKind::Alternating, p)?.to_vec();
            for hit in &hits {
                if hit.subnatural {
                    let ct = hit.class.cycle_type();
                    let nontrivial = ct.parts().iter().filter(|&&c| c > 1).count();
                    let two_cycle_shape = ct.parts().len() == 2
                        && ct.parts()[1] == 2
                        && p == 2
                        && n == ct.parts()[0] + 2;
                    if !(nontrivial == 1 || two_cycle_shape) {
                        report.violation(
                            format!("shape constraint A_{n} p={p}"),
                            format!(
                                "subnatural hit {} @ {} violates the deleted-module shape classification",
                                hit.character, hit.class
                            ),
                        );
                    }
                    continue;
                }
                if n > 10 {
                    report.violation(
                        format!("emptiness A_{n} p={p}"),
                        format!(
                            "unexpected non-subnatural hit {} @ {} at degree {n}",
                            hit.character, hit.class
                        ),
                    );
                    continue;
                }
                let covered = in_scope
                    .iter()
                    .any(|row| row.degree_n().ok() == Some(n) && hit_matches_row(hit, row));
                if !covered {
                    report.violation(
                        format!("completeness A_{n} p={p}"),
                        format!(
                            "non-subnatural hit {} @ {} (dim {}, deg {}, m {}) matches no catalogued row",
                            hit.character,
                            hit.class,
                            hit.dim(),
                            hit.report.deg,
                            hit.report.max_mult
                        ),
                    );
                }
            }
            if report.passed {
                report.ok(
                    format!("A_{n} p={p}"),
                    "all non-subnatural hits catalogued".to_string(),
                    "character",
                );
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// corollary consistency

struct CorollaryCase {
    o_g: u64,
    dim: u64,
    deg: u64,
    /// admissible (n, characteristic condition) branches
    branches: Vec<(u32, super::dataset::EllCondition)>,
    label: &'static str,
}

fn ell_conditions_intersect(
    a: &super::dataset::EllCondition,
    b: &super::dataset::EllCondition,
    class_prime: u64,
) -> bool {
    // discretized over the characteristics that occur at desk scale
    [0u64, 2, 3, 5, 7, 11, 13]
        .iter()
        .any(|&ell| a.admits(ell, class_prime) && b.admits(ell, class_prime))
}

/// Checks the two filter statements over the bundled dataset: rows of
/// double-cover representations with deg < o(g) - 1 must appear among the
/// enumerated small cases.
pub fn verify_corollaries(dataset: &[TableRow]) -> Result<VerificationReport> {
    use super::dataset::EllCondition as EC;
    let mut report = VerificationReport::new("corollaries");
    let parse = |s: &str| EC::parse(s).unwrap();

    // odd-order filter: representations of double covers of alternating
    // groups (cover 1 and 2 rows of table 1.1)
    let odd_cases = vec![
        CorollaryCase {
            o_g: 9,
            dim: 8,
            deg: 7,
            branches: vec![(9, parse("≠2")), (10, parse("=5"))],
            label: "order-9 degree-8",
        },
        CorollaryCase {
            o_g: 5,
            dim: 3,
            deg: 3,
            branches: vec![(5, parse("≠2")), (6, parse("=3"))],
            label: "order-5 degree-3",
        },
        CorollaryCase {
            o_g: 7,
            dim: 4,
            deg: 4,
            branches: vec![(7, parse("any")), (8, parse("=2"))],
            label: "order-7 degree-4",
        },
        CorollaryCase {
            o_g: 5,
            dim: 2,
            deg: 2,
            branches: vec![(6, parse("=3")), (5, parse("any"))],
            label: "order-5 degree-2",
        },
    ];
    // 2-element filter: double covers 2.A_n / 2.S_n (tables 2.1 and 2.2)
    let even_cases = vec![
        CorollaryCase {
            o_g: 4,
            dim: 2,
            deg: 2,
            branches: vec![(6, parse("=3"))],
            label: "2.A_6 order-4 degree-2",
        },
        CorollaryCase {
            o_g: 4,
            dim: 2,
            deg: 2,
            branches: vec![(5, parse("=5"))],
            label: "2.S_5 order-4 degree-2",
        },
    ];

    let mut filtered = 0;
    for row in dataset {
        let (cases, applicable) = if row.source_table == "1.1" {
            (&odd_cases, row.cover_c <= 2)
        } else if row.source_table == "2.1" || row.source_table == "2.2" {
            (&even_cases, row.cover_c == 2)
        } else {
            continue;
        };
        if !applicable || row.o_g < 2 {
            continue;
        }
        let deg = row.corrected_deg();
        if deg + 1 >= row.o_g {
            continue; // deg >= o(g) - 1: not in the filter
        }
        filtered += 1;
        let name = format!(
            "corollary filter: table {} line {} ({} dim {} o {} deg {})",
            row.source_table,
            row.csv_line,
            row.display_label(),
            row.dim,
            row.o_g,
            deg
        );
        if row.o_g > 9 {
            report.violation(name, "filtered row has order above 9".to_string());
            continue;
        }
        let n = row.degree_n()?;
        let hit = cases
            .iter()
            .find(|c| c.o_g == row.o_g && c.dim == row.dim && c.deg == deg && c.branches.iter().any(|(bn, _)| *bn == n));
        match hit {
            None => {
                report.violation(
                    name,
                    "filtered row matches none of the enumerated cases".to_string(),
                );
            }
            Some(case) => {
                let branch = case
                    .branches
                    .iter()
                    .find(|(bn, _)| *bn == n)
                    .expect("branch found above");
                if ell_conditions_intersect(&row.ell, &branch.1, row.class_prime()) {
                    report.ok(name, format!("matches case {}", case.label), "dataset");
                } else {
                    report.note(
                        name,
                        format!(
                            "matches case {} by (n, order, dim, deg); the row characteristic {} sits outside the case list {}",
                            case.label, row.ell, branch.1
                        ),
                        "dataset",
                    );
                }
            }
        }
    }
    report.note(
        "filter size",
        format!("{filtered} rows satisfy deg < o(g) - 1"),
        "dataset",
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// global bounds

/// Bound checks over computed hits: dim <= n + 1 always; non-subnatural hits
/// additionally have dim <= 8 and o(g) <= 9; almost-cyclic n-cycle classes of
/// A_n (n odd) have dim <= 2(n - 1).
pub fn verify_bounds(hits: &[ClassificationHit]) -> VerificationReport {
    let mut report = VerificationReport::new("bounds");
    let mut checked = 0usize;
    for hit in hits {
        checked += 1;
        let n = hit.n;
        let dim = hit.dim();
        let name = format!("{} {} @ {}", hit.group, hit.character, hit.class);
        if dim > (n + 1) as u64 {
            report.violation(name.clone(), format!("dim {dim} exceeds n + 1 = {}", n + 1));
        }
        if !hit.subnatural && (dim > 8 || hit.class.order() > 9) {
            report.violation(
                name.clone(),
                format!(
                    "non-subnatural hit with dim {dim} / o(g) {} outside the (<= 8, <= 9) range",
                    hit.class.order()
                ),
            );
        }
        if hit.group == GroupKind::Alternating
            && n % 2 == 1
            && hit.class.cycle_type().parts() == [n]
            && dim > 2 * (n as u64 - 1)
        {
            report.violation(
                name,
                format!("n-cycle class with dim {dim} > 2(n-1) = {}", 2 * (n - 1)),
            );
        }
    }
    report.ok(
        "bounds",
        format!("{checked} hits checked against the dimension and order bounds"),
        "character",
    );
    report
}

/// Collects hits over a degree range for the bounds suite.
pub fn collect_hits(
    n_range: std::ops::RangeInclusive<u32>,
    cache: &mut HitCache,
) -> Result<Vec<ClassificationHit>> {
    let mut all = Vec::new();
    for n in n_range {
        for p in primes_up_to(n) {
            for group in [GroupKind::Alternating, GroupKind::Symmetric] {
                all.extend(cache.hits(n, group, p)?.iter().cloned());
            }
        }
    }
    Ok(all)
}

// ---------------------------------------------------------------------------
// two-adic spin degree bound

/// Binary digit sum.
pub fn binary_digit_sum(n: u64) -> u32 {
    n.count_ones()
}

/// Whether 2^floor((n - s - 1)/2) > 2(n - 1) for s the binary digit sum.
pub fn spin_degree_bound_holds(n: u64) -> bool {
    let s = binary_digit_sum(n) as u64;
    if n < s + 1 {
        return false;
    }
    let k = (n - s - 1) / 2;
    if k >= 64 {
        return true; // 2(n-1) < 2^64 at every degree this library touches
    }
    (1u128 << k) > 2 * (n as u128 - 1)
}

/// Sweeps the inequality: it must hold for every 14 <= n <= n_max, and the
/// set of failures among n <= 13 is reported (and frozen as a golden file).
pub fn verify_spin_degree_bound(n_max: u64) -> (VerificationReport, Vec<u64>) {
    let mut report = VerificationReport::new("wagner");
    let mut failures = Vec::new();
    for n in 5..=13u64 {
        if !spin_degree_bound_holds(n) {
            failures.push(n);
        }
    }
    let mut first_violation = None;
    for n in 14..=n_max {
        if !spin_degree_bound_holds(n) {
            first_violation = Some(n);
            break;
        }
    }
    match first_violation {
        None => report.ok(
            "spin degree bound",
            format!("holds for every 14 <= n <= {n_max}; failures below 14: {failures:?}"),
            "formula",
        ),
        Some(n) => report.violation("spin degree bound", format!("fails at n = {n}")),
    }
    let golden: serde_json::Value =
        serde_json::from_str(super::dataset::BUNDLED_SPIN_BOUND_FAILURES).unwrap();
    let golden_failures: Vec<u64> = golden["failures"]
        .as_array()
        .map(|a| a.iter().filter_map(|v| v.as_u64()).collect())
        .unwrap_or_default();
    if golden_failures != failures {
        report.violation(
            "spin degree golden file",
            format!("computed failures {failures:?} differ from the frozen set {golden_failures:?}"),
        );
    } else {
        report.ok(
            "spin degree golden file",
            "failure set matches the frozen golden data".to_string(),
            "dataset",
        );
    }
    (report, failures)
}

// ---------------------------------------------------------------------------
// deleted-module equivalence sweep

/// Characteristics exercised by the sweeps.
pub const SWEEP_CHARACTERISTICS: [u64; 6] = [0, 2, 3, 5, 7, 11];
pub const SWEEP_PRIMES: [u32; 5] = [2, 3, 5, 7, 11];

/// For every degree, prime, p-power class and admissible characteristic:
/// the closed-form classifier, the combinatorial spectrum and the explicit
/// matrix oracle must agree exactly, the minimal-polynomial degree obeys
/// deg >= |g| - 1, and the equality cases are pinned down.
pub fn verify_wn_equivalence(n_max: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("lemma33e");
    let n_max = n_max.min(crate::characters::ORACLE_DEGREE_CAP);
    let mut cases = 0usize;
    for n in 5..=n_max {
        for &p in SWEEP_PRIMES.iter().filter(|&&p| p <= n) {
            for cls in enumerate_p_classes(n, p)? {
                let g = cls.base.canonical_rep();
                let order = cls.order();
                for &ell in SWEEP_CHARACTERISTICS
                    .iter()
                    .filter(|&&ell| ell == 0 || order % ell != 0)
                {
                    cases += 1;
                    let name = format!("n={n} {} ell={ell}", cls.base);
                    let closed = classify_wn(n, &cls, ell)?;
                    let formula = analyze(&spectrum_on_wn(&cls.base, ell, false)?);
                    let oracle = analyze(&matrix_oracle_wn(&g, ell)?);
                    if closed != formula || formula != oracle {
                        report.violation(
                            name.clone(),
                            format!(
                                "classifier/formula/matrix disagree: {closed:?} vs {formula:?} vs {oracle:?}"
                            ),
                        );
                        continue;
                    }
                    // degree bound with exact equality characterization
                    if formula.deg + 1 < order {
                        report.violation(
                            name.clone(),
                            format!("deg {} < |g| - 1 = {}", formula.deg, order - 1),
                        );
                        continue;
                    }
                    let equality = formula.deg + 1 == order;
                    if equality != wn_degree_is_minimal(n, &cls, ell) {
                        report.violation(
                            name.clone(),
                            "degree-equality closed form disagrees with the spectrum".to_string(),
                        );
                        continue;
                    }
                    let divides = ell > 0 && n as u64 % ell == 0;
                    if !divides {
                        // ordinary-slice statement: equality exactly for the
                        // full cycle, which is then cyclic
                        let is_full_cycle = cls.base.parts() == [n];
                        if equality != is_full_cycle
                            || (equality && formula.verdict != Verdict::Cyclic)
                        {
                            report.violation(
                                name.clone(),
                                "ordinary-slice equality case mismatch".to_string(),
                            );
                            continue;
                        }
                    } else if equality && formula.verdict.is_almost_cyclic() {
                        // dividing characteristic: equality on almost-cyclic
                        // classes happens for two-part shapes only, covering
                        // [2, n-2] (the repeated eigenvalue -1) and the
                        // two-part cyclic shapes
                        let parts = cls.base.parts();
                        let ok = parts.len() == 2
                            && (formula.verdict == Verdict::Cyclic
                                || (parts[1] == 2
                                    && formula.exceptional == Some(RootIndex::new(2, 1))
                                    && formula.max_mult == 2));
                        if !ok {
                            report.violation(
                                name.clone(),
                                "modular equality case outside the two-part classification"
                                    .to_string(),
                            );
                            continue;
                        }
                    }
                }
            }
        }
    }
    report.ok(
        "equivalence sweep",
        format!("{cases} (class, characteristic) cases agree across all three routes"),
        "matrix-oracle",
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// oracle agreement

/// Character-transform spectra against the polytabloid matrices (all shapes,
/// degrees up to 7) and against the deleted-module rule (degrees up to 12).
pub fn verify_oracles(specht_max: u32, wn_max: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("oracles");
    let specht_max = specht_max.min(crate::characters::SPECHT_DEGREE_CAP);
    let mut pairs = 0usize;
    for n in 2..=specht_max {
        // identity plus every prime-power class
        let mut classes = vec![CycleType::new(vec![1; n as usize])?];
        for p in primes_up_to(n) {
            classes.extend(enumerate_p_classes(n, p)?.into_iter().map(|c| c.base));
        }
        for lambda in Partition::all(n) {
            let module = SpechtModule::new(&lambda)?;
            for ct in &classes {
                pairs += 1;
                let via_chars = sn_irrep_spectrum(&lambda, ct)?;
                let via_matrix = specht_spectrum_with(&module, &ct.canonical_rep())?;
                if via_chars != via_matrix {
                    report.violation(
                        format!("shape {lambda} at {ct}"),
                        format!("character spectrum {via_chars} != matrix spectrum {via_matrix}"),
                    );
                }
            }
        }
    }
    report.ok(
        "polytabloid agreement",
        format!("{pairs} (shape, class) spectra agree with the explicit matrices"),
        "matrix-oracle",
    );
    let wn_max = wn_max.min(crate::characters::ORACLE_DEGREE_CAP);
    let mut pairs = 0usize;
    for n in 2..=wn_max {
        let lambda = Partition::from_desc(vec![n - 1, 1].into_iter().filter(|&x| x > 0).collect());
        for p in primes_up_to(n) {
            for cls in enumerate_p_classes(n, p)? {
                pairs += 1;
                let via_chars = sn_irrep_spectrum(&lambda, &cls.base)?;
                let via_rule = spectrum_on_wn(&cls.base, 0, false)?;
                if via_chars != via_rule {
                    report.violation(
                        format!("deleted module at n={n} {}", cls.base),
                        format!("character spectrum {via_chars} != rule spectrum {via_rule}"),
                    );
                }
            }
        }
    }
    report.ok(
        "deleted-module agreement",
        format!("{pairs} deleted-module spectra agree with the combinatorial rule"),
        "formula",
    );
    Ok(report)
}

// ---------------------------------------------------------------------------
// generation witnesses

/// Verified two-element generation witnesses for the degrees covered by the
/// acceptance range.
pub fn verify_generation(degrees: &[u32]) -> VerificationReport {
    let mut report = VerificationReport::new("generation");
    for &n in degrees {
        match verify_generation_lemma(n) {
            Ok(witnesses) => {
                for w in witnesses {
                    report.ok(
                        format!("n={n} {:?}", w.kind),
                        format!(
                            "generators {} and {} (conjugator {}) generate a group of order {}",
                            w.generators[0], w.generators[1], w.conjugator, w.group_order
                        ),
                        "matrix-oracle",
                    );
                }
            }
            Err(e) => report.violation(format!("n={n}"), e.to_string()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::dataset::load_bundled;

    #[test]
    fn spin_bound_arithmetic() {
        // n = 14: s = 3, floor(10/2) = 5, 32 > 26
        assert!(spin_degree_bound_holds(14));
        // n = 13: s = 3, floor(9/2) = 4, 16 <= 24
        assert!(!spin_degree_bound_holds(13));
        let (report, failures) = verify_spin_degree_bound(1000);
        assert!(report.passed, "{:?}", report.violations);
        assert_eq!(failures, vec![5, 6, 7, 8, 9, 10, 11, 12, 13]);
    }

    #[test]
    fn corollaries_pass_on_bundled_data() {
        let rows = load_bundled().unwrap();
        let report = verify_corollaries(&rows).unwrap();
        assert!(report.passed, "{:?}", report.violations);
        // the filter is non-empty
        assert!(report.checks.iter().any(|c| c.status == "ok"));
    }

    #[test]
    fn constructed_bound_violation_is_flagged() {
        use super::super::search::{CharLabel, ClassLabel};
        use crate::spectra::AlmostCyclicReport;
        let hit = ClassificationHit {
            n: 9,
            group: GroupKind::Alternating,
            character: CharLabel::Sn(Partition::from_desc(vec![6, 3, 2, 1])),
            class: ClassLabel::Sn(CycleType::new(vec![3, 3, 3]).unwrap()),
            report: AlmostCyclicReport {
                verdict: Verdict::AlmostCyclic,
                exceptional: Some(RootIndex::new(1, 0)),
                deg: 3,
                max_mult: 10,
            },
            subnatural: false,
        };
        let report = verify_bounds(&[hit]);
        assert!(!report.passed);
    }
}
