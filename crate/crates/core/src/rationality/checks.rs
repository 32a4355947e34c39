//! Theorem and open-question checks for cut groups.
//!
//! Every check answers PASS, FAIL or SKIP. SKIP means the hypothesis of the
//! statement is not met. A FAIL on `sylow3` or `q3` would be a counterexample
//! to an open question, so it always carries witness generators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{classify_class, group_rationality, GroupReport};
use crate::arith::{is_p_power, p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::structure::{
    abelianization_exponent_divides, exponent, is_elementary_abelian, p_core, sylow, Subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Nontrivial cut groups have order divisible by 2 or 3.
    Bmp,
    /// Solvable cut groups have `|Q(G):Q| ≤ 32`.
    Tent,
    /// Solvable rational groups have prime divisors in {2, 3, 5}.
    GowPrimes,
    /// Solvable cut groups have prime divisors in {2, 3, 5, 7}.
    CutPrimes,
    /// Solvable rational groups have a normal elementary abelian Sylow 5-subgroup.
    Hegedus,
    /// Cut groups have `exp(P/P') | 3` for `P ∈ Syl_3`.
    Ppe,
    /// Open: solvable cut groups have `exp O_p(G) | p` for p in {5, 7}.
    Q3,
    /// Open: Sylow 3-subgroups of cut groups are cut.
    Sylow3,
    /// A 3-element is inverse semi-rational in G iff it is so in some Sylow 3-subgroup containing it.
    Lemma61,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Bmp,
        Check::Tent,
        Check::GowPrimes,
        Check::CutPrimes,
        Check::Hegedus,
        Check::Ppe,
        Check::Q3,
        Check::Sylow3,
        Check::Lemma61,
    ];

    /// The seven checks bundled by [`conjecture_suite`].
    pub const SUITE: [Check; 7] = [
        Check::Bmp,
        Check::Tent,
        Check::GowPrimes,
        Check::CutPrimes,
        Check::Hegedus,
        Check::Ppe,
        Check::Q3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bmp => "bmp",
            Check::Tent => "tent",
            Check::GowPrimes => "gow_primes",
            Check::CutPrimes => "cut_primes",
            Check::Hegedus => "hegedus",
            Check::Ppe => "ppe",
            Check::Q3 => "q3",
            Check::Sylow3 => "sylow3",
            Check::Lemma61 => "lemma61",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::BadParam(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        })
    }
}

/// Generators of the subgroup that violates a statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub description: String,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl Witness {
    fn from_subgroup(description: impl Into<String>, h: &Subgroup) -> Self {
        Self {
            description: description.into(),
            degree: h.as_group().degree(),
            generators: h.gens().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub status: CheckStatus,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn pass(detail: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    fn skip(detail: impl Into<String>) -> Self {
        Self {
            status: CheckStatus::Skip,
            detail: detail.into(),
            witness: None,
        }
    }

    fn fail(detail: impl Into<String>, witness: Option<Witness>) -> Self {
        Self {
            status: CheckStatus::Fail,
            detail: detail.into(),
            witness,
        }
    }

    fn verdict(ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(detail)
        } else {
            Self::fail(detail, None)
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

fn primes_within(order: u64, allowed: &[u64]) -> (bool, Vec<u64>) {
    let primes = prime_divisors(order);
    (primes.iter().all(|p| allowed.contains(p)), primes)
}

fn bmp(report: &GroupReport) -> CheckResult {
    if !report.is_cut {
        return CheckResult::skip("not cut");
    }
    if report.order == 1 {
        return CheckResult::skip("trivial group");
    }
    let ok = report.order.is_multiple_of(2) || report.order.is_multiple_of(3);
    CheckResult::verdict(ok, format!("|G| = {}", report.order))
}

fn tent(report: &GroupReport) -> CheckResult {
    if !(report.solvable && report.is_cut) {
        return CheckResult::skip("not a solvable cut group");
    }
    CheckResult::verdict(
        report.qg_degree <= 32,
        format!("|Q(G):Q| = {} (bound 32)", report.qg_degree),
    )
}

fn gow_primes(report: &GroupReport) -> CheckResult {
    if !(report.solvable && report.is_rational) {
        return CheckResult::skip("not a solvable rational group");
    }
    let (ok, primes) = primes_within(report.order, &[2, 3, 5]);
    CheckResult::verdict(ok, format!("prime divisors {primes:?}"))
}

fn cut_primes(report: &GroupReport) -> CheckResult {
    if !(report.solvable && report.is_cut) {
        return CheckResult::skip("not a solvable cut group");
    }
    let (ok, primes) = primes_within(report.order, &[2, 3, 5, 7]);
    CheckResult::verdict(ok, format!("prime divisors {primes:?}"))
}

fn hegedus(g: &PermGroup, report: &GroupReport, cap: usize) -> Result<CheckResult> {
    if !(report.solvable && report.is_rational) {
        return Ok(CheckResult::skip("not a solvable rational group"));
    }
    if !report.order.is_multiple_of(5) {
        return Ok(CheckResult::skip("5 does not divide |G|"));
    }
    let syl = sylow(g, 5, cap)?;
    let core = p_core(g, 5, cap)?;
    let normal = core.order() == syl.order();
    let elementary = is_elementary_abelian(syl.as_group(), 5, cap)?;
    let detail = format!(
        "|Syl_5| = {}, |O_5| = {}, elementary abelian: {elementary}",
        syl.order(),
        core.order()
    );
    if normal && elementary {
        Ok(CheckResult::pass(detail))
    } else {
        Ok(CheckResult::fail(
            detail,
            Some(Witness::from_subgroup("Sylow 5-subgroup", &syl)),
        ))
    }
}

fn ppe(g: &PermGroup, report: &GroupReport, cap: usize) -> Result<CheckResult> {
    if !report.is_cut {
        return Ok(CheckResult::skip("not cut"));
    }
    let syl = sylow(g, 3, cap)?;
    let ok = abelianization_exponent_divides(syl.as_group(), 3, cap)?;
    let detail = format!("|Syl_3| = {}, exp(P/P') | 3: {ok}", syl.order());
    if ok {
        Ok(CheckResult::pass(detail))
    } else {
        Ok(CheckResult::fail(
            detail,
            Some(Witness::from_subgroup("Sylow 3-subgroup", &syl)),
        ))
    }
}

fn q3(g: &PermGroup, report: &GroupReport, cap: usize) -> Result<CheckResult> {
    if !(report.solvable && report.is_cut) {
        return Ok(CheckResult::skip("not a solvable cut group"));
    }
    let mut parts = Vec::new();
    for p in [5u64, 7] {
        let core = p_core(g, p, cap)?;
        let exp = exponent(core.as_group(), cap)?;
        parts.push(format!("exp O_{p} = {exp}"));
        if p % exp != 0 {
            return Ok(CheckResult::fail(
                parts.join(", "),
                Some(Witness::from_subgroup(format!("O_{p}(G)"), &core)),
            ));
        }
    }
    Ok(CheckResult::pass(parts.join(", ")))
}

/// Is the Sylow 3-subgroup of a cut group again cut?
pub fn sylow3_check(g: &PermGroup, cap: usize) -> Result<CheckResult> {
    let report = group_rationality(g, cap)?;
    sylow3_with(g, &report, cap)
}

fn sylow3_with(g: &PermGroup, report: &GroupReport, cap: usize) -> Result<CheckResult> {
    if !report.is_cut {
        return Ok(CheckResult::skip("not cut"));
    }
    let syl = sylow(g, 3, cap)?;
    let syl_report = group_rationality(syl.as_group(), cap)?;
    let detail = format!("|Syl_3| = {}, cut: {}", syl.order(), syl_report.is_cut);
    if syl_report.is_cut {
        Ok(CheckResult::pass(detail))
    } else {
        Ok(CheckResult::fail(
            detail,
            Some(Witness::from_subgroup("non-cut Sylow 3-subgroup", &syl)),
        ))
    }
}

/// Compares inverse semi-rationality of each 3-element in `G` and in a Sylow 3-subgroup.
///
/// For every class of 3-elements, the verdict in `G` must equal "some conjugate
/// lying in `P` is inverse semi-rational in `P`". Conjugating `P` instead of the
/// element ranges over every Sylow 3-subgroup containing the element.
pub fn lemma61_check(g: &PermGroup, cap: usize) -> Result<CheckResult> {
    let table = g.class_table(cap)?;
    let syl = sylow(g, 3, cap)?;
    let syl_table = syl.as_group().class_table(cap)?;
    let els = table.elements();
    let mut checked = 0;
    for c in 0..table.len() {
        if !is_p_power(table.rep_order(c), 3) {
            continue;
        }
        checked += 1;
        let in_g = classify_class(&table, c).is_inverse_semirational;
        let mut conjugates_in_p = table
            .members(c)
            .iter()
            .map(|&i| &els[i])
            .filter(|x| syl.contains(x))
            .peekable();
        if conjugates_in_p.peek().is_none() {
            return Ok(CheckResult::fail(
                format!("class {c} has no conjugate in the Sylow 3-subgroup"),
                Some(Witness::from_subgroup("Sylow 3-subgroup", &syl)),
            ));
        }
        let in_p = conjugates_in_p.any(|x| {
            let pc = syl_table.class_of(x).expect("x lies in P");
            classify_class(&syl_table, pc).is_inverse_semirational
        });
        if in_g != in_p {
            return Ok(CheckResult::fail(
                format!(
                    "class {c} (order {}): inverse semi-rational in G = {in_g}, in P = {in_p}",
                    table.rep_order(c)
                ),
                Some(Witness::from_subgroup("Sylow 3-subgroup", &syl)),
            ));
        }
    }
    Ok(CheckResult::pass(format!(
        "{checked} classes of 3-elements agree (|Syl_3| = {})",
        p_part(table.group_order() as u64, 3)
    )))
}

/// Runs the selected checks against an existing report.
pub fn run_checks(
    g: &PermGroup,
    report: &GroupReport,
    checks: &[Check],
    cap: usize,
) -> Result<BTreeMap<String, CheckResult>> {
    let mut out = BTreeMap::new();
    for &check in checks {
        let result = match check {
            Check::Bmp => bmp(report),
            Check::Tent => tent(report),
            Check::GowPrimes => gow_primes(report),
            Check::CutPrimes => cut_primes(report),
            Check::Hegedus => hegedus(g, report, cap)?,
            Check::Ppe => ppe(g, report, cap)?,
            Check::Q3 => q3(g, report, cap)?,
            Check::Sylow3 => sylow3_with(g, report, cap)?,
            Check::Lemma61 => lemma61_check(g, cap)?,
        };
        out.insert(check.name().to_string(), result);
    }
    Ok(out)
}

/// The seven bundled theorem and question checks.
pub fn conjecture_suite(g: &PermGroup, cap: usize) -> Result<BTreeMap<String, CheckResult>> {
    let report = group_rationality(g, cap)?;
    run_checks(g, &report, &Check::SUITE, cap)
}
