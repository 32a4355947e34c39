// The acceptance criteria, run in order. Each prints one PASS/FAIL line;
// the test fails if any criterion does.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use cutgroups::constructions::{self, abelian_invariant_factor_lists, iterated_wreath, sylnorm, wreath};
use cutgroups::corpus::GroupRecord;
use cutgroups::rationality::{
    alternating_field, group_rationality, is_cut_bruteforce, qg_degree, qg_degree_alternating,
    Check,
};
use cutgroups::structure::{abelianization_exponent_divides, exponent, is_solvable, p_core, sylow};
use cutgroups::survey::{report_json, run_survey, SurveyConfig, SurveyReport, NONCUT_SYLOW2};
use cutgroups::{PermGroup, DEFAULT_CAP};
use rand::{Rng, SeedableRng};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn judge(problems: Vec<String>, ok_detail: String) -> Outcome {
    if problems.is_empty() {
        pass(ok_detail)
    } else {
        fail(problems.join("; "))
    }
}

/// Lines go straight to stdout so they show up without `--nocapture`.
fn report_line(n: usize, limit: Option<Duration>, elapsed: Duration, outcome: &Outcome) {
    let status = if outcome.ok { "PASS" } else { "FAIL" };
    let limit = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
    let line = format!(
        "criterion {n:>2}: {status} in {:.2}s{limit}: {}\n",
        elapsed.as_secs_f64(),
        outcome.detail
    );
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
}

fn timed(
    n: usize,
    limit: Option<Duration>,
    results: &mut Vec<(usize, bool)>,
    f: impl FnOnce() -> Outcome,
) {
    let start = Instant::now();
    let mut outcome = f();
    let elapsed = start.elapsed();
    if let Some(l) = limit {
        if elapsed > l {
            outcome.ok = false;
            outcome.detail = format!("over time limit; {}", outcome.detail);
        }
    }
    report_line(n, limit, elapsed, &outcome);
    results.push((n, outcome.ok));
}

fn fails_of(report: &SurveyReport, check: Check) -> Vec<String> {
    report
        .failures
        .iter()
        .filter(|f| f.check == check.name())
        .map(|f| format!("{} FAILs {}: {}", f.id, f.check, f.detail))
        .collect()
}

fn counts(report: &SurveyReport, check: Check) -> String {
    let c = &report.aggregates.checks[check.name()];
    format!("{} {} pass, {} fail, {} skip", check.name(), c.pass, c.fail, c.skip)
}

fn group_of(records: &[GroupRecord], id: &str) -> PermGroup {
    records.iter().find(|r| r.id == id).unwrap().group().unwrap()
}

#[test]
fn acceptance() {
    let records = common::bundled();
    let mut results = Vec::new();
    let secs = Duration::from_secs;

    timed(1, Some(secs(60)), &mut results, || {
        let mut problems = Vec::new();
        let mut compared = 0;
        for rec in &records {
            let g = rec.group().unwrap();
            if g.order_u64().unwrap() > 200 {
                continue;
            }
            compared += 1;
            let fast = group_rationality(&g, DEFAULT_CAP).unwrap().is_cut;
            let slow = is_cut_bruteforce(&g, DEFAULT_CAP).unwrap();
            if fast != slow {
                problems.push(format!("{}: class method {fast}, brute force {slow}", rec.id));
            }
        }
        judge(problems, format!("{compared} groups of order <= 200 agree with brute force"))
    });

    timed(2, Some(secs(30)), &mut results, || {
        let mut problems = Vec::new();
        for n in 1..=30 {
            let cut = group_rationality(&constructions::cyclic(n).unwrap(), DEFAULT_CAP)
                .unwrap()
                .is_cut;
            if cut != [1, 2, 3, 4, 6].contains(&n) {
                problems.push(format!("C{n} cut = {cut}"));
            }
        }
        let lists = abelian_invariant_factor_lists(100);
        for factors in &lists {
            let g = constructions::abelian(factors).unwrap();
            let exp = *factors.last().unwrap();
            let brute = is_cut_bruteforce(&g, DEFAULT_CAP).unwrap();
            let fast = group_rationality(&g, DEFAULT_CAP).unwrap().is_cut;
            if brute != [2, 3, 4, 6].contains(&exp) || fast != brute {
                problems.push(format!("abelian {factors:?}: brute {brute}, classes {fast}"));
            }
        }
        judge(
            problems,
            format!("cyclic n <= 30 and {} abelian groups of order <= 100", lists.len() + 1),
        )
    });

    timed(3, None, &mut results, || {
        let mut problems = Vec::new();
        let mut classes = 0;
        for rec in &records {
            let r = group_rationality(&rec.group().unwrap(), DEFAULT_CAP).unwrap();
            for c in &r.class_reports {
                classes += 1;
                let by_field = c.field_degree == 1 || (c.field_degree == 2 && c.field_imaginary);
                if by_field != c.is_inverse_semirational {
                    problems.push(format!("{} class {}", rec.id, c.class_index));
                }
            }
        }
        judge(problems, format!("{classes} classes over {} groups", records.len()))
    });

    let survey_start = Instant::now();
    let report = run_survey(&records, &SurveyConfig::default(), "bundled.corpus");
    let survey_time = survey_start.elapsed();
    assert!(report.skipped.is_empty(), "{:?}", report.skipped);

    timed(4, None, &mut results, || {
        judge(fails_of(&report, Check::Bmp), counts(&report, Check::Bmp))
    });

    timed(5, Some(secs(120)), &mut results, || {
        let mut problems = fails_of(&report, Check::Sylow3);
        let cut_rows = report.rows.iter().filter(|r| r.cut).count();
        let sylow3_applied = report
            .rows
            .iter()
            .filter(|r| r.cut)
            .filter(|r| r.check_results.contains_key(Check::Sylow3.name()))
            .count();
        if sylow3_applied != cut_rows {
            problems.push("sylow3 not run on every cut group".into());
        }
        let findings: Vec<&str> = report
            .findings
            .iter()
            .filter(|f| f.kind == NONCUT_SYLOW2)
            .map(|f| f.id.as_str())
            .collect();
        for id in &findings {
            let row = report.row(id).unwrap();
            if !(row.cut && row.sylow2_cut == Some(false)) {
                problems.push(format!("{id} is not a cut group with non-cut Sylow 2"));
            }
        }
        if findings.is_empty() {
            problems.push("no cut group with a non-cut Sylow 2-subgroup found".into());
        }
        let outcome = judge(
            problems,
            format!(
                "sylow3 passes on {cut_rows} cut groups; non-cut Sylow 2 found in {findings:?}; survey {:.2}s",
                survey_time.as_secs_f64()
            ),
        );
        if survey_time > secs(120) {
            fail(format!("survey took {:.1}s", survey_time.as_secs_f64()))
        } else {
            outcome
        }
    });

    timed(6, None, &mut results, || {
        judge(fails_of(&report, Check::Lemma61), counts(&report, Check::Lemma61))
    });

    timed(7, None, &mut results, || {
        let mut problems = fails_of(&report, Check::Tent);
        for row in report.rows.iter().filter(|r| r.solvable && r.cut) {
            if row.qg_degree > 32 {
                problems.push(format!("{} has |Q(G):Q| = {}", row.id, row.qg_degree));
            }
        }
        let max = report
            .rows
            .iter()
            .filter(|r| r.solvable && r.cut)
            .map(|r| r.qg_degree)
            .max()
            .unwrap_or(1);
        judge(problems, format!("{}; largest degree {max}", counts(&report, Check::Tent)))
    });

    timed(8, None, &mut results, || {
        let mut problems = fails_of(&report, Check::CutPrimes);
        problems.extend(fails_of(&report, Check::GowPrimes));
        judge(
            problems,
            format!("{}; {}", counts(&report, Check::CutPrimes), counts(&report, Check::GowPrimes)),
        )
    });

    timed(9, None, &mut results, || {
        let mut problems = fails_of(&report, Check::Hegedus);
        let applicable: Vec<&str> = report
            .rows
            .iter()
            .filter(|r| r.solvable && r.rational && r.order % 5 == 0)
            .map(|r| r.id.as_str())
            .collect();
        for id in &applicable {
            let g = group_of(&records, id);
            let s5 = sylow(&g, 5, DEFAULT_CAP).unwrap();
            let o5 = p_core(&g, 5, DEFAULT_CAP).unwrap();
            let elementary = exponent(s5.as_group(), DEFAULT_CAP).unwrap() == 5 && s5.as_group().is_abelian();
            if s5.order() != o5.order() || !elementary {
                problems.push(format!("{id}: Sylow 5 not normal elementary abelian"));
            }
        }
        if applicable.is_empty() {
            problems.push("no solvable rational group with 5 | |G| in the corpus".into());
        }
        judge(problems, format!("{}; applies to {applicable:?}", counts(&report, Check::Hegedus)))
    });

    timed(10, None, &mut results, || {
        let mut problems = fails_of(&report, Check::Q3);
        for row in report.rows.iter().filter(|r| r.solvable && r.cut) {
            let g = group_of(&records, &row.id);
            for p in [5u64, 7] {
                let core = p_core(&g, p, DEFAULT_CAP).unwrap();
                let e = exponent(core.as_group(), DEFAULT_CAP).unwrap();
                if p % e != 0 {
                    problems.push(format!("{}: exp O_{p} = {e}", row.id));
                }
            }
        }
        for p in [5u64, 7] {
            let g = sylnorm(p).unwrap();
            if !is_cut_bruteforce(&g, DEFAULT_CAP).unwrap() || !is_solvable(&g) {
                problems.push(format!("sylnorm({p}) is not cut and solvable"));
            }
        }
        judge(
            problems,
            format!("{}; sylnorm(5), sylnorm(7) cut and solvable by brute force", counts(&report, Check::Q3)),
        )
    });

    timed(11, Some(secs(60)), &mut results, || {
        let mut problems = Vec::new();
        for n in 4..=7 {
            let by_types = qg_degree_alternating(n).unwrap();
            let enumerated = qg_degree(&constructions::alternating(n).unwrap(), DEFAULT_CAP).unwrap();
            if by_types != enumerated {
                problems.push(format!("A{n}: {by_types} vs {enumerated}"));
            }
        }
        let table: Vec<(usize, u64)> = (4..=12)
            .map(|n| (n, alternating_field(n, 12).unwrap().qg_degree))
            .collect();
        if !table.iter().any(|&(_, d)| d >= 4) {
            problems.push(format!("no degree >= 4 in {table:?}"));
        }
        judge(problems, format!("n = 4..7 agree; table {table:?}"))
    });

    timed(12, None, &mut results, || {
        let mut problems = Vec::new();
        for p in [3u64, 5, 7, 11, 13] {
            let order = sylnorm(p).unwrap().order_u64().unwrap();
            if order != p * (p - 1) {
                problems.push(format!("|sylnorm({p})| = {order}"));
            }
        }
        let pool = [
            constructions::cyclic(2).unwrap(),
            constructions::cyclic(3).unwrap(),
            constructions::symmetric(3).unwrap(),
            constructions::dihedral(4).unwrap(),
            constructions::alternating(4).unwrap(),
            constructions::dicyclic(2).unwrap(),
            sylnorm(5).unwrap(),
        ];
        let mut rng = rand::rngs::StdRng::seed_from_u64(12);
        let mut pairs = Vec::new();
        for _ in 0..5 {
            let (a, b) = (&pool[rng.gen_range(0..pool.len())], &pool[rng.gen_range(0..pool.len())]);
            let w = wreath(a, b).unwrap();
            let expected = a.order().pow(b.degree() as u32) * b.order();
            pairs.push(format!("{}wr{}", a.order(), b.order()));
            if w.order() != expected {
                problems.push(format!("|A wr B| = {} expected {expected}", w.order()));
            }
        }
        let w = iterated_wreath(3, 2).unwrap();
        if w.order_u64() != Some(1296) {
            problems.push(format!("|iterated_wreath(3,2)| = {}", w.order()));
        }
        if !is_cut_bruteforce(&w, DEFAULT_CAP).unwrap() {
            problems.push("iterated_wreath(3,2) not cut".into());
        }
        judge(problems, format!("sylnorm orders; wreath pairs {pairs:?}; 1296, cut"))
    });

    timed(13, None, &mut results, || {
        let mut problems = fails_of(&report, Check::Ppe);
        for row in report.rows.iter().filter(|r| r.cut) {
            let g = group_of(&records, &row.id);
            let s3 = sylow(&g, 3, DEFAULT_CAP).unwrap();
            if !abelianization_exponent_divides(s3.as_group(), 3, DEFAULT_CAP).unwrap() {
                problems.push(format!("{}: Syl_3 / Syl_3' not elementary abelian", row.id));
            }
        }
        judge(problems, counts(&report, Check::Ppe))
    });

    timed(14, None, &mut results, || {
        let first = report_json(&report).unwrap();
        let second = report_json(&run_survey(&records, &SurveyConfig::default(), "bundled.corpus")).unwrap();
        if first == second {
            pass(format!("{} bytes, identical", first.len()))
        } else {
            fail("survey JSON differs between runs")
        }
    });

    let failed: Vec<usize> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
