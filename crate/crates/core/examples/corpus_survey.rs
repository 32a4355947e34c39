// Survey of the bundled corpus: aggregate percentages, check tallies and
// the groups whose Sylow 2-subgroup is not cut.

use std::path::Path;

use cutgroups::corpus::parse_corpus;
use cutgroups::survey::{report_text, run_survey, SurveyConfig};

fn main() -> cutgroups::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/bundled.corpus");
    let records = parse_corpus(&path)?;
    let report = run_survey(&records, &SurveyConfig::default(), "bundled.corpus");
    print!("{}", report_text(&report));
    for f in &report.findings {
        println!("finding: {} ({})", f.id, f.kind);
    }
    if report.has_failures() {
        println!("some check FAILed; see the JSON report for witnesses");
    }
    Ok(())
}
