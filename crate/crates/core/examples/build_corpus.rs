// Regenerates `data/bundled.corpus` from the family builders and the
// hand-entered groups.
//
// ```text
// cargo run --example build_corpus            # writes the file
// cargo run --example build_corpus -- --check # exits 1 if the file is stale
// ```

use std::path::Path;
use std::process::ExitCode;

use cutgroups::bundled::bundled_corpus_text;
use cutgroups::corpus::parse_corpus_str;

fn main() -> cutgroups::Result<ExitCode> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/bundled.corpus");
    let text = bundled_corpus_text()?;
    let records = parse_corpus_str(&text)?;
    if std::env::args().any(|a| a == "--check") {
        let current = std::fs::read_to_string(&path).unwrap_or_default();
        if current != text {
            eprintln!("{} is out of date", path.display());
            return Ok(ExitCode::FAILURE);
        }
        println!("{} is up to date ({} records)", path.display(), records.len());
        return Ok(ExitCode::SUCCESS);
    }
    std::fs::write(&path, &text)?;
    println!("wrote {} records to {}", records.len(), path.display());
    Ok(ExitCode::SUCCESS)
}
