//! Stores search records in a results directory and renders them.

use graphpos::report::{self, OutputFormat};
use graphpos::search::{append_records, load_verified, mex, mu_table, Mode, SearchSpace};

fn main() -> graphpos::Result<()> {
    let dir = std::env::temp_dir().join(format!("graphpos-example-{}", std::process::id()));
    let space = SearchSpace::native();
    append_records(&dir.join("mu.jsonl"), &mu_table(6, &space)?)?;
    append_records(&dir.join("mex.jsonl"), &[mex(7, 2, Mode::Exhaustive, &space)?])?;

    let records = load_verified(&dir)?;
    println!("{}", report::render(&records, OutputFormat::Markdown)?);
    let csv = report::render(&records[..2], OutputFormat::Csv)?;
    println!("{csv}");
    assert_eq!(report::parse_csv(&csv)?, records[..2]);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
