//! Runs every theorem suite; pass `full` for the larger profile.

use graphpos::search::{verify_theorems, Profile};

fn main() -> graphpos::Result<()> {
    let profile: Profile = std::env::args().nth(1).unwrap_or_else(|| "quick".into()).parse()?;
    let report = verify_theorems(profile);
    println!("{report}");
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
