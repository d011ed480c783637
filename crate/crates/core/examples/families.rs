//! Builds family members and checks their claimed parameters.

use graphpos::families::{verify_spec, FamilySpec};

fn main() -> graphpos::Result<()> {
    let specs = [
        ("pagoda", vec!["4"]),
        ("pagoda-prime", vec!["4"]),
        ("chalice", vec!["1", "2", "0"]),
        ("mas", vec!["6", "5"]),
        ("turan-star", vec!["10", "3"]),
        ("half-wheel", vec!["11", "4"]),
        ("flagellum", vec!["12", "3", "5"]),
        ("srt", vec!["2", "1"]),
        ("g-of-h", vec!["Dhc"]),
    ];
    for (name, params) in specs {
        let spec = FamilySpec::parse(name, &params)?;
        let (g, report) = verify_spec(&spec)?;
        println!("{spec:<22} {:<24} {report}", g.to_graph6());
    }
    println!("\n{} specs in the full claims grid", graphpos::families::claims_grid().len());
    Ok(())
}
