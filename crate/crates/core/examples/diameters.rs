//! Diameters of graphs with a given mp-number, and diameter-two graphs
//! with mp-number two.

use graphpos::search::{achievable_diameters, circulant_diameter2_mp2, diameter2_mp2_exists, Mode, SearchSpace};

fn main() -> graphpos::Result<()> {
    let space = SearchSpace::native();
    for a in 2..=4 {
        let scanned = achievable_diameters(8, a, Mode::Exhaustive, &space)?;
        let built = achievable_diameters(8, a, Mode::Constructive, &space)?;
        println!("n=8 a={a}: scanned {} built {}", scanned.value, built.value);
    }
    for n in [16, 25] {
        let r = achievable_diameters(n, 2, Mode::Constructive, &space)?;
        println!("n={n} a=2: {}", r.value);
        for note in &r.witness_notes {
            println!("    {note}");
        }
    }

    for n in 3..=9 {
        print!("{n}:{} ", diameter2_mp2_exists(n, Mode::Exhaustive, &space)?.value);
    }
    println!();
    for n in 11..=20 {
        let r = circulant_diameter2_mp2(n)?;
        let first = r.witness_notes.first().cloned().unwrap_or_default();
        println!("circulants n={n}: {} {first}", r.value);
    }
    let r = diameter2_mp2_exists(30, Mode::Constructive, &space)?;
    println!("n=30: {} via {}", r.value, r.witness_notes[0]);
    Ok(())
}
