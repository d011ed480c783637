//! Largest and smallest sizes for prescribed position numbers.

use graphpos::search::{ex_minus, gex, mex, Mode, SearchSpace};

fn main() -> graphpos::Result<()> {
    let space = SearchSpace::native();
    for n in 5..=8 {
        let m = mex(n, 2, Mode::Exhaustive, &space)?;
        let g = gex(n, 2, Mode::Exhaustive, &space)?;
        let g3 = gex(n, 3, Mode::Exhaustive, &space)?;
        println!(
            "n={n}: mex(n;2)={} ({} extremal), gex(n;2)={}, gex(n;3)={}",
            m.value, m.witness_count, g.value, g3.value
        );
    }
    for (n, a) in [(12, 3), (20, 4)] {
        let b = mex(n, a, Mode::Constructive, &space)?;
        println!("mex({n};{a}) in {}", b.value);
    }
    for (n, a, b) in [(7, 2, 3), (14, 3, 5), (22, 3, 8)] {
        let r = ex_minus(n, a, b, Mode::Constructive, &space)?;
        let from = r.bounds.and_then(|b| b.upper_from).unwrap_or_default();
        println!("ex-({n};{a},{b}) in {}  [{from}]", r.value);
    }
    Ok(())
}
