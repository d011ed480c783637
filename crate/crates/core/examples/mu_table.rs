//! Smallest orders with given mp- and gp-numbers, rendered as a grid.
//!
//! `cargo run --release --example mu_table -- 8`

use graphpos::report;
use graphpos::search::{mu_table, SearchSpace};

fn main() -> graphpos::Result<()> {
    let cap: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let records = mu_table(cap, &SearchSpace::native().with_shards(4))?;
    for r in &records {
        r.reverify()?;
    }
    print!("{}", report::markdown(&records));
    Ok(())
}
