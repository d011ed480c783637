//! Counts non-isomorphic graphs by order, whole and in shards.

use std::time::Instant;

use graphpos::enumerate::{enumerate, Shard};

fn main() -> graphpos::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for n in 1..=max {
        let start = Instant::now();
        let connected = enumerate(n, true, Shard::ALL)?.count();
        let all = enumerate(n, false, Shard::ALL)?.count();
        println!("n={n}: {connected} connected, {all} total ({:.2?})", start.elapsed());
    }

    let k = 4;
    let mut total = 0;
    for i in 0..k {
        let part = enumerate(max.min(7), true, Shard::new(i, k)?)?.count();
        println!("shard {i}/{k} of n={}: {part}", max.min(7));
        total += part;
    }
    println!("shards sum to {total}");
    Ok(())
}
