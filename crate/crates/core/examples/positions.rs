//! Position numbers with witness sets, and certificates for given sets.

use graphpos::graph::named;
use graphpos::{in_position, position, Graph, PositionKind};

fn main() -> graphpos::Result<()> {
    let graphs = [
        ("C5", named::cycle(5)?),
        ("Petersen", Graph::from_graph6("IheA@GUAo")?),
        ("K3,3", named::complete_multipartite(&[3, 3])?),
        ("star(5)", named::star(5)?),
    ];
    for (name, g) in &graphs {
        let (mp, gp) = position::position_numbers(g)?;
        println!("{name:<10} mp={} {:?}  gp={} {:?}", mp.value, mp.set, gp.value, gp.set);
    }

    let c6 = named::cycle(6)?;
    for set in [vec![0, 1, 3], vec![0, 2, 4]] {
        match in_position(&c6, &set, PositionKind::Geodesic)? {
            None => println!("C6 {set:?}: in general position"),
            Some(v) => println!("C6 {set:?}: geodesic {:?} carries {:?}", v.path, v.hits),
        }
    }
    Ok(())
}
