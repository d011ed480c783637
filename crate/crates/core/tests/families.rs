use graphpos::families::{self, claims_grid, verify_spec, FamilyName, FamilySpec, Tripling};
use graphpos::graph::named;
use graphpos::invariants::{extreme_vertices, independent_clique_number};
use graphpos::metric::{diameter, Diameter};
use graphpos::position;

#[test]
fn claims_grid_passes() {
    let grid = claims_grid();
    assert!(grid.len() > 1000);
    for spec in grid {
        let (_, report) = verify_spec(&spec).unwrap();
        assert!(report.all_ok(), "{spec}: {report}");
    }
}

#[test]
fn every_family_is_in_the_grid() {
    let grid = claims_grid();
    for name in FamilyName::ALL {
        if matches!(name, FamilyName::C5Blowup | FamilyName::CompleteMultipartite | FamilyName::Circulant) {
            continue;
        }
        assert!(grid.iter().any(|s| s.name == name), "{name} missing");
    }
}

#[test]
fn documented_examples() {
    let mas = families::mas(6, 5).unwrap();
    assert_eq!((position::mp(&mas).unwrap(), position::gp(&mas).unwrap()), (8, 11));
    let chalice = families::chalice(0, 4, 5).unwrap();
    assert_eq!(position::gp(&chalice).unwrap(), 12);
    let c5 = named::cycle(5).unwrap();
    assert_eq!(independent_clique_number(&c5), 3);
    let k33 = named::complete_multipartite(&[3, 3]).unwrap();
    assert_eq!(position::gp(&k33).unwrap(), 3);
    let t = families::turan_star(8, 2).unwrap();
    assert_eq!(diameter(&t), Diameter::Finite(3));
}

#[test]
fn tripling_orders() {
    let c5 = named::cycle(5).unwrap();
    for (kind, extra) in [(Tripling::Full, 2), (Tripling::Prime, 1), (Tripling::DoublePrime, 0)] {
        let g = families::tripling(&c5, kind).unwrap();
        assert_eq!(g.order(), 15 + extra);
        assert_eq!(kind.order(5), 15 + extra);
        assert_eq!(position::mp(&g).unwrap(), 2);
        assert_eq!(diameter(&g), Diameter::Finite(2));
    }
    let p4 = named::path(4).unwrap();
    assert!(families::tripling(&p4, Tripling::Full).is_err());
}

#[test]
fn pendants_extend_extreme_vertices() {
    let g = families::chalice(1, 2, 0).unwrap();
    let before = (position::mp(&g).unwrap(), position::gp(&g).unwrap());
    assert_ne!(extreme_vertices(&g), 0);
    let spec = FamilySpec::new(FamilyName::Chalice, &[1, 2, 1]);
    let (h, report) = verify_spec(&spec).unwrap();
    assert!(report.all_ok());
    assert_eq!(h.order(), g.order() + 1);
    assert!(position::gp(&h).unwrap() >= before.1);
}

#[test]
fn specs_round_trip_through_json() {
    let specs = [
        FamilySpec::new(FamilyName::Pagoda, &[4]),
        FamilySpec::new(FamilyName::SrtAdjusted, &[4, 1, -1]),
        FamilySpec::with_seed(FamilyName::GofH, named::cycle(5).unwrap()),
    ];
    for s in specs {
        let text = serde_json::to_string(&s).unwrap();
        let back: FamilySpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build().unwrap(), s.build().unwrap());
    }
}

#[test]
fn bad_parameters_are_rejected() {
    assert!(FamilySpec::parse("pagoda", &["2"]).unwrap().build().is_err());
    assert!(FamilySpec::parse("pagoda", &["x"]).is_err());
    assert!(FamilySpec::parse("nonesuch", &["1"]).is_err());
    assert!(FamilySpec::parse("half_wheel", &["11", "4"]).is_ok());
    assert!(FamilySpec::new(FamilyName::Mas, &[3]).build().is_err());
}
