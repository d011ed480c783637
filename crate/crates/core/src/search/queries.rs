use std::collections::{BTreeMap, BTreeSet};

use super::record::{BoundsRecord, QueryKind, RecordValue, SearchRecord};
use super::space::SearchSpace;
use crate::canon::canonical_graph6;
use crate::error::{Error, Result};
use crate::families::{self, FamilyName, FamilySpec, Tripling};
use crate::graph::{named, Graph};
use crate::invariants::{clique_number, has_triangle, independence_number};
use crate::metric::{diameter, Diameter};
use crate::position::{self, PositionKind};

/// How a query is answered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Scan every graph of the order in question.
    Exhaustive,
    /// Use the constructions and closed-form bounds only.
    Constructive,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "constructive" | "bounds" => Ok(Mode::Constructive),
            _ => Err(Error::InvalidParameters(format!("unknown mode {s:?}"))),
        }
    }
}

fn mp(g: &Graph) -> usize {
    position::position_number(g, PositionKind::Monophonic)
        .expect("scanned graphs are connected")
        .value
}

fn gp(g: &Graph) -> usize {
    position::position_number(g, PositionKind::Geodesic)
        .expect("scanned graphs are connected")
        .value
}

fn numbers(g: &Graph) -> Result<(usize, usize)> {
    let (m, k) = position::position_numbers(g)?;
    Ok((m.value, k.value))
}

fn finite(d: Diameter) -> Option<u32> {
    d.finite()
}

fn bad(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

fn orders_text(space: &SearchSpace, lo: usize, hi: usize) -> String {
    format!("{} n={lo}..{hi}", space.describe())
}

/// The smallest verified construction with mp-number `a` and gp-number
/// `b`, if one of the known families provides it.
pub fn mu_construction(a: usize, b: usize) -> Option<(FamilySpec, usize)> {
    use FamilyName::*;
    let (ai, bi) = (a as i64, b as i64);
    let mut candidates = Vec::new();
    if a == b {
        candidates.push(FamilySpec::new(CompleteMultipartite, &vec![1; a]));
    } else if a == 2 {
        if b == 3 {
            candidates.push(FamilySpec::new(Cycle, &[5]));
        }
        if b % 2 == 0 {
            candidates.push(FamilySpec::new(Pagoda, &[bi / 2]));
        } else {
            candidates.push(FamilySpec::new(PagodaPrime, &[(bi + 1) / 2]));
        }
        candidates.push(FamilySpec::new(HalfWheel, &[2 * bi + 1, bi]));
    } else if a < b && b <= 2 * a {
        candidates.push(FamilySpec::new(Chalice, &[2 * ai - bi, bi - ai, 0]));
        candidates.push(FamilySpec::new(Mas, &[2 * (bi - ai), 2 * ai - bi]));
    } else if a >= 3 && b > 2 * a {
        let t = if b % 2 == 0 { (3 * bi + 4) / 2 - 3 * ai } else { (3 * bi + 5) / 2 - 3 * ai };
        candidates.push(FamilySpec::new(Chalice, &[0, ai - 1, t]));
    }
    candidates
        .into_iter()
        .filter_map(|spec| {
            let g = spec.build().ok()?;
            (numbers(&g).ok()? == (a, b)).then_some((spec, g.order()))
        })
        .min_by_key(|(_, n)| *n)
}

fn mu_record(a: usize, b: usize, n_cap: usize, space: &SearchSpace, found: Option<(usize, Vec<String>)>) -> SearchRecord {
    let params = [("a", a as i64), ("b", b as i64), ("n_cap", n_cap as i64)];
    let scanned = orders_text(space, 1, n_cap);
    match found {
        Some((n, codes)) => {
            SearchRecord::new(QueryKind::Mu, &params, RecordValue::Exact { value: n as i64 }, scanned).with_witnesses(codes)
        }
        None => {
            let floor = if a < b { b + 2 } else { b };
            let lower = (n_cap + 1).max(floor) as i64;
            let upper = mu_construction(a, b).map(|(spec, n)| (n as i64, spec.to_string()));
            let value = RecordValue::AtLeast { value: lower };
            let bounds = BoundsRecord::new(Some((lower, format!("exhaustive to n={n_cap}"))), upper)
                .unwrap_or_else(|_| BoundsRecord::new(Some((lower, "exhaustive".into())), None).expect("lower only"));
            SearchRecord::new(QueryKind::Mu, &params, value, scanned).with_bounds(bounds)
        }
    }
}

fn check_lower_bound(a: usize, b: usize, n: usize) -> Result<()> {
    if a < b && n <= b + 1 {
        return Err(Error::Verification(format!(
            "found a graph of order {n} with mp {a} and gp {b}, below the b+2 lower bound"
        )));
    }
    Ok(())
}

/// Smallest order of a graph with mp-number `a` and gp-number `b`, scanning
/// orders `b..=n_cap`.
///
/// When `a < b` the scan still covers orders `b` and `b + 1` and fails if a
/// witness turns up there.
pub fn mu(a: usize, b: usize, n_cap: usize, space: &SearchSpace) -> Result<SearchRecord> {
    if a < 2 || a > b {
        return Err(bad(format!("mu needs 2 <= a <= b, got a={a} b={b}")));
    }
    for n in b..=n_cap {
        let codes = space.scan(n, |g| {
            if clique_number(g) > a || gp(g) != b || mp(g) != a {
                return None;
            }
            Some(canonical_graph6(g))
        })?;
        if !codes.is_empty() {
            check_lower_bound(a, b, n)?;
            return Ok(mu_record(a, b, n_cap, space, Some((n, codes))));
        }
    }
    Ok(mu_record(a, b, n_cap, space, None))
}

/// All `mu(a, b)` with `2 <= a <= b <= n_cap` from one scan of each order.
pub fn mu_table(n_cap: usize, space: &SearchSpace) -> Result<Vec<SearchRecord>> {
    let mut first: BTreeMap<(usize, usize), (usize, Vec<String>)> = BTreeMap::new();
    for n in 1..=n_cap {
        let rows = space.scan(n, |g| numbers(g).ok().map(|(m, k)| (m, k, g.clone())))?;
        let mut fresh: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        for (m, k, g) in rows {
            if m >= 2 && !first.contains_key(&(m, k)) {
                fresh.entry((m, k)).or_default().push(canonical_graph6(&g));
            }
        }
        for ((a, b), codes) in fresh {
            check_lower_bound(a, b, n)?;
            first.insert((a, b), (n, codes));
        }
    }
    let mut out = Vec::new();
    for a in 2..=n_cap {
        for b in a..=n_cap {
            out.push(mu_record(a, b, n_cap, space, first.remove(&(a, b))));
        }
    }
    Ok(out)
}

/// Largest or smallest size over graphs of order `n` accepted by `keep`.
fn extremal_size<F>(n: usize, space: &SearchSpace, largest: bool, keep: F) -> Result<Option<(usize, Vec<String>)>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let hits = space.scan(n, |g| keep(g).then(|| (g.size(), g.clone())))?;
    let best = if largest {
        hits.iter().map(|h| h.0).max()
    } else {
        hits.iter().map(|h| h.0).min()
    };
    Ok(best.map(|m| {
        let codes = hits.iter().filter(|h| h.0 == m).map(|h| canonical_graph6(&h.1)).collect();
        (m, codes)
    }))
}

fn extremal_record(query: QueryKind, params: &[(&str, i64)], found: Option<(usize, Vec<String>)>, space: String) -> SearchRecord {
    match found {
        Some((m, codes)) => {
            SearchRecord::new(query, params, RecordValue::Exact { value: m as i64 }, space).with_witnesses(codes)
        }
        None => SearchRecord::new(query, params, RecordValue::Unrealizable, space),
    }
}

fn bounds_record(query: QueryKind, params: &[(&str, i64)], bounds: BoundsRecord, witness: Option<Graph>) -> SearchRecord {
    let value = if bounds.exact {
        RecordValue::Exact {
            value: bounds.lower.expect("exact bounds have a lower value"),
        }
    } else {
        RecordValue::Bound {
            lower: bounds.lower,
            upper: bounds.upper,
        }
    };
    let r = SearchRecord::new(query, params, value, "constructions and closed-form bounds").with_bounds(bounds);
    match witness {
        Some(g) => r.with_witnesses(vec![canonical_graph6(&g)]),
        None => r,
    }
}

fn check_na(n: usize, a: usize) -> Result<()> {
    if a < 2 || a > n {
        return Err(bad(format!("needs 2 <= a <= n, got n={n} a={a}")));
    }
    Ok(())
}

/// Edge bound from the only Ramsey number kept on file, `R(3,4) = 9`.
pub fn ramsey_degree_bound(a: usize) -> Option<usize> {
    (a == 3).then_some(9 - 1)
}

/// Largest size of a graph of order `n` with mp-number `a`.
pub fn mex(n: usize, a: usize, mode: Mode, space: &SearchSpace) -> Result<SearchRecord> {
    check_na(n, a)?;
    let params = [("n", n as i64), ("a", a as i64)];
    match mode {
        Mode::Exhaustive => {
            let found = extremal_size(n, space, true, |g| clique_number(g) <= a && mp(g) == a)?;
            Ok(extremal_record(QueryKind::Mex, &params, found, orders_text(space, n, n)))
        }
        Mode::Constructive => {
            let t = families::turan_size(n, a) as i64;
            let (spec, upper) = if n <= a * a {
                (FamilySpec::new(FamilyName::Turan, &[n as i64, a as i64]), (t, "Turán bound".to_string()))
            } else {
                let spec = FamilySpec::new(FamilyName::TuranStar, &[n as i64, a as i64]);
                (spec, (t - 1, "Turán bound, strict above a^2".to_string()))
            };
            let built = spec.build().ok().filter(|g| g.is_connected() && mp(g) == a);
            let lower = built.as_ref().map(|g| (g.size() as i64, spec.to_string()));
            let bounds = BoundsRecord::new(lower, Some(upper))?;
            Ok(bounds_record(QueryKind::Mex, &params, bounds, built))
        }
    }
}

/// Largest size of a graph of order `n` with gp-number `a`.
pub fn gex(n: usize, a: usize, mode: Mode, space: &SearchSpace) -> Result<SearchRecord> {
    check_na(n, a)?;
    let params = [("n", n as i64), ("a", a as i64)];
    match mode {
        Mode::Exhaustive => {
            let found = extremal_size(n, space, true, |g| clique_number(g) <= a && gp(g) == a)?;
            Ok(extremal_record(QueryKind::Gex, &params, found, orders_text(space, n, n)))
        }
        Mode::Constructive => {
            let t = families::turan_size(n, a);
            let mut upper = (t as i64, "Turán bound".to_string());
            if let Some(d) = ramsey_degree_bound(a) {
                let r = (n * d / 2) as i64;
                if r < upper.0 {
                    upper = (r, format!("degree bound R({a},{})-1 = {d}", a + 1));
                }
            }
            let mut built = None;
            let mut lower = None;
            if n <= a * a {
                let spec = FamilySpec::new(FamilyName::Turan, &[n as i64, a as i64]);
                built = spec.build().ok().filter(|g| gp(g) == a);
                lower = built.as_ref().map(|g| (g.size() as i64, spec.to_string()));
            }
            let bounds = BoundsRecord::new(lower, Some(upper))?;
            Ok(bounds_record(QueryKind::Gex, &params, bounds, built))
        }
    }
}

/// A graph of order `n` with mp-number `a`, gp-number `b` and few edges,
/// from trees, cycles and the sectioned cycle family.
pub fn ex_minus_construction(n: usize, a: usize, b: usize) -> Result<Option<(Graph, String)>> {
    let candidate: Option<(Graph, String)> = if a == b {
        if n == a {
            Some((Graph::complete(n)?, format!("complete({n})")))
        } else if n < a {
            None
        } else if a == 2 {
            Some((named::path(n)?, format!("path({n})")))
        } else if n == a + 1 {
            Some((named::star(a)?, format!("star({a})")))
        } else {
            Some((families::caterpillar(n, a)?, format!("caterpillar({n},{a})")))
        }
    } else if (a, b) == (2, 3) {
        (n >= 5).then(|| (named::cycle(n).expect("n >= 5"), format!("cycle({n})")))
    } else if a < b && (b - a) % 2 == 0 {
        let r = (b - a) / 2 + 1;
        let t = a - 2;
        let base = 5 * r + 1 + t;
        if n < base {
            None
        } else if a >= 3 {
            let g = families::extend_with_path(&families::srt(r, t)?, 5 * r + 1, n - base)?;
            Some((g, format!("srt({r},{t}) + path of {}", n - base)))
        } else {
            let g = families::srt_adjusted(r, 0, (n - base) as i64)?;
            Some((g, format!("srt-adjusted({r},0,{})", n - base)))
        }
    } else if a < b {
        let r = (b - a + 3) / 2;
        let t = a - 2;
        let base = 5 * r + t;
        if r < 4 || n < base {
            None
        } else if a >= 3 {
            let g = families::extend_with_path(&families::srt_adjusted(r, t, -1)?, 5 * r, n - base)?;
            Some((g, format!("srt-adjusted({r},{t},-1) + path of {}", n - base)))
        } else {
            let g = families::srt_sections(r, 0, &[(n - base) as i64, -1])?;
            Some((g, format!("srt-sections({r},0,[{},-1])", n - base)))
        }
    } else {
        None
    };
    Ok(candidate.filter(|(g, _)| g.is_connected() && numbers(g).ok() == Some((a, b))))
}

/// Smallest size of a graph of order `n` with mp-number `a` and gp-number
/// `b`.
pub fn ex_minus(n: usize, a: usize, b: usize, mode: Mode, space: &SearchSpace) -> Result<SearchRecord> {
    if a < 2 || a > b || b > n {
        return Err(bad(format!("ex_minus needs 2 <= a <= b <= n, got n={n} a={a} b={b}")));
    }
    let params = [("n", n as i64), ("a", a as i64), ("b", b as i64)];
    match mode {
        Mode::Exhaustive => {
            let found = extremal_size(n, space, false, |g| clique_number(g) <= a && gp(g) == b && mp(g) == a)?;
            Ok(extremal_record(QueryKind::ExMinus, &params, found, orders_text(space, n, n)))
        }
        Mode::Constructive => {
            let lower = if a == b && n == a {
                (families::turan_size(n, n) as i64, "complete graph is the only option".to_string())
            } else if a == b {
                (n as i64 - 1, "connected".to_string())
            } else {
                (n as i64, "trees have equal mp- and gp-numbers".to_string())
            };
            let built = ex_minus_construction(n, a, b)?;
            let upper = built.as_ref().map(|(g, note)| (g.size() as i64, note.clone()));
            let bounds = BoundsRecord::new(Some(lower), upper)?;
            Ok(bounds_record(QueryKind::ExMinus, &params, bounds, built.map(|(g, _)| g)))
        }
    }
}

/// Diameters claimed to occur among graphs of order `n` with mp-number
/// `a`.
pub fn claimed_diameters(n: usize, a: usize) -> BTreeSet<u32> {
    let n32 = n as u32;
    let a32 = a as u32;
    if a >= 3 {
        (2..=n32 + 1 - a32).collect()
    } else {
        let mut set: BTreeSet<u32> = (3..=n32 / 2).collect();
        set.insert(n32 - 1);
        if diameter_two_claimed(n) {
            set.insert(2);
        }
        set
    }
}

/// Orders for which a graph with mp-number 2 and diameter 2 is claimed.
pub fn diameter_two_claimed(n: usize) -> bool {
    matches!(n, 3 | 4 | 5 | 8) || n >= 11
}

fn diam_witness(n: usize, a: usize, d: u32, space: &SearchSpace) -> Result<Option<(Graph, String)>> {
    let spec = |name, p: &[i64]| {
        let s = FamilySpec::new(name, p);
        s.build().map(|g| (g, s.to_string()))
    };
    let (ni, ai, di) = (n as i64, a as i64, i64::from(d));
    if a >= 3 {
        let top = (n + 1 - a) as u32;
        return Ok(Some(if a == n - 1 {
            (named::star(n - 1)?, format!("star({})", n - 1))
        } else if d == top {
            spec(FamilyName::Caterpillar, &[ni, ai])?
        } else if d + 1 == top {
            spec(FamilyName::FlagellumLong, &[ni, ai])?
        } else {
            spec(FamilyName::Flagellum, &[ni, ai, di])?
        }));
    }
    if d as usize == n - 1 {
        return Ok(Some(spec(FamilyName::Path, &[ni])?));
    }
    if d == 2 {
        return construct_diameter_two(n, space);
    }
    if d == 3 && n >= 6 {
        return Ok(Some(spec(FamilyName::TuranStar, &[ni, 2])?));
    }
    if n % 2 == 0 && d as usize == n / 2 {
        return Ok(Some(spec(FamilyName::Cycle, &[ni])?));
    }
    for r in 3..=(n - 1) / 2 {
        let s = FamilySpec::new(FamilyName::HalfWheel, &[ni, r as i64]);
        if s.claims().diameter == Some(d) {
            return Ok(Some((s.build()?, s.to_string())));
        }
    }
    Ok(None)
}

/// Diameters of graphs with order `n` and mp-number `a`.
///
/// Exhaustive mode scans every graph; constructive mode builds one family
/// member for each claimed diameter and checks it.
pub fn achievable_diameters(n: usize, a: usize, mode: Mode, space: &SearchSpace) -> Result<SearchRecord> {
    if a < 2 || a + 1 > n {
        return Err(bad(format!("achievable_diameters needs 2 <= a <= n-1, got n={n} a={a}")));
    }
    let params = [("n", n as i64), ("a", a as i64)];
    let mut by_d: BTreeMap<u32, (String, String)> = BTreeMap::new();
    let scanned = match mode {
        Mode::Exhaustive => {
            let hits = space.scan(n, |g| {
                if clique_number(g) > a || mp(g) != a {
                    return None;
                }
                finite(diameter(g)).map(|d| (d, canonical_graph6(g)))
            })?;
            for (d, code) in hits {
                let e = by_d.entry(d).or_insert_with(|| (code.clone(), format!("D={d}")));
                if code < e.0 {
                    e.0 = code;
                }
            }
            orders_text(space, n, n)
        }
        Mode::Constructive => {
            for d in claimed_diameters(n, a) {
                let Some((g, note)) = diam_witness(n, a, d, space)? else {
                    return Err(Error::Verification(format!("no construction for n={n} a={a} D={d}")));
                };
                let (got_mp, got_d) = (mp(&g), finite(diameter(&g)));
                if got_mp != a || got_d != Some(d) || g.order() != n {
                    return Err(Error::Verification(format!(
                        "{note} has order {} mp {got_mp} diameter {got_d:?}, expected {n}/{a}/{d}",
                        g.order()
                    )));
                }
                by_d.insert(d, (g.to_graph6(), format!("D={d} {note}")));
            }
            "constructions".to_string()
        }
    };
    let values: Vec<u32> = by_d.keys().copied().collect();
    let record = SearchRecord::new(QueryKind::Diam, &params, RecordValue::Set { values }, scanned);
    Ok(record.with_noted_witnesses(by_d.into_values().collect()))
}

fn is_d2mp2(g: &Graph) -> bool {
    !has_triangle(g) && diameter(g) == Diameter::Finite(2) && mp(g) == 2
}

/// A graph of order `n` with mp-number 2 and diameter 2, from small cases,
/// the exhaustive order-8 witness, circulants, or the tripling of a smaller
/// witness.
pub fn construct_diameter_two(n: usize, space: &SearchSpace) -> Result<Option<(Graph, String)>> {
    let found = match n {
        3 => Some((named::path(3)?, "path(3)".to_string())),
        4 => Some((named::cycle(4)?, "cycle(4)".to_string())),
        5 => Some((named::cycle(5)?, "cycle(5)".to_string())),
        8 if space.covers(8) => {
            let mut codes = space.scan(8, |g| is_d2mp2(g).then(|| canonical_graph6(g)))?;
            codes.sort();
            match codes.first() {
                Some(c) => Some((Graph::from_graph6(c)?, "exhaustive order-8 witness".to_string())),
                None => None,
            }
        }
        _ if n >= 12 => {
            let (r, s) = (n / 3, n % 3);
            let kind = [Tripling::DoublePrime, Tripling::Prime, Tripling::Full][s];
            match construct_diameter_two(r, space)? {
                Some((h, note)) if r >= 4 => {
                    let name = ["g-double-prime-of-h", "g-prime-of-h", "g-of-h"][s];
                    Some((families::tripling(&h, kind)?, format!("{name}({note})")))
                }
                _ => circulant_witness(n)?,
            }
        }
        11 => circulant_witness(n)?,
        _ => None,
    };
    Ok(found.filter(|(g, _)| g.order() == n && is_d2mp2(g)))
}

fn circulant_witness(n: usize) -> Result<Option<(Graph, String)>> {
    let hits = circulant_scan(n)?;
    Ok(hits.into_iter().next().map(|(g, conns)| (g, format!("circulant({n};{conns})"))))
}

/// Whether a graph of order `n` with mp-number 2 and diameter 2 exists.
pub fn diameter2_mp2_exists(n: usize, mode: Mode, space: &SearchSpace) -> Result<SearchRecord> {
    if n < 3 {
        return Err(bad(format!("diameter2_mp2_exists needs n >= 3, got {n}")));
    }
    let params = [("n", n as i64)];
    match mode {
        Mode::Exhaustive => {
            let codes = space.scan(n, |g| is_d2mp2(g).then(|| canonical_graph6(g)))?;
            let value = RecordValue::Exists { value: !codes.is_empty() };
            Ok(SearchRecord::new(QueryKind::DiameterTwo, &params, value, orders_text(space, n, n)).with_witnesses(codes))
        }
        Mode::Constructive => {
            let r = SearchRecord::new(QueryKind::DiameterTwo, &params, RecordValue::Unknown, "constructions");
            Ok(match construct_diameter_two(n, space)? {
                Some((g, note)) => {
                    let mut r = r.with_noted_witnesses(vec![(g.to_graph6(), note)]);
                    r.value = RecordValue::Exists { value: true };
                    r
                }
                None => r,
            })
        }
    }
}

/// Largest order accepted by the circulant scan.
pub const CIRCULANT_MAX_ORDER: usize = 44;

/// Non-isomorphic circulants of order `n` with mp-number 2 and diameter 2,
/// each with the first connection set that produced it.
fn circulant_scan(n: usize) -> Result<Vec<(Graph, String)>> {
    if !(3..=CIRCULANT_MAX_ORDER).contains(&n) {
        return Err(bad(format!("circulant scan supports 3 <= n <= {CIRCULANT_MAX_ORDER}, got {n}")));
    }
    let half = n / 2;
    let mut seen: BTreeMap<String, (Graph, String)> = BTreeMap::new();
    for mask in 1u64..1 << half {
        let conns: Vec<usize> = (0..half).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let g = families::circulant(n, &conns)?;
        if !g.is_connected() || !is_d2mp2(&g) {
            continue;
        }
        let code = canonical_graph6(&g);
        seen.entry(code).or_insert_with(|| {
            let text: Vec<String> = conns.iter().map(usize::to_string).collect();
            (g, text.join(","))
        });
    }
    Ok(seen.into_values().collect())
}

/// Circulants of order `n` with mp-number 2 and diameter 2.
pub fn circulant_diameter2_mp2(n: usize) -> Result<SearchRecord> {
    let hits = circulant_scan(n)?;
    let value = RecordValue::Exists { value: !hits.is_empty() };
    let mut items: Vec<(String, String)> = hits
        .into_iter()
        .map(|(g, conns)| (canonical_graph6(&g), format!("connections {conns}")))
        .collect();
    items.sort();
    let r = SearchRecord::new(QueryKind::Circulant, &[("n", n as i64)], value, "all connection sets");
    Ok(r.with_noted_witnesses(items))
}

/// Checks `R(3,4) = 9`: some graph on 8 vertices has neither a triangle
/// nor an independent 4-set, and every graph on 9 vertices has one.
pub fn ramsey_r34(space: &SearchSpace) -> Result<SearchRecord> {
    let space = space.clone().with_disconnected(true);
    let avoids = |g: &Graph| !has_triangle(g) && independence_number(g) < 4;
    let eight = space.scan(8, |g| avoids(g).then(|| canonical_graph6(g)))?;
    let nine = space.scan(9, |g| avoids(g).then_some(()))?;
    let value = match (eight.is_empty(), nine.is_empty()) {
        (false, true) => RecordValue::Exact { value: 9 },
        (true, _) => RecordValue::Bound {
            lower: None,
            upper: Some(8),
        },
        (false, false) => RecordValue::AtLeast { value: 10 },
    };
    let r = SearchRecord::new(QueryKind::Ramsey, &[("s", 3), ("t", 4)], value, orders_text(&space, 8, 9));
    Ok(r.with_witnesses(eight))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_small() {
        let space = SearchSpace::native();
        let r = mu(2, 3, 6, &space).unwrap();
        assert_eq!(r.value, RecordValue::Exact { value: 5 });
        assert_eq!(r.witness_count, 1);
        assert_eq!(r.witnesses[0], canonical_graph6(&named::cycle(5).unwrap()));
        let r = mu(3, 3, 5, &space).unwrap();
        assert_eq!(r.value, RecordValue::Exact { value: 3 });
        let r = mu(2, 5, 6, &space).unwrap();
        assert_eq!(r.value, RecordValue::AtLeast { value: 7 });
        assert_eq!(r.bounds.as_ref().unwrap().upper, Some(9));
        r.reverify().unwrap();
        assert!(mu(3, 2, 5, &space).is_err());
    }

    #[test]
    fn mu_constructions_verify() {
        for a in 2..=5 {
            for b in a..=9 {
                let (spec, n) = mu_construction(a, b).unwrap_or_else(|| panic!("no construction for ({a},{b})"));
                let g = spec.build().unwrap();
                assert_eq!(g.order(), n);
                if a >= 3 && a < b && b <= 2 * a {
                    assert_eq!(n, b + 2, "{spec}");
                }
            }
        }
        // no family gives mp 2 and gp 4 below the half-wheel
        assert_eq!(mu_construction(2, 4).unwrap().1, 9);
        assert_eq!(mu_construction(2, 7).unwrap().1, 12);
        assert_eq!(mu_construction(2, 8).unwrap().1, 13);
    }

    #[test]
    fn mex_small() {
        let space = SearchSpace::native();
        let r = mex(5, 2, Mode::Exhaustive, &space).unwrap();
        assert_eq!(r.value, RecordValue::Exact { value: 5 });
        let b = mex(10, 3, Mode::Constructive, &space).unwrap();
        assert_eq!(b.bounds.unwrap().lower, Some(24));
    }

    #[test]
    fn ex_minus_constructions() {
        let space = SearchSpace::native();
        for (n, a, b, m) in [(7, 3, 3, 6), (4, 4, 4, 6), (8, 2, 3, 8)] {
            let r = ex_minus(n, a, b, Mode::Constructive, &space).unwrap();
            assert_eq!(r.value, RecordValue::Exact { value: m }, "{n} {a} {b}");
        }
        // same parity: S(2,1) has order 12, mp 3 and gp 5
        let (g, _) = ex_minus_construction(14, 3, 5).unwrap().unwrap();
        assert_eq!(g.size(), 14 + 2);
        let (g, _) = ex_minus_construction(13, 2, 4).unwrap().unwrap();
        assert_eq!(g.size(), 13 + 2);
        // opposite parity needs at least four chords
        assert!(ex_minus_construction(30, 3, 4).unwrap().is_none());
        let (g, _) = ex_minus_construction(22, 3, 8).unwrap().unwrap();
        assert_eq!(g.size(), 22 + 4);
        let (g, _) = ex_minus_construction(22, 2, 7).unwrap().unwrap();
        assert_eq!(g.size(), 22 + 4);
    }

    #[test]
    fn diameters_small() {
        let space = SearchSpace::native();
        let r = achievable_diameters(7, 3, Mode::Exhaustive, &space).unwrap();
        let c = achievable_diameters(7, 3, Mode::Constructive, &space).unwrap();
        assert_eq!(r.value, c.value);
        assert_eq!(r.value, RecordValue::Set { values: vec![2, 3, 4, 5] });
        r.reverify().unwrap();
        c.reverify().unwrap();
        let star = achievable_diameters(8, 7, Mode::Constructive, &space).unwrap();
        assert_eq!(star.value, RecordValue::Set { values: vec![2] });
    }

    #[test]
    fn diameter_two() {
        let space = SearchSpace::native();
        for n in 3..=7 {
            let r = diameter2_mp2_exists(n, Mode::Exhaustive, &space).unwrap();
            assert_eq!(r.value, RecordValue::Exists { value: diameter_two_claimed(n) }, "n={n}");
        }
        let r = diameter2_mp2_exists(14, Mode::Constructive, &space).unwrap();
        assert_eq!(r.value, RecordValue::Exists { value: true });
        r.reverify().unwrap();
        assert!(circulant_diameter2_mp2(6).unwrap().value == RecordValue::Exists { value: false });
        assert!(circulant_diameter2_mp2(5).unwrap().value == RecordValue::Exists { value: true });
    }
}
