use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::queries::{self, Mode};
use super::record::RecordValue;
use super::space::SearchSpace;
use crate::enumerate::all_graphs;
use crate::error::{Error, Result};
use crate::families::{self, claims_grid, verify_spec, FamilyName, FamilySpec};
use crate::graph::{mask_of, named, Bits, Graph};
use crate::invariants::{clique_number, extreme_vertices, independent_clique_number, leaf_number};
use crate::position::{self, all_optimal_sets, PositionKind};

/// How much of each suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Profile {
    Quick,
    Full,
}

impl Profile {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Profile::Quick => quick,
            Profile::Full => full,
        }
    }
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::InvalidParameters(format!("unknown profile {s:?}, expected quick or full"))),
        }
    }
}

/// Deliberate defects used to check that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Toggles the edge `a_1 b_2` in every pagoda the pagoda suite builds.
    PagodaEdge,
}

/// A graph on which a suite's claim did not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub claim: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub profile: Profile,
    pub suites: Vec<SuiteOutcome>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteOutcome::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteOutcome> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<20} {:>6} instances {:>8.2}s  {}",
                s.name,
                s.instances,
                s.elapsed.as_secs_f64(),
                s.claim
            )?;
            if let Some(c) = &s.counterexample {
                writeln!(f, "     counterexample {} : {}", c.graph6, c.detail)?;
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(f, "{} suites, {failed} failed", self.suites.len())
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: usize,
    counterexample: Option<Counterexample>,
}

impl Tally {
    fn check(&mut self, g: &Graph, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.fail(g, detail());
        }
    }

    fn fail(&mut self, g: &Graph, detail: String) {
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                graph6: g.to_graph6(),
                detail,
            });
        }
    }

    fn error(&mut self, e: Error) {
        self.instances += 1;
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                graph6: "-".into(),
                detail: e.to_string(),
            });
        }
    }

    fn absorb(&mut self, r: Result<()>) {
        if let Err(e) = r {
            self.error(e);
        }
    }

    fn spec(&mut self, spec: &FamilySpec) {
        match verify_spec(spec) {
            Ok((g, report)) => self.check(&g, report.all_ok(), || format!("{spec}: {report}")),
            Err(e) => self.error(e),
        }
    }
}

struct Suite {
    name: &'static str,
    claim: &'static str,
    run: fn(Profile, &[Fault], &mut Tally) -> Result<()>,
}

fn numbers(g: &Graph) -> Result<(usize, usize)> {
    let (m, k) = position::position_numbers(g)?;
    Ok((m.value, k.value))
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform labelled tree on `n >= 2` vertices from a random Prüfer code.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n == 2 {
        return named::path(2).expect("order 2");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding gives a tree")
}

fn trees(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let check = |t: &mut Tally, g: &Graph| -> Result<()> {
        let (m, k) = numbers(g)?;
        let l = leaf_number(g);
        t.check(g, m == l && k == l, || format!("leaves {l}, mp {m}, gp {k}"));
        Ok(())
    };
    for n in 2..=p.pick(8, 9) {
        for g in all_graphs(n, true)?.iter().filter(|g| g.size() == n - 1) {
            check(t, g)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7233);
    for _ in 0..p.pick(500, 2000) {
        let n = rng.gen_range(3..=p.pick(24, 40));
        check(t, &random_tree(&mut rng, n))?;
    }
    Ok(())
}

fn pagoda(p: Profile, faults: &[Fault], t: &mut Tally) -> Result<()> {
    let faulty = faults.contains(&Fault::PagodaEdge);
    for r in 3..=p.pick(5, 6) {
        let mut g = families::pagoda(r)?;
        if faulty {
            g = g.toggle_edge(0, r + 1)?;
        }
        let (m, k) = numbers(&g)?;
        t.check(&g, g.order() == 3 * r + 1 && m == 2 && k == 2 * r, || {
            format!("r={r}: order {}, mp {m}, gp {k}", g.order())
        });
        if r <= 4 {
            let sets = all_optimal_sets(&g, PositionKind::Geodesic)?;
            let expected = mask_of(&(0..r).chain(2 * r..3 * r).collect::<Vec<_>>());
            let unique = sets.len() == 1 && mask_of(&sets[0]) == expected;
            t.check(&g, unique, || format!("r={r}: optimal gp-sets {sets:?}"));
        }
        let h = families::pagoda_prime(r)?;
        let (m, k) = numbers(&h)?;
        t.check(&h, m == 2 && k == 2 * r - 1, || format!("r={r}: primed mp {m}, gp {k}"));
    }
    Ok(())
}

fn join(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x101);
    for _ in 0..p.pick(500, 2000) {
        let (ng, nh) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let g = random_connected(&mut rng, ng, 0.5);
        let h = random_connected(&mut rng, nh, 0.5);
        let j = g.join(&h)?;
        let (mg, _) = numbers(&g)?;
        let (mh, _) = numbers(&h)?;
        let (mj, kj) = numbers(&j)?;
        let omega = clique_number(&g) + clique_number(&h);
        let mp_claim = omega.max(mg).max(mh);
        let gp_claim = omega.max(independent_clique_number(&g)).max(independent_clique_number(&h));
        t.check(&j, mj == mp_claim && kj == gp_claim, || {
            format!(
                "{} join {}: mp {mj} vs {mp_claim}, gp {kj} vs {gp_claim}",
                g.to_graph6(),
                h.to_graph6()
            )
        });
    }
    Ok(())
}

fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

fn multipartite(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let mut all = Vec::new();
    for n in 2..=10 {
        partitions(n, n, &mut Vec::new(), &mut all);
    }
    all.retain(|parts| parts.len() >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(0x3a7);
    for _ in 0..p.pick(500, 1500) {
        let k = rng.gen_range(2..=6);
        let mut parts: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=5)).collect();
        parts.shuffle(&mut rng);
        all.push(parts);
    }
    for parts in all {
        let g = named::complete_multipartite(&parts)?;
        let claim = parts.len().max(*parts.iter().max().expect("non-empty"));
        let (m, k) = numbers(&g)?;
        t.check(&g, m == claim && k == claim, || format!("parts {parts:?}: mp {m}, gp {k}"));
    }
    Ok(())
}

fn pendant_check(t: &mut Tally, g: &Graph) -> Result<()> {
    let extreme = extreme_vertices(g);
    if extreme == 0 {
        return Ok(());
    }
    let union = |kind| -> Result<u64> {
        Ok(all_optimal_sets(g, kind)?.iter().fold(0, |acc, s| acc | mask_of(s)))
    };
    let candidates = extreme & union(PositionKind::Monophonic)? & union(PositionKind::Geodesic)?;
    let before = numbers(g)?;
    for v in Bits(candidates) {
        let h = g.add_pendant(v)?;
        let after = numbers(&h)?;
        t.check(g, after == before, || format!("pendant on {v}: {before:?} became {after:?}"));
    }
    Ok(())
}

fn pendant(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    for n in 2..=p.pick(7, 8) {
        for g in all_graphs(n, true)? {
            pendant_check(t, &g)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e4d);
    for _ in 0..p.pick(500, 1000) {
        let density = rng.gen_range(0.25..0.6);
        let g = random_connected(&mut rng, 8, density);
        pendant_check(t, &g)?;
    }
    Ok(())
}

fn grid_suite(t: &mut Tally, names: &[FamilyName]) {
    for spec in claims_grid().iter().filter(|s| names.contains(&s.name)) {
        t.spec(spec);
    }
}

fn chalice(_: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::Chalice]);
    Ok(())
}

fn mas(_: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::Mas]);
    Ok(())
}

fn trees_family(_: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::StarlikeTree, FamilyName::Path, FamilyName::Cycle]);
    Ok(())
}

fn half_wheel(_: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::HalfWheel]);
    Ok(())
}

fn turan_star(_: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::Turan, FamilyName::TuranStar]);
    Ok(())
}

fn sectioned_cycles(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::Srt, FamilyName::SrtAdjusted]);
    for r in 2..=p.pick(4, 6) {
        for tail in 0..=3 {
            for delta in -1..=3 {
                t.spec(&FamilySpec::new(FamilyName::SrtAdjusted, &[r, tail, delta]));
            }
        }
    }
    Ok(())
}

fn long_diameter(_: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::Flagellum, FamilyName::FlagellumLong, FamilyName::Caterpillar]);
    Ok(())
}

fn basic_inequalities(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    for n in 1..=p.pick(7, 8) {
        for g in all_graphs(n, true)? {
            let (m, k) = numbers(&g)?;
            let w = clique_number(&g);
            t.check(&g, w <= m && m <= k, || format!("omega {w}, mp {m}, gp {k}"));
        }
    }
    Ok(())
}

fn mu_lower_bound(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    for n in 2..=p.pick(7, 8) {
        for g in all_graphs(n, true)? {
            let (m, k) = numbers(&g)?;
            t.check(&g, m == k || n >= k + 2, || format!("order {n} with mp {m} < gp {k}"));
        }
    }
    Ok(())
}

fn mu_table(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let expected: [(i64, i64, i64, u64); 13] = [
        (2, 2, 2, 1),
        (2, 3, 5, 1),
        (2, 4, 7, 1),
        (3, 3, 3, 1),
        (3, 4, 6, 12),
        (3, 5, 7, 7),
        (3, 6, 8, 2),
        (4, 4, 4, 1),
        (4, 5, 7, 43),
        (4, 6, 8, 41),
        (5, 5, 5, 1),
        (5, 6, 8, 104),
        (6, 6, 6, 1),
    ];
    let cap = p.pick(7, 8);
    let records = queries::mu_table(cap, &SearchSpace::native())?;
    for (a, b, n, count) in expected.into_iter().filter(|e| e.2 <= cap as i64) {
        let r = records
            .iter()
            .find(|r| r.param("a").ok() == Some(a) && r.param("b").ok() == Some(b))
            .ok_or_else(|| Error::Verification(format!("no record for ({a},{b})")))?;
        let g = match r.witnesses.first() {
            Some(c) => Graph::from_graph6(c)?,
            None => Graph::empty(1)?,
        };
        let ok = r.value == RecordValue::Exact { value: n } && r.witness_count == count;
        t.check(&g, ok, || format!("({a},{b}): {} ({}), expected {n} ({count})", r.value, r.witness_count));
        t.absorb(r.reverify());
    }
    Ok(())
}

fn mex_two(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let space = SearchSpace::native();
    for n in 5..=p.pick(7, 8) {
        let r = queries::mex(n, 2, Mode::Exhaustive, &space)?;
        let claim = if n == 5 { 5 } else { ((n - 1) * (n - 1)).div_ceil(4) as i64 };
        let g = Graph::from_graph6(&r.witnesses[0])?;
        let unique = n < 7 || r.witness_count == 1;
        t.check(&g, r.value.exact() == Some(claim) && unique, || {
            format!("n={n}: {} with {} witnesses, expected {claim}", r.value, r.witness_count)
        });
        let b = queries::mex(n, 2, Mode::Constructive, &space)?;
        let bounds = b.bounds.expect("constructive records carry bounds");
        t.check(&g, bounds.contains(claim), || format!("n={n}: bounds {bounds:?} exclude {claim}"));
    }
    Ok(())
}

fn gex_two(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let space = SearchSpace::native();
    for n in 4..=p.pick(7, 8) {
        let r = queries::gex(n, 2, Mode::Exhaustive, &space)?;
        let claim = if n == 4 { 4 } else { n as i64 - 1 };
        let g = Graph::from_graph6(&r.witnesses[0])?;
        t.check(&g, r.value.exact() == Some(claim), || format!("n={n}: {} expected {claim}", r.value));
    }
    Ok(())
}

fn ramsey_gex(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let space = SearchSpace::native();
    for n in 4..=p.pick(7, 8) {
        let r = queries::gex(n, 3, Mode::Exhaustive, &space)?;
        let g = Graph::from_graph6(&r.witnesses[0])?;
        let size = r.value.exact().unwrap_or(0);
        t.check(&g, size <= 4 * n as i64, || format!("n={n}: gex {size} above {}", 4 * n));
    }
    if p == Profile::Full {
        let r = queries::ramsey_r34(&space)?;
        let g = Graph::from_graph6(&r.witnesses[0])?;
        t.check(&g, r.value.exact() == Some(9), || format!("R(3,4) scan gave {}", r.value));
        t.absorb(r.reverify());
    }
    Ok(())
}

fn diameters_general(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let space = SearchSpace::native();
    for n in 4..=p.pick(7, 8) {
        for a in 3..n {
            compare_diameters(t, n, a, &space)?;
        }
    }
    Ok(())
}

fn diameters_mp2(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let space = SearchSpace::native();
    for n in 3..=p.pick(8, 9) {
        compare_diameters(t, n, 2, &space)?;
    }
    for n in 10..=p.pick(20, 32) {
        t.absorb(queries::achievable_diameters(n, 2, Mode::Constructive, &space)?.reverify());
    }
    Ok(())
}

fn compare_diameters(t: &mut Tally, n: usize, a: usize, space: &SearchSpace) -> Result<()> {
    let exhaustive = queries::achievable_diameters(n, a, Mode::Exhaustive, space)?;
    let claimed: Vec<u32> = queries::claimed_diameters(n, a).into_iter().collect();
    let g = Graph::empty(n)?;
    t.check(&g, exhaustive.value == RecordValue::Set { values: claimed.clone() }, || {
        format!("n={n} a={a}: found {} claimed {claimed:?}", exhaustive.value)
    });
    if n >= 4 {
        let built = queries::achievable_diameters(n, a, Mode::Constructive, space)?;
        t.check(&g, built.value == exhaustive.value, || {
            format!("n={n} a={a}: constructions give {}", built.value)
        });
        t.absorb(built.reverify());
    }
    Ok(())
}

fn diameter_two(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    let space = SearchSpace::native();
    for n in 3..=p.pick(8, 9) {
        let r = queries::diameter2_mp2_exists(n, Mode::Exhaustive, &space)?;
        let claim = queries::diameter_two_claimed(n);
        let g = Graph::empty(n)?;
        t.check(&g, r.value == RecordValue::Exists { value: claim }, || format!("n={n}: {}", r.value));
        t.absorb(r.reverify());
    }
    for n in 11..=p.pick(16, 20) {
        let r = queries::circulant_diameter2_mp2(n)?;
        let g = Graph::empty(n)?;
        let claim = n != CIRCULANT_GAP;
        t.check(&g, r.value == RecordValue::Exists { value: claim }, || format!("circulants n={n}: {}", r.value));
        t.absorb(r.reverify());
    }
    Ok(())
}

/// The only order in 11..=30 without a circulant of diameter 2 and mp 2.
pub const CIRCULANT_GAP: usize = 15;

fn tripling(p: Profile, _: &[Fault], t: &mut Tally) -> Result<()> {
    grid_suite(t, &[FamilyName::GofH, FamilyName::GPrimeOfH, FamilyName::GDoublePrimeOfH]);
    let space = SearchSpace::native();
    for n in 12..=p.pick(24, 40) {
        let r = queries::diameter2_mp2_exists(n, Mode::Constructive, &space)?;
        let g = Graph::empty(n)?;
        t.check(&g, r.value == RecordValue::Exists { value: true }, || format!("n={n}: no construction"));
        t.absorb(r.reverify());
    }
    Ok(())
}

fn suites() -> Vec<Suite> {
    vec![
        Suite { name: "trees", claim: "mp = gp = number of leaves", run: trees },
        Suite { name: "tree-families", claim: "starlike trees, paths and cycles match their formulas", run: trees_family },
        Suite { name: "pagoda", claim: "pagodas have mp 2, gp 2r and a unique gp-set for r <= 4", run: pagoda },
        Suite { name: "join", claim: "join formulas for mp and gp", run: join },
        Suite { name: "multipartite", claim: "mp = gp = max(largest part, number of parts)", run: multipartite },
        Suite { name: "pendant", claim: "a pendant on a shared extreme vertex keeps mp and gp", run: pendant },
        Suite { name: "basic-inequalities", claim: "omega <= mp <= gp", run: basic_inequalities },
        Suite { name: "chalice", claim: "chalice formulas", run: chalice },
        Suite { name: "mas", claim: "mas formulas", run: mas },
        Suite { name: "mu-lower-bound", claim: "mp < gp forces order >= gp + 2", run: mu_lower_bound },
        Suite { name: "mu-table", claim: "smallest orders and solution counts for each (mp, gp)", run: mu_table },
        Suite { name: "half-wheel", claim: "half-wheel formulas", run: half_wheel },
        Suite { name: "turan", claim: "Turan and modified Turan graphs match their formulas", run: turan_star },
        Suite { name: "mex-two", claim: "largest size with mp 2 is ceil((n-1)^2/4), unique from n = 7", run: mex_two },
        Suite { name: "gex-two", claim: "largest size with gp 2 is n - 1 for n >= 5", run: gex_two },
        Suite { name: "ramsey-gex", claim: "gp 3 allows at most 4n edges; R(3,4) = 9", run: ramsey_gex },
        Suite { name: "sectioned-cycles", claim: "sectioned cycles have mp t + 2 and gp 2r + t", run: sectioned_cycles },
        Suite { name: "long-diameter", claim: "flagella and caterpillars match their formulas", run: long_diameter },
        Suite { name: "diameters-general", claim: "diameters with mp a >= 3 are 2..=n-a+1", run: diameters_general },
        Suite { name: "diameters-mp2", claim: "diameters with mp 2 match the claimed set", run: diameters_mp2 },
        Suite { name: "diameter-two", claim: "mp 2 with diameter 2 exists exactly for n in {3,4,5,8} below 10; circulants from 11 except 15", run: diameter_two },
        Suite { name: "tripling", claim: "tripled graphs keep mp 2 and diameter 2", run: tripling },
    ]
}

/// Names of all suites, in the order they run.
pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name).collect()
}

/// Runs every suite at the given profile.
pub fn verify_theorems(profile: Profile) -> TheoremReport {
    verify_theorems_with(profile, &[], None)
}

/// Runs the suites named in `only` (all when `None`) with `faults`
/// injected.
pub fn verify_theorems_with(profile: Profile, faults: &[Fault], only: Option<&[&str]>) -> TheoremReport {
    let mut out = Vec::new();
    for s in suites() {
        if only.is_some_and(|names| !names.contains(&s.name)) {
            continue;
        }
        let start = Instant::now();
        let mut tally = Tally::default();
        if let Err(e) = (s.run)(profile, faults, &mut tally) {
            tally.error(e);
        }
        out.push(SuiteOutcome {
            name: s.name,
            claim: s.claim,
            instances: tally.instances,
            failures: tally.failures,
            counterexample: tally.counterexample,
            elapsed: start.elapsed(),
        });
    }
    TheoremReport { profile, suites: out }
}
