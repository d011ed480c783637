//! Generators for the extremal constructions, each paired with the
//! parameters it is claimed to have.
//!
//! Labelings are part of the contract: every generator documents which
//! label each named vertex receives so callers can refer to them directly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{mask_of, named, Graph};
use crate::metric::{diameter, Diameter};
use crate::position::{self, PositionKind};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Pagoda graph on `3r + 1` vertices.
///
/// `a_i = i - 1`, `b_i = r + i - 1`, `c_i = 2r + i - 1` and `x = 3r`, with
/// `b_i` adjacent to `a_j` and `c_j` whenever `j != i`, and `x` adjacent to
/// all of `C`.
pub fn pagoda(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(invalid(format!("pagoda needs r >= 3, got {r}")));
    }
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i != j {
                edges.push((r + i, j));
                edges.push((r + i, 2 * r + j));
            }
        }
        edges.push((2 * r + i, 3 * r));
    }
    Graph::from_edges(3 * r + 1, &edges)
}

/// Pagoda with `a_r` deleted; later labels shift down by one.
pub fn pagoda_prime(r: usize) -> Result<Graph> {
    pagoda(r)?.remove_vertices(&[r - 1])
}

/// Starlike tree `T(r, s, t)`.
///
/// Centre `0`, then the `r` leaves, then the `s` two-vertex branches (inner
/// vertex first), then the `t` vertices of the long branch from the centre
/// outwards.
pub fn starlike_tree(r: usize, s: usize, t: usize) -> Result<Graph> {
    if r + s + t == 0 {
        return Err(invalid("starlike tree needs at least one branch"));
    }
    let n = 1 + r + 2 * s + t;
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for _ in 0..r {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..s {
        edges.push((0, next));
        edges.push((next, next + 1));
        next += 2;
    }
    let mut prev = 0;
    for _ in 0..t {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    Graph::from_edges(n, &edges)
}

/// Chalice `C(r, s, t)`: the starlike tree joined to one more vertex, which
/// gets the last label.
pub fn chalice(r: usize, s: usize, t: usize) -> Result<Graph> {
    let ok = (t >= 1 && r + s >= 2) || (t == 0 && r + s >= 3);
    if !ok {
        return Err(invalid(format!("chalice({r},{s},{t}) outside its valid range")));
    }
    starlike_tree(r, s, t)?.join(&Graph::empty(1)?)
}

/// `Mas(r, s)`.
///
/// The clique `R` is `0..r` with `R'` its first `ceil(r/2)` labels, the
/// independent set `S` follows, then `x = r + s` and `y = r + s + 1`.
pub fn mas(r: usize, s: usize) -> Result<Graph> {
    if r < 2 || s < r / 2 {
        return Err(invalid(format!("mas needs r >= 2 and s >= floor(r/2), got ({r},{s})")));
    }
    let half = ceil_div(r, 2);
    let (x, y) = (r + s, r + s + 1);
    let mut edges = Vec::new();
    for u in 0..r {
        for v in u + 1..r {
            edges.push((u, v));
        }
        edges.push((u, if u < half { x } else { y }));
    }
    for v in r..r + s {
        edges.push((v, x));
        edges.push((v, y));
    }
    Graph::from_edges(r + s + 2, &edges)
}

/// Part sizes of the Turán graph, largest first.
pub fn turan_parts(n: usize, a: usize) -> Vec<usize> {
    (0..a).map(|i| n / a + usize::from(i < n % a)).collect()
}

/// Edge count of the Turán graph.
pub fn turan_size(n: usize, a: usize) -> usize {
    let parts = turan_parts(n, a);
    let sq: usize = parts.iter().map(|p| p * p).sum();
    (n * n - sq) / 2
}

fn check_turan(n: usize, a: usize) -> Result<()> {
    if a < 2 || a > n {
        return Err(invalid(format!("turan needs 2 <= a <= n, got n={n} a={a}")));
    }
    Ok(())
}

/// Turán graph with contiguous parts, largest first.
pub fn turan(n: usize, a: usize) -> Result<Graph> {
    check_turan(n, a)?;
    named::complete_multipartite(&turan_parts(n, a))
}

/// Turán graph with the `floor(n/a)` transversal cliques removed.
///
/// Vertex `u_ij` (part `i`, position `j`, both from zero) is the `j`-th
/// label of part `i`; clique `j` is `{u_0j, .., u_(a-1)j}`.
pub fn turan_star(n: usize, a: usize) -> Result<Graph> {
    check_turan(n, a)?;
    let parts = turan_parts(n, a);
    let starts: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        })
        .collect();
    let mut rows = turan(n, a)?.rows().to_vec();
    for j in 0..n / a {
        for i in 0..a {
            for k in i + 1..a {
                let (u, v) = (starts[i] + j, starts[k] + j);
                rows[u] &= !(1 << v);
                rows[v] &= !(1 << u);
            }
        }
    }
    Graph::from_rows(rows)
}

/// Cycle `0..n-1` plus hub `n - 1` joined to `0, 2, .., 2(b-1)`.
pub fn half_wheel(n: usize, b: usize) -> Result<Graph> {
    if b < 3 || n < 2 * b + 1 {
        return Err(invalid(format!("half_wheel needs b >= 3 and n >= 2b+1, got n={n} b={b}")));
    }
    let spokes: Vec<usize> = (0..b).map(|i| 2 * i).collect();
    named::cycle(n - 1)?.add_vertex(mask_of(&spokes))
}

/// Flagellum `F(n, a, D)` for `2 <= D <= n - a - 1`.
///
/// Path `x_0..x_(D-2)` on labels `0..D-1`, rim `u_0..u_(s-1)` next with
/// `s = n - D - a + 3`, then the `a - 2` pendants on `x_(D-2)`.
pub fn flagellum(n: usize, a: usize, d: usize) -> Result<Graph> {
    if a < 3 || d < 2 || d + a + 1 > n {
        return Err(invalid(format!("flagellum needs a >= 3 and 2 <= D <= n-a-1, got ({n},{a},{d})")));
    }
    let s = n + 3 - d - a;
    let path_len = d - 1;
    let mut edges: Vec<(usize, usize)> = (1..path_len).map(|i| (i - 1, i)).collect();
    for i in 0..s {
        let u = path_len + i;
        edges.push((0, u));
        edges.push((u, path_len + (i + 1) % s));
    }
    for q in 0..a - 2 {
        edges.push((path_len - 1, path_len + s + q));
    }
    Graph::from_edges(n, &edges)
}

/// `F(n, a, n - a)`: path `u_0..u_(n-a)` then `a - 1` vertices joined to
/// `u_0` and `u_1`.
pub fn flagellum_long(n: usize, a: usize) -> Result<Graph> {
    if a < 3 || n < a + 2 {
        return Err(invalid(format!("flagellum_long needs a >= 3 and n >= a+2, got ({n},{a})")));
    }
    let len = n - a + 1;
    let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
    for q in len..n {
        edges.push((0, q));
        edges.push((1, q));
    }
    Graph::from_edges(n, &edges)
}

/// Path `0..=n-a+1` with `a - 2` extra leaves dealt round-robin to the
/// internal vertices `1..=n-a`.
pub fn caterpillar(n: usize, a: usize) -> Result<Graph> {
    if a < 3 || n < a + 2 {
        return Err(invalid(format!("caterpillar needs 3 <= a <= n-2, got ({n},{a})")));
    }
    let spine = n - a + 2;
    let internal = n - a;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for k in 0..a - 2 {
        edges.push((1 + k % internal, spine + k));
    }
    Graph::from_edges(n, &edges)
}

/// `S(r, t)`: cycle on `0..=5r`, chords from `0` to `3 + 5s`, and pendants
/// `5r + 1..` on `0`.
pub fn srt(r: usize, t: usize) -> Result<Graph> {
    srt_adjusted(r, t, 0)
}

/// `S(r, t)` with one section of the cycle stretched by `delta` vertices,
/// or shrunk by one when `delta == -1`.
///
/// The adjusted section runs between the chord ends `8` and `13` (between
/// `3` and `8` when `r = 2`). Shrinking drops the gp-number by one only
/// when `r >= 4`.
pub fn srt_adjusted(r: usize, t: usize, delta: i64) -> Result<Graph> {
    if r < 2 {
        return Err(invalid(format!("srt needs r >= 2, got {r}")));
    }
    let mut deltas = vec![0; r - 1];
    deltas[usize::from(r >= 3)] = delta;
    srt_sections(r, t, &deltas)
}

/// `S(r, t)` with section `k` (the cycle path between chord ends `3 + 5k`
/// and `8 + 5k`) changed by `deltas[k]` vertices, each at least `-1`.
/// Labels stay consecutive around the cycle.
pub fn srt_sections(r: usize, t: usize, deltas: &[i64]) -> Result<Graph> {
    if r < 2 || deltas.len() > r - 1 || deltas.iter().any(|&d| d < -1) {
        return Err(invalid(format!(
            "srt needs r >= 2 and at most r-1 section changes of at least -1, got r={r} {deltas:?}"
        )));
    }
    let mut ends = vec![3usize];
    for k in 0..r - 1 {
        let d = deltas.get(k).copied().unwrap_or(0);
        ends.push((ends[k] as i64 + 5 + d) as usize);
    }
    let len = ends[r - 1] + 3;
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    edges.extend(ends.iter().map(|&e| (0, e)));
    for w in 0..t {
        edges.push((0, len + w));
    }
    Graph::from_edges(len + t, &edges)
}

/// Hangs a path of `k` new vertices from `v`.
pub fn extend_with_path(g: &Graph, v: usize, k: usize) -> Result<Graph> {
    let mut g = g.clone();
    let mut tip = v;
    for _ in 0..k {
        g = g.add_pendant(tip)?;
        tip = g.order() - 1;
    }
    Ok(g)
}

/// Which of the three tripling constructions to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tripling {
    /// Order `3r + 2`.
    Full,
    /// Order `3r + 1`, without `z_2`.
    Prime,
    /// Order `3r`, without `z_1` and `z_2`.
    DoublePrime,
}

impl Tripling {
    pub fn order(self, r: usize) -> usize {
        match self {
            Tripling::Full => 3 * r + 2,
            Tripling::Prime => 3 * r + 1,
            Tripling::DoublePrime => 3 * r,
        }
    }
}

/// Checks that `h` is a seed for the tripling: order at least 4,
/// mp-number 2 and diameter 2.
pub fn check_tripling_seed(h: &Graph) -> Result<()> {
    if h.order() < 4 {
        return Err(Error::Precondition(format!("seed has order {} < 4", h.order())));
    }
    if diameter(h) != Diameter::Finite(2) {
        return Err(Error::Precondition(format!("seed has diameter {}", diameter(h))));
    }
    let mp = position::mp(h)?;
    if mp != 2 {
        return Err(Error::Precondition(format!("seed has mp-number {mp}")));
    }
    Ok(())
}

/// Tripling of a seed `h` on `r` vertices.
///
/// `h` keeps `0..r`, `x_i = r + i`, `y_i = 2r + i`, `z_1 = 3r` and
/// `z_2 = 3r + 1`.
pub fn tripling(h: &Graph, kind: Tripling) -> Result<Graph> {
    check_tripling_seed(h)?;
    let r = h.order();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    for i in 0..r {
        edges.push((i, r + i));
        edges.push((i, 2 * r + i));
        for j in 0..r {
            if i != j {
                edges.push((r + i, 2 * r + j));
            }
        }
    }
    if kind != Tripling::DoublePrime {
        edges.extend((0..r).map(|i| (3 * r, r + i)));
    }
    if kind == Tripling::Full {
        edges.extend((0..r).map(|i| (3 * r + 1, 2 * r + i)));
        edges.push((3 * r, 3 * r + 1));
    }
    Graph::from_edges(kind.order(r), &edges)
}

pub fn g_of_h(h: &Graph) -> Result<Graph> {
    tripling(h, Tripling::Full)
}

pub fn g_prime_of_h(h: &Graph) -> Result<Graph> {
    tripling(h, Tripling::Prime)
}

pub fn g_double_prime_of_h(h: &Graph) -> Result<Graph> {
    tripling(h, Tripling::DoublePrime)
}

/// Blow-up of the 5-cycle `0-1-2-3-4`.
pub fn c5_blowup(sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != 5 {
        return Err(invalid(format!("C5 blow-up needs 5 sizes, got {}", sizes.len())));
    }
    named::cycle(5)?.blow_up(sizes)
}

/// Circulant on `Z_n`: `i ~ j` iff `|i - j| mod n` is a connection.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut edges = Vec::new();
    for &c in connections {
        if c == 0 || c > n / 2 {
            return Err(invalid(format!("connection {c} outside 1..={}", n / 2)));
        }
        edges.extend((0..n).map(|i| (i, (i + c) % n)));
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyName {
    Pagoda,
    PagodaPrime,
    StarlikeTree,
    Chalice,
    Mas,
    Turan,
    TuranStar,
    HalfWheel,
    FlagellumLong,
    Flagellum,
    Caterpillar,
    Srt,
    SrtAdjusted,
    GofH,
    GPrimeOfH,
    GDoublePrimeOfH,
    C5Blowup,
    Cycle,
    Path,
    CompleteMultipartite,
    Circulant,
}

impl FamilyName {
    pub const ALL: [FamilyName; 21] = [
        FamilyName::Pagoda,
        FamilyName::PagodaPrime,
        FamilyName::StarlikeTree,
        FamilyName::Chalice,
        FamilyName::Mas,
        FamilyName::Turan,
        FamilyName::TuranStar,
        FamilyName::HalfWheel,
        FamilyName::FlagellumLong,
        FamilyName::Flagellum,
        FamilyName::Caterpillar,
        FamilyName::Srt,
        FamilyName::SrtAdjusted,
        FamilyName::GofH,
        FamilyName::GPrimeOfH,
        FamilyName::GDoublePrimeOfH,
        FamilyName::C5Blowup,
        FamilyName::Cycle,
        FamilyName::Path,
        FamilyName::CompleteMultipartite,
        FamilyName::Circulant,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Pagoda => "pagoda",
            FamilyName::PagodaPrime => "pagoda-prime",
            FamilyName::StarlikeTree => "starlike",
            FamilyName::Chalice => "chalice",
            FamilyName::Mas => "mas",
            FamilyName::Turan => "turan",
            FamilyName::TuranStar => "turan-star",
            FamilyName::HalfWheel => "half-wheel",
            FamilyName::FlagellumLong => "flagellum-long",
            FamilyName::Flagellum => "flagellum",
            FamilyName::Caterpillar => "caterpillar",
            FamilyName::Srt => "srt",
            FamilyName::SrtAdjusted => "srt-adjusted",
            FamilyName::GofH => "g-of-h",
            FamilyName::GPrimeOfH => "g-prime-of-h",
            FamilyName::GDoublePrimeOfH => "g-double-prime-of-h",
            FamilyName::C5Blowup => "c5-blowup",
            FamilyName::Cycle => "cycle",
            FamilyName::Path => "path",
            FamilyName::CompleteMultipartite => "multipartite",
            FamilyName::Circulant => "circulant",
        }
    }

    /// Parameter synopsis for help text.
    pub fn usage(self) -> &'static str {
        match self {
            FamilyName::Pagoda | FamilyName::PagodaPrime => "r",
            FamilyName::StarlikeTree | FamilyName::Chalice => "r s t",
            FamilyName::Mas => "r s",
            FamilyName::Turan | FamilyName::TuranStar => "n a",
            FamilyName::HalfWheel => "n b",
            FamilyName::FlagellumLong | FamilyName::Caterpillar => "n a",
            FamilyName::Flagellum => "n a D",
            FamilyName::Srt => "r t",
            FamilyName::SrtAdjusted => "r t delta",
            FamilyName::GofH | FamilyName::GPrimeOfH | FamilyName::GDoublePrimeOfH => "<graph6 seed>",
            FamilyName::C5Blowup => "n1 n2 n3 n4 n5",
            FamilyName::Cycle | FamilyName::Path => "n",
            FamilyName::CompleteMultipartite => "parts...",
            FamilyName::Circulant => "n c1 c2 ...",
        }
    }

    fn tripling(self) -> Option<Tripling> {
        match self {
            FamilyName::GofH => Some(Tripling::Full),
            FamilyName::GPrimeOfH => Some(Tripling::Prime),
            FamilyName::GDoublePrimeOfH => Some(Tripling::DoublePrime),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == key)
            .ok_or_else(|| invalid(format!("unknown family {s:?}")))
    }
}

/// A generator together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: Vec<i64>,
    /// Seed graph for the tripling constructions.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "seed_serde")]
    pub seed: Option<Graph>,
}

mod seed_serde {
    use super::Graph;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Option<Graph>, s: S) -> Result<S::Ok, S::Error> {
        match g {
            Some(g) => s.serialize_some(&g.to_graph6()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Graph>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| Graph::from_graph6(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

impl FamilySpec {
    pub fn new(name: FamilyName, params: &[i64]) -> Self {
        FamilySpec {
            name,
            params: params.to_vec(),
            seed: None,
        }
    }

    pub fn with_seed(name: FamilyName, seed: Graph) -> Self {
        FamilySpec {
            name,
            params: Vec::new(),
            seed: Some(seed),
        }
    }

    /// Builds a spec from command-line style words: integer parameters, or
    /// a single graph6 string for the tripling families.
    pub fn parse(name: &str, args: &[&str]) -> Result<Self> {
        let name: FamilyName = name.parse()?;
        if name.tripling().is_some() {
            let [code] = args else {
                return Err(invalid(format!("{name} takes one graph6 seed")));
            };
            return Ok(FamilySpec::with_seed(name, Graph::from_graph6(code)?));
        }
        let params = args
            .iter()
            .map(|a| {
                a.parse::<i64>()
                    .map_err(|_| invalid(format!("parameter {a:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec::new(name, &params))
    }

    fn arity(&self) -> Option<usize> {
        match self.name {
            FamilyName::Pagoda | FamilyName::PagodaPrime | FamilyName::Cycle | FamilyName::Path => Some(1),
            FamilyName::Mas
            | FamilyName::Turan
            | FamilyName::TuranStar
            | FamilyName::HalfWheel
            | FamilyName::FlagellumLong
            | FamilyName::Caterpillar
            | FamilyName::Srt => Some(2),
            FamilyName::StarlikeTree | FamilyName::Chalice | FamilyName::Flagellum | FamilyName::SrtAdjusted => {
                Some(3)
            }
            FamilyName::C5Blowup => Some(5),
            FamilyName::GofH | FamilyName::GPrimeOfH | FamilyName::GDoublePrimeOfH => Some(0),
            FamilyName::CompleteMultipartite | FamilyName::Circulant => None,
        }
    }

    /// Parameters as unsigned integers, after checking the arity.
    fn unsigned(&self) -> Result<Vec<usize>> {
        if let Some(k) = self.arity() {
            if self.params.len() != k {
                return Err(invalid(format!(
                    "{} takes {k} parameters ({}), got {}",
                    self.name,
                    self.name.usage(),
                    self.params.len()
                )));
            }
        }
        let skip_signed = usize::from(self.name == FamilyName::SrtAdjusted);
        self.params[..self.params.len() - skip_signed]
            .iter()
            .map(|&p| usize::try_from(p).map_err(|_| invalid(format!("{}: negative parameter {p}", self.name))))
            .collect()
    }

    pub fn build(&self) -> Result<Graph> {
        if let Some(kind) = self.name.tripling() {
            let seed = self
                .seed
                .as_ref()
                .ok_or_else(|| invalid(format!("{} needs a seed graph", self.name)))?;
            return tripling(seed, kind);
        }
        let p = self.unsigned()?;
        match self.name {
            FamilyName::Pagoda => pagoda(p[0]),
            FamilyName::PagodaPrime => pagoda_prime(p[0]),
            FamilyName::StarlikeTree => starlike_tree(p[0], p[1], p[2]),
            FamilyName::Chalice => chalice(p[0], p[1], p[2]),
            FamilyName::Mas => mas(p[0], p[1]),
            FamilyName::Turan => turan(p[0], p[1]),
            FamilyName::TuranStar => turan_star(p[0], p[1]),
            FamilyName::HalfWheel => half_wheel(p[0], p[1]),
            FamilyName::FlagellumLong => flagellum_long(p[0], p[1]),
            FamilyName::Flagellum => flagellum(p[0], p[1], p[2]),
            FamilyName::Caterpillar => caterpillar(p[0], p[1]),
            FamilyName::Srt => srt(p[0], p[1]),
            FamilyName::SrtAdjusted => srt_adjusted(p[0], p[1], self.params[2]),
            FamilyName::C5Blowup => c5_blowup(&p),
            FamilyName::Cycle => named::cycle(p[0]),
            FamilyName::Path => named::path(p[0]),
            FamilyName::CompleteMultipartite => {
                if p.len() < 2 {
                    return Err(invalid("multipartite needs at least two parts"));
                }
                named::complete_multipartite(&p)
            }
            FamilyName::Circulant => match p.split_first() {
                Some((&n, conns)) => circulant(n, conns),
                None => Err(invalid("circulant needs an order")),
            },
            FamilyName::GofH | FamilyName::GPrimeOfH | FamilyName::GDoublePrimeOfH => unreachable!(),
        }
    }

    /// Closed-form claims attached to this spec. Parameters outside the
    /// generator's range give empty claims.
    pub fn claims(&self) -> FamilyClaims {
        let mut c = FamilyClaims::default();
        if let Some(kind) = self.name.tripling() {
            if let Some(h) = &self.seed {
                c.order = Some(kind.order(h.order()));
                c.mp = Some(2);
                c.diameter = Some(2);
            }
            return c;
        }
        let Ok(p) = self.unsigned() else {
            return c;
        };
        if self.build().is_err() {
            return c;
        }
        match self.name {
            FamilyName::Pagoda => {
                let r = p[0];
                c.order = Some(3 * r + 1);
                c.mp = Some(2);
                c.gp = Some(2 * r);
            }
            FamilyName::PagodaPrime => {
                let r = p[0];
                c.order = Some(3 * r);
                c.mp = Some(2);
                c.gp = Some(2 * r - 1);
            }
            FamilyName::StarlikeTree => {
                let (r, s, t) = (p[0], p[1], p[2]);
                let leaves = (r + s + usize::from(t >= 1)).max(2);
                c.order = Some(r + 2 * s + t + 1);
                c.size = Some(r + 2 * s + t);
                c.mp = Some(leaves);
                c.gp = Some(leaves);
            }
            FamilyName::Chalice => {
                let (r, s, t) = (p[0], p[1], p[2]);
                c.order = Some(r + 2 * s + t + 2);
                if t >= 1 {
                    c.mp = Some(r + s + 1);
                    c.gp = Some(r + 2 * s + t - t / 3);
                } else {
                    c.mp = Some(r + s);
                    c.gp = Some(r + 2 * s);
                }
            }
            FamilyName::Mas => {
                let (r, s) = (p[0], p[1]);
                c.order = Some(r + s + 2);
                c.mp = Some(s + ceil_div(r, 2));
                c.gp = Some(r + s);
            }
            FamilyName::Turan => {
                let (n, a) = (p[0], p[1]);
                c.order = Some(n);
                c.size = Some(turan_size(n, a));
                let both = ceil_div(n, a).max(a);
                c.mp = Some(both);
                c.gp = Some(both);
            }
            FamilyName::TuranStar => {
                let (n, a) = (p[0], p[1]);
                c.order = Some(n);
                c.size = Some(turan_size(n, a) - (n / a) * (a * (a - 1) / 2));
                if n > a * a || (a == 2 && n >= 5) {
                    c.mp = Some(a);
                }
                if a == 2 && n >= 6 {
                    c.diameter = Some(3);
                }
            }
            FamilyName::HalfWheel => {
                let (n, b) = (p[0], p[1]);
                c.order = Some(n);
                c.mp = Some(2);
                if b >= 4 {
                    c.gp = Some(b);
                    c.diameter = Some((3 + ceil_div(n, 2) - b) as u32);
                } else {
                    c.diameter = Some((ceil_div(n, 2) - 1) as u32);
                }
            }
            FamilyName::Flagellum => {
                c.order = Some(p[0]);
                c.mp = Some(p[1]);
                c.diameter = Some(p[2] as u32);
            }
            FamilyName::FlagellumLong => {
                c.order = Some(p[0]);
                c.mp = Some(p[1]);
                c.diameter = Some((p[0] - p[1]) as u32);
            }
            FamilyName::Caterpillar => {
                let (n, a) = (p[0], p[1]);
                c.order = Some(n);
                c.size = Some(n - 1);
                c.mp = Some(a);
                c.gp = Some(a);
                c.diameter = Some((n - a + 1) as u32);
            }
            FamilyName::Srt | FamilyName::SrtAdjusted => {
                let (r, t) = (p[0], p[1]);
                let delta = self.params.get(2).copied().unwrap_or(0);
                let order = (5 * r + 1 + t) as i64 + delta;
                c.order = Some(order as usize);
                c.size = Some(order as usize + r);
                c.mp = Some(t + 2);
                c.gp = Some(2 * r + t - usize::from(delta < 0 && r >= 4));
            }
            FamilyName::C5Blowup => {
                c.order = Some(p.iter().sum());
                c.size = Some((0..5).map(|i| p[i] * p[(i + 1) % 5]).sum());
            }
            FamilyName::Cycle => {
                let n = p[0];
                c.order = Some(n);
                c.diameter = Some((n / 2) as u32);
                let (mp, gp) = match n {
                    3 => (3, 3),
                    4 => (2, 2),
                    _ => (2, 3),
                };
                c.mp = Some(mp);
                c.gp = Some(gp);
            }
            FamilyName::Path => {
                let n = p[0];
                c.order = Some(n);
                c.diameter = Some(n as u32 - 1);
                c.mp = Some(n.min(2));
                c.gp = Some(n.min(2));
            }
            FamilyName::CompleteMultipartite => {
                let both = p.iter().copied().max().unwrap_or(0).max(p.len());
                c.order = Some(p.iter().sum());
                c.mp = Some(both);
                c.gp = Some(both);
                c.diameter = Some(if p.iter().all(|&x| x == 1) { 1 } else { 2 });
            }
            FamilyName::Circulant => {
                c.order = Some(p[0]);
            }
            FamilyName::GofH | FamilyName::GPrimeOfH | FamilyName::GDoublePrimeOfH => {}
        }
        c
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        if let Some(h) = &self.seed {
            write!(f, "{}", h.to_graph6())?;
        }
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Expected parameters of a constructed graph. Absent entries are not
/// claimed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyClaims {
    pub order: Option<usize>,
    pub size: Option<usize>,
    pub mp: Option<usize>,
    pub gp: Option<usize>,
    pub diameter: Option<u32>,
}

/// One claim next to the value actually measured.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub checks: Vec<ClaimCheck>,
}

impl ClaimReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if c.ok {
                write!(f, "{}={} (ok)", c.name, c.actual)?;
            } else {
                write!(f, "{}={} (FAIL, claimed {})", c.name, c.actual, c.expected)?;
            }
        }
        Ok(())
    }
}

impl FamilyClaims {
    pub fn is_empty(&self) -> bool {
        *self == FamilyClaims::default()
    }

    /// Measures every claimed quantity on `g`.
    pub fn check(&self, g: &Graph) -> ClaimReport {
        let mut checks = Vec::new();
        let mut push = |name, expected: String, actual: String| {
            let ok = expected == actual;
            checks.push(ClaimCheck {
                name: String::from(name),
                expected,
                actual,
                ok,
            });
        };
        if let Some(n) = self.order {
            push("order", n.to_string(), g.order().to_string());
        }
        if let Some(m) = self.size {
            push("size", m.to_string(), g.size().to_string());
        }
        let measure = |kind| match position::position_number(g, kind) {
            Ok(w) => w.value.to_string(),
            Err(e) => format!("error: {e}"),
        };
        if let Some(v) = self.mp {
            push("mp", v.to_string(), measure(PositionKind::Monophonic));
        }
        if let Some(v) = self.gp {
            push("gp", v.to_string(), measure(PositionKind::Geodesic));
        }
        if let Some(d) = self.diameter {
            push("diameter", d.to_string(), diameter(g).to_string());
        }
        ClaimReport { checks }
    }
}

/// Builds the graph and checks its claims.
pub fn verify_spec(spec: &FamilySpec) -> Result<(Graph, ClaimReport)> {
    let g = spec.build()?;
    let report = spec.claims().check(&g);
    Ok((g, report))
}

/// The parameter grid over which every family's claims are checked.
pub fn claims_grid() -> Vec<FamilySpec> {
    use FamilyName::*;
    let mut grid = Vec::new();
    let mut add = |name, params: &[usize]| {
        let params: Vec<i64> = params.iter().map(|&p| p as i64).collect();
        grid.push(FamilySpec::new(name, &params));
    };
    for r in 3..=5 {
        add(Pagoda, &[r]);
        add(PagodaPrime, &[r]);
    }
    for r in 0..=14 {
        for s in 0..=7 {
            for t in 0..=14 {
                let valid = (t >= 1 && r + s >= 2) || (t == 0 && r + s >= 3);
                if valid && r + 2 * s + t + 2 <= 16 {
                    add(Chalice, &[r, s, t]);
                }
            }
        }
    }
    for r in 2..=12 {
        for s in r / 2..=12 {
            if r + s + 2 <= 14 {
                add(Mas, &[r, s]);
            }
        }
    }
    for r in 2..=3 {
        for t in 0..=3 {
            add(Srt, &[r, t]);
        }
    }
    for n in 5..=14 {
        for a in 3..=n {
            for d in 2..n {
                if d + a < n {
                    add(Flagellum, &[n, a, d]);
                }
            }
            if n >= a + 2 {
                add(FlagellumLong, &[n, a]);
                add(Caterpillar, &[n, a]);
            }
        }
    }
    for n in 7..=17 {
        for b in 3..=(n - 1) / 2 {
            add(HalfWheel, &[n, b]);
        }
    }
    for n in 2..=14 {
        for a in 2..=n {
            add(TuranStar, &[n, a]);
            add(Turan, &[n, a]);
        }
    }
    for r in 0..=4 {
        for s in 0..=3 {
            for t in 0..=4 {
                if r + s + t >= 1 {
                    add(StarlikeTree, &[r, s, t]);
                }
            }
        }
    }
    for n in 2..=12 {
        add(Path, &[n]);
        if n >= 3 {
            add(Cycle, &[n]);
        }
    }
    let c4 = named::cycle(4).expect("C4");
    let c5 = named::cycle(5).expect("C5");
    for seed in [c4, c5] {
        for name in [GofH, GPrimeOfH, GDoublePrimeOfH] {
            grid.push(FamilySpec::with_seed(name, seed.clone()));
        }
    }
    for r in 2..=4 {
        for t in 0..=3 {
            for delta in -1..=2i64 {
                grid.push(FamilySpec::new(SrtAdjusted, &[r, t, delta]));
            }
        }
    }
    grid
}
