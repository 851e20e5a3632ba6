//! Explicit graph families with their known intersection arrays.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arrays::IntersectionArray;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_N: usize = 4096;

/// A family and its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Complete { n: u64 },
    CompleteMultipartite { m: u64, t: u64 },
    Cycle { n: u64 },
    Hypercube { d: u64 },
    Petersen,
    Dodecahedron,
    /// `e`-subsets of an `n`-set, adjacent when they share `e − 1` points.
    Johnson { n: u64, e: u64 },
    Hamming { d: u64, q: u64 },
}

impl Family {
    /// `name` is case-insensitive; `-` and `_` are interchangeable.
    pub fn parse(name: &str, params: &[u64]) -> Result<Self> {
        let key = name.trim().to_ascii_lowercase().replace('-', "_");
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::UnknownFamily(format!(
                    "{key} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let fam = match key.as_str() {
            "complete" => {
                arity(1)?;
                Family::Complete { n: params[0] }
            }
            "complete_multipartite" => {
                arity(2)?;
                Family::CompleteMultipartite {
                    m: params[0],
                    t: params[1],
                }
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle { n: params[0] }
            }
            "hypercube" => {
                arity(1)?;
                Family::Hypercube { d: params[0] }
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "dodecahedron" => {
                arity(0)?;
                Family::Dodecahedron
            }
            "johnson" => match params {
                [n] => Family::Johnson { n: *n, e: 2 },
                [n, e] => Family::Johnson { n: *n, e: *e },
                _ => return Err(Error::UnknownFamily("johnson takes n [e]".into())),
            },
            "hamming" => {
                arity(2)?;
                Family::Hamming {
                    d: params[0],
                    q: params[1],
                }
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        fam.check_parameters()?;
        Ok(fam)
    }

    fn check_parameters(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::UnknownFamily(format!("{self}: {msg}")));
        match *self {
            Family::Complete { n } if n < 2 => bad("need n >= 2"),
            Family::CompleteMultipartite { m, t } if m < 2 || t < 1 => bad("need m >= 2, t >= 1"),
            Family::Cycle { n } if n < 3 => bad("need n >= 3"),
            Family::Hypercube { d } if d < 1 => bad("need d >= 1"),
            Family::Johnson { n, e } if e < 1 || e >= n => bad("need 1 <= e < n"),
            Family::Hamming { d, q } if d < 1 || q < 2 => bad("need d >= 1, q >= 2"),
            _ => Ok(()),
        }
    }

    /// Vertex count, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match *self {
            Family::Complete { n } | Family::Cycle { n } => Some(n),
            Family::CompleteMultipartite { m, t } => m.checked_mul(t),
            Family::Hypercube { d } => 2u64.checked_pow(d.try_into().ok()?),
            Family::Petersen => Some(10),
            Family::Dodecahedron => Some(20),
            Family::Johnson { n, e } => binomial(n, e),
            Family::Hamming { d, q } => q.checked_pow(d.try_into().ok()?),
        }
    }

    /// The intersection array the construction is known to have.
    pub fn claimed_array(&self) -> IntersectionArray {
        let (b, c): (Vec<u64>, Vec<u64>) = match *self {
            Family::Complete { n } => (vec![n - 1], vec![1]),
            Family::CompleteMultipartite { m, t: 1 } => (vec![m - 1], vec![1]),
            Family::CompleteMultipartite { m, t } => {
                (vec![(m - 1) * t, t - 1], vec![1, (m - 1) * t])
            }
            Family::Cycle { n } => {
                let d = n / 2;
                let mut b = vec![2];
                b.extend(std::iter::repeat_n(1, d as usize - 1));
                let mut c = vec![1; d as usize];
                if n % 2 == 0 {
                    c[d as usize - 1] = 2;
                }
                (b, c)
            }
            Family::Hypercube { d } => ((0..d).map(|i| d - i).collect(), (1..=d).collect()),
            Family::Petersen => (vec![3, 2], vec![1, 1]),
            Family::Dodecahedron => (vec![3, 2, 1, 1, 1], vec![1, 1, 1, 2, 3]),
            Family::Johnson { n, e } => {
                let d = e.min(n - e);
                (
                    (0..d).map(|i| (e - i) * (n - e - i)).collect(),
                    (1..=d).map(|i| i * i).collect(),
                )
            }
            Family::Hamming { d, q } => (
                (0..d).map(|i| (d - i) * (q - 1)).collect(),
                (1..=d).collect(),
            ),
        };
        IntersectionArray::new(b, c).expect("family arrays are well formed")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete { n } => write!(f, "complete({n})"),
            Family::CompleteMultipartite { m, t } => write!(f, "complete_multipartite({m},{t})"),
            Family::Cycle { n } => write!(f, "cycle({n})"),
            Family::Hypercube { d } => write!(f, "hypercube({d})"),
            Family::Petersen => f.write_str("petersen"),
            Family::Dodecahedron => f.write_str("dodecahedron"),
            Family::Johnson { n, e } => write!(f, "johnson({n},{e})"),
            Family::Hamming { d, q } => write!(f, "hamming({d},{q})"),
        }
    }
}

/// Accepts `hypercube(4)`, `hypercube 4`, `johnson(7,2)` and bare names.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = match s.find(|ch: char| ch == '(' || ch.is_whitespace()) {
            Some(pos) => (&s[..pos], &s[pos..]),
            None => (s, ""),
        };
        let params = rest
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| Error::UnknownFamily(format!("bad parameter {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::parse(name, &params)
    }
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Outer 5-cycle 0..5, middle 10-cycle 5..15, inner 5-cycle 15..20.
const DODECAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 7), (2, 9), (3, 11), (4, 13),
    (5, 6), (6, 7), (7, 8), (8, 9), (9, 10),
    (10, 11), (11, 12), (12, 13), (13, 14), (14, 5),
    (6, 15), (8, 16), (10, 17), (12, 18), (14, 19),
    (15, 16), (16, 17), (17, 18), (18, 19), (19, 15),
];

fn edges_of(family: Family) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    let n = family.order().expect("checked against the cap") as usize;
    match family {
        Family::Complete { .. } => {
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
        }
        Family::CompleteMultipartite { t, .. } => {
            let t = t as usize;
            for u in 0..n {
                for v in u + 1..n {
                    if u / t != v / t {
                        edges.push((u, v));
                    }
                }
            }
        }
        Family::Cycle { .. } => edges.extend((0..n).map(|u| (u, (u + 1) % n)).map(ordered)),
        Family::Hypercube { d } => {
            for u in 0..n {
                for bit in 0..d {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
        }
        Family::Petersen => return subset_graph(5, 2, |shared| shared == 0),
        Family::Dodecahedron => edges.extend_from_slice(&DODECAHEDRON_EDGES),
        Family::Johnson { n: points, e } => {
            return subset_graph(points as usize, e as usize, |shared| shared + 1 == e as usize)
        }
        Family::Hamming { d, q } => {
            let q = q as usize;
            for u in 0..n {
                let mut place = 1;
                for _ in 0..d {
                    let digit = (u / place) % q;
                    for other in digit + 1..q {
                        edges.push((u, u + (other - digit) * place));
                    }
                    place *= q;
                }
            }
        }
    }
    (n, edges)
}

fn ordered((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// `e`-subsets of `{0..points}` as bitmasks, adjacent when `adjacent(|A∩B|)`.
fn subset_graph(
    points: usize,
    e: usize,
    adjacent: impl Fn(usize) -> bool,
) -> (usize, Vec<(usize, usize)>) {
    let subsets: Vec<u64> = (0u64..1 << points)
        .filter(|m| m.count_ones() as usize == e)
        .collect();
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if adjacent((a & b).count_ones() as usize) {
                edges.push((i, j));
            }
        }
    }
    (subsets.len(), edges)
}

/// A simple connected graph together with a BFS-verified intersection array.
#[derive(Debug, Clone)]
pub struct ConcreteGraph {
    name: String,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    claimed_array: IntersectionArray,
    /// Row-major `n × n` distance matrix.
    dist: Vec<u16>,
}

impl ConcreteGraph {
    /// Builds the graph and verifies its array from every base vertex.
    pub fn build(family: Family, max_n: usize) -> Result<Self> {
        family.check_parameters()?;
        let order = family.order().unwrap_or(u64::MAX);
        if order > max_n as u64 {
            return Err(Error::SizeCap {
                n: usize::try_from(order).unwrap_or(usize::MAX),
                cap: max_n,
            });
        }
        let (n, edges) = edges_of(family);
        ConcreteGraph::from_edges(family.to_string(), n, &edges, family.claimed_array())
    }

    /// Any simple graph with a claimed array; fails unless the graph is
    /// connected, regular and distance-regular with exactly that array.
    pub fn from_edges(
        name: impl Into<String>,
        n: usize,
        edges: &[(usize, usize)],
        claimed_array: IntersectionArray,
    ) -> Result<Self> {
        let name = name.into();
        let label = name.clone();
        let fail = move |detail: String| Error::NotDistanceRegular {
            name: label.clone(),
            detail,
        };
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(fail(format!("bad edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(fail(format!("repeated edge at vertex {u}")));
            }
        }
        let mut graph = ConcreteGraph {
            name,
            adjacency,
            edge_count: edges.len(),
            claimed_array,
            dist: vec![u16::MAX; n * n],
        };
        graph.verify_distance_regular().map_err(fail)?;
        Ok(graph)
    }

    fn verify_distance_regular(&mut self) -> std::result::Result<(), String> {
        let n = self.order();
        let arr = self.claimed_array.clone();
        let k = arr.valency() as usize;
        let d = arr.diameter();
        if let Some(u) = (0..n).find(|&u| self.adjacency[u].len() != k) {
            return Err(format!("vertex {u} has degree {}, expected {k}", self.adjacency[u].len()));
        }
        let mut queue = VecDeque::new();
        for x in 0..n {
            let row = &mut self.dist[x * n..(x + 1) * n];
            row[x] = 0;
            queue.push_back(x);
            while let Some(y) = queue.pop_front() {
                for &z in &self.adjacency[y] {
                    if row[z] == u16::MAX {
                        row[z] = row[y] + 1;
                        queue.push_back(z);
                    }
                }
            }
            let row = &self.dist[x * n..(x + 1) * n];
            if let Some(y) = row.iter().position(|&r| r == u16::MAX) {
                return Err(format!("disconnected: {y} unreachable from {x}"));
            }
            let ecc = *row.iter().max().expect("non-empty") as usize;
            if ecc != d {
                return Err(format!("eccentricity of {x} is {ecc}, expected diameter {d}"));
            }
            for (y, &i) in row.iter().enumerate() {
                let i = i as usize;
                let (mut back, mut forward) = (0u64, 0u64);
                for &z in &self.adjacency[y] {
                    match row[z] as usize {
                        r if r + 1 == i => back += 1,
                        r if r == i + 1 => forward += 1,
                        _ => {}
                    }
                }
                if i > 0 && back != arr.c(i) {
                    return Err(format!("c{i} = {back} at ({x}, {y}), expected {}", arr.c(i)));
                }
                if forward != arr.b(i) {
                    return Err(format!("b{i} = {forward} at ({x}, {y}), expected {}", arr.b(i)));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn claimed_array(&self) -> &IntersectionArray {
        &self.claimed_array
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.order() + v] as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// One `u v` line per edge, 0-based.
    pub fn to_edge_list(&self) -> String {
        self.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> ConcreteGraph {
        ConcreteGraph::build(s.parse().unwrap(), DEFAULT_MAX_N).unwrap()
    }

    #[test]
    fn spec_examples() {
        let g = build("hypercube(4)");
        assert_eq!(g.order(), 16);
        assert_eq!(g.claimed_array().render(), "4,3,2,1;1,2,3,4");
        let g = build("dodecahedron");
        assert_eq!((g.order(), g.edge_count()), (20, 30));
        assert_eq!(g.claimed_array().render(), "3,2,1,1,1;1,1,1,2,3");
        assert_eq!(build("complete(4)").claimed_array().render(), "3;1");
    }

    #[test]
    fn every_family_verifies() {
        for s in [
            "complete 2",
            "complete_multipartite(3,1)",
            "complete_multipartite(4,4)",
            "cycle 3",
            "cycle 20",
            "hypercube 1",
            "petersen",
            "johnson(4,2)",
            "johnson(7,3)",
            "hamming(3,3)",
            "hamming(1,5)",
        ] {
            build(s);
        }
        assert_eq!(build("hamming(2,3)").claimed_array().render(), "4,2;1,2");
        assert_eq!(build("johnson 7").claimed_array().render(), "10,4;1,4");
    }

    #[test]
    fn wrong_claim_is_rejected() {
        let (n, edges) = edges_of(Family::Cycle { n: 6 });
        let err = ConcreteGraph::from_edges("c6", n, &edges, "2,1,1;1,1,1".parse().unwrap());
        assert!(matches!(err, Err(Error::NotDistanceRegular { .. })));
    }

    #[test]
    fn caps_and_names() {
        assert!(matches!(
            ConcreteGraph::build(Family::Hypercube { d: 13 }, DEFAULT_MAX_N),
            Err(Error::SizeCap { n: 8192, cap: 4096 })
        ));
        assert!(matches!("moebius 3".parse::<Family>(), Err(Error::UnknownFamily(_))));
        assert!("cycle 2".parse::<Family>().is_err());
        assert!("petersen 3".parse::<Family>().is_err());
        assert_eq!("Complete-Multipartite(3, 2)".parse::<Family>().unwrap().to_string(), "complete_multipartite(3,2)");
    }

    #[test]
    fn edge_list_export() {
        let list = build("complete 3").to_edge_list();
        assert_eq!(list, "0 1\n0 2\n1 2\n");
    }
}
