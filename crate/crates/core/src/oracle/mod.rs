//! Independent ground truth: effective resistance from the graph Laplacian
//! on explicitly constructed graphs, and a vertex-by-vertex check of the
//! harmonic potential built from the intersection array.

mod graph;
mod linalg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fraction_string, ser_ratio};
use crate::potentials::{phi_recursive, resistances, PhiSequence};

pub use graph::{ConcreteGraph, Family, DEFAULT_MAX_N};
pub use linalg::Matrix;

/// Above this order, `cross_check` samples pairs instead of taking all.
pub const EXHAUSTIVE_LIMIT: usize = 256;
pub const SAMPLES_PER_CLASS: usize = 64;
pub const DEFAULT_SEED: u64 = 0;

/// Effective resistances of one graph, from a single inversion of the
/// Laplacian with one vertex grounded.
#[derive(Debug, Clone)]
pub struct Oracle<'g> {
    graph: &'g ConcreteGraph,
    ground: usize,
    inverse: Matrix,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g ConcreteGraph) -> Result<Self> {
        Oracle::with_ground(graph, graph.order() - 1)
    }

    pub fn with_ground(graph: &'g ConcreteGraph, ground: usize) -> Result<Self> {
        let n = graph.order();
        if ground >= n {
            return Err(Error::MalformedInput(format!("ground {ground} out of range")));
        }
        let mut lap = Matrix::zeros(n - 1);
        let slot = |w: usize| if w < ground { Some(w) } else if w > ground { Some(w - 1) } else { None };
        for u in 0..n {
            let Some(i) = slot(u) else { continue };
            lap.set(i, i, BigRational::from_integer(graph.neighbors(u).len().into()));
            for &v in graph.neighbors(u) {
                if let Some(j) = slot(v) {
                    lap.set(i, j, BigRational::from_integer(BigInt::from(-1)));
                }
            }
        }
        Ok(Oracle {
            graph,
            ground,
            inverse: lap.inverse()?,
        })
    }

    pub fn graph(&self) -> &'g ConcreteGraph {
        self.graph
    }

    fn green(&self, u: usize, v: usize) -> BigRational {
        let slot = |w: usize| if w < self.ground { Some(w) } else if w > self.ground { Some(w - 1) } else { None };
        match (slot(u), slot(v)) {
            (Some(i), Some(j)) => self.inverse.get(i, j).clone(),
            _ => BigRational::zero(),
        }
    }

    /// Potential difference for a unit current from `u` to `v`.
    pub fn effective_resistance(&self, u: usize, v: usize) -> Result<BigRational> {
        let n = self.graph.order();
        if u >= n || v >= n {
            return Err(Error::MalformedInput(format!("vertex out of range 0..{n}")));
        }
        Ok(self.green(u, u) + self.green(v, v) - self.green(u, v) * BigInt::from(2))
    }
}

/// For an edge `uv`, vertices grouped by `(d(u,z), d(v,z))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistancePartition {
    pub u: usize,
    pub v: usize,
    /// `Kᵢⁱ`: equidistant from `u` and `v`.
    pub equidistant: Vec<Vec<usize>>,
    /// `Kᵢ^{i+1}`: at distance `i` from `u` and `i + 1` from `v`.
    pub nearer_u: Vec<Vec<usize>>,
    /// `K_{i+1}ⁱ`: at distance `i + 1` from `u` and `i` from `v`.
    pub nearer_v: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionSizes {
    pub equidistant: Vec<usize>,
    pub nearer_u: Vec<usize>,
    pub nearer_v: Vec<usize>,
}

impl DistancePartition {
    pub fn sizes(&self) -> PartitionSizes {
        let lens = |sets: &[Vec<usize>]| sets.iter().map(Vec::len).collect();
        PartitionSizes {
            equidistant: lens(&self.equidistant),
            nearer_u: lens(&self.nearer_u),
            nearer_v: lens(&self.nearer_v),
        }
    }
}

pub fn distance_partition(g: &ConcreteGraph, u: usize, v: usize) -> Result<DistancePartition> {
    if u >= g.order() || v >= g.order() || !g.is_adjacent(u, v) {
        return Err(Error::NotAdjacent { u, v });
    }
    let d = g.claimed_array().diameter();
    let mut part = DistancePartition {
        u,
        v,
        equidistant: vec![Vec::new(); d + 1],
        nearer_u: vec![Vec::new(); d],
        nearer_v: vec![Vec::new(); d],
    };
    for z in 0..g.order() {
        let (du, dv) = (g.distance(u, z), g.distance(v, z));
        if du == dv {
            part.equidistant[du].push(z);
        } else if du + 1 == dv {
            part.nearer_u[du].push(z);
        } else if dv + 1 == du {
            part.nearer_v[dv].push(z);
        } else {
            unreachable!("adjacent vertices differ in distance by at most one");
        }
    }
    Ok(part)
}

/// The result of one successful harmonic check on an edge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HarmonicRecord {
    pub u: usize,
    pub v: usize,
    /// Vertices other than `u`, `v` at which the flow balance was checked.
    pub interior_checked: usize,
    /// Net current `Σ_{x∼u} (f(u) − f(x))` out of `u`.
    #[serde(serialize_with = "ser_ratio")]
    pub current: BigRational,
    /// `(f(u) − f(v))/current`, equal to the oracle value and to `d₁`.
    #[serde(serialize_with = "ser_ratio")]
    pub resistance: BigRational,
}

/// Builds `f` on the partition (`f = φᵢ` on `Kᵢ^{i+1}`, `−φᵢ` on `K_{i+1}ⁱ`,
/// `0` on `Kᵢⁱ`) and checks that it is harmonic off `{u, v}` and that it
/// reproduces the resistance across the edge.
pub fn verify_harmonic(oracle: &Oracle<'_>, phi: &PhiSequence, u: usize, v: usize) -> Result<HarmonicRecord> {
    let g = oracle.graph();
    let part = distance_partition(g, u, v)?;
    let mut f = vec![BigRational::zero(); g.order()];
    for (i, (near_u, near_v)) in part.nearer_u.iter().zip(&part.nearer_v).enumerate() {
        for &z in near_u {
            f[z] = phi.get(i);
        }
        for &z in near_v {
            f[z] = -phi.get(i);
        }
    }

    let flow = |z: usize| -> BigRational {
        g.neighbors(z)
            .iter()
            .fold(BigRational::zero(), |acc, &x| acc + &f[x] - &f[z])
    };
    let mut interior_checked = 0;
    for z in (0..g.order()).filter(|&z| z != u && z != v) {
        let residual = flow(z);
        if !residual.is_zero() {
            return Err(Error::HarmonicityViolation {
                vertex: z,
                residual: fraction_string(&residual),
            });
        }
        interior_checked += 1;
    }

    let current = -flow(u);
    if current.is_zero() {
        return Err(Error::HarmonicityViolation {
            vertex: u,
            residual: "0 (no current leaves the source)".into(),
        });
    }
    let resistance = (&f[u] - &f[v]) / &current;
    let mismatch = |expected: &BigRational| Error::ResistanceMismatch {
        u,
        v,
        expected: fraction_string(expected),
        found: fraction_string(&resistance),
    };
    let solved = oracle.effective_resistance(u, v)?;
    if resistance != solved {
        return Err(mismatch(&solved));
    }
    let d1 = resistances(phi).d[0].clone();
    if resistance != d1 {
        return Err(mismatch(&d1));
    }
    Ok(HarmonicRecord {
        u,
        v,
        interior_checked,
        current,
        resistance,
    })
}

/// Runs [`verify_harmonic`] on every edge.
pub fn verify_harmonic_all(oracle: &Oracle<'_>) -> Result<Vec<HarmonicRecord>> {
    let phi = phi_recursive(oracle.graph().claimed_array())?;
    oracle
        .graph()
        .edges()
        .map(|(u, v)| verify_harmonic(oracle, &phi, u, v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassCheck {
    pub distance: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub expected: BigRational,
    pub pairs_total: usize,
    pub pairs_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub graph: String,
    pub n: usize,
    pub exhaustive: bool,
    pub classes: Vec<ClassCheck>,
}

impl CrossCheckReport {
    pub fn pairs_checked(&self) -> usize {
        self.classes.iter().map(|c| c.pairs_checked).sum()
    }
}

/// Compares the oracle against `dⱼ` for every pair at each distance `j`;
/// above [`EXHAUSTIVE_LIMIT`] vertices, a seeded sample of
/// [`SAMPLES_PER_CLASS`] pairs per class.
pub fn cross_check(oracle: &Oracle<'_>, seed: u64) -> Result<CrossCheckReport> {
    cross_check_with_limit(oracle, seed, EXHAUSTIVE_LIMIT)
}

/// [`cross_check`] with sampling switched on above `exhaustive_limit`.
pub fn cross_check_with_limit(
    oracle: &Oracle<'_>,
    seed: u64,
    exhaustive_limit: usize,
) -> Result<CrossCheckReport> {
    let g = oracle.graph();
    let phi = phi_recursive(g.claimed_array())?;
    let profile = resistances(&phi);
    let n = g.order();
    let d = g.claimed_array().diameter();
    let exhaustive = n <= exhaustive_limit;

    let mut by_class: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d + 1];
    for u in 0..n {
        for v in u + 1..n {
            by_class[g.distance(u, v)].push((u, v));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes = Vec::with_capacity(d);
    for (j, pairs) in by_class.iter().enumerate().skip(1) {
        let expected = profile.at(j).expect("1 <= j <= D").clone();
        let chosen: Vec<(usize, usize)> = if exhaustive {
            pairs.clone()
        } else {
            pairs
                .choose_multiple(&mut rng, SAMPLES_PER_CLASS)
                .copied()
                .collect()
        };
        for &(u, v) in &chosen {
            let found = oracle.effective_resistance(u, v)?;
            if found != expected {
                return Err(Error::ResistanceMismatch {
                    u,
                    v,
                    expected: fraction_string(&expected),
                    found: fraction_string(&found),
                });
            }
        }
        classes.push(ClassCheck {
            distance: j,
            expected,
            pairs_total: pairs.len(),
            pairs_checked: chosen.len(),
        });
    }
    Ok(CrossCheckReport {
        graph: g.name().to_string(),
        n,
        exhaustive,
        classes,
    })
}
