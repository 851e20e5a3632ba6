//! Places ±φᵢ on the distance partition of an edge and confirms the result
//! is the unit-current potential.

use drg_resistance::exact::fraction_string;
use drg_resistance::oracle::{distance_partition, verify_harmonic, ConcreteGraph, Family, Oracle, DEFAULT_MAX_N};
use drg_resistance::potentials::phi_recursive;

fn main() -> drg_resistance::error::Result<()> {
    let graph = ConcreteGraph::build(Family::Dodecahedron, DEFAULT_MAX_N)?;
    let oracle = Oracle::new(&graph)?;
    let phi = phi_recursive(graph.claimed_array())?;
    let (u, v) = graph.edges().next().expect("graph has edges");

    let sizes = distance_partition(&graph, u, v)?.sizes();
    println!("edge {u}-{v}: partition sizes {sizes:?}");
    let record = verify_harmonic(&oracle, &phi, u, v)?;
    println!(
        "harmonic at {} interior vertices, current {}, resistance {}",
        record.interior_checked,
        fraction_string(&record.current),
        fraction_string(&record.resistance)
    );
    Ok(())
}
