//! Solves the Laplacian exactly on concrete graphs and compares every
//! distance class with the array prediction.

use drg_resistance::exact::fraction_string;
use drg_resistance::oracle::{cross_check, ConcreteGraph, Family, Oracle, DEFAULT_MAX_N, DEFAULT_SEED};

fn main() -> drg_resistance::error::Result<()> {
    for spec in ["petersen", "dodecahedron", "hypercube 4", "johnson(7,3)", "hamming(3,3)"] {
        let family: Family = spec.parse()?;
        let graph = ConcreteGraph::build(family, DEFAULT_MAX_N)?;
        let oracle = Oracle::new(&graph)?;
        let report = cross_check(&oracle, DEFAULT_SEED)?;
        let classes: Vec<String> = report
            .classes
            .iter()
            .map(|c| format!("d{}={}", c.distance, fraction_string(&c.expected)))
            .collect();
        println!(
            "{:<22} n={:<3} {} pairs agree: {}",
            report.graph,
            report.n,
            report.pairs_checked(),
            classes.join(" ")
        );
    }
    Ok(())
}
