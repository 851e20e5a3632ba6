//! Every potential bound on one array, then the strongly regular checks.

use drg_resistance::arrays::parse_array;
use drg_resistance::bounds::srg::{enumerate_consistent, srg_check, srg_ratio_bound};
use drg_resistance::bounds::{full_report, ladder_relations, srg_eigenvalues, uniform_tail_constant};
use drg_resistance::exact::fraction_string;
use drg_resistance::potentials::phi_recursive;

fn main() -> drg_resistance::error::Result<()> {
    let arr = parse_array("3,2,2,2,1,1,1;1,1,1,1,1,1,3")?;
    let phi = phi_recursive(&arr)?;
    for check in &full_report(&phi).checks {
        println!("{check}");
    }
    println!("uniform tail constant {}", fraction_string(&uniform_tail_constant(&phi)));
    for relation in ladder_relations(&phi) {
        println!("{relation}");
    }

    println!();
    for p in enumerate_consistent(30).filter(|p| p.c2 < p.k).take(8) {
        let e = srg_eigenvalues(&p);
        println!("{p}: eigenvalues {} and {} ({})", e.theta1, e.theta2, e.kind);
        println!("  {}", srg_check(&p)?);
        println!("  {}", srg_ratio_bound(&p)?);
    }
    Ok(())
}
