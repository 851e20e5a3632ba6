//! Exact potentials and distance resistances of a few cubic graphs.

use drg_resistance::arrays::{derive_layers, parse_array};
use drg_resistance::exact::{fraction_string, render_decimal};
use drg_resistance::potentials::{phi_closed_form, phi_recursive, resistances};

fn main() -> drg_resistance::error::Result<()> {
    for (name, text) in [
        ("Petersen", "3,2;1,1"),
        ("dodecahedron", "3,2,1,1,1;1,1,1,2,3"),
        ("Biggs-Smith", "3,2,2,2,1,1,1;1,1,1,1,1,1,3"),
    ] {
        let arr = parse_array(text)?;
        let layers = derive_layers(&arr)?;
        let phi = phi_recursive(&arr)?;
        let d = resistances(&phi);
        println!("{name} {arr}: n = {}", layers.n);
        for (i, p) in phi.values().iter().enumerate() {
            assert_eq!(&phi_closed_form(&arr, i)?, p);
            let dist = d.at(i + 1).unwrap();
            println!(
                "  phi{i} = {:<6} d{} = {} ≈ {}",
                fraction_string(p),
                i + 1,
                fraction_string(dist),
                render_decimal(dist, 6)
            );
        }
        println!("  d_D/d_1 = {}", fraction_string(&d.spread()));
    }
    Ok(())
}
