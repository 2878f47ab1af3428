//! Lyubeznik numbers, Kodaira-type vanishing, quasi-Buchsbaumness and
//! degree-zero generation for a full Stanley–Reisner ring.
//!
//! `cargo run --example diagnostics`

use cofull::algebra::{OrderKind, PolyRing, PrimeField};
use cofull::fullness::{degree_zero_generates, kodaira_check, lyubeznik_lambda0, quasi_buchsbaum};
use cofull::ideal::SimplicialComplex;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let s = PolyRing::new(PrimeField::new(2)?, &["x", "y", "z", "w"], OrderKind::Grevlex)?;
    // two disjoint edges: two planes meeting in a point
    let planes = SimplicialComplex::new(4, &[vec![0, 1], vec![2, 3]])?.stanley_reisner(&s)?;
    println!("ideal {:?}", planes.display_generators());
    println!("lambda_(0,j) for j < dim: {:?}", lyubeznik_lambda0(&planes)?);
    let k = kodaira_check(&planes)?;
    println!("Kodaira-type vanishing: {} ({:?})", k.passes(), k.torsion_positive_vanishes);
    println!("quasi-Buchsbaum: {}", quasi_buchsbaum(&planes)?);
    // the top module is not of finite length, so only lower indices are asked
    for i in 0..2 {
        println!("H^{i}_m generated in degree 0: {}", degree_zero_generates(&planes, i)?);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
