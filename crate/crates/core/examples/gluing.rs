//! Fullness of intersections J ∩ K against the depth conditions on J, K
//! and J + K.
//!
//! `cargo run --example gluing`

use cofull::algebra::{OrderKind, PolyRing, PrimeField};
use cofull::fullness::gluing_report;
use cofull::ideal::Ideal;
use cofull::session::parse_polynomial;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let s = PolyRing::new(PrimeField::new(3)?, &["x", "y", "z", "w"], OrderKind::Grevlex)?;
    let id = |gs: &[&str]| -> Result<Ideal<PrimeField>, Box<dyn std::error::Error>> {
        Ok(Ideal::new(&s, gs.iter().map(|g| parse_polynomial(&s, g)).collect::<Result<_, _>>()?)?)
    };
    let pairs = [
        ("two planes", id(&["x", "y"])?, id(&["z", "w"])?),
        ("a line and a cube of m", id(&["y", "z", "w"])?, Ideal::maximal(&s).power(3)?),
    ];
    for (name, j, k) in pairs {
        let g = gluing_report(&j, &k)?;
        println!(
            "{name}: l {} l' {} h {} clauses {:?}; full J {} K {} J∩K {} J+K {}",
            g.l, g.l_prime, g.h, g.applicable_clauses, g.full_j, g.full_k, g.full_intersection, g.full_sum
        );
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
