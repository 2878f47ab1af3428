//! Čech classes of Fermat curves, their Frobenius images, and fullness of
//! the Segre product with a polynomial ring in two variables.
//!
//! `cargo run --example segre_fermat`

use cofull::cech::{cech_basis, segre_fullness, CechClass};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for j in 0..=1 {
        let basis: Vec<String> = cech_basis(4, 5, j)?.iter().map(CechClass::to_string).collect();
        println!("quartic, degree {j}: {basis:?}");
    }
    for class in [CechClass::monomial(4, 5, 2, 1, 1, 1)?, CechClass::monomial(4, 5, 3, 2, 1, 1)?] {
        for t in class.frobenius_detail()? {
            println!("F({class}) -> {} with sign {} and binomial {}", t.target, t.sign, t.binomial);
        }
    }
    for (d, p) in [(3, 5), (3, 7), (4, 5), (4, 13)] {
        let v = segre_fullness(d, p)?;
        println!("d = {d}, p = {p}: full {} certified {}", v.full, v.certified);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
