//! F-purity by Fedder's criterion and F-threshold sequences.
//!
//! `cargo run --example fedder_fthreshold`

use cofull::algebra::{OrderKind, PolyRing, PrimeField};
use cofull::fullness::{f_threshold, fedder_fpure};
use cofull::ideal::Ideal;
use cofull::session::parse_polynomial;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for p in [5, 7, 11, 13] {
        let s = PolyRing::new(PrimeField::new(p)?, &["x", "y", "z"], OrderKind::Grevlex)?;
        let cubic = Ideal::new(&s, vec![parse_polynomial(&s, "x^3 + y^3 + z^3")?])?;
        let r = fedder_fpure(&cubic)?;
        println!("Fermat cubic over F_{p}: F-pure {} witness {:?}", r.fpure, r.witness);
    }

    let s = PolyRing::new(PrimeField::new(5)?, &["x", "y"], OrderKind::Grevlex)?;
    let m = Ideal::maximal(&s);
    let t = f_threshold(&m, &m, 2)?;
    for row in &t.rows {
        println!(
            "nu(5^{}) = {} (ratio {}/{}, pigeonhole bound {})",
            row.e, row.nu, row.ratio.0, row.ratio.1, row.pigeonhole_bound
        );
    }
    println!("monotone: {}", t.monotone);
    Ok(())
}

fn main() {
    run().unwrap();
}
