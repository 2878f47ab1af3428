//! Deciding cohomological fullness through the Frobenius comparison maps
//! on Ext, with witnesses for failing indices.
//!
//! `cargo run --example fullness_check`

use cofull::algebra::{OrderKind, PolyRing, PrimeField};
use cofull::fullness::{is_cohomologically_full, verify_regularity_bound};
use cofull::ideal::Ideal;
use cofull::session::parse_polynomial;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let s = PolyRing::new(PrimeField::new(3)?, &["x", "y", "z"], OrderKind::Grevlex)?;
    let p = |t: &str| parse_polynomial(&s, t);
    let gens = ["x^4", "x^3*y", "x^2*y^2*z", "x*y^3", "y^4"].iter().map(|g| p(g)).collect::<Result<Vec<_>, _>>()?;
    let i = Ideal::new(&s, gens)?;

    let rep = is_cohomologically_full(&i, 2)?;
    println!("S/I full: {} (depth {}, dim {})", rep.aggregate, rep.profile.depth, rep.profile.dim);
    for v in &rep.verdicts {
        println!("  H^{}: full {} kernel {:?} witness {:?}", v.index, v.full, v.kernel_dims, v.witness);
    }

    let i2 = i.power(2)?;
    let xy8 = Ideal::new(&s, vec![p("x")?, p("y")?])?.power(8)?;
    println!("I^2 = (x,y)^8: {}", i2.same_as(&xy8)?);
    let rep2 = is_cohomologically_full(&i2, 1)?;
    println!("S/I^2 full: {}, cd = {:?}", rep2.aggregate, rep2.profile.cd());
    let b = verify_regularity_bound(&i2)?;
    println!("max a = {:?} <= {}, reg = {} <= {}", b.max_a, b.a_bound, b.regularity, b.reg_bound);
    Ok(())
}

fn main() {
    run().unwrap();
}
