//! Minimal free resolutions, Betti tables, Ext modules and the
//! local cohomology invariants read off from them.
//!
//! `cargo run --example resolution_invariants`

use cofull::algebra::{OrderKind, PolyRing, PrimeField};
use cofull::homological::{FreeResolution, Resolved};
use cofull::ideal::Ideal;
use cofull::session::parse_polynomial;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let s = PolyRing::new(PrimeField::new(2)?, &["x", "y", "z"], OrderKind::Grevlex)?;
    let p = |t: &str| parse_polynomial(&s, t);
    // two coordinate lines meeting in a point, glued to the plane x = 0
    let j = Ideal::new(&s, vec![p("x*y")?, p("x*z")?])?;

    let res = FreeResolution::of_quotient(&j)?;
    println!("ranks {:?}, minimal: {}", res.betti_numbers(), res.is_minimal());
    for ((i, d), b) in res.betti_table() {
        println!("  beta_{{{i},{d}}} = {b}");
    }

    let r = Resolved::new(&j)?;
    for k in 0..=res.length() {
        let ext = r.ext(k)?;
        println!("Ext^{k}(S/J, S): generator degrees {:?}", ext.presentation().degrees());
    }
    let prof = r.profile()?;
    println!(
        "dim {} depth {} pd {} height {} reg {} a-invariants {:?} f_m {:?}",
        prof.dim, prof.depth, prof.pd, prof.height, prof.regularity, prof.a_invariants, prof.finiteness_dimension
    );
    println!("cd(J, S) lies in {:?}", prof.cd_bounds);
    println!("dim H^1_m(S/J)_0 = {}", r.local_cohomology_dim(1, 0)?);
    Ok(())
}

fn main() {
    run().unwrap();
}
