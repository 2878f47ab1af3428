//! Rings, polynomials, reduced Gröbner bases and the ideal operations.
//!
//! `cargo run --example groebner_basics`

use cofull::algebra::{OrderKind, PolyRing, PrimeField};
use cofull::ideal::Ideal;
use cofull::session::parse_polynomial;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let s = PolyRing::new(PrimeField::new(5)?, &["x", "y", "z"], OrderKind::Grevlex)?;
    let p = |t: &str| parse_polynomial(&s, t);

    let i = Ideal::new(&s, vec![p("x^2 - y*z")?, p("x*y - z^2")?])?;
    println!("reduced basis of {:?}:", i.display_generators());
    for g in i.gb().generators() {
        println!("  {g}");
    }

    let f = p("x^3 - x*y*z")?;
    println!("{f} mod I = {}", i.normal_form(&f)?);

    let a = Ideal::new(&s, vec![p("x")?, p("y")?])?;
    let b = Ideal::new(&s, vec![p("x")?, p("z")?])?;
    println!("(x,y) ∩ (x,z) = {:?}", a.intersect(&b)?.display_generators());
    let lines = Ideal::new(&s, vec![p("x*y")?, p("x*z")?])?;
    println!("(x*y, x*z) : (x) = {:?}", lines.colon(&Ideal::new(&s, vec![p("x")?])?)?.display_generators());
    println!("(x,y)^[1] over F_5 = {:?}", a.frobenius_power(1)?.display_generators());
    println!("(x,y)^3 has {} minimal generators", a.power(3)?.mu());

    let lex = PolyRing::new(PrimeField::new(5)?, &["x", "y", "z"], OrderKind::Lex)?;
    let q = |t: &str| parse_polynomial(&lex, t);
    let twisted = Ideal::new(&lex, vec![q("x - y^2")?, q("y - z^3")?])?;
    println!("lex basis eliminating x, y: {:?}", twisted.gb().generators().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    Ok(())
}

fn main() {
    run().unwrap();
}
