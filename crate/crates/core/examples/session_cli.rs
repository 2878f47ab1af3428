//! Driving the engine through the session language: parse, run, emit
//! deterministic JSON, and reuse a Gröbner basis cache.
//!
//! `cargo run --example session_cli`

use cofull::session::{emit_json, parse_session, print_session, run_session, strip_timing, GbCache, RunOptions};

const SESSION: &str = "
ring S = F5[x,y,z] grevlex;
ideal I = (x*y, x*z);
invariants I;
fullness I;
ideal J = I^[1];
gb J;
sweep primes [5,7,11,13] segre 3;
";

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let session = parse_session(SESSION)?;
    print!("{}", print_session(&session));

    let dir = std::env::temp_dir().join(format!("cofull-example-{}", std::process::id()));
    let opts = RunOptions { e_max: 1, cache: Some(GbCache::new(&dir)?) };
    let first = run_session(&session, &opts);
    let second = run_session(&session, &opts);
    for r in &first {
        println!("{} -> verdict {:?}", r.input_echo, r.verdict());
    }
    let a: serde_json::Value = serde_json::from_str(&emit_json(&first))?;
    let b: serde_json::Value = serde_json::from_str(&emit_json(&second))?;
    println!("cached rerun identical: {}", strip_timing(&a) == strip_timing(&b));

    match parse_session("ring S = F5[x,y]; ideal I = (w);") {
        Err(e) => println!("error {} at {}:{}: {}", e.code, e.pos.line, e.pos.col, e.message),
        Ok(_) => unreachable!(),
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

fn main() {
    run().unwrap();
}
