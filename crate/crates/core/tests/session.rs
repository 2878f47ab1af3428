//! The session language: printing round-trips, error codes, and report
//! shape.

use cofull::session::{
    emit_json, parse_session, print_session, run_session, strip_timing, sweep_session, Command, FieldSpec, IdealExpr,
    PolyExpr, RingDecl, RunOptions, Session, Stmt,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const VARS: [&str; 3] = ["x", "y", "z"];

struct Gen {
    rng: ChaCha8Rng,
    ideals: Vec<String>,
}

impl Gen {
    fn poly(&mut self, depth: u32) -> PolyExpr {
        let b = |e: PolyExpr| Box::new(e);
        match if depth == 0 { self.rng.gen_range(0..2) } else { self.rng.gen_range(0..8) } {
            0 => PolyExpr::Int(self.rng.gen_range(1..100u32).to_string()),
            1 => PolyExpr::Var(VARS.choose(&mut self.rng).unwrap().to_string()),
            2 => PolyExpr::Neg(b(self.poly(depth - 1))),
            3 => PolyExpr::Add(b(self.poly(depth - 1)), b(self.poly(depth - 1))),
            4 => PolyExpr::Sub(b(self.poly(depth - 1)), b(self.poly(depth - 1))),
            5 => PolyExpr::Mul(b(self.poly(depth - 1)), b(self.poly(depth - 1))),
            6 => PolyExpr::Div(b(self.poly(depth - 1)), b(PolyExpr::Int(self.rng.gen_range(1..9u32).to_string()))),
            _ => PolyExpr::Pow(b(self.poly(depth - 1)), self.rng.gen_range(0..5)),
        }
    }

    /// Trees the grammar can produce: sums of products of postfixed atoms.
    fn ideal(&mut self, depth: u32) -> IdealExpr {
        let mut e = self.product(depth);
        while depth > 0 && self.rng.gen_bool(0.3) {
            let rhs = self.product(depth - 1);
            e = IdealExpr::Sum(Box::new(e), Box::new(rhs));
        }
        e
    }

    fn product(&mut self, depth: u32) -> IdealExpr {
        let mut e = self.postfixed(depth);
        while depth > 0 && self.rng.gen_bool(0.3) {
            let rhs = self.postfixed(depth - 1);
            e = IdealExpr::Product(Box::new(e), Box::new(rhs));
        }
        e
    }

    fn postfixed(&mut self, depth: u32) -> IdealExpr {
        let mut e = self.atom(depth);
        while self.rng.gen_bool(0.25) {
            e = if self.rng.gen() {
                IdealExpr::Power(Box::new(e), self.rng.gen_range(1..4))
            } else {
                IdealExpr::Bracket(Box::new(e), self.rng.gen_range(0..3))
            };
        }
        e
    }

    fn atom(&mut self, depth: u32) -> IdealExpr {
        let choice = if depth == 0 { self.rng.gen_range(0..3) } else { self.rng.gen_range(0..5) };
        match choice {
            0 => IdealExpr::Gens((0..self.rng.gen_range(0..4)).map(|_| self.poly(2)).collect()),
            1 if !self.ideals.is_empty() => IdealExpr::Name(self.ideals.choose(&mut self.rng).unwrap().clone()),
            1 | 2 => IdealExpr::Sr(
                (0..self.rng.gen_range(1..4))
                    .map(|_| VARS.iter().filter(|_| self.rng.gen()).map(|v| v.to_string()).collect())
                    .collect(),
            ),
            3 => IdealExpr::Intersect(Box::new(self.ideal(depth - 1)), Box::new(self.ideal(depth - 1))),
            _ => IdealExpr::Colon(Box::new(self.ideal(depth - 1)), Box::new(self.ideal(depth - 1))),
        }
    }

    fn command(&mut self, allow_sweep: bool) -> Command {
        let d = 2;
        match self.rng.gen_range(0..if allow_sweep { 15 } else { 14 }) {
            0 => Command::Gb(self.ideal(d)),
            1 => Command::Resolve(self.ideal(d)),
            2 => Command::Invariants(self.ideal(d)),
            3 => Command::Fullness(self.ideal(d)),
            4 => Command::Fedder(self.ideal(d)),
            5 => Command::Fthreshold { a: self.ideal(d), j: None, e: self.rng.gen_range(1..4) },
            6 => Command::Fthreshold { a: self.ideal(d), j: Some(self.ideal(d)), e: self.rng.gen_range(1..4) },
            7 => Command::Lyubeznik(self.ideal(d)),
            8 => Command::Kodaira(self.ideal(d)),
            9 => Command::Qbuchsbaum(self.ideal(d)),
            10 => Command::Degzero(self.ideal(d), self.rng.gen_range(0..4)),
            11 => Command::Surjel(self.ideal(d), self.poly(2), self.rng.gen_range(1..5)),
            12 => Command::Gluing(self.ideal(d), self.ideal(d)),
            13 => Command::Segre { d: self.rng.gen_range(2..6), p: self.rng.gen_bool(0.5).then(|| [5, 7, 13][self.rng.gen_range(0..3)]) },
            _ => Command::Sweep {
                primes: (0..self.rng.gen_range(1..4)).map(|_| [2u64, 3, 5, 7][self.rng.gen_range(0..4)]).collect(),
                inner: Box::new(self.command(false)),
            },
        }
    }

    fn session(&mut self) -> Session {
        let field = FieldSpec::Prime([2u64, 3, 5, 32003][self.rng.gen_range(0..4)]);
        let order = [None, Some("grevlex"), Some("lex"), Some("glex")][self.rng.gen_range(0..4)].map(String::from);
        let mut stmts = vec![Stmt::Ring(RingDecl { name: "S".into(), field, vars: VARS.map(String::from).to_vec(), order })];
        for k in 0..self.rng.gen_range(1..6) {
            if self.rng.gen() {
                let name = format!("I{k}");
                let expr = self.ideal(2);
                self.ideals.push(name.clone());
                stmts.push(Stmt::Ideal { name, expr });
            } else {
                let c = self.command(true);
                stmts.push(Stmt::Command(c));
            }
        }
        Session { stmts }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn print_then_parse_is_the_identity(seed in any::<u64>()) {
        let s = Gen { rng: ChaCha8Rng::seed_from_u64(seed), ideals: Vec::new() }.session();
        let text = print_session(&s);
        let back = parse_session(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&back, &s, "{}", text);
        prop_assert_eq!(print_session(&back), text);
    }

    #[test]
    fn malformed_input_gets_a_code_not_a_panic(words in prop::collection::vec(prop::sample::select(vec![
        "ring", "ideal", "S", "=", "F5", "F4", "Q", "[", "]", "x", "y", "w", ",", ";", "(", ")", "+", "*", "^", "^[", "1",
        "fullness", "sweep", "primes", "segre", "sr", "intersect", "I", "@", "grevlex", "-", "/",
    ]), 0..25)) {
        let text = words.join(" ");
        if let Err(e) = parse_session(&text) {
            prop_assert!(["E_LEX", "E_SYNTAX", "E_BINDING", "E_CHAR_MISMATCH"].contains(&e.code), "{}", e.code);
            prop_assert!(e.pos.line >= 1 && e.pos.col >= 1);
            prop_assert_eq!(e.exit_code(), 2);
        }
    }
}

fn code(text: &str) -> &'static str {
    parse_session(text).unwrap_err().code
}

#[test]
fn each_error_class_has_its_own_code() {
    assert_eq!(code("ring S = F5[x]; ideal I = (x) $ (x);"), "E_LEX");
    assert_eq!(code("ring S = F5[x]; ideal I = (x"), "E_SYNTAX");
    assert_eq!(code("ideal I = (w);"), "E_BINDING");
    assert_eq!(code("ring S = F5[x]; fullness J;"), "E_BINDING");
    assert_eq!(code("ring S = Q[x]; ideal I = (x)^[1];"), "E_CHAR_MISMATCH");
    assert_eq!(code("ring S = F5[x]; ideal I = (x); ring T = F7[x]; ideal J = (x); gluing I J;"), "E_CHAR_MISMATCH");
}

#[test]
fn syntax_errors_carry_position_and_expected_tokens() {
    let e = parse_session("ring S = F5[x,y];\nideal I = (x, y;\n").unwrap_err();
    assert_eq!(e.code, "E_SYNTAX");
    assert_eq!(e.pos.line, 2);
    assert!(!e.expected.is_empty());
    let shown = e.to_string();
    assert!(shown.starts_with("2:") && shown.contains("E_SYNTAX"), "{shown}");
}

#[test]
fn bracket_power_is_its_own_node() {
    let s = parse_session("ring S = F3[x,y]; ideal I = (x); ideal J = I^[1];").unwrap();
    match &s.stmts[2] {
        Stmt::Ideal { expr: IdealExpr::Bracket(inner, 1), .. } => assert_eq!(**inner, IdealExpr::Name("I".into())),
        other => panic!("{other:?}"),
    }
}

fn run(text: &str) -> serde_json::Value {
    let reports = run_session(&parse_session(text).unwrap(), &RunOptions::default());
    serde_json::from_str(&emit_json(&reports)).unwrap()
}

#[test]
fn reports_have_the_documented_keys() {
    let v = run("ring S = F5[x,y,z]; ideal I = (x*y, x*z); fullness I; gb I;");
    for r in v.as_array().unwrap() {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["certifications", "command", "engine_version", "input_echo", "result", "timing_ms", "witnesses"]);
        assert!(r["witnesses"].is_array() && r["certifications"].is_array());
    }
    assert_eq!(v[0]["result"]["verdict"], serde_json::json!(true));
    assert_eq!(v[0]["witnesses"], serde_json::json!([]));
}

#[test]
fn engine_errors_become_reports_with_codes() {
    let v = run("ring S = Q[x,y]; ideal I = (x*y); fullness I; gb I;");
    assert_eq!(v[0]["result"]["error"]["code"], "E_CHARACTERISTIC");
    assert!(v[1]["result"].get("error").is_none());
    let v = run("ring S = F3[x,y,z]; ideal I = (x*y, x*z); surjel I (x) 2;");
    assert_eq!(v[0]["result"]["error"]["code"], "E_ZERODIVISOR");
}

#[test]
fn a_failing_fullness_check_names_its_witness() {
    let v = run("ring S = F3[x,y,z]; ideal I = (x^4, x^3*y, x^2*y^2*z, x*y^3, y^4); fullness I;");
    assert_eq!(v[0]["result"]["verdict"], serde_json::json!(false));
    assert_eq!(v[0]["result"]["failing_indices"], serde_json::json!([0]));
    assert_eq!(v[0]["witnesses"].as_array().unwrap().len(), 1);
}

#[test]
fn invariants_of_two_coordinate_hyperplanes_meeting_a_line() {
    let v = run("ring S = F2[x,y,z]; invariants (x*y, x*z);");
    let r = &v[0]["result"];
    assert_eq!((r["depth"].as_u64(), r["pd"].as_u64(), r["regularity"].as_i64()), (Some(1), Some(2), Some(1)));
    assert_eq!(r["cd"]["value"], serde_json::json!(2));
}

#[test]
fn sweeps_match_individual_runs() {
    let s = parse_session("ring S = F5[x,y,z]; segre 3;").unwrap();
    let swept = sweep_session(&s, &[5, 7, 11, 13], &RunOptions::default());
    let v: serde_json::Value = serde_json::from_str(&emit_json(&swept)).unwrap();
    assert_eq!(v[0]["result"]["verdicts"], serde_json::json!({"5": false, "7": true, "11": false, "13": true}));
    for p in [5, 7, 11, 13] {
        let single = run(&format!("ring S = F{p}[x,y,z]; segre 3;"));
        let stripped = strip_timing(&single);
        assert_eq!(v[0]["result"]["per_prime"][p.to_string()], stripped[0]["result"]);
    }
}
