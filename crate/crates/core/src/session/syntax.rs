//! Abstract syntax, the parser (with name binding) and the printer.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::lexer::{lex, Pos, Tok, Token};
use super::SyntaxError;
use crate::algebra::MAX_VARS;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub order: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Int(String),
    Var(String),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Div(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Gens(Vec<PolyExpr>),
    Name(String),
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Intersect(Box<IdealExpr>, Box<IdealExpr>),
    Colon(Box<IdealExpr>, Box<IdealExpr>),
    Power(Box<IdealExpr>, u32),
    /// `I^[e]`: the Frobenius power `I^{[p^e]}`.
    Bracket(Box<IdealExpr>, u32),
    /// Stanley–Reisner ideal of the complex with these faces.
    Sr(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gb(IdealExpr),
    Resolve(IdealExpr),
    Invariants(IdealExpr),
    Fullness(IdealExpr),
    Fedder(IdealExpr),
    /// `fthreshold a [J] e`; `J` defaults to `a`.
    Fthreshold { a: IdealExpr, j: Option<IdealExpr>, e: u32 },
    Lyubeznik(IdealExpr),
    Kodaira(IdealExpr),
    Qbuchsbaum(IdealExpr),
    Degzero(IdealExpr, u32),
    Surjel(IdealExpr, PolyExpr, u32),
    Gluing(IdealExpr, IdealExpr),
    /// `segre d [p]`; without `p` the ambient characteristic is used.
    Segre { d: u32, p: Option<u64> },
    Sweep { primes: Vec<u64>, inner: Box<Command> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring(RingDecl),
    Ideal { name: String, expr: IdealExpr },
    Command(Command),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub stmts: Vec<Stmt>,
}

impl Session {
    pub fn rings(&self) -> impl Iterator<Item = &RingDecl> {
        self.stmts.iter().filter_map(|s| match s {
            Stmt::Ring(r) => Some(r),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.stmts.iter().filter_map(|s| match s {
            Stmt::Command(c) => Some(c),
            _ => None,
        })
    }
}

pub const COMMANDS: &[&str] = &[
    "gb", "resolve", "invariants", "fullness", "fedder", "fthreshold", "lyubeznik", "kodaira", "qbuchsbaum", "degzero",
    "surjel", "gluing", "segre", "sweep",
];
const KEYWORDS: &[&str] = &["ring", "ideal", "intersect", "colon", "sr", "primes"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
    rings: HashMap<String, RingDecl>,
    current: Option<String>,
    ideals: HashMap<String, String>,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(SyntaxError::syntax(
            self.pos(),
            format!("unexpected {}", self.peek()),
            expected.iter().map(|s| s.to_string()).collect(),
        ))
    }

    fn expect(&mut self, tok: Tok, shown: &str) -> PResult<Pos> {
        if *self.peek() == tok {
            Ok(self.bump().pos)
        } else {
            self.unexpected(&[shown])
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Pos)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let p = self.bump().pos;
                Ok((s, p))
            }
            _ => self.unexpected(&[what]),
        }
    }

    fn int<T: std::str::FromStr>(&mut self, what: &str) -> PResult<T> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let pos = self.bump().pos;
                s.parse().map_err(|_| SyntaxError::syntax(pos, format!("integer {s} out of range"), vec![what.into()]))
            }
            _ => self.unexpected(&[what]),
        }
    }

    fn session(&mut self) -> PResult<Session> {
        let mut stmts = Vec::new();
        while *self.peek() != Tok::Eof {
            stmts.push(self.stmt()?);
            self.expect(Tok::Semi, "`;`")?;
        }
        if stmts.is_empty() {
            return self.unexpected(&["`ring`", "`ideal`", "a command"]);
        }
        Ok(Session { stmts })
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let Tok::Ident(word) = self.peek().clone() else {
            let mut exp = vec!["`ring`", "`ideal`"];
            exp.extend(COMMANDS.iter().copied());
            return self.unexpected(&exp);
        };
        match word.as_str() {
            "ring" => self.ring_decl().map(Stmt::Ring),
            "ideal" => {
                self.bump();
                let (name, pos) = self.ident("ideal name")?;
                self.check_new_name(&name, pos)?;
                self.expect(Tok::Eq, "`=`")?;
                let ring = self.require_ring(pos)?;
                let (expr, r) = self.ideal_expr()?;
                if let Some(r) = r {
                    self.same_ring(&ring, &r, pos)?;
                }
                self.ideals.insert(name.clone(), ring);
                Ok(Stmt::Ideal { name, expr })
            }
            _ => self.command().map(Stmt::Command),
        }
    }

    fn check_new_name(&self, name: &str, pos: Pos) -> PResult<()> {
        if KEYWORDS.contains(&name) || COMMANDS.contains(&name) {
            return Err(SyntaxError::binding(pos, format!("`{name}` is reserved")));
        }
        Ok(())
    }

    fn ring_decl(&mut self) -> PResult<RingDecl> {
        self.bump();
        let (name, pos) = self.ident("ring name")?;
        self.check_new_name(&name, pos)?;
        self.expect(Tok::Eq, "`=`")?;
        let (fname, fpos) = self.ident("`F<prime>` or `Q`")?;
        let field = if fname == "Q" {
            FieldSpec::Rationals
        } else if let Some(p) = fname.strip_prefix('F').and_then(|d| d.parse::<u64>().ok()) {
            if !crate::algebra::field::is_prime(p) {
                return Err(SyntaxError::syntax(fpos, format!("{p} is not prime"), vec!["`F<prime>`".into()]));
            }
            FieldSpec::Prime(p)
        } else {
            return Err(SyntaxError::syntax(fpos, format!("unknown coefficient field `{fname}`"), vec!["`F<prime>`".into(), "`Q`".into()]));
        };
        self.expect(Tok::LBracket, "`[`")?;
        let mut vars = Vec::new();
        loop {
            let (v, vpos) = self.ident("variable name")?;
            if vars.contains(&v) {
                return Err(SyntaxError::binding(vpos, format!("variable {v} declared twice")));
            }
            vars.push(v);
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                }
                Tok::RBracket => {
                    self.bump();
                    break;
                }
                _ => return self.unexpected(&["`,`", "`]`"]),
            }
        }
        if vars.len() > MAX_VARS {
            return Err(SyntaxError::binding(pos, format!("at most {MAX_VARS} variables are supported")));
        }
        let order = match self.peek().clone() {
            Tok::Ident(o) => {
                let opos = self.bump().pos;
                if !["grevlex", "lex", "glex"].contains(&o.as_str()) {
                    return Err(SyntaxError::syntax(opos, format!("unknown order `{o}`"), vec!["`grevlex`".into(), "`lex`".into(), "`glex`".into()]));
                }
                Some(o)
            }
            _ => None,
        };
        let decl = RingDecl { name: name.clone(), field, vars, order };
        self.rings.insert(name.clone(), decl.clone());
        self.current = Some(name);
        Ok(decl)
    }

    fn require_ring(&self, pos: Pos) -> PResult<String> {
        self.current.clone().ok_or_else(|| SyntaxError::binding(pos, "no ring declared yet".into()))
    }

    fn same_ring(&self, a: &str, b: &str, pos: Pos) -> PResult<()> {
        if a == b {
            return Ok(());
        }
        let (ra, rb) = (&self.rings[a], &self.rings[b]);
        if ra.field != rb.field {
            return Err(SyntaxError::char_mismatch(pos, format!("rings {a} and {b} have different characteristics")));
        }
        Err(SyntaxError::binding(pos, format!("ideals live in different rings {a} and {b}")))
    }

    fn join(&self, a: Option<String>, b: Option<String>, pos: Pos) -> PResult<Option<String>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                self.same_ring(&x, &y, pos)?;
                Ok(Some(x))
            }
            (x, None) | (None, x) => Ok(x),
        }
    }

    /// Parse an ideal expression; also returns the ring it was bound to.
    fn ideal_expr(&mut self) -> PResult<(IdealExpr, Option<String>)> {
        let (mut lhs, mut ring) = self.ideal_product()?;
        while *self.peek() == Tok::Plus {
            let pos = self.bump().pos;
            let (rhs, r) = self.ideal_product()?;
            ring = self.join(ring, r, pos)?;
            lhs = IdealExpr::Sum(Box::new(lhs), Box::new(rhs));
        }
        Ok((lhs, ring))
    }

    fn ideal_product(&mut self) -> PResult<(IdealExpr, Option<String>)> {
        let (mut lhs, mut ring) = self.ideal_postfix()?;
        while *self.peek() == Tok::Star {
            let pos = self.bump().pos;
            let (rhs, r) = self.ideal_postfix()?;
            ring = self.join(ring, r, pos)?;
            lhs = IdealExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok((lhs, ring))
    }

    fn ideal_postfix(&mut self) -> PResult<(IdealExpr, Option<String>)> {
        let (mut e, ring) = self.ideal_primary()?;
        loop {
            match self.peek() {
                Tok::Caret => {
                    self.bump();
                    e = IdealExpr::Power(Box::new(e), self.int("exponent")?);
                }
                Tok::CaretBracket => {
                    let pos = self.bump().pos;
                    let k = self.int("Frobenius exponent")?;
                    self.expect(Tok::RBracket, "`]`")?;
                    let r = match &ring {
                        Some(r) => r.clone(),
                        None => self.require_ring(pos)?,
                    };
                    if self.rings[&r].field == FieldSpec::Rationals {
                        return Err(SyntaxError::char_mismatch(pos, "bracket powers need positive characteristic".into()));
                    }
                    e = IdealExpr::Bracket(Box::new(e), k);
                }
                _ => return Ok((e, ring)),
            }
        }
    }

    fn ideal_primary(&mut self) -> PResult<(IdealExpr, Option<String>)> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let ring = self.require_ring(pos)?;
                let mut gens = Vec::new();
                if *self.peek() != Tok::RParen {
                    loop {
                        gens.push(self.poly(&ring)?);
                        match self.peek() {
                            Tok::Comma => {
                                self.bump();
                            }
                            Tok::RParen => break,
                            _ => return self.unexpected(&["`,`", "`)`", "an operator"]),
                        }
                    }
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok((IdealExpr::Gens(gens), Some(ring)))
            }
            Tok::Ident(word) if matches!(word.as_str(), "intersect" | "colon") => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let (a, ra) = self.ideal_expr()?;
                let cpos = self.expect(Tok::Comma, "`,`")?;
                let (b, rb) = self.ideal_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                let ring = self.join(ra, rb, cpos)?;
                let (a, b) = (Box::new(a), Box::new(b));
                Ok((if word == "intersect" { IdealExpr::Intersect(a, b) } else { IdealExpr::Colon(a, b) }, ring))
            }
            Tok::Ident(word) if word == "sr" => {
                self.bump();
                let ring = self.require_ring(pos)?;
                self.expect(Tok::LParen, "`(`")?;
                let mut faces = Vec::new();
                loop {
                    self.expect(Tok::LBracket, "`[`")?;
                    let mut face = Vec::new();
                    while let Tok::Ident(_) = self.peek() {
                        let (v, vpos) = self.ident("vertex")?;
                        if !self.rings[&ring].vars.contains(&v) {
                            return Err(SyntaxError::binding(vpos, format!("unknown variable {v}")));
                        }
                        face.push(v);
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        }
                    }
                    self.expect(Tok::RBracket, "`]`")?;
                    faces.push(face);
                    match self.peek() {
                        Tok::Comma => {
                            self.bump();
                        }
                        Tok::RParen => break,
                        _ => return self.unexpected(&["`,`", "`)`"]),
                    }
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok((IdealExpr::Sr(faces), Some(ring)))
            }
            Tok::Ident(name) => {
                self.bump();
                match self.ideals.get(&name) {
                    Some(r) => Ok((IdealExpr::Name(name), Some(r.clone()))),
                    None => Err(SyntaxError::binding(pos, format!("unknown ideal {name}"))),
                }
            }
            _ => self.unexpected(&["`(`", "ideal name", "`intersect`", "`colon`", "`sr`"]),
        }
    }

    fn poly(&mut self, ring: &str) -> PResult<PolyExpr> {
        let mut lhs = self.poly_term(ring)?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.poly_term(ring)?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.poly_term(ring)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn poly_term(&mut self, ring: &str) -> PResult<PolyExpr> {
        let mut lhs = self.poly_unary(ring)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.poly_unary(ring)?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = PolyExpr::Div(Box::new(lhs), Box::new(self.poly_unary(ring)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn poly_unary(&mut self, ring: &str) -> PResult<PolyExpr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(PolyExpr::Neg(Box::new(self.poly_unary(ring)?)));
        }
        let base = self.poly_atom(ring)?;
        if *self.peek() == Tok::Caret {
            self.bump();
            return Ok(PolyExpr::Pow(Box::new(base), self.int("exponent")?));
        }
        Ok(base)
    }

    fn poly_atom(&mut self, ring: &str) -> PResult<PolyExpr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                Ok(PolyExpr::Int(s))
            }
            Tok::Ident(v) => {
                self.bump();
                if !self.rings[ring].vars.contains(&v) {
                    return Err(SyntaxError::binding(pos, format!("unknown variable {v}")));
                }
                Ok(PolyExpr::Var(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.poly(ring)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => self.unexpected(&["integer", "variable", "`(`", "`-`"]),
        }
    }

    /// An ideal argument of a command; all ideal arguments share one ring.
    fn ideal_arg(&mut self, ring: &mut Option<String>) -> PResult<IdealExpr> {
        let pos = self.pos();
        let (e, r) = self.ideal_expr()?;
        *ring = self.join(ring.take(), r, pos)?;
        Ok(e)
    }

    fn command(&mut self) -> PResult<Command> {
        let (word, pos) = self.ident("a command")?;
        let mut ring = None;
        let cmd = match word.as_str() {
            "gb" => Command::Gb(self.ideal_arg(&mut ring)?),
            "resolve" => Command::Resolve(self.ideal_arg(&mut ring)?),
            "invariants" => Command::Invariants(self.ideal_arg(&mut ring)?),
            "fullness" => Command::Fullness(self.ideal_arg(&mut ring)?),
            "fedder" => Command::Fedder(self.ideal_arg(&mut ring)?),
            "lyubeznik" => Command::Lyubeznik(self.ideal_arg(&mut ring)?),
            "kodaira" => Command::Kodaira(self.ideal_arg(&mut ring)?),
            "qbuchsbaum" => Command::Qbuchsbaum(self.ideal_arg(&mut ring)?),
            "fthreshold" => {
                let a = self.ideal_arg(&mut ring)?;
                let j = if matches!(self.peek(), Tok::Int(_)) { None } else { Some(self.ideal_arg(&mut ring)?) };
                Command::Fthreshold { a, j, e: self.int("Frobenius exponent e")? }
            }
            "degzero" => {
                let i = self.ideal_arg(&mut ring)?;
                Command::Degzero(i, self.int("cohomological index")?)
            }
            "surjel" => {
                let i = self.ideal_arg(&mut ring)?;
                let r = match &ring {
                    Some(r) => r.clone(),
                    None => self.require_ring(pos)?,
                };
                let x = self.poly(&r)?;
                Command::Surjel(i, x, self.int("n_max")?)
            }
            "gluing" => {
                let j = self.ideal_arg(&mut ring)?;
                Command::Gluing(j, self.ideal_arg(&mut ring)?)
            }
            "segre" => {
                let d = self.int("degree d")?;
                let p = if matches!(self.peek(), Tok::Int(_)) { Some(self.int("prime p")?) } else { None };
                Command::Segre { d, p }
            }
            "sweep" => {
                if *self.peek() == Tok::Ident("primes".into()) {
                    self.bump();
                }
                self.expect(Tok::LBracket, "`[`")?;
                let mut primes = Vec::new();
                loop {
                    let ppos = self.pos();
                    let p: u64 = self.int("prime")?;
                    if !crate::algebra::field::is_prime(p) {
                        return Err(SyntaxError::syntax(ppos, format!("{p} is not prime"), vec!["prime".into()]));
                    }
                    primes.push(p);
                    match self.peek() {
                        Tok::Comma => {
                            self.bump();
                        }
                        Tok::RBracket => {
                            self.bump();
                            break;
                        }
                        _ => return self.unexpected(&["`,`", "`]`"]),
                    }
                }
                let inner = self.command()?;
                if matches!(inner, Command::Sweep { .. }) {
                    return Err(SyntaxError::syntax(pos, "sweeps do not nest".into(), vec![]));
                }
                Command::Sweep { primes, inner: Box::new(inner) }
            }
            _ => {
                return Err(SyntaxError::syntax(
                    pos,
                    format!("unknown command `{word}`"),
                    COMMANDS.iter().map(|c| format!("`{c}`")).collect(),
                ))
            }
        };
        Ok(cmd)
    }
}

/// Parse and bind a session.
pub fn parse_session(text: &str) -> Result<Session, SyntaxError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, rings: HashMap::new(), current: None, ideals: HashMap::new() };
    p.session()
}

/// Parse a lone polynomial over the given variable names.
pub(crate) fn parse_poly_expr(text: &str, vars: &[String]) -> Result<PolyExpr, SyntaxError> {
    let toks = lex(text)?;
    let ring = RingDecl { name: "_".into(), field: FieldSpec::Rationals, vars: vars.to_vec(), order: None };
    let mut p =
        Parser { toks, at: 0, rings: HashMap::from([("_".to_string(), ring)]), current: None, ideals: HashMap::new() };
    let e = p.poly("_")?;
    if *p.peek() != Tok::Eof {
        return p.unexpected(&["an operator", "end of input"]);
    }
    Ok(e)
}

fn poly_prec(e: &PolyExpr) -> u8 {
    match e {
        PolyExpr::Add(..) | PolyExpr::Sub(..) => 1,
        PolyExpr::Mul(..) | PolyExpr::Div(..) => 2,
        PolyExpr::Neg(_) => 3,
        PolyExpr::Pow(..) => 4,
        PolyExpr::Int(_) | PolyExpr::Var(_) => 5,
    }
}

fn print_poly(e: &PolyExpr, min: u8, out: &mut String) {
    let wrap = poly_prec(e) < min;
    if wrap {
        out.push('(');
    }
    match e {
        PolyExpr::Int(s) | PolyExpr::Var(s) => out.push_str(s),
        PolyExpr::Neg(a) => {
            out.push('-');
            print_poly(a, 3, out);
        }
        PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) => {
            print_poly(a, 1, out);
            out.push_str(if matches!(e, PolyExpr::Add(..)) { " + " } else { " - " });
            print_poly(b, 2, out);
        }
        PolyExpr::Mul(a, b) | PolyExpr::Div(a, b) => {
            print_poly(a, 2, out);
            out.push(if matches!(e, PolyExpr::Mul(..)) { '*' } else { '/' });
            print_poly(b, 3, out);
        }
        PolyExpr::Pow(a, k) => {
            print_poly(a, 5, out);
            let _ = write!(out, "^{k}");
        }
    }
    if wrap {
        out.push(')');
    }
}

pub fn poly_to_string(e: &PolyExpr) -> String {
    let mut s = String::new();
    print_poly(e, 0, &mut s);
    s
}

fn ideal_prec(e: &IdealExpr) -> u8 {
    match e {
        IdealExpr::Sum(..) => 1,
        IdealExpr::Product(..) => 2,
        IdealExpr::Power(..) | IdealExpr::Bracket(..) => 3,
        _ => 4,
    }
}

fn print_ideal(e: &IdealExpr, min: u8, out: &mut String) {
    // the grammar has no grouping for ideals, so parsed trees never need it
    debug_assert!(ideal_prec(e) >= min, "ungroupable ideal expression");
    match e {
        IdealExpr::Gens(gs) => {
            out.push('(');
            out.push_str(&gs.iter().map(poly_to_string).collect::<Vec<_>>().join(", "));
            out.push(')');
        }
        IdealExpr::Name(n) => out.push_str(n),
        IdealExpr::Sum(a, b) => {
            print_ideal(a, 1, out);
            out.push_str(" + ");
            print_ideal(b, 2, out);
        }
        IdealExpr::Product(a, b) => {
            print_ideal(a, 2, out);
            out.push_str(" * ");
            print_ideal(b, 3, out);
        }
        IdealExpr::Intersect(a, b) | IdealExpr::Colon(a, b) => {
            out.push_str(if matches!(e, IdealExpr::Intersect(..)) { "intersect(" } else { "colon(" });
            print_ideal(a, 0, out);
            out.push_str(", ");
            print_ideal(b, 0, out);
            out.push(')');
        }
        IdealExpr::Power(a, k) => {
            print_ideal(a, 3, out);
            let _ = write!(out, "^{k}");
        }
        IdealExpr::Bracket(a, k) => {
            print_ideal(a, 3, out);
            let _ = write!(out, "^[{k}]");
        }
        IdealExpr::Sr(faces) => {
            let fs: Vec<String> = faces.iter().map(|f| format!("[{}]", f.join(", "))).collect();
            let _ = write!(out, "sr({})", fs.join(", "));
        }
    }
}

pub fn ideal_to_string(e: &IdealExpr) -> String {
    let mut s = String::new();
    print_ideal(e, 0, &mut s);
    s
}

pub fn command_to_string(c: &Command) -> String {
    let i = ideal_to_string;
    match c {
        Command::Gb(e) => format!("gb {}", i(e)),
        Command::Resolve(e) => format!("resolve {}", i(e)),
        Command::Invariants(e) => format!("invariants {}", i(e)),
        Command::Fullness(e) => format!("fullness {}", i(e)),
        Command::Fedder(e) => format!("fedder {}", i(e)),
        Command::Lyubeznik(e) => format!("lyubeznik {}", i(e)),
        Command::Kodaira(e) => format!("kodaira {}", i(e)),
        Command::Qbuchsbaum(e) => format!("qbuchsbaum {}", i(e)),
        Command::Fthreshold { a, j: None, e } => format!("fthreshold {} {e}", i(a)),
        Command::Fthreshold { a, j: Some(j), e } => format!("fthreshold {} {} {e}", i(a), i(j)),
        Command::Degzero(e, k) => format!("degzero {} {k}", i(e)),
        Command::Surjel(e, x, n) => format!("surjel {} ({}) {n}", i(e), poly_to_string(x)),
        Command::Gluing(a, b) => format!("gluing {} {}", i(a), i(b)),
        Command::Segre { d, p: None } => format!("segre {d}"),
        Command::Segre { d, p: Some(p) } => format!("segre {d} {p}"),
        Command::Sweep { primes, inner } => {
            let ps: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
            format!("sweep primes [{}] {}", ps.join(", "), command_to_string(inner))
        }
    }
}

pub fn stmt_to_string(s: &Stmt) -> String {
    match s {
        Stmt::Ring(r) => {
            let f = match r.field {
                FieldSpec::Prime(p) => format!("F{p}"),
                FieldSpec::Rationals => "Q".into(),
            };
            let order = r.order.as_ref().map(|o| format!(" {o}")).unwrap_or_default();
            format!("ring {} = {f}[{}]{order}", r.name, r.vars.join(", "))
        }
        Stmt::Ideal { name, expr } => format!("ideal {name} = {}", ideal_to_string(expr)),
        Stmt::Command(c) => command_to_string(c),
    }
}

/// Print a session; parsing the output yields the same session.
pub fn print_session(s: &Session) -> String {
    s.stmts.iter().map(|st| format!("{};\n", stmt_to_string(st))).collect()
}
