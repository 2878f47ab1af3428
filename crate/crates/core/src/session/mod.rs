//! The session language: parsing, evaluation, JSON reports and the
//! on-disk basis cache.

mod cache;
mod eval;
mod lexer;
mod report;
mod syntax;

use std::fmt;

pub use cache::GbCache;
pub use eval::{parse_polynomial, run_session, sweep_session, RunOptions};
pub use lexer::{lex, Pos, Tok, Token};
pub use report::{emit_json, strip_timing, Report};
pub use syntax::{
    command_to_string, ideal_to_string, parse_session, poly_to_string, print_session, Command, FieldSpec, IdealExpr,
    PolyExpr, RingDecl, Session, Stmt,
};

/// A front-end error with a position and, for syntax errors, the tokens
/// that would have been accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// One of `E_LEX`, `E_SYNTAX`, `E_BINDING`, `E_CHAR_MISMATCH`.
    pub code: &'static str,
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

impl SyntaxError {
    pub(crate) fn lexical(pos: Pos, message: String) -> Self {
        SyntaxError { code: "E_LEX", pos, message, expected: Vec::new() }
    }

    pub(crate) fn syntax(pos: Pos, message: String, expected: Vec<String>) -> Self {
        SyntaxError { code: "E_SYNTAX", pos, message, expected }
    }

    pub(crate) fn binding(pos: Pos, message: String) -> Self {
        SyntaxError { code: "E_BINDING", pos, message, expected: Vec::new() }
    }

    pub(crate) fn char_mismatch(pos: Pos, message: String) -> Self {
        SyntaxError { code: "E_CHAR_MISMATCH", pos, message, expected: Vec::new() }
    }

    /// Parse errors exit with status 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} [{}]", self.pos.line, self.pos.col, self.message, self.code)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for SyntaxError {}
