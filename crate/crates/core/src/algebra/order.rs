//! Monomial orders.

use std::cmp::Ordering;

use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Kinds of term order. `Elimination(k)` compares the total degree in the
/// `k` highest-precedence variables first, then falls back to grevlex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    GradedLex,
    Elimination(u8),
}

impl OrderKind {
    pub fn name(&self) -> String {
        match self {
            OrderKind::Grevlex => "grevlex".into(),
            OrderKind::Lex => "lex".into(),
            OrderKind::GradedLex => "glex".into(),
            OrderKind::Elimination(k) => format!("elim{k}"),
        }
    }
}

/// A term order on monomials in `nvars` variables. `precedence[r]` is the
/// variable of rank `r`; rank 0 is the largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    nvars: u8,
    precedence: [u8; MAX_VARS],
}

impl TermOrder {
    /// Order with declaration-order precedence (`x_0 > x_1 > ...`).
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        let mut precedence = [0u8; MAX_VARS];
        for (i, p) in precedence.iter_mut().enumerate() {
            *p = i as u8;
        }
        TermOrder { kind, nvars: nvars as u8, precedence }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    /// Order with an explicit precedence permutation.
    pub fn with_precedence(kind: OrderKind, precedence: &[usize]) -> Result<Self> {
        let n = precedence.len();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { got: n, max: MAX_VARS });
        }
        let mut seen = [false; MAX_VARS];
        let mut prec = [0u8; MAX_VARS];
        for (r, &v) in precedence.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::Precondition("precedence is not a permutation".into()));
            }
            seen[v] = true;
            prec[r] = v as u8;
        }
        Ok(TermOrder { kind, nvars: n as u8, precedence: prec })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn precedence(&self) -> Vec<usize> {
        self.precedence[..self.nvars as usize].iter().map(|&v| v as usize).collect()
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self.kind, OrderKind::Grevlex | OrderKind::GradedLex)
    }

    /// Checked comparison; rejects monomials from rings of different size.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() || a.nvars() != self.nvars() {
            let other = if a.nvars() != self.nvars() { a.nvars() } else { b.nvars() };
            return Err(Error::VariableCountMismatch(self.nvars(), other));
        }
        Ok(self.compare(a, b))
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars as usize;
        let (ea, eb) = (a.raw(), b.raw());
        match self.kind {
            OrderKind::Lex => self.lex_part(ea, eb, n),
            OrderKind::GradedLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_part(ea, eb, n)),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| self.revlex_part(ea, eb, n)),
            OrderKind::Elimination(k) => {
                let k = k as usize;
                let block = |e: &[u16; MAX_VARS]| -> u32 {
                    self.precedence[..k].iter().map(|&v| e[v as usize] as u32).sum()
                };
                block(ea)
                    .cmp(&block(eb))
                    .then_with(|| a.degree().cmp(&b.degree()))
                    .then_with(|| self.revlex_part(ea, eb, n))
            }
        }
    }

    fn lex_part(&self, ea: &[u16; MAX_VARS], eb: &[u16; MAX_VARS], n: usize) -> Ordering {
        for r in 0..n {
            let v = self.precedence[r] as usize;
            if ea[v] != eb[v] {
                return ea[v].cmp(&eb[v]);
            }
        }
        Ordering::Equal
    }

    fn revlex_part(&self, ea: &[u16; MAX_VARS], eb: &[u16; MAX_VARS], n: usize) -> Ordering {
        for r in (0..n).rev() {
            let v = self.precedence[r] as usize;
            if ea[v] != eb[v] {
                return eb[v].cmp(&ea[v]);
            }
        }
        Ordering::Equal
    }
}
