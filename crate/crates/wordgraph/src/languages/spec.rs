//! The language-spec grammar: base language names, optional parameters, and
//! the combinators `not`, `and`, `or`, `hull`, `rev`.
//!
//! Specs are canonicalized after parsing: `and`/`or` operands are sorted by
//! their canonical string (and collapsed when equal), double negation and
//! double reversal cancel, nested hulls collapse, and `avoid` factor lists
//! are closed under bit-complement, deduplicated, and sorted. The canonical
//! string is the oracle id used everywhere (CLI, reports).

use std::fmt;

use crate::error::{Error, Result};
use crate::graphs::HostGraph;
use crate::languages::catalog;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageSpec {
    Classical,
    Pal,
    Detp,
    Copy,
    CopyMod(u32),
    HGraph { source: String, host: HostGraph },
    Lyndon,
    LyndonOdd,
    Dyck,
    Nested,
    Balanced,
    ParityOdd,
    ParityEven,
    Avoid(Vec<Vec<u8>>),
    K11(u32),
    EvenSquareShuffle,
    FirstLastDiffer,
    Not(Box<LanguageSpec>),
    And(Box<LanguageSpec>, Box<LanguageSpec>),
    Or(Box<LanguageSpec>, Box<LanguageSpec>),
    Hull(Box<LanguageSpec>),
    Rev(Box<LanguageSpec>),
}

impl fmt::Display for LanguageSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LanguageSpec::*;
        match self {
            Classical => f.write_str("classical"),
            Pal => f.write_str("pal"),
            Detp => f.write_str("detp"),
            Copy => f.write_str("copy"),
            CopyMod(k) => write!(f, "copy-mod:{k}"),
            HGraph { source, .. } => write!(f, "hgraph:{source}"),
            Lyndon => f.write_str("lyndon"),
            LyndonOdd => f.write_str("lyndon-odd"),
            Dyck => f.write_str("dyck"),
            Nested => f.write_str("nested"),
            Balanced => f.write_str("balanced"),
            ParityOdd => f.write_str("parity-odd"),
            ParityEven => f.write_str("parity-even"),
            Avoid(fs) => {
                f.write_str("avoid:")?;
                for (i, fac) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    for b in fac {
                        write!(f, "{b}")?;
                    }
                }
                Ok(())
            }
            K11(k) => write!(f, "k11:{k}"),
            EvenSquareShuffle => f.write_str("even-square-shuffle"),
            FirstLastDiffer => f.write_str("first-last-differ"),
            Not(x) => write!(f, "not({x})"),
            And(a, b) => write!(f, "and({a},{b})"),
            Or(a, b) => write!(f, "or({a},{b})"),
            Hull(x) => write!(f, "hull({x})"),
            Rev(x) => write!(f, "rev({x})"),
        }
    }
}

impl LanguageSpec {
    /// Membership of `x` in the language this spec denotes.
    pub fn member(&self, x: &[u8]) -> bool {
        use LanguageSpec::*;
        match self {
            Classical => catalog::classical(x),
            Pal => catalog::pal(x),
            Detp => catalog::detp(x),
            Copy => catalog::copy(x),
            CopyMod(k) => catalog::copy_mod(*k, x),
            HGraph { host, .. } => catalog::hgraph(host, x),
            Lyndon => catalog::lyndon(x),
            LyndonOdd => catalog::lyndon_odd(x),
            Dyck => catalog::dyck(x),
            Nested => catalog::nested(x),
            Balanced => catalog::balanced(x),
            ParityOdd => catalog::parity_odd(x),
            ParityEven => catalog::parity_even(x),
            Avoid(fs) => catalog::avoid(fs, x),
            K11(k) => catalog::k11(*k, x),
            EvenSquareShuffle => catalog::even_square_shuffle(x),
            FirstLastDiffer => catalog::first_last_differ(x),
            Not(a) => !a.member(x),
            And(a, b) => a.member(x) && b.member(x),
            Or(a, b) => a.member(x) || b.member(x),
            Hull(a) => {
                if a.member(x) {
                    return true;
                }
                let comp: Vec<u8> = x.iter().map(|&b| 1 - b).collect();
                a.member(&comp)
            }
            Rev(a) => {
                let rev: Vec<u8> = x.iter().rev().copied().collect();
                a.member(&rev)
            }
        }
    }

    /// True when symmetry (membership invariant under bit-complement) is
    /// provable from the structure: every catalog base is symmetric, `hull`
    /// forces symmetry, and the other combinators preserve it.
    pub(crate) fn symmetric(&self) -> bool {
        use LanguageSpec::*;
        match self {
            Not(a) | Rev(a) => a.symmetric(),
            And(a, b) | Or(a, b) => a.symmetric() && b.symmetric(),
            Hull(_) => true,
            // `avoid` is closed under factor complement by canonicalization.
            _ => true,
        }
    }

    /// True when closure under reversal is provable from the structure.
    /// Conservative: `false` means "not proven", not "refuted".
    pub(crate) fn reversal_closed(&self) -> bool {
        use LanguageSpec::*;
        match self {
            Lyndon | LyndonOdd => false,
            Avoid(fs) => {
                // Closed iff the factor set is closed under reversal.
                fs.iter()
                    .all(|f| fs.iter().any(|g| g.iter().eq(f.iter().rev())))
            }
            Not(a) => a.reversal_closed(),
            And(a, b) | Or(a, b) => a.reversal_closed() && b.reversal_closed(),
            // The hull of a reversal-closed language is reversal-closed;
            // rev(L) is reversal-closed exactly when L is.
            Hull(a) | Rev(a) => a.reversal_closed(),
            _ => true,
        }
    }

    /// Structural normal form; see the module doc.
    pub(crate) fn canonicalize(self) -> LanguageSpec {
        use LanguageSpec::*;
        match self {
            Not(x) => match x.canonicalize() {
                Not(inner) => *inner,
                other => Not(Box::new(other)),
            },
            Rev(x) => match x.canonicalize() {
                Rev(inner) => *inner,
                other => Rev(Box::new(other)),
            },
            Hull(x) => match x.canonicalize() {
                Hull(inner) => Hull(inner),
                other => Hull(Box::new(other)),
            },
            And(a, b) => {
                let (a, b) = sort_pair(a.canonicalize(), b.canonicalize());
                match b {
                    None => a,
                    Some(b) => And(Box::new(a), Box::new(b)),
                }
            }
            Or(a, b) => {
                let (a, b) = sort_pair(a.canonicalize(), b.canonicalize());
                match b {
                    None => a,
                    Some(b) => Or(Box::new(a), Box::new(b)),
                }
            }
            Avoid(fs) => {
                let mut closed: Vec<Vec<u8>> = Vec::new();
                for f in fs {
                    let comp: Vec<u8> = f.iter().map(|&b| 1 - b).collect();
                    for g in [f, comp] {
                        if !closed.contains(&g) {
                            closed.push(g);
                        }
                    }
                }
                closed.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                Avoid(closed)
            }
            base => base,
        }
    }
}

/// Orders two canonical operands by id string; `None` marks a collapsed
/// duplicate.
fn sort_pair(a: LanguageSpec, b: LanguageSpec) -> (LanguageSpec, Option<LanguageSpec>) {
    if a == b {
        return (a, None);
    }
    if a.to_string() <= b.to_string() {
        (a, Some(b))
    } else {
        (b, Some(a))
    }
}

/// Parses a spec string and canonicalizes it. `hgraph:<path>` arguments are
/// resolved through `load_host`, which receives the path text.
pub(crate) fn parse_spec<F>(text: &str, load_host: &mut F) -> Result<LanguageSpec>
where
    F: FnMut(&str) -> Result<HostGraph>,
{
    let mut p = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
    };
    let spec = p.parse_expr(load_host)?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::syntax(format!(
            "trailing input at byte {} of {text:?}",
            p.pos
        )));
    }
    Ok(spec.canonicalize())
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(format!(
                "expected {:?} at byte {} of {:?}",
                c as char, self.pos, self.text
            )))
        }
    }

    fn read_name(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b.is_ascii_alphanumeric() || b == b'-' || b == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }

    fn read_uint(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::syntax(format!("expected a number for {what} in {:?}", self.text)))
    }

    fn parse_expr<F>(&mut self, load_host: &mut F) -> Result<LanguageSpec>
    where
        F: FnMut(&str) -> Result<HostGraph>,
    {
        use LanguageSpec::*;
        let name = self.read_name();
        if name.is_empty() {
            return Err(Error::syntax(format!(
                "expected a language name at byte {} of {:?}",
                self.pos, self.text
            )));
        }
        if matches!(name, "not" | "and" | "or" | "hull" | "rev") {
            self.expect(b'(')?;
            let a = self.parse_expr(load_host)?;
            let spec = match name {
                "not" => Not(Box::new(a)),
                "hull" => Hull(Box::new(a)),
                "rev" => Rev(Box::new(a)),
                _ => {
                    self.expect(b',')?;
                    let b = self.parse_expr(load_host)?;
                    if name == "and" {
                        And(Box::new(a), Box::new(b))
                    } else {
                        Or(Box::new(a), Box::new(b))
                    }
                }
            };
            self.expect(b')')?;
            return Ok(spec);
        }
        match name {
            "classical" => Ok(Classical),
            "pal" => Ok(Pal),
            "detp" => Ok(Detp),
            "copy" => Ok(Copy),
            "lyndon" => Ok(Lyndon),
            "lyndon-odd" => Ok(LyndonOdd),
            "dyck" => Ok(Dyck),
            "nested" => Ok(Nested),
            "balanced" => Ok(Balanced),
            "parity-odd" => Ok(ParityOdd),
            "parity-even" => Ok(ParityEven),
            "even-square-shuffle" => Ok(EvenSquareShuffle),
            "first-last-differ" => Ok(FirstLastDiffer),
            "copy-mod" => {
                self.expect(b':')?;
                let k = self.read_uint("copy-mod")?;
                if k == 0 {
                    return Err(Error::syntax("copy-mod requires k >= 1"));
                }
                Ok(CopyMod(k))
            }
            "k11" => {
                self.expect(b':')?;
                let k = self.read_uint("k11")?;
                Ok(K11(k))
            }
            "avoid" => {
                self.expect(b':')?;
                Ok(Avoid(self.read_factors()?))
            }
            "hgraph" => {
                self.expect(b':')?;
                let path = self.read_path()?;
                let host = load_host(path)?;
                Ok(HGraph {
                    source: path.to_string(),
                    host,
                })
            }
            other => Err(Error::syntax(format!("unknown language {other:?}"))),
        }
    }

    /// Factor lists are read greedily: a comma followed by a binary word is
    /// taken as another factor, so inside combinators `avoid` should be the
    /// last operand.
    fn read_factors(&mut self) -> Result<Vec<Vec<u8>>> {
        let mut factors = Vec::new();
        loop {
            let start = self.pos;
            while matches!(self.peek(), Some(b'0') | Some(b'1')) {
                self.pos += 1;
            }
            if self.pos == start {
                return Err(Error::syntax(format!(
                    "expected a nonempty binary factor at byte {} of {:?}",
                    self.pos, self.text
                )));
            }
            factors.push(self.bytes[start..self.pos].iter().map(|b| b - b'0').collect());
            if self.peek() == Some(b',')
                && matches!(self.bytes.get(self.pos + 1).copied(), Some(b'0') | Some(b'1'))
            {
                self.pos += 1;
            } else {
                return Ok(factors);
            }
        }
    }

    /// A host path runs to the next `,` or `)` (so paths containing those
    /// characters cannot appear inside combinators) or to end of input.
    fn read_path(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && !matches!(self.bytes[self.pos], b',' | b')') {
            self.pos += 1;
        }
        let path = self.text[start..self.pos].trim();
        if path.is_empty() {
            return Err(Error::syntax("hgraph requires a host file path"));
        }
        Ok(path)
    }
}
