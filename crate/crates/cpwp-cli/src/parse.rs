//! Recursive-descent parser for the expression language.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use cpwp_core::canonical::{CanonicalForm, StandardPiecewise};
use cpwp_core::realalg::{real_roots, AlgebraicNumber};
use cpwp_core::{Error, Poly, Rat};

/// Syntax error with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Everything that can go wrong turning text into a canonical form.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionError {
    /// Malformed input text.
    Parse(ParseError),
    /// `root(P, k)` with `k` outside `1..=count` of real roots.
    RootIndexOutOfRange { index: u32, count: usize },
    /// Structurally valid input that violates a kernel invariant
    /// (discontinuity, unordered breakpoints, equal adjacent pieces).
    Domain(Error),
}

impl fmt::Display for FunctionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionError::Parse(e) => write!(f, "{e}"),
            FunctionError::RootIndexOutOfRange { index, count } => write!(
                f,
                "root index {index} out of range: the polynomial has {count} real root(s)"
            ),
            FunctionError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FunctionError {}

impl From<ParseError> for FunctionError {
    fn from(e: ParseError) -> Self {
        FunctionError::Parse(e)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut core::iter::Peekable<core::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                let n = BigInt::parse_bytes(digits.as_bytes(), 10).unwrap();
                out.push(Spanned {
                    tok: Tok::Int(n),
                    line: tline,
                    col: tcol,
                });
                continue;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(ident),
                    line: tline,
                    col: tcol,
                });
                continue;
            }
            _ => {}
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            other => {
                return Err(ParseError {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        bump(&mut chars);
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let toks = lex(text)?;
        let end = toks
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1));
        Ok(Parser { toks, pos: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn next(&mut self) -> Option<&Spanned> {
        let s = self.toks.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or(self.end)
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn uint(&mut self, what: &str) -> Result<u32, ParseError> {
        let err_pos = self.here();
        match self.peek() {
            Some(Tok::Int(n)) => match n.to_u32() {
                Some(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                None => Err(ParseError {
                    line: err_pos.0,
                    col: err_pos.1,
                    msg: format!("{what} too large"),
                }),
            },
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    /// Polynomial expression: sums and differences of terms.
    fn poly_expr(&mut self) -> Result<Poly, ParseError> {
        let mut negated = false;
        if self.eat(&Tok::Minus) {
            negated = true;
        } else {
            self.eat(&Tok::Plus);
        }
        let mut acc = self.poly_term()?;
        if negated {
            acc = -&acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                let t = self.poly_term()?;
                acc = &acc + &t;
            } else if self.eat(&Tok::Minus) {
                let t = self.poly_term()?;
                acc = &acc - &t;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn poly_term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.poly_factor()?;
        while self.eat(&Tok::Star) {
            let f = self.poly_factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn poly_factor(&mut self) -> Result<Poly, ParseError> {
        let mut base = self.poly_atom()?;
        while self.eat(&Tok::Caret) {
            let e = self.uint("a nonnegative integer exponent")?;
            if e > 4096 {
                return Err(self.error("exponent too large"));
            }
            base = base.pow(e);
        }
        Ok(base)
    }

    fn poly_atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Spanned { tok: Tok::Int(n), .. }) = self.next() else {
                    unreachable!()
                };
                let n = n.clone();
                if self.eat(&Tok::Slash) {
                    match self.peek() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            let d = d.clone();
                            self.pos += 1;
                            Ok(Poly::constant(Rat::new(n, d)))
                        }
                        Some(Tok::Int(_)) => Err(self.error("zero denominator")),
                        _ => Err(self.error("expected an integer denominator")),
                    }
                } else {
                    Ok(Poly::constant(Rat::from_integer(n)))
                }
            }
            Some(Tok::Ident(id)) if id == "x" => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.poly_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::Slash) => Err(self.error("'/' is only allowed between integer literals")),
            _ => Err(self.error("expected a number, 'x', or '('")),
        }
    }

    /// A multiplicative group in a canonical expression: polynomial
    /// factors and at most one step atom `C[k](P)`.
    fn function_term(&mut self) -> Result<(Poly, Option<(u32, Poly)>), FunctionError> {
        let mut coeff = Poly::one();
        let mut step: Option<(u32, Poly)> = None;
        loop {
            if matches!(self.peek(), Some(Tok::Ident(id)) if id == "C") {
                self.pos += 1;
                self.expect(Tok::LBracket, "'[' after C")?;
                let k = self.uint("a step index")?;
                self.expect(Tok::RBracket, "']'")?;
                self.expect(Tok::LParen, "'('")?;
                let target_pos = self.here();
                let target = self.poly_expr()?;
                self.expect(Tok::RParen, "')'")?;
                if target.is_zero() {
                    return Err(ParseError {
                        line: target_pos.0,
                        col: target_pos.1,
                        msg: "zero polynomial inside C[...]".into(),
                    }
                    .into());
                }
                if self.peek() == Some(&Tok::Caret) {
                    return Err(self.error("cannot raise a step term to a power").into());
                }
                if step.replace((k, target)).is_some() {
                    return Err(self
                        .error("at most one C[...] factor per product")
                        .into());
                }
            } else {
                let f = self.poly_factor()?;
                coeff = &coeff * &f;
            }
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        Ok((coeff, step))
    }

    fn canonical_expr(&mut self) -> Result<CanonicalForm, FunctionError> {
        let mut base = Poly::zero();
        let mut raws: Vec<(Poly, Poly, u32)> = Vec::new();
        let mut negate = self.eat(&Tok::Minus);
        if !negate {
            self.eat(&Tok::Plus);
        }
        loop {
            let (mut coeff, step) = self.function_term()?;
            if negate {
                coeff = -&coeff;
            }
            match step {
                None => base = &base + &coeff,
                Some((k, target)) => raws.push((coeff, target, k)),
            }
            if self.eat(&Tok::Plus) {
                negate = false;
            } else if self.eat(&Tok::Minus) {
                negate = true;
            } else {
                break;
            }
        }
        self.expect_eof()?;
        Ok(CanonicalForm::normalize(base, raws))
    }

    fn endpoint(&mut self) -> Result<Endpoint, FunctionError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Ident(id)) if id == "inf" => {
                        self.pos += 1;
                        Ok(Endpoint::NegInf)
                    }
                    Some(Tok::Int(_)) => {
                        let q = self.rational_literal()?;
                        Ok(Endpoint::Point(AlgebraicNumber::from_rational(&-q)))
                    }
                    _ => Err(self.error("expected 'inf' or a number after '-'").into()),
                }
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Ident(id)) if id == "inf" => {
                        self.pos += 1;
                        Ok(Endpoint::PosInf)
                    }
                    _ => Err(self.error("expected 'inf' after '+'").into()),
                }
            }
            Some(Tok::Ident(id)) if id == "inf" => {
                self.pos += 1;
                Ok(Endpoint::PosInf)
            }
            Some(Tok::Ident(id)) if id == "root" => {
                self.pos += 1;
                self.expect(Tok::LParen, "'(' after root")?;
                let target_pos = self.here();
                let target = self.poly_expr()?;
                self.expect(Tok::Comma, "','")?;
                let k = self.uint("a root index")?;
                self.expect(Tok::RParen, "')'")?;
                if target.is_zero() {
                    return Err(ParseError {
                        line: target_pos.0,
                        col: target_pos.1,
                        msg: "zero polynomial inside root(...)".into(),
                    }
                    .into());
                }
                let roots = real_roots(&target);
                if k == 0 || k as usize > roots.len() {
                    return Err(FunctionError::RootIndexOutOfRange {
                        index: k,
                        count: roots.len(),
                    });
                }
                Ok(Endpoint::Point(roots.into_iter().nth(k as usize - 1).unwrap()))
            }
            Some(Tok::Int(_)) => {
                let q = self.rational_literal()?;
                Ok(Endpoint::Point(AlgebraicNumber::from_rational(&q)))
            }
            _ => Err(self
                .error("expected a breakpoint: a rational, root(P, k), -inf or inf")
                .into()),
        }
    }

    fn rational_literal(&mut self) -> Result<Rat, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Spanned { tok: Tok::Int(n), .. }) = self.next() else {
                    unreachable!()
                };
                let n = n.clone();
                if self.eat(&Tok::Slash) {
                    match self.peek() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            let d = d.clone();
                            self.pos += 1;
                            Ok(Rat::new(n, d))
                        }
                        _ => Err(self.error("expected a nonzero integer denominator")),
                    }
                } else {
                    Ok(Rat::from_integer(n))
                }
            }
            _ => Err(self.error("expected a number")),
        }
    }

    fn piecewise(&mut self) -> Result<CanonicalForm, FunctionError> {
        self.expect(Tok::LBrace, "'{'")?;
        let mut items: Vec<(Poly, Endpoint, Endpoint, (usize, usize))> = Vec::new();
        loop {
            let item_pos = self.here();
            let piece = self.poly_expr()?;
            match self.peek() {
                Some(Tok::Ident(id)) if id == "on" => {
                    self.pos += 1;
                }
                _ => {
                    return Err(self.error("expected 'on' after the piece polynomial").into());
                }
            }
            if !(self.eat(&Tok::LParen) || self.eat(&Tok::LBracket)) {
                return Err(self.error("expected '(' or '[' to open the interval").into());
            }
            let lo = self.endpoint()?;
            self.expect(Tok::Comma, "',' between interval endpoints")?;
            let hi = self.endpoint()?;
            if !(self.eat(&Tok::RParen) || self.eat(&Tok::RBracket)) {
                return Err(self.error("expected ')' or ']' to close the interval").into());
            }
            items.push((piece, lo, hi, item_pos));
            if self.eat(&Tok::Semi) {
                if self.peek() == Some(&Tok::RBrace) {
                    break;
                }
                continue;
            }
            break;
        }
        self.expect(Tok::RBrace, "'}'")?;
        self.expect_eof()?;

        let n = items.len();
        let err_at = |pos: (usize, usize), msg: &str| -> FunctionError {
            ParseError {
                line: pos.0,
                col: pos.1,
                msg: msg.into(),
            }
            .into()
        };
        let mut breakpoints = Vec::with_capacity(n.saturating_sub(1));
        let mut pieces = Vec::with_capacity(n);
        for (i, (piece, lo, hi, pos)) in items.into_iter().enumerate() {
            match (&lo, i == 0) {
                (Endpoint::NegInf, true) => {}
                (Endpoint::NegInf, false) => {
                    return Err(err_at(pos, "only the first interval may start at -inf"))
                }
                (Endpoint::Point(p), false) => {
                    // must chain onto the previous interval's upper end
                    if breakpoints.last() != Some(p) {
                        return Err(err_at(
                            pos,
                            "intervals must share their breakpoint with the previous piece",
                        ));
                    }
                }
                (_, true) => return Err(err_at(pos, "the first interval must start at -inf")),
                (Endpoint::PosInf, _) => {
                    return Err(err_at(pos, "an interval cannot start at inf"))
                }
            }
            match (hi, i + 1 == n) {
                (Endpoint::PosInf, true) => {}
                (Endpoint::PosInf, false) => {
                    return Err(err_at(pos, "only the last interval may end at inf"))
                }
                (Endpoint::Point(p), false) => breakpoints.push(p),
                (_, true) => return Err(err_at(pos, "the last interval must end at inf")),
                (Endpoint::NegInf, _) => {
                    return Err(err_at(pos, "an interval cannot end at -inf"))
                }
            }
            pieces.push(piece);
        }
        let standard =
            StandardPiecewise::new(breakpoints, pieces).map_err(FunctionError::Domain)?;
        Ok(CanonicalForm::from_standard(&standard))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Endpoint {
    NegInf,
    Point(AlgebraicNumber),
    PosInf,
}

/// Parse a plain polynomial: rational literals, `x`, `+ - * ^` and
/// parentheses.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser::new(text)?;
    let poly = p.poly_expr()?;
    p.expect_eof()?;
    Ok(poly)
}

/// Parse a function: either a canonical expression (polynomials and
/// `C[k](P)` terms combined with `+` and `-`) or a `piecewise { ... }`
/// block. Reducible or non-monic polynomials inside `C[k](...)` are
/// legal and rewritten to canonical shape.
pub fn parse_function(text: &str) -> Result<CanonicalForm, FunctionError> {
    let mut p = Parser::new(text)?;
    if matches!(p.peek(), Some(Tok::Ident(id)) if id == "piecewise") {
        p.pos += 1;
        p.piecewise()
    } else {
        p.canonical_expr()
    }
}

/// Parse a rational literal of the form `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let mut p = Parser::new(text)?;
    let neg = p.eat(&Tok::Minus);
    let q = p.rational_literal()?;
    p.expect_eof()?;
    Ok(if neg { -q } else { q })
}
