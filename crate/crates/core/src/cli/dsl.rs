//! Text form of complex structure equations:
//! `dw1 = 0; dw2 = w1^w1b; dw3 = w1^w2 + (4)*w1^w2b + (1/2)*w2^w1b`.

use num::Zero;

use crate::error::{Error, Result};
use crate::exterior::{parse_rational, Form, Gen, Scalar};
use crate::liealg::StructureEquations;

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c == ' ' || c == '\t' || c == '\r' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_nonblank(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek_nonblank() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos].parse().map_err(|_| Error::parse(start, "expected an index"))
    }

    /// A rational with optional `/q` or decimal part, possibly followed by `i`.
    fn number(&mut self) -> Result<Scalar> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '/' || c == '.') {
            self.bump();
        }
        let r = parse_rational(&self.src[start..self.pos])
            .ok_or_else(|| Error::parse(start, format!("invalid number '{}'", &self.src[start..self.pos])))?;
        if self.peek() == Some('i') {
            self.bump();
            return Ok(Scalar::new(Zero::zero(), r));
        }
        Ok(Scalar::real(r))
    }

    fn coefficient(&mut self) -> Result<Scalar> {
        match self.peek_nonblank() {
            Some('(') => {
                self.bump();
                let start = self.pos;
                let end = self.src[start..].find(')').ok_or_else(|| Error::parse(start, "unclosed '('"))?;
                let lit = &self.src[start..start + end];
                let v: Scalar = lit.parse().map_err(|_| Error::parse(start, format!("invalid scalar '{lit}'")))?;
                self.pos = start + end + 1;
                Ok(v)
            }
            Some('i') => {
                self.bump();
                Ok(Scalar::i())
            }
            _ => self.number(),
        }
    }

    fn generator(&mut self) -> Result<Gen> {
        if self.peek_nonblank() != Some('w') {
            return self.err("expected a generator wK or wKb");
        }
        self.bump();
        let j = self.integer()?;
        if j == 0 {
            return self.err("generators are numbered from 1");
        }
        if self.peek() == Some('b') {
            self.bump();
            return Ok(Gen::Anti(j));
        }
        Ok(Gen::Holo(j))
    }

    fn monomial(&mut self) -> Result<Vec<Gen>> {
        let mut gens = vec![self.generator()?];
        while self.peek_nonblank() == Some('^') {
            self.bump();
            gens.push(self.generator()?);
        }
        Ok(gens)
    }

    /// Terms as (coefficient, generators, byte offset).
    fn sum(&mut self) -> Result<Vec<(Scalar, Vec<Gen>, usize)>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek_nonblank() {
            Some('-') | Some('−') => {
                self.bump();
                -Scalar::from_int(1)
            }
            Some('+') => {
                self.bump();
                Scalar::from_int(1)
            }
            _ => Scalar::from_int(1),
        };
        loop {
            let at = self.pos;
            let (coef, gens) = match self.peek_nonblank() {
                Some('w') => (Scalar::from_int(1), self.monomial()?),
                Some(_) => {
                    let c = self.coefficient()?;
                    if self.peek_nonblank() == Some('*') {
                        self.bump();
                        (c, self.monomial()?)
                    } else if self.peek_nonblank() == Some('w') {
                        (c, self.monomial()?)
                    } else {
                        (c, Vec::new())
                    }
                }
                None => return self.err("expected a term"),
            };
            terms.push((&sign * &coef, gens, at));
            sign = match self.peek_nonblank() {
                Some('+') => Scalar::from_int(1),
                Some('-') | Some('−') => -Scalar::from_int(1),
                _ => break,
            };
            self.bump();
        }
        Ok(terms)
    }
}

/// Parses the equations; every dwJ for J = 1..n must appear exactly once.
pub fn parse_complex(text: &str) -> Result<StructureEquations> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut raw: Vec<(usize, Vec<(Scalar, Vec<Gen>, usize)>, usize)> = Vec::new();
    loop {
        while matches!(lx.peek_nonblank(), Some(';') | Some('\n')) {
            lx.bump();
        }
        if lx.peek_nonblank().is_none() {
            break;
        }
        let at = lx.pos;
        if !lx.src[lx.pos..].starts_with("dw") {
            return lx.err("expected 'dwJ ='");
        }
        lx.pos += 2;
        let j = lx.integer()?;
        lx.expect('=')?;
        let terms = lx.sum()?;
        raw.push((j, terms, at));
        match lx.peek_nonblank() {
            None | Some(';') | Some('\n') => {}
            Some(c) => return lx.err(format!("unexpected '{c}'")),
        }
    }
    let n = raw.len();
    if n == 0 {
        return Err(Error::parse(0, "no equations"));
    }
    let mut d: Vec<Option<Form>> = vec![None; n];
    for (j, terms, at) in raw {
        if j == 0 || j > n {
            return Err(Error::parse(at, format!("dw{j} is out of range for {n} equations")));
        }
        if d[j - 1].is_some() {
            return Err(Error::parse(at, format!("dw{j} appears twice")));
        }
        let mut f = Form::zero(n);
        for (c, gens, pos) in terms {
            if let Some(g) = gens.iter().find(|g| g.index() > n) {
                return Err(Error::parse(pos, format!("generator index {} exceeds {n}", g.index())));
            }
            if gens.is_empty() {
                if !c.is_zero() {
                    return Err(Error::parse(pos, "constant terms are not allowed"));
                }
                continue;
            }
            if gens.len() != 2 {
                return Err(Error::parse(pos, "terms must be 2-forms"));
            }
            f = &f + &Form::product(n, &gens).scale(&c);
        }
        d[j - 1] = Some(f);
    }
    StructureEquations::integrable(d.into_iter().map(|f| f.expect("every index filled")).collect())
}

/// Inverse of [`parse_complex`].
pub fn print_complex(eqs: &StructureEquations) -> String {
    eqs.equations().iter().enumerate().map(|(j, f)| format!("dw{} = {f}", j + 1)).collect::<Vec<_>>().join("; ")
}
