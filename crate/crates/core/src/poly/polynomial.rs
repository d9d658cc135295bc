use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Monomial;
use crate::error::PolyError;
use crate::linalg::Rational;

/// Sparse Laurent polynomial with rational coefficients in a fixed number of
/// variables. Terms are kept in the term order, so the last key is the
/// initial monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    /// The variable with zero-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Initial monomial and its coefficient.
    pub fn ini(&self) -> Result<(&Monomial, &Rational), PolyError> {
        self.terms
            .iter()
            .next_back()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// The single term, if the polynomial is a nonzero monomial times a scalar.
    pub fn as_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Integer power allowing negative exponents for single-term polynomials.
    fn laurent_pow(&self, k: i64, var: usize) -> Result<Self, PolyError> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        let (m, c) = self
            .as_term()
            .ok_or(PolyError::NegativeExponentInSSpace { var: var + 1 })?;
        let inv = Self::term(m.inverse(), c.recip());
        Ok(inv.pow((-k) as u32))
    }

    /// Replaces variable `i` by `images[i]`. Negative exponents are allowed
    /// only where the image is a single term.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::IndexSpaceMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = images.first().map_or(0, Polynomial::nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(PolyError::IndexSpaceMismatch {
                left: target,
                right: bad.nvars,
            });
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    term = &term * &images[i].laurent_pow(e, i)?;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::IndexSpaceMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e < 0 && x.is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                v *= pow_rational(x, e);
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial derivative with respect to the variable with zero-based index `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            out.add_term(
                Monomial::new(ex),
                c * Rational::from_integer(BigInt::from(e)),
            );
        }
        out
    }

    /// Terms in descending order, `2*T1^2*T3^-1 - T2^1`; zero renders as `0`.
    pub fn render(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&m.render(prefix));
            } else {
                out.push_str(&format!("{a}*{}", m.render(prefix)));
            }
        }
        out
    }

    /// Parses the grammar produced by [`Polynomial::render`].
    pub fn parse(text: &str, nvars: usize, prefix: &str) -> Result<Self, PolyError> {
        Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            nvars,
            prefix: prefix.chars().collect(),
        }
        .polynomial()
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    nvars: usize,
    prefix: Vec<char>,
}

impl Parser {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(1, |(i, c)| i + c.len_utf8() + 1),
            |(i, _)| i + 1,
        )
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.error("expected an integer");
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn polynomial(&mut self) -> Result<Polynomial, PolyError> {
        let mut p = Polynomial::zero(self.nvars);
        let mut negative = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, if negative { -c } else { c });
            self.skip_ws();
            match self.peek() {
                None => return Ok(p),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(other) => return self.error(format!("unexpected `{other}`")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let mut coeff = Rational::one();
        let mut exps = vec![0i64; self.nvars];
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    let value = if self.eat('/') {
                        let d = self.integer()?;
                        if d.is_zero() {
                            return self.error("zero denominator");
                        }
                        Rational::new(n, d)
                    } else {
                        Rational::from_integer(n)
                    };
                    coeff *= value;
                }
                Some(c) if c == self.prefix[0] => {
                    let (i, e) = self.factor()?;
                    exps[i] += e;
                }
                _ if first => return self.error("expected a term"),
                _ => return self.error("expected a factor after `*`"),
            }
            first = false;
            if !self.eat('*') {
                return Ok((Monomial::new(exps), coeff));
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, i64), PolyError> {
        for &c in &self.prefix.clone() {
            if self.peek() != Some(c) {
                return self.error("expected a variable");
            }
            self.pos += 1;
        }
        let index = self.integer()?;
        let index: usize = match usize::try_from(index) {
            Ok(i) if (1..=self.nvars).contains(&i) => i,
            _ => return self.error(format!("variable index out of range 1..={}", self.nvars)),
        };
        let mut e = 1i64;
        if self.eat('^') {
            let negative = self.eat('-');
            let n = self.integer()?;
            let Ok(n) = i64::try_from(n) else {
                return self.error("exponent too large");
            };
            e = if negative { -n } else { n };
        }
        Ok((index - 1, e))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}
