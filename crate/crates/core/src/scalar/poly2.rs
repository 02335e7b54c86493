use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::{format_q, parse_q, q, Scalar, Q};
use crate::error::{Error, Result};

/// Polynomial in commuting variables `a`, `b` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Q>,
}

impl Poly2 {
    pub fn constant(c: Q) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: u32, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Poly2 { terms }
    }

    pub fn a() -> Self {
        Self::monomial(1, 0, Q::one())
    }

    pub fn b() -> Self {
        Self::monomial(0, 1, Q::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Q {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Poly2::default();
        }
        Poly2 { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Poly2::constant(Q::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, a: &Q, b: &Q) -> Q {
        let mut out = Q::zero();
        for ((i, j), c) in &self.terms {
            out += c * num_traits::pow(a.clone(), *i as usize) * num_traits::pow(b.clone(), *j as usize);
        }
        out
    }

    /// Substitutes polynomials for `a` and `b`.
    pub fn substitute(&self, a: &Poly2, b: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for ((i, j), c) in &self.terms {
            out = out + (&a.pow(*i) * &b.pow(*j)).scale(c);
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|(i, j)| i + j);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn lex_leading(&self) -> Option<((u32, u32), Q)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, v.clone()))
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly2) -> Option<Poly2> {
        let ((di, dj), dc) = d.lex_leading()?;
        let mut rem = self.clone();
        let mut quot = Poly2::default();
        while let Some(((ri, rj), rc)) = rem.lex_leading() {
            if ri < di || rj < dj {
                return None;
            }
            let t = Poly2::monomial(ri - di, rj - dj, rc / &dc);
            rem = &rem - &(&t * d);
            quot = quot + t;
        }
        Some(quot)
    }

    /// Terms sorted by total degree, then by the exponent of `a`, both descending.
    fn sorted_terms(&self) -> Vec<((u32, u32), &Q)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c)).collect();
        v.sort_by(|(x, _), (y, _)| (y.0 + y.1, y.0).cmp(&(x.0 + x.1, x.0)));
        v
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly2::default();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut pieces = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'+' => (1, &piece[1..]),
                b'-' => (-1, &piece[1..]),
                _ => (1, piece),
            };
            let mut coef = q(sign);
            let (mut i, mut j) = (0u32, 0u32);
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Parse(text.to_string()))?),
                    None => (factor, 1),
                };
                match base {
                    "a" => i += exp,
                    "b" => j += exp,
                    _ => coef *= num_traits::pow(parse_q(base)?, exp as usize),
                }
            }
            out.add_term(i, j, &coef);
        }
        Ok(out)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((i, j), c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c < &Q::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let mut factors = Vec::new();
            if i == 0 && j == 0 || !magnitude.is_one() {
                factors.push(format_q(&magnitude));
            }
            for (var, e) in [("a", i), ("b", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(mut self, rhs: Poly2) -> Poly2 {
        for ((i, j), c) in &rhs.terms {
            self.add_term(*i, *j, c);
        }
        self
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: Poly2) -> Poly2 {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self.clone() - rhs.clone()
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl<'a> Mul<&'a Poly2> for &'a Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

impl Zero for Poly2 {
    fn zero() -> Self {
        Poly2::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly2 {
    fn one() -> Self {
        Poly2::constant(Q::one())
    }
}

impl Scalar for Poly2 {
    fn parse_text(text: &str) -> Result<Self> {
        Poly2::parse(text)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for ((i, j), c) in &rhs.terms {
            self.add_term(*i, *j, c);
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn from_q(x: Q) -> Self {
        Poly2::constant(x)
    }
    fn parts(&self) -> Vec<(u64, Q)> {
        self.terms.iter().map(|((i, j), c)| (((*i as u64) << 32) | *j as u64, c.clone())).collect()
    }
    fn from_part(key: u64, value: Q, _like: &Self) -> Self {
        Poly2::monomial((key >> 32) as u32, key as u32, value)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div(rhs)
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `ca_n(a,b) = Σ_{i<n} T(n,i+1) a^i b^{n-1-i}` with Narayana numbers `T`.
pub fn narayana_polynomial(n: usize) -> Result<Poly2> {
    if n == 0 {
        return Err(Error::InvalidArgument("narayana polynomial needs n >= 1".into()));
    }
    let n64 = n as u64;
    let mut out = Poly2::default();
    for i in 0..n64 {
        let k = i + 1;
        let t = binom(n64 - 1, k - 1) * binom(n64, k - 1) / BigInt::from(k);
        out.add_term(i as u32, (n64 - 1 - i) as u32, &Q::from_integer(t));
    }
    Ok(out)
}

/// Checks `N_n = (a+b) N_{n-1} + ab Σ_{k=2}^{n-2} N_k N_{n-k}` where `N_n = ca_{n-1}`.
pub fn narayana_recurrence_check(n: usize) -> bool {
    let big_n = |m: usize| -> Poly2 {
        if m <= 2 {
            Poly2::one()
        } else {
            narayana_polynomial(m - 1).expect("m >= 3")
        }
    };
    if n <= 2 {
        return big_n(n) == narayana_polynomial(1).expect("n = 1");
    }
    let mut rhs = &(Poly2::a() + Poly2::b()) * &big_n(n - 1);
    let ab = Poly2::monomial(1, 1, Q::one());
    for k in 2..=n - 2 {
        rhs = rhs + &ab * &(&big_n(k) * &big_n(n - k));
    }
    rhs == big_n(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let s = Poly2::a() + Poly2::b();
        assert_eq!((&s * &s).to_string(), "a^2+2*a*b+b^2");
        let p = Poly2::parse("a^2+3*a*b+b^2").unwrap();
        assert_eq!(p.eval(&q(1), &q(1)), q(5));
        assert_eq!(p.clone() + Poly2::zero(), p);
        assert_eq!(Poly2::parse("-3/2*a^2*b+b-7").unwrap().to_string(), "-3/2*a^2*b+b-7");
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana_polynomial(1).unwrap().to_string(), "1");
        assert_eq!(narayana_polynomial(3).unwrap().to_string(), "a^2+3*a*b+b^2");
        assert_eq!(narayana_polynomial(5).unwrap().to_string(), "a^4+10*a^3*b+20*a^2*b^2+10*a*b^3+b^4");
        assert!(narayana_polynomial(0).is_err());
        for n in 2..10 {
            assert!(narayana_recurrence_check(n), "n = {n}");
        }
    }

    #[test]
    fn exact_division() {
        let s = Poly2::a() + Poly2::b();
        let p = &(&s * &s) * &Poly2::parse("a-2*b").unwrap();
        assert_eq!(p.exact_div(&s).unwrap(), &s * &Poly2::parse("a-2*b").unwrap());
        assert!(Poly2::a().exact_div(&s).is_none());
        assert_eq!(p.exact_div(&Poly2::constant(q(2))).unwrap(), p.scale(&super::super::q_frac(1, 2)));
    }
}
