//! Exact coefficient rings.

mod cyclo;
mod poly2;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use cyclo::{cyclotomic_polynomial, CycloScalar};
pub use poly2::{narayana_polynomial, narayana_recurrence_check, Poly2};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(text: &str) -> Result<Q> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text}"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Commutative ring of exact coefficients.
///
/// `parts` splits a scalar into rational coordinates over a fixed
/// `Q`-basis of the ring (monomials, powers of a root of unity);
/// linear algebra over such scalars is done one coordinate at a time.
pub trait Scalar: Zero + One + Clone + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_q(x: Q) -> Self;
    fn parts(&self) -> Vec<(u64, Q)>;
    fn from_part(key: u64, value: Q, like: &Self) -> Self;

    fn from_i64(x: i64) -> Self {
        Self::from_q(q(x))
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.add_assign_ref(&rhs.negate());
    }

    /// Exact quotient when it exists in the ring.
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    /// Inverse of `Display`.
    fn parse_text(text: &str) -> Result<Self>;
}

impl Scalar for Q {
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_q(x: Q) -> Self {
        x
    }
    fn parts(&self) -> Vec<(u64, Q)> {
        if Zero::is_zero(self) {
            Vec::new()
        } else {
            vec![(0, self.clone())]
        }
    }
    fn from_part(_key: u64, value: Q, _like: &Self) -> Self {
        value
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn parse_text(text: &str) -> Result<Self> {
        parse_q(text)
    }
}

/// Sign-aware rendering helper shared by the text emitters: returns
/// `(negative, body)` where `body` is wrapped in parentheses when it is a
/// sum of several terms.
pub fn coefficient_parts<C: Scalar>(c: &C) -> (bool, String) {
    let text = c.to_string();
    let single = !text.chars().skip(1).any(|ch| ch == '+' || ch == '-');
    match (single, text.strip_prefix('-')) {
        (true, Some(rest)) => (true, rest.to_string()),
        (true, None) => (false, text),
        (false, Some(_)) => (true, format!("({})", c.negate())),
        (false, None) => (false, format!("({text})")),
    }
}

/// Renders `Σ c_k * name_k` with the conventions of the text output.
pub fn render_sum<C: Scalar>(terms: &[(String, C)]) -> String {
    let mut out = String::new();
    for (i, (name, c)) in terms.iter().enumerate() {
        let (neg, body) = coefficient_parts(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body == "1" {
            out.push_str(name);
        } else if name.is_empty() {
            out.push_str(&body);
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_format() {
        assert_eq!(parse_q("3/6").unwrap(), q_frac(1, 2));
        assert_eq!(format_q(&q_frac(-4, 6)), "-2/3");
        assert_eq!(format_q(&q(5)), "5");
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn render_examples() {
        let a = Poly2::a();
        let b = Poly2::b();
        let terms = vec![
            ("R(3)".to_string(), a.clone() + b.clone()),
            ("R(2,1)".to_string(), a.negate()),
            ("R(1,2)".to_string(), b.negate()),
        ];
        assert_eq!(render_sum(&terms), "(a+b)*R(3) - a*R(2,1) - b*R(1,2)");
        let neg = vec![("X".to_string(), (a.clone() + b).negate())];
        assert_eq!(render_sum(&neg), "-(a+b)*X");
        assert_eq!(render_sum::<Q>(&[]), "0");
        assert_eq!(render_sum(&[("G(12)".to_string(), q(1))]), "G(12)");
    }
}
