use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{format_q, Scalar, Q};

/// Integer coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().expect("cyclotomic cache poisoned").insert(n, p.clone());
    p
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
    }
    debug_assert!(rem.iter().all(|r| r.is_zero()), "inexact cyclotomic division");
    quot
}

/// Element of `Q[ω]/(Φ_n)`; order 0 marks a rational constant that has
/// not yet met a root of unity.
#[derive(Clone)]
pub struct CycloScalar {
    order: usize,
    coeffs: Vec<Q>,
}

impl CycloScalar {
    pub fn rational(x: Q) -> Self {
        let mut s = CycloScalar { order: 0, coeffs: vec![x] };
        s.trim();
        s
    }

    /// `ω^k` with `ω` a primitive `n`-th root of unity.
    pub fn omega_power(n: usize, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Q::zero(); e + 1];
        coeffs[e] = Q::one();
        let mut s = CycloScalar { order: n, coeffs };
        s.reduce();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn reduce(&mut self) {
        if self.order > 0 {
            let phi = cyclotomic_polynomial(self.order);
            let d = phi.len() - 1;
            while self.coeffs.len() > d {
                let k = self.coeffs.len() - 1;
                let c = self.coeffs[k].clone();
                if !c.is_zero() {
                    for (i, p) in phi.iter().enumerate() {
                        self.coeffs[k - d + i] -= &c * Q::from_integer(p.clone());
                    }
                }
                self.coeffs.pop();
            }
        }
        self.trim();
    }

    fn joint_order(&self, other: &Self) -> usize {
        match (self.order, other.order) {
            (0, o) | (o, 0) => o,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing cyclotomic scalars of orders {x} and {y}"),
        }
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        let orders_agree = self.order == 0 || other.order == 0 || self.order == other.order;
        orders_agree && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl std::hash::Hash for CycloScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Q::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            match (magnitude.is_one(), power.is_empty()) {
                (true, false) => f.write_str(&power)?,
                (_, true) => f.write_str(&format_q(&magnitude))?,
                (false, false) => write!(f, "{}*{}", format_q(&magnitude), power)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod Phi_{})", self.order)
    }
}

impl std::ops::Add for CycloScalar {
    type Output = CycloScalar;
    fn add(mut self, rhs: CycloScalar) -> CycloScalar {
        self.add_assign_ref(&rhs);
        self
    }
}

impl std::ops::Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: CycloScalar) -> CycloScalar {
        self.mul_ref(&rhs)
    }
}

impl Zero for CycloScalar {
    fn zero() -> Self {
        CycloScalar { order: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for CycloScalar {
    fn one() -> Self {
        CycloScalar::rational(Q::one())
    }
}

impl Scalar for CycloScalar {
    /// Only rational constants have a text form without the order.
    fn parse_text(text: &str) -> crate::error::Result<Self> {
        super::parse_q(text).map(CycloScalar::rational)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.order = self.joint_order(rhs);
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Q::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        self.trim();
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let order = self.joint_order(rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return CycloScalar { order, coeffs: Vec::new() };
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        let mut s = CycloScalar { order, coeffs };
        s.reduce();
        s
    }
    fn negate(&self) -> Self {
        CycloScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_q(x: Q) -> Self {
        CycloScalar::rational(x)
    }
    fn parts(&self) -> Vec<(u64, Q)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u64, c.clone()))
            .collect()
    }
    fn from_part(key: u64, value: Q, like: &Self) -> Self {
        let mut coeffs = vec![Q::zero(); key as usize + 1];
        coeffs[key as usize] = value;
        let mut s = CycloScalar { order: like.order, coeffs };
        s.reduce();
        s
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let order = self.joint_order(rhs);
        if order == 0 || rhs.coeffs.len() == 1 {
            let inv = Q::one() / &rhs.coeffs[0];
            return Some(self.mul_ref(&CycloScalar::rational(inv)));
        }
        // Solve rhs * x = self as a linear system over Q in the power basis.
        let d = cyclotomic_polynomial(order).len() - 1;
        let columns: Vec<Vec<Q>> = (0..d)
            .map(|k| {
                let prod = rhs.mul_ref(&CycloScalar::omega_power(order, k as i64));
                (0..d).map(|i| prod.coeffs.get(i).cloned().unwrap_or_else(Q::zero)).collect()
            })
            .collect();
        let target: Vec<Q> = (0..d).map(|i| self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)).collect();
        let x = crate::linalg::solve_dense(&columns, &target)?;
        let mut s = CycloScalar { order, coeffs: x };
        s.reduce();
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn cyclotomic_polynomials() {
        let show = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(show(1), "-1,1");
        assert_eq!(show(2), "1,1");
        assert_eq!(show(4), "1,0,1");
        assert_eq!(show(6), "1,-1,1");
        assert_eq!(show(12), "1,0,-1,0,1");
    }

    #[test]
    fn root_of_unity_examples() {
        assert_eq!(CycloScalar::omega_power(2, 1), CycloScalar::rational(q(-1)));
        assert_eq!(CycloScalar::omega_power(4, 2), CycloScalar::rational(q(-1)).mul_ref(&CycloScalar::omega_power(4, 0)));
        for n in 1..10 {
            let w = CycloScalar::omega_power(n, 1);
            let mut p = CycloScalar::one();
            for _ in 0..n {
                p = p.mul_ref(&w);
            }
            assert_eq!(p.coefficients(), CycloScalar::one().coefficients(), "n = {n}");
        }
    }

    #[test]
    fn division() {
        let w = CycloScalar::omega_power(5, 1);
        let x = CycloScalar::omega_power(5, 3);
        let mut s = w.clone();
        s.add_assign_ref(&CycloScalar::one());
        let prod = s.mul_ref(&x);
        assert_eq!(prod.try_div(&s).unwrap(), x);
    }
}
