//! Lie idempotents: Dynkin, Solomon, Klyachko and the two-parameter
//! Catalan family, with the coefficient formulas for the latter.

use std::collections::HashMap;

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use serde_json::{json, Value};

use crate::fqsym::{internal_product, is_in_sym, is_primitive, nesw_bracket, ribbon, signed_ribbon, FqsymElement};
use crate::lie::express_in_c;
use crate::perm::{runs, symmetric_group, Composition, Direction, Permutation, Sign, SignSequence};
use crate::scalar::{narayana_polynomial, q_frac, CycloScalar, Poly2, Scalar, Q};

/// Which family of idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Dynkin,
    Solomon,
    Klyachko,
    Catalan,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Dynkin => "dynkin",
            Family::Solomon => "solomon",
            Family::Klyachko => "klyachko",
            Family::Catalan => "catalan",
        }
    }
}

/// `Ψ_n = Σ_k (−1)^k R_{1^k, n−k}`.
pub fn dynkin_psi<C: Scalar>(n: usize) -> FqsymElement<C> {
    let mut out = FqsymElement::zero(n);
    for k in 0..n {
        let mut parts = vec![1; k];
        parts.push(n - k);
        let r = ribbon::<C>(&Composition::new(parts).expect("positive parts"));
        let sign = if k % 2 == 0 { C::one() } else { C::one().negate() };
        out.add_scaled(&r, &sign);
    }
    out
}

/// `Φ_n = Σ_σ (−1)^{d(σ)} / binom(n−1, d(σ)) G_σ`.
pub fn solomon_big_phi(n: usize) -> FqsymElement<Q> {
    let mut out = FqsymElement::zero(n);
    for sigma in symmetric_group(n) {
        let d = sigma.des();
        let sign = if d % 2 == 0 { 1 } else { -1 };
        out.add_term(sigma.clone(), &q_frac(sign, binomial(n as i64 - 1, d as i64)));
    }
    out
}

/// The first Eulerian idempotent `φ_n = Φ_n / n`.
pub fn solomon_phi(n: usize) -> FqsymElement<Q> {
    solomon_big_phi(n).scale(&q_frac(1, n as i64))
}

/// `κ_n = (1/n) Σ_σ ω^{maj(σ)} G_σ` with `ω` a primitive `n`-th root of unity.
pub fn klyachko(n: usize) -> FqsymElement<CycloScalar> {
    let mut out = FqsymElement::zero(n);
    let inv_n = CycloScalar::rational(q_frac(1, n as i64));
    for sigma in symmetric_group(n) {
        let w = CycloScalar::omega_power(n, sigma.maj() as i64);
        out.add_term(sigma.clone(), &w.mul_ref(&inv_n));
    }
    out
}

/// `D^n_{a,b}` from signed ribbons and Narayana weights.
pub fn catalan_idempotent(n: usize) -> Result<FqsymElement<Poly2>> {
    if n == 0 {
        return Err(Error::InvalidArgument("the Catalan idempotent needs n >= 1".into()));
    }
    let mut out = FqsymElement::zero(n);
    for signs in SignSequence::all(n - 1) {
        let stacks = signs.stacks();
        let mut weight = Poly2::one();
        for (i, (sign, len)) in stacks.iter().enumerate() {
            if i + 1 < stacks.len() {
                weight = &weight * &if *sign == Sign::Plus { Poly2::a() } else { Poly2::b() };
            }
            weight = &weight * &narayana_polynomial(*len)?;
        }
        out.add_scaled(&signed_ribbon::<Poly2>(&signs), &weight);
    }
    Ok(out)
}

/// `D^n` at rational values of `a` and `b`.
pub fn catalan_idempotent_at(n: usize, a: &Q, b: &Q) -> Result<FqsymElement<Q>> {
    Ok(catalan_idempotent(n)?.map_coeffs(|c| c.eval(a, b)))
}

/// `N_m = ca_{m−1}` with `N_1 = N_2 = 1`.
fn narayana_shifted(m: usize) -> Poly2 {
    if m <= 2 {
        Poly2::one()
    } else {
        narayana_polynomial(m - 1).expect("m >= 3")
    }
}

/// Coefficient of `G_σ` in `D^n` from the maximal runs of `σ`.
pub fn csigma_closed_form(sigma: &Permutation) -> Result<Poly2> {
    let r = runs(sigma)?;
    if sigma.len() == 1 {
        return Ok(Poly2::one());
    }
    let p = r.directions.len() - 1;
    let mut out = Poly2::one();
    for (k, dir) in r.directions.iter().enumerate() {
        if k < p {
            out = &out * &if *dir == Direction::Up { Poly2::a() } else { Poly2::b() };
        }
        out = &out * &narayana_shifted(r.breakpoints[k + 1] - r.breakpoints[k] + 1);
    }
    Ok(if sigma.des() % 2 == 1 { out.negate() } else { out })
}

/// Weight attached to a factor of a deconcatenation: the factor's own
/// parameter when it has at least two letters, `1` otherwise.
fn factor_weight(len: usize, param: &Poly2) -> Poly2 {
    if len >= 2 {
        param.clone()
    } else {
        Poly2::one()
    }
}

/// Coefficient of `G_σ` in `D^n` from the deconcatenation recursion.
///
/// A split `σ = u·v` with `1 ∈ u`, `n ∈ v` contributes
/// `b^{[|u|≥2]} a^{[|v|≥2]} c_{std u} c_{std v}`; a split with `n ∈ u`,
/// `1 ∈ v` contributes the negative of `a^{[|u|≥2]} b^{[|v|≥2]} c c`.
pub fn csigma_recursive(sigma: &Permutation) -> Result<Poly2> {
    if sigma.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut memo = HashMap::new();
    Ok(csigma_rec(sigma, &mut memo))
}

fn csigma_rec(sigma: &Permutation, memo: &mut HashMap<Permutation, Poly2>) -> Poly2 {
    let n = sigma.len();
    if n == 1 {
        return Poly2::one();
    }
    if let Some(c) = memo.get(sigma) {
        return c.clone();
    }
    let letters = sigma.letters();
    let pos_one = letters.iter().position(|&v| v == 1).expect("permutation");
    let pos_max = letters.iter().position(|&v| v as usize == n).expect("permutation");
    let (a, b) = (Poly2::a(), Poly2::b());
    let mut out = Poly2::zero();
    let (lo, hi) = (pos_one.min(pos_max), pos_one.max(pos_max));
    for cut in lo + 1..=hi {
        let u = crate::perm::standardize_letters(&letters[..cut]);
        let v = crate::perm::standardize_letters(&letters[cut..]);
        let cu = csigma_rec(&u, memo);
        let cv = csigma_rec(&v, memo);
        let term = &cu * &cv;
        if pos_one < pos_max {
            out = out + &(&factor_weight(cut, &b) * &factor_weight(n - cut, &a)) * &term;
        } else {
            out = out - &(&factor_weight(cut, &a) * &factor_weight(n - cut, &b)) * &term;
        }
    }
    memo.insert(sigma.clone(), out.clone());
    out
}

/// `c_σ = (−1)^{n−1} c_{σ̄}` for every `σ ∈ S_n`.
pub fn reversal_symmetry_check(n: usize) -> bool {
    symmetric_group(n).iter().all(|sigma| {
        let c = csigma_closed_form(sigma).expect("n >= 1");
        let d = csigma_closed_form(&sigma.reversal()).expect("n >= 1");
        if n % 2 == 1 {
            c == d
        } else {
            c == d.negate()
        }
    })
}

/// Grade-by-grade solution of `X_+ = B(G_1 + b X_+, G_1 + a X_+)` with
/// `B(x, y) = x ↗ y − y ↙ x`; returns `X_2, …, X_max`.
pub fn functional_equation_solution(max_n: usize) -> Vec<FqsymElement<Poly2>> {
    let g1 = FqsymElement::<Poly2>::basis(Permutation::identity(1));
    // slices[k] = X_k, slices[1] = G_1 stands for the generator term.
    let mut slices: Vec<FqsymElement<Poly2>> = vec![FqsymElement::zero(0), g1.clone()];
    for n in 2..=max_n {
        let mut x = FqsymElement::zero(n);
        for k in 1..n {
            let left = if k == 1 { g1.clone() } else { slices[k].scale(&Poly2::b()) };
            let right = if n - k == 1 { g1.clone() } else { slices[n - k].scale(&Poly2::a()) };
            let term = nesw_bracket(&left, &right).expect("positive grades");
            x.add_scaled(&term, &Poly2::one());
        }
        slices.push(x);
    }
    slices.drain(..2.min(slices.len()));
    slices
}

/// Scalar `c` with `F * F = c F`.
pub fn verify_quasi_idempotent<C: Scalar>(f: &FqsymElement<C>) -> Result<C> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let square = internal_product(f, f);
    let (sigma, c) = f.sorted_terms()[0];
    let ratio = square
        .coeff(sigma)
        .try_div(c)
        .ok_or_else(|| Error::NotQuasiIdempotent(format!("no exact ratio at {sigma}")))?;
    if square == f.scale(&ratio) {
        Ok(ratio)
    } else {
        Err(Error::NotQuasiIdempotent(format!("F*F is not proportional to F (ratio at {sigma} is {ratio})")))
    }
}

/// `D^n` specialized at `a = b = 1` is `Σ_t c_t`; its quasi-idempotency scalar.
pub fn catalan_quasi_scalar(n: usize, a: &Q, b: &Q) -> Result<Q> {
    verify_quasi_idempotent(&catalan_idempotent_at(n, a, b)?)
}

/// Properties of a candidate Lie idempotent.
#[derive(Clone, Debug)]
pub struct IdempotentReport {
    pub n: usize,
    pub family: Option<Family>,
    /// `c` with `F * F = c F`, if any.
    pub quasi_scalar: Option<String>,
    pub primitive: bool,
    pub in_sym: bool,
    /// Coordinates on the `c_t`, or `None` outside the Catalan algebra.
    pub pbw_coeffs: Option<Vec<(String, String)>>,
}

impl IdempotentReport {
    pub fn to_json(&self) -> Value {
        let coeffs = self.pbw_coeffs.as_ref().map(|v| {
            Value::Object(v.iter().map(|(t, c)| (t.clone(), Value::String(c.clone()))).collect())
        });
        json!({
            "n": self.n,
            "family": self.family.map(Family::name),
            "quasi_scalar": self.quasi_scalar,
            "primitive": self.primitive,
            "in_sym": self.in_sym,
            "pbw_coeffs": coeffs,
        })
    }
}

/// Quasi-idempotency scalar, primitivity, membership in `Sym` and the
/// coordinates on the `c_t` of `f`. The internal square is skipped when
/// `square` is false.
pub fn verify_lie_idempotent<C: Scalar>(f: &FqsymElement<C>, family: Option<Family>, square: bool) -> Result<IdempotentReport> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let quasi_scalar = if square { verify_quasi_idempotent(f).ok().map(|c| c.to_string()) } else { None };
    let pbw_coeffs = express_in_c(f).ok().map(|e| e.sorted_terms().into_iter().map(|(t, c)| (t.to_string(), c.to_string())).collect());
    Ok(IdempotentReport { n: f.grade(), family, quasi_scalar, primitive: is_primitive(f), in_sym: is_in_sym(f), pbw_coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym::ribbon_expansion;
    use crate::scalar::{q, render_sum};

    fn ribbon_text(x: &FqsymElement<Poly2>) -> String {
        let terms: Vec<(String, Poly2)> = ribbon_expansion(x)
            .unwrap()
            .into_iter()
            .map(|(c, v)| (format!("R{c}"), v))
            .collect();
        render_sum(&terms)
    }

    #[test]
    fn catalan_tables() {
        assert_eq!(ribbon_text(&catalan_idempotent(2).unwrap()), "R(2) - R(1,1)");
        assert_eq!(
            ribbon_text(&catalan_idempotent(3).unwrap()),
            "(a+b)*R(3) - a*R(2,1) - b*R(1,2) + (a+b)*R(1,1,1)"
        );
        assert_eq!(
            ribbon_text(&catalan_idempotent(4).unwrap()),
            "(a^2+3*a*b+b^2)*R(4) - (a^2+a*b)*R(3,1) - a*b*R(2,2) - (a*b+b^2)*R(1,3) + (a^2+a*b)*R(2,1,1) \
             + a*b*R(1,2,1) + (a*b+b^2)*R(1,1,2) - (a^2+3*a*b+b^2)*R(1,1,1,1)"
        );
    }

    #[test]
    fn dynkin_examples() {
        let psi3 = dynkin_psi::<Q>(3);
        let expected = &(&ribbon::<Q>(&Composition::parse("(3)").unwrap())
            - &ribbon::<Q>(&Composition::parse("(1,2)").unwrap()))
            + &ribbon::<Q>(&Composition::parse("(1,1,1)").unwrap());
        assert_eq!(psi3, expected);
        for n in 1..6 {
            assert_eq!(verify_quasi_idempotent(&dynkin_psi::<Q>(n)).unwrap(), q(n as i64));
        }
    }

    #[test]
    fn solomon_examples() {
        assert_eq!(solomon_phi(3).coeff(&Permutation::parse("132").unwrap()), q_frac(-1, 6));
        for n in 1..6 {
            assert_eq!(verify_quasi_idempotent(&solomon_phi(n)).unwrap(), q(1));
            assert!(is_primitive(&solomon_phi(n)));
        }
    }

    #[test]
    fn klyachko_examples() {
        let k3 = klyachko(3);
        let c = k3.coeff(&Permutation::parse("213").unwrap());
        assert_eq!(c, CycloScalar::omega_power(3, 1).mul_ref(&CycloScalar::rational(q_frac(1, 3))));
        for n in 1..5 {
            let k = klyachko(n);
            assert_eq!(verify_quasi_idempotent(&k).unwrap(), CycloScalar::one(), "n = {n}");
            assert!(is_in_sym(&k));
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = |s: &str| csigma_closed_form(&Permutation::parse(s).unwrap()).unwrap();
        assert_eq!(c("123"), Poly2::a() + Poly2::b());
        assert_eq!(c("132"), Poly2::a().negate());
        assert_eq!(c("321"), Poly2::a() + Poly2::b());
        let r = |s: &str| csigma_recursive(&Permutation::parse(s).unwrap()).unwrap();
        assert_eq!(r("12"), Poly2::one());
        assert_eq!(r("21"), Poly2::one().negate());
        for n in 1..6 {
            let d = catalan_idempotent(n).unwrap();
            for sigma in symmetric_group(n) {
                assert_eq!(csigma_closed_form(sigma).unwrap(), d.coeff(sigma), "{sigma}");
                assert_eq!(csigma_recursive(sigma).unwrap(), d.coeff(sigma), "{sigma}");
            }
            assert!(reversal_symmetry_check(n));
        }
    }

    #[test]
    fn functional_equation_small() {
        let sols = functional_equation_solution(5);
        for (i, x) in sols.iter().enumerate() {
            assert_eq!(x, &catalan_idempotent(i + 2).unwrap(), "n = {}", i + 2);
        }
    }

    #[test]
    fn reports() {
        let r = verify_lie_idempotent(&solomon_phi(4), Some(Family::Solomon), true).unwrap();
        assert_eq!(r.quasi_scalar.as_deref(), Some("1"));
        assert!(r.primitive && r.in_sym && r.pbw_coeffs.is_some());
        let d = catalan_idempotent_at(4, &q(1), &q(1)).unwrap();
        let r = verify_lie_idempotent(&d, Some(Family::Catalan), true).unwrap();
        assert!(r.quasi_scalar.is_some());
        let v = r.to_json();
        assert_eq!(v["family"], "catalan");
        assert_eq!(v["pbw_coeffs"].as_object().unwrap().len(), 5);
        let g = FqsymElement::<Q>::basis(Permutation::parse("12").unwrap());
        let r = verify_lie_idempotent(&g, None, true).unwrap();
        assert!(!r.primitive && r.pbw_coeffs.is_none() && r.quasi_scalar.as_deref() == Some("1"));
    }

    #[test]
    fn quasi_idempotent_errors() {
        assert!(matches!(verify_quasi_idempotent(&FqsymElement::<Q>::zero(3)), Err(Error::ZeroElement)));
        let g = FqsymElement::<Q>::basis(Permutation::parse("12").unwrap());
        let x = &g + &FqsymElement::basis(Permutation::parse("21").unwrap()).scale(&q(2));
        assert!(verify_quasi_idempotent(&x).is_err());
    }
}
