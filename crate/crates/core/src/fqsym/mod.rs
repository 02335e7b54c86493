//! Free quasi-symmetric functions on the `G` basis.

mod ops;
mod sym;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::scalar::{render_sum, Scalar, Q};

pub use ops::{
    coproduct, half_product, internal_product, is_primitive, lie_bracket, nesw_bracket, prelie, product,
    quadri_coproduct, quadri_product, reduced_coproduct, Corner, Side,
};
pub use sym::{
    complete_s, descent_classes, is_in_pbt, is_in_sym, pbt_expansion, pbt_h, pbt_p, ribbon, ribbon_expansion, shape_classes,
    signed_ribbon, PbtConvention,
};

/// Homogeneous linear combination of `G_σ`, `σ ∈ S_n`.
#[derive(Clone)]
pub struct FqsymElement<C: Scalar = Q> {
    n: usize,
    terms: HashMap<Permutation, C>,
}

impl<C: Scalar> FqsymElement<C> {
    pub fn zero(n: usize) -> Self {
        FqsymElement { n, terms: HashMap::new() }
    }

    pub fn basis(sigma: Permutation) -> Self {
        let n = sigma.len();
        let mut terms = HashMap::new();
        terms.insert(sigma, C::one());
        FqsymElement { n, terms }
    }

    /// The unit `G_∅`.
    pub fn unit() -> Self {
        Self::basis(Permutation::empty())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, C)>) -> Result<Self> {
        let mut x = Self::zero(n);
        for (sigma, c) in terms {
            if sigma.len() != n {
                return Err(Error::GradeMismatch(n, sigma.len()));
            }
            x.add_term(sigma, &c);
        }
        Ok(x)
    }

    pub fn grade(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, sigma: &Permutation) -> C {
        self.terms.get(sigma).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    /// Terms sorted by permutation (lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, sigma: Permutation, c: &C) {
        debug_assert_eq!(sigma.len(), self.n, "term of the wrong grade");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        self.adopt_grade(other);
        for (sigma, d) in &other.terms {
            self.add_term(sigma.clone(), &d.mul_ref(c));
        }
    }

    fn adopt_grade(&mut self, other: &Self) {
        if self.is_zero() {
            self.n = other.n;
        } else if !other.is_zero() {
            assert_eq!(self.n, other.n, "adding elements of different grades");
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (sigma, d) in &self.terms {
            out.terms.insert(sigma.clone(), d.mul_ref(c));
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> FqsymElement<D> {
        let mut out = FqsymElement::zero(self.n);
        for (sigma, c) in &self.terms {
            out.add_term(sigma.clone(), &f(c));
        }
        out
    }

    /// `Σ c_σ G_{σ̄}` with `σ̄` the reversed word.
    pub fn reversed(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (sigma, c) in &self.terms {
            out.terms.insert(sigma.reversal(), c.clone());
        }
        out
    }

    /// `Σ c_σ G_{σ⁻¹}`.
    pub fn inverted(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (sigma, c) in &self.terms {
            out.terms.insert(sigma.inverse(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(sigma, c)| json!({"perm": sigma.to_vec(), "coef": c.to_string()}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("element JSON: {what}"));
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut out = Self::zero(n);
        for t in terms {
            let perm: Vec<usize> = t
                .get("perm")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing perm"))?
                .iter()
                .map(|x| x.as_u64().map(|y| y as usize).ok_or_else(|| bad("perm entry")))
                .collect::<Result<_>>()?;
            let coef = t.get("coef").and_then(Value::as_str).ok_or_else(|| bad("missing coef"))?;
            let sigma = Permutation::new(&perm)?;
            if sigma.len() != n {
                return Err(Error::GradeMismatch(n, sigma.len()));
            }
            out.add_term(sigma, &C::parse_text(coef)?);
        }
        Ok(out)
    }
}

impl<C: Scalar> PartialEq for FqsymElement<C> {
    fn eq(&self, other: &Self) -> bool {
        (self.n == other.n || (self.is_zero() && other.is_zero())) && self.terms == other.terms
    }
}

impl<C: Scalar> Eq for FqsymElement<C> {}

impl<C: Scalar> Add for &FqsymElement<C> {
    type Output = FqsymElement<C>;
    fn add(self, rhs: &FqsymElement<C>) -> FqsymElement<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Scalar> Sub for &FqsymElement<C> {
    type Output = FqsymElement<C>;
    fn sub(self, rhs: &FqsymElement<C>) -> FqsymElement<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one().negate());
        out
    }
}

impl<C: Scalar> Neg for &FqsymElement<C> {
    type Output = FqsymElement<C>;
    fn neg(self) -> FqsymElement<C> {
        self.scale(&C::one().negate())
    }
}

impl<C: Scalar> fmt::Display for FqsymElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, C)> =
            self.sorted_terms().into_iter().map(|(s, c)| (format!("G({s})"), c.clone())).collect();
        f.write_str(&render_sum(&terms))
    }
}

impl<C: Scalar> fmt::Debug for FqsymElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}] {self}", self.n)
    }
}

/// Element of `FQSym ⊗ FQSym`, used for coproducts.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement<C: Scalar = Q> {
    terms: HashMap<(Permutation, Permutation), C>,
}

impl<C: Scalar> Default for TensorElement<C> {
    fn default() -> Self {
        TensorElement { terms: HashMap::new() }
    }
}

impl<C: Scalar> TensorElement<C> {
    pub fn zero() -> Self {
        Self::default()
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

    pub fn coeff(&self, left: &Permutation, right: &Permutation) -> C {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Permutation, Permutation), &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: Permutation, right: Permutation, c: &C) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(C::zero);
        entry.add_assign_ref(c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for ((l, r), d) in &other.terms {
            self.add_term(l.clone(), r.clone(), &d.mul_ref(c));
        }
    }

    /// Product in the tensor square, factor by factor.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let c = c1.mul_ref(c2);
                let left = product(&FqsymElement::<C>::basis(l1.clone()), &FqsymElement::basis(l2.clone()));
                let right = product(&FqsymElement::<C>::basis(r1.clone()), &FqsymElement::basis(r2.clone()));
                for (a, ca) in left.terms() {
                    for (b, cb) in right.terms() {
                        out.add_term(a.clone(), b.clone(), &c.mul_ref(&ca.mul_ref(cb)));
                    }
                }
            }
        }
        out
    }

    /// `μ`: multiplies the two factors back together.
    pub fn multiply_out(&self, n: usize) -> FqsymElement<C> {
        let mut out = FqsymElement::zero(n);
        for ((l, r), c) in &self.terms {
            let p = product(&FqsymElement::<C>::basis(l.clone()), &FqsymElement::basis(r.clone()));
            out.add_scaled(&p, c);
        }
        out
    }

    /// Sorted `(left, right, coefficient)` listing.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &Permutation, &C)> {
        let mut v: Vec<_> = self.terms.iter().map(|((l, r), c)| (l, r, c)).collect();
        v.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        v
    }
}

impl<C: Scalar> fmt::Debug for TensorElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, C)> = self
            .sorted_terms()
            .into_iter()
            .map(|(l, r, c)| (format!("G({l})⊗G({r})"), c.clone()))
            .collect();
        f.write_str(&render_sum(&terms))
    }
}
