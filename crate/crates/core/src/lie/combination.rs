use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use serde_json::{json, Value};

use crate::scalar::{render_sum, Poly2, Scalar};
use crate::trees::{BinaryTree, PlaneTree, RootedTree};

/// Tree types used as basis labels.
pub trait TreeKey: Clone + Eq + Hash + Ord + fmt::Display + Send + Sync + 'static {
    /// Name of the basis in text output.
    const PREFIX: &'static str;
    /// Grade of the Lie element the tree labels.
    fn grade(&self) -> usize;
}

impl TreeKey for BinaryTree {
    const PREFIX: &'static str = "c";
    fn grade(&self) -> usize {
        self.size() + 1
    }
}

impl TreeKey for PlaneTree {
    const PREFIX: &'static str = "X";
    fn grade(&self) -> usize {
        self.size()
    }
}

impl TreeKey for RootedTree {
    const PREFIX: &'static str = "p";
    fn grade(&self) -> usize {
        self.size()
    }
}

/// Homogeneous linear combination of trees.
#[derive(Clone)]
pub struct TreeCombination<K: TreeKey, C: Scalar> {
    n: usize,
    terms: HashMap<K, C>,
}

/// Combination of `c_t`, keyed by the internal-node binary tree.
pub type CatalanElement<C = Poly2> = TreeCombination<BinaryTree, C>;
/// Combination of `X_T = x_{K(T)}`, keyed by plane trees.
pub type XElement<C = Poly2> = TreeCombination<PlaneTree, C>;
/// Combination of the Chapoton–Livernet basis `p_τ` of the free preLie
/// algebra, keyed by rooted trees.
pub type PreLieElement<C = Poly2> = TreeCombination<RootedTree, C>;

impl<K: TreeKey, C: Scalar> TreeCombination<K, C> {
    pub fn zero(n: usize) -> Self {
        TreeCombination { n, terms: HashMap::new() }
    }

    pub fn basis(t: K) -> Self {
        let mut out = Self::zero(t.grade());
        out.terms.insert(t, C::one());
        out
    }

    pub fn grade(&self) -> usize {
        self.n
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

    pub fn coeff(&self, t: &K) -> C {
        self.terms.get(t).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    /// Terms sorted by the text form of the tree.
    pub fn sorted_terms(&self) -> Vec<(&K, &C)> {
        let mut v: Vec<(&K, &C)> = self.terms.iter().collect();
        v.sort_by_cached_key(|(t, _)| t.to_string());
        v
    }

    pub fn add_term(&mut self, t: K, c: &C) {
        if c.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            self.n = t.grade();
        }
        assert_eq!(t.grade(), self.n, "tree of the wrong grade");
        match self.terms.entry(t) {
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
        if c.is_zero() {
            return;
        }
        for (t, d) in &other.terms {
            self.add_term(t.clone(), &d.mul_ref(c));
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> TreeCombination<K, D> {
        let mut out = TreeCombination::zero(self.n);
        for (t, c) in &self.terms {
            out.add_term(t.clone(), &f(c));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(t, c)| json!({"tree": t.to_string(), "coef": c.to_string()}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }
}

impl<K: TreeKey, C: Scalar> PartialEq for TreeCombination<K, C> {
    fn eq(&self, other: &Self) -> bool {
        (self.n == other.n || (self.is_zero() && other.is_zero())) && self.terms == other.terms
    }
}

impl<K: TreeKey, C: Scalar> Eq for TreeCombination<K, C> {}

impl<K: TreeKey, C: Scalar> Add for &TreeCombination<K, C> {
    type Output = TreeCombination<K, C>;
    fn add(self, rhs: Self) -> Self::Output {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<K: TreeKey, C: Scalar> Sub for &TreeCombination<K, C> {
    type Output = TreeCombination<K, C>;
    fn sub(self, rhs: Self) -> Self::Output {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one().negate());
        out
    }
}

impl<K: TreeKey, C: Scalar> Neg for &TreeCombination<K, C> {
    type Output = TreeCombination<K, C>;
    fn neg(self) -> Self::Output {
        self.scale(&C::one().negate())
    }
}

fn basis_name<K: TreeKey>(t: &K) -> String {
    let text = t.to_string();
    if text.starts_with('(') || text.starts_with('[') {
        format!("{}{text}", K::PREFIX)
    } else {
        format!("{}({text})", K::PREFIX)
    }
}

impl<K: TreeKey, C: Scalar> fmt::Display for TreeCombination<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, C)> = self.sorted_terms().into_iter().map(|(t, c)| (basis_name(t), c.clone())).collect();
        f.write_str(&render_sum(&terms))
    }
}

impl<K: TreeKey, C: Scalar> fmt::Debug for TreeCombination<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}] {self}", self.n)
    }
}
