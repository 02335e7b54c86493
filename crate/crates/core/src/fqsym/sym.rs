use std::cmp::Reverse;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::FqsymElement;
use crate::perm::{descent_composition, dt_shape, symmetric_group, Composition, Permutation, SignSequence};
use crate::scalar::Scalar;
use crate::trees::{BinaryTree, TamariLattice};

type Classes<K> = Arc<Vec<(K, Vec<Permutation>)>>;

/// Descent classes of `S_n`, in display order: fewer parts first, then
/// reverse lexicographic on parts (`R(3), R(2,1), R(1,2), R(1,1,1)`).
pub fn descent_classes(n: usize) -> Classes<Composition> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Classes<Composition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("class cache poisoned").get(&n) {
        return c.clone();
    }
    let mut map: HashMap<Composition, Vec<Permutation>> = HashMap::new();
    for sigma in symmetric_group(n) {
        let key = descent_composition(sigma).expect("n >= 1");
        map.entry(key).or_default().push(sigma.clone());
    }
    let mut classes: Vec<(Composition, Vec<Permutation>)> = map.into_iter().collect();
    classes.sort_by(|a, b| ribbon_order(&a.0).cmp(&ribbon_order(&b.0)));
    let classes = Arc::new(classes);
    cache.lock().expect("class cache poisoned").insert(n, classes.clone());
    classes
}

fn ribbon_order(c: &Composition) -> (usize, Reverse<Vec<usize>>) {
    (c.length(), Reverse(c.parts().to_vec()))
}

/// How a permutation is attached to a binary tree in the PBT embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PbtConvention {
    /// Shape of the decreasing tree of `σ`.
    #[default]
    DecreasingTree,
    /// Shape of the decreasing tree of `σ⁻¹`.
    Inverse,
}

impl PbtConvention {
    pub fn shape(self, sigma: &Permutation) -> BinaryTree {
        match self {
            PbtConvention::DecreasingTree => dt_shape(sigma),
            PbtConvention::Inverse => dt_shape(&sigma.inverse()),
        }
    }
}

/// Permutations grouped by tree shape, trees sorted by text form.
pub fn shape_classes(n: usize, convention: PbtConvention) -> Classes<BinaryTree> {
    type Cache = Mutex<HashMap<(usize, PbtConvention), Classes<BinaryTree>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("class cache poisoned").get(&(n, convention)) {
        return c.clone();
    }
    let mut map: HashMap<BinaryTree, Vec<Permutation>> = HashMap::new();
    for sigma in symmetric_group(n) {
        map.entry(convention.shape(sigma)).or_default().push(sigma.clone());
    }
    let mut classes: Vec<(BinaryTree, Vec<Permutation>)> = map.into_iter().collect();
    classes.sort_by_cached_key(|c| c.0.to_string());
    let classes = Arc::new(classes);
    cache.lock().expect("class cache poisoned").insert((n, convention), classes.clone());
    classes
}

fn class_sum<C: Scalar>(n: usize, members: &[Permutation]) -> FqsymElement<C> {
    let mut x = FqsymElement::zero(n);
    for sigma in members {
        x.add_term(sigma.clone(), &C::one());
    }
    x
}

/// `R_I = Σ_{C(σ) = I} G_σ`.
pub fn ribbon<C: Scalar>(composition: &Composition) -> FqsymElement<C> {
    let n = composition.size();
    let classes = descent_classes(n);
    let members = classes.iter().find(|(c, _)| c == composition).map(|(_, m)| m.as_slice()).unwrap_or(&[]);
    class_sum(n, members)
}

/// `S^I = Σ_{J coarser than I} R_J`.
pub fn complete_s<C: Scalar>(composition: &Composition) -> FqsymElement<C> {
    let n = composition.size();
    let mut x = FqsymElement::zero(n);
    for (j, members) in descent_classes(n).iter() {
        if j.is_coarser_or_equal(composition) {
            x.add_scaled(&class_sum(n, members), &C::one());
        }
    }
    x
}

/// `(−1)^{l(I)−1} R_I` where `I` has descents at the `−` positions of `ε`.
pub fn signed_ribbon<C: Scalar>(signs: &SignSequence) -> FqsymElement<C> {
    let comp = signs.composition();
    let r = ribbon::<C>(&comp);
    if comp.length() % 2 == 0 {
        -&r
    } else {
        r
    }
}

fn constant_on<K: Clone, C: Scalar>(x: &FqsymElement<C>, classes: &[(K, Vec<Permutation>)]) -> Option<Vec<(K, C)>> {
    let mut out = Vec::new();
    let mut seen = 0;
    for (key, members) in classes {
        let c = x.coeff(&members[0]);
        if members[1..].iter().any(|s| x.coeff(s) != c) {
            return None;
        }
        if !c.is_zero() {
            seen += members.len();
            out.push((key.clone(), c));
        }
    }
    (seen == x.len()).then_some(out)
}

/// Coordinates on ribbons when `x ∈ Sym`.
pub fn ribbon_expansion<C: Scalar>(x: &FqsymElement<C>) -> Option<Vec<(Composition, C)>> {
    if x.grade() == 0 {
        return None;
    }
    constant_on(x, &descent_classes(x.grade()))
}

pub fn is_in_sym<C: Scalar>(x: &FqsymElement<C>) -> bool {
    x.is_zero() || ribbon_expansion(x).is_some()
}

pub fn is_in_pbt<C: Scalar>(x: &FqsymElement<C>, convention: PbtConvention) -> bool {
    x.is_zero() || (x.grade() > 0 && constant_on(x, &shape_classes(x.grade(), convention)).is_some())
}

/// Coordinates on the `P` basis when `x ∈ PBT`.
pub fn pbt_expansion<C: Scalar>(x: &FqsymElement<C>, convention: PbtConvention) -> Option<Vec<(BinaryTree, C)>> {
    if x.grade() == 0 {
        return None;
    }
    constant_on(x, &shape_classes(x.grade(), convention))
}

/// `P_t = Σ_{shape(σ) = t} G_σ`.
pub fn pbt_p<C: Scalar>(t: &BinaryTree, convention: PbtConvention) -> FqsymElement<C> {
    let n = t.size();
    let classes = shape_classes(n, convention);
    let members = classes.iter().find(|(s, _)| s == t).map(|(_, m)| m.as_slice()).unwrap_or(&[]);
    class_sum(n, members)
}

/// `H_t = Σ_{t' ≤ t} P_{t'}` in the Tamari order.
pub fn pbt_h<C: Scalar>(t: &BinaryTree, convention: PbtConvention) -> FqsymElement<C> {
    let n = t.size();
    let lattice = TamariLattice::of_size(n);
    let mut x = FqsymElement::zero(n);
    for (s, members) in shape_classes(n, convention).iter() {
        if lattice.leq(s, t) {
            x.add_scaled(&class_sum(n, members), &C::one());
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    fn g(s: &str) -> FqsymElement {
        FqsymElement::basis(Permutation::parse(s).unwrap())
    }

    fn comp(s: &str) -> Composition {
        Composition::parse(s).unwrap()
    }

    #[test]
    fn ribbon_examples() {
        assert_eq!(ribbon::<Q>(&comp("(3)")), g("123"));
        assert_eq!(ribbon::<Q>(&comp("(2,1)")), &g("132") + &g("231"));
        let signs = SignSequence::parse("+-").unwrap();
        assert_eq!(signed_ribbon::<Q>(&signs), -&ribbon::<Q>(&comp("(2,1)")));
        let order: Vec<String> = descent_classes(3).iter().map(|c| c.0.to_string()).collect();
        assert_eq!(order, vec!["(3)", "(2,1)", "(1,2)", "(1,1,1)"]);
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_s::<Q>(&comp("(2)")), g("12"));
        assert_eq!(complete_s::<Q>(&comp("(1,1)")), &g("12") + &g("21"));
        assert_eq!(complete_s::<Q>(&comp("(1,1,1)")).len(), 6);
    }

    #[test]
    fn membership_tests() {
        let psi2 = &g("12") - &g("21");
        assert!(is_in_sym(&psi2));
        assert!(is_in_pbt(&psi2, PbtConvention::DecreasingTree));
        assert!(!is_in_sym(&g("132")));
        assert!(!is_in_pbt(&g("132"), PbtConvention::DecreasingTree));
        assert!(is_in_pbt(&g("132"), PbtConvention::DecreasingTree) == (shape_classes(3, PbtConvention::DecreasingTree).iter().any(|c| c.1.len() == 1 && c.1[0] == Permutation::parse("132").unwrap())));
    }

    #[test]
    fn pbt_examples() {
        let conv = PbtConvention::DecreasingTree;
        let left = BinaryTree::parse("(o _)").unwrap();
        let right = BinaryTree::parse("(_ o)").unwrap();
        assert_eq!(pbt_p::<Q>(&left, conv), g("12"));
        assert_eq!(pbt_p::<Q>(&right, conv), g("21"));
        let balanced = BinaryTree::parse("(o o)").unwrap();
        assert_eq!(pbt_p::<Q>(&balanced, conv), &g("132") + &g("231"));
        let top = BinaryTree::right_comb(4);
        assert_eq!(pbt_h::<Q>(&top, conv).len(), 24);
        let mut total = FqsymElement::zero(4);
        for t in BinaryTree::all(4).iter() {
            total = &total + &pbt_p::<Q>(t, conv);
        }
        assert_eq!(total.len(), 24);
    }
}
