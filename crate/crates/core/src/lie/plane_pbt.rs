//! The algebra of planar binary trees on plane-tree labels: `P` products
//! as Tamari intervals and the multiplicative `H` basis. Coordinates on
//! `P` are stored as [`XElement`]s, since `P_T ↦ X_T` identifies the two.

use super::combination::XElement;
use crate::scalar::Scalar;
use crate::trees::{plane_moebius, PlaneTree, TamariLattice};

/// Terms of `P_{T_1} P_{T_2}`: the subtrees of the root of `T_1` are split,
/// in order, into consecutive blocks grafted on the vertices of the
/// leftmost branch of `T_2`, each block to the left of the next branch
/// vertex.
pub fn p_product_trees(t1: &PlaneTree, t2: &PlaneTree) -> Vec<PlaneTree> {
    fn down(t: &PlaneTree, forest: &[PlaneTree], out: &mut Vec<PlaneTree>) {
        let kids = t.children();
        let Some((first, rest)) = kids.split_first() else {
            out.push(PlaneTree::new(forest.to_vec()));
            return;
        };
        for j in 0..=forest.len() {
            let mut below = Vec::new();
            down(first, &forest[j..], &mut below);
            for b in below {
                let mut k = forest[..j].to_vec();
                k.push(b);
                k.extend(rest.iter().cloned());
                out.push(PlaneTree::new(k));
            }
        }
    }
    let mut out = Vec::new();
    down(t2, t1.children(), &mut out);
    out
}

/// Product on the `P` basis.
pub fn p_product<C: Scalar>(x: &XElement<C>, y: &XElement<C>) -> XElement<C> {
    let mut out = XElement::zero(x.grade() + y.grade() - 1);
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            let ab = a.mul_ref(b);
            for u in p_product_trees(s, t) {
                out.add_term(u, &ab);
            }
        }
    }
    out
}

/// `P` coordinates of an element given on `H_T = Σ_{T' ≤ T} P_{T'}`.
pub fn h_to_p<C: Scalar>(x: &XElement<C>) -> XElement<C> {
    let mut out = XElement::zero(x.grade());
    for (t, c) in x.terms() {
        let lattice = TamariLattice::of_size(t.size() - 1);
        let top = lattice.index_of(&t.knuth_rotation()).expect("tree of the lattice size");
        for u in lattice.lower_set(top) {
            out.add_term(PlaneTree::from_binary(&lattice.trees()[u]), c);
        }
    }
    out
}

/// `H` coordinates of an element given on `P`.
pub fn p_to_h<C: Scalar>(x: &XElement<C>) -> XElement<C> {
    let mut out = XElement::zero(x.grade());
    for (t, c) in x.terms() {
        let lattice = TamariLattice::of_size(t.size() - 1);
        let top = lattice.index_of(&t.knuth_rotation()).expect("tree of the lattice size");
        for (&u, &mu) in lattice.moebius_to(top).iter() {
            out.add_term(PlaneTree::from_binary(&lattice.trees()[u]), &c.mul_ref(&C::from_i64(mu)));
        }
    }
    out
}

/// Möbius value on plane trees, exposed for callers working on `H`.
pub fn h_moebius(u: &PlaneTree, t: &PlaneTree) -> i64 {
    plane_moebius(u, t)
}

/// `B(x)`: a new root above each tree of the combination.
pub fn add_root<C: Scalar>(x: &XElement<C>) -> XElement<C> {
    let mut out = XElement::zero(x.grade() + 1);
    for (t, c) in x.terms() {
        out.add_term(PlaneTree::new(vec![t.clone()]), c);
    }
    out
}
