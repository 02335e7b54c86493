use num_traits::ToPrimitive;

use super::combination::{PreLieElement, XElement};
use crate::error::Result;
use crate::fqsym::{half_product, FqsymElement, Side};
use crate::scalar::Scalar;
use crate::trees::RootedTree;

/// Trees obtained by grafting the root of `t1` on each vertex of `t2`.
pub fn rooted_graftings(t1: &RootedTree, t2: &RootedTree) -> Vec<RootedTree> {
    let kids = t2.children();
    let mut with_new = kids.to_vec();
    with_new.push(t1.clone());
    let mut out = vec![RootedTree::new(with_new)];
    for (i, c) in kids.iter().enumerate() {
        for g in rooted_graftings(t1, c) {
            let mut k = kids.to_vec();
            k[i] = g;
            out.push(RootedTree::new(k));
        }
    }
    out
}

/// `p_{τ_1} ▷ p_{τ_2} = Σ_{τ ∈ g(τ_1, τ_2)} p_τ`, extended bilinearly.
pub fn prelie_rooted<C: Scalar>(x: &PreLieElement<C>, y: &PreLieElement<C>) -> PreLieElement<C> {
    let mut out = PreLieElement::zero(x.grade() + y.grade());
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            let ab = a.mul_ref(b);
            for g in rooted_graftings(s, t) {
                out.add_term(g, &ab);
            }
        }
    }
    out
}

/// `ι(p_τ) = |Aut τ| Σ_{T̄ = τ} X_T`.
pub fn iota<C: Scalar>(x: &PreLieElement<C>) -> XElement<C> {
    let mut out = XElement::zero(x.grade());
    for (tau, c) in x.terms() {
        let aut = tau.aut_order().to_i64().expect("automorphism groups of small trees");
        let weight = c.mul_ref(&C::from_i64(aut));
        for t in tau.plane_representatives() {
            out.add_term(t, &weight);
        }
    }
    out
}

/// Brace induced by the dendriform products:
/// `⟨x_1 ⋯ x_n; y⟩ = Σ_i (−1)^{n−i} x_1 ≻ (⋯ (x_i ≻ y ≺ x_n) ≺ ⋯ ≺ x_{i+1})`.
pub fn dendriform_brace<C: Scalar>(args: &[FqsymElement<C>], y: &FqsymElement<C>) -> Result<FqsymElement<C>> {
    let n = args.len();
    let mut out = FqsymElement::zero(y.grade() + args.iter().map(FqsymElement::grade).sum::<usize>());
    for i in 0..=n {
        let mut core = y.clone();
        for x in args[i..].iter().rev() {
            core = half_product(Side::Left, &core, x)?;
        }
        for x in args[..i].iter().rev() {
            core = half_product(Side::Right, x, &core)?;
        }
        let sign = if (n - i) % 2 == 0 { C::one() } else { C::one().negate() };
        out.add_scaled(&core, &sign);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym::prelie;
    use crate::lie::bracket::is_lie;
    use crate::lie::catalan::{prelie_x, symmetrized_brace_of};
    use crate::perm::Permutation;
    use crate::scalar::{q, Q};
    use crate::trees::PlaneTree;

    fn rt(s: &str) -> RootedTree {
        RootedTree::from_plane(&PlaneTree::parse(s).unwrap())
    }

    #[test]
    fn iota_examples() {
        let chain = PreLieElement::<Q>::basis(rt("[[]]"));
        assert_eq!(iota(&chain), XElement::basis(PlaneTree::chain(2)));
        let corolla = PreLieElement::<Q>::basis(rt("[[],[]]"));
        assert_eq!(iota(&corolla), XElement::basis(PlaneTree::corolla(3)).scale(&q(2)));
    }

    #[test]
    fn iota_is_a_morphism() {
        for total in 2..=5 {
            for k in 1..total {
                for a in RootedTree::all(k) {
                    for b in RootedTree::all(total - k) {
                        let (pa, pb) = (PreLieElement::<Q>::basis(a.clone()), PreLieElement::basis(b.clone()));
                        assert_eq!(iota(&prelie_rooted(&pa, &pb)), prelie_x(&iota(&pa), &iota(&pb)), "{a} ▷ {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn root_attachment_through_braces() {
        let dot = XElement::<Q>::basis(PlaneTree::leaf());
        for n in 2..=5 {
            for tau in RootedTree::all(n) {
                let args: Vec<XElement<Q>> = tau.children().iter().map(|c| iota(&PreLieElement::basis(c.clone()))).collect();
                assert_eq!(iota(&PreLieElement::basis(tau.clone())), symmetrized_brace_of(&args, &dot), "{tau}");
            }
        }
    }

    #[test]
    fn dendriform_brace_leaves_lie() {
        let g1 = FqsymElement::<Q>::basis(Permutation::identity(1));
        let inner = dendriform_brace(std::slice::from_ref(&g1), &g1).unwrap();
        assert_eq!(inner, prelie(&g1, &g1).unwrap());
        let outer = dendriform_brace(&[inner, g1.clone()], &g1).unwrap();
        assert_eq!(outer.grade(), 4);
        assert!(!is_lie(&outer));
    }
}
