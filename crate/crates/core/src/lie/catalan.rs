use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::bracket::{is_lie, pbw_basis, PbwElement};
use super::combination::{CatalanElement, XElement};
use crate::error::{Error, Result};
use crate::fqsym::{nesw_bracket, FqsymElement};
use crate::linalg::{row_from_entries, Membership, SparseRow, SubspaceBasis};
use crate::perm::Permutation;
use crate::scalar::{q, Scalar, Q};
use crate::trees::{BinaryTree, PlaneTree, TamariLattice};

/// `c_t` on the `G` basis, built as `c_{l∧r} = c_l ↗ c_r − c_r ↙ c_l`
/// from `c_∅ = G_1`.
pub fn c_expansion(t: &BinaryTree) -> Arc<FqsymElement<Q>> {
    type Cache = Mutex<HashMap<BinaryTree, Arc<FqsymElement<Q>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(x) = cache.lock().expect("expansion cache poisoned").get(t) {
        return x.clone();
    }
    let x = match t.children() {
        None => FqsymElement::basis(Permutation::identity(1)),
        Some((l, r)) => nesw_bracket(&c_expansion(l), &c_expansion(r)).expect("operands have positive grade"),
    };
    let x = Arc::new(x);
    cache.lock().expect("expansion cache poisoned").insert(t.clone(), x.clone());
    x
}

impl<C: Scalar> CatalanElement<C> {
    /// Image in `FQSym`.
    pub fn expansion(&self) -> FqsymElement<C> {
        let mut out = FqsymElement::zero(self.grade());
        for (t, c) in self.terms() {
            for (sigma, d) in c_expansion(t).terms() {
                out.add_term(sigma.clone(), &c.mul_ref(&C::from_q(d.clone())));
            }
        }
        out
    }
}

impl<C: Scalar> XElement<C> {
    pub fn expansion(&self) -> FqsymElement<C> {
        c_from_x(self).expansion()
    }
}

/// Echelon form of the `c_t` of one grade, restricted to words starting
/// with `1`. That restriction is injective on `Lie(n)`.
struct CatalanSolver {
    trees: Arc<Vec<BinaryTree>>,
    basis: SubspaceBasis,
}

fn first_letter_row<'a>(terms: impl Iterator<Item = (&'a Permutation, Q)>) -> SparseRow {
    row_from_entries(terms.filter(|(s, _)| s.letters()[0] == 1).map(|(s, c)| (s.rank() as u32, c)))
}

fn solver(n: usize) -> Arc<CatalanSolver> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CatalanSolver>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("solver cache poisoned").get(&n) {
        return s.clone();
    }
    let trees = BinaryTree::all(n - 1);
    let mut basis = SubspaceBasis::new(true);
    for t in trees.iter() {
        let row = first_letter_row(c_expansion(t).terms().map(|(s, c)| (s, c.clone())));
        assert!(basis.insert(row).is_none(), "the c_t are linearly independent");
    }
    let s = Arc::new(CatalanSolver { trees, basis });
    cache.lock().expect("solver cache poisoned").insert(n, s.clone());
    s
}

fn outside_span<C: Scalar>(x: &FqsymElement<C>, witness: &Permutation) -> Error {
    let n = x.grade();
    if is_lie(x) {
        Error::NotInSpan(format!("element of Lie({n}) outside the Catalan algebra; residue at G({witness})"))
    } else {
        Error::NotInSpan(format!("element is not in Lie({n}); residue at G({witness})"))
    }
}

/// Coordinates of `x` on the rows inserted in `basis`, solved one rational
/// coordinate of the coefficient ring at a time, then checked by `rebuild`.
fn solve_restricted<C: Scalar>(
    x: &FqsymElement<C>,
    basis: &SubspaceBasis,
    rebuild: impl Fn(&[(u32, C)]) -> FqsymElement<C>,
) -> Result<Vec<(u32, C)>> {
    let n = x.grade();
    let mut like = C::zero();
    let mut slices: HashMap<u64, Vec<(&Permutation, Q)>> = HashMap::new();
    for (sigma, c) in x.terms() {
        like.add_assign_ref(&c.mul_ref(&C::zero()));
        for (key, value) in c.parts() {
            slices.entry(key).or_default().push((sigma, value));
        }
    }
    let mut coords: HashMap<u32, C> = HashMap::new();
    for (key, entries) in slices {
        let row = first_letter_row(entries.into_iter());
        match basis.membership(&row) {
            Membership::InSpan(found) => {
                for (i, q) in found {
                    coords.entry(i).or_insert_with(C::zero).add_assign_ref(&C::from_part(key, q, &like));
                }
            }
            Membership::NotInSpan(residue) => {
                return Err(outside_span(x, &Permutation::unrank(n, residue[0].0 as usize)));
            }
        }
    }
    let mut out: Vec<(u32, C)> = coords.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|e| e.0);
    let back = rebuild(&out);
    if &back != x {
        let diff = x - &back;
        let witness = diff.sorted_terms()[0].0.clone();
        return Err(outside_span(x, &witness));
    }
    Ok(out)
}

/// Coordinates of `x` on the `c_t`.
pub fn express_in_c<C: Scalar>(x: &FqsymElement<C>) -> Result<CatalanElement<C>> {
    let n = x.grade();
    if n == 0 {
        return Err(Error::InvalidArgument("grade 0 has no Catalan component".into()));
    }
    if x.is_zero() {
        return Ok(CatalanElement::zero(n));
    }
    let s = solver(n);
    let build = |coords: &[(u32, C)]| {
        let mut out = CatalanElement::zero(n);
        for (i, c) in coords {
            out.add_term(s.trees[*i as usize].clone(), c);
        }
        out
    };
    let coords = solve_restricted(x, &s.basis, |c| build(c).expansion())?;
    Ok(build(&coords))
}

struct PbwSolver {
    elements: Vec<PbwElement>,
    expansions: Vec<FqsymElement<Q>>,
    basis: SubspaceBasis,
}

fn pbw_solver(n: usize) -> Arc<PbwSolver> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PbwSolver>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("solver cache poisoned").get(&n) {
        return s.clone();
    }
    let elements = pbw_basis(n);
    let expansions: Vec<FqsymElement<Q>> = elements.iter().map(PbwElement::expand).collect();
    let mut basis = SubspaceBasis::new(true);
    for e in &expansions {
        let row = first_letter_row(e.terms().map(|(s, c)| (s, c.clone())));
        assert!(basis.insert(row).is_none(), "the PBW elements are linearly independent");
    }
    let s = Arc::new(PbwSolver { elements, expansions, basis });
    cache.lock().expect("solver cache poisoned").insert(n, s.clone());
    s
}

/// Coordinates of `x` on the PBW basis of `Lie(n)`, in basis order.
pub fn express_in_pbw<C: Scalar>(x: &FqsymElement<C>) -> Result<Vec<(PbwElement, C)>> {
    let n = x.grade();
    if n == 0 {
        return Err(Error::InvalidArgument("grade 0 has no Lie component".into()));
    }
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let s = pbw_solver(n);
    let rebuild = |coords: &[(u32, C)]| {
        let mut out = FqsymElement::zero(n);
        for (i, c) in coords {
            for (sigma, d) in s.expansions[*i as usize].terms() {
                out.add_term(sigma.clone(), &c.mul_ref(&C::from_q(d.clone())));
            }
        }
        out
    };
    let coords = solve_restricted(x, &s.basis, rebuild)?;
    Ok(coords.into_iter().map(|(i, c)| (s.elements[i as usize].clone(), c)).collect())
}

/// Same element on the `X` basis: `c_t = Σ_{u ≤ t} x_u`.
pub fn x_from_c<C: Scalar>(e: &CatalanElement<C>) -> XElement<C> {
    let n = e.grade();
    let mut out = XElement::zero(n);
    if e.is_zero() {
        return out;
    }
    let lattice = TamariLattice::of_size(n - 1);
    for (t, c) in e.terms() {
        let top = lattice.index_of(t).expect("tree of the lattice size");
        for u in lattice.lower_set(top) {
            out.add_term(PlaneTree::from_binary(&lattice.trees()[u]), c);
        }
    }
    out
}

/// Same element on the `c` basis: `x_t = Σ_{u ≤ t} μ(u, t) c_u`.
pub fn c_from_x<C: Scalar>(e: &XElement<C>) -> CatalanElement<C> {
    let n = e.grade();
    let mut out = CatalanElement::zero(n);
    if e.is_zero() {
        return out;
    }
    let lattice = TamariLattice::of_size(n - 1);
    for (t, c) in e.terms() {
        let top = lattice.index_of(&t.knuth_rotation()).expect("tree of the lattice size");
        for (&u, &mu) in lattice.moebius_to(top).iter() {
            out.add_term(lattice.trees()[u].clone(), &c.mul_ref(&C::from_i64(mu)));
        }
    }
    out
}

fn wedge_sum(x: &CatalanElement<Q>, y: &CatalanElement<Q>) -> CatalanElement<Q> {
    let mut out = CatalanElement::zero(x.grade() + y.grade());
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            out.add_term(BinaryTree::wedge(s, t), &(a * b));
        }
    }
    out
}

/// `c_{t_1} ▷ c_{t_2}` from the recursion on the right operand:
/// `t ▷ ∅ = t∧∅` and
/// `t_1 ▷ (t_2∧t_3) = t_1∧(t_2∧t_3) + (t_1▷t_2)∧t_3 + t_2∧(t_1▷t_3)
///  − (t_1∧t_2)∧t_3 − (t_2∧t_1)∧t_3`.
pub fn prelie_c_basis(t1: &BinaryTree, t2: &BinaryTree) -> CatalanElement<Q> {
    type Cache = Mutex<HashMap<(BinaryTree, BinaryTree), CatalanElement<Q>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (t1.clone(), t2.clone());
    if let Some(x) = cache.lock().expect("preLie cache poisoned").get(&key) {
        return x.clone();
    }
    let one = q(1);
    let out = match t2.children() {
        None => CatalanElement::basis(BinaryTree::wedge(t1, t2)),
        Some((l, r)) => {
            let mut out = CatalanElement::basis(BinaryTree::wedge(t1, t2));
            out.add_scaled(&wedge_sum(&prelie_c_basis(t1, l), &CatalanElement::basis(r.clone())), &one);
            out.add_scaled(&wedge_sum(&CatalanElement::basis(l.clone()), &prelie_c_basis(t1, r)), &one);
            out.add_term(BinaryTree::wedge(&BinaryTree::wedge(t1, l), r), &-one.clone());
            out.add_term(BinaryTree::wedge(&BinaryTree::wedge(l, t1), r), &-one);
            out
        }
    };
    cache.lock().expect("preLie cache poisoned").insert(key, out.clone());
    out
}

/// Bilinear extension of [`prelie_c_basis`].
pub fn prelie_c<C: Scalar>(x: &CatalanElement<C>, y: &CatalanElement<C>) -> CatalanElement<C> {
    let mut out = CatalanElement::zero(x.grade() + y.grade());
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            let ab = a.mul_ref(b);
            for (u, q) in prelie_c_basis(s, t).terms() {
                out.add_term(u.clone(), &ab.mul_ref(&C::from_q(q.clone())));
            }
        }
    }
    out
}

/// Every tree obtained by grafting `t1` at one insertion slot of one vertex
/// of `t2` (a vertex with `k` children has `k + 1` slots).
pub fn graftings(t1: &PlaneTree, t2: &PlaneTree) -> Vec<PlaneTree> {
    let kids = t2.children();
    let mut out = Vec::new();
    for slot in 0..=kids.len() {
        let mut k = kids.to_vec();
        k.insert(slot, t1.clone());
        out.push(PlaneTree::new(k));
    }
    for (i, c) in kids.iter().enumerate() {
        for g in graftings(t1, c) {
            let mut k = kids.to_vec();
            k[i] = g;
            out.push(PlaneTree::new(k));
        }
    }
    out
}

/// `X_{T_1} ▷ X_{T_2} = Σ_{T ∈ G(T_1, T_2)} X_T`.
pub fn prelie_x_basis(t1: &PlaneTree, t2: &PlaneTree) -> XElement<Q> {
    let mut out = XElement::zero(t1.size() + t2.size());
    let one = q(1);
    for t in graftings(t1, t2) {
        out.add_term(t, &one);
    }
    out
}

pub fn prelie_x<C: Scalar>(x: &XElement<C>, y: &XElement<C>) -> XElement<C> {
    let mut out = XElement::zero(x.grade() + y.grade());
    for (s, a) in x.terms() {
        for (t, b) in y.terms() {
            let ab = a.mul_ref(b);
            for g in graftings(s, t) {
                out.add_term(g, &ab);
            }
        }
    }
    out
}

/// Graftings of `args`, in this order along the contour of `t`: the
/// corners of a vertex interleave with the subtrees of its children.
fn ordered_graftings(args: &[PlaneTree], t: &PlaneTree) -> Vec<PlaneTree> {
    // Each item is either a corner (None) or a child subtree.
    let mut items: Vec<Option<&PlaneTree>> = vec![None];
    for c in t.children() {
        items.push(Some(c));
        items.push(None);
    }
    let mut out = Vec::new();
    distribute(&items, args, Vec::new(), &mut out);
    out
}

fn distribute(items: &[Option<&PlaneTree>], args: &[PlaneTree], acc: Vec<PlaneTree>, out: &mut Vec<PlaneTree>) {
    let Some((first, rest)) = items.split_first() else {
        if args.is_empty() {
            out.push(PlaneTree::new(acc));
        }
        return;
    };
    let counts: Vec<usize> = if rest.is_empty() { vec![args.len()] } else { (0..=args.len()).collect() };
    for m in counts {
        let (now, later) = args.split_at(m);
        match first {
            None => {
                let mut acc2 = acc.clone();
                acc2.extend(now.iter().cloned());
                distribute(rest, later, acc2, out);
            }
            Some(child) => {
                let choices = if now.is_empty() { vec![(*child).clone()] } else { ordered_graftings(now, child) };
                for c in choices {
                    let mut acc2 = acc.clone();
                    acc2.push(c);
                    distribute(rest, later, acc2, out);
                }
            }
        }
    }
}

/// Brace `⟨T_1 ⋯ T_k; T⟩`: graftings of the `T_i` on the vertices of `T`
/// keeping their left-to-right order.
pub fn brace(args: &[PlaneTree], t: &PlaneTree) -> XElement<Q> {
    let size = t.size() + args.iter().map(PlaneTree::size).sum::<usize>();
    let mut out = XElement::zero(size);
    let one = q(1);
    for g in ordered_graftings(args, t) {
        out.add_term(g, &one);
    }
    out
}

/// `{T_1 ⋯ T_r; T} = Σ_{σ ∈ S_r} ⟨T_{σ(1)} ⋯ T_{σ(r)}; T⟩`.
pub fn symmetrized_brace(args: &[PlaneTree], t: &PlaneTree) -> XElement<Q> {
    let size = t.size() + args.iter().map(PlaneTree::size).sum::<usize>();
    let mut out = XElement::zero(size);
    let one = q(1);
    for sigma in Permutation::all(args.len()) {
        let ordered: Vec<PlaneTree> = sigma.letters().iter().map(|&i| args[i as usize - 1].clone()).collect();
        out.add_scaled(&brace(&ordered, t), &one);
    }
    out
}

/// Multilinear extension of [`symmetrized_brace`].
pub fn symmetrized_brace_of<C: Scalar>(args: &[XElement<C>], base: &XElement<C>) -> XElement<C> {
    let size = base.grade() + args.iter().map(XElement::grade).sum::<usize>();
    let mut out = XElement::zero(size);
    let mut picks: Vec<(Vec<PlaneTree>, C)> = vec![(Vec::new(), C::one())];
    for a in args {
        let mut next = Vec::new();
        for (trees, c) in &picks {
            for (t, d) in a.terms() {
                let mut tt = trees.clone();
                tt.push(t.clone());
                next.push((tt, c.mul_ref(d)));
            }
        }
        picks = next;
    }
    for (trees, c) in picks {
        for (t, d) in base.terms() {
            let cd = c.mul_ref(d);
            for (g, q) in symmetrized_brace(&trees, t).terms() {
                out.add_term(g.clone(), &cd.mul_ref(&C::from_q(q.clone())));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym::{lie_bracket, prelie};
    use crate::idempotents::{catalan_idempotent, dynkin_psi};
    use crate::lie::bracket::admissible_labellings;
    use crate::scalar::Poly2;

    fn bt(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    fn pt(s: &str) -> PlaneTree {
        PlaneTree::parse(s).unwrap()
    }

    fn c(s: &str) -> CatalanElement<Q> {
        CatalanElement::basis(bt(s))
    }

    fn g(s: &str) -> FqsymElement {
        FqsymElement::basis(Permutation::parse(s).unwrap())
    }

    #[test]
    fn expansions_match_labellings() {
        assert_eq!(*c_expansion(&BinaryTree::Empty), g("1"));
        assert_eq!(*c_expansion(&bt("o")), &g("12") - &g("21"));
        for n in 1..=6 {
            assert_eq!(*c_expansion(&BinaryTree::left_comb(n)), dynkin_psi::<Q>(n + 1));
            for t in BinaryTree::all(n).iter() {
                let mut sum = FqsymElement::zero(n + 1);
                for e in admissible_labellings(t) {
                    sum = &sum + &e.expand();
                }
                assert_eq!(*c_expansion(t), sum, "{t}");
            }
        }
    }

    #[test]
    fn pbw_coordinates() {
        for n in 2..=5 {
            let coords = express_in_pbw(&catalan_idempotent(n).unwrap()).unwrap();
            assert_eq!(coords.len(), (1..n).product::<usize>());
            for (e, c) in coords {
                let (l, r) = e.shape().edge_counts();
                assert_eq!(c, Poly2::monomial(r as u32, l as u32, q(1)), "{e}");
            }
        }
        let psi = express_in_pbw(&dynkin_psi::<Q>(3)).unwrap();
        assert_eq!(psi.len(), 1);
        assert_eq!(psi[0].0.to_string(), "[[1,2],3]");
        assert!(express_in_pbw(&g("12")).is_err());
    }

    #[test]
    fn express_examples() {
        let d3 = catalan_idempotent(3).unwrap();
        let got = express_in_c(&d3).unwrap();
        let mut expected = CatalanElement::<Poly2>::zero(3);
        expected.add_term(bt("(o _)"), &Poly2::b());
        expected.add_term(bt("(_ o)"), &Poly2::a());
        assert_eq!(got, expected);
        for n in 2..=6 {
            let got = express_in_c(&dynkin_psi::<Q>(n)).unwrap();
            assert_eq!(got, CatalanElement::basis(BinaryTree::left_comb(n - 1)));
        }
        let err = express_in_c(&(&g("12") + &g("21"))).unwrap_err();
        assert!(err.to_string().contains("not in Lie"), "{err}");
        let lie_only = crate::lie::PbwElement::parse("[[1,2],[3,4]]").unwrap().expand::<Q>();
        let err = express_in_c(&lie_only).unwrap_err();
        assert!(err.to_string().contains("outside the Catalan"), "{err}");
    }

    #[test]
    fn catalan_idempotent_on_c_basis() {
        for n in 2..=5 {
            let got = express_in_c(&catalan_idempotent(n).unwrap()).unwrap();
            for t in BinaryTree::all(n - 1).iter() {
                let (l, r) = t.edge_counts();
                assert_eq!(got.coeff(t), Poly2::monomial(r as u32, l as u32, q(1)), "{t}");
            }
        }
    }

    #[test]
    fn x_and_c_size_three() {
        let x = |s: &str| x_from_c(&c(s));
        let cx = |s: &str| c_from_x(&XElement::basis(PlaneTree::from_binary(&bt(s))));
        assert_eq!(cx("((o _) _)"), c("((o _) _)"));
        assert_eq!(cx("((_ o) _)"), &c("((_ o) _)") - &c("((o _) _)"));
        assert_eq!(cx("(_ (o _))"), &c("(_ (o _))") - &c("((_ o) _)"));
        assert_eq!(cx("(o o)"), &c("(o o)") - &c("((o _) _)"));
        let top = &(&(&c("(_ (_ o))") - &c("(_ (o _))")) - &c("(o o)")) + &c("((o _) _)");
        assert_eq!(cx("(_ (_ o))"), top);
        for n in 1..=6 {
            for t in BinaryTree::all(n).iter() {
                let e = CatalanElement::<Q>::basis(t.clone());
                assert_eq!(c_from_x(&x_from_c(&e)), e);
            }
        }
        assert_eq!(x("((o _) _)").len(), 1);
    }

    #[test]
    fn prelie_recursion_matches_fqsym() {
        let e = BinaryTree::Empty;
        let got = prelie_c_basis(&e, &bt("o"));
        assert_eq!(got, &c("(_ o)").scale(&q(2)) - &c("(o _)"));
        for total in 2..=5 {
            for k in 1..total {
                for s in BinaryTree::all(k - 1).iter() {
                    for t in BinaryTree::all(total - k - 1).iter() {
                        let direct = prelie(&c_expansion(s), &c_expansion(t)).unwrap();
                        assert_eq!(prelie_c_basis(s, t).expansion(), direct, "{s} ▷ {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn dynkin_growth() {
        let mut x = c_expansion(&BinaryTree::Empty).as_ref().clone();
        let g1 = x.clone();
        for n in 2..=6 {
            x = prelie(&x, &g1).unwrap();
            assert_eq!(x, dynkin_psi::<Q>(n));
        }
    }

    #[test]
    fn grafting_rule_matches_recursion() {
        let dot = PlaneTree::leaf();
        assert_eq!(prelie_x_basis(&dot, &dot), XElement::basis(PlaneTree::chain(2)));
        let chain2 = PlaneTree::chain(2);
        let p = prelie_x_basis(&chain2, &chain2);
        assert_eq!(p.len(), 3);
        assert!(p.coeff(&pt("[[[[]]]]")) == q(1) && p.coeff(&pt("[[[]],[]]")) == q(1));
        for a in PlaneTree::all(3) {
            for b in PlaneTree::all(3) {
                let p = prelie_x_basis(&a, &b);
                assert_eq!(p.len(), 5);
                assert!(p.terms().all(|(_, v)| *v == q(1)));
            }
        }
        for total in 2..=5 {
            for k in 1..total {
                for a in PlaneTree::all(k) {
                    for b in PlaneTree::all(total - k) {
                        let slots: usize = b.flatten().children.iter().map(|c| c.len() + 1).sum();
                        assert_eq!(graftings(&a, &b).len(), slots);
                        let via_c = prelie_c(&c_from_x(&XElement::<Q>::basis(a.clone())), &c_from_x(&XElement::basis(b.clone())));
                        assert_eq!(x_from_c(&via_c), prelie_x_basis(&a, &b), "{a} ▷ {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn braces() {
        let dot = PlaneTree::leaf();
        assert_eq!(brace(std::slice::from_ref(&dot), &dot), XElement::basis(PlaneTree::chain(2)));
        let two = symmetrized_brace(&[dot.clone(), dot.clone()], &dot);
        assert_eq!(two, XElement::basis(PlaneTree::corolla(3)).scale(&q(2)));
        for a in PlaneTree::all(2) {
            for b in PlaneTree::all(3) {
                let t = PlaneTree::chain(2);
                assert_eq!(brace(std::slice::from_ref(&a), &t), prelie_x_basis(&a, &t));
                // {a; {b; t}} = {a b; t} + {{a; b}; t}
                let lhs = prelie_x(&XElement::basis(a.clone()), &prelie_x_basis(&b, &t));
                let mut rhs = symmetrized_brace(&[a.clone(), b.clone()], &t);
                rhs.add_scaled(&prelie_x(&prelie_x_basis(&a, &b), &XElement::basis(t.clone())), &q(1));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn convolution_bracket_closes() {
        for total in 2..=5 {
            for k in 1..total {
                for s in BinaryTree::all(k - 1).iter() {
                    for t in BinaryTree::all(total - k - 1).iter() {
                        let br = lie_bracket(&c_expansion(s), &c_expansion(t));
                        assert!(express_in_c(&br).is_ok(), "[{s}, {t}]");
                    }
                }
            }
        }
    }
}
