//! Dimensions of `Lie(n) ∩ PBT_n` and `Lie(n) ∩ Sym_n`, graded by the
//! number of right edges of the `c_t`, and the inclusions of these
//! intersections in the spans of class sums.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::bicolored::Bicolored;
use super::gluing::group_by_class;
use super::moves::{tree_classes, ClassKind};
use crate::error::{Error, Result};
use crate::fqsym::{descent_classes, shape_classes, FqsymElement, PbtConvention};
use crate::idempotents::solomon_phi;
use crate::lie::{c_expansion, dynkin_operator, express_in_c, CatalanElement};
use crate::linalg::{kernel, rank_mod_p, row_from_entries, SparseRow};
use crate::perm::Permutation;
use crate::scalar::{q, Q};
use crate::trees::BinaryTree;

/// The subalgebra intersected with `Lie(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// Planar binary trees, `P_T` spanned by shape classes.
    Pbt,
    /// Noncommutative symmetric functions, spanned by descent classes.
    Sym,
}

/// Class representative of each permutation rank, and the class sums.
struct Partition {
    rep: Vec<u32>,
    sums: Vec<FqsymElement<Q>>,
}

fn partition(n: usize, ambient: Ambient) -> Partition {
    let groups: Vec<Vec<Permutation>> = match ambient {
        Ambient::Pbt => shape_classes(n, PbtConvention::DecreasingTree).iter().map(|(_, m)| m.clone()).collect(),
        Ambient::Sym => descent_classes(n).iter().map(|(_, m)| m.clone()).collect(),
    };
    let total: usize = groups.iter().map(Vec::len).sum();
    let mut rep = vec![0u32; total];
    let mut sums = Vec::with_capacity(groups.len());
    for members in &groups {
        let r = members.iter().map(|s| s.rank()).min().expect("non-empty class") as u32;
        let mut sum = FqsymElement::zero(n);
        for s in members {
            rep[s.rank()] = r;
            sum.add_term(s.clone(), &q(1));
        }
        sums.push(sum);
    }
    Partition { rep, sums }
}

/// `x_σ − x_{rep(σ)}` at every non-representative `σ`; zero exactly when
/// `x` lies in the ambient subalgebra.
fn residue(x: &FqsymElement<Q>, p: &Partition) -> SparseRow {
    let mut by_rep: BTreeMap<u32, Q> = BTreeMap::new();
    let mut own: Vec<(u32, Q)> = Vec::new();
    for (s, c) in x.terms() {
        let i = s.rank() as u32;
        if p.rep[i as usize] == i {
            by_rep.insert(i, c.clone());
        } else {
            own.push((i, c.clone()));
        }
    }
    let mut entries = own;
    for (i, &r) in p.rep.iter().enumerate() {
        if r != i as u32 {
            if let Some(c) = by_rep.get(&r) {
                entries.push((i as u32, -c.clone()));
            }
        }
    }
    row_from_entries(entries)
}

fn c_combination(trees: &[BinaryTree], coords: &SparseRow) -> CatalanElement<Q> {
    let n = trees.first().map_or(1, |t| t.size() + 1);
    let mut out = CatalanElement::zero(n);
    for (i, c) in coords {
        out.add_term(trees[*i as usize].clone(), c);
    }
    out
}

/// Basis, as coordinates on `trees`, of the combinations of the `c_t`
/// lying in the ambient subalgebra.
fn c_kernel(trees: &[BinaryTree], p: &Partition) -> Vec<SparseRow> {
    let rows: Vec<SparseRow> = trees.iter().map(|t| residue(&c_expansion(t), p)).collect();
    kernel(&rows)
}

/// Upper bound for the dimension of `Lie(n) ∩ A_n`: the kernel of
/// `θ − n` on the class sums, with the rank taken modulo a large prime.
/// Computed independently of the `c` basis, whose combinations give the
/// matching lower bound.
pub fn lie_intersection_bound(n: usize, ambient: Ambient) -> usize {
    let p = partition(n, ambient);
    let scale = q(n as i64);
    let rows: Vec<SparseRow> = p
        .sums
        .iter()
        .map(|e| {
            let d = &dynkin_operator(e) - &e.scale(&scale);
            row_from_entries(d.terms().map(|(s, c)| (s.rank() as u32, c.clone())))
        })
        .collect();
    rows.len() - rank_mod_p(&rows)
}

/// One row of an intersection table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionRow {
    pub n: usize,
    /// Dimension of the intersection with the span of the `c_t` having
    /// `k` right edges, `k = 0..n−2`.
    pub graded: Vec<usize>,
    /// Dimension of the intersection with the span of all `c_t`.
    pub total: usize,
    /// Upper bound for `dim Lie(n) ∩ A_n` computed without the `c` basis.
    pub lie_bound: usize,
}

impl IntersectionRow {
    /// The graded pieces fill the intersection and the upper bound is met,
    /// so the `c_t` span all of `Lie(n) ∩ A_n`.
    pub fn is_consistent(&self) -> bool {
        self.graded.iter().sum::<usize>() == self.total && self.total == self.lie_bound
    }
}

pub fn intersection_row(n: usize, ambient: Ambient) -> IntersectionRow {
    assert!(n >= 2, "tables start at n = 2");
    let p = partition(n, ambient);
    let trees = BinaryTree::all(n - 1);
    let graded = (0..n - 1)
        .map(|k| {
            let piece: Vec<BinaryTree> = trees.iter().filter(|t| t.right_edges() == k).cloned().collect();
            c_kernel(&piece, &p).len()
        })
        .collect();
    IntersectionRow { n, graded, total: c_kernel(&trees, &p).len(), lie_bound: lie_intersection_bound(n, ambient) }
}

/// Rows `n = 2..=max_n` of the `a` (PBT) or `a′` (Sym) table.
pub fn intersection_table(ambient: Ambient, max_n: usize) -> Vec<IntersectionRow> {
    (2..=max_n).map(|n| intersection_row(n, ambient)).collect()
}

/// Outcome of checking that a basis of `Lie(n) ∩ A_n` has coordinates
/// constant on classes.
#[derive(Clone, Debug)]
pub struct SpanCheck {
    pub n: usize,
    pub kind: ClassKind,
    pub dimension: usize,
    pub contained: bool,
}

/// Whether `Lie(n) ∩ A_n` lies in the span of the class sums of `kind`.
/// Fails if the `c_t` do not span the whole intersection.
pub fn lie_in_class_span(n: usize, ambient: Ambient, kind: ClassKind) -> Result<SpanCheck> {
    let p = partition(n, ambient);
    let trees = BinaryTree::all(n - 1);
    let basis = c_kernel(&trees, &p);
    let bound = lie_intersection_bound(n, ambient);
    if basis.len() != bound {
        return Err(Error::NotInSpan(format!(
            "Lie({n}) ∩ {ambient:?} may have dimension up to {bound} but only {} is inside the c span",
            basis.len()
        )));
    }
    let contained = basis.iter().all(|v| group_by_class(&c_combination(&trees, v), kind).is_ok());
    Ok(SpanCheck { n, kind, dimension: basis.len(), contained })
}

/// Whether `Σ coeffs_i x_i` lies in the ambient subalgebra.
pub fn combination_in_ambient(xs: &[CatalanElement<Q>], coeffs: &[Q], ambient: Ambient) -> bool {
    let Some(first) = xs.first() else { return true };
    let mut sum = FqsymElement::zero(first.grade());
    for (x, c) in xs.iter().zip(coeffs) {
        sum.add_scaled(&x.expansion(), c);
    }
    residue(&sum, &partition(first.grade(), ambient)).is_empty()
}

/// Dimension of `span(xs) ∩ A_n`.
pub fn span_intersection_dim(xs: &[CatalanElement<Q>], ambient: Ambient) -> usize {
    let Some(first) = xs.first() else { return 0 };
    let p = partition(first.grade(), ambient);
    let rows: Vec<SparseRow> = xs.iter().map(|x| residue(&x.expansion(), &p)).collect();
    let k = kernel(&rows);
    k.len()
}

/// Coordinates of `φ_n` on the LR-classes, after checking that they are
/// constant on classes and equal on the two colourings of each free tree.
pub fn solomon_class_coordinates(n: usize) -> Result<BTreeMap<Bicolored, Q>> {
    let c = express_in_c(&solomon_phi(n))?;
    let coords = group_by_class(&c, ClassKind::LR)?;
    let zero = Q::zero();
    for class in tree_classes(n - 1, ClassKind::LR).iter() {
        let swapped = class.encoding.swap_colors().to_free().canonical();
        let here = coords.get(&class.encoding).unwrap_or(&zero);
        let there = coords.get(&swapped).unwrap_or(&zero);
        if here != there {
            return Err(Error::NotInSpan(format!(
                "coefficients {here} and {there} differ on the two colourings of {}",
                class.encoding
            )));
        }
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        let a: Vec<Vec<usize>> = intersection_table(Ambient::Pbt, 5).into_iter().map(|r| r.graded).collect();
        assert_eq!(a, vec![vec![1], vec![1, 1], vec![1, 2, 1], vec![1, 4, 3, 1]]);
        let a1: Vec<Vec<usize>> = intersection_table(Ambient::Sym, 5).into_iter().map(|r| r.graded).collect();
        assert_eq!(a1, vec![vec![1], vec![1, 1], vec![1, 1, 1], vec![1, 2, 2, 1]]);
        for amb in [Ambient::Pbt, Ambient::Sym] {
            assert!(intersection_table(amb, 5).iter().all(IntersectionRow::is_consistent));
        }
    }

    #[test]
    fn sym_intersection_in_lr_span() {
        for n in 2..=5 {
            let check = lie_in_class_span(n, Ambient::Sym, ClassKind::LR).unwrap();
            assert!(check.contained, "n = {n}");
        }
    }

    #[test]
    fn solomon_constant_on_lr_classes() {
        for n in 2..=5 {
            solomon_class_coordinates(n).unwrap();
        }
    }
}
