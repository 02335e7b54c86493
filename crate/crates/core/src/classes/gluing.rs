//! Products of class sums computed on the bicolored encodings, with the
//! direct computations they are checked against.

use std::collections::{BTreeMap, BTreeSet};

use super::bicolored::{encode_white_rooted, Bicolored, Color, FreeBicolored};
use super::moves::{tree_classes, ClassKind, TreeClass};
use crate::error::{Error, Result};
use crate::lie::{prelie_c, CatalanElement};
use crate::scalar::Q;

/// Combination of classes keyed by their encodings.
pub type ClassCombination = BTreeMap<Bicolored, i64>;

/// Distinct white-rooted encodings of the members, black children sorted.
pub fn white_rooted_forms(class: &TreeClass) -> BTreeSet<Bicolored> {
    class.members.iter().map(|t| encode_white_rooted(t).sort_black()).collect()
}

fn with_child_at(t: &Bicolored, path: &[usize], pos: usize, child: &Bicolored) -> Bicolored {
    let mut out = t.clone();
    let mut cur = &mut out;
    for &i in path {
        cur = &mut cur.children[i];
    }
    cur.children.insert(pos, child.clone());
    out
}

fn vertex_paths(t: &Bicolored) -> Vec<(Vec<usize>, Color, usize)> {
    fn walk(t: &Bicolored, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Color, usize)>) {
        out.push((path.clone(), t.color, t.children.len()));
        for (i, c) in t.children.iter().enumerate() {
            path.push(i);
            walk(c, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

/// Ways of cutting `z` below a vertex into an upper part equal to
/// `upper` and a lower part accepted by `lower`, signed by the colour of
/// the vertex the lower part hangs from (white `−1`, black `+1`).
fn signed_cuts(z: &Bicolored, upper: &Bicolored, lower: &dyn Fn(&Bicolored) -> bool) -> i64 {
    let mut total = 0;
    for (path, _, _) in vertex_paths(z) {
        let Some((&last, parent_path)) = path.split_last() else { continue };
        let mut parent = z;
        for &i in parent_path {
            parent = &parent.children[i];
        }
        let below = &parent.children[last];
        if !lower(below) {
            continue;
        }
        let mut rest = z.clone();
        let mut cur = &mut rest;
        for &i in parent_path {
            cur = &mut cur.children[i];
        }
        cur.children.remove(last);
        if rest.sort_black() == *upper {
            total += if parent.color == Color::White { -1 } else { 1 };
        }
    }
    total
}

/// `s_1 ▷ s_2` on black-rooted encodings: `s_1` glued below white
/// vertices of `s_2` with a minus sign, its white-rooted forms glued
/// below black vertices with a plus sign, each resulting tree counted by
/// its signed cuts into `s_2` above and `s_1` below.
pub fn prelie_l(s1: &TreeClass, s2: &TreeClass) -> ClassCombination {
    let b1 = &s1.encoding;
    let whites = white_rooted_forms(s1);
    let b2 = &s2.encoding;
    let mut candidates = BTreeSet::new();
    for (path, color, arity) in vertex_paths(b2) {
        match color {
            Color::White => {
                for pos in 0..=arity {
                    candidates.insert(with_child_at(b2, &path, pos, b1).sort_black());
                }
            }
            Color::Black => {
                for w in &whites {
                    candidates.insert(with_child_at(b2, &path, 0, w).sort_black());
                }
            }
        }
    }
    let lower = |t: &Bicolored| match t.color {
        Color::Black => t.sort_black() == *b1,
        Color::White => whites.contains(&t.sort_black()),
    };
    let mut out = ClassCombination::new();
    for z in candidates {
        let c = signed_cuts(&z, b2, &lower);
        if c != 0 {
            out.insert(z, c);
        }
    }
    out
}

fn is_class(t: &FreeBicolored, key: &Bicolored) -> bool {
    // The empty tree is a single vertex of either colour.
    if key.children.is_empty() {
        return t.len() == 1;
    }
    t.canonical() == *key
}

/// `[s_1, s_2]` on free encodings: each edge of a tree whose removal
/// leaves `s_1` and `s_2` contributes `−1` if the `s_2` endpoint is white
/// and `+1` if it is black.
pub fn lie_lr(s1: &TreeClass, s2: &TreeClass) -> ClassCombination {
    let reps = |c: &TreeClass| -> Vec<FreeBicolored> {
        let f = c.encoding.to_free();
        if f.len() == 1 {
            vec![f.clone(), c.encoding.swap_colors().to_free()]
        } else {
            vec![f]
        }
    };
    let mut candidates = BTreeSet::new();
    for f1 in reps(s1) {
        for f2 in reps(s2) {
            for u in 0..f1.len() {
                for v in 0..f2.len() {
                    if f1.colors[u] != f2.colors[v] {
                        candidates.insert(f2.join(v, &f1, u).canonical());
                    }
                }
            }
        }
    }
    let sign = |c: Color| if c == Color::White { -1 } else { 1 };
    let mut out = ClassCombination::new();
    for z in candidates {
        let g = z.to_free();
        let mut total = 0;
        for (p, q) in g.edges() {
            let (a, b) = g.split(p, q);
            if is_class(&a, &s1.encoding) && is_class(&b, &s2.encoding) {
                total += sign(g.colors[q]);
            }
            if is_class(&b, &s1.encoding) && is_class(&a, &s2.encoding) {
                total += sign(g.colors[p]);
            }
        }
        if total != 0 {
            out.insert(z, total);
        }
    }
    out
}

/// Coordinates of a combination of `c_t` on class sums, or an error if the
/// coefficients are not constant on classes.
pub fn group_by_class(x: &CatalanElement<Q>, kind: ClassKind) -> Result<BTreeMap<Bicolored, Q>> {
    let mut out = BTreeMap::new();
    if x.is_zero() {
        return Ok(out);
    }
    let size = x.grade() - 1;
    let classes = tree_classes(size, kind);
    for c in classes.iter() {
        let v = x.coeff(&c.members[0]);
        if let Some(t) = c.members.iter().find(|t| x.coeff(t) != v) {
            return Err(Error::NotInSpan(format!("coefficients differ inside the class of {}: {} at {t}", c.encoding, x.coeff(t))));
        }
        if v != Q::from_integer(0.into()) {
            out.insert(c.encoding.clone(), v);
        }
    }
    Ok(out)
}

/// `s_1 ▷ s_2` computed on class sums in the `c` basis.
pub fn prelie_l_direct(s1: &TreeClass, s2: &TreeClass) -> Result<BTreeMap<Bicolored, Q>> {
    group_by_class(&prelie_c(&s1.sum(), &s2.sum()), ClassKind::L)
}

/// `[s_1, s_2] = s_1 ▷ s_2 − s_2 ▷ s_1` computed on class sums.
pub fn lie_lr_direct(s1: &TreeClass, s2: &TreeClass) -> Result<BTreeMap<Bicolored, Q>> {
    let (x, y) = (s1.sum(), s2.sum());
    group_by_class(&(&prelie_c(&x, &y) - &prelie_c(&y, &x)), ClassKind::LR)
}

/// `x ⊢ y`: the coefficient of `z` counts the edges of `z` whose removal
/// leaves `x` on one side and `y` on the other, the edge directed from
/// the `x` endpoint, whose colour is `source`, to the `y` endpoint.
pub fn subgraph_product(x: &TreeClass, y: &TreeClass, total_size: usize, source: Color) -> ClassCombination {
    let mut out = ClassCombination::new();
    for z in tree_classes(total_size, ClassKind::LR).iter() {
        let g = z.encoding.to_free();
        let mut count = 0;
        for (p, q) in g.edges() {
            let (a, b) = g.split(p, q);
            if g.colors[p] == source && is_class(&a, &x.encoding) && is_class(&b, &y.encoding) {
                count += 1;
            }
            if g.colors[q] == source && is_class(&b, &x.encoding) && is_class(&a, &y.encoding) {
                count += 1;
            }
        }
        if count != 0 {
            out.insert(z.encoding.clone(), count);
        }
    }
    out
}

/// Outcome of comparing `[x, y]` with `x ⊢ y − y ⊢ x` on one pair, for
/// each choice of the source colour.
#[derive(Clone, Debug)]
pub struct BracketComparison {
    pub left: Bicolored,
    pub right: Bicolored,
    pub white_sources: bool,
    pub black_sources: bool,
}

/// Compares the LR bracket with the subgraph-count rule on every pair of
/// classes with `|x| + |y| + 1 ≤ max_size` nodes. Reported, not asserted.
pub fn connes_kreimer_report(max_size: usize) -> Vec<BracketComparison> {
    let mut out = Vec::new();
    for total in 1..=max_size {
        for a in 0..total {
            let b = total - 1 - a;
            for x in tree_classes(a, ClassKind::LR).iter() {
                for y in tree_classes(b, ClassKind::LR).iter() {
                    let bracket = lie_lr(x, y);
                    let agrees = |source| {
                        let mut rule = subgraph_product(x, y, total, source);
                        for (z, c) in subgraph_product(y, x, total, source) {
                            *rule.entry(z).or_insert(0) -= c;
                        }
                        rule.retain(|_, c| *c != 0);
                        rule == bracket
                    };
                    out.push(BracketComparison {
                        left: x.encoding.clone(),
                        right: y.encoding.clone(),
                        white_sources: agrees(Color::White),
                        black_sources: agrees(Color::Black),
                    });
                }
            }
        }
    }
    out
}

/// Checks both gluing rules against direct computation on all pairs with
/// `|s_1| + |s_2| + 1 ≤ max_size` nodes; returns the number of pairs.
pub fn check_gluing_rules(max_size: usize) -> Result<usize> {
    let to_q = |m: &ClassCombination| -> BTreeMap<Bicolored, Q> {
        m.iter().map(|(k, v)| (k.clone(), Q::from_integer((*v).into()))).collect()
    };
    let mut pairs = 0;
    for total in 1..=max_size {
        for a in 0..total {
            let b = total - 1 - a;
            for kind in [ClassKind::L, ClassKind::LR] {
                for s1 in tree_classes(a, kind).iter() {
                    for s2 in tree_classes(b, kind).iter() {
                        let (rule, direct) = match kind {
                            ClassKind::L => (prelie_l(s1, s2), prelie_l_direct(s1, s2)?),
                            ClassKind::LR => (lie_lr(s1, s2), lie_lr_direct(s1, s2)?),
                        };
                        if to_q(&rule) != direct {
                            return Err(Error::InvalidArgument(format!(
                                "{kind:?} rule disagrees on {} and {}",
                                s1.encoding, s2.encoding
                            )));
                        }
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::super::moves::find_class;
    use super::*;

    fn class(size: usize, kind: ClassKind, key: &str) -> TreeClass {
        let key = Bicolored::parse(key).unwrap();
        let key = match kind {
            ClassKind::L => key.sort_black(),
            ClassKind::LR => key.to_free().canonical(),
        };
        let i = find_class(size, kind, &key).expect("class exists");
        tree_classes(size, kind)[i].clone()
    }

    #[test]
    fn empty_and_single_node() {
        let empty = class(0, ClassKind::L, "B[]");
        let one = class(1, ClassKind::L, "B[W[]]");
        let got = prelie_l(&empty, &one);
        let want: ClassCombination =
            [(Bicolored::parse("B[W[],W[]]").unwrap(), 2), (Bicolored::parse("B[W[B[]]]").unwrap(), -1)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn rules_match_direct_computation() {
        check_gluing_rules(5).unwrap();
    }

    fn class_of(tree: &str) -> TreeClass {
        let t = crate::trees::BinaryTree::parse(tree).unwrap();
        let key = super::super::moves::class_key(&t, ClassKind::L);
        let i = find_class(t.size(), ClassKind::L, &key).unwrap();
        tree_classes(t.size(), ClassKind::L)[i].clone()
    }

    fn combination(terms: &[(i64, &str)]) -> ClassCombination {
        terms.iter().map(|(c, s)| (Bicolored::parse(s).unwrap().sort_black(), *c)).collect()
    }

    #[test]
    fn worked_products() {
        let s1 = class_of("(o _)");
        let s2 = class_of("(o (_ o))");
        let forward = combination(&[
            (-1, "B[W[B[]],W[],W[B[W[B[]]]]]"),
            (-1, "B[W[B[W[B[]]],B[]],W[],W[]]"),
            (-1, "B[W[B[],B[W[B[]]]],W[],W[]]"),
            (1, "B[W[B[]],W[],W[],W[B[],B[]]]"),
            (1, "B[W[B[W[B[],B[]]]],W[],W[]]"),
        ]);
        assert_eq!(prelie_l(&s1, &s2), forward);
        let backward = combination(&[
            (-1, "B[W[B[],B[W[B[]],W[],W[]]]]"),
            (-1, "B[W[B[W[B[]],W[],W[]],B[]]]"),
            (1, "B[W[B[W[B[],B[W[],W[]]]]]]"),
            (1, "B[W[B[]],W[B[],B[W[],W[]]]]"),
            (1, "B[W[B[]],W[B[W[B[]],W[]]]]"),
            (1, "B[W[B[W[B[W[B[]],W[]]]]]]"),
        ]);
        assert_eq!(prelie_l(&s2, &s1), backward);
        for (a, b) in [(&s1, &s2), (&s2, &s1)] {
            let direct = prelie_l_direct(a, b).unwrap();
            let rule: BTreeMap<Bicolored, Q> =
                prelie_l(a, b).into_iter().map(|(k, v)| (k, Q::from_integer(v.into()))).collect();
            assert_eq!(rule, direct);
        }
    }
}
