//! Small closed flows on plane trees, as integer vectors on the postfix
//! labelling, and the Tamari-interval polynomials `d_T(b)`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::One;

use crate::error::Result;
use crate::idempotents::catalan_idempotent;
use crate::lie::{express_in_c, x_from_c};
use crate::scalar::{q, Poly2};
use crate::trees::{FlatTree, PlaneTree};

/// Vertex values in postfix order, root last.
pub type FlowVector = Vec<i64>;

/// All small closed flows on `t`: values at least `−1` off the root, `0`
/// at the root, every subtree sum non-negative and the total zero.
pub fn enumerate_flows(t: &PlaneTree) -> Vec<FlowVector> {
    let flat = t.flatten();
    let depth: Vec<i64> = (0..flat.len()).map(|v| flat.depth(v) as i64).collect();
    let mut out = Vec::new();
    let mut values = vec![0i64; flat.len()];
    let mut sums = vec![0i64; flat.len()];
    search(&flat, &depth, 0, &mut values, &mut sums, &mut out);
    out
}

/// Postfix order lists each subtree as a block starting at its leftmost leaf.
fn subtree_start(flat: &FlatTree, v: usize) -> usize {
    flat.children[v].first().map_or(v, |&c| subtree_start(flat, c))
}

fn search(
    flat: &FlatTree,
    depth: &[i64],
    v: usize,
    values: &mut Vec<i64>,
    sums: &mut Vec<i64>,
    out: &mut Vec<FlowVector>,
) {
    if v == flat.len() {
        out.push(values.clone());
        return;
    }
    let below: i64 = flat.children[v].iter().map(|&c| sums[c]).sum();
    // The sum over the subtree of `v` is absorbed by its non-root ancestors.
    let (lo, hi) = if v == flat.root() { (0, 0) } else { (-1, depth[v] - 1 - below) };
    for x in lo..=hi {
        let s = below + x;
        if s < 0 || (v == flat.root() && s != 0) {
            continue;
        }
        values[v] = x;
        sums[v] = s;
        search(flat, depth, v + 1, values, sums, out);
    }
    values[v] = 0;
    sums[v] = 0;
}

/// Number of outputs (entries `−1`) of a flow.
pub fn flow_size(flow: &[i64]) -> usize {
    flow.iter().filter(|&&x| x == -1).count()
}

/// `d_T(b) = Σ_φ b^{size(φ)}` over the small closed flows on `t`.
pub fn d_poly_flows(t: &PlaneTree) -> Poly2 {
    let mut out = Poly2::default();
    for f in enumerate_flows(t) {
        out = out + Poly2::monomial(0, flow_size(&f) as u32, q(1));
    }
    out
}

/// Number of internal vertices other than the root.
pub fn k0(t: &PlaneTree) -> usize {
    t.internal_count().saturating_sub(1)
}

/// Outputs at every non-root internal vertex, each fed by the leftmost
/// leaf below it.
pub fn maximal_flow(t: &PlaneTree) -> FlowVector {
    let flat = t.flatten();
    let mut values = vec![0i64; flat.len()];
    for v in 0..flat.len() {
        if v != flat.root() && !flat.is_leaf(v) {
            values[v] = -1;
            values[subtree_start(&flat, v)] += 1;
        }
    }
    values
}

/// Trees above `t` in the Tamari order, `t` included.
pub fn tamari_upper_set(t: &PlaneTree) -> Vec<PlaneTree> {
    let mut seen: HashSet<PlaneTree> = HashSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(s) = queue.pop_front() {
        for u in s.tamari_covers() {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<PlaneTree> = seen.into_iter().collect();
    out.sort();
    out
}

/// `d_T(b) = Σ_{T' ≥ T} b^{k_0(T')}`.
pub fn d_poly_tamari(t: &PlaneTree) -> Poly2 {
    let mut out = Poly2::default();
    for u in tamari_upper_set(t) {
        out = out + Poly2::monomial(0, k0(&u) as u32, q(1));
    }
    out
}

/// Mismatches between the two descriptions of `d_T` and failures of
/// monotonicity (every flow vector of `T' ≥ T` is one of `T`), over
/// plane trees with `size` vertices.
pub fn flow_tamari_mismatches(size: usize) -> Vec<PlaneTree> {
    let mut bad = Vec::new();
    for t in PlaneTree::all(size) {
        let own: BTreeSet<FlowVector> = enumerate_flows(&t).into_iter().collect();
        let monotone =
            t.tamari_covers().iter().all(|u| enumerate_flows(u).iter().all(|f| own.contains(f)));
        if d_poly_flows(&t) != d_poly_tamari(&t) || !monotone {
            bad.push(t);
        }
    }
    bad
}

/// Distinct flow vectors over all plane trees with `size` vertices.
pub fn flow_vectors(size: usize) -> BTreeSet<FlowVector> {
    PlaneTree::all(size).iter().flat_map(enumerate_flows).collect()
}

/// Plane trees with `n` vertices whose coefficient of `X_T` in `D^n` at
/// `a = 1` differs from `d_T(b)`.
pub fn x_coefficient_mismatches(n: usize) -> Result<Vec<PlaneTree>> {
    let one_b = |p: &Poly2| p.substitute(&Poly2::one(), &Poly2::b());
    let c = express_in_c(&catalan_idempotent(n)?)?.map_coeffs(one_b);
    let x = x_from_c(&c);
    Ok(PlaneTree::all(n).into_iter().filter(|t| x.coeff(t) != d_poly_flows(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> PlaneTree {
        PlaneTree::parse(s).unwrap()
    }

    fn poly(s: &str) -> Poly2 {
        Poly2::parse(s).unwrap()
    }

    #[test]
    fn small_trees() {
        for n in 1..=6 {
            assert_eq!(enumerate_flows(&PlaneTree::corolla(n)), vec![vec![0; n]]);
        }
        assert_eq!(enumerate_flows(&PlaneTree::chain(3)), vec![vec![0, 0, 0], vec![1, -1, 0]]);
        assert_eq!(d_poly_flows(&PlaneTree::chain(3)), poly("1 + b"));
        assert_eq!(d_poly_flows(&PlaneTree::chain(4)), poly("1 + 3*b + b^2"));
        assert_eq!(d_poly_tamari(&PlaneTree::chain(4)), poly("1 + 3*b + b^2"));
        assert_eq!(k0(&PlaneTree::chain(6)), 4);
    }

    #[test]
    fn maximal_flows_of_the_twelve_vertex_pair() {
        let t = pt("[[],[[[[],[],[]]],[]],[[]],[]]");
        let u = pt("[[],[[[],[],[]],[],[]],[[]],[]]");
        assert!(t.tamari_covers().contains(&u));
        assert_eq!(maximal_flow(&t), vec![0, 3, 0, 0, -1, -1, 0, -1, 1, -1, 0, 0]);
        assert_eq!(maximal_flow(&u), vec![0, 2, 0, 0, -1, 0, 0, -1, 1, -1, 0, 0]);
        for s in [&t, &u] {
            let flows = enumerate_flows(s);
            assert_eq!(flows.iter().max(), Some(&maximal_flow(s)));
        }
    }

    #[test]
    fn size_four_vectors() {
        let all = flow_vectors(4);
        let want: BTreeSet<FlowVector> =
            [vec![0, 0, 0, 0], vec![1, -1, 0, 0], vec![1, 0, -1, 0], vec![2, -1, -1, 0], vec![0, 1, -1, 0]]
                .into_iter()
                .collect();
        assert_eq!(all, want);
        let chain: BTreeSet<FlowVector> = enumerate_flows(&PlaneTree::chain(4)).into_iter().collect();
        assert_eq!(chain, want);
    }

    #[test]
    fn flows_count_tamari_intervals() {
        for n in 1..=6 {
            assert!(flow_tamari_mismatches(n).is_empty(), "size {n}");
        }
    }

    #[test]
    fn x_coefficients_are_flow_polynomials() {
        for n in 1..=5 {
            assert_eq!(x_coefficient_mismatches(n).unwrap(), Vec::<PlaneTree>::new(), "n = {n}");
        }
    }
}
