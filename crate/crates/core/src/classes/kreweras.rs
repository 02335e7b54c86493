//! Sector partitions of a complete binary tree and the Kreweras
//! complement between them.

use super::bicolored::{branch_partitions, encode_free, Color, FreeBicolored};
use crate::trees::BinaryTree;

/// Set partition of `{1, …, m}`: sorted blocks of sorted elements.
pub type SetPartition = Vec<Vec<usize>>;

fn normalize(mut p: SetPartition) -> SetPartition {
    for b in &mut p {
        b.sort_unstable();
    }
    p.sort();
    p
}

/// `K(π) = π⁻¹ ∘ (1 2 ⋯ m)`, each block of `π` read as an increasing cycle.
pub fn kreweras_complement(p: &[Vec<usize>], m: usize) -> SetPartition {
    let mut inverse = vec![0; m + 1];
    for block in p {
        let mut b = block.clone();
        b.sort_unstable();
        for (i, &x) in b.iter().enumerate() {
            inverse[b[(i + 1) % b.len()]] = x;
        }
    }
    let k: Vec<usize> = (0..=m).map(|i| if i == 0 { 0 } else { inverse[i % m + 1] }).collect();
    let mut seen = vec![false; m + 1];
    let mut out = Vec::new();
    for start in 1..=m {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = k[x];
        }
        out.push(cycle);
    }
    normalize(out)
}

fn all_partitions(m: usize) -> Vec<SetPartition> {
    fn grow(i: usize, m: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if i > m {
            out.push(normalize(blocks.clone()));
            return;
        }
        for j in 0..=blocks.len() {
            if j == blocks.len() {
                blocks.push(vec![i]);
            } else {
                blocks[j].push(i);
            }
            grow(i + 1, m, blocks, out);
            if blocks[j].len() == 1 {
                blocks.pop();
            } else {
                blocks[j].pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(1, m, &mut Vec::new(), &mut out);
    out
}

fn is_noncrossing(labels: &[usize]) -> bool {
    let n = labels.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The coarsest partition `σ` of `{1', …, m'}` such that `π ∪ σ` is
/// noncrossing on `1 < 1' < 2 < 2' < ⋯`, found by exhaustive search.
pub fn kreweras_by_search(p: &[Vec<usize>], m: usize) -> SetPartition {
    let mut labels = vec![0; 2 * m];
    for (j, block) in p.iter().enumerate() {
        for &x in block {
            labels[2 * (x - 1)] = j;
        }
    }
    let mut best: Option<SetPartition> = None;
    for s in all_partitions(m) {
        for (j, block) in s.iter().enumerate() {
            for &x in block {
                labels[2 * x - 1] = p.len() + j;
            }
        }
        if is_noncrossing(&labels) && best.as_ref().is_none_or(|b| s.len() < b.len()) {
            best = Some(s);
        }
    }
    best.expect("the discrete partition always works")
}

/// Sector partitions of a tree with `n − 1` internal nodes, sectors
/// labelled by the nodes in infix order.
#[derive(Clone, Debug)]
pub struct KrewerasEncoding {
    /// `π`: sectors separated by left branches.
    pub left: SetPartition,
    /// `π′`: sectors separated by right branches.
    pub right: SetPartition,
    /// White vertices for the blocks of `π`, black for `π′`, joined when
    /// the blocks meet.
    pub graph: FreeBicolored,
}

pub fn kreweras_encoding(t: &BinaryTree) -> KrewerasEncoding {
    let (left, right) = branch_partitions(t);
    let mut colors = vec![Color::White; left.len()];
    colors.extend(vec![Color::Black; right.len()]);
    let mut adjacency = vec![Vec::new(); colors.len()];
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            if a.iter().any(|x| b.contains(x)) {
                adjacency[i].push(left.len() + j);
                adjacency[left.len() + j].push(i);
            }
        }
    }
    KrewerasEncoding { left: normalize(left), right: normalize(right), graph: FreeBicolored { colors, adjacency } }
}

/// `K(π) = π′`, so `π` is the inverse complement of `π′`, and the graph
/// agrees with the free encoding.
pub fn kreweras_check(t: &BinaryTree) -> bool {
    let e = kreweras_encoding(t);
    let m = t.size();
    kreweras_complement(&e.left, m) == e.right && e.graph.canonical() == encode_free(t).canonical()
}
