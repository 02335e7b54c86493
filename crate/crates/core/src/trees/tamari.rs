use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{BinaryTree, PlaneTree};

/// Tamari lattice on binary trees of a fixed size, covers being rotations
/// `((A,B),C) → (A,(B,C))`.
pub struct TamariLattice {
    size: usize,
    trees: Vec<BinaryTree>,
    index: HashMap<BinaryTree, usize>,
    covers: Vec<Vec<usize>>,
    up: Vec<Vec<u64>>,
    moebius_cache: Mutex<HashMap<usize, Arc<HashMap<usize, i64>>>>,
}

fn right_weight(t: &BinaryTree) -> usize {
    match t.children() {
        None => 0,
        Some((l, r)) => r.size() + right_weight(l) + right_weight(r),
    }
}

impl TamariLattice {
    pub fn new(size: usize) -> Self {
        let trees: Vec<BinaryTree> = BinaryTree::all(size).to_vec();
        let index: HashMap<BinaryTree, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let covers: Vec<Vec<usize>> = trees.iter().map(|t| t.rotations_up().iter().map(|u| index[u]).collect()).collect();
        // Rotations strictly raise the total right-subtree size.
        let mut order: Vec<usize> = (0..trees.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(right_weight(&trees[i])));
        let words = trees.len().div_ceil(64);
        let mut up = vec![vec![0u64; words]; trees.len()];
        for &v in &order {
            let mut set = vec![0u64; words];
            set[v / 64] |= 1 << (v % 64);
            for &c in &covers[v] {
                for (s, x) in set.iter_mut().zip(&up[c]) {
                    *s |= x;
                }
            }
            up[v] = set;
        }
        TamariLattice { size, trees, index, covers, up, moebius_cache: Mutex::new(HashMap::new()) }
    }

    /// Shared lattice for a size.
    pub fn of_size(size: usize) -> Arc<TamariLattice> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<TamariLattice>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(l) = cache.lock().expect("lattice cache poisoned").get(&size) {
            return l.clone();
        }
        let l = Arc::new(TamariLattice::new(size));
        cache.lock().expect("lattice cache poisoned").insert(size, l.clone());
        l
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn trees(&self) -> &[BinaryTree] {
        &self.trees
    }

    pub fn index_of(&self, t: &BinaryTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn covers_of(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn leq_idx(&self, u: usize, t: usize) -> bool {
        self.up[u][t / 64] >> (t % 64) & 1 == 1
    }

    pub fn leq(&self, u: &BinaryTree, t: &BinaryTree) -> bool {
        match (self.index_of(u), self.index_of(t)) {
            (Some(i), Some(j)) => self.leq_idx(i, j),
            _ => false,
        }
    }

    /// Indices of `{u : u ≤ t}`.
    pub fn lower_set(&self, t: usize) -> Vec<usize> {
        (0..self.trees.len()).filter(|&u| self.leq_idx(u, t)).collect()
    }

    /// `μ(u, t)` for every `u ≤ t`.
    pub fn moebius_to(&self, t: usize) -> Arc<HashMap<usize, i64>> {
        if let Some(m) = self.moebius_cache.lock().expect("moebius cache poisoned").get(&t) {
            return m.clone();
        }
        let mut lower = self.lower_set(t);
        lower.sort_by_key(|&i| std::cmp::Reverse(right_weight(&self.trees[i])));
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &v in &lower {
            let value = if v == t {
                1
            } else {
                -mu.iter().filter(|(w, _)| **w != v && self.leq_idx(v, **w)).map(|(_, m)| m).sum::<i64>()
            };
            mu.insert(v, value);
        }
        let mu = Arc::new(mu);
        self.moebius_cache.lock().expect("moebius cache poisoned").insert(t, mu.clone());
        mu
    }

    pub fn moebius(&self, u: &BinaryTree, t: &BinaryTree) -> i64 {
        match (self.index_of(u), self.index_of(t)) {
            (Some(i), Some(j)) => self.moebius_to(j).get(&i).copied().unwrap_or(0),
            _ => 0,
        }
    }
}

/// Plane-tree order transported through the Knuth rotation.
pub fn plane_leq(u: &PlaneTree, t: &PlaneTree) -> bool {
    u.size() == t.size() && TamariLattice::of_size(u.size() - 1).leq(&u.knuth_rotation(), &t.knuth_rotation())
}

pub fn plane_moebius(u: &PlaneTree, t: &PlaneTree) -> i64 {
    if u.size() != t.size() {
        return 0;
    }
    TamariLattice::of_size(u.size() - 1).moebius(&u.knuth_rotation(), &t.knuth_rotation())
}
