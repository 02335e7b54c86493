use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use super::bicolored::{encode_black_rooted, encode_free, Bicolored};
use crate::lie::CatalanElement;
use crate::scalar::Q;
use crate::trees::BinaryTree;

/// Which exchange moves generate the equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    /// Exchanges across right edges.
    L,
    /// Exchanges across left or right edges.
    LR,
}

/// `v(T_1, w(T_2, X)) ↦ v(T_2, w(T_1, X))` at every `v` that is the root
/// or a right child.
pub fn l_moves(t: &BinaryTree) -> Vec<BinaryTree> {
    fn walk(t: &BinaryTree, allowed: bool, out: &mut Vec<BinaryTree>, wrap: &dyn Fn(BinaryTree) -> BinaryTree) {
        let Some((l, r)) = t.children() else { return };
        if allowed {
            if let Some((t2, x)) = r.children() {
                out.push(wrap(BinaryTree::wedge(t2, &BinaryTree::wedge(l, x))));
            }
        }
        walk(l, false, out, &|s| wrap(BinaryTree::wedge(&s, r)));
        walk(r, true, out, &|s| wrap(BinaryTree::wedge(l, &s)));
    }
    let mut out = Vec::new();
    walk(t, true, &mut out, &|s| s);
    out
}

/// `v(w(Y, T_2), T_1) ↦ v(w(Y, T_1), T_2)` at every `v` that is the root
/// or a left child.
pub fn r_moves(t: &BinaryTree) -> Vec<BinaryTree> {
    fn walk(t: &BinaryTree, allowed: bool, out: &mut Vec<BinaryTree>, wrap: &dyn Fn(BinaryTree) -> BinaryTree) {
        let Some((l, r)) = t.children() else { return };
        if allowed {
            if let Some((y, t2)) = l.children() {
                out.push(wrap(BinaryTree::wedge(&BinaryTree::wedge(y, r), t2)));
            }
        }
        walk(l, true, out, &|s| wrap(BinaryTree::wedge(&s, r)));
        walk(r, false, out, &|s| wrap(BinaryTree::wedge(l, &s)));
    }
    let mut out = Vec::new();
    walk(t, true, &mut out, &|s| s);
    out
}

/// An equivalence class of binary trees with its bicolored encoding.
#[derive(Clone, Debug)]
pub struct TreeClass {
    pub kind: ClassKind,
    /// Members in text order.
    pub members: Vec<BinaryTree>,
    /// Black-rooted tree with sorted black children (L), or the canonical
    /// free tree (LR).
    pub encoding: Bicolored,
    pub right_edges: usize,
}

impl TreeClass {
    pub fn size(&self) -> usize {
        self.members[0].size()
    }

    /// `Σ c_t` over the members.
    pub fn sum(&self) -> CatalanElement<Q> {
        let mut out = CatalanElement::zero(self.size() + 1);
        for t in &self.members {
            out.add_term(t.clone(), &Q::from_integer(1.into()));
        }
        out
    }
}

/// Class key of a single tree.
pub fn class_key(t: &BinaryTree, kind: ClassKind) -> Bicolored {
    match kind {
        ClassKind::L => encode_black_rooted(t).sort_black(),
        ClassKind::LR => encode_free(t).canonical(),
    }
}

/// Closure of `t` under the moves of `kind`, in text order.
pub fn closure(t: &BinaryTree, kind: ClassKind) -> Vec<BinaryTree> {
    let mut seen: HashSet<BinaryTree> = HashSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(s) = queue.pop_front() {
        let mut next = l_moves(&s);
        if kind == ClassKind::LR {
            next.extend(r_moves(&s));
        }
        for u in next {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<BinaryTree> = seen.into_iter().collect();
    out.sort_by_cached_key(|u| u.to_string());
    out
}

/// The classes partitioning the binary trees with `size` nodes, sorted
/// by right-edge count and then by encoding.
pub fn tree_classes(size: usize, kind: ClassKind) -> Arc<Vec<TreeClass>> {
    type Cache = Mutex<HashMap<(usize, ClassKind), Arc<Vec<TreeClass>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("class cache poisoned").get(&(size, kind)) {
        return c.clone();
    }
    let mut seen: HashSet<BinaryTree> = HashSet::new();
    let mut classes = Vec::new();
    for t in BinaryTree::all(size).iter() {
        if seen.contains(t) {
            continue;
        }
        let members = closure(t, kind);
        seen.extend(members.iter().cloned());
        let encoding = class_key(&members[0], kind);
        let right_edges = members[0].edge_counts().1;
        classes.push(TreeClass { kind, members, encoding, right_edges });
    }
    classes.sort_by(|a, b| (a.right_edges, &a.encoding).cmp(&(b.right_edges, &b.encoding)));
    let classes = Arc::new(classes);
    cache.lock().expect("class cache poisoned").insert((size, kind), classes.clone());
    classes
}

/// Index of each tree's class in [`tree_classes`].
pub fn class_index(size: usize, kind: ClassKind) -> HashMap<BinaryTree, usize> {
    let mut out = HashMap::new();
    for (i, c) in tree_classes(size, kind).iter().enumerate() {
        for t in &c.members {
            out.insert(t.clone(), i);
        }
    }
    out
}

/// Class with a given encoding.
pub fn find_class(size: usize, kind: ClassKind, key: &Bicolored) -> Option<usize> {
    tree_classes(size, kind).iter().position(|c| &c.encoding == key)
}

/// Row `n` lists the number of classes of trees with `n − 1` nodes and
/// `k` right edges, `k = 0..n−2`; rows `n = 2..=max_n`.
pub fn class_table(kind: ClassKind, max_n: usize) -> Vec<(usize, Vec<usize>)> {
    (2..=max_n)
        .map(|n| {
            let mut row = vec![0; n - 1];
            for c in tree_classes(n - 1, kind).iter() {
                row[c.right_edges] += 1;
            }
            (n, row)
        })
        .collect()
}
