use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::PlaneTree;

/// Non-plane rooted tree kept in canonical form (children sorted).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedTree {
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree { children: Vec::new() }
    }

    pub fn new(mut children: Vec<RootedTree>) -> Self {
        children.sort();
        RootedTree { children }
    }

    pub fn from_plane(t: &PlaneTree) -> Self {
        RootedTree::new(t.children().iter().map(RootedTree::from_plane).collect())
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    /// Order of the automorphism group.
    pub fn aut_order(&self) -> BigInt {
        let mut total = BigInt::one();
        let mut run = 0u32;
        for (i, c) in self.children.iter().enumerate() {
            total *= c.aut_order();
            run = if i > 0 && self.children[i - 1] == *c { run + 1 } else { 1 };
            total *= run;
        }
        total
    }

    /// Distinct plane trees forgetting to this tree, sorted.
    pub fn plane_representatives(&self) -> Vec<PlaneTree> {
        let child_reps: Vec<Vec<PlaneTree>> = self.children.iter().map(|c| c.plane_representatives()).collect();
        let mut out = BTreeSet::new();
        let mut order: Vec<usize> = (0..self.children.len()).collect();
        loop {
            let mut partial: Vec<Vec<PlaneTree>> = vec![Vec::new()];
            for &i in &order {
                let mut next = Vec::new();
                for p in &partial {
                    for r in &child_reps[i] {
                        let mut q = p.clone();
                        q.push(r.clone());
                        next.push(q);
                    }
                }
                partial = next;
            }
            out.extend(partial.into_iter().map(PlaneTree::new));
            if !next_permutation(&mut order) {
                break;
            }
        }
        out.into_iter().collect()
    }

    pub fn all(n: usize) -> Vec<RootedTree> {
        let set: BTreeSet<RootedTree> = PlaneTree::all(n).iter().map(RootedTree::from_plane).collect();
        set.into_iter().collect()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
