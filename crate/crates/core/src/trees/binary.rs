use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// Incomplete binary tree; `Empty` is the tree with no node.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// The one-node tree `o`.
    pub fn leaf_node() -> Self {
        Self::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    pub fn wedge(left: &BinaryTree, right: &BinaryTree) -> Self {
        Self::node(left.clone(), right.clone())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// `(left edges, right edges)`.
    pub fn edge_counts(&self) -> (usize, usize) {
        match self {
            BinaryTree::Empty => (0, 0),
            BinaryTree::Node(l, r) => {
                let (ll, lr) = l.edge_counts();
                let (rl, rr) = r.edge_counts();
                (ll + rl + usize::from(!l.is_empty()), lr + rr + usize::from(!r.is_empty()))
            }
        }
    }

    pub fn right_edges(&self) -> usize {
        self.edge_counts().1
    }

    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| Self::node(acc, BinaryTree::Empty))
    }

    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |acc, _| Self::node(BinaryTree::Empty, acc))
    }

    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node(l, r) => Self::node(r.mirror(), l.mirror()),
        }
    }

    /// `n! / Π_v |subtree(v)|`: the number of decreasing labellings.
    pub fn hook_count(&self) -> BigInt {
        fn walk(t: &BinaryTree, prod: &mut BigInt) -> usize {
            match t {
                BinaryTree::Empty => 0,
                BinaryTree::Node(l, r) => {
                    let s = 1 + walk(l, prod) + walk(r, prod);
                    *prod *= s;
                    s
                }
            }
        }
        let mut prod = BigInt::one();
        let n = walk(self, &mut prod);
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        fact / prod
    }

    /// Trees reachable by one rotation `((A,B),C) → (A,(B,C))`.
    pub fn rotations_up(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            if let BinaryTree::Node(a, b) = l.as_ref() {
                out.push(Self::node((**a).clone(), Self::node((**b).clone(), (**r).clone())));
            }
            for l2 in l.rotations_up() {
                out.push(Self::node(l2, (**r).clone()));
            }
            for r2 in r.rotations_up() {
                out.push(Self::node((**l).clone(), r2));
            }
        }
        out
    }

    /// All trees with `n` nodes, sorted by their text form.
    pub fn all(n: usize) -> Arc<Vec<BinaryTree>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BinaryTree>>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = cache.lock().expect("tree cache poisoned").get(&n) {
            return v.clone();
        }
        let mut v = Vec::new();
        if n == 0 {
            v.push(BinaryTree::Empty);
        } else {
            for k in 0..n {
                for l in Self::all(k).iter() {
                    for r in Self::all(n - 1 - k).iter() {
                        v.push(Self::node(l.clone(), r.clone()));
                    }
                }
            }
        }
        v.sort_by_cached_key(|t| t.to_string());
        let v = Arc::new(v);
        cache.lock().expect("tree cache poisoned").insert(n, v.clone());
        v
    }

    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let t = parse_at(&chars, &mut pos).ok_or_else(|| Error::Parse(format!("bad binary tree: {text}")))?;
        skip_ws(&chars, &mut pos);
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in binary tree: {text}")));
        }
        Ok(t)
    }
}

fn skip_ws(c: &[char], pos: &mut usize) {
    while *pos < c.len() && c[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn parse_at(c: &[char], pos: &mut usize) -> Option<BinaryTree> {
    skip_ws(c, pos);
    match c.get(*pos)? {
        '_' => {
            *pos += 1;
            Some(BinaryTree::Empty)
        }
        'o' => {
            *pos += 1;
            Some(BinaryTree::leaf_node())
        }
        '(' => {
            *pos += 1;
            let l = parse_at(c, pos)?;
            let r = parse_at(c, pos)?;
            skip_ws(c, pos);
            if c.get(*pos) != Some(&')') {
                return None;
            }
            *pos += 1;
            Some(BinaryTree::node(l, r))
        }
        _ => None,
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("_"),
            BinaryTree::Node(l, r) if l.is_empty() && r.is_empty() => f.write_str("o"),
            BinaryTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    #[test]
    fn text_round_trip() {
        for n in 0..6 {
            for tree in BinaryTree::all(n).iter() {
                assert_eq!(&t(&tree.to_string()), tree);
            }
        }
        assert_eq!(t("(_ _)"), BinaryTree::leaf_node());
        assert!(BinaryTree::parse("(o").is_err());
    }

    #[test]
    fn edge_count_examples() {
        assert_eq!(BinaryTree::left_comb(3).edge_counts(), (2, 0));
        assert_eq!(t("(o o)").edge_counts(), (1, 1));
        assert_eq!(BinaryTree::Empty.edge_counts(), (0, 0));
    }

    #[test]
    fn hook_counts() {
        assert_eq!(BinaryTree::left_comb(5).hook_count(), BigInt::one());
        assert_eq!(t("(o o)").hook_count(), BigInt::from(2));
        for n in 1..9usize {
            let total: BigInt = BinaryTree::all(n).iter().map(|x| x.hook_count()).sum();
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..9).map(|n| BinaryTree::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }
}
