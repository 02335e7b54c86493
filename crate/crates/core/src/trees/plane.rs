use std::fmt;

use crate::error::{Error, Result};

use super::BinaryTree;

/// Plane rooted tree given by its ordered list of child subtrees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

/// Vertices numbered by the canonical (postfix) labelling, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatTree {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl FlatTree {
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.len() - 1
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn depth(&self, v: usize) -> usize {
        let mut d = 0;
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    /// Strict ancestors, nearest first.
    pub fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree { children: Vec::new() }
    }

    pub fn new(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn chain(n: usize) -> Self {
        assert!(n >= 1, "plane trees have at least one vertex");
        (1..n).fold(PlaneTree::leaf(), |acc, _| PlaneTree::new(vec![acc]))
    }

    pub fn corolla(n: usize) -> Self {
        assert!(n >= 1, "plane trees have at least one vertex");
        PlaneTree::new(vec![PlaneTree::leaf(); n - 1])
    }

    /// Grafts `left` as the new leftmost child of the root of `right`.
    pub fn butcher(left: &PlaneTree, right: &PlaneTree) -> PlaneTree {
        let mut children = vec![left.clone()];
        children.extend(right.children.iter().cloned());
        PlaneTree::new(children)
    }

    pub fn knuth_rotation(&self) -> BinaryTree {
        fn forest(f: &[PlaneTree]) -> BinaryTree {
            match f.split_first() {
                None => BinaryTree::Empty,
                Some((first, rest)) => BinaryTree::node(forest(&first.children), forest(rest)),
            }
        }
        forest(&self.children)
    }

    pub fn from_binary(t: &BinaryTree) -> PlaneTree {
        match t.children() {
            None => PlaneTree::leaf(),
            Some((l, r)) => PlaneTree::butcher(&PlaneTree::from_binary(l), &PlaneTree::from_binary(r)),
        }
    }

    /// All plane trees with `n` vertices, sorted by text form.
    pub fn all(n: usize) -> Vec<PlaneTree> {
        assert!(n >= 1, "plane trees have at least one vertex");
        let mut v: Vec<PlaneTree> = BinaryTree::all(n - 1).iter().map(PlaneTree::from_binary).collect();
        v.sort_by_cached_key(|t| t.to_string());
        v
    }

    /// One cover per vertex that is neither the root nor a leaf.
    pub fn tamari_covers(&self) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        for (i, c) in self.children.iter().enumerate() {
            if let Some((first, rest)) = c.children.split_first() {
                let mut kids = self.children[..i].to_vec();
                kids.push(first.clone());
                kids.push(PlaneTree::new(rest.to_vec()));
                kids.extend(self.children[i + 1..].iter().cloned());
                out.push(PlaneTree::new(kids));
            }
        }
        for (i, c) in self.children.iter().enumerate() {
            for c2 in c.tamari_covers() {
                let mut kids = self.children.clone();
                kids[i] = c2;
                out.push(PlaneTree::new(kids));
            }
        }
        out
    }

    pub fn flatten(&self) -> FlatTree {
        fn walk(t: &PlaneTree, parent: &mut Vec<Option<usize>>, children: &mut Vec<Vec<usize>>) -> usize {
            let kids: Vec<usize> = t.children.iter().map(|c| walk(c, parent, children)).collect();
            let id = parent.len();
            parent.push(None);
            for &k in &kids {
                parent[k] = Some(id);
            }
            children.push(kids);
            id
        }
        let mut parent = Vec::new();
        let mut children = Vec::new();
        walk(self, &mut parent, &mut children);
        FlatTree { parent, children }
    }

    pub fn from_flat(flat: &FlatTree) -> PlaneTree {
        fn build(flat: &FlatTree, v: usize) -> PlaneTree {
            PlaneTree::new(flat.children[v].iter().map(|&c| build(flat, c)).collect())
        }
        build(flat, flat.root())
    }

    /// Number of vertices with at least one child, root included.
    pub fn internal_count(&self) -> usize {
        usize::from(!self.is_leaf()) + self.children.iter().map(|c| c.internal_count()).sum::<usize>()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(|c| c.leaf_count()).sum()
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_at(&chars, &mut pos).ok_or_else(|| Error::Parse(format!("bad plane tree: {text}")))?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in plane tree: {text}")));
        }
        Ok(t)
    }
}

fn parse_at(c: &[char], pos: &mut usize) -> Option<PlaneTree> {
    if c.get(*pos) != Some(&'[') {
        return None;
    }
    *pos += 1;
    let mut children = Vec::new();
    if c.get(*pos) == Some(&']') {
        *pos += 1;
        return Some(PlaneTree::leaf());
    }
    loop {
        children.push(parse_at(c, pos)?);
        match c.get(*pos)? {
            ',' => *pos += 1,
            ']' => {
                *pos += 1;
                return Some(PlaneTree::new(children));
            }
            _ => return None,
        }
    }
}

impl fmt::Display for PlaneTree {
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

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PlaneTree {
        PlaneTree::parse(s).unwrap()
    }

    #[test]
    fn knuth_rotation_examples() {
        assert_eq!(PlaneTree::chain(3).knuth_rotation().to_string(), "(o _)");
        assert_eq!(PlaneTree::corolla(3).knuth_rotation().to_string(), "(_ o)");
        assert_eq!(PlaneTree::leaf().knuth_rotation(), BinaryTree::Empty);
        for n in 1..9 {
            let all = PlaneTree::all(n);
            for t in &all {
                assert_eq!(&PlaneTree::from_binary(&t.knuth_rotation()), t);
                assert_eq!(t.size(), n);
            }
        }
    }

    #[test]
    fn butcher_examples() {
        let dot = PlaneTree::leaf();
        assert_eq!(PlaneTree::butcher(&dot, &dot), PlaneTree::chain(2));
        assert_eq!(PlaneTree::butcher(&dot, &PlaneTree::chain(2)), PlaneTree::corolla(3));
        for a in PlaneTree::all(3) {
            for b in PlaneTree::all(4) {
                let c = PlaneTree::butcher(&a, &b);
                assert_eq!(c.size(), 7);
                assert_eq!(c.knuth_rotation(), BinaryTree::wedge(&a.knuth_rotation(), &b.knuth_rotation()));
            }
        }
    }

    #[test]
    fn covers_examples() {
        assert_eq!(PlaneTree::chain(3).tamari_covers(), vec![PlaneTree::corolla(3)]);
        assert!(PlaneTree::corolla(5).tamari_covers().is_empty());
        assert_eq!(PlaneTree::chain(4).tamari_covers().len(), 2);
    }

    #[test]
    fn canonical_labels() {
        let flat = PlaneTree::chain(3).flatten();
        assert_eq!(flat.parent, vec![Some(1), Some(2), None]);
        let flat = PlaneTree::corolla(3).flatten();
        assert_eq!(flat.children[2], vec![0, 1]);
        let t = p("[[],[[[[],[],[]]],[]],[[]],[]]");
        let flat = t.flatten();
        assert_eq!(flat.len(), 12);
        assert_eq!(flat.children[11], vec![0, 7, 9, 10]);
        assert_eq!(flat.children[7], vec![5, 6]);
        assert_eq!(flat.children[4], vec![1, 2, 3]);
        assert_eq!(PlaneTree::from_flat(&flat), t);
    }

    #[test]
    fn parse_round_trip() {
        for t in PlaneTree::all(6) {
            assert_eq!(p(&t.to_string()), t);
        }
        assert!(PlaneTree::parse("[[]").is_err());
    }
}
