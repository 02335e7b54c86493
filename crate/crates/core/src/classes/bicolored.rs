use std::fmt;

use crate::error::{Error, Result};
use crate::trees::BinaryTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn swap(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    fn letter(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

/// Rooted plane tree with colored vertices, written `B[W[B[]],W[]]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bicolored {
    pub color: Color,
    pub children: Vec<Bicolored>,
}

impl Bicolored {
    pub fn new(color: Color, children: Vec<Bicolored>) -> Self {
        Bicolored { color, children }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Bicolored::vertex_count).sum::<usize>()
    }

    /// Sorts the children of black vertices, leaving white vertices ordered.
    pub fn sort_black(&self) -> Bicolored {
        let mut children: Vec<Bicolored> = self.children.iter().map(Bicolored::sort_black).collect();
        if self.color == Color::Black {
            children.sort();
        }
        Bicolored::new(self.color, children)
    }

    /// Sorts all children: the canonical form of the underlying rooted
    /// unordered tree.
    pub fn sort_all(&self) -> Bicolored {
        let mut children: Vec<Bicolored> = self.children.iter().map(Bicolored::sort_all).collect();
        children.sort();
        Bicolored::new(self.color, children)
    }

    pub fn swap_colors(&self) -> Bicolored {
        Bicolored::new(self.color.swap(), self.children.iter().map(Bicolored::swap_colors).collect())
    }

    pub fn to_free(&self) -> FreeBicolored {
        fn walk(t: &Bicolored, parent: Option<usize>, g: &mut FreeBicolored) {
            let id = g.colors.len();
            g.colors.push(t.color);
            g.adjacency.push(Vec::new());
            if let Some(p) = parent {
                g.adjacency[p].push(id);
                g.adjacency[id].push(p);
            }
            for c in &t.children {
                walk(c, Some(id), g);
            }
        }
        let mut g = FreeBicolored { colors: Vec::new(), adjacency: Vec::new() };
        walk(self, None, &mut g);
        g
    }

    pub fn parse(text: &str) -> Result<Self> {
        fn at(c: &[char], pos: &mut usize) -> Option<Bicolored> {
            let color = match c.get(*pos)? {
                'B' => Color::Black,
                'W' => Color::White,
                _ => return None,
            };
            *pos += 1;
            if c.get(*pos) != Some(&'[') {
                return None;
            }
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match c.get(*pos)? {
                    ']' => {
                        *pos += 1;
                        return Some(Bicolored::new(color, children));
                    }
                    ',' if !children.is_empty() => *pos += 1,
                    _ => children.push(at(c, pos)?),
                }
            }
        }
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        match at(&chars, &mut pos) {
            Some(t) if pos == chars.len() => Ok(t),
            _ => Err(Error::Parse(format!("bad bicolored tree: {text}"))),
        }
    }
}

impl fmt::Display for Bicolored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.color.letter())?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Bicolored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Unrooted, unordered tree with colored vertices.
#[derive(Clone, Debug)]
pub struct FreeBicolored {
    pub colors: Vec<Color>,
    pub adjacency: Vec<Vec<usize>>,
}

impl FreeBicolored {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn rooted_at(&self, root: usize) -> Bicolored {
        self.rooted_below(root, None)
    }

    fn rooted_below(&self, v: usize, parent: Option<usize>) -> Bicolored {
        let children = self.adjacency[v].iter().filter(|&&w| Some(w) != parent).map(|&w| self.rooted_below(w, Some(v))).collect();
        Bicolored::new(self.colors[v], children)
    }

    /// One or two central vertices.
    pub fn centers(&self) -> Vec<usize> {
        let n = self.len();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut degree: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                degree[v] = 0;
                for &w in &self.adjacency[v] {
                    if degree[w] > 0 {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Canonical form: rooted at a center (the smaller form when there are
    /// two), all children sorted.
    pub fn canonical(&self) -> Bicolored {
        self.centers().into_iter().map(|c| self.rooted_at(c).sort_all()).min().expect("non-empty tree")
    }

    /// The two components left after removing the edge `u–v`: the side
    /// of `u`, then the side of `v`.
    pub fn split(&self, u: usize, v: usize) -> (FreeBicolored, FreeBicolored) {
        (self.component(u, v), self.component(v, u))
    }

    fn component(&self, start: usize, avoid: usize) -> FreeBicolored {
        let mut index = vec![usize::MAX; self.len()];
        let mut order = vec![start];
        index[start] = 0;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &w in &self.adjacency[v] {
                if w != avoid && index[w] == usize::MAX {
                    index[w] = order.len();
                    order.push(w);
                }
            }
            i += 1;
        }
        let colors = order.iter().map(|&v| self.colors[v]).collect();
        let adjacency = order
            .iter()
            .map(|&v| self.adjacency[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
            .collect();
        FreeBicolored { colors, adjacency }
    }

    /// Edges as pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adjacency.iter().enumerate() {
            for &v in ns {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Joins `other` by an edge between `u` here and `v` there.
    pub fn join(&self, u: usize, other: &FreeBicolored, v: usize) -> FreeBicolored {
        let shift = self.len();
        let mut colors = self.colors.clone();
        colors.extend(other.colors.iter().copied());
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(other.adjacency.iter().map(|ns| ns.iter().map(|&w| w + shift).collect()));
        adjacency[u].push(v + shift);
        adjacency[v + shift].push(u);
        FreeBicolored { colors, adjacency }
    }
}

/// Node arrays of a binary tree numbered in infix order.
pub(crate) struct InfixTree {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
    pub root: Option<usize>,
}

impl InfixTree {
    pub fn new(t: &BinaryTree) -> Self {
        fn walk(t: &BinaryTree, out: &mut InfixTree) -> Option<usize> {
            let (l, r) = t.children()?;
            let li = walk(l, out);
            let id = out.left.len();
            out.left.push(li);
            out.right.push(None);
            let ri = walk(r, out);
            out.right[id] = ri;
            Some(id)
        }
        let mut out = InfixTree { left: Vec::new(), right: Vec::new(), root: None };
        out.root = walk(t, &mut out);
        out
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    /// Maximal chains along left (resp. right) edges, each sorted, and for
    /// each node the index of its chain.
    pub fn branches(&self, right: bool) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.len();
        let next = if right { &self.right } else { &self.left };
        let mut is_target = vec![false; n];
        for c in next.iter().flatten() {
            is_target[*c] = true;
        }
        let mut blocks = Vec::new();
        let mut block_of = vec![0; n];
        for start in 0..n {
            if is_target[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut cur = Some(start);
            while let Some(v) = cur {
                block_of[v] = blocks.len();
                block.push(v);
                cur = next[v];
            }
            block.sort_unstable();
            blocks.push(block);
        }
        (blocks, block_of)
    }
}

/// Left-branch blocks (white) and right-branch blocks (black) of a binary
/// tree, nodes numbered `1..n` in infix order.
pub fn branch_partitions(t: &BinaryTree) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let it = InfixTree::new(t);
    let shift = |bs: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        let mut bs: Vec<Vec<usize>> = bs.into_iter().map(|b| b.into_iter().map(|x| x + 1).collect()).collect();
        bs.sort();
        bs
    };
    (shift(it.branches(false).0), shift(it.branches(true).0))
}

/// Bipartite graph on the branch blocks; vertex `i < #white` is white
/// block `i`, the rest are black blocks. The edge for node `x` joins the
/// two blocks containing `x`.
struct BlockGraph {
    colors: Vec<Color>,
    /// `(neighbour, shared node)` pairs.
    adjacency: Vec<Vec<(usize, usize)>>,
    white_of: Vec<usize>,
    black_of: Vec<usize>,
}

impl BlockGraph {
    fn new(it: &InfixTree) -> Self {
        let (white, white_of) = it.branches(false);
        let (black, black_of) = it.branches(true);
        let w = white.len();
        let mut colors = vec![Color::White; w];
        colors.extend(std::iter::repeat_n(Color::Black, black.len()));
        let mut adjacency = vec![Vec::new(); w + black.len()];
        for x in 0..it.len() {
            let (a, b) = (white_of[x], w + black_of[x]);
            adjacency[a].push((b, x));
            adjacency[b].push((a, x));
        }
        for ns in adjacency.iter_mut() {
            ns.sort_by_key(|&(_, x)| x);
        }
        let black_of = black_of.into_iter().map(|b| b + w).collect();
        BlockGraph { colors, adjacency, white_of, black_of }
    }

    fn rooted(&self, v: usize, parent: Option<usize>) -> Bicolored {
        let children =
            self.adjacency[v].iter().filter(|&&(u, _)| Some(u) != parent).map(|&(u, _)| self.rooted(u, Some(v))).collect();
        Bicolored::new(self.colors[v], children)
    }
}

/// Plane bipartite tree rooted at the right branch through the root, the
/// children of each vertex being the blocks it meets, in increasing order
/// of the shared node. The empty tree gives `B[]`.
pub fn encode_black_rooted(t: &BinaryTree) -> Bicolored {
    let it = InfixTree::new(t);
    let Some(root) = it.root else { return Bicolored::new(Color::Black, Vec::new()) };
    let g = BlockGraph::new(&it);
    g.rooted(g.black_of[root], None)
}

/// Same construction rooted at the left branch through the root. The
/// empty tree gives `W[]`.
pub fn encode_white_rooted(t: &BinaryTree) -> Bicolored {
    let it = InfixTree::new(t);
    let Some(root) = it.root else { return Bicolored::new(Color::White, Vec::new()) };
    let g = BlockGraph::new(&it);
    g.rooted(g.white_of[root], None)
}

/// The bipartite free tree of the branch blocks. The empty tree gives a
/// single black vertex.
pub fn encode_free(t: &BinaryTree) -> FreeBicolored {
    let it = InfixTree::new(t);
    if it.root.is_none() {
        return FreeBicolored { colors: vec![Color::Black], adjacency: vec![Vec::new()] };
    }
    let g = BlockGraph::new(&it);
    FreeBicolored { colors: g.colors, adjacency: g.adjacency.iter().map(|ns| ns.iter().map(|&(u, _)| u).collect()).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bt(s: &str) -> BinaryTree {
        BinaryTree::parse(s).unwrap()
    }

    #[test]
    fn seven_node_example() {
        // Root 5; 2 with children 1 and 4 (4 has left child 3); 6 with right child 7.
        let t = bt("((o (o _)) (_ o))");
        let (l, r) = branch_partitions(&t);
        assert_eq!(l, vec![vec![1, 2, 5], vec![3, 4], vec![6], vec![7]]);
        assert_eq!(r, vec![vec![1], vec![2, 4], vec![3], vec![5, 6, 7]]);
        assert_eq!(encode_black_rooted(&t).to_string(), "B[W[B[],B[W[B[]]]],W[],W[]]");
    }

    #[test]
    fn size_four_class_encodings() {
        let trees = ["(o (_ o))", "(_ (o o))", "(_ (_ (o _)))"];
        let black: Vec<String> = trees.iter().map(|s| encode_black_rooted(&bt(s)).to_string()).collect();
        assert_eq!(black, vec!["B[W[B[]],W[],W[]]", "B[W[],W[B[]],W[]]", "B[W[],W[],W[B[]]]"]);
        let white: Vec<String> = trees.iter().map(|s| encode_white_rooted(&bt(s)).to_string()).collect();
        assert_eq!(white, vec!["W[B[],B[W[],W[]]]", "W[B[W[B[]],W[]]]", "W[B[W[],W[B[]]]]"]);
        let sorted: Vec<Bicolored> = trees.iter().map(|s| encode_black_rooted(&bt(s)).sort_black()).collect();
        assert!(sorted.iter().all(|s| *s == sorted[0]));
    }

    #[test]
    fn free_canonical_forms() {
        let path = Bicolored::parse("B[W[B[W[]]]]").unwrap().to_free();
        assert_eq!(path.centers().len(), 2);
        let other_end = Bicolored::parse("W[B[W[B[]]]]").unwrap().to_free();
        assert_eq!(path.canonical(), other_end.canonical());
        let star = Bicolored::parse("W[B[],B[],B[]]").unwrap().to_free();
        assert_eq!(star.canonical().to_string(), "W[B[],B[],B[]]");
        let (a, b) = path.split(1, 2);
        assert_eq!((a.len(), b.len()), (2, 2));
        assert_eq!(Bicolored::parse("B[W[B[]],W[]]").unwrap().to_string(), "B[W[B[]],W[]]");
        assert!(Bicolored::parse("B[W[]").is_err());
    }
}
