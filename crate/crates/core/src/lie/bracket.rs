use std::fmt;

use crate::error::{Error, Result};
use crate::fqsym::FqsymElement;
use crate::perm::{convolution_support, decreasing_tree, DecreasingTree, Letters, Permutation};
use crate::scalar::Scalar;
use crate::trees::BinaryTree;

/// Complete bracketing of a word: a complete binary tree with labelled
/// leaves. Text form `[[1,2],[3,4]]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bracket {
    Leaf(u8),
    Node(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn node(left: Bracket, right: Bracket) -> Self {
        Bracket::Node(Box::new(left), Box::new(right))
    }

    /// `[⋯[[w_1, w_2], w_3], ⋯, w_n]`.
    pub fn left_nested(word: &[u8]) -> Result<Self> {
        let (first, rest) = word.split_first().ok_or(Error::EmptyComposition)?;
        Ok(rest.iter().fold(Bracket::Leaf(*first), |acc, &x| Bracket::node(acc, Bracket::Leaf(x))))
    }

    /// Leaf labels read left to right.
    pub fn leaves(&self) -> Letters {
        let mut out = Letters::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Letters) {
        match self {
            Bracket::Leaf(x) => out.push(*x),
            Bracket::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Bracket::Leaf(_) => 1,
            Bracket::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// The binary tree of internal nodes.
    pub fn shape(&self) -> BinaryTree {
        match self {
            Bracket::Leaf(_) => BinaryTree::Empty,
            Bracket::Node(l, r) => BinaryTree::node(l.shape(), r.shape()),
        }
    }

    /// Same tree, leaves relabelled by `word` from left to right.
    pub fn relabel(&self, word: &[u8]) -> Bracket {
        fn go(b: &Bracket, word: &[u8], pos: &mut usize) -> Bracket {
            match b {
                Bracket::Leaf(_) => {
                    *pos += 1;
                    Bracket::Leaf(word[*pos - 1])
                }
                Bracket::Node(l, r) => {
                    let l = go(l, word, pos);
                    Bracket::node(l, go(r, word, pos))
                }
            }
        }
        assert_eq!(word.len(), self.leaf_count(), "relabelling with a word of the wrong length");
        go(self, word, &mut 0)
    }

    /// Expansion under `[u, v] = uv − vu`; leaves must form a permutation.
    pub fn expand<C: Scalar>(&self) -> Result<FqsymElement<C>> {
        let leaves = self.leaves();
        let sigma = Permutation::new(&leaves.iter().map(|&x| x as usize).collect::<Vec<_>>())?;
        let mut out = FqsymElement::zero(sigma.len());
        let one = C::one();
        let minus = one.negate();
        for (word, positive) in self.signed_words() {
            out.add_term(Permutation::from_letters(word), if positive { &one } else { &minus });
        }
        Ok(out)
    }

    fn signed_words(&self) -> Vec<(Letters, bool)> {
        match self {
            Bracket::Leaf(x) => vec![(Letters::from_slice(&[*x]), true)],
            Bracket::Node(l, r) => {
                let left = l.signed_words();
                let right = r.signed_words();
                let mut out = Vec::with_capacity(2 * left.len() * right.len());
                for (u, su) in &left {
                    for (v, sv) in &right {
                        let mut uv = u.clone();
                        uv.extend_from_slice(v);
                        out.push((uv, su == sv));
                        let mut vu = v.clone();
                        vu.extend_from_slice(u);
                        out.push((vu, su != sv));
                    }
                }
                out
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let b = parse_at(&chars, &mut pos).ok_or_else(|| Error::Parse(format!("bad bracket: {text}")))?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in bracket: {text}")));
        }
        Ok(b)
    }
}

fn parse_at(c: &[char], pos: &mut usize) -> Option<Bracket> {
    if c.get(*pos) == Some(&'[') {
        *pos += 1;
        let l = parse_at(c, pos)?;
        if c.get(*pos) != Some(&',') {
            return None;
        }
        *pos += 1;
        let r = parse_at(c, pos)?;
        if c.get(*pos) != Some(&']') {
            return None;
        }
        *pos += 1;
        return Some(Bracket::node(l, r));
    }
    let start = *pos;
    while c.get(*pos).is_some_and(|ch| ch.is_ascii_digit()) {
        *pos += 1;
    }
    let digits: String = c[start..*pos].iter().collect();
    digits.parse::<u8>().ok().map(Bracket::Leaf)
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Leaf(x) => write!(f, "{x}"),
            Bracket::Node(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Element `T(σ)` of the PBW basis: an admissibly labelled bracket.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwElement {
    bracket: Bracket,
}

fn admissible_at(b: &Bracket) -> Option<(u8, u8)> {
    match b {
        Bracket::Leaf(x) => Some((*x, *x)),
        Bracket::Node(l, r) => {
            let (lmin, lmax) = admissible_at(l)?;
            let (rmin, rmax) = admissible_at(r)?;
            (lmin < rmin && rmax > lmax).then_some((lmin, rmax))
        }
    }
}

impl PbwElement {
    /// Checks that the leaves form a permutation and that at every node the
    /// smallest label sits on the left and the largest on the right.
    pub fn new(bracket: Bracket) -> Result<Self> {
        let leaves = bracket.leaves();
        Permutation::new(&leaves.iter().map(|&x| x as usize).collect::<Vec<_>>())?;
        if admissible_at(&bracket).is_none() {
            return Err(Error::InvalidArgument(format!("labelling {bracket} is not admissible")));
        }
        Ok(PbwElement { bracket })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(Bracket::parse(text)?)
    }

    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    pub fn grade(&self) -> usize {
        self.bracket.leaf_count()
    }

    pub fn shape(&self) -> BinaryTree {
        self.bracket.shape()
    }

    pub fn leaf_word(&self) -> Permutation {
        Permutation::from_letters(self.bracket.leaves())
    }

    pub fn expand<C: Scalar>(&self) -> FqsymElement<C> {
        self.bracket.expand().expect("labels form a permutation")
    }

    /// Permutation of `S_{n−1}` whose decreasing tree has this shape. A node
    /// with leaf set `S` receives a value set `V` in order-preserving
    /// correspondence with `S ∖ {min S}`; it keeps the image of `max S`,
    /// the left subtree `u` receives the images of `u ∖ {min u}` and the
    /// right subtree `v` those of `v ∖ {max v}`. Labels are read in infix
    /// order.
    pub fn to_permutation(&self) -> Permutation {
        fn walk(b: &Bracket, values: &[u8], out: &mut Letters) {
            let Bracket::Node(l, r) = b else { return };
            let mut leaves = b.leaves();
            leaves.sort_unstable();
            let image = |x: u8| values[leaves[1..].iter().position(|&y| y == x).expect("leaf of the subtree")];
            let pick = |side: &Bracket, drop_max: bool| -> Vec<u8> {
                let mut own = side.leaves();
                own.sort_unstable();
                let kept = if drop_max { &own[..own.len() - 1] } else { &own[1..] };
                kept.iter().map(|&x| image(x)).collect()
            };
            walk(l, &pick(l, false), out);
            out.push(*values.last().expect("internal nodes carry a value"));
            walk(r, &pick(r, true), out);
        }
        let n = self.grade();
        let values: Vec<u8> = (1..n as u8).collect();
        let mut out = Letters::new();
        walk(&self.bracket, &values, &mut out);
        Permutation::from_letters(out)
    }

    /// Inverse of [`PbwElement::to_permutation`].
    pub fn from_permutation(sigma: &Permutation) -> Result<Self> {
        fn labels(t: Option<&DecreasingTree>, acc: &mut Vec<u8>) {
            if let Some(t) = t {
                acc.push(t.label as u8);
                labels(t.left.as_deref(), acc);
                labels(t.right.as_deref(), acc);
            }
        }
        // `leaves` is the sorted leaf set of the subtree rooted at `node`.
        fn build(node: Option<&DecreasingTree>, leaves: &[u8]) -> Bracket {
            let Some(t) = node else { return Bracket::Leaf(leaves[0]) };
            let mut values = Vec::new();
            labels(Some(t), &mut values);
            values.sort_unstable();
            let mut left_values = Vec::new();
            labels(t.left.as_deref(), &mut left_values);
            let mut u = vec![leaves[0]];
            let mut v = Vec::new();
            for (x, val) in leaves[1..].iter().zip(&values) {
                if left_values.contains(val) {
                    u.push(*x);
                } else {
                    v.push(*x);
                }
            }
            // The node's own value is the image of max S, which belongs to v.
            u.sort_unstable();
            v.sort_unstable();
            Bracket::node(build(t.left.as_deref(), &u), build(t.right.as_deref(), &v))
        }
        let word: Vec<u32> = sigma.letters().iter().map(|&x| x as u32).collect();
        let tree = decreasing_tree(&word)?;
        let leaves: Vec<u8> = (1..=sigma.len() as u8 + 1).collect();
        Self::new(build(tree.as_ref(), &leaves))
    }
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracket)
    }
}

impl fmt::Debug for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bracket)
    }
}

/// Admissible labellings of the complete tree whose internal nodes form
/// `shape`, sorted by leaf word.
pub fn admissible_labellings(shape: &BinaryTree) -> Vec<PbwElement> {
    fn label(t: &BinaryTree, labels: &[u8]) -> Vec<Bracket> {
        let Some((l, r)) = t.children() else {
            return vec![Bracket::Leaf(labels[0])];
        };
        let left_size = l.size() + 1;
        let middle = &labels[1..labels.len() - 1];
        let mut out = Vec::new();
        for_each_subset(middle.len(), left_size - 1, |pick| {
            let mut left = vec![labels[0]];
            let mut right = Vec::new();
            for (i, &x) in middle.iter().enumerate() {
                if pick[i] {
                    left.push(x);
                } else {
                    right.push(x);
                }
            }
            right.push(labels[labels.len() - 1]);
            for lb in label(l, &left) {
                for rb in label(r, &right) {
                    out.push(Bracket::node(lb.clone(), rb));
                }
            }
        });
        out
    }
    let n = shape.size() + 1;
    let labels: Vec<u8> = (1..=n as u8).collect();
    let mut out: Vec<PbwElement> = label(shape, &labels).into_iter().map(|bracket| PbwElement { bracket }).collect();
    out.sort_by_key(|e| e.bracket.leaves());
    out
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[bool])) {
    fn rec(i: usize, k: usize, pick: &mut Vec<bool>, f: &mut impl FnMut(&[bool])) {
        if i == pick.len() {
            if k == 0 {
                f(pick);
            }
            return;
        }
        if k > 0 {
            pick[i] = true;
            rec(i + 1, k - 1, pick, f);
            pick[i] = false;
        }
        if pick.len() - i > k {
            rec(i + 1, k, pick, f);
        }
    }
    let mut pick = vec![false; n];
    rec(0, k, &mut pick, &mut f);
}

/// All PBW elements of grade `n`, shapes in text order.
pub fn pbw_basis(n: usize) -> Vec<PbwElement> {
    assert!(n >= 1, "the PBW basis starts in grade 1");
    BinaryTree::all(n - 1).iter().flat_map(admissible_labellings).collect()
}

/// Dynkin basis element `[⋯[[1, σ(2)], σ(3)], ⋯, σ(n)]`.
pub fn dynkin_basis_element<C: Scalar>(sigma: &Permutation) -> Result<FqsymElement<C>> {
    if sigma.letters().first() != Some(&1) {
        return Err(Error::InvalidArgument(format!("Dynkin basis elements are indexed by σ(1) = 1, got {sigma}")));
    }
    Bracket::left_nested(sigma.letters())?.expand()
}

/// The Dynkin operator `w ↦ [⋯[w_1, w_2], ⋯, w_n]`, extended linearly.
///
/// Each letter after the first goes to the right of `w_1` in order, or to
/// its left in reverse order with a sign.
pub fn dynkin_operator<C: Scalar>(x: &FqsymElement<C>) -> FqsymElement<C> {
    let n = x.grade();
    let mut out = FqsymElement::zero(n);
    if n == 0 {
        return out;
    }
    let negated: Vec<(&Permutation, C)> = x.terms().map(|(s, c)| (s, c.negate())).collect();
    for ((sigma, c), (_, minus)) in x.terms().zip(&negated) {
        let w = sigma.letters();
        for mask in 0u32..1 << (n - 1) {
            let mut word = Letters::with_capacity(n);
            for k in (1..n).rev() {
                if mask >> (k - 1) & 1 == 1 {
                    word.push(w[k]);
                }
            }
            word.push(w[0]);
            for k in 1..n {
                if mask >> (k - 1) & 1 == 0 {
                    word.push(w[k]);
                }
            }
            let coef = if mask.count_ones() % 2 == 0 { c } else { minus };
            out.add_term(Permutation::from_letters(word), coef);
        }
    }
    out
}

/// Membership in `Lie(n)` by the Dynkin–Specht–Wever criterion
/// `θ(x) = n x`.
pub fn is_lie<C: Scalar>(x: &FqsymElement<C>) -> bool {
    if x.is_zero() {
        return true;
    }
    let n = C::from_i64(x.grade() as i64);
    x.grade() > 0 && dynkin_operator(x) == x.scale(&n)
}

/// `[T_1(α), T_2(β)]_⋆` as a list of brackets `[T_1(γ_1), T_2(γ_2)]` over
/// the convolution `γ = γ_1·γ_2 ∈ α ∗ β`.
pub fn convolution_bracket(x: &Bracket, y: &Bracket) -> Result<Vec<Bracket>> {
    let alpha = Permutation::new(&x.leaves().iter().map(|&v| v as usize).collect::<Vec<_>>())?;
    let beta = Permutation::new(&y.leaves().iter().map(|&v| v as usize).collect::<Vec<_>>())?;
    let k = alpha.len();
    Ok(convolution_support(&alpha, &beta)
        .into_iter()
        .map(|gamma| {
            let (g1, g2) = gamma.letters().split_at(k);
            Bracket::node(x.relabel(g1), y.relabel(g2))
        })
        .collect())
}
