//! Words, permutations, compositions and the statistics built on them.
//!
//! Permutations are stored in one-line notation with 1-based values.

use std::fmt;
use std::sync::OnceLock;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::trees::BinaryTree;

pub type Letters = SmallVec<[u8; 16]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Letters);

impl Permutation {
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("size {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values.iter().map(|&v| v as u8).collect()))
    }

    /// Caller guarantees `values` is a bijection of `1..=len`.
    pub fn from_letters(values: Letters) -> Self {
        debug_assert!(Self::new(&values.iter().map(|&v| v as usize).collect::<Vec<_>>()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn empty() -> Self {
        Permutation(Letters::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv: Letters = smallvec::smallvec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composition of permutations of different sizes");
        Permutation(other.0.iter().map(|&j| self.0[j as usize - 1]).collect())
    }

    /// Reversed word `σ(n)…σ(1)`.
    pub fn reversal(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn descent_set(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// Lexicographic rank among permutations of the same size.
    pub fn rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn unrank(n: usize, mut rank: usize) -> Self {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        Permutation(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation(cur.iter().copied().collect()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let inner = t
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(text.to_string()))?;
            if inner.trim().is_empty() {
                return Ok(Self::empty());
            }
            let values = inner
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(text.to_string())))
                .collect::<Result<Vec<_>>>()?;
            Self::new(&values)
        } else {
            let values = t
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(text.to_string())))
                .collect::<Result<Vec<_>>>()?;
            if values.len() > 9 {
                return Err(Error::Parse(format!("digit strings are limited to n <= 9: {text}")));
            }
            Self::new(&values)
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 && !self.is_empty() {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
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

const CACHED_SIZES: usize = 10;

/// Shared lexicographic listing of `S_n` for `n < 10`.
pub fn symmetric_group(n: usize) -> &'static [Permutation] {
    static CACHE: [OnceLock<Vec<Permutation>>; CACHED_SIZES] = [const { OnceLock::new() }; CACHED_SIZES];
    assert!(n < CACHED_SIZES, "symmetric group listing is cached only for n < {CACHED_SIZES}");
    CACHE[n].get_or_init(|| Permutation::all(n))
}

/// Unit-free word with distinct letters in the typical case.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn has_distinct_letters(&self) -> bool {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Ranks letters by value, ties broken by position.
pub fn standardize(word: &[u32]) -> Permutation {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| (word[i], i));
    let mut out: Letters = smallvec::smallvec![0; word.len()];
    for (r, &i) in idx.iter().enumerate() {
        out[i] = (r + 1) as u8;
    }
    Permutation(out)
}

pub fn standardize_letters(word: &[u8]) -> Permutation {
    let mut idx: SmallVec<[usize; 16]> = (0..word.len()).collect();
    idx.sort_by_key(|&i| (word[i], i));
    let mut out: Letters = smallvec::smallvec![0; word.len()];
    for (r, &i) in idx.iter().enumerate() {
        out[i] = (r + 1) as u8;
    }
    Permutation(out)
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument(format!("composition with zero part: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// Composition of `n` whose descent set is `descents ⊆ {1..n-1}`.
    pub fn from_descents(n: usize, descents: &[usize]) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        let mut d: Vec<usize> = descents.to_vec();
        d.sort_unstable();
        for &i in &d {
            assert!(i > last && i < n, "descent {i} out of range for n = {n}");
            parts.push(i - last);
            last = i;
        }
        if n > 0 {
            parts.push(n - last);
        }
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// `self ≤ other` in the refinement order: `Des(self) ⊆ Des(other)`.
    pub fn is_coarser_or_equal(&self, other: &Self) -> bool {
        let mine = self.descent_set();
        let theirs = other.descent_set();
        self.size() == other.size() && mine.iter().all(|d| theirs.contains(d))
    }

    /// All compositions of `n`, ordered by descent-set bitmask.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        (0..1usize << (n - 1))
            .map(|mask| {
                let des: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Composition::from_descents(n, &des)
            })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t);
        let parts = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(text.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn descent_composition(sigma: &Permutation) -> Result<Composition> {
    if sigma.is_empty() {
        return Err(Error::EmptyComposition);
    }
    Ok(Composition::from_descents(sigma.len(), &sigma.descent_set()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// Maximal monotone runs; consecutive runs share their endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub breakpoints: Vec<usize>,
    pub directions: Vec<Direction>,
}

pub fn runs(sigma: &Permutation) -> Result<RunDecomposition> {
    let n = sigma.len();
    if n == 0 {
        return Err(Error::EmptyComposition);
    }
    let v = sigma.letters();
    let mut breakpoints = vec![1];
    let mut directions = Vec::new();
    for i in 1..n {
        let dir = if v[i] > v[i - 1] { Direction::Up } else { Direction::Down };
        if directions.last() == Some(&dir) {
            *breakpoints.last_mut().unwrap() = i + 1;
        } else {
            directions.push(dir);
            breakpoints.push(i + 1);
        }
    }
    Ok(RunDecomposition { breakpoints, directions })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignSequence(pub Vec<Sign>);

impl SignSequence {
    pub fn parse(text: &str) -> Result<Self> {
        text.trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(Error::Parse(text.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignSequence)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All sign sequences of length `n`, `+` before `-` position by position.
    pub fn all(n: usize) -> Vec<Self> {
        (0..1usize << n)
            .map(|mask| {
                SignSequence(
                    (0..n)
                        .map(|i| if mask >> (n - 1 - i) & 1 == 1 { Sign::Minus } else { Sign::Plus })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn stacks(&self) -> Vec<(Sign, usize)> {
        let mut out: Vec<(Sign, usize)> = Vec::new();
        for &s in &self.0 {
            match out.last_mut() {
                Some((last, k)) if *last == s => *k += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// Composition of `len + 1` whose descents sit at the positions of `-`.
    pub fn composition(&self) -> Composition {
        let des: Vec<usize> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Minus)
            .map(|(i, _)| i + 1)
            .collect();
        Composition::from_descents(self.len() + 1, &des)
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Calls `f(u_values, v_values)` for every split of `{1..m+n}` into an
/// `m`-subset and its complement, both sorted increasingly.
pub fn for_each_split(m: usize, n: usize, mut f: impl FnMut(&[u8], &[u8])) {
    let total = m + n;
    let mut chosen: SmallVec<[u8; 16]> = (1..=m as u8).collect();
    let mut rest: SmallVec<[u8; 16]> = SmallVec::new();
    loop {
        rest.clear();
        let mut k = 0;
        for v in 1..=total as u8 {
            if k < m && chosen[k] == v {
                k += 1;
            } else {
                rest.push(v);
            }
        }
        f(&chosen, &rest);
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if (chosen[i] as usize) < total - (m - 1 - i) {
                break;
            }
            if i == 0 {
                return;
            }
        }
        chosen[i] += 1;
        for j in i + 1..m {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

/// Relabels `pattern` (a permutation) with the increasing list `values`.
pub fn relabel(pattern: &Permutation, values: &[u8], out: &mut Letters) {
    for &p in pattern.letters() {
        out.push(values[p as usize - 1]);
    }
}

/// All `γ = uv` with `std(u) = α`, `std(v) = β`.
pub fn convolution_support(alpha: &Permutation, beta: &Permutation) -> Vec<Permutation> {
    let mut out = Vec::new();
    if alpha.is_empty() || beta.is_empty() {
        let only = if alpha.is_empty() { beta } else { alpha };
        return vec![only.clone()];
    }
    for_each_split(alpha.len(), beta.len(), |u, v| {
        let mut w = Letters::new();
        relabel(alpha, u, &mut w);
        relabel(beta, v, &mut w);
        out.push(Permutation(w));
    });
    out
}

pub fn shuffle(u: &Word, v: &Word) -> Result<Vec<Word>> {
    if u.0.iter().any(|x| v.0.contains(x)) {
        return Err(Error::OverlappingAlphabets);
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(u.0.len() + v.0.len());
    shuffle_rec(&u.0, &v.0, &mut cur, &mut out);
    Ok(out)
}

fn shuffle_rec(u: &[u32], v: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Word>) {
    if u.is_empty() || v.is_empty() {
        let mut w = cur.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.push(Word(w));
        return;
    }
    cur.push(u[0]);
    shuffle_rec(&u[1..], v, cur, out);
    cur.pop();
    cur.push(v[0]);
    shuffle_rec(u, &v[1..], cur, out);
    cur.pop();
}

/// Decreasing tree of a word with distinct letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecreasingTree {
    pub label: u32,
    pub left: Option<Box<DecreasingTree>>,
    pub right: Option<Box<DecreasingTree>>,
}

impl DecreasingTree {
    pub fn shape(&self) -> BinaryTree {
        let side = |t: &Option<Box<DecreasingTree>>| t.as_ref().map_or(BinaryTree::Empty, |c| c.shape());
        BinaryTree::node(side(&self.left), side(&self.right))
    }

    /// Infix reading of the labels; recovers the word.
    pub fn infix(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.infix_into(&mut out);
        out
    }

    fn infix_into(&self, out: &mut Vec<u32>) {
        if let Some(l) = &self.left {
            l.infix_into(out);
        }
        out.push(self.label);
        if let Some(r) = &self.right {
            r.infix_into(out);
        }
    }
}

pub fn decreasing_tree(word: &[u32]) -> Result<Option<DecreasingTree>> {
    if !Word(word.to_vec()).has_distinct_letters() {
        return Err(Error::RepeatedLetters(format!("{word:?}")));
    }
    fn build(w: &[u32]) -> Option<DecreasingTree> {
        let (pos, &label) = w.iter().enumerate().max_by_key(|(_, &x)| x)?;
        Some(DecreasingTree {
            label,
            left: build(&w[..pos]).map(Box::new),
            right: build(&w[pos + 1..]).map(Box::new),
        })
    }
    Ok(build(word))
}

/// Shape of the decreasing tree of a permutation.
pub fn dt_shape(sigma: &Permutation) -> BinaryTree {
    fn build(w: &[u8]) -> BinaryTree {
        match w.iter().enumerate().max_by_key(|(_, &x)| x) {
            None => BinaryTree::Empty,
            Some((pos, _)) => BinaryTree::node(build(&w[..pos]), build(&w[pos + 1..])),
        }
    }
    build(sigma.letters())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[5, 9, 2]), p("231"));
        assert_eq!(standardize(&[4, 1, 6, 3]), p("3142"));
        assert_eq!(standardize(&[1, 2, 3, 4]), Permutation::identity(4));
    }

    #[test]
    fn descent_composition_examples() {
        assert_eq!(descent_composition(&p("3142")).unwrap().to_string(), "(1,2,1)");
        assert_eq!(descent_composition(&p("1234")).unwrap().to_string(), "(4)");
        assert_eq!(descent_composition(&p("321")).unwrap().to_string(), "(1,1,1)");
        assert_eq!(descent_composition(&Permutation::empty()), Err(Error::EmptyComposition));
    }

    #[test]
    fn runs_examples() {
        use Direction::*;
        let r = runs(&p("3142")).unwrap();
        assert_eq!(r.breakpoints, vec![1, 2, 3, 4]);
        assert_eq!(r.directions, vec![Down, Up, Down]);
        let r = runs(&p("1234")).unwrap();
        assert_eq!(r.breakpoints, vec![1, 4]);
        assert_eq!(r.directions, vec![Up]);
        let r = runs(&p("132")).unwrap();
        assert_eq!(r.breakpoints, vec![1, 2, 3]);
        assert_eq!(r.directions, vec![Up, Down]);
    }

    #[test]
    fn convolution_support_examples() {
        let set = |v: Vec<Permutation>| {
            let mut s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            s.sort();
            s
        };
        assert_eq!(set(convolution_support(&p("1"), &p("1"))), vec!["12", "21"]);
        assert_eq!(set(convolution_support(&p("12"), &p("1"))), vec!["123", "132", "231"]);
        assert_eq!(set(convolution_support(&p("21"), &p("1"))), vec!["213", "312", "321"]);
    }

    #[test]
    fn shuffle_examples() {
        let w = |v: &[u32]| Word(v.to_vec());
        assert_eq!(shuffle(&w(&[1]), &w(&[2])).unwrap().len(), 2);
        let mut s: Vec<Vec<u32>> = shuffle(&w(&[1, 2]), &w(&[3])).unwrap().into_iter().map(|x| x.0).collect();
        s.sort();
        assert_eq!(s, vec![vec![1, 2, 3], vec![1, 3, 2], vec![3, 1, 2]]);
        assert_eq!(shuffle(&w(&[]), &w(&[4, 2])).unwrap(), vec![w(&[4, 2])]);
        assert_eq!(shuffle(&w(&[1]), &w(&[1])), Err(Error::OverlappingAlphabets));
    }

    #[test]
    fn decreasing_tree_examples() {
        let t = decreasing_tree(&[2, 1, 3]).unwrap().unwrap();
        assert_eq!(t.label, 3);
        assert_eq!(t.left.as_ref().unwrap().label, 2);
        assert!(t.right.is_none());
        let t = decreasing_tree(&[1, 3, 2]).unwrap().unwrap();
        assert_eq!((t.left.unwrap().label, t.right.unwrap().label), (1, 2));
        assert!(decreasing_tree(&[1, 1]).is_err());
        assert_eq!(decreasing_tree(&[7]).unwrap().unwrap().shape(), BinaryTree::leaf_node());
    }

    #[test]
    fn stacks_and_sign_compositions() {
        let e = SignSequence::parse("++-").unwrap();
        assert_eq!(e.stacks(), vec![(Sign::Plus, 2), (Sign::Minus, 1)]);
        assert_eq!(SignSequence::parse("-").unwrap().composition().to_string(), "(1,1)");
        assert_eq!(
            SignSequence::parse("+-+").unwrap().stacks(),
            vec![(Sign::Plus, 1), (Sign::Minus, 1), (Sign::Plus, 1)]
        );
        assert_eq!(SignSequence::parse("+-").unwrap().composition().to_string(), "(2,1)");
    }

    #[test]
    fn rank_round_trip() {
        for (r, s) in Permutation::all(5).iter().enumerate() {
            assert_eq!(s.rank(), r);
            assert_eq!(&Permutation::unrank(5, r), s);
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("[3,1,4,2]"), p("3142"));
        assert!(Permutation::parse("1123").is_err());
        assert_eq!(p("[]"), Permutation::empty());
        assert_eq!(Permutation::new(&(1..=10).collect::<Vec<_>>()).unwrap().to_string(), "[1,2,3,4,5,6,7,8,9,10]");
    }

    #[test]
    fn inverse_and_compose() {
        let s = p("3142");
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(4));
        assert_eq!(s.reversal(), p("2413"));
        assert_eq!(s.maj(), 4);
    }
}
