//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are sorted `(index, value)` lists without zeros. Pivots are the
//! smallest index of each row, so pivot order follows the index order
//! chosen by the caller (lexicographic rank for permutations).

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::scalar::Q;

pub type SparseRow = Vec<(u32, Q)>;

/// `v - c * w`.
pub fn axpy(v: &[(u32, Q)], c: &Q, w: &[(u32, Q)]) -> SparseRow {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(c * &w[j].1)));
            j += 1;
        } else {
            let x = &v[i].1 - c * &w[j].1;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_row(v: &[(u32, Q)], c: &Q) -> SparseRow {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// Builds a sorted row from unsorted entries, summing duplicates.
pub fn row_from_entries(entries: impl IntoIterator<Item = (u32, Q)>) -> SparseRow {
    let mut v: Vec<(u32, Q)> = entries.into_iter().collect();
    v.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseRow,
    combo: SparseRow,
}

/// Echelon basis of a span, optionally remembering how each row is built
/// from the input vectors.
#[derive(Clone, Debug, Default)]
pub struct SubspaceBasis {
    rows: Vec<Row>,
    pivot_of: HashMap<u32, usize>,
    inputs: u32,
    track: bool,
    reduced: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    /// Coordinates on the input vectors (sparse, by input position).
    InSpan(SparseRow),
    /// Non-zero residue after reduction; its first entry is a witness index.
    NotInSpan(SparseRow),
}

impl SubspaceBasis {
    pub fn new(track: bool) -> Self {
        SubspaceBasis { track, ..Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs as usize
    }

    /// Rows sorted by pivot.
    pub fn rows(&self) -> Vec<&SparseRow> {
        let mut r: Vec<&Row> = self.rows.iter().collect();
        r.sort_by_key(|row| row.vec[0].0);
        r.into_iter().map(|row| &row.vec).collect()
    }

    pub fn pivots(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.pivot_of.keys().copied().collect();
        p.sort_unstable();
        p
    }

    fn reduce_from(&self, mut v: SparseRow, mut combo: SparseRow, mut pos: usize) -> (SparseRow, SparseRow) {
        loop {
            let hit = v[pos.min(v.len())..]
                .iter()
                .enumerate()
                .find_map(|(k, (idx, _))| self.pivot_of.get(idx).map(|&r| (pos + k, r)));
            let Some((k, r)) = hit else { break };
            let c = v[k].1.clone();
            v = axpy(&v, &c, &self.rows[r].vec);
            if self.track {
                combo = axpy(&combo, &c, &self.rows[r].combo);
            }
            pos = k;
        }
        (v, combo)
    }

    /// Adds a vector; returns a linear relation among the inputs when the
    /// vector was already in the span (`Σ relation_j input_j = 0`).
    pub fn insert(&mut self, v: SparseRow) -> Option<SparseRow> {
        let id = self.inputs;
        self.inputs += 1;
        let combo = if self.track { vec![(id, Q::one())] } else { Vec::new() };
        let (v, combo) = self.reduce_from(v, combo, 0);
        if v.is_empty() {
            return Some(combo);
        }
        let inv = Q::one() / &v[0].1;
        let vec = scale_row(&v, &inv);
        let combo = scale_row(&combo, &inv);
        self.pivot_of.insert(vec[0].0, self.rows.len());
        self.rows.push(Row { vec, combo });
        self.reduced = false;
        None
    }

    /// Brings the rows to reduced row-echelon form.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].vec[0].0));
        for r in order {
            let row = std::mem::take(&mut self.rows[r]);
            let (vec, combo) = self.reduce_from(row.vec, row.combo, 1);
            self.rows[r] = Row { vec, combo };
        }
        self.reduced = true;
    }

    pub fn membership(&self, v: &[(u32, Q)]) -> Membership {
        let (residue, combo) = self.reduce_from(v.to_vec(), Vec::new(), 0);
        if residue.is_empty() {
            Membership::InSpan(scale_row(&combo, &-Q::one()))
        } else {
            Membership::NotInSpan(residue)
        }
    }

    pub fn contains(&self, v: &[(u32, Q)]) -> bool {
        self.reduce_from(v.to_vec(), Vec::new(), 0).0.is_empty()
    }
}

impl Default for Row {
    fn default() -> Self {
        Row { vec: Vec::new(), combo: Vec::new() }
    }
}

/// Reduced echelon basis of the span of `vs`.
pub fn echelonize(vs: &[SparseRow]) -> SubspaceBasis {
    let mut b = SubspaceBasis::new(false);
    for v in vs {
        b.insert(v.clone());
    }
    b.make_reduced();
    b
}

pub fn rank(vs: &[SparseRow]) -> usize {
    let mut b = SubspaceBasis::new(false);
    for v in vs {
        b.insert(v.clone());
    }
    b.rank()
}

/// Basis of `{α : Σ α_i vs_i = 0}`.
pub fn kernel(vs: &[SparseRow]) -> Vec<SparseRow> {
    let mut b = SubspaceBasis::new(true);
    vs.iter().filter_map(|v| b.insert(v.clone())).collect()
}

/// Basis of `span(a) ∩ span(b)`.
pub fn intersect(a: &[SparseRow], b: &[SparseRow]) -> SubspaceBasis {
    let mut stacked: Vec<SparseRow> = a.to_vec();
    stacked.extend(b.iter().cloned());
    let p = a.len() as u32;
    let mut out = SubspaceBasis::new(false);
    for rel in kernel(&stacked) {
        let mut element: SparseRow = Vec::new();
        for (i, c) in rel.iter().filter(|(i, _)| *i < p) {
            element = axpy(&element, &-c.clone(), &a[*i as usize]);
        }
        if !element.is_empty() {
            out.insert(element);
        }
    }
    out.make_reduced();
    out
}

/// Coordinates of `target` on the given columns, or `None` if it is not
/// in their span. Columns are dense vectors of equal length.
pub fn solve_dense(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let to_row = |v: &[Q]| row_from_entries(v.iter().enumerate().map(|(i, x)| (i as u32, x.clone())));
    let mut b = SubspaceBasis::new(true);
    for c in columns {
        b.insert(to_row(c));
    }
    match b.membership(&to_row(target)) {
        Membership::InSpan(coords) => {
            let mut out = vec![Q::zero(); columns.len()];
            for (i, x) in coords {
                out[i as usize] = x;
            }
            Some(out)
        }
        Membership::NotInSpan(_) => None,
    }
}

/// The Mersenne prime `2^61 − 1`.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut out = 1;
    while e > 0 {
        if e & 1 == 1 {
            out = mul_mod(out, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    out
}

/// Image of a rational in `F_p`, `None` if `p` divides the denominator.
pub fn reduce_mod_p(x: &Q) -> Option<u64> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let m = BigInt::from(MODULUS);
    let residue = |v: &BigInt| (((v % &m) + &m) % &m).to_u64().expect("below the modulus");
    let d = residue(x.denom());
    (d != 0).then(|| mul_mod(residue(x.numer()), pow_mod(d, MODULUS - 2)))
}

/// Rank over `F_p`, `p = 2^61 − 1`; never more than the rank over `Q`.
pub fn rank_mod_p(vs: &[SparseRow]) -> usize {
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for v in vs {
        let mut row: std::collections::BTreeMap<u32, u64> = std::collections::BTreeMap::new();
        for (i, x) in v {
            if let Some(r) = reduce_mod_p(x).filter(|r| *r != 0) {
                row.insert(*i, r);
            }
        }
        while let Some((&lead, &c)) = row.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                let inv = pow_mod(c, MODULUS - 2);
                pivots.insert(lead, row.iter().map(|(&i, &x)| (i, mul_mod(x, inv))).collect());
                break;
            };
            for &(i, x) in p {
                let e = row.entry(i).or_insert(0);
                *e = (*e + MODULUS - mul_mod(c, x)) % MODULUS;
                if *e == 0 {
                    row.remove(&i);
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn row(v: &[(u32, i64)]) -> SparseRow {
        row_from_entries(v.iter().map(|(i, x)| (*i, q(*x))))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[row(&[(0, 1), (1, -1)]), row(&[(0, 1), (1, 1)])]), 2);
        let v = row(&[(2, 3), (5, 1)]);
        assert_eq!(rank(&[v.clone(), scale_row(&v, &q(2))]), 1);
    }

    #[test]
    fn membership_reconstructs() {
        let vs = vec![row(&[(0, 1), (3, 2)]), row(&[(1, 1), (3, -1)]), row(&[(0, 2), (1, 1), (3, 3)])];
        let mut b = SubspaceBasis::new(true);
        for v in &vs {
            b.insert(v.clone());
        }
        let target = row(&[(0, 3), (1, -2), (3, 8)]);
        let Membership::InSpan(coords) = b.membership(&target) else { panic!("expected in span") };
        let mut rebuilt: SparseRow = Vec::new();
        for (i, c) in &coords {
            rebuilt = axpy(&rebuilt, &-c.clone(), &vs[*i as usize]);
        }
        assert_eq!(rebuilt, target);
        assert!(matches!(b.membership(&row(&[(2, 1)])), Membership::NotInSpan(_)));
        assert_eq!(b.membership(&[]), Membership::InSpan(Vec::new()));
    }

    #[test]
    fn kernel_and_intersection() {
        let vs = vec![row(&[(0, 1)]), row(&[(1, 1)]), row(&[(0, 1), (1, 1)])];
        let k = kernel(&vs);
        assert_eq!(k.len(), 1);
        let a = vec![row(&[(0, 1)]), row(&[(1, 1)])];
        let b = vec![row(&[(0, 1), (1, 1)]), row(&[(2, 1)])];
        assert_eq!(intersect(&a, &b).rank(), 1);
        assert_eq!(intersect(&a, &a).rank(), 2);
        assert_eq!(intersect(&a, &[row(&[(2, 1)])]).rank(), 0);
    }

    #[test]
    fn reduced_form_is_reduced() {
        let vs = vec![row(&[(0, 1), (1, 2), (2, 3)]), row(&[(1, 1), (2, 1)]), row(&[(2, 5)])];
        let b = echelonize(&vs);
        let rows = b.rows();
        assert_eq!(rows.len(), 3);
        for r in rows {
            assert_eq!(r.len(), 1);
        }
    }

    #[test]
    fn rank_modulo_prime() {
        let vs = vec![row(&[(0, 1), (1, 2)]), row(&[(0, 3), (1, 6)]), row(&[(2, 1)])];
        assert_eq!(rank_mod_p(&vs), rank(&vs));
        assert_eq!(reduce_mod_p(&crate::scalar::q_frac(1, 2)).map(|h| h * 2 % MODULUS), Some(1));
    }

    #[test]
    fn dense_solve() {
        let cols = vec![vec![q(1), q(0)], vec![q(1), q(1)]];
        assert_eq!(solve_dense(&cols, &[q(3), q(2)]).unwrap(), vec![q(1), q(2)]);
    }
}
