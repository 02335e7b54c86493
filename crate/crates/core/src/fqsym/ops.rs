use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{FqsymElement, TensorElement};
use crate::error::{Error, Result};
use crate::perm::{for_each_split, relabel, symmetric_group, Letters, Permutation};
use crate::scalar::{Scalar, Q};

/// Half of the product selected by where the largest letter lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `≺`: the maximum is in the left factor.
    Left,
    /// `≻`: the maximum is in the right factor.
    Right,
}

/// Quarter of the product selected by where `1` and the maximum land.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    /// `1` and max in the left factor.
    NW,
    /// `1` in the right factor, max in the left.
    SW,
    /// `1` and max in the right factor.
    SE,
    /// `1` in the left factor, max in the right.
    NE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NW, Corner::SW, Corner::SE, Corner::NE];

    fn keeps(self, one_left: bool, max_left: bool) -> bool {
        match self {
            Corner::NW => one_left && max_left,
            Corner::SW => !one_left && max_left,
            Corner::SE => !one_left && !max_left,
            Corner::NE => one_left && !max_left,
        }
    }
}

fn product_filtered<C: Scalar>(
    x: &FqsymElement<C>,
    y: &FqsymElement<C>,
    keep: impl Fn(&[u8], &[u8]) -> bool,
) -> FqsymElement<C> {
    let (m, n) = (x.grade(), y.grade());
    let mut out = FqsymElement::zero(m + n);
    let pairs: Vec<(&Permutation, &Permutation, C)> = x
        .terms()
        .flat_map(|(a, c)| y.terms().map(move |(b, d)| (a, b, c.mul_ref(d))))
        .filter(|p| !p.2.is_zero())
        .collect();
    if pairs.is_empty() {
        return out;
    }
    for_each_split(m, n, |u, v| {
        if !keep(u, v) {
            return;
        }
        for (a, b, c) in &pairs {
            let mut w = Letters::new();
            relabel(a, u, &mut w);
            relabel(b, v, &mut w);
            out.add_term(Permutation::from_letters(w), c);
        }
    });
    out
}

/// Convolution product `G_α G_β = Σ_{γ ∈ α ∗ β} G_γ`.
pub fn product<C: Scalar>(x: &FqsymElement<C>, y: &FqsymElement<C>) -> FqsymElement<C> {
    if x.grade() == 0 {
        return y.scale(&x.coeff(&Permutation::empty()));
    }
    if y.grade() == 0 {
        return x.scale(&y.coeff(&Permutation::empty()));
    }
    product_filtered(x, y, |_, _| true)
}

fn require_augmented<C: Scalar>(x: &FqsymElement<C>, y: &FqsymElement<C>) -> Result<()> {
    if x.grade() == 0 || y.grade() == 0 {
        Err(Error::UnitOperand)
    } else {
        Ok(())
    }
}

pub fn half_product<C: Scalar>(side: Side, x: &FqsymElement<C>, y: &FqsymElement<C>) -> Result<FqsymElement<C>> {
    require_augmented(x, y)?;
    let top = (x.grade() + y.grade()) as u8;
    Ok(product_filtered(x, y, |u, _| (u.last() == Some(&top)) == (side == Side::Left)))
}

pub fn quadri_product<C: Scalar>(corner: Corner, x: &FqsymElement<C>, y: &FqsymElement<C>) -> Result<FqsymElement<C>> {
    require_augmented(x, y)?;
    let top = (x.grade() + y.grade()) as u8;
    Ok(product_filtered(x, y, |u, _| corner.keeps(u.first() == Some(&1), u.last() == Some(&top))))
}

/// `x ▷ y = x ≻ y − y ≺ x`.
pub fn prelie<C: Scalar>(x: &FqsymElement<C>, y: &FqsymElement<C>) -> Result<FqsymElement<C>> {
    let a = half_product(Side::Right, x, y)?;
    let b = half_product(Side::Left, y, x)?;
    Ok(&a - &b)
}

/// `x ↗ y − y ↙ x`.
pub fn nesw_bracket<C: Scalar>(x: &FqsymElement<C>, y: &FqsymElement<C>) -> Result<FqsymElement<C>> {
    let a = quadri_product(Corner::NE, x, y)?;
    let b = quadri_product(Corner::SW, y, x)?;
    Ok(&a - &b)
}

/// Convolution bracket `xy − yx`.
pub fn lie_bracket<C: Scalar>(x: &FqsymElement<C>, y: &FqsymElement<C>) -> FqsymElement<C> {
    &product(x, y) - &product(y, x)
}

/// Splits `σ` at the value threshold `i`: letters `≤ i` and the
/// standardized letters `> i`.
fn split_at_value(sigma: &Permutation, i: usize) -> (Permutation, Permutation) {
    let low: Letters = sigma.letters().iter().copied().filter(|&v| (v as usize) <= i).collect();
    let high: Letters = sigma.letters().iter().filter(|&&v| (v as usize) > i).map(|&v| v - i as u8).collect();
    (Permutation::from_letters(low), Permutation::from_letters(high))
}

fn coproduct_filtered<C: Scalar>(x: &FqsymElement<C>, keep: impl Fn(&Permutation, usize) -> bool) -> TensorElement<C> {
    let mut out = TensorElement::zero();
    let n = x.grade();
    for (sigma, c) in x.terms() {
        for i in 0..=n {
            if keep(sigma, i) {
                let (l, r) = split_at_value(sigma, i);
                out.add_term(l, r, c);
            }
        }
    }
    out
}

/// `ΔG_σ = Σ_i G_{σ|[1,i]} ⊗ G_{std(σ|[i+1,n])}`.
pub fn coproduct<C: Scalar>(x: &FqsymElement<C>) -> TensorElement<C> {
    coproduct_filtered(x, |_, _| true)
}

pub fn reduced_coproduct<C: Scalar>(x: &FqsymElement<C>) -> TensorElement<C> {
    let n = x.grade();
    coproduct_filtered(x, |_, i| i > 0 && i < n)
}

pub fn is_primitive<C: Scalar>(x: &FqsymElement<C>) -> bool {
    reduced_coproduct(x).is_zero()
}

pub fn quadri_coproduct<C: Scalar>(corner: Corner, x: &FqsymElement<C>) -> Result<TensorElement<C>> {
    if x.grade() == 0 {
        return Err(Error::UnitOperand);
    }
    let n = x.grade();
    Ok(coproduct_filtered(x, |sigma, i| {
        if i == 0 || i == n {
            return false;
        }
        let first_left = sigma.at(1) <= i;
        let last_left = sigma.at(n) <= i;
        corner.keeps(first_left, last_left)
    }))
}

/// Lexicographic rank of a permutation of `1..=n`, `n ≤ 12`.
fn lex_rank(p: &[u8], fact: &[u32]) -> usize {
    let n = p.len();
    let mut used: u16 = 0;
    let mut r = 0usize;
    for (i, &v) in p.iter().enumerate() {
        let smaller = (v as u32 - 1) - (used & ((1u16 << (v - 1)) - 1)).count_ones();
        r += smaller as usize * fact[n - 1 - i] as usize;
        used |= 1 << (v - 1);
    }
    r
}

/// Splits an element into rational slices along the scalar's `Q`-basis.
fn rational_slices<C: Scalar>(x: &FqsymElement<C>) -> Vec<(u64, Vec<(&Permutation, Q)>)> {
    let mut slices: HashMap<u64, Vec<(&Permutation, Q)>> = HashMap::new();
    for (sigma, c) in x.terms() {
        for (k, v) in c.parts() {
            slices.entry(k).or_default().push((sigma, v));
        }
    }
    let mut out: Vec<_> = slices.into_iter().collect();
    out.sort_by_key(|s| s.0);
    out
}

fn group_by_value<'a>(slice: &[(&'a Permutation, Q)]) -> Vec<(Q, Vec<&'a Permutation>)> {
    let mut groups: HashMap<&Q, Vec<&'a Permutation>> = HashMap::new();
    for (sigma, v) in slice {
        groups.entry(v).or_default().push(sigma);
    }
    let mut out: Vec<(Q, Vec<&Permutation>)> = groups.into_iter().map(|(v, s)| (v.clone(), s)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// `G_σ * G_τ = G_{τ∘σ}` for equal grades, `0` otherwise.
pub fn internal_product<C: Scalar>(x: &FqsymElement<C>, y: &FqsymElement<C>) -> FqsymElement<C> {
    let n = x.grade();
    if n != y.grade() || x.is_zero() || y.is_zero() {
        return FqsymElement::zero(n);
    }
    if n > 9 {
        let mut out = FqsymElement::zero(n);
        for (sigma, c) in x.terms() {
            for (tau, d) in y.terms() {
                out.add_term(tau.compose(sigma), &c.mul_ref(d));
            }
        }
        return out;
    }
    // A representative carrying whatever extra structure the scalars have
    // (the order of a root of unity), used to rebuild basis scalars.
    let mut like = C::one();
    for (_, c) in x.terms().chain(y.terms()) {
        like.add_assign_ref(&c.mul_ref(&C::zero()));
    }
    let fact: Vec<u32> = (0..=n as u32).scan(1u32, |acc, k| {
        let f = *acc;
        *acc *= k + 1;
        Some(f)
    }).collect();
    let size = fact[n] as usize;
    let group = symmetric_group(n);
    let xs = rational_slices(x);
    let ys = rational_slices(y);
    let mut counts = vec![0u32; size];
    let mut touched: Vec<usize> = Vec::new();
    let mut result: HashMap<usize, C> = HashMap::new();
    let mut buf = vec![0u8; n];
    for (kx, sx) in &xs {
        let gx = group_by_value(sx);
        for (ky, sy) in &ys {
            let gy = group_by_value(sy);
            let mut acc: Vec<Q> = vec![Q::zero(); 0];
            let mut acc_index: HashMap<usize, usize> = HashMap::new();
            for (v, sigmas) in &gx {
                for (w, taus) in &gy {
                    for sigma in sigmas {
                        let s = sigma.letters();
                        for tau in taus {
                            let t = tau.letters();
                            for i in 0..n {
                                buf[i] = t[s[i] as usize - 1];
                            }
                            let r = lex_rank(&buf, &fact);
                            if counts[r] == 0 {
                                touched.push(r);
                            }
                            counts[r] += 1;
                        }
                    }
                    let vw = v * w;
                    for &r in &touched {
                        let term = &vw * Q::from_integer(counts[r].into());
                        counts[r] = 0;
                        match acc_index.get(&r) {
                            Some(&k) => acc[k] += term,
                            None => {
                                acc_index.insert(r, acc.len());
                                acc.push(term);
                            }
                        }
                    }
                    touched.clear();
                }
            }
            let basis = C::from_part(*kx, Q::one(), &like).mul_ref(&C::from_part(*ky, Q::one(), &like));
            for (r, k) in acc_index {
                if acc[k].is_zero() {
                    continue;
                }
                let term = basis.mul_ref(&C::from_q(acc[k].clone()));
                let entry = result.entry(r).or_insert_with(C::zero);
                entry.add_assign_ref(&term);
            }
        }
    }
    let mut out = FqsymElement::zero(n);
    for (r, c) in result {
        out.add_term(group[r].clone(), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, CycloScalar};

    fn g(s: &str) -> FqsymElement {
        FqsymElement::basis(Permutation::parse(s).unwrap())
    }

    fn sum(perms: &[&str]) -> FqsymElement {
        let mut x = FqsymElement::zero(perms[0].len());
        for p in perms {
            x = &x + &g(p);
        }
        x
    }

    #[test]
    fn product_examples() {
        assert_eq!(product(&g("1"), &g("1")), sum(&["12", "21"]));
        assert_eq!(product(&g("12"), &g("1")), sum(&["123", "132", "231"]));
        assert_eq!(product(&g("132"), &FqsymElement::unit()), g("132"));
    }

    #[test]
    fn half_product_examples() {
        assert_eq!(half_product(Side::Right, &g("1"), &g("1")).unwrap(), g("12"));
        assert_eq!(half_product(Side::Left, &g("1"), &g("1")).unwrap(), g("21"));
        assert_eq!(half_product(Side::Right, &g("2413"), &g("1")).unwrap(), g("24135"));
        assert_eq!(half_product(Side::Left, &g("1"), &g("2413")).unwrap(), g("52413"));
        assert!(matches!(half_product(Side::Left, &FqsymElement::unit(), &g("1")), Err(Error::UnitOperand)));
    }

    #[test]
    fn quadri_examples() {
        assert_eq!(quadri_product(Corner::NE, &g("1"), &g("1")).unwrap(), g("12"));
        assert_eq!(quadri_product(Corner::SW, &g("1"), &g("1")).unwrap(), g("21"));
        assert!(quadri_product(Corner::NW, &g("1"), &g("1")).unwrap().is_zero());
        assert!(quadri_product(Corner::SE, &g("1"), &g("1")).unwrap().is_zero());
        let mut total = FqsymElement::zero(3);
        for c in Corner::ALL {
            total = &total + &quadri_product(c, &g("12"), &g("1")).unwrap();
        }
        assert_eq!(total, product(&g("12"), &g("1")));
    }

    #[test]
    fn quadri_coproduct_examples() {
        let ne = quadri_coproduct(Corner::NE, &g("12")).unwrap();
        assert_eq!(ne.coeff(&Permutation::parse("1").unwrap(), &Permutation::parse("1").unwrap()), q(1));
        assert_eq!(ne.len(), 1);
        assert!(quadri_coproduct(Corner::SE, &g("12")).unwrap().is_zero());
        for sigma in Permutation::all(4) {
            let x = FqsymElement::<Q>::basis(sigma);
            let mut total = TensorElement::zero();
            for c in Corner::ALL {
                total.add_scaled(&quadri_coproduct(c, &x).unwrap(), &q(1));
            }
            assert_eq!(total, reduced_coproduct(&x));
        }
    }

    #[test]
    fn coproduct_examples() {
        assert!(reduced_coproduct(&(&g("12") - &g("21"))).is_zero());
        assert!(!is_primitive(&g("12")));
        let psi3 = sum(&["123", "321"]);
        let psi3 = &psi3 - &sum(&["213", "312"]);
        assert!(is_primitive(&psi3));
    }

    #[test]
    fn prelie_examples() {
        let x = g("1");
        let psi2 = prelie(&x, &x).unwrap();
        assert_eq!(psi2, &g("12") - &g("21"));
        let psi3 = prelie(&psi2, &x).unwrap();
        let expected = &(&g("123") - &g("213")) - &(&g("312") - &g("321"));
        assert_eq!(psi3, expected);
        assert_eq!(nesw_bracket(&x, &x).unwrap(), psi2);
        assert!(is_primitive(&nesw_bracket(&psi2, &psi2).unwrap()));
    }

    #[test]
    fn internal_product_examples() {
        assert_eq!(internal_product(&g("21"), &g("21")), g("12"));
        let psi2 = &g("12") - &g("21");
        assert_eq!(internal_product(&psi2, &psi2), psi2.scale(&q(2)));
        assert!(internal_product(&g("12"), &g("123")).is_zero());
        // Orientation: G_σ * G_τ = G_{τ∘σ}.
        let sigma = Permutation::parse("231").unwrap();
        let tau = Permutation::parse("213").unwrap();
        assert_eq!(
            internal_product(&FqsymElement::<Q>::basis(sigma.clone()), &FqsymElement::basis(tau.clone())),
            FqsymElement::basis(tau.compose(&sigma))
        );
    }

    #[test]
    fn internal_product_matches_naive() {
        let x: FqsymElement = FqsymElement::from_terms(
            4,
            Permutation::all(4).into_iter().enumerate().map(|(i, s)| (s, q((i % 3) as i64 - 1))),
        )
        .unwrap();
        let y: FqsymElement = FqsymElement::from_terms(
            4,
            Permutation::all(4).into_iter().enumerate().map(|(i, s)| (s, q((i % 5) as i64))),
        )
        .unwrap();
        let mut naive = FqsymElement::zero(4);
        for (s, c) in x.terms() {
            for (t, d) in y.terms() {
                naive.add_term(t.compose(s), &(c * d));
            }
        }
        assert_eq!(internal_product(&x, &y), naive);
    }

    #[test]
    fn internal_product_cyclotomic() {
        let w = CycloScalar::omega_power(3, 1);
        let x: FqsymElement<CycloScalar> =
            FqsymElement::from_terms(2, vec![(Permutation::parse("12").unwrap(), w.clone())]).unwrap();
        let y = internal_product(&x, &x);
        assert_eq!(y.coeff(&Permutation::parse("12").unwrap()), w.mul_ref(&w));
    }
}
