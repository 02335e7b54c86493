//! Axiom checks shared by the property suites and the acceptance run.
#![allow(dead_code)]

use lieforge_core::fqsym::{
    coproduct, half_product, internal_product, prelie, product, quadri_product, ribbon, Corner, FqsymElement, Side,
    TensorElement,
};
use lieforge_core::perm::{Composition, Permutation};
use lieforge_core::scalar::{q, Q};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

pub type Elem = FqsymElement<Q>;

/// Nonzero element of grade `n` with a few small integer coefficients.
pub fn element(n: usize) -> impl Strategy<Value = Elem> {
    let count: usize = (1..=n).product();
    prop::collection::vec((0..count, -3i64..=3), 1..4).prop_map(move |terms| {
        let mut x = Elem::zero(n);
        for (rank, c) in terms {
            x.add_term(Permutation::unrank(n, rank), &q(c));
        }
        if x.is_zero() {
            x.add_term(Permutation::identity(n), &q(1));
        }
        x
    })
}

/// Elements whose grades sum to at most `max_total`, each grade at least 1.
pub fn triple(max_total: usize) -> impl Strategy<Value = (Elem, Elem, Elem)> {
    (1..=max_total - 2, 1..=max_total - 2, 1..=max_total - 2)
        .prop_filter("total grade", move |(a, b, c)| a + b + c <= max_total)
        .prop_flat_map(|(a, b, c)| (element(a), element(b), element(c)))
}

pub fn pair(max_total: usize) -> impl Strategy<Value = (Elem, Elem)> {
    (1..max_total, 1..max_total)
        .prop_filter("total grade", move |(a, b)| a + b <= max_total)
        .prop_flat_map(|(a, b)| (element(a), element(b)))
}

/// Sum of ribbons indexed by random compositions of `n`.
pub fn ribbon_element(n: usize) -> impl Strategy<Value = Elem> {
    let all = Composition::all(n);
    let k = all.len();
    prop::collection::vec((0..k, -2i64..=2), 1..3).prop_map(move |terms| {
        let mut x = Elem::zero(n);
        for (i, c) in terms {
            x.add_scaled(&ribbon(&all[i]), &q(c));
        }
        x
    })
}

fn ensure(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn left(x: &Elem, y: &Elem) -> Elem {
    half_product(Side::Left, x, y).unwrap()
}

fn right(x: &Elem, y: &Elem) -> Elem {
    half_product(Side::Right, x, y).unwrap()
}

fn corner(c: Corner, x: &Elem, y: &Elem) -> Elem {
    quadri_product(c, x, y).unwrap()
}

/// `≺` is `↖ + ↙`, `≻` is `↗ + ↘`, `∧` is `↖ + ↗`, `∨` is `↙ + ↘`.
fn corners(cs: &[Corner], x: &Elem, y: &Elem) -> Elem {
    let mut out = Elem::zero(x.grade() + y.grade());
    for &c in cs {
        out = &out + &corner(c, x, y);
    }
    out
}

pub fn dendriform((x, y, z): &(Elem, Elem, Elem)) -> Result<(), TestCaseError> {
    ensure(left(&left(x, y), z) == left(x, &product(y, z)), "(x≺y)≺z = x≺(yz)")?;
    ensure(left(&right(x, y), z) == right(x, &left(y, z)), "(x≻y)≺z = x≻(y≺z)")?;
    ensure(right(&product(x, y), z) == right(x, &right(y, z)), "(xy)≻z = x≻(y≻z)")
}

pub fn quadri((x, y, z): &(Elem, Elem, Elem)) -> Result<(), TestCaseError> {
    use Corner::{NE, NW, SE, SW};
    let prec = [NW, SW];
    let succ = [NE, SE];
    let wedge = [NW, NE];
    let vee = [SW, SE];
    let all = Corner::ALL;
    let relations: [(Elem, Elem, &str); 9] = [
        (corner(NW, &corner(NW, x, y), z), corner(NW, x, &corners(&all, y, z)), "(x↖y)↖z = x↖(yz)"),
        (corner(NW, &corner(NE, x, y), z), corner(NE, x, &corners(&prec, y, z)), "(x↗y)↖z = x↗(y≺z)"),
        (corner(NE, &corners(&wedge, x, y), z), corner(NE, x, &corners(&succ, y, z)), "(x∧y)↗z = x↗(y≻z)"),
        (corner(NW, &corner(SW, x, y), z), corner(SW, x, &corners(&wedge, y, z)), "(x↙y)↖z = x↙(y∧z)"),
        (corner(NW, &corner(SE, x, y), z), corner(SE, x, &corner(NW, y, z)), "(x↘y)↖z = x↘(y↖z)"),
        (corner(NE, &corners(&vee, x, y), z), corner(SE, x, &corner(NE, y, z)), "(x∨y)↗z = x↘(y↗z)"),
        (corner(SW, &corners(&prec, x, y), z), corner(SW, x, &corners(&vee, y, z)), "(x≺y)↙z = x↙(y∨z)"),
        (corner(SW, &corners(&succ, x, y), z), corner(SE, x, &corner(SW, y, z)), "(x≻y)↙z = x↘(y↙z)"),
        (corner(SE, &corners(&all, x, y), z), corner(SE, x, &corner(SE, y, z)), "(xy)↘z = x↘(y↘z)"),
    ];
    for (lhs, rhs, name) in relations {
        ensure(lhs == rhs, name)?;
    }
    Ok(())
}

/// `(x▷y)▷z − x▷(y▷z)` is symmetric in `y, z`.
pub fn prelie_symmetry((x, y, z): &(Elem, Elem, Elem)) -> Result<(), TestCaseError> {
    let p = |a: &Elem, b: &Elem| prelie(a, b).unwrap();
    let assoc = |a: &Elem, b: &Elem, c: &Elem| &p(&p(a, b), c) - &p(a, &p(b, c));
    ensure(assoc(x, y, z) == assoc(y, x, z), "associator symmetric in the first two arguments")
}

pub fn hopf((x, y): &(Elem, Elem)) -> Result<(), TestCaseError> {
    ensure(coproduct(&product(x, y)) == coproduct(x).mul(&coproduct(y)), "Δ(xy) = Δ(x)Δ(y)")
}

/// `(F₁F₂) * G = μ[(F₁ ⊗ F₂) * ΔG]`.
pub fn splitting((f1, f2, g): &(Elem, Elem, Elem)) -> Result<(), TestCaseError> {
    let (m, n) = (f1.grade(), f2.grade());
    let lhs = internal_product(&product(f1, f2), g);
    let mut pieces = TensorElement::<Q>::zero();
    for ((u, v), c) in coproduct(g).terms() {
        if u.len() != m || v.len() != n {
            continue;
        }
        let mut t = TensorElement::zero();
        for (a, ca) in internal_product(f1, &Elem::basis(u.clone())).terms() {
            for (b, cb) in internal_product(f2, &Elem::basis(v.clone())).terms() {
                t.add_term(a.clone(), b.clone(), &(ca * cb));
            }
        }
        pieces.add_scaled(&t, c);
    }
    ensure(lhs == pieces.multiply_out(m + n), "splitting formula")
}

/// Ribbon operands `F₁, F₂` and `G` of grade `|F₁| + |F₂| ≤ max_total`.
pub fn splitting_operands(max_total: usize) -> impl Strategy<Value = (Elem, Elem, Elem)> {
    (1..max_total, 1..max_total)
        .prop_filter("total grade", move |(a, b)| a + b <= max_total)
        .prop_flat_map(|(a, b)| (ribbon_element(a), ribbon_element(b), ribbon_element(a + b)))
}

pub const SEED: [u8; 32] = *b"lieforge axiom suites, fixed rng";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn report<T: std::fmt::Debug>(name: &str, r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| format!("{name}: {e}"))
}

/// Runs every suite with the fixed seed; the first failure, if any.
pub fn run_all(cases: u32) -> Result<(), String> {
    report("dendriform", runner(cases).run(&triple(5), |t| dendriform(&t)))?;
    report("quadri", runner(cases).run(&triple(5), |t| quadri(&t)))?;
    report("prelie", runner(cases).run(&triple(5), |t| prelie_symmetry(&t)))?;
    report("hopf", runner(cases).run(&pair(5), |p| hopf(&p)))?;
    report("splitting", runner(cases).run(&splitting_operands(5), |t| splitting(&t)))?;
    Ok(())
}
