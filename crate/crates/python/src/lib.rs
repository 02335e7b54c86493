//! Python bindings: FQSym elements over the rationals, the idempotent
//! families, the Catalan and PBW bases, tree classes, flows and the CLI.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lieforge_core::classes::{self, Ambient, ClassKind};
use lieforge_core::fqsym::{self, FqsymElement};
use lieforge_core::idempotents::{self, Family};
use lieforge_core::lie::{self, Bracket};
use lieforge_core::perm::Permutation;
use lieforge_core::scalar::{self, Poly2, Q};
use lieforge_core::trees::{BinaryTree, PlaneTree};
use lieforge_core::{cli, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_q(text: &str) -> PyResult<Q> {
    scalar::parse_q(text).map_err(err)
}

fn family(name: &str) -> PyResult<Family> {
    match name {
        "dynkin" => Ok(Family::Dynkin),
        "solomon" => Ok(Family::Solomon),
        "klyachko" => Ok(Family::Klyachko),
        "catalan" => Ok(Family::Catalan),
        _ => Err(PyValueError::new_err(format!("unknown family {name}"))),
    }
}

fn class_kind(name: &str) -> PyResult<ClassKind> {
    match name.to_ascii_lowercase().as_str() {
        "l" => Ok(ClassKind::L),
        "lr" => Ok(ClassKind::LR),
        _ => Err(PyValueError::new_err(format!("unknown class kind {name}"))),
    }
}

fn ambient(name: &str) -> PyResult<Ambient> {
    match name.to_ascii_lowercase().as_str() {
        "pbt" => Ok(Ambient::Pbt),
        "sym" => Ok(Ambient::Sym),
        _ => Err(PyValueError::new_err(format!("unknown ambient {name}"))),
    }
}

/// Homogeneous element of FQSym with rational coefficients on the `G` basis.
#[pyclass(name = "Element", module = "lieforge", frozen, from_py_object)]
#[derive(Clone)]
struct PyElement(FqsymElement<Q>);

#[pymethods]
impl PyElement {
    /// `G_σ` for a permutation in one-line notation, e.g. `[1, 3, 2]`.
    #[staticmethod]
    fn basis(perm: Vec<usize>) -> PyResult<Self> {
        Ok(PyElement(FqsymElement::basis(Permutation::new(&perm).map_err(err)?)))
    }

    /// Linear combination from `(permutation, coefficient)` pairs.
    #[staticmethod]
    fn from_terms(n: usize, terms: Vec<(Vec<usize>, String)>) -> PyResult<Self> {
        let mut parsed = Vec::new();
        for (p, c) in terms {
            parsed.push((Permutation::new(&p).map_err(err)?, parse_q(&c)?));
        }
        Ok(PyElement(FqsymElement::from_terms(n, parsed).map_err(err)?))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyElement(FqsymElement::from_json(&v).map_err(err)?))
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[getter]
    fn grade(&self) -> usize {
        self.0.grade()
    }

    /// Coefficient of `G_σ` as a string.
    fn coeff(&self, perm: Vec<usize>) -> PyResult<String> {
        Ok(scalar::format_q(&self.0.coeff(&Permutation::new(&perm).map_err(err)?)))
    }

    /// Terms as `(permutation, coefficient)` pairs in a fixed order.
    fn terms(&self) -> Vec<(Vec<usize>, String)> {
        self.0.sorted_terms().into_iter().map(|(s, c)| (s.to_vec(), scalar::format_q(c))).collect()
    }

    fn __add__(&self, other: &PyElement) -> Self {
        PyElement(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyElement) -> Self {
        PyElement(&self.0 - &other.0)
    }

    fn __neg__(&self) -> Self {
        PyElement(-&self.0)
    }

    /// Convolution product.
    fn __mul__(&self, other: &PyElement) -> Self {
        PyElement(fqsym::product(&self.0, &other.0))
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.0 == other.0
    }

    fn scale(&self, c: &str) -> PyResult<Self> {
        Ok(PyElement(self.0.scale(&parse_q(c)?)))
    }

    /// Internal (composition) product.
    fn internal(&self, other: &PyElement) -> Self {
        PyElement(fqsym::internal_product(&self.0, &other.0))
    }

    fn prelie(&self, other: &PyElement) -> PyResult<Self> {
        Ok(PyElement(fqsym::prelie(&self.0, &other.0).map_err(err)?))
    }

    fn is_primitive(&self) -> bool {
        fqsym::is_primitive(&self.0)
    }

    fn is_in_sym(&self) -> bool {
        fqsym::is_in_sym(&self.0)
    }

    fn is_lie(&self) -> bool {
        lie::is_lie(&self.0)
    }

    /// Ribbon coordinates keyed by composition text, or `None` outside Sym.
    fn ribbon(&self) -> Option<BTreeMap<String, String>> {
        fqsym::ribbon_expansion(&self.0).map(|r| r.into_iter().map(|(c, v)| (c.to_string(), scalar::format_q(&v))).collect())
    }

    /// Coordinates on the Catalan basis `c_t`, keyed by tree text.
    fn catalan(&self) -> PyResult<BTreeMap<String, String>> {
        let e = lie::express_in_c(&self.0).map_err(err)?;
        Ok(e.sorted_terms().into_iter().map(|(t, c)| (t.to_string(), scalar::format_q(c))).collect())
    }

    /// Coordinates on the PBW basis, keyed by bracket text.
    fn pbw(&self) -> PyResult<BTreeMap<String, String>> {
        let e = lie::express_in_pbw(&self.0).map_err(err)?;
        Ok(e.into_iter().map(|(b, c)| (b.to_string(), scalar::format_q(&c))).collect())
    }

    /// `c` with `F * F = c F`.
    fn quasi_scalar(&self) -> PyResult<String> {
        Ok(scalar::format_q(&idempotents::verify_quasi_idempotent(&self.0).map_err(err)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({})", self.0)
    }
}

/// Expansion of a bracket such as `"[[1,2],3]"`.
#[pyfunction]
fn expand(bracket: &str) -> PyResult<PyElement> {
    let b = Bracket::parse(bracket).map_err(err)?;
    Ok(PyElement(b.expand::<Q>().map_err(err)?))
}

/// Idempotent of a family at grade `n`; the Catalan family needs rational `a` and `b`.
#[pyfunction]
#[pyo3(signature = (family_name, n, a = None, b = None))]
fn idempotent(family_name: &str, n: usize, a: Option<&str>, b: Option<&str>) -> PyResult<PyElement> {
    match family(family_name)? {
        Family::Dynkin => Ok(PyElement(idempotents::dynkin_psi::<Q>(n))),
        Family::Solomon => Ok(PyElement(idempotents::solomon_phi(n))),
        Family::Klyachko => Err(PyValueError::new_err("the Klyachko idempotent has cyclotomic coefficients; use klyachko_text")),
        Family::Catalan => {
            let (Some(a), Some(b)) = (a, b) else {
                return Err(PyValueError::new_err("the catalan family needs a and b; use catalan_text for the symbolic form"));
            };
            Ok(PyElement(idempotents::catalan_idempotent_at(n, &parse_q(a)?, &parse_q(b)?).map_err(err)?))
        }
    }
}

/// `D^n_{a,b}` with symbolic `a`, `b` in the requested basis (`G`, `ribbon` or `c`).
#[pyfunction]
#[pyo3(signature = (n, basis = "G"))]
fn catalan_text(n: usize, basis: &str) -> PyResult<String> {
    let d = idempotents::catalan_idempotent(n).map_err(err)?;
    match basis {
        "G" => Ok(d.to_string()),
        "ribbon" => {
            let r = fqsym::ribbon_expansion(&d).ok_or_else(|| PyValueError::new_err("not in Sym"))?;
            Ok(scalar::render_sum(&r.into_iter().map(|(c, v)| (format!("R{c}"), v)).collect::<Vec<_>>()))
        }
        "c" => Ok(lie::express_in_c(&d).map_err(err)?.to_string()),
        _ => Err(PyValueError::new_err(format!("unknown basis {basis}"))),
    }
}

/// `κ_n` on the `G` basis, coefficients in the cyclotomic field.
#[pyfunction]
fn klyachko_text(n: usize) -> String {
    idempotents::klyachko(n).to_string()
}

/// `ca_n(a, b)` as text.
#[pyfunction]
fn narayana(n: usize) -> PyResult<String> {
    Ok(scalar::narayana_polynomial(n).map_err(err)?.to_string())
}

/// Evaluates a polynomial in `a`, `b` given as text.
#[pyfunction]
fn evaluate(poly: &str, a: &str, b: &str) -> PyResult<String> {
    Ok(scalar::format_q(&Poly2::parse(poly).map_err(err)?.eval(&parse_q(a)?, &parse_q(b)?)))
}

/// PBW basis of `Lie(n)` as bracket strings.
#[pyfunction]
fn pbw_basis(n: usize) -> Vec<String> {
    lie::pbw_basis(n).iter().map(|e| e.to_string()).collect()
}

/// Admissible labellings of a binary tree such as `"(o (o _))"`.
#[pyfunction]
fn admissible_labellings(tree: &str) -> PyResult<Vec<String>> {
    let t = BinaryTree::parse(tree).map_err(err)?;
    Ok(lie::admissible_labellings(&t).iter().map(|e| e.to_string()).collect())
}

/// Binary trees with `n` nodes.
#[pyfunction]
fn binary_trees(n: usize) -> Vec<String> {
    BinaryTree::all(n).iter().map(|t| t.to_string()).collect()
}

/// Rows `(n, counts by right edges)` of the class table.
#[pyfunction]
fn class_table(kind: &str, max_n: usize) -> PyResult<Vec<(usize, Vec<usize>)>> {
    Ok(classes::class_table(class_kind(kind)?, max_n))
}

/// Classes of trees with `size` nodes as `(encoding, members, right_edges)`.
#[pyfunction]
fn tree_classes(kind: &str, size: usize) -> PyResult<Vec<(String, Vec<String>, usize)>> {
    Ok(classes::tree_classes(size, class_kind(kind)?)
        .iter()
        .map(|c| (c.encoding.to_string(), c.members.iter().map(|t| t.to_string()).collect(), c.right_edges))
        .collect())
}

/// Graded dimensions of `Lie(n) ∩ A_n` for `A` = `pbt` or `sym`.
#[pyfunction]
fn intersection_dimensions(n: usize, ambient_name: &str) -> PyResult<Vec<usize>> {
    if n < 2 {
        return Err(PyValueError::new_err("n must be at least 2"));
    }
    Ok(classes::intersection_row(n, ambient(ambient_name)?).graded)
}

/// Small closed flows of a plane tree such as `"[[],[[]]]"`.
#[pyfunction]
fn flows(tree: &str) -> PyResult<Vec<Vec<i64>>> {
    Ok(classes::enumerate_flows(&PlaneTree::parse(tree).map_err(err)?))
}

/// `d_T(b)` as text.
#[pyfunction]
fn flow_polynomial(tree: &str) -> PyResult<String> {
    Ok(classes::d_poly_flows(&PlaneTree::parse(tree).map_err(err)?).to_string())
}

/// Runs a named verification (as in `lieforge verify`).
#[pyfunction]
fn verify(check: &str, n: usize) -> PyResult<bool> {
    use clap::ValueEnum;
    let c = cli::Check::from_str(check, true).map_err(PyValueError::new_err)?;
    cli::run_check(c, n).map_err(err)
}

/// Runs the command line with `args` (without the program name); returns
/// `(exit code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = cli::execute(std::iter::once("lieforge".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn lieforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(idempotent, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_text, m)?)?;
    m.add_function(wrap_pyfunction!(klyachko_text, m)?)?;
    m.add_function(wrap_pyfunction!(narayana, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(pbw_basis, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_labellings, m)?)?;
    m.add_function(wrap_pyfunction!(binary_trees, m)?)?;
    m.add_function(wrap_pyfunction!(class_table, m)?)?;
    m.add_function(wrap_pyfunction!(tree_classes, m)?)?;
    m.add_function(wrap_pyfunction!(intersection_dimensions, m)?)?;
    m.add_function(wrap_pyfunction!(flows, m)?)?;
    m.add_function(wrap_pyfunction!(flow_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
