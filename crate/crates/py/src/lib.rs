//! Python bindings: the core value types, the bijections, exact counts,
//! family enumeration, and the verification suites.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use circomp::bijection;
use circomp::circulant::traversal;
use circomp::enumeration::{self, Family, Member};
use circomp::verify::{self, VerifyConfig};

fn value_error(e: circomp::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An ordered sequence of positive integers.
#[pyclass(
    name = "Composition",
    module = "pycircomp",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyComposition(circomp::Composition);

#[pymethods]
impl PyComposition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        circomp::Composition::new(parts)
            .map(Self)
            .map_err(value_error)
    }

    /// Parse the comma form (`"2,1,2"`).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    /// Parse digit juxtaposition (`"212"`).
    #[staticmethod]
    fn parse_compact(text: &str) -> PyResult<Self> {
        circomp::Composition::parse_compact(text)
            .map(Self)
            .map_err(value_error)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn total(&self) -> usize {
        self.0.total()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn reverse(&self) -> Self {
        Self(self.0.reverse())
    }

    fn is_palindrome(&self) -> bool {
        self.0.is_palindrome()
    }

    fn gcd(&self) -> usize {
        self.0.gcd()
    }

    fn period(&self) -> usize {
        self.0.period()
    }

    fn is_aperiodic(&self) -> bool {
        self.0.is_aperiodic()
    }

    fn repeat(&self, r: usize) -> PyResult<Self> {
        self.0.repeat(r).map(Self).map_err(value_error)
    }

    fn nu(&self) -> PyResult<Self> {
        self.0.nu().map(Self).map_err(value_error)
    }

    fn compact(&self) -> String {
        self.0.to_compact_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Composition({:?})", self.0.parts())
    }
}

/// A subset of Z_n containing 0.
#[pyclass(
    name = "ConnectionSet",
    module = "pycircomp",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyConnectionSet(circomp::ConnectionSet);

#[pymethods]
impl PyConnectionSet {
    #[new]
    fn new(n: usize, members: Vec<i64>) -> PyResult<Self> {
        circomp::ConnectionSet::from_signed(n, members)
            .map(Self)
            .map_err(value_error)
    }

    /// Parse `"n: a_1,a_2,..."`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn modulus(&self) -> usize {
        self.0.modulus()
    }

    #[getter]
    fn elements(&self) -> Vec<usize> {
        self.0.elements().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __contains__(&self, a: usize) -> bool {
        self.0.contains(a)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }

    fn gcd(&self) -> usize {
        self.0.gcd()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    /// Weak connectivity of the digraph by breadth-first search.
    fn is_connected_bfs(&self) -> bool {
        traversal::is_weakly_connected(&self.0.digraph())
    }

    /// Arcs of the circulant digraph, sorted.
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.0.digraph().arcs()
    }

    /// Edges `(i, j)`, `i < j`, of the circulant graph; needs a symmetric set.
    fn edges(&self) -> PyResult<Vec<(usize, usize)>> {
        Ok(self.0.graph().map_err(value_error)?.edges())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "ConnectionSet({}, {:?})",
            self.0.modulus(),
            self.0.elements()
        )
    }
}

#[pyfunction]
fn composition_of(set: &PyConnectionSet) -> PyComposition {
    PyComposition(bijection::composition_of(&set.0))
}

#[pyfunction]
fn connection_set_of(composition: &PyComposition) -> PyConnectionSet {
    PyConnectionSet(bijection::connection_set_of(&composition.0))
}

#[pyfunction]
fn palindrome_of(set: &PyConnectionSet) -> PyResult<PyComposition> {
    bijection::palindrome_of(&set.0)
        .map(PyComposition)
        .map_err(value_error)
}

#[pyfunction]
fn connected_set_of(palindrome: &PyComposition) -> PyResult<PyConnectionSet> {
    bijection::connected_set_of(&palindrome.0)
        .map(PyConnectionSet)
        .map_err(value_error)
}

#[pyfunction]
fn aperiodic_palindrome_of(set: &PyConnectionSet) -> PyResult<PyComposition> {
    bijection::aperiodic_palindrome_of(&set.0)
        .map(PyComposition)
        .map_err(value_error)
}

fn big(r: circomp::Result<circomp::BigCount>) -> PyResult<BigUint> {
    r.map(circomp::BigCount::into_biguint).map_err(value_error)
}

#[pyfunction]
fn count_compositions(n: usize) -> PyResult<BigUint> {
    big(enumeration::count_compositions(n))
}

#[pyfunction]
fn count_compositions_k_parts(n: usize, k: usize) -> PyResult<BigUint> {
    big(enumeration::count_compositions_k_parts(n, k))
}

#[pyfunction]
fn count_prime_compositions(n: usize) -> PyResult<BigUint> {
    big(enumeration::count_prime_compositions(n))
}

#[pyfunction]
fn count_disconnected_compositions(n: usize) -> PyResult<BigUint> {
    big(enumeration::count_disconnected_compositions(n))
}

#[pyfunction]
fn count_palindromes(n: usize) -> PyResult<BigUint> {
    big(enumeration::count_palindromes(n))
}

#[pyfunction]
fn count_aperiodic_palindromes(n: usize) -> PyResult<BigUint> {
    big(enumeration::count_aperiodic_palindromes(n))
}

#[pyfunction]
fn divisors(n: usize) -> Vec<usize> {
    enumeration::divisors(n)
}

#[pyfunction]
fn moebius(m: usize) -> PyResult<i8> {
    if m == 0 {
        return Err(PyValueError::new_err("moebius is defined for m >= 1"));
    }
    Ok(enumeration::moebius(m))
}

/// Members of a family in ascending bitmask order, optionally truncated.
#[pyfunction]
#[pyo3(signature = (n, family, limit=None))]
fn members(
    py: Python<'_>,
    n: usize,
    family: &str,
    limit: Option<usize>,
) -> PyResult<Vec<Py<PyAny>>> {
    let family: Family = family.parse().map_err(value_error)?;
    let stream = enumeration::members(n, family).map_err(value_error)?;
    stream
        .take(limit.unwrap_or(usize::MAX))
        .map(|m| match m {
            Member::Composition(c) => Ok(Py::new(py, PyComposition(c))?.into_any()),
            Member::Set(s) => Ok(Py::new(py, PyConnectionSet(s))?.into_any()),
        })
        .collect()
}

/// Rows of the five count families for n = 1..=max_n, as dicts of ints.
#[pyfunction]
fn count_table<'py>(py: Python<'py>, max_n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let table = circomp::CountTable::build(max_n).map_err(value_error)?;
    table
        .rows()
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("n", r.n)?;
            d.set_item("total_compositions", r.total_compositions.as_biguint())?;
            d.set_item("prime_compositions", r.prime_compositions.as_biguint())?;
            d.set_item("disconnected", r.disconnected.as_biguint())?;
            d.set_item("palindromes", r.palindromes.as_biguint())?;
            d.set_item(
                "aperiodic_palindromes",
                r.aperiodic_palindromes.as_ref().map(|c| c.as_biguint()),
            )?;
            Ok(d)
        })
        .collect()
}

/// Run the verification suites; returns `(name, max_n, instances, counterexample)`.
#[pyfunction]
#[pyo3(signature = (max_n=None))]
fn run_verify(
    py: Python<'_>,
    max_n: Option<usize>,
) -> Vec<(&'static str, usize, u64, Option<String>)> {
    let config = max_n.map_or_else(VerifyConfig::default, VerifyConfig::uniform);
    let reports = py.detach(|| verify::run(&config));
    reports
        .into_iter()
        .map(|r| (r.name, r.max_n, r.instances, r.counterexample))
        .collect()
}

#[pymodule]
fn pycircomp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComposition>()?;
    m.add_class::<PyConnectionSet>()?;
    m.add_function(wrap_pyfunction!(composition_of, m)?)?;
    m.add_function(wrap_pyfunction!(connection_set_of, m)?)?;
    m.add_function(wrap_pyfunction!(palindrome_of, m)?)?;
    m.add_function(wrap_pyfunction!(connected_set_of, m)?)?;
    m.add_function(wrap_pyfunction!(aperiodic_palindrome_of, m)?)?;
    m.add_function(wrap_pyfunction!(count_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(count_compositions_k_parts, m)?)?;
    m.add_function(wrap_pyfunction!(count_prime_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(count_disconnected_compositions, m)?)?;
    m.add_function(wrap_pyfunction!(count_palindromes, m)?)?;
    m.add_function(wrap_pyfunction!(count_aperiodic_palindromes, m)?)?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(moebius, m)?)?;
    m.add_function(wrap_pyfunction!(members, m)?)?;
    m.add_function(wrap_pyfunction!(count_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
