//! Python bindings for the matroidal library.
//!
//! Exposes the two main types (`Matroid`, `MonomialIdeal`) and the headline
//! operations: cover and Stanley-Reisner ideals, fast and brute-force
//! symbolic powers, squarefree parts, tower decompositions, matroid
//! detection, and the closed-form invariants.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use matroidal_core::ground::SubsetFamily;
use matroidal_core::sympow::{Side, SymbolicEngine};
use matroidal_core::{invariants, matroid_ideals, oracle, sympow, text};

fn err(e: matroidal_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_side(side: &str) -> PyResult<Side> {
    side.parse().map_err(err)
}

fn family(n: usize, lists: Vec<Vec<usize>>) -> PyResult<SubsetFamily> {
    SubsetFamily::from_index_lists(n, &lists).map_err(err)
}

/// A matroid on {0,..,n-1}, validated at construction.
#[pyclass(frozen)]
struct Matroid {
    inner: matroidal_core::Matroid,
}

#[pymethods]
impl Matroid {
    /// Matroid(n, bases): build from a list of bases, e.g. Matroid(3, [[0,1],[0,2],[1,2]]).
    #[new]
    fn new(n: usize, bases: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = matroidal_core::Matroid::from_bases(n, &family(n, bases)?).map_err(err)?;
        Ok(Matroid { inner })
    }

    /// Build from a circuit family, checking the circuit axioms.
    #[staticmethod]
    fn from_circuits(n: usize, circuits: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner =
            matroidal_core::Matroid::from_circuits(n, &family(n, circuits)?).map_err(err)?;
        Ok(Matroid { inner })
    }

    /// The uniform matroid U(c, n).
    #[staticmethod]
    fn uniform(n: usize, c: usize) -> PyResult<Self> {
        Ok(Matroid { inner: matroidal_core::Matroid::uniform(n, c).map_err(err)? })
    }

    /// The sparse paving matroid of a Steiner system S(n, d, t).
    #[staticmethod]
    fn steiner(n: usize, d: usize, t: usize, blocks: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner =
            matroidal_core::Matroid::steiner(n, d, t, &family(n, blocks)?).map_err(err)?;
        Ok(Matroid { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn corank(&self) -> usize {
        self.inner.corank()
    }

    fn bases(&self) -> Vec<Vec<usize>> {
        self.inner.bases().to_index_lists()
    }

    fn circuits(&self) -> Vec<Vec<usize>> {
        self.inner.circuits().to_index_lists()
    }

    fn cocircuits(&self) -> Vec<Vec<usize>> {
        self.inner.cocircuits().to_index_lists()
    }

    fn dual(&self) -> Matroid {
        Matroid { inner: self.inner.dual() }
    }

    fn truncation(&self, h: usize) -> PyResult<Matroid> {
        Ok(Matroid { inner: self.inner.truncation(h).map_err(err)? })
    }

    fn elongation(&self, h: usize) -> PyResult<Matroid> {
        Ok(Matroid { inner: self.inner.elongation(h).map_err(err)? })
    }

    /// Smallest circuit size; None for a free matroid.
    fn girth(&self) -> Option<usize> {
        self.inner.girth()
    }

    fn is_paving(&self) -> bool {
        self.inner.is_paving()
    }

    fn is_sparse_paving(&self) -> bool {
        self.inner.is_sparse_paving()
    }

    fn is_uniform(&self) -> bool {
        self.inner.is_uniform()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn has_loops(&self) -> bool {
        self.inner.has_loops()
    }

    fn has_coloops(&self) -> bool {
        self.inner.has_coloops()
    }

    fn connected_components(&self) -> Vec<(Vec<usize>, Matroid)> {
        self.inner
            .connected_components()
            .into_iter()
            .map(|(set, m)| (set.indices(), Matroid { inner: m }))
            .collect()
    }

    fn __eq__(&self, other: &Matroid) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Matroid(n={}, rank={}, bases={})",
            self.inner.n(),
            self.inner.rank(),
            self.inner.num_bases()
        )
    }
}

/// A monomial ideal given by its canonical minimal generating set.
#[pyclass(frozen)]
struct MonomialIdeal {
    inner: matroidal_core::MonomialIdeal,
}

#[pymethods]
impl MonomialIdeal {
    /// MonomialIdeal(n, generators): exponent vectors, e.g. MonomialIdeal(2, [[1,1]]).
    #[new]
    fn new(n: usize, generators: Vec<Vec<u32>>) -> PyResult<Self> {
        let gens = generators
            .into_iter()
            .map(matroidal_core::Monomial::from_exponents)
            .collect::<Vec<_>>();
        let inner = matroidal_core::MonomialIdeal::from_generators(n, gens).map_err(err)?;
        Ok(MonomialIdeal { inner })
    }

    /// Parse a generator list like "af, cd, bde, bce" (n inferred if omitted).
    #[staticmethod]
    #[pyo3(signature = (source, n=None))]
    fn from_string(source: &str, n: Option<usize>) -> PyResult<Self> {
        Ok(MonomialIdeal { inner: text::parse_ideal(source, n).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn generators(&self) -> Vec<Vec<u32>> {
        self.inner.gens().iter().map(|g| g.exponents().to_vec()).collect()
    }

    /// Minimal number of generators.
    fn mu(&self) -> usize {
        self.inner.mu()
    }

    fn alpha(&self) -> PyResult<u64> {
        self.inner.alpha().map_err(err)
    }

    fn is_squarefree(&self) -> bool {
        self.inner.is_squarefree()
    }

    fn contains(&self, exponents: Vec<u32>) -> bool {
        self.inner.contains(&matroidal_core::Monomial::from_exponents(exponents))
    }

    fn __len__(&self) -> usize {
        self.inner.mu()
    }

    fn __eq__(&self, other: &MonomialIdeal) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({})", text::ideal_string(&self.inner))
    }

    fn __str__(&self) -> String {
        format!("({})", text::ideal_string(&self.inner))
    }
}

/// The cover ideal J(M): intersection of the basis primes.
#[pyfunction]
fn cover_ideal(m: &Matroid) -> MonomialIdeal {
    MonomialIdeal { inner: matroid_ideals::cover_ideal(&m.inner).ideal }
}

/// The Stanley-Reisner ideal: generators supported on the circuits.
#[pyfunction]
fn stanley_reisner(m: &Matroid) -> MonomialIdeal {
    MonomialIdeal { inner: matroid_ideals::stanley_reisner(&m.inner).ideal }
}

/// The l-th symbolic power of the chosen side ideal.
#[pyfunction]
#[pyo3(signature = (m, l, side="cover", method="fast"))]
fn symbolic_power(m: &Matroid, l: usize, side: &str, method: &str) -> PyResult<MonomialIdeal> {
    let side = parse_side(side)?;
    let inner = match method {
        "fast" => sympow::symbolic_power(&m.inner, l, side),
        "bruteforce" => oracle::symbolic_power_bruteforce(&m.inner, l, side).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    Ok(MonomialIdeal { inner })
}

/// Squarefree part SF_l of the l-th symbolic power, via the skeleton route.
#[pyfunction]
#[pyo3(signature = (m, l, side="cover"))]
fn squarefree_part(m: &Matroid, l: usize, side: &str) -> PyResult<MonomialIdeal> {
    let inner =
        matroid_ideals::sf_symbolic_skeleton(&m.inner, l, parse_side(side)?).map_err(err)?;
    Ok(MonomialIdeal { inner })
}

/// Tower decomposition of a minimal generator of the l-th symbolic power:
/// a list of (exponent_vector, level, count) triples.
#[pyfunction]
#[pyo3(signature = (exponents, m, l, side="cover"))]
fn tower_decomposition(
    exponents: Vec<u32>,
    m: &Matroid,
    l: usize,
    side: &str,
) -> PyResult<Vec<(Vec<u32>, usize, u32)>> {
    let mon = matroidal_core::Monomial::from_exponents(exponents);
    let tower = sympow::symbolic_type_of(&mon, &m.inner, l, parse_side(side)?).map_err(err)?;
    Ok(tower
        .layers
        .iter()
        .map(|layer| (layer.generator.exponents().to_vec(), layer.level, layer.count))
        .collect())
}

/// Decide C-matroidality of a squarefree ideal; returns a dict with keys
/// is_matroidal, circuits, witness.
#[pyfunction]
fn detect_matroid<'py>(py: Python<'py>, ideal: &MonomialIdeal) -> PyResult<Bound<'py, PyDict>> {
    let report = matroid_ideals::detect_matroid(&ideal.inner).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("is_matroidal", report.is_matroidal)?;
    dict.set_item("circuits", report.circuits)?;
    dict.set_item("witness", report.witness)?;
    Ok(dict)
}

/// The Waldschmidt constant as a fractions.Fraction.
#[pyfunction]
#[pyo3(signature = (m, side="cover"))]
fn waldschmidt<'py>(py: Python<'py>, m: &Matroid, side: &str) -> PyResult<Bound<'py, PyAny>> {
    let value = invariants::waldschmidt(&m.inner, parse_side(side)?).map_err(err)?;
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    fraction.call1((format!("{}/{}", value.numerator(), value.denominator()),))
}

/// Initial degree alpha(I^(l)).
#[pyfunction]
#[pyo3(signature = (m, l, side="cover"))]
fn alpha_symbolic(m: &Matroid, l: usize, side: &str) -> PyResult<u64> {
    invariants::alpha_symbolic(&m.inner, l, parse_side(side)?).map_err(err)
}

/// Symbolic Noether number of the side ideal.
#[pyfunction]
#[pyo3(signature = (m, side="cover"))]
fn noether_number(m: &Matroid, side: &str) -> PyResult<usize> {
    Ok(invariants::noether_number_side(&m.inner, parse_side(side)?))
}

/// Symbolic defect at level l: dict with direct and formula values.
#[pyfunction]
#[pyo3(signature = (m, l, side="cover"))]
fn sdefect<'py>(py: Python<'py>, m: &Matroid, l: usize, side: &str) -> PyResult<Bound<'py, PyDict>> {
    let side = parse_side(side)?;
    let ideal = matroid_ideals::side_ideal(&m.inner, side);
    let engine = SymbolicEngine::new();
    let symb_l = engine.symbolic_power(&m.inner, l, side);
    let direct = oracle::sdefect_direct(&ideal, l, &symb_l);
    let table = invariants::a_table(&ideal, |r| engine.symbolic_power(&m.inner, r, side));
    let formula = invariants::sdefect_formula(l, &symb_l, &table);
    let dict = PyDict::new(py);
    dict.set_item("l", l)?;
    dict.set_item("direct", direct)?;
    dict.set_item("formula", formula)?;
    dict.set_item("mu_symbolic", symb_l.mu())?;
    Ok(dict)
}

/// Full invariant report as a dict (see the CLI `analyze` command).
#[pyfunction]
#[pyo3(signature = (m, side="cover"))]
fn analyze<'py>(py: Python<'py>, m: &Matroid, side: &str) -> PyResult<Bound<'py, PyAny>> {
    let report = invariants::analyze(&m.inner, parse_side(side)?).map_err(err)?;
    let value = serde_json::to_value(&report)
        .map_err(|e| PyValueError::new_err(format!("report serialization: {e}")))?;
    json_to_py(py, &value)
}

fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match value {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else {
                n.as_u64().expect("integral number").into_pyobject(py)?.into_any()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(entries) => {
            let dict = PyDict::new(py);
            for (k, v) in entries {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_any()
        }
    })
}

#[pymodule]
fn matroidal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Matroid>()?;
    m.add_class::<MonomialIdeal>()?;
    m.add_function(wrap_pyfunction!(cover_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_reisner, m)?)?;
    m.add_function(wrap_pyfunction!(symbolic_power, m)?)?;
    m.add_function(wrap_pyfunction!(squarefree_part, m)?)?;
    m.add_function(wrap_pyfunction!(tower_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(detect_matroid, m)?)?;
    m.add_function(wrap_pyfunction!(waldschmidt, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_symbolic, m)?)?;
    m.add_function(wrap_pyfunction!(noether_number, m)?)?;
    m.add_function(wrap_pyfunction!(sdefect, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    Ok(())
}
