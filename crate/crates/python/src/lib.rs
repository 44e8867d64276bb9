//! Python module `liaison`: rings, ideals, link towers and the claim checkers.

use liaison_core::ideal::DEFAULT_ORDER_BOUND;
use liaison_core::linkage::DEFAULT_R_MAX;
use liaison_core::{Error, Field, Ideal, LinkTower, Polynomial, Ring};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(liaison, ResourceLimitError, PyRuntimeError);

fn to_py_err(e: Error) -> PyErr {
    match &e {
        Error::ResourceLimit(_) => ResourceLimitError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn lib<T>(r: liaison_core::Result<T>) -> PyResult<T> {
    r.map_err(to_py_err)
}

/// Plain Python data (dicts, lists, numbers, strings) through the JSON form.
fn to_python<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

#[pyclass(name = "Ring", module = "liaison", frozen)]
#[derive(Clone)]
struct PyRing {
    inner: Ring,
}

#[pymethods]
impl PyRing {
    /// `Ring("QQ[x,y,z]/(y^2 - x*z)")`; `field` replaces the tag in the text.
    #[new]
    #[pyo3(signature = (spec, field = None))]
    fn new(spec: &str, field: Option<&str>) -> PyResult<Self> {
        let field = field.map(|f| lib(liaison_core::parse_field(f))).transpose()?;
        let inner = lib(liaison_core::parse_ring_with_field(spec, field))?;
        Ok(PyRing { inner })
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.inner.vars().to_vec()
    }

    #[getter]
    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn ideal(&self, generators: &str) -> PyResult<PyIdeal> {
        PyIdeal::new(self, generators)
    }

    fn maximal_ideal(&self) -> PyIdeal {
        PyIdeal {
            inner: Ideal::maximal(&self.inner),
        }
    }

    fn max_power(&self, k: u32) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: lib(Ideal::max_power(&self.inner, k))?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?})", self.inner.to_string())
    }
}

#[pyclass(name = "Ideal", module = "liaison", frozen)]
#[derive(Clone)]
struct PyIdeal {
    inner: Ideal,
}

impl PyIdeal {
    fn wrap(inner: Ideal) -> Self {
        PyIdeal { inner }
    }

    fn poly(&self, text: &str) -> PyResult<Polynomial> {
        lib(liaison_core::parse_poly(text, self.inner.ring()))
    }
}

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(ring: &PyRing, generators: &str) -> PyResult<Self> {
        Ok(PyIdeal {
            inner: lib(Ideal::parse(&ring.inner, generators))?,
        })
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing {
            inner: self.inner.ring().clone(),
        }
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        strings(self.inner.generators())
    }

    fn groebner_basis(&self) -> PyResult<Vec<String>> {
        Ok(strings(lib(self.inner.groebner())?.polynomials()))
    }

    fn normal_form(&self, f: &str) -> PyResult<String> {
        Ok(lib(self.inner.normal_form(&self.poly(f)?))?.to_string())
    }

    fn member(&self, f: &str) -> PyResult<bool> {
        lib(self.inner.member(&self.poly(f)?))
    }

    /// `other ⊆ self`.
    fn contains(&self, other: &PyIdeal) -> PyResult<bool> {
        lib(self.inner.contains(&other.inner))
    }

    fn __eq__(&self, other: &PyIdeal) -> PyResult<bool> {
        lib(self.inner.equals(&other.inner))
    }

    /// `λ(A/I)`, or `None` when infinite.
    fn colength(&self) -> PyResult<Option<usize>> {
        Ok(lib(self.inner.colength())?.finite())
    }

    fn is_m_primary(&self) -> PyResult<bool> {
        Ok(lib(self.inner.is_m_primary())?.is_some())
    }

    fn minimal_generators(&self) -> PyResult<Vec<String>> {
        Ok(strings(&lib(self.inner.minimal_generators())?.generators))
    }

    fn __add__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        lib(self.inner.sum(&other.inner)).map(PyIdeal::wrap)
    }

    fn __mul__(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        lib(self.inner.product(&other.inner)).map(PyIdeal::wrap)
    }

    fn __pow__(&self, e: u32, _modulo: Option<PyObject>) -> PyResult<PyIdeal> {
        lib(self.inner.power(e)).map(PyIdeal::wrap)
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        lib(self.inner.intersect(&other.inner)).map(PyIdeal::wrap)
    }

    fn colon(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        lib(self.inner.colon(&other.inner)).map(PyIdeal::wrap)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal{}", self.inner)
    }
}

#[pyclass(name = "LinkTower", module = "liaison", frozen)]
struct PyLinkTower {
    inner: LinkTower,
}

#[pymethods]
impl PyLinkTower {
    #[getter]
    fn orders(&self) -> Vec<u32> {
        self.inner.orders.clone()
    }

    #[getter]
    fn cm_type(&self) -> usize {
        self.inner.cm_type()
    }

    /// `I_k`, with `link(0) = J`.
    fn link(&self, k: u32) -> PyResult<PyIdeal> {
        lib(self.inner.link(k)).map(|i| PyIdeal::wrap(i.clone()))
    }

    fn levels(&self) -> Vec<LevelView> {
        self.inner
            .levels
            .iter()
            .map(|l| LevelView {
                k: l.k,
                n_k: l.n_k,
                max_power_colength: l.max_power_colength,
                colength: l.colength,
                link_colength: l.link_colength,
                step_length: l.step_length,
                mu: l.mu,
                parameters_minimal: l.parameters_minimal,
                link_generators: strings(&l.link_generators),
                descends: l.descends,
                max_power_colon: l.max_power_colon,
            })
            .collect()
    }

    fn pairing_matrix(&self, py: Python<'_>, k: u32) -> PyResult<PyObject> {
        let p = lib(liaison_core::pairing_matrix(&self.inner, k))?;
        let view = PairingView {
            k,
            rows: strings(&p.rows),
            columns: strings(&p.columns),
            socle: p.socle.to_string(),
            matrix: p.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
            determinant: p.determinant.to_string(),
            nonsingular: p.is_nonsingular(),
        };
        to_python(py, &view)
    }

    fn link_square_check(&self, py: Python<'_>, k: u32) -> PyResult<PyObject> {
        to_python(py, &lib(liaison_core::link_square_check(&self.inner, k))?)
    }

    fn link_generator_check(&self, py: Python<'_>, k: u32) -> PyResult<PyObject> {
        to_python(py, &lib(liaison_core::link_generator_check(&self.inner, k))?)
    }
}

#[pyclass(name = "LinkLevel", module = "liaison", frozen, get_all)]
struct LevelView {
    k: u32,
    n_k: usize,
    max_power_colength: usize,
    colength: usize,
    link_colength: usize,
    step_length: usize,
    mu: usize,
    parameters_minimal: bool,
    link_generators: Vec<String>,
    descends: bool,
    max_power_colon: bool,
}

#[derive(Serialize)]
struct PairingView {
    k: u32,
    rows: Vec<String>,
    columns: Vec<String>,
    socle: String,
    matrix: Vec<Vec<String>>,
    determinant: String,
    nonsingular: bool,
}

#[pyfunction]
#[pyo3(signature = (j, s, k_max = None))]
fn build_tower(j: &PyIdeal, s: u32, k_max: Option<u32>) -> PyResult<PyLinkTower> {
    let inner = lib(liaison_core::build_tower(&j.inner, s, k_max.unwrap_or(s)))?;
    Ok(PyLinkTower { inner })
}

#[pyfunction]
#[pyo3(name = "order", signature = (ring, f, bound = DEFAULT_ORDER_BOUND))]
fn order_of(ring: &PyRing, f: &str, bound: u32) -> PyResult<u32> {
    let f = lib(liaison_core::parse_poly(f, &ring.inner))?;
    lib(liaison_core::order(&f, bound))
}

/// `(J : m, socle generators)`.
#[pyfunction]
fn socle_link(j: &PyIdeal) -> PyResult<(PyIdeal, Vec<String>)> {
    let sl = lib(liaison_core::socle_link(&j.inner))?;
    Ok((PyIdeal::wrap(sl.link), strings(&sl.socle)))
}

/// Least `r ≤ r_max` with `I^(r+1) = J I^r`, or `None`.
#[pyfunction]
#[pyo3(signature = (i, j, r_max = DEFAULT_R_MAX))]
fn reduction_number(i: &PyIdeal, j: &PyIdeal, r_max: u32) -> PyResult<Option<u32>> {
    Ok(lib(liaison_core::reduction_number(&i.inner, &j.inner, r_max))?.value())
}

#[pyfunction]
fn koszul_h1_length(py: Python<'_>, i: &PyIdeal, j: &PyIdeal) -> PyResult<PyObject> {
    to_python(py, &lib(liaison_core::koszul_h1_length(&i.inner, &j.inner))?)
}

#[pyfunction]
fn sym2_length(py: Python<'_>, i: &PyIdeal, j: &PyIdeal) -> PyResult<PyObject> {
    to_python(py, &lib(liaison_core::sym2_length(&i.inner, &j.inner))?)
}

#[pyfunction]
fn h1_upper_bound_check(py: Python<'_>, i: &PyIdeal, j: &PyIdeal, n: usize) -> PyResult<PyObject> {
    to_python(py, &lib(liaison_core::h1_upper_bound_check(&i.inner, &j.inner, n))?)
}

#[pyfunction]
fn square_criterion_check(py: Python<'_>, i: &PyIdeal, j: &PyIdeal) -> PyResult<PyObject> {
    to_python(py, &lib(liaison_core::square_criterion_check(&i.inner, &j.inner))?)
}

#[pyfunction]
#[pyo3(signature = (j, s, n_max = None))]
fn valabrega_valla_check(py: Python<'_>, j: &PyIdeal, s: u32, n_max: Option<u32>) -> PyResult<PyObject> {
    to_python(py, &lib(liaison_core::valabrega_valla_check(&j.inner, s, n_max))?)
}

/// The built-in instance table as a list of report dicts.
#[pyfunction]
#[pyo3(signature = (field = "QQ"))]
fn run_scenario_suite(py: Python<'_>, field: &str) -> PyResult<PyObject> {
    let field: Field = lib(liaison_core::parse_field(field))?;
    let reports = py.allow_threads(|| liaison_core::run_scenario_suite(field));
    to_python(py, &lib(reports)?)
}

#[pymodule]
pub fn liaison(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ResourceLimitError", m.py().get_type::<ResourceLimitError>())?;
    m.add_class::<PyRing>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyLinkTower>()?;
    m.add_class::<LevelView>()?;
    m.add_function(wrap_pyfunction!(build_tower, m)?)?;
    m.add_function(wrap_pyfunction!(order_of, m)?)?;
    m.add_function(wrap_pyfunction!(socle_link, m)?)?;
    m.add_function(wrap_pyfunction!(reduction_number, m)?)?;
    m.add_function(wrap_pyfunction!(koszul_h1_length, m)?)?;
    m.add_function(wrap_pyfunction!(sym2_length, m)?)?;
    m.add_function(wrap_pyfunction!(h1_upper_bound_check, m)?)?;
    m.add_function(wrap_pyfunction!(square_criterion_check, m)?)?;
    m.add_function(wrap_pyfunction!(valabrega_valla_check, m)?)?;
    m.add_function(wrap_pyfunction!(run_scenario_suite, m)?)?;
    Ok(())
}
