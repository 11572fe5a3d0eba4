//! Python bindings. Structured results cross the boundary as plain dicts
//! built from the same JSON reports the command line prints.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use golodkit_core::closure::{in_integral_closure, integral_closure};
use golodkit_core::criteria::{nec_all, verdict, Engine, VerdictOptions};
use golodkit_core::harness::parse::{parse_ideal, parse_vars, parse_with};
use golodkit_core::harness::{report, random_ideal, search as run_search, RandomIdealConfig, SearchConfig, SearchMode, SplitMix64};
use golodkit_core::ideal::{colon_ideal, contains, eliminate_variable_generators, intersect, product, strongly_golod, sum};
use golodkit_core::koszul::{betti_table, products_trivial, Enumeration};
use golodkit_core::linalg::FieldSpec;
use golodkit_core::poincare::serre_compare;
use golodkit_core::{Error, Monomial, MonomialIdeal};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) | Error::Io(_) | Error::ExponentOverflow | Error::MatrixShape(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn field(s: &str) -> PyResult<FieldSpec> {
    s.parse().map_err(py_err)
}

/// A monomial ideal in a named polynomial ring.
#[pyclass(name = "Ideal", module = "golodkit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIdeal {
    inner: MonomialIdeal,
}

impl PyIdeal {
    fn wrap(inner: MonomialIdeal) -> Self {
        Self { inner }
    }

    /// Parse `other` in this ideal's ring.
    fn sibling(&self, other: &str) -> PyResult<MonomialIdeal> {
        parse_ideal(other, self.inner.context()).map_err(py_err)
    }
}

#[pymethods]
impl PyIdeal {
    /// `Ideal("(x^2, y*z)")` infers the ring; pass `vars="x,y,z"` to fix it.
    #[new]
    #[pyo3(signature = (text, vars = None))]
    fn new(text: &str, vars: Option<&str>) -> PyResult<Self> {
        parse_with(text, vars).map(Self::wrap).map_err(py_err)
    }

    #[staticmethod]
    fn from_exponents(vars: &str, generators: Vec<Vec<u32>>) -> PyResult<Self> {
        let ctx = parse_vars(vars).map_err(py_err)?;
        let gens = generators.into_iter().map(Monomial::new).collect();
        MonomialIdeal::new(&ctx, gens).map(Self::wrap).map_err(py_err)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.context().names().to_vec()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<u32>> {
        self.inner.generators().iter().map(|g| g.exponents().to_vec()).collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({:?}, vars={:?})", self.inner.to_string(), self.inner.context().names().join(","))
    }

    fn __len__(&self) -> usize {
        self.inner.num_generators()
    }

    fn __contains__(&self, exponents: Vec<u32>) -> PyResult<bool> {
        self.inner.member(&Monomial::new(exponents)).map_err(py_err)
    }

    fn is_proper(&self) -> bool {
        self.inner.is_proper()
    }

    fn in_m_squared(&self) -> bool {
        self.inner.in_m_squared()
    }

    fn is_artinian(&self) -> bool {
        self.inner.is_artinian()
    }

    fn contains(&self, other: &str) -> PyResult<bool> {
        contains(&self.inner, &self.sibling(other)?).map_err(py_err)
    }

    fn sum(&self, other: &str) -> PyResult<Self> {
        sum(&self.inner, &self.sibling(other)?).map(Self::wrap).map_err(py_err)
    }

    fn product(&self, other: &str) -> PyResult<Self> {
        product(&self.inner, &self.sibling(other)?).map(Self::wrap).map_err(py_err)
    }

    fn intersect(&self, other: &str) -> PyResult<Self> {
        intersect(&self.inner, &self.sibling(other)?).map(Self::wrap).map_err(py_err)
    }

    fn colon(&self, other: &str) -> PyResult<Self> {
        colon_ideal(&self.inner, &self.sibling(other)?).map(Self::wrap).map_err(py_err)
    }

    fn integral_closure(&self) -> PyResult<Self> {
        integral_closure(&self.inner).map(Self::wrap).map_err(py_err)
    }

    fn in_integral_closure(&self, exponents: Vec<u32>) -> PyResult<bool> {
        in_integral_closure(&self.inner, &Monomial::new(exponents)).map_err(py_err)
    }

    /// Drop generators that are variables, returning the ideal in the smaller ring.
    fn reduce(&self) -> Self {
        Self::wrap(eliminate_variable_generators(&self.inner).0)
    }

    fn strongly_golod(&self) -> PyResult<bool> {
        strongly_golod(&self.inner).map_err(py_err)
    }

    /// Golod verdict as a dict with `status`, `certificates`, `engines`, ...
    #[pyo3(signature = (engines = None, field = "q", depth = 4, all_engines = false))]
    fn golod<'py>(
        &self,
        py: Python<'py>,
        engines: Option<Vec<String>>,
        field: &str,
        depth: usize,
        all_engines: bool,
    ) -> PyResult<Bound<'py, PyAny>> {
        let mut options = VerdictOptions { field: self::field(field)?, series_depth: depth, ..Default::default() };
        if let Some(names) = engines {
            options.engines = names
                .iter()
                .map(|n| Engine::parse(n).ok_or_else(|| PyValueError::new_err(format!("unknown engine {n:?}"))))
                .collect::<PyResult<_>>()?;
        }
        options.stop_at_first = !all_engines;
        let v = py.detach(|| verdict(&self.inner, &options)).map_err(py_err)?;
        to_py(py, report::verdict(&v))
    }

    /// Every colon-condition violation, as certificate dicts.
    fn nec<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let ctx = self.inner.context();
        nec_all(&self.inner)
            .map_err(py_err)?
            .iter()
            .map(|c| to_py(py, report::certificate(c, ctx)))
            .collect()
    }

    #[pyo3(signature = (field = "q"))]
    fn koszul_betti<'py>(&self, py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let f = self::field(field)?;
        let t = py.detach(|| betti_table(&self.inner, f, Enumeration::LcmClosure)).map_err(py_err)?;
        to_py(py, report::betti(&t))
    }

    #[pyo3(signature = (field = "q"))]
    fn koszul_products<'py>(&self, py: Python<'py>, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let f = self::field(field)?;
        let r = py.detach(|| products_trivial(&self.inner, f)).map_err(py_err)?;
        to_py(py, report::triviality(&r, self.inner.context()))
    }

    #[pyo3(signature = (order = 4, field = "q"))]
    fn serre_compare<'py>(&self, py: Python<'py>, order: usize, field: &str) -> PyResult<Bound<'py, PyAny>> {
        let f = self::field(field)?;
        let r = py.detach(|| serre_compare(&self.inner, order, f)).map_err(py_err)?;
        to_py(py, report::comparison(&r))
    }
}

/// Seeded random monomial ideal; the same seed always gives the same ideal.
#[pyfunction]
#[pyo3(signature = (seed, nvars = 3, max_gens = 5, max_exp = 4, in_m_squared = true))]
fn random(seed: u64, nvars: usize, max_gens: usize, max_exp: u32, in_m_squared: bool) -> PyResult<PyIdeal> {
    let mut config = RandomIdealConfig::new(nvars, max_gens, max_exp);
    config.in_m_squared = in_m_squared;
    random_ideal(&mut SplitMix64::new(seed), &config).map(PyIdeal::wrap).map_err(py_err)
}

/// Run a seeded search (`product3`, `product4`, `closure3` or `raw`) and return its report.
#[pyfunction]
#[pyo3(signature = (mode, trials, seed = 42))]
fn search<'py>(py: Python<'py>, mode: &str, trials: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let mode = SearchMode::parse(mode).ok_or_else(|| PyValueError::new_err(format!("unknown mode {mode:?}")))?;
    let config = SearchConfig::new(mode, trials, seed);
    let r = py.detach(|| run_search(&config)).map_err(py_err)?;
    to_py(py, r.to_json())
}

#[pymodule]
fn golodkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(random, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    Ok(())
}
