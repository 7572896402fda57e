//! Python bindings: `import pretzel_knots`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pretzel_core::{
    self as core, BracketResult, KauffmanState, LaurentPoly, PretzelSpec, Variable,
    DEFAULT_MAX_CROSSINGS,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyString;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Sparse Laurent polynomial with integer coefficients in `A` or `z`.
#[pyclass(
    name = "LaurentPoly",
    module = "pretzel_knots",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyLaurentPoly(pub LaurentPoly);

#[pymethods]
impl PyLaurentPoly {
    /// `terms` is a mapping or a sequence of `(exponent, coefficient)` pairs.
    #[new]
    #[pyo3(signature = (terms = None, variable = "A"))]
    fn new(terms: Option<&Bound<'_, PyAny>>, variable: &str) -> PyResult<Self> {
        let var: Variable = variable.parse().map_err(value_error)?;
        let pairs: Vec<(i64, BigInt)> = match terms {
            None => Vec::new(),
            Some(obj) => match obj.extract::<Vec<(i64, BigInt)>>() {
                Ok(pairs) => pairs,
                Err(_) => obj
                    .extract::<BTreeMap<i64, BigInt>>()?
                    .into_iter()
                    .collect(),
            },
        };
        Ok(Self(LaurentPoly::from_terms(var, pairs)))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(Self).map_err(value_error)
    }

    #[getter]
    fn variable(&self) -> &'static str {
        self.0.variable().symbol()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    #[getter]
    fn terms(&self) -> Vec<(i64, BigInt)> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn coeff(&self, exp: i64) -> BigInt {
        self.0.coeff(exp)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn text(&self) -> String {
        self.0.to_text()
    }

    fn latex(&self) -> String {
        self.0.to_latex()
    }

    fn json(&self) -> String {
        self.0.to_json()
    }

    /// `p(A^-1)`.
    fn substitute_inverse(&self) -> Self {
        Self(self.0.substitute_inverse())
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(Self).map_err(value_error)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_sub(&other.0).map(Self).map_err(value_error)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(value_error)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __pow__(&self, k: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        if modulo.is_some() {
            return Err(value_error("modular power is not supported"));
        }
        Ok(Self(self.0.pow(k)))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0.to_text())
    }
}

/// Pretzel link `P(p_1, ..., p_k)`.
#[pyclass(
    name = "PretzelSpec",
    module = "pretzel_knots",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPretzelSpec(pub PretzelSpec);

#[pymethods]
impl PyPretzelSpec {
    #[new]
    fn new(tangles: Vec<i64>) -> PyResult<Self> {
        PretzelSpec::new(tangles).map(Self).map_err(value_error)
    }

    /// Parses `"1,1,-3"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    #[getter]
    fn tangles(&self) -> Vec<i64> {
        self.0.tangles().to_vec()
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    fn mirror(&self) -> Self {
        Self(self.0.mirror())
    }

    fn rotate_left(&self) -> Self {
        Self(self.0.rotate_left())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "PretzelSpec([{}])",
            self.0
                .tangles()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

#[pyclass(name = "BracketResult", module = "pretzel_knots", frozen, get_all)]
pub struct PyBracketResult {
    polynomial: PyLaurentPoly,
    method: &'static str,
    state_count: Option<u64>,
}

#[pymethods]
impl PyBracketResult {
    fn __repr__(&self) -> String {
        format!(
            "BracketResult(polynomial={}, method='{}', state_count={})",
            self.polynomial.__repr__(),
            self.method,
            self.state_count
                .map_or("None".to_string(), |n| n.to_string())
        )
    }
}

impl From<BracketResult> for PyBracketResult {
    fn from(r: BracketResult) -> Self {
        Self {
            polynomial: PyLaurentPoly(r.polynomial),
            method: r.method.name(),
            state_count: r.state_count,
        }
    }
}

/// Accepts a `PretzelSpec`, a string such as `"1,1,3"` or a sequence of ints.
fn spec_arg(obj: &Bound<'_, PyAny>) -> PyResult<PretzelSpec> {
    if let Ok(spec) = obj.extract::<PyRef<'_, PyPretzelSpec>>() {
        return Ok(spec.0.clone());
    }
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse().map_err(value_error);
    }
    PretzelSpec::new(obj.extract::<Vec<i64>>()?).map_err(value_error)
}

fn state_arg(spec: &PretzelSpec, state: &str) -> PyResult<KauffmanState> {
    let state: KauffmanState = state.parse().map_err(value_error)?;
    if state.len() != spec.crossing_count() {
        return Err(value_error(format!(
            "state covers {} crossings, P({spec}) has {}",
            state.len(),
            spec.crossing_count()
        )));
    }
    Ok(state)
}

#[pyfunction]
#[pyo3(signature = (spec, max_crossings = DEFAULT_MAX_CROSSINGS))]
fn bracket_statesum(
    py: Python<'_>,
    spec: &Bound<'_, PyAny>,
    max_crossings: usize,
) -> PyResult<PyBracketResult> {
    let spec = spec_arg(spec)?;
    py.detach(|| core::bracket_statesum(&spec, max_crossings))
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn bracket_closed_p11n(n: i64) -> PyResult<PyBracketResult> {
    core::bracket_closed_p11n(n)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn bracket_closed_general(m: i64, n: i64) -> PyResult<PyBracketResult> {
    core::bracket_closed_general(m, n)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn bracket_tangle_eval(spec: &Bound<'_, PyAny>) -> PyResult<PyBracketResult> {
    Ok(core::bracket_tangle_eval(&spec_arg(spec)?).into())
}

#[pyfunction]
fn conway_closed_p11n(n: i64) -> PyResult<PyLaurentPoly> {
    core::conway_closed_p11n(n)
        .map(PyLaurentPoly)
        .map_err(value_error)
}

#[pyfunction]
fn conway_skein_p11n(n: i64) -> PyResult<PyLaurentPoly> {
    core::conway_skein_p11n(n)
        .map(PyLaurentPoly)
        .map_err(value_error)
}

/// The loop value `-A^2 - A^-2`.
#[pyfunction]
fn loop_value() -> PyLaurentPoly {
    PyLaurentPoly(core::loop_value())
}

/// Circles left after smoothing every crossing as `state` says, e.g. `"ABA"`.
#[pyfunction]
fn count_circles(spec: &Bound<'_, PyAny>, state: &str) -> PyResult<usize> {
    let spec = spec_arg(spec)?;
    let state = state_arg(&spec, state)?;
    Ok(core::build_diagram(&spec).count_circles(&state))
}

#[pyfunction]
fn classify_state_p11n(spec: &Bound<'_, PyAny>, state: &str) -> PyResult<usize> {
    let spec = spec_arg(spec)?;
    let state = state_arg(&spec, state)?;
    core::classify_state_p11n(&spec, &state).map_err(value_error)
}

#[pyfunction]
fn classify_state_general(m: usize, n: usize, p: usize, q: usize) -> PyResult<usize> {
    core::classify_state_general(m, n, p, q).map_err(value_error)
}

#[pymodule]
pub fn pretzel_knots(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurentPoly>()?;
    m.add_class::<PyPretzelSpec>()?;
    m.add_class::<PyBracketResult>()?;
    m.add_function(wrap_pyfunction!(bracket_statesum, m)?)?;
    m.add_function(wrap_pyfunction!(bracket_closed_p11n, m)?)?;
    m.add_function(wrap_pyfunction!(bracket_closed_general, m)?)?;
    m.add_function(wrap_pyfunction!(bracket_tangle_eval, m)?)?;
    m.add_function(wrap_pyfunction!(conway_closed_p11n, m)?)?;
    m.add_function(wrap_pyfunction!(conway_skein_p11n, m)?)?;
    m.add_function(wrap_pyfunction!(loop_value, m)?)?;
    m.add_function(wrap_pyfunction!(count_circles, m)?)?;
    m.add_function(wrap_pyfunction!(classify_state_p11n, m)?)?;
    m.add_function(wrap_pyfunction!(classify_state_general, m)?)?;
    m.add("DEFAULT_MAX_CROSSINGS", DEFAULT_MAX_CROSSINGS)?;
    Ok(())
}
