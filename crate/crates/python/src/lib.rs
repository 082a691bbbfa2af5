//! Python bindings for `liecurv`.
//!
//! Exact values cross the boundary as strings (`"1/3*sqrt(6)"`) or as
//! [`Scalar`] objects. Structured results come back as JSON text in the
//! same layout as the CLI's `--format json`.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyType;

use liecurv::catalog::{self, CatalogParams};
use liecurv::curvature::{einstein_check, ricci, EinsteinVerdict};
use liecurv::foliation::{classify, FoliationSplit};
use liecurv::obstruction::paired_eigenvalue_test;
use liecurv::report::{self, Render};
use liecurv::wedge::{curvature_operator, WedgeBasis};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn render(float: bool) -> Render {
    Render {
        float,
        ..Render::default()
    }
}

fn strings(m: &liecurv::linalg::Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

/// Exact element of a multi-quadratic field.
#[pyclass(name = "Scalar", module = "liecurv", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyScalar(liecurv::Scalar);

fn coerce(obj: &Bound<'_, PyAny>) -> PyResult<liecurv::Scalar> {
    if let Ok(s) = obj.extract::<PyScalar>() {
        return Ok(s.0);
    }
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(liecurv::Scalar::from_integer(i));
    }
    if let Ok(t) = obj.extract::<String>() {
        return t.parse().map_err(value_err);
    }
    Err(PyValueError::new_err("expected Scalar, int or str"))
}

fn divide(a: &liecurv::Scalar, b: &liecurv::Scalar) -> PyResult<PyScalar> {
    if b.is_zero() {
        return Err(PyZeroDivisionError::new_err("division by zero"));
    }
    Ok(PyScalar(a * &b.invert().map_err(value_err)?))
}

#[pymethods]
impl PyScalar {
    #[new]
    fn new(value: &Bound<'_, PyAny>) -> PyResult<Self> {
        coerce(value).map(PyScalar)
    }

    #[staticmethod]
    fn sqrt(n: u64) -> PyResult<Self> {
        liecurv::Scalar::sqrt(n).map(PyScalar).map_err(value_err)
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn sign(&self) -> i32 {
        self.0.signum()
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __neg__(&self) -> Self {
        PyScalar(-&self.0)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyScalar(&self.0 + &coerce(other)?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyScalar(&self.0 - &coerce(other)?))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyScalar(&coerce(other)? - &self.0))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyScalar(&self.0 * &coerce(other)?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        divide(&self.0, &coerce(other)?)
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        divide(&coerce(other)?, &self.0)
    }
}

/// Lie algebra with an orthonormal basis.
#[pyclass(name = "Algebra", module = "liecurv", frozen)]
struct PyAlgebra {
    alg: liecurv::MetricLieAlgebra,
    name: Option<String>,
}

impl PyAlgebra {
    fn split(&self, vertical: &str) -> PyResult<FoliationSplit> {
        FoliationSplit::parse(&self.alg, vertical).map_err(value_err)
    }
}

#[pymethods]
impl PyAlgebra {
    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        let alg = liecurv::MetricLieAlgebra::from_json(text).map_err(value_err)?;
        Ok(PyAlgebra { alg, name: None })
    }

    /// Build a catalog entry, e.g. `Algebra.catalog("g2", alpha=["1", "0"])`.
    #[classmethod]
    #[pyo3(signature = (name, dim=None, n=None, alpha=None))]
    fn catalog(
        _cls: &Bound<'_, PyType>,
        name: &str,
        dim: Option<usize>,
        n: Option<usize>,
        alpha: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Self> {
        let alpha = alpha
            .map(|a| a.iter().map(coerce).collect::<PyResult<Vec<_>>>())
            .transpose()?;
        let alg = catalog::build(name, &CatalogParams { dim, n, alpha }).map_err(value_err)?;
        Ok(PyAlgebra {
            alg,
            name: Some(name.to_string()),
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.alg.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.alg.labels().to_vec()
    }

    fn is_valid(&self) -> bool {
        self.alg.validate().is_valid()
    }

    fn to_json(&self) -> String {
        self.alg.to_json()
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    fn c(&self, i: usize, j: usize, k: usize) -> PyScalar {
        PyScalar(self.alg.c(i, j, k).clone())
    }

    fn ricci(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(strings(ricci(&self.alg).map_err(value_err)?.matrix()))
    }

    /// Einstein constant, or `None` when the metric is not Einstein.
    fn einstein_constant(&self) -> PyResult<Option<PyScalar>> {
        Ok(match einstein_check(&self.alg).map_err(value_err)? {
            EinsteinVerdict::Einstein { constant } => Some(PyScalar(constant)),
            _ => None,
        })
    }

    /// Operator matrix on the exterior square as exact strings.
    ///
    /// `order` is `"lex"` or `"display"` (reference ordering of a catalog entry).
    #[pyo3(signature = (order="lex"))]
    fn curvature_operator(&self, order: &str) -> PyResult<Vec<Vec<String>>> {
        let basis = match order {
            "lex" => WedgeBasis::lexicographic(self.alg.dim()),
            "display" => {
                let name = self
                    .name
                    .as_deref()
                    .ok_or_else(|| PyValueError::new_err("not a catalog algebra"))?;
                catalog::display_basis(name, &self.alg)
                    .map_err(value_err)?
                    .ok_or_else(|| PyValueError::new_err(format!("{name} has no reference ordering")))?
            }
            other => return Err(PyValueError::new_err(format!("unknown order {other:?}"))),
        };
        Ok(strings(
            curvature_operator(&self.alg, &basis).map_err(value_err)?.matrix(),
        ))
    }

    /// Flags for the vertical index set, e.g. `"A,X3,X4"`.
    fn classify(&self, vertical: &str) -> PyResult<String> {
        let flags = classify(&self.alg, &self.split(vertical)?).map_err(value_err)?;
        Ok(report::to_json(&report::flags_summary(&flags, &render(false))))
    }

    #[pyo3(signature = (vertical, float=false))]
    fn foliation_report(&self, vertical: &str, float: bool) -> PyResult<String> {
        let split = self.split(vertical)?;
        Ok(report::to_json(
            &report::foliation_report(&self.alg, &split, &render(float)).map_err(value_err)?,
        ))
    }

    /// `"obstructed"`, `"passes"` or `"not-applicable"`.
    fn obstruction_verdict(&self) -> PyResult<String> {
        let rep = paired_eigenvalue_test(&self.alg).map_err(value_err)?;
        let v = serde_json::to_value(&rep.verdict).map_err(value_err)?;
        Ok(v["verdict"].as_str().unwrap_or_default().to_string())
    }

    #[pyo3(signature = (float=false))]
    fn obstruction_report(&self, float: bool) -> PyResult<String> {
        Ok(report::to_json(
            &report::obstruction_report(&self.alg, &render(float)).map_err(value_err)?,
        ))
    }

    #[pyo3(signature = (vertical, samples, seed=0))]
    fn sample_complex_structures(&self, vertical: &str, samples: usize, seed: u64) -> PyResult<String> {
        let split = self.split(vertical)?;
        let rep = report::sampling_report(&self.alg, &split, samples, seed, &render(false)).map_err(value_err)?;
        Ok(report::to_json(&rep))
    }

    fn __repr__(&self) -> String {
        match &self.name {
            Some(n) => format!("Algebra(catalog={n:?}, dim={})", self.alg.dim()),
            None => format!("Algebra(dim={})", self.alg.dim()),
        }
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::ENTRIES.iter().map(|e| e.name).collect()
}

#[pymodule]
#[pyo3(name = "liecurv")]
fn liecurv_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    Ok(())
}
