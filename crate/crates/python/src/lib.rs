//! Python module `h3dunkl`: exact polynomials, Dunkl operators, pairings,
//! the q/w/φ families and the verification suites.

use std::sync::OnceLock;

use h3_dunkl::cli::{closed_norm, parse_direction, resolve_poly, PolySpec};
use h3_dunkl::dunkl::{unit, DunklContext};
use h3_dunkl::group::Vec3;
use h3_dunkl::numeric::mc_pairing;
use h3_dunkl::polyalg::MultiPoly;
use h3_dunkl::scalars::{ParamScalar, Rational};
use h3_dunkl::verify::{run_suite, Suite, VerifyOptions};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: h3_dunkl::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn base_context() -> &'static DunklContext {
    static C: OnceLock<DunklContext> = OnceLock::new();
    C.get_or_init(|| DunklContext::new().expect("group generation"))
}

fn rational(s: &str) -> PyResult<Rational> {
    s.trim().parse::<Rational>().map_err(|_| PyValueError::new_err(format!("not a rational number: {}", s)))
}

fn to_py_json<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

/// Exact element of Q(τ)(κ)[ω, 1/ω].
#[pyclass(name = "Scalar", module = "h3dunkl", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyScalar(ParamScalar);

#[pymethods]
impl PyScalar {
    #[new]
    fn new(expr: &str) -> PyResult<Self> {
        ParamScalar::parse(expr).map(PyScalar).map_err(err)
    }

    /// Numeric value at the given κ, ω.
    fn to_float(&self, kappa: f64, omega: f64) -> f64 {
        self.0.to_f64(kappa, omega)
    }

    fn substitute_kappa(&self, kappa: &str) -> PyResult<Self> {
        self.0.substitute_kappa(&rational(kappa)?).map(PyScalar).map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyScalar(self.0.add_ref(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyScalar(self.0.sub_ref(&o.0))
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyScalar(self.0.mul_ref(&o.0))
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.div_ref(&o.0).map(PyScalar).map_err(err)
    }

    fn __neg__(&self) -> Self {
        PyScalar(self.0.neg())
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }
}

/// Polynomial in x1, x2, x3 with exact parametric coefficients.
#[pyclass(name = "Poly", module = "h3dunkl", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyPoly(MultiPoly);

#[pymethods]
impl PyPoly {
    /// Parse an expression, or a family spec such as `phi:6` or `phig:10`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let s = PolySpec::parse(spec).map_err(err)?;
        resolve_poly(base_context(), &s).map(PyPoly).map_err(err)
    }

    /// `q`, `w` or `phi` of degree `n` at vertex index `vertex` of I₊, or the
    /// G-invariant sum when `invariant` is set.
    #[staticmethod]
    #[pyo3(signature = (kind, n, vertex=None, invariant=false))]
    fn family(kind: &str, n: usize, vertex: Option<usize>, invariant: bool) -> PyResult<Self> {
        let spec = match (invariant, vertex) {
            (true, _) => format!("{}g:{}", kind, n),
            (false, Some(v)) => format!("{}:{}:{}", kind, n, v),
            (false, None) => format!("{}:{}", kind, n),
        };
        Self::new(&spec)
    }

    #[staticmethod]
    fn norm_sq() -> Self {
        PyPoly(MultiPoly::norm_sq(3))
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn partial(&self, i: usize) -> PyResult<Self> {
        if i >= 3 {
            return Err(PyValueError::new_err("index must be 0, 1 or 2"));
        }
        Ok(PyPoly(self.0.partial(i)))
    }

    fn homogeneous_component(&self, k: u32) -> Self {
        PyPoly(self.0.homogeneous_component(k))
    }

    fn substitute_kappa(&self, kappa: &str) -> PyResult<Self> {
        self.0.substitute_kappa(&rational(kappa)?).map(PyPoly).map_err(err)
    }

    /// Float value at `x` for numeric κ, ω.
    fn eval(&self, x: [f64; 3], kappa: f64, omega: f64) -> PyResult<f64> {
        h3_dunkl::numeric::float_eval(&self.0, &x, kappa, omega).map_err(err)
    }

    fn to_json<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py_json(py, &self.0.to_json())
    }

    fn __add__(&self, o: &Self) -> Self {
        PyPoly(self.0.add(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyPoly(self.0.sub(&o.0))
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyPoly(self.0.mul(&o.0))
    }

    fn __pow__(&self, e: u32, _m: Option<u32>) -> Self {
        PyPoly(self.0.pow(e))
    }

    fn __neg__(&self) -> Self {
        PyPoly(self.0.neg())
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }
}

fn direction(u: &Bound<'_, PyAny>) -> PyResult<Vec3> {
    if let Ok(i) = u.extract::<usize>() {
        if (1..=3).contains(&i) {
            return Ok(unit(i - 1));
        }
        return Err(PyValueError::new_err("axis must be 1, 2 or 3"));
    }
    let s: String = u.extract()?;
    parse_direction(&s).map_err(err)
}

/// The H3 Dunkl calculus with κ symbolic, or fixed to a rational.
#[pyclass(name = "Context", module = "h3dunkl", frozen)]
pub struct PyContext(DunklContext);

impl PyContext {
    /// `p` with κ specialized when this context fixes it.
    fn input(&self, p: &PyPoly) -> PyResult<MultiPoly> {
        match self.0.kappa_value() {
            Some(k) => p.0.substitute_kappa(k).map_err(err),
            None => Ok(p.0.clone()),
        }
    }
}

#[pymethods]
impl PyContext {
    #[new]
    #[pyo3(signature = (kappa=None))]
    fn new(kappa: Option<&str>) -> PyResult<Self> {
        let base = base_context();
        Ok(PyContext(match kappa {
            Some(k) => base.at_kappa(rational(k)?),
            None => base.clone(),
        }))
    }

    /// Group census as a dict.
    fn census<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py_json(py, &serde_json::to_value(self.0.group().census()).unwrap())
    }

    /// Positive roots as strings.
    fn roots(&self) -> Vec<[String; 3]> {
        self.0.roots().iter().map(|v| [v[0].to_string(), v[1].to_string(), v[2].to_string()]).collect()
    }

    /// `p(xW)` for group element `w` (0..120).
    fn act(&self, w: usize, p: &PyPoly) -> PyResult<PyPoly> {
        if w >= self.0.group().len() {
            return Err(PyValueError::new_err("group index out of range"));
        }
        Ok(PyPoly(self.0.act(w, &self.input(p)?)))
    }

    /// `⟨u,∇_κ⟩p`; `u` is an axis 1..3 or a string like `"0,tau,1"`.
    fn dunkl(&self, u: &Bound<'_, PyAny>, p: &PyPoly) -> PyResult<PyPoly> {
        self.0.dunkl(&direction(u)?, &self.input(p)?).map(PyPoly).map_err(err)
    }

    fn laplacian(&self, p: &PyPoly) -> PyResult<PyPoly> {
        self.0.laplacian(&self.input(p)?).map(PyPoly).map_err(err)
    }

    fn hamiltonian(&self, p: &PyPoly) -> PyResult<PyPoly> {
        self.0.hamiltonian_tilde(&self.input(p)?).map(PyPoly).map_err(err)
    }

    fn j_square(&self, p: &PyPoly) -> PyResult<PyPoly> {
        self.0.angular_j_square(&self.input(p)?).map(PyPoly).map_err(err)
    }

    fn harmonic_project(&self, p: &PyPoly) -> PyResult<PyPoly> {
        self.0.harmonic_project(&self.input(p)?).map(PyPoly).map_err(err)
    }

    /// `[(j, h_j)]` with `p = Σ |x|^{2j} h_j` and each `h_j` harmonic.
    fn harmonic_decompose(&self, p: &PyPoly) -> PyResult<Vec<(u32, PyPoly)>> {
        Ok(self.0.harmonic_decompose(&self.input(p)?).map_err(err)?.into_iter().map(|(j, h)| (j, PyPoly(h))).collect())
    }

    fn pairing_kw(&self, p: &PyPoly, q: &PyPoly) -> PyResult<PyScalar> {
        self.0.pairing_kw(&self.input(p)?, &self.input(q)?).map(PyScalar).map_err(err)
    }

    fn pairing_l2(&self, p: &PyPoly, q: &PyPoly) -> PyResult<PyScalar> {
        self.0.pairing_l2(&self.input(p)?, &self.input(q)?).map(PyScalar).map_err(err)
    }

    /// The Gaussian pairing from explicit moments at a non-negative integer κ.
    fn pairing_l2_moments(&self, p: &PyPoly, q: &PyPoly, kappa: &str) -> PyResult<PyScalar> {
        self.0.pairing_l2_moments(&self.input(p)?, &self.input(q)?, &rational(kappa)?).map(PyScalar).map_err(err)
    }

    fn energy(&self, n: u32) -> PyScalar {
        PyScalar(self.0.energy(n))
    }
}

/// Closed-form squared L² norm of a family member.
#[pyfunction]
#[pyo3(signature = (kind, n, invariant=false))]
fn closed_norm_sq(kind: &str, n: usize, invariant: bool) -> PyResult<PyScalar> {
    closed_norm(kind, n, invariant).map(PyScalar).map_err(err)
}

/// Monte-Carlo `⟨p,q⟩₂`; returns `(estimate, standard_error)`.
#[pyfunction]
#[pyo3(signature = (p, q, kappa, omega, samples=1_000_000, seed=1))]
fn mc_pair(py: Python<'_>, p: &PyPoly, q: &PyPoly, kappa: f64, omega: f64, samples: usize, seed: u64) -> PyResult<(f64, f64)> {
    let (p, q) = (p.0.clone(), q.0.clone());
    let e = py.detach(move || mc_pairing(base_context().roots(), &p, &q, kappa, omega, samples, seed)).map_err(err)?;
    Ok((e.estimate, e.std_error))
}

/// Run one suite; returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (suite, slow=false))]
fn verify<'py>(py: Python<'py>, suite: &str, slow: bool) -> PyResult<Bound<'py, PyAny>> {
    let s = Suite::parse(suite).ok_or_else(|| PyValueError::new_err(format!("unknown suite {}", suite)))?;
    let opts = VerifyOptions { slow, ..Default::default() };
    let r = py.detach(|| run_suite(base_context(), s, &opts));
    to_py_json(py, &serde_json::to_value(&r).unwrap())
}

#[pymodule]
fn h3dunkl(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyContext>()?;
    m.add_function(wrap_pyfunction!(closed_norm_sq, m)?)?;
    m.add_function(wrap_pyfunction!(mc_pair, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SUITES", Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>())?;
    Ok(())
}
