use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use nv_core::cantor::enumerate_delta;
use nv_core::element::ORDER_CAP_DEFAULT;
use nv_core::presentations::{reports_to_json, verify_family, Family, SweepLimits};
use nv_core::render::{render_cell_listing, render_partition_svg};

pyo3::create_exception!(nvgroups, NvError, PyValueError);

fn err(e: nv_core::Error) -> PyErr {
    NvError::new_err(e.to_string())
}

/// An n-tuple of finite binary words, written "(w1,...,wn)" with "-" for ε.
#[pyclass(frozen, eq, hash, ord, skip_from_py_object, module = "nvgroups")]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Address(nv_core::Address);

#[pymethods]
impl Address {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Address).map_err(err)
    }

    #[getter]
    fn arity(&self) -> usize {
        self.0.arity()
    }

    fn coords(&self) -> Vec<String> {
        self.0.coords().iter().map(|w| w.to_string()).collect()
    }

    fn is_prefix_of(&self, other: &Address) -> PyResult<bool> {
        self.0.is_prefix_of(&other.0).map_err(err)
    }

    fn is_incomparable(&self, other: &Address) -> PyResult<bool> {
        self.0.is_incomparable(&other.0).map_err(err)
    }

    fn concat(&self, other: &Address) -> PyResult<Address> {
        self.0.concat(&other.0).map(Address).map_err(err)
    }

    /// (m, k): the maximum coordinate length and how many coordinates attain it.
    fn weight(&self) -> (usize, usize) {
        let w = self.0.weight();
        (w.m, w.k)
    }

    /// Measure of Γ(α) as a string such as "1/8".
    fn measure(&self) -> String {
        self.0.measure().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Address('{}')", self.0)
    }
}

fn address_arg(obj: &Bound<'_, PyAny>) -> PyResult<nv_core::Address> {
    if let Ok(a) = obj.cast::<Address>() {
        return Ok(a.get().0.clone());
    }
    obj.extract::<String>()?.parse().map_err(err)
}

/// An element of nV. `==` is equality as maps, not as cell lists.
#[pyclass(frozen, skip_from_py_object, module = "nvgroups")]
#[derive(Clone)]
struct Element(nv_core::Element);

#[pymethods]
impl Element {
    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        if n < 2 {
            return Err(err(nv_core::Error::BadArity(n)));
        }
        Ok(Element(nv_core::Element::identity(n)))
    }

    /// ⟨α|β⟩; addresses may be `Address` objects or strings.
    #[staticmethod]
    fn transposition(alpha: &Bound<'_, PyAny>, beta: &Bound<'_, PyAny>) -> PyResult<Self> {
        nv_core::Element::transposition(&address_arg(alpha)?, &address_arg(beta)?).map(Element).map_err(err)
    }

    /// Evaluates an expression such as "t[(0,-)|(1,-)] * pi(0)".
    #[staticmethod]
    fn evaluate(expr: &str, n: usize) -> PyResult<Self> {
        evaluate(expr, n)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        nv_core::Element::from_json(text).map(Element).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn arity(&self) -> usize {
        self.0.arity()
    }

    /// (domain, codomain) address pairs.
    fn cells(&self) -> Vec<(Address, Address)> {
        self.0.cells().iter().map(|c| (Address(c.dom.clone()), Address(c.cod.clone()))).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// `self` then `other`: maps act on the right.
    fn compose(&self, other: &Element) -> PyResult<Element> {
        self.0.compose(&other.0).map(Element).map_err(err)
    }

    fn __mul__(&self, other: &Element) -> PyResult<Element> {
        self.compose(other)
    }

    fn invert(&self) -> Element {
        Element(self.0.invert())
    }

    fn __pow__(&self, k: i64, _modulo: Option<&Bound<'_, PyAny>>) -> Element {
        Element(self.0.pow(k))
    }

    /// h⁻¹ · self · h.
    fn conjugate(&self, h: &Element) -> PyResult<Element> {
        self.0.conjugate(&h.0).map(Element).map_err(err)
    }

    fn equals(&self, other: &Element) -> bool {
        self.0.equals(&other.0)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.cast::<Element>().is_ok_and(|o| self.0.equals(&o.get().0))
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Merges sibling cells with matching images.
    fn reduce(&self) -> Element {
        Element(self.0.reduce())
    }

    /// Image of Γ(γ) when it is again a basic open set mapped by one prefix shift.
    fn apply(&self, gamma: &Bound<'_, PyAny>) -> PyResult<Option<Address>> {
        Ok(self.0.apply_address(&address_arg(gamma)?).map(Address))
    }

    /// δ.g: the copy of `self` acting inside Γ(δ).
    fn localize(&self, delta: &Bound<'_, PyAny>) -> PyResult<Element> {
        self.0.localize(&address_arg(delta)?).map(Element).map_err(err)
    }

    /// Order, or None when it exceeds `cap`.
    #[pyo3(signature = (cap = ORDER_CAP_DEFAULT))]
    fn order(&self, py: Python<'_>, cap: u64) -> Option<u64> {
        py.detach(|| self.0.order_of(cap))
    }

    /// SVG for n = 2, an indented cell listing otherwise.
    fn render(&self) -> String {
        render_partition_svg(&self.0).unwrap_or_else(|_| render_cell_listing(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("<Element n={} cells={}>", self.0.arity(), self.0.len())
    }
}

#[pyfunction]
fn evaluate(expr: &str, n: usize) -> PyResult<Element> {
    nv_core::evaluate_str(expr, n).map(Element).map_err(err)
}

/// Canonical form of an expression.
#[pyfunction]
fn parse(expr: &str, n: usize) -> PyResult<String> {
    nv_core::parse(expr, n).map(|e| nv_core::expr::format(&e)).map_err(err)
}

#[pyfunction]
fn equals(lhs: &str, rhs: &str, n: usize) -> PyResult<bool> {
    Ok(evaluate(lhs, n)?.equals(&evaluate(rhs, n)?))
}

#[pyfunction]
#[pyo3(signature = (expr, n, cap = ORDER_CAP_DEFAULT))]
fn order(py: Python<'_>, expr: &str, n: usize, cap: u64) -> PyResult<Option<u64>> {
    Ok(evaluate(expr, n)?.order(py, cap))
}

/// Δ in enumeration order.
#[pyfunction]
fn delta(n: usize) -> PyResult<Vec<Address>> {
    if n < 2 {
        return Err(err(nv_core::Error::BadArity(n)));
    }
    Ok(enumerate_delta(n).into_iter().map(Address).collect())
}

/// Runs a relation sweep and returns the per-family reports as dicts.
#[pyfunction]
#[pyo3(signature = (family, n, L = None, m_max = None, q_max = None))]
#[allow(non_snake_case)]
fn verify<'py>(
    py: Python<'py>,
    family: &str,
    n: usize,
    L: Option<usize>,
    m_max: Option<usize>,
    q_max: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let family: Family = family.parse().map_err(err)?;
    let limits = SweepLimits { l: L, m_max, q_max };
    let reports = py.detach(|| verify_family(family, n, limits)).map_err(err)?;
    let text = reports_to_json(&reports).to_string();
    py.import("json")?.call_method1("loads", (text,))
}

#[pymodule]
fn nvgroups(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NvError", m.py().get_type::<NvError>())?;
    m.add_class::<Address>()?;
    m.add_class::<Element>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(equals, m)?)?;
    m.add_function(wrap_pyfunction!(order, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
