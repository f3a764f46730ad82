//! Python bindings. Field elements cross the boundary as their integer index:
//! 0 is zero and `i ≥ 1` is `t^(i-1)`.

use std::collections::HashMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ppsearch_core::field::{Elem, FieldSpec};
use ppsearch_core::iblast::{self, ClassRecord, SearchOptions, SearchReport, DEFAULT_BRUTE_BUDGET};
use ppsearch_core::registry::{default_field, prime_power};
use ppsearch_core::{normalize, orbits, pa};

fn err(e: ppsearch_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Field", module = "ppsearch", frozen)]
struct PyField(ppsearch_core::Field);

impl PyField {
    fn elem(&self, x: u32) -> PyResult<Elem> {
        self.0.elem(x).map_err(err)
    }
}

#[pymethods]
impl PyField {
    /// The registry field of order `q`, or the one defined by `prim` (degree m down to 0).
    #[new]
    #[pyo3(signature = (q, prim=None))]
    fn new(q: u32, prim: Option<Vec<u32>>) -> PyResult<Self> {
        let field = match prim {
            Some(prim) => {
                let (p, m) = prime_power(q).ok_or_else(|| PyValueError::new_err(format!("{q} is not a prime power")))?;
                ppsearch_core::Field::new(FieldSpec::new(p, m, prim))
            }
            None => default_field(q),
        };
        field.map(PyField).map_err(err)
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.p()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.0.m()
    }

    #[getter]
    fn prim_poly(&self) -> Vec<u32> {
        self.0.spec().prim_poly.clone()
    }

    fn add(&self, x: u32, y: u32) -> PyResult<u16> {
        Ok(self.0.add(self.elem(x)?, self.elem(y)?).0)
    }

    fn sub(&self, x: u32, y: u32) -> PyResult<u16> {
        Ok(self.0.sub(self.elem(x)?, self.elem(y)?).0)
    }

    fn mul(&self, x: u32, y: u32) -> PyResult<u16> {
        Ok(self.0.mul(self.elem(x)?, self.elem(y)?).0)
    }

    fn div(&self, x: u32, y: u32) -> PyResult<u16> {
        Ok(self.0.div(self.elem(x)?, self.elem(y)?).map_err(err)?.0)
    }

    fn inv(&self, x: u32) -> PyResult<u16> {
        Ok(self.0.inv(self.elem(x)?).map_err(err)?.0)
    }

    fn pow(&self, x: u32, n: i64) -> PyResult<u16> {
        Ok(self.0.pow(self.elem(x)?, n).0)
    }

    fn frobenius(&self, x: u32) -> PyResult<u16> {
        Ok(self.0.frobenius(self.elem(x)?).0)
    }

    /// Coordinates of `x` in the basis `1, t, ..., t^{m-1}`.
    fn poly_basis(&self, x: u32) -> PyResult<Vec<u32>> {
        Ok(self.0.poly_basis(self.elem(x)?))
    }

    fn __repr__(&self) -> String {
        format!("Field(q={}, prim={:?})", self.0.q(), self.0.spec().prim_poly)
    }
}

#[pyclass(name = "Poly", module = "ppsearch", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPoly(ppsearch_core::Poly);

#[pymethods]
impl PyPoly {
    /// Parse comma-separated coefficient indices, leading coefficient first.
    #[staticmethod]
    fn parse(field: &PyField, text: &str) -> PyResult<Self> {
        ppsearch_core::Poly::parse(&field.0, text).map(PyPoly).map_err(err)
    }

    #[new]
    fn new(descending: Vec<u16>) -> PyResult<Self> {
        ppsearch_core::Poly::from_descending(&descending).map(PyPoly).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Coefficient indices from the leading term down.
    #[getter]
    fn coeffs(&self) -> Vec<u16> {
        self.0.descending().iter().map(|e| e.0).collect()
    }

    fn eval(&self, field: &PyField, x: u32) -> PyResult<u16> {
        Ok(self.0.eval(&field.0, field.elem(x)?).0)
    }

    fn values(&self, field: &PyField) -> Vec<u16> {
        self.0.values(&field.0).iter().map(|e| e.0).collect()
    }

    fn is_permutation(&self, field: &PyField) -> bool {
        self.0.is_permutation(&field.0)
    }

    fn is_complete(&self, field: &PyField) -> bool {
        self.0.is_complete(&field.0)
    }

    fn is_npp(&self, field: &PyField) -> bool {
        normalize::is_npp(&field.0, &self.0)
    }

    /// `(normal_form, a, b, c)` with `normal_form = a·P(x+b) + c`.
    fn normalize(&self, field: &PyField) -> PyResult<(PyPoly, u16, u16, u16)> {
        let n = normalize::normalize(&field.0, &self.0).map_err(err)?;
        Ok((PyPoly(n.poly), n.a.0, n.b.0, n.c.0))
    }

    fn to_expr(&self) -> String {
        self.0.to_expr()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0.to_text())
    }
}

#[pyclass(name = "EquivClass", module = "ppsearch", frozen, get_all)]
struct PyClass {
    representative: PyPoly,
    size: usize,
    f_len: u32,
    g_len: u32,
    members: Option<Vec<PyPoly>>,
}

#[pymethods]
impl PyClass {
    fn __repr__(&self) -> String {
        format!("EquivClass('{}', size={})", self.representative.0.to_text(), self.size)
    }
}

impl From<&ClassRecord> for PyClass {
    fn from(c: &ClassRecord) -> Self {
        PyClass {
            representative: PyPoly(c.representative.clone()),
            size: c.size,
            f_len: c.f_len,
            g_len: c.g_len,
            members: c.members.as_ref().map(|ms| ms.iter().cloned().map(PyPoly).collect()),
        }
    }
}

#[pyclass(name = "SearchReport", module = "ppsearch", frozen)]
struct PyReport(SearchReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn q(&self) -> u32 {
        self.0.q
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d
    }

    #[getter]
    fn npps(&self) -> u64 {
        self.0.npps
    }

    #[getter]
    fn total(&self) -> u64 {
        self.0.total
    }

    #[getter]
    fn classes(&self) -> Vec<PyClass> {
        self.0.classes.iter().map(PyClass::from).collect()
    }

    fn summary(&self) -> String {
        self.0.summary_line()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __repr__(&self) -> String {
        format!("SearchReport({})", self.0.summary_line())
    }
}

/// All nPPs of degree `d` grouped into classes.
#[pyfunction]
#[pyo3(signature = (field, d, workers=None, members=false))]
fn search(py: Python<'_>, field: &PyField, d: usize, workers: Option<usize>, members: bool) -> PyResult<PyReport> {
    let opts = SearchOptions { workers, checkpoint: None, keep_members: members };
    py.detach(|| iblast::search(&field.0, d, &opts)).map(PyReport).map_err(err)
}

/// Number of degree-`d` PPs, by evaluating every polynomial.
#[pyfunction]
#[pyo3(signature = (field, d, budget=DEFAULT_BRUTE_BUDGET))]
fn brute_force(py: Python<'_>, field: &PyField, d: usize, budget: u128) -> PyResult<u64> {
    py.detach(|| iblast::brute_force(&field.0, d, budget, false)).map(|b| b.count).map_err(err)
}

/// Class of `poly` under F and G; shifts are included by default when `p | deg`.
#[pyfunction]
#[pyo3(signature = (field, poly, include_shift=None))]
fn equiv_class(field: &PyField, poly: &PyPoly, include_shift: Option<bool>) -> PyClass {
    let shift = include_shift.unwrap_or(poly.0.degree().is_multiple_of(field.0.p() as usize));
    let c = orbits::equiv_class(&field.0, &poly.0, shift);
    PyClass {
        representative: PyPoly(c.representative),
        size: c.size,
        f_len: c.f_len,
        g_len: c.g_len,
        members: Some(c.members.into_iter().map(PyPoly).collect()),
    }
}

/// `M(q, q-d) ≥ N_1(q) + ... + N_d(q)`, with `counts` mapping degree to `N_k(q)`.
#[pyfunction]
fn m_lower_bound(q: u32, d: usize, counts: HashMap<usize, u64>) -> PyResult<u64> {
    let mut table = pa::CountTable::default();
    for (k, total) in counts {
        table.insert(q, k, total, "python");
    }
    pa::m_lower_bound(q, d, &table).map_err(err)
}

/// The bundled `N_k(16)` values keyed by degree.
#[pyfunction]
fn q16_counts() -> HashMap<usize, u64> {
    pa::q16_counts().rows().map(|r| (r.d, r.total)).collect()
}

#[pyfunction]
fn hamming(a: Vec<u16>, b: Vec<u16>) -> PyResult<usize> {
    pa::hamming(&a, &b).map_err(err)
}

#[pymodule]
fn ppsearch(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyClass>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(equiv_class, m)?)?;
    m.add_function(wrap_pyfunction!(m_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(q16_counts, m)?)?;
    m.add_function(wrap_pyfunction!(hamming, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
