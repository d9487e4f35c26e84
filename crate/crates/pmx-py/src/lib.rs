//! Python bindings for the premaniplex toolkit: words, premaniplexes,
//! voltage operators, the catalog, and the PMX file format.

use pmx::pmxfile::{self, PmxObject};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: pmx::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An element of the rank-n universal string Coxeter group, kept in
/// canonical form.
#[pyclass(name = "Word", skip_from_py_object)]
#[derive(Clone)]
struct Word {
    inner: pmx::GroupWord,
}

#[pymethods]
impl Word {
    #[new]
    fn new(rank: usize, letters: Vec<usize>) -> PyResult<Self> {
        Ok(Word {
            inner: pmx::GroupWord::new(rank, letters).map_err(err)?,
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn letters(&self) -> Vec<usize> {
        self.inner.letters().to_vec()
    }

    fn mul(&self, other: &Word) -> PyResult<Word> {
        Ok(Word {
            inner: self.inner.multiply(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> Word {
        Word {
            inner: self.inner.inverse(),
        }
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn is_even(&self) -> bool {
        self.inner.is_even()
    }

    fn __repr__(&self) -> String {
        format!("Word(rank {}, {})", self.inner.rank(), self.inner)
    }

    fn __eq__(&self, other: &Word) -> bool {
        self.inner == other.inner
    }
}

/// A finite premaniplex: one involution per color on a dense vertex set.
#[pyclass(name = "Premaniplex", skip_from_py_object)]
#[derive(Clone)]
struct Premaniplex {
    inner: pmx::Premaniplex,
}

#[pymethods]
impl Premaniplex {
    #[new]
    fn new(rank: usize, adjacency: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = pmx::Premaniplex::new(rank, adjacency).map_err(err)?;
        inner
            .validate()
            .map_err(|v| PyValueError::new_err(v.to_string()))?;
        Ok(Premaniplex { inner })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn neighbor(&self, color: usize, v: usize) -> PyResult<usize> {
        if color >= self.inner.rank() || v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err("color or vertex out of range"));
        }
        Ok(self.inner.neighbor(color, v))
    }

    fn act(&self, word: &Word, v: usize) -> PyResult<usize> {
        self.inner.act(&word.inner, v).map_err(err)
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.inner.components()
    }

    fn component_of(&self, v: usize) -> PyResult<Premaniplex> {
        Ok(Premaniplex {
            inner: self.inner.component_of(v).map_err(err)?.graph,
        })
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_maniplex(&self) -> bool {
        self.inner.is_maniplex()
    }

    fn face_counts(&self) -> Vec<usize> {
        self.inner.face_counts()
    }

    fn restrict_section(&self, k: isize, l: isize) -> PyResult<Premaniplex> {
        Ok(Premaniplex {
            inner: self.inner.restrict_section(k, l).map_err(err)?,
        })
    }

    fn covers_two_orbit(&self, semiedge_colors: Vec<usize>) -> bool {
        self.inner.covers_two_orbit(&semiedge_colors)
    }

    #[pyo3(signature = (other, seed=None))]
    fn find_isomorphism(
        &self,
        other: &Premaniplex,
        seed: Option<(usize, usize)>,
    ) -> Option<Vec<usize>> {
        self.inner.find_isomorphism(&other.inner, seed)
    }

    fn automorphisms(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(pmx::symmetry::automorphisms(&self.inner)
            .map_err(err)?
            .elements()
            .to_vec())
    }

    #[pyo3(signature = (gens=None))]
    fn symmetry_type_graph(&self, gens: Option<Vec<Vec<usize>>>) -> PyResult<Premaniplex> {
        let inner =
            pmx::symmetry::symmetry_type_graph(&self.inner, gens.as_deref()).map_err(err)?;
        Ok(Premaniplex { inner })
    }

    fn quotient(&self, gens: Vec<Vec<usize>>) -> PyResult<Premaniplex> {
        Ok(Premaniplex {
            inner: pmx::symmetry::quotient(&self.inner, &gens).map_err(err)?,
        })
    }

    fn distinguished_generators(&self, base: usize) -> PyResult<Vec<Vec<usize>>> {
        pmx::symmetry::distinguished_generators(&self.inner, base).map_err(err)
    }

    fn to_pmx(&self) -> String {
        pmxfile::write_pmx(&PmxObject::Premaniplex(self.inner.clone()))
    }

    fn to_dot(&self) -> String {
        pmx::dot::premaniplex_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Premaniplex(rank {}, {} vertices)",
            self.inner.rank(),
            self.inner.vertex_count()
        )
    }

    fn __eq__(&self, other: &Premaniplex) -> bool {
        self.inner == other.inner
    }
}

/// A voltage operator: a premaniplex with canonical-word voltages.
#[pyclass(name = "Operator", skip_from_py_object)]
#[derive(Clone)]
struct Operator {
    inner: pmx::VoltageOperator,
}

#[pymethods]
impl Operator {
    #[getter]
    fn in_rank(&self) -> usize {
        self.inner.in_rank()
    }

    #[getter]
    fn out_rank(&self) -> usize {
        self.inner.out_rank()
    }

    fn graph(&self) -> Premaniplex {
        Premaniplex {
            inner: self.inner.graph().clone(),
        }
    }

    fn voltage(&self, color: usize, y: usize) -> PyResult<Word> {
        if color >= self.inner.out_rank() || y >= self.inner.graph().vertex_count() {
            return Err(PyValueError::new_err("color or vertex out of range"));
        }
        Ok(Word {
            inner: self.inner.voltage(color, y).clone(),
        })
    }

    fn apply(&self, x: &Premaniplex) -> PyResult<Premaniplex> {
        Ok(Premaniplex {
            inner: self.inner.apply(&x.inner).map_err(err)?,
        })
    }

    fn compose(&self, second: &Operator) -> PyResult<Operator> {
        Ok(Operator {
            inner: self.inner.compose(&second.inner).map_err(err)?,
        })
    }

    fn is_mixing(&self) -> bool {
        self.inner.is_mixing()
    }

    fn is_product_connected(&self, x: &Premaniplex, y0: usize) -> PyResult<bool> {
        self.inner.is_product_connected(&x.inner, y0).map_err(err)
    }

    fn normalize_voltages(&self, root: usize) -> PyResult<Operator> {
        Ok(Operator {
            inner: self.inner.normalize_voltages(root).map_err(err)?,
        })
    }

    fn to_pmx(&self) -> String {
        pmxfile::write_pmx(&PmxObject::Operator(self.inner.clone()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Operator(({}, {}), {} vertices)",
            self.inner.in_rank(),
            self.inner.out_rank(),
            self.inner.graph().vertex_count()
        )
    }

    fn __eq__(&self, other: &Operator) -> bool {
        self.inner == other.inner
    }
}

/// Builds a sample premaniplex from the catalog.
#[pyfunction]
#[pyo3(signature = (name, params=vec![]))]
fn sample(name: &str, params: Vec<usize>) -> PyResult<Premaniplex> {
    Ok(Premaniplex {
        inner: pmx::catalog::sample(name, &params).map_err(err)?,
    })
}

/// Builds a catalog operator by name.
#[pyfunction]
#[pyo3(signature = (name, rank=None, params=vec![], input=None))]
fn operator(
    name: &str,
    rank: Option<usize>,
    params: Vec<i64>,
    input: Option<&Premaniplex>,
) -> PyResult<Operator> {
    let inner = pmx::catalog::operator_by_name(name, rank, &params, input.map(|x| &x.inner))
        .map_err(err)?;
    Ok(Operator { inner })
}

/// The mix of two premaniplexes of equal rank.
#[pyfunction]
fn mix(x: &Premaniplex, y: &Premaniplex) -> PyResult<Premaniplex> {
    Ok(Premaniplex {
        inner: pmx::voltage::mix(&x.inner, &y.inner).map_err(err)?,
    })
}

/// Parses a PMX document; returns a Premaniplex or an Operator.
#[pyfunction]
fn parse_pmx(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    match pmxfile::parse_pmx(text).map_err(err)? {
        PmxObject::Premaniplex(inner) => {
            Ok(Premaniplex { inner }.into_pyobject(py)?.into_any().unbind())
        }
        PmxObject::Operator(inner) => Ok(Operator { inner }.into_pyobject(py)?.into_any().unbind()),
        PmxObject::VoltagePremaniplex(_) => Err(PyValueError::new_err(
            "finite voltage premaniplexes are not exposed to Python",
        )),
    }
}

#[pyfunction]
fn catalog_names() -> (Vec<String>, Vec<String>) {
    (
        pmx::catalog::OPERATOR_NAMES
            .iter()
            .map(|s| s.to_string())
            .collect(),
        pmx::catalog::SAMPLE_NAMES
            .iter()
            .map(|s| s.to_string())
            .collect(),
    )
}

#[pymodule]
fn pmx_py(_py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Word>()?;
    m.add_class::<Premaniplex>()?;
    m.add_class::<Operator>()?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(operator, m)?)?;
    m.add_function(wrap_pyfunction!(mix, m)?)?;
    m.add_function(wrap_pyfunction!(parse_pmx, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    Ok(())
}
