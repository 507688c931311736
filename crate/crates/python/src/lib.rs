//! Python bindings for `tpkit`.

use pyo3::exceptions::{PyIndexError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use tpkit::complex::interior_vertices;
use tpkit::curvature::{check_link_condition, is_cat0_disc, vertex_angle_sum};
use tpkit::generators::{generate as generate_complex, Bias, GenerateError, GeneratorSpec, Preset};
use tpkit::io::{check as run_check, parse as parse_document, report_json, serialize_complex, CheckOptions, Complex};
use tpkit::locality::{combinatorial_girth, is_locally_k_large, is_m_located, link_girth, Located};
use tpkit::{build_tp_complex, subdivide, CellComplex, TopologyError};

fn topology_err(e: TopologyError) -> PyErr {
    match e {
        TopologyError::InvalidIndex { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn generate_err(e: GenerateError) -> PyErr {
    match e {
        GenerateError::GenerationBudgetExceeded { .. } | GenerateError::Postcondition(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A validated triangle-pentagon complex.
#[pyclass(name = "TPComplex", module = "tpkit_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyTPComplex {
    inner: tpkit::TPComplex,
}

#[pymethods]
impl PyTPComplex {
    #[new]
    #[pyo3(signature = (vertex_count, triangles, pentagons))]
    fn new(vertex_count: usize, triangles: Vec<[usize; 3]>, pentagons: Vec<[usize; 5]>) -> PyResult<Self> {
        let inner = build_tp_complex(vertex_count, &triangles, &pentagons).map_err(topology_err)?;
        Ok(PyTPComplex { inner })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn triangles(&self) -> Vec<[usize; 3]> {
        self.inner.triangles().to_vec()
    }

    #[getter]
    fn pentagons(&self) -> Vec<[usize; 5]> {
        self.inner.pentagons().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    /// Angle sum at `v` in units of π/30.
    fn angle_sum(&self, v: usize) -> PyResult<u32> {
        Ok(vertex_angle_sum(&self.inner, v).map_err(topology_err)?.units())
    }

    fn interior_vertices(&self) -> PyResult<Vec<usize>> {
        Ok(interior_vertices(&self.inner).map_err(topology_err)?.into_iter().collect())
    }

    /// Interior vertices whose link has a loop shorter than a full turn.
    fn link_condition_violations(&self) -> PyResult<Vec<usize>> {
        Ok(check_link_condition(&self.inner).map_err(topology_err)?.violations)
    }

    fn is_cat0_disc(&self) -> bool {
        is_cat0_disc(&self.inner).passed()
    }

    fn subdivide(&self) -> PyResult<PyStarComplex> {
        Ok(PyStarComplex { inner: subdivide(&self.inner).map_err(topology_err)? })
    }

    /// Canonical `tpc-1` document.
    fn to_json(&self) -> String {
        serialize_complex(self.inner.clone())
    }

    fn __repr__(&self) -> String {
        format!(
            "TPComplex(vertex_count={}, triangles={}, pentagons={})",
            self.inner.vertex_count(),
            self.inner.triangles().len(),
            self.inner.pentagons().len()
        )
    }
}

/// A flag simplicial complex, usually a star subdivision.
#[pyclass(name = "StarComplex", module = "tpkit_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyStarComplex {
    inner: tpkit::SimplicialComplex2D,
}

#[pymethods]
impl PyStarComplex {
    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn triangles(&self) -> Vec<[usize; 3]> {
        self.inner.triangles().to_vec()
    }

    /// Center vertex of each pentagon, in pentagon order.
    #[getter]
    fn centers(&self) -> Vec<usize> {
        self.inner.center_of().to_vec()
    }

    fn is_flag(&self) -> bool {
        self.inner.is_flag()
    }

    fn angle_sum(&self, v: usize) -> PyResult<u32> {
        Ok(vertex_angle_sum(&self.inner, v).map_err(topology_err)?.units())
    }

    /// Length of a shortest full link cycle, or None when there is none.
    fn link_girth(&self, v: usize) -> PyResult<Option<usize>> {
        Ok(link_girth(&self.inner, v).map_err(topology_err)?.finite())
    }

    fn combinatorial_girth(&self, v: usize) -> PyResult<usize> {
        combinatorial_girth(&self.inner, v).map_err(topology_err)
    }

    fn is_locally_k_large(&self, k: usize) -> PyResult<bool> {
        Ok(is_locally_k_large(&self.inner, k).map_err(topology_err)?.verdict.is_pass())
    }

    fn is_m_located(&self, m: usize) -> PyResult<bool> {
        Ok(is_m_located(&self.inner, m).map_err(topology_err)?.verdict == Located::Located)
    }

    fn is_cat0_disc(&self) -> bool {
        is_cat0_disc(&self.inner).passed()
    }

    /// Canonical `tps-1` document.
    fn to_json(&self) -> String {
        serialize_complex(self.inner.clone())
    }

    fn __repr__(&self) -> String {
        format!(
            "StarComplex(vertex_count={}, triangles={}, centers={})",
            self.inner.vertex_count(),
            self.inner.triangles().len(),
            self.inner.center_of().len()
        )
    }
}

fn wrap(py: Python<'_>, complex: Complex) -> PyResult<Py<PyAny>> {
    Ok(match complex {
        Complex::Tp(inner) => Py::new(py, PyTPComplex { inner })?.into_any(),
        Complex::Star(inner) => Py::new(py, PyStarComplex { inner })?.into_any(),
    })
}

fn unwrap(obj: &Bound<'_, PyAny>) -> PyResult<Complex> {
    if let Ok(x) = obj.cast::<PyTPComplex>() {
        Ok(Complex::Tp(x.get().inner.clone()))
    } else if let Ok(x) = obj.cast::<PyStarComplex>() {
        Ok(Complex::Star(x.get().inner.clone()))
    } else {
        Err(PyValueError::new_err("expected a TPComplex or StarComplex"))
    }
}

/// Parses a `tpc-1` or `tps-1` document.
#[pyfunction]
fn parse(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    let doc = parse_document(text.as_bytes()).map_err(|e| PyValueError::new_err(e.to_string()))?;
    wrap(py, doc.complex)
}

/// Runs checks and returns the JSON report. With no check selected, runs all of them.
#[pyfunction]
#[pyo3(signature = (complex, *, link_condition=false, locally_large=None, located=None, five_eight=false, girth=false, parallel=false))]
fn check(
    complex: &Bound<'_, PyAny>,
    link_condition: bool,
    locally_large: Option<usize>,
    located: Option<usize>,
    five_eight: bool,
    girth: bool,
    parallel: bool,
) -> PyResult<String> {
    let mut options = CheckOptions { link_condition, locally_large, located, five_eight, girth, parallel };
    if options == (CheckOptions { parallel, ..CheckOptions::default() }) {
        options = CheckOptions { parallel, ..CheckOptions::all() };
    }
    let report = run_check(&unwrap(complex)?, &options).map_err(topology_err)?;
    Ok(report_json(&report))
}

/// Builds a preset, tiling patch or seeded random disc.
#[pyfunction]
#[pyo3(signature = (preset, *, seed=0, cells=60, bias="1/2", radius=2))]
fn generate(preset: &str, seed: u64, cells: usize, bias: &str, radius: usize) -> PyResult<PyTPComplex> {
    let preset: Preset = preset.parse().map_err(generate_err)?;
    let bias: Bias = bias.parse().map_err(generate_err)?;
    let spec = GeneratorSpec { seed, target_cells: cells, pentagon_bias: bias, radius, ..GeneratorSpec::new(preset) };
    Ok(PyTPComplex { inner: generate_complex(&spec).map_err(generate_err)? })
}

#[pymodule]
fn tpkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTPComplex>()?;
    m.add_class::<PyStarComplex>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add("PRESETS", Preset::ALL.iter().map(|p| p.name()).collect::<Vec<_>>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
