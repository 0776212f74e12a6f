use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyIndexError, PyValueError};
use pyo3::prelude::*;

use cubetti::grid::VoxelGrid;
use cubetti::morse::{self, NeighborhoodCode, Options};
use cubetti::shapes::{self, ShapeSpec};
use cubetti::Error;

create_exception!(cubetti_py, CubettiError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::InvalidShape(_) => PyValueError::new_err(e.to_string()),
        other => CubettiError::new_err(other.to_string()),
    }
}

/// Binary voxel grid; cube `(i, j, k)` is the unit cube with that min corner.
#[pyclass(name = "VoxelGrid", module = "cubetti_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyVoxelGrid {
    inner: VoxelGrid,
}

#[pymethods]
impl PyVoxelGrid {
    #[new]
    fn new(dims: [usize; 3]) -> PyResult<Self> {
        Ok(Self { inner: VoxelGrid::new(dims).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_cubes(dims: [usize; 3], cubes: Vec<[usize; 3]>) -> PyResult<Self> {
        Ok(Self { inner: VoxelGrid::from_cubes(dims, cubes).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Self { inner: text.parse().map_err(to_py)? })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn dims(&self) -> (usize, usize, usize) {
        let [x, y, z] = self.inner.dims();
        (x, y, z)
    }

    fn get(&self, i: i64, j: i64, k: i64) -> bool {
        self.inner.get(i, j, k)
    }

    fn set(&mut self, i: usize, j: usize, k: usize, occupied: bool) -> PyResult<()> {
        let [nx, ny, nz] = self.inner.dims();
        if i >= nx || j >= ny || k >= nz {
            return Err(PyIndexError::new_err(format!("cube ({i}, {j}, {k}) outside {nx}x{ny}x{nz}")));
        }
        self.inner.set(i, j, k, occupied);
        Ok(())
    }

    fn occupied(&self) -> Vec<(usize, usize, usize)> {
        self.inner.occupied().map(|[i, j, k]| (i, j, k)).collect()
    }

    fn occupied_count(&self) -> usize {
        self.inner.occupied_count()
    }

    fn complement(&self) -> Self {
        Self { inner: self.inner.complement() }
    }

    /// The unstacked, padded body the sweeps run on.
    fn preprocess(&self) -> Self {
        Self { inner: cubetti::preprocess::preprocess(&self.inner).0 }
    }

    fn __len__(&self) -> usize {
        self.inner.occupied_count()
    }

    fn __repr__(&self) -> String {
        let [x, y, z] = self.inner.dims();
        format!("VoxelGrid(dims=({x}, {y}, {z}), occupied={})", self.inner.occupied_count())
    }
}

#[pyclass(name = "BettiReport", module = "cubetti_py", get_all, frozen)]
pub struct PyBettiReport {
    b0: usize,
    b1: usize,
    b2: usize,
    chi: i64,
    c0: usize,
    c1: usize,
    c2: usize,
    monkey: usize,
    n_c: usize,
    rank_d1: usize,
    rank_d2: usize,
    /// Critical points of both passes, `x,y,z,class,is_double,pass`.
    critical_csv: String,
}

#[pymethods]
impl PyBettiReport {
    fn betti(&self) -> (usize, usize, usize) {
        (self.b0, self.b1, self.b2)
    }

    fn __repr__(&self) -> String {
        format!(
            "BettiReport(b0={}, b1={}, b2={}, chi={}, c0={}, c1={}, c2={}, monkey={})",
            self.b0, self.b1, self.b2, self.chi, self.c0, self.c1, self.c2, self.monkey
        )
    }
}

/// Full Morse pipeline on a grid.
#[pyfunction]
#[pyo3(signature = (grid, preprocess = true))]
fn compute(py: Python<'_>, grid: &PyVoxelGrid, preprocess: bool) -> PyResult<PyBettiReport> {
    let inner = grid.inner.clone();
    let c = py
        .detach(move || morse::compute(&inner, Options { preprocess }))
        .map_err(to_py)?;
    let r = &c.report;
    Ok(PyBettiReport {
        b0: r.betti.b0,
        b1: r.betti.b1,
        b2: r.betti.b2,
        chi: r.chi,
        c0: r.c0,
        c1: r.c1,
        c2: r.c2,
        monkey: r.monkey,
        n_c: r.n_c,
        rank_d1: r.rank_d1,
        rank_d2: r.rank_d2,
        critical_csv: c.critical_csv(),
    })
}

/// `(b0, b1, b2)` of a grid after preprocessing.
#[pyfunction]
fn betti(py: Python<'_>, grid: &PyVoxelGrid) -> PyResult<(usize, usize, usize)> {
    let inner = grid.inner.clone();
    let b = py.detach(move || morse::betti::betti_numbers(&inner)).map_err(to_py)?;
    Ok(b.as_tuple())
}

/// Homology of the full cubical complex of the grid as given.
#[pyfunction]
fn betti_bruteforce(py: Python<'_>, grid: &PyVoxelGrid) -> PyResult<(usize, usize, usize)> {
    let inner = grid.inner.clone();
    let r = py.detach(move || cubetti::oracle::betti_bruteforce(&inner)).map_err(to_py)?;
    Ok(r.betti.as_tuple())
}

#[pyfunction]
fn euler_cell_count(grid: &PyVoxelGrid) -> i64 {
    morse::euler_cell_count(&grid.inner)
}

/// Test bodies: `box`, `shell`, `ring`, `two-components`, `random`.
#[pyfunction]
#[pyo3(signature = (shape, dims = [3, 3, 3], size = None, density = 0.5, seed = 0))]
fn generate(shape: &str, dims: [usize; 3], size: Option<usize>, density: f64, seed: u64) -> PyResult<PyVoxelGrid> {
    let spec = match shape {
        "box" => ShapeSpec::SolidBox { dims },
        "shell" => ShapeSpec::Shell { n: size.unwrap_or(3) },
        "ring" => ShapeSpec::Ring { n: size.unwrap_or(3) },
        "two-components" => ShapeSpec::TwoComponents { side: size.unwrap_or(1) },
        "random" => ShapeSpec::Random { dims, density, seed },
        other => return Err(PyValueError::new_err(format!("unknown shape `{other}`"))),
    };
    Ok(PyVoxelGrid { inner: shapes::generate(&spec).map_err(to_py)? })
}

/// Class name of an 8-bit neighbourhood code.
#[pyfunction]
fn classify_code(code: u8) -> &'static str {
    morse::classify(NeighborhoodCode(code)).name()
}

/// The 256 class names, regenerated from scratch.
#[pyfunction]
fn classification_table() -> Vec<&'static str> {
    cubetti::oracle::local::generate_classification_table()
        .iter()
        .map(|c| c.name())
        .collect()
}

#[pymodule]
fn cubetti_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVoxelGrid>()?;
    m.add_class::<PyBettiReport>()?;
    m.add("CubettiError", m.py().get_type::<CubettiError>())?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(betti_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(euler_cell_count, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(classify_code, m)?)?;
    m.add_function(wrap_pyfunction!(classification_table, m)?)?;
    Ok(())
}
