//! Python module `bipot`: grids, sampled functions, graphs, reports and the
//! conjugation, blur, cover and check routines of `bipot-core`.

use bipot_core::bipotential::{self as bp, Tolerance};
use bipot_core::blur::{self, BlurInput, BlurSpec};
use bipot_core::covers::{self, MaithmOptions};
use bipot_core::examples::{ConeFixture, ElasticityFixture};
use bipot_core::legendre::{self, ConjugatePair};
use bipot_core::{io, report_schema_version, CheckReport, Error, ExtReal};
use pyo3::exceptions::{PyIOError, PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    match e {
        Error::Io(e) => PyIOError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn ext(vals: Vec<f64>) -> PyResult<Vec<ExtReal>> {
    vals.into_iter().map(|v| ExtReal::new(v).map_err(err)).collect()
}

fn raw(vals: &[ExtReal]) -> Vec<f64> {
    vals.iter().map(|v| v.raw()).collect()
}

fn tolerance(tol: Option<f64>, x: &bipot_core::Grid, y: &bipot_core::Grid) -> Tolerance {
    tol.map_or_else(|| Tolerance::resolution(x, y), Tolerance::absolute)
}

fn check_index(i: usize, n: usize) -> PyResult<()> {
    if i >= n {
        return Err(PyIndexError::new_err(format!("index {i} out of range for {n} nodes")));
    }
    Ok(())
}

/// Tensor grid in one or two dimensions, written `lo:hi:n` per axis.
#[pyclass(name = "Grid", module = "bipot", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGrid(bipot_core::Grid);

#[pymethods]
impl PyGrid {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse().map(PyGrid).map_err(err)
    }

    #[staticmethod]
    fn line(lo: f64, hi: f64, n: usize) -> PyResult<Self> {
        bipot_core::Grid::line(lo, hi, n).map(PyGrid).map_err(err)
    }

    #[staticmethod]
    fn square(lo: f64, hi: f64, n: usize) -> PyResult<Self> {
        bipot_core::Grid::square(lo, hi, n).map(PyGrid).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn spacing(&self) -> Vec<f64> {
        self.0.spacing()
    }

    fn coords(&self) -> Vec<Vec<f64>> {
        let d = self.0.dim();
        self.0.coords().iter().map(|p| p[..d].to_vec()).collect()
    }

    fn nearest(&self, point: Vec<f64>) -> Option<usize> {
        self.0.nearest(&point)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Grid('{}')", self.0)
    }
}

/// Extended-real values on the nodes of a grid; `inf` marks points off the domain.
#[pyclass(name = "Function", module = "bipot", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFunction(bipot_core::SampledFunction);

#[pymethods]
impl PyFunction {
    #[new]
    fn new(grid: &PyGrid, values: Vec<f64>) -> PyResult<Self> {
        bipot_core::SampledFunction::new(grid.0.clone(), ext(values)?).map(PyFunction).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        io::load_function(path).map(PyFunction).map_err(err)
    }

    fn save(&self, path: &str) -> PyResult<()> {
        io::save_function(&self.0, path).map_err(err)
    }

    #[getter]
    fn grid(&self) -> PyGrid {
        PyGrid(self.0.grid().clone())
    }

    fn values(&self) -> Vec<f64> {
        raw(self.0.vals())
    }

    fn __getitem__(&self, i: usize) -> PyResult<f64> {
        check_index(i, self.0.vals().len())?;
        Ok(self.0.get(i).raw())
    }

    fn __len__(&self) -> usize {
        self.0.vals().len()
    }

    fn __repr__(&self) -> String {
        format!("Function(grid='{}', domain={})", self.0.grid(), self.0.domain_len())
    }
}

/// Values `b(x, y)` on a pair of grids, x-major.
#[pyclass(name = "Bivariate", module = "bipot", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBivariate(bipot_core::SampledBivariate);

#[pymethods]
impl PyBivariate {
    #[new]
    fn new(xgrid: &PyGrid, ygrid: &PyGrid, values: Vec<f64>) -> PyResult<Self> {
        bipot_core::SampledBivariate::new(xgrid.0.clone(), ygrid.0.clone(), ext(values)?).map(PyBivariate).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        io::load_bivariate(path).map(PyBivariate).map_err(err)
    }

    fn save(&self, path: &str) -> PyResult<()> {
        io::save_bivariate(&self.0, path).map_err(err)
    }

    #[getter]
    fn xgrid(&self) -> PyGrid {
        PyGrid(self.0.xgrid().clone())
    }

    #[getter]
    fn ygrid(&self) -> PyGrid {
        PyGrid(self.0.ygrid().clone())
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.0.xgrid().len(), self.0.ygrid().len())
    }

    fn values(&self) -> Vec<f64> {
        raw(self.0.vals())
    }

    fn get(&self, ix: usize, iy: usize) -> PyResult<f64> {
        check_index(ix, self.0.xgrid().len())?;
        check_index(iy, self.0.ygrid().len())?;
        Ok(self.0.get(ix, iy).raw())
    }

    /// `b(x, y) + s⟨x, y⟩`.
    fn shifted_by_dot(&self, s: f64) -> Self {
        PyBivariate(self.0.shifted_by_dot(s))
    }

    fn max_abs_diff(&self, other: &Self) -> Option<f64> {
        self.0.max_abs_diff(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Bivariate(xgrid='{}', ygrid='{}')", self.0.xgrid(), self.0.ygrid())
    }
}

/// Set of node pairs `(ix, iy)`.
#[pyclass(name = "Graph", module = "bipot", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(bipot_core::GraphSet);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(xgrid: &PyGrid, ygrid: &PyGrid, pairs: Vec<(usize, usize)>) -> PyResult<Self> {
        bipot_core::GraphSet::from_pairs(xgrid.0.clone(), ygrid.0.clone(), pairs).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        io::load_graph(path).map(PyGraph).map_err(err)
    }

    fn save(&self, path: &str) -> PyResult<()> {
        io::save_graph(&self.0, path).map_err(err)
    }

    #[getter]
    fn xgrid(&self) -> PyGrid {
        PyGrid(self.0.xgrid().clone())
    }

    #[getter]
    fn ygrid(&self) -> PyGrid {
        PyGrid(self.0.ygrid().clone())
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.pairs().collect()
    }

    fn x_section(&self, ix: usize) -> Vec<usize> {
        self.0.x_section(ix)
    }

    fn y_section(&self, iy: usize) -> Vec<usize> {
        self.0.y_section(iy)
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    fn __contains__(&self, pair: (usize, usize)) -> bool {
        pair.0 < self.0.xgrid().len() && pair.1 < self.0.ygrid().len() && self.0.contains(pair.0, pair.1)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(pairs={})", self.0.len())
    }
}

/// Outcome of a check: verdict, failed axiom, witness nodes and extra fields.
#[pyclass(name = "Report", module = "bipot", frozen, skip_from_py_object)]
struct PyReport(CheckReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn check(&self) -> &str {
        &self.0.check
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn verdict(&self) -> &'static str {
        self.0.verdict.as_str()
    }

    #[getter]
    fn axiom(&self) -> Option<&str> {
        self.0.axiom.as_deref()
    }

    #[getter]
    fn residual(&self) -> Option<f64> {
        self.0.residual
    }

    #[getter]
    fn witness_label(&self) -> Option<&str> {
        self.0.witness.as_ref().map(|w| w.label.as_str())
    }

    #[getter]
    fn witness_indices(&self) -> Vec<usize> {
        self.0.witness.as_ref().map(|w| w.indices.clone()).unwrap_or_default()
    }

    #[getter]
    fn witness_coords(&self) -> Vec<Vec<f64>> {
        self.0.witness.as_ref().map(|w| w.coords.clone()).unwrap_or_default()
    }

    #[getter]
    fn fields<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (k, v) in &self.0.fields {
            d.set_item(k, v)?;
        }
        Ok(d)
    }

    fn field(&self, key: &str) -> Option<&str> {
        self.0.field(key)
    }

    fn text(&self) -> String {
        self.0.to_text()
    }

    fn __bool__(&self) -> bool {
        self.0.passed()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!("Report(check='{}', verdict='{}')", self.0.check, self.0.verdict.as_str())
    }
}

/// A convex function `phi` with its conjugate on a dual grid.
#[pyclass(name = "Pair", module = "bipot", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPair(ConjugatePair);

#[pymethods]
impl PyPair {
    /// Conjugates `phi` onto `ygrid` (default: the dual grid of its slopes),
    /// or pairs it with a given `phistar` after a Fenchel-Young check.
    #[new]
    #[pyo3(signature = (phi, ygrid=None, phistar=None, fy_tol=None))]
    fn new(phi: &PyFunction, ygrid: Option<&PyGrid>, phistar: Option<&PyFunction>, fy_tol: Option<f64>) -> PyResult<Self> {
        let pair = match phistar {
            Some(s) => {
                let tol = fy_tol.unwrap_or(legendre::ROUNDOFF_REL_TOL * (1.0 + phi.0.scale() + s.0.scale()));
                ConjugatePair::new(phi.0.clone(), s.0.clone(), tol)
            }
            None => {
                let yg = match ygrid {
                    Some(g) => g.0.clone(),
                    None => legendre::default_dual_grid(&phi.0).map_err(err)?,
                };
                ConjugatePair::from_phi(phi.0.clone(), &yg)
            }
        };
        pair.map(PyPair).map_err(err)
    }

    #[getter]
    fn phi(&self) -> PyFunction {
        PyFunction(self.0.phi().clone())
    }

    #[getter]
    fn phistar(&self) -> PyFunction {
        PyFunction(self.0.phistar().clone())
    }

    #[getter]
    fn xgrid(&self) -> PyGrid {
        PyGrid(self.0.xgrid().clone())
    }

    #[getter]
    fn ygrid(&self) -> PyGrid {
        PyGrid(self.0.ygrid().clone())
    }

    /// `b(x, y) = φ(x) + φ*(y)`.
    fn separable(&self) -> PyBivariate {
        PyBivariate(bp::separable_pair(&self.0))
    }
}

#[pyfunction]
#[pyo3(signature = (phi, ygrid, bruteforce=false))]
fn conjugate(py: Python<'_>, phi: &PyFunction, ygrid: &PyGrid, bruteforce: bool) -> PyResult<PyFunction> {
    let f = if bruteforce { legendre::conjugate_bruteforce } else { legendre::conjugate };
    py.detach(|| f(&phi.0, &ygrid.0)).map(PyFunction).map_err(err)
}

#[pyfunction]
fn default_dual_grid(phi: &PyFunction) -> PyResult<PyGrid> {
    legendre::default_dual_grid(&phi.0).map(PyGrid).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (f, tol=1e-9))]
fn is_convex(f: &PyFunction, tol: f64) -> PyResult<PyReport> {
    bipot_core::convexity::is_convex(&f.0, tol).map(PyReport).map_err(err)
}

#[pyfunction]
fn separable(phi: &PyFunction, ygrid: &PyGrid) -> PyResult<PyBivariate> {
    bp::separable(&phi.0, &ygrid.0).map(PyBivariate).map_err(err)
}

#[pyfunction]
fn sync_from_bipotential(b: &PyBivariate) -> PyBivariate {
    PyBivariate(bp::sync_from_bipotential(&b.0))
}

#[pyfunction]
fn bipotential_from_sync(c: &PyBivariate) -> PyResult<PyBivariate> {
    bp::bipotential_from_sync(&c.0).map(PyBivariate).map_err(err)
}

#[pyfunction]
fn graph_of(b: &PyBivariate, tol: f64) -> PyResult<PyGraph> {
    bp::graph_of(&b.0, tol).map(PyGraph).map_err(err)
}

#[pyfunction]
fn b_infinity(m: &PyGraph) -> PyResult<PyBivariate> {
    bp::b_infinity(&m.0).map(PyBivariate).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (b, tol=None))]
fn check_bipotential(py: Python<'_>, b: &PyBivariate, tol: Option<f64>) -> PyResult<PyReport> {
    let tol = tolerance(tol, b.0.xgrid(), b.0.ygrid());
    py.detach(|| bp::check_bipotential(&b.0, tol)).map(PyReport).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (c, tol=None))]
fn check_sync(py: Python<'_>, c: &PyBivariate, tol: Option<f64>) -> PyResult<PyReport> {
    let tol = tolerance(tol, c.0.xgrid(), c.0.ygrid());
    py.detach(|| bp::check_sync(&c.0, tol)).map(PyReport).map_err(err)
}

#[pyfunction]
fn check_bbgraph(py: Python<'_>, m: &PyGraph) -> PyResult<PyReport> {
    py.detach(|| bp::check_bbgraph(&m.0)).map(PyReport).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (points, n_max, tol=1e-12))]
fn check_cyclically_monotone(points: Vec<(Vec<f64>, Vec<f64>)>, n_max: usize, tol: f64) -> PyResult<PyReport> {
    bp::check_cyclically_monotone(&points, n_max, tol).map(PyReport).map_err(err)
}

fn spec(eps: f64, kind: &str, p: f64) -> PyResult<BlurSpec> {
    match kind {
        "yball" => BlurSpec::y_ball(eps),
        "product" => BlurSpec::product_ball(eps, p),
        other => return Err(PyValueError::new_err(format!("unknown blur kind {other:?}, expected 'yball' or 'product'"))),
    }
    .map_err(err)
}

#[pyfunction]
fn default_graph_tol(xgrid: &PyGrid, ygrid: &PyGrid) -> f64 {
    blur::default_graph_tol(&xgrid.0, &ygrid.0)
}

/// Inf-convolution of a sync with the indicator of the blur ball.
#[pyfunction]
#[pyo3(signature = (c, eps, kind="yball", p=2.0))]
fn inf_convolve_blur(py: Python<'_>, c: &PyBivariate, eps: f64, kind: &str, p: f64) -> PyResult<PyBivariate> {
    let s = spec(eps, kind, p)?;
    py.detach(|| blur::inf_convolve_blur(&c.0, &s)).map(PyBivariate).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (pair, eps, kind="yball", p=2.0))]
fn blurred_bipotential(py: Python<'_>, pair: &PyPair, eps: f64, kind: &str, p: f64) -> PyResult<PyBivariate> {
    let s = spec(eps, kind, p)?;
    py.detach(|| blur::blurred_bipotential(&pair.0, &s)).map(PyBivariate).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (pair, eps, tol=None, kind="yball", p=2.0))]
fn blurred_graph(py: Python<'_>, pair: &PyPair, eps: f64, tol: Option<f64>, kind: &str, p: f64) -> PyResult<PyGraph> {
    let s = spec(eps, kind, p)?;
    let tol = tol.unwrap_or_else(|| blur::default_graph_tol(pair.0.xgrid(), pair.0.ygrid()));
    py.detach(|| blur::blurred_graph(&pair.0, &s, tol)).map(PyGraph).map_err(err)
}

/// At one y-node when `y_index` is given, otherwise at every y-node.
#[pyfunction]
#[pyo3(signature = (pair, eps, y_index=None, tol=None))]
fn check_newc(py: Python<'_>, pair: &PyPair, eps: f64, y_index: Option<usize>, tol: Option<f64>) -> PyResult<PyReport> {
    let tol = tol.unwrap_or_else(|| blur::default_graph_tol(pair.0.xgrid(), pair.0.ygrid()));
    if let Some(j) = y_index {
        check_index(j, pair.0.ygrid().len())?;
    }
    py.detach(|| match y_index {
        Some(j) => blur::check_newc(&pair.0, eps, j, tol),
        None => blur::check_newc_everywhere(&pair.0, eps, tol),
    })
    .map(PyReport)
    .map_err(err)
}

/// Checks a graph (or, with `sync=True`, a sync) for the blurring property.
#[pyfunction]
#[pyo3(signature = (obj, eps, kind="yball", p=2.0, sync_tol=None, zero_tol=0.0))]
fn check_admits_blurring(obj: &Bound<'_, PyAny>, eps: f64, kind: &str, p: f64, sync_tol: Option<f64>, zero_tol: f64) -> PyResult<PyReport> {
    let s = spec(eps, kind, p)?;
    if let Ok(m) = obj.cast::<PyGraph>() {
        let m = m.get();
        let tol = tolerance(sync_tol, m.0.xgrid(), m.0.ygrid());
        return blur::check_admits_blurring(BlurInput::Graph(&m.0), &s, tol, zero_tol).map(PyReport).map_err(err);
    }
    let c = obj.cast::<PyBivariate>()?.get();
    let tol = tolerance(sync_tol, c.0.xgrid(), c.0.ygrid());
    blur::check_admits_blurring(BlurInput::Sync(&c.0), &s, tol, zero_tol).map(PyReport).map_err(err)
}

/// Members `b_a`, `‖a‖ ≤ eps`, covering the blurred law of `pair`.
#[pyclass(name = "Cover", module = "bipot", frozen, skip_from_py_object)]
struct PyCover(covers::CoverFamily);

#[pymethods]
impl PyCover {
    #[new]
    fn new(pair: &PyPair, eps: f64) -> PyResult<Self> {
        covers::build_cover(&pair.0, eps).map(PyCover).map_err(err)
    }

    #[getter]
    fn eps(&self) -> f64 {
        self.0.eps()
    }

    fn lambda_nodes(&self) -> Vec<Vec<f64>> {
        let d = self.0.ygrid().dim();
        self.0.lambda_nodes().iter().map(|a| a[..d].to_vec()).collect()
    }

    fn member(&self, k: usize) -> PyResult<PyBivariate> {
        check_index(k, self.0.len())?;
        Ok(PyBivariate(self.0.member(k)))
    }

    fn member_graph(&self, k: usize, tol: f64) -> PyResult<PyGraph> {
        check_index(k, self.0.len())?;
        Ok(PyGraph(self.0.member_graph(k, tol)))
    }

    fn union_of_member_graphs(&self, tol: f64) -> PyGraph {
        PyGraph(self.0.union_of_member_graphs(tol))
    }

    fn infimum(&self, py: Python<'_>) -> PyResult<PyBivariate> {
        py.detach(|| covers::infimum_bipotential(&self.0)).map(PyBivariate).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyfunction]
#[pyo3(signature = (pair, eps, graph_tol=None, seed=0))]
fn check_maithm(py: Python<'_>, pair: &PyPair, eps: f64, graph_tol: Option<f64>, seed: u64) -> PyResult<PyReport> {
    let graph_tol = graph_tol.unwrap_or_else(|| blur::default_graph_tol(pair.0.xgrid(), pair.0.ygrid()));
    py.detach(|| covers::check_maithm_equivalence(&pair.0, eps, MaithmOptions { graph_tol, seed })).map(PyReport).map_err(err)
}

/// Linear elasticity `φ = K‖x‖²/2` on a box: returns `(pair, sync, closed-form c_A)`.
#[pyfunction]
#[pyo3(signature = (k=1.0, eps=0.5, lo=-2.0, hi=2.0, n=401, dim=1))]
fn elasticity(k: f64, eps: f64, lo: f64, hi: f64, n: usize, dim: usize) -> PyResult<(PyPair, PyBivariate, PyBivariate)> {
    let fix = ElasticityFixture::on_box(k, eps, lo, hi, n, dim).map_err(err)?;
    let pair = fix.pair().map_err(err)?;
    Ok((PyPair(pair), PyBivariate(fix.sync()), PyBivariate(fix.closed_form_ca())))
}

/// Cone indicator `φ* = χ_F`, `F = {|y2| ≤ α y1}`: returns `(pair, index of y*)`.
#[pyfunction]
#[pyo3(signature = (alpha=0.5, y1=1.0, eps=1.0, n=81, lo=-4.0, hi=4.0))]
fn cone(py: Python<'_>, alpha: f64, y1: f64, eps: f64, n: usize, lo: f64, hi: f64) -> PyResult<(PyPair, usize)> {
    let grid = bipot_core::Grid::square(lo, hi, n).map_err(err)?;
    let fix = ConeFixture::new(alpha, y1, eps, grid).map_err(err)?;
    let pair = py.detach(|| fix.pair()).map_err(err)?;
    Ok((PyPair(pair), fix.y_star_index().map_err(err)?))
}

#[pyfunction(name = "report_schema_version")]
fn schema_version() -> &'static str {
    report_schema_version()
}

#[pymodule]
fn bipot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGrid>()?;
    m.add_class::<PyFunction>()?;
    m.add_class::<PyBivariate>()?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyPair>()?;
    m.add_class::<PyCover>()?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(default_dual_grid, m)?)?;
    m.add_function(wrap_pyfunction!(is_convex, m)?)?;
    m.add_function(wrap_pyfunction!(separable, m)?)?;
    m.add_function(wrap_pyfunction!(sync_from_bipotential, m)?)?;
    m.add_function(wrap_pyfunction!(bipotential_from_sync, m)?)?;
    m.add_function(wrap_pyfunction!(graph_of, m)?)?;
    m.add_function(wrap_pyfunction!(b_infinity, m)?)?;
    m.add_function(wrap_pyfunction!(check_bipotential, m)?)?;
    m.add_function(wrap_pyfunction!(check_sync, m)?)?;
    m.add_function(wrap_pyfunction!(check_bbgraph, m)?)?;
    m.add_function(wrap_pyfunction!(check_cyclically_monotone, m)?)?;
    m.add_function(wrap_pyfunction!(default_graph_tol, m)?)?;
    m.add_function(wrap_pyfunction!(inf_convolve_blur, m)?)?;
    m.add_function(wrap_pyfunction!(blurred_bipotential, m)?)?;
    m.add_function(wrap_pyfunction!(blurred_graph, m)?)?;
    m.add_function(wrap_pyfunction!(check_newc, m)?)?;
    m.add_function(wrap_pyfunction!(check_admits_blurring, m)?)?;
    m.add_function(wrap_pyfunction!(check_maithm, m)?)?;
    m.add_function(wrap_pyfunction!(elasticity, m)?)?;
    m.add_function(wrap_pyfunction!(cone, m)?)?;
    m.add_function(wrap_pyfunction!(schema_version, m)?)?;
    Ok(())
}
