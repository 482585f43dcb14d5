//! The three worked examples: blurred linear elasticity, a two-point graph,
//! and the cone whose blurred graph is not a BB-graph.

use crate::blur::BlurSpec;
use crate::error::{invalid, Result};
use crate::graph::GraphSet;
use crate::grid::{dot, norm, Grid, Point};
use crate::legendre::{conjugate, ConjugatePair, ROUNDOFF_REL_TOL};
use crate::sampled::{SampledBivariate, SampledFunction};

/// The linear law `y = Kx` with `c(x,y) = K/2‖x‖² + ‖y‖²/(2K) − ⟨x,y⟩`.
#[derive(Clone, Debug)]
pub struct ElasticityFixture {
    pub k: f64,
    pub eps: f64,
    pub xgrid: Grid,
    pub ygrid: Grid,
}

impl ElasticityFixture {
    pub fn new(k: f64, eps: f64, xgrid: Grid, ygrid: Grid) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return invalid(format!("elastic modulus must be positive, got {k}"));
        }
        if xgrid.dim() != ygrid.dim() {
            return invalid("x and y grids differ in dimension");
        }
        BlurSpec::y_ball(eps)?.check_resolution(&xgrid, &ygrid)?;
        Ok(ElasticityFixture { k, eps, xgrid, ygrid })
    }

    /// Same box `[lo, hi]^dim` with `n` nodes per axis for x and y.
    pub fn on_box(k: f64, eps: f64, lo: f64, hi: f64, n: usize, dim: usize) -> Result<Self> {
        let g = if dim == 2 { Grid::square(lo, hi, n)? } else { Grid::line(lo, hi, n)? };
        ElasticityFixture::new(k, eps, g.clone(), g)
    }

    pub fn spec(&self) -> BlurSpec {
        BlurSpec::y_ball(self.eps).expect("validated at construction")
    }

    /// `φ(x) = K/2‖x‖²` with `φ*(y) = ‖y‖²/(2K)` in closed form.
    pub fn pair(&self) -> Result<ConjugatePair> {
        let k = self.k;
        let phi = SampledFunction::from_fn(self.xgrid.clone(), |x| 0.5 * k * dot(&x, &x))?;
        let phistar = SampledFunction::from_fn(self.ygrid.clone(), |y| dot(&y, &y) / (2.0 * k))?;
        let tol = ROUNDOFF_REL_TOL * (1.0 + phi.scale() + phistar.scale());
        ConjugatePair::new(phi, phistar, tol)
    }

    pub fn sync(&self) -> SampledBivariate {
        let k = self.k;
        SampledBivariate::from_fn(self.xgrid.clone(), self.ygrid.clone(), |x, y| {
            0.5 * k * dot(&x, &x) + dot(&y, &y) / (2.0 * k) - dot(&x, &y)
        })
        .expect("finite closed form")
    }

    /// `c_A(x,y) = ((‖y − Kx‖ − ε)₊)² / (2K)`.
    pub fn closed_form_ca(&self) -> SampledBivariate {
        let (k, eps) = (self.k, self.eps);
        SampledBivariate::from_fn(self.xgrid.clone(), self.ygrid.clone(), |x, y| {
            let r = norm(&[y[0] - k * x[0], y[1] - k * x[1]]);
            let p = (r - eps).max(0.0);
            p * p / (2.0 * k)
        })
        .expect("finite closed form")
    }

    /// Largest `|a − b|` over pairs whose y-node is at least `ε` from the
    /// y-box boundary on every axis (the discrete window is clipped there).
    pub fn interior_gap(&self, a: &SampledBivariate, b: &SampledBivariate) -> f64 {
        let ys = self.ygrid.coords();
        let inside: Vec<bool> = ys
            .iter()
            .map(|y| {
                self.ygrid.axes().iter().enumerate().all(|(k, ax)| {
                    y[k] - ax.lo() >= self.eps * (1.0 - 1e-9) && ax.hi() - y[k] >= self.eps * (1.0 - 1e-9)
                })
            })
            .collect();
        let ny = ys.len();
        let mut worst: f64 = 0.0;
        for (k, (u, v)) in a.vals().iter().zip(b.vals()).enumerate() {
            if inside[k % ny] {
                worst = worst.max(match (u.value(), v.value()) {
                    (Some(u), Some(v)) => (u - v).abs(),
                    (None, None) => 0.0,
                    _ => f64::INFINITY,
                });
            }
        }
        worst
    }
}

/// `M = {(x1,y1), (x2,y2)}` in 1D with the y-ball blur of radius `eps`.
#[derive(Clone, Debug)]
pub struct TwoPointFixture {
    pub m: GraphSet,
    pub spec: BlurSpec,
    pub x_nodes: [usize; 2],
    pub y_nodes: [usize; 2],
}

pub fn two_point_fixture(points: [(f64, f64); 2], eps: f64, grid: &Grid) -> Result<TwoPointFixture> {
    let [(x1, y1), (x2, y2)] = points;
    if grid.dim() != 1 {
        return invalid("the two-point fixture lives on 1D grids");
    }
    if x1 == x2 || y1 == y2 {
        return invalid("the two points need distinct x and distinct y coordinates");
    }
    let snap = |v: f64| -> Result<usize> {
        let i = grid.nearest(&[v]).ok_or_else(|| crate::Error::InvalidInput(format!("{v} outside the grid box")))?;
        if (grid.coord(i)[0] - v).abs() > 1e-9 * grid.min_spacing() {
            return invalid(format!("{v} is not a grid node"));
        }
        Ok(i)
    };
    let x_nodes = [snap(x1)?, snap(x2)?];
    let y_nodes = [snap(y1)?, snap(y2)?];
    let spec = BlurSpec::y_ball(eps)?;
    spec.check_resolution(grid, grid)?;
    let m = GraphSet::from_pairs(grid.clone(), grid.clone(), [(x_nodes[0], y_nodes[0]), (x_nodes[1], y_nodes[1])])?;
    Ok(TwoPointFixture { m, spec, x_nodes, y_nodes })
}

/// `φ* = χ_F` for the cone `F = {|y2| ≤ α y1}`, probed at `y* = (y1, α y1)`
/// with a blur radius inside `2α/√(1+α²)·y1 < ε < √(1+α²)·y1`.
#[derive(Clone, Debug)]
pub struct ConeFixture {
    pub alpha: f64,
    pub y_star: Point,
    pub eps: f64,
    pub grid: Grid,
}

impl ConeFixture {
    pub fn new(alpha: f64, y1: f64, eps: f64, grid: Grid) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return invalid(format!("alpha must lie in (0, 1), got {alpha}"));
        }
        if grid.dim() != 2 {
            return invalid("the cone fixture lives on 2D grids");
        }
        let (lo, hi) = cone_window(alpha, y1);
        if !(lo < eps && eps < hi) {
            return invalid(format!("eps = {eps} outside the admissible window ({lo}, {hi})"));
        }
        BlurSpec::y_ball(eps)?.check_resolution(&grid, &grid)?;
        let fix = ConeFixture { alpha, y_star: [y1, alpha * y1], eps, grid };
        fix.y_star_index()?;
        Ok(fix)
    }

    pub fn spec(&self) -> BlurSpec {
        BlurSpec::y_ball(self.eps).expect("validated at construction")
    }

    pub fn y_star_index(&self) -> Result<usize> {
        let i = self
            .grid
            .nearest(&self.y_star)
            .ok_or_else(|| crate::Error::InvalidInput("probe point outside the grid".into()))?;
        let c = self.grid.coord(i);
        if norm(&[c[0] - self.y_star[0], c[1] - self.y_star[1]]) > 1e-9 * self.grid.min_spacing() {
            return invalid(format!("probe point {:?} is not a grid node", self.y_star));
        }
        Ok(i)
    }

    /// `χ_F` on the y-grid.
    pub fn phistar(&self) -> SampledFunction {
        let a = self.alpha;
        SampledFunction::from_fn(self.grid.clone(), |y| if y[1].abs() <= a * y[0] + 1e-12 { 0.0 } else { f64::INFINITY })
            .expect("indicator values are valid")
    }

    /// `φ = (χ_F)*`, the support function of `F` clipped to the box.
    pub fn phi(&self) -> Result<SampledFunction> {
        conjugate(&self.phistar(), &self.grid)
    }

    pub fn pair(&self) -> Result<ConjugatePair> {
        let phi = self.phi()?;
        let phistar = self.phistar();
        let tol = ROUNDOFF_REL_TOL * (1.0 + phi.scale());
        ConjugatePair::new(phi, phistar, tol)
    }

    /// Outward unit normals of the boundary half-lines `y2 = αy1` and
    /// `y2 = −αy1`.
    pub fn normals(&self) -> (Point, Point) {
        let s = (1.0 + self.alpha * self.alpha).sqrt();
        ([-self.alpha / s, 1.0 / s], [-self.alpha / s, -1.0 / s])
    }

    pub fn window(&self) -> (f64, f64) {
        cone_window(self.alpha, self.y_star[0])
    }
}

/// `(2α/√(1+α²)·y1, √(1+α²)·y1)`.
pub fn cone_window(alpha: f64, y1: f64) -> (f64, f64) {
    let s = (1.0 + alpha * alpha).sqrt();
    (2.0 * alpha / s * y1, s * y1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let fix = ElasticityFixture::on_box(1.0, 0.5, -2.0, 2.0, 401, 1).unwrap();
        let g = &fix.xgrid;
        let (i0, i1) = (g.nearest(&[0.0]).unwrap(), g.nearest(&[1.0]).unwrap());
        assert!((fix.closed_form_ca().get(i0, i1).raw() - 0.125).abs() < 1e-12);
        assert!((fix.sync().get(i0, i1).raw() - 0.5).abs() < 1e-12);
        assert_eq!(fix.sync().get(i1, i1).raw(), 0.0);
        let two = ElasticityFixture::on_box(2.0, 0.0, -2.0, 2.0, 41, 1).unwrap();
        let (x1, y0) = (two.xgrid.nearest(&[1.0]).unwrap(), two.ygrid.nearest(&[0.0]).unwrap());
        assert!((two.closed_form_ca().get(x1, y0).raw() - 1.0).abs() < 1e-12);
        assert!(fix.sync().vals().iter().all(|v| v.raw() >= -1e-12));
    }

    #[test]
    fn cone_window_and_validation() {
        let (lo, hi) = cone_window(0.5, 1.0);
        assert!((lo - 0.894427190999916).abs() < 1e-12 && (hi - 1.118033988749895).abs() < 1e-12);
        let g = Grid::square(-4.0, 4.0, 81).unwrap();
        assert!(ConeFixture::new(0.5, 1.0, 1.0, g.clone()).is_ok());
        let err = ConeFixture::new(0.5, 1.0, 0.5, g).unwrap_err().to_string();
        assert!(err.contains("0.894") && err.contains("1.118"), "{err}");
    }

    #[test]
    fn cone_support_function_vanishes_on_normals() {
        let fix = ConeFixture::new(0.5, 1.0, 1.0, Grid::square(-4.0, 4.0, 81).unwrap()).unwrap();
        let phi = fix.phi().unwrap();
        for t in [0.2, 0.4, 1.0, 2.0] {
            let i = fix.grid.nearest(&[-0.5 * t, t]).unwrap();
            assert!(phi.get(i).raw().abs() < 1e-12);
        }
        let i = fix.grid.nearest(&[1.0, 0.0]).unwrap();
        assert!((phi.get(i).raw() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn two_point_validation() {
        let g = Grid::line(-1.5, 2.5, 201).unwrap();
        let fix = two_point_fixture([(0.0, 0.0), (1.0, 1.0)], 0.6, &g).unwrap();
        assert_eq!(fix.m.len(), 2);
        assert!(two_point_fixture([(0.0, 0.0), (0.0, 1.0)], 0.6, &g).is_err());
    }
}
