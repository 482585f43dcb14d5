//! Extended-real samples on grids: functions on one grid and bivariate
//! functions on a product of two grids.

use crate::error::{invalid, Result};
use crate::extreal::ExtReal;
use crate::grid::{dot, Grid, Point};

#[derive(Clone, Debug, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    vals: Vec<ExtReal>,
}

impl SampledFunction {
    pub fn new(grid: Grid, vals: Vec<ExtReal>) -> Result<Self> {
        if vals.len() != grid.len() {
            return invalid(format!("{} values for a grid of {} nodes", vals.len(), grid.len()));
        }
        Ok(SampledFunction { grid, vals })
    }

    /// Samples `f` at every node. Non-finite results other than `+∞` are rejected.
    pub fn from_fn(grid: Grid, f: impl Fn(Point) -> f64) -> Result<Self> {
        let vals = (0..grid.len())
            .map(|i| ExtReal::new(f(grid.coord(i))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SampledFunction { grid, vals })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn vals(&self) -> &[ExtReal] {
        &self.vals
    }

    pub fn into_vals(self) -> Vec<ExtReal> {
        self.vals
    }

    #[inline]
    pub fn get(&self, i: usize) -> ExtReal {
        self.vals[i]
    }

    pub fn domain_len(&self) -> usize {
        self.vals.iter().filter(|v| v.is_finite()).count()
    }

    pub fn has_domain(&self) -> bool {
        self.vals.iter().any(|v| v.is_finite())
    }

    /// Largest finite magnitude, used to scale round-off tolerances.
    pub fn scale(&self) -> f64 {
        self.vals.iter().filter_map(|v| v.value()).fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn map(&self, f: impl Fn(ExtReal) -> ExtReal) -> SampledFunction {
        SampledFunction { grid: self.grid.clone(), vals: self.vals.iter().map(|&v| f(v)).collect() }
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &SampledFunction) -> bool {
        self.vals.iter().zip(&other.vals).all(|(a, b)| a <= b)
    }
}

/// Values on `xgrid × ygrid`, stored x-major: `vals[ix * ny + iy]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledBivariate {
    xgrid: Grid,
    ygrid: Grid,
    vals: Vec<ExtReal>,
}

impl SampledBivariate {
    pub fn new(xgrid: Grid, ygrid: Grid, vals: Vec<ExtReal>) -> Result<Self> {
        if xgrid.dim() != ygrid.dim() {
            return invalid("x and y grids must have the same dimension");
        }
        if vals.len() != xgrid.len() * ygrid.len() {
            return invalid(format!(
                "{} values for a {}x{} product grid",
                vals.len(),
                xgrid.len(),
                ygrid.len()
            ));
        }
        Ok(SampledBivariate { xgrid, ygrid, vals })
    }

    pub fn from_fn(xgrid: Grid, ygrid: Grid, f: impl Fn(Point, Point) -> f64) -> Result<Self> {
        let xs = xgrid.coords();
        let ys = ygrid.coords();
        let mut vals = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                vals.push(ExtReal::new(f(*x, *y))?);
            }
        }
        SampledBivariate::new(xgrid, ygrid, vals)
    }

    pub fn xgrid(&self) -> &Grid {
        &self.xgrid
    }

    pub fn ygrid(&self) -> &Grid {
        &self.ygrid
    }

    pub fn vals(&self) -> &[ExtReal] {
        &self.vals
    }

    pub fn vals_mut(&mut self) -> &mut [ExtReal] {
        &mut self.vals
    }

    #[inline]
    pub fn get(&self, ix: usize, iy: usize) -> ExtReal {
        self.vals[ix * self.ygrid.len() + iy]
    }

    /// `b(x, ·)` on the y-grid.
    pub fn x_slice(&self, ix: usize) -> SampledFunction {
        let ny = self.ygrid.len();
        SampledFunction { grid: self.ygrid.clone(), vals: self.vals[ix * ny..(ix + 1) * ny].to_vec() }
    }

    /// `b(·, y)` on the x-grid.
    pub fn y_slice(&self, iy: usize) -> SampledFunction {
        let ny = self.ygrid.len();
        let vals = (0..self.xgrid.len()).map(|ix| self.vals[ix * ny + iy]).collect();
        SampledFunction { grid: self.xgrid.clone(), vals }
    }

    /// `b(x,y) + s·⟨x,y⟩` nodewise, `+∞` absorbing.
    pub fn shifted_by_dot(&self, s: f64) -> SampledBivariate {
        let xs = self.xgrid.coords();
        let ys = self.ygrid.coords();
        let ny = ys.len();
        let vals = self
            .vals
            .iter()
            .enumerate()
            .map(|(k, v)| v.add_real(s * dot(&xs[k / ny], &ys[k % ny])))
            .collect();
        SampledBivariate { xgrid: self.xgrid.clone(), ygrid: self.ygrid.clone(), vals }
    }

    pub fn max_abs_diff(&self, other: &SampledBivariate) -> Option<f64> {
        let mut worst: f64 = 0.0;
        for (a, b) in self.vals.iter().zip(&other.vals) {
            match (a.value(), b.value()) {
                (Some(a), Some(b)) => worst = worst.max((a - b).abs()),
                (None, None) => {}
                _ => return None,
            }
        }
        Some(worst)
    }
}
