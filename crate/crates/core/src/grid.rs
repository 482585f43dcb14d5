//! Uniform node grids over boxes in one or two dimensions.

use std::fmt;

use crate::error::{invalid, Result};

/// Node coordinates; the second component is `0.0` on one-dimensional grids.
pub type Point = [f64; 2];

/// Duality product. On 1D grids the padded second component contributes zero.
#[inline]
pub fn dot(a: &Point, b: &Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

#[inline]
pub fn norm(a: &Point) -> f64 {
    a[0].hypot(a[1])
}

/// Radii are compared against node distances with this relative slack so
/// that `eps = k·h` keeps the k-th node.
pub(crate) const RADIUS_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    lo: f64,
    hi: f64,
    n: usize,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return invalid(format!("axis bounds must satisfy lo < hi, got [{lo}, {hi}]"));
        }
        if n < 2 {
            return invalid(format!("axis needs at least 2 nodes, got {n}"));
        }
        Ok(Axis { lo, hi, n })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn h(&self) -> f64 {
        (self.hi - self.lo) / (self.n - 1) as f64
    }

    #[inline]
    pub fn node(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.h()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    /// Nearest node index, `None` when `v` lies more than half a cell outside.
    pub fn nearest(&self, v: f64) -> Option<usize> {
        let t = ((v - self.lo) / self.h()).round();
        if t < 0.0 || t > (self.n - 1) as f64 || !t.is_finite() {
            return None;
        }
        Some(t as usize)
    }
}

/// Tensor grid: row-major, the last axis varies fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    axes: Vec<Axis>,
}

impl Grid {
    pub fn new(axes: Vec<Axis>) -> Result<Self> {
        if axes.is_empty() || axes.len() > 2 {
            return invalid(format!("grids are 1D or 2D, got {} axes", axes.len()));
        }
        Ok(Grid { axes })
    }

    pub fn line(lo: f64, hi: f64, n: usize) -> Result<Self> {
        Grid::new(vec![Axis::new(lo, hi, n)?])
    }

    /// Square box `[lo, hi]²` with `n` nodes per axis.
    pub fn square(lo: f64, hi: f64, n: usize) -> Result<Self> {
        Grid::new(vec![Axis::new(lo, hi, n)?, Axis::new(lo, hi, n)?])
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, k: usize) -> &Axis {
        &self.axes[k]
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(Axis::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `[n0, n1]`, with `n1 = 1` in 1D.
    #[inline]
    pub fn shape(&self) -> [usize; 2] {
        match self.axes.as_slice() {
            [a] => [a.len(), 1],
            [a, b] => [a.len(), b.len()],
            _ => unreachable!(),
        }
    }

    pub fn spacing(&self) -> Vec<f64> {
        self.axes.iter().map(Axis::h).collect()
    }

    pub fn min_spacing(&self) -> f64 {
        self.axes.iter().map(Axis::h).fold(f64::INFINITY, f64::min)
    }

    pub fn max_spacing(&self) -> f64 {
        self.axes.iter().map(Axis::h).fold(0.0, f64::max)
    }

    #[inline]
    pub fn index(&self, multi: [usize; 2]) -> usize {
        multi[0] * self.shape()[1] + multi[1]
    }

    #[inline]
    pub fn multi(&self, i: usize) -> [usize; 2] {
        let n1 = self.shape()[1];
        [i / n1, i % n1]
    }

    #[inline]
    pub fn coord(&self, i: usize) -> Point {
        match self.axes.as_slice() {
            [a] => [a.node(i), 0.0],
            [a, b] => {
                let n1 = b.len();
                [a.node(i / n1), b.node(i % n1)]
            }
            _ => unreachable!(),
        }
    }

    pub fn coords(&self) -> Vec<Point> {
        (0..self.len()).map(|i| self.coord(i)).collect()
    }

    /// Node at signed multi-index offset from `i`, if inside the box.
    #[inline]
    pub fn offset(&self, i: usize, d: [isize; 2]) -> Option<usize> {
        let [n0, n1] = self.shape();
        let [i0, i1] = self.multi(i);
        let j0 = i0 as isize + d[0];
        let j1 = i1 as isize + d[1];
        if j0 < 0 || j1 < 0 || j0 >= n0 as isize || j1 >= n1 as isize {
            return None;
        }
        Some(j0 as usize * n1 + j1 as usize)
    }

    /// Nearest node to `p` (node snapping), `None` outside the box.
    pub fn nearest(&self, p: &[f64]) -> Option<usize> {
        if p.len() != self.dim() {
            return None;
        }
        let mut multi = [0usize; 2];
        for (k, a) in self.axes.iter().enumerate() {
            multi[k] = a.nearest(p[k])?;
        }
        Some(self.index(multi))
    }

    /// Index offsets `d` with `‖(d0·h0, d1·h1)‖ ≤ radius`, in row-major order.
    pub fn ball_offsets(&self, radius: f64) -> Vec<[isize; 2]> {
        let hs = self.spacing();
        let r = radius * (1.0 + RADIUS_SLACK) + RADIUS_SLACK * self.min_spacing();
        let reach = |h: f64| (r / h).floor() as isize;
        let r0 = reach(hs[0]);
        let r1 = if self.dim() == 2 { reach(hs[1]) } else { 0 };
        let mut out = Vec::new();
        for d0 in -r0..=r0 {
            for d1 in -r1..=r1 {
                let p = [d0 as f64 * hs[0], if self.dim() == 2 { d1 as f64 * hs[1] } else { 0.0 }];
                if norm(&p) <= r {
                    out.push([d0, d1]);
                }
            }
        }
        out
    }

    /// Offset vector in coordinates.
    pub fn offset_coord(&self, d: [isize; 2]) -> Point {
        let hs = self.spacing();
        [d[0] as f64 * hs[0], if self.dim() == 2 { d[1] as f64 * hs[1] } else { 0.0 }]
    }

    pub fn same_nodes(&self, other: &Grid) -> bool {
        self == other
    }
}

impl fmt::Display for Grid {
    /// `lo:hi:n` per axis, `;`-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.axes.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}:{}:{}", a.lo, a.hi, a.n)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Grid {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut axes = Vec::new();
        for part in s.split(';') {
            let fields: Vec<&str> = part.trim().split(':').collect();
            if fields.len() != 3 {
                return invalid(format!("grid axis must be lo:hi:n, got {part:?}"));
            }
            let parse = |t: &str| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| crate::Error::InvalidInput(format!("bad number {t:?}")))
            };
            let n = fields[2]
                .trim()
                .parse::<usize>()
                .map_err(|_| crate::Error::InvalidInput(format!("bad node count {:?}", fields[2])))?;
            axes.push(Axis::new(parse(fields[0])?, parse(fields[1])?, n)?);
        }
        Grid::new(axes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_lo_plus_ih() {
        let g = Grid::line(-2.0, 2.0, 101).unwrap();
        let h = 0.04;
        for i in 0..101 {
            assert_eq!(g.coord(i)[0], -2.0 + i as f64 * ((2.0 - -2.0) / 100.0));
            assert!((g.coord(i)[0] - (-2.0 + i as f64 * h)).abs() < 1e-12);
        }
    }

    #[test]
    fn index_multi_bijection() {
        let g = Grid::new(vec![Axis::new(0.0, 1.0, 4).unwrap(), Axis::new(-1.0, 1.0, 7).unwrap()]).unwrap();
        for i in 0..g.len() {
            assert_eq!(g.index(g.multi(i)), i);
            assert_eq!(g.nearest(&g.coord(i)), Some(i));
        }
    }

    #[test]
    fn rejects_degenerate_axes() {
        assert!(Axis::new(1.0, 1.0, 5).is_err());
        assert!(Axis::new(0.0, 1.0, 1).is_err());
        assert!(Grid::new(vec![]).is_err());
    }

    #[test]
    fn ball_offsets_include_boundary_nodes() {
        let g = Grid::line(-2.0, 2.0, 401).unwrap();
        let b = g.ball_offsets(0.5);
        assert_eq!(b.len(), 101);
        let g2 = Grid::square(-4.0, 4.0, 81).unwrap();
        let b2 = g2.ball_offsets(1.0);
        assert!(b2.contains(&[10, 0]) && b2.contains(&[0, -10]) && b2.contains(&[6, 8]));
        assert!(!b2.contains(&[8, 7]));
    }

    #[test]
    fn grid_string_roundtrip() {
        let g = Grid::square(-4.0, 4.0, 81).unwrap();
        let back: Grid = g.to_string().parse().unwrap();
        assert_eq!(g, back);
    }
}
