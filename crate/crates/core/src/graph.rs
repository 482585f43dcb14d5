//! Finite sets of (x-node, y-node) pairs: graphs `M`, `M(b)`, blurrings `A`
//! and Minkowski sums `M + A`.

use fixedbitset::FixedBitSet;

use crate::error::{invalid, Result};
use crate::grid::Grid;

#[derive(Clone, Debug, PartialEq)]
pub struct GraphSet {
    xgrid: Grid,
    ygrid: Grid,
    bits: FixedBitSet,
}

impl GraphSet {
    pub fn empty(xgrid: Grid, ygrid: Grid) -> Result<Self> {
        if xgrid.dim() != ygrid.dim() {
            return invalid("x and y grids differ in dimension");
        }
        let bits = FixedBitSet::with_capacity(xgrid.len() * ygrid.len());
        Ok(GraphSet { xgrid, ygrid, bits })
    }

    pub fn from_pairs(xgrid: Grid, ygrid: Grid, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = GraphSet::empty(xgrid, ygrid)?;
        for (ix, iy) in pairs {
            if ix >= g.xgrid.len() || iy >= g.ygrid.len() {
                return invalid(format!("pair ({ix}, {iy}) outside the grids"));
            }
            g.insert(ix, iy);
        }
        Ok(g)
    }

    pub(crate) fn from_bits(xgrid: Grid, ygrid: Grid, bits: FixedBitSet) -> Self {
        debug_assert_eq!(bits.len(), xgrid.len() * ygrid.len());
        GraphSet { xgrid, ygrid, bits }
    }

    pub fn xgrid(&self) -> &Grid {
        &self.xgrid
    }

    pub fn ygrid(&self) -> &Grid {
        &self.ygrid
    }

    #[inline]
    fn key(&self, ix: usize, iy: usize) -> usize {
        ix * self.ygrid.len() + iy
    }

    pub fn insert(&mut self, ix: usize, iy: usize) {
        let k = self.key(ix, iy);
        self.bits.insert(k);
    }

    #[inline]
    pub fn contains(&self, ix: usize, iy: usize) -> bool {
        self.bits.contains(self.key(ix, iy))
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in (x-node, y-node) lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let ny = self.ygrid.len();
        self.bits.ones().map(move |k| (k / ny, k % ny))
    }

    /// `M(x) = {y : (x,y) ∈ M}` as y-node indices.
    pub fn x_section(&self, ix: usize) -> Vec<usize> {
        (0..self.ygrid.len()).filter(|&iy| self.contains(ix, iy)).collect()
    }

    /// `M*(y) = {x : (x,y) ∈ M}` as x-node indices.
    pub fn y_section(&self, iy: usize) -> Vec<usize> {
        (0..self.xgrid.len()).filter(|&ix| self.contains(ix, iy)).collect()
    }

    fn same_grids(&self, other: &GraphSet) -> Result<()> {
        if self.xgrid != other.xgrid || self.ygrid != other.ygrid {
            return invalid("graph sets live on different grids");
        }
        Ok(())
    }

    pub fn union_with(&mut self, other: &GraphSet) -> Result<()> {
        self.same_grids(other)?;
        self.bits.union_with(&other.bits);
        Ok(())
    }

    pub fn is_subset(&self, other: &GraphSet) -> bool {
        self.xgrid == other.xgrid && self.ygrid == other.ygrid && self.bits.is_subset(&other.bits)
    }

    /// Nodewise Minkowski sum `M + A` where `A` is given as index offsets
    /// `(dx, dy)`. Sums leaving the box are dropped; the flag reports whether
    /// that happened.
    pub fn minkowski_sum(&self, offsets: &[([isize; 2], [isize; 2])]) -> (GraphSet, bool) {
        let mut out = FixedBitSet::with_capacity(self.bits.len());
        let mut clipped = false;
        let ny = self.ygrid.len();
        for (ix, iy) in self.pairs() {
            for &(dx, dy) in offsets {
                match (self.xgrid.offset(ix, dx), self.ygrid.offset(iy, dy)) {
                    (Some(jx), Some(jy)) => out.insert(jx * ny + jy),
                    _ => clipped = true,
                }
            }
        }
        (GraphSet::from_bits(self.xgrid.clone(), self.ygrid.clone(), out), clipped)
    }

    /// First member of either set that has no member of the other set within
    /// one node along every axis of the product grid. `None` means the two
    /// sets agree within one node per axis.
    pub fn mismatch_beyond_one_node(&self, other: &GraphSet) -> Result<Option<(usize, usize)>> {
        self.same_grids(other)?;
        let mut diff = self.bits.clone();
        diff.symmetric_difference_with(&other.bits);
        let ny = self.ygrid.len();
        let steps = unit_steps(self.xgrid.dim());
        for k in diff.ones() {
            let (ix, iy) = (k / ny, k % ny);
            let target = if self.bits.contains(k) { other } else { self };
            let near = steps.iter().any(|&dx| {
                self.xgrid.offset(ix, dx).is_some_and(|jx| {
                    steps.iter().any(|&dy| self.ygrid.offset(iy, dy).is_some_and(|jy| target.contains(jx, jy)))
                })
            });
            if !near {
                return Ok(Some((ix, iy)));
            }
        }
        Ok(None)
    }
}

/// All index offsets with entries in {−1, 0, 1} for a grid of dimension `dim`.
fn unit_steps(dim: usize) -> Vec<[isize; 2]> {
    let second: &[isize] = if dim == 2 { &[-1, 0, 1] } else { &[0] };
    let mut out = Vec::new();
    for a in -1..=1 {
        for &b in second {
            out.push([a, b]);
        }
    }
    out
}
