//! Minimum over Euclidean balls of grid nodes (erosion), the kernel behind
//! inf-convolution with the indicator of a ball.

use crate::error::{invalid, Result};
use crate::extreal::ExtReal;
use crate::grid::Grid;
use crate::sampled::SampledFunction;

/// Sliding minimum over `[i - w, i + w]` clipped to the line
/// (van Herk / Gil-Werman, three passes regardless of `w`).
pub(crate) fn sliding_min(src: &[ExtReal], w: usize, out: &mut [ExtReal], prefix: &mut Vec<ExtReal>, suffix: &mut Vec<ExtReal>) {
    let n = src.len();
    debug_assert_eq!(out.len(), n);
    if w == 0 || n <= 1 {
        out.copy_from_slice(src);
        return;
    }
    let k = 2 * w + 1;
    let len = n + 2 * w;
    let padded = |i: usize| if i < w || i >= w + n { ExtReal::INFINITY } else { src[i - w] };
    prefix.clear();
    suffix.clear();
    prefix.resize(len, ExtReal::INFINITY);
    suffix.resize(len, ExtReal::INFINITY);
    for i in 0..len {
        let v = padded(i);
        prefix[i] = if i % k == 0 { v } else { prefix[i - 1].min(v) };
    }
    for i in (0..len).rev() {
        let v = padded(i);
        suffix[i] = if i % k == k - 1 || i == len - 1 { v } else { suffix[i + 1].min(v) };
    }
    for (i, o) in out.iter_mut().enumerate() {
        *o = suffix[i].min(prefix[i + k - 1]);
    }
}

/// The discrete ball of a grid as rows: for each axis-0 offset, the
/// half-width of the contiguous run of axis-1 offsets.
#[derive(Clone, Debug)]
pub struct BallPlan {
    rows: Vec<(isize, usize)>,
    widths: Vec<usize>,
}

impl BallPlan {
    pub fn new(grid: &Grid, radius: f64) -> Self {
        let offsets = grid.ball_offsets(radius);
        let mut rows: Vec<(isize, usize)> = Vec::new();
        for d in offsets {
            let w = if grid.dim() == 2 { d[1].unsigned_abs() } else { d[0].unsigned_abs() };
            let key = if grid.dim() == 2 { d[0] } else { 0 };
            match rows.iter_mut().find(|(d0, _)| *d0 == key) {
                Some(row) => row.1 = row.1.max(w),
                None => rows.push((key, w)),
            }
        }
        let mut widths: Vec<usize> = rows.iter().map(|r| r.1).collect();
        widths.sort_unstable();
        widths.dedup();
        BallPlan { rows, widths }
    }

    /// Number of nodes in the discrete ball.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| 2 * r.1 + 1).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].1 == 0
    }
}

/// Reusable buffers for [`apply_plan`].
#[derive(Default)]
pub(crate) struct Scratch {
    lines: Vec<ExtReal>,
    prefix: Vec<ExtReal>,
    suffix: Vec<ExtReal>,
}

/// `out[y] = min{ src[ȳ] : ȳ − y in the plan's ball }`, for values laid out on `grid`.
pub(crate) fn apply_plan(grid: &Grid, plan: &BallPlan, src: &[ExtReal], out: &mut [ExtReal], scratch: &mut Scratch) {
    if plan.is_trivial() {
        out.copy_from_slice(src);
        return;
    }
    let [n0, n1] = if grid.dim() == 2 { grid.shape() } else { [1, grid.len()] };
    out.fill(ExtReal::INFINITY);
    scratch.lines.resize(src.len(), ExtReal::INFINITY);
    for &w in &plan.widths {
        for r in 0..n0 {
            let (s, l) = (r * n1, (r + 1) * n1);
            sliding_min(&src[s..l], w, &mut scratch.lines[s..l], &mut scratch.prefix, &mut scratch.suffix);
        }
        for &(d0, _) in plan.rows.iter().filter(|row| row.1 == w) {
            for r in 0..n0 {
                let q = r as isize + d0;
                if q < 0 || q >= n0 as isize {
                    continue;
                }
                let q = q as usize;
                let dst = &mut out[r * n1..(r + 1) * n1];
                let row = &scratch.lines[q * n1..(q + 1) * n1];
                for (o, v) in dst.iter_mut().zip(row) {
                    *o = (*o).min(*v);
                }
            }
        }
    }
}

/// `g(y) = min{ f(ȳ) : ȳ a node, ‖ȳ − y‖ ≤ radius }`. The window always
/// contains `y`, so `g ≤ f`.
pub fn min_filter(f: &SampledFunction, radius: f64) -> Result<SampledFunction> {
    if !(radius >= 0.0) {
        return invalid(format!("min_filter radius must be nonnegative, got {radius}"));
    }
    let plan = BallPlan::new(f.grid(), radius);
    let mut out = vec![ExtReal::INFINITY; f.vals().len()];
    apply_plan(f.grid(), &plan, f.vals(), &mut out, &mut Scratch::default());
    SampledFunction::new(f.grid().clone(), out)
}
