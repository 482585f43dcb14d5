//! Fenchel conjugation of sampled functions and discrete subdifferentials
//! read off the Fenchel–Young equality.
//!
//! The 1D transform is the linear-time Legendre transform: lower convex hull
//! of the finite graph points, then a merge against the sorted dual nodes.
//! The 2D transform factors as two passes of the 1D one,
//! `φ*(s, t) = max_{x0} [x0·s + max_{x1} (x1·t − φ(x0, x1))]`.
//! Values are evaluated with exactly that association so that the exhaustive
//! oracle [`conjugate_bruteforce`] agrees bit for bit.

use crate::error::{invalid, Result};
use crate::extreal::ExtReal;
use crate::grid::{dot, norm, Axis, Grid, Point};
use crate::sampled::SampledFunction;

/// Conjugate values above this are reported as `+∞`.
pub const DEFAULT_CAP: f64 = 1e12;

/// Relative round-off allowance for convexity checks on computed samples.
pub const ROUNDOFF_REL_TOL: f64 = 1e-9;

/// A function and its conjugate, on their own grids.
#[derive(Clone, Debug)]
pub struct ConjugatePair {
    phi: SampledFunction,
    phistar: SampledFunction,
    fy_tol: f64,
}

impl ConjugatePair {
    /// Pairs `phi` with a given `phistar`, checking the Fenchel–Young
    /// inequality `φ(x) + φ*(y) ≥ ⟨x,y⟩ − fy_tol` at every finite node pair.
    pub fn new(phi: SampledFunction, phistar: SampledFunction, fy_tol: f64) -> Result<Self> {
        if phi.grid().dim() != phistar.grid().dim() {
            return invalid("phi and phistar grids differ in dimension");
        }
        if !phi.has_domain() || !phistar.has_domain() {
            return invalid("conjugate pair needs nonempty domains");
        }
        let xs = phi.grid().coords();
        let ys = phistar.grid().coords();
        for (i, x) in xs.iter().enumerate() {
            let Some(px) = phi.get(i).value() else { continue };
            for (j, y) in ys.iter().enumerate() {
                let Some(py) = phistar.get(j).value() else { continue };
                if px + py - dot(x, y) < -fy_tol {
                    return invalid(format!(
                        "Fenchel-Young inequality violated at x={:?}, y={:?} by {}",
                        &x[..phi.grid().dim()],
                        &y[..phi.grid().dim()],
                        dot(x, y) - px - py
                    ));
                }
            }
        }
        Ok(ConjugatePair { phi, phistar, fy_tol })
    }

    /// `phistar = conjugate(phi, ygrid)`.
    pub fn from_phi(phi: SampledFunction, ygrid: &Grid) -> Result<Self> {
        let phistar = conjugate(&phi, ygrid)?;
        let fy_tol = ROUNDOFF_REL_TOL * (1.0 + phi.scale() + phistar.scale());
        Ok(ConjugatePair { phi, phistar, fy_tol })
    }

    pub fn phi(&self) -> &SampledFunction {
        &self.phi
    }

    pub fn phistar(&self) -> &SampledFunction {
        &self.phistar
    }

    pub fn fy_tol(&self) -> f64 {
        self.fy_tol
    }

    pub fn xgrid(&self) -> &Grid {
        self.phi.grid()
    }

    pub fn ygrid(&self) -> &Grid {
        self.phistar.grid()
    }

    /// Fenchel–Young residual `φ(x) + φ*(y) − ⟨x,y⟩`, `None` when either is `+∞`.
    #[inline]
    pub fn residual(&self, ix: usize, iy: usize, x: &Point, y: &Point) -> Option<f64> {
        let px = self.phi.get(ix).value()?;
        let py = self.phistar.get(iy).value()?;
        Some(px + py - dot(x, y))
    }
}

/// Lower convex hull of `(xs[i], vals[i])` over the finite entries, as
/// positions into `finite` (ascending `xs`).
fn lower_hull(xs: &[f64], vals: &[f64], finite: &[usize]) -> Vec<usize> {
    let mut hull: Vec<usize> = Vec::with_capacity(finite.len());
    for (p, &i) in finite.iter().enumerate() {
        while hull.len() >= 2 {
            let o = finite[hull[hull.len() - 2]];
            let a = finite[hull[hull.len() - 1]];
            let cross = (xs[a] - xs[o]) * (vals[i] - vals[o]) - (vals[a] - vals[o]) * (xs[i] - xs[o]);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// `out[j] = max_i (xs[i]·slopes[j] − vals[i])` over finite `vals`, or `-∞`
/// when none is finite. `xs` and `slopes` must be ascending.
fn transform_1d(xs: &[f64], vals: &[f64], slopes: &[f64], out: &mut [f64]) {
    let finite: Vec<usize> = (0..xs.len()).filter(|&i| vals[i].is_finite()).collect();
    if finite.is_empty() {
        out.fill(f64::NEG_INFINITY);
        return;
    }
    let hull = lower_hull(xs, vals, &finite);
    let edge: Vec<f64> = hull
        .windows(2)
        .map(|w| {
            let (a, b) = (finite[w[0]], finite[w[1]]);
            (vals[b] - vals[a]) / (xs[b] - xs[a])
        })
        .collect();
    let xmax = xs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let vmax = finite.iter().fold(0.0f64, |m, &i| m.max(vals[i].abs()));
    let dxmin = xs.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min).min(1.0);
    let mut k = 0usize;
    for (j, &s) in slopes.iter().enumerate() {
        while k < edge.len() && edge[k] < s {
            k += 1;
        }
        // Edges whose slope is within round-off of `s` make their whole span
        // a near-tie; every point in it is evaluated.
        let thr = 1e-9 * (1.0 + s.abs()) + 64.0 * f64::EPSILON * (xmax * s.abs() + vmax) / dxmin;
        let mut lo = k;
        while lo > 0 && (edge[lo - 1] - s).abs() <= thr {
            lo -= 1;
        }
        let mut hi = k;
        while hi < edge.len() && (edge[hi] - s).abs() <= thr {
            hi += 1;
        }
        let first = hull[lo].saturating_sub(1);
        let last = (hull[hi] + 1).min(finite.len() - 1);
        let mut best = f64::NEG_INFINITY;
        for &i in &finite[first..=last] {
            let v = xs[i] * s - vals[i];
            if v > best {
                best = v;
            }
        }
        out[j] = best + 0.0;
    }
}

fn check_conjugable(phi: &SampledFunction, ygrid: &Grid) -> Result<()> {
    if phi.grid().dim() != ygrid.dim() {
        return invalid("dual grid dimension differs from the primal grid");
    }
    if !phi.has_domain() {
        return invalid("conjugate of a function with empty domain (identically +inf)");
    }
    Ok(())
}

fn finish(ygrid: &Grid, raw: Vec<f64>, cap: f64) -> Result<SampledFunction> {
    let vals = raw.into_iter().map(|v| ExtReal::from_capped(v, cap)).collect();
    SampledFunction::new(ygrid.clone(), vals)
}

/// Fenchel conjugate `φ*(y) = max_x ⟨x,y⟩ − φ(x)` over the nodes of `phi`,
/// evaluated at the nodes of `ygrid`.
pub fn conjugate(phi: &SampledFunction, ygrid: &Grid) -> Result<SampledFunction> {
    conjugate_with_cap(phi, ygrid, DEFAULT_CAP)
}

pub fn conjugate_with_cap(phi: &SampledFunction, ygrid: &Grid, cap: f64) -> Result<SampledFunction> {
    check_conjugable(phi, ygrid)?;
    let xg = phi.grid();
    let vals: Vec<f64> = phi.vals().iter().map(|v| v.raw()).collect();
    if xg.dim() == 1 {
        let mut out = vec![0.0; ygrid.len()];
        transform_1d(&xg.axis(0).nodes(), &vals, &ygrid.axis(0).nodes(), &mut out);
        return finish(ygrid, out, cap);
    }
    let [n0, n1] = xg.shape();
    let [m0, m1] = ygrid.shape();
    let (x0, x1) = (xg.axis(0).nodes(), xg.axis(1).nodes());
    let (s0, s1) = (ygrid.axis(0).nodes(), ygrid.axis(1).nodes());
    // inner[i0 * m1 + j1] = max_{x1} (x1·s1 − φ(x0, x1))
    let mut inner = vec![0.0; n0 * m1];
    for i0 in 0..n0 {
        transform_1d(&x1, &vals[i0 * n1..(i0 + 1) * n1], &s1, &mut inner[i0 * m1..(i0 + 1) * m1]);
    }
    let mut out = vec![0.0; m0 * m1];
    let mut column = vec![0.0; n0];
    let mut result = vec![0.0; m0];
    for j1 in 0..m1 {
        for i0 in 0..n0 {
            column[i0] = -inner[i0 * m1 + j1];
        }
        transform_1d(&x0, &column, &s0, &mut result);
        for j0 in 0..m0 {
            out[j0 * m1 + j1] = result[j0];
        }
    }
    finish(ygrid, out, cap)
}

/// Exhaustive `O(N·M)` conjugate with the same contract (and the same
/// floating-point association) as [`conjugate`]. Test oracle.
pub fn conjugate_bruteforce(phi: &SampledFunction, ygrid: &Grid) -> Result<SampledFunction> {
    conjugate_bruteforce_with_cap(phi, ygrid, DEFAULT_CAP)
}

pub fn conjugate_bruteforce_with_cap(phi: &SampledFunction, ygrid: &Grid, cap: f64) -> Result<SampledFunction> {
    check_conjugable(phi, ygrid)?;
    let out = ygrid.coords().iter().map(|y| conjugate_value(phi, y)).collect();
    finish(ygrid, out, cap)
}

/// `max_x ⟨x,y⟩ − φ(x)` at a single dual point (uncapped, `-∞` on empty domain).
pub fn conjugate_value(phi: &SampledFunction, y: &Point) -> f64 {
    let xg = phi.grid();
    let mut best = f64::NEG_INFINITY;
    for (i, v) in phi.vals().iter().enumerate() {
        let Some(v) = v.value() else { continue };
        let x = xg.coord(i);
        let val = if xg.dim() == 1 { x[0] * y[0] - v } else { x[0] * y[0] + (x[1] * y[1] - v) };
        if val > best {
            best = val;
        }
    }
    best + 0.0
}

/// Resolution-consistent Fenchel–Young tolerance `h·(1 + ‖y‖)`.
pub fn default_fy_tol(xgrid: &Grid, y: &Point) -> f64 {
    xgrid.max_spacing() * (1.0 + norm(y))
}

/// Discrete `∂φ*(y)`: the x-nodes where `φ(x) + φ*(y) − ⟨x,y⟩ ≤ tol`.
pub fn subdiff_points(pair: &ConjugatePair, at_y: usize, tol: f64) -> Vec<usize> {
    let y = pair.ygrid().coord(at_y);
    if pair.phistar().get(at_y).is_infinite() {
        return Vec::new();
    }
    let xg = pair.xgrid();
    (0..xg.len())
        .filter(|&ix| pair.residual(ix, at_y, &xg.coord(ix), &y).is_some_and(|r| r <= tol))
        .collect()
}

fn slope_range_1d(xs: &[f64], vals: &[f64]) -> Option<(f64, f64)> {
    let finite: Vec<usize> = (0..xs.len()).filter(|&i| vals[i].is_finite()).collect();
    let hull = lower_hull(xs, vals, &finite);
    if hull.len() < 2 {
        return None;
    }
    let slope = |w: &[usize]| {
        let (a, b) = (finite[w[0]], finite[w[1]]);
        (vals[b] - vals[a]) / (xs[b] - xs[a])
    };
    let first = slope(&hull[..2]);
    let last = slope(&hull[hull.len() - 2..]);
    Some((first, last))
}

/// Dual box spanning the slopes of the lower hull of `phi`, padded by 10% of
/// its width on each side, with as many nodes as `phi`'s grid. Axes whose
/// slope range is degenerate reuse the primal axis bounds.
pub fn default_dual_grid(phi: &SampledFunction) -> Result<Grid> {
    let g = phi.grid();
    let vals: Vec<f64> = phi.vals().iter().map(|v| v.raw()).collect();
    let [n0, n1] = g.shape();
    let mut axes = Vec::new();
    for (k, axis) in g.axes().iter().enumerate() {
        let nodes = axis.nodes();
        let mut range: Option<(f64, f64)> = None;
        let mut merge = |r: Option<(f64, f64)>| {
            if let Some((a, b)) = r {
                range = Some(range.map_or((a, b), |(lo, hi)| (lo.min(a), hi.max(b))));
            }
        };
        if g.dim() == 1 {
            merge(slope_range_1d(&nodes, &vals));
        } else if k == 0 {
            for i1 in 0..n1 {
                let col: Vec<f64> = (0..n0).map(|i0| vals[i0 * n1 + i1]).collect();
                merge(slope_range_1d(&nodes, &col));
            }
        } else {
            for i0 in 0..n0 {
                merge(slope_range_1d(&nodes, &vals[i0 * n1..(i0 + 1) * n1]));
            }
        }
        let (lo, hi) = match range {
            Some((lo, hi)) if hi - lo > 1e-9 * (1.0 + lo.abs().max(hi.abs())) => {
                let pad = 0.1 * (hi - lo);
                (lo - pad, hi + pad)
            }
            _ => (axis.lo(), axis.hi()),
        };
        axes.push(Axis::new(lo, hi, axis.len())?);
    }
    Grid::new(axes)
}

/// `max |φ**(x) − φ(x)|` over nodes where both are finite, with `φ*` taken
/// on [`default_dual_grid`].
pub fn biconjugate_residual(phi: &SampledFunction) -> Result<f64> {
    let ygrid = default_dual_grid(phi)?;
    biconjugate_residual_on(phi, &ygrid)
}

pub fn biconjugate_residual_on(phi: &SampledFunction, ygrid: &Grid) -> Result<f64> {
    let star = conjugate(phi, ygrid)?;
    let bistar = conjugate(&star, phi.grid())?;
    Ok(phi
        .vals()
        .iter()
        .zip(bistar.vals())
        .filter_map(|(a, b)| Some((a.value()? - b.value()?).abs()))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_convex;

    fn line(lo: f64, hi: f64, n: usize) -> Grid {
        Grid::line(lo, hi, n).unwrap()
    }

    fn indicator_11(p: Point) -> f64 {
        if p[0].abs() <= 1.0 + 1e-12 {
            0.0
        } else {
            f64::INFINITY
        }
    }

    #[test]
    fn half_square_is_self_conjugate() {
        let g = line(-4.0, 4.0, 161);
        let h = g.axis(0).h();
        let phi = SampledFunction::from_fn(g.clone(), |p| 0.5 * p[0] * p[0]).unwrap();
        let star = conjugate(&phi, &g).unwrap();
        for i in 0..g.len() {
            let y = g.coord(i)[0];
            assert!((star.get(i).raw() - 0.5 * y * y).abs() <= h * h);
        }
        assert_eq!(star, conjugate_bruteforce(&phi, &g).unwrap());
    }

    #[test]
    fn indicator_conjugates_to_abs_exactly() {
        let g = line(-2.0, 2.0, 101);
        let phi = SampledFunction::from_fn(g.clone(), indicator_11).unwrap();
        let star = conjugate(&phi, &g).unwrap();
        for i in 0..g.len() {
            assert_eq!(star.get(i).raw(), g.coord(i)[0].abs());
        }
    }

    #[test]
    fn scaled_quadratic_2d() {
        let g = Grid::square(-2.0, 2.0, 41).unwrap();
        let k = 2.0;
        let phi = SampledFunction::from_fn(g.clone(), |p| 0.5 * k * (p[0] * p[0] + p[1] * p[1])).unwrap();
        let yg = Grid::square(-4.0, 4.0, 41).unwrap();
        let star = conjugate(&phi, &yg).unwrap();
        let h = g.max_spacing();
        for j in 0..yg.len() {
            let y = yg.coord(j);
            let exact = (y[0] * y[0] + y[1] * y[1]) / (2.0 * k);
            assert!((star.get(j).raw() - exact).abs() <= k * h * h, "{y:?}");
        }
        assert_eq!(star, conjugate_bruteforce(&phi, &yg).unwrap());
    }

    #[test]
    fn abs_conjugates_to_flat_bottom() {
        let g = line(-2.0, 2.0, 101);
        let phi = SampledFunction::from_fn(g.clone(), |p| p[0].abs()).unwrap();
        let star = conjugate_bruteforce(&phi, &g).unwrap();
        for i in 0..g.len() {
            let y = g.coord(i)[0];
            if y.abs() <= 1.0 + 1e-12 {
                assert_eq!(star.get(i).raw(), 0.0);
            } else {
                // the box truncates +inf to the support of [-2, 2]
                assert!((star.get(i).raw() - 2.0 * (y.abs() - 1.0)).abs() < 1e-12);
            }
        }
        assert_eq!(star, conjugate(&phi, &g).unwrap());
    }

    #[test]
    fn one_point_domain_gives_linear_conjugate() {
        let g = line(-1.0, 1.0, 21);
        let phi = SampledFunction::from_fn(g.clone(), |p| if (p[0] - 0.3).abs() < 1e-9 { 0.7 } else { f64::INFINITY }).unwrap();
        let star = conjugate(&phi, &g).unwrap();
        let x0 = g.coord(13)[0];
        for i in 0..g.len() {
            let y = g.coord(i)[0];
            assert_eq!(star.get(i).raw(), x0 * y - 0.7);
        }
        assert_eq!(star, conjugate_bruteforce(&phi, &g).unwrap());
    }

    #[test]
    fn empty_domain_is_rejected() {
        let g = line(-1.0, 1.0, 5);
        let phi = SampledFunction::new(g.clone(), vec![ExtReal::INFINITY; 5]).unwrap();
        assert!(conjugate(&phi, &g).is_err());
        assert!(conjugate_bruteforce(&phi, &g).is_err());
    }

    #[test]
    fn cap_turns_huge_values_into_infinity() {
        let g = line(-1.0, 1.0, 5);
        let phi = SampledFunction::from_fn(g.clone(), |p| -1e13 * p[0].abs()).unwrap();
        let star = conjugate(&phi, &g).unwrap();
        assert!(star.vals().iter().all(|v| v.is_infinite()));
    }

    #[test]
    fn conjugate_of_nonconvex_is_convex() {
        let g = line(-2.0, 2.0, 201);
        let phi = SampledFunction::from_fn(g.clone(), |p| (3.0 * p[0]).sin() + 0.1 * p[0] * p[0]).unwrap();
        let star = conjugate(&phi, &g).unwrap();
        assert!(is_convex(&star, ROUNDOFF_REL_TOL * (1.0 + star.scale())).unwrap().passed());
        assert_eq!(star, conjugate_bruteforce(&phi, &g).unwrap());
    }

    #[test]
    fn subdifferential_of_half_square_at_one() {
        let g = line(-2.0, 2.0, 101);
        let h = g.axis(0).h();
        let phi = SampledFunction::from_fn(g.clone(), |p| 0.5 * p[0] * p[0]).unwrap();
        let pair = ConjugatePair::from_phi(phi, &g).unwrap();
        let at = g.nearest(&[1.0]).unwrap();
        let pts = subdiff_points(&pair, at, h * h);
        assert_eq!(pts, vec![at - 1, at, at + 1]);
        // tol = h admits every node with (x-1)²/2 ≤ h
        let wide = subdiff_points(&pair, at, h);
        let expect: Vec<usize> = (0..g.len()).filter(|&i| 0.5 * (g.coord(i)[0] - 1.0).powi(2) <= h).collect();
        assert_eq!(wide, expect);
    }

    #[test]
    fn subdifferential_of_abs_at_one_is_the_right_ray() {
        let g = line(-2.0, 2.0, 101);
        let h = g.axis(0).h();
        let phi = SampledFunction::from_fn(g.clone(), |p| p[0].abs()).unwrap();
        let pair = ConjugatePair::from_phi(phi, &g).unwrap();
        let pts = subdiff_points(&pair, g.nearest(&[1.0]).unwrap(), h);
        // residual |x| - x is 0 on x ≥ 0 and 2|x| ≥ 2h on the negative nodes
        let expect: Vec<usize> = (0..g.len()).filter(|&i| g.coord(i)[0] >= -h / 2.0).collect();
        assert_eq!(pts, expect);
        assert!(pts.iter().all(|&i| g.coord(i)[0] >= -h));
    }

    #[test]
    fn subdifferential_grows_with_tolerance() {
        let g = line(-2.0, 2.0, 81);
        let phi = SampledFunction::from_fn(g.clone(), |p| (p[0] - 0.3).powi(4) + p[0].abs()).unwrap();
        let pair = ConjugatePair::from_phi(phi, &g).unwrap();
        for at in [5, 40, 77] {
            let mut prev: Vec<usize> = Vec::new();
            for tol in [0.0, 1e-3, 1e-2, 0.1, 1.0] {
                let cur = subdiff_points(&pair, at, tol);
                assert!(prev.iter().all(|i| cur.contains(i)));
                prev = cur;
            }
        }
    }

    #[test]
    fn fenchel_young_violations_are_rejected() {
        let g = line(-1.0, 1.0, 11);
        let phi = SampledFunction::from_fn(g.clone(), |p| 0.5 * p[0] * p[0]).unwrap();
        let wrong = SampledFunction::from_fn(g, |_| -1.0).unwrap();
        assert!(ConjugatePair::new(phi, wrong, 1e-9).is_err());
    }

    #[test]
    fn biconjugate_of_half_square() {
        let g = line(-2.0, 2.0, 101);
        let h = g.axis(0).h();
        let phi = SampledFunction::from_fn(g, |p| 0.5 * p[0] * p[0]).unwrap();
        assert!(biconjugate_residual(&phi).unwrap() <= h * h);
    }

    #[test]
    fn biconjugate_of_indicator_is_exact_on_domain() {
        let g = line(-2.0, 2.0, 101);
        let phi = SampledFunction::from_fn(g.clone(), indicator_11).unwrap();
        assert_eq!(biconjugate_residual_on(&phi, &g).unwrap(), 0.0);
    }

    #[test]
    fn default_dual_box_pads_hull_slopes() {
        let g = line(-2.0, 2.0, 101);
        let phi = SampledFunction::from_fn(g.clone(), |p| p[0].abs()).unwrap();
        let d = default_dual_grid(&phi).unwrap();
        assert!((d.axis(0).lo() + 1.2).abs() < 1e-12 && (d.axis(0).hi() - 1.2).abs() < 1e-12);
        let flat = SampledFunction::from_fn(g.clone(), indicator_11).unwrap();
        assert_eq!(default_dual_grid(&flat).unwrap(), g);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn samples(n: usize) -> impl Strategy<Value = Vec<f64>> {
            prop::collection::vec(prop_oneof![4 => -50.0..50.0f64, 1 => Just(f64::INFINITY), 1 => (-3i32..3).prop_map(f64::from)], n)
        }

        proptest! {
            #[test]
            fn linear_time_matches_bruteforce_1d(vals in samples(23), lo in -3.0..0.0f64, w in 0.5..6.0f64, m in 3usize..40) {
                let g = line(-1.0, 1.5, 23);
                let vals: Vec<ExtReal> = vals.into_iter().map(|v| ExtReal::new(v).unwrap()).collect();
                prop_assume!(vals.iter().any(|v| v.is_finite()));
                let phi = SampledFunction::new(g, vals).unwrap();
                let yg = line(lo, lo + w, m);
                prop_assert_eq!(conjugate(&phi, &yg).unwrap(), conjugate_bruteforce(&phi, &yg).unwrap());
            }

            #[test]
            fn linear_time_matches_bruteforce_2d(vals in samples(49)) {
                let g = Grid::square(-1.0, 1.0, 7).unwrap();
                let vals: Vec<ExtReal> = vals.into_iter().map(|v| ExtReal::new(v).unwrap()).collect();
                prop_assume!(vals.iter().any(|v| v.is_finite()));
                let phi = SampledFunction::new(g, vals).unwrap();
                let yg = Grid::new(vec![Axis::new(-3.0, 2.0, 9).unwrap(), Axis::new(-1.0, 4.0, 6).unwrap()]).unwrap();
                prop_assert_eq!(conjugate(&phi, &yg).unwrap(), conjugate_bruteforce(&phi, &yg).unwrap());
            }

            #[test]
            fn conjugation_reverses_order(a in samples(15), bump in prop::collection::vec(0.0..5.0f64, 15)) {
                let g = line(-1.0, 1.0, 15);
                let f: Vec<ExtReal> = a.into_iter().map(|v| ExtReal::new(v).unwrap()).collect();
                prop_assume!(f.iter().any(|v| v.is_finite()));
                let gvals: Vec<ExtReal> = f.iter().zip(&bump).map(|(v, b)| v.add_real(*b)).collect();
                let f = SampledFunction::new(g.clone(), f).unwrap();
                let gf = SampledFunction::new(g.clone(), gvals).unwrap();
                prop_assert!(conjugate(&gf, &g).unwrap().le(&conjugate(&f, &g).unwrap()));
            }

            #[test]
            fn fenchel_young_holds_on_nodes(a in samples(15)) {
                let g = line(-1.0, 1.0, 15);
                let f: Vec<ExtReal> = a.into_iter().map(|v| ExtReal::new(v).unwrap()).collect();
                prop_assume!(f.iter().any(|v| v.is_finite()));
                let phi = SampledFunction::new(g.clone(), f).unwrap();
                prop_assert!(ConjugatePair::from_phi(phi.clone(), &g).is_ok());
                let star = conjugate(&phi, &g).unwrap();
                prop_assert!(ConjugatePair::new(phi, star, 1e-9).is_ok());
            }
        }
    }
}
