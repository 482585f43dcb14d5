//! Bipotentials and syncs on sampled grids: constructions, graphs, the axiom
//! checkers, BB-graph sections and cyclic monotonicity.

use rayon::prelude::*;

use crate::convexity::{is_convex, is_set_convex};
use crate::error::{invalid, Result};
use crate::extreal::ExtReal;
use crate::graph::GraphSet;
use crate::grid::{dot, Grid};
use crate::legendre::{conjugate, ConjugatePair, ROUNDOFF_REL_TOL};
use crate::report::{CheckReport, Witness};
use crate::sampled::{SampledBivariate, SampledFunction};

/// `c(x,y) = b(x,y) − ⟨x,y⟩`.
pub fn sync_from_bipotential(b: &SampledBivariate) -> SampledBivariate {
    b.shifted_by_dot(-1.0)
}

/// `b(x,y) = c(x,y) + ⟨x,y⟩`. Values of `c` below zero by more than
/// round-off are rejected.
pub fn bipotential_from_sync(c: &SampledBivariate) -> Result<SampledBivariate> {
    let b = c.shifted_by_dot(1.0);
    let (xs, ys) = (c.xgrid().coords(), c.ygrid().coords());
    let ny = ys.len();
    for (k, v) in c.vals().iter().enumerate() {
        let Some(v) = v.value() else { continue };
        let d = dot(&xs[k / ny], &ys[k % ny]);
        if v < -ROUNDOFF_REL_TOL * (1.0 + d.abs()) {
            return invalid(format!("sync value {v} < 0 at x-node {}, y-node {}", k / ny, k % ny));
        }
    }
    Ok(b)
}

/// `b(x,y) = φ(x) + φ*(y)` with `φ*` conjugated onto `ygrid`.
pub fn separable(phi: &SampledFunction, ygrid: &Grid) -> Result<SampledBivariate> {
    let phistar = conjugate(phi, ygrid)?;
    separable_from(phi, &phistar)
}

pub fn separable_pair(pair: &ConjugatePair) -> SampledBivariate {
    separable_from(pair.phi(), pair.phistar()).expect("conjugate pair grids agree in dimension")
}

fn separable_from(phi: &SampledFunction, phistar: &SampledFunction) -> Result<SampledBivariate> {
    let ny = phistar.vals().len();
    let mut vals = Vec::with_capacity(phi.vals().len() * ny);
    for &p in phi.vals() {
        vals.extend(phistar.vals().iter().map(|&q| p + q));
    }
    SampledBivariate::new(phi.grid().clone(), phistar.grid().clone(), vals)
}

/// `b_∞(x,y) = ⟨x,y⟩ + χ_M(x,y)`.
pub fn b_infinity(m: &GraphSet) -> Result<SampledBivariate> {
    if m.is_empty() {
        return invalid("b_infinity of an empty graph");
    }
    let (xs, ys) = (m.xgrid().coords(), m.ygrid().coords());
    let ny = ys.len();
    let mut vals = vec![ExtReal::INFINITY; xs.len() * ny];
    for (ix, iy) in m.pairs() {
        vals[ix * ny + iy] = ExtReal::finite(dot(&xs[ix], &ys[iy]));
    }
    SampledBivariate::new(m.xgrid().clone(), m.ygrid().clone(), vals)
}

/// Node pairs with `b(x,y) − ⟨x,y⟩ ≤ tol`.
pub fn graph_of(b: &SampledBivariate, tol: f64) -> Result<GraphSet> {
    if !(tol >= 0.0) {
        return invalid(format!("tolerance must be nonnegative, got {tol}"));
    }
    let (xs, ys) = (b.xgrid().coords(), b.ygrid().coords());
    let ny = ys.len();
    let mut m = GraphSet::empty(b.xgrid().clone(), b.ygrid().clone())?;
    for (ix, x) in xs.iter().enumerate() {
        for (iy, y) in ys.iter().enumerate() {
            if let Some(v) = b.vals()[ix * ny + iy].value() {
                if v - dot(x, y) <= tol {
                    m.insert(ix, iy);
                }
            }
        }
    }
    Ok(m)
}

/// Pointwise tolerance `abs + rel·|⟨x,y⟩|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn absolute(abs: f64) -> Self {
        Tolerance { abs, rel: 0.0 }
    }

    /// `3h·(1 + |⟨x,y⟩|)` with `h` the coarsest spacing of either grid.
    pub fn resolution(xgrid: &Grid, ygrid: &Grid) -> Self {
        let h = xgrid.max_spacing().max(ygrid.max_spacing());
        Tolerance { abs: 3.0 * h, rel: 3.0 * h }
    }

    #[inline]
    pub fn at(&self, d: f64) -> f64 {
        self.abs + self.rel * d.abs()
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs >= 0.0 && self.rel >= 0.0) {
            return invalid(format!("tolerance must be nonnegative, got {self}"));
        }
        Ok(())
    }
}

impl From<f64> for Tolerance {
    fn from(abs: f64) -> Self {
        Tolerance::absolute(abs)
    }
}

impl std::fmt::Display for Tolerance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.rel == 0.0 {
            write!(f, "{}", self.abs)
        } else {
            write!(f, "{}+{}*|<x,y>|", self.abs, self.rel)
        }
    }
}

fn slice_tol(f: &SampledFunction) -> f64 {
    ROUNDOFF_REL_TOL * (1.0 + f.scale())
}

fn coord(g: &Grid, i: usize) -> Vec<f64> {
    g.coord(i)[..g.dim()].to_vec()
}

fn pair_witness(label: &str, b: &SampledBivariate, ix: usize, iy: usize) -> Witness {
    Witness::new(label).node(ix, &coord(b.xgrid(), ix)).node(iy, &coord(b.ygrid(), iy))
}

/// First nonempty slice (y-slices `b(·,y)` first, then x-slices `b(x,·)`)
/// that fails discrete convexity, as a report named `check`.
fn slice_convexity(b: &SampledBivariate, check: &str) -> Result<Option<CheckReport>> {
    let (nx, ny) = (b.xgrid().len(), b.ygrid().len());
    let tested = |f: SampledFunction| -> Result<Option<CheckReport>> {
        if !f.has_domain() {
            return Ok(None);
        }
        let r = is_convex(&f, slice_tol(&f))?;
        Ok(r.failed().then_some(r))
    };
    let y_fail = (0..ny)
        .into_par_iter()
        .map(|iy| tested(b.y_slice(iy)).map(|r| r.map(|r| (iy, r))))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    let wrap = |side: &str, which: usize, inner: CheckReport| {
        let w = inner.witness.clone().unwrap_or_else(|| Witness::new(""));
        let other = if side == "y" { b.ygrid() } else { b.xgrid() };
        let mut w2 = Witness::new(format!("nonconvex {side}-slice: {}", w.label)).node(which, &coord(other, which));
        w2.indices.extend(&w.indices);
        w2.coords.extend(w.coords.iter().cloned());
        CheckReport::fail(check, "slice-convexity", w2, inner.residual)
            .with("slice", format!("{side}-slice"))
            .with("slice_index", which)
            .with("slice_axiom", inner.axiom.clone().unwrap_or_default())
            .with("direction", inner.field("direction").unwrap_or("-"))
    };
    if let Some(r) = y_fail {
        let (iy, rep) = r?.expect("found failures carry a report");
        return Ok(Some(wrap("y", iy, rep)));
    }
    let x_fail = (0..nx)
        .into_par_iter()
        .map(|ix| tested(b.x_slice(ix)).map(|r| r.map(|r| (ix, r))))
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    if let Some(r) = x_fail {
        let (ix, rep) = r?.expect("found failures carry a report");
        return Ok(Some(wrap("x", ix, rep)));
    }
    Ok(None)
}

/// `s_y[iy] = max_x ⟨x,y⟩ − b(x,y)` (the slice conjugate of `b(·,y)` at `y`)
/// and `s_x[ix] = max_y ⟨x,y⟩ − b(x,y)`.
fn slice_conjugates_at_diagonal(b: &SampledBivariate) -> (Vec<f64>, Vec<f64>) {
    let (xs, ys) = (b.xgrid().coords(), b.ygrid().coords());
    let ny = ys.len();
    let s_x: Vec<f64> = xs
        .par_iter()
        .enumerate()
        .map(|(ix, x)| {
            let row = &b.vals()[ix * ny..(ix + 1) * ny];
            row.iter()
                .zip(&ys)
                .filter_map(|(v, y)| v.value().map(|v| dot(x, y) - v))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    let mut s_y = vec![f64::NEG_INFINITY; ny];
    for (ix, x) in xs.iter().enumerate() {
        let row = &b.vals()[ix * ny..(ix + 1) * ny];
        for ((best, v), y) in s_y.iter_mut().zip(row).zip(&ys) {
            if let Some(v) = v.value() {
                let t = dot(x, y) - v;
                if t > *best {
                    *best = t;
                }
            }
        }
    }
    (s_y, s_x)
}

/// Bipotential axioms: (a) every nonempty slice is convex; (b)
/// `b ≥ ⟨x,y⟩ − tol`; (c) the memberships `y ∈ ∂b(·,y)(x)`,
/// `x ∈ ∂b(x,·)(y)` and `b(x,y) = ⟨x,y⟩`, each decided by a Fenchel–Young
/// residual `≤ tol`, coincide: whenever one holds at `tol` all hold at `2·tol`.
pub fn check_bipotential(b: &SampledBivariate, tol: impl Into<Tolerance>) -> Result<CheckReport> {
    const NAME: &str = "check_bipotential";
    let tol = tol.into();
    tol.validate()?;
    if let Some(r) = slice_convexity(b, NAME)? {
        return Ok(r.with("tol", tol));
    }
    let (xs, ys) = (b.xgrid().coords(), b.ygrid().coords());
    let ny = ys.len();
    for (ix, x) in xs.iter().enumerate() {
        for (iy, y) in ys.iter().enumerate() {
            if let Some(v) = b.vals()[ix * ny + iy].value() {
                let d = dot(x, y);
                let gap = v - d;
                if gap < -tol.at(d) {
                    let w = pair_witness("b(x,y) < <x,y>", b, ix, iy);
                    return Ok(CheckReport::fail(NAME, "lower-bound", w, Some(gap)).with("tol", tol));
                }
            }
        }
    }
    let (s_y, s_x) = slice_conjugates_at_diagonal(b);
    let mut on_graph = 0usize;
    for (ix, x) in xs.iter().enumerate() {
        for (iy, y) in ys.iter().enumerate() {
            let Some(v) = b.vals()[ix * ny + iy].value() else { continue };
            let d = dot(x, y);
            let t = tol.at(d);
            let r = [v + s_y[iy] - d, v + s_x[ix] - d, v - d];
            let holds = r.map(|r| r <= t);
            if holds[2] {
                on_graph += 1;
            }
            if holds.iter().any(|&h| h) && r.iter().any(|&r| r > 2.0 * t) {
                let (k, worst) = r.iter().enumerate().fold((0, f64::NEG_INFINITY), |a, (k, &v)| if v > a.1 { (k, v) } else { a });
                let which = ["y in subdiff b(.,y)(x)", "x in subdiff b(x,.)(y)", "b(x,y) = <x,y>"][k];
                let w = pair_witness(&format!("memberships disagree; fails: {which}"), b, ix, iy);
                return Ok(CheckReport::fail(NAME, "equivalence", w, Some(worst))
                    .with("residual_x_slice", r[0])
                    .with("residual_y_slice", r[1])
                    .with("residual_equality", r[2])
                    .with("tol_at_witness", t)
                    .with("tol", tol));
            }
        }
    }
    Ok(CheckReport::pass(NAME).with("graph_size", on_graph).with("tol", tol))
}

/// Sync axioms: `c ≥ −tol`, every nonempty slice convex, and every nonempty
/// slice attains a minimum `≤ tol` (evaluated at the minimizing pair). The verdict is cross-checked against
/// [`check_bipotential`] on `c + ⟨x,y⟩`; the report records whether the two
/// agree.
pub fn check_sync(c: &SampledBivariate, tol: impl Into<Tolerance>) -> Result<CheckReport> {
    let tol = tol.into();
    let mut report = check_sync_axioms(c, tol)?;
    let b = c.shifted_by_dot(1.0);
    let via_b = check_bipotential(&b, tol)?;
    report.push("bipotential_verdict", via_b.verdict.as_str());
    report.push("bipotential_agrees", via_b.verdict == report.verdict);
    Ok(report)
}

fn check_sync_axioms(c: &SampledBivariate, tol: Tolerance) -> Result<CheckReport> {
    const NAME: &str = "check_sync";
    tol.validate()?;
    let (nx, ny) = (c.xgrid().len(), c.ygrid().len());
    let (xs, ys) = (c.xgrid().coords(), c.ygrid().coords());
    let t = |ix: usize, iy: usize| tol.at(dot(&xs[ix], &ys[iy]));
    for ix in 0..nx {
        for iy in 0..ny {
            if let Some(v) = c.get(ix, iy).value() {
                if v < -t(ix, iy) {
                    let w = pair_witness("negative sync value", c, ix, iy);
                    return Ok(CheckReport::fail(NAME, "nonnegativity", w, Some(v)).with("tol", tol));
                }
            }
        }
    }
    if let Some(r) = slice_convexity(c, NAME)? {
        return Ok(r.with("tol", tol));
    }
    let mut min_y = vec![ExtReal::INFINITY; ny];
    let mut min_x = vec![ExtReal::INFINITY; nx];
    let mut arg_y = vec![0usize; ny];
    let mut arg_x = vec![0usize; nx];
    for ix in 0..nx {
        for iy in 0..ny {
            let v = c.get(ix, iy);
            if v < min_y[iy] {
                min_y[iy] = v;
                arg_y[iy] = ix;
            }
            if v < min_x[ix] {
                min_x[ix] = v;
                arg_x[ix] = iy;
            }
        }
    }
    for iy in 0..ny {
        if let Some(m) = min_y[iy].value() {
            if m > t(arg_y[iy], iy) {
                let w = pair_witness("y-slice minimum is positive", c, arg_y[iy], iy);
                return Ok(CheckReport::fail(NAME, "zero-minimum", w, Some(m)).with("slice", "y-slice").with("tol", tol));
            }
        }
    }
    for ix in 0..nx {
        if let Some(m) = min_x[ix].value() {
            if m > t(ix, arg_x[ix]) {
                let w = pair_witness("x-slice minimum is positive", c, ix, arg_x[ix]);
                return Ok(CheckReport::fail(NAME, "zero-minimum", w, Some(m)).with("slice", "x-slice").with("tol", tol));
            }
        }
    }
    Ok(CheckReport::pass(NAME).with("tol", tol))
}

/// BB-graph test: every nonempty section `M*(y)` (y-sections first) and
/// `M(x)` is a convex node set. Closedness holds trivially for finite node
/// sets and is reported as such.
pub fn check_bbgraph(m: &GraphSet) -> Result<CheckReport> {
    const NAME: &str = "check_bbgraph";
    if m.is_empty() {
        return invalid("BB-graph test of an empty graph");
    }
    let sections = |n: usize, section: &(dyn Fn(usize) -> Vec<usize> + Sync), grid: &Grid| {
        (0..n).into_par_iter().find_map_first(|k| {
            let s = section(k);
            if s.is_empty() {
                return None;
            }
            match is_set_convex(&s, grid) {
                Ok(r) if r.passed() => None,
                other => Some(other.map(|r| (k, s, r))),
            }
        })
    };
    let y_section = |iy: usize| m.y_section(iy);
    let x_section = |ix: usize| m.x_section(ix);
    let found = match sections(m.ygrid().len(), &y_section, m.xgrid()) {
        Some(r) => Some(("y", m.ygrid(), r?)),
        None => sections(m.xgrid().len(), &x_section, m.ygrid()).map(|r| r.map(|r| ("x", m.xgrid(), r))).transpose()?,
    };
    let Some((side, at_grid, (k, members, inner))) = found else {
        return Ok(CheckReport::pass(NAME).with("closedness", "vacuous on finite grids").with("members", m.len()));
    };
    let w = inner.witness.clone().unwrap_or_else(|| Witness::new(""));
    let mut w2 = Witness::new(format!("nonconvex {side}-section: {}", w.label)).node(k, &coord(at_grid, k));
    w2.indices.extend(&w.indices);
    w2.coords.extend(w.coords.iter().cloned());
    Ok(CheckReport::fail(NAME, "section-convexity", w2, inner.residual)
        .with("section", format!("{side}-section"))
        .with("section_index", k)
        .with("section_size", members.len())
        .with("section_members", section_coords(side, m, &members))
        .with("section_axiom", inner.axiom.unwrap_or_default())
        .with("closedness", "vacuous on finite grids"))
}

fn section_coords(side: &str, m: &GraphSet, members: &[usize]) -> String {
    let g = if side == "y" { m.xgrid() } else { m.ygrid() };
    let cs: Vec<String> = members.iter().map(|&i| format!("{:?}", coord(g, i))).collect();
    if cs.len() > 16 {
        format!("{} ... {} ({} nodes)", cs[..8].join(" "), cs[cs.len() - 8..].join(" "), cs.len())
    } else {
        cs.join(" ")
    }
}

/// Exhaustive cycle test: for every sequence of points `(x_0,y_0), …,
/// (x_n,y_n)` drawn with repetition, `2 ≤ n+1 ≤ n_max`,
/// `⟨x_n − x_0, y_n⟩ + Σ_{k=1..n} ⟨x_{k−1} − x_k, y_{k−1}⟩ ≥ −tol`.
/// `n_max` above the point count is clamped with a warning.
pub fn check_cyclically_monotone(points: &[(Vec<f64>, Vec<f64>)], n_max: usize, tol: f64) -> Result<CheckReport> {
    const NAME: &str = "check_cyclically_monotone";
    if points.is_empty() {
        return invalid("cyclic monotonicity of an empty point set");
    }
    if n_max < 1 {
        return invalid("cycle length bound must be at least 1");
    }
    let dim = points[0].0.len();
    if points.iter().any(|(x, y)| x.len() != dim || y.len() != dim || x.iter().chain(y).any(|v| !v.is_finite())) {
        return invalid("points must be finite and share one dimension");
    }
    let mut n_max = n_max;
    if n_max > points.len() {
        log::warn!("cycle length bound {n_max} exceeds the {} points; clamped", points.len());
        n_max = points.len();
    }
    let ip = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(a, b)| a * b).sum::<f64>();
    let diff = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(a, b)| a - b).collect::<Vec<f64>>();
    let p = points.len();
    let mut cycles = 0u64;
    for len in 2..=n_max {
        let mut seq = vec![0usize; len];
        loop {
            cycles += 1;
            let (x0, _) = &points[seq[0]];
            let (xn, yn) = &points[seq[len - 1]];
            let mut sum = ip(&diff(xn, x0), yn);
            for k in 1..len {
                let (xa, ya) = &points[seq[k - 1]];
                let (xb, _) = &points[seq[k]];
                sum += ip(&diff(xa, xb), ya);
            }
            if sum < -tol {
                let mut w = Witness::new("cycle with negative sum");
                for &i in &seq {
                    let mut c = points[i].0.clone();
                    c.extend(&points[i].1);
                    w = w.node(i, &c);
                }
                return Ok(CheckReport::fail(NAME, "cycle-inequality", w, Some(sum))
                    .with("cycle_length", len)
                    .with("n_max", n_max)
                    .with("tol", tol));
            }
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                seq[k] += 1;
                if seq[k] < p {
                    break;
                }
                seq[k] = 0;
            }
            if seq.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(CheckReport::pass(NAME).with("cycles", cycles).with("n_max", n_max).with("tol", tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(lo: f64, hi: f64, n: usize) -> Grid {
        Grid::line(lo, hi, n).unwrap()
    }

    fn quad(g: &Grid) -> SampledFunction {
        SampledFunction::from_fn(g.clone(), |p| 0.5 * p[0] * p[0]).unwrap()
    }

    #[test]
    fn sync_of_separable_quadratic_completes_the_square() {
        let g = line(-2.0, 2.0, 41);
        let b = separable(&quad(&g), &g).unwrap();
        let c = sync_from_bipotential(&b);
        let h = g.axis(0).h();
        for ix in 0..g.len() {
            for iy in 0..g.len() {
                let (x, y) = (g.coord(ix)[0], g.coord(iy)[0]);
                assert!((c.get(ix, iy).raw() - 0.5 * (x - y).powi(2)).abs() <= h * h);
            }
        }
        let back = bipotential_from_sync(&c).unwrap();
        assert!(back.max_abs_diff(&b).unwrap() < 1e-12);
    }

    #[test]
    fn negative_sync_is_rejected() {
        let g = line(-1.0, 1.0, 5);
        let c = SampledBivariate::from_fn(g.clone(), g, |_, _| -0.1).unwrap();
        assert!(bipotential_from_sync(&c).is_err());
    }

    #[test]
    fn b_infinity_sync_is_indicator() {
        let g = line(-1.0, 1.0, 11);
        let m = GraphSet::from_pairs(g.clone(), g.clone(), (0..11).map(|i| (i, i))).unwrap();
        let b = b_infinity(&m).unwrap();
        let c = sync_from_bipotential(&b);
        for ix in 0..11 {
            for iy in 0..11 {
                assert_eq!(c.get(ix, iy).is_finite(), ix == iy);
                if ix == iy {
                    assert_eq!(c.get(ix, iy).raw(), 0.0);
                }
            }
        }
        assert_eq!(graph_of(&b, 0.0).unwrap(), m);
        assert!(b_infinity(&GraphSet::empty(g.clone(), g).unwrap()).is_err());
    }

    #[test]
    fn separable_quadratic_passes_and_shifted_sync_fails() {
        let g = line(-2.0, 2.0, 81);
        let b = separable(&quad(&g), &g).unwrap();
        let tol = Tolerance::resolution(&g, &g);
        assert!(check_bipotential(&b, tol).unwrap().passed());
        let c = sync_from_bipotential(&b);
        let r = check_sync(&c, tol).unwrap();
        assert!(r.passed());
        assert_eq!(r.field("bipotential_agrees"), Some("true"));
        let shifted = SampledBivariate::from_fn(g.clone(), g.clone(), |x, y| 0.5 * (x[0] - y[0]).powi(2) + 1.0).unwrap();
        let r = check_sync(&shifted, tol).unwrap();
        assert!(r.failed());
        assert_eq!(r.axiom.as_deref(), Some("zero-minimum"));
        assert!((r.residual.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(r.field("bipotential_agrees"), Some("true"));
    }

    #[test]
    fn zero_function_fails_lower_bound() {
        let g = line(-1.0, 1.0, 11);
        let b = SampledBivariate::from_fn(g.clone(), g.clone(), |_, _| 0.0).unwrap();
        let r = check_bipotential(&b, 1e-9).unwrap();
        assert!(r.failed());
        assert_eq!(r.axiom.as_deref(), Some("lower-bound"));
        assert!(r.residual.unwrap() < 0.0);
    }

    #[test]
    fn nonconvex_slice_fails_slice_axiom() {
        let g = line(-1.0, 1.0, 11);
        let b = SampledBivariate::from_fn(g.clone(), g.clone(), |x, y| 5.0 - x[0] * x[0] + y[0] * y[0]).unwrap();
        let r = check_bipotential(&b, 1e-9).unwrap();
        assert_eq!(r.axiom.as_deref(), Some("slice-convexity"));
        assert_eq!(r.field("slice"), Some("y-slice"));
    }

    #[test]
    fn graph_of_indicator_separable() {
        let g = line(-2.0, 2.0, 41);
        let phi = SampledFunction::from_fn(g.clone(), |p| if p[0].abs() <= 1.0 + 1e-12 { 0.0 } else { f64::INFINITY }).unwrap();
        let b = separable(&phi, &g).unwrap();
        let m = graph_of(&b, 1e-12).unwrap();
        for (ix, iy) in m.pairs() {
            let (x, y) = (g.coord(ix)[0], g.coord(iy)[0]);
            let on = ((x + 1.0).abs() < 1e-9 && y <= 0.0) || (y == 0.0 && x.abs() <= 1.0 + 1e-9) || ((x - 1.0).abs() < 1e-9 && y >= 0.0);
            assert!(on, "({x}, {y})");
        }
        assert_eq!(m.len(), 21 + 2 * 20);
        assert!(check_bipotential(&b, Tolerance::resolution(&g, &g)).unwrap().passed());
    }

    #[test]
    fn bbgraph_sections() {
        let g = line(0.0, 1.0, 11);
        let band = GraphSet::from_pairs(g.clone(), g.clone(), (0..11usize).flat_map(|i| (i.saturating_sub(2)..=(i + 2).min(10)).map(move |j| (i, j)))).unwrap();
        assert!(check_bbgraph(&band).unwrap().passed());
        let two = GraphSet::from_pairs(g.clone(), g.clone(), [(0, 5), (10, 5)]).unwrap();
        let r = check_bbgraph(&two).unwrap();
        assert!(r.failed());
        assert_eq!(r.field("section"), Some("y-section"));
        assert_eq!(r.field("section_index"), Some("5"));
        assert!(check_bbgraph(&GraphSet::from_pairs(g.clone(), g, [(3, 4)]).unwrap()).unwrap().passed());
    }

    #[test]
    fn cyclic_monotonicity_examples() {
        let id: Vec<(Vec<f64>, Vec<f64>)> = (0..3).map(|i| (vec![i as f64], vec![i as f64])).collect();
        assert!(check_cyclically_monotone(&id, 3, 0.0).unwrap().passed());
        let swap = vec![(vec![0.0], vec![1.0]), (vec![1.0], vec![0.0])];
        let r = check_cyclically_monotone(&swap, 2, 0.0).unwrap();
        assert!(r.failed());
        assert_eq!(r.residual, Some(-1.0));
        assert_eq!(r.witness.unwrap().indices, vec![0, 1]);
        let flat = vec![(vec![0.0], vec![0.0]), (vec![1.0], vec![0.0])];
        let r = check_cyclically_monotone(&flat, 5, 0.0).unwrap();
        assert!(r.passed());
        assert_eq!(r.field("n_max"), Some("2"));
    }
}
