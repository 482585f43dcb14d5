//! Blurrings `A`: the inf-convolution `c_A = c ∇ χ_A`, the blurred
//! bipotential `b_A`, the blurred graph `M + A`, and condition (newc).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bipotential::{check_bbgraph, check_sync, graph_of, Tolerance};
use crate::convexity::is_set_convex;
use crate::error::{invalid, Error, Result};
use crate::extreal::ExtReal;
use crate::graph::GraphSet;
use crate::grid::{dot, norm, Grid, Point};
use crate::legendre::{subdiff_points, ConjugatePair};
use crate::minfilter::{apply_plan, BallPlan, Scratch};
use crate::report::{CheckReport, Witness};
use crate::sampled::{SampledBivariate, SampledFunction};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BlurKind {
    /// `A = {0} × B̄_Y(ε)`.
    YBall,
    /// `A = {(x,y) : (‖x‖^p + ‖y‖^p)^{1/p} ≤ ε}`.
    ProductBall { p: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlurSpec {
    pub kind: BlurKind,
    pub eps: f64,
}

impl BlurSpec {
    pub fn y_ball(eps: f64) -> Result<Self> {
        if !(eps >= 0.0 && eps.is_finite()) {
            return invalid(format!("blur radius must be finite and nonnegative, got {eps}"));
        }
        Ok(BlurSpec { kind: BlurKind::YBall, eps })
    }

    pub fn product_ball(eps: f64, p: f64) -> Result<Self> {
        if !(p >= 1.0) {
            return invalid(format!("norm exponent must be at least 1, got {p}"));
        }
        let spec = BlurSpec::y_ball(eps)?;
        Ok(BlurSpec { kind: BlurKind::ProductBall { p }, ..spec })
    }

    /// Rejects `0 < ε < h` on the grids the blur acts on.
    pub fn check_resolution(&self, xgrid: &Grid, ygrid: &Grid) -> Result<()> {
        let h = match self.kind {
            BlurKind::YBall => ygrid.min_spacing(),
            BlurKind::ProductBall { .. } => ygrid.min_spacing().min(xgrid.min_spacing()),
        };
        if self.eps > 0.0 && self.eps < h * (1.0 - 1e-9) {
            return Err(Error::BelowResolution { eps: self.eps, h });
        }
        Ok(())
    }

    /// The realized node set of `A` as index offsets `(dx, dy)`.
    pub fn offsets(&self, xgrid: &Grid, ygrid: &Grid) -> Vec<([isize; 2], [isize; 2])> {
        match self.kind {
            BlurKind::YBall => ygrid.ball_offsets(self.eps).into_iter().map(|dy| ([0, 0], dy)).collect(),
            BlurKind::ProductBall { p } => {
                let mut out = Vec::new();
                for dx in xgrid.ball_offsets(self.eps) {
                    let r = self.y_radius(p, norm(&xgrid.offset_coord(dx)));
                    out.extend(ygrid.ball_offsets(r).into_iter().map(|dy| (dx, dy)));
                }
                out
            }
        }
    }

    /// Largest `‖y‖` with `(‖x‖^p + ‖y‖^p)^{1/p} ≤ ε` for `‖x‖ = nx`.
    fn y_radius(&self, p: f64, nx: f64) -> f64 {
        (self.eps.powf(p) - nx.powf(p)).max(0.0).powf(1.0 / p)
    }

    fn require_y_ball(&self, what: &str) -> Result<()> {
        match self.kind {
            BlurKind::YBall => Ok(()),
            BlurKind::ProductBall { .. } => invalid(format!("{what} is defined for the y-ball blur only")),
        }
    }
}

impl std::fmt::Display for BlurSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            BlurKind::YBall => write!(f, "yball(eps={})", self.eps),
            BlurKind::ProductBall { p } => write!(f, "product(eps={}, p={p})", self.eps),
        }
    }
}

fn per_x_rows(ny: usize, nx: usize, fill: impl Fn(usize, &mut [ExtReal], &mut Scratch) + Sync) -> Vec<ExtReal> {
    let mut vals = vec![ExtReal::INFINITY; nx * ny];
    vals.par_chunks_mut(ny).enumerate().for_each_init(Scratch::default, |scratch, (ix, row)| fill(ix, row, scratch));
    vals
}

/// `c_A(x,y) = min{ c(x − x″, y − y″) : (x″, y″) ∈ A }` over grid nodes.
pub fn inf_convolve_blur(c: &SampledBivariate, spec: &BlurSpec) -> Result<SampledBivariate> {
    let (xg, yg) = (c.xgrid(), c.ygrid());
    spec.check_resolution(xg, yg)?;
    let ny = yg.len();
    let vals = match spec.kind {
        BlurKind::YBall => {
            let plan = BallPlan::new(yg, spec.eps);
            per_x_rows(ny, xg.len(), |ix, row, scratch| {
                apply_plan(yg, &plan, &c.vals()[ix * ny..(ix + 1) * ny], row, scratch)
            })
        }
        BlurKind::ProductBall { p } => {
            let shifts: Vec<([isize; 2], BallPlan)> = xg
                .ball_offsets(spec.eps)
                .into_iter()
                .map(|dx| (dx, BallPlan::new(yg, spec.y_radius(p, norm(&xg.offset_coord(dx))))))
                .collect();
            per_x_rows(ny, xg.len(), |ix, row, scratch| {
                let mut tmp = vec![ExtReal::INFINITY; ny];
                for (dx, plan) in &shifts {
                    let Some(src) = xg.offset(ix, [-dx[0], -dx[1]]) else { continue };
                    apply_plan(yg, plan, &c.vals()[src * ny..(src + 1) * ny], &mut tmp, scratch);
                    for (o, v) in row.iter_mut().zip(&tmp) {
                        *o = (*o).min(*v);
                    }
                }
            })
        }
    };
    SampledBivariate::new(xg.clone(), yg.clone(), vals)
}

/// `b_A(x,y) = φ(x) + min_{‖a‖≤ε} [φ*(y − a) + ⟨x, a⟩]`, evaluated as
/// `φ(x) + ⟨x,y⟩ + min_{ȳ ∈ B̄(y,ε)} [φ*(ȳ) − ⟨x,ȳ⟩]` with `ȳ` ranging over
/// y-nodes inside the box.
pub fn blurred_bipotential(pair: &ConjugatePair, spec: &BlurSpec) -> Result<SampledBivariate> {
    spec.require_y_ball("blurred_bipotential")?;
    let (xg, yg) = (pair.xgrid(), pair.ygrid());
    spec.check_resolution(xg, yg)?;
    let plan = BallPlan::new(yg, spec.eps);
    let (xs, ys) = (xg.coords(), yg.coords());
    let ny = ys.len();
    let vals = per_x_rows(ny, xs.len(), |ix, row, scratch| {
        let Some(px) = pair.phi().get(ix).value() else { return };
        let x = &xs[ix];
        let g: Vec<ExtReal> = pair.phistar().vals().iter().zip(&ys).map(|(v, y)| v.sub_real(dot(x, y))).collect();
        apply_plan(yg, &plan, &g, row, scratch);
        for (o, y) in row.iter_mut().zip(&ys) {
            *o = o.add_real(px + dot(x, y));
        }
    });
    SampledBivariate::new(xg.clone(), yg.clone(), vals)
}

/// `c_A(·, y)` for one y-node, by the same min-over-window route as
/// [`blurred_bipotential`].
pub fn blurred_sync_column(pair: &ConjugatePair, spec: &BlurSpec, iy: usize) -> Result<Vec<ExtReal>> {
    spec.require_y_ball("blurred_sync_column")?;
    spec.check_resolution(pair.xgrid(), pair.ygrid())?;
    let yg = pair.ygrid();
    let window: Vec<(usize, Point)> = yg
        .ball_offsets(spec.eps)
        .into_iter()
        .filter_map(|d| yg.offset(iy, d))
        .filter(|&j| pair.phistar().get(j).is_finite())
        .map(|j| (j, yg.coord(j)))
        .collect();
    Ok(pair
        .xgrid()
        .coords()
        .iter()
        .enumerate()
        .map(|(ix, x)| {
            let Some(px) = pair.phi().get(ix).value() else { return ExtReal::INFINITY };
            window
                .iter()
                .map(|(j, yb)| pair.phistar().get(*j).sub_real(dot(x, yb)))
                .min()
                .map_or(ExtReal::INFINITY, |m| m.add_real(px))
        })
        .collect())
}

/// `M(φ, ε) = M + A`: pairs `(x, y)` such that some y-node `ȳ` with
/// `‖ȳ − y‖ ≤ ε` has Fenchel–Young residual `φ(x) + φ*(ȳ) − ⟨x,ȳ⟩ ≤ tol`.
/// Built by stamping the ball around every residual-zero pair.
pub fn blurred_graph(pair: &ConjugatePair, spec: &BlurSpec, tol: f64) -> Result<GraphSet> {
    spec.require_y_ball("blurred_graph")?;
    let (xg, yg) = (pair.xgrid(), pair.ygrid());
    spec.check_resolution(xg, yg)?;
    let ball = yg.ball_offsets(spec.eps);
    let ys = yg.coords();
    let rows: Vec<Vec<usize>> = xg
        .coords()
        .par_iter()
        .enumerate()
        .map(|(ix, x)| {
            let mut hit = vec![false; ys.len()];
            for (iy, y) in ys.iter().enumerate() {
                if pair.residual(ix, iy, x, y).is_some_and(|r| r <= tol) {
                    for &d in &ball {
                        if let Some(j) = yg.offset(iy, d) {
                            hit[j] = true;
                        }
                    }
                }
            }
            hit.iter().enumerate().filter(|(_, &h)| h).map(|(j, _)| j).collect()
        })
        .collect();
    GraphSet::from_pairs(xg.clone(), yg.clone(), rows.into_iter().enumerate().flat_map(|(ix, r)| r.into_iter().map(move |iy| (ix, iy))))
}

/// Default residual tolerance for graph constructions: the product of the
/// coarsest x and y spacings, the natural unit of `⟨x,y⟩` on the grids.
pub fn default_graph_tol(xgrid: &Grid, ygrid: &Grid) -> f64 {
    xgrid.max_spacing() * ygrid.max_spacing()
}

/// `U(y) = ⋃_{‖ȳ−y‖≤ε} ∂φ*(ȳ)` on the nodes.
pub fn newc_union(pair: &ConjugatePair, eps: f64, at_y: usize, tol: f64) -> Vec<usize> {
    let yg = pair.ygrid();
    let mut hit = vec![false; pair.xgrid().len()];
    for d in yg.ball_offsets(eps) {
        if let Some(j) = yg.offset(at_y, d) {
            for i in subdiff_points(pair, j, tol) {
                hit[i] = true;
            }
        }
    }
    (0..hit.len()).filter(|&i| hit[i]).collect()
}

/// Condition (newc) at one y-node: `U(y)` must be a convex node set. Also
/// checks that `U(y)` equals the section `{x : c_A(x,y) ≤ tol}` of the
/// blurred graph within one node.
pub fn check_newc(pair: &ConjugatePair, eps: f64, at_y: usize, tol: f64) -> Result<CheckReport> {
    const NAME: &str = "check_newc";
    let spec = BlurSpec::y_ball(eps)?;
    spec.check_resolution(pair.xgrid(), pair.ygrid())?;
    let (xg, yg) = (pair.xgrid(), pair.ygrid());
    let y = yg.coord(at_y);
    let ycoord = &y[..yg.dim()];
    let union = newc_union(pair, eps, at_y, tol);
    let column = blurred_sync_column(pair, &spec, at_y)?;
    let section: Vec<usize> = (0..xg.len()).filter(|&i| column[i].value().is_some_and(|v| v <= tol)).collect();
    let as_graph = |s: &[usize]| GraphSet::from_pairs(xg.clone(), yg.clone(), s.iter().map(|&i| (i, at_y)));
    let mismatch = as_graph(&union)?.mismatch_beyond_one_node(&as_graph(&section)?)?;
    let annotate = |r: CheckReport| {
        r.with("y_index", at_y)
            .with("y", format!("{ycoord:?}"))
            .with("eps", eps)
            .with("tol", tol)
            .with("union_size", union.len())
            .with("section_identity", if mismatch.is_none() { "agree" } else { "disagree" })
    };
    if let Some((ix, _)) = mismatch {
        let w = Witness::new("union and blurred-graph section differ").node(ix, &xg.coord(ix)[..xg.dim()]).node(at_y, ycoord);
        return Ok(annotate(CheckReport::fail(NAME, "section-identity", w, None)));
    }
    if union.is_empty() {
        return Ok(annotate(CheckReport::pass(NAME)));
    }
    let inner = is_set_convex(&union, xg)?;
    if inner.passed() {
        return Ok(annotate(CheckReport::pass(NAME)));
    }
    let mut r = CheckReport::fail(NAME, inner.axiom.clone().unwrap_or_default(), inner.witness.clone().unwrap(), inner.residual);
    r.fields = inner.fields;
    Ok(annotate(r))
}

/// [`check_newc`] at every y-node, stopping at the first failure.
pub fn check_newc_everywhere(pair: &ConjugatePair, eps: f64, tol: f64) -> Result<CheckReport> {
    let found = (0..pair.ygrid().len()).into_par_iter().map(|iy| check_newc(pair, eps, iy, tol)).find_map_first(|r| match r {
        Ok(r) if r.passed() => None,
        other => Some(other),
    });
    match found {
        Some(r) => Ok(r?.renamed("check_newc_everywhere")),
        None => Ok(CheckReport::pass("check_newc_everywhere").with("y_nodes", pair.ygrid().len()).with("eps", eps).with("tol", tol)),
    }
}

pub enum BlurInput<'a> {
    Graph(&'a GraphSet),
    Sync(&'a SampledBivariate),
}

/// Whether `M` (or the zero set of `c`) admits the blurring `A`.
///
/// Graph form: `M + A` (nodewise Minkowski sum) must be a BB-graph; sums
/// leaving the box are dropped and flagged. Sync form: `c_A` must be a sync
/// and `{c_A ≤ zero_tol}` must equal `{c ≤ zero_tol} + A` within one node
/// per axis.
pub fn check_admits_blurring(input: BlurInput<'_>, spec: &BlurSpec, sync_tol: Tolerance, zero_tol: f64) -> Result<CheckReport> {
    const NAME: &str = "check_admits_blurring";
    match input {
        BlurInput::Graph(m) => {
            spec.check_resolution(m.xgrid(), m.ygrid())?;
            let (sum, clipped) = m.minkowski_sum(&spec.offsets(m.xgrid(), m.ygrid()));
            if clipped {
                log::warn!("M + A was clipped at the grid box; verdicts near the boundary are unreliable");
            }
            let mut r = check_bbgraph(&sum)?.renamed(NAME);
            r.push("form", "graph");
            r.push("blur", spec);
            r.push("clipped", clipped);
            Ok(r)
        }
        BlurInput::Sync(c) => {
            let c_a = inf_convolve_blur(c, spec)?;
            let sync = check_sync(&c_a, sync_tol)?;
            let zero = graph_of(&c.shifted_by_dot(1.0), zero_tol)?;
            let (expected, clipped) = zero.minkowski_sum(&spec.offsets(c.xgrid(), c.ygrid()));
            let blurred_zero = graph_of(&c_a.shifted_by_dot(1.0), zero_tol)?;
            let mismatch = blurred_zero.mismatch_beyond_one_node(&expected)?;
            let mut r = if sync.failed() {
                sync.renamed(NAME)
            } else if let Some((ix, iy)) = mismatch {
                let w = Witness::new("zero set of c_A differs from zero set of c plus A")
                    .node(ix, &c.xgrid().coord(ix)[..c.xgrid().dim()])
                    .node(iy, &c.ygrid().coord(iy)[..c.ygrid().dim()]);
                CheckReport::fail(NAME, "zero-set-identity", w, None)
            } else {
                CheckReport::pass(NAME)
            };
            r.push("form", "sync");
            r.push("blur", spec);
            r.push("clipped", clipped);
            r.push("zero_tol", zero_tol);
            r.push("sync_tol", sync_tol);
            Ok(r)
        }
    }
}

/// The blurred law of `φ` under a y-ball blur: `b_A` and `M + A`.
#[derive(Clone, Debug)]
pub struct BlurredLaw {
    pub pair: ConjugatePair,
    pub spec: BlurSpec,
    pub b_a: SampledBivariate,
    pub m_plus_a: GraphSet,
    pub graph_tol: f64,
}

impl BlurredLaw {
    pub fn new(pair: ConjugatePair, spec: BlurSpec, graph_tol: f64) -> Result<Self> {
        let b_a = blurred_bipotential(&pair, &spec)?;
        let m_plus_a = blurred_graph(&pair, &spec, graph_tol)?;
        Ok(BlurredLaw { pair, spec, b_a, m_plus_a, graph_tol })
    }

    /// `c_A = b_A − ⟨x,y⟩`.
    pub fn c_a(&self) -> SampledBivariate {
        self.b_a.shifted_by_dot(-1.0)
    }
}

/// Randomized search for a 1D convex function violating (newc): random
/// convex piecewise-linear-plus-quadratic `φ` on `[−2, 2]`, random `ε`,
/// (newc) tested at every y-node. Reports the first counterexample found.
pub fn explore_darboux(trials: usize, seed: u64, nodes: usize) -> Result<CheckReport> {
    const NAME: &str = "explore_darboux";
    let grid = Grid::line(-2.0, 2.0, nodes)?;
    let h = grid.max_spacing();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let pieces = rng.random_range(1..6);
        let lines: Vec<(f64, f64)> = (0..pieces).map(|_| (rng.random_range(-3.0..3.0), rng.random_range(-1.0..1.0))).collect();
        let curv = if rng.random_bool(0.5) { rng.random_range(0.0..2.0) } else { 0.0 };
        let half = rng.random_range(0.5..2.0);
        let phi = SampledFunction::from_fn(grid.clone(), |p| {
            if p[0].abs() > half {
                return f64::INFINITY;
            }
            let m = lines.iter().map(|(s, c)| s * p[0] + c).fold(f64::NEG_INFINITY, f64::max);
            m + 0.5 * curv * p[0] * p[0]
        })?;
        if !phi.has_domain() {
            continue;
        }
        let ygrid = Grid::line(-6.0, 6.0, nodes)?;
        let pair = ConjugatePair::from_phi(phi, &ygrid)?;
        let eps = rng.random_range(1.0..10.0) * ygrid.max_spacing();
        let tol = h * ygrid.max_spacing();
        let r = check_newc_everywhere(&pair, eps, tol)?;
        if r.failed() {
            return Ok(r.renamed(NAME).with("trial", trial).with("seed", seed).with("eps", eps));
        }
    }
    Ok(CheckReport::pass(NAME).with("trials", trials).with("seed", seed).with("nodes", nodes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipotential::{separable_pair, sync_from_bipotential};

    fn line(lo: f64, hi: f64, n: usize) -> Grid {
        Grid::line(lo, hi, n).unwrap()
    }

    fn quad_pair(n: usize) -> ConjugatePair {
        let g = line(-2.0, 2.0, n);
        let phi = SampledFunction::from_fn(g.clone(), |p| 0.5 * p[0] * p[0]).unwrap();
        ConjugatePair::from_phi(phi, &g).unwrap()
    }

    /// `φ(x) + min_a [φ*(y − a) + ⟨x,a⟩]` straight from the formula.
    fn bemi_bruteforce(pair: &ConjugatePair, eps: f64) -> SampledBivariate {
        let (xg, yg) = (pair.xgrid(), pair.ygrid());
        let ball = yg.ball_offsets(eps);
        SampledBivariate::from_fn(xg.clone(), yg.clone(), |x, y| {
            let ix = xg.nearest(&x[..xg.dim()]).unwrap();
            let iy = yg.nearest(&y[..yg.dim()]).unwrap();
            let mut best = f64::INFINITY;
            for &d in &ball {
                let Some(j) = yg.offset(iy, [-d[0], -d[1]]) else { continue };
                let a = yg.offset_coord(d);
                let v = pair.phistar().get(j).raw() + dot(&x, &a);
                best = best.min(v);
            }
            pair.phi().get(ix).raw() + best
        })
        .unwrap()
    }

    #[test]
    fn zero_radius_is_identity() {
        let pair = quad_pair(41);
        let c = sync_from_bipotential(&separable_pair(&pair));
        let spec = BlurSpec::y_ball(0.0).unwrap();
        assert_eq!(inf_convolve_blur(&c, &spec).unwrap(), c);
        let b = blurred_bipotential(&pair, &spec).unwrap();
        assert!(b.max_abs_diff(&separable_pair(&pair)).unwrap() < 1e-12);
    }

    #[test]
    fn below_resolution_is_an_error() {
        let pair = quad_pair(41);
        let c = sync_from_bipotential(&separable_pair(&pair));
        let spec = BlurSpec::y_ball(0.05).unwrap();
        assert!(matches!(inf_convolve_blur(&c, &spec), Err(Error::BelowResolution { .. })));
        assert!(BlurSpec::product_ball(0.5, 0.5).is_err());
    }

    #[test]
    fn bemi_formula_matches_window_route() {
        let pair = quad_pair(81);
        let spec = BlurSpec::y_ball(0.5).unwrap();
        let b = blurred_bipotential(&pair, &spec).unwrap();
        let brute = bemi_bruteforce(&pair, 0.5);
        assert!(b.max_abs_diff(&brute).unwrap() < 1e-12);
        let c_a = inf_convolve_blur(&sync_from_bipotential(&separable_pair(&pair)), &spec).unwrap();
        assert!(b.shifted_by_dot(-1.0).max_abs_diff(&c_a).unwrap() < 1e-9);
    }

    #[test]
    fn blurred_graph_matches_graph_of_blurred_bipotential() {
        let pair = quad_pair(81);
        let spec = BlurSpec::y_ball(0.5).unwrap();
        let tol = default_graph_tol(pair.xgrid(), pair.ygrid());
        let m = blurred_graph(&pair, &spec, tol).unwrap();
        let g = graph_of(&blurred_bipotential(&pair, &spec).unwrap(), tol).unwrap();
        assert_eq!(m.mismatch_beyond_one_node(&g).unwrap(), None);
        let h = pair.xgrid().max_spacing();
        for (ix, iy) in m.pairs() {
            let (x, y) = (pair.xgrid().coord(ix)[0], pair.ygrid().coord(iy)[0]);
            assert!((y - x).abs() <= 0.5 + h + 1e-9);
        }
    }

    #[test]
    fn product_ball_contains_y_ball_blur() {
        let pair = quad_pair(41);
        let c = sync_from_bipotential(&separable_pair(&pair));
        let yb = inf_convolve_blur(&c, &BlurSpec::y_ball(0.4).unwrap()).unwrap();
        let pb = inf_convolve_blur(&c, &BlurSpec::product_ball(0.4, 2.0).unwrap()).unwrap();
        for (a, b) in pb.vals().iter().zip(yb.vals()) {
            assert!(a <= b);
        }
        // brute-force over the realized offsets
        let spec = BlurSpec::product_ball(0.4, 2.0).unwrap();
        let offs = spec.offsets(c.xgrid(), c.ygrid());
        for ix in 0..c.xgrid().len() {
            for iy in 0..c.ygrid().len() {
                let mut best = ExtReal::INFINITY;
                for (dx, dy) in &offs {
                    if let (Some(jx), Some(jy)) = (c.xgrid().offset(ix, [-dx[0], -dx[1]]), c.ygrid().offset(iy, [-dy[0], -dy[1]])) {
                        best = best.min(c.get(jx, jy));
                    }
                }
                assert_eq!(best, pb.get(ix, iy));
            }
        }
    }

    #[test]
    fn newc_for_quadratic_and_abs() {
        let pair = quad_pair(81);
        let tol = default_graph_tol(pair.xgrid(), pair.ygrid());
        let r = check_newc(&pair, 0.5, 40, tol).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.field("section_identity"), Some("agree"));

        let g = line(-3.0, 3.0, 121);
        let phi = SampledFunction::from_fn(g.clone(), |p| p[0].abs()).unwrap();
        let pair = ConjugatePair::from_phi(phi, &g).unwrap();
        let at = g.nearest(&[0.0]).unwrap();
        let r = check_newc(&pair, 1.0, at, default_graph_tol(&g, &g)).unwrap();
        assert!(r.passed());
        assert_eq!(r.field("union_size"), Some("121"));
    }

    #[test]
    fn admits_blurring_monotone_in_eps() {
        let pair = quad_pair(41);
        let c = sync_from_bipotential(&separable_pair(&pair));
        let small = inf_convolve_blur(&c, &BlurSpec::y_ball(0.2).unwrap()).unwrap();
        let large = inf_convolve_blur(&c, &BlurSpec::y_ball(0.6).unwrap()).unwrap();
        assert!(large.vals().iter().zip(small.vals()).all(|(a, b)| a <= b));
        let tol = Tolerance::resolution(c.xgrid(), c.ygrid());
        let r = check_admits_blurring(BlurInput::Sync(&c), &BlurSpec::y_ball(0.4).unwrap(), tol, 1e-2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn darboux_search_runs() {
        let r = explore_darboux(3, 7, 61).unwrap();
        assert_eq!(r.check, "explore_darboux");
    }
}
