//! Bipotential convex covers: the family `b_a(x,y) = φ(x) + φ*(y−a) + ⟨x,a⟩`
//! over ball offsets `a`, implicit convexity, the pointwise infimum and the
//! equivalence between "b_A is a bipotential" and implicit convexity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bipotential::graph_of;
use crate::blur::{blurred_bipotential, blurred_graph, BlurSpec};
use crate::convexity::is_convex;
use crate::error::{invalid, Error, Result};
use crate::extreal::ExtReal;
use crate::graph::GraphSet;
use crate::grid::{dot, Grid, Point};
use crate::legendre::{conjugate, ConjugatePair, ROUNDOFF_REL_TOL};
use crate::report::{CheckReport, Witness};
use crate::sampled::{SampledBivariate, SampledFunction};

/// Pair scans above this many candidate pairs switch to local plus
/// stratified sampling.
pub const PAIR_SCAN_CAP: usize = 200_000;

/// One member's support: `(ȳ-node, y-node)` with `y = ȳ + a` on the grid and
/// `φ*(ȳ)` finite.
#[derive(Clone, Debug)]
struct Shift {
    offset: [isize; 2],
    a: Point,
    nodes: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct CoverFamily {
    pair: ConjugatePair,
    eps: f64,
    shifts: Vec<Shift>,
}

/// Members `b_a` for every y-node offset `a` with `‖a‖ ≤ eps`.
pub fn build_cover(pair: &ConjugatePair, eps: f64) -> Result<CoverFamily> {
    let spec = BlurSpec::y_ball(eps)?;
    spec.check_resolution(pair.xgrid(), pair.ygrid())?;
    let yg = pair.ygrid();
    let dom: Vec<usize> = (0..yg.len()).filter(|&j| pair.phistar().get(j).is_finite()).collect();
    let shifts = yg
        .ball_offsets(eps)
        .into_iter()
        .map(|d| Shift {
            offset: d,
            a: yg.offset_coord(d),
            nodes: dom.iter().filter_map(|&j| yg.offset(j, d).map(|y| (j, y))).collect(),
        })
        .collect();
    Ok(CoverFamily { pair: pair.clone(), eps, shifts })
}

impl CoverFamily {
    pub fn len(&self) -> usize {
        self.shifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn pair(&self) -> &ConjugatePair {
        &self.pair
    }

    pub fn xgrid(&self) -> &Grid {
        self.pair.xgrid()
    }

    pub fn ygrid(&self) -> &Grid {
        self.pair.ygrid()
    }

    /// Parameter points `a` in member order.
    pub fn lambda_nodes(&self) -> Vec<Point> {
        self.shifts.iter().map(|s| s.a).collect()
    }

    pub fn lambda_offsets(&self) -> Vec<[isize; 2]> {
        self.shifts.iter().map(|s| s.offset).collect()
    }

    /// `b_a` on the product grid; `+∞` where `y − a` leaves the box.
    pub fn member(&self, k: usize) -> SampledBivariate {
        let (xg, yg) = (self.xgrid(), self.ygrid());
        let ny = yg.len();
        let s = &self.shifts[k];
        let xs = xg.coords();
        let mut vals = vec![ExtReal::INFINITY; xg.len() * ny];
        for (ix, x) in xs.iter().enumerate() {
            let Some(px) = self.pair.phi().get(ix).value() else { continue };
            let xa = dot(x, &s.a);
            for &(j, iy) in &s.nodes {
                vals[ix * ny + iy] = ExtReal::finite(px + (self.pair.phistar().get(j).raw() + xa));
            }
        }
        SampledBivariate::new(xg.clone(), yg.clone(), vals).expect("member shares the pair's grids")
    }

    /// `M(b_a)`: pairs with `b_a(x,y) − ⟨x,y⟩ ≤ tol`.
    pub fn member_graph(&self, k: usize, tol: f64) -> GraphSet {
        let mut m = GraphSet::empty(self.xgrid().clone(), self.ygrid().clone()).expect("pair grids agree");
        self.stamp_member(k, tol, |ix, iy| m.insert(ix, iy));
        m
    }

    fn stamp_member(&self, k: usize, tol: f64, mut put: impl FnMut(usize, usize)) {
        let (xs, ys) = (self.xgrid().coords(), self.ygrid().coords());
        let s = &self.shifts[k];
        for (ix, x) in xs.iter().enumerate() {
            let Some(px) = self.pair.phi().get(ix).value() else { continue };
            let xa = dot(x, &s.a);
            for &(j, iy) in &s.nodes {
                let b = px + (self.pair.phistar().get(j).raw() + xa);
                if b - dot(x, &ys[iy]) <= tol {
                    put(ix, iy);
                }
            }
        }
    }

    /// `⋃_a M(b_a)`, each member evaluated separately.
    pub fn union_of_member_graphs(&self, tol: f64) -> GraphSet {
        let (xg, yg) = (self.xgrid(), self.ygrid());
        let (xs, ys) = (xg.coords(), yg.coords());
        let ny = ys.len();
        let rows: Vec<Vec<bool>> = xs
            .par_iter()
            .enumerate()
            .map(|(ix, x)| {
                let mut row = vec![false; ny];
                let Some(px) = self.pair.phi().get(ix).value() else { return row };
                for s in &self.shifts {
                    let xa = dot(x, &s.a);
                    for &(j, iy) in &s.nodes {
                        let b = px + (self.pair.phistar().get(j).raw() + xa);
                        if b - dot(x, &ys[iy]) <= tol {
                            row[iy] = true;
                        }
                    }
                }
                row
            })
            .collect();
        let pairs = rows.iter().enumerate().flat_map(|(ix, r)| r.iter().enumerate().filter(|(_, &h)| h).map(move |(iy, _)| (ix, iy)));
        GraphSet::from_pairs(xg.clone(), yg.clone(), pairs).expect("indices come from the grids")
    }
}

/// Pointwise minimum over the members.
pub fn infimum_bipotential(family: &CoverFamily) -> Result<SampledBivariate> {
    if family.is_empty() {
        return invalid("infimum of an empty cover family");
    }
    let (xg, yg) = (family.xgrid(), family.ygrid());
    let xs = xg.coords();
    let ny = yg.len();
    let mut vals = vec![ExtReal::INFINITY; xg.len() * ny];
    vals.par_chunks_mut(ny).enumerate().for_each(|(ix, row)| {
        let Some(px) = family.pair.phi().get(ix).value() else { return };
        let x = &xs[ix];
        for s in &family.shifts {
            let xa = dot(x, &s.a);
            for &(j, iy) in &s.nodes {
                let v = ExtReal::finite(px + (family.pair.phistar().get(j).raw() + xa));
                row[iy] = row[iy].min(v);
            }
        }
    });
    SampledBivariate::new(xg.clone(), yg.clone(), vals)
}

/// Reindexes the members: member `k` of the result is member `perm[k]` of
/// `family`.
pub fn reparameterize(family: &CoverFamily, perm: &[usize]) -> Result<CoverFamily> {
    let n = family.len();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return invalid(format!("reindexing map is not a bijection on {n} parameters"));
    }
    let shifts = perm.iter().map(|&p| family.shifts[p].clone()).collect();
    Ok(CoverFamily { pair: family.pair.clone(), eps: family.eps, shifts })
}

/// A finite family `f(λ, z)` over a z-grid.
pub trait IndexedFamily: Sync {
    fn zgrid(&self) -> &Grid;

    fn lambda_count(&self) -> usize;

    fn value(&self, lambda: usize, z: usize) -> ExtReal;

    /// Coordinates of parameter `lambda`, for witnesses.
    fn lambda_coord(&self, lambda: usize) -> Vec<f64> {
        vec![lambda as f64]
    }

    /// `min_λ f(λ, z)` at every z-node.
    fn lower_envelope(&self) -> Vec<ExtReal> {
        (0..self.zgrid().len())
            .map(|z| (0..self.lambda_count()).map(|l| self.value(l, z)).min().unwrap_or(ExtReal::INFINITY))
            .collect()
    }

    fn argmin(&self, z: usize) -> usize {
        (0..self.lambda_count()).min_by_key(|&l| self.value(l, z)).unwrap_or(0)
    }
}

/// A family given by explicit tables `values[λ][z]`.
pub struct TableFamily {
    zgrid: Grid,
    values: Vec<Vec<ExtReal>>,
}

impl TableFamily {
    pub fn new(zgrid: Grid, values: Vec<Vec<ExtReal>>) -> Result<Self> {
        if values.is_empty() || values.iter().any(|v| v.len() != zgrid.len()) {
            return invalid("every parameter needs one value per z-node");
        }
        Ok(TableFamily { zgrid, values })
    }
}

impl IndexedFamily for TableFamily {
    fn zgrid(&self) -> &Grid {
        &self.zgrid
    }

    fn lambda_count(&self) -> usize {
        self.values.len()
    }

    fn value(&self, lambda: usize, z: usize) -> ExtReal {
        self.values[lambda][z]
    }
}

/// `f(a, ·, y) = b_a(·, y)` over the x-grid at a fixed y-node.
pub struct CoverAtY<'a> {
    family: &'a CoverFamily,
    iy: usize,
}

impl<'a> CoverAtY<'a> {
    pub fn new(family: &'a CoverFamily, iy: usize) -> Self {
        CoverAtY { family, iy }
    }
}

impl IndexedFamily for CoverAtY<'_> {
    fn zgrid(&self) -> &Grid {
        self.family.xgrid()
    }

    fn lambda_count(&self) -> usize {
        self.family.len()
    }

    fn value(&self, lambda: usize, z: usize) -> ExtReal {
        let f = self.family;
        let yg = f.ygrid();
        let s = &f.shifts[lambda];
        let Some(j) = yg.offset(self.iy, [-s.offset[0], -s.offset[1]]) else { return ExtReal::INFINITY };
        let x = f.xgrid().coord(z);
        f.pair.phi().get(z) + f.pair.phistar().get(j).add_real(dot(&x, &s.a))
    }

    fn lambda_coord(&self, lambda: usize) -> Vec<f64> {
        let a = self.family.shifts[lambda].a;
        a[..self.family.ygrid().dim()].to_vec()
    }

    /// `min_a b_a(x, y) = φ(x) + ⟨x,y⟩ − (φ* + χ_{B̄(y,ε)})*(x)`, one
    /// restricted conjugation instead of a scan over the members.
    fn lower_envelope(&self) -> Vec<ExtReal> {
        let f = self.family;
        let (xg, yg) = (f.xgrid(), f.ygrid());
        let mut window = vec![ExtReal::INFINITY; yg.len()];
        for s in &f.shifts {
            if let Some(j) = yg.offset(self.iy, [-s.offset[0], -s.offset[1]]) {
                window[j] = f.pair.phistar().get(j);
            }
        }
        let restricted = SampledFunction::new(yg.clone(), window).expect("window lives on the y-grid");
        if !restricted.has_domain() {
            return vec![ExtReal::INFINITY; xg.len()];
        }
        let support = conjugate(&restricted, xg).expect("nonempty restricted domain");
        let y = yg.coord(self.iy);
        (0..xg.len())
            .map(|ix| match (f.pair.phi().get(ix).value(), support.get(ix).value()) {
                (Some(p), Some(s)) => ExtReal::finite(p + dot(&xg.coord(ix), &y) - s),
                _ => ExtReal::INFINITY,
            })
            .collect()
    }
}

/// `f(a, x, ·) = b_a(x, ·)` over the y-grid at a fixed x-node.
pub struct CoverAtX<'a> {
    family: &'a CoverFamily,
    ix: usize,
}

impl<'a> CoverAtX<'a> {
    pub fn new(family: &'a CoverFamily, ix: usize) -> Self {
        CoverAtX { family, ix }
    }
}

impl IndexedFamily for CoverAtX<'_> {
    fn zgrid(&self) -> &Grid {
        self.family.ygrid()
    }

    fn lambda_count(&self) -> usize {
        self.family.len()
    }

    fn value(&self, lambda: usize, z: usize) -> ExtReal {
        let f = self.family;
        let s = &f.shifts[lambda];
        let Some(j) = f.ygrid().offset(z, [-s.offset[0], -s.offset[1]]) else { return ExtReal::INFINITY };
        let x = f.xgrid().coord(self.ix);
        f.pair.phi().get(self.ix) + f.pair.phistar().get(j).add_real(dot(&x, &s.a))
    }

    fn lambda_coord(&self, lambda: usize) -> Vec<f64> {
        let a = self.family.shifts[lambda].a;
        a[..self.family.ygrid().dim()].to_vec()
    }
}

/// Implicit convexity: for node pairs `z1, z2` with finite values and every
/// `α` whose combination `α z1 + (1−α) z2` is a grid node, some `λ` must
/// satisfy `f(λ, mid) ≤ α f(λ1, z1) + (1−α) f(λ2, z2) + tol` for all `λ1, λ2`.
///
/// The hardest `λ1, λ2` are the minimizers at `z1, z2`, and the best `λ` is
/// the minimizer at `mid`, so the test runs on the lower envelope
/// `min_λ f(λ, ·)`. Up to [`PAIR_SCAN_CAP`] candidate pairs are scanned
/// exhaustively; beyond that every pair at index gap 2 along the axes and
/// diagonals is scanned, plus every `stride`-th pair in lexicographic order
/// from a seeded offset.
pub fn check_implicitly_convex(f: &dyn IndexedFamily, alphas: &[f64], tol: f64, seed: u64) -> Result<CheckReport> {
    const NAME: &str = "check_implicitly_convex";
    if !alphas.contains(&0.5) {
        return invalid("alpha set must include 0.5");
    }
    if alphas.iter().any(|a| !(0.0..=1.0).contains(a)) {
        return invalid("alphas must lie in [0, 1]");
    }
    if !(tol >= 0.0) {
        return invalid(format!("tolerance must be nonnegative, got {tol}"));
    }
    let grid = f.zgrid();
    let env = f.lower_envelope();
    let finite: Vec<usize> = (0..env.len()).filter(|&i| env[i].is_finite()).collect();
    let mut alphas: Vec<f64> = alphas.iter().copied().filter(|&a| a > 0.0 && a < 1.0).collect();
    for a in alphas.clone() {
        if !alphas.iter().any(|&b| (b - (1.0 - a)).abs() < 1e-12) {
            alphas.push(1.0 - a);
        }
    }
    let alpha_list = alphas.iter().map(f64::to_string).collect::<Vec<_>>().join(";");
    let base = |r: CheckReport| r.with("alphas", &alpha_list).with("tol", tol).with("cap", PAIR_SCAN_CAP).with("seed", seed);
    if finite.len() < 2 {
        return Ok(base(CheckReport::pass(NAME)).with("pairs_tested", 0).with("mode", "vacuous"));
    }
    let multi = |i: usize| {
        let m = grid.multi(i);
        [m[0] as f64, m[1] as f64]
    };
    let midpoint = |i: usize, j: usize, a: f64| -> Option<usize> {
        let (p, q) = (multi(i), multi(j));
        let mut out = [0usize; 2];
        for k in 0..2 {
            let t = a * p[k] + (1.0 - a) * q[k];
            let r = t.round();
            if (t - r).abs() > 1e-9 {
                return None;
            }
            out[k] = r as usize;
        }
        Some(grid.index(out))
    };
    let mut tested = 0usize;
    let mut test = |i: usize, j: usize| -> Option<(usize, usize, usize, f64, f64)> {
        for &a in &alphas {
            let Some(m) = midpoint(i, j, a) else { continue };
            if m == i || m == j {
                continue;
            }
            tested += 1;
            let bound = a * env[i].raw() + (1.0 - a) * env[j].raw();
            let gap = env[m].raw() - bound;
            if gap > tol {
                return Some((i, j, m, a, gap));
            }
        }
        None
    };
    let total = finite.len() * (finite.len() - 1) / 2;
    let (found, mode, stride) = if total <= PAIR_SCAN_CAP {
        let hit = (0..finite.len()).find_map(|p| ((p + 1)..finite.len()).find_map(|q| test(finite[p], finite[q])));
        (hit, "exhaustive", 1usize)
    } else {
        let dirs: &[[isize; 2]] = if grid.dim() == 2 { &[[1, 0], [0, 1], [1, 1], [1, -1]] } else { &[[1, 0]] };
        let mut hit = finite.iter().find_map(|&i| {
            dirs.iter().find_map(|d| {
                let j = grid.offset(i, [2 * d[0], 2 * d[1]])?;
                env[j].is_finite().then_some(())?;
                test(i, j)
            })
        });
        let stride = total.div_ceil(PAIR_SCAN_CAP);
        if hit.is_none() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut g = rng.random_range(0..stride);
            let (mut p, mut row_start) = (0usize, 0usize);
            while g < total && hit.is_none() {
                let mut row_len = finite.len() - 1 - p;
                while g >= row_start + row_len {
                    row_start += row_len;
                    p += 1;
                    row_len = finite.len() - 1 - p;
                }
                let q = p + 1 + (g - row_start);
                hit = test(finite[p], finite[q]);
                g += stride;
            }
        }
        (hit, "sampled", stride)
    };
    let report = |r: CheckReport| base(r).with("mode", mode).with("stride", stride).with("pairs_tested", tested).with("candidate_pairs", total);
    match found {
        None if tested == 0 => Err(Error::GridTooCoarse),
        None => Ok(report(CheckReport::pass(NAME))),
        Some((i, j, m, a, gap)) => {
            let coord = |n: usize| grid.coord(n)[..grid.dim()].to_vec();
            let (l1, l2, lm) = (f.argmin(i), f.argmin(j), f.argmin(m));
            let w = Witness::new("no parameter minorizes the combination at the midpoint")
                .node(i, &coord(i))
                .node(j, &coord(j))
                .node(m, &coord(m));
            Ok(report(CheckReport::fail(NAME, "implicit-convexity", w, Some(gap)))
                .with("alpha", a)
                .with("lambda1", format!("{:?}", f.lambda_coord(l1)))
                .with("lambda2", format!("{:?}", f.lambda_coord(l2)))
                .with("lambda_mid", format!("{:?}", f.lambda_coord(lm))))
        }
    }
}

/// Tolerances for [`check_maithm_equivalence`].
#[derive(Clone, Copy, Debug)]
pub struct MaithmOptions {
    /// Residual tolerance for graph membership.
    pub graph_tol: f64,
    pub seed: u64,
}

/// Compares, per y-node, convexity of the slice `b_A(·, y)` with implicit
/// convexity of `f(·, ·, y)`, and globally the verdict "b_A is a
/// bipotential with graph M + A" (slice convexity at every y plus equality
/// of `graph_of(b_A)` and the blurred graph) with "f(·,·,y) is implicitly
/// convex at every y". Passes iff the two global verdicts agree.
pub fn check_maithm_equivalence(pair: &ConjugatePair, eps: f64, opts: MaithmOptions) -> Result<CheckReport> {
    const NAME: &str = "check_maithm_equivalence";
    let spec = BlurSpec::y_ball(eps)?;
    let family = build_cover(pair, eps)?;
    let b_a = blurred_bipotential(pair, &spec)?;
    let graph_equal = graph_of(&b_a, opts.graph_tol)?
        .mismatch_beyond_one_node(&blurred_graph(pair, &spec, opts.graph_tol)?)?
        .is_none();
    let ny = pair.ygrid().len();
    let verdicts: Vec<(bool, bool)> = (0..ny)
        .into_par_iter()
        .map(|iy| -> Result<(bool, bool)> {
            let slice = b_a.y_slice(iy);
            let noise = ROUNDOFF_REL_TOL * (1.0 + slice.scale());
            let v1 = !slice.has_domain() || is_convex(&slice, noise)?.passed();
            let v2 = match check_implicitly_convex(&CoverAtY::new(&family, iy), &[0.5], 0.5 * noise, opts.seed) {
                Ok(r) => r.passed(),
                Err(Error::GridTooCoarse) => true,
                Err(e) => return Err(e),
            };
            Ok((v1, v2))
        })
        .collect::<Result<_>>()?;
    let verdict1 = graph_equal && verdicts.iter().all(|v| v.0);
    let verdict2 = verdicts.iter().all(|v| v.1);
    let disagree: Vec<usize> = (0..ny).filter(|&iy| verdicts[iy].0 != verdicts[iy].1).collect();
    let first = |pick: fn(&(bool, bool)) -> bool| verdicts.iter().position(|v| !pick(v)).map_or("none".to_string(), |i| i.to_string());
    let pass_str = |b: bool| if b { "pass" } else { "fail" };
    let mut r = if verdict1 == verdict2 {
        CheckReport::pass(NAME)
    } else {
        let iy = disagree.first().copied().unwrap_or(0);
        let w = Witness::new("slice verdicts disagree").node(iy, &pair.ygrid().coord(iy)[..pair.ygrid().dim()]);
        CheckReport::fail(NAME, "equivalence", w, None)
    };
    r.push("bipotential_verdict", pass_str(verdict1));
    r.push("implicit_verdict", pass_str(verdict2));
    r.push("graph_equality", graph_equal);
    r.push("first_nonconvex_slice", first(|v| v.0));
    r.push("first_implicit_failure", first(|v| v.1));
    r.push("slice_disagreements", disagree.len());
    r.push("members", family.len());
    r.push("eps", eps);
    r.push("graph_tol", opts.graph_tol);
    r.push("seed", opts.seed);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipotential::{check_bipotential, separable_pair, Tolerance};

    fn quad_pair(n: usize) -> ConjugatePair {
        let g = Grid::line(-2.0, 2.0, n).unwrap();
        let phi = SampledFunction::from_fn(g.clone(), |p| 0.5 * p[0] * p[0]).unwrap();
        ConjugatePair::from_phi(phi, &g).unwrap()
    }

    #[test]
    fn zero_offset_member_is_separable() {
        let pair = quad_pair(41);
        let fam = build_cover(&pair, 0.3).unwrap();
        let k = fam.lambda_offsets().iter().position(|d| *d == [0, 0]).unwrap();
        assert_eq!(fam.member(k).max_abs_diff(&separable_pair(&pair)), Some(0.0));
        let single = build_cover(&pair, 0.0).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(infimum_bipotential(&single).unwrap(), single.member(0));
    }

    #[test]
    fn members_are_bipotentials_with_shifted_graphs() {
        let pair = quad_pair(41);
        let fam = build_cover(&pair, 0.3).unwrap();
        let g = pair.xgrid();
        for k in 0..fam.len() {
            assert!(check_bipotential(&fam.member(k), Tolerance::resolution(g, g)).unwrap().passed());
            let a = fam.lambda_nodes()[k][0];
            for (ix, iy) in fam.member_graph(k, 1e-9).pairs() {
                assert!((g.coord(iy)[0] - g.coord(ix)[0] - a).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn infimum_matches_blurred_bipotential() {
        let pair = quad_pair(81);
        let fam = build_cover(&pair, 0.5).unwrap();
        let inf = infimum_bipotential(&fam).unwrap();
        let b_a = blurred_bipotential(&pair, &BlurSpec::y_ball(0.5).unwrap()).unwrap();
        assert!(inf.max_abs_diff(&b_a).unwrap() < 1e-9);
        let rev: Vec<usize> = (0..fam.len()).rev().collect();
        assert_eq!(infimum_bipotential(&reparameterize(&fam, &rev).unwrap()).unwrap(), inf);
        assert!(reparameterize(&fam, &[0, 0]).is_err());
    }

    #[test]
    fn union_of_member_graphs_is_blurred_graph() {
        let pair = quad_pair(81);
        let fam = build_cover(&pair, 0.5).unwrap();
        let tol = 1e-3;
        let m = blurred_graph(&pair, &BlurSpec::y_ball(0.5).unwrap(), tol).unwrap();
        assert_eq!(fam.union_of_member_graphs(tol).mismatch_beyond_one_node(&m).unwrap(), None);
    }

    #[test]
    fn implicit_convexity_examples() {
        let g = Grid::line(-1.0, 1.0, 21).unwrap();
        let table = |f: &dyn Fn(usize, f64) -> f64, lambdas: usize| {
            let vals = (0..lambdas).map(|l| (0..g.len()).map(|i| ExtReal::finite(f(l, g.coord(i)[0]))).collect()).collect();
            TableFamily::new(g.clone(), vals).unwrap()
        };
        let uniform = table(&|l, z| z * z + l as f64, 2);
        assert!(check_implicitly_convex(&uniform, &[0.5], 0.0, 1).unwrap().passed());
        let flat = table(&|_, z| z.abs(), 3);
        assert!(check_implicitly_convex(&flat, &[0.5], 1e-12, 1).unwrap().passed());
        let bumps = table(&|l, z| if l == 0 { (z - 1.0).powi(2) } else { (z + 1.0).powi(2) }, 2);
        let r = check_implicitly_convex(&bumps, &[0.5], 1e-12, 1).unwrap();
        assert!(r.failed());
        assert!(r.residual.unwrap() > 0.0);
        let coarse = Grid::line(0.0, 1.0, 2).unwrap();
        let two = TableFamily::new(coarse, vec![vec![ExtReal::ZERO; 2]]).unwrap();
        assert!(matches!(check_implicitly_convex(&two, &[0.5], 0.0, 1), Err(Error::GridTooCoarse)));
        assert!(check_implicitly_convex(&flat, &[0.3], 0.0, 1).is_err());
    }

    #[test]
    fn restricted_conjugate_envelope_matches_scan() {
        let pair = quad_pair(41);
        let fam = build_cover(&pair, 0.3).unwrap();
        for iy in [0, 7, 20, 40] {
            let f = CoverAtY::new(&fam, iy);
            let fast = f.lower_envelope();
            let brute: Vec<ExtReal> = (0..fam.xgrid().len()).map(|z| (0..fam.len()).map(|l| f.value(l, z)).min().unwrap()).collect();
            for (a, b) in fast.iter().zip(&brute) {
                assert!((a.raw() - b.raw()).abs() < 1e-9, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn maithm_on_quadratic_and_indicator() {
        let pair = quad_pair(81);
        let opts = MaithmOptions { graph_tol: 1e-3, seed: 3 };
        let r = check_maithm_equivalence(&pair, 0.5, opts).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.field("bipotential_verdict"), Some("pass"));
        assert_eq!(r.field("implicit_verdict"), Some("pass"));

        let g = Grid::line(-2.0, 2.0, 81).unwrap();
        let phi = SampledFunction::from_fn(g.clone(), |p| if p[0].abs() <= 1.0 + 1e-12 { 0.0 } else { f64::INFINITY }).unwrap();
        let pair = ConjugatePair::from_phi(phi, &g).unwrap();
        let r = check_maithm_equivalence(&pair, 0.5, opts).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
