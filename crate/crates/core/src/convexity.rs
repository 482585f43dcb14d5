//! Discrete convexity of sampled functions and of node sets.

use crate::error::{invalid, Result};
use crate::grid::{Grid, Point};
use crate::report::{CheckReport, Witness};
use crate::sampled::SampledFunction;

/// Index-space directions tested in 2D: rows, columns and both diagonals.
const DIRECTIONS_2D: [(&str, [isize; 2]); 4] =
    [("axis-1", [0, 1]), ("axis-0", [1, 0]), ("diagonal", [1, 1]), ("anti-diagonal", [1, -1])];

/// Calls `visit` with every grid line (node indices in order) along the
/// tested directions; stops early when `visit` returns `Some`.
pub(crate) fn for_each_line<T>(grid: &Grid, mut visit: impl FnMut(&str, &[usize]) -> Option<T>) -> Option<T> {
    let [n0, n1] = grid.shape();
    if grid.dim() == 1 {
        let line: Vec<usize> = (0..n0).collect();
        return visit("axis-0", &line);
    }
    let mut line = Vec::with_capacity(n0.max(n1));
    for (name, d) in DIRECTIONS_2D {
        let starts: Vec<[usize; 2]> = match d {
            [0, 1] => (0..n0).map(|i| [i, 0]).collect(),
            [1, 0] => (0..n1).map(|j| [0, j]).collect(),
            [1, 1] => (0..n0).rev().map(|i| [i, 0]).chain((1..n1).map(|j| [0, j])).collect(),
            _ => (0..n1).map(|j| [0, j]).chain((1..n0).map(|i| [i, n1 - 1])).collect(),
        };
        for s in starts {
            line.clear();
            let (mut i, mut j) = (s[0] as isize, s[1] as isize);
            while i >= 0 && j >= 0 && (i as usize) < n0 && (j as usize) < n1 {
                line.push(i as usize * n1 + j as usize);
                i += d[0];
                j += d[1];
            }
            if let Some(t) = visit(name, &line) {
                return Some(t);
            }
        }
    }
    None
}

/// Discrete convexity: along every tested line the finite values occupy a
/// contiguous run and every second difference over that run is `≥ -tol`.
pub fn is_convex(f: &SampledFunction, tol: f64) -> Result<CheckReport> {
    let grid = f.grid();
    if !(tol >= 0.0) {
        return invalid(format!("tolerance must be nonnegative, got {tol}"));
    }
    if grid.axes().iter().any(|a| a.len() < 3) {
        return invalid("convexity needs at least 3 nodes per axis");
    }
    let vals = f.vals();
    let node = |i: usize| grid.coord(i)[..grid.dim()].to_vec();
    let failure = for_each_line(grid, |dir, line| {
        let first = line.iter().position(|&i| vals[i].is_finite())?;
        let last = line.iter().rposition(|&i| vals[i].is_finite())?;
        let run = &line[first..=last];
        if let Some(gap) = run.iter().position(|&i| vals[i].is_infinite()) {
            let next = gap + run[gap..].iter().position(|&i| vals[i].is_finite()).unwrap_or(0);
            let w = Witness::new("domain gap")
                .node(run[gap - 1], &node(run[gap - 1]))
                .node(run[gap], &node(run[gap]))
                .node(run[next], &node(run[next]));
            return Some(CheckReport::fail("is_convex", "domain-contiguity", w, None).with("direction", dir));
        }
        run.windows(3).find_map(|t| {
            let (a, b, c) = (vals[t[0]].raw(), vals[t[1]].raw(), vals[t[2]].raw());
            let second = a - 2.0 * b + c;
            (second < -tol).then(|| {
                let w = Witness::new("second-difference triple")
                    .node(t[0], &node(t[0]))
                    .node(t[1], &node(t[1]))
                    .node(t[2], &node(t[2]));
                CheckReport::fail("is_convex", "second-difference", w, Some(second)).with("direction", dir)
            })
        })
    });
    Ok(failure.unwrap_or_else(|| CheckReport::pass("is_convex")).with("tol", tol))
}

/// Convex hull of lattice points (monotone chain), counter-clockwise,
/// collinear points dropped. Exact on integer coordinates.
pub fn lattice_hull(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: [i64; 2], a: [i64; 2], b: [i64; 2]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut hull: Vec<[i64; 2]> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Convexity of a node set. In 1D the indices must be contiguous. In 2D
/// every node lying inside the convex hull of the members at distance more
/// than `h/2` from its boundary must be a member; when the members are
/// collinear, every lattice node on their segment must be a member.
pub fn is_set_convex(points: &[usize], grid: &Grid) -> Result<CheckReport> {
    if points.is_empty() {
        return invalid("set convexity of an empty node set");
    }
    if let Some(&bad) = points.iter().find(|&&i| i >= grid.len()) {
        return invalid(format!("node index {bad} outside grid of {} nodes", grid.len()));
    }
    let coord = |i: usize| grid.coord(i)[..grid.dim()].to_vec();
    if grid.dim() == 1 {
        let mut idx = points.to_vec();
        idx.sort_unstable();
        idx.dedup();
        for w in idx.windows(2) {
            if w[1] != w[0] + 1 {
                let missing = w[0] + 1;
                let wit = Witness::new("missing node between members").node(missing, &coord(missing));
                return Ok(CheckReport::fail("is_set_convex", "contiguity", wit, None)
                    .with("members", idx.len()));
            }
        }
        return Ok(CheckReport::pass("is_set_convex").with("members", idx.len()));
    }

    let [n0, n1] = grid.shape();
    let mut member = vec![false; grid.len()];
    let mut lattice = Vec::with_capacity(points.len());
    for &i in points {
        if !member[i] {
            member[i] = true;
            let m = grid.multi(i);
            lattice.push([m[0] as i64, m[1] as i64]);
        }
    }
    let count = lattice.len();
    let hull = lattice_hull(&lattice);
    let missing_report = |i: usize, residual: Option<f64>| {
        let wit = Witness::new("missing hull-interior node").node(i, &coord(i));
        CheckReport::fail("is_set_convex", "hull-interior", wit, residual)
            .with("members", count)
            .with("hull_vertices", hull.len())
    };

    if hull.len() <= 2 {
        let (p, q) = (hull[0], *hull.last().unwrap());
        let d = [q[0] - p[0], q[1] - p[1]];
        let g = gcd(d[0], d[1]).max(1);
        for k in 0..=g {
            let i = ((p[0] + k * d[0] / g) as usize) * n1 + (p[1] + k * d[1] / g) as usize;
            if !member[i] {
                return Ok(missing_report(i, None));
            }
        }
        return Ok(CheckReport::pass("is_set_convex").with("members", count).with("hull_vertices", hull.len()));
    }

    let hs = grid.spacing();
    let margin = 0.5 * grid.max_spacing();
    let to_pt = |v: [i64; 2]| -> Point { [v[0] as f64 * hs[0], v[1] as f64 * hs[1]] };
    // Inward half-planes n·p ≥ c + margin for the CCW hull.
    let planes: Vec<(Point, f64)> = (0..hull.len())
        .map(|k| {
            let a = to_pt(hull[k]);
            let b = to_pt(hull[(k + 1) % hull.len()]);
            let e = [b[0] - a[0], b[1] - a[1]];
            let len = e[0].hypot(e[1]);
            let n = [-e[1] / len, e[0] / len];
            (n, n[0] * a[0] + n[1] * a[1])
        })
        .collect();
    let depth = |p: Point| planes.iter().map(|(n, c)| n[0] * p[0] + n[1] * p[1] - c).fold(f64::INFINITY, f64::min);
    let lo0 = hull.iter().map(|v| v[0]).min().unwrap().max(0) as usize;
    let hi0 = (hull.iter().map(|v| v[0]).max().unwrap() as usize).min(n0 - 1);
    for i0 in lo0..=hi0 {
        let p0 = i0 as f64 * hs[0];
        // Interval of axis-1 coordinates satisfying every shrunken half-plane.
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (n, c) in &planes {
            let rhs = c + margin - n[0] * p0;
            if n[1] > 0.0 {
                lo = lo.max(rhs / n[1]);
            } else if n[1] < 0.0 {
                hi = hi.min(rhs / n[1]);
            } else if rhs > 0.0 {
                lo = f64::INFINITY;
            }
        }
        if !(lo <= hi) {
            continue;
        }
        let j_lo = ((lo / hs[1]).floor().max(0.0)) as usize;
        let j_hi = ((hi / hs[1]).ceil().min((n1 - 1) as f64)) as usize;
        for i1 in j_lo..=j_hi {
            let i = i0 * n1 + i1;
            if member[i] {
                continue;
            }
            let d = depth([p0, i1 as f64 * hs[1]]);
            if d > margin {
                return Ok(missing_report(i, Some(d)));
            }
        }
    }
    Ok(CheckReport::pass("is_set_convex").with("members", count).with("hull_vertices", hull.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extreal::ExtReal;

    fn line101() -> Grid {
        Grid::line(-2.0, 2.0, 101).unwrap()
    }

    #[test]
    fn quadratic_is_convex() {
        let f = SampledFunction::from_fn(line101(), |p| p[0] * p[0]).unwrap();
        assert!(is_convex(&f, 1e-12).unwrap().passed());
    }

    #[test]
    fn concave_fails_with_second_difference_witness() {
        let g = line101();
        let h = g.axis(0).h();
        let f = SampledFunction::from_fn(g, |p| -p[0] * p[0]).unwrap();
        let r = is_convex(&f, 1e-12).unwrap();
        assert!(r.failed());
        assert_eq!(r.axiom.as_deref(), Some("second-difference"));
        assert_eq!(r.witness.as_ref().unwrap().indices, vec![0, 1, 2]);
        assert!((r.residual.unwrap() + 2.0 * h * h).abs() < 1e-12);
    }

    #[test]
    fn indicator_of_interval_is_convex() {
        let f = SampledFunction::from_fn(line101(), |p| if p[0].abs() <= 1.0 + 1e-12 { 0.0 } else { f64::INFINITY })
            .unwrap();
        assert!(is_convex(&f, 1e-12).unwrap().passed());
    }

    #[test]
    fn domain_gap_fails() {
        let g = Grid::line(0.0, 1.0, 5).unwrap();
        let v = vec![ExtReal::ZERO, ExtReal::ZERO, ExtReal::INFINITY, ExtReal::ZERO, ExtReal::INFINITY];
        let r = is_convex(&SampledFunction::new(g, v).unwrap(), 0.0).unwrap();
        assert_eq!(r.axiom.as_deref(), Some("domain-contiguity"));
        assert_eq!(r.witness.unwrap().indices[1], 2);
    }

    #[test]
    fn too_few_nodes_is_an_error() {
        let g = Grid::line(0.0, 1.0, 2).unwrap();
        let f = SampledFunction::new(g, vec![ExtReal::ZERO; 2]).unwrap();
        assert!(is_convex(&f, 0.0).is_err());
        let f = SampledFunction::from_fn(line101(), |p| p[0]).unwrap();
        assert!(is_convex(&f, -1.0).is_err());
    }

    #[test]
    fn two_dimensional_battery() {
        let g = Grid::square(-1.0, 1.0, 21).unwrap();
        let bowl = SampledFunction::from_fn(g.clone(), |p| p[0] * p[0] + 2.0 * p[1] * p[1]).unwrap();
        assert!(is_convex(&bowl, 1e-12).unwrap().passed());
        // Convex along both axes but not along the diagonal.
        let saddle = SampledFunction::from_fn(g.clone(), |p| -3.0 * p[0] * p[1] + 0.1 * p[0] * p[0]).unwrap();
        let r = is_convex(&saddle, 1e-12).unwrap();
        assert!(r.failed());
        assert_eq!(r.field("direction"), Some("diagonal"));
    }

    #[test]
    fn separated_points_are_not_convex() {
        let g = Grid::line(0.0, 1.0, 11).unwrap();
        let r = is_set_convex(&[0, 10], &g).unwrap();
        assert!(r.failed());
        assert_eq!(r.witness.unwrap().indices, vec![1]);
        assert!(is_set_convex(&[3, 4, 5], &g).unwrap().passed());
        assert!(is_set_convex(&[], &g).is_err());
    }

    #[test]
    fn disc_is_convex() {
        let g = Grid::square(-1.0, 1.0, 41).unwrap();
        let pts: Vec<usize> = (0..g.len()).filter(|&i| {
            let p = g.coord(i);
            p[0].hypot(p[1]) <= 0.5
        }).collect();
        assert!(is_set_convex(&pts, &g).unwrap().passed());
    }

    #[test]
    fn annulus_and_l_shape_are_not_convex() {
        let g = Grid::square(-1.0, 1.0, 41).unwrap();
        let ring: Vec<usize> = (0..g.len()).filter(|&i| {
            let r = g.coord(i)[0].hypot(g.coord(i)[1]);
            (0.4..=0.8).contains(&r)
        }).collect();
        let r = is_set_convex(&ring, &g).unwrap();
        assert!(r.failed());
        let w = r.witness.unwrap();
        let c = &w.coords[0];
        assert!(c[0].hypot(c[1]) < 0.4);
        let ell: Vec<usize> = (0..g.len()).filter(|&i| {
            let p = g.coord(i);
            (p[0] <= -0.5 && p[1] <= 0.5) || (p[1] <= -0.5 && p[0] <= 0.5)
        }).collect();
        assert!(is_set_convex(&ell, &g).unwrap().failed());
    }

    #[test]
    fn collinear_sets_need_every_lattice_node_on_the_segment() {
        let g = Grid::square(0.0, 1.0, 11).unwrap();
        let diag: Vec<usize> = (0..11).map(|k| g.index([k, k])).collect();
        assert!(is_set_convex(&diag, &g).unwrap().passed());
        let holed: Vec<usize> = diag.iter().copied().filter(|&i| i != g.index([5, 5])).collect();
        let r = is_set_convex(&holed, &g).unwrap();
        assert_eq!(r.witness.unwrap().indices, vec![g.index([5, 5])]);
        assert!(is_set_convex(&[g.index([2, 3])], &g).unwrap().passed());
    }

    #[test]
    fn hull_drops_collinear_points() {
        let h = lattice_hull(&[[0, 0], [1, 0], [2, 0], [2, 2], [0, 2], [1, 1]]);
        assert_eq!(h, vec![[0, 0], [2, 0], [2, 2], [0, 2]]);
    }
}
