mod common;

use bipot_core::bipotential::{
    b_infinity, check_bbgraph, check_bipotential, check_cyclically_monotone, check_sync, graph_of, separable, sync_from_bipotential, Tolerance,
};
use bipot_core::examples::two_point_fixture;
use bipot_core::legendre::conjugate;
use bipot_core::{GraphSet, SampledBivariate};
use common::*;

fn fixtures() -> Vec<(String, SampledBivariate)> {
    let mut out: Vec<(String, SampledBivariate)> =
        convex_corpus().into_iter().map(|(name, phi, yg)| (name.to_string(), separable(&phi, &yg).unwrap())).collect();
    let g = line(-1.0, 1.0, 41);
    out.push(("zero".into(), SampledBivariate::from_fn(g.clone(), g.clone(), |_, _| 0.0).unwrap()));
    out.push(("shifted".into(), SampledBivariate::from_fn(g.clone(), g.clone(), |x, y| 0.5 * (x[0] - y[0]).powi(2) + 1.0 + x[0] * y[0]).unwrap()));
    out.push(("saddle".into(), SampledBivariate::from_fn(g.clone(), g, |x, y| x[0] * x[0] - y[0] * y[0] + x[0] * y[0]).unwrap()));
    out
}

#[test]
fn bipotential_and_sync_verdicts_coincide() {
    for (name, b) in fixtures() {
        let tol = Tolerance::resolution(b.xgrid(), b.ygrid());
        let vb = check_bipotential(&b, tol).unwrap();
        let vc = check_sync(&sync_from_bipotential(&b), tol).unwrap();
        assert_eq!(vb.verdict, vc.verdict, "{name}: {} vs {}", vb.to_text(), vc.to_text());
        assert_eq!(vc.field("bipotential_agrees"), Some("true"), "{name}");
    }
}

#[test]
fn separable_graph_is_the_fenchel_young_equality_set() {
    for (name, phi, yg) in convex_corpus() {
        let b = separable(&phi, &yg).unwrap();
        let tol = phi.grid().max_spacing() * yg.max_spacing();
        let m = graph_of(&b, tol).unwrap();
        let star = conjugate(&phi, &yg).unwrap();
        let (xs, ys) = (phi.grid().coords(), yg.coords());
        for ix in 0..xs.len() {
            for iy in 0..ys.len() {
                let fy = phi.get(ix) + star.get(iy);
                let equal = fy.value().is_some_and(|v| v - xs[ix][0] * ys[iy][0] <= tol);
                assert_eq!(m.contains(ix, iy), equal, "{name} at ({ix}, {iy})");
            }
        }
    }
}

fn bb_fixtures() -> Vec<GraphSet> {
    let g = line(-1.5, 2.5, 41);
    let two = two_point_fixture([(0.0, 0.0), (1.0, 1.0)], 0.2, &g).unwrap().m;
    let band = GraphSet::from_pairs(g.clone(), g.clone(), (0..41usize).flat_map(|i| (i.saturating_sub(2)..(i + 3).min(41)).map(move |j| (i, j)))).unwrap();
    let q = line(-2.0, 2.0, 41);
    let identity = GraphSet::from_pairs(q.clone(), q, (0..41).map(|i| (i, i))).unwrap();
    vec![two, band, identity]
}

#[test]
fn indicator_bipotential_recovers_its_graph() {
    for m in bb_fixtures() {
        assert!(check_bbgraph(&m).unwrap().passed());
        let b = b_infinity(&m).unwrap();
        assert_eq!(graph_of(&b, 0.0).unwrap(), m);
    }
}

#[test]
fn separable_quadratic_graph_is_cyclically_monotone() {
    let g = line(-1.0, 1.0, 11);
    let phi = sample(&g, |x| 0.5 * x * x);
    let b = separable(&phi, &g).unwrap();
    let m = graph_of(&b, 1e-9).unwrap();
    let points: Vec<(Vec<f64>, Vec<f64>)> = m.pairs().map(|(ix, iy)| (vec![g.coord(ix)[0]], vec![g.coord(iy)[0]])).collect();
    assert_eq!(points.len(), 11);
    let r = check_cyclically_monotone(&points, 5, 1e-12).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn different_bipotentials_can_share_a_graph() {
    let g = line(-2.0, 2.0, 41);
    let phi = sample(&g, |x| 0.5 * x * x);
    let b = separable(&phi, &g).unwrap();
    let tol = Tolerance::resolution(&g, &g);
    let m = graph_of(&b, 1e-9).unwrap();
    let b_inf = b_infinity(&m).unwrap();
    assert!(check_bipotential(&b, tol).unwrap().passed());
    assert!(check_bipotential(&b_inf, tol).unwrap().passed());
    assert_eq!(graph_of(&b_inf, 1e-9).unwrap(), m);
    let off_graph = (0..41).flat_map(|i| (0..41).map(move |j| (i, j))).filter(|&(i, j)| !m.contains(i, j));
    assert!(off_graph.into_iter().any(|(i, j)| b.get(i, j) != b_inf.get(i, j)));
}
