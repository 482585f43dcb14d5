#![allow(dead_code)]

use bipot_core::examples::{ConeFixture, ElasticityFixture};
use bipot_core::legendre::{default_dual_grid, ConjugatePair};
use bipot_core::{Grid, SampledFunction};

pub fn line(lo: f64, hi: f64, n: usize) -> Grid {
    Grid::line(lo, hi, n).unwrap()
}

pub fn sample(grid: &Grid, f: impl Fn(f64) -> f64) -> SampledFunction {
    SampledFunction::from_fn(grid.clone(), |p| f(p[0])).unwrap()
}

pub fn indicator(lo: f64, hi: f64) -> impl Fn(f64) -> f64 {
    move |x| if x >= lo - 1e-12 && x <= hi + 1e-12 { 0.0 } else { f64::INFINITY }
}

/// The 1D convex corpus: name, φ on its grid, and a dual grid covering its slopes.
pub fn convex_corpus() -> Vec<(&'static str, SampledFunction, Grid)> {
    let g = line(-2.0, 2.0, 81);
    let with_dual = |name, phi: SampledFunction| {
        let dual = default_dual_grid(&phi).unwrap();
        (name, phi, dual)
    };
    vec![
        with_dual("half_square", sample(&g, |x| 0.5 * x * x)),
        with_dual("abs", sample(&g, f64::abs)),
        with_dual("indicator_unit", sample(&g, indicator(-1.0, 1.0))),
        with_dual("positive_part_squared", sample(&g, |x| x.max(0.0).powi(2))),
    ]
}

/// A blur fixture: a conjugate pair with the blur radius it is run at.
pub struct BlurCase {
    pub name: &'static str,
    pub pair: ConjugatePair,
    pub eps: f64,
}

pub fn elasticity() -> ElasticityFixture {
    ElasticityFixture::on_box(1.0, 0.5, -2.0, 2.0, 401, 1).unwrap()
}

pub fn cone() -> ConeFixture {
    ConeFixture::new(0.5, 1.0, 1.0, Grid::square(-4.0, 4.0, 81).unwrap()).unwrap()
}

pub fn small_cone() -> ConeFixture {
    ConeFixture::new(0.5, 1.0, 1.0, Grid::square(-4.0, 4.0, 33).unwrap()).unwrap()
}

fn pair_on(phi: SampledFunction, ygrid: &Grid) -> ConjugatePair {
    ConjugatePair::from_phi(phi, ygrid).unwrap()
}

/// The 1D blur corpus: quadratic, absolute value, interval indicator and a
/// random convex piecewise-linear-plus-quadratic sample.
pub fn blur_corpus_1d() -> Vec<BlurCase> {
    let g = line(-2.0, 2.0, 81);
    let wide = line(-3.0, 3.0, 121);
    let random = {
        let lines = [(-1.7, 0.2), (-0.4, -0.3), (0.9, 0.1), (2.3, -0.8)];
        sample(&g, move |x| lines.iter().map(|(s, c)| s * x + c).fold(f64::NEG_INFINITY, f64::max) + 0.3 * x * x)
    };
    vec![
        BlurCase { name: "elasticity", pair: elasticity().pair().unwrap(), eps: 0.5 },
        BlurCase { name: "abs", pair: pair_on(sample(&wide, f64::abs), &wide), eps: 0.5 },
        BlurCase { name: "indicator_unit", pair: pair_on(sample(&g, indicator(-1.0, 1.0)), &g), eps: 0.5 },
        BlurCase { name: "random_convex", pair: pair_on(random, &line(-4.0, 4.0, 161)), eps: 0.3 },
    ]
}
