//! `bipot`: conjugation, blurring, the bipotential checkers and the worked
//! examples from the command line. Exit status 0 on success, 1 when a
//! check fails, 2 on usage or input errors.

mod conf;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bipot_core::bipotential::{
    check_bbgraph, check_bipotential, check_cyclically_monotone, check_sync, graph_of, separable_pair, sync_from_bipotential, Tolerance,
};
use bipot_core::blur::{
    blurred_bipotential, blurred_graph, check_admits_blurring, check_newc, check_newc_everywhere, default_graph_tol, explore_darboux,
    inf_convolve_blur, BlurInput, BlurSpec,
};
use bipot_core::convexity::is_convex;
use bipot_core::covers::{build_cover, check_implicitly_convex, check_maithm_equivalence, infimum_bipotential, CoverAtY, MaithmOptions};
use bipot_core::examples::{two_point_fixture, ConeFixture, ElasticityFixture};
use bipot_core::io;
use bipot_core::legendre::{conjugate_bruteforce_with_cap, conjugate_with_cap, default_dual_grid, ConjugatePair, DEFAULT_CAP, ROUNDOFF_REL_TOL};
use bipot_core::report::REPORT_SCHEMA_VERSION;
use bipot_core::{render_reports, CheckReport, Grid, SampledFunction};

use conf::Conf;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(bipot_core::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<bipot_core::Error> for CliError {
    fn from(e: bipot_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "bipot", version = REPORT_SCHEMA_VERSION, about = "Bipotentials, blurred constitutive laws and convex covers on grids")]
struct Cli {
    /// Also write the report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Discrete Legendre–Fenchel conjugate of a sampled function.
    Conjugate {
        #[arg(long)]
        input: PathBuf,
        /// Dual grid as lo:hi:n[;lo:hi:n]; defaults to the slope range of the input.
        #[arg(long, allow_hyphen_values = true)]
        ygrid: Option<Grid>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: f64,
        /// Use the quadratic direct maximization instead of the linear-time route.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Blur the law of a convex function: c_A, b_A and M + A.
    Blur {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = Kind::Yball)]
        kind: Kind,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        graph_tol: Option<f64>,
        #[arg(long)]
        out_ca: Option<PathBuf>,
        #[arg(long)]
        out_ba: Option<PathBuf>,
        #[arg(long)]
        out_graph: Option<PathBuf>,
    },
    #[command(subcommand)]
    Check(Check),
    #[command(subcommand)]
    Cover(Cover),
    #[command(subcommand)]
    Example(Example),
    #[command(subcommand)]
    Explore(Explore),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Yball,
    Product,
}

/// A convex function and its conjugate: φ from a file, φ* either from a
/// file or computed on a dual grid.
#[derive(Args)]
struct LawArgs {
    #[arg(long)]
    phi: PathBuf,
    /// Exact conjugate on the y-grid; computed from φ when absent.
    #[arg(long)]
    phistar: Option<PathBuf>,
    /// Dual grid used when φ* is computed.
    #[arg(long, allow_hyphen_values = true)]
    ygrid: Option<Grid>,
}

#[derive(Subcommand)]
enum Check {
    /// Discrete convexity of a sampled function.
    Convex {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Bi-convexity of a graph given as node pairs.
    Bbgraph {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Sync axioms for c(x, y).
    Sync {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Bipotential axioms for b(x, y).
    Bipotential {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Convexity of the union of subdifferentials of φ* over the ball around y.
    Newc {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        eps: f64,
        /// Probe point, comma-separated; every y-node when absent.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Whether a graph (or the zero set of a sync) admits the blurring.
    Blurring {
        #[arg(long, conflicts_with = "sync", required_unless_present = "sync")]
        graph: Option<PathBuf>,
        #[arg(long)]
        sync: Option<PathBuf>,
        #[arg(long)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = Kind::Yball)]
        kind: Kind,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        zero_tol: Option<f64>,
    },
    /// Implicit convexity of the cover family at a fixed y.
    Implicit {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, default_value = "0.5")]
        alphas: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// "b_A is a bipotential" against "the cover is implicitly convex".
    Maithm {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        graph_tol: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cyclic monotonicity of a finite point set.
    Cyclic {
        #[arg(long)]
        points: PathBuf,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum Cover {
    /// Write every member b_a of the cover, the parameters and the infimum.
    Build {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum Example {
    /// Blurred linear elasticity against its closed form.
    Elasticity {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        eps: Option<f64>,
        /// Nodes per axis.
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<f64>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Two-point graph and the 2ε threshold.
    TwoPoint {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        x1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        y1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        x2: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        y2: Option<f64>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<f64>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Cone whose blurred graph is not a BB-graph.
    Cone {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        y1: Option<f64>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Skip the cover equivalence check.
        #[arg(long)]
        no_maithm: bool,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Explore {
    /// Random search for a 1D convex function whose subdifferential union is not an interval.
    Darboux {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 81)]
        nodes: usize,
    },
}

/// Reports plus the overall verdict deciding the exit status.
struct Run {
    reports: Vec<CheckReport>,
    ok: bool,
}

impl Run {
    fn single(r: CheckReport) -> Self {
        let ok = r.passed();
        Run { reports: vec![r], ok }
    }

    fn info(r: CheckReport) -> Self {
        Run { reports: vec![r], ok: true }
    }
}

/// Runs a loader, naming the file in any error.
fn load<'a, T>(path: &'a Path, f: impl FnOnce(&'a Path) -> bipot_core::Result<T>) -> CliResult<T> {
    f(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_pair(law: &LawArgs) -> CliResult<ConjugatePair> {
    let phi = load(&law.phi, io::load_function)?;
    if let Some(path) = &law.phistar {
        let phistar = load(path, io::load_function)?;
        let tol = ROUNDOFF_REL_TOL * (1.0 + phi.scale() + phistar.scale());
        return Ok(ConjugatePair::new(phi, phistar, tol)?);
    }
    let ygrid = match &law.ygrid {
        Some(g) => g.clone(),
        None => default_dual_grid(&phi)?,
    };
    Ok(ConjugatePair::from_phi(phi, &ygrid)?)
}

fn parse_point(s: &str) -> CliResult<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| CliError::Input(format!("bad coordinate {t:?} in {s:?}"))))
        .collect()
}

/// Index of the grid node closest to `s`, which must lie within half a cell.
fn node_at(grid: &Grid, s: &str) -> CliResult<usize> {
    let p = parse_point(s)?;
    if p.len() != grid.dim() {
        return Err(CliError::Input(format!("point {s:?} has {} coordinates, grid is {}D", p.len(), grid.dim())));
    }
    let i = grid.nearest(&p).ok_or_else(|| CliError::Input(format!("point {s:?} outside the grid box")))?;
    let c = grid.coord(i);
    let off = p.iter().enumerate().map(|(k, v)| (v - c[k]).abs() / grid.axis(k).h()).fold(0.0, f64::max);
    if off > 0.5 + 1e-9 {
        return Err(CliError::Input(format!("point {s:?} outside the grid box")));
    }
    Ok(i)
}

fn spec_of(kind: Kind, eps: f64, p: f64) -> CliResult<BlurSpec> {
    Ok(match kind {
        Kind::Yball => BlurSpec::y_ball(eps)?,
        Kind::Product => BlurSpec::product_ball(eps, p)?,
    })
}

fn noise_tol(f: &SampledFunction) -> f64 {
    ROUNDOFF_REL_TOL * (1.0 + f.scale())
}

fn out_path(dir: &Option<PathBuf>, name: &str) -> CliResult<Option<PathBuf>> {
    match dir {
        Some(d) => {
            fs::create_dir_all(d)?;
            Ok(Some(d.join(name)))
        }
        None => Ok(None),
    }
}

fn run(cmd: Cmd) -> CliResult<Run> {
    match cmd {
        Cmd::Conjugate { input, ygrid, out, cap, bruteforce } => {
            let phi = load(&input, io::load_function)?;
            let ygrid = match ygrid {
                Some(g) => g,
                None => default_dual_grid(&phi)?,
            };
            let star = if bruteforce { conjugate_bruteforce_with_cap(&phi, &ygrid, cap)? } else { conjugate_with_cap(&phi, &ygrid, cap)? };
            if let Some(path) = &out {
                io::save_function(&star, path)?;
            }
            let convex = if star.has_domain() { is_convex(&star, noise_tol(&star))?.verdict.as_str() } else { "empty-domain" };
            Ok(Run::info(
                CheckReport::pass("conjugate")
                    .with("method", if bruteforce { "bruteforce" } else { "linear-time" })
                    .with("xgrid", phi.grid())
                    .with("ygrid", &ygrid)
                    .with("cap", cap)
                    .with("finite_nodes", star.domain_len())
                    .with("output_convexity", convex),
            ))
        }
        Cmd::Blur { law, eps, kind, p, graph_tol, out_ca, out_ba, out_graph } => {
            let pair = load_pair(&law)?;
            let spec = spec_of(kind, eps, p)?;
            let tol = graph_tol.unwrap_or_else(|| default_graph_tol(pair.xgrid(), pair.ygrid()));
            let (b_a, m) = match kind {
                Kind::Yball => (blurred_bipotential(&pair, &spec)?, blurred_graph(&pair, &spec, tol)?),
                Kind::Product => {
                    let c_a = inf_convolve_blur(&sync_from_bipotential(&separable_pair(&pair)), &spec)?;
                    let b_a = c_a.shifted_by_dot(1.0);
                    let m = graph_of(&b_a, tol)?;
                    (b_a, m)
                }
            };
            let c_a = b_a.shifted_by_dot(-1.0);
            if let Some(path) = &out_ca {
                io::save_bivariate(&c_a, path)?;
            }
            if let Some(path) = &out_ba {
                io::save_bivariate(&b_a, path)?;
            }
            if let Some(path) = &out_graph {
                io::save_graph(&m, path)?;
            }
            let finite = c_a.vals().iter().filter(|v| v.is_finite()).count();
            Ok(Run::info(
                CheckReport::pass("blur")
                    .with("blur", spec)
                    .with("xgrid", pair.xgrid())
                    .with("ygrid", pair.ygrid())
                    .with("graph_tol", tol)
                    .with("finite_pairs", finite)
                    .with("graph_members", m.len()),
            ))
        }
        Cmd::Check(c) => run_check(c),
        Cmd::Cover(Cover::Build { law, eps, out_dir }) => {
            let pair = load_pair(&law)?;
            let family = build_cover(&pair, eps)?;
            fs::create_dir_all(&out_dir)?;
            let dim = pair.ygrid().dim();
            let mut lambda = String::from(if dim == 1 { "member,a\n" } else { "member,a1,a2\n" });
            for (k, a) in family.lambda_nodes().iter().enumerate() {
                let coords: Vec<String> = a[..dim].iter().map(f64::to_string).collect();
                lambda.push_str(&format!("{k},{}\n", coords.join(",")));
                io::save_bivariate(&family.member(k), out_dir.join(format!("member_{k}.csv")))?;
            }
            fs::write(out_dir.join("lambda.csv"), lambda)?;
            io::save_bivariate(&infimum_bipotential(&family)?, out_dir.join("infimum.csv"))?;
            Ok(Run::info(
                CheckReport::pass("cover_build")
                    .with("members", family.len())
                    .with("eps", eps)
                    .with("xgrid", pair.xgrid())
                    .with("ygrid", pair.ygrid())
                    .with("out_dir", out_dir.display()),
            ))
        }
        Cmd::Example(e) => run_example(e),
        Cmd::Explore(Explore::Darboux { trials, seed, nodes }) => Ok(Run::single(explore_darboux(trials, seed, nodes)?)),
    }
}

fn run_check(c: Check) -> CliResult<Run> {
    let tolerance = |tol: Option<f64>, xg: &Grid, yg: &Grid| tol.map_or_else(|| Tolerance::resolution(xg, yg), Tolerance::absolute);
    let r = match c {
        Check::Convex { input, tol } => {
            let f = load(&input, io::load_function)?;
            let tol = tol.unwrap_or_else(|| noise_tol(&f));
            is_convex(&f, tol)?
        }
        Check::Bbgraph { graph } => check_bbgraph(&load(&graph, io::load_graph)?)?,
        Check::Sync { input, tol } => {
            let c = load(&input, io::load_bivariate)?;
            check_sync(&c, tolerance(tol, c.xgrid(), c.ygrid()))?
        }
        Check::Bipotential { input, tol } => {
            let b = load(&input, io::load_bivariate)?;
            check_bipotential(&b, tolerance(tol, b.xgrid(), b.ygrid()))?
        }
        Check::Newc { law, eps, y, tol } => {
            let pair = load_pair(&law)?;
            let tol = tol.unwrap_or_else(|| default_graph_tol(pair.xgrid(), pair.ygrid()));
            match y {
                Some(y) => check_newc(&pair, eps, node_at(pair.ygrid(), &y)?, tol)?,
                None => check_newc_everywhere(&pair, eps, tol)?,
            }
        }
        Check::Blurring { graph, sync, eps, kind, p, tol, zero_tol } => {
            let spec = spec_of(kind, eps, p)?;
            match (graph, sync) {
                (Some(g), _) => check_admits_blurring(BlurInput::Graph(&load(&g, io::load_graph)?), &spec, Tolerance::absolute(0.0), 0.0)?,
                (None, Some(s)) => {
                    let c = load(&s, io::load_bivariate)?;
                    let zero = zero_tol.unwrap_or_else(|| default_graph_tol(c.xgrid(), c.ygrid()));
                    check_admits_blurring(BlurInput::Sync(&c), &spec, tolerance(tol, c.xgrid(), c.ygrid()), zero)?
                }
                (None, None) => return Err(CliError::Input("one of --graph or --sync is required".into())),
            }
        }
        Check::Implicit { law, eps, y, alphas, tol, seed } => {
            let pair = load_pair(&law)?;
            let family = build_cover(&pair, eps)?;
            let at = node_at(pair.ygrid(), &y)?;
            let alphas = parse_point(&alphas)?;
            check_implicitly_convex(&CoverAtY::new(&family, at), &alphas, tol, seed)?.with("y_index", at).with("eps", eps)
        }
        Check::Maithm { law, eps, graph_tol, seed } => {
            let pair = load_pair(&law)?;
            let graph_tol = graph_tol.unwrap_or_else(|| default_graph_tol(pair.xgrid(), pair.ygrid()));
            check_maithm_equivalence(&pair, eps, MaithmOptions { graph_tol, seed })?
        }
        Check::Cyclic { points, n_max, tol } => check_cyclically_monotone(&load(&points, io::load_points)?, n_max, tol)?,
    };
    Ok(Run::single(r))
}

fn run_example(e: Example) -> CliResult<Run> {
    match e {
        Example::Elasticity { config, k, eps, grid, lo, hi, dim, out_dir } => {
            let conf = Conf::load(config.as_deref(), &["k", "eps", "grid", "lo", "hi", "dim"])?;
            let fix = ElasticityFixture::on_box(
                conf.pick(k, "k", 1.0)?,
                conf.pick(eps, "eps", 0.5)?,
                conf.pick(lo, "lo", -2.0)?,
                conf.pick(hi, "hi", 2.0)?,
                conf.pick(grid, "grid", 401)?,
                conf.pick(dim, "dim", 1)?,
            )?;
            let sync = fix.sync();
            let c_a = inf_convolve_blur(&sync, &fix.spec())?;
            let closed = fix.closed_form_ca();
            let gap = fix.interior_gap(&c_a, &closed);
            let (xs, ys) = (fix.xgrid.coords(), fix.ygrid.coords());
            let spread = xs
                .iter()
                .flat_map(|x| ys.iter().map(move |y| ((y[0] - fix.k * x[0]).powi(2) + (y[1] - fix.k * x[1]).powi(2)).sqrt()))
                .fold(0.0, f64::max);
            let bound = 2.0 * fix.xgrid.max_spacing() * (1.0 + spread);
            let sync_check = check_sync(&c_a, Tolerance::resolution(&fix.xgrid, &fix.ygrid))?;
            for (name, b) in [("sync.csv", &sync), ("ca.csv", &c_a), ("ca_closed_form.csv", &closed)] {
                if let Some(path) = out_path(&out_dir, name)? {
                    io::save_bivariate(b, path)?;
                }
            }
            let ok = gap <= bound;
            let summary = if ok { CheckReport::pass("example_elasticity") } else { oracle_failure(gap) }
                .with("k", fix.k)
                .with("eps", fix.eps)
                .with("xgrid", &fix.xgrid)
                .with("max_oracle_gap", gap)
                .with("gap_bound", bound)
                .with("band_excluded", fix.eps);
            Ok(Run { ok: ok && sync_check.passed(), reports: vec![summary, sync_check.renamed("blurred_sync")] })
        }
        Example::TwoPoint { config, x1, y1, x2, y2, eps, grid, lo, hi, out_dir } => {
            let conf = Conf::load(config.as_deref(), &["x1", "y1", "x2", "y2", "eps", "grid", "lo", "hi"])?;
            let pts = [(conf.pick(x1, "x1", 0.0)?, conf.pick(y1, "y1", 0.0)?), (conf.pick(x2, "x2", 1.0)?, conf.pick(y2, "y2", 1.0)?)];
            let eps = conf.pick(eps, "eps", 0.6)?;
            let g = Grid::line(conf.pick(lo, "lo", -1.5)?, conf.pick(hi, "hi", 2.5)?, conf.pick(grid, "grid", 201)?)?;
            let fix = two_point_fixture(pts, eps, &g)?;
            let bare = check_bbgraph(&fix.m)?;
            let blurred = check_admits_blurring(BlurInput::Graph(&fix.m), &fix.spec, Tolerance::absolute(0.0), 0.0)?;
            let (sum, _) = fix.m.minkowski_sum(&fix.spec.offsets(&g, &g));
            if let Some(path) = out_path(&out_dir, "twopoint.csv")? {
                io::save_graph(&fix.m, path)?;
            }
            if let Some(path) = out_path(&out_dir, "twopoint_blurred.csv")? {
                io::save_graph(&sum, path)?;
            }
            let distance = (pts[0].1 - pts[1].1).abs();
            let predicted_fail = distance <= 2.0 * eps;
            let ok = bare.passed() && blurred.failed() == predicted_fail && blurred.field("clipped") == Some("false");
            let summary = if ok { CheckReport::pass("example_two_point") } else { threshold_failure() }
                .with("y_distance", distance)
                .with("threshold", 2.0 * eps)
                .with("predicted", if predicted_fail { "fail" } else { "pass" })
                .with("observed", blurred.verdict.as_str());
            Ok(Run { ok, reports: vec![summary, bare, blurred] })
        }
        Example::Cone { config, alpha, y1, eps, grid, lo, hi, seed, no_maithm, out_dir } => {
            let conf = Conf::load(config.as_deref(), &["alpha", "y1", "eps", "grid", "lo", "hi", "seed"])?;
            let g = Grid::square(conf.pick(lo, "lo", -4.0)?, conf.pick(hi, "hi", 4.0)?, conf.pick(grid, "grid", 81)?)?;
            let fix = ConeFixture::new(conf.pick(alpha, "alpha", 0.5)?, conf.pick(y1, "y1", 1.0)?, conf.pick(eps, "eps", 1.0)?, g)?;
            let seed = conf.pick(seed, "seed", 11)?;
            let pair = fix.pair()?;
            let tol = default_graph_tol(&fix.grid, &fix.grid);
            let newc = check_newc(&pair, fix.eps, fix.y_star_index()?, tol)?;
            let m = blurred_graph(&pair, &fix.spec(), tol)?;
            let bb = check_bbgraph(&m)?;
            for (name, f) in [("phi.csv", pair.phi()), ("phistar.csv", pair.phistar())] {
                if let Some(path) = out_path(&out_dir, name)? {
                    io::save_function(f, path)?;
                }
            }
            if let Some(path) = out_path(&out_dir, "blurred_graph.csv")? {
                io::save_graph(&m, path)?;
            }
            let (lo_w, hi_w) = fix.window();
            let mut ok = newc.failed() && bb.failed();
            let mut reports = vec![newc, bb];
            if !no_maithm {
                let r = check_maithm_equivalence(&pair, fix.eps, MaithmOptions { graph_tol: tol, seed })?;
                ok &= r.passed();
                reports.push(r);
            }
            let summary = if ok { CheckReport::pass("example_cone") } else { threshold_failure() }
                .with("alpha", fix.alpha)
                .with("y_star", format!("({},{})", fix.y_star[0], fix.y_star[1]))
                .with("eps", fix.eps)
                .with("window", format!("({lo_w},{hi_w})"))
                .with("grid", &fix.grid)
                .with("predicted", "newc fails and blurred graph is not a BB-graph");
            reports.insert(0, summary);
            Ok(Run { ok, reports })
        }
    }
}

fn oracle_failure(gap: f64) -> CheckReport {
    CheckReport::fail("example_elasticity", "oracle-gap", bipot_core::Witness::new("closed form differs beyond the bound"), Some(gap))
}

fn threshold_failure() -> CheckReport {
    CheckReport::fail("example", "prediction", bipot_core::Witness::new("observed verdicts differ from the predicted ones"), None)
}

fn configure_threads() {
    let Ok(v) = std::env::var("BIPOT_THREADS") else { return };
    match v.parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                log::warn!("BIPOT_THREADS ignored: {e}");
            }
        }
        _ => log::warn!("BIPOT_THREADS={v:?} is not a positive integer; ignored"),
    }
}

fn write_report(text: &str, path: Option<&Path>) -> CliResult<()> {
    print!("{text}");
    if let Some(p) = path {
        fs::write(p, text)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    configure_threads();
    let cli = Cli::parse();
    let outcome = run(cli.cmd).and_then(|r| {
        write_report(&render_reports(&r.reports), cli.report.as_deref())?;
        Ok(r.ok)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
