//! CSV formats for sampled functions, bivariate samples, graph sets and
//! point lists. `inf` encodes `+∞`; lines starting with `#` carry metadata.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::extreal::ExtReal;
use crate::graph::GraphSet;
use crate::grid::{Axis, Grid, Point};
use crate::sampled::{SampledBivariate, SampledFunction};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn csv_err(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        kind => parse_err(line, format!("{kind:?}")),
    }
}

struct Table {
    header: Vec<String>,
    rows: Vec<(usize, Vec<f64>)>,
    meta: Vec<(String, String)>,
}

fn read_table(mut r: impl Read) -> Result<Table> {
    let mut text = String::new();
    r.read_to_string(&mut text)?;
    let meta = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect();
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
    let header: Vec<String> = rdr.headers().map_err(csv_err)?.iter().map(str::to_string).collect();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let vals = rec
            .iter()
            .map(|t| t.parse::<f64>().map_err(|_| parse_err(line, format!("not a number: {t:?}"))))
            .collect::<Result<Vec<f64>>>()?;
        rows.push((line, vals));
    }
    Ok(Table { header, rows, meta })
}

fn expect_header(t: &Table, options: &[&[&str]]) -> Result<usize> {
    let got: Vec<&str> = t.header.iter().map(String::as_str).collect();
    options
        .iter()
        .position(|h| *h == got.as_slice())
        .ok_or_else(|| parse_err(1, format!("unexpected header {got:?}, expected one of {options:?}")))
}

fn value(line: usize, v: f64) -> Result<ExtReal> {
    ExtReal::new(v).map_err(|e| parse_err(line, e.to_string()))
}

/// Recovers a uniform grid from node coordinates listed in row-major order.
fn infer_grid(points: &[(usize, Point)], dim: usize) -> Result<Grid> {
    let line_of = |k: usize| points.get(k).map_or(0, |p| p.0);
    if points.is_empty() {
        return Err(parse_err(0, "no rows"));
    }
    let n1 = if dim == 2 { points.iter().take_while(|p| p.1[0] == points[0].1[0]).count() } else { 1 };
    if !points.len().is_multiple_of(n1) {
        return Err(parse_err(line_of(points.len() - 1), "rows do not fill a rectangular grid"));
    }
    let n0 = points.len() / n1;
    let axis = |k: usize, first: usize, last: usize, n: usize| {
        Axis::new(points[first].1[k], points[last].1[k], n).map_err(|e| parse_err(line_of(last), e.to_string()))
    };
    let mut axes = vec![axis(0, 0, points.len() - 1, n0)?];
    if dim == 2 {
        axes.push(axis(1, 0, n1 - 1, n1)?);
    }
    let grid = Grid::new(axes)?;
    let slack = 1e-9 * grid.min_spacing();
    for (i, (line, p)) in points.iter().enumerate() {
        let c = grid.coord(i);
        if (0..dim).any(|k| (c[k] - p[k]).abs() > slack) {
            return Err(parse_err(*line, format!("coordinate {:?} is not node {i} of grid {grid}", &p[..dim])));
        }
    }
    Ok(grid)
}

fn point(v: &[f64]) -> Point {
    [v[0], if v.len() > 1 { v[1] } else { 0.0 }]
}

fn fmt_val(v: ExtReal) -> String {
    v.to_string()
}

pub fn read_function(r: impl Read) -> Result<SampledFunction> {
    let t = read_table(r)?;
    let dim = expect_header(&t, &[&["x", "value"], &["x", "y", "value"]])? + 1;
    let pts: Vec<(usize, Point)> = t.rows.iter().map(|(l, v)| (*l, point(&v[..dim]))).collect();
    let grid = infer_grid(&pts, dim)?;
    let vals = t.rows.iter().map(|(l, v)| value(*l, v[dim])).collect::<Result<Vec<_>>>()?;
    SampledFunction::new(grid, vals)
}

pub fn write_function(f: &SampledFunction, w: impl Write) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    let g = f.grid();
    let head: &[&str] = if g.dim() == 1 { &["x", "value"] } else { &["x", "y", "value"] };
    wtr.write_record(head).map_err(csv_err)?;
    for (i, v) in f.vals().iter().enumerate() {
        let c = g.coord(i);
        let mut rec: Vec<String> = c[..g.dim()].iter().map(f64::to_string).collect();
        rec.push(fmt_val(*v));
        wtr.write_record(&rec).map_err(csv_err)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn read_bivariate(r: impl Read) -> Result<SampledBivariate> {
    let t = read_table(r)?;
    let dim = expect_header(&t, &[&["x", "y", "value"], &["x1", "x2", "y1", "y2", "value"]])? + 1;
    if t.rows.is_empty() {
        return Err(parse_err(1, "no rows"));
    }
    let x0 = &t.rows[0].1[..dim];
    let ny = t.rows.iter().take_while(|(_, v)| &v[..dim] == x0).count();
    if t.rows.len() % ny != 0 {
        return Err(parse_err(t.rows.last().map_or(0, |r| r.0), "rows do not fill the product grid"));
    }
    let xpts: Vec<(usize, Point)> = t.rows.iter().step_by(ny).map(|(l, v)| (*l, point(&v[..dim]))).collect();
    let ypts: Vec<(usize, Point)> = t.rows[..ny].iter().map(|(l, v)| (*l, point(&v[dim..2 * dim]))).collect();
    let xgrid = infer_grid(&xpts, dim)?;
    let ygrid = infer_grid(&ypts, dim)?;
    let slack = 1e-9 * xgrid.min_spacing().min(ygrid.min_spacing());
    let mut vals = Vec::with_capacity(t.rows.len());
    for (k, (line, v)) in t.rows.iter().enumerate() {
        let (x, y) = (xgrid.coord(k / ny), ygrid.coord(k % ny));
        if (0..dim).any(|d| (x[d] - v[d]).abs() > slack || (y[d] - v[dim + d]).abs() > slack) {
            return Err(parse_err(*line, "row is out of (x-node, y-node) row-major order"));
        }
        vals.push(value(*line, v[2 * dim])?);
    }
    SampledBivariate::new(xgrid, ygrid, vals)
}

pub fn write_bivariate(b: &SampledBivariate, w: impl Write) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    let (xg, yg) = (b.xgrid(), b.ygrid());
    let dim = xg.dim();
    let head: &[&str] = if dim == 1 { &["x", "y", "value"] } else { &["x1", "x2", "y1", "y2", "value"] };
    wtr.write_record(head).map_err(csv_err)?;
    let ys: Vec<Vec<String>> = yg.coords().iter().map(|y| y[..dim].iter().map(f64::to_string).collect()).collect();
    for ix in 0..xg.len() {
        let x: Vec<String> = xg.coord(ix)[..dim].iter().map(f64::to_string).collect();
        for (iy, y) in ys.iter().enumerate() {
            let mut rec = x.clone();
            rec.extend(y.iter().cloned());
            rec.push(fmt_val(b.get(ix, iy)));
            wtr.write_record(&rec).map_err(csv_err)?;
        }
    }
    wtr.flush()?;
    Ok(())
}

pub fn read_graph(r: impl Read) -> Result<GraphSet> {
    let t = read_table(r)?;
    expect_header(&t, &[&["x_index", "y_index"]])?;
    let grid_meta = |key: &str| -> Result<Grid> {
        let v = t
            .meta
            .iter()
            .find(|(k, _)| k == key)
            .ok_or_else(|| parse_err(1, format!("missing '# {key}=lo:hi:n' metadata line")))?;
        v.1.parse()
    };
    let (xgrid, ygrid) = (grid_meta("xgrid")?, grid_meta("ygrid")?);
    let mut m = GraphSet::empty(xgrid, ygrid)?;
    for (line, v) in &t.rows {
        let idx = |f: f64, n: usize| {
            (f >= 0.0 && f.fract() == 0.0 && (f as usize) < n)
                .then_some(f as usize)
                .ok_or_else(|| parse_err(*line, format!("index {f} outside 0..{n}")))
        };
        let ix = idx(v[0], m.xgrid().len())?;
        let iy = idx(v[1], m.ygrid().len())?;
        m.insert(ix, iy);
    }
    Ok(m)
}

pub fn write_graph(m: &GraphSet, mut w: impl Write) -> Result<()> {
    writeln!(w, "# xgrid={}", m.xgrid())?;
    writeln!(w, "# ygrid={}", m.ygrid())?;
    let mut wtr = csv::Writer::from_writer(w);
    wtr.write_record(["x_index", "y_index"]).map_err(csv_err)?;
    for (ix, iy) in m.pairs() {
        wtr.write_record([ix.to_string(), iy.to_string()]).map_err(csv_err)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Point pairs `(x, y)` with header `x,y` (1D) or `x1,x2,y1,y2` (2D).
pub fn read_points(r: impl Read) -> Result<Vec<(Vec<f64>, Vec<f64>)>> {
    let t = read_table(r)?;
    let dim = expect_header(&t, &[&["x", "y"], &["x1", "x2", "y1", "y2"]])? + 1;
    t.rows
        .iter()
        .map(|(line, v)| {
            if v.iter().any(|a| !a.is_finite()) {
                return Err(parse_err(*line, "points must be finite"));
            }
            Ok((v[..dim].to_vec(), v[dim..].to_vec()))
        })
        .collect()
}

pub fn load_function(path: impl AsRef<Path>) -> Result<SampledFunction> {
    read_function(File::open(path)?)
}

pub fn save_function(f: &SampledFunction, path: impl AsRef<Path>) -> Result<()> {
    write_function(f, BufWriter::new(File::create(path)?))
}

pub fn load_bivariate(path: impl AsRef<Path>) -> Result<SampledBivariate> {
    read_bivariate(File::open(path)?)
}

pub fn save_bivariate(b: &SampledBivariate, path: impl AsRef<Path>) -> Result<()> {
    write_bivariate(b, BufWriter::new(File::create(path)?))
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<GraphSet> {
    read_graph(File::open(path)?)
}

pub fn save_graph(m: &GraphSet, path: impl AsRef<Path>) -> Result<()> {
    write_graph(m, BufWriter::new(File::create(path)?))
}

pub fn load_points(path: impl AsRef<Path>) -> Result<Vec<(Vec<f64>, Vec<f64>)>> {
    read_points(File::open(path)?)
}
