//! Execution of a [`RunConfig`].

use std::f64::consts::TAU;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::thread;

use num_complex::Complex64;
use polyschwarz::bounds::{self, BoundReport, Codomain};
use polyschwarz::mapping::io::{read_map, series_to_json};
use polyschwarz::quadrature::{abs_cos_integral, DEFAULT_LEMMA_NODES};
use polyschwarz::report::{JsonLinesWriter, SweepCsvWriter};
use polyschwarz::{
    random_bounded_map, sharpness_search, ColonnaMap, Error, Method, MobiusFactor, PolydiskPoint,
    Result,
};

use crate::config::{Command, MethodKind, PointArgs, RunConfig};

/// Runs `cfg`. `Ok(false)` means at least one report failed.
pub fn run(cfg: &RunConfig) -> Result<bool> {
    match &cfg.command {
        Command::Verify(args) => {
            let map = read_map(&args.map)?;
            bounds::certify(&map, Codomain::Disk)?;
            for alpha in &args.alpha {
                check_dim(map.dim(), alpha.dim())?;
            }
            let method = match args.method {
                MethodKind::Exact => Method::Exact,
                MethodKind::Cauchy => Method::Cauchy(cfg.quadrature()),
            };
            let tol = cfg.global.tol.unwrap_or_else(|| method.default_tol());
            sweep(cfg, &args.points, map.dim(), |z| {
                args.alpha
                    .iter()
                    .map(|alpha| bounds::verify_derivative_bound(&map, z, alpha, &method, tol))
                    .collect()
            })
        }
        Command::Gradient(args) => {
            let map = read_map(&args.map)?;
            bounds::certify(&map, Codomain::Ball)?;
            sweep(cfg, &args.points, map.dim(), |z| {
                Ok(vec![retol(
                    cfg,
                    bounds::verify_gradient_bound(&map, z, args.samples)?,
                )])
            })
        }
        Command::Growth(args) => {
            let map = read_map(&args.map)?;
            bounds::certify(&map, Codomain::Ball)?;
            sweep(cfg, &args.points, map.dim(), |z| {
                Ok(vec![retol(cfg, bounds::verify_growth_bound(&map, z)?)])
            })
        }
        Command::Coeffs(args) => {
            let map = read_map(&args.map)?;
            let spec = cfg.quadrature().extraction(&map)?;
            let reports: Vec<BoundReport> =
                bounds::verify_coefficient_bound(&map, args.max_degree, &spec)?
                    .into_iter()
                    .map(|r| retol(cfg, r))
                    .collect();
            let mut sink = JsonLinesWriter::new(open(cfg.global.out.as_deref())?);
            for r in &reports {
                sink.write(r)?;
            }
            sink.into_inner()?;
            summarize(
                cfg,
                reports.len(),
                reports.iter().filter(|r| !r.pass).count(),
            );
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::Lemma(args) => {
            let nodes = cfg.global.nodes.unwrap_or(DEFAULT_LEMMA_NODES);
            let value = abs_cos_integral(args.m, args.gamma, nodes)?;
            let record = serde_json::json!({
                "m": args.m,
                "gamma": args.gamma,
                "nodes": nodes,
                "value": value,
            });
            if let Some(path) = &cfg.global.out {
                std::fs::write(path, format!("{record}\n"))?;
            }
            if cfg.global.json {
                println!("{record}");
            } else {
                println!(
                    "m = {}, gamma = {}, nodes = {nodes}: value = {value:.12}",
                    args.m, args.gamma
                );
            }
            Ok(true)
        }
        Command::Extremal(args) => {
            let colonna =
                ColonnaMap::new(args.gamma, vec![MobiusFactor::new(args.a, args.lambda)?])?;
            emit_text(
                cfg,
                &series_to_json(&colonna.series_expansion(args.degree))?,
            )?;
            Ok(true)
        }
        Command::Random(args) => {
            let map = random_bounded_map(
                args.n,
                args.codim,
                args.degree,
                cfg.global.seed,
                args.margin,
            )?;
            let series = map.as_series().expect("random maps are finite series");
            emit_text(cfg, &series_to_json(series)?)?;
            Ok(true)
        }
        Command::Sharpness(args) => {
            let n = args.n.unwrap_or(args.alpha.dim());
            check_dim(n, args.alpha.dim())?;
            let result =
                sharpness_search(n, &args.alpha, args.family, args.budget, cfg.global.seed)?;
            let text = serde_json::to_string_pretty(&result)?;
            if let Some(path) = &cfg.global.out {
                std::fs::write(path, text.clone() + "\n")?;
            }
            if cfg.global.json {
                println!("{text}");
            } else {
                println!(
                    "ratio = {:.9} (family {}, {} evaluations, seed {})",
                    result.ratio, args.family, result.evaluations, result.seed
                );
            }
            Ok(true)
        }
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

fn retol(cfg: &RunConfig, r: BoundReport) -> BoundReport {
    match cfg.global.tol {
        Some(tol) => BoundReport::new(r.check_id, r.params, r.lhs, r.rhs, tol),
        None => r,
    }
}

fn open(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_text(cfg: &RunConfig, text: &str) -> Result<()> {
    let mut w = open(cfg.global.out.as_deref())?;
    w.write_all(text.as_bytes())?;
    w.flush()?;
    Ok(())
}

fn summarize(cfg: &RunConfig, total: usize, failed: usize) {
    let line = format!("{total} reports, {failed} failed");
    match &cfg.global.out {
        Some(path) => println!("{line} (written to {})", path.display()),
        None => eprintln!("{line}"),
    }
}

/// Grid points in row-major order, the last coordinate varying fastest.
pub fn grid_points(n: usize, per_axis: usize, cap: f64) -> Result<Vec<PolydiskPoint>> {
    if per_axis == 0 {
        return Err(Error::InvalidParameter("--grid must be at least 1".into()));
    }
    if !(0.0..1.0).contains(&cap) {
        return Err(Error::InvalidParameter(format!(
            "--radius-cap must lie in [0, 1), got {cap}"
        )));
    }
    let axis: Vec<Complex64> = (0..per_axis)
        .map(|i| {
            let r = if per_axis == 1 {
                0.0
            } else {
                cap * i as f64 / (per_axis - 1) as f64
            };
            Complex64::from_polar(r, TAU * i as f64 / per_axis as f64)
        })
        .collect();
    let total = per_axis
        .checked_pow(n as u32)
        .ok_or_else(|| Error::InvalidParameter("grid is too large".into()))?;
    (0..total)
        .map(|mut idx| {
            let mut coords = vec![Complex64::new(0.0, 0.0); n];
            for c in coords.iter_mut().rev() {
                *c = axis[idx % per_axis];
                idx /= per_axis;
            }
            PolydiskPoint::new(coords)
        })
        .collect()
}

fn points(args: &PointArgs, n: usize) -> Result<Vec<PolydiskPoint>> {
    if let Some(g) = args.grid {
        return grid_points(n, g, args.radius_cap);
    }
    let z = match &args.z {
        Some(z) => PolydiskPoint::new(z.0.clone())?,
        None => PolydiskPoint::origin(n),
    };
    check_dim(n, z.dim())?;
    Ok(vec![z])
}

enum Sink {
    Json(JsonLinesWriter<Box<dyn Write>>),
    Csv(Box<SweepCsvWriter<Box<dyn Write>>>),
}

impl Sink {
    fn write(&mut self, r: &BoundReport) -> Result<()> {
        match self {
            Self::Json(w) => w.write(r),
            Self::Csv(w) => w.write(r),
        }
    }

    fn finish(self) -> Result<()> {
        match self {
            Self::Json(w) => w.into_inner()?.flush()?,
            Self::Csv(w) => w.into_inner()?.flush()?,
        }
        Ok(())
    }
}

/// Evaluates `check` at every point on worker threads and writes the
/// reports in grid order, one chunk at a time. The output is opened only
/// after the first chunk succeeds.
fn sweep<F>(cfg: &RunConfig, args: &PointArgs, n: usize, check: F) -> Result<bool>
where
    F: Fn(&PolydiskPoint) -> Result<Vec<BoundReport>> + Sync,
{
    let points = points(args, n)?;
    let workers = thread::available_parallelism().map_or(1, |w| w.get());
    let chunk = 64 * workers;
    let mut sink: Option<Sink> = None;
    let (mut total, mut failed) = (0, 0);
    for block in points.chunks(chunk) {
        let per_worker = block.len().div_ceil(workers);
        let results: Vec<Result<Vec<BoundReport>>> = thread::scope(|s| {
            let handles: Vec<_> = block
                .chunks(per_worker)
                .map(|part| s.spawn(|| part.iter().map(&check).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        for reports in results {
            let reports = reports?;
            let sink = match &mut sink {
                Some(s) => s,
                None => {
                    let w = open(cfg.global.out.as_deref())?;
                    sink.insert(if args.csv {
                        Sink::Csv(Box::new(SweepCsvWriter::new(w, n)?))
                    } else {
                        Sink::Json(JsonLinesWriter::new(w))
                    })
                }
            };
            for r in &reports {
                sink.write(r)?;
                total += 1;
                failed += usize::from(!r.pass);
            }
        }
    }
    if let Some(s) = sink {
        s.finish()?;
    }
    summarize(cfg, total, failed);
    Ok(failed == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_layout() {
        let pts = grid_points(2, 3, 0.9).unwrap();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0].coords(), &[Complex64::new(0.0, 0.0); 2]);
        assert_eq!(pts[1].coords()[0], Complex64::new(0.0, 0.0));
        assert!((pts[1].coords()[1].norm() - 0.45).abs() < 1e-15);
        assert!((pts[8].inf_norm() - 0.9).abs() < 1e-15);
        assert!((pts[8].coords()[0].arg() - TAU * 2.0 / 3.0 + TAU).abs() < 1e-12);
        assert_eq!(grid_points(3, 1, 0.5).unwrap().len(), 1);
        assert!(grid_points(1, 0, 0.5).is_err());
        assert!(grid_points(1, 3, 1.0).is_err());
    }
}
