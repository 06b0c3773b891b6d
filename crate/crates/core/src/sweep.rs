//! Parameter sweeps: one entropy run per grid point, written as CSV in grid order.

use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use std::io::Write;
use std::str::FromStr;

use crate::decimal::{decimal_places, format_decimal, parse_rational, to_f64};
use crate::entropy::{run_with, RunConfig};
use crate::error::{Error, Result};
use crate::maps::MapModel;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "MMENTROPY_THREADS";

/// `name=start:stop:step`, all exact decimals.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepAxis {
    pub name: String,
    pub start: BigRational,
    pub stop: BigRational,
    pub step: BigRational,
    places: Option<usize>,
}

impl SweepAxis {
    pub fn new(name: &str, start: BigRational, stop: BigRational, step: BigRational) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::Parameter(format!("sweep step for {name} must be positive")));
        }
        let places = [&start, &stop, &step]
            .into_iter()
            .map(decimal_places)
            .try_fold(0usize, |acc, p| p.map(|p| acc.max(p)));
        Ok(Self { name: name.to_string(), start, stop, step, places })
    }

    /// `start + k step` for `k = 0, 1, ...` while not past `stop`; empty when `start > stop`.
    pub fn values(&self) -> Vec<BigRational> {
        let mut out = Vec::new();
        let mut v = self.start.clone();
        while v <= self.stop {
            out.push(v.clone());
            v += &self.step;
        }
        out
    }

    /// Writes a grid value with the precision of the axis definition.
    pub fn format(&self, v: &BigRational) -> String {
        match self.places {
            Some(p) => format_decimal(v, p),
            None => format!("{}", to_f64(v)),
        }
    }
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parameter(format!("sweep axis must look like name=start:stop:step, got {s:?}"));
        let (name, range) = s.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        if name.trim().is_empty() || parts.len() != 3 {
            return Err(bad());
        }
        SweepAxis::new(
            name.trim(),
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }
}

/// Thread pool sized by `MMENTROPY_THREADS` when set, else rayon's default.
pub fn thread_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
        builder = builder.num_threads(n.max(1));
    }
    builder.build().map_err(|e| Error::Parameter(e.to_string()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub params: Vec<String>,
    /// `None` when the parameters give an invalid map or the run failed.
    pub h: Option<f64>,
    pub loops: Option<usize>,
    pub converged: Option<bool>,
}

impl SweepRow {
    fn record(&self) -> Vec<String> {
        let mut r = self.params.clone();
        r.push(self.h.map(|h| format!("{h:.6}")).unwrap_or_default());
        r.push(self.loops.map(|n| n.to_string()).unwrap_or_default());
        r.push(match self.converged {
            Some(c) => c.to_string(),
            None => "invalid".to_string(),
        });
        r
    }
}

/// Cartesian grid over up to two axes, first axis outermost.
pub fn grid(axes: &[SweepAxis]) -> Result<Vec<Vec<BigRational>>> {
    match axes.len() {
        1 => Ok(axes[0].values().into_iter().map(|v| vec![v]).collect()),
        2 => {
            let inner = axes[1].values();
            Ok(axes[0]
                .values()
                .into_iter()
                .flat_map(|a| inner.iter().map(move |b| vec![a.clone(), b.clone()]))
                .collect())
        }
        n => Err(Error::Parameter(format!("a sweep takes one or two axes, got {n}"))),
    }
}

/// Runs the sweep and writes `params..., h, loops, converged` rows to `out`, flushing after
/// every chunk so an interrupted sweep leaves a valid prefix.
pub fn run_sweep<F, W>(axes: &[SweepAxis], build: F, config: &RunConfig, out: W) -> Result<usize>
where
    F: Fn(&[f64]) -> Result<MapModel> + Sync,
    W: Write,
{
    let points = grid(axes)?;
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| Error::Parameter(format!("writing CSV: {e}"));
    let mut header: Vec<&str> = axes.iter().map(|a| a.name.as_str()).collect();
    header.extend(["h", "loops", "converged"]);
    writer.write_record(&header).map_err(io)?;
    writer.flush().map_err(|e| Error::Parameter(format!("writing CSV: {e}")))?;

    let pool = thread_pool()?;
    let chunk = 64 * pool.current_num_threads();
    for block in points.chunks(chunk) {
        let rows: Vec<SweepRow> = pool.install(|| {
            block
                .par_iter()
                .map(|p| {
                    let params = p.iter().zip(axes).map(|(v, a)| a.format(v)).collect();
                    let reals: Vec<f64> = p.iter().map(to_f64).collect();
                    match build(&reals).and_then(|m| run_with(&m, config)) {
                        Ok(out) => SweepRow {
                            params,
                            h: Some(out.estimate.value),
                            loops: Some(out.estimate.loops),
                            converged: Some(out.estimate.converged),
                        },
                        Err(_) => SweepRow { params, h: None, loops: None, converged: None },
                    }
                })
                .collect()
        });
        for row in &rows {
            writer.write_record(row.record()).map_err(io)?;
        }
        writer.flush().map_err(|e| Error::Parameter(format!("writing CSV: {e}")))?;
    }
    Ok(points.len())
}
