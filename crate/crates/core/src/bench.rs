//! Benchmark tables: the five reference maps at `eps = 1e-4 .. 1e-7` against published values.

use serde::Serialize;
use std::time::Instant;

use crate::entropy::{run_with, RunConfig, Unit};
use crate::error::{Error, Result};
use crate::maps::{make_bimodal_cubic, make_gaussian, make_pl4, make_pl5, make_trimodal_quartic, MapModel};

/// Published `(eps, h, loops, seconds)` rows.
pub type PublishedRow = (f64, f64, usize, f64);

pub struct BenchTable {
    pub id: u8,
    pub map: fn() -> MapModel,
    pub unit: Unit,
    pub published: [PublishedRow; 4],
}

fn gaussian() -> MapModel {
    make_gaussian(2.8, -0.5).expect("valid parameters")
}

fn cubic() -> MapModel {
    make_bimodal_cubic(0.9, 0.1).expect("valid parameters")
}

fn quartic() -> MapModel {
    make_trimodal_quartic(0.7, 1.0).expect("valid parameters")
}

pub const TABLES: [BenchTable; 5] = [
    BenchTable {
        id: 1,
        map: gaussian,
        unit: Unit::Nats,
        published: [
            (1e-4, 0.534106, 101, 0.021248),
            (1e-5, 0.527305, 318, 0.193149),
            (1e-6, 0.525142, 1004, 1.912784),
            (1e-7, 0.524456, 3174, 18.900032),
        ],
    },
    BenchTable {
        id: 2,
        map: cubic,
        unit: Unit::Bits,
        published: [
            (1e-4, 0.622100, 218, 0.253133),
            (1e-5, 0.607310, 688, 2.485049),
            (1e-6, 0.602622, 2173, 24.890648),
            (1e-7, 0.601137, 6871, 265.198039),
        ],
    },
    BenchTable {
        id: 3,
        map: quartic,
        unit: Unit::Bits,
        published: [
            (1e-4, 0.711709, 177, 0.351586),
            (1e-5, 0.699793, 557, 3.448455),
            (1e-6, 0.696000, 1759, 34.853025),
            (1e-7, 0.694798, 5561, 368.900286),
        ],
    },
    BenchTable {
        id: 4,
        map: make_pl4,
        unit: Unit::Nats,
        published: [
            (1e-4, 0.422215, 169, 0.576800),
            (1e-5, 0.410776, 533, 5.747668),
            (1e-6, 0.407147, 1683, 57.951979),
            (1e-7, 0.405997, 5321, 616.59469),
        ],
    },
    BenchTable {
        id: 5,
        map: make_pl5,
        unit: Unit::Nats,
        published: [
            (1e-4, 0.420542, 152, 0.644305),
            (1e-5, 0.410239, 480, 6.501711),
            (1e-6, 0.406978, 1515, 65.307619),
            (1e-7, 0.405944, 4788, 695.24749),
        ],
    },
];

pub fn table(id: u8) -> Result<&'static BenchTable> {
    TABLES
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::Parameter(format!("no benchmark table {id}; expected 1..=5")))
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub eps: f64,
    pub h: f64,
    pub loops: usize,
    pub converged: bool,
    pub elapsed_ms: f64,
    pub published_h: f64,
    pub published_loops: usize,
    pub published_seconds: f64,
    pub dh: f64,
    pub dloops: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub table: u8,
    pub map: String,
    pub unit: Unit,
    pub rows: Vec<BenchRow>,
}

/// Runs the rows of table `id` whose `eps >= min_eps`.
pub fn run_table(id: u8, min_eps: f64) -> Result<BenchReport> {
    let t = table(id)?;
    let map = (t.map)();
    let mut rows = Vec::new();
    for &(eps, published_h, published_loops, published_seconds) in &t.published {
        if eps < min_eps * (1.0 - 1e-9) {
            continue;
        }
        let start = Instant::now();
        let est = run_with(&map, &RunConfig::new(eps, t.unit))?.estimate;
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRow {
            eps,
            h: est.value,
            loops: est.loops,
            converged: est.converged,
            elapsed_ms,
            published_h,
            published_loops,
            published_seconds,
            dh: est.value - published_h,
            dloops: est.loops as i64 - published_loops as i64,
        });
    }
    Ok(BenchReport { table: id, map: map.label().to_string(), unit: t.unit, rows })
}

impl BenchReport {
    /// Fixed-width text table.
    pub fn render(&self) -> String {
        let mut out = format!("table {}: {} [{}]\n", self.table, self.map, self.unit);
        out.push_str(&format!(
            "{:>7} {:>9} {:>6} {:>10} | {:>9} {:>6} {:>10} | {:>10} {:>6}\n",
            "eps", "h", "n", "t (s)", "h pub", "n pub", "t pub (s)", "dh", "dn"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:>7.0e} {:>9.6} {:>6} {:>10.6} | {:>9.6} {:>6} {:>10.6} | {:>10.2e} {:>+6}\n",
                r.eps,
                r.h,
                r.loops,
                r.elapsed_ms / 1e3,
                r.published_h,
                r.published_loops,
                r.published_seconds,
                r.dh,
                r.dloops
            ));
        }
        out
    }
}
