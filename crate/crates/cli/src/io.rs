//! Instance and solution files.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use geodesic_two_center::driver::TwoCenterSolution;
use geodesic_two_center::Point2;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub polygon: Vec<[f64; 2]>,
    pub points: Vec<[f64; 2]>,
}

impl Instance {
    pub fn polygon_points(&self) -> Vec<Point2> {
        self.polygon.iter().map(|&[x, y]| Point2::new(x, y)).collect()
    }

    pub fn query_points(&self) -> Vec<Point2> {
        self.points.iter().map(|&[x, y]| Point2::new(x, y)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub radius: f64,
    pub centers: [[f64; 2]; 2],
    /// Extreme positions of the partition pair; absent when the points
    /// collapse to a single location.
    pub pair: Option<[usize; 2]>,
    pub assignment: Vec<u8>,
    pub branch_stats: BTreeMap<String, u64>,
}

impl SolutionRecord {
    pub fn from_solution(s: &TwoCenterSolution) -> Self {
        SolutionRecord {
            radius: s.radius,
            centers: [[s.c1.x, s.c1.y], [s.c2.x, s.c2.y]],
            pair: s.pair.map(|p| [p.i, p.j]),
            assignment: s.assignment.clone(),
            branch_stats: s.stats.branches.iter().map(|(b, n)| (b.name().to_string(), *n)).collect(),
        }
    }

    pub fn center_points(&self) -> (Point2, Point2) {
        let [[x1, y1], [x2, y2]] = self.centers;
        (Point2::new(x1, y1), Point2::new(x2, y2))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Pretty JSON with a trailing newline. Floats are written in their
/// shortest round-trip form, so parsing restores them exactly.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes to `out`, or standard output when absent.
pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
