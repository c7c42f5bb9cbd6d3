//! Serialized report records. Field order here is the on-disk order; renaming or
//! reordering a field is a schema change and needs a `SCHEMA_VERSION` bump.

use serde::{Deserialize, Serialize};
use starlike_core::{BoundaryScan, ConclusionReport, HypothesisReport, JackProbe};

/// Bumped whenever a field or column is added, removed, renamed or reordered.
pub const SCHEMA_VERSION: &str = "1";

pub const SWEEP_HEADER: &str = "beta,bound,extreme_re_p,margin,max_abs_w,order_estimate";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Version {
    pub tool: String,
    pub schema: String,
}

impl Version {
    pub fn current() -> Self {
        Self {
            tool: env!("CARGO_PKG_VERSION").to_string(),
            schema: SCHEMA_VERSION.to_string(),
        }
    }
}

/// Everything that determines the numbers in a report. Thread count and
/// output path are deliberately absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: String,
    pub theorem: u8,
    pub family: String,
    pub beta: f64,
    pub radii: Vec<f64>,
    pub angles: usize,
    pub schwarz_tol: f64,
    pub order_tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusExtremeRecord {
    pub r: f64,
    pub extreme: f64,
    pub witness_re: f64,
    pub witness_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisRecord {
    pub bound: f64,
    pub per_radius: Vec<RadiusExtremeRecord>,
    pub satisfied: bool,
    pub margin_at_rmax: f64,
}

impl From<&HypothesisReport> for HypothesisRecord {
    fn from(h: &HypothesisReport) -> Self {
        Self {
            bound: h.bound,
            per_radius: h
                .per_radius
                .iter()
                .map(|e| RadiusExtremeRecord {
                    r: e.r,
                    extreme: e.extreme,
                    witness_re: e.witness.re,
                    witness_im: e.witness.im,
                })
                .collect(),
            satisfied: h.satisfied,
            margin_at_rmax: h.margin_at_rmax,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusConclusionRecord {
    pub r: f64,
    pub max_abs_w: f64,
    pub schwarz_ratio: f64,
    /// Only for the disk-shaped conclusion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disk_slack: Option<f64>,
    pub min_re_q: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConclusionRecord {
    pub per_radius: Vec<RadiusConclusionRecord>,
    pub order_estimate: f64,
    pub w_origin_abs: f64,
}

impl From<&ConclusionReport> for ConclusionRecord {
    fn from(c: &ConclusionReport) -> Self {
        Self {
            per_radius: c
                .per_radius
                .iter()
                .map(|rc| RadiusConclusionRecord {
                    r: rc.r,
                    max_abs_w: rc.max_abs_w,
                    schwarz_ratio: rc.schwarz_ratio,
                    disk_slack: rc.disk_slack,
                    min_re_q: rc.min_re_q,
                })
                .collect(),
            order_estimate: c.order_estimate,
            w_origin_abs: c.w_origin.norm(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PassFlags {
    pub hypothesis: bool,
    pub conclusion: bool,
    pub overall: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub version: Version,
    pub config: ConfigEcho,
    pub hypothesis: HypothesisRecord,
    pub conclusion: ConclusionRecord,
    pub pass: PassFlags,
    /// `null` unless timing was requested, so that reruns are byte-identical.
    pub duration_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub beta: f64,
    pub bound: f64,
    pub extreme_re_p: f64,
    pub margin: f64,
    pub max_abs_w: f64,
    pub order_estimate: f64,
}

/// Verify's per-radius table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusRow {
    pub r: f64,
    pub extreme_re_p: f64,
    pub witness_re: f64,
    pub witness_im: f64,
    pub max_abs_w: f64,
    pub schwarz_ratio: f64,
    pub disk_slack: Option<f64>,
    pub min_re_q: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JackRecord {
    pub version: Version,
    pub w: String,
    pub r: f64,
    pub angles: usize,
    pub theta_star: f64,
    pub w_at_max_re: f64,
    pub w_at_max_im: f64,
    pub ratio_re: f64,
    pub ratio_im: f64,
    pub k_estimate: f64,
    pub tol: f64,
    pub holds: bool,
}

impl JackRecord {
    pub fn new(w: String, angles: usize, tol: f64, probe: &JackProbe) -> Self {
        Self {
            version: Version::current(),
            w,
            r: probe.r,
            angles,
            theta_star: probe.theta_star,
            w_at_max_re: probe.w_at_max.re,
            w_at_max_im: probe.w_at_max.im,
            ratio_re: probe.ratio.re,
            ratio_im: probe.ratio.im,
            k_estimate: probe.k_estimate,
            tol,
            holds: probe.holds(tol),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProofScanRecord {
    pub version: Version,
    pub theorem: u8,
    pub beta: f64,
    pub theta_samples: usize,
    pub k: f64,
    pub extremal_value: f64,
    pub theta_star: f64,
    pub bound: f64,
    pub difference: f64,
    pub pass: bool,
}

impl ProofScanRecord {
    pub fn new(theorem: u8, beta: f64, scan: &BoundaryScan, bound: f64, tol: f64) -> Self {
        let difference = (scan.extremal_value - bound).abs();
        Self {
            version: Version::current(),
            theorem,
            beta,
            theta_samples: scan.theta_samples,
            k: scan.k,
            extremal_value: scan.extremal_value,
            theta_star: scan.theta_star,
            bound,
            difference,
            pass: difference <= tol,
        }
    }
}

/// Pretty JSON with a trailing newline. Floats use the shortest representation
/// that parses back to the same bits.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> csv::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}
