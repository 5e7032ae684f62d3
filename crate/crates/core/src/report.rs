//! Per-n analysis pipeline and the CSV datasets produced from it.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::axial::AxialGeometry;
use crate::error::{Error, Result};
use crate::graph::PartitionGraph;
use crate::invariants::{profiles, InvariantId, InvariantProfile};

/// Placeholder written in every cell that is undefined for an axisless `n`.
pub const UNDEFINED: &str = "--";

/// Largest `n` for which reference tables exist.
pub const GOLDEN_MAX_N: u32 = 30;

pub const BASIC_AXIAL_FILE: &str = "basic_axial.csv";
pub const EXTREMAL_LOCATION_FILE: &str = "extremal_location.csv";
pub const SHELLS_FILE: &str = "shells.csv";
pub const MANIFEST_FILE: &str = "manifest.json";

const BASIC_AXIAL_HEADER: [&str; 9] = [
    "n",
    "p_n",
    "axial",
    "a_n",
    "sigma_n",
    "c1_n",
    "a_over_p",
    "sigma_over_p",
    "c1_over_p",
];
const EXTREMAL_HEADER: [&str; 7] = [
    "n",
    "invariant",
    "max",
    "argmax_size",
    "argmax_axis_count",
    "rho_ax",
    "rho_sp",
];
const SHELLS_HEADER: [&str; 4] = ["n", "kind", "k", "count"];

/// Graph, axial geometry and invariant profiles for one `n`.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: PartitionGraph,
    pub geometry: AxialGeometry,
    /// In [`InvariantId::ALL`] order.
    pub profiles: Vec<InvariantProfile>,
}

impl Analysis {
    pub fn run(n: u32) -> Result<Self> {
        let graph = PartitionGraph::build(n)?;
        let geometry = AxialGeometry::compute(&graph);
        let profiles = profiles(&graph, &geometry);
        Ok(Self {
            graph,
            geometry,
            profiles,
        })
    }

    pub fn n(&self) -> u32 {
        self.graph.n()
    }

    pub fn profile(&self, id: InvariantId) -> &InvariantProfile {
        self.profiles
            .iter()
            .find(|p| p.invariant == id)
            .expect("all invariants profiled")
    }

    pub fn basic_axial_row(&self) -> BasicAxialRow {
        let geom = &self.geometry;
        BasicAxialRow {
            n: self.n(),
            p_n: self.graph.vertex_count(),
            a_n: geom.axis_size(),
            sigma_n: geom.spine_size().ok(),
            c1_n: geom.central_region_size(1).ok(),
        }
    }

    pub fn extremal_row(&self, id: InvariantId) -> ExtremalRow {
        let p = self.profile(id);
        ExtremalRow {
            n: self.n(),
            invariant: id,
            max: p.max_value,
            argmax_size: p.argmax.len(),
            argmax_axis_count: p.argmax_axis_count,
            rho_ax: p.rho_ax,
            rho_sp: p.rho_sp,
        }
    }

    /// Axial shells then spinal shells; empty for an axisless `n`.
    pub fn shell_rows(&self) -> Vec<ShellRow> {
        let Ok(shells) = self.geometry.shell_counts() else {
            return Vec::new();
        };
        let rows = |kind: &'static str, counts: Vec<usize>| {
            counts
                .into_iter()
                .enumerate()
                .map(move |(k, count)| ShellRow {
                    n: self.n(),
                    kind,
                    k,
                    count,
                })
        };
        rows("ax", shells.ax).chain(rows("sp", shells.sp)).collect()
    }
}

/// One line of `basic_axial.csv`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasicAxialRow {
    pub n: u32,
    pub p_n: usize,
    pub a_n: usize,
    pub sigma_n: Option<usize>,
    pub c1_n: Option<usize>,
}

impl BasicAxialRow {
    pub fn axial(&self) -> bool {
        self.a_n > 0
    }

    pub fn record(&self) -> Vec<String> {
        let opt = |x: Option<usize>| x.map_or_else(|| UNDEFINED.to_string(), |v| v.to_string());
        let opt_ratio =
            |x: Option<usize>| x.map_or_else(|| UNDEFINED.to_string(), |v| ratio4(v, self.p_n));
        vec![
            self.n.to_string(),
            self.p_n.to_string(),
            if self.axial() { "yes" } else { "no" }.to_string(),
            self.a_n.to_string(),
            opt(self.sigma_n),
            opt(self.c1_n),
            ratio4(self.a_n, self.p_n),
            opt_ratio(self.sigma_n),
            opt_ratio(self.c1_n),
        ]
    }
}

/// One line of `extremal_location.csv`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalRow {
    pub n: u32,
    pub invariant: InvariantId,
    pub max: u32,
    pub argmax_size: usize,
    pub argmax_axis_count: Option<usize>,
    pub rho_ax: Option<u32>,
    pub rho_sp: Option<u32>,
}

impl ExtremalRow {
    pub fn record(&self) -> Vec<String> {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map_or_else(|| UNDEFINED.to_string(), |v| v.to_string())
        }
        vec![
            self.n.to_string(),
            self.invariant.to_string(),
            self.max.to_string(),
            self.argmax_size.to_string(),
            opt(self.argmax_axis_count),
            opt(self.rho_ax),
            opt(self.rho_sp),
        ]
    }
}

/// One line of `shells.csv`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShellRow {
    pub n: u32,
    pub kind: &'static str,
    pub k: usize,
    pub count: usize,
}

impl ShellRow {
    pub fn record(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.kind.to_string(),
            self.k.to_string(),
            self.count.to_string(),
        ]
    }
}

/// `num / den` rounded half-up to four decimals.
pub fn ratio4(num: usize, den: usize) -> String {
    assert!(den > 0, "ratio with zero denominator");
    let (num, den) = (num as u128, den as u128);
    let scaled = (num * 20_000 + den) / (2 * den);
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

fn render_csv<I>(header: &[&str], records: I) -> Result<String>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for r in records {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

pub fn render_basic_axial(analyses: &[Analysis]) -> Result<String> {
    render_csv(
        &BASIC_AXIAL_HEADER,
        analyses.iter().map(|a| a.basic_axial_row().record()),
    )
}

/// Grouped by invariant, ascending `n` within each block.
pub fn render_extremal_location(analyses: &[Analysis]) -> Result<String> {
    let rows = InvariantId::ALL
        .into_iter()
        .flat_map(|id| analyses.iter().map(move |a| a.extremal_row(id).record()));
    render_csv(&EXTREMAL_HEADER, rows)
}

pub fn render_shells(analyses: &[Analysis]) -> Result<String> {
    render_csv(
        &SHELLS_HEADER,
        analyses
            .iter()
            .flat_map(|a| a.shell_rows())
            .map(|r| r.record()),
    )
}

/// Runs the pipeline for every `n` in `n_min..=n_max` concurrently and returns
/// the analyses sorted by `n` together with per-n wall times in milliseconds.
pub fn analyze_range(n_min: u32, n_max: u32) -> Result<Vec<(Analysis, f64)>> {
    validate_range(n_min, n_max)?;
    let mut out = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let start = Instant::now();
            let a = Analysis::run(n)?;
            Ok((a, start.elapsed().as_secs_f64() * 1e3))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|(a, _)| a.n());
    Ok(out)
}

pub fn validate_range(n_min: u32, n_max: u32) -> Result<()> {
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= n_min <= n_max, got n_min = {n_min}, n_max = {n_max}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub n_min: u32,
    pub n_max: u32,
    pub out_dir: PathBuf,
}

#[derive(Clone, Debug, Serialize)]
pub struct FileChecksum {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WallTime {
    pub n: u32,
    pub millis: f64,
}

/// Provenance record written next to the CSV files.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub n_min: u32,
    pub n_max: u32,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub tool_version: String,
    pub wall_time: Vec<WallTime>,
    pub files: Vec<FileChecksum>,
}

fn write_checked(dir: &Path, name: &str, body: &str) -> Result<FileChecksum> {
    fs::write(dir.join(name), body)?;
    Ok(FileChecksum {
        name: name.to_string(),
        sha256: hex::encode(Sha256::digest(body.as_bytes())),
    })
}

/// Emits `basic_axial.csv`, `extremal_location.csv`, `shells.csv` and
/// `manifest.json` into `opts.out_dir`.
pub fn run_range(opts: &RunOptions) -> Result<RunManifest> {
    let results = analyze_range(opts.n_min, opts.n_max)?;
    let wall_time = results
        .iter()
        .map(|(a, ms)| WallTime {
            n: a.n(),
            millis: *ms,
        })
        .collect();
    let analyses: Vec<Analysis> = results.into_iter().map(|(a, _)| a).collect();

    fs::create_dir_all(&opts.out_dir)?;
    let files = vec![
        write_checked(
            &opts.out_dir,
            BASIC_AXIAL_FILE,
            &render_basic_axial(&analyses)?,
        )?,
        write_checked(
            &opts.out_dir,
            EXTREMAL_LOCATION_FILE,
            &render_extremal_location(&analyses)?,
        )?,
        write_checked(&opts.out_dir, SHELLS_FILE, &render_shells(&analyses)?)?,
    ];
    let manifest = RunManifest {
        n_min: opts.n_min,
        n_max: opts.n_max,
        timestamp: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time,
        files,
    };
    fs::write(
        opts.out_dir.join(MANIFEST_FILE),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_rounding() {
        assert_eq!(ratio4(1, 7), "0.1429");
        assert_eq!(ratio4(5, 7), "0.7143");
        assert_eq!(ratio4(1, 1), "1.0000");
        assert_eq!(ratio4(0, 2), "0.0000");
        // Exact half rounds up.
        assert_eq!(ratio4(1, 20_000), "0.0001");
        assert_eq!(ratio4(3, 20_000), "0.0002");
    }

    #[test]
    fn rows_for_known_n() {
        let a8 = Analysis::run(8).unwrap();
        assert_eq!(
            a8.basic_axial_row().record().join(","),
            "8,22,yes,2,6,10,0.0909,0.2727,0.4545"
        );
        let a2 = Analysis::run(2).unwrap();
        assert_eq!(
            a2.basic_axial_row().record().join(","),
            "2,2,no,0,--,--,0.0000,--,--"
        );
        assert_eq!(
            a2.extremal_row(InvariantId::Deg).record().join(","),
            "2,deg,1,2,--,--,--"
        );
        assert!(a2.shell_rows().is_empty());
        let a14 = Analysis::run(14).unwrap();
        assert_eq!(
            a14.extremal_row(InvariantId::Deg).record().join(","),
            "14,deg,15,2,0,1,0"
        );
    }

    #[test]
    fn shell_rows_sum_to_p() {
        let a = Analysis::run(9).unwrap();
        let rows = a.shell_rows();
        for kind in ["ax", "sp"] {
            let total: usize = rows
                .iter()
                .filter(|r| r.kind == kind)
                .map(|r| r.count)
                .sum();
            assert_eq!(total, 30);
        }
    }

    #[test]
    fn extremal_grouped_by_invariant() {
        let analyses: Vec<Analysis> = analyze_range(1, 3)
            .unwrap()
            .into_iter()
            .map(|(a, _)| a)
            .collect();
        let csv = render_extremal_location(&analyses).unwrap();
        let keys: Vec<String> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').take(2).collect::<Vec<_>>().join(","))
            .collect();
        assert_eq!(
            keys,
            [
                "1,deg",
                "2,deg",
                "3,deg",
                "1,omega_loc",
                "2,omega_loc",
                "3,omega_loc",
                "1,dim_loc",
                "2,dim_loc",
                "3,dim_loc"
            ]
        );
        assert!(csv.starts_with("n,invariant,max,argmax_size,argmax_axis_count,rho_ax,rho_sp\n"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn invalid_ranges() {
        assert!(validate_range(0, 3).is_err());
        assert!(validate_range(5, 4).is_err());
        assert!(validate_range(4, 4).is_ok());
    }

    #[test]
    fn run_range_writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let opts = RunOptions {
            n_min: 1,
            n_max: 6,
            out_dir: dir.path().to_path_buf(),
        };
        let manifest = run_range(&opts).unwrap();
        assert_eq!(manifest.files.len(), 3);
        for f in &manifest.files {
            let body = fs::read(dir.path().join(&f.name)).unwrap();
            assert_eq!(hex::encode(Sha256::digest(&body)), f.sha256);
        }
        assert!(dir.path().join(MANIFEST_FILE).exists());
        assert_eq!(
            manifest.wall_time.iter().map(|w| w.n).collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5, 6]
        );
    }
}
