//! Rendering and atomic writing of search reports.
//!
//! The JSON document is the source of truth; the CSV and the table are
//! renderings of the same records. Column order is fixed: n, m, l,
//! distance2, graph_code, dist3_candidate, dist3_confirmed, with the
//! weight set joined by `+`.

use std::io::Write;
use std::path::Path;

use hypercode::search::SearchRecord;

use crate::Failure;

pub const SCHEMA_VERSION: u32 = 1;

pub struct SearchReport {
    pub command: &'static str,
    pub n_min: usize,
    pub n_max: usize,
    pub exclude_graph_codes: bool,
    pub dist3_filter: bool,
    pub records: Vec<SearchRecord>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        let document = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "exclude_graph_codes": self.exclude_graph_codes,
            "dist3_filter": self.dist3_filter,
            "records": self.records,
        });
        let mut text = serde_json::to_string_pretty(&document).expect("serializable report");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> String {
        let mut text = format!("# schema_version={SCHEMA_VERSION}\n");
        text.push_str("n,m,l,distance2,graph_code,dist3_candidate,dist3_confirmed\n");
        for record in &self.records {
            text.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                record.n,
                join_weights(&record.m),
                record.l,
                record.distance2,
                record.graph_code,
                record.dist3_candidate,
                record.dist3_confirmed,
            ));
        }
        text
    }

    pub fn to_table(&self) -> String {
        let mut text = format!(
            "{:>3}  {:<24} {:>3}  {:>9}  {:>5}  {:>10}  {:>10}\n",
            "n", "m", "l", "distance2", "graph", "dist3_cand", "dist3_conf"
        );
        for record in &self.records {
            text.push_str(&format!(
                "{:>3}  {:<24} {:>3}  {:>9}  {:>5}  {:>10}  {:>10}\n",
                record.n,
                join_weights(&record.m),
                record.l,
                record.distance2,
                record.graph_code,
                record.dist3_candidate,
                record.dist3_confirmed,
            ));
        }
        text.push_str(&format!("{} records\n", self.records.len()));
        text
    }
}

fn join_weights(weights: &[usize]) -> String {
    weights
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

/// Write through a temporary file in the same directory and rename, so a
/// failed run never leaves a partial report behind.
pub fn write_atomically(path: &Path, contents: &str) -> Result<(), Failure> {
    let directory = path.parent().filter(|p| !p.as_os_str().is_empty());
    let file_name = path
        .file_name()
        .ok_or_else(|| Failure::new(format!("invalid output path {}", path.display())))?;
    let mut temp = std::path::PathBuf::from(directory.unwrap_or(Path::new(".")));
    temp.push(format!(
        ".{}.tmp-{}",
        file_name.to_string_lossy(),
        std::process::id()
    ));
    let result = (|| -> std::io::Result<()> {
        let mut file = std::fs::File::create(&temp)?;
        file.write_all(contents.as_bytes())?;
        file.sync_all()?;
        std::fs::rename(&temp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&temp);
    }
    result.map_err(Failure::from)
}
