//! Reading priming datasets: prime/target word pairs with an observed
//! priming effect in milliseconds. The benchmark correlates the effect with
//! encoded-sequence similarity.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimingRecord {
    pub prime: String,
    pub target: String,
    pub priming_ms: f64,
}

/// Reads `prime,target,priming_ms` rows. At least two records are required
/// for a correlation to be defined; malformed rows are reported with their
/// line number.
pub fn read_priming_csv<R: Read>(reader: R) -> Result<Vec<PrimingRecord>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Data(e.to_string()))?.clone();
    let expected = ["prime", "target", "priming_ms"];
    if headers.iter().ne(expected) {
        return Err(Error::Data(format!(
            "expected header prime,target,priming_ms, found {:?}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut records = Vec::new();
    for (i, row) in rdr.deserialize::<PrimingRecord>().enumerate() {
        let lineno = i + 2;
        let rec = row.map_err(|e| Error::Data(format!("line {lineno}: {e}")))?;
        if rec.prime.is_empty() || rec.target.is_empty() {
            return Err(Error::Data(format!("line {lineno}: empty prime or target")));
        }
        if !rec.priming_ms.is_finite() {
            return Err(Error::Data(format!(
                "line {lineno}: priming_ms must be finite, found {}",
                rec.priming_ms
            )));
        }
        records.push(rec);
    }
    if records.len() < 2 {
        return Err(Error::Data(format!(
            "need at least 2 priming records, found {}",
            records.len()
        )));
    }
    Ok(records)
}

pub fn read_priming_file(path: &Path) -> Result<Vec<PrimingRecord>> {
    let file = File::open(path)
        .map_err(|e| Error::Data(format!("cannot open {}: {e}", path.display())))?;
    read_priming_csv(file)
}
