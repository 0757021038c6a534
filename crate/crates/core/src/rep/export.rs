use serde::Serialize;

use super::{dimension, gram_matrix, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub m: u32,
    /// `(l, dim S_l(2m))` over `Λ^φ_m`.
    pub dims: Vec<(i64, u64)>,
    pub algebra_dim: u64,
}

/// `dim S_l(2m)` for `m = 0..=max_m`.
pub fn dimension_table(max_m: u32) -> Result<Vec<DimensionRow>> {
    (0..=max_m)
        .map(|m| {
            let dims: Vec<(i64, u64)> =
                Weight::all(m).iter().map(|w| Ok((w.value(), dimension(m, w.value())?))).collect::<Result<_>>()?;
            let algebra_dim = dims.iter().map(|(_, d)| d * d).sum();
            Ok(DimensionRow { m, dims, algebra_dim })
        })
        .collect()
}

/// The table as CSV: one row per `m`, one column per weight, blank outside
/// `Λ^φ_m`.
pub fn dimension_table_csv(max_m: u32) -> Result<String> {
    let table = dimension_table(max_m)?;
    let lo = -(max_m as i64);
    let hi = max_m as i64 - 1;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["m".to_string()];
    header.extend((lo..=hi.max(0)).map(|l| format!("l={l}")));
    header.push("total".into());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(&header).map_err(io)?;
    for row in &table {
        let mut rec = vec![row.m.to_string()];
        for l in lo..=hi.max(0) {
            rec.push(row.dims.iter().find(|(k, _)| *k == l).map(|(_, d)| d.to_string()).unwrap_or_default());
        }
        rec.push(row.algebra_dim.to_string());
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn dimension_table_json(max_m: u32) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(dimension_table(max_m)?).expect("plain data"))
}

pub fn gram_report_json(m: u32, l: i64) -> Result<serde_json::Value> {
    Ok(gram_matrix(m, l)?.to_json())
}

/// Gram matrix entries as CSV, with row and column labels.
pub fn gram_matrix_csv(m: u32, l: i64) -> Result<String> {
    let r = gram_matrix(m, l)?;
    let io = |e: csv::Error| Error::Parse(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(r.basis.iter().map(|t| t.to_string()));
    w.write_record(&header).map_err(io)?;
    for (t, row) in r.basis.iter().zip(&r.matrix) {
        let mut rec = vec![t.to_string()];
        rec.extend(row.iter().map(|p| p.to_string()));
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows() {
        let s = dimension_table_csv(2).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "m,l=-2,l=-1,l=0,l=1,total");
        assert_eq!(lines[1], "0,,,1,,1");
        assert_eq!(lines[2], "1,,1,2,,5");
        assert_eq!(lines[3], "2,1,1,4,1,19");
    }

    #[test]
    fn gram_json_has_factors() {
        let j = gram_report_json(3, -1).unwrap();
        assert_eq!(j["dimension"], 4);
        assert!(j["factors"].as_array().unwrap().iter().any(|f| f[0] == "K3"));
    }
}
