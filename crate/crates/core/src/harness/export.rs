use super::SweepRecord;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;

pub const CSV_HEADER: &str = "eps,d,omega_theta,asym_lo,asym_hi,mp_lo,mp_hi,err_lo,err_hi,legacy_hi,status";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    Csv,
    Json,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn cell(x: Option<f64>) -> String {
    x.map(format_f64).unwrap_or_default()
}

pub fn to_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let cells = [
            format_f64(r.eps),
            format_f64(r.d),
            format_f64(r.omega_theta),
            cell(r.asym_lo),
            cell(r.asym_hi),
            cell(r.mp_lo),
            cell(r.mp_hi),
            cell(r.err_lo),
            cell(r.err_hi),
            cell(r.legacy_hi),
            r.status.clone(),
        ];
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(records: &[SweepRecord]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(records).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Writes to `dest`, or to stdout when `None`.
pub fn export(records: &[SweepRecord], format: Format, dest: Option<&Path>) -> Result<()> {
    if records.is_empty() {
        return Err(Error::InvalidInput("nothing to export".into()));
    }
    let text = match format {
        Format::Csv => to_csv(records),
        Format::Json => to_json(records)?,
    };
    match dest {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> SweepRecord {
        SweepRecord {
            eps: 1e-3,
            d: 0.5,
            omega_theta: 1.841_183_781_340_659_3,
            asym_lo: Some(1.841_183_781_340_659_3),
            asym_hi: Some(1.0 / 3.0 + 1.8),
            mp_lo: None,
            mp_hi: None,
            err_lo: None,
            err_hi: None,
            legacy_hi: Some(2.0),
            status: "mp_skipped".into(),
            messages: vec!["not exported".into()],
        }
    }

    #[test]
    fn header_is_stable() {
        assert_eq!(CSV_HEADER, "eps,d,omega_theta,asym_lo,asym_hi,mp_lo,mp_hi,err_lo,err_hi,legacy_hi,status");
    }

    #[test]
    fn one_record_two_lines() {
        let csv = to_csv(&[record()]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], CSV_HEADER);
        let cells: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(cells.len(), 11);
        assert_eq!(&cells[5..9], &["", "", "", ""]);
        assert_eq!(cells[10], "mp_skipped");
        assert_eq!(cells[0], "1.0000000000000000e-3");
        for c in &cells[..5] {
            assert_eq!(format_f64(c.parse::<f64>().unwrap()), *c);
        }
        assert_eq!(cells[4].parse::<f64>().unwrap(), record().asym_hi.unwrap());
    }

    #[test]
    fn json_round_trip() {
        let json = to_json(&[record()]).unwrap();
        let back: Vec<SweepRecord> = serde_json::from_str(&json).unwrap();
        let mut want = record();
        want.messages.clear();
        assert_eq!(back, vec![want]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<&String> = v[0].as_object().unwrap().keys().collect();
        let header: Vec<&str> = CSV_HEADER.split(',').collect();
        assert_eq!(keys.len(), header.len());
        assert!(header.iter().all(|h| v[0].get(h).is_some()));
    }

    #[test]
    fn empty_export_is_rejected() {
        assert!(export(&[], Format::Csv, None).is_err());
    }
}
