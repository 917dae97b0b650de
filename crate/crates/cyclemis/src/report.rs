//! Rendered reports: the main sequence table and the orbit, composition
//! and chord listings, each in text, CSV and JSON form.
//!
//! CSV needs no quoting (every field is an integer, a bit string, or a
//! dash-joined name). The table's JSON is written by hand so that values
//! wider than 64 bits are emitted as exact JSON integers; `parse_json`
//! reads them back losslessly (serde_json with `arbitrary_precision`).

use crate::compositions::{self, Composition};
use crate::formulas::OrbitFormulas;
use crate::group::Action;
use crate::orbits::{partition, symmetry_axis_count};
use crate::sequences::Seq;
use crate::{chords, compositions::word_to_composition};
use num_bigint::BigInt;
use std::fmt::Write as _;
use std::str::FromStr;

/// Output encoding for every report.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected text, csv or json)")),
        }
    }
}

/// Composition listing flavor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    Linear,
    Cyclic,
    Bracelet,
    Palindromic,
}

impl Flavor {
    fn name(&self) -> &'static str {
        match self {
            Flavor::Linear => "linear",
            Flavor::Cyclic => "cyclic",
            Flavor::Bracelet => "bracelet",
            Flavor::Palindromic => "palindromic",
        }
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Flavor, String> {
        match s {
            "linear" => Ok(Flavor::Linear),
            "cyclic" => Ok(Flavor::Cyclic),
            "bracelet" => Ok(Flavor::Bracelet),
            "palindromic" => Ok(Flavor::Palindromic),
            other => Err(format!(
                "unknown flavor {other:?} (expected linear, cyclic, bracelet or palindromic)"
            )),
        }
    }
}

pub const TABLE_COLUMNS: [&str; 9] = [
    "n", "p", "q", "r", "orb", "orb1", "orb2", "orb_sigma", "orb1_sigma",
];

/// One row of the main sequence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub n: u64,
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub orb: BigInt,
    pub orb1: BigInt,
    pub orb2: BigInt,
    pub orb_sigma: BigInt,
    pub orb1_sigma: BigInt,
}

impl ReportRow {
    fn values(&self) -> [&BigInt; 8] {
        [
            &self.p,
            &self.q,
            &self.r,
            &self.orb,
            &self.orb1,
            &self.orb2,
            &self.orb_sigma,
            &self.orb1_sigma,
        ]
    }
}

/// The table rows for n = 1..=n_max.
pub fn table(n_max: u64) -> Vec<ReportRow> {
    assert!(n_max >= 1, "table extent must be >= 1, got {n_max}");
    let p = Seq::perrin();
    let q = Seq::padovan();
    let r = Seq::r();
    let f = OrbitFormulas::new();
    (1..=n_max)
        .map(|n| ReportRow {
            n,
            p: p.eval(n),
            q: q.eval(n),
            r: r.eval(n),
            orb: f.orb(n),
            orb1: f.orb1(n),
            orb2: f.orb2(n),
            orb_sigma: f.orb_sigma(n),
            orb1_sigma: f.orb1_sigma(n),
        })
        .collect()
}

/// Render the table rows in the requested format.
pub fn render_table(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Text => {
            let mut widths: Vec<usize> = TABLE_COLUMNS.iter().map(|c| c.len()).collect();
            for row in rows {
                widths[0] = widths[0].max(row.n.to_string().len());
                for (i, v) in row.values().iter().enumerate() {
                    widths[i + 1] = widths[i + 1].max(v.to_string().len());
                }
            }
            let mut out = String::new();
            for (i, col) in TABLE_COLUMNS.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                let _ = write!(out, "{:>width$}", col, width = widths[i]);
            }
            out.push('\n');
            for row in rows {
                let _ = write!(out, "{:>width$}", row.n, width = widths[0]);
                for (i, v) in row.values().iter().enumerate() {
                    let _ = write!(out, "  {:>width$}", v, width = widths[i + 1]);
                }
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = TABLE_COLUMNS.join(",");
            out.push('\n');
            for row in rows {
                let _ = write!(out, "{}", row.n);
                for v in row.values() {
                    let _ = write!(out, ",{v}");
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = String::from("{\"rows\":[");
            for (i, row) in rows.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{{\"n\":{}", row.n);
                for (col, v) in TABLE_COLUMNS[1..].iter().zip(row.values()) {
                    let _ = write!(out, ",\"{col}\":{v}");
                }
                out.push('}');
            }
            out.push_str("]}");
            out
        }
    }
}

/// Parse a table JSON document back into rows. Inverse of
/// `render_table(_, Format::Json)` byte for byte.
pub fn parse_json(s: &str) -> Result<Vec<ReportRow>, String> {
    let doc: serde_json::Value = serde_json::from_str(s).map_err(|e| e.to_string())?;
    let rows = doc
        .get("rows")
        .and_then(|r| r.as_array())
        .ok_or("missing top-level \"rows\" array")?;

    fn int_field(row: &serde_json::Value, key: &str) -> Result<BigInt, String> {
        let v = row.get(key).ok_or_else(|| format!("missing field {key:?}"))?;
        match v {
            serde_json::Value::Number(num) => BigInt::from_str(&num.to_string())
                .map_err(|_| format!("field {key:?} is not an integer: {num}")),
            other => Err(format!("field {key:?} is not a number: {other}")),
        }
    }

    rows.iter()
        .map(|row| {
            let n_big = int_field(row, "n")?;
            let n: u64 = n_big
                .try_into()
                .map_err(|_| "field \"n\" out of range".to_string())?;
            Ok(ReportRow {
                n,
                p: int_field(row, "p")?,
                q: int_field(row, "q")?,
                r: int_field(row, "r")?,
                orb: int_field(row, "orb")?,
                orb1: int_field(row, "orb1")?,
                orb2: int_field(row, "orb2")?,
                orb_sigma: int_field(row, "orb_sigma")?,
                orb1_sigma: int_field(row, "orb1_sigma")?,
            })
        })
        .collect()
}

/// Convenience: build and render the table in one step.
pub fn table_report(n_max: u64, format: Format) -> String {
    render_table(&table(n_max), format)
}

/// Orbit listing for `C_n`: canonical word, orbit size, stabilizer size,
/// axis count and the gap composition of the orbit's class,
/// one orbit per line in partition order.
pub fn orbits_report(n: usize, action: Action, format: Format) -> String {
    let rows: Vec<(String, usize, usize, usize, Composition)> = partition(n, action)
        .iter()
        .map(|o| {
            let class = word_to_composition(&o.canonical).0;
            let gaps = match action {
                Action::Dihedral => class.bracelet_canonical(),
                Action::Rotation => class.cyclic_canonical(),
            };
            (
                o.canonical.to_string(),
                o.size,
                o.stab_size,
                symmetry_axis_count(&o.canonical),
                gaps,
            )
        })
        .collect();

    match format {
        Format::Text => {
            let mut out = String::new();
            for (word, size, stab, axes, gaps) in &rows {
                let _ = writeln!(out, "{word} size={size} stab={stab} axes={axes} gaps={gaps}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("canonical,size,stab,axes,gaps\n");
            for (word, size, stab, axes, gaps) in &rows {
                let _ = writeln!(out, "{word},{size},{stab},{axes},{gaps}");
            }
            out
        }
        Format::Json => {
            let orbits: Vec<serde_json::Value> = rows
                .iter()
                .map(|(word, size, stab, axes, gaps)| {
                    serde_json::json!({
                        "canonical": word,
                        "size": size,
                        "stab": stab,
                        "axes": axes,
                        "gaps": gaps.parts(),
                    })
                })
                .collect();
            serde_json::json!({
                "n": n,
                "action": action.to_string(),
                "orbits": orbits,
            })
            .to_string()
        }
    }
}

fn flavor_list(n: usize, flavor: Flavor) -> Vec<Composition> {
    match flavor {
        Flavor::Linear => compositions::enumerate_linear(n),
        Flavor::Cyclic => compositions::enumerate_cyclic(n),
        Flavor::Bracelet => compositions::enumerate_bracelet(n),
        Flavor::Palindromic => compositions::enumerate_bracelet(n)
            .into_iter()
            .filter(compositions::is_cyclic_palindrome)
            .collect(),
    }
}

/// Composition listing: canonical representatives, one per line.
pub fn compositions_report(n: usize, flavor: Flavor, format: Format) -> String {
    let list = flavor_list(n, flavor);
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in &list {
                let _ = writeln!(out, "{c}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("composition\n");
            for c in &list {
                let _ = writeln!(out, "{c}");
            }
            out
        }
        Format::Json => serde_json::json!({
            "n": n,
            "flavor": flavor.name(),
            "compositions": list.iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
        })
        .to_string(),
    }
}

/// Chord listing for `C_{7 * octaves}`: note names, orbit size, axis count.
pub fn chords_report(octaves: usize, format: Format) -> String {
    let sets = chords::chord_sets(octaves);
    match format {
        Format::Text => {
            let mut out = String::new();
            for s in &sets {
                let _ = writeln!(out, "{} size={} axes={}", s.notes, s.orbit_size, s.axes);
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("notes,size,axes\n");
            for s in &sets {
                let _ = writeln!(out, "{},{},{}", s.notes, s.orbit_size, s.axes);
            }
            out
        }
        Format::Json => serde_json::json!({
            "octaves": octaves,
            "chords": sets
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "notes": s.notes,
                        "size": s.orbit_size,
                        "axes": s.axes,
                    })
                })
                .collect::<Vec<_>>(),
        })
        .to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_rows_match_pinned_examples() {
        let csv = table_report(40, Format::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,p,q,r,orb,orb1,orb2,orb_sigma,orb1_sigma");
        assert_eq!(lines[1], "1,0,0,0,0,0,0,0,0");
        assert_eq!(lines[14], "14,51,21,5,5,0,3,5,3");
        assert_eq!(lines[27], "27,1983,816,21,48,27,19,75,73");
        assert_eq!(lines.len(), 41);
    }

    #[test]
    fn json_round_trips_bytes() {
        let doc = table_report(12, Format::Json);
        let rows = parse_json(&doc).unwrap();
        assert_eq!(render_table(&rows, Format::Json), doc);
        assert_eq!(rows, table(12));
    }

    #[test]
    fn json_round_trips_past_64_bits() {
        // p(250) has ~31 digits; exactness must survive the JSON trip
        let doc = table_report(250, Format::Json);
        let rows = parse_json(&doc).unwrap();
        assert_eq!(render_table(&rows, Format::Json), doc);
        assert!(rows[249].p.to_string().len() > 20);
    }

    #[test]
    fn parse_json_rejects_malformed_documents() {
        assert!(parse_json("[]").is_err());
        assert!(parse_json("{\"rows\":[{\"n\":1}]}").is_err());
        assert!(parse_json("{\"rows\":[{\"n\":\"x\"}]}").is_err());
    }

    #[test]
    fn text_table_has_header_and_rows() {
        let text = table_report(5, Format::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].trim_start().starts_with('n'));
    }

    #[test]
    fn orbit_listing_line_counts() {
        let text = orbits_report(6, Action::Dihedral, Format::Text);
        assert_eq!(text.lines().count(), 2);
        assert_eq!(orbits_report(1, Action::Dihedral, Format::Text), "");
        let csv = orbits_report(14, Action::Dihedral, Format::Csv);
        assert_eq!(csv.lines().count(), 6); // header + five orbits
    }

    #[test]
    fn composition_listing_examples() {
        let text = compositions_report(8, Flavor::Linear, Format::Text);
        assert_eq!(text, "2-2-2-2\n2-3-3\n3-2-3\n3-3-2\n");
        let pal = compositions_report(8, Flavor::Palindromic, Format::Text);
        assert_eq!(pal, "2-2-2-2\n2-3-3\n");
    }

    #[test]
    fn chords_listing_two_octaves() {
        let text = chords_report(2, Format::Text);
        assert_eq!(text.lines().count(), 5);
        assert!(text.contains("C-E-G-B-d-f-a size=2 axes=7"));
    }

    #[test]
    fn format_and_flavor_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("yaml".parse::<Format>().is_err());
        assert_eq!("bracelet".parse::<Flavor>().unwrap(), Flavor::Bracelet);
        assert!("necklace".parse::<Flavor>().is_err());
    }
}
