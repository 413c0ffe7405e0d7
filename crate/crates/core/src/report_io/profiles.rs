use std::collections::HashSet;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::core_indices::ResearcherProfile;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProfileFormat {
    Csv,
    Json,
}

impl FromStr for ProfileFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ProfileFormat::Csv),
            "json" => Ok(ProfileFormat::Json),
            other => Err(format!("unknown profile format {other:?} (expected csv or json)")),
        }
    }
}

/// Reads and validates a profile file. The format is inferred from the
/// extension when `format` is `None`.
pub fn load_profiles(path: &Path, format: Option<ProfileFormat>) -> Result<Vec<ResearcherProfile>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let format = format.unwrap_or_else(|| ProfileFormat::infer(path));
    parse_profiles(&text, format)
}

pub fn parse_profiles(text: &str, format: ProfileFormat) -> Result<Vec<ResearcherProfile>> {
    let profiles = match format {
        ProfileFormat::Csv => parse_csv(text)?,
        ProfileFormat::Json => parse_json(text)?,
    };
    let mut seen = HashSet::new();
    for p in &profiles {
        if !seen.insert(p.id()) {
            return Err(Error::DuplicateId(p.id().to_string()));
        }
    }
    Ok(profiles)
}

fn parse_count(token: &str) -> std::result::Result<u64, String> {
    if let Ok(c) = token.parse::<u64>() {
        return Ok(c);
    }
    match token.parse::<f64>() {
        Ok(v) if v < 0.0 => Err(format!("negative citation count {token}")),
        Ok(_) => Err(format!("citation count {token} is not an integer")),
        Err(_) => Err(format!("citation count {token:?} is not a number")),
    }
}

fn parse_csv(text: &str) -> Result<Vec<ResearcherProfile>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut profiles = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            location: e
                .position()
                .map(|p| format!("line {}", p.line()))
                .unwrap_or_else(|| "csv".to_string()),
            message: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(index as u64 + 1);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let id = record.get(0).unwrap_or_default();
        let list = record.get(1).unwrap_or_default();
        let tokens: Vec<&str> = list.split(';').map(str::trim).filter(|t| !t.is_empty()).collect();

        if index == 0 && tokens.first().is_some_and(|t| t.parse::<f64>().is_err()) {
            continue; // header row
        }
        let location = || format!("line {line} (id {id:?})");
        if id.is_empty() {
            return Err(Error::Parse {
                location: format!("line {line}"),
                message: "empty id".to_string(),
            });
        }
        if record.len() > 2 {
            return Err(Error::Parse {
                location: location(),
                message: format!(
                    "expected 2 columns, found {}; separate citation counts with ';'",
                    record.len()
                ),
            });
        }
        let counts = tokens
            .iter()
            .map(|t| parse_count(t))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|message| Error::Parse {
                location: location(),
                message,
            })?;
        profiles.push(ResearcherProfile::new(id, counts));
    }
    Ok(profiles)
}

#[derive(Deserialize)]
struct RawRecord {
    id: String,
    citations: Vec<serde_json::Value>,
}

#[derive(Serialize)]
struct ProfileRecord<'a> {
    id: &'a str,
    citations: &'a [u64],
}

fn parse_json(text: &str) -> Result<Vec<ResearcherProfile>> {
    let raw: Vec<RawRecord> = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    raw.into_iter()
        .enumerate()
        .map(|(index, record)| {
            let location = || format!("record {} (id {:?})", index + 1, record.id);
            if record.id.is_empty() {
                return Err(Error::Parse {
                    location: location(),
                    message: "empty id".to_string(),
                });
            }
            let counts = record
                .citations
                .iter()
                .map(|v| match v {
                    serde_json::Value::Number(n) => parse_count(&n.to_string()),
                    other => Err(format!("citation count {other} is not a number")),
                })
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|message| Error::Parse {
                    location: location(),
                    message,
                })?;
            Ok(ResearcherProfile::new(record.id, counts))
        })
        .collect()
}

/// Serializes profiles in a form [`parse_profiles`] reads back unchanged.
pub fn emit_profiles(profiles: &[ResearcherProfile], format: ProfileFormat) -> String {
    match format {
        ProfileFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["id", "citations"]).expect("write to Vec");
            for p in profiles {
                let list: Vec<String> = p.citations().iter().map(u64::to_string).collect();
                writer.write_record([p.id(), &list.join(";")]).expect("write to Vec");
            }
            let bytes = writer.into_inner().expect("flush to Vec");
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
        ProfileFormat::Json => {
            let records: Vec<ProfileRecord<'_>> = profiles
                .iter()
                .map(|p| ProfileRecord {
                    id: p.id(),
                    citations: p.citations(),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&records).expect("profiles serialize");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn csv_line() {
        let ps = parse_profiles("R1,50;50;3;1\n", ProfileFormat::Csv).unwrap();
        assert_eq!(ps, vec![ResearcherProfile::new("R1", [50, 50, 3, 1])]);
    }

    #[test]
    fn csv_header_blank_lines_and_order() {
        let text = "id,citations\nA, 1;9 ; 3\n\nB,\nC,0\n";
        let ps = parse_profiles(text, ProfileFormat::Csv).unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[0].citations(), &[9, 3, 1]);
        assert!(ps[1].citations().is_empty());
        assert_eq!(ps[2].citations(), &[0]);
    }

    #[test]
    fn csv_rejects_negative_and_names_record() {
        let err = parse_profiles("R0,1\nR3,5;-1\n", ProfileFormat::Csv).unwrap_err();
        let msg = err.to_string();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(msg.contains("R3") && msg.contains("line 2") && msg.contains("negative"), "{msg}");
        // also on the first line, where header detection runs
        let err = parse_profiles("R3,5;-1\n", ProfileFormat::Csv).unwrap_err();
        assert!(err.to_string().contains("R3"));
    }

    #[test]
    fn csv_rejects_garbage() {
        for bad in ["R1,2.5\n", "R1,1;x\n", "R1,1,2\n", ",1\n"] {
            let err = parse_profiles(&format!("R0,1\n{bad}"), ProfileFormat::Csv).unwrap_err();
            assert!(matches!(err, Error::Parse { .. }), "{bad}: {err}");
        }
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = parse_profiles("A,1\nA,2\n", ProfileFormat::Csv).unwrap_err();
        assert!(matches!(err, Error::DuplicateId(id) if id == "A"));
    }

    #[test]
    fn json_records() {
        let ps = parse_profiles(r#"[{"id":"R2","citations":[100,0]}]"#, ProfileFormat::Json).unwrap();
        assert_eq!(ps, vec![ResearcherProfile::new("R2", [100, 0])]);
    }

    #[test]
    fn json_rejects_bad_counts() {
        for bad in [
            r#"[{"id":"R","citations":[-1]}]"#,
            r#"[{"id":"R","citations":[1.5]}]"#,
            r#"[{"id":"R","citations":["3"]}]"#,
            r#"[{"id":"R"}]"#,
            r#"{"id":"R","citations":[]}"#,
            r#"[{"id":"","citations":[1]}]"#,
        ] {
            let err = parse_profiles(bad, ProfileFormat::Json).unwrap_err();
            assert!(matches!(err, Error::Parse { .. }), "{bad}: {err}");
        }
        let err = parse_profiles(r#"[{"id":"ok","citations":[]},{"id":"R9","citations":[2,-4]}]"#, ProfileFormat::Json)
            .unwrap_err();
        assert!(err.to_string().contains("R9"));
    }

    #[test]
    fn load_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        std::fs::write(&path, r#"[{"id":"X","citations":[3,4]}]"#).unwrap();
        let ps = load_profiles(&path, None).unwrap();
        assert_eq!(ps[0].citations(), &[4, 3]);
        let missing = load_profiles(&dir.path().join("nope.csv"), None).unwrap_err();
        assert!(matches!(missing, Error::Io { .. }));
    }

    fn arb_profiles() -> impl Strategy<Value = Vec<ResearcherProfile>> {
        proptest::collection::vec(proptest::collection::vec(0u64..10_000, 0..15), 0..8).prop_map(|cs| {
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| ResearcherProfile::new(format!("id, \"{i}\""), c))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn round_trip(ps in arb_profiles()) {
            for format in [ProfileFormat::Csv, ProfileFormat::Json] {
                let text = emit_profiles(&ps, format);
                prop_assert_eq!(&parse_profiles(&text, format).unwrap(), &ps);
            }
        }
    }
}
