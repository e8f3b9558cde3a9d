//! TSV and JSON renderings of query results.
//!
//! Substrings are rendered with ASCII escaping (`\t`, `\n`, `\xNN`, ...) in
//! both formats, so a record reads the same whichever format printed it.

use std::io::{self, Write};

use lrq::Repeat;
use serde::{Deserialize, Serialize};

use crate::args::OutputFormat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryOutputRecord {
    pub position: usize,
    pub start: i64,
    pub length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub substring: Option<String>,
}

impl QueryOutputRecord {
    pub fn new(position: usize, lr: Repeat, text: Option<&[u8]>) -> Self {
        QueryOutputRecord {
            position,
            start: lr.signed_start(),
            length: lr.length(),
            substring: text.map(|t| {
                lr.slice(t)
                    .map(|s| s.escape_ascii().to_string())
                    .unwrap_or_default()
            }),
        }
    }
}

pub fn write_records<W: Write>(
    out: &mut W,
    records: &[QueryOutputRecord],
    format: OutputFormat,
    header: bool,
) -> io::Result<()> {
    match format {
        OutputFormat::Tsv => {
            let with_sub = records.first().is_some_and(|r| r.substring.is_some());
            if header {
                write!(out, "position\tstart\tlength")?;
                if with_sub {
                    write!(out, "\tsubstring")?;
                }
                writeln!(out)?;
            }
            for r in records {
                write!(out, "{}\t{}\t{}", r.position, r.start, r.length)?;
                if let Some(s) = &r.substring {
                    write!(out, "\t{s}")?;
                }
                writeln!(out)?;
            }
        }
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Parses headerless TSV produced by [`write_records`].
pub fn parse_tsv(data: &str) -> Option<Vec<QueryOutputRecord>> {
    data.lines()
        .map(|line| {
            let mut cols = line.split('\t');
            Some(QueryOutputRecord {
                position: cols.next()?.parse().ok()?,
                start: cols.next()?.parse().ok()?,
                length: cols.next()?.parse().ok()?,
                substring: cols.next().map(str::to_string),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(records: &[QueryOutputRecord], format: OutputFormat, header: bool) -> String {
        let mut buf = Vec::new();
        write_records(&mut buf, records, format, header).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn tsv_lines() {
        let recs = [
            QueryOutputRecord::new(2, Repeat::new(1, 3), None),
            QueryOutputRecord::new(1, Repeat::ABSENT, None),
        ];
        assert_eq!(
            render(&recs, OutputFormat::Tsv, false),
            "2\t1\t3\n1\t-1\t0\n"
        );
        assert_eq!(
            render(&recs[..1], OutputFormat::Tsv, true),
            "position\tstart\tlength\n2\t1\t3\n"
        );
    }

    #[test]
    fn substring_is_escaped() {
        let r = QueryOutputRecord::new(1, Repeat::new(1, 2), Some(b"a\tb"));
        assert_eq!(r.substring.as_deref(), Some("a\\t"));
        let absent = QueryOutputRecord::new(1, Repeat::ABSENT, Some(b"ab"));
        assert_eq!(absent.substring.as_deref(), Some(""));
    }

    #[test]
    fn json_and_tsv_agree() {
        let text = b"abcabcddbca";
        let recs: Vec<_> = [Repeat::new(2, 3), Repeat::new(1, 3)]
            .into_iter()
            .map(|r| QueryOutputRecord::new(2, r, Some(text)))
            .collect();
        let json: Vec<QueryOutputRecord> =
            serde_json::from_str(&render(&recs, OutputFormat::Json, false)).unwrap();
        let tsv = parse_tsv(&render(&recs, OutputFormat::Tsv, false)).unwrap();
        assert_eq!(json, recs);
        assert_eq!(tsv, recs);
    }
}
