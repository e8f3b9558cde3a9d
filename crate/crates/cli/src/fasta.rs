//! Minimal FASTA reader: one text per `>` record.

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub header: String,
    pub sequence: Vec<u8>,
}

/// Splits `data` into records. Sequence lines are concatenated with all
/// whitespace removed and ASCII letters uppercased; `;` lines are comments.
pub fn parse(data: &[u8]) -> Result<Vec<Record>, CliError> {
    let mut records: Vec<Record> = Vec::new();
    for (lineno, line) in data.split(|&b| b == b'\n').enumerate() {
        if let Some(header) = line.strip_prefix(b">") {
            records.push(Record {
                header: String::from_utf8_lossy(header).trim().to_string(),
                sequence: Vec::new(),
            });
        } else if line.first() == Some(&b';') {
            continue;
        } else {
            let bases = line
                .iter()
                .filter(|b| !b.is_ascii_whitespace())
                .map(u8::to_ascii_uppercase);
            match records.last_mut() {
                Some(r) => r.sequence.extend(bases),
                None if line.iter().all(u8::is_ascii_whitespace) => {}
                None => {
                    return Err(CliError::Data(format!(
                        "line {}: sequence data before the first '>' header",
                        lineno + 1
                    )))
                }
            }
        }
    }
    if records.is_empty() {
        return Err(CliError::Data("FASTA input contains no records".into()));
    }
    Ok(records)
}
