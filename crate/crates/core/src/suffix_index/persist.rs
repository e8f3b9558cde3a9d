//! Binary index format.
//!
//! ```text
//! magic   b"LRQ1"
//! n       u64 LE
//! text    n bytes
//! sa      n   x u32 LE   (1-indexed positions)
//! rank    n   x u32 LE   (1-indexed ranks)
//! lcp     n+1 x u32 LE
//! ```

use std::io::{self, Read, Write};

use super::TextIndex;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"LRQ1";
const MAX_LEN: u64 = u32::MAX as u64;

pub fn save_index<W: Write>(index: &TextIndex, sink: &mut W) -> Result<()> {
    let n = index.len() as u64;
    if n > MAX_LEN {
        return Err(Error::TextTooLarge { len: n });
    }
    sink.write_all(MAGIC)?;
    sink.write_all(&n.to_le_bytes())?;
    sink.write_all(index.text())?;
    for array in [index.suffix_array(), index.rank_array(), index.lcp_array()] {
        write_u32s(sink, array)?;
    }
    sink.flush()?;
    Ok(())
}

pub fn load_index<R: Read>(source: &mut R) -> Result<TextIndex> {
    let mut magic = [0u8; 4];
    read_exact(source, &mut magic, "magic")?;
    if &magic != MAGIC {
        return Err(Error::Format("bad magic, not an LRQ1 index".into()));
    }
    let mut len = [0u8; 8];
    read_exact(source, &mut len, "header")?;
    let n = u64::from_le_bytes(len);
    if n > MAX_LEN {
        return Err(Error::TextTooLarge { len: n });
    }
    let n = n as usize;

    // Read through `take` so a corrupt length cannot force a huge allocation
    // before the stream runs dry.
    let mut text = Vec::new();
    source.take(n as u64).read_to_end(&mut text)?;
    if text.len() != n {
        return Err(truncated("text"));
    }
    let sa = read_u32s(source, n, "suffix array")?;
    let rank = read_u32s(source, n, "rank array")?;
    let lcp = read_u32s(source, n + 1, "lcp array")?;
    TextIndex::from_parts(text, sa, rank, lcp)
}

fn truncated(what: &str) -> Error {
    Error::Format(format!("truncated stream while reading {what}"))
}

fn read_exact<R: Read>(source: &mut R, buf: &mut [u8], what: &str) -> Result<()> {
    source.read_exact(buf).map_err(|e| match e.kind() {
        io::ErrorKind::UnexpectedEof => truncated(what),
        _ => Error::Io(e),
    })
}

fn write_u32s<W: Write>(sink: &mut W, values: &[usize]) -> Result<()> {
    let mut buf = Vec::with_capacity(values.len() * 4);
    for &v in values {
        let v = u32::try_from(v).map_err(|_| Error::TextTooLarge { len: v as u64 })?;
        buf.extend_from_slice(&v.to_le_bytes());
    }
    sink.write_all(&buf)?;
    Ok(())
}

fn read_u32s<R: Read>(source: &mut R, count: usize, what: &str) -> Result<Vec<usize>> {
    let mut raw = Vec::new();
    let want = count as u64 * 4;
    source.take(want).read_to_end(&mut raw)?;
    if raw.len() as u64 != want {
        return Err(truncated(what));
    }
    Ok(raw
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]) as usize)
        .collect())
}
