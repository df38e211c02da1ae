use std::fs;
use std::path::Path;

use clap::ValueEnum;
use klcf::Text;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum InputFormat {
    #[default]
    Plain,
    Fasta,
}

/// Raw bytes with exactly one trailing `\n` removed.
pub fn parse_plain(mut bytes: Vec<u8>) -> Vec<u8> {
    if bytes.last() == Some(&b'\n') {
        bytes.pop();
    }
    bytes
}

/// Sequence lines of the first record, header dropped. Line ends (`\n` or
/// `\r\n`) are not part of the sequence. `None` when there is no record.
pub fn parse_fasta(bytes: &[u8]) -> Option<Vec<u8>> {
    let mut lines = bytes.split(|&b| b == b'\n').map(|l| l.strip_suffix(b"\r").unwrap_or(l));
    lines.by_ref().find(|l| l.starts_with(b">"))?;
    Some(lines.take_while(|l| !l.starts_with(b">")).flatten().copied().collect())
}

fn read_one(path: &Path, format: InputFormat) -> Result<Vec<u8>> {
    let bytes = fs::read(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    match format {
        InputFormat::Plain => Ok(parse_plain(bytes)),
        InputFormat::Fasta => parse_fasta(&bytes).ok_or_else(|| CliError::EmptyFasta { path: path.to_owned() }),
    }
}

/// Both sequences over one dense alphabet; the byte labels stay available
/// through [`Text::labels`].
pub fn load_inputs(path1: &Path, path2: &Path, format: InputFormat) -> Result<Text> {
    let a = read_one(path1, format)?;
    let b = read_one(path2, format)?;
    Ok(Text::from_bytes(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_strips_one_newline() {
        assert_eq!(parse_plain(b"abba\n".to_vec()), b"abba");
        assert_eq!(parse_plain(b"abba\n\n".to_vec()), b"abba\n");
        assert_eq!(parse_plain(b"ab ba".to_vec()), b"ab ba");
        assert_eq!(parse_plain(Vec::new()), b"");
    }

    #[test]
    fn fasta_first_record() {
        assert_eq!(parse_fasta(b">x\nAB\nBA\n").unwrap(), b"ABBA");
        assert_eq!(parse_fasta(b";c\n>x desc\r\nAC\r\nGT\n>y\nTTTT\n").unwrap(), b"ACGT");
        assert_eq!(parse_fasta(b">x\n").unwrap(), b"");
        assert!(parse_fasta(b"ACGT\n").is_none());
    }
}
