//! Turning raw input bytes into symbol sequences.

use clap::ValueEnum;
use serde::Serialize;

/// How input bytes are split into symbols.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tokenization {
    /// One symbol per byte.
    #[default]
    Bytes,
    /// One symbol per Unicode scalar value; input must be UTF-8.
    Codepoints,
    /// One symbol per line, compared as raw bytes without the terminator.
    Lines,
}

impl Tokenization {
    pub fn name(self) -> &'static str {
        match self {
            Tokenization::Bytes => "bytes",
            Tokenization::Codepoints => "codepoints",
            Tokenization::Lines => "lines",
        }
    }
}

pub fn codepoints(data: &[u8]) -> Result<Vec<char>, std::str::Utf8Error> {
    Ok(std::str::from_utf8(data)?.chars().collect())
}

/// Splits on `\n`, dropping one trailing `\r` per line. A final newline
/// does not start an extra empty line.
pub fn lines(data: &[u8]) -> Vec<&[u8]> {
    if data.is_empty() {
        return Vec::new();
    }
    let body = data.strip_suffix(b"\n").unwrap_or(data);
    body.split(|&b| b == b'\n')
        .map(|line| line.strip_suffix(b"\r").unwrap_or(line))
        .collect()
}
