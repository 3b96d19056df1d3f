use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::{DesignError, DesignParams, IncidenceStructure};

/// Where a design's blocks came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignSource {
    pub code: String,
    pub weight: usize,
    pub complemented: bool,
}

/// JSON record of a verified design; lambda and b are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub t: usize,
    pub v: usize,
    pub k: usize,
    pub lambda: String,
    pub b: String,
    pub steiner: bool,
    pub verified: String,
    pub source: DesignSource,
}

impl DesignReport {
    pub fn new(params: &DesignParams, source: DesignSource) -> Self {
        DesignReport {
            t: params.t,
            v: params.v,
            k: params.k,
            lambda: params.lambda.to_string(),
            b: params.b.to_string(),
            steiner: params.is_steiner(),
            verified: "exact".into(),
            source,
        }
    }
}

/// One block per line, indices separated by spaces.
pub fn write_blocks<W: Write>(d: &IncidenceStructure, out: &mut W) -> io::Result<()> {
    for b in d.blocks() {
        let line: Vec<String> = b.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// Reads the block format written by `write_blocks`. Without `v` the point
/// count is one more than the largest index seen.
pub fn parse_blocks(text: &str, v: Option<usize>) -> Result<IncidenceStructure, DesignError> {
    let mut blocks = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let block = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|e| DesignError::Parse {
                    line: no + 1,
                    msg: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        blocks.push(block);
    }
    let v = v.unwrap_or_else(|| blocks.iter().flatten().max().map_or(0, |m| m + 1));
    IncidenceStructure::new(v, blocks)
}
