//! The `.sys` input format: one `vars:` header line, then one polynomial
//! per line in the textual grammar. Blank lines and `#` comments are
//! ignored.
//!
//! ```text
//! vars: x y
//! # the unit circle
//! x^2 + y^2 - 1
//! ```

use crate::poly::{parse_polynomial, ParseError, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SysFileError {
    #[error("missing `vars:` header line")]
    MissingHeader,
    #[error("no polynomials in system file")]
    Empty,
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
}

#[derive(Clone, Debug)]
pub struct SystemFile {
    pub ring: Ring,
    pub polys: Vec<Polynomial>,
}

pub fn parse_system(text: &str) -> Result<SystemFile, SysFileError> {
    let mut lines = text.lines().enumerate();
    let ring = loop {
        let Some((_, line)) = lines.next() else {
            return Err(SysFileError::MissingHeader);
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(rest) = trimmed.strip_prefix("vars:") else {
            return Err(SysFileError::MissingHeader);
        };
        let vars: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        break Ring::new(vars);
    };
    let mut polys = Vec::new();
    for (i, line) in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let p = parse_polynomial(trimmed, &ring)
            .map_err(|source| SysFileError::Parse { line: i + 1, source })?;
        polys.push(p);
    }
    if polys.is_empty() {
        return Err(SysFileError::Empty);
    }
    Ok(SystemFile { ring, polys })
}

pub fn render_system(ring: &Ring, polys: &[Polynomial]) -> String {
    let mut out = format!("vars: {}\n", ring.var_names().join(" "));
    for p in polys {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
