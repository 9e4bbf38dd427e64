//! The shared text encoding: partitions and compositions as comma-separated
//! positive integers (`4,1,1`), the empty partition as `-`, and skew shapes
//! as `outer/inner` (`3,3,1/1`, `2,1/-`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::{Composition, Partition, SkewShape};

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("-");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.parts())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, self.parts())
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer(), self.inner())
    }
}

/// Parses a comma-separated list of positive integers starting at byte
/// `offset` of the original input; `-` (or nothing) is the empty list.
fn parse_parts(s: &str, offset: usize) -> Result<Vec<u32>> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "-" {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for field in s.split(',') {
        let lead = field.len() - field.trim_start().len();
        let value = field.trim();
        let at = pos + lead;
        let n: u32 = value.parse().map_err(|_| Error::Parse {
            position: at,
            message: format!("expected a positive integer, found {value:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                position: at,
                message: "parts must be positive".into(),
            });
        }
        parts.push(n);
        pos += field.len() + 1;
    }
    Ok(parts)
}

fn parse_partition_at(s: &str, offset: usize) -> Result<Partition> {
    let parts = parse_parts(s, offset)?;
    if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::Parse {
            position: offset,
            message: format!("parts must be weakly decreasing (part {} < part {})", i + 1, i + 2),
        });
    }
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition_at(s, 0)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s, 0)?)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Accepts `outer/inner`, or a bare partition for a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        let (outer_text, inner_text) = match s.split_once('/') {
            Some((o, i)) => (o, Some(i)),
            None => (s, None),
        };
        let outer = parse_partition_at(outer_text, 0)?;
        let inner = match inner_text {
            Some(t) => parse_partition_at(t, outer_text.len() + 1)?,
            None => Partition::empty(),
        };
        SkewShape::new(outer, inner)
    }
}

impl TryFrom<String> for SkewShape {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SkewShape> for String {
    fn from(d: SkewShape) -> String {
        d.to_string()
    }
}
