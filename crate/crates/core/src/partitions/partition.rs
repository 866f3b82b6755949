use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts with a per-part overline flag.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    overlined: Vec<bool>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let n = parts.len();
        Self::with_overlines(parts, vec![false; n])
    }

    pub fn with_overlines(parts: Vec<u32>, overlined: Vec<bool>) -> Result<Self> {
        if parts.len() != overlined.len() {
            return Err(Error::InvalidPartition(format!(
                "{} parts but {} overline flags",
                parts.len(),
                overlined.len()
            )));
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("part {} is zero", i + 1)));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {} < {} at position {}",
                parts[i],
                parts[i + 1],
                i + 1
            )));
        }
        Ok(Self { parts, overlined })
    }

    /// Constructor for callers that already guarantee the invariants.
    pub(crate) fn from_raw(parts: Vec<u32>, overlined: Vec<bool>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        debug_assert_eq!(parts.len(), overlined.len());
        Self { parts, overlined }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn overlined(&self) -> &[bool] {
        &self.overlined
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_overlines(&self) -> bool {
        self.overlined.iter().any(|&b| b)
    }

    /// Same parts, no overlines.
    pub fn unadorned(&self) -> Partition {
        Partition { parts: self.parts.clone(), overlined: vec![false; self.parts.len()] }
    }
}

impl fmt::Display for Partition {
    /// `7~,4,1`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (i, (p, o)) in self.parts.iter().zip(&self.overlined).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}{}", if *o { "~" } else { "" })?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t).trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut flags = Vec::new();
        for item in t.split(',') {
            let item = item.trim();
            let (num, over) = match item.strip_suffix('~') {
                Some(n) => (n.trim_end(), true),
                None => (item, false),
            };
            let p: u32 = num.parse().map_err(|_| Error::InvalidPartition(format!("cannot parse part `{item}`")))?;
            parts.push(p);
            flags.push(over);
        }
        Partition::with_overlines(parts, flags)
    }
}

/// Format a vector of non-negative integers as `4,4,2,0`.
pub fn format_vector(v: &[u32]) -> String {
    if v.is_empty() {
        return "()".into();
    }
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: Partition = " 7~ , 4,1 ".parse().unwrap();
        assert_eq!(p.parts(), [7, 4, 1]);
        assert_eq!(p.overlined(), [true, false, false]);
        assert_eq!(p.to_string(), "7~,4,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("-3".parse::<Partition>().is_err());
    }
}
