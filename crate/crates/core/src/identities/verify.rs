//! Coefficient-by-coefficient verification and JSON/text reports.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::catalog::{catalog, lookup, IdentityRecord};
use crate::error::{Error, Result};
use crate::series::{coeff_to_string, EqualityReport, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Error => "ERROR",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstMismatch {
    /// Name of the side that disagreed with the first side.
    pub side: String,
    pub q_exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub order: i64,
    pub status: Status,
    pub first_mismatch: Option<FirstMismatch>,
    pub error: Option<Error>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }

    /// Numbers are decimal strings; `millis` is null unless `timings` is set,
    /// so that repeated runs are byte-identical.
    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "order": self.order.to_string(),
            "status": self.status.as_str(),
            "first_mismatch": self.first_mismatch.as_ref().map(|m| json!({
                "side": m.side,
                "q_exponent": m.q_exponent.to_string(),
                "lhs": m.lhs,
                "rhs": m.rhs,
            })),
            "millis": if timings { Value::String(self.millis.to_string()) } else { Value::Null },
        });
        if let Some(e) = &self.error {
            v["error"] = Value::String(e.to_string());
        }
        v
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut s = format!("{:<20} {:<8} order {}", self.id, self.status, self.order);
        if let Some(m) = &self.first_mismatch {
            s.push_str(&format!("  first mismatch vs {} at q^{}: {} != {}", m.side, m.q_exponent, m.lhs, m.rhs));
        }
        if let Some(e) = &self.error {
            s.push_str(&format!("  error: {e}"));
        }
        if timings {
            s.push_str(&format!("  ({} ms)", self.millis));
        }
        s
    }
}

fn compare(rec: &IdentityRecord, order: i64, cap: u64, only: Option<&str>) -> Result<Option<FirstMismatch>> {
    let vars = rec.var_set();
    let build = |name: &str, f: super::catalog::Builder| -> Result<QSeries> {
        let s = f(order, cap)?;
        if s.max_order() < order {
            return Err(Error::ShortOrder { id: format!("{}:{name}", rec.id), got: s.max_order(), want: order });
        }
        Ok(s.truncate(order))
    };
    let (first_name, first_f) = rec.sides[0];
    let reference = build(first_name, first_f)?;
    for &(name, f) in &rec.sides[1..] {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        let other = build(name, f)?;
        if let EqualityReport::Mismatch { q_exponent, lhs, rhs } = reference.equal(&other)? {
            return Ok(Some(FirstMismatch {
                side: name.to_string(),
                q_exponent,
                lhs: coeff_to_string(&lhs, &vars),
                rhs: coeff_to_string(&rhs, &vars),
            }));
        }
    }
    Ok(None)
}

fn report(rec: &IdentityRecord, order: i64, cap: u64, only: Option<&str>) -> VerificationReport {
    let start = Instant::now();
    let outcome = compare(rec, order, cap, only);
    let millis = start.elapsed().as_millis();
    let (status, first_mismatch, error) = match outcome {
        Ok(None) => (Status::Match, None, None),
        Ok(Some(m)) => (Status::Mismatch, Some(m), None),
        Err(e) => (Status::Error, None, Some(e)),
    };
    VerificationReport { id: rec.id.to_string(), order, status, first_mismatch, error, millis }
}

/// Every side of `rec` against its first side, through `q^order`.
pub fn verify_record(rec: &IdentityRecord, order: i64, cap: u64) -> VerificationReport {
    report(rec, order, cap, None)
}

pub fn verify(id: &str, order: i64, cap: u64) -> Result<VerificationReport> {
    Ok(verify_record(lookup(id)?, order, cap))
}

/// The whole catalog (negative controls excluded), in id order.
pub fn verify_all(order: i64, cap: u64) -> Vec<VerificationReport> {
    catalog().par_iter().map(|r| verify_record(r, order, cap)).collect()
}

/// Only the closed form against the enumeration oracle.
pub fn oracle_crosscheck(id: &str, order: i64, cap: u64) -> Result<VerificationReport> {
    let rec = lookup(id)?;
    if !rec.has_oracle() {
        return Err(Error::UnknownSide { id: id.to_string(), side: "oracle".into() });
    }
    Ok(report(rec, order, cap, Some("oracle")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_entries_match() {
        for id in ["slater-4", "gg-36", "jacobi-triple", "lost-notebook"] {
            let r = verify(id, 20, 60).unwrap();
            assert!(r.is_match(), "{}", r.to_text(false));
        }
    }

    #[test]
    fn literal_gprime_fails_at_q3() {
        let r = verify("gprime-gen-literal", 10, 60).unwrap();
        let m = r.first_mismatch.unwrap();
        assert_eq!((m.q_exponent, m.lhs.as_str(), m.rhs.as_str()), (3, "z", "z^3"));
    }

    #[test]
    fn json_is_stringly_numeric() {
        let r = verify("rogers-518", 5, 60).unwrap();
        let v = r.to_json(false);
        assert_eq!(v["order"], "5");
        assert!(v["millis"].is_null() && v["first_mismatch"].is_null());
    }
}
