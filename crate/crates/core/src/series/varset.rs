use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the number of non-q variables a series may carry.
pub const MAX_VARS: usize = 8;

/// Ordered set of the symbolic (non-q) variables of a series.
///
/// Exponent vectors index into this order. `q` is implicit and may not be
/// declared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Arc<[String]>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::InvalidVarSet(format!("{} variables, at most {MAX_VARS} supported", names.len())));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidVarSet(format!("bad identifier `{n}`")));
            }
            if n == "q" {
                return Err(Error::InvalidVarSet("`q` is implicit".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidVarSet(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Self { names: names.into() })
    }

    pub fn empty() -> Self {
        Self { names: Arc::from(Vec::new()) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Exponent vector from `(name, exponent)` pairs.
    pub fn exps(&self, pairs: &[(&str, i32)]) -> Result<Exps> {
        let mut e = Exps::ZERO;
        for &(name, k) in pairs {
            let i = self.require(name)?;
            e.0[i] += k;
        }
        Ok(e)
    }

    pub(crate) fn ensure_same(&self, other: &VarSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VarSetMismatch { left: self.to_string(), right: other.to_string() })
        }
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet{self}")
    }
}

/// Exponent vector over a [`VarSet`]; unused slots stay zero, so the derived
/// lexicographic order is the canonical term order.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exps(pub [i32; MAX_VARS]);

impl Exps {
    pub const ZERO: Exps = Exps([0; MAX_VARS]);

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn scaled(&self, k: i32) -> Exps {
        let mut out = *self;
        for e in &mut out.0 {
            *e *= k;
        }
        out
    }

    /// Total degree over all variables.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Add for Exps {
    type Output = Exps;
    fn add(mut self, rhs: Exps) -> Exps {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl Sub for Exps {
    type Output = Exps;
    fn sub(self, rhs: Exps) -> Exps {
        self + (-rhs)
    }
}

impl Neg for Exps {
    type Output = Exps;
    fn neg(self) -> Exps {
        self.scaled(-1)
    }
}
