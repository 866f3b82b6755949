//! Registered partition classes and their membership / basis rules.
//!
//! Rules are plain function pointers so a [`ClassSpec`] can be cloned and a
//! single rule swapped out (the negative controls in the tests do this).
//! Positions are 1-based: a pair rule receives the index `i` of the upper
//! part `λ_i` of the adjacent pair `(λ_i, λ_{i+1})`, and the last-part rule
//! receives the index of the smallest part.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{Partition, Stat, WeightMap};
use crate::series::{Monomial, VarSet};

/// A single part with its overline flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Part {
    pub value: u32,
    pub over: bool,
}

impl Part {
    pub fn plain(value: u32) -> Self {
        Self { value, over: false }
    }
}

/// `(i, λ_i, λ_{i+1})` → violation message, if any.
pub type PairRule = fn(usize, Part, Part) -> Option<String>;
/// `(i, λ_i)` for the last part → violation message, if any.
pub type LastRule = fn(usize, Part) -> Option<String>;
/// Length → violation message, if any.
pub type LengthRule = fn(usize) -> Option<String>;

/// A rule set: adjacent-pair rule, smallest-part rule, optional length rule.
#[derive(Clone, Copy)]
pub struct Rules {
    pub pair: PairRule,
    pub last: LastRule,
    pub length: Option<LengthRule>,
}

impl fmt::Debug for Rules {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rules").field("length", &self.length.is_some()).finish_non_exhaustive()
    }
}

impl Rules {
    /// First violated rule for the given parts, if any.
    pub fn check(&self, parts: &[Part]) -> Option<String> {
        if let Some(len) = self.length {
            if let Some(v) = len(parts.len()) {
                return Some(v);
            }
        }
        for (i, w) in parts.windows(2).enumerate() {
            if let Some(v) = (self.pair)(i + 1, w[0], w[1]) {
                return Some(v);
            }
        }
        parts.last().and_then(|&p| (self.last)(parts.len(), p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    GgA,
    P4,
    P4e,
    P4o,
    Sbar,
    G,
    GPrime,
    Odd,
    S4,
}

impl ClassId {
    pub const ALL: [ClassId; 9] = [
        ClassId::GgA,
        ClassId::P4,
        ClassId::P4e,
        ClassId::P4o,
        ClassId::Sbar,
        ClassId::G,
        ClassId::GPrime,
        ClassId::Odd,
        ClassId::S4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassId::GgA => "gg-A",
            ClassId::P4 => "p4",
            ClassId::P4e => "p4e",
            ClassId::P4o => "p4o",
            ClassId::Sbar => "sbar",
            ClassId::G => "g",
            ClassId::GPrime => "gprime",
            ClassId::Odd => "odd",
            ClassId::S4 => "s4",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct ClassSpec {
    pub id: ClassId,
    pub modulus: u32,
    /// Whether members may carry overlined parts.
    pub overlines: bool,
    pub member: Rules,
    pub basis: Option<Rules>,
    pub default_weights: WeightMap,
}

impl ClassSpec {
    /// `Ok(())` for members, otherwise [`Error::NotMember`] naming the rule.
    pub fn check_member(&self, p: &Partition) -> Result<()> {
        if !self.overlines && p.has_overlines() {
            return Err(Error::NotMember(format!("{p}: class {} has no overlined parts", self.id)));
        }
        match self.member.check(&to_parts(p)) {
            None => Ok(()),
            Some(v) => Err(Error::NotMember(format!("{p} is not in {}: {v}", self.id))),
        }
    }

    pub fn is_member(&self, p: &Partition) -> bool {
        self.check_member(p).is_ok()
    }

    pub fn basis_rules(&self) -> Result<&Rules> {
        self.basis.as_ref().ok_or_else(|| Error::NoBasis(self.id.to_string()))
    }

    pub fn check_basis(&self, p: &Partition) -> Result<()> {
        let rules = self.basis_rules()?;
        if !self.overlines && p.has_overlines() {
            return Err(Error::NotMember(format!("{p}: class {} has no overlined parts", self.id)));
        }
        match rules.check(&to_parts(p)) {
            None => Ok(()),
            Some(v) => Err(Error::NotMember(format!("{p} is not a basis partition of {}: {v}", self.id))),
        }
    }

    pub fn is_basis(&self, p: &Partition) -> bool {
        self.check_basis(p).is_ok()
    }
}

pub(crate) fn to_parts(p: &Partition) -> Vec<Part> {
    p.parts().iter().zip(p.overlined()).map(|(&value, &over)| Part { value, over }).collect()
}

pub(crate) fn from_parts(parts: &[Part]) -> Partition {
    Partition::from_raw(parts.iter().map(|p| p.value).collect(), parts.iter().map(|p| p.over).collect())
}

fn increasing(u: Part, l: Part) -> Option<String> {
    (u.value < l.value).then(|| format!("parts must not increase, got {} then {}", u.value, l.value))
}

fn strict(u: Part, l: Part) -> Option<String> {
    (u.value <= l.value).then(|| format!("parts must be distinct, got {} then {}", u.value, l.value))
}

// --- gg-A -----------------------------------------------------------------

fn gga_pair(_: usize, u: Part, l: Part) -> Option<String> {
    if let Some(v) = increasing(u, l) {
        return Some(v);
    }
    let d = u.value - l.value;
    if d < 2 {
        Some(format!("consecutive parts {} and {} differ by {d} < 2", u.value, l.value))
    } else if u.value % 2 == 0 && d < 3 {
        Some(format!("even part {} exceeds the next part {} by {d} < 3", u.value, l.value))
    } else {
        None
    }
}

fn any_last(_: usize, _: Part) -> Option<String> {
    None
}

fn gga_basis_pair(_: usize, u: Part, l: Part) -> Option<String> {
    if let Some(v) = increasing(u, l) {
        return Some(v);
    }
    let d = u.value - l.value;
    let (lo, hi) = if u.value % 2 == 1 { (2, 3) } else { (3, 4) };
    (d < lo || d > hi).then(|| format!("basis gap {}-{} = {d} not in [{lo},{hi}]", u.value, l.value))
}

fn one_or_two_last(_: usize, p: Part) -> Option<String> {
    (p.value > 2).then(|| format!("smallest basis part {} is not 1 or 2", p.value))
}

// --- p4 -------------------------------------------------------------------

fn p4_pair(_: usize, u: Part, l: Part) -> Option<String> {
    if let Some(v) = strict(u, l) {
        return Some(v);
    }
    let d = u.value - l.value;
    match (u.value % 2, l.value % 2) {
        (1, 1) if d % 4 != 2 => {
            Some(format!("rule (1): odd parts {} and {} differ by {d}, not 2 mod 4", u.value, l.value))
        }
        (0, 0) if d % 4 != 0 => {
            Some(format!("rule (2): even parts {} and {} differ by {d}, not 0 mod 4", u.value, l.value))
        }
        (a, b) if a != b && d % 4 != 3 => {
            Some(format!("rule (3): parts {} and {} of different parity differ by {d}, not 3 mod 4", u.value, l.value))
        }
        _ => None,
    }
}

fn p4_last(_: usize, p: Part) -> Option<String> {
    let r = p.value % 4;
    (r != 1 && r != 2).then(|| format!("rule (4): smallest part {} is not 1 or 2 mod 4", p.value))
}

fn p4_basis_pair(_: usize, u: Part, l: Part) -> Option<String> {
    if u.value <= l.value {
        return strict(u, l);
    }
    let d = u.value - l.value;
    let want = match (u.value % 2, l.value % 2) {
        (1, 1) => 2,
        (0, 0) => 4,
        _ => 3,
    };
    (d != want).then(|| format!("basis gap {}-{} = {d}, expected exactly {want}", u.value, l.value))
}

fn even_length(n: usize) -> Option<String> {
    (n % 2 != 0).then(|| format!("length {n} is odd"))
}

fn odd_length(n: usize) -> Option<String> {
    (n % 2 != 1).then(|| format!("length {n} is even"))
}

// --- sbar -----------------------------------------------------------------

fn overline_ok(u: Part, next: u32) -> Option<String> {
    (u.over && (u.value < 2 || u.value < next + 2))
        .then(|| format!("part {} may not be overlined (needs value >= 2 and gap >= 2 to {next})", u.value))
}

fn sbar_pair(_: usize, u: Part, l: Part) -> Option<String> {
    strict(u, l).or_else(|| overline_ok(u, l.value))
}

fn sbar_last(_: usize, p: Part) -> Option<String> {
    overline_ok(p, 0)
}

fn sbar_basis_pair(_: usize, u: Part, l: Part) -> Option<String> {
    if u.value <= l.value {
        return strict(u, l);
    }
    let d = u.value - l.value;
    let want = if u.over { 2 } else { 1 };
    (d != want).then(|| {
        format!("basis gap {}{}-{} = {d}, expected exactly {want}", u.value, if u.over { "~" } else { "" }, l.value)
    })
}

fn sbar_basis_last(_: usize, p: Part) -> Option<String> {
    let want = if p.over { 2 } else { 1 };
    (p.value != want).then(|| format!("smallest basis part {} should be {want}", p.value))
}

// --- g --------------------------------------------------------------------

fn g_pair(i: usize, u: Part, l: Part) -> Option<String> {
    if let Some(v) = strict(u, l) {
        return Some(v);
    }
    let d = u.value - l.value;
    (i % 2 == 0 && d % 2 != 0).then(|| format!("gap λ{i}-λ{} = {d} is odd", i + 1))
}

fn g_last(i: usize, p: Part) -> Option<String> {
    (i % 2 == 0 && p.value % 2 != 0).then(|| format!("smallest part λ{i} = {} is even-indexed but odd", p.value))
}

fn g_basis_pair(i: usize, u: Part, l: Part) -> Option<String> {
    if u.value <= l.value {
        return strict(u, l);
    }
    let d = u.value - l.value;
    let ok = if i % 2 == 1 { (1..=2).contains(&d) } else { d == 2 };
    (!ok).then(|| format!("basis gap λ{i}-λ{} = {d} out of range", i + 1))
}

fn g_basis_last(i: usize, p: Part) -> Option<String> {
    let ok = if i % 2 == 1 { p.value <= 2 } else { p.value == 2 };
    (!ok).then(|| format!("smallest basis part λ{i} = {} not allowed", p.value))
}

// --- gprime ---------------------------------------------------------------

fn gp_pair(i: usize, u: Part, l: Part) -> Option<String> {
    if let Some(v) = increasing(u, l) {
        return Some(v);
    }
    let d = u.value - l.value;
    if i % 2 == 1 {
        (d < 3).then(|| format!("gap λ{i}-λ{} = {d} < 3", i + 1))
    } else {
        (d % 2 != 0).then(|| format!("gap λ{i}-λ{} = {d} is odd", i + 1))
    }
}

fn gp_last(i: usize, p: Part) -> Option<String> {
    if i % 2 == 1 {
        (p.value < 3).then(|| format!("odd-indexed smallest part λ{i} = {} < 3", p.value))
    } else {
        (p.value % 2 != 0).then(|| format!("even-indexed smallest part λ{i} = {} is odd", p.value))
    }
}

fn gp_basis_pair(i: usize, u: Part, l: Part) -> Option<String> {
    if let Some(v) = increasing(u, l) {
        return Some(v);
    }
    let d = u.value - l.value;
    let ok = if i % 2 == 1 { (3..=4).contains(&d) } else { d == 0 };
    (!ok).then(|| format!("basis gap λ{i}-λ{} = {d} out of range", i + 1))
}

fn gp_basis_last(i: usize, p: Part) -> Option<String> {
    let ok = if i % 2 == 1 { (3..=4).contains(&p.value) } else { p.value == 2 };
    (!ok).then(|| format!("smallest basis part λ{i} = {} not allowed", p.value))
}

// --- odd, s4 --------------------------------------------------------------

fn odd_pair(_: usize, u: Part, _: Part) -> Option<String> {
    (u.value % 2 == 0).then(|| format!("part {} is even", u.value))
}

fn odd_last(_: usize, p: Part) -> Option<String> {
    (p.value % 2 == 0).then(|| format!("part {} is even", p.value))
}

fn odd_basis_pair(_: usize, u: Part, _: Part) -> Option<String> {
    (u.value != 1).then(|| format!("basis part {} is not 1", u.value))
}

fn odd_basis_last(_: usize, p: Part) -> Option<String> {
    (p.value != 1).then(|| format!("basis part {} is not 1", p.value))
}

fn s4_pair(_: usize, u: Part, l: Part) -> Option<String> {
    strict(u, l).or_else(|| s4_last(0, u))
}

fn s4_last(_: usize, p: Part) -> Option<String> {
    (p.value % 4 == 0).then(|| format!("part {} is a multiple of 4", p.value))
}

fn graded(names: &[&str], tracked: &[(Stat, &str)]) -> WeightMap {
    let vars = VarSet::new(names.iter().copied()).expect("static var set");
    WeightMap::graded(&vars, tracked).expect("static weights")
}

/// `x^{|λ_o|} y^{|λ_e|}` with `q` marking the total weight.
pub fn positional_weights() -> WeightMap {
    let vars = VarSet::new(["x", "y"]).expect("static var set");
    let x = vars.exps(&[("x", 1)]).expect("x");
    let y = vars.exps(&[("y", 1)]).expect("y");
    WeightMap::new(
        vars,
        vec![(Stat::OddIndexedSum, Monomial::new(1, 1, x)), (Stat::EvenIndexedSum, Monomial::new(1, 1, y))],
    )
}

pub fn class_spec(id: ClassId) -> ClassSpec {
    let p4_member = Rules { pair: p4_pair, last: p4_last, length: None };
    let p4_basis = Rules { pair: p4_basis_pair, last: one_or_two_last, length: None };
    let p4_weights = || graded(&["x", "y"], &[(Stat::OddParts, "x"), (Stat::EvenParts, "y")]);
    let length_weights = || graded(&["z"], &[(Stat::Length, "z")]);
    match id {
        ClassId::GgA => ClassSpec {
            id,
            modulus: 2,
            overlines: false,
            member: Rules { pair: gga_pair, last: any_last, length: None },
            basis: Some(Rules { pair: gga_basis_pair, last: one_or_two_last, length: None }),
            default_weights: length_weights(),
        },
        ClassId::P4 => ClassSpec {
            id,
            modulus: 4,
            overlines: false,
            member: p4_member,
            basis: Some(p4_basis),
            default_weights: p4_weights(),
        },
        ClassId::P4e | ClassId::P4o => {
            let len: LengthRule = if id == ClassId::P4e { even_length } else { odd_length };
            ClassSpec {
                id,
                modulus: 4,
                overlines: false,
                member: Rules { length: Some(len), ..p4_member },
                basis: Some(Rules { length: Some(len), ..p4_basis }),
                default_weights: p4_weights(),
            }
        }
        ClassId::Sbar => ClassSpec {
            id,
            modulus: 1,
            overlines: true,
            member: Rules { pair: sbar_pair, last: sbar_last, length: None },
            basis: Some(Rules { pair: sbar_basis_pair, last: sbar_basis_last, length: None }),
            default_weights: graded(&["a", "z"], &[(Stat::Overlined, "a"), (Stat::Length, "z")]),
        },
        ClassId::G => ClassSpec {
            id,
            modulus: 2,
            overlines: false,
            member: Rules { pair: g_pair, last: g_last, length: None },
            basis: Some(Rules { pair: g_basis_pair, last: g_basis_last, length: None }),
            default_weights: positional_weights(),
        },
        ClassId::GPrime => ClassSpec {
            id,
            modulus: 2,
            overlines: false,
            member: Rules { pair: gp_pair, last: gp_last, length: None },
            basis: Some(Rules { pair: gp_basis_pair, last: gp_basis_last, length: None }),
            default_weights: positional_weights(),
        },
        ClassId::Odd => ClassSpec {
            id,
            modulus: 2,
            overlines: false,
            member: Rules { pair: odd_pair, last: odd_last, length: None },
            basis: Some(Rules { pair: odd_basis_pair, last: odd_basis_last, length: None }),
            default_weights: length_weights(),
        },
        ClassId::S4 => ClassSpec {
            id,
            modulus: 1,
            overlines: false,
            member: Rules { pair: s4_pair, last: s4_last, length: None },
            basis: None,
            default_weights: length_weights(),
        },
    }
}

/// Look up a class by its CLI/JSON name.
pub fn class_by_name(name: &str) -> Result<ClassSpec> {
    Ok(class_spec(name.parse()?))
}
