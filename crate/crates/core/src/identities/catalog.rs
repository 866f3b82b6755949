//! The identity catalog. Every record has at least two sides; the first is
//! the reference (`lhs`) and every other side must agree with it.

use super::builders as b;
use crate::error::{Error, Result};
use crate::series::{QSeries, VarSet};

/// `(order, cap) -> series reliable through order`.
pub type Builder = fn(i64, u64) -> Result<QSeries>;

#[derive(Clone, Copy, Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub vars: &'static [&'static str],
    pub default_order: i64,
    /// Classical name of the identity or theorem being checked.
    pub anchor: &'static str,
    pub notes: &'static str,
    pub sides: &'static [(&'static str, Builder)],
}

impl IdentityRecord {
    pub fn var_set(&self) -> VarSet {
        VarSet::new(self.vars.iter().copied()).expect("static var set")
    }

    /// `lhs`/`rhs` name the first two sides; any side may also be named directly.
    pub fn side(&self, name: &str) -> Result<Builder> {
        let lower = name.to_ascii_lowercase();
        let idx = match lower.as_str() {
            "lhs" => Some(0),
            "rhs" => Some(1),
            _ => self.sides.iter().position(|(n, _)| *n == lower),
        };
        idx.and_then(|i| self.sides.get(i))
            .map(|(_, f)| *f)
            .ok_or_else(|| Error::UnknownSide { id: self.id.to_string(), side: name.to_string() })
    }

    pub fn side_names(&self) -> Vec<&'static str> {
        self.sides.iter().map(|(n, _)| *n).collect()
    }

    /// Whether one of the sides is a brute-force enumeration.
    pub fn has_oracle(&self) -> bool {
        self.sides.iter().any(|(n, _)| *n == "oracle")
    }
}

const ORDER: i64 = 60;

macro_rules! rec {
    ($id:literal, [$($v:literal),*], $anchor:literal, $notes:literal, [$(($side:literal, $f:path)),+ $(,)?]) => {
        IdentityRecord {
            id: $id,
            vars: &[$($v),*],
            default_order: ORDER,
            anchor: $anchor,
            notes: $notes,
            sides: &[$(($side, $f)),+],
        }
    };
}

static CATALOG: &[IdentityRecord] = &[
    rec!(
        "cauchy-limit",
        ["z"],
        "Cauchy limit of the q-binomial theorem",
        "(-z;q)_inf is expanded as (1+z)(-zq;q)_inf",
        [("lhs", b::cauchy_lhs), ("rhs", b::cauchy_rhs)]
    ),
    rec!(
        "final-thm",
        [],
        "P4 vs strict partitions without multiples of 4",
        "signed counts (-1)^{#λ} q^{|λ|} of both classes by enumeration",
        [("p4", b::final_p4), ("s4", b::final_s4)]
    ),
    rec!("fine-2021", ["b", "t"], "Fine's transformation", "", [("lhs", b::fine_lhs), ("rhs", b::fine_rhs)]),
    rec!(
        "g-gen",
        ["z"],
        "generating function of G in z^{a(λ)} q^{|λ|}",
        "",
        [("lhs", b::g_gen_lhs), ("oracle", b::g_oracle_z)]
    ),
    rec!(
        "g-resummation",
        ["z"],
        "change of summation order for G",
        "first and last lines of the chain, plus the G oracle",
        [("first", b::g_resum_first), ("last", b::g_resum_last), ("oracle", b::g_oracle_z)]
    ),
    rec!(
        "gg-36",
        [],
        "first Göllnitz–Gordon identity",
        "also checked against the gg-A class oracle",
        [("lhs", b::gg36_lhs), ("rhs", b::gg36_rhs), ("oracle", b::gg36_oracle)]
    ),
    rec!(
        "gprime-gen",
        ["z"],
        "generating function of G' in z^{a(λ)} q^{|λ|}",
        "z^{3n} q^{3n^2} numerator; the displayed z^n form fails (see gprime-gen-literal)",
        [("lhs", b::gprime_gen_lhs), ("oracle", b::gprime_oracle_z)]
    ),
    rec!(
        "gpxy-gen",
        ["x", "y"],
        "generating function of G' in (x, y)",
        "(x;xy)_n denominator; graded by q^{|λ|}; the (-x;xy)_n form fails (see gpxy-gen-literal)",
        [("lhs", b::gpxy_lhs), ("oracle", b::gprime_oracle_xy)]
    ),
    rec!(
        "gxy-gen",
        ["x", "y"],
        "generating function of G in (x, y)",
        "(x;xy)_n denominator; graded by q^{|λ|}; the (-x;xy)_n form fails (see gxy-gen-literal)",
        [("lhs", b::gxy_lhs), ("oracle", b::g_oracle_xy)]
    ),
    rec!(
        "h2-transform",
        ["a", "z"],
        "second Heine iteration, limiting case",
        "sum side, Fine form and the strict-overpartition sum",
        [("lhs", b::h2_lhs), ("rhs", b::sbar_fine), ("sum", b::sbar_gen_lhs)]
    ),
    rec!("jacobi-triple", ["z"], "Jacobi triple product", "", [("lhs", b::jacobi_lhs), ("rhs", b::jacobi_rhs)]),
    rec!(
        "lebesgue",
        ["a"],
        "Lebesgue's identity",
        "also checked against the sbar oracle with a marking overlines",
        [("lhs", b::lebesgue_lhs), ("rhs", b::lebesgue_rhs), ("oracle", b::lebesgue_oracle)]
    ),
    rec!(
        "lost-notebook",
        [],
        "Ramanujan's lost notebook identity",
        "",
        [("lhs", b::lost_notebook_lhs), ("rhs", b::lost_notebook_rhs)]
    ),
    rec!(
        "p4-gen",
        ["x", "y"],
        "generating function of P4 in x^{o} y^{e} q^{|λ|}",
        "also checked as the sum of the even and odd splits",
        [("lhs", b::p4_gen_lhs), ("oracle", b::p4_oracle), ("splits", b::p4_gen_split)]
    ),
    rec!(
        "p4-gen-e",
        ["x", "y"],
        "generating function of even-length P4",
        "",
        [("lhs", b::p4_gen_e_lhs), ("oracle", b::p4e_oracle)]
    ),
    rec!(
        "p4-gen-o",
        ["x", "y"],
        "generating function of odd-length P4",
        "",
        [("lhs", b::p4_gen_o_lhs), ("oracle", b::p4o_oracle)]
    ),
    rec!(
        "p4-watson-317",
        ["x", "y"],
        "Watson–Whipple specialization for P4",
        "stated identity only; the general transformation is not implemented",
        [("lhs", b::p4_gen_lhs), ("rhs", b::p4_watson_rhs)]
    ),
    rec!(
        "partition-odd",
        ["z"],
        "partitions into odd parts by length",
        "also checked against the odd-parts oracle",
        [("lhs", b::partition_odd_lhs), ("rhs", b::partition_odd_rhs), ("oracle", b::odd_oracle)]
    ),
    rec!(
        "q-binom-finite",
        ["z", "w"],
        "finite q-binomial theorem",
        "all n <= 20 at once; w^n marks the n-th instance",
        [("lhs", b::qbinom_lhs), ("rhs", b::qbinom_rhs)]
    ),
    rec!("rogers-518", [], "Rogers' identity", "", [("lhs", b::rogers518_lhs), ("rhs", b::rogers518_rhs)]),
    rec!(
        "rr-limit-1",
        [],
        "first Rogers–Ramanujan identity as a limit",
        "sum with prod (a + q^i), evaluated at a = 0",
        [("lhs", b::rr1_lhs), ("rhs", b::rr1_rhs)]
    ),
    rec!(
        "rr-limit-2",
        [],
        "second Rogers–Ramanujan identity as a limit",
        "sum with prod (a + q^{i+1}), evaluated at a = 0",
        [("lhs", b::rr2_lhs), ("rhs", b::rr2_rhs)]
    ),
    rec!(
        "sbar-gen",
        ["a", "z"],
        "generating function of strict overpartitions",
        "sum side vs oracle and vs the Fine form",
        [("lhs", b::sbar_gen_lhs), ("oracle", b::sbar_oracle), ("fine", b::sbar_fine)]
    ),
    rec!(
        "sears-517",
        ["z"],
        "Sears transformation specialization",
        "both equalities of the chain, with a z^n numerator",
        [("lhs", b::sears_a), ("middle", b::sears_b), ("rhs", b::sears_c)]
    ),
    rec!(
        "slater-13",
        [],
        "Slater (13)",
        "also checked against the (-q)_inf((-q^2;q^2)_inf + (-q;q^2)_inf) form",
        [("lhs", b::slater13_lhs), ("rhs", b::slater13_rhs), ("alt", b::slater13_alt)]
    ),
    rec!(
        "slater-15",
        [],
        "Slater (15)",
        "also the g-gen sum at z = -1",
        [("lhs", b::slater15_lhs), ("rhs", b::slater15_rhs), ("g-gen", b::slater15_from_g)]
    ),
    rec!(
        "slater-19",
        [],
        "Slater (19)",
        "also the gprime-gen sum and the Sears chain at z = -1",
        [
            ("lhs", b::slater19_lhs),
            ("rhs", b::slater19_rhs),
            ("gprime-gen", b::slater19_from_gprime),
            ("sears", b::slater19_from_sears)
        ]
    ),
    rec!(
        "slater-25",
        [],
        "Slater (25)",
        "also p4-gen at (x, y) = (1, 1)",
        [("lhs", b::slater25_lhs), ("rhs", b::slater25_rhs), ("p4-gen", b::slater25_from_p4)]
    ),
    rec!(
        "slater-4",
        [],
        "Slater (4)",
        "also p4-gen at (x, y) = (-1, -1)",
        [("lhs", b::slater4_lhs), ("rhs", b::slater4_rhs), ("p4-gen", b::slater4_from_p4)]
    ),
    rec!(
        "slater-5",
        [],
        "Slater (5)",
        "also partition-odd at z = -1",
        [("lhs", b::slater5_lhs), ("rhs", b::slater5_rhs), ("partition-odd", b::slater5_from_odd)]
    ),
    rec!(
        "slater-51",
        [],
        "Slater (51)",
        "sometimes cited as (53); also the even P4 split at (x, y) = (-1, 1)",
        [("lhs", b::slater51_lhs), ("rhs", b::slater51_rhs), ("p4-gen-e", b::slater51_from_p4e)]
    ),
    rec!(
        "slater-55",
        [],
        "Slater (55)",
        "also -q^{-1} times the odd P4 split at (x, y) = (-1, 1)",
        [("lhs", b::slater55_lhs), ("rhs", b::slater55_rhs), ("p4-gen-o", b::slater55_from_p4o)]
    ),
    rec!(
        "slater-8",
        [],
        "Slater (8)",
        "(q)_inf/(-q)_inf times the Lebesgue sum; also via lebesgue at a = 1",
        [("lhs", b::slater8_lhs), ("rhs", b::slater8_rhs), ("lebesgue", b::slater8_from_lebesgue)]
    ),
    rec!(
        "thm-3-5",
        [],
        "P4 at (x, y) = (1, -1)",
        "",
        [("lhs", b::thm35_lhs), ("rhs", b::thm35_rhs), ("oracle", b::thm35_oracle), ("watson", b::thm35_watson)]
    ),
    rec!(
        "thm-3-6",
        ["x"],
        "P4 at y = -1",
        "",
        [("lhs", b::thm36_lhs), ("rhs", b::thm36_rhs), ("oracle", b::thm36_oracle), ("watson", b::thm36_watson)]
    ),
    rec!(
        "thm-3-7",
        [],
        "P4 at (x, y) = (-1, 1)",
        "",
        [("lhs", b::thm37_lhs), ("rhs", b::thm37_rhs), ("oracle", b::thm37_oracle), ("watson", b::thm37_watson)]
    ),
    rec!(
        "thm-3-8",
        [],
        "P4 at (x, y) = (q, q^2)",
        "includes the intermediate product form",
        [
            ("lhs", b::thm38_lhs),
            ("rhs", b::thm38_rhs),
            ("middle", b::thm38_mid),
            ("oracle", b::thm38_oracle),
            ("watson", b::thm38_watson)
        ]
    ),
    rec!(
        "thm-3-9",
        [],
        "P4 at (x, y) = (-q, q^2)",
        "also the lost-notebook identity under q -> q^2",
        [
            ("lhs", b::thm39_lhs),
            ("rhs", b::thm39_rhs),
            ("oracle", b::thm39_oracle),
            ("watson", b::thm39_watson),
            ("lost-notebook", b::thm39_lost_notebook)
        ]
    ),
];

/// Displayed forms that are known to be wrong; each must fail.
static NEGATIVE_CONTROLS: &[IdentityRecord] = &[
    rec!(
        "gprime-gen-literal",
        ["z"],
        "generating function of G' as displayed",
        "z^n numerator; fails at q^3 (z^3 vs z)",
        [("lhs", b::gprime_gen_literal), ("oracle", b::gprime_oracle_z)]
    ),
    rec!(
        "gpxy-gen-literal",
        ["x", "y"],
        "generating function of G' in (x, y) as displayed",
        "(-x;xy)_n denominator; negative coefficients",
        [("lhs", b::gpxy_literal), ("oracle", b::gprime_oracle_xy)]
    ),
    rec!(
        "gxy-gen-literal",
        ["x", "y"],
        "generating function of G in (x, y) as displayed",
        "(-x;xy)_n denominator; negative coefficients",
        [("lhs", b::gxy_literal), ("oracle", b::g_oracle_xy)]
    ),
];

/// Catalog entries in id order.
pub fn catalog() -> &'static [IdentityRecord] {
    CATALOG
}

pub fn negative_controls() -> &'static [IdentityRecord] {
    NEGATIVE_CONTROLS
}

/// Looks up catalog entries and negative controls.
pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    CATALOG.iter().chain(NEGATIVE_CONTROLS).find(|r| r.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// One side of an identity at order `order`.
pub fn build_side(id: &str, side: &str, order: i64, cap: u64) -> Result<QSeries> {
    let rec = lookup(id)?;
    let f = rec.side(side)?;
    f(order, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_sorted_and_unique() {
        let ids: Vec<&str> = catalog().iter().map(|r| r.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(catalog().iter().all(|r| r.sides.len() >= 2));
    }

    #[test]
    fn side_lookup() {
        let r = lookup("slater-4").unwrap();
        assert!(r.side("LHS").is_ok() && r.side("p4-gen").is_ok());
        assert!(matches!(r.side("nope"), Err(Error::UnknownSide { .. })));
        assert!(matches!(lookup("no-such"), Err(Error::UnknownIdentity(_))));
    }
}
