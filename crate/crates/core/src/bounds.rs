//! The table of upper bounds on `tb + |r|` (and on `tb` alone) for a
//! Legendrian representative.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::ClassicalInvariants;
use crate::metadata::KnotMetadata;
use crate::poly::LaurentPoly2;
use crate::skein::{homfly_bound, kauffman_bound};
use crate::tau::{sandwich, tau_alternating, tau_torus, Rule, TauError, TauEstimate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{knot}: {bound} bound {value} violated by realized {quantity} = {realized}")]
    Violated { knot: String, bound: String, value: i64, quantity: Quantity, realized: i64 },
}

/// What a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    #[serde(rename = "tb")]
    Tb,
    #[serde(rename = "tb+|r|")]
    TbPlusAbsR,
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Quantity::Tb => "tb",
            Quantity::TbPlusAbsR => "tb+|r|",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: Option<i64>,
    pub applicable: bool,
    pub satisfied: bool,
    pub slack: Option<i64>,
    pub quantity: Quantity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub tb: i64,
    pub r: i64,
    pub parity_ok: bool,
    pub bounds: Vec<BoundEntry>,
    pub tau: Option<TauEstimate>,
    /// False when some applicable bound is already `<= 0`.
    pub tb_can_be_positive: bool,
}

impl BoundReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    /// Value of an applicable bound.
    pub fn value(&self, name: &str) -> Option<i64> {
        self.entry(name).filter(|b| b.applicable).and_then(|b| b.value)
    }
}

/// Polynomials of the knot, when they were computed.
#[derive(Debug, Clone, Copy)]
pub struct Polys<'a> {
    pub homfly: &'a LaurentPoly2,
    pub kauffman: &'a LaurentPoly2,
}

fn entry(name: &str, quantity: Quantity, value: Option<i64>, realized: i64, note: Option<&str>) -> BoundEntry {
    match value {
        Some(v) => BoundEntry {
            name: name.into(),
            value: Some(v),
            applicable: true,
            satisfied: realized <= v,
            slack: Some(v - realized),
            quantity,
            note: note.map(Into::into),
        },
        None => BoundEntry {
            name: name.into(),
            value: None,
            applicable: false,
            satisfied: true,
            slack: None,
            quantity,
            note: note.map(Into::into),
        },
    }
}

/// Evaluates every bound. A violated applicable bound is an error.
pub fn bound_table(
    inv: &ClassicalInvariants,
    meta: &KnotMetadata,
    tau: Option<&TauEstimate>,
    polys: Option<Polys<'_>>,
) -> Result<BoundReport, BoundsError> {
    let sum = inv.tb_plus_abs_r();
    let (g, diagrammatic) = meta.bennequin_genus();
    let mut bounds = vec![entry(
        "bennequin",
        Quantity::TbPlusAbsR,
        Some(2 * g - 1),
        sum,
        diagrammatic.then_some("genus from Seifert circles; not necessarily sharp"),
    )];
    let tau_value = tau.and_then(TauEstimate::value);
    bounds.push(entry("tau", Quantity::TbPlusAbsR, tau_value.map(|t| 2 * t - 1), sum, None));
    let sig = meta.signature_determines_tau().then(|| -meta.signature - 1);
    bounds.push(entry(
        "signature",
        Quantity::TbPlusAbsR,
        sig,
        sum,
        (!meta.signature_determines_tau()).then_some("needs an alternating or perfect knot"),
    ));
    bounds.push(entry("four_ball", Quantity::TbPlusAbsR, meta.fourball_genus.map(|g| 2 * g - 1), sum, None));
    let (hb, kb) = match polys {
        Some(p) => (homfly_bound(p.homfly).ok(), kauffman_bound(p.kauffman).ok()),
        None => (None, None),
    };
    let missing = polys.is_none().then_some("polynomial not computed");
    bounds.push(entry("homfly", Quantity::TbPlusAbsR, hb, sum, missing));
    bounds.push(entry("kauffman", Quantity::Tb, kb, inv.tb, missing));

    if let Some(b) = bounds.iter().find(|b| b.applicable && !b.satisfied) {
        let realized = match b.quantity {
            Quantity::Tb => inv.tb,
            Quantity::TbPlusAbsR => sum,
        };
        return Err(BoundsError::Violated {
            knot: meta.name.clone(),
            bound: b.name.clone(),
            value: b.value.unwrap_or_default(),
            quantity: b.quantity,
            realized,
        });
    }
    let tb_upper = bounds.iter().filter(|b| b.applicable).filter_map(|b| b.value).min();
    Ok(BoundReport {
        name: meta.name.clone(),
        tb: inv.tb,
        r: inv.r,
        parity_ok: inv.parity_ok(),
        bounds,
        tau: tau.cloned(),
        tb_can_be_positive: tb_upper.is_none_or(|v| v > 0),
    })
}

/// Combines every tau rule the metadata and representative allow.
pub fn estimate_tau(inv: &ClassicalInvariants, meta: &KnotMetadata) -> Result<Option<TauEstimate>, TauError> {
    let mut estimates = Vec::new();
    if let Some((p, q)) = meta.torus_params {
        estimates.push(TauEstimate::exact(tau_torus(p, q)?, Rule::TorusFormula));
    }
    if meta.signature_determines_tau() {
        estimates.push(TauEstimate::exact(tau_alternating(meta.signature)?, Rule::AlternatingSignature));
    }
    if let Some(gs) = meta.fourball_genus {
        estimates.push(TauEstimate::interval(-gs, gs, Rule::Metadata));
    }
    if let Some(u) = meta.unknotting_upper {
        estimates.push(sandwich(inv.tb, inv.r, u)?);
    }
    let mut it = estimates.into_iter();
    let Some(first) = it.next() else { return Ok(None) };
    it.try_fold(first, |acc, e| acc.intersect(&e)).map(Some)
}
