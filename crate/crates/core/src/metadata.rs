//! Per-knot facts that cannot be read off a front: genus data, unknotting
//! number bounds, alternating/perfect flags and torus parameters.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::pd::PDCode;
use crate::topo;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotMetadata {
    pub name: String,
    pub signature: i64,
    pub seifert_genus_upper: i64,
    /// Exact three-genus when known; otherwise the Seifert bound is used.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fourball_genus: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unknotting_upper: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alternating: Option<bool>,
    /// Knots with `tau = -signature / 2` beyond the alternating ones.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perfect: Option<bool>,
    /// `(p, q)` with `q >= 2`; `p < 0` for the mirror of the `(|p|, q)` knot.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_params: Option<(i64, i64)>,
}

impl KnotMetadata {
    /// Metadata with signature and Seifert bound computed from a diagram.
    pub fn from_pd(name: impl Into<String>, pd: &PDCode) -> Self {
        KnotMetadata {
            name: name.into(),
            signature: topo::signature(pd),
            seifert_genus_upper: topo::seifert_genus_upper(pd),
            genus: None,
            fourball_genus: None,
            unknotting_upper: None,
            alternating: None,
            perfect: None,
            torus_params: None,
        }
    }

    /// Problems with the stated facts, empty when consistent.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.signature % 2 != 0 {
            out.push(format!("signature {} is odd", self.signature));
        }
        if self.seifert_genus_upper < 0 {
            out.push("negative seifert_genus_upper".into());
        }
        if let Some(g) = self.genus {
            if g < 0 || g > self.seifert_genus_upper {
                out.push(format!("genus {g} outside 0..={}", self.seifert_genus_upper));
            }
        }
        if let Some(gs) = self.fourball_genus {
            if gs < 0 || self.genus.is_some_and(|g| gs > g) {
                out.push(format!("fourball_genus {gs} exceeds genus or is negative"));
            }
            if self.unknotting_upper.is_some_and(|u| gs > u) {
                out.push(format!("fourball_genus {gs} exceeds unknotting_upper"));
            }
        }
        if self.unknotting_upper.is_some_and(|u| u < 0) {
            out.push("negative unknotting_upper".into());
        }
        if let Some((p, q)) = self.torus_params {
            if q < 2 || p.abs() < 2 || p.abs().gcd(&q) != 1 {
                out.push(format!("torus parameters ({p},{q}) must be coprime with |p|, q >= 2"));
            }
        }
        out
    }

    /// Genus used for the Bennequin bound and whether it is only the
    /// diagrammatic upper bound.
    pub fn bennequin_genus(&self) -> (i64, bool) {
        match self.genus {
            Some(g) => (g, false),
            None => (self.seifert_genus_upper, true),
        }
    }

    /// Whether `tau = -signature / 2` is known to hold.
    pub fn signature_determines_tau(&self) -> bool {
        self.alternating == Some(true) || self.perfect == Some(true)
    }
}
