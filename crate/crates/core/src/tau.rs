//! Rules for the concordance invariant tau and interval estimates for it.

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TauError {
    #[error("torus parameters ({p},{q}) must be coprime with |p|, q >= 2")]
    TorusDomain { p: i64, q: i64 },
    #[error("signature {0} is odd")]
    OddSignature(i64),
    #[error("tb + r = {0} is even; not a Legendrian knot")]
    InvalidRepresentative(i64),
    #[error("unknotting bound {0} is negative")]
    NegativeUnknotting(i64),
    #[error("rule not applicable: {0}")]
    RuleNotApplicable(String),
    #[error("estimates [{0}, {1}] and [{2}, {3}] are disjoint")]
    Disjoint(i64, i64, i64, i64),
}

impl TauError {
    pub fn code(&self) -> &'static str {
        match self {
            TauError::TorusDomain { .. } | TauError::OddSignature(_) | TauError::NegativeUnknotting(_) => "tau_domain",
            TauError::InvalidRepresentative(_) => "invalid_representative",
            TauError::RuleNotApplicable(_) => "rule_not_applicable",
            TauError::Disjoint(..) => "tau_inconsistent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    TorusFormula,
    AlternatingSignature,
    Mirror,
    ConnectedSum,
    Sandwich,
    Whitehead,
    Metadata,
}

/// Integer interval containing tau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauEstimate {
    pub lower: i64,
    pub upper: i64,
    pub determined: bool,
    pub provenance: Vec<Rule>,
}

impl TauEstimate {
    pub fn exact(tau: i64, rule: Rule) -> Self {
        TauEstimate { lower: tau, upper: tau, determined: true, provenance: vec![rule] }
    }

    pub fn interval(lower: i64, upper: i64, rule: Rule) -> Self {
        debug_assert!(lower <= upper);
        TauEstimate { lower, upper, determined: lower == upper, provenance: vec![rule] }
    }

    pub fn value(&self) -> Option<i64> {
        self.determined.then_some(self.lower)
    }

    /// Combines two estimates of the same knot.
    pub fn intersect(&self, other: &TauEstimate) -> Result<TauEstimate, TauError> {
        let lower = self.lower.max(other.lower);
        let upper = self.upper.min(other.upper);
        if lower > upper {
            return Err(TauError::Disjoint(self.lower, self.upper, other.lower, other.upper));
        }
        let mut provenance = self.provenance.clone();
        for r in &other.provenance {
            if !provenance.contains(r) {
                provenance.push(*r);
            }
        }
        Ok(TauEstimate { lower, upper, determined: lower == upper, provenance })
    }

    /// Estimate for the mirror image.
    pub fn mirrored(&self) -> TauEstimate {
        let mut provenance = self.provenance.clone();
        provenance.push(Rule::Mirror);
        TauEstimate { lower: -self.upper, upper: -self.lower, determined: self.determined, provenance }
    }

    /// Estimate for the connected sum.
    pub fn sum(&self, other: &TauEstimate) -> TauEstimate {
        let mut provenance = self.provenance.clone();
        provenance.extend(other.provenance.iter().copied());
        provenance.push(Rule::ConnectedSum);
        let (lower, upper) = (self.lower + other.lower, self.upper + other.upper);
        TauEstimate { lower, upper, determined: lower == upper, provenance }
    }
}

/// Tau of the `(p, q)` torus knot; `p < 0` means its mirror.
pub fn tau_torus(p: i64, q: i64) -> Result<i64, TauError> {
    if q < 2 || p.abs() < 2 || p.abs().gcd(&q) != 1 {
        return Err(TauError::TorusDomain { p, q });
    }
    Ok(p.signum() * (p.abs() - 1) * (q - 1) / 2)
}

pub fn tau_alternating(sigma: i64) -> Result<i64, TauError> {
    if sigma % 2 != 0 {
        return Err(TauError::OddSignature(sigma));
    }
    Ok(-sigma / 2)
}

pub fn tau_mirror(t: i64) -> i64 {
    -t
}

pub fn tau_connected_sum(t1: i64, t2: i64) -> i64 {
    t1 + t2
}

/// `(tb + |r| + 1) / 2 <= tau <= u`. Both signs of `r` are covered by the
/// absolute value.
pub fn sandwich(tb: i64, r: i64, unknotting_upper: i64) -> Result<TauEstimate, TauError> {
    if (tb + r).rem_euclid(2) == 0 {
        return Err(TauError::InvalidRepresentative(tb + r));
    }
    if unknotting_upper < 0 {
        return Err(TauError::NegativeUnknotting(unknotting_upper));
    }
    let lower = (tb + r.abs() + 1) / 2;
    let lower = lower.max(-unknotting_upper);
    let upper = unknotting_upper;
    if lower > upper {
        return Err(TauError::Disjoint(lower, lower, -upper, upper));
    }
    Ok(TauEstimate { lower, upper, determined: lower == upper, provenance: vec![Rule::Sandwich] })
}

/// Iterated untwisted positive Whitehead doubles of a knot with a
/// Legendrian representative of positive tb have tau 1.
pub fn whitehead_double_tau(has_positive_tb_rep: bool) -> Result<TauEstimate, TauError> {
    if has_positive_tb_rep {
        Ok(TauEstimate::exact(1, Rule::Whitehead))
    } else {
        Err(TauError::RuleNotApplicable("companion has no Legendrian representative with positive tb".into()))
    }
}
