//! HOMFLY and Kauffman polynomials by descending-diagram skein recursion.
//!
//! HOMFLY: `a P(L+) - a^-1 P(L-) = z P(L0)`, `P(unknot) = 1`.
//!
//! Kauffman: computed through the Dubrovnik regular-isotopy invariant
//! `Lambda(L+) - Lambda(L-) = z (Lambda(L0) - Lambda(Linf))`, a positive
//! curl contributing `a`. After writhe normalization the result is carried
//! to the Kauffman `F` normalization by `F(a, z) = D(-i a, i z)`.
//!
//! Each node is reduced by Reidemeister I/II moves and split into
//! crossing-connected pieces; connected pieces are memoized by canonical key.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::Diagram;
use crate::pd::PDCode;
use crate::poly::{LaurentPoly2, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("{crossings} crossings exceed the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error("bound undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl SkeinError {
    pub fn code(&self) -> &'static str {
        match self {
            SkeinError::CapExceeded { .. } => "crossing_cap_exceeded",
            SkeinError::ZeroPolynomial => "zero_polynomial",
            SkeinError::Poly(_) => "poly_overflow",
        }
    }
}

pub const DEFAULT_CROSSING_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinConfig {
    /// Largest crossing count accepted after Reidemeister I/II reduction.
    pub crossing_cap: usize,
    pub memo: bool,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { crossing_cap: DEFAULT_CROSSING_CAP, memo: true }
    }
}

/// Polynomial plus recursion statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinResult {
    pub poly: LaurentPoly2,
    /// Connected pieces evaluated, memo hits included.
    pub nodes: u64,
    pub memo_hits: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Homfly,
    Dubrovnik,
}

struct Engine {
    kind: Kind,
    delta: LaurentPoly2,
    memo: Option<HashMap<Vec<u32>, LaurentPoly2>>,
    nodes: u64,
    hits: u64,
}

impl Engine {
    fn new(kind: Kind, memo: bool) -> Self {
        let delta = match kind {
            Kind::Homfly => LaurentPoly2::from_terms([(1, -1, 1), (-1, -1, -1)]),
            Kind::Dubrovnik => LaurentPoly2::from_terms([(1, -1, 1), (-1, -1, -1), (0, 0, 1)]),
        }
        .expect("small constants");
        Engine { kind, delta, memo: memo.then(HashMap::new), nodes: 0, hits: 0 }
    }

    /// P for HOMFLY, Lambda for Dubrovnik.
    fn eval(&mut self, d: &Diagram) -> Result<LaurentPoly2, PolyError> {
        let (curls, d) = d.simplify();
        let mut value = LaurentPoly2::one();
        if self.kind == Kind::Dubrovnik {
            let twist: i32 = curls.iter().map(|&s| s as i32).sum();
            value = value.checked_shift(1, twist, 0)?;
        }
        let pieces = d.pieces();
        let parts = pieces.len() + d.free_loops();
        value = value.checked_mul(&self.delta.checked_pow(parts as u32 - 1)?)?;
        for piece in &pieces {
            let p = self.eval_connected(piece)?;
            value = value.checked_mul(&p)?;
        }
        Ok(value)
    }

    fn eval_connected(&mut self, d: &Diagram) -> Result<LaurentPoly2, PolyError> {
        self.nodes += 1;
        let key = self.memo.as_ref().map(|_| d.canonical_key());
        if let (Some(memo), Some(key)) = (&self.memo, &key) {
            if let Some(p) = memo.get(key) {
                self.hits += 1;
                return Ok(p.clone());
            }
        }
        let value = match d.first_ascending_crossing() {
            None => self.descending(d)?,
            Some(x) => self.resolve(d, x)?,
        };
        if let (Some(memo), Some(key)) = (&mut self.memo, key) {
            memo.insert(key, value.clone());
        }
        Ok(value)
    }

    fn descending(&self, d: &Diagram) -> Result<LaurentPoly2, PolyError> {
        let comps = d.component_count() as u32;
        let base = self.delta.checked_pow(comps - 1)?;
        match self.kind {
            Kind::Homfly => Ok(base),
            Kind::Dubrovnik => base.checked_shift(1, d.self_writhe() as i32, 0),
        }
    }

    fn resolve(&mut self, d: &Diagram, x: usize) -> Result<LaurentPoly2, PolyError> {
        let sign = d.sign(x);
        let switched = self.eval(&d.switched(x))?;
        let smoothed = self.eval(&d.smooth_oriented(x))?;
        match self.kind {
            Kind::Homfly => {
                // L+ = a^-2 L- + a^-1 z L0; L- = a^2 L+ - a z L0.
                let (da, c) = if sign > 0 { (-1, 1) } else { (1, -1) };
                switched.checked_shift(1, 2 * da, 0)?.checked_add(&smoothed.checked_shift(c, da, 1)?)
            }
            Kind::Dubrovnik => {
                let other = self.eval(&d.smooth_unoriented(x))?;
                let diff = smoothed.checked_sub(&other)?;
                switched.checked_add(&diff.checked_shift(sign as i64, 0, 1)?)
            }
        }
    }
}

fn prepare(pd: &PDCode, config: &SkeinConfig) -> Result<Diagram, SkeinError> {
    let d = pd.to_diagram();
    let (_, reduced) = d.simplify();
    if reduced.crossing_count() > config.crossing_cap {
        return Err(SkeinError::CapExceeded { crossings: reduced.crossing_count(), cap: config.crossing_cap });
    }
    Ok(d)
}

pub fn homfly_with(pd: &PDCode, config: &SkeinConfig) -> Result<SkeinResult, SkeinError> {
    let d = prepare(pd, config)?;
    let mut engine = Engine::new(Kind::Homfly, config.memo);
    let poly = engine.eval(&d)?;
    Ok(SkeinResult { poly, nodes: engine.nodes, memo_hits: engine.hits })
}

/// Dubrovnik polynomial (writhe normalized).
pub fn dubrovnik_with(pd: &PDCode, config: &SkeinConfig) -> Result<SkeinResult, SkeinError> {
    let d = prepare(pd, config)?;
    let mut engine = Engine::new(Kind::Dubrovnik, config.memo);
    let lambda = engine.eval(&d)?;
    let poly = lambda.checked_shift(1, -(d.writhe() as i32), 0)?;
    Ok(SkeinResult { poly, nodes: engine.nodes, memo_hits: engine.hits })
}

pub fn kauffman_with(pd: &PDCode, config: &SkeinConfig) -> Result<SkeinResult, SkeinError> {
    let mut r = dubrovnik_with(pd, config)?;
    r.poly = dubrovnik_to_kauffman(&r.poly);
    Ok(r)
}

/// `F(a, z) = D(-i a, i z)` for knots, where every term has `i + j` even.
pub fn dubrovnik_to_kauffman(d: &LaurentPoly2) -> LaurentPoly2 {
    d.substitute(1, 1, |i, j| {
        let parity = if i.rem_euclid(2) == 1 { -1 } else { 1 };
        let quarter = if ((i + j) / 2).rem_euclid(2) == 1 { -1 } else { 1 };
        parity * quarter
    })
}

pub fn homfly(pd: &PDCode) -> Result<LaurentPoly2, SkeinError> {
    homfly_with(pd, &SkeinConfig::default()).map(|r| r.poly)
}

pub fn kauffman(pd: &PDCode) -> Result<LaurentPoly2, SkeinError> {
    kauffman_with(pd, &SkeinConfig::default()).map(|r| r.poly)
}

/// Upper bound on `tb + |r|`: `-(max a-degree of P) - 1`.
pub fn homfly_bound(p: &LaurentPoly2) -> Result<i64, SkeinError> {
    p.max_a_degree().map(|m| -(m as i64) - 1).ok_or(SkeinError::ZeroPolynomial)
}

/// Upper bound on `tb`: `-(max a-degree of F) - 1`.
pub fn kauffman_bound(f: &LaurentPoly2) -> Result<i64, SkeinError> {
    f.max_a_degree().map(|m| -(m as i64) - 1).ok_or(SkeinError::ZeroPolynomial)
}
