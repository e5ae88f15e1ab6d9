//! Planar-diagram codes.
//!
//! A crossing `X(i, j, k, l)` lists its four arcs counterclockwise starting
//! from the incoming under arc, so `k` is the outgoing under arc. Arcs are
//! numbered `1..=2n` along the knot.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Dart, Diagram};
use crate::front::{Direction, OrientedFront};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("cannot parse PD code: {0}")]
    Parse(String),
    #[error("invalid PD code: {0}")]
    Invalid(String),
    #[error("crossing index {index} out of range for {crossings} crossings")]
    BadIndex { index: usize, crossings: usize },
}

impl PdError {
    pub fn code(&self) -> &'static str {
        match self {
            PdError::Parse(_) => "pd_parse",
            PdError::Invalid(_) => "pd_invalid",
            PdError::BadIndex { .. } => "pd_bad_index",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PDCode {
    pub crossings: Vec<[u32; 4]>,
}

impl PDCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self, PdError> {
        let pd = PDCode { crossings };
        pd.validate()?;
        Ok(pd)
    }

    pub fn unknot() -> Self {
        PDCode::default()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Checks arc labelling, orientation consistency and that the code
    /// describes a single closed curve.
    pub fn validate(&self) -> Result<(), PdError> {
        let n = self.crossings.len();
        let mut count = vec![0u32; 2 * n + 1];
        for x in &self.crossings {
            for &a in x {
                if a == 0 || a as usize > 2 * n {
                    return Err(PdError::Invalid(format!("arc label {a} outside 1..={}", 2 * n)));
                }
                count[a as usize] += 1;
            }
        }
        if let Some(a) = (1..=2 * n).find(|&a| count[a] != 2) {
            return Err(PdError::Invalid(format!("arc {a} appears {} times", count[a])));
        }
        let d = self.try_diagram()?;
        let comps = d.component_count();
        if n > 0 && comps != 1 {
            return Err(PdError::Invalid(format!("{comps} components; only knots are supported")));
        }
        Ok(())
    }

    fn try_diagram(&self) -> Result<Diagram, PdError> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(Diagram::unknot());
        }
        let mut ends: Vec<Vec<Dart>> = vec![Vec::new(); 2 * n + 1];
        for (c, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.iter().enumerate() {
                ends[a as usize].push((c, s as u8));
            }
        }
        let mut nbr = vec![[(0usize, 0u8); 4]; n];
        for e in ends.iter().skip(1) {
            let (d1, d2) = (e[0], e[1]);
            nbr[d1.0][d1.1 as usize] = d2;
            nbr[d2.0][d2.1 as usize] = d1;
        }
        // Orientation: walk from the outgoing under slot of every crossing.
        let mut out: Vec<[Option<bool>; 4]> = vec![[Some(false), None, Some(true), None]; n];
        let mut visited = vec![[false; 4]; n];
        for c0 in 0..n {
            if visited[c0][2] {
                continue;
            }
            let start = (c0, 2u8);
            let mut cur = start;
            loop {
                visited[cur.0][cur.1 as usize] = true;
                let (c, s) = nbr[cur.0][cur.1 as usize];
                visited[c][s as usize] = true;
                let exit = (s + 2) % 4;
                let conflict = out[c][s as usize] == Some(true) || out[c][exit as usize] == Some(false);
                if conflict {
                    return Err(PdError::Invalid(format!(
                        "crossing {} is entered through its outgoing under arc",
                        c + 1
                    )));
                }
                out[c][s as usize] = Some(false);
                out[c][exit as usize] = Some(true);
                cur = (c, exit);
                if cur == start {
                    break;
                }
            }
        }
        let mut any_unset = false;
        let out = out
            .into_iter()
            .map(|row| {
                row.map(|v| {
                    any_unset |= v.is_none();
                    v.unwrap_or(false)
                })
            })
            .collect::<Vec<_>>();
        if any_unset {
            return Err(PdError::Invalid("a component never passes under a crossing".into()));
        }
        Ok(Diagram::from_parts(nbr, vec![true; n], out, 0))
    }

    /// The internal rotation-system form. Panics on an invalid code; codes
    /// built through [`PDCode::new`] or parsing are always valid.
    pub(crate) fn to_diagram(&self) -> Diagram {
        self.try_diagram().expect("PD code was validated")
    }

    pub fn writhe(&self) -> i64 {
        self.to_diagram().writhe()
    }

    /// Per-crossing signs in order.
    pub fn signs(&self) -> Vec<i8> {
        let d = self.to_diagram();
        (0..self.crossing_count()).map(|c| d.sign(c)).collect()
    }

    /// The diagram with the listed crossings changed.
    pub fn switch_crossings(&self, indices: &[usize]) -> Result<PDCode, PdError> {
        let n = self.crossing_count();
        let d = self.to_diagram();
        let mut crossings = self.crossings.clone();
        for &c in indices {
            if c >= n {
                return Err(PdError::BadIndex { index: c, crossings: n });
            }
            crossings[c] = switch_tuple(crossings[c], &d, c);
        }
        Ok(PDCode { crossings })
    }
}

/// Rotates a tuple so that it starts at the incoming arc of the former over
/// strand.
fn switch_tuple(x: [u32; 4], d: &Diagram, c: usize) -> [u32; 4] {
    let start = if d.is_outgoing((c, 3)) { 1 } else { 3 };
    [x[start], x[(start + 1) % 4], x[(start + 2) % 4], x[(start + 3) % 4]]
}

/// The mirror image: every crossing changed.
pub fn mirror(pd: &PDCode) -> PDCode {
    let all: Vec<usize> = (0..pd.crossing_count()).collect();
    pd.switch_crossings(&all).expect("indices in range")
}

#[cfg(test)]
impl Diagram {
    pub(crate) fn from_pd(pd: &PDCode) -> Diagram {
        pd.to_diagram()
    }
}

/// The smooth diagram obtained by rounding the cusps of a front.
///
/// Arc 1 starts just after the first crossing met when walking the front in
/// its orientation from the first left cusp.
pub fn front_to_pd(f: &OrientedFront) -> PDCode {
    let crossings = f.crossings();
    let n = crossings.len();
    if n == 0 {
        return PDCode::unknot();
    }
    let mut on_strand: Vec<Vec<usize>> = vec![Vec::new(); f.traversal().len()];
    for (k, x) in crossings.iter().enumerate() {
        on_strand[x.over].push(k);
        on_strand[x.under].push(k);
    }
    // (crossing, passing on the under strand) in traversal order.
    let mut passages: Vec<(usize, bool)> = Vec::with_capacity(2 * n);
    for &(s, dir) in f.traversal() {
        let mut list = on_strand[s].clone();
        list.sort_by_key(|&k| crossings[k].event);
        if dir == Direction::Left {
            list.reverse();
        }
        passages.extend(list.into_iter().map(|k| (k, crossings[k].under == s)));
    }
    let total = passages.len() as u32;
    let mut under = vec![(0u32, 0u32); n];
    let mut over = vec![(0u32, 0u32); n];
    for (t, &(k, on_under)) in passages.iter().enumerate() {
        let arcs = (if t == 0 { total } else { t as u32 }, t as u32 + 1);
        if on_under {
            under[k] = arcs;
        } else {
            over[k] = arcs;
        }
    }
    let out = (0..n)
        .map(|k| {
            let (ui, uo) = under[k];
            let (oi, oo) = over[k];
            let x = &crossings[k];
            // Slots counterclockwise: NE, NW, SW, SE. Under runs SW-NE, over NW-SE.
            let under_right = f.direction(x.under) == Direction::Right;
            let (nw, se) = if f.direction(x.over) == Direction::Right { (oi, oo) } else { (oo, oi) };
            if under_right {
                [ui, se, uo, nw]
            } else {
                [ui, nw, uo, se]
            }
        })
        .collect();
    PDCode { crossings: out }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD[")?;
        for (k, x) in self.crossings.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "X({},{},{},{})", x[0], x[1], x[2], x[3])?;
        }
        write!(f, "]")
    }
}

impl FromStr for PDCode {
    type Err = PdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| PdError::Parse(format!("{why} in {s:?}"));
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = body.strip_prefix("PD[").and_then(|b| b.strip_suffix(']')).ok_or_else(|| bad("expected PD[...]"))?;
        let mut crossings = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest.strip_prefix("X(").ok_or_else(|| bad("expected X("))?;
            let close = inner.find(')').ok_or_else(|| bad("unclosed X("))?;
            let nums: Vec<u32> = inner[..close]
                .split(',')
                .map(|t| t.parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad("non-integer arc label"))?;
            let tuple: [u32; 4] = nums.try_into().map_err(|_| bad("crossing without four arcs"))?;
            crossings.push(tuple);
            rest = &inner[close + 1..];
            if let Some(r) = rest.strip_prefix(',') {
                if r.is_empty() {
                    return Err(bad("trailing comma"));
                }
                rest = r;
            } else if !rest.is_empty() {
                return Err(bad("expected ',' between crossings"));
            }
        }
        PDCode::new(crossings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::{orient, FrontDiagram};

    const TREFOIL: &str = "PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]";

    #[test]
    fn text_round_trip_is_exact() {
        let pd: PDCode = TREFOIL.parse().unwrap();
        assert_eq!(pd.to_string(), TREFOIL);
        assert_eq!(PDCode::unknot().to_string(), "PD[]");
        assert_eq!("PD[]".parse::<PDCode>().unwrap(), PDCode::unknot());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("X(1,2,3,4)".parse::<PDCode>(), Err(PdError::Parse(_))));
        assert!(matches!("PD[X(1,2,3)]".parse::<PDCode>(), Err(PdError::Parse(_))));
        assert!(matches!("PD[X(1,2,3,4)]".parse::<PDCode>(), Err(PdError::Invalid(_))));
    }

    #[test]
    fn trefoil_is_positive() {
        let pd: PDCode = TREFOIL.parse().unwrap();
        assert_eq!(pd.signs(), vec![1, 1, 1]);
        assert_eq!(mirror(&pd).writhe(), -3);
        assert_eq!(mirror(&mirror(&pd)), pd);
    }

    #[test]
    fn one_crossing_kinks() {
        let pos: PDCode = "PD[X(1,1,2,2)]".parse().unwrap();
        let neg: PDCode = "PD[X(2,1,1,2)]".parse().unwrap();
        assert_eq!(pos.writhe(), 1);
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn rejects_links() {
        let hopf = "PD[X(1,3,2,4), X(3,1,4,2)]".parse::<PDCode>();
        assert!(matches!(hopf, Err(PdError::Invalid(_))));
    }

    #[test]
    fn front_conversion_keeps_writhe() {
        for word in ["L1 R1", "L1 X1 R1", "L1 L1 X2 X2 X2 R1 R1", "L1 L3 X2 X2 X2 X2 R3 R1 "] {
            let Ok(front) = FrontDiagram::from_word("w", word) else { continue };
            let Ok(f) = orient(&front) else { continue };
            let pd = front_to_pd(&f);
            assert_eq!(pd.crossing_count(), front.crossing_count());
            pd.validate().unwrap();
            assert_eq!(pd.writhe(), f.invariants().writhe, "{word}");
        }
    }

    #[test]
    fn kink_front_gives_negative_kink() {
        let f = orient(&FrontDiagram::from_word("k", "L1 X1 R1").unwrap()).unwrap();
        assert_eq!(front_to_pd(&f).writhe(), -1);
    }
}
