//! Legendrian front projections encoded as words of cusp/crossing events.
//!
//! A front is read left to right. The state between events is a stack of
//! strands ordered top to bottom, positions counting from 1 at the top.
//!
//! * `L i` inserts a left cusp whose two branches occupy positions `i, i+1`.
//! * `X i` crosses the strands at `i` and `i+1`. The strand moving down
//!   (from `i` to `i+1`) has the lesser slope and is therefore in front.
//! * `R i` joins the strands at `i` and `i+1` in a right cusp.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EventKind {
    #[serde(rename = "L")]
    LeftCusp,
    #[serde(rename = "X")]
    Crossing,
    #[serde(rename = "R")]
    RightCusp,
}

impl EventKind {
    fn letter(self) -> char {
        match self {
            EventKind::LeftCusp => 'L',
            EventKind::Crossing => 'X',
            EventKind::RightCusp => 'R',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrontEvent {
    #[serde(rename = "t")]
    pub kind: EventKind,
    #[serde(rename = "i")]
    pub position: usize,
}

impl FrontEvent {
    pub fn left(position: usize) -> Self {
        FrontEvent { kind: EventKind::LeftCusp, position }
    }

    pub fn cross(position: usize) -> Self {
        FrontEvent { kind: EventKind::Crossing, position }
    }

    pub fn right(position: usize) -> Self {
        FrontEvent { kind: EventKind::RightCusp, position }
    }
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.position)
    }
}

impl FromStr for FrontEvent {
    type Err = FrontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('L') | Some('l') => EventKind::LeftCusp,
            Some('X') | Some('x') => EventKind::Crossing,
            Some('R') | Some('r') => EventKind::RightCusp,
            _ => return Err(FrontError::Parse(format!("bad event token `{s}`"))),
        };
        let position =
            chars.as_str().parse::<usize>().map_err(|_| FrontError::Parse(format!("bad event position in `{s}`")))?;
        Ok(FrontEvent { kind, position })
    }
}

/// One invariant violation found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "code", rename_all = "snake_case")]
pub enum Violation {
    /// The event's position is outside the range allowed by the current stack.
    BadPosition { index: usize, event: String, strands: usize },
    /// The word has no events at all.
    Empty,
    /// The stack is not empty after the last event.
    Unclosed { strands: usize },
    /// Left and right cusp counts differ.
    CuspCountMismatch { left: usize, right: usize },
    /// The closed curve has more than one component.
    MultiComponent { components: usize },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::BadPosition { .. } => "bad_position",
            Violation::Empty => "empty",
            Violation::Unclosed { .. } => "unclosed",
            Violation::CuspCountMismatch { .. } => "cusp_count_mismatch",
            Violation::MultiComponent { .. } => "multi_component",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadPosition { index, event, strands } => {
                write!(f, "event {index} ({event}) is out of range for {strands} strands")
            }
            Violation::Empty => write!(f, "front has no events"),
            Violation::Unclosed { strands } => {
                write!(f, "strand count ends at {strands}, not 0")
            }
            Violation::CuspCountMismatch { left, right } => {
                write!(f, "{left} left cusps but {right} right cusps")
            }
            Violation::MultiComponent { components } => {
                write!(f, "closure has {components} components, expected a knot")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum FrontError {
    #[error("malformed front: {}", join_violations(.0))]
    Malformed(Vec<Violation>),
    #[error("front is a link: {0}")]
    MultiComponent(Violation),
    #[error("cannot parse front: {0}")]
    Parse(String),
}

impl FrontError {
    pub fn code(&self) -> &'static str {
        match self {
            FrontError::Malformed(_) => "front_malformed",
            FrontError::MultiComponent(_) => "front_multi_component",
            FrontError::Parse(_) => "front_parse",
        }
    }

    pub fn violations(&self) -> Vec<Violation> {
        match self {
            FrontError::Malformed(v) => v.clone(),
            FrontError::MultiComponent(v) => vec![v.clone()],
            FrontError::Parse(_) => Vec::new(),
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontDiagram {
    pub name: String,
    pub events: Vec<FrontEvent>,
}

impl FrontDiagram {
    pub fn new(name: impl Into<String>, events: Vec<FrontEvent>) -> Self {
        FrontDiagram { name: name.into(), events }
    }

    /// Parses a whitespace/comma separated word such as `"L1 X1 R1"`.
    pub fn from_word(name: impl Into<String>, word: &str) -> Result<Self, FrontError> {
        let events = word
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FrontDiagram::new(name, events))
    }

    pub fn from_json(text: &str) -> Result<Self, FrontError> {
        serde_json::from_str(text).map_err(|e| FrontError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("front serializes")
    }

    pub fn word(&self) -> String {
        self.events.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn crossing_count(&self) -> usize {
        self.count(EventKind::Crossing)
    }

    pub fn left_cusp_count(&self) -> usize {
        self.count(EventKind::LeftCusp)
    }

    pub fn right_cusp_count(&self) -> usize {
        self.count(EventKind::RightCusp)
    }

    fn count(&self, kind: EventKind) -> usize {
        self.events.iter().filter(|e| e.kind == kind).count()
    }

    /// The elementary "eye" front of the unknot.
    pub fn eye() -> Self {
        FrontDiagram::new("eye", vec![FrontEvent::left(1), FrontEvent::right(1)])
    }

    /// Closure of a positive braid word on `strands` strands.
    ///
    /// Generators are 1-based. The braid sits below the nested return arcs,
    /// so every braid crossing is positive and `tb = word.len() - strands`.
    pub fn positive_braid_closure(name: impl Into<String>, strands: usize, word: &[usize]) -> Self {
        let n = strands;
        let mut events: Vec<FrontEvent> = (1..=n).map(FrontEvent::left).collect();
        events.extend(word.iter().map(|&g| FrontEvent::cross(n + g)));
        events.extend((1..=n).rev().map(FrontEvent::right));
        FrontDiagram::new(name, events)
    }
}

pub type StrandId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }

    fn dx(self) -> i64 {
        match self {
            Direction::Right => 1,
            Direction::Left => -1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CuspTag {
    Up,
    Down,
}

impl CuspTag {
    pub fn flip(self) -> Self {
        match self {
            CuspTag::Up => CuspTag::Down,
            CuspTag::Down => CuspTag::Up,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CuspSide {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cusp {
    pub event: usize,
    pub side: CuspSide,
    pub tag: CuspTag,
    pub upper: StrandId,
    pub lower: StrandId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrontCrossing {
    pub event: usize,
    /// Strand moving down through the crossing; it is in front.
    pub over: StrandId,
    pub under: StrandId,
    pub sign: i8,
}

/// Combinatorial skeleton of a valid front: how strands are born, die and cross.
#[derive(Debug, Clone)]
pub(crate) struct Skeleton {
    /// Per strand: death event and cusp partners.
    pub strands: Vec<StrandEnds>,
    /// Per crossing event index: (over, under) strand ids.
    pub crossings: Vec<(usize, StrandId, StrandId)>,
    /// For each L event index, (upper, lower); same for R events.
    pub left_cusps: Vec<(usize, StrandId, StrandId)>,
    pub right_cusps: Vec<(usize, StrandId, StrandId)>,
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct StrandEnds {
    pub death: usize,
    pub left_partner: StrandId,
    pub right_partner: StrandId,
}

fn simulate(events: &[FrontEvent]) -> (Option<Skeleton>, Vec<Violation>) {
    let mut violations = Vec::new();
    if events.is_empty() {
        violations.push(Violation::Empty);
        return (None, violations);
    }
    let mut stack: Vec<StrandId> = Vec::new();
    let mut strands: Vec<StrandEnds> = Vec::new();
    let mut skel =
        Skeleton { strands: Vec::new(), crossings: Vec::new(), left_cusps: Vec::new(), right_cusps: Vec::new() };
    let (mut lefts, mut rights) = (0usize, 0usize);
    for (idx, ev) in events.iter().enumerate() {
        let s = stack.len();
        let i = ev.position;
        let ok = match ev.kind {
            EventKind::LeftCusp => (1..=s + 1).contains(&i),
            EventKind::Crossing | EventKind::RightCusp => i >= 1 && i < s,
        };
        match ev.kind {
            EventKind::LeftCusp => lefts += 1,
            EventKind::RightCusp => rights += 1,
            EventKind::Crossing => {}
        }
        if !ok {
            violations.push(Violation::BadPosition { index: idx, event: ev.to_string(), strands: s });
            continue;
        }
        match ev.kind {
            EventKind::LeftCusp => {
                let upper = strands.len();
                let lower = upper + 1;
                strands.push(StrandEnds { left_partner: lower, ..Default::default() });
                strands.push(StrandEnds { left_partner: upper, ..Default::default() });
                stack.insert(i - 1, lower);
                stack.insert(i - 1, upper);
                skel.left_cusps.push((idx, upper, lower));
            }
            EventKind::Crossing => {
                let over = stack[i - 1];
                let under = stack[i];
                stack.swap(i - 1, i);
                skel.crossings.push((idx, over, under));
            }
            EventKind::RightCusp => {
                let upper = stack[i - 1];
                let lower = stack[i];
                stack.drain(i - 1..=i);
                strands[upper].death = idx;
                strands[upper].right_partner = lower;
                strands[lower].death = idx;
                strands[lower].right_partner = upper;
                skel.right_cusps.push((idx, upper, lower));
            }
        }
    }
    if !stack.is_empty() {
        violations.push(Violation::Unclosed { strands: stack.len() });
    }
    if lefts != rights {
        violations.push(Violation::CuspCountMismatch { left: lefts, right: rights });
    }
    if !violations.is_empty() {
        return (None, violations);
    }
    skel.strands = strands;
    (Some(skel), violations)
}

impl Skeleton {
    /// Walks every closed component. Each component starts on the upper strand
    /// of the earliest left cusp not yet visited, moving right.
    pub fn components(&self) -> Vec<Vec<(StrandId, Direction)>> {
        let n = self.strands.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for &(_, upper, _) in &self.left_cusps {
            if seen[upper] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut s, mut dir) = (upper, Direction::Right);
            loop {
                seen[s] = true;
                walk.push((s, dir));
                s = match dir {
                    Direction::Right => self.strands[s].right_partner,
                    Direction::Left => self.strands[s].left_partner,
                };
                dir = dir.flip();
                if s == upper && dir == Direction::Right {
                    break;
                }
            }
            comps.push(walk);
        }
        comps
    }
}

/// Checks every front invariant and reports all violations found.
pub fn validate(diagram: &FrontDiagram) -> Result<(), FrontError> {
    skeleton(diagram).map(|_| ())
}

pub(crate) fn skeleton(diagram: &FrontDiagram) -> Result<Skeleton, FrontError> {
    let (skel, violations) = simulate(&diagram.events);
    let skel = match skel {
        Some(s) => s,
        None => return Err(FrontError::Malformed(violations)),
    };
    let comps = skel.components().len();
    if comps != 1 {
        return Err(FrontError::MultiComponent(Violation::MultiComponent { components: comps }));
    }
    Ok(skel)
}

/// A valid front together with an orientation and everything derived from it.
#[derive(Debug, Clone)]
pub struct OrientedFront {
    diagram: FrontDiagram,
    reversed: bool,
    traversal: Vec<(StrandId, Direction)>,
    directions: Vec<Direction>,
    cusps: Vec<Cusp>,
    crossings: Vec<FrontCrossing>,
}

/// Orients a front canonically: the upper strand born at the first left cusp
/// is traversed left to right.
pub fn orient(diagram: &FrontDiagram) -> Result<OrientedFront, FrontError> {
    OrientedFront::build(diagram.clone(), false)
}

pub fn reverse_orientation(f: &OrientedFront) -> OrientedFront {
    f.reversed()
}

impl OrientedFront {
    pub fn new(diagram: FrontDiagram, reversed: bool) -> Result<Self, FrontError> {
        OrientedFront::build(diagram, reversed)
    }

    fn build(diagram: FrontDiagram, reversed: bool) -> Result<Self, FrontError> {
        let skel = skeleton(&diagram)?;
        let mut traversal = skel.components().remove(0);
        if reversed {
            traversal.reverse();
            for step in traversal.iter_mut() {
                step.1 = step.1.flip();
            }
        }
        let mut directions = vec![Direction::Right; skel.strands.len()];
        for &(s, d) in &traversal {
            directions[s] = d;
        }
        let mut cusps: Vec<Cusp> = Vec::with_capacity(skel.left_cusps.len() * 2);
        for &(event, upper, lower) in &skel.left_cusps {
            // Leaving along the upper branch means the curve turns upward.
            let tag = if directions[upper] == Direction::Right { CuspTag::Up } else { CuspTag::Down };
            cusps.push(Cusp { event, side: CuspSide::Left, tag, upper, lower });
        }
        for &(event, upper, lower) in &skel.right_cusps {
            // Arriving along the upper branch means the curve turns downward.
            let tag = if directions[upper] == Direction::Right { CuspTag::Down } else { CuspTag::Up };
            cusps.push(Cusp { event, side: CuspSide::Right, tag, upper, lower });
        }
        cusps.sort_by_key(|c| c.event);
        let crossings = skel
            .crossings
            .iter()
            .map(|&(event, over, under)| FrontCrossing {
                event,
                over,
                under,
                sign: crossing_sign(directions[over], directions[under]),
            })
            .collect();
        Ok(OrientedFront { diagram, reversed, traversal, directions, cusps, crossings })
    }

    pub fn diagram(&self) -> &FrontDiagram {
        &self.diagram
    }

    pub fn name(&self) -> &str {
        &self.diagram.name
    }

    /// True when the orientation is opposite to the canonical one.
    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn traversal(&self) -> &[(StrandId, Direction)] {
        &self.traversal
    }

    pub fn direction(&self, strand: StrandId) -> Direction {
        self.directions[strand]
    }

    pub fn cusps(&self) -> &[Cusp] {
        &self.cusps
    }

    pub fn crossings(&self) -> &[FrontCrossing] {
        &self.crossings
    }

    pub fn reversed(&self) -> OrientedFront {
        OrientedFront::build(self.diagram.clone(), !self.reversed).expect("front already validated")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.diagram.name = name.into();
        self
    }

    pub fn invariants(&self) -> ClassicalInvariants {
        classical_invariants(self)
    }
}

/// Sign of a crossing from the traversal directions of its strands.
///
/// Going right, the over strand has direction (1, -1) and the under strand
/// (1, 1) in the (x, z) plane; the sign is that of their cross product.
fn crossing_sign(over: Direction, under: Direction) -> i8 {
    let (ox, oz) = (over.dx(), -over.dx());
    let (ux, uz) = (under.dx(), under.dx());
    (ox * uz - oz * ux).signum() as i8
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    pub writhe: i64,
    pub tb: i64,
    pub r: i64,
    pub left_cusps: i64,
    pub right_cusps: i64,
}

impl ClassicalInvariants {
    /// `tb + |r|`, the quantity every upper bound constrains.
    pub fn tb_plus_abs_r(&self) -> i64 {
        self.tb + self.r.abs()
    }

    pub fn parity_ok(&self) -> bool {
        (self.tb + self.r).rem_euclid(2) == 1
    }
}

/// `tb = writhe - #right cusps`, `r = #upward right cusps - #downward left cusps`.
pub fn classical_invariants(f: &OrientedFront) -> ClassicalInvariants {
    let writhe: i64 = f.crossings.iter().map(|c| c.sign as i64).sum();
    let mut right = 0i64;
    let mut left = 0i64;
    let mut up_right = 0i64;
    let mut down_left = 0i64;
    for c in &f.cusps {
        match (c.side, c.tag) {
            (CuspSide::Right, tag) => {
                right += 1;
                if tag == CuspTag::Up {
                    up_right += 1;
                }
            }
            (CuspSide::Left, tag) => {
                left += 1;
                if tag == CuspTag::Down {
                    down_left += 1;
                }
            }
        }
    }
    ClassicalInvariants { writhe, tb: writhe - right, r: up_right - down_left, left_cusps: left, right_cusps: right }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilizationSign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

/// Adds one zigzag right after the first left cusp, on its upper branch.
///
/// A zigzag that climbs while the strand is traversed rightward adds an
/// upward right cusp, so it raises `r` by one; the descending zigzag adds a
/// downward left cusp instead.
pub fn stabilize(f: &OrientedFront, sign: StabilizationSign) -> OrientedFront {
    let first = f.diagram.events[0];
    debug_assert_eq!(first.kind, EventKind::LeftCusp);
    let p = first.position;
    let rightward = !f.reversed;
    let climbing =
        matches!((sign, rightward), (StabilizationSign::Positive, true) | (StabilizationSign::Negative, false));
    let zigzag = if climbing {
        [FrontEvent::left(p), FrontEvent::right(p + 1)]
    } else {
        [FrontEvent::left(p + 1), FrontEvent::right(p)]
    };
    let mut events = f.diagram.events.clone();
    events.splice(1..1, zigzag);
    let diagram = FrontDiagram::new(f.diagram.name.clone(), events);
    OrientedFront::build(diagram, f.reversed).expect("stabilization keeps the front valid")
}

/// Legendrian isotopy (a swallowtail) on the upper branch of the first left
/// cusp, producing a new first right cusp with the requested tag.
fn with_swallowtail(f: &OrientedFront, tag: CuspTag) -> OrientedFront {
    let p = f.diagram.events[0].position;
    let rightward = !f.reversed;
    // The upper-branch swallowtail yields a downward right cusp when the
    // strand runs rightward; the lower-branch one yields an upward cusp.
    let upper_variant = (tag == CuspTag::Down) == rightward;
    let tail = if upper_variant {
        [FrontEvent::left(p + 1), FrontEvent::cross(p), FrontEvent::right(p + 1)]
    } else {
        [FrontEvent::left(p), FrontEvent::cross(p + 1), FrontEvent::right(p)]
    };
    let mut events = f.diagram.events.clone();
    events.splice(1..1, tail);
    OrientedFront::build(FrontDiagram::new(f.diagram.name.clone(), events), f.reversed)
        .expect("swallowtail keeps the front valid")
}

/// Cusp-to-cusp connected sum: the right cusp of `f1` is opened and `f2`'s
/// first left cusp is glued in its place.
///
/// Gluing respects both orientations only when the right cusp and the left
/// cusp carry opposite tags. The first such right cusp of `f1` is used; if
/// none exists, a swallowtail is added to `f1` first.
pub fn connect_sum(f1: &OrientedFront, f2: &OrientedFront) -> OrientedFront {
    let f2_tag = f2.cusps.iter().find(|c| c.side == CuspSide::Left).expect("valid front").tag;
    let want = f2_tag.flip();
    let site = f1.cusps.iter().find(|c| c.side == CuspSide::Right && c.tag == want).map(|c| c.event);
    let (base, site) = match site {
        Some(e) => (f1.clone(), e),
        None => {
            let g = with_swallowtail(f1, want);
            let e = g.cusps.iter().find(|c| c.side == CuspSide::Right).expect("valid front").event;
            (g, e)
        }
    };
    let offset = base.diagram.events[site].position - 1;
    let mut events: Vec<FrontEvent> = base.diagram.events[..site].to_vec();
    events.extend(f2.diagram.events[1..].iter().map(|e| FrontEvent { kind: e.kind, position: e.position + offset }));
    events.extend_from_slice(&base.diagram.events[site + 1..]);
    let name = format!("{}#{}", f1.diagram.name, f2.diagram.name);
    OrientedFront::build(FrontDiagram::new(name, events), f1.reversed).expect("connected sum of knots is a knot")
}
