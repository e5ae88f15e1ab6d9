//! Knot corpus: entries pairing a front with metadata and pinned expected
//! values, batch checking, and crossing-change unknotting certificates.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bound_table, estimate_tau, BoundReport, Polys};
use crate::front::{orient, ClassicalInvariants, FrontDiagram};
use crate::metadata::KnotMetadata;
use crate::pd::{front_to_pd, PDCode, PdError};
use crate::skein::{homfly_with, kauffman_with, SkeinConfig, SkeinError};
use crate::tau::TauEstimate;
use crate::topo;
use crate::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("no entries in {0}")]
    NoEntries(String),
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error("{entry}: {field} expected {expected}, got {actual}")]
    Mismatch { entry: String, field: String, expected: String, actual: String },
}

impl CorpusError {
    pub fn code(&self) -> &'static str {
        match self {
            CorpusError::NoEntries(_) => "corpus_empty",
            CorpusError::Parse { .. } => "corpus_parse",
            CorpusError::Mismatch { .. } => "corpus_mismatch",
        }
    }
}

/// Values pinned for regression. Absent fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tb: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<i64>,
    /// Bound name to value; `null` pins the bound as not applicable.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bounds: BTreeMap<String, Option<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homfly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kauffman: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub front: FrontDiagram,
    pub metadata: KnotMetadata,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    /// Indices (from 0) of crossings of the front's PD code whose change
    /// unknots it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unknotting_certificate: Option<Vec<usize>>,
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        &self.metadata.name
    }

    pub fn from_json(path: &str, text: &str) -> Result<Self, CorpusError> {
        serde_json::from_str(text).map_err(|e| CorpusError::Parse { path: path.into(), message: e.to_string() })
    }
}

/// Reads every `*.json` file in a directory, sorted by entry name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, Error> {
    let io = |e| Error::Io { path: dir.display().to_string(), source: e };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut entries = Vec::with_capacity(paths.len());
    for p in paths {
        let text = std::fs::read_to_string(&p).map_err(|e| Error::Io { path: p.display().to_string(), source: e })?;
        entries.push(CorpusEntry::from_json(&p.display().to_string(), &text)?);
    }
    if entries.is_empty() {
        return Err(CorpusError::NoEntries(dir.display().to_string()).into());
    }
    entries.sort_by(|a, b| a.name().cmp(b.name()));
    Ok(entries)
}

macro_rules! shipped_files {
    ($($name:literal),* $(,)?) => {
        [$(($name, include_str!(concat!("../corpus/", $name)))),*]
    };
}

const SHIPPED: [(&str, &str); 11] = shipped_files!(
    "eye.json",
    "figure_eight.json",
    "k10_139.json",
    "kink.json",
    "left_trefoil.json",
    "m10_145.json",
    "right_trefoil.json",
    "torus_2_5.json",
    "torus_3_4.json",
    "torus_m2_3.json",
    "torus_m2_5.json",
);

/// The corpus compiled into the library.
pub fn shipped() -> Vec<CorpusEntry> {
    let mut entries: Vec<CorpusEntry> =
        SHIPPED.iter().map(|(path, text)| CorpusEntry::from_json(path, text).expect("shipped corpus parses")).collect();
    entries.sort_by(|a, b| a.name().cmp(b.name()));
    entries
}

/// A shipped entry by knot name.
pub fn shipped_entry(name: &str) -> Option<CorpusEntry> {
    shipped().into_iter().find(|e| e.name() == name)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknottingCheck {
    pub verdict: Verdict,
    pub switched: Vec<usize>,
    pub determinant: i64,
    pub homfly_trivial: bool,
    /// Crossings left after greedy Reidemeister I/II reduction.
    pub remaining_crossings: usize,
}

/// Changes the listed crossings and tests for the unknot: fails on a
/// nontrivial determinant or HOMFLY polynomial, passes when Reidemeister
/// I/II reduction clears every crossing, and is inconclusive otherwise.
pub fn verify_unknotting(pd: &PDCode, switches: &[usize], config: &SkeinConfig) -> Result<UnknottingCheck, Error> {
    let mut sorted = switches.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(PdError::Invalid(format!("crossing {} listed twice", w[0])).into());
    }
    let switched = pd.switch_crossings(switches)?;
    let determinant = topo::determinant(&switched);
    let (_, reduced) = switched.to_diagram().simplify();
    let remaining = reduced.crossing_count();
    let homfly_trivial = if determinant == 1 { homfly_with(&switched, config)?.poly.is_one() } else { false };
    let verdict = if !homfly_trivial {
        Verdict::Fail
    } else if remaining == 0 {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    Ok(UnknottingCheck {
        verdict,
        switched: switches.to_vec(),
        determinant,
        homfly_trivial,
        remaining_crossings: remaining,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub name: String,
    pub ok: bool,
    pub invariants: Option<ClassicalInvariants>,
    pub pd: Option<String>,
    pub signature: Option<i64>,
    pub determinant: Option<i64>,
    pub seifert_genus_upper: Option<i64>,
    pub homfly: Option<String>,
    pub kauffman: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polys_skipped: Option<String>,
    pub tau: Option<TauEstimate>,
    pub bounds: Option<BoundReport>,
    pub unknotting: Option<UnknottingCheck>,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub ok: bool,
    pub entries: Vec<EntryReport>,
}

impl CorpusReport {
    /// The first failure as an error naming entry and field.
    pub fn first_failure(&self) -> Option<CorpusError> {
        self.entries.iter().find_map(|e| {
            e.failures.first().map(|f| CorpusError::Mismatch {
                entry: e.name.clone(),
                field: f.field.clone(),
                expected: f.expected.clone(),
                actual: f.actual.clone(),
            })
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<16} {:>4} {:>4} {:>4} {:>6} {:>6} {:>9} {:>6} {:>12}  status",
            "name", "tb", "r", "sig", "tau", "homfly", "kauffman", "tau-b", "unknot"
        );
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
        for e in &self.entries {
            let inv = e.invariants.as_ref();
            let tau = e.tau.as_ref().map_or("-".to_string(), |t| {
                if t.determined {
                    t.lower.to_string()
                } else {
                    format!("[{},{}]", t.lower, t.upper)
                }
            });
            let bound = |n: &str| opt(e.bounds.as_ref().and_then(|b| b.value(n)));
            let unknot = e.unknotting.as_ref().map_or("-".to_string(), |u| {
                serde_json::to_value(u.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
            });
            let status = if e.ok {
                "ok".to_string()
            } else {
                format!("FAIL {}", e.failures.iter().map(|f| f.field.as_str()).collect::<Vec<_>>().join(","))
            };
            let _ = writeln!(
                out,
                "{:<16} {:>4} {:>4} {:>4} {:>6} {:>6} {:>9} {:>6} {:>12}  {}",
                e.name,
                opt(inv.map(|i| i.tb)),
                opt(inv.map(|i| i.r)),
                opt(e.signature),
                tau,
                bound("homfly"),
                bound("kauffman"),
                bound("tau"),
                unknot,
                status
            );
        }
        let _ = writeln!(out, "{}", if self.ok { "all entries pass" } else { "FAILED" });
        out
    }
}

/// Checks every entry; entries are processed in parallel and reported in
/// name order.
pub fn corpus_check(entries: &[CorpusEntry], config: &SkeinConfig) -> CorpusReport {
    let mut sorted: Vec<&CorpusEntry> = entries.iter().collect();
    sorted.sort_by(|a, b| a.name().cmp(b.name()));
    let entries: Vec<EntryReport> = sorted.par_iter().map(|e| check_entry(e, config)).collect();
    CorpusReport { ok: !entries.is_empty() && entries.iter().all(|e| e.ok), entries }
}

struct Checker {
    failures: Vec<Failure>,
}

impl Checker {
    fn fail(&mut self, field: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure { field: field.into(), expected: expected.to_string(), actual: actual.to_string() });
    }

    fn compare<T: PartialEq + ToString>(&mut self, field: &str, expected: Option<T>, actual: T) {
        if let Some(x) = expected {
            if x != actual {
                self.fail(field, x.to_string(), actual.to_string());
            }
        }
    }
}

fn show(v: Option<i64>) -> String {
    v.map_or("not applicable".into(), |v| v.to_string())
}

/// Runs the full pipeline on one entry.
pub fn check_entry(entry: &CorpusEntry, config: &SkeinConfig) -> EntryReport {
    let mut ck = Checker { failures: Vec::new() };
    let mut report = EntryReport {
        name: entry.name().to_string(),
        ok: false,
        invariants: None,
        pd: None,
        signature: None,
        determinant: None,
        seifert_genus_upper: None,
        homfly: None,
        kauffman: None,
        polys_skipped: None,
        tau: None,
        bounds: None,
        unknotting: None,
        failures: Vec::new(),
    };
    let meta = &entry.metadata;
    for p in meta.problems() {
        ck.fail("metadata", "consistent metadata", p);
    }
    let oriented = match orient(&entry.front) {
        Ok(f) => f,
        Err(e) => {
            ck.fail("front", "valid front", e);
            report.failures = ck.failures;
            return report;
        }
    };
    let inv = oriented.invariants();
    report.invariants = Some(inv);
    let pd = front_to_pd(&oriented);
    report.pd = Some(pd.to_string());
    let sigma = topo::signature(&pd);
    let det = topo::determinant(&pd);
    let seifert = topo::seifert_genus_upper(&pd);
    report.signature = Some(sigma);
    report.determinant = Some(det);
    report.seifert_genus_upper = Some(seifert);
    if sigma != meta.signature {
        ck.fail("signature", meta.signature, sigma);
    }
    if seifert != meta.seifert_genus_upper {
        ck.fail("seifert_genus_upper", meta.seifert_genus_upper, seifert);
    }
    if !inv.parity_ok() {
        ck.fail("parity", "tb + r odd", inv.tb + inv.r);
    }

    let polys = match (homfly_with(&pd, config), kauffman_with(&pd, config)) {
        (Ok(h), Ok(k)) => Some((h.poly, k.poly)),
        (Err(SkeinError::CapExceeded { crossings, cap }), _) | (_, Err(SkeinError::CapExceeded { crossings, cap })) => {
            report.polys_skipped = Some(format!("{crossings} crossings exceed the cap of {cap}"));
            None
        }
        (Err(e), _) | (_, Err(e)) => {
            ck.fail("polynomials", "computable", e);
            None
        }
    };
    if let Some((h, k)) = &polys {
        report.homfly = Some(h.to_string());
        report.kauffman = Some(k.to_string());
    }

    let tau = match estimate_tau(&inv, meta) {
        Ok(t) => t,
        Err(e) => {
            ck.fail("tau", "consistent tau rules", e);
            None
        }
    };
    report.tau = tau.clone();
    let bounds = bound_table(&inv, meta, tau.as_ref(), polys.as_ref().map(|(h, k)| Polys { homfly: h, kauffman: k }));
    match bounds {
        Ok(b) => report.bounds = Some(b),
        Err(crate::bounds::BoundsError::Violated { bound, value, realized, .. }) => {
            ck.fail(format!("bounds.{bound}"), format!("at most {value}"), realized);
        }
    }

    if let Some(exp) = &entry.expected {
        ck.compare("tb", exp.tb, inv.tb);
        ck.compare("r", exp.r, inv.r);
        ck.compare("determinant", exp.determinant, det);
        if let Some(t) = exp.tau {
            let got = tau.as_ref().and_then(TauEstimate::value);
            if got != Some(t) {
                ck.fail("tau", t, show(got));
            }
        }
        for (name, want) in &exp.bounds {
            let got = report.bounds.as_ref().and_then(|b| b.value(name));
            if got != *want {
                ck.fail(format!("bounds.{name}"), show(*want), show(got));
            }
        }
        for (field, want, got) in [
            ("homfly", &exp.homfly, polys.as_ref().map(|p| &p.0)),
            ("kauffman", &exp.kauffman, polys.as_ref().map(|p| &p.1)),
        ] {
            let Some(want) = want else { continue };
            match (want.parse::<crate::poly::LaurentPoly2>(), got) {
                (Ok(w), Some(g)) if w == *g => {}
                (_, g) => ck.fail(field, want, g.map_or("not computed".into(), |g| g.to_string())),
            }
        }
    }

    if let Some(cert) = &entry.unknotting_certificate {
        match verify_unknotting(&pd, cert, config) {
            Ok(check) => {
                if check.verdict == Verdict::Fail {
                    ck.fail("unknotting_certificate", "pass or inconclusive", "fail");
                }
                if let Some(u) = meta.unknotting_upper {
                    if cert.len() as i64 > u {
                        ck.fail("unknotting_certificate", format!("at most {u} crossings"), cert.len());
                    }
                }
                report.unknotting = Some(check);
            }
            Err(e) => ck.fail("unknotting_certificate", "valid crossing indices", e),
        }
    }

    report.ok = ck.failures.is_empty();
    report.failures = ck.failures;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PDCode {
        s.parse().unwrap()
    }

    #[test]
    fn kink_unknots_without_switches() {
        let c = verify_unknotting(&pd("PD[X(1,1,2,2)]"), &[], &SkeinConfig::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
    }

    #[test]
    fn trefoil_is_not_unknotted_by_nothing() {
        let t = pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]");
        let cfg = SkeinConfig::default();
        assert_eq!(verify_unknotting(&t, &[], &cfg).unwrap().verdict, Verdict::Fail);
        assert_eq!(verify_unknotting(&t, &[0], &cfg).unwrap().verdict, Verdict::Pass);
        assert!(verify_unknotting(&t, &[3], &cfg).is_err());
        assert!(verify_unknotting(&t, &[0, 0], &cfg).is_err());
    }

    #[test]
    fn shipped_corpus_is_sorted_and_complete() {
        let names: Vec<String> = shipped().iter().map(|e| e.name().to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!(names.len(), SHIPPED.len());
    }
}
