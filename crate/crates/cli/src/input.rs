//! Reading fronts, corpus entries and PD codes from files.

use std::path::Path;

use leglab::corpus::CorpusEntry;
use leglab::{Error, FrontDiagram, PDCode};

pub enum Input {
    Entry(Box<CorpusEntry>),
    Front(FrontDiagram),
    Pd(PDCode),
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| "knot".into(), |s| s.to_string_lossy().into_owned())
}

/// Accepts a corpus entry, a front as JSON, a front word such as
/// `L1 X1 R1`, or a PD code such as `PD[X(1,1,2,2)]`.
pub fn read(path: &Path) -> Result<Input, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), source: e })?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| leglab::front::FrontError::Parse(e.to_string()))?;
        if value.get("front").is_some() {
            return Ok(Input::Entry(Box::new(CorpusEntry::from_json(&path.display().to_string(), trimmed)?)));
        }
        return Ok(Input::Front(FrontDiagram::from_json(trimmed)?));
    }
    if trimmed.starts_with("PD") {
        return Ok(Input::Pd(trimmed.parse()?));
    }
    Ok(Input::Front(FrontDiagram::from_word(stem(path), trimmed)?))
}

impl Input {
    pub fn front(self) -> Result<FrontDiagram, Error> {
        match self {
            Input::Entry(e) => Ok(e.front),
            Input::Front(f) => Ok(f),
            Input::Pd(_) => Err(leglab::front::FrontError::Parse("expected a front, found a PD code".into()).into()),
        }
    }
}
