//! Reading model files.  The extension picks the calculus; every file of
//! one run must use the same one.

use std::fs;
use std::path::{Path, PathBuf};

use symbis::asyncpi::{parse_pi, PiModel};
use symbis::opennet::{parse_nets, NetModel};
use symbis::swc::{parse_swc, SwcModel};
use symbis::ParseError;

use crate::error::CliError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Swc,
    Net,
    Pi,
}

impl Kind {
    pub fn of(path: &Path) -> Result<Kind, CliError> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("swc") => Ok(Kind::Swc),
            Some("net") => Ok(Kind::Net),
            Some("pi") => Ok(Kind::Pi),
            _ => Err(CliError::Usage(format!(
                "{}: unknown model format (expected .swc, .net or .pi)",
                path.display()
            ))),
        }
    }
}

pub enum Model {
    Swc(SwcModel),
    Net(NetModel),
    Pi(PiModel),
}

impl Model {
    pub fn state_names(&self) -> Vec<String> {
        match self {
            Model::Swc(m) => m.states.iter().map(|(n, _)| n.clone()).collect(),
            Model::Net(m) => m.markings.iter().map(|(n, _)| n.clone()).collect(),
            Model::Pi(m) => m.states.iter().map(|(n, _)| n.clone()).collect(),
        }
    }
}

/// Parses the concatenation of `paths`, reporting errors against the
/// file they occur in.
pub fn load(paths: &[PathBuf]) -> Result<Model, CliError> {
    let Some(first) = paths.first() else {
        return Err(CliError::Usage("no model files given".into()));
    };
    let kind = Kind::of(first)?;
    let mut src = String::new();
    let mut starts = Vec::new();
    for p in paths {
        if Kind::of(p)? != kind {
            return Err(CliError::Usage(format!(
                "{}: cannot mix model formats in one run",
                p.display()
            )));
        }
        let text = fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.clone(),
            source,
        })?;
        starts.push(src.lines().count());
        src.push_str(&text);
        if !src.ends_with('\n') {
            src.push('\n');
        }
    }
    let locate = |e: ParseError| {
        let i = starts.iter().rposition(|&s| s < e.line).unwrap_or(0);
        CliError::Parse {
            path: paths[i].clone(),
            line: e.line - starts[i],
            col: e.col,
            msg: e.msg,
        }
    };
    let model = match kind {
        Kind::Swc => Model::Swc(parse_swc(&src).map_err(locate)?),
        Kind::Net => Model::Net(parse_nets(&src).map_err(locate)?),
        Kind::Pi => Model::Pi(parse_pi(&src).map_err(locate)?),
    };
    if model.state_names().is_empty() {
        return Err(CliError::Parse {
            path: paths[paths.len() - 1].clone(),
            line: 1,
            col: 1,
            msg: "no states declared".into(),
        });
    }
    Ok(model)
}
