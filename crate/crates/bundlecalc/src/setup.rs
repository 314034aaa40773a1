//! Zero-locus set-ups from command-line flags or a TOML file.

use std::path::Path;

use bundlecalc_core::bbw::{bbw, BbwResult};
use bundlecalc_core::{normalize, BundleExpr, Grassmannian, ZeroLocus};
use serde::Deserialize;

use crate::dsl::parse;
use crate::error::CliError;

/// How the user-supplied bundle was read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Given as the conormal bundle `N∨`.
    Conormal,
    /// Given as the bundle `N` whose section cuts out `X`; dualised.
    Section,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Conormal => "conormal",
            Orientation::Section => "section",
        }
    }
}

/// A resolved zero-locus set-up.
#[derive(Clone, Debug)]
pub struct Setup {
    pub locus: ZeroLocus,
    pub orientation: Orientation,
}

impl Setup {
    pub fn grassmannian(&self) -> &Grassmannian {
        self.locus.grassmannian()
    }
}

/// Contents of a `--setup-file`.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SetupFile {
    pub k: usize,
    pub n: usize,
    /// The conormal bundle `N∨`.
    pub conormal: Option<String>,
    /// The bundle `N` with a general section; alternative to `conormal`.
    pub section: Option<String>,
}

impl SetupFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Precondition(format!("{}: {e}", path.display())))
    }
}

/// A bundle is read as the section bundle when every irreducible summand
/// has global sections; conormal bundles of zero loci have none.
fn looks_like_section_bundle(expr: &BundleExpr, g: &Grassmannian) -> Result<bool, CliError> {
    let summands = normalize(expr, g)?;
    if summands.is_empty() {
        return Ok(false);
    }
    for s in &summands {
        match bbw(s, g)? {
            BbwResult::Nonzero { degree: 0, .. } => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Builds a set-up from the flag values. `conormal` is oriented
/// automatically; `section` is always the section bundle.
pub fn resolve(
    ambient: Option<(usize, usize)>,
    conormal: Option<&str>,
    section: Option<&str>,
    file: Option<&Path>,
) -> Result<Option<Setup>, CliError> {
    let file = file.map(SetupFile::load).transpose()?;
    let (k, n) = match (&file, ambient) {
        (Some(f), Some(a)) if a != (f.k, f.n) => {
            return Err(CliError::Precondition(format!(
                "--ambient {} {} disagrees with the setup file's Gr({},{})",
                a.0, a.1, f.k, f.n
            )))
        }
        (Some(f), _) => (f.k, f.n),
        (None, Some(a)) => a,
        (None, None) => {
            if conormal.is_some() || section.is_some() {
                return Err(CliError::Precondition("a zero-locus bundle needs --ambient K N".into()));
            }
            return Ok(None);
        }
    };
    let from_file = file.as_ref().map(|f| (f.conormal.as_deref(), f.section.as_deref()));
    let (conormal, section) = match (from_file, conormal, section) {
        (Some((fc, fs)), None, None) => (fc, fs),
        (Some(_), _, _) => {
            return Err(CliError::Precondition(
                "give the zero-locus bundle either in the setup file or on the command line".into(),
            ))
        }
        (None, c, s) => (c, s),
    };
    let g = Grassmannian::new(k, n)?;
    let (expr, orientation) = match (conormal, section) {
        (Some(_), Some(_)) => return Err(CliError::Precondition("conormal and section are exclusive".into())),
        (None, None) => return Ok(None),
        (None, Some(s)) => (parse(s)?, Orientation::Section),
        (Some(c), None) => {
            let e = parse(c)?;
            if looks_like_section_bundle(&e, &g)? {
                (e, Orientation::Section)
            } else {
                (e, Orientation::Conormal)
            }
        }
    };
    let locus = match orientation {
        Orientation::Conormal => ZeroLocus::new(g, expr)?,
        Orientation::Section => ZeroLocus::from_section_bundle(g, expr)?,
    };
    Ok(Some(Setup { locus, orientation }))
}
