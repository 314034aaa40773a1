use bundlecalc_core::Error as EngineError;
use serde_json::{json, Value};
use thiserror::Error;

use crate::dsl::{ParseError, ParseErrorKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Engine(#[from] EngineError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Engine(e) => match e {
                EngineError::Internal(_) | EngineError::InconsistentCharacter(_) => 5,
                _ => 4,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::Precondition(_) => "precondition",
            CliError::Engine(e) => match e {
                EngineError::InvalidInput(_) => "invalid_input",
                EngineError::InconsistentCharacter(_) => "inconsistent_character",
                EngineError::End0Multiplicity { .. } => "end0_multiplicity",
                EngineError::Internal(_) => "internal",
                EngineError::NotExpressible { .. } => "not_expressible",
                EngineError::Degenerate(_) => "degenerate",
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({ "kind": self.kind(), "message": self.to_string() });
        match self {
            CliError::Parse(p) => {
                err["offset"] = json!(p.offset);
                if let ParseErrorKind::Unexpected { expected, .. } = &p.kind {
                    err["expected"] = json!(expected);
                }
            }
            CliError::Engine(EngineError::End0Multiplicity { found }) => err["found"] = json!(found),
            CliError::Engine(EngineError::NotExpressible { degree, residual }) => {
                err["degree"] = json!(degree);
                err["residual"] = json!(residual);
            }
            _ => {}
        }
        json!({ "schema_version": crate::SCHEMA_VERSION, "error": err })
    }
}
