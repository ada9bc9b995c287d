use std::fmt;

use thiserror::Error;

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl fmt::Display) -> Self {
        ParseError { position, message: message.to_string() }
    }
}

/// Every variant names the module that raised it.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("[{module}] invalid size: {msg}")]
    InvalidSize { module: &'static str, msg: String },
    #[error("[{module}] weight is not dominant: {msg}")]
    NotDominant { module: &'static str, msg: String },
    #[error("[{module}] precondition violated: {msg}")]
    Precondition { module: &'static str, msg: String },
    #[error("[parse] {0}")]
    Parse(#[from] ParseError),
    #[error("[{module}] resource limit exceeded: {msg}")]
    ResourceLimit { module: &'static str, msg: String },
    #[error("[{module}] arithmetic overflow: {msg}")]
    Overflow { module: &'static str, msg: String },
}

impl Error {
    pub fn module(&self) -> &'static str {
        match self {
            Error::InvalidSize { module, .. }
            | Error::NotDominant { module, .. }
            | Error::Precondition { module, .. }
            | Error::ResourceLimit { module, .. }
            | Error::Overflow { module, .. } => module,
            Error::Parse(_) => "parse",
        }
    }

    pub(crate) fn precondition(module: &'static str, msg: impl Into<String>) -> Self {
        Error::Precondition { module, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
