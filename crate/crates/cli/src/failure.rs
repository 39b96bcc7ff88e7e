use std::fmt;
use std::path::Path;

use totdil_core::Error;

/// Why a command did not succeed, with the process exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable input: bad arguments, malformed JSON, wrong shapes. Exit 1.
    Parse(String),
    /// Input that a construction's hypotheses exclude. Exit 2.
    Precondition(String),
    /// A report or postcondition that did not hold. Exit 3.
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Verification(_) => 3,
        }
    }

    pub fn io(path: &Path, e: impl fmt::Display) -> Self {
        Failure::Parse(format!("{}: {e}", path.display()))
    }

    /// Prefixes the message with what was being attempted.
    pub fn context(self, what: &str) -> Self {
        match self {
            Failure::Parse(m) => Failure::Parse(format!("{what}: {m}")),
            Failure::Precondition(m) => Failure::Precondition(format!("{what}: {m}")),
            Failure::Verification(m) => Failure::Verification(format!("{what}: {m}")),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "invalid input: {m}"),
            Failure::Precondition(m) => write!(f, "precondition violated: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else if matches!(e, Error::InvalidMatrix(_)) {
            Failure::Parse(e.to_string())
        } else {
            Failure::Verification(e.to_string())
        }
    }
}

pub type CmdResult<T = ()> = Result<T, Failure>;
