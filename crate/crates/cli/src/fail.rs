use std::fmt;

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug)]
pub enum Fail {
    Usage(String),
    Parse(String),
    Size(String),
    Violation(String),
    Other(String),
}

impl Fail {
    pub fn code(&self) -> i32 {
        match self {
            Fail::Usage(_) => 2,
            Fail::Parse(_) => 3,
            Fail::Size(_) => 4,
            Fail::Violation(_) | Fail::Other(_) => 1,
        }
    }
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fail::Usage(m) => write!(f, "usage: {m}"),
            Fail::Parse(m) => write!(f, "parse error: {m}"),
            Fail::Size(m) => write!(f, "size guard: {m}"),
            Fail::Violation(m) => write!(f, "violation: {m}"),
            Fail::Other(m) => f.write_str(m),
        }
    }
}

impl From<vorder::Error> for Fail {
    fn from(e: vorder::Error) -> Self {
        use vorder::Error as E;
        match e {
            E::Parse(p) => Fail::Parse(p.to_string()),
            E::TooLarge { .. } | E::TooManySubsets { .. } => Fail::Size(e.to_string()),
            E::InvalidParameter { .. } | E::Unsupported(_) | E::KOutOfRange { .. } => {
                Fail::Usage(e.to_string())
            }
            other => Fail::Other(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Other(format!("io: {e}"))
    }
}

impl From<csv::Error> for Fail {
    fn from(e: csv::Error) -> Self {
        Fail::Other(format!("csv: {e}"))
    }
}

pub type CliResult<T> = Result<T, Fail>;
