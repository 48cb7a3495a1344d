//! Desk-scale size guards, overridable through the environment.

use crate::fail::{CliResult, Fail};

pub const MAX_EXACT_N: usize = 26;
pub const SCHEME_BUDGET: usize = 48;
pub const MAX_ORACLE_N: usize = 9;

#[derive(Debug, Clone, Copy)]
pub struct Guards {
    pub max_exact_n: usize,
    pub scheme_budget: usize,
    pub max_oracle_n: usize,
}

impl Guards {
    pub fn from_env() -> CliResult<Self> {
        Ok(Guards {
            max_exact_n: read("VORDER_MAX_EXACT_N", MAX_EXACT_N)?,
            scheme_budget: read("VORDER_SCHEME_BUDGET", SCHEME_BUDGET)?,
            max_oracle_n: read("VORDER_MAX_ORACLE_N", MAX_ORACLE_N)?,
        })
    }

    pub fn check_exact(&self, n: usize) -> CliResult<()> {
        if n > self.max_exact_n {
            return Err(Fail::Size(format!(
                "exact solve of {n} vertices exceeds the limit of {} (VORDER_MAX_EXACT_N)",
                self.max_exact_n
            )));
        }
        Ok(())
    }

    pub fn check_oracle(&self, n: usize) -> CliResult<()> {
        if n > self.max_oracle_n {
            return Err(Fail::Size(format!(
                "oracle on {n} vertices exceeds the limit of {} (VORDER_MAX_ORACLE_N)",
                self.max_oracle_n
            )));
        }
        Ok(())
    }
}

fn read(var: &str, default: usize) -> CliResult<usize> {
    match std::env::var(var) {
        Err(_) => Ok(default),
        Ok(s) => {
            let v: usize = s
                .trim()
                .parse()
                .map_err(|_| Fail::Usage(format!("{var} must be a non-negative integer, got '{s}'")))?;
            if v != default {
                eprintln!(
                    "WARNING: {var}={v} overrides the default guard of {default}; runs may take exponential time or memory"
                );
            }
            Ok(v)
        }
    }
}
