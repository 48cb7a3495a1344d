use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use vorder::oracle;
use vorder::report::{factor_to_f64, Factor, Stats};
use vorder::{io, Digraph, Weight};

use crate::fail::{CliResult, Fail};
use crate::guards::Guards;
use crate::plan::{Outcome, Plan};

#[derive(Debug, Clone, Serialize)]
pub struct StatsOut {
    pub table_entries: u64,
    pub triangles: u64,
    pub cut_cells: u64,
    pub recursive_calls: u64,
    /// Guaranteed ratio as an exact fraction.
    pub factor: String,
}

impl StatsOut {
    fn new(s: Stats, factor: Factor) -> Self {
        StatsOut {
            table_entries: s.table_entries,
            triangles: s.triangles,
            cut_cells: s.cut_cells,
            recursive_calls: s.recursive_calls,
            factor: factor.to_string(),
        }
    }
}

/// One solver run, the unit of every report.
#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub instance: String,
    pub objective: String,
    pub mode: String,
    pub value: Weight,
    pub lower_bound: Weight,
    pub opt: Option<Weight>,
    pub ratio: Value,
    /// Position of each vertex, 1-based.
    pub ordering: Vec<usize>,
    pub stats: StatsOut,
    pub millis: u64,
    #[serde(skip)]
    pub n: usize,
    #[serde(skip)]
    pub m: usize,
    #[serde(skip)]
    pub factor: Factor,
}

/// `value / opt`; both zero is reported as "exact-zero".
pub fn ratio(value: Weight, opt: Option<Weight>) -> Value {
    match opt {
        None => Value::Null,
        Some(0) if value == 0 => Value::String("exact-zero".into()),
        Some(0) => Value::String("inf".into()),
        Some(o) => serde_json::Number::from_f64(value as f64 / o as f64)
            .map(Value::Number)
            .unwrap_or(Value::Null),
    }
}

pub fn instance_id(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load(path: &Path) -> CliResult<Digraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Fail::Other(format!("cannot read {}: {e}", path.display())))?;
    io::parse_graph(&text).map_err(|e| Fail::Parse(format!("{}: {e}", path.display())))
}

pub struct RunOptions {
    pub with_oracle: bool,
    pub timing: bool,
}

pub fn run(id: String, g: &Digraph, plan: Plan, guards: &Guards, opts: &RunOptions) -> CliResult<RunRecord> {
    let objective = plan.objective();
    let opt = if opts.with_oracle {
        guards.check_oracle(g.n())?;
        Some(oracle::perm_opt_with_limit(g, objective, guards.max_oracle_n)?.opt)
    } else {
        None
    };
    let start = Instant::now();
    let Outcome {
        value,
        lower_bound,
        ordering,
        stats,
        factor,
    } = plan.run(g, guards)?;
    let millis = if opts.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    if objective.evaluate(g, &ordering) != value {
        return Err(Fail::Other(format!("{id}: reported value {value} does not match its ordering")));
    }
    Ok(RunRecord {
        instance: id,
        objective: objective.name().into(),
        mode: plan.label(),
        value,
        lower_bound,
        opt,
        ratio: ratio(value, opt),
        ordering: ordering.positions().to_vec(),
        stats: StatsOut::new(stats, factor),
        millis,
        n: g.n(),
        m: g.m(),
        factor,
    })
}

/// Flat row for the suite CSVs.
#[derive(Debug, Serialize)]
pub struct CsvRow<'a> {
    instance: &'a str,
    n: usize,
    m: usize,
    objective: &'a str,
    mode: &'a str,
    value: Weight,
    lower_bound: Weight,
    opt: Option<Weight>,
    ratio: String,
    factor: String,
    bound: String,
    ok: Option<bool>,
    table_entries: u64,
    triangles: u64,
    cut_cells: u64,
    recursive_calls: u64,
    millis: u64,
}

impl RunRecord {
    /// `bound` is the ratio being checked against, `ok` the verdict.
    pub fn csv_row(&self, bound: Option<f64>, ok: Option<bool>) -> CsvRow<'_> {
        let ratio = match &self.ratio {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        CsvRow {
            instance: &self.instance,
            n: self.n,
            m: self.m,
            objective: &self.objective,
            mode: &self.mode,
            value: self.value,
            lower_bound: self.lower_bound,
            opt: self.opt,
            ratio,
            factor: self.stats.factor.clone(),
            bound: bound.map(|b| b.to_string()).unwrap_or_else(|| format!("{}", factor_to_f64(self.factor))),
            ok,
            table_entries: self.stats.table_entries,
            triangles: self.stats.triangles,
            cut_cells: self.stats.cut_cells,
            recursive_calls: self.stats.recursive_calls,
            millis: self.millis,
        }
    }
}
