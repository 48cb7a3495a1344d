//! Exhaustive permutation search. Deliberately naive: every ordering is
//! scored with the plain evaluator, nothing is pruned.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Ordering, Weight};
use crate::report::Objective;

pub const ORACLE_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub objective: Objective,
    pub opt: Weight,
    /// Lexicographically least optimal vertex sequence.
    pub ordering: Ordering,
    /// Number of optimal orderings.
    pub count: u64,
}

pub fn perm_opt(g: &Digraph, objective: Objective) -> Result<OracleResult> {
    perm_opt_with_limit(g, objective, ORACLE_MAX_N)
}

pub fn perm_opt_with_limit(g: &Digraph, objective: Objective, max_n: usize) -> Result<OracleResult> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "permutation oracle",
            n,
            limit: max_n,
        });
    }
    let mut seq: Vec<usize> = (0..n).collect();
    let mut best: Option<(Weight, Vec<usize>)> = None;
    let mut count = 0u64;
    loop {
        let pi = Ordering::from_sequence(seq.clone()).expect("permutation");
        let value = objective.evaluate(g, &pi);
        match &best {
            Some((b, _)) if value > *b => {}
            Some((b, _)) if value == *b => count += 1,
            _ => {
                best = Some((value, seq.clone()));
                count = 1;
            }
        }
        if !next_permutation(&mut seq) {
            break;
        }
    }
    let (opt, seq) = best.expect("at least one ordering");
    Ok(OracleResult {
        objective,
        opt,
        ordering: Ordering::from_sequence(seq).expect("permutation"),
        count,
    })
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}
