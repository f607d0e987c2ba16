//! Check verdicts.
//!
//! Every identity check is exhaustive over basis tuples. A [`Certificate`]
//! reports how many tuples were examined, how many failed, and the
//! lexicographically first failure together with its exact residual.

use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::exact::{fmt_rat, Rat};

/// One failing basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which identity failed, e.g. `"jacobi"` or `"eq:mp2"`.
    pub condition: String,
    /// Offending basis indices, in the order the identity quantifies them.
    /// Signed so that parametric families with negative labels fit.
    pub indices: Vec<i64>,
    /// Exact residual `lhs - rhs`, flattened (vector, or matrix row-major).
    pub residual: Vec<Rat>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(i64::to_string).collect();
        let res: Vec<String> = self.residual.iter().map(fmt_rat).collect();
        write!(
            f,
            "{} at ({}): residual [{}]",
            self.condition,
            idx.join(","),
            res.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub check: String,
    pub checked: usize,
    pub failures: usize,
    /// Tuples deliberately not checked (reported, never silently dropped).
    pub skipped: usize,
    pub first: Option<Violation>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(check: impl Into<String>) -> Self {
        Certificate {
            check: check.into(),
            checked: 0,
            failures: 0,
            skipped: 0,
            first: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Record one tuple; it fails when any residual coordinate is non-zero.
    pub fn record(&mut self, condition: &str, indices: &[usize], residual: Vec<Rat>) {
        self.checked += 1;
        if residual.iter().any(|c| !c.is_zero()) {
            self.fail(condition, indices, residual);
        }
    }

    /// Record a failure that has no numeric residual (structural failures).
    pub fn fail(&mut self, condition: &str, indices: &[usize], residual: Vec<Rat>) {
        let idx: Vec<i64> = indices.iter().map(|&i| i as i64).collect();
        self.fail_signed(condition, &idx, residual);
    }

    pub fn fail_signed(&mut self, condition: &str, indices: &[i64], residual: Vec<Rat>) {
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(Violation {
                condition: condition.to_string(),
                indices: indices.to_vec(),
                residual,
            });
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Fold `other` into `self`; `self`'s first violation keeps priority.
    pub fn absorb(&mut self, other: Certificate) {
        self.checked += other.checked;
        self.failures += other.failures;
        self.skipped += other.skipped;
        if self.first.is_none() {
            self.first = other.first;
        }
        self.notes.extend(other.notes);
    }

    pub fn and(mut self, other: Certificate) -> Certificate {
        self.absorb(other);
        self
    }

    pub fn renamed(mut self, check: impl Into<String>) -> Certificate {
        self.check = check.into();
        self
    }

    pub fn summary(&self) -> String {
        match &self.first {
            None => format!("pass ({} tuples checked)", self.checked),
            Some(v) => format!(
                "fail: {} of {} tuples violate; first {}",
                self.failures, self.checked, v
            ),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.summary())
    }
}

/// Run `f` on every tuple, in parallel, and reduce in tuple order so the
/// reported first violation does not depend on scheduling. `f` returns the
/// residual of the identity at that tuple.
pub(crate) fn exhaustive<F>(check: &str, condition: &str, tuples: &[Vec<usize>], f: F) -> Certificate
where
    F: Fn(&[usize]) -> Vec<Rat> + Sync,
{
    let results: Vec<Vec<Rat>> = tuples.par_iter().map(|t| f(t)).collect();
    let mut cert = Certificate::new(check);
    for (t, res) in tuples.iter().zip(results) {
        cert.record(condition, t, res);
    }
    cert
}

/// Pairs `i < j`.
pub(crate) fn pairs(n: usize) -> Vec<Vec<usize>> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| vec![i, j])).collect()
}

/// All ordered pairs `(i, j)` with `i < n`, `j < m`.
pub(crate) fn grid(n: usize, m: usize) -> Vec<Vec<usize>> {
    (0..n).flat_map(|i| (0..m).map(move |j| vec![i, j])).collect()
}

/// Triples `i < j < k`.
pub(crate) fn triples(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(vec![i, j, k]);
            }
        }
    }
    out
}

/// All ordered triples.
pub(crate) fn cube(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push(vec![i, j, k]);
            }
        }
    }
    out
}

/// Cartesian product `0..d0 × 0..d1 × …` in lexicographic order.
pub(crate) fn product(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Single indices `0..n`.
pub(crate) fn singles(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i]).collect()
}
