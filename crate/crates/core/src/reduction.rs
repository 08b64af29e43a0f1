//! Two-stage reduction of an IFPS set to scores over its universe.
//!
//! The first stage accumulates, for every alternative `u`, the degrees of
//! the parameters whose support contains `u` and divides by `|U|`. The
//! second stage collapses each resulting pair to `alpha * (1 - beta)`.
//!
//! The divisor is `|U|` regardless of `|E|`. When there are more parameters
//! than alternatives the accumulated degrees may leave `[0, 1]` or break
//! `alpha + beta <= 1`; the values are kept as computed and a
//! [`RangeWarning`] is attached for every affected alternative.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::degree::{DegreePair, TOLERANCE};
use crate::error::{Error, Result};
use crate::ifps::IfpsSet;
use crate::ifs::{FuzzySet, IntuitionisticFuzzySet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RangeIssue {
    /// `alpha` or `beta` outside `[0, 1]`.
    OutOfUnitRange,
    /// `alpha + beta > 1`.
    ConstraintExceeded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeWarning {
    pub element: String,
    pub alpha: f64,
    pub beta: f64,
    pub issue: RangeIssue,
}

impl fmt::Display for RangeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.issue {
            RangeIssue::OutOfUnitRange => "degree outside [0,1]",
            RangeIssue::ConstraintExceeded => "alpha + beta exceeds 1",
        };
        write!(f, "reduced degrees of `{}` are ({}, {}): {what}", self.element, self.alpha, self.beta)
    }
}

/// A reduction result together with any range warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction<T> {
    pub value: T,
    pub warnings: Vec<RangeWarning>,
}

/// First stage: the reduced intuitionistic fuzzy set over the universe.
pub fn reduce_intuitionistic(set: &IfpsSet) -> Result<Reduction<IntuitionisticFuzzySet>> {
    let universe = set.universe();
    if universe.is_empty() {
        return Err(Error::EmptySet("universe"));
    }
    let mut sums: BTreeMap<&str, (f64, f64)> = universe.iter().map(|u| (u.as_str(), (0.0, 0.0))).collect();
    for (_, entry) in set.entries() {
        for u in &entry.support {
            let acc = sums.get_mut(u.as_str()).expect("support lies within the universe");
            acc.0 += entry.degree.alpha();
            acc.1 += entry.degree.beta();
        }
    }

    let n = universe.len() as f64;
    let mut warnings = Vec::new();
    let degrees = sums
        .into_iter()
        .map(|(u, (a, b))| {
            let (alpha, beta) = (a / n, b / n);
            if let Some(issue) = range_issue(alpha, beta) {
                warnings.push(RangeWarning { element: u.to_owned(), alpha, beta, issue });
            }
            (u.to_owned(), DegreePair::raw(alpha, beta))
        })
        .collect();
    Ok(Reduction { value: IntuitionisticFuzzySet::from_raw(universe.clone(), degrees), warnings })
}

fn range_issue(alpha: f64, beta: f64) -> Option<RangeIssue> {
    let in_unit = |v: f64| (0.0..=1.0).contains(&v);
    if !in_unit(alpha) || !in_unit(beta) {
        Some(RangeIssue::OutOfUnitRange)
    } else if alpha + beta > 1.0 + TOLERANCE {
        Some(RangeIssue::ConstraintExceeded)
    } else {
        None
    }
}

/// Second stage: `mu(u) = alpha(u) * (1 - beta(u))`.
pub fn reduce_fuzzy(reduced: &IntuitionisticFuzzySet) -> FuzzySet {
    let mu = reduced.iter().map(|(u, d)| (u.to_owned(), d.alpha() * (1.0 - d.beta()))).collect();
    FuzzySet::from_raw(reduced.ground().clone(), mu)
}
