//! Ranking, selection and group aggregation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::degree::TOLERANCE;
use crate::error::{Error, Result};
use crate::ifps::IfpsSet;
use crate::ifs::FuzzySet;
use crate::reduction::{reduce_fuzzy, reduce_intuitionistic, RangeWarning};

/// Alternatives ordered by score.
///
/// The ranking is descending by score with ties broken by identifier.
/// `argmax` holds every alternative whose score is within tolerance of the
/// top score, so ties hidden by the ordering stay visible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedDecision {
    pub ranking: Vec<(String, f64)>,
    pub argmax: BTreeSet<String>,
    pub warnings: Vec<RangeWarning>,
}

impl RankedDecision {
    pub fn top(&self) -> Option<(&str, f64)> {
        self.ranking.first().map(|(id, s)| (id.as_str(), *s))
    }
}

pub fn rank(scores: &FuzzySet) -> RankedDecision {
    let mut ranking: Vec<(String, f64)> = scores.iter().map(|(u, s)| (u.to_owned(), s)).collect();
    ranking.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let argmax = match ranking.first() {
        Some(&(_, best)) => {
            ranking.iter().take_while(|(_, s)| (best - s).abs() <= TOLERANCE).map(|(u, _)| u.clone()).collect()
        }
        None => BTreeSet::new(),
    };
    RankedDecision { ranking, argmax, warnings: Vec::new() }
}

/// Reduces the set in both stages and ranks the resulting scores.
pub fn decide(set: &IfpsSet) -> Result<RankedDecision> {
    let reduced = reduce_intuitionistic(set)?;
    let mut decision = rank(&reduce_fuzzy(&reduced.value));
    decision.warnings = reduced.warnings;
    Ok(decision)
}

/// Operator used to fold the opinions of several experts into one set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupOperator {
    OrSum,
    AndSum,
    OrProduct,
    AndProduct,
}

impl GroupOperator {
    pub const ALL: [GroupOperator; 4] =
        [GroupOperator::OrSum, GroupOperator::AndSum, GroupOperator::OrProduct, GroupOperator::AndProduct];

    pub fn apply(self, a: &IfpsSet, b: &IfpsSet) -> Result<IfpsSet> {
        match self {
            GroupOperator::OrSum => a.or_sum(b),
            GroupOperator::AndSum => a.and_sum(b),
            GroupOperator::OrProduct => a.or_product(b),
            GroupOperator::AndProduct => a.and_product(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupOperator::OrSum => "or-sum",
            GroupOperator::AndSum => "and-sum",
            GroupOperator::OrProduct => "or-product",
            GroupOperator::AndProduct => "and-product",
        }
    }
}

impl fmt::Display for GroupOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupOperator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|op| op.name() == s || op.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown group operator `{s}` (expected or-sum, and-sum, or-product, and-product)"))
    }
}

/// Left fold of `op` over `sets`. All four operators are commutative and
/// associative, so the result does not depend on the order of `sets`.
pub fn aggregate_group(sets: &[IfpsSet], op: GroupOperator) -> Result<IfpsSet> {
    let (first, rest) = sets.split_first().ok_or(Error::EmptyGroup)?;
    rest.iter().try_fold(first.clone(), |acc, next| op.apply(&acc, next))
}
