use serde::Serialize;

use crate::error::{Error, Result};

/// Absolute tolerance used for every comparison of degrees.
pub const TOLERANCE: f64 = 1e-9;

/// A (membership, non-membership) pair with `alpha + beta <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreePair {
    alpha: f64,
    beta: f64,
}

impl DegreePair {
    /// The fully non-member pair `(0, 1)`, which absent keys read as.
    pub const NON_MEMBER: DegreePair = DegreePair { alpha: 0.0, beta: 1.0 };
    /// The fully member pair `(1, 0)`.
    pub const FULL_MEMBER: DegreePair = DegreePair { alpha: 1.0, beta: 0.0 };

    /// Validates the pair. `id` only labels the error.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        Self::checked("", alpha, beta)
    }

    pub(crate) fn checked(id: &str, alpha: f64, beta: f64) -> Result<Self> {
        let in_unit = |v: f64| (0.0..=1.0).contains(&v);
        if !in_unit(alpha) || !in_unit(beta) {
            return Err(Error::DegreeRange { id: id.to_owned(), alpha, beta });
        }
        let sum = alpha + beta;
        if sum > 1.0 + TOLERANCE {
            return Err(Error::Constraint { id: id.to_owned(), sum });
        }
        Ok(DegreePair { alpha, beta })
    }

    /// Builds a pair from computed values without validation.
    ///
    /// Operation results satisfy the constraint mathematically; only the
    /// reduction may intentionally leave the unit range, in which case it
    /// reports a warning.
    pub(crate) fn raw(alpha: f64, beta: f64) -> Self {
        DegreePair { alpha, beta }
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn beta(self) -> f64 {
        self.beta
    }

    /// `1 - alpha - beta`, the hesitation margin.
    pub fn hesitation(self) -> f64 {
        1.0 - self.alpha - self.beta
    }

    pub fn approx_eq(self, other: DegreePair) -> bool {
        (self.alpha - other.alpha).abs() <= TOLERANCE && (self.beta - other.beta).abs() <= TOLERANCE
    }

    pub fn is_non_member(self) -> bool {
        self.approx_eq(Self::NON_MEMBER)
    }

    /// `alpha <= other.alpha` and `beta >= other.beta`, at tolerance.
    pub fn is_below(self, other: DegreePair) -> bool {
        self.alpha <= other.alpha + TOLERANCE && self.beta + TOLERANCE >= other.beta
    }

    pub fn complement(self) -> DegreePair {
        DegreePair { alpha: self.beta, beta: self.alpha }
    }

    pub fn max_min(self, other: DegreePair) -> DegreePair {
        DegreePair { alpha: self.alpha.max(other.alpha), beta: self.beta.min(other.beta) }
    }

    pub fn min_max(self, other: DegreePair) -> DegreePair {
        DegreePair { alpha: self.alpha.min(other.alpha), beta: self.beta.max(other.beta) }
    }

    /// Algebraic sum on membership, product on non-membership.
    pub fn algebraic_sum(self, other: DegreePair) -> DegreePair {
        DegreePair { alpha: probabilistic_or(self.alpha, other.alpha), beta: self.beta * other.beta }
    }

    /// Product on membership, algebraic sum on non-membership.
    pub fn algebraic_product(self, other: DegreePair) -> DegreePair {
        DegreePair { alpha: self.alpha * other.alpha, beta: probabilistic_or(self.beta, other.beta) }
    }
}

impl Default for DegreePair {
    fn default() -> Self {
        Self::NON_MEMBER
    }
}

// a + b - ab, written so that the result never leaves [0,1] and is exactly 1
// whenever either operand is 1.
fn probabilistic_or(a: f64, b: f64) -> f64 {
    1.0 - (1.0 - a) * (1.0 - b)
}
