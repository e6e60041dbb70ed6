//! Semiring scalars and the deformation family `⊕_h`.
//!
//! Three specs share one carrier type:
//!
//! | spec              | ⊕ (add)                          | ⊙ (mul) | 0̄    | 1̄ |
//! |-------------------|----------------------------------|---------|------|----|
//! | `MaxPlus`         | max                              | +       | −∞   | 0  |
//! | `MinPlus`         | min                              | +       | +∞   | 0  |
//! | `SubtropicalH(h)` | `h·log(exp(u/h)+exp(v/h))`       | +       | −∞   | 0  |
//!
//! `⊕_h` converges to max as `h → 0`; the gap is bounded by `h·log 2`
//! (see [`dequantized_add_limit_gap`]). The bottom element is a tagged
//! variant rather than an IEEE infinity so that `0̄ ⊙ 0̄ = 0̄` holds without
//! ever producing a NaN; the completion's top element is a second tagged
//! variant with `0̄ ⊙ ⊤ = 0̄` and `x ⊙ ⊤ = ⊤` otherwise.

use std::fmt;

use thiserror::Error;

/// A semiring scalar: a finite real, the bottom element `0̄`, or the top
/// element of the completed semiring.
///
/// "Bottom" and "top" are relative to the standard order of the attached
/// [`SemiringSpec`]: for max-plus they read as −∞ and +∞, for min-plus the
/// numeric meanings swap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedScalar {
    /// The semiring zero `0̄` (neutral for ⊕, absorbing for ⊙).
    Bottom,
    /// An ordinary finite value.
    Finite(f64),
    /// The greatest element of the completion (absorbing for ⊕).
    Top,
}

impl ExtendedScalar {
    pub fn finite(v: f64) -> Self {
        debug_assert!(v.is_finite(), "finite scalar constructed from {v}");
        ExtendedScalar::Finite(v)
    }

    pub fn is_bottom(self) -> bool {
        matches!(self, ExtendedScalar::Bottom)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedScalar::Finite(_))
    }

    /// The finite value, if any.
    pub fn as_finite(self) -> Option<f64> {
        match self {
            ExtendedScalar::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// The finite value; panics on ⊥/⊤.
    pub fn unwrap_finite(self) -> f64 {
        self.as_finite().expect("expected a finite semiring value")
    }
}

impl From<f64> for ExtendedScalar {
    fn from(v: f64) -> Self {
        ExtendedScalar::finite(v)
    }
}

impl fmt::Display for ExtendedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedScalar::Bottom => write!(f, "⊥"),
            ExtendedScalar::Finite(v) => write!(f, "{v}"),
            ExtendedScalar::Top => write!(f, "⊤"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SemiringError {
    /// The standard order `a ⪯ b ⇔ a ⊕ b = b` needs idempotent addition;
    /// `⊕_h` is not idempotent, so no order is defined for it.
    #[error("OrderUndefined: the standard order requires idempotent addition (subtropical h={h})")]
    OrderUndefined { h: f64 },
    /// Star requested over the non-idempotent subtropical spec.
    #[error("NotIdempotent: {op} requires an idempotent semiring (subtropical h={h})")]
    NotIdempotent { op: &'static str, h: f64 },
    /// The geometric series `1̄ ⊕ a ⊕ a² ⊕ …` is unbounded.
    #[error("Divergent: scalar star of {value} does not converge under {spec}")]
    Divergent { value: ExtendedScalar, spec: SemiringSpec },
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
}

/// Selects the semiring operations: max-plus, min-plus, or the subtropical
/// deformation with parameter `h > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SemiringSpec {
    MaxPlus,
    MinPlus,
    SubtropicalH { h: f64 },
}

impl fmt::Display for SemiringSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemiringSpec::MaxPlus => write!(f, "maxplus"),
            SemiringSpec::MinPlus => write!(f, "minplus"),
            SemiringSpec::SubtropicalH { h } => write!(f, "subtropical:{h}"),
        }
    }
}

impl SemiringSpec {
    /// Subtropical spec with validated deformation parameter.
    pub fn subtropical(h: f64) -> Result<Self, SemiringError> {
        if h.is_finite() && h > 0.0 {
            Ok(SemiringSpec::SubtropicalH { h })
        } else {
            Err(SemiringError::InvalidParameter(format!(
                "subtropical parameter must be a positive real, got {h}"
            )))
        }
    }

    pub fn is_idempotent(self) -> bool {
        !matches!(self, SemiringSpec::SubtropicalH { .. })
    }

    /// The semiring zero `0̄`.
    pub fn zero(self) -> ExtendedScalar {
        ExtendedScalar::Bottom
    }

    /// The semiring unit `1̄`.
    pub fn one(self) -> ExtendedScalar {
        ExtendedScalar::Finite(0.0)
    }

    /// Semiring addition `a ⊕ b`.
    ///
    /// ⊥ is neutral and ⊤ absorbing for every spec. The subtropical sum is
    /// evaluated in the overflow-free form `max(u,v) + h·log(1+exp(-|u-v|/h))`.
    pub fn add(self, a: ExtendedScalar, b: ExtendedScalar) -> ExtendedScalar {
        use ExtendedScalar::*;
        match (a, b) {
            (Bottom, x) | (x, Bottom) => x,
            (Top, _) | (_, Top) => Top,
            (Finite(x), Finite(y)) => Finite(match self {
                SemiringSpec::MaxPlus => x.max(y),
                SemiringSpec::MinPlus => x.min(y),
                SemiringSpec::SubtropicalH { h } => x.max(y) + h * (-(x - y).abs() / h).exp().ln_1p(),
            }),
        }
    }

    /// Semiring multiplication `a ⊙ b = a + b`, with ⊥ absorbing
    /// (`0̄ ⊙ ⊤ = 0̄` in the completion).
    pub fn mul(self, a: ExtendedScalar, b: ExtendedScalar) -> ExtendedScalar {
        use ExtendedScalar::*;
        match (a, b) {
            (Bottom, _) | (_, Bottom) => Bottom,
            (Top, _) | (_, Top) => Top,
            (Finite(x), Finite(y)) => Finite(x + y),
        }
    }

    /// The standard partial order `a ⪯ b ⇔ a ⊕ b = b`.
    ///
    /// For max-plus this is the numeric ≤, for min-plus the numeric ≥.
    /// Rejected for the subtropical spec, whose addition is not idempotent.
    pub fn leq(self, a: ExtendedScalar, b: ExtendedScalar) -> Result<bool, SemiringError> {
        if let SemiringSpec::SubtropicalH { h } = self {
            return Err(SemiringError::OrderUndefined { h });
        }
        Ok(self.order_key(a) <= self.order_key(b))
    }

    /// Maps a scalar to a plain f64 whose usual order is the standard order.
    /// IEEE infinities appear only as order keys, never in arithmetic.
    fn order_key(self, a: ExtendedScalar) -> f64 {
        let v = match a {
            ExtendedScalar::Bottom => return f64::NEG_INFINITY,
            ExtendedScalar::Top => return f64::INFINITY,
            ExtendedScalar::Finite(v) => v,
        };
        match self {
            SemiringSpec::MinPlus => -v,
            _ => v,
        }
    }

    /// Scalar Kleene star `a* = 1̄ ⊕ a ⊕ a² ⊕ …`.
    ///
    /// Converges to `1̄` exactly when `a ⪯ 1̄`; otherwise the powers are
    /// unbounded and `Divergent` is returned. ⊤ is treated as divergent.
    pub fn scalar_star(self, a: ExtendedScalar) -> Result<ExtendedScalar, SemiringError> {
        match self {
            SemiringSpec::SubtropicalH { h } => Err(SemiringError::NotIdempotent { op: "scalar_star", h }),
            _ => {
                if self.leq(a, self.one())? {
                    Ok(self.one())
                } else {
                    Err(SemiringError::Divergent { value: a, spec: self })
                }
            }
        }
    }

    /// ⊕-reduction of an iterator (empty reduces to `0̄`).
    pub fn sum<I: IntoIterator<Item = ExtendedScalar>>(self, it: I) -> ExtendedScalar {
        it.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }
}

/// `(u ⊕_h v) − max(u, v)` for finite `u`, `v` and `h > 0`.
///
/// Computed directly as the correction term `h·log(1+exp(-|u-v|/h))` of the
/// stable sum, so `0 ≤ gap ≤ h·log 2` holds by construction.
pub fn dequantized_add_limit_gap(u: f64, v: f64, h: f64) -> f64 {
    assert!(u.is_finite() && v.is_finite(), "gap requires finite arguments");
    assert!(h > 0.0, "gap requires h > 0");
    h * (-(u - v).abs() / h).exp().ln_1p()
}
