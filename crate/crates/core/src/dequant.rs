//! Generalized polynomials, the dequantization transform
//! `f̂_h(x) = h·log|f(exp(x/h))|`, its `h → 0` tropical limit, and Newton
//! sets.

use num_complex::Complex64;
use thiserror::Error;

use crate::polytope::{ConvexError, Polytope};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DequantError {
    #[error("NonpositiveArgument: component {index} is {value}, evaluation needs z > 0")]
    NonpositiveArgument { index: usize, value: f64 },
    #[error("ZeroValue: the polynomial vanishes at the sample point (log of 0)")]
    ZeroValue,
    #[error("EmptyPolynomial: the operation needs at least one term")]
    EmptyPolynomial,
    #[error("DimensionMismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Convex(#[from] ConvexError),
}

/// A finite sum of generalized monomials `a · x₁^{d₁} ⋯ xₙ^{dₙ}` with
/// nonzero complex coefficients and real exponent vectors. Terms with
/// bit-identical exponent vectors are merged at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedPolynomial {
    n: usize,
    terms: Vec<(Complex64, Vec<f64>)>,
}

impl GeneralizedPolynomial {
    pub fn new(n: usize, terms: Vec<(Complex64, Vec<f64>)>) -> Result<Self, DequantError> {
        let mut merged: Vec<(Complex64, Vec<f64>)> = Vec::with_capacity(terms.len());
        for (a, d) in terms {
            if d.len() != n {
                return Err(DequantError::DimensionMismatch { expected: n, got: d.len() });
            }
            match merged.iter_mut().find(|(_, e)| exponents_equal(e, &d)) {
                Some((c, _)) => *c += a,
                None => merged.push((a, d)),
            }
        }
        merged.retain(|(a, _)| a.norm_sqr() != 0.0);
        merged.sort_by(|(_, d), (_, e)| {
            d.iter().partial_cmp(e.iter()).unwrap_or(std::cmp::Ordering::Equal)
        });
        Ok(GeneralizedPolynomial { n, terms: merged })
    }

    /// Real-coefficient convenience constructor.
    pub fn from_real(n: usize, terms: Vec<(f64, Vec<f64>)>) -> Result<Self, DequantError> {
        Self::new(n, terms.into_iter().map(|(a, d)| (Complex64::new(a, 0.0), d)).collect())
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Complex64, Vec<f64>)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product, with exponent vectors added componentwise and equal
    /// exponents merged (cancellation may drop terms).
    pub fn mul(&self, other: &Self) -> Result<Self, DequantError> {
        if self.n != other.n {
            return Err(DequantError::DimensionMismatch { expected: self.n, got: other.n });
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, d) in &self.terms {
            for (b, e) in &other.terms {
                terms.push((a * b, d.iter().zip(e).map(|(x, y)| x + y).collect()));
            }
        }
        Self::new(self.n, terms)
    }

    /// Sum, with equal exponents merged (cancellation may drop terms).
    pub fn add(&self, other: &Self) -> Result<Self, DequantError> {
        if self.n != other.n {
            return Err(DequantError::DimensionMismatch { expected: self.n, got: other.n });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(self.n, terms)
    }

    /// Evaluation on the positive orthant: `Σ a · Π z_i^{d_i}`.
    ///
    /// Real exponents require `z_i > 0`; `NonpositiveArgument` otherwise.
    pub fn eval(&self, z: &[f64]) -> Result<Complex64, DequantError> {
        self.check_arity(z)?;
        if let Some((i, &v)) = z.iter().enumerate().find(|(_, &v)| !(v > 0.0)) {
            return Err(DequantError::NonpositiveArgument { index: i, value: v });
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, d) in &self.terms {
            let mono: f64 = d.iter().zip(z).map(|(&di, &zi)| zi.powf(di)).product();
            acc += a * mono;
        }
        Ok(acc)
    }

    /// `f̂_h(x) = h·log|f(exp(x/h))|`, evaluated entirely in log space.
    ///
    /// Each term contributes log-magnitude `(d·x)/h + log|a|` and a unit
    /// phase; the stable log-sum-exp of those contributions never forms
    /// `exp(x/h)` itself, so small `h` cannot overflow. Cancellation to
    /// (numerical) zero reports `ZeroValue`.
    pub fn dequantize_h(&self, x: &[f64], h: f64) -> Result<f64, DequantError> {
        self.check_arity(x)?;
        assert!(h > 0.0, "dequantize_h requires h > 0");
        if self.terms.is_empty() {
            return Err(DequantError::ZeroValue);
        }
        let mut logmags = Vec::with_capacity(self.terms.len());
        let mut phases = Vec::with_capacity(self.terms.len());
        for (a, d) in &self.terms {
            let dot: f64 = d.iter().zip(x).map(|(di, xi)| di * xi).sum();
            logmags.push(dot / h + a.norm().ln());
            phases.push(a / a.norm());
        }
        let m = logmags.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut mag_sum = 0.0;
        for (lm, u) in logmags.iter().zip(&phases) {
            let w = (lm - m).exp();
            sum += u * w;
            mag_sum += w;
        }
        let r = sum.norm();
        if !(r > mag_sum * 1e-12) {
            return Err(DequantError::ZeroValue);
        }
        Ok(h * (m + r.ln()))
    }

    /// The `h → 0` limit of `f̂_h`: every term's `h·log|a|` offset vanishes,
    /// leaving `x ↦ max_d (d, x)` over the exponent set.
    pub fn tropicalize(&self) -> Result<TropicalPolynomial, DequantError> {
        if self.terms.is_empty() {
            return Err(DequantError::EmptyPolynomial);
        }
        Ok(TropicalPolynomial {
            terms: self.terms.iter().map(|(_, d)| (0.0, d.clone())).collect(),
        })
    }

    /// The Newton set `conv{d : d an exponent of f}`; for polynomials this
    /// is the classical Newton polytope. Exact hulls cover `n ≤ 3`.
    pub fn newton_set(&self) -> Result<Polytope, DequantError> {
        if self.terms.is_empty() {
            return Err(DequantError::EmptyPolynomial);
        }
        if self.n > 3 {
            return Err(ConvexError::DimensionUnsupported(self.n).into());
        }
        Ok(Polytope::from_points(self.n, self.terms.iter().map(|(_, d)| d.clone()).collect())?)
    }

    fn check_arity(&self, x: &[f64]) -> Result<(), DequantError> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(DequantError::DimensionMismatch { expected: self.n, got: x.len() })
        }
    }
}

fn exponents_equal(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
}

/// A max-of-affine tropical polynomial `x ↦ max_i (d_i·x + c_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalPolynomial {
    terms: Vec<(f64, Vec<f64>)>,
}

impl TropicalPolynomial {
    pub fn new(terms: Vec<(f64, Vec<f64>)>) -> Self {
        TropicalPolynomial { terms }
    }

    pub fn terms(&self) -> &[(f64, Vec<f64>)] {
        &self.terms
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, d)| c + d.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Result of [`check_hom_product`].
#[derive(Debug, Clone, PartialEq)]
pub struct HomProductReport {
    pub samples_checked: usize,
    pub max_deviation: f64,
}

/// Verifies the product rule of the dequantization transform,
/// `(fg)^_h = f̂_h + ĝ_h`, on the given `(x, h)` samples; returns the
/// largest absolute deviation observed.
pub fn check_hom_product(
    f: &GeneralizedPolynomial,
    g: &GeneralizedPolynomial,
    samples: &[(Vec<f64>, f64)],
) -> Result<HomProductReport, DequantError> {
    let fg = f.mul(g)?;
    let mut max_dev = 0.0f64;
    for (x, h) in samples {
        let lhs = fg.dequantize_h(x, *h)?;
        let rhs = f.dequantize_h(x, *h)? + g.dequantize_h(x, *h)?;
        max_dev = max_dev.max((lhs - rhs).abs());
    }
    Ok(HomProductReport { samples_checked: samples.len(), max_deviation: max_dev })
}

/// Result of [`check_hom_sum`]: per-`h` gaps between `(f+g)^_h` and
/// `max(f̂_h, ĝ_h)`, each with its `h·log T` bound.
#[derive(Debug, Clone, PartialEq)]
pub struct HomSumReport {
    /// `(h, gap, bound)` rows in the order of the supplied sequence.
    pub gaps: Vec<(f64, f64, f64)>,
    pub all_within_bound: bool,
    pub nonincreasing: bool,
}

/// Verifies the sum rule `(f+g)^ = max{f̂, ĝ}` in its pre-limit form: the
/// gap at parameter `h` is bounded by `h·log T` (`T` = total term count)
/// and shrinks along a decreasing `h` sequence.
pub fn check_hom_sum(
    f: &GeneralizedPolynomial,
    g: &GeneralizedPolynomial,
    x: &[f64],
    h_sequence: &[f64],
) -> Result<HomSumReport, DequantError> {
    let sum = f.add(g)?;
    let t = (f.terms().len() + g.terms().len()) as f64;
    let mut gaps = Vec::with_capacity(h_sequence.len());
    let mut all_within = true;
    let mut nonincreasing = true;
    let mut prev: Option<f64> = None;
    for &h in h_sequence {
        let lhs = sum.dequantize_h(x, h)?;
        let rhs = f.dequantize_h(x, h)?.max(g.dequantize_h(x, h)?);
        let gap = (lhs - rhs).abs();
        let bound = h * t.ln();
        all_within &= gap <= bound + 1e-12;
        if let Some(p) = prev {
            nonincreasing &= gap <= p + 1e-12;
        }
        prev = Some(gap);
        gaps.push((h, gap, bound));
    }
    Ok(HomSumReport { gaps, all_within_bound: all_within, nonincreasing })
}

/// Dequantizes an arbitrary positive-valued evaluation callback: computes
/// `h·log|F(exp(x/h))|` by direct evaluation. Unlike
/// [`GeneralizedPolynomial::dequantize_h`] this cannot work in log space,
/// so small `h` may overflow the callback's argument.
pub fn dequantize_callback_h(
    eval: impl Fn(&[f64]) -> f64,
    x: &[f64],
    h: f64,
) -> Result<f64, DequantError> {
    assert!(h > 0.0, "dequantize_callback_h requires h > 0");
    let z: Vec<f64> = x.iter().map(|&xi| (xi / h).exp()).collect();
    let v = eval(&z).abs();
    if v == 0.0 {
        return Err(DequantError::ZeroValue);
    }
    Ok(h * v.ln())
}
