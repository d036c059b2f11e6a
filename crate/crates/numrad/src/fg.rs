//! Validated pairs of scalar functions `(f, g)` with `f(λ)·g(λ) = λ`.
//!
//! The pair is validated lazily, at every spectrum point where it is
//! actually applied; the full function class is uncountable so there is
//! nothing useful to check up front.

use std::fmt;
use std::sync::Arc;

use crate::error::{NumradError, Result};

/// Relative tolerance for the `f·g = id` factorization check.
pub const FG_PRODUCT_TOL: f64 = 1e-9;

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A pair of nonnegative continuous functions on `[0, ∞)` whose pointwise
/// product is the identity.
#[derive(Clone)]
pub struct FgPair {
    f: ScalarFn,
    g: ScalarFn,
    label: String,
}

impl FgPair {
    pub fn new<F, G>(label: impl Into<String>, f: F, g: G) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            f: Arc::new(f),
            g: Arc::new(g),
            label: label.into(),
        }
    }

    /// The power family `f(λ) = λ^t`, `g(λ) = λ^(1-t)` for `t ∈ [0, 1]`.
    ///
    /// `λ^0` is defined as 1 for every `λ ≥ 0` including zero, so the
    /// endpoints t = 0 and t = 1 stay inside the family.
    pub fn power(t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(NumradError::BadParameter(format!(
                "power pair exponent t must lie in [0, 1], got {t}"
            )));
        }
        Ok(Self::new(
            format!("power(t={t})"),
            move |l: f64| l.powf(t),
            move |l: f64| l.powf(1.0 - t),
        ))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Evaluates `f` after validating the pair at `lambda`.
    pub fn f(&self, lambda: f64) -> Result<f64> {
        self.validate_at(lambda)?;
        Ok((self.f)(lambda))
    }

    /// Evaluates `g` after validating the pair at `lambda`.
    pub fn g(&self, lambda: f64) -> Result<f64> {
        self.validate_at(lambda)?;
        Ok((self.g)(lambda))
    }

    /// Checks the pair invariants at one spectrum point:
    /// finiteness, nonnegativity, and `|f(λ)g(λ) − λ| ≤ 1e-9·(1+λ)`.
    pub fn validate_at(&self, lambda: f64) -> Result<()> {
        let fv = (self.f)(lambda);
        let gv = (self.g)(lambda);
        if !fv.is_finite() || !gv.is_finite() {
            return Err(NumradError::FgValidation {
                label: self.label.clone(),
                detail: format!("non-finite value at λ = {lambda:e}"),
            });
        }
        if fv < 0.0 || gv < 0.0 {
            return Err(NumradError::FgValidation {
                label: self.label.clone(),
                detail: format!("negative value at λ = {lambda:e} (f = {fv:e}, g = {gv:e})"),
            });
        }
        let defect = (fv * gv - lambda).abs();
        if defect > FG_PRODUCT_TOL * (1.0 + lambda) {
            return Err(NumradError::FgValidation {
                label: self.label.clone(),
                detail: format!("f(λ)g(λ) ≠ λ at λ = {lambda:e} (defect {defect:e})"),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for FgPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FgPair").field("label", &self.label).finish()
    }
}
