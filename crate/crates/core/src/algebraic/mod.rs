//! Traversals realized as simple-iteration sweeps over the modified
//! adjacency matrix.
//!
//! Every variant starts from `x^(0) = d * e_s` with right-hand side
//! `b = e_s` and multiplies instead of dividing by the diagonal:
//!
//! * [`Variant::Jacobi`]: `x_i' = (-b_i + sum_j x_j) * (-d)`, all neighbors
//!   read from the previous iterate. Frontiers match breadth-first search.
//! * [`Variant::GaussSeidel`]: same update, but a single ascending sweep in
//!   place, so neighbors `j < i` contribute values already updated in this
//!   iteration. Frontiers match correct chain search.
//! * [`Variant::UnsignedCcs`]: `x_i' = (b_i + sum_j x_j) * d` with the
//!   Gauss-Seidel sweep order. All values stay nonnegative, so no sum can
//!   cancel to a false zero.
//!
//! A vertex is reached at iteration `k + 1` when its entry turns from zero
//! to nonzero.

mod arith;
mod driver;
mod kernel;
mod mask;
mod state;
mod step;

use serde::{Deserialize, Serialize};

use crate::error::TraversalError;
use crate::graph::Graph;

pub use driver::{find_all_components, find_connected_component, update_mask, SeedRule};
pub use mask::MaskSet;
pub use state::{StateValues, StateVector};
pub use step::{extract_frontier, gauss_seidel_step, jacobi_step, regularize, unsigned_step};

/// Saturation cap used when none is given.
pub const DEFAULT_SATURATION_CAP: u64 = 1 << 62;

/// Regularization period used for floating-point runs when none is given.
pub const DEFAULT_REGULARIZE_EVERY: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Jacobi,
    GaussSeidel,
    UnsignedCcs,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Jacobi => "jacobi",
            Variant::GaussSeidel => "gauss-seidel",
            Variant::UnsignedCcs => "unsigned-ccs",
        }
    }

    pub fn is_signed(self) -> bool {
        !matches!(self, Variant::UnsignedCcs)
    }

    /// Ascending in-place sweep (Gauss-Seidel order).
    pub fn is_ordered(self) -> bool {
        !matches!(self, Variant::Jacobi)
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "jacobi" | "bfs" => Ok(Variant::Jacobi),
            "gauss-seidel" | "ccs" => Ok(Variant::GaussSeidel),
            "unsigned-ccs" | "unsigned" => Ok(Variant::UnsignedCcs),
            other => Err(format!("unknown variant '{other}'")),
        }
    }
}

/// Number representation of the state vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArithmeticMode {
    /// Arbitrary-precision signed integers.
    Exact,
    /// Nonnegative `u64` clamped at `cap`; unsigned variant only.
    Saturate { cap: u64 },
    /// `f64` with periodic rescaling by `d^-M`.
    Float,
}

impl ArithmeticMode {
    pub fn name(self) -> &'static str {
        match self {
            ArithmeticMode::Exact => "exact",
            ArithmeticMode::Saturate { .. } => "saturate",
            ArithmeticMode::Float => "float",
        }
    }
}

/// Settings for one algebraic traversal run.
#[derive(Clone, Debug, PartialEq)]
pub struct TraversalConfig {
    pub variant: Variant,
    pub mode: ArithmeticMode,
    /// Freeze vertices that can no longer reach anything new.
    pub masking: bool,
    /// Rescale by `d^-M` after every `M` iterations (floating point only).
    pub regularize_every: Option<u32>,
    /// Overrides the graph's diagonal value.
    pub d: Option<u64>,
    /// Record `x^(k)` for every frontier-producing iteration.
    pub snapshot: bool,
    /// Compare signed-variant frontiers against the combinatorial reference
    /// and fail on divergence. On by default in debug builds.
    pub cross_check: bool,
}

impl TraversalConfig {
    pub fn new(variant: Variant, mode: ArithmeticMode) -> Self {
        TraversalConfig {
            variant,
            mode,
            masking: false,
            regularize_every: match mode {
                ArithmeticMode::Float => Some(DEFAULT_REGULARIZE_EVERY),
                _ => None,
            },
            d: None,
            snapshot: false,
            cross_check: cfg!(debug_assertions),
        }
    }

    pub fn jacobi() -> Self {
        Self::new(Variant::Jacobi, ArithmeticMode::Exact)
    }

    pub fn gauss_seidel() -> Self {
        Self::new(Variant::GaussSeidel, ArithmeticMode::Exact)
    }

    /// Unsigned sweep with saturating arithmetic and masking: the
    /// configuration used for component detection.
    pub fn detection() -> Self {
        Self::new(
            Variant::UnsignedCcs,
            ArithmeticMode::Saturate {
                cap: DEFAULT_SATURATION_CAP,
            },
        )
        .with_masking(true)
    }

    pub fn with_masking(mut self, on: bool) -> Self {
        self.masking = on;
        self
    }

    pub fn with_regularization(mut self, every: Option<u32>) -> Self {
        self.regularize_every = every;
        self
    }

    pub fn with_d(mut self, d: u64) -> Self {
        self.d = Some(d);
        self
    }

    pub fn with_snapshots(mut self, on: bool) -> Self {
        self.snapshot = on;
        self
    }

    pub fn with_cross_check(mut self, on: bool) -> Self {
        self.cross_check = on;
        self
    }

    /// Effective diagonal value for `g`.
    pub fn diagonal(&self, g: &Graph) -> u64 {
        self.d.unwrap_or_else(|| g.diagonal())
    }

    pub fn validate(&self) -> Result<(), TraversalError> {
        match self.mode {
            ArithmeticMode::Saturate { .. } if self.variant != Variant::UnsignedCcs => {
                Err(TraversalError::IncompatibleMode {
                    variant: self.variant.name(),
                    mode: self.mode.name(),
                })
            }
            ArithmeticMode::Float if !matches!(self.regularize_every, Some(m) if m >= 1) => {
                Err(TraversalError::MissingRegularization)
            }
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturate_requires_unsigned() {
        let cfg = TraversalConfig::new(Variant::GaussSeidel, ArithmeticMode::Saturate { cap: 10 });
        assert!(matches!(
            cfg.validate(),
            Err(TraversalError::IncompatibleMode { .. })
        ));
        let cfg = TraversalConfig::new(Variant::UnsignedCcs, ArithmeticMode::Saturate { cap: 10 });
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn float_requires_period() {
        let cfg = TraversalConfig::new(Variant::Jacobi, ArithmeticMode::Float);
        assert_eq!(cfg.regularize_every, Some(4));
        assert!(cfg.validate().is_ok());
        let cfg = cfg.with_regularization(Some(0));
        assert_eq!(cfg.validate(), Err(TraversalError::MissingRegularization));
        let cfg = cfg.with_regularization(None);
        assert_eq!(cfg.validate(), Err(TraversalError::MissingRegularization));
    }

    #[test]
    fn variant_names_parse_back() {
        for v in [Variant::Jacobi, Variant::GaussSeidel, Variant::UnsignedCcs] {
            assert_eq!(v.name().parse::<Variant>(), Ok(v));
        }
    }
}
