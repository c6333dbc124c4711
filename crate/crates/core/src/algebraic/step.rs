//! Single-iteration operations on whole state vectors.

use super::arith::{Arith, Exact, Float, Saturating};
use super::kernel::{self, Marks, SweepContext};
use super::{ArithmeticMode, MaskSet, StateValues, StateVector, TraversalConfig, Variant};
use crate::error::TraversalError;
use crate::graph::{Graph, VertexId};

/// One Jacobi iteration: every unmasked entry is recomputed from the
/// previous iterate; masked entries are left untouched.
pub fn jacobi_step(
    g: &Graph,
    x: &StateVector,
    cfg: &TraversalConfig,
    mask: &MaskSet,
) -> Result<StateVector, TraversalError> {
    step(g, x, cfg, mask, Variant::Jacobi)
}

/// One Gauss-Seidel iteration: a single sweep in ascending label order.
pub fn gauss_seidel_step(
    g: &Graph,
    x: &StateVector,
    cfg: &TraversalConfig,
    mask: &MaskSet,
) -> Result<StateVector, TraversalError> {
    step(g, x, cfg, mask, Variant::GaussSeidel)
}

/// One unsigned iteration: the Gauss-Seidel sweep with `+b_i` and `+d`.
pub fn unsigned_step(
    g: &Graph,
    x: &StateVector,
    cfg: &TraversalConfig,
    mask: &MaskSet,
) -> Result<StateVector, TraversalError> {
    step(g, x, cfg, mask, Variant::UnsignedCcs)
}

fn step(
    g: &Graph,
    x: &StateVector,
    cfg: &TraversalConfig,
    mask: &MaskSet,
    expected: Variant,
) -> Result<StateVector, TraversalError> {
    if cfg.variant != expected {
        return Err(TraversalError::WrongVariant {
            expected: expected.name(),
            actual: cfg.variant.name(),
        });
    }
    cfg.validate()?;
    let n = g.vertex_count();
    if x.len() != n || mask.vertex_count() != n {
        return Err(TraversalError::LengthMismatch {
            expected: n,
            actual: if x.len() != n { x.len() } else { mask.vertex_count() },
        });
    }
    let d = cfg.diagonal(g);
    match cfg.mode {
        ArithmeticMode::Exact => step_with(&Exact::new(d), g, x, cfg, mask),
        ArithmeticMode::Saturate { cap } => step_with(&Saturating::new(d, cap), g, x, cfg, mask),
        ArithmeticMode::Float => step_with(&Float::new(d), g, x, cfg, mask),
    }
}

fn step_with<A: Arith>(
    arith: &A,
    g: &Graph,
    x: &StateVector,
    cfg: &TraversalConfig,
    mask: &MaskSet,
) -> Result<StateVector, TraversalError> {
    let signed = cfg.variant.is_signed();
    let input = A::unwrap(&x.values).ok_or(TraversalError::ModeMismatch)?;
    if !signed {
        if let Some(i) = input.iter().position(|v| !arith.is_valid(v, false)) {
            return Err(TraversalError::NegativeValue(i as u32 + 1));
        }
    }
    let mut values = input.to_vec();
    let ctx = SweepContext {
        graph: g,
        start: x.start.index(),
        masked: mask.flags(),
        signed,
    };
    let mut marks = Marks::new(0);
    let processed = if cfg.variant.is_ordered() {
        kernel::ordered(arith, &ctx, &mut values, None, &mut marks)
    } else {
        kernel::jacobi(arith, &ctx, &mut values, None, &mut marks)
    };
    let iteration = x.iteration + 1;
    for &i in &processed {
        if !arith.is_valid(&values[i as usize], signed) {
            return Err(TraversalError::NonFinite {
                vertex: i + 1,
                iteration,
            });
        }
    }
    Ok(StateVector::new(A::wrap(values), iteration, x.start))
}

/// Vertices whose entry is zero in `prev` and nonzero in `next`, ascending.
pub fn extract_frontier(prev: &StateVector, next: &StateVector) -> Vec<VertexId> {
    assert_eq!(prev.len(), next.len(), "state vectors differ in length");
    (0..prev.len())
        .filter(|&i| prev.values.is_zero_at(i) && !next.values.is_zero_at(i))
        .map(VertexId::from_index)
        .collect()
}

/// Divides every entry by `d^M` (floating-point mode only).
pub fn regularize(x: &StateVector, cfg: &TraversalConfig) -> Result<StateVector, TraversalError> {
    let StateValues::Float(values) = &x.values else {
        return Err(TraversalError::ModeMismatch);
    };
    let period = match cfg.regularize_every {
        Some(m) if m >= 1 => m,
        _ => return Err(TraversalError::MissingRegularization),
    };
    let d = cfg.d.unwrap_or(crate::graph::DEFAULT_DIAGONAL);
    let arith = Float::new(d);
    let mut out = values.clone();
    for v in &mut out {
        arith.rescale(v, period);
    }
    Ok(StateVector::new(StateValues::Float(out), x.iteration, x.start))
}
