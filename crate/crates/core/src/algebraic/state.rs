use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::VertexId;

/// Entries of a state vector in one of the supported representations.
#[derive(Clone, Debug, PartialEq)]
pub enum StateValues {
    Exact(Vec<BigInt>),
    Saturate(Vec<u64>),
    Float(Vec<f64>),
}

impl StateValues {
    pub fn len(&self) -> usize {
        match self {
            StateValues::Exact(v) => v.len(),
            StateValues::Saturate(v) => v.len(),
            StateValues::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Zero test on the entry at 0-based `index`.
    pub fn is_zero_at(&self, index: usize) -> bool {
        match self {
            StateValues::Exact(v) => v[index].is_zero(),
            StateValues::Saturate(v) => v[index] == 0,
            StateValues::Float(v) => v[index] == 0.0,
        }
    }

    /// Decimal rendering of every entry; exact integers in full precision.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        match self {
            StateValues::Exact(v) => v.iter().map(|x| x.to_string()).collect(),
            StateValues::Saturate(v) => v.iter().map(|x| x.to_string()).collect(),
            StateValues::Float(v) => v.iter().map(|x| x.to_string()).collect(),
        }
    }
}

/// The iterate `x^(k)` of a traversal started at `start`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    pub values: StateValues,
    pub iteration: usize,
    pub start: VertexId,
}

impl StateVector {
    pub fn new(values: StateValues, iteration: usize, start: VertexId) -> Self {
        StateVector {
            values,
            iteration,
            start,
        }
    }

    /// Exact-mode vector from machine integers.
    pub fn from_i64(values: &[i64], iteration: usize, start: VertexId) -> Self {
        Self::new(
            StateValues::Exact(values.iter().map(|&x| BigInt::from(x)).collect()),
            iteration,
            start,
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self, v: VertexId) -> bool {
        self.values.is_zero_at(v.index())
    }

    /// Labels with a nonzero entry, ascending.
    pub fn support(&self) -> Vec<VertexId> {
        (0..self.len())
            .filter(|&i| !self.values.is_zero_at(i))
            .map(VertexId::from_index)
            .collect()
    }

    pub fn exact(&self) -> Option<&[BigInt]> {
        match &self.values {
            StateValues::Exact(v) => Some(v),
            _ => None,
        }
    }

    /// Exact entries narrowed to `i64`, if they all fit.
    pub fn exact_i64(&self) -> Option<Vec<i64>> {
        self.exact()?
            .iter()
            .map(|x| i64::try_from(x).ok())
            .collect()
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.values.to_decimal_strings()
    }
}
