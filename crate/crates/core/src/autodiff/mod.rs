//! Dense f64 tensors with tape-based reverse-mode differentiation.
//!
//! Every loss in this crate is assembled from the ops defined here, so a
//! single `backward` call yields gradients for any mix of network weights,
//! feature volumes and vertex positions. Tapes are cheap, single-threaded
//! and rebuilt from scratch for every optimizer step.

mod adam;
mod check;
mod tape;

pub use adam::{Adam, AdamState};
pub use check::finite_diff_check;
pub use tape::{CustomGrad, Tape, Var};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DiffError {
    #[error("backward requires a scalar loss, got shape {0:?}")]
    NonScalarLoss(Vec<usize>),
    #[error("loss is detached from every tracked parameter")]
    DetachedGraph,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// A dense row-major array of 64-bit reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub data: Vec<f64>,
    pub requires_grad: bool,
}

impl Tensor {
    pub fn new(shape: Vec<usize>, data: Vec<f64>) -> Self {
        assert_eq!(
            shape.iter().product::<usize>(),
            data.len(),
            "tensor data length must match shape product"
        );
        Tensor {
            shape,
            data,
            requires_grad: false,
        }
    }

    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        Tensor::new(shape, vec![0.0; n])
    }

    pub fn scalar(v: f64) -> Self {
        Tensor::new(vec![1], vec![v])
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn with_grad(mut self) -> Self {
        self.requires_grad = true;
        self
    }
}
