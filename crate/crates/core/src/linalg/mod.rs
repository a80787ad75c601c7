// SPDX-License-Identifier: Apache-2.0

//! Exact rational scalars and dense matrices with row-space operations.

mod matrix;
mod rational;

pub use matrix::{rowspace_equal, RatMatrix};
pub use rational::Rational;
