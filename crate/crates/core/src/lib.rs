//! Zeta functions and Euler characteristics of finite categories.
//!
//! A finite category enters only through its adjacency matrix `A`, where
//! `A[i][j]` counts the morphisms from object `i` to object `j`. From it the
//! crate computes the chain counts `N_m = sum(A^m)`, the zeta function
//! `exp(Σ N_m z^m / m)`, a closed form `Π (1 − α z)^{−β} · exp(…)`, and the
//! series and Leinster Euler characteristics.
//!
//! ```
//! use catzeta_core::category::AdjacencyMatrix;
//! use catzeta_core::zeta::synthesize_closed_form;
//!
//! let a = AdjacencyMatrix::validate(&[vec![2, 3, 5], vec![2, 3, 5], vec![2, 1, 3]]).unwrap();
//! let form = synthesize_closed_form(&a).unwrap();
//! assert_eq!(form.to_string(), "(1 - 8*z)^-(13/4)");
//! ```

#![allow(clippy::needless_range_loop)]

pub mod batch;
pub mod category;
pub mod error;
pub mod exactmath;
pub mod nerve;
pub mod zeta;

pub use error::{Error, Result};
