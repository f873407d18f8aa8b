// Copyright 2026 the infillgp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Real-valued special functions needed by the covariance and spectral
//! formulas: log-gamma, beta, Pochhammer symbols, Bessel `J_nu` / `K_nu` and
//! the generalized hypergeometric `1F2`.
//!
//! All functions are pure; results depend only on the arguments.

mod bessel;
mod dd;
mod gamma;
mod hyper;

pub use bessel::{bessel_j, bessel_k, ln_bessel_k};
pub use gamma::{beta, ln_gamma, pochhammer, recip_gamma};
pub use hyper::{hyper_1f2, hyper_1f2_result, HYPER_1F2_SERIES_MAX_X};

use thiserror::Error;

/// Value plus an estimate of its absolute error, for operations that carry a
/// meaningful accuracy estimate (series truncation, asymptotic switch-over).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult {
    pub value: f64,
    pub est_abs_error: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecFunError {
    #[error("domain error in {function}: {message}")]
    Domain {
        function: &'static str,
        message: String,
    },
    #[error("{function} overflowed for the given arguments")]
    Overflow { function: &'static str },
    #[error(
        "{function} did not converge after {terms} terms (partial sum {partial_sum:.6e})"
    )]
    Convergence {
        function: &'static str,
        terms: usize,
        partial_sum: f64,
    },
}

pub(crate) fn domain_err(function: &'static str, message: impl Into<String>) -> SpecFunError {
    SpecFunError::Domain {
        function,
        message: message.into(),
    }
}
