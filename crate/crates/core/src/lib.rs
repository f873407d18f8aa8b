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

//! Isotropic Gaussian-process toolkit built around three covariance families:
//! generalized Cauchy, Matérn and generalized Wendland, plus the squared
//! exponential as their common smooth limit.
//!
//! The crate provides
//!
//! * the correlation functions themselves with strict parameter validation
//!   ([`covmodels`]),
//! * their isotropic spectral densities together with a quadrature oracle for
//!   the defining Hankel transform ([`spectral`]),
//! * microergodic parameters and compatibility predicates for pairs of
//!   Gaussian measures, including solvers for "equivalent" parameters
//!   ([`equivalence`]),
//! * exact Gaussian likelihood machinery and profile-likelihood estimation of
//!   the scale ([`estimate`]),
//! * kriging prediction under a possibly misspecified working model with the
//!   associated error ratios ([`predict`]),
//! * seeded, reproducible Gaussian-process simulation ([`simulate`]), and
//! * a Monte Carlo experiment harness with CSV output ([`experiments`]).
//!
//! Everything is deterministic given seeds; replicate-level parallelism never
//! changes results.

pub mod covmodels;
pub mod equivalence;
pub mod estimate;
pub mod experiments;
pub mod linalg;
pub mod predict;
pub(crate) mod quad;
pub mod simulate;
pub mod specfun;
pub mod spectral;
