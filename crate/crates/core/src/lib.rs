//! Signatures of filtered Gorenstein algebras and the real-analytic indices
//! they compute.
//!
//! The layers build on each other:
//!
//! * [`polyring`]: exact polynomials over the rationals and a parser.
//! * [`localbasis`]: standard bases in the local ring at the origin.
//! * [`algebra`]: the finite-dimensional local algebra `O / (f_1, ..., f_n)`.
//! * [`bilinear`]: symmetric forms, signatures and the local degree.
//! * [`flags`]: the kernel-image flag of a nilpotent element and its forms.
//! * [`jantzen`]: valuation filtrations of symmetric matrix families.
//! * [`index`]: indices of vector fields on hypersurfaces.
//! * [`cli`]: the `flagsig` command-line front end.

pub mod algebra;
pub mod bilinear;
pub mod cli;
pub mod error;
pub mod flags;
pub mod index;
pub mod jantzen;
pub mod linalg;
pub mod localbasis;
pub mod polyring;

pub use error::{Error, Result};
