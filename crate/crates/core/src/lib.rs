//! Normal-form arithmetic and property checking for skew PBW extensions
//! `sigma(R)<x_1, .., x_n>` over finite rings.

// Errors carry the offending polynomials.
#![allow(clippy::result_large_err)]

pub mod cli;
pub mod finring;
pub mod nilarmendariz;
pub mod pbw;
pub mod presets;
pub mod report;
pub mod ringmaps;
