#![allow(clippy::needless_range_loop)]

pub mod chainring;
pub mod error;
pub mod group;
pub mod grouprep;
pub mod rnmod;
pub mod sample;
pub mod spectrum;
pub mod stable;

pub use error::{Error, Result};
