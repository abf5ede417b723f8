//! Kirillov–Reshetikhin crystals modeled by matrices and tableaux through RSK.

pub mod crystal;
pub mod error;
pub mod involutions;
pub mod kr_a;
pub mod kr_d;
pub mod kr_folded;
pub mod rsk;
pub mod suites;
pub mod tableau;
pub mod weight;

pub use error::{CrystalError, Result};
