pub mod algebra;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod modes;
pub mod special_fn;
pub mod verify;

pub use error::{Error, Result};
