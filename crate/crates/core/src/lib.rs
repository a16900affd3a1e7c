//! Exact arithmetic for gcds of multiples of sections of elliptic surfaces.

pub mod algebra;
pub mod ar;
pub mod elliptic;
pub mod error;
pub mod gcd;
pub mod limits;
pub mod numeric;
pub mod special;

pub use algebra::*;
pub use ar::*;
pub use elliptic::*;
pub use error::{Error, Result};
pub use gcd::*;
pub use limits::Limits;
pub use special::*;
