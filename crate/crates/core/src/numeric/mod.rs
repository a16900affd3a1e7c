//! Extended-precision floating point and polynomial root approximation.

pub mod dd;
pub mod roots;
