//! The three-level algebra kernel: complex numbers over `{1, I}`, complex
//! quaternions over `{1, i1, i2, i3}`, and 32-coefficient multivectors.

pub mod basis;
mod complex;
mod functions;
mod multivector;
mod products;
mod quat;

pub use complex::ComplexScalar;
pub use functions::{EXP_MAX_TERMS, EXP_TERM_TOLERANCE};
pub use multivector::{Multivector, SLOTS, SLOT_GRADES, SLOT_LABELS, SLOT_LABEL_SIGNS};
pub use products::{INVOLUTION_SIGNS, REVERSE_SIGNS};
pub use quat::ComplexQuat;
