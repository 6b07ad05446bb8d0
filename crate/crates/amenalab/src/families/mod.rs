//! Per-family arithmetic, windows and ideal membership.
//!
//! Everything here is a pure function on payload data; dispatch and
//! payload bookkeeping live in [`crate::semigroup`].

pub mod bicyclic;
pub mod comm_vec;
pub mod finite;
pub mod free_word;
pub mod min_z;
pub mod munn;
pub mod nat_mul;
pub mod polycyclic;
