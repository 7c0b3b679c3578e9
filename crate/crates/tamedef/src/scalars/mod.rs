//! Exact scalar arithmetic.

mod cyclotomic;
mod field;
mod nu;
mod witt;
mod wpoly;
mod zpoly;

pub use cyclotomic::{CyclotomicWitt, CycElem};
pub use field::{Fe, FField};
pub use nu::{minpoly_nu, minpoly_nu_z, nu_value, q_poly, q_poly_z};
pub use witt::WittRing;
pub use wpoly::WPoly;
pub use zpoly::{bareiss_det, power_of_two_exponent, ZPoly};
