//! Exact integer polynomials, prime-field arithmetic and linear algebra mod p.

pub mod compiled;
pub mod linalg;
mod parse;
pub mod poly;
pub mod prime;

pub use compiled::{jacobian_rank, ModPoly, ModSystem};
pub use linalg::{in_span_mod_p, kernel_mod_p, matrix_rank_mod_p};
pub use parse::parse_poly;
pub use poly::{ring, Monomial, Polynomial};
pub use prime::{format_point, parse_point, FieldElement, SmallPrime};
