//! Sufficient conditions for exponential subordination, Janowski convexity
//! and Janowski starlikeness of normalized Laguerre polynomials, with probes
//! of the admissibility conditions they rest on.

mod admissibility;
mod corollary;
mod thm1;
mod thm2;
mod verdict;

pub use admissibility::*;
pub use corollary::*;
pub use thm1::*;
pub use thm2::*;
pub use verdict::*;
