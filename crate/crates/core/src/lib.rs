//! Local Euler factors of zeta functions of quadratic orders.
//!
//! The crate builds the factor polynomials `P_n(u)` (proper ideals) and
//! `P*_n(u)` (all ideals) at a prime `p` dividing the conductor, certifies
//! that all their zeros lie on `Re(s) = 1/2` with an exact Sturm chain over
//! Q(√p), cross-checks with numeric root finding, and validates the Euler
//! product against a brute-force count of ideals of the order.
//!
//! Modules:
//! - [`exactnum`]: rationals and Q(√p) with exact sign determination.
//! - [`polyalg`]: dense polynomials, exact division, numeric roots.
//! - [`localfactor`]: the factors, Chebyshev reduction, certification.
//! - [`ordoracle`]: ideal enumeration and Dirichlet coefficient comparison.
//!
//! ```
//! use quadzeta_core::exactnum::ratio;
//! use quadzeta_core::localfactor::{critical_zeros, isolate_roots, local_factor_poly};
//! use quadzeta_core::{FactorKind, LocalFactorParams};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let params = LocalFactorParams::new(3, 4, 1)?;
//! let p = local_factor_poly(&params)?;
//! assert_eq!(p.degree(), Some(8));
//! let cert = isolate_roots(&params, FactorKind::Proper, &ratio(1, 1 << 20))?;
//! assert!(cert.is_consistent());
//! let zeros = critical_zeros(&params, FactorKind::Proper, 1e-8)?;
//! assert!(zeros.iter().all(|z| z.certified && z.s_re == 0.5));
//! # Ok(())
//! # }
//! ```

pub mod exactnum;
pub mod localfactor;
pub mod ordoracle;
pub mod par;
pub mod polyalg;

pub use exactnum::{QuadExt, Rational};
pub use localfactor::{FactorKind, LocalFactorParams};
pub use ordoracle::OrderSpec;
pub use par::Exec;
pub use polyalg::Poly;
