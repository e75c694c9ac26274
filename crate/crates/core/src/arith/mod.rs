//! Exact numeric substrate: rationals, cyclotomic numbers, integer Smith normal
//! form and prime-field linear algebra.

pub mod cyclotomic;
pub mod modp;
pub mod poly;
pub mod snf;

pub use cyclotomic::Cyclotomic;
pub use modp::{simultaneous_eigenbasis, PrimeFieldMatrix};
pub use poly::cyclotomic_polynomial;
pub use snf::{smith_normal_form, SmithForm};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
