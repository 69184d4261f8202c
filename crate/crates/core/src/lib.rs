//! Marked bases over strongly stable monomial ideals.
//!
//! Given a strongly stable monomial ideal `J`, this crate decides whether a
//! set of marked polynomials with heads `B_J` generates an ideal `I` for
//! which the monomials outside `J` form a basis of the quotient, and builds
//! the affine scheme parametrizing all such ideals.
//!
//! Algorithms are generic over the coefficient ring (see [`scalar::Ring`]);
//! the aliases below fix the two instantiations used in practice: exact
//! rationals and polynomials in the coefficient variables.

pub mod criterion;
pub mod error;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod marked;
pub mod monomial;
pub mod oracle;
pub mod param;
pub mod poly;
pub mod random;
pub mod reduce;
pub mod scalar;
pub mod stratum;
pub mod text;

pub use error::{Error, Result};
pub use ideal::{borel_closure, MonomialIdeal};
pub use monomial::{LambdaDegree, Monomial, TermOrder};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// A homogeneous polynomial with rational coefficients.
pub type QPoly = poly::HomPoly<Rational>;
/// A polynomial in the coefficient variables `C`.
pub type ParamPoly = param::CPoly<Rational>;
/// A homogeneous polynomial in `X` with coefficients in `Q[C]`.
pub type ParamHomPoly = poly::HomPoly<ParamPoly>;
/// A J-set with rational coefficients.
pub type QJSet = marked::JSet<Rational>;
/// A J-set with coefficients in `Q[C]`.
pub type ParamJSet = marked::JSet<ParamPoly>;
