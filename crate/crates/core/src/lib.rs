//! Exact-arithmetic toolkit for studying when the orbit of a point under a
//! polynomial self-map of affine space lands in a closed subvariety.
//!
//! Everything is generic over the coefficient [`Field`]; the aliases at the
//! crate root fix the three supported fields: the rationals, prime fields and
//! the rational function field F_p(t).
//!
//! * [`field`]: exact coefficient arithmetic.
//! * [`poly`]: sparse multivariate polynomials and monomial orders.
//! * [`ideal`]: Gröbner bases, normal forms, dimension and vanishing ideals
//!   of finite point sets.
//! * [`orbit`]: morphisms, orbit iteration, cycle detection, return sets.
//! * [`density`]: window-density profiles, arithmetic progression mining and
//!   the split of a return set into progressions plus a sparse residual.
//! * [`closure`]: Zariski closures of sampled sub-orbits, periodicity
//!   certificates and the case split on dimensions.

pub mod closure;
pub mod density;
pub mod error;
pub mod field;
pub mod ideal;
pub mod orbit;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, FieldKind, Fp, Fpt, Rational};
pub use ideal::{PointSet, ReducedGroebnerBasis};
pub use orbit::{Morphism, RationalPoint, ReturnSet};
pub use poly::{Monomial, MonomialOrder, MultiPoly, OrderKind};

/// Polynomial over the rationals.
pub type QPoly = MultiPoly<Rational>;
/// Polynomial over a prime field.
pub type FpPoly = MultiPoly<Fp>;
/// Polynomial over F_p(t).
pub type FptPoly = MultiPoly<Fpt>;

pub type QGroebnerBasis = ReducedGroebnerBasis<Rational>;
pub type FpGroebnerBasis = ReducedGroebnerBasis<Fp>;
pub type FptGroebnerBasis = ReducedGroebnerBasis<Fpt>;

pub type QMorphism = Morphism<Rational>;
pub type FpMorphism = Morphism<Fp>;
pub type FptMorphism = Morphism<Fpt>;
