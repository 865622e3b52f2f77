//! Scalar traits the matrix and numeric code is generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{Float, FromPrimitive, Num, NumAssign, Signed};

/// Exact integer scalar: `i64` for small fixed data, `BigInt` when growth is possible.
pub trait IntScalar: Integer + Signed + NumAssign + Clone + Hash + Debug + Display {}

impl<T> IntScalar for T where T: Integer + Signed + NumAssign + Clone + Hash + Debug + Display {}

/// Field scalar for elimination-based linear algebra (`BigRational`, `f64`).
pub trait FieldScalar: Num + NumAssign + Signed + Clone + PartialEq + Debug + Display {}

impl<T> FieldScalar for T where T: Num + NumAssign + Signed + Clone + PartialEq + Debug + Display {}

/// Floating point: f32 or f64.
pub trait FloatScalar: Float + NumAssign + FromPrimitive + Debug + Display {}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}
