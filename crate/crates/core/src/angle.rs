//! Exact circle arithmetic: rational numbers reduced modulo 1.
//!
//! Every coordinate in this library is a rational number, so equality tests,
//! root solving and winding counts are exact.  An [`Angle`] is a rational
//! taken modulo 1, stored as its canonical representative in `[0, 1)`.

use num_rational::Rational64;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Exact scalar type used for every coordinate.
pub type Rat = Rational64;

/// A point on the circle ℝ/ℤ, stored as its canonical representative in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Angle(Rat);

impl Angle {
    /// Reduce an arbitrary rational modulo 1.
    pub fn new(value: Rat) -> Self {
        Angle(value - value.floor())
    }

    /// The canonical representative in `[0, 1)`.
    pub fn rep(self) -> Rat {
        self.0
    }

    /// The angle 0.
    pub fn zero() -> Self {
        Angle(Rat::from_integer(0))
    }

    /// The half turn 1/2.
    pub fn half() -> Self {
        Angle(Rat::new(1, 2))
    }

    /// The integer multiple `n·θ`.
    pub fn scale(self, n: i64) -> Self {
        Angle::new(self.0 * Rat::from_integer(n))
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::new(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::new(self.0 - rhs.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::new(-self.0)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
