use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

/// Arithmetic the LP relaxation runs on.
pub trait IlpScalar:
    Clone
    + Debug
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;
    /// Largest integer not above `self`.
    fn floor_i64(&self) -> i64;
    /// Smallest integer not below `self`.
    fn ceil_i64(&self) -> i64;
    fn is_integral(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn to_f64(&self) -> f64;

    fn is_nonzero(&self) -> bool {
        self.is_positive() || self.is_negative()
    }
}

const EPS: f64 = 1e-9;

impl IlpScalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn floor_i64(&self) -> i64 {
        (self + EPS).floor() as i64
    }
    fn ceil_i64(&self) -> i64 {
        (self - EPS).ceil() as i64
    }
    fn is_integral(&self) -> bool {
        (self - self.round()).abs() <= 1e-7
    }
    fn is_positive(&self) -> bool {
        *self > EPS
    }
    fn is_negative(&self) -> bool {
        *self < -EPS
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Exact rational over `i128`. Every operation is checked and panics on
/// overflow rather than wrapping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Ratio<i128>);

impl Exact {
    pub fn new(numer: i128, denom: i128) -> Self {
        Exact(Ratio::new(numer, denom))
    }
}

macro_rules! checked_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Exact {
            type Output = Exact;
            fn $method(self, rhs: Exact) -> Exact {
                Exact(self.0.$checked(&rhs.0).expect(concat!("rational overflow in ", stringify!($method))))
            }
        }
    };
}
checked_op!(Add, add, checked_add);
checked_op!(Sub, sub, checked_sub);
checked_op!(Mul, mul, checked_mul);
checked_op!(Div, div, checked_div);

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact(-self.0)
    }
}

impl Zero for Exact {
    fn zero() -> Self {
        Exact(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Exact {
    fn one() -> Self {
        Exact(Ratio::one())
    }
}

impl IlpScalar for Exact {
    fn from_i64(v: i64) -> Self {
        Exact(Ratio::from_integer(v as i128))
    }
    fn floor_i64(&self) -> i64 {
        self.0.floor().to_integer().to_i64().expect("value fits in i64")
    }
    fn ceil_i64(&self) -> i64 {
        self.0.ceil().to_integer().to_i64().expect("value fits in i64")
    }
    fn is_integral(&self) -> bool {
        self.0.is_integer()
    }
    fn is_positive(&self) -> bool {
        *self.0.numer() > 0
    }
    fn is_negative(&self) -> bool {
        *self.0.numer() < 0
    }
    fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}
