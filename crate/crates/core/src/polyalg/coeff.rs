//! Exact rational coefficients.
//!
//! Values that fit in a machine-word fraction stay in the small
//! representation; anything that overflows is promoted to an
//! arbitrary-precision `BigRational` and demoted again once it fits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

type Small = Ratio<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(Small),
    Big(Box<BigRational>),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(Small::zero())
    }

    pub fn one() -> Self {
        Coeff::Small(Small::one())
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::Small(Small::from_integer(n))
    }

    pub fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Coeff::Small(Small::new_raw(n, d))
            }
            _ => Coeff::Big(Box::new(value)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(r) => {
                BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
            }
            Coeff::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_zero(),
            Coeff::Big(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_one(),
            Coeff::Big(b) => b.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_negative(),
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_integer(),
            Coeff::Big(b) => b.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        &Coeff::one() / self
    }

    fn small_op(
        a: &Coeff,
        b: &Coeff,
        small: impl Fn(&Small, &Small) -> Option<Small>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Coeff {
        if let (Coeff::Small(x), Coeff::Small(y)) = (a, b) {
            // i64::MIN has no negation, keep it out of the small path
            if let Some(r) = small(x, y) {
                if *r.numer() != i64::MIN {
                    return Coeff::Small(r);
                }
            }
        }
        Coeff::from_big(big(a.to_big(), b.to_big()))
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        Coeff::small_op(self, rhs, |x, y| x.checked_add(y), |x, y| x + y)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        Coeff::small_op(self, rhs, |x, y| x.checked_sub(y), |x, y| x - y)
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        Coeff::small_op(self, rhs, |x, y| x.checked_mul(y), |x, y| x * y)
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "division by zero coefficient");
        Coeff::small_op(self, rhs, |x, y| x.checked_div(y), |x, y| x / y)
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(r) => Coeff::Small(-r),
            Coeff::Big(b) => Coeff::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(r) => write!(f, "{r}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseCoeffError(pub String);

impl FromStr for Coeff {
    type Err = ParseCoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCoeffError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let valid = |t: &str| {
            let digits = t.strip_prefix('-').unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num) || den.is_some_and(|d| !valid(d)) {
            return Err(err());
        }
        let n: BigInt = num.parse().map_err(|_| err())?;
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(err());
        }
        Ok(Coeff::from_big(BigRational::new(n, d)))
    }
}
