use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact fitness value.
///
/// Weights of the counting landscape grow like `4^(N-1)` and winding values
/// double per level, so all arithmetic is done on unbounded integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fitness(BigInt);

impl Fitness {
    pub fn zero() -> Self {
        Fitness(BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// `base^exp` as a fitness value.
    pub fn pow(base: i64, exp: u32) -> Self {
        Fitness(num_traits::pow(BigInt::from(base), exp as usize))
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    /// Value as `i64` when it fits.
    pub fn to_i64(&self) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(&self.0)
    }
}

impl From<i64> for Fitness {
    fn from(v: i64) -> Self {
        Fitness(BigInt::from(v))
    }
}

impl From<BigInt> for Fitness {
    fn from(v: BigInt) -> Self {
        Fitness(v)
    }
}

impl FromStr for Fitness {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.trim().parse::<BigInt>().map(Fitness)
    }
}

impl fmt::Display for Fitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for Fitness {
    type Output = Fitness;
    fn add(self, rhs: Fitness) -> Fitness {
        Fitness(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Fitness> for Fitness {
    type Output = Fitness;
    fn add(self, rhs: &'a Fitness) -> Fitness {
        Fitness(self.0 + &rhs.0)
    }
}

impl Add<&Fitness> for &Fitness {
    type Output = Fitness;
    fn add(self, rhs: &Fitness) -> Fitness {
        Fitness(&self.0 + &rhs.0)
    }
}

impl AddAssign for Fitness {
    fn add_assign(&mut self, rhs: Fitness) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&Fitness> for Fitness {
    fn add_assign(&mut self, rhs: &Fitness) {
        self.0 += &rhs.0;
    }
}

impl Sub for Fitness {
    type Output = Fitness;
    fn sub(self, rhs: Fitness) -> Fitness {
        Fitness(self.0 - rhs.0)
    }
}

impl Sub<&Fitness> for &Fitness {
    type Output = Fitness;
    fn sub(self, rhs: &Fitness) -> Fitness {
        Fitness(&self.0 - &rhs.0)
    }
}

impl Mul<i64> for &Fitness {
    type Output = Fitness;
    fn mul(self, rhs: i64) -> Fitness {
        Fitness(&self.0 * rhs)
    }
}

impl Mul<i64> for Fitness {
    type Output = Fitness;
    fn mul(self, rhs: i64) -> Fitness {
        Fitness(self.0 * rhs)
    }
}

impl Neg for Fitness {
    type Output = Fitness;
    fn neg(self) -> Fitness {
        Fitness(-self.0)
    }
}

impl Sum for Fitness {
    fn sum<I: Iterator<Item = Fitness>>(iter: I) -> Fitness {
        iter.fold(Fitness::zero(), |acc, x| acc + x)
    }
}

// Serialized as a decimal string so documents stay exact for any magnitude.
impl Serialize for Fitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Fitness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(v) => Ok(Fitness::from(v)),
        }
    }
}
