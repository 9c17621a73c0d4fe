//! Exact solution counts.
//!
//! Counts stay in a machine word while they fit and are promoted to a
//! [`BigUint`] on the first addition that would overflow. Arithmetic never
//! wraps.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small(u64),
    // Always > u64::MAX.
    Big(BigUint),
}

/// A nonnegative integer of unbounded magnitude.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Count(Repr);

impl Count {
    pub const ZERO: Count = Count(Repr::Small(0));
    pub const ONE: Count = Count(Repr::Small(1));

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    /// The value as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match &self.0 {
            Repr::Small(v) => BigUint::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn add_u64(&mut self, rhs: u64) {
        match &mut self.0 {
            Repr::Small(v) => match v.checked_add(rhs) {
                Some(s) => *v = s,
                None => self.0 = Repr::Big(BigUint::from(*v) + rhs),
            },
            Repr::Big(b) => *b += rhs,
        }
    }
}

impl Default for Count {
    fn default() -> Self {
        Count::ZERO
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(Repr::Small(v))
    }
}

impl From<BigUint> for Count {
    fn from(b: BigUint) -> Self {
        match b.to_u64() {
            Some(v) => Count(Repr::Small(v)),
            None => Count(Repr::Big(b)),
        }
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        match &rhs.0 {
            Repr::Small(v) => self.add_u64(*v),
            Repr::Big(b) => {
                let sum = match &self.0 {
                    Repr::Small(v) => b + *v,
                    Repr::Big(a) => a + b,
                };
                self.0 = Repr::Big(sum);
            }
        }
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        *self += &rhs;
    }
}

impl Add for Count {
    type Output = Count;
    fn add(mut self, rhs: Count) -> Count {
        self += &rhs;
        self
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::ZERO, |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::ZERO, |mut acc, c| {
            acc += c;
            acc
        })
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

impl Ord for Count {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            (Repr::Small(_), Repr::Big(_)) => Ordering::Less,
            (Repr::Big(_), Repr::Small(_)) => Ordering::Greater,
            (Repr::Big(a), Repr::Big(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Count {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Count {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b: BigUint = s.parse()?;
        Ok(Count::from(b))
    }
}

impl Zero for Count {
    fn zero() -> Self {
        Count::ZERO
    }

    fn is_zero(&self) -> bool {
        Count::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_instead_of_wrapping() {
        let mut c = Count::from(u64::MAX);
        c.add_u64(1);
        assert_eq!(c.to_u64(), None);
        assert_eq!(c.to_string(), "18446744073709551616");
        let max = Count::from(u64::MAX);
        assert!(c > max);
    }

    #[test]
    fn big_values_demote_on_construction() {
        let c = Count::from(BigUint::from(7u32));
        assert_eq!(c, 7);
        assert_eq!(c, Count::from(7));
    }

    #[test]
    fn parse_and_display_agree() {
        let s = "340282366920938463463374607431768211457";
        let c: Count = s.parse().unwrap();
        assert_eq!(c.to_string(), s);
    }

    #[test]
    fn sum_mixes_representations() {
        let big: Count = "100000000000000000000".parse().unwrap();
        let total: Count = vec![Count::from(1), big.clone(), Count::from(2)]
            .into_iter()
            .sum();
        assert_eq!(total.to_biguint(), big.to_biguint() + 3u32);
    }
}
