//! Exact rational numbers over `i128`.
//!
//! Values are kept in lowest terms with a positive denominator. All
//! arithmetic is checked: the `checked_*` methods report overflow as an
//! [`Error::Overflow`], and the operator impls panic with a diagnostic
//! instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num / den` in lowest terms. Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Rational {
        Self::try_new(num, den).expect("rational with zero denominator")
    }

    pub fn try_new(num: i128, den: i128) -> Result<Rational> {
        if den == 0 {
            return Err(Error::InvalidWeight(format!("{num}/0")));
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = n.checked_neg().ok_or(Error::Overflow("normalize"))?;
            d = d.checked_neg().ok_or(Error::Overflow("normalize"))?;
        }
        Ok(Rational { num: n, den: d })
    }

    pub fn from_integer(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.num, &self.den)
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational> {
        // Work over lcm(den) to keep intermediates small.
        let g = self.den.gcd(&rhs.den);
        let l = (self.den / g)
            .checked_mul(rhs.den)
            .ok_or(Error::Overflow("add"))?;
        let a = self
            .num
            .checked_mul(l / self.den)
            .ok_or(Error::Overflow("add"))?;
        let b = rhs
            .num
            .checked_mul(l / rhs.den)
            .ok_or(Error::Overflow("add"))?;
        Rational::try_new(a.checked_add(b).ok_or(Error::Overflow("add"))?, l)
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<Rational> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(Error::Overflow("neg"))?,
            den: self.den,
        })
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational> {
        let g1 = self.num.gcd(&rhs.den).max(1);
        let g2 = rhs.num.gcd(&self.den).max(1);
        let n = (self.num / g1)
            .checked_mul(rhs.num / g2)
            .ok_or(Error::Overflow("mul"))?;
        let d = (self.den / g2)
            .checked_mul(rhs.den / g1)
            .ok_or(Error::Overflow("mul"))?;
        Rational::try_new(n, d)
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational> {
        if rhs.num == 0 {
            return Err(Error::Other("rational division by zero".into()));
        }
        self.checked_mul(Rational::try_new(rhs.den, rhs.num)?)
    }

    pub fn checked_cmp(&self, other: &Rational) -> Result<Ordering> {
        let l = self
            .num
            .checked_mul(other.den)
            .ok_or(Error::Overflow("cmp"))?;
        let r = other
            .num
            .checked_mul(self.den)
            .ok_or(Error::Overflow("cmp"))?;
        Ok(l.cmp(&r))
    }

    /// Exact sum of an iterator, reporting overflow.
    pub fn checked_sum<I: IntoIterator<Item = Rational>>(iter: I) -> Result<Rational> {
        iter.into_iter()
            .try_fold(Rational::ZERO, |acc, x| acc.checked_add(x))
    }
}

/// Integer weights on a common denominator: returns `(ints, l)` with
/// `values[i] = ints[i] / l`. Fails if the lcm or any product overflows,
/// or if the sum of all `ints` would not fit (so DP sums stay exact).
pub fn common_scale(values: &[Rational]) -> Result<(Vec<i128>, i128)> {
    let mut l: i128 = 1;
    for v in values {
        l = (l / l.gcd(&v.den))
            .checked_mul(v.den)
            .ok_or(Error::Overflow("common denominator"))?;
    }
    let mut total: i128 = 0;
    let mut ints = Vec::with_capacity(values.len());
    for v in values {
        let x = v
            .num
            .checked_mul(l / v.den)
            .ok_or(Error::Overflow("common denominator"))?;
        total = total
            .checked_add(x.abs())
            .ok_or(Error::Overflow("common denominator"))?;
        ints.push(x);
    }
    // leave headroom for doubled sums in merge steps
    if total > i128::MAX / 4 {
        return Err(Error::Overflow("common denominator"));
    }
    Ok((ints, l))
}

fn unwrap_op(r: Result<Rational>) -> Rational {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        unwrap_op(self.checked_add(rhs))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        unwrap_op(self.checked_sub(rhs))
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        unwrap_op(self.checked_mul(rhs))
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        unwrap_op(self.checked_div(rhs))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        unwrap_op(self.checked_neg())
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        unwrap_op(Rational::checked_sum(iter))
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        unwrap_op(Rational::checked_sum(iter.copied()))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        match self.checked_cmp(other) {
            Ok(o) => o,
            Err(e) => panic!("{e}"),
        }
    }
}

impl From<i128> for Rational {
    fn from(n: i128) -> Rational {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_integer(n as i128)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Rational {
        Rational::from_integer(n as i128)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` with optional sign on `p`.
    fn from_str(s: &str) -> Result<Rational> {
        let s = s.trim();
        let bad = || Error::InvalidWeight(format!("not a rational literal: `{s}`"));
        match s.split_once('/') {
            None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
            Some((p, q)) => {
                let p: i128 = p.trim().parse().map_err(|_| bad())?;
                let q: i128 = q.trim().parse().map_err(|_| bad())?;
                if q <= 0 {
                    return Err(bad());
                }
                Rational::try_new(p, q)
            }
        }
    }
}
