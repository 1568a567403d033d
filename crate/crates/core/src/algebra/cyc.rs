//! Exact arithmetic in the Eisenstein field Q(ω), ω² + ω + 1 = 0.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, rat_sqrt, Rat};
use crate::error::AlgebraError;

/// `re + wc·ω` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycNum {
    pub re: Rat,
    pub wc: Rat,
}

impl CycNum {
    pub fn new(re: Rat, wc: Rat) -> Self {
        CycNum { re, wc }
    }

    pub fn from_ints(re: i64, wc: i64) -> Self {
        CycNum::new(rat(re, 1), rat(wc, 1))
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNum::new(r, Rat::zero())
    }

    pub fn int(n: i64) -> Self {
        CycNum::from_ints(n, 0)
    }

    pub fn zero() -> Self {
        CycNum::int(0)
    }

    pub fn one() -> Self {
        CycNum::int(1)
    }

    /// The primitive cube root of unity ω.
    pub fn omega() -> Self {
        CycNum::from_ints(0, 1)
    }

    /// ω² = −1 − ω.
    pub fn omega2() -> Self {
        CycNum::from_ints(-1, -1)
    }

    /// √−3 = 1 + 2ω.
    pub fn sqrt_minus_three() -> Self {
        CycNum::from_ints(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.wc.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.wc.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.wc.is_zero()
    }

    /// Galois conjugate ω ↦ ω².
    pub fn conj(&self) -> Self {
        CycNum::new(&self.re - &self.wc, -&self.wc)
    }

    /// Field norm N(a + bω) = a² − ab + b², never negative.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - &self.re * &self.wc + &self.wc * &self.wc
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycNum::new(c.re / &n, c.wc / &n))
    }

    pub fn checked_div(&self, rhs: &CycNum) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum::new(&self.re * r, &self.wc * r)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn powi(&self, e: i64) -> Result<Self, AlgebraError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    /// Square root inside Q(ω), if one exists.
    ///
    /// Writes `self = p + q√−3` and looks for `s + t√−3` with
    /// `s² − 3t² = p`, `2st = q`, `s² + 3t² = √N(self)`.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(CycNum::zero());
        }
        let half = rat(1, 2);
        let p = &self.re - &self.wc * &half;
        let q = &self.wc * &half;
        let n = rat_sqrt(&self.norm())?;
        let s2 = (&p + &n) * &half;
        let t2 = (&n - &p) / rat(6, 1);
        let s = rat_sqrt(&s2)?;
        let t = rat_sqrt(&t2)?;
        for (ss, tt) in [(s.clone(), t.clone()), (s.clone(), -t.clone())] {
            // s + t(1 + 2ω)
            let cand = CycNum::new(&ss + &tt, &tt * rat(2, 1));
            if &(&cand * &cand) == self {
                return Some(cand);
            }
        }
        // only reachable if the candidate formulas above are wrong
        debug_assert!(q.is_zero() || s.is_zero() || t.is_zero());
        None
    }

    /// Exponent k with self = ζ^k, ζ = 1 + ω a primitive sixth root of unity.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        (0..6).map(RootOfUnity::new).find(|z| &z.to_cyc() == self)
    }

    /// Least common multiple of the two coefficient denominators.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.wc.denom())
    }

    /// Integer coefficients as i128 when this is an element of Z[ω] small enough.
    pub fn as_eisenstein_int(&self) -> Option<(i128, i128)> {
        if !self.re.is_integer() || !self.wc.is_integer() {
            return None;
        }
        Some((self.re.numer().to_i128()?, self.wc.numer().to_i128()?))
    }

    pub fn from_eisenstein_int(a: i128, b: i128) -> Self {
        CycNum::new(
            Rat::from_integer(BigInt::from(a)),
            Rat::from_integer(BigInt::from(b)),
        )
    }

    /// Coefficients as a pair of decimal strings (`"p/q"` or `"p"`).
    pub fn to_pair(&self) -> [String; 2] {
        [self.re.to_string(), self.wc.to_string()]
    }

    pub fn from_pair(pair: &[String; 2]) -> Result<Self, AlgebraError> {
        let parse = |s: &str| {
            s.parse::<Rat>()
                .map_err(|_| AlgebraError::Parse(s.to_string()))
        };
        Ok(CycNum::new(parse(&pair[0])?, parse(&pair[1])?))
    }
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_pair().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pair = <[String; 2]>::deserialize(d)?;
        CycNum::from_pair(&pair).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.wc.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.wc.is_one() => write!(f, "ω"),
            (true, false) => write!(f, "{}ω", self.wc),
            (false, false) => {
                let sign = if self.wc.is_negative() { "-" } else { "+" };
                let mag = self.wc.abs();
                if mag.is_one() {
                    write!(f, "{}{}ω", self.re, sign)
                } else {
                    write!(f, "{}{}{}ω", self.re, sign, mag)
                }
            }
        }
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::int(n)
    }
}

impl From<Rat> for CycNum {
    fn from(r: Rat) -> Self {
        CycNum::from_rat(r)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.re + &rhs.re, &self.wc + &rhs.wc)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::new(&self.re - &rhs.re, &self.wc - &rhs.wc)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let bd = &self.wc * &rhs.wc;
        CycNum::new(
            &self.re * &rhs.re - &bd,
            &self.re * &rhs.wc + &self.wc * &rhs.re - bd,
        )
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::new(-&self.re, -&self.wc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// Panics on a zero divisor; use [`CycNum::checked_div`] where zero is possible.
impl<'a> Div<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero in Q(ω)")
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::zero()
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::one()
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    // exponents add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: RootOfUnity) -> Self {
        RootOfUnity::new(self.0 as i64 + other.0 as i64)
    }
}

/// ζ^k for ζ = e^{iπ/3} = 1 + ω; the only roots of unity in Q(ω).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity(u8);

impl RootOfUnity {
    pub fn new(k: i64) -> Self {
        RootOfUnity(k.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn pow(self, e: i64) -> Self {
        RootOfUnity::new(self.0 as i64 * e)
    }

    pub fn order(self) -> u8 {
        6 / self.0.gcd(&6)
    }

    pub fn to_cyc(self) -> CycNum {
        match self.0 {
            0 => CycNum::from_ints(1, 0),
            1 => CycNum::from_ints(1, 1),
            2 => CycNum::from_ints(0, 1),
            3 => CycNum::from_ints(-1, 0),
            4 => CycNum::from_ints(-1, -1),
            _ => CycNum::from_ints(0, -1),
        }
    }

    /// All sixth roots of unity, ζ⁰ first.
    pub fn all() -> impl Iterator<Item = RootOfUnity> {
        (0..6).map(RootOfUnity::new)
    }

    /// Solutions of u^d = self inside μ₆, together with the number of
    /// complex solutions that fall outside Q(ω).
    pub fn roots(self, d: u64) -> (Vec<RootOfUnity>, u64) {
        assert!(d > 0);
        let found: Vec<_> = RootOfUnity::all()
            .filter(|u| u.pow(d as i64) == self)
            .collect();
        let missing = d - found.len() as u64;
        (found, missing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: i64, b: i64) -> CycNum {
        CycNum::from_ints(a, b)
    }

    #[test]
    fn omega_squared() {
        assert_eq!(&CycNum::omega() * &CycNum::omega(), c(-1, -1));
    }

    #[test]
    fn one_plus_omega_squared_is_omega() {
        assert_eq!(&c(1, 1) * &c(1, 1), c(0, 1));
    }

    #[test]
    fn multiplicative_identity() {
        let x = CycNum::new(rat(3, 7), rat(-5, 2));
        assert_eq!(&x * &CycNum::one(), x);
    }

    #[test]
    fn inverses() {
        assert_eq!(CycNum::omega().inv().unwrap(), c(-1, -1));
        assert_eq!(c(2, 0).inv().unwrap(), CycNum::from_rat(rat(1, 2)));
        assert_eq!(c(1, 1).inv().unwrap(), c(0, -1));
        assert_eq!(CycNum::zero().inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let w = CycNum::omega();
        let s = &(&CycNum::one() + &w) + &(&w * &w);
        assert!(s.is_zero());
    }

    #[test]
    fn sixth_roots_match_powers() {
        let zeta = c(1, 1);
        for k in 0..6 {
            assert_eq!(RootOfUnity::new(k).to_cyc(), zeta.pow(k as u32));
            assert_eq!(
                zeta.pow(k as u32).as_root_of_unity(),
                Some(RootOfUnity::new(k))
            );
        }
        assert_eq!(c(2, 0).as_root_of_unity(), None);
    }

    #[test]
    fn root_orders() {
        let orders: Vec<u8> = RootOfUnity::all().map(|z| z.order()).collect();
        assert_eq!(orders, vec![1, 6, 3, 2, 3, 6]);
    }

    #[test]
    fn roots_of_roots() {
        let (r, miss) = RootOfUnity::new(0).roots(3);
        assert_eq!(r.len(), 3);
        assert_eq!(miss, 0);
        // u^4 = 1 has ±1 in μ₆ and ±i outside
        let (r, miss) = RootOfUnity::new(0).roots(4);
        assert_eq!(r.len(), 2);
        assert_eq!(miss, 2);
        // u^2 = ω has ±ζ²... i.e. ζ and ζ⁴
        let (r, _) = RootOfUnity::new(2).roots(2);
        assert_eq!(r, vec![RootOfUnity::new(1), RootOfUnity::new(4)]);
    }

    #[test]
    fn square_roots() {
        assert_eq!(c(-3, 0).sqrt().map(|s| &s * &s), Some(c(-3, 0)));
        assert_eq!(c(0, 1).sqrt().map(|s| &s * &s), Some(c(0, 1)));
        assert_eq!(c(4, 0).sqrt().map(|s| &s * &s), Some(c(4, 0)));
        assert!(c(2, 0).sqrt().is_none());
        assert!(c(-1, 0).sqrt().is_none());
        let x = CycNum::new(rat(5, 3), rat(-7, 4));
        let sq = &x * &x;
        let r = sq.sqrt().unwrap();
        assert!(r == x || r == -&x);
    }

    #[test]
    fn pair_roundtrip() {
        let x = CycNum::new(rat(-3, 8), rat(11, 1));
        assert_eq!(CycNum::from_pair(&x.to_pair()).unwrap(), x);
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"["-3/8","11"]"#);
    }

    #[test]
    fn display() {
        assert_eq!(c(0, 1).to_string(), "ω");
        assert_eq!(c(-1, -1).to_string(), "-1-ω");
        assert_eq!(c(2, 3).to_string(), "2+3ω");
    }
}
