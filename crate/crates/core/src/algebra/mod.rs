//! Exact arithmetic: rationals, the field Q(ω), the group S3 × Z2,
//! polynomials over Q(ω) and small integer normal forms.

pub mod cyc;
pub mod group;
pub mod linalg;
pub mod poly;
pub mod snf;
pub mod upoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use cyc::{CycNum, RootOfUnity};
pub use group::{GroupElem, Perm3, Subgroup};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    rat(n, 1)
}

/// Serializers writing rationals as strings such as "3/2".
pub mod rat_serde {
    use super::Rat;
    use serde::ser::{SerializeSeq, Serializer};

    pub fn one<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn many<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }

    pub fn named<S: Serializer>(v: &[(String, Rat)], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for (n, r) in v {
            seq.serialize_element(&(n, r.to_string()))?;
        }
        seq.end()
    }
}

/// Rational square root, if the value is the square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_square_roots() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
        assert_eq!(rat_sqrt(&rat(0, 1)), Some(rat(0, 1)));
    }
}
