//! Univariate polynomials over Q(ω) and exact root finding in the field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{CycNum, Rat};

/// Coefficients in increasing degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<CycNum>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Divide by (t − r); the remainder must vanish.
    pub fn deflate(&self, r: &CycNum) -> UPoly {
        let n = self.coeffs.len();
        let mut out = vec![CycNum::zero(); n.saturating_sub(1)];
        let mut carry = CycNum::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + &(&carry * r);
            out[i - 1] = carry.clone();
        }
        UPoly::new(out)
    }
}

/// Roots found in Q(ω), with multiplicity, and how many of the
/// polynomial's roots could not be located in the field.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FieldRoots {
    pub roots: Vec<CycNum>,
    pub unresolved: usize,
    /// The input was the zero polynomial.
    pub identically_zero: bool,
}

/// Cap on the norm of the constant term searched by [`field_roots`].
const NORM_SEARCH_LIMIT: i128 = 1 << 40;

/// All roots of `p` lying in Q(ω).
///
/// After scaling to a monic polynomial with coefficients in Z[ω] every
/// root in the field is an Eisenstein integer dividing the constant term,
/// so its norm divides the norm of that term. Candidates are enumerated by
/// norm. If the norm is too large to scan the rest are reported unresolved.
pub fn field_roots(p: &UPoly) -> FieldRoots {
    let Some(deg) = p.degree() else {
        return FieldRoots {
            identically_zero: true,
            ..Default::default()
        };
    };
    let mut roots = Vec::new();
    let mut q = p.clone();
    while q.degree().unwrap_or(0) > 0 && q.coeffs[0].is_zero() {
        roots.push(CycNum::zero());
        q = UPoly::new(q.coeffs[1..].to_vec());
    }
    loop {
        let d = q.degree().unwrap_or(0);
        if d == 0 {
            break;
        }
        if d == 1 {
            let r = -&q.coeffs[0]
                .checked_div(&q.coeffs[1])
                .expect("leading coefficient");
            roots.push(r);
            break;
        }
        if d == 2 {
            if let Some((r1, r2)) = quadratic_roots(&q.coeffs[2], &q.coeffs[1], &q.coeffs[0]) {
                roots.push(r1);
                roots.push(r2);
            }
            break;
        }
        match integral_root(&q) {
            Some(r) => {
                q = q.deflate(&r);
                roots.push(r);
            }
            None => break,
        }
    }
    let unresolved = deg - roots.len();
    roots.sort();
    FieldRoots {
        roots,
        unresolved,
        identically_zero: false,
    }
}

/// Roots of a·t² + b·t + c via a square root of the discriminant in Q(ω).
pub fn quadratic_roots(a: &CycNum, b: &CycNum, c: &CycNum) -> Option<(CycNum, CycNum)> {
    let disc = &(b * b) - &(&CycNum::int(4) * &(a * c));
    let s = disc.sqrt()?;
    let two_a = a * &CycNum::int(2);
    let r1 = (&(-b) + &s).checked_div(&two_a).ok()?;
    let r2 = (&(-b) - &s).checked_div(&two_a).ok()?;
    Some((r1, r2))
}

/// One root of a degree ≥ 1 polynomial with nonzero constant term.
fn integral_root(p: &UPoly) -> Option<CycNum> {
    let n = p.degree()?;
    let lead = p.coeffs[n].clone();
    let monic: Vec<CycNum> = p
        .coeffs
        .iter()
        .map(|c| c.checked_div(&lead).expect("nonzero"))
        .collect();
    let den = monic
        .iter()
        .fold(BigInt::from(1), |acc, c| acc.lcm(&c.denom_lcm()));
    // q(s) = den^n · p(s / den), monic with Eisenstein-integer coefficients
    let den_r = Rat::from_integer(den.clone());
    let scaled: Vec<CycNum> = monic
        .iter()
        .enumerate()
        .map(|(i, c)| c.scale(&pow_rat(&den_r, (n - i) as u32)))
        .collect();
    let (a0, b0) = scaled[0].as_eisenstein_int()?;
    let norm0 = a0
        .checked_mul(a0)?
        .checked_sub(a0.checked_mul(b0)?)?
        .checked_add(b0.checked_mul(b0)?)?;
    if norm0 == 0 || norm0 > NORM_SEARCH_LIMIT {
        return None;
    }
    let q = UPoly::new(scaled);
    for m in divisors(norm0) {
        for (a, b) in elements_of_norm(m) {
            let s = CycNum::from_eisenstein_int(a, b);
            if q.eval(&s).is_zero() {
                let r = s.scale(&(Rat::from_integer(BigInt::from(1)) / &den_r));
                debug_assert!(p.eval(&r).is_zero());
                return Some(r);
            }
        }
    }
    None
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    (0..e).fold(Rat::from_integer(BigInt::from(1)), |acc, _| acc * r)
}

fn divisors(n: i128) -> Vec<i128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i128;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All a + bω with a² − ab + b² = m.
pub fn elements_of_norm(m: i128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    // 4m = (2a − b)² + 3b²
    let mut b = 0i128;
    while 3 * b * b <= 4 * m {
        for bb in if b == 0 { vec![0] } else { vec![b, -b] } {
            let rest = 4 * m - 3 * bb * bb;
            let s = BigInt::from(rest).sqrt().to_i128().unwrap_or(-1);
            if s >= 0 && s * s == rest {
                for ss in if s == 0 { vec![0] } else { vec![s, -s] } {
                    let two_a = ss + bb;
                    if two_a % 2 == 0 {
                        out.push((two_a / 2, bb));
                    }
                }
            }
        }
        b += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Roots of a binary form f(s, t) = Σ cᵢ sⁱ t^{n−i} as points of P¹,
/// returned as `(s, t)` pairs normalized with first nonzero entry 1.
pub fn binary_form_roots(coeffs_in_s: &[CycNum]) -> FieldRoots2 {
    let n = coeffs_in_s.len().saturating_sub(1);
    let p = UPoly::new(coeffs_in_s.to_vec());
    if p.is_zero() {
        return FieldRoots2 {
            identically_zero: true,
            ..Default::default()
        };
    }
    let mut points = Vec::new();
    // t = 0 is a root iff deg_s f < n
    let d = p.degree().unwrap();
    for _ in d..n {
        points.push((CycNum::one(), CycNum::zero()));
    }
    let affine = field_roots(&p);
    for r in &affine.roots {
        points.push((r.clone(), CycNum::one()));
    }
    let points = points
        .into_iter()
        .map(|(s, t)| {
            if s.is_zero() {
                (s, CycNum::one())
            } else {
                let tt = t.checked_div(&s).unwrap();
                (CycNum::one(), tt)
            }
        })
        .collect();
    FieldRoots2 {
        points,
        unresolved: affine.unresolved,
        identically_zero: false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FieldRoots2 {
    pub points: Vec<(CycNum, CycNum)>,
    pub unresolved: usize,
    pub identically_zero: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn c(a: i64, b: i64) -> CycNum {
        CycNum::from_ints(a, b)
    }

    fn from_roots(rs: &[CycNum]) -> UPoly {
        let mut p = vec![CycNum::one()];
        for r in rs {
            let mut next = vec![CycNum::zero(); p.len() + 1];
            for (i, a) in p.iter().enumerate() {
                next[i + 1] = &next[i + 1] + a;
                next[i] = &next[i] - &(a * r);
            }
            p = next;
        }
        UPoly::new(p)
    }

    #[test]
    fn norms() {
        assert_eq!(elements_of_norm(1).len(), 6);
        assert_eq!(elements_of_norm(3).len(), 6);
        assert_eq!(elements_of_norm(2).len(), 0);
        assert_eq!(elements_of_norm(7).len(), 12);
        for (a, b) in elements_of_norm(13) {
            assert_eq!(a * a - a * b + b * b, 13);
        }
    }

    #[test]
    fn cubic_with_eisenstein_roots() {
        let rs = vec![c(1, 0), c(0, 1), c(-1, -1)];
        let p = from_roots(&rs);
        let got = field_roots(&p);
        assert_eq!(got.unresolved, 0);
        let mut want = rs.clone();
        want.sort();
        assert_eq!(got.roots, want);
    }

    #[test]
    fn rational_and_repeated_roots() {
        let rs = vec![
            CycNum::from_rat(rat(1, 3)),
            CycNum::from_rat(rat(1, 3)),
            CycNum::new(rat(-2, 5), rat(3, 2)),
            c(0, 0),
        ];
        let p = from_roots(&rs);
        let got = field_roots(&p);
        assert_eq!(got.unresolved, 0);
        let mut want = rs.clone();
        want.sort();
        assert_eq!(got.roots, want);
    }

    #[test]
    fn irreducible_cubic_is_unresolved() {
        // t³ − 2
        let p = UPoly::new(vec![c(-2, 0), c(0, 0), c(0, 0), c(1, 0)]);
        let got = field_roots(&p);
        assert!(got.roots.is_empty());
        assert_eq!(got.unresolved, 3);
        // t² + 1 has roots ±i outside Q(ω)
        let got = field_roots(&UPoly::new(vec![c(1, 0), c(0, 0), c(1, 0)]));
        assert_eq!(got.unresolved, 2);
    }

    #[test]
    fn binary_form_at_infinity() {
        // f = s·t : roots (1:0) and (0:1)
        let got = binary_form_roots(&[c(0, 0), c(1, 0), c(0, 0)]);
        assert_eq!(got.points.len(), 2);
        assert!(got.points.contains(&(c(1, 0), c(0, 0))));
        assert!(got.points.contains(&(c(0, 0), c(1, 0))));
    }
}
