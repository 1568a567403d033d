//! Sparse multivariate polynomials over Q(ω).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CycNum;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, CycNum>,
}

/// Serialized form: `{"nvars": n, "terms": [[exponents, [re, wc]], ...]}`.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    terms: Vec<(Exponent, CycNum)>,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        let mut p = Poly::zero(r.nvars);
        for (e, c) in r.terms {
            if e.len() != r.nvars {
                return Err(serde::de::Error::custom("exponent length mismatch"));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: CycNum) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(e, CycNum::one())
    }

    pub fn monomial(exp: Exponent, c: CycNum) -> Self {
        let mut p = Poly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// Linear form Σ cᵢ xᵢ.
    pub fn linear(coeffs: &[CycNum]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Build from `(coefficient, exponents)` pairs with integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Poly::zero(nvars);
        for (c, e) in terms {
            p.add_term(e.to_vec(), CycNum::int(*c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &CycNum)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Exponent, c: CycNum) {
        assert_eq!(exp.len(), self.nvars, "exponent arity");
        if c.is_zero() {
            return;
        }
        let new = match self.terms.get(&exp) {
            Some(v) => v + &c,
            None => c,
        };
        if new.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, new);
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn eval(&self, point: &[CycNum]) -> CycNum {
        assert_eq!(point.len(), self.nvars, "evaluation arity");
        let mut acc = CycNum::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e) {
                if *k > 0 {
                    t = &t * &x.pow(*k);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn scale(&self, s: &CycNum) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&CycNum::int(-1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut p = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.nvars, CycNum::one()), |acc, _| {
            acc.mul(self)
        })
    }

    /// Replace variable i by `subs[i]` (all in a common ring).
    pub fn substitute(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars);
        let target = subs.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (s, k) in subs.iter().zip(e) {
                if *k > 0 {
                    t = t.mul(&s.pow(*k));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Apply a linear change of coordinates: xᵢ ↦ Σⱼ m[i][j] yⱼ.
    pub fn linear_substitute(&self, m: &[Vec<CycNum>]) -> Poly {
        let subs: Vec<Poly> = m.iter().map(|row| Poly::linear(row)).collect();
        self.substitute(&subs)
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            p.add_term(ne, c.scale(&super::rat_int(e[i] as i64)));
        }
        p
    }

    /// Coefficients of a bivariate form in (s, t), indexed by the power of s.
    pub fn binary_coeffs(&self) -> Vec<CycNum> {
        assert_eq!(self.nvars, 2);
        let d = self.total_degree().unwrap_or(0) as usize;
        let mut out = vec![CycNum::zero(); d + 1];
        for (e, c) in &self.terms {
            debug_assert_eq!((e[0] + e[1]) as usize, d, "binary form must be homogeneous");
            out[e[0] as usize] = &out[e[0] as usize] + c;
        }
        out
    }

    /// True if `self = λ·other` for some nonzero scalar λ.
    pub fn proportional_to(&self, other: &Poly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let Some(d) = other.terms.get(e) else {
            return false;
        };
        let lambda = c.checked_div(d).unwrap();
        &other.scale(&lambda) == self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| {
                        if *k == 1 {
                            format!("v{i}")
                        } else {
                            format!("v{i}^{k}")
                        }
                    })
                    .collect();
                format!(
                    "({c}){}",
                    if mono.is_empty() {
                        String::new()
                    } else {
                        format!("·{}", mono.join("·"))
                    }
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).pow(2);
        assert_eq!(p.num_terms(), 3);
        let v = p.eval(&[CycNum::int(2), CycNum::int(3)]);
        assert_eq!(v, CycNum::int(25));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn derivative_and_substitution() {
        // f = x²y, ∂f/∂x = 2xy
        let f = Poly::from_int_terms(2, &[(1, &[2, 1])]);
        assert_eq!(f.derivative(0), Poly::from_int_terms(2, &[(2, &[1, 1])]));
        // x ↦ s + t, y ↦ t
        let s = Poly::var(2, 0);
        let t = Poly::var(2, 1);
        let g = f.substitute(&[s.add(&t), t.clone()]);
        assert_eq!(
            g.binary_coeffs(),
            vec![
                CycNum::int(1),
                CycNum::int(2),
                CycNum::int(1),
                CycNum::int(0)
            ]
        );
    }

    #[test]
    fn serde_roundtrip() {
        let f = Poly::from_int_terms(3, &[(1, &[1, 1, 0]), (-3, &[0, 0, 2])]);
        let js = serde_json::to_string(&f).unwrap();
        let back: Poly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
        assert!(f.proportional_to(&f.scale(&CycNum::omega())));
    }
}
