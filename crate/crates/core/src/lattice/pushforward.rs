//! Transport of a linear system through a contraction, computed purely in
//! the lattice of the common resolution.

use serde::Serialize;

use super::{DivClass, GPicardLattice};
use crate::algebra::group::group_all;
use crate::algebra::{rat_int, rat_serde, Rat};
use crate::error::LatticeError;

/// Contraction of a G-orbit of disjoint (−1)-classes from a resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub contracted: Vec<DivClass>,
    /// Pullbacks of the generators of the target's invariant lattice.
    pub target_basis: Vec<(String, DivClass)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemImage {
    /// Coefficients of the image system in the target basis.
    #[serde(serialize_with = "rat_serde::named")]
    pub coeffs: Vec<(String, Rat)>,
    /// Multiplicity of the image system at each point of the new centre.
    #[serde(serialize_with = "rat_serde::one")]
    pub multiplicity: Rat,
}

pub fn to_rat(d: &[i64]) -> Vec<Rat> {
    d.iter().map(|&x| rat_int(x)).collect()
}

/// Σ cᵢ·Dᵢ with rational coefficients.
pub fn combo(terms: &[(Rat, &[i64])]) -> Vec<Rat> {
    let n = terms.first().map_or(0, |(_, d)| d.len());
    let mut out = vec![rat_int(0); n];
    for (c, d) in terms {
        for (o, &x) in out.iter_mut().zip(d.iter()) {
            *o += c * rat_int(x);
        }
    }
    out
}

fn inconsistent(msg: impl Into<String>) -> LatticeError {
    LatticeError::InconsistentContraction(msg.into())
}

impl Contraction {
    /// The contracted classes are disjoint (−1)-classes permuted by G, and
    /// the target basis is orthogonal to them.
    pub fn validate(&self, l: &GPicardLattice) -> Result<(), LatticeError> {
        for f in self
            .contracted
            .iter()
            .chain(self.target_basis.iter().map(|(_, b)| b))
        {
            l.check_class(f)?;
        }
        for (i, f) in self.contracted.iter().enumerate() {
            if l.pair(f, f) != -1 || l.pair(f, &l.k) != -1 {
                return Err(inconsistent(format!("{f:?} is not a (−1)-class")));
            }
            for g in &self.contracted[i + 1..] {
                if l.pair(f, g) != 0 {
                    return Err(inconsistent(format!("{f:?} meets {g:?}")));
                }
            }
            for g in group_all() {
                if !self.contracted.contains(&l.act(g, f)) {
                    return Err(inconsistent(format!(
                        "contracted set is not stable under {g}"
                    )));
                }
            }
            for (name, b) in &self.target_basis {
                if l.pair(f, b) != 0 {
                    return Err(inconsistent(format!(
                        "{name} is not a pullback: meets {f:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Image of the system `system` (a rational class on the resolution).
///
/// Its pullback from the target is H + m·ΣF where m = H·F is the common
/// multiplicity; that class is then written in the target basis.
pub fn pushforward_system(
    l: &GPicardLattice,
    contraction: &Contraction,
    system: &[Rat],
) -> Result<SystemImage, LatticeError> {
    contraction.validate(l)?;
    if system.len() != l.rank() {
        return Err(LatticeError::RankMismatch {
            rank: l.rank(),
            got: system.len(),
        });
    }
    let mults: Vec<Rat> = contraction
        .contracted
        .iter()
        .map(|f| l.pair_rat(system, &to_rat(f)))
        .collect();
    let m = mults.first().cloned().unwrap_or_else(|| rat_int(0));
    if mults.iter().any(|x| *x != m) {
        return Err(inconsistent("system meets the contracted curves unequally"));
    }
    let mut total = system.to_vec();
    for f in &contraction.contracted {
        for (t, &x) in total.iter_mut().zip(f) {
            *t += m.clone() * rat_int(x);
        }
    }
    let basis: Vec<Vec<Rat>> = contraction
        .target_basis
        .iter()
        .map(|(_, b)| to_rat(b))
        .collect();
    let coeffs = solve_in_span(l, &basis, &total).ok_or(LatticeError::NotInSpan)?;
    Ok(SystemImage {
        coeffs: contraction
            .target_basis
            .iter()
            .map(|(n, _)| n.clone())
            .zip(coeffs)
            .collect(),
        multiplicity: m,
    })
}

/// Coefficients c with Σ cⱼ Bⱼ = t, if they exist.
fn solve_in_span(l: &GPicardLattice, basis: &[Vec<Rat>], t: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    // normal equations with the intersection form, then exact verification
    let mut a: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rat> = (0..k).map(|j| l.pair_rat(&basis[i], &basis[j])).collect();
            row.push(l.pair_rat(&basis[i], t));
            row
        })
        .collect();
    let zero = rat_int(0);
    for c in 0..k {
        let p = (c..k).find(|&i| a[i][c] != zero)?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= piv.clone();
        }
        for i in 0..k {
            if i != c && a[i][c] != zero {
                let f = a[i][c].clone();
                for j in c..=k {
                    let v = f.clone() * a[c][j].clone();
                    a[i][j] -= v;
                }
            }
        }
    }
    let coeffs: Vec<Rat> = a.iter().map(|r| r[k].clone()).collect();
    let mut check = vec![zero; t.len()];
    for (c, b) in coeffs.iter().zip(basis) {
        for (x, y) in check.iter_mut().zip(b) {
            *x += c * y;
        }
    }
    (check == t).then_some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::lattice::dp6_lattice;

    #[test]
    fn identity_contraction_keeps_the_system() {
        let l = dp6_lattice();
        let c = Contraction {
            contracted: vec![],
            target_basis: vec![("−K".into(), l.minus_k())],
        };
        let h = combo(&[(rat(5, 2), &l.minus_k())]);
        let img = pushforward_system(&l, &c, &h).unwrap();
        assert_eq!(img.coeffs[0].1, rat(5, 2));
        assert_eq!(img.multiplicity, rat_int(0));
    }

    #[test]
    fn rejects_non_invariant_contractions() {
        let l = dp6_lattice();
        let c = Contraction {
            contracted: vec![vec![0, 1, 0, 0]],
            target_basis: vec![],
        };
        assert!(matches!(
            c.validate(&l),
            Err(LatticeError::InconsistentContraction(_))
        ));
        let c = Contraction {
            contracted: vec![vec![1, 0, 0, 0]],
            target_basis: vec![],
        };
        assert!(c.validate(&l).is_err());
    }
}
