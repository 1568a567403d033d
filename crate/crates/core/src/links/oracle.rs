//! Each link as a blow-up followed by a contraction in a Picard lattice,
//! and the transform of (a, b, r) that the lattice forces.

use serde::Serialize;

use super::form::{LinearForm, Transform};
use super::LinkKind;
use crate::algebra::group::subgroups_of_order;
use crate::algebra::{rat_int, Rat};
use crate::error::{LatticeError, LinkError};
use crate::geometry::{named, orbit_of, SurfacePoint};
use crate::lattice::{
    add, blow_up_gset, blow_up_orbit, cb_fiber, cb_lattice, combo, coset_gset, dp6_lattice,
    pushforward_system, quadric_lattice, scale, sub, BlowupResult, Contraction, DivClass,
    GPicardLattice,
};

/// Resolution of a link: the system is a·sources[0] + b·sources[1] − r·Σ centre.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSetup {
    pub lattice: GPicardLattice,
    pub sources: Vec<DivClass>,
    pub centre: Vec<DivClass>,
    pub contraction: Contraction,
}

fn sum(v: &[DivClass], n: usize) -> DivClass {
    v.iter().fold(vec![0; n], |acc, x| add(&acc, x))
}

fn blow_up_at(l: &GPicardLattice, p: &SurfacePoint) -> Result<BlowupResult, LatticeError> {
    blow_up_orbit(l, &orbit_of(p)?)
}

fn abstract_blow_up(l: &GPicardLattice, d: usize) -> Result<BlowupResult, LatticeError> {
    let h = subgroups_of_order(12 / d)
        .map_err(|e| LatticeError::InconsistentContraction(e.to_string()))?
        .into_iter()
        .next()
        .ok_or_else(|| LatticeError::InconsistentContraction(format!("no orbit of length {d}")))?;
    let labels = (0..d).map(|i| format!("G{i}")).collect();
    Ok(blow_up_gset(l, &coset_gset(&h), labels))
}

/// −K of the resolution plus the contracted classes: the pullback of −K
/// from the target.
fn anticanonical_target(l: &GPicardLattice, contracted: &[DivClass]) -> DivClass {
    add(&l.minus_k(), &sum(contracted, l.rank()))
}

fn del_pezzo_setup(b: BlowupResult, source: DivClass, contracted: Vec<DivClass>) -> OracleSetup {
    let target = anticanonical_target(&b.lattice, &contracted);
    OracleSetup {
        sources: vec![b.pullback(&source)],
        centre: b.exceptionals.clone(),
        contraction: Contraction {
            contracted,
            target_basis: vec![("−K".into(), target)],
        },
        lattice: b.lattice,
    }
}

pub fn oracle_setup(kind: LinkKind, d: usize) -> Result<Option<OracleSetup>, LatticeError> {
    use LinkKind::*;
    let x = dp6_lattice();
    let q = quadric_lattice();
    Ok(Some(match kind {
        Phi63 => return Ok(None),
        Phi61 => {
            // contract the strict transforms of Γ_x, Γ_y, Γ_z
            let b = blow_up_at(&x, &named::p())?;
            let e = &b.exceptionals[0];
            let gammas = (1..4).map(|i| {
                let mut c = vec![1, 0, 0, 0];
                c[i] = -1;
                sub(&b.pullback(&c), e)
            });
            let gammas = gammas.collect();
            del_pezzo_setup(b, x.minus_k(), gammas)
        }
        Phi62 => {
            // the residual pair 2h − e1 − e2 − e3 − E1 − E2 and h − E1 − E2
            let b = blow_up_at(&x, &named::p_plus())?;
            let es = sum(&b.exceptionals, b.lattice.rank());
            let f1 = sub(&b.pullback(&[2, -1, -1, -1]), &es);
            let f2 = sub(&b.pullback(&[1, 0, 0, 0]), &es);
            del_pezzo_setup(b, x.minus_k(), vec![f1, f2])
        }
        Phi82Pi0 | Phi82Pi1 => {
            let p = if kind == Phi82Pi0 {
                named::r1()
            } else {
                named::x2_p1()
            };
            let b = blow_up_at(&q, &p)?;
            let f = cb_fiber(&b.lattice);
            OracleSetup {
                sources: vec![b.pullback(&q.minus_k())],
                centre: b.exceptionals.clone(),
                contraction: Contraction {
                    contracted: vec![],
                    target_basis: vec![("−K".into(), b.lattice.minus_k()), ("f".into(), f)],
                },
                lattice: b.lattice,
            }
        }
        Elem => {
            // blow up d points in distinct fibers, contract the fibers' strict transforms
            let cb = cb_lattice(1)?;
            let b = abstract_blow_up(&cb, d)?;
            let f = b.pullback(&cb_fiber(&cb));
            let contracted: Vec<DivClass> = b.exceptionals.iter().map(|g| sub(&f, g)).collect();
            let target = anticanonical_target(&b.lattice, &contracted);
            OracleSetup {
                sources: vec![b.pullback(&cb.minus_k()), f.clone()],
                centre: b.exceptionals.clone(),
                contraction: Contraction {
                    contracted,
                    target_basis: vec![("−K".into(), target), ("f".into(), f)],
                },
                lattice: b.lattice,
            }
        }
        Phi82Inv => {
            // contract the pair of sections over {P1, P−1}
            let cb = cb_lattice(1)?;
            let contracted = vec![cb.basis_vector(2), cb.basis_vector(3)];
            OracleSetup {
                sources: vec![cb.minus_k(), cb_fiber(&cb)],
                centre: vec![],
                contraction: Contraction {
                    contracted,
                    target_basis: vec![("−K".into(), vec![2, 2, 0, 0])],
                },
                lattice: cb,
            }
        }
        Phi83A | Phi83B => {
            // contract the strict transform of C0 through the three points
            let p = if kind == Phi83A {
                named::orbit_a()
            } else {
                named::orbit_b()
            };
            let b = blow_up_at(&q, &p[0])?;
            let c0 = sub(
                &b.pullback(&[1, 1]),
                &sum(&b.exceptionals, b.lattice.rank()),
            );
            del_pezzo_setup(b, q.minus_k(), vec![c0])
        }
        Phi86 => {
            // the Geiser involution sends Eᵢ to −K − Eᵢ on the degree two surface
            let b = abstract_blow_up(&q, 6)?;
            let contracted = b
                .exceptionals
                .iter()
                .map(|e| sub(&b.lattice.minus_k(), e))
                .collect();
            del_pezzo_setup(b, q.minus_k(), contracted)
        }
    }))
}

fn image(s: &OracleSetup, system: &[Rat]) -> Result<(Vec<Rat>, Rat), LatticeError> {
    let img = pushforward_system(&s.lattice, &s.contraction, system)?;
    Ok((
        img.coeffs.into_iter().map(|(_, c)| c).collect(),
        img.multiplicity,
    ))
}

/// The transform of (a, b, r) computed by pushing forward the three unit
/// systems; the map is linear, so this determines it for all inputs.
pub fn oracle_transform(kind: LinkKind, d: usize) -> Result<Option<Transform>, LinkError> {
    let Some(s) = oracle_setup(kind, d)? else {
        return Ok(None);
    };
    let n = s.lattice.rank();
    let zero = vec![0; n];
    let units = [
        s.sources[0].clone(),
        s.sources.get(1).cloned().unwrap_or_else(|| zero.clone()),
        scale(&sum(&s.centre, n), -1),
    ];
    let mut cols = Vec::new();
    for u in &units {
        cols.push(image(&s, &combo(&[(rat_int(1), u)]))?);
    }
    type Column = (Vec<Rat>, Rat);
    let pick = |f: &dyn Fn(&Column) -> Rat| LinearForm::new(f(&cols[0]), f(&cols[1]), f(&cols[2]));
    let has_b = s.contraction.target_basis.len() > 1;
    let has_r = !s.contraction.contracted.is_empty();
    Ok(Some(Transform {
        a: pick(&|c| c.0[0].clone()),
        b: has_b.then(|| pick(&|c| c.0[1].clone())),
        r: has_r.then(|| pick(&|c| c.1.clone())),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::links::FormulaTable;

    fn oracle(kind: LinkKind, d: usize) -> Transform {
        oracle_transform(kind, d).unwrap().unwrap()
    }

    #[test]
    fn setups_are_consistent() {
        for kind in LinkKind::all() {
            for &d in kind.center_lengths() {
                if let Some(s) = oracle_setup(kind, d).unwrap() {
                    s.contraction.validate(&s.lattice).unwrap();
                    assert!(s.lattice.check_action(), "{kind}");
                }
            }
        }
    }

    #[test]
    fn printed_formulas_match_where_expected() {
        let t = FormulaTable::printed();
        for kind in [
            LinkKind::Phi61,
            LinkKind::Phi62,
            LinkKind::Phi82Pi0,
            LinkKind::Phi82Pi1,
            LinkKind::Phi86,
        ] {
            let d = kind.center_lengths()[0];
            assert_eq!(oracle(kind, d), t.get(kind, d).unwrap().transform, "{kind}");
        }
        for kind in [LinkKind::Phi83A, LinkKind::Phi83B] {
            assert_eq!(oracle(kind, 3), t.get(kind, 3).unwrap().transform, "{kind}");
        }
    }

    #[test]
    fn documented_discrepancies() {
        let elem = oracle(LinkKind::Elem, 3);
        assert_eq!(elem.a, LinearForm::a());
        assert_eq!(elem.b, Some(LinearForm::ints(3, 1, -3)));
        assert_eq!(elem.r, Some(LinearForm::ints(2, 0, -1)));
        assert_eq!(
            oracle(LinkKind::Elem, 6).b,
            Some(LinearForm::ints(6, 1, -6))
        );
        let inv = oracle(LinkKind::Phi82Inv, 0);
        assert_eq!(inv.a, LinearForm::new(rat_int(1), rat(1, 2), rat_int(0)));
        assert_eq!(inv.r, Some(LinearForm::ints(1, 1, 0)));
    }
}
