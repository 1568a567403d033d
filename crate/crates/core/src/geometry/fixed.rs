//! Fixed loci of subgroups: joint eigenspaces for linear actions, binomial
//! systems on the torus chart, and a strata walk over the hexagon at
//! infinity.

use serde::Serialize;

use super::model::{action_matrix, equations, ModelId};
use super::point::SurfacePoint;
use super::torus::{fixed_rows, Stratum};
use crate::algebra::linalg::{self, Matrix, Vector};
use crate::algebra::poly::Poly;
use crate::algebra::snf::solve_binomial;
use crate::algebra::upoly::binary_form_roots;
use crate::algebra::{CycNum, GroupElem, RootOfUnity, Subgroup};
use crate::error::GeometryError;

/// A positive-dimensional piece of a fixed locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedComponent {
    pub dimension: usize,
    pub description: String,
    /// Group elements outside the subgroup that fix the component pointwise.
    pub extra_stabilizer: Vec<GroupElem>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FixedLocus {
    pub points: Vec<SurfacePoint>,
    pub components: Vec<FixedComponent>,
    /// Candidate solutions that exist over C but were not located in Q(ω).
    pub unresolved: u64,
    /// Boundary strata examined on the torus model, with what they contributed.
    pub boundary: Vec<String>,
}

/// Points of the model in the projective span of `basis`.
#[derive(Clone, Debug, Default)]
pub struct SubspaceSection {
    pub points: Vec<SurfacePoint>,
    /// Dimension of the positive-dimensional part, if any.
    pub positive_dimension: Option<usize>,
    pub unresolved: u64,
}

/// Restrict a polynomial to the span: `s ↦ f(Σ sᵢ vᵢ)`.
pub fn restrict(f: &Poly, basis: &[Vector]) -> Poly {
    let n = f.nvars();
    let m: Matrix = (0..n)
        .map(|i| basis.iter().map(|v| v[i].clone()).collect())
        .collect();
    f.linear_substitute(&m)
}

fn combine(basis: &[Vector], coeffs: &[CycNum]) -> Vector {
    let n = basis[0].len();
    basis
        .iter()
        .zip(coeffs)
        .fold(vec![CycNum::zero(); n], |acc, (v, c)| {
            linalg::add_vec(&acc, &linalg::scale_vec(v, c))
        })
}

/// Intersect a projective subspace with a projective (single-factor) model.
pub fn subspace_section(id: ModelId, basis: &[Vector]) -> Result<SubspaceSection, GeometryError> {
    let eqs = equations(id);
    let mut out = SubspaceSection::default();
    match basis.len() {
        0 => {}
        1 => {
            if eqs.iter().all(|f| f.eval(&basis[0]).is_zero()) {
                out.points.push(SurfacePoint::new(id, basis[0].clone())?);
            }
        }
        2 => {
            let restricted: Vec<Poly> = eqs.iter().map(|f| restrict(f, basis)).collect();
            match restricted.iter().find(|f| !f.is_zero()) {
                None => out.positive_dimension = Some(1),
                Some(f) => {
                    let roots = binary_form_roots(&f.binary_coeffs());
                    out.unresolved += roots.unresolved as u64;
                    for (s, t) in roots.points {
                        let v = combine(basis, &[s, t]);
                        if eqs.iter().all(|g| g.eval(&v).is_zero()) {
                            out.points.push(SurfacePoint::new(id, v)?);
                        }
                    }
                }
            }
        }
        // a plane or more meets a surface in P³ (or is a subspace of P²) in
        // a positive-dimensional set
        k => {
            let inside = eqs.iter().all(|f| restrict(f, basis).is_zero());
            out.positive_dimension = Some(if inside { k - 1 } else { k - 2 });
        }
    }
    out.points.sort();
    out.points.dedup();
    Ok(out)
}

fn eigenspace(m: &Matrix, lambda: &CycNum) -> Vec<Vector> {
    let n = m.len();
    let shifted: Matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        &m[i][j] - lambda
                    } else {
                        m[i][j].clone()
                    }
                })
                .collect()
        })
        .collect();
    linalg::kernel(&shifted, n)
}

/// Nonzero joint eigenspaces of the generators' matrices.
fn joint_eigenspaces(id: ModelId, gens: &[GroupElem]) -> Vec<Vec<Vector>> {
    let n = id.arity();
    let mut spaces: Vec<Vec<Vector>> = vec![linalg::identity(n)];
    for g in gens {
        let m = action_matrix(id, *g).expect("linear realization");
        let mut next = Vec::new();
        for s in &spaces {
            for r in RootOfUnity::all() {
                let e = eigenspace(&m, &r.to_cyc());
                let i = linalg::intersect(s, &e, n);
                if !i.is_empty() {
                    next.push(i);
                }
            }
        }
        spaces = next;
    }
    spaces
}

/// Whether `g` acts on the span of `basis` as a scalar.
fn scalar_on(id: ModelId, g: GroupElem, basis: &[Vector]) -> bool {
    let m = action_matrix(id, g).expect("linear realization");
    let v0 = &basis[0];
    let j = v0
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero basis vector");
    let lambda = linalg::mat_vec(&m, v0)[j]
        .checked_div(&v0[j])
        .expect("nonzero");
    basis
        .iter()
        .all(|v| linalg::mat_vec(&m, v) == linalg::scale_vec(v, &lambda))
}

fn fixed_locus_linear(id: ModelId, h: &Subgroup) -> Result<FixedLocus, GeometryError> {
    let gens = h.generators();
    let mut out = FixedLocus::default();
    for space in joint_eigenspaces(id, &gens) {
        let sec = subspace_section(id, &space)?;
        out.unresolved += sec.unresolved;
        out.points.extend(sec.points);
        if let Some(dimension) = sec.positive_dimension {
            let extra = crate::algebra::group::group_all()
                .into_iter()
                .filter(|g| !h.contains(*g) && scalar_on(id, *g, &space))
                .collect();
            out.components.push(FixedComponent {
                dimension,
                description: format!("span of {} vectors: {:?}", space.len(), space),
                extra_stabilizer: extra,
            });
        }
    }
    out.points.sort();
    out.points.dedup();
    Ok(out)
}

fn fixed_locus_torus(h: &Subgroup) -> Result<FixedLocus, GeometryError> {
    let gens = h.generators();
    let mut out = FixedLocus::default();
    // open torus
    let rows: Vec<Vec<i64>> = gens.iter().flat_map(|g| fixed_rows(*g)).collect();
    let ones = vec![RootOfUnity::new(0); rows.len()];
    let sol = solve_binomial(&rows, &ones, 2);
    if sol.free_dims > 0 || gens.is_empty() {
        out.components.push(FixedComponent {
            dimension: if gens.is_empty() { 2 } else { sol.free_dims },
            description: "subtorus of the open torus".into(),
            extra_stabilizer: Vec::new(),
        });
    }
    out.unresolved += sol.unresolved;
    for p in sol.points {
        let (a, b) = (p[0].exponent() as i64, p[1].exponent() as i64);
        out.points.push(SurfacePoint::torus_root(a, b));
    }
    // hexagon at infinity
    for s in Stratum::all() {
        let stable = h.elements().iter().all(|g| s.act(*g) == s);
        if !stable {
            out.boundary.push(format!("{}: not stable", s.label()));
            continue;
        }
        if s.is_vertex() {
            out.points
                .push(SurfacePoint::new(ModelId::XTorus, s.point(&CycNum::one()))?);
            out.boundary.push(format!("{}: fixed vertex", s.label()));
            continue;
        }
        let rows: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| vec![s.edge_exponent(*g).unwrap() - 1])
            .collect();
        if rows.is_empty() {
            out.components.push(FixedComponent {
                dimension: 1,
                description: format!("edge {}", s.label()),
                extra_stabilizer: Vec::new(),
            });
            continue;
        }
        let sol = solve_binomial(&rows, &vec![RootOfUnity::new(0); rows.len()], 1);
        out.unresolved += sol.unresolved;
        if sol.free_dims > 0 {
            out.components.push(FixedComponent {
                dimension: 1,
                description: format!("edge {}", s.label()),
                extra_stabilizer: Vec::new(),
            });
        }
        for p in &sol.points {
            out.points
                .push(SurfacePoint::new(ModelId::XTorus, s.point(&p[0].to_cyc()))?);
        }
        out.boundary.push(format!(
            "{}: {} fixed points on the open edge",
            s.label(),
            sol.points.len()
        ));
    }
    out.points.sort();
    out.points.dedup();
    Ok(out)
}

/// Points of the model fixed by every element of `h`, positive-dimensional
/// fixed components, and a count of candidates not located in Q(ω).
pub fn fixed_locus(id: ModelId, h: &Subgroup) -> Result<FixedLocus, GeometryError> {
    match id {
        ModelId::XTorus => fixed_locus_torus(h),
        ModelId::X0Cubic => Err(GeometryError::Unsupported(id)),
        _ => fixed_locus_linear(id, h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Perm3;

    fn c3() -> Subgroup {
        Subgroup::generated_by(&[GroupElem::SIGMA_XYZ])
    }

    #[test]
    fn three_cycle_on_torus() {
        let f = fixed_locus(ModelId::XTorus, &c3()).unwrap();
        assert!(f.components.is_empty());
        assert_eq!(f.unresolved, 0);
        let want: Vec<SurfacePoint> = {
            let mut v = vec![
                SurfacePoint::torus_root(0, 0),
                SurfacePoint::torus_root(2, 2),
                SurfacePoint::torus_root(4, 4),
            ];
            v.sort();
            v
        };
        assert_eq!(f.points, want);
    }

    #[test]
    fn three_cycle_on_quadric() {
        let f = fixed_locus(ModelId::X2Quadric, &c3()).unwrap();
        let l = CycNum::omega();
        let l2 = CycNum::omega2();
        let mut want = vec![
            SurfacePoint::from_ints(ModelId::X2Quadric, &[1, 1, 1, 1]).unwrap(),
            SurfacePoint::from_ints(ModelId::X2Quadric, &[-1, -1, -1, 1]).unwrap(),
            SurfacePoint::new(
                ModelId::X2Quadric,
                vec![CycNum::one(), l.clone(), l2.clone(), CycNum::zero()],
            )
            .unwrap(),
            SurfacePoint::new(
                ModelId::X2Quadric,
                vec![CycNum::one(), l2, l, CycNum::zero()],
            )
            .unwrap(),
        ];
        want.sort();
        assert_eq!(f.points, want);
        assert!(f.components.is_empty());
    }

    #[test]
    fn whole_group_has_no_fixed_point_on_quadric() {
        let f = fixed_locus(ModelId::X2Quadric, &Subgroup::whole()).unwrap();
        assert!(f.points.is_empty() && f.components.is_empty() && f.unresolved == 0);
    }

    #[test]
    fn reflection_fixes_curves() {
        let h = Subgroup::generated_by(&[GroupElem::new(Perm3::XY, false)]);
        let f = fixed_locus(ModelId::XTorus, &h).unwrap();
        assert!(!f.components.is_empty());
        let g = fixed_locus(ModelId::YP2, &h).unwrap();
        assert!(!g.components.is_empty());
    }

    #[test]
    fn boundary_points_of_an_edge_stabilizer() {
        // σ_xy·τ stabilizes the edge x = 0, y = ∞ and acts there by z ↦ 1/z
        let h = Subgroup::generated_by(&[GroupElem::new(Perm3::XY, true)]);
        let f = fixed_locus(ModelId::XTorus, &h).unwrap();
        let on_edge = f
            .points
            .iter()
            .filter(|p| p.coords[0].is_zero() && p.coords[3].is_zero())
            .count();
        assert_eq!(on_edge, 2);
    }
}
