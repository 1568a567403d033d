//! Catalogs of invariant curves and exact intersection of two curves.
//!
//! Lattice classes use the basis (h, e1, e2, e3) on the torus model,
//! (l1, l2) for the two rulings of the quadric, and (h) on the plane.
//! On the torus model e1 is the edge {y = 0, z = ∞}, e2 = {z = 0, x = ∞},
//! e3 = {x = 0, y = ∞}; each Γ_x, E_x is a fiber h − e1 of the projection
//! to x, and Δ_x = −K − Γ_x.

use serde::Serialize;

use super::fixed::subspace_section;
use super::model::{check_arity, ModelId};
use super::point::SurfacePoint;
use super::torus::{binomial_row, Slot, Stratum};
use crate::algebra::linalg::{self, Matrix, Vector};
use crate::algebra::poly::Poly;
use crate::algebra::snf::solve_binomial;
use crate::algebra::upoly::binary_form_roots;
use num_integer::Integer;

use crate::algebra::{CycNum, GroupElem, RootOfUnity};
use crate::error::GeometryError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    pub label: String,
    pub model: ModelId,
    pub equations: Vec<Poly>,
    pub class: Vec<i64>,
}

fn curve(label: &str, model: ModelId, equations: Vec<Poly>, class: &[i64]) -> CurveSpec {
    CurveSpec {
        label: label.into(),
        model,
        equations,
        class: class.to_vec(),
    }
}

/// Exponent vector on (x1, x0, y1, y0, z1, z0) from per-coordinate powers.
fn mono(pows: [(u32, u32); 3]) -> Vec<u32> {
    pows.iter().flat_map(|&(a, b)| [a, b]).collect()
}

fn binomial(plus: Vec<u32>, minus: Vec<u32>, sign: i64) -> Poly {
    let mut p = Poly::monomial(plus, CycNum::one());
    p.add_term(minus, CycNum::int(-sign));
    p
}

/// Γ, Δ, E triples and the six boundary lines of the torus model.
pub fn torus_curves() -> Vec<CurveSpec> {
    let mut out = Vec::new();
    let names = ["x", "y", "z"];
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut cls_fiber = vec![1, 0, 0, 0];
        cls_fiber[i + 1] = -1;
        let mut cls_delta = vec![2, -1, -1, -1];
        cls_delta[i + 1] = 0;

        // Γ_i: x_j x_k = 1. On X that equation also contains two boundary
        // lines, so the closure is cut out by adding x_i = 1.
        let mut plus = [(0, 0); 3];
        let mut minus = [(0, 0); 3];
        plus[j] = (1, 0);
        plus[k] = (1, 0);
        minus[j] = (0, 1);
        minus[k] = (0, 1);
        let printed = binomial(mono(plus), mono(minus), 1);
        let mut plus = [(0, 0); 3];
        let mut minus = [(0, 0); 3];
        plus[i] = (1, 0);
        minus[i] = (0, 1);
        let closure = binomial(mono(plus), mono(minus), 1);
        out.push(curve(
            &format!("Γ_{}", names[i]),
            ModelId::XTorus,
            vec![printed, closure],
            &cls_fiber,
        ));

        // Δ_i: x_i x_j² = 1, closed up by x_j = x_k
        let mut plus = [(0, 0); 3];
        let mut minus = [(0, 0); 3];
        plus[i] = (1, 0);
        plus[j] = (2, 0);
        minus[i] = (0, 1);
        minus[j] = (0, 2);
        let printed = binomial(mono(plus), mono(minus), 1);
        let mut plus = [(0, 0); 3];
        let mut minus = [(0, 0); 3];
        plus[j] = (1, 0);
        plus[k] = (0, 1);
        minus[j] = (0, 1);
        minus[k] = (1, 0);
        let closure = binomial(mono(plus), mono(minus), 1);
        out.push(curve(
            &format!("Δ_{}", names[i]),
            ModelId::XTorus,
            vec![printed, closure],
            &cls_delta,
        ));

        // E_i: x_i = −1
        let mut plus = [(0, 0); 3];
        let mut minus = [(0, 0); 3];
        plus[i] = (1, 0);
        minus[i] = (0, 1);
        out.push(curve(
            &format!("E_{}", names[i]),
            ModelId::XTorus,
            vec![binomial(mono(plus), mono(minus), -1)],
            &cls_fiber,
        ));
    }
    for (label, s, class) in boundary_lines() {
        let mut eqs = Vec::new();
        for (slot, k) in s.0.iter().zip(0..) {
            // Zero: x_k1 = 0; Inf: x_k0 = 0
            let var = match slot {
                Slot::Zero => 2 * k,
                Slot::Inf => 2 * k + 1,
                Slot::Free => continue,
            };
            eqs.push(Poly::var(6, var));
        }
        out.push(curve(label, ModelId::XTorus, eqs, &class));
    }
    out
}

/// The six (−1)-lines at infinity with their classes.
pub fn boundary_lines() -> Vec<(&'static str, Stratum, [i64; 4])> {
    use Slot::*;
    vec![
        ("e1", Stratum([Free, Zero, Inf]), [0, 1, 0, 0]),
        ("e2", Stratum([Inf, Free, Zero]), [0, 0, 1, 0]),
        ("e3", Stratum([Zero, Inf, Free]), [0, 0, 0, 1]),
        ("l23", Stratum([Free, Inf, Zero]), [1, 0, -1, -1]),
        ("l13", Stratum([Zero, Free, Inf]), [1, -1, 0, -1]),
        ("l12", Stratum([Inf, Zero, Free]), [1, -1, -1, 0]),
    ]
}

/// Conics C0 = (w = 0) and C1 = (x + y + z = 0) on the quadric.
pub fn quadric_curves() -> Vec<CurveSpec> {
    let one = CycNum::one;
    let zero = CycNum::zero;
    vec![
        curve(
            "C0",
            ModelId::X2Quadric,
            vec![Poly::linear(&[zero(), zero(), zero(), one()])],
            &[1, 1],
        ),
        curve(
            "C1",
            ModelId::X2Quadric,
            vec![Poly::linear(&[one(), one(), one(), zero()])],
            &[1, 1],
        ),
    ]
}

/// The invariant line L0 = (u0 = 0) of the plane.
pub fn plane_curves() -> Vec<CurveSpec> {
    vec![curve(
        "L0",
        ModelId::YP2,
        vec![Poly::linear(&[
            CycNum::one(),
            CycNum::zero(),
            CycNum::zero(),
        ])],
        &[1],
    )]
}

pub fn catalog(id: ModelId) -> Vec<CurveSpec> {
    match id {
        ModelId::XTorus => torus_curves(),
        ModelId::X2Quadric => quadric_curves(),
        ModelId::YP2 => plane_curves(),
        _ => Vec::new(),
    }
}

pub fn find_curve(id: ModelId, label: &str) -> Option<CurveSpec> {
    catalog(id).into_iter().find(|c| c.label == label)
}

pub fn curve_contains(c: &CurveSpec, p: &SurfacePoint) -> Result<bool, GeometryError> {
    if c.model != p.model {
        return Err(GeometryError::ArityMismatch {
            model: c.model,
            expected: c.model.arity(),
            got: p.coords.len(),
        });
    }
    check_arity(c.model, &p.coords)?;
    Ok(c.equations.iter().all(|f| f.eval(&p.coords).is_zero()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Intersection {
    pub points: Vec<SurfacePoint>,
    /// The curves share a component.
    pub common_component: bool,
    pub unresolved: u64,
}

/// Exact set-theoretic intersection of two curves on the same model.
pub fn intersect_curves(a: &CurveSpec, b: &CurveSpec) -> Result<Intersection, GeometryError> {
    if a.model != b.model {
        return Err(GeometryError::Unsupported(b.model));
    }
    let eqs: Vec<Poly> = a.equations.iter().chain(&b.equations).cloned().collect();
    let mut out = match a.model {
        ModelId::XTorus => torus_intersection(&eqs)?,
        id => linear_intersection(id, &eqs)?,
    };
    out.points.sort();
    out.points.dedup();
    Ok(out)
}

fn torus_intersection(eqs: &[Poly]) -> Result<Intersection, GeometryError> {
    let mut out = Intersection::default();
    // open torus: every catalog equation is a binomial or a monomial
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut misses_torus = false;
    for f in eqs {
        match binomial_row(f) {
            Some(Some((r, c))) => {
                rows.push(r);
                rhs.push(c);
            }
            Some(None) => misses_torus = true,
            None => return Err(GeometryError::Unsupported(ModelId::XTorus)),
        }
    }
    if !misses_torus {
        let sol = solve_binomial(&rows, &rhs, 2);
        if sol.free_dims > 0 {
            out.common_component = true;
        }
        out.unresolved += sol.unresolved;
        for p in sol.points {
            out.points.push(SurfacePoint::torus_root(
                p[0].exponent() as i64,
                p[1].exponent() as i64,
            ));
        }
    }
    // boundary: vertices directly, edges as binary forms in the free coordinate
    for s in Stratum::all() {
        if s.is_vertex() {
            let v = s.point(&CycNum::one());
            if eqs.iter().all(|f| f.eval(&v).is_zero()) {
                out.points.push(SurfacePoint::new(ModelId::XTorus, v)?);
            }
            continue;
        }
        let k = s.free_slot().unwrap();
        // substitute the free pair by (s, t) and the others by constants
        let base = s.point(&CycNum::one());
        let subs: Vec<Poly> = (0..6)
            .map(|i| {
                if i / 2 == k {
                    Poly::var(2, i % 2)
                } else {
                    Poly::constant(2, base[i].clone())
                }
            })
            .collect();
        let forms: Vec<Poly> = eqs.iter().map(|f| f.substitute(&subs)).collect();
        let Some(first) = forms.iter().find(|f| !f.is_zero()) else {
            out.common_component = true;
            continue;
        };
        let roots = binary_form_roots(&first.binary_coeffs());
        out.unresolved += roots.unresolved as u64;
        for (x1, x0) in roots.points {
            // open edge only; the endpoints are vertices
            if x1.is_zero() || x0.is_zero() {
                continue;
            }
            let u = x1.checked_div(&x0)?;
            let v = s.point(&u);
            if eqs.iter().all(|f| f.eval(&v).is_zero()) {
                out.points.push(SurfacePoint::new(ModelId::XTorus, v)?);
            }
        }
    }
    Ok(out)
}

/// Curves cut by hyperplanes: intersect the linear spans, then the model.
fn linear_intersection(id: ModelId, eqs: &[Poly]) -> Result<Intersection, GeometryError> {
    let n = id.arity();
    let mut rows: Matrix = Vec::new();
    for f in eqs {
        if f.total_degree() != Some(1) {
            return Err(GeometryError::Unsupported(id));
        }
        let mut row = vec![CycNum::zero(); n];
        for (e, c) in f.terms() {
            let i = e.iter().position(|&k| k == 1).unwrap();
            row[i] = c.clone();
        }
        rows.push(row);
    }
    let span: Vec<Vector> = linalg::kernel(&rows, n);
    let sec = subspace_section(id, &span)?;
    Ok(Intersection {
        points: sec.points,
        common_component: sec.positive_dimension.is_some(),
        unresolved: sec.unresolved,
    })
}

/// Canonical form of a curve meeting the open torus: the primitive
/// exponent row `r` (first nonzero entry positive) and constant `c` with
/// the curve equal to the closure of `t^r = c`.
fn torus_key(eqs: &[Poly]) -> Option<([i64; 2], RootOfUnity)> {
    let mut key: Option<([i64; 2], RootOfUnity)> = None;
    for f in eqs {
        let (row, c) = binomial_row(f)??;
        let g = row[0].gcd(&row[1]);
        if g == 0 {
            return None;
        }
        let m = if row[0] / g < 0 || (row[0] == 0 && row[1] / g < 0) {
            -g
        } else {
            g
        };
        let prim = [row[0] / m, row[1] / m];
        match &key {
            None if m.abs() == 1 => key = Some((prim, c.pow(m))),
            None => return None,
            Some((r, c0)) => {
                if *r != prim || c0.pow(m) != c {
                    return None;
                }
            }
        }
    }
    key
}

/// Whether two equation sets describe the same catalog curve.
fn same_curve(model: ModelId, a: &[Poly], b: &[Poly]) -> bool {
    if model == ModelId::XTorus {
        if let (Some(ka), Some(kb)) = (torus_key(a), torus_key(b)) {
            return ka == kb;
        }
    }
    a.len() == b.len() && a.iter().all(|e| b.iter().any(|p| p.proportional_to(e)))
}

/// Image of a catalog curve under `g`, as the catalog label it matches.
pub fn image_label(c: &CurveSpec, g: GroupElem) -> Option<String> {
    let ginv = g.inverse();
    let pulled: Vec<Poly> = c
        .equations
        .iter()
        .map(|f| super::model::pullback(c.model, ginv, f))
        .collect::<Option<_>>()?;
    catalog(c.model)
        .into_iter()
        .find_map(|d| same_curve(c.model, &pulled, &d.equations).then_some(d.label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::group_all;

    fn t(x: i64, y: i64, z: i64) -> SurfacePoint {
        SurfacePoint::torus(CycNum::int(x), CycNum::int(y), CycNum::int(z)).unwrap()
    }

    fn get(label: &str) -> CurveSpec {
        torus_curves()
            .into_iter()
            .find(|c| c.label == label)
            .unwrap()
    }

    #[test]
    fn incidences() {
        let p = t(1, 1, 1);
        assert!(curve_contains(&get("Γ_x"), &p).unwrap());
        assert!(curve_contains(&get("E_x"), &t(-1, 1, -1)).unwrap());
        assert!(curve_contains(&get("E_x"), &t(-1, -1, 1)).unwrap());
        assert!(!curve_contains(&get("E_x"), &t(1, -1, -1)).unwrap());
        for d in ["Δ_x", "Δ_y", "Δ_z"] {
            assert!(curve_contains(&get(d), &SurfacePoint::torus_root(2, 2)).unwrap());
        }
        let c0 = &quadric_curves()[0];
        let p1 = SurfacePoint::from_ints(ModelId::X2Quadric, &[1, 1, 1, 1]).unwrap();
        assert!(!curve_contains(c0, &p1).unwrap());
    }

    #[test]
    fn gamma_meets_delta_in_p_and_q() {
        let pairs = [
            ("Γ_x", "Δ_x", t(1, -1, -1)),
            ("Γ_y", "Δ_y", t(-1, 1, -1)),
            ("Γ_z", "Δ_z", t(-1, -1, 1)),
        ];
        for (g, d, q) in pairs {
            let i = intersect_curves(&get(g), &get(d)).unwrap();
            let mut want = vec![t(1, 1, 1), q];
            want.sort();
            assert_eq!(i.points, want, "{g} ∩ {d}");
            assert!(!i.common_component && i.unresolved == 0);
        }
    }

    #[test]
    fn e_curves_meet_only_at_q() {
        let i = intersect_curves(&get("E_x"), &get("E_y")).unwrap();
        assert_eq!(i.points, vec![t(-1, -1, 1)]);
    }

    #[test]
    fn conics_meet_in_r_points() {
        let c = quadric_curves();
        let i = intersect_curves(&c[0], &c[1]).unwrap();
        assert_eq!(i.points.len(), 2);
        for p in &i.points {
            assert!(p.coords[3].is_zero());
        }
    }

    #[test]
    fn boundary_lines_lie_at_infinity_and_form_one_orbit() {
        let lines = boundary_lines();
        let mut orbit: Vec<Stratum> = group_all().into_iter().map(|g| lines[0].1.act(g)).collect();
        orbit.sort();
        orbit.dedup();
        assert_eq!(orbit.len(), 6);
        for (_, s, _) in &lines {
            let v = s.point(&CycNum::int(5));
            assert!((v[1].clone() * v[3].clone() * v[5].clone()).is_zero());
        }
    }

    #[test]
    fn torus_triples_are_permuted() {
        for c in torus_curves() {
            for g in group_all() {
                let img = image_label(&c, g).unwrap_or_else(|| panic!("{} under {g:?}", c.label));
                let family = |l: &str| {
                    if l.starts_with('e') || l.starts_with('l') {
                        'b'
                    } else {
                        l.chars().next().unwrap()
                    }
                };
                assert_eq!(family(&img), family(&c.label), "{} under {g:?}", c.label);
            }
        }
    }

    #[test]
    fn conics_are_invariant() {
        for c in quadric_curves() {
            for g in group_all() {
                assert_eq!(image_label(&c, g).as_deref(), Some(c.label.as_str()));
            }
        }
        let l0 = &plane_curves()[0];
        for g in group_all() {
            assert_eq!(image_label(l0, g).as_deref(), Some("L0"));
        }
    }
}
