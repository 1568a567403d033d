//! Pencils of curves: the pencil Π of anticanonical curves on the torus
//! model and the two conic pencils Π0, Π1 of plane sections of the quadric.

use serde::Serialize;

use super::model::{equations, ModelId};
use super::named;
use super::point::SurfacePoint;
use crate::algebra::linalg::{self, Matrix, Vector};
use crate::algebra::upoly::binary_form_roots;
use crate::algebra::{rat, CycNum};
use crate::error::GeometryError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilSpec {
    pub label: String,
    pub model: ModelId,
    /// Plane Σ uᵢ·planes[i] for base parameters u (plane-section pencils).
    pub planes: Vec<Vector>,
    /// Linear conditions on the parameters u.
    pub base_constraints: Vec<Vector>,
    /// Reducible members given by curve labels (curve pencils).
    pub members: Vec<Vec<String>>,
    pub base_points: Vec<SurfacePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibleFiber {
    /// Base parameters, first nonzero entry 1.
    pub base: Vec<CycNum>,
    pub plane: Vector,
    pub singular_point: SurfacePoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibleFibers {
    pub fibers: Vec<ReducibleFiber>,
    pub unresolved: u64,
}

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| CycNum::int(x)).collect()
}

/// Π = |−K − 2P − P1 − P−1| on the torus model; its fibers Γ_i + Δ_i.
pub fn pi() -> PencilSpec {
    PencilSpec {
        label: "Π".into(),
        model: ModelId::XTorus,
        planes: Vec::new(),
        base_constraints: Vec::new(),
        members: ["x", "y", "z"]
            .iter()
            .map(|i| vec![format!("Γ_{i}"), format!("Δ_{i}")])
            .collect(),
        base_points: vec![named::p(), named::p_plus(), named::p_minus()],
    }
}

/// Π0 = (t0(x + y + z) + t1 w = 0), generated by C1 and C0.
pub fn pi0() -> PencilSpec {
    PencilSpec {
        label: "Π0".into(),
        model: ModelId::X2Quadric,
        planes: vec![ints(&[1, 1, 1, 0]), ints(&[0, 0, 0, 1])],
        base_constraints: Vec::new(),
        members: Vec::new(),
        base_points: vec![named::r1(), named::r2()],
    }
}

/// Π1 = (u0(x − y) + u1(y − z) + u2(z − x) = 0) with u0 + u1 + u2 = 0.
pub fn pi1() -> PencilSpec {
    PencilSpec {
        label: "Π1".into(),
        model: ModelId::X2Quadric,
        planes: vec![
            ints(&[1, -1, 0, 0]),
            ints(&[0, 1, -1, 0]),
            ints(&[-1, 0, 1, 0]),
        ],
        base_constraints: vec![ints(&[1, 1, 1])],
        members: Vec::new(),
        base_points: vec![named::x2_p1(), named::x2_p_minus()],
    }
}

/// Symmetric matrix of the quadric's defining form.
pub fn quadric_matrix() -> Matrix {
    let f = &equations(ModelId::X2Quadric)[0];
    let mut m = vec![vec![CycNum::zero(); 4]; 4];
    let half = CycNum::from_rat(rat(1, 2));
    for (e, c) in f.terms() {
        let idx: Vec<usize> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            m[i][i] = c.clone();
        } else {
            m[i][j] = c * &half;
            m[j][i] = c * &half;
        }
    }
    m
}

fn bilinear(m: &Matrix, a: &[CycNum], b: &[CycNum]) -> CycNum {
    linalg::dot(a, &linalg::mat_vec(m, b))
}

impl PencilSpec {
    fn plane_of(&self, u: &[CycNum]) -> Vector {
        self.planes
            .iter()
            .zip(u)
            .fold(vec![CycNum::zero(); 4], |acc, (p, c)| {
                linalg::add_vec(&acc, &linalg::scale_vec(p, c))
            })
    }

    /// Basis of the base line in parameter space.
    fn base_basis(&self) -> Result<Vec<Vector>, GeometryError> {
        let n = self.planes.len();
        let basis = linalg::kernel(&self.base_constraints, n);
        if basis.len() != 2 {
            return Err(GeometryError::DegeneratePencil(format!(
                "{}: base has dimension {} instead of a line",
                self.label,
                basis.len() as i64 - 1
            )));
        }
        let planes: Vec<Vector> = basis.iter().map(|u| self.plane_of(u)).collect();
        if linalg::rank(&planes) != 2 {
            return Err(GeometryError::DegeneratePencil(format!(
                "{}: planes are proportional",
                self.label
            )));
        }
        Ok(basis)
    }
}

/// Fibers of a conic pencil on the quadric whose plane is tangent to it.
///
/// A plane a·X = 0 is tangent to the quadric XᵀQX = 0 iff aᵀQ⁻¹a = 0, and
/// then it touches at Q⁻¹a, where the conic splits into two lines.
pub fn pencil_reducible_fibers(p: &PencilSpec) -> Result<ReducibleFibers, GeometryError> {
    if p.model != ModelId::X2Quadric || p.planes.is_empty() {
        return Err(GeometryError::Unsupported(p.model));
    }
    let basis = p.base_basis()?;
    let q = quadric_matrix();
    let dual = linalg::inverse(&q).expect("smooth quadric");
    let a1 = p.plane_of(&basis[0]);
    let a2 = p.plane_of(&basis[1]);
    // f(s, t) = (s a1 + t a2)ᵀ Q⁻¹ (s a1 + t a2), coefficients by power of s
    let coeffs = vec![
        bilinear(&dual, &a2, &a2),
        &bilinear(&dual, &a1, &a2) * &CycNum::int(2),
        bilinear(&dual, &a1, &a1),
    ];
    let roots = binary_form_roots(&coeffs);
    if roots.identically_zero {
        return Err(GeometryError::DegeneratePencil(format!(
            "{}: every member is tangent",
            p.label
        )));
    }
    let mut fibers = Vec::new();
    for (s, t) in roots.points {
        let u = linalg::add_vec(
            &linalg::scale_vec(&basis[0], &s),
            &linalg::scale_vec(&basis[1], &t),
        );
        let base = normalize_vec(&u);
        let plane = p.plane_of(&base);
        let point = SurfacePoint::new(ModelId::X2Quadric, linalg::mat_vec(&dual, &plane))?;
        debug_assert!(linalg::dot(&plane, &point.coords).is_zero());
        fibers.push(ReducibleFiber {
            base,
            plane,
            singular_point: point,
        });
    }
    fibers.sort_by(|a, b| a.base.cmp(&b.base));
    fibers.dedup();
    Ok(ReducibleFibers {
        fibers,
        unresolved: roots.unresolved as u64,
    })
}

fn normalize_vec(v: &[CycNum]) -> Vector {
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero");
    let inv = lead.inv().expect("nonzero");
    v.iter().map(|c| c * &inv).collect()
}

/// Parameters of the member through a point not in the base locus.
pub fn member_through(p: &PencilSpec, x: &SurfacePoint) -> Result<Vector, GeometryError> {
    let basis = p.base_basis()?;
    let v1 = linalg::dot(&p.plane_of(&basis[0]), &x.coords);
    let v2 = linalg::dot(&p.plane_of(&basis[1]), &x.coords);
    if v1.is_zero() && v2.is_zero() {
        return Err(GeometryError::DegeneratePencil(format!(
            "{}: point in base locus",
            p.label
        )));
    }
    // s v1 + t v2 = 0 with (s, t) = (v2, −v1)
    let u = linalg::add_vec(
        &linalg::scale_vec(&basis[0], &v2),
        &linalg::scale_vec(&basis[1], &(-&v1)),
    );
    Ok(normalize_vec(&u))
}
