//! The S3 restriction: the points P, P1, P−1 are S3-fixed, and the
//! stereographic projection of the quadric from P1 is S3-equivariant. The
//! same check under τ must fail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::group::{GroupElem, Perm3};
use crate::algebra::{linalg, rat, CycNum};
use crate::error::GeometryError;
use crate::geometry::maps::{p2, plane_act, stereo, stereo_inverse};
use crate::geometry::pencils::quadric_matrix;
use crate::geometry::{named, ModelId, SurfacePoint};

pub const MIN_SAMPLES: usize = 100;
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedCheck {
    pub model: ModelId,
    pub point: String,
    pub s3_fixed: bool,
    /// Fixed by τ as well; expected false for P1 and P−1 on the quadric.
    pub tau_fixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: String,
    pub passed: usize,
    pub total: usize,
}

impl Tally {
    fn all_pass(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContrastReport {
    pub seed: u64,
    pub samples: usize,
    /// Points that landed on the exceptional locus of p2 or φ and were resampled.
    pub skipped: usize,
    pub fixed_points: Vec<FixedCheck>,
    pub anchors: Vec<Tally>,
    pub equivariance: Vec<Tally>,
    pub round_trip: Tally,
    /// τ-equivariance of φ on the same samples; the control passes when this fails.
    pub tau_control: Tally,
    pub control_failed: bool,
    /// "reachable" when every S3 check passes and the τ control fails.
    pub status: String,
}

fn s3_generators() -> [(&'static str, GroupElem); 2] {
    [
        ("σ_xy", GroupElem::SIGMA_XY),
        ("σ_xyz", GroupElem::SIGMA_XYZ),
    ]
}

fn s3() -> Vec<GroupElem> {
    Perm3::all()
        .into_iter()
        .map(|p| GroupElem::new(p, false))
        .collect()
}

fn fixed(label: &str, p: &SurfacePoint) -> Result<FixedCheck, GeometryError> {
    let mut s3_fixed = true;
    for g in s3() {
        s3_fixed &= p.act(g)? == *p;
    }
    Ok(FixedCheck {
        model: p.model,
        point: label.into(),
        s3_fixed,
        tau_fixed: p.act(GroupElem::TAU)? == *p,
    })
}

/// Points in the tangent plane at P1 are blown down by φ.
fn on_exceptional_locus(q: &SurfacePoint) -> bool {
    let m = quadric_matrix();
    let mp = linalg::mat_vec(&m, &named::x2_p1().coords);
    linalg::dot(&q.coords, &mp).is_zero()
}

fn equivariant_at(g: GroupElem, q: &SurfacePoint) -> Result<bool, GeometryError> {
    Ok(stereo(&q.act(g)?)? == plane_act(g, &stereo(q)?))
}

fn random_rational(rng: &mut ChaCha8Rng) -> CycNum {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9i64..=9);
    }
    CycNum::from_rat(rat(n, rng.gen_range(1i64..=6)))
}

/// Sample torus points from `seed` and check φ ∘ p2 exactly.
pub fn s3_contrast(seed: u64) -> Result<ContrastReport, GeometryError> {
    let fixed_points = vec![
        fixed("P", &named::p())?,
        fixed("P1", &named::p_plus())?,
        fixed("P−1", &named::p_minus())?,
        fixed("P1", &named::x2_p1())?,
        fixed("P−1", &named::x2_p_minus())?,
    ];

    let anchor_t =
        SurfacePoint::torus(CycNum::int(2), CycNum::int(3), CycNum::from_rat(rat(1, 6)))?;
    let anchor_q = p2(&anchor_t)?;
    let pm = named::x2_p_minus();
    let mut anchors = Vec::new();
    for (label, q) in [("p2(2, 3, 1/6)", &anchor_q), ("P−1", &pm)] {
        let mut t = Tally {
            check: format!("S3-equivariance and round trip at {label}"),
            passed: 0,
            total: 0,
        };
        for (_, g) in s3_generators() {
            t.total += 1;
            t.passed += usize::from(equivariant_at(g, q)?);
        }
        t.total += 1;
        t.passed += usize::from(stereo_inverse(&stereo(q)?)? == *q);
        anchors.push(t);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut equivariance: Vec<Tally> = s3_generators()
        .iter()
        .map(|(n, _)| Tally {
            check: format!("φ∘{n} = {n}∘φ"),
            passed: 0,
            total: 0,
        })
        .collect();
    let mut round_trip = Tally {
        check: "φ⁻¹∘φ = id".into(),
        passed: 0,
        total: 0,
    };
    let mut tau_control = Tally {
        check: "φ∘τ = τ∘φ".into(),
        passed: 0,
        total: 0,
    };
    let mut samples = 0;
    let mut skipped = 0;
    let mut attempts = 0;
    while samples < MIN_SAMPLES && attempts < MAX_ATTEMPTS {
        attempts += 1;
        let (x, y) = (random_rational(&mut rng), random_rational(&mut rng));
        let z = (&x * &y).inv().expect("nonzero");
        let t = SurfacePoint::torus(x, y, z)?;
        let q = match p2(&t) {
            Ok(q) if !on_exceptional_locus(&q) => q,
            _ => {
                skipped += 1;
                continue;
            }
        };
        // the S3 images of q stay off the locus since P1 is S3-fixed; τ·q may not
        let (Ok(phi), true) = (stereo(&q), !on_exceptional_locus(&q.act(GroupElem::TAU)?)) else {
            skipped += 1;
            continue;
        };
        samples += 1;
        for (tally, (_, g)) in equivariance.iter_mut().zip(s3_generators()) {
            tally.total += 1;
            tally.passed += usize::from(equivariant_at(g, &q)?);
        }
        round_trip.total += 1;
        round_trip.passed += usize::from(stereo_inverse(&phi)? == q);
        tau_control.total += 1;
        tau_control.passed += usize::from(equivariant_at(GroupElem::TAU, &q)?);
    }

    let fixed_ok = fixed_points.iter().all(|f| f.s3_fixed);
    let control_failed = tau_control.passed < tau_control.total;
    let ok = fixed_ok
        && samples >= MIN_SAMPLES
        && anchors.iter().all(Tally::all_pass)
        && equivariance.iter().all(Tally::all_pass)
        && round_trip.all_pass()
        && control_failed;
    Ok(ContrastReport {
        seed,
        samples,
        skipped,
        fixed_points,
        anchors,
        equivariance,
        round_trip,
        tau_control,
        control_failed,
        status: if ok { "reachable" } else { "failed" }.into(),
    })
}
