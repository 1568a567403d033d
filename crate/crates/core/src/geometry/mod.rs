//! Surface models, the two G-actions, fixed loci, orbits, curves and pencils.

pub mod curves;
pub mod fixed;
pub mod maps;
pub mod model;
pub mod named;
pub mod orbits;
pub mod pencils;
pub mod point;
pub mod singular;
pub mod torus;

pub use curves::{curve_contains, intersect_curves, CurveSpec, Intersection};
pub use fixed::{fixed_locus, FixedComponent, FixedLocus};
pub use model::{ModelId, SurfaceModel};
pub use orbits::{enumerate_orbits, OrbitEnumeration, StabilizerCertificate};
pub use pencils::{pencil_reducible_fibers, PencilSpec, ReducibleFiber, ReducibleFibers};
pub use point::{orbit_of, Orbit, SurfacePoint};
