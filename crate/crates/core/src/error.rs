use thiserror::Error;

use crate::geometry::ModelId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("subgroup order {0} does not divide 12")]
    InvalidOrder(usize),
    #[error("value is not representable in Q(ω): {0}")]
    NonRepresentable(String),
    #[error("cannot parse rational `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("{model:?} expects {expected} coordinates, got {got}")]
    ArityMismatch {
        model: ModelId,
        expected: usize,
        got: usize,
    },
    #[error("coordinate factor {0} is identically zero")]
    ZeroFactor(usize),
    #[error("point is not on {0:?}")]
    NotOnModel(ModelId),
    #[error("action of {elem} on {model:?} is undefined at {point}")]
    UndefinedImage {
        model: ModelId,
        elem: String,
        point: String,
    },
    #[error("{0:?} does not support this operation")]
    Unsupported(ModelId),
    #[error("pencil is degenerate: {0}")]
    DegeneratePencil(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("inconsistent contraction: {0}")]
    InconsistentContraction(String),
    #[error("class has length {got}, lattice rank is {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("system is not a combination of the target basis")]
    NotInSpan,
    #[error("class search unsupported: {0}")]
    SearchUnsupported(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("gate rejected {kind}: {reason}")]
    GateViolation { kind: String, reason: String },
    #[error("untwisting step {step} makes no progress (r = {r} <= a = {a})")]
    NonProgress { step: usize, r: String, a: String },
    #[error("link {0} does not apply to a state on {1}")]
    WrongModel(String, String),
    #[error("missing multiplicity for center {0}")]
    MissingCenter(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("orbit enumeration on {0} is not certified complete")]
    IncompleteCertification(String),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown lemma `{0}`; expected one of {1}")]
    UnknownLemma(String, String),
    #[error(transparent)]
    Prover(#[from] ProverError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
