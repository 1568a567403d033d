//! Sarkisov links between the G-surfaces met in the proof: admission gates,
//! coefficient transforms, and their cross-check against the lattice oracle.

pub mod apply;
pub mod form;
pub mod gates;
pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{rat_int, rat_serde, Rat};
use crate::geometry::{ModelId, Orbit};

pub use apply::{
    apply_link, involution_identities, resolve, untwist_conic_bundle, CheckStatus, Discrepancy,
    IdentityCheck, LinkApplication, UntwistTrace,
};
pub use form::{FormulaEntry, FormulaTable, LinearForm, Transform};
pub use gates::{length_gate, noether_gate, position_gate, GateReason, GateVerdict};
pub use oracle::oracle_transform;

/// Surfaces of the state machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Node {
    X,
    X2,
    CB0,
    CB1,
    P2,
}

impl Node {
    pub fn all() -> [Node; 5] {
        [Node::X, Node::X2, Node::CB0, Node::CB1, Node::P2]
    }

    pub fn name(self) -> &'static str {
        match self {
            Node::X => "X",
            Node::X2 => "X2",
            Node::CB0 => "CB0",
            Node::CB1 => "CB1",
            Node::P2 => "P2",
        }
    }

    pub fn parse(s: &str) -> Option<Node> {
        Node::all().into_iter().find(|n| n.name() == s)
    }

    pub fn k2(self) -> i64 {
        match self {
            Node::X | Node::CB0 | Node::CB1 => 6,
            Node::X2 => 8,
            Node::P2 => 9,
        }
    }

    pub fn is_conic_bundle(self) -> bool {
        matches!(self, Node::CB0 | Node::CB1)
    }

    /// Model on which center points are written; conic bundles use the
    /// quadric away from the blown-up pair.
    pub fn model(self) -> ModelId {
        match self {
            Node::X => ModelId::XTorus,
            Node::X2 | Node::CB0 | Node::CB1 => ModelId::X2Quadric,
            Node::P2 => ModelId::YP2,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LinkKind {
    #[serde(rename = "PHI_6_1")]
    Phi61,
    #[serde(rename = "PHI_6_2")]
    Phi62,
    #[serde(rename = "PHI_6_3")]
    Phi63,
    #[serde(rename = "PHI_8_2_PI0")]
    Phi82Pi0,
    #[serde(rename = "PHI_8_2_PI1")]
    Phi82Pi1,
    #[serde(rename = "ELEM")]
    Elem,
    #[serde(rename = "PHI_8_2_INV")]
    Phi82Inv,
    #[serde(rename = "PHI_8_3_A")]
    Phi83A,
    #[serde(rename = "PHI_8_3_B")]
    Phi83B,
    #[serde(rename = "PHI_8_6")]
    Phi86,
}

impl LinkKind {
    pub fn all() -> [LinkKind; 10] {
        use LinkKind::*;
        [
            Phi61, Phi62, Phi63, Phi82Pi0, Phi82Pi1, Elem, Phi82Inv, Phi83A, Phi83B, Phi86,
        ]
    }

    pub fn name(self) -> &'static str {
        use LinkKind::*;
        match self {
            Phi61 => "PHI_6_1",
            Phi62 => "PHI_6_2",
            Phi63 => "PHI_6_3",
            Phi82Pi0 => "PHI_8_2_PI0",
            Phi82Pi1 => "PHI_8_2_PI1",
            Elem => "ELEM",
            Phi82Inv => "PHI_8_2_INV",
            Phi83A => "PHI_8_3_A",
            Phi83B => "PHI_8_3_B",
            Phi86 => "PHI_8_6",
        }
    }

    pub fn parse(s: &str) -> Option<LinkKind> {
        LinkKind::all().into_iter().find(|k| k.name() == s)
    }

    pub fn source(self) -> Node {
        use LinkKind::*;
        match self {
            Phi61 | Phi62 | Phi63 => Node::X,
            Phi82Pi0 | Phi82Pi1 | Phi83A | Phi83B | Phi86 => Node::X2,
            Elem | Phi82Inv => Node::CB1,
        }
    }

    pub fn target(self) -> Node {
        use LinkKind::*;
        match self {
            Phi61 | Phi82Inv | Phi86 => Node::X2,
            Phi62 | Phi63 | Phi83A | Phi83B => Node::X,
            Phi82Pi0 => Node::CB0,
            Phi82Pi1 | Elem => Node::CB1,
        }
    }

    /// Admissible center lengths.
    pub fn center_lengths(self) -> &'static [usize] {
        use LinkKind::*;
        match self {
            Phi61 => &[1],
            Phi62 | Phi82Pi0 | Phi82Pi1 => &[2],
            Phi63 | Phi83A | Phi83B => &[3],
            Elem => &[3, 6],
            Phi82Inv => &[0],
            Phi86 => &[6],
        }
    }

    pub fn is_refuted(self) -> bool {
        self == LinkKind::Phi63
    }

    /// Quantity that must strictly drop: `b` for elementary transforms of the
    /// conic bundle, `a` otherwise.
    pub fn descent_component(self) -> &'static str {
        match self {
            LinkKind::Elem => "b",
            _ => "a",
        }
    }
}

impl fmt::Display for LinkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A center: a concrete orbit, or a symbolic family known only by its length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Center {
    pub label: String,
    pub length: usize,
    pub orbit: Option<Orbit>,
}

impl Center {
    pub fn concrete(label: &str, orbit: Orbit) -> Self {
        Center {
            label: label.into(),
            length: orbit.len(),
            orbit: Some(orbit),
        }
    }

    pub fn symbolic(label: &str, length: usize) -> Self {
        Center {
            label: label.into(),
            length,
            orbit: None,
        }
    }
}

fn serialize_mults<S: serde::Serializer>(
    m: &BTreeMap<String, Rat>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        map.serialize_entry(k, &v.to_string())?;
    }
    map.end()
}

/// Class of a mobile system: −a·K (+ b·f on conic bundles) minus
/// multiplicities at centers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkState {
    pub node: Node,
    #[serde(serialize_with = "rat_serde::one")]
    pub a: Rat,
    #[serde(serialize_with = "rat_serde::one")]
    pub b: Rat,
    #[serde(serialize_with = "serialize_mults")]
    pub mults: BTreeMap<String, Rat>,
}

impl LinkState {
    pub fn new(node: Node, a: Rat) -> Self {
        LinkState {
            node,
            a,
            b: rat_int(0),
            mults: BTreeMap::new(),
        }
    }

    pub fn with_b(mut self, b: Rat) -> Self {
        self.b = b;
        self
    }

    pub fn with_mult(mut self, center: &str, r: Rat) -> Self {
        self.mults.insert(center.into(), r);
        self
    }
}

impl fmt::Display for LinkState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: a = {}", self.node, self.a)?;
        if self.node.is_conic_bundle() {
            write!(f, ", b = {}", self.b)?;
        }
        for (k, v) in &self.mults {
            write!(f, ", r({k}) = {v}")?;
        }
        Ok(())
    }
}
