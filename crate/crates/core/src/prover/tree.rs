//! Exhaustive case analysis over the link state machine.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::ProverError;
use crate::geometry::{
    enumerate_orbits, named, ModelId, Orbit, OrbitEnumeration, StabilizerCertificate,
};
use crate::lattice::{add, blow_up_orbit, dp6_lattice, DivClass};
use crate::links::{
    length_gate, position_gate, resolve, Center, Discrepancy, FormulaTable, GateReason,
    GateVerdict, LinearForm, LinkKind, Node,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterRef {
    pub label: String,
    pub length: usize,
    pub symbolic: bool,
}

/// Exact sign certificate for the drop of the termination measure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentCheck {
    pub component: String,
    pub delta: LinearForm,
    pub hypothesis: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Curves that become (−2)-curves after blowing up the center, with the
    /// pairing of the mobile system against each strict transform.
    MinusTwoCurves {
        refutes: Option<LinkKind>,
        classes: Vec<(String, DivClass)>,
        pairings: Vec<(String, LinearForm)>,
        negative_when_maximal: bool,
    },
    NoCandidates {
        model: ModelId,
        length: usize,
        certificates: Vec<StabilizerCertificate>,
    },
    Length {
        detail: String,
    },
    Position {
        detail: String,
        fibers: Vec<String>,
    },
}

impl Witness {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Witness::MinusTwoCurves { .. } => "minus_two_curves",
            Witness::NoCandidates { .. } => "no_candidates",
            Witness::Length { .. } => "length",
            Witness::Position { .. } => "position",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Step {
    /// A model expanded into its center candidates.
    Model,
    Link {
        link: LinkKind,
        target: Node,
        back_edge: bool,
        descent: DescentCheck,
        discrepancies: Vec<Discrepancy>,
    },
    Refuted {
        witness: Witness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseNode {
    pub model: Node,
    /// Center length of a branch; absent on model nodes, 0 for the untwisting exit.
    pub length: Option<usize>,
    /// Absent when the branch has no candidates.
    pub center: Option<CenterRef>,
    pub gates: Vec<GateVerdict>,
    pub step: Step,
    pub closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub open_reason: Option<String>,
    pub children: Vec<CaseNode>,
}

impl CaseNode {
    /// Depth-first walk, parents before children.
    pub fn walk<'a>(&'a self, out: &mut Vec<&'a CaseNode>) {
        out.push(self);
        for c in &self.children {
            c.walk(out);
        }
    }

    pub fn branch_label(&self) -> String {
        match (&self.length, &self.center) {
            (None, _) => self.model.name().to_string(),
            (Some(d), Some(c)) => format!("{} d={d} {}", self.model.name(), c.label),
            (Some(d), None) => format!("{} d={d} (no candidates)", self.model.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificationNote {
    pub model: ModelId,
    pub max_length: usize,
    pub complete: bool,
    pub orbits: Vec<String>,
    pub certificates: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub start: Node,
    pub target: Node,
    pub reachable: bool,
    /// "unreachable", "reachable", or "open" when some branch did not close.
    pub status: String,
    pub path: Vec<LinkKind>,
    pub certification: Vec<CertificationNote>,
    pub incomplete_flags: usize,
    pub open_branches: Vec<String>,
    pub tree: CaseNode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: Node,
    pub link: LinkKind,
    pub to: Node,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelGraph {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

impl ModelGraph {
    pub fn out_edges(&self, n: Node) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.from == n).collect()
    }

    pub fn in_degree(&self, n: Node) -> usize {
        self.edges.iter().filter(|e| e.to == n).count()
    }
}

/// Models and the admissible link kinds between them.
pub fn model_graph() -> ModelGraph {
    let edges = LinkKind::all()
        .into_iter()
        .filter(|k| !k.is_refuted())
        .map(|k| Edge {
            from: k.source(),
            link: k,
            to: k.target(),
        })
        .collect();
    ModelGraph {
        nodes: Node::all().to_vec(),
        edges,
    }
}

/// Human label of a named orbit.
pub fn orbit_label(o: &Orbit) -> String {
    let named: Vec<(&str, crate::geometry::SurfacePoint)> = vec![
        ("P", named::p()),
        ("{P1,P−1}", named::p_plus()),
        ("{Q1,Q2,Q3}", named::q(1)),
        ("{P1,P−1}", named::x2_p1()),
        ("{R1,R2}", named::r1()),
        ("A", named::orbit_a()[0].clone()),
        ("B", named::orbit_b()[0].clone()),
    ];
    named
        .into_iter()
        .find(|(_, p)| o.contains(p))
        .map(|(l, _)| l.to_string())
        .unwrap_or_else(|| format!("orbit of {:?}", o.points[0]))
}

enum Candidate {
    LengthFail(GateVerdict),
    Empty,
    Center(Center),
    Untwist,
}

impl Candidate {
    fn label(&self) -> &str {
        match self {
            Candidate::Center(c) => &c.label,
            _ => "",
        }
    }
}

fn branch_lengths(node: Node) -> Vec<usize> {
    match node {
        Node::X => (1..=5).collect(),
        Node::X2 => (1..=6).collect(),
        Node::CB0 | Node::CB1 => vec![1, 2, 3, 4, 6, 12],
        Node::P2 => vec![],
    }
}

fn link_for(node: Node, d: usize, label: &str) -> Option<LinkKind> {
    use LinkKind::*;
    Some(match (node, d) {
        (Node::X, 1) => Phi61,
        (Node::X, 2) => Phi62,
        (Node::X, 3) => Phi63,
        (Node::X2, 2) if label == "{R1,R2}" => Phi82Pi0,
        (Node::X2, 2) => Phi82Pi1,
        (Node::X2, 3) if label == "B" => Phi83B,
        (Node::X2, 3) => Phi83A,
        (Node::X2, 6) => Phi86,
        (Node::CB1, 3 | 6) => Elem,
        _ => return None,
    })
}

struct Search<'a> {
    table: &'a FormulaTable,
    torus: OrbitEnumeration,
    quadric: OrbitEnumeration,
    visited: BTreeSet<Node>,
}

impl Search<'_> {
    fn enumeration(&self, node: Node) -> Option<&OrbitEnumeration> {
        match node {
            Node::X => Some(&self.torus),
            Node::X2 | Node::CB0 | Node::CB1 => Some(&self.quadric),
            Node::P2 => None,
        }
    }

    fn candidates(&self, node: Node) -> Vec<(usize, Candidate)> {
        let mut out = Vec::new();
        if node == Node::CB1 {
            out.push((0, Candidate::Untwist));
        }
        // the pair blown up to make the conic bundle is not a center on it
        let excluded = match node {
            Node::CB0 => Some(named::r1()),
            Node::CB1 => Some(named::x2_p1()),
            _ => None,
        };
        for d in branch_lengths(node) {
            let g = length_gate(node, d);
            if !g.admissible {
                out.push((d, Candidate::LengthFail(g)));
                continue;
            }
            let e = self.enumeration(node).expect("model with orbits");
            if d > e.max_length {
                out.push((d, Candidate::Center(Center::symbolic(&format!("x{d}"), d))));
                continue;
            }
            let mut found: Vec<Center> = e
                .of_length(d)
                .into_iter()
                .filter(|o| excluded.as_ref().is_none_or(|p| !o.contains(p)))
                .map(|o| Center::concrete(&orbit_label(o), o.clone()))
                .collect();
            if found.is_empty() {
                out.push((d, Candidate::Empty));
            }
            found.sort_by(|a, b| a.label.cmp(&b.label));
            out.extend(found.into_iter().map(|c| (d, Candidate::Center(c))));
        }
        out.sort_by(|(d1, c1), (d2, c2)| (d1, c1.label()).cmp(&(d2, c2.label())));
        out
    }

    fn expand(&mut self, node: Node) -> Result<CaseNode, ProverError> {
        self.visited.insert(node);
        let mut children = Vec::new();
        for (d, c) in self.candidates(node) {
            children.push(self.branch(node, d, c)?);
        }
        let closed = children.iter().all(|c| c.closed);
        Ok(CaseNode {
            model: node,
            length: None,
            center: None,
            gates: vec![],
            step: Step::Model,
            closed,
            open_reason: None,
            children,
        })
    }

    fn branch(&mut self, node: Node, d: usize, cand: Candidate) -> Result<CaseNode, ProverError> {
        let leaf =
            |center: Option<CenterRef>, gates: Vec<GateVerdict>, witness: Witness| CaseNode {
                model: node,
                length: Some(d),
                center,
                gates,
                step: Step::Refuted { witness },
                closed: true,
                open_reason: None,
                children: vec![],
            };
        match cand {
            Candidate::LengthFail(g) => {
                let detail = g.detail.clone();
                Ok(leaf(None, vec![g], Witness::Length { detail }))
            }
            Candidate::Empty => {
                let e = self.enumeration(node).expect("model with orbits");
                let certificates = e
                    .certificates
                    .iter()
                    .filter(|c| c.length == d)
                    .cloned()
                    .collect();
                Ok(leaf(
                    None,
                    vec![length_gate(node, d)],
                    Witness::NoCandidates {
                        model: e.model,
                        length: d,
                        certificates,
                    },
                ))
            }
            Candidate::Untwist => {
                let center = CenterRef {
                    label: "b < 0".into(),
                    length: 0,
                    symbolic: true,
                };
                let gates = vec![GateVerdict::ok("the conic bundle is untwisted once b < 0")];
                self.link(node, 0, center, gates, LinkKind::Phi82Inv)
            }
            Candidate::Center(c) => {
                let cref = CenterRef {
                    label: c.label.clone(),
                    length: c.length,
                    symbolic: c.orbit.is_none(),
                };
                let pos = position_gate(node, &c)?;
                let gates = vec![
                    length_gate(node, d),
                    GateVerdict::ok("r > a: a maximal singularity, by hypothesis"),
                    pos.clone(),
                ];
                if !pos.admissible {
                    let witness = match (&pos.reason, &c.orbit) {
                        (GateReason::PositionFail { classes, .. }, Some(o))
                            if !classes.is_empty() =>
                        {
                            minus_two_witness(o, classes, link_for(node, d, &c.label))?
                        }
                        (GateReason::PositionFail { fibers, .. }, _) => Witness::Position {
                            detail: pos.detail.clone(),
                            fibers: fibers.clone(),
                        },
                        _ => Witness::Position {
                            detail: pos.detail.clone(),
                            fibers: vec![],
                        },
                    };
                    return Ok(leaf(Some(cref), gates, witness));
                }
                match link_for(node, d, &c.label) {
                    Some(kind) => self.link(node, d, cref, gates, kind),
                    None => Ok(CaseNode {
                        model: node,
                        length: Some(d),
                        center: Some(cref),
                        gates,
                        step: Step::Refuted {
                            witness: Witness::Position {
                                detail: "no link recorded".into(),
                                fibers: vec![],
                            },
                        },
                        closed: false,
                        open_reason: Some("admissible center with no link in the catalog".into()),
                        children: vec![],
                    }),
                }
            }
        }
    }

    fn link(
        &mut self,
        node: Node,
        d: usize,
        center: CenterRef,
        gates: Vec<GateVerdict>,
        kind: LinkKind,
    ) -> Result<CaseNode, ProverError> {
        let (_, used, discrepancies) = resolve(kind, d, self.table)?;
        let descent = if kind == LinkKind::Phi82Inv {
            let delta = used.a.sub(&LinearForm::a());
            DescentCheck {
                component: "a".into(),
                holds: delta.negative_if_b_negative(),
                delta,
                hypothesis: "b < 0".into(),
            }
        } else if kind.descent_component() == "b" {
            let delta = used
                .b
                .clone()
                .unwrap_or_else(LinearForm::zero)
                .sub(&LinearForm::b());
            DescentCheck {
                component: "b".into(),
                holds: delta.negative_if_maximal(),
                delta,
                hypothesis: "r > a".into(),
            }
        } else {
            let delta = used.a.sub(&LinearForm::a());
            DescentCheck {
                component: "a".into(),
                holds: delta.negative_if_maximal(),
                delta,
                hypothesis: "r > a".into(),
            }
        };
        let mut reasons = Vec::new();
        if !descent.holds {
            reasons.push(format!(
                "{kind}: {}′ − {} = {} is not negative",
                descent.component, descent.component, descent.delta
            ));
        }
        for x in discrepancies.iter().filter(|x| x.documented.is_none()) {
            reasons.push(format!(
                "{kind}: printed {} = {} disagrees with the lattice oracle {}",
                x.component, x.printed, x.oracle
            ));
        }
        let target = kind.target();
        let back_edge = self.visited.contains(&target);
        let children = if back_edge {
            vec![]
        } else {
            vec![self.expand(target)?]
        };
        let closed = reasons.is_empty() && children.iter().all(|c| c.closed);
        Ok(CaseNode {
            model: node,
            length: Some(d),
            center: Some(center),
            gates,
            step: Step::Link {
                link: kind,
                target,
                back_edge,
                descent,
                discrepancies,
            },
            closed,
            open_reason: (!reasons.is_empty()).then(|| reasons.join("; ")),
            children,
        })
    }
}

/// H = a·(−K) − r·ΣE paired with each strict transform.
fn minus_two_witness(
    o: &Orbit,
    classes: &[(String, DivClass)],
    refutes: Option<LinkKind>,
) -> Result<Witness, ProverError> {
    let x = dp6_lattice();
    let b = blow_up_orbit(&x, o)?;
    let pk = b.pullback(&x.minus_k());
    let es = b
        .exceptionals
        .iter()
        .fold(vec![0; b.lattice.rank()], |acc, e| add(&acc, e));
    let pairings: Vec<(String, LinearForm)> = classes
        .iter()
        .map(|(l, c)| {
            (
                format!("H·{l}′"),
                LinearForm::ints(b.lattice.pair(&pk, c), 0, -b.lattice.pair(&es, c)),
            )
        })
        .collect();
    let negative_when_maximal = pairings.iter().all(|(_, f)| f.negative_if_maximal());
    Ok(Witness::MinusTwoCurves {
        refutes,
        classes: classes.to_vec(),
        pairings,
        negative_when_maximal,
    })
}

fn find_path(n: &CaseNode, target: Node, path: &mut Vec<LinkKind>) -> bool {
    if let Step::Link {
        link, target: t, ..
    } = &n.step
    {
        path.push(*link);
        if *t == target {
            return true;
        }
    }
    for c in &n.children {
        if find_path(c, target, path) {
            return true;
        }
    }
    if matches!(n.step, Step::Link { .. }) {
        path.pop();
    }
    false
}

fn open_branches(n: &CaseNode, prefix: &str, out: &mut Vec<String>) {
    let here = if prefix.is_empty() {
        n.branch_label()
    } else {
        format!("{prefix} > {}", n.branch_label())
    };
    if let Some(r) = &n.open_reason {
        out.push(format!("{here}: {r}"));
    }
    for c in &n.children {
        open_branches(c, &here, out);
    }
}

fn note(e: &OrbitEnumeration) -> CertificationNote {
    CertificationNote {
        model: e.model,
        max_length: e.max_length,
        complete: e.complete,
        orbits: e.orbits.iter().map(orbit_label).collect(),
        certificates: e.certificates.len(),
    }
}

/// Decide whether `target` is reachable from `start` through admissible
/// links, with the full case tree.
pub fn prove_unreachable(
    start: Node,
    target: Node,
    table: &FormulaTable,
) -> Result<Verdict, ProverError> {
    let torus = enumerate_orbits(ModelId::XTorus, 5)?;
    let quadric = enumerate_orbits(ModelId::X2Quadric, 4)?;
    for e in [&torus, &quadric] {
        if !e.complete {
            return Err(ProverError::IncompleteCertification(e.model.name().into()));
        }
    }
    let certification = vec![note(&torus), note(&quadric)];
    let mut s = Search {
        table,
        torus,
        quadric,
        visited: BTreeSet::new(),
    };
    let tree = s.expand(start)?;
    let mut path = Vec::new();
    let reachable = start == target || find_path(&tree, target, &mut path);
    if start == target {
        path.clear();
    }
    let mut open = Vec::new();
    open_branches(&tree, "", &mut open);
    let status = if reachable {
        "reachable"
    } else if tree.closed {
        "unreachable"
    } else {
        "open"
    };
    Ok(Verdict {
        start,
        target,
        reachable,
        status: status.into(),
        path,
        certification,
        incomplete_flags: 0,
        open_branches: open,
        tree,
    })
}

/// Every refuted branch with its witness, in tree order.
pub fn refutation_witnesses(tree: &CaseNode) -> Vec<(String, Witness)> {
    let mut all = Vec::new();
    tree.walk(&mut all);
    all.into_iter()
        .filter_map(|n| match &n.step {
            Step::Refuted { witness } => Some((n.branch_label(), witness.clone())),
            _ => None,
        })
        .collect()
}
