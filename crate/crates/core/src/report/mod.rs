//! Verification reports behind the command line: configuration, the
//! `verify` and `prove` commands, and JSON or markdown rendering.

mod markdown;
mod verify;

use serde::Serialize;

use crate::error::ReportError;
use crate::links::{involution_identities, CheckStatus, FormulaTable, IdentityCheck, Node};
use crate::prover::{
    first_difference, golden_skeleton, prove_unreachable, s3_contrast, skeleton, CaseNode,
    ContrastReport, Skeleton, Verdict,
};

pub use markdown::render_markdown;
pub use verify::LEMMAS;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verbosity {
    Summary,
    FullTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub format: Format,
    pub seed: u64,
    pub verbosity: Verbosity,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            format: Format::Json,
            seed: 42,
            verbosity: Verbosity::Summary,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// A statement of the source argument.
    Source,
    /// Computed independently, e.g. by substitution or sampling.
    Derived,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub provenance: Provenance,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
        provenance: Provenance,
    ) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
            provenance,
        }
    }
}

/// How an ambiguous or misprinted statement of the source was read.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reading {
    pub item: String,
    pub printed: String,
    pub reading: String,
}

pub fn readings() -> Vec<Reading> {
    let r = |item: &str, printed: &str, reading: &str| Reading {
        item: item.into(),
        printed: printed.into(),
        reading: reading.into(),
    };
    vec![
        r("action of the inversion", "(x^{1-}, ...)", "coordinate inversion x ↦ 1/x; τ swaps x1 and x0 in each factor"),
        r("P−1", "(-1,-1,-1.1)", "(−1, −1, −1, 1)"),
        r("R1, R2", "three coordinates", "R1 = (1, λ, λ², 0), R2 = (1, λ², λ, 0); w = 0 is forced by C0"),
        r("ELEM multiplicity", "r1′ = 2(r1 − a1)", "r1′ = 2a1 − r1, from the class map x1 ↦ d1·f1 − x1 and the lattice pushforward"),
        r("PHI_8_2_INV coefficient", "a = a1 + 2/3·b1", "a = a1 + b1/2, from −K ↦ −K − x, 2f ↦ −K − 2x and the lattice pushforward"),
        r(
            "class identification",
            "Γ_x, Δ_x, E_x",
            "Γ_x ~ E_x ~ h − e1 and Δ_x ~ 2h − e2 − e3 = −K − Γ_x, with e1 = {y = 0, z = ∞}, e2 = {z = 0, x = ∞}, e3 = {x = 0, y = ∞}",
        ),
        r("Γ_x equation", "y1z1 = y0z0", "closure x1 = x0; the printed equation also contains two boundary lines"),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictSection {
    pub start: Node,
    pub target: Node,
    pub status: String,
    pub reachable: bool,
    pub path: Vec<crate::links::LinkKind>,
    pub incomplete_flags: usize,
    pub certification: Vec<crate::prover::tree::CertificationNote>,
    pub open_branches: Vec<String>,
    pub golden_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub golden_difference: Option<String>,
    pub skeleton: Skeleton,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<CaseNode>,
}

impl VerdictSection {
    fn new(v: Verdict, verbosity: Verbosity) -> Self {
        let sk = skeleton(&v.tree);
        let diff = first_difference(&sk, &golden_skeleton());
        VerdictSection {
            start: v.start,
            target: v.target,
            status: v.status,
            reachable: v.reachable,
            path: v.path,
            incomplete_flags: v.incomplete_flags,
            certification: v.certification,
            open_branches: v.open_branches,
            golden_match: diff.is_none(),
            golden_difference: diff,
            skeleton: sk,
            tree: (verbosity == Verbosity::FullTree).then_some(v.tree),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    pub verbosity: Verbosity,
    pub passed: bool,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub checks: Vec<Check>,
    pub readings: Vec<Reading>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contrast: Option<ContrastReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<IdentityCheck>,
}

impl Report {
    fn assemble(command: String, config: &ReportConfig, checks: Vec<Check>) -> Self {
        let failure = checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail));
        let passed = failure.is_none();
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            seed: config.seed,
            verbosity: config.verbosity,
            passed,
            exit_code: if passed { 0 } else { 1 },
            failure,
            checks,
            readings: readings(),
            verdict: None,
            contrast: None,
            identities: vec![],
        }
    }
}

fn identity_checks(ids: &[IdentityCheck]) -> Vec<Check> {
    ids.iter()
        .map(|i| {
            let tag = match i.status {
                CheckStatus::Holds => "holds",
                CheckStatus::Fails => "fails",
                CheckStatus::Discrepancy => "discrepancy",
            };
            Check::new(
                &i.name,
                i.status != CheckStatus::Fails,
                format!("{tag}: {}", i.detail),
                Provenance::Derived,
            )
        })
        .collect()
}

/// Run one registered lemma check.
pub fn cmd_verify(lemma: &str, config: &ReportConfig) -> Result<Report, ReportError> {
    let table = FormulaTable::printed();
    let (checks, identities) = verify::run(lemma, &table)?;
    let mut r = Report::assemble(format!("verify {lemma}"), config, checks);
    r.identities = identities;
    Ok(r)
}

pub fn cmd_prove(config: &ReportConfig) -> Result<Report, ReportError> {
    cmd_prove_with(config, &FormulaTable::printed())
}

/// The main theorem and the S3 contrast, with link formulas from `table`.
pub fn cmd_prove_with(config: &ReportConfig, table: &FormulaTable) -> Result<Report, ReportError> {
    let verdict = prove_unreachable(Node::X, Node::P2, table)?;
    let contrast = s3_contrast(config.seed)?;
    let identities = involution_identities(table)?;
    let section = VerdictSection::new(verdict, config.verbosity);

    let mut checks = Vec::new();
    let open = section.open_branches.first().cloned().unwrap_or_default();
    checks.push(Check::new(
        "X does not reach P2",
        section.status == "unreachable",
        if open.is_empty() {
            format!("verdict {}", section.status)
        } else {
            format!("verdict {}; open branch {open}", section.status)
        },
        Provenance::Source,
    ));
    checks.push(Check::new(
        "orbit enumerations certified",
        section.incomplete_flags == 0 && section.certification.iter().all(|c| c.complete),
        format!(
            "{} enumerations, {} incomplete",
            section.certification.len(),
            section.incomplete_flags
        ),
        Provenance::Derived,
    ));
    checks.push(Check::new(
        "case tree matches the golden tree",
        section.golden_match,
        section
            .golden_difference
            .clone()
            .unwrap_or_else(|| "structurally equal".into()),
        Provenance::Source,
    ));
    checks.push(Check::new(
        "S3 contrast",
        contrast.status == "reachable",
        format!(
            "{} samples ({} skipped), τ control failed on {}/{}",
            contrast.samples,
            contrast.skipped,
            contrast.tau_control.total - contrast.tau_control.passed,
            contrast.tau_control.total
        ),
        Provenance::Derived,
    ));
    checks.extend(identity_checks(&identities));

    let mut r = Report::assemble("prove".into(), config, checks);
    r.verdict = Some(section);
    r.contrast = Some(contrast);
    r.identities = identities;
    Ok(r)
}

pub fn render(r: &Report, format: Format) -> Result<String, ReportError> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(r)? + "\n",
        Format::Markdown => render_markdown(r),
    })
}
