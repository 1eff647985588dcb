//! Batch front-end behind the `qsheaf` binary.
//!
//! A job is one JSON document naming a variety, a bundle and a ring. Each
//! `run_*` function turns a job into a serializable report; [`execute`]
//! wires them to the command line, renders text or JSON and picks the exit
//! status. Text output is a plain rendering of the same JSON value, so the
//! two formats always carry the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::frobenius::{make_frobenius, FrobeniusAlgebra};
use crate::groebner::buchberger;
use crate::poly::{parse_poly, parse_rational, render_rational, BaseOrder, Block, MonomialOrder, Polynomial, Rational};
use crate::rings::{
    classical_cohomology_products, presentations_isomorphic_by_renaming, qsc_presentation_p1p1,
    quantum_cohomology_products, substitute, zero_assignments, QuotientAlgebra, RingPresentation,
};
use crate::toric::{
    check_bundle_regularity, check_omalous, check_omalous_twists, euler_matrix_default, p1p1_deformation,
    product_projective_toric, validate_deformation, DeformationMatrix, OmalousReport, ToricData,
};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    CheckFailed = 1,
    InputError = 2,
    Degenerate = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { status: Status::InputError, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DegeneratePresentation(_) | Error::TraceDegenerate(_) => Status::Degenerate,
            _ => Status::InputError,
        };
        CliError { status, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDescription {
    pub variety: VarietySpec,
    #[serde(default)]
    pub bundle: BundleSpec,
    pub ring: RingKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceSpec>,
    /// Expression triples for `correlator`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub queries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum VarietySpec {
    ProductProjective { dims: Vec<u32> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum BundleSpec {
    #[default]
    Tangent,
    TangentDeformationP1p1 {
        epsilon: [String; 3],
        gamma: [String; 3],
    },
    TwistList {
        classes: Vec<Vec<i64>>,
    },
    /// Explicit Euler-sequence map, one row of entry strings per coordinate.
    Matrix {
        rows: Vec<Vec<String>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    Classical,
    Quantum,
    Qsc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceSpec {
    pub reference: String,
    pub value: String,
}

impl JobDescription {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid job: {e}")))
    }
}

enum Bundle {
    Map(DeformationMatrix),
    Twists(Vec<Vec<i64>>),
}

struct Setup {
    dims: Vec<u32>,
    toric: ToricData,
    bundle: Bundle,
    presentation: RingPresentation,
    trace: Option<(String, Rational)>,
}

fn rational(s: &str) -> CliResult<Rational> {
    parse_rational(s.trim()).ok_or_else(|| CliError::input(format!("`{s}` is not a rational of the form a or a/b")))
}

fn parameters(v: &[String; 3]) -> CliResult<[Rational; 3]> {
    Ok([rational(&v[0])?, rational(&v[1])?, rational(&v[2])?])
}

fn setup(job: &JobDescription) -> CliResult<Setup> {
    let VarietySpec::ProductProjective { dims } = &job.variety;
    let toric = product_projective_toric(dims)?;
    let is_p1p1 = dims.as_slice() == [1, 1];
    let mut qsc_params = None;
    let bundle = match &job.bundle {
        BundleSpec::Tangent => Bundle::Map(euler_matrix_default(&toric)?),
        BundleSpec::TangentDeformationP1p1 { epsilon, gamma } => {
            if !is_p1p1 {
                return Err(CliError::input("tangent_deformation_p1p1 needs variety dims [1, 1]"));
            }
            let (eps, gam) = (parameters(epsilon)?, parameters(gamma)?);
            let m = p1p1_deformation(&eps, &gam);
            qsc_params = Some((eps, gam));
            Bundle::Map(m)
        }
        BundleSpec::TwistList { classes } => Bundle::Twists(classes.clone()),
        BundleSpec::Matrix { rows } => Bundle::Map(DeformationMatrix::parse(toric.clone(), rows)?),
    };
    let presentation = match job.ring {
        RingKind::Classical => classical_cohomology_products(dims)?,
        RingKind::Quantum => quantum_cohomology_products(dims)?,
        RingKind::Qsc => {
            let Some((eps, gam)) = qsc_params.filter(|_| is_p1p1) else {
                return Err(CliError::input("ring qsc needs variety [1, 1] and a tangent_deformation_p1p1 bundle"));
            };
            qsc_presentation_p1p1(&eps, &gam)
        }
    };
    let trace = match &job.trace {
        Some(t) => Some((t.reference.clone(), rational(&t.value)?)),
        None => None,
    };
    Ok(Setup { dims: dims.clone(), toric, bundle, presentation, trace })
}

impl Setup {
    fn frobenius(&self, qa: QuotientAlgebra) -> CliResult<FrobeniusAlgebra> {
        Ok(match &self.trace {
            Some((reference, value)) => {
                let r = parse_poly(reference, qa.table().clone()).map_err(Error::from)?;
                make_frobenius(qa, r, value.clone())?
            }
            None => FrobeniusAlgebra::with_default_trace(qa)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableRow {
    pub name: String,
    pub block: Block,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentReport {
    pub ring: String,
    pub variables: Vec<VariableRow>,
    pub relations: Vec<String>,
    pub module_basis: Vec<String>,
    pub graded_dimensions: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCoefficient {
    pub degree: Vec<u32>,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrelatorEntry {
    pub inputs: Vec<String>,
    pub value: String,
    pub by_degree: Vec<DegreeCoefficient>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrelatorTable {
    pub ring: String,
    pub instantons: Vec<String>,
    pub entries: Vec<CorrelatorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub ring: String,
    pub basis: Vec<String>,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub nondegenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub ring: String,
    pub checks: Vec<CheckRow>,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum LimitMode {
    /// Set every instanton variable to zero.
    Classical,
    /// Set the deformation parameters to zero (qsc only).
    Undeform,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitReport {
    pub mode: LimitMode,
    pub source: String,
    pub target: String,
    pub relations: Vec<String>,
    pub graded_dimensions: Vec<usize>,
    pub target_graded_dimensions: Vec<usize>,
    pub isomorphic: Option<bool>,
    pub correlator_triples: Option<usize>,
    pub correlators_agree: Option<bool>,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbReport {
    pub ring: String,
    pub order: String,
    pub basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub degenerate: bool,
}

fn rendered(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::render).collect()
}

fn present_algebra(qa: &QuotientAlgebra) -> PresentReport {
    let pres = qa.presentation();
    PresentReport {
        ring: pres.description().to_string(),
        variables: pres
            .table()
            .vars()
            .iter()
            .map(|v| VariableRow { name: v.name.clone(), block: v.block, degree: v.degree })
            .collect(),
        relations: rendered(pres.relations()),
        module_basis: rendered(&qa.basis_polynomials()),
        graded_dimensions: qa.graded_dimensions(),
    }
}

/// Relations, staircase basis and graded dimensions of the job's ring.
pub fn run_present(job: &JobDescription) -> CliResult<PresentReport> {
    let s = setup(job)?;
    Ok(present_algebra(&QuotientAlgebra::new(&s.presentation)?))
}

/// Three-point functions for `exprs` (one triple), else for the job's
/// queries, else for every basis triple `i ≤ j ≤ k`.
pub fn run_correlator(job: &JobDescription, exprs: &[String]) -> CliResult<CorrelatorTable> {
    let s = setup(job)?;
    let fa = s.frobenius(QuotientAlgebra::new(&s.presentation)?)?;
    let table = fa.table().clone();
    let triples: Vec<Vec<String>> = if !exprs.is_empty() { vec![exprs.to_vec()] } else { job.queries.clone() };
    let parse = |e: &str| parse_poly(e, table.clone()).map_err(|err| CliError::input(format!("`{e}`: {err}")));
    let entry = |xs: [Polynomial; 3]| -> CliResult<CorrelatorEntry> {
        let c = fa.three_point(&xs[0], &xs[1], &xs[2])?;
        Ok(CorrelatorEntry {
            inputs: rendered(&xs),
            value: c.value.render(),
            by_degree: c
                .by_degree()
                .into_iter()
                .map(|(degree, k)| DegreeCoefficient { degree, coefficient: render_rational(&k) })
                .collect(),
        })
    };
    let mut entries = Vec::new();
    if triples.is_empty() {
        let basis = fa.algebra().basis_polynomials();
        for ([i, j, k], _) in fa.correlator_table() {
            entries.push(entry([basis[i].clone(), basis[j].clone(), basis[k].clone()])?);
        }
    } else {
        for t in &triples {
            let [a, b, c] = t.as_slice() else {
                return Err(CliError::input(format!("a correlator takes three expressions, got {}", t.len())));
            };
            entries.push(entry([parse(a)?, parse(b)?, parse(c)?])?);
        }
    }
    let instantons = table.block_range(Block::Instanton).map(|i| table.var(i).name.clone()).collect();
    Ok(CorrelatorTable { ring: s.presentation.description().to_string(), instantons, entries })
}

/// Gram matrix of the trace pairing on the staircase basis.
pub fn run_pairing(job: &JobDescription) -> CliResult<PairingReport> {
    let s = setup(job)?;
    let fa = s.frobenius(QuotientAlgebra::new(&s.presentation)?)?;
    let g = fa.gram_matrix();
    Ok(PairingReport {
        ring: s.presentation.description().to_string(),
        basis: rendered(&g.basis),
        matrix: g.entries.iter().map(|row| rendered(row)).collect(),
        determinant: g.determinant.render(),
        nondegenerate: g.nondegenerate,
    })
}

fn omalous_row(r: &OmalousReport) -> CheckRow {
    CheckRow {
        name: "omalous".into(),
        passed: r.is_omalous(),
        detail: format!(
            "c1 = {} (tangent {}), c2 = {} (tangent {})",
            r.bundle.c1, r.tangent.c1, r.bundle.c2, r.tangent.c2
        ),
    }
}

/// Bundle and algebra checks. The report passes iff every row does.
pub fn run_check(job: &JobDescription) -> CliResult<CheckReport> {
    let s = setup(job)?;
    let mut checks = Vec::new();
    match &s.bundle {
        Bundle::Map(m) => match validate_deformation(m) {
            Ok(()) => {
                checks.push(CheckRow {
                    name: "deformation".into(),
                    passed: true,
                    detail: "entries have the row classes".into(),
                });
                checks.push(omalous_row(&check_omalous(&s.toric, m)?));
                let regular = check_bundle_regularity(&s.toric, m)?;
                let detail = if regular {
                    "degeneracy locus inside the irrelevant locus"
                } else {
                    "map drops rank outside the irrelevant locus"
                };
                checks.push(CheckRow { name: "bundle_regularity".into(), passed: regular, detail: detail.into() });
            }
            Err(violations) => {
                let detail = violations
                    .iter()
                    .map(|v| match v.column {
                        Some(c) => format!("row {} column {}: {}", v.row, c, v.reason),
                        None => format!("row {}: {}", v.row, v.reason),
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                checks.push(CheckRow { name: "deformation".into(), passed: false, detail });
            }
        },
        Bundle::Twists(classes) => checks.push(omalous_row(&check_omalous_twists(&s.toric, classes)?)),
    }
    let fa = s.frobenius(QuotientAlgebra::new(&s.presentation)?)?;
    let report = fa.frobenius_check();
    let detail = match report.failures.first() {
        None => format!("{} basis triples", report.triples_checked),
        Some(f) => format!("{} failures, first: {f}", report.failures.len()),
    };
    checks.push(CheckRow { name: "frobenius".into(), passed: report.passed(), detail });
    let closed = fa.closure_check();
    checks.push(CheckRow {
        name: "closure".into(),
        passed: closed,
        detail: if closed { "products reduce onto the basis" } else { "a product leaves the basis span" }.into(),
    });
    let g = fa.gram_matrix();
    checks.push(CheckRow {
        name: "gram_nondegenerate".into(),
        passed: g.nondegenerate,
        detail: format!("det = {}", g.determinant),
    });
    let passed = checks.iter().all(|c| c.passed);
    Ok(CheckReport { ring: s.presentation.description().to_string(), checks, passed })
}

fn renaming(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn rename_poly(p: &Polynomial, target: &RingPresentation, rename: &BTreeMap<String, String>) -> Polynomial {
    let (from, to) = (p.table(), target.table());
    let index_map: Vec<usize> =
        (0..from.len()).map(|i| to.index_of(&rename[&from.var(i).name]).expect("rename covers the table")).collect();
    p.remap(to, &index_map)
}

/// Specializes the ring and compares it with the expected limit.
pub fn run_limit(job: &JobDescription, mode: LimitMode) -> CliResult<LimitReport> {
    let s = setup(job)?;
    match mode {
        LimitMode::Classical => {
            let table = s.presentation.table();
            let limit = substitute(&s.presentation, &zero_assignments(table, Block::Instanton))?;
            let qa = QuotientAlgebra::new(&limit)?;
            let target = classical_cohomology_products(&s.dims)?;
            let target_qa = QuotientAlgebra::new(&target)?;
            let isomorphic = match job.ring {
                RingKind::Qsc => None,
                _ => {
                    let identity: BTreeMap<String, String> =
                        limit.table().names().map(|n| (n.to_string(), n.to_string())).collect();
                    Some(presentations_isomorphic_by_renaming(&limit, &target, &identity)?)
                }
            };
            let verdict = isomorphic.unwrap_or(true) && qa.graded_dimensions() == target_qa.graded_dimensions();
            Ok(LimitReport {
                mode,
                source: limit.description().to_string(),
                target: target.description().to_string(),
                relations: rendered(limit.relations()),
                graded_dimensions: qa.graded_dimensions(),
                target_graded_dimensions: target_qa.graded_dimensions(),
                isomorphic,
                correlator_triples: None,
                correlators_agree: None,
                verdict,
            })
        }
        LimitMode::Undeform => {
            if job.ring != RingKind::Qsc {
                return Err(CliError::input("undeform needs ring qsc"));
            }
            let zero = [Rational::zero(), Rational::zero(), Rational::zero()];
            let undeformed = qsc_presentation_p1p1(&zero, &zero);
            let target = quantum_cohomology_products(&[1, 1])?;
            let rename = renaming(&[("psi", "H1"), ("psit", "H2"), ("q1", "q1"), ("q2", "q2")]);
            let isomorphic = presentations_isomorphic_by_renaming(&undeformed, &target, &rename)?;
            let source_fa = FrobeniusAlgebra::with_default_trace(QuotientAlgebra::new(&undeformed)?)?;
            let target_fa = FrobeniusAlgebra::with_default_trace(QuotientAlgebra::new(&target)?)?;
            let basis = source_fa.algebra().basis_polynomials();
            let mut agree = true;
            let mut triples = 0;
            for a in &basis {
                for b in &basis {
                    for c in &basis {
                        triples += 1;
                        let here = source_fa.three_point(a, b, c)?.value;
                        let there = target_fa.three_point(
                            &rename_poly(a, &target, &rename),
                            &rename_poly(b, &target, &rename),
                            &rename_poly(c, &target, &rename),
                        )?;
                        agree &= rename_poly(&here, &target, &rename) == there.value;
                    }
                }
            }
            let source_qa = source_fa.algebra();
            Ok(LimitReport {
                mode,
                source: undeformed.description().to_string(),
                target: target.description().to_string(),
                relations: rendered(undeformed.relations()),
                graded_dimensions: source_qa.graded_dimensions(),
                target_graded_dimensions: target_fa.algebra().graded_dimensions(),
                isomorphic: Some(isomorphic),
                correlator_triples: Some(triples),
                correlators_agree: Some(agree),
                verdict: isomorphic && agree,
            })
        }
    }
}

fn order_name(order: &MonomialOrder) -> String {
    let base = |b: &BaseOrder| match b {
        BaseOrder::DegRevLex => "degrevlex",
        BaseOrder::Lex => "lex",
    };
    match order {
        MonomialOrder::DegRevLex => "degrevlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::Block(b) => format!("block({}, {}, {})", base(&b[0]), base(&b[1]), base(&b[2])),
    }
}

/// Reduced Gröbner basis of the relations. A presentation whose staircase
/// is infinite still gets its basis, flagged `degenerate`.
pub fn run_gb(job: &JobDescription) -> CliResult<GbReport> {
    let s = setup(job)?;
    let ideal = s.presentation.ideal();
    let gb = buchberger(&ideal);
    let degenerate = match QuotientAlgebra::new(&s.presentation) {
        Ok(_) => false,
        Err(Error::DegeneratePresentation(_)) => true,
        Err(e) => return Err(e.into()),
    };
    let table = gb.table().clone();
    Ok(GbReport {
        ring: s.presentation.description().to_string(),
        order: order_name(ideal.order()),
        basis: rendered(gb.elements()),
        leading_monomials: gb
            .leading_monomials()
            .map(|m| Polynomial::monomial(table.clone(), m.clone(), Rational::from_integer(1.into())).render())
            .collect(),
        degenerate,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qsheaf", version, about = "Quantum cohomology and quantum sheaf cohomology rings, exactly")]
pub struct Cli {
    /// Job file (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relations, module basis and graded dimensions.
    Present,
    /// Three-point functions of three expressions, the job's queries, or the whole basis.
    Correlator { exprs: Vec<String> },
    /// Gram matrix of the trace pairing.
    Pairing,
    /// Bundle and Frobenius checks; exits 1 if any fails.
    Check,
    /// Classical (q = 0) or undeformed limit; exits 1 if the verdict is false.
    Limit {
        #[arg(long, value_enum)]
        mode: LimitMode,
    },
    /// Reduced Gröbner basis of the relations.
    Gb,
}

/// What the binary prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub report: Option<String>,
    pub error: Option<String>,
}

fn render_inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(render_inline).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter().map(|(k, v)| format!("{k}: {}", render_inline(v))).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

/// Text form of a report: one `key: value` line per field, top-level lists
/// one item per line, anything nested inline.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = v else {
        return render_inline(v) + "\n";
    };
    for (k, v) in map {
        match v {
            Value::Array(items) if !items.is_empty() => {
                let _ = writeln!(out, "{k}:");
                for item in items {
                    match item {
                        Value::Object(fields) => {
                            for (i, (fk, fv)) in fields.iter().enumerate() {
                                let lead = if i == 0 { "  - " } else { "    " };
                                let _ = writeln!(out, "{lead}{fk}: {}", render_inline(fv));
                            }
                        }
                        other => {
                            let _ = writeln!(out, "  - {}", render_inline(other));
                        }
                    }
                }
            }
            other => {
                let _ = writeln!(out, "{k}: {}", render_inline(other));
            }
        }
    }
    out
}

fn format_report<T: Serialize>(report: &T, format: Format) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    match format {
        Format::Text => render_text(&value),
        Format::Json => serde_json::to_string_pretty(&value).expect("reports serialize") + "\n",
    }
}

fn finish<T: Serialize>(report: CliResult<T>, format: Format, status: impl FnOnce(&T) -> Status) -> Outcome {
    match report {
        Ok(r) => Outcome { status: status(&r), report: Some(format_report(&r, format)), error: None },
        Err(e) => Outcome { status: e.status, report: None, error: Some(e.message) },
    }
}

fn succeeded<T>(_: &T) -> Status {
    Status::Success
}

/// Runs one command against a job given as JSON text.
pub fn execute_job(command: &Command, job_text: &str, format: Format) -> Outcome {
    let job = match JobDescription::from_json(job_text) {
        Ok(j) => j,
        Err(e) => return Outcome { status: e.status, report: None, error: Some(e.message) },
    };
    match command {
        Command::Present => finish(run_present(&job), format, succeeded),
        Command::Correlator { exprs } => {
            if !exprs.is_empty() && exprs.len() != 3 {
                let e = CliError::input(format!("a correlator takes three expressions, got {}", exprs.len()));
                return Outcome { status: e.status, report: None, error: Some(e.message) };
            }
            finish(run_correlator(&job, exprs), format, succeeded)
        }
        Command::Pairing => finish(run_pairing(&job), format, succeeded),
        Command::Check => {
            finish(run_check(&job), format, |r| if r.passed { Status::Success } else { Status::CheckFailed })
        }
        Command::Limit { mode } => {
            finish(run_limit(&job, *mode), format, |r| if r.verdict { Status::Success } else { Status::CheckFailed })
        }
        Command::Gb => {
            finish(run_gb(&job), format, |r| if r.degenerate { Status::Degenerate } else { Status::Success })
        }
    }
}

/// Reads the job file, runs the command and writes `--output` if given.
pub fn execute(cli: &Cli) -> Outcome {
    let fail = |message: String| Outcome { status: Status::InputError, report: None, error: Some(message) };
    let Some(path) = &cli.input else {
        return fail("--input <file> is required".into());
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(format!("cannot read {}: {e}", path.display())),
    };
    let mut outcome = execute_job(&cli.command, &text, cli.format);
    if let (Some(out), Some(report)) = (&cli.output, &outcome.report) {
        if let Err(e) = std::fs::write(out, report) {
            return fail(format!("cannot write {}: {e}", out.display()));
        }
        outcome.report = None;
    }
    outcome
}
