//! Subcommands and their JSON reports.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gentle_core::gentle::{Direction, GentleViolation, Side};
use gentle_core::gp::{
    certify_word, classify_gp, compare_derived_invariant, singularity_descriptor, stable_category_table, sweep_words,
    Verdict, WordCheck,
};
use gentle_core::homology::{default_bound, injective_dimension, ExtProfile, ModuleCategory, DEFAULT_RESOLUTION_CAP};
use gentle_core::quiver::QuiverPresentation;
use gentle_core::string::{string_module, StringWord};
use gentle_core::surface::{algebra_from_triangulation, inner_triangles, verify_inner_triangle_count};
use gentle_core::{validate_gentle, Field, GentleAlgebra, Rational, F2147483647};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::dsl::{parse_presentation, serialize_presentation, DslError};
use crate::surface_format::{parse_triangulation, SurfaceFormatError};

#[derive(Parser, Debug)]
#[command(
    name = "gentle",
    version,
    about = "Gorenstein-projective modules and singularity categories of gentle algebras"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the gentle axioms.
    Validate { file: PathBuf },
    /// List the cycles of relations.
    Cycles { file: PathBuf },
    /// Classify the indecomposable Gorenstein-projective modules.
    Gp { file: PathBuf },
    /// Describe the singularity category.
    Dsg { file: PathBuf },
    /// Check every string module up to a length against the classification.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_letters: usize,
        /// Highest Ext degree checked; defaults to 2 * arrows + 4.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = FieldChoice::Q)]
        field: FieldChoice,
    },
    /// The stable category of Gorenstein-projectives.
    Stable { file: PathBuf },
    /// Ext against the algebra for one string module.
    Ext {
        file: PathBuf,
        /// Letters in walk order, e.g. `i,d,a,f,k`, `b,a^-1` or `@8`.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = FieldChoice::Q)]
        field: FieldChoice,
    },
    /// Compare the cycle-length invariant of two algebras.
    Compare { left: PathBuf, right: PathBuf },
    /// Inner triangles of a triangulation and the singularity category of its algebra.
    Surface {
        file: PathBuf,
        /// Write the algebra of the triangulation here.
        #[arg(long)]
        emit_algebra: Option<PathBuf>,
    },
    /// Dimension and injective dimension of the algebra.
    Dim { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldChoice {
    /// Rational numbers.
    #[value(name = "q")]
    Q,
    /// Integers modulo 2^31 - 1.
    #[value(name = "Fp")]
    Fp,
}

impl FieldChoice {
    fn name(self) -> &'static str {
        match self {
            FieldChoice::Q => "q",
            FieldChoice::Fp => "Fp",
        }
    }
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

enum Failure {
    Invalid { kind: &'static str, message: String, extra: Value },
    NotGentle { file: PathBuf, violations: Value },
    Internal { kind: &'static str, message: String },
}

impl Failure {
    fn invalid(kind: &'static str, message: impl Into<String>) -> Self {
        Failure::Invalid { kind, message: message.into(), extra: json!({}) }
    }
}

/// A finished report: the payload and whether it records a contradiction.
struct Report {
    payload: Value,
    status: &'static str,
    code: i32,
}

impl Report {
    fn ok(payload: Value) -> Self {
        Report { payload, status: "ok", code: EXIT_OK }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    render(dispatch(&cli.command), cli.pretty)
}

fn render(result: Result<Report, Failure>, pretty: bool) -> Outcome {
    let (mut payload, status, code) = match result {
        Ok(r) => (r.payload, r.status, r.code),
        Err(Failure::Invalid { kind, message, extra }) => {
            let mut err = json!({ "kind": kind, "message": message });
            if let (Value::Object(e), Value::Object(x)) = (&mut err, extra) {
                e.extend(x);
            }
            (json!({ "error": err }), "error", EXIT_INVALID)
        }
        Err(Failure::NotGentle { file, violations }) => (
            json!({
                "error": { "kind": "not-gentle", "message": "the presentation is not gentle", "file": file.display().to_string() },
                "violations": violations,
            }),
            "not-gentle",
            EXIT_INVALID,
        ),
        Err(Failure::Internal { kind, message }) => {
            (json!({ "error": { "kind": kind, "message": message } }), "error", EXIT_INTERNAL)
        }
    };
    if let Value::Object(map) = &mut payload {
        map.insert("status".into(), Value::from(status));
    }
    let mut stdout = if pretty {
        serde_json::to_string_pretty(&payload).expect("JSON values serialize")
    } else {
        serde_json::to_string(&payload).expect("JSON values serialize")
    };
    stdout.push('\n');
    Outcome { code, stdout, stderr: String::new() }
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Validate { file } => validate(file),
        Command::Cycles { file } => cycles(&load_gentle(file)?),
        Command::Gp { file } => gp(&load_gentle(file)?),
        Command::Dsg { file } => Ok(Report::ok(descriptor_json(&load_gentle(file)?))),
        Command::Oracle { file, max_letters, bound, field } => {
            let alg = load_gentle(file)?;
            match field {
                FieldChoice::Q => oracle::<Rational>(&alg, *max_letters, *bound, *field),
                FieldChoice::Fp => oracle::<F2147483647>(&alg, *max_letters, *bound, *field),
            }
        }
        Command::Stable { file } => stable(&load_gentle(file)?),
        Command::Ext { file, word, bound, field } => {
            let alg = load_gentle(file)?;
            match field {
                FieldChoice::Q => ext::<Rational>(&alg, word, *bound, *field),
                FieldChoice::Fp => ext::<F2147483647>(&alg, word, *bound, *field),
            }
        }
        Command::Compare { left, right } => compare(left, right),
        Command::Surface { file, emit_algebra } => surface(file, emit_algebra.as_deref()),
        Command::Dim { file } => dim(&load_gentle(file)?),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid {
        kind: "io",
        message: format!("cannot read {}: {e}", path.display()),
        extra: json!({ "file": path.display().to_string() }),
    })
}

fn load_presentation(path: &Path) -> Result<QuiverPresentation, Failure> {
    let text = read(path)?;
    parse_presentation(&text).map_err(|e: DslError| {
        let at = e.location();
        Failure::Invalid {
            kind: "parse",
            message: e.to_string(),
            extra: json!({ "file": path.display().to_string(), "line": at.line, "column": at.column }),
        }
    })
}

fn load_gentle(path: &Path) -> Result<GentleAlgebra, Failure> {
    let q = load_presentation(path)?;
    validate_gentle(&q)
        .map_err(|v| Failure::NotGentle { file: path.to_path_buf(), violations: violations_json(&q, &v) })
}

fn violations_json(q: &QuiverPresentation, violations: &[GentleViolation]) -> Value {
    let names = |xs: &[usize]| xs.iter().map(|&a| q.arrow_name(a).to_string()).collect::<Vec<_>>();
    let side = |s: &Side| match s {
        Side::After => "after",
        Side::Before => "before",
    };
    violations
        .iter()
        .map(|v| {
            let witness = match v {
                GentleViolation::TooManyArrows { vertex, direction, arrows } => json!({
                    "vertex": q.vertex_name(*vertex),
                    "direction": if *direction == Direction::Incoming { "incoming" } else { "outgoing" },
                    "arrows": names(arrows),
                }),
                GentleViolation::TooManyRelations { arrow, side: s, partners }
                | GentleViolation::TooManyContinuations { arrow, side: s, partners } => json!({
                    "arrow": q.arrow_name(*arrow),
                    "side": side(s),
                    "partners": names(partners),
                }),
                GentleViolation::RelationFreeCycle { arrows } => json!({ "arrows": names(arrows) }),
            };
            json!({ "axiom": v.axiom().to_string(), "message": v.describe(q), "witness": witness })
        })
        .collect()
}

fn validate(file: &Path) -> Result<Report, Failure> {
    let q = load_presentation(file)?;
    let base = json!({
        "vertices": q.vertex_count(),
        "arrows": q.arrow_count(),
        "relations": q.relations().len(),
    });
    let mut payload = base;
    let map = payload.as_object_mut().expect("object literal");
    match validate_gentle(&q) {
        Ok(alg) => {
            map.insert("gentle".into(), true.into());
            map.insert("dimension".into(), alg.dimension().into());
            map.insert("violations".into(), json!([]));
            Ok(Report::ok(payload))
        }
        Err(v) => {
            map.insert("gentle".into(), false.into());
            map.insert("violations".into(), violations_json(&q, &v));
            Ok(Report { payload, status: "not-gentle", code: EXIT_INVALID })
        }
    }
}

fn cycles(alg: &GentleAlgebra) -> Result<Report, Failure> {
    let q = alg.quiver();
    let list: Vec<Value> = alg
        .critical_cycles()
        .iter()
        .map(|c| json!({ "arrows": c.names(q), "length": c.len(), "notation": c.notation(q) }))
        .collect();
    Ok(Report::ok(json!({ "cycles": list })))
}

fn gp(alg: &GentleAlgebra) -> Result<Report, Failure> {
    let q = alg.quiver();
    let c = classify_gp(alg);
    let projectives: Vec<Value> = c
        .projectives
        .iter()
        .map(|&v| {
            let p = alg.indecomposable_projective(v).expect("vertex in range");
            json!({
                "vertex": q.vertex_name(v),
                "word": p.word.to_text(q),
                "dimension_vector": p.dimension_vector,
                "radical_summands": p.radical_summands.iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let nonprojective: Vec<Value> = c
        .nonprojective
        .iter()
        .map(|g| {
            json!({
                "module": format!("R({})", q.arrow_name(g.arrow)),
                "arrow": q.arrow_name(g.arrow),
                "cycle": c.cycles[g.cycle].notation(q),
                "word": g.summand.word.to_text(q),
                "dimension_vector": g.summand.dimension_vector,
                "dimension": g.summand.dimension_vector.iter().sum::<usize>(),
            })
        })
        .collect();
    Ok(Report::ok(json!({
        "vertices": q.vertices(),
        "projectives": projectives,
        "nonprojective": nonprojective,
        "projective_count": c.projectives.len(),
        "nonprojective_count": c.nonprojective.len(),
    })))
}

fn descriptor_json(alg: &GentleAlgebra) -> Value {
    let d = singularity_descriptor(alg);
    let factors: Vec<Value> =
        d.factors.iter().map(|f| json!({ "cycle": f.cycle, "length": f.length, "label": f.label })).collect();
    json!({ "descriptor": d.lengths, "factors": factors, "indecomposable_objects": d.object_count() })
}

#[derive(Serialize)]
struct PeriodJson {
    start: usize,
    length: usize,
}

fn profile_json(p: &ExtProfile) -> Value {
    json!({
        "bound": p.bound,
        "ext": p.ext,
        "syzygy_dimension_vectors": p.syzygy_dimension_vectors,
        "period": p.period.map(|p| PeriodJson { start: p.start, length: p.length }),
        "projective_dimension": p.projective_dimension,
        "certification": p.certification.as_str(),
    })
}

fn certificate_json(alg: &GentleAlgebra, check: &WordCheck) -> Value {
    let q = alg.quiver();
    let c = &check.certificate;
    json!({
        "word": check.word.to_text(q),
        "dimension_vector": check.word.dimension_vector(q),
        "predicted_gp": check.predicted_gp,
        "verdict": c.verdict.as_str(),
        "ext": c.profile.ext,
        "period": c.profile.period.map(|p| PeriodJson { start: p.start, length: p.length }),
        "certification": c.profile.certification.as_str(),
        "projective_dimension": c.profile.projective_dimension,
        "embedding_obstruction": c.embedding_obstruction,
    })
}

fn oracle<F: Field>(
    alg: &GentleAlgebra,
    max_letters: usize,
    bound: Option<usize>,
    field: FieldChoice,
) -> Result<Report, Failure> {
    let bound = bound.unwrap_or_else(|| default_bound(alg));
    if bound == 0 {
        return Err(Failure::invalid("invalid-argument", "--bound must be positive"));
    }
    let cat = ModuleCategory::<F>::new(alg);
    let classification = classify_gp(alg);
    let words = sweep_words(alg, &classification, max_letters);
    let checks: Vec<WordCheck> = words.par_iter().map(|w| certify_word(&cat, &classification, w, bound)).collect();
    let mut warnings = Vec::new();
    match injective_dimension::<F>(alg, DEFAULT_RESOLUTION_CAP) {
        Ok(d) if d > bound => warnings.push(format!("bound {bound} is below the injective dimension {d}")),
        Ok(_) => {}
        Err(e) => return Err(Failure::Internal { kind: "resolution", message: e.to_string() }),
    }
    let header = json!({ "field": field.name(), "bound": bound, "max_letters": max_letters, "warnings": warnings });
    Ok(oracle_report(alg, &checks, header))
}

fn oracle_report(alg: &GentleAlgebra, checks: &[WordCheck], header: Value) -> Report {
    let q = alg.quiver();
    let count = |v: Verdict| checks.iter().filter(|c| c.certificate.verdict == v).count();
    let mut gp_by_period: BTreeMap<String, usize> = BTreeMap::new();
    for c in checks.iter().filter(|c| c.certificate.verdict == Verdict::Gp) {
        let key = c.certificate.period().map_or_else(|| "projective".to_string(), |p| p.length.to_string());
        *gp_by_period.entry(key).or_insert(0) += 1;
    }
    let disagreements: Vec<String> = checks.iter().filter(|c| c.disagrees()).map(|c| c.word.to_text(q)).collect();
    let agreement = disagreements.is_empty();
    let mut payload = json!({
        "agreement": agreement,
        "words": checks.len(),
        "counts": {
            "gp": count(Verdict::Gp),
            "not_gp": count(Verdict::NotGp),
            "inconclusive": count(Verdict::Inconclusive),
            "disagreements": disagreements.len(),
            "gp_by_period": gp_by_period,
        },
        "certificates": checks.iter().map(|c| certificate_json(alg, c)).collect::<Vec<_>>(),
        "disagreements": disagreements,
    });
    if let (Value::Object(p), Value::Object(h)) = (&mut payload, header) {
        p.extend(h);
    }
    if agreement {
        Report::ok(payload)
    } else {
        Report { payload, status: "error", code: EXIT_INTERNAL }
    }
}

fn stable(alg: &GentleAlgebra) -> Result<Report, Failure> {
    let q = alg.quiver();
    let cat = ModuleCategory::<Rational>::new(alg);
    let t = stable_category_table(&cat)
        .map_err(|e| Failure::Internal { kind: "theorem-violation", message: e.to_string() })?;
    let name = |i: usize| format!("R({})", q.arrow_name(t.objects[i]));
    Ok(Report::ok(json!({
        "objects": (0..t.objects.len()).map(name).collect::<Vec<_>>(),
        "omega": t.omega.iter().map(|&i| name(i)).collect::<Vec<_>>(),
        "shift": t.shift.iter().map(|&i| name(i)).collect::<Vec<_>>(),
        "orbits": t.orbits.iter().map(|o| o.iter().map(|&i| name(i)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "stable_hom": t.stable_hom,
    })))
}

fn ext<F: Field>(alg: &GentleAlgebra, word: &str, bound: Option<usize>, field: FieldChoice) -> Result<Report, Failure> {
    let bound = bound.unwrap_or_else(|| default_bound(alg));
    if bound == 0 {
        return Err(Failure::invalid("invalid-argument", "--bound must be positive"));
    }
    let w = StringWord::parse(alg, word)
        .map_err(|e| Failure::invalid("invalid-word", format!("`{word}` is not a string: {e}")))?;
    let cat = ModuleCategory::<F>::new(alg);
    let profile = cat.ext_profile(&string_module(alg, &w), bound);
    let mut payload = profile_json(&profile);
    let map = payload.as_object_mut().expect("object literal");
    map.insert("word".into(), w.to_text(alg.quiver()).into());
    map.insert("field".into(), field.name().into());
    Ok(Report::ok(payload))
}

fn compare(left: &Path, right: &Path) -> Result<Report, Failure> {
    let (a, b) = (load_gentle(left)?, load_gentle(right)?);
    let c = compare_derived_invariant(&a, &b);
    Ok(Report::ok(json!({
        "compatible": c.compatible(),
        "left": { "file": left.display().to_string(), "descriptor": c.left.lengths },
        "right": { "file": right.display().to_string(), "descriptor": c.right.lengths },
        "witness": c.witness.map(|w| json!({ "length": w.length, "left": w.left, "right": w.right })),
        "scope": "necessary condition for derived equivalence",
    })))
}

fn surface(file: &Path, emit: Option<&Path>) -> Result<Report, Failure> {
    let text = read(file)?;
    let t = parse_triangulation(&text).map_err(|e| match e {
        SurfaceFormatError::Syntax(s) => Failure::Invalid {
            kind: "parse",
            message: s.to_string(),
            extra: json!({ "file": file.display().to_string(), "line": s.location.line, "column": s.location.column }),
        },
        SurfaceFormatError::Invalid(v) => Failure::Invalid {
            kind: "invalid-triangulation",
            message: v.to_string(),
            extra: json!({ "file": file.display().to_string() }),
        },
    })?;
    let q = algebra_from_triangulation(&t);
    let report = verify_inner_triangle_count(&t).map_err(|v| Failure::Internal {
        kind: "theorem-violation",
        message: format!(
            "triangulation algebra is not gentle: {}",
            v.iter().map(|x| x.describe(&q)).collect::<Vec<_>>().join("; ")
        ),
    })?;
    if let Some(out) = emit {
        std::fs::write(out, serialize_presentation(&q)).map_err(|e| Failure::Invalid {
            kind: "io",
            message: format!("cannot write {}: {e}", out.display()),
            extra: json!({ "file": out.display().to_string() }),
        })?;
    }
    let inner = inner_triangles(&t);
    let listed: Vec<Vec<&str>> =
        inner.triangles.iter().map(|&k| t.triangles()[k].iter().map(|&s| t.side_name(s)).collect()).collect();
    let payload = json!({
        "internal_arcs": t.internal_arcs().len(),
        "boundary_segments": t.boundary_segments().len(),
        "triangles": t.triangles().len(),
        "inner_triangles": { "count": inner.count, "triangles": listed },
        "descriptor": report.descriptor,
        "count_matches": report.holds,
        "algebra": { "vertices": q.vertex_count(), "arrows": q.arrow_count(), "relations": q.relations().len() },
        "emitted": emit.map(|p| p.display().to_string()),
    });
    Ok(if report.holds { Report::ok(payload) } else { Report { payload, status: "error", code: EXIT_INTERNAL } })
}

fn dim(alg: &GentleAlgebra) -> Result<Report, Failure> {
    let d = injective_dimension::<Rational>(alg, DEFAULT_RESOLUTION_CAP)
        .map_err(|e| Failure::Internal { kind: "resolution", message: e.to_string() })?;
    Ok(Report::ok(json!({ "dimension": alg.dimension(), "injective_dimension": d })))
}
