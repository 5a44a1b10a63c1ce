//! Command line front end for the exact desirability-cone library: every
//! input and output is a JSON document whose rationals are "p/q" strings.
//!
//! Decision commands (check, member, lmember, equiv, separate) exit with 0
//! for yes, 1 for no, and 2 on error; transforms exit with 0 or 2.

mod doc;

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use doc::{parse_document, serialize_document, string_rows, strings, Document, SCHEMA};
use lexcredal::testkit::{random_gamble, SampleConfig};
use lexcredal::{
    condition_credal, condition_generator_cone, condition_halfspace_cone, condition_orthogonal,
    condition_stochastic, equiv_class_member, from_credal, generators_to_halfspaces,
    lcredal_member, lp_decompose, orthogonal_from_stochastic, polar_of_generators,
    rational_to_string, separate_almost, separate_lex, stochastic_from_orthogonal, to_credal,
    Coherence, CoherenceViolation, ConditionedGenerators, Error, EventSubset, Gamble,
    GeneratorCone, RMatrix, SemispaceFamily,
};

/// Environment variable holding the sampling seed used by `to-lcredal`.
const SEED_VAR: &str = "LEXCREDAL_SEED";

#[derive(Parser)]
#[command(
    name = "lexcredal",
    version,
    about = "Exact rational toolkit for desirability cones, credal sets, and lexicographic probabilities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a cone for coherence and print a certificate on failure.
    Check {
        /// Generator-cone or halfspace-cone document (path or - for stdin).
        cone: String,
    },
    /// Decide whether a gamble belongs to a cone.
    Member {
        /// Generator-cone or halfspace-cone document.
        cone: String,
        /// Gamble document.
        gamble: String,
    },
    /// Compute the polar of a cone, swapping generator and halfspace form.
    Polar {
        /// Generator-cone or halfspace-cone document.
        cone: String,
    },
    /// Map a coherent cone to its credal polytope of probability vectors.
    ToCredal {
        /// Halfspace-cone document, or a generator-cone taken up to closure.
        cone: String,
    },
    /// Map a credal polytope back to the halfspace cone it determines.
    FromCredal {
        /// Credal-polytope document.
        polytope: String,
    },
    /// Sample full-rank stochastic members of the lexicographic credal set.
    ToLcredal {
        /// Generator-cone document for a coherent cone.
        cone: String,
        /// Number of distinct member matrices to look for.
        #[arg(long, default_value_t = 3)]
        witnesses: usize,
    },
    /// Decide whether a matrix belongs to a cone's lexicographic credal set.
    Lmember {
        /// Generator-cone document for a coherent cone.
        cone: String,
        /// Matrix document.
        matrix: String,
    },
    /// Condition a cone, credal polytope, or representative matrix on an event.
    Condition {
        /// Cone, credal-polytope, or matrix document.
        object: String,
        /// Event document naming the 1-based outcomes kept.
        #[arg(long = "on", value_name = "EVENT")]
        on: String,
    },
    /// Factor a column-lex-positive matrix into unit lower triangular times nonnegative.
    Decompose {
        /// Square matrix document with lex-positive columns.
        matrix: String,
    },
    /// Compute the orthogonal lex-positive representative of a stochastic matrix.
    Gs {
        /// Full-rank row-stochastic matrix document.
        matrix: String,
    },
    /// Compute the stochastic representative of an orthogonal lex-positive matrix.
    Stochastic {
        /// Row-orthogonal matrix document with lex-positive columns.
        matrix: String,
    },
    /// Produce a witness separating a gamble from a coherent cone.
    Separate {
        /// Generator-cone or halfspace-cone document.
        cone: String,
        /// Gamble document for the point to separate.
        gamble: String,
    },
    /// Decide whether a stochastic matrix lies in the class of an orthogonal one.
    Equiv {
        /// Full-rank row-stochastic matrix document.
        stochastic: String,
        /// Row-orthogonal matrix document with lex-positive columns.
        orthogonal: String,
    },
}

#[derive(Serialize)]
struct VerdictDoc {
    schema: u32,
    kind: &'static str,
    command: &'static str,
    answer: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct NoteDoc {
    schema: u32,
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct DecompositionDoc {
    schema: u32,
    kind: &'static str,
    lower: Vec<Vec<String>>,
    nonneg: Vec<Vec<String>>,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { cone } => cmd_check(&cone),
        Command::Member { cone, gamble } => cmd_member(&cone, &gamble),
        Command::Polar { cone } => cmd_polar(&cone),
        Command::ToCredal { cone } => cmd_to_credal(&cone),
        Command::FromCredal { polytope } => cmd_from_credal(&polytope),
        Command::ToLcredal { cone, witnesses } => cmd_to_lcredal(&cone, witnesses),
        Command::Lmember { cone, matrix } => cmd_lmember(&cone, &matrix),
        Command::Condition { object, on } => cmd_condition(&object, &on),
        Command::Decompose { matrix } => cmd_decompose(&matrix),
        Command::Gs { matrix } => cmd_gs(&matrix),
        Command::Stochastic { matrix } => cmd_stochastic(&matrix),
        Command::Separate { cone, gamble } => cmd_separate(&cone, &gamble),
        Command::Equiv {
            stochastic,
            orthogonal,
        } => cmd_equiv(&stochastic, &orthogonal),
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("failed to read stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("failed to read {path}"))
    }
}

fn load(path: &str) -> Result<Document> {
    parse_document(&read_source(path)?).with_context(|| format!("invalid document in {path}"))
}

fn load_gamble(path: &str) -> Result<Gamble> {
    match load(path)? {
        Document::Gamble(g) => Ok(g),
        other => bail!("expected a gamble document, found {}", other.kind()),
    }
}

fn load_matrix(path: &str) -> Result<RMatrix> {
    match load(path)? {
        Document::Matrix(m) => Ok(m),
        other => bail!("expected a matrix document, found {}", other.kind()),
    }
}

fn load_event(path: &str) -> Result<EventSubset> {
    match load(path)? {
        Document::Event(e) => Ok(e),
        other => bail!("expected an event document, found {}", other.kind()),
    }
}

fn emit(doc: &Document) {
    println!("{}", serialize_document(doc));
}

fn emit_verdict(command: &'static str, answer: &'static str, certificate: Option<serde_json::Value>) {
    let v = VerdictDoc {
        schema: SCHEMA,
        kind: "verdict",
        command,
        answer,
        certificate,
    };
    println!("{}", serde_json::to_string(&v).expect("verdict serializes"));
}

fn note_json(message: &str, certificate: Option<serde_json::Value>) -> String {
    let n = NoteDoc {
        schema: SCHEMA,
        kind: "note",
        message: message.to_owned(),
        certificate,
    };
    serde_json::to_string(&n).expect("note serializes")
}

fn certificate_json(v: &CoherenceViolation) -> serde_json::Value {
    match v {
        CoherenceViolation::MissingBasis { index } => {
            json!({"axiom": v.axiom(), "missing_basis_outcome": index + 1})
        }
        CoherenceViolation::OriginReachable { coefficients } => {
            let c: Vec<String> = coefficients.iter().map(rational_to_string).collect();
            json!({"axiom": v.axiom(), "coefficients": c})
        }
        CoherenceViolation::SureLoss { witness } => {
            json!({"axiom": v.axiom(), "witness": strings(witness)})
        }
    }
}

fn decision(command: &'static str, yes: bool, answer_yes: &'static str, answer_no: &'static str) -> ExitCode {
    if yes {
        emit_verdict(command, answer_yes, None);
        ExitCode::SUCCESS
    } else {
        emit_verdict(command, answer_no, None);
        ExitCode::from(1)
    }
}

fn cmd_check(cone: &str) -> Result<ExitCode> {
    let verdict = match load(cone)? {
        Document::GeneratorCone(k) => k.is_coherent_desirable(),
        Document::HalfspaceCone(k) => k.is_coherent_almost(),
        other => bail!(
            "check expects a generator-cone or halfspace-cone, found {}",
            other.kind()
        ),
    };
    match verdict {
        Coherence::Coherent => {
            emit_verdict("check", "coherent", None);
            Ok(ExitCode::SUCCESS)
        }
        Coherence::Incoherent(v) => {
            emit_verdict("check", "incoherent", Some(certificate_json(&v)));
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_member(cone: &str, gamble: &str) -> Result<ExitCode> {
    let g = load_gamble(gamble)?;
    let member = match load(cone)? {
        Document::GeneratorCone(k) => k.contains(&g)?,
        Document::HalfspaceCone(k) => k.contains(&g)?,
        other => bail!(
            "member expects a generator-cone or halfspace-cone, found {}",
            other.kind()
        ),
    };
    Ok(decision("member", member, "member", "not-member"))
}

fn cmd_polar(cone: &str) -> Result<ExitCode> {
    match load(cone)? {
        Document::GeneratorCone(k) => emit(&Document::HalfspaceCone(polar_of_generators(&k))),
        Document::HalfspaceCone(k) => {
            let rays: Vec<Gamble> = k
                .normals()
                .iter()
                .filter(|v| !v.is_zero())
                .cloned()
                .collect();
            if rays.is_empty() {
                println!(
                    "{}",
                    note_json("polar cone contains only the origin", None)
                );
            } else {
                emit(&Document::GeneratorCone(GeneratorCone::new(k.dim(), rays)?));
            }
        }
        other => bail!(
            "polar expects a generator-cone or halfspace-cone, found {}",
            other.kind()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_to_credal(cone: &str) -> Result<ExitCode> {
    let h = match load(cone)? {
        Document::HalfspaceCone(k) => k,
        Document::GeneratorCone(k) => generators_to_halfspaces(&k),
        other => bail!(
            "to-credal expects a halfspace-cone or generator-cone, found {}",
            other.kind()
        ),
    };
    emit(&Document::CredalPolytope(to_credal(&h)?));
    Ok(ExitCode::SUCCESS)
}

fn cmd_from_credal(polytope: &str) -> Result<ExitCode> {
    match load(polytope)? {
        Document::CredalPolytope(p) => {
            emit(&Document::HalfspaceCone(from_credal(&p)));
            Ok(ExitCode::SUCCESS)
        }
        other => bail!("from-credal expects a credal-polytope, found {}", other.kind()),
    }
}

fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(text) => text
            .parse::<u64>()
            .with_context(|| format!("{SEED_VAR} must be an unsigned integer, found {text:?}")),
        Err(_) => Ok(0),
    }
}

fn cmd_to_lcredal(cone: &str, witnesses: usize) -> Result<ExitCode> {
    if witnesses == 0 {
        bail!("--witnesses must be at least 1");
    }
    let k = match load(cone)? {
        Document::GeneratorCone(k) => k,
        other => bail!("to-lcredal expects a generator-cone, found {}", other.kind()),
    };
    let cfg = SampleConfig::new(seed_from_env()?);
    let mut rng = cfg.rng();
    let mut members: Vec<RMatrix> = Vec::new();
    for _ in 0..64 * witnesses + 256 {
        if members.len() == witnesses {
            break;
        }
        let g = random_gamble(&mut rng, k.dim(), &cfg);
        if k.contains(&g)? {
            continue;
        }
        let witness = separate_lex(&k, &g)?;
        let a = witness
            .matrix()
            .expect("lexicographic separation yields a matrix")
            .clone();
        let p = stochastic_from_orthogonal(&a)?;
        if !members.contains(&p) {
            members.push(p);
        }
    }
    emit(&Document::SemispaceFamily(SemispaceFamily::new(
        k.dim(),
        members,
    )?));
    Ok(ExitCode::SUCCESS)
}

fn cmd_lmember(cone: &str, matrix: &str) -> Result<ExitCode> {
    let k = match load(cone)? {
        Document::GeneratorCone(k) => k,
        other => bail!("lmember expects a generator-cone, found {}", other.kind()),
    };
    let p = load_matrix(matrix)?;
    let member = lcredal_member(&k, &p)?;
    Ok(decision("lmember", member, "member", "not-member"))
}

fn report_coherence(c: &Coherence) {
    match c {
        Coherence::Coherent => eprintln!("{}", note_json("conditioned cone is coherent", None)),
        Coherence::Incoherent(v) => eprintln!(
            "{}",
            note_json("conditioned cone is incoherent", Some(certificate_json(v)))
        ),
    }
}

fn cmd_condition(object: &str, on: &str) -> Result<ExitCode> {
    let event = load_event(on)?;
    match load(object)? {
        Document::HalfspaceCone(k) => {
            let (cond, coherence) = condition_halfspace_cone(&k, &event)?;
            emit(&Document::HalfspaceCone(cond));
            report_coherence(&coherence);
        }
        Document::GeneratorCone(k) => {
            let (cond, coherence) = condition_generator_cone(&k, &event)?;
            match cond {
                ConditionedGenerators::Cone(c) => emit(&Document::GeneratorCone(c)),
                ConditionedGenerators::Origin => println!(
                    "{}",
                    note_json("conditioned cone contains only the origin", None)
                ),
                ConditionedGenerators::Empty => {
                    println!("{}", note_json("conditioned cone is empty", None))
                }
            }
            report_coherence(&coherence);
        }
        Document::CredalPolytope(p) => match condition_credal(&p, &event)? {
            Some(q) => emit(&Document::CredalPolytope(q)),
            None => println!(
                "{}",
                note_json(
                    "conditioned credal set is undefined: no vertex gives the event positive probability",
                    None
                )
            ),
        },
        Document::Matrix(m) => {
            let cond = if m.is_stochastic() && m.is_full_rank() {
                condition_stochastic(&m, &event)?
            } else {
                condition_orthogonal(&m, &event).context(
                    "matrix is neither full-rank stochastic nor a lex-positive row-orthogonal representative",
                )?
            };
            emit(&Document::Matrix(cond));
        }
        other => bail!(
            "condition expects a cone, credal-polytope, or matrix, found {}",
            other.kind()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decompose(matrix: &str) -> Result<ExitCode> {
    let m = load_matrix(matrix)?;
    let d = lp_decompose(&m)?;
    let out = DecompositionDoc {
        schema: SCHEMA,
        kind: "decomposition",
        lower: string_rows(d.lower().rows()),
        nonneg: string_rows(d.nonneg().rows()),
    };
    println!("{}", serde_json::to_string(&out).expect("decomposition serializes"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_gs(matrix: &str) -> Result<ExitCode> {
    let m = load_matrix(matrix)?;
    emit(&Document::Matrix(orthogonal_from_stochastic(&m)?));
    Ok(ExitCode::SUCCESS)
}

fn cmd_stochastic(matrix: &str) -> Result<ExitCode> {
    let m = load_matrix(matrix)?;
    emit(&Document::Matrix(stochastic_from_orthogonal(&m)?));
    Ok(ExitCode::SUCCESS)
}

fn cmd_separate(cone: &str, gamble: &str) -> Result<ExitCode> {
    let g = load_gamble(gamble)?;
    let outcome = match load(cone)? {
        Document::HalfspaceCone(k) => separate_almost(&k, &g),
        Document::GeneratorCone(k) => separate_lex(&k, &g),
        other => bail!(
            "separate expects a generator-cone or halfspace-cone, found {}",
            other.kind()
        ),
    };
    match outcome {
        Ok(witness) => {
            if let Some(direction) = witness.direction() {
                emit(&Document::Gamble(direction.clone()));
            } else if let Some(matrix) = witness.matrix() {
                emit(&Document::Matrix(matrix.clone()));
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::NoSeparation) => {
            emit_verdict("separate", "no-separation", None);
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_equiv(stochastic: &str, orthogonal: &str) -> Result<ExitCode> {
    let p = load_matrix(stochastic)?;
    let a = load_matrix(orthogonal)?;
    let member = equiv_class_member(&p, &a)?;
    Ok(decision("equiv", member, "member", "not-member"))
}
