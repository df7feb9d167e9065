//! Command definitions and dispatch.
//!
//! Exit status: 0 on success, 1 when the answer to the question asked is
//! "no" (`iso`: not isomorphic; `check-hom`: a relation fails; `derive`:
//! inconsistent images; `symmetric`: not symmetric; `aut-gen`: the requested
//! automorphism does not exist for this algebra; `cross-check-aut`: an
//! unrecognized automorphism was found), 2 on usage, parse or engine errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qgwa::algebra::{Algebra, AlgebraElement};
use qgwa::classify::{self, CrossCheckGrid};
use qgwa::derivations::{self, DerivationError, DerivationSpec};
use qgwa::field::{FieldSpec, Search};
use qgwa::morphisms::{self, IntMatrix, MorphismError, MorphismSpec};
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_element, parse_field, parse_scalar, parse_spec, ParseError};

#[derive(Debug, Parser)]
#[command(
    name = "qgwa",
    version,
    about = "Exact arithmetic and classification for quantum generalized Weyl algebras"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Default field (`Q`, `Q(zeta(n))` or `n`) for specs without `field=`.
    #[arg(long, global = true, env = "QGWA_FIELD")]
    pub field: Option<String>,
    /// Degree bound for derivation ansatz polynomials.
    #[arg(long, global = true, default_value_t = 4)]
    pub deg_bound: u32,
    /// Number of scalars per grid axis in `cross-check-aut`.
    #[arg(long, global = true, default_value_t = 6)]
    pub grid_size: usize,
    /// Read specs from files, in order, instead of the command line.
    #[arg(long = "spec-file", global = true)]
    pub spec_file: Vec<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an element.
    Nf {
        #[arg(long)]
        spec: Option<String>,
        expr: String,
    },
    /// Product of elements, left to right.
    Mul {
        #[arg(long)]
        spec: Option<String>,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Decide whether two algebras are isomorphic.
    Iso { specs: Vec<String> },
    /// Describe the automorphism group.
    Aut { spec: Option<String> },
    /// Check that images of y, h, x define a homomorphism.
    CheckHom {
        #[arg(long)]
        source: Option<String>,
        #[arg(long)]
        target: Option<String>,
        #[arg(long, num_args = 3, value_names = ["Y", "H", "X"], allow_hyphen_values = true, required = true)]
        images: Vec<String>,
    },
    /// Build a distinguished automorphism.
    AutGen {
        kind: GenKind,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mu: String,
        /// Shift `k` in `y -> mu y h^k` (Laurent ring).
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        /// Matrix entries `m11,m12,m21,m22` for `unit-matrix`.
        #[arg(long, default_value = "1,0,0,1", allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        t: String,
    },
    /// Derivation determined by images of y, h, x.
    Derive {
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, num_args = 3, value_names = ["Y", "H", "X"], allow_hyphen_values = true, required = true)]
        images: Vec<String>,
        /// Iteration bound for the nilpotency and finiteness probes.
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
    /// Basis of homogeneous derivations of a given weight.
    DerivationSpace {
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        weight: i64,
        /// Report the locally finite derivations instead.
        #[arg(long)]
        locally_finite: bool,
    },
    /// Whether a(h) satisfies delta a(h) = h^l a(gamma h^-1).
    Symmetric { spec: Option<String> },
    /// Indecomposable elements of the monoid Lambda_N.
    Lambda {
        #[arg(long = "N")]
        n: i64,
        #[arg(long)]
        radius: Option<i64>,
    },
    /// Search a grid of candidate maps for automorphisms outside the descriptor.
    CrossCheckAut { spec: Option<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Eta,
    Omega,
    OmegaSym,
    OmegaMinus1,
    UnitMatrix,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {err}")]
    Io { path: PathBuf, err: std::io::Error },
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    Classify(#[from] classify::ClassifyError),
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    code: i32,
    json: Value,
    text: String,
}

impl Reply {
    fn ok(json: Value, text: String) -> Self {
        Reply {
            code: 0,
            json,
            text,
        }
    }

    fn answer(yes: bool, json: Value, text: String) -> Self {
        Reply {
            code: if yes { 0 } else { 1 },
            json,
            text,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&r.json).expect("values serialize")
            } else {
                r.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: r.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let stderr = format!("error: {e}\n");
            let stdout = if cli.json {
                format!("{}\n", json!({ "error": e.to_string() }))
            } else {
                String::new()
            };
            Outcome {
                code: 2,
                stdout,
                stderr,
            }
        }
    }
}

struct Specs<'a> {
    cli: &'a Cli,
    next_file: std::cell::Cell<usize>,
}

impl Specs<'_> {
    fn default_field(&self) -> Result<Option<FieldSpec>, CliError> {
        self.cli
            .field
            .as_deref()
            .map(parse_field)
            .transpose()
            .map_err(CliError::from)
    }

    /// Inline text if given, otherwise the next `--spec-file`.
    fn load(&self, inline: Option<&str>, what: &str) -> Result<Algebra, CliError> {
        let text = match inline {
            Some(t) => t.to_string(),
            None => {
                let i = self.next_file.get();
                let path = self.cli.spec_file.get(i).ok_or_else(|| {
                    CliError::Usage(format!(
                        "missing {what} (give it inline or with --spec-file)"
                    ))
                })?;
                self.next_file.set(i + 1);
                std::fs::read_to_string(path).map_err(|err| CliError::Io {
                    path: path.clone(),
                    err,
                })?
            }
        };
        Ok(parse_spec(text.trim(), self.default_field()?)?)
    }
}

fn elem_json(u: &AlgebraElement) -> Value {
    json!({ "text": u.to_string(), "terms": u })
}

fn images_json(y: &AlgebraElement, h: &AlgebraElement, x: &AlgebraElement) -> Value {
    json!({ "y": y.to_string(), "h": h.to_string(), "x": x.to_string() })
}

fn morphism_json(m: &MorphismSpec) -> Value {
    images_json(m.img_y(), m.img_h(), m.img_x())
}

fn morphism_text(m: &MorphismSpec) -> String {
    format!("y -> {}\nh -> {}\nx -> {}", m.img_y(), m.img_h(), m.img_x())
}

fn derivation_json(d: &DerivationSpec) -> Value {
    images_json(d.img_y(), d.img_h(), d.img_x())
}

fn derivation_text(d: &DerivationSpec) -> String {
    format!(
        "d(y) = {}, d(h) = {}, d(x) = {}",
        d.img_y(),
        d.img_h(),
        d.img_x()
    )
}

fn images(alg: &Algebra, texts: &[String]) -> Result<[AlgebraElement; 3], CliError> {
    Ok([
        parse_element(&texts[0], alg)?,
        parse_element(&texts[1], alg)?,
        parse_element(&texts[2], alg)?,
    ])
}

fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let v: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--matrix expects four integers, got `{text}`")))?;
    match v[..] {
        [a, b, c, d] => Ok([[a, b], [c, d]]),
        _ => Err(CliError::Usage(format!(
            "--matrix expects four integers, got `{text}`"
        ))),
    }
}

fn dispatch(cli: &Cli) -> Result<Reply, CliError> {
    let specs = Specs {
        cli,
        next_file: std::cell::Cell::new(0),
    };
    match &cli.command {
        Command::Nf { spec, expr } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let u = parse_element(expr, &alg)?;
            Ok(Reply::ok(elem_json(&u), u.to_string()))
        }
        Command::Mul { spec, factors } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let mut acc = AlgebraElement::one(&alg);
            for f in factors {
                acc = &acc * &parse_element(f, &alg)?;
            }
            Ok(Reply::ok(elem_json(&acc), acc.to_string()))
        }
        Command::Iso { specs: inline } => {
            if inline.len() > 2 {
                return Err(CliError::Usage("iso takes two specs".into()));
            }
            let a1 = specs.load(inline.first().map(String::as_str), "first spec")?;
            let a2 = specs.load(inline.get(1).map(String::as_str), "second spec")?;
            let d = classify::decide_isomorphic(&a1, &a2)?;
            let mut j = serde_json::to_value(&d).expect("serializable");
            let mut text = format!(
                "isomorphic: {}\nsearch_complete: {}",
                d.isomorphic, d.search_complete
            );
            if let Some(w) = &d.witness {
                let iso = w.isomorphism(&a1, &a2)?;
                j["witness"]["map"] = morphism_json(&iso);
                text.push_str(&format!(
                    "\nwitness: a2(h) = ({}) * a1(({}) * h^{}), q {}\n{}",
                    w.alpha,
                    w.beta,
                    w.eps,
                    match w.q_match {
                        classify::QMatch::Same => "matches",
                        classify::QMatch::Inverted => "inverted",
                    },
                    morphism_text(&iso)
                ));
            }
            Ok(Reply::answer(d.isomorphic, j, text))
        }
        Command::Aut { spec } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let d = classify::automorphism_group(&alg)?;
            let mut j = serde_json::to_value(&d).expect("serializable");
            j["group"] = json!(d.to_string());
            Ok(Reply::ok(j, format!("Aut(A) = {d}")))
        }
        Command::CheckHom {
            source,
            target,
            images: texts,
        } => {
            let src = specs.load(source.as_deref(), "source spec")?;
            let tgt = match (target, cli.spec_file.len() > specs.next_file.get()) {
                (None, false) => src.clone(),
                (t, _) => specs.load(t.as_deref(), "target spec")?,
            };
            let [y, h, x] = images(&tgt, texts)?;
            let m = MorphismSpec::new(&src, y, h, x)?;
            let v = m.verify()?;
            let failing: Vec<String> = v.failing.iter().map(|r| r.to_string()).collect();
            let text = if v.ok {
                "homomorphism: yes".to_string()
            } else {
                format!("homomorphism: no\nfailing: {}", failing.join(", "))
            };
            let j = json!({ "ok": v.ok, "failing": v.failing, "images": morphism_json(&m) });
            Ok(Reply::answer(v.ok, j, text))
        }
        Command::AutGen {
            kind,
            spec,
            gamma,
            mu,
            shift,
            matrix,
            s,
            t,
        } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let f = alg.field();
            let built = match kind {
                GenKind::Eta => {
                    let (g, m) = (parse_scalar(gamma, f)?, parse_scalar(mu, f)?);
                    if *shift == 0 {
                        morphisms::eta(&alg, &g, &m)
                    } else {
                        morphisms::eta_shifted(&alg, &g, &m, *shift)
                    }
                    .map(Some)
                }
                GenKind::Omega => morphisms::omega(&alg).map(Some),
                GenKind::OmegaMinus1 => morphisms::omega_minus1(&alg).map(Some),
                GenKind::OmegaSym => Ok(morphisms::omega_sym(&alg)),
                GenKind::UnitMatrix => {
                    let m = parse_matrix(matrix)?;
                    morphisms::unit_case_automorphism(
                        &alg,
                        &m,
                        (parse_scalar(s, f)?, parse_scalar(t, f)?),
                    )
                    .map(Some)
                }
            };
            let kind_name = kind
                .to_possible_value()
                .expect("named")
                .get_name()
                .to_string();
            match built {
                Ok(Some(m)) => {
                    let ok = m.is_verified();
                    let j = json!({ "kind": kind_name, "exists": true, "verified": ok, "images": morphism_json(&m) });
                    Ok(Reply::answer(
                        ok,
                        j,
                        format!("{}\nverified: {ok}", morphism_text(&m)),
                    ))
                }
                Ok(None) => Ok(Reply::answer(
                    false,
                    json!({ "kind": kind_name, "exists": false, "reason": "a(h) is not symmetric" }),
                    format!("{kind_name}: does not exist (a(h) is not symmetric)"),
                )),
                Err(
                    e @ (MorphismError::GammaNotInCg(_)
                    | MorphismError::QNotMinusOne
                    | MorphismError::NotLaurent
                    | MorphismError::NotUnitCase
                    | MorphismError::MatrixNotInH),
                ) => Ok(Reply::answer(
                    false,
                    json!({ "kind": kind_name, "exists": false, "reason": e.to_string() }),
                    format!("{kind_name}: does not exist ({e})"),
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::Derive {
            spec,
            images: texts,
            bound,
        } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let [y, h, x] = images(&alg, texts)?;
            let d = match DerivationSpec::from_images(y, h, x) {
                Ok(d) => d,
                Err(DerivationError::InconsistentImages(r)) => {
                    return Ok(Reply::answer(
                        false,
                        json!({ "consistent": false, "failing": r }),
                        format!("not a derivation: relation {r} fails"),
                    ))
                }
                Err(e) => return Err(e.into()),
            };
            let mut degs = serde_json::Map::new();
            let mut text = vec![derivation_text(&d)];
            for (name, g) in [
                ("y", AlgebraElement::y(&alg)),
                ("h", AlgebraElement::h(&alg)),
                ("x", AlgebraElement::x(&alg)),
            ] {
                let deg = d.deg_d(&g, *bound)?;
                text.push(format!(
                    "deg_d({name}) = {}",
                    deg.map_or(format!("> {bound}"), |n| n.to_string())
                ));
                degs.insert(name.into(), json!(deg));
            }
            let nil = d.is_locally_nilpotent_probe(*bound);
            let fin = d.is_locally_finite_probe(*bound);
            text.push(format!("locally nilpotent within {bound}: {nil}"));
            text.push(format!("locally finite within {bound}: {fin}"));
            let j = json!({
                "consistent": true,
                "images": derivation_json(&d),
                "bound": bound,
                "deg_d": degs,
                "locally_nilpotent_probe": nil,
                "locally_finite_probe": fin,
            });
            Ok(Reply::ok(j, text.join("\n")))
        }
        Command::DerivationSpace {
            spec,
            weight,
            locally_finite,
        } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let basis = if *locally_finite {
                derivations::locally_finite_derivations(&alg)
            } else {
                derivations::derivation_space(&alg, *weight, cli.deg_bound)
            };
            let mut text = vec![format!("dimension {}", basis.len())];
            text.extend(basis.iter().map(derivation_text));
            let j = if *locally_finite {
                json!({ "locally_finite": true, "dimension": basis.len(),
                        "basis": basis.iter().map(derivation_json).collect::<Vec<_>>() })
            } else {
                json!({ "weight": weight, "deg_bound": cli.deg_bound, "dimension": basis.len(),
                        "basis": basis.iter().map(derivation_json).collect::<Vec<_>>() })
            };
            Ok(Reply::ok(j, text.join("\n")))
        }
        Command::Symmetric { spec } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let (yes, complete, j, text) = match alg.a().symmetry_search() {
                Search::Found(s) => (
                    true,
                    true,
                    json!({ "l": s.l, "gamma": s.gamma, "delta": s.delta }),
                    format!(
                        "symmetric: {} * a(h) = h^{} * a({} * h^-1)",
                        s.delta, s.l, s.gamma
                    ),
                ),
                Search::Absent => (false, true, Value::Null, "symmetric: no".to_string()),
                Search::Unknown => (
                    false,
                    false,
                    Value::Null,
                    "symmetric: undecided in this field".to_string(),
                ),
            };
            let mut out = json!({ "symmetric": yes, "search_complete": complete });
            if yes {
                out["symmetry"] = j;
            }
            Ok(Reply::answer(yes, out, text))
        }
        Command::Lambda { n, radius } => {
            if *n < 1 {
                return Err(CliError::Usage("--N must be positive".into()));
            }
            let r = radius.unwrap_or(n + 4);
            let set = classify::lambda_indecomposables(*n, r);
            let list: Vec<[i64; 2]> = set.iter().map(|&(u, v)| [u, v]).collect();
            let text = list
                .iter()
                .map(|[u, v]| format!("({u}, {v})"))
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Reply::ok(
                json!({ "N": n, "radius": r, "indecomposables": list }),
                text,
            ))
        }
        Command::CrossCheckAut { spec } => {
            let alg = specs.load(spec.as_deref(), "spec")?;
            let grid = CrossCheckGrid::standard(&alg, cli.grid_size);
            let r = classify::cross_check_aut(&alg, &grid)?;
            let mut j = serde_json::to_value(&r).expect("serializable");
            j["unrecognized"] = json!(r.unrecognized.iter().map(morphism_json).collect::<Vec<_>>());
            let mut text = format!(
                "candidates: {}\nverified: {}\nverified with eps = -1: {}\nnot invertible: {}\nrecognized: {}\nok: {}",
                r.candidates, r.verified, r.verified_eps_minus, r.not_invertible, r.recognized, r.ok
            );
            for m in &r.unrecognized {
                text.push_str(&format!("\nunrecognized:\n{}", morphism_text(m)));
            }
            Ok(Reply::answer(r.ok, j, text))
        }
    }
}
