use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use smallcover::belts::{find_belts, find_prismatic_circuits};
use smallcover::classify::{classify, ClassificationReport, ClassifyError, Verdict};
use smallcover::coloring::{
    enumerate_colorings, first_coloring, is_orientable, validate_coloring, CharacteristicMap,
    DEFAULT_MAX_FACETS,
};
use smallcover::polytope::builtin;
use smallcover::racg::{equal, reduce, GroupWord, RacgError, RacgPresentation, WitnessBounds};
use smallcover::SimplePolytope3;

#[derive(Parser)]
#[command(
    name = "smallcover",
    version,
    about = "Belts, prismatic circuits and small covers over simple 3-polytopes"
)]
struct Cli {
    /// Print a human-readable summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColoringMode {
    All,
    First,
    None,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polytope and optionally a coloring on it.
    Validate {
        /// Polytope JSON file, or `builtin:<name>[:<k>]`.
        #[arg(long)]
        input: String,
        #[arg(long)]
        coloring: Option<String>,
    },
    /// List the k-belts.
    Belts {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// List the prismatic k-circuits (3 <= k <= 5).
    Circuits {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Enumerate characteristic maps up to change of basis.
    Colorings {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "all")]
        colorings: ColoringMode,
        #[arg(long, default_value_t = DEFAULT_MAX_FACETS)]
        max_facets: usize,
    },
    /// Full classification report.
    Classify {
        #[arg(long)]
        input: String,
        #[arg(long, conflicts_with = "colorings")]
        coloring: Option<String>,
        #[arg(long, value_enum)]
        colorings: Option<ColoringMode>,
        #[arg(long, default_value_t = DEFAULT_MAX_FACETS)]
        max_facets: usize,
    },
    /// Normal form of a word.
    RacgReduce {
        /// Presentation or polytope JSON, or `builtin:<name>[:<k>]`.
        #[arg(long)]
        input: String,
        /// Whitespace-separated 1-based generators, or `#<facet>`.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Whether two words define the same element.
    RacgEqual {
        #[arg(long)]
        input: String,
        #[arg(long, num_args = 1, required = true, allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Section classes and surfaces of every 4-belt under one coloring.
    Section {
        #[arg(long)]
        input: String,
        #[arg(long, required_unless_present = "colorings")]
        coloring: Option<String>,
        #[arg(long, value_enum, conflicts_with = "coloring")]
        colorings: Option<ColoringMode>,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }

    fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Input(m) => ("input", m),
            CliError::Internal(m) => ("internal", m),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

enum Input {
    Polytope(SimplePolytope3),
    Presentation(RacgPresentation),
}

fn load_input(source: &str) -> Result<Input, CliError> {
    if let Some(rest) = source.strip_prefix("builtin:") {
        let (name, param) = match rest.split_once(':') {
            Some((name, k)) => {
                let k = k
                    .parse()
                    .map_err(|_| CliError::Input(format!("bad builtin parameter `{k}`")))?;
                (name, Some(k))
            }
            None => (rest, None),
        };
        return builtin(name, param).map(Input::Polytope).map_err(input_error);
    }
    let text = std::fs::read_to_string(source).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    let mut value: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    if value.get("generators").is_some() {
        return RacgPresentation::parse_json(&text)
            .map(Input::Presentation)
            .map_err(input_error);
    }
    // Unnamed polytopes take the file stem.
    if let Some(obj) = value.as_object_mut() {
        if !obj.contains_key("name") {
            let stem = Path::new(source)
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            obj.insert("name".into(), Value::String(stem));
        }
    }
    SimplePolytope3::parse_json(&value.to_string())
        .map(Input::Polytope)
        .map_err(input_error)
}

fn load_polytope(source: &str) -> Result<SimplePolytope3, CliError> {
    match load_input(source)? {
        Input::Polytope(p) => Ok(p),
        Input::Presentation(_) => Err(CliError::Input(format!(
            "{source} is a group presentation, expected a polytope"
        ))),
    }
}

fn load_presentation(source: &str) -> Result<RacgPresentation, CliError> {
    Ok(match load_input(source)? {
        Input::Polytope(p) => RacgPresentation::from_polytope(&p),
        Input::Presentation(w) => w,
    })
}

fn load_coloring(path: &str, p: &SimplePolytope3) -> Result<CharacteristicMap, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let lambda = CharacteristicMap::parse_json(&text, p.facet_count()).map_err(input_error)?;
    if let Some(v) = validate_coloring(p, &lambda).map_err(input_error)? {
        return Err(CliError::Input(format!(
            "invalid characteristic map: colors {}, {}, {} of facets {:?} at vertex {} are dependent",
            v.colors[0], v.colors[1], v.colors[2], v.facets, v.vertex
        )));
    }
    Ok(lambda)
}

fn select_colorings(
    p: &SimplePolytope3,
    mode: ColoringMode,
    max_facets: usize,
) -> Result<Vec<CharacteristicMap>, CliError> {
    Ok(match mode {
        ColoringMode::All => enumerate_colorings(p, true, max_facets).map_err(input_error)?,
        ColoringMode::First => first_coloring(p).into_iter().collect(),
        ColoringMode::None => Vec::new(),
    })
}

fn parse_word(text: &str, w: &RacgPresentation) -> Result<GroupWord, CliError> {
    let word = GroupWord::parse(text).map_err(input_error)?;
    match w.check(&word) {
        Err(RacgError::BadGenerator { index, count }) => Err(CliError::Input(format!(
            "generator {} out of range 1..={count}",
            index + 1
        ))),
        other => other.map(|()| word).map_err(input_error),
    }
}

fn coloring_value(lambda: &CharacteristicMap) -> Value {
    serde_json::from_str(&lambda.to_json()).expect("coloring JSON is valid")
}

fn polytope_line(p: &SimplePolytope3) -> String {
    format!(
        "{}: {} vertices, {} edges, {} facets",
        p.name(),
        p.vertex_count(),
        p.edge_count(),
        p.facet_count()
    )
}

fn report_summary(r: &ClassificationReport) -> String {
    let v = &r.verdicts;
    let aspherical = match &v.aspherical {
        Verdict::Value(b) => b.to_string(),
        Verdict::Excluded(s) => s.clone(),
    };
    let mut out = format!(
        "{}: V={} E={} F={}\n",
        r.polytope.name, r.polytope.vertices, r.polytope.edges, r.polytope.facets
    );
    let _ = writeln!(
        out,
        "prismatic 3-circuits: {}, prismatic 4-circuits: {}, 4-belts: {}",
        r.circuits.prismatic_3.count, r.circuits.prismatic_4.count, r.belts.belts_4.count
    );
    let _ = writeln!(
        out,
        "flag: {}, aspherical: {aspherical}, atoroidal: {}, hyperbolic: {}",
        v.flag, v.atoroidal, v.hyperbolic_realizable
    );
    for (i, block) in r.colorings.iter().enumerate() {
        let classes: Vec<String> = block
            .sections
            .iter()
            .map(|s| format!("case {} ({})", s.case, s.predicted))
            .collect();
        let _ = writeln!(
            out,
            "coloring {i}: orientable {}, chi {}, sections [{}]",
            block.orientable,
            block.euler_characteristic,
            classes.join(", ")
        );
    }
    out
}

/// Returns the JSON for stdout and the `--pretty` summary.
fn run(command: Command) -> Result<(String, String), CliError> {
    let (out, summary) = match command {
        Command::Classify {
            input,
            coloring,
            colorings,
            max_facets,
        } => {
            let p = load_polytope(&input)?;
            let lambdas = match (coloring, colorings) {
                (Some(path), _) => vec![load_coloring(&path, &p)?],
                (None, Some(mode)) => select_colorings(&p, mode, max_facets)?,
                (None, None) => Vec::new(),
            };
            let report = classify(&p, &lambdas, WitnessBounds::default())?;
            return Ok((report.to_json(), report_summary(&report)));
        }
        other => run_value(other)?,
    };
    Ok((out.to_string(), summary))
}

fn run_value(command: Command) -> Result<(Value, String), CliError> {
    match command {
        Command::Validate { input, coloring } => {
            let p = load_polytope(&input)?;
            let mut summary = polytope_line(&p);
            let coloring = match coloring {
                Some(path) => {
                    let lambda = load_coloring(&path, &p)?;
                    let orientable = is_orientable(&lambda);
                    summary.push_str(&format!("\ncoloring valid, orientable: {orientable}"));
                    json!({ "valid": true, "orientable": orientable })
                }
                None => Value::Null,
            };
            let out = json!({
                "valid": true,
                "polytope": {
                    "name": p.name(),
                    "vertices": p.vertex_count(),
                    "edges": p.edge_count(),
                    "facets": p.facet_count(),
                    "is_simplex": p.is_simplex(),
                },
                "coloring": coloring,
            });
            Ok((out, summary))
        }
        Command::Belts { input, k } => {
            let p = load_polytope(&input)?;
            let belts = find_belts(&p, k).map_err(input_error)?;
            let list: Vec<&[usize]> = belts.iter().map(|b| b.facets()).collect();
            let summary = format!("{}: {} {k}-belts", p.name(), belts.len());
            Ok((json!({ "belts": list }), summary))
        }
        Command::Circuits { input, k } => {
            let p = load_polytope(&input)?;
            let circuits = find_prismatic_circuits(&p, k).map_err(input_error)?;
            let list: Vec<Value> = circuits
                .iter()
                .map(|c| {
                    let edges: Vec<[usize; 2]> = c.edges().iter().map(|&e| p.edge(e).facets).collect();
                    json!({ "facets": c.facets(), "edges": edges })
                })
                .collect();
            let summary = format!("{}: {} prismatic {k}-circuits", p.name(), circuits.len());
            Ok((json!({ "circuits": list }), summary))
        }
        Command::Colorings {
            input,
            colorings,
            max_facets,
        } => {
            let p = load_polytope(&input)?;
            if colorings == ColoringMode::First {
                let first = first_coloring(&p);
                let summary = format!("{}: first coloring {}", p.name(), first.is_some());
                let out = json!({ "colorings": first.iter().map(coloring_value).collect::<Vec<_>>() });
                return Ok((out, summary));
            }
            let reps = enumerate_colorings(&p, true, max_facets).map_err(input_error)?;
            // Basis changes act freely, since the colors at a vertex span.
            let total = reps.len() * 168;
            let summary = format!(
                "{}: {total} colorings, {} up to change of basis",
                p.name(),
                reps.len()
            );
            let mut out = json!({ "count": total, "count_up_to_basis": reps.len() });
            if colorings == ColoringMode::All {
                out["colorings"] = reps.iter().map(coloring_value).collect();
            }
            Ok((out, summary))
        }
        Command::Classify { .. } => unreachable!("handled in run"),
        Command::RacgReduce { input, word } => {
            let w = load_presentation(&input)?;
            let word = parse_word(&word, &w)?;
            let nf = reduce(&w, &word).map_err(input_error)?;
            let summary = format!("{}: [{word}] = [{nf}], length {}", w.name(), nf.len());
            Ok((json!({ "normal_form": nf.to_string() }), summary))
        }
        Command::RacgEqual { input, word } => {
            if word.len() != 2 {
                return Err(CliError::Input(format!(
                    "racg-equal takes exactly two --word arguments, got {}",
                    word.len()
                )));
            }
            let w = load_presentation(&input)?;
            let a = parse_word(&word[0], &w)?;
            let b = parse_word(&word[1], &w)?;
            let same = equal(&w, &a, &b).map_err(input_error)?;
            let summary = format!("{}: [{a}] {} [{b}]", w.name(), if same { "=" } else { "!=" });
            Ok((json!({ "equal": same }), summary))
        }
        Command::Section {
            input,
            coloring,
            colorings,
        } => {
            let p = load_polytope(&input)?;
            let lambda = match (coloring, colorings) {
                (Some(path), _) => load_coloring(&path, &p)?,
                (None, Some(ColoringMode::First)) => first_coloring(&p)
                    .ok_or_else(|| CliError::Input(format!("{} has no coloring", p.name())))?,
                _ => {
                    return Err(CliError::Input(
                        "section needs --coloring <path> or --colorings first".into(),
                    ))
                }
            };
            let report = classify(&p, std::slice::from_ref(&lambda), WitnessBounds::default())?;
            let block = &report.colorings[0];
            let mut summary = format!("{} with {lambda}", p.name());
            for s in &block.sections {
                let _ = write!(summary, "\nbelt {:?}: case {} {} -> {}", s.belt, s.case, s.tuple, s.predicted);
            }
            let out = json!({
                "coloring": coloring_value(&lambda),
                "sections": block.sections,
            });
            Ok((out, summary))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            println!("{}", CliError::Input(e.kind().to_string()).to_json());
            return ExitCode::from(1);
        }
    };
    let pretty = cli.pretty;
    let result = catch_unwind(AssertUnwindSafe(|| run(cli.command))).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(CliError::Internal(msg))
    });
    match result {
        Ok((out, summary)) => {
            println!("{out}");
            if pretty {
                eprintln!("{summary}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", e.to_json());
            if pretty {
                eprintln!("error: {}", e.to_json()["error"]["message"].as_str().unwrap_or_default());
            }
            ExitCode::from(e.exit_code())
        }
    }
}
