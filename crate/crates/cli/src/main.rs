//! Command line front end.
//!
//! Exit status: 0 success or true, 1 false or none exist, 2 invalid input,
//! 3 budget exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use edge_outer::format::{export_dot, parse_graph, parse_walk, serialize_graph, serialize_walk, GraphFile, ParseError};
use edge_outer::gadgets::{
    build_a, build_b, build_p, build_q, build_r, check_stage, cprs_p_to_hamilton, hamilton_to_cprs_p, lift_p_to_r,
    normalize_p, project_r_to_p, Gadget, GadgetError, Stage, StageReport,
};
use edge_outer::optimal::{
    chinese_postman_length, enumerate_cprs, exact_srs, hamilton_cycle, is_cprs_walk, max_genus_exhaustive,
    SearchError,
};
use edge_outer::reporter::{reporter_strand_walk, reporter_strand_walk_max_genus, ReporterError};
use edge_outer::{validate_walk, Embedding, Graph, Walk};

const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "edge-outer", version, about = "Edge-outer embeddings and reporter strand walks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace the faces of the file's rotation system (identity if absent).
    Faces { graph: PathBuf },
    /// Build a reporter strand walk by face flips.
    Rsw {
        graph: PathBuf,
        /// Start from a maximum genus embedding found by exhaustive search.
        #[arg(long)]
        max_genus_start: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        walk_out: Option<PathBuf>,
        #[arg(long)]
        embedding_out: Option<PathBuf>,
    },
    /// Chinese postman length.
    Cp { graph: PathBuf },
    /// Exact shortest reporter strand walk.
    Srs {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        walk_out: Option<PathBuf>,
    },
    /// Every CPRS walk of a 2-connected cubic graph.
    Cprs {
        graph: PathBuf,
        /// Limit on the number of perfect matchings.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the first walk found here.
        #[arg(long)]
        walk_out: Option<PathBuf>,
    },
    /// Maximum genus by exhaustive search.
    Maxgenus {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// A hamilton cycle, if one exists.
    Hamilton { graph: PathBuf },
    /// Build a gadget graph and check its stage claims.
    Gadget {
        kind: GadgetKind,
        /// Plane cubic input graph with rotations; not used for a and b.
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report every walk predicate.
    VerifyWalk { graph: PathBuf, walk: PathBuf },
    /// Undirected DOT rendering, optionally styled by a walk.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        walk: Option<PathBuf>,
    },
    /// Hamilton cycle of N, to a CPRS walk of P(N), lifted to R(N) and back.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    P,
    Q,
    R,
    A,
    B,
}

enum Failure {
    Invalid(String),
    Budget(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } | SearchError::TooManyOddVertices { .. } => {
                Failure::Budget(e.to_string())
            }
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<ReporterError> for Failure {
    fn from(e: ReporterError) -> Self {
        match e {
            ReporterError::Search(s) => s.into(),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<GadgetError> for Failure {
    fn from(e: GadgetError) -> Self {
        match e {
            GadgetError::Search(s) => s.into(),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<edge_outer::WalkError> for Failure {
    fn from(e: edge_outer::WalkError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<edge_outer::EmbeddingError> for Failure {
    fn from(e: edge_outer::EmbeddingError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// Output text and whether the answer was positive.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn yes(text: String) -> Self {
        Report { text, ok: true }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GraphFile, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn load_plane(path: &Path) -> Result<(Graph, Embedding), Failure> {
    let file = load(path)?;
    match file.embedding {
        Some(emb) => Ok((file.graph, emb)),
        None => Err(Failure::Invalid(format!("{}: rotation lines required", path.display()))),
    }
}

fn embedding_of(file: &GraphFile) -> Embedding {
    file.embedding.clone().unwrap_or_else(|| Embedding::identity(file.graph.clone()))
}

fn darts_line(w: &Walk) -> String {
    w.darts().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn stage_line(r: &StageReport) -> String {
    format!(
        "stage {}: {} vertices, {} edges, cubic {}, simple {}, genus {}, 2-connected {}, 3-connected {}",
        r.stage,
        r.vertices,
        r.edges,
        yes_no(r.cubic),
        yes_no(r.simple),
        r.genus,
        yes_no(r.two_connected),
        yes_no(r.three_connected),
    )
}

/// P only needs 2-connectivity; every other stage is 3-connected.
fn stage_holds(r: &StageReport) -> bool {
    let connected = match r.stage {
        Stage::P => r.two_connected && !r.three_connected,
        _ => r.three_connected,
    };
    r.cubic && r.simple && r.planar() && connected
}

fn run(command: Command) -> Result<Report, Failure> {
    let mut out = String::new();
    match command {
        Command::Faces { graph } => {
            let file = load(&graph)?;
            let emb = embedding_of(&file);
            let faces = emb.trace_faces();
            writeln!(out, "faces {}", faces.len()).unwrap();
            for (i, f) in faces.faces().iter().enumerate() {
                let darts: Vec<String> = f.iter().map(|d| d.to_string()).collect();
                writeln!(out, "face {i} length {}: {}", f.len(), darts.join(" ")).unwrap();
            }
            writeln!(out, "genus {}", emb.genus()?).unwrap();
            Ok(Report::yes(out))
        }
        Command::Rsw {
            graph,
            max_genus_start,
            budget,
            walk_out,
            embedding_out,
        } => {
            let file = load(&graph)?;
            let run = if max_genus_start {
                reporter_strand_walk_max_genus(&file.graph, budget)?
            } else {
                reporter_strand_walk(&file.graph, &embedding_of(&file))?
            };
            writeln!(out, "length {}", run.walk.len()).unwrap();
            writeln!(out, "flips {}", run.flips.len()).unwrap();
            writeln!(out, "genus {}", run.embedding.genus()?).unwrap();
            let emb_text = serialize_graph(&file.graph, Some(&run.embedding), file.names.as_deref());
            let walk_text = serialize_walk(&run.walk);
            out.push_str(&emb_text);
            out.push_str(&walk_text);
            if let Some(p) = walk_out {
                write(&p, &walk_text)?;
            }
            if let Some(p) = embedding_out {
                write(&p, &emb_text)?;
            }
            Ok(Report::yes(out))
        }
        Command::Cp { graph } => {
            let file = load(&graph)?;
            writeln!(out, "{}", chinese_postman_length(&file.graph)?).unwrap();
            Ok(Report::yes(out))
        }
        Command::Srs {
            graph,
            budget,
            walk_out,
        } => {
            let file = load(&graph)?;
            let best = exact_srs(&file.graph, budget)?;
            writeln!(out, "{}", best.length).unwrap();
            let walk_text = serialize_walk(&best.walk);
            out.push_str(&walk_text);
            if let Some(p) = walk_out {
                write(&p, &walk_text)?;
            }
            Ok(Report::yes(out))
        }
        Command::Cprs {
            graph,
            budget,
            walk_out,
        } => {
            let file = load(&graph)?;
            let walks = enumerate_cprs(&file.graph, budget)?;
            if walks.is_empty() {
                out.push_str("none\n");
                return Ok(Report { text: out, ok: false });
            }
            writeln!(out, "walks {}", walks.len()).unwrap();
            for w in &walks {
                writeln!(out, "{}", darts_line(w)).unwrap();
            }
            if let Some(p) = walk_out {
                write(&p, &serialize_walk(&walks[0]))?;
            }
            Ok(Report::yes(out))
        }
        Command::Maxgenus { graph, budget } => {
            let file = load(&graph)?;
            let best = max_genus_exhaustive(&file.graph, budget)?;
            writeln!(out, "{}", best.genus).unwrap();
            out.push_str(&serialize_graph(&file.graph, Some(&best.embedding), file.names.as_deref()));
            Ok(Report::yes(out))
        }
        Command::Hamilton { graph } => {
            let file = load(&graph)?;
            match hamilton_cycle(&file.graph) {
                Some(cycle) => {
                    let vs: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "{}", vs.join(" ")).unwrap();
                    Ok(Report::yes(out))
                }
                None => Ok(Report {
                    text: "none\n".into(),
                    ok: false,
                }),
            }
        }
        Command::Gadget { kind, graph, out: dest } => {
            let gadget = match kind {
                GadgetKind::A => build_a(),
                GadgetKind::B => build_b(),
                _ => {
                    let path = graph.ok_or_else(|| Failure::Invalid("input graph required".into()))?;
                    let (n, emb) = load_plane(&path)?;
                    match kind {
                        GadgetKind::P => build_p(&n, &emb)?,
                        GadgetKind::Q => build_q(&n, &emb)?,
                        _ => build_r(&n, &emb)?,
                    }
                }
            };
            let report = check_stage(&gadget)?;
            let text = gadget_text(&gadget);
            writeln!(out, "# {}", stage_line(&report)).unwrap();
            match dest {
                Some(p) => write(&p, &text)?,
                None => out.push_str(&text),
            }
            Ok(Report {
                text: out,
                ok: stage_holds(&report),
            })
        }
        Command::VerifyWalk { graph, walk } => {
            let file = load(&graph)?;
            let w = parse_walk(&read(&walk)?, &file.graph)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", walk.display())))?;
            let r = validate_walk(&file.graph, &w);
            writeln!(out, "length {}", w.len()).unwrap();
            writeln!(out, "edge-spanning {}", yes_no(r.edge_spanning)).unwrap();
            writeln!(out, "edge-2-bounded {}", yes_no(r.edge_2_bounded)).unwrap();
            writeln!(out, "orientable {}", yes_no(r.orientable)).unwrap();
            writeln!(out, "retraction-free {}", yes_no(r.retraction_free)).unwrap();
            writeln!(out, "rotation-compatible {}", yes_no(r.rotation_compatible)).unwrap();
            writeln!(out, "solo edges {}", r.solo_edges.len()).unwrap();
            writeln!(out, "double edges {}", r.double_edges.len()).unwrap();
            let rsw = r.is_reporter_strand_walk();
            writeln!(out, "reporter strand walk {}", yes_no(rsw)).unwrap();
            match is_cprs_walk(&file.graph, &w) {
                Ok(b) => writeln!(out, "cprs {}", yes_no(b)).unwrap(),
                Err(e) => writeln!(out, "cprs unknown ({e})").unwrap(),
            }
            Ok(Report { text: out, ok: rsw })
        }
        Command::Dot { graph, walk } => {
            let file = load(&graph)?;
            let w = match walk {
                Some(p) => Some(
                    parse_walk(&read(&p)?, &file.graph).map_err(|e| Failure::Invalid(format!("{}: {e}", p.display())))?,
                ),
                None => None,
            };
            let text = export_dot(&file.graph, file.names.as_deref(), w.as_ref(), file.embedding.as_ref())
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            Ok(Report::yes(text))
        }
        Command::Reduce { graph, out_dir } => reduce(&graph, out_dir.as_deref()),
    }
}

fn gadget_text(g: &Gadget) -> String {
    serialize_graph(&g.graph, Some(&g.embedding), Some(g.map.names()))
}

fn reduce(path: &Path, out_dir: Option<&Path>) -> Result<Report, Failure> {
    let mut out = String::new();
    let (n, emb) = load_plane(path)?;
    let p = build_p(&n, &emb)?;
    let p_report = check_stage(&p)?;
    writeln!(out, "{}", stage_line(&p_report)).unwrap();
    let Some(cycle) = hamilton_cycle(&n) else {
        out.push_str("hamilton cycle of N: none\n");
        return Ok(Report { text: out, ok: false });
    };
    let vs: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
    writeln!(out, "hamilton cycle of N: {}", vs.join(" ")).unwrap();

    let w = normalize_p(&p, &hamilton_to_cprs_p(&p, &cycle)?)?;
    let p_ok = is_cprs_walk(&p.graph, &w)?;
    writeln!(out, "CPRS walk of P: length {}, valid {}", w.len(), yes_no(p_ok)).unwrap();

    let r = build_r(&n, &emb)?;
    let r_report = check_stage(&r)?;
    writeln!(out, "{}", stage_line(&r_report)).unwrap();
    let lifted = lift_p_to_r(&p, &r, &w)?;
    let r_ok = is_cprs_walk(&r.graph, &lifted)?;
    writeln!(out, "CPRS walk of R: length {}, valid {}", lifted.len(), yes_no(r_ok)).unwrap();

    let back = project_r_to_p(&p, &r, &lifted)?;
    let round_trip = back.same_cycle(&w);
    writeln!(out, "projection to P matches {}", yes_no(round_trip)).unwrap();
    let recovered = cprs_p_to_hamilton(&p, &back)?;
    let same_cycle = Walk::from_vertices(&n, &recovered)?.same_cycle(&Walk::from_vertices(&n, &cycle)?);
    let vs: Vec<String> = recovered.iter().map(|v| v.to_string()).collect();
    writeln!(out, "recovered hamilton cycle: {} (matches {})", vs.join(" "), yes_no(same_cycle)).unwrap();

    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Invalid(format!("{}: {e}", dir.display())))?;
        write(&dir.join("p.g"), &gadget_text(&p))?;
        write(&dir.join("p.walk"), &serialize_walk(&w))?;
        write(&dir.join("r.g"), &gadget_text(&r))?;
        write(&dir.join("r.walk"), &serialize_walk(&lifted))?;
    }
    let ok = stage_holds(&p_report) && stage_holds(&r_report) && p_ok && r_ok && round_trip && same_cycle;
    Ok(Report { text: out, ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
