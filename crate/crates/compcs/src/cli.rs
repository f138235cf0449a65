//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use compcs_core::composites::{entanglement_class, enumerate_composites, underlying_basis, CompositeCS};
use compcs_core::names::{build_test_set, enumerate_generators, name_of};
use compcs_core::search::Mode;
use compcs_core::zx::{catalog, verify_rule};

use crate::golden;
use crate::io::{self, CliqueRecord, StructureRecord};
use crate::pipeline::{self, compare, config_summary, member_names, names_graph, semantic_graph, size_histogram};

#[derive(Parser, Debug)]
#[command(name = "compcs", version, about = "Composite classical structures on two and three qubits")]
pub struct Cli {
    /// Worker threads for graph and clique search.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// ZX rewrite rules.
    Rules {
        #[command(subcommand)]
        action: RulesAction,
    },
    /// List every composite structure as JSON lines.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        qubits: u8,
    },
    /// Entangled generator representatives and their verdicts.
    Generators {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        qubits: u8,
    },
    /// Complementarity graph statistics.
    Graph {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        qubits: u8,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Vertex list as written by `enumerate`.
        #[arg(long)]
        vertices: Option<PathBuf>,
    },
    /// Maximal cliques of the complementarity graph.
    Cliques {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        qubits: u8,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Apply ent_K to a JSON array of three-qubit names.
    Ent {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        m: u8,
        #[arg(long)]
        input: PathBuf,
    },
    /// Basis, name and class of one structure given as JSON or a JSON file.
    Basis {
        #[arg(long)]
        structure: String,
    },
    /// Check the fixture directory.
    Verify {
        #[arg(long)]
        golden: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum RulesAction {
    Verify {
        #[arg(long)]
        id: Option<String>,
        /// Also inject a π phase into each rule and report detection.
        #[arg(long)]
        mutations: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Semantic,
    Names,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

struct Out<'a> {
    stdout: &'a mut (dyn Write + Send),
    stderr: &'a mut (dyn Write + Send),
}

macro_rules! say {
    ($w:expr, $($t:tt)*) => { let _ = writeln!($w, $($t)*); };
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, stdout: &mut (dyn Write + Send), stderr: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
            } else {
                let _ = write!(stdout, "{}", e.render());
            }
            return code;
        }
    };
    let mut out = Out { stdout, stderr };
    let threads = cli.threads;
    if threads == Some(0) {
        say!(out.stderr, "--threads must be positive");
        return EXIT_USAGE;
    }
    pipeline::with_threads(threads, move || dispatch(cli.command, &mut out))
}

fn dispatch(cmd: Command, out: &mut Out<'_>) -> i32 {
    match cmd {
        Command::Rules { action: RulesAction::Verify { id, mutations } } => rules(id, mutations, out),
        Command::Enumerate { qubits } => {
            for cs in enumerate_composites(qubits as usize) {
                say!(out.stdout, "{}", serde_json::to_string(&StructureRecord::from(&cs)).expect("serializable"));
            }
            EXIT_OK
        }
        Command::Generators { qubits } => generators(qubits as usize, out),
        Command::Graph { qubits, mode, vertices } => graph(qubits as usize, mode, vertices.as_deref(), out),
        Command::Cliques { qubits, format, output } => cliques(qubits as usize, format, output.as_deref(), out),
        Command::Ent { m, input } => ent(m as usize, &input, out),
        Command::Basis { structure } => basis(&structure, out),
        Command::Verify { golden } => verify(&golden, out),
    }
}

fn rules(id: Option<String>, mutations: bool, out: &mut Out<'_>) -> i32 {
    let rules = catalog();
    let selected: Vec<_> = match &id {
        Some(id) => rules.iter().filter(|r| r.id == id).collect(),
        None => rules.iter().collect(),
    };
    if selected.is_empty() {
        say!(out.stderr, "unknown rule id {}", id.unwrap_or_default());
        return EXIT_USAGE;
    }
    let mut failed = false;
    for r in &selected {
        let v = verify_rule(r.id).expect("catalogued");
        failed |= !v.holds_up_to_scalar;
        let scalar = v.scalar.map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        say!(
            out.stdout,
            "{:<16} {} instances={} scalar={}",
            r.id,
            if v.holds_up_to_scalar { "holds" } else { "FAILS" },
            v.instances,
            scalar
        );
    }
    if mutations {
        let mut detected = 0;
        for r in &selected {
            let m = pipeline::mutation_outcome(r);
            detected += m.detected as usize;
            say!(out.stdout, "{:<16} mutation {}", m.id, if m.detected { "detected" } else { "missed" });
        }
        say!(out.stdout, "mutations detected: {} of {}", detected, selected.len());
    }
    if failed {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn generators(n: usize, out: &mut Out<'_>) -> i32 {
    let report = enumerate_generators(n);
    for g in &report.entangled {
        let line = serde_json::json!({
            "pair": [g.pair.0.to_string(), g.pair.1.to_string()],
            "name": io::grid(&g.name),
            "class_size": g.class_size,
            "passes": g.passes,
            "one_plus_z_only": g.one_plus_z_only,
        });
        say!(out.stdout, "{}", line);
    }
    say!(
        out.stderr,
        "{} entangled generators, {} passing; {} classes with only 1+Z-column members, {} members passed over by the 1+Z rule; {} decomposable names",
        report.entangled.len(),
        report.passing(),
        report.pruned_classes,
        report.pruned_members,
        report.decomposable_names
    );
    EXIT_OK
}

fn graph(n: usize, mode: ModeArg, vertices: Option<&Path>, out: &mut Out<'_>) -> i32 {
    let vs = match vertices {
        Some(p) => match io::read_structures(p) {
            Ok(v) => v,
            Err(e) => {
                say!(out.stderr, "{}", e);
                return EXIT_USAGE;
            }
        },
        None => enumerate_composites(n),
    };
    if vs.iter().any(|v| v.n() != n) {
        say!(out.stderr, "vertex list is not on {} qubits", n);
        return EXIT_USAGE;
    }
    let semantic = matches!(mode, ModeArg::Semantic | ModeArg::Both).then(|| semantic_graph(vs.clone()));
    let names = matches!(mode, ModeArg::Names | ModeArg::Both).then(|| names_graph(vs.clone(), &build_test_set(n)));
    for g in semantic.iter().chain(names.iter()) {
        let label = if g.mode == Mode::Semantic { "semantic" } else { "names" };
        say!(out.stdout, "{}: {} vertices, {} edges", label, g.len(), io::thousands(g.edge_count()));
    }
    if let (Some(a), Some(b)) = (&semantic, &names) {
        let agree = compare(a, b);
        if agree.disagreements.is_empty() {
            say!(out.stdout, "modes agree on all {} pairs", io::thousands(agree.pairs));
        } else {
            say!(
                out.stdout,
                "modes disagree on {} of {} pairs",
                io::thousands(agree.disagreements.len()),
                io::thousands(agree.pairs)
            );
            for &(i, j) in agree.disagreements.iter().take(20) {
                say!(out.stdout, "  {} {} semantic={}", a.vertices[i], a.vertices[j], a.adjacent(i, j));
            }
            return EXIT_MISMATCH;
        }
    }
    EXIT_OK
}

fn cliques(n: usize, format: Format, output: Option<&Path>, out: &mut Out<'_>) -> i32 {
    let g = pipeline::build_graph(n, Mode::Semantic);
    let cl = pipeline::cliques(&g);
    let complete = 1usize << n;
    let text = match format {
        Format::Json => {
            let mut s = String::new();
            for c in &cl {
                let rec = CliqueRecord {
                    members: member_names(&g, &c.members).iter().map(io::grid).collect(),
                    config: c.config.triple(),
                };
                s.push_str(&serde_json::to_string(&rec).expect("serializable"));
                s.push('\n');
            }
            s
        }
        Format::Csv => io::summary_csv(&config_summary(cl.iter().filter(|c| c.members.len() == complete + 1))),
    };
    match output {
        Some(p) => {
            if let Err(e) = fs::write(p, text) {
                say!(out.stderr, "{}: {}", p.display(), e);
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.stdout.write_all(text.as_bytes());
        }
    }
    let hist = size_histogram(&cl);
    let sizes: Vec<String> = hist.iter().rev().map(|(s, k)| format!("{} of size {}", io::thousands(*k), s)).collect();
    say!(out.stderr, "{} maximal cliques: {}", io::thousands(cl.len()), sizes.join(", "));
    say!(
        out.stderr,
        "{} complete sets of size {}",
        io::thousands(hist.get(&(complete + 1)).copied().unwrap_or(0)),
        complete + 1
    );
    for (c, k) in config_summary(cl.iter().filter(|c| c.members.len() == complete + 1)) {
        say!(out.stderr, "  {} {}", c, io::thousands(k));
    }
    EXIT_OK
}

fn ent(m: usize, input: &Path, out: &mut Out<'_>) -> i32 {
    let names = match io::read_names(input) {
        Ok(n) => n,
        Err(e) => {
            say!(out.stderr, "{}", e);
            return EXIT_USAGE;
        }
    };
    match pipeline::ent_image(&names, m - 1) {
        Ok(image) => {
            let _ = out.stdout.write_all(io::names_json(&image).as_bytes());
            EXIT_OK
        }
        Err(e) => {
            say!(out.stderr, "{}", e);
            EXIT_USAGE
        }
    }
}

fn basis(arg: &str, out: &mut Out<'_>) -> i32 {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        match fs::read_to_string(arg) {
            Ok(t) => t,
            Err(e) => {
                say!(out.stderr, "{}: {}", arg, e);
                return EXIT_USAGE;
            }
        }
    };
    let cs: CompositeCS = match serde_json::from_str::<StructureRecord>(&text).map_err(|e| e.to_string()).and_then(|r| r.to_structure()) {
        Ok(cs) => cs,
        Err(e) => {
            say!(out.stderr, "{}", e);
            return EXIT_USAGE;
        }
    };
    let b = underlying_basis(&cs);
    let kets: Vec<Vec<String>> = b.kets.iter().map(|k| k.entries().iter().map(|x| x.to_string()).collect()).collect();
    let rec = serde_json::json!({
        "structure": cs.to_string(),
        "class": format!("{:?}", entanglement_class(&cs)),
        "name": io::grid(&name_of(&cs)),
        "orthonormal": b.is_orthonormal(),
        "kets": kets,
    });
    say!(out.stdout, "{}", serde_json::to_string_pretty(&rec).expect("serializable"));
    EXIT_OK
}

fn verify(dir: &Path, out: &mut Out<'_>) -> i32 {
    match golden::verify(dir) {
        Ok(checks) => {
            for c in &checks {
                say!(out.stdout, "{}", c.line());
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            say!(out.stdout, "{} of {} checks passed", checks.len() - failed, checks.len());
            if failed == 0 {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            say!(out.stderr, "{}", e);
            EXIT_USAGE
        }
    }
}
