//! The `rpp-lr` command line: `enumerate`, `word`, `reconstruct`,
//! `crystal`, `expand` and `verify`.
//!
//! Exit codes: 0 on success, 1 when a property or oracle check fails (or
//! reconstruction finds no preimage), 2 on usage errors.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::reading::{height_vector, reading_word, reconstruct, Word};
use crate::rpp_crystal::{crystal_graph, lower_rpp, raise_rpp};
use crate::shapes::SkewShape;
use crate::symfunc::{expand_in_schur, g_poly, g_refined, h_coeffs, h_coeffs_refined, t_var_count};
use crate::tableaux::{ceq, enumerate_elegant, enumerate_rpp, enumerate_ssyt, rpp_weight, Filling};
use crate::verify::{self, Suite};
use crate::word_crystal::{is_lattice, lower_word, raise_word, word_weight};

#[derive(Debug, Parser)]
#[command(name = "rpp-lr", version, about = "Crystals on reverse plane partitions and dual stable Grothendieck expansions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List reverse plane partitions (or SSYT / elegant fillings) of a shape.
    Enumerate(EnumerateArgs),
    /// Reading word data of a tableau, or E_i/F_i on a word.
    Word(WordArgs),
    /// Rebuild a reverse plane partition from its reading word and heights.
    Reconstruct(ReconstructArgs),
    /// Apply e_i/f_i to a tableau, or build the whole crystal graph.
    Crystal(CrystalArgs),
    /// Schur expansion of g_{λ/μ} with the lattice-word coefficients.
    Expand(ExpandArgs),
    /// Run exhaustive property suites over small shapes.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    E,
    F,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Shape as `λ1,λ2,.../μ1,μ2,...`.
    #[arg(long)]
    pub shape: String,
    /// Largest entry; defaults to the number of cells (at least 1).
    #[arg(long)]
    pub max_entry: Option<u32>,
    #[arg(long, conflicts_with = "elegant")]
    pub ssyt: bool,
    /// Elegant fillings of the shape; the bound is implied by the rows.
    #[arg(long)]
    pub elegant: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableauInput {
    /// Tableau JSON file, `-` for stdin.
    #[arg(long)]
    pub input: Option<String>,
    /// Inline tableau JSON.
    #[arg(long, conflicts_with = "input")]
    pub tableau: Option<String>,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[command(flatten)]
    pub source: TableauInput,
    /// A word given directly, comma separated.
    #[arg(long, conflicts_with_all = ["input", "tableau"])]
    pub letters: Option<String>,
    /// Alphabet size for `--letters`; defaults to the largest letter.
    #[arg(long)]
    pub max_entry: Option<u32>,
    /// Apply E_i (`e`) or F_i (`f`) to the word.
    #[arg(long, value_enum, requires = "index")]
    pub op: Option<Op>,
    #[arg(long)]
    pub index: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long)]
    pub shape: String,
    /// Reading word, comma separated.
    #[arg(long)]
    pub word: String,
    /// Height vector, comma separated.
    #[arg(long)]
    pub heights: String,
    /// Largest entry; defaults to the largest letter.
    #[arg(long)]
    pub max_entry: Option<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct CrystalArgs {
    #[command(subcommand)]
    pub graph: Option<CrystalCommand>,
    #[arg(long, value_enum)]
    pub op: Option<Op>,
    #[arg(long)]
    pub index: Option<u32>,
    #[command(flatten)]
    pub source: TableauInput,
}

#[derive(Debug, Subcommand)]
pub enum CrystalCommand {
    /// Build the crystal graph on all reverse plane partitions of a shape.
    Graph(GraphArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub shape: String,
    #[arg(long)]
    pub max_entry: Option<u32>,
    /// Emit Graphviz DOT instead of the summary.
    #[arg(long)]
    pub dot: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long)]
    pub shape: String,
    /// Number of variables; defaults to the number of cells (at least 1).
    #[arg(long)]
    pub max_entry: Option<u32>,
    /// Also split coefficients by ceq.
    #[arg(long)]
    pub refined: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suites to run; all of them when omitted.
    #[arg(long, value_enum)]
    pub suite: Vec<Suite>,
    /// Bound on |λ| for the shape corpus.
    #[arg(long, default_value_t = 6)]
    pub max_cells: u32,
    #[arg(long, default_value_t = 3)]
    pub max_entry: u32,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Random resolution orders per benign tableau.
    #[arg(long, default_value_t = 10)]
    pub orders: u32,
    /// Longest word for the `words` suite.
    #[arg(long, default_value_t = 8)]
    pub word_length: usize,
}

/// Outcome of a command: exit code plus what to print.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInvariant(_) | Error::ReconstructionFailed(_) | Error::NotSymmetric(_) => {
                Failure::Check(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Enumerate(a) => run_enumerate(a, out),
        Command::Word(a) => run_word(a, out),
        Command::Reconstruct(a) => run_reconstruct(a, out),
        Command::Crystal(a) => run_crystal(a, out),
        Command::Expand(a) => run_expand(a, out),
        Command::Verify(a) => run_verify(a, out),
    }
}

fn parse_shape(s: &str) -> std::result::Result<SkewShape, Failure> {
    s.parse::<SkewShape>().map_err(Failure::from)
}

fn default_bound(shape: &SkewShape, given: Option<u32>) -> std::result::Result<u32, Failure> {
    match given {
        Some(0) => Err(Failure::Usage("--max-entry must be positive".into())),
        Some(m) => Ok(m),
        None => Ok((shape.size() as u32).max(1)),
    }
}

fn word_text(w: &Word, m: u32) -> String {
    if m <= 9 {
        w.compact()
    } else {
        w.to_string()
    }
}

fn read_tableau(src: &TableauInput) -> std::result::Result<Filling, Failure> {
    let text = match (&src.input, &src.tableau) {
        (_, Some(inline)) => inline.clone(),
        (Some(path), None) if path == "-" => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
        (Some(path), None) => std::fs::read_to_string(path)?,
        (None, None) => return Err(Failure::Usage("a tableau is required (--input or --tableau)".into())),
    };
    let t = Filling::parse_json(&text)?;
    if let Some(why) = t.rpp_violation() {
        return Err(Failure::Usage(format!("tableau is not a reverse plane partition: {why}")));
    }
    Ok(t)
}

fn check_index(i: u32, m: u32) -> CmdResult {
    if i == 0 || i >= m {
        return Err(Failure::Usage(format!("--index must lie in 1..{m}")));
    }
    Ok(())
}

fn run_enumerate(a: EnumerateArgs, out: &mut dyn Write) -> CmdResult {
    let shape = parse_shape(&a.shape)?;
    let (class, tableaux): (&str, Vec<Filling>) = if a.elegant {
        ("elegant", enumerate_elegant(shape.outer(), shape.inner())?.collect())
    } else {
        let m = default_bound(&shape, a.max_entry)?;
        if a.ssyt {
            ("ssyt", enumerate_ssyt(&shape, m).collect())
        } else {
            ("rpp", enumerate_rpp(&shape, m).collect())
        }
    };
    match a.format {
        Format::Text => {
            for t in &tableaux {
                writeln!(out, "{t}\n")?;
            }
            writeln!(out, "count: {}", tableaux.len())?;
        }
        Format::Json => {
            let list: Vec<_> = tableaux.iter().map(|t| serde_json::to_value(t.to_json()).unwrap()).collect();
            let doc = json!({"shape": shape.to_string(), "class": class, "count": tableaux.len(), "tableaux": list});
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run_word(a: WordArgs, out: &mut dyn Write) -> CmdResult {
    let (word, m, tableau) = match &a.letters {
        Some(text) => {
            let w: Word = text.parse()?;
            let m = a.max_entry.unwrap_or_else(|| w.letters().iter().copied().max().unwrap_or(1)).max(1);
            if w.letters().iter().any(|&l| l == 0 || l > m) {
                return Err(Failure::Usage(format!("letters must lie in 1..={m}")));
            }
            (w, m, None)
        }
        None => {
            let t = read_tableau(&a.source)?;
            (reading_word(&t), t.max_entry(), Some(t))
        }
    };
    let applied = match (a.op, a.index) {
        (Some(op), Some(i)) => {
            check_index(i, m)?;
            Some((op, i, if op == Op::E { raise_word(&word, i) } else { lower_word(&word, i) }))
        }
        _ => None,
    };
    match a.format {
        Format::Text => {
            writeln!(out, "word: {}", word_text(&word, m))?;
            if let Some(t) = &tableau {
                writeln!(out, "heights: {}", crate::shapes::join(&height_vector(t).iter().map(|&h| h as u32).collect::<Vec<_>>()))?;
                writeln!(out, "column weight: {}", crate::shapes::join(&rpp_weight(t)))?;
                writeln!(out, "ceq: ({})", crate::shapes::join(&ceq(t)))?;
            }
            writeln!(out, "weight: {}", crate::shapes::join(&word_weight(&word, m)))?;
            writeln!(out, "lattice: {}", is_lattice(&word))?;
            if let Some((op, i, res)) = &applied {
                let name = if *op == Op::E { "E" } else { "F" };
                let shown = res.as_ref().map_or("0".to_string(), |w| word_text(w, m));
                writeln!(out, "{name}_{i}: {shown}")?;
            }
        }
        Format::Json => {
            let mut doc = json!({
                "word": word.letters(),
                "max_entry": m,
                "weight": word_weight(&word, m),
                "lattice": is_lattice(&word),
            });
            if let Some(t) = &tableau {
                doc["heights"] = json!(height_vector(t));
                doc["column_weight"] = json!(rpp_weight(t));
                doc["ceq"] = json!(ceq(t));
            }
            if let Some((op, i, res)) = &applied {
                doc["op"] = json!(if *op == Op::E { "e" } else { "f" });
                doc["index"] = json!(i);
                doc["result"] = res.as_ref().map_or(json!(0), |w| json!(w.letters()));
            }
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run_reconstruct(a: ReconstructArgs, out: &mut dyn Write) -> CmdResult {
    let shape = parse_shape(&a.shape)?;
    let word: Word = a.word.parse()?;
    let heights: Vec<usize> = crate::reading::parse_list(&a.heights)?.into_iter().map(|h| h as usize).collect();
    let m = match a.max_entry {
        Some(0) => return Err(Failure::Usage("--max-entry must be positive".into())),
        Some(m) => m,
        None => word.letters().iter().copied().max().unwrap_or(1),
    };
    let t = reconstruct(&shape, &word, &heights, m)?;
    match a.format {
        Format::Text => writeln!(out, "{t}")?,
        Format::Json => writeln!(out, "{}", t.to_json_string())?,
    }
    Ok(())
}

fn run_crystal(a: CrystalArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(CrystalCommand::Graph(g)) = a.graph {
        return run_graph(g, out);
    }
    let (Some(op), Some(i)) = (a.op, a.index) else {
        return Err(Failure::Usage("crystal needs --op and --index, or the `graph` subcommand".into()));
    };
    let t = read_tableau(&a.source)?;
    check_index(i, t.max_entry())?;
    let res = match op {
        Op::E => raise_rpp(&t, i)?,
        Op::F => lower_rpp(&t, i)?,
    };
    match res {
        Some(u) => writeln!(out, "{}", u.to_json_string())?,
        None => writeln!(out, "0")?,
    }
    Ok(())
}

fn run_graph(a: GraphArgs, out: &mut dyn Write) -> CmdResult {
    let shape = parse_shape(&a.shape)?;
    let m = default_bound(&shape, a.max_entry)?;
    let g = crystal_graph(&shape, m)?;
    if a.dot {
        write!(out, "{}", g.to_dot())?;
        return Ok(());
    }
    match a.format {
        Format::Text => {
            writeln!(out, "vertices: {}; edges: {}", g.vertices.len(), g.edges.len())?;
            writeln!(out, "{}", g.summary())?;
            for (k, c) in g.components.iter().enumerate() {
                let top = &g.vertices[c.highest];
                writeln!(
                    out,
                    "component {k}: size {}, highest weight {}, highest word {}",
                    c.vertices.len(),
                    c.weight,
                    word_text(&reading_word(top), m)
                )?;
            }
        }
        Format::Json => {
            let comps: Vec<_> = g
                .components
                .iter()
                .map(|c| {
                    json!({
                        "size": c.vertices.len(),
                        "highest_weight": c.weight.parts(),
                        "highest": serde_json::to_value(g.vertices[c.highest].to_json()).unwrap(),
                    })
                })
                .collect();
            let edges: Vec<_> = g.edges.iter().map(|&(s, i, t)| json!([s, i, t])).collect();
            let doc = json!({
                "shape": shape.to_string(),
                "max_entry": m,
                "vertices": g.vertices.len(),
                "edges": edges,
                "components": comps,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn run_expand(a: ExpandArgs, out: &mut dyn Write) -> CmdResult {
    let shape = parse_shape(&a.shape)?;
    let m = default_bound(&shape, a.max_entry)?;
    let g = g_poly(&shape, m);
    let h = h_coeffs(&shape, m);
    let oracle = expand_in_schur(&g, m)?;
    let matches = oracle == h;
    let refined = a.refined.then(|| {
        let r = h_coeffs_refined(&shape, m);
        let ok = r.to_poly(m, t_var_count(&shape)) == g_refined(&shape, m);
        (r, ok)
    });
    let verdict = |ok: bool| if ok { "match" } else { "MISMATCH" };
    match a.format {
        Format::Text => {
            writeln!(out, "shape: {shape}")?;
            writeln!(out, "max entry: {m}")?;
            writeln!(out, "g = {g}")?;
            writeln!(out, "h-coefficients:")?;
            if !h.0.is_empty() {
                writeln!(out, "{h}")?;
            }
            if let Some((r, ok)) = &refined {
                writeln!(out, "refined:")?;
                if !r.0.is_empty() {
                    writeln!(out, "{r}")?;
                }
                writeln!(out, "refined oracle: {}", verdict(*ok))?;
            }
            writeln!(out, "oracle: {}", verdict(matches))?;
        }
        Format::Json => {
            let mut doc = json!({
                "shape": shape.to_string(),
                "max_entry": m,
                "g": g.to_json(),
                "coefficients": h.to_json(),
                "oracle": verdict(matches),
            });
            if let Some((r, ok)) = &refined {
                doc["refined"] = r.to_json();
                doc["refined_oracle"] = json!(verdict(*ok));
            }
            writeln!(out, "{doc}")?;
        }
    }
    let refined_ok = refined.is_none_or(|(_, ok)| ok);
    if matches && refined_ok {
        Ok(())
    } else {
        Err(Failure::Check(format!("oracle mismatch: expansion {oracle:?}")))
    }
}

fn run_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = verify::Config {
        max_cells: a.max_cells,
        max_entry: a.max_entry,
        seed: a.seed,
        random_orders: a.orders,
        word_length: a.word_length,
    };
    let suites: Vec<Suite> = if a.suite.is_empty() { Suite::ALL.to_vec() } else { a.suite };
    let mut failed = 0;
    for s in suites {
        let report = verify::run(s, &cfg);
        writeln!(out, "{report}")?;
        if !report.passed() {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} suite(s) failed")));
    }
    Ok(())
}
