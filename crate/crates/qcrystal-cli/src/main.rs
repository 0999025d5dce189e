//! `qcrystal`: insertion, crystal graphs, bumping, character expansions,
//! word classes and the verification suite from the command line.
//!
//! Exit codes: 0 success, 1 theorem failure, 2 bad input, 3 resource cap,
//! 4 conjecture counterexample.

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcrystal::bumping::{bump_trace, decompose_bump, default_push_cap, MarkedWord};
use qcrystal::crystal::{Crystal, CrystalGraph, FactorizationCrystal, ShiftedTableauCrystal, TableauCrystal, DEFAULT_VERTEX_CAP};
use qcrystal::insertion::{
    eg_insert, eg_insert_unchecked, hm_insert, oeg_insert, shifted_eg_insert_unchecked, speg_insert, Factorization,
    InsertionResult, ShiftedVariant,
};
use qcrystal::permwords::{enumerate_words, equivalence_class, Flavor, FpfInvolution, Permutation, Relation, Target, Word};
use qcrystal::symchar::{character, stanley_expansion};
use qcrystal::tableaux::{semistandard, shifted_semistandard, Shape};
use qcrystal::verify::{self, Bounds, Report, VerifyTarget};
use qcrystal::Error;
use serde_json::json;

/// `println!` that ignores a closed stdout, so piping into `head` is quiet.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_CONJECTURE: u8 = 4;

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "Queer crystals of factorized involution words")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Insert a word or factorization and print P, Q and the trace.
    Insert(InsertArgs),
    /// Build a crystal graph and print or write its components.
    Crystal(CrystalArgs),
    /// Run a bumping operator and print the push chain as JSON.
    Bump(BumpArgs),
    /// Expand the generating function of a word class in Schur or Schur P functions.
    Expand(ExpandArgs),
    /// Run a verification target.
    Verify(VerifyArgs),
    /// List a word class, or the equivalence class of a word.
    Class(ClassArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliFlavor {
    /// Reduced words, Edelman-Greene insertion.
    #[value(alias = "k", alias = "reduced")]
    Eg,
    /// Involution words, orthogonal EG insertion.
    #[value(alias = "o", alias = "inv", alias = "involution")]
    Oeg,
    /// Fpf-involution words, symplectic EG insertion.
    #[value(alias = "sp", alias = "fpf")]
    Speg,
    /// Haiman mixed insertion (insert only).
    Hm,
}

impl CliFlavor {
    fn flavor(self) -> Result<Flavor, Error> {
        match self {
            CliFlavor::Eg => Ok(Flavor::Reduced),
            CliFlavor::Oeg => Ok(Flavor::Involution),
            CliFlavor::Speg => Ok(Flavor::Fpf),
            CliFlavor::Hm => Err(Error::InvalidInput("--flavor hm only applies to insert".into())),
        }
    }
}

#[derive(Args)]
struct InsertArgs {
    #[arg(long, value_enum, default_value = "eg")]
    flavor: CliFlavor,
    /// A factorization such as "(4)(23)(12)" or a plain word such as 332332.
    input: String,
    #[arg(long)]
    json: bool,
    /// Skip the check that the word belongs to the flavor's class.
    #[arg(long)]
    unchecked: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Carrier {
    /// Factorizations of the words of a class.
    Words,
    /// Shifted semistandard tableaux of a strict shape.
    Shtab,
    /// Semistandard tableaux of a partition.
    Tab,
}

#[derive(Args)]
struct CrystalArgs {
    #[arg(long, value_enum, default_value = "words")]
    carrier: Carrier,
    #[arg(long, value_enum, default_value = "oeg")]
    flavor: CliFlavor,
    /// The permutation, in cycle notation; fpf elements also take a window "[2,1,6,5,4,3]".
    #[arg(long = "pi", default_value = "1")]
    pi: String,
    /// Shape for the tableau carriers, e.g. 3,1.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
    /// Write one file per component into this directory instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest number of vertices to build.
    #[arg(long, env = "QC_VERTEX_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
}

#[derive(Args)]
struct BumpArgs {
    #[arg(long, value_enum, default_value = "oeg")]
    flavor: CliFlavor,
    #[arg(long = "pi")]
    pi: String,
    /// The word to bump, e.g. 2134.
    word: String,
    /// Largest number of push steps.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_enum, default_value = "oeg")]
    flavor: CliFlavor,
    #[arg(long = "pi")]
    pi: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// A target name, or "all".
    target: String,
    #[arg(long, default_value_t = Bounds::default().maxlen)]
    maxlen: usize,
    #[arg(long, default_value_t = Bounds::default().n)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long, value_enum, default_value = "oeg")]
    flavor: CliFlavor,
    /// List the class R(π), R^O(π) or R^Sp(π) of this permutation.
    #[arg(long = "pi", conflicts_with = "word", required_unless_present = "word")]
    pi: Option<String>,
    /// List the equivalence class of this word instead.
    #[arg(long)]
    word: Option<String>,
    /// Relation for --word: K, O, Sp, braid, braid-O, braid-Sp. Defaults to the flavor's.
    #[arg(long)]
    relation: Option<String>,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Insert(a) => cmd_insert(a),
        Cmd::Crystal(a) => cmd_crystal(a),
        Cmd::Bump(a) => cmd_bump(a),
        Cmd::Expand(a) => cmd_expand(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Class(a) => cmd_class(a),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::IterationCap { .. } => EXIT_RESOURCE,
        Error::Invariant(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

fn parse_target(s: &str, flavor: Flavor) -> Result<Target, Error> {
    Ok(match flavor {
        Flavor::Fpf => Target::Fpf(s.parse::<FpfInvolution>()?),
        _ => Target::Perm(s.parse::<Permutation>()?),
    })
}

fn parse_factorization(s: &str) -> Result<Factorization, Error> {
    let t = s.trim();
    if t.starts_with('(') {
        t.parse()
    } else {
        Ok(Factorization::singletons(&t.parse::<Word>()?))
    }
}

fn json_string(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn print_insertion<T: Display + serde::Serialize>(r: &InsertionResult<T>, json: bool) {
    if json {
        out!("{}", json_string(r));
        return;
    }
    out!("P:\n{}", r.p);
    out!("Q:\n{}", r.q);
    for t in &r.trace {
        let how = if t.column_inserted { "column" } else { "row" };
        let path: Vec<String> = t
            .steps
            .iter()
            .map(|s| {
                let kind = if s.line == qcrystal::insertion::Line::Row { "row" } else { "col" };
                match s.y {
                    Some(y) => format!("{kind} {}: {}->{y}", s.index, s.x),
                    None => format!("{kind} {}: {} placed", s.index, s.x),
                }
            })
            .collect();
        out!(
            "letter {} (factor {}): {how}, box ({},{}); {}",
            t.letter,
            t.factor,
            t.added.0,
            t.added.1,
            path.join(", ")
        );
    }
}

fn cmd_insert(a: InsertArgs) -> Result<u8, Error> {
    match a.flavor {
        CliFlavor::Hm => {
            let w = parse_factorization(&a.input)?.word();
            print_insertion(&hm_insert(&w)?, a.json);
        }
        CliFlavor::Eg => {
            let f = parse_factorization(&a.input)?;
            let r = if a.unchecked { eg_insert_unchecked(&f)? } else { eg_insert(&f)? };
            print_insertion(&r, a.json);
        }
        CliFlavor::Oeg | CliFlavor::Speg => {
            let f = parse_factorization(&a.input)?;
            let r = match (a.flavor, a.unchecked) {
                (CliFlavor::Oeg, false) => oeg_insert(&f)?,
                (CliFlavor::Oeg, true) => shifted_eg_insert_unchecked(&f, ShiftedVariant::Orthogonal)?,
                (_, false) => speg_insert(&f)?,
                (_, true) => shifted_eg_insert_unchecked(&f, ShiftedVariant::Symplectic)?,
            };
            print_insertion(&r, a.json);
        }
    }
    Ok(0)
}

fn parse_shape(s: &str, strict: bool) -> Result<Shape, Error> {
    let parts = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad shape part {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if strict {
        Shape::strict(parts)
    } else {
        Shape::partition(parts)
    }
}

fn cmd_crystal(a: CrystalArgs) -> Result<u8, Error> {
    if a.n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let shape = |strict| {
        a.shape
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("--shape is required for tableau carriers".into()))
            .and_then(|s| parse_shape(s, strict))
    };
    match a.carrier {
        Carrier::Words => {
            let flavor = a.flavor.flavor()?;
            let pi = parse_target(&a.pi, flavor)?;
            let c = FactorizationCrystal::new(a.n, flavor);
            emit_graph(&c, c.elements(&pi, flavor)?, &a)
        }
        Carrier::Shtab => emit_graph(&ShiftedTableauCrystal::new(a.n), shifted_semistandard(&shape(true)?, a.n), &a),
        Carrier::Tab => emit_graph(&TableauCrystal::new(a.n), semistandard(&shape(false)?, a.n), &a),
    }
}

fn emit_graph<C: Crystal>(c: &C, elems: Vec<C::Elem>, a: &CrystalArgs) -> Result<u8, Error> {
    if elems.len() > a.cap {
        return Err(Error::CapExceeded { cap: a.cap });
    }
    let g = CrystalGraph::from_elements(c, elems)?;
    let render = |g: &CrystalGraph<C::Elem>| {
        if a.json {
            json_string(&g.to_json())
        } else if a.dot {
            g.to_dot()
        } else {
            summary(g)
        }
    };
    match &a.out {
        None => {
            use std::io::Write;
            let _ = write!(std::io::stdout(), "{}", with_newline(render(&g)));
        },
        Some(dir) => {
            let io = |e: std::io::Error| Error::InvalidInput(format!("cannot write to {}: {e}", dir.display()));
            fs::create_dir_all(dir).map_err(io)?;
            let ext = if a.json { "json" } else if a.dot { "dot" } else { "txt" };
            for (k, comp) in g.components().iter().enumerate() {
                let path = dir.join(format!("component_{k}.{ext}"));
                fs::write(&path, with_newline(render(&g.subgraph(comp)))).map_err(io)?;
                out!("{}", path.display());
            }
        }
    }
    Ok(0)
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn summary<E>(g: &CrystalGraph<E>) -> String
where
    E: Clone + Ord + Display + serde::Serialize + Send + Sync,
{
    let mut s = format!(
        "{} vertices, {} edges, {} components, rank {}{}\n",
        g.len(),
        g.edges().len(),
        g.components().len(),
        g.rank(),
        if g.is_queer() { " (queer)" } else { "" }
    );
    for v in g.highest_weights() {
        s.push_str(&format!("highest weight {} of weight {:?}\n", one_line(&g.vertex(v).to_string()), g.weight(v)));
    }
    s.push_str(&format!("character {}\n", character(g)));
    s
}

fn one_line(s: &str) -> String {
    s.lines().map(str::trim).filter(|l| !l.is_empty()).collect::<Vec<_>>().join(" / ")
}

fn cmd_bump(a: BumpArgs) -> Result<u8, Error> {
    let flavor = a.flavor.flavor()?;
    let pi = parse_target(&a.pi, flavor)?;
    let w: Word = a.word.parse()?;
    let cap = a.cap.unwrap_or_else(|| default_push_cap(&w));
    let chain: Vec<MarkedWord> = bump_trace(&w, &pi, flavor, Some(cap))?.unwrap_or_default();
    let result = chain.last().map_or_else(|| w.clone(), |m| m.word.clone());
    let mut out = json!({
        "word": w.to_string(),
        "target": pi.to_string(),
        "flavor": flavor.name(),
        "chain": chain.iter().map(|m| json!({"word": m.word.to_string(), "mark": m.mark})).collect::<Vec<_>>(),
        "result": result.to_string(),
    });
    if flavor != Flavor::Reduced && !chain.is_empty() {
        let atoms = decompose_bump(&w, &pi, flavor)?;
        out["atoms"] = json!(atoms.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    }
    out!("{}", json_string(&out));
    Ok(0)
}

fn cmd_expand(a: ExpandArgs) -> Result<u8, Error> {
    let flavor = a.flavor.flavor()?;
    let pi = parse_target(&a.pi, flavor)?;
    if a.n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let (coeffs, warning) = stanley_expansion(&pi, flavor, a.n)?;
    if let Some(w) = &warning {
        eprintln!("warning: {w}");
    }
    let basis = if flavor == Flavor::Reduced { "s" } else { "P" };
    // largest shapes first
    let terms: Vec<(&Vec<usize>, &i64)> = coeffs.iter().rev().collect();
    if a.json {
        let list: Vec<_> = terms.iter().map(|(s, c)| json!({"shape": s, "coefficient": c})).collect();
        out!("{}", json_string(&json!({"basis": basis, "n": a.n, "terms": list, "warning": warning})));
    } else if terms.is_empty() {
        out!("0");
    } else {
        let parts: Vec<String> = terms
            .iter()
            .map(|(s, &c)| {
                let shape: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                let coeff = if c == 1 { String::new() } else { format!("{c}*") };
                format!("{coeff}{basis}_({})", shape.join(","))
            })
            .collect();
        out!("{}", parts.join(" + "));
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, Error> {
    let bounds = Bounds::new(a.maxlen, a.n)?;
    let targets: Vec<VerifyTarget> =
        if a.target == "all" { VerifyTarget::ALL.to_vec() } else { vec![a.target.parse()?] };
    let mut code = 0;
    let mut reports = Vec::new();
    for t in targets {
        let r = verify::run(t, bounds)?;
        let c = match (r.ok(), t.is_conjecture()) {
            (true, _) => 0,
            (false, false) => EXIT_FAIL,
            (false, true) => EXIT_CONJECTURE,
        };
        // a theorem failure outranks a conjecture counterexample
        code = match (code, c) {
            (EXIT_FAIL, _) | (_, EXIT_FAIL) => EXIT_FAIL,
            (x, y) => x.max(y),
        };
        if !a.json {
            print_report(&r);
        }
        reports.push(r);
    }
    if a.json {
        let v: Vec<_> = reports
            .iter()
            .map(|r| json!({"target": r.target, "bounds": r.bounds, "checked": r.checked, "ok": r.ok(), "failures": r.failures}))
            .collect();
        out!("{}", json_string(&v));
    }
    Ok(code)
}

fn print_report(r: &Report) {
    let b = r.bounds;
    let head = format!("{}: {} cases (maxlen {}, n {})", r.target, r.checked, b.maxlen, b.n);
    match r.minimal_counterexample() {
        None if r.target.is_conjecture() => out!("{head}: checked, no counterexample"),
        None => out!("{head}: pass"),
        Some(f) => {
            let what = if r.target.is_conjecture() { "counterexample" } else { "FAIL" };
            out!("{head}: {what}, {} failing cases", r.failures.len());
            out!("  minimal counterexample (size {}): {}", f.size, f.detail);
        }
    }
}

fn cmd_class(a: ClassArgs) -> Result<u8, Error> {
    let flavor = a.flavor.flavor()?;
    let words: Vec<Word> = match (&a.pi, &a.word) {
        (Some(pi), _) => enumerate_words(&parse_target(pi, flavor)?, flavor)?.into_iter().collect(),
        (None, Some(w)) => {
            let rel = match &a.relation {
                Some(r) => r.parse()?,
                None => match flavor {
                    Flavor::Reduced => Relation::K,
                    Flavor::Involution => Relation::O,
                    Flavor::Fpf => Relation::Sp,
                },
            };
            equivalence_class(&w.parse()?, rel).into_iter().collect()
        }
        (None, None) => return Err(Error::InvalidInput("give --pi or --word".into())),
    };
    if a.json {
        let list: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        out!("{}", json_string(&list));
    } else {
        for w in &words {
            out!("{}", if w.is_empty() { "∅".to_string() } else { w.to_string() });
        }
    }
    Ok(0)
}
