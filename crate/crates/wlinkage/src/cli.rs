//! The `wlinkage` binary: serialize blocks, hom matrices, flip data and
//! Virasoro values as JSON (rationals as exact "p/q" strings, never
//! floats) or Graphviz DOT. Identical invocations produce byte-identical
//! output.
//!
//! Exit codes: 0 success, 2 invalid input (bad flags, critical level),
//! 3 inconclusive (a certification bound was too small).

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::affine::Level;
use crate::blocks::{block_of_with, BlockPoset, DEFAULT_STEP_BOUND};
use crate::rootdata::{build_root_datum, LieType, Rational, RootDatum, Weight};
use crate::verma::{ff_dual_verma, hom_dim};
use crate::{Error, Result};

/// Default truncation length when neither `--max-len` nor the
/// `LINKAGE_MAX_LEN` environment variable is given.
const DEFAULT_MAX_LEN: usize = 6;

#[derive(Parser)]
#[command(
    name = "wlinkage",
    about = "Blocks, Verma hom posets and level-flip duality for affine W-algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a block as a poset of minimal coset representatives.
    Block(BlockArgs),
    /// Print the Verma hom matrix of a block.
    Homs(HomsArgs),
    /// Print the level-flip dual of a Verma datum.
    Flip(FlipArgs),
    /// Evaluate sl2 Virasoro central charge and conformal dimension.
    Virasoro(VirasoroArgs),
}

#[derive(Args)]
struct BlockArgs {
    /// Lie type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    lie_type: String,
    #[arg(long)]
    rank: usize,
    /// Level: an exact rational like -3 or -5/2, or generic-neg /
    /// generic-pos.
    #[arg(long, allow_hyphen_values = true)]
    level: String,
    /// Highest-weight lift in fundamental coordinates, comma-separated
    /// rationals.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Truncation: keep representatives of length ≤ this. Defaults to
    /// LINKAGE_MAX_LEN or 6.
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long, value_parser = ["json", "dot"], default_value = "json")]
    format: String,
    /// Degree bound for certifying the simple integral system (certified
    /// automatically when omitted).
    #[arg(long, allow_hyphen_values = true)]
    search_bound: Option<i64>,
}

#[derive(Args)]
struct HomsArgs {
    #[arg(long = "type")]
    lie_type: String,
    #[arg(long)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    level: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    search_bound: Option<i64>,
}

#[derive(Args)]
struct FlipArgs {
    #[arg(long = "type")]
    lie_type: String,
    #[arg(long)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    level: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct VirasoroArgs {
    /// sl2 level k ≠ -2, an exact rational.
    #[arg(short = 'k', allow_hyphen_values = true)]
    k: String,
    /// Highest weight vρ, by the scalar v.
    #[arg(short = 'v', allow_hyphen_values = true)]
    v: String,
}

#[derive(Serialize)]
struct CosetJson {
    word: Vec<usize>,
    length: usize,
    weight: Vec<String>,
}

#[derive(Serialize)]
struct FlipJson {
    dual_level: String,
    dual_weight_lift: Vec<String>,
    dual_weight_class: Vec<String>,
    shift: usize,
}

/// JSON shape of `block --format json`; mirrored by
/// `schema/block-report.schema.json`.
#[derive(Serialize)]
struct BlockReport {
    lie_type: String,
    rank: usize,
    level: String,
    weight_lift: Vec<String>,
    weight_class: Vec<String>,
    base_weight: Vec<String>,
    normalization: String,
    truncation_length: usize,
    simple_coroots: Vec<CorootJson>,
    j_finite: Vec<usize>,
    j_stab: Vec<usize>,
    cosets: Vec<CosetJson>,
    hasse_edges: Vec<[usize; 2]>,
    hom_matrix: Vec<Vec<u8>>,
    flip: FlipJson,
}

#[derive(Serialize)]
struct CorootJson {
    coroot: Vec<i64>,
    degree: i64,
}

#[derive(Serialize)]
struct HomsReport {
    lie_type: String,
    rank: usize,
    level: String,
    truncation_length: usize,
    cosets: Vec<CosetJson>,
    hom_matrix: Vec<Vec<u8>>,
    direction: String,
}

#[derive(Serialize)]
struct FlipReport {
    lie_type: String,
    rank: usize,
    level: String,
    weight_lift: Vec<String>,
    dual_level: String,
    dual_weight_lift: Vec<String>,
    dual_weight_class: Vec<String>,
    shift: usize,
}

#[derive(Serialize)]
struct VirasoroReport {
    k: String,
    v: String,
    c: String,
    delta: String,
    delta_plus: String,
    dual_c: String,
    dual_delta: String,
}

fn parse_lie_type(s: &str) -> Result<LieType> {
    match s.to_ascii_uppercase().as_str() {
        "A" => Ok(LieType::A),
        "B" => Ok(LieType::B),
        "C" => Ok(LieType::C),
        "D" => Ok(LieType::D),
        "E" => Ok(LieType::E),
        "F" => Ok(LieType::F),
        "G" => Ok(LieType::G),
        other => Err(Error::InvalidInput(format!("unknown Lie type {other:?}"))),
    }
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight> {
    let coords = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<Rational>()
                .map_err(|e| Error::InvalidInput(format!("weight coordinate {p:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != rank {
        return Err(Error::DimensionMismatch(format!(
            "weight has {} coordinates for rank {rank}",
            coords.len()
        )));
    }
    Ok(Weight(coords))
}

fn rational_strings(w: &Weight) -> Vec<String> {
    w.0.iter().map(|x| x.to_string()).collect()
}

fn effective_max_len(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("LINKAGE_MAX_LEN")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_MAX_LEN)
}

struct BlockInput {
    datum: Arc<RootDatum>,
    level: Level,
    lift: Weight,
    poset: BlockPoset,
}

fn build_block(
    lie_type: &str,
    rank: usize,
    level: &str,
    weight: &str,
    max_len: usize,
    search_bound: Option<i64>,
) -> Result<BlockInput> {
    let ty = parse_lie_type(lie_type)?;
    let datum = Arc::new(build_root_datum(ty, rank)?);
    let level = Level::parse(level)?;
    if level.is_critical(&datum) {
        return Err(Error::CriticalLevel);
    }
    let lift = parse_weight(weight, datum.rank)?;
    let poset = block_of_with(
        &datum,
        &level,
        &lift,
        max_len,
        search_bound,
        DEFAULT_STEP_BOUND,
    )?;
    Ok(BlockInput {
        datum,
        level,
        lift,
        poset,
    })
}

fn hom_matrix(poset: &BlockPoset) -> Result<Vec<Vec<u8>>> {
    let n = poset.reps.len();
    let mut m = vec![vec![0u8; n]; n];
    for (v, row) in m.iter_mut().enumerate() {
        for (w, cell) in row.iter_mut().enumerate() {
            *cell = hom_dim(poset, v, poset, w)?.dim;
        }
    }
    Ok(m)
}

fn coset_json(poset: &BlockPoset) -> Vec<CosetJson> {
    poset
        .reps
        .iter()
        .map(|r| CosetJson {
            word: r.word.clone(),
            length: r.length,
            weight: rational_strings(&r.weight),
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_block(a: &BlockArgs) -> Result<String> {
    let max_len = effective_max_len(a.max_len);
    let input = build_block(
        &a.lie_type,
        a.rank,
        &a.level,
        &a.weight,
        max_len,
        a.search_bound,
    )?;
    if a.format == "dot" {
        return Ok(render_dot(&input.poset));
    }

    let datum = &input.datum;
    let poset = &input.poset;
    let dual = ff_dual_verma(datum, &input.level, &input.lift)?;
    let class = crate::blocks::weight_class_normal_form(datum, &input.lift)?;
    let negative = input.level.is_negative(datum)?;
    let report = BlockReport {
        lie_type: a.lie_type.to_ascii_uppercase(),
        rank: a.rank,
        level: input.level.to_string(),
        weight_lift: rational_strings(&input.lift),
        weight_class: rational_strings(&class),
        base_weight: rational_strings(&poset.system.base_weight),
        normalization: if negative { "antidominant" } else { "dominant" }.into(),
        truncation_length: poset.truncation_length,
        simple_coroots: poset
            .system
            .simple_coroots
            .iter()
            .map(|c| CorootJson {
                coroot: c.coroot.clone(),
                degree: c.degree,
            })
            .collect(),
        j_finite: poset.system.j_finite.clone(),
        j_stab: poset.system.j_stab.clone(),
        cosets: coset_json(poset),
        hasse_edges: poset.hasse_edges.iter().map(|&(i, j)| [i, j]).collect(),
        hom_matrix: hom_matrix(poset)?,
        flip: FlipJson {
            dual_level: dual.level.to_string(),
            dual_weight_lift: rational_strings(&dual.weight_lift),
            dual_weight_class: rational_strings(&dual.weight),
            shift: dual.shift,
        },
    };
    Ok(to_json(&report))
}

fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Hasse diagram as a Graphviz digraph, edges pointing up the order.
fn render_dot(poset: &BlockPoset) -> String {
    let mut out = String::from("digraph block {\n  rankdir = BT;\n");
    for (i, r) in poset.reps.iter().enumerate() {
        let weight = rational_strings(&r.weight).join(",");
        out.push_str(&format!(
            "  n{i} [label=\"{} | {}\"];\n",
            word_label(&r.word),
            weight
        ));
    }
    for &(i, j) in &poset.hasse_edges {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}

fn cmd_homs(a: &HomsArgs) -> Result<String> {
    let max_len = effective_max_len(a.max_len);
    let input = build_block(
        &a.lie_type,
        a.rank,
        &a.level,
        &a.weight,
        max_len,
        a.search_bound,
    )?;
    let report = HomsReport {
        lie_type: a.lie_type.to_ascii_uppercase(),
        rank: a.rank,
        level: input.level.to_string(),
        truncation_length: input.poset.truncation_length,
        cosets: coset_json(&input.poset),
        hom_matrix: hom_matrix(&input.poset)?,
        direction: "embedding".into(),
    };
    Ok(to_json(&report))
}

fn cmd_flip(a: &FlipArgs) -> Result<String> {
    let ty = parse_lie_type(&a.lie_type)?;
    let datum = build_root_datum(ty, a.rank)?;
    let level = Level::parse(&a.level)?;
    let lift = parse_weight(&a.weight, datum.rank)?;
    let dual = ff_dual_verma(&datum, &level, &lift)?;
    let report = FlipReport {
        lie_type: a.lie_type.to_ascii_uppercase(),
        rank: a.rank,
        level: level.to_string(),
        weight_lift: rational_strings(&lift),
        dual_level: dual.level.to_string(),
        dual_weight_lift: rational_strings(&dual.weight_lift),
        dual_weight_class: rational_strings(&dual.weight),
        shift: dual.shift,
    };
    Ok(to_json(&report))
}

fn cmd_virasoro(a: &VirasoroArgs) -> Result<String> {
    let k =
        a.k.parse::<Rational>()
            .map_err(|e| Error::InvalidInput(format!("level {:?}: {e}", a.k)))?;
    let v =
        a.v.parse::<Rational>()
            .map_err(|e| Error::InvalidInput(format!("weight {:?}: {e}", a.v)))?;
    let m = crate::virasoro::VirasoroVerma::from_sl2(&k, &v)?;
    let dual = crate::virasoro::ff_dual_virasoro(&m);
    let report = VirasoroReport {
        k: k.to_string(),
        v: v.to_string(),
        c: m.c.to_string(),
        delta: m.delta.to_string(),
        delta_plus: crate::virasoro::conformal_dim_plus(&k, &v)?.to_string(),
        dual_c: dual.c.to_string(),
        dual_delta: dual.delta.to_string(),
    };
    Ok(to_json(&report))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconclusive(_) => 3,
        _ => 2,
    }
}

/// Run with explicit arguments, writing reports to `out`. Returns the
/// process exit code.
pub fn run_from<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version land here too; clap assigns them code 0.
            let _ = e.print();
            return if e.exit_code() == 0 { 0 } else { 2 };
        }
    };
    let result = match &cli.cmd {
        Command::Block(a) => cmd_block(a),
        Command::Homs(a) => cmd_homs(a),
        Command::Flip(a) => cmd_flip(a),
        Command::Virasoro(a) => cmd_virasoro(a),
    };
    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let mut stdout = std::io::stdout();
    let code = run_from(std::env::args_os(), &mut stdout);
    let _ = stdout.flush();
    code
}
