//! Command-line front end: argument parsing, session configuration and the
//! text / JSON reports.
//!
//! Every JSON report carries `"schema": "cw-moduli/1"`.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chartab::CharacterTable;
use crate::cw::{cw_characters, regular_multiple, MultiplicityVector};
use crate::decomposition::{canonical_decomposition, stabilization_report};
use crate::error::Error;
use crate::group::{FiniteGroup, GroupBuilder, GroupSpec, MetacyclicParams, DEFAULT_ORDER_CAP};
use crate::hurwitz::{
    enumerate_genus, enumerate_hurwitz_vectors, BranchingData, EnumOptions, HurwitzVector, DEFAULT_ENUMERATION_CAP,
    THREADS_ENV,
};
use crate::metacyclic::{rr_component_lower_bound, schur_multiplier_order};
use crate::modular::DEFAULT_SEED;

pub const SCHEMA: &str = "cw-moduli/1";

/// Text tables switch to JSON lines above this many irreducible characters.
pub const MAX_TEXT_COLUMNS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionConfig {
    pub group_spec: Option<String>,
    pub genus: Option<u64>,
    pub k_max: Option<u64>,
    pub up_to_conjugacy: bool,
    pub output: OutputFormat,
    pub enumeration_cap: usize,
    pub seed: u64,
    pub max_order: usize,
    pub threads: usize,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            group_spec: None,
            genus: None,
            k_max: None,
            up_to_conjugacy: false,
            output: OutputFormat::Text,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            seed: DEFAULT_SEED,
            max_order: DEFAULT_ORDER_CAP,
            threads: 1,
        }
    }
}

impl SessionConfig {
    fn validate(&self) -> Result<(), Error> {
        if self.k_max == Some(0) {
            return Err(Error::Usage("--k-max must be at least 1".into()));
        }
        if self.enumeration_cap == 0 {
            return Err(Error::Usage("--cap must be at least 1".into()));
        }
        Ok(())
    }

    fn group(&self) -> Result<FiniteGroup, Error> {
        let spec = self.group_spec.as_deref().ok_or_else(|| Error::Usage("--group is required".into()))?;
        Ok(spec.parse::<GroupSpec>()?.build_with(GroupBuilder::new(self.max_order))?)
    }

    fn genus(&self) -> Result<u64, Error> {
        match self.genus {
            Some(g) if g >= 2 => Ok(g),
            Some(g) => Err(Error::Usage(format!("--genus must be at least 2, got {g}"))),
            None => Err(Error::Usage("--genus is required".into())),
        }
    }

    fn enum_options(&self) -> EnumOptions {
        EnumOptions { up_to_conjugacy: self.up_to_conjugacy, cap: self.enumeration_cap, threads: self.threads }
    }

    fn granularity(&self) -> &'static str {
        if self.up_to_conjugacy {
            "conjugacy-orbits"
        } else {
            "raw"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandRequest {
    GroupInfo,
    HurwitzEnumerate { g_quot: Option<usize>, orders: Option<Vec<usize>> },
    Cw { vector: String, k_lo: u64, k_hi: u64 },
    Decompose,
    MetacyclicH2 { m: u64, n: u64, r: u64 },
    MetacyclicRrBound { m: u64, n: u64, r: u64, genus: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "cw-moduli", version, about = "Chevalley-Weil multiplicities and representation-type decompositions")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomised internals (primitive root sampling).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Maximum number of Hurwitz vectors to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
    /// Largest accepted group order.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub max_order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group structure and character table.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Hurwitz vector enumeration.
    Hurwitz {
        #[command(subcommand)]
        cmd: HurwitzCmd,
    },
    /// Multiplicity table for one Hurwitz vector.
    Cw(CwArgs),
    /// Canonical representation-type decomposition for a genus.
    Decompose(DecomposeArgs),
    /// Split metacyclic groups.
    Metacyclic {
        #[command(subcommand)]
        cmd: MetacyclicCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    Info {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum HurwitzCmd {
    Enumerate {
        #[arg(long)]
        group: String,
        /// Enumerate every branching datum of this genus.
        #[arg(long)]
        genus: Option<u64>,
        /// Quotient genus of a single branching datum (with --orders).
        #[arg(long)]
        g_quot: Option<usize>,
        /// Comma-separated branch orders of a single branching datum.
        #[arg(long, value_delimiter = ',')]
        orders: Option<Vec<usize>>,
        #[arg(long)]
        up_to_conjugacy: bool,
    },
}

#[derive(Debug, Args)]
pub struct CwArgs {
    #[arg(long)]
    pub group: String,
    /// Hurwitz vector as JSON: {"g_quot": .., "handles": [..], "branches": [..]}.
    #[arg(long)]
    pub vector: String,
    /// Level or inclusive range `a..b`.
    #[arg(long, default_value = "1..3")]
    pub k: String,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub genus: u64,
    /// Highest level in the stabilisation report (default |G|).
    #[arg(long)]
    pub k_max: Option<u64>,
    #[arg(long)]
    pub up_to_conjugacy: bool,
}

#[derive(Debug, Args)]
pub struct MetacyclicArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub r: u64,
}

#[derive(Debug, Subcommand)]
pub enum MetacyclicCmd {
    /// Order of the Schur multiplier.
    H2(MetacyclicArgs),
    /// Lower bound on components of the regular-representation locus.
    RrBound {
        #[command(flatten)]
        params: MetacyclicArgs,
        #[arg(long)]
        genus: u64,
    },
}

/// Parses `a..b` (inclusive) or a single level `a`.
pub fn parse_k_range(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Usage(format!("bad level range {s:?}; expected a or a..b with 1 <= a <= b"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?)
        }
        None => {
            let k = s.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if lo < 1 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

impl Cli {
    /// Splits parsed arguments into a command and a session configuration.
    pub fn into_request(self) -> Result<(CommandRequest, SessionConfig), Error> {
        let mut cfg = SessionConfig {
            output: if self.json { OutputFormat::Json } else { OutputFormat::Text },
            enumeration_cap: self.cap,
            seed: self.seed,
            max_order: self.max_order,
            threads: EnumOptions::from_env().threads,
            ..Default::default()
        };
        let cmd = match self.command {
            Command::Group { cmd: GroupCmd::Info { group } } => {
                cfg.group_spec = Some(group);
                CommandRequest::GroupInfo
            }
            Command::Hurwitz { cmd: HurwitzCmd::Enumerate { group, genus, g_quot, orders, up_to_conjugacy } } => {
                cfg.group_spec = Some(group);
                cfg.genus = genus;
                cfg.up_to_conjugacy = up_to_conjugacy;
                CommandRequest::HurwitzEnumerate { g_quot, orders }
            }
            Command::Cw(a) => {
                cfg.group_spec = Some(a.group);
                let (k_lo, k_hi) = parse_k_range(&a.k)?;
                CommandRequest::Cw { vector: a.vector, k_lo, k_hi }
            }
            Command::Decompose(a) => {
                cfg.group_spec = Some(a.group);
                cfg.genus = Some(a.genus);
                cfg.k_max = a.k_max;
                cfg.up_to_conjugacy = a.up_to_conjugacy;
                CommandRequest::Decompose
            }
            Command::Metacyclic { cmd: MetacyclicCmd::H2(p) } => {
                CommandRequest::MetacyclicH2 { m: p.m, n: p.n, r: p.r }
            }
            Command::Metacyclic { cmd: MetacyclicCmd::RrBound { params: p, genus } } => {
                CommandRequest::MetacyclicRrBound { m: p.m, n: p.n, r: p.r, genus }
            }
        };
        Ok((cmd, cfg))
    }
}

/// Runs one command; exit status 0 on success, 1 on domain errors, 2 on
/// usage errors.
pub fn run(cmd: &CommandRequest, cfg: &SessionConfig) -> Outcome {
    match execute(cmd, cfg) {
        Ok(stdout) => Outcome { status: 0, stdout, stderr: String::new() },
        Err(e) => {
            Outcome { status: if e.is_usage() { 2 } else { 1 }, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match cli.into_request() {
            Ok((cmd, cfg)) => run(&cmd, &cfg),
            Err(e) => Outcome { status: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
        },
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome { status, stdout: text, stderr: String::new() }
            } else {
                Outcome { status, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn execute(cmd: &CommandRequest, cfg: &SessionConfig) -> Result<String, Error> {
    cfg.validate()?;
    match cmd {
        CommandRequest::GroupInfo => group_info(cfg),
        CommandRequest::HurwitzEnumerate { g_quot, orders } => hurwitz_enumerate(cfg, *g_quot, orders.as_deref()),
        CommandRequest::Cw { vector, k_lo, k_hi } => cw_report(cfg, vector, *k_lo, *k_hi),
        CommandRequest::Decompose => decompose_report(cfg),
        CommandRequest::MetacyclicH2 { m, n, r } => {
            let res = schur_multiplier_order(MetacyclicParams::new(*m, *n, *r)?)?;
            Ok(match cfg.output {
                OutputFormat::Text => format!("{}\n", res.d),
                OutputFormat::Json => to_json_line(json!({"schema": SCHEMA, "m": m, "n": n, "r": r, "d": res.d})),
            })
        }
        CommandRequest::MetacyclicRrBound { m, n, r, genus } => {
            let bound = rr_component_lower_bound(MetacyclicParams::new(*m, *n, *r)?, *genus)?;
            Ok(match cfg.output {
                OutputFormat::Text => format!("{bound}\n"),
                OutputFormat::Json => to_json_line(
                    json!({"schema": SCHEMA, "m": m, "n": n, "r": r, "genus": genus, "lower_bound": bound}),
                ),
            })
        }
    }
}

fn to_json_line(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("JSON values serialise");
    s.push('\n');
    s
}

fn table_for(g: &FiniteGroup, k: u64, genus: u64, cfg: &SessionConfig) -> Result<CharacterTable, Error> {
    Ok(CharacterTable::with_seed(g, k, genus, cfg.seed)?)
}

/// Entry `rho, class` of the table: the integer when rational, otherwise
/// `residue@order` with the order of the class elements.
fn format_value(t: &CharacterTable, rho: usize, class: usize) -> String {
    match t.rational_value(rho, class) {
        Some(v) => v.to_string(),
        None => {
            let rep = t.classes().representative(class);
            format!("{}@{}", t.irreducibles()[rho].value(class), t.group().elem_order(rep))
        }
    }
}

fn group_info(cfg: &SessionConfig) -> Result<String, Error> {
    let g = cfg.group()?;
    let t = table_for(&g, 1, 2, cfg)?;
    let cls = t.classes();
    let nclass = cls.class_count();
    let class_json: Vec<Value> = (0..nclass)
        .map(|c| {
            let rep = cls.representative(c);
            json!({"representative": rep, "size": cls.class_size(c), "order": g.elem_order(rep)})
        })
        .collect();
    let chars_json: Vec<Value> = (0..t.len())
        .map(|rho| {
            let chi = &t.irreducibles()[rho];
            let values: Vec<Value> =
                (0..nclass).map(|c| json!({"residue": chi.value(c), "integer": t.rational_value(rho, c)})).collect();
            json!({"index": rho, "degree": chi.degree(), "values": values})
        })
        .collect();
    if cfg.output == OutputFormat::Json {
        return Ok(to_json_line(json!({
            "schema": SCHEMA,
            "group": g.label(),
            "order": g.order(),
            "exponent": g.exponent(),
            "prime": t.prime().p(),
            "root_of_unity": t.prime().root(),
            "classes": class_json,
            "degrees": t.degrees(),
            "characters": chars_json,
        })));
    }
    let mut out = String::new();
    writeln!(out, "group: {}", g.label()).unwrap();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "exponent: {}", g.exponent()).unwrap();
    writeln!(
        out,
        "working prime: p = {}, root of unity z = {} (order {})",
        t.prime().p(),
        t.prime().root(),
        g.exponent()
    )
    .unwrap();
    writeln!(out, "classes: {}", nclass).unwrap();
    writeln!(out, "{:>6} {:>6} {:>6} {:>6}", "class", "rep", "size", "order").unwrap();
    for c in 0..nclass {
        let rep = cls.representative(c);
        writeln!(out, "{:>6} {:>6} {:>6} {:>6}", c, rep, cls.class_size(c), g.elem_order(rep)).unwrap();
    }
    writeln!(out, "degrees: {}", join(&t.degrees())).unwrap();
    writeln!(out, "character table (irrational entries shown as residue@order mod p):").unwrap();
    if t.len() > MAX_TEXT_COLUMNS {
        for row in chars_json {
            out.push_str(&to_json_line(row));
        }
        return Ok(out);
    }
    let cells: Vec<Vec<String>> =
        (0..t.len()).map(|rho| (0..nclass).map(|c| format_value(&t, rho, c)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(3);
    write!(out, "{:>6}", "").unwrap();
    for c in 0..nclass {
        write!(out, " {:>width$}", format!("c{c}")).unwrap();
    }
    out.push('\n');
    for (rho, row) in cells.iter().enumerate() {
        write!(out, "{:>6}", format!("chi{rho}")).unwrap();
        for cell in row {
            write!(out, " {cell:>width$}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn hurwitz_enumerate(cfg: &SessionConfig, g_quot: Option<usize>, orders: Option<&[usize]>) -> Result<String, Error> {
    let g = cfg.group()?;
    let opts = cfg.enum_options();
    let (genus, groups) = match (cfg.genus, g_quot) {
        (Some(_), None) => {
            let genus = cfg.genus()?;
            if orders.is_some() {
                return Err(Error::Usage("--orders needs --g-quot instead of --genus".into()));
            }
            (genus as i64, enumerate_genus(&g, genus, &opts)?)
        }
        (None, Some(h)) => {
            let d = BranchingData::new(&g, h, orders.unwrap_or_default().to_vec())?;
            let genus = d.genus(&g)?;
            let vs = enumerate_hurwitz_vectors(&g, &d, &opts)?;
            (genus, vec![(d, vs)])
        }
        _ => return Err(Error::Usage("give either --genus or --g-quot [--orders]".into())),
    };
    if cfg.output == OutputFormat::Json {
        let data: Vec<Value> = groups
            .iter()
            .map(|(d, vs)| {
                json!({"g_quot": d.g_quot, "branch_orders": d.branch_orders, "count": vs.len(), "vectors": vs})
            })
            .collect();
        return Ok(to_json_line(json!({
            "schema": SCHEMA,
            "group": g.label(),
            "genus": genus,
            "granularity": cfg.granularity(),
            "branching_data": data,
        })));
    }
    let mut out = String::new();
    writeln!(out, "group: {} (order {})", g.label(), g.order()).unwrap();
    writeln!(out, "genus: {genus}").unwrap();
    writeln!(out, "granularity: {}", cfg.granularity()).unwrap();
    for (d, vs) in &groups {
        writeln!(out, "branching data {d}: {} vectors", vs.len()).unwrap();
        for v in vs {
            writeln!(out, "  {v}").unwrap();
        }
    }
    Ok(out)
}

fn cw_report(cfg: &SessionConfig, vector: &str, k_lo: u64, k_hi: u64) -> Result<String, Error> {
    let g = cfg.group()?;
    let v = HurwitzVector::from_json(vector)?;
    v.validate(&g)?;
    let genus = v.genus(&g)?;
    let t = table_for(&g, k_hi, genus.max(2) as u64, cfg)?;
    let rows = cw_characters(&v, &t, k_lo..=k_hi)?;
    if cfg.output == OutputFormat::Json {
        let regular: Vec<Option<u64>> = rows.iter().map(|mv| regular_multiple(mv, &t)).collect();
        return Ok(to_json_line(json!({
            "schema": SCHEMA,
            "group": g.label(),
            "vector": v,
            "genus": genus,
            "degrees": t.degrees(),
            "records": rows,
            "regular_multiples": regular,
        })));
    }
    let mut out = String::new();
    writeln!(out, "group: {} (order {})", g.label(), g.order()).unwrap();
    writeln!(out, "vector: {v}").unwrap();
    writeln!(out, "genus: {genus}").unwrap();
    out.push_str(&multiplicity_table(&t, &rows));
    Ok(out)
}

fn multiplicity_table(t: &CharacterTable, rows: &[MultiplicityVector]) -> String {
    let mut out = String::new();
    if t.len() > MAX_TEXT_COLUMNS {
        for mv in rows {
            out.push_str(&to_json_line(serde_json::to_value(mv).expect("serialisable")));
        }
        return out;
    }
    let width = rows.iter().flat_map(|r| r.mults.iter()).map(|m| m.to_string().len()).max().unwrap_or(1).max(4);
    write!(out, "{:>4}", "k").unwrap();
    for rho in 0..t.len() {
        write!(out, " {:>width$}", format!("chi{rho}")).unwrap();
    }
    out.push_str("  regular\n");
    for mv in rows {
        write!(out, "{:>4}", mv.k).unwrap();
        for m in &mv.mults {
            write!(out, " {m:>width$}").unwrap();
        }
        match regular_multiple(mv, t) {
            Some(n) => writeln!(out, "  {n} x reg").unwrap(),
            None => writeln!(out, "  -").unwrap(),
        }
    }
    out
}

#[derive(Serialize)]
struct BlockJson<'a> {
    key: Vec<&'a [u64]>,
    members: &'a [usize],
}

fn decompose_report(cfg: &SessionConfig) -> Result<String, Error> {
    let g = cfg.group()?;
    let genus = cfg.genus()?;
    let order = g.order() as u64;
    let k_report = cfg.k_max.unwrap_or(order);
    let t = table_for(&g, k_report.max(order), genus, cfg)?;
    let groups = enumerate_genus(&g, genus, &cfg.enum_options())?;
    let items: Vec<HurwitzVector> = groups.iter().flat_map(|(_, vs)| vs.iter().cloned()).collect();
    let canon = canonical_decomposition(&items, &t)?;
    let report = stabilization_report(&items, &t, k_report)?;
    let d = &canon.decomposition;
    if cfg.output == OutputFormat::Json {
        let blocks: Vec<BlockJson> = d
            .blocks()
            .iter()
            .zip(d.keys())
            .map(|(members, key)| BlockJson { key: key.iter().map(|mv| mv.mults.as_slice()).collect(), members })
            .collect();
        let data: Vec<Value> = groups
            .iter()
            .map(|(bd, vs)| json!({"g_quot": bd.g_quot, "branch_orders": bd.branch_orders, "count": vs.len()}))
            .collect();
        return Ok(to_json_line(json!({
            "schema": SCHEMA,
            "group": g.label(),
            "genus": genus,
            "granularity": cfg.granularity(),
            "degrees": t.degrees(),
            "branching_data": data,
            "items": items,
            "blocks": blocks,
            "stabilization_depth": canon.stabilization_depth,
            "levels": report.levels,
        })));
    }
    let mut out = String::new();
    writeln!(out, "group: {} (order {})", g.label(), g.order()).unwrap();
    writeln!(out, "genus: {genus}").unwrap();
    writeln!(out, "item granularity: {}", cfg.granularity()).unwrap();
    writeln!(out, "degrees: {}", join(&t.degrees())).unwrap();
    writeln!(out, "branching data: {}", groups.len()).unwrap();
    for (bd, vs) in &groups {
        writeln!(out, "  {bd}: {} items", vs.len()).unwrap();
    }
    writeln!(out, "items: {}", items.len()).unwrap();
    writeln!(out, "canonical decomposition over k = 1..{order}: {} blocks", d.block_count()).unwrap();
    for (b, (members, key)) in d.blocks().iter().zip(d.keys()).enumerate() {
        writeln!(out, "block {b}: {} items", members.len()).unwrap();
        for mv in key {
            writeln!(out, "  k={:<3} ({})", mv.k, mv.mults.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","))
                .unwrap();
        }
        for &i in members {
            writeln!(out, "  [{i}] {}", items[i]).unwrap();
        }
    }
    writeln!(out, "stabilization depth: {}", canon.stabilization_depth).unwrap();
    writeln!(out, "levels (k: level blocks / running blocks):").unwrap();
    for l in &report.levels {
        let split = if l.new_split { " split" } else { "" };
        let period = match l.matches_period {
            Some(true) => format!(" (= level {})", l.k - order),
            Some(false) => " (PERIOD MISMATCH)".to_string(),
            None => String::new(),
        };
        writeln!(out, "  k={}: {} / {}{split}{period}", l.k, l.level_blocks, l.running_blocks).unwrap();
    }
    Ok(out)
}

/// Name of the environment variable read for the worker count.
pub fn threads_env() -> &'static str {
    THREADS_ENV
}
