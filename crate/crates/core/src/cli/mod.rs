//! The `dswitch` command line. [`run`] parses argv, executes one command
//! and returns a JSON report; the binary only prints it.
//!
//! Permutations are given in 1-based cycle notation. Vertex and point
//! indices in files and `--members` lists are 0-based. Graph files ending in
//! `.json` are edge lists, anything else is read as graph6.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, CatalogError};
use crate::classify::{self, BlockRelation, ClassificationReport, ClassifyError, ClassifyOptions};
use crate::designs::{DesignError, DesignJson, IncidenceStructure};
use crate::geometry::{self, GeometryError, ProjectiveSpace};
use crate::graph::{emit_graph6, parse_graph6, Graph, GraphError, GraphJson};
use crate::perm::{PermError, Permutation};
use crate::switching::{
    apply_switch, compatible_ac, cospectral, derive_r, derive_r_perm, design_realizable, verify_site,
    Realizability, SchemeError, SchemeJson, SiteMode, SwitchSite, SwitchingScheme,
};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "DSWITCH_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("bad JSON in {path}: {message}")]
    Json { path: PathBuf, message: String },
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    DomainError,
    UsageError,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: Vec<String>,
    pub status: Status,
    pub payload: Value,
}

impl CommandReport {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::UsageError => 1,
            Status::DomainError => 2,
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Parser)]
#[command(name = "dswitch", about = "Exact switching of graphs by pairs of (r, lambda)-designs")]
struct Cli {
    /// Worker threads for the parallel searches (0 = one per core).
    #[arg(long, global = true, env = THREADS_ENV, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Design files.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Switching schemes.
    #[command(subcommand)]
    Scheme(SchemeCmd),
    /// Apply or check a switch on a graph.
    #[command(subcommand)]
    Switch(SwitchCmd),
    /// Compare two graphs.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Classify the switches of a design up to its automorphisms.
    Classify {
        #[arg(long)]
        design: PathBuf,
        /// Allow block permutations that only preserve disjointness; cosets
        /// that break an intersection size are counted and dropped.
        #[arg(long)]
        parallelism_only: bool,
        #[arg(long, default_value_t = classify::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Named switching methods.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Projective geometry constructions.
    #[command(subcommand)]
    Geometry(GeometryCmd),
    /// Block-counting identities checked by enumeration.
    Identities {
        /// Part size; all of 2..=6 when omitted.
        #[arg(long)]
        c: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum DesignCmd {
    /// Check the (r, lambda) conditions.
    Validate { file: PathBuf },
    /// Add block complements and/or the empty and full blocks.
    Closure {
        file: PathBuf,
        #[arg(long)]
        complements: bool,
        #[arg(long)]
        empty_full: bool,
    },
}

#[derive(Debug, Args)]
struct SchemeInput {
    /// Scheme file.
    #[arg(long, conflicts_with = "catalog")]
    scheme: Option<PathBuf>,
    /// Catalog id instead of a file.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Debug, Subcommand)]
enum SchemeCmd {
    /// Derive R from a design and a block permutation, or from two designs.
    Derive {
        #[arg(long)]
        design: PathBuf,
        #[arg(long, conflicts_with = "second", required_unless_present = "second")]
        perm: Option<String>,
        #[arg(long)]
        second: Option<PathBuf>,
    },
    /// Size, level and provenance of a scheme.
    Inspect(SchemeInput),
    /// Graphs on the switching set that the scheme maps to graphs.
    CompatibleAc {
        #[command(flatten)]
        input: SchemeInput,
        /// Every labelled graph instead of one per relabelling class.
        #[arg(long)]
        all: bool,
    },
    /// Outside neighbourhoods the scheme accepts, with their images.
    CompatibleVectors(SchemeInput),
    /// Whether the compatible vectors carry design multiplicities.
    Realizable(SchemeInput),
}

#[derive(Debug, Args)]
struct SiteArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    input: SchemeInput,
    /// Comma-separated 0-based vertices, in switching-set order.
    #[arg(long, value_delimiter = ',', required = true)]
    members: Vec<usize>,
}

#[derive(Debug, Subcommand)]
enum SwitchCmd {
    Apply {
        #[command(flatten)]
        site: SiteArgs,
        #[arg(long, default_value = "g6")]
        out: GraphFormat,
    },
    Verify {
        #[command(flatten)]
        site: SiteArgs,
        /// Only accept blocks of the source design (plus empty and full).
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    Cospectral { first: PathBuf, second: PathBuf },
    Rcospectral { first: PathBuf, second: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CatalogCmd {
    List,
    Get { id: String },
    /// Re-derive an entry from its source design.
    Check { id: String },
}

#[derive(Debug, Subcommand)]
enum GeometryCmd {
    /// Line graph of PG(n - 1, q), optionally switched at a plane.
    Qtriangular {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        switch_plane: usize,
        /// Permutation of the plane's pencils; no switch when omitted.
        #[arg(long)]
        perm: Option<String>,
        #[arg(long, default_value = "g6")]
        out: GraphFormat,
    },
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum GraphFormat {
    G6,
    Json,
}

fn encode_graph(g: &Graph, format: GraphFormat) -> Value {
    match format {
        GraphFormat::G6 => Value::String(emit_graph6(g)),
        GraphFormat::Json => json!(g.to_json()),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), message: e.to_string() })
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Json { path: path.into(), message: e.to_string() })
}

fn read_design(path: &Path) -> Result<IncidenceStructure, CliError> {
    Ok(IncidenceStructure::from_json(&read_json::<DesignJson>(path)?)?)
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    if path.extension().is_some_and(|e| e == "json") {
        Ok(Graph::from_json(&read_json::<GraphJson>(path)?)?)
    } else {
        Ok(parse_graph6(read_text(path)?.trim().as_bytes())?)
    }
}

fn load_scheme(input: &SchemeInput) -> Result<SwitchingScheme, CliError> {
    match (&input.scheme, &input.catalog) {
        (Some(path), _) => Ok(SwitchingScheme::from_json(&read_json::<SchemeJson>(path)?)?),
        (None, Some(id)) => Ok(catalog::get(id)?.scheme),
        (None, None) => Err(CliError::Usage("one of --scheme or --catalog is required".into())),
    }
}

fn points(mask: u64) -> Vec<usize> {
    (0..64).filter(|&p| mask >> p & 1 == 1).collect()
}

/// Parses and executes `argv` (program name first).
pub fn run<I, S>(argv: I) -> CommandReport
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let command = argv.iter().skip(1).cloned().collect();
    let report = |status, payload| CommandReport { command, status, payload };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => report(Status::Ok, json!({ "help": text })),
                _ => report(Status::UsageError, json!({ "error": text })),
            };
        }
    };
    let outcome = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool.install(|| execute(cli.command)),
        Err(e) => Err(CliError::Usage(format!("cannot start {} worker threads: {e}", cli.threads))),
    };
    match outcome {
        Ok((true, payload)) => report(Status::Ok, payload),
        Ok((false, payload)) => report(Status::DomainError, payload),
        Err(CliError::Usage(msg)) => report(Status::UsageError, json!({ "error": msg })),
        Err(e) => report(Status::DomainError, json!({ "error": e.to_string() })),
    }
}

/// Runs one command; the flag is false when the command completed but the
/// answer is a domain failure (for instance an identity that does not hold).
fn execute(command: Command) -> Result<(bool, Value), CliError> {
    match command {
        Command::Design(cmd) => design(cmd),
        Command::Scheme(cmd) => scheme(cmd),
        Command::Switch(cmd) => switch(cmd),
        Command::Verify(cmd) => verify(cmd),
        Command::Classify { design, parallelism_only, budget } => {
            let d = read_design(&design)?;
            let relation = if parallelism_only { BlockRelation::Disjointness } else { BlockRelation::Intersections };
            let c = classify::schemes_from_design(&d, ClassifyOptions { relation, budget })?;
            let mut payload = json!(ClassificationReport::from(&c));
            payload["schemes"] = json!(c.schemes.iter().map(SwitchingScheme::to_json).collect::<Vec<_>>());
            Ok((true, payload))
        }
        Command::Catalog(cmd) => catalog_cmd(cmd),
        Command::Geometry(cmd) => geometry_cmd(cmd),
        Command::Identities { c } => {
            let sizes: Vec<usize> = match c {
                Some(c) if (2..=6).contains(&c) => vec![c],
                Some(c) => return Err(CliError::Usage(format!("--c must lie in 2..=6, got {c}"))),
                None => (2..=6).collect(),
            };
            let reports: Vec<_> = sizes.into_iter().map(catalog::counting_identities).collect();
            let ok = reports.iter().all(|r| r.all_hold());
            Ok((ok, json!({ "all_hold": ok, "reports": reports })))
        }
    }
}

fn design(cmd: DesignCmd) -> Result<(bool, Value), CliError> {
    match cmd {
        DesignCmd::Validate { file } => {
            let p = read_design(&file)?.validate()?;
            Ok((true, json!({ "r": p.r, "lambda": p.lambda })))
        }
        DesignCmd::Closure { file, complements, empty_full } => {
            let d = read_design(&file)?.closure(empty_full, complements);
            Ok((true, json!(d.to_json())))
        }
    }
}

fn scheme(cmd: SchemeCmd) -> Result<(bool, Value), CliError> {
    match cmd {
        SchemeCmd::Derive { design, perm, second } => {
            let d = read_design(&design)?;
            let s = match (perm, second) {
                (Some(p), _) => derive_r_perm(&d, &Permutation::parse_cycles(&p, d.block_count())?)?,
                (None, Some(path)) => derive_r(&d, &read_design(&path)?)?,
                (None, None) => return Err(CliError::Usage("one of --perm or --second is required".into())),
            };
            Ok((true, json!(s.to_json())))
        }
        SchemeCmd::Inspect(input) => {
            let s = load_scheme(&input)?;
            let table = s.block_table().map(<[_]>::len).ok();
            Ok((
                true,
                json!({
                    "v": s.v(),
                    "level": s.level().to_string().parse::<i64>().map_err(|_| SchemeError::Overflow)?,
                    "provenance": s.provenance(),
                    "compatible_vectors": table,
                    "matrix": s.matrix().to_scaled_string(),
                }),
            ))
        }
        SchemeCmd::CompatibleAc { input, all } => {
            let s = load_scheme(&input)?;
            let set = compatible_ac(&s, !all)?;
            let graphs: Vec<String> = set.graphs().iter().map(emit_graph6).collect();
            Ok((true, json!({ "v": set.v, "up_to_relabelling": !all, "count": set.len(), "graphs": graphs })))
        }
        SchemeCmd::CompatibleVectors(input) => {
            let s = load_scheme(&input)?;
            let rows: Vec<Value> =
                s.block_table()?.iter().map(|&(chi, img)| json!({ "chi": points(chi), "image": points(img) })).collect();
            Ok((true, json!({ "v": s.v(), "count": rows.len(), "vectors": rows })))
        }
        SchemeCmd::Realizable(input) => {
            let s = load_scheme(&input)?;
            let payload = match design_realizable(&s)? {
                Realizability::Feasible { params, design } => json!({
                    "feasible": true,
                    "r": params.r,
                    "lambda": params.lambda,
                    "design": design.to_json(),
                }),
                Realizability::Infeasible { certificate } => json!({
                    "feasible": false,
                    "certificate_verified": certificate.verify(&s)?,
                    "certificate": certificate,
                }),
            };
            Ok((true, payload))
        }
    }
}

fn load_site(args: &SiteArgs) -> Result<(SwitchSite, SwitchingScheme), CliError> {
    let g = read_graph(&args.graph)?;
    let s = load_scheme(&args.input)?;
    Ok((SwitchSite::new(g, args.members.clone())?, s))
}

fn switch(cmd: SwitchCmd) -> Result<(bool, Value), CliError> {
    match cmd {
        SwitchCmd::Apply { site, out } => {
            let (site, s) = load_site(&site)?;
            let h = apply_switch(&site, &s)?;
            Ok((true, json!({ "graph": encode_graph(&h, out) })))
        }
        SwitchCmd::Verify { site, strict } => {
            let (site, s) = load_site(&site)?;
            let mode = if strict { SiteMode::Strict } else { SiteMode::Relaxed };
            let r = verify_site(&site, &s, mode);
            Ok((r.ok, json!(r)))
        }
    }
}

fn verify(cmd: VerifyCmd) -> Result<(bool, Value), CliError> {
    match cmd {
        VerifyCmd::Cospectral { first, second } => {
            let same = cospectral(&read_graph(&first)?, &read_graph(&second)?)?;
            Ok((true, json!({ "cospectral": same })))
        }
        VerifyCmd::Rcospectral { first, second } => {
            let (a, b) = (read_graph(&first)?, read_graph(&second)?);
            let plain = cospectral(&a, &b)?;
            let comp = cospectral(&a.complement(), &b.complement())?;
            Ok((true, json!({ "cospectral": plain, "complement_cospectral": comp })))
        }
    }
}

fn catalog_cmd(cmd: CatalogCmd) -> Result<(bool, Value), CliError> {
    match cmd {
        CatalogCmd::List => {
            let mut entries = Vec::new();
            for id in catalog::catalog_ids() {
                let e = catalog::make(&id)?;
                entries.push(json!({ "id": id.to_string(), "scheme": e.scheme.to_json() }));
            }
            Ok((true, json!({ "entries": entries })))
        }
        CatalogCmd::Get { id } => Ok((true, json!(catalog::get(&id)?.scheme.to_json()))),
        CatalogCmd::Check { id } => {
            let e = catalog::get(&id)?;
            let relabelling = catalog::consistency_check(&e)?;
            let src = e.source.as_ref().expect("checked above");
            Ok((
                relabelling.is_some(),
                json!({
                    "id": e.id.to_string(),
                    "permutation": src.permutation.to_cycle_string(),
                    "consistent": relabelling.is_some(),
                    "relabelling": relabelling.map(|p| p.to_cycle_string()),
                }),
            ))
        }
    }
}

fn geometry_cmd(cmd: GeometryCmd) -> Result<(bool, Value), CliError> {
    let GeometryCmd::Qtriangular { q, n, switch_plane, perm, out } = cmd;
    let space = ProjectiveSpace::new(q, n)?;
    let g = geometry::q_triangular(&space)?;
    let mut payload = json!({ "vertices": g.order(), "original": encode_graph(&g, out) });
    let Some(perm) = perm else {
        return Ok((true, payload));
    };
    let sites = geometry::subplane_sites(&space, &g)?;
    let count = sites.len();
    let site = sites.get(switch_plane).ok_or(GeometryError::PlaneOutOfRange { index: switch_plane, count })?;
    let pi = Permutation::parse_cycles(&perm, site.dual.block_count())?;
    let collineation = classify::design_automorphism_group(&site.dual).contains(&pi);
    let (h, cert) = geometry::switch_plane(site, &pi, q)?;
    let ok = cert.cospectral && cert.complement_cospectral;
    payload["plane_points"] = json!(site.plane_points);
    payload["members"] = json!(site.site.members);
    payload["collineation"] = json!(collineation);
    payload["switched"] = encode_graph(&h, out);
    payload["certificate"] = json!(cert);
    Ok((ok, payload))
}
