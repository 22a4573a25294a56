//! Command-line driver. Exit status 0 on success, 1 when a requested
//! verdict fails, 2 on usage or input errors.

pub mod format;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cells::{cell_summary, collapse, extract, graph_genus, npc_check, subset_mask, Ambient};
use crate::complex::{isomorphism_signature, orientation_double_cover, summary, Triangulation};
use crate::error::{Error, Result};
use crate::invariants::{h1_onto, inclusion_epimorphism, report_ambient};
use crate::partition::{
    labeling_cover, parse_blocks, scheme_partition, symmetric_representation, twisted_admissible,
    validate_ambient, Scheme,
};
use crate::subdivide::{barycentric_with_ceiling, join, pachner_2n_pass, stellar_facet, DEFAULT_CEILING};
use crate::zoo;
use format::{parse_bundle, render_bundle, Bundle};

pub const CEILING_ENV: &str = "MULTISECT_CEILING";
pub const SCHEMA_VERSION: &str = "multisect-export/1";

fn header() -> String {
    format!("# multisect {}\n", env!("CARGO_PKG_VERSION"))
}

#[derive(Debug, Parser)]
#[command(name = "multisect", version, about = "Multisections of triangulated closed manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Facet ceiling for subdivisions (overrides MULTISECT_CEILING).
    #[arg(long, global = true)]
    pub ceiling: Option<u64>,
    /// Also write the result as JSON to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("family").required(true).args(["double_simplex", "cross_sphere", "cross_projective", "simplex_boundary"])))]
pub struct GenArgs {
    /// Two n-simplices glued along their boundaries.
    #[arg(long, value_name = "N")]
    pub double_simplex: Option<usize>,
    /// Boundary of the (n+1)-dimensional crosspolytope.
    #[arg(long, value_name = "N")]
    pub cross_sphere: Option<usize>,
    /// Antipodal quotient of the crosspolytope boundary.
    #[arg(long, value_name = "N")]
    pub cross_projective: Option<usize>,
    /// Boundary of the (n+1)-simplex.
    #[arg(long, value_name = "N")]
    pub simplex_boundary: Option<usize>,
    /// Write the gluing format even when vertex identifiers exist.
    #[arg(long)]
    pub gluing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a standard triangulation.
    Gen(GenArgs),
    /// Summarize a triangulation.
    Info {
        #[command(flatten)]
        input: Input,
        /// Also print the isomorphism signature.
        #[arg(long)]
        signature: bool,
    },
    /// Barycentric subdivision.
    Subdivide {
        #[command(flatten)]
        input: Input,
        #[arg(long, required = true)]
        barycentric: bool,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// 2-n Pachner moves on every pair of facets sharing the top-class apex.
    PachnerPass {
        #[command(flatten)]
        input: Input,
    },
    /// Stellar subdivision of one facet.
    Stellar {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        facet: usize,
    },
    /// Join of two vertex-format triangulations.
    Join { a: PathBuf, b: PathBuf },
    /// Attach a vertex partition.
    Partition {
        #[command(flatten)]
        input: Input,
        /// odd-bary, even-bary, even-npc, pairs or explicit.
        #[arg(long)]
        scheme: String,
        /// Blocks of coordinate labels for `pairs`, e.g. `0,1/2,3/4`.
        #[arg(long)]
        blocks: Option<String>,
        /// Labels in vertex class order for `explicit`, e.g. `0,0,1,1`.
        #[arg(long)]
        labels: Option<String>,
        /// Largest label for `explicit` (default: the largest given).
        #[arg(long)]
        k: Option<usize>,
        /// Parent facet colors for `even-npc` (default: from the input).
        #[arg(long)]
        colors: Option<String>,
    },
    /// Validate the multisection conditions.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        expect_multisection: bool,
        #[arg(long)]
        expect_generalized: bool,
    },
    /// Build the cell complex of a label subset.
    Build {
        #[command(flatten)]
        input: Input,
        /// Labels, e.g. `0,2`; all labels when absent.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Gromov link condition on a cube complex.
    NpcCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        expect_pass: bool,
    },
    /// Greedy collapse of a cell complex.
    Collapse {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        subset: Option<String>,
    },
    /// Full multisection report.
    Report {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        expect_multisection: bool,
        /// Expect the generalized conditions instead.
        #[arg(long)]
        generalized: bool,
        /// Class used for the homology and epimorphism checks.
        #[arg(long, default_value_t = 0)]
        class: usize,
    },
    /// Orientation double cover or labeling cover.
    #[command(group(ArgGroup::new("kind").required(true).args(["orientation", "labeling"])))]
    Cover {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        orientation: bool,
        #[arg(long)]
        labeling: bool,
    },
    /// Symmetric representation and twisted admissibility.
    Symrep {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Export everything computable as JSON.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: PathBuf,
    },
}

/// Result of a command: text for standard output, optional JSON and the
/// verdict.
struct Outcome {
    text: String,
    json: Option<Value>,
    pass: bool,
}

impl Outcome {
    fn text(text: String) -> Self {
        Self { text, json: None, pass: true }
    }
}

pub fn run() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    let outcome = match execute(&cli, stdin) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    if let (Some(path), Some(v)) = (&cli.out, &outcome.json) {
        if let Err(e) = write_json(path, v) {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    }
    if stdout.write_all(outcome.text.as_bytes()).is_err() {
        return 2;
    }
    if outcome.pass {
        0
    } else {
        1
    }
}

fn write_json(path: &Path, v: &Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Invalid(e.to_string()))?;
    s.push('\n');
    std::fs::write(path, s).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String> {
    match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Error::Invalid(format!("standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn read_bundle(input: &Input, stdin: &mut dyn Read) -> Result<Bundle> {
    parse_bundle(&read_input(input, stdin)?)
}

fn ceiling(cli: &Cli) -> Result<u64> {
    let c = match cli.ceiling {
        Some(c) => c,
        None => match std::env::var(CEILING_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| Error::Invalid(format!("{CEILING_ENV} is not a number: {s}")))?,
            Err(_) => DEFAULT_CEILING,
        },
    };
    if c == 0 {
        return Err(Error::Invalid("ceiling must be positive".into()));
    }
    Ok(c)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn ambient(b: &Bundle) -> Result<Ambient> {
    let p = b
        .partition
        .as_ref()
        .ok_or_else(|| Error::Precondition("input has no partition block".into()))?;
    Ambient::new(&b.triangulation, p)
}

fn parse_subset(s: Option<&str>, amb: &Ambient) -> Result<u32> {
    let Some(s) = s else {
        return Ok(amb.full());
    };
    let labels: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Invalid(format!("bad label {x}"))))
        .collect::<Result<_>>()?;
    if labels.is_empty() || labels.iter().any(|&l| l > amb.k()) {
        return Err(Error::Invalid(format!("subset {s} outside 0..={}", amb.k())));
    }
    Ok(subset_mask(&labels))
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    match &cli.command {
        Command::Gen(g) => {
            let t = if let Some(n) = g.double_simplex {
                zoo::double_simplex(n)?
            } else if let Some(n) = g.cross_sphere {
                zoo::cross_sphere(n)?
            } else if let Some(n) = g.cross_projective {
                zoo::cross_projective(n)?
            } else {
                zoo::simplex_boundary(g.simplex_boundary.unwrap())?
            };
            let t = if g.gluing { t.into_gluing_format() } else { t };
            Ok(Outcome::text(header() + &render_bundle(&Bundle::new(t))))
        }
        Command::Info { input, signature } => {
            let b = read_bundle(input, stdin)?;
            let t = &b.triangulation;
            let s = summary(t);
            let sig = if *signature { Some(isomorphism_signature(t)?) } else { None };
            let mut text = header();
            text += &format!("dim: {}\nfacets: {}\n", s.dim, t.num_facets());
            text += &format!("faces: {}\neuler: {}\n", list(&s.counts), s.euler);
            text += &format!("connected: {}\npseudo-manifold: {}\n", flag(s.connected), flag(s.pseudo_manifold));
            text += &format!("orientable: {}\neven: {}\n", flag(s.orientable), flag(s.even));
            text += &format!("betti-gf2: {}\n", list(&s.betti));
            if let Some(sig) = &sig {
                text += &format!("signature: {sig}\n");
            }
            let json = json!({ "tool": tool(), "summary": strip_orientation(&s), "signature": sig });
            Ok(Outcome { text, json: Some(json), pass: true })
        }
        Command::Subdivide { input, times, .. } => {
            let b = read_bundle(input, stdin)?;
            let ceil = ceiling(cli)?;
            if *times == 0 {
                return Err(Error::Invalid("--times must be positive".into()));
            }
            let mut t = b.triangulation;
            let mut out = None;
            for _ in 0..*times {
                let colors = t.dual_graph().coloring;
                let (s, c) = barycentric_with_ceiling(&t, ceil)?;
                out = Some((c, colors));
                t = s;
            }
            let (c, colors) = out.unwrap();
            let bundle = Bundle { triangulation: t, partition: None, carriers: Some(c), parent_colors: colors };
            Ok(Outcome::text(header() + &render_bundle(&bundle)))
        }
        Command::PachnerPass { input } => {
            let b = read_bundle(input, stdin)?;
            let p = b
                .partition
                .as_ref()
                .ok_or_else(|| Error::Precondition("pachner-pass needs a partition".into()))?;
            let (t, q) = pachner_2n_pass(&b.triangulation, p)?;
            let bundle = Bundle { triangulation: t, partition: Some(q), carriers: None, parent_colors: None };
            Ok(Outcome::text(header() + &render_bundle(&bundle)))
        }
        Command::Stellar { input, facet } => {
            let b = read_bundle(input, stdin)?;
            let t = stellar_facet(&b.triangulation, *facet)?;
            Ok(Outcome::text(header() + &render_bundle(&Bundle::new(t))))
        }
        Command::Join { a, b } => {
            let load = |p: &PathBuf| -> Result<Triangulation> {
                let s = std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
                Ok(parse_bundle(&s)?.triangulation)
            };
            let t = join(&load(a)?, &load(b)?)?;
            Ok(Outcome::text(header() + &render_bundle(&Bundle::new(t))))
        }
        Command::Partition { input, scheme, blocks, labels, k, colors } => {
            let mut b = read_bundle(input, stdin)?;
            let t = &b.triangulation;
            let need_carriers =
                || b.carriers.as_ref().ok_or_else(|| Error::Partition(format!("scheme {scheme} needs carrier labels")));
            let p = match scheme.as_str() {
                "odd-bary" => scheme_partition(t, Scheme::OddBary(need_carriers()?))?,
                "even-bary" => scheme_partition(t, Scheme::EvenBary(need_carriers()?))?,
                "even-npc" => {
                    let cols = match colors {
                        Some(s) => parse_u8_list(s)?,
                        None => b
                            .parent_colors
                            .clone()
                            .ok_or_else(|| Error::Partition("even-npc needs parent facet colors".into()))?,
                    };
                    scheme_partition(t, Scheme::EvenNpc { carriers: need_carriers()?, colors: &cols })?
                }
                "pairs" => {
                    let blocks = blocks
                        .as_ref()
                        .ok_or_else(|| Error::Partition("pairs needs --blocks".into()))?;
                    scheme_partition(t, Scheme::Pairs(&parse_blocks(blocks)?))?
                }
                "explicit" => {
                    let labels = parse_u8_list(
                        labels
                            .as_ref()
                            .ok_or_else(|| Error::Partition("explicit needs --labels".into()))?,
                    )?;
                    let k = k.unwrap_or_else(|| labels.iter().copied().max().unwrap_or(0) as usize);
                    scheme_partition(t, Scheme::Explicit { k, labels: &labels })?
                }
                other => return Err(Error::Partition(format!("unknown scheme {other}"))),
            };
            b.partition = Some(p);
            Ok(Outcome::text(header() + &render_bundle(&b)))
        }
        Command::Verify { input, expect_multisection, expect_generalized } => {
            let b = read_bundle(input, stdin)?;
            let amb = ambient(&b)?;
            let r = validate_ambient(&amb);
            let mut text = header();
            text += &format!("n: {}\nk: {}\nprofile: {}\n", r.n, r.k, flag(r.profile_ok));
            for g in &r.class_graphs {
                text += &format!(
                    "class {}: vertices {} edges {} connected {}\n",
                    g.label,
                    g.vertices,
                    g.edges,
                    flag(g.connected)
                );
            }
            for s in &r.subsets {
                text += &format!(
                    "subset {}: cells {} euler {} connected {} dim {} collapsed {}\n",
                    list(&s.labels),
                    list(&s.counts),
                    s.euler,
                    flag(s.connected),
                    opt(s.dim),
                    opt(s.collapsed_dim)
                );
            }
            text += &format!(
                "central: closed {} connected {}\n",
                flag(r.central_closed),
                flag(r.central_connected)
            );
            text += &format!("supports_multisection: {}\n", r.supports_multisection);
            text += &format!("supports_generalized: {}\n", r.supports_generalized);
            for d in &r.diagnostics {
                text += &format!("diagnostic: {d}\n");
            }
            let pass = (!expect_multisection || r.supports_multisection) && (!expect_generalized || r.supports_generalized);
            Ok(Outcome { text, json: Some(json!({ "tool": tool(), "validation": to_value(&r) })), pass })
        }
        Command::Build { input, subset } => {
            let b = read_bundle(input, stdin)?;
            let amb = ambient(&b)?;
            let c = extract(&amb, parse_subset(subset.as_deref(), &amb)?)?;
            let s = cell_summary(&c);
            let mut text = header();
            text += &format!("subset: {}\n", list(&c.labels()));
            text += &format!("cells: {}\neuler: {}\n", list(&s.counts), s.euler);
            text += &format!("dim: {}\nconnected: {}\nclosed: {}\n", opt(s.dim), flag(s.connected), flag(s.closed));
            text += &format!("orientable: {}\nbetti-gf2: {}\n", opt(s.orientable.map(flag)), list(&s.betti));
            text += &format!("cubes: {}\n", flag(s.all_cubes));
            let json = json!({ "tool": tool(), "subset": c.labels(), "cells": to_value(&s) });
            Ok(Outcome { text, json: Some(json), pass: true })
        }
        Command::NpcCheck { input, subset, expect_pass } => {
            let b = read_bundle(input, stdin)?;
            let amb = ambient(&b)?;
            let c = extract(&amb, parse_subset(subset.as_deref(), &amb)?)?;
            let r = npc_check(&c)?;
            let mut text = header();
            text += &format!("subset: {}\ncells: {}\n", list(&c.labels()), list(&c.counts()));
            text += &format!("vertices checked: {}\n", r.vertices_checked);
            for (deg, count) in &r.degrees {
                text += &format!("vertex degree {deg}: {count}\n");
            }
            text += &format!("npc: {}\n", if r.pass { "pass" } else { "fail" });
            if let Some(f) = &r.failure {
                text += &format!("failure at {}: {}\n", f.vertex, f.reason);
            }
            let json = json!({ "tool": tool(), "subset": c.labels(), "npc": to_value(&r) });
            Ok(Outcome { text, json: Some(json), pass: !expect_pass || r.pass })
        }
        Command::Collapse { input, subset } => {
            let b = read_bundle(input, stdin)?;
            let amb = ambient(&b)?;
            let c = extract(&amb, parse_subset(subset.as_deref(), &amb)?)?;
            let r = collapse(&c);
            let genus = if r.dim.is_some_and(|d| d <= 1) && c.is_connected() { Some(1 - r.euler()) } else { None };
            let graph = graph_genus(&c).ok();
            let mut text = header();
            text += &format!("subset: {}\ncells: {}\n", list(&c.labels()), list(&c.counts()));
            text += &format!("collapsed: {}\nsteps: {}\ndim: {}\n", list(&r.counts), r.steps, opt(r.dim));
            text += &format!("spine genus: {}\n", opt(genus));
            let json = json!({
                "tool": tool(),
                "subset": c.labels(),
                "cells": c.counts(),
                "collapsed": r.counts,
                "steps": r.steps,
                "dim": r.dim,
                "spine_genus": genus,
                "graph_genus": graph,
            });
            Ok(Outcome { text, json: Some(json), pass: true })
        }
        Command::Report { input, expect_multisection, generalized, class } => {
            let b = read_bundle(input, stdin)?;
            let amb = ambient(&b)?;
            let r = report_ambient(&amb);
            let mut text = header();
            text += &format!("n: {}\nk: {}\neuler: {}\n", r.n, r.k, r.ambient_euler);
            let genera: Vec<String> = r.genera.iter().map(|g| opt(*g)).collect();
            text += &format!("genera: {}\n", genera.join(" "));
            for s in &r.spines {
                text += &format!(
                    "spine {}: dim {} collapsed {} bound {}\n",
                    list(&s.labels),
                    opt(s.dim),
                    opt(s.collapsed_dim),
                    if *generalized { opt(s.generalized_bound) } else { s.multisection_bound.to_string() }
                );
            }
            let c = &r.central;
            text += &format!("central cells: {}\ncentral euler: {}\n", list(&c.counts), c.euler);
            text += &format!(
                "central: closed {} connected {} orientable {}\n",
                flag(c.closed),
                flag(c.connected),
                opt(c.orientable.map(flag))
            );
            text += &format!("central betti-gf2: {}\n", list(&c.betti));
            text += &format!("central npc: {}\n", opt(c.npc.map(|p| if p { "pass" } else { "fail" })));
            if let Some(s) = &r.surface {
                let kind = if s.orientable { "genus" } else { "crosscaps" };
                text += &format!("surface {kind}: {}\n", s.genus);
            }
            text += &format!("euler inclusion-exclusion: {}\n", r.euler_inclusion_exclusion);
            if let Some(e) = r.euler_trisection {
                text += &format!("euler trisection identity: {e}\n");
            }
            let mut extra = json!({});
            if r.supports_multisection && *class <= r.k {
                let central = extract(&amb, amb.full())?;
                if let Ok(h) = h1_onto(&central, *class) {
                    text += &format!("h1 onto (class {class}): {}\n", h.onto);
                    extra["h1_onto"] = to_value(&h);
                }
                let mut epis = Vec::new();
                for i in 0..=r.k {
                    if let Ok(e) = inclusion_epimorphism(&central, i) {
                        text += &format!(
                            "epimorphism {i}: relators die {} gf2 rank {}/{}\n",
                            e.relators_die,
                            e.abelian_rank,
                            e.target_rank
                        );
                        epis.push(json!({
                            "class": i,
                            "relators_die": e.relators_die,
                            "abelian_rank": e.abelian_rank,
                            "target_rank": e.target_rank,
                            "surjective_gf2": e.surjective_gf2,
                        }));
                    }
                }
                extra["epimorphisms"] = Value::Array(epis);
            }
            text += &format!("supports_multisection: {}\n", r.supports_multisection);
            text += &format!("supports_generalized: {}\n", r.supports_generalized);
            for d in &r.diagnostics {
                text += &format!("diagnostic: {d}\n");
            }
            let pass = (!expect_multisection || r.supports_multisection) && (!generalized || r.supports_generalized);
            let json = json!({ "tool": tool(), "report": to_value(&r), "checks": extra });
            Ok(Outcome { text, json: Some(json), pass })
        }
        Command::Cover { input, orientation, .. } => {
            let b = read_bundle(input, stdin)?;
            let t = if *orientation {
                orientation_double_cover(&b.triangulation).cover
            } else {
                labeling_cover(&b.triangulation)?
            };
            Ok(Outcome::text(header() + &render_bundle(&Bundle::new(t))))
        }
        Command::Symrep { input, blocks } => {
            let b = read_bundle(input, stdin)?;
            let t = &b.triangulation;
            let r = symmetric_representation(t)?;
            let mut text = header();
            text += &format!("trivial: {}\ngenerators: {}\n", r.trivial, r.generators.len());
            for g in &r.generators {
                text += &format!("generator: {}\n", list(g));
            }
            let orbits: Vec<String> = r.orbits.iter().map(|o| list(o).replace(' ', ",")).collect();
            text += &format!("orbits: {}\n", orbits.join(" "));
            let mut json = json!({ "tool": tool(), "symrep": {
                "trivial": r.trivial, "generators": r.generators, "orbits": r.orbits } });
            if let Some(bl) = blocks {
                let a = twisted_admissible(t, &parse_blocks(bl)?, &r)?;
                text += &format!("admissible: {}\nunion graph connected: {}\n", a.admissible, a.union_graph_connected);
                for d in &a.diagnostics {
                    text += &format!("diagnostic: {d}\n");
                }
                json["admissibility"] = to_value(&a);
            }
            Ok(Outcome { text, json: Some(json), pass: true })
        }
        Command::Export { input, json: path } => {
            let b = read_bundle(input, stdin)?;
            let v = export_json(&b)?;
            write_json(path, &v)?;
            Ok(Outcome::text(header() + &format!("wrote {}\n", path.display())))
        }
    }
}

fn tool() -> String {
    format!("multisect {}", env!("CARGO_PKG_VERSION"))
}

fn strip_orientation(s: &crate::complex::TriSummary) -> Value {
    let mut v = to_value(s);
    v.as_object_mut().unwrap().remove("orientation");
    v
}

fn parse_u8_list(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|x| x.trim().parse::<u8>().map_err(|_| Error::Invalid(format!("bad label {x}"))))
        .collect()
}

/// The JSON document written by `export`.
pub fn export_json(b: &Bundle) -> Result<Value> {
    let t = &b.triangulation;
    let s = summary(t);
    let mut v = json!({
        "schema": SCHEMA_VERSION,
        "tool": tool(),
        "triangulation": {
            "dim": t.dim(),
            "facets": t.num_facets(),
            "summary": strip_orientation(&s),
        },
    });
    if let Some(p) = &b.partition {
        let amb = Ambient::new(t, p)?;
        let r = report_ambient(&amb);
        let mut complexes = Vec::new();
        for mask in 1..=amb.full() {
            let c = extract(&amb, mask)?;
            complexes.push(json!({ "labels": c.labels(), "cells": to_value(&cell_summary(&c)) }));
        }
        v["partition"] = json!({ "k": p.k, "scheme": p.scheme, "labels": p.labels, "sizes": p.sizes() });
        v["complexes"] = Value::Array(complexes);
        v["report"] = to_value(&r);
    }
    Ok(v)
}
