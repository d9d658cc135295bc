use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thinquiv::family::{
    build_delta_p, build_q, delta_dims, family_all, ideal_report, initial_check, kernel_checks,
    match_cycles, orbit_report, rank_report, sagbi_report, sweep_all, FamilyParams, SweepConfig,
};
use thinquiv::lattice::{
    brute_force_cone_equality, decompose_cq, xq_violation, ConeEquality, ConeViolation,
    IncidenceMap, VertexVector,
};
use thinquiv::limits::{ENV_MAX_BOX_POINTS, ENV_MAX_CYCLE_CLASSES, ENV_MAX_FILTER_SUBSETS};
use thinquiv::quiver::{primitive_cycles, Quiver};
use thinquiv::report::Check;
use thinquiv::{LatticeError, Limits};

mod document;
mod output;

use document::{DocumentError, QuiverDocument};
use output::{json, Format, Outcome};

#[derive(Parser)]
#[command(
    name = "thinquiv",
    version,
    about = "Exact verifiers for thin quiver representations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(flatten)]
    limits: LimitArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Maximum vertex subsets scanned when enumerating filters.
    #[arg(long, global = true, env = ENV_MAX_FILTER_SUBSETS, default_value_t = Limits::default().max_filter_subsets)]
    max_filter_subsets: u64,

    /// Maximum number of primitive cycle classes.
    #[arg(long, global = true, env = ENV_MAX_CYCLE_CLASSES, default_value_t = Limits::default().max_cycle_classes)]
    max_cycle_classes: usize,

    /// Maximum lattice points visited by brute-check.
    #[arg(long, global = true, env = ENV_MAX_BOX_POINTS, default_value_t = Limits::default().max_box_points)]
    max_box_points: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_filter_subsets: self.max_filter_subsets,
            max_cycle_classes: self.max_cycle_classes,
            max_box_points: self.max_box_points,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a quiver file.
    Quiver {
        #[arg(value_enum)]
        action: QuiverAction,
        file: PathBuf,
    },
    /// Cone membership and decomposition on a quiver file.
    Cone {
        #[arg(value_enum)]
        action: ConeAction,
        file: PathBuf,
        /// Vertex vector, comma separated, in vertex order.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        vector: Vec<i64>,
        /// Box half-width for brute-check.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Certificates for one parameter tuple.
    Family {
        #[arg(value_enum)]
        action: FamilyAction,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sample points for the orbit identity.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Runs every certificate on all tuples with t <= max.
    VerifyPaper {
        #[arg(long, default_value_t = 2)]
        max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Box half-width of the cone comparison.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverAction {
    Validate,
    Filters,
    Cycles,
    Dot,
    /// Reprints the file in canonical layout.
    Canonical,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConeAction {
    Member,
    Decompose,
    BruteCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyAction {
    Build,
    Cycles,
    Ideal,
    Sagbi,
    Orbit,
    Rank,
    All,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let limits = cli.limits.limits();
    let outcome = match &cli.command {
        Command::Quiver {
            action: QuiverAction::Canonical,
            file,
        } => {
            let doc = QuiverDocument::from_quiver(&load_quiver(file)?);
            return Ok((doc.to_text(), true));
        }
        Command::Quiver {
            action: QuiverAction::Dot,
            file,
        } if cli.format == Format::Text => {
            let q = load_quiver(file)?;
            return Ok((q.to_dot(&graph_name(file)), true));
        }
        Command::Quiver { action, file } => cmd_quiver(*action, file, &limits)?,
        Command::Cone {
            action,
            file,
            vector,
            bound,
        } => cmd_cone(*action, file, vector, *bound, &limits)?,
        Command::Family {
            action,
            params,
            seed,
            samples,
        } => {
            let params = FamilyParams::new(params.p, params.q, params.r, params.s, params.t)?;
            let config = SweepConfig {
                seed: *seed,
                orbit_samples: *samples,
                limits,
                ..SweepConfig::default()
            };
            cmd_family(*action, &params, &config)?
        }
        Command::VerifyPaper {
            max,
            seed,
            samples,
            bound,
        } => {
            let config = SweepConfig {
                seed: *seed,
                orbit_samples: *samples,
                cone_bound: *bound,
                limits,
                ..SweepConfig::default()
            };
            return Ok(cmd_sweep(*max, &config, cli.format));
        }
    };
    Ok((outcome.render(cli.format), outcome.passed))
}

fn read_document(file: &Path) -> Result<QuiverDocument> {
    let text =
        fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    QuiverDocument::parse(&text).with_context(|| format!("{}", file.display()))
}

fn load_quiver(file: &Path) -> Result<Quiver> {
    read_document(file)?
        .to_quiver()
        .with_context(|| format!("{}", file.display()))
}

fn cmd_quiver(action: QuiverAction, file: &Path, limits: &Limits) -> Result<Outcome> {
    let name = file.display();
    match action {
        QuiverAction::Validate => {
            let mut out = Outcome::new(format!("quiver validate {name}"));
            let check = match read_document(file)?.to_quiver() {
                Ok(q) => Check::pass(
                    "valid acyclic quiver",
                    format!("{} vertices, {} arrows", q.vertex_count(), q.arrow_count()),
                ),
                Err(DocumentError::Syntax { .. }) => unreachable!("parsed above"),
                Err(e) => Check::fail("valid acyclic quiver", e.to_string()),
            };
            out.check(check);
            Ok(out)
        }
        QuiverAction::Filters => {
            let q = load_quiver(file)?;
            let mut out = Outcome::new(format!("quiver filters {name}"));
            let filters = q.filters(limits)?;
            out.items.extend(filters.iter().map(|f| f.render(&q)));
            let bad = filters.iter().find(|f| !q.is_filter(f.set()));
            out.check(match bad {
                None => Check::pass("filters", format!("{}", filters.len())),
                Some(f) => Check::fail("filters", format!("{} is not up-closed", f.render(&q))),
            });
            Ok(out)
        }
        QuiverAction::Cycles => {
            let q = load_quiver(file)?;
            let mut out = Outcome::new(format!("quiver cycles {name}"));
            let cycles = primitive_cycles(&q, limits)?;
            let map = IncidenceMap::new(&q);
            let mut unbalanced = None;
            for c in &cycles {
                let w = c.vector(&q);
                out.item(format!("{}  {:?}", c.walk().render(&q), w.entries()));
                if unbalanced.is_none() && !map.in_kernel(&w)? {
                    unbalanced = Some(c.walk().render(&q));
                }
            }
            out.check(match unbalanced {
                None => Check::pass("primitive cycle classes", format!("{}", cycles.len())),
                Some(c) => Check::fail("primitive cycle classes", format!("{c} is not in ker U")),
            });
            Ok(out)
        }
        QuiverAction::Dot => {
            let q = load_quiver(file)?;
            let mut out = Outcome::new(format!("quiver dot {name}"));
            out.item(q.to_dot(&graph_name(file)).trim_end());
            Ok(out)
        }
        QuiverAction::Canonical => unreachable!("handled by run"),
    }
}

fn graph_name(file: &Path) -> String {
    file.file_stem()
        .map_or("Q".into(), |s| s.to_string_lossy().into_owned())
}

fn render_violation(q: &Quiver, v: &ConeViolation) -> String {
    match v {
        ConeViolation::NonZeroTotal(s) => format!("coordinate sum {s}"),
        ConeViolation::Filter { filter, sum } => format!("filter {} sum {sum}", filter.render(q)),
    }
}

fn cmd_cone(
    action: ConeAction,
    file: &Path,
    vector: &[i64],
    bound: i64,
    limits: &Limits,
) -> Result<Outcome> {
    let q = load_quiver(file)?;
    let name = file.display();
    let x = VertexVector::new(vector.to_vec());
    let need_vector = !matches!(action, ConeAction::BruteCheck);
    if need_vector && x.len() != q.vertex_count() {
        bail!(LatticeError::DimensionMismatch {
            expected: q.vertex_count(),
            found: x.len(),
        });
    }
    let map = IncidenceMap::new(&q);
    let verified = |x: &VertexVector| -> Result<Check> {
        let d = decompose_cq(&q, x, limits)?;
        let ok = d.multiplicities.is_nonnegative() && map.apply(&d.multiplicities)? == *x;
        let detail = d.render(&q);
        Ok(if ok {
            Check::pass("decomposition recomposes x", detail)
        } else {
            Check::fail("decomposition recomposes x", detail)
        })
    };
    match action {
        ConeAction::Member => {
            let mut out = Outcome::new(format!("cone member {name} {:?}", x.entries()));
            match xq_violation(&q, &x, limits)? {
                Some(v) => {
                    out.item("NO");
                    let ok = match &v {
                        ConeViolation::NonZeroTotal(s) => x.sum() == *s && *s != 0,
                        ConeViolation::Filter { filter, sum } => {
                            q.is_filter(filter.set())
                                && x.partial_sum(filter.set()) == *sum
                                && *sum < 0
                        }
                    };
                    let detail = render_violation(&q, &v);
                    out.check(if ok {
                        Check::pass("violated inequality", detail)
                    } else {
                        Check::fail("violated inequality", detail)
                    });
                }
                None => {
                    out.item("YES");
                    out.check(verified(&x)?);
                }
            }
            Ok(out)
        }
        ConeAction::Decompose => {
            let mut out = Outcome::new(format!("cone decompose {name} {:?}", x.entries()));
            match verified(&x) {
                Ok(c) => {
                    out.item(c.detail.clone());
                    out.check(c);
                }
                Err(e) => match e.downcast_ref::<LatticeError>() {
                    Some(LatticeError::NotInCone(v)) => out.check(Check::fail(
                        "decomposition recomposes x",
                        render_violation(&q, v),
                    )),
                    _ => return Err(e),
                },
            }
            Ok(out)
        }
        ConeAction::BruteCheck => {
            let mut out = Outcome::new(format!("cone brute-check {name} B={bound}"));
            let name = "X_Q = C_Q on the box";
            match brute_force_cone_equality(&q, bound, limits)? {
                ConeEquality::Equal {
                    points_checked,
                    in_cone,
                } => {
                    out.item("EQUAL");
                    out.check(Check::pass(
                        name,
                        format!("{points_checked} points, {in_cone} in cone"),
                    ));
                }
                ConeEquality::Counterexample {
                    point,
                    in_xq,
                    decomposed,
                } => {
                    out.item("COUNTEREXAMPLE");
                    out.check(Check::fail(
                        name,
                        format!(
                            "{:?}: in X_Q {in_xq}, decomposed {decomposed}",
                            point.entries()
                        ),
                    ));
                }
            }
            Ok(out)
        }
    }
}

fn arrow_lines(q: &Quiver) -> impl Iterator<Item = String> + '_ {
    q.arrows().iter().map(|a| {
        format!(
            "{}: {} -> {}",
            a.label,
            q.vertex_label(a.source),
            q.vertex_label(a.target)
        )
    })
}

fn cmd_family(
    action: FamilyAction,
    params: &FamilyParams,
    config: &SweepConfig,
) -> Result<Outcome> {
    let verb = match action {
        FamilyAction::Build => "build",
        FamilyAction::Cycles => "cycles",
        FamilyAction::Ideal => "ideal",
        FamilyAction::Sagbi => "sagbi",
        FamilyAction::Orbit => "orbit",
        FamilyAction::Rank => "rank",
        FamilyAction::All => "all",
    };
    let mut out = Outcome::new(format!("family {verb} {params}"));
    match action {
        FamilyAction::Build => {
            let q = build_q(params)?;
            let (delta, point) = build_delta_p(params)?;
            out.item(format!(
                "Q: {} vertices, {} arrows",
                q.vertex_count(),
                q.arrow_count()
            ));
            out.items.extend(arrow_lines(&q));
            out.item(format!(
                "Delta: {} vertices, {} arrows, dims {:?}",
                delta.vertex_count(),
                delta.arrow_count(),
                delta_dims(params)
            ));
            for (line, m) in arrow_lines(&delta).zip(&point.matrices) {
                out.item(format!("{line}  {m}"));
            }
            out.check(Check::pass(
                "build Q",
                format!("{} arrows", q.arrow_count()),
            ));
            out.check(Check::pass(
                "build Delta, P",
                format!("{} arrows", delta.arrow_count()),
            ));
        }
        FamilyAction::Cycles => {
            let q = build_q(params)?;
            let cycles = primitive_cycles(&q, &config.limits)?;
            if params.is_strict() {
                match match_cycles(params, &config.limits) {
                    Ok(m) => {
                        for (c, i) in cycles.iter().zip(&m.assignment) {
                            out.item(format!("v{i}: {}", c.walk().render(&q)));
                        }
                        out.check(Check::pass(
                            "cycle classes = ±v1..v26",
                            format!("{}", m.classes),
                        ));
                    }
                    Err(e) => out.check(Check::fail("cycle classes = ±v1..v26", e.to_string())),
                }
            } else {
                out.items.extend(cycles.iter().map(|c| c.walk().render(&q)));
                out.check(Check::pass(
                    "primitive cycle classes",
                    format!("{}", cycles.len()),
                ));
            }
        }
        FamilyAction::Ideal => out.report(ideal_report(params)),
        FamilyAction::Sagbi => {
            out.check(initial_check(params));
            kernel_checks(params)?
                .into_iter()
                .for_each(|c| out.check(c));
            match sagbi_report(params, &config.limits) {
                Ok(r) => out.report(r),
                Err(e) => out.check(Check::fail("sagbi certificate", e.to_string())),
            }
        }
        FamilyAction::Orbit => out.check(orbit_report(params, config.seed, config.orbit_samples)),
        FamilyAction::Rank => {
            let c = rank_report(params, config.seed, config.rank_points);
            if c.passed {
                out.item(c.detail.clone());
            }
            out.check(c);
        }
        FamilyAction::All => out.report(family_all(params, config)),
    }
    Ok(out)
}

#[derive(Serialize)]
struct SweepRow {
    params: FamilyParams,
    passed: bool,
    checks: usize,
    failures: Vec<Check>,
}

#[derive(Serialize)]
struct SweepOutput {
    max_t: usize,
    seed: u64,
    tuples: usize,
    failed: usize,
    passed: bool,
    rows: Vec<SweepRow>,
}

fn cmd_sweep(max_t: usize, config: &SweepConfig, format: Format) -> (String, bool) {
    let summary = sweep_all(max_t, config);
    let rows: Vec<SweepRow> = summary
        .runs
        .iter()
        .map(|run| SweepRow {
            params: run.params,
            passed: run.report.passed(),
            checks: run.report.checks.len(),
            failures: run.report.failures().cloned().collect(),
        })
        .collect();
    let failed = rows.iter().filter(|r| !r.passed).count();
    let output = SweepOutput {
        max_t,
        seed: config.seed,
        tuples: rows.len(),
        failed,
        passed: failed == 0,
        rows,
    };
    let text = match format {
        Format::Json => json(&output),
        Format::Text => {
            let mut s = format!("# verify-paper max={max_t} seed={}\n", config.seed);
            for row in &output.rows {
                let status = if row.passed { "PASS" } else { "FAIL" };
                s.push_str(&format!("{} {status} {} checks\n", row.params, row.checks));
                for f in &row.failures {
                    s.push_str(&format!("  {f}\n"));
                }
            }
            let status = if output.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!(
                "{status}: {} tuples, {failed} failed\n",
                output.tuples
            ));
            s
        }
    };
    (text, output.passed)
}
