mod format;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vertex_energy::compare::{
    deletion_relation, path_removal_order, tree_attachment_order, union_relation, CrossComparison,
    VertexComparison,
};
use vertex_energy::covers::{check_degree_bound, is_independent, subset_report, SLACK_TOL};
use vertex_energy::{
    attach_pendant_path, charpoly, compare_vertices_cross_graph, compare_vertices_same_graph, coulson_vertex_energy,
    decompose, energy_report, make_family, vertex_energy_eigen, verify_graph, CheckStatus, Error, Family, Graph,
    IntPolynomial, Method, OrderRelation, SubsetKind, VertexSubsetReport,
};

use format::{opt, sig12, table};
use input::{load_graph, Format};

const EXIT_INPUT: u8 = 2;
const EXIT_DISCREPANCY: u8 = 3;
const EXIT_MISCLASSIFIED: u8 = 4;

#[derive(Parser)]
#[command(name = "vertex-energy", version, about = "Vertex energies of graphs by eigendecomposition and Coulson integrals")]
struct Cli {
    /// Absolute accuracy of each Coulson integral.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,

    /// Format of graph files.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,

    /// Read vertex arguments as 0-based indices.
    #[arg(long, global = true)]
    zero_based: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Eigen,
    Coulson,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Eigen => Method::Eigen,
            MethodArg::Coulson => Method::Coulson,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderFamily {
    Paths,
    Trees,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex energies and their total.
    Energy { input: String },
    /// Exact characteristic polynomial, highest degree first.
    Charpoly {
        input: String,
        /// Delete this vertex first.
        #[arg(long)]
        delete: Option<usize>,
    },
    /// Compare two vertices by the quasi-order: `GRAPH V W` or `G1 V G2 W`.
    Compare {
        #[arg(num_args = 3..=4, required = true)]
        args: Vec<String>,
    },
    /// Classify a vertex set and test the cover or independent-set inequality.
    CheckCover {
        input: String,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Energy ordering of path vertices or of a leaf attached along a path.
    Order {
        #[arg(value_enum)]
        family: OrderFamily,
        n: usize,
    },
    /// Run every applicable identity on one graph.
    Verify { input: String },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::NonConvergence { .. }) { EXIT_DISCREPANCY } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure { code: EXIT_INPUT, message }
    }
}

type Outcome = Result<u8, Failure>;

struct Ctx {
    tol: f64,
    json: bool,
    method: Method,
    format: Format,
    zero_based: bool,
}

impl Ctx {
    fn graph(&self, source: &str) -> Result<Graph, Failure> {
        Ok(load_graph(source, self.format)?)
    }

    /// Converts a user-facing vertex index to a 0-based one.
    fn vertex(&self, g: &Graph, raw: usize) -> Result<usize, Failure> {
        let v = if self.zero_based {
            raw
        } else {
            raw.checked_sub(1)
                .ok_or_else(|| "vertex indices are 1-based (pass --zero-based for 0-based)".to_string())?
        };
        if v >= g.n() {
            let range = if self.zero_based { format!("0..{}", g.n()) } else { format!("1..={}", g.n()) };
            return Err(format!("vertex {raw} outside {range}").into());
        }
        Ok(v)
    }

    fn parse_vertex(&self, g: &Graph, raw: &str) -> Result<usize, Failure> {
        let n: usize = raw.parse().map_err(|_| format!("expected a vertex index, got {raw:?}"))?;
        self.vertex(g, n)
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        let out = if self.json { serde_json::to_string_pretty(value).expect("serializable") } else { text() };
        // a closed pipe (`| head`) is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }

    /// Energies of `v` by the selected paths.
    fn energies(&self, g: &Graph, v: usize) -> Result<(Option<f64>, Option<f64>), Failure> {
        let eigen = match self.method {
            Method::Coulson => None,
            _ => Some(vertex_energy_eigen(&decompose(g), v)?),
        };
        let coulson = match self.method {
            Method::Eigen => None,
            _ => Some(coulson_vertex_energy(g, v, self.tol)?),
        };
        Ok((eigen, coulson))
    }

    fn check_bipartite(&self, g: &Graph) -> Result<(), Failure> {
        g.require_bipartite().map(|_| ()).map_err(|e| match e {
            Error::NotBipartite { odd_cycle } => {
                let walk: Vec<String> = odd_cycle.iter().map(|&v| g.label(v)).collect();
                format!("graph is not bipartite; odd cycle {}", walk.join(" - ")).into()
            }
            other => other.into(),
        })
    }
}

fn energy(ctx: &Ctx, source: &str) -> Outcome {
    let g = ctx.graph(source)?;
    let report = energy_report(&g, ctx.method, ctx.tol)?;
    ctx.emit(&report, || {
        let rows: Vec<Vec<String>> = report
            .vertices
            .iter()
            .map(|(label, e)| vec![label.clone(), opt(e.eigen), opt(e.coulson), opt(e.diff)])
            .collect();
        let mut out = table(&["vertex", "eigen", "coulson", "|diff|"], &rows);
        out.push_str(&format!("\ntotal energy: {}", sig12(report.total_energy)));
        if let Some(d) = report.max_discrepancy {
            out.push_str(&format!("\nmax discrepancy: {}", sig12(d)));
        }
        out
    });
    if report.discrepancy_exceeded() {
        eprintln!("discrepancy above 10 * tol = {}", 10.0 * ctx.tol);
        return Ok(EXIT_DISCREPANCY);
    }
    Ok(0)
}

#[derive(Serialize)]
struct CharpolyOutput {
    deleted: Option<String>,
    polynomial: String,
    coefficients: IntPolynomial,
}

fn charpoly_cmd(ctx: &Ctx, source: &str, delete: Option<usize>) -> Outcome {
    let g = ctx.graph(source)?;
    let (h, deleted) = match delete {
        Some(raw) => {
            let v = ctx.vertex(&g, raw)?;
            (g.delete_vertex(v)?, Some(g.label(v)))
        }
        None => (g, None),
    };
    let p = charpoly(&h);
    let out = CharpolyOutput { deleted, polynomial: p.to_string(), coefficients: p };
    ctx.emit(&out, || {
        let coeffs: Vec<String> = out.coefficients.coeffs().iter().map(ToString::to_string).collect();
        let list = if coeffs.is_empty() { "0".to_string() } else { coeffs.join(",") };
        format!("{}\n{list}", out.polynomial)
    });
    Ok(0)
}

#[derive(Serialize)]
struct CompareOutput {
    verdict: String,
    relation: OrderRelation,
    v: String,
    w: String,
    energy_v: (Option<f64>, Option<f64>),
    energy_w: (Option<f64>, Option<f64>),
}

fn compare(ctx: &Ctx, args: &[String]) -> Outcome {
    let out = match args {
        [source, v, w] => {
            let g = ctx.graph(source)?;
            ctx.check_bipartite(&g)?;
            let (v, w) = (ctx.parse_vertex(&g, v)?, ctx.parse_vertex(&g, w)?);
            let verdict = match compare_vertices_same_graph(&g, v, w)? {
                VertexComparison::WGreater => "w greater (quasi-order)",
                VertexComparison::VGreater => "v greater (quasi-order)",
                VertexComparison::Equal => "equal (identical coefficients)",
                VertexComparison::Inconclusive => "inconclusive (incomparable in the quasi-order)",
            };
            CompareOutput {
                verdict: verdict.into(),
                relation: deletion_relation(&g, v, w)?,
                v: g.label(v),
                w: g.label(w),
                energy_v: ctx.energies(&g, v)?,
                energy_w: ctx.energies(&g, w)?,
            }
        }
        [s1, v, s2, w] => {
            let (g1, g2) = (ctx.graph(s1)?, ctx.graph(s2)?);
            ctx.check_bipartite(&g1)?;
            ctx.check_bipartite(&g2)?;
            let (v, w) = (ctx.parse_vertex(&g1, v)?, ctx.parse_vertex(&g2, w)?);
            let verdict = match compare_vertices_cross_graph(&g1, v, &g2, w)? {
                CrossComparison::G1VertexGreater => "first graph's vertex greater (quasi-order)",
                CrossComparison::G2VertexGreater => "second graph's vertex greater (quasi-order)",
                CrossComparison::Equal => "equal (identical coefficients)",
                CrossComparison::Inconclusive => "inconclusive (incomparable in the quasi-order)",
            };
            CompareOutput {
                verdict: verdict.into(),
                relation: union_relation(&g1, v, &g2, w)?,
                v: format!("{} in {s1}", g1.label(v)),
                w: format!("{} in {s2}", g2.label(w)),
                energy_v: ctx.energies(&g1, v)?,
                energy_w: ctx.energies(&g2, w)?,
            }
        }
        _ => return Err("compare takes GRAPH V W or G1 V G2 W".to_string().into()),
    };
    ctx.emit(&out, || {
        let witness: Vec<String> = out.relation.witness.iter().map(|k| format!("b{k}")).collect();
        let show = |(e, c): (Option<f64>, Option<f64>)| match (e, c) {
            (Some(e), Some(c)) => format!("{} (coulson {})", sig12(e), sig12(c)),
            (e, c) => opt(e.or(c)),
        };
        format!(
            "{}\nrelation: {:?}, differing coefficients: {}\nE({}) = {}\nE({}) = {}",
            out.verdict,
            out.relation.outcome,
            if witness.is_empty() { "none".into() } else { witness.join(", ") },
            out.v,
            show(out.energy_v),
            out.w,
            show(out.energy_w),
        )
    });
    Ok(0)
}

#[derive(Serialize)]
struct CoverOutput {
    report: VertexSubsetReport,
    also_independent: bool,
    degree_bound: Option<bool>,
}

fn check_cover(ctx: &Ctx, source: &str, set: &[usize]) -> Outcome {
    let g = ctx.graph(source)?;
    ctx.check_bipartite(&g)?;
    let set = set.iter().map(|&raw| ctx.vertex(&g, raw)).collect::<Result<Vec<_>, _>>()?;
    let report = subset_report(&g, &set)?;
    let degree_bound = match report.kind {
        SubsetKind::Cover => Some(check_degree_bound(&g, &set)?),
        _ => None,
    };
    let out = CoverOutput { also_independent: is_independent(&g, &set), report, degree_bound };
    ctx.emit(&out, || {
        let r = &out.report;
        let labels: Vec<String> = r.subset.iter().map(|&v| g.label(v)).collect();
        let kind = match (r.kind, out.also_independent) {
            (SubsetKind::Cover, true) => "cover and independent set",
            (SubsetKind::Cover, false) => "cover",
            (SubsetKind::Independent, _) => "independent set",
            (SubsetKind::Other, _) => "neither cover nor independent set",
        };
        let mut s = format!("set: {{{}}}\nkind: {kind}", labels.join(", "));
        if r.kind == SubsetKind::Other {
            s.push_str("\nchecks skipped");
            return s;
        }
        s.push_str(&format!(
            "\nenergy sum: {}\nhalf total: {}\nslack: {}",
            sig12(r.energy_sum),
            sig12(r.half_total),
            sig12(r.slack),
        ));
        let verdict = |ok: bool| if ok { "holds" } else { "VIOLATED" };
        if r.kind == SubsetKind::Cover {
            s.push_str(&format!("\nsum >= E/2: {}", verdict(r.slack >= -SLACK_TOL)));
        }
        if out.also_independent || r.kind == SubsetKind::Independent {
            s.push_str(&format!("\nsum <= E/2: {}", verdict(r.slack <= SLACK_TOL)));
        }
        if let Some(ok) = out.degree_bound {
            s.push_str(&format!("\nE/2 <= sum sqrt(deg): {}", if ok { "holds" } else { "VIOLATED" }));
        }
        s
    });
    Ok(match out.report.kind {
        SubsetKind::Other => EXIT_MISCLASSIFIED,
        _ if !out.report.holds
            || (out.also_independent && out.report.slack > SLACK_TOL)
            || out.degree_bound == Some(false) =>
        {
            EXIT_DISCREPANCY
        }
        _ => 0,
    })
}

#[derive(Serialize)]
struct Tier {
    members: Vec<String>,
    eigen: Option<f64>,
    coulson: Option<f64>,
}

#[derive(Serialize)]
struct OrderOutput {
    family: &'static str,
    n: usize,
    tiers: Vec<Tier>,
    violations: Vec<String>,
}

fn order(ctx: &Ctx, family: OrderFamily, n: usize) -> Outcome {
    // (graph, vertex, label) for every member of every tier
    let (name, tiers): (&'static str, Vec<Vec<(Graph, usize, String)>>) = match family {
        OrderFamily::Paths => {
            let path = make_family(Family::Path, n)?;
            let tiers = path_removal_order(n)?
                .into_iter()
                .map(|t| t.into_iter().map(|v| (path.clone(), v, path.label(v))).collect())
                .collect();
            ("paths", tiers)
        }
        OrderFamily::Trees => {
            let tiers = tree_attachment_order(n)?
                .into_iter()
                .map(|t| {
                    t.into_iter()
                        .map(|i| {
                            let (tree, added) = attach_pendant_path(n - 1, i, 1)?;
                            Ok((tree, added, format!("v({i})")))
                        })
                        .collect::<Result<Vec<_>, Error>>()
                })
                .collect::<Result<Vec<_>, Error>>()?;
            ("trees", tiers)
        }
    };
    let mut rendered = Vec::with_capacity(tiers.len());
    let mut violations = Vec::new();
    for tier in &tiers {
        let mut values = Vec::with_capacity(tier.len());
        for (g, v, _) in tier {
            values.push(ctx.energies(g, *v)?);
        }
        let (e0, c0) = values[0];
        for ((e, c), (_, _, label)) in values.iter().zip(tier).skip(1) {
            let differs = |a: Option<f64>, b: Option<f64>| a.zip(b).is_some_and(|(a, b)| (a - b).abs() > 1e-9);
            if differs(*e, e0) || differs(*c, c0) {
                violations.push(format!("{label} not tied with {}", tier[0].2));
            }
        }
        rendered.push(Tier { members: tier.iter().map(|t| t.2.clone()).collect(), eigen: e0, coulson: c0 });
    }
    for pair in rendered.windows(2) {
        let rises = |a: Option<f64>, b: Option<f64>| a.zip(b).map_or(true, |(a, b)| b - a > 1e-9);
        if !rises(pair[0].eigen, pair[1].eigen) || !rises(pair[0].coulson, pair[1].coulson) {
            violations.push(format!("{} not below {}", pair[0].members[0], pair[1].members[0]));
        }
    }
    let out = OrderOutput { family: name, n, tiers: rendered, violations };
    ctx.emit(&out, || {
        let chain: Vec<String> = out.tiers.iter().map(|t| t.members.join(" = ")).collect();
        let rows: Vec<Vec<String>> = out
            .tiers
            .iter()
            .map(|t| vec![t.members.join(" = "), opt(t.eigen), opt(t.coulson)])
            .collect();
        let violations = if out.violations.is_empty() { "none".to_string() } else { out.violations.join("; ") };
        format!(
            "{}\n{}\nviolations: {violations}",
            chain.join(" < "),
            table(&["tier", "eigen", "coulson"], &rows)
        )
    });
    Ok(if out.violations.is_empty() { 0 } else { EXIT_DISCREPANCY })
}

fn verify(ctx: &Ctx, source: &str) -> Outcome {
    let g = ctx.graph(source)?;
    let report = verify_graph(&g, ctx.tol)?;
    ctx.emit(&report, || {
        let lines: Vec<String> = report
            .checks
            .iter()
            .map(|c| match &c.status {
                CheckStatus::Pass => format!("PASS  {}", c.name),
                CheckStatus::Fail(why) => format!("FAIL  {}: {why}", c.name),
                CheckStatus::Skipped(why) => format!("SKIP  {}: {why}", c.name),
            })
            .collect();
        lines.join("\n")
    });
    Ok(if report.all_passed() { 0 } else { EXIT_DISCREPANCY })
}

fn run(cli: Cli) -> Outcome {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(Error::InvalidTolerance(cli.tol).into());
    }
    let ctx = Ctx {
        tol: cli.tol,
        json: cli.json,
        method: cli.method.into(),
        format: cli.format,
        zero_based: cli.zero_based,
    };
    match &cli.command {
        Command::Energy { input } => energy(&ctx, input),
        Command::Charpoly { input, delete } => charpoly_cmd(&ctx, input, *delete),
        Command::Compare { args } => compare(&ctx, args),
        Command::CheckCover { input, set } => check_cover(&ctx, input, set),
        Command::Order { family, n } => order(&ctx, *family, *n),
        Command::Verify { input } => verify(&ctx, input),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
