//! Command-line frontend: graph ingestion, series computation, Hilbert
//! conversion, and the verification suites. Output is deterministic JSON
//! (sorted keys) or a plain table; failures exit with a machine-readable
//! reason and a documented exit code.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::io::Read;
use std::path::PathBuf;
use zetagraph::graph::{parse_graph, GraphClass, ResolutionGraph};
use zetagraph::lattice::LatticeContext;
use zetagraph::series::{render_exp, Coeff, TruncatedSeries};
use zetagraph::verify;
use zetagraph::zeta::{self, ZetaError};
use zetagraph::zoo;

const EXIT_INVALID_GRAPH: i32 = 1;
const EXIT_UNSUPPORTED: i32 = 2;
const EXIT_VERIFICATION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "zetagraph",
    about = "Exact zeta/Poincaré and motivic series of resolution graphs (rational trees and cusp cycles)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct InputArgs {
    /// Path to a graph JSON file: {"vertices":[{"id","euler","genus"?}],"edges":[["u","v"]]}
    #[arg(long, conflicts_with = "stdin")]
    input: Option<PathBuf>,
    /// Read the graph JSON from standard input
    #[arg(long)]
    stdin: bool,
}

#[derive(Args)]
struct OutputArgs {
    /// Truncation order: total E*-degree bound
    #[arg(long, default_value_t = 6)]
    order: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    Product,
    Binomial,
    Incexc,
    Arrangement,
    CuspClosed,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Tree,
    EcaProduct,
    EcaStrata,
    Cusp,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    TreeEquivalence,
    CuspIdentities,
    Motivic,
    FunctionalEquation,
    Closure,
    Macdonald,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph: class, definiteness, determinant, canonical class
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute the classical zeta series by one or all routes
    Zeta {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum, default_value_t = Formula::All)]
        formula: Formula,
    },
    /// Compute the motivic series by one or all variants
    Motivic {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum, default_value_t = Variant::All)]
        variant: Variant,
    },
    /// Evaluate the Hilbert function h(l') at a lattice point
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// E-coordinates r_1,...,r_s of l' = sum r_v E_v
        #[arg(long)]
        at: String,
        /// Also re-derive p(l') from h-values and report the deviation
        #[arg(long)]
        round_trip: bool,
    },
    /// Run verification suites over the built-in zoo (plus an optional graph)
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: i32,
    reason: String,
}

impl Failure {
    fn new(code: i32, reason: impl Into<String>) -> Self {
        Failure { code, reason: reason.into() }
    }
}

fn zeta_failure(e: ZetaError) -> Failure {
    let code = match &e {
        ZetaError::UnsupportedClass(_)
        | ZetaError::NonZeroGenus(..)
        | ZetaError::TruncationInsufficient { .. } => EXIT_UNSUPPORTED,
        _ => EXIT_VERIFICATION,
    };
    Failure::new(code, e.to_string())
}

fn read_graph(input: &InputArgs) -> Result<ResolutionGraph, Failure> {
    let text = if input.stdin {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::new(EXIT_INVALID_GRAPH, format!("cannot read stdin: {e}")))?;
        buf
    } else if let Some(path) = &input.input {
        std::fs::read_to_string(path).map_err(|e| {
            Failure::new(EXIT_INVALID_GRAPH, format!("cannot read {}: {e}", path.display()))
        })?
    } else {
        return Err(Failure::new(EXIT_INVALID_GRAPH, "no input: pass --input PATH or --stdin"));
    };
    parse_graph(&text).map_err(|e| Failure::new(EXIT_INVALID_GRAPH, e.to_string()))
}

fn build_context(input: &InputArgs) -> Result<LatticeContext, Failure> {
    let graph = read_graph(input)?;
    LatticeContext::build(graph).map_err(|e| Failure::new(EXIT_INVALID_GRAPH, e.to_string()))
}

/// Deterministic document assembly: graph_class / order / series / verdicts
/// plus command-specific extras. serde_json maps are key-sorted.
struct Document {
    graph_class: Option<GraphClass>,
    order: Option<u32>,
    series: Vec<(String, Value, String)>, // (slot, json, rendered table)
    verdicts: Vec<(String, bool)>,
    warnings: Vec<String>,
    extras: Vec<(String, Value)>,
}

impl Document {
    fn new() -> Self {
        Document {
            graph_class: None,
            order: None,
            series: Vec::new(),
            verdicts: Vec::new(),
            warnings: Vec::new(),
            extras: Vec::new(),
        }
    }

    fn push_series<C: Coeff>(&mut self, slot: &str, s: &TruncatedSeries<C>) {
        let mut table = String::new();
        for (e, c) in s.terms() {
            table.push_str(&format!("  {} {}\n", render_exp(&e.0), c.render()));
        }
        self.series.push((slot.to_string(), s.to_json(), table));
    }

    fn verdict(&mut self, name: &str, pass: bool) {
        self.verdicts.push((name.to_string(), pass));
    }

    fn print(&self, format: Format) {
        match format {
            Format::Json => {
                let mut doc = serde_json::Map::new();
                if let Some(c) = self.graph_class {
                    doc.insert("graph_class".into(), json!(c.to_string()));
                }
                if let Some(n) = self.order {
                    doc.insert("order".into(), json!(n));
                }
                if !self.series.is_empty() {
                    let mut m = serde_json::Map::new();
                    for (slot, v, _) in &self.series {
                        m.insert(slot.clone(), v.clone());
                    }
                    doc.insert("series".into(), Value::Object(m));
                }
                if !self.verdicts.is_empty() {
                    let mut m = serde_json::Map::new();
                    for (name, pass) in &self.verdicts {
                        m.insert(name.clone(), json!(if *pass { "pass" } else { "fail" }));
                    }
                    doc.insert("verdicts".into(), Value::Object(m));
                }
                if !self.warnings.is_empty() {
                    doc.insert("warnings".into(), json!(self.warnings));
                }
                for (k, v) in &self.extras {
                    doc.insert(k.clone(), v.clone());
                }
                println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).unwrap());
            }
            Format::Table => {
                if let Some(c) = self.graph_class {
                    println!("graph_class: {c}");
                }
                if let Some(n) = self.order {
                    println!("order: {n}");
                }
                for (k, v) in &self.extras {
                    println!("{k}: {}", render_value(v));
                }
                for (slot, _, table) in &self.series {
                    println!("{slot}:");
                    print!("{table}");
                }
                for w in &self.warnings {
                    println!("warning: {w}");
                }
                for (name, pass) in &self.verdicts {
                    println!("{name}: {}", if *pass { "pass" } else { "fail" });
                }
            }
        }
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(render_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn rational_string(x: &num_rational::BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn cmd_validate(input: &InputArgs, format: Format) -> Result<(), Failure> {
    let ctx = build_context(input)?;
    let mut doc = Document::new();
    doc.graph_class = Some(ctx.graph.classify());
    doc.extras.push(("negative_definite".into(), json!(true)));
    doc.extras.push(("det_abs".into(), json!(ctx.det_abs.to_string())));
    doc.extras.push(("first_betti".into(), json!(ctx.graph.first_betti())));
    doc.extras.push(("cycle_count".into(), json!(ctx.graph.cycle_count())));
    let valencies: Vec<u32> = (0..ctx.n).map(|v| ctx.graph.valency(v)).collect();
    doc.extras.push(("valencies".into(), json!(valencies)));
    let k: Vec<String> = ctx.canonical_e.iter().map(rational_string).collect();
    doc.extras.push(("canonical_e_coords".into(), json!(k)));
    doc.extras.push(("zk_equals_e".into(), json!(ctx.zk_is_e())));
    doc.print(format);
    Ok(())
}

fn cmd_zeta(input: &InputArgs, output: &OutputArgs, formula: Formula) -> Result<(), Failure> {
    let ctx = build_context(input)?;
    let class = ctx.graph.classify();
    let order = output.order;
    let mut doc = Document::new();
    doc.graph_class = Some(class);
    doc.order = Some(order);
    match formula {
        Formula::Product => {
            doc.push_series("z_product", &zeta::zeta_product(&ctx, order));
            if class == GraphClass::CuspCycle {
                doc.warnings.push(
                    "the classical vertex product is information-free for cusp cycles \
                     (every valency is 2, so the product is the constant 1)"
                        .into(),
                );
            }
        }
        Formula::Binomial => {
            doc.push_series("z_binomial", &zeta::zeta_binomial(&ctx, order));
        }
        Formula::Incexc => {
            doc.push_series("z_incexc", &zeta::zeta_incexc(&ctx, order).map_err(zeta_failure)?);
        }
        Formula::Arrangement => {
            doc.push_series(
                "z_arrangement",
                &zeta::zeta_arrangement(&ctx, order).map_err(zeta_failure)?,
            );
        }
        Formula::CuspClosed => {
            doc.push_series(
                "z_cusp_closed",
                &zeta::cusp_closed_form(&ctx, order).map_err(zeta_failure)?,
            );
        }
        Formula::All => match class {
            GraphClass::TreeRational => {
                let product = zeta::zeta_product(&ctx, order);
                let binomial = zeta::zeta_binomial(&ctx, order);
                let incexc = zeta::zeta_incexc(&ctx, order).map_err(zeta_failure)?;
                let arrangement = zeta::zeta_arrangement(&ctx, order).map_err(zeta_failure)?;
                let agree = product == binomial && product == incexc && product == arrangement;
                doc.push_series("z_product", &product);
                doc.push_series("z_binomial", &binomial);
                doc.push_series("z_incexc", &incexc);
                doc.push_series("z_arrangement", &arrangement);
                doc.verdict("agree", agree);
            }
            GraphClass::CuspCycle => {
                let incexc = zeta::zeta_incexc(&ctx, order).map_err(zeta_failure)?;
                let arrangement = zeta::zeta_arrangement(&ctx, order).map_err(zeta_failure)?;
                let closed = zeta::cusp_closed_form(&ctx, order).map_err(zeta_failure)?;
                let agree = closed == incexc && closed == arrangement;
                doc.push_series("z_incexc", &incexc);
                doc.push_series("z_arrangement", &arrangement);
                doc.push_series("z_cusp_closed", &closed);
                doc.verdict("agree", agree);
            }
            GraphClass::Other => {
                return Err(Failure::new(
                    EXIT_UNSUPPORTED,
                    format!("graph class {class} is not supported by this formula"),
                ));
            }
        },
    }
    doc.print(output.format);
    if doc.verdicts.iter().any(|(_, pass)| !pass) {
        return Err(Failure::new(EXIT_VERIFICATION, "series routes disagree"));
    }
    Ok(())
}

fn cmd_motivic(input: &InputArgs, output: &OutputArgs, variant: Variant) -> Result<(), Failure> {
    let ctx = build_context(input)?;
    let class = ctx.graph.classify();
    let order = output.order;
    let mut doc = Document::new();
    doc.graph_class = Some(class);
    doc.order = Some(order);
    match variant {
        Variant::Tree => {
            doc.push_series("motivic_tree", &zeta::motivic_tree(&ctx, order).map_err(zeta_failure)?);
        }
        Variant::EcaProduct => {
            doc.push_series(
                "motivic_eca_product",
                &zeta::motivic_eca_product(&ctx, order).map_err(zeta_failure)?,
            );
        }
        Variant::EcaStrata => {
            doc.push_series(
                "motivic_eca_strata",
                &zeta::motivic_eca_strata(&ctx, order).map_err(zeta_failure)?,
            );
        }
        Variant::Cusp => {
            doc.push_series("motivic_cusp", &zeta::motivic_cusp(&ctx, order).map_err(zeta_failure)?);
        }
        Variant::All => {
            let eca = zeta::motivic_eca_product(&ctx, order).map_err(zeta_failure)?;
            let strata = zeta::motivic_eca_strata(&ctx, order).map_err(zeta_failure)?;
            doc.verdict("strata_agree", eca == strata);
            match class {
                GraphClass::TreeRational => {
                    let tree = zeta::motivic_tree(&ctx, order).map_err(zeta_failure)?;
                    doc.verdict("tree_agree", tree == eca);
                    doc.verdict(
                        "specialization",
                        zeta::specialize(&tree) == zeta::zeta_product(&ctx, order),
                    );
                    doc.push_series("motivic_tree", &tree);
                }
                GraphClass::CuspCycle => {
                    let cusp = zeta::motivic_cusp(&ctx, order).map_err(zeta_failure)?;
                    let closed = zeta::cusp_closed_form(&ctx, order).map_err(zeta_failure)?;
                    doc.verdict("specialization", zeta::specialize(&cusp) == closed);
                    doc.push_series("motivic_cusp", &cusp);
                }
                GraphClass::Other => {
                    return Err(Failure::new(
                        EXIT_UNSUPPORTED,
                        format!("graph class {class} is not supported by this variant"),
                    ));
                }
            }
            doc.push_series("motivic_eca_product", &eca);
            doc.push_series("motivic_eca_strata", &strata);
        }
    }
    doc.print(output.format);
    if doc.verdicts.iter().any(|(_, pass)| !pass) {
        return Err(Failure::new(EXIT_VERIFICATION, "motivic identities fail"));
    }
    Ok(())
}

fn class_zeta(ctx: &LatticeContext, order: u32) -> Result<TruncatedSeries<BigInt>, Failure> {
    match ctx.graph.classify() {
        GraphClass::TreeRational => Ok(zeta::zeta_product(ctx, order)),
        GraphClass::CuspCycle => zeta::cusp_closed_form(ctx, order).map_err(zeta_failure),
        class => Err(Failure::new(
            EXIT_UNSUPPORTED,
            format!("graph class {class} has no supported coefficient series"),
        )),
    }
}

fn cmd_hilbert(
    input: &InputArgs,
    output: &OutputArgs,
    at: &str,
    round_trip: bool,
) -> Result<(), Failure> {
    let ctx = build_context(input)?;
    let r: Vec<i64> = at
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::new(EXIT_INVALID_GRAPH, format!("cannot parse --at: {e}")))?;
    if r.len() != ctx.n {
        return Err(Failure::new(
            EXIT_INVALID_GRAPH,
            format!("--at has {} coordinates, graph has {} vertices", r.len(), ctx.n),
        ));
    }
    let a = ctx.estar_of_lattice(&r);
    let p = class_zeta(&ctx, output.order)?;
    let h = zeta::hilbert_from_p(&ctx, &p, &a).map_err(zeta_failure)?;
    let support = ctx
        .support_set_below(&a)
        .map_err(|e| Failure::new(EXIT_INVALID_GRAPH, e.to_string()))?;
    let mut doc = Document::new();
    doc.graph_class = Some(ctx.graph.classify());
    doc.order = Some(output.order);
    let support_json: Vec<Value> = support
        .iter()
        .map(|s| json!({ "exp": s, "p": p.coeff(s).to_string() }))
        .collect();
    doc.extras.push(("hilbert".into(), json!(h.to_string())));
    doc.extras.push(("estar_coords".into(), json!(a)));
    doc.extras.push(("support".into(), Value::Array(support_json)));
    if round_trip {
        let back = zeta::p_from_hilbert(&ctx, &p, &a).map_err(zeta_failure)?;
        let expected = p.coeff(&a);
        let deviation = (&back - &expected).to_string();
        doc.extras.push((
            "round_trip".into(),
            json!({
                "recovered": back.to_string(),
                "expected": expected.to_string(),
                "deviation": deviation,
            }),
        ));
        doc.verdict("round_trip", back == expected);
    }
    doc.print(output.format);
    if doc.verdicts.iter().any(|(_, pass)| !pass) {
        return Err(Failure::new(EXIT_VERIFICATION, "hilbert round trip deviates"));
    }
    Ok(())
}

/// Class-appropriate agreement + functional-equation checks on one graph.
fn user_graph_check(graph: ResolutionGraph, order: u32) -> Result<(), String> {
    let ctx = LatticeContext::build(graph).map_err(|e| e.to_string())?;
    match ctx.graph.classify() {
        GraphClass::TreeRational => {
            let p = zeta::zeta_product(&ctx, order);
            if p != zeta::zeta_binomial(&ctx, order)
                || p != zeta::zeta_incexc(&ctx, order).map_err(|e| e.to_string())?
                || p != zeta::zeta_arrangement(&ctx, order).map_err(|e| e.to_string())?
            {
                return Err("zeta routes disagree".into());
            }
        }
        GraphClass::CuspCycle => {
            let closed = zeta::cusp_closed_form(&ctx, order).map_err(|e| e.to_string())?;
            if closed != zeta::zeta_incexc(&ctx, order).map_err(|e| e.to_string())?
                || closed != zeta::zeta_arrangement(&ctx, order).map_err(|e| e.to_string())?
            {
                return Err("zeta routes disagree".into());
            }
        }
        class => return Err(format!("graph class {class} is not supported")),
    }
    if !zeta::functional_equation_check(&ctx).map_err(|e| e.to_string())? {
        return Err("functional equation fails".into());
    }
    Ok(())
}

fn cmd_verify(
    input: &InputArgs,
    output: &OutputArgs,
    suite: Suite,
    seed: u64,
) -> Result<(), Failure> {
    let order = output.order;
    let mut results: Vec<(String, Result<(), String>)> = Vec::new();
    let run = |s: Suite| -> Vec<(&'static str, verify::SuiteResult)> {
        match s {
            Suite::TreeEquivalence => vec![("tree-equivalence", verify::tree_four_way(order, 20, seed))],
            Suite::CuspIdentities => vec![("cusp-identities", verify::cusp_identities(order))],
            Suite::Motivic => vec![(
                "motivic",
                verify::motivic_tree_recovery(order)
                    .and_then(|_| verify::strata_oracle(order.min(5)))
                    .and_then(|_| verify::cusp_motivic(order)),
            )],
            Suite::FunctionalEquation => {
                vec![("functional-equation", verify::functional_equation(order))]
            }
            Suite::Closure => vec![("closure", verify::closure_randomized(1000, 20, seed))],
            Suite::Macdonald => vec![("macdonald", verify::macdonald())],
            Suite::All => verify::all_suites(order, seed),
        }
    };
    for (name, r) in run(suite) {
        results.push((name.to_string(), r));
    }
    if input.input.is_some() || input.stdin {
        let graph = read_graph(input)?;
        results.push(("user-graph".to_string(), user_graph_check(graph, order)));
    }
    let mut doc = Document::new();
    doc.order = Some(order);
    let mut reasons = Vec::new();
    for (name, r) in &results {
        doc.verdict(name, r.is_ok());
        if let Err(msg) = r {
            reasons.push(format!("{name}: {msg}"));
        }
    }
    doc.print(output.format);
    if !reasons.is_empty() {
        return Err(Failure::new(EXIT_VERIFICATION, reasons.join("; ")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate { input, format } => cmd_validate(input, *format),
        Command::Zeta { input, output, formula } => cmd_zeta(input, output, *formula),
        Command::Motivic { input, output, variant } => cmd_motivic(input, output, *variant),
        Command::Hilbert { input, output, at, round_trip } => {
            cmd_hilbert(input, output, at, *round_trip)
        }
        Command::Verify { input, output, suite, seed } => cmd_verify(input, output, *suite, *seed),
    }
}

fn main() {
    // referenced so the built-in zoo stays linked for the verify suites
    let _ = zoo::FIXTURES.len();
    let cli = Cli::parse();
    if let Err(f) = run(cli) {
        println!("{}", serde_json::to_string(&json!({ "reason": f.reason })).unwrap());
        std::process::exit(f.code);
    }
}
