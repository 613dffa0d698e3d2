//! Command-line front end.
//!
//! Exit codes are a stable contract:
//!   0  success (including an `embeds` verdict)
//!   2  input or parse error
//!   3  reduction fuel exhausted
//!   4  completion stopped at a budget
//!   5  inconclusive / not applicable / criterion not met
//!   6  graph is not bipartite

mod json;

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{Value, json};

use rewr_core::{
    BfsCaps, ColoringOutcome, CompletionConfig, CompletionOutcome, CompletionStatus, DefiningGraph,
    EmbeddingVerdict, Fuel, LetterOrder, Presentation, PresentationKind, RewriteError,
    RewritingSystem, VerdictStatus, Word, adian_criterion, adian_graphs,
    compare_monoid_presentations_bounded, embed_verdict, embed_verdict_from_seed,
    embed_verdict_precompleted, knuth_bendix, raag_normal_form,
};

const EXIT_INPUT: u8 = 2;
const EXIT_FUEL: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_INCONCLUSIVE: u8 = 5;
const EXIT_NOT_BIPARTITE: u8 = 6;

#[derive(Parser)]
#[command(
    name = "rewr",
    version,
    about = "String rewriting, Knuth-Bendix completion, and monoid-in-group embedding checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word to its normal form under a rewriting system
    Nf(NfArgs),
    /// Run Knuth-Bendix completion and print the resulting rules
    Complete(CompleteArgs),
    /// Decide (or decline to decide) whether the positive-word monoid embeds in the group
    Embed(EmbedArgs),
    /// First-letter/last-letter graph criterion for a positive monoid presentation
    Adian(AdianArgs),
    /// Defining-graph tooling: presentations, seed systems, colorings, normal forms
    Raag(RaagArgs),
}

#[derive(Args)]
struct NfArgs {
    /// Rewriting system file (`gens:`, optional `order:`, `rule:` lines)
    #[arg(long, conflicts_with = "presentation")]
    system: Option<PathBuf>,
    /// Presentation file; its relations are oriented under the order
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Order spec, e.g. "a > a^-1 > b > b^-1" or the shorthand "a > b"
    #[arg(long)]
    order: Option<String>,
    /// The word to reduce
    #[arg(long)]
    word: String,
    /// Bound on rule applications (default: unlimited when the system has
    /// an order, 1000000 otherwise)
    #[arg(long)]
    fuel: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 10)]
    max_steps: u32,
    #[arg(long, default_value_t = 10_000)]
    max_rules: usize,
    /// 0 disables the length budget
    #[arg(long = "max-rule-len", default_value_t = 32)]
    max_rule_length: usize,
}

impl BudgetArgs {
    fn config(&self) -> CompletionConfig {
        CompletionConfig {
            max_steps: self.max_steps,
            max_rules: self.max_rules,
            max_rule_length: self.max_rule_length,
            record_trace: true,
        }
    }
}

#[derive(Args)]
struct CompleteArgs {
    /// Presentation file; group presentations are first converted to the
    /// monoid presentation of the group
    #[arg(long, conflicts_with = "raag")]
    presentation: Option<PathBuf>,
    /// Defining-graph file; completion starts from the signed commutation
    /// seed system
    #[arg(long)]
    raag: Option<PathBuf>,
    #[arg(long)]
    order: Option<String>,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Write the line-oriented completion log to this file
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Also print the system with subsumed rules dropped (display only;
    /// verdicts always use the full system)
    #[arg(long)]
    prune: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EmbedArgs {
    /// Group presentation file
    #[arg(long)]
    presentation: Option<PathBuf>,
    /// Defining-graph file: seeds completion with the signed commutation
    /// rules; the default order comes from a bipartite coloring when one
    /// exists
    #[arg(long, conflicts_with = "presentation")]
    raag: Option<PathBuf>,
    /// A system supplied as already complete; checked, not completed
    #[arg(long, conflicts_with = "raag")]
    precompleted: Option<PathBuf>,
    #[arg(long)]
    order: Option<String>,
    #[command(flatten)]
    budgets: BudgetArgs,
    /// Fuel for the confluence check of a supplied system
    #[arg(long, default_value_t = 1_000_000)]
    fuel: u64,
    /// Bounded, non-conclusive comparison of the positive system against
    /// the presentation's relations read as a monoid presentation, over
    /// all positive words up to this length
    #[arg(long)]
    check_monoid_upto: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AdianArgs {
    /// Positive monoid presentation with nonempty relation sides
    #[arg(long)]
    presentation: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RaagArgs {
    /// Defining-graph file (`vertices:` and `edge:` lines)
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    order: Option<String>,
    /// Print the group presentation
    #[arg(long)]
    emit_presentation: bool,
    /// Print the signed commutation seed system
    #[arg(long)]
    emit_re0: bool,
    /// Print a proper two-coloring, or the odd cycle preventing one
    #[arg(long)]
    color: bool,
    /// Reduce this word to its normal form in the group
    #[arg(long)]
    nf: Option<String>,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn input_err(message: impl Display) -> Failure {
    fail(EXIT_INPUT, message)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Nf(args) => cmd_nf(args),
        Command::Complete(args) => cmd_complete(args),
        Command::Embed(args) => cmd_embed(args),
        Command::Adian(args) => cmd_adian(args),
        Command::Raag(args) => cmd_raag(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    Presentation::parse(&read_file(path)?)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<RewritingSystem, Failure> {
    RewritingSystem::parse(&read_file(path)?)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<DefiningGraph, Failure> {
    DefiningGraph::parse(&read_file(path)?)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn resolve_order(
    alphabet: &rewr_core::Alphabet,
    spec: Option<&str>,
) -> Result<LetterOrder, Failure> {
    match spec {
        Some(spec) => LetterOrder::parse_spec(alphabet, spec).map_err(input_err),
        None => Ok(LetterOrder::interleaved(alphabet)),
    }
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid json")
    );
}

// ---------------------------------------------------------------------------
// nf
// ---------------------------------------------------------------------------

fn cmd_nf(args: NfArgs) -> Result<u8, Failure> {
    let system = match (&args.system, &args.presentation) {
        (Some(path), None) => {
            if args.order.is_some() {
                return Err(input_err(
                    "--order applies to --presentation input; give the system file an order: line instead",
                ));
            }
            load_system(path)?
        }
        (None, Some(path)) => {
            let p = load_presentation(path)?;
            let p = match p.kind {
                PresentationKind::Group => p.to_monoid_presentation().map_err(input_err)?,
                PresentationKind::Monoid => p,
            };
            let order = resolve_order(&p.alphabet, args.order.as_deref())?;
            RewritingSystem::from_presentation(&p, order).map_err(input_err)?
        }
        _ => {
            return Err(input_err(
                "provide exactly one of --system or --presentation",
            ));
        }
    };
    let word = Word::parse(&args.word, system.alphabet()).map_err(input_err)?;
    let fuel = match (system.order().is_some(), args.fuel) {
        (_, Some(n)) => Fuel::Bounded(n),
        (true, None) => Fuel::Unlimited,
        (false, None) => Fuel::Bounded(1_000_000),
    };
    match system.normal_form(&word, fuel) {
        Ok(nf) => {
            let text = nf.display(system.alphabet()).to_string();
            if args.json {
                print_json(&json!({ "normal_form": text }));
            } else {
                println!("{text}");
            }
            Ok(0)
        }
        Err(RewriteError::FuelExhausted) => Err(fail(EXIT_FUEL, "reduction fuel exhausted")),
    }
}

// ---------------------------------------------------------------------------
// complete
// ---------------------------------------------------------------------------

fn completion_seed(
    presentation: Option<&Path>,
    raag: Option<&Path>,
    order_spec: Option<&str>,
) -> Result<(RewritingSystem, LetterOrder), Failure> {
    match (presentation, raag) {
        (Some(path), None) => {
            let p = load_presentation(path)?;
            let p = match p.kind {
                PresentationKind::Group => p.to_monoid_presentation().map_err(input_err)?,
                PresentationKind::Monoid => p,
            };
            let order = resolve_order(&p.alphabet, order_spec)?;
            let seed = RewritingSystem::from_presentation(&p, order.clone()).map_err(input_err)?;
            Ok((seed, order))
        }
        (None, Some(path)) => {
            let graph = load_graph(path)?;
            let order = resolve_order(graph.vertices(), order_spec)?;
            let seed = graph.seed_system(&order).map_err(input_err)?;
            Ok((seed, order))
        }
        _ => Err(input_err("provide exactly one of --presentation or --raag")),
    }
}

fn render_completion_human(out: &CompletionOutcome) -> String {
    let mut text = String::new();
    match out.status {
        CompletionStatus::Complete => text.push_str("status: complete\n"),
        CompletionStatus::BudgetExhausted(kind) => {
            text.push_str(&format!("status: budget exhausted ({kind})\n"));
        }
    }
    text.push_str(&format!("rules: {}\n", out.system.len()));
    text.push_str(&format!("created: {}\n", out.created_count()));
    for rule in out.system.rules() {
        text.push_str(&format!(
            "rule {} (step {}): {} -> {}\n",
            rule.id,
            rule.step,
            rule.lhs.display(out.system.alphabet()),
            rule.rhs.display(out.system.alphabet()),
        ));
    }
    text
}

fn cmd_complete(args: CompleteArgs) -> Result<u8, Failure> {
    let (seed, order) = completion_seed(
        args.presentation.as_deref(),
        args.raag.as_deref(),
        args.order.as_deref(),
    )?;
    let out = knuth_bendix(&seed, &order, &args.budgets.config()).map_err(input_err)?;
    if let Some(path) = &args.trace {
        let mut log = out.log_lines().join("\n");
        log.push('\n');
        fs::write(path, log).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    }
    let pruned = args.prune.then(|| out.system.pruned());
    if args.json {
        let mut value = json!({
            "status": json::status_value(&out.status),
            "rules": json::rules_value(&out.system),
            "created": out.created_count(),
            "trace": json::trace_value(&out),
        });
        if let Some(pruned) = &pruned {
            value
                .as_object_mut()
                .expect("object")
                .insert("pruned_rules".into(), json::rules_value(pruned));
        }
        print_json(&value);
    } else {
        print!("{}", render_completion_human(&out));
        if let Some(pruned) = &pruned {
            println!(
                "pruned: {} of {} rules remain",
                pruned.len(),
                out.system.len()
            );
            for rule in pruned.rules() {
                println!("pruned rule {}", pruned.display_rule(rule.id));
            }
        }
    }
    Ok(match out.status {
        CompletionStatus::Complete => 0,
        CompletionStatus::BudgetExhausted(_) => EXIT_BUDGET,
    })
}

// ---------------------------------------------------------------------------
// embed
// ---------------------------------------------------------------------------

fn render_verdict_human(verdict: &EmbeddingVerdict, termination: Option<&str>) -> String {
    let system = verdict.system();
    let mut text = String::new();
    match &verdict.status {
        VerdictStatus::Embeds => text.push_str("verdict: embeds\n"),
        VerdictStatus::Inconclusive(reason) => {
            text.push_str("verdict: inconclusive\n");
            text.push_str(&format!("reason: {reason}\n"));
        }
        VerdictStatus::NotApplicable(reason) => {
            text.push_str("verdict: not applicable\n");
            text.push_str(&format!("reason: {reason}\n"));
        }
    }
    if let Some(note) = termination {
        text.push_str(&format!("termination: {note}\n"));
    }
    match &verdict.c_plus {
        rewr_core::CPlusStatus::Holds => text.push_str("c_plus: holds\n"),
        rewr_core::CPlusStatus::NotApplicable => text.push_str("c_plus: not applicable\n"),
        rewr_core::CPlusStatus::Violations(ids) => {
            text.push_str("c_plus: violated\n");
            for id in ids {
                text.push_str(&format!("violating rule {}\n", system.display_rule(*id)));
            }
        }
    }
    match &verdict.provenance {
        None => text.push_str("provenance: not checked\n"),
        Some(rewr_core::ProvenanceStatus::Holds) => text.push_str("provenance: holds\n"),
        Some(rewr_core::ProvenanceStatus::Counterexample(id)) => {
            text.push_str(&format!("provenance: counterexample rule {id}\n"));
        }
    }
    if let Some(plus) = &verdict.positive_system {
        text.push_str(&format!("positive rules: {}\n", plus.len()));
        for rule in plus.rules() {
            text.push_str(&format!("rule {}\n", plus.display_rule(rule.id)));
        }
    }
    text
}

fn cmd_embed(args: EmbedArgs) -> Result<u8, Failure> {
    let (verdict, termination, candidate): (EmbeddingVerdict, Option<&str>, Option<Presentation>) =
        if let Some(path) = &args.precompleted {
            if args.order.is_some() {
                return Err(input_err(
                    "--order does not apply to --precompleted; give the system file an order: line instead",
                ));
            }
            let system = load_system(path)?;
            let termination = if system.order().is_some() {
                "by ordering"
            } else {
                "assumed (supplied system has no order)"
            };
            let verdict = embed_verdict_precompleted(&system, Fuel::Bounded(args.fuel))
                .map_err(|_| fail(EXIT_FUEL, "confluence check ran out of fuel"))?;
            let candidate = match &args.presentation {
                Some(p) => Some(load_presentation(p)?),
                None => None,
            };
            (verdict, Some(termination), candidate)
        } else if let Some(path) = &args.raag {
            let graph = load_graph(path)?;
            let order = match &args.order {
                Some(spec) => LetterOrder::parse_spec(graph.vertices(), spec).map_err(input_err)?,
                None => match graph.two_coloring() {
                    ColoringOutcome::Proper(coloring) => coloring
                        .letter_order(graph.vertices(), None, None)
                        .map_err(input_err)?,
                    ColoringOutcome::OddCycle(_) => LetterOrder::interleaved(graph.vertices()),
                },
            };
            let seed = graph.seed_system(&order).map_err(input_err)?;
            let verdict = embed_verdict_from_seed(&seed, &order, &args.budgets.config())
                .map_err(input_err)?;
            (verdict, None, Some(graph.presentation()))
        } else if let Some(path) = &args.presentation {
            let p = load_presentation(path)?;
            let order = resolve_order(&p.alphabet, args.order.as_deref())?;
            let verdict = embed_verdict(&p, &order, &args.budgets.config()).map_err(input_err)?;
            (verdict, None, Some(p))
        } else {
            return Err(input_err(
                "provide one of --presentation, --raag, or --precompleted",
            ));
        };

    // the first/last-letter criterion is an independent data point; it
    // applies whenever the candidate relations are positive with nonempty
    // sides
    let adian = candidate.as_ref().and_then(|p| {
        let monoid = Presentation {
            alphabet: p.alphabet.clone(),
            relations: p.relations.clone(),
            kind: PresentationKind::Monoid,
        };
        adian_graphs(&monoid).ok().map(|g| adian_criterion(&g))
    });

    let monoid_check = match (args.check_monoid_upto, &verdict.positive_system, &candidate) {
        (Some(k), Some(plus), Some(p)) => {
            let all_positive = p
                .relations
                .iter()
                .all(|r| r.left.is_positive() && r.right.is_positive());
            if !all_positive {
                Some(Err("relations use inverse letters".to_string()))
            } else {
                let candidate_monoid = Presentation {
                    alphabet: p.alphabet.clone(),
                    relations: p.relations.clone(),
                    kind: PresentationKind::Monoid,
                };
                let caps = BfsCaps {
                    max_len: k + 4,
                    max_count: 20_000,
                };
                let cmp = compare_monoid_presentations_bounded(
                    &candidate_monoid,
                    plus,
                    k,
                    caps,
                    Fuel::Bounded(args.fuel),
                )
                .map_err(|e| fail(EXIT_FUEL, e))?;
                Some(Ok(cmp))
            }
        }
        (Some(_), _, _) => Some(Err("no positive system to compare against".to_string())),
        (None, _, _) => None,
    };

    if args.json {
        let mut value = json::verdict_value(&verdict);
        let object = value.as_object_mut().expect("verdict is an object");
        object.insert(
            "adian".into(),
            adian.as_ref().map_or(Value::Null, json::adian_value),
        );
        if let Some(note) = termination {
            object.insert("termination".into(), json!(note));
        }
        if let Some(check) = &monoid_check {
            let rendered = match check {
                Ok(cmp) => json::monoid_comparison_value(cmp, verdict.system().alphabet()),
                Err(reason) => json!({ "skipped": reason }),
            };
            object.insert("monoid_check".into(), rendered);
        }
        print_json(&value);
    } else {
        print!("{}", render_verdict_human(&verdict, termination));
        if let Some(report) = &adian {
            let yn = |b: bool| if b { "yes" } else { "no" };
            println!("adian left cycle: {}", yn(report.left_has_cycle));
            println!("adian right cycle: {}", yn(report.right_has_cycle));
            println!("adian embeds: {}", yn(report.embeds_by_adian));
        }
        if let Some(check) = &monoid_check {
            match check {
                Ok(cmp) => {
                    let alphabet = verdict.system().alphabet();
                    match &cmp.mismatch {
                        None => println!(
                            "monoid check (non-conclusive): consistent within caps ({} words, {} undecided)",
                            cmp.checked_words, cmp.undecided
                        ),
                        Some((a, b)) => println!(
                            "monoid check: mismatch between \"{}\" and \"{}\"",
                            a.display(alphabet),
                            b.display(alphabet)
                        ),
                    }
                }
                Err(reason) => println!("monoid check skipped: {reason}"),
            }
        }
    }
    Ok(if verdict.embeds() {
        0
    } else {
        EXIT_INCONCLUSIVE
    })
}

// ---------------------------------------------------------------------------
// adian
// ---------------------------------------------------------------------------

fn cmd_adian(args: AdianArgs) -> Result<u8, Failure> {
    let p = load_presentation(&args.presentation)?;
    let graphs = adian_graphs(&p).map_err(input_err)?;
    let report = adian_criterion(&graphs);
    if args.json {
        print_json(&json::adian_value(&report));
    } else {
        let yn = |b: bool| if b { "yes" } else { "no" };
        println!("left cycle: {}", yn(report.left_has_cycle));
        println!("right cycle: {}", yn(report.right_has_cycle));
        println!("embeds by adian: {}", yn(report.embeds_by_adian));
    }
    Ok(if report.embeds_by_adian {
        0
    } else {
        EXIT_INCONCLUSIVE
    })
}

// ---------------------------------------------------------------------------
// raag
// ---------------------------------------------------------------------------

fn cmd_raag(args: RaagArgs) -> Result<u8, Failure> {
    let graph = load_graph(&args.graph)?;
    if !(args.emit_presentation || args.emit_re0 || args.color || args.nf.is_some()) {
        return Err(input_err(
            "nothing to do: pass --emit-presentation, --emit-re0, --color, or --nf",
        ));
    }
    let mut object = serde_json::Map::new();
    let mut human = String::new();

    if args.emit_presentation {
        let text = graph.presentation().to_text();
        if args.json {
            object.insert("presentation".into(), json!(text));
        } else {
            human.push_str(&text);
        }
    }
    if args.emit_re0 {
        let order = resolve_order(graph.vertices(), args.order.as_deref())?;
        let seed = graph.seed_system(&order).map_err(input_err)?;
        if args.json {
            object.insert("re0".into(), json!(seed.to_text()));
        } else {
            human.push_str(&seed.to_text());
        }
    }
    if args.color {
        match graph.two_coloring() {
            ColoringOutcome::Proper(coloring) => {
                if args.json {
                    let entries: Vec<Value> = graph
                        .vertices()
                        .gens()
                        .map(|g| {
                            json!({
                                "vertex": graph.vertices().name(g),
                                "color": coloring.color(g).to_string(),
                            })
                        })
                        .collect();
                    object.insert("coloring".into(), Value::Array(entries));
                } else {
                    human.push_str(&coloring.to_text(graph.vertices()));
                }
            }
            ColoringOutcome::OddCycle(cycle) => {
                let names: Vec<&str> = cycle.iter().map(|&v| graph.vertices().name(v)).collect();
                if args.json {
                    object.insert("odd_cycle".into(), json!(names));
                    print_json(&Value::Object(object));
                } else {
                    print!("{human}");
                    println!("not bipartite; odd cycle: {}", names.join(" "));
                }
                return Ok(EXIT_NOT_BIPARTITE);
            }
        }
    }
    if let Some(word_text) = &args.nf {
        let order = resolve_order(graph.vertices(), args.order.as_deref())?;
        let word = Word::parse(word_text, graph.vertices()).map_err(input_err)?;
        let nf = raag_normal_form(&graph, &order, &word).map_err(input_err)?;
        let text = nf.display(graph.vertices()).to_string();
        if args.json {
            object.insert("normal_form".into(), json!(text));
        } else {
            human.push_str(&text);
            human.push('\n');
        }
    }

    if args.json {
        print_json(&Value::Object(object));
    } else {
        print!("{human}");
    }
    Ok(0)
}
