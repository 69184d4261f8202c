use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use borel_stratum::criterion::{is_j_basis_with, special_pairs, PairMode};
use borel_stratum::io::{
    criterion_json, embedding_json, legend_json, oracle_json, parse_input, parse_point, point_json,
    section_json, specialized_json, stratum_json, summary_json, trace_json, IdealFile,
};
use borel_stratum::oracle::{bst_membership_oracle, hilbert_oracle};
use borel_stratum::random::{rng, small_coefficient};
use borel_stratum::reduce::{g_reduce, CanonicalChooser, PreferRuleChooser, Reducer};
use borel_stratum::stratum::{
    groebner_section, is_point_on_stratum, minimal_embedding, stratum_ideal_reduction, tangent_dim_at_origin,
    EmbeddingBudget, GenericMarkedSet, StratumIdeal,
};
use borel_stratum::text::Vars;
use borel_stratum::{borel_closure, Error, QJSet, QPoly, TermOrder};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::{json, Value};

/// Marked bases over strongly stable ideals and their strata.
#[derive(Parser)]
#[command(name = "bstrat", version)]
struct Cli {
    /// Print JSON on one line.
    #[arg(long, global = true)]
    compact: bool,
    /// Print a short human-readable summary to stderr.
    #[arg(long, global = true)]
    summary: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Ideal file (`{"vars":…,"gens":…}`) or marked-set file; `-` reads stdin.
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    G,
    Gstar,
    Gstarstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Special,
    All,
}

impl From<Mode> for PairMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Special => PairMode::Special,
            Mode::All => PairMode::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Deglex,
    Degrevlex,
}

impl From<Order> for TermOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Lex => TermOrder::Lex,
            Order::Deglex => TermOrder::Deglex,
            Order::Degrevlex => TermOrder::Degrevlex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Is the monomial ideal strongly stable?
    StableCheck(Input),
    /// Smallest strongly stable ideal containing the generators.
    Closure(Input),
    /// Hilbert function of J, and of the marked set's ideal when given.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Reduce a polynomial by the marked set.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
        /// `auto` uses G** when J is strongly stable and plain G otherwise.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Attach the step-by-step trace.
        #[arg(long)]
        trace: bool,
        /// For plain G-reduction: use the rule with this head as late as possible.
        #[arg(long)]
        prefer: Option<String>,
        #[arg(long, default_value_t = 1000)]
        step_cap: usize,
    },
    /// Buchberger-like criterion.
    Jbasis {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Mode::Special)]
        mode: Mode,
    },
    /// Direct linear-algebra membership check.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Highest degree checked; defaults to m0, or twice the largest
        /// generator degree when J is not strongly stable.
        #[arg(long)]
        max_degree: Option<u32>,
        /// Use these generators instead of the marked set (repeatable).
        #[arg(long = "gen")]
        gens: Vec<String>,
    },
    /// Equations of the stratum.
    Stratum {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Mode::Special)]
        mode: Mode,
        /// Print only the coefficient-variable legend.
        #[arg(long)]
        legend: bool,
        /// Print only the embedding summary.
        #[arg(long)]
        embed: bool,
        #[arg(long, default_value_t = EmbeddingBudget::default().max_terms)]
        budget: usize,
    },
    /// Section by the Groebner stratum of a term order.
    Section {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
    },
    /// Dimension of the tangent space at the origin.
    Tangent(Input),
    /// Elimination of linearly occurring coefficient variables.
    Embed {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = EmbeddingBudget::default().max_terms)]
        budget: usize,
    },
    /// Does a coefficient point lie on the stratum?
    PointCheck {
        #[command(flatten)]
        input: Input,
        /// Point file: array of N rationals or object `{"c[i][j]": "p/q"}`.
        #[arg(long, conflicts_with = "random")]
        point: Option<PathBuf>,
        /// Draw a sparse random point instead.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Failures carry the exit code: 1 for unreadable input, 2 for refusals.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn domain(e: &Error, vars: &Vars) -> Self {
        Failure { code: if e.is_refusal() { 2 } else { 1 }, message: e.render(vars) }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::input(e.to_string()))
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

fn load(input: &Input) -> Result<(Vars, QJSet), Failure> {
    let text = read(&input.file)?;
    parse_input(&text).map_err(|e| Failure::input(e.to_string()))
}

fn generic(vars: &Vars, jset: &QJSet) -> Result<GenericMarkedSet, Failure> {
    GenericMarkedSet::new(jset.ideal()).map_err(|e| Failure::domain(&e, vars))
}

fn stratum(vars: &Vars, gset: &GenericMarkedSet, mode: PairMode) -> Result<StratumIdeal, Failure> {
    stratum_ideal_reduction(gset, mode).map_err(|e| Failure::domain(&e, vars))
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::StableCheck(input) => {
            let (vars, jset) = load(input)?;
            let witness = jset.ideal().stability_witness();
            Ok(json!({
                "strongly_stable": witness.is_none(),
                "witness": witness.map(|(from, to)| json!({
                    "from": vars.monomial(&from),
                    "to": vars.monomial(&to),
                })),
            }))
        }
        Command::Closure(input) => {
            let (vars, jset) = load(input)?;
            let closure = borel_closure(vars.nvars(), jset.ideal().basis());
            Ok(serde_json::to_value(IdealFile::new(&vars, &closure)).expect("plain data"))
        }
        Command::Hilbert { input, max_degree } => {
            let (_, jset) = load(input)?;
            let gens = jset.generators();
            let rows: Vec<Value> = (0..=*max_degree)
                .map(|m| {
                    json!({
                        "m": m,
                        "dim_j": jset.ideal().dim_in_degree(m),
                        "dim_i": hilbert_oracle(&gens, jset.nvars(), m),
                    })
                })
                .collect();
            Ok(json!({ "degrees": rows }))
        }
        Command::Reduce { input, poly, method, trace, prefer, step_cap } => {
            let (vars, jset) = load(input)?;
            let h = vars.parse_poly(poly).map_err(|e| Failure::input(e.to_string()))?;
            let stable = jset.ideal().is_strongly_stable();
            let method = match method {
                Method::Auto if stable => Method::Gstarstar,
                Method::Auto => Method::G,
                m => *m,
            };
            if let Method::G = method {
                let t = match prefer {
                    Some(head) => {
                        let head = vars.parse_monomial(head).map_err(|e| Failure::input(e.to_string()))?;
                        g_reduce(&h, &jset, &mut PreferRuleChooser { head }, *step_cap)
                    }
                    None => g_reduce(&h, &jset, &mut CanonicalChooser, *step_cap),
                };
                let mut out = trace_json(&vars, jset.ideal(), &t);
                if !trace {
                    out.as_object_mut().expect("object").remove("steps");
                }
                out["method"] = json!("g");
                return Ok(out);
            }
            let reducer = Reducer::new(&jset).map_err(|e| Failure::domain(&e, &vars))?;
            let (name, result) = match method {
                Method::Gstar => ("gstar", reducer.gstar(&h)),
                _ => ("gstarstar", reducer.gstarstar(&h)),
            };
            let result = result.map_err(|e| Failure::domain(&e, &vars))?;
            let mut out = json!({ "method": name, "status": "normal_form", "result": vars.poly(&result) });
            if *trace && name == "gstarstar" {
                let t = reducer.gstarstar_stepwise(&h, |_| 0).map_err(|e| Failure::domain(&e, &vars))?;
                out["trace"] = trace_json(&vars, jset.ideal(), &t);
            }
            Ok(out)
        }
        Command::Jbasis { input, mode } => {
            let (vars, jset) = load(input)?;
            let report = is_j_basis_with(&jset, (*mode).into()).map_err(|e| Failure::domain(&e, &vars))?;
            Ok(criterion_json(&vars, jset.ideal(), &report))
        }
        Command::Oracle { input, max_degree, gens } => {
            let (vars, jset) = load(input)?;
            let polys: Vec<QPoly> = if gens.is_empty() {
                jset.generators()
            } else {
                gens.iter()
                    .map(|g| vars.parse_poly(g))
                    .collect::<Result<_, _>>()
                    .map_err(|e| Failure::input(e.to_string()))?
            };
            let m_max = match max_degree {
                Some(m) => *m,
                None if jset.ideal().is_strongly_stable() => {
                    special_pairs(&jset).map_err(|e| Failure::domain(&e, &vars))?.1
                }
                None => 2 * jset.ideal().max_degree().unwrap_or(0),
            };
            let mut out = oracle_json(&vars, &bst_membership_oracle(&polys, jset.ideal(), m_max));
            out["m_max"] = json!(m_max);
            Ok(out)
        }
        Command::Stratum { input, mode, legend, embed, budget } => {
            let (vars, jset) = load(input)?;
            let gset = generic(&vars, &jset)?;
            if *legend {
                return Ok(legend_json(&vars, &gset));
            }
            let s = stratum(&vars, &gset, (*mode).into())?;
            if *embed {
                let tangent = tangent_dim_at_origin(&s.vars, s.polys());
                let e = minimal_embedding(&s, EmbeddingBudget { max_terms: *budget });
                return Ok(summary_json(&gset, &e, tangent));
            }
            Ok(stratum_json(&vars, &gset, &s))
        }
        Command::Section { input, order } => {
            let (vars, jset) = load(input)?;
            let gset = generic(&vars, &jset)?;
            let s = stratum(&vars, &gset, PairMode::Special)?;
            let section = groebner_section(&gset, &s, (*order).into());
            let mut out = section_json(&vars, &gset, &section);
            out["tangent_dim"] = json!(tangent_dim_at_origin(&section.ideal.vars, section.ideal.polys()));
            Ok(out)
        }
        Command::Tangent(input) => {
            let (vars, jset) = load(input)?;
            let gset = generic(&vars, &jset)?;
            let s = stratum(&vars, &gset, PairMode::Special)?;
            Ok(json!({ "N": gset.n(), "tangent_dim": tangent_dim_at_origin(&s.vars, s.polys()) }))
        }
        Command::Embed { input, budget } => {
            let (vars, jset) = load(input)?;
            let gset = generic(&vars, &jset)?;
            let s = stratum(&vars, &gset, PairMode::Special)?;
            let tangent = tangent_dim_at_origin(&s.vars, s.polys());
            let e = minimal_embedding(&s, EmbeddingBudget { max_terms: *budget });
            Ok(embedding_json(&vars, &gset, &s, &e, tangent))
        }
        Command::PointCheck { input, point, random, seed } => {
            let (vars, jset) = load(input)?;
            let gset = generic(&vars, &jset)?;
            let c = match (point, random) {
                (Some(path), _) => {
                    let value: Value =
                        serde_json::from_str(&read(path)?).map_err(|e| Failure::input(e.to_string()))?;
                    parse_point(&gset, &value).map_err(|e| Failure::domain(&e, &vars))?
                }
                (None, true) => {
                    let mut r = rng(*seed);
                    (0..gset.n())
                        .map(|_| if r.gen_bool(0.2) { small_coefficient(&mut r) } else { Default::default() })
                        .collect()
                }
                (None, false) => vec![Default::default(); gset.n()],
            };
            let s = stratum(&vars, &gset, PairMode::Special)?;
            let on = is_point_on_stratum(&gset, &s, &c).map_err(|e| Failure::domain(&e, &vars))?;
            let specialized = gset.specialize(&c).map_err(|e| Failure::domain(&e, &vars))?;
            let verdict = is_j_basis_with(&specialized, PairMode::Special)
                .map_err(|e| Failure::domain(&e, &vars))?
                .verdict;
            Ok(json!({
                "point": point_json(&gset, &c),
                "on_stratum": on,
                "j_basis": verdict,
                "agree": on == verdict,
                "marked_set": specialized_json(&vars, &specialized),
            }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            if cli.summary {
                eprintln!("{}", human_summary(&value));
            }
            let text = if cli.compact {
                serde_json::to_string(&value)
            } else {
                serde_json::to_string_pretty(&value)
            };
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout(), "{}", text.expect("JSON values always serialize"));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Top-level scalar fields, one per line.
fn human_summary(value: &Value) -> String {
    match value.as_object() {
        Some(map) => map
            .iter()
            .filter(|(_, v)| !v.is_array() && !v.is_object())
            .map(|(k, v)| format!("{k}: {v}"))
            .collect::<Vec<_>>()
            .join("\n"),
        None => String::new(),
    }
}
