use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flatgame::builtins::{builtin, NAMES, TRAVELER_DEFAULT};
use flatgame::continuous::{
    analytic_me_set, grid_m_equilibria, hausdorff, lstar, sig12, verify_flat_closed_form, Duopoly, GridSpec, Piece,
};
use flatgame::equilibrium::security_levels;
use flatgame::flatten::iterate_flatten;
use flatgame::format::{emit_json, emit_matrix, emit_tensor_json, parse_game, Format, GameDocument};
use flatgame::mixed::{expected_payoff, mixed_equilibrium_candidates, select_equilibrium};
use flatgame::multiplayer::{flat_tensor_game_with, m_equilibria_n_with, CoalitionRule, TensorGame};
use flatgame::{classify, m_equilibria, Concepts, FiniteGame, Player, PureProfile};

#[derive(Parser)]
#[command(name = "flatgame", version, about = "Equilibria, lower payoffs and m-equilibria of normal-form games")]
struct Cli {
    /// Report layout.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Table)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Json,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Cournot,
    Puu,
    Dimcost,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coalitions {
    Others,
    All,
    Singletons,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["builtin", "file"])))]
struct Source {
    /// Name of a built-in game (see `builtin --list`).
    #[arg(long)]
    builtin: Option<String>,
    /// Game file; `.json` files are read as JSON, others as matrix text.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Override the file format guessed from the extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Lowest claim of the traveler's dilemma.
    #[arg(long)]
    lo: Option<i64>,
    /// Highest claim of the traveler's dilemma.
    #[arg(long)]
    hi: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Flag every profile with every solution concept.
    Classify(Source),
    /// Print the flat game, optionally iterated.
    Flatten {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        iterations: usize,
        /// Coalition rule for N-player games.
        #[arg(long, value_enum, default_value_t = Coalitions::Others)]
        coalitions: Coalitions,
    },
    /// List the m-equilibria.
    Me {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Coalitions::Others)]
        coalitions: Coalitions,
    },
    /// Mixed equilibria found by support enumeration (games up to 4x4).
    Mixed {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        max_support: usize,
    },
    /// Closed forms and grid checks for the parametric duopolies.
    Duopoly {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long = "L")]
        l: f64,
        #[arg(long = "C")]
        c: Option<f64>,
        /// Truncation of the diminishing-cost domain (default 100 L).
        #[arg(long)]
        xmax: Option<f64>,
        /// Grid points per axis for --check.
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Lower grid bound (default 0, or 0.01 for puu).
        #[arg(long)]
        lower: Option<f64>,
        /// Compare the closed forms with the discretized game.
        #[arg(long)]
        check: bool,
    },
    /// Positive root of (1+L)^4 - L^5 by bisection.
    Lstar {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Draw one m-equilibrium uniformly with a seeded generator.
    Select {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        seed: u64,
    },
    /// List the built-in games or print one of them.
    Builtin {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        lo: Option<i64>,
        #[arg(long)]
        hi: Option<i64>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

type Outcome = Result<String, Failure>;

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn traveler_params(name: &str, lo: Option<i64>, hi: Option<i64>) -> Result<Option<(i64, i64)>, Failure> {
    if lo.is_none() && hi.is_none() {
        return Ok(None);
    }
    if name != "traveler" {
        return Err(Failure::Usage(format!("--lo/--hi only apply to the traveler game, not {name}")));
    }
    Ok(Some((lo.unwrap_or(TRAVELER_DEFAULT.0), hi.unwrap_or(TRAVELER_DEFAULT.1))))
}

/// Strategy names used in reports: one-based indices, except that the
/// traveler's dilemma is labelled by the claims themselves.
#[derive(Clone, Copy)]
struct Labels {
    first: usize,
}

impl Labels {
    fn of(src: &Source) -> Self {
        match src.builtin.as_deref() {
            Some("traveler") => Self { first: src.lo.unwrap_or(TRAVELER_DEFAULT.0) as usize },
            _ => Self { first: 1 },
        }
    }

    fn pair(self, p: PureProfile) -> [usize; 2] {
        [p.row + self.first, p.col + self.first]
    }

    fn text(self, p: PureProfile) -> String {
        let [a, b] = self.pair(p);
        format!("({a},{b})")
    }

    fn json(self, p: PureProfile) -> Value {
        json!(self.pair(p))
    }
}

fn load(src: &Source) -> Result<GameDocument, Failure> {
    if let Some(name) = &src.builtin {
        let params = traveler_params(name, src.lo, src.hi)?;
        return builtin(name, params).map(GameDocument::Bimatrix).map_err(domain);
    }
    let path = src.file.as_ref().expect("clap enforces a source");
    if src.lo.is_some() || src.hi.is_some() {
        return Err(Failure::Usage("--lo/--hi only apply to --builtin traveler".into()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let format = match src.input_format {
        Some(InputFormat::Json) => Format::Json,
        Some(InputFormat::Matrix) => Format::Matrix,
        None => Format::from_path(&path.to_string_lossy()),
    };
    parse_game(&text, format).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load_bimatrix(src: &Source) -> Result<FiniteGame, Failure> {
    match load(src)? {
        GameDocument::Bimatrix(g) => Ok(g),
        GameDocument::Tensor(t) => Err(Failure::Domain(format!(
            "this command needs a two-player game, {:?} has {} players",
            t.title(),
            t.players()
        ))),
    }
}

fn rule(c: Coalitions) -> CoalitionRule {
    match c {
        Coalitions::Others => CoalitionRule::Others,
        Coalitions::All => CoalitionRule::All,
        Coalitions::Singletons => CoalitionRule::Singletons,
    }
}

fn shown(title: &str) -> &str {
    if title.is_empty() {
        "untitled game"
    } else {
        title
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn run_classify(src: &Source, fmt: OutFormat) -> Outcome {
    let g = load_bimatrix(src)?;
    let labels = Labels::of(src);
    let report = classify(&g);
    let levels = security_levels(&g);
    let cell = |p: PureProfile| format!("{}:{}", g.payoff(Player::One, p), g.payoff(Player::Two, p));
    if fmt == OutFormat::Json {
        let rows: Vec<Value> = report
            .entries
            .iter()
            .map(|&(p, f)| {
                json!({
                    "profile": labels.json(p),
                    "payoffs": [g.payoff(Player::One, p).to_string(), g.payoff(Player::Two, p).to_string()],
                    "concepts": f.names(),
                })
            })
            .collect();
        return Ok(pretty(json!({
            "title": g.title(),
            "rows": g.rows(),
            "cols": g.cols(),
            "security_levels": [levels[0].to_string(), levels[1].to_string()],
            "profiles": rows,
        })));
    }
    let mut out = String::new();
    writeln!(out, "game {} ({}x{})", shown(g.title()), g.rows(), g.cols()).unwrap();
    writeln!(out, "security levels {} {}", levels[0], levels[1]).unwrap();
    let pw = report.entries.iter().map(|(p, _)| labels.text(*p).len()).max().unwrap_or(0).max("profile".len());
    let cw = report.entries.iter().map(|(p, _)| cell(*p).len()).max().unwrap_or(0).max("payoffs".len());
    let mut header = format!("{:<pw$}  {:<cw$}", "profile", "payoffs");
    for (_, name) in Concepts::COLUMNS {
        write!(header, "  {name}").unwrap();
    }
    writeln!(out, "{}", header.trim_end()).unwrap();
    for &(p, f) in &report.entries {
        let mut line = format!("{:<pw$}  {:<cw$}", labels.text(p), cell(p));
        for (flag, name) in Concepts::COLUMNS {
            let mark = if f.contains(flag) { "x" } else { "." };
            write!(line, "  {mark:<w$}", w = name.len()).unwrap();
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    Ok(out)
}

fn run_flatten(src: &Source, iterations: usize, coalitions: Coalitions, fmt: OutFormat) -> Outcome {
    match load(src)? {
        GameDocument::Bimatrix(g) => {
            let seq = iterate_flatten(&g, iterations).map_err(domain)?;
            if fmt == OutFormat::Json {
                let steps: Vec<Value> = seq
                    .steps
                    .iter()
                    .map(|s| serde_json::from_str(&emit_json(&s.flat)).expect("emitted json parses"))
                    .collect();
                return Ok(pretty(json!({
                    "title": g.title(),
                    "iterations": steps,
                    "fixed_point": seq.fixed_point,
                })));
            }
            let mut out = String::new();
            for (i, step) in seq.steps.iter().enumerate() {
                if seq.steps.len() > 1 {
                    writeln!(out, "# iteration {}", i + 1).unwrap();
                }
                out.push_str(&emit_matrix(&step.flat));
            }
            if let Some(i) = seq.fixed_point {
                writeln!(out, "# fixed point reached at iteration {i}").unwrap();
            }
            Ok(out)
        }
        GameDocument::Tensor(t) => {
            let mut current = t;
            for _ in 0..iterations.max(1) {
                current = flat_tensor_game_with(&current, rule(coalitions)).map_err(domain)?;
            }
            Ok(emit_tensor_json(&current))
        }
    }
}

fn run_me(src: &Source, coalitions: Coalitions, fmt: OutFormat) -> Outcome {
    let (title, profiles): (String, Vec<Vec<usize>>) = match load(src)? {
        GameDocument::Bimatrix(g) => {
            let me = m_equilibria(&g);
            let labels = Labels::of(src);
            (g.title().to_string(), me.into_iter().map(|p| labels.pair(p).to_vec()).collect())
        }
        GameDocument::Tensor(t) => tensor_me(&t, coalitions)?,
    };
    if fmt == OutFormat::Json {
        return Ok(pretty(json!({ "title": title, "m_equilibria": profiles })));
    }
    let mut out = format!("m-equilibria of {}: {}\n", shown(&title), profiles.len());
    for p in profiles {
        let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
        writeln!(out, "({})", parts.join(",")).unwrap();
    }
    Ok(out)
}

fn tensor_me(t: &TensorGame, coalitions: Coalitions) -> Result<(String, Vec<Vec<usize>>), Failure> {
    let me = m_equilibria_n_with(t, rule(coalitions)).map_err(domain)?;
    Ok((t.title().to_string(), me.into_iter().map(|p| p.0.iter().map(|s| s + 1).collect()).collect()))
}

fn run_mixed(src: &Source, max_support: usize, fmt: OutFormat) -> Outcome {
    let g = load_bimatrix(src)?;
    let found = mixed_equilibrium_candidates(&g, max_support).map_err(domain)?;
    let rows: Vec<(String, String, [String; 2])> = found
        .iter()
        .map(|mp| {
            let pay = Player::BOTH.map(|pl| expected_payoff(&g, mp, pl).expect("dimensions match").to_string());
            (mp.row.to_string(), mp.col.to_string(), pay)
        })
        .collect();
    if fmt == OutFormat::Json {
        let list: Vec<Value> = found
            .iter()
            .zip(&rows)
            .map(|(mp, r)| {
                json!({
                    "row": mp.row.weights().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "col": mp.col.weights().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "payoffs": r.2,
                })
            })
            .collect();
        return Ok(pretty(json!({ "title": g.title(), "max_support": max_support, "equilibria": list })));
    }
    let mut out = format!("mixed equilibria of {} (supports up to {max_support}): {}\n", shown(g.title()), rows.len());
    for (r, c, pay) in rows {
        writeln!(out, "{r} {c}  payoffs {}:{}", pay[0], pay[1]).unwrap();
    }
    Ok(out)
}

fn piece_json(p: &Piece) -> Value {
    match *p {
        Piece::Segment { from, to } => json!({"segment": [[from.0, from.1], [to.0, to.1]]}),
        Piece::Triangle { side } => json!({"triangle": side}),
        Piece::Point(q) => json!({"point": [q.0, q.1]}),
    }
}

fn piece_text(p: &Piece) -> String {
    let pt = |q: (f64, f64)| format!("({}, {})", sig12(q.0), sig12(q.1));
    match *p {
        Piece::Segment { from, to } => format!("segment {} -- {}", pt(from), pt(to)),
        Piece::Triangle { side } => format!("triangle x, y >= 0, x + y <= {}", sig12(side)),
        Piece::Point(q) => format!("point {}", pt(q)),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_duopoly(
    model: Model,
    l: f64,
    c: Option<f64>,
    xmax: Option<f64>,
    points: usize,
    lower: Option<f64>,
    check: bool,
    fmt: OutFormat,
) -> Outcome {
    let d = match model {
        Model::Cournot => Duopoly::cournot(l),
        Model::Puu => Duopoly::puu(l),
        Model::Dimcost => {
            let c = c.ok_or_else(|| Failure::Usage("--C is required for the dimcost model".into()))?;
            Duopoly::diminishing_cost(l, c, xmax)
        }
    }
    .map_err(domain)?;
    let region = analytic_me_set(&d);
    let mut json_out = json!({
        "model": d.to_string(),
        "analytic_me": region.pieces.iter().map(piece_json).collect::<Vec<_>>(),
    });
    let mut out = format!("model {d}\nanalytic m-equilibria:\n");
    for p in &region.pieces {
        writeln!(out, "  {}", piece_text(p)).unwrap();
    }
    if check {
        let grid = match lower {
            Some(lo) => GridSpec::new(lo, d.upper(), points),
            None => d.default_grid(points),
        }
        .map_err(domain)?;
        let cmp = verify_flat_closed_form(&d, &grid).map_err(domain)?;
        let me = grid_m_equilibria(&d, &grid).map_err(domain)?;
        let h = hausdorff(&me, &region.on_grid(&grid));
        writeln!(
            out,
            "grid {} points on [{}, {}], step {}",
            grid.points(),
            sig12(grid.lower()),
            sig12(grid.upper()),
            sig12(grid.step())
        )
        .unwrap();
        writeln!(
            out,
            "flat closed form: max deviation {}, budget at worst cell {}, within budget {}",
            sig12(cmp.max_deviation),
            sig12(cmp.budget_at_worst),
            if cmp.within_budget() { "yes" } else { "no" }
        )
        .unwrap();
        writeln!(out, "grid m-equilibria: {} nodes, Hausdorff distance to analytic set {}", me.len(), sig12(h)).unwrap();
        json_out["check"] = json!({
            "grid": {"lower": grid.lower(), "upper": grid.upper(), "points": grid.points(), "step": grid.step()},
            "max_deviation": cmp.max_deviation,
            "budget_at_worst": cmp.budget_at_worst,
            "within_budget": cmp.within_budget(),
            "grid_me_nodes": me.len(),
            "hausdorff": h,
        });
    }
    Ok(if fmt == OutFormat::Json { pretty(json_out) } else { out })
}

fn run_lstar(tol: f64, fmt: OutFormat) -> Outcome {
    let r = lstar(tol).map_err(domain)?;
    if fmt == OutFormat::Json {
        return Ok(pretty(json!({
            "lstar": r.root,
            "bracket": [r.bracket.0, r.bracket.1],
            "certified": r.certified(),
            "iterations": r.iterations,
        })));
    }
    Ok(format!(
        "L* = {}\nbracket [{}, {}] after {} bisections, sign change certified: {}\n",
        sig12(r.root),
        sig12(r.bracket.0),
        sig12(r.bracket.1),
        r.iterations,
        if r.certified() { "yes" } else { "no" }
    ))
}

fn run_select(src: &Source, seed: u64, fmt: OutFormat) -> Outcome {
    let g = load_bimatrix(src)?;
    let labels = Labels::of(src);
    let me: Vec<PureProfile> = m_equilibria(&g).into_iter().collect();
    let chosen = select_equilibrium(&me, seed).map_err(domain)?;
    if fmt == OutFormat::Json {
        return Ok(pretty(json!({
            "title": g.title(),
            "seed": seed,
            "m_equilibria": me.iter().map(|&p| labels.json(p)).collect::<Vec<_>>(),
            "selected": labels.json(chosen),
        })));
    }
    Ok(format!("{}\n", labels.text(chosen)))
}

fn run_builtin(name: Option<&str>, list: bool, lo: Option<i64>, hi: Option<i64>, fmt: OutFormat) -> Outcome {
    match (name, list) {
        (None, true) => Ok(if fmt == OutFormat::Json {
            pretty(json!(NAMES))
        } else {
            NAMES.iter().map(|n| format!("{n}\n")).collect()
        }),
        (Some(name), false) => {
            let g = builtin(name, traveler_params(name, lo, hi)?).map_err(domain)?;
            Ok(if fmt == OutFormat::Json { emit_json(&g) } else { emit_matrix(&g) })
        }
        _ => Err(Failure::Usage("give either --list or a game name".into())),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Classify(src) => run_classify(src, fmt),
        Command::Flatten { source, iterations, coalitions } => run_flatten(source, *iterations, *coalitions, fmt),
        Command::Me { source, coalitions } => run_me(source, *coalitions, fmt),
        Command::Mixed { source, max_support } => run_mixed(source, *max_support, fmt),
        Command::Duopoly { model, l, c, xmax, grid, lower, check } => {
            run_duopoly(*model, *l, *c, *xmax, *grid, *lower, *check, fmt)
        }
        Command::Lstar { tol } => run_lstar(*tol, fmt),
        Command::Select { source, seed } => run_select(source, *seed, fmt),
        Command::Builtin { name, list, lo, hi } => run_builtin(name.as_deref(), *list, *lo, *hi, fmt),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
