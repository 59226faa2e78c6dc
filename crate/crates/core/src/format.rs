//! Reading and writing games.
//!
//! JSON bimatrix:
//! `{"title": "...", "payoffs": [[["p1","p2"], ...], ...]}`
//!
//! JSON tensor (N players, profiles row-major, last player fastest):
//! `{"title": "...", "strategies": [2,2,2], "payoffs": [["p1","p2","p3"], ...]}`
//!
//! Matrix text, one row per line with `p1:p2` cells:
//!
//! ```text
//! # comment
//! title hide-a-coin
//! rows 2 cols 2
//! 1:-1  -1:1
//! -1:1  1:-1
//! ```
//!
//! Cells are exact rationals (`p`, `p/q` or a decimal). Unreduced fractions
//! are normalized; a zero denominator is rejected.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::game::{FiniteGame, GameError, Player, PureProfile};
use crate::multiplayer::{MultiError, TensorGame};
use crate::rational::{Rational, RationalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("bad rational {text:?} at {location}: zero denominator")]
    BadRational { location: String, text: String },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Multi(#[from] MultiError),
    #[error("unknown format {0:?} (expected json or matrix)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Matrix,
}

impl FromStr for Format {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "json" => Ok(Self::Json),
            "matrix" => Ok(Self::Matrix),
            _ => Err(FormatError::UnknownFormat(s.to_string())),
        }
    }
}

impl Format {
    /// `.json` files are JSON, everything else is matrix text.
    pub fn from_path(path: &str) -> Self {
        if path.to_ascii_lowercase().ends_with(".json") {
            Self::Json
        } else {
            Self::Matrix
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameDocument {
    Bimatrix(FiniteGame),
    Tensor(TensorGame),
}

pub fn parse_game(input: &str, format: Format) -> Result<GameDocument, FormatError> {
    match format {
        Format::Json => parse_json(input),
        Format::Matrix => parse_matrix(input).map(GameDocument::Bimatrix),
    }
}

/// Parses a two-player game; tensor documents with two players are accepted.
pub fn parse_bimatrix(input: &str, format: Format) -> Result<FiniteGame, FormatError> {
    match parse_game(input, format)? {
        GameDocument::Bimatrix(g) => Ok(g),
        GameDocument::Tensor(t) if t.players() == 2 => {
            let (rows, cols) = (t.counts()[0], t.counts()[1]);
            let p1 = t.payoff_tensor(0).to_vec();
            let p2 = t.payoff_tensor(1).to_vec();
            Ok(FiniteGame::from_parts(t.title().to_string(), rows, cols, p1, p2))
        }
        GameDocument::Tensor(t) => Err(FormatError::Parse {
            line: 1,
            column: 1,
            message: format!("expected a two-player game, found {} players", t.players()),
        }),
    }
}

fn parse_cell(text: &str, location: impl FnOnce() -> (String, usize, usize)) -> Result<Rational, FormatError> {
    text.parse::<Rational>().map_err(|e| {
        let (loc, line, column) = location();
        match e {
            RationalError::ZeroDenominator(_) => FormatError::BadRational { location: loc, text: text.to_string() },
            other => FormatError::Parse { line, column, message: other.to_string() },
        }
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonCell {
    Text(String),
    Int(i64),
}

impl JsonCell {
    fn text(&self) -> String {
        match self {
            JsonCell::Text(s) => s.clone(),
            JsonCell::Int(v) => v.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BimatrixDoc {
    #[serde(default)]
    title: String,
    payoffs: Vec<Vec<[JsonCell; 2]>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorDoc {
    #[serde(default)]
    title: String,
    strategies: Vec<usize>,
    payoffs: Vec<Vec<JsonCell>>,
}

fn json_error(e: serde_json::Error) -> FormatError {
    FormatError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Errors found after the syntax check have no byte position; they are
/// reported at the JSON path instead.
fn json_semantic(path: String) -> impl FnOnce() -> (String, usize, usize) {
    move || (path, 1, 1)
}

fn parse_json(input: &str) -> Result<GameDocument, FormatError> {
    let value: Value = serde_json::from_str(input).map_err(json_error)?;
    let is_tensor = value.get("strategies").is_some();
    if is_tensor {
        let doc: TensorDoc = serde_json::from_str(input).map_err(json_error)?;
        let n = doc.strategies.len();
        let size: usize = doc.strategies.iter().product();
        if doc.payoffs.len() != size {
            return Err(MultiError::ShapeMismatch(format!("{} payoff vectors for {size} profiles", doc.payoffs.len())).into());
        }
        let mut tensors = vec![Vec::with_capacity(size); n];
        for (k, cell) in doc.payoffs.iter().enumerate() {
            if cell.len() != n {
                return Err(MultiError::ShapeMismatch(format!("payoffs[{k}] has {} entries for {n} players", cell.len())).into());
            }
            for (i, v) in cell.iter().enumerate() {
                tensors[i].push(parse_cell(&v.text(), json_semantic(format!("payoffs[{k}][{i}]")))?);
            }
        }
        Ok(GameDocument::Tensor(TensorGame::new(&doc.title, doc.strategies, tensors)?))
    } else {
        let doc: BimatrixDoc = serde_json::from_str(input).map_err(json_error)?;
        let mut p1 = Vec::new();
        let mut p2 = Vec::new();
        for (r, row) in doc.payoffs.iter().enumerate() {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (c, [x, y]) in row.iter().enumerate() {
                a.push(parse_cell(&x.text(), json_semantic(format!("payoffs[{r}][{c}][0]")))?);
                b.push(parse_cell(&y.text(), json_semantic(format!("payoffs[{r}][{c}][1]")))?);
            }
            p1.push(a);
            p2.push(b);
        }
        Ok(GameDocument::Bimatrix(FiniteGame::new(p1, p2, &doc.title)?))
    }
}

/// Columns are one-based character positions.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(b, t)| (line[..b].chars().count() + 1, t)).collect()
}

fn parse_matrix(input: &str) -> Result<FiniteGame, FormatError> {
    let err = |line: usize, column: usize, message: String| FormatError::Parse { line, column, message };
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let mut title = String::new();
    let mut header = lines.next();
    if let Some((_, l)) = header {
        let trimmed = l.trim_start();
        if trimmed == "title" || trimmed.starts_with("title ") || trimmed.starts_with("title\t") {
            title = trimmed["title".len()..].trim().to_string();
            header = lines.next();
        }
    }
    let (hline, htext) = header.ok_or_else(|| err(1, 1, "missing header \"rows m cols n\"".into()))?;
    let toks = tokens(htext);
    let shape = match toks.as_slice() {
        [(_, "rows"), (c1, m), (_, "cols"), (c2, n)] => {
            let m: usize = m.parse().map_err(|_| err(hline, *c1, format!("bad row count {m:?}")))?;
            let n: usize = n.parse().map_err(|_| err(hline, *c2, format!("bad column count {n:?}")))?;
            (m, n)
        }
        _ => return Err(err(hline, 1, "expected header \"rows m cols n\"".into())),
    };
    let (m, n) = shape;
    if m == 0 || n == 0 {
        return Err(GameError::EmptyGame.into());
    }
    let mut p1 = Vec::with_capacity(m);
    let mut p2 = Vec::with_capacity(m);
    for r in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| err(hline, 1, format!("expected {m} payoff rows, found {r}")))?;
        let cells = tokens(text);
        if cells.len() != n {
            return Err(err(line, 1, format!("expected {n} cells, found {}", cells.len())));
        }
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for (col, cell) in cells {
            let (x, y) = cell
                .split_once(':')
                .ok_or_else(|| err(line, col, format!("cell {cell:?} is not of the form p1:p2")))?;
            let at = || (format!("line {line}, column {col}"), line, col);
            a.push(parse_cell(x, at)?);
            b.push(parse_cell(y, at)?);
        }
        p1.push(a);
        p2.push(b);
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, 1, format!("unexpected content after {m} payoff rows")));
    }
    Ok(FiniteGame::new(p1, p2, &title)?)
}

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

pub fn emit_json(g: &FiniteGame) -> String {
    let mut out = String::new();
    writeln!(out, "{{\n  \"title\": {},\n  \"payoffs\": [", quoted(g.title())).unwrap();
    for r in 0..g.rows() {
        let cells: Vec<String> = (0..g.cols())
            .map(|c| {
                let p = PureProfile::new(r, c);
                format!("[{}, {}]", quoted(&g.payoff(Player::One, p).to_string()), quoted(&g.payoff(Player::Two, p).to_string()))
            })
            .collect();
        let sep = if r + 1 < g.rows() { "," } else { "" };
        writeln!(out, "    [{}]{sep}", cells.join(", ")).unwrap();
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn emit_tensor_json(g: &TensorGame) -> String {
    let mut out = String::new();
    let counts: Vec<String> = g.counts().iter().map(ToString::to_string).collect();
    writeln!(out, "{{\n  \"title\": {},\n  \"strategies\": [{}],\n  \"payoffs\": [", quoted(g.title()), counts.join(", ")).unwrap();
    let total = g.profile_count();
    for (k, p) in g.profiles().enumerate() {
        let vals: Vec<String> = (0..g.players()).map(|i| quoted(&g.payoff(i, &p).to_string())).collect();
        let sep = if k + 1 < total { "," } else { "" };
        writeln!(out, "    [{}]{sep}", vals.join(", ")).unwrap();
    }
    out.push_str("  ]\n}\n");
    out
}

/// Matrix text with cells padded to a common width per column.
pub fn emit_matrix(g: &FiniteGame) -> String {
    let mut out = String::new();
    if !g.title().trim().is_empty() {
        writeln!(out, "title {}", g.title().trim()).unwrap();
    }
    writeln!(out, "rows {} cols {}", g.rows(), g.cols()).unwrap();
    let cell = |r: usize, c: usize| {
        let p = PureProfile::new(r, c);
        format!("{}:{}", g.payoff(Player::One, p), g.payoff(Player::Two, p))
    };
    let widths: Vec<usize> = (0..g.cols()).map(|c| (0..g.rows()).map(|r| cell(r, c).len()).max().unwrap_or(0)).collect();
    for r in 0..g.rows() {
        let cells: Vec<String> = (0..g.cols()).map(|c| format!("{:<w$}", cell(r, c), w = widths[c])).collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    out
}
