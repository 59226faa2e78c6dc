//! Browser bindings. Every export takes plain values and returns a JSON
//! string, so the page needs no glue beyond `JSON.parse`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use flatgame::continuous::{
    analytic_flat_payoff, analytic_me_set, grid_m_equilibria, lstar, verify_me_membership, Duopoly,
};
use flatgame::format::{parse_bimatrix, Format};
use flatgame::{classify, flat_game, Player, PureProfile};

/// Largest heatmap side; the exact grid oracle is quadratic in cells.
pub const MAX_HEATMAP_POINTS: usize = 81;

fn fail(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn pair(p: PureProfile) -> Value {
    json!([p.row + 1, p.col + 1])
}

fn model(name: &str, l: f64, c: f64) -> Result<Duopoly, String> {
    match name {
        "cournot" => Duopoly::cournot(l),
        "puu" => Duopoly::puu(l),
        "dimcost" => Duopoly::diminishing_cost(l, c, None),
        other => return Err(format!("unknown model `{other}`")),
    }
    .map_err(|e| e.to_string())
}

/// Classify every profile of a game given as matrix text or JSON, and
/// attach the flat game.
pub fn analyze_json(text: &str) -> Result<String, String> {
    let format = if text.trim_start().starts_with('{') { Format::Json } else { Format::Matrix };
    let g = parse_bimatrix(text, format).map_err(|e| e.to_string())?;
    let report = classify(&g);
    let flat = flat_game(&g).flat;
    let profiles: Vec<Value> = report
        .entries
        .iter()
        .map(|&(p, f)| {
            json!({
                "profile": pair(p),
                "payoffs": [g.payoff(Player::One, p).to_string(), g.payoff(Player::Two, p).to_string()],
                "flat": [flat.payoff(Player::One, p).to_string(), flat.payoff(Player::Two, p).to_string()],
                "concepts": f.names(),
            })
        })
        .collect();
    Ok(json!({ "title": g.title(), "rows": g.rows(), "cols": g.cols(), "profiles": profiles }).to_string())
}

/// Player one's flat payoff on a square grid, with the closed-form
/// m-equilibrium set and the m-equilibria of the discretized game.
pub fn duopoly_heatmap_json(name: &str, l: f64, c: f64, points: usize) -> Result<String, String> {
    if !(2..=MAX_HEATMAP_POINTS).contains(&points) {
        return Err(format!("grid must have between 2 and {MAX_HEATMAP_POINTS} points per axis"));
    }
    let d = model(name, l, c)?;
    let grid = d.default_grid(points).map_err(|e| e.to_string())?;
    let nodes = grid.nodes();
    let mut flat = Vec::with_capacity(points);
    for &x in &nodes {
        let row: Result<Vec<f64>, _> =
            nodes.iter().map(|&y| analytic_flat_payoff(&d, x, y, Player::One)).collect();
        flat.push(row.map_err(|e| e.to_string())?);
    }
    let region = analytic_me_set(&d);
    let analytic: Vec<Vec<bool>> = nodes
        .iter()
        .map(|&x| nodes.iter().map(|&y| region.contains((x, y), grid.step() / 2.0)).collect())
        .collect();
    let discrete = grid_m_equilibria(&d, &grid).map_err(|e| e.to_string())?;
    Ok(json!({
        "model": d.to_string(),
        "nodes": nodes,
        "flat": flat,
        "analytic_me": analytic,
        "grid_me": discrete.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
    })
    .to_string())
}

/// The Puu threshold, plus a membership check of one point.
pub fn puu_probe_json(l: f64, x: f64, y: f64, tol: f64) -> Result<String, String> {
    let root = lstar(tol).map_err(|e| e.to_string())?;
    let d = Duopoly::puu(l).map_err(|e| e.to_string())?;
    let member = verify_me_membership(&d, (x, y), 2001, 1e-9).map_err(|e| e.to_string())?;
    let closed_form = analytic_me_set(&d).contains((x, y), 1e-9);
    Ok(json!({
        "lstar": root.root,
        "bracket": [root.bracket.0, root.bracket.1],
        "certified": root.certified(),
        "point": [x, y],
        "sampled_me": member,
        "closed_form_me": closed_form,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_json(text).map_err(fail)
}

#[wasm_bindgen]
pub fn duopoly_heatmap(model: &str, l: f64, c: f64, points: usize) -> Result<String, JsError> {
    duopoly_heatmap_json(model, l, c, points).map_err(fail)
}

#[wasm_bindgen]
pub fn puu_probe(l: f64, x: f64, y: f64, tol: f64) -> Result<String, JsError> {
    puu_probe_json(l, x, y, tol).map_err(fail)
}

