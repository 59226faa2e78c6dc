//! Not-worse responses, lower payoffs and the flat game.
//!
//! The not-worse responses of a player at a profile are the strategies that
//! pay that player at least the status quo against the co-player's current
//! strategy. A player's lower payoff at a profile is the worst payoff they
//! can receive while keeping their own strategy, when the co-player may move
//! to any of the co-player's not-worse responses. Replacing both payoffs by
//! lower payoffs gives the flat game; its Nash equilibria are the
//! m-equilibria of the original game.
//!
//! For finite games the infimum is a minimum over a non-empty set (the
//! status-quo strategy is always a not-worse response), so lower payoffs are
//! exact rationals drawn from the original payoff matrix.

use thiserror::Error;

use crate::equilibrium::{self, strategy_minima, ProfileSet};
use crate::game::{FiniteGame, Player, PureProfile};
use crate::ordinal::OrdinalGame;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlattenError {
    #[error("iteration count must be at least 1")]
    ZeroIterations,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// Strategies of `player` that pay `player` at least `P_player(p)` against
/// the co-player's strategy in `p`.
pub fn not_worse_responses(g: &FiniteGame, player: Player, p: PureProfile) -> Vec<usize> {
    let status_quo = g.payoff(player, p);
    (0..g.strategies(player)).filter(|&s| g.payoff(player, p.with(player, s)) >= status_quo).collect()
}

/// Minimum of `P_player` over the co-player's not-worse responses at `p`,
/// with `player`'s own strategy held fixed.
pub fn lower_payoff(g: &FiniteGame, player: Player, p: PureProfile) -> Rational {
    let co = player.other();
    not_worse_responses(g, co, p)
        .into_iter()
        .map(|s| g.payoff(player, p.with(co, s)))
        .min()
        .expect("status quo is always a not-worse response")
        .clone()
}

/// The flat game together with the response sets it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatGameResult {
    pub flat: FiniteGame,
    pub source: FiniteGame,
    /// 1 for the first flat, 2 for the flat of the flat, and so on.
    pub iteration: usize,
    /// `responses[i][cell]`: not-worse responses of player `i + 1` at the
    /// row-major profile `cell` of `source`.
    responses: [Vec<Vec<usize>>; 2],
}

impl FlatGameResult {
    pub fn not_worse_responses(&self, player: Player, p: PureProfile) -> &[usize] {
        &self.responses[player.index()][p.row * self.source.cols() + p.col]
    }

    pub fn lower_payoff(&self, player: Player, p: PureProfile) -> &Rational {
        self.flat.payoff(player, p)
    }

    pub fn is_fixed_point(&self) -> bool {
        self.flat.payoff_vec(Player::One) == self.source.payoff_vec(Player::One)
            && self.flat.payoff_vec(Player::Two) == self.source.payoff_vec(Player::Two)
    }

    pub fn m_equilibria(&self) -> ProfileSet {
        equilibrium::nash_equilibria(&self.flat)
    }
}

/// Sorted-sweep computation of one player's lower payoffs along one line of
/// the game (a row for player 1, a column for player 2).
///
/// `own[k]` and `co[k]` are ranks of the player and the co-player at the k-th
/// co-player strategy. Returns, for every k, the min of `own` over indices
/// whose `co` rank is at least `co[k]`, and those indices.
fn sweep_line(own: &[u32], co: &[u32]) -> (Vec<u32>, Vec<Vec<usize>>) {
    let mut order: Vec<usize> = (0..co.len()).collect();
    order.sort_by(|&a, &b| co[b].cmp(&co[a]));
    let mut lower = vec![0u32; co.len()];
    let mut responses = vec![Vec::new(); co.len()];
    let mut running = u32::MAX;
    let mut i = 0;
    while i < order.len() {
        let level = co[order[i]];
        let mut j = i;
        while j < order.len() && co[order[j]] == level {
            running = running.min(own[order[j]]);
            j += 1;
        }
        let mut set: Vec<usize> = order[..j].to_vec();
        set.sort_unstable();
        for &k in &order[i..j] {
            lower[k] = running;
            responses[k] = set.clone();
        }
        i = j;
    }
    (lower, responses)
}

pub fn flat_game(g: &FiniteGame) -> FlatGameResult {
    flat_game_iteration(g, 1)
}

fn flat_game_iteration(g: &FiniteGame, iteration: usize) -> FlatGameResult {
    let o = OrdinalGame::new(g);
    let (rows, cols) = (g.rows(), g.cols());
    let r1 = &o.players[0].ranks;
    let r2 = &o.players[1].ranks;
    let mut flat1 = vec![0u32; rows * cols];
    let mut flat2 = vec![0u32; rows * cols];
    let mut resp1 = vec![Vec::new(); rows * cols];
    let mut resp2 = vec![Vec::new(); rows * cols];

    // Player 1 keeps the row; player 2 roams the row among its not-worse columns.
    for r in 0..rows {
        let own = &r1[r * cols..(r + 1) * cols];
        let co = &r2[r * cols..(r + 1) * cols];
        let (lower, responses) = sweep_line(own, co);
        for (c, (l, s)) in lower.into_iter().zip(responses).enumerate() {
            flat1[r * cols + c] = l;
            resp2[r * cols + c] = s;
        }
    }
    for c in 0..cols {
        let own: Vec<u32> = (0..rows).map(|r| r2[r * cols + c]).collect();
        let co: Vec<u32> = (0..rows).map(|r| r1[r * cols + c]).collect();
        let (lower, responses) = sweep_line(&own, &co);
        for (r, (l, s)) in lower.into_iter().zip(responses).enumerate() {
            flat2[r * cols + c] = l;
            resp1[r * cols + c] = s;
        }
    }
    let values = |pl: usize, ranks: Vec<u32>| -> Vec<Rational> {
        ranks.into_iter().map(|k| o.players[pl].values[k as usize].clone()).collect()
    };
    let flat = FiniteGame::from_parts(format!("flat({})", g.title()), rows, cols, values(0, flat1), values(1, flat2));
    FlatGameResult { flat, source: g.clone(), iteration, responses: [resp1, resp2] }
}

/// Nash equilibria of the flat game.
pub fn m_equilibria(g: &FiniteGame) -> ProfileSet {
    flat_game(g).m_equilibria()
}

/// Successive flats of `g`, stopping early once a flat equals its source.
#[derive(Debug, Clone)]
pub struct FlattenSequence {
    pub steps: Vec<FlatGameResult>,
    /// One-based iteration at which the flat first equalled its source.
    pub fixed_point: Option<usize>,
}

impl FlattenSequence {
    pub fn last(&self) -> &FlatGameResult {
        self.steps.last().expect("at least one step")
    }
}

pub fn iterate_flatten(g: &FiniteGame, k: usize) -> Result<FlattenSequence, FlattenError> {
    if k == 0 {
        return Err(FlattenError::ZeroIterations);
    }
    let mut steps: Vec<FlatGameResult> = Vec::with_capacity(k);
    let mut fixed_point = None;
    for i in 1..=k {
        let source = steps.last().map_or(g, |s| &s.flat);
        let step = flat_game_iteration(source, i);
        let fixed = step.is_fixed_point();
        steps.push(step);
        if fixed {
            fixed_point = Some(i);
            break;
        }
    }
    Ok(FlattenSequence { steps, fixed_point })
}

/// Max-min value of a player under the original and under the lower payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerValues {
    pub payoff: [Rational; 2],
    pub flat: [Rational; 2],
}

impl LowerValues {
    pub fn coincide(&self) -> bool {
        self.payoff == self.flat
    }
}

pub fn lower_values(g: &FiniteGame) -> LowerValues {
    let flat = flat_game(g).flat;
    LowerValues { payoff: equilibrium::security_levels(g), flat: equilibrium::security_levels(&flat) }
}

/// In a strictly competitive game a player's lower payoff depends only on
/// their own strategy: it is that strategy's worst-case payoff. Returns
/// whether this holds cell by cell.
pub fn competitive_flat_check(g: &FiniteGame) -> Result<bool, FlattenError> {
    if !g.is_strictly_competitive() {
        return Err(FlattenError::PreconditionFailed("game is not strictly competitive".into()));
    }
    let flat = flat_game(g).flat;
    let minima = Player::BOTH.map(|pl| strategy_minima(g, pl));
    Ok(g.profiles().all(|p| {
        Player::BOTH.iter().all(|&pl| flat.payoff(pl, p) == &minima[pl.index()][p.strategy(pl)])
    }))
}
