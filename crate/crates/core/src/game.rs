//! The finite two-player game container and its structural predicates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("payoff matrices differ in shape: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("game has no strategies for some player")]
    EmptyGame,
    #[error("row {row} has {len} cells, expected {expected}")]
    RaggedRow { row: usize, len: usize, expected: usize },
    #[error("unknown builtin game `{0}`")]
    UnknownBuiltin(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("transform table for player {player} is not order preserving at {at}")]
    NotOrderPreserving { player: u8, at: Rational },
    #[error("transform table for player {player} has no image for {value}")]
    MissingValue { player: u8, value: Rational },
    #[error("profile {0} is out of range")]
    ProfileOutOfRange(PureProfile),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::One, Player::Two];

    pub fn index(self) -> usize {
        match self {
            Player::One => 0,
            Player::Two => 1,
        }
    }

    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<Player> {
        match n {
            1 => Some(Player::One),
            2 => Some(Player::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "player {}", self.number())
    }
}

/// A pair of pure strategy indices, zero-based. Ordering is row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PureProfile {
    pub row: usize,
    pub col: usize,
}

impl PureProfile {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// The strategy index `player` uses in this profile.
    pub fn strategy(self, player: Player) -> usize {
        match player {
            Player::One => self.row,
            Player::Two => self.col,
        }
    }

    /// Replaces `player`'s strategy, keeping the co-player's.
    pub fn with(self, player: Player, strategy: usize) -> Self {
        match player {
            Player::One => Self { row: strategy, col: self.col },
            Player::Two => Self { row: self.row, col: strategy },
        }
    }

    pub fn transposed(self) -> Self {
        Self { row: self.col, col: self.row }
    }
}

/// Printed one-based, matching the usual bimatrix notation.
impl fmt::Display for PureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row + 1, self.col + 1)
    }
}

/// A finite bimatrix game with exact payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGame {
    title: String,
    rows: usize,
    cols: usize,
    payoffs: [Vec<Rational>; 2],
}

/// Lookup table standing in for a strictly increasing payoff transform.
pub type ValueTable = BTreeMap<Rational, Rational>;

impl FiniteGame {
    /// Validates two `rows x cols` matrices and builds the game.
    pub fn new(
        payoff1: Vec<Vec<Rational>>,
        payoff2: Vec<Vec<Rational>>,
        title: impl Into<String>,
    ) -> Result<Self, GameError> {
        let rows = payoff1.len();
        let cols = payoff1.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(GameError::EmptyGame);
        }
        let rows2 = payoff2.len();
        let cols2 = payoff2.first().map_or(0, Vec::len);
        if rows2 != rows || cols2 != cols {
            return Err(GameError::ShapeMismatch(rows, cols, rows2, cols2));
        }
        for m in [&payoff1, &payoff2] {
            for (row, r) in m.iter().enumerate() {
                if r.len() != cols {
                    return Err(GameError::RaggedRow { row, len: r.len(), expected: cols });
                }
            }
        }
        let flatten = |m: Vec<Vec<Rational>>| m.into_iter().flatten().collect::<Vec<_>>();
        Ok(Self { title: title.into(), rows, cols, payoffs: [flatten(payoff1), flatten(payoff2)] })
    }

    /// Builds a game from integer matrices; used heavily by fixtures.
    pub fn from_integers(payoff1: &[Vec<i64>], payoff2: &[Vec<i64>], title: &str) -> Result<Self, GameError> {
        let conv = |m: &[Vec<i64>]| {
            m.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect()
        };
        Self::new(conv(payoff1), conv(payoff2), title)
    }

    /// Builds a game from a row-major generator of payoff pairs.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        title: impl Into<String>,
        mut f: impl FnMut(usize, usize) -> (Rational, Rational),
    ) -> Result<Self, GameError> {
        if rows == 0 || cols == 0 {
            return Err(GameError::EmptyGame);
        }
        let mut p1 = Vec::with_capacity(rows * cols);
        let mut p2 = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let (a, b) = f(r, c);
                p1.push(a);
                p2.push(b);
            }
        }
        Ok(Self { title: title.into(), rows, cols, payoffs: [p1, p2] })
    }

    /// Builds a game from row-major payoff vectors of length `rows * cols`.
    pub(crate) fn from_parts(title: String, rows: usize, cols: usize, p1: Vec<Rational>, p2: Vec<Rational>) -> Self {
        debug_assert_eq!(p1.len(), rows * cols);
        debug_assert_eq!(p2.len(), rows * cols);
        Self { title, rows, cols, payoffs: [p1, p2] }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn with_title(mut self, title: impl Into<String>) -> Self {
        self.title = title.into();
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of pure strategies of `player`.
    pub fn strategies(&self, player: Player) -> usize {
        match player {
            Player::One => self.rows,
            Player::Two => self.cols,
        }
    }

    pub fn contains(&self, p: PureProfile) -> bool {
        p.row < self.rows && p.col < self.cols
    }

    pub fn check_profile(&self, p: PureProfile) -> Result<(), GameError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(GameError::ProfileOutOfRange(p))
        }
    }

    pub fn payoff(&self, player: Player, p: PureProfile) -> &Rational {
        &self.payoffs[player.index()][p.row * self.cols + p.col]
    }

    /// Row-major payoff vector of `player`.
    pub fn payoff_vec(&self, player: Player) -> &[Rational] {
        &self.payoffs[player.index()]
    }

    pub fn payoff_matrix(&self, player: Player) -> Vec<Vec<Rational>> {
        self.payoffs[player.index()].chunks(self.cols).map(<[Rational]>::to_vec).collect()
    }

    /// All profiles in row-major order.
    pub fn profiles(&self) -> impl Iterator<Item = PureProfile> + '_ {
        (0..self.rows).flat_map(move |r| (0..self.cols).map(move |c| PureProfile::new(r, c)))
    }

    pub fn profile_count(&self) -> usize {
        self.rows * self.cols
    }

    /// Swaps the roles of the players: the new row player is the old column player.
    pub fn transpose(&self) -> FiniteGame {
        let mut p1 = Vec::with_capacity(self.profile_count());
        let mut p2 = Vec::with_capacity(self.profile_count());
        for c in 0..self.cols {
            for r in 0..self.rows {
                let p = PureProfile::new(r, c);
                p1.push(self.payoff(Player::Two, p).clone());
                p2.push(self.payoff(Player::One, p).clone());
            }
        }
        FiniteGame::from_parts(self.title.clone(), self.cols, self.rows, p1, p2)
    }

    /// Relabels strategies: new row `i` is old row `row_perm[i]`, likewise columns.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> FiniteGame {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut p1 = Vec::with_capacity(self.profile_count());
        let mut p2 = Vec::with_capacity(self.profile_count());
        for &r in row_perm {
            for &c in col_perm {
                let p = PureProfile::new(r, c);
                p1.push(self.payoff(Player::One, p).clone());
                p2.push(self.payoff(Player::Two, p).clone());
            }
        }
        FiniteGame::from_parts(self.title.clone(), self.rows, self.cols, p1, p2)
    }

    pub fn is_constant(&self) -> bool {
        self.payoffs.iter().all(|v| v.iter().all(|x| x == &v[0]))
    }

    pub fn is_zero_sum(&self) -> bool {
        self.payoffs[0].iter().zip(&self.payoffs[1]).all(|(a, b)| (a + b).is_zero())
    }

    /// True iff for every pair of profiles player 1's payoff strictly rises
    /// exactly when player 2's strictly falls.
    ///
    /// Equivalent to: the payoff signs of any two profiles move in opposite
    /// directions, so sorting profiles by player 1's payoff must list player 2's
    /// payoff constant within ties and strictly decreasing across them.
    pub fn is_strictly_competitive(&self) -> bool {
        let mut idx: Vec<usize> = (0..self.profile_count()).collect();
        let (u, v) = (&self.payoffs[0], &self.payoffs[1]);
        idx.sort_by(|&a, &b| u[a].cmp(&u[b]));
        idx.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            if u[a] == u[b] {
                v[a] == v[b]
            } else {
                v[b] < v[a]
            }
        })
    }

    /// `payoff1[x][y] == payoff2[y][x]` on a square game.
    pub fn is_quantitatively_symmetric(&self) -> bool {
        self.rows == self.cols
            && self.profiles().all(|p| self.payoff(Player::One, p) == self.payoff(Player::Two, p.transposed()))
    }

    /// Distinct payoff values of `player`, ascending.
    pub fn payoff_values(&self, player: Player) -> Vec<Rational> {
        let mut v = self.payoffs[player.index()].clone();
        v.sort();
        v.dedup();
        v
    }

    /// Composes each player's payoff with a finite strictly increasing table.
    pub fn apply_monotone_transform(&self, t1: &ValueTable, t2: &ValueTable) -> Result<FiniteGame, GameError> {
        let mut out = [Vec::new(), Vec::new()];
        for (player, table) in Player::BOTH.into_iter().zip([t1, t2]) {
            check_order_preserving(player, table)?;
            out[player.index()] = self.payoffs[player.index()]
                .iter()
                .map(|v| {
                    table
                        .get(v)
                        .cloned()
                        .ok_or_else(|| GameError::MissingValue { player: player.number(), value: v.clone() })
                })
                .collect::<Result<_, _>>()?;
        }
        let [p1, p2] = out;
        Ok(FiniteGame::from_parts(self.title.clone(), self.rows, self.cols, p1, p2))
    }
}

fn check_order_preserving(player: Player, table: &ValueTable) -> Result<(), GameError> {
    // BTreeMap iterates keys ascending, so consecutive images must ascend.
    let entries: Vec<_> = table.iter().collect();
    for w in entries.windows(2) {
        if w[1].1 <= w[0].1 {
            return Err(GameError::NotOrderPreserving { player: player.number(), at: w[1].0.clone() });
        }
    }
    Ok(())
}
