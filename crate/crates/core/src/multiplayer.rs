//! N-player games with coalition-based lower payoffs.
//!
//! The lower payoff of player `i` at `p` is the worst `P_i` over profiles
//! reachable by a virtual coalition `J` of deviators who each weakly improve
//! on their payoff at `p`. A profile `q` is reachable iff every player whose
//! strategy differs from `p` is allowed into coalitions and weakly improves;
//! admitting non-deviating members only adds constraints.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::game::{FiniteGame, Player, PureProfile};
use crate::rational::Rational;

/// Most players handled by exhaustive enumeration.
pub const MAX_PLAYERS: usize = 4;
/// Largest profile space handled by exhaustive enumeration.
pub const MAX_PROFILES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiError {
    #[error("game with {players} players and {profiles} profiles exceeds the enumeration budget")]
    BudgetExceeded { players: usize, profiles: usize },
    #[error("need at least two players, got {0}")]
    TooFewPlayers(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("profile {0} is out of range")]
    ProfileOutOfRange(TensorProfile),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorProfile(pub Vec<usize>);

impl fmt::Display for TensorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| (s + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<PureProfile> for TensorProfile {
    fn from(p: PureProfile) -> Self {
        Self(vec![p.row, p.col])
    }
}

/// Which players may join the deviating coalition when evaluating player `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoalitionRule {
    /// Any subset of the other players.
    #[default]
    Others,
    /// Any subset of all players, `i` included.
    All,
    /// At most one other player.
    Singletons,
}

/// Payoff tensors stored row-major with the last player's index fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorGame {
    title: String,
    counts: Vec<usize>,
    payoffs: Vec<Vec<Rational>>,
}

impl TensorGame {
    pub fn new(title: &str, counts: Vec<usize>, payoffs: Vec<Vec<Rational>>) -> Result<Self, MultiError> {
        if counts.len() < 2 {
            return Err(MultiError::TooFewPlayers(counts.len()));
        }
        if counts.contains(&0) {
            return Err(MultiError::ShapeMismatch(format!("empty strategy set in {counts:?}")));
        }
        if payoffs.len() != counts.len() {
            return Err(MultiError::ShapeMismatch(format!("{} players but {} payoff tensors", counts.len(), payoffs.len())));
        }
        let size: usize = counts.iter().product();
        if let Some((i, t)) = payoffs.iter().enumerate().find(|(_, t)| t.len() != size) {
            return Err(MultiError::ShapeMismatch(format!("tensor {} has {} cells, expected {size}", i + 1, t.len())));
        }
        Ok(Self { title: title.to_string(), counts, payoffs })
    }

    /// `f` returns one payoff per player for each profile.
    pub fn from_fn(
        title: &str,
        counts: Vec<usize>,
        mut f: impl FnMut(&[usize]) -> Vec<Rational>,
    ) -> Result<Self, MultiError> {
        let n = counts.len();
        let mut payoffs = vec![Vec::new(); n];
        for p in Profiles::new(&counts) {
            let v = f(&p);
            if v.len() != n {
                return Err(MultiError::ShapeMismatch(format!("payoff vector of length {} for {n} players", v.len())));
            }
            for (t, x) in payoffs.iter_mut().zip(v) {
                t.push(x);
            }
        }
        Self::new(title, counts, payoffs)
    }

    pub fn from_finite(g: &FiniteGame) -> Self {
        Self {
            title: g.title().to_string(),
            counts: vec![g.rows(), g.cols()],
            payoffs: Player::BOTH.iter().map(|&pl| g.payoff_vec(pl).to_vec()).collect(),
        }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn players(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn profile_count(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn profiles(&self) -> impl Iterator<Item = TensorProfile> + '_ {
        Profiles::new(&self.counts).map(TensorProfile)
    }

    fn index(&self, p: &[usize]) -> usize {
        p.iter().zip(&self.counts).fold(0, |acc, (&s, &n)| acc * n + s)
    }

    pub fn check_profile(&self, p: &TensorProfile) -> Result<(), MultiError> {
        if p.0.len() == self.counts.len() && p.0.iter().zip(&self.counts).all(|(&s, &n)| s < n) {
            Ok(())
        } else {
            Err(MultiError::ProfileOutOfRange(p.clone()))
        }
    }

    pub fn payoff(&self, player: usize, p: &TensorProfile) -> &Rational {
        &self.payoffs[player][self.index(&p.0)]
    }

    pub fn payoff_tensor(&self, player: usize) -> &[Rational] {
        &self.payoffs[player]
    }

    pub fn check_budget(&self) -> Result<(), MultiError> {
        let profiles = self.profile_count();
        if self.players() > MAX_PLAYERS || profiles > MAX_PROFILES {
            Err(MultiError::BudgetExceeded { players: self.players(), profiles })
        } else {
            Ok(())
        }
    }
}

/// Odometer over a product of ranges.
struct Profiles {
    counts: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Profiles {
    fn new(counts: &[usize]) -> Self {
        let next = (!counts.contains(&0)).then(|| vec![0; counts.len()]);
        Self { counts: counts.to_vec(), next }
    }
}

impl Iterator for Profiles {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.counts[i] {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

fn lower_unchecked(g: &TensorGame, rule: CoalitionRule, player: usize, p: &[usize]) -> Rational {
    let n = g.players();
    let allowed: Vec<bool> = (0..n).map(|j| rule == CoalitionRule::All || j != player).collect();
    // Free coordinates range over their strategies; the rest stay at p.
    let ranges: Vec<usize> = (0..n).map(|j| if allowed[j] { g.counts[j] } else { 1 }).collect();
    let base: Vec<&Rational> = (0..n).map(|j| &g.payoffs[j][g.index(p)]).collect();
    let mut best = base[player].clone();
    let mut q = p.to_vec();
    for free in Profiles::new(&ranges) {
        let mut deviators = 0;
        for j in 0..n {
            if allowed[j] {
                q[j] = free[j];
                deviators += usize::from(q[j] != p[j]);
            }
        }
        if rule == CoalitionRule::Singletons && deviators > 1 {
            continue;
        }
        let at = g.index(&q);
        let admissible = (0..n).all(|j| q[j] == p[j] || g.payoffs[j][at] >= *base[j]);
        if admissible && g.payoffs[player][at] < best {
            best = g.payoffs[player][at].clone();
        }
    }
    best
}

pub fn lower_payoff_n(g: &TensorGame, player: usize, p: &TensorProfile) -> Result<Rational, MultiError> {
    lower_payoff_n_with(g, CoalitionRule::Others, player, p)
}

pub fn lower_payoff_n_with(
    g: &TensorGame,
    rule: CoalitionRule,
    player: usize,
    p: &TensorProfile,
) -> Result<Rational, MultiError> {
    g.check_budget()?;
    g.check_profile(p)?;
    if player >= g.players() {
        return Err(MultiError::ShapeMismatch(format!("player {} of {}", player + 1, g.players())));
    }
    Ok(lower_unchecked(g, rule, player, &p.0))
}

pub fn flat_tensor_game(g: &TensorGame) -> Result<TensorGame, MultiError> {
    flat_tensor_game_with(g, CoalitionRule::Others)
}

pub fn flat_tensor_game_with(g: &TensorGame, rule: CoalitionRule) -> Result<TensorGame, MultiError> {
    g.check_budget()?;
    let payoffs = (0..g.players())
        .map(|i| Profiles::new(&g.counts).map(|p| lower_unchecked(g, rule, i, &p)).collect())
        .collect();
    Ok(TensorGame { title: format!("flat({})", g.title), counts: g.counts.clone(), payoffs })
}

/// Pure Nash equilibria by unilateral-deviation enumeration.
pub fn nash_equilibria_n(g: &TensorGame) -> Result<BTreeSet<TensorProfile>, MultiError> {
    g.check_budget()?;
    let mut out = BTreeSet::new();
    for p in Profiles::new(&g.counts) {
        let here = g.index(&p);
        let stable = (0..g.players()).all(|i| {
            let mut q = p.clone();
            (0..g.counts[i]).all(|s| {
                q[i] = s;
                g.payoffs[i][g.index(&q)] <= g.payoffs[i][here]
            })
        });
        if stable {
            out.insert(TensorProfile(p));
        }
    }
    Ok(out)
}

pub fn m_equilibria_n(g: &TensorGame) -> Result<BTreeSet<TensorProfile>, MultiError> {
    nash_equilibria_n(&flat_tensor_game(g)?)
}

pub fn m_equilibria_n_with(g: &TensorGame, rule: CoalitionRule) -> Result<BTreeSet<TensorProfile>, MultiError> {
    nash_equilibria_n(&flat_tensor_game_with(g, rule)?)
}

/// `players` players with `strategies` options each; everyone gets 1 when
/// all choices agree and 0 otherwise.
pub fn unanimity_game(players: usize, strategies: usize) -> Result<TensorGame, MultiError> {
    TensorGame::from_fn(&format!("unanimity({players},{strategies})"), vec![strategies; players], |p| {
        let v = if p.iter().all(|&s| s == p[0]) { Rational::one() } else { Rational::zero() };
        vec![v; players]
    })
}
