//! Pure-strategy solution concepts of a finite game.
//!
//! All predicates quantify over unilateral pure deviations:
//!
//! * NE: no deviation strictly improves the deviator.
//! * SNE: every deviation to a different strategy strictly hurts the deviator.
//! * SSNE: NE, and a payoff-neutral deviation leaves the co-player's payoff unchanged.
//! * WSSNE: NE, and a payoff-neutral deviation never lowers the co-player's payoff.
//! * CWI: any weakly improving deviation weakly improves the co-player too.
//!   CWI carries no equilibrium requirement, so `WSSNE = NE ∩ CWI` holds as a
//!   checkable identity rather than by construction.

use std::collections::BTreeSet;

use bitflags::bitflags;

use crate::flatten;
use crate::game::{FiniteGame, Player, PureProfile};
use crate::ordinal::OrdinalGame;
use crate::rational::Rational;

bitflags! {
    /// Membership flags of one profile.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
    pub struct Concepts: u16 {
        const PO = 1 << 0;
        const SPO = 1 << 1;
        const WALD = 1 << 2;
        const MAXIMIN = 1 << 3;
        const NE = 1 << 4;
        const SNE = 1 << 5;
        const SSNE = 1 << 6;
        const WSSNE = 1 << 7;
        const CWI = 1 << 8;
        const ME = 1 << 9;
    }
}

impl Concepts {
    /// Flag names in report column order.
    pub const COLUMNS: [(Concepts, &'static str); 10] = [
        (Concepts::PO, "PO"),
        (Concepts::SPO, "SPO"),
        (Concepts::WALD, "WALD"),
        (Concepts::MAXIMIN, "MAXIMIN"),
        (Concepts::NE, "NE"),
        (Concepts::SNE, "SNE"),
        (Concepts::SSNE, "SSNE"),
        (Concepts::WSSNE, "WSSNE"),
        (Concepts::CWI, "CWI"),
        (Concepts::ME, "ME"),
    ];

    pub fn names(self) -> Vec<&'static str> {
        Self::COLUMNS.iter().filter(|(c, _)| self.contains(*c)).map(|(_, n)| *n).collect()
    }
}

pub type ProfileSet = BTreeSet<PureProfile>;

/// Per-profile flags for the whole game, profiles in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub title: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(PureProfile, Concepts)>,
}

impl ClassificationReport {
    pub fn flags(&self, p: PureProfile) -> Concepts {
        self.entries[p.row * self.cols + p.col].1
    }

    pub fn members(&self, concept: Concepts) -> ProfileSet {
        self.entries.iter().filter(|(_, f)| f.contains(concept)).map(|(p, _)| *p).collect()
    }

    /// Checks the implications every report must satisfy.
    pub fn implications_hold(&self) -> bool {
        self.entries.iter().all(|(_, f)| {
            let imp = |a: Concepts, b: Concepts| !f.contains(a) || f.contains(b);
            imp(Concepts::SNE, Concepts::SSNE)
                && imp(Concepts::SSNE, Concepts::WSSNE)
                && imp(Concepts::WSSNE, Concepts::NE)
                && f.contains(Concepts::WSSNE) == f.contains(Concepts::NE | Concepts::CWI)
                && imp(Concepts::SPO, Concepts::PO)
                && imp(Concepts::MAXIMIN, Concepts::WALD)
        })
    }
}

/// Flags NE, SNE, SSNE, WSSNE and CWI of one profile in a single sweep over
/// the unilateral deviations. `level` may return ranks or the payoffs themselves.
fn deviation_flags<T: Ord>(strategies: [usize; 2], p: PureProfile, level: impl Fn(Player, PureProfile) -> T) -> Concepts {
    let mut ne = true;
    let mut sne = true;
    let mut semi = true;
    let mut weak = true;
    let mut cwi = true;
    for player in Player::BOTH {
        let me = level(player, p);
        let them = level(player.other(), p);
        let own = p.strategy(player);
        for s in 0..strategies[player.index()] {
            if s == own {
                continue;
            }
            let q = p.with(player, s);
            let dev = level(player, q);
            let dev_other = level(player.other(), q);
            if dev > me {
                ne = false;
            }
            if dev >= me {
                sne = false;
                if dev_other < them {
                    cwi = false;
                }
            }
            if dev == me {
                if dev_other != them {
                    semi = false;
                }
                if dev_other < them {
                    weak = false;
                }
            }
        }
    }
    let mut f = Concepts::empty();
    f.set(Concepts::NE, ne);
    f.set(Concepts::SNE, ne && sne);
    f.set(Concepts::SSNE, ne && semi);
    f.set(Concepts::WSSNE, ne && weak);
    f.set(Concepts::CWI, cwi);
    f
}

fn ordinal_flags(o: &OrdinalGame, p: PureProfile) -> Concepts {
    deviation_flags([o.rows, o.cols], p, |pl, q| o.rank(pl, q))
}

/// NE, SNE, SSNE, WSSNE and CWI flags of a single profile.
pub fn deviation_concepts(g: &FiniteGame, p: PureProfile) -> Concepts {
    deviation_flags([g.rows(), g.cols()], p, |pl, q| g.payoff(pl, q))
}

fn filter_profiles(g: &FiniteGame, concept: Concepts) -> ProfileSet {
    let o = OrdinalGame::new(g);
    o.profiles().filter(|&p| ordinal_flags(&o, p).contains(concept)).collect()
}

pub fn nash_equilibria(g: &FiniteGame) -> ProfileSet {
    filter_profiles(g, Concepts::NE)
}

/// Every unilateral switch to a different pure strategy strictly lowers the
/// deviator's payoff. Vacuous for a player with a single strategy.
pub fn strict_ne(g: &FiniteGame) -> ProfileSet {
    filter_profiles(g, Concepts::SNE)
}

pub fn semi_strict_ne(g: &FiniteGame) -> ProfileSet {
    filter_profiles(g, Concepts::SSNE)
}

pub fn weakly_semi_strict_ne(g: &FiniteGame) -> ProfileSet {
    filter_profiles(g, Concepts::WSSNE)
}

pub fn cwi_profiles(g: &FiniteGame) -> ProfileSet {
    filter_profiles(g, Concepts::CWI)
}

/// Best player-2 rank among profiles whose player-1 rank is at least / above
/// each level, used by both Pareto sweeps.
struct ParetoSweep {
    /// max rank2 over profiles with rank1 == k
    at: Vec<Option<u32>>,
    /// max rank2 over profiles with rank1 > k
    above: Vec<Option<u32>>,
}

impl ParetoSweep {
    fn new(o: &OrdinalGame) -> Self {
        let levels = o.players[0].levels();
        let mut at: Vec<Option<u32>> = vec![None; levels];
        for p in o.profiles() {
            let (k, v) = (o.rank(Player::One, p) as usize, o.rank(Player::Two, p));
            at[k] = Some(at[k].map_or(v, |m| m.max(v)));
        }
        let mut above = vec![None; levels];
        let mut acc: Option<u32> = None;
        for k in (0..levels).rev() {
            above[k] = acc;
            acc = match (acc, at[k]) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (a, b) => a.or(b),
            };
        }
        Self { at, above }
    }
}

/// Profiles not strictly improved upon in both coordinates by any profile.
pub fn pareto_optima(g: &FiniteGame) -> ProfileSet {
    let o = OrdinalGame::new(g);
    let sweep = ParetoSweep::new(&o);
    o.profiles()
        .filter(|&p| {
            let (k, v) = (o.rank(Player::One, p) as usize, o.rank(Player::Two, p));
            !sweep.above[k].is_some_and(|m| m > v)
        })
        .collect()
}

/// Profiles admitting no weak improvement for both players that is strict
/// for at least one.
pub fn strong_pareto_optima(g: &FiniteGame) -> ProfileSet {
    let o = OrdinalGame::new(g);
    let sweep = ParetoSweep::new(&o);
    o.profiles()
        .filter(|&p| {
            let (k, v) = (o.rank(Player::One, p) as usize, o.rank(Player::Two, p));
            let beaten_above = sweep.above[k].is_some_and(|m| m >= v);
            let beaten_level = sweep.at[k].is_some_and(|m| m > v);
            !(beaten_above || beaten_level)
        })
        .collect()
}

/// Worst payoff of `player` for each of their own strategies.
pub fn strategy_minima(g: &FiniteGame, player: Player) -> Vec<Rational> {
    (0..g.strategies(player))
        .map(|s| {
            (0..g.strategies(player.other()))
                .map(|t| g.payoff(player, PureProfile::new(0, 0).with(player, s).with(player.other(), t)))
                .min()
                .expect("non-empty game")
                .clone()
        })
        .collect()
}

/// The max-min (security) value of each player.
pub fn security_levels(g: &FiniteGame) -> [Rational; 2] {
    Player::BOTH.map(|pl| strategy_minima(g, pl).into_iter().max().expect("non-empty game"))
}

fn security_strategies(g: &FiniteGame, player: Player) -> Vec<usize> {
    let mins = strategy_minima(g, player);
    let best = mins.iter().max().expect("non-empty game");
    (0..mins.len()).filter(|&s| &mins[s] == best).collect()
}

/// Product of both players' max-min strategy sets.
pub fn wald_solutions(g: &FiniteGame) -> ProfileSet {
    let rows = security_strategies(g, Player::One);
    let cols = security_strategies(g, Player::Two);
    rows.iter().flat_map(|&r| cols.iter().map(move |&c| PureProfile::new(r, c))).collect()
}

/// Wald solution at which both players receive exactly their security level.
pub fn is_maximin(g: &FiniteGame, p: PureProfile) -> bool {
    let levels = security_levels(g);
    wald_solutions(g).contains(&p) && Player::BOTH.iter().all(|&pl| g.payoff(pl, p) == &levels[pl.index()])
}

/// Flags every profile with every concept, including m-equilibrium.
pub fn classify(g: &FiniteGame) -> ClassificationReport {
    let o = OrdinalGame::new(g);
    let po = pareto_optima(g);
    let spo = strong_pareto_optima(g);
    let wald = wald_solutions(g);
    let levels = security_levels(g);
    let me = flatten::m_equilibria(g);
    let entries = o
        .profiles()
        .map(|p| {
            let mut f = ordinal_flags(&o, p);
            f.set(Concepts::PO, po.contains(&p));
            f.set(Concepts::SPO, spo.contains(&p));
            let in_wald = wald.contains(&p);
            f.set(Concepts::WALD, in_wald);
            f.set(
                Concepts::MAXIMIN,
                in_wald && Player::BOTH.iter().all(|&pl| g.payoff(pl, p) == &levels[pl.index()]),
            );
            f.set(Concepts::ME, me.contains(&p));
            (p, f)
        })
        .collect();
    ClassificationReport { title: g.title().to_string(), rows: g.rows(), cols: g.cols(), entries }
}
