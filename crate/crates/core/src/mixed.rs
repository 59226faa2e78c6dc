//! Mixed extensions of finite games.
//!
//! Expected payoffs are exact bilinear forms. A mixed profile is an
//! equilibrium of the mixed extension iff no *pure* deviation raises either
//! player's expected payoff; by bilinearity this covers all mixed deviations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::equilibrium::{deviation_concepts, Concepts};
use crate::game::{FiniteGame, Player, PureProfile};
use crate::linalg::eliminate;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MixedError {
    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),
    #[error("mixed profile is {0}x{1} but the game is {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("profile {0} is not a Nash equilibrium")]
    NotEquilibrium(PureProfile),
    #[error("support enumeration handles at most 4x4 games, got {0}x{1}")]
    GameTooLarge(usize, usize),
    #[error("max support must be between 1 and 3, got {0}")]
    BadSupport(usize),
    #[error("cannot select from an empty set")]
    EmptySet,
}

/// A probability vector over one player's pure strategies.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedStrategy {
    weights: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(weights: Vec<Rational>) -> Result<Self, MixedError> {
        if weights.is_empty() {
            return Err(MixedError::InvalidDistribution("no strategies".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(MixedError::InvalidDistribution(format!("negative weight {w}")));
        }
        let total: Rational = weights.iter().sum();
        if total != Rational::one() {
            return Err(MixedError::InvalidDistribution(format!("weights sum to {total}")));
        }
        Ok(Self { weights })
    }

    pub fn dirac(n: usize, strategy: usize) -> Self {
        assert!(strategy < n, "strategy {strategy} out of range for {n}");
        let weights = (0..n).map(|i| if i == strategy { Rational::one() } else { Rational::zero() }).collect();
        Self { weights }
    }

    /// Equal weights on `support`, zero elsewhere.
    pub fn uniform_on(n: usize, support: &[usize]) -> Result<Self, MixedError> {
        if support.is_empty() || support.iter().any(|&s| s >= n) {
            return Err(MixedError::InvalidDistribution(format!("bad support {support:?} for {n} strategies")));
        }
        let w = Rational::ratio(1, support.len() as i64);
        let weights = (0..n).map(|i| if support.contains(&i) { w.clone() } else { Rational::zero() }).collect();
        Self::new(weights)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, s: usize) -> &Rational {
        &self.weights[s]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| self.weights[i].is_positive()).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.support().len() == 1
    }
}

impl fmt::Display for MixedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for MixedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedProfile {
    pub row: MixedStrategy,
    pub col: MixedStrategy,
}

impl MixedProfile {
    pub fn new(row: MixedStrategy, col: MixedStrategy) -> Self {
        Self { row, col }
    }

    pub fn dirac(g: &FiniteGame, p: PureProfile) -> Self {
        Self { row: MixedStrategy::dirac(g.rows(), p.row), col: MixedStrategy::dirac(g.cols(), p.col) }
    }

    pub fn strategy(&self, player: Player) -> &MixedStrategy {
        match player {
            Player::One => &self.row,
            Player::Two => &self.col,
        }
    }

    fn check(&self, g: &FiniteGame) -> Result<(), MixedError> {
        if self.row.len() != g.rows() || self.col.len() != g.cols() {
            return Err(MixedError::DimensionMismatch(self.row.len(), self.col.len(), g.rows(), g.cols()));
        }
        Ok(())
    }
}

impl fmt::Display for MixedProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.row, self.col)
    }
}

/// `rowᵀ · W_player · col`.
pub fn expected_payoff(g: &FiniteGame, mp: &MixedProfile, player: Player) -> Result<Rational, MixedError> {
    mp.check(g)?;
    let mut total = Rational::zero();
    for r in mp.row.support() {
        for c in mp.col.support() {
            let w = mp.row.weight(r) * mp.col.weight(c);
            total = total + w * g.payoff(player, PureProfile::new(r, c));
        }
    }
    Ok(total)
}

/// Expected payoff of `player` playing pure `s` against the co-player's mixed strategy in `mp`.
fn pure_against(g: &FiniteGame, mp: &MixedProfile, player: Player, s: usize) -> Rational {
    let co = player.other();
    let theirs = mp.strategy(co);
    theirs
        .support()
        .into_iter()
        .map(|t| theirs.weight(t) * g.payoff(player, PureProfile::new(0, 0).with(player, s).with(co, t)))
        .sum()
}

pub fn is_mixed_ne(g: &FiniteGame, mp: &MixedProfile) -> Result<bool, MixedError> {
    mp.check(g)?;
    for player in Player::BOTH {
        let value = expected_payoff(g, mp, player)?;
        if (0..g.strategies(player)).any(|s| pure_against(g, mp, player, s) > value) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pure strategies of `player` that tie the equilibrium payoff at `p`
/// against the co-player's strategy in `p`.
pub fn equal_payoff_deviations(g: &FiniteGame, p: PureProfile, player: Player) -> Result<Vec<usize>, MixedError> {
    let flags = deviation_concepts(g, p);
    if !flags.contains(Concepts::NE) {
        return Err(MixedError::NotEquilibrium(p));
    }
    let value = g.payoff(player, p);
    Ok((0..g.strategies(player)).filter(|&s| g.payoff(player, p.with(player, s)) == value).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Mixed strategies of `co` (over `co_support`) that make every strategy of
/// `player` in `own_support` a tied best-response candidate.
///
/// Unknowns are the co-player's weights on `co_support` plus the common
/// value. The base system is the indifference of `own_support` and the
/// normalization; when it is underdetermined, basic solutions are enumerated
/// by adding tightness of further own strategies or vanishing co-player
/// weights until the system pins a single point.
fn indifference_solutions(
    g: &FiniteGame,
    player: Player,
    own_support: &[usize],
    co_support: &[usize],
) -> Vec<MixedStrategy> {
    let co = player.other();
    let k = co_support.len();
    let vars = k + 1;
    let coefficient = |s: usize, t: usize| g.payoff(player, PureProfile::new(0, 0).with(player, s).with(co, t)).clone();
    let tight_row = |s: usize| {
        let mut row: Vec<Rational> = co_support.iter().map(|&t| coefficient(s, t)).collect();
        row.push(-Rational::one());
        row
    };
    let mut base: Vec<Vec<Rational>> = own_support.iter().map(|&s| tight_row(s)).collect();
    let mut rhs = vec![Rational::zero(); base.len()];
    let mut normal = vec![Rational::one(); k];
    normal.push(Rational::zero());
    base.push(normal);
    rhs.push(Rational::one());

    let first = eliminate(&base, &rhs, vars);
    if !first.consistent {
        return Vec::new();
    }
    let mut solutions = Vec::new();
    let nullity = vars - first.rank;
    if nullity == 0 {
        solutions.extend(first.unique);
    } else {
        let mut extra: Vec<Vec<Rational>> =
            (0..g.strategies(player)).filter(|s| !own_support.contains(s)).map(tight_row).collect();
        for i in 0..k {
            let mut row = vec![Rational::zero(); vars];
            row[i] = Rational::one();
            extra.push(row);
        }
        for pick in combinations(extra.len(), nullity) {
            let mut a = base.clone();
            let mut b = rhs.clone();
            for &i in &pick {
                a.push(extra[i].clone());
                b.push(Rational::zero());
            }
            if let Some(x) = eliminate(&a, &b, vars).unique {
                solutions.push(x);
            }
        }
    }
    let n = g.strategies(co);
    solutions
        .into_iter()
        .filter_map(|x| {
            let mut weights = vec![Rational::zero(); n];
            for (i, &t) in co_support.iter().enumerate() {
                weights[t] = x[i].clone();
            }
            MixedStrategy::new(weights).ok()
        })
        .collect()
}

/// Verified mixed equilibria found by enumerating support pairs of size up
/// to `max_support`.
///
/// Every returned profile passes [`is_mixed_ne`]. Degenerate games can have
/// continua of equilibria; only the basic solutions of each support system
/// are reported, so completeness is not claimed there.
pub fn mixed_equilibrium_candidates(g: &FiniteGame, max_support: usize) -> Result<BTreeSet<MixedProfile>, MixedError> {
    if g.rows() > 4 || g.cols() > 4 {
        return Err(MixedError::GameTooLarge(g.rows(), g.cols()));
    }
    if !(1..=3).contains(&max_support) {
        return Err(MixedError::BadSupport(max_support));
    }
    let supports = |n: usize| -> Vec<Vec<usize>> { (1..=max_support.min(n)).flat_map(|k| combinations(n, k)).collect() };
    let mut found = BTreeSet::new();
    for rows in supports(g.rows()) {
        for cols in supports(g.cols()) {
            let ys = indifference_solutions(g, Player::One, &rows, &cols);
            if ys.is_empty() {
                continue;
            }
            let xs = indifference_solutions(g, Player::Two, &cols, &rows);
            for x in &xs {
                for y in &ys {
                    let mp = MixedProfile::new(x.clone(), y.clone());
                    if is_mixed_ne(g, &mp)? {
                        found.insert(mp);
                    }
                }
            }
        }
    }
    Ok(found)
}

/// How one pure equilibrium carries over to the mixed extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftEntry {
    pub profile: PureProfile,
    /// NE / SNE / SSNE / WSSNE memberships in the pure game.
    pub classes: Concepts,
    /// Dirac lift passes the pure-deviation equilibrium test.
    pub mixed_ne: bool,
    /// Every tie set is the player's own strategy alone.
    pub strict_support: bool,
    /// Tied deviations leave the co-player's payoff unchanged.
    pub semi_strict_support: bool,
    /// Tied deviations never lower the co-player's payoff.
    pub weak_support: bool,
}

impl LiftEntry {
    pub fn lifts(&self) -> bool {
        let need = |c: Concepts, ok: bool| !self.classes.contains(c) || ok;
        need(Concepts::NE, self.mixed_ne)
            && need(Concepts::SNE, self.strict_support)
            && need(Concepts::SSNE, self.semi_strict_support)
            && need(Concepts::WSSNE, self.weak_support)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub entries: Vec<LiftEntry>,
}

impl LiftReport {
    pub fn all_lift(&self) -> bool {
        self.entries.iter().all(LiftEntry::lifts)
    }

    pub fn entry(&self, p: PureProfile) -> Option<&LiftEntry> {
        self.entries.iter().find(|e| e.profile == p)
    }
}

/// Checks, for every pure Nash equilibrium, the mixed-extension counterparts
/// of its refinements.
///
/// A mixed deviation that ties the equilibrium payoff can only put weight on
/// pure strategies that tie it too, so the refinements reduce to conditions
/// on the tie sets from [`equal_payoff_deviations`].
pub fn pure_equilibrium_lifts(g: &FiniteGame) -> LiftReport {
    let mut entries = Vec::new();
    for p in g.profiles() {
        let flags = deviation_concepts(g, p);
        if !flags.contains(Concepts::NE) {
            continue;
        }
        let mut strict = true;
        let mut semi = true;
        let mut weak = true;
        for player in Player::BOTH {
            let ties = equal_payoff_deviations(g, p, player).expect("p is an equilibrium");
            let co = player.other();
            let base = g.payoff(co, p);
            strict &= ties == [p.strategy(player)];
            for s in ties {
                let other = g.payoff(co, p.with(player, s));
                semi &= other == base;
                weak &= other >= base;
            }
        }
        let mixed_ne = is_mixed_ne(g, &MixedProfile::dirac(g, p)).expect("dimensions match");
        entries.push(LiftEntry {
            profile: p,
            classes: flags & (Concepts::NE | Concepts::SNE | Concepts::SSNE | Concepts::WSSNE),
            mixed_ne,
            strict_support: strict,
            semi_strict_support: semi,
            weak_support: weak,
        });
    }
    LiftReport { entries }
}

/// A finite distribution over payoff values, stored ascending by value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lottery {
    outcomes: Vec<(Rational, Rational)>,
}

impl Lottery {
    /// Merges equal values and drops zero-probability outcomes.
    pub fn new(outcomes: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self, MixedError> {
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (v, p) in outcomes {
            if p.is_negative() {
                return Err(MixedError::InvalidDistribution(format!("negative probability {p}")));
            }
            let e = merged.entry(v).or_insert_with(Rational::zero);
            *e = &*e + &p;
        }
        merged.retain(|_, p| p.is_positive());
        let total: Rational = merged.values().sum();
        if total != Rational::one() {
            return Err(MixedError::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Self { outcomes: merged.into_iter().collect() })
    }

    pub fn outcomes(&self) -> &[(Rational, Rational)] {
        &self.outcomes
    }

    /// Smallest value in the support.
    pub fn min_gain(&self) -> Rational {
        self.outcomes[0].0.clone()
    }

    pub fn expected_gain(&self) -> Rational {
        self.outcomes.iter().map(|(v, p)| v * p).sum()
    }
}

impl fmt::Display for Lottery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.outcomes.iter().map(|(v, p)| format!("{v}: {p}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Distribution of `player`'s payoff under the product measure `mp`.
pub fn outcome_lottery(g: &FiniteGame, mp: &MixedProfile, player: Player) -> Result<Lottery, MixedError> {
    mp.check(g)?;
    let mut cells = Vec::new();
    for r in mp.row.support() {
        for c in mp.col.support() {
            cells.push((g.payoff(player, PureProfile::new(r, c)).clone(), mp.row.weight(r) * mp.col.weight(c)));
        }
    }
    Lottery::new(cells)
}

/// Loss-averse preference: larger minimal gain first, then larger expected
/// gain. `Greater` means `a` is preferred.
pub fn compare_lotteries_loss_averse(a: &Lottery, b: &Lottery) -> Ordering {
    a.min_gain().cmp(&b.min_gain()).then_with(|| a.expected_gain().cmp(&b.expected_gain()))
}

/// Uniform weights over `n` equilibria.
pub fn uniform_selection_weights(n: usize) -> Vec<Rational> {
    vec![Rational::ratio(1, n as i64); n]
}

/// Draws one element uniformly.
///
/// The generator is ChaCha8 seeded through `seed_from_u64(seed)`, and the
/// index is `gen_range(0..len)`; both are stable, so a seed always selects
/// the same position of `eqs`.
pub fn select_equilibrium<T: Clone>(eqs: &[T], seed: u64) -> Result<T, MixedError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    select_with(eqs, &mut rng)
}

/// Like [`select_equilibrium`] but continues an existing stream, for repeated draws.
pub fn select_with<T: Clone, R: Rng>(eqs: &[T], rng: &mut R) -> Result<T, MixedError> {
    if eqs.is_empty() {
        return Err(MixedError::EmptySet);
    }
    Ok(eqs[rng.gen_range(0..eqs.len())].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    fn half() -> Rational {
        Rational::ratio(1, 2)
    }

    fn ms(w: &[(i64, i64)]) -> MixedStrategy {
        MixedStrategy::new(w.iter().map(|&(n, d)| Rational::ratio(n, d)).collect()).unwrap()
    }

    fn pp(r: usize, c: usize) -> PureProfile {
        PureProfile::new(r - 1, c - 1)
    }

    #[test]
    fn strategy_validation() {
        assert!(MixedStrategy::new(vec![half(), half()]).is_ok());
        assert!(MixedStrategy::new(vec![half()]).is_err());
        assert!(MixedStrategy::new(vec![Rational::from(2), Rational::from(-1)]).is_err());
        assert!(MixedStrategy::new(vec![]).is_err());
        assert_eq!(MixedStrategy::uniform_on(3, &[0, 1]).unwrap(), ms(&[(1, 2), (1, 2), (0, 1)]));
    }

    #[test]
    fn expected_payoffs() {
        let mp = builtin("matching-pennies", None).unwrap();
        let u = MixedProfile::new(ms(&[(1, 2), (1, 2)]), ms(&[(1, 2), (1, 2)]));
        for pl in Player::BOTH {
            assert_eq!(expected_payoff(&mp, &u, pl).unwrap(), Rational::zero());
        }
        let bos = builtin("battle-of-sexes", None).unwrap();
        let m = MixedProfile::new(ms(&[(3, 5), (2, 5)]), ms(&[(2, 5), (3, 5)]));
        assert_eq!(expected_payoff(&bos, &m, Player::One).unwrap(), Rational::ratio(6, 5));
        assert_eq!(expected_payoff(&bos, &m, Player::Two).unwrap(), Rational::ratio(6, 5));
        let wrong = MixedProfile::new(ms(&[(1, 1)]), ms(&[(1, 2), (1, 2)]));
        assert!(matches!(expected_payoff(&bos, &wrong, Player::One), Err(MixedError::DimensionMismatch(..))));
    }

    #[test]
    fn dirac_embedding() {
        for name in crate::builtins::NAMES {
            let g = builtin(name, (name == "traveler").then_some((2, 6))).unwrap();
            for p in g.profiles() {
                for pl in Player::BOTH {
                    assert_eq!(&expected_payoff(&g, &MixedProfile::dirac(&g, p), pl).unwrap(), g.payoff(pl, p));
                }
            }
        }
    }

    #[test]
    fn pennies_equilibria() {
        let g = builtin("matching-pennies", None).unwrap();
        let u = MixedProfile::new(ms(&[(1, 2), (1, 2)]), ms(&[(1, 2), (1, 2)]));
        assert!(is_mixed_ne(&g, &u).unwrap());
        assert!(!is_mixed_ne(&g, &MixedProfile::dirac(&g, pp(1, 1))).unwrap());
        let found = mixed_equilibrium_candidates(&g, 2).unwrap();
        assert_eq!(found, [u].into());
    }

    #[test]
    fn extended_pennies_equilibria() {
        let g = builtin("extended-pennies", None).unwrap();
        let d3 = ms(&[(0, 1), (0, 1), (1, 1)]);
        let h = ms(&[(1, 2), (1, 2), (0, 1)]);
        let listed = [
            MixedProfile::new(d3.clone(), d3.clone()),
            MixedProfile::new(h.clone(), h.clone()),
            MixedProfile::new(h.clone(), d3.clone()),
            MixedProfile::new(d3.clone(), h.clone()),
        ];
        for mp in &listed {
            assert!(is_mixed_ne(&g, mp).unwrap(), "{mp}");
        }
        let found = mixed_equilibrium_candidates(&g, 3).unwrap();
        for mp in &listed {
            assert!(found.contains(mp), "{mp} missing");
        }
        // Convex combinations such as (δ3, (1/4,1/4,1/2)) are equilibria too.
        let extra = MixedProfile::new(d3, ms(&[(1, 4), (1, 4), (1, 2)]));
        assert!(is_mixed_ne(&g, &extra).unwrap());
    }

    #[test]
    fn battle_of_sexes_candidates() {
        let g = builtin("battle-of-sexes", None).unwrap();
        let found = mixed_equilibrium_candidates(&g, 2).unwrap();
        assert!(found.contains(&MixedProfile::dirac(&g, pp(1, 1))));
        assert!(found.contains(&MixedProfile::dirac(&g, pp(2, 2))));
        assert!(found.contains(&MixedProfile::new(ms(&[(3, 5), (2, 5)]), ms(&[(2, 5), (3, 5)]))));
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn candidate_limits() {
        let big = builtin("traveler", Some((2, 7))).unwrap();
        assert!(matches!(mixed_equilibrium_candidates(&big, 2), Err(MixedError::GameTooLarge(6, 6))));
        let g = builtin("battle-of-sexes", None).unwrap();
        assert_eq!(mixed_equilibrium_candidates(&g, 0), Err(MixedError::BadSupport(0)));
        assert_eq!(mixed_equilibrium_candidates(&g, 4), Err(MixedError::BadSupport(4)));
    }

    #[test]
    fn tie_sets() {
        let ht = builtin("high-threat", None).unwrap();
        assert_eq!(equal_payoff_deviations(&ht, pp(1, 1), Player::One).unwrap(), vec![0, 1]);
        let g = builtin("3-4-5", None).unwrap();
        for pl in Player::BOTH {
            assert_eq!(equal_payoff_deviations(&g, pp(1, 1), pl).unwrap(), vec![0]);
        }
        assert_eq!(
            equal_payoff_deviations(&ht, pp(1, 2), Player::One),
            Err(MixedError::NotEquilibrium(pp(1, 2)))
        );
    }

    #[test]
    fn lift_reports() {
        let g = builtin("3-4-5", None).unwrap();
        let report = pure_equilibrium_lifts(&g);
        let e = report.entry(pp(3, 3)).unwrap();
        assert!(e.classes.contains(Concepts::WSSNE) && e.weak_support);
        assert!(report.all_lift());

        let ht = pure_equilibrium_lifts(&builtin("high-threat", None).unwrap());
        let e = ht.entry(pp(1, 1)).unwrap();
        assert!(e.mixed_ne && !e.weak_support);
        assert!(ht.all_lift());

        let c = FiniteGame::from_fn(2, 2, "c", |_, _| (Rational::zero(), Rational::zero())).unwrap();
        let rc = pure_equilibrium_lifts(&c);
        assert_eq!(rc.entries.len(), 4);
        assert!(rc.all_lift());
    }

    #[test]
    fn lotteries() {
        let g = builtin("extended-pennies", None).unwrap();
        let u = MixedProfile::new(ms(&[(1, 2), (1, 2), (0, 1)]), ms(&[(1, 2), (1, 2), (0, 1)]));
        let l = outcome_lottery(&g, &u, Player::One).unwrap();
        assert_eq!(l.outcomes(), &[(Rational::from(-1), half()), (Rational::from(1), half())]);
        assert_eq!(l.min_gain(), Rational::from(-1));
        assert_eq!(l.expected_gain(), Rational::zero());

        let sure = outcome_lottery(&g, &MixedProfile::dirac(&g, pp(3, 3)), Player::One).unwrap();
        assert_eq!(sure.outcomes(), &[(Rational::zero(), Rational::one())]);
        assert_eq!(compare_lotteries_loss_averse(&l, &sure), Ordering::Less);
        assert_eq!(compare_lotteries_loss_averse(&sure, &sure), Ordering::Equal);
    }

    #[test]
    fn loss_averse_prefers_sure_middle_prize() {
        // U(x1) = 0 < U(x3) = 5 < U(x2) = 10; rho mixes x1 and x2 with EU = U(x3).
        let rho = Lottery::new([(Rational::zero(), half()), (Rational::from(10), half())]).unwrap();
        let sure = Lottery::new([(Rational::from(5), Rational::one())]).unwrap();
        assert_eq!(rho.expected_gain(), sure.expected_gain());
        assert!(rho.min_gain() < Rational::from(5));
        assert_eq!(compare_lotteries_loss_averse(&sure, &rho), Ordering::Greater);
        // Same minimal gain: expected gain decides.
        let rho2 = Lottery::new([(Rational::zero(), Rational::ratio(1, 4)), (Rational::from(10), Rational::ratio(3, 4))])
            .unwrap();
        assert_eq!(compare_lotteries_loss_averse(&rho2, &rho), Ordering::Greater);
    }

    #[test]
    fn lottery_validation() {
        assert!(Lottery::new([(Rational::zero(), half())]).is_err());
        assert!(Lottery::new([(Rational::zero(), Rational::from(2)), (Rational::one(), Rational::from(-1))]).is_err());
        let merged = Lottery::new([(Rational::one(), half()), (Rational::one(), half()), (Rational::zero(), Rational::zero())])
            .unwrap();
        assert_eq!(merged.outcomes().len(), 1);
    }

    #[test]
    fn selection() {
        let eqs = [pp(1, 1), pp(2, 2)];
        assert_eq!(uniform_selection_weights(2), vec![half(), half()]);
        assert_eq!(select_equilibrium(&eqs, 7).unwrap(), select_equilibrium(&eqs, 7).unwrap());
        assert_eq!(select_equilibrium(&[pp(1, 2)], 99).unwrap(), pp(1, 2));
        assert_eq!(select_equilibrium::<PureProfile>(&[], 1), Err(MixedError::EmptySet));
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let hits = (0..10_000).filter(|_| select_with(&eqs, &mut rng).unwrap() == eqs[0]).count();
        let freq = hits as f64 / 10_000.0;
        assert!((freq - 0.5).abs() <= 0.02, "{freq}");
    }
}
