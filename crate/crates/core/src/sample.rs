//! Seeded generators of small tie-heavy games, used by property suites and
//! the CLI's self-checks.
//!
//! Payoffs are integers in `[-5, 5]`, drawn from a per-player palette of at
//! most four values so that equal payoffs are common.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{FiniteGame, Player, ValueTable};
use crate::mixed::MixedStrategy;
use crate::rational::Rational;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn palette(rng: &mut SampleRng) -> Vec<i64> {
    let k = rng.gen_range(1..=4);
    (0..k).map(|_| rng.gen_range(-5..=5)).collect()
}

pub fn random_game(rng: &mut SampleRng, rows: usize, cols: usize) -> FiniteGame {
    let (a, b) = (palette(rng), palette(rng));
    FiniteGame::from_fn(rows, cols, "random", |_, _| {
        (Rational::from(*a.choose(rng).unwrap()), Rational::from(*b.choose(rng).unwrap()))
    })
    .expect("non-empty")
}

/// A game with random dimensions in `2..=max_dim` on each side.
pub fn random_sized_game(rng: &mut SampleRng, max_dim: usize) -> FiniteGame {
    let rows = rng.gen_range(2..=max_dim);
    let cols = rng.gen_range(2..=max_dim);
    random_game(rng, rows, cols)
}

/// Strictly competitive game: player 2's payoff is a strictly decreasing
/// affine image of player 1's.
pub fn random_competitive_game(rng: &mut SampleRng, rows: usize, cols: usize) -> FiniteGame {
    let a = palette(rng);
    let slope = rng.gen_range(1..=3);
    let shift = rng.gen_range(-3..=3);
    FiniteGame::from_fn(rows, cols, "competitive", |_, _| {
        let v = *a.choose(rng).unwrap();
        (Rational::from(v), Rational::from(shift - slope * v))
    })
    .expect("non-empty")
}

/// Square game with `P1(x,y) = P2(y,x)`.
pub fn random_symmetric_game(rng: &mut SampleRng, n: usize) -> FiniteGame {
    let a = palette(rng);
    let cells: Vec<Rational> = (0..n * n).map(|_| Rational::from(*a.choose(rng).unwrap())).collect();
    FiniteGame::from_fn(n, n, "symmetric", |r, c| (cells[r * n + c].clone(), cells[c * n + r].clone()))
        .expect("non-empty")
}

/// A strictly increasing table over the payoff values of `player`, with
/// random positive rational gaps.
pub fn random_increasing_table(rng: &mut SampleRng, g: &FiniteGame, player: Player) -> ValueTable {
    let mut level = Rational::from(rng.gen_range(-20..=20));
    let mut table = ValueTable::new();
    for v in g.payoff_values(player) {
        table.insert(v, level.clone());
        level = level + Rational::ratio(rng.gen_range(1..=9), rng.gen_range(1..=4));
    }
    table
}

/// A mixed strategy with small random integer weights, normalized.
pub fn random_mixed_strategy(rng: &mut SampleRng, n: usize) -> MixedStrategy {
    loop {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
        let total: i64 = w.iter().sum();
        if total > 0 {
            let weights = w.into_iter().map(|x| Rational::ratio(x, total)).collect();
            return MixedStrategy::new(weights).expect("normalized weights");
        }
    }
}
