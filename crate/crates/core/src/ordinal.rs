//! Order-isomorphic compression of payoffs.
//!
//! Every solution concept in this crate depends on payoffs only through
//! comparisons, so the hot loops run on dense `u32` ranks instead of big
//! rationals. Ranks are per player: rank `k` is the `k`-th smallest distinct
//! payoff value of that player.

use crate::game::{FiniteGame, Player, PureProfile};
use crate::rational::Rational;

pub(crate) struct Ranked {
    pub ranks: Vec<u32>,
    pub values: Vec<Rational>,
}

impl Ranked {
    pub fn new(values: &[Rational]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        let mut ranks = vec![0u32; values.len()];
        let mut distinct: Vec<Rational> = Vec::new();
        for &i in &order {
            if distinct.last() != Some(&values[i]) {
                distinct.push(values[i].clone());
            }
            ranks[i] = (distinct.len() - 1) as u32;
        }
        Self { ranks, values: distinct }
    }

    pub fn levels(&self) -> usize {
        self.values.len()
    }
}

pub(crate) struct OrdinalGame {
    pub rows: usize,
    pub cols: usize,
    pub players: [Ranked; 2],
}

impl OrdinalGame {
    pub fn new(g: &FiniteGame) -> Self {
        Self {
            rows: g.rows(),
            cols: g.cols(),
            players: [Ranked::new(g.payoff_vec(Player::One)), Ranked::new(g.payoff_vec(Player::Two))],
        }
    }

    #[inline]
    pub fn rank(&self, player: Player, p: PureProfile) -> u32 {
        self.players[player.index()].ranks[p.row * self.cols + p.col]
    }

    pub fn profiles(&self) -> impl Iterator<Item = PureProfile> + '_ {
        (0..self.rows).flat_map(move |r| (0..self.cols).map(move |c| PureProfile::new(r, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_dense_and_order_preserving() {
        let v: Vec<Rational> = [3, -1, 3, 0, -1].into_iter().map(Rational::from).collect();
        let r = Ranked::new(&v);
        assert_eq!(r.ranks, vec![2, 0, 2, 1, 0]);
        assert_eq!(r.levels(), 3);
        for (i, x) in v.iter().enumerate() {
            assert_eq!(&r.values[r.ranks[i] as usize], x);
        }
    }
}
