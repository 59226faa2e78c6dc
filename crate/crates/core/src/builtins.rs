//! Named example games.
//!
//! `me-vs-ne` reads the lower-right cell as `[5,5]`: with that cell the four
//! memberships quoted for this game (`(2,2)` in ME and WSSNE, `(2,3)` in ME
//! and NE but not WSSNE, `(3,1)` in ME but not NE, `(3,3)` in NE but not ME
//! and strongly Pareto optimal) all hold. The literal `[5,3]` variant is kept
//! as `me-vs-ne-printed`; there `(3,3)` is not a Nash equilibrium.

use crate::game::{FiniteGame, GameError};
use crate::rational::Rational;

pub const NAMES: [&str; 11] = [
    "coordination",
    "high-threat",
    "traveler",
    "3-4-5",
    "me-vs-ne",
    "me-vs-ne-printed",
    "hide-a-coin",
    "matching-pennies",
    "extended-pennies",
    "battle-of-sexes",
    "prisoners-dilemma",
];

pub const TRAVELER_DEFAULT: (i64, i64) = (2, 100);

/// Builds a named game. Only `traveler` takes parameters: the inclusive claim
/// range `(lo, hi)` with `2 <= lo < hi`, defaulting to `(2, 100)`.
pub fn builtin(name: &str, params: Option<(i64, i64)>) -> Result<FiniteGame, GameError> {
    if name == "traveler" {
        let (lo, hi) = params.unwrap_or(TRAVELER_DEFAULT);
        return traveler(lo, hi);
    }
    if params.is_some() {
        return Err(GameError::BadParams(format!("builtin `{name}` takes no parameters")));
    }
    let pairs: &[&[(i64, i64)]] = match name {
        "coordination" => &[&[(2, 2), (0, 0), (0, 0)], &[(0, 0), (1, 1), (0, 0)], &[(0, 0), (0, 0), (2, 2)]],
        "high-threat" => &[&[(4, 4), (1, 4)], &[(4, 1), (3, 3)]],
        "3-4-5" => &[
            &[(3, 3), (0, 0), (0, 0), (0, 0)],
            &[(0, 0), (4, 4), (0, 0), (4, 4)],
            &[(0, 0), (0, 0), (3, 3), (5, 3)],
            &[(0, 0), (4, 4), (3, 5), (5, 5)],
        ],
        "me-vs-ne" => &[&[(1, 4), (0, 0), (4, 4)], &[(0, 0), (3, 3), (5, 3)], &[(4, 4), (3, 5), (5, 5)]],
        "me-vs-ne-printed" => &[&[(1, 4), (0, 0), (4, 4)], &[(0, 0), (3, 3), (5, 3)], &[(4, 4), (3, 5), (5, 3)]],
        "hide-a-coin" => &[&[(-10, 10), (15, -15)], &[(15, -15), (-20, 20)]],
        "matching-pennies" => &[&[(1, -1), (-1, 1)], &[(-1, 1), (1, -1)]],
        "extended-pennies" => &[&[(-1, 1), (1, -1), (0, 0)], &[(1, -1), (-1, 1), (0, 0)], &[(0, 0), (0, 0), (0, 0)]],
        "battle-of-sexes" => &[&[(3, 2), (0, 0)], &[(0, 0), (2, 3)]],
        // Strategies: cooperate, defect. T=5, R=3, P=1, S=0.
        "prisoners-dilemma" => &[&[(3, 3), (0, 5)], &[(5, 0), (1, 1)]],
        _ => return Err(GameError::UnknownBuiltin(name.to_string())),
    };
    bimatrix(name, pairs)
}

fn bimatrix(title: &str, cells: &[&[(i64, i64)]]) -> Result<FiniteGame, GameError> {
    let p1 = cells.iter().map(|r| r.iter().map(|c| c.0).collect()).collect::<Vec<Vec<i64>>>();
    let p2 = cells.iter().map(|r| r.iter().map(|c| c.1).collect()).collect::<Vec<Vec<i64>>>();
    FiniteGame::from_integers(&p1, &p2, title)
}

/// Claims in `lo..=hi`; `P1(x,y) = P2(y,x) = min(x,y) + 2*sign(y-x)`.
pub fn traveler(lo: i64, hi: i64) -> Result<FiniteGame, GameError> {
    if lo < 2 || lo >= hi {
        return Err(GameError::BadParams(format!("traveler needs 2 <= lo < hi, got ({lo},{hi})")));
    }
    let n = (hi - lo + 1) as usize;
    let pay = |x: i64, y: i64| Rational::from(x.min(y) + 2 * (y - x).signum());
    FiniteGame::from_fn(n, n, format!("traveler({lo},{hi})"), |r, c| {
        let (x, y) = (lo + r as i64, lo + c as i64);
        (pay(x, y), pay(y, x))
    })
}
