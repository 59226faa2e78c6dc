//! Parametric duopolies on real intervals.
//!
//! Three symmetric models: Cournot `x(L−x−y)`, Puu `(L/(x+y)−1)x` with
//! `P(0,0)=0`, and a diminishing-cost variant `Lx/(x+y) − C/x` with
//! `P(0,y)=0`, truncated to `[0, Xmax]`. Closed forms are evaluated in `f64`;
//! the grid oracle re-derives lower payoffs with the exact finite machinery.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::flatten::{flat_game, lower_payoff};
use crate::game::{FiniteGame, Player, PureProfile};
use crate::rational::Rational;
use crate::sample::rng;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContinuousError {
    #[error("point ({0}, {1}) lies outside the strategy domain [0, {2}]")]
    Domain(f64, f64, f64),
    #[error("invalid model parameters: {0}")]
    BadParameters(String),
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Duopoly {
    Cournot { l: f64 },
    Puu { l: f64 },
    DiminishingCost { l: f64, c: f64, x_max: f64 },
}

/// Lower bound of the default Puu grid; the payoff jumps at the origin.
pub const PUU_GRID_LOWER: f64 = 0.01;

impl Duopoly {
    pub fn cournot(l: f64) -> Result<Self, ContinuousError> {
        if !(l.is_finite() && l > 0.0) {
            return Err(ContinuousError::BadParameters(format!("Cournot needs L > 0, got {l}")));
        }
        Ok(Self::Cournot { l })
    }

    pub fn puu(l: f64) -> Result<Self, ContinuousError> {
        if !(l.is_finite() && l > 1.0) {
            return Err(ContinuousError::BadParameters(format!("Puu needs L > 1, got {l}")));
        }
        Ok(Self::Puu { l })
    }

    /// `x_max` defaults to `100·L` when `None`.
    pub fn diminishing_cost(l: f64, c: f64, x_max: Option<f64>) -> Result<Self, ContinuousError> {
        if !(c.is_finite() && c > 0.0 && l.is_finite() && l >= 2.0 * c) {
            return Err(ContinuousError::BadParameters(format!("diminishing cost needs L >= 2C > 0, got L={l}, C={c}")));
        }
        let x_max = x_max.unwrap_or(100.0 * l);
        if !(x_max.is_finite() && x_max > 0.0) {
            return Err(ContinuousError::BadParameters(format!("Xmax must be positive, got {x_max}")));
        }
        Ok(Self::DiminishingCost { l, c, x_max })
    }

    pub fn l(&self) -> f64 {
        match *self {
            Self::Cournot { l } | Self::Puu { l } | Self::DiminishingCost { l, .. } => l,
        }
    }

    /// Upper end of the strategy interval `[0, upper]`.
    pub fn upper(&self) -> f64 {
        match *self {
            Self::Cournot { l } | Self::Puu { l } => l,
            Self::DiminishingCost { x_max, .. } => x_max,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Cournot { .. } => "cournot",
            Self::Puu { .. } => "puu",
            Self::DiminishingCost { .. } => "dimcost",
        }
    }

    /// Grid used by the oracle when none is given: the whole domain, except
    /// that Puu starts at [`PUU_GRID_LOWER`].
    pub fn default_grid(&self, points: usize) -> Result<GridSpec, ContinuousError> {
        let lower = if matches!(self, Self::Puu { .. }) { PUU_GRID_LOWER } else { 0.0 };
        GridSpec::new(lower, self.upper(), points)
    }

    fn check(&self, x: f64, y: f64) -> Result<(), ContinuousError> {
        let u = self.upper();
        let inside = |v: f64| (0.0..=u).contains(&v);
        if inside(x) && inside(y) {
            Ok(())
        } else {
            Err(ContinuousError::Domain(x, y, u))
        }
    }
}

impl fmt::Display for Duopoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Cournot { l } => write!(f, "cournot(L={})", sig12(l)),
            Self::Puu { l } => write!(f, "puu(L={})", sig12(l)),
            Self::DiminishingCost { l, c, x_max } => {
                write!(f, "dimcost(L={},C={},Xmax={})", sig12(l), sig12(c), sig12(x_max))
            }
        }
    }
}

fn own_payoff(d: &Duopoly, x: f64, y: f64) -> f64 {
    match *d {
        Duopoly::Cournot { l } => x * (l - x - y),
        Duopoly::Puu { l } => {
            if x + y == 0.0 {
                0.0
            } else {
                (l / (x + y) - 1.0) * x
            }
        }
        Duopoly::DiminishingCost { l, c, .. } => {
            if x == 0.0 {
                0.0
            } else {
                l * x / (x + y) - c / x
            }
        }
    }
}

fn own_flat(d: &Duopoly, x: f64, y: f64) -> f64 {
    match *d {
        Duopoly::Cournot { l } => x * y.min(l - x - y),
        Duopoly::Puu { .. } => y.min(own_payoff(d, x, y)),
        Duopoly::DiminishingCost { c, .. } => {
            if x == 0.0 {
                0.0
            } else {
                -c / x
            }
        }
    }
}

/// Orients `(x, y)` so that the first coordinate is `player`'s own quantity.
fn oriented(x: f64, y: f64, player: Player) -> (f64, f64) {
    match player {
        Player::One => (x, y),
        Player::Two => (y, x),
    }
}

pub fn payoff(d: &Duopoly, x: f64, y: f64, player: Player) -> Result<f64, ContinuousError> {
    d.check(x, y)?;
    let (a, b) = oriented(x, y, player);
    Ok(own_payoff(d, a, b))
}

/// Closed-form lower payoff. For the diminishing-cost model this is the
/// untruncated infimum `−C/x`.
pub fn analytic_flat_payoff(d: &Duopoly, x: f64, y: f64, player: Player) -> Result<f64, ContinuousError> {
    d.check(x, y)?;
    let (a, b) = oriented(x, y, player);
    Ok(own_flat(d, a, b))
}

fn exact_payoff(d: &Duopoly, params: &[Rational], x: &Rational, y: &Rational) -> Rational {
    match d {
        Duopoly::Cournot { .. } => x * &(&params[0] - x - y),
        Duopoly::Puu { .. } => {
            let s = x + y;
            match s.recip() {
                None => Rational::zero(),
                Some(inv) => (&params[0] * &inv - Rational::one()) * x,
            }
        }
        Duopoly::DiminishingCost { .. } => match x.recip() {
            None => Rational::zero(),
            Some(inv) => {
                let share = &params[0] * x * (x + y).recip().expect("x > 0");
                share - &params[1] * &inv
            }
        },
    }
}

/// Uniform grid with both endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    lower: f64,
    upper: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(lower: f64, upper: f64, points: usize) -> Result<Self, ContinuousError> {
        if points < 2 {
            return Err(ContinuousError::BadGrid(format!("need at least 2 points, got {points}")));
        }
        if !(lower.is_finite() && upper.is_finite() && lower < upper) {
            return Err(ContinuousError::BadGrid(format!("bounds [{lower}, {upper}] are not increasing")));
        }
        Ok(Self { lower, upper, points })
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn step(&self) -> f64 {
        (self.upper - self.lower) / (self.points - 1) as f64
    }

    /// Nodes as exact rationals: the bounds are snapped to their decimal
    /// spelling and the interior is spaced exactly.
    pub fn exact_nodes(&self) -> Vec<Rational> {
        let lo = Rational::from_f64_decimal(self.lower).expect("finite");
        let hi = Rational::from_f64_decimal(self.upper).expect("finite");
        let step = (&hi - &lo) / Rational::from((self.points - 1) as i64);
        (0..self.points).map(|i| &lo + &(&step * &Rational::from(i as i64))).collect()
    }

    pub fn nodes(&self) -> Vec<f64> {
        self.exact_nodes().iter().map(Rational::to_f64).collect()
    }
}

/// The finite game on `grid × grid` with exact payoffs at the nodes.
pub fn discretize(d: &Duopoly, grid: &GridSpec) -> Result<FiniteGame, ContinuousError> {
    d.check(grid.lower, grid.upper)?;
    let snap = |v: f64| Rational::from_f64_decimal(v).expect("validated parameter");
    let params = match *d {
        Duopoly::Cournot { l } | Duopoly::Puu { l } => vec![snap(l)],
        Duopoly::DiminishingCost { l, c, .. } => vec![snap(l), snap(c)],
    };
    let nodes = grid.exact_nodes();
    let n = nodes.len();
    let title = format!("{d} on {} nodes", n);
    FiniteGame::from_fn(n, n, &title, |r, c| {
        (exact_payoff(d, &params, &nodes[r], &nodes[c]), exact_payoff(d, &params, &nodes[c], &nodes[r]))
    })
    .map_err(|e| ContinuousError::BadGrid(e.to_string()))
}

/// Outcome of comparing the grid lower payoff with the closed form.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatComparison {
    pub cells: usize,
    /// Largest `|grid − closed form|` over the compared cells and both players.
    pub max_deviation: f64,
    /// Largest `deviation − budget(cell)`; non-positive means every cell is within budget.
    pub max_excess: f64,
    /// Budget at the cell attaining `max_excess`.
    pub budget_at_worst: f64,
    pub worst: (f64, f64),
}

impl FlatComparison {
    pub fn within_budget(&self) -> bool {
        self.max_excess <= 1e-12
    }
}

/// Allowed gap between the grid lower payoff of player 1 at `(x, ·)` and the
/// closed form, from a modulus of continuity of the payoff in the co-player's
/// quantity plus, for the truncated model, the distance of the truncated
/// infimum from `−C/x`.
pub fn continuity_budget(d: &Duopoly, grid: &GridSpec, x: f64) -> f64 {
    let step = grid.step();
    match *d {
        Duopoly::Cournot { l } => l * step,
        // |∂P/∂y| = Lx/(x+y)² ≤ L/(4y) ≤ L/(4·lower).
        Duopoly::Puu { l } => l * step / (4.0 * grid.lower.max(f64::MIN_POSITIVE)),
        Duopoly::DiminishingCost { l, x_max, .. } => l * x / (x + x_max) + l * step,
    }
}

struct Comparator<'a> {
    d: &'a Duopoly,
    grid: &'a GridSpec,
    nodes: Vec<f64>,
    out: FlatComparison,
}

impl<'a> Comparator<'a> {
    fn new(d: &'a Duopoly, grid: &'a GridSpec) -> Self {
        let out = FlatComparison {
            cells: 0,
            max_deviation: 0.0,
            max_excess: f64::NEG_INFINITY,
            budget_at_worst: 0.0,
            worst: (f64::NAN, f64::NAN),
        };
        Self { d, grid, nodes: grid.nodes(), out }
    }

    fn record(&mut self, p: PureProfile, grid_flat: [f64; 2]) {
        let (x, y) = (self.nodes[p.row], self.nodes[p.col]);
        self.out.cells += 1;
        for (player, value) in Player::BOTH.into_iter().zip(grid_flat) {
            let (a, b) = oriented(x, y, player);
            let dev = (value - own_flat(self.d, a, b)).abs();
            let budget = continuity_budget(self.d, self.grid, a);
            self.out.max_deviation = self.out.max_deviation.max(dev);
            if dev - budget > self.out.max_excess {
                self.out.max_excess = dev - budget;
                self.out.budget_at_worst = budget;
                self.out.worst = (x, y);
            }
        }
    }
}

/// Grid lower payoffs of every profile against the closed form.
pub fn verify_flat_closed_form(d: &Duopoly, grid: &GridSpec) -> Result<FlatComparison, ContinuousError> {
    let g = discretize(d, grid)?;
    let flat = flat_game(&g);
    let mut cmp = Comparator::new(d, grid);
    for p in g.profiles() {
        let f = Player::BOTH.map(|pl| flat.lower_payoff(pl, p).to_f64());
        cmp.record(p, f);
    }
    Ok(cmp.out)
}

/// Same comparison at `cells` seeded random profiles, with each grid lower
/// payoff evaluated directly from its definition.
pub fn verify_flat_closed_form_sampled(
    d: &Duopoly,
    grid: &GridSpec,
    cells: usize,
    seed: u64,
) -> Result<FlatComparison, ContinuousError> {
    let g = discretize(d, grid)?;
    let mut r = rng(seed);
    let mut cmp = Comparator::new(d, grid);
    for _ in 0..cells {
        let p = PureProfile::new(r.gen_range(0..grid.points), r.gen_range(0..grid.points));
        let f = Player::BOTH.map(|pl| lower_payoff(&g, pl, p).to_f64());
        cmp.record(p, f);
    }
    Ok(cmp.out)
}

fn sampled_stability(
    d: &Duopoly,
    point: (f64, f64),
    samples: usize,
    tol: f64,
    value: fn(&Duopoly, f64, f64) -> f64,
) -> Result<bool, ContinuousError> {
    d.check(point.0, point.1)?;
    if samples < 2 {
        return Err(ContinuousError::BadGrid(format!("need at least 2 samples, got {samples}")));
    }
    let axis = GridSpec::new(0.0, d.upper(), samples)?.nodes();
    for player in Player::BOTH {
        let (own, other) = oriented(point.0, point.1, player);
        let base = value(d, own, other);
        if axis.iter().any(|&dev| value(d, dev, other) > base + tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No deviation on a uniform `samples`-point axis raises either player's
/// closed-form lower payoff by more than `tol`. A positive `tol` doubles as
/// an ε-m-equilibrium test.
pub fn verify_me_membership(d: &Duopoly, point: (f64, f64), samples: usize, tol: f64) -> Result<bool, ContinuousError> {
    sampled_stability(d, point, samples, tol, own_flat)
}

/// Plain Nash test on the raw payoffs, sampled like [`verify_me_membership`].
pub fn verify_ne(d: &Duopoly, point: (f64, f64), samples: usize, tol: f64) -> Result<bool, ContinuousError> {
    sampled_stability(d, point, samples, tol, own_payoff)
}

/// A piece of a closed-form m-equilibrium set.
#[derive(Debug, Clone, PartialEq)]
pub enum Piece {
    Segment { from: (f64, f64), to: (f64, f64) },
    /// `{x, y ≥ 0, x + y ≤ side}`.
    Triangle { side: f64 },
    Point((f64, f64)),
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0);
    dist(p, (a.0 + t * dx, a.1 + t * dy))
}

impl Piece {
    pub fn distance(&self, p: (f64, f64)) -> f64 {
        match *self {
            Piece::Segment { from, to } => segment_distance(p, from, to),
            Piece::Point(q) => dist(p, q),
            Piece::Triangle { side } => {
                let (x, y) = p;
                if x >= 0.0 && y >= 0.0 && x + y <= side {
                    return 0.0;
                }
                let corners = [(0.0, 0.0), (side, 0.0), (0.0, side)];
                (0..3).map(|i| segment_distance(p, corners[i], corners[(i + 1) % 3])).fold(f64::INFINITY, f64::min)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeRegion {
    pub pieces: Vec<Piece>,
}

impl MeRegion {
    pub fn distance(&self, p: (f64, f64)) -> f64 {
        self.pieces.iter().map(|piece| piece.distance(p)).fold(f64::INFINITY, f64::min)
    }

    /// Weak inequality on closed pieces, widened by `tol`.
    pub fn contains(&self, p: (f64, f64), tol: f64) -> bool {
        self.distance(p) <= tol
    }

    /// Grid nodes within half a step of the region.
    pub fn on_grid(&self, grid: &GridSpec) -> Vec<(f64, f64)> {
        let nodes = grid.nodes();
        let reach = grid.step() / 2.0 * (1.0 + 1e-9);
        let mut out = Vec::new();
        for &x in &nodes {
            for &y in &nodes {
                if self.distance((x, y)) <= reach {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Relative tolerance under which `L` counts as equal to `L*`.
pub const LSTAR_MATCH: f64 = 1e-9;

/// Points of the exceptional pair at `L`.
pub fn puu_exceptional_points(l: f64) -> [(f64, f64); 2] {
    let s = l.sqrt();
    let t = s * (l.powf(0.25) - 1.0);
    [(s, t), (t, s)]
}

/// The closed-form m-equilibrium set.
pub fn analytic_me_set(d: &Duopoly) -> MeRegion {
    let pieces = match *d {
        Duopoly::Cournot { l } => vec![
            Piece::Segment { from: (0.0, l), to: (l / 3.0, l / 3.0) },
            Piece::Segment { from: (l / 3.0, l / 3.0), to: (l, 0.0) },
        ],
        Duopoly::Puu { l } => {
            let mut v = vec![Piece::Triangle { side: l.sqrt() }];
            let star = lstar(1e-13).expect("positive tolerance").root;
            if ((l - star) / star).abs() <= LSTAR_MATCH {
                v.extend(puu_exceptional_points(l).map(Piece::Point));
            }
            if l > 16.0 {
                v.push(Piece::Point((l / 4.0, l / 4.0)));
            }
            v
        }
        Duopoly::DiminishingCost { .. } => vec![Piece::Point((0.0, 0.0))],
    };
    MeRegion { pieces }
}

/// `(1+L)⁴ − L⁵`, expanded as `1+4L+6L²+4L³+L⁴−L⁵`.
pub fn puu_polynomial(l: f64) -> f64 {
    (1.0 + l).powi(4) - l.powi(5)
}

fn puu_polynomial_exact(l: &Rational) -> Rational {
    let a = Rational::one() + l.clone();
    let a2 = &a * &a;
    let l2 = l * l;
    &a2 * &a2 - &(&l2 * &l2) * l
}

/// Bisection result for the positive root of the Puu polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct LStar {
    pub root: f64,
    pub bracket: (f64, f64),
    /// Exact polynomial values at the final bracket ends.
    pub signs: (Rational, Rational),
    pub iterations: usize,
}

impl LStar {
    /// The polynomial changes sign across the bracket, checked in exact arithmetic.
    pub fn certified(&self) -> bool {
        self.signs.0.is_positive() && self.signs.1.is_negative() && self.bracket.0 <= self.root && self.root <= self.bracket.1
    }
}

/// Positive root of `(1+L)⁴ − L⁵`, bracketed by `[3, 4]` and bisected until the
/// half-width is at most `tol`.
pub fn lstar(tol: f64) -> Result<LStar, ContinuousError> {
    if !(tol > 0.0) {
        return Err(ContinuousError::BadTolerance(tol));
    }
    let (mut lo, mut hi) = (3.0_f64, 4.0_f64);
    assert!(puu_polynomial(lo) > 0.0 && puu_polynomial(hi) < 0.0, "bracket lost its sign change");
    let mut iterations = 0;
    while (hi - lo) / 2.0 > tol {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        if puu_polynomial(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let exact = |v: f64| Rational::from_f64_exact(v).expect("finite");
    let signs = (puu_polynomial_exact(&exact(lo)), puu_polynomial_exact(&exact(hi)));
    Ok(LStar { root: lo + (hi - lo) / 2.0, bracket: (lo, hi), signs, iterations })
}

/// Symmetric Hausdorff distance between finite point sets.
pub fn hausdorff(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let directed = |from: &[(f64, f64)], to: &[(f64, f64)]| {
        from.iter()
            .map(|&p| to.iter().map(|&q| dist(p, q)).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    directed(a, b).max(directed(b, a))
}

/// Node coordinates of the m-equilibria of the discretized game.
pub fn grid_m_equilibria(d: &Duopoly, grid: &GridSpec) -> Result<Vec<(f64, f64)>, ContinuousError> {
    let g = discretize(d, grid)?;
    let nodes = grid.nodes();
    Ok(flat_game(&g).m_equilibria().into_iter().map(|p| (nodes[p.row], nodes[p.col])).collect())
}

/// `%.12g`-style formatting.
pub fn sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        let s = format!("{v:.11e}");
        let (mantissa, e) = s.split_once('e').expect("exponent");
        let mantissa = if mantissa.contains('.') { mantissa.trim_end_matches('0').trim_end_matches('.') } else { mantissa };
        format!("{mantissa}e{e}")
    }
}
