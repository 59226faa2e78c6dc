//! Exact analysis of normal-form games.
//!
//! Finite games carry [`Rational`] payoffs so that every concept defined by
//! payoff *equality* (semi-strict equilibria, coupling in wealth improvement,
//! not-worse responses) is decided exactly. On top of the classical solution
//! concepts the crate builds the lower-payoff ("flat") game and its Nash
//! equilibria, the m-equilibria.
//!
//! Module map:
//!
//! * [`rational`], [`game`], [`builtins`]: values, the bimatrix container and
//!   the catalogue of named games.
//! * [`equilibrium`]: Pareto, Wald, maximin and the Nash refinements.
//! * [`flatten`]: not-worse responses, lower payoffs, flat games, m-equilibria.
//! * [`mixed`]: mixed extensions, support enumeration, lotteries, selection.
//! * [`continuous`]: parametric duopolies with closed forms and grid oracles.
//! * [`multiplayer`]: N-player lower payoffs over virtual coalitions.
//! * [`format`]: the JSON and matrix text formats.

pub mod builtins;
pub mod continuous;
pub mod equilibrium;
pub mod flatten;
pub mod format;
pub mod game;
mod linalg;
pub mod mixed;
pub mod multiplayer;
mod ordinal;
pub mod rational;
pub mod sample;

pub use equilibrium::{classify, ClassificationReport, Concepts};
pub use flatten::{flat_game, m_equilibria, FlatGameResult};
pub use game::{FiniteGame, GameError, Player, PureProfile};
pub use rational::Rational;
