//! Acceptance criteria. Each criterion prints one PASS/FAIL line; failing
//! sub-checks are listed underneath with the measured values.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use flatgame::builtins::{builtin, NAMES};
use flatgame::continuous::{
    analytic_flat_payoff, analytic_me_set, grid_m_equilibria, hausdorff, lstar, payoff, verify_flat_closed_form,
    verify_flat_closed_form_sampled, verify_me_membership, verify_ne, Duopoly, GridSpec,
};
use flatgame::equilibrium::{classify, nash_equilibria, Concepts};
use flatgame::flatten::{flat_game, lower_values, m_equilibria};
use flatgame::mixed::{
    is_mixed_ne, mixed_equilibrium_candidates, pure_equilibrium_lifts, select_equilibrium, MixedProfile, MixedStrategy,
};
use flatgame::multiplayer::{flat_tensor_game, m_equilibria_n, unanimity_game, TensorGame, TensorProfile};
use flatgame::sample::{
    random_competitive_game, random_increasing_table, random_sized_game, random_symmetric_game, rng,
};
use flatgame::{FiniteGame, Player, PureProfile, Rational};
use rand::Rng;

// ---------------------------------------------------------------- oracles

type Set = BTreeSet<PureProfile>;

fn pp(r: usize, c: usize) -> PureProfile {
    PureProfile::new(r - 1, c - 1)
}

fn set(items: &[(usize, usize)]) -> Set {
    items.iter().map(|&(r, c)| pp(r, c)).collect()
}

fn oracle_ne(g: &FiniteGame) -> Set {
    g.profiles()
        .filter(|&p| {
            Player::BOTH.iter().all(|&pl| {
                (0..g.strategies(pl)).all(|s| g.payoff(pl, p.with(pl, s)) <= g.payoff(pl, p))
            })
        })
        .collect()
}

/// Worst own payoff over co-player replies that do not hurt the co-player.
fn oracle_lower(g: &FiniteGame, pl: Player, p: PureProfile) -> Rational {
    let co = pl.other();
    (0..g.strategies(co))
        .map(|t| p.with(co, t))
        .filter(|&q| g.payoff(co, q) >= g.payoff(co, p))
        .map(|q| g.payoff(pl, q).clone())
        .min()
        .expect("status quo is admissible")
}

fn oracle_flat(g: &FiniteGame) -> FiniteGame {
    FiniteGame::from_fn(g.rows(), g.cols(), "oracle flat", |r, c| {
        let p = PureProfile::new(r, c);
        (oracle_lower(g, Player::One, p), oracle_lower(g, Player::Two, p))
    })
    .unwrap()
}

fn oracle_me(g: &FiniteGame) -> Set {
    oracle_ne(&oracle_flat(g))
}

/// Lower payoff of player `i` over explicit coalitions `J ⊆ others` and
/// joint deviations of `J`, each member weakly improving.
fn oracle_lower_n(g: &TensorGame, i: usize, p: &[usize]) -> Rational {
    let n = g.players();
    let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let base = TensorProfile(p.to_vec());
    let mut best = g.payoff(i, &base).clone();
    for mask in 0u32..(1 << others.len()) {
        let members: Vec<usize> = others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &j)| j).collect();
        let combos: usize = members.iter().map(|&j| g.counts()[j]).product();
        for mut code in 0..combos {
            let mut q = p.to_vec();
            for &j in &members {
                q[j] = code % g.counts()[j];
                code /= g.counts()[j];
            }
            let q = TensorProfile(q);
            if members.iter().all(|&j| g.payoff(j, &q) >= g.payoff(j, &base)) && g.payoff(i, &q) < &best {
                best = g.payoff(i, &q).clone();
            }
        }
    }
    best
}

fn flat_matrix(g: &FiniteGame, pl: Player) -> Vec<Vec<Rational>> {
    flat_game(g).flat.payoff_matrix(pl)
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect()
}

// -------------------------------------------------------------- reporting

struct Criterion {
    checks: Vec<(String, bool, String)>,
}

impl Criterion {
    fn new() -> Self {
        Self { checks: Vec::new() }
    }

    fn check(&mut self, label: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push((label.to_string(), ok, detail.into()));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

fn run(number: usize, title: &str, body: impl FnOnce(&mut Criterion)) -> bool {
    let start = Instant::now();
    let mut c = Criterion::new();
    body(&mut c);
    let verdict = if c.passed() { "PASS" } else { "FAIL" };
    let ok = c.checks.iter().filter(|x| x.1).count();
    println!(
        "criterion {number:>2} [{verdict}] {title} ({ok}/{} checks, {:.2}s)",
        c.checks.len(),
        start.elapsed().as_secs_f64()
    );
    for (label, pass, detail) in &c.checks {
        if !pass {
            println!("      failed: {label}: {detail}");
        }
    }
    c.passed()
}

// ------------------------------------------------------------- criteria

fn traveler(c: &mut Criterion) {
    let start = Instant::now();
    let g = builtin("traveler", None).unwrap();
    let ne = nash_equilibria(&g);
    let flat = flat_game(&g);
    let me = flat.m_equilibria();
    let double = flat_game(&flat.flat);
    let ne_double = nash_equilibria(&double.flat);
    let elapsed = start.elapsed().as_secs_f64();

    let value = |s: usize| s as i64 + 2;
    let idx = |v: usize| v - 2;
    let want_ne: Set = [PureProfile::new(idx(2), idx(2))].into();
    let want_me: Set = [PureProfile::new(idx(2), idx(2)), PureProfile::new(idx(100), idx(100))].into();
    c.check("NE = {(2,2)}", ne == want_ne && oracle_ne(&g) == want_ne, format!("{ne:?}"));
    c.check("ME = {(2,2),(100,100)}", me == want_me, format!("{me:?}"));
    c.check("ME agrees with the brute-force flat", oracle_me(&g) == me, "");

    let mut mismatches = Vec::new();
    for p in g.profiles() {
        let (x, y) = (value(p.row), value(p.col));
        let sign = (x - y).signum();
        let formula = Rational::from(x.min(y) - 4 + 2 * sign);
        let mirrored = Rational::from(x.min(y) - 4 - 2 * sign);
        if flat.lower_payoff(Player::One, p) != &formula || flat.lower_payoff(Player::Two, p) != &mirrored {
            mismatches.push((x, y, flat.lower_payoff(Player::One, p).clone()));
        }
    }
    let worst_min = mismatches.iter().map(|m| m.0.min(m.1)).max();
    c.check(
        "flat = min(x,y)-4+2sign(x-y) cellwise",
        mismatches.is_empty(),
        format!(
            "{} of 9801 cells differ, all with min(x,y) <= {:?}; e.g. (x,y)={:?} gives {}",
            mismatches.len(),
            worst_min,
            mismatches.first().map(|m| (m.0, m.1)),
            mismatches.first().map(|m| m.2.to_string()).unwrap_or_default()
        ),
    );
    let interior_ok = g.profiles().filter(|p| value(p.row).min(value(p.col)) >= 6).all(|p| {
        let (x, y) = (value(p.row), value(p.col));
        flat.lower_payoff(Player::One, p) == &Rational::from(x.min(y) - 4 + 2 * (x - y).signum())
    });
    c.check("formula holds where min(x,y) >= 6", interior_ok, "");
    c.check("NE(flat of flat) has 3 elements", ne_double.len() == 3, format!("{ne_double:?}"));
    c.check("NE(flat of flat) != NE(flat)", ne_double != me, "");
    c.check("runtime <= 5 s", elapsed <= 5.0, format!("{elapsed:.2}s"));
}

fn printed_goldens(c: &mut Criterion) {
    let hide = builtin("hide-a-coin", None).unwrap();
    c.check(
        "hide-a-coin flat",
        flat_matrix(&hide, Player::One) == ints(&[&[-10, -10], &[-20, -20]])
            && flat_matrix(&hide, Player::Two) == ints(&[&[-15, -15], &[-15, -15]]),
        "",
    );
    c.check("hide-a-coin ME = {(1,1),(1,2)}", m_equilibria(&hide) == set(&[(1, 1), (1, 2)]), "");
    c.check("hide-a-coin NE empty", nash_equilibria(&hide).is_empty(), "");

    let mp = builtin("matching-pennies", None).unwrap();
    let all_minus_one = Player::BOTH.iter().all(|&pl| flat_matrix(&mp, pl) == ints(&[&[-1, -1], &[-1, -1]]));
    c.check("pennies flat all (-1,-1)", all_minus_one, "");
    c.check("pennies ME = S1 x S2", m_equilibria(&mp) == set(&[(1, 1), (1, 2), (2, 1), (2, 2)]), "");

    let r = classify(&builtin("3-4-5", None).unwrap());
    let has = |p, f| r.flags(p).contains(f);
    c.check("3-4-5 (4,4) in NE \\ WSSNE", has(pp(4, 4), Concepts::NE) && !has(pp(4, 4), Concepts::WSSNE), "");
    c.check("3-4-5 (3,3) in WSSNE \\ SSNE", has(pp(3, 3), Concepts::WSSNE) && !has(pp(3, 3), Concepts::SSNE), "");
    c.check("3-4-5 (2,2) in SSNE \\ SNE", has(pp(2, 2), Concepts::SSNE) && !has(pp(2, 2), Concepts::SNE), "");
    c.check("3-4-5 (1,1) in SNE", has(pp(1, 1), Concepts::SNE), "");

    let g = builtin("me-vs-ne", None).unwrap();
    let r = classify(&g);
    let has = |p, f| r.flags(p).contains(f);
    c.check("me-vs-ne (2,2) in ME and WSSNE", has(pp(2, 2), Concepts::ME | Concepts::WSSNE), "");
    c.check(
        "me-vs-ne (2,3) in ME and NE \\ WSSNE",
        has(pp(2, 3), Concepts::ME | Concepts::NE) && !has(pp(2, 3), Concepts::WSSNE),
        "",
    );
    c.check("me-vs-ne (3,1) in ME \\ NE", has(pp(3, 1), Concepts::ME) && !has(pp(3, 1), Concepts::NE), "");
    c.check(
        "me-vs-ne (3,3) in NE \\ ME and SPO",
        has(pp(3, 3), Concepts::NE | Concepts::SPO) && !has(pp(3, 3), Concepts::ME),
        "",
    );
    c.check("me-vs-ne ME agrees with oracle", r.members(Concepts::ME) == oracle_me(&g), "");

    let coord = builtin("coordination", None).unwrap();
    c.check("coordination NE", nash_equilibria(&coord) == set(&[(1, 1), (2, 2), (3, 3)]), "");

    let ht = builtin("high-threat", None).unwrap();
    let r = classify(&ht);
    c.check(
        "high-threat (1,1) in NE \\ WSSNE",
        r.flags(pp(1, 1)).contains(Concepts::NE) && !r.flags(pp(1, 1)).contains(Concepts::WSSNE),
        "",
    );
    c.check("high-threat ME = {(2,2)}", m_equilibria(&ht) == set(&[(2, 2)]), "");
}

fn prisoners(c: &mut Criterion) {
    let g = builtin("prisoners-dilemma", None).unwrap();
    let defect = set(&[(2, 2)]);
    c.check("NE = {(D,D)}", nash_equilibria(&g) == defect && oracle_ne(&g) == defect, "");
    c.check("ME = {(D,D)}", m_equilibria(&g) == defect && oracle_me(&g) == defect, "");
}

fn properties(c: &mut Criterion) {
    let mut r = rng(0x5eed_0004);
    let mut violations: Vec<String> = Vec::new();
    let mut note = |ok: bool, what: &str, g: &FiniteGame| {
        if !ok && violations.len() < 5 {
            violations.push(format!("{what} on {:?}", g.payoff_matrix(Player::One)));
        }
        ok
    };
    let mut counts = [0usize; 4];
    for _ in 0..500 {
        let g = random_sized_game(&mut r, 5);
        let rep = classify(&g);
        let m = |f| rep.members(f);
        let (ne, sne, ssne, wssne, cwi, me) =
            (m(Concepts::NE), m(Concepts::SNE), m(Concepts::SSNE), m(Concepts::WSSNE), m(Concepts::CWI), m(Concepts::ME));
        note(sne.is_subset(&ssne) && ssne.is_subset(&wssne) && wssne.is_subset(&ne), "inclusion chain", &g);
        note(wssne == ne.intersection(&cwi).copied().collect(), "WSSNE = NE and CWI", &g);
        note(ne == oracle_ne(&g), "NE oracle", &g);
        let flat = flat_game(&g);
        for p in g.profiles() {
            let below = Player::BOTH.iter().all(|&pl| flat.lower_payoff(pl, p) <= g.payoff(pl, p));
            note(below, "lower payoff <= payoff", &g);
            let equal = Player::BOTH.iter().all(|&pl| flat.lower_payoff(pl, p) == g.payoff(pl, p));
            note(equal == cwi.contains(&p), "lower = payoff iff CWI", &g);
            for pl in Player::BOTH {
                note(flat.lower_payoff(pl, p) == &oracle_lower(&g, pl, p), "lower payoff oracle", &g);
            }
        }
        note(wssne.is_subset(&me), "WSSNE within ME", &g);
        note(lower_values(&g).coincide(), "lower values", &g);
        for _ in 0..20 {
            let t1 = random_increasing_table(&mut r, &g, Player::One);
            let t2 = random_increasing_table(&mut r, &g, Player::Two);
            let h = g.apply_monotone_transform(&t1, &t2).unwrap();
            note(m_equilibria(&h) == me, "ME invariance", &g);
            counts[0] += 1;
        }
        counts[1] += 1;
    }
    for _ in 0..500 {
        let n = r.gen_range(1..=5);
        let g = random_symmetric_game(&mut r, n);
        note(flat_game(&g).flat.is_quantitatively_symmetric(), "symmetry preserved", &g);
        counts[2] += 1;
    }
    for _ in 0..500 {
        let (rows, cols) = (r.gen_range(1..=5), r.gen_range(1..=5));
        let g = random_competitive_game(&mut r, rows, cols);
        if !g.is_strictly_competitive() {
            continue;
        }
        let rep = classify(&g);
        note(rep.members(Concepts::NE) == rep.members(Concepts::SSNE), "NE = SSNE", &g);
        let flat = flat_game(&g);
        let per_strategy = g.profiles().all(|p| {
            Player::BOTH.iter().all(|&pl| {
                let co = pl.other();
                let worst = (0..g.strategies(co)).map(|t| g.payoff(pl, p.with(co, t))).min().unwrap();
                flat.lower_payoff(pl, p) == worst
            })
        });
        note(per_strategy, "flat = per-strategy minima", &g);
        note(rep.members(Concepts::WALD).is_subset(&rep.members(Concepts::ME)), "Wald within ME", &g);
        counts[3] += 1;
    }
    c.check(
        "zero violations",
        violations.is_empty(),
        format!("{}", violations.join("; ")),
    );
    c.check("500 random games", counts[1] == 500, format!("{}", counts[1]));
    c.check("20 transforms per game", counts[0] == 500 * 20, format!("{}", counts[0]));
    c.check("500 symmetric games", counts[2] == 500, format!("{}", counts[2]));
    c.check("strictly competitive games sampled", counts[3] >= 100, format!("{}", counts[3]));
}

fn mixed(c: &mut Criterion) {
    let q = |w: &[(i64, i64)]| MixedStrategy::new(w.iter().map(|&(n, d)| Rational::ratio(n, d)).collect()).unwrap();
    let ext = builtin("extended-pennies", None).unwrap();
    let d3 = q(&[(0, 1), (0, 1), (1, 1)]);
    let h = q(&[(1, 2), (1, 2), (0, 1)]);
    let four = [
        MixedProfile::new(d3.clone(), d3.clone()),
        MixedProfile::new(h.clone(), h.clone()),
        MixedProfile::new(h.clone(), d3.clone()),
        MixedProfile::new(d3.clone(), h.clone()),
    ];
    c.check("extended pennies four profiles are mixed NE", four.iter().all(|m| is_mixed_ne(&ext, m).unwrap()), "");
    let found = mixed_equilibrium_candidates(&ext, 3).unwrap();
    c.check("support enumeration recovers them", four.iter().all(|m| found.contains(m)), format!("{found:?}"));

    let mp = builtin("matching-pennies", None).unwrap();
    let half = q(&[(1, 2), (1, 2)]);
    c.check("pennies uniform profile", is_mixed_ne(&mp, &MixedProfile::new(half.clone(), half)).unwrap(), "");

    let builtins_lift = NAMES.iter().all(|name| {
        let g = builtin(name, None).unwrap();
        pure_equilibrium_lifts(&g).all_lift()
    });
    c.check("lift report on builtins", builtins_lift, "");
    let mut r = rng(0x5eed_0005);
    let random_lift = (0..200).all(|_| pure_equilibrium_lifts(&random_sized_game(&mut r, 5)).all_lift());
    c.check("lift report on 200 random games", random_lift, "");

    let bos = builtin("battle-of-sexes", None).unwrap();
    let cands = mixed_equilibrium_candidates(&bos, 2).unwrap();
    let want = [
        MixedProfile::dirac(&bos, pp(1, 1)),
        MixedProfile::dirac(&bos, pp(2, 2)),
        MixedProfile::new(q(&[(3, 5), (2, 5)]), q(&[(2, 5), (3, 5)])),
    ];
    c.check("battle-of-sexes candidates", want.iter().all(|m| cands.contains(m)), format!("{cands:?}"));
}

fn cournot(c: &mut Criterion) {
    let start = Instant::now();
    let l = 1.0;
    let d = Duopoly::cournot(l).unwrap();
    let mut on_set = Vec::new();
    for k in 0..20 {
        let x = (l / 3.0) * k as f64 / 19.0;
        on_set.push((x, l - 2.0 * x));
        let x = l / 3.0 + (2.0 * l / 3.0) * k as f64 / 19.0;
        on_set.push((x, (l - x) / 2.0));
    }
    let bad: Vec<_> = on_set.iter().filter(|&&p| !verify_me_membership(&d, p, 400, 1e-9).unwrap()).collect();
    c.check("40 on-segment points pass", bad.is_empty(), format!("{bad:?}"));

    let region = analytic_me_set(&d);
    let mut r = rng(0x5eed_0006);
    let mut off = Vec::new();
    while off.len() < 10 {
        let p = (r.gen_range(0.0..=l), r.gen_range(0.0..=l));
        if region.distance(p) >= 0.05 {
            off.push(p);
        }
    }
    let passing: Vec<_> = off.iter().filter(|&&p| verify_me_membership(&d, p, 400, 1e-9).unwrap()).collect();
    c.check("10 off-set points fail", passing.is_empty(), format!("{passing:?}"));

    let grid = GridSpec::new(0.0, l, 201).unwrap();
    let me = grid_m_equilibria(&d, &grid).unwrap();
    let analytic = region.on_grid(&grid);
    let h = hausdorff(&me, &analytic);
    let step = grid.step();
    let far: Vec<_> = me.iter().filter(|&&p| region.distance(p) > step).collect();
    println!(
        "      cournot grid: {} ME nodes, {} analytic nodes, Hausdorff {h:.6}, step {step}, ME nodes farther than a step: {far:?}",
        me.len(),
        analytic.len()
    );
    c.check("grid ME within one step (Hausdorff)", h <= step * (1.0 + 1e-9), format!("Hausdorff {h:.6} > step {step}; far nodes {far:?}"));
    let elapsed = start.elapsed().as_secs_f64();
    c.check("runtime <= 10 s", elapsed <= 10.0, format!("{elapsed:.2}s"));
}

fn puu(c: &mut Criterion) {
    for l in [2.0, 8.0, 20.0] {
        let d = Duopoly::puu(l).unwrap();
        let n = (l / 4.0, l / 4.0);
        c.check(&format!("L={l}: (L/4,L/4) passes NE"), verify_ne(&d, n, 400, 1e-9).unwrap(), "");
        let me = verify_me_membership(&d, n, 400, 1e-9).unwrap();
        let expect = l > 16.0;
        c.check(
            &format!("L={l}: (L/4,L/4) {} ME", if expect { "passes" } else { "fails" }),
            me == expect,
            format!(
                "ME check returned {me}; lower payoff {} equals payoff {}",
                analytic_flat_payoff(&d, n.0, n.1, Player::One).unwrap(),
                payoff(&d, n.0, n.1, Player::One).unwrap()
            ),
        );
    }
    let l = 2.0;
    let d = Duopoly::puu(l).unwrap();
    let s = l.sqrt() / 2.0;
    let flat = Player::BOTH.map(|pl| analytic_flat_payoff(&d, s, s, pl).unwrap());
    let nash = Player::BOTH.map(|pl| payoff(&d, l / 4.0, l / 4.0, pl).unwrap());
    c.check(
        "L=2: flat at (sqrt(L)/2, sqrt(L)/2) Pareto dominates (L/4,L/4)",
        flat[0] > nash[0] && flat[1] > nash[1],
        format!("flat {flat:?} vs Nash payoff {nash:?}"),
    );
    let root = lstar(1e-6).unwrap();
    c.check(
        "lstar(1e-6) in [3.0786, 3.0806]",
        (3.0786..=3.0806).contains(&root.root),
        format!("{}", root.root),
    );
    c.check("sign change certified", root.certified(), format!("{:?}", root.signs));
    let grid = d.default_grid(201).unwrap();
    let cmp = verify_flat_closed_form(&d, &grid).unwrap();
    println!(
        "      puu grid on [{}, {}]: max deviation {:.3e}, budget {:.3e}",
        grid.lower(),
        grid.upper(),
        cmp.max_deviation,
        cmp.budget_at_worst
    );
    c.check("grid deviation within continuity budget", cmp.within_budget(), format!("{cmp:?}"));
}

fn diminishing(c: &mut Criterion) {
    let d = Duopoly::diminishing_cost(2.0, 1.0, Some(200.0)).unwrap();
    let grid = GridSpec::new(0.0, 200.0, 201).unwrap();
    let cmp = verify_flat_closed_form_sampled(&d, &grid, 50, 0x5eed_0008).unwrap();
    println!("      dimcost 50 cells: max deviation {:.3e}, worst excess {:.3e}", cmp.max_deviation, cmp.max_excess);
    c.check("grid oracle within truncation budget", cmp.within_budget() && cmp.cells == 50, format!("{cmp:?}"));
    c.check("(0,0) passes ME", verify_me_membership(&d, (0.0, 0.0), 401, 1e-9).unwrap(), "");
    let mut r = rng(0x5eed_0018);
    let interior: Vec<(f64, f64)> =
        (0..30).map(|_| (r.gen_range(0.01..=200.0), r.gen_range(0.01..=200.0))).collect();
    let passing: Vec<_> = interior.iter().filter(|&&p| verify_me_membership(&d, p, 401, 1e-9).unwrap()).collect();
    c.check("every sampled interior point fails", passing.is_empty(), format!("{passing:?}"));
}

fn multiplayer(c: &mut Criterion) {
    let mut games: Vec<FiniteGame> = NAMES.iter().map(|n| builtin(n, None).unwrap()).collect();
    let mut r = rng(0x5eed_0009);
    games.extend((0..200).map(|_| random_sized_game(&mut r, 5)));
    let mut bad = Vec::new();
    for g in &games {
        let t = TensorGame::from_finite(g);
        let tflat = flat_tensor_game(&t).unwrap();
        let flat = flat_game(g);
        let same_lower = g.profiles().all(|p| {
            Player::BOTH.iter().all(|&pl| tflat.payoff(pl.index(), &p.into()) == flat.lower_payoff(pl, p))
        });
        let me: BTreeSet<TensorProfile> = flat.m_equilibria().into_iter().map(Into::into).collect();
        if !same_lower || m_equilibria_n(&t).unwrap() != me {
            bad.push(g.title().to_string());
        }
    }
    c.check("N=2 embedding reproduces lower payoffs and ME", bad.is_empty(), format!("{bad:?}"));

    let u = unanimity_game(3, 2).unwrap();
    let flat = flat_tensor_game(&u).unwrap();
    let exact = u
        .profiles()
        .all(|p| (0..3).all(|i| flat.payoff(i, &p) == &oracle_lower_n(&u, i, &p.0)));
    c.check("unanimity flat tensor equals the coalition oracle", exact, "");
    // Brute-force ME on the oracle tensor: unilateral deviations.
    let mut oracle_me = BTreeSet::new();
    for p in u.profiles() {
        let stable = (0..3).all(|i| {
            (0..2).all(|s| {
                let mut q = p.0.clone();
                q[i] = s;
                oracle_lower_n(&u, i, &q) <= oracle_lower_n(&u, i, &p.0)
            })
        });
        if stable {
            oracle_me.insert(p);
        }
    }
    let me = m_equilibria_n(&u).unwrap();
    c.check("unanimity ME equals the oracle", me == oracle_me, format!("{me:?} vs {oracle_me:?}"));
    c.check(
        "unanimity ME = {(1,1,1),(2,2,2)}",
        me == [TensorProfile(vec![0, 0, 0]), TensorProfile(vec![1, 1, 1])].into(),
        format!("{me:?}"),
    );
}

fn selection(c: &mut Criterion) {
    let bos = builtin("battle-of-sexes", None).unwrap();
    let me: Vec<PureProfile> = m_equilibria(&bos).into_iter().collect();
    c.check("ME = {(1,1),(2,2)}", me == vec![pp(1, 1), pp(2, 2)], format!("{me:?}"));
    let draws = 10_000u64;
    let first = (0..draws).filter(|&seed| select_equilibrium(&me, seed).unwrap() == me[0]).count();
    let freq = first as f64 / draws as f64;
    c.check("frequency 0.5 +/- 0.02", (freq - 0.5).abs() <= 0.02, format!("{freq}"));
    let render = |seed: u64| (0..10u64).map(|k| select_equilibrium(&me, seed + k).unwrap().to_string()).collect::<String>();
    c.check("byte-reproducible per seed", (0..50).all(|s| render(s) == render(s)), "");
}

fn main() -> ExitCode {
    let results = [
        run(1, "traveler's dilemma 2..100", traveler),
        run(2, "printed-matrix goldens", printed_goldens),
        run(3, "prisoner's dilemma", prisoners),
        run(4, "property suites on random games", properties),
        run(5, "mixed extension", mixed),
        run(6, "Cournot L=1", cournot),
        run(7, "Puu duopoly", puu),
        run(8, "diminishing cost L=2 C=1 Xmax=200", diminishing),
        run(9, "multiplayer reduction and unanimity", multiplayer),
        run(10, "seeded selection", selection),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
