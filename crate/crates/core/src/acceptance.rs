//! The twelve acceptance criteria, grouped into named suites. Each criterion
//! returns a pass flag, a one-line summary of the worst deviation seen, and its
//! wall time against the allowed budget.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::continuum_zeta::zeta_real_torus;
use crate::graph_zeta::{
    inverse_even_sum_closed, sine_power_sum, xi_z, zeta_z, DiagonalLattice,
};
use crate::lattice_zeta::zeta_zd;
use crate::rh_lab::{
    alpha, h_n, h_n_general, h_ratio_sequence, lemma_scan, negativity_check, theorem1_check,
    theorem3_check, FunctionSpec,
};
use crate::specfn::{completed_xi, riemann_zeta, riemann_zeta_deriv};
use crate::tree_zeta::{zeta_tree_closed, zeta_tree_quadrature};
use crate::{ComplexValue, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Asymptotics,
    Rh,
    Tree,
    All,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Identities => &[1, 2, 3, 11],
            Suite::Asymptotics => &[4, 5, 6, 7],
            Suite::Rh => &[8, 10, 12],
            Suite::Tree => &[9],
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "identities" => Ok(Suite::Identities),
            "asymptotics" => Ok(Suite::Asymptotics),
            "rh" => Ok(Suite::Rh),
            "tree" => Ok(Suite::Tree),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?}; expected identities, asymptotics, rh, tree or all"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<34} {:>8.2} s / {:>3} s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

/// Tracks the largest deviation and whether every sample met its bound.
struct Worst {
    ok: bool,
    max: f64,
    at: String,
}

impl Worst {
    fn new() -> Self {
        Worst { ok: true, max: 0.0, at: String::new() }
    }

    fn record(&mut self, err: f64, bound: f64, at: impl fmt::Display) {
        if !(err <= bound) {
            self.ok = false;
        }
        if !(err <= self.max) || self.at.is_empty() {
            self.max = err;
            self.at = at.to_string();
        }
    }

    fn summary(&self, what: &str) -> String {
        format!("{what} {:.2e} at {}", self.max, self.at)
    }
}

fn rel(got: ComplexValue, want: ComplexValue) -> f64 {
    (got - want).norm() / want.norm()
}

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn binomial(n: u64, k: u64) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

type Check = Result<(bool, String)>;

fn special_values() -> Check {
    let mut w = Worst::new();
    for n in 0..=10u64 {
        let want = binomial(2 * n, n);
        w.record(rel(zeta_z(c(-(n as f64), 0.0))?, c(want, 0.0)), 1e-11, format!("s=-{n}"));
    }
    for n in 1..=10u64 {
        let want = 16f64.powi(n as i32) / (2.0 * PI * n as f64 * binomial(2 * n, n));
        let s = 0.5 - n as f64;
        w.record(rel(zeta_z(c(s, 0.0))?, c(want, 0.0)), 1e-11, format!("s={s}"));
    }
    Ok((w.ok, w.summary("max rel err")))
}

fn functional_equation() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let mut w = Worst::new();
    for _ in 0..200 {
        let s = c(rng.gen_range(-3.0..=3.0), rng.gen_range(-30.0..=30.0));
        let a = xi_z(s)?;
        let b = xi_z(1.0 - s)?;
        w.record((a - b).norm() / (1.0 + a.norm()), 1e-9, format!("s={s:.4}"));
    }
    Ok((w.ok, w.summary("max scaled diff")))
}

fn sine_identities() -> Check {
    let mut inv = Worst::new();
    for n in 2..=10_000u64 {
        let want = ((n * n - 1) as f64) / 3.0;
        inv.record(rel(sine_power_sum(n, c(2.0, 0.0))?, c(want, 0.0)), 1e-10, format!("n={n}"));
    }
    let mut pos = Worst::new();
    for n in 2..=64u64 {
        for m in 1..n {
            let want = n as f64 / 4f64.powi(m as i32) * binomial(2 * m, m);
            let got = sine_power_sum(n, c(-2.0 * m as f64, 0.0))?;
            pos.record(rel(got, c(want, 0.0)), 1e-10, format!("n={n},m={m}"));
        }
    }
    let mut closed = Worst::new();
    for a in 1..=5u64 {
        for n in 2..=100u64 {
            let direct = sine_power_sum(n, c(2.0 * a as f64, 0.0))?;
            let formula = inverse_even_sum_closed(n, a)?;
            closed.record(rel(c(formula, 0.0), direct), 1e-8, format!("n={n},a={a}"));
        }
    }
    Ok((
        inv.ok && pos.ok && closed.ok,
        format!(
            "{}; {}; {}",
            inv.summary("1/sin^2"),
            pos.summary("sin^2m"),
            closed.summary("closed")
        ),
    ))
}

const STRIP_RE: [f64; 4] = [0.15, 0.35, 0.65, 0.85];
const STRIP_IM: [f64; 5] = [0.0, 1.0, 2.5, 5.0, 8.0];

fn strip_grid() -> impl Iterator<Item = ComplexValue> {
    STRIP_RE
        .iter()
        .flat_map(|&x| STRIP_IM.iter().map(move |&y| c(x, y)))
}

fn epstein_consistency() -> Check {
    let circle = DiagonalLattice::unscaled(vec![1])?;
    let mut w = Worst::new();
    for s in strip_grid() {
        let want = 2.0 * (-2.0 * s * (2.0 * PI).ln()).exp() * riemann_zeta(2.0 * s)?;
        w.record(rel(zeta_real_torus(&circle, s)?.value, want), 1e-8, format!("s={s}"));
    }
    let mut zero = Worst::new();
    for a in [vec![1], vec![1, 2]] {
        let l = DiagonalLattice::unscaled(a.clone())?;
        let v = zeta_real_torus(&l, c(0.0, 0.0))?.value;
        zero.record((v + 1.0).norm(), 1e-8, format!("a={a:?}"));
    }
    Ok((w.ok && zero.ok, format!("{}; {}", w.summary("max rel err"), zero.summary("|zeta(0)+1|"))))
}

fn lattice_continuation() -> Check {
    let points = [
        c(0.25, 0.0),
        c(-0.7, 0.0),
        c(0.9, 2.0),
        c(1.3, -1.0),
        c(-2.2, 0.5),
        c(0.1, 5.0),
        c(2.2, 0.0),
        c(0.75, 0.3),
        c(-1.25, 3.0),
        c(0.4, -7.0),
    ];
    let mut w = Worst::new();
    for s in points {
        w.record(rel(zeta_zd(1, s)?.value, zeta_z(s)?), 1e-8, format!("s={s}"));
    }
    let mut zero = Worst::new();
    for d in 1..=4u32 {
        zero.record((zeta_zd(d, c(0.0, 0.0))?.value - 1.0).norm(), 1e-8, format!("d={d}"));
    }
    let mut poles = true;
    for d in 1..=3u32 {
        let p = d as f64 / 2.0;
        let at = zeta_zd(d, c(p, 0.0)).map_err(|e| e.is_pole());
        let near = zeta_zd(d, c(p + 1e-10, 0.0))?.value.norm();
        poles &= at == Err(true) && near > 1e6;
    }
    Ok((
        w.ok && zero.ok && poles,
        format!(
            "{}; {}; poles {}",
            w.summary("max rel err"),
            zero.summary("|zeta(0)-1|"),
            if poles { "detected" } else { "missed" }
        ),
    ))
}

fn discrete_torus_residuals() -> Check {
    let ns: Vec<u64> = (6..=12).map(|k| 1u64 << k).collect();
    let mut ok = true;
    let mut detail = Vec::new();
    for (a, s) in [(vec![1], 0.4), (vec![1, 2], 0.7)] {
        let l = DiagonalLattice::unscaled(a.clone())?;
        let r = theorem1_check(&l, c(s, 0.0), &ns)?;
        let scaled: Vec<f64> = r
            .residuals
            .iter()
            .zip(&ns)
            .map(|(v, &n)| v.norm() / (n as f64).powf(2.0 * s))
            .collect();
        let mono = scaled.windows(2).all(|w| w[1] < w[0]);
        ok &= mono;
        detail.push(format!(
            "a={a:?}: {:.2e}->{:.2e}{}",
            scaled[0],
            scaled[scaled.len() - 1],
            if mono { "" } else { " not monotone" }
        ));
        let z = theorem1_check(&l, c(0.0, 0.0), &ns)?;
        let exact = z.residuals.iter().all(|v| v.norm() == 0.0);
        ok &= exact;
        if !exact {
            detail.push(format!("a={a:?}: s=0 residual nonzero"));
        }
    }
    Ok((ok, detail.join("; ")))
}

fn three_term_model() -> Check {
    let ns = [1000u64, 2000, 4000, 10_000];
    let mut ok = true;
    let mut detail = Vec::new();
    for s in [c(0.3, 0.0), c(0.5, 4.0), c(0.7, 10.0)] {
        let order = theorem3_check(s, &ns)?.order_over_all();
        let bound = s.re - 2.0 + 0.1;
        let pass = order.is_some_and(|o| o <= bound);
        ok &= pass;
        detail.push(format!("s={s}: {:.3} (<= {bound:.2})", order.unwrap_or(f64::NAN)));
    }
    Ok((ok, detail.join("; ")))
}

fn rh_ratio() -> Check {
    let mut ratio = Worst::new();
    let mut used = 0;
    for s in strip_grid() {
        if riemann_zeta(s)?.norm() <= 0.1 {
            continue;
        }
        used += 1;
        let r = h_ratio_sequence(s, &[4000])?[0];
        ratio.record((r - 1.0).abs(), 5e-3, format!("s={s}"));
    }
    let zero = h_ratio_sequence(c(0.5, 14.134725), &[4000])?[0];
    let zero_ok = (zero - 1.0).abs() < 2e-2;
    let mut coef = Worst::new();
    let n = 4000u64;
    for s in [c(0.15, 1.0), c(0.35, 5.0), c(0.5, 4.0), c(0.65, 2.5), c(0.85, 8.0)] {
        let scaled = (h_n(s, n)?.value - 2.0 * completed_xi(s)?) * (n * n) as f64;
        coef.record(rel(scaled, alpha(s)?), 0.01, format!("s={s}"));
    }
    Ok((
        used == 20 && ratio.ok && zero_ok && coef.ok,
        format!(
            "{} points; {}; zero |r-1| {:.2e}; {}",
            used,
            ratio.summary("|r-1|"),
            (zero - 1.0).abs(),
            coef.summary("alpha rel err")
        ),
    ))
}

fn tree_routes() -> Check {
    let mut routes = Worst::new();
    let mut moments = Worst::new();
    for q in [2.0, 3.0, 5.0, 9.0] {
        for s in [c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.5, 0.0), c(0.5, 3.0), c(2.0, 0.0)] {
            let a = zeta_tree_closed(q, s)?.value;
            let b = zeta_tree_quadrature(q, s)?.value;
            routes.record((a - b).norm() / (1.0 + b.norm()), 1e-8, format!("q={q},s={s}"));
        }
        let k = q + 1.0;
        for (s, want) in [(0.0, 1.0), (-1.0, k), (-2.0, k * k + k)] {
            for v in [zeta_tree_closed(q, c(s, 0.0))?, zeta_tree_quadrature(q, c(s, 0.0))?] {
                moments.record((v.value - want).norm(), 1e-8, format!("q={q},s={s}"));
            }
        }
    }
    Ok((
        routes.ok && moments.ok,
        format!("{}; {}", routes.summary("route gap"), moments.summary("moment err")),
    ))
}

fn monotonicity_numerics() -> Check {
    let grid: Vec<f64> = (1..=200).map(|i| i as f64 / 201.0).collect();
    let scan = lemma_scan(30.0, &grid)?;
    let cross = scan.crossing.map(|x| (x - 0.5).abs());
    let two = c(2.0, 0.0);
    let ratio = (-riemann_zeta_deriv(two)? / riemann_zeta(two)?).re;
    let ok = scan.left_increasing
        && scan.right_decreasing
        && cross.is_some_and(|d| d < 1e-6)
        && ratio > 0.5699
        && ratio < 0.5700;
    Ok((
        ok,
        format!(
            "L up {}, R down {}, |crossing-1/2| {:.1e}, -zeta'(2)/zeta(2) = {ratio:.8}",
            scan.left_increasing,
            scan.right_decreasing,
            cross.unwrap_or(f64::NAN)
        ),
    ))
}

fn negativity() -> Check {
    let mut ok = true;
    let mut tightest = f64::INFINITY;
    for i in 1..=19 {
        let r = negativity_check(0.05 * i as f64)?;
        ok &= r.holds;
        tightest = tightest.min(r.bound - r.zeta);
    }
    let half = negativity_check(0.5)?.zeta;
    ok &= (half + 1.460_354_5).abs() <= 1e-6;
    Ok((ok, format!("min margin {tightest:.3e}; zeta(1/2) = {half:.10}")))
}

fn general_profile() -> Check {
    let s = c(0.6, 3.0);
    let n = 4000u64;
    let q = FunctionSpec::quartic();
    let model = -q.d3_at_0 / (q.d1_at_0 * PI * PI) * alpha(s)?;
    let scaled = (h_n_general(&q, s, n)?.value - 2.0 * completed_xi(s)?) * (n * n) as f64;
    let quartic_err = rel(scaled, model);
    let sine = FunctionSpec::sine();
    let mut same = Worst::new();
    for (s, n) in [(c(0.6, 3.0), 4000u64), (c(0.3, 1.0), 500), (c(0.5, 14.0), 1000)] {
        same.record(rel(h_n_general(&sine, s, n)?.value, h_n(s, n)?.value), 1e-10, format!("s={s}"));
    }
    Ok((
        quartic_err < 0.02 && same.ok,
        format!("quartic rel err {quartic_err:.2e}; {}", same.summary("sine vs h_n")),
    ))
}

struct Criterion {
    id: u8,
    title: &'static str,
    budget_secs: u64,
    run: fn() -> Check,
}

const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, title: "special values of zeta_Z", budget_secs: 1, run: special_values },
    Criterion { id: 2, title: "xi_Z functional equation", budget_secs: 1, run: functional_equation },
    Criterion { id: 3, title: "finite sine identities", budget_secs: 10, run: sine_identities },
    Criterion { id: 4, title: "continuous torus vs Riemann zeta", budget_secs: 30, run: epstein_consistency },
    Criterion { id: 5, title: "Z^d continuation", budget_secs: 60, run: lattice_continuation },
    Criterion { id: 6, title: "discrete torus residuals", budget_secs: 120, run: discrete_torus_residuals },
    Criterion { id: 7, title: "three-term sine sum model", budget_secs: 60, run: three_term_model },
    Criterion { id: 8, title: "h_n ratio experiment", budget_secs: 120, run: rh_ratio },
    Criterion { id: 9, title: "tree route equivalence", budget_secs: 10, run: tree_routes },
    Criterion { id: 10, title: "monotonicity lemma numerics", budget_secs: 10, run: monotonicity_numerics },
    Criterion { id: 11, title: "negativity of zeta on (0,1)", budget_secs: 1, run: negativity },
    Criterion { id: 12, title: "general profile h_n[f]", budget_secs: 60, run: general_profile },
];

/// Runs one criterion by number (1 to 12).
pub fn run_criterion(id: u8) -> Option<Outcome> {
    let crit = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let result = (crit.run)();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(crit.budget_secs);
    let (passed, detail) = match result {
        Ok((ok, detail)) if elapsed < budget => (ok, detail),
        Ok((_, detail)) => (false, format!("over time budget; {detail}")),
        Err(e) => (false, format!("error: {e}")),
    };
    Some(Outcome { id, title: crit.title, passed, detail, elapsed, budget })
}

pub fn run_suite(suite: Suite) -> Vec<Outcome> {
    suite
        .criteria()
        .iter()
        .filter_map(|&id| run_criterion(id))
        .collect()
}
