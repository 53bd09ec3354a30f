use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattice_zeta_core::acceptance::Suite;
use lattice_zeta_core::graph_zeta::DiagonalLattice;
use lattice_zeta_core::rh_lab::FunctionSpec;
use lattice_zeta_core::ComplexValue;

pub const MAX_GRID_POINTS: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "lattice-zeta",
    version,
    about = "Spectral zeta functions of graphs, lattices, tori and regular trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one target at a single s.
    Eval(JobArgs),
    /// Evaluate one target over a grid of s values.
    Sweep(JobArgs),
    /// Run an acceptance suite: identities, asymptotics, rh, tree or all.
    Check {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "zZ")]
    ZetaZ,
    #[value(name = "xiZ")]
    XiZ,
    #[value(name = "cycle")]
    Cycle,
    #[value(name = "torus-d")]
    TorusD,
    #[value(name = "zd")]
    Zd,
    #[value(name = "rtorus")]
    RTorus,
    #[value(name = "tree")]
    Tree,
    #[value(name = "h")]
    H,
    #[value(name = "h-ratio")]
    HRatio,
    #[value(name = "S")]
    S,
    #[value(name = "fe-diff")]
    FeDiff,
    #[value(name = "thm1")]
    Thm1,
    #[value(name = "lemma-scan")]
    LemmaScan,
    #[value(name = "negativity")]
    Negativity,
    #[value(name = "wintner")]
    Wintner,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct JobArgs {
    /// Target function (alternatively --target).
    #[arg(value_enum)]
    pub target: Option<Target>,
    #[arg(long = "target", value_enum, id = "target_flag")]
    pub target_flag: Option<Target>,
    /// Complex argument as "re,im".
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub s: Option<ComplexValue>,
    /// Grid "re0:re1:k,im0:im1:m" (k and m points, endpoints included).
    #[arg(long = "s-grid", allow_hyphen_values = true, value_parser = parse_grid)]
    pub s_grid: Option<Grid>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long = "n-list", value_delimiter = ',')]
    pub n_list: Option<Vec<u64>>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Diagonal lattice entries "a1,a2,...".
    #[arg(long, value_delimiter = ',')]
    pub a: Option<Vec<u64>>,
    /// Tree branching parameter q > 1.
    #[arg(long)]
    pub q: Option<f64>,
    /// Profile for h: sin or quartic.
    #[arg(long, default_value = "sin")]
    pub f: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub from: f64,
    pub to: f64,
    pub points: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.from];
        }
        let step = (self.to - self.from) / (self.points - 1) as f64;
        (0..self.points).map(|i| self.from + step * i as f64).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub re: Axis,
    pub im: Axis,
}

impl Grid {
    /// Row-major: real part outer, imaginary part inner.
    pub fn points(&self) -> Vec<ComplexValue> {
        let im = self.im.values();
        self.re
            .values()
            .into_iter()
            .flat_map(|x| im.iter().map(move |&y| ComplexValue::new(x, y)))
            .collect()
    }
}

fn parse_f64(text: &str) -> Result<f64, String> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {text:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not finite: {text:?}"))
    }
}

pub fn parse_complex(text: &str) -> Result<ComplexValue, String> {
    match text.split_once(',') {
        Some((re, im)) => Ok(ComplexValue::new(parse_f64(re)?, parse_f64(im)?)),
        None => Err(format!("expected re,im but got {text:?}")),
    }
}

fn parse_axis(text: &str) -> Result<Axis, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [from, to, points] = parts.as_slice() else {
        return Err(format!("expected start:end:points but got {text:?}"));
    };
    let points: usize = points
        .trim()
        .parse()
        .map_err(|_| format!("bad point count in {text:?}"))?;
    if points == 0 {
        return Err(format!("point count must be positive in {text:?}"));
    }
    Ok(Axis { from: parse_f64(from)?, to: parse_f64(to)?, points })
}

pub fn parse_grid(text: &str) -> Result<Grid, String> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| format!("expected re0:re1:k,im0:im1:m but got {text:?}"))?;
    let grid = Grid { re: parse_axis(re)?, im: parse_axis(im)? };
    if grid.re.points.saturating_mul(grid.im.points) > MAX_GRID_POINTS {
        return Err(format!("grid exceeds {MAX_GRID_POINTS} points"));
    }
    Ok(grid)
}

fn parse_suite(text: &str) -> Result<Suite, String> {
    text.parse()
}

/// A fully validated request.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub target: Target,
    pub s_values: Vec<ComplexValue>,
    pub n_list: Vec<u64>,
    pub d: usize,
    pub lattice: Option<DiagonalLattice>,
    pub q: Option<f64>,
    pub profile: FunctionSpec,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl JobSpec {
    pub fn from_args(args: JobArgs, sweep: bool) -> Result<Self, String> {
        let target = match (args.target, args.target_flag) {
            (Some(t), None) | (None, Some(t)) => t,
            (Some(a), Some(b)) if a == b => a,
            (None, None) => return Err("a target is required".into()),
            _ => return Err("exactly one target may be given".into()),
        };
        let s_values = match (args.s, args.s_grid) {
            (Some(_), Some(_)) => return Err("give either --s or --s-grid, not both".into()),
            (Some(s), None) => vec![s],
            (None, Some(g)) if sweep => g.points(),
            (None, Some(_)) => return Err("--s-grid needs the sweep command".into()),
            (None, None) => return Err("--s is required".into()),
        };
        let n_list = match (args.n, args.n_list) {
            (Some(_), Some(_)) => return Err("give either --n or --n-list, not both".into()),
            (Some(n), None) => vec![n],
            (None, Some(list)) => list,
            (None, None) => Vec::new(),
        };
        let d = match (&args.a, args.d) {
            (Some(a), Some(d)) if a.len() != d => {
                return Err(format!("--d={d} disagrees with {} lattice entries", a.len()))
            }
            (Some(a), _) => a.len(),
            (None, Some(d)) => d,
            (None, None) => 1,
        };
        if d == 0 {
            return Err("dimension must be at least 1".into());
        }
        let lattice = match target {
            Target::TorusD | Target::RTorus | Target::Thm1 => {
                let entries = args.a.clone().unwrap_or_else(|| vec![1; d]);
                Some(DiagonalLattice::unscaled(entries).map_err(|e| e.to_string())?)
            }
            _ => None,
        };
        let needs_n = matches!(
            target,
            Target::Cycle
                | Target::TorusD
                | Target::H
                | Target::HRatio
                | Target::S
                | Target::FeDiff
                | Target::Thm1
                | Target::Wintner
        );
        if needs_n && n_list.is_empty() {
            return Err("this target needs --n or --n-list".into());
        }
        if target == Target::Tree && args.q.is_none() {
            return Err("the tree target needs --q".into());
        }
        let profile = FunctionSpec::builtin(&args.f).map_err(|e| e.to_string())?;
        Ok(JobSpec {
            target,
            s_values,
            n_list,
            d,
            lattice,
            q: args.q,
            profile,
            out: args.out,
            format: args.format,
        })
    }
}
