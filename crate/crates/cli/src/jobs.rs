use lattice_zeta_core::continuum_zeta::zeta_real_torus;
use lattice_zeta_core::graph_zeta::{xi_z, zeta_cycle, zeta_discrete_torus, zeta_z};
use lattice_zeta_core::lattice_zeta::zeta_zd;
use lattice_zeta_core::rh_lab::{
    alpha, approx_fe_report, h_n_general, h_ratio_sequence, lemma_scan, multiple_zero_s,
    negativity_check, precision_warning, theorem1_check, wintner_probe, ExpansionReport,
};
use lattice_zeta_core::specfn::completed_xi;
use lattice_zeta_core::tree_zeta::{zeta_tree_closed, zeta_tree_quadrature};
use lattice_zeta_core::{ComplexValue, EvalResult, Result};
use serde::{Deserialize, Serialize};

use crate::args::{JobSpec, Target};

const SCAN_GRID_POINTS: u64 = 200;

/// One output record; the same columns serve every target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub re_s: f64,
    pub im_s: f64,
    pub n: Option<u64>,
    pub d: Option<usize>,
    pub re_value: f64,
    pub im_value: f64,
    pub abs_err_est: Option<f64>,
    pub extra: String,
}

impl Row {
    fn new(s: ComplexValue, value: ComplexValue) -> Self {
        Row {
            re_s: s.re,
            im_s: s.im,
            n: None,
            d: None,
            re_value: value.re,
            im_value: value.im,
            abs_err_est: None,
            extra: String::new(),
        }
    }

    fn from_eval(s: ComplexValue, r: EvalResult) -> Self {
        Row { abs_err_est: Some(r.abs_err), ..Row::new(s, r.value) }
    }

    fn n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    fn d(mut self, d: usize) -> Self {
        self.d = Some(d);
        self
    }

    fn extra(mut self, extra: String) -> Self {
        self.extra = extra;
        self
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn cnum(z: ComplexValue) -> String {
    format!("{}{:+.16e}i", num(z.re), z.im)
}

/// Independent units of work, in output order.
pub fn units(spec: &JobSpec) -> Vec<(ComplexValue, Option<u64>)> {
    let per_n = matches!(
        spec.target,
        Target::Cycle | Target::TorusD | Target::H | Target::HRatio | Target::S
    );
    let mut out = Vec::new();
    for &s in &spec.s_values {
        if per_n {
            out.extend(spec.n_list.iter().map(|&n| (s, Some(n))));
        } else {
            out.push((s, None));
        }
    }
    out
}

fn report_rows(s: ComplexValue, d: Option<usize>, r: &ExpansionReport) -> Vec<Row> {
    let order = r.fitted_order.map_or_else(|| "none".to_string(), num);
    (0..r.n_list.len())
        .map(|i| {
            let mut row = Row::new(s, r.values[i]).n(r.n_list[i]).extra(format!(
                "model={};residual={};fitted_order={order}",
                cnum(r.model_total(i)),
                cnum(r.residuals[i])
            ));
            row.d = d;
            row
        })
        .collect()
}

pub fn evaluate(spec: &JobSpec, s: ComplexValue, n: Option<u64>) -> Result<Vec<Row>> {
    let first_n = || n.unwrap_or(spec.n_list[0]);
    Ok(match spec.target {
        Target::ZetaZ => vec![Row::new(s, zeta_z(s)?)],
        Target::XiZ => vec![Row::new(s, xi_z(s)?)],
        Target::Cycle => {
            let n = first_n();
            vec![Row::new(s, zeta_cycle(n, s)?).n(n).d(1)]
        }
        Target::TorusD => {
            let n = first_n();
            let l = spec.lattice.as_ref().expect("lattice").with_scale(n)?;
            vec![Row::new(s, zeta_discrete_torus(&l, s)?).n(n).d(l.dim())]
        }
        Target::Zd => {
            vec![Row::from_eval(s, zeta_zd(spec.d as u32, s)?).d(spec.d)]
        }
        Target::RTorus => {
            let l = spec.lattice.as_ref().expect("lattice");
            vec![Row::from_eval(s, zeta_real_torus(l, s)?).d(l.dim())]
        }
        Target::Tree => {
            let q = spec.q.expect("q");
            let closed = zeta_tree_closed(q, s)?;
            let quad = zeta_tree_quadrature(q, s)?;
            let gap = (closed.value - quad.value).norm();
            vec![Row::from_eval(s, closed).extra(format!("q={};quadrature_gap={}", num(q), num(gap)))]
        }
        Target::H => {
            let n = first_n();
            let f = &spec.profile;
            let r = h_n_general(f, s, n)?;
            let coef = -f.d3_at_0 / (f.d1_at_0 * std::f64::consts::PI.powi(2));
            let model = 2.0 * completed_xi(s)? + coef * alpha(s)? / (n as f64).powi(2);
            let mut extra = format!("f={};model={}", f.label(), cnum(model));
            if let Some(w) = precision_warning(&r) {
                eprintln!("warning: h at s = {s}, n = {n}: {w}");
                extra.push_str(";precision_warning=1");
            }
            vec![Row::from_eval(s, r).n(n).extra(extra)]
        }
        Target::HRatio => {
            let n = first_n();
            let r = h_ratio_sequence(s, &[n])?[0];
            vec![Row::new(s, ComplexValue::new(r, 0.0)).n(n)]
        }
        Target::S => {
            let n = first_n();
            vec![Row::new(s, multiple_zero_s(s, n)?).n(n)]
        }
        Target::FeDiff => report_rows(s, Some(1), &approx_fe_report(s, &spec.n_list)?),
        Target::Thm1 => {
            let l = spec.lattice.as_ref().expect("lattice");
            report_rows(s, Some(l.dim()), &theorem1_check(l, s, &spec.n_list)?)
        }
        Target::LemmaScan => {
            let points = spec.n_list.first().copied().unwrap_or(SCAN_GRID_POINTS).max(2);
            let grid: Vec<f64> = (1..=points).map(|i| i as f64 / (points + 1) as f64).collect();
            let scan = lemma_scan(s.im, &grid)?;
            let crossing = scan.crossing.map_or_else(|| "none".to_string(), num);
            (0..grid.len())
                .map(|i| {
                    Row::new(ComplexValue::new(grid[i], s.im), ComplexValue::new(scan.left[i], 0.0))
                        .extra(format!(
                            "right={};left_increasing={};right_decreasing={};crossing={crossing}",
                            num(scan.right[i]),
                            scan.left_increasing,
                            scan.right_decreasing
                        ))
                })
                .collect()
        }
        Target::Negativity => {
            let r = negativity_check(s.re)?;
            vec![Row::new(ComplexValue::new(s.re, 0.0), ComplexValue::new(r.zeta, 0.0))
                .extra(format!("bound={};holds={}", num(r.bound), r.holds))]
        }
        Target::Wintner => {
            let w = wintner_probe(s.im, &spec.n_list)?;
            let at = ComplexValue::new(1.0, s.im);
            (0..w.n_list.len())
                .map(|i| {
                    Row::new(at, w.sequence[i]).n(w.n_list[i]).extra(format!(
                        "oscillation={};model_residual={};model_amplitude={}",
                        cnum(w.oscillation[i]),
                        cnum(w.model_residual[i]),
                        num(w.model_amplitude)
                    ))
                })
                .collect()
        }
    })
}
