use super::QuadResult;
use crate::ComplexValue;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    value: ComplexValue,
    err: f64,
    abs: f64,
}

fn gk15<F: Fn(f64) -> ComplexValue>(f: &F, a: f64, b: f64) -> Piece {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.norm() * WGK[7];
    let mut values = [(ComplexValue::default(), ComplexValue::default()); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = (f1, f2);
        kronrod += (f1 + f2) * WGK[j];
        abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = kronrod * 0.5;
    let mut asc = (fc - mean).norm() * WGK[7];
    for j in 0..7 {
        asc += ((values[j].0 - mean).norm() + (values[j].1 - mean).norm()) * WGK[j];
    }
    let value = kronrod * half;
    let abs = abs * half.abs();
    let asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).norm();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    if abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * abs);
    }
    Piece {
        a,
        b,
        value,
        err,
        abs,
    }
}

/// Globally adaptive 15-point Gauss–Kronrod quadrature of a complex integrand
/// on a finite interval. Refinement stops when the error estimate drops below
/// max(abs_tol, rel_tol·|I|) or after `max_pieces` subintervals.
pub fn gauss_kronrod<F: Fn(f64) -> ComplexValue>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_pieces: usize,
) -> QuadResult {
    let mut pieces = vec![gk15(f, a, b)];
    loop {
        let value: ComplexValue = pieces.iter().map(|p| p.value).sum();
        let err: f64 = pieces.iter().map(|p| p.err).sum();
        let abs: f64 = pieces.iter().map(|p| p.abs).sum();
        let target = abs_tol.max(rel_tol * value.norm());
        if err <= target || pieces.len() >= max_pieces {
            return QuadResult {
                value,
                abs_err: err,
                abs_integral: abs,
            };
        }
        let (worst, _) = pieces
            .iter()
            .enumerate()
            .fold((0, -1.0), |acc, (i, p)| if p.err > acc.1 { (i, p.err) } else { acc });
        let p = pieces.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if mid <= p.a || mid >= p.b {
            return QuadResult {
                value,
                abs_err: err,
                abs_integral: abs,
            };
        }
        pieces.push(gk15(f, p.a, mid));
        pieces.push(gk15(f, mid, p.b));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_oscillatory_integrals() {
        let r = gauss_kronrod(&|x: f64| ComplexValue::new(x.powi(6), 0.0), 0.0, 2.0, 1e-15, 1e-15, 50);
        assert!((r.value.re - 128.0 / 7.0).abs() < 1e-13);
        let w = 40.0;
        let r = gauss_kronrod(
            &|x: f64| ComplexValue::new(0.0, w * x).exp(),
            0.0,
            1.0,
            1e-15,
            1e-14,
            500,
        );
        let exact = (ComplexValue::new(0.0, w).exp() - 1.0) / ComplexValue::new(0.0, w);
        assert!((r.value - exact).norm() < 1e-13);
        assert!(r.abs_err < 1e-12);
    }
}
