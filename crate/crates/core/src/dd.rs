//! Double-double arithmetic (about 106 significand bits) for the few checks
//! whose residuals sit below binary64 resolution: the three-term expansion of
//! the cycle sine sum, where the residual is 10⁻¹⁷ of the sum itself.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::specfn::{bernoulli_even_exact, rational_to_f64};
use crate::ComplexValue;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

pub const PI: Dd = Dd {
    hi: std::f64::consts::PI,
    lo: 1.224_646_799_147_353_2e-16,
};
const HALF_PI: Dd = Dd {
    hi: std::f64::consts::FRAC_PI_2,
    lo: 6.123_233_995_736_766e-17,
};
const LN2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn from_rational(r: &BigRational) -> Dd {
        let hi = rational_to_f64(r);
        let rest = r - BigRational::from_float(hi).unwrap_or_default();
        Dd::from_parts(hi, rational_to_f64(&rest))
    }

    fn from_parts(hi: f64, lo: f64) -> Dd {
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn scale(self, k: f64) -> Dd {
        // exact for powers of two
        Dd {
            hi: self.hi * k,
            lo: self.lo * k,
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let y = self.hi.sqrt();
        let y2 = Dd::new(y).sqr();
        Dd::new(y) + (self - y2) / Dd::new(2.0 * y)
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2 * Dd::new(k)).scale(1.0 / 512.0);
        // Taylor series of e^r - 1 for |r| ≤ 6.8e-4
        let mut term = r;
        let mut sum = r;
        let mut n = 2.0;
        while term.hi.abs() > 1e-36 {
            term = term * r / Dd::new(n);
            sum = sum + term;
            n += 1.0;
        }
        // (1 + x)² - 1 = x(2 + x), nine times
        for _ in 0..9 {
            sum = sum * (sum + Dd::new(2.0));
        }
        let out = sum + Dd::ONE;
        let p = 2f64.powi(k as i32);
        out.scale(p)
    }

    pub fn ln(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::new(f64::NAN);
        }
        let y = Dd::new(self.hi.ln());
        // one Newton step on e^y = x
        y + self * (-y).exp() - Dd::ONE
    }

    /// sin and cos together.
    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.hi / HALF_PI.hi).round();
        let r = self - HALF_PI * Dd::new(k);
        let r2 = r.sqr();
        let mut s_term = r;
        let mut s = r;
        let mut c_term = Dd::ONE;
        let mut c = Dd::ONE;
        let mut n = 1.0;
        while s_term.hi.abs() > 1e-36 || c_term.hi.abs() > 1e-36 {
            c_term = -(c_term * r2) / Dd::new(n * (n + 1.0));
            c = c + c_term;
            s_term = -(s_term * r2) / Dd::new((n + 1.0) * (n + 2.0));
            s = s + s_term;
            n += 2.0;
        }
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Dd {
        self.sin_cos().0
    }

    pub fn atan2(y: Dd, x: Dd) -> Dd {
        // Newton refinement of the binary64 angle
        let a = Dd::new(y.hi.atan2(x.hi));
        let (s, c) = a.sin_cos();
        let r = (x.sqr() + y.sqr()).sqrt();
        // a + (y c - x s)/r is accurate to second order
        a + (y * c - x * s) / r
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (h, l) = quick_two_sum(s, e + f);
        Dd { hi: h, lo: l }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (h, l) = quick_two_sum(p, e);
        Dd { hi: h, lo: l }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::new(q2);
        let q3 = r.hi / o.hi;
        let (h, l) = quick_two_sum(q1, q2);
        Dd { hi: h, lo: l } + Dd::new(q3)
    }
}

/// Complex double-double.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub fn new(re: Dd, im: Dd) -> CDd {
        CDd { re, im }
    }

    pub fn real(x: Dd) -> CDd {
        CDd { re: x, im: Dd::ZERO }
    }

    pub fn from_c64(z: ComplexValue) -> CDd {
        CDd {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }

    pub fn to_c64(self) -> ComplexValue {
        ComplexValue::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn scale(self, k: Dd) -> CDd {
        CDd {
            re: self.re * k,
            im: self.im * k,
        }
    }

    pub fn exp(self) -> CDd {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        CDd {
            re: m * c,
            im: m * s,
        }
    }

    /// Principal logarithm.
    pub fn ln(self) -> CDd {
        CDd {
            re: self.norm_sqr().ln().scale(0.5),
            im: Dd::atan2(self.im, self.re),
        }
    }
}

impl Neg for CDd {
    type Output = CDd;
    fn neg(self) -> CDd {
        CDd {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Add for CDd {
    type Output = CDd;
    fn add(self, o: CDd) -> CDd {
        CDd {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for CDd {
    type Output = CDd;
    fn sub(self, o: CDd) -> CDd {
        CDd {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for CDd {
    type Output = CDd;
    fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Div for CDd {
    type Output = CDd;
    fn div(self, o: CDd) -> CDd {
        let d = o.norm_sqr();
        CDd {
            re: (self.re * o.re + self.im * o.im) / d,
            im: (self.im * o.re - self.re * o.im) / d,
        }
    }
}

fn half_ln_two_pi() -> Dd {
    (PI.scale(2.0)).ln().scale(0.5)
}

/// log Γ(z) for Re z > 0, by upward shift and the Stirling series.
pub fn ln_gamma(z: CDd) -> CDd {
    let mut w = z;
    let mut shift_logs = CDd::default();
    while w.norm_sqr().hi < 1600.0 {
        shift_logs = shift_logs + w.ln();
        w = w + CDd::real(Dd::ONE);
    }
    let half = CDd::real(Dd::new(0.5));
    let lw = w.ln();
    let mut out = (w - half) * lw - w + CDd::real(half_ln_two_pi());
    let inv = CDd::real(Dd::ONE) / w;
    let inv2 = inv * inv;
    let mut pow = inv;
    for k in 1..=16usize {
        let b = bernoulli_even_exact(k).map(Dd::from_rational).unwrap_or_default();
        let coef = b / Dd::new(((2 * k) * (2 * k - 1)) as f64);
        let term = pow.scale(coef);
        out = out + term;
        if term.re.hi.abs() + term.im.hi.abs() < 1e-34 {
            break;
        }
        pow = pow * inv2;
    }
    out - shift_logs
}

/// n^{-s} with n a positive integer.
fn int_pow_neg(n: u64, s: CDd) -> CDd {
    let l = Dd::new(n as f64).ln();
    (-(s.scale(l))).exp()
}

/// ζ(s) by Euler–Maclaurin summation, valid for any s ≠ 1 of moderate size.
pub fn zeta(s: CDd) -> CDd {
    let abs_s = s.to_c64().norm();
    let n = 30 + abs_s.ceil() as u64;
    let mut head = CDd::default();
    for k in (1..n).rev() {
        head = head + int_pow_neg(k, s);
    }
    let one = CDd::real(Dd::ONE);
    let nd = CDd::real(Dd::new(n as f64));
    let n_pow = int_pow_neg(n, s);
    let mut total = head + n_pow * nd / (s - one) + n_pow.scale(Dd::new(0.5));
    let mut rising = s;
    let mut factor = n_pow / nd;
    let n2 = CDd::real(Dd::new((n * n) as f64));
    let mut fact = BigRational::from_integer(2.into());
    for j in 1..=60usize {
        let b = match bernoulli_even_exact(j) {
            Some(b) => b,
            None => break,
        };
        let coef = Dd::from_rational(&(b / &fact));
        let term = (rising * factor).scale(coef);
        total = total + term;
        if term.re.hi.abs() + term.im.hi.abs() < 1e-34 * (total.re.hi.abs() + total.im.hi.abs()) {
            break;
        }
        let jj = (2 * j) as f64;
        rising = rising
            * (s + CDd::real(Dd::new(jj - 1.0)))
            * (s + CDd::real(Dd::new(jj)));
        factor = factor / n2;
        fact *= BigRational::from_integer(((2 * j + 1) * (2 * j + 2)).into());
    }
    total
}

/// Σ_{k=1}^{n-1} sin(πk/n)^{-s}, pairing k with n − k.
pub fn sine_power_sum(n: u64, s: CDd) -> CDd {
    let mut total = CDd::default();
    let nn = Dd::new(n as f64);
    for k in (1..=(n - 1) / 2).rev() {
        let x = PI * Dd::new(k as f64) / nn;
        let l = x.sin().ln();
        total = total + (-(s.scale(l))).exp().scale(Dd::new(2.0));
    }
    if n.is_multiple_of(2) {
        total = total + CDd::real(Dd::ONE);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: f64, tol: f64) -> bool {
        (a - Dd::new(b)).to_f64().abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn arithmetic_keeps_extra_bits() {
        let third = Dd::ONE / Dd::new(3.0);
        let back = third * Dd::new(3.0) - Dd::ONE;
        assert!(back.to_f64().abs() < 1e-31);
        let two = Dd::new(2.0).sqrt();
        assert!((two.sqr() - Dd::new(2.0)).to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_and_ln_are_inverse() {
        for x in [-30.0, -1.5, 0.1, 2.0, 50.0] {
            let v = Dd::new(x);
            let r = v.exp().ln() - v;
            assert!(r.to_f64().abs() < 1e-30 * x.abs().max(1.0), "x = {x}");
        }
        // e = 2.718281828459045235360287471352662497757
        let e = Dd::ONE.exp();
        assert_eq!(e.hi, std::f64::consts::E);
        assert!((e.lo - 1.445_646_891_729_250_2e-16).abs() < 1e-31);
    }

    #[test]
    fn trig_identities() {
        for x in [0.1, 1.0, 2.5, -7.0, 40.0] {
            let (s, c) = Dd::new(x).sin_cos();
            assert!((s.sqr() + c.sqr() - Dd::ONE).to_f64().abs() < 1e-31);
            assert!(close(s, x.sin(), 1e-15));
        }
        let six = PI / Dd::new(6.0);
        assert!((six.sin() - Dd::new(0.5)).to_f64().abs() < 1e-32);
        let a = Dd::atan2(Dd::ONE, Dd::ONE);
        assert!((a - PI.scale(0.25)).to_f64().abs() < 1e-32);
    }

    #[test]
    fn gamma_and_zeta_agree_with_binary64_versions() {
        let z = ComplexValue::new(0.35, -2.0);
        let lg = ln_gamma(CDd::from_c64(z)).to_c64();
        let reference = crate::specfn::log_gamma(z).unwrap();
        assert!((lg - reference).norm() < 1e-14);
        let s = ComplexValue::new(-1.7, 4.0);
        let zd = zeta(CDd::from_c64(s)).to_c64();
        let reference = crate::specfn::riemann_zeta(s).unwrap();
        assert!((zd - reference).norm() < 1e-13 * reference.norm());
    }

    #[test]
    fn zeta_of_two_to_double_double_accuracy() {
        let z = zeta(CDd::real(Dd::new(2.0)));
        let exact = PI.sqr() / Dd::new(6.0);
        assert!((z.re - exact).to_f64().abs() < 1e-30);
        assert!(z.im.to_f64().abs() < 1e-30);
        // ζ(-1) = -1/12
        let m1 = zeta(CDd::real(Dd::new(-1.0)));
        assert!((m1.re + Dd::ONE / Dd::new(12.0)).to_f64().abs() < 1e-29);
    }

    #[test]
    fn half_integer_gamma() {
        // Γ(1/2) = √π
        let g = ln_gamma(CDd::real(Dd::new(0.5))).re;
        let expect = PI.ln().scale(0.5);
        // the Stirling terms are of size ~150, so a few units of 1e-32 each
        assert!((g - expect).to_f64().abs() < 1e-28);
    }

    #[test]
    fn sine_sum_square_identity() {
        // Σ 1/sin² = (n² - 1)/3
        for n in [7u64, 100, 1001] {
            let v = sine_power_sum(n, CDd::real(Dd::new(2.0)));
            let expect = Dd::new((n * n - 1) as f64) / Dd::new(3.0);
            assert!(((v.re - expect) / expect).to_f64().abs() < 1e-29, "n = {n}");
        }
    }
}
