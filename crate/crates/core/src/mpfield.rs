//! Arbitrary-precision complex numbers over MPFR floats, with principal-branch
//! `sqrt`, `ln`, `exp` and rational powers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Working precision for one computation.
///
/// Values are carried at `digits + guard_digits` decimal digits; tolerances
/// are stated against `digits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionCtx {
    pub digits: u32,
    pub guard_digits: u32,
    pub max_series_terms: usize,
    pub seed: u64,
}

impl PrecisionCtx {
    pub const MIN_DIGITS: u32 = 30;
    pub const MIN_GUARD: u32 = 10;
    pub const DEFAULT_GUARD: u32 = 20;

    pub fn new(digits: u32) -> Result<Self> {
        Self::with_guard(digits, Self::DEFAULT_GUARD)
    }

    pub fn with_guard(digits: u32, guard_digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidPrecision(format!(
                "digits must be at least {}, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        if guard_digits < Self::MIN_GUARD {
            return Err(Error::InvalidPrecision(format!(
                "guard digits must be at least {}, got {guard_digits}",
                Self::MIN_GUARD
            )));
        }
        if digits > 1_000_000 {
            return Err(Error::InvalidPrecision(format!("digits {digits} is too large")));
        }
        Ok(PrecisionCtx {
            digits,
            guard_digits,
            max_series_terms: 100 * digits as usize,
            seed: 0,
        })
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn max_series_terms(mut self, terms: usize) -> Self {
        self.max_series_terms = terms.max(1);
        self
    }

    /// Same context at `factor` times the digits.
    pub fn escalate(&self, factor: u32) -> Self {
        let digits = self.digits * factor;
        PrecisionCtx {
            digits,
            guard_digits: self.guard_digits,
            max_series_terms: self.max_series_terms.max(100 * digits as usize),
            seed: self.seed,
        }
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard_digits
    }

    /// MPFR precision in bits for the working digits.
    pub fn prec(&self) -> u32 {
        (self.working_digits() as f64 * LOG2_10).ceil() as u32 + 8
    }

    pub fn float(&self, v: f64) -> Float {
        Float::with_val(self.prec(), v)
    }

    /// 10^e as a float at working precision.
    pub fn pow10(&self, e: i64) -> Float {
        Float::with_val(self.prec(), 10).pow(e)
    }

    /// 10^(e) with a fractional exponent, for tolerances like 10^(-digits/2).
    pub fn pow10f(&self, e: f64) -> Float {
        let ten = Float::with_val(self.prec(), 10);
        let e = Float::with_val(self.prec(), e);
        ten.pow(e)
    }

    /// 10^(-digits/2), the half-precision tolerance.
    pub fn half_tol(&self) -> Float {
        self.pow10f(-(self.digits as f64) / 2.0)
    }

    pub fn zero(&self) -> AppComplex {
        AppComplex::zero(self)
    }

    pub fn one(&self) -> AppComplex {
        AppComplex::from_i64(1, self)
    }

    pub fn int(&self, v: i64) -> AppComplex {
        AppComplex::from_i64(v, self)
    }

    pub fn ratio(&self, num: i64, den: i64) -> AppComplex {
        AppComplex::from_ratio(num, den, self)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec(), Constant::Pi)
    }
}

#[derive(Clone, PartialEq)]
pub struct AppComplex {
    pub re: Float,
    pub im: Float,
}

impl AppComplex {
    pub fn new(re: Float, im: Float) -> Self {
        AppComplex { re, im }
    }

    pub fn zero(ctx: &PrecisionCtx) -> Self {
        AppComplex {
            re: Float::new(ctx.prec()),
            im: Float::new(ctx.prec()),
        }
    }

    pub fn from_i64(v: i64, ctx: &PrecisionCtx) -> Self {
        AppComplex {
            re: Float::with_val(ctx.prec(), v),
            im: Float::new(ctx.prec()),
        }
    }

    pub fn from_gauss(re: i64, im: i64, ctx: &PrecisionCtx) -> Self {
        AppComplex {
            re: Float::with_val(ctx.prec(), re),
            im: Float::with_val(ctx.prec(), im),
        }
    }

    pub fn from_ratio(num: i64, den: i64, ctx: &PrecisionCtx) -> Self {
        let mut re = Float::with_val(ctx.prec(), num);
        re /= den;
        AppComplex {
            re,
            im: Float::new(ctx.prec()),
        }
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionCtx) -> Self {
        AppComplex {
            re: Float::with_val(ctx.prec(), re),
            im: Float::with_val(ctx.prec(), im),
        }
    }

    pub fn from_real(re: Float, ctx: &PrecisionCtx) -> Self {
        AppComplex {
            re: Float::with_val(ctx.prec(), re),
            im: Float::new(ctx.prec()),
        }
    }

    pub fn i(ctx: &PrecisionCtx) -> Self {
        Self::from_gauss(0, 1, ctx)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Re-rounds both parts to the context precision.
    pub fn at(&self, ctx: &PrecisionCtx) -> Self {
        AppComplex {
            re: Float::with_val(ctx.prec(), &self.re),
            im: Float::with_val(ctx.prec(), &self.im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn ensure_finite(self, what: &'static str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::Overflow(what))
        }
    }

    pub fn conj(&self) -> Self {
        AppComplex {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let mut n = Float::with_val(p, self.re.square_ref());
        n += Float::with_val(p, self.im.square_ref());
        n
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    /// log10 |z|, `-inf` for zero. Diagnostic only.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.abs().log10().to_f64()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        let p = self.prec();
        if self.im.is_zero() {
            if self.re.is_sign_negative() && !self.re.is_zero() {
                return Float::with_val(p, Constant::Pi);
            }
            return Float::new(p);
        }
        Float::with_val(p, self.im.atan2_ref(&self.re))
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        AppComplex {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        let p = self.prec();
        AppComplex {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        let p = self.prec();
        AppComplex {
            re: Float::with_val(p, &self.re / k),
            im: Float::with_val(p, &self.im / k),
        }
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> Self {
        let p = self.prec();
        AppComplex {
            re: Float::with_val(p, -&self.im),
            im: Float::with_val(p, &self.re),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// `self += a * b` without temporaries.
    pub fn add_mul(&mut self, a: &AppComplex, b: &AppComplex) {
        self.re += &a.re * &b.re;
        self.re -= &a.im * &b.im;
        self.im += &a.re * &b.im;
        self.im += &a.im * &b.re;
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = self.norm_sqr();
        AppComplex {
            re: Float::with_val(p, &self.re / &n),
            im: Float::with_val(p, -&self.im) / n,
        }
    }

    pub fn checked_div(&self, rhs: &AppComplex) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        (self / rhs).ensure_finite("division")
    }

    pub fn powi(&self, n: i64) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut base = self.clone();
        let mut acc: Option<AppComplex> = None;
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc.unwrap_or_else(|| AppComplex {
            re: Float::with_val(self.prec(), 1),
            im: Float::new(self.prec()),
        })
    }

    /// True when |self| <= bound.
    pub fn abs_le(&self, bound: &Float) -> bool {
        self.abs().partial_cmp(bound) != Some(Ordering::Greater)
    }

    /// |self - other| <= tol * max(1, |other|).
    pub fn close_to(&self, other: &AppComplex, tol: &Float) -> bool {
        let mut scale = other.abs();
        if scale < 1 {
            scale = Float::with_val(scale.prec(), 1);
        }
        (self - other).abs() <= Float::with_val(scale.prec(), tol * &scale)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for AppComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_complex(self, 25))
    }
}

impl fmt::Display for AppComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&format_complex(self, digits))
    }
}

impl<'a> Add<&'a AppComplex> for &'a AppComplex {
    type Output = AppComplex;
    fn add(self, rhs: &'a AppComplex) -> AppComplex {
        let p = self.prec().max(rhs.prec());
        AppComplex {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl<'a> Sub<&'a AppComplex> for &'a AppComplex {
    type Output = AppComplex;
    fn sub(self, rhs: &'a AppComplex) -> AppComplex {
        let p = self.prec().max(rhs.prec());
        AppComplex {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl<'a> Mul<&'a AppComplex> for &'a AppComplex {
    type Output = AppComplex;
    fn mul(self, rhs: &'a AppComplex) -> AppComplex {
        let p = self.prec().max(rhs.prec());
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        AppComplex {
            re: ac - bd,
            im: ad + bc,
        }
    }
}

impl<'a> Div<&'a AppComplex> for &'a AppComplex {
    type Output = AppComplex;
    fn div(self, rhs: &'a AppComplex) -> AppComplex {
        let p = self.prec().max(rhs.prec());
        let n = rhs.norm_sqr();
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        AppComplex {
            re: (ac + bd) / &n,
            im: (bc - ad) / n,
        }
    }
}

impl Neg for &AppComplex {
    type Output = AppComplex;
    fn neg(self) -> AppComplex {
        AppComplex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

impl Neg for AppComplex {
    type Output = AppComplex;
    fn neg(self) -> AppComplex {
        AppComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<AppComplex> for AppComplex {
            type Output = AppComplex;
            fn $f(self, rhs: AppComplex) -> AppComplex {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a AppComplex> for AppComplex {
            type Output = AppComplex;
            fn $f(self, rhs: &'a AppComplex) -> AppComplex {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<AppComplex> for &'a AppComplex {
            type Output = AppComplex;
            fn $f(self, rhs: AppComplex) -> AppComplex {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&AppComplex> for AppComplex {
    fn add_assign(&mut self, rhs: &AppComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign<AppComplex> for AppComplex {
    fn add_assign(&mut self, rhs: AppComplex) {
        *self += &rhs;
    }
}

impl SubAssign<&AppComplex> for AppComplex {
    fn sub_assign(&mut self, rhs: &AppComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&AppComplex> for AppComplex {
    fn mul_assign(&mut self, rhs: &AppComplex) {
        *self = &*self * rhs;
    }
}

/// Principal square root, `arg` in (-pi/2, pi/2]; the negative real axis maps
/// to the positive imaginary axis.
pub fn sqrt_principal(z: &AppComplex, ctx: &PrecisionCtx) -> AppComplex {
    let p = ctx.prec();
    if z.is_zero() {
        return AppComplex::zero(ctx);
    }
    let r = Float::with_val(p, z.re.hypot_ref(&z.im));
    if !z.re.is_sign_negative() || z.re.is_zero() {
        let w_re = Float::with_val(p, &r + &z.re) / 2u32;
        let w_re = w_re.sqrt();
        let w_im = Float::with_val(p, &z.im / &w_re) / 2u32;
        AppComplex { re: w_re, im: w_im }
    } else {
        let mut w_im = (Float::with_val(p, &r - &z.re) / 2u32).sqrt();
        if z.im.is_sign_negative() && !z.im.is_zero() {
            w_im = -w_im;
        }
        let w_re = Float::with_val(p, &z.im / &w_im) / 2u32;
        AppComplex { re: w_re, im: w_im }
    }
}

/// Principal logarithm, imaginary part in (-pi, pi].
pub fn ln(z: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    if z.is_zero() {
        return Err(Error::Overflow("logarithm of zero"));
    }
    let p = ctx.prec();
    let r = Float::with_val(p, z.re.hypot_ref(&z.im));
    Ok(AppComplex {
        re: r.ln(),
        im: Float::with_val(p, z.arg()),
    })
}

pub fn exp(z: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    let p = ctx.prec();
    let mag = Float::with_val(p, &z.re).exp();
    let (s, c) = Float::with_val(p, &z.im).sin_cos(Float::new(p));
    AppComplex {
        re: Float::with_val(p, &mag * &c),
        im: mag * s,
    }
    .ensure_finite("exp")
}

/// z^(num/den) on the principal branch, `exp((num/den) log z)`.
pub fn pow_rational(z: &AppComplex, num: i64, den: u32, ctx: &PrecisionCtx) -> Result<AppComplex> {
    assert!(den > 0, "denominator must be positive");
    if z.is_zero() {
        return match num.cmp(&0) {
            Ordering::Less => Err(Error::ZeroToNegativePower),
            Ordering::Equal => Ok(ctx.one()),
            Ordering::Greater => Ok(AppComplex::zero(ctx)),
        };
    }
    if den == 1 {
        return z.at(ctx).powi(num).ensure_finite("pow_rational");
    }
    let root = if den == 2 {
        sqrt_principal(z, ctx)
    } else {
        let l = ln(z, ctx)?;
        exp(&l.div_int(den as i64), ctx)?
    };
    root.powi(num).ensure_finite("pow_rational")
}

/// e^(2 pi i k / n).
pub fn unity_root(k: u32, n: u32, ctx: &PrecisionCtx) -> AppComplex {
    let p = ctx.prec();
    let theta = Float::with_val(p, Constant::Pi) * 2u32 * k / n;
    let (s, c) = theta.sin_cos(Float::new(p));
    AppComplex { re: c, im: s }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Scans one signed decimal literal starting at `pos`; returns its end.
fn scan_literal(s: &[u8], pos: usize) -> Result<usize> {
    let mut i = pos;
    if i < s.len() && (s[i] == b'+' || s[i] == b'-') {
        i += 1;
    }
    let mantissa_start = i;
    let mut digits = 0;
    while i < s.len() && s[i].is_ascii_digit() {
        i += 1;
        digits += 1;
    }
    if i < s.len() && s[i] == b'.' {
        i += 1;
        while i < s.len() && s[i].is_ascii_digit() {
            i += 1;
            digits += 1;
        }
    }
    if digits == 0 {
        return Err(parse_err(mantissa_start, "expected a decimal number"));
    }
    if i < s.len() && (s[i] == b'e' || s[i] == b'E') {
        let exp_at = i;
        i += 1;
        if i < s.len() && (s[i] == b'+' || s[i] == b'-') {
            i += 1;
        }
        let exp_digits = i;
        while i < s.len() && s[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_digits {
            return Err(parse_err(exp_at, "exponent has no digits"));
        }
    }
    Ok(i)
}

fn literal_value(lit: &str, offset: usize, ctx: &PrecisionCtx) -> Result<Float> {
    let parsed = Float::parse(lit).map_err(|e| parse_err(offset, e.to_string()))?;
    let v = Float::with_val(ctx.prec(), parsed);
    if !v.is_finite() {
        return Err(parse_err(offset, "value out of range"));
    }
    Ok(v)
}

/// Parses `RE`, `IMi` or `RE(+|-)IMi`, with optional decimal exponents.
/// The Unicode minus sign is accepted as `-`.
pub fn parse_complex(text: &str, ctx: &PrecisionCtx) -> Result<AppComplex> {
    let normalized = text.trim().replace('\u{2212}', "-");
    let lead = text.len() - text.trim_start().len();
    // byte offsets below refer to the normalized string; map back roughly by
    // adding the trimmed prefix length
    let s = normalized.as_bytes();
    if s.is_empty() {
        return Err(parse_err(lead, "empty complex literal"));
    }
    let first_end = scan_literal(s, 0).map_err(|e| shift_offset(e, lead))?;
    let first = &normalized[..first_end];
    if first_end == s.len() {
        return Ok(AppComplex {
            re: literal_value(first, lead, ctx)?,
            im: Float::new(ctx.prec()),
        });
    }
    if s[first_end] == b'i' {
        if first_end + 1 != s.len() {
            return Err(parse_err(lead + first_end + 1, "trailing characters after imaginary unit"));
        }
        return Ok(AppComplex {
            re: Float::new(ctx.prec()),
            im: literal_value(first, lead, ctx)?,
        });
    }
    if s[first_end] != b'+' && s[first_end] != b'-' {
        return Err(parse_err(lead + first_end, "expected '+', '-', 'i' or end of input"));
    }
    let second_end = scan_literal(s, first_end).map_err(|e| shift_offset(e, lead))?;
    if second_end >= s.len() || s[second_end] != b'i' {
        return Err(parse_err(lead + second_end, "imaginary part must end with 'i'"));
    }
    if second_end + 1 != s.len() {
        return Err(parse_err(lead + second_end + 1, "trailing characters after imaginary unit"));
    }
    Ok(AppComplex {
        re: literal_value(first, lead, ctx)?,
        im: literal_value(&normalized[first_end..second_end], lead + first_end, ctx)?,
    })
}

fn shift_offset(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

fn format_real(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}

/// Decimal text `RE+IMi` / `RE-IMi`, each part rounded to nearest at
/// `digits` significant digits.
pub fn format_complex(z: &AppComplex, digits: usize) -> String {
    let re = format_real(&z.re, digits);
    let im = format_real(&z.im, digits);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

/// Real-valued counterpart of [`format_complex`].
pub fn format_float(x: &Float, digits: usize) -> String {
    format_real(x, digits)
}

pub fn parse_float(text: &str, ctx: &PrecisionCtx) -> Result<Float> {
    let t = text.trim();
    let end = scan_literal(t.as_bytes(), 0)?;
    if end != t.len() {
        return Err(parse_err(end, "trailing characters after number"));
    }
    literal_value(t, 0, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> PrecisionCtx {
        PrecisionCtx::new(d).unwrap()
    }

    fn c(re: i64, im: i64, ctx: &PrecisionCtx) -> AppComplex {
        AppComplex::from_gauss(re, im, ctx)
    }

    fn near(a: &AppComplex, b: &AppComplex, e: i64, ctx: &PrecisionCtx) -> bool {
        a.close_to(b, &ctx.pow10(e))
    }

    #[test]
    fn precision_bounds() {
        assert!(PrecisionCtx::new(29).is_err());
        assert!(PrecisionCtx::with_guard(50, 9).is_err());
        let p = ctx(50);
        assert_eq!(p.guard_digits, 20);
        assert_eq!(p.max_series_terms, 5000);
        assert!(p.prec() as f64 >= 70.0 * LOG2_10);
    }

    #[test]
    fn sqrt_examples() {
        let x = ctx(50);
        assert!(near(&sqrt_principal(&c(4, 0, &x), &x), &c(2, 0, &x), -49, &x));
        assert!(near(&sqrt_principal(&c(-1, 0, &x), &x), &c(0, 1, &x), -49, &x));
        assert!(near(&sqrt_principal(&c(3, 4, &x), &x), &c(2, 1, &x), -49, &x));
        assert!(near(&sqrt_principal(&c(-4, -0, &x), &x), &c(0, 2, &x), -49, &x));
        assert!(sqrt_principal(&x.zero(), &x).is_zero());
        let w = sqrt_principal(&c(-3, -4, &x), &x);
        assert!(near(&w, &c(1, -2, &x), -49, &x));
    }

    #[test]
    fn pow_rational_examples() {
        let x = ctx(60);
        assert!(near(&pow_rational(&c(16, 0, &x), 1, 4, &x).unwrap(), &c(2, 0, &x), -59, &x));
        let r = pow_rational(&c(-4, 0, &x), 1, 4, &x).unwrap();
        assert!(near(&r, &c(1, 1, &x), -59, &x));
        let r5 = pow_rational(&c(-4, 0, &x), 5, 4, &x).unwrap();
        assert!(near(&r5, &c(-4, -4, &x), -59, &x));
        let via_exp = exp(&ln(&c(-4, 0, &x), &x).unwrap().mul_int(5).div_int(4), &x).unwrap();
        assert!(near(&r5, &via_exp, -58, &x));
        assert!(matches!(
            pow_rational(&x.zero(), -1, 3, &x),
            Err(Error::ZeroToNegativePower)
        ));
        assert!(pow_rational(&x.zero(), 2, 3, &x).unwrap().is_zero());
        let z = parse_complex("1.25-3.5e2i", &x).unwrap();
        assert_eq!(pow_rational(&z, 1, 1, &x).unwrap(), z);
    }

    #[test]
    fn log_branch() {
        let x = ctx(40);
        let l = ln(&c(-1, 0, &x), &x).unwrap();
        assert!(l.re.is_zero());
        assert_eq!(l.im, x.pi());
        let neg_zero_im = AppComplex::new(x.float(-2.0), -Float::new(x.prec()));
        assert_eq!(ln(&neg_zero_im, &x).unwrap().im, x.pi());
        assert!(ln(&x.zero(), &x).is_err());
    }

    #[test]
    fn parse_examples() {
        let x = ctx(50);
        assert_eq!(parse_complex("-200i", &x).unwrap(), c(0, -200, &x));
        let p = parse_complex("12.34910", &x).unwrap();
        assert_eq!(p.re, literal_value("12.34910", 0, &x).unwrap());
        assert!(p.im.is_zero());
        assert_eq!(parse_complex("1+1i", &x).unwrap(), c(1, 1, &x));
        let z = parse_complex("0.5-0.25e-3i", &x).unwrap();
        assert_eq!(z.re, 0.5);
        assert!(near(&AppComplex::new(z.im.clone(), Float::new(x.prec())), &AppComplex::from_f64(-0.00025, 0.0, &x), -15, &x));
        assert_eq!(parse_complex("\u{2212}3", &x).unwrap(), c(-3, 0, &x));
        assert_eq!(parse_complex(" .5e1 ", &x).unwrap(), c(5, 0, &x));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let x = ctx(50);
        for (text, at) in [("", 0), ("bogus", 0), ("1+2", 3), ("1+2j", 3), ("1e", 1), ("3ii", 2), ("1+i", 2)] {
            match parse_complex(text, &x) {
                Err(Error::Parse { offset, .. }) => assert_eq!(offset, at, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn format_round_trip() {
        let x = ctx(60);
        let z = &c(2, 0, &x).recip() + &AppComplex::new(Float::new(x.prec()), x.pi());
        let s = format_complex(&z, 60);
        let back = parse_complex(&s, &x).unwrap();
        assert!(near(&back, &z, -59, &x));
        assert_eq!(format_complex(&c(1, -2, &x), 5), "1.0000-2.0000i");
        assert_eq!(format_complex(&x.zero(), 5), "0+0i");
    }

    #[test]
    fn unity_roots() {
        let x = ctx(40);
        let w = unity_root(1, 3, &x);
        assert!(near(&w.powi(3), &x.one(), -39, &x));
        assert!(w.im > 0);
    }

    #[test]
    fn arithmetic_identities() {
        let x = ctx(40);
        let a = parse_complex("1.5-2.25i", &x).unwrap();
        let b = parse_complex("-0.75+3i", &x).unwrap();
        let q = &a / &b;
        assert!(near(&(&q * &b), &a, -39, &x));
        assert!(near(&(&a * &a.recip()), &x.one(), -39, &x));
        assert!(near(&a.powi(-3), &(&a * &a * &a).recip(), -38, &x));
        assert!(near(&a.mul_i(), &(&a * &AppComplex::i(&x)), -39, &x));
        assert!(a.checked_div(&x.zero()).is_err());
    }
}
