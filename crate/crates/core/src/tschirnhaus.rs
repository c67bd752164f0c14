//! Reduction of a monic quintic to Bring-Jerrard form `y^5 + A y + B` by the
//! quartic substitution `y = -(x^4 + d x^3 + c x^2 + b x + a)`, i.e. the
//! elimination of `x` between the quintic and `x^4 + d x^3 + c x^2 + b x + a + y`.
//!
//! Elimination coefficients are never expanded symbolically.  The transformed
//! quintic is the determinant of a 5x5 matrix whose entries are affine in
//! `(a, b, c, d)`, and every coefficient that has to vanish is recovered as a
//! polynomial in the unknown by sampling that determinant and interpolating,
//! with one extra guard sample certifying the expected degree.

use std::sync::OnceLock;

use rand::Rng;
use rug::Float;

use crate::closedform::cardano_roots;
use crate::error::{Error, Result};
use crate::mpfield::{parse_complex, pow_rational, sqrt_principal, AppComplex, PrecisionCtx};
use crate::polyring::{det5, eval, fit_coeffs_named, Poly, PolyMatrix5};

/// `x^5 + m x^4 + n x^3 + p x^2 + q x + r`
#[derive(Clone, Debug, PartialEq)]
pub struct MonicQuintic {
    pub m: AppComplex,
    pub n: AppComplex,
    pub p: AppComplex,
    pub q: AppComplex,
    pub r: AppComplex,
}

impl MonicQuintic {
    pub fn new(m: AppComplex, n: AppComplex, p: AppComplex, q: AppComplex, r: AppComplex) -> Self {
        MonicQuintic { m, n, p, q, r }
    }

    /// Parses `[m, n, p, q, r]` in the complex literal grammar.
    pub fn parse(texts: [&str; 5], ctx: &PrecisionCtx) -> Result<Self> {
        let [m, n, p, q, r] = texts.map(|t| parse_complex(t, ctx));
        Ok(MonicQuintic::new(m?, n?, p?, q?, r?))
    }

    pub fn from_poly(poly: &Poly, ctx: &PrecisionCtx) -> Self {
        assert_eq!(poly.degree(), 5, "quintic expected");
        let monic = poly.monic();
        let c = |i| monic.coeff(i, ctx);
        MonicQuintic::new(c(4), c(3), c(2), c(1), c(0))
    }

    pub fn from_roots(roots: &[AppComplex], ctx: &PrecisionCtx) -> Self {
        MonicQuintic::from_poly(&Poly::from_roots(roots, ctx), ctx)
    }

    /// Coefficients of x^4 down to x^0.
    pub fn coeffs(&self) -> [&AppComplex; 5] {
        [&self.m, &self.n, &self.p, &self.q, &self.r]
    }

    pub fn poly(&self, ctx: &PrecisionCtx) -> Poly {
        Poly::new(vec![
            self.r.clone(),
            self.q.clone(),
            self.p.clone(),
            self.n.clone(),
            self.m.clone(),
            ctx.one(),
        ])
    }

    pub fn eval(&self, x: &AppComplex, ctx: &PrecisionCtx) -> AppComplex {
        eval(&self.poly(ctx), x, ctx)
    }

    /// max(1, |m|, |n|, |p|, |q|, |r|)
    pub fn scale(&self, ctx: &PrecisionCtx) -> Float {
        let mut s = Float::with_val(ctx.prec(), 1);
        for c in self.coeffs() {
            let a = c.abs();
            if a > s {
                s = a;
            }
        }
        s
    }

    /// The quintic whose roots are those of `self` plus `t`.
    pub fn shifted(&self, t: &AppComplex, ctx: &PrecisionCtx) -> Self {
        MonicQuintic::from_poly(&self.poly(ctx).taylor_shift(&-t), ctx)
    }

    /// The quintic whose roots are those of `self` divided by `2^e`.
    pub fn dilated(&self, e: i32) -> Self {
        let prec = self.m.prec();
        let [m, n, p, q, r] = self.coeffs();
        let step = |c: &AppComplex, k: i32| c.scale(&(Float::with_val(prec, 1) << (-e * k)));
        MonicQuintic::new(step(m, 1), step(n, 2), step(p, 3), step(q, 4), step(r, 5))
    }

    /// The power of two nearest the geometric mean of `|c_k|^(1/k)` over the
    /// nonzero coefficients, a typical root size. The largest of these
    /// overshoots when one root dominates and leaves the rest tiny.
    pub fn root_size_exponent(&self) -> i32 {
        let logs: Vec<f64> = self
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c.abs().log2().to_f64() / (k + 1) as f64)
            .collect();
        if logs.is_empty() {
            return 0;
        }
        (logs.iter().sum::<f64>() / logs.len() as f64).round() as i32
    }

    pub fn conj(&self) -> Self {
        MonicQuintic::new(self.m.conj(), self.n.conj(), self.p.conj(), self.q.conj(), self.r.conj())
    }

    pub fn at(&self, ctx: &PrecisionCtx) -> Self {
        MonicQuintic::new(self.m.at(ctx), self.n.at(ctx), self.p.at(ctx), self.q.at(ctx), self.r.at(ctx))
    }

    /// Coefficients drawn uniformly from the disk of radius `bound`.
    pub fn random<R: Rng>(rng: &mut R, bound: f64, ctx: &PrecisionCtx) -> Self {
        let mut draw = || {
            let rad = bound * rng.gen::<f64>().sqrt();
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            AppComplex::from_f64(rad * theta.cos(), rad * theta.sin(), ctx)
        };
        MonicQuintic::new(draw(), draw(), draw(), draw(), draw())
    }
}

/// Worst guard mismatch seen for one structural claim.
#[derive(Clone, Debug, PartialEq)]
pub struct GuardRecord {
    pub claim: &'static str,
    pub checks: usize,
    pub worst_log10_mismatch: f64,
}

pub const CLAIM_POLY4_IN_A: &str = "Poly4 is affine in a";
pub const CLAIM_POLY3_IN_D: &str = "Poly3 is quadratic in d";
pub const CLAIM_D2_IN_ALPHA: &str = "d^2 part of Poly3 is quadratic in alpha";
pub const CLAIM_D1_IN_ETA_XI: &str = "d^1 part of Poly3 is affine in (eta, xi)";
pub const CLAIM_D0_IN_XI: &str = "d^0 part of Poly3 is quadratic in xi";
pub const CLAIM_POLY2_IN_D: &str = "Poly2 is cubic in d";

#[derive(Clone, Debug)]
pub struct TschirnhausParams {
    pub a: AppComplex,
    pub b: AppComplex,
    pub c: AppComplex,
    pub d: AppComplex,
    pub alpha: AppComplex,
    pub xi: AppComplex,
    pub eta: AppComplex,
    /// |Poly4|, |Poly3|, |Poly2| over max(1, |A|, |B|).
    pub vanish_residuals: [Float; 3],
    pub guards: Vec<GuardRecord>,
    /// log10 relative distance of `a` from its printed closed form.
    pub a_crosscheck: f64,
    /// Same for `alpha`, when `2m^2 - 5n` is not negligible.
    pub alpha_crosscheck: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    /// Generic case, `s = -B / (-A)^(5/4)`.
    Bring,
    /// `A` vanishes: `y^5 = -B`.
    PureRadicalA,
    /// `B` vanishes: `y = 0` is a root.
    PureRadicalB,
}

#[derive(Clone, Debug)]
pub struct BringReduction {
    pub big_a: AppComplex,
    pub big_b: AppComplex,
    pub s: AppComplex,
    /// (-A)^(1/4)
    pub quartic_root_scale: AppComplex,
    /// The reduced quintic's roots are `x / 2^dilation + shift` for the
    /// input's roots `x`.
    pub shift: AppComplex,
    pub dilation: i32,
    pub kind: ReductionKind,
    pub params: TschirnhausParams,
    /// The quintic actually reduced (after the shift).
    pub reduced: MonicQuintic,
    /// Monic transformed quintic in y.
    pub transformed: Poly,
    pub digits: u32,
}

// Entries as (constant part, coefficient of y), with a, b, c, d entering affinely.
const ENTRIES: [[(&str, i64); 5]; 5] = [
    [("a", 1), ("b", 0), ("c", 0), ("d", 0), ("1", 0)],
    [("r", 0), ("q-a", -1), ("p-b", 0), ("n-c", 0), ("m-d", 0)],
    [
        ("d*r-m*r", 0),
        ("r-m*q+d*q", 0),
        ("q-a-m*p+d*p", -1),
        ("p-b-m*n+d*n", 0),
        ("n+d*m-m^2-c", 0),
    ],
    [
        ("-m^2*r-c*r+n*r+d*m*r", 0),
        ("m*r-d*r-m^2*q-c*q+d*m*q+n*q", 0),
        ("n*p-r+d*m*p-d*q+m*q-m^2*p-c*p", 0),
        ("a+d*m*n-d*p-m^2*n-q+n^2+m*p-c*n", 1),
        ("-c*m-m^3+b-p+d*m^2+2*m*n-d*n", 0),
    ],
    [
        ("b*r-m^3*r-d*n*r+d*m^2*r+2*m*n*r-p*r-c*m*r", 0),
        ("b*q-c*m*q-n*r-d*m*r-d*n*q+c*r+m^2*r-m^3*q+2*m*n*q-p*q+d*m^2*q", 0),
        ("c*q+2*m*n*p-d*n*p-p^2+b*p-n*q+d*m^2*p-m*r-d*m*q-c*m*p+m^2*q-m^3*p+d*r", 0),
        ("-d*m*p+d*m^2*n+c*p+d*q+2*m*n^2-c*m*n-m^3*n-2*n*p-m*q+m^2*p+b*n-d*n^2+r", 0),
        ("b*m-2*m*p+q-a+c*n-2*d*m*n+3*m^2*n-c*m^2+d*m^3-n^2-m^4+d*p", -1),
    ],
];

const PRINTED_A: &str = "d*m^3+b*m-3*d*m*n-2*n^2+4*q-c*m^2+2*c*n-4*m*p+4*m^2*n+3*d*p-m^4";
const PRINTED_ALPHA_N: &str = "-13*n*m-10*n^2+4*m^3+20*q+17*m^2*n-4*m^4+15*p-17*m*p";
const PRINTED_ALPHA_D: &str = "-40*q*m^4+80*q*m^2+40*m^3*p+60*n*p^2-15*n^2*m^4-190*m*p*n-200*n*q\
-15*n^2*m^2+400*q^2+60*n^3*m^2-100*n^2*q-80*m*p*n^2+200*m^2*r+225*p^2-120*m^3*r+40*m^5*p\
+265*m^2*p^2-40*q*m^3-80*m^4*p-20*q*m*n+360*m^2*p*n+30*n^2*m^3+600*p*q-510*m*p^2-120*n^3*m\
-680*m*p*q+260*m^2*n*q+300*m*n*r-500*n*r+80*p*n^2-170*m^3*p*n+60*n^3";
const PRINTED_ALPHA_MN0_N: &str = "10*q-3*p^2+25*r";
const PRINTED_ALPHA_MN0_D: &str = "4*q+3*p";

const VARS: [char; 9] = ['m', 'n', 'p', 'q', 'r', 'a', 'b', 'c', 'd'];

/// Integer-coefficient monomial over `VARS`.
#[derive(Clone, Debug)]
struct Monomial {
    coef: i64,
    exps: [u32; 9],
}

fn parse_polynomial(src: &str) -> Vec<Monomial> {
    let mut out = Vec::new();
    let s: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    while i < s.len() {
        let mut sign = 1;
        if s[i] == '+' || s[i] == '-' {
            if s[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let mut mono = Monomial { coef: sign, exps: [0; 9] };
        loop {
            if s[i].is_ascii_digit() {
                let start = i;
                while i < s.len() && s[i].is_ascii_digit() {
                    i += 1;
                }
                let k: i64 = s[start..i].iter().collect::<String>().parse().unwrap();
                mono.coef *= k;
            } else {
                let v = VARS.iter().position(|&c| c == s[i]).unwrap_or_else(|| panic!("bad symbol {}", s[i]));
                i += 1;
                let mut e = 1;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let start = i;
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    e = s[start..i].iter().collect::<String>().parse().unwrap();
                }
                mono.exps[v] += e;
            }
            if i < s.len() && s[i] == '*' {
                i += 1;
            } else {
                break;
            }
        }
        out.push(mono);
    }
    out
}

/// Values of m, n, p, q, r and their powers.
struct QuinticPowers {
    pows: [Vec<AppComplex>; 5],
}

impl QuinticPowers {
    fn new(f: &MonicQuintic, ctx: &PrecisionCtx) -> Self {
        let pows = f.coeffs().map(|c| {
            let mut v = vec![ctx.one(), c.clone()];
            for k in 2..=5 {
                let next = &v[k - 1] * c;
                v.push(next);
            }
            v
        });
        QuinticPowers { pows }
    }

    /// Value of the monomial with a, b, c, d set to one.
    fn eval(&self, mono: &Monomial, ctx: &PrecisionCtx) -> AppComplex {
        let mut acc = ctx.int(mono.coef);
        for v in 0..5 {
            let e = mono.exps[v] as usize;
            if e > 0 {
                acc = &acc * &self.pows[v][e];
            }
        }
        acc
    }

    fn eval_free(&self, poly: &[Monomial], ctx: &PrecisionCtx) -> AppComplex {
        let mut acc = ctx.zero();
        for mono in poly {
            debug_assert!(mono.exps[5..].iter().all(|&e| e == 0));
            acc += self.eval(mono, ctx);
        }
        acc
    }
}

fn parsed_entries() -> &'static Vec<Vec<Monomial>> {
    static CELL: OnceLock<Vec<Vec<Monomial>>> = OnceLock::new();
    CELL.get_or_init(|| ENTRIES.iter().flatten().map(|(src, _)| parse_polynomial(src)).collect())
}

/// The 25 entries for one quintic, each as `e0 + ea a + eb b + ec c + ed d`
/// plus a constant y coefficient.
#[derive(Clone, Debug)]
pub struct EntryTemplate {
    affine: Vec<[AppComplex; 5]>,
    y_coef: Vec<i64>,
}

impl EntryTemplate {
    pub fn new(f: &MonicQuintic, ctx: &PrecisionCtx) -> Self {
        let pw = QuinticPowers::new(f, ctx);
        let mut affine = Vec::with_capacity(25);
        for entry in parsed_entries() {
            let mut parts: [AppComplex; 5] = std::array::from_fn(|_| ctx.zero());
            for mono in entry {
                let slot = match mono.exps[5..] {
                    [0, 0, 0, 0] => 0,
                    [1, 0, 0, 0] => 1,
                    [0, 1, 0, 0] => 2,
                    [0, 0, 1, 0] => 3,
                    [0, 0, 0, 1] => 4,
                    _ => panic!("entry is not affine in a, b, c, d"),
                };
                parts[slot] += pw.eval(mono, ctx);
            }
            affine.push(parts);
        }
        let y_coef = ENTRIES.iter().flatten().map(|&(_, y)| y).collect();
        EntryTemplate { affine, y_coef }
    }

    pub fn matrix(&self, a: &AppComplex, b: &AppComplex, c: &AppComplex, d: &AppComplex, ctx: &PrecisionCtx) -> PolyMatrix5 {
        PolyMatrix5::from_fn(|i, j| {
            let k = 5 * i + j;
            let e = &self.affine[k];
            let mut v = e[0].clone();
            for (coef, x) in e[1..].iter().zip([a, b, c, d]) {
                if !coef.is_zero() {
                    v += coef * x;
                }
            }
            Poly::linear(v, ctx.int(self.y_coef[k]))
        })
    }
}

/// The elimination matrix for the substitution `x^4 + d x^3 + c x^2 + b x + a + y`.
pub fn build_matrix(
    f: &MonicQuintic,
    a: &AppComplex,
    b: &AppComplex,
    c: &AppComplex,
    d: &AppComplex,
    ctx: &PrecisionCtx,
) -> PolyMatrix5 {
    EntryTemplate::new(f, ctx).matrix(a, b, c, d, ctx)
}

fn normalize_transformed(det: Poly, ctx: &PrecisionCtx) -> Result<Poly> {
    let lead = det.coeff(5, ctx);
    if lead.is_zero() || !lead.is_finite() {
        return Err(Error::DegenerateTransform);
    }
    let inv = lead.recip();
    Ok(Poly::new((0..6).map(|i| if i == 5 { ctx.one() } else { &det.coeff(i, ctx) * &inv }).collect()))
}

/// Monic transformed quintic in y; coefficient `k` is `Poly4, Poly3, Poly2, A, B`
/// for `k = 4, 3, 2, 1, 0`.
pub fn transformed_poly(
    f: &MonicQuintic,
    a: &AppComplex,
    b: &AppComplex,
    c: &AppComplex,
    d: &AppComplex,
    ctx: &PrecisionCtx,
) -> Result<Poly> {
    normalize_transformed(det5(&build_matrix(f, a, b, c, d, ctx), ctx), ctx)
}

/// Closed form of `a` that cancels Poly4.
pub fn printed_a(f: &MonicQuintic, b: &AppComplex, c: &AppComplex, d: &AppComplex, ctx: &PrecisionCtx) -> AppComplex {
    static CELL: OnceLock<Vec<Monomial>> = OnceLock::new();
    let poly = CELL.get_or_init(|| parse_polynomial(PRINTED_A));
    let pw = QuinticPowers::new(f, ctx);
    let mut acc = ctx.zero();
    for mono in poly {
        let mut t = pw.eval(mono, ctx);
        for (slot, x) in [b, c, d].into_iter().enumerate() {
            for _ in 0..mono.exps[6 + slot] {
                t = &t * x;
            }
        }
        acc += t;
    }
    acc.div_int(5)
}

/// Closed form of the alpha root, `(N + sqrt(D)) / (2 (2m^2 - 5n))`.
pub fn printed_alpha(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<AppComplex> {
    static CELL: OnceLock<(Vec<Monomial>, Vec<Monomial>)> = OnceLock::new();
    let (num, disc) = CELL.get_or_init(|| (parse_polynomial(PRINTED_ALPHA_N), parse_polynomial(PRINTED_ALPHA_D)));
    let pw = QuinticPowers::new(f, ctx);
    let top = &pw.eval_free(num, ctx) + &sqrt_principal(&pw.eval_free(disc, ctx), ctx);
    let den = (&f.m.square().mul_int(2) - &f.n.mul_int(5)).mul_int(2);
    top.checked_div(&den)
}

/// Closed form of alpha when `m = n = 0`: `-(10q - 3p^2 + 25r) / (5 (4q + 3p))`.
pub fn printed_alpha_mn0(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<AppComplex> {
    let pw = QuinticPowers::new(f, ctx);
    let num = pw.eval_free(&parse_polynomial(PRINTED_ALPHA_MN0_N), ctx);
    let den = pw.eval_free(&parse_polynomial(PRINTED_ALPHA_MN0_D), ctx).mul_int(5);
    (-num).checked_div(&den)
}

fn log10_rel(x: &AppComplex, reference: &AppComplex) -> f64 {
    let diff = x - reference;
    if diff.is_zero() {
        return f64::NEG_INFINITY;
    }
    let scale = reference.abs().max(&Float::with_val(reference.prec(), 1));
    (diff.abs() / scale).log10().to_f64()
}

fn max_abs(values: &[&AppComplex], ctx: &PrecisionCtx) -> Float {
    values
        .iter()
        .map(|v| v.abs())
        .fold(Float::new(ctx.prec()), |m, a| if a > m { a } else { m })
}

/// `(-c1 + sqrt(c1^2 - 4 c2 c0)) / (2 c2)` after checking the leading coefficient.
fn quadratic_plus(coeffs: &[AppComplex], stage: &'static str, ctx: &PrecisionCtx) -> Result<AppComplex> {
    let (c0, c1, c2) = (&coeffs[0], &coeffs[1], &coeffs[2]);
    let bound = Float::with_val(ctx.prec(), max_abs(&[c0, c1, c2], ctx) * ctx.half_tol());
    if c2.abs() <= bound {
        return Err(Error::DegenerateLeading(stage));
    }
    let disc = &c1.square() - &(c2 * c0).mul_int(4);
    let root = sqrt_principal(&disc, ctx);
    (&root - c1).checked_div(&c2.mul_int(2))
}

/// Samples the transformed quintic and records every guard check.
pub struct Sampler<'a> {
    ctx: &'a PrecisionCtx,
    template: EntryTemplate,
    guards: Vec<GuardRecord>,
}

impl<'a> Sampler<'a> {
    pub fn new(f: &'a MonicQuintic, ctx: &'a PrecisionCtx) -> Self {
        Sampler {
            ctx,
            template: EntryTemplate::new(f, ctx),
            guards: Vec::new(),
        }
    }

    pub fn guards(&self) -> &[GuardRecord] {
        &self.guards
    }

    fn record(&mut self, claim: &'static str, log10_mismatch: f64) {
        match self.guards.iter_mut().find(|g| g.claim == claim) {
            Some(g) => {
                g.checks += 1;
                if log10_mismatch > g.worst_log10_mismatch {
                    g.worst_log10_mismatch = log10_mismatch;
                }
            }
            None => self.guards.push(GuardRecord {
                claim,
                checks: 1,
                worst_log10_mismatch: log10_mismatch,
            }),
        }
    }

    fn fit(&mut self, claim: &'static str, samples: &[(AppComplex, AppComplex)], degree: usize) -> Result<Vec<AppComplex>> {
        let fit = fit_coeffs_named(claim, samples, degree, self.ctx)?;
        self.record(claim, fit.log10_mismatch);
        Ok(fit.coeffs)
    }

    fn fit_on_integers(
        &mut self,
        claim: &'static str,
        degree: usize,
        mut g: impl FnMut(&mut Self, &AppComplex) -> Result<AppComplex>,
    ) -> Result<Vec<AppComplex>> {
        let mut samples = Vec::with_capacity(degree + 2);
        for t in 0..degree as i64 + 2 {
            let x = self.ctx.int(t);
            let v = g(self, &x)?;
            samples.push((x, v));
        }
        self.fit(claim, &samples, degree)
    }

    pub fn transformed(&self, a: &AppComplex, b: &AppComplex, c: &AppComplex, d: &AppComplex) -> Result<Poly> {
        let m = self.template.matrix(a, b, c, d, self.ctx);
        normalize_transformed(det5(&m, self.ctx), self.ctx)
    }

    /// `a` cancelling Poly4, from the affine dependence of Poly4 on `a`.
    pub fn solve_a(&mut self, b: &AppComplex, c: &AppComplex, d: &AppComplex) -> Result<AppComplex> {
        let u = self.fit_on_integers(CLAIM_POLY4_IN_A, 1, |s, a| Ok(s.transformed(a, b, c, d)?.coeff(4, s.ctx)))?;
        if u[1].is_zero() {
            return Err(Error::DegenerateLeading("Poly4 slope in a"));
        }
        (-&u[0]).checked_div(&u[1])
    }

    /// Transformed quintic with `b = alpha d + xi`, `c = d + eta` and `a` solved.
    pub fn substituted(&mut self, alpha: &AppComplex, eta: &AppComplex, xi: &AppComplex, d: &AppComplex) -> Result<(AppComplex, Poly)> {
        let b = &(alpha * d) + xi;
        let c = d + eta;
        let a = self.solve_a(&b, &c, d)?;
        let t = self.transformed(&a, &b, &c, d)?;
        Ok((a, t))
    }

    /// Coefficients of Poly3 as a quadratic in d.
    pub fn poly3_in_d(&mut self, alpha: &AppComplex, eta: &AppComplex, xi: &AppComplex) -> Result<Vec<AppComplex>> {
        self.fit_on_integers(CLAIM_POLY3_IN_D, 2, |s, d| Ok(s.substituted(alpha, eta, xi, d)?.1.coeff(3, s.ctx)))
    }

    /// The quadratic in alpha carried by the d^2 coefficient of Poly3, scaled
    /// by -5 so its leading coefficient is `2m^2 - 5n`.
    pub fn alpha_quadratic(&mut self) -> Result<Vec<AppComplex>> {
        let zero = self.ctx.zero();
        let q = self.fit_on_integers(CLAIM_D2_IN_ALPHA, 2, |s, alpha| Ok(s.poly3_in_d(alpha, &zero, &zero)?[2].clone()))?;
        Ok(q.iter().map(|c| c.mul_int(-5)).collect())
    }

    /// '+' root of the alpha quadratic. When `2m^2 - 5n` vanishes the
    /// quadratic is linear and its single root is taken.
    pub fn solve_alpha(&mut self) -> Result<AppComplex> {
        let q = self.alpha_quadratic()?;
        match quadratic_plus(&q, "alpha quadratic", self.ctx) {
            Err(Error::DegenerateLeading(_)) => {
                let bound = Float::with_val(self.ctx.prec(), max_abs(&[&q[0], &q[1], &q[2]], self.ctx) * self.ctx.half_tol());
                if q[1].abs() <= bound {
                    return Err(Error::DegenerateLeading("alpha quadratic"));
                }
                (-&q[0]).checked_div(&q[1])
            }
            other => other,
        }
    }

    /// `(u0, u_eta, u_xi)` of the affine d^1 coefficient of Poly3.
    pub fn d1_affine(&mut self, alpha: &AppComplex) -> Result<[AppComplex; 3]> {
        let ctx = self.ctx;
        let (zero, one) = (ctx.zero(), ctx.one());
        let u0 = self.poly3_in_d(alpha, &zero, &zero)?[1].clone();
        let ue = &self.poly3_in_d(alpha, &one, &zero)?[1] - &u0;
        let ux = &self.poly3_in_d(alpha, &zero, &one)?[1] - &u0;
        let guard = self.poly3_in_d(alpha, &one, &one)?[1].clone();
        let predicted = &(&u0 + &ue) + &ux;
        let mismatch = (&predicted - &guard).abs();
        let scale = max_abs(&[&u0, &ue, &ux, &guard], ctx);
        let log10_mismatch = if mismatch.is_zero() {
            f64::NEG_INFINITY
        } else {
            Float::with_val(ctx.prec(), &mismatch / &scale).log10().to_f64()
        };
        if mismatch > Float::with_val(ctx.prec(), &scale * &ctx.half_tol()) {
            return Err(Error::DegreeGuardFailure {
                what: CLAIM_D1_IN_ETA_XI,
                degree: 1,
                log10_mismatch,
            });
        }
        self.record(CLAIM_D1_IN_ETA_XI, log10_mismatch);
        let bound = Float::with_val(ctx.prec(), &scale * &ctx.half_tol());
        if ue.abs() <= bound {
            return Err(Error::DegenerateLeading("eta coefficient"));
        }
        Ok([u0, ue, ux])
    }

    /// Solves for `(eta, xi)` making Poly3 vanish identically in d.
    pub fn solve_eta_xi(&mut self, alpha: &AppComplex) -> Result<(AppComplex, AppComplex)> {
        let [u0, ue, ux] = self.d1_affine(alpha)?;
        let eta_of = |xi: &AppComplex| (-(&u0 + &(&ux * xi))) / &ue;
        let q = self.fit_on_integers(CLAIM_D0_IN_XI, 2, |s, xi| {
            let eta = eta_of(xi);
            Ok(s.poly3_in_d(alpha, &eta, xi)?[0].clone())
        })?;
        let k = ue.square().mul_int(-125);
        let q: Vec<AppComplex> = q.iter().map(|c| c * &k).collect();
        let xi = quadratic_plus(&q, "xi quadratic", self.ctx)?;
        let eta = eta_of(&xi).ensure_finite("eta")?;
        Ok((eta, xi))
    }

    /// Coefficients `[d0, d1, d2, d3]` of Poly2 as a cubic in d.
    pub fn d_cubic(&mut self, alpha: &AppComplex, eta: &AppComplex, xi: &AppComplex) -> Result<Vec<AppComplex>> {
        self.fit_on_integers(CLAIM_POLY2_IN_D, 3, |s, d| Ok(s.substituted(alpha, eta, xi, d)?.1.coeff(2, s.ctx)))
    }

    pub fn solve_d(&mut self, alpha: &AppComplex, eta: &AppComplex, xi: &AppComplex) -> Result<AppComplex> {
        let c = self.d_cubic(alpha, eta, xi)?;
        let bound = Float::with_val(self.ctx.prec(), max_abs(&c.iter().collect::<Vec<_>>(), self.ctx) * self.ctx.half_tol());
        if c[3].abs() <= bound {
            return Err(Error::DegenerateLeading("d cubic"));
        }
        let roots = cardano_roots(&c[3], &c[2], &c[1], &c[0], self.ctx)?;
        Ok(roots[0].clone())
    }
}

pub fn solve_a(f: &MonicQuintic, b: &AppComplex, c: &AppComplex, d: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    Sampler::new(f, ctx).solve_a(b, c, d)
}

pub fn solve_alpha(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<AppComplex> {
    Sampler::new(f, ctx).solve_alpha()
}

pub fn solve_eta_xi(f: &MonicQuintic, alpha: &AppComplex, ctx: &PrecisionCtx) -> Result<(AppComplex, AppComplex)> {
    Sampler::new(f, ctx).solve_eta_xi(alpha)
}

pub fn solve_d(f: &MonicQuintic, alpha: &AppComplex, eta: &AppComplex, xi: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    Sampler::new(f, ctx).solve_d(alpha, eta, xi)
}

/// Shifts tried, in order, when a leading coefficient degenerates.
pub fn shift_ladder(ctx: &PrecisionCtx) -> Vec<AppComplex> {
    [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (2, 0), (-2, 0), (0, 2)]
        .iter()
        .map(|&(re, im)| AppComplex::from_gauss(re, im, ctx))
        .collect()
}

/// One reduction at fixed precision and without shifting.
pub fn reduce_unshifted(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<BringReduction> {
    let f = f.at(ctx);
    let mut sm = Sampler::new(&f, ctx);
    let alpha = sm.solve_alpha()?;
    let (eta, xi) = sm.solve_eta_xi(&alpha)?;
    let d = sm.solve_d(&alpha, &eta, &xi)?;
    finish_reduction(&f, sm, alpha, eta, xi, d, ctx)
}

/// Reduction by `y = -(x^4 + a)` alone, for quintics whose alpha equation
/// has no solution (translates of `x^5 + r`). The quintic is first
/// translated to `m = 0`.
pub fn reduce_power_transform(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<BringReduction> {
    let t = f.m.at(ctx).div_int(5);
    let g = f.at(ctx).shifted(&t, ctx);
    let sm = Sampler::new(&g, ctx);
    let zero = ctx.zero();
    let mut red = finish_reduction(&g, sm, zero.clone(), zero.clone(), zero.clone(), zero, ctx)?;
    red.shift = t;
    Ok(red)
}

fn finish_reduction(
    f: &MonicQuintic,
    mut sm: Sampler<'_>,
    alpha: AppComplex,
    eta: AppComplex,
    xi: AppComplex,
    d: AppComplex,
    ctx: &PrecisionCtx,
) -> Result<BringReduction> {
    let f = f.clone();
    let b = &(&alpha * &d) + &xi;
    let c = &d + &eta;
    let a = sm.solve_a(&b, &c, &d)?;
    let t = sm.transformed(&a, &b, &c, &d)?;

    let big_a = t.coeff(1, ctx);
    let big_b = t.coeff(0, ctx);
    let mut scale = big_a.abs().max(&big_b.abs());
    if scale < 1 {
        scale = Float::with_val(ctx.prec(), 1);
    }
    let tol = Float::with_val(ctx.prec(), &scale * &ctx.half_tol());
    let vanish_residuals = [4, 3, 2].map(|k| Float::with_val(ctx.prec(), t.coeff(k, ctx).abs() / &scale));
    for (k, v) in [4, 3, 2].iter().zip(&vanish_residuals) {
        if *v > ctx.half_tol() {
            return Err(Error::VanishFailure {
                which: ["Poly4", "Poly3", "Poly2"][4 - k],
                log10_residual: v.to_f64().log10(),
            });
        }
    }

    let a_crosscheck = log10_rel(&a, &printed_a(&f, &b, &c, &d, ctx));
    let lead = &f.m.square().mul_int(2) - &f.n.mul_int(5);
    let alpha_crosscheck = if lead.abs() > Float::with_val(ctx.prec(), f.scale(ctx).square() * ctx.half_tol()) {
        printed_alpha(&f, ctx).ok().map(|pa| log10_rel(&alpha, &pa))
    } else {
        None
    };

    let (kind, s, quartic_root_scale) = if big_a.abs() <= tol {
        (ReductionKind::PureRadicalA, ctx.zero(), ctx.zero())
    } else if big_b.abs() <= tol {
        (ReductionKind::PureRadicalB, ctx.zero(), pow_rational(&-&big_a, 1, 4, ctx)?)
    } else {
        let neg_a = -&big_a;
        let root4 = pow_rational(&neg_a, 1, 4, ctx)?;
        let root54 = pow_rational(&neg_a, 5, 4, ctx)?;
        let s = (-&big_b).checked_div(&root54)?;
        (ReductionKind::Bring, s, root4)
    };

    Ok(BringReduction {
        big_a,
        big_b,
        s,
        quartic_root_scale,
        shift: ctx.zero(),
        dilation: 0,
        kind,
        params: TschirnhausParams {
            a,
            b,
            c,
            d,
            alpha,
            xi,
            eta,
            vanish_residuals,
            guards: sm.guards,
            a_crosscheck,
            alpha_crosscheck,
        },
        reduced: f.clone(),
        transformed: t,
        digits: ctx.digits,
    })
}

fn needs_shift(e: &Error) -> bool {
    matches!(
        e.root_cause(),
        Error::DegenerateLeading(_) | Error::DegenerateCubic | Error::DegenerateTransform
    )
}

/// Reduction at fixed precision, walking the shift ladder on degeneracy.
/// When every shift degenerates the quintic is rescaled to unit-size roots
/// and the ladder is walked again.
pub fn reduce_at(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<BringReduction> {
    let f = f.at(ctx);
    match reduce_translated(&f, ctx) {
        Err(Error::ShiftLadderExhausted(n)) => {
            let e = f.root_size_exponent();
            if e == 0 {
                return Err(Error::ShiftLadderExhausted(n));
            }
            let mut red = reduce_translated(&f.dilated(e), ctx)?;
            red.dilation = e;
            Ok(red)
        }
        other => other,
    }
}

fn reduce_translated(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<BringReduction> {
    match reduce_unshifted(f, ctx) {
        Err(Error::DegenerateLeading("alpha quadratic")) => match reduce_power_transform(f, ctx) {
            Err(e) if needs_shift(&e) || matches!(e, Error::VanishFailure { .. }) => {}
            other => return other,
        },
        Err(e) if needs_shift(&e) => {}
        other => return other,
    }
    let ladder = shift_ladder(ctx);
    for t in &ladder {
        let shifted = f.shifted(t, ctx);
        match reduce_unshifted(&shifted, ctx) {
            Ok(mut red) => {
                red.shift = t.clone();
                return Ok(red);
            }
            Err(e) if needs_shift(&e) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::ShiftLadderExhausted(ladder.len()))
}

/// Full reduction: shift ladder on degeneracy, precision x2 then x4 when a
/// check fails.
pub fn reduce_to_bring(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<BringReduction> {
    let mut last = None;
    for factor in [1, 2, 4] {
        let c = ctx.escalate(factor);
        match reduce_at(f, &c) {
            Ok(r) => return Ok(r),
            Err(e) if e.is_precision_sensitive() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::PrecisionExhausted {
        digits: ctx.digits * 4,
        reason: last.map(|e| e.to_string()).unwrap_or_default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpfield::parse_complex;
    use rug::ops::Pow;

    fn ctx(d: u32) -> PrecisionCtx {
        PrecisionCtx::new(d).unwrap()
    }

    pub(crate) fn worked_quintic(ctx: &PrecisionCtx) -> MonicQuintic {
        MonicQuintic::parse(["-200i", "1340", "12.34910", "-239.18200", "339.2181700"], ctx).unwrap()
    }

    fn entry(f: &MonicQuintic, i: usize, j: usize, abcd: [i64; 4], ctx: &PrecisionCtx) -> Poly {
        let [a, b, c, d] = abcd.map(|v| ctx.int(v));
        build_matrix(f, &a, &b, &c, &d, ctx).entries[i][j].clone()
    }

    #[test]
    fn dilation_divides_roots() {
        let x = ctx(40);
        let roots: Vec<_> = [(3, 1), (-2, 0), (5, -4), (0, 7), (1, 1)].iter().map(|&(a, b)| AppComplex::from_gauss(a, b, &x)).collect();
        let f = MonicQuintic::from_roots(&roots, &x);
        let g = f.dilated(3);
        let eighth = Float::with_val(x.prec(), 0.125);
        for r in &roots {
            assert!(g.eval(&r.scale(&eighth), &x).is_zero());
        }
        assert_eq!(f.dilated(0), f);
        let big = MonicQuintic::new(x.int(1000), x.int(1000_000), x.zero(), x.zero(), x.zero());
        assert_eq!(big.root_size_exponent(), 10);
    }

    #[test]
    fn printed_entries() {
        let x = ctx(40);
        let f = MonicQuintic::parse(["2", "0", "0", "3", "7"], &x).unwrap();
        assert_eq!(entry(&f, 1, 4, [0, 0, 0, 1], &x), Poly::constant(x.one()));
        assert_eq!(entry(&f, 1, 0, [5, 6, 7, 8], &x), Poly::constant(x.int(7)));
        let g = MonicQuintic::parse(["0", "0", "0", "3", "0"], &x).unwrap();
        assert_eq!(entry(&g, 1, 1, [1, 0, 0, 0], &x), Poly::linear(x.int(2), x.int(-1)));
    }

    #[test]
    fn x5_minus_1_trivial_substitution() {
        let x = ctx(40);
        let f = MonicQuintic::parse(["0", "0", "0", "0", "-1"], &x).unwrap();
        let z = x.zero();
        let t = transformed_poly(&f, &z, &z, &z, &z, &x).unwrap();
        let expect = Poly::new(vec![x.one(), z.clone(), z.clone(), z.clone(), z.clone(), x.one()]);
        assert_eq!(t, expect);
    }

    #[test]
    fn solve_a_examples() {
        let x = ctx(40);
        let z = x.zero();
        let f = MonicQuintic::parse(["0", "0", "0", "5", "0"], &x).unwrap();
        assert!(solve_a(&f, &z, &z, &z, &x).unwrap().close_to(&x.int(4), &x.pow10(-35)));
        let f = MonicQuintic::parse(["1", "0", "0", "0", "0"], &x).unwrap();
        assert!(solve_a(&f, &z, &z, &z, &x).unwrap().close_to(&x.ratio(-1, 5), &x.pow10(-35)));
    }

    #[test]
    fn solve_a_matches_printed_form() {
        let x = ctx(60);
        let f = MonicQuintic::parse(["1.5-2i", "0.25+3i", "-7", "2i", "11-0.5i"], &x).unwrap();
        let b = parse_complex("0.3-1.1i", &x).unwrap();
        let c = parse_complex("-2+0.7i", &x).unwrap();
        let d = parse_complex("4.5", &x).unwrap();
        let a = solve_a(&f, &b, &c, &d, &x).unwrap();
        assert!(a.close_to(&printed_a(&f, &b, &c, &d, &x), &x.pow10(-45)));
    }

    #[test]
    fn alpha_matches_printed_form_on_worked_example() {
        let x = ctx(80);
        let f = worked_quintic(&x);
        let alpha = solve_alpha(&f, &x).unwrap();
        assert!(alpha.close_to(&printed_alpha(&f, &x).unwrap(), &x.pow10(-65)));
        let expect = parse_complex("42263.34135932414921417170223994797938464-1479.524974260743315977836689558172821109i", &x).unwrap();
        assert!(alpha.close_to(&expect, &x.pow10(-38)));
    }

    #[test]
    fn alpha_mn0_linear_root_matches_printed_branch() {
        let x = ctx(50);
        let f = MonicQuintic::parse(["0", "0", "0", "1", "0"], &x).unwrap();
        assert!(printed_alpha_mn0(&f, &x).unwrap().close_to(&x.ratio(-1, 2), &x.pow10(-45)));
        let q = Sampler::new(&f, &x).alpha_quadratic().unwrap();
        assert!(q[2].abs() < x.pow10(-40));
        let linear_root = (-&q[0]) / &q[1];
        assert!(linear_root.close_to(&x.ratio(-1, 2), &x.pow10(-40)));
        assert!(solve_alpha(&f, &x).unwrap().close_to(&x.ratio(-1, 2), &x.pow10(-40)));
        let red = reduce_to_bring(&f, &x).unwrap();
        assert!(red.params.vanish_residuals.iter().all(|v| *v <= x.half_tol()));
    }

    #[test]
    fn worked_example_intermediates() {
        let x = ctx(80);
        let f = worked_quintic(&x);
        let red = reduce_to_bring(&f, &x).unwrap();
        let p = &red.params;
        let check = |v: &AppComplex, s: &str| {
            let e = parse_complex(s, &x).unwrap();
            assert!(v.close_to(&e, &x.pow10(-36)), "{v:?} vs {s}");
        };
        check(&p.xi, "294600.0753274417151845979750234219808655+8452230.219438852803534021757109534228529i");
        check(&p.eta, "1342.333907566952487221881676042834333573+193.6343972780199078483285403747910552943i");
        check(&p.d, "0.03221248079007400538883853915510441775167-199.9906556262772803500902338414504205938i");
        check(&p.a, "-78.96502060430539396306533572482463724236+144.2369013522643872309717103318582060774i");
        check(&red.big_a, "-31809308836.14620180942717552287181109556-81518237438.22066706118296295804100388455i");
        check(&red.big_b, "-27125443488231.09091282580408982814403096+40895830046376.17080427654259275008209253i");
        check(&red.s, "-0.8158433214180918872597965623096107880569-0.6305762744559255176620934229376728312708i");
        assert_eq!(red.kind, ReductionKind::Bring);
        assert!(red.shift.is_zero());
        assert!(p.a_crosscheck < -60.0, "{}", p.a_crosscheck);
        assert!(p.alpha_crosscheck.unwrap() < -60.0);
        let claims: Vec<_> = p.guards.iter().map(|g| g.claim).collect();
        for claim in [CLAIM_POLY4_IN_A, CLAIM_POLY3_IN_D, CLAIM_D2_IN_ALPHA, CLAIM_D1_IN_ETA_XI, CLAIM_D0_IN_XI, CLAIM_POLY2_IN_D] {
            assert!(claims.contains(&claim), "{claim}");
        }
    }

    #[test]
    fn s_definition_holds() {
        let x = ctx(60);
        let f = MonicQuintic::parse(["1+2i", "-3", "0.5i", "7", "-2+1i"], &x).unwrap();
        let red = reduce_to_bring(&f, &x).unwrap();
        let neg_a = -&red.big_a;
        let lhs = &(&red.s * &pow_rational(&neg_a, 5, 4, &x).unwrap()) + &red.big_b;
        let a54 = red.big_a.abs().pow(Float::with_val(x.prec(), 1.25));
        let bound = a54.max(&red.big_b.abs()) * x.pow10(-50);
        assert!(lhs.abs() <= bound);
    }

    #[test]
    fn all_three_d_roots_zero_poly2() {
        let x = ctx(60);
        let f = MonicQuintic::parse(["2-1i", "3", "-1+0.5i", "0.25", "4i"], &x).unwrap();
        let mut sm = Sampler::new(&f, &x);
        let alpha = sm.solve_alpha().unwrap();
        let (eta, xi) = sm.solve_eta_xi(&alpha).unwrap();
        let cubic = sm.d_cubic(&alpha, &eta, &xi).unwrap();
        for d in cardano_roots(&cubic[3], &cubic[2], &cubic[1], &cubic[0], &x).unwrap() {
            let (_, t) = sm.substituted(&alpha, &eta, &xi, &d).unwrap();
            let scale = t.coeff(0, &x).abs().max(&t.coeff(1, &x).abs());
            for k in [4, 3, 2] {
                assert!(t.coeff(k, &x).abs() <= Float::with_val(x.prec(), &scale * x.half_tol()));
            }
        }
    }

    #[test]
    fn shift_moves_roots() {
        let x = ctx(40);
        let roots: Vec<_> = (1..=5).map(|k| x.int(k)).collect();
        let f = MonicQuintic::from_roots(&roots, &x);
        let t = AppComplex::from_gauss(0, 1, &x);
        let g = f.shifted(&t, &x);
        for r in &roots {
            assert!(g.eval(&(r + &t), &x).abs() < x.pow10(-30));
        }
    }

    #[test]
    fn forced_degenerate_cases_reduce() {
        let x = ctx(50);
        for texts in [["0", "0", "3", "-2", "1"], ["2", "1.6", "1", "-1", "0.5"]] {
            let f = MonicQuintic::parse(texts, &x).unwrap();
            let red = reduce_to_bring(&f, &x).unwrap();
            assert!(red.params.vanish_residuals.iter().all(|v| *v <= x.half_tol()), "{texts:?}");
        }
    }

    #[test]
    fn polynomial_parser() {
        let p = parse_polynomial("-2*m^3*q+d-7");
        assert_eq!(p.len(), 3);
        assert_eq!(p[0].coef, -2);
        assert_eq!(p[0].exps[0], 3);
        assert_eq!(p[0].exps[3], 1);
        assert_eq!(p[1].exps[8], 1);
        assert_eq!(p[2].coef, -7);
    }
}
