//! Cardano and Ferrari kernels and the end-to-end quintic solver.

use rug::Float;

use crate::bring::{newton_polish, solve_bring_with, BringSolution, BringStrategy, StrategyChoice};
use crate::error::{Error, Result, Stage};
use crate::mpfield::{pow_rational, sqrt_principal, unity_root, AppComplex, PrecisionCtx};
use crate::polyring::{eval, Poly};
use crate::tschirnhaus::{reduce_at, BringReduction, MonicQuintic, ReductionKind};

/// `x^4 + p3 x^3 + p2 x^2 + p1 x + p0`
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticCoeffs {
    pub p3: AppComplex,
    pub p2: AppComplex,
    pub p1: AppComplex,
    pub p0: AppComplex,
}

impl QuarticCoeffs {
    pub fn new(p3: AppComplex, p2: AppComplex, p1: AppComplex, p0: AppComplex) -> Self {
        QuarticCoeffs { p3, p2, p1, p0 }
    }

    pub fn poly(&self, ctx: &PrecisionCtx) -> Poly {
        Poly::new(vec![self.p0.clone(), self.p1.clone(), self.p2.clone(), self.p3.clone(), ctx.one()])
    }
}

fn max_float(values: impl IntoIterator<Item = Float>, ctx: &PrecisionCtx) -> Float {
    values
        .into_iter()
        .fold(Float::new(ctx.prec()), |m, a| if a > m { a } else { m })
}

/// Roots of `c3 x^3 + c2 x^2 + c1 x + c0`.
///
/// Index 0 is Cardano's expression with principal square and cube roots;
/// indices 1 and 2 rotate the cube-root term by `w` and `w^2`, `w = e^{2 pi i/3}`.
pub fn cardano_roots(
    c3: &AppComplex,
    c2: &AppComplex,
    c1: &AppComplex,
    c0: &AppComplex,
    ctx: &PrecisionCtx,
) -> Result<[AppComplex; 3]> {
    let scale = max_float([c3.abs(), c2.abs(), c1.abs(), c0.abs()], ctx);
    if c3.is_zero() || c3.abs() <= Float::with_val(ctx.prec(), &scale * ctx.half_tol()) {
        return Err(Error::DegenerateCubic);
    }
    // discriminant-like radicand 4 c1^3 c3 - c1^2 c2^2 - 18 c1 c2 c3 c0 + 27 c0^2 c3^2 + 4 c0 c2^3
    let c1_2 = c1.square();
    let c2_2 = c2.square();
    let c3_2 = c3.square();
    let mut delta = (&(&c1_2 * c1) * c3).mul_int(4);
    delta -= &(&c1_2 * &c2_2);
    delta -= &(&(&(c1 * c2) * c3) * c0).mul_int(18);
    delta += &(&c0.square() * &c3_2).mul_int(27);
    delta += &(&(c0 * &c2_2) * c2).mul_int(4);
    let sqrt3 = Float::with_val(ctx.prec(), 3).sqrt();
    let root_term = (&sqrt_principal(&delta, ctx) * c3).mul_int(12).scale(&sqrt3);
    let mut base = (&(c1 * c2) * c3).mul_int(36);
    base -= &(c0 * &c3_2).mul_int(108);
    base -= &(&c2_2 * c2).mul_int(8);
    let base_scale = max_float([base.abs(), root_term.abs()], ctx);
    let tiny = Float::with_val(ctx.prec(), &base_scale * ctx.half_tol());

    let offset = (-c2).checked_div(&c3.mul_int(3))?;
    // 3 c1 c3 - c2^2
    let p = &(c1 * c3).mul_int(3) - &c2_2;

    let mut cube = None;
    for radicand in [&base + &root_term, &base - &root_term] {
        if radicand.abs() > tiny && !radicand.is_zero() {
            cube = Some(pow_rational(&radicand, 1, 3, ctx)?);
            break;
        }
    }
    let Some(cbrt) = cube else {
        let p_scale = max_float([(c1 * c3).abs() * 3u32, c2_2.abs()], ctx);
        if p.abs() <= Float::with_val(ctx.prec(), &p_scale * ctx.half_tol()) {
            return Ok([offset.clone(), offset.clone(), offset]);
        }
        return Err(Error::CancellationFailure);
    };
    let six_c3 = c3.mul_int(6);
    let mut out: [AppComplex; 3] = std::array::from_fn(|_| ctx.zero());
    for (k, slot) in out.iter_mut().enumerate() {
        let ck = if k == 0 { cbrt.clone() } else { &cbrt * &unity_root(k as u32, 3, ctx) };
        let first = ck.checked_div(&six_c3)?;
        let second = p.mul_int(2).checked_div(&(&(c3 * &ck)).mul_int(3))?;
        *slot = &(&first - &second) + &offset;
    }
    Ok(out)
}

/// `sum |c_i| max(1, |x|)^i`: relative to the terms for large `x`, absolute
/// near the origin, where a root at exactly zero is only found to rounding.
fn root_scale(poly: &Poly, x: &AppComplex, ctx: &PrecisionCtx) -> Float {
    let ax = x.abs();
    let r = if ax < 1 { Float::with_val(ctx.prec(), 1) } else { ax };
    poly.residual_scale(&AppComplex::from_real(r, ctx), ctx)
}

/// Residual of `x` in `poly`, relative to [`root_scale`].
pub fn relative_residual(poly: &Poly, x: &AppComplex, ctx: &PrecisionCtx) -> Float {
    let r = eval(poly, x, ctx).abs();
    let scale = root_scale(poly, x, ctx);
    if scale.is_zero() {
        return r;
    }
    r / scale
}

/// Ferrari: factor as `(x^2 + (p3/2) x + g)^2 - (e x + f)^2` with `g` a
/// root of the resolvent cubic
/// `g^3 - (p2/2) g^2 + ((p1 p3 - 4 p0)/4) g - (p1^2 + p3^2 p0 - 4 p2 p0)/8`.
pub fn ferrari_roots(quartic: &QuarticCoeffs, ctx: &PrecisionCtx) -> Result<[AppComplex; 4]> {
    let QuarticCoeffs { p3, p2, p1, p0 } = quartic;
    let poly = quartic.poly(ctx);
    let one = ctx.one();
    let r2 = -&p2.div_int(2);
    let r1 = (&(p1 * p3) - &p0.mul_int(4)).div_int(4);
    let mut r0 = p1.square();
    r0 += &(&p3.square() * p0);
    r0 -= &(p2 * p0).mul_int(4);
    let r0 = -&r0.div_int(8);
    let gs = cardano_roots(&one, &r2, &r1, &r0, ctx)?;
    let tol = ctx.pow10(-(ctx.digits as i64) + 12);
    let coeff_scale = max_float([p3.abs(), p2.abs(), p1.abs(), p0.abs(), Float::with_val(ctx.prec(), 1)], ctx);
    let e_tol = Float::with_val(ctx.prec(), coeff_scale.sqrt() * ctx.half_tol());
    for g in &gs {
        let Ok(roots) = ferrari_with(p3, p2, p1, p0, g, &e_tol, ctx) else {
            continue;
        };
        if roots.iter().all(|x| relative_residual(&poly, x, ctx) <= tol) {
            return Ok(roots);
        }
    }
    Err(Error::ResolventFailure)
}

fn ferrari_with(
    p3: &AppComplex,
    p2: &AppComplex,
    p1: &AppComplex,
    p0: &AppComplex,
    g: &AppComplex,
    e_tol: &Float,
    ctx: &PrecisionCtx,
) -> Result<[AppComplex; 4]> {
    let p3_2 = p3.square();
    let e = sqrt_principal(&(&(&p3_2.div_int(4) + &g.mul_int(2)) - p2), ctx);
    let f = if e.abs() <= *e_tol {
        sqrt_principal(&(&g.square() - p0), ctx)
    } else {
        (&(p3 * g) - p1).checked_div(&e.mul_int(2))?
    };
    let lead = -&p3.div_int(4);
    let half_e = e.div_int(2);
    let common = &(&p3_2 + &e.square().mul_int(4)) - &g.mul_int(16);
    let pe4 = (p3 * &e).mul_int(4);
    let f16 = f.mul_int(16);
    let w12 = sqrt_principal(&(&(&common - &pe4) + &f16), ctx).div_int(4);
    let w34 = sqrt_principal(&(&(&common + &pe4) - &f16), ctx).div_int(4);
    let a = &lead + &half_e;
    let b = &lead - &half_e;
    Ok([&a + &w12, &a - &w12, &b + &w34, &b - &w34])
}

/// Outcome of picking the quintic root among the four quartic candidates.
#[derive(Clone, Debug)]
pub struct Selection {
    pub root: AppComplex,
    /// Zero-based.
    pub index: usize,
    /// |quintic(candidate)|
    pub residuals: [Float; 4],
}

/// The candidate with the smallest quintic residual, required to be a root
/// and to beat the runner-up by a factor 10^(digits/4).
pub fn select_quintic_root(f: &MonicQuintic, candidates: &[AppComplex; 4], ctx: &PrecisionCtx) -> Result<Selection> {
    let poly = f.poly(ctx);
    let residuals: [Float; 4] = std::array::from_fn(|i| eval(&poly, &candidates[i], ctx).abs());
    let rel: Vec<Float> = (0..4).map(|i| relative_residual(&poly, &candidates[i], ctx)).collect();
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&i, &j| rel[i].partial_cmp(&rel[j]).unwrap());
    // near-ties (within a factor 10) go to the smaller index
    let mut best = order[0];
    for &i in &order[1..] {
        if i < best && rel[i] <= Float::with_val(ctx.prec(), &rel[order[0]] * 10u32) {
            best = i;
        }
    }
    let runner_up = order.iter().copied().find(|&i| i != best).unwrap();
    let log10s: Vec<f64> = residuals.iter().map(|r| if r.is_zero() { f64::NEG_INFINITY } else { r.clone().log10().to_f64() }).collect();
    if rel[best] > ctx.half_tol() {
        return Err(Error::NotARoot {
            log10_residual: rel[best].clone().log10().to_f64(),
        });
    }
    let gap = ctx.pow10f(ctx.digits as f64 / 4.0);
    if Float::with_val(ctx.prec(), &rel[best] * &gap) > rel[runner_up] {
        return Err(Error::AmbiguousSelection { log10_residuals: log10s });
    }
    Ok(Selection {
        root: candidates[best].clone(),
        index: best,
        residuals,
    })
}

/// Quotient of the quintic by `x - r1`, with the coefficient formulas
/// `dd = m + r1`, `cc = n + m r1 + r1^2`, `bb = p + n r1 + m r1^2 + r1^3`,
/// `aa = q + p r1 + n r1^2 + m r1^3 + r1^4`.
pub fn deflate_quintic(f: &MonicQuintic, r1: &AppComplex, ctx: &PrecisionCtx) -> Result<QuarticCoeffs> {
    let value = f.eval(r1, ctx);
    let bound = Float::with_val(ctx.prec(), root_scale(&f.poly(ctx), r1, ctx) * ctx.half_tol());
    if value.abs() > bound {
        return Err(Error::NotARoot {
            log10_residual: value.log10_abs(),
        });
    }
    let r2 = r1.square();
    let r3 = &r2 * r1;
    let r4 = &r3 * r1;
    let dd = &f.m + r1;
    let cc = &(&f.n + &r2) + &(&f.m * r1);
    let bb = &(&(&f.p + &(r1 * &f.n)) + &r3) + &(&f.m * &r2);
    let aa = &(&(&(&f.q + &(r1 * &f.p)) + &(&r2 * &f.n)) + &r4) + &(&f.m * &r3);
    Ok(QuarticCoeffs::new(dd, cc, bb, aa))
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    pub strategy: StrategyChoice,
}

#[derive(Clone, Debug)]
pub struct RootReport {
    /// r1 is the root picked through the substitution quartic.
    pub roots: [AppComplex; 5],
    /// |quintic(root)| for the input quintic.
    pub residuals: [Float; 5],
    pub bring: BringSolution,
    pub reduction: BringReduction,
    /// y = (-A)^(1/4) z
    pub y: AppComplex,
    pub candidates: [AppComplex; 4],
    pub candidate_residuals: [Float; 4],
    pub selected_index: usize,
    pub precision_used: u32,
    pub shift_applied: AppComplex,
}

/// Bring-form root `y` of `y^5 + A y + B`.
fn bring_y(red: &BringReduction, opts: &SolveOptions, ctx: &PrecisionCtx) -> Result<(AppComplex, BringSolution)> {
    let y_poly = &red.transformed;
    let polish_y = |y0: &AppComplex| -> Result<(AppComplex, Float)> {
        // Newton on y^5 + A y + B
        let mut y = y0.clone();
        let d = y_poly.derivative();
        let mut res = eval(y_poly, &y, ctx).abs();
        for _ in 0..200 {
            let fy = eval(y_poly, &y, ctx);
            let dy = eval(&d, &y, ctx);
            if dy.is_zero() {
                break;
            }
            let next = &y - &(&fy / &dy);
            let next_res = eval(y_poly, &next, ctx).abs();
            if next_res >= res {
                break;
            }
            y = next;
            res = next_res;
        }
        Ok((y, res))
    };
    match red.kind {
        ReductionKind::Bring => {
            let sol = solve_bring_with(&red.s, opts.strategy, ctx)?;
            let y = &red.quartic_root_scale * &sol.z;
            Ok((y, sol))
        }
        ReductionKind::PureRadicalA => {
            let y0 = pow_rational(&-&red.big_b, 1, 5, ctx)?;
            let (y, res) = polish_y(&y0)?;
            Ok((y, pure_solution(res)))
        }
        ReductionKind::PureRadicalB => {
            let (y, res) = polish_y(&ctx.zero())?;
            Ok((y, pure_solution(res)))
        }
    }
}

fn pure_solution(residual: Float) -> BringSolution {
    let prec = residual.prec();
    BringSolution {
        z: AppComplex::new(Float::new(prec), Float::new(prec)),
        strategy: BringStrategy::PureRadical,
        residual,
        terms_or_steps: 0,
    }
}

fn solve_at(f: &MonicQuintic, opts: &SolveOptions, ctx: &PrecisionCtx) -> Result<RootReport> {
    let f = f.at(ctx);
    let red = reduce_at(&f, ctx).map_err(|e| e.at(Stage::Reduction))?;
    let (y, bring) = bring_y(&red, opts, ctx).map_err(|e| e.at(Stage::Bring))?;
    let g = &red.reduced;
    let p = &red.params;
    let tsch = QuarticCoeffs::new(p.d.clone(), p.c.clone(), p.b.clone(), &p.a + &y);
    let candidates = ferrari_roots(&tsch, ctx).map_err(|e| e.at(Stage::Unwind))?;
    let sel = select_quintic_root(g, &candidates, ctx).map_err(|e| e.at(Stage::Unwind))?;
    let quartic = deflate_quintic(g, &sel.root, ctx).map_err(|e| e.at(Stage::Deflation))?;
    let rest = ferrari_roots(&quartic, ctx).map_err(|e| e.at(Stage::Deflation))?;
    let shift = red.shift.clone();
    let dilation = Float::with_val(ctx.prec(), 1) << red.dilation;
    let unshift = |x: &AppComplex| (x - &shift).scale(&dilation);
    let roots = [
        unshift(&sel.root),
        unshift(&rest[0]),
        unshift(&rest[1]),
        unshift(&rest[2]),
        unshift(&rest[3]),
    ];
    let poly = f.poly(ctx);
    let residuals: [Float; 5] = std::array::from_fn(|i| eval(&poly, &roots[i], ctx).abs());
    verify_roots(&f, &roots, ctx).map_err(|e| e.at(Stage::Verification))?;
    Ok(RootReport {
        roots,
        residuals,
        bring,
        y,
        candidates,
        candidate_residuals: sel.residuals,
        selected_index: sel.index,
        precision_used: ctx.digits,
        shift_applied: shift.scale(&dilation),
        reduction: red,
    })
}

/// Residual and Vieta checks against `10^(-digits/2) max(1, |coefficients|)`.
pub fn verify_roots(f: &MonicQuintic, roots: &[AppComplex; 5], ctx: &PrecisionCtx) -> Result<()> {
    let tol = Float::with_val(ctx.prec(), f.scale(ctx) * ctx.half_tol());
    for x in roots {
        let v = f.eval(x, ctx);
        if v.abs() > tol {
            return Err(Error::NotARoot {
                log10_residual: v.log10_abs(),
            });
        }
    }
    let mut sum = f.m.clone();
    let mut prod = ctx.one();
    for x in roots {
        sum += x;
        prod = &prod * x;
    }
    let prod_err = &prod + &f.r;
    for (name, err) in [("sum of roots", sum), ("product of roots", prod_err)] {
        if err.abs() > tol {
            return Err(Error::PrecisionExhausted {
                digits: ctx.digits,
                reason: format!("Vieta check on the {name} off by 10^{:.1}", err.log10_abs()),
            });
        }
    }
    Ok(())
}

pub fn solve_quintic(f: &MonicQuintic, ctx: &PrecisionCtx) -> Result<RootReport> {
    solve_quintic_with(f, &SolveOptions::default(), ctx)
}

/// Full pipeline, retried at twice and four times the digits when a
/// precision-dependent check fails.
pub fn solve_quintic_with(f: &MonicQuintic, opts: &SolveOptions, ctx: &PrecisionCtx) -> Result<RootReport> {
    let mut last: Option<Error> = None;
    for factor in [1, 2, 4] {
        let c = ctx.escalate(factor);
        match solve_at(f, opts, &c) {
            Ok(report) => return Ok(report),
            Err(e) if e.is_precision_sensitive() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    let last = last.expect("at least one attempt");
    match last.root_cause() {
        Error::AmbiguousSelection { .. } => Err(last),
        _ => {
            let stage = last.stage().unwrap_or(Stage::Verification);
            Err(Error::PrecisionExhausted {
                digits: ctx.digits * 4,
                reason: last.to_string(),
            }
            .at(stage))
        }
    }
}

/// Newton refinement of a Bring root, re-exported for callers polishing
/// their own starting values.
pub fn polish_bring_root(z: &AppComplex, s: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    newton_polish(z, s, ctx).map(|(z, _)| z)
}
