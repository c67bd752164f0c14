//! The principal root of `z^5 - z - s = 0`: the branch with `z ~ -s` near
//! `s = 0`, given by `z = -s 4F3(1/5, 2/5, 3/5, 4/5; 1/2, 3/4, 5/4; 3125 s^4 / 256)`
//! inside the unit disk of the series argument and by continuation of
//! `dz/ds = 1 / (5 z^4 - 1)` outside it.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::mpfield::{AppComplex, PrecisionCtx};

/// Largest |x| accepted by [`hyper4f3`].
pub const SERIES_LIMIT: f64 = 0.9;
/// Largest |x| for which [`solve_bring`] picks the series.
pub const SERIES_THRESHOLD: f64 = 0.8;
/// Step length as a fraction of the distance to the nearest branch point.
const STEP_FRACTION: f64 = 0.2;
const DETOUR_RADIUS: f64 = 0.1;
const DETOUR_TRIGGER: f64 = 0.05;
const MAX_STEPS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BringStrategy {
    Series,
    OdeContinuation,
    /// Newton from `z = -s` when `s` is too small for the series to matter.
    NewtonOnly,
    PureRadical,
}

impl BringStrategy {
    pub fn as_str(&self) -> &'static str {
        match self {
            BringStrategy::Series => "series",
            BringStrategy::OdeContinuation => "ode",
            BringStrategy::NewtonOnly => "newton",
            BringStrategy::PureRadical => "pure-radical",
        }
    }
}

/// Which evaluation route [`solve_bring_with`] may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StrategyChoice {
    #[default]
    Auto,
    Series,
    Ode,
}

#[derive(Clone, Debug)]
pub struct BringSolution {
    pub z: AppComplex,
    pub strategy: BringStrategy,
    /// |z^5 - z - s|
    pub residual: Float,
    /// Series terms or continuation steps.
    pub terms_or_steps: usize,
}

/// 3125 s^4 / 256
pub fn series_argument(s: &AppComplex) -> AppComplex {
    s.square().square().mul_int(3125).div_int(256)
}

/// The four `s*` with `3125 s*^4 = 256`, where the Bring quintic has a double root.
pub fn branch_points(ctx: &PrecisionCtx) -> [AppComplex; 4] {
    // |s*| = 4 * 5^(-5/4)
    let five = Float::with_val(ctx.prec(), 5);
    let r = five.pow(Float::with_val(ctx.prec(), -1.25)) * 4u32;
    let z = Float::new(ctx.prec());
    [
        AppComplex::new(r.clone(), z.clone()),
        AppComplex::new(z.clone(), r.clone()),
        AppComplex::new(Float::with_val(ctx.prec(), -&r), z.clone()),
        AppComplex::new(z, Float::with_val(ctx.prec(), -&r)),
    ]
}

/// 4F3(1/5, 2/5, 3/5, 4/5; 1/2, 3/4, 5/4; x) by its power series.
pub fn hyper4f3(x: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    hyper4f3_counted(x, ctx).map(|(v, _)| v)
}

fn hyper4f3_counted(x: &AppComplex, ctx: &PrecisionCtx) -> Result<(AppComplex, usize)> {
    let abs_x = x.abs().to_f64();
    if abs_x > SERIES_LIMIT {
        return Err(Error::SeriesOutOfRange { abs_x });
    }
    let x = x.at(ctx);
    let eps = ctx.pow10(-(ctx.digits as i64) - 10);
    let mut sum = ctx.one();
    let mut term = ctx.one();
    let mut small_run = 0;
    for k in 0..ctx.max_series_terms as i64 {
        // t_{k+1}/t_k = 32 (5k+1)(5k+2)(5k+3)(5k+4) x / (625 (2k+1)(4k+3)(4k+5)(k+1))
        let mut num = Float::with_val(ctx.prec(), 5 * k + 1);
        num *= 5 * k + 2;
        num *= 5 * k + 3;
        num *= 5 * k + 4;
        num *= 32;
        let mut den = Float::with_val(ctx.prec(), 2 * k + 1);
        den *= 4 * k + 3;
        den *= 4 * k + 5;
        den *= k + 1;
        den *= 625;
        term = (&term * &x).scale(&(num / den));
        sum += &term;
        if term.abs() < Float::with_val(ctx.prec(), sum.abs() * &eps) {
            small_run += 1;
            if small_run == 3 {
                return Ok((sum, k as usize + 1));
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::SeriesDivergence(ctx.max_series_terms))
}

fn bring_residual(z: &AppComplex, s: &AppComplex) -> AppComplex {
    &(&z.powi(5) - z) - s
}

/// Newton on `z^5 - z - s` until the residual reaches the working precision
/// floor or stops decreasing.
pub fn newton_polish(z0: &AppComplex, s: &AppComplex, ctx: &PrecisionCtx) -> Result<(AppComplex, Float)> {
    let mut z = z0.at(ctx);
    let mut res = bring_residual(&z, s).abs();
    let mut scale = s.abs();
    if scale < 1 {
        scale = Float::with_val(ctx.prec(), 1);
    }
    let floor = Float::with_val(ctx.prec(), &scale * ctx.pow10(-(ctx.working_digits() as i64)));
    for _ in 0..200 {
        if res <= floor {
            break;
        }
        let f = bring_residual(&z, s);
        let df = &z.powi(4).mul_int(5) - &ctx.one();
        let next = &z - &f.checked_div(&df)?;
        let next_res = bring_residual(&next, s).abs();
        if next_res >= res {
            break;
        }
        z = next;
        res = next_res;
    }
    Ok((z, res))
}

enum Leg {
    Line { from: AppComplex, to: AppComplex },
    /// Arc of the circle `center + radius e^{i theta}` from `start` through `sweep` radians.
    Arc { center: AppComplex, radius: Float, start: Float, sweep: Float },
}

fn polar(center: &AppComplex, radius: &Float, theta: &Float, ctx: &PrecisionCtx) -> AppComplex {
    let (s, c) = theta.clone().sin_cos(Float::new(ctx.prec()));
    center + &AppComplex::new(c * radius, s * radius)
}

/// Straight path from 0 to `s`, with a semicircle around any branch point that
/// lies close to the chord, bulging to the side away from that point.
fn plan_path(s: &AppComplex, ctx: &PrecisionCtx) -> Vec<Leg> {
    let len = s.abs();
    let u = s.scale(&Float::with_val(ctx.prec(), len.recip_ref()));
    let mut detours: Vec<(Float, AppComplex, Float, bool)> = Vec::new();
    for b in branch_points(ctx) {
        // coordinates of b along and across the chord
        let rel = &b * &u.conj();
        let along = rel.re.clone();
        let across = rel.im.clone();
        if along <= 0 || along >= len || across.clone().abs() >= DETOUR_TRIGGER {
            continue;
        }
        let room = Float::with_val(ctx.prec(), &len - &along).min(&along);
        let radius = Float::with_val(ctx.prec(), DETOUR_RADIUS).min(&Float::with_val(ctx.prec(), &room * 0.9));
        // bulge opposite to b; a point exactly on the chord is circled counterclockwise
        let ccw = across >= 0;
        let center = u.scale(&along);
        detours.push((along, center, radius, ccw));
    }
    detours.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let mut legs = Vec::new();
    let mut pos = ctx.zero();
    let pi = ctx.pi();
    let u_arg = u.arg();
    for (_, center, radius, ccw) in detours {
        let entry = &center - &u.scale(&radius);
        legs.push(Leg::Line { from: pos, to: entry.clone() });
        // the entry point sits at angle arg(u) + pi; a positive sweep passes
        // to the right of the direction of travel
        let start = Float::with_val(ctx.prec(), &u_arg + &pi);
        let sweep = if ccw { pi.clone() } else { Float::with_val(ctx.prec(), -&pi) };
        legs.push(Leg::Arc { center: center.clone(), radius: radius.clone(), start, sweep });
        pos = &center + &u.scale(&radius);
    }
    legs.push(Leg::Line { from: pos, to: s.at(ctx) });
    legs
}

/// Taylor coefficients of the increment `delta(h)` solving
/// `(z0 + delta)^5 - (z0 + delta) = s0 + h` where `z0^5 - z0 = s0`, summed at `h`.
fn taylor_step(z0: &AppComplex, h: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    let z2 = z0.square();
    let z3 = &z2 * z0;
    let j = &z2.square().mul_int(5) - &ctx.one();
    let jinv = ctx.one().checked_div(&j)?;
    let c2 = z3.mul_int(10);
    let c3 = z2.mul_int(10);
    let c4 = z0.mul_int(5);
    let eps = ctx.pow10(-(ctx.digits as i64) - 5);
    let cap = 8 * ctx.working_digits() as usize + 50;

    // coefficient vectors indexed by power of h; entry 0 unused
    let mut dl = vec![ctx.zero(), jinv.clone()];
    let mut p2 = vec![ctx.zero(), ctx.zero()];
    let mut p3 = vec![ctx.zero(), ctx.zero()];
    let mut p4 = vec![ctx.zero(), ctx.zero()];
    let mut p5 = vec![ctx.zero(), ctx.zero()];
    let mut hp = h.clone();
    let mut sum = &jinv * h;
    let mut small_run = 0;
    for k in 2..cap {
        let conv = |a: &[AppComplex], b: &[AppComplex], lo: usize| {
            let mut acc = ctx.zero();
            for i in 1..=k.saturating_sub(lo) {
                acc.add_mul(&a[i], &b[k - i]);
            }
            acc
        };
        p2.push(conv(&dl, &dl, 1));
        p3.push(conv(&dl, &p2, 2));
        p4.push(conv(&dl, &p3, 3));
        p5.push(conv(&dl, &p4, 4));
        let mut rhs = &c2 * &p2[k];
        rhs += &c3 * &p3[k];
        rhs += &c4 * &p4[k];
        rhs += &p5[k];
        let dk = -&(&rhs * &jinv);
        hp = &hp * h;
        let term = &dk * &hp;
        sum += &term;
        dl.push(dk);
        if term.abs() <= Float::with_val(ctx.prec(), sum.abs() * &eps) {
            small_run += 1;
            if small_run == 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NoConvergence(cap))
}

fn nearest_branch_distance(x: &AppComplex, bps: &[AppComplex; 4]) -> Float {
    bps.iter().map(|b| (x - b).abs()).reduce(|a, b| a.min(&b)).unwrap()
}

/// Continuation of the root branch through `z(0) = 0` along the planned
/// path, finished by Newton.
pub fn bring_root_continuation(s: &AppComplex, ctx: &PrecisionCtx) -> Result<AppComplex> {
    continuation_counted(s, ctx).map(|(z, _)| z)
}

fn check_branch_proximity(s: &AppComplex, ctx: &PrecisionCtx) -> Result<()> {
    let bps = branch_points(ctx);
    let near = ctx.pow10f(-(ctx.digits as f64) / 4.0);
    if nearest_branch_distance(s, &bps) <= near {
        return Err(Error::NearBranchPoint);
    }
    Ok(())
}

fn continuation_counted(s: &AppComplex, ctx: &PrecisionCtx) -> Result<(AppComplex, usize)> {
    if s.is_zero() {
        return Ok((ctx.zero(), 0));
    }
    check_branch_proximity(s, ctx)?;
    let bps = branch_points(ctx);
    let mut z = ctx.zero();
    let mut steps = 0;
    let mut advance = |z: &mut AppComplex, target: &AppComplex| -> Result<()> {
        let s0 = &z.powi(5) - &*z;
        let h = target - &s0;
        *z = &*z + &taylor_step(z, &h, ctx)?;
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::StepLimitExceeded(MAX_STEPS));
        }
        Ok(())
    };
    for leg in plan_path(s, ctx) {
        match leg {
            Leg::Line { from, to } => {
                let total = (&to - &from).abs();
                if total.is_zero() {
                    continue;
                }
                let dir = (&to - &from).scale(&Float::with_val(ctx.prec(), total.recip_ref()));
                let mut done = Float::new(ctx.prec());
                while done < total {
                    let here = &from + &dir.scale(&done);
                    let reach = nearest_branch_distance(&here, &bps) * STEP_FRACTION;
                    let remaining = Float::with_val(ctx.prec(), &total - &done);
                    done = if reach >= remaining { total.clone() } else { done + reach };
                    let target = if done == total { to.clone() } else { &from + &dir.scale(&done) };
                    advance(&mut z, &target)?;
                }
            }
            Leg::Arc { center, radius, start, sweep } => {
                let total = Float::with_val(ctx.prec(), sweep.abs_ref());
                let sign = if sweep < 0 { -1 } else { 1 };
                let mut done = Float::new(ctx.prec());
                while done < total {
                    let here = polar(&center, &radius, &(Float::with_val(ctx.prec(), &done * sign) + &start), ctx);
                    let reach = nearest_branch_distance(&here, &bps) * STEP_FRACTION / &radius;
                    let remaining = Float::with_val(ctx.prec(), &total - &done);
                    done = if reach >= remaining { total.clone() } else { done + reach };
                    let theta = Float::with_val(ctx.prec(), &done * sign) + &start;
                    advance(&mut z, &polar(&center, &radius, &theta, ctx))?;
                }
            }
        }
    }
    let (z, _) = newton_polish(&z, s, ctx)?;
    Ok((z, steps))
}

pub fn solve_bring(s: &AppComplex, ctx: &PrecisionCtx) -> Result<BringSolution> {
    solve_bring_with(s, StrategyChoice::Auto, ctx)
}

pub fn solve_bring_with(s: &AppComplex, choice: StrategyChoice, ctx: &PrecisionCtx) -> Result<BringSolution> {
    let s = s.at(ctx);
    let x = series_argument(&s);
    let abs_x = x.abs();
    let tiny = ctx.pow10(-(ctx.working_digits() as i64) - 10);
    let use_series = match choice {
        StrategyChoice::Auto => abs_x <= SERIES_THRESHOLD,
        StrategyChoice::Series => true,
        StrategyChoice::Ode => false,
    };
    let (z0, strategy, count) = if !s.is_zero() && abs_x < tiny && choice == StrategyChoice::Auto {
        (-&s, BringStrategy::NewtonOnly, 0)
    } else if use_series {
        let (f, terms) = hyper4f3_counted(&x, ctx)?;
        (-&(&s * &f), BringStrategy::Series, terms)
    } else {
        let (z, steps) = continuation_counted(&s, ctx)?;
        (z, BringStrategy::OdeContinuation, steps)
    };
    let (z, residual) = newton_polish(&z0, &s, ctx)?;
    Ok(BringSolution {
        z,
        strategy,
        residual,
        terms_or_steps: count,
    })
}
