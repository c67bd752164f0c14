//! Aberth-Ehrlich simultaneous root finder and root-set matching.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;

use crate::error::{Error, Result};
use crate::mpfield::{AppComplex, PrecisionCtx};
use crate::polyring::{eval, Poly};

/// All roots of `poly`, deterministic in `(poly, ctx.seed)`.
pub fn aberth_solve(poly: &Poly, ctx: &PrecisionCtx) -> Result<Vec<AppComplex>> {
    let n = poly.degree();
    let lead = match poly.leading() {
        Some(l) if n >= 1 && !l.is_zero() => l.at(ctx),
        _ => return Err(Error::DegenerateLeading("oracle polynomial")),
    };
    let monic = Poly::new((0..=n).map(|i| poly.coeff(i, ctx).checked_div(&lead)).collect::<Result<_>>()?);
    let deriv = monic.derivative();

    let mut radius = Float::with_val(ctx.prec(), 0);
    for i in 0..n {
        let a = monic.coeff(i, ctx).abs();
        if a > radius {
            radius = a;
        }
    }
    radius += 1;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let offset: f64 = rng.gen_range(0.0..1.0);
    let tau = Float::with_val(ctx.prec(), ctx.pi() * 2u32);
    let mut z: Vec<AppComplex> = (0..n)
        .map(|k| {
            let theta = Float::with_val(ctx.prec(), &tau * (k as f64 + offset)) / n as u32;
            let (s, c) = theta.sin_cos(Float::new(ctx.prec()));
            AppComplex::new(Float::with_val(ctx.prec(), &c * &radius), Float::with_val(ctx.prec(), &s * &radius))
        })
        .collect();

    let step_tol = ctx.pow10f(-(ctx.digits as f64 + ctx.guard_digits as f64 / 2.0));
    let max_iter = 200 * ctx.digits as usize;
    let mut done = vec![false; n];
    let mut best_step: Vec<Option<Float>> = vec![None; n];
    let mut stalls = vec![0usize; n];
    for _ in 0..max_iter {
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
        for k in 0..n {
            if done[k] {
                continue;
            }
            let p = eval(&monic, &z[k], ctx);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            let dp = eval(&deriv, &z[k], ctx);
            let w = if dp.is_zero() { None } else { Some(&p / &dp) };
            let mut sum = ctx.zero();
            for j in 0..n {
                if j != k {
                    let diff = &z[k] - &z[j];
                    if !diff.is_zero() {
                        sum += &diff.recip();
                    }
                }
            }
            let step = match w {
                Some(w) => {
                    let denom = &ctx.one() - &(&w * &sum);
                    if denom.is_zero() {
                        w
                    } else {
                        &w / &denom
                    }
                }
                // nudge off a critical point
                None => AppComplex::from_f64(1e-3, 1e-3, ctx),
            };
            z[k] -= &step;
            let size = step.abs();
            let bound = Float::with_val(ctx.prec(), &step_tol * z[k].abs().max(&Float::with_val(ctx.prec(), 1)));
            if size <= bound {
                done[k] = true;
                continue;
            }
            // corrections that stop shrinking mean the attainable accuracy is reached
            match &best_step[k] {
                Some(b) if size >= *b => {
                    stalls[k] += 1;
                    if stalls[k] >= 8 && size < ctx.pow10f(-(ctx.digits as f64) / 8.0) {
                        done[k] = true;
                    }
                }
                _ => {
                    best_step[k] = Some(size);
                    stalls[k] = 0;
                }
            }
        }
    }
    if done.iter().all(|&d| d) {
        Ok(z)
    } else {
        Err(Error::NoConvergence(max_iter))
    }
}

#[derive(Clone, Debug)]
pub struct RootMatch {
    /// `xs[i]` is paired with `ys[pairing[i]]`.
    pub pairing: Vec<usize>,
    pub max_distance: Float,
    /// Whether `max_distance` was divided by `1 + max magnitude`.
    pub relative: bool,
}

/// Exact minimum over all pairings of the largest pairwise distance,
/// divided by `1 + max |root|`.
pub fn match_rootsets(xs: &[AppComplex], ys: &[AppComplex]) -> RootMatch {
    assert_eq!(xs.len(), ys.len(), "root sets differ in size");
    let prec = xs.iter().chain(ys).map(|z| z.prec()).max().unwrap_or(64);
    let dist: Vec<Vec<Float>> = xs.iter().map(|x| ys.iter().map(|y| (x - y).abs()).collect()).collect();
    let mut best: Option<(Vec<usize>, Float)> = None;
    for perm in (0..ys.len()).permutations(ys.len()) {
        let worst = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| &dist[i][j])
            .fold(Float::new(prec), |m, d| if *d > m { d.clone() } else { m });
        if best.as_ref().map_or(true, |(_, b)| worst < *b) {
            best = Some((perm, worst));
        }
    }
    let (pairing, worst) = best.unwrap_or((Vec::new(), Float::new(prec)));
    let mut scale = Float::with_val(prec, 0);
    for z in xs.iter().chain(ys) {
        let a = z.abs();
        if a > scale {
            scale = a;
        }
    }
    scale += 1;
    RootMatch {
        pairing,
        max_distance: worst / scale,
        relative: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpfield::{parse_complex, unity_root};
    use proptest::prelude::*;
    use rand::Rng;

    fn ctx(d: u32) -> PrecisionCtx {
        PrecisionCtx::new(d).unwrap()
    }

    #[test]
    fn double_root() {
        let x = ctx(40);
        let poly = Poly::new(vec![x.one(), x.int(-2), x.one()]);
        for r in aberth_solve(&poly, &x).unwrap() {
            assert!(r.close_to(&x.one(), &x.pow10(-10)));
        }
    }

    #[test]
    fn fifth_roots_of_unity() {
        let x = ctx(50);
        let poly = Poly::new(vec![x.int(-1), x.zero(), x.zero(), x.zero(), x.zero(), x.one()]);
        let roots = aberth_solve(&poly, &x).unwrap();
        let exact: Vec<_> = (0..5).map(|k| unity_root(k, 5, &x)).collect();
        assert!(match_rootsets(&roots, &exact).max_distance < x.pow10(-30));
    }

    #[test]
    fn deterministic() {
        let x = ctx(40).seed(9);
        let poly = Poly::new(["3-1i", "0.5", "-2i", "1", "7", "1"].iter().map(|s| parse_complex(s, &x).unwrap()).collect());
        let a = aberth_solve(&poly, &x).unwrap();
        let b = aberth_solve(&poly, &x).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_constant() {
        let x = ctx(40);
        assert!(aberth_solve(&Poly::constant(x.one()), &x).is_err());
    }

    #[test]
    fn identical_and_perturbed_sets() {
        let x = ctx(80);
        let roots: Vec<_> = (0..5).map(|k| unity_root(k, 5, &x)).collect();
        let m = match_rootsets(&roots, &roots);
        assert!(m.max_distance.is_zero());
        assert_eq!(m.pairing, vec![0, 1, 2, 3, 4]);
        let eps = x.pow10(-60);
        let mut moved: Vec<_> = roots.iter().map(|r| r + &AppComplex::from_real(eps.clone(), &x)).collect();
        moved.reverse();
        let m = match_rootsets(&roots, &moved);
        let ratio = Float::with_val(x.prec(), &m.max_distance / &eps).to_f64();
        assert!((0.4..=1.0).contains(&ratio), "{ratio}");
        assert_eq!(m.pairing, vec![4, 3, 2, 1, 0]);
    }

    fn greedy(xs: &[AppComplex], ys: &[AppComplex]) -> f64 {
        let mut used = vec![false; ys.len()];
        let mut worst = 0.0f64;
        for x in xs {
            let (j, d) = ys
                .iter()
                .enumerate()
                .filter(|(j, _)| !used[*j])
                .map(|(j, y)| (j, (x - y).abs().to_f64()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            used[j] = true;
            worst = worst.max(d);
        }
        worst
    }

    #[test]
    fn beats_greedy_on_adversarial_sets() {
        // greedy pairs x0 with y0 and is forced into a long edge for x1
        let x = ctx(40);
        let xs: Vec<_> = [(0.0, 0.0), (1.0, 0.0), (10.0, 0.0), (20.0, 0.0), (30.0, 0.0)]
            .iter()
            .map(|&(a, b)| AppComplex::from_f64(a, b, &x))
            .collect();
        let ys: Vec<_> = [(0.6, 0.0), (-0.6, 0.0), (10.0, 0.0), (20.0, 0.0), (30.0, 0.0)]
            .iter()
            .map(|&(a, b)| AppComplex::from_f64(a, b, &x))
            .collect();
        let m = match_rootsets(&xs, &ys);
        let exact = m.max_distance.to_f64() * 31.0;
        let g = greedy(&xs, &ys);
        assert!((exact - 0.6).abs() < 1e-12, "{exact}");
        assert!((g - 1.6).abs() < 1e-12, "{g}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn matching_is_the_minimum(vals in prop::collection::vec(-5.0f64..5.0, 20)) {
            let x = ctx(30);
            let xs: Vec<_> = (0..5).map(|i| AppComplex::from_f64(vals[2 * i], vals[2 * i + 1], &x)).collect();
            let ys: Vec<_> = (0..5).map(|i| AppComplex::from_f64(vals[10 + 2 * i], vals[11 + 2 * i], &x)).collect();
            let m = match_rootsets(&xs, &ys);
            let exact = m.max_distance.to_f64();
            let scale = 1.0 + xs.iter().chain(&ys).map(|z| z.abs().to_f64()).fold(0.0, f64::max);
            prop_assert!(exact * scale <= greedy(&xs, &ys) + 1e-12);
            let mut seen = m.pairing.clone();
            seen.sort();
            prop_assert_eq!(seen, vec![0, 1, 2, 3, 4]);
        }

        #[test]
        fn residual_bound_on_random_quintics(seed in any::<u64>()) {
            let x = ctx(50).seed(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut coeffs: Vec<_> = (0..5).map(|_| AppComplex::from_f64(rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0), &x)).collect();
            coeffs.push(x.one());
            let poly = Poly::new(coeffs);
            let roots = aberth_solve(&poly, &x).unwrap();
            prop_assert_eq!(roots.len(), 5);
            for r in &roots {
                let bound = Float::with_val(x.prec(), poly.residual_scale(r, &x) * x.pow10(-30));
                prop_assert!(eval(&poly, r, &x).abs() <= bound);
            }
        }
    }
}
