//! Dense univariate polynomials over [`AppComplex`], 5x5 determinants of
//! linear polynomial matrices, and degree-guarded interpolation.

use rug::Float;

use crate::error::{Error, Result};
use crate::mpfield::{AppComplex, PrecisionCtx};

/// Coefficients in ascending order; exact trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<AppComplex>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<AppComplex>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: AppComplex) -> Self {
        Poly::new(vec![c])
    }

    /// c0 + c1 y
    pub fn linear(c0: AppComplex, c1: AppComplex) -> Self {
        Poly::new(vec![c0, c1])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[AppComplex], ctx: &PrecisionCtx) -> Self {
        let mut p = Poly::constant(ctx.one());
        for r in roots {
            p = p.mul(&Poly::linear(-r, ctx.one()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize, ctx: &PrecisionCtx) -> AppComplex {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ctx.zero())
    }

    pub fn leading(&self) -> Option<&AppComplex> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out: Vec<Option<AppComplex>> = vec![None; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a * b;
                match &mut out[i + j] {
                    Some(acc) => *acc += &t,
                    slot => *slot = Some(t),
                }
            }
        }
        Poly::new(out.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn scale(&self, k: &AppComplex) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = lead.recip();
                let mut out: Vec<AppComplex> = self.coeffs.iter().map(|c| c * &inv).collect();
                let top = out.len() - 1;
                out[top] = AppComplex::new(Float::with_val(lead.prec(), 1), Float::new(lead.prec()));
                Poly::new(out)
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    /// P(X + t), by repeated synthetic division.
    pub fn taylor_shift(&self, t: &AppComplex) -> Poly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = &c[j + 1] * t;
                c[j] += &add;
            }
        }
        Poly::new(c)
    }

    pub fn max_coeff_abs(&self, ctx: &PrecisionCtx) -> Float {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .fold(Float::new(ctx.prec()), |m, a| if a > m { a } else { m })
    }

    /// sum |c_i| |x|^i, the natural size of a rounding error in `eval`.
    pub fn residual_scale(&self, x: &AppComplex, ctx: &PrecisionCtx) -> Float {
        let ax = x.abs();
        let mut acc = Float::new(ctx.prec());
        for c in self.coeffs.iter().rev() {
            acc *= &ax;
            acc += c.abs();
        }
        acc
    }

    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.conj()).collect())
    }
}

/// Horner evaluation.
pub fn eval(poly: &Poly, x: &AppComplex, ctx: &PrecisionCtx) -> AppComplex {
    let mut acc = ctx.zero();
    for c in poly.coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// 5x5 matrix of polynomials of degree at most one.
#[derive(Clone, Debug)]
pub struct PolyMatrix5 {
    pub entries: [[Poly; 5]; 5],
}

impl PolyMatrix5 {
    pub fn new(entries: [[Poly; 5]; 5]) -> Self {
        debug_assert!(entries.iter().flatten().all(|p| p.degree() <= 1));
        PolyMatrix5 { entries }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        PolyMatrix5::new(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }
}

/// Determinant by Laplace expansion over column subsets: the minor on rows
/// `0..k` and column set `S` is built from the minors on `S` minus one column.
pub fn det5(matrix: &PolyMatrix5, ctx: &PrecisionCtx) -> Poly {
    let e = &matrix.entries;
    let mut minors: Vec<Option<Poly>> = vec![None; 1 << 5];
    minors[0] = Some(Poly::constant(ctx.one()));
    for row in 0..5 {
        let k = row + 1;
        for set in 0u32..32 {
            if set.count_ones() as usize != k {
                continue;
            }
            let mut acc = Poly::zero();
            let mut pos = 0;
            for col in 0..5 {
                if set & (1 << col) == 0 {
                    continue;
                }
                let sub = minors[(set & !(1 << col)) as usize].as_ref().unwrap();
                let term = e[row][col].mul(sub);
                // sign of expanding the k x k minor along its last row
                acc = if (row + pos) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                pos += 1;
            }
            minors[set as usize] = Some(acc);
        }
    }
    minors[31].take().unwrap()
}

/// Determinant by the 120-term permutation expansion.
pub fn det5_leibniz(matrix: &PolyMatrix5, ctx: &PrecisionCtx) -> Poly {
    use itertools::Itertools;
    let mut acc = Poly::zero();
    for perm in (0..5).permutations(5) {
        let mut inversions = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = Poly::constant(ctx.one());
        for (row, &col) in perm.iter().enumerate() {
            term = term.mul(&matrix.entries[row][col]);
        }
        acc = if inversions % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Coefficients (ascending, length `degree + 1`) of the polynomial through the
/// first `degree + 1` samples, certified by the last (guard) sample.
pub fn fit_coeffs(
    samples: &[(AppComplex, AppComplex)],
    degree: usize,
    ctx: &PrecisionCtx,
) -> Result<Vec<AppComplex>> {
    fit_coeffs_named("interpolant", samples, degree, ctx).map(|f| f.coeffs)
}

/// Outcome of a guarded fit.
#[derive(Clone, Debug)]
pub struct GuardedFit {
    pub coeffs: Vec<AppComplex>,
    /// log10 of the guard mismatch relative to the largest sample.
    pub log10_mismatch: f64,
}

pub fn fit_coeffs_named(
    what: &'static str,
    samples: &[(AppComplex, AppComplex)],
    degree: usize,
    ctx: &PrecisionCtx,
) -> Result<GuardedFit> {
    assert_eq!(samples.len(), degree + 2, "need degree + 1 nodes and one guard");
    let n = degree + 1;
    let xs: Vec<&AppComplex> = samples[..n].iter().map(|(x, _)| x).collect();
    let mut dd: Vec<AppComplex> = samples[..n].iter().map(|(_, v)| v.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = xs[i] - xs[i - level];
            dd[i] = num.checked_div(&den)?;
        }
    }
    // Newton form to monomial form
    let mut coeffs = vec![ctx.zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (X - x_i) + dd[i]
        let mut next = vec![ctx.zero(); n];
        for j in 0..n {
            if j + 1 < n {
                next[j + 1] += &coeffs[j];
            }
            let t = &coeffs[j] * xs[i];
            next[j] -= &t;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let (gx, gv) = &samples[n];
    let predicted = eval(&Poly { coeffs: coeffs.clone() }, gx, ctx);
    let mismatch = (&predicted - gv).abs();
    let scale = samples
        .iter()
        .map(|(_, v)| v.abs())
        .fold(Float::new(ctx.prec()), |m, a| if a > m { a } else { m });
    let log10_mismatch = if mismatch.is_zero() {
        f64::NEG_INFINITY
    } else if scale.is_zero() {
        f64::INFINITY
    } else {
        Float::with_val(ctx.prec(), &mismatch / &scale).log10().to_f64()
    };
    let bound = Float::with_val(ctx.prec(), &scale * &ctx.half_tol());
    if mismatch > bound {
        return Err(Error::DegreeGuardFailure {
            what,
            degree,
            log10_mismatch,
        });
    }
    Ok(GuardedFit {
        coeffs,
        log10_mismatch,
    })
}

/// Synthetic division by (X - root), rejecting non-roots.
pub fn deflate(poly: &Poly, root: &AppComplex, ctx: &PrecisionCtx) -> Result<Poly> {
    let value = eval(poly, root, ctx);
    let scale = poly.max_coeff_abs(ctx);
    let bound = Float::with_val(ctx.prec(), &scale * &ctx.half_tol());
    if value.abs() > bound {
        let log10_residual = if scale.is_zero() {
            f64::INFINITY
        } else {
            Float::with_val(ctx.prec(), value.abs() / &scale).log10().to_f64()
        };
        return Err(Error::NotARoot { log10_residual });
    }
    Ok(synthetic_divide(poly, root, ctx))
}

pub(crate) fn synthetic_divide(poly: &Poly, root: &AppComplex, ctx: &PrecisionCtx) -> Poly {
    let n = poly.coeffs.len();
    if n <= 1 {
        return Poly::zero();
    }
    let mut q = vec![ctx.zero(); n - 1];
    let mut carry = ctx.zero();
    for i in (1..n).rev() {
        carry = &(&carry * root) + &poly.coeffs[i];
        q[i - 1] = carry.clone();
    }
    Poly::new(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpfield::parse_complex;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::new(50).unwrap()
    }

    fn ints(v: &[i64], ctx: &PrecisionCtx) -> Poly {
        Poly::new(v.iter().map(|&k| ctx.int(k)).collect())
    }

    fn rand_c(rng: &mut ChaCha8Rng, ctx: &PrecisionCtx) -> AppComplex {
        AppComplex::from_f64(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), ctx)
    }

    fn rand_matrix(rng: &mut ChaCha8Rng, ctx: &PrecisionCtx) -> PolyMatrix5 {
        PolyMatrix5::from_fn(|_, _| Poly::linear(rand_c(rng, ctx), rand_c(rng, ctx)))
    }

    fn polys_close(a: &Poly, b: &Poly, e: i64, ctx: &PrecisionCtx) -> bool {
        let n = a.coeffs.len().max(b.coeffs.len());
        let scale = a.max_coeff_abs(ctx).max(&b.max_coeff_abs(ctx)).max(&Float::with_val(ctx.prec(), 1));
        let tol = scale * ctx.pow10(e);
        (0..n).all(|i| (&a.coeff(i, ctx) - &b.coeff(i, ctx)).abs() <= tol)
    }

    #[test]
    fn eval_examples() {
        let x = ctx();
        assert!(eval(&ints(&[-1, 0, 0, 0, 0, 1], &x), &x.one(), &x).is_zero());
        let i = AppComplex::i(&x);
        assert!(eval(&ints(&[0, -1, 0, 0, 0, 1], &x), &i, &x).is_zero());
    }

    #[test]
    fn det5_examples() {
        let x = ctx();
        let id = PolyMatrix5::from_fn(|i, j| Poly::constant(x.int((i == j) as i64)));
        assert_eq!(det5(&id, &x), Poly::constant(x.one()));
        let diag = PolyMatrix5::from_fn(|i, j| if i == j { Poly::linear(x.zero(), x.one()) } else { Poly::zero() });
        assert_eq!(det5(&diag, &x), ints(&[0, 0, 0, 0, 0, 1], &x));
    }

    #[test]
    fn det5_matches_leibniz() {
        let x = ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let m = rand_matrix(&mut rng, &x);
            assert!(polys_close(&det5(&m, &x), &det5_leibniz(&m, &x), -45, &x));
        }
    }

    #[test]
    fn det5_row_scaling() {
        let x = ctx();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for row in 0..5 {
            let m = rand_matrix(&mut rng, &x);
            let k = rand_c(&mut rng, &x);
            let mut scaled = m.clone();
            for j in 0..5 {
                scaled.entries[row][j] = m.entries[row][j].scale(&k);
            }
            assert!(polys_close(&det5(&scaled, &x), &det5(&m, &x).scale(&k), -45, &x));
        }
    }

    #[test]
    fn fit_examples() {
        let x = ctx();
        let f = |t: i64| x.int(1 + t + t * t);
        let samples: Vec<_> = (0..4).map(|t| (x.int(t), f(t))).collect();
        let c = fit_coeffs(&samples, 2, &x).unwrap();
        assert_eq!(c, vec![x.one(), x.one(), x.one()]);
        let k = parse_complex("2.5-1i", &x).unwrap();
        let samples: Vec<_> = (0..3).map(|t| (x.int(t), k.clone())).collect();
        let c = fit_coeffs(&samples, 1, &x).unwrap();
        assert_eq!(c[0], k);
        assert!(c[1].is_zero());
    }

    #[test]
    fn fit_guard_rejects_higher_degree() {
        let x = ctx();
        let samples: Vec<_> = (0..4).map(|t| (x.int(t), x.int(t * t * t))).collect();
        assert!(matches!(fit_coeffs(&samples, 2, &x), Err(Error::DegreeGuardFailure { degree: 2, .. })));
    }

    #[test]
    fn deflate_examples() {
        let x = ctx();
        let q = deflate(&ints(&[-1, 0, 0, 0, 0, 1], &x), &x.one(), &x).unwrap();
        assert_eq!(q, ints(&[1, 1, 1, 1, 1], &x));
        let q = deflate(&ints(&[-1, 0, 1], &x), &x.int(-1), &x).unwrap();
        assert_eq!(q, ints(&[-1, 1], &x));
        assert!(matches!(deflate(&ints(&[-1, 0, 1], &x), &x.int(2), &x), Err(Error::NotARoot { .. })));
    }

    #[test]
    fn taylor_shift_moves_roots() {
        let x = ctx();
        let p = Poly::from_roots(&[x.int(1), x.int(2), x.int(-3)], &x);
        let t = parse_complex("0.5+2i", &x).unwrap();
        let q = p.taylor_shift(&t);
        for r in [1, 2, -3] {
            let moved = &x.int(r) - &t;
            assert!(eval(&q, &moved, &x).abs() < x.pow10(-45));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn fit_recovers_sampled_polys(deg in 0usize..6, seed in any::<u64>()) {
            let x = ctx();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = Poly { coeffs: (0..=deg).map(|_| rand_c(&mut rng, &x)).collect() };
            let samples: Vec<_> = (0..deg as i64 + 2).map(|t| (x.int(t), eval(&p, &x.int(t), &x))).collect();
            let c = fit_coeffs(&samples, deg, &x).unwrap();
            prop_assert!(polys_close(&Poly::new(c), &Poly::new(p.coeffs.clone()), -40, &x));
        }

        #[test]
        fn deflate_then_multiply_back(seed in any::<u64>()) {
            let x = ctx();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let roots: Vec<_> = (0..5).map(|_| rand_c(&mut rng, &x)).collect();
            let p = Poly::from_roots(&roots, &x);
            let q = deflate(&p, &roots[2], &x).unwrap();
            let back = q.mul(&Poly::linear(-&roots[2], x.one()));
            prop_assert!(polys_close(&back, &p, -25, &x));
        }

        #[test]
        fn det5_leibniz_equivalence(seed in any::<u64>()) {
            let x = ctx();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = rand_matrix(&mut rng, &x);
            prop_assert!(polys_close(&det5(&m, &x), &det5_leibniz(&m, &x), -45, &x));
        }
    }
}
