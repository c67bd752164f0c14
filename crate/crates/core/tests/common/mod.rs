#![allow(dead_code)]

pub mod golden;

use quintic::mpfield::{parse_complex, AppComplex, PrecisionCtx};
use quintic::tschirnhaus::MonicQuintic;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;

pub fn ctx(digits: u32) -> PrecisionCtx {
    PrecisionCtx::new(digits).unwrap()
}

pub fn c(text: &str, ctx: &PrecisionCtx) -> AppComplex {
    parse_complex(text, ctx).unwrap()
}

pub fn golden_quintic(ctx: &PrecisionCtx) -> MonicQuintic {
    MonicQuintic::parse(golden::COEFFS, ctx).unwrap()
}

pub fn golden_roots(ctx: &PrecisionCtx) -> Vec<AppComplex> {
    [golden::R1, golden::R2, golden::R3, golden::R4, golden::R5]
        .iter()
        .map(|t| c(t, ctx))
        .collect()
}

/// log10 of |a - b| / |b|.
pub fn log10_rel(a: &AppComplex, b: &AppComplex) -> f64 {
    let d = (a - b).abs();
    if d.is_zero() {
        return f64::NEG_INFINITY;
    }
    let r = d / b.abs();
    r.log10().to_f64()
}

pub fn log10(x: &Float) -> f64 {
    if x.is_zero() {
        f64::NEG_INFINITY
    } else {
        x.clone().log10().to_f64()
    }
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn random_point<R: Rng>(rng: &mut R, radius: f64, ctx: &PrecisionCtx) -> AppComplex {
    let rad = radius * rng.gen::<f64>().sqrt();
    let theta = rng.gen_range(0.0..std::f64::consts::TAU);
    AppComplex::from_f64(rad * theta.cos(), rad * theta.sin(), ctx)
}
