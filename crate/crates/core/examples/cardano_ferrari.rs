//! The cubic and quartic kernels: Cardano with its three branch indices and
//! Ferrari through the resolvent cubic.
//!
//!     cargo run --release --example cardano_ferrari

use quintic::closedform::{cardano_roots, ferrari_roots, relative_residual, QuarticCoeffs};
use quintic::mpfield::{parse_complex, PrecisionCtx};
use quintic::polyring::Poly;

fn main() -> quintic::Result<()> {
    let ctx = PrecisionCtx::new(50)?;
    let z = |t: &str| parse_complex(t, &ctx);

    // 2 x^3 - (3 + i) x^2 + 4 x - 5
    let cubic = [z("2")?, z("-3-1i")?, z("4")?, z("-5")?];
    let poly = Poly::new(cubic.iter().rev().cloned().collect());
    for (k, x) in cardano_roots(&cubic[0], &cubic[1], &cubic[2], &cubic[3], &ctx)?.iter().enumerate() {
        println!("cardano[{k}] = {x:.30}  residual 10^{:.1}", log10_or_zero(&relative_residual(&poly, x, &ctx)));
    }

    let quartics = [
        ("(x-1)(x-2)(x-3)(x-4)", ["-10", "35", "-50", "24"]),
        ("x^4 + 1", ["0", "0", "0", "1"]),
        ("x^4 - 2i x^3 + x - 7", ["-2i", "0", "1", "-7"]),
    ];
    for (name, cs) in quartics {
        let [p3, p2, p1, p0] = cs.map(|t| parse_complex(t, &ctx).unwrap());
        let q = QuarticCoeffs::new(p3, p2, p1, p0);
        let poly = q.poly(&ctx);
        println!("{name}:");
        for x in ferrari_roots(&q, &ctx)? {
            println!("  {x:.30}  residual 10^{:.1}", log10_or_zero(&relative_residual(&poly, &x, &ctx)));
        }
    }
    Ok(())
}

fn log10_or_zero(x: &rug::Float) -> f64 {
    if x.is_zero() {
        f64::NEG_INFINITY
    } else {
        x.clone().log10().to_f64()
    }
}
