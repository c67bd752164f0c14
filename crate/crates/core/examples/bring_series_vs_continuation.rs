//! Bring roots of z^5 - z - s from the 4F3 series and from Taylor
//! continuation of the Bring ODE, compared where both apply.
//!
//!     cargo run --release --example bring_series_vs_continuation

use quintic::bring::{bring_root_continuation, branch_points, hyper4f3, series_argument, solve_bring};
use quintic::mpfield::{AppComplex, PrecisionCtx};

fn main() -> quintic::Result<()> {
    let ctx = PrecisionCtx::new(80)?;
    println!("branch points of the series argument:");
    for b in branch_points(&ctx) {
        println!("  {b:.12}");
    }
    for (re, im) in [(0.1, 0.0), (0.3, 0.2), (-0.4, 0.1), (0.35, -0.3), (0.1, 0.45)] {
        let s = AppComplex::from_f64(re, im, &ctx);
        let x = series_argument(&s);
        let series = -&(&s * &hyper4f3(&x, &ctx)?);
        let ode = bring_root_continuation(&s, &ctx)?;
        let gap = (&series - &ode).abs();
        println!("s = {s:.3}  |x| = {:.3}  z = {series:.25}  |series - ode| = 10^{:.1}", x.abs().to_f64(), gap.log10().to_f64());
    }
    for (re, im) in [(2.0, 0.0), (-0.815, 0.0), (1.0, 3.0)] {
        let s = AppComplex::from_f64(re, im, &ctx);
        let sol = solve_bring(&s, &ctx)?;
        println!("s = {s:.3}  via {}  z = {:.25}  residual 10^{:.1}", sol.strategy.as_str(), sol.z, sol.residual.log10().to_f64());
    }
    Ok(())
}
