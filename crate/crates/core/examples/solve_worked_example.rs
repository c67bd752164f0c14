//! Solves x^5 - 200i x^4 + 1340 x^3 + 12.3491 x^2 - 239.182 x + 339.21817
//! at 200 digits and prints the roots with the pipeline's intermediate values.
//!
//!     cargo run --release --example solve_worked_example [digits]

use quintic::closedform::solve_quintic;
use quintic::mpfield::{format_float, PrecisionCtx};
use quintic::tschirnhaus::MonicQuintic;

fn main() -> quintic::Result<()> {
    let digits = std::env::args().nth(1).map_or(200, |d| d.parse().expect("digits"));
    let ctx = PrecisionCtx::new(digits)?;
    let f = MonicQuintic::parse(["-200i", "1340", "12.34910", "-239.18200", "339.2181700"], &ctx)?;

    let report = solve_quintic(&f, &ctx)?;
    let red = &report.reduction;
    println!("A = {:.40}", red.big_a);
    println!("B = {:.40}", red.big_b);
    println!("s = {:.40}", red.s);
    println!("bring root via {} ({} steps)", report.bring.strategy.as_str(), report.bring.terms_or_steps);
    println!("y = {:.40}", report.y);
    println!("quartic candidate {} selected", report.selected_index + 1);
    for (i, r) in report.candidate_residuals.iter().enumerate() {
        println!("  |f(y{})| = {}", i + 1, format_float(r, 6));
    }
    let shown = digits as usize - 15;
    for (i, (root, res)) in report.roots.iter().zip(&report.residuals).enumerate() {
        println!("r{} = {root:.shown$}", i + 1);
        println!("     |f(r{})| = {}", i + 1, format_float(res, 3));
    }
    Ok(())
}
