//! The same quintics at increasing precision, including the degenerate
//! families that need the linear alpha root, the power transform, a
//! pre-shift or a rescaling.
//!
//!     cargo run --release --example precision_ladder

use quintic::closedform::solve_quintic;
use quintic::mpfield::{AppComplex, PrecisionCtx};
use quintic::oracle::match_rootsets;
use quintic::tschirnhaus::MonicQuintic;

fn main() -> quintic::Result<()> {
    let cases: [(&str, [&str; 5]); 6] = [
        ("generic", ["1", "-2i", "3", "0.5", "-7"]),
        ("m = 0", ["0", "1340", "12.3491", "-239.182", "339.21817"]),
        ("m = n = 0", ["0", "0", "0", "1", "0"]),
        ("x^5 - 1", ["0", "0", "0", "0", "-1"]),
        ("x^5 - x", ["0", "0", "0", "-1", "0"]),
        ("large coefficients", ["-700+300i", "850", "-990i", "640", "-455+700i"]),
    ];
    for (name, texts) in cases {
        println!("{name}");
        let mut previous: Option<Vec<AppComplex>> = None;
        for digits in [30, 60, 120, 240] {
            let ctx = PrecisionCtx::new(digits)?;
            let f = MonicQuintic::parse(texts, &ctx)?;
            let report = solve_quintic(&f, &ctx)?;
            let red = &report.reduction;
            let agree = previous
                .as_ref()
                .map(|p| format!("10^{:.1}", match_rootsets(&report.roots, p).max_distance.log10().to_f64()))
                .unwrap_or_else(|| "-".into());
            println!(
                "  {digits:>3} digits: {:?} via {}, shift {:.3}, dilation 2^{}, ran at {} digits, vs previous {agree}",
                red.kind,
                report.bring.strategy.as_str(),
                report.shift_applied,
                red.dilation,
                report.precision_used
            );
            previous = Some(report.roots.to_vec());
        }
    }
    Ok(())
}
