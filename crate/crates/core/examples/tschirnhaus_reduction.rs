//! Reduces a quintic to Bring-Jerrard form y^5 + A y + B and reports the
//! transformation parameters, the vanishing coefficients and the degree guards.
//!
//!     cargo run --release --example tschirnhaus_reduction -- m n p q r

use quintic::mpfield::{format_float, PrecisionCtx};
use quintic::tschirnhaus::{reduce_to_bring, MonicQuintic};

fn main() -> quintic::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let texts: [&str; 5] = if args.len() == 5 {
        [&args[0], &args[1], &args[2], &args[3], &args[4]]
    } else {
        ["1", "-2i", "3", "0.5", "-7"]
    };
    let ctx = PrecisionCtx::new(60)?;
    let f = MonicQuintic::parse(texts, &ctx)?;
    let red = reduce_to_bring(&f, &ctx)?;
    let p = &red.params;

    println!("x^5 + ({}) x^4 + ({}) x^3 + ({}) x^2 + ({}) x + ({})", texts[0], texts[1], texts[2], texts[3], texts[4]);
    if !red.shift.is_zero() || red.dilation != 0 {
        println!("reduced after shift {:.10} and dilation 2^{}", red.shift, red.dilation);
    }
    println!("y = -(x^4 + d x^3 + c x^2 + b x + a)");
    for (name, v) in [("alpha", &p.alpha), ("xi", &p.xi), ("eta", &p.eta), ("a", &p.a), ("b", &p.b), ("c", &p.c), ("d", &p.d)] {
        println!("  {name:>5} = {v:.30}");
    }
    println!("A = {:.30}", red.big_a);
    println!("B = {:.30}", red.big_b);
    println!("kind {:?}, s = {:.30}", red.kind, red.s);
    for (name, v) in ["y^4", "y^3", "y^2"].iter().zip(&p.vanish_residuals) {
        println!("{name} coefficient, relative: {}", format_float(v, 3));
    }
    for g in &p.guards {
        println!("guard '{}': {} checks, worst 10^{:.1}", g.claim, g.checks, g.worst_log10_mismatch);
    }
    Ok(())
}
