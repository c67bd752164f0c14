//! Closed-form roots of seeded random quintics against the Aberth-Ehrlich
//! oracle, matched over all 120 pairings.
//!
//!     cargo run --release --example oracle_crosscheck [count] [digits]

use std::time::Instant;

use quintic::closedform::solve_quintic;
use quintic::mpfield::{format_float, PrecisionCtx};
use quintic::oracle::{aberth_solve, match_rootsets};
use quintic::tschirnhaus::MonicQuintic;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> quintic::Result<()> {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().map_or(10, |v| v.parse().expect("count"));
    let digits: u32 = args.next().map_or(60, |v| v.parse().expect("digits"));
    let ctx = PrecisionCtx::new(digits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..count {
        let f = MonicQuintic::random(&mut rng, 100.0, &ctx);
        let t = Instant::now();
        let report = solve_quintic(&f, &ctx)?;
        let cf = t.elapsed();
        let t = Instant::now();
        let oracle = aberth_solve(&f.poly(&ctx), &ctx)?;
        let ab = t.elapsed();
        let m = match_rootsets(&report.roots, &oracle);
        println!(
            "{i:>3}  {:<7} closed form {:>8.1?}  aberth {:>8.1?}  distance {}  pairing {:?}",
            report.bring.strategy.as_str(),
            cf,
            ab,
            format_float(&m.max_distance, 3),
            m.pairing
        );
    }
    Ok(())
}
