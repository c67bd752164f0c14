mod common;

use common::{c, ctx, golden, golden_quintic, golden_roots, log10_rel};
use quintic::closedform::{deflate_quintic, ferrari_roots, solve_quintic};
use quintic::oracle::{aberth_solve, match_rootsets};
use quintic::tschirnhaus::reduce_to_bring;

#[test]
fn oracle_reproduces_printed_roots() {
    let x = ctx(80);
    let f = golden_quintic(&x);
    let roots = aberth_solve(&f.poly(&x), &x).unwrap();
    let m = match_rootsets(&roots, &golden_roots(&x));
    assert!(common::log10(&m.max_distance) < -50.0, "{}", common::log10(&m.max_distance));
}

#[test]
fn deflating_printed_r1_gives_the_other_four() {
    let x = ctx(100);
    let f = golden_quintic(&x);
    let printed = golden_roots(&x);
    let quartic = deflate_quintic(&f, &printed[0], &x).unwrap();
    let rest = ferrari_roots(&quartic, &x).unwrap();
    let m = match_rootsets(&rest, &printed[1..]);
    assert!(common::log10(&m.max_distance) < -50.0, "{}", common::log10(&m.max_distance));
}

#[test]
fn bring_parameter_matches_printed_value() {
    let x = ctx(100);
    let red = reduce_to_bring(&golden_quintic(&x), &x).unwrap();
    assert!(red.shift.is_zero());
    assert_eq!(red.dilation, 0);
    let rel = log10_rel(&red.s, &c(golden::S, &x));
    assert!(rel < -60.0, "{rel}");
}

#[test]
fn selected_root_is_printed_r1() {
    let x = ctx(80);
    let report = solve_quintic(&golden_quintic(&x), &x).unwrap();
    let rel = log10_rel(&report.roots[0], &c(golden::R1, &x));
    assert!(rel < -50.0, "{rel}");
    let m = match_rootsets(&report.roots, &golden_roots(&x));
    assert!(common::log10(&m.max_distance) < -50.0);
}
