//! Acceptance suite: one test per criterion, each asserting every report row
//! and the stated runtime budget, and printing a pass line.

use std::time::{Duration, Instant};

use loewy_cli::report::ReportRow;
use loewy_cli::verify;

use loewy_core::gf::{self, FieldCtx};
use loewy_core::hyper::{
    product_of_linears_equation, xy_power_equation, CertSource, GllSearchOptions,
    HypersurfaceRing,
};

fn assert_all_match(rows: &[ReportRow]) {
    for row in rows {
        assert!(
            row.ok(),
            "row `{}` [{}]: expected `{}`, computed `{}` ({})",
            row.case,
            row.params,
            row.expected,
            row.computed,
            row.status
        );
    }
}

fn pass(n: u32, what: &str, elapsed: Duration) {
    println!("[acceptance] criterion {} ({}): PASS in {:.2?}", n, what, elapsed);
}

#[test]
fn criterion_1_cubic_over_gf2_exhaustive() {
    let start = Instant::now();
    let rows = verify::criterion1();
    assert_all_match(&rows);

    // the fully independent search (no certificate pruning) stays far under
    // the default candidate budget
    let f2 = FieldCtx::prime_field(2).unwrap();
    let ring = HypersurfaceRing::new(xy_power_equation(&f2, 1)).unwrap();
    let mut opts = GllSearchOptions::independent(4);
    opts.budget = 1 << 20;
    let res = ring.gll_exact(&opts).expect("well within a 2^20 budget");
    assert_eq!(ring.index(), 3);
    assert_eq!(res.value(), Some(4));
    pass(1, "index 3 and exact gll 4 for the cubic over GF(2)", start.elapsed());
}

#[test]
fn criterion_2_product_of_linears_family() {
    let start = Instant::now();
    let rows = verify::criterion2();
    assert_all_match(&rows);

    // the value is pinned by the certificate pair: every linear form a
    // zerodivisor (lower e + 1), a regular quadratic form (upper e + 1)
    for (p, e) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
        let ctx = if e == 1 {
            FieldCtx::prime_field(p).unwrap()
        } else {
            FieldCtx::extension_field(p, e).unwrap()
        };
        let q = ctx.q() as usize;
        let ring = HypersurfaceRing::new(product_of_linears_equation(&ctx)).unwrap();
        assert_eq!(ring.index(), q + 1);
        let bounds = ring.gll_bounds(2);
        assert_eq!(bounds.value(), Some(q + 2), "q = {}", q);
        let has = |source: CertSource, bound: usize| {
            bounds.certificates.iter().any(|c| c.source == source && c.bound == bound)
        };
        assert!(has(CertSource::NoLinearParameter, q + 2), "lower certificate, q = {}", q);
        assert!(has(CertSource::RegularFormBound, q + 2), "upper certificate, q = {}", q);
        assert!(has(CertSource::VerifiedWitness, q + 2), "witness certificate, q = {}", q);
        assert_eq!(bounds.regular_form.as_ref().map(|(d, _)| *d), Some(2));
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "criterion 2 must finish in 30 s, took {:.2?}", elapsed);
    pass(2, "product-of-linears family for q in {2, 3, 4, 5}", elapsed);
}

#[test]
fn criterion_3_power_family_grid() {
    let start = Instant::now();
    let rows = verify::criterion3();
    assert_all_match(&rows);

    // hypothesis failures occur exactly at (5, 2), (5, 6), (7, 3)
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| r.computed == "hypothesis-failed")
        .map(|r| r.case.clone())
        .collect();
    assert_eq!(
        failed,
        vec!["prop37[p=5,n=2]", "prop37[p=5,n=6]", "prop37[p=7,n=3]"],
        "hypothesis failures exactly where the characteristic divides 1 + (-2)^n"
    );
    pass(3, "xy(x^n + y^n) grid and prime-power instances", start.elapsed());
}

#[test]
fn criterion_4_char_two_family() {
    let start = Instant::now();
    let rows = verify::criterion4();
    assert_all_match(&rows);

    // primitive-root hypothesis for the m = 2 instance, via the lifting
    // equivalence and directly
    assert!(gf::is_primitive_root(2, 25).unwrap());
    assert!(gf::is_primitive_root(2, 5).unwrap());
    let mut pow = 1u64;
    for _ in 0..4 {
        pow = pow * 2 % 25;
    }
    assert_ne!(pow, 1, "2^4 != 1 mod 25, so the root lifts");

    // the largest instance alone stays under a minute
    let single = Instant::now();
    let row = verify::criterion4().pop().unwrap();
    assert_eq!(row.case, "prop312[p=5,m=2,n=0]");
    assert!(row.ok());
    let single_elapsed = single.elapsed();
    assert!(
        single_elapsed < Duration::from_secs(60),
        "the exponent-25 instance must finish in 60 s, took {:.2?}",
        single_elapsed
    );
    pass(4, "xy(x^N + y^N) over GF(2) with quadratic witness", start.elapsed());
}

#[test]
fn criterion_5_semigroup_suite() {
    let start = Instant::now();
    let rows = verify::criterion5();
    assert_all_match(&rows);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "criterion 5 must finish in 60 s, took {:.2?}", elapsed);
    pass(5, "coprime pairs and 3-generator semigroups", elapsed);
}

#[test]
fn criterion_6_number_theory_suite() {
    let start = Instant::now();
    let rows = verify::criterion6();
    assert_all_match(&rows);
    pass(6, "cyclotomic identities, factor patterns, primitive roots", start.elapsed());
}

#[test]
fn criterion_7_property_suites() {
    let start = Instant::now();
    let rows = verify::criterion7();
    assert_all_match(&rows);
    pass(7, "randomized and exhaustive property suites", start.elapsed());
}
