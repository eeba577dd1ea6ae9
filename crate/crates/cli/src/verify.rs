//! The full verification harness: every documented value, bound, and family
//! formula as expected-versus-computed report rows. The CLI's `verify-paper`
//! subcommand prints these rows, and the acceptance suite asserts them.
//!
//! Output is deterministic: fixed case order, fixed RNG seed for the
//! randomized property sections, and no wall-clock content.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use loewy_core::error::Error;
use loewy_core::gf::{self, FieldCtx, FieldElem};
use loewy_core::hyper::{
    gll_graded_hypersurface, normalized_forms, xy_power_equation, FamilyCase, GllSearchOptions,
    HypersurfaceRing,
};
use loewy_core::poly::{cyclotomic, cyclotomic_factor_pattern, first_irreducible, BiPoly, UniPoly};
use loewy_core::sgp::{two_generator_witness_range_check, GglMode, NumericalSemigroup};

use crate::report::{ReportRow, RowStatus};

/// Ascending odd primes up to 100 with 2 a primitive root, frozen from the
/// exhaustive order computation.
const PRIMES_WITH_ROOT_TWO_100: [u64; 12] = [3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83];

const RNG_SEED: u64 = 0x10e3717;

fn gfp(p: u64) -> FieldCtx {
    FieldCtx::prime_field(p).unwrap()
}

fn violations_row(case: &str, params: &str, violations: &[String]) -> ReportRow {
    let computed = if violations.is_empty() {
        "0 violations".to_string()
    } else {
        format!("{} violations: {}", violations.len(), violations.join("; "))
    };
    ReportRow::new(case, params, "0 violations", &computed)
}

/// Row for one family instance; `expect_hypothesis_failure` flips the
/// expectation for grid points that must violate the hypotheses.
fn family_row(case: &FamilyCase, expect_hypothesis_failure: bool) -> ReportRow {
    let id = case.case_id();
    match loewy_core::hyper::verify_family(case) {
        Ok(row) => {
            let expected = if expect_hypothesis_failure {
                "hypothesis-failed".to_string()
            } else {
                format!("index={}, gll={}, checks ok", row.expected_index, row.expected_gll)
            };
            let failed: Vec<&str> = row
                .checks
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(name, _)| name.as_str())
                .collect();
            let gll_str = match row.computed_gll {
                Some(v) => v.to_string(),
                None => "bounds-only".to_string(),
            };
            let computed = if failed.is_empty() {
                format!("index={}, gll={}, checks ok", row.computed_index, gll_str)
            } else {
                format!("index={}, gll={}, failed: {}", row.computed_index, gll_str, failed.join(","))
            };
            ReportRow::new(&id, &row.f_text, &expected, &computed)
        }
        Err(Error::HypothesisFailed(msg)) => {
            if expect_hypothesis_failure {
                ReportRow::new(&id, &msg, "hypothesis-failed", "hypothesis-failed")
            } else {
                ReportRow {
                    case: id,
                    params: msg,
                    expected: "a verified instance".into(),
                    computed: "hypothesis-failed".into(),
                    status: RowStatus::HypothesisFailed,
                }
            }
        }
        Err(other) => ReportRow::new(&id, "", "a verified instance", &format!("error: {}", other)),
    }
}

// ---------------------------------------------------------------------------
// criterion 1: the cubic over GF(2), exhaustively
// ---------------------------------------------------------------------------

pub fn criterion1() -> Vec<ReportRow> {
    let f2 = gfp(2);
    let ring = HypersurfaceRing::new(xy_power_equation(&f2, 1)).unwrap();
    let computed = match ring.gll_exact(&GllSearchOptions::independent(4)) {
        Ok(res) => {
            let verified = res
                .witness
                .as_ref()
                .map(|w| ring.contains_power_in_principal(w, 4).unwrap_or(false))
                .unwrap_or(false);
            format!(
                "index={}, gll={:?}, witness verified={}",
                ring.index(),
                res.value(),
                verified
            )
        }
        Err(e) => format!("error: {}", e),
    };
    vec![ReportRow::new(
        "c1-exhaustive",
        "f = x*y*(x+y) over GF(2)",
        "index=3, gll=Some(4), witness verified=true",
        &computed,
    )]
}

// ---------------------------------------------------------------------------
// criterion 2: the product-of-linears family for q in {2, 3, 4, 5}
// ---------------------------------------------------------------------------

pub fn criterion2() -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for (p, e) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
        rows.push(family_row(&FamilyCase::Prop35 { p, e }, false));
    }
    // exhaustive confirmation for q = 2
    let f2 = gfp(2);
    let ring = HypersurfaceRing::new(loewy_core::hyper::product_of_linears_equation(&f2)).unwrap();
    let computed = match ring.gll_exact(&GllSearchOptions::independent(4)) {
        Ok(res) => format!("gll={:?}", res.value()),
        Err(e) => format!("error: {}", e),
    };
    rows.push(ReportRow::new(
        "prop35-exhaustive[q=2]",
        "independent witness enumeration",
        "gll=Some(4)",
        &computed,
    ));
    rows
}

// ---------------------------------------------------------------------------
// criterion 3: the xy(x^n + y^n) grid and its prime-power specialization
// ---------------------------------------------------------------------------

/// Independent integer-side predicate: does p divide 1 + (-2)^n?
fn divides_one_plus_minus_two_pow(p: i64, n: u32) -> bool {
    let mut v: i64 = 1;
    for _ in 0..n {
        v = v * -2 % p;
    }
    (1 + v).rem_euclid(p) == 0
}

pub fn criterion3() -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for p in [3u64, 5, 7] {
        for n in 1..=6u32 {
            let expect_fail = divides_one_plus_minus_two_pow(p as i64, n);
            rows.push(family_row(&FamilyCase::Prop37 { p, n: n as usize }, expect_fail));
        }
    }
    for (p, n) in [(3u64, 0u32), (3, 1), (5, 0), (5, 1), (7, 0), (7, 1)] {
        rows.push(family_row(&FamilyCase::Cor38 { p, n }, false));
    }
    rows
}

// ---------------------------------------------------------------------------
// criterion 4: the characteristic-two family with quadratic witness
// ---------------------------------------------------------------------------

pub const PROP312_INSTANCES: [(u64, u32, u32); 5] =
    [(5, 1, 0), (5, 1, 1), (11, 1, 0), (13, 1, 0), (5, 2, 0)];

pub fn criterion4() -> Vec<ReportRow> {
    PROP312_INSTANCES
        .iter()
        .map(|&(p, m, n)| family_row(&FamilyCase::Prop312 { p, m, n }, false))
        .collect()
}

// ---------------------------------------------------------------------------
// criterion 5: semigroup suite
// ---------------------------------------------------------------------------

pub fn coprime_pairs_up_to_12() -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for a in 2..=12u64 {
        for b in a + 1..=12 {
            if gf::gcd(a, b) == 1 {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

/// Triples a < b < c <= 15 whose minimal generating set is exactly {a, b, c}.
pub fn minimal_three_generator_semigroups() -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for a in 2..=15u64 {
        for b in a + 1..=15 {
            for c in b + 1..=15 {
                if gf::gcd(gf::gcd(a, b), c) != 1 {
                    continue;
                }
                let h = NumericalSemigroup::new(&[a, b, c]).unwrap();
                if h.gens() == [a, b, c] {
                    out.push(h);
                }
            }
        }
    }
    out
}

pub fn criterion5() -> Vec<ReportRow> {
    let mut rows = Vec::new();

    let pairs = coprime_pairs_up_to_12();
    let mut violations = Vec::new();
    for &(a, b) in &pairs {
        let h = NumericalSemigroup::new(&[a, b]).unwrap();
        let report = h.ggl(GglMode::Oracle);
        let closed_form = a * b - b + 1;
        if report.value != report.formula_value || report.value != closed_form {
            violations.push(format!("({},{}): ggl {} vs {}", a, b, report.value, closed_form));
        }
        if two_generator_witness_range_check(a, b) != Ok(true) {
            violations.push(format!("({},{}): witness range", a, b));
        }
        if !h.length_bounds_check() {
            violations.push(format!("({},{}): length bounds", a, b));
        }
        if h.gll_graded().0 > report.value {
            violations.push(format!("({},{}): graded lengths out of order", a, b));
        }
    }
    // 34 coprime pairs with 2 <= a < b <= 12, counted by hand
    rows.push(ReportRow::new(
        "c5-pairs",
        &format!("{} coprime pairs, 2 <= a < b <= 12", pairs.len()),
        "34 pairs, 0 violations",
        &format!("{} pairs, {} violations", pairs.len(), violations.len()),
    ));

    let semis = minimal_three_generator_semigroups();
    let mut violations = Vec::new();
    for h in &semis {
        let report = h.ggl(GglMode::Oracle);
        if report.value != report.formula_value {
            violations.push(format!("{:?}: oracle {} vs formula {}", h.gens(), report.value, report.formula_value));
        }
        if !h.length_bounds_check() {
            violations.push(format!("{:?}: length bounds", h.gens()));
        }
    }
    rows.push(violations_row(
        "c5-three-generators",
        &format!("{} minimal 3-generator semigroups with generators <= 15", semis.len()),
        &violations,
    ));
    rows
}

// ---------------------------------------------------------------------------
// criterion 6: number theory suite
// ---------------------------------------------------------------------------

/// Distinct-degree factor shape of the n-th cyclotomic polynomial over
/// GF(q), by iterated gcds with x^(q^k) - x. Independent of the
/// order-computation route.
fn ddf_shape(n: u64, ctx: &FieldCtx) -> Vec<(usize, usize)> {
    let mut f = cyclotomic(n, ctx);
    let x = UniPoly::x(ctx);
    let mut xq = x.divrem(&f).unwrap().1;
    let mut shape = Vec::new();
    let mut k = 0usize;
    while f.degree().is_some_and(|d| d > 0) {
        k += 1;
        xq = xq.pow_mod(ctx.q(), &f);
        let g = xq.sub(&x).gcd(&f);
        if let Some(dg) = g.degree() {
            if dg > 0 {
                shape.push((k, dg / k));
                f = f.divrem(&g).unwrap().0;
                xq = xq.divrem(&f).unwrap().1;
            }
        }
    }
    shape
}

fn naive_order(g: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    for d in 1.. {
        acc = acc * g % n;
        if acc == 1 {
            return d;
        }
    }
    unreachable!()
}

pub fn criterion6() -> Vec<ReportRow> {
    let mut rows = Vec::new();

    // cyclotomic identity: phi_{p^m} * (x^(p^(m-1)) - 1) = x^(p^m) - 1
    let mut violations = Vec::new();
    let mut cases = 0usize;
    for ctx_p in [2u64, 3] {
        let ctx = gfp(ctx_p);
        for p in [2u64, 3, 5, 7] {
            if p == ctx_p {
                continue;
            }
            for m in 1..=3u32 {
                cases += 1;
                let phi = loewy_core::poly::cyclotomic_prime_power(p, m, &ctx).unwrap();
                let lower = p.pow(m - 1) as usize;
                let mut left = UniPoly::monomial(&ctx, lower, ctx.one());
                left.set_coeff(0, ctx.neg(ctx.one()));
                let mut right = UniPoly::monomial(&ctx, p.pow(m) as usize, ctx.one());
                right.set_coeff(0, ctx.neg(ctx.one()));
                if phi.mul(&left) != right {
                    violations.push(format!("p={} m={} over GF({})", p, m, ctx_p));
                }
            }
        }
    }
    rows.push(violations_row(
        "c6-cyclotomic-identity",
        &format!("{} (p, m, field) triples", cases),
        &violations,
    ));

    // factor pattern vs distinct-degree gcd counting
    let mut violations = Vec::new();
    let mut cases = 0usize;
    for q in [2u64, 3, 5] {
        let ctx = gfp(q);
        for n in 1..=50u64 {
            if gf::gcd(q, n) != 1 {
                continue;
            }
            cases += 1;
            let (d, count) = cyclotomic_factor_pattern(n, q).unwrap();
            let shape = ddf_shape(n, &ctx);
            if shape != vec![(d as usize, count as usize)] {
                violations.push(format!("n={} q={}: {:?} vs ({}, {})", n, q, shape, d, count));
            }
        }
    }
    rows.push(violations_row(
        "c6-cyclotomic-factor-pattern",
        &format!("{} (n, q) pairs, n <= 50, q in {{2, 3, 5}}", cases),
        &violations,
    ));

    // primes with primitive root 2, against the frozen list and the naive oracle
    let computed = gf::primes_with_primitive_root_two(100);
    let oracle: Vec<u64> = (3..=100u64)
        .filter(|&p| gf::is_prime(p) && p % 2 == 1 && naive_order(2, p) == p - 1)
        .collect();
    let both = computed == PRIMES_WITH_ROOT_TWO_100.to_vec() && computed == oracle;
    rows.push(ReportRow::new(
        "c6-primes-with-root-two",
        "limit 100, cross-checked against direct order iteration",
        &format!("{:?}", PRIMES_WITH_ROOT_TWO_100.to_vec()),
        &if both { format!("{:?}", computed) } else { format!("{:?} (oracle {:?})", computed, oracle) },
    ));

    // three-way lifting equivalence for primitive roots mod prime powers
    let mut violations = Vec::new();
    let mut cases = 0usize;
    for p in (3..=50u64).filter(|&p| gf::is_prime(p)) {
        for g in 2..=20u64 {
            if gf::gcd(g, p) != 1 {
                continue;
            }
            cases += 1;
            let p2 = p * p;
            let mut pow = 1u64;
            for _ in 0..p - 1 {
                pow = pow * g % p2;
            }
            let lhs = gf::is_primitive_root(g, p).unwrap() && pow != 1;
            let mid = gf::is_primitive_root(g, p2).unwrap();
            let mut ok = lhs == mid;
            for i in [2u32, 3, 4] {
                ok &= gf::is_primitive_root(g, p.pow(i)).unwrap() == mid;
            }
            if !ok {
                violations.push(format!("p={} g={}", p, g));
            }
        }
    }
    rows.push(violations_row(
        "c6-primitive-root-lifting",
        &format!("{} (p, g) pairs, p <= 50, g <= 20", cases),
        &violations,
    ));

    rows
}

// ---------------------------------------------------------------------------
// criterion 7: property suites
// ---------------------------------------------------------------------------

fn random_poly(rng: &mut ChaCha8Rng, ctx: &FieldCtx, lo: usize, hi: usize) -> BiPoly {
    loop {
        let mut f = BiPoly::zero(ctx);
        for d in lo..=hi {
            for (i, j) in loewy_core::poly::monomials_of_degree(d) {
                let c = rng.gen_range(0..ctx.q());
                f.set_coeff(i, j, FieldElem::from_packed(c));
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn criterion7() -> Vec<ReportRow> {
    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);

    // 200 randomized truncation-stability and monotonicity instances
    let mut stab_violations = Vec::new();
    let mut mono_violations = Vec::new();
    for i in 0..200 {
        let p = if i % 2 == 0 { 2 } else { 3 };
        let ctx = gfp(p);
        let f = random_poly(&mut rng, &ctx, 1, 4);
        let z = random_poly(&mut rng, &ctx, 1, 3);
        let g = rng.gen_range(1..=7usize);
        let ring = HypersurfaceRing::new(f).unwrap();
        let a = ring.contains_power_with_truncation(&z, g, g + 1).unwrap();
        let b = ring.contains_power_with_truncation(&z, g, g + 2).unwrap();
        if a != b {
            stab_violations.push(format!("instance {}", i));
        }
        if a && !ring.contains_power_in_principal(&z, g + 1).unwrap() {
            mono_violations.push(format!("instance {}", i));
        }
    }
    rows.push(violations_row(
        "c7-truncation-stability",
        "200 randomized (f, z, g) over GF(2) and GF(3), e <= 4, g <= 7",
        &stab_violations,
    ));
    rows.push(violations_row(
        "c7-monotonicity",
        "the same 200 randomized instances",
        &mono_violations,
    ));

    // invariants of every witness found by the exhaustive searches
    let mut violations = Vec::new();
    let f2 = gfp(2);
    let f3 = gfp(3);
    let f5 = gfp(5);
    let x2 = BiPoly::var_x(&f2).pow(2);
    let x2_plus_y3 = BiPoly::var_x(&f2).pow(2).add(&BiPoly::var_y(&f2).pow(3));
    let cubic_plus_tail = xy_power_equation(&f2, 1).add(&BiPoly::var_y(&f2).pow(4));
    let searches: Vec<(BiPoly, usize)> = vec![
        (xy_power_equation(&f2, 1), 4),
        (x2, 2),
        (x2_plus_y3, 3),
        (cubic_plus_tail, 4),
        (xy_power_equation(&f3, 3), 5),
        (xy_power_equation(&f5, 3), 5),
    ];
    let mut searched = 0usize;
    for (f, max_g) in searches {
        let label = f.to_string();
        let ring = HypersurfaceRing::new(f.clone()).unwrap();
        let e = ring.index();
        let res = match ring.gll_exact(&GllSearchOptions::independent(max_g)) {
            Ok(r) => r,
            Err(err) => {
                violations.push(format!("{}: search error {}", label, err));
                continue;
            }
        };
        searched += 1;
        let Some(g) = res.value() else {
            violations.push(format!("{}: no witness up to {}", label, max_g));
            continue;
        };
        let z = res.witness.clone().expect("exact result carries a witness");
        let ord = z.order().unwrap();
        // witness order bound
        if ord > g - e + 1 {
            violations.push(format!("{}: witness order {} above {}", label, ord, g - e + 1));
        }
        // regular witnesses realize g = ord + e - 1 exactly
        if let Ok((t, true)) = ring.is_gr_regular(&z) {
            if g != t + e - 1 {
                violations.push(format!("{}: regular witness of order {} at g = {}", label, t, g));
            }
        }
        // when every linear form is a zerodivisor and e >= 2, the value
        // exceeds the index
        let zd = loewy_core::poly::linear_zerodivisor_forms(&f).unwrap();
        if e >= 2 && zd.len() as u64 == ring.ctx().q() + 1 && g <= e {
            violations.push(format!("{}: no linear parameter but gll = index", label));
        }
        // the bound chain for the smallest regular form of degree t:
        // index <= gll <= index + t - 1
        if let Some((t, _)) = ring.gll_bounds(3).regular_form {
            if g < e || g > e + t - 1 {
                violations.push(format!("{}: gll {} outside [{}, {}]", label, g, e, e + t - 1));
            }
        }
    }
    rows.push(violations_row(
        "c7-search-invariants",
        &format!("{} exhaustive searches", searched),
        &violations,
    ));

    // principal containment on the family instances with at least two
    // generators in the target power
    let mut violations = Vec::new();
    let mut cases = 0usize;
    let mut principal_targets: Vec<(BiPoly, BiPoly)> = Vec::new();
    let quad2 = {
        let x = BiPoly::var_x(&f2);
        let y = BiPoly::var_y(&f2);
        x.pow(2).add(&x.mul(&y)).add(&y.pow(2))
    };
    principal_targets.push((xy_power_equation(&f2, 1), quad2.clone()));
    for (p, e) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
        let ctx = if e == 1 { gfp(p) } else { FieldCtx::extension_field(p, e).unwrap() };
        let f = loewy_core::hyper::product_of_linears_equation(&ctx);
        let quad = first_irreducible(&ctx, 2).homogenize(2).unwrap();
        principal_targets.push((f, quad));
    }
    for (p, n) in [(3u64, 0u32), (3, 1), (5, 0), (5, 1), (7, 0), (7, 1)] {
        let ctx = gfp(p);
        let witness = BiPoly::var_x(&ctx).add(&BiPoly::var_y(&ctx).scalar_mul(ctx.from_int(2)));
        principal_targets.push((xy_power_equation(&ctx, (p as usize).pow(n)), witness));
    }
    for &(p, m, n) in &PROP312_INSTANCES {
        let exponent = 2usize.pow(n) * (p as usize).pow(m);
        principal_targets.push((xy_power_equation(&f2, exponent), quad2.clone()));
    }
    for (f, witness) in principal_targets {
        let label = f.to_string();
        let ring = HypersurfaceRing::new(f).unwrap();
        let (t, _) = match ring.is_gr_regular(&witness) {
            Ok(v) => v,
            Err(e) => {
                violations.push(format!("{}: {}", label, e));
                continue;
            }
        };
        let target = ring.index() + t - 1;
        if ring.graded_piece_dim(target) < 2 {
            continue;
        }
        cases += 1;
        match ring.regular_form_containment(&witness) {
            Ok(true) => {}
            Ok(false) => violations.push(format!("{}: containment fails", label)),
            Err(e) => violations.push(format!("{}: {}", label, e)),
        }
    }
    rows.push(violations_row(
        "c7-principal-containment",
        &format!("{} family instances with non-principal target power", cases),
        &violations,
    ));

    // every homogeneous cubic and quartic over GF(2) and GF(3) realizes
    // gll = witness degree + e - 1
    let mut violations = Vec::new();
    let mut cases = 0usize;
    for p in [2u64, 3] {
        let ctx = gfp(p);
        for e in [3usize, 4] {
            for f in normalized_forms(&ctx, e) {
                cases += 1;
                match gll_graded_hypersurface(&f, 3) {
                    Ok(res) => {
                        if res.gll != res.witness_degree + e - 1 {
                            violations.push(format!(
                                "{} over GF({}): gll {} at degree {}",
                                f, p, res.gll, res.witness_degree
                            ));
                        }
                    }
                    Err(err) => violations.push(format!("{} over GF({}): {}", f, p, err)),
                }
            }
        }
    }
    rows.push(violations_row(
        "c7-graded-witness-degree",
        &format!("{} homogeneous cubics and quartics over GF(2) and GF(3)", cases),
        &violations,
    ));

    rows
}

/// Every verification row, optionally filtered by a substring of the case id.
pub fn run_all(only: Option<&str>) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    rows.extend(criterion1());
    rows.extend(criterion2());
    rows.extend(criterion3());
    rows.extend(criterion4());
    rows.extend(criterion5());
    rows.extend(criterion6());
    rows.extend(criterion7());
    if let Some(tag) = only {
        rows.retain(|r| r.case.contains(tag));
    }
    rows
}
