//! Randomized parse/print round trip: printing any polynomial and reparsing
//! it over the same field reproduces the polynomial exactly, including
//! extension fields where coefficients render through the generator.

use proptest::prelude::*;

use loewy_cli::expr::parse_poly;
use loewy_core::gf::{FieldCtx, FieldElem};
use loewy_core::poly::BiPoly;

fn build_poly(ctx: &FieldCtx, coeffs: &[u64]) -> BiPoly {
    let mut f = BiPoly::zero(ctx);
    let mut idx = 0;
    for d in 0..=5usize {
        for j in 0..=d {
            if idx < coeffs.len() {
                f.set_coeff(d - j, j, FieldElem::from_packed(coeffs[idx] % ctx.q()));
            }
            idx += 1;
        }
    }
    f
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(
        which in 0usize..3,
        coeffs in proptest::collection::vec(0u64..5, 21),
    ) {
        let ctx = match which {
            0 => FieldCtx::prime_field(2).unwrap(),
            1 => FieldCtx::prime_field(5).unwrap(),
            _ => FieldCtx::extension_field(2, 2).unwrap(),
        };
        let f = build_poly(&ctx, &coeffs);
        let text = f.to_string();
        let parsed = parse_poly(&text, &ctx).unwrap();
        prop_assert_eq!(parsed, f, "round trip through `{}`", text);
    }
}
