//! Donaldson-Futaki invariant of a few test configurations, once from
//! intersection numbers on the compactified total space and once from the
//! fitted Hilbert and weight polynomials.

use fibstab::arith::fmt_q;
use fibstab::invariants::{df_intersection, df_normalisation, df_weights};
use fibstab::models::{
    make_fibre_test_configuration, make_projectivised_fibration, make_weighted_degeneration,
    point_normal_cone_tc, product_tc, trivial_tc, SplitBundle, TestConfiguration,
};
use fibstab::oracle::fit_tc;

fn report(name: &str, tc: &TestConfiguration) -> fibstab::Result<()> {
    let (h, w) = fit_tc(tc, 24)?;
    let by_weights = df_weights(&h, &w)? * df_normalisation(tc.q());
    let by_intersection = df_intersection(tc)?;
    println!(
        "{name:32} DF = {:>5}  from weights {:>5}  agree: {}",
        fmt_q(&by_intersection),
        fmt_q(&by_weights),
        by_weights == by_intersection
    );
    Ok(())
}

fn main() -> fibstab::Result<()> {
    report("trivial (P^1, O(1))", &trivial_tc(1, 1)?)?;
    report("product (1,0) on (P^1, O(1))", &product_tc(&[1, 0], 1)?)?;
    report("product (2,1,0) on (P^2, O(1))", &product_tc(&[2, 1, 0], 1)?)?;
    report("normal cone of a point, (P^1, O(2))", &point_normal_cone_tc(2, 1)?)?;
    report("normal cone of a point, (P^1, O(3))", &point_normal_cone_tc(3, 1)?)?;

    let e = SplitBundle::over_product(&[1], &[vec![0], vec![-1], vec![1]])?;
    let x = make_projectivised_fibration(&e, &e.base().generator("h")?)?;
    for w in [[1, 0, 0], [2, 1, 0], [0, 2, 1]] {
        let tc = make_fibre_test_configuration(&make_weighted_degeneration(&x, &w)?)?;
        report(&format!("fibre of weights {w:?}"), &tc)?;
    }
    Ok(())
}
