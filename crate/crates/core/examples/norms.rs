//! Minimum and L-infinity norms of test configurations and fibration
//! degenerations.

use fibstab::arith::fmt_q;
use fibstab::invariants::{linf_norm, min_norm_dh, min_norm_fibration, min_norm_fibration_leading, min_norm_tc};
use fibstab::models::{
    make_normal_cone_degeneration, make_projectivised_fibration, make_subsheaf_degeneration,
    make_weighted_degeneration, point_normal_cone_tc, product_tc, trivial_tc, SplitBundle,
};
use fibstab::oracle::{fit_h_and_w, GridSpec};

fn main() -> fibstab::Result<()> {
    println!("trivial:                 {}", fmt_q(&min_norm_tc(&trivial_tc(1, 1)?)?));
    println!("point normal cone (2,1): {}", fmt_q(&min_norm_tc(&point_normal_cone_tc(2, 1)?)?));
    println!("point normal cone (3,2): {}", fmt_q(&min_norm_tc(&point_normal_cone_tc(3, 2)?)?));
    println!("product (1,0):           {}", fmt_q(&min_norm_dh(&product_tc(&[1, 0], 1)?)?));
    println!("product (5,4):           {}", fmt_q(&min_norm_dh(&product_tc(&[5, 4], 1)?)?));

    let e = SplitBundle::over_product(&[1], &[vec![0], vec![0], vec![0]])?;
    let x = make_projectivised_fibration(&e, &e.base().generator("h")?)?;
    let grid = GridSpec::default();
    for f in [vec![0], vec![0, 1]] {
        let twisted = make_subsheaf_degeneration(&x, &f)?;
        let blowup = make_normal_cone_degeneration(&x, &f)?;
        let n = linf_norm(&twisted, &fit_h_and_w(&twisted, &grid)?)?;
        println!(
            "F = {f:?}: fibre norm {}, blowup leading norm {}, c0 = {}, c1 = {}, r = {}",
            fmt_q(&min_norm_fibration(&twisted)?),
            fmt_q(&min_norm_fibration_leading(&blowup)?),
            fmt_q(&n.c0),
            fmt_q(&n.c1),
            fmt_q(&n.r_bar)
        );
    }
    for w in [[0, 0, 0], [3, 3, 3], [1, 0, 0], [4, 3, 3]] {
        let d = make_weighted_degeneration(&x, &w)?;
        let n = linf_norm(&d, &fit_h_and_w(&d, &grid)?)?;
        println!("weights {w:?}: c0 = {}, minimum norm {}", fmt_q(&n.c0), fmt_q(&min_norm_fibration(&d)?));
    }
    Ok(())
}
