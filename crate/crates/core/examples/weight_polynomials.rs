//! Fitted h(j,k) and w(j,k) for the sub-direct-sum degenerations of a rank-3
//! bundle, checked against the Riemann-Roch count on the total space.

use fibstab::arith::fmt_q;
use fibstab::models::{all_subsum_degenerations, make_projectivised_fibration, SplitBundle};
use fibstab::oracle::{euler_route_available, fit_h_and_w, reconcile_weights, weight_spectrum, GridSpec};

fn main() -> fibstab::Result<()> {
    let e = SplitBundle::over_product(&[1], &[vec![1], vec![0], vec![-1]])?;
    let x = make_projectivised_fibration(&e, &e.base().generator("h")?)?;
    let grid = GridSpec::default();
    for d in all_subsum_degenerations(&x)? {
        let fp = fit_h_and_w(&d, &grid)?;
        println!("F = {:?}, weights {:?}", d.subsheaf.as_ref().unwrap(), d.weights.as_ref().unwrap());
        println!("  h = {}", fp.h);
        println!("  w = {}", fp.w);
        println!("  degrees: h ({:?}, {:?})  w ({:?}, {:?})", fp.h.degree_j(), fp.h.degree_k(), fp.w.degree_j(), fp.w.degree_k());
        if euler_route_available(&d) {
            reconcile_weights(&d, &fp.points)?;
            println!("  Euler characteristic route agrees on {} grid points", fp.points.len());
        }
        let s = weight_spectrum(&d, 2, 2)?;
        println!(
            "  at (j,k) = (2,2): {} sections, total weight {}, weights in [{:?}, {:?}]",
            s.total_multiplicity(),
            s.total_weight(),
            s.min_weight(),
            s.max_weight()
        );
        println!("  w(2,2) = {}", fmt_q(&fp.w.eval_int(2, 2)));
    }
    Ok(())
}
