//! The Hirzebruch surface P(O + O(-1)) over (P^1, O(1)) is destabilised by
//! the degeneration to O + O(-1) with O in weight one.

use fibstab::arith::fmt_q;
use fibstab::invariants::{classify, Summary};
use fibstab::models::{all_subsum_degenerations, make_projectivised_fibration, SplitBundle};

fn main() -> fibstab::Result<()> {
    let e = SplitBundle::over_product(&[1], &[vec![0], vec![-1]])?;
    let x = make_projectivised_fibration(&e, &e.base().generator("h")?)?;
    let ds = all_subsum_degenerations(&x)?;
    let report = classify(&x, &ds, None)?;
    println!("mu(E) = {}", fmt_q(&report.bundle_slope));
    for r in &report.records {
        let e = &r.expansion;
        println!("{}: W0 = {}, W1 = {}, verdict {}", r.label, fmt_q(&e.w0), fmt_q(&e.w1), r.verdict.as_str());
        for (p, c) in &e.lower_terms {
            println!("    j^{p}: {}", fmt_q(c));
        }
    }
    match &report.summary {
        Summary::Unstable { certificate } => println!("unstable: {certificate}"),
        Summary::NotDestabilized => println!("no destabiliser found"),
    }

    let e = SplitBundle::over_product(&[1], &[vec![3], vec![3]])?;
    let x = make_projectivised_fibration(&e, &e.base().generator("h")?)?;
    let report = classify(&x, &all_subsum_degenerations(&x)?, None)?;
    println!("\nP(O(3) + O(3)): {}", report.summary.as_str());
    Ok(())
}
