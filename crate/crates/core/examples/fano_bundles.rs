//! Relatively anticanonical polarisations: the specialised W0 and W1 formulas
//! against the general expansion.

use fibstab::arith::fmt_q;
use fibstab::invariants::{df_fibration_expansion, fano_invariants};
use fibstab::models::{all_subsum_degenerations, make_anticanonical_fibration, make_projectivised_fibration, SplitBundle};

fn main() -> fibstab::Result<()> {
    for degrees in [vec![0, -1], vec![0, 1, -1], vec![2, 0, 0]] {
        let rows: Vec<Vec<i64>> = degrees.iter().map(|&d| vec![d]).collect();
        let e = SplitBundle::over_product(&[1], &rows)?;
        let x = make_anticanonical_fibration(&e, &e.base().generator("h")?)?;
        println!("E = {degrees:?}, H = -K_(X/B)");
        for d in all_subsum_degenerations(&x)? {
            let f = fano_invariants(&d)?;
            let ex = df_fibration_expansion(&d)?;
            println!(
                "  F = {:?}: gamma = {}, W0 = {} ({}), W1 = {} ({})",
                d.subsheaf.as_ref().unwrap(),
                fmt_q(&f.gamma),
                fmt_q(&f.w0_fano),
                fmt_q(&ex.w0),
                fmt_q(&f.w1_fano),
                fmt_q(&ex.w1)
            );
        }
    }
    let e = SplitBundle::over_product(&[1], &[vec![0], vec![-1]])?;
    let x = make_projectivised_fibration(&e, &e.base().generator("h")?)?;
    let d = &all_subsum_degenerations(&x)?[0];
    println!("with H = xi: {}", fano_invariants(d).unwrap_err());
    Ok(())
}
