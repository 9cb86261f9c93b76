//! The J-weight of a bundle degeneration vanishes to order two in j.

use fibstab::arith::{fmt_q, int};
use fibstab::invariants::j_weight_expansion;
use fibstab::models::{all_subsum_degenerations, make_projectivised_fibration, make_weighted_degeneration, SplitBundle};

fn main() -> fibstab::Result<()> {
    let e = SplitBundle::over_product(&[1, 1], &[vec![0, 0], vec![1, -1], vec![0, 2]])?;
    let l = e.base().class(&[("h1", 1), ("h2", 1)])?;
    let x = make_projectivised_fibration(&e, &l)?;
    let n = x.n as i64;
    let mut ds = all_subsum_degenerations(&x)?;
    ds.push(make_weighted_degeneration(&x, &[2, 0, 1])?);
    for d in &ds {
        for (tname, t) in [("L", l.clone()), ("2L", l.scale(&int(2)))] {
            let jw = j_weight_expansion(d, &t)?;
            println!(
                "weights {:?}, T = {tname:2}: j^{n} {}  j^{} {}  j^{} {}",
                d.weights.as_ref().unwrap(),
                fmt_q(&jw.coeff(n)),
                n - 1,
                fmt_q(&jw.coeff(n - 1)),
                n - 2,
                fmt_q(&jw.coeff(n - 2))
            );
        }
    }
    Ok(())
}
